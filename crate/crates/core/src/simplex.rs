//! Standard-form linear programs solved with Dantzig's tableau method, plus
//! a vertex-enumeration oracle for two-variable problems.
//!
//! A maximum problem reads `max cᵀx + d` subject to `Ax ≤ b`, `x ≥ 0`; a
//! minimum problem reads `min cᵀx + d` subject to `Ax ≥ b`, `x ≥ 0`. Only
//! forms whose canonical right-hand side is non-negative are solved, since
//! no phase-one procedure is provided.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Pivot entries at or below this size are treated as zero.
pub const PIVOT_EPS: f64 = 1e-9;
/// Reduced costs at or above `-OPTIMALITY_EPS` count as non-negative.
pub const OPTIMALITY_EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sense {
    Max,
    Min,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawProgram", into = "RawProgram")]
pub struct LinearProgram {
    sense: Sense,
    c: Vec<f64>,
    d: f64,
    a: Vec<Vec<f64>>,
    b: Vec<f64>,
    names: Option<Vec<String>>,
}

/// Wire layout of the LP JSON document.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct RawProgram {
    sense: Sense,
    c: Vec<f64>,
    #[serde(default)]
    d: f64,
    #[serde(rename = "A", default)]
    a: Vec<Vec<f64>>,
    #[serde(default)]
    b: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
}

impl TryFrom<RawProgram> for LinearProgram {
    type Error = Error;

    fn try_from(raw: RawProgram) -> Result<Self> {
        let lp = LinearProgram::new(raw.sense, raw.c, raw.d, raw.a, raw.b)?;
        match raw.names {
            Some(names) => lp.with_names(names),
            None => Ok(lp),
        }
    }
}

impl From<LinearProgram> for RawProgram {
    fn from(lp: LinearProgram) -> Self {
        RawProgram {
            sense: lp.sense,
            c: lp.c,
            d: lp.d,
            a: lp.a,
            b: lp.b,
            names: lp.names,
        }
    }
}

impl LinearProgram {
    pub fn new(sense: Sense, c: Vec<f64>, d: f64, a: Vec<Vec<f64>>, b: Vec<f64>) -> Result<Self> {
        if c.is_empty() {
            return Err(Error::Empty("objective needs at least one variable"));
        }
        if a.len() != b.len() {
            return Err(Error::dims(format!(
                "{} restriction rows but {} capacities",
                a.len(),
                b.len()
            )));
        }
        if let Some(i) = a.iter().position(|row| row.len() != c.len()) {
            return Err(Error::dims(format!(
                "restriction {} has {} coefficients, expected {}",
                i + 1,
                a[i].len(),
                c.len()
            )));
        }
        let finite = c.iter().chain(&b).chain(a.iter().flatten()).all(|v| v.is_finite());
        if !finite || !d.is_finite() {
            return Err(Error::invalid("coefficients must be finite"));
        }
        Ok(LinearProgram {
            sense,
            c,
            d,
            a,
            b,
            names: None,
        })
    }

    pub fn maximize(c: Vec<f64>, a: Vec<Vec<f64>>, b: Vec<f64>) -> Result<Self> {
        Self::new(Sense::Max, c, 0.0, a, b)
    }

    pub fn with_offset(mut self, d: f64) -> Self {
        self.d = d;
        self
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.c.len() {
            return Err(Error::dims("one name per variable required"));
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::invalid(format!("LP JSON: {e}")))
    }

    pub fn sense(&self) -> Sense {
        self.sense
    }

    pub fn objective(&self) -> &[f64] {
        &self.c
    }

    pub fn offset(&self) -> f64 {
        self.d
    }

    pub fn restrictions(&self) -> &[Vec<f64>] {
        &self.a
    }

    pub fn capacities(&self) -> &[f64] {
        &self.b
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn variables(&self) -> usize {
        self.c.len()
    }

    pub fn restriction_count(&self) -> usize {
        self.a.len()
    }

    pub fn value(&self, x: &[f64]) -> f64 {
        self.d + self.c.iter().zip(x).map(|(c, x)| c * x).sum::<f64>()
    }

    pub fn row_activity(&self, x: &[f64]) -> Vec<f64> {
        self.a
            .iter()
            .map(|row| row.iter().zip(x).map(|(a, x)| a * x).sum())
            .collect()
    }
}

/// `min z` ⇔ `max −z`; the `≥` restrictions flip to `≤` by sign change.
/// Maximum problems are returned unchanged.
pub fn negate_to_max(lp: &LinearProgram) -> LinearProgram {
    match lp.sense {
        Sense::Max => lp.clone(),
        Sense::Min => LinearProgram {
            sense: Sense::Max,
            c: lp.c.iter().map(|v| -v).collect(),
            d: -lp.d,
            a: lp.a.iter().map(|row| row.iter().map(|v| -v).collect()).collect(),
            b: lp.b.iter().map(|v| -v).collect(),
            names: lp.names.clone(),
        },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BasisVar {
    Z,
    X(usize),
    S(usize),
}

impl fmt::Display for BasisVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisVar::Z => write!(f, "z"),
            BasisVar::X(j) => write!(f, "x{}", j + 1),
            BasisVar::S(i) => write!(f, "s{}", i + 1),
        }
    }
}

/// `(1+m) × (1+n+m+1)` tableau: z column, x columns, slack columns, RHS.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimplexTableau {
    n: usize,
    m: usize,
    grid: Vec<Vec<f64>>,
    basis: Vec<BasisVar>,
    iteration: usize,
}

impl SimplexTableau {
    pub fn grid(&self) -> &[Vec<f64>] {
        &self.grid
    }

    pub fn basis(&self) -> &[BasisVar] {
        &self.basis
    }

    pub fn iteration(&self) -> usize {
        self.iteration
    }

    pub fn rhs_col(&self) -> usize {
        1 + self.n + self.m
    }

    pub fn column_var(&self, col: usize) -> Option<BasisVar> {
        match col {
            0 => Some(BasisVar::Z),
            c if c <= self.n => Some(BasisVar::X(c - 1)),
            c if c <= self.n + self.m => Some(BasisVar::S(c - 1 - self.n)),
            _ => None,
        }
    }

    /// Current objective value (row 0 RHS).
    pub fn z(&self) -> f64 {
        self.grid[0][self.rhs_col()]
    }

    /// Basis solution: non-basis variables at zero, basis variables read off
    /// the RHS of the row holding their unit entry.
    pub fn basis_solution(&self) -> (Vec<f64>, Vec<f64>) {
        let rhs = self.rhs_col();
        let mut x = vec![0.0; self.n];
        let mut s = vec![0.0; self.m];
        for (row, var) in self.basis.iter().enumerate().rev() {
            let v = self.grid[row][rhs];
            match var {
                BasisVar::X(j) => x[*j] = v,
                BasisVar::S(i) => s[*i] = v,
                BasisVar::Z => {}
            }
        }
        (x, s)
    }

    /// Pivot on `grid[row][col]`; `row ∈ 1..=m`, `col ∈ 1..=n+m`.
    pub fn pivot(&self, row: usize, col: usize) -> Result<SimplexTableau> {
        if row == 0 || row > self.m || col == 0 || col > self.n + self.m {
            return Err(Error::invalid(format!("pivot position ({row}, {col}) outside the tableau body")));
        }
        let p = self.grid[row][col];
        if p <= PIVOT_EPS {
            return Err(Error::invalid(format!("pivot entry {p} is not positive")));
        }
        let mut grid = self.grid.clone();
        for v in grid[row].iter_mut() {
            *v /= p;
        }
        grid[row][col] = 1.0;
        let pivot_row = grid[row].clone();
        for (i, r) in grid.iter_mut().enumerate() {
            if i == row {
                continue;
            }
            let f = r[col];
            if f == 0.0 {
                continue;
            }
            for (v, pv) in r.iter_mut().zip(&pivot_row) {
                *v -= f * pv;
            }
            r[col] = 0.0;
        }
        let mut basis = self.basis.clone();
        basis[row] = self.column_var(col).expect("checked column");
        Ok(SimplexTableau {
            n: self.n,
            m: self.m,
            grid,
            basis,
            iteration: self.iteration + 1,
        })
    }

    /// Most negative reduced cost, smallest column index on ties.
    fn entering_column(&self) -> Option<usize> {
        let mut best: Option<(usize, f64)> = None;
        for col in 1..=self.n + self.m {
            let v = self.grid[0][col];
            if v < -OPTIMALITY_EPS && best.is_none_or(|(_, b)| v < b) {
                best = Some((col, v));
            }
        }
        best.map(|(c, _)| c)
    }

    /// Smallest ratio `b_i / a_ij` over positive entries, smallest
    /// row index on ties. `None` means the column is unbounded.
    fn leaving_row(&self, col: usize) -> Option<usize> {
        let rhs = self.rhs_col();
        let mut best: Option<(usize, f64)> = None;
        for row in 1..=self.m {
            let a = self.grid[row][col];
            if a > PIVOT_EPS {
                let ratio = self.grid[row][rhs] / a;
                if best.is_none_or(|(_, b)| ratio < b) {
                    best = Some((row, ratio));
                }
            }
        }
        best.map(|(r, _)| r)
    }

    pub fn is_optimal(&self) -> bool {
        self.entering_column().is_none()
    }

    /// Rows in the shared matrix text format, preceded by a header comment.
    pub fn to_text(&self) -> String {
        let mut header = vec!["z".to_string()];
        header.extend((0..self.n).map(|j| format!("x{}", j + 1)));
        header.extend((0..self.m).map(|i| format!("s{}", i + 1)));
        header.push("RHS".into());
        let basis: Vec<String> = self.basis.iter().map(ToString::to_string).collect();
        let mut out = format!(
            "# iteration {} basis {}\n# {}\n",
            self.iteration,
            basis.join(","),
            header.join(",")
        );
        for row in &self.grid {
            out.push_str(&crate::text::format_row(row));
            out.push('\n');
        }
        out
    }
}

/// Transcribes a maximum problem with `b ≥ 0` into its initial tableau.
pub fn canonicalize(lp: &LinearProgram) -> Result<SimplexTableau> {
    if lp.sense == Sense::Min {
        return Err(Error::Unsupported(
            "minimum problems must be negated to maximum form first".into(),
        ));
    }
    if let Some(i) = lp.b.iter().position(|&v| v < 0.0) {
        return Err(Error::Unsupported(format!(
            "capacity b{} = {} is negative; a phase-one method would be required",
            i + 1,
            lp.b[i]
        )));
    }
    let (n, m) = (lp.variables(), lp.restriction_count());
    let width = 1 + n + m + 1;
    let mut grid = Vec::with_capacity(1 + m);
    let mut top = vec![0.0; width];
    top[0] = 1.0;
    for (j, c) in lp.c.iter().enumerate() {
        top[1 + j] = -c;
    }
    top[width - 1] = lp.d;
    grid.push(top);
    for i in 0..m {
        let mut row = vec![0.0; width];
        row[1..=n].copy_from_slice(&lp.a[i]);
        row[1 + n + i] = 1.0;
        row[width - 1] = lp.b[i];
        grid.push(row);
    }
    let mut basis = vec![BasisVar::Z];
    basis.extend((0..m).map(BasisVar::S));
    Ok(SimplexTableau {
        n,
        m,
        grid,
        basis,
        iteration: 0,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LpStatus {
    Optimal,
    Unbounded,
    Infeasible,
    Unsupported,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LpSolution {
    pub status: LpStatus,
    /// Decision variables; the last basis solution when unbounded, empty
    /// when infeasible or unsupported.
    pub x: Vec<f64>,
    /// Objective value in the sense of the original program.
    pub z: Option<f64>,
    /// `b − Ax` for maximum problems, `Ax − b` for minimum problems.
    pub slacks: Vec<f64>,
    pub iterations: usize,
}

impl LpSolution {
    fn without_point(status: LpStatus) -> Self {
        LpSolution {
            status,
            x: Vec::new(),
            z: None,
            slacks: Vec::new(),
            iterations: 0,
        }
    }
}

pub fn iteration_cap(lp: &LinearProgram) -> usize {
    10 * (lp.variables() + lp.restriction_count()) + 100
}

pub fn solve_simplex(lp: &LinearProgram) -> Result<LpSolution> {
    run_simplex(lp, false).map(|(s, _)| s)
}

/// Like [`solve_simplex`], also returning every tableau from the initial
/// one to the last.
pub fn solve_simplex_traced(lp: &LinearProgram) -> Result<(LpSolution, Vec<SimplexTableau>)> {
    run_simplex(lp, true)
}

fn run_simplex(lp: &LinearProgram, keep_trace: bool) -> Result<(LpSolution, Vec<SimplexTableau>)> {
    let max_form = negate_to_max(lp);
    let mut tableau = match canonicalize(&max_form) {
        Ok(t) => t,
        Err(Error::Unsupported(_)) => {
            return Ok((LpSolution::without_point(LpStatus::Unsupported), Vec::new()))
        }
        Err(e) => return Err(e),
    };
    let cap = iteration_cap(lp);
    let mut trace = Vec::new();
    let status = loop {
        if keep_trace {
            trace.push(tableau.clone());
        }
        let Some(col) = tableau.entering_column() else {
            break LpStatus::Optimal;
        };
        let Some(row) = tableau.leaving_row(col) else {
            break LpStatus::Unbounded;
        };
        if tableau.iteration >= cap {
            return Err(Error::IterationLimit { limit: cap });
        }
        tableau = tableau.pivot(row, col)?;
    };
    let (x, slacks) = tableau.basis_solution();
    let z_max = tableau.z();
    let z = match lp.sense {
        Sense::Max => z_max,
        Sense::Min => -z_max,
    };
    Ok((
        LpSolution {
            status,
            x,
            z: Some(z),
            slacks,
            iterations: tableau.iteration,
        },
        trace,
    ))
}

/// Result of the graphical method for two variables.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphicalSolution {
    pub solution: LpSolution,
    /// Vertices of the feasible region, lexicographically ordered.
    pub vertices: Vec<[f64; 2]>,
    /// All vertices attaining the optimum; two entries mean an optimal edge.
    pub optimal_vertices: Vec<[f64; 2]>,
    /// Slope `−c₁/c₂` of the isoquant through the origin; `None` when
    /// `c₂ = 0` (vertical isoquants).
    pub isoquant_slope: Option<f64>,
}

/// Enumerates the feasible region's vertices and evaluates the objective
/// on each of them. Independent of the tableau code; accepts any sign of `b`.
pub fn vertex_oracle(lp: &LinearProgram) -> Result<GraphicalSolution> {
    if lp.variables() != 2 {
        return Err(Error::Unsupported(format!(
            "the graphical method needs exactly 2 variables, got {}",
            lp.variables()
        )));
    }
    let isoquant_slope = (lp.c[1] != 0.0).then(|| -lp.c[0] / lp.c[1]);
    let max_form = negate_to_max(lp);
    // every boundary line as (a1, a2, rhs): the two axes and each restriction
    let mut lines: Vec<[f64; 3]> = vec![[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]];
    lines.extend(max_form.a.iter().zip(&max_form.b).map(|(r, &b)| [r[0], r[1], b]));

    let feasible = |p: [f64; 2]| {
        p[0] >= -1e-9
            && p[1] >= -1e-9
            && max_form
                .a
                .iter()
                .zip(&max_form.b)
                .all(|(r, &b)| r[0] * p[0] + r[1] * p[1] <= b + 1e-9 * (1.0 + b.abs()))
    };

    let mut vertices: Vec<[f64; 2]> = Vec::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let [a1, a2, b1] = lines[i];
            let [c1, c2, b2] = lines[j];
            let det = a1 * c2 - a2 * c1;
            if det.abs() <= 1e-12 {
                continue;
            }
            let p = [(b1 * c2 - a2 * b2) / det, (a1 * b2 - b1 * c1) / det];
            let p = p.map(|v| if v.abs() < 1e-12 { 0.0 } else { v });
            if feasible(p) && !vertices.iter().any(|q| (q[0] - p[0]).abs() <= 1e-9 && (q[1] - p[1]).abs() <= 1e-9) {
                vertices.push(p);
            }
        }
    }
    vertices.sort_by(|p, q| p[0].total_cmp(&q[0]).then(p[1].total_cmp(&q[1])));

    if vertices.is_empty() {
        return Ok(GraphicalSolution {
            solution: LpSolution::without_point(LpStatus::Infeasible),
            vertices,
            optimal_vertices: Vec::new(),
            isoquant_slope,
        });
    }

    // Unbounded iff some extreme ray of the recession cone {r ≥ 0, A r ≤ 0}
    // improves the objective. In the plane these rays lie on the axes or
    // on the restriction lines through the origin.
    let mut rays: Vec<[f64; 2]> = vec![[1.0, 0.0], [0.0, 1.0]];
    for r in &max_form.a {
        let len = (r[0] * r[0] + r[1] * r[1]).sqrt();
        if len > 0.0 {
            rays.push([-r[1] / len, r[0] / len]);
            rays.push([r[1] / len, -r[0] / len]);
        }
    }
    let in_cone = |d: &[f64; 2]| {
        d[0] >= -1e-12 && d[1] >= -1e-12 && max_form.a.iter().all(|r| r[0] * d[0] + r[1] * d[1] <= 1e-12)
    };
    let improving = rays
        .iter()
        .any(|d| in_cone(d) && max_form.c[0] * d[0] + max_form.c[1] * d[1] > 1e-9);

    let values: Vec<f64> = vertices.iter().map(|p| max_form.value(p)).collect();
    let best = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let optimal_vertices: Vec<[f64; 2]> = vertices
        .iter()
        .zip(&values)
        .filter(|(_, &v)| v >= best - 1e-9 * (1.0 + best.abs()))
        .map(|(p, _)| *p)
        .collect();

    let status = if improving { LpStatus::Unbounded } else { LpStatus::Optimal };
    let x = optimal_vertices[0].to_vec();
    let activity = lp.row_activity(&x);
    let slacks = match lp.sense {
        Sense::Max => lp.b.iter().zip(&activity).map(|(b, ax)| b - ax).collect(),
        Sense::Min => lp.b.iter().zip(&activity).map(|(b, ax)| ax - b).collect(),
    };
    let z = (status == LpStatus::Optimal).then(|| lp.value(&x));
    Ok(GraphicalSolution {
        solution: LpSolution {
            status,
            x,
            z,
            slacks,
            iterations: 0,
        },
        vertices,
        optimal_vertices,
        isoquant_slope,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn worked() -> LinearProgram {
        LinearProgram::maximize(vec![3.0, 2.0], vec![vec![1.0, 1.0], vec![1.0, 0.0]], vec![4.0, 2.0]).unwrap()
    }

    #[test]
    fn canonicalize_worked_example() {
        let t = canonicalize(&worked()).unwrap();
        assert_eq!(t.grid()[0], vec![1.0, -3.0, -2.0, 0.0, 0.0, 0.0]);
        assert_eq!(t.grid()[1], vec![0.0, 1.0, 1.0, 1.0, 0.0, 4.0]);
        assert_eq!(t.grid()[2], vec![0.0, 1.0, 0.0, 0.0, 1.0, 2.0]);
        assert_eq!(t.basis(), &[BasisVar::Z, BasisVar::S(0), BasisVar::S(1)]);
        let (x, s) = t.basis_solution();
        assert_eq!((t.z(), x, s), (0.0, vec![0.0, 0.0], vec![4.0, 2.0]));
    }

    #[test]
    fn canonicalize_degenerate_and_constant_objective() {
        let lp = LinearProgram::maximize(vec![1.0], vec![vec![1.0]], vec![0.0]).unwrap();
        let t = canonicalize(&lp).unwrap();
        assert_eq!((t.z(), t.basis_solution().1), (0.0, vec![0.0]));

        let lp = LinearProgram::maximize(vec![0.0, 0.0], vec![vec![1.0, 1.0]], vec![3.0])
            .unwrap()
            .with_offset(5.0);
        let t = canonicalize(&lp).unwrap();
        assert!(t.is_optimal());
        assert_eq!(t.z(), 5.0);
    }

    #[test]
    fn canonicalize_rejects_min_and_negative_capacity() {
        let min = LinearProgram::new(Sense::Min, vec![1.0], 0.0, vec![], vec![]).unwrap();
        assert!(matches!(canonicalize(&min), Err(Error::Unsupported(_))));
        let neg = LinearProgram::maximize(vec![1.0], vec![vec![1.0]], vec![-1.0]).unwrap();
        assert!(matches!(canonicalize(&neg), Err(Error::Unsupported(_))));
    }

    #[test]
    fn negate_to_max_examples() {
        // min −x₁ s.t. x₁ ≤ 2, written as −x₁ ≥ −2
        let lp = LinearProgram::new(Sense::Min, vec![-1.0], 0.0, vec![vec![-1.0]], vec![-2.0]).unwrap();
        let max = negate_to_max(&lp);
        assert_eq!(max.sense(), Sense::Max);
        assert_eq!((max.objective(), max.restrictions(), max.capacities()), (&[1.0][..], &[vec![1.0]][..], &[2.0][..]));
        let sol = solve_simplex(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_eq!((sol.x.clone(), sol.z), (vec![2.0], Some(-2.0)));
        assert_eq!(solve_simplex(&max).unwrap().z, Some(2.0));

        let origin = LinearProgram::new(Sense::Min, vec![1.0, 1.0], 0.0, vec![], vec![]).unwrap();
        let sol = solve_simplex(&origin).unwrap();
        assert_eq!((sol.status, sol.x, sol.z), (LpStatus::Optimal, vec![0.0, 0.0], Some(0.0)));

        let covering = LinearProgram::new(Sense::Min, vec![1.0, 1.0], 0.0, vec![vec![1.0, 1.0]], vec![2.0]).unwrap();
        assert_eq!(solve_simplex(&covering).unwrap().status, LpStatus::Unsupported);
    }

    #[test]
    fn pivot_examples() {
        let t = canonicalize(&worked()).unwrap();
        // row of x₁ ≤ 2 is tableau row 2, column of x₁ is 1
        let p = t.pivot(2, 1).unwrap();
        assert_eq!(p.basis()[2], BasisVar::X(0));
        assert_eq!(p.basis_solution().0, vec![2.0, 0.0]);
        assert_eq!(p.z(), 6.0);

        // pivoting on a unit column leaves the numbers alone
        let same = t.pivot(1, 3).unwrap();
        assert_eq!(same.grid(), t.grid());
        assert_eq!(same.basis(), t.basis());

        assert!(matches!(t.pivot(2, 2), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn solve_examples() {
        let sol = solve_simplex(&worked()).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_eq!((sol.x.clone(), sol.z, sol.slacks.clone()), (vec![2.0, 2.0], Some(10.0), vec![0.0, 0.0]));

        let lp = LinearProgram::maximize(vec![1.0, 0.0], vec![vec![1.0, 0.0], vec![0.0, 1.0]], vec![2.0, 1.0]).unwrap();
        let sol = solve_simplex(&lp).unwrap();
        assert_eq!((sol.x, sol.z, sol.slacks), (vec![2.0, 0.0], Some(2.0), vec![0.0, 1.0]));

        let free = LinearProgram::maximize(vec![1.0], vec![], vec![]).unwrap();
        assert_eq!(solve_simplex(&free).unwrap().status, LpStatus::Unbounded);
    }

    #[test]
    fn trace_is_monotone_and_feasible() {
        let lp = LinearProgram::maximize(
            vec![5.0, 4.0, 3.0],
            vec![vec![2.0, 3.0, 1.0], vec![4.0, 1.0, 2.0], vec![3.0, 4.0, 2.0]],
            vec![5.0, 11.0, 8.0],
        )
        .unwrap();
        let (sol, trace) = solve_simplex_traced(&lp).unwrap();
        assert_eq!(sol.status, LpStatus::Optimal);
        assert!((sol.z.unwrap() - 13.0).abs() < 1e-9);
        assert_eq!(trace.len(), sol.iterations + 1);
        for w in trace.windows(2) {
            assert!(w[1].z() >= w[0].z() - 1e-12);
        }
        for t in &trace {
            let rhs = t.rhs_col();
            assert!(t.grid()[1..].iter().all(|r| r[rhs] >= -1e-9));
        }
    }

    #[test]
    fn oracle_examples() {
        let g = vertex_oracle(&worked()).unwrap();
        assert_eq!(g.solution.z, Some(10.0));
        assert_eq!(g.vertices, vec![[0.0, 0.0], [0.0, 4.0], [2.0, 0.0], [2.0, 2.0]]);
        assert_eq!(g.isoquant_slope, Some(-1.5));

        let bad = LinearProgram::maximize(vec![1.0, 1.0], vec![vec![1.0, 0.0]], vec![-1.0]).unwrap();
        let g = vertex_oracle(&bad).unwrap();
        assert_eq!(g.solution.status, LpStatus::Infeasible);
        assert!(g.vertices.is_empty());

        let flat = LinearProgram::maximize(vec![0.0, 0.0], vec![vec![1.0, 1.0]], vec![3.0])
            .unwrap()
            .with_offset(7.0);
        let g = vertex_oracle(&flat).unwrap();
        assert_eq!(g.solution.z, Some(7.0));
        assert_eq!(g.optimal_vertices.len(), g.vertices.len());
    }

    #[test]
    fn oracle_detects_unbounded_and_edges() {
        let open = LinearProgram::maximize(vec![1.0, 1.0], vec![vec![1.0, -1.0]], vec![1.0]).unwrap();
        assert_eq!(vertex_oracle(&open).unwrap().solution.status, LpStatus::Unbounded);
        assert_eq!(solve_simplex(&open).unwrap().status, LpStatus::Unbounded);

        let edge = LinearProgram::maximize(vec![1.0, 1.0], vec![vec![1.0, 1.0]], vec![4.0]).unwrap();
        let g = vertex_oracle(&edge).unwrap();
        assert_eq!(g.optimal_vertices, vec![[0.0, 4.0], [4.0, 0.0]]);
        assert!(vertex_oracle(&LinearProgram::maximize(vec![1.0], vec![], vec![]).unwrap()).is_err());
    }

    #[test]
    fn json_schema_round_trip() {
        let text = r#"{"sense":"max","c":[3,2],"d":0.0,"A":[[1,1],[1,0]],"b":[4,2],"names":["chairs","tables"]}"#;
        let lp = LinearProgram::from_json(text).unwrap();
        assert_eq!(lp.names().unwrap()[1], "tables");
        let again = LinearProgram::from_json(&serde_json::to_string(&lp).unwrap()).unwrap();
        assert_eq!(again, lp);
        assert!(LinearProgram::from_json(r#"{"sense":"max","c":[1],"A":[[1,2]],"b":[1]}"#).is_err());
    }
}
