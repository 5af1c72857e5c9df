//! Gaussian elimination and what it buys: rank, determinants, inverses,
//! classification of linear systems and small symmetric eigenproblems.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector, EPS_ZERO};

/// Below this magnitude a column entry does not qualify as a pivot.
pub const PIVOT_EPS: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
    /// `det(input) = det_factor · det(matrix)` for square inputs.
    pub det_factor: f64,
}

/// Reduced row-echelon form by Gauss-Jordan elimination with partial
/// pivoting (largest magnitude, ties to the smallest row index).
pub fn rref(m: &Matrix) -> Rref {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut det_factor = 1.0;
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let mut best = r;
        for i in r + 1..rows {
            if a.get(i, c).abs() > a.get(best, c).abs() {
                best = i;
            }
        }
        if a.get(best, c).abs() <= PIVOT_EPS {
            for i in r..rows {
                a.set(i, c, 0.0);
            }
            continue;
        }
        if best != r {
            swap_rows(&mut a, best, r);
            det_factor = -det_factor;
        }
        let p = a.get(r, c);
        det_factor *= p;
        for j in 0..cols {
            a.set(r, j, a.get(r, j) / p);
        }
        a.set(r, c, 1.0);
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = a.get(i, c);
            if f == 0.0 {
                continue;
            }
            for j in 0..cols {
                a.set(i, j, a.get(i, j) - f * a.get(r, j));
            }
            a.set(i, c, 0.0);
        }
        pivot_cols.push(c);
        r += 1;
    }
    Rref {
        matrix: a,
        rank: r,
        pivot_cols,
        det_factor,
    }
}

fn swap_rows(a: &mut Matrix, i: usize, k: usize) {
    for j in 0..a.cols() {
        let t = a.get(i, j);
        a.set(i, j, a.get(k, j));
        a.set(k, j, t);
    }
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).rank
}

#[derive(Debug, Clone, PartialEq)]
pub struct LinearSystem {
    a: Matrix,
    b: Vector,
}

impl LinearSystem {
    pub fn new(a: Matrix, b: Vector) -> Result<Self> {
        if a.rows() != b.dim() {
            return Err(Error::dims(format!(
                "{} equations but image vector of dimension {}",
                a.rows(),
                b.dim()
            )));
        }
        Ok(LinearSystem { a, b })
    }

    pub fn coefficients(&self) -> &Matrix {
        &self.a
    }

    pub fn image(&self) -> &Vector {
        &self.b
    }

    pub fn augmented(&self) -> Matrix {
        let n = self.a.cols();
        let mut data = Vec::with_capacity(self.a.rows() * (n + 1));
        for i in 0..self.a.rows() {
            data.extend_from_slice(self.a.row(i));
            data.push(self.b.get(i));
        }
        Matrix::new(self.a.rows(), n + 1, data).expect("augmented format")
    }

    /// Whether `x` satisfies every equation within `tol·(1 + |b|)`.
    pub fn is_solution(&self, x: &[f64], tol: f64) -> bool {
        let Ok(xv) = Vector::new(x.to_vec()) else {
            return false;
        };
        let Ok(ax) = self.a.mul_vec(&xv) else {
            return false;
        };
        let scale = 1.0 + self.b.norm();
        ax.entries()
            .iter()
            .zip(self.b.entries())
            .all(|(l, r)| (l - r).abs() <= tol * scale)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SolutionKind {
    None,
    Unique,
    Multiple,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionSet {
    pub kind: SolutionKind,
    pub particular: Option<Vec<f64>>,
    pub free_directions: Vec<Vec<f64>>,
    #[serde(rename = "rank_A")]
    pub rank_a: usize,
    #[serde(rename = "rank_Ab")]
    pub rank_ab: usize,
}

impl SolutionSet {
    /// `particular + Σ tₖ·free_directions[k]`.
    pub fn point(&self, params: &[f64]) -> Option<Vec<f64>> {
        let mut x = self.particular.clone()?;
        for (t, dir) in params.iter().zip(&self.free_directions) {
            for (xi, di) in x.iter_mut().zip(dir) {
                *xi += t * di;
            }
        }
        Some(x)
    }
}

/// Classifies `A·x = b` by comparing rank(A) with rank(A|b).
pub fn solve(sys: &LinearSystem) -> SolutionSet {
    let n = sys.a.cols();
    let red = rref(&sys.augmented());
    let rank_ab = red.rank;
    let rank_a = red.pivot_cols.iter().filter(|&&c| c < n).count();
    if rank_a != rank_ab {
        return SolutionSet {
            kind: SolutionKind::None,
            particular: None,
            free_directions: Vec::new(),
            rank_a,
            rank_ab,
        };
    }
    let r = &red.matrix;
    let mut particular = vec![0.0; n];
    for (row, &c) in red.pivot_cols.iter().enumerate() {
        particular[c] = r.get(row, n);
    }
    let free: Vec<usize> = (0..n).filter(|c| !red.pivot_cols.contains(c)).collect();
    let free_directions = free
        .iter()
        .map(|&f| {
            let mut d = vec![0.0; n];
            d[f] = 1.0;
            for (row, &c) in red.pivot_cols.iter().enumerate() {
                d[c] = -r.get(row, f);
            }
            d
        })
        .collect::<Vec<_>>();
    let kind = if free.is_empty() {
        SolutionKind::Unique
    } else {
        SolutionKind::Multiple
    };
    SolutionSet {
        kind,
        particular: Some(particular),
        free_directions,
        rank_a,
        rank_ab,
    }
}

/// Closed forms up to 3×3, elimination product beyond.
pub fn determinant(a: &Matrix) -> Result<f64> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let g = |i, j| a.get(i, j);
    Ok(match a.rows() {
        1 => g(0, 0),
        2 => g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0),
        3 => {
            g(0, 0) * g(1, 1) * g(2, 2) + g(0, 1) * g(1, 2) * g(2, 0) + g(0, 2) * g(1, 0) * g(2, 1)
                - g(0, 2) * g(1, 1) * g(2, 0)
                - g(0, 0) * g(1, 2) * g(2, 1)
                - g(0, 1) * g(1, 0) * g(2, 2)
        }
        _ => {
            let red = rref(a);
            if red.rank < a.rows() {
                0.0
            } else {
                red.det_factor
            }
        }
    })
}

pub fn is_singular(a: &Matrix) -> Result<bool> {
    Ok(determinant(a)?.abs() <= EPS_ZERO)
}

/// Inverse by simultaneous elimination on `A·X = 𝟏`.
pub fn inverse(a: &Matrix) -> Result<Matrix> {
    let det = determinant(a)?;
    if det.abs() <= EPS_ZERO {
        return Err(Error::Singular { det: det.abs() });
    }
    let n = a.rows();
    let mut data = Vec::with_capacity(2 * n * n);
    for i in 0..n {
        data.extend_from_slice(a.row(i));
        data.extend((0..n).map(|j| if i == j { 1.0 } else { 0.0 }));
    }
    let red = rref(&Matrix::new(n, 2 * n, data)?);
    if red.pivot_cols.iter().filter(|&&c| c < n).count() < n {
        return Err(Error::Singular { det: det.abs() });
    }
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        out.extend_from_slice(&red.matrix.row(i)[n..]);
    }
    Matrix::new(n, n, out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenPair {
    pub value: f64,
    pub vector: Vector,
}

/// Eigenvalues (ascending, repeated by multiplicity) and unit eigenvectors
/// of a real symmetric matrix of order 1, 2 or 3.
pub fn eigen_sym(a: &Matrix) -> Result<Vec<EigenPair>> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if a.rows() > 3 {
        return Err(Error::Unsupported(format!(
            "symmetric eigenproblems of order {} (at most 3)",
            a.rows()
        )));
    }
    if !a.is_symmetric(EPS_ZERO) {
        return Err(Error::NotSymmetric);
    }
    match a.rows() {
        1 => Ok(vec![EigenPair {
            value: a.get(0, 0),
            vector: Vector::new(vec![1.0])?,
        }]),
        2 => eigen2(a),
        _ => eigen3(a),
    }
}

fn eigen2(a: &Matrix) -> Result<Vec<EigenPair>> {
    let (p, b, d) = (a.get(0, 0), a.get(0, 1), a.get(1, 1));
    // λ² − (p+d)λ + (pd − b²) = 0 has discriminant ((p−d)/2)² + b² ≥ 0
    let mid = 0.5 * (p + d);
    let rad = (0.25 * (p - d) * (p - d) + b * b).sqrt();
    let (l1, l2) = (mid - rad, mid + rad);
    if b.abs() <= EPS_ZERO * (1.0 + p.abs() + d.abs()) {
        let (e_small, e_large) = if p <= d { (0, 1) } else { (1, 0) };
        return Ok(vec![
            EigenPair {
                value: p.min(d),
                vector: Vector::unit(2, e_small)?,
            },
            EigenPair {
                value: p.max(d),
                vector: Vector::unit(2, e_large)?,
            },
        ]);
    }
    [l1, l2]
        .into_iter()
        .map(|l| {
            // first row of (A − λ𝟏) is (p−λ, b); (b, λ−p) spans its null space
            let v = Vector::new(vec![b, l - p])?.normalized()?;
            Ok(EigenPair { value: l, vector: v })
        })
        .collect()
}

fn eigen3(a: &Matrix) -> Result<Vec<EigenPair>> {
    let g = |i, j| a.get(i, j);
    let off = g(0, 1).powi(2) + g(0, 2).powi(2) + g(1, 2).powi(2);
    let tr = g(0, 0) + g(1, 1) + g(2, 2);
    let q = tr / 3.0;
    let spread = (g(0, 0) - q).powi(2) + (g(1, 1) - q).powi(2) + (g(2, 2) - q).powi(2) + 2.0 * off;
    let scale = 1.0 + a.data().iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if spread.sqrt() <= EPS_ZERO * scale {
        return (0..3)
            .map(|k| {
                Ok(EigenPair {
                    value: q,
                    vector: Vector::unit(3, k)?,
                })
            })
            .collect();
    }
    // Trigonometric form of the cubic: B = (A − q𝟏)/s, r = det(B)/2
    let s = (spread / 6.0).sqrt();
    let mut bm = a.clone();
    for i in 0..3 {
        bm.set(i, i, g(i, i) - q);
    }
    let r = (determinant(&bm.scale(1.0 / s))? / 2.0).clamp(-1.0, 1.0);
    let phi = r.acos() / 3.0;
    let largest = q + 2.0 * s * phi.cos();
    let smallest = q + 2.0 * s * (phi + 2.0 * std::f64::consts::PI / 3.0).cos();
    let middle = 3.0 * q - largest - smallest;
    let mut values = [smallest, middle, largest].map(|l| newton_polish(a, l));
    values.sort_by(f64::total_cmp);

    let tol = 1e-7 * scale;
    let d01 = (values[1] - values[0]).abs() <= tol;
    let d12 = (values[2] - values[1]).abs() <= tol;
    if d01 && d12 {
        let mean = values.iter().sum::<f64>() / 3.0;
        return (0..3)
            .map(|k| {
                Ok(EigenPair {
                    value: mean,
                    vector: Vector::unit(3, k)?,
                })
            })
            .collect();
    }
    if d01 || d12 {
        // one double eigenvalue: its eigenspace is the orthogonal complement
        // of the simple eigenvector
        let (simple_idx, double) = if d01 { (2, [0, 1]) } else { (0, [1, 2]) };
        let simple = null_vector3(a, values[simple_idx]);
        let (u, w) = complement_basis(&simple);
        let mut pairs = vec![
            EigenPair {
                value: values[simple_idx],
                vector: Vector::new(simple.to_vec())?,
            },
            EigenPair {
                value: values[double[0]],
                vector: Vector::new(u.to_vec())?,
            },
            EigenPair {
                value: values[double[1]],
                vector: Vector::new(w.to_vec())?,
            },
        ];
        pairs.sort_by(|x, y| x.value.total_cmp(&y.value));
        return Ok(pairs);
    }
    values
        .iter()
        .map(|&l| {
            Ok(EigenPair {
                value: l,
                vector: Vector::new(null_vector3(a, l).to_vec())?,
            })
        })
        .collect()
}

/// One Newton step on the characteristic polynomial `det(A − λ𝟏)`.
fn newton_polish(a: &Matrix, l: f64) -> f64 {
    let g = |i, j| a.get(i, j);
    let tr = g(0, 0) + g(1, 1) + g(2, 2);
    let minors = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0) + g(0, 0) * g(2, 2) - g(0, 2) * g(2, 0)
        + g(1, 1) * g(2, 2)
        - g(1, 2) * g(2, 1);
    let det = determinant(a).unwrap_or(0.0);
    // p(λ) = −λ³ + tr·λ² − minors·λ + det
    let p = -l * l * l + tr * l * l - minors * l + det;
    let dp = -3.0 * l * l + 2.0 * tr * l - minors;
    if dp.abs() <= 1e-12 * (1.0 + tr.abs()) {
        return l;
    }
    let step = l - p / dp;
    if step.is_finite() {
        step
    } else {
        l
    }
}

/// Unit vector spanning the null space of `A − λ𝟏` for a simple eigenvalue,
/// taken as the longest cross product of two rows.
fn null_vector3(a: &Matrix, l: f64) -> [f64; 3] {
    let row = |i: usize| {
        let mut r = [a.get(i, 0), a.get(i, 1), a.get(i, 2)];
        r[i] -= l;
        r
    };
    let rows = [row(0), row(1), row(2)];
    let candidates = [
        cross(&rows[0], &rows[1]),
        cross(&rows[0], &rows[2]),
        cross(&rows[1], &rows[2]),
    ];
    let best = candidates
        .iter()
        .max_by(|x, y| norm3(x).total_cmp(&norm3(y)))
        .copied()
        .unwrap_or([1.0, 0.0, 0.0]);
    let n = norm3(&best);
    if n == 0.0 {
        return [1.0, 0.0, 0.0];
    }
    best.map(|c| c / n)
}

fn complement_basis(v: &[f64; 3]) -> ([f64; 3], [f64; 3]) {
    // pick the canonical axis least aligned with v, Gram-Schmidt it
    let k = (0..3)
        .min_by(|&i, &j| v[i].abs().total_cmp(&v[j].abs()))
        .unwrap_or(0);
    let mut e = [0.0; 3];
    e[k] = 1.0;
    let proj = e[0] * v[0] + e[1] * v[1] + e[2] * v[2];
    let mut u = [e[0] - proj * v[0], e[1] - proj * v[1], e[2] - proj * v[2]];
    let n = norm3(&u);
    u = u.map(|c| c / n);
    let w = cross(v, &u);
    (u, w)
}

fn cross(a: &[f64; 3], b: &[f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn norm3(a: &[f64; 3]) -> f64 {
    (a[0] * a[0] + a[1] * a[1] + a[2] * a[2]).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[f64]]) -> Matrix {
        Matrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn sys(rows: &[&[f64]], b: &[f64]) -> LinearSystem {
        LinearSystem::new(m(rows), Vector::new(b.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn rref_examples() {
        let id = Matrix::identity(3).unwrap();
        let r = rref(&id);
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank, 3);
        assert_eq!(r.pivot_cols, vec![0, 1, 2]);

        assert_eq!(rank(&m(&[&[1.0, 2.0], &[2.0, 4.0]])), 1);

        let swap = rref(&m(&[&[0.0, 1.0], &[1.0, 0.0]]));
        assert_eq!(swap.matrix, Matrix::identity(2).unwrap());
        assert_eq!(swap.rank, 2);
        assert_eq!(swap.det_factor, -1.0);
    }

    #[test]
    fn rref_ignores_rounding_noise_below_threshold() {
        let r = rref(&m(&[&[1.0, 1.0], &[1.0, 1.0 + 1e-12]]));
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn solve_examples() {
        let unique = solve(&sys(&[&[1.0, 1.0], &[1.0, -1.0]], &[3.0, 1.0]));
        assert_eq!(unique.kind, SolutionKind::Unique);
        let x = unique.particular.unwrap();
        assert!((x[0] - 2.0).abs() < 1e-12 && (x[1] - 1.0).abs() < 1e-12);

        let none = solve(&sys(&[&[1.0, 1.0], &[1.0, 1.0]], &[1.0, 2.0]));
        assert_eq!(none.kind, SolutionKind::None);
        assert_eq!((none.rank_a, none.rank_ab), (1, 2));
        assert!(none.particular.is_none());

        let multi = solve(&sys(&[&[1.0, 1.0]], &[0.0]));
        assert_eq!(multi.kind, SolutionKind::Multiple);
        assert_eq!(multi.free_directions, vec![vec![-1.0, 1.0]]);
    }

    #[test]
    fn free_directions_count_matches_rank_deficit() {
        let s = sys(&[&[1.0, 2.0, 3.0], &[2.0, 4.0, 6.0]], &[1.0, 2.0]);
        let sol = solve(&s);
        assert_eq!(sol.kind, SolutionKind::Multiple);
        assert_eq!(sol.free_directions.len(), 3 - sol.rank_a);
        for params in [[0.0, 0.0], [1.5, -2.0], [-3.0, 7.0]] {
            assert!(s.is_solution(&sol.point(&params).unwrap(), 1e-9));
        }
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(determinant(&m(&[&[1.0, 2.0], &[3.0, 4.0]])).unwrap(), -2.0);
        assert_eq!(determinant(&Matrix::identity(3).unwrap()).unwrap(), 1.0);
        let d = determinant(&m(&[&[1.0, 2.0, 3.0], &[4.0, 5.0, 6.0], &[7.0, 8.0, 10.0]])).unwrap();
        assert!((d + 3.0).abs() < 1e-12);
        assert!(matches!(
            determinant(&m(&[&[1.0, 2.0]])),
            Err(Error::NotSquare { rows: 1, cols: 2 })
        ));
    }

    #[test]
    fn determinant_by_elimination_matches_cofactor_expansion() {
        let a = m(&[
            &[2.0, -1.0, 0.0, 3.0],
            &[1.0, 4.0, 2.0, -2.0],
            &[0.0, 5.0, 1.0, 1.0],
            &[3.0, 0.0, -1.0, 2.0],
        ]);
        // Laplace expansion along the first row, with 3x3 closed forms
        let mut expected = 0.0;
        for j in 0..4 {
            let minor: Vec<Vec<f64>> = (1..4)
                .map(|i| (0..4).filter(|&c| c != j).map(|c| a.get(i, c)).collect())
                .collect();
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            expected += sign * a.get(0, j) * determinant(&Matrix::from_rows(&minor).unwrap()).unwrap();
        }
        assert!((determinant(&a).unwrap() - expected).abs() < 1e-9);
    }

    #[test]
    fn inverse_examples() {
        let id = Matrix::identity(2).unwrap();
        assert_eq!(inverse(&id).unwrap(), id);
        assert_eq!(
            inverse(&m(&[&[2.0, 0.0], &[0.0, 4.0]])).unwrap(),
            m(&[&[0.5, 0.0], &[0.0, 0.25]])
        );
        let a = m(&[&[1.0, 1.0], &[0.0, 1.0]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(inv, m(&[&[1.0, -1.0], &[0.0, 1.0]]));
        assert!(a.mul(&inv).unwrap().approx_eq(&id, 1e-12));
    }

    #[test]
    fn inverse_of_singular_reports_det() {
        match inverse(&m(&[&[1.0, 2.0], &[2.0, 4.0]])) {
            Err(Error::Singular { det }) => assert!(det <= 1e-9),
            other => panic!("expected singular, got {other:?}"),
        }
    }

    fn values(pairs: &[EigenPair]) -> Vec<f64> {
        pairs.iter().map(|p| p.value).collect()
    }

    fn assert_eigenpairs(a: &Matrix, pairs: &[EigenPair]) {
        for p in pairs {
            let av = a.mul_vec(&p.vector).unwrap();
            for (x, y) in av.entries().iter().zip(p.vector.entries()) {
                assert!((x - p.value * y).abs() < 1e-7, "A v != λ v for λ={}", p.value);
            }
            assert!((p.vector.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn eigen_examples() {
        let diag = m(&[&[2.0, 0.0], &[0.0, 3.0]]);
        let e = eigen_sym(&diag).unwrap();
        assert_eq!(values(&e), vec![2.0, 3.0]);
        assert_eigenpairs(&diag, &e);

        let a = m(&[&[2.0, 1.0], &[1.0, 2.0]]);
        let e = eigen_sym(&a).unwrap();
        assert!((e[0].value - 1.0).abs() < 1e-12 && (e[1].value - 3.0).abs() < 1e-12);
        assert_eigenpairs(&a, &e);
        assert!(e[0].vector.inner(&e[1].vector).unwrap().abs() < 1e-12);

        let id = Matrix::identity(3).unwrap();
        let e = eigen_sym(&id).unwrap();
        assert_eq!(values(&e), vec![1.0, 1.0, 1.0]);
        assert_eigenpairs(&id, &e);
    }

    #[test]
    fn eigen_three_by_three_cases() {
        let distinct = m(&[&[2.0, -1.0, 0.0], &[-1.0, 2.0, -1.0], &[0.0, -1.0, 2.0]]);
        let e = eigen_sym(&distinct).unwrap();
        let s2 = 2f64.sqrt();
        for (got, want) in values(&e).iter().zip([2.0 - s2, 2.0, 2.0 + s2]) {
            assert!((got - want).abs() < 1e-10);
        }
        assert_eigenpairs(&distinct, &e);
        for i in 0..3 {
            for j in 0..i {
                assert!(e[i].vector.inner(&e[j].vector).unwrap().abs() < 1e-7);
            }
        }

        // eigenvalues 1, 1, 4
        let double = m(&[&[2.0, 1.0, 1.0], &[1.0, 2.0, 1.0], &[1.0, 1.0, 2.0]]);
        let e = eigen_sym(&double).unwrap();
        for (got, want) in values(&e).iter().zip([1.0, 1.0, 4.0]) {
            assert!((got - want).abs() < 1e-10);
        }
        assert_eigenpairs(&double, &e);
    }

    #[test]
    fn eigen_rejects_bad_input() {
        assert_eq!(
            eigen_sym(&m(&[&[1.0, 2.0], &[0.0, 1.0]])),
            Err(Error::NotSymmetric)
        );
        assert!(matches!(
            eigen_sym(&Matrix::identity(4).unwrap()),
            Err(Error::Unsupported(_))
        ));
    }
}
