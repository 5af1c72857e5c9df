use std::path::PathBuf;

use clap::{Args, Subcommand};
use econkit::leontief::{model_from_table, DeliveriesTable, Given};
use econkit::linsolve::{self, LinearSystem, SolutionKind};
use econkit::text::{format_matrix, format_row, parse_matrix, parse_vector};
use econkit::{Matrix, Result, Vector};
use serde_json::{json, Value};

use crate::render::{block, list, num, Report, Table};
use crate::{read_file, write_file};

#[derive(Subcommand)]
pub enum LinalgCmd {
    /// Determinant of a square matrix
    Det { matrix: PathBuf },
    /// Inverse of a square matrix
    Inverse { matrix: PathBuf },
    /// Rank by Gaussian elimination
    Rank { matrix: PathBuf },
    /// Reduced row-echelon form
    Rref { matrix: PathBuf },
    /// Transpose
    Transpose { matrix: PathBuf },
    /// Eigenvalues and unit eigenvectors of a symmetric matrix (n ≤ 3)
    Eigen { matrix: PathBuf },
    /// Matrix product A·B
    Mul { a: PathBuf, b: PathBuf },
    /// Sum A + B
    Add { a: PathBuf, b: PathBuf },
    /// Difference A − B
    Sub { a: PathBuf, b: PathBuf },
    /// Scalar multiple λ·A
    Scale {
        matrix: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        by: f64,
    },
    /// Scalar product, lengths and angle of two vectors
    Dot { a: PathBuf, b: PathBuf },
}

#[derive(Args)]
pub struct SolveArgs {
    /// Coefficient matrix A
    pub matrix: PathBuf,
    /// Right-hand side b, as one row or one column
    pub rhs: PathBuf,
}

#[derive(Args)]
pub struct LeontiefArgs {
    /// Deliveries table n_ij (n×n)
    pub deliveries: PathBuf,
    /// Final demand y of the reference period
    pub demand: PathBuf,
    /// Resource consumption matrix R (m×n)
    #[arg(long, value_name = "PATH")]
    pub resources: Option<PathBuf>,
    /// Final demand of the next period to forecast
    #[arg(long, value_name = "PATH")]
    pub forecast: Option<PathBuf>,
    /// Also write q, y, v, P, 1−P and (1−P)⁻¹ as matrix text files into DIR
    #[arg(long, value_name = "DIR")]
    pub emit_dir: Option<PathBuf>,
}

fn matrix(path: &PathBuf) -> Result<Matrix> {
    parse_matrix(&read_file(path)?)
}

fn vector(path: &PathBuf) -> Result<Vector> {
    parse_vector(&read_file(path)?)
}

pub fn rows(m: &Matrix) -> Value {
    json!(m.to_rows())
}

fn matrix_report(title: &str, m: &Matrix) -> Report {
    let text = format_matrix(m);
    Report::new(block(title, &text), json!({ title: rows(m) })).with_csv(text)
}

pub fn run(cmd: &LinalgCmd) -> Result<Report> {
    Ok(match cmd {
        LinalgCmd::Det { matrix: p } => {
            let d = linsolve::determinant(&matrix(p)?)?;
            Report::new(Table::new().row("det", num(d)).finish(), json!({ "det": d }))
        }
        LinalgCmd::Inverse { matrix: p } => matrix_report("inverse", &linsolve::inverse(&matrix(p)?)?),
        LinalgCmd::Rank { matrix: p } => {
            let r = linsolve::rank(&matrix(p)?);
            Report::new(Table::new().row("rank", r.to_string()).finish(), json!({ "rank": r }))
        }
        LinalgCmd::Rref { matrix: p } => {
            let r = linsolve::rref(&matrix(p)?);
            let text = format_matrix(&r.matrix);
            let pivots: Vec<String> = r.pivot_cols.iter().map(|c| (c + 1).to_string()).collect();
            Report::new(
                format!("{}# rank {}, pivot columns {}\n", block("rref", &text), r.rank, pivots.join(",")),
                json!({ "rref": rows(&r.matrix), "rank": r.rank, "pivot_cols": r.pivot_cols }),
            )
            .with_csv(text)
        }
        LinalgCmd::Transpose { matrix: p } => matrix_report("transpose", &matrix(p)?.transpose()),
        LinalgCmd::Eigen { matrix: p } => {
            let pairs = linsolve::eigen_sym(&matrix(p)?)?;
            let mut t = Table::new();
            for (k, pair) in pairs.iter().enumerate() {
                t = t.row(format!("λ{}", k + 1), num(pair.value));
                t = t.row(format!("v{}", k + 1), format_row(pair.vector.entries()));
            }
            let js: Vec<Value> = pairs
                .iter()
                .map(|p| json!({ "value": p.value, "vector": p.vector.entries() }))
                .collect();
            Report::new(t.finish(), json!({ "eigen": js }))
        }
        LinalgCmd::Mul { a, b } => matrix_report("product", &matrix(a)?.mul(&matrix(b)?)?),
        LinalgCmd::Add { a, b } => matrix_report("sum", &matrix(a)?.add(&matrix(b)?)?),
        LinalgCmd::Sub { a, b } => matrix_report("difference", &matrix(a)?.sub(&matrix(b)?)?),
        LinalgCmd::Scale { matrix: p, by } => matrix_report("scaled", &matrix(p)?.scale(*by)),
        LinalgCmd::Dot { a, b } => {
            let (a, b) = (vector(a)?, vector(b)?);
            let dot = a.inner(&b)?;
            let angle = a.angle(&b)?;
            let t = Table::new()
                .row("a·b", num(dot))
                .row("|a|", num(a.norm()))
                .row("|b|", num(b.norm()))
                .row("angle (rad)", num(angle))
                .row("orthogonal", a.is_orthogonal(&b)?.to_string());
            Report::new(
                t.finish(),
                json!({ "dot": dot, "norm_a": a.norm(), "norm_b": b.norm(), "angle": angle }),
            )
        }
    })
}

pub fn solve(args: &SolveArgs) -> Result<Report> {
    let sys = LinearSystem::new(matrix(&args.matrix)?, vector(&args.rhs)?)?;
    let set = linsolve::solve(&sys);
    let kind = match set.kind {
        SolutionKind::None => "none",
        SolutionKind::Unique => "unique",
        SolutionKind::Multiple => "multiple",
    };
    let mut t = Table::new()
        .row("kind", kind)
        .row("rank A", set.rank_a.to_string())
        .row("rank A|b", set.rank_ab.to_string());
    if let Some(x) = &set.particular {
        t = t.row("particular", list(x));
    }
    for (k, d) in set.free_directions.iter().enumerate() {
        t = t.row(format!("direction t{}", k + 1), list(d));
    }
    let json = serde_json::to_value(&set).expect("plain data");
    let code = if set.kind == SolutionKind::None { 2 } else { 0 };
    Ok(Report::new(t.finish(), json).with_exit(code))
}

pub fn leontief(args: &LeontiefArgs) -> Result<Report> {
    let table = DeliveriesTable::new(matrix(&args.deliveries)?, vector(&args.demand)?)?;
    let tm = model_from_table(&table)?;
    let mut model = tm.model;
    if let Some(r) = &args.resources {
        model = model.with_resources(matrix(r)?)?;
    }
    let p = model.input_output().clone();
    let tech = model.technology_matrix();
    let total = model.total_demand_matrix()?;
    let q = tm.total_output.entries().to_vec();
    let y = tm.final_demand.entries().to_vec();
    let v = match model.resources() {
        Some(_) => Some(model.resource_requirements(&tm.total_output, Given::Output)?),
        None => None,
    };
    let forecast = match &args.forecast {
        Some(path) => Some(model.forecast(&vector(path)?)?),
        None => None,
    };

    let mut text = String::new();
    text.push_str(&block("total output q", &format!("{}\n", format_row(&q))));
    text.push_str(&block("final demand y", &format!("{}\n", format_row(&y))));
    if let Some(v) = &v {
        text.push_str(&block("resources v", &format!("{}\n", format_row(v))));
    }
    text.push_str(&block("input-output matrix P", &format_matrix(&p)));
    text.push_str(&block("technology matrix 1-P", &format_matrix(&tech)));
    text.push_str(&block("total demand matrix (1-P)^-1", &format_matrix(&total)));
    if let Some(f) = &forecast {
        text.push_str(&block("forecast output q", &format!("{}\n", format_row(&f.output.values))));
        if let Some(r) = &f.resources {
            text.push_str(&block("forecast resources v", &format!("{}\n", format_row(r))));
        }
        if f.output.has_warning() {
            text.push_str("# warning: negative forecast output, the demand is infeasible\n");
        }
    }

    if let Some(dir) = &args.emit_dir {
        std::fs::create_dir_all(dir)
            .map_err(|e| econkit::Error::InvalidInput(format!("cannot create {}: {e}", dir.display())))?;
        let row = |v: &[f64]| format!("{}\n", format_row(v));
        write_file(&dir.join("q.txt"), &row(&q))?;
        write_file(&dir.join("y.txt"), &row(&y))?;
        if let Some(v) = &v {
            write_file(&dir.join("v.txt"), &row(v))?;
        }
        write_file(&dir.join("P.txt"), &format_matrix(&p))?;
        write_file(&dir.join("technology.txt"), &format_matrix(&tech))?;
        write_file(&dir.join("total_demand.txt"), &format_matrix(&total))?;
    }

    let json = json!({
        "q": q,
        "y": y,
        "v": v,
        "P": rows(&p),
        "technology": rows(&tech),
        "total_demand": rows(&total),
        "forecast": forecast,
    });
    Ok(Report::new(text, json))
}
