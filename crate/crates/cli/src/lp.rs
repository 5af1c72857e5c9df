use std::path::PathBuf;

use clap::Subcommand;
use econkit::simplex::{solve_simplex_traced, vertex_oracle, LinearProgram, LpSolution, LpStatus};
use econkit::Result;
use serde_json::json;

use crate::read_file;
use crate::render::{list, num, opt, Format, Report, Table};
use crate::Ctx;

#[derive(Subcommand)]
pub enum LpCmd {
    /// Solve with the simplex method (two-variable problems outside the
    /// tableau method's reach fall back to vertex enumeration)
    Solve { problem: PathBuf },
    /// Graphical method: feasible vertices and the optimal ones
    Graph { problem: PathBuf },
}

fn load(path: &PathBuf) -> Result<LinearProgram> {
    LinearProgram::from_json(&read_file(path)?)
}

fn status_exit(s: LpStatus) -> u8 {
    if s == LpStatus::Optimal {
        0
    } else {
        2
    }
}

fn solution_table(lp: &LinearProgram, s: &LpSolution, method: &str) -> Table {
    let mut t = Table::new().row("status", format!("{:?}", s.status)).row("method", method);
    for (j, x) in s.x.iter().enumerate() {
        let name = lp.names().map_or_else(|| format!("x{}", j + 1), |n| n[j].clone());
        t = t.row(name, num(*x));
    }
    t = t.row("z", opt(s.z));
    if !s.slacks.is_empty() {
        t = t.row("slacks", list(&s.slacks));
    }
    t.row("iterations", s.iterations.to_string())
}

pub fn run(cmd: &LpCmd, ctx: &Ctx) -> Result<Report> {
    match cmd {
        LpCmd::Solve { problem } => {
            let lp = load(problem)?;
            let (mut s, trace) = solve_simplex_traced(&lp)?;
            let mut method = "simplex";
            if s.status == LpStatus::Unsupported && lp.variables() == 2 {
                s = vertex_oracle(&lp)?.solution;
                method = "vertex enumeration";
            }
            let mut text = String::new();
            let mut json = json!({
                "status": s.status,
                "x": s.x,
                "z": s.z,
                "slacks": s.slacks,
                "iterations": s.iterations,
            });
            if ctx.trace {
                if ctx.format == Format::Table {
                    for t in &trace {
                        text.push_str(&t.to_text());
                        text.push('\n');
                    }
                } else {
                    json["trace"] = json!(trace.iter().map(|t| t.grid().to_vec()).collect::<Vec<_>>());
                }
            }
            text.push_str(&solution_table(&lp, &s, method).finish());
            Ok(Report::new(text, json).with_exit(status_exit(s.status)))
        }
        LpCmd::Graph { problem } => {
            let lp = load(problem)?;
            let g = vertex_oracle(&lp)?;
            let pts = |v: &[[f64; 2]]| {
                if v.is_empty() {
                    return "none".to_string();
                }
                v.iter()
                    .map(|p| format!("({}, {})", num(p[0]), num(p[1])))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            let text = solution_table(&lp, &g.solution, "vertex enumeration")
                .row("vertices", pts(&g.vertices))
                .row("optimal vertices", pts(&g.optimal_vertices))
                .row("isoquant slope", opt(g.isoquant_slope))
                .finish();
            let json = serde_json::to_value(&g).expect("plain data");
            Ok(Report::new(text, json).with_exit(status_exit(g.solution.status)))
        }
    }
}
