use clap::Subcommand;
use econkit::calculus::{
    antiderivative, curve_report, differentiate, elasticity, integrate, nth_derivative, parse, roots,
    second_elasticity, ElasticityClass, Expr, DEFAULT_TOL,
};
use econkit::Result;
use serde_json::json;

use crate::parse_window;
use crate::render::{list, num, Report, Table};

#[derive(Subcommand)]
pub enum CalcCmd {
    /// Symbolic derivative
    #[command(allow_negative_numbers = true)]
    Diff {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Order of the derivative
        #[arg(long, default_value_t = 1)]
        order: usize,
        /// Also evaluate at this point
        #[arg(long)]
        at: Option<f64>,
    },
    /// Elasticity ε_f(x) = x·f′(x)/f(x) and the second elasticity
    #[command(allow_negative_numbers = true)]
    Elasticity {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        at: f64,
    },
    /// Real roots inside a window
    Roots {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_parser = parse_window, allow_hyphen_values = true, value_name = "LO:HI")]
        window: (f64, f64),
    },
    /// Definite integral, with the primitive when one is known
    #[command(allow_negative_numbers = true)]
    Integrate {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
    },
    /// Curve sketch of a rational function
    Report {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_parser = parse_window, allow_hyphen_values = true, value_name = "LO:HI")]
        window: (f64, f64),
    },
}

fn expr(text: &str) -> Result<Expr> {
    parse(text)
}

pub fn run(cmd: &CalcCmd) -> Result<Report> {
    Ok(match cmd {
        CalcCmd::Diff { expr: text, order, at } => {
            let f = expr(text)?;
            let d = if *order == 1 { differentiate(&f) } else { nth_derivative(&f, *order) };
            let mut t = Table::new().row("f(x)", f.to_string()).row(format!("d^{order}f/dx^{order}"), d.to_string());
            let mut js = json!({ "function": f, "derivative": d, "order": order });
            if let Some(x) = at {
                let v = d.eval(*x)?;
                t = t.row(format!("value at {}", num(*x)), num(v));
                js["at"] = json!(x);
                js["value"] = json!(v);
            }
            Report::new(t.finish(), js)
        }
        CalcCmd::Elasticity { expr: text, at } => {
            let f = expr(text)?;
            let eps = elasticity(&f, *at)?;
            let eps2 = second_elasticity(&f, *at)?;
            let class = ElasticityClass::of(eps);
            let t = Table::new()
                .row("f(x)", f.to_string())
                .row("x", num(*at))
                .row("elasticity", num(eps))
                .row("class", class.label())
                .row("second elasticity", num(eps2));
            Report::new(
                t.finish(),
                json!({ "function": f, "x": at, "elasticity": eps, "class": class.label(), "second_elasticity": eps2 }),
            )
        }
        CalcCmd::Roots { expr: text, window } => {
            let f = expr(text)?;
            let r = roots(&f, window.0, window.1, DEFAULT_TOL)?;
            let t = Table::new().row("f(x)", f.to_string()).row("roots", list(&r));
            Report::new(t.finish(), json!({ "function": f, "window": [window.0, window.1], "roots": r }))
        }
        CalcCmd::Integrate { expr: text, from, to } => {
            let f = expr(text)?;
            let value = integrate(&f, *from, *to)?;
            let primitive = antiderivative(&f);
            let t = Table::new()
                .row("f(x)", f.to_string())
                .row("primitive", primitive.as_ref().map_or_else(|| "none (numeric quadrature)".into(), Expr::to_string))
                .row(format!("integral over [{}, {}]", num(*from), num(*to)), num(value));
            Report::new(
                t.finish(),
                json!({ "function": f, "from": from, "to": to, "primitive": primitive, "value": value }),
            )
        }
        CalcCmd::Report { expr: text, window } => {
            let r = curve_report(&expr(text)?, window.0, window.1)?;
            Report::new(r.to_string(), serde_json::to_value(&r).expect("plain data"))
        }
    })
}
