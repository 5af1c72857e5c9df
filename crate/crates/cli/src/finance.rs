use clap::{ArgGroup, Args, Subcommand};
use econkit::finmath::{
    compound_solve, depreciation, effective_rate, installment_solve, interest_factor, master_formula, pension_plan,
    redemption_plan, Compound, Depreciation, Installment, Repayment, Schedule,
};
use econkit::{Error, Result};
use serde_json::json;

use crate::render::{cu, num, opt, Report, Table};

#[derive(Args)]
#[command(group(ArgGroup::new("rate").args(["p", "q"]).multiple(false)))]
pub struct Rate {
    /// Interest rate in percent
    #[arg(long)]
    p: Option<f64>,
    /// Interest factor q = 1 + p/100
    #[arg(long)]
    q: Option<f64>,
}

impl Rate {
    fn factor(&self) -> Option<f64> {
        self.q.or(self.p.map(interest_factor))
    }
}

#[derive(Subcommand)]
pub enum FinanceCmd {
    /// Compound interest K_n = K_0·q^n; give three of K0, Kn, rate, n
    Compound {
        #[arg(long)]
        k0: Option<f64>,
        #[arg(long)]
        kn: Option<f64>,
        #[command(flatten)]
        rate: Rate,
        #[arg(long)]
        n: Option<f64>,
    },
    /// Effective annual rate of a nominal rate compounded m times a year
    Effective {
        #[arg(long)]
        p_nom: f64,
        #[arg(long)]
        m: u32,
    },
    /// Installment savings; give three of Kn, E, rate, n
    Installment {
        #[arg(long)]
        kn: Option<f64>,
        #[arg(long)]
        e: Option<f64>,
        #[command(flatten)]
        rate: Rate,
        #[arg(long)]
        n: Option<f64>,
    },
    /// Redemption schedule in constant annuities
    #[command(group(ArgGroup::new("repay").args(["t", "annuity"]).required(true)))]
    Redemption {
        #[arg(long)]
        r0: f64,
        #[arg(long)]
        p: f64,
        /// Initial redemption rate in percent
        #[arg(long)]
        t: Option<f64>,
        /// Constant annuity in CU
        #[arg(long)]
        annuity: Option<f64>,
        /// Number of years to tabulate
        #[arg(long)]
        horizon: Option<u32>,
    },
    /// Pension paid out of a capital, m payments a year
    Pension {
        #[arg(long)]
        k0: f64,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        m: u32,
        /// Payment per interval in CU
        #[arg(long)]
        a: f64,
        #[arg(long)]
        horizon: Option<u32>,
    },
    /// Linear or declining-balance depreciation
    #[command(group(ArgGroup::new("method").args(["linear", "declining"]).required(true)))]
    Depreciation {
        #[arg(long)]
        k0: f64,
        /// Useful life N in years
        #[arg(long)]
        linear: Option<u32>,
        /// Yearly percentage of the remaining value
        #[arg(long)]
        declining: Option<f64>,
        /// Years elapsed
        #[arg(long)]
        years: u32,
    },
    /// K_n = K_0·q^n + R(q^n−1)/(q−1)
    Master {
        #[arg(long, allow_negative_numbers = true)]
        k0: f64,
        #[arg(long)]
        q: f64,
        #[arg(long, allow_negative_numbers = true)]
        r: f64,
        #[arg(long)]
        n: u32,
    },
}

/// Aligned schedule with amounts to the cent.
fn schedule_text(s: &Schedule) -> String {
    let cells: Vec<[String; 4]> = s
        .rows
        .iter()
        .map(|r| [r.year.to_string(), cu(r.interest), cu(r.payment), cu(r.balance)])
        .collect();
    let header = ["year", "interest", "payment", "balance"];
    let mut width = header.map(str::len);
    for row in &cells {
        for (w, c) in width.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let line = |cols: [&str; 4]| {
        let padded: Vec<String> = cols.iter().zip(width).map(|(c, w)| format!("{c:>w$}")).collect();
        format!("{}\n", padded.join("  "))
    };
    let mut out = line(header);
    for row in &cells {
        out.push_str(&line([&row[0], &row[1], &row[2], &row[3]]));
    }
    out
}

fn schedule_report(summary: Table, schedule: &Schedule, json: serde_json::Value) -> Report {
    let text = format!("{}\n{}", summary.finish(), schedule_text(schedule));
    Report::new(text, json).with_csv(schedule.to_csv())
}

pub fn run(cmd: &FinanceCmd) -> Result<Report> {
    Ok(match cmd {
        FinanceCmd::Compound { k0, kn, rate, n } => {
            let s = compound_solve(&Compound {
                k0: *k0,
                kn: *kn,
                q: rate.factor(),
                n: *n,
            })?;
            let t = Table::new()
                .row("K0", cu(s.k0))
                .row("Kn", cu(s.kn))
                .row("q", num(s.q))
                .row("p %", num(100.0 * (s.q - 1.0)))
                .row("n", num(s.n));
            Report::new(t.finish(), serde_json::to_value(s).expect("plain data"))
        }
        FinanceCmd::Effective { p_nom, m } => {
            let (q_eff, p_eff) = effective_rate(*p_nom, *m)?;
            let t = Table::new().row("q_eff", num(q_eff)).row("p_eff %", num(p_eff));
            Report::new(t.finish(), json!({ "q_eff": q_eff, "p_eff": p_eff }))
        }
        FinanceCmd::Installment { kn, e, rate, n } => {
            let s = installment_solve(&Installment {
                kn: *kn,
                e: *e,
                q: rate.factor(),
                n: *n,
            })?;
            let t = Table::new()
                .row("Kn", cu(s.kn))
                .row("E", cu(s.e))
                .row("q", num(s.q))
                .row("n", num(s.n))
                .row("B0", cu(s.b0));
            Report::new(t.finish(), serde_json::to_value(s).expect("plain data"))
        }
        FinanceCmd::Redemption {
            r0,
            p,
            t,
            annuity,
            horizon,
        } => {
            let repayment = match (t, annuity) {
                (Some(t), None) => Repayment::Rate(*t),
                (None, Some(a)) => Repayment::Annuity(*a),
                _ => return Err(Error::InvalidInput("give exactly one of --t and --annuity".into())),
            };
            let plan = redemption_plan(*r0, *p, repayment, *horizon)?;
            let summary = Table::new()
                .row("annuity A", cu(plan.annuity))
                .row("redemption rate t %", num(plan.rate))
                .row("duration n", num(plan.duration));
            schedule_report(summary, &plan.schedule, serde_json::to_value(&plan).expect("plain data"))
        }
        FinanceCmd::Pension { k0, p, m, a, horizon } => {
            let plan = pension_plan(*k0, *p, *m, *a, *horizon)?;
            let summary = Table::new()
                .row("first-year interest Z1", cu(plan.first_year_interest))
                .row("first-year balance K1", cu(plan.first_year_balance))
                .row("duration n", opt(plan.duration))
                .row("everlasting", plan.everlasting.to_string())
                .row("everlasting payment", cu(plan.everlasting_amount));
            schedule_report(summary, &plan.schedule, serde_json::to_value(&plan).expect("plain data"))
        }
        FinanceCmd::Depreciation {
            k0,
            linear,
            declining,
            years,
        } => {
            let method = match (linear, declining) {
                (Some(life), None) => Depreciation::Linear(*life),
                (None, Some(p)) => Depreciation::Declining(*p),
                _ => return Err(Error::InvalidInput("give exactly one of --linear and --declining".into())),
            };
            let r = depreciation(*k0, method, *years)?;
            let summary = Table::new().row("remaining value", cu(r.remaining));
            schedule_report(summary, &r.schedule, serde_json::to_value(&r).expect("plain data"))
        }
        FinanceCmd::Master { k0, q, r, n } => {
            let kn = master_formula(*k0, *q, *r, *n)?;
            Report::new(Table::new().row("Kn", cu(kn)).finish(), json!({ "kn": kn }))
        }
    })
}
