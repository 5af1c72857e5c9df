use clap::Subcommand;
use econkit::calculus::parse;
use econkit::econ::{
    cost_analysis, cournot, market_strategies, profit_analysis, psych_value, CostModel, MarketModel,
};
use econkit::{Error, Result};
use serde_json::json;

use crate::parse_window;
use crate::render::{cu, num, opt, Report, Table};

#[derive(Subcommand)]
pub enum EconCmd {
    /// Cost phases of K(x) = a3·x³ + a2·x² + a1·x + a0
    #[command(allow_negative_numbers = true)]
    Cost {
        #[arg(long)]
        a3: f64,
        #[arg(long)]
        a2: f64,
        #[arg(long)]
        a1: f64,
        #[arg(long)]
        a0: f64,
    },
    /// Break-even points, profit maximum and Cournot point
    Profit {
        /// Price-demand function p(x), or a constant market price
        #[arg(long, allow_hyphen_values = true)]
        price: String,
        /// Cost coefficients a3,a2,a1,a0
        #[arg(long, allow_hyphen_values = true, value_name = "A3,A2,A1,A0")]
        cost: String,
        #[arg(long, value_parser = parse_window, allow_hyphen_values = true, value_name = "LO:HI")]
        window: (f64, f64),
    },
    /// Market equilibrium, surpluses and the three sales strategies
    #[command(allow_negative_numbers = true)]
    Surplus {
        /// Demand N(p)
        #[arg(long, allow_hyphen_values = true)]
        demand: String,
        /// Supply A(p)
        #[arg(long, allow_hyphen_values = true)]
        supply: String,
        /// Lowest price
        #[arg(long)]
        pu: f64,
        /// Highest price
        #[arg(long)]
        po: f64,
    },
    /// Psychological value of a gain or loss x
    #[command(allow_negative_numbers = true)]
    Value {
        #[arg(long)]
        a: f64,
        #[arg(long)]
        x: f64,
    },
}

fn cost_model(text: &str) -> Result<CostModel> {
    let c: Vec<f64> = text
        .split(',')
        .map(|s| s.trim().parse::<f64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::InvalidInput(format!("cost coefficients must be four numbers a3,a2,a1,a0, got `{text}`")))?;
    match c[..] {
        [a3, a2, a1, a0] => CostModel::new(a3, a2, a1, a0),
        _ => Err(Error::InvalidInput(format!("expected four cost coefficients, got {}", c.len()))),
    }
}

pub fn run(cmd: &EconCmd) -> Result<Report> {
    Ok(match cmd {
        EconCmd::Cost { a3, a2, a1, a0 } => {
            let c = CostModel::new(*a3, *a2, *a1, *a0)?;
            let a = cost_analysis(&c)?;
            let t = Table::new()
                .row("K(x)", c.expr().to_string())
                .row("x_W (min marginal cost)", num(a.x_w))
                .row("min K'", num(a.min_marginal_cost))
                .row("x_g1 (operating minimum)", num(a.x_g1))
                .row("min k_v", num(a.min_average_variable_cost))
                .row("x_g2 (operating optimum)", num(a.x_g2))
                .row("min k", num(a.min_average_cost))
                .row("elasticity at x_g2", num(a.mes_elasticity));
            Report::new(t.finish(), serde_json::to_value(&a).expect("plain data"))
        }
        EconCmd::Profit { price, cost, window } => {
            let p = parse(price)?;
            let c = cost_model(cost)?;
            let market = match p.as_const() {
                Some(v) => MarketModel::perfect_competition(v, c, *window)?,
                None => MarketModel::new(p, c, *window)?,
            };
            let a = profit_analysis(&market)?;
            let mut t = Table::new()
                .row("G(x)", market.profit().to_string())
                .row("x_S (break-even)", opt(a.x_s))
                .row("x_G (profit limit)", opt(a.x_g))
                .row("x_M (max profit)", opt(a.x_m))
                .row("max profit", a.max_profit.map_or_else(|| "none".into(), cu));
            let mut js = json!({ "profit": a });
            if market.price().as_const().is_none() {
                if let Ok(cp) = cournot(&market) {
                    t = t
                        .row("Cournot price", num(cp.price))
                        .row("price elasticity", num(cp.price_elasticity))
                        .row("Amoroso-Robinson residual", num(cp.amoroso_robinson_residual));
                    js["cournot"] = serde_json::to_value(&cp).expect("plain data");
                }
            }
            Report::new(t.finish(), js)
        }
        EconCmd::Surplus { demand, supply, pu, po } => {
            let s = market_strategies(&parse(demand)?, &parse(supply)?, *pu, *po)?;
            let t = Table::new()
                .row("equilibrium price", num(s.equilibrium.price))
                .row("equilibrium quantity", num(s.equilibrium.quantity))
                .row("U1 (single price)", cu(s.u1))
                .row("U2 (falling price)", cu(s.u2))
                .row("U3 (rising price)", cu(s.u3))
                .row("consumer surplus", cu(s.consumer_surplus))
                .row("producer surplus", cu(s.producer_surplus));
            Report::new(t.finish(), serde_json::to_value(&s).expect("plain data"))
        }
        EconCmd::Value { a, x } => {
            let v = psych_value(*x, *a)?;
            Report::new(Table::new().row("v(x)", num(v)).finish(), json!({ "a": a, "x": x, "value": v }))
        }
    })
}
