//! Cost phases, profit and Cournot analysis, ratio optima, market
//! equilibrium with surpluses, and the psychological value function.

use serde::{Deserialize, Serialize};

use crate::calculus::{self, differentiate, nth_derivative, roots, Expr, Polynomial, DEFAULT_TOL};
use crate::error::{Error, Result};

/// Grid size for monotonicity and positivity checks.
pub const CHECK_GRID: usize = 256;

/// Cubic total cost `K(x) = a₃x³ + a₂x² + a₁x + a₀` with the usual
/// sign restrictions, which make marginal costs positive with one minimum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CostModel {
    a3: f64,
    a2: f64,
    a1: f64,
    a0: f64,
}

impl CostModel {
    pub fn new(a3: f64, a2: f64, a1: f64, a0: f64) -> Result<Self> {
        let ok = a3 > 0.0 && a1 > 0.0 && a2 < 0.0 && a0 >= 0.0 && a2 * a2 - 3.0 * a3 * a1 < 0.0;
        if !ok || ![a3, a2, a1, a0].iter().all(|v| v.is_finite()) {
            return Err(Error::invalid(format!(
                "cost coefficients ({a3}, {a2}, {a1}, {a0}) need a3 > 0, a2 < 0, a1 > 0, a0 >= 0, a2² < 3·a3·a1"
            )));
        }
        Ok(CostModel { a3, a2, a1, a0 })
    }

    pub fn coefficients(&self) -> [f64; 4] {
        [self.a3, self.a2, self.a1, self.a0]
    }

    pub fn fixed(&self) -> f64 {
        self.a0
    }

    pub fn polynomial(&self) -> Polynomial {
        Polynomial::new(vec![self.a0, self.a1, self.a2, self.a3])
    }

    pub fn expr(&self) -> Expr {
        self.polynomial().to_expr()
    }

    pub fn total(&self, x: f64) -> f64 {
        self.polynomial().eval(x)
    }

    pub fn variable(&self, x: f64) -> f64 {
        self.total(x) - self.a0
    }

    pub fn marginal(&self, x: f64) -> f64 {
        (3.0 * self.a3 * x + 2.0 * self.a2) * x + self.a1
    }

    pub fn average(&self, x: f64) -> f64 {
        self.total(x) / x
    }

    pub fn average_variable(&self, x: f64) -> f64 {
        (self.a3 * x + self.a2) * x + self.a1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Line {
    pub slope: f64,
    pub intercept: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CostAnalysis {
    /// Inflection of `K`, where marginal costs are minimal (end of phase I).
    pub x_w: f64,
    pub min_marginal_cost: f64,
    /// Minimum of average variable costs (end of phase II).
    pub x_g1: f64,
    pub min_average_variable_cost: f64,
    /// Minimum efficient scale: minimum of average costs (end of phase III).
    pub x_g2: f64,
    pub min_average_cost: f64,
    /// Set when `a₀ = 0`, where the two minima coincide.
    pub x_g2_equals_x_g1: bool,
    /// Tangent to `K` at `x_g1`; its intercept equals the fixed costs.
    pub phase2_tangent: Line,
    /// Tangent to `K` at `x_g2`; it passes through the origin.
    pub phase3_tangent: Line,
    /// `|K_v(x_g1)/x_g1 − K′(x_g1)|`.
    pub phase2_residual: f64,
    /// `|K(x_g2)/x_g2 − K′(x_g2)|`.
    pub phase3_residual: f64,
    /// Cost elasticity at the MES, ideally 1.
    pub mes_elasticity: f64,
}

fn tangent(c: &CostModel, x: f64) -> Line {
    let slope = c.marginal(x);
    Line {
        slope,
        intercept: c.total(x) - slope * x,
    }
}

pub fn cost_analysis(c: &CostModel) -> Result<CostAnalysis> {
    let [a3, a2, _, a0] = c.coefficients();
    let x_w = -a2 / (3.0 * a3);
    let x_g1 = -a2 / (2.0 * a3);
    let x_g2 = if a0 == 0.0 {
        x_g1
    } else {
        // 0 = 2a₃x³ + a₂x² − a₀, searched on (0, 10·x_g1] and widened twice
        let mes = Polynomial::new(vec![-a0, 0.0, a2, 2.0 * a3]).to_expr();
        let mut bound = 10.0 * x_g1;
        let mut found = None;
        for _ in 0..3 {
            let r = roots(&mes, 0.0, bound, DEFAULT_TOL)?;
            if let Some(&x) = r.iter().find(|&&x| x > 0.0) {
                found = Some(x);
                break;
            }
            bound *= 10.0;
        }
        found.ok_or_else(|| Error::NoSolution(format!("no minimum efficient scale below {}", bound / 10.0)))?
    };
    Ok(CostAnalysis {
        x_w,
        min_marginal_cost: c.marginal(x_w),
        x_g1,
        min_average_variable_cost: c.average_variable(x_g1),
        x_g2,
        min_average_cost: c.average(x_g2),
        x_g2_equals_x_g1: a0 == 0.0,
        phase2_tangent: tangent(c, x_g1),
        phase3_tangent: tangent(c, x_g2),
        phase2_residual: (c.variable(x_g1) / x_g1 - c.marginal(x_g1)).abs(),
        phase3_residual: (c.average(x_g2) - c.marginal(x_g2)).abs(),
        mes_elasticity: x_g2 * c.marginal(x_g2) / c.total(x_g2),
    })
}

/// Monopolist's market: unit price `p(x)` and cost model over a window of
/// quantities.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MarketModel {
    price: Expr,
    cost: CostModel,
    window: (f64, f64),
}

fn grid(lo: f64, hi: f64) -> impl Iterator<Item = f64> {
    (0..=CHECK_GRID).map(move |i| lo + (hi - lo) * i as f64 / CHECK_GRID as f64)
}

fn check_window(lo: f64, hi: f64) -> Result<()> {
    if lo.is_finite() && hi.is_finite() && lo < hi {
        Ok(())
    } else {
        Err(Error::invalid(format!("window needs lo < hi, got [{lo}, {hi}]")))
    }
}

impl MarketModel {
    /// Requires `p′(x) < 0` at every point of a 256-cell grid.
    pub fn new(price: Expr, cost: CostModel, window: (f64, f64)) -> Result<Self> {
        Self::build(price, cost, window, false)
    }

    /// Constant price, as under perfect competition.
    pub fn perfect_competition(price: f64, cost: CostModel, window: (f64, f64)) -> Result<Self> {
        if !(price > 0.0) {
            return Err(Error::invalid("price must be positive"));
        }
        Self::build(Expr::c(price), cost, window, true)
    }

    fn build(price: Expr, cost: CostModel, window: (f64, f64), constant: bool) -> Result<Self> {
        check_window(window.0, window.1)?;
        if window.0 < 0.0 {
            return Err(Error::invalid("quantities start at 0"));
        }
        if !constant {
            let dp = differentiate(&price);
            for x in grid(window.0, window.1) {
                let slope = dp.eval(x)?;
                if !(slope < 0.0) {
                    return Err(Error::invalid(format!(
                        "price function must be strictly decreasing; p'({x}) = {slope}"
                    )));
                }
            }
        }
        Ok(MarketModel { price, cost, window })
    }

    pub fn price(&self) -> &Expr {
        &self.price
    }

    pub fn cost(&self) -> &CostModel {
        &self.cost
    }

    pub fn window(&self) -> (f64, f64) {
        self.window
    }

    /// `E(x) = x·p(x)`.
    pub fn revenue(&self) -> Expr {
        Expr::x() * self.price.clone()
    }

    /// `G(x) = E(x) − K(x)`.
    pub fn profit(&self) -> Expr {
        self.revenue() - self.cost.expr()
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct ProfitAnalysis {
    /// Break-even point: `G = 0`, `G′ > 0`.
    pub x_s: Option<f64>,
    /// End of the profitable zone: `G = 0`, `G′ < 0`.
    pub x_g: Option<f64>,
    /// Profit maximum: `G′ = 0`, `G″ < 0`.
    pub x_m: Option<f64>,
    pub max_profit: Option<f64>,
    /// `E′(x_M)` and `K′(x_M)`; equal slopes are the parallel tangents.
    pub marginal_revenue: Option<f64>,
    pub marginal_cost: Option<f64>,
    pub parallel_tangent_residual: Option<f64>,
}

/// Break-even, profit limit and profit maximum. If `G` never changes sign
/// inside the window every feature is reported absent. Among several local
/// maxima the largest one is chosen.
pub fn profit_analysis(m: &MarketModel) -> Result<ProfitAnalysis> {
    let (lo, hi) = m.window;
    let g = m.profit();
    let dg = differentiate(&g);
    let d2g = differentiate(&dg);
    let zeros = roots(&g, lo, hi, DEFAULT_TOL)?;
    let crossing: Vec<(f64, f64)> = zeros
        .iter()
        .filter_map(|&x| dg.eval(x).ok().map(|s| (x, s)))
        .filter(|(_, s)| *s != 0.0)
        .collect();
    if crossing.is_empty() {
        return Ok(ProfitAnalysis::default());
    }
    let x_s = crossing.iter().find(|(_, s)| *s > 0.0).map(|(x, _)| *x);
    let x_g = crossing
        .iter()
        .find(|(x, s)| *s < 0.0 && x_s.is_none_or(|xs| *x > xs))
        .map(|(x, _)| *x);
    let mut best: Option<(f64, f64)> = None;
    for x in roots(&dg, lo, hi, DEFAULT_TOL)? {
        if d2g.eval(x).is_ok_and(|c| c < 0.0) {
            let v = g.eval(x)?;
            if best.is_none_or(|(_, b)| v > b) {
                best = Some((x, v));
            }
        }
    }
    let Some((x_m, max_profit)) = best else {
        return Ok(ProfitAnalysis {
            x_s,
            x_g,
            ..Default::default()
        });
    };
    let e1 = differentiate(&m.revenue()).eval(x_m)?;
    let k1 = m.cost.marginal(x_m);
    Ok(ProfitAnalysis {
        x_s,
        x_g,
        x_m: Some(x_m),
        max_profit: Some(max_profit),
        marginal_revenue: Some(e1),
        marginal_cost: Some(k1),
        parallel_tangent_residual: Some((e1 - k1).abs()),
    })
}

/// `p = K′/(1 + ε_p)`.
pub fn amoroso_robinson(marginal_cost: f64, price_elasticity: f64) -> Result<f64> {
    if (1.0 + price_elasticity).abs() < 1e-12 {
        return Err(Error::Domain("price elasticity −1 leaves the formula undefined".into()));
    }
    Ok(marginal_cost / (1.0 + price_elasticity))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Cournot {
    pub x_m: f64,
    pub price: f64,
    pub price_elasticity: f64,
    pub marginal_cost: f64,
    /// `|p(x_M) − K′(x_M)/(1 + ε_p(x_M))|`.
    pub amoroso_robinson_residual: f64,
}

pub fn cournot(m: &MarketModel) -> Result<Cournot> {
    let x_m = profit_analysis(m)?
        .x_m
        .ok_or_else(|| Error::NoSolution("no profit maximum in the window".into()))?;
    let price = m.price.eval(x_m)?;
    let price_elasticity = x_m * differentiate(&m.price).eval(x_m)? / price;
    let marginal_cost = m.cost.marginal(x_m);
    let ar = amoroso_robinson(marginal_cost, price_elasticity)?;
    Ok(Cournot {
        x_m,
        price,
        price_elasticity,
        marginal_cost,
        amoroso_robinson_residual: (price - ar).abs(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RatioOptimum {
    pub x: f64,
    pub value: f64,
    pub numerator_elasticity: f64,
    pub denominator_elasticity: f64,
    /// `|ε_num(x*) − ε_den(x*)|`, zero at an interior optimum.
    pub certificate_residual: f64,
}

/// Maximum of `num/den` inside `[lo, hi]` from `num′·den − num·den′ = 0`
/// with a second-derivative check. `Ok(None)` when the ratio is constant.
pub fn ratio_optimum(num: &Expr, den: &Expr, lo: f64, hi: f64) -> Result<Option<RatioOptimum>> {
    check_window(lo, hi)?;
    for x in grid(lo, hi) {
        let d = den.eval(x)?;
        if !(d > 0.0) {
            return Err(Error::invalid(format!("denominator must be positive; it is {d} at x = {x}")));
        }
    }
    let h = differentiate(num) * den.clone() - num.clone() * differentiate(den);
    let ratio = num.clone() / den.clone();
    let scale = grid(lo, hi)
        .filter_map(|x| ratio.eval(x).ok())
        .fold(0.0_f64, |m, v| m.max(v.abs()));
    if grid(lo, hi).all(|x| h.eval(x).is_ok_and(|v| v.abs() <= 1e-12 * (1.0 + scale))) {
        return Ok(None);
    }
    let curvature = nth_derivative(&ratio, 2);
    let mut best: Option<(f64, f64)> = None;
    for x in roots(&h, lo, hi, DEFAULT_TOL)? {
        if x <= lo || x >= hi || !curvature.eval(x).is_ok_and(|c| c < 0.0) {
            continue;
        }
        let v = ratio.eval(x)?;
        if best.is_none_or(|(_, b)| v > b) {
            best = Some((x, v));
        }
    }
    let (x, value) = best.ok_or_else(|| Error::NoSolution("no interior maximum of the ratio".into()))?;
    let eps = |f: &Expr| -> Result<f64> { Ok(x * differentiate(f).eval(x)? / f.eval(x)?) };
    let (en, ed) = (eps(num)?, eps(den)?);
    Ok(Some(RatioOptimum {
        x,
        value,
        numerator_elasticity: en,
        denominator_elasticity: ed,
        certificate_residual: (en - ed).abs(),
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Equilibrium {
    pub price: f64,
    pub quantity: f64,
    /// Price at which demand vanishes.
    pub prohibitive_price: Option<f64>,
    /// Demand at price 0.
    pub saturation_quantity: Option<f64>,
}

fn monotone(e: &Expr, lo: f64, hi: f64, increasing: bool) -> Result<bool> {
    let values: Vec<f64> = grid(lo, hi).map(|p| e.eval(p)).collect::<Result<_>>()?;
    let tol = 1e-12 * (1.0 + values.iter().fold(0.0_f64, |m, v| m.max(v.abs())));
    Ok(values.windows(2).all(|w| if increasing { w[1] >= w[0] - tol } else { w[1] <= w[0] + tol }))
}

/// Market price where supply `A(p)` meets demand `N(p)` in `[p_u, p_o]`.
pub fn equilibrium(demand: &Expr, supply: &Expr, p_u: f64, p_o: f64) -> Result<Equilibrium> {
    check_window(p_u, p_o)?;
    if !monotone(demand, p_u, p_o, false)? {
        return Err(Error::invalid("demand must decrease with the price"));
    }
    if !monotone(supply, p_u, p_o, true)? {
        return Err(Error::invalid("supply must increase with the price"));
    }
    let gap = supply.clone() - demand.clone();
    let price = *roots(&gap, p_u, p_o, DEFAULT_TOL)?
        .first()
        .ok_or_else(|| Error::NoSolution(format!("supply and demand do not meet in [{p_u}, {p_o}]")))?;
    Ok(Equilibrium {
        price,
        quantity: demand.eval(price)?,
        prohibitive_price: roots(demand, p_u, p_o, DEFAULT_TOL)?.first().copied(),
        saturation_quantity: if p_u <= 0.0 && 0.0 <= p_o {
            Some(demand.eval(0.0)?)
        } else {
            None
        },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MarketStrategies {
    pub equilibrium: Equilibrium,
    /// Everything sold at the equilibrium price.
    pub u1: f64,
    /// Price lowered gradually from `p_o`, skimming the consumer surplus.
    pub u2: f64,
    /// Price raised gradually from `p_u`, forgoing the producer surplus.
    pub u3: f64,
    pub consumer_surplus: f64,
    pub producer_surplus: f64,
}

pub fn market_strategies(demand: &Expr, supply: &Expr, p_u: f64, p_o: f64) -> Result<MarketStrategies> {
    let eq = equilibrium(demand, supply, p_u, p_o)?;
    let u1 = eq.price * eq.quantity;
    let cs = calculus::integrate(demand, eq.price, p_o)?;
    let ps = calculus::integrate(supply, p_u, eq.price)?;
    Ok(MarketStrategies {
        equilibrium: eq,
        u1,
        u2: u1 + cs,
        u3: u1 - ps,
        consumer_surplus: cs,
        producer_surplus: ps,
    })
}

/// Value function with loss aversion: `a·log₁₀(1+x)` for gains and
/// `−2a·log₁₀(1−x)` for losses.
pub fn psych_value(x: f64, a: f64) -> Result<f64> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::invalid(format!("scale a must be positive, got {a}")));
    }
    if x.is_nan() {
        return Err(Error::invalid("x must be a number"));
    }
    let gain = |g: f64| a * (g.ln_1p() / std::f64::consts::LN_10);
    Ok(if x >= 0.0 { gain(x) } else { -2.0 * gain(-x) })
}
