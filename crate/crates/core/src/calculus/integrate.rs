use super::diff::differentiate;
use super::expr::Expr::{self, *};
use super::poly::Polynomial;
use super::roots::roots;
use crate::error::{Error, Result};

/// Absolute and relative target of the numeric quadrature.
pub const QUADRATURE_TOL: f64 = 1e-10;

fn linear_slope(u: &Expr) -> Option<f64> {
    let p = Polynomial::from_expr(u)?;
    (p.degree() == Some(1)).then(|| p.coeffs()[1])
}

fn integrate_poly(p: &Polynomial) -> Polynomial {
    let mut c = vec![0.0];
    c.extend(p.coeffs().iter().enumerate().map(|(k, a)| a / (k as f64 + 1.0)));
    Polynomial::new(c)
}

/// `Some(k)` when `n = k·d` as polynomials or structurally.
fn proportional(n: &Expr, d: &Expr) -> Option<f64> {
    if n == d {
        return Some(1.0);
    }
    let (pn, pd) = (Polynomial::from_expr(n)?, Polynomial::from_expr(d)?);
    if pd.is_zero() || pn.degree() != pd.degree() {
        return None;
    }
    let k = pn.leading() / pd.leading();
    let scale = pn.coeffs().iter().fold(0.0_f64, |m, c| m.max(c.abs()));
    pn.sub(&pd.scale(k))
        .coeffs()
        .iter()
        .all(|c| c.abs() <= 1e-12 * scale)
        .then_some(k)
}

/// A primitive of `e`, without the constant of integration.
///
/// Handles linear combinations of constants, polynomials, `u^α` and
/// `a^u`, `exp(u)` for linear `u` (`α = −1` giving `ln|u|`), and quotients
/// whose numerator is a constant multiple of the denominator's derivative.
/// Anything else yields `None`.
pub fn antiderivative(e: &Expr) -> Option<Expr> {
    if e.is_constant() {
        return Some(Expr::c(e.eval(0.0).ok()?) * Expr::x());
    }
    if let Some(p) = Polynomial::from_expr(e) {
        return Some(integrate_poly(&p).to_expr());
    }
    match e {
        Neg(u) => Some(-antiderivative(u)?),
        Add(a, b) => Some(antiderivative(a)? + antiderivative(b)?),
        Sub(a, b) => Some(antiderivative(a)? - antiderivative(b)?),
        Mul(a, b) if a.is_constant() => Some((**a).clone() * antiderivative(b)?),
        Mul(a, b) if b.is_constant() => Some(antiderivative(a)? * (**b).clone()),
        Div(a, b) if b.is_constant() => Some(antiderivative(a)? / (**b).clone()),
        Div(n, d) => {
            // logarithmic integration: ∫ k·d′/d dx = k ln|d|
            let k = proportional(n, &differentiate(d))?;
            Some(Expr::c(k) * (**d).clone().abs().ln())
        }
        Pow(u, alpha) if alpha.is_constant() => {
            let k = linear_slope(u)?;
            let alpha = alpha.eval(0.0).ok()?;
            if alpha == -1.0 {
                Some((**u).clone().abs().ln() / Expr::c(k))
            } else {
                Some((**u).clone().pow(Expr::c(alpha + 1.0)) / Expr::c((alpha + 1.0) * k))
            }
        }
        Pow(a, u) if a.is_constant() => {
            let k = linear_slope(u)?;
            let a = a.eval(0.0).ok()?;
            (a > 0.0 && a != 1.0).then(|| e.clone() / Expr::c(k * a.ln()))
        }
        Exp(u) => {
            let k = linear_slope(u)?;
            Some(e.clone() / Expr::c(k))
        }
        _ => None,
    }
}

/// Sub-expressions whose zeros make `e` singular: denominators, bases of
/// negative or variable powers, logarithm arguments.
fn singular_factors<'a>(e: &'a Expr, out: &mut Vec<&'a Expr>) {
    match e {
        Const(_) | Var => {}
        Neg(u) | Exp(u) | Abs(u) => singular_factors(u, out),
        Ln(u) => {
            out.push(u);
            singular_factors(u, out);
        }
        Add(a, b) | Sub(a, b) | Mul(a, b) => {
            singular_factors(a, out);
            singular_factors(b, out);
        }
        Div(a, b) => {
            out.push(b);
            singular_factors(a, out);
            singular_factors(b, out);
        }
        Pow(a, b) => {
            if b.as_const().is_none_or(|k| k < 0.0) {
                out.push(a);
            }
            singular_factors(a, out);
            singular_factors(b, out);
        }
    }
}

/// Points of `[lo, hi]` where `e` fails to evaluate because one of its
/// singular factors vanishes.
pub fn singular_points(e: &Expr, lo: f64, hi: f64) -> Vec<f64> {
    let mut factors = Vec::new();
    singular_factors(e, &mut factors);
    let mut pts: Vec<f64> = Vec::new();
    for g in factors {
        if g.is_constant() {
            continue;
        }
        let zeros = match Polynomial::from_expr(g) {
            Some(p) => p.real_roots(lo, hi),
            None => roots(g, lo, hi, 1e-13).unwrap_or_default(),
        };
        pts.extend(zeros.into_iter().filter(|&c| e.eval(c).is_err()));
    }
    pts.sort_by(f64::total_cmp);
    pts.dedup_by(|a, b| (*a - *b).abs() <= 1e-9 * (1.0 + b.abs()));
    pts
}

/// `∫_a^b e(x) dx`.
///
/// Uses `F(b) − F(a)` when [`antiderivative`] finds a primitive, adaptive
/// Simpson quadrature otherwise. Infinite limits and singular endpoints
/// need a primitive whose limit is finite, else the integral is reported
/// divergent. A singularity strictly inside the interval is a pole error.
pub fn integrate(e: &Expr, a: f64, b: f64) -> Result<f64> {
    if a.is_nan() || b.is_nan() {
        return Err(Error::invalid("integration limits must be numbers"));
    }
    if a == b {
        return Ok(0.0);
    }
    if a > b {
        return integrate(e, b, a).map(|v| -v);
    }
    // finite stand-in for scanning an infinite range
    let lo = if a.is_finite() { a } else { b.min(0.0) - 1e3 };
    let hi = if b.is_finite() { b } else { a.max(0.0) + 1e3 };
    let near = |p: f64, q: f64| (p - q).abs() <= 1e-12 * (1.0 + q.abs());
    let singular = singular_points(e, lo, hi);
    if let Some(&c) = singular.iter().find(|&&c| !near(c, a) && !near(c, b)) {
        return Err(Error::Pole { at: c + 0.0 });
    }
    let a_singular = !a.is_finite() || singular.iter().any(|&c| near(c, a));
    let b_singular = !b.is_finite() || singular.iter().any(|&c| near(c, b));

    let checked = |x: f64| {
        e.eval(x).map_err(|err| match err {
            Error::Domain(msg) => Error::Domain(format!("integrand undefined inside [{a}, {b}]: {msg}")),
            other => other,
        })
    };
    // the integrand must be defined inside, whichever path is taken
    for k in 1..16 {
        checked(lo + (hi - lo) * k as f64 / 16.0)?;
    }

    match antiderivative(e) {
        Some(f) => {
            let end = |x: f64, improper: bool| -> Result<f64> {
                match f.eval(x) {
                    Ok(v) if v.is_finite() => Ok(v),
                    Ok(_) | Err(_) if improper => Err(Error::Divergent(format!(
                        "the primitive {f} has no finite limit at x = {x}"
                    ))),
                    Ok(v) => Err(Error::Domain(format!("primitive {f} is {v} at x = {x}"))),
                    Err(err) => Err(err),
                }
            };
            let v = end(b, b_singular)? - end(a, a_singular)?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(Error::Divergent("the integral has no finite value".into()))
            }
        }
        None if a_singular || b_singular => Err(Error::Divergent(format!(
            "improper integral of {e} needs a closed-form primitive"
        ))),
        None => adaptive_simpson(&checked, a, b),
    }
}

/// Adaptive Simpson quadrature to `QUADRATURE_TOL` absolute or relative.
pub fn adaptive_simpson(f: &dyn Fn(f64) -> Result<f64>, a: f64, b: f64) -> Result<f64> {
    const PANELS: usize = 16;
    let h = (b - a) / PANELS as f64;
    let mut nodes = Vec::with_capacity(2 * PANELS + 1);
    for k in 0..=2 * PANELS {
        nodes.push(f(a + 0.5 * h * k as f64)?);
    }
    let coarse: f64 = (0..PANELS)
        .map(|k| h / 6.0 * (nodes[2 * k] + 4.0 * nodes[2 * k + 1] + nodes[2 * k + 2]))
        .sum();
    let tol = QUADRATURE_TOL.max(QUADRATURE_TOL * coarse.abs()) / PANELS as f64;
    let mut total = 0.0;
    for k in 0..PANELS {
        let (l, r) = (a + h * k as f64, a + h * (k + 1) as f64);
        let (fl, fm, fr) = (nodes[2 * k], nodes[2 * k + 1], nodes[2 * k + 2]);
        let whole = h / 6.0 * (fl + 4.0 * fm + fr);
        total += simpson_step(f, l, r, fl, fm, fr, whole, tol, 48)?;
    }
    Ok(total)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step(
    f: &dyn Fn(f64) -> Result<f64>,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> Result<f64> {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm)?, f(rm)?);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return Ok(left + right + delta / 15.0);
    }
    Ok(simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)?
        + simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::parse;

    fn int(text: &str, a: f64, b: f64) -> Result<f64> {
        integrate(&parse(text).unwrap(), a, b)
    }

    #[test]
    fn definite_examples() {
        assert!((int("x", 1.0, 2.0).unwrap() - 1.5).abs() < 1e-12);
        assert!((int("x^2", 1.0, 2.0).unwrap() - 7.0 / 3.0).abs() < 1e-12);
        assert!((int("x^0.5", 1.0, 2.0).unwrap() - 1.2189514164974602).abs() < 1e-12);
        assert_eq!(int("x^2", 3.0, 3.0).unwrap(), 0.0);
        assert!((int("x^2", 2.0, 1.0).unwrap() + 7.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn primitives() {
        let f = |t: &str| antiderivative(&parse(t).unwrap()).map(|e| e.to_string());
        assert_eq!(f("x").as_deref(), Some("0.5*x^2"));
        assert_eq!(f("x^(-1)").as_deref(), Some("ln(abs(x))"));
        assert_eq!(f("1/x").as_deref(), Some("ln(abs(x))"));
        assert_eq!(f("exp(2*x)").as_deref(), Some("exp(2*x)/2"));
        assert_eq!(f("2*x/(x^2 + 1)").as_deref(), Some("ln(abs(x^2 + 1))"));
        assert!(f("x*exp(x)").is_none());
    }

    #[test]
    fn poles_and_divergence() {
        assert!(matches!(int("1/x", -1.0, 1.0), Err(Error::Pole { .. })));
        assert!(matches!(int("x^(-2)", 0.0, 1.0), Err(Error::Divergent(_))));
        assert!(matches!(int("x^(-0.5)", 1.0, f64::INFINITY), Err(Error::Divergent(_))));
        assert!((int("x^(-0.5)", 0.0, 1.0).unwrap() - 2.0).abs() < 1e-12);
        assert!((int("x^(-2)", 1.0, f64::INFINITY).unwrap() - 1.0).abs() < 1e-12);
        assert!((int("exp(-x)", 0.0, f64::INFINITY).unwrap() - 1.0).abs() < 1e-12);
        assert!(matches!(int("ln(x)", -2.0, -1.0), Err(Error::Domain(_))));
    }

    #[test]
    fn numeric_fallback() {
        // ∫₀¹ x eˣ dx = 1
        assert!((int("x*exp(x)", 0.0, 1.0).unwrap() - 1.0).abs() < 1e-10);
        let whole = int("x*exp(x)", 0.0, 2.0).unwrap();
        let split = int("x*exp(x)", 0.0, 0.7).unwrap() + int("x*exp(x)", 0.7, 2.0).unwrap();
        assert!((whole - split).abs() < 1e-9);
    }
}
