use serde::{Deserialize, Serialize};

use super::expr::Expr::{self, *};
use crate::error::{Error, Result};

/// Symbolic derivative with respect to `x`.
pub fn differentiate(e: &Expr) -> Expr {
    match e {
        Const(_) => Expr::c(0.0),
        Var => Expr::c(1.0),
        Neg(u) => -differentiate(u),
        Add(a, b) => differentiate(a) + differentiate(b),
        Sub(a, b) => differentiate(a) - differentiate(b),
        Mul(a, b) => {
            if a.is_constant() {
                return (**a).clone() * differentiate(b);
            }
            if b.is_constant() {
                return differentiate(a) * (**b).clone();
            }
            differentiate(a) * (**b).clone() + (**a).clone() * differentiate(b)
        }
        Div(a, b) => {
            if b.is_constant() {
                return differentiate(a) / (**b).clone();
            }
            if a.is_constant() {
                // (c/v)' = −c v′/v²
                return -((**a).clone() * differentiate(b)) / (**b).clone().powi(2);
            }
            (differentiate(a) * (**b).clone() - (**a).clone() * differentiate(b)) / (**b).clone().powi(2)
        }
        Pow(u, v) => {
            if let Some(n) = v.as_const() {
                // (uⁿ)′ = n u^{n−1} u′
                return Expr::c(n) * (**u).clone().pow(Expr::c(n - 1.0)) * differentiate(u);
            }
            if let Some(a) = u.as_const() {
                // (a^v)′ = ln(a) a^v v′
                return Expr::c(a).ln() * e.clone() * differentiate(v);
            }
            // logarithmic differentiation: (u^v)′ = u^v (v′ ln u + v u′/u)
            e.clone() * (differentiate(v) * (**u).clone().ln() + (**v).clone() * differentiate(u) / (**u).clone())
        }
        Exp(u) => differentiate(u) * e.clone(),
        Ln(u) => differentiate(u) / (**u).clone(),
        Abs(u) => differentiate(u) * ((**u).clone() / e.clone()),
    }
}

/// `n`-th derivative.
pub fn nth_derivative(e: &Expr, n: usize) -> Expr {
    (0..n).fold(e.clone(), |d, _| differentiate(&d))
}

/// Linearisation `y = f(x₀) + f′(x₀)(x − x₀)` as `(slope, intercept)`.
pub fn tangent_line(e: &Expr, x0: f64) -> Result<(f64, f64)> {
    let y0 = e.eval(x0)?;
    let slope = differentiate(e).eval(x0)?;
    Ok((slope, y0 - slope * x0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ElasticityClass {
    Inelastic,
    UnitElastic,
    Elastic,
}

impl ElasticityClass {
    pub fn of(eps: f64) -> Self {
        let a = eps.abs();
        if (a - 1.0).abs() <= 1e-9 {
            ElasticityClass::UnitElastic
        } else if a < 1.0 {
            ElasticityClass::Inelastic
        } else {
            ElasticityClass::Elastic
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ElasticityClass::Inelastic => "inelastic",
            ElasticityClass::UnitElastic => "unit elastic",
            ElasticityClass::Elastic => "elastic",
        }
    }
}

fn check_positive(e: &Expr, x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("elasticities need x > 0, got {x}")));
    }
    let fx = e.eval(x)?;
    if !(fx > 0.0) {
        return Err(Error::Domain(format!("elasticities need f(x) > 0, got f({x}) = {fx}")));
    }
    Ok(fx)
}

/// `ε_f(x) = x f′(x)/f(x)` for `x > 0`, `f(x) > 0`.
pub fn elasticity(e: &Expr, x: f64) -> Result<f64> {
    let fx = check_positive(e, x)?;
    Ok(x * differentiate(e).eval(x)? / fx)
}

/// Elasticity function `x f′/f` as an expression.
pub fn elasticity_expr(e: &Expr) -> Expr {
    Expr::x() * differentiate(e) / e.clone()
}

/// `x · d/dx [x f′(x)/f(x)]`.
pub fn second_elasticity(e: &Expr, x: f64) -> Result<f64> {
    check_positive(e, x)?;
    Ok(x * differentiate(&elasticity_expr(e)).eval(x)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::parse;

    fn d(text: &str) -> String {
        differentiate(&parse(text).unwrap()).to_string()
    }

    #[test]
    fn rule_table() {
        assert_eq!(d("x^2"), "2*x");
        assert_eq!(d("exp(3*x)"), "3*exp(3*x)");
        assert_eq!(d("x*ln(x)"), "ln(x) + 1");
        assert_eq!(d("5"), "0");
        assert_eq!(d("x"), "1");
        assert_eq!(d("ln(x)"), "1/x");
        assert_eq!(d("2^x"), "0.6931471805599453*2^x");
    }

    #[test]
    fn general_power_and_abs() {
        let e = parse("x^x").unwrap();
        let v = differentiate(&e).eval(2.0).unwrap();
        assert!((v - 4.0 * (2f64.ln() + 1.0)).abs() < 1e-12);
        let e = parse("abs(x - 1)").unwrap();
        assert_eq!(differentiate(&e).eval(0.0).unwrap(), -1.0);
    }

    #[test]
    fn tangents() {
        assert_eq!(tangent_line(&parse("x^2").unwrap(), 1.0).unwrap(), (2.0, -1.0));
        assert_eq!(tangent_line(&parse("5").unwrap(), 7.0).unwrap(), (0.0, 5.0));
        assert_eq!(tangent_line(&parse("ln(x)").unwrap(), 1.0).unwrap(), (1.0, -1.0));
        assert!(tangent_line(&parse("ln(x)").unwrap(), -1.0).is_err());
    }

    #[test]
    fn elasticities() {
        let e = std::f64::consts::E;
        assert!((elasticity(&parse("x^3").unwrap(), 1.7).unwrap() - 3.0).abs() < 1e-12);
        assert!((elasticity(&parse("exp(2*x)").unwrap(), 1.5).unwrap() - 3.0).abs() < 1e-12);
        assert!((elasticity(&parse("ln(x)").unwrap(), e).unwrap() - 1.0).abs() < 1e-12);
        assert!(second_elasticity(&parse("x^2.5").unwrap(), 3.0).unwrap().abs() < 1e-12);
        assert!((second_elasticity(&parse("exp(2*x)").unwrap(), 1.5).unwrap() - 3.0).abs() < 1e-12);
        assert!((second_elasticity(&parse("ln(x)").unwrap(), e).unwrap() + 1.0).abs() < 1e-12);
        assert!(elasticity(&parse("x - 5").unwrap(), 1.0).is_err());
        assert!(elasticity(&parse("x").unwrap(), 0.0).is_err());
        assert_eq!(ElasticityClass::of(-0.2), ElasticityClass::Inelastic);
        assert_eq!(ElasticityClass::of(1.0 + 1e-12), ElasticityClass::UnitElastic);
        assert_eq!(ElasticityClass::of(-3.0).label(), "elastic");
    }
}
