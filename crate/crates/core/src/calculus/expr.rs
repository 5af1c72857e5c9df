use std::fmt;
use std::ops;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::format_real;

/// Expression tree in one real variable `x`.
///
/// Build trees through the operator impls and the methods below rather than
/// the raw variants: they fold constants, drop `0`/`1` identities and merge
/// powers, which keeps printed derivatives readable. `log(a; u)` has no
/// node of its own and is stored as `ln(u)/ln(a)`.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Const(f64),
    Var,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Exp(Box<Expr>),
    Ln(Box<Expr>),
    Abs(Box<Expr>),
}

use Expr::*;

fn folded(v: f64) -> Option<Expr> {
    v.is_finite().then_some(Const(v))
}

impl Expr {
    pub fn c(v: f64) -> Expr {
        Const(v)
    }

    pub fn x() -> Expr {
        Var
    }

    pub fn as_const(&self) -> Option<f64> {
        match self {
            Const(v) => Some(*v),
            _ => None,
        }
    }

    fn is(&self, v: f64) -> bool {
        self.as_const() == Some(v)
    }

    /// True when the tree does not mention `x`.
    pub fn is_constant(&self) -> bool {
        match self {
            Const(_) => true,
            Var => false,
            Neg(u) | Exp(u) | Ln(u) | Abs(u) => u.is_constant(),
            Add(a, b) | Sub(a, b) | Mul(a, b) | Div(a, b) | Pow(a, b) => a.is_constant() && b.is_constant(),
        }
    }

    pub fn pow(self, exponent: Expr) -> Expr {
        if let (Some(a), Some(b)) = (self.as_const(), exponent.as_const()) {
            if let Some(e) = folded(a.powf(b)) {
                return e;
            }
        }
        if exponent.is(0.0) || self.is(1.0) {
            return Const(1.0);
        }
        if exponent.is(1.0) {
            return self;
        }
        if let (Pow(base, inner), Some(k)) = (&self, exponent.as_const()) {
            if let Some(c) = inner.as_const() {
                if k.fract() == 0.0 {
                    return (**base).clone().pow(Const(c * k));
                }
            }
        }
        Pow(Box::new(self), Box::new(exponent))
    }

    pub fn powi(self, k: i32) -> Expr {
        self.pow(Const(f64::from(k)))
    }

    pub fn exp(self) -> Expr {
        if let Some(e) = self.as_const().and_then(|v| folded(v.exp())) {
            return e;
        }
        Exp(Box::new(self))
    }

    pub fn ln(self) -> Expr {
        if let Some(v) = self.as_const() {
            if v > 0.0 {
                return Const(v.ln());
            }
        }
        Ln(Box::new(self))
    }

    /// `log_a(u) = ln(u)/ln(a)`.
    pub fn log(base: f64, arg: Expr) -> Expr {
        arg.ln() / Const(base).ln()
    }

    pub fn abs(self) -> Expr {
        if let Some(v) = self.as_const() {
            return Const(v.abs());
        }
        Abs(Box::new(self))
    }

    /// Evaluates at `x`. Logarithms of non-positive values, division by
    /// zero, powers outside the real domain and non-finite results are
    /// domain errors naming the offending node.
    pub fn eval(&self, x: f64) -> Result<f64> {
        let v = self.eval_inner(x)?;
        if v.is_finite() || !x.is_finite() {
            Ok(v)
        } else {
            Err(Error::Domain(format!("{self} is not finite at x = {x}")))
        }
    }

    fn eval_inner(&self, x: f64) -> Result<f64> {
        let v = match self {
            Const(v) => *v,
            Var => x,
            Neg(u) => -u.eval_inner(x)?,
            Add(a, b) => a.eval_inner(x)? + b.eval_inner(x)?,
            Sub(a, b) => a.eval_inner(x)? - b.eval_inner(x)?,
            Mul(a, b) => a.eval_inner(x)? * b.eval_inner(x)?,
            Div(a, b) => {
                let d = b.eval_inner(x)?;
                if d == 0.0 {
                    return Err(Error::Domain(format!("division by zero in {self} at x = {x}")));
                }
                a.eval_inner(x)? / d
            }
            Pow(a, b) => {
                let (base, e) = (a.eval_inner(x)?, b.eval_inner(x)?);
                if base < 0.0 && e.fract() != 0.0 {
                    return Err(Error::Domain(format!(
                        "negative base to a fractional power in {self} at x = {x}"
                    )));
                }
                if base == 0.0 && e < 0.0 {
                    return Err(Error::Domain(format!("zero to a negative power in {self} at x = {x}")));
                }
                base.powf(e)
            }
            Exp(u) => u.eval_inner(x)?.exp(),
            Ln(u) => {
                let v = u.eval_inner(x)?;
                if !(v > 0.0) {
                    return Err(Error::Domain(format!("{self} needs a positive argument, got {v} at x = {x}")));
                }
                v.ln()
            }
            Abs(u) => u.eval_inner(x)?.abs(),
        };
        if v.is_nan() {
            return Err(Error::Domain(format!("{self} is undefined at x = {x}")));
        }
        Ok(v)
    }

    /// Binding strength used when printing; higher binds tighter.
    fn precedence(&self) -> u8 {
        match self {
            Add(..) | Sub(..) => 1,
            Mul(..) | Div(..) => 2,
            Neg(_) => 3,
            Pow(..) => 4,
            // negative constants print their own parentheses
            _ => 5,
        }
    }

    /// `f(g(x))`: substitutes `inner` for every `x`, rebuilding through the
    /// smart constructors.
    pub fn compose(&self, inner: &Expr) -> Expr {
        match self {
            Const(v) => Const(*v),
            Var => inner.clone(),
            Neg(u) => -u.compose(inner),
            Add(a, b) => a.compose(inner) + b.compose(inner),
            Sub(a, b) => a.compose(inner) - b.compose(inner),
            Mul(a, b) => a.compose(inner) * b.compose(inner),
            Div(a, b) => a.compose(inner) / b.compose(inner),
            Pow(a, b) => a.compose(inner).pow(b.compose(inner)),
            Exp(u) => u.compose(inner).exp(),
            Ln(u) => u.compose(inner).ln(),
            Abs(u) => u.compose(inner).abs(),
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            Const(_) | Var => 1,
            Neg(u) | Exp(u) | Ln(u) | Abs(u) => 1 + u.node_count(),
            Add(a, b) | Sub(a, b) | Mul(a, b) | Div(a, b) | Pow(a, b) => 1 + a.node_count() + b.node_count(),
        }
    }
}

impl ops::Neg for Expr {
    type Output = Expr;

    fn neg(self) -> Expr {
        match self {
            Const(v) => Const(-v),
            Neg(u) => *u,
            e => Neg(Box::new(e)),
        }
    }
}

impl ops::Add for Expr {
    type Output = Expr;

    fn add(self, rhs: Expr) -> Expr {
        if let (Some(a), Some(b)) = (self.as_const(), rhs.as_const()) {
            if let Some(e) = folded(a + b) {
                return e;
            }
        }
        if self.is(0.0) {
            return rhs;
        }
        if rhs.is(0.0) {
            return self;
        }
        match rhs {
            Neg(u) => self - *u,
            Const(c) if c < 0.0 => self - Const(-c),
            Mul(l, r) if l.as_const().is_some_and(|c| c < 0.0) => self - (-*l) * *r,
            rhs => Add(Box::new(self), Box::new(rhs)),
        }
    }
}

impl ops::Sub for Expr {
    type Output = Expr;

    fn sub(self, rhs: Expr) -> Expr {
        if let (Some(a), Some(b)) = (self.as_const(), rhs.as_const()) {
            if let Some(e) = folded(a - b) {
                return e;
            }
        }
        if rhs.is(0.0) {
            return self;
        }
        if self.is(0.0) {
            return -rhs;
        }
        if self == rhs {
            return Const(0.0);
        }
        match rhs {
            Neg(u) => self + *u,
            Const(c) if c < 0.0 => self + Const(-c),
            Mul(l, r) if l.as_const().is_some_and(|c| c < 0.0) => self + (-*l) * *r,
            rhs => Sub(Box::new(self), Box::new(rhs)),
        }
    }
}

impl ops::Mul for Expr {
    type Output = Expr;

    fn mul(self, rhs: Expr) -> Expr {
        if let (Some(a), Some(b)) = (self.as_const(), rhs.as_const()) {
            if let Some(e) = folded(a * b) {
                return e;
            }
        }
        // constants go to the left
        if rhs.as_const().is_some() && self.as_const().is_none() {
            return rhs * self;
        }
        if self.is(0.0) || rhs.is(0.0) {
            return Const(0.0);
        }
        if self.is(1.0) {
            return rhs;
        }
        if rhs.is(1.0) {
            return self;
        }
        if self.is(-1.0) {
            return -rhs;
        }
        // pull signs out of products
        if let Neg(u) = &rhs {
            return -(self * (**u).clone());
        }
        if let Neg(u) = &self {
            return -((**u).clone() * rhs);
        }
        if let (Some(a), Mul(l, r)) = (self.as_const(), &rhs) {
            if let Some(b) = l.as_const() {
                if let Some(ab) = folded(a * b) {
                    return ab * (**r).clone();
                }
            }
        }
        if let Div(l, r) = &rhs {
            if l.is(1.0) {
                return self / (**r).clone();
            }
        }
        Mul(Box::new(self), Box::new(rhs))
    }
}

impl ops::Div for Expr {
    type Output = Expr;

    fn div(self, rhs: Expr) -> Expr {
        if let (Some(a), Some(b)) = (self.as_const(), rhs.as_const()) {
            if let Some(e) = folded(a / b) {
                return e;
            }
        }
        if rhs.is(1.0) {
            return self;
        }
        if self.is(0.0) && !rhs.is(0.0) {
            return Const(0.0);
        }
        if self == rhs && !self.is(0.0) {
            return Const(1.0);
        }
        Div(Box::new(self), Box::new(rhs))
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn child(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
            if e.precedence() < min {
                write!(f, "({e})")
            } else {
                write!(f, "{e}")
            }
        }
        match self {
            Const(v) if *v < 0.0 => write!(f, "({})", format_real(*v)),
            Const(v) => write!(f, "{}", format_real(*v)),
            Var => write!(f, "x"),
            Neg(u) => {
                write!(f, "-")?;
                child(f, u, 3)
            }
            Add(a, b) | Sub(a, b) => {
                child(f, a, 1)?;
                write!(f, "{}", if matches!(self, Add(..)) { " + " } else { " - " })?;
                child(f, b, 2)
            }
            Mul(a, b) | Div(a, b) => {
                child(f, a, 2)?;
                write!(f, "{}", if matches!(self, Mul(..)) { "*" } else { "/" })?;
                child(f, b, 3)
            }
            Pow(a, b) => {
                child(f, a, 5)?;
                write!(f, "^")?;
                child(f, b, 3)
            }
            Exp(u) => write!(f, "exp({u})"),
            Ln(u) => write!(f, "ln({u})"),
            Abs(u) => write!(f, "abs({u})"),
        }
    }
}

impl Serialize for Expr {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Expr {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        super::parse(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluation() {
        let sq = Expr::x().powi(2);
        assert_eq!(sq.eval(3.0).unwrap(), 9.0);
        assert_eq!(Expr::x().ln().eval(1.0).unwrap(), 0.0);
        assert!(matches!((Expr::c(1.0) / Expr::x()).eval(0.0), Err(Error::Domain(_))));
        assert!(Expr::x().ln().eval(0.0).is_err());
        assert!(Expr::x().pow(Expr::c(0.5)).eval(-1.0).is_err());
        assert_eq!(Expr::log(10.0, Expr::x()).eval(1000.0).unwrap().round(), 3.0);
    }

    #[test]
    fn simplification() {
        let x = Expr::x;
        assert_eq!(x() * Expr::c(3.0), Mul(Box::new(Const(3.0)), Box::new(Var)));
        assert_eq!(Expr::c(2.0) * (Expr::c(3.0) * x()), Expr::c(6.0) * x());
        assert_eq!(x() + Expr::c(0.0), x());
        assert_eq!(x() / x(), Expr::c(1.0));
        assert_eq!(x().powi(2).powi(3), x().powi(6));
        assert_eq!(Expr::c(0.0).ln(), Ln(Box::new(Const(0.0))));
        assert_eq!(Expr::c(5.0) * (Expr::c(1.0) / x()), Expr::c(5.0) / x());
    }

    #[test]
    fn printing() {
        let x = Expr::x;
        assert_eq!((x().powi(2) + Expr::c(1.0)).to_string(), "x^2 + 1");
        assert_eq!((x() - (x() - Expr::c(1.0))).to_string(), "x - (x - 1)");
        assert_eq!((Expr::c(-2.0) * x()).to_string(), "(-2)*x");
        assert_eq!((-x().powi(2)).to_string(), "-x^2");
        assert_eq!(x().powi(-1).to_string(), "x^(-1)");
    }
}
