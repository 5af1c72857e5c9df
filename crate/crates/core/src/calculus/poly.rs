use serde::{Deserialize, Serialize};

use super::expr::Expr::{self, *};
use crate::error::{Error, Result};

/// Real polynomial, coefficients in ascending order of power. Trailing
/// zeros are trimmed, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn constant(c: f64) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::new(vec![0.0, 1.0])
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> f64 {
        self.coeffs.last().copied().unwrap_or(0.0)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| k as f64 * c)
                .collect(),
        )
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        Polynomial::new(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&0.0) + other.coeffs.get(k).unwrap_or(&0.0))
                .collect(),
        )
    }

    pub fn scale(&self, s: f64) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.scale(-1.0))
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::default();
        }
        let mut out = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    pub fn powi(&self, k: u32) -> Polynomial {
        (0..k).fold(Polynomial::constant(1.0), |acc, _| acc.mul(self))
    }

    /// Only even (`Some(true)`) or only odd (`Some(false)`) powers present.
    pub fn parity(&self) -> Option<bool> {
        let odd_free = self.coeffs.iter().skip(1).step_by(2).all(|c| *c == 0.0);
        let even_free = self.coeffs.iter().step_by(2).all(|c| *c == 0.0);
        match (odd_free, even_free) {
            (true, _) => Some(true),
            (_, true) => Some(false),
            _ => None,
        }
    }

    pub fn to_expr(&self) -> Expr {
        self.coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| **c != 0.0)
            .fold(Expr::c(0.0), |acc, (k, &c)| {
                let term = match k {
                    0 => return acc + Expr::c(c),
                    _ => Expr::x().powi(k as i32),
                };
                if acc.as_const() == Some(0.0) {
                    Expr::c(c) * term
                } else if c < 0.0 {
                    acc - Expr::c(-c) * term
                } else {
                    acc + Expr::c(c) * term
                }
            })
    }

    /// Reads `e` as a polynomial if it is built from constants, `x`, sums,
    /// products, division by constants and non-negative integer powers.
    pub fn from_expr(e: &Expr) -> Option<Polynomial> {
        if e.is_constant() {
            return e.eval(0.0).ok().map(Polynomial::constant);
        }
        match e {
            Var => Some(Polynomial::x()),
            Neg(u) => Some(Self::from_expr(u)?.scale(-1.0)),
            Add(a, b) => Some(Self::from_expr(a)?.add(&Self::from_expr(b)?)),
            Sub(a, b) => Some(Self::from_expr(a)?.sub(&Self::from_expr(b)?)),
            Mul(a, b) => Some(Self::from_expr(a)?.mul(&Self::from_expr(b)?)),
            Div(a, b) if b.is_constant() => {
                let d = b.eval(0.0).ok()?;
                (d != 0.0).then(|| Self::from_expr(a).map(|p| p.scale(1.0 / d)))?
            }
            Pow(u, k) => {
                let k = k.as_const()?;
                (k >= 0.0 && k.fract() == 0.0 && k <= 64.0).then(|| Some(Self::from_expr(u)?.powi(k as u32)))?
            }
            _ => None,
        }
    }

    /// Real roots in `[lo, hi]`, ascending. Closed forms up to degree 2;
    /// above that the roots of the derivative split the window into
    /// monotone pieces, each bisected if it changes sign. Critical points
    /// where the value vanishes (even multiplicities) are kept as well.
    pub fn real_roots(&self, lo: f64, hi: f64) -> Vec<f64> {
        let mut out = match self.degree() {
            None | Some(0) => Vec::new(),
            Some(1) => vec![-self.coeffs[0] / self.coeffs[1]],
            Some(2) => quadratic_roots(self.coeffs[2], self.coeffs[1], self.coeffs[0]),
            Some(_) => {
                let scale = self.coeffs.iter().fold(0.0_f64, |m, c| m.max(c.abs()));
                let crit = self.derivative().real_roots(lo, hi);
                let mut knots = vec![lo];
                knots.extend(crit.iter().copied().filter(|c| *c > lo && *c < hi));
                knots.push(hi);
                let mut roots = Vec::new();
                for w in knots.windows(2) {
                    let (a, b) = (w[0], w[1]);
                    let (fa, fb) = (self.eval(a), self.eval(b));
                    if fa == 0.0 {
                        roots.push(a);
                    } else if fa * fb < 0.0 {
                        roots.push(bisect(|x| self.eval(x), a, b, fa));
                    }
                }
                if self.eval(hi) == 0.0 {
                    roots.push(hi);
                }
                for c in crit {
                    let tol = 1e-12 * scale * (1.0 + c.abs()).powi(self.coeffs.len() as i32);
                    if self.eval(c).abs() <= tol {
                        roots.push(c);
                    }
                }
                roots
            }
        };
        out.retain(|r| *r >= lo && *r <= hi);
        out.sort_by(f64::total_cmp);
        out.dedup_by(|a, b| (*a - *b).abs() <= 1e-9 * (1.0 + b.abs()));
        out
    }
}

/// Real roots of `ax² + bx + c`, ascending, with a double root reported
/// once. Uses the cancellation-free form of the solution formula.
pub fn quadratic_roots(a: f64, b: f64, c: f64) -> Vec<f64> {
    if a == 0.0 {
        return if b == 0.0 { Vec::new() } else { vec![-c / b] };
    }
    let disc = b * b - 4.0 * a * c;
    let scale = b * b + (4.0 * a * c).abs();
    if disc.abs() <= 1e-14 * scale {
        return vec![-b / (2.0 * a)];
    }
    if disc < 0.0 {
        return Vec::new();
    }
    let sign = if b >= 0.0 { 1.0 } else { -1.0 };
    let q = -0.5 * (b + sign * disc.sqrt());
    let mut r = vec![q / a, c / q];
    r.sort_by(f64::total_cmp);
    r
}

/// Bisection on a bracketing interval until it collapses to adjacent floats.
pub(crate) fn bisect(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, mut fa: f64) -> f64 {
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if (fm < 0.0) == (fa < 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

/// `num = quotient·den + remainder` with `deg remainder < deg den`.
pub fn poly_divide(num: &Polynomial, den: &Polynomial) -> Result<(Polynomial, Polynomial)> {
    let dd = den
        .degree()
        .ok_or_else(|| Error::invalid("division by the zero polynomial"))?;
    let lead = den.leading();
    let mut rem = num.coeffs.clone();
    let mut quot = vec![0.0; rem.len().saturating_sub(dd).max(1)];
    while rem.len() > dd && !rem.is_empty() {
        let k = rem.len() - 1 - dd;
        let f = rem[rem.len() - 1] / lead;
        quot[k] = f;
        for (i, d) in den.coeffs.iter().enumerate() {
            rem[k + i] -= f * d;
        }
        rem.pop();
    }
    Ok((Polynomial::new(quot), Polynomial::new(rem)))
}

/// Ratio of two polynomials.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Rational {
    pub num: Polynomial,
    pub den: Polynomial,
}

impl Rational {
    pub fn from_poly(p: Polynomial) -> Self {
        Rational {
            num: p,
            den: Polynomial::constant(1.0),
        }
    }

    /// Reads `e` as a ratio of polynomials, allowing quotients and integer
    /// powers of rational sub-expressions.
    pub fn from_expr(e: &Expr) -> Option<Rational> {
        if let Some(p) = Polynomial::from_expr(e) {
            return Some(Self::from_poly(p));
        }
        let r = match e {
            Neg(u) => {
                let u = Self::from_expr(u)?;
                Rational {
                    num: u.num.scale(-1.0),
                    den: u.den,
                }
            }
            Add(a, b) | Sub(a, b) => {
                let (a, b) = (Self::from_expr(a)?, Self::from_expr(b)?);
                let sign = if matches!(e, Add(..)) { 1.0 } else { -1.0 };
                if a.den == b.den {
                    Rational {
                        num: a.num.add(&b.num.scale(sign)),
                        den: a.den,
                    }
                } else {
                    Rational {
                        num: a.num.mul(&b.den).add(&b.num.mul(&a.den).scale(sign)),
                        den: a.den.mul(&b.den),
                    }
                }
            }
            Mul(a, b) => {
                let (a, b) = (Self::from_expr(a)?, Self::from_expr(b)?);
                Rational {
                    num: a.num.mul(&b.num),
                    den: a.den.mul(&b.den),
                }
            }
            Div(a, b) => {
                let (a, b) = (Self::from_expr(a)?, Self::from_expr(b)?);
                if b.num.is_zero() {
                    return None;
                }
                Rational {
                    num: a.num.mul(&b.den),
                    den: a.den.mul(&b.num),
                }
            }
            Pow(u, k) => {
                let k = k.as_const()?;
                if k.fract() != 0.0 || k.abs() > 64.0 {
                    return None;
                }
                let u = Self::from_expr(u)?;
                let (n, d) = (u.num.powi(k.abs() as u32), u.den.powi(k.abs() as u32));
                if k >= 0.0 {
                    Rational { num: n, den: d }
                } else {
                    Rational { num: d, den: n }
                }
            }
            _ => return None,
        };
        Some(r.normalized())
    }

    /// Makes the denominator monic.
    fn normalized(self) -> Rational {
        let lead = self.den.leading();
        if lead == 0.0 || lead == 1.0 {
            return self;
        }
        Rational {
            num: self.num.scale(1.0 / lead),
            den: self.den.scale(1.0 / lead),
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// Numerator degree below denominator degree.
    pub fn is_proper(&self) -> bool {
        match (self.num.degree(), self.den.degree()) {
            (None, _) => true,
            (Some(n), Some(d)) => n < d,
            _ => false,
        }
    }

    pub fn eval(&self, x: f64) -> Option<f64> {
        let d = self.den.eval(x);
        (d != 0.0).then(|| self.num.eval(x) / d)
    }

    /// Numerator of `f′` over the denominator `den²`.
    pub fn derivative(&self) -> Rational {
        Rational {
            num: self.num.derivative().mul(&self.den).sub(&self.num.mul(&self.den.derivative())),
            den: self.den.mul(&self.den),
        }
    }
}
