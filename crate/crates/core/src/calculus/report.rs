//! Curve sketching for polynomial and rational functions, following the
//! usual nine steps: domain, symmetry, roots, extrema, inflections,
//! monotonicity, curvature, asymptotes and range.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::expr::Expr;
use super::poly::{poly_divide, Rational};
use crate::error::{Error, Result};
use crate::linalg::format_real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Symmetry {
    Even,
    Odd,
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtremumKind {
    Min,
    Max,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Extremum {
    pub x: f64,
    pub y: f64,
    pub kind: ExtremumKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Trend {
    Increasing,
    Decreasing,
    Constant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Curvature {
    Convex,
    Concave,
    Linear,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Piece<T> {
    pub lo: f64,
    pub hi: f64,
    pub shape: T,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind")]
pub enum Asymptote {
    Vertical { x: f64 },
    Horizontal { y: f64 },
    Oblique { slope: f64, intercept: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FunctionClass {
    Polynomial,
    ProperRational,
    ImproperRational,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveReport {
    pub function: Expr,
    pub class: FunctionClass,
    pub window: (f64, f64),
    /// Window points outside the domain (denominator roots).
    pub excluded: Vec<f64>,
    pub symmetry: Symmetry,
    pub roots: Vec<f64>,
    pub extrema: Vec<Extremum>,
    pub inflections: Vec<Point>,
    pub monotonicity: Vec<Piece<Trend>>,
    pub curvature: Vec<Piece<Curvature>>,
    pub asymptotes: Vec<Asymptote>,
    /// Smallest and largest sampled value; `None` when no sample is finite.
    pub range: Option<(f64, f64)>,
    /// True when a pole inside the window makes the range unbounded.
    pub unbounded: bool,
}

/// Sign of `p/q` evaluated through the numerator and denominator.
fn sign_at(r: &Rational, x: f64) -> f64 {
    match r.eval(x) {
        Some(v) if v > 0.0 => 1.0,
        Some(v) if v < 0.0 => -1.0,
        _ => 0.0,
    }
}

/// Sign of `r` just left and right of `x`, probing outward until nonzero.
fn side_signs(r: &Rational, x: f64) -> (f64, f64) {
    let probe = |dir: f64| {
        let mut h = 1e-6 * (1.0 + x.abs());
        for _ in 0..8 {
            let s = sign_at(r, x + dir * h);
            if s != 0.0 {
                return s;
            }
            h *= 10.0;
        }
        0.0
    };
    (probe(-1.0), probe(1.0))
}

/// Splits `[lo, hi]` at `cuts` and labels each piece by the sign of `r`
/// at its midpoint, merging neighbours with the same label unless a pole
/// separates them.
fn pieces<T: Copy + PartialEq>(
    r: &Rational,
    lo: f64,
    hi: f64,
    cuts: &[f64],
    poles: &[f64],
    label: impl Fn(f64) -> T,
) -> Vec<Piece<T>> {
    let mut knots = vec![lo];
    let mut inner: Vec<f64> = cuts.iter().chain(poles).copied().filter(|c| *c > lo && *c < hi).collect();
    inner.sort_by(f64::total_cmp);
    inner.dedup();
    knots.extend(inner);
    knots.push(hi);
    let mut out: Vec<Piece<T>> = Vec::new();
    for w in knots.windows(2) {
        let shape = label(sign_at(r, 0.5 * (w[0] + w[1])));
        match out.last_mut() {
            Some(last) if last.shape == shape && !poles.contains(&w[0]) => last.hi = w[1],
            _ => out.push(Piece {
                lo: w[0],
                hi: w[1],
                shape,
            }),
        }
    }
    out
}

/// Curve report of a polynomial or rational `e` over `[lo, hi]`.
pub fn curve_report(e: &Expr, lo: f64, hi: f64) -> Result<CurveReport> {
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::invalid(format!("report window needs lo < hi, got [{lo}, {hi}]")));
    }
    let r = Rational::from_expr(e)
        .ok_or_else(|| Error::Unsupported(format!("{e} is neither a polynomial nor a rational function")))?;
    if r.den.is_zero() {
        return Err(Error::Unsupported("zero denominator".into()));
    }
    let class = if r.is_polynomial() {
        FunctionClass::Polynomial
    } else if r.is_proper() {
        FunctionClass::ProperRational
    } else {
        FunctionClass::ImproperRational
    };

    let excluded: Vec<f64> = r.den.real_roots(lo, hi);
    let poles: Vec<f64> = excluded
        .iter()
        .copied()
        .filter(|&c| r.num.eval(c).abs() > 1e-12 * (1.0 + r.num.coeffs().iter().map(|v| v.abs()).sum::<f64>()))
        .collect();
    let in_domain = |x: &f64| !excluded.iter().any(|c| (c - x).abs() <= 1e-9 * (1.0 + c.abs()));

    let symmetry = match (r.num.parity(), r.den.parity()) {
        _ if r.num.is_zero() => Symmetry::Even,
        (Some(a), Some(b)) if a == b => Symmetry::Even,
        (Some(_), Some(_)) => Symmetry::Odd,
        _ => Symmetry::None,
    };

    let roots: Vec<f64> = r.num.real_roots(lo, hi).into_iter().filter(in_domain).collect();

    // f′ = N₁/q², f″ = (N₁′q − 2N₁q′)/q³
    let n1 = r.num.derivative().mul(&r.den).sub(&r.num.mul(&r.den.derivative()));
    let n2 = n1.derivative().mul(&r.den).sub(&n1.mul(&r.den.derivative()).scale(2.0));
    let d1 = Rational {
        num: n1.clone(),
        den: r.den.mul(&r.den),
    };
    let d2 = Rational {
        num: n2.clone(),
        den: r.den.powi(3),
    };
    let value = |x: f64| r.eval(x).unwrap_or(f64::NAN);

    let critical: Vec<f64> = n1.real_roots(lo, hi).into_iter().filter(in_domain).collect();
    let mut extrema = Vec::new();
    for &c in &critical {
        let curv = d2.eval(c).unwrap_or(0.0);
        let scale = 1e-9 * (1.0 + n2.coeffs().iter().map(|v| v.abs()).sum::<f64>());
        let kind = if curv > scale {
            Some(ExtremumKind::Min)
        } else if curv < -scale {
            Some(ExtremumKind::Max)
        } else {
            // f″ vanishes: fall back to the sign change of f′
            match side_signs(&d1, c) {
                (l, r) if l < 0.0 && r > 0.0 => Some(ExtremumKind::Min),
                (l, r) if l > 0.0 && r < 0.0 => Some(ExtremumKind::Max),
                _ => None,
            }
        };
        if let Some(kind) = kind {
            extrema.push(Extremum { x: c, y: value(c), kind });
        }
    }

    let flex_candidates: Vec<f64> = n2.real_roots(lo, hi).into_iter().filter(in_domain).collect();
    let inflections: Vec<Point> = flex_candidates
        .iter()
        .filter(|&&c| {
            let (l, r) = side_signs(&d2, c);
            l * r < 0.0
        })
        .map(|&c| Point { x: c, y: value(c) })
        .collect();

    let monotonicity = pieces(&d1, lo, hi, &critical, &excluded, |s| {
        if s > 0.0 {
            Trend::Increasing
        } else if s < 0.0 {
            Trend::Decreasing
        } else {
            Trend::Constant
        }
    });
    let curvature = pieces(&d2, lo, hi, &flex_candidates, &excluded, |s| {
        if s > 0.0 {
            Curvature::Convex
        } else if s < 0.0 {
            Curvature::Concave
        } else {
            Curvature::Linear
        }
    });

    let mut asymptotes: Vec<Asymptote> = poles.iter().map(|&x| Asymptote::Vertical { x }).collect();
    if class != FunctionClass::Polynomial {
        let (q, _) = poly_divide(&r.num, &r.den)?;
        match q.degree() {
            None => asymptotes.push(Asymptote::Horizontal { y: 0.0 }),
            Some(0) => asymptotes.push(Asymptote::Horizontal { y: q.coeffs()[0] }),
            Some(1) => asymptotes.push(Asymptote::Oblique {
                slope: q.coeffs()[1],
                intercept: q.coeffs()[0],
            }),
            Some(_) => {}
        }
    } else if let Some(0) = r.num.degree() {
        asymptotes.push(Asymptote::Horizontal { y: r.num.coeffs()[0] });
    }

    let mut samples: Vec<f64> = (0..=1024)
        .map(|i| value(lo + (hi - lo) * i as f64 / 1024.0))
        .chain(extrema.iter().map(|e| e.y))
        .filter(|v| v.is_finite())
        .collect();
    samples.sort_by(f64::total_cmp);
    let range = samples.first().zip(samples.last()).map(|(a, b)| (*a, *b));

    Ok(CurveReport {
        function: e.clone(),
        class,
        window: (lo, hi),
        excluded,
        symmetry,
        roots,
        extrema,
        inflections,
        monotonicity,
        curvature,
        asymptotes,
        range,
        unbounded: !poles.is_empty(),
    })
}

impl fmt::Display for CurveReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[f64]| {
            if v.is_empty() {
                "none".to_string()
            } else {
                v.iter().map(|x| format_real(*x)).collect::<Vec<_>>().join(", ")
            }
        };
        let (lo, hi) = self.window;
        writeln!(f, "f(x) = {}  on [{}, {}]", self.function, format_real(lo), format_real(hi))?;
        let class = match self.class {
            FunctionClass::Polynomial => "polynomial",
            FunctionClass::ProperRational => "proper rational",
            FunctionClass::ImproperRational => "improper rational",
        };
        writeln!(f, "1 domain:       {class}; excluded {}", list(&self.excluded))?;
        let sym = match self.symmetry {
            Symmetry::Even => "even",
            Symmetry::Odd => "odd",
            Symmetry::None => "none",
        };
        writeln!(f, "2 symmetry:     {sym}")?;
        writeln!(f, "3 roots:        {}", list(&self.roots))?;
        let ext: Vec<String> = self
            .extrema
            .iter()
            .map(|e| {
                let k = if e.kind == ExtremumKind::Min { "min" } else { "max" };
                format!("{k} ({}, {})", format_real(e.x), format_real(e.y))
            })
            .collect();
        writeln!(f, "4 extrema:      {}", if ext.is_empty() { "none".into() } else { ext.join(", ") })?;
        let flex: Vec<String> = self
            .inflections
            .iter()
            .map(|p| format!("({}, {})", format_real(p.x), format_real(p.y)))
            .collect();
        writeln!(f, "5 inflections:  {}", if flex.is_empty() { "none".into() } else { flex.join(", ") })?;
        let mono: Vec<String> = self
            .monotonicity
            .iter()
            .map(|p| format!("[{}, {}] {:?}", format_real(p.lo), format_real(p.hi), p.shape).to_lowercase())
            .collect();
        writeln!(f, "6 monotonicity: {}", mono.join(", "))?;
        let curv: Vec<String> = self
            .curvature
            .iter()
            .map(|p| format!("[{}, {}] {:?}", format_real(p.lo), format_real(p.hi), p.shape).to_lowercase())
            .collect();
        writeln!(f, "7 curvature:    {}", curv.join(", "))?;
        let asym: Vec<String> = self
            .asymptotes
            .iter()
            .map(|a| match a {
                Asymptote::Vertical { x } => format!("x = {}", format_real(*x)),
                Asymptote::Horizontal { y } => format!("y = {}", format_real(*y)),
                Asymptote::Oblique { slope, intercept } => {
                    let lead = match *slope {
                        s if s == 1.0 => "x".to_string(),
                        s if s == -1.0 => "-x".to_string(),
                        s => format!("{}*x", format_real(s)),
                    };
                    match *intercept {
                        c if c == 0.0 => format!("y = {lead}"),
                        c if c < 0.0 => format!("y = {lead} - {}", format_real(-c)),
                        c => format!("y = {lead} + {}", format_real(c)),
                    }
                }
            })
            .collect();
        writeln!(f, "8 asymptotes:   {}", if asym.is_empty() { "none".into() } else { asym.join(", ") })?;
        match self.range {
            Some((a, b)) if !self.unbounded => {
                writeln!(f, "9 range:        [{}, {}] on the window", format_real(a), format_real(b))
            }
            _ => writeln!(f, "9 range:        unbounded near the poles"),
        }
    }
}
