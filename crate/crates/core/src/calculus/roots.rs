use super::diff::differentiate;
use super::expr::Expr;
use super::poly::{bisect, Polynomial};
use crate::error::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-10;
/// Grid cells of the sign-change scan.
pub const SCAN_CELLS: usize = 1024;

/// Real roots of `e` in `[lo, hi]`, ascending.
///
/// Polynomials of degree ≤ 2 use closed forms. Everything else is scanned
/// for sign changes on a uniform grid, each bracket bisected to `tol` and
/// polished with one Newton step. Roots closer than `10·tol` are merged and
/// candidates with `|f| > 1e-8·(1 + max|f|)` (poles, mostly) are dropped.
/// Roots without a sign change are found only if they hit a grid point.
pub fn roots(e: &Expr, lo: f64, hi: f64, tol: f64) -> Result<Vec<f64>> {
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::invalid(format!("root window needs lo < hi, got [{lo}, {hi}]")));
    }
    if !(tol > 0.0) {
        return Err(Error::invalid("tolerance must be positive"));
    }
    if let Some(p) = Polynomial::from_expr(e) {
        if p.degree().is_some_and(|d| d <= 2) {
            return Ok(p.real_roots(lo, hi));
        }
    }
    let h = (hi - lo) / SCAN_CELLS as f64;
    let grid: Vec<f64> = (0..=SCAN_CELLS)
        .map(|i| if i == SCAN_CELLS { hi } else { lo + i as f64 * h })
        .collect();
    let values: Vec<Option<f64>> = grid.iter().map(|&x| e.eval(x).ok()).collect();
    let fmax = values.iter().flatten().fold(0.0_f64, |m, v| m.max(v.abs()));
    let accept = 1e-8 * (1.0 + fmax);
    let f = |x: f64| e.eval(x).unwrap_or(f64::NAN);
    let df = differentiate(e);

    let mut found = Vec::new();
    for i in 0..SCAN_CELLS {
        let (a, b) = (grid[i], grid[i + 1]);
        let (Some(fa), Some(fb)) = (values[i], values[i + 1]) else {
            continue;
        };
        if fa == 0.0 {
            found.push(a);
            continue;
        }
        if fa * fb >= 0.0 {
            continue;
        }
        let (mut l, mut r, mut fl) = (a, b, fa);
        while r - l > tol {
            let m = 0.5 * (l + r);
            let fm = f(m);
            if fm.is_nan() {
                break;
            }
            if fm == 0.0 {
                l = m;
                r = m;
                break;
            }
            if (fm < 0.0) == (fl < 0.0) {
                l = m;
                fl = fm;
            } else {
                r = m;
            }
        }
        let mut x = 0.5 * (l + r);
        if let (Ok(fx), Ok(d)) = (e.eval(x), df.eval(x)) {
            if d != 0.0 {
                let polished = x - fx / d;
                if polished >= a && polished <= b && e.eval(polished).is_ok_and(|v| v.abs() <= fx.abs()) {
                    x = polished;
                }
            }
        }
        found.push(x);
    }
    if values[SCAN_CELLS] == Some(0.0) {
        found.push(hi);
    }
    found.retain(|&x| e.eval(x).is_ok_and(|v| v.abs() <= accept));
    found.sort_by(f64::total_cmp);
    let mut merged: Vec<f64> = Vec::with_capacity(found.len());
    for x in found {
        match merged.last() {
            Some(&last) if x - last <= 10.0 * tol => {}
            _ => merged.push(x),
        }
    }
    Ok(merged)
}

/// Root of a continuous `f` on a bracketing interval.
pub fn bisect_bracket(f: impl Fn(f64) -> f64, a: f64, b: f64) -> Option<f64> {
    let (fa, fb) = (f(a), f(b));
    if fa == 0.0 {
        return Some(a);
    }
    if fb == 0.0 {
        return Some(b);
    }
    (fa * fb < 0.0).then(|| bisect(f, a, b, fa))
}
