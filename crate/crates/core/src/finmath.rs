//! Sequences and series, interest, installment savings, redemption,
//! pensions and depreciation, all special cases of one master formula
//! `K_n = K₀qⁿ + R(qⁿ−1)/(q−1)`.
//!
//! Amounts are in currency units (CU), rates `p` in percent per year and
//! `q = 1 + p/100` is the interest factor.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn interest_factor(p: f64) -> f64 {
    1.0 + p / 100.0
}

/// `Σ_{k=0}^{n−1} q^k`, with the `q = 1` limit handled.
pub fn geometric_sum(q: f64, n: f64) -> f64 {
    if (q - 1.0).abs() < 1e-12 {
        n
    } else {
        (q.powf(n) - 1.0) / (q - 1.0)
    }
}

fn positive(name: &str, v: f64) -> Result<f64> {
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(Error::invalid(format!("{name} must be positive, got {v}")))
    }
}

fn growing(q: f64) -> Result<f64> {
    if q.is_finite() && q > 1.0 {
        Ok(q)
    } else {
        Err(Error::invalid(format!("interest factor must exceed 1, got {q}")))
    }
}

fn count_known(values: &[Option<f64>]) -> usize {
    values.iter().filter(|v| v.is_some()).count()
}

fn require_known(values: &[Option<f64>], want: usize) -> Result<()> {
    let got = count_known(values);
    if got == want {
        Ok(())
    } else {
        Err(Error::invalid(format!(
            "exactly {want} of {} quantities must be given, got {got}",
            values.len()
        )))
    }
}

/// Finds a root of `f` on `q ∈ (1, 11]` by scanning for the first sign
/// change and bisecting it.
fn solve_factor(f: impl Fn(f64) -> f64) -> Result<f64> {
    const CELLS: usize = 4000;
    let at = |i: usize| 1.0 + 10.0 * (i as f64 / CELLS as f64).powi(2);
    let mut lo = 1.0 + 1e-12;
    let mut flo = f(lo);
    for i in 1..=CELLS {
        let hi = at(i);
        let fhi = f(hi);
        if flo == 0.0 {
            return Ok(lo);
        }
        if flo.signum() != fhi.signum() {
            let (mut a, mut b, mut fa) = (lo, hi, flo);
            for _ in 0..200 {
                let mid = 0.5 * (a + b);
                let fm = f(mid);
                if fm == 0.0 || b - a <= 1e-15 * mid {
                    return Ok(mid);
                }
                if fa.signum() == fm.signum() {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            return Ok(0.5 * (a + b));
        }
        lo = hi;
        flo = fhi;
    }
    Err(Error::NoSolution("no interest factor in (1, 11] fits the given values".into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SequenceKind {
    Arithmetical,
    Geometrical,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SequenceSpec {
    kind: SequenceKind,
    a1: f64,
    step: f64,
}

impl SequenceSpec {
    /// Neighbouring elements differ by `d ≠ 0`.
    pub fn arithmetical(a1: f64, d: f64) -> Result<Self> {
        if d == 0.0 || !d.is_finite() || !a1.is_finite() {
            return Err(Error::invalid("arithmetical sequences need a finite d ≠ 0"));
        }
        Ok(SequenceSpec {
            kind: SequenceKind::Arithmetical,
            a1,
            step: d,
        })
    }

    /// Neighbouring elements have quotient `q ∉ {0, 1}`.
    pub fn geometrical(a1: f64, q: f64) -> Result<Self> {
        if q == 0.0 || q == 1.0 || !q.is_finite() || !a1.is_finite() {
            return Err(Error::invalid("geometrical sequences need a finite q ∉ {0, 1}"));
        }
        Ok(SequenceSpec {
            kind: SequenceKind::Geometrical,
            a1,
            step: q,
        })
    }

    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    pub fn first(&self) -> f64 {
        self.a1
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn term(&self, n: u32) -> Result<f64> {
        if n == 0 {
            return Err(Error::invalid("sequence index starts at 1"));
        }
        Ok(match self.kind {
            SequenceKind::Arithmetical => self.a1 + f64::from(n - 1) * self.step,
            SequenceKind::Geometrical => self.a1 * self.step.powi(n as i32 - 1),
        })
    }

    /// Applies the defining recursion `n − 1` times.
    pub fn term_recursive(&self, n: u32) -> Result<f64> {
        if n == 0 {
            return Err(Error::invalid("sequence index starts at 1"));
        }
        let mut a = self.a1;
        for _ in 1..n {
            a = match self.kind {
                SequenceKind::Arithmetical => a + self.step,
                SequenceKind::Geometrical => a * self.step,
            };
        }
        Ok(a)
    }

    pub fn sum(&self, n: u32) -> Result<f64> {
        if n == 0 {
            return Err(Error::invalid("series need at least one term"));
        }
        let nf = f64::from(n);
        Ok(match self.kind {
            SequenceKind::Arithmetical => nf * self.a1 + 0.5 * self.step * (nf - 1.0) * nf,
            SequenceKind::Geometrical => self.a1 * (self.step.powi(n as i32) - 1.0) / (self.step - 1.0),
        })
    }
}

/// `K_n = K₀qⁿ`.
pub fn compound(k0: f64, q: f64, n: f64) -> f64 {
    k0 * q.powf(n)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct Compound {
    pub k0: Option<f64>,
    pub kn: Option<f64>,
    pub q: Option<f64>,
    pub n: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CompoundSolution {
    pub k0: f64,
    pub kn: f64,
    pub q: f64,
    pub n: f64,
}

/// Completes `K_n = K₀qⁿ` from any three of its four quantities.
pub fn compound_solve(known: &Compound) -> Result<CompoundSolution> {
    require_known(&[known.k0, known.kn, known.q, known.n], 3)?;
    for (name, v) in [("K0", known.k0), ("Kn", known.kn), ("q", known.q), ("n", known.n)] {
        if let Some(v) = v {
            positive(name, v)?;
        }
    }
    let s = match *known {
        Compound { k0: Some(k0), q: Some(q), n: Some(n), .. } => CompoundSolution { k0, kn: compound(k0, q, n), q, n },
        Compound { kn: Some(kn), q: Some(q), n: Some(n), .. } => CompoundSolution { k0: kn / q.powf(n), kn, q, n },
        Compound { k0: Some(k0), kn: Some(kn), n: Some(n), .. } => CompoundSolution { k0, kn, q: (kn / k0).powf(1.0 / n), n },
        Compound { k0: Some(k0), kn: Some(kn), q: Some(q), .. } => {
            if q == 1.0 {
                return Err(Error::invalid("q = 1 leaves the duration undetermined"));
            }
            CompoundSolution { k0, kn, q, n: (kn / k0).ln() / q.ln() }
        }
        _ => unreachable!("three values checked above"),
    };
    Ok(s)
}

/// Effective annual `(q_eff, p_eff)` for `m` compounding periods at the
/// `m`-th part of the nominal rate.
pub fn effective_rate(p_nom: f64, m: u32) -> Result<(f64, f64)> {
    positive("nominal rate", p_nom)?;
    if m == 0 {
        return Err(Error::invalid("at least one period per year"));
    }
    let growth = f64::from(m) * (p_nom / (100.0 * f64::from(m))).ln_1p();
    Ok((growth.exp(), 100.0 * growth.exp_m1()))
}

/// Installments `E` paid at the start of each year: `K_n = Eq(qⁿ−1)/(q−1)`.
pub fn installment_balance(e: f64, q: f64, n: f64) -> f64 {
    e * q * geometric_sum(q, n)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct Installment {
    pub kn: Option<f64>,
    pub e: Option<f64>,
    pub q: Option<f64>,
    pub n: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InstallmentSolution {
    pub kn: f64,
    pub e: f64,
    pub q: f64,
    pub n: f64,
    /// Present value `B₀ = E(qⁿ−1)/(qⁿ⁻¹(q−1))`.
    pub b0: f64,
}

pub fn installment_solve(known: &Installment) -> Result<InstallmentSolution> {
    require_known(&[known.kn, known.e, known.q, known.n], 3)?;
    for (name, v) in [("Kn", known.kn), ("E", known.e), ("n", known.n)] {
        if let Some(v) = v {
            positive(name, v)?;
        }
    }
    if let Some(q) = known.q {
        growing(q)?;
    }
    let (kn, e, q, n) = match *known {
        Installment { e: Some(e), q: Some(q), n: Some(n), .. } => (installment_balance(e, q, n), e, q, n),
        Installment { kn: Some(kn), q: Some(q), n: Some(n), .. } => (kn, kn / (q * geometric_sum(q, n)), q, n),
        Installment { kn: Some(kn), e: Some(e), q: Some(q), .. } => {
            let n = (1.0 + (q - 1.0) * kn / (e * q)).ln() / q.ln();
            (kn, e, q, n)
        }
        Installment { kn: Some(kn), e: Some(e), n: Some(n), .. } => {
            if kn <= e * n {
                return Err(Error::invalid("Kn must exceed n·E for a positive rate"));
            }
            let q = solve_factor(|q| installment_balance(e, q, n) / kn - 1.0)?;
            (kn, e, q, n)
        }
        _ => unreachable!("three values checked above"),
    };
    let b0 = e * geometric_sum(q, n) / q.powf(n - 1.0);
    Ok(InstallmentSolution { kn, e, q, n, b0 })
}

/// Remaining debt `R_n = R₀qⁿ − A(qⁿ−1)/(q−1)`.
pub fn remaining_debt(r0: f64, q: f64, a: f64, n: f64) -> f64 {
    r0 * q.powf(n) - a * geometric_sum(q, n)
}

/// One year of a payment plan. For redemption plans `payment` is the
/// redemption part `T_n`; for pensions it is the year's withdrawals `ma`;
/// for depreciation it is the year's loss of value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScheduleRow {
    pub year: u32,
    pub interest: f64,
    pub payment: f64,
    pub balance: f64,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Schedule {
    pub rows: Vec<ScheduleRow>,
    pub meta: BTreeMap<String, f64>,
}

impl Schedule {
    pub fn to_csv(&self) -> String {
        let cent = |v: f64| {
            let r = (v * 100.0).round() / 100.0;
            format!("{:.2}", if r == 0.0 { 0.0 } else { r })
        };
        let mut out = String::from("year,interest,payment,balance\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{}\n",
                r.year,
                cent(r.interest),
                cent(r.payment),
                cent(r.balance)
            ));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("schedules always serialize")
    }

    pub fn last_balance(&self) -> Option<f64> {
        self.rows.last().map(|r| r.balance)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "value")]
pub enum Repayment {
    /// Initial redemption rate `t` in percent.
    Rate(f64),
    /// Constant annuity `A` in CU.
    Annuity(f64),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RedemptionPlan {
    pub annuity: f64,
    pub rate: f64,
    /// Real-valued contract period solving `R_n = 0`.
    pub duration: f64,
    pub schedule: Schedule,
}

/// Debt repaid in constant annuities `A = R₀(p+t)/100`. The year in which
/// the debt would turn negative gets a reduced final annuity.
pub fn redemption_plan(r0: f64, p: f64, repayment: Repayment, horizon: Option<u32>) -> Result<RedemptionPlan> {
    positive("R0", r0)?;
    positive("p", p)?;
    let q = interest_factor(p);
    let (annuity, rate) = match repayment {
        Repayment::Rate(t) => {
            if !(t > 0.0) {
                return Err(Error::invalid("redemption rate must be positive or the debt never shrinks"));
            }
            (r0 * (p + t) / 100.0, t)
        }
        Repayment::Annuity(a) => {
            if !(a > r0 * (q - 1.0)) {
                return Err(Error::invalid(format!(
                    "annuity {a} does not exceed the first year's interest {}",
                    r0 * (q - 1.0)
                )));
            }
            (a, 100.0 * a / r0 - p)
        }
    };
    let duration = (annuity / (annuity - r0 * (q - 1.0))).ln() / q.ln();
    let years = horizon.unwrap_or(duration.ceil() as u32);
    let close_tol = 1e-9 * r0;
    let mut rows = Vec::new();
    let mut balance = r0;
    for year in 1..=years {
        if balance <= close_tol {
            break;
        }
        let interest = balance * (q - 1.0);
        let due = balance * q;
        let (payment, next) = if due - annuity <= close_tol {
            (balance, 0.0)
        } else {
            (annuity - interest, due - annuity)
        };
        rows.push(ScheduleRow {
            year,
            interest,
            payment,
            balance: next,
        });
        balance = next;
    }
    let meta = BTreeMap::from([
        ("R0".to_string(), r0),
        ("p".to_string(), p),
        ("q".to_string(), q),
        ("t".to_string(), rate),
        ("A".to_string(), annuity),
        ("duration".to_string(), duration),
    ]);
    Ok(RedemptionPlan {
        annuity,
        rate,
        duration,
        schedule: Schedule { rows, meta },
    })
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct Redemption {
    pub rn: Option<f64>,
    pub r0: Option<f64>,
    pub q: Option<f64>,
    pub n: Option<f64>,
    pub a: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RedemptionSolution {
    pub rn: f64,
    pub r0: f64,
    pub q: f64,
    pub n: f64,
    pub a: f64,
    /// Initial redemption rate in percent, `100A/R₀ − p`.
    pub t: f64,
}

/// Completes `R_n = R₀qⁿ − A(qⁿ−1)/(q−1)` from four of its five quantities.
pub fn redemption_solve(known: &Redemption) -> Result<RedemptionSolution> {
    require_known(&[known.rn, known.r0, known.q, known.n, known.a], 4)?;
    for (name, v) in [("R0", known.r0), ("n", known.n), ("A", known.a)] {
        if let Some(v) = v {
            positive(name, v)?;
        }
    }
    if let Some(rn) = known.rn {
        if !(rn >= 0.0) {
            return Err(Error::invalid("remaining debt must be non-negative"));
        }
    }
    if let Some(q) = known.q {
        growing(q)?;
    }
    let (rn, r0, q, n, a) = match *known {
        Redemption { r0: Some(r0), q: Some(q), n: Some(n), a: Some(a), .. } => (remaining_debt(r0, q, a, n), r0, q, n, a),
        Redemption { rn: Some(rn), q: Some(q), n: Some(n), a: Some(a), .. } => {
            (rn, (rn + a * geometric_sum(q, n)) / q.powf(n), q, n, a)
        }
        Redemption { rn: Some(rn), r0: Some(r0), q: Some(q), n: Some(n), .. } => {
            (rn, r0, q, n, (r0 * q.powf(n) - rn) / geometric_sum(q, n))
        }
        Redemption { rn: Some(rn), r0: Some(r0), q: Some(q), a: Some(a), .. } => {
            let start = a - r0 * (q - 1.0);
            let end = a - rn * (q - 1.0);
            if start <= 0.0 || end <= 0.0 {
                return Err(Error::invalid("annuity too small to reduce the debt"));
            }
            (rn, r0, q, (end / start).ln() / q.ln(), a)
        }
        Redemption { rn: Some(rn), r0: Some(r0), n: Some(n), a: Some(a), .. } => {
            let q = solve_factor(|q| (remaining_debt(r0, q, a, n) - rn) / r0)?;
            (rn, r0, q, n, a)
        }
        _ => unreachable!("four values checked above"),
    };
    if rn < -1e-9 * r0.max(1.0) || r0 <= 0.0 || a <= 0.0 {
        return Err(Error::invalid("the given values are inconsistent"));
    }
    Ok(RedemptionSolution {
        rn,
        r0,
        q,
        n,
        a,
        t: 100.0 * a / r0 - 100.0 * (q - 1.0),
    })
}

/// `[m + ½(m+1)(q−1)]`, the yearly withdrawal weight of a pension paid at
/// the start of each of `m` intervals.
pub fn pension_weight(q: f64, m: u32) -> f64 {
    let m = f64::from(m);
    m + 0.5 * (m + 1.0) * (q - 1.0)
}

/// `K_n = K₀qⁿ − [m + ½(m+1)(q−1)]a(qⁿ−1)/(q−1)`.
pub fn pension_balance(k0: f64, q: f64, m: u32, a: f64, n: f64) -> f64 {
    k0 * q.powf(n) - pension_weight(q, m) * a * geometric_sum(q, n)
}

/// Capital needed for `n` years of payments `a`, `m` times a year.
pub fn pension_present_value(q: f64, m: u32, a: f64, n: f64) -> f64 {
    pension_weight(q, m) * a * geometric_sum(q, n) / q.powf(n)
}

/// Payment that keeps the capital constant forever.
pub fn everlasting_pension(k0: f64, q: f64, m: u32) -> f64 {
    k0 * (q - 1.0) / pension_weight(q, m)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PensionPlan {
    pub q: f64,
    pub m: u32,
    pub a: f64,
    pub first_year_interest: f64,
    pub first_year_balance: f64,
    /// Real-valued duration until the capital is used up; `None` when it
    /// never runs out.
    pub duration: Option<f64>,
    pub everlasting: bool,
    pub everlasting_amount: f64,
    pub schedule: Schedule,
}

impl PensionPlan {
    /// Simple interest `Z_{k/m} = (K − ka)(q−1)/m` for each interval of
    /// `year`, where `K` is the balance at the start of that year.
    pub fn interval_interest(&self, year: u32) -> Option<Vec<f64>> {
        let start = match year {
            0 => return None,
            1 => *self.schedule.meta.get("K0")?,
            y => self.schedule.rows.get(y as usize - 2)?.balance,
        };
        self.schedule.rows.get(year as usize - 1)?;
        Some(
            (1..=self.m)
                .map(|k| (start - f64::from(k) * self.a) * (self.q - 1.0) / f64::from(self.m))
                .collect(),
        )
    }
}

/// Pension of `a` CU paid at the start of each of `m` intervals a year out
/// of the capital `K0`. Without a horizon, the schedule runs for the full
/// years of the duration; an everlasting-capable plan then needs a horizon.
pub fn pension_plan(k0: f64, p: f64, m: u32, a: f64, horizon: Option<u32>) -> Result<PensionPlan> {
    positive("K0", k0)?;
    positive("p", p)?;
    positive("a", a)?;
    if m == 0 {
        return Err(Error::invalid("at least one withdrawal per year"));
    }
    let q = interest_factor(p);
    let w = pension_weight(q, m);
    let mf = f64::from(m);
    let half = 0.5 * (mf + 1.0) * a;
    let drain = w * a - k0 * (q - 1.0);
    let duration = (drain > 0.0).then(|| (w * a / drain).ln() / q.ln());
    let years = match (horizon, duration) {
        (Some(h), _) => h,
        (None, Some(d)) => d.floor() as u32,
        (None, None) => {
            return Err(Error::invalid("the capital never runs out; a horizon is required"))
        }
    };
    let mut rows = Vec::new();
    let mut balance = k0;
    for year in 1..=years {
        let interest = (balance - half) * (q - 1.0);
        let next = balance - mf * a + interest;
        if next < -1e-9 * k0 {
            break;
        }
        rows.push(ScheduleRow {
            year,
            interest,
            payment: mf * a,
            balance: next,
        });
        balance = next;
    }
    let first_year_interest = (k0 - half) * (q - 1.0);
    let meta = BTreeMap::from([
        ("K0".to_string(), k0),
        ("p".to_string(), p),
        ("q".to_string(), q),
        ("m".to_string(), mf),
        ("a".to_string(), a),
    ]);
    Ok(PensionPlan {
        q,
        m,
        a,
        first_year_interest,
        first_year_balance: k0 - mf * a + first_year_interest,
        duration,
        everlasting: duration.is_none(),
        everlasting_amount: everlasting_pension(k0, q, m),
        schedule: Schedule { rows, meta },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "value")]
pub enum Depreciation {
    /// Equal annual amounts over a useful life of `N` years.
    Linear(u32),
    /// Fixed percentage `p` of the remaining value each year.
    Declining(f64),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DepreciationResult {
    pub remaining: f64,
    pub schedule: Schedule,
}

pub fn depreciation(k0: f64, method: Depreciation, n: u32) -> Result<DepreciationResult> {
    positive("K0", k0)?;
    if n == 0 {
        return Err(Error::invalid("depreciation runs for at least one year"));
    }
    let value_after: Box<dyn Fn(u32) -> f64> = match method {
        Depreciation::Linear(life) => {
            if life == 0 || n > life {
                return Err(Error::invalid(format!("year {n} lies beyond the useful life of {life} years")));
            }
            let d = k0 / f64::from(life);
            Box::new(move |k| k0 - f64::from(k) * d)
        }
        Depreciation::Declining(p) => {
            if !(p > 0.0 && p < 100.0) {
                return Err(Error::invalid(format!("depreciation percentage {p} outside (0, 100)")));
            }
            let q = 1.0 - p / 100.0;
            Box::new(move |k| k0 * q.powi(k as i32))
        }
    };
    let rows: Vec<ScheduleRow> = (1..=n)
        .map(|year| ScheduleRow {
            year,
            interest: 0.0,
            payment: value_after(year - 1) - value_after(year),
            balance: value_after(year),
        })
        .collect();
    let mut meta = BTreeMap::from([("K0".to_string(), k0)]);
    match method {
        Depreciation::Linear(life) => meta.insert("N".to_string(), f64::from(life)),
        Depreciation::Declining(p) => meta.insert("p".to_string(), p),
    };
    Ok(DepreciationResult {
        remaining: value_after(n),
        schedule: Schedule { rows, meta },
    })
}

/// Years of declining-balance depreciation at `p` percent to reach `rn`.
pub fn declining_years(k0: f64, rn: f64, p: f64) -> Result<f64> {
    positive("K0", k0)?;
    positive("Rn", rn)?;
    if !(p > 0.0 && p < 100.0) {
        return Err(Error::invalid("depreciation percentage outside (0, 100)"));
    }
    Ok((rn / k0).ln() / (1.0 - p / 100.0).ln())
}

/// Percentage that brings `k0` down to `rn` in `n` years.
pub fn declining_rate(k0: f64, rn: f64, n: f64) -> Result<f64> {
    positive("K0", k0)?;
    positive("Rn", rn)?;
    positive("n", n)?;
    if rn >= k0 {
        return Err(Error::invalid("remaining value must be below the initial value"));
    }
    Ok(100.0 * (1.0 - (rn / k0).powf(1.0 / n)))
}

/// `K_n = K₀qⁿ + R(qⁿ−1)/(q−1)`.
pub fn master_formula(k0: f64, q: f64, r: f64, n: u32) -> Result<f64> {
    if !(q > 0.0) || q == 1.0 || !q.is_finite() {
        return Err(Error::invalid(format!("master formula needs q > 0, q ≠ 1, got {q}")));
    }
    let qn = q.powi(n as i32);
    Ok(k0 * qn + r * (qn - 1.0) / (q - 1.0))
}
