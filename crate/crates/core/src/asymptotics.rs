//! Dedekind sums, the Rademacher-type exact formula for `σmex(n)`, the
//! closed-form asymptotics and the `q → 1⁻` ratio checks.

use std::f64::consts::{PI, SQRT_2};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::qfunctions::{distinct_gen, sigma_d_mex_series, Form};
use crate::series::recommended_order;

pub type Rational = BigRational;

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Largest tolerated `|Im A_k(n)|`.
pub const IMAG_TOLERANCE: f64 = 1e-9;

/// Coefficients of the small-`t` expansion of `σ(e^{-t})`, lowest degree first.
pub const ZAGIER_COEFFS: [(i64, i64); 6] = [
    (2, 1),
    (-2, 1),
    (5, 1),
    (-55, 3),
    (1073, 12),
    (-32671, 60),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AsymKind {
    SigmaMex,
    SigmaDMex,
    SigmaL,
}

/// One truncation of the Rademacher-type series for `σmex(n)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HrrResult {
    pub n: u64,
    pub terms: u64,
    pub partial_sum: f64,
    pub rounded: i64,
    pub residual: f64,
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `((x))`: `x - ⌊x⌋ - 1/2` off the integers, 0 on them.
pub fn sawtooth(x: &Rational) -> Rational {
    if x.is_integer() {
        Rational::zero()
    } else {
        x - x.floor() - rat(1, 2)
    }
}

/// `s(h,k) = Σ_{r=1}^{k-1} ((r/k))((hr/k))`, by direct summation.
///
/// Each term is `(2r - k)(2(hr mod k) - k) / 4k²` (zero when `k | hr`), so
/// the numerator is accumulated in integers and reduced once.
pub fn dedekind_sum(h: i64, k: i64) -> Rational {
    assert!(k >= 1, "Dedekind sum needs k ≥ 1");
    let (h, k) = (h as i128, k as i128);
    let numerator: i128 = (1..k)
        .map(|r| {
            let hr = (h * r).rem_euclid(k);
            if hr == 0 {
                0
            } else {
                (2 * r - k) * (2 * hr - k)
            }
        })
        .sum();
    Rational::new(BigInt::from(numerator), BigInt::from(4 * k * k))
}

/// `A_k(n) = Σ_{0≤h<k, gcd(h,k)=1} exp(2πi(s(h,k) - s(2h,k) - hn/k))`.
///
/// Phases are reduced mod 1 exactly before exponentiation. Returns the real
/// part and `|Im|`, which must stay below [`IMAG_TOLERANCE`].
pub fn kloosterman_a(k: u64, n: u64) -> Result<(f64, f64)> {
    assert!(k >= 1, "A_k needs k ≥ 1");
    let ki = k as i64;
    let n_mod = (n % k) as i64;
    let (mut re, mut im) = (0.0, 0.0);
    for h in 0..ki {
        if h.gcd(&ki) != 1 {
            continue;
        }
        let phase = dedekind_sum(h, ki) - dedekind_sum(2 * h, ki) - rat(h * n_mod, ki);
        let reduced = &phase - phase.floor();
        let angle = 2.0 * PI * reduced.to_f64().expect("phase in [0, 1)");
        re += angle.cos();
        im += angle.sin();
    }
    if im.abs() > IMAG_TOLERANCE {
        return Err(Error::NumericalIntegrity {
            k,
            n,
            residual: im.abs(),
        });
    }
    Ok((re, im.abs()))
}

/// Modified Bessel function `I₁(x)` from its power series, stopped once a
/// term drops below `1e-17` of the running sum.
pub fn bessel_i1(x: f64) -> f64 {
    assert!(x >= 0.0, "bessel_i1 is only used for x ≥ 0");
    if x == 0.0 {
        return 0.0;
    }
    let half = x / 2.0;
    let sq = half * half;
    let mut term = half;
    let mut sum = half;
    let mut j = 0.0;
    loop {
        j += 1.0;
        term *= sq / (j * (j + 1.0));
        sum += term;
        if term < 1e-17 * sum {
            return sum;
        }
    }
}

/// Partial sum over `k ≤ terms` of
/// `π/(2√(6(n+1/12))) Σ A_{2k-1}(n)/(2k-1) · I₁(π√(2(n+1/12))/(√3(2k-1)))`.
pub fn hrr_sigma_mex(n: u64, terms: u64) -> Result<HrrResult> {
    if n == 0 || terms == 0 {
        return Err(Error::Precondition("hrr needs n ≥ 1 and at least one term".into()));
    }
    let shifted = n as f64 + 1.0 / 12.0;
    let prefactor = PI / (2.0 * (6.0 * shifted).sqrt());
    let arg = PI * (2.0 * shifted).sqrt() / 3f64.sqrt();
    let mut sum = 0.0;
    for k in 1..=terms {
        let odd = 2 * k - 1;
        let (a, _) = kloosterman_a(odd, n)?;
        sum += a / odd as f64 * bessel_i1(arg / odd as f64);
    }
    let partial_sum = prefactor * sum;
    let rounded = partial_sum.round();
    Ok(HrrResult {
        n,
        terms,
        partial_sum,
        rounded: rounded as i64,
        residual: (partial_sum - rounded).abs(),
    })
}

/// Closed-form leading asymptotics.
pub fn asym_value(kind: AsymKind, n: u64) -> f64 {
    let n = n as f64;
    match kind {
        AsymKind::SigmaMex => {
            (PI * (2.0 * n / 3.0).sqrt()).exp() / (4.0 * (6.0 * n.powi(3)).powf(0.25))
        }
        AsymKind::SigmaDMex => (PI * (n / 3.0).sqrt()).exp() / (2.0 * (3.0 * n.powi(3)).powf(0.25)),
        AsymKind::SigmaL => {
            ((6.0 * n / (PI * PI)).ln() + 2.0 * EULER_GAMMA) / (4.0 * PI * (2.0 * n).sqrt())
                * (PI * (2.0 * n / 3.0).sqrt()).exp()
        }
    }
}

/// Degree-5 expansion `2 - 2t + 5t² - (55/3)t³ + (1073/12)t⁴ - (32671/60)t⁵`.
pub fn zagier_value(t: f64) -> f64 {
    ZAGIER_COEFFS
        .iter()
        .rev()
        .fold(0.0, |acc, &(num, den)| acc * t + num as f64 / den as f64)
}

fn check_ratio_preconditions(t: f64, order: usize) -> Result<()> {
    if !(t > 0.0 && t <= 0.25) {
        return Err(Error::Precondition(format!("t = {t} is outside (0, 0.25]")));
    }
    let required = recommended_order(t);
    if order < required {
        return Err(Error::InsufficientOrder { t, order, required });
    }
    Ok(())
}

/// `B(e^{-t}) / (√2·exp(π²/(12t)))` with `B = (-q;q)_∞ σ(q)`.
pub fn tauberian_ratio(t: f64, order: usize) -> Result<f64> {
    check_ratio_preconditions(t, order)?;
    let b = sigma_d_mex_series(order, Form::Canonical)?;
    let value = b.eval_at((-t).exp())?;
    Ok(value / (SQRT_2 * (PI * PI / (12.0 * t)).exp()))
}

/// `(-e^{-t};e^{-t})_∞ / ((1/√2)·exp(π²/(12t)))`.
pub fn eta_ratio(t: f64, order: usize) -> Result<f64> {
    check_ratio_preconditions(t, order)?;
    let value = distinct_gen(order).eval_at((-t).exp())?;
    Ok(value / ((PI * PI / (12.0 * t)).exp() / SQRT_2))
}

/// `|σ(e^{-t}) - zagier_value(t)|` using a series of order `ceil(8/t²)`.
pub fn zagier_error(t: f64) -> Result<f64> {
    let sigma = crate::qfunctions::sigma_series(recommended_order(t), Form::Canonical)?;
    Ok((sigma.eval_at((-t).exp())? - zagier_value(t)).abs())
}
