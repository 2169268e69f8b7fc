//! Truncated formal power series in `q` with exact big-integer coefficients.
//!
//! Every generating function in the crate is carried by [`IntSeries`]. A
//! series of order `N` stores exactly `N + 1` coefficients and is only
//! meaningful up to `q^N`; binary operations truncate to the smaller order
//! so a missing coefficient can never be mistaken for a zero one.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntSeries {
    coeffs: Vec<BigInt>,
}

/// Sign of the base `x = ±q^a` in a q-Pochhammer product `(x; q^step)_count`,
/// written so that each factor is `1 + sign·q^e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorSign {
    Plus,
    Minus,
}

impl FactorSign {
    fn apply(self, value: &BigInt) -> BigInt {
        match self {
            FactorSign::Plus => value.clone(),
            FactorSign::Minus => -value,
        }
    }
}

/// Number of factors in a q-Pochhammer product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PochLength {
    Finite(usize),
    Infinite,
}

impl IntSeries {
    /// Builds a series from exactly `order + 1` coefficients.
    pub fn new(coeffs: Vec<BigInt>, order: usize) -> Result<Self> {
        if coeffs.len() != order + 1 {
            return Err(Error::LengthMismatch {
                order,
                expected: order + 1,
                got: coeffs.len(),
            });
        }
        Ok(IntSeries { coeffs })
    }

    pub fn from_i64s(coeffs: &[i64], order: usize) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect(), order)
    }

    pub fn zero(order: usize) -> Self {
        IntSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(1, 0, order)
    }

    /// `c·q^a` truncated to `order` (the zero series when `a > order`).
    pub fn monomial(c: i64, a: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if a <= order {
            s.coeffs[a] = BigInt::from(c);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// The coefficient of `q^n`. Asking past the truncation order is an error.
    pub fn coefficient(&self, n: usize) -> Result<&BigInt> {
        self.coeffs.get(n).ok_or(Error::OutOfRange {
            index: n,
            order: self.order(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Restricts the series to a lower order. Orders above the current one
    /// are clamped, never padded.
    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order()) + 1;
        IntSeries {
            coeffs: self.coeffs[..keep].to_vec(),
        }
    }

    /// Returns `c·q^a·f`, truncated to the order of `f`.
    pub fn scale_shift(&self, c: &BigInt, a: usize) -> Self {
        let order = self.order();
        let mut out = Self::zero(order);
        if c.is_zero() {
            return out;
        }
        for (n, coeff) in self.coeffs.iter().enumerate() {
            let target = n + a;
            if target > order {
                break;
            }
            if !coeff.is_zero() {
                out.coeffs[target] = coeff * c;
            }
        }
        out
    }

    /// Multiplicative inverse for a series with constant term `±1`, using
    /// `g_n = -(1/f_0) Σ_{i=1..n} f_i g_{n-i}`.
    pub fn invert(&self) -> Result<Self> {
        let f0 = &self.coeffs[0];
        let unit_sign = if f0.is_one() {
            FactorSign::Plus
        } else if (-f0).is_one() {
            FactorSign::Minus
        } else {
            return Err(Error::NotInvertible(f0.to_string()));
        };
        let order = self.order();
        let support: Vec<usize> = (1..=order).filter(|&i| !self.coeffs[i].is_zero()).collect();
        let mut g = Vec::with_capacity(order + 1);
        g.push(f0.clone());
        for n in 1..=order {
            let mut acc = BigInt::zero();
            for &i in support.iter().take_while(|&&i| i <= n) {
                acc += &self.coeffs[i] * &g[n - i];
            }
            // dividing by f_0 = ±1 is multiplying by it
            g.push(-unit_sign.apply(&acc));
        }
        Ok(IntSeries { coeffs: g })
    }

    /// In-place multiplication by `1 + sign·q^a`, `a ≥ 1`.
    pub fn mul_binomial_assign(&mut self, sign: FactorSign, a: usize) {
        assert!(a >= 1, "binomial factor must have positive degree");
        let order = self.order();
        if a > order {
            return;
        }
        for n in (a..=order).rev() {
            if self.coeffs[n - a].is_zero() {
                continue;
            }
            let term = sign.apply(&self.coeffs[n - a]);
            self.coeffs[n] += term;
        }
    }

    /// In-place division by `1 + sign·q^a`, `a ≥ 1`.
    pub fn div_binomial_assign(&mut self, sign: FactorSign, a: usize) {
        assert!(a >= 1, "binomial factor must have positive degree");
        let order = self.order();
        for n in a..=order {
            if self.coeffs[n - a].is_zero() {
                continue;
            }
            let term = sign.apply(&self.coeffs[n - a]);
            self.coeffs[n] -= term;
        }
    }

    /// The substitution `q -> -q`.
    pub fn negate_q(&self) -> Self {
        IntSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| if n % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Evaluates the truncated series at a real point `0 < x < 1` by Horner's
    /// rule from the highest index down.
    ///
    /// The caller picks the order; for coefficients growing like
    /// `exp(π√(2n/3))` at `x = e^{-t}`, [`recommended_order`] is enough.
    pub fn eval_at(&self, x: f64) -> Result<f64> {
        if !(x > 0.0 && x < 1.0) {
            return Err(Error::EvalDomain(x));
        }
        Ok(self
            .coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN)))
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        IntSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| op(a, b))
                .collect(),
        }
    }

    fn convolve(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for (i, fi) in self.coeffs.iter().enumerate().take(order + 1) {
            if fi.is_zero() {
                continue;
            }
            for (j, gj) in other.coeffs[..=order - i].iter().enumerate() {
                if !gj.is_zero() {
                    out.coeffs[i + j] += fi * gj;
                }
            }
        }
        out
    }
}

/// Smallest order that makes `eval_at(e^{-t})` faithful for coefficients
/// bounded by `exp(π√(2n/3))`: `ceil(8/t²)`.
pub fn recommended_order(t: f64) -> usize {
    (8.0 / (t * t)).ceil() as usize
}

/// `Π_{k=0}^{count-1} (1 + sign·q^{a + k·step})` truncated to `order`.
///
/// Factors of degree above `order` are skipped; they cannot touch any
/// retained coefficient, which makes the infinite product exact to `order`.
pub fn poch(sign: FactorSign, a: usize, step: usize, count: PochLength, order: usize) -> IntSeries {
    assert!(a >= 1 && step >= 1, "poch needs positive base exponent and step");
    let mut out = IntSeries::one(order);
    let limit = match count {
        PochLength::Finite(n) => n,
        PochLength::Infinite => usize::MAX,
    };
    let mut exponent = a;
    let mut k = 0;
    while k < limit && exponent <= order {
        out.mul_binomial_assign(sign, exponent);
        exponent += step;
        k += 1;
    }
    out
}

impl Add for &IntSeries {
    type Output = IntSeries;
    fn add(self, rhs: &IntSeries) -> IntSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &IntSeries {
    type Output = IntSeries;
    fn sub(self, rhs: &IntSeries) -> IntSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &IntSeries {
    type Output = IntSeries;
    fn mul(self, rhs: &IntSeries) -> IntSeries {
        self.convolve(rhs)
    }
}

impl Neg for &IntSeries {
    type Output = IntSeries;
    fn neg(self) -> IntSeries {
        IntSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for IntSeries {
            type Output = IntSeries;
            fn $method(self, rhs: IntSeries) -> IntSeries {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl fmt::Debug for IntSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IntSeries")
            .field("order", &self.order())
            .field("coeffs", &self.coeffs.iter().map(ToString::to_string).collect::<Vec<_>>())
            .finish()
    }
}

impl fmt::Display for IntSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sep = if !wrote {
                if c.is_negative() { "-" } else { "" }
            } else if c.is_negative() {
                " - "
            } else {
                " + "
            };
            let mag = c.abs();
            let mag_str = if mag.is_one() && n > 0 { String::new() } else { mag.to_string() };
            match n {
                0 => write!(f, "{sep}{mag_str}")?,
                1 => write!(f, "{sep}{mag_str}q")?,
                _ => write!(f, "{sep}{mag_str}q^{n}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}
