//! Builders for the named generating functions, each in every equivalent
//! form, returned as [`IntSeries`] at an explicit order `N`.
//!
//! Infinite sums are truncated exactly: a term is included iff its lowest
//! exponent is at most `N`. Denominators such as `(-q;q)_n` are never
//! inverted from scratch; each sum walks `n` upward and divides the running
//! quotient by one more binomial factor, which keeps every builder near
//! `O(N^{3/2})` apart from the final products.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{poch, FactorSign, IntSeries, PochLength};

use FactorSign::{Minus, Plus};

/// Which of the equivalent expressions of a generating function to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Form {
    Canonical,
    Alt1,
    Alt2,
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Form::Canonical => "canonical",
            Form::Alt1 => "alt1",
            Form::Alt2 => "alt2",
        })
    }
}

impl FromStr for Form {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "canonical" => Ok(Form::Canonical),
            "alt1" => Ok(Form::Alt1),
            "alt2" => Ok(Form::Alt2),
            other => Err(format!("unknown form `{other}` (expected canonical, alt1 or alt2)")),
        }
    }
}

/// Slice of a two-variable refinement, see [`refined_series`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RefinedKind {
    /// distinct partitions with `mex = index`
    Mex,
    /// distinct partitions with `mex = 2·index + 1`
    Omex,
    /// distinct partitions with `moex = 2·index + 1`
    Moex,
    /// distinct partitions with `maex = index`
    Maex,
}

impl FromStr for RefinedKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "mex" => Ok(RefinedKind::Mex),
            "omex" => Ok(RefinedKind::Omex),
            "moex" => Ok(RefinedKind::Moex),
            "maex" => Ok(RefinedKind::Maex),
            other => Err(format!("unknown refinement `{other}` (expected mex, omex, moex or maex)")),
        }
    }
}

/// A generating function tagged with its name, form and order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedSeries {
    pub name: String,
    pub form: Form,
    pub order: usize,
    pub series: IntSeries,
}

/// Names accepted by [`build`], with the forms each one supports.
pub const SERIES_NAMES: &[(&str, &[Form])] = &[
    ("sigma", &[Form::Canonical, Form::Alt1]),
    ("sigma-star", &[Form::Canonical]),
    ("distinct", &[Form::Canonical, Form::Alt1]),
    ("partitions", &[Form::Canonical]),
    ("sigma-d-mex", &[Form::Canonical, Form::Alt1]),
    ("sigma-mex", &[Form::Canonical]),
    ("a-d", &[Form::Canonical, Form::Alt1]),
    ("sigma-d-moex", &[Form::Canonical, Form::Alt1, Form::Alt2]),
    ("sigma-d-maex", &[Form::Canonical]),
    ("chern-sigma-maex", &[Form::Canonical]),
    ("sigma-l", &[Form::Canonical]),
    ("a", &[Form::Canonical]),
];

/// Builds a named series in the requested form.
pub fn build(name: &str, form: Form, order: usize) -> Result<NamedSeries> {
    let forms = SERIES_NAMES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, f)| *f)
        .ok_or_else(|| Error::Precondition(format!("unknown series `{name}`")))?;
    if !forms.contains(&form) {
        return Err(unsupported(name, form));
    }
    let series = match name {
        "sigma" => sigma_series(order, form)?,
        "sigma-star" => sigma_star_series(order),
        "distinct" if form == Form::Alt1 => poch(Minus, 1, 2, PochLength::Infinite, order)
            .invert()
            .expect("odd-part product has unit constant term"),
        "distinct" => distinct_gen(order),
        "partitions" => partition_gen(order),
        "sigma-d-mex" => sigma_d_mex_series(order, form)?,
        "sigma-mex" => sigma_mex_series(order),
        "a-d" => a_d_series(order, form)?,
        "sigma-d-moex" => sigma_d_moex_series(order, form)?,
        "sigma-d-maex" => sigma_d_maex_series(order),
        "chern-sigma-maex" => chern_sigma_maex_series(order),
        "sigma-l" => sigma_l_series(order),
        "a" => a_series(order),
        _ => unreachable!("name checked against SERIES_NAMES"),
    };
    Ok(NamedSeries {
        name: name.to_string(),
        form,
        order,
        series,
    })
}

fn unsupported(name: &str, form: Form) -> Error {
    Error::Precondition(format!("series `{name}` has no form `{form}`"))
}

fn triangular(n: usize) -> usize {
    n * (n + 1) / 2
}

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `acc += c·q^shift·term`
fn add_shifted(acc: &mut IntSeries, term: &IntSeries, c: i64, shift: usize) {
    *acc = &*acc + &term.scale_shift(&BigInt::from(c), shift);
}

/// `(-q;q)_∞`, the generating function of partitions into distinct parts.
pub fn distinct_gen(order: usize) -> IntSeries {
    poch(Plus, 1, 1, PochLength::Infinite, order)
}

/// `1/(q;q)_∞`, the partition generating function.
pub fn partition_gen(order: usize) -> IntSeries {
    poch(Minus, 1, 1, PochLength::Infinite, order)
        .invert()
        .expect("(q;q)_∞ has constant term 1")
}

/// Ramanujan's `σ(q)`.
///
/// `Canonical`: `Σ_{n≥0} q^{n(n+1)/2}/(-q;q)_n`.
/// `Alt1`: `Σ_{n≥1} n·q^{n(n-1)/2}/(-q;q)_n`.
pub fn sigma_series(order: usize, form: Form) -> Result<IntSeries> {
    let mut acc = IntSeries::zero(order);
    let mut quotient = IntSeries::one(order);
    match form {
        Form::Canonical => {
            let mut n = 0;
            while triangular(n) <= order {
                if n > 0 {
                    quotient.div_binomial_assign(Plus, n);
                }
                add_shifted(&mut acc, &quotient, 1, triangular(n));
                n += 1;
            }
        }
        Form::Alt1 => {
            let mut n = 1;
            while binom2(n) <= order {
                quotient.div_binomial_assign(Plus, n);
                add_shifted(&mut acc, &quotient, n as i64, binom2(n));
                n += 1;
            }
        }
        Form::Alt2 => return Err(unsupported("sigma", form)),
    }
    Ok(acc)
}

/// `σ*(q) = 2 Σ_{n≥1} (-1)^n q^{n²}/(q;q²)_n`.
pub fn sigma_star_series(order: usize) -> IntSeries {
    let mut acc = IntSeries::zero(order);
    let mut quotient = IntSeries::one(order);
    let mut n = 1;
    while n * n <= order {
        quotient.div_binomial_assign(Minus, 2 * n - 1);
        let sign = if n % 2 == 0 { 2 } else { -2 };
        add_shifted(&mut acc, &quotient, sign, n * n);
        n += 1;
    }
    acc
}

/// Generating function of `σ_d mex(n)`.
///
/// `Canonical`: `(-q;q)_∞ σ(q)`.
/// `Alt1`: `(-q;q)_∞ Σ_{m≥1} m·q^{m(m-1)/2}/(-q;q)_m`.
pub fn sigma_d_mex_series(order: usize, form: Form) -> Result<IntSeries> {
    let sum = match form {
        Form::Canonical => sigma_series(order, Form::Canonical)?,
        Form::Alt1 => sigma_series(order, Form::Alt1)?,
        Form::Alt2 => return Err(unsupported("sigma-d-mex", form)),
    };
    Ok(&distinct_gen(order) * &sum)
}

/// `(-q;q)_∞²`: coefficients are `σmex(n) = D₂(n)`.
pub fn sigma_mex_series(order: usize) -> IntSeries {
    let d = distinct_gen(order);
    &d * &d
}

/// Generating function of `a_d(n)`, distinct partitions with odd mex.
///
/// `Canonical`: `(-q;q)_∞ Σ_{n≥0} (-1)^n q^{n(n+1)/2}/(-q;q)_n`.
/// `Alt1`: `(-q;q)_∞ Σ_{n≥0} q^{(2n+1)n}/(-q;q)_{2n+1}`.
pub fn a_d_series(order: usize, form: Form) -> Result<IntSeries> {
    let mut acc = IntSeries::zero(order);
    let mut quotient = IntSeries::one(order);
    match form {
        Form::Canonical => {
            let mut n = 0;
            while triangular(n) <= order {
                if n > 0 {
                    quotient.div_binomial_assign(Plus, n);
                }
                let sign = if n % 2 == 0 { 1 } else { -1 };
                add_shifted(&mut acc, &quotient, sign, triangular(n));
                n += 1;
            }
        }
        Form::Alt1 => {
            // (-q;q)_{2n+1} gains two factors per step
            let mut n = 0;
            while binom2(2 * n + 1) <= order {
                if n > 0 {
                    quotient.div_binomial_assign(Plus, 2 * n);
                }
                quotient.div_binomial_assign(Plus, 2 * n + 1);
                add_shifted(&mut acc, &quotient, 1, binom2(2 * n + 1));
                n += 1;
            }
        }
        Form::Alt2 => return Err(unsupported("a-d", form)),
    }
    Ok(&distinct_gen(order) * &acc)
}

/// Generating function of `σ_d moex(n)`.
///
/// `Canonical`: `(-q;q)_∞ (1 + 2 Σ_{n≥1} q^{n²}/(-q;q²)_n)`.
/// `Alt1`: `(-q;q)_∞ (1 + 2 Σ_{n≥1} (-1)^{n-1} q^n (q²;q²)_{n-1})`.
/// `Alt2`: `(-q;q)_∞ (1 + σ*(-q))`.
pub fn sigma_d_moex_series(order: usize, form: Form) -> Result<IntSeries> {
    let mut inner = IntSeries::one(order);
    match form {
        Form::Canonical => {
            let mut quotient = IntSeries::one(order);
            let mut n = 1;
            while n * n <= order {
                quotient.div_binomial_assign(Plus, 2 * n - 1);
                add_shifted(&mut inner, &quotient, 2, n * n);
                n += 1;
            }
        }
        Form::Alt1 => {
            let mut product = IntSeries::one(order);
            for n in 1..=order {
                if n > 1 {
                    product.mul_binomial_assign(Minus, 2 * (n - 1));
                }
                let sign = if n % 2 == 1 { 2 } else { -2 };
                add_shifted(&mut inner, &product, sign, n);
            }
        }
        Form::Alt2 => {
            inner = &inner + &sigma_star_series(order).negate_q();
        }
    }
    Ok(&distinct_gen(order) * &inner)
}

/// `Σ_{k≥1} k (-q;q)_{k-1} Σ_{m≥1} q^{m(m+1)/2 + km}`, the generating
/// function of `σ_d maex(n)`.
pub fn sigma_d_maex_series(order: usize) -> IntSeries {
    let mut acc = IntSeries::zero(order);
    let mut prefix = IntSeries::one(order);
    let mut k = 1;
    while k < order {
        if k > 1 {
            prefix.mul_binomial_assign(Plus, k - 1);
        }
        let mut m = 1;
        while triangular(m) + k * m <= order {
            add_shifted(&mut acc, &prefix, k as i64, triangular(m) + k * m);
            m += 1;
        }
        k += 1;
    }
    acc
}

/// `Σ_{n≥1} n/(q;q)_{n-1} Σ_{m≥1} q^{m(n+1)} (-q;q)_{m-1}`, the generating
/// function of `σmaex(n)` over all partitions.
pub fn chern_sigma_maex_series(order: usize) -> IntSeries {
    if order < 2 {
        return IntSeries::zero(order);
    }
    // prefixes[m] = (-q;q)_m for every m with m + 1 ≤ order / 2 + 1
    let max_m = order / 2;
    let mut prefixes = Vec::with_capacity(max_m);
    let mut running = IntSeries::one(order);
    prefixes.push(running.clone());
    for m in 1..max_m {
        running.mul_binomial_assign(Plus, m);
        prefixes.push(running.clone());
    }

    // T_n = n·S_n + T_{n+1}/(1 - q^n), result T_1
    let max_n = order - 1;
    let mut tail = IntSeries::zero(order);
    for n in (1..=max_n).rev() {
        if n < max_n {
            tail.div_binomial_assign(Minus, n);
        }
        let mut m = 1;
        while m * (n + 1) <= order {
            add_shifted(&mut tail, &prefixes[m - 1], n as i64, m * (n + 1));
            m += 1;
        }
    }
    tail
}

/// `Σ_{k≥1} k q^k/(q;q)_k`, the generating function of `σL(n)`, the sum of
/// largest parts over all partitions of `n`.
pub fn sigma_l_series(order: usize) -> IntSeries {
    // T_k = (k q^k + T_{k+1})/(1 - q^k), result T_1
    let mut tail = IntSeries::zero(order);
    for k in (1..=order).rev() {
        tail = &tail + &IntSeries::monomial(k as i64, k, order);
        tail.div_binomial_assign(Minus, k);
    }
    tail
}

/// `a(n)`: all partitions of `n` with odd mex.
///
/// Uses `Σ_{m odd} q^{m(m-1)/2}/(q;q)_{m-1} · Π_{j≥m+1} 1/(1-q^j)`, computed
/// as `q^{m(m-1)/2}(1 - q^m)/(q;q)_∞` per term. Only trusted after agreeing
/// with the enumeration oracle.
pub fn a_series(order: usize) -> IntSeries {
    let partitions = partition_gen(order);
    let mut acc = IntSeries::zero(order);
    let mut m = 1;
    while binom2(m) <= order {
        let mut term = partitions.clone();
        term.mul_binomial_assign(Minus, m);
        add_shifted(&mut acc, &term, 1, binom2(m));
        m += 2;
    }
    acc
}

/// One `z`-slice of the two-variable refinements.
///
/// * `Mex`, `index = m ≥ 1`: `q^{m(m-1)/2} (-q^{m+1};q)_∞`
/// * `Omex`, `index = k ≥ 0`: `q^{k(2k+1)} (-q^{2k+2};q)_∞`
/// * `Moex`, `index = k ≥ 0`: `(-q;q)_∞ q^{k²}/(-q;q²)_{k+1}`
/// * `Maex`, `index = k ≥ 1`: `(-q;q)_{k-1} Σ_{m≥1} q^{m(m+1)/2 + km}`
pub fn refined_series(kind: RefinedKind, index: usize, order: usize) -> Result<IntSeries> {
    let one = BigInt::from(1);
    match kind {
        RefinedKind::Mex => {
            if index == 0 {
                return Err(Error::InvalidIndex { kind: "mex slice", index });
            }
            let tail = poch(Plus, index + 1, 1, PochLength::Infinite, order);
            Ok(tail.scale_shift(&one, binom2(index)))
        }
        RefinedKind::Omex => {
            let tail = poch(Plus, 2 * index + 2, 1, PochLength::Infinite, order);
            Ok(tail.scale_shift(&one, binom2(2 * index + 1)))
        }
        RefinedKind::Moex => {
            let mut s = distinct_gen(order);
            for j in 0..=index {
                s.div_binomial_assign(Plus, 2 * j + 1);
            }
            Ok(s.scale_shift(&one, index * index))
        }
        RefinedKind::Maex => {
            if index == 0 {
                return Err(Error::InvalidIndex { kind: "maex slice", index });
            }
            let prefix = poch(Plus, 1, 1, PochLength::Finite(index - 1), order);
            let mut acc = IntSeries::zero(order);
            let mut m = 1;
            while triangular(m) + index * m <= order {
                add_shifted(&mut acc, &prefix, 1, triangular(m) + index * m);
                m += 1;
            }
            Ok(acc)
        }
    }
}

/// `q^{i(i+1)/2} (-q^{i+1};q)_∞`: coefficient of `q^n` is the number of
/// distinct partitions of `n` with mex greater than `i`.
pub fn dcount_series(i: usize, order: usize) -> IntSeries {
    let tail = poch(Plus, i + 1, 1, PochLength::Infinite, order);
    tail.scale_shift(&BigInt::from(1), triangular(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &IntSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn sigma_forms() {
        assert_eq!(ints(&sigma_series(5, Form::Canonical).unwrap()), [1, 1, -1, 2, -2, 1]);
        assert_eq!(sigma_series(5, Form::Alt1).unwrap(), sigma_series(5, Form::Canonical).unwrap());
        assert_eq!(ints(&sigma_series(0, Form::Canonical).unwrap()), [1]);
        assert!(sigma_series(3, Form::Alt2).is_err());
    }

    #[test]
    fn sigma_star() {
        assert_eq!(ints(&sigma_star_series(5)), [0, -2, -2, -2, 0, 0]);
        assert_eq!(ints(&sigma_star_series(0)), [0]);
        let shifted = &IntSeries::one(5) + &sigma_star_series(5).negate_q();
        assert_eq!(ints(&shifted), [1, 2, -2, 2, 0, 0]);
    }

    #[test]
    fn distinct_and_partitions() {
        assert_eq!(ints(&distinct_gen(9)), [1, 1, 1, 2, 2, 3, 4, 5, 6, 8]);
        assert_eq!(ints(&distinct_gen(0)), [1]);
        assert_eq!(ints(&partition_gen(9)), [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
        let euler = build("distinct", Form::Alt1, 120).unwrap().series;
        assert_eq!(euler, distinct_gen(120));
    }

    #[test]
    fn golden_values() {
        for form in [Form::Canonical, Form::Alt1] {
            assert_eq!(ints(&sigma_d_mex_series(7, form).unwrap()), [1, 2, 1, 4, 3, 4, 8, 8]);
            assert_eq!(ints(&a_d_series(7, form).unwrap()), [1, 0, 1, 2, 1, 2, 2, 4]);
        }
        for form in [Form::Canonical, Form::Alt1, Form::Alt2] {
            assert_eq!(ints(&sigma_d_moex_series(4, form).unwrap()), [1, 3, 1, 4, 6]);
        }
        assert_eq!(ints(&sigma_d_maex_series(5)), [0, 0, 1, 2, 5, 8]);
        assert_eq!(ints(&sigma_mex_series(3)), [1, 2, 3, 6]);
        assert_eq!(ints(&chern_sigma_maex_series(4)), [0, 0, 1, 2, 6]);
        assert_eq!(ints(&sigma_l_series(7)), [0, 1, 3, 6, 12, 20, 35, 54]);
        assert_eq!(ints(&a_series(11)), [1, 0, 1, 2, 3, 4, 6, 8, 12, 16, 23, 30]);
    }

    #[test]
    fn moex_alt2_small_product() {
        let d = IntSeries::from_i64s(&[1, 1, 1, 2], 3).unwrap();
        let s = IntSeries::from_i64s(&[1, 2, -2, 2], 3).unwrap();
        assert_eq!(ints(&(&d * &s)), [1, 3, 1, 4]);
        assert_eq!(sigma_d_moex_series(3, Form::Alt2).unwrap(), &d * &s);
    }

    #[test]
    fn tiny_orders() {
        assert_eq!(ints(&chern_sigma_maex_series(2)), [0, 0, 1]);
        for order in 0..3 {
            assert_eq!(chern_sigma_maex_series(order.min(1)), IntSeries::zero(order.min(1)));
            assert_eq!(sigma_d_maex_series(order).order(), order);
            assert_eq!(sigma_l_series(order).order(), order);
        }
    }

    #[test]
    fn refined_slices() {
        assert_eq!(ints(&refined_series(RefinedKind::Mex, 1, 5).unwrap()), [1, 0, 1, 1, 1, 2]);
        let mex2 = refined_series(RefinedKind::Mex, 2, 4).unwrap();
        assert_eq!(mex2.coefficient(4).unwrap(), &BigInt::from(1));
        assert!(matches!(
            refined_series(RefinedKind::Mex, 0, 4),
            Err(Error::InvalidIndex { index: 0, .. })
        ));
        assert!(refined_series(RefinedKind::Maex, 0, 4).is_err());
        assert!(refined_series(RefinedKind::Omex, 0, 4).is_ok());
    }

    #[test]
    fn refined_sums() {
        let order = 80;
        let mut weighted = IntSeries::zero(order);
        let mut plain = IntSeries::zero(order);
        for m in 1..=order + 1 {
            let slice = refined_series(RefinedKind::Mex, m, order).unwrap();
            weighted = &weighted + &slice.scale_shift(&BigInt::from(m), 0);
            plain = &plain + &slice;
        }
        assert_eq!(weighted, sigma_d_mex_series(order, Form::Canonical).unwrap());
        assert_eq!(plain, distinct_gen(order));

        let mut omex = IntSeries::zero(order);
        let mut moex = IntSeries::zero(order);
        for k in 0..=order {
            omex = &omex + &refined_series(RefinedKind::Omex, k, order).unwrap();
            let slice = refined_series(RefinedKind::Moex, k, order).unwrap();
            moex = &moex + &slice.scale_shift(&BigInt::from(2 * k + 1), 0);
        }
        assert_eq!(omex, a_d_series(order, Form::Canonical).unwrap());
        assert_eq!(moex, sigma_d_moex_series(order, Form::Canonical).unwrap());

        let mut maex = IntSeries::zero(order);
        for k in 1..=order {
            let slice = refined_series(RefinedKind::Maex, k, order).unwrap();
            maex = &maex + &slice.scale_shift(&BigInt::from(k), 0);
        }
        assert_eq!(maex, sigma_d_maex_series(order));
    }

    #[test]
    fn dcount() {
        assert_eq!(dcount_series(0, 30), distinct_gen(30));
        assert_eq!(dcount_series(1, 3).coefficient(3).unwrap(), &BigInt::from(1));
        assert!(dcount_series(8, 30).is_zero());
        let total = (0..=8).fold(IntSeries::zero(30), |acc, i| &acc + &dcount_series(i, 30));
        assert_eq!(total, sigma_d_mex_series(30, Form::Canonical).unwrap());
    }

    #[test]
    fn build_dispatch() {
        let named = build("sigma-d-moex", Form::Alt2, 4).unwrap();
        assert_eq!(named.order, 4);
        assert_eq!(ints(&named.series), [1, 3, 1, 4, 6]);
        assert!(build("sigma-mex", Form::Alt1, 4).is_err());
        assert!(build("nope", Form::Canonical, 4).is_err());
        for (name, forms) in SERIES_NAMES {
            for &form in *forms {
                assert_eq!(build(name, form, 10).unwrap().series.order(), 10);
            }
        }
    }
}
