//! Registry of generating-function identities and the harness that checks
//! them.
//!
//! A descriptor is a list of `(lhs, rhs)` pairs. Each side is either a
//! series builder, compared coefficient by coefficient up to an order, or an
//! enumeration oracle evaluated at every `n` up to a bound. All comparisons
//! are exact.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partitions::{self, RefinedKind as OracleKind, StatKind};
use crate::qfunctions::{self as qf, Form, RefinedKind};
use crate::series::{poch, FactorSign, IntSeries, PochLength};

pub const DEFAULT_SERIES_RANGE: usize = 300;
pub const DEFAULT_DISTINCT_ORACLE_RANGE: usize = 40;
pub const DEFAULT_ALL_ORACLE_RANGE: usize = 30;
/// Oracle bound that `a_series` must clear before the parity check uses it.
pub const A_SERIES_GATE: usize = 35;

pub type SeriesFn = Arc<dyn Fn(usize) -> IntSeries + Send + Sync>;
pub type OracleFn = Arc<dyn Fn(u64) -> BigInt + Send + Sync>;

#[derive(Clone)]
pub enum Side {
    Series { label: String, build: SeriesFn },
    Oracle { label: String, eval: OracleFn },
}

impl Side {
    pub fn series(label: impl Into<String>, build: impl Fn(usize) -> IntSeries + Send + Sync + 'static) -> Self {
        Side::Series {
            label: label.into(),
            build: Arc::new(build),
        }
    }

    pub fn oracle(label: impl Into<String>, eval: impl Fn(u64) -> BigInt + Send + Sync + 'static) -> Self {
        Side::Oracle {
            label: label.into(),
            eval: Arc::new(eval),
        }
    }

    pub fn label(&self) -> &str {
        match self {
            Side::Series { label, .. } | Side::Oracle { label, .. } => label,
        }
    }

    fn values(&self, range: usize) -> Vec<BigInt> {
        match self {
            Side::Series { build, .. } => {
                let s = build(range);
                assert_eq!(s.order(), range, "builder `{}` ignored the order", self.label());
                s.into_coeffs()
            }
            Side::Oracle { eval, .. } => (0..=range as u64).map(|n| eval(n)).collect(),
        }
    }
}

impl fmt::Debug for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Series { label, .. } => write!(f, "Series({label})"),
            Side::Oracle { label, .. } => write!(f, "Oracle({label})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    SeriesSeries,
    SeriesOracle,
}

#[derive(Debug, Clone)]
pub struct IdentityDescriptor {
    pub name: String,
    pub pairs: Vec<(Side, Side)>,
    pub comparison: Comparison,
    pub default_range: usize,
    pub reference: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub n: usize,
    pub lhs_label: String,
    pub lhs: BigInt,
    pub rhs_label: String,
    pub rhs: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub name: String,
    pub range: usize,
    pub status: Status,
    pub first_mismatch: Option<Mismatch>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    fn from_mismatch(name: &str, range: usize, first_mismatch: Option<Mismatch>) -> Self {
        VerificationReport {
            name: name.to_string(),
            range,
            status: if first_mismatch.is_some() { Status::Fail } else { Status::Pass },
            first_mismatch,
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} (range {})", self.status, self.name, self.range)?;
        if let Some(m) = &self.first_mismatch {
            write!(f, ": n={} {}={} vs {}={}", m.n, m.lhs_label, m.lhs, m.rhs_label, m.rhs)?;
        }
        for note in &self.notes {
            write!(f, "; {note}")?;
        }
        Ok(())
    }
}

fn series(label: &str, build: impl Fn(usize) -> IntSeries + Send + Sync + 'static) -> Side {
    Side::series(label, build)
}

fn oracle(label: &str, eval: impl Fn(u64) -> BigInt + Send + Sync + 'static) -> Side {
    Side::oracle(label, eval)
}

fn form_series(label: &str, f: fn(usize, Form) -> Result<IntSeries>, form: Form) -> Side {
    series(label, move |n| f(n, form).expect("form is supported"))
}

/// Lowest power of `q` in a refinement slice.
fn slice_start(kind: RefinedKind, index: usize) -> usize {
    match kind {
        RefinedKind::Mex => index * (index - 1) / 2,
        RefinedKind::Omex => index * (2 * index + 1),
        RefinedKind::Moex => index * index,
        RefinedKind::Maex => index + 1,
    }
}

fn weighted_slices(kind: RefinedKind, first: usize, weight: fn(usize) -> i64, order: usize) -> IntSeries {
    let indices = (first..).take_while(|&index| slice_start(kind, index) <= order);
    indices.fold(IntSeries::zero(order), |acc, index| {
        let slice = qf::refined_series(kind, index, order).expect("index in range");
        &acc + &slice.scale_shift(&BigInt::from(weight(index)), 0)
    })
}

fn mod2(s: IntSeries) -> IntSeries {
    let order = s.order();
    let two = BigInt::from(2);
    let reduced = s.into_coeffs().iter().map(|c| c.mod_floor(&two)).collect();
    IntSeries::new(reduced, order).expect("length unchanged")
}

fn descriptor(
    name: &str,
    comparison: Comparison,
    default_range: usize,
    reference: &str,
    pairs: Vec<(Side, Side)>,
) -> IdentityDescriptor {
    IdentityDescriptor {
        name: name.to_string(),
        pairs,
        comparison,
        default_range,
        reference: reference.to_string(),
    }
}

/// Every registered identity, in a fixed order.
pub fn registry() -> Vec<IdentityDescriptor> {
    use Comparison::{SeriesOracle as SO, SeriesSeries as SS};
    let sr = DEFAULT_SERIES_RANGE;
    let dr = DEFAULT_DISTINCT_ORACLE_RANGE;
    let ar = DEFAULT_ALL_ORACLE_RANGE;

    let sdmex = || form_series("sigma_d_mex", qf::sigma_d_mex_series, Form::Canonical);
    let moex_c = || form_series("moex canonical", qf::sigma_d_moex_series, Form::Canonical);
    let moex_1 = || form_series("moex alt1", qf::sigma_d_moex_series, Form::Alt1);
    let moex_2 = || form_series("moex alt2", qf::sigma_d_moex_series, Form::Alt2);

    let bijection_pairs = (0..=8usize)
        .map(|i| {
            let shift = (i * (i + 1) / 2) as u64;
            (
                series(&format!("D_{i} series"), move |n| qf::dcount_series(i, n)),
                oracle(&format!("p_d(n - {shift}, {i})"), move |n| {
                    if n < shift {
                        BigInt::zero()
                    } else {
                        partitions::refined_count_oracle(OracleKind::SmallestGt, i as u64, n - shift, true)
                    }
                }),
            )
        })
        .collect();

    vec![
        descriptor(
            "thm-sigma-d-mex",
            SS,
            sr,
            "(-q;q)_inf sigma(q) = (-q;q)_inf sum m q^binom(m,2)/(-q;q)_m",
            vec![(sdmex(), form_series("weighted pochhammer sum", qf::sigma_d_mex_series, Form::Alt1))],
        ),
        descriptor(
            "sigma-sum-identity",
            SS,
            sr,
            "sum q^(n(n+1)/2)/(-q;q)_n = sum n q^(n(n-1)/2)/(-q;q)_n",
            vec![(
                form_series("sigma canonical", qf::sigma_series, Form::Canonical),
                form_series("sigma alt1", qf::sigma_series, Form::Alt1),
            )],
        ),
        descriptor(
            "sigma-d-mex-oracle",
            SO,
            dr,
            "sigma_d mex(n) by enumeration",
            vec![(sdmex(), oracle("sum mex over D(n)", |n| {
                partitions::stat_sum_oracle(StatKind::Mex, n, true)
            }))],
        ),
        descriptor(
            "sigma-mex-d2-euler",
            SS,
            sr,
            "(-q;q)_inf^2 = 1/(q;q^2)_inf^2",
            vec![(
                series("(-q;q)^2", qf::sigma_mex_series),
                series("1/(q;q^2)^2", |n| {
                    let inv = poch(FactorSign::Minus, 1, 2, PochLength::Infinite, n)
                        .invert()
                        .expect("unit constant term");
                    &inv * &inv
                }),
            )],
        ),
        descriptor(
            "sigma-mex-equals-d2-oracle",
            SO,
            ar,
            "sigma mex(n) = D_2(n)",
            vec![
                (
                    series("(-q;q)^2", qf::sigma_mex_series),
                    oracle("sum mex over P(n)", |n| partitions::stat_sum_oracle(StatKind::Mex, n, false)),
                ),
                (
                    series("(-q;q)^2", qf::sigma_mex_series),
                    oracle("D_2(n)", partitions::two_colored_distinct_count),
                ),
            ],
        ),
        descriptor(
            "thm-a-d",
            SS,
            sr,
            "U(n) = a_d(n): false theta form vs odd-mex slice sum",
            vec![(
                form_series("U false theta", qf::a_d_series, Form::Canonical),
                form_series("odd mex sum", qf::a_d_series, Form::Alt1),
            )],
        ),
        descriptor(
            "a-d-oracle",
            SO,
            dr,
            "a_d(n) by enumeration",
            vec![(
                form_series("U false theta", qf::a_d_series, Form::Canonical),
                oracle("#odd mex in D(n)", |n| {
                    partitions::refined_count_oracle(OracleKind::OddMex, 0, n, true)
                }),
            )],
        ),
        descriptor(
            "moex-form-equivalence",
            SS,
            sr,
            "three generating functions of sigma_d moex",
            vec![(moex_c(), moex_1()), (moex_c(), moex_2()), (moex_1(), moex_2())],
        ),
        descriptor(
            "sigma-d-moex-oracle",
            SO,
            dr,
            "sigma_d moex(n) by enumeration",
            vec![(moex_c(), oracle("sum moex over D(n)", |n| {
                partitions::stat_sum_oracle(StatKind::Moex, n, true)
            }))],
        ),
        descriptor(
            "thm-sigma-d-maex",
            SS,
            sr,
            "maex double sum = k-weighted maex slices",
            vec![(
                series("maex double sum", qf::sigma_d_maex_series),
                series("sum k D_k(q)", |n| weighted_slices(RefinedKind::Maex, 1, |k| k as i64, n)),
            )],
        ),
        descriptor(
            "sigma-d-maex-oracle",
            SO,
            dr,
            "sigma_d maex(n) by enumeration",
            vec![(
                series("maex double sum", qf::sigma_d_maex_series),
                oracle("sum maex over D(n)", |n| partitions::stat_sum_oracle(StatKind::Maex, n, true)),
            )],
        ),
        descriptor(
            "chern-sigma-maex-oracle",
            SO,
            ar,
            "sigma maex(n) double sum vs enumeration",
            vec![(
                series("chern double sum", qf::chern_sigma_maex_series),
                oracle("sum maex over P(n)", |n| partitions::stat_sum_oracle(StatKind::Maex, n, false)),
            )],
        ),
        descriptor(
            "sigma-l-oracle",
            SO,
            ar,
            "sigma L(n) = sum k q^k/(q;q)_k vs enumeration",
            vec![(
                series("sum k q^k/(q;q)_k", qf::sigma_l_series),
                oracle("sum largest over P(n)", |n| {
                    partitions::stat_sum_oracle(StatKind::Largest, n, false)
                }),
            )],
        ),
        descriptor(
            "d-i-sum",
            SS,
            sr,
            "sigma_d mex(n) = sum_i D_i(n)",
            vec![(
                sdmex(),
                series("sum D_i", |n| {
                    (0..)
                        .take_while(|i| i * (i + 1) / 2 <= n)
                        .fold(IntSeries::zero(n), |acc, i| &acc + &qf::dcount_series(i, n))
                }),
            )],
        ),
        descriptor(
            "d-i-bijection",
            SO,
            dr,
            "D_i(n) = p_d(n - i(i+1)/2, i)",
            bijection_pairs,
        ),
        descriptor(
            "euler-identity",
            SS,
            sr,
            "(-q;q)_inf = 1/(q;q^2)_inf",
            vec![
                (
                    series("(-q;q)", qf::distinct_gen),
                    series("1/(q;q^2)", |n| qf::build("distinct", Form::Alt1, n).unwrap().series),
                ),
                (
                    series("(-q;q)(q;q^2)", |n| {
                        &qf::distinct_gen(n) * &poch(FactorSign::Minus, 1, 2, PochLength::Infinite, n)
                    }),
                    series("1", IntSeries::one),
                ),
            ],
        ),
        descriptor(
            "parity-sigma-mex-a",
            SS,
            sr,
            "sigma mex(n) = a(n) mod 2",
            vec![(
                series("sigma mex mod 2", |n| mod2(qf::sigma_mex_series(n))),
                series("a mod 2", |n| mod2(qf::a_series(n))),
            )],
        ),
        descriptor(
            "a-series-oracle",
            SO,
            A_SERIES_GATE,
            "a(n) series vs enumeration",
            vec![(
                series("a series", qf::a_series),
                oracle("#odd mex in P(n)", |n| {
                    partitions::refined_count_oracle(OracleKind::OddMex, 0, n, false)
                }),
            )],
        ),
        descriptor(
            "refined-mex-weighted-sum",
            SS,
            sr,
            "sum_m m p_d^mex(m, n) = sigma_d mex(n)",
            vec![(
                series("sum m mex slices", |n| weighted_slices(RefinedKind::Mex, 1, |m| m as i64, n)),
                sdmex(),
            )],
        ),
        descriptor(
            "refined-mex-count-sum",
            SS,
            sr,
            "sum_m p_d^mex(m, n) = number of distinct partitions",
            vec![(
                series("sum mex slices", |n| weighted_slices(RefinedKind::Mex, 1, |_| 1, n)),
                series("(-q;q)", qf::distinct_gen),
            )],
        ),
        descriptor(
            "refined-omex-sum",
            SS,
            sr,
            "sum_k p_d^omex(2k+1, n) = a_d(n)",
            vec![(
                series("sum omex slices", |n| weighted_slices(RefinedKind::Omex, 0, |_| 1, n)),
                form_series("U false theta", qf::a_d_series, Form::Canonical),
            )],
        ),
        descriptor(
            "refined-moex-weighted-sum",
            SS,
            sr,
            "sum_k (2k+1) p_d^moex(2k+1, n) = sigma_d moex(n)",
            vec![(
                series("sum (2k+1) moex slices", |n| {
                    weighted_slices(RefinedKind::Moex, 0, |k| 2 * k as i64 + 1, n)
                }),
                moex_c(),
            )],
        ),
    ]
}

pub fn lookup(name: &str) -> Result<IdentityDescriptor> {
    registry()
        .into_iter()
        .find(|d| d.name == name)
        .ok_or_else(|| Error::UnknownIdentity(name.to_string()))
}

/// Checks a registered identity at `range` (series order or oracle bound).
pub fn verify(name: &str, range: usize) -> Result<VerificationReport> {
    Ok(verify_descriptor(&lookup(name)?, range))
}

/// Checks every pair of `desc` at `range`, reporting the smallest `n` at
/// which any pair disagrees.
pub fn verify_descriptor(desc: &IdentityDescriptor, range: usize) -> VerificationReport {
    let mut first: Option<Mismatch> = None;
    for (lhs, rhs) in &desc.pairs {
        let (left, right) = rayon::join(|| lhs.values(range), || rhs.values(range));
        let hit = left.iter().zip(&right).position(|(a, b)| a != b);
        if let Some(n) = hit {
            if first.as_ref().is_none_or(|m| n < m.n) {
                first = Some(Mismatch {
                    n,
                    lhs_label: lhs.label().to_string(),
                    lhs: left[n].clone(),
                    rhs_label: rhs.label().to_string(),
                    rhs: right[n].clone(),
                });
            }
        }
    }
    VerificationReport::from_mismatch(&desc.name, range, first)
}

/// Runs the whole registry concurrently. `series_order` and `oracle_max`
/// override the per-descriptor defaults. Reports come back in registry order.
pub fn verify_all(series_order: Option<usize>, oracle_max: Option<usize>) -> Vec<VerificationReport> {
    registry()
        .par_iter()
        .map(|d| {
            let range = match d.comparison {
                Comparison::SeriesSeries => series_order.unwrap_or(d.default_range),
                Comparison::SeriesOracle => oracle_max.unwrap_or(d.default_range),
            };
            verify_descriptor(d, range)
        })
        .collect()
}

fn sigma_d_mex_values(order: usize) -> Vec<BigInt> {
    qf::sigma_d_mex_series(order, Form::Canonical)
        .expect("canonical form")
        .into_coeffs()
}

/// Strict growth of `σ_d mex(n)` for `7 ≤ n < nmax`.
pub fn monotonicity_check(nmax: usize) -> Result<VerificationReport> {
    if nmax < 8 {
        return Err(Error::Precondition(format!("monotonicity needs nmax ≥ 8, got {nmax}")));
    }
    let values = sigma_d_mex_values(nmax);
    let first = (7..nmax).find(|&n| values[n + 1] <= values[n]).map(|n| Mismatch {
        n,
        lhs_label: format!("sigma_d mex({})", n + 1),
        lhs: values[n + 1].clone(),
        rhs_label: format!("sigma_d mex({n})"),
        rhs: values[n].clone(),
    });
    let mut report = VerificationReport::from_mismatch("monotonicity", nmax, first);
    report.notes.push(format!(
        "boundary: sigma_d mex(6) = {}, sigma_d mex(7) = {}",
        values[6], values[7]
    ));
    Ok(report)
}

/// `j(3j-1)` and `j(3j+1)` for `j ≥ 1`.
pub fn is_parity_exception(n: u64) -> bool {
    (1u64..)
        .take_while(|j| j * (3 * j - 1) <= n)
        .any(|j| j * (3 * j - 1) == n || j * (3 * j + 1) == n)
}

/// `a(n)` is odd exactly at `n = j(3j±1)`, and `σmex(n) ≡ a(n) (mod 2)`, for
/// `1 ≤ n ≤ nmax`. The `a(n)` series must first match enumeration up to
/// [`A_SERIES_GATE`].
pub fn parity_check(nmax: usize) -> Result<VerificationReport> {
    if nmax < 1 {
        return Err(Error::Precondition("parity check needs nmax ≥ 1".into()));
    }
    let gate = verify("a-series-oracle", A_SERIES_GATE)?;
    if !gate.passed() {
        let mut report = VerificationReport::from_mismatch("parity", nmax, gate.first_mismatch);
        report.notes.push("a(n) series failed its oracle gate".into());
        return Ok(report);
    }
    let a = qf::a_series(nmax).into_coeffs();
    let sigma_mex = qf::sigma_mex_series(nmax).into_coeffs();
    let two = BigInt::from(2);
    let mut first = None;
    for n in 1..=nmax {
        let a_odd = !(&a[n] % &two).is_zero();
        let expected_odd = is_parity_exception(n as u64);
        if a_odd != expected_odd {
            first = Some(Mismatch {
                n,
                lhs_label: "a(n)".into(),
                lhs: a[n].clone(),
                rhs_label: "pentagonal pattern predicts odd".into(),
                rhs: BigInt::from(expected_odd as u8),
            });
            break;
        }
        if ((&sigma_mex[n] - &a[n]) % &two) != BigInt::zero() {
            first = Some(Mismatch {
                n,
                lhs_label: "sigma mex(n)".into(),
                lhs: sigma_mex[n].clone(),
                rhs_label: "a(n)".into(),
                rhs: a[n].clone(),
            });
            break;
        }
    }
    let mut report = VerificationReport::from_mismatch("parity", nmax, first);
    report.notes.push(format!("a(n) oracle gate passed to n = {A_SERIES_GATE}"));
    Ok(report)
}

/// `a_d(1) = 0` and `a_d(n) > 0` for every other `n ≤ nmax`.
pub fn positivity_check(nmax: usize) -> Result<VerificationReport> {
    if nmax < 2 {
        return Err(Error::Precondition("positivity check needs nmax ≥ 2".into()));
    }
    let values = qf::a_d_series(nmax, Form::Canonical)?.into_coeffs();
    let first = (0..=nmax)
        .find(|&n| if n == 1 { !values[n].is_zero() } else { !values[n].is_positive() })
        .map(|n| Mismatch {
            n,
            lhs_label: "a_d(n)".into(),
            lhs: values[n].clone(),
            rhs_label: if n == 1 { "expected 0".into() } else { "expected > 0".into() },
            rhs: BigInt::zero(),
        });
    Ok(VerificationReport::from_mismatch("positivity", nmax, first))
}
