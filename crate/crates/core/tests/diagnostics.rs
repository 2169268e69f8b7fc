//! Numerical and combinatorial diagnostics outside the acceptance gate.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use excludant::asymptotics::{asym_value, zagier_value, AsymKind};
use excludant::partitions::enum_partitions;
use excludant::qfunctions::{self as qf, Form};

#[test]
fn chern_maex_over_sigma_l_grows_below_one() {
    let maex = qf::chern_sigma_maex_series(60);
    let l = qf::sigma_l_series(60);
    let ratio = |n: usize| maex.coeffs()[n].to_f64().unwrap() / l.coeffs()[n].to_f64().unwrap();
    let (r20, r60) = (ratio(20), ratio(60));
    println!("sigma maex / sigma L: n=20 {r20:.5}, n=60 {r60:.5}");
    assert!(0.0 < r20 && r20 < 1.0);
    assert!(0.0 < r60 && r60 < 1.0);
    assert!(r60 > r20);
}

#[test]
fn sigma_evaluates_near_e_minus_tenth() {
    let sigma = qf::sigma_series(600, Form::Canonical).unwrap();
    let value = sigma.eval_at((-0.1f64).exp()).unwrap();
    // Direct high-precision summation gives 1.837372915726394462...
    assert!((value - 1.837_372_915_726_394).abs() < 1e-12, "got {value}");
    assert!((value - zagier_value(0.1)).abs() < 3e-3);
}

#[test]
fn sigma_d_mex_tracks_asymptotic_at_2000() {
    let s = qf::sigma_d_mex_series(2000, Form::Canonical).unwrap();
    let ratio = s.coeffs()[2000].to_f64().unwrap() / asym_value(AsymKind::SigmaDMex, 2000);
    assert!((ratio - 1.0).abs() < 0.1, "ratio {ratio}");
}

#[test]
fn enumeration_cardinalities_match_generating_functions() {
    let p = qf::partition_gen(60);
    let d = qf::distinct_gen(60);
    for n in 0..=60u64 {
        let all = enum_partitions(n, false).count();
        let distinct = enum_partitions(n, true).count();
        assert_eq!(BigInt::from(all), p.coeffs()[n as usize], "p({n})");
        assert_eq!(BigInt::from(distinct), d.coeffs()[n as usize], "q({n})");
    }
}
