//! Round-trip and shape checks for the JSON surfaces of the library.

use qmono_core::algebra::AlgElt;
use qmono_core::bundles::{projection, WeightedMatrix};
use qmono_core::calculus::{d_su, Form1SU};
use qmono_core::fuzz::{random_element, random_scalar, rng};
use qmono_core::scalars::{qnum, Scalar};
use qmono_core::traces::winding_report;

#[test]
fn scalar_json_round_trip() {
    let mut r = rng(11);
    let mut samples = vec![
        Scalar::zero(),
        Scalar::one(),
        Scalar::q_pow(3),
        Scalar::q_pow(-5),
        Scalar::s_pow(1),
        Scalar::ratio(-7, 12),
        qnum(4),
        (Scalar::one() + Scalar::q_pow(2)).inv(),
    ];
    for _ in 0..50 {
        samples.push(random_scalar(&mut r));
    }
    for x in &samples {
        assert_eq!(Scalar::from_json(&x.to_json()).as_ref(), Some(x));
    }
}

#[test]
fn scalar_json_rejects_malformed_input() {
    assert_eq!(Scalar::from_json(&serde_json::json!(null)), None);
    assert_eq!(Scalar::from_json(&serde_json::json!({"num": []})), None);
    assert_eq!(
        Scalar::from_json(&serde_json::json!({"num": [], "den": "x"})),
        None
    );
    // a zero denominator must not deserialize
    let zero_den = serde_json::json!({
        "num": Scalar::one().to_json()["num"],
        "den": Scalar::zero().to_json()["num"],
    });
    assert_eq!(Scalar::from_json(&zero_den), None);
}

#[test]
fn element_json_round_trip() {
    let mut r = rng(12);
    let mut samples = vec![AlgElt::zero(), AlgElt::one(), AlgElt::word(2, 1, 3)];
    for _ in 0..50 {
        samples.push(random_element(&mut r, 4, 4));
    }
    for x in &samples {
        assert_eq!(AlgElt::from_json(&x.to_json()).as_ref(), Some(x));
    }
    assert_eq!(AlgElt::from_json(&serde_json::json!(42)), None);
}

#[test]
fn matrix_json_round_trip() {
    for n in -3..=3i64 {
        let p = projection(n);
        assert_eq!(WeightedMatrix::from_json(&p.to_json()).as_ref(), Some(&p));
    }
    assert_eq!(WeightedMatrix::from_json(&serde_json::json!([])), None);
}

#[test]
fn form_json_round_trip() {
    let mut r = rng(13);
    for _ in 0..20 {
        let w = d_su(&random_element(&mut r, 3, 3));
        assert_eq!(Form1SU::from_json(&w.to_json()).as_ref(), Some(&w));
    }
}

#[test]
fn winding_report_is_well_formed() {
    for n in -4..=4i64 {
        let rep = winding_report(n);
        assert_eq!(rep["n"].as_i64(), Some(n));
        assert_eq!(rep["mu_pairing"].as_i64(), Some(-n));
        assert!(rep["qtr"].is_string());
        assert!(rep["integrated_curvature"].is_string());
    }
    // the two trace columns carry the exact closed forms
    assert_eq!(winding_report(2)["qtr"], serde_json::json!("q^2"));
    assert_eq!(
        winding_report(2)["integrated_curvature"],
        serde_json::json!("-q^1 - q^-1")
    );
}
