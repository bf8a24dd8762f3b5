//! Seeded random element generators for property tests.
//!
//! Everything is driven by an explicit ChaCha8 stream so that failures
//! reproduce from the printed seed alone.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgElt, Monomial};
use crate::scalars::Scalar;
use crate::sphere::SphereElt;

/// A deterministic generator for the given seed.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform pick in lo..=hi.
///
/// Panics if hi < lo.
pub fn pick(r: &mut ChaCha8Rng, lo: i64, hi: i64) -> i64 {
    assert!(lo <= hi, "empty range");
    lo + (r.next_u64() % ((hi - lo + 1) as u64)) as i64
}

/// A nonzero rational times an integer power of q^{1/2}.
pub fn random_scalar(r: &mut ChaCha8Rng) -> Scalar {
    let mut p = pick(r, -9, 9);
    if p == 0 {
        p = 1;
    }
    let den = pick(r, 1, 4);
    let e = pick(r, -4, 4);
    Scalar::ratio(p, den) * Scalar::s_pow(e)
}

/// A random normal-form word a^k c^l c*^m with |k|, l, m <= max_deg.
pub fn random_monomial(r: &mut ChaCha8Rng, max_deg: u32) -> Monomial {
    let d = i64::from(max_deg);
    Monomial::new(
        pick(r, -d, d),
        pick(r, 0, d) as u32,
        pick(r, 0, d) as u32,
    )
}

/// A random element with at most `terms` monomials.
pub fn random_element(r: &mut ChaCha8Rng, terms: u32, max_deg: u32) -> AlgElt {
    let mut out = AlgElt::zero();
    for _ in 0..terms {
        out.add_term(random_monomial(r, max_deg), random_scalar(r));
    }
    out
}

/// A random element concentrated in degree n (every monomial satisfies
/// -k - l + m = n).
pub fn random_weight_element(r: &mut ChaCha8Rng, n: i64, terms: u32, max_deg: u32) -> AlgElt {
    let d = i64::from(max_deg);
    let mut out = AlgElt::zero();
    for _ in 0..terms {
        // choose k and l, then m is forced; retry until m lands in range
        loop {
            let k = pick(r, -d, d);
            let l = pick(r, 0, d);
            let m = n + k + l;
            if (0..=d).contains(&m) {
                out.add_term(Monomial::new(k, l as u32, m as u32), random_scalar(r));
                break;
            }
        }
    }
    out
}

/// A random element of the sphere algebra.
pub fn random_sphere_element(r: &mut ChaCha8Rng, terms: u32, max_deg: u32) -> SphereElt {
    SphereElt::new(random_weight_element(r, 0, terms, max_deg))
        .expect("weight-0 elements are spherical")
}

// ---- tests ----
