//! The Haar state, the twisted cyclic 2-cocycle, the mu-trace Fredholm
//! pairing, the q-trace, and the two winding numbers.
//!
//! * [`haar`] is the unique invariant state, evaluated exactly through the
//!   moment table v_l = h((c*c)^l); the moments are derived from the
//!   invariance constraints themselves (see [`HaarTable::derive`]) and
//!   frozen in [`haar_moment`].
//! * [`tau`] is the twisted cyclic 2-cocycle f0, f1, f2 -> integral of
//!   f0 df1 ^ df2 over the sphere.
//! * [`mu_trace`] pairs with [`ch0`] to produce the integer winding
//!   number, while [`qtrace`] and [`integrated_curvature`] produce the
//!   q-deformed winding numbers q^n and -[n].

use std::collections::BTreeMap;
use std::fmt;

use crate::actions::{act_left, act_right, UqGenerator};
use crate::algebra::AlgElt;
use crate::bundles::{projection, WeightedMatrix};
use crate::calculus::{d_sphere, wedge_sphere, Form2S};
use crate::gauge::curvature_scalar;
use crate::scalars::{rat, Scalar};
use crate::sphere::{SphereElt, SphereError};

// ---- the Haar state ----

/// The moment v_l = h((c*c)^l) of the Haar state, in closed form:
/// v_0 = 1 and v_l = (1 - q^2) / (1 - q^{2(l+1)}).
///
/// The closed form is frozen from the invariance-derived recursion; the
/// test suite re-derives it through [`HaarTable::derive`] and keeps the
/// full invariance property as a permanent regression.
pub fn haar_moment(l: u32) -> Scalar {
    if l == 0 {
        return Scalar::one();
    }
    (Scalar::one() - Scalar::q_pow(2))
        / (Scalar::one() - Scalar::q_pow(2 * (i64::from(l) + 1)))
}

/// Moments of the Haar state, derived from invariance rather than copied
/// from the closed form.
#[derive(Clone, Debug)]
pub struct HaarTable {
    values: BTreeMap<u32, Scalar>,
}

impl HaarTable {
    /// Derive v_0 .. v_max from scratch.
    ///
    /// v_0 = 1 is the normalization. For each l the right invariance
    /// h((a* c^{l+1} c*^l) |< E) = 0 expands into a linear relation whose
    /// only new unknown is v_{l+1}; solving step by step fills the table.
    pub fn derive(max_l: u32) -> HaarTable {
        let mut values = BTreeMap::new();
        values.insert(0u32, Scalar::one());
        for l in 0..max_l {
            let constraint = act_right(&AlgElt::word(-1, l + 1, l), UqGenerator::E);
            let mut known = Scalar::zero();
            let mut unknown = Scalar::zero();
            for (mono, coeff) in constraint.terms() {
                if mono.k != 0 || mono.l != mono.m {
                    continue;
                }
                if mono.l == l + 1 {
                    unknown = unknown + coeff.clone();
                } else {
                    known = known + coeff.clone() * values[&mono.l].clone();
                }
            }
            assert!(
                !unknown.is_zero(),
                "invariance constraint at order {} does not reach the next moment",
                l + 1
            );
            values.insert(l + 1, -(known / unknown));
        }
        HaarTable { values }
    }

    /// The derived moment v_l.
    ///
    /// Panics if l is beyond the derived range.
    pub fn moment(&self, l: u32) -> &Scalar {
        self.values
            .get(&l)
            .unwrap_or_else(|| panic!("moment v_{} not derived", l))
    }

    /// The largest derived order.
    pub fn max_order(&self) -> u32 {
        *self.values.keys().last().expect("table is never empty")
    }
}

/// The Haar state h, evaluated exactly.
///
/// A normal-form word a^k c^l c*^m contributes only when k = 0 and l = m,
/// in which case h((c*c)^l) = v_l; everything else is linear extension.
pub fn haar(x: &AlgElt) -> Scalar {
    let mut out = Scalar::zero();
    for (mono, coeff) in x.terms() {
        if mono.k == 0 && mono.l == mono.m {
            out = out + coeff.clone() * haar_moment(mono.l);
        }
    }
    out
}

/// The modular automorphism of the Haar state on all of A(SU_q(2)):
/// sigma(x) = K^2 |> x <| K^2.
///
/// The state satisfies h(f g) = h(g sigma(f)), equivalently
/// h(f g) = h(sigma^{-1}(g) f). On sphere elements (left weight zero)
/// sigma coincides with the modular automorphism x -> x <| K^2 used by
/// the gauge layer.
pub fn modular_sigma(x: &AlgElt) -> AlgElt {
    let lk = act_left(UqGenerator::K, &act_left(UqGenerator::K, x));
    act_right(&act_right(&lk, UqGenerator::K), UqGenerator::K)
}

/// The inverse modular automorphism sigma^{-1}(x) = K^{-2} |> x <| K^{-2}.
pub fn modular_sigma_inv(x: &AlgElt) -> AlgElt {
    let lk = act_left(UqGenerator::Kinv, &act_left(UqGenerator::Kinv, x));
    act_right(&act_right(&lk, UqGenerator::Kinv), UqGenerator::Kinv)
}

/// True when h(f g) = h(g sigma(f)), the modular property of the Haar
/// state for the pair (f, g).
pub fn modular_pair_check(f: &AlgElt, g: &AlgElt) -> bool {
    haar(&(f * g)) == haar(&(g * &modular_sigma(f)))
}

/// True when h(x |< X) = eps(X) h(x) and h(X |> x) = eps(X) h(x) for all
/// generators X of U_q(su(2)).
pub fn invariance_check(x: &AlgElt) -> bool {
    use UqGenerator::{Kinv, E, F, K};
    let hx = haar(x);
    for g in [K, Kinv, E, F] {
        let eps = match g {
            K | Kinv => Scalar::one(),
            E | F => Scalar::zero(),
        };
        let expected = eps * hx.clone();
        if haar(&act_right(x, g)) != expected || haar(&act_left(g, x)) != expected {
            return false;
        }
    }
    true
}

// ---- the twisted integral and cyclic 2-cocycle ----

/// The integral of a top form over the sphere: f omega_+ ^ omega_- maps
/// to h(f).
///
/// Signals [`SphereError::NotSphere`] when the form carries a nonzero
/// twist.
pub fn integral(w: &Form2S) -> Result<Scalar, SphereError> {
    if w.n_twist() != 0 {
        return Err(SphereError::NotSphere);
    }
    Ok(haar(w.f()))
}

/// The twisted cyclic 2-cocycle tau(f0, f1, f2) = integral of
/// f0 df1 ^ df2.
pub fn tau(f0: &SphereElt, f1: &SphereElt, f2: &SphereElt) -> Scalar {
    let two_form = wedge_sphere(&d_sphere(f1), &d_sphere(f2));
    haar(&(f0.value() * two_form.f()))
}

fn smul(a: &SphereElt, b: &SphereElt) -> SphereElt {
    SphereElt::new(a.value() * b.value()).expect("sphere algebra is closed under products")
}

fn stwist_inv(f: &SphereElt) -> SphereElt {
    SphereElt::new(modular_sigma_inv(f.value())).expect("the modular twist preserves the sphere")
}

/// True when tau is cyclic up to the modular twist:
/// tau(f0, f1, f2) = tau(sigma^{-1}(f2), f0, f1).
pub fn cyclicity_check(f0: &SphereElt, f1: &SphereElt, f2: &SphereElt) -> bool {
    tau(f0, f1, f2) == tau(&stwist_inv(f2), f0, f1)
}

/// The twisted Hochschild coboundary of tau, which vanishes identically:
///
/// (b tau)(f0, f1, f2, f3) = tau(f0 f1, f2, f3) - tau(f0, f1 f2, f3)
///   + tau(f0, f1, f2 f3) - tau(sigma^{-1}(f3) f0, f1, f2).
pub fn b_theta_tau(f0: &SphereElt, f1: &SphereElt, f2: &SphereElt, f3: &SphereElt) -> Scalar {
    tau(&smul(f0, f1), f2, f3) - tau(f0, &smul(f1, f2), f3) + tau(f0, f1, &smul(f2, f3))
        - tau(&smul(&stwist_inv(f3), f0), f1, f2)
}

// ---- the mu-trace and the integer winding number ----

/// Error from the mu-trace.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceError {
    /// The element has a component outside the unital subalgebra
    /// generated by c*c.
    OutsideDomain,
}

impl fmt::Display for TraceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceError::OutsideDomain => {
                write!(f, "element lies outside the c*c subalgebra")
            }
        }
    }
}

impl std::error::Error for TraceError {}

/// The trace mu on the unital subalgebra generated by c*c: it vanishes
/// on constants and mu((c*c)^k) = 1/(1 - q^{2k}) for k > 0.
///
/// Signals [`TraceError::OutsideDomain`] for elements with any component
/// off that subalgebra.
pub fn mu_trace(f: &AlgElt) -> Result<Scalar, TraceError> {
    let mut out = Scalar::zero();
    for (mono, coeff) in f.terms() {
        if mono.k != 0 || mono.l != mono.m {
            return Err(TraceError::OutsideDomain);
        }
        if mono.l > 0 {
            out = out
                + coeff.clone()
                    / (Scalar::one() - Scalar::q_pow(2 * i64::from(mono.l)));
        }
    }
    Ok(out)
}

/// The zeroth Chern character of the charge-n projection: the weighted
/// diagonal trace, a polynomial in c*c.
pub fn ch0(n: i64) -> SphereElt {
    let p = projection(n);
    let mut sum = AlgElt::zero();
    for mu in 0..p.dim() {
        sum = &sum + &p.entries()[mu][mu].scaled(&p.weights()[mu]);
    }
    SphereElt::new(sum).expect("diagonal projection entries are spherical")
}

/// The closed product form of [`ch0`], used as an independent
/// cross-check: for n >= 0
///
///   sum_mu beta_{n,mu} (c*c)^mu prod_{j=0}^{n-mu-1} (1 - q^{-2j} c*c),
///
/// and for n <= 0 the mirror alpha-weighted form
///
///   sum_mu alpha_{n,mu} (c*c)^{|n|-mu} prod_{j=1}^{mu} (1 - q^{2j} c*c).
///
/// The lower product must start at j = 1: starting it at j = 0 instead
/// reproduces the frame partition of unity and the sum telescopes to the
/// constant 1.
pub fn ch0_product_form(n: i64) -> SphereElt {
    let w = AlgElt::word(0, 1, 1);
    let mut sum = AlgElt::zero();
    if n >= 0 {
        for mu in 0..=n {
            let mut term =
                AlgElt::word(0, mu as u32, mu as u32).scaled(&crate::bundles::beta_coeff(n, mu as u32));
            for j in 0..(n - mu) {
                term = &term * &(AlgElt::one() - w.scaled(&Scalar::q_pow(-2 * j)));
            }
            sum = &sum + &term;
        }
    } else {
        let absn = -n;
        for mu in 0..=absn {
            let pow = (absn - mu) as u32;
            let mut term =
                AlgElt::word(0, pow, pow).scaled(&crate::bundles::alpha_coeff(absn, mu as u32));
            for j in 1..=mu {
                term = &term * &(AlgElt::one() - w.scaled(&Scalar::q_pow(2 * j)));
            }
            sum = &sum + &term;
        }
    }
    SphereElt::new(sum).expect("polynomials in c*c are spherical")
}

/// The Fredholm pairing mu(ch0(p^{(n)})), a constant Scalar equal to the
/// integer -n.
pub fn winding_pairing(n: i64) -> Scalar {
    mu_trace(ch0(n).value()).expect("ch0 is a polynomial in c*c")
}

// ---- the q-trace and the q-winding numbers ----

/// The q-trace of a charge-n matrix: the weighted diagonal trace against
/// the K^2 weight diagonal q^{|n| - 2 mu}.
pub fn qtrace(m: &WeightedMatrix) -> AlgElt {
    let absn = m.n().abs();
    let mut out = AlgElt::zero();
    for mu in 0..m.dim() {
        let wgt = m.weights()[mu].clone() * Scalar::q_pow(absn - 2 * mu as i64);
        out = &out + &m.entries()[mu][mu].scaled(&wgt);
    }
    out
}

/// The modular twist transported to matrices: the entrywise inverse
/// modular automorphism conjugated by the K^2 weight diagonal,
///
///   twist(M)_{nu mu} = q^{2 nu - 2 mu} sigma^{-1}(M_{nu mu}).
pub fn matrix_twist(m: &WeightedMatrix) -> WeightedMatrix {
    let entries = (0..m.dim())
        .map(|nu| {
            (0..m.dim())
                .map(|mu| {
                    modular_sigma_inv(&m.entries()[nu][mu])
                        .scaled(&Scalar::q_pow(2 * (nu as i64) - 2 * (mu as i64)))
                })
                .collect()
        })
        .collect();
    WeightedMatrix::new(m.n(), entries, m.weights().to_vec())
}

/// The twisted trace property of the state M -> h(qTr(M)):
///
///   h(qTr(M1 M2)) = h(qTr(twist(M2) M1))
///
/// with [`matrix_twist`] as the twist. The conjugation by the weight
/// diagonal is essential: the plain entrywise twist fails the identity
/// even for M1 = M2 = p (the test suite records this sharpness).
pub fn twisted_trace_check(m1: &WeightedMatrix, m2: &WeightedMatrix) -> bool {
    haar(&qtrace(&m1.weighted_mul(m2))) == haar(&qtrace(&matrix_twist(m2).weighted_mul(m1)))
}

/// The integrated curvature -q int qTr(F_nabla) = -[n], computed from
/// the curvature two-form F_nabla = curvature_scalar(n) p omega_+ ^
/// omega_-.
pub fn integrated_curvature(n: i64) -> Scalar {
    let coeff = qtrace(&projection(n)).scaled(&curvature_scalar(n));
    -(Scalar::q_pow(1)
        * integral(&Form2S::new(0, coeff)).expect("the q-trace of the curvature is spherical"))
}

/// The winding report for charge n: the integer pairing, the q-trace of
/// the projection, and the integrated curvature.
pub fn winding_report(n: i64) -> serde_json::Value {
    let pairing = winding_pairing(n);
    let pairing_int = scalar_to_integer(&pairing)
        .expect("the mu pairing of ch0 is an integer");
    let qtr = qtrace(&projection(n));
    serde_json::json!({
        "n": n,
        "mu_pairing": pairing_int,
        "qtr": constant_part(&qtr).q_text(),
        "integrated_curvature": integrated_curvature(n).q_text(),
    })
}

/// The coefficient of the unit word (the whole element must be constant).
///
/// Panics on non-constant input.
fn constant_part(x: &AlgElt) -> Scalar {
    let mut out = Scalar::zero();
    for (mono, coeff) in x.terms() {
        assert!(mono.is_unit(), "element is not constant");
        out = out + coeff.clone();
    }
    out
}

/// Extracts an exact integer from a constant Scalar.
fn scalar_to_integer(s: &Scalar) -> Option<i64> {
    use num_traits::{One, ToPrimitive};
    let v = s.eval_at(&rat(4, 1)).ok()?;
    if s != &Scalar::from_rat(v.clone()) || !v.denom().is_one() {
        return None;
    }
    v.numer().to_i64()
}

// ---- tests ----

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::modular_auto;
    use crate::bundles::weight_coeff;
    use crate::calculus::hodge0;
    use crate::fuzz::{random_element, random_sphere_element, rng};
    use crate::scalars::qnum;
    use crate::sphere::b_generators;

    fn q(k: i64) -> Scalar {
        Scalar::q_pow(k)
    }

    fn sph(x: AlgElt) -> SphereElt {
        SphereElt::new(x).unwrap()
    }

    #[test]
    fn haar_examples() {
        assert_eq!(haar(&AlgElt::one()), Scalar::one());
        assert_eq!(haar(&AlgElt::word(1, 0, 0)), Scalar::zero());
        assert_eq!(haar(&AlgElt::word(0, 1, 0)), Scalar::zero());
        // v_1 = 1/(1+q^2), v_2 = 1/(1+q^2+q^4)
        let v1 = Scalar::one() / (Scalar::one() + q(2));
        let v2 = Scalar::one() / (Scalar::one() + q(2) + q(4));
        assert_eq!(haar(&AlgElt::word(0, 1, 1)), v1);
        assert_eq!(haar(&AlgElt::word(0, 2, 2)), v2);
        // h(a a*) = 1/(1+q^2) and h(a* a) = q^2/(1+q^2)
        let a = AlgElt::word(1, 0, 0);
        let astar = AlgElt::word(-1, 0, 0);
        assert_eq!(haar(&(&a * &astar)), v1.clone());
        assert_eq!(haar(&(&astar * &a)), q(2) * v1);
        // the sphere generators are centered
        let (bm, b0, bp) = b_generators();
        assert_eq!(haar(bm.value()), Scalar::zero());
        assert_eq!(haar(b0.value()), Scalar::zero());
        assert_eq!(haar(bp.value()), Scalar::zero());
    }

    #[test]
    fn haar_table_matches_frozen_moments() {
        let table = HaarTable::derive(8);
        assert_eq!(table.max_order(), 8);
        for l in 0..=8 {
            assert_eq!(table.moment(l), &haar_moment(l), "moment v_{}", l);
        }
    }

    #[test]
    fn haar_moment_classical_limits() {
        for l in 0..=5u32 {
            assert_eq!(
                haar_moment(l).limit_at_one().unwrap(),
                rat(1, i64::from(l) + 1),
                "limit of v_{}",
                l
            );
        }
    }

    #[test]
    fn haar_invariance() {
        // all sphere monomials w^l (c-excess balanced by a-powers) through
        // total degree five
        for l in 0..=3u32 {
            for m in 0..=3u32 {
                let k = i64::from(m) - i64::from(l);
                let f = AlgElt::word(k, l, m);
                if k.unsigned_abs() as i64 + i64::from(l) + i64::from(m) > 5 {
                    continue;
                }
                assert!(invariance_check(&f), "monomial ({}, {}, {})", k, l, m);
            }
        }
        // random general elements: invariance holds on the whole algebra
        let mut r = rng(42);
        for _ in 0..20 {
            let x = random_element(&mut r, 4, 3);
            assert!(invariance_check(&x));
        }
    }

    #[test]
    fn haar_recursion_constraints() {
        // the defining constraints of the moment table
        for l in 0..=5u32 {
            let f = AlgElt::word(-1, l + 1, l);
            assert_eq!(haar(&act_right(&f, UqGenerator::E)), Scalar::zero());
        }
    }

    #[test]
    fn modular_property() {
        let (bm, b0, bp) = b_generators();
        // exact values: with D = (1+q^2)(1+q^2+q^4),
        // h(B_- B_+) = -q^3/D and h(B_+ B_-) = -q^5/D
        let d = (Scalar::one() + q(2)) * (Scalar::one() + q(2) + q(4));
        assert_eq!(haar(&(bm.value() * bp.value())), -(q(3) / d.clone()));
        assert_eq!(haar(&(bp.value() * bm.value())), -(q(5) / d));
        // the modular placement h(f g) = h(g sigma(f)) on the generators
        for f in [&bm, &b0, &bp] {
            for g in [&bm, &b0, &bp] {
                assert!(modular_pair_check(f.value(), g.value()));
            }
        }
        // sharpness: the transposed placement h(f g) = h(sigma(g) f) fails
        let lhs = haar(&(bm.value() * bp.value()));
        let rhs = haar(&(&modular_auto(bp.value()) * bm.value()));
        assert_ne!(lhs, rhs);
        // full-algebra pairs, including non-sphere ones
        let a = AlgElt::word(1, 0, 0);
        let astar = AlgElt::word(-1, 0, 0);
        assert!(modular_pair_check(&a, &astar));
        assert!(modular_pair_check(&astar, &a));
        assert!(modular_pair_check(&(&a * &a), &(&astar * &astar)));
        // 100 seeded random sphere pairs
        let mut r = rng(2024);
        for _ in 0..100 {
            let f = random_sphere_element(&mut r, 3, 3);
            let g = random_sphere_element(&mut r, 3, 3);
            assert!(modular_pair_check(f.value(), g.value()));
        }
    }

    #[test]
    fn integral_examples() {
        assert_eq!(
            integral(&hodge0(&sph(AlgElt::one()))).unwrap(),
            Scalar::one()
        );
        let (_, b0, _) = b_generators();
        assert_eq!(
            integral(&Form2S::new(0, b0.into_value())).unwrap(),
            Scalar::zero()
        );
        assert_eq!(
            integral(&Form2S::new(0, AlgElt::zero())).unwrap(),
            Scalar::zero()
        );
        // twisted top forms are rejected
        assert_eq!(
            integral(&Form2S::new(2, AlgElt::word(0, 0, 2))),
            Err(SphereError::NotSphere)
        );
    }

    #[test]
    fn tau_examples() {
        let (bm, b0, bp) = b_generators();
        let one = sph(AlgElt::one());
        // middle unit kills the cocycle
        for f in [&bm, &b0, &bp] {
            for g in [&bm, &b0, &bp] {
                assert_eq!(tau(f, &one, g), Scalar::zero());
                assert_eq!(tau(f, g, &one), Scalar::zero());
            }
        }
        // a unit in the first slot makes the integrand exact, so the
        // integral vanishes by invariance (Stokes)
        for f in [&bm, &b0, &bp] {
            for g in [&bm, &b0, &bp] {
                assert_eq!(tau(&one, f, g), Scalar::zero());
            }
        }
        // frozen nontrivial values (derived once, kept as regression):
        // with D' = (1+q^4)(1+q^2+q^4),
        // tau(B_0, B_-, B_+) = -q^5/D' and tau(B_-, B_0, B_+) = q^3/D'
        let dprime = (Scalar::one() + q(4)) * (Scalar::one() + q(2) + q(4));
        assert_eq!(tau(&b0, &bm, &bp), -(q(5) / dprime.clone()));
        assert_eq!(tau(&bm, &b0, &bp), q(3) / dprime);
    }

    #[test]
    fn twisted_cyclicity() {
        let (bm, b0, bp) = b_generators();
        let gens = [&bm, &b0, &bp];
        for f0 in gens {
            for f1 in gens {
                for f2 in gens {
                    assert!(cyclicity_check(f0, f1, f2));
                }
            }
        }
        // sharpness: the untwisted rotation fails on some triple
        let mut mismatches = 0;
        for f0 in gens {
            for f1 in gens {
                for f2 in gens {
                    if tau(f0, f1, f2) != tau(f2, f0, f1) {
                        mismatches += 1;
                    }
                }
            }
        }
        assert!(mismatches > 0);
    }

    #[test]
    fn twisted_coboundary_vanishes() {
        let (bm, b0, bp) = b_generators();
        let gens = [&bm, &b0, &bp];
        for f0 in gens {
            for f1 in gens {
                for f2 in gens {
                    for f3 in gens {
                        assert_eq!(b_theta_tau(f0, f1, f2, f3), Scalar::zero());
                    }
                }
            }
        }
    }

    #[test]
    fn mu_trace_examples() {
        assert_eq!(mu_trace(&AlgElt::one()), Ok(Scalar::zero()));
        assert_eq!(
            mu_trace(&AlgElt::word(0, 1, 1)),
            Ok(Scalar::one() / (Scalar::one() - q(2)))
        );
        assert_eq!(
            mu_trace(&AlgElt::word(0, 3, 3)),
            Ok(Scalar::one() / (Scalar::one() - q(6)))
        );
        assert_eq!(
            mu_trace(&AlgElt::word(1, 0, 0)),
            Err(TraceError::OutsideDomain)
        );
        // B_0 lies in the domain, B_+- do not
        let (bm, b0, bp) = b_generators();
        assert!(mu_trace(b0.value()).is_ok());
        assert_eq!(mu_trace(bm.value()), Err(TraceError::OutsideDomain));
        assert_eq!(mu_trace(bp.value()), Err(TraceError::OutsideDomain));
    }

    #[test]
    fn ch0_examples() {
        let w = AlgElt::word(0, 1, 1);
        assert_eq!(ch0(0).value(), &AlgElt::one());
        assert_eq!(
            ch0(1).value(),
            &(&AlgElt::one() + &w.scaled(&(q(2) - Scalar::one())))
        );
        assert_eq!(
            ch0(-1).value(),
            &(&AlgElt::one() + &w.scaled(&(Scalar::one() - q(2))))
        );
    }

    #[test]
    fn ch0_matches_product_form() {
        for n in -6..=6i64 {
            assert_eq!(ch0(n), ch0_product_form(n), "charge {}", n);
        }
    }

    #[test]
    fn winding_pairings() {
        for n in -5..=5i64 {
            assert_eq!(winding_pairing(n), Scalar::from_int(-n), "charge {}", n);
        }
    }

    #[test]
    fn qtrace_of_projections() {
        for n in -5..=5i64 {
            assert_eq!(
                qtrace(&projection(n)),
                AlgElt::constant(q(n)),
                "charge {}",
                n
            );
        }
    }

    #[test]
    fn twisted_trace_property() {
        // idempotent case
        for n in [-2, -1, 1, 2] {
            let p = projection(n);
            assert!(twisted_trace_check(&p, &p), "charge {}", n);
        }
        // random sphere-valued matrices over the frame weights
        let mut r = rng(99);
        for n in [1i64, -1, 2] {
            let dim = n.unsigned_abs() as usize + 1;
            let weights: Vec<Scalar> = (0..dim as u32).map(|mu| weight_coeff(n, mu)).collect();
            for _ in 0..5 {
                let m1 = WeightedMatrix::new(
                    n,
                    (0..dim)
                        .map(|_| {
                            (0..dim)
                                .map(|_| random_sphere_element(&mut r, 2, 2).into_value())
                                .collect()
                        })
                        .collect(),
                    weights.clone(),
                );
                let m2 = WeightedMatrix::new(
                    n,
                    (0..dim)
                        .map(|_| {
                            (0..dim)
                                .map(|_| random_sphere_element(&mut r, 2, 2).into_value())
                                .collect()
                        })
                        .collect(),
                    weights.clone(),
                );
                assert!(twisted_trace_check(&m1, &m2), "charge {}", n);
            }
        }
        // sharpness: the plain entrywise twist (no weight conjugation)
        // breaks the identity already for M1 = M2 = p at n = 1
        let p = projection(1);
        let naive = WeightedMatrix::new(
            1,
            (0..2)
                .map(|nu: usize| {
                    (0..2)
                        .map(|mu: usize| {
                            act_right(
                                &act_right(&p.entries()[nu][mu], UqGenerator::K),
                                UqGenerator::K,
                            )
                        })
                        .collect()
                })
                .collect(),
            p.weights().to_vec(),
        );
        assert_ne!(
            haar(&qtrace(&naive.weighted_mul(&p))),
            haar(&qtrace(&p.weighted_mul(&p)))
        );
    }

    #[test]
    fn integrated_curvatures() {
        for n in -4..=4i64 {
            assert_eq!(integrated_curvature(n), -qnum(n), "charge {}", n);
        }
        assert_eq!(integrated_curvature(0), Scalar::zero());
        assert_eq!(integrated_curvature(2), -(q(1) + q(-1)));
        assert_eq!(integrated_curvature(-1), Scalar::one());
    }

    #[test]
    fn winding_report_shape() {
        let report = winding_report(3);
        assert_eq!(report["n"], 3);
        assert_eq!(report["mu_pairing"], -3);
        assert_eq!(report["qtr"], "q^3");
        assert_eq!(report["integrated_curvature"], "-q^2 - 1 - q^-2");
    }
}
