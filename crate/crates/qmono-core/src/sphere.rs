//! The standard Podles sphere A(S^2_q) inside A(SU_q(2)), line-bundle
//! representation spaces V_J^{(n)}, the Peter-Weyl boxes W_p, and the
//! spherical harmonic decomposition of the sphere algebra.
//!
//! * A(S^2_q) = L_0, the coinvariants of the right U(1) coaction; its
//!   generators are B_- = -ac*, B_+ = q ca*, B_0 = q^2/(1+q^2) - q^2 cc*.
//! * Half-integer spins J are passed as the integer j2 = 2J throughout.
//! * V_J^{(n)} is spanned by (c^{J-n/2} a*^{J+n/2}) <| E^l, l = 0..2J,
//!   admissible when 2J >= |n| and 2J = n (mod 2).
//! * W_p is the (p+1) x (p+1) box F^t |> a*^p <| E^r; both Casimirs act
//!   on it by [p/2 + 1/2]^2 - 1/4.

use crate::actions::{act_left, act_right, UqGenerator};
use crate::algebra::{b_minus, b_plus, b_zero, AlgElt};
use crate::scalars::{qnum2, Scalar};
use std::fmt;

// ---- errors ----

/// Errors from sphere-level constructors.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SphereError {
    /// The element is not concentrated in weight zero.
    NotSphere,
    /// (n, 2J) fails the admissibility condition 2J >= |n|, 2J = n mod 2.
    Inadmissible {
        /// Bundle charge.
        n: i64,
        /// Twice the spin.
        j2: i64,
    },
}

impl fmt::Display for SphereError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SphereError::NotSphere => {
                write!(f, "element does not lie in the sphere subalgebra")
            }
            SphereError::Inadmissible { n, j2 } => write!(
                f,
                "spin 2J = {} is inadmissible for charge n = {}",
                j2, n
            ),
        }
    }
}

impl std::error::Error for SphereError {}

// ---- sphere elements ----

/// An element of the sphere subalgebra A(S^2_q) = L_0.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SphereElt {
    value: AlgElt,
}

impl SphereElt {
    /// Wrap an element, checking weight-zero concentration.
    pub fn new(value: AlgElt) -> Result<SphereElt, SphereError> {
        if value.is_sphere() {
            Ok(SphereElt { value })
        } else {
            Err(SphereError::NotSphere)
        }
    }

    /// The underlying algebra element.
    pub fn value(&self) -> &AlgElt {
        &self.value
    }

    /// Unwrap.
    pub fn into_value(self) -> AlgElt {
        self.value
    }
}

/// True iff x lies in the sphere subalgebra (weight-zero concentration,
/// equivalently Delta_R(x) = x (x) 1).
pub fn is_sphere(x: &AlgElt) -> bool {
    x.is_sphere()
}

/// The generators (B_-, B_0, B_+) of A(S^2_q).
pub fn b_generators() -> (SphereElt, SphereElt, SphereElt) {
    (
        SphereElt { value: b_minus() },
        SphereElt { value: b_zero() },
        SphereElt { value: b_plus() },
    )
}

// ---- representation spaces ----

/// The spin-J block of the charge-n line bundle L_n, with its standard
/// (unnormalized) basis.
#[derive(Clone, Debug)]
pub struct VjnBasis {
    n: i64,
    j2: i64,
    vectors: Vec<AlgElt>,
}

impl VjnBasis {
    /// Bundle charge.
    pub fn n(&self) -> i64 {
        self.n
    }

    /// Twice the spin.
    pub fn j2(&self) -> i64 {
        self.j2
    }

    /// The 2J + 1 basis vectors (c^{J-n/2} a*^{J+n/2}) <| E^l.
    pub fn vectors(&self) -> &[AlgElt] {
        &self.vectors
    }
}

/// Casimir eigenvalue [J + 1/2]^2 - 1/4 on the spin-J block (j2 = 2J).
pub fn casimir_constant(j2: i64) -> Scalar {
    qnum2(j2 + 1).pow(2) - Scalar::ratio(1, 4)
}

/// Build V_J^{(n)} (j2 = 2J) from the highest-weight vector
/// c^{(2J-n)/2} a*^{(2J+n)/2} by repeated <| E.
///
/// Signals [`SphereError::Inadmissible`] unless 2J >= |n| and 2J = n
/// (mod 2). Panics only if the constructed vectors violate the
/// representation-theory invariants (which would indicate an engine bug).
pub fn vjn_basis(n: i64, j2: i64) -> Result<VjnBasis, SphereError> {
    if j2 < n.abs() || (j2 - n).rem_euclid(2) != 0 {
        return Err(SphereError::Inadmissible { n, j2 });
    }
    let x = ((j2 - n) / 2) as u32;
    let y = ((j2 + n) / 2) as u32;
    let hw = AlgElt::c().pow(x) * AlgElt::a_star().pow(y);
    // highest-weight checks: killed by <| F, right K-weight q^J
    assert!(act_right(&hw, UqGenerator::F).is_zero());
    assert_eq!(
        act_right(&hw, UqGenerator::K),
        hw.scaled(&Scalar::s_pow(j2))
    );
    let mut vectors = Vec::with_capacity(j2 as usize + 1);
    let mut v = hw;
    for _ in 0..=j2 {
        assert!(v.is_weight(n));
        vectors.push(v.clone());
        v = act_right(&v, UqGenerator::E);
    }
    // the string terminates and the vectors span a (2J+1)-dim space
    assert!(v.is_zero());
    assert!(crate::linalg::linearly_independent(&vectors));
    Ok(VjnBasis { n, j2, vectors })
}

/// The Peter-Weyl box W_p: entry (t, r) = F^t |> a*^p <| E^r for
/// t, r = 0..p (row = left F-power, column = right E-power).
pub fn weyl_box(p: u32) -> Vec<Vec<AlgElt>> {
    let mut row = Vec::with_capacity(p as usize + 1);
    let mut v = AlgElt::a_star().pow(p);
    for _ in 0..=p {
        row.push(v.clone());
        v = act_right(&v, UqGenerator::E);
    }
    let mut box_rows = vec![row];
    for t in 1..=p as usize {
        let prev = &box_rows[t - 1];
        let next: Vec<AlgElt> =
            prev.iter().map(|w| act_left(UqGenerator::F, w)).collect();
        box_rows.push(next);
    }
    box_rows
}

/// The degree-l spherical harmonics: the 2l + 1 sphere elements
/// F^l |> a*^{2l} <| E^r, r = 0..2l.
pub fn harmonic_basis(l: u32) -> Vec<SphereElt> {
    let mut v = AlgElt::a_star().pow(2 * l);
    for _ in 0..l {
        v = act_left(UqGenerator::F, &v);
    }
    let mut out = Vec::with_capacity(2 * l as usize + 1);
    for _ in 0..=(2 * l) {
        out.push(SphereElt::new(v.clone()).expect("harmonics lie in L_0"));
        v = act_right(&v, UqGenerator::E);
    }
    out
}

// ---- tests ----

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::{act_casimir, Side};
    use crate::linalg::linearly_independent;
    use crate::scalars::qnum;

    fn q(k: i64) -> Scalar {
        Scalar::q_pow(k)
    }

    fn sp(k: i64) -> Scalar {
        Scalar::s_pow(k)
    }

    #[test]
    fn generators_and_relations() {
        let (bm, b0, bp) = b_generators();
        let (bm, b0, bp) = (bm.into_value(), b0.into_value(), bp.into_value());
        assert_eq!(bm, -(AlgElt::a() * AlgElt::c_star()));
        assert!(bm.is_sphere() && b0.is_sphere() && bp.is_sphere());
        // q-commutations hold for the traceless part of B_0 (the constant
        // summand q^2/(1+q^2) obstructs them for B_0 itself)
        let t0 = &b0 - &AlgElt::constant(q(2) / (Scalar::one() + q(2)));
        assert_eq!(&bm * &t0, (&t0 * &bm).scaled(&q(2)));
        assert_eq!(&t0 * &bp, (&bp * &t0).scaled(&q(2)));
        // quadratic relations, verbatim
        let c1 = (Scalar::one() + q(2)).inv();
        let c2 = (Scalar::one() + q(-2)).inv();
        assert_eq!(
            &bp * &bm,
            ((b0.scaled(&q(-2)) - AlgElt::constant(c1.clone()))
                * (b0.scaled(&q(-2)) + AlgElt::constant(c2.clone())))
            .scaled(&q(1))
        );
        assert_eq!(
            &bm * &bp,
            ((&b0 + &AlgElt::constant(c1)) * (&b0 - &AlgElt::constant(c2)))
                .scaled(&q(1))
        );
        // star structure
        assert_eq!(b0.star(), b0);
        assert_eq!(bp.star(), bm.scaled(&-q(1)));
    }

    #[test]
    fn sphere_membership() {
        assert!(is_sphere(&b_zero()));
        assert!(!is_sphere(&AlgElt::a()));
        assert!(is_sphere(&AlgElt::word(0, 1, 1)));
        assert!(SphereElt::new(AlgElt::a()).is_err());
    }

    #[test]
    fn vjn_small_cases() {
        let v = vjn_basis(1, 1).unwrap();
        assert_eq!(
            v.vectors(),
            &[AlgElt::a_star(), AlgElt::c_star().scaled(&-q(1))]
        );
        let v = vjn_basis(0, 0).unwrap();
        assert_eq!(v.vectors(), &[AlgElt::one()]);
        let v = vjn_basis(-2, 2).unwrap();
        assert_eq!(v.vectors().len(), 3);
        assert_eq!(v.vectors()[0], AlgElt::c().pow(2));
        assert_eq!(
            v.vectors()[1],
            (AlgElt::c() * AlgElt::a()).scaled(&(sp(1) * qnum(2)))
        );
    }

    #[test]
    fn vjn_admissibility() {
        assert_eq!(
            vjn_basis(1, 2),
            Err(SphereError::Inadmissible { n: 1, j2: 2 })
        );
        assert_eq!(
            vjn_basis(3, 1),
            Err(SphereError::Inadmissible { n: 3, j2: 1 })
        );
        assert!(vjn_basis(-3, 5).is_ok());
    }

    impl PartialEq for VjnBasis {
        fn eq(&self, other: &Self) -> bool {
            self.n == other.n && self.j2 == other.j2 && self.vectors == other.vectors
        }
    }

    #[test]
    fn vjn_joint_independence() {
        // fixed n, varying J: the blocks sum directly
        for n in [-1i64, 0, 2] {
            let mut all = Vec::new();
            let start = n.abs();
            for j2 in [start, start + 2, start + 4] {
                all.extend(vjn_basis(n, j2).unwrap().vectors().to_vec());
            }
            assert!(linearly_independent(&all), "n = {}", n);
        }
    }

    #[test]
    fn lowest_weight_vectors() {
        // a^{J-n/2} c*^{J+n/2} is killed by <| E and has right weight -J
        for (n, j2) in [(1i64, 1i64), (0, 2), (-2, 4), (3, 5)] {
            let x = ((j2 - n) / 2) as u32;
            let y = ((j2 + n) / 2) as u32;
            let lw = AlgElt::a().pow(x) * AlgElt::c_star().pow(y);
            assert!(act_right(&lw, UqGenerator::E).is_zero());
            assert_eq!(
                act_right(&lw, UqGenerator::K),
                lw.scaled(&sp(-j2))
            );
        }
    }

    #[test]
    fn weyl_box_small() {
        let b0 = weyl_box(0);
        assert_eq!(b0, vec![vec![AlgElt::one()]]);
        let b1 = weyl_box(1);
        assert_eq!(b1[0][0], AlgElt::a_star());
        assert_eq!(b1[0][1], AlgElt::c_star().scaled(&-q(1)));
        assert_eq!(b1[1][0], AlgElt::c());
        assert_eq!(b1[1][1], AlgElt::a());
        // the middle entry of W_2
        let b2 = weyl_box(2);
        let expect = (AlgElt::a() * AlgElt::a_star()
            - AlgElt::c() * AlgElt::c_star())
        .scaled(&qnum(2));
        assert_eq!(b2[1][1], expect);
    }

    #[test]
    fn weyl_box_independence_and_casimir() {
        for p in 0..=3u32 {
            let b = weyl_box(p);
            let flat: Vec<AlgElt> = b.iter().flatten().cloned().collect();
            assert_eq!(flat.len(), ((p + 1) * (p + 1)) as usize);
            assert!(linearly_independent(&flat), "p = {}", p);
            let ev = casimir_constant(p as i64);
            for w in &flat {
                assert_eq!(act_casimir(w, Side::Left), w.scaled(&ev));
                assert_eq!(act_casimir(w, Side::Right), w.scaled(&ev));
            }
        }
    }

    #[test]
    fn harmonics() {
        let h0 = harmonic_basis(0);
        assert_eq!(h0.len(), 1);
        assert_eq!(h0[0].value(), &AlgElt::one());
        // F |> a*^2 = q^{-1/2} [2] c a*
        let h1 = harmonic_basis(1);
        assert_eq!(
            h1[0].value(),
            &(AlgElt::c() * AlgElt::a_star()).scaled(&(sp(-1) * qnum(2)))
        );
        let h2 = harmonic_basis(2);
        assert_eq!(h2.len(), 5);
        let flat: Vec<AlgElt> = h2.iter().map(|s| s.value().clone()).collect();
        assert!(linearly_independent(&flat));
        // harmonics of degree l carry Casimir eigenvalue [l + 1/2]^2 - 1/4
        for x in &flat {
            assert_eq!(
                act_casimir(x, Side::Left),
                x.scaled(&casimir_constant(4))
            );
        }
    }
}
