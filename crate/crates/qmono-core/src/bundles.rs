//! Line bundles L_n as finitely generated projective modules: frame
//! coefficients, the square-root-free weighted representation of the
//! frame |Psi> and the projection p = |Psi><Psi|, and the module
//! isomorphism between L_n and the section space E_n.
//!
//! * The paper-level frame components carry square roots of the
//!   q-binomial coefficients beta_{n,mu} (or alpha_{n,mu} for n < 0),
//!   which do not live in Q(s). Every identity in scope consumes those
//!   roots in whole pairs, so we store bare entries plus a weight vector:
//!   the semantic frame component is sqrt(w_mu) e_mu and the semantic
//!   matrix entry is sqrt(w_mu w_nu) r_{mu nu}. All stored data stays in
//!   the scalar field.
//! * Frames: n >= 0 has e_mu = c*^mu a*^{n-mu} with w_mu = beta_{n,mu};
//!   n < 0 has e_mu = c^{|n|-mu} a^mu with w_mu = alpha_{n,mu}.
//! * The weighted product of matrices is
//!   (M N)_{mu rho} = sum_nu w_nu M_{mu nu} N_{nu rho}.

use crate::algebra::AlgElt;
use crate::scalars::Scalar;
use std::fmt;

// ---- errors ----

/// Errors from bundle-level constructors and conversions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BundleError {
    /// phi_to_sigma input not concentrated in the stated weight.
    WrongDegree {
        /// The expected bundle charge.
        n: i64,
    },
    /// sigma_to_phi input is not a section (sigma p != sigma).
    NotSection,
}

impl fmt::Display for BundleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BundleError::WrongDegree { n } => {
                write!(f, "element does not lie in L_{}", n)
            }
            BundleError::NotSection => {
                write!(f, "covector is not invariant under the projection")
            }
        }
    }
}

impl std::error::Error for BundleError {}

// ---- frame coefficients ----

/// q-binomial frame coefficient beta_{n,mu} for n >= 0:
/// q^{2mu} prod_{j=0}^{mu-1} (1 - q^{-2(n-j)})/(1 - q^{-2(j+1)}).
pub(crate) fn beta_coeff(n: i64, mu: u32) -> Scalar {
    let mut out = Scalar::q_pow(2 * mu as i64);
    for j in 0..mu as i64 {
        let num = Scalar::one() - Scalar::q_pow(-2 * (n - j));
        let den = Scalar::one() - Scalar::q_pow(-2 * (j + 1));
        out = out * num / den;
    }
    out
}

/// q-binomial frame coefficient alpha_{n,mu} for |n| = absn:
/// prod_{j=0}^{|n|-mu-1} (1 - q^{2(|n|-j)})/(1 - q^{2(j+1)}).
pub(crate) fn alpha_coeff(absn: i64, mu: u32) -> Scalar {
    let mut out = Scalar::one();
    for j in 0..(absn - mu as i64) {
        let num = Scalar::one() - Scalar::q_pow(2 * (absn - j));
        let den = Scalar::one() - Scalar::q_pow(2 * (j + 1));
        out = out * num / den;
    }
    out
}

/// Frame weight w_mu: beta_{n,mu} for n >= 0, alpha_{n,mu} for n < 0.
///
/// Panics if mu > |n|.
pub fn weight_coeff(n: i64, mu: u32) -> Scalar {
    assert!(
        (mu as i64) <= n.abs(),
        "frame index {} out of range for n = {}",
        mu,
        n
    );
    if n >= 0 {
        beta_coeff(n, mu)
    } else {
        alpha_coeff(-n, mu)
    }
}

/// Bare frame element e_mu (the weight sqrt is carried separately).
///
/// Panics if mu > |n|.
pub(crate) fn frame_element(n: i64, mu: u32) -> AlgElt {
    assert!(
        (mu as i64) <= n.abs(),
        "frame index {} out of range for n = {}",
        mu,
        n
    );
    if n >= 0 {
        AlgElt::c_star().pow(mu) * AlgElt::a_star().pow(n as u32 - mu)
    } else {
        AlgElt::c().pow((-n) as u32 - mu) * AlgElt::a().pow(mu)
    }
}

// ---- weighted containers ----

/// The charge-n frame in square-root-free form: semantic component mu is
/// sqrt(weights[mu]) * bare[mu].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightedFrame {
    n: i64,
    bare: Vec<AlgElt>,
    weights: Vec<Scalar>,
}

impl WeightedFrame {
    /// Bundle charge.
    pub fn n(&self) -> i64 {
        self.n
    }

    /// Bare components e_mu.
    pub fn bare(&self) -> &[AlgElt] {
        &self.bare
    }

    /// Weight vector w_mu.
    pub fn weights(&self) -> &[Scalar] {
        &self.weights
    }
}

/// An (|n|+1) x (|n|+1) matrix over the sphere algebra in weighted form:
/// semantic entry (mu, nu) is sqrt(w_mu w_nu) * entries[mu][nu].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightedMatrix {
    n: i64,
    entries: Vec<Vec<AlgElt>>,
    weights: Vec<Scalar>,
}

impl WeightedMatrix {
    /// Assemble from parts (entries must be square and match weights).
    pub fn new(n: i64, entries: Vec<Vec<AlgElt>>, weights: Vec<Scalar>) -> WeightedMatrix {
        let dim = weights.len();
        assert_eq!(entries.len(), dim);
        assert!(entries.iter().all(|r| r.len() == dim));
        WeightedMatrix { n, entries, weights }
    }

    /// Bundle charge.
    pub fn n(&self) -> i64 {
        self.n
    }

    /// Reduced entries r_{mu nu}.
    pub fn entries(&self) -> &[Vec<AlgElt>] {
        &self.entries
    }

    /// Weight vector w_mu.
    pub fn weights(&self) -> &[Scalar] {
        &self.weights
    }

    /// Matrix dimension |n| + 1.
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// Weighted product: (M N)_{mu rho} = sum_nu w_nu M_{mu nu} N_{nu rho}.
    ///
    /// Panics if the weight vectors differ.
    pub fn weighted_mul(&self, rhs: &WeightedMatrix) -> WeightedMatrix {
        assert_eq!(self.weights, rhs.weights, "weight vectors must agree");
        let dim = self.dim();
        let entries = (0..dim)
            .map(|mu| {
                (0..dim)
                    .map(|rho| {
                        let mut acc = AlgElt::zero();
                        for nu in 0..dim {
                            acc = acc
                                + (&self.entries[mu][nu] * &rhs.entries[nu][rho])
                                    .scaled(&self.weights[nu]);
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        WeightedMatrix {
            n: self.n,
            entries,
            weights: self.weights.clone(),
        }
    }

    /// Entrywise star-transpose on reduced entries.
    pub fn adjoint(&self) -> WeightedMatrix {
        let dim = self.dim();
        let entries = (0..dim)
            .map(|mu| (0..dim).map(|nu| self.entries[nu][mu].star()).collect())
            .collect();
        WeightedMatrix {
            n: self.n,
            entries,
            weights: self.weights.clone(),
        }
    }

    /// JSON dump: charge, weights array, entries array-of-arrays.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "weights": self
                .weights
                .iter()
                .map(|w| w.to_json())
                .collect::<Vec<_>>(),
            "entries": self
                .entries
                .iter()
                .map(|row| row.iter().map(|e| e.to_json()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }

    /// Parse the JSON form emitted by [`WeightedMatrix::to_json`].
    pub fn from_json(v: &serde_json::Value) -> Option<WeightedMatrix> {
        let n = v.get("n")?.as_i64()?;
        let weights = v
            .get("weights")?
            .as_array()?
            .iter()
            .map(Scalar::from_json)
            .collect::<Option<Vec<_>>>()?;
        let entries = v
            .get("entries")?
            .as_array()?
            .iter()
            .map(|row| {
                row.as_array()?
                    .iter()
                    .map(AlgElt::from_json)
                    .collect::<Option<Vec<_>>>()
            })
            .collect::<Option<Vec<_>>>()?;
        if entries.len() != weights.len()
            || entries.iter().any(|r| r.len() != weights.len())
        {
            return None;
        }
        Some(WeightedMatrix { n, entries, weights })
    }
}

/// A row covector in weighted form: semantic component nu is
/// sqrt(w_nu) * entries[nu]. Sections of E_n are such covectors fixed by
/// the projection.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightedCovector {
    n: i64,
    entries: Vec<AlgElt>,
    weights: Vec<Scalar>,
}

impl WeightedCovector {
    /// Assemble from parts.
    pub fn new(n: i64, entries: Vec<AlgElt>, weights: Vec<Scalar>) -> WeightedCovector {
        assert_eq!(entries.len(), weights.len());
        WeightedCovector { n, entries, weights }
    }

    /// Bundle charge.
    pub fn n(&self) -> i64 {
        self.n
    }

    /// Reduced components t_nu.
    pub fn entries(&self) -> &[AlgElt] {
        &self.entries
    }

    /// Weight vector.
    pub fn weights(&self) -> &[Scalar] {
        &self.weights
    }

    /// Left-multiply every component by a sphere element.
    pub fn left_scaled(&self, f: &AlgElt) -> WeightedCovector {
        WeightedCovector {
            n: self.n,
            entries: self.entries.iter().map(|t| f * t).collect(),
            weights: self.weights.clone(),
        }
    }

    /// Weighted right action of a matrix:
    /// (sigma M)_rho = sum_nu w_nu t_nu M_{nu rho}.
    ///
    /// Panics if the weight vectors differ.
    pub fn apply_matrix(&self, m: &WeightedMatrix) -> WeightedCovector {
        assert_eq!(self.weights, m.weights, "weight vectors must agree");
        let dim = self.weights.len();
        let entries = (0..dim)
            .map(|rho| {
                let mut acc = AlgElt::zero();
                for nu in 0..dim {
                    acc = acc
                        + (&self.entries[nu] * &m.entries[nu][rho])
                            .scaled(&self.weights[nu]);
                }
                acc
            })
            .collect();
        WeightedCovector {
            n: self.n,
            entries,
            weights: self.weights.clone(),
        }
    }

    /// Componentwise sum.
    ///
    /// Panics if the weight vectors differ.
    pub fn add(&self, rhs: &WeightedCovector) -> WeightedCovector {
        assert_eq!(self.weights, rhs.weights, "weight vectors must agree");
        WeightedCovector {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(x, y)| x + y)
                .collect(),
            weights: self.weights.clone(),
        }
    }
}

// ---- constructions ----

/// The charge-n frame; asserts the frame normalization
/// sum_mu w_mu e_mu* e_mu = 1.
pub fn frame(n: i64) -> WeightedFrame {
    let absn = n.unsigned_abs() as u32;
    let bare: Vec<AlgElt> = (0..=absn).map(|mu| frame_element(n, mu)).collect();
    let weights: Vec<Scalar> = (0..=absn).map(|mu| weight_coeff(n, mu)).collect();
    let mut norm = AlgElt::zero();
    for (e, w) in bare.iter().zip(&weights) {
        norm = norm + (e.star() * e).scaled(w);
    }
    assert!(norm.is_one(), "frame normalization failed for n = {}", n);
    WeightedFrame { n, bare, weights }
}

/// The charge-n projection p = |Psi><Psi| in weighted form: reduced
/// entries r_{mu nu} = e_mu e_nu*. Asserts weighted idempotency and
/// self-adjointness.
pub fn projection(n: i64) -> WeightedMatrix {
    let f = frame(n);
    let dim = f.bare.len();
    let entries: Vec<Vec<AlgElt>> = (0..dim)
        .map(|mu| {
            (0..dim)
                .map(|nu| &f.bare[mu] * f.bare[nu].star())
                .collect()
        })
        .collect();
    let p = WeightedMatrix {
        n,
        entries,
        weights: f.weights,
    };
    for row in &p.entries {
        for r in row {
            assert!(r.is_sphere(), "projection entry leaves the sphere");
        }
    }
    assert_eq!(p.weighted_mul(&p), p, "projection fails idempotency");
    assert_eq!(p.adjoint(), p, "projection fails self-adjointness");
    p
}

/// The equivariant-map-to-section isomorphism: phi in L_n goes to the
/// covector sigma with reduced components t_nu = phi e_nu*.
///
/// Signals [`BundleError::WrongDegree`] if phi is not concentrated in
/// weight n.
pub fn phi_to_sigma(phi: &AlgElt, n: i64) -> Result<WeightedCovector, BundleError> {
    if !phi.is_weight(n) {
        return Err(BundleError::WrongDegree { n });
    }
    let f = frame(n);
    let entries: Vec<AlgElt> = f.bare.iter().map(|e| phi * e.star()).collect();
    Ok(WeightedCovector {
        n,
        entries,
        weights: f.weights,
    })
}

/// The inverse isomorphism: a section sigma goes back to
/// phi = sum_nu w_nu t_nu e_nu.
///
/// Signals [`BundleError::NotSection`] unless sigma p = sigma under the
/// weighted product.
pub fn sigma_to_phi(sigma: &WeightedCovector) -> Result<AlgElt, BundleError> {
    let p = projection(sigma.n);
    if sigma.apply_matrix(&p) != *sigma {
        return Err(BundleError::NotSection);
    }
    let f = frame(sigma.n);
    let mut phi = AlgElt::zero();
    for ((t, e), w) in sigma.entries.iter().zip(&f.bare).zip(&f.weights) {
        phi = phi + (t * e).scaled(w);
    }
    Ok(phi)
}

// ---- tests ----
