//! The coordinate algebra A(SU_q(2)) in normal form, its Hopf structure,
//! the structure Hopf algebra A(U(1)), and universal 1-forms with the
//! canonical map chi.
//!
//! * [`Monomial`]: normal-form basis word a^k c^l c*^m (k < 0 encodes
//!   a*^{|k|}). Mixed a/a* words never appear; they are reduced away by
//!   the sphere relations a*a = 1 - c*c and aa* = 1 - q^2 c*c.
//! * [`AlgElt`]: finite Scalar-linear combination of basis monomials;
//!   the representation is unique, so equality is structural.
//! * [`U1Elt`]: element of A(U(1)) = C[z, z*]/(zz* - 1), indexed by the
//!   signed power of z.
//! * [`TensorElt`]/[`MixedTensor`]: two-leg tensors over A (x) A and
//!   A (x) A(U(1)), used for the coproduct, the U(1) coaction, universal
//!   1-forms and the canonical map [`canonical_chi`].
//! * Podles sphere generators [`b_minus`], [`b_zero`], [`b_plus`] with
//!   their relations and coproducts.
//!
//! Defining relations: ac = qca, ac* = qc*a, cc* = c*c,
//! a*a + c*c = aa* + q^2 cc* = 1, with 0 < q < 1 understood and
//! q = s^2 in the coefficient field.

use crate::scalars::Scalar;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

// ---- monomials ----

/// Normal-form basis word a^k c^l c*^m; negative k means a*^{|k|}.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    /// Signed a-degree: k > 0 is a^k, k < 0 is a*^{|k|}.
    pub k: i64,
    /// c-degree.
    pub l: u32,
    /// c*-degree.
    pub m: u32,
}

impl Monomial {
    /// The word a^k c^l c*^m (k < 0 for a*-powers).
    pub fn new(k: i64, l: u32, m: u32) -> Monomial {
        Monomial { k, l, m }
    }

    /// The unit word.
    pub fn unit() -> Monomial {
        Monomial::new(0, 0, 0)
    }

    /// True for the unit word.
    pub fn is_unit(&self) -> bool {
        self.k == 0 && self.l == 0 && self.m == 0
    }

    /// Left K-weight n, defined by K |> x = q^{n/2} x.
    pub fn weight(&self) -> i64 {
        -self.k - self.l as i64 + self.m as i64
    }

    /// Right K-weight r, defined by x <| K = q^{r/2} x.
    pub fn right_weight(&self) -> i64 {
        -self.k + self.l as i64 - self.m as i64
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        write!(f, "{}", mono_text(self))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Factor-by-factor text of a monomial: "a^2 c cs^3"; empty for the unit.
fn mono_text(m: &Monomial) -> String {
    let mut parts: Vec<String> = Vec::new();
    if m.k > 0 {
        parts.push(if m.k == 1 { "a".into() } else { format!("a^{}", m.k) });
    } else if m.k < 0 {
        parts.push(if m.k == -1 { "as".into() } else { format!("as^{}", -m.k) });
    }
    if m.l > 0 {
        parts.push(if m.l == 1 { "c".into() } else { format!("c^{}", m.l) });
    }
    if m.m > 0 {
        parts.push(if m.m == 1 { "cs".into() } else { format!("cs^{}", m.m) });
    }
    parts.join(" ")
}

// ---- monomial multiplication ----

/// Product of the a-parts a^{k1} * a^{k2} (signed powers): the result is
/// the a-part of degree k1 + k2 times a polynomial in w = c*c, returned
/// as the coefficient vector of powers of w.
fn apart_mul(k1: i64, k2: i64) -> Vec<Scalar> {
    // mixed products contract via a^r a*^r = prod_{j=1}^{r} (1 - q^{2j} w)
    // and a*^r a^r = prod_{j=0}^{r-1} (1 - q^{-2j} w), with the leftover
    // pure power commuted into place using w a = q^{-2} a w, w a* = q^2 a* w
    let mut qexps: Vec<i64> = Vec::new();
    if k1 >= 0 && k2 <= 0 {
        let p = -k2;
        let t = k1.min(p);
        for j in (p - t + 1)..=p {
            qexps.push(2 * j);
        }
    } else if k1 <= 0 && k2 >= 0 {
        let p = -k1;
        let t = p.min(k2);
        for j in (k2 - t)..(k2) {
            qexps.push(-2 * j);
        }
    }
    let mut coeffs = vec![Scalar::one()];
    for e in qexps {
        let f = Scalar::q_pow(e);
        let mut next = vec![Scalar::zero(); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i] += c;
            next[i + 1] -= &(c * &f);
        }
        coeffs = next;
    }
    coeffs
}

/// Normal-form product of two basis words, as (monomial, coefficient)
/// terms.
fn mono_mul(m1: &Monomial, m2: &Monomial) -> Vec<(Monomial, Scalar)> {
    // moving the a-part of m2 through c^{l1} c*^{m1} yields a uniform
    // phase q^{-k2 (l1 + m1)} for either sign of k2
    let phase = Scalar::q_pow(-m2.k * (m1.l as i64 + m1.m as i64));
    let k = m1.k + m2.k;
    apart_mul(m1.k, m2.k)
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            let i = i as u32;
            (
                Monomial::new(k, m1.l + m2.l + i, m1.m + m2.m + i),
                &phase * c,
            )
        })
        .collect()
}

// ---- algebra elements ----

/// Element of A(SU_q(2)): finite Scalar-linear combination of normal-form
/// monomials. No zero coefficients are stored, so equality is structural.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct AlgElt {
    terms: BTreeMap<Monomial, Scalar>,
}

impl AlgElt {
    /// The zero element.
    pub fn zero() -> AlgElt {
        AlgElt::default()
    }

    /// The unit element.
    pub fn one() -> AlgElt {
        AlgElt::monomial(Monomial::unit(), Scalar::one())
    }

    /// Generator a.
    pub fn a() -> AlgElt {
        AlgElt::monomial(Monomial::new(1, 0, 0), Scalar::one())
    }

    /// Generator a*.
    pub fn a_star() -> AlgElt {
        AlgElt::monomial(Monomial::new(-1, 0, 0), Scalar::one())
    }

    /// Generator c.
    pub fn c() -> AlgElt {
        AlgElt::monomial(Monomial::new(0, 1, 0), Scalar::one())
    }

    /// Generator c*.
    pub fn c_star() -> AlgElt {
        AlgElt::monomial(Monomial::new(0, 0, 1), Scalar::one())
    }

    /// The basis word a^k c^l c*^m as an element.
    pub fn word(k: i64, l: u32, m: u32) -> AlgElt {
        AlgElt::monomial(Monomial::new(k, l, m), Scalar::one())
    }

    /// A single scaled monomial.
    pub fn monomial(m: Monomial, coeff: Scalar) -> AlgElt {
        let mut e = AlgElt::zero();
        e.add_term(m, coeff);
        e
    }

    /// Constant element.
    pub fn constant(c: Scalar) -> AlgElt {
        AlgElt::monomial(Monomial::unit(), c)
    }

    /// Build from (monomial, coefficient) pairs, summing duplicates.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(terms: I) -> AlgElt {
        let mut e = AlgElt::zero();
        for (m, c) in terms {
            e.add_term(m, c);
        }
        e
    }

    /// Add coeff * monomial in place.
    pub fn add_term(&mut self, m: Monomial, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// True for the zero element.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for the unit element.
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::unit())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    /// Iterate over (monomial, coefficient) pairs in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    /// Number of stored terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of a monomial (zero if absent).
    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Multiply by a scalar.
    pub fn scaled(&self, c: &Scalar) -> AlgElt {
        if c.is_zero() {
            return AlgElt::zero();
        }
        AlgElt {
            terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect(),
        }
    }

    /// Non-negative power (repeated normal-form product).
    pub fn pow(&self, e: u32) -> AlgElt {
        let mut acc = AlgElt::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The star involution: antilinear in principle, but Q(s)-linear here
    /// since all coefficients are real rational functions.
    pub fn star(&self) -> AlgElt {
        let mut out = AlgElt::zero();
        for (m, c) in &self.terms {
            // (a^k c^l c*^m)* = q^{k(l+m)} a^{-k} c^m c*^l
            let phase = Scalar::q_pow(m.k * (m.l as i64 + m.m as i64));
            out.add_term(Monomial::new(-m.k, m.m, m.l), c * phase);
        }
        out
    }

    /// Counit: eps(a) = eps(a*) = 1, eps(c) = eps(c*) = 0.
    pub fn counit(&self) -> Scalar {
        let mut out = Scalar::zero();
        for (m, c) in &self.terms {
            if m.l == 0 && m.m == 0 {
                out += c;
            }
        }
        out
    }

    /// Antipode: S(a) = a*, S(a*) = a, S(c) = -qc, S(c*) = -q^{-1}c*,
    /// extended as an anti-homomorphism.
    pub fn antipode(&self) -> AlgElt {
        let mut out = AlgElt::zero();
        for (m, c) in &self.terms {
            // S(a^k c^l c*^m) = (-1)^{l+m} q^{l-m+k(l+m)} a^{-k} c^l c*^m
            let lm = m.l as i64 + m.m as i64;
            let sign = if lm % 2 == 0 { 1 } else { -1 };
            let phase = Scalar::q_pow(m.l as i64 - m.m as i64 + m.k * lm);
            out.add_term(
                Monomial::new(-m.k, m.l, m.m),
                c * phase * Scalar::from_int(sign),
            );
        }
        out
    }

    /// Coproduct, extended as an algebra map from the generator values
    /// Delta(a) = a(x)a - q c*(x)c and Delta(c) = c(x)a + a*(x)c (with
    /// the starred generators obtained by star(x)star).
    pub fn coproduct(&self) -> TensorElt {
        let mut out = TensorElt::zero();
        for (m, c) in &self.terms {
            let mut t = coproduct_mono(m);
            t.scale(c);
            out.pairs.extend(t.pairs);
        }
        out.prune();
        out
    }

    /// Split into left K-weight components: the map n -> component in L_n.
    pub fn weight_decompose(&self) -> BTreeMap<i64, AlgElt> {
        let mut out: BTreeMap<i64, AlgElt> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.weight())
                .or_default()
                .add_term(*m, c.clone());
        }
        out
    }

    /// The component in L_n.
    pub fn weight_component(&self, n: i64) -> AlgElt {
        let mut out = AlgElt::zero();
        for (m, c) in &self.terms {
            if m.weight() == n {
                out.add_term(*m, c.clone());
            }
        }
        out
    }

    /// True if every term lies in L_n (vacuously true for zero).
    pub fn is_weight(&self, n: i64) -> bool {
        self.terms.keys().all(|m| m.weight() == n)
    }

    /// True if the element lies in the sphere subalgebra A(S^2_q) = L_0.
    pub fn is_sphere(&self) -> bool {
        self.is_weight(0)
    }

    /// Hopf projection pi: a -> z, a* -> z*, c, c* -> 0.
    pub fn hopf_projection(&self) -> U1Elt {
        let mut out = U1Elt::zero();
        for (m, c) in &self.terms {
            if m.l == 0 && m.m == 0 {
                out.add_term(m.k, c.clone());
            }
        }
        out
    }

    /// Right U(1) coaction Delta_R = (id (x) pi) o Delta: a component of
    /// weight n goes to (component) (x) z^{-n}.
    pub fn u1_coaction(&self) -> MixedTensor {
        let mut out = MixedTensor::zero();
        for (n, comp) in self.weight_decompose() {
            out.pairs.push((comp, U1Elt::z_pow(-n)));
        }
        out.prune();
        out
    }

    /// True if Delta_R(x) = x (x) 1, i.e. x is in the sphere subalgebra.
    pub fn is_coinvariant(&self) -> bool {
        self.is_sphere()
    }

    /// Element text: signed sum of "coeff mono" in canonical monomial
    /// order; parses back through the CLI expression grammar whenever all
    /// coefficients are Laurent polynomials.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (neg, body) = term_text(m, c);
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&body);
        }
        out
    }

    /// JSON form: {"terms":[{"k":..,"l":..,"m":..,"coeff":..}, ...]}.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "terms": self
                .terms
                .iter()
                .map(|(m, c)| {
                    serde_json::json!({
                        "k": m.k,
                        "l": m.l,
                        "m": m.m,
                        "coeff": c.to_json(),
                    })
                })
                .collect::<Vec<_>>(),
        })
    }

    /// Parse the JSON form emitted by [`AlgElt::to_json`].
    pub fn from_json(v: &serde_json::Value) -> Option<AlgElt> {
        let arr = v.get("terms")?.as_array()?;
        let mut out = AlgElt::zero();
        for t in arr {
            let k = t.get("k")?.as_i64()?;
            let l = t.get("l")?.as_u64()?;
            let m = t.get("m")?.as_u64()?;
            if l > u32::MAX as u64 || m > u32::MAX as u64 {
                return None;
            }
            let c = Scalar::from_json(t.get("coeff")?)?;
            out.add_term(Monomial::new(k, l as u32, m as u32), c);
        }
        Some(out)
    }
}

/// One text term: (is_negative, body). The body multiplies a coefficient
/// rendered in q-notation with the monomial word.
fn term_text(m: &Monomial, c: &Scalar) -> (bool, String) {
    let mono = if m.is_unit() { String::new() } else { mono_text(m) };
    if !c.den().is_one() {
        // not CLI-grammar-representable; fall back to the scalar text
        let body = if mono.is_empty() {
            c.to_text()
        } else {
            format!("{} {}", c.to_text(), mono)
        };
        return (false, body);
    }
    let (neg, coeff) = laurent_q_text(c);
    if mono.is_empty() {
        return (neg, coeff);
    }
    if coeff == "1" {
        return (neg, mono);
    }
    if c.num().term_count() > 1 {
        // clarity and reparsing need the parenthesized sum; pull the sign
        // of the leading term out of the parentheses
        let inner = if neg { laurent_q_text(&-c).1 } else { coeff };
        return (neg, format!("({}) {}", inner, mono));
    }
    (neg, format!("{} {}", coeff, mono))
}

/// Render a Laurent-polynomial scalar in q-notation: terms in decreasing
/// s-exponent, "q^e" for even s-exponents 2e, "q^(k/2)" for odd k.
/// Returns (first term negative, magnitude-leading text).
fn laurent_q_text(c: &Scalar) -> (bool, String) {
    crate::scalars::laurent_q_parts(c.num())
}

impl fmt::Display for AlgElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Debug for AlgElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

// ---- AlgElt arithmetic ----

impl Neg for &AlgElt {
    type Output = AlgElt;
    fn neg(self) -> AlgElt {
        AlgElt {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for AlgElt {
    type Output = AlgElt;
    fn neg(self) -> AlgElt {
        -&self
    }
}

impl Add for &AlgElt {
    type Output = AlgElt;
    fn add(self, rhs: &AlgElt) -> AlgElt {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &AlgElt {
    type Output = AlgElt;
    fn sub(self, rhs: &AlgElt) -> AlgElt {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Mul for &AlgElt {
    type Output = AlgElt;
    /// Normal-form product.
    fn mul(self, rhs: &AlgElt) -> AlgElt {
        let mut out = AlgElt::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let c12 = c1 * c2;
                for (m, w) in mono_mul(m1, m2) {
                    out.add_term(m, &c12 * w);
                }
            }
        }
        out
    }
}

macro_rules! forward_elt_binop {
    ($op:ident, $fn:ident) => {
        impl $op for AlgElt {
            type Output = AlgElt;
            fn $fn(self, rhs: AlgElt) -> AlgElt {
                (&self).$fn(&rhs)
            }
        }
        impl $op<&AlgElt> for AlgElt {
            type Output = AlgElt;
            fn $fn(self, rhs: &AlgElt) -> AlgElt {
                (&self).$fn(rhs)
            }
        }
        impl $op<AlgElt> for &AlgElt {
            type Output = AlgElt;
            fn $fn(self, rhs: AlgElt) -> AlgElt {
                self.$fn(&rhs)
            }
        }
    };
}

forward_elt_binop!(Add, add);
forward_elt_binop!(Sub, sub);
forward_elt_binop!(Mul, mul);

/// Normal-form product (operator form also available as `x * y`).
pub fn normal_mul(x: &AlgElt, y: &AlgElt) -> AlgElt {
    x * y
}

// ---- U(1) elements ----

/// Element of A(U(1)) = C[z, z*]/(zz* - 1); the key is the signed power
/// of z (negative keys are z* powers).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct U1Elt {
    terms: BTreeMap<i64, Scalar>,
}

impl U1Elt {
    /// The zero element.
    pub fn zero() -> U1Elt {
        U1Elt::default()
    }

    /// The unit element.
    pub fn one() -> U1Elt {
        U1Elt::z_pow(0)
    }

    /// z^k (z*^{|k|} for negative k).
    pub fn z_pow(k: i64) -> U1Elt {
        let mut t = BTreeMap::new();
        t.insert(k, Scalar::one());
        U1Elt { terms: t }
    }

    /// Add coeff * z^k in place.
    pub fn add_term(&mut self, k: i64, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// True for zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterate over (power, coefficient) pairs.
    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Scalar)> {
        self.terms.iter()
    }

    /// The star structure: z* = z^{-1} (coefficients are real here).
    pub fn star(&self) -> U1Elt {
        U1Elt {
            terms: self.terms.iter().map(|(k, c)| (-k, c.clone())).collect(),
        }
    }

    /// Counit of A(U(1)): z^k -> 1.
    pub fn counit(&self) -> Scalar {
        let mut out = Scalar::zero();
        for c in self.terms.values() {
            out += c;
        }
        out
    }
}

impl fmt::Display for U1Elt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let base = match k {
                    0 => "1".to_string(),
                    1 => "z".to_string(),
                    -1 => "zs".to_string(),
                    k if *k > 0 => format!("z^{}", k),
                    k => format!("zs^{}", -k),
                };
                if c.is_one() {
                    base
                } else {
                    format!("({}) {}", c, base)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for U1Elt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Neg for &U1Elt {
    type Output = U1Elt;
    fn neg(self) -> U1Elt {
        U1Elt {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Neg for U1Elt {
    type Output = U1Elt;
    fn neg(self) -> U1Elt {
        -&self
    }
}

impl Add for &U1Elt {
    type Output = U1Elt;
    fn add(self, rhs: &U1Elt) -> U1Elt {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl Sub for &U1Elt {
    type Output = U1Elt;
    fn sub(self, rhs: &U1Elt) -> U1Elt {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, -c.clone());
        }
        out
    }
}

impl Mul for &U1Elt {
    type Output = U1Elt;
    fn mul(self, rhs: &U1Elt) -> U1Elt {
        let mut out = U1Elt::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &rhs.terms {
                out.add_term(k1 + k2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_u1_binop {
    ($op:ident, $fn:ident) => {
        impl $op for U1Elt {
            type Output = U1Elt;
            fn $fn(self, rhs: U1Elt) -> U1Elt {
                (&self).$fn(&rhs)
            }
        }
        impl $op<&U1Elt> for U1Elt {
            type Output = U1Elt;
            fn $fn(self, rhs: &U1Elt) -> U1Elt {
                (&self).$fn(rhs)
            }
        }
        impl $op<U1Elt> for &U1Elt {
            type Output = U1Elt;
            fn $fn(self, rhs: U1Elt) -> U1Elt {
                self.$fn(&rhs)
            }
        }
    };
}

forward_u1_binop!(Add, add);
forward_u1_binop!(Sub, sub);
forward_u1_binop!(Mul, mul);

// ---- tensors ----

/// Element of A (x) A as a finite list of pair summands. Equality is
/// decided on the canonical two-leg monomial expansion.
#[derive(Clone, Default)]
pub struct TensorElt {
    pairs: Vec<(AlgElt, AlgElt)>,
}

impl TensorElt {
    /// The zero tensor.
    pub fn zero() -> TensorElt {
        TensorElt::default()
    }

    /// The unit tensor 1 (x) 1.
    pub fn one() -> TensorElt {
        TensorElt::pair(AlgElt::one(), AlgElt::one())
    }

    /// A single summand x (x) y.
    pub fn pair(x: AlgElt, y: AlgElt) -> TensorElt {
        let mut t = TensorElt::zero();
        t.pairs.push((x, y));
        t.prune();
        t
    }

    /// Build from summands.
    pub fn from_pairs<I: IntoIterator<Item = (AlgElt, AlgElt)>>(pairs: I) -> TensorElt {
        let mut t = TensorElt {
            pairs: pairs.into_iter().collect(),
        };
        t.prune();
        t
    }

    /// The summand list.
    pub fn pairs(&self) -> &[(AlgElt, AlgElt)] {
        &self.pairs
    }

    fn prune(&mut self) {
        self.pairs.retain(|(x, y)| !x.is_zero() && !y.is_zero());
    }

    fn scale(&mut self, c: &Scalar) {
        for (x, _) in &mut self.pairs {
            *x = x.scaled(c);
        }
        self.prune();
    }

    /// Sum of tensors.
    pub fn add(&self, rhs: &TensorElt) -> TensorElt {
        let mut out = self.clone();
        out.pairs.extend(rhs.pairs.iter().cloned());
        out
    }

    /// Difference of tensors.
    pub fn sub(&self, rhs: &TensorElt) -> TensorElt {
        let mut out = self.clone();
        out.pairs
            .extend(rhs.pairs.iter().map(|(x, y)| (-x, y.clone())));
        out
    }

    /// Componentwise product (the algebra structure of A (x) A).
    pub fn mul(&self, rhs: &TensorElt) -> TensorElt {
        let mut out = TensorElt::zero();
        for (x1, y1) in &self.pairs {
            for (x2, y2) in &rhs.pairs {
                out.pairs.push((x1 * x2, y1 * y2));
            }
        }
        out.prune();
        out
    }

    /// Canonical expansion on the monomial (x) monomial basis.
    pub fn expand(&self) -> BTreeMap<(Monomial, Monomial), Scalar> {
        let mut out: BTreeMap<(Monomial, Monomial), Scalar> = BTreeMap::new();
        for (x, y) in &self.pairs {
            for (mx, cx) in x.terms() {
                for (my, cy) in y.terms() {
                    let key = (*mx, *my);
                    let add = cx * cy;
                    match out.entry(key) {
                        std::collections::btree_map::Entry::Vacant(e) => {
                            if !add.is_zero() {
                                e.insert(add);
                            }
                        }
                        std::collections::btree_map::Entry::Occupied(mut e) => {
                            *e.get_mut() += add;
                            if e.get().is_zero() {
                                e.remove();
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// True if the tensor is zero.
    pub fn is_zero(&self) -> bool {
        self.expand().is_empty()
    }

    /// Apply maps to the two legs.
    pub fn map_legs(
        &self,
        f: impl Fn(&AlgElt) -> AlgElt,
        g: impl Fn(&AlgElt) -> AlgElt,
    ) -> TensorElt {
        TensorElt::from_pairs(self.pairs.iter().map(|(x, y)| (f(x), g(y))))
    }

    /// Multiplication contraction m(x (x) y) = xy.
    pub fn contract_mul(&self) -> AlgElt {
        let mut out = AlgElt::zero();
        for (x, y) in &self.pairs {
            out = out + x * y;
        }
        out
    }

    /// Counit contraction on the first leg: (eps (x) id).
    pub fn contract_counit_left(&self) -> AlgElt {
        let mut out = AlgElt::zero();
        for (x, y) in &self.pairs {
            out = out + y.scaled(&x.counit());
        }
        out
    }

    /// Counit contraction on the second leg: (id (x) eps).
    pub fn contract_counit_right(&self) -> AlgElt {
        let mut out = AlgElt::zero();
        for (x, y) in &self.pairs {
            out = out + x.scaled(&y.counit());
        }
        out
    }

    /// Expansion of (Delta (x) id) applied to this tensor, on the
    /// three-leg monomial basis.
    pub fn delta_first(&self) -> BTreeMap<(Monomial, Monomial, Monomial), Scalar> {
        let mut out: BTreeMap<(Monomial, Monomial, Monomial), Scalar> = BTreeMap::new();
        for (x, y) in &self.pairs {
            let dx = x.coproduct().expand();
            for ((m1, m2), c12) in &dx {
                for (m3, c3) in y.terms() {
                    add3(&mut out, (*m1, *m2, *m3), c12 * c3);
                }
            }
        }
        out
    }

    /// Expansion of (id (x) Delta) applied to this tensor.
    pub fn delta_second(&self) -> BTreeMap<(Monomial, Monomial, Monomial), Scalar> {
        let mut out: BTreeMap<(Monomial, Monomial, Monomial), Scalar> = BTreeMap::new();
        for (x, y) in &self.pairs {
            let dy = y.coproduct().expand();
            for (m1, c1) in x.terms() {
                for ((m2, m3), c23) in &dy {
                    add3(&mut out, (*m1, *m2, *m3), c1 * c23);
                }
            }
        }
        out
    }
}

fn add3(
    map: &mut BTreeMap<(Monomial, Monomial, Monomial), Scalar>,
    key: (Monomial, Monomial, Monomial),
    val: Scalar,
) {
    if val.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(val);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += val;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl PartialEq for TensorElt {
    fn eq(&self, other: &Self) -> bool {
        self.expand() == other.expand()
    }
}

impl Eq for TensorElt {}

impl fmt::Debug for TensorElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pairs
            .iter()
            .map(|(x, y)| format!("({}) (x) ({})", x, y))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Element of A (x) A(U(1)) as a list of pair summands; equality is
/// decided on the canonical expansion, which collects the U(1) leg.
#[derive(Clone, Default)]
pub struct MixedTensor {
    pairs: Vec<(AlgElt, U1Elt)>,
}

impl MixedTensor {
    /// The zero tensor.
    pub fn zero() -> MixedTensor {
        MixedTensor::default()
    }

    /// A single summand x (x) u.
    pub fn pair(x: AlgElt, u: U1Elt) -> MixedTensor {
        let mut t = MixedTensor::zero();
        t.pairs.push((x, u));
        t.prune();
        t
    }

    /// Build from summands.
    pub fn from_pairs<I: IntoIterator<Item = (AlgElt, U1Elt)>>(pairs: I) -> MixedTensor {
        let mut t = MixedTensor {
            pairs: pairs.into_iter().collect(),
        };
        t.prune();
        t
    }

    /// The summand list.
    pub fn pairs(&self) -> &[(AlgElt, U1Elt)] {
        &self.pairs
    }

    fn prune(&mut self) {
        self.pairs.retain(|(x, u)| !x.is_zero() && !u.is_zero());
    }

    /// Sum.
    pub fn add(&self, rhs: &MixedTensor) -> MixedTensor {
        let mut out = self.clone();
        out.pairs.extend(rhs.pairs.iter().cloned());
        out
    }

    /// Canonical expansion on the monomial (x) z-power basis.
    pub fn expand(&self) -> BTreeMap<(Monomial, i64), Scalar> {
        let mut out: BTreeMap<(Monomial, i64), Scalar> = BTreeMap::new();
        for (x, u) in &self.pairs {
            for (mx, cx) in x.terms() {
                for (k, ck) in u.terms() {
                    let add = cx * ck;
                    if add.is_zero() {
                        continue;
                    }
                    match out.entry((*mx, *k)) {
                        std::collections::btree_map::Entry::Vacant(e) => {
                            e.insert(add);
                        }
                        std::collections::btree_map::Entry::Occupied(mut e) => {
                            *e.get_mut() += add;
                            if e.get().is_zero() {
                                e.remove();
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// True if zero.
    pub fn is_zero(&self) -> bool {
        self.expand().is_empty()
    }
}

impl PartialEq for MixedTensor {
    fn eq(&self, other: &Self) -> bool {
        self.expand() == other.expand()
    }
}

impl Eq for MixedTensor {}

impl fmt::Debug for MixedTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pairs
            .iter()
            .map(|(x, u)| format!("({}) (x) ({})", x, u))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

// ---- coproduct internals ----

fn delta_a() -> TensorElt {
    // Delta(a) = a (x) a - q c* (x) c
    TensorElt::from_pairs([
        (AlgElt::a(), AlgElt::a()),
        (AlgElt::c_star().scaled(&-Scalar::q_pow(1)), AlgElt::c()),
    ])
}

fn delta_c() -> TensorElt {
    // Delta(c) = c (x) a + a* (x) c
    TensorElt::from_pairs([
        (AlgElt::c(), AlgElt::a()),
        (AlgElt::a_star(), AlgElt::c()),
    ])
}

fn delta_a_star() -> TensorElt {
    // star (x) star of Delta(a): Delta(a*) = a* (x) a* - q c (x) c*
    delta_a().map_legs(|x| x.star(), |y| y.star())
}

fn delta_c_star() -> TensorElt {
    // star (x) star of Delta(c): Delta(c*) = c* (x) a* + a (x) c*
    delta_c().map_legs(|x| x.star(), |y| y.star())
}

fn coproduct_mono(m: &Monomial) -> TensorElt {
    let mut t = TensorElt::one();
    let (da, p) = if m.k >= 0 {
        (delta_a(), m.k as u32)
    } else {
        (delta_a_star(), (-m.k) as u32)
    };
    for _ in 0..p {
        t = t.mul(&da);
    }
    let dc = delta_c();
    for _ in 0..m.l {
        t = t.mul(&dc);
    }
    let dcs = delta_c_star();
    for _ in 0..m.m {
        t = t.mul(&dcs);
    }
    t
}

// ---- universal forms and the canonical map ----

/// Universal differential: delta(f) = 1 (x) f - f (x) 1.
pub fn universal_delta(f: &AlgElt) -> TensorElt {
    TensorElt::from_pairs([(AlgElt::one(), f.clone()), (-f, AlgElt::one())])
}

/// Canonical map chi(x (x) y) = x Delta_R(y), landing in
/// A(SU_q(2)) (x) A(U(1)).
pub fn canonical_chi(t: &TensorElt) -> MixedTensor {
    let mut out = MixedTensor::zero();
    for (x, y) in t.pairs() {
        for (n, yn) in y.weight_decompose() {
            out.pairs.push((x * yn, U1Elt::z_pow(-n)));
        }
    }
    out.prune();
    out
}

/// Universal 1-form of the charge-n frame: gamma = <Psi|delta Psi>
/// = 1 (x) 1 - sum_mu w_mu e_mu* (x) e_mu, with whole weights (no square
/// roots). Returns zero for n = 0.
pub fn frame_universal_form(n: i64) -> TensorElt {
    if n == 0 {
        return TensorElt::zero();
    }
    let absn = n.unsigned_abs() as u32;
    let mut pairs = vec![(AlgElt::one(), AlgElt::one())];
    for mu in 0..=absn {
        let w = crate::bundles::weight_coeff(n, mu);
        let e = crate::bundles::frame_element(n, mu);
        pairs.push((e.star().scaled(&-w), e));
    }
    TensorElt::from_pairs(pairs)
}

// ---- Podles sphere generators ----

/// Podles generator B_- = -a c*.
pub fn b_minus() -> AlgElt {
    -(AlgElt::a() * AlgElt::c_star())
}

/// Podles generator B_+ = q c a*.
pub fn b_plus() -> AlgElt {
    (AlgElt::c() * AlgElt::a_star()).scaled(&Scalar::q_pow(1))
}

/// Podles generator B_0 = q^2/(1+q^2) - q^2 c c*.
pub fn b_zero() -> AlgElt {
    let shift = Scalar::q_pow(2) / (Scalar::one() + Scalar::q_pow(2));
    AlgElt::constant(shift)
        - (AlgElt::c() * AlgElt::c_star()).scaled(&Scalar::q_pow(2))
}

// ---- tests ----
