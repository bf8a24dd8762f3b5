//! Exact arithmetic in the field Q(s), where s = q^{1/2}.
//!
//! * [`LaurentPoly`] is a Laurent polynomial in s with arbitrary-precision
//!   rational coefficients, kept in canonical form (no zero coefficients).
//! * [`Scalar`] is a reduced fraction of Laurent polynomials: the
//!   denominator is a genuine polynomial with nonzero constant term and
//!   leading coefficient 1, and numerator/denominator are coprime. This
//!   makes equality structural and the representation unique.
//! * [`qnum`]/[`qnum2`] build q-integers [x] = (q^x - q^{-x})/(q - q^{-1})
//!   for integer and half-integer x.
//! * [`Scalar::eval_at`] evaluates at a positive rational q, and
//!   [`Scalar::limit_at_one`] takes the classical limit q -> 1 (well
//!   defined exactly when the reduced denominator does not vanish at 1).
//!
//! The base variable is s = q^{1/2} rather than q itself so that the
//! half-integer powers occurring in generator actions and q-spin formulas
//! stay polynomial.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// Arbitrary-precision rational number used for all coefficients.
pub type Rat = BigRational;

// ---- errors ----

/// Errors signaled by partial numeric operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NumericError {
    /// Division by the zero scalar.
    DivisionByZero,
    /// Evaluation or limit hit a vanishing denominator.
    Pole,
    /// Evaluation needs the square root of a rational that is not a
    /// perfect square (odd powers of s present).
    IrrationalSqrt,
}

impl fmt::Display for NumericError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NumericError::DivisionByZero => write!(f, "division by zero"),
            NumericError::Pole => write!(f, "evaluation at a pole"),
            NumericError::IrrationalSqrt => {
                write!(f, "evaluation requires an irrational square root")
            }
        }
    }
}

impl std::error::Error for NumericError {}

// ---- rational helpers ----

/// Rational p/r from machine integers. Panics if r == 0.
pub fn rat(p: i64, r: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(r))
}

/// Rational from a machine integer.
pub fn rat_int(p: i64) -> Rat {
    Rat::from_integer(BigInt::from(p))
}

/// Canonical text form of a rational: always "p/r" with r > 0.
pub(crate) fn rat_to_string(x: &Rat) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parse "p/r" or a plain integer "p".
pub(crate) fn rat_from_string(text: &str) -> Option<Rat> {
    let mut parts = text.splitn(2, '/');
    let p: BigInt = parts.next()?.trim().parse().ok()?;
    match parts.next() {
        None => Some(Rat::from_integer(p)),
        Some(r) => {
            let r: BigInt = r.trim().parse().ok()?;
            if r.is_zero() {
                None
            } else {
                Some(Rat::new(p, r))
            }
        }
    }
}

// ---- LaurentPoly ----

/// Laurent polynomial in s with rational coefficients.
///
/// Invariant: no stored coefficient is zero, so the map is a canonical
/// (unique) representation of the mathematical value.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Rat>,
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        LaurentPoly {
            coeffs: BTreeMap::new(),
        }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        LaurentPoly::term(0, Rat::one())
    }

    /// The single term c * s^k (canonicalized: dropped if c == 0).
    pub fn term(k: i64, c: Rat) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        LaurentPoly { coeffs }
    }

    /// The monomial s^k.
    pub fn s_pow(k: i64) -> Self {
        LaurentPoly::term(k, Rat::one())
    }

    /// Constant polynomial from a rational.
    pub fn constant(c: Rat) -> Self {
        LaurentPoly::term(0, c)
    }

    /// Build from any (exponent, coefficient) pairs, summing duplicates.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rat)>>(terms: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    /// Add c * s^k in place, keeping the no-zero-coefficient invariant.
    pub fn add_term(&mut self, k: i64, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for the constant polynomial 1.
    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1
            && self
                .coeffs
                .get(&0)
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    /// Coefficient of s^k (zero if absent).
    pub fn coeff(&self, k: i64) -> Rat {
        self.coeffs.get(&k).cloned().unwrap_or_else(Rat::zero)
    }

    /// Iterate over (exponent, coefficient) pairs in increasing exponent.
    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Rat)> {
        self.coeffs.iter()
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    /// Smallest exponent with nonzero coefficient.
    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Largest exponent with nonzero coefficient.
    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Multiply by s^k.
    pub fn shifted(&self, k: i64) -> Self {
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    /// Multiply by a rational constant.
    pub fn scaled(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, k)| (*e, k * c))
                .collect(),
        }
    }

    /// Exact value at a nonzero rational s0.
    pub fn eval_rat(&self, s0: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (e, c) in &self.coeffs {
            acc += c * pow_rat(s0, *e);
        }
        acc
    }

    /// Dense coefficient vector: (minimal exponent, coefficients upward).
    /// Returns (0, empty) for the zero polynomial.
    fn to_dense(&self) -> (i64, Vec<Rat>) {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => {
                let mut v = vec![Rat::zero(); (hi - lo + 1) as usize];
                for (e, c) in &self.coeffs {
                    v[(e - lo) as usize] = c.clone();
                }
                (lo, v)
            }
            _ => (0, Vec::new()),
        }
    }

    fn from_dense(lo: i64, v: &[Rat]) -> Self {
        LaurentPoly::from_terms(
            v.iter()
                .enumerate()
                .map(|(i, c)| (lo + i as i64, c.clone())),
        )
    }
}

/// s0^e for rational s0 != 0 and signed integer e.
fn pow_rat(s0: &Rat, e: i64) -> Rat {
    if e >= 0 {
        num_traits::pow::pow(s0.clone(), e as usize)
    } else {
        num_traits::pow::pow(s0.clone(), (-e) as usize)
            .recip()
    }
}

impl fmt::Display for LaurentPoly {
    /// Sum of terms "c*s^k" in decreasing exponent order, with the
    /// shorthands "c" for k = 0 and "s^k" for c = +-1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag_is_one = mag.is_one();
            if *e == 0 {
                write!(f, "{}", fmt_rat(&mag))?;
            } else if mag_is_one {
                write!(f, "s^{}", e)?;
            } else {
                write!(f, "{}*s^{}", fmt_rat(&mag), e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn fmt_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        format!("{}", x.numer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

// polynomial (not Laurent) helpers on dense vectors; leading zero entries
// are permitted in inputs and trimmed on the fly

fn dense_deg(v: &[Rat]) -> Option<usize> {
    v.iter().rposition(|c| !c.is_zero())
}

/// Remainder of a by b (b nonzero), over Q.
fn dense_rem(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let db = dense_deg(b).expect("dense_rem: zero divisor");
    let mut r = a.to_vec();
    loop {
        let dr = match dense_deg(&r) {
            None => return r,
            Some(d) => d,
        };
        if dr < db {
            return r;
        }
        let q = &r[dr] / &b[db];
        let shift = dr - db;
        for i in 0..=db {
            let delta = &q * &b[i];
            r[i + shift] -= delta;
        }
        r[dr] = Rat::zero();
    }
}

/// Monic gcd of two dense polynomials over Q (not both zero).
fn dense_gcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    while dense_deg(&b).is_some() {
        let r = dense_rem(&a, &b);
        a = b;
        b = r;
    }
    let d = dense_deg(&a).expect("dense_gcd: both inputs zero");
    let lead = a[d].clone();
    a.truncate(d + 1);
    for c in &mut a {
        *c /= &lead;
    }
    a
}

/// Exact quotient a / b when b divides a.
fn dense_exact_div(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let db = dense_deg(b).expect("dense_exact_div: zero divisor");
    let da = match dense_deg(a) {
        None => return Vec::new(),
        Some(d) => d,
    };
    assert!(da >= db, "dense_exact_div: divisor degree too large");
    let mut r = a.to_vec();
    let mut q = vec![Rat::zero(); da - db + 1];
    for shift in (0..=(da - db)).rev() {
        let dr = shift + db;
        let coef = &r[dr] / &b[db];
        if !coef.is_zero() {
            for i in 0..=db {
                let delta = &coef * &b[i];
                r[i + shift] -= delta;
            }
        }
        q[shift] = coef;
    }
    assert!(dense_deg(&r).is_none(), "dense_exact_div: nonzero remainder");
    q
}

// ---- LaurentPoly arithmetic ----

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_poly_binop {
    ($op:ident, $fn:ident) => {
        impl $op for LaurentPoly {
            type Output = LaurentPoly;
            fn $fn(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$fn(&rhs)
            }
        }
        impl $op<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $fn(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$fn(rhs)
            }
        }
        impl $op<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $fn(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$fn(&rhs)
            }
        }
    };
}

forward_poly_binop!(Add, add);
forward_poly_binop!(Sub, sub);
forward_poly_binop!(Mul, mul);

// ---- Scalar ----

/// Element of the field Q(s), stored as a reduced fraction.
///
/// Canonical form: the denominator is a polynomial in s with nonzero
/// constant term and leading coefficient 1, and shares no factor with the
/// numerator. The numerator may be any Laurent polynomial. This form is
/// unique, so structural equality decides mathematical equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Scalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Scalar {
    /// Build num/den, canonicalizing. Signals on a zero denominator.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Scalar, NumericError> {
        if den.is_zero() {
            return Err(NumericError::DivisionByZero);
        }
        Ok(Scalar::reduced(num, den))
    }

    /// Canonical reduction of a fraction with nonzero denominator.
    fn reduced(num: LaurentPoly, den: LaurentPoly) -> Scalar {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Scalar {
                num: LaurentPoly::zero(),
                den: LaurentPoly::one(),
            };
        }
        // strip s-powers: num = s^a N, den = s^b D with N, D having
        // nonzero constant terms; the value is s^{a-b} N / D
        let (a, n_dense) = num.to_dense();
        let (b, d_dense) = den.to_dense();
        let g = dense_gcd(&n_dense, &d_dense);
        let n_red = dense_exact_div(&n_dense, &g);
        let mut d_red = dense_exact_div(&d_dense, &g);
        // normalize the denominator to leading coefficient 1
        let lead = d_red[dense_deg(&d_red).expect("reduced: zero denominator")].clone();
        let mut n_poly = LaurentPoly::from_dense(a - b, &n_red);
        if !lead.is_one() {
            for c in &mut d_red {
                *c /= &lead;
            }
            n_poly = n_poly.scaled(&lead.recip());
        }
        Scalar {
            num: n_poly,
            den: LaurentPoly::from_dense(0, &d_red),
        }
    }

    /// The zero scalar.
    pub fn zero() -> Scalar {
        Scalar {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    /// The scalar 1.
    pub fn one() -> Scalar {
        Scalar {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
        }
    }

    /// Polynomial scalar.
    pub fn from_poly(p: LaurentPoly) -> Scalar {
        Scalar {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    /// Constant scalar from a rational.
    pub fn from_rat(c: Rat) -> Scalar {
        Scalar::from_poly(LaurentPoly::constant(c))
    }

    /// Constant scalar from an integer.
    pub fn from_int(n: i64) -> Scalar {
        Scalar::from_rat(rat_int(n))
    }

    /// The monomial s^k = q^{k/2}.
    pub fn s_pow(k: i64) -> Scalar {
        Scalar::from_poly(LaurentPoly::s_pow(k))
    }

    /// The monomial q^k = s^{2k}.
    pub fn q_pow(k: i64) -> Scalar {
        Scalar::s_pow(2 * k)
    }

    /// Rational constant p/r. Panics if r == 0.
    pub fn ratio(p: i64, r: i64) -> Scalar {
        Scalar::from_rat(rat(p, r))
    }

    /// Numerator of the canonical form.
    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    /// Denominator of the canonical form.
    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    /// True for the zero scalar.
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True for the scalar 1.
    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Multiplicative inverse. Panics on zero; use [`Scalar::checked_div`]
    /// for a signaled version.
    pub fn inv(&self) -> Scalar {
        self.checked_inv().expect("inverse of zero scalar")
    }

    /// Multiplicative inverse, signaling on zero.
    pub fn checked_inv(&self) -> Result<Scalar, NumericError> {
        if self.is_zero() {
            return Err(NumericError::DivisionByZero);
        }
        Ok(Scalar::reduced(self.den.clone(), self.num.clone()))
    }

    /// Exact division, signaling on a zero divisor.
    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, NumericError> {
        Ok(self * &rhs.checked_inv()?)
    }

    /// Integer power (negative exponents invert). Panics on 0^negative.
    pub fn pow(&self, e: i64) -> Scalar {
        if e < 0 {
            return self.inv().pow(-e);
        }
        let mut acc = Scalar::one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Exact value at q = q0 > 0, via s^2 = q0.
    ///
    /// If the canonical form involves odd powers of s, q0 must be the
    /// square of a rational; otherwise `IrrationalSqrt` is signaled.
    /// A vanishing denominator signals `Pole`.
    pub fn eval_at(&self, q0: &Rat) -> Result<Rat, NumericError> {
        let odd = self
            .num
            .terms()
            .chain(self.den.terms())
            .any(|(e, _)| e.rem_euclid(2) == 1);
        let (num_v, den_v) = if odd {
            let s0 = rat_sqrt(q0).ok_or(NumericError::IrrationalSqrt)?;
            (self.num.eval_rat(&s0), self.den.eval_rat(&s0))
        } else {
            // only even exponents of s: evaluate directly in q0
            (eval_even(&self.num, q0), eval_even(&self.den, q0))
        };
        if den_v.is_zero() {
            return Err(NumericError::Pole);
        }
        Ok(num_v / den_v)
    }

    /// Classical limit q -> 1: num(1)/den(1) of the reduced form.
    ///
    /// Because the fraction is reduced, a vanishing denominator at s = 1
    /// is a genuine pole and is signaled.
    pub fn limit_at_one(&self) -> Result<Rat, NumericError> {
        let den_v = self.den.eval_rat(&Rat::one());
        if den_v.is_zero() {
            return Err(NumericError::Pole);
        }
        Ok(self.num.eval_rat(&Rat::one()) / den_v)
    }

    /// Text form "(num)/(den)".
    pub fn to_text(&self) -> String {
        format!("({})/({})", self.num, self.den)
    }

    /// Text in q-notation, the coefficient format of the element
    /// grammar: "q^e" for even s-exponents 2e, "q^(k/2)" for odd k,
    /// terms in decreasing exponent; fractions render "(num)/(den)".
    pub fn q_text(&self) -> String {
        let signed = |p: &LaurentPoly| {
            let (neg, text) = laurent_q_parts(p);
            if neg {
                format!("-{}", text)
            } else {
                text
            }
        };
        if self.den.is_one() {
            signed(&self.num)
        } else {
            format!("({})/({})", signed(&self.num), signed(&self.den))
        }
    }

    /// JSON form: {"num": [[k, "p/r"], ...], "den": [[k, "p/r"], ...]}
    /// with exponents increasing.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "num": poly_to_json(&self.num),
            "den": poly_to_json(&self.den),
        })
    }

    /// Parse the JSON form emitted by [`Scalar::to_json`]. Returns None on
    /// malformed input or a zero denominator.
    pub fn from_json(v: &serde_json::Value) -> Option<Scalar> {
        let num = poly_from_json(v.get("num")?)?;
        let den = poly_from_json(v.get("den")?)?;
        Scalar::new(num, den).ok()
    }
}

/// Render a Laurent polynomial in q-notation: terms in decreasing
/// s-exponent, "q^e" for even s-exponent 2e, "q^(k/2)" for odd k.
/// Returns the leading term's sign separately (the remaining terms carry
/// their own " + "/" - " separators) so callers can fold it into
/// surrounding syntax.
pub(crate) fn laurent_q_parts(p: &LaurentPoly) -> (bool, String) {
    use num_traits::{One, Signed};
    if p.is_zero() {
        return (false, "0".into());
    }
    let mut out = String::new();
    let mut neg_first = false;
    let terms: Vec<_> = p.terms().collect();
    for (i, (e, r)) in terms.iter().rev().enumerate() {
        let neg = r.is_negative();
        let mag = r.abs();
        if i == 0 {
            neg_first = neg;
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let qpart = if **e == 0 {
            String::new()
        } else if *e % 2 == 0 {
            format!("q^{}", *e / 2)
        } else {
            format!("q^({}/2)", e)
        };
        let rpart = if mag.is_one() && !qpart.is_empty() {
            String::new()
        } else if mag.denom().is_one() {
            format!("{}", mag.numer())
        } else {
            format!("{}/{}", mag.numer(), mag.denom())
        };
        match (rpart.is_empty(), qpart.is_empty()) {
            (true, false) => out.push_str(&qpart),
            (false, true) => out.push_str(&rpart),
            (false, false) => {
                out.push_str(&rpart);
                out.push('*');
                out.push_str(&qpart);
            }
            (true, true) => out.push('1'),
        }
    }
    (neg_first, out)
}

/// Evaluate a Laurent polynomial with only even s-exponents at s^2 = q0.
fn eval_even(p: &LaurentPoly, q0: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for (e, c) in p.terms() {
        debug_assert!(e % 2 == 0);
        acc += c * pow_rat(q0, e / 2);
    }
    acc
}

/// Rational square root of a nonnegative rational, if it exists.
fn rat_sqrt(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(Rat::new(n, d))
    } else {
        None
    }
}

fn poly_to_json(p: &LaurentPoly) -> serde_json::Value {
    serde_json::Value::Array(
        p.terms()
            .map(|(k, c)| serde_json::json!([k, rat_to_string(c)]))
            .collect(),
    )
}

fn poly_from_json(v: &serde_json::Value) -> Option<LaurentPoly> {
    let arr = v.as_array()?;
    let mut p = LaurentPoly::zero();
    for pair in arr {
        let pair = pair.as_array()?;
        if pair.len() != 2 {
            return None;
        }
        let k = pair[0].as_i64()?;
        let c = rat_from_string(pair[1].as_str()?)?;
        p.add_term(k, c);
    }
    Some(p)
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Scalar {
        Scalar::from_int(n)
    }
}

impl From<Rat> for Scalar {
    fn from(c: Rat) -> Scalar {
        Scalar::from_rat(c)
    }
}

// ---- Scalar arithmetic ----

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::reduced(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::reduced(
            &self.num * &rhs.den - &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    /// Panics on a zero divisor; see [`Scalar::checked_div`].
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("scalar division by zero")
    }
}

macro_rules! forward_scalar_binop {
    ($op:ident, $fn:ident) => {
        impl $op for Scalar {
            type Output = Scalar;
            fn $fn(self, rhs: Scalar) -> Scalar {
                (&self).$fn(&rhs)
            }
        }
        impl $op<&Scalar> for Scalar {
            type Output = Scalar;
            fn $fn(self, rhs: &Scalar) -> Scalar {
                (&self).$fn(rhs)
            }
        }
        impl $op<Scalar> for &Scalar {
            type Output = Scalar;
            fn $fn(self, rhs: Scalar) -> Scalar {
                self.$fn(&rhs)
            }
        }
    };
}

forward_scalar_binop!(Add, add);
forward_scalar_binop!(Sub, sub);
forward_scalar_binop!(Mul, mul);
forward_scalar_binop!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self += &rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self -= &rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl MulAssign for Scalar {
    fn mul_assign(&mut self, rhs: Scalar) {
        *self *= &rhs;
    }
}

// ---- q-numbers ----

/// q-integer [x] for half-integer x given as x2 = 2x:
/// [x] = (q^x - q^{-x})/(q - q^{-1}) = (s^{2x} - s^{-2x})/(s^2 - s^{-2}).
pub fn qnum2(x2: i64) -> Scalar {
    let num = &LaurentPoly::s_pow(x2) - &LaurentPoly::s_pow(-x2);
    let den = &LaurentPoly::s_pow(2) - &LaurentPoly::s_pow(-2);
    Scalar::new(num, den).expect("qnum2: nonzero denominator")
}

/// q-integer [n] for integer n; always a Laurent polynomial in q.
pub fn qnum(n: i64) -> Scalar {
    qnum2(2 * n)
}

// ---- tests ----
