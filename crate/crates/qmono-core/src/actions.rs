//! Left and right U_q(su(2)) module-algebra actions on A(SU_q(2)), the
//! quadratic Casimir, the modular automorphism, and the quantum tangent
//! space operators X_z, X_-, X_+.
//!
//! * Conventions: K |> x = q^{n/2} x on the left weight spaces L_n; the
//!   two actions commute and each satisfies the module-algebra rule
//!   h(xy) = h_(1)(x) h_(2)(y) with Delta(K) = K (x) K and
//!   Delta(E) = E (x) K + K^{-1} (x) E (same for F).
//! * Base cases (left): E: a -> -q c*, c -> a*, a*, c* -> 0;
//!   F: a* -> c, c* -> -q^{-1} a, a, c -> 0.
//! * Base cases (right): F: a -> c, c* -> -q a*, a*, c -> 0;
//!   E: a* -> -q c*, c -> a, a, c* -> 0.
//! * The K actions are diagonal on basis monomials and run in O(1) per
//!   term via the weight; the recursive path is kept as a cross-check.

use crate::algebra::{AlgElt, Monomial};
use crate::scalars::Scalar;

// ---- generator words ----

/// Generator of U_q(su(2)) (K^{-1} listed separately so words stay
/// positive).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum UqGenerator {
    /// The group-like generator K.
    K,
    /// Its inverse K^{-1}.
    Kinv,
    /// The raising generator E.
    E,
    /// The lowering generator F.
    F,
}

impl UqGenerator {
    /// Parse a generator name ("K", "Kinv", "E", "F").
    pub fn from_name(name: &str) -> Option<UqGenerator> {
        match name {
            "K" => Some(UqGenerator::K),
            "Kinv" => Some(UqGenerator::Kinv),
            "E" => Some(UqGenerator::E),
            "F" => Some(UqGenerator::F),
            _ => None,
        }
    }

    /// Canonical name.
    pub fn name(&self) -> &'static str {
        match self {
            UqGenerator::K => "K",
            UqGenerator::Kinv => "Kinv",
            UqGenerator::E => "E",
            UqGenerator::F => "F",
        }
    }
}

/// A finite word of generators; the empty word acts as the identity.
pub type UqWord = Vec<UqGenerator>;

/// Which of the two commuting actions to apply.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    /// The left action h |> x.
    Left,
    /// The right action x <| h.
    Right,
}

// ---- single-generator factors of a monomial ----

#[derive(Clone, Copy, PartialEq, Eq)]
enum Factor {
    A,
    AStar,
    C,
    CStar,
}

impl Factor {
    fn elt(self) -> AlgElt {
        match self {
            Factor::A => AlgElt::a(),
            Factor::AStar => AlgElt::a_star(),
            Factor::C => AlgElt::c(),
            Factor::CStar => AlgElt::c_star(),
        }
    }

    fn weight(self) -> i64 {
        match self {
            Factor::A => -1,
            Factor::AStar => 1,
            Factor::C => -1,
            Factor::CStar => 1,
        }
    }

    fn right_weight(self) -> i64 {
        match self {
            Factor::A => -1,
            Factor::AStar => 1,
            Factor::C => 1,
            Factor::CStar => -1,
        }
    }
}

/// Split off the leftmost generator of a normal-form word.
fn peel_left(m: &Monomial) -> Option<(Factor, Monomial)> {
    if m.k > 0 {
        Some((Factor::A, Monomial::new(m.k - 1, m.l, m.m)))
    } else if m.k < 0 {
        Some((Factor::AStar, Monomial::new(m.k + 1, m.l, m.m)))
    } else if m.l > 0 {
        Some((Factor::C, Monomial::new(0, m.l - 1, m.m)))
    } else if m.m > 0 {
        Some((Factor::CStar, Monomial::new(0, m.l, m.m - 1)))
    } else {
        None
    }
}

/// Split off the rightmost generator of a normal-form word.
fn peel_right(m: &Monomial) -> Option<(Monomial, Factor)> {
    if m.m > 0 {
        Some((Monomial::new(m.k, m.l, m.m - 1), Factor::CStar))
    } else if m.l > 0 {
        Some((Monomial::new(m.k, m.l - 1, m.m), Factor::C))
    } else if m.k > 0 {
        Some((Monomial::new(m.k - 1, 0, 0), Factor::A))
    } else if m.k < 0 {
        Some((Monomial::new(m.k + 1, 0, 0), Factor::AStar))
    } else {
        None
    }
}

fn base_e_left(g: Factor) -> AlgElt {
    match g {
        Factor::A => AlgElt::c_star().scaled(&-Scalar::q_pow(1)),
        Factor::C => AlgElt::a_star(),
        Factor::AStar | Factor::CStar => AlgElt::zero(),
    }
}

fn base_f_left(g: Factor) -> AlgElt {
    match g {
        Factor::AStar => AlgElt::c(),
        Factor::CStar => AlgElt::a().scaled(&-Scalar::q_pow(-1)),
        Factor::A | Factor::C => AlgElt::zero(),
    }
}

fn base_e_right(g: Factor) -> AlgElt {
    match g {
        Factor::AStar => AlgElt::c_star().scaled(&-Scalar::q_pow(1)),
        Factor::C => AlgElt::a(),
        Factor::A | Factor::CStar => AlgElt::zero(),
    }
}

fn base_f_right(g: Factor) -> AlgElt {
    match g {
        Factor::A => AlgElt::c(),
        // c* <| F = -q^{-1} a*: forced by star compatibility
        // (x* <| h = (x <| (Sh)*)*) and by descent through the sphere
        // relation a*a + c*c = 1
        Factor::CStar => AlgElt::a_star().scaled(&-Scalar::q_pow(-1)),
        Factor::AStar | Factor::C => AlgElt::zero(),
    }
}

// ---- monomial-level recursion ----

/// K^{e} |> m for e in {1, -1} (diagonal: scale by s^{e * weight}).
fn k_left_mono(m: &Monomial, e: i64) -> Scalar {
    Scalar::s_pow(e * m.weight())
}

/// m <| K^{e}.
fn k_right_mono(m: &Monomial, e: i64) -> Scalar {
    Scalar::s_pow(e * m.right_weight())
}

/// E |> m or F |> m by peeling the leading factor:
/// h(g y) = (h g)(K y) + (K^{-1} g)(h y).
fn ef_left_mono(m: &Monomial, is_e: bool) -> AlgElt {
    match peel_left(m) {
        None => AlgElt::zero(),
        Some((g, rest)) => {
            let base = if is_e { base_e_left(g) } else { base_f_left(g) };
            let mut out = AlgElt::zero();
            if !base.is_zero() {
                let krest = Scalar::s_pow(rest.weight());
                out = out
                    + (base * AlgElt::monomial(rest, Scalar::one())).scaled(&krest);
            }
            let tail = ef_left_mono(&rest, is_e);
            if !tail.is_zero() {
                let kg = Scalar::s_pow(-g.weight());
                out = out + (g.elt() * tail).scaled(&kg);
            }
            out
        }
    }
}

/// m <| E or m <| F by peeling the trailing factor:
/// (y g) h = (y h)(g K) + (y K^{-1})(g h).
fn ef_right_mono(m: &Monomial, is_e: bool) -> AlgElt {
    match peel_right(m) {
        None => AlgElt::zero(),
        Some((rest, g)) => {
            let base = if is_e { base_e_right(g) } else { base_f_right(g) };
            let mut out = AlgElt::zero();
            let head = ef_right_mono(&rest, is_e);
            if !head.is_zero() {
                let kg = Scalar::s_pow(g.right_weight());
                out = out + (head * g.elt()).scaled(&kg);
            }
            if !base.is_zero() {
                let krest = Scalar::s_pow(-rest.right_weight());
                out = out
                    + (AlgElt::monomial(rest, Scalar::one()) * base).scaled(&krest);
            }
            out
        }
    }
}

// ---- public actions ----

/// Left action h |> x of a single generator.
pub fn act_left(g: UqGenerator, x: &AlgElt) -> AlgElt {
    let mut out = AlgElt::zero();
    for (m, c) in x.terms() {
        match g {
            UqGenerator::K => out.add_term(*m, c * k_left_mono(m, 1)),
            UqGenerator::Kinv => out.add_term(*m, c * k_left_mono(m, -1)),
            UqGenerator::E => out = out + ef_left_mono(m, true).scaled(c),
            UqGenerator::F => out = out + ef_left_mono(m, false).scaled(c),
        }
    }
    out
}

/// Right action x <| h of a single generator.
pub fn act_right(x: &AlgElt, g: UqGenerator) -> AlgElt {
    let mut out = AlgElt::zero();
    for (m, c) in x.terms() {
        match g {
            UqGenerator::K => out.add_term(*m, c * k_right_mono(m, 1)),
            UqGenerator::Kinv => out.add_term(*m, c * k_right_mono(m, -1)),
            UqGenerator::E => out = out + ef_right_mono(m, true).scaled(c),
            UqGenerator::F => out = out + ef_right_mono(m, false).scaled(c),
        }
    }
    out
}

/// Sequential word action: on the left, act_word([g1, g2], x, Left) is
/// g1 |> (g2 |> x); on the right, act_word([g1, g2], x, Right) is
/// (x <| g1) <| g2.
pub fn act_word(w: &[UqGenerator], x: &AlgElt, side: Side) -> AlgElt {
    match side {
        Side::Left => {
            let mut out = x.clone();
            for g in w.iter().rev() {
                out = act_left(*g, &out);
            }
            out
        }
        Side::Right => {
            let mut out = x.clone();
            for g in w {
                out = act_right(&out, *g);
            }
            out
        }
    }
}

/// Action of the Casimir
/// C_q = (qK^2 - 2 + q^{-1}K^{-2})/(q - q^{-1})^2 + FE - 1/4.
pub fn act_casimir(x: &AlgElt, side: Side) -> AlgElt {
    use UqGenerator::{E, F, K, Kinv};
    let denom = (Scalar::q_pow(1) - Scalar::q_pow(-1)).pow(2);
    let k2 = act_word(&[K, K], x, side);
    let kinv2 = act_word(&[Kinv, Kinv], x, side);
    // on either side the word [F, E] realizes the product FE: on the
    // left F |> (E |> x), on the right (x <| F) <| E = x <| FE per the
    // right-module convention
    let fe = match side {
        Side::Left => act_word(&[F, E], x, side),
        Side::Right => act_word(&[F, E], x, side),
    };
    let quad = (k2.scaled(&Scalar::q_pow(1)) - x.scaled(&Scalar::from_int(2))
        + kinv2.scaled(&Scalar::q_pow(-1)))
    .scaled(&denom.inv());
    quad + fe - x.scaled(&Scalar::ratio(1, 4))
}

/// Modular automorphism theta(x) = K^{-2} |> x <| K^2.
pub fn modular_auto(x: &AlgElt) -> AlgElt {
    use UqGenerator::{K, Kinv};
    let left = act_word(&[Kinv, Kinv], x, Side::Left);
    act_word(&[K, K], &left, Side::Right)
}

// ---- quantum tangent space ----

/// X_z |> x = (x - K^4 |> x)/(1 - q^{-2}).
pub fn x_z_act(x: &AlgElt) -> AlgElt {
    use UqGenerator::K;
    let k4 = act_word(&[K, K, K, K], x, Side::Left);
    (x - &k4).scaled(&(Scalar::one() - Scalar::q_pow(-2)).inv())
}

/// X_- |> x = q^{-1/2} F |> (K |> x).
pub fn x_minus_act(x: &AlgElt) -> AlgElt {
    use UqGenerator::{F, K};
    act_left(F, &act_left(K, x)).scaled(&Scalar::s_pow(-1))
}

/// X_+ |> x = q^{1/2} E |> (K |> x).
pub fn x_plus_act(x: &AlgElt) -> AlgElt {
    use UqGenerator::{E, K};
    act_left(E, &act_left(K, x)).scaled(&Scalar::s_pow(1))
}

// ---- recursive K cross-check ----

/// Fully recursive K-action (no weight shortcut), for cross-checking the
/// diagonal fast path.
pub fn act_k_left_recursive(x: &AlgElt, e: i64) -> AlgElt {
    fn k_mono(m: &Monomial, e: i64) -> Scalar {
        match peel_left(m) {
            None => Scalar::one(),
            Some((g, rest)) => Scalar::s_pow(e * g.weight()) * k_mono(&rest, e),
        }
    }
    let mut out = AlgElt::zero();
    for (m, c) in x.terms() {
        out.add_term(*m, c * k_mono(m, e));
    }
    out
}

// ---- tests ----

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{b_minus, b_plus, b_zero};
    use crate::scalars::qnum;
    use UqGenerator::{E, F, K, Kinv};

    fn q(k: i64) -> Scalar {
        Scalar::q_pow(k)
    }

    fn sp(k: i64) -> Scalar {
        Scalar::s_pow(k)
    }

    fn samples() -> Vec<AlgElt> {
        vec![
            AlgElt::word(2, 1, 0),
            AlgElt::word(-1, 0, 2),
            AlgElt::word(1, 1, 1).scaled(&q(-1)) + AlgElt::c(),
            b_minus() + b_zero().scaled(&q(3)),
            AlgElt::word(-2, 2, 1),
        ]
    }

    #[test]
    fn base_cases_left() {
        assert_eq!(act_left(E, &AlgElt::c()), AlgElt::a_star());
        assert_eq!(act_left(F, &AlgElt::a()), AlgElt::zero());
        assert_eq!(
            act_left(E, &AlgElt::a()),
            AlgElt::c_star().scaled(&-q(1))
        );
        assert_eq!(act_left(F, &AlgElt::a_star()), AlgElt::c());
        assert_eq!(
            act_left(F, &AlgElt::c_star()),
            AlgElt::a().scaled(&-q(-1))
        );
        assert_eq!(act_left(K, &AlgElt::a()), AlgElt::a().scaled(&sp(-1)));
        assert_eq!(act_left(E, &AlgElt::a_star()), AlgElt::zero());
        assert_eq!(act_left(E, &AlgElt::c_star()), AlgElt::zero());
    }

    #[test]
    fn base_cases_right() {
        assert_eq!(act_right(&AlgElt::a(), F), AlgElt::c());
        assert_eq!(act_right(&AlgElt::c(), E), AlgElt::a());
        assert_eq!(
            act_right(&AlgElt::c_star(), F),
            AlgElt::a_star().scaled(&-q(-1))
        );
        assert_eq!(
            act_right(&AlgElt::a_star(), E),
            AlgElt::c_star().scaled(&-q(1))
        );
        assert_eq!(act_right(&AlgElt::a(), K), AlgElt::a().scaled(&sp(-1)));
        assert_eq!(act_right(&AlgElt::c(), K), AlgElt::c().scaled(&sp(1)));
        assert_eq!(act_right(&AlgElt::a(), E), AlgElt::zero());
        assert_eq!(act_right(&AlgElt::c(), F), AlgElt::zero());
    }

    #[test]
    fn power_formulas_left() {
        for s in 1..=5u32 {
            let si = s as i64;
            let br = qnum(si);
            let a = AlgElt::a().pow(s);
            let astar = AlgElt::a_star().pow(s);
            let c = AlgElt::c().pow(s);
            let cstar = AlgElt::c_star().pow(s);
            // K and K^{-1} are diagonal
            assert_eq!(act_left(K, &a), a.scaled(&sp(-si)));
            assert_eq!(act_left(Kinv, &a), a.scaled(&sp(si)));
            assert_eq!(act_left(K, &astar), astar.scaled(&sp(si)));
            assert_eq!(act_left(K, &c), c.scaled(&sp(-si)));
            assert_eq!(act_left(K, &cstar), cstar.scaled(&sp(si)));
            assert_eq!(act_left(Kinv, &cstar), cstar.scaled(&sp(-si)));
            // F
            assert_eq!(act_left(F, &a), AlgElt::zero());
            assert_eq!(act_left(F, &c), AlgElt::zero());
            let expect = (AlgElt::c() * AlgElt::a_star().pow(s - 1))
                .scaled(&(sp(1 - si) * &br));
            assert_eq!(act_left(F, &astar), expect);
            let expect = (AlgElt::a() * AlgElt::c_star().pow(s - 1))
                .scaled(&(-sp(-1 - si) * &br));
            assert_eq!(act_left(F, &cstar), expect);
            // E
            assert_eq!(act_left(E, &astar), AlgElt::zero());
            assert_eq!(act_left(E, &cstar), AlgElt::zero());
            let expect = (AlgElt::a().pow(s - 1) * AlgElt::c_star())
                .scaled(&(-sp(3 - si) * &br));
            assert_eq!(act_left(E, &a), expect);
            let expect = (AlgElt::c().pow(s - 1) * AlgElt::a_star())
                .scaled(&(sp(1 - si) * &br));
            assert_eq!(act_left(E, &c), expect);
        }
    }

    #[test]
    fn power_formulas_right() {
        for s in 1..=5u32 {
            let si = s as i64;
            let br = qnum(si);
            let a = AlgElt::a().pow(s);
            let astar = AlgElt::a_star().pow(s);
            let c = AlgElt::c().pow(s);
            let cstar = AlgElt::c_star().pow(s);
            // K and K^{-1}
            assert_eq!(act_right(&a, K), a.scaled(&sp(-si)));
            assert_eq!(act_right(&astar, K), astar.scaled(&sp(si)));
            assert_eq!(act_right(&c, K), c.scaled(&sp(si)));
            assert_eq!(act_right(&cstar, K), cstar.scaled(&sp(-si)));
            assert_eq!(act_right(&c, Kinv), c.scaled(&sp(-si)));
            // F
            assert_eq!(act_right(&astar, F), AlgElt::zero());
            assert_eq!(act_right(&c, F), AlgElt::zero());
            let expect =
                (AlgElt::c() * AlgElt::a().pow(s - 1)).scaled(&(sp(si - 1) * &br));
            assert_eq!(act_right(&a, F), expect);
            let expect = (AlgElt::a_star() * AlgElt::c_star().pow(s - 1))
                .scaled(&(-sp(si - 3) * &br));
            assert_eq!(act_right(&cstar, F), expect);
            // E
            assert_eq!(act_right(&a, E), AlgElt::zero());
            assert_eq!(act_right(&cstar, E), AlgElt::zero());
            let expect = (AlgElt::c_star() * AlgElt::a_star().pow(s - 1))
                .scaled(&(-sp(3 - si) * &br));
            assert_eq!(act_right(&astar, E), expect);
            let expect =
                (AlgElt::c().pow(s - 1) * AlgElt::a()).scaled(&(sp(si - 1) * &br));
            assert_eq!(act_right(&c, E), expect);
        }
    }

    #[test]
    fn word_composition() {
        // E |> (F |> a*) = E |> c = a*
        assert_eq!(
            act_word(&[E, F], &AlgElt::a_star(), Side::Left),
            AlgElt::a_star()
        );
        for x in samples() {
            assert_eq!(act_word(&[], &x, Side::Left), x);
            assert_eq!(act_word(&[K, Kinv], &x, Side::Left), x);
            assert_eq!(act_word(&[Kinv, K], &x, Side::Right), x);
        }
    }

    #[test]
    fn casimir_eigenvalues() {
        // J = 1/2: eigenvalue [1]^2 - 1/4 = 3/4
        assert_eq!(
            act_casimir(&AlgElt::a_star(), Side::Left),
            AlgElt::a_star().scaled(&Scalar::ratio(3, 4))
        );
        // J = 0: eigenvalue [1/2]^2 - 1/4
        let half_sq = qnum2(1).pow(2);
        assert_eq!(
            act_casimir(&AlgElt::one(), Side::Left),
            AlgElt::constant(half_sq - Scalar::ratio(1, 4))
        );
        // ca* sits in the J = 1 block: eigenvalue [3/2]^2 - 1/4, both sides
        let ca = AlgElt::c() * AlgElt::a_star();
        let ev = qnum2(3).pow(2) - Scalar::ratio(1, 4);
        assert_eq!(act_casimir(&ca, Side::Right), ca.scaled(&ev));
        assert_eq!(act_casimir(&ca, Side::Left), ca.scaled(&ev));
    }

    use crate::scalars::qnum2;

    #[test]
    fn modular_examples() {
        assert_eq!(modular_auto(&AlgElt::one()), AlgElt::one());
        assert_eq!(modular_auto(&AlgElt::a()), AlgElt::a());
        // on the sphere subalgebra theta reduces to <| K^2
        for g in [b_minus(), b_zero(), b_plus()] {
            assert_eq!(modular_auto(&g), act_word(&[K, K], &g, Side::Right));
        }
        // theta(B_+) = q^2 B_+ (right weight +2)
        assert_eq!(modular_auto(&b_plus()), b_plus().scaled(&q(2)));
    }

    #[test]
    fn star_compatibility() {
        // h |> x* = ((S h)* |> x)*: K -> K^{-1}, E -> -q F, F -> -q^{-1} E
        for x in samples() {
            let xs = x.star();
            assert_eq!(act_left(K, &xs), act_left(Kinv, &x).star());
            assert_eq!(
                act_left(E, &xs),
                act_left(F, &x).star().scaled(&-q(1))
            );
            assert_eq!(
                act_left(F, &xs),
                act_left(E, &x).star().scaled(&-q(-1))
            );
        }
    }

    #[test]
    fn module_algebra_rule() {
        let list = samples();
        for x in &list {
            for y in &list {
                let lhs = act_left(E, &(x * y));
                let rhs = act_left(E, x) * act_left(K, y)
                    + act_left(Kinv, x) * act_left(E, y);
                assert_eq!(lhs, rhs);
                let lhs = act_left(F, &(x * y));
                let rhs = act_left(F, x) * act_left(K, y)
                    + act_left(Kinv, x) * act_left(F, y);
                assert_eq!(lhs, rhs);
                let lhs = act_right(&(x * y), E);
                let rhs = act_right(x, E) * act_right(y, K)
                    + act_right(x, Kinv) * act_right(y, E);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn actions_commute() {
        for x in samples() {
            for h in [K, E, F] {
                for g in [K, E, F] {
                    assert_eq!(
                        act_right(&act_left(h, &x), g),
                        act_left(h, &act_right(&x, g))
                    );
                }
            }
        }
    }

    #[test]
    fn uq_relations_realized() {
        let denom = (q(1) - q(-1)).inv();
        for x in samples() {
            // KE = qEK
            assert_eq!(
                act_left(K, &act_left(E, &x)),
                act_left(E, &act_left(K, &x)).scaled(&q(1))
            );
            // KF = q^{-1}FK
            assert_eq!(
                act_left(K, &act_left(F, &x)),
                act_left(F, &act_left(K, &x)).scaled(&q(-1))
            );
            // [E, F] = (K^2 - K^{-2})/(q - q^{-1})
            let lhs = act_left(E, &act_left(F, &x)) - act_left(F, &act_left(E, &x));
            let rhs = (act_word(&[K, K], &x, Side::Left)
                - act_word(&[Kinv, Kinv], &x, Side::Left))
            .scaled(&denom);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn casimir_central() {
        for x in samples() {
            for g in [K, E, F] {
                assert_eq!(
                    act_casimir(&act_left(g, &x), Side::Left),
                    act_left(g, &act_casimir(&x, Side::Left))
                );
                assert_eq!(
                    act_casimir(&act_right(&x, g), Side::Right),
                    act_right(&act_casimir(&x, Side::Right), g)
                );
            }
        }
    }

    #[test]
    fn grading_action() {
        let cases = [
            (AlgElt::word(2, 1, 0), -3i64),
            (AlgElt::word(-1, 0, 2), 3),
            (AlgElt::word(0, 1, 1), 0),
        ];
        for (x, n) in cases {
            assert!(x.is_weight(n));
            assert!(act_left(E, &x).is_weight(n + 2));
            assert!(act_left(F, &x).is_weight(n - 2));
        }
    }

    #[test]
    fn k_fast_path_matches_recursion() {
        for x in samples() {
            assert_eq!(act_left(K, &x), act_k_left_recursive(&x, 1));
            assert_eq!(act_left(Kinv, &x), act_k_left_recursive(&x, -1));
        }
    }

    #[test]
    fn tangent_operators() {
        // X_z is diagonal on L_n with eigenvalue (1 - q^{2n})/(1 - q^{-2})
        let denom = (Scalar::one() - q(-2)).inv();
        for (x, n) in [
            (AlgElt::a_star(), 1i64),
            (AlgElt::word(2, 0, 1), -1),
            (b_plus(), 0),
        ] {
            let ev = (Scalar::one() - q(2 * n)) * &denom;
            assert_eq!(x_z_act(&x), x.scaled(&ev));
        }
        // X_- X_+ - q^2 X_+ X_- = X_z as operators
        for x in samples() {
            let lhs = x_minus_act(&x_plus_act(&x))
                - x_plus_act(&x_minus_act(&x)).scaled(&q(2));
            assert_eq!(lhs, x_z_act(&x));
        }
    }
}
