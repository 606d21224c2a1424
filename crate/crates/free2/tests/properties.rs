//! Cross-module algebraic laws, checked generatively. Unit tests pin the
//! worked examples; this suite drives the same contracts with random and
//! exhaustively enumerated inputs.

use free2::aut::{
    is_primitive, multiplicity, primitive_root, whitehead_minimize, Automorphism, ElementaryMove,
};
use free2::conjugacy::{comm_power_form, comm_power_pair, is_commutator_of_basis, equiv};
use free2::word::Letter;
use free2::Word;

use proptest::prelude::*;

fn letter_strategy() -> impl Strategy<Value = Letter> {
    prop::sample::select(Letter::ALL.to_vec())
}

/// Arbitrary freely reduced word of length at most `max_len` (free
/// reduction may shorten the drawn sequence; that skews toward shorter
/// words, which is fine for law checking).
fn word_strategy(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(letter_strategy(), 0..=max_len).prop_map(Word::from_letters)
}

fn move_strategy() -> impl Strategy<Value = ElementaryMove> {
    prop::sample::select(ElementaryMove::ALL.to_vec())
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

proptest! {
    #[test]
    fn format_then_parse_round_trips(w in word_strategy(24)) {
        prop_assert_eq!(Word::parse(&w.compact()).unwrap(), w.clone());
        prop_assert_eq!(Word::parse(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn exponent_sums_are_homomorphic(u in word_strategy(16), v in word_strategy(16)) {
        let sum = u.multiply(&v).exponent_sums();
        prop_assert_eq!(sum.x, u.exponent_sums().x + v.exponent_sums().x);
        prop_assert_eq!(sum.y, u.exponent_sums().y + v.exponent_sums().y);
    }

    #[test]
    fn inversion_is_an_involution_with_cancellation(u in word_strategy(16)) {
        prop_assert_eq!(u.invert().invert(), u.clone());
        prop_assert!(u.multiply(&u.invert()).is_empty());
    }

    #[test]
    fn cyclic_reduction_minimizes_within_the_conjugacy_class(u in word_strategy(16)) {
        let (core, conjugator) = u.cyclic_reduce();
        prop_assert!(core.len() <= u.len());
        let reassembled = conjugator
            .multiply(&core.representative())
            .multiply(&conjugator.invert());
        prop_assert_eq!(reassembled, u);
    }

    #[test]
    fn conjugates_and_inverses_stay_equivalent(
        u in word_strategy(14),
        c in word_strategy(8),
        flip in any::<bool>(),
    ) {
        let v = if flip { u.invert() } else { u.clone() };
        prop_assert!(equiv(&u, &c.invert().multiply(&v).multiply(&c)));
    }

    #[test]
    fn single_moves_preserve_primitivity_and_root_exponent(
        w in word_strategy(14),
        mv in move_strategy(),
    ) {
        let image = Automorphism::from_move(mv).apply(&w);
        prop_assert_eq!(is_primitive(&image), is_primitive(&w));
        if !w.cyclic_core().is_empty() {
            let before = multiplicity(&w).unwrap();
            let after = multiplicity(&image).unwrap();
            prop_assert_eq!(before.exponent, after.exponent);
        }
    }

    #[test]
    fn primitive_words_have_coprime_exponent_sums(w in word_strategy(14)) {
        let sums = w.exponent_sums();
        if is_primitive(&w) {
            prop_assert_eq!(gcd(sums.x.unsigned_abs(), sums.y.unsigned_abs()), 1);
        }
        let g = gcd(sums.x.unsigned_abs(), sums.y.unsigned_abs());
        if g != 0 && !w.cyclic_core().is_empty() {
            let exponent = multiplicity(&w).unwrap().exponent;
            prop_assert_eq!(g % exponent, 0);
        }
    }

    #[test]
    fn minimization_is_idempotent(w in word_strategy(14)) {
        let (min1, _) = whitehead_minimize(&w.cyclic_core());
        let (min2, phi2) = whitehead_minimize(&min1);
        prop_assert_eq!(&min2, &min1);
        prop_assert_eq!(phi2.apply_cyclic(&min1), min1);
    }

    #[test]
    fn commutator_decisions_ignore_representatives(
        moves in prop::collection::vec(move_strategy(), 0..6),
        w in word_strategy(10),
        c in word_strategy(6),
        d in word_strategy(6),
        m in 2u32..4,
        flip_w in any::<bool>(),
        flip_g in any::<bool>(),
        hit in any::<bool>(),
    ) {
        let phi = Automorphism::from_moves(&moves);
        let u = phi.apply(&Word::x());
        let gamma = u.pow(i64::from(m));
        // Half the runs use a target that genuinely has the commutator
        // form, so both answers are exercised.
        let target = if hit {
            Word::commutator(&phi.apply(&Word::y()), &gamma)
        } else {
            w
        };
        let conj_target = {
            let t = if flip_w { target.invert() } else { target.clone() };
            c.invert().multiply(&t).multiply(&c)
        };
        let conj_gamma = {
            let g = if flip_g { gamma.invert() } else { gamma.clone() };
            d.invert().multiply(&g).multiply(&d)
        };
        let base = comm_power_form(&target, &gamma).unwrap().is_some();
        prop_assert_eq!(comm_power_form(&conj_target, &conj_gamma).unwrap().is_some(), base);
        if hit {
            prop_assert!(base);
        }
    }

    #[test]
    fn pair_decisions_ignore_representatives(
        moves in prop::collection::vec(move_strategy(), 0..6),
        w in word_strategy(10),
        c in word_strategy(6),
        m in 2i64..4,
        n in 2i64..4,
        flip in any::<bool>(),
        hit in any::<bool>(),
    ) {
        let phi = Automorphism::from_moves(&moves);
        let gamma0 = phi.apply(&Word::x()).pow(m);
        let gamma1 = phi.apply(&Word::y()).pow(n);
        let target = if hit { Word::commutator(&gamma0, &gamma1) } else { w };
        let conj_target = {
            let t = if flip { target.invert() } else { target.clone() };
            c.invert().multiply(&t).multiply(&c)
        };
        let base = comm_power_pair(&target, &gamma0, &gamma1).unwrap().is_some();
        prop_assert_eq!(comm_power_pair(&conj_target, &gamma0, &gamma1).unwrap().is_some(), base);
        if hit {
            prop_assert!(base);
        }
    }
}

/// Every automorphism image of [x,y] stays a basis commutator; exhaustive
/// over all elementary-move sequences of length at most 6.
#[test]
fn commutator_class_is_stable_under_short_automorphisms() {
    let comm = Word::commutator(&Word::x(), &Word::y());
    let mut stack = vec![Automorphism::identity()];
    let mut checked = 0u64;
    while let Some(phi) = stack.pop() {
        checked += 1;
        assert!(
            is_commutator_of_basis(&phi.apply(&comm)),
            "failed after moves {}",
            phi.factorization_string()
        );
        if phi.factorization().len() < 6 {
            for mv in ElementaryMove::ALL {
                stack.push(Automorphism::from_move(mv).compose(&phi));
            }
        }
    }
    // Full 7-ary tree of depth 6: (7^7 - 1) / 6 nodes.
    assert_eq!(checked, (7u64.pow(7) - 1) / 6);
}

/// The root reported by multiplicity really reassembles the core, with a
/// maximal exponent (spot-checked by refusing any larger divisor split).
#[test]
fn multiplicity_roots_reassemble() {
    let words = ["x^6", "(x y)^3", "(x^2 y X Y)^2", "x y x y y", "(Y x)^4"];
    for text in words {
        let w = Word::parse(text).unwrap();
        let m = multiplicity(&w).unwrap();
        let rebuilt = m.root.representative().pow(m.exponent as i64);
        assert_eq!(rebuilt.cyclic_core(), w.cyclic_core(), "{text}");
        assert_eq!(primitive_root(&m.root).unwrap().exponent, 1, "{text}: root not maximal");
    }
}
