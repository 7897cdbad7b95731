use std::sync::OnceLock;

use proptest::prelude::*;

use heisenberg_core::element::COMMUTATOR;
use heisenberg_core::language::{rectangle_word, swap_level, CyclicWord};
use heisenberg_core::metric::{distance, is_dead_end_element, is_geodesic, predict_dead_end};
use heisenberg_core::oracle::DistanceBall;
use heisenberg_core::polyomino::p;
use heisenberg_core::{
    evaluate, format_word, invert, length, multiply, parse_word, GroupElement, Letter, Symmetry,
    Word,
};

fn ball(radius: u32) -> &'static DistanceBall {
    static BALLS: OnceLock<[DistanceBall; 2]> = OnceLock::new();
    let balls = BALLS.get_or_init(|| [DistanceBall::unbounded(10), DistanceBall::unbounded(12)]);
    match radius {
        10 => &balls[0],
        12 => &balls[1],
        _ => unreachable!(),
    }
}

fn letter() -> impl Strategy<Value = Letter> {
    prop::sample::select(Letter::ALL.to_vec())
}

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(letter(), 0..=max_len).prop_map(Word::from)
}

fn element(bound: i64) -> impl Strategy<Value = GroupElement> {
    (
        -bound..=bound,
        -bound..=bound,
        -bound * bound..=bound * bound,
    )
        .prop_map(|(n, m, k)| GroupElement::new(n, m, k))
}

fn symmetry() -> impl Strategy<Value = Symmetry> {
    (0u8..16).prop_map(Symmetry::from_index)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn evaluation_is_a_homomorphism(u in word(40), v in word(40)) {
        prop_assert_eq!(evaluate(&u.concat(&v)), multiply(evaluate(&u), evaluate(&v)));
        prop_assert_eq!(evaluate(&u.inverse()), invert(evaluate(&u)));
    }

    #[test]
    fn multiplication_is_associative(g in element(50), h in element(50), f in element(50)) {
        prop_assert_eq!(multiply(multiply(g, h), f), multiply(g, multiply(h, f)));
        prop_assert!(multiply(g, invert(g)).is_identity());
    }

    #[test]
    fn commutator_is_central(g in element(100)) {
        let c = evaluate(&parse_word("abAB").unwrap());
        prop_assert_eq!(c, COMMUTATOR);
        prop_assert_eq!(multiply(g, c), multiply(c, g));
    }

    #[test]
    fn symmetries_commute_with_evaluation(s in symmetry(), w in word(30)) {
        prop_assert_eq!(evaluate(&s.apply_word(&w)), s.apply_element(evaluate(&w)));
    }

    #[test]
    fn symmetries_preserve_length(s in symmetry(), g in element(40)) {
        prop_assert_eq!(length(s.apply_element(g)), length(g));
    }

    #[test]
    fn symmetry_composition(s in symmetry(), t in symmetry(), w in word(20)) {
        prop_assert_eq!(s.then(t).apply_word(&w), t.apply_word(&s.apply_word(&w)));
    }

    #[test]
    fn length_parity_matches_letter_count(w in word(40)) {
        let (x, y) = w.displacement();
        prop_assert_eq!(length(evaluate(&w)) % 2, ((x + y).rem_euclid(2)) as u64);
        prop_assert!(length(evaluate(&w)) <= w.len() as u64);
    }

    #[test]
    fn neighbours_differ_by_one(g in element(60), l in letter()) {
        prop_assert_eq!(length(g).abs_diff(length(g.step(l))), 1);
    }

    #[test]
    fn distance_is_left_invariant(f in element(4), g in element(4), h in element(4)) {
        let b = ball(10);
        let d = distance(g, h);
        prop_assert_eq!(distance(multiply(f, g), multiply(f, h)), d);
        if let Some(bd) = b.distance(&multiply(invert(g), h)) {
            prop_assert_eq!(bd as u64, d);
        }
    }

    #[test]
    fn geodesic_prefixes_are_geodesic(w in word(20)) {
        let b = ball(12);
        if b.distance(&evaluate(&w)) == Some(w.len() as u32) {
            for i in 0..=w.len() {
                let prefix: Word = w.letters()[..i].to_vec().into();
                prop_assert!(is_geodesic(&prefix));
            }
        }
    }

    #[test]
    fn parse_format_round_trip(w in word(60)) {
        let text = format_word(&w);
        prop_assert_eq!(parse_word(&text).unwrap(), w);
    }

    #[test]
    fn dead_end_predicates_agree(g in element(6)) {
        let b = ball(12);
        if let Some(d) = b.distance(&g) {
            if d <= 11 {
                let by_ball = Letter::ALL.iter().all(|&l| b.distance(&g.step(l)).is_some_and(|e| e < d));
                prop_assert_eq!(is_dead_end_element(g), by_ball);
                prop_assert_eq!(predict_dead_end(g), by_ball);
            }
        }
    }
}

#[test]
fn ball_is_symmetric_sphere_by_sphere() {
    let b = ball(12);
    for d in 0..=12 {
        for g in b.sphere(d) {
            for s in Symmetry::ALL {
                assert_eq!(b.distance(&s.apply_element(*g)), Some(d), "{g} under {s}");
            }
        }
    }
}

#[test]
fn every_element_of_the_ball_has_the_formula_length() {
    let b = ball(12);
    for (g, d) in b.sorted_entries() {
        assert_eq!(length(g), d as u64, "{g}");
    }
}

#[test]
fn swap_levels_stay_geodesic() {
    // Area drops by one per level, and a closed word is geodesic exactly
    // when its length is the minimal perimeter for its area.
    for (width, height) in [(2, 2), (2, 3), (3, 3), (3, 4)] {
        let start = CyclicWord::new(&rectangle_word(width, height));
        let mut level = std::collections::BTreeSet::from([start]);
        let top = (width * height) as i64;
        for step in 0..=(width * height / 2) as i64 {
            for c in &level {
                assert_eq!(c.area(), Some(top - step));
                let minimal = p((top - step) as u64).unwrap() == c.len() as u64;
                for w in c.linearizations() {
                    assert_eq!(is_geodesic(&w), minimal, "{w}");
                }
            }
            level = level.iter().flat_map(|c| swap_level(c, 1)).collect();
        }
    }
}
