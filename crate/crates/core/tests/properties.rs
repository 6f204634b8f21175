mod common;

use std::sync::OnceLock;

use biq_core::automorphisms::{aut_contained_in_associated, biquandle_aut, quandle_aut};
use biq_core::biquandle::{associated_quandle, biquandle_of_quandle, check_biquandle, check_ybe};
use biq_core::constructions::conj_quandle;
use biq_core::enumeration::enumerate_quandles;
use biq_core::structures::{biquandle_from_structure, structure_of_biquandle, BiquandleStructure};
use biq_core::verbal::FreeWord;
use biq_core::{is_connected, FiniteBiquandle, FiniteQuandle, Permutation};
use common::*;
use proptest::prelude::*;

fn quandles() -> &'static Vec<FiniteQuandle> {
    static Q: OnceLock<Vec<FiniteQuandle>> = OnceLock::new();
    Q.get_or_init(|| {
        let mut v: Vec<FiniteQuandle> = (1..=4).flat_map(|n| enumerate_quandles(n).unwrap()).collect();
        v.extend(constructed_quandles(8).into_iter().map(|(_, q)| q));
        v
    })
}

fn biquandles() -> &'static Vec<FiniteBiquandle> {
    static B: OnceLock<Vec<FiniteBiquandle>> = OnceLock::new();
    B.get_or_init(|| biquandle_corpus(8).into_iter().map(|(_, b)| b).collect())
}

fn word() -> impl Strategy<Value = FreeWord> {
    prop::collection::vec((0u8..3, prop_oneof![-3i64..=-1, 1i64..=3]), 0..8).prop_map(|s| {
        s.iter().fold(FreeWord::identity(), |acc, &(l, e)| acc.multiply(&FreeWord::from_syllables(&[(l, e)]).unwrap()))
    })
}

proptest! {
    #[test]
    fn word_times_inverse_is_identity(w in word()) {
        prop_assert!(w.multiply(&w.invert()).is_identity());
        prop_assert!(w.invert().multiply(&w).is_identity());
    }

    #[test]
    fn word_multiplication_associates(a in word(), b in word(), c in word()) {
        prop_assert_eq!(a.multiply(&b).multiply(&c), a.multiply(&b.multiply(&c)));
    }

    #[test]
    fn word_display_parses_back(w in word()) {
        prop_assume!(!w.is_identity());
        prop_assert_eq!(FreeWord::parse(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn translation_of_product_is_conjugate(i in any::<prop::sample::Index>(), x in 0usize..64, y in 0usize..64) {
        let q = i.get(quandles());
        let (x, y) = (x % q.n(), y % q.n());
        let sy = q.s(y);
        prop_assert_eq!(q.s(q.op(x, y)), sy.compose(&q.s(x)).compose(&sy.inverse()));
    }

    #[test]
    fn associated_of_trivial_structure_is_identity(i in any::<prop::sample::Index>()) {
        let q = i.get(quandles());
        prop_assert_eq!(&associated_quandle(&biquandle_of_quandle(q)), q);
    }

    #[test]
    fn biquandles_satisfy_ybe(i in any::<prop::sample::Index>()) {
        let b = i.get(biquandles());
        prop_assert!(check_ybe(b));
        prop_assert!(check_biquandle(&b.under_rows(), &b.over_rows()).unwrap().passed);
    }

    #[test]
    fn structure_round_trip(i in any::<prop::sample::Index>()) {
        let b = i.get(biquandles());
        let s = structure_of_biquandle(b);
        prop_assert_eq!(&biquandle_from_structure(&s), b);
        let json = serde_json::to_string(&s).unwrap();
        let back: BiquandleStructure = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, s);
        let json = serde_json::to_string(b).unwrap();
        prop_assert_eq!(&serde_json::from_str::<FiniteBiquandle>(&json).unwrap(), b);
    }

    #[test]
    fn conj_depends_on_exponent_residue(gi in 0usize..64, k in -20i64..20) {
        let groups = groups_up_to(8);
        let g = &groups[gi % groups.len()].1;
        let e = g.exponent() as i64;
        prop_assert_eq!(conj_quandle(g, k).unwrap(), conj_quandle(g, k.rem_euclid(e)).unwrap());
    }

    #[test]
    fn permutation_inverse_and_order(images in Just((0..7).collect::<Vec<usize>>()).prop_shuffle()) {
        let p = Permutation::new(images).unwrap();
        prop_assert!(p.compose(&p.inverse()).is_identity());
        prop_assert!(p.pow(p.order() as i64).is_identity());
        let back = Permutation::from_cycles(7, &p.cycles().iter().map(Vec::as_slice).collect::<Vec<_>>()).unwrap();
        prop_assert_eq!(back, p);
    }
}

/// `Aut(B) ⊆ Aut(𝒬(B))`. Biquandles of order 9..12 are included only when
/// `𝒬(B)` is connected, which keeps the automorphism groups small.
#[test]
fn aut_contained_in_associated_on_corpus() {
    let mut checked = 0;
    for (name, b) in biquandle_corpus(12) {
        if b.n() > 8 && !is_connected(&associated_quandle(&b)) {
            continue;
        }
        assert!(aut_contained_in_associated(&b), "{name}");
        checked += 1;
    }
    assert!(checked > 1000);
}

#[test]
fn automorphism_groups_are_groups() {
    for q in quandles().iter().filter(|q| q.n() <= 6) {
        let g = quandle_aut(q);
        assert!(g.is_group());
        assert_eq!(as_sets(&g), naive_quandle_aut(q));
    }
    for b in biquandles().iter().filter(|b| b.n() <= 5) {
        let g = biquandle_aut(b);
        assert!(g.is_group());
        assert_eq!(as_sets(&g), naive_biquandle_aut(b));
    }
}
