//! Randomized properties of words, forbidden sets and geodesic languages.

mod common;

use geolang::classify::{pe_check, PEVerdict};
use geolang::geodesics::{ball, geodesic_language, is_geodesic, Bound};
use geolang::groups::{FiniteGroupTable, Phi, ZnC2Engine};
use geolang::witnesses::{genset_from_elements, random_genset, CONFIGS};
use geolang::words::{
    avoid_language, deletion_neighbors, invert_word, is_factor, is_subsequence, minimal_forbidden_subsequences,
    Alphabet, ForbiddenSet, Language, Letter, Word,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;

/// `x`, `X` (inverse pair) and the involution `y`.
fn alphabet() -> Alphabet {
    let mut al = Alphabet::new();
    al.push_pair("x", "X").unwrap();
    al.push_involution("y").unwrap();
    al
}

fn word(max: usize) -> impl Strategy<Value = Word> {
    let letters: Vec<Letter> = alphabet().letters().collect();
    prop::collection::vec(prop::sample::select(letters), 0..=max).prop_map(Word)
}

proptest! {
    #[test]
    fn subsequence_is_a_partial_order(u in word(5), v in word(5), w in word(5)) {
        prop_assert!(is_subsequence(&u, &u));
        if is_subsequence(&u, &v) && is_subsequence(&v, &u) {
            prop_assert_eq!(&u, &v);
        }
        if is_subsequence(&u, &v) && is_subsequence(&v, &w) {
            prop_assert!(is_subsequence(&u, &w));
        }
        prop_assert!(is_subsequence(&u, &u.concat(&v)) && is_subsequence(&v, &u.concat(&v)));
        if is_factor(&u, &v) {
            prop_assert!(is_subsequence(&u, &v));
        }
    }

    #[test]
    fn deletion_neighbors_are_maximal_subsequences(w in word(7)) {
        let n = deletion_neighbors(&w);
        prop_assert!(n.len() <= w.len());
        for u in &n {
            prop_assert_eq!(u.len() + 1, w.len());
            prop_assert!(is_subsequence(u, &w));
        }
        // every proper subsequence sits below some deletion neighbour
        for u in all_words(&alphabet(), w.len().saturating_sub(1)) {
            if u.len() < w.len() && is_subsequence(&u, &w) {
                prop_assert!(n.iter().any(|v| is_subsequence(&u, v)));
            }
        }
    }

    #[test]
    fn inversion_is_an_involution(w in word(8)) {
        let al = alphabet();
        let inv = invert_word(&w, &al);
        prop_assert_eq!(&inv, &formal_inverse(&al, &w));
        prop_assert_eq!(invert_word(&inv, &al), w.clone());
        let text = w.display(&al).to_string();
        prop_assert_eq!(al.word(&text).unwrap(), w);
    }

    #[test]
    fn avoid_matches_the_naive_filter(f in prop::collection::vec(word(3), 1..4)) {
        let al = alphabet();
        let forbidden = ForbiddenSet::new(f.iter().filter(|w| !w.is_empty()).cloned());
        let avoid = avoid_language(&forbidden, &al, 4);
        let naive = all_words(&al, 4).into_iter().filter(|w| !f.iter().any(|u| !u.is_empty() && is_subsequence(u, w)));
        let naive = Language::from_words(al.clone(), naive, 4, false);
        prop_assert!(avoid.same_members(&naive));
        prop_assert!(factor_and_inverse_closed(&avoid) || !forbidden_inverse_closed(&forbidden, &al));

        // the minimal forbidden set of an avoiding language is an antichain
        // below the original one (up to the truncation length), and carves
        // out the same language
        let truncated = Language::from_words(al.clone(), avoid.words().cloned(), 4, false);
        let min = minimal_forbidden_subsequences(&truncated).unwrap();
        prop_assert!(min.is_antichain());
        prop_assert!(min.iter().all(|m| forbidden.excludes(m)));
        prop_assert!(avoid_language(&min, &al, 4).same_members(&avoid));
    }

    #[test]
    fn random_znc2_sets_match_the_oracle(config in 0..CONFIGS.len(), seed in any::<u64>()) {
        let (rank, phi) = CONFIGS[config];
        let e = ZnC2Engine::<i64>::new(rank, phi).unwrap();
        let elems = random_genset(&e, &mut ChaCha8Rng::seed_from_u64(seed));
        let gs = genset_from_elements(&e, &elems).unwrap();
        let radius = if gs.alphabet().len() > 6 { 2 } else { 3 };

        let b = ball(&gs, radius).unwrap();
        let naive = naive_distances(&gs, radius);
        prop_assert_eq!(b.len(), naive.len());
        for (g, d) in &naive {
            prop_assert_eq!(b.distance(g), Some(*d));
        }
        let geo = geodesic_language(&gs, Bound::MaxLen(radius)).unwrap();
        prop_assert_eq!(geo.language.stratum_sizes(), geodesic_counts(&gs, radius));
        prop_assert!(factor_and_inverse_closed(&geo.language));
        for w in all_words(gs.alphabet(), 2) {
            prop_assert_eq!(is_geodesic(&gs, &w).unwrap(), naive_is_geodesic(&gs, &w));
        }
    }
}

fn forbidden_inverse_closed(f: &ForbiddenSet, al: &Alphabet) -> bool {
    f.iter().all(|w| f.contains(&formal_inverse(al, w)))
}

#[test]
fn cyclic_groups_are_pe_with_standard_generators() {
    for n in 2..=9 {
        let c = FiniteGroupTable::cyclic(n);
        let gs = geolang::geodesics::validate_genset(&c, &[("g", "g")]).unwrap();
        let geo = geodesic_language(&gs, Bound::Exact).unwrap();
        let PEVerdict::PE { forbidden } = pe_check(&geo) else { panic!("C{n} should be PE") };
        // geodesics are powers of one letter up to n/2
        check_cyclic_strata(&geo.language, &gs, n);
        assert!(forbidden.is_antichain());
    }
}

fn check_cyclic_strata<E: geolang::GroupEngine>(l: &Language, gs: &geolang::GenSet<'_, E>, n: usize) {
    assert_eq!(l.maxlen(), n / 2);
    assert_eq!(l.stratum_sizes(), geodesic_counts(gs, n / 2));
}

#[test]
fn swap_rank_two_ball_matches_oracle() {
    let e = ZnC2Engine::<i64>::new(2, Phi::Swap(0, 1)).unwrap();
    let gs = geolang::geodesics::validate_genset(&e, &[("a", "x1"), ("b", "x2"), ("t", "y")]).unwrap();
    let b = ball(&gs, 4).unwrap();
    let naive = naive_distances(&gs, 4);
    assert_eq!(b.len(), naive.len());
    assert!(naive.iter().all(|(g, d)| b.distance(g) == Some(*d)));
}
