//! Brute-force oracles shared by the integration suites. They use only the
//! engine's `identity` and `multiply` plus the letter elements of a
//! generating set, never the library's balls or languages.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use geolang::words::{Alphabet, Language, Letter, Word};
use geolang::{GenSet, GroupEngine};

/// Every word of length at most `maxlen`, by length.
pub fn all_words(al: &Alphabet, maxlen: usize) -> Vec<Word> {
    let letters: Vec<Letter> = al.letters().collect();
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..maxlen {
        layer = layer.iter().flat_map(|w| letters.iter().map(move |&l| w.pushed(l))).collect();
        out.extend(layer.iter().cloned());
    }
    out
}

pub fn eval<E: GroupEngine>(gs: &GenSet<'_, E>, w: &Word) -> E::Elem {
    let e = gs.engine();
    w.letters().iter().fold(e.identity(), |g, &l| e.multiply(&g, gs.element(l)))
}

/// Shortest word length reaching each element, over all words up to `maxlen`.
pub fn naive_distances<E: GroupEngine>(gs: &GenSet<'_, E>, maxlen: usize) -> HashMap<E::Elem, usize> {
    let mut d = HashMap::new();
    for w in all_words(gs.alphabet(), maxlen) {
        d.entry(eval(gs, &w)).or_insert(w.len());
    }
    d
}

/// `w` is geodesic iff no shorter word reaches its element.
pub fn naive_is_geodesic<E: GroupEngine>(gs: &GenSet<'_, E>, w: &Word) -> bool {
    if w.is_empty() {
        return true;
    }
    let g = eval(gs, w);
    !all_words(gs.alphabet(), w.len() - 1).iter().any(|u| eval(gs, u) == g)
}

/// Elements reached by words of length at most `maxlen`.
pub fn reached<E: GroupEngine>(gs: &GenSet<'_, E>, maxlen: usize) -> HashSet<E::Elem> {
    all_words(gs.alphabet(), maxlen).iter().map(|w| eval(gs, w)).collect()
}

/// Number of geodesic words of each length up to `radius`, by counting
/// shortest paths layer by layer in a plain breadth-first search.
pub fn geodesic_counts<E: GroupEngine>(gs: &GenSet<'_, E>, radius: usize) -> Vec<usize> {
    let e = gs.engine();
    let letters: Vec<Letter> = gs.alphabet().letters().collect();
    let mut seen: HashSet<E::Elem> = HashSet::from([e.identity()]);
    let mut layer: HashMap<E::Elem, usize> = HashMap::from([(e.identity(), 1)]);
    let mut counts = vec![1];
    for _ in 0..radius {
        let mut next: HashMap<E::Elem, usize> = HashMap::new();
        for (g, c) in &layer {
            for &l in &letters {
                let h = e.multiply(g, gs.element(l));
                if !seen.contains(&h) {
                    *next.entry(h).or_insert(0) += c;
                }
            }
        }
        seen.extend(next.keys().cloned());
        counts.push(next.values().sum());
        layer = next;
    }
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    counts
}

pub fn formal_inverse(al: &Alphabet, w: &Word) -> Word {
    Word(w.letters().iter().rev().map(|&l| al.inverse(l)).collect())
}

/// Every factor and the formal inverse of every member is a member.
pub fn factor_and_inverse_closed(l: &Language) -> bool {
    l.words().all(|w| {
        let n = w.len();
        let factors_ok = (0..=n).all(|i| (i..=n).all(|j| l.contains(&Word(w.letters()[i..j].to_vec()))));
        factors_ok && l.contains(&formal_inverse(&l.alphabet, w))
    })
}
