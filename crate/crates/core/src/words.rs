//! Free-monoid words over inverse-closed alphabets.
//!
//! Letters are indices into an [`Alphabet`]; the declared letter order is the
//! order used for shortlex comparison everywhere in the crate. This module
//! also hosts the subsequence (piecewise subword) and factor orders together
//! with the two "minimal forbidden word" computations that turn a closed
//! language into the finite set of words it excludes.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Errors raised while parsing words or computing forbidden sets.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("duplicate letter name `{0}`")]
    DuplicateName(String),
    #[error("language is not closed under deletion: `{word}` has non-member subsequence `{sub}`")]
    NotDownwardClosed { word: String, sub: String },
    #[error("language is not factor closed: `{word}` has non-member factor `{sub}`")]
    NotFactorClosed { word: String, sub: String },
    #[error("malformed language file: {0}")]
    Malformed(String),
}

/// A letter of an [`Alphabet`], identified by its declaration index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u16);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// An ordered, inverse-closed set of named letters.
///
/// The inverse pairing is an involution; a letter may be its own inverse.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Alphabet {
    names: Vec<String>,
    inverses: Vec<u16>,
}

impl Alphabet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends a self-inverse letter.
    pub fn push_involution(&mut self, name: &str) -> Result<Letter, WordError> {
        self.check_fresh(name)?;
        let l = self.names.len() as u16;
        self.names.push(name.to_string());
        self.inverses.push(l);
        Ok(Letter(l))
    }

    /// Appends a letter and its formal inverse, in that order.
    pub fn push_pair(&mut self, name: &str, inverse_name: &str) -> Result<(Letter, Letter), WordError> {
        if name == inverse_name {
            let l = self.push_involution(name)?;
            return Ok((l, l));
        }
        self.check_fresh(name)?;
        self.check_fresh(inverse_name)?;
        let l = self.names.len() as u16;
        self.names.push(name.to_string());
        self.names.push(inverse_name.to_string());
        self.inverses.push(l + 1);
        self.inverses.push(l);
        Ok((Letter(l), Letter(l + 1)))
    }

    /// Builds an alphabet from names and an explicit inverse table.
    pub fn from_parts(names: Vec<String>, inverses: Vec<usize>) -> Result<Self, WordError> {
        assert_eq!(names.len(), inverses.len());
        let mut seen = BTreeSet::new();
        for n in &names {
            if !seen.insert(n.as_str()) {
                return Err(WordError::DuplicateName(n.clone()));
            }
        }
        for (i, &j) in inverses.iter().enumerate() {
            assert!(j < names.len() && inverses[j] == i, "inverse pairing must be an involution");
        }
        Ok(Self { names, inverses: inverses.into_iter().map(|j| j as u16).collect() })
    }

    fn check_fresh(&self, name: &str) -> Result<(), WordError> {
        if name.is_empty() || name.chars().any(char::is_whitespace) || self.names.iter().any(|n| n == name) {
            return Err(WordError::DuplicateName(name.to_string()));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.names.len() as u16).map(Letter)
    }

    pub fn name(&self, l: Letter) -> &str {
        &self.names[l.index()]
    }

    pub fn inverse(&self, l: Letter) -> Letter {
        Letter(self.inverses[l.index()])
    }

    pub fn lookup(&self, name: &str) -> Option<Letter> {
        self.names.iter().position(|n| n == name).map(|i| Letter(i as u16))
    }

    /// Resolves a token: an exact name, or a name suffixed `^-1`.
    pub fn resolve(&self, token: &str) -> Option<Letter> {
        if let Some(l) = self.lookup(token) {
            return Some(l);
        }
        token.strip_suffix("^-1").and_then(|base| self.lookup(base)).map(|l| self.inverse(l))
    }

    pub fn word(&self, text: &str) -> Result<Word, WordError> {
        parse_word(text, self)
    }
}

/// A finite word; ordered shortlex by declared letter order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn pushed(&self, l: Letter) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.extend_from_slice(&self.0);
        v.push(l);
        Word(v)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> WordDisplay<'a> {
        WordDisplay { word: self, alphabet }
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Space-separated letter names; the empty word renders as `1`.
pub struct WordDisplay<'a> {
    word: &'a Word,
    alphabet: &'a Alphabet,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.word.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.alphabet.name(*l))?;
        }
        Ok(())
    }
}

/// Parses whitespace-separated letter names. A token `x^-1` resolves to the
/// inverse of `x` unless `x^-1` is itself a declared name. A lone `1` (when
/// not a declared letter) denotes the empty word.
pub fn parse_word(text: &str, alphabet: &Alphabet) -> Result<Word, WordError> {
    let trimmed = text.trim();
    if trimmed == "1" && alphabet.lookup("1").is_none() {
        return Ok(Word::empty());
    }
    trimmed
        .split_whitespace()
        .map(|tok| alphabet.resolve(tok).ok_or_else(|| WordError::UnknownLetter(tok.to_string())))
        .collect::<Result<Vec<_>, _>>()
        .map(Word)
}

/// The formal inverse: reversed, each letter replaced by its inverse.
pub fn invert_word(w: &Word, alphabet: &Alphabet) -> Word {
    Word(w.0.iter().rev().map(|&l| alphabet.inverse(l)).collect())
}

/// Greedy left-to-right subsequence test.
pub fn is_subsequence(u: &Word, w: &Word) -> bool {
    let mut it = w.0.iter();
    u.0.iter().all(|l| it.any(|m| m == l))
}

/// True iff `u` is a contiguous subword of `w`.
pub fn is_factor(u: &Word, w: &Word) -> bool {
    u.is_empty() || w.0.windows(u.len()).any(|win| win == u.0.as_slice())
}

/// All distinct words obtained by deleting exactly one letter.
pub fn deletion_neighbors(w: &Word) -> BTreeSet<Word> {
    (0..w.len())
        .map(|i| {
            let mut v = w.0.clone();
            v.remove(i);
            Word(v)
        })
        .collect()
}

/// A language truncated at `maxlen()`, stored by length strata.
///
/// `complete` means no member is longer than `maxlen()`, so membership is
/// decided for every word. Otherwise only words up to `maxlen()` are decided.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Language {
    pub alphabet: Alphabet,
    pub strata: Vec<BTreeSet<Word>>,
    pub complete: bool,
}

impl Language {
    pub fn new(alphabet: Alphabet, strata: Vec<BTreeSet<Word>>, complete: bool) -> Self {
        debug_assert!(strata.iter().enumerate().all(|(l, s)| s.iter().all(|w| w.len() == l)));
        Self { alphabet, strata, complete }
    }

    /// Builds a language from arbitrary words, stratified by length.
    pub fn from_words(alphabet: Alphabet, words: impl IntoIterator<Item = Word>, maxlen: usize, complete: bool) -> Self {
        let mut strata = vec![BTreeSet::new(); maxlen + 1];
        for w in words {
            assert!(w.len() <= maxlen, "word longer than maxlen");
            strata[w.len()].insert(w);
        }
        Self { alphabet, strata, complete }
    }

    pub fn maxlen(&self) -> usize {
        self.strata.len().saturating_sub(1)
    }

    /// Whether membership of `w` is known.
    pub fn decides(&self, w: &Word) -> bool {
        self.complete || w.len() <= self.maxlen()
    }

    /// Membership; words beyond `maxlen()` are reported as non-members.
    pub fn contains(&self, w: &Word) -> bool {
        self.strata.get(w.len()).is_some_and(|s| s.contains(w))
    }

    pub fn len(&self) -> usize {
        self.strata.iter().map(BTreeSet::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn stratum_sizes(&self) -> Vec<usize> {
        self.strata.iter().map(BTreeSet::len).collect()
    }

    /// All members in shortlex order.
    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.strata.iter().flat_map(|s| s.iter())
    }

    /// Same members, same bound (alphabets must match).
    pub fn same_members(&self, other: &Language) -> bool {
        self.alphabet == other.alphabet && self.strata == other.strata
    }

    /// One word per line in shortlex order; the empty word is `1`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for w in self.words() {
            out.push_str(&w.display(&self.alphabet).to_string());
            out.push('\n');
        }
        out
    }

    /// Reads the line format written by [`Language::to_text`].
    pub fn from_text(text: &str, alphabet: Alphabet, maxlen: usize, complete: bool) -> Result<Self, WordError> {
        let mut words = Vec::new();
        let mut prev: Option<Word> = None;
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let w = parse_word(line, &alphabet)?;
            if w.len() > maxlen {
                return Err(WordError::Malformed(format!("word `{}` exceeds bound {maxlen}", line.trim())));
            }
            if prev.as_ref().is_some_and(|p| p >= &w) {
                return Err(WordError::Malformed(format!("line `{}` out of shortlex order", line.trim())));
            }
            prev = Some(w.clone());
            words.push(w);
        }
        Ok(Self::from_words(alphabet, words, maxlen, complete))
    }
}

/// A finite set of excluded words, kept in shortlex order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ForbiddenSet {
    pub words: BTreeSet<Word>,
}

impl ForbiddenSet {
    pub fn new(words: impl IntoIterator<Item = Word>) -> Self {
        Self { words: words.into_iter().collect() }
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.words.iter()
    }

    /// No member is a subsequence of another member.
    pub fn is_antichain(&self) -> bool {
        self.words
            .iter()
            .all(|u| self.words.iter().all(|w| u == w || !is_subsequence(u, w)))
    }

    /// True iff some member is a subsequence of `w`.
    pub fn excludes(&self, w: &Word) -> bool {
        self.words.iter().any(|f| is_subsequence(f, w))
    }
}

/// Longest candidate length for forbidden-word searches: one past the bound
/// for complete languages, the bound itself otherwise.
fn candidate_cutoff(l: &Language) -> usize {
    if l.complete {
        l.maxlen() + 1
    } else {
        l.maxlen()
    }
}

/// Candidates `u·a` with `u` a member; every minimal excluded word has its
/// longest proper prefix in the language, so this enumeration is exhaustive.
fn extension_candidates(l: &Language) -> BTreeSet<Word> {
    let cutoff = candidate_cutoff(l);
    let mut out = BTreeSet::new();
    for u in l.words().filter(|u| u.len() < cutoff) {
        for a in l.alphabet.letters() {
            let w = u.pushed(a);
            if !l.contains(&w) {
                out.insert(w);
            }
        }
    }
    out
}

/// Minimal forbidden piecewise subwords of a deletion-closed language.
///
/// Returns every non-member whose single-deletion neighbours are all
/// members, up to `maxlen + 1` for complete languages (`maxlen` for
/// truncated ones). For complete languages the result reconstructs the
/// language through [`avoid_language`] and is an antichain.
pub fn minimal_forbidden_subsequences(l: &Language) -> Result<ForbiddenSet, WordError> {
    if let Some((w, u)) = first_deletion_violation(l) {
        return Err(WordError::NotDownwardClosed {
            word: w.display(&l.alphabet).to_string(),
            sub: u.display(&l.alphabet).to_string(),
        });
    }
    if !l.contains(&Word::empty()) {
        return Ok(ForbiddenSet::new([Word::empty()]));
    }
    let words = extension_candidates(l)
        .into_iter()
        .filter(|w| deletion_neighbors(w).iter().all(|u| l.contains(u)));
    Ok(ForbiddenSet::new(words))
}

/// The shortlex-first member with a non-member single deletion, and the
/// shortlex-first such deletion.
pub fn first_deletion_violation(l: &Language) -> Option<(Word, Word)> {
    l.words().find_map(|w| deletion_neighbors(w).into_iter().find(|u| !l.contains(u)).map(|u| (w.clone(), u)))
}

/// All words up to `maxlen` avoiding every member of `forbidden` as a
/// subsequence. The result is complete iff its top stratum is empty.
pub fn avoid_language(forbidden: &ForbiddenSet, alphabet: &Alphabet, maxlen: usize) -> Language {
    let mut strata: Vec<BTreeSet<Word>> = Vec::with_capacity(maxlen + 1);
    let mut current = BTreeSet::new();
    if !forbidden.contains(&Word::empty()) {
        current.insert(Word::empty());
    }
    strata.push(current);
    for _ in 0..maxlen {
        let prev = strata.last().expect("non-empty");
        let mut next = BTreeSet::new();
        for u in prev {
            for a in alphabet.letters() {
                let w = u.pushed(a);
                // u avoids F, so only members ending in `a` can newly embed
                let hit = forbidden.iter().any(|f| {
                    f.0.last() == Some(&a) && is_subsequence(&Word(f.0[..f.len() - 1].to_vec()), u)
                });
                if !hit {
                    next.insert(w);
                }
            }
        }
        strata.push(next);
    }
    let complete = strata.last().is_some_and(BTreeSet::is_empty);
    Language::new(alphabet.clone(), strata, complete)
}

/// Minimal forbidden factors (contiguous subwords) of a factor-closed
/// language; same cutoff rule as [`minimal_forbidden_subsequences`].
pub fn minimal_forbidden_factors(l: &Language) -> Result<BTreeSet<Word>, WordError> {
    for w in l.words() {
        if w.is_empty() {
            continue;
        }
        for u in [Word(w.0[1..].to_vec()), Word(w.0[..w.len() - 1].to_vec())] {
            if !l.contains(&u) {
                return Err(WordError::NotFactorClosed {
                    word: w.display(&l.alphabet).to_string(),
                    sub: u.display(&l.alphabet).to_string(),
                });
            }
        }
    }
    if !l.contains(&Word::empty()) {
        return Ok([Word::empty()].into_iter().collect());
    }
    Ok(extension_candidates(l)
        .into_iter()
        .filter(|w| l.contains(&Word(w.0[1..].to_vec())))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        let mut a = Alphabet::new();
        a.push_pair("a", "a^-1").unwrap();
        a.push_pair("b", "b^-1").unwrap();
        a
    }

    #[test]
    fn parse_examples() {
        let al = ab();
        assert_eq!(parse_word("", &al).unwrap(), Word::empty());
        let w = parse_word("a b a^-1", &al).unwrap();
        assert_eq!(w, Word(vec![Letter(0), Letter(2), Letter(1)]));
        assert_eq!(parse_word("q b", &al), Err(WordError::UnknownLetter("q".into())));
        // `b^-1` is itself a declared name, so the suffix applies to it
        assert_eq!(parse_word("b^-1^-1", &al).unwrap(), parse_word("b", &al).unwrap());
        assert_eq!(parse_word("b^-2", &al), Err(WordError::UnknownLetter("b^-2".into())));
    }

    #[test]
    fn inverse_suffix_on_involution() {
        let mut al = Alphabet::new();
        al.push_involution("t").unwrap();
        let t = parse_word("t^-1", &al).unwrap();
        assert_eq!(t, parse_word("t", &al).unwrap());
        assert_eq!(invert_word(&t, &al), t);
    }

    #[test]
    fn invert_examples() {
        let al = ab();
        let w = al.word("a b").unwrap();
        assert_eq!(invert_word(&w, &al), al.word("b^-1 a^-1").unwrap());
        assert_eq!(invert_word(&Word::empty(), &al), Word::empty());
    }

    #[test]
    fn subsequence_examples() {
        let al = ab();
        assert!(is_subsequence(&al.word("a a^-1").unwrap(), &al.word("a b a^-1").unwrap()));
        assert!(!is_subsequence(&al.word("a b").unwrap(), &al.word("b a").unwrap()));
        assert!(is_subsequence(&Word::empty(), &al.word("b a").unwrap()));
    }

    #[test]
    fn deletion_examples() {
        let al = ab();
        let n = deletion_neighbors(&al.word("a b").unwrap());
        assert_eq!(n, [al.word("b").unwrap(), al.word("a").unwrap()].into_iter().collect());
        assert_eq!(deletion_neighbors(&al.word("a a").unwrap()).len(), 1);
        assert!(deletion_neighbors(&Word::empty()).is_empty());
    }

    #[test]
    fn not_downward_closed() {
        let mut al = Alphabet::new();
        al.push_involution("x").unwrap();
        al.push_involution("y").unwrap();
        let l = Language::from_words(al.clone(), [Word::empty(), al.word("x").unwrap(), al.word("x y").unwrap()], 2, true);
        assert_eq!(
            minimal_forbidden_subsequences(&l),
            Err(WordError::NotDownwardClosed { word: "x y".into(), sub: "y".into() })
        );
    }

    #[test]
    fn avoid_free_cyclic() {
        let mut al = Alphabet::new();
        al.push_pair("x", "x^-1").unwrap();
        let f = ForbiddenSet::new([al.word("x x^-1").unwrap(), al.word("x^-1 x").unwrap()]);
        let l = avoid_language(&f, &al, 3);
        let expect: Vec<Word> = ["1", "x", "x^-1", "x x", "x^-1 x^-1", "x x x", "x^-1 x^-1 x^-1"]
            .iter()
            .map(|t| al.word(t).unwrap())
            .collect();
        assert_eq!(l.words().cloned().collect::<Vec<_>>(), expect);
        assert!(!l.complete);
        let all = avoid_language(&ForbiddenSet::default(), &al, 2);
        assert_eq!(all.stratum_sizes(), vec![1, 2, 4]);
    }

    #[test]
    fn length_one_language() {
        let mut al = Alphabet::new();
        al.push_pair("g", "g^2").unwrap();
        let l = Language::from_words(al.clone(), [Word::empty(), al.word("g").unwrap(), al.word("g^2").unwrap()], 1, true);
        let f = minimal_forbidden_subsequences(&l).unwrap();
        assert_eq!(f.len(), 4);
        assert!(f.iter().all(|w| w.len() == 2));
        let ff = minimal_forbidden_factors(&l).unwrap();
        assert_eq!(ff.len(), 4);
    }

    #[test]
    fn language_text_roundtrip() {
        let al = ab();
        let l = avoid_language(&ForbiddenSet::new([al.word("a").unwrap()]), &al, 2);
        let text = l.to_text();
        assert!(text.starts_with("1\n"));
        let back = Language::from_text(&text, al.clone(), 2, l.complete).unwrap();
        assert_eq!(back, l);
        assert!(Language::from_text("b\na\n", al, 2, false).is_err());
    }
}
