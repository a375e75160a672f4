//! Symmetric generating sets, word-metric balls and geodesic languages.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use thiserror::Error;

use crate::groups::{evaluate, GroupEngine, GroupError};
use crate::words::{invert_word, Alphabet, Language, Letter, Word, WordError};

/// Default limit on elements stored by a ball or words stored by a language.
pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeodesicError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("generating set is empty")]
    Empty,
    #[error("letter `{0}` represents the identity")]
    IdentityLetter(String),
    #[error("letter `{0}` is not the inverse of its partner")]
    InverseMismatch(String),
    #[error("letters `{0}` and `{1}` represent the same element")]
    DuplicateElement(String, String),
    #[error("letters generate {reached} of {order} elements")]
    NotGenerating { reached: usize, order: usize },
    #[error("exceeded the resource cap of {0}")]
    ResourceCap(usize),
    #[error("exact enumeration needs a finite group")]
    InfiniteGroup,
}

/// A validated symmetric generating set over an engine.
#[derive(Debug, Clone)]
pub struct GenSet<'e, E: GroupEngine> {
    engine: &'e E,
    alphabet: Alphabet,
    images: Vec<Word>,
    elems: Vec<E::Elem>,
}

/// Parses `(name, word over builtin letters)` pairs and validates them; see
/// [`GenSet::new`].
pub fn validate_genset<'e, E: GroupEngine>(
    engine: &'e E,
    pairs: &[(&str, &str)],
) -> Result<GenSet<'e, E>, GeodesicError> {
    let parsed = pairs
        .iter()
        .map(|(n, w)| Ok((n.to_string(), engine.builtin().word(w)?)))
        .collect::<Result<Vec<_>, WordError>>()?;
    GenSet::new(engine, parsed)
}

impl<'e, E: GroupEngine> GenSet<'e, E> {
    /// Closes the declared letters under inversion. A letter whose image is
    /// an involution is its own inverse; two declared letters with mutually
    /// inverse images are paired; any other letter gets `name^-1` added right
    /// after it with the inverted image. Finite engines additionally require
    /// the letters to generate.
    pub fn new(engine: &'e E, letters: Vec<(String, Word)>) -> Result<Self, GeodesicError> {
        if letters.is_empty() {
            return Err(GeodesicError::Empty);
        }
        let id = engine.identity();
        let declared: Vec<E::Elem> = letters.iter().map(|(_, w)| evaluate(engine, w)).collect();
        for (i, (name, _)) in letters.iter().enumerate() {
            if declared[i] == id {
                return Err(GeodesicError::IdentityLetter(name.clone()));
            }
            if let Some(j) = declared[..i].iter().position(|g| *g == declared[i]) {
                return Err(GeodesicError::DuplicateElement(letters[j].0.clone(), name.clone()));
            }
            if let Some(base) = name.strip_suffix("^-1") {
                if let Some(j) = letters.iter().position(|(n, _)| n == base) {
                    if engine.inverse(&declared[j]) != declared[i] {
                        return Err(GeodesicError::InverseMismatch(name.clone()));
                    }
                }
            }
        }
        // partner[i] = index of the declared letter inverse to letter i
        let partner: Vec<Option<usize>> =
            declared.iter().map(|g| declared.iter().position(|h| *h == engine.inverse(g))).collect();
        let mut names: Vec<String> = Vec::new();
        let mut images: Vec<Word> = Vec::new();
        let mut elems: Vec<E::Elem> = Vec::new();
        let mut slot: Vec<Option<usize>> = vec![None; letters.len()];
        let mut inverse_of: Vec<usize> = Vec::new();
        for (i, (name, image)) in letters.into_iter().enumerate() {
            let here = names.len();
            slot[i] = Some(here);
            names.push(name.clone());
            images.push(image.clone());
            elems.push(declared[i].clone());
            match partner[i] {
                Some(j) if j == i => inverse_of.push(here),
                Some(j) => match slot[j] {
                    Some(other) => {
                        inverse_of.push(other);
                        inverse_of[other] = here;
                    }
                    None => inverse_of.push(usize::MAX),
                },
                None => {
                    let inv = engine.inverse(&declared[i]);
                    let inv_name = format!("{name}^-1");
                    if let Some(j) = names.iter().position(|n| *n == inv_name) {
                        return Err(GeodesicError::DuplicateElement(names[j].clone(), inv_name));
                    }
                    inverse_of.push(here + 1);
                    inverse_of.push(here);
                    names.push(inv_name);
                    images.push(invert_word(&image, engine.builtin()));
                    elems.push(inv);
                }
            }
        }
        let alphabet = Alphabet::from_parts(names, inverse_of)?;
        let gs = Self { engine, alphabet, images, elems };
        if let Some(order) = engine.order() {
            let reached = gs.closure_size(order);
            if reached != order {
                return Err(GeodesicError::NotGenerating { reached, order });
            }
        }
        Ok(gs)
    }

    fn closure_size(&self, limit: usize) -> usize {
        let mut seen = HashSet::from([self.engine.identity()]);
        let mut stack = vec![self.engine.identity()];
        while let Some(g) = stack.pop() {
            for s in &self.elems {
                let h = self.engine.multiply(&g, s);
                if seen.len() <= limit && seen.insert(h.clone()) {
                    stack.push(h);
                }
            }
        }
        seen.len()
    }

    pub fn engine(&self) -> &'e E {
        self.engine
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn image(&self, l: Letter) -> &Word {
        &self.images[l.index()]
    }

    pub fn element(&self, l: Letter) -> &E::Elem {
        &self.elems[l.index()]
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.alphabet.resolve(name)
    }

    pub fn word(&self, text: &str) -> Result<Word, WordError> {
        self.alphabet.word(text)
    }

    /// The element a word over this generating set represents.
    pub fn evaluate(&self, w: &Word) -> E::Elem {
        w.letters().iter().fold(self.engine.identity(), |g, l| self.engine.multiply(&g, &self.elems[l.index()]))
    }

    pub fn display(&self, w: &Word) -> String {
        w.display(&self.alphabet).to_string()
    }
}

/// Distances of all elements within radius `R` of the identity.
#[derive(Debug, Clone)]
pub struct DistanceMap<E: GroupEngine> {
    pub radius: usize,
    dist: HashMap<E::Elem, usize>,
    spheres: Vec<Vec<E::Elem>>,
}

impl<E: GroupEngine> DistanceMap<E> {
    pub fn distance(&self, g: &E::Elem) -> Option<usize> {
        self.dist.get(g).copied()
    }

    /// Elements at distance exactly `r`, sorted by canonical key.
    pub fn sphere(&self, r: usize) -> &[E::Elem] {
        &self.spheres[r]
    }

    pub fn sphere_sizes(&self) -> Vec<usize> {
        self.spheres.iter().map(Vec::len).collect()
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    /// `distance<TAB>key` lines, by distance then key.
    pub fn to_text(&self, engine: &E) -> String {
        let mut out = String::new();
        for (r, sphere) in self.spheres.iter().enumerate() {
            for g in sphere {
                let _ = writeln!(out, "{r}\t{}", engine.key(g));
            }
        }
        out
    }
}

pub fn ball<E: GroupEngine>(genset: &GenSet<'_, E>, radius: usize) -> Result<DistanceMap<E>, GeodesicError> {
    ball_with_cap(genset, radius, DEFAULT_CAP)
}

/// Breadth-first ball. Frontiers are expanded in parallel; each sphere is
/// sorted by canonical key so the result is independent of scheduling.
pub fn ball_with_cap<E: GroupEngine>(
    genset: &GenSet<'_, E>,
    radius: usize,
    cap: usize,
) -> Result<DistanceMap<E>, GeodesicError> {
    let engine = genset.engine;
    let id = engine.identity();
    let mut dist = HashMap::from([(id.clone(), 0)]);
    let mut spheres = vec![vec![id]];
    for r in 0..radius {
        let frontier = &spheres[r];
        let found: Vec<Vec<E::Elem>> = frontier
            .par_iter()
            .map(|g| {
                genset.elems.iter().map(|s| engine.multiply(g, s)).filter(|h| !dist.contains_key(h)).collect()
            })
            .collect();
        let mut next = Vec::new();
        for h in found.into_iter().flatten() {
            if !dist.contains_key(&h) {
                dist.insert(h.clone(), r + 1);
                next.push(h);
                if dist.len() > cap {
                    return Err(GeodesicError::ResourceCap(cap));
                }
            }
        }
        sort_by_key(engine, &mut next);
        spheres.push(next);
    }
    Ok(DistanceMap { radius, dist, spheres })
}

fn sort_by_key<E: GroupEngine>(engine: &E, elems: &mut Vec<E::Elem>) {
    let mut keyed: Vec<(String, E::Elem)> = elems.drain(..).map(|g| (engine.key(&g), g)).collect();
    keyed.par_sort_unstable_by(|a, b| a.0.cmp(&b.0));
    elems.extend(keyed.into_iter().map(|(_, g)| g));
}

/// Whether `w` labels a shortest path: its element lies outside the ball of
/// radius `|w| - 1`.
pub fn is_geodesic<E: GroupEngine>(genset: &GenSet<'_, E>, w: &Word) -> Result<bool, GeodesicError> {
    if w.is_empty() {
        return Ok(true);
    }
    let g = genset.evaluate(w);
    let b = ball(genset, w.len() - 1)?;
    Ok(b.distance(&g).is_none())
}

/// How far to enumerate a geodesic language.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    MaxLen(usize),
    /// Until the first empty stratum; finite groups only.
    Exact,
}

/// `Geo(G, A)` truncated at a bound, or complete.
#[derive(Debug, Clone)]
pub struct GeodesicLanguage {
    pub language: Language,
    /// Largest distance attained, when the enumeration reached an empty
    /// stratum.
    pub diameter: Option<usize>,
}

impl GeodesicLanguage {
    pub fn contains(&self, w: &Word) -> bool {
        self.language.contains(w)
    }

    pub fn maxlen(&self) -> usize {
        self.language.maxlen()
    }

    pub fn complete(&self) -> bool {
        self.language.complete
    }
}

pub fn geodesic_language<E: GroupEngine>(genset: &GenSet<'_, E>, bound: Bound) -> Result<GeodesicLanguage, GeodesicError> {
    geodesic_language_with_cap(genset, bound, DEFAULT_CAP)
}

/// Stratified enumeration: a geodesic of length `ℓ+1` is a geodesic of
/// length `ℓ` followed by a letter that moves to a fresh element.
pub fn geodesic_language_with_cap<E: GroupEngine>(
    genset: &GenSet<'_, E>,
    bound: Bound,
    cap: usize,
) -> Result<GeodesicLanguage, GeodesicError> {
    let engine = genset.engine;
    let maxlen = match bound {
        Bound::MaxLen(l) => l,
        Bound::Exact => {
            if engine.order().is_none() {
                return Err(GeodesicError::InfiniteGroup);
            }
            usize::MAX
        }
    };
    let letters: Vec<Letter> = genset.alphabet.letters().collect();
    let mut dist: HashMap<E::Elem, usize> = HashMap::from([(engine.identity(), 0)]);
    let mut layer: Vec<(Word, E::Elem)> = vec![(Word::empty(), engine.identity())];
    let mut strata = vec![BTreeSet::from([Word::empty()])];
    let mut stored = 1usize;
    let mut diameter = None;
    while strata.len() <= maxlen {
        let found: Vec<Vec<(Word, E::Elem)>> = layer
            .par_iter()
            .map(|(w, g)| {
                letters
                    .iter()
                    .filter_map(|&a| {
                        let h = engine.multiply(g, &genset.elems[a.index()]);
                        (!dist.contains_key(&h)).then(|| (w.pushed(a), h))
                    })
                    .collect()
            })
            .collect();
        let next: Vec<(Word, E::Elem)> = found.into_iter().flatten().collect();
        let ell = strata.len();
        for (_, h) in &next {
            dist.entry(h.clone()).or_insert(ell);
        }
        stored += next.len();
        if dist.len() > cap || stored > cap {
            return Err(GeodesicError::ResourceCap(cap));
        }
        if next.is_empty() && diameter.is_none() {
            diameter = Some(ell - 1);
            if bound == Bound::Exact {
                break;
            }
        }
        strata.push(next.iter().map(|(w, _)| w.clone()).collect());
        layer = next;
    }
    let complete = diameter.is_some();
    Ok(GeodesicLanguage { language: Language::new(genset.alphabet.clone(), strata, complete), diameter })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{BS12Engine, FiniteGroupTable, Phi, ZnC2Engine};

    #[test]
    fn quaternion_genset_and_ball() {
        let q = FiniteGroupTable::quaternion();
        let gs = validate_genset(&q, &[("i", "i"), ("j", "j")]).unwrap();
        let names: Vec<&str> = gs.alphabet().letters().map(|l| gs.alphabet().name(l)).collect();
        assert_eq!(names, ["i", "i^-1", "j", "j^-1"]);
        assert_eq!(ball(&gs, 2).unwrap().sphere_sizes(), vec![1, 4, 3]);
        let geo = geodesic_language(&gs, Bound::Exact).unwrap();
        assert_eq!(geo.language.stratum_sizes(), vec![1, 4, 12]);
        assert_eq!(geo.diameter, Some(2));
        assert!(geo.complete());
    }

    #[test]
    fn genset_errors() {
        let q = FiniteGroupTable::quaternion();
        assert_eq!(
            validate_genset(&q, &[("i", "i"), ("z", "i i^-1")]).unwrap_err(),
            GeodesicError::IdentityLetter("z".into())
        );
        assert!(matches!(validate_genset(&q, &[("i", "i")]), Err(GeodesicError::NotGenerating { reached: 4, order: 8 })));
        assert!(matches!(
            validate_genset(&q, &[("i", "i"), ("j", "j"), ("m", "i j j^-1")]),
            Err(GeodesicError::DuplicateElement(_, _))
        ));
        assert!(matches!(
            validate_genset(&q, &[("i", "i"), ("i^-1", "j")]),
            Err(GeodesicError::InverseMismatch(_))
        ));
        assert!(validate_genset(&q, &[("i", "i"), ("i^-1", "-i"), ("j", "j")]).is_ok());
        assert_eq!(validate_genset(&q, &[]).unwrap_err(), GeodesicError::Empty);
        let gs = validate_genset(&q, &[("u", "i"), ("w", "j"), ("v", "-i")]).unwrap();
        let names: Vec<&str> = gs.alphabet().letters().map(|l| gs.alphabet().name(l)).collect();
        assert_eq!(names, ["u", "w", "w^-1", "v"]);
        assert_eq!(gs.alphabet().inverse(gs.letter("u").unwrap()), gs.letter("v").unwrap());
    }

    #[test]
    fn infinite_balls() {
        let bs = BS12Engine::<i64>::new();
        let gs = validate_genset(&bs, &[("a", "a"), ("t", "t")]).unwrap();
        assert_eq!(ball(&gs, 1).unwrap().sphere_sizes(), vec![1, 4]);
        assert!(is_geodesic(&gs, &gs.word("t^-1 a t").unwrap()).unwrap());
        assert!(!is_geodesic(&gs, &gs.word("a a^-1").unwrap()).unwrap());
        assert_eq!(geodesic_language(&gs, Bound::Exact).unwrap_err(), GeodesicError::InfiniteGroup);
        let z = ZnC2Engine::<i64>::new(1, Phi::Invert(0)).unwrap();
        let gs = validate_genset(&z, &[("x", "x1"), ("y", "y")]).unwrap();
        assert_eq!(ball(&gs, 2).unwrap().sphere_sizes(), vec![1, 3, 4]);
        assert!(matches!(ball_with_cap(&gs, 10, 20), Err(GeodesicError::ResourceCap(20))));
    }
}
