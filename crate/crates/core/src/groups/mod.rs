//! Group arithmetic engines.
//!
//! Every engine implements [`GroupEngine`]: exact multiplication on a
//! canonical element type plus a set of named builtin letters. Finite groups
//! are [`FiniteGroupTable`]s, possibly built by coset enumeration from a
//! [`Presentation`]; the infinite families used by the witness constructions
//! have dedicated normal-form engines.

mod any;
mod bs12;
mod coset;
mod extension;
pub mod file;
mod fingerprint;
mod product;
mod table;
mod zm;
mod znc2;

use std::collections::BTreeMap;
use std::fmt::Debug;
use std::hash::Hash;

use thiserror::Error;

use crate::words::{Alphabet, Letter, Word, WordError};

pub use any::{rho_normal_form, AnyElem, AnyEngine};
pub use bs12::{Affine, BS12Engine, Dyadic};
pub use coset::{coset_enumerate, CosetEnumerator, PartialCosetTable, Presentation};
pub use extension::{ExtElem, ExtensionEngine};
pub use fingerprint::{fingerprint, Fingerprint};
pub use product::{direct_product, ProductEngine};
pub use table::FiniteGroupTable;
pub use zm::{TOrder, ZmElem, ZmSemidirectEngine};
pub use znc2::{Phi, ZnC2Elem, ZnC2Engine};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("coset enumeration exceeded {0} cosets")]
    CapExceeded(usize),
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("invalid engine parameters: {0}")]
    InvalidParams(String),
    #[error("normal forms are not available for {0}")]
    Unsupported(&'static str),
    #[error("group file: {0}")]
    File(String),
}

/// Abstract group arithmetic.
///
/// `act(g, a)` is right multiplication by the builtin letter `a`; element
/// equality is group-element equality.
pub trait GroupEngine: Sync {
    type Elem: Clone + Eq + Ord + Hash + Debug + Send + Sync;

    fn identity(&self) -> Self::Elem;
    fn multiply(&self, lhs: &Self::Elem, rhs: &Self::Elem) -> Self::Elem;
    fn inverse(&self, g: &Self::Elem) -> Self::Elem;

    /// The engine's native generating letters.
    fn builtin(&self) -> &Alphabet;
    fn builtin_element(&self, letter: Letter) -> Self::Elem;

    /// Canonical string form; equal strings iff equal elements.
    fn key(&self, g: &Self::Elem) -> String;

    /// Group order, when finite and known.
    fn order(&self) -> Option<usize> {
        None
    }

    fn identity_key(&self) -> String {
        self.key(&self.identity())
    }

    fn act(&self, g: &Self::Elem, letter: Letter) -> Self::Elem {
        self.multiply(g, &self.builtin_element(letter))
    }
}

/// Engines with a distinguished normal-form word per element.
pub trait NormalForm: GroupEngine {
    fn normal_form(&self, g: &Self::Elem) -> Word;
}

/// Left-to-right fold of `act` from the identity over builtin letters.
pub fn evaluate<E: GroupEngine + ?Sized>(engine: &E, w: &Word) -> E::Elem {
    w.letters().iter().fold(engine.identity(), |g, &l| engine.act(&g, l))
}

/// Parses `text` over the builtin letters and evaluates it.
pub fn evaluate_text<E: GroupEngine + ?Sized>(engine: &E, text: &str) -> Result<E::Elem, WordError> {
    Ok(evaluate(engine, &engine.builtin().word(text)?))
}

/// `g^k` by repeated multiplication (`k` may be negative).
pub fn power<E: GroupEngine + ?Sized>(engine: &E, g: &E::Elem, k: i64) -> E::Elem {
    let base = if k < 0 { engine.inverse(g) } else { g.clone() };
    (0..k.unsigned_abs()).fold(engine.identity(), |acc, _| engine.multiply(&acc, &base))
}

/// True iff every relator of `p` maps to the identity when each generator
/// is sent to the target element of its image word.
///
/// `images` maps generator letters (non-inverse letters of the presentation)
/// to words over the target's builtin letters; inverse letters map to the
/// inverse element.
pub fn check_homomorphism<E: GroupEngine + ?Sized>(p: &Presentation, target: &E, images: &BTreeMap<Letter, Word>) -> bool {
    let Some(gen_images) = image_elements(p, target, images) else {
        return false;
    };
    let id = target.identity();
    p.relators()
        .iter()
        .all(|r| r.letters().iter().fold(target.identity(), |g, l| target.multiply(&g, &gen_images[l.index()])) == id)
}

/// Per-letter target elements for a presentation map; `None` if a generator
/// has no image.
pub(crate) fn image_elements<E: GroupEngine + ?Sized>(
    p: &Presentation,
    target: &E,
    images: &BTreeMap<Letter, Word>,
) -> Option<Vec<E::Elem>> {
    let al = p.alphabet();
    let mut out = vec![target.identity(); al.len()];
    for g in p.generators() {
        let img = evaluate(target, images.get(&g)?);
        out[al.inverse(g).index()] = target.inverse(&img);
        out[g.index()] = img;
    }
    Some(out)
}

/// All elements of a finite engine reachable from its builtin letters, in
/// BFS order (identity first). Returns `None` past `cap` elements.
pub fn enumerate_elements<E: GroupEngine + ?Sized>(engine: &E, cap: usize) -> Option<Vec<E::Elem>> {
    let gens: Vec<E::Elem> = engine.builtin().letters().map(|l| engine.builtin_element(l)).collect();
    let mut seen = std::collections::HashSet::new();
    let mut order = vec![engine.identity()];
    seen.insert(engine.identity());
    let mut i = 0;
    while i < order.len() {
        let g = order[i].clone();
        for s in &gens {
            let h = engine.multiply(&g, s);
            if seen.insert(h.clone()) {
                if order.len() >= cap {
                    return None;
                }
                order.push(h);
            }
        }
        i += 1;
    }
    Some(order)
}
