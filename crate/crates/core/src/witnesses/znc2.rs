use std::collections::HashSet;
use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{certify, Certificate, Report, ReportBlock, WitnessError};
use crate::geodesics::{validate_genset, GenSet};
use crate::groups::{GroupEngine, Phi, ZnC2Elem, ZnC2Engine};
use crate::scalar::Coord;
use crate::words::{Letter, Word};

/// Which branch of the selection argument applies to a generating set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Subcase {
    /// `x_i ↦ x_i⁻¹`, some `ε = 0` letter moves coordinate `i`.
    InvertA,
    InvertB,
    /// `x_i ↔ x_j`, some `ε = 0` letter has different coordinates `i`, `j`.
    SwapA,
    SwapB,
}

impl fmt::Display for Subcase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Subcase::InvertA => "1A",
            Subcase::InvertB => "1B",
            Subcase::SwapA => "2A",
            Subcase::SwapB => "2B",
        })
    }
}

#[derive(Debug, Clone)]
pub struct ZnC2Witness {
    pub subcase: Subcase,
    pub a: Letter,
    pub b: Letter,
    pub certificate: Certificate,
}

/// First letter (in alphabet order) maximizing `score` among `candidates`.
fn argmax<T: Ord>(candidates: &[Letter], score: impl Fn(Letter) -> T) -> Option<Letter> {
    let mut best: Option<(Letter, T)> = None;
    for &l in candidates {
        let s = score(l);
        if best.as_ref().is_none_or(|(_, b)| s > *b) {
            best = Some((l, s));
        }
    }
    best.map(|(l, _)| l)
}

fn argmin<T: Ord>(candidates: &[Letter], score: impl Fn(Letter) -> T) -> Option<Letter> {
    let mut best: Option<(Letter, T)> = None;
    for &l in candidates {
        let s = score(l);
        if best.as_ref().is_none_or(|(_, b)| s < *b) {
            best = Some((l, s));
        }
    }
    best.map(|(l, _)| l)
}

/// Chooses `a` and `b` by the extremality rules of the selection argument
/// and certifies `a b a⁻¹` geodesic.
///
/// The choice is first checked directly (`a b a⁻¹` must avoid `{1} ∪ A ∪
/// A·A`) and then re-checked by a ball.
pub fn znc2_witness<T: Coord>(genset: &GenSet<'_, ZnC2Engine<T>>) -> Result<ZnC2Witness, WitnessError> {
    let engine = genset.engine();
    let al = genset.alphabet();
    let elem = |l: Letter| -> &ZnC2Elem<T> { genset.element(l) };
    let coord = |l: Letter, k: usize| -> T { elem(l).coords[k].clone() };
    let flat: Vec<Letter> = al.letters().filter(|&l| !elem(l).flip).collect();
    let flipped: Vec<Letter> = al.letters().filter(|&l| elem(l).flip).collect();
    let missing = || WitnessError::SelectionFailed("no letter outside Z^n".into());
    let (subcase, a, b) = match engine.phi() {
        Phi::Invert(i) => {
            if flat.iter().any(|&l| !coord(l, i).is_zero()) {
                let a = argmax(&flat, |l| coord(l, i)).expect("non-empty");
                let b = argmax(&flipped, |l| coord(l, i)).ok_or_else(missing)?;
                (Subcase::InvertA, a, b)
            } else {
                let a = argmax(&flipped, |l| coord(l, i)).ok_or_else(missing)?;
                let b = argmin(&flipped, |l| coord(l, i)).expect("non-empty");
                (Subcase::InvertB, a, b)
            }
        }
        Phi::Swap(i, j) => {
            let diff = |l: Letter| coord(l, i) - coord(l, j);
            if flat.iter().any(|&l| !diff(l).is_zero()) {
                let c = argmax(&flat, |l| diff(l).abs()).expect("non-empty");
                let b = argmax(&flipped, |l| diff(l).abs()).ok_or_else(missing)?;
                let (dc, db) = (diff(c), diff(b));
                let a = if db.is_zero() || dc.signum() == db.signum() { c } else { al.inverse(c) };
                (Subcase::SwapA, a, b)
            } else {
                let a = argmax(&flipped, |l| diff(l).abs()).ok_or_else(missing)?;
                let b = argmin(&flipped, |l| diff(l).abs()).expect("non-empty");
                (Subcase::SwapB, a, b)
            }
        }
    };
    let witness = Word(vec![a, b, al.inverse(a)]);
    let target = genset.evaluate(&witness);
    let shown = genset.display(&witness);
    let letters: Vec<&ZnC2Elem<T>> = al.letters().map(elem).collect();
    if target == engine.identity()
        || letters.iter().any(|&g| *g == target)
        || letters.iter().any(|&g| letters.iter().any(|&h| engine.multiply(g, h) == target))
    {
        return Err(WitnessError::SelectionFailed(format!("subcase {subcase}: `{shown}` has length at most 2")));
    }
    let group = format!("Z^{} x| Z/2 ({})", engine.rank(), phi_text(engine.phi()));
    let certificate = certify(group, genset, &witness)?;
    Ok(ZnC2Witness { subcase, a, b, certificate })
}

pub(crate) fn phi_text(phi: Phi) -> String {
    match phi {
        Phi::Invert(i) => format!("invert {}", i + 1),
        Phi::Swap(i, j) => format!("swap {} {}", i + 1, j + 1),
    }
}

/// Word over the builtin letters spelling `x_1^{m_1} ⋯ x_n^{m_n} y^ε`.
fn spell<T: Coord>(engine: &ZnC2Engine<T>, coords: &[i64], flip: bool) -> Word {
    let al = engine.builtin();
    let mut w = Vec::new();
    for (k, &m) in coords.iter().enumerate() {
        let x = engine.x(k);
        let l = if m < 0 { al.inverse(x) } else { x };
        w.extend(std::iter::repeat_n(l, m.unsigned_abs() as usize));
    }
    if flip {
        w.push(engine.y());
    }
    Word(w)
}

/// A generating set named `g1, g2, …` for the given normal-form data.
pub fn genset_from_elements<'e, T: Coord>(
    engine: &'e ZnC2Engine<T>,
    elems: &[(Vec<i64>, bool)],
) -> Result<GenSet<'e, ZnC2Engine<T>>, WitnessError> {
    let letters = elems.iter().enumerate().map(|(k, (c, f))| (format!("g{}", k + 1), spell(engine, c, *f))).collect();
    Ok(GenSet::new(engine, letters)?)
}

/// Whether the elements generate `ℤⁿ ⋊ ℤ/2`: some element must lie outside
/// `ℤⁿ`, and the Schreier generators of `ℤⁿ` for the transversal `{1, c}`
/// must span the full lattice.
pub fn generates_algebraically(rank: usize, phi: Phi, elems: &[(Vec<i64>, bool)]) -> bool {
    let engine = ZnC2Engine::<i64>::new(rank, phi).expect("valid engine");
    let to = |(c, f): &(Vec<i64>, bool)| engine.elem(c, *f);
    let Some(c) = elems.iter().find(|e| e.1).map(to) else {
        return false;
    };
    let c_inv = engine.inverse(&c);
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for g in elems.iter().map(to) {
        let pair = if g.flip {
            [engine.multiply(&g, &c_inv), engine.multiply(&c, &g)]
        } else {
            [g.clone(), engine.multiply(&engine.multiply(&c, &g), &c_inv)]
        };
        rows.extend(pair.into_iter().map(|h| h.coords));
    }
    lattice_is_full(rows, rank)
}

/// Column-by-column Euclidean reduction; the lattice is `ℤⁿ` iff every
/// pivot is a unit.
fn lattice_is_full(mut rows: Vec<Vec<i64>>, rank: usize) -> bool {
    for col in 0..rank {
        loop {
            let nz: Vec<usize> = (0..rows.len()).filter(|&r| rows[r][col] != 0).collect();
            if nz.len() <= 1 {
                match nz.first() {
                    Some(&p) if rows[p][col].abs() == 1 => {
                        rows.swap_remove(p);
                        break;
                    }
                    _ => return false,
                }
            }
            let p = *nz.iter().min_by_key(|&&r| rows[r][col].abs()).expect("non-empty");
            let pivot = rows[p].clone();
            for &r in &nz {
                if r != p {
                    let q = rows[r][col] / pivot[col];
                    for (x, y) in rows[r].iter_mut().zip(&pivot) {
                        *x -= q * y;
                    }
                }
            }
        }
    }
    true
}

/// Whether every standard generator `x_k`, `y` lies within `radius` of the
/// identity over `genset`.
fn standard_generators_within<T: Coord>(genset: &GenSet<'_, ZnC2Engine<T>>, radius: usize) -> bool {
    let engine = genset.engine();
    let mut targets: HashSet<ZnC2Elem<T>> =
        (0..engine.rank()).map(|k| engine.builtin_element(engine.x(k))).collect();
    targets.insert(engine.builtin_element(engine.y()));
    let steps: Vec<ZnC2Elem<T>> = genset.alphabet().letters().map(|l| genset.element(l).clone()).collect();
    let mut seen = HashSet::from([engine.identity()]);
    let mut frontier = vec![engine.identity()];
    for _ in 0..radius {
        let mut next = Vec::new();
        for g in &frontier {
            for s in &steps {
                let h = engine.multiply(g, s);
                if seen.insert(h.clone()) {
                    targets.remove(&h);
                    next.push(h);
                }
            }
        }
        if targets.is_empty() {
            return true;
        }
        frontier = next;
    }
    false
}

/// Draws generating sets with coordinates in `-3..=3` and 2 to 5 letters
/// before inverse closure, until one generates within radius 6. Identity
/// letters and letters equal to another letter or its inverse are redrawn.
pub fn random_genset<T: Coord, R: Rng>(engine: &ZnC2Engine<T>, rng: &mut R) -> Vec<(Vec<i64>, bool)> {
    let rank = engine.rank();
    let fast = ZnC2Engine::<i64>::new(rank, engine.phi()).expect("valid engine");
    loop {
        let size = rng.gen_range(2..=5);
        let mut elems: Vec<(Vec<i64>, bool)> = Vec::new();
        let mut used: HashSet<ZnC2Elem<i64>> = HashSet::new();
        while elems.len() < size {
            let coords: Vec<i64> = (0..rank).map(|_| rng.gen_range(-3..=3)).collect();
            let flip = rng.gen_bool(0.5);
            let g = fast.elem(&coords, flip);
            if g == fast.identity() || used.contains(&g) {
                continue;
            }
            used.insert(fast.inverse(&g));
            used.insert(g);
            elems.push((coords, flip));
        }
        if !generates_algebraically(rank, engine.phi(), &elems) {
            continue;
        }
        let gs = genset_from_elements(engine, &elems).expect("distinct non-identity letters");
        if standard_generators_within(&gs, 6) {
            return elems;
        }
    }
}

/// The rank / involution pairs exercised by the random trials.
pub const CONFIGS: [(usize, Phi); 5] =
    [(1, Phi::Invert(0)), (2, Phi::Invert(0)), (2, Phi::Swap(0, 1)), (3, Phi::Invert(2)), (3, Phi::Swap(0, 2))];

/// `(label, rank, involution, (name, builtin word) letters)`.
pub type WorkedGenset = (&'static str, usize, Phi, Vec<(&'static str, &'static str)>);

/// The hand-worked generating sets.
pub fn worked_gensets() -> Vec<WorkedGenset> {
    vec![
        ("Z x| Z/2, {x, y}", 1, Phi::Invert(0), vec![("x", "x1"), ("y", "y")]),
        ("Z^2 x| Z/2 (swap), {x1, x2, y}", 2, Phi::Swap(0, 1), vec![("x1", "x1"), ("x2", "x2"), ("y", "y")]),
        ("Z x| Z/2, {xy, y}", 1, Phi::Invert(0), vec![("u", "x1 y"), ("y", "y")]),
    ]
}

fn witness_block<T: Coord>(title: String, gs: &GenSet<'_, ZnC2Engine<T>>) -> ReportBlock {
    match znc2_witness(gs) {
        Ok(w) => {
            let al = gs.alphabet();
            let mut b = w.certificate.block(title);
            b.lines.insert(0, format!("subcase {}: a = {}, b = {}", w.subcase, al.name(w.a), al.name(w.b)));
            b
        }
        Err(e) => ReportBlock::pass_if(title, false).line(format!("error: {e}")),
    }
}

/// Worked generating sets plus `samples` random ones per configuration,
/// drawn from a fixed seed.
pub fn znc2_report(samples: usize, seed: u64) -> Result<Report, WitnessError> {
    let mut r = Report::new("Z^n x| Z/2: witness selection");
    r.header.push(format!("{samples} random generating sets per configuration, seed {seed}"));
    for (label, rank, phi, letters) in worked_gensets() {
        let engine = ZnC2Engine::<i64>::new(rank, phi)?;
        let gs = validate_genset(&engine, &letters)?;
        r.blocks.push(witness_block(label.to_string(), &gs));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (rank, phi) in CONFIGS {
        let engine = ZnC2Engine::<i64>::new(rank, phi)?;
        let mut counts = std::collections::BTreeMap::new();
        let mut failures = Vec::new();
        for _ in 0..samples {
            let elems = random_genset(&engine, &mut rng);
            let gs = genset_from_elements(&engine, &elems)?;
            match znc2_witness(&gs) {
                Ok(w) if w.certificate.distance == 3 => *counts.entry(w.subcase).or_insert(0usize) += 1,
                Ok(w) => failures.push(format!("{elems:?}: distance {}", w.certificate.distance)),
                Err(e) => failures.push(format!("{elems:?}: {e}")),
            }
        }
        let tally: Vec<String> = counts.iter().map(|(s, c)| format!("{s}={c}")).collect();
        let mut b = ReportBlock::pass_if(format!("random, n={rank}, {}", phi_text(phi)), failures.is_empty())
            .line(format!("certified: {} of {samples}", samples - failures.len()))
            .line(format!("subcases: {}", tally.join(" ")));
        b.lines.extend(failures.into_iter().map(|f| format!("failed: {f}")));
        r.blocks.push(b);
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_reduction() {
        assert!(lattice_is_full(vec![vec![2, 0], vec![3, 1], vec![0, 1]], 2));
        assert!(!lattice_is_full(vec![vec![2, 0], vec![0, 1]], 2));
        assert!(!lattice_is_full(vec![vec![1, 1]], 2));
    }

    #[test]
    fn worked_examples() {
        let z = ZnC2Engine::<i64>::new(1, Phi::Invert(0)).unwrap();
        let gs = validate_genset(&z, &[("u", "x1 y"), ("y", "y")]).unwrap();
        let w = znc2_witness(&gs).unwrap();
        assert_eq!(w.subcase, Subcase::InvertB);
        assert_eq!(w.certificate.witness_text(), "u y u");
        let z = ZnC2Engine::<i64>::new(2, Phi::Swap(0, 1)).unwrap();
        let gs = validate_genset(&z, &[("x1", "x1"), ("x2", "x2"), ("y", "y")]).unwrap();
        let w = znc2_witness(&gs).unwrap();
        assert_eq!(w.subcase, Subcase::SwapA);
        assert_eq!(w.certificate.witness_text(), "x1 y x1^-1");
        assert_eq!(gs.evaluate(w.certificate.witness()), z.elem(&[1, -1], true));
    }

    #[test]
    fn algebraic_generation() {
        assert!(generates_algebraically(1, Phi::Invert(0), &[(vec![1], false), (vec![0], true)]));
        assert!(!generates_algebraically(1, Phi::Invert(0), &[(vec![2], false), (vec![0], true)]));
        assert!(generates_algebraically(1, Phi::Invert(0), &[(vec![1], true), (vec![0], true)]));
        assert!(!generates_algebraically(2, Phi::Swap(0, 1), &[(vec![1, 0], false)]));
    }
}
