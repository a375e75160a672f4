use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use super::{Report, ReportBlock, Status, WitnessError};
use crate::groups::{
    check_homomorphism, direct_product, fingerprint, AnyElem, AnyEngine, BS12Engine, CosetEnumerator, Fingerprint,
    FiniteGroupTable, GroupEngine, Presentation, TOrder, ZmSemidirectEngine,
};
use crate::classify::{pe_check, PEVerdict};
use crate::geodesics::{geodesic_language, validate_genset, Bound, GenSet};
use crate::words::Word;

/// Representatives of `a b a⁻¹` (columns).
pub const COLUMN_WORDS: [&str; 7] = ["b^-1", "a^-1 b", "a^-1 b^-1", "b a", "b b", "b^-1 a", "b^-1 b^-1"];
/// Representatives of `b a b⁻¹` (rows); the columns with `a` and `b` swapped.
pub const ROW_WORDS: [&str; 7] = ["a^-1", "b^-1 a", "b^-1 a^-1", "a b", "a a", "a^-1 b", "a^-1 a^-1"];

pub const CELL_CAP: usize = 20_000;
const SPHERE_RADIUS: usize = 5;
const IMAGE_LEN: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Claim {
    Trivial,
    Cyclic(usize),
    /// Listed as `ℤ/6 × ℤ/2`, which no abelian group can be here: every
    /// abelian image satisfies `b² = 1`, `a² = b` (or `a² = b⁻¹`) and is
    /// cyclic of order dividing 4. The group is the dicyclic `ℤ/3 ⋊ ℤ/4`.
    Dic12,
    Q8,
    Sl23,
    S3,
    Z9Z3,
    Z,
    Z3Z,
    Z5Z,
    Bs12,
}

/// Lower triangle of the classification table, `CLAIMS[row][col]` for
/// `col <= row`.
const CLAIMS: [&[Claim]; 7] = {
    use Claim::*;
    [
        &[Q8],
        &[Z3Z, Trivial],
        &[Dic12, Trivial, Sl23],
        &[Z3Z, Trivial, Trivial, Trivial],
        &[Cyclic(2), Bs12, S3, Z3Z, Trivial],
        &[Dic12, Trivial, Cyclic(5), Trivial, S3, Sl23],
        &[Cyclic(6), Z, Cyclic(6), Z5Z, Cyclic(3), Cyclic(6), Z9Z3],
    ]
};

impl Claim {
    fn at(row: usize, col: usize) -> Claim {
        CLAIMS[row.max(col)][row.min(col)]
    }

    fn name(&self) -> String {
        match self {
            Claim::Trivial => "1".into(),
            Claim::Cyclic(n) => format!("Z/{n}"),
            Claim::Dic12 => "Z/3 x| Z/4 (listed as Z/6 x Z/2)".into(),
            Claim::Q8 => "Q8".into(),
            Claim::Sl23 => "SL2(Z/3) [24,3]".into(),
            Claim::S3 => "S3".into(),
            Claim::Z9Z3 => "Z/9 x| Z/3 (s=4) [27,4]".into(),
            Claim::Z => "Z".into(),
            Claim::Z3Z => "Z/3 x| Z (s=2)".into(),
            Claim::Z5Z => "Z/5 x| Z (s=2)".into(),
            Claim::Bs12 => "BS(1,2)".into(),
        }
    }

    /// Independently built table of a finite claim.
    fn table(&self) -> Option<FiniteGroupTable> {
        Some(match self {
            Claim::Trivial => FiniteGroupTable::cyclic(1),
            Claim::Cyclic(n) => FiniteGroupTable::cyclic(*n),
            Claim::Dic12 => {
                let e = ZmSemidirectEngine::<i64>::new(3, 2, TOrder::Finite(4)).expect("valid parameters");
                FiniteGroupTable::from_engine(&e, 100).expect("order 12")
            }
            Claim::Q8 => FiniteGroupTable::quaternion(),
            Claim::Sl23 => sl2_3_matrices(),
            Claim::S3 => FiniteGroupTable::from_permutations(&[("a", vec![1, 0, 2]), ("b", vec![0, 2, 1])])
                .expect("valid permutations"),
            Claim::Z9Z3 => {
                let e = ZmSemidirectEngine::<i64>::new(9, 4, TOrder::Finite(3)).expect("valid parameters");
                FiniteGroupTable::from_engine(&e, 100).expect("order 27")
            }
            _ => return None,
        })
    }

    fn engine(&self) -> Option<AnyEngine> {
        let zm = |n, s| AnyEngine::Zm(ZmSemidirectEngine::new(n, s, TOrder::Infinite).expect("valid parameters"));
        Some(match self {
            Claim::Z => zm(1, 1),
            Claim::Z3Z => zm(3, 2),
            Claim::Z5Z => zm(5, 2),
            Claim::Bs12 => AnyEngine::Bs12(BS12Engine::new()),
            _ => return None,
        })
    }
}

/// `SL2(ℤ/3)` acting on the eight non-zero vectors of `(ℤ/3)²`, generated
/// by the two elementary matrices.
fn sl2_3_matrices() -> FiniteGroupTable {
    let vectors: Vec<(usize, usize)> =
        (0..3).flat_map(|x| (0..3).map(move |y| (x, y))).filter(|&v| v != (0, 0)).collect();
    let act = |m: [[usize; 2]; 2]| -> Vec<usize> {
        vectors
            .iter()
            .map(|&(x, y)| {
                let w = ((m[0][0] * x + m[0][1] * y) % 3, (m[1][0] * x + m[1][1] * y) % 3);
                vectors.iter().position(|&v| v == w).expect("non-zero image")
            })
            .collect()
    };
    FiniteGroupTable::from_permutations(&[("u", act([[1, 1], [0, 1]])), ("l", act([[1, 0], [1, 1]]))])
        .expect("valid permutations")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CellOutcome {
    Finite { order: usize, fingerprint: Fingerprint },
    CapExceeded { spheres: Option<Vec<usize>> },
}

#[derive(Debug, Clone)]
pub struct Table1Cell {
    pub row: usize,
    pub col: usize,
    pub claimed: String,
    pub outcome: CellOutcome,
    /// Finite: fingerprints agree. Infinite: surjection found and sphere
    /// sizes agree.
    pub matches: bool,
    /// Infinite claims are only certified up to a surjection plus growth.
    pub partial: bool,
    pub details: Vec<String>,
}

impl Table1Cell {
    pub fn status(&self) -> Status {
        match (self.matches, self.partial) {
            (false, _) => Status::Fail,
            (true, true) => Status::Partial,
            (true, false) => Status::Pass,
        }
    }

    pub fn title(&self) -> String {
        format!(
            "aba^-1 = {}, bab^-1 = {}: {}",
            COLUMN_WORDS[self.col], ROW_WORDS[self.row], self.claimed
        )
    }
}

#[derive(Debug, Clone)]
pub struct Table1Report {
    pub cells: Vec<Table1Cell>,
    /// Mirrored cells give the same outcome.
    pub symmetric: bool,
}

impl Table1Report {
    pub fn cell(&self, row: usize, col: usize) -> &Table1Cell {
        &self.cells[row * 7 + col]
    }

    /// First cell that disagrees with its claim.
    pub fn first_mismatch(&self) -> Option<WitnessError> {
        self.cells.iter().find(|c| !c.matches).map(|c| WitnessError::MismatchedCell(c.title()))
    }

    pub fn report(&self) -> Report {
        let mut r = Report::new("Two-generator groups with aba^-1 and bab^-1 of length at most 2");
        r.header.push("the 7 x 7 choices of representatives are taken as given".into());
        r.header.push(format!("finite cells: coset enumeration (cap {CELL_CAP}) and fingerprint comparison"));
        r.header.push(format!(
            "infinite cells: cap exceeded, a surjection onto the claimed group and equal sphere sizes to radius {SPHERE_RADIUS}; isomorphism is not proven (PARTIAL)"
        ));
        for c in &self.cells {
            let mut b = ReportBlock::new(c.title(), c.status());
            b.lines.extend(c.details.iter().cloned());
            r.blocks.push(b);
        }
        r.blocks.push(ReportBlock::pass_if("transposition symmetry", self.symmetric));
        r
    }
}

fn presentation(row: usize, col: usize) -> Presentation {
    let rel1 = format!("a b a^-1 {}", invert_text(COLUMN_WORDS[col]));
    let rel2 = format!("b a b^-1 {}", invert_text(ROW_WORDS[row]));
    Presentation::new(&["a", "b"], &[&rel1, &rel2]).expect("valid relators")
}

/// Formal inverse of a word in text form.
fn invert_text(w: &str) -> String {
    w.split_whitespace()
        .rev()
        .map(|t| t.strip_suffix("^-1").map(str::to_string).unwrap_or_else(|| format!("{t}^-1")))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Sphere sizes of the group generated by `gens` (closed under inverses).
fn sphere_sizes<E: GroupEngine>(engine: &E, gens: &[E::Elem], radius: usize) -> Vec<usize> {
    let mut seen = HashSet::from([engine.identity()]);
    let mut frontier = vec![engine.identity()];
    let mut sizes = vec![1];
    for _ in 0..radius {
        let mut next = Vec::new();
        for g in &frontier {
            for s in gens {
                let h = engine.multiply(g, s);
                if seen.insert(h.clone()) {
                    next.push(h);
                }
            }
        }
        sizes.push(next.len());
        frontier = next;
    }
    sizes
}

/// Whether every builtin letter lies within `radius` of the identity over
/// `gens`.
fn reaches_builtin<E: GroupEngine>(engine: &E, gens: &[E::Elem], radius: usize) -> bool {
    let mut targets: HashSet<E::Elem> = engine.builtin().letters().map(|l| engine.builtin_element(l)).collect();
    let mut seen = HashSet::from([engine.identity()]);
    targets.remove(&engine.identity());
    let mut frontier = vec![engine.identity()];
    for _ in 0..radius {
        let mut next = Vec::new();
        for g in &frontier {
            for s in gens {
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
    targets.is_empty()
}

/// All words up to `len` over the engine's builtin letters, shortlex.
fn short_words(engine: &AnyEngine, len: usize) -> Vec<Word> {
    let letters: Vec<_> = engine.builtin().letters().collect();
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..len {
        layer = layer.iter().flat_map(|w| letters.iter().map(move |&l| w.pushed(l))).collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// First pair of image words (shortlex) defining a surjective homomorphism.
fn find_surjection(p: &Presentation, target: &AnyEngine) -> Option<(Word, Word, Vec<AnyElem>)> {
    let words = short_words(target, IMAGE_LEN);
    let gens: Vec<_> = p.generators().collect();
    for wa in &words {
        for wb in &words {
            let images = BTreeMap::from([(gens[0], wa.clone()), (gens[1], wb.clone())]);
            if !check_homomorphism(p, target, &images) {
                continue;
            }
            let ga = crate::groups::evaluate(target, wa);
            let gb = crate::groups::evaluate(target, wb);
            let elems = vec![ga.clone(), target.inverse(&ga), gb.clone(), target.inverse(&gb)];
            if reaches_builtin(target, &elems, 6) {
                return Some((wa.clone(), wb.clone(), elems));
            }
        }
    }
    None
}

fn evaluate_cell(row: usize, col: usize) -> Table1Cell {
    let claim = Claim::at(row, col);
    let p = presentation(row, col);
    let mut details = Vec::new();
    let (outcome, matches) = match CosetEnumerator::new(&p, CELL_CAP).enumerate(&p) {
        Ok(t) => {
            let fp = fingerprint(&t);
            details.push(format!("order {}", t.order()));
            details.push(format!("fingerprint: {fp}"));
            let matches = claim.table().is_some_and(|c| fingerprint(&c) == fp);
            details.push(format!("matches claimed group: {matches}"));
            if claim == Claim::Dic12 {
                details.extend(dic12_notes(&t, &fp));
            }
            (CellOutcome::Finite { order: t.order(), fingerprint: fp }, matches)
        }
        Err((_, partial)) => {
            let spheres = partial.sphere_sizes(SPHERE_RADIUS);
            details.push(format!("coset enumeration exceeded {CELL_CAP} cosets"));
            let matches = match claim.engine() {
                Some(engine) => match find_surjection(&p, &engine) {
                    Some((wa, wb, elems)) => {
                        let al = engine.builtin();
                        details.push(format!("surjection: a -> {}, b -> {}", wa.display(al), wb.display(al)));
                        let lower = sphere_sizes(&engine, &elems, SPHERE_RADIUS);
                        details.push(format!("claimed-group spheres: {lower:?}"));
                        details.push(format!("coset-table spheres:   {}", fmt_spheres(&spheres)));
                        spheres.as_ref() == Some(&lower)
                    }
                    None => {
                        details.push(format!("no surjection with images of length <= {IMAGE_LEN}"));
                        false
                    }
                },
                None => {
                    details.push("claimed group is finite".into());
                    false
                }
            };
            (CellOutcome::CapExceeded { spheres }, matches)
        }
    };
    Table1Cell { row, col, claimed: claim.name(), outcome, matches, partial: claim.engine().is_some(), details }
}

/// Why the listed label is rejected, plus the PE verdict over `{a, b}`
/// (the listed abelian label would make the group irrelevant to the
/// classification; the actual group is not abelian).
fn dic12_notes(t: &FiniteGroupTable, fp: &Fingerprint) -> Vec<String> {
    debug_assert_ne!(&fingerprint(&direct_product(&FiniteGroupTable::cyclic(6), &FiniteGroupTable::cyclic(2))), fp);
    let mut out = vec![format!(
        "listed Z/6 x Z/2 refuted: its abelianization is (6,2), here it is ({})",
        fp.abelianization.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
    )];
    let verdict = validate_genset(t, &[("a", "a"), ("b", "b")])
        .and_then(|gs| Ok(pe_check(&geodesic_language(&gs, Bound::Exact)?).report(gs.alphabet())));
    match verdict {
        Ok(text) => out.push(format!("over {{a, b}}: {}", text.lines().next().unwrap_or_default())),
        Err(e) => out.push(format!("over {{a, b}}: {e}")),
    }
    out.push(match first_non_pe_genset(t) {
        Some(line) => format!("non-PE generating set: {line}"),
        None => "every symmetric generating set is PE".into(),
    });
    out
}

/// Smallest symmetric generating set (fewest inverse pairs, then element
/// order) whose geodesic language is not PE, with its certificate.
fn first_non_pe_genset(t: &FiniteGroupTable) -> Option<String> {
    let al = t.builtin();
    let atoms: Vec<_> = al.letters().filter(|&l| al.inverse(l).index() >= l.index()).collect();
    let mut masks: Vec<u32> = (1..1u32 << atoms.len()).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    masks.into_iter().find_map(|mask| {
        let letters: Vec<(String, Word)> = atoms
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &l)| (format!("x{}", l.index()), Word(vec![l])))
            .collect();
        let gs = GenSet::new(t, letters).ok()?;
        let geo = geodesic_language(&gs, Bound::Exact).ok()?;
        match pe_check(&geo) {
            PEVerdict::NotPE { witness, violation } => {
                let gal = gs.alphabet();
                let elems: Vec<String> = gal
                    .letters()
                    .map(|x| format!("{}={}", gal.name(x), t.name(t.builtin_element(gs.image(x).letters()[0]))))
                    .collect();
                Some(format!(
                    "{{{}}}, witness {}, violation {}",
                    elems.join(", "),
                    witness.display(gal),
                    violation.display(gal)
                ))
            }
            _ => None,
        }
    })
}

fn fmt_spheres(s: &Option<Vec<usize>>) -> String {
    match s {
        Some(v) => format!("{v:?}"),
        None => "undefined entries within radius".into(),
    }
}

/// Enumerates all 49 cells in row-major order.
pub fn table1_report() -> Table1Report {
    let cells: Vec<Table1Cell> =
        (0..49).into_par_iter().map(|k| evaluate_cell(k / 7, k % 7)).collect();
    let symmetric = (0..7).all(|r| (0..7).all(|c| cells[r * 7 + c].outcome == cells[c * 7 + r].outcome));
    Table1Report { cells, symmetric }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claims_are_symmetric_and_sl2_has_one_involution() {
        assert_eq!(Claim::at(1, 4), Claim::Bs12);
        assert_eq!(Claim::at(4, 1), Claim::Bs12);
        let sl = sl2_3_matrices();
        assert_eq!(sl.order(), 24);
        assert_eq!(fingerprint(&sl).order_histogram.get(&2), Some(&1));
        assert_eq!(invert_text("a^-1 b"), "b^-1 a");
    }
}
