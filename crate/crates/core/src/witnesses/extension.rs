use super::{Report, ReportBlock, WitnessError};
use crate::geodesics::{geodesic_language, GenSet, Bound};
use crate::groups::{ExtensionEngine, FiniteGroupTable, GroupEngine};
use crate::words::{avoid_language, Alphabet, ForbiddenSet, Word};

/// Outcome of the extension construction for one `H ⋊ ℤʳ`.
#[derive(Debug, Clone)]
pub struct ExtensionCheck {
    pub label: String,
    pub alphabet: Alphabet,
    /// All length-2 words over the fiber letters plus `t_k t_k⁻¹, t_k⁻¹ t_k`.
    pub forbidden: ForbiddenSet,
    pub bound: usize,
    pub geo_strata: Vec<usize>,
    /// Geo and the avoiding language agree up to `bound`.
    pub agrees: bool,
}

impl ExtensionCheck {
    pub fn block(&self) -> ReportBlock {
        let letters: Vec<&str> = self.alphabet.letters().map(|l| self.alphabet.name(l)).collect();
        let strata: Vec<String> = self.geo_strata.iter().map(usize::to_string).collect();
        ReportBlock::pass_if(&self.label, self.agrees)
            .line(format!("alphabet: {}", letters.join(" ")))
            .line(format!("forbidden words: {}", self.forbidden.len()))
            .line(format!("geodesic strata to length {}: {}", self.bound, strata.join(" ")))
            .line(format!("Geo equals the avoiding language: {}", self.agrees))
    }
}

/// Builds `H ⋊ ℤʳ` with one permutation of `H` per basis direction, takes
/// every non-identity element of `H` plus `t_1, …, t_r` as generators, and
/// compares Geo with the language avoiding `H̄² ∪ {t_k t_k⁻¹, t_k⁻¹ t_k}`.
pub fn extension_genset(
    label: &str,
    h: FiniteGroupTable,
    actions: Vec<Vec<usize>>,
    bound: usize,
) -> Result<ExtensionCheck, WitnessError> {
    let engine = ExtensionEngine::<i64>::new(h, actions)?;
    let hl = engine.fiber().builtin().len();
    let builtin = engine.builtin();
    let letters: Vec<(String, Word)> = builtin
        .letters()
        .filter(|l| l.index() < hl || (l.index() - hl) % 2 == 0)
        .map(|l| (builtin.name(l).to_string(), Word(vec![l])))
        .collect();
    let gs = GenSet::new(&engine, letters)?;
    let al = gs.alphabet();
    let fiber: Vec<_> = al.letters().filter(|&l| gs.image(l).letters()[0].index() < hl).collect();
    let mut words = Vec::new();
    for &x in &fiber {
        for &y in &fiber {
            words.push(Word(vec![x, y]));
        }
    }
    for l in al.letters().filter(|l| !fiber.contains(l)) {
        words.push(Word(vec![l, al.inverse(l)]));
    }
    let forbidden = ForbiddenSet::new(words);
    let geo = geodesic_language(&gs, Bound::MaxLen(bound))?;
    let avoid = avoid_language(&forbidden, al, bound);
    let agrees = geo.language.strata == avoid.strata;
    Ok(ExtensionCheck {
        label: label.to_string(),
        alphabet: al.clone(),
        forbidden,
        bound,
        geo_strata: geo.language.stratum_sizes(),
        agrees,
    })
}

/// The four fibers of the acceptance suite: `ℤ/2 × ℤ`, `S3 × ℤ`,
/// `ℤ/3 ⋊ ℤ` by inversion, and `Q8 ⋊ ℤ²` acted on by conjugation by `i`
/// and `j` (inner automorphisms whose commutator is conjugation by `-1`,
/// which is trivial).
pub fn standard_cases() -> Vec<(String, FiniteGroupTable, Vec<Vec<usize>>)> {
    let c2 = FiniteGroupTable::cyclic(2);
    let s3 = crate::groups::file::builtin_table("s3").expect("builtin");
    let c3 = FiniteGroupTable::cyclic(3);
    let q8 = FiniteGroupTable::quaternion();
    let id = |t: &FiniteGroupTable| -> Vec<usize> { (0..t.order()).collect() };
    let conj = |t: &FiniteGroupTable, x: usize| -> Vec<usize> {
        (0..t.order()).map(|g| t.mul(t.mul(x, g), t.inv(x))).collect()
    };
    let (qi, qj) = (q8.element("i").expect("i"), q8.element("j").expect("j"));
    vec![
        ("Z/2 x Z".to_string(), c2.clone(), vec![id(&c2)]),
        ("S3 x Z".to_string(), s3.clone(), vec![id(&s3)]),
        ("Z/3 x| Z (inversion)".to_string(), c3, vec![vec![0, 2, 1]]),
        ("Q8 x Z^2".to_string(), q8.clone(), vec![id(&q8), id(&q8)]),
        ("Q8 x| Z^2 (conjugation by i, j)".to_string(), q8.clone(), vec![conj(&q8, qi), conj(&q8, qj)]),
    ]
}

/// Runs every standard case to `bound`.
pub fn extension_report(bound: usize) -> Result<Report, WitnessError> {
    let mut r = Report::new("Finite-by-abelian extensions H x| Z^r");
    r.header.push("generators: every non-identity element of H plus t_1, ..., t_r".into());
    r.header.push("forbidden: all length-2 words over H plus t t^-1 and t^-1 t".into());
    r.header.push("Z/3 x| Z is PE here but not over {at, ta} (see the quotients report)".into());
    for (label, h, actions) in standard_cases() {
        r.blocks.push(extension_genset(&label, h, actions, bound)?.block());
    }
    Ok(r)
}
