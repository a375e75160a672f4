use std::collections::HashMap;

use num_bigint::BigInt;

use super::{certify, znc2_witness, Certificate, Report, ReportBlock, WitnessError};
use crate::geodesics::{is_geodesic, validate_genset, GenSet};
use crate::groups::{
    evaluate, BS12Engine, ExtensionEngine, FiniteGroupTable, GroupEngine, Phi, ProductEngine, TOrder,
    ZmSemidirectEngine, ZnC2Engine,
};
use crate::words::{invert_word, Letter, Word};

/// A surjection `π` from a source generating set onto the generating set
/// `π(A)` of a target, with a section choosing one source letter over each
/// target letter.
pub struct QuotientSpec<'s, 't, S: GroupEngine, T: GroupEngine> {
    pub source: GenSet<'s, S>,
    pub target: GenSet<'t, T>,
    section: Vec<Letter>,
}

impl<'s, 't, S: GroupEngine, T: GroupEngine> QuotientSpec<'s, 't, S, T> {
    /// `images` gives, per declared source letter name, a word over the
    /// target's builtin letters. Inverse letters map to inverse images.
    /// Letters mapping to the identity or to an already-listed element are
    /// dropped from `π(A)`; the first source letter over each target letter
    /// is its lift. `π` is checked to be well defined on the radius-4 ball.
    pub fn new(source: GenSet<'s, S>, target: &'t T, images: &[(&str, &str)]) -> Result<Self, WitnessError> {
        let sal = source.alphabet();
        let mut pi: Vec<Option<T::Elem>> = vec![None; sal.len()];
        let mut words: Vec<Word> = vec![Word::empty(); sal.len()];
        for (name, word) in images {
            let l = sal.lookup(name).ok_or_else(|| WitnessError::BadParams(format!("unknown source letter `{name}`")))?;
            let w = target.builtin().word(word).map_err(|e| WitnessError::BadParams(e.to_string()))?;
            let g = evaluate(target, &w);
            pi[sal.inverse(l).index()] = Some(target.inverse(&g));
            pi[l.index()] = Some(g);
            words[sal.inverse(l).index()] = invert_word(&w, target.builtin());
            words[l.index()] = w;
        }
        let pi: Vec<T::Elem> = sal
            .letters()
            .map(|l| pi[l.index()].clone().ok_or_else(|| WitnessError::BadParams(format!("no image for `{}`", sal.name(l)))))
            .collect::<Result<_, _>>()?;
        check_well_defined(&source, target, &pi, 4)?;

        // target letters carry the name of their lift
        let mut seen: Vec<T::Elem> = vec![target.identity()];
        let mut letters = Vec::new();
        for l in sal.letters() {
            let g = &pi[l.index()];
            if !seen.contains(g) {
                seen.push(g.clone());
                letters.push((sal.name(l).to_string(), words[l.index()].clone()));
            }
        }
        let target_gs = GenSet::new(target, letters)?;
        let tal = target_gs.alphabet();
        let section = tal
            .letters()
            .map(|x| sal.lookup(tal.name(x)).expect("target letters are named after source letters"))
            .collect();
        Ok(Self { source, target: target_gs, section })
    }

    pub fn lift(&self, w: &Word) -> Word {
        Word(w.letters().iter().map(|l| self.section[l.index()]).collect())
    }
}

/// Breadth-first over the source ball; every element must receive a single
/// image no matter which path reaches it.
fn check_well_defined<S: GroupEngine, T: GroupEngine>(
    source: &GenSet<'_, S>,
    target: &T,
    pi: &[T::Elem],
    radius: usize,
) -> Result<(), WitnessError> {
    let mut image: HashMap<S::Elem, T::Elem> = HashMap::from([(source.engine().identity(), target.identity())]);
    let mut frontier = vec![source.engine().identity()];
    for _ in 0..radius {
        let mut next = Vec::new();
        for g in &frontier {
            let pg = image[g].clone();
            for l in source.alphabet().letters() {
                let h = source.engine().multiply(g, source.element(l));
                let ph = target.multiply(&pg, &pi[l.index()]);
                match image.get(&h) {
                    Some(existing) if *existing != ph => {
                        return Err(WitnessError::BadParams(format!(
                            "letter images do not define a homomorphism near `{}`",
                            source.engine().key(&h)
                        )))
                    }
                    Some(_) => {}
                    None => {
                        image.insert(h.clone(), ph);
                        next.push(h);
                    }
                }
            }
        }
        frontier = next;
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct LiftResult {
    pub label: String,
    pub target: Certificate,
    pub source: Certificate,
}

impl LiftResult {
    pub fn block(&self) -> ReportBlock {
        let ok = self.target.distance == self.target.witness().len() && self.source.distance == self.source.witness().len();
        ReportBlock::pass_if(&self.label, ok)
            .line(format!("target: {}", self.target.group))
            .line(format!("target witness: {} (distance {})", self.target.witness_text(), self.target.distance))
            .line(format!("source: {}", self.source.group))
            .line(format!("lifted witness: {} (distance {})", self.source.witness_text(), self.source.distance))
            .line(format!("violation: {}", self.source.violation_text()))
    }
}

/// Certifies `k_witness` in the target, lifts it letter by letter through
/// the section and certifies the lift in the source.
pub fn lift_witness<S: GroupEngine, T: GroupEngine>(
    label: &str,
    source_group: &str,
    target_group: &str,
    q: &QuotientSpec<'_, '_, S, T>,
    k_witness: &str,
) -> Result<LiftResult, WitnessError> {
    let w = q.target.word(k_witness).map_err(|e| WitnessError::BadParams(e.to_string()))?;
    let target = certify(target_group, &q.target, &w)?;
    let lifted = q.lift(&w);
    if !is_geodesic(&q.source, &lifted)? {
        return Err(WitnessError::LiftNotGeodesic(q.source.display(&lifted)));
    }
    let source = certify(source_group, &q.source, &lifted)?;
    Ok(LiftResult { label: label.to_string(), target, source })
}

/// The worked lifts: `S3 × ℤ → S3`, `BS(1,2) → ℤ/7 ⋊ ℤ` and
/// `BS(1,2) → ℤ/3 ⋊ ℤ`, and `(ℤ² ⋊ ℤ/2) × ℤ/2 → ℤ² ⋊ ℤ/2`.
pub fn lift_examples() -> Result<Vec<LiftResult>, WitnessError> {
    let mut out = Vec::new();

    let s3 = FiniteGroupTable::from_permutations(&[("a", vec![1, 0, 2]), ("b", vec![0, 2, 1])])?;
    let ext = ExtensionEngine::<BigInt>::trivial(s3.clone(), 1)?;
    let src = validate_genset(&ext, &[("a", "a"), ("b", "b"), ("t", "t")])?;
    let q = QuotientSpec::new(src, &s3, &[("a", "a"), ("b", "b"), ("t", "")])?;
    out.push(lift_witness("S3 x Z -> S3", "S3 x Z", "S3", &q, "a b a^-1")?);

    let bs = BS12Engine::<BigInt>::new();
    let z7 = ZmSemidirectEngine::<BigInt>::new(7, 2, TOrder::Infinite)?;
    let src = validate_genset(&bs, &[("a", "a"), ("t", "t")])?;
    let q = QuotientSpec::new(src, &z7, &[("a", "a"), ("t", "t")])?;
    out.push(lift_witness("BS(1,2) -> Z/7 x| Z, {a, t}", "BS(1,2)", "Z/7 x| Z (s=2)", &q, "t^-1 a t")?);

    let z3 = ZmSemidirectEngine::<BigInt>::new(3, 2, TOrder::Infinite)?;
    let src = validate_genset(&bs, &[("u", "a t"), ("v", "t a")])?;
    let q = QuotientSpec::new(src, &z3, &[("u", "a t"), ("v", "t a")])?;
    out.push(lift_witness("BS(1,2) -> Z/3 x| Z, {at, ta}", "BS(1,2)", "Z/3 x| Z (s=2)", &q, "u v u^-1")?);

    let zn = ZnC2Engine::<BigInt>::new(2, Phi::Swap(0, 1))?;
    let prod = ProductEngine::new(zn.clone(), FiniteGroupTable::cyclic(2))?;
    let src = validate_genset(&prod, &[("x1", "x1_1"), ("x2", "x2_1"), ("y", "y_1"), ("z", "g_2")])?;
    let q = QuotientSpec::new(src, &zn, &[("x1", "x1"), ("x2", "x2"), ("y", "y"), ("z", "")])?;
    let k = znc2_witness(&q.target)?;
    let text = k.certificate.witness_text();
    out.push(lift_witness(
        "(Z^2 x| Z/2) x Z/2 -> Z^2 x| Z/2",
        "(Z^2 x| Z/2, swap) x Z/2",
        "Z^2 x| Z/2 (swap 1 2)",
        &q,
        &text,
    )?);
    Ok(out)
}

pub fn lift_report() -> Result<Report, WitnessError> {
    let mut r = Report::new("Lifting witnesses through quotients");
    r.header.push("a geodesic a w a^-1 in a quotient lifts to a geodesic in the source".into());
    for l in lift_examples()? {
        r.blocks.push(l.block());
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_homomorphisms() {
        let bs = BS12Engine::<BigInt>::new();
        let z3 = ZmSemidirectEngine::<BigInt>::new(3, 2, TOrder::Infinite).unwrap();
        let src = validate_genset(&bs, &[("a", "a"), ("t", "t")]).unwrap();
        // a -> t does not respect t a t^-1 = a^2
        assert!(matches!(QuotientSpec::new(src, &z3, &[("a", "t"), ("t", "a")]), Err(WitnessError::BadParams(_))));
    }

    #[test]
    fn inverse_of_a_is_not_geodesic_in_z3() {
        let bs = BS12Engine::<BigInt>::new();
        let z3 = ZmSemidirectEngine::<BigInt>::new(3, 2, TOrder::Infinite).unwrap();
        let src = validate_genset(&bs, &[("a", "a"), ("t", "t")]).unwrap();
        let q = QuotientSpec::new(src, &z3, &[("a", "a"), ("t", "t")]).unwrap();
        assert!(lift_witness("x", "BS(1,2)", "Z/3 x| Z", &q, "t^-1 a t").is_err());
    }
}
