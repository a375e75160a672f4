use super::{Report, ReportBlock, WitnessError};
use crate::classify::{pe_check, PEVerdict};
use crate::geodesics::{geodesic_language, validate_genset, Bound, GeodesicError};
use crate::groups::{coset_enumerate, FiniteGroupTable, Presentation};
use crate::words::{avoid_language, Alphabet, ForbiddenSet, Language, Word};

/// Inverse-closed atoms of `Q8 ∖ {1}`.
const Q8_ATOMS: [&[&str]; 4] = [&["-1"], &["i", "-i"], &["j", "-j"], &["k", "-k"]];

#[derive(Debug, Clone)]
pub struct SurveyEntry {
    pub letters: Vec<String>,
    pub alphabet: Alphabet,
    pub verdict: PEVerdict,
    /// `a a⁻¹` is a forbidden word for every letter `a`.
    pub inverse_pairs_forbidden: bool,
}

#[derive(Debug, Clone)]
pub struct SurveyReport {
    pub subsets_checked: usize,
    pub entries: Vec<SurveyEntry>,
}

impl SurveyReport {
    pub fn pe_count(&self) -> usize {
        self.entries.iter().filter(|e| e.verdict.is_pe()).count()
    }

    pub fn report(&self) -> Report {
        let mut r = Report::new("Q8: all inverse-closed generating sets");
        r.header.push(format!(
            "{} subsets checked, {} generating sets, {} PE",
            self.subsets_checked,
            self.entries.len(),
            self.pe_count()
        ));
        for e in &self.entries {
            let ok = e.verdict.is_pe() && e.inverse_pairs_forbidden;
            let mut b = ReportBlock::pass_if(format!("{{{}}}", e.letters.join(", ")), ok);
            b.lines.extend(e.verdict.report(&e.alphabet).lines().map(str::to_string));
            r.blocks.push(b);
        }
        r
    }
}

/// Runs the exact PE decision on every generating inverse-closed subset of
/// `Q8 ∖ {1}`.
pub fn q8_survey() -> Result<SurveyReport, WitnessError> {
    let q8 = FiniteGroupTable::quaternion();
    let mut entries = Vec::new();
    let subsets = 1usize << Q8_ATOMS.len();
    for mask in 0..subsets {
        let letters: Vec<&str> =
            (0..Q8_ATOMS.len()).filter(|k| mask & (1 << k) != 0).flat_map(|k| Q8_ATOMS[k].iter().copied()).collect();
        if letters.is_empty() {
            continue;
        }
        let pairs: Vec<(&str, &str)> = letters.iter().map(|&n| (n, n)).collect();
        let gs = match validate_genset(&q8, &pairs) {
            Ok(gs) => gs,
            Err(GeodesicError::NotGenerating { .. }) => continue,
            Err(e) => return Err(e.into()),
        };
        let verdict = pe_check(&geodesic_language(&gs, Bound::Exact)?);
        let al = gs.alphabet();
        let inverse_pairs_forbidden = match &verdict {
            PEVerdict::PE { forbidden } => al.letters().all(|a| forbidden.contains(&Word(vec![a, al.inverse(a)]))),
            _ => false,
        };
        entries.push(SurveyEntry {
            letters: letters.iter().map(|s| s.to_string()).collect(),
            alphabet: al.clone(),
            verdict,
            inverse_pairs_forbidden,
        });
    }
    Ok(SurveyReport { subsets_checked: subsets, entries })
}

#[derive(Debug, Clone)]
pub struct D8Result {
    pub table: FiniteGroupTable,
    /// Geo over `{a, b, t}`.
    pub geo: Language,
    pub verdict: PEVerdict,
    /// `{xx} ∪ {all length-3 words}`, the non-minimal form.
    pub wide_forbidden: ForbiddenSet,
    /// Whether the minimal and the wide forbidden sets carve out the same
    /// language up to length 4.
    pub forms_agree: bool,
    pub pair_alphabet: Alphabet,
    /// Geo over `{a, b}`.
    pub pair_verdict: PEVerdict,
}

impl D8Result {
    pub fn report(&self) -> Report {
        let mut r = Report::new("D8 = <a,b,t | a^2, b^2, (ab)^4, ababt>");
        r.header.push(format!("order {}", self.table.order()));
        let al = &self.geo.alphabet;
        let words: Vec<String> = self.geo.words().map(|w| w.display(al).to_string()).collect();
        let minimal_ok = self.verdict.is_pe() && self.forms_agree && self.geo.len() == 10;
        let mut b = ReportBlock::pass_if("generating set {a, b, t}", minimal_ok)
            .line(format!("geodesics ({}): {}", words.len(), words.join(", ")));
        b.lines.extend(self.verdict.report(al).lines().map(str::to_string));
        b.lines.push(format!(
            "minimal forbidden set equals {{xx}} + all length-3 words up to length 4: {}",
            self.forms_agree
        ));
        r.blocks.push(b);
        let mut b = ReportBlock::pass_if("generating set {a, b}", self.pair_verdict.is_not_pe());
        b.lines.extend(self.pair_verdict.report(&self.pair_alphabet).lines().map(str::to_string));
        r.blocks.push(b);
        r
    }
}

pub fn d8() -> Result<D8Result, WitnessError> {
    let p = Presentation::new(&["a", "b", "t"], &["a a", "b b", "a b a b a b a b", "a b a b t"])?;
    let table = coset_enumerate(&p, 1000)?;
    let gs = validate_genset(&table, &[("a", "a"), ("b", "b"), ("t", "t")])?;
    let geo = geodesic_language(&gs, Bound::Exact)?;
    let verdict = pe_check(&geo);
    let al = gs.alphabet().clone();
    let letters: Vec<_> = al.letters().collect();
    let mut wide = Vec::new();
    for &x in &letters {
        wide.push(Word(vec![x, x]));
        for &y in &letters {
            for &z in &letters {
                wide.push(Word(vec![x, y, z]));
            }
        }
    }
    let wide_forbidden = ForbiddenSet::new(wide);
    let forms_agree = match &verdict {
        PEVerdict::PE { forbidden } => {
            let minimal = avoid_language(forbidden, &al, 4);
            let wide = avoid_language(&wide_forbidden, &al, 4);
            let geo_words: Vec<&Word> = geo.language.words().collect();
            minimal.same_members(&wide) && minimal.words().eq(geo_words.iter().copied())
        }
        _ => false,
    };
    let pair = validate_genset(&table, &[("a", "a"), ("b", "b")])?;
    let pair_verdict = pe_check(&geodesic_language(&pair, Bound::Exact)?);
    let pair_alphabet = pair.alphabet().clone();
    Ok(D8Result { table, geo: geo.language, verdict, wide_forbidden, forms_agree, pair_alphabet, pair_verdict })
}
