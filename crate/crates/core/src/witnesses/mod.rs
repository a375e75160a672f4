//! Constructive reproductions: generating-set surveys, the extension
//! construction, witness selection in `ℤⁿ ⋊ ℤ/2`, quotient-family witnesses,
//! witness lifting and the two-generator classification table.
//!
//! Every driver returns typed results plus a plain-text [`Report`] whose
//! blocks carry PASS / PARTIAL / FAIL markers and a closing summary line.

mod cannon;
mod extension;
mod lift;
mod quotients;
mod survey;
mod table1;
mod znc2;

use std::fmt;

use thiserror::Error;

use crate::classify::PEVerdict;
use crate::geodesics::{ball, is_geodesic, GenSet, GeodesicError};
use crate::groups::{GroupEngine, GroupError};
use crate::words::{Alphabet, Word};

pub use cannon::{cannon, CannonCase, CannonResult};
pub use extension::{extension_genset, extension_report, standard_cases, ExtensionCheck};
pub use lift::{lift_examples, lift_report, lift_witness, LiftResult, QuotientSpec};
pub use quotients::{
    all_families, qxq, quotient_family_witness, quotient_report, sl2_3_table, small_group_witnesses, QuotientFamily, BSQUOT_FINITE_CASES,
    BSQUOT_Z_CASES, Z5_CASE_E_CASES,
};
pub use survey::{d8, q8_survey, D8Result, SurveyEntry, SurveyReport};
pub use table1::{table1_report, CellOutcome, Table1Cell, Table1Report, CELL_CAP, COLUMN_WORDS, ROW_WORDS};
pub use znc2::{
    generates_algebraically, genset_from_elements, random_genset, CONFIGS, worked_gensets, znc2_report, znc2_witness, Subcase, ZnC2Witness,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error(transparent)]
    Geodesic(#[from] GeodesicError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("witness selection failed: {0}")]
    SelectionFailed(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("lifted word `{0}` is not geodesic")]
    LiftNotGeodesic(String),
    #[error("table cell {0} disagrees with the claimed group")]
    MismatchedCell(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Partial,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Partial => "PARTIAL",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportBlock {
    pub title: String,
    pub status: Status,
    pub lines: Vec<String>,
}

impl ReportBlock {
    pub fn new(title: impl Into<String>, status: Status) -> Self {
        Self { title: title.into(), status, lines: Vec::new() }
    }

    pub fn line(mut self, text: impl Into<String>) -> Self {
        self.lines.push(text.into());
        self
    }

    pub fn pass_if(title: impl Into<String>, ok: bool) -> Self {
        Self::new(title, if ok { Status::Pass } else { Status::Fail })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub header: Vec<String>,
    pub blocks: Vec<ReportBlock>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Self { title: title.into(), header: Vec::new(), blocks: Vec::new() }
    }

    pub fn count(&self, status: Status) -> usize {
        self.blocks.iter().filter(|b| b.status == status).count()
    }

    /// No block failed.
    pub fn ok(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn summary(&self) -> String {
        format!(
            "total={} pass={} partial={} fail={}",
            self.blocks.len(),
            self.count(Status::Pass),
            self.count(Status::Partial),
            self.count(Status::Fail)
        )
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("# {}\n", self.title);
        for h in &self.header {
            out.push_str(h);
            out.push('\n');
        }
        for b in &self.blocks {
            out.push_str(&format!("\n[{}] {}\n", b.status, b.title));
            for l in &b.lines {
                out.push_str("  ");
                out.push_str(l);
                out.push('\n');
            }
        }
        out.push('\n');
        out.push_str(&self.summary());
        out.push('\n');
        out
    }
}

/// A re-checked `NotPE` certificate detached from the engine it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub group: String,
    pub alphabet: Alphabet,
    pub verdict: PEVerdict,
    /// Word-metric distance of the witness element (equals its length).
    pub distance: usize,
}

impl Certificate {
    pub fn witness(&self) -> &Word {
        match &self.verdict {
            PEVerdict::NotPE { witness, .. } => witness,
            _ => unreachable!("certificates always hold NotPE"),
        }
    }

    pub fn witness_text(&self) -> String {
        self.witness().display(&self.alphabet).to_string()
    }

    pub fn violation_text(&self) -> String {
        match &self.verdict {
            PEVerdict::NotPE { violation, .. } => violation.display(&self.alphabet).to_string(),
            _ => unreachable!("certificates always hold NotPE"),
        }
    }

    pub fn block(&self, title: impl Into<String>) -> ReportBlock {
        let letters: Vec<&str> = self.alphabet.letters().map(|l| self.alphabet.name(l)).collect();
        ReportBlock::pass_if(title, self.distance == self.witness().len())
            .line(format!("group: {}", self.group))
            .line(format!("alphabet: {}", letters.join(" ")))
            .line(format!("witness: {}", self.witness_text()))
            .line(format!("violation: {}", self.violation_text()))
            .line(format!("distance: {}", self.distance))
    }
}

/// Certifies `a w a⁻¹` (any geodesic word with an inverse pair at its ends):
/// the word must be geodesic, the pair must not be, and the witness's
/// distance is recomputed from a fresh ball one larger than its length.
pub fn certify<E: GroupEngine>(
    group: impl Into<String>,
    genset: &GenSet<'_, E>,
    witness: &Word,
) -> Result<Certificate, WitnessError> {
    let al = genset.alphabet();
    let letters = witness.letters();
    let display = genset.display(witness);
    if letters.len() < 2 || al.inverse(letters[0]) != letters[letters.len() - 1] {
        return Err(WitnessError::BadParams(format!("`{display}` does not start and end with an inverse pair")));
    }
    if !is_geodesic(genset, witness)? {
        return Err(WitnessError::SelectionFailed(format!("`{display}` is not geodesic")));
    }
    let violation = Word(vec![letters[0], letters[letters.len() - 1]]);
    let b = ball(genset, witness.len())?;
    let distance = b.distance(&genset.evaluate(witness)).expect("inside the ball");
    if b.distance(&genset.evaluate(&violation)) == Some(2) {
        return Err(WitnessError::SelectionFailed(format!("`{display}`: the end pair is geodesic")));
    }
    Ok(Certificate {
        group: group.into(),
        alphabet: al.clone(),
        verdict: PEVerdict::NotPE { witness: witness.clone(), violation },
        distance,
    })
}
