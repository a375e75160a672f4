//! Deciding the piecewise-excluding property of geodesic languages.
//!
//! Geodesic languages are factor-closed, so a complete one is piecewise
//! excluding exactly when it is closed under deleting single letters; the
//! excluded set is then the antichain of minimal non-members. A geodesic
//! word with a non-geodesic subsequence refutes the property outright, at
//! any bound.

use std::fmt::Write as _;

use crate::geodesics::{is_geodesic, GenSet, GeodesicError, GeodesicLanguage};
use crate::groups::GroupEngine;
use crate::words::{first_deletion_violation, is_subsequence, minimal_forbidden_subsequences, Alphabet, ForbiddenSet, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PEVerdict {
    PE { forbidden: ForbiddenSet },
    /// `witness` is geodesic, `violation` is a non-geodesic subsequence.
    NotPE { witness: Word, violation: Word },
    Inconclusive { bound: usize },
}

impl PEVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            PEVerdict::PE { .. } => "PE",
            PEVerdict::NotPE { .. } => "NotPE",
            PEVerdict::Inconclusive { .. } => "Inconclusive",
        }
    }

    pub fn is_pe(&self) -> bool {
        matches!(self, PEVerdict::PE { .. })
    }

    pub fn is_not_pe(&self) -> bool {
        matches!(self, PEVerdict::NotPE { .. })
    }

    /// `verdict: …` followed by the forbidden words, the certificate, or the
    /// bound.
    pub fn report(&self, alphabet: &Alphabet) -> String {
        let mut out = format!("verdict: {}\n", self.label());
        match self {
            PEVerdict::PE { forbidden } => {
                out.push_str("forbidden:\n");
                for w in forbidden.iter() {
                    let _ = writeln!(out, "  {}", w.display(alphabet));
                }
            }
            PEVerdict::NotPE { witness, violation } => {
                let _ = writeln!(out, "witness: {}", witness.display(alphabet));
                let _ = writeln!(out, "violation: {}", violation.display(alphabet));
            }
            PEVerdict::Inconclusive { bound } => {
                let _ = writeln!(out, "bound: {bound}");
            }
        }
        out
    }
}

/// Exact decision for a complete language; truncated languages fall back to
/// [`pe_check_bounded`].
pub fn pe_check(l: &GeodesicLanguage) -> PEVerdict {
    if !l.complete() {
        return pe_check_bounded(l);
    }
    if let Some((witness, violation)) = first_deletion_violation(&l.language) {
        return PEVerdict::NotPE { witness, violation };
    }
    let forbidden = minimal_forbidden_subsequences(&l.language).expect("deletion-closed");
    PEVerdict::PE { forbidden }
}

/// Refutation-only scan: the shortlex-first geodesic with a non-geodesic
/// single deletion, else `Inconclusive` at the enumeration bound.
pub fn pe_check_bounded(l: &GeodesicLanguage) -> PEVerdict {
    match first_deletion_violation(&l.language) {
        Some((witness, violation)) => PEVerdict::NotPE { witness, violation },
        None => PEVerdict::Inconclusive { bound: l.maxlen() },
    }
}

/// The conjugation certificate: if `a b a⁻¹` is geodesic then so must be
/// `a a⁻¹` in a piecewise-excluding geodesic language, which it never is.
pub fn not_pe_from_conjugation<E: GroupEngine>(
    genset: &GenSet<'_, E>,
    a: Letter,
    b: Letter,
) -> Result<PEVerdict, GeodesicError> {
    let a_inv = genset.alphabet().inverse(a);
    let witness = Word(vec![a, b, a_inv]);
    if is_geodesic(genset, &witness)? {
        Ok(PEVerdict::NotPE { witness, violation: Word(vec![a, a_inv]) })
    } else {
        Ok(PEVerdict::Inconclusive { bound: 3 })
    }
}

/// Independently re-validates a `NotPE` certificate with fresh balls.
/// Other verdicts are accepted as-is.
pub fn recheck_certificate<E: GroupEngine>(genset: &GenSet<'_, E>, v: &PEVerdict) -> Result<bool, GeodesicError> {
    match v {
        PEVerdict::NotPE { witness, violation } => Ok(is_subsequence(violation, witness)
            && is_geodesic(genset, witness)?
            && !is_geodesic(genset, violation)?),
        _ => Ok(true),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geodesics::{geodesic_language, validate_genset, Bound};
    use crate::groups::{BS12Engine, FiniteGroupTable, Phi, ZnC2Engine};

    #[test]
    fn quaternion_is_pe() {
        let q = FiniteGroupTable::quaternion();
        let gs = validate_genset(&q, &[("i", "i"), ("j", "j")]).unwrap();
        let v = pe_check(&geodesic_language(&gs, Bound::Exact).unwrap());
        let PEVerdict::PE { forbidden } = &v else { panic!("expected PE, got {v:?}") };
        for l in gs.alphabet().letters() {
            assert!(forbidden.contains(&Word(vec![l, gs.alphabet().inverse(l)])));
        }
        assert!(v.report(gs.alphabet()).starts_with("verdict: PE\nforbidden:\n  i i^-1\n"));
        let a = gs.letter("i").unwrap();
        let b = gs.letter("j").unwrap();
        assert_eq!(not_pe_from_conjugation(&gs, a, b).unwrap(), PEVerdict::Inconclusive { bound: 3 });
    }

    #[test]
    fn bounded_refutations() {
        let bs = BS12Engine::<i64>::new();
        let gs = validate_genset(&bs, &[("a", "a"), ("t", "t")]).unwrap();
        let v = pe_check_bounded(&geodesic_language(&gs, Bound::MaxLen(3)).unwrap());
        assert_eq!(v, PEVerdict::NotPE { witness: gs.word("t^-1 a t").unwrap(), violation: gs.word("t^-1 t").unwrap() });
        assert!(recheck_certificate(&gs, &v).unwrap());
        assert_eq!(v.report(gs.alphabet()), "verdict: NotPE\nwitness: t^-1 a t\nviolation: t^-1 t\n");

        let z = ZnC2Engine::<i64>::new(1, Phi::Invert(0)).unwrap();
        let gs = validate_genset(&z, &[("x", "x1"), ("y", "y")]).unwrap();
        let v = pe_check_bounded(&geodesic_language(&gs, Bound::MaxLen(3)).unwrap());
        assert_eq!(v, PEVerdict::NotPE { witness: gs.word("x y x^-1").unwrap(), violation: gs.word("x x^-1").unwrap() });
    }
}
