use num_bigint::BigInt;

use super::{znc2_witness, Report, ReportBlock, WitnessError, ZnC2Witness};
use crate::geodesics::{geodesic_language, validate_genset, Bound};
use crate::groups::{Phi, ZnC2Engine};

/// One generating set of `ℤ² ⋊ ℤ/2` (swap) with `a = x1`, `b = x2`, `t = y`.
#[derive(Debug, Clone)]
pub struct CannonCase {
    pub label: String,
    pub maxlen: usize,
    pub geo_strata: Vec<usize>,
    pub witness: ZnC2Witness,
}

impl CannonCase {
    pub fn block(&self) -> ReportBlock {
        let strata: Vec<String> = self.geo_strata.iter().map(usize::to_string).collect();
        let c = &self.witness.certificate;
        ReportBlock::pass_if(&self.label, c.distance == c.witness().len())
            .line(format!("geodesic strata to length {}: {}", self.maxlen, strata.join(" ")))
            .line(format!("geodesic words to length {}: {}", self.maxlen, self.geo_strata.iter().sum::<usize>()))
            .line(format!("case {}: witness {} (distance {})", self.witness.subcase, c.witness_text(), c.distance))
            .line(format!("violation: {}", c.violation_text()))
    }
}

#[derive(Debug, Clone)]
pub struct CannonResult {
    pub cases: Vec<CannonCase>,
}

impl CannonResult {
    pub fn report(&self) -> Report {
        let mut r = Report::new("Z^2 x| Z/2 = <a, b, t | [a,b], t^2, t a t b^-1>");
        r.header.push("Geo is enumerated for {a,b,t} and {a,c,d,t} with c = a^2, d = ab".into());
        r.header.push("regularity of Geo is not decided here; both sets get a non-PE certificate".into());
        r.blocks.extend(self.cases.iter().map(CannonCase::block));
        r
    }
}

pub fn cannon(maxlen: usize) -> Result<CannonResult, WitnessError> {
    let engine = ZnC2Engine::<BigInt>::new(2, Phi::Swap(0, 1))?;
    let sets: [(&str, &[(&str, &str)]); 2] = [
        ("{a, b, t}", &[("a", "x1"), ("b", "x2"), ("t", "y")]),
        ("{a, c, d, t}", &[("a", "x1"), ("c", "x1 x1"), ("d", "x1 x2"), ("t", "y")]),
    ];
    let mut cases = Vec::new();
    for (label, letters) in sets {
        let gs = validate_genset(&engine, letters)?;
        let geo = geodesic_language(&gs, Bound::MaxLen(maxlen))?;
        let witness = znc2_witness(&gs)?;
        cases.push(CannonCase {
            label: label.to_string(),
            maxlen,
            geo_strata: geo.language.stratum_sizes(),
            witness,
        });
    }
    Ok(CannonResult { cases })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_sets_are_certified() {
        let r = cannon(4).unwrap();
        assert_eq!(r.cases.len(), 2);
        // a, a^-1, b, b^-1, t
        assert_eq!(r.cases[0].geo_strata[..2], [1, 5]);
        assert!(r.report().ok());
    }
}
