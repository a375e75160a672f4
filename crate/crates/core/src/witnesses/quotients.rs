use std::fmt;

use num_bigint::BigInt;

use super::{certify, Certificate, Report, ReportBlock, WitnessError};
use crate::geodesics::validate_genset;
use crate::groups::{
    coset_enumerate, direct_product, BS12Engine, FiniteGroupTable, Presentation, TOrder,
    ZmSemidirectEngine,
};

/// Non-abelian quotients whose witness words are checked directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientFamily {
    /// `ℤ/5 ⋊ ℤ/4m` (`x a x⁻¹ = a³`) over `{ax, xa}±`, witness
    /// `(ax)(xa)(ax)⁻¹`.
    Z5CaseE { m: u64 },
    /// `ℤ/n ⋊ ℤ` (`t a t⁻¹ = a²`, `n` odd) over `{at, ta}±`, witness
    /// `(at)(ta)(at)⁻¹`.
    BsQuotZ { n: u64 },
    /// `ℤ/n ⋊ ℤ/m` with `2^m ≡ 1 mod n` and `m > 3`, same generators and
    /// witness as [`QuotientFamily::BsQuotZ`].
    BsQuotFinite { n: u64, m: u64 },
    /// `ℤ/7 ⋊ ℤ/3` (`s = 2`) over `{at, t}±`, witness `(at) t (at)⁻¹`.
    Z7Z3,
    /// `ℤ/9 ⋊ ℤ/3` (`y x y⁻¹ = x⁴`) over `{x, y}±`, witness `x y x⁻¹`.
    Z9Z3,
    /// `S3` over two transpositions, witness `x y x`.
    S3Inv,
}

pub const Z5_CASE_E_CASES: [u64; 3] = [1, 2, 3];
pub const BSQUOT_Z_CASES: [u64; 4] = [3, 5, 7, 9];
pub const BSQUOT_FINITE_CASES: [(u64, u64); 2] = [(15, 4), (31, 5)];

impl fmt::Display for QuotientFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            QuotientFamily::Z5CaseE { m } => write!(f, "Z/5 x| Z/{} (s=3)", 4 * m),
            QuotientFamily::BsQuotZ { n } => write!(f, "Z/{n} x| Z (s=2)"),
            QuotientFamily::BsQuotFinite { n, m } => write!(f, "Z/{n} x| Z/{m} (s=2)"),
            QuotientFamily::Z7Z3 => f.write_str("Z/7 x| Z/3 (s=2)"),
            QuotientFamily::Z9Z3 => f.write_str("Z/9 x| Z/3 (s=4)"),
            QuotientFamily::S3Inv => f.write_str("S3"),
        }
    }
}

impl QuotientFamily {
    /// Finite quotients of the Baumslag–Solitar group only arise with
    /// `n = 2^m - 1`; other admissible pairs are accepted but flagged.
    pub fn outside_derivation(&self) -> bool {
        match *self {
            QuotientFamily::BsQuotFinite { n, m } => m >= 64 || n != (1u64 << m) - 1,
            _ => false,
        }
    }

    fn validate(&self) -> Result<(), WitnessError> {
        let bad = |msg: String| Err(WitnessError::BadParams(msg));
        match *self {
            QuotientFamily::Z5CaseE { m: 0 } => bad("m must be positive".into()),
            QuotientFamily::BsQuotZ { n } if n < 3 || n % 2 == 0 => bad(format!("n = {n} must be odd and at least 3")),
            QuotientFamily::BsQuotFinite { n, m } => {
                if n < 3 || n % 2 == 0 {
                    bad(format!("n = {n} must be odd and at least 3"))
                } else if m <= 3 {
                    bad(format!("m = {m} must exceed 3"))
                } else if (0..m).fold(1u64, |acc, _| acc * 2 % n) != 1 {
                    bad(format!("2^{m} is not 1 mod {n}"))
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }
}

type Zm = ZmSemidirectEngine<BigInt>;

fn zm_witness(
    family: &QuotientFamily,
    engine: Zm,
    letters: &[(&str, &str)],
    witness: &str,
) -> Result<Certificate, WitnessError> {
    let gs = validate_genset(&engine, letters)?;
    let w = gs.word(witness).map_err(|e| WitnessError::BadParams(e.to_string()))?;
    certify(family.to_string(), &gs, &w)
}

/// Builds the family member, its generating set, and certifies the witness.
pub fn quotient_family_witness(family: QuotientFamily) -> Result<Certificate, WitnessError> {
    family.validate()?;
    let uv = [("u", "a t"), ("v", "t a")];
    match family {
        QuotientFamily::Z5CaseE { m } => {
            let e = Zm::with_names(5, 3, TOrder::Finite(4 * m), "a", "x")?;
            zm_witness(&family, e, &[("u", "a x"), ("v", "x a")], "u v u^-1")
        }
        QuotientFamily::BsQuotZ { n } => zm_witness(&family, Zm::new(n, 2, TOrder::Infinite)?, &uv, "u v u^-1"),
        QuotientFamily::BsQuotFinite { n, m } => {
            zm_witness(&family, Zm::new(n, 2, TOrder::Finite(m))?, &uv, "u v u^-1")
        }
        QuotientFamily::Z7Z3 => {
            zm_witness(&family, Zm::new(7, 2, TOrder::Finite(3))?, &[("u", "a t"), ("t", "t")], "u t u^-1")
        }
        QuotientFamily::Z9Z3 => {
            let e = Zm::with_names(9, 4, TOrder::Finite(3), "x", "y")?;
            zm_witness(&family, e, &[("x", "x"), ("y", "y")], "x y x^-1")
        }
        QuotientFamily::S3Inv => {
            let t = FiniteGroupTable::from_permutations(&[("x", vec![1, 0, 2]), ("y", vec![0, 2, 1])])?;
            let gs = validate_genset(&t, &[("x", "x"), ("y", "y")])?;
            certify(family.to_string(), &gs, &gs.word("x y x").expect("declared letters"))
        }
    }
}

/// `Q8 × Q8` over `{i₁, j₁k₂, i₂, k₂}±` with witness `i₁ (j₁k₂) i₁⁻¹`.
pub fn qxq() -> Result<Certificate, WitnessError> {
    let q = FiniteGroupTable::quaternion();
    let qq = direct_product(&q, &q);
    let gs = validate_genset(&qq, &[("i1", "(i,1)"), ("j1k2", "(j,k)"), ("i2", "(1,i)"), ("k2", "(1,k)")])?;
    certify("Q8 x Q8", &gs, &gs.word("i1 j1k2 i1^-1").expect("declared letters"))
}

/// The first pair `(a, b)` of `SL2(ℤ/3)` with `a` of order 6, `b` of order
/// 4 and `a b⁻¹ a b⁻¹ a b = 1` that generates the group.
pub fn sl2_3_pair(t: &FiniteGroupTable) -> Option<(usize, usize)> {
    let n = t.order();
    for a in (0..n).filter(|&a| t.element_order(a) == 6) {
        for b in (0..n).filter(|&b| t.element_order(b) == 4) {
            let bi = t.inv(b);
            let rel = [a, bi, a, bi, a, b].iter().fold(t.identity(), |g, &x| t.mul(g, x));
            if rel == t.identity() && generated(t, &[a, b]) == n {
                return Some((a, b));
            }
        }
    }
    None
}

fn generated(t: &FiniteGroupTable, gens: &[usize]) -> usize {
    let mut seen = vec![false; t.order()];
    seen[t.identity()] = true;
    let mut stack = vec![t.identity()];
    let mut count = 1;
    while let Some(g) = stack.pop() {
        for &s in gens {
            let h = t.mul(g, s);
            if !seen[h] {
                seen[h] = true;
                count += 1;
                stack.push(h);
            }
        }
    }
    count
}

/// `SL2(ℤ/3)` as enumerated from the two-generator cell
/// `<a, b | a b a⁻¹ b a, b a b⁻¹ a b>`.
pub fn sl2_3_table() -> Result<FiniteGroupTable, WitnessError> {
    let p = Presentation::new(&["a", "b"], &["a b a^-1 b a", "b a b^-1 a b"])?;
    Ok(coset_enumerate(&p, 1000)?)
}

/// Witnesses for the groups that rule out quotients in the two-generator
/// classification: `BS(1,2)`, `ℤ/5 ⋊ ℤ`, `A4` and `SL2(ℤ/3)`.
pub fn small_group_witnesses() -> Result<Vec<Certificate>, WitnessError> {
    let mut out = Vec::new();
    let bs = BS12Engine::<BigInt>::new();
    let gs = validate_genset(&bs, &[("a", "a"), ("t", "t")])?;
    out.push(certify("BS(1,2)", &gs, &gs.word("t^-1 a t").expect("declared letters"))?);

    let z5 = Zm::with_names(5, 3, TOrder::Infinite, "a", "x")?;
    let gs = validate_genset(&z5, &[("x", "x"), ("y", "x x x a")])?;
    out.push(certify("Z/5 x| Z (s=3), y = x^3 a", &gs, &gs.word("y x y^-1").expect("declared letters"))?);

    let a4 = coset_enumerate(&Presentation::new(&["a", "b"], &["a a a", "b b", "a b a b a b"])?, 1000)?;
    let gs = validate_genset(&a4, &[("a", "a"), ("b", "b")])?;
    out.push(certify("A4", &gs, &gs.word("b a b^-1").expect("declared letters"))?);

    let sl = sl2_3_table()?;
    let (a, b) = sl2_3_pair(&sl).ok_or_else(|| WitnessError::SelectionFailed("no SL2(3) pair".into()))?;
    let gs = validate_genset(&sl, &[("a", sl.name(a)), ("b", sl.name(b))])?;
    out.push(certify("SL2(Z/3)", &gs, &gs.word("b a b^-1").expect("declared letters"))?);
    Ok(out)
}

/// Every family member of the acceptance suite plus the small groups.
pub fn all_families() -> Vec<QuotientFamily> {
    let mut v: Vec<QuotientFamily> = Z5_CASE_E_CASES.iter().map(|&m| QuotientFamily::Z5CaseE { m }).collect();
    v.extend(BSQUOT_Z_CASES.iter().map(|&n| QuotientFamily::BsQuotZ { n }));
    v.extend(BSQUOT_FINITE_CASES.iter().map(|&(n, m)| QuotientFamily::BsQuotFinite { n, m }));
    v.extend([QuotientFamily::Z7Z3, QuotientFamily::Z9Z3, QuotientFamily::S3Inv]);
    v
}

pub fn quotient_report() -> Result<Report, WitnessError> {
    let mut r = Report::new("Witness words in non-abelian quotients");
    r.header.push("each witness a w a^-1 is certified geodesic by a fresh ball; a a^-1 is not".into());
    for c in small_group_witnesses()? {
        r.blocks.push(c.block(c.group.clone()));
    }
    for family in all_families() {
        let mut b = match quotient_family_witness(family) {
            Ok(c) => c.block(family.to_string()),
            Err(e) => ReportBlock::pass_if(family.to_string(), false).line(format!("error: {e}")),
        };
        if family.outside_derivation() {
            b.lines.push("note: n != 2^m - 1; admissible, but not a quotient arising in the derivation".into());
        }
        r.blocks.push(b);
    }
    let c = qxq()?;
    r.blocks.push(c.block("Q8 x Q8"));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bad_parameters() {
        for f in [
            QuotientFamily::BsQuotZ { n: 4 },
            QuotientFamily::BsQuotFinite { n: 7, m: 3 },
            QuotientFamily::BsQuotFinite { n: 15, m: 5 },
            QuotientFamily::Z5CaseE { m: 0 },
        ] {
            assert!(matches!(quotient_family_witness(f), Err(WitnessError::BadParams(_))), "{f}");
        }
        assert!(QuotientFamily::BsQuotFinite { n: 5, m: 4 }.outside_derivation());
        assert!(!QuotientFamily::BsQuotFinite { n: 15, m: 4 }.outside_derivation());
        assert!(!QuotientFamily::BsQuotFinite { n: 31, m: 5 }.outside_derivation());
    }

    #[test]
    fn z5_case_e_distance() {
        let c = quotient_family_witness(QuotientFamily::Z5CaseE { m: 1 }).unwrap();
        assert_eq!(c.witness_text(), "u v u^-1");
        assert_eq!(c.distance, 3);
    }
}
