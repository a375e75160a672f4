use std::marker::PhantomData;

use super::{FiniteGroupTable, GroupEngine, GroupError};
use crate::scalar::{residue, Coord};
use crate::words::{Alphabet, Letter};

/// `(h, v)` in `H ⋊ ℤʳ`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtElem<T> {
    pub h: usize,
    pub v: Vec<T>,
}

/// Split extension `H ⋊ ℤʳ` where basis vector `k` acts on `H` by the
/// automorphism `σ_k`: `t_k h t_k⁻¹ = σ_k(h)`.
///
/// Builtin letters: the non-identity elements of `H` under their table names,
/// then `t, t^-1` (for `r = 1`) or `t1, t1^-1, …, tr, tr^-1`.
#[derive(Debug, Clone)]
pub struct ExtensionEngine<T> {
    h: FiniteGroupTable,
    /// `powers[k][e][x] = σ_k^e(x)` for `e` below the order of `σ_k`
    powers: Vec<Vec<Vec<usize>>>,
    alphabet: Alphabet,
    _scalar: PhantomData<T>,
}

impl<T: Coord> ExtensionEngine<T> {
    /// `actions[k]` is the permutation of `H`'s element indices induced by
    /// `σ_k`; each must be an automorphism and they must pairwise commute.
    pub fn new(h: FiniteGroupTable, actions: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let r = actions.len();
        if r == 0 {
            return Err(GroupError::InvalidParams("extension rank must be positive".into()));
        }
        for (k, sigma) in actions.iter().enumerate() {
            if !h.is_automorphism(sigma) {
                return Err(GroupError::InvalidParams(format!("action {} is not an automorphism", k + 1)));
            }
        }
        for s1 in &actions {
            for s2 in &actions {
                if (0..h.order()).any(|x| s1[s2[x]] != s2[s1[x]]) {
                    return Err(GroupError::InvalidParams("actions do not commute".into()));
                }
            }
        }
        let identity: Vec<usize> = (0..h.order()).collect();
        let powers = actions
            .iter()
            .map(|sigma| {
                let mut cycle = vec![identity.clone()];
                loop {
                    let next: Vec<usize> = cycle.last().expect("non-empty").iter().map(|&x| sigma[x]).collect();
                    if next == identity {
                        break cycle;
                    }
                    cycle.push(next);
                }
            })
            .collect();
        let hl = h.builtin();
        let mut names: Vec<String> = hl.letters().map(|l| hl.name(l).to_string()).collect();
        let mut inverses: Vec<usize> = hl.letters().map(|l| hl.inverse(l).index()).collect();
        for k in 1..=r {
            let t = if r == 1 { "t".to_string() } else { format!("t{k}") };
            let base = names.len();
            names.push(t.clone());
            names.push(format!("{t}^-1"));
            inverses.push(base + 1);
            inverses.push(base);
        }
        let alphabet = Alphabet::from_parts(names, inverses)?;
        Ok(Self { h, powers, alphabet, _scalar: PhantomData })
    }

    /// `H × ℤʳ`.
    pub fn trivial(h: FiniteGroupTable, r: usize) -> Result<Self, GroupError> {
        let id: Vec<usize> = (0..h.order()).collect();
        Self::new(h, vec![id; r])
    }

    pub fn fiber(&self) -> &FiniteGroupTable {
        &self.h
    }

    pub fn rank(&self) -> usize {
        self.powers.len()
    }

    /// Letter of `t_k` (0-based `k`).
    pub fn t_letter(&self, k: usize) -> Letter {
        Letter((self.h.order() - 1 + 2 * k) as u16)
    }

    /// `σ^v(x)`.
    fn act_on(&self, v: &[T], x: usize) -> usize {
        self.powers.iter().zip(v).fold(x, |x, (cycle, e)| cycle[residue(e, cycle.len() as u64)][x])
    }
}

impl<T: Coord> GroupEngine for ExtensionEngine<T> {
    type Elem = ExtElem<T>;

    fn identity(&self) -> ExtElem<T> {
        ExtElem { h: self.h.identity(), v: vec![T::zero(); self.rank()] }
    }

    fn multiply(&self, lhs: &ExtElem<T>, rhs: &ExtElem<T>) -> ExtElem<T> {
        // (h, v)(h', v') = (h σ^v(h'), v + v')
        let h = self.h.mul(lhs.h, self.act_on(&lhs.v, rhs.h));
        ExtElem { h, v: lhs.v.iter().zip(&rhs.v).map(|(a, b)| a.clone() + b.clone()).collect() }
    }

    fn inverse(&self, g: &ExtElem<T>) -> ExtElem<T> {
        // (h, v)^{-1} = (σ^{-v}(h^{-1}), -v)
        let v: Vec<T> = g.v.iter().map(|c| -c.clone()).collect();
        ExtElem { h: self.act_on(&v, self.h.inv(g.h)), v }
    }

    fn builtin(&self) -> &Alphabet {
        &self.alphabet
    }

    fn builtin_element(&self, letter: Letter) -> ExtElem<T> {
        let hl = self.h.builtin().len();
        let i = letter.index();
        let mut g = self.identity();
        if i < hl {
            g.h = self.h.builtin_element(letter);
        } else {
            let k = (i - hl) / 2;
            g.v[k] = if (i - hl).is_multiple_of(2) { T::one() } else { -T::one() };
        }
        g
    }

    fn key(&self, g: &ExtElem<T>) -> String {
        let v: Vec<String> = g.v.iter().map(ToString::to_string).collect();
        format!("({};{})", self.h.name(g.h), v.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::evaluate_text;

    #[test]
    fn inversion_action() {
        let c3 = FiniteGroupTable::cyclic(3);
        let swap = vec![0, 2, 1];
        let e = ExtensionEngine::<i64>::new(c3, vec![swap]).unwrap();
        assert_eq!(evaluate_text(&e, "t g t^-1").unwrap(), evaluate_text(&e, "g^2").unwrap());
        let g = evaluate_text(&e, "g t g t^-1 t^-1").unwrap();
        assert_eq!(e.multiply(&g, &e.inverse(&g)), e.identity());
        assert_eq!(e.key(&g), "(1;-1)");
    }

    #[test]
    fn rejects_bad_actions() {
        assert!(ExtensionEngine::<i64>::new(FiniteGroupTable::cyclic(3), vec![vec![0, 2, 2]]).is_err());
        assert!(ExtensionEngine::<i64>::new(FiniteGroupTable::cyclic(3), vec![vec![1, 0, 2]]).is_err());
        // S3: conjugation by two different transpositions does not commute
        let s3 = FiniteGroupTable::from_permutations(&[("a", vec![1, 0, 2]), ("b", vec![0, 2, 1])]).unwrap();
        let conj = |x: usize| -> Vec<usize> { (0..6).map(|g| s3.mul(s3.mul(x, g), s3.inv(x))).collect() };
        let (a, b) = (s3.element("a").unwrap(), s3.element("b").unwrap());
        assert!(ExtensionEngine::<i64>::new(s3.clone(), vec![conj(a), conj(b)]).is_err());
        let ca = conj(a);
        assert!(ExtensionEngine::<i64>::new(s3, vec![ca]).is_ok());
    }

    #[test]
    fn letters_for_rank_two() {
        let e = ExtensionEngine::<i64>::trivial(FiniteGroupTable::cyclic(2), 2).unwrap();
        let names: Vec<&str> = e.builtin().letters().map(|l| e.builtin().name(l)).collect();
        assert_eq!(names, ["g", "t1", "t1^-1", "t2", "t2^-1"]);
        assert_eq!(e.t_letter(1), Letter(3));
    }
}
