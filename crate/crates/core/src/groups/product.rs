use super::{FiniteGroupTable, GroupEngine, GroupError};
use crate::words::{Alphabet, Letter};

/// Direct product with componentwise arithmetic. Builtin letters are those
/// of the first factor suffixed `_1`, then those of the second suffixed `_2`.
#[derive(Debug, Clone)]
pub struct ProductEngine<A, B> {
    left: A,
    right: B,
    alphabet: Alphabet,
}

impl<A: GroupEngine, B: GroupEngine> ProductEngine<A, B> {
    pub fn new(left: A, right: B) -> Result<Self, GroupError> {
        let (la, ra) = (left.builtin(), right.builtin());
        let mut names = Vec::new();
        let mut inverses = Vec::new();
        for l in la.letters() {
            names.push(format!("{}_1", la.name(l)));
            inverses.push(la.inverse(l).index());
        }
        for l in ra.letters() {
            names.push(format!("{}_2", ra.name(l)));
            inverses.push(la.len() + ra.inverse(l).index());
        }
        let alphabet = Alphabet::from_parts(names, inverses)?;
        Ok(Self { left, right, alphabet })
    }

    pub fn left(&self) -> &A {
        &self.left
    }

    pub fn right(&self) -> &B {
        &self.right
    }
}

impl<A: GroupEngine, B: GroupEngine> GroupEngine for ProductEngine<A, B> {
    type Elem = (A::Elem, B::Elem);

    fn identity(&self) -> Self::Elem {
        (self.left.identity(), self.right.identity())
    }

    fn multiply(&self, lhs: &Self::Elem, rhs: &Self::Elem) -> Self::Elem {
        (self.left.multiply(&lhs.0, &rhs.0), self.right.multiply(&lhs.1, &rhs.1))
    }

    fn inverse(&self, g: &Self::Elem) -> Self::Elem {
        (self.left.inverse(&g.0), self.right.inverse(&g.1))
    }

    fn builtin(&self) -> &Alphabet {
        &self.alphabet
    }

    fn builtin_element(&self, letter: Letter) -> Self::Elem {
        let split = self.left.builtin().len();
        let i = letter.index();
        if i < split {
            (self.left.builtin_element(letter), self.right.identity())
        } else {
            (self.left.identity(), self.right.builtin_element(Letter((i - split) as u16)))
        }
    }

    fn key(&self, g: &Self::Elem) -> String {
        format!("({},{})", self.left.key(&g.0), self.right.key(&g.1))
    }

    fn order(&self) -> Option<usize> {
        Some(self.left.order()? * self.right.order()?)
    }
}

/// Componentwise table of `t1 × t2`; element `(x, y)` has index
/// `x·|t2| + y` and name `(x,y)`.
pub fn direct_product(t1: &FiniteGroupTable, t2: &FiniteGroupTable) -> FiniteGroupTable {
    let (n1, n2) = (t1.order(), t2.order());
    let n = n1 * n2;
    let mult = (0..n)
        .map(|a| (0..n).map(|b| t1.mul(a / n2, b / n2) * n2 + t2.mul(a % n2, b % n2)).collect())
        .collect();
    let names = (0..n).map(|a| format!("({},{})", t1.name(a / n2), t2.name(a % n2))).collect();
    FiniteGroupTable::new(mult, Some(names)).expect("product of groups is a group")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{evaluate_text, fingerprint};

    #[test]
    fn quaternion_square() {
        let q = FiniteGroupTable::quaternion();
        let qq = direct_product(&q, &q);
        assert_eq!(qq.order(), 64);
        assert_eq!(fingerprint(&qq).center_order, 4);
        let a = qq.element("(i,1)").unwrap();
        let b = qq.element("(j,k)").unwrap();
        assert_eq!(qq.name(qq.mul(a, b)), "(k,k)");
    }

    #[test]
    fn engine_letters() {
        let p = ProductEngine::new(FiniteGroupTable::cyclic(2), FiniteGroupTable::cyclic(3)).unwrap();
        let names: Vec<&str> = p.builtin().letters().map(|l| p.builtin().name(l)).collect();
        assert_eq!(names, ["g_1", "g_2", "g^2_2"]);
        let g = evaluate_text(&p, "g_1 g_2 g_2 g_2").unwrap();
        assert_eq!(p.key(&g), "(g,1)");
        assert_eq!(p.order(), Some(6));
    }
}
