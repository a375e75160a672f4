use std::collections::HashMap;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{GroupEngine, GroupError};
use crate::words::{Alphabet, Letter};

/// A finite group given by its full multiplication table.
///
/// The builtin letters are the non-identity elements, named by `names`, with
/// each letter's inverse being the letter of the inverse element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupTable {
    mult: Vec<Vec<usize>>,
    inv: Vec<usize>,
    id: usize,
    names: Vec<String>,
    alphabet: Alphabet,
    letter_elems: Vec<usize>,
}

const EXHAUSTIVE_ASSOCIATIVITY: usize = 64;

impl FiniteGroupTable {
    /// Validates a table: latin square, two-sided identity, associativity
    /// (exhaustive up to order 64, sampled above).
    pub fn new(mult: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<Self, GroupError> {
        let n = mult.len();
        if n == 0 {
            return Err(GroupError::InvalidTable("empty table".into()));
        }
        for row in &mult {
            if row.len() != n || row.iter().any(|&x| x >= n) {
                return Err(GroupError::InvalidTable("rows must have length N with entries below N".into()));
            }
        }
        let id = (0..n)
            .find(|&e| (0..n).all(|x| mult[e][x] == x && mult[x][e] == x))
            .ok_or_else(|| GroupError::InvalidTable("no identity element".into()))?;
        let mut inv = vec![usize::MAX; n];
        for (x, slot) in inv.iter_mut().enumerate() {
            let y = (0..n)
                .find(|&y| mult[x][y] == id)
                .ok_or_else(|| GroupError::InvalidTable(format!("element {x} has no inverse")))?;
            if mult[y][x] != id {
                return Err(GroupError::InvalidTable(format!("inverse of {x} is one-sided")));
            }
            *slot = y;
        }
        for x in 0..n {
            let mut seen = vec![false; n];
            for y in 0..n {
                if std::mem::replace(&mut seen[mult[x][y]], true) {
                    return Err(GroupError::InvalidTable("table is not a latin square".into()));
                }
            }
        }
        let assoc = |a: usize, b: usize, c: usize| mult[mult[a][b]][c] == mult[a][mult[b][c]];
        if n <= EXHAUSTIVE_ASSOCIATIVITY {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return Err(GroupError::InvalidTable(format!("not associative at ({a},{b},{c})")));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..20_000 {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !assoc(a, b, c) {
                    return Err(GroupError::InvalidTable(format!("not associative at ({a},{b},{c})")));
                }
            }
        }
        let names = match names {
            Some(names) if names.len() == n => names,
            Some(_) => return Err(GroupError::InvalidTable("name count differs from order".into())),
            None => (0..n).map(|i| if i == id { "1".to_string() } else { format!("e{i}") }).collect(),
        };
        Self::assemble(mult, inv, id, names)
    }

    fn assemble(mult: Vec<Vec<usize>>, inv: Vec<usize>, id: usize, names: Vec<String>) -> Result<Self, GroupError> {
        let letter_elems: Vec<usize> = (0..mult.len()).filter(|&g| g != id).collect();
        let mut letter_of = vec![usize::MAX; mult.len()];
        for (l, &g) in letter_elems.iter().enumerate() {
            letter_of[g] = l;
        }
        let letter_names = letter_elems.iter().map(|&g| names[g].clone()).collect();
        let inverses = letter_elems.iter().map(|&g| letter_of[inv[g]]).collect();
        let alphabet = Alphabet::from_parts(letter_names, inverses)?;
        Ok(Self { mult, inv, id, names, alphabet, letter_elems })
    }

    /// Builds the table of the group generated by an engine's builtin letters.
    /// Elements are numbered in BFS order and named by their shortlex-least
    /// spelling over those letters.
    pub fn from_engine<E: GroupEngine + ?Sized>(engine: &E, cap: usize) -> Result<Self, GroupError> {
        let al = engine.builtin();
        let gens: Vec<E::Elem> = al.letters().map(|l| engine.builtin_element(l)).collect();
        let mut elems = vec![engine.identity()];
        let mut index: HashMap<E::Elem, usize> = HashMap::from([(engine.identity(), 0)]);
        let mut spelling: Vec<Vec<Letter>> = vec![Vec::new()];
        let mut i = 0;
        while i < elems.len() {
            for (l, s) in al.letters().zip(&gens) {
                let h = engine.multiply(&elems[i], s);
                if !index.contains_key(&h) {
                    if elems.len() >= cap {
                        return Err(GroupError::CapExceeded(cap));
                    }
                    index.insert(h.clone(), elems.len());
                    let mut w = spelling[i].clone();
                    w.push(l);
                    spelling.push(w);
                    elems.push(h);
                }
            }
            i += 1;
        }
        let n = elems.len();
        let mut mult = vec![vec![0; n]; n];
        for (a, ga) in elems.iter().enumerate() {
            for (b, gb) in elems.iter().enumerate() {
                mult[a][b] = index[&engine.multiply(ga, gb)];
            }
        }
        let inv = elems.iter().map(|g| index[&engine.inverse(g)]).collect();
        let names = spelling_names(al, &spelling);
        Self::assemble(mult, inv, 0, names)
    }

    /// The quaternion group with elements `1,-1,i,-i,j,-j,k,-k`.
    pub fn quaternion() -> Self {
        // unit index 0..4 = 1,i,j,k; element = 2*unit + sign
        let unit_mul = |x: usize, y: usize| -> (usize, bool) {
            match (x, y) {
                (0, u) | (u, 0) => (u, false),
                (a, b) if a == b => (0, true),
                (1, 2) => (3, false),
                (2, 3) => (1, false),
                (3, 1) => (2, false),
                (2, 1) => (3, true),
                (3, 2) => (1, true),
                (1, 3) => (2, true),
                _ => unreachable!(),
            }
        };
        let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].map(String::from).to_vec();
        let mut mult = vec![vec![0; 8]; 8];
        for (a, row) in mult.iter_mut().enumerate() {
            for (b, slot) in row.iter_mut().enumerate() {
                let (u, neg) = unit_mul(a / 2, b / 2);
                let sign = (a % 2 == 1) ^ (b % 2 == 1) ^ neg;
                *slot = 2 * u + usize::from(sign);
            }
        }
        Self::new(mult, Some(names)).expect("quaternion table is valid")
    }

    /// The cyclic group of order `n` with elements `1, g, g^2, …`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        let mult = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let names = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        Self::new(mult, Some(names)).expect("cyclic table is valid")
    }

    /// The group generated by permutations of `0..degree`, named over the
    /// given generator names.
    pub fn from_permutations(generators: &[(&str, Vec<usize>)]) -> Result<Self, GroupError> {
        let engine = PermutationEngine::new(generators)?;
        Self::from_engine(&engine, 100_000)
    }

    pub fn order(&self) -> usize {
        self.mult.len()
    }

    pub fn identity(&self) -> usize {
        self.id
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn element(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut k = 1;
        let mut x = g;
        while x != self.id {
            x = self.mult[x][g];
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mult[a][b] == self.mult[b][a]))
    }

    /// Whether a permutation of the elements is an automorphism.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        let n = self.order();
        perm.len() == n && {
            let mut seen = vec![false; n];
            perm.iter().all(|&p| p < n && !std::mem::replace(&mut seen[p], true))
        } && (0..n).all(|a| (0..n).all(|b| perm[self.mult[a][b]] == self.mult[perm[a]][perm[b]]))
    }

    /// `order N` followed by N rows of N indices.
    pub fn to_text(&self) -> String {
        let mut out = format!("order {}\n", self.order());
        for row in &self.mult {
            let line: Vec<String> = row.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }

    /// Reads the export format; an optional trailing `names …` line assigns
    /// element names.
    pub fn from_text(text: &str) -> Result<Self, GroupError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| GroupError::InvalidTable("missing header".into()))?;
        let n: usize = header
            .strip_prefix("order")
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| GroupError::InvalidTable(format!("bad header `{header}`")))?;
        let mut mult = Vec::with_capacity(n);
        for _ in 0..n {
            let line = lines.next().ok_or_else(|| GroupError::InvalidTable("too few rows".into()))?;
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| GroupError::InvalidTable(e.to_string()))?;
            mult.push(row);
        }
        let names = match lines.next() {
            Some(l) if l.starts_with("names") => Some(l["names".len()..].split_whitespace().map(String::from).collect()),
            Some(l) => return Err(GroupError::InvalidTable(format!("unexpected line `{l}`"))),
            None => None,
        };
        Self::new(mult, names)
    }
}

impl GroupEngine for FiniteGroupTable {
    type Elem = usize;

    fn identity(&self) -> usize {
        self.id
    }

    fn multiply(&self, lhs: &usize, rhs: &usize) -> usize {
        self.mult[*lhs][*rhs]
    }

    fn inverse(&self, g: &usize) -> usize {
        self.inv[*g]
    }

    fn builtin(&self) -> &Alphabet {
        &self.alphabet
    }

    fn builtin_element(&self, letter: Letter) -> usize {
        self.letter_elems[letter.index()]
    }

    fn key(&self, g: &usize) -> String {
        self.names[*g].clone()
    }

    fn order(&self) -> Option<usize> {
        Some(self.mult.len())
    }
}

/// Element names from shortlex spellings: letter names concatenated, `1` for
/// the identity, disambiguated by index on collision.
pub(crate) fn spelling_names(al: &Alphabet, spelling: &[Vec<Letter>]) -> Vec<String> {
    let mut used = std::collections::HashSet::new();
    spelling
        .iter()
        .enumerate()
        .map(|(i, w)| {
            let mut name = if w.is_empty() { "1".to_string() } else { w.iter().map(|&l| al.name(l)).collect::<String>() };
            if !used.insert(name.clone()) {
                name = format!("{name}#{i}");
                used.insert(name.clone());
            }
            name
        })
        .collect()
}

/// Permutations of `0..degree` composed left to right (`(p·q)(x) = q(p(x))`).
struct PermutationEngine {
    degree: usize,
    alphabet: Alphabet,
    elems: Vec<Vec<usize>>,
}

impl PermutationEngine {
    fn new(generators: &[(&str, Vec<usize>)]) -> Result<Self, GroupError> {
        let degree = generators.first().map_or(0, |g| g.1.len());
        let mut alphabet = Alphabet::new();
        let mut elems = Vec::new();
        for (name, p) in generators {
            let mut sorted = p.clone();
            sorted.sort_unstable();
            if p.len() != degree || sorted != (0..degree).collect::<Vec<_>>() {
                return Err(GroupError::InvalidParams(format!("`{name}` is not a permutation of degree {degree}")));
            }
            let inv = invert_perm(p);
            if &inv == p {
                alphabet.push_involution(name)?;
                elems.push(p.clone());
            } else {
                alphabet.push_pair(name, &format!("{name}^-1"))?;
                elems.push(p.clone());
                elems.push(inv);
            }
        }
        Ok(Self { degree, alphabet, elems })
    }
}

fn invert_perm(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

impl GroupEngine for PermutationEngine {
    type Elem = Vec<usize>;

    fn identity(&self) -> Vec<usize> {
        (0..self.degree).collect()
    }

    fn multiply(&self, lhs: &Vec<usize>, rhs: &Vec<usize>) -> Vec<usize> {
        lhs.iter().map(|&x| rhs[x]).collect()
    }

    fn inverse(&self, g: &Vec<usize>) -> Vec<usize> {
        invert_perm(g)
    }

    fn builtin(&self) -> &Alphabet {
        &self.alphabet
    }

    fn builtin_element(&self, letter: Letter) -> Vec<usize> {
        self.elems[letter.index()].clone()
    }

    fn key(&self, g: &Vec<usize>) -> String {
        format!("{g:?}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_relations() {
        let q = FiniteGroupTable::quaternion();
        let e = |n: &str| q.element(n).unwrap();
        assert_eq!(q.mul(e("i"), e("j")), e("k"));
        assert_eq!(q.mul(e("j"), e("i")), e("-k"));
        assert_eq!(q.mul(e("i"), e("i")), e("-1"));
        assert_eq!(q.element_order(e("j")), 4);
        assert!(!q.is_abelian());
    }

    #[test]
    fn text_roundtrip() {
        let s3 = FiniteGroupTable::from_permutations(&[("a", vec![1, 0, 2]), ("b", vec![0, 2, 1])]).unwrap();
        assert_eq!(s3.order(), 6);
        let back = FiniteGroupTable::from_text(&s3.to_text()).unwrap();
        assert_eq!(back.order(), 6);
        assert_eq!((0..6).map(|a| (0..6).map(|b| back.mul(a, b)).collect::<Vec<_>>()).collect::<Vec<_>>(),
                   (0..6).map(|a| (0..6).map(|b| s3.mul(a, b)).collect::<Vec<_>>()).collect::<Vec<_>>());
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(FiniteGroupTable::new(vec![vec![0, 1], vec![1, 1]], None).is_err());
        assert!(FiniteGroupTable::new(vec![vec![1, 0], vec![0, 1]], None).is_ok());
        assert!(FiniteGroupTable::new(vec![], None).is_err());
        // latin square without associativity: a loop of order 5
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(FiniteGroupTable::new(loop5, None), Err(GroupError::InvalidTable(_))));
    }

    #[test]
    fn permutation_names_are_shortlex() {
        let s3 = FiniteGroupTable::from_permutations(&[("a", vec![1, 0, 2]), ("b", vec![0, 2, 1])]).unwrap();
        assert_eq!(s3.names(), &["1", "a", "b", "ab", "ba", "aba"]);
    }
}
