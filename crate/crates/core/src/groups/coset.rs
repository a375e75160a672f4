//! Todd–Coxeter coset enumeration over the trivial subgroup (HLT strategy
//! with coincidence processing and a hard cap on defined cosets).

use std::collections::VecDeque;

use super::table::spelling_names;
use super::{FiniteGroupTable, GroupError};
use crate::words::{Alphabet, Letter, Word};

/// A finite presentation. Generators are always paired with formal inverse
/// letters `x^-1`, declared immediately after `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    alphabet: Alphabet,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: &[&str], relators: &[&str]) -> Result<Self, GroupError> {
        let mut alphabet = Alphabet::new();
        for g in generators {
            alphabet.push_pair(g, &format!("{g}^-1"))?;
        }
        let relators = relators.iter().map(|r| alphabet.word(r)).collect::<Result<Vec<_>, _>>()?;
        Self::from_parts(alphabet, relators)
    }

    pub fn from_parts(alphabet: Alphabet, relators: Vec<Word>) -> Result<Self, GroupError> {
        if alphabet.letters().any(|l| alphabet.inverse(l) == l) {
            return Err(GroupError::InvalidParams("presentation generators need distinct inverse letters".into()));
        }
        if relators.iter().any(Word::is_empty) {
            return Err(GroupError::InvalidParams("relators must be non-empty".into()));
        }
        Ok(Self { alphabet, relators })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// The declared generators (every other letter).
    pub fn generators(&self) -> impl Iterator<Item = Letter> + '_ {
        self.alphabet.letters().step_by(2)
    }
}

/// Coset table state of an HLT run.
#[derive(Debug, Clone)]
pub struct CosetEnumerator {
    ncols: usize,
    relators: Vec<Vec<usize>>,
    table: Vec<Vec<Option<usize>>>,
    parent: Vec<usize>,
    cap: usize,
}

/// Snapshot of a run that hit the cap: every defined entry is a correct
/// consequence of the relators, so distinct live cosets are never *fewer*
/// than distinct group elements.
#[derive(Debug, Clone)]
pub struct PartialCosetTable {
    pub cap: usize,
    rows: Vec<Vec<Option<usize>>>,
}

impl PartialCosetTable {
    /// Sphere sizes around the identity coset, or `None` if some entry
    /// needed to reach radius `radius` is still undefined.
    pub fn sphere_sizes(&self, radius: usize) -> Option<Vec<usize>> {
        let mut dist = vec![usize::MAX; self.rows.len()];
        dist[0] = 0;
        let mut frontier = vec![0];
        let mut sizes = vec![1];
        for r in 0..radius {
            let mut next = Vec::new();
            for &c in &frontier {
                for &e in &self.rows[c] {
                    let d = e?;
                    if dist[d] == usize::MAX {
                        dist[d] = r + 1;
                        next.push(d);
                    }
                }
            }
            sizes.push(next.len());
            frontier = next;
        }
        Some(sizes)
    }
}

enum Step {
    Done,
    Cap,
}

impl CosetEnumerator {
    pub fn new(p: &Presentation, cap: usize) -> Self {
        let relators = p.relators.iter().map(|r| r.letters().iter().map(|l| l.index()).collect()).collect();
        let ncols = p.alphabet.len();
        Self { ncols, relators, table: vec![vec![None; ncols]], parent: vec![0], cap }
    }

    fn inv_col(c: usize) -> usize {
        c ^ 1
    }

    fn rep(&mut self, mut c: usize) -> usize {
        let mut root = c;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[c] != root {
            let next = self.parent[c];
            self.parent[c] = root;
            c = next;
        }
        root
    }

    fn is_live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn define(&mut self, c: usize, x: usize) -> Result<usize, Step> {
        if self.table.len() >= self.cap {
            return Err(Step::Cap);
        }
        let d = self.table.len();
        self.table.push(vec![None; self.ncols]);
        self.parent.push(d);
        self.table[c][x] = Some(d);
        self.table[d][Self::inv_col(x)] = Some(c);
        Ok(d)
    }

    fn scan_and_fill(&mut self, c: usize, r: usize) -> Result<(), Step> {
        let w = self.relators[r].clone();
        let (mut f, mut b) = (c, c);
        let mut i = 0usize;
        let mut j = w.len() as isize - 1;
        loop {
            while (i as isize) <= j {
                match self.table[f][w[i]] {
                    Some(n) => {
                        f = n;
                        i += 1;
                    }
                    None => break,
                }
            }
            if (i as isize) > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i as isize {
                match self.table[b][Self::inv_col(w[j as usize])] {
                    Some(n) => {
                        b = n;
                        j -= 1;
                    }
                    None => break,
                }
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i as isize {
                self.table[f][w[i]] = Some(b);
                self.table[b][Self::inv_col(w[i])] = Some(f);
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }

    fn merge(&mut self, k: usize, l: usize, queue: &mut VecDeque<usize>) {
        let (k, l) = (self.rep(k), self.rep(l));
        if k == l {
            return;
        }
        let (keep, kill) = (k.min(l), k.max(l));
        self.parent[kill] = keep;
        queue.push_back(kill);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = VecDeque::new();
        self.merge(a, b, &mut queue);
        while let Some(g) = queue.pop_front() {
            for x in 0..self.ncols {
                let Some(d) = self.table[g][x] else { continue };
                self.table[d][Self::inv_col(x)] = None;
                let mu = self.rep(g);
                let nu = self.rep(d);
                if let Some(e) = self.table[mu][x] {
                    self.merge(nu, e, &mut queue);
                } else if let Some(e) = self.table[nu][Self::inv_col(x)] {
                    self.merge(mu, e, &mut queue);
                } else {
                    self.table[mu][x] = Some(nu);
                    self.table[nu][Self::inv_col(x)] = Some(mu);
                }
            }
        }
    }

    fn run(&mut self) -> Step {
        let mut c = 0;
        while c < self.table.len() {
            if self.is_live(c) {
                for r in 0..self.relators.len() {
                    if let Err(s) = self.scan_and_fill(c, r) {
                        return s;
                    }
                    if !self.is_live(c) {
                        break;
                    }
                }
                if self.is_live(c) {
                    for x in 0..self.ncols {
                        if self.table[c][x].is_none() {
                            if let Err(s) = self.define(c, x) {
                                return s;
                            }
                        }
                    }
                }
            }
            c += 1;
        }
        Step::Done
    }

    /// Live cosets renumbered in BFS order from the identity coset.
    fn compact(&mut self) -> (Vec<Vec<Option<usize>>>, Vec<Vec<Letter>>) {
        let mut new_index = vec![usize::MAX; self.table.len()];
        let mut order = vec![self.rep(0)];
        let mut spelling = vec![Vec::new()];
        new_index[order[0]] = 0;
        let mut i = 0;
        while i < order.len() {
            let c = order[i];
            for x in 0..self.ncols {
                if let Some(d) = self.table[c][x] {
                    let d = self.rep(d);
                    if new_index[d] == usize::MAX {
                        new_index[d] = order.len();
                        order.push(d);
                        let mut w = spelling[i].clone();
                        w.push(Letter(x as u16));
                        spelling.push(w);
                    }
                }
            }
            i += 1;
        }
        let rows = order
            .iter()
            .map(|&c| {
                (0..self.ncols)
                    .map(|x| {
                        let d = self.table[c][x]?;
                        let d = self.rep(d);
                        Some(new_index[d])
                    })
                    .collect()
            })
            .collect();
        (rows, spelling)
    }

    /// Runs to completion or to the cap.
    pub fn enumerate(mut self, p: &Presentation) -> Result<FiniteGroupTable, (GroupError, PartialCosetTable)> {
        match self.run() {
            Step::Cap => {
                let cap = self.cap;
                let (rows, _) = self.compact();
                Err((GroupError::CapExceeded(cap), PartialCosetTable { cap, rows }))
            }
            Step::Done => {
                let (rows, spelling) = self.compact();
                let n = rows.len();
                let names = spelling_names(&p.alphabet, &spelling);
                let trace = |start: usize, w: &[Letter]| {
                    w.iter().fold(start, |c, l| rows[c][l.index()].expect("complete coset table"))
                };
                let mult: Vec<Vec<usize>> = (0..n).map(|g| (0..n).map(|h| trace(g, &spelling[h])).collect()).collect();
                Ok(FiniteGroupTable::new(mult, Some(names)).expect("coset table of a group is a valid group table"))
            }
        }
    }
}

/// Todd–Coxeter over the trivial subgroup. On completion the result is the
/// regular representation with elements named by shortlex-least words.
pub fn coset_enumerate(p: &Presentation, max_cosets: usize) -> Result<FiniteGroupTable, GroupError> {
    CosetEnumerator::new(p, max_cosets).enumerate(p).map_err(|(e, _)| e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::GroupEngine;

    #[test]
    fn quaternion_presentations() {
        let p = Presentation::new(&["i", "j", "k"], &["i j k^-1", "j k i^-1", "k i j^-1", "i i i i"]).unwrap();
        let t = coset_enumerate(&p, 1000).unwrap();
        assert_eq!(t.order(), 8);
        let p = Presentation::new(&["a", "b"], &["a b a^-1 b", "b a b^-1 a"]).unwrap();
        assert_eq!(coset_enumerate(&p, 1000).unwrap().order(), 8);
    }

    #[test]
    fn names_are_shortlex_and_identity_first() {
        let p = Presentation::new(&["a", "b"], &["a a", "b b", "a b a b a b"]).unwrap();
        let t = coset_enumerate(&p, 1000).unwrap();
        assert_eq!(t.order(), 6);
        assert_eq!(t.names(), &["1", "a", "b", "ab", "ba", "aba"]);
        assert_eq!(t.identity(), 0);
        // `a` is an involution, so its builtin letter is self-inverse
        let a = t.builtin().lookup("a").unwrap();
        assert_eq!(t.builtin().inverse(a), a);
    }

    #[test]
    fn infinite_hits_cap() {
        let p = Presentation::new(&["a", "t"], &["t a t^-1 a^-1 a^-1"]).unwrap();
        assert_eq!(coset_enumerate(&p, 10_000), Err(GroupError::CapExceeded(10_000)));
    }

    #[test]
    fn trivial_and_cyclic() {
        let p = Presentation::new(&["a"], &["a"]).unwrap();
        assert_eq!(coset_enumerate(&p, 10).unwrap().order(), 1);
        let p = Presentation::new(&["a"], &["a a a a a"]).unwrap();
        assert_eq!(coset_enumerate(&p, 100).unwrap().order(), 5);
    }

    #[test]
    fn deterministic() {
        let p = Presentation::new(&["a", "b"], &["a b a^-1 b a", "b a b^-1 a b"]).unwrap();
        let t1 = coset_enumerate(&p, 20_000).unwrap();
        let t2 = coset_enumerate(&p, 20_000).unwrap();
        assert_eq!(t1, t2);
        assert_eq!(t1.order(), 24);
    }
}
