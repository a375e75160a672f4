use std::marker::PhantomData;

use super::{GroupEngine, GroupError, NormalForm};
use crate::scalar::Coord;
use crate::words::{Alphabet, Letter, Word};

/// The involution of `ℤⁿ` that `y` conjugates by (0-based coordinates).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phi {
    /// `x_i ↦ x_i⁻¹`, all other coordinates fixed.
    Invert(usize),
    /// `x_i ↔ x_j`, all other coordinates fixed.
    Swap(usize, usize),
}

impl Phi {
    pub fn apply<T: Coord>(&self, v: &mut [T]) {
        match *self {
            Phi::Invert(i) => v[i] = -v[i].clone(),
            Phi::Swap(i, j) => v.swap(i, j),
        }
    }

    /// Parses `invert i` or `swap i j` with 1-based indices.
    pub fn parse(text: &str) -> Option<Phi> {
        let toks: Vec<&str> = text.split_whitespace().collect();
        let idx = |s: &str| s.parse::<usize>().ok().filter(|&i| i > 0).map(|i| i - 1);
        match toks.as_slice() {
            ["invert", i] => Some(Phi::Invert(idx(i)?)),
            ["swap", i, j] => Some(Phi::Swap(idx(i)?, idx(j)?)),
            _ => None,
        }
    }
}

/// Normal form `x_1^{m_1} ⋯ x_n^{m_n} y^ε`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ZnC2Elem<T> {
    pub coords: Vec<T>,
    pub flip: bool,
}

/// `ℤⁿ ⋊_φ ℤ/2` with `y·x_k = φ(x_k)·y`.
///
/// Builtin letters: `x1, x1^-1, …, xn, xn^-1, y` (`y` self-inverse).
#[derive(Debug, Clone)]
pub struct ZnC2Engine<T> {
    rank: usize,
    phi: Phi,
    alphabet: Alphabet,
    _scalar: PhantomData<T>,
}

impl<T: Coord> ZnC2Engine<T> {
    pub fn new(rank: usize, phi: Phi) -> Result<Self, GroupError> {
        let ok = match phi {
            Phi::Invert(i) => i < rank,
            Phi::Swap(i, j) => i < rank && j < rank && i != j,
        };
        if !ok || rank == 0 {
            return Err(GroupError::InvalidParams(format!("{phi:?} is not an involution of Z^{rank}")));
        }
        let mut alphabet = Alphabet::new();
        for k in 1..=rank {
            alphabet.push_pair(&format!("x{k}"), &format!("x{k}^-1"))?;
        }
        alphabet.push_involution("y")?;
        Ok(Self { rank, phi, alphabet, _scalar: PhantomData })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn phi(&self) -> Phi {
        self.phi
    }

    pub fn elem(&self, coords: &[i64], flip: bool) -> ZnC2Elem<T> {
        assert_eq!(coords.len(), self.rank);
        ZnC2Elem { coords: coords.iter().map(|&c| T::from_i64_exact(c)).collect(), flip }
    }

    pub fn x(&self, k: usize) -> Letter {
        Letter((2 * k) as u16)
    }

    pub fn y(&self) -> Letter {
        Letter((2 * self.rank) as u16)
    }
}

impl<T: Coord> GroupEngine for ZnC2Engine<T> {
    type Elem = ZnC2Elem<T>;

    fn identity(&self) -> ZnC2Elem<T> {
        ZnC2Elem { coords: vec![T::zero(); self.rank], flip: false }
    }

    fn multiply(&self, lhs: &ZnC2Elem<T>, rhs: &ZnC2Elem<T>) -> ZnC2Elem<T> {
        let mut moved = rhs.coords.clone();
        if lhs.flip {
            self.phi.apply(&mut moved);
        }
        let coords = lhs.coords.iter().zip(moved).map(|(a, b)| a.clone() + b).collect();
        ZnC2Elem { coords, flip: lhs.flip ^ rhs.flip }
    }

    fn inverse(&self, g: &ZnC2Elem<T>) -> ZnC2Elem<T> {
        // (m, e)^{-1} = (-φ^e(m), e)
        let mut coords: Vec<T> = g.coords.iter().map(|c| -c.clone()).collect();
        if g.flip {
            self.phi.apply(&mut coords);
        }
        ZnC2Elem { coords, flip: g.flip }
    }

    fn builtin(&self) -> &Alphabet {
        &self.alphabet
    }

    fn builtin_element(&self, letter: Letter) -> ZnC2Elem<T> {
        let mut g = self.identity();
        let i = letter.index();
        if i == 2 * self.rank {
            g.flip = true;
        } else {
            g.coords[i / 2] = if i.is_multiple_of(2) { T::one() } else { -T::one() };
        }
        g
    }

    fn key(&self, g: &ZnC2Elem<T>) -> String {
        let c: Vec<String> = g.coords.iter().map(ToString::to_string).collect();
        format!("({};{})", c.join(","), u8::from(g.flip))
    }
}

impl<T: Coord> NormalForm for ZnC2Engine<T> {
    fn normal_form(&self, g: &ZnC2Elem<T>) -> Word {
        let mut letters = Vec::new();
        for (k, m) in g.coords.iter().enumerate() {
            let l = if m.is_negative() { Letter(self.x(k).0 + 1) } else { self.x(k) };
            let count = m.abs().to_usize().expect("coordinate fits in usize");
            letters.extend(std::iter::repeat_n(l, count));
        }
        if g.flip {
            letters.push(self.y());
        }
        Word(letters)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::evaluate_text;

    #[test]
    fn defining_action() {
        let e = ZnC2Engine::<i64>::new(1, Phi::Invert(0)).unwrap();
        assert_eq!(evaluate_text(&e, "y x1").unwrap(), e.elem(&[-1], true));
        assert_eq!(e.normal_form(&evaluate_text(&e, "y x1").unwrap()), e.builtin().word("x1^-1 y").unwrap());
        assert_eq!(evaluate_text(&e, "y y").unwrap(), e.identity());
    }

    #[test]
    fn swap_action() {
        let e = ZnC2Engine::<i64>::new(3, Phi::Swap(0, 2)).unwrap();
        assert_eq!(evaluate_text(&e, "y x1 y").unwrap(), evaluate_text(&e, "x3").unwrap());
        assert_eq!(evaluate_text(&e, "y x2 y").unwrap(), evaluate_text(&e, "x2").unwrap());
        assert!(ZnC2Engine::<i64>::new(2, Phi::Swap(1, 1)).is_err());
        assert!(ZnC2Engine::<i64>::new(1, Phi::Invert(1)).is_err());
    }

    #[test]
    fn parse_phi() {
        assert_eq!(Phi::parse("invert 1"), Some(Phi::Invert(0)));
        assert_eq!(Phi::parse("swap 1 2"), Some(Phi::Swap(0, 1)));
        assert_eq!(Phi::parse("swap 0 2"), None);
        assert_eq!(Phi::parse("rotate 1"), None);
    }
}
