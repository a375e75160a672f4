use std::fmt;
use std::marker::PhantomData;

use super::{GroupEngine, GroupError, NormalForm};
use crate::scalar::{residue, Coord};
use crate::words::{Alphabet, Letter, Word};

/// Order of the acting generator `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TOrder {
    Finite(u64),
    Infinite,
}

impl fmt::Display for TOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TOrder::Finite(m) => write!(f, "{m}"),
            TOrder::Infinite => f.write_str("inf"),
        }
    }
}

/// `a^a t^t` with `a` reduced mod `n` and `t` reduced mod the order of `t`
/// when finite.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ZmElem<T> {
    pub a: u64,
    pub t: T,
}

/// `ℤ/n ⋊ ℤ` or `ℤ/n ⋊ ℤ/m` with `t a t⁻¹ = a^s`.
///
/// Builtin letters are `a, a^-1, t, t^-1` (renameable, e.g. `x` for `t`).
#[derive(Debug, Clone)]
pub struct ZmSemidirectEngine<T> {
    n: u64,
    s: u64,
    t_order: TOrder,
    /// multiplicative order of `s` mod `n`
    s_period: u64,
    alphabet: Alphabet,
    _scalar: PhantomData<T>,
}

impl<T: Coord> ZmSemidirectEngine<T> {
    pub fn new(n: u64, s: u64, t_order: TOrder) -> Result<Self, GroupError> {
        Self::with_names(n, s, t_order, "a", "t")
    }

    pub fn with_names(n: u64, s: u64, t_order: TOrder, a_name: &str, t_name: &str) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::InvalidParams("modulus n must be positive".into()));
        }
        let s = s % n;
        if num_integer::gcd(s, n) != 1 && n > 1 {
            return Err(GroupError::InvalidParams(format!("gcd({s}, {n}) != 1")));
        }
        let mut s_period = 1;
        let mut acc = s % n;
        while acc != 1 % n {
            acc = acc * s % n;
            s_period += 1;
        }
        if let TOrder::Finite(m) = t_order {
            if m == 0 || m % s_period != 0 {
                return Err(GroupError::InvalidParams(format!("{s}^{m} is not 1 mod {n}")));
            }
        }
        let mut alphabet = Alphabet::new();
        alphabet.push_pair(a_name, &format!("{a_name}^-1"))?;
        alphabet.push_pair(t_name, &format!("{t_name}^-1"))?;
        Ok(Self { n, s, t_order, s_period, alphabet, _scalar: PhantomData })
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn multiplier(&self) -> u64 {
        self.s
    }

    pub fn t_order(&self) -> TOrder {
        self.t_order
    }

    pub fn elem(&self, a: i64, t: i64) -> ZmElem<T> {
        let a = a.rem_euclid(self.n as i64) as u64;
        self.reduce(ZmElem { a, t: T::from_i64_exact(t) })
    }

    fn reduce(&self, mut g: ZmElem<T>) -> ZmElem<T> {
        if let TOrder::Finite(m) = self.t_order {
            g.t = T::from_usize(residue(&g.t, m)).expect("residue fits");
        }
        g
    }

    /// `s^j mod n` for any integer `j`.
    fn s_pow(&self, j: &T) -> u64 {
        let e = residue(j, self.s_period);
        let mut out = 1 % self.n;
        for _ in 0..e {
            out = out * self.s % self.n;
        }
        out
    }
}

impl<T: Coord> GroupEngine for ZmSemidirectEngine<T> {
    type Elem = ZmElem<T>;

    fn identity(&self) -> ZmElem<T> {
        ZmElem { a: 0, t: T::zero() }
    }

    fn multiply(&self, lhs: &ZmElem<T>, rhs: &ZmElem<T>) -> ZmElem<T> {
        // (i, j)(k, l) = (i + k s^j, j + l)
        let moved = (rhs.a as u128 * self.s_pow(&lhs.t) as u128 % self.n as u128) as u64;
        self.reduce(ZmElem { a: (lhs.a + moved) % self.n, t: lhs.t.clone() + rhs.t.clone() })
    }

    fn inverse(&self, g: &ZmElem<T>) -> ZmElem<T> {
        // (i, j)^{-1} = (-i s^{-j}, -j)
        let neg_t = -g.t.clone();
        let moved = (g.a as u128 * self.s_pow(&neg_t) as u128 % self.n as u128) as u64;
        self.reduce(ZmElem { a: (self.n - moved) % self.n, t: neg_t })
    }

    fn builtin(&self) -> &Alphabet {
        &self.alphabet
    }

    fn builtin_element(&self, letter: Letter) -> ZmElem<T> {
        match letter.0 {
            0 => self.elem(1, 0),
            1 => self.elem(-1, 0),
            2 => self.elem(0, 1),
            3 => self.elem(0, -1),
            _ => panic!("semidirect engine has four builtin letters"),
        }
    }

    fn key(&self, g: &ZmElem<T>) -> String {
        format!("({},{})", g.a, g.t)
    }

    fn order(&self) -> Option<usize> {
        match self.t_order {
            TOrder::Finite(m) => usize::try_from(self.n * m).ok(),
            TOrder::Infinite => None,
        }
    }
}

impl<T: Coord> NormalForm for ZmSemidirectEngine<T> {
    /// `a^i t^j` with `0 ≤ i < n` (and `0 ≤ j < m` when `t` has order `m`).
    fn normal_form(&self, g: &ZmElem<T>) -> Word {
        let mut letters = vec![Letter(0); g.a as usize];
        let t = if g.t.is_negative() { Letter(3) } else { Letter(2) };
        letters.extend(std::iter::repeat_n(t, g.t.abs().to_usize().expect("exponent fits")));
        Word(letters)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{evaluate, evaluate_text, power};
    use num_bigint::BigInt;

    #[test]
    fn conjugation_rule() {
        let e = ZmSemidirectEngine::<BigInt>::with_names(5, 3, TOrder::Infinite, "a", "x").unwrap();
        let xa = evaluate_text(&e, "x a").unwrap();
        assert_eq!(xa, evaluate_text(&e, "a a a x").unwrap());
        assert_eq!(e.normal_form(&xa), e.builtin().word("a a a x").unwrap());
        assert_eq!(evaluate_text(&e, "x a x^-1").unwrap(), e.elem(3, 0));
    }

    #[test]
    fn finite_t_order() {
        let e = ZmSemidirectEngine::<i64>::new(9, 4, TOrder::Finite(3)).unwrap();
        let t = e.builtin_element(Letter(2));
        assert_eq!(power(&e, &t, 3), e.identity());
        assert_eq!(power(&e, &e.builtin_element(Letter(0)), 9), e.identity());
        assert_eq!(e.order(), Some(27));
        assert!(ZmSemidirectEngine::<i64>::new(9, 4, TOrder::Finite(2)).is_err());
        assert!(ZmSemidirectEngine::<i64>::new(6, 2, TOrder::Infinite).is_err());
    }

    #[test]
    fn inverse_and_normal_form() {
        let e = ZmSemidirectEngine::<i64>::new(7, 2, TOrder::Infinite).unwrap();
        for text in ["a t^-1 a a t", "t^-1 t^-1 a", "t a^-1 t^-1 t^-1", ""] {
            let g = evaluate_text(&e, text).unwrap();
            assert_eq!(e.multiply(&g, &e.inverse(&g)), e.identity());
            assert_eq!(evaluate(&e, &e.normal_form(&g)), g);
        }
    }

    #[test]
    fn trivial_modulus_is_infinite_cyclic() {
        let z = ZmSemidirectEngine::<i64>::new(1, 1, TOrder::Infinite).unwrap();
        assert_eq!(evaluate_text(&z, "a t a").unwrap(), z.elem(0, 1));
    }
}
