use std::fmt;
use std::marker::PhantomData;

use super::{GroupEngine, NormalForm};
use crate::scalar::{pow2, Coord};
use crate::words::{Alphabet, Letter, Word};

/// An exact dyadic rational `num / 2^den_exp`, kept reduced (`num` odd
/// whenever `den_exp > 0`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dyadic<T> {
    num: T,
    den_exp: u32,
}

impl<T: Coord> Dyadic<T> {
    pub fn new(num: T, den_exp: u32) -> Self {
        let mut d = Self { num, den_exp };
        d.reduce();
        d
    }

    pub fn integer(n: T) -> Self {
        Self { num: n, den_exp: 0 }
    }

    fn reduce(&mut self) {
        let two = T::two();
        if self.num.is_zero() {
            self.den_exp = 0;
            return;
        }
        while self.den_exp > 0 && self.num.is_even() {
            self.num = self.num.clone() / two.clone();
            self.den_exp -= 1;
        }
    }

    pub fn numerator(&self) -> &T {
        &self.num
    }

    pub fn den_exp(&self) -> u32 {
        self.den_exp
    }

    pub fn add(&self, other: &Self) -> Self {
        let k = self.den_exp.max(other.den_exp);
        let a = self.num.clone() * pow2::<T>(k - self.den_exp);
        let b = other.num.clone() * pow2::<T>(k - other.den_exp);
        Self::new(a + b, k)
    }

    pub fn neg(&self) -> Self {
        Self { num: -self.num.clone(), den_exp: self.den_exp }
    }

    /// Multiplies by `2^e` for any integer `e`.
    pub fn scale(&self, e: i64) -> Self {
        if e >= 0 {
            Self::new(self.num.clone() * pow2::<T>(e as u32), self.den_exp)
        } else {
            Self::new(self.num.clone(), self.den_exp + (-e) as u32)
        }
    }
}

impl<T: Coord> fmt::Display for Dyadic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den_exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/2^{}", self.num, self.den_exp)
        }
    }
}

/// The affine map `x ↦ 2^scale_exp · x + shift`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Affine<T> {
    pub scale_exp: i64,
    pub shift: Dyadic<T>,
}

/// `BS(1,2) = ⟨a, t | t a t⁻¹ = a²⟩` as affine maps of the dyadic line,
/// `a ↦ x + 1`, `t ↦ 2x`. Products compose as maps: `(g·h)(x) = g(h(x))`.
#[derive(Debug, Clone)]
pub struct BS12Engine<T> {
    alphabet: Alphabet,
    _scalar: PhantomData<T>,
}

impl<T: Coord> Default for BS12Engine<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Coord> BS12Engine<T> {
    pub fn new() -> Self {
        let mut alphabet = Alphabet::new();
        alphabet.push_pair("a", "a^-1").expect("fresh");
        alphabet.push_pair("t", "t^-1").expect("fresh");
        Self { alphabet, _scalar: PhantomData }
    }

    pub fn affine(&self, scale_exp: i64, num: i64, den_exp: u32) -> Affine<T> {
        Affine { scale_exp, shift: Dyadic::new(T::from_i64_exact(num), den_exp) }
    }
}

impl<T: Coord> GroupEngine for BS12Engine<T> {
    type Elem = Affine<T>;

    fn identity(&self) -> Affine<T> {
        Affine { scale_exp: 0, shift: Dyadic::integer(T::zero()) }
    }

    fn multiply(&self, lhs: &Affine<T>, rhs: &Affine<T>) -> Affine<T> {
        Affine { scale_exp: lhs.scale_exp + rhs.scale_exp, shift: rhs.shift.scale(lhs.scale_exp).add(&lhs.shift) }
    }

    fn inverse(&self, g: &Affine<T>) -> Affine<T> {
        Affine { scale_exp: -g.scale_exp, shift: g.shift.scale(-g.scale_exp).neg() }
    }

    fn builtin(&self) -> &Alphabet {
        &self.alphabet
    }

    fn builtin_element(&self, letter: Letter) -> Affine<T> {
        match letter.0 {
            0 => self.affine(0, 1, 0),
            1 => self.affine(0, -1, 0),
            2 => self.affine(1, 0, 0),
            3 => self.affine(-1, 0, 0),
            _ => panic!("BS(1,2) has four builtin letters"),
        }
    }

    fn key(&self, g: &Affine<T>) -> String {
        format!("({},{})", g.scale_exp, g.shift)
    }
}

impl<T: Coord> NormalForm for BS12Engine<T> {
    /// `t^{-i} a^n t^j` with `i, j ≥ 0` and `n` odd whenever `i, j > 0`.
    fn normal_form(&self, g: &Affine<T>) -> Word {
        // t^{-i} a^n t^j maps x to 2^{j-i} x + n / 2^i
        let i = (g.shift.den_exp() as i64).max(-g.scale_exp);
        let j = g.scale_exp + i;
        let n = g.shift.scale(i);
        debug_assert_eq!(n.den_exp(), 0);
        let n = n.numerator().clone();
        let count = n.abs().to_usize().expect("exponent fits in usize");
        let a = if n.is_negative() { Letter(1) } else { Letter(0) };
        let mut letters = vec![Letter(3); i as usize];
        letters.extend(std::iter::repeat_n(a, count));
        letters.extend(std::iter::repeat_n(Letter(2), j as usize));
        Word(letters)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{evaluate, evaluate_text};
    use num_bigint::BigInt;

    #[test]
    fn defining_relation() {
        let e = BS12Engine::<BigInt>::new();
        assert_eq!(evaluate_text(&e, "t a t^-1").unwrap(), evaluate_text(&e, "a a").unwrap());
        let g = evaluate_text(&e, "t^-1 a t").unwrap();
        assert_eq!(g, e.affine(0, 1, 1));
        assert_eq!(e.normal_form(&g), e.builtin().word("t^-1 a t").unwrap());
    }

    #[test]
    fn normal_form_roundtrip_small() {
        let e = BS12Engine::<i64>::new();
        for text in ["", "a", "t", "t^-1 a^-1 a^-1 a^-1 t t", "t t a t^-1", "a t^-1 a t^-1 a", "t^-1 t^-1 a a"] {
            let g = evaluate_text(&e, text).unwrap();
            let nf = e.normal_form(&g);
            assert_eq!(evaluate(&e, &nf), g, "{text}");
        }
    }

    #[test]
    fn dyadic_arith() {
        let h = Dyadic::<i64>::new(6, 2);
        assert_eq!((h.numerator(), h.den_exp()), (&3, 1));
        assert_eq!(h.add(&Dyadic::new(1, 1)), Dyadic::integer(2));
        assert_eq!(h.scale(1), Dyadic::integer(3));
        assert_eq!(Dyadic::<i64>::new(0, 5), Dyadic::integer(0));
    }
}
