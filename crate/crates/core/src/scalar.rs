//! Integer scalar abstraction for the infinite-group engines.
//!
//! Coordinates of `ℤⁿ`, exponents of the infinite cyclic factor and dyadic
//! numerators are all generic over [`Coord`]. `BigInt` gives exact arithmetic
//! with no overflow; `i64` is much faster for the bounded searches the test
//! suites run and is exact as long as coordinates stay small.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

pub trait Coord:
    Integer + Signed + Clone + Hash + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    fn from_i64_exact(v: i64) -> Self {
        Self::from_i64(v).expect("every Coord holds i64 values")
    }

    fn two() -> Self {
        Self::one() + Self::one()
    }
}

impl<T> Coord for T where
    T: Integer + Signed + Clone + Hash + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

/// `v mod m` as a `usize` in `0..m`.
pub(crate) fn residue<T: Coord>(v: &T, m: u64) -> usize {
    let m_t = T::from_u64(m).expect("modulus fits");
    v.mod_floor(&m_t).to_usize().expect("residue fits")
}

/// `2^k` in the scalar type.
pub(crate) fn pow2<T: Coord>(k: u32) -> T {
    num_traits::pow(T::two(), k as usize)
}
