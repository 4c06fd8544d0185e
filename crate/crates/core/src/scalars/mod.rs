//! Exact coefficient domains of characteristic two.
//!
//! Every domain here implements [`Field`]: addition is its own inverse, so there is no
//! subtraction or negation anywhere in the crate. The domains are
//!
//! - [`Gf2k`]: the finite fields GF(2^k) for `1 <= k <= 8`,
//! - [`Gf2Poly`]: the polynomial ring GF(2)[t] (not a field, used for numerators and denominators),
//! - [`RationalFunction`]: the rational function field K = GF(2)(t),
//! - [`Tower`]: the inseparable quadratic extension K' = K[s]/(s^2 - t).

mod gf2k;
mod literal;
mod poly;
mod rational;
mod tower;

use alloc::string::String;
use core::fmt;
use core::hash::Hash;
use core::ops::{Add, AddAssign, Mul};

pub use gf2k::{modulus, Gf2, Gf2k, Gf4, Gf8};
pub use literal::{Literal, ParseLiteralError};
pub use poly::Gf2Poly;
pub use rational::RationalFunction;
pub use tower::Tower;

/// A field of characteristic two with exact equality.
///
/// `a + a == 0` for every element, so `+` doubles as subtraction.
pub trait Field:
    Clone + Eq + Hash + fmt::Debug + fmt::Display + Add<Output = Self> + Mul<Output = Self> + AddAssign
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse; `None` exactly for zero.
    fn inv(&self) -> Option<Self>;
    /// The unique `y` with `y * y == self`, when it exists in this field.
    fn sqrt(&self) -> Option<Self>;
    /// Short name used in reports, e.g. `gf2^3`, `K`, `K'`.
    fn field_name() -> String;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// The Frobenius endomorphism `x -> x^2`.
    fn frobenius(&self) -> Self {
        self.clone() * self.clone()
    }
}

/// A finite field whose elements can be listed.
pub trait FiniteField: Field + Copy + Ord {
    const ORDER: usize;

    /// Element number `index` in a fixed enumeration order, `index < ORDER`.
    fn from_index(index: usize) -> Self;

    fn elements() -> impl Iterator<Item = Self> {
        (0..Self::ORDER).map(Self::from_index)
    }
}

/// Convenience for `x^2`.
pub fn frobenius<F: Field>(x: &F) -> F {
    x.frobenius()
}

/// Square-detection in K with a witness: `Some(c)` with `c^2 == x` or `None`.
pub fn is_square(x: &RationalFunction) -> Option<RationalFunction> {
    x.sqrt()
}
