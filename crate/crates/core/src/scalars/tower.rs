use alloc::string::String;
use core::fmt;
use core::ops::{Add, AddAssign, Mul};

use super::{Field, Gf2Poly, RationalFunction};

/// An element `a + b*s` of K' = K[s]/(s^2 - t).
///
/// K' is a field because `t` is not a square in K; it is purely inseparable over K, and
/// every square of K' lies in K.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tower {
    a: RationalFunction,
    b: RationalFunction,
}

impl Tower {
    pub fn new(a: RationalFunction, b: RationalFunction) -> Self {
        Self { a, b }
    }

    /// The embedding K -> K'.
    pub fn from_base(a: RationalFunction) -> Self {
        Self { a, b: RationalFunction::zero() }
    }

    /// The generator `s` with `s^2 = t`.
    pub fn s() -> Self {
        Self { a: RationalFunction::zero(), b: RationalFunction::one() }
    }

    /// `t` viewed in K'.
    pub fn t() -> Self {
        Self::from_base(RationalFunction::t())
    }

    pub fn base_part(&self) -> &RationalFunction {
        &self.a
    }

    pub fn s_part(&self) -> &RationalFunction {
        &self.b
    }

    /// The element back in K, when the `s`-coordinate vanishes.
    pub fn to_base(&self) -> Option<RationalFunction> {
        self.b.is_zero().then(|| self.a.clone())
    }

    /// `p(s)` for a polynomial `p`, using `p(s) = e(t) + s * o(t)` with `p = e(t^2) + t o(t^2)`.
    fn poly_in_s(p: &Gf2Poly) -> Self {
        let (even, odd) = p.even_odd_parts();
        Self { a: RationalFunction::from_poly(even), b: RationalFunction::from_poly(odd) }
    }

    /// Human-readable form such as `s`, `t`, `1+t^2 + (t)*s`.
    pub fn pretty(&self) -> String {
        match (self.a.is_zero(), self.b.is_zero(), self.b.is_one()) {
            (true, true, _) => String::from("0"),
            (_, true, _) => self.a.pretty(),
            (true, false, true) => String::from("s"),
            (true, false, false) => alloc::format!("({})*s", self.b.pretty()),
            (false, false, true) => alloc::format!("{} + s", self.a.pretty()),
            (false, false, false) => alloc::format!("{} + ({})*s", self.a.pretty(), self.b.pretty()),
        }
    }
}

impl Add for Tower {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { a: self.a + rhs.a, b: self.b + rhs.b }
    }
}

impl AddAssign for Tower {
    fn add_assign(&mut self, rhs: Self) {
        self.a += rhs.a;
        self.b += rhs.b;
    }
}

impl Mul for Tower {
    type Output = Self;
    /// `(a + bs)(c + ds) = (ac + bd t) + (ad + bc) s`.
    fn mul(self, rhs: Self) -> Self {
        let bd_t = self.b.clone() * rhs.b.clone() * RationalFunction::t();
        let a = self.a.clone() * rhs.a.clone() + bd_t;
        let b = self.a * rhs.b + self.b * rhs.a;
        Self { a, b }
    }
}

impl Field for Tower {
    fn zero() -> Self {
        Self::from_base(RationalFunction::zero())
    }

    fn one() -> Self {
        Self::from_base(RationalFunction::one())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn inv(&self) -> Option<Self> {
        // (a + bs)^2 = a^2 + t b^2 lies in K and vanishes only at zero
        let norm = self.a.frobenius() + RationalFunction::t() * self.b.frobenius();
        let n_inv = norm.inv()?;
        Some(Self { a: self.a.clone() * n_inv.clone(), b: self.b.clone() * n_inv })
    }

    /// Squares of K' are exactly the elements of K; for `x = p(t)/q(t)` the root is `p(s)/q(s)`.
    fn sqrt(&self) -> Option<Self> {
        if !self.b.is_zero() {
            return None;
        }
        let num = Self::poly_in_s(self.a.numerator());
        let den = Self::poly_in_s(self.a.denominator());
        Some(num * den.inv()?)
    }

    fn field_name() -> String {
        String::from("K'")
    }

    fn frobenius(&self) -> Self {
        Self::from_base(self.a.frobenius() + RationalFunction::t() * self.b.frobenius())
    }
}

/// Literal form `a + s*b` with rational-function literals.
impl fmt::Display for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + s*{}", self.a, self.b)
    }
}

impl fmt::Debug for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K'[{}]", self.pretty())
    }
}
