use alloc::string::String;
use core::fmt;
use core::ops::{Add, AddAssign, Mul};

use super::{Field, Gf2Poly};

/// An element `num / den` of K = GF(2)(t), always kept reduced.
///
/// Over GF(2) every nonzero polynomial is monic, so a reduced fraction is unique and
/// derived equality is field equality. Zero is stored as `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Gf2Poly,
    den: Gf2Poly,
}

impl RationalFunction {
    /// `None` when `den` is zero.
    pub fn new(num: Gf2Poly, den: Gf2Poly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::reduced(num, den))
    }

    fn reduced(num: Gf2Poly, den: Gf2Poly) -> Self {
        if num.is_zero() {
            return Self { num, den: Gf2Poly::one() };
        }
        let g = num.gcd(&den);
        if g.is_one() {
            return Self { num, den };
        }
        Self { num: num.div_rem(&g).0, den: den.div_rem(&g).0 }
    }

    pub fn from_poly(p: Gf2Poly) -> Self {
        Self { num: p, den: Gf2Poly::one() }
    }

    /// The transcendental `t`.
    pub fn t() -> Self {
        Self::from_poly(Gf2Poly::t())
    }

    pub fn numerator(&self) -> &Gf2Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Gf2Poly {
        &self.den
    }

    /// Human-readable form such as `(1+t)/t^2`.
    pub fn pretty(&self) -> String {
        let wrap = |p: &Gf2Poly| {
            let s = p.pretty();
            if p.support().count() > 1 {
                alloc::format!("({s})")
            } else {
                s
            }
        };
        if self.den.is_one() {
            self.num.pretty()
        } else {
            alloc::format!("{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

impl Add for RationalFunction {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.den == rhs.den {
            return Self::reduced(self.num + rhs.num, self.den);
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Self::reduced(num, &self.den * &rhs.den)
    }
}

impl AddAssign for RationalFunction {
    fn add_assign(&mut self, rhs: Self) {
        *self = core::mem::replace(self, Self::zero()) + rhs;
    }
}

impl Mul for RationalFunction {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.num.is_zero() || rhs.num.is_zero() {
            return Self::zero();
        }
        // cross-cancel so the product is already reduced
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let num = &self.num.div_rem(&g1).0 * &rhs.num.div_rem(&g2).0;
        let den = &self.den.div_rem(&g2).0 * &rhs.den.div_rem(&g1).0;
        Self { num, den }
    }
}

impl Field for RationalFunction {
    fn zero() -> Self {
        Self { num: Gf2Poly::zero(), den: Gf2Poly::one() }
    }

    fn one() -> Self {
        Self { num: Gf2Poly::one(), den: Gf2Poly::one() }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        Some(Self { num: self.den.clone(), den: self.num.clone() })
    }

    /// A reduced `p / q` is a square in K exactly when both `p` and `q` are squares in GF(2)[t].
    fn sqrt(&self) -> Option<Self> {
        Some(Self { num: self.num.sqrt()?, den: self.den.sqrt()? })
    }

    fn field_name() -> String {
        String::from("K")
    }

    fn frobenius(&self) -> Self {
        Self { num: self.num.square(), den: self.den.square() }
    }
}

/// Literal form `num/den` with both sides polynomial literals; `/1` is omitted.
impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K[{}]", self.pretty())
    }
}
