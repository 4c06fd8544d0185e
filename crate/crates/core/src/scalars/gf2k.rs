use alloc::format;
use alloc::string::String;
use core::fmt;
use core::ops::{Add, AddAssign, Mul};

use super::{FiniteField, Field};

/// Reduction polynomial for GF(2^k), bit `i` holding the coefficient of `x^i`.
///
/// | k | polynomial |
/// |---|------------|
/// | 1 | x + 1 (never used: GF(2) needs no reduction) |
/// | 2 | x^2 + x + 1 |
/// | 3 | x^3 + x + 1 |
/// | 4 | x^4 + x + 1 |
/// | 5 | x^5 + x^2 + 1 |
/// | 6 | x^6 + x + 1 |
/// | 7 | x^7 + x + 1 |
/// | 8 | x^8 + x^4 + x^3 + x + 1 |
pub const fn modulus(k: usize) -> u16 {
    match k {
        1 => 0b11,
        2 => 0b111,
        3 => 0b1011,
        4 => 0b1_0011,
        5 => 0b10_0101,
        6 => 0b100_0011,
        7 => 0b1000_0011,
        8 => 0b1_0001_1011,
        _ => panic!("GF(2^k) is only provided for 1 <= k <= 8"),
    }
}

/// An element of GF(2^K) in the polynomial basis `1, x, ..., x^(K-1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gf2k<const K: usize> {
    bits: u16,
}

pub type Gf2 = Gf2k<1>;
pub type Gf4 = Gf2k<2>;
pub type Gf8 = Gf2k<3>;

impl<const K: usize> Gf2k<K> {
    const MODULUS: u16 = modulus(K);
    const MASK: u16 = (1u16 << K) - 1;

    /// Builds an element from its coordinate bits; bits above `K` are rejected.
    pub fn new(bits: u16) -> Option<Self> {
        (bits & !Self::MASK == 0).then_some(Self { bits })
    }

    /// Builds an element from the low `K` bits of `bits`.
    pub const fn from_bits_truncate(bits: u16) -> Self {
        Self { bits: bits & ((1u16 << K) - 1) }
    }

    pub const fn bits(self) -> u16 {
        self.bits
    }

    /// The class of `x` (equal to 1 when `K = 1`).
    pub fn generator() -> Self {
        if K == 1 {
            Self { bits: 1 }
        } else {
            Self { bits: 0b10 }
        }
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self { bits: 1 };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    fn reduce(mut wide: u32) -> u16 {
        let m = u32::from(Self::MODULUS);
        for deg in (K..2 * K).rev() {
            if wide & (1 << deg) != 0 {
                wide ^= m << (deg - K);
            }
        }
        wide as u16
    }
}

impl<const K: usize> Add for Gf2k<K> {
    type Output = Self;
    // addition is XOR of coefficient bits
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Self) -> Self {
        Self { bits: self.bits ^ rhs.bits }
    }
}

impl<const K: usize> AddAssign for Gf2k<K> {
    #[allow(clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: Self) {
        self.bits ^= rhs.bits;
    }
}

impl<const K: usize> Mul for Gf2k<K> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut wide = 0u32;
        let a = u32::from(self.bits);
        for i in 0..K {
            if rhs.bits & (1 << i) != 0 {
                wide ^= a << i;
            }
        }
        Self { bits: Self::reduce(wide) }
    }
}

impl<const K: usize> Field for Gf2k<K> {
    fn zero() -> Self {
        Self { bits: 0 }
    }

    fn one() -> Self {
        Self { bits: 1 }
    }

    fn is_zero(&self) -> bool {
        self.bits == 0
    }

    fn inv(&self) -> Option<Self> {
        if self.bits == 0 {
            return None;
        }
        // x^(2^K - 2) in the multiplicative group of order 2^K - 1
        Some(self.pow((1u64 << K) - 2))
    }

    fn sqrt(&self) -> Option<Self> {
        // squaring is bijective; its inverse is x -> x^(2^(K-1))
        let mut y = *self;
        for _ in 1..K {
            y = y * y;
        }
        Some(y)
    }

    fn field_name() -> String {
        format!("gf2^{K}")
    }
}

impl<const K: usize> FiniteField for Gf2k<K> {
    const ORDER: usize = 1 << K;

    fn from_index(index: usize) -> Self {
        assert!(index < Self::ORDER, "index {index} out of range for GF(2^{K})");
        Self { bits: index as u16 }
    }
}

impl<const K: usize> fmt::Display for Gf2k<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..K {
            f.write_str(if self.bits & (1 << i) != 0 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl<const K: usize> fmt::Debug for Gf2k<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{K})[{self}]")
    }
}
