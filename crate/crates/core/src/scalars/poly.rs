use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul};

/// A polynomial over GF(2) in `t`, stored densely with bit `i` holding the coefficient of `t^i`.
///
/// The word vector never carries trailing zero words, so structural equality is polynomial
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gf2Poly {
    words: Vec<u64>,
}

impl Gf2Poly {
    pub fn zero() -> Self {
        Self { words: Vec::new() }
    }

    pub fn one() -> Self {
        Self { words: vec![1] }
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self { words: vec![2] }
    }

    /// `t^n`.
    pub fn monomial(n: usize) -> Self {
        let mut p = Self::zero();
        p.set_coeff(n, true);
        p
    }

    pub fn from_words(words: Vec<u64>) -> Self {
        let mut p = Self { words };
        p.trim();
        p
    }

    /// Builds a polynomial from coefficients listed in ascending degree.
    pub fn from_coeffs(coeffs: &[bool]) -> Self {
        let mut p = Self::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            if c {
                p.set_coeff(i, true);
            }
        }
        p
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words.len() == 1 && self.words[0] == 1
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - last.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    pub fn set_coeff(&mut self, i: usize, value: bool) {
        let word = i / 64;
        if word >= self.words.len() {
            if !value {
                return;
            }
            self.words.resize(word + 1, 0);
        }
        if value {
            self.words[word] |= 1 << (i % 64);
        } else {
            self.words[word] &= !(1 << (i % 64));
        }
        self.trim();
    }

    /// Indices of the nonzero coefficients, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            (0..64).filter(move |b| (w >> b) & 1 == 1).map(move |b| wi * 64 + b)
        })
    }

    fn shifted(&self, by: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (wshift, bshift) = (by / 64, by % 64);
        let mut words = vec![0u64; self.words.len() + wshift + 1];
        for (i, &w) in self.words.iter().enumerate() {
            words[i + wshift] ^= w << bshift;
            if bshift != 0 {
                words[i + wshift + 1] ^= w >> (64 - bshift);
            }
        }
        Self::from_words(words)
    }

    /// Euclidean division: `(q, r)` with `self = q * divisor + r` and `deg r < deg divisor`.
    ///
    /// # Panics
    ///
    /// Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            quot.set_coeff(dr - dd, true);
            rem += divisor.shifted(dr - dd);
        }
        (quot, rem)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a
    }

    /// Formal derivative; over GF(2) only odd-degree terms survive, shifted down by one.
    pub fn derivative(&self) -> Self {
        let mut d = Self::zero();
        for i in self.support().filter(|i| i % 2 == 1) {
            d.set_coeff(i - 1, true);
        }
        d
    }

    pub fn square(&self) -> Self {
        let mut sq = Self::zero();
        for i in self.support() {
            sq.set_coeff(2 * i, true);
        }
        sq
    }

    /// Square root when every term has even degree (equivalently, the derivative vanishes).
    pub fn sqrt(&self) -> Option<Self> {
        if !self.derivative().is_zero() {
            return None;
        }
        let mut r = Self::zero();
        for i in self.support() {
            r.set_coeff(i / 2, true);
        }
        Some(r)
    }

    /// Splits `p(t) = e(t^2) + t * o(t^2)` and returns `(e, o)`.
    pub fn even_odd_parts(&self) -> (Self, Self) {
        let (mut even, mut odd) = (Self::zero(), Self::zero());
        for i in self.support() {
            if i % 2 == 0 {
                even.set_coeff(i / 2, true);
            } else {
                odd.set_coeff(i / 2, true);
            }
        }
        (even, odd)
    }

    /// Human-readable form such as `1+t+t^3`.
    pub fn pretty(&self) -> alloc::string::String {
        use alloc::string::String;
        if self.is_zero() {
            return String::from("0");
        }
        let terms: Vec<String> = self
            .support()
            .map(|i| match i {
                0 => String::from("1"),
                1 => String::from("t"),
                _ => alloc::format!("t^{i}"),
            })
            .collect();
        terms.join("+")
    }
}

impl Add for Gf2Poly {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl Add<&Gf2Poly> for &Gf2Poly {
    type Output = Gf2Poly;
    fn add(self, rhs: &Gf2Poly) -> Gf2Poly {
        let mut out = self.clone();
        out += rhs.clone();
        out
    }
}

impl AddAssign for Gf2Poly {
    fn add_assign(&mut self, rhs: Self) {
        if rhs.words.len() > self.words.len() {
            self.words.resize(rhs.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
        self.trim();
    }
}

impl Mul<&Gf2Poly> for &Gf2Poly {
    type Output = Gf2Poly;
    fn mul(self, rhs: &Gf2Poly) -> Gf2Poly {
        if self.is_zero() || rhs.is_zero() {
            return Gf2Poly::zero();
        }
        let mut words = vec![0u64; self.words.len() + rhs.words.len()];
        for (i, &a) in self.words.iter().enumerate() {
            for bit in 0..64 {
                if (a >> bit) & 1 == 0 {
                    continue;
                }
                for (j, &b) in rhs.words.iter().enumerate() {
                    words[i + j] ^= b << bit;
                    if bit != 0 {
                        words[i + j + 1] ^= b >> (64 - bit);
                    }
                }
            }
        }
        Gf2Poly::from_words(words)
    }
}

impl Mul for Gf2Poly {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

/// Literal form: coefficients in ascending degree, `"101"` is `1 + t^2`, `"0"` is zero.
impl fmt::Display for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.degree() {
            None => f.write_str("0"),
            Some(d) => {
                for i in 0..=d {
                    f.write_str(if self.coeff(i) { "1" } else { "0" })?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Poly({})", self.pretty())
    }
}
