//! Text literals for scalars.
//!
//! - GF(2^k): a bit-string of length exactly `k`, lowest degree first (`"01"` is the class of `x` in GF(4)).
//! - GF(2)[t]: a bit-string in ascending degree (`"01"` is `t`, `"101"` is `1 + t^2`).
//! - K: `"num/den"` with polynomial literals (`"01/11"` is `t / (1 + t)`); a bare polynomial means `den = 1`.
//! - K': `"a + s*b"` with rational-function literals; `"a"` and `"s*b"` alone are accepted too.
//!
//! Printing through `Display` produces a literal that parses back to the same value.

use alloc::string::String;
use core::fmt;

use super::{Field, Gf2Poly, Gf2k, RationalFunction, Tower};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseLiteralError {
    pub literal: String,
    pub reason: &'static str,
}

impl fmt::Display for ParseLiteralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid scalar literal {:?}: {}", self.literal, self.reason)
    }
}

impl core::error::Error for ParseLiteralError {}

pub trait Literal: Sized {
    fn parse_literal(text: &str) -> Result<Self, ParseLiteralError>;
}

fn err(text: &str, reason: &'static str) -> ParseLiteralError {
    ParseLiteralError { literal: String::from(text), reason }
}

fn bits(text: &str) -> Result<impl Iterator<Item = bool> + '_, ParseLiteralError> {
    if text.is_empty() {
        return Err(err(text, "empty bit-string"));
    }
    if !text.bytes().all(|b| b == b'0' || b == b'1') {
        return Err(err(text, "expected only 0 and 1"));
    }
    Ok(text.bytes().map(|b| b == b'1'))
}

impl<const K: usize> Literal for Gf2k<K> {
    fn parse_literal(text: &str) -> Result<Self, ParseLiteralError> {
        let text = text.trim();
        if text.len() != K {
            return Err(err(text, "bit-string length must equal the extension degree k"));
        }
        let value = bits(text)?.enumerate().fold(0u16, |acc, (i, b)| acc | (u16::from(b) << i));
        Ok(Gf2k::from_bits_truncate(value))
    }
}

impl Literal for Gf2Poly {
    fn parse_literal(text: &str) -> Result<Self, ParseLiteralError> {
        let text = text.trim();
        let coeffs: alloc::vec::Vec<bool> = bits(text)?.collect();
        Ok(Gf2Poly::from_coeffs(&coeffs))
    }
}

impl Literal for RationalFunction {
    fn parse_literal(text: &str) -> Result<Self, ParseLiteralError> {
        let text = text.trim();
        match text.split_once('/') {
            None => Ok(RationalFunction::from_poly(Gf2Poly::parse_literal(text)?)),
            Some((num, den)) => {
                let num = Gf2Poly::parse_literal(num)?;
                let den = Gf2Poly::parse_literal(den)?;
                RationalFunction::new(num, den).ok_or_else(|| err(text, "zero denominator"))
            }
        }
    }
}

impl Literal for Tower {
    fn parse_literal(text: &str) -> Result<Self, ParseLiteralError> {
        let trimmed = text.trim();
        let (base, s_coeff) = match trimmed.find("s*") {
            None => (trimmed, None),
            Some(pos) => {
                let head = trimmed[..pos].trim_end();
                let base = match head.strip_suffix('+') {
                    Some(b) => b.trim(),
                    None if head.is_empty() => "",
                    None => return Err(err(text, "expected `a + s*b`")),
                };
                if base.is_empty() && !head.is_empty() {
                    return Err(err(text, "missing base coordinate before `+`"));
                }
                (base, Some(&trimmed[pos + 2..]))
            }
        };
        let a = if base.is_empty() {
            RationalFunction::zero()
        } else {
            RationalFunction::parse_literal(base)?
        };
        let b = match s_coeff {
            Some(b) => RationalFunction::parse_literal(b)?,
            None => RationalFunction::zero(),
        };
        Ok(Tower::new(a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Gf4, Gf8};
    use alloc::string::ToString;

    #[test]
    fn gf2k_literals() {
        let w = Gf4::parse_literal("01").unwrap();
        assert_eq!(w * w, w + Gf4::one());
        assert!(Gf4::parse_literal("011").is_err());
        assert!(Gf8::parse_literal("0a1").is_err());
        assert_eq!(Gf8::parse_literal("110").unwrap().to_string(), "110");
    }

    #[test]
    fn polynomial_literals() {
        assert_eq!(Gf2Poly::parse_literal("01").unwrap(), Gf2Poly::t());
        assert_eq!(Gf2Poly::parse_literal("1010").unwrap().to_string(), "101");
        assert_eq!(Gf2Poly::parse_literal("0").unwrap(), Gf2Poly::zero());
        assert!(Gf2Poly::parse_literal("").is_err());
    }

    #[test]
    fn rational_literals() {
        let x = RationalFunction::parse_literal("01/11").unwrap();
        assert_eq!(x.numerator(), &Gf2Poly::t());
        assert_eq!(x.to_string(), "01/11");
        assert!(RationalFunction::parse_literal("1/0").is_err());
        // reduced on parse
        assert_eq!(RationalFunction::parse_literal("011/01").unwrap().to_string(), "11");
    }

    #[test]
    fn tower_literals() {
        let x = Tower::parse_literal("01/11 + s*1").unwrap();
        assert_eq!(x.s_part(), &RationalFunction::one());
        assert_eq!(Tower::parse_literal(&x.to_string()).unwrap(), x);
        assert_eq!(Tower::parse_literal("s*1").unwrap(), Tower::s());
        assert_eq!(Tower::parse_literal("01").unwrap(), Tower::t());
        assert!(Tower::parse_literal("01 s*1").is_err());
    }
}
