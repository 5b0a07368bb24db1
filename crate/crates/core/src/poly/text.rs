//! Text and JSON forms of [`IntPolynomial`].
//!
//! Text renders from the top degree down, e.g. `λ^3 - 3λ - 2`. JSON is an
//! array of decimal strings, low-to-high: λ² − 1 is `["-1","0","1"]`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::IntPolynomial;
use crate::error::Error;

pub const VARIABLE: char = 'λ';

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let mag = c.abs();
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "{VARIABLE}")?,
                _ => write!(f, "{VARIABLE}^{k}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for IntPolynomial {
    type Err = Error;

    /// Parses the form produced by `Display`. `x` is accepted in place of `λ`,
    /// and terms may repeat or appear in any order.
    fn from_str(text: &str) -> Result<Self, Error> {
        let fail = |reason: &str| Error::PolynomialSyntax {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(fail("empty input"));
        }
        if compact == "0" {
            return Ok(IntPolynomial::zero());
        }

        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        for (i, ch) in compact.chars().enumerate() {
            if ch == '+' || ch == '-' {
                if i > 0 {
                    if current.is_empty() {
                        return Err(fail("sign without a term"));
                    }
                    terms.push((negative, std::mem::take(&mut current)));
                }
                negative = ch == '-';
            } else {
                current.push(ch);
            }
        }
        if current.is_empty() {
            return Err(fail("trailing sign"));
        }
        terms.push((negative, current));

        let mut coeffs: Vec<BigInt> = Vec::new();
        for (negative, term) in terms {
            let (coeff_text, power) = match term.find([VARIABLE, 'x']) {
                None => (term.as_str(), 0usize),
                Some(pos) => {
                    let var_len = term[pos..].chars().next().map_or(1, char::len_utf8);
                    let rest = &term[pos + var_len..];
                    let power = if rest.is_empty() {
                        1
                    } else if let Some(exp) = rest.strip_prefix('^') {
                        exp.parse::<usize>().map_err(|_| fail("bad exponent"))?
                    } else {
                        return Err(fail("unexpected text after variable"));
                    };
                    (&term[..pos], power)
                }
            };
            let mut c = if coeff_text.is_empty() {
                if power == 0 {
                    return Err(fail("empty term"));
                }
                BigInt::one()
            } else {
                if !coeff_text.chars().all(|c| c.is_ascii_digit()) {
                    return Err(fail("coefficient is not a decimal integer"));
                }
                coeff_text.parse::<BigInt>().map_err(|_| fail("bad coefficient"))?
            };
            if negative {
                c = -c;
            }
            if coeffs.len() <= power {
                coeffs.resize(power + 1, BigInt::zero());
            }
            coeffs[power] += c;
        }
        Ok(IntPolynomial::new(coeffs))
    }
}

impl IntPolynomial {
    /// Coefficients low-to-high as decimal strings.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs().iter().map(|c| c.to_string()).collect()
    }

    pub fn from_decimal_strings<S: AsRef<str>>(items: &[S]) -> Result<Self, Error> {
        items
            .iter()
            .map(|s| {
                let s = s.as_ref();
                s.trim().parse::<BigInt>().map_err(|_| Error::PolynomialSyntax {
                    text: s.to_string(),
                    reason: "coefficient is not a decimal integer".to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(IntPolynomial::new)
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for c in self.coeffs() {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct CoeffVisitor;

        impl<'de> Visitor<'de> for CoeffVisitor {
            type Value = IntPolynomial;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an array of decimal-string coefficients, low degree first")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<IntPolynomial, A::Error> {
                let mut coeffs = Vec::new();
                while let Some(s) = seq.next_element::<String>()? {
                    let c = s
                        .parse::<BigInt>()
                        .map_err(|_| de::Error::custom(format!("bad coefficient {s:?}")))?;
                    coeffs.push(c);
                }
                Ok(IntPolynomial::new(coeffs))
            }
        }

        deserializer.deserialize_seq(CoeffVisitor)
    }
}
