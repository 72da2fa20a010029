//! Canonical text (`1+2q+3q^2+2q^3`) and JSON renderings of polynomials.
//!
//! Text: ascending exponents, terms joined by `+` or `-`, unit coefficients
//! elided, `^` for exponents above one. A bivariate monomial writes its `q`
//! part before its `y` part (`qy`, `3q^2y^4`), and terms are ordered by
//! `(e_y, e_q)`.
//!
//! JSON: a `Poly` is the array of its coefficients from `q^0` up; a `BiPoly`
//! is an array of `[e_y, e_q, c]` triples in ascending order. Coefficients
//! outside the `i64` range are written as decimal strings.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use super::{BiPoly, Coeff, Poly};
use crate::error::PolyError;

fn write_term<C: Coeff>(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &C,
    vars: &[(char, u32)],
) -> fmt::Result {
    let mono: String = vars
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect();
    let neg = c.is_negative();
    if neg {
        f.write_str("-")?;
    } else if !first {
        f.write_str("+")?;
    }
    let mag = c.abs();
    if mono.is_empty() {
        write!(f, "{mag}")
    } else if mag.is_one() {
        f.write_str(&mono)
    } else {
        write!(f, "{mag}{mono}")
    }
}

impl<C: Coeff> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            write_term(f, first, c, &[('q', d as u32)])?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Display for BiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (ey, eq, c) in self.terms() {
            write_term(f, first, c, &[('q', eq), ('y', ey)])?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Parses a sum of monomials over the given variables into
/// `(e_y, e_q, c)` triples. `q` always maps to the second exponent.
fn parse_terms<C: Coeff>(input: &str, allow_y: bool) -> Result<Vec<(u32, u32, C)>, PolyError> {
    let err = |reason: &str| PolyError::Syntax {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(err("empty input"));
    }
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let mut negative = false;
        if bytes[i] == b'+' || bytes[i] == b'-' {
            negative = bytes[i] == b'-';
            i += 1;
        } else if i > 0 {
            return Err(err("expected '+' or '-' between terms"));
        }
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let mut coeff = if i > start {
            s[start..i].parse::<C>().map_err(|_| err("bad coefficient"))?
        } else {
            C::one()
        };
        let mut ey = 0u32;
        let mut eq = 0u32;
        let mut saw_var = false;
        while i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
            if bytes[i] == b'*' {
                i += 1;
                continue;
            }
            let var = bytes[i];
            if var != b'q' && !(allow_y && var == b'y') {
                return Err(err(&format!("unexpected character {:?}", var as char)));
            }
            i += 1;
            let mut e = 1u32;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let es = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                e = s[es..i].parse().map_err(|_| err("bad exponent"))?;
            }
            if var == b'q' {
                eq += e;
            } else {
                ey += e;
            }
            saw_var = true;
        }
        if i == start && !saw_var {
            return Err(err("empty term"));
        }
        if negative {
            coeff = -coeff;
        }
        out.push((ey, eq, coeff));
    }
    Ok(out)
}

impl<C: Coeff> FromStr for Poly<C> {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, PolyError> {
        let mut out = Poly::zero();
        for (_, eq, c) in parse_terms::<C>(s, false)? {
            out = out.checked_add(&Poly::monomial(c, eq as usize))?;
        }
        Ok(out)
    }
}

impl<C: Coeff> FromStr for BiPoly<C> {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, PolyError> {
        BiPoly::from_terms(parse_terms::<C>(s, true)?)
    }
}

fn coeff_to_json<C: Coeff>(c: &C) -> Value {
    match c.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(c.to_string()),
    }
}

fn coeff_from_json<C: Coeff>(v: &Value) -> Option<C> {
    match v {
        Value::Number(n) => n.as_i64().and_then(C::from_i64),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

impl<C: Coeff> Serialize for Poly<C> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs().len()))?;
        for c in self.coeffs() {
            seq.serialize_element(&coeff_to_json(c))?;
        }
        seq.end()
    }
}

impl<'de, C: Coeff> Deserialize<'de> for Poly<C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<Value>::deserialize(d)?;
        raw.iter()
            .map(|v| coeff_from_json(v).ok_or_else(|| D::Error::custom(format!("bad coefficient {v}"))))
            .collect::<Result<Vec<C>, _>>()
            .map(Poly::new)
    }
}

impl<C: Coeff> Serialize for BiPoly<C> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.len()))?;
        for (ey, eq, c) in self.terms() {
            seq.serialize_element(&(ey, eq, coeff_to_json(c)))?;
        }
        seq.end()
    }
}

impl<'de, C: Coeff> Deserialize<'de> for BiPoly<C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<(u32, u32, Value)>::deserialize(d)?;
        let terms = raw
            .into_iter()
            .map(|(a, b, v)| {
                coeff_from_json(&v)
                    .map(|c| (a, b, c))
                    .ok_or_else(|| D::Error::custom(format!("bad coefficient {v}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        BiPoly::from_terms(terms).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = Poly<i64>;
    type B = BiPoly<i64>;

    #[test]
    fn table_style_rendering() {
        assert_eq!(P::from_i64s(&[7, 1]).to_string(), "7+q");
        assert_eq!(P::from_i64s(&[1, 2, 3, 2]).to_string(), "1+2q+3q^2+2q^3");
        assert_eq!(P::from_i64s(&[0, -1, 0, 4]).to_string(), "-q+4q^3");
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(P::from_i64s(&[1, -2]).to_string(), "1-2q");
        let b = B::from_i64_terms(&[(0, 0, 1), (1, 0, 2), (1, 1, 1)]);
        assert_eq!(b.to_string(), "1+2y+qy");
        assert_eq!(B::from_i64_terms(&[(4, 2, 3)]).to_string(), "3q^2y^4");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["7+q", "16+9q+5q^2+2q^3", "-q+4q^3", "0", "1-2q"] {
            assert_eq!(s.parse::<P>().unwrap().to_string(), s);
        }
        for s in ["1+2y+qy", "3q^2y^4", "1+y-q^2y"] {
            assert_eq!(s.parse::<B>().unwrap().to_string(), s);
        }
        assert_eq!("y*q + 2 q".parse::<B>().unwrap().to_string(), "2q+qy");
        assert_eq!("q+q".parse::<P>().unwrap().to_string(), "2q");
        assert!("1+y".parse::<P>().is_err());
        assert!("1+".parse::<P>().is_err());
        assert!("2x".parse::<P>().is_err());
        assert!("".parse::<P>().is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = P::from_i64s(&[16, 9, 5, 2]);
        let j = serde_json::to_string(&p).unwrap();
        assert_eq!(j, "[16,9,5,2]");
        assert_eq!(serde_json::from_str::<P>(&j).unwrap(), p);
        let b = B::from_i64_terms(&[(0, 0, 1), (1, 1, 1)]);
        let j = serde_json::to_string(&b).unwrap();
        assert_eq!(j, "[[0,0,1],[1,1,1]]");
        assert_eq!(serde_json::from_str::<B>(&j).unwrap(), b);
        let huge = Poly::<BigInt>::from_i64s(&[1, 1]).checked_pow(70).unwrap();
        let j = serde_json::to_string(&huge).unwrap();
        assert!(j.contains("\"112186277816662845432\""));
        assert_eq!(serde_json::from_str::<Poly<BigInt>>(&j).unwrap(), huge);
    }
}
