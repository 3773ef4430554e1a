//! Exact scalars over the rationals or a prime field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The ground field every fiber lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    Prime(u32),
}

impl Field {
    pub fn prime(p: u32) -> Result<Field> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::Field(format!("{p} is not prime")))
        }
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Q(BigRational::zero()),
            Field::Prime(p) => Scalar::Fp { v: 0, p },
        }
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Fp {
                v: n.rem_euclid(p as i64) as u32,
                p,
            },
        }
    }

    pub fn from_ratio(self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::Field("zero denominator".into()));
        }
        let n = self.from_i64(num);
        let d = self.from_i64(den);
        let inv = d
            .inv()
            .ok_or_else(|| Error::Field(format!("{den} is not invertible in {self}")))?;
        Ok(n * inv)
    }

    /// Parses a scalar written as `"3/4"`, `"-2"`, or `"2 mod 5"`.
    pub fn parse_scalar(self, text: &str) -> Result<Scalar> {
        let text = text.trim().replace('\u{2212}', "-");
        let bad = || Error::Parse(format!("malformed scalar {text:?}"));
        if let Some((value, modulus)) = text.split_once("mod") {
            let value: i64 = value.trim().parse().map_err(|_| bad())?;
            let modulus: u32 = modulus.trim().parse().map_err(|_| bad())?;
            return match self {
                Field::Prime(p) if p == modulus => Ok(self.from_i64(value)),
                _ => Err(Error::Parse(format!(
                    "scalar {text:?} does not belong to {self}"
                ))),
            };
        }
        match self {
            Field::Rationals => {
                let q = if let Some((n, d)) = text.split_once('/') {
                    let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
                    let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
                    if d.is_zero() {
                        return Err(bad());
                    }
                    BigRational::new(n, d)
                } else {
                    BigRational::from_integer(BigInt::from_str(&text).map_err(|_| bad())?)
                };
                Ok(Scalar::Q(q))
            }
            Field::Prime(_) => {
                if let Some((n, d)) = text.split_once('/') {
                    let n: i64 = n.trim().parse().map_err(|_| bad())?;
                    let d: i64 = d.trim().parse().map_err(|_| bad())?;
                    self.from_ratio(n, d)
                } else {
                    Ok(self.from_i64(text.parse().map_err(|_| bad())?))
                }
            }
        }
    }

    /// Textual form used on the command line and in bundles: `q` or `gf:p`.
    pub fn spec_string(self) -> String {
        match self {
            Field::Rationals => "q".to_string(),
            Field::Prime(p) => format!("gf:{p}"),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        let s = s.trim().to_ascii_lowercase();
        if s == "q" || s == "rationals" {
            return Ok(Field::Rationals);
        }
        let p = s
            .strip_prefix("gf:")
            .or_else(|| s.strip_prefix("gf(").and_then(|r| r.strip_suffix(')')))
            .ok_or_else(|| Error::Parse(format!("unknown field {s:?} (expected q or gf:p)")))?;
        let p: u32 = p
            .parse()
            .map_err(|_| Error::Parse(format!("bad characteristic in {s:?}")))?;
        Field::prime(p)
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element. Residues carry their modulus so that stray mixing
/// of fields is caught rather than silently reduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { v: u32, p: u32 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rationals,
            Scalar::Fp { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_integer(),
            Scalar::Fp { .. } => true,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        match self {
            Scalar::Q(q) => Some(Scalar::Q(q.recip())),
            Scalar::Fp { v, p } => {
                // Fermat: v^(p-2)
                let (mut base, mut exp, mut acc) = (*v as u64, *p as u64 - 2, 1u64);
                let m = *p as u64;
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % m;
                    }
                    base = base * base % m;
                    exp >>= 1;
                }
                Some(Scalar::Fp {
                    v: acc as u32,
                    p: *p,
                })
            }
        }
    }

    pub fn add_assign_ref(&mut self, rhs: &Scalar) {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => *a += b,
            (Scalar::Fp { v, p }, Scalar::Fp { v: w, p: q }) if p == q => {
                *v = ((*v as u64 + *w as u64) % *p as u64) as u32
            }
            (a, b) => panic!("field mismatch: {} vs {}", a.field(), b.field()),
        }
    }

    pub fn mul_ref(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { v, p }, Scalar::Fp { v: w, p: q }) if p == q => Scalar::Fp {
                v: ((*v as u64 * *w as u64) % *p as u64) as u32,
                p: *p,
            },
            (a, b) => panic!("field mismatch: {} vs {}", a.field(), b.field()),
        }
    }

    pub fn sub_ref(&self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out.add_assign_ref(&-rhs.clone());
        out
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Fp { v, p } => write!(f, "{v} mod {p}"),
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(mut self, rhs: Scalar) -> Scalar {
        self.add_assign_ref(&rhs);
        self
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        self.sub_ref(&rhs)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        self.mul_ref(&rhs)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(q) => Scalar::Q(-q),
            Scalar::Fp { v, p } => Scalar::Fp {
                v: if v == 0 { 0 } else { p - v },
                p,
            },
        }
    }
}

impl Scalar {
    /// Integer value when the scalar is an integral rational; used for field
    /// reinterpretation of bundles.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self {
            Scalar::Q(q) if q.is_integer() => Some(q.numer().clone()),
            _ => None,
        }
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Q(q) if q.is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf3_arithmetic() {
        let f = Field::prime(3).unwrap();
        let two = f.from_i64(2);
        assert_eq!(two.clone() * two.clone(), f.one());
        assert_eq!(two.inv().unwrap(), two);
        assert_eq!(-f.one(), two);
        assert_eq!(f.from_i64(-4), two);
    }

    #[test]
    fn rational_parse_and_print() {
        let q = Field::Rationals;
        let s = q.parse_scalar("-6/8").unwrap();
        assert_eq!(s.to_string(), "-3/4");
        assert_eq!(q.parse_scalar("\u{2212}3/4").unwrap(), s);
        assert!(q.parse_scalar("1/0").is_err());
        assert!(q.parse_scalar("2 mod 5").is_err());
    }

    #[test]
    fn prime_parse_and_print() {
        let f = Field::prime(5).unwrap();
        assert_eq!(f.parse_scalar("2 mod 5").unwrap().to_string(), "2 mod 5");
        assert_eq!(f.parse_scalar("7").unwrap(), f.from_i64(2));
        assert_eq!(f.parse_scalar("1/2").unwrap(), f.from_i64(3));
        assert!(f.parse_scalar("2 mod 7").is_err());
    }

    #[test]
    fn field_specs() {
        assert_eq!("q".parse::<Field>().unwrap(), Field::Rationals);
        assert_eq!("gf:7".parse::<Field>().unwrap(), Field::Prime(7));
        assert!("gf:9".parse::<Field>().is_err());
        assert!(Field::prime(1).is_err());
        assert_eq!(Field::Prime(3).spec_string(), "gf:3");
    }
}
