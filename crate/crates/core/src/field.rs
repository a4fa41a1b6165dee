//! Ground fields and their scalars.
//!
//! Two kinds of fields are supported: prime fields GF(p) with p <= 251
//! (scalars fit in a byte) and the rationals with exact big-integer
//! fractions. All arithmetic is exact; there is no floating point in
//! this crate.

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// Descriptor of the ground field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldDesc {
    /// GF(p) for a prime 2 <= p <= 251.
    Prime(u8),
    /// The field of rational numbers.
    Rational,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldDesc {
    /// Prime field constructor; rejects composite or oversized moduli.
    pub fn gf(p: u64) -> Result<Self> {
        if p < 2 || p > 251 || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(FieldDesc::Prime(p as u8))
    }

    pub fn rational() -> Self {
        FieldDesc::Rational
    }

    pub fn is_prime_field(&self) -> bool {
        matches!(self, FieldDesc::Prime(_))
    }

    /// Modulus for prime fields, `None` for the rationals.
    pub fn modulus(&self) -> Option<u64> {
        match self {
            FieldDesc::Prime(p) => Some(*p as u64),
            FieldDesc::Rational => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldDesc::Prime(_) => Scalar::Prime(0),
            FieldDesc::Rational => Scalar::Rational(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldDesc::Prime(_) => Scalar::Prime(1),
            FieldDesc::Rational => Scalar::Rational(BigRational::one()),
        }
    }

    /// Canonical scalar from a signed integer (reduced mod p for prime fields).
    pub fn from_i64(&self, x: i64) -> Scalar {
        match self {
            FieldDesc::Prime(p) => {
                let p = *p as i64;
                Scalar::Prime(x.rem_euclid(p) as u8)
            }
            FieldDesc::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(x))),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldDesc::Prime(p), Scalar::Prime(a), Scalar::Prime(b)) => {
                Scalar::Prime(((*a as u16 + *b as u16) % *p as u16) as u8)
            }
            (FieldDesc::Rational, Scalar::Rational(a), Scalar::Rational(b)) => {
                Scalar::Rational(a + b)
            }
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldDesc::Prime(p), Scalar::Prime(a)) => {
                Scalar::Prime(if *a == 0 { 0 } else { p - a })
            }
            (FieldDesc::Rational, Scalar::Rational(a)) => Scalar::Rational(-a),
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldDesc::Prime(p), Scalar::Prime(a), Scalar::Prime(b)) => {
                Scalar::Prime(((*a as u16 * *b as u16) % *p as u16) as u8)
            }
            (FieldDesc::Rational, Scalar::Rational(a), Scalar::Rational(b)) => {
                Scalar::Rational(a * b)
            }
            _ => panic!("scalar does not belong to this field"),
        }
    }

    /// Multiplicative inverse; panics on zero (callers check first).
    pub fn inv(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldDesc::Prime(p), Scalar::Prime(a)) => {
                assert!(*a != 0, "zero has no inverse");
                // Fermat: a^(p-2) mod p
                let p = *p as u32;
                let mut base = *a as u32;
                let mut exp = p - 2;
                let mut acc = 1u32;
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % p;
                    }
                    base = base * base % p;
                    exp >>= 1;
                }
                Scalar::Prime(acc as u8)
            }
            (FieldDesc::Rational, Scalar::Rational(a)) => {
                assert!(!a.is_zero(), "zero has no inverse");
                Scalar::Rational(a.recip())
            }
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.mul(a, &self.inv(b))
    }

    /// All field elements, ascending; prime fields only.
    pub fn elements(&self) -> Result<impl Iterator<Item = Scalar>> {
        match self {
            FieldDesc::Prime(p) => Ok((0..*p).map(Scalar::Prime)),
            FieldDesc::Rational => Err(Error::PrimeFieldRequired),
        }
    }
}

impl std::fmt::Display for FieldDesc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldDesc::Prime(p) => write!(f, "GF({p})"),
            FieldDesc::Rational => write!(f, "Q"),
        }
    }
}

/// A field element in canonical form: residue in 0..p for prime fields,
/// a reduced fraction for the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Prime(u8),
    Rational(BigRational),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Prime(x) => *x == 0,
            Scalar::Rational(r) => r.is_zero(),
        }
    }

    /// Parse a decimal fraction "a" or "a/b" into a rational scalar.
    pub fn rational_from_str(s: &str) -> Result<Scalar> {
        let bad = || Error::ParamOutOfRange(format!("malformed rational scalar {s:?}"));
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        Ok(Scalar::Rational(BigRational::new(num, den)))
    }
}

impl std::fmt::Display for Scalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Scalar::Prime(x) => write!(f, "{x}"),
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else if r.denom().is_negative() {
                    // BigRational keeps the denominator positive; defensive only.
                    write!(f, "{}/{}", -r.numer(), -r.denom())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_construction() {
        assert!(FieldDesc::gf(2).is_ok());
        assert!(FieldDesc::gf(251).is_ok());
        assert_eq!(FieldDesc::gf(1), Err(Error::InvalidPrime(1)));
        assert_eq!(FieldDesc::gf(4), Err(Error::InvalidPrime(4)));
        assert_eq!(FieldDesc::gf(253), Err(Error::InvalidPrime(253)));
        assert_eq!(FieldDesc::gf(257), Err(Error::InvalidPrime(257)));
    }

    #[test]
    fn gf_arithmetic() {
        let f = FieldDesc::gf(7).unwrap();
        let a = f.from_i64(5);
        let b = f.from_i64(4);
        assert_eq!(f.add(&a, &b), f.from_i64(2));
        assert_eq!(f.mul(&a, &b), f.from_i64(6));
        assert_eq!(f.sub(&a, &b), f.from_i64(1));
        assert_eq!(f.from_i64(-3), f.from_i64(4));
        for x in 1..7 {
            let s = f.from_i64(x);
            assert_eq!(f.mul(&s, &f.inv(&s)), f.one());
        }
    }

    #[test]
    fn rational_canonical_form() {
        let f = FieldDesc::rational();
        let half = Scalar::rational_from_str("2/4").unwrap();
        assert_eq!(half.to_string(), "1/2");
        let neg = Scalar::rational_from_str("3/-6").unwrap();
        assert_eq!(neg.to_string(), "-1/2");
        assert_eq!(f.div(&f.from_i64(1), &f.from_i64(3)).to_string(), "1/3");
        assert!(Scalar::rational_from_str("1/0").is_err());
        assert!(Scalar::rational_from_str("x").is_err());
    }
}
