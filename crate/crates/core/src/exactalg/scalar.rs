use std::fmt;

use super::rational::Rational;
use super::LinAlgError;

/// The base field every object is defined over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    /// Integers modulo a prime `p` with `2 <= p < 2^31`.
    PrimeField(u32),
}

impl FieldSpec {
    /// Validated constructor for `F_p`.
    pub fn prime(p: u64) -> Result<Self, LinAlgError> {
        if !(2..(1u64 << 31)).contains(&p) || !is_prime(p) {
            return Err(LinAlgError::InvalidModulus(p));
        }
        Ok(FieldSpec::PrimeField(p as u32))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p as u64,
        }
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero(*self)
    }

    pub fn one(&self) -> Scalar {
        Scalar::one(*self)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        Scalar::from_i64(*self, v)
    }

    /// Parses a serialized scalar: `a` or `a/b` over Q, a residue integer over F_p.
    /// Any integer is accepted over F_p and reduced; fractions are inverted mod p.
    pub fn parse(&self, s: &str) -> Result<Scalar, LinAlgError> {
        let q: Rational = s.parse().map_err(|_| LinAlgError::Parse(s.to_string()))?;
        match self {
            FieldSpec::Rationals => Ok(Scalar::Rational(q)),
            FieldSpec::PrimeField(p) => {
                let m = num_bigint::BigInt::from(*p);
                let reduce = |v: num_bigint::BigInt| -> u32 {
                    let r = ((v % &m) + &m) % &m;
                    u32::try_from(r).expect("residue below modulus")
                };
                let n = reduce(q.numer());
                let d = reduce(q.denom());
                if d == 0 {
                    return Err(LinAlgError::Parse(s.to_string()));
                }
                let num = Scalar::Residue { value: n, modulus: *p };
                let den = Scalar::Residue { value: d, modulus: *p };
                Ok(num.mul(&den.inv().expect("nonzero residue")))
            }
        }
    }

    /// Number of elements, `None` for Q.
    pub fn order(&self) -> Option<u64> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::PrimeField(p) => Some(*p as u64),
        }
    }

    /// Enumerates F_p in the order 0 < 1 < ... < p-1. Panics over Q.
    pub fn elements(&self) -> Vec<Scalar> {
        match self {
            FieldSpec::Rationals => panic!("Q is infinite"),
            FieldSpec::PrimeField(p) => (0..*p).map(|v| Scalar::Residue { value: v, modulus: *p }).collect(),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "F_{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element. Canonical: equal values have equal representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    Residue { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn zero(field: FieldSpec) -> Self {
        match field {
            FieldSpec::Rationals => Scalar::Rational(Rational::ZERO),
            FieldSpec::PrimeField(p) => Scalar::Residue { value: 0, modulus: p },
        }
    }

    pub fn one(field: FieldSpec) -> Self {
        match field {
            FieldSpec::Rationals => Scalar::Rational(Rational::ONE),
            FieldSpec::PrimeField(p) => Scalar::Residue { value: 1 % p, modulus: p },
        }
    }

    pub fn from_i64(field: FieldSpec, v: i64) -> Self {
        match field {
            FieldSpec::Rationals => Scalar::Rational(Rational::from_integer(v)),
            FieldSpec::PrimeField(p) => Scalar::Residue { value: v.rem_euclid(p as i64) as u32, modulus: p },
        }
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Residue { modulus, .. } => FieldSpec::PrimeField(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    // Mixed-field arithmetic is a logic error: Matrix construction guarantees a single field.
    pub fn add(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a.add(b)),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) if p == q => {
                Scalar::Residue { value: ((*a as u64 + *b as u64) % *p as u64) as u32, modulus: *p }
            }
            _ => panic!("scalar field mismatch"),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        match self {
            Scalar::Rational(a) => Scalar::Rational(a.neg()),
            Scalar::Residue { value, modulus } => Scalar::Residue { value: (modulus - value) % modulus, modulus: *modulus },
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a.mul(b)),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) if p == q => {
                Scalar::Residue { value: ((*a as u64 * *b as u64) % *p as u64) as u32, modulus: *p }
            }
            _ => panic!("scalar field mismatch"),
        }
    }

    /// `self + a * b`, the inner-loop update of every elimination.
    pub fn mul_add(&self, a: &Self, b: &Self) -> Self {
        if a.is_zero() || b.is_zero() {
            return self.clone();
        }
        self.add(&a.mul(b))
    }

    pub fn inv(&self) -> Option<Self> {
        match self {
            Scalar::Rational(a) => a.recip().map(Scalar::Rational),
            Scalar::Residue { value: 0, .. } => None,
            Scalar::Residue { value, modulus } => {
                // Fermat: a^(p-2).
                let p = *modulus as u64;
                let (mut base, mut exp, mut acc) = (*value as u64, p - 2, 1u64);
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % p;
                    }
                    base = base * base % p;
                    exp >>= 1;
                }
                Some(Scalar::Residue { value: acc as u32, modulus: *modulus })
            }
        }
    }

    pub fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(2_147_483_647).is_ok());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(9).is_err());
        assert!(FieldSpec::prime(1 << 31).is_err());
    }

    #[test]
    fn residue_arithmetic() {
        let f = FieldSpec::prime(7).unwrap();
        let three = f.from_i64(3);
        assert_eq!(three.mul(&three.inv().unwrap()), f.one());
        assert_eq!(f.from_i64(-1), f.from_i64(6));
        assert_eq!(f.parse("1/2").unwrap(), f.from_i64(4));
        assert_eq!(f.parse("10").unwrap(), f.from_i64(3));
        assert!(f.parse("1/7").is_err());
        assert_eq!(f.zero().inv(), None);
    }

    #[test]
    fn large_modulus_does_not_overflow() {
        let f = FieldSpec::prime(2_147_483_647).unwrap();
        let a = f.from_i64(2_147_483_646);
        assert_eq!(a.mul(&a), f.one());
        assert_eq!(a.add(&a), f.from_i64(2_147_483_645));
    }

    #[test]
    fn rational_serialization() {
        let q = FieldSpec::Rationals;
        assert_eq!(q.parse("-2/4").unwrap().to_string(), "-1/2");
        assert_eq!(q.from_i64(5).to_string(), "5");
    }
}
