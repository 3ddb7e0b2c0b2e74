//! Exact field scalars: arbitrary-precision rationals and residues modulo an
//! odd prime.
//!
//! Every value is kept in canonical form (reduced fraction with positive
//! denominator, or a residue in `[0, p)`), so structural equality is field
//! equality.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("malformed scalar {0:?}: expected [-]digits[/digits]")]
    Malformed(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("denominator of {text:?} is divisible by the field characteristic {p}")]
    DenominatorDivisibleByP { text: String, p: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("characteristic 2 is not supported")]
    CharacteristicTwo,
    #[error("{0} is not prime")]
    NotPrime(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Modulus {
    Rational,
    Prime(u64),
}

/// The ground field: `Q` or `F_p` for an odd prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec(Modulus);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldKind {
    Rational,
    Prime,
}

impl FieldSpec {
    pub const fn rational() -> Self {
        FieldSpec(Modulus::Rational)
    }

    /// `F_p`. Rejects `p = 2` and composite moduli.
    pub fn prime(p: u64) -> Result<Self, ScalarError> {
        if p == 2 {
            return Err(ScalarError::CharacteristicTwo);
        }
        if !is_prime(p) {
            return Err(ScalarError::NotPrime(p));
        }
        Ok(FieldSpec(Modulus::Prime(p)))
    }

    pub fn kind(&self) -> FieldKind {
        match self.0 {
            Modulus::Rational => FieldKind::Rational,
            Modulus::Prime(_) => FieldKind::Prime,
        }
    }

    /// The prime modulus, or `None` for the rationals.
    pub fn modulus(&self) -> Option<u64> {
        match self.0 {
            Modulus::Rational => None,
            Modulus::Prime(p) => Some(p),
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self.0, Modulus::Rational)
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self.0 {
            Modulus::Rational => Scalar(Repr::Rational(BigRational::from_integer(BigInt::from(n)))),
            Modulus::Prime(p) => Scalar(Repr::Residue { value: (n as i128).rem_euclid(p as i128) as u64, modulus: p }),
        }
    }

    /// Builds the canonical scalar for `num/den`.
    pub fn from_fraction(&self, num: BigInt, den: BigInt) -> Result<Scalar, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::ZeroDenominator(format!("{num}/{den}")));
        }
        match self.0 {
            Modulus::Rational => Ok(Scalar(Repr::Rational(BigRational::new(num, den)))),
            Modulus::Prime(p) => {
                let pb = BigInt::from(p);
                let n = num.mod_floor(&pb).to_u64().expect("residue fits u64");
                let d = den.mod_floor(&pb).to_u64().expect("residue fits u64");
                if d == 0 {
                    return Err(ScalarError::DenominatorDivisibleByP { text: format!("{num}/{den}"), p });
                }
                Ok(Scalar(Repr::Residue { value: mul_mod(n, inv_mod(d, p), p), modulus: p }))
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Modulus::Rational => write!(f, "Q"),
            Modulus::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

/// An exact element of a [`FieldSpec`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Field arithmetic with explicit error reporting.
pub fn scalar_arith(op: ArithOp, x: &Scalar, y: &Scalar) -> Result<Scalar, ScalarError> {
    match op {
        ArithOp::Add => x.try_add(y),
        ArithOp::Sub => x.try_sub(y),
        ArithOp::Mul => x.try_mul(y),
        ArithOp::Div => x.try_div(y),
    }
}

impl Scalar {
    pub fn parse(text: &str, field: FieldSpec) -> Result<Self, ScalarError> {
        let malformed = || ScalarError::Malformed(text.to_string());
        let t = text.trim();
        let (neg, body) = match t.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, t.strip_prefix('+').unwrap_or(t)),
        };
        let (num_s, den_s) = match body.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (body, None),
        };
        let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
        if !digits(num_s) || den_s.is_some_and(|d| !digits(d)) {
            return Err(malformed());
        }
        let mut num = BigInt::from_str(num_s).map_err(|_| malformed())?;
        if neg {
            num = -num;
        }
        let den = match den_s {
            Some(d) => BigInt::from_str(d).map_err(|_| malformed())?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(ScalarError::ZeroDenominator(text.to_string()));
        }
        field.from_fraction(num, den).map_err(|e| match e {
            ScalarError::DenominatorDivisibleByP { p, .. } => {
                ScalarError::DenominatorDivisibleByP { text: text.to_string(), p }
            }
            other => other,
        })
    }

    pub fn field(&self) -> FieldSpec {
        match &self.0 {
            Repr::Rational(_) => FieldSpec::rational(),
            Repr::Residue { modulus, .. } => FieldSpec(Modulus::Prime(*modulus)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Rational(q) => q.is_zero(),
            Repr::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Rational(q) => q.is_one(),
            Repr::Residue { value, .. } => *value == 1,
        }
    }

    /// Sign of a rational scalar; `None` over a prime field.
    pub fn signum(&self) -> Option<i8> {
        match &self.0 {
            Repr::Rational(q) => Some(match q.numer().sign() {
                Sign::Minus => -1,
                Sign::NoSign => 0,
                Sign::Plus => 1,
            }),
            Repr::Residue { .. } => None,
        }
    }

    pub fn is_negative(&self) -> Option<bool> {
        self.signum().map(|s| s < 0)
    }

    pub fn from_rational(q: BigRational) -> Self {
        Scalar(Repr::Rational(q))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rational(q) => Some(q),
            Repr::Residue { .. } => None,
        }
    }

    pub fn inverse(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(match &self.0 {
            Repr::Rational(q) => Scalar(Repr::Rational(q.recip())),
            Repr::Residue { value, modulus } => {
                Scalar(Repr::Residue { value: inv_mod(*value, *modulus), modulus: *modulus })
            }
        })
    }

    fn same_field(&self, other: &Self) -> Result<(), ScalarError> {
        let (a, b) = (self.field(), other.field());
        if a == b {
            Ok(())
        } else {
            Err(ScalarError::FieldMismatch(a, b))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ScalarError> {
        self.same_field(other)?;
        Ok(match (&self.0, &other.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Scalar(Repr::Rational(a + b)),
            (Repr::Residue { value: a, modulus: p }, Repr::Residue { value: b, .. }) => {
                Scalar(Repr::Residue { value: add_mod(*a, *b, *p), modulus: *p })
            }
            _ => unreachable!(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ScalarError> {
        self.same_field(other)?;
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ScalarError> {
        self.same_field(other)?;
        Ok(match (&self.0, &other.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Scalar(Repr::Rational(a * b)),
            (Repr::Residue { value: a, modulus: p }, Repr::Residue { value: b, .. }) => {
                Scalar(Repr::Residue { value: mul_mod(*a, *b, *p), modulus: *p })
            }
            _ => unreachable!(),
        })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, ScalarError> {
        self.same_field(other)?;
        self.try_mul(&other.inverse()?)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Repr::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

// Operator forms panic on field mismatch or division by zero. Values inside
// one algebra always share a field, so a mismatch there is a logic error.

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Rational(q) => Scalar(Repr::Rational(-q)),
            Repr::Residue { value, modulus } => {
                Scalar(Repr::Residue { value: if *value == 0 { 0 } else { modulus - value }, modulus: *modulus })
            }
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("scalar {}: {e}", stringify!($method)),
                }
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

// Fermat inverse; `p` is prime and `a` nonzero mod p.
fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(small) {
            return n == small;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
