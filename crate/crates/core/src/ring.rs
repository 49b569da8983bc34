//! Exact coefficient rings: the integers and dense univariate polynomials
//! over the integers in a single symbol `c`.
//!
//! Both realizations implement [`Ring`], which is the only interface the
//! triangle, determinant and series code depends on. Everything is immutable
//! once built.

use std::fmt::{self, Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A commutative ring with exact division, as needed by fraction-free
/// elimination.
pub trait Ring: Clone + Eq + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_bigint(v: &BigInt) -> Self;
    fn is_zero(&self) -> bool;

    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    /// Returns `q` with `self = q * divisor`, or `NotDivisible`.
    fn exact_div(&self, divisor: &Self) -> Result<Self>;

    /// Inverse of `self` when it is `1` or `-1`.
    fn unit_inverse(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// `self * sign` where `sign` is `+1` or `-1`.
    fn signed(&self, sign: i32) -> Self {
        if sign < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }

    fn from_bigint(v: &BigInt) -> Self {
        v.clone()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if Zero::is_zero(divisor) {
            return Err(not_divisible(self, divisor));
        }
        let (q, r) = self.div_rem(divisor);
        if Zero::is_zero(&r) {
            Ok(q)
        } else {
            Err(not_divisible(self, divisor))
        }
    }

    fn unit_inverse(&self) -> Option<Self> {
        if One::is_one(self) || One::is_one(&-self) {
            Some(self.clone())
        } else {
            None
        }
    }
}

fn not_divisible<T: Display>(a: &T, b: &T) -> Error {
    Error::NotDivisible {
        dividend: a.to_string(),
        divisor: b.to_string(),
    }
}

/// Polynomial in `c` with integer coefficients, ascending powers.
///
/// Always normalized: the last stored coefficient is nonzero, and the zero
/// polynomial stores nothing.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    /// Strips trailing zero coefficients.
    pub fn normalize(mut raw: Vec<BigInt>) -> Self {
        while raw.last().is_some_and(Zero::is_zero) {
            raw.pop();
        }
        Poly { coeffs: raw }
    }

    pub fn from_i64s(raw: &[i64]) -> Self {
        Self::normalize(raw.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn constant(v: BigInt) -> Self {
        Self::normalize(vec![v])
    }

    /// The symbol `c`.
    pub fn var() -> Self {
        Poly {
            coeffs: vec![BigInt::ZERO, BigInt::from(1)],
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// The constant value, if the polynomial has degree ≤ 0.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.coeffs.len() {
            0 => Some(BigInt::ZERO),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Horner evaluation at an integer.
    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::ZERO, |acc, a| acc * t + a)
    }

    /// Horner evaluation at an element of any ring, e.g. `F_n(L_k(c))`.
    pub fn eval_in<R: Ring>(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, a| acc.mul(x).add(&R::from_bigint(a)))
    }
}

impl Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Canonical rendering `a0 + a1*c + a2*c^2`, zero terms omitted, `0` for the
/// zero polynomial. Report output depends on this being stable.
impl Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, a) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{a}")?,
                1 => write!(f, "{a}*c")?,
                _ => write!(f, "{a}*c^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl From<BigInt> for Poly {
    fn from(v: BigInt) -> Self {
        Poly::constant(v)
    }
}

impl Ring for Poly {
    fn zero() -> Self {
        Poly::default()
    }

    fn one() -> Self {
        Poly::constant(BigInt::from(1))
    }

    fn from_i64(v: i64) -> Self {
        Poly::constant(BigInt::from(v))
    }

    fn from_bigint(v: &BigInt) -> Self {
        Poly::constant(v.clone())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = long.coeffs.clone();
        for (o, s) in out.iter_mut().zip(&short.coeffs) {
            *o += s;
        }
        Poly::normalize(out)
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::normalize(out)
    }

    fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let Some(db) = divisor.degree() else {
            return Err(not_divisible(self, divisor));
        };
        let lead = divisor.leading().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return if rem.is_empty() {
                Ok(Poly::zero())
            } else {
                Err(not_divisible(self, divisor))
            };
        }
        let mut quot = vec![BigInt::ZERO; rem.len() - db];
        for shift in (0..quot.len()).rev() {
            let top = &rem[shift + db];
            if Zero::is_zero(top) {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !Zero::is_zero(&r) {
                return Err(not_divisible(self, divisor));
            }
            for (slot, b) in rem[shift..].iter_mut().zip(&divisor.coeffs) {
                *slot -= &q * b;
            }
            quot[shift] = q;
        }
        if rem.iter().any(|r| !Zero::is_zero(r)) {
            return Err(not_divisible(self, divisor));
        }
        Ok(Poly::normalize(quot))
    }

    fn unit_inverse(&self) -> Option<Self> {
        match self.as_constant() {
            Some(v) if One::is_one(&v.abs()) => Some(self.clone()),
            _ => None,
        }
    }
}

/// `(-1)^e`.
pub fn sign_pow(e: u64) -> i32 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `n(n-1)/2`, zero for `n < 2`.
pub fn binom2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

/// `(-1)^{binom(m+1, 2)}`: `+1` iff `m mod 4` is 0 or 3.
pub fn parity_sign(m: u64) -> i32 {
    sign_pow(binom2(m + 1))
}
