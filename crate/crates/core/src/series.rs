//! Truncated formal power series over a [`Ring`], and the Motzkin-type
//! generating function `A(x,c) = 1 + c x A + x^2 A^2` with its powers and
//! reciprocal powers.

use crate::error::{Error, Result};
use crate::ring::Ring;

/// Coefficients `c_0 .. c_{T-1}`; all arithmetic is modulo `x^T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> TruncatedSeries<R> {
    /// Pads with zeros or truncates to exactly `order` coefficients.
    pub fn new(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order, R::zero());
        TruncatedSeries { coeffs }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(R::one(), 0, order)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    /// `v * x^power`, mod `x^order`.
    pub fn monomial(v: R, power: usize, order: usize) -> Self {
        let mut coeffs = vec![R::zero(); order];
        if power < order {
            coeffs[power] = v;
        }
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient `n`, zero for `n < 0`. Panics past the order.
    pub fn coeff(&self, n: i64) -> R {
        if n < 0 {
            R::zero()
        } else {
            self.coeffs[n as usize].clone()
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..order.min(self.order())].to_vec(), order.min(self.order()))
    }

    pub fn add(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add(b)).collect();
        TruncatedSeries { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.sub(b)).collect();
        TruncatedSeries { coeffs }
    }

    pub fn scale(&self, v: &R) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a.mul(v)).collect(),
        }
    }

    /// Multiplication by `x^j`, keeping the order.
    pub fn shift_up(&self, j: usize) -> Self {
        let order = self.order();
        let mut coeffs = vec![R::zero(); j.min(order)];
        coeffs.extend(self.coeffs.iter().take(order.saturating_sub(j)).cloned());
        TruncatedSeries { coeffs }
    }

    /// Cauchy product, truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..order)
            .map(|n| {
                (0..=n)
                    .filter(|&j| !self.coeffs[j].is_zero())
                    .fold(R::zero(), |acc, j| acc.add(&self.coeffs[j].mul(&other.coeffs[n - j])))
            })
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `1/self`; the constant term must be `±1` so the result stays in the ring.
    pub fn reciprocal(&self) -> Result<Self> {
        let order = self.order();
        if order == 0 {
            return Ok(self.clone());
        }
        let inv0 = self.coeffs[0]
            .unit_inverse()
            .ok_or_else(|| Error::NonUnitConstantTerm(self.coeffs[0].to_string()))?;
        let mut v: Vec<R> = Vec::with_capacity(order);
        v.push(inv0.clone());
        for n in 1..order {
            let s = (1..=n).fold(R::zero(), |acc, j| acc.add(&self.coeffs[j].mul(&v[n - j])));
            v.push(s.mul(&inv0).neg());
        }
        Ok(TruncatedSeries { coeffs: v })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(R::is_zero)
    }
}

/// `A(x,c)` to order `order`, by `a_n = c a_{n-1} + sum_{j<=n-2} a_j a_{n-2-j}`.
pub fn motzkin_series<R: Ring>(cval: &R, order: usize) -> TruncatedSeries<R> {
    let mut a: Vec<R> = Vec::with_capacity(order);
    for n in 0..order {
        let v = if n == 0 {
            R::one()
        } else {
            let conv = (0..n.saturating_sub(1)).fold(R::zero(), |acc, j| acc.add(&a[j].mul(&a[n - 2 - j])));
            cval.mul(&a[n - 1]).add(&conv)
        };
        a.push(v);
    }
    TruncatedSeries { coeffs: a }
}

/// `A(x,c)^(k+1)`: coefficient `n` is `a(n+k, k)` for constant weights `c`.
pub fn motzkin_power<R: Ring>(cval: &R, k: usize, order: usize) -> TruncatedSeries<R> {
    motzkin_series(cval, order).pow(k as u32 + 1)
}

/// `b(0,k) .. b(T-1,k)`, the coefficients of `1/A(x,c)^(k+1)`.
pub fn reciprocal_power_coeffs<R: Ring>(cval: &R, k: usize, order: usize) -> Vec<R> {
    motzkin_power(cval, k, order)
        .reciprocal()
        .expect("A(x,c) has constant term 1")
        .into_coeffs()
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::ring::Poly;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn s(vs: &[i64], order: usize) -> TruncatedSeries<BigInt> {
        TruncatedSeries::new(vs.iter().map(|&v| int(v)).collect(), order)
    }

    fn ints(vs: &[i64]) -> Vec<BigInt> {
        vs.iter().map(|&v| int(v)).collect()
    }

    #[test]
    fn products() {
        assert_eq!(s(&[1, 1], 3).mul(&s(&[1, -1], 3)), s(&[1, 0, -1], 3));
        let a = s(&[3, -1, 4, 1], 4);
        assert_eq!(a.mul(&TruncatedSeries::one(4)), a);
        assert_eq!(s(&[1, 1, 1], 3).pow(2), s(&[1, 2, 3], 3));
        assert_eq!(a.pow(0), TruncatedSeries::one(4));
        assert_eq!(s(&[1, 1], 5).pow(2), s(&[1, 2, 1], 5));
        // shorter order wins
        assert_eq!(s(&[1, 1], 2).mul(&s(&[1, 1], 6)).order(), 2);
        assert_eq!(s(&[1, 2, 3], 4).shift_up(2), s(&[0, 0, 1, 2], 4));
    }

    #[test]
    fn reciprocals() {
        assert_eq!(s(&[1, 1], 6).reciprocal().unwrap(), s(&[1, -1, 1, -1, 1, -1], 6));
        let a = motzkin_series(&int(1), 7);
        assert_eq!(a.reciprocal().unwrap(), s(&[1, -1, -1, -1, -2, -4, -9], 7));
        assert!(matches!(s(&[2, 1], 3).reciprocal(), Err(Error::NonUnitConstantTerm(_))));
        let neg = s(&[-1, 2, 5], 5);
        assert_eq!(neg.mul(&neg.reciprocal().unwrap()), TruncatedSeries::one(5));
    }

    #[test]
    fn motzkin_generating_function() {
        assert_eq!(
            motzkin_series(&int(1), 8).into_coeffs(),
            ints(&[1, 1, 2, 4, 9, 21, 51, 127])
        );
        assert_eq!(
            motzkin_series(&int(0), 9).into_coeffs(),
            ints(&[1, 0, 1, 0, 2, 0, 5, 0, 14])
        );
        let sym = motzkin_series(&Poly::var(), 3);
        assert_eq!(sym.coeff(2), Poly::from_i64s(&[1, 0, 1]));
        assert_eq!(motzkin_power(&int(1), 2, 5).into_coeffs(), ints(&[1, 3, 9, 25, 69]));
    }

    #[test]
    fn reciprocal_powers() {
        assert_eq!(
            reciprocal_power_coeffs(&int(1), 2, 13),
            ints(&[1, -3, 0, 2, 0, 0, -1, -3, -9, -25, -69, -189, -518])
        );
        assert_eq!(
            reciprocal_power_coeffs(&Poly::var(), 0, 3),
            vec![Poly::one(), Poly::from_i64s(&[0, -1]), Poly::from_i64(-1)]
        );
        assert_eq!(reciprocal_power_coeffs(&int(0), 0, 5), ints(&[1, 0, -1, 0, -1]));
    }
}
