//! Fibonacci and Lucas polynomials, and the bivariate Lucas family
//! `L_n(X,S) = X L_{n-1} + S L_{n-2}`, `L_0 = 2`, `L_1 = X`.
//!
//! The univariate families are stored as [`Poly`] in the variable `c`. The
//! bivariate family is never stored; it is evaluated directly in the ring the
//! arguments live in.

use crate::ring::{Poly, Ring};
use crate::series::TruncatedSeries;

/// `F_0..F_N` and `L_0..L_N` with `P_n = c P_{n-1} - P_{n-2}`.
#[derive(Clone, Debug)]
pub struct PolyFamilyCache {
    fib: Vec<Poly>,
    luc: Vec<Poly>,
}

impl PolyFamilyCache {
    pub fn new(max_n: usize) -> Self {
        PolyFamilyCache {
            fib: three_term(Poly::zero(), Poly::one(), max_n),
            luc: three_term(Poly::from_i64(2), Poly::var(), max_n),
        }
    }

    pub fn fib(&self, n: usize) -> &Poly {
        &self.fib[n]
    }

    pub fn luc(&self, n: usize) -> &Poly {
        &self.luc[n]
    }

    pub fn max_n(&self) -> usize {
        self.fib.len() - 1
    }
}

fn three_term(p0: Poly, p1: Poly, max_n: usize) -> Vec<Poly> {
    let x = Poly::var();
    let mut out = vec![p0, p1];
    for n in 2..=max_n {
        let next = x.mul(&out[n - 1]).sub(&out[n - 2]);
        out.push(next);
    }
    out.truncate(max_n + 1);
    out
}

pub fn fibonacci_poly(n: usize) -> Poly {
    three_term(Poly::zero(), Poly::one(), n).swap_remove(n)
}

pub fn lucas_poly(n: usize) -> Poly {
    three_term(Poly::from_i64(2), Poly::var(), n).swap_remove(n)
}

/// `L_n(x, s)` for scalars in any ring.
pub fn lucas_bivariate_eval<R: Ring>(n: usize, x: &R, s: &R) -> R {
    let (mut prev, mut cur) = (R::from_i64(2), x.clone());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = x.mul(&cur).add(&s.mul(&prev));
        prev = cur;
        cur = next;
    }
    cur
}

/// `L_n(1 - c x, -x^2)` as a polynomial in `x`, mod `x^order`.
pub fn lucas_bivariate_at<R: Ring>(n: usize, cval: &R, order: usize) -> TruncatedSeries<R> {
    let big_x = TruncatedSeries::new(vec![R::one(), cval.neg()], order);
    let s = TruncatedSeries::monomial(R::from_i64(-1), 2, order);
    let mut prev = TruncatedSeries::monomial(R::from_i64(2), 0, order);
    if n == 0 {
        return prev;
    }
    let mut cur = big_x.clone();
    for _ in 1..n {
        let next = big_x.mul(&cur).add(&s.mul(&prev));
        prev = cur;
        cur = next;
    }
    cur
}
