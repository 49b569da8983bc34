//! Hankel matrices of shifted triangle columns and their exact determinants
//! `D(m,k,n) = det(a(i+j+m, k))_{i,j<n}`, including backward shifts `m < 0`.

use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::sequences::{AdmissibleTable, WeightSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HankelSpec {
    pub m: i64,
    pub k: usize,
    pub n: usize,
}

impl HankelSpec {
    pub fn new(m: i64, k: usize, n: usize) -> Self {
        HankelSpec { m, k, n }
    }

    /// Deepest triangle row the matrix reads, if any row is read at all.
    pub fn depth(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let top = 2 * (self.n as i64 - 1) + self.m;
        (top >= 0).then_some(top as usize)
    }
}

/// Dense row-major square matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareMatrix<R> {
    n: usize,
    entries: Vec<R>,
}

impl<R: Ring> SquareMatrix<R> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        SquareMatrix { n, entries }
    }

    /// Panics unless `rows` is square.
    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix rows must have length {n}");
        SquareMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Hankel matrix `(x[i+j+shift])` over a sequence `x`, zero at negative
    /// indices. Panics if the sequence is too short.
    pub fn hankel_from_seq(x: &[R], shift: i64, n: usize) -> Self {
        Self::from_fn(n, |i, j| {
            let idx = (i + j) as i64 + shift;
            if idx < 0 {
                R::zero()
            } else {
                x[idx as usize].clone()
            }
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<R>> {
        self.entries
            .chunks(self.n.max(1))
            .map(<[R]>::to_vec)
            .take(self.n)
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

/// `(a(i+j+m, k))_{i,j<n}` from a prebuilt table.
pub fn hankel_matrix<R: Ring>(t: &AdmissibleTable<R>, spec: HankelSpec) -> Result<SquareMatrix<R>> {
    if let Some(depth) = spec.depth() {
        if depth > t.max_n() {
            return Err(Error::OutOfRange {
                requested: depth as i64,
                max_n: t.max_n(),
            });
        }
    }
    let mut err = None;
    let m = SquareMatrix::from_fn(spec.n, |i, j| {
        t.column(spec.k, (i + j) as i64 + spec.m).unwrap_or_else(|e| {
            err.get_or_insert(e);
            R::zero()
        })
    });
    match err {
        Some(e) => Err(e),
        None => Ok(m),
    }
}

/// Bareiss one-step fraction-free elimination.
///
/// A zero pivot is replaced by the first lower row with a nonzero entry in
/// the pivot column (flipping the sign); if there is none the determinant is
/// zero. Every division is exact by the Bareiss invariant, so a failed one is
/// reported as `InternalDivision`.
pub fn det_fraction_free<R: Ring>(a: &SquareMatrix<R>) -> Result<R> {
    let n = a.n;
    if n == 0 {
        return Ok(R::one());
    }
    let mut rows = a.rows();
    let mut negate = false;
    let mut prev = R::one();
    for step in 0..n - 1 {
        if rows[step][step].is_zero() {
            let Some(swap) = (step + 1..n).find(|&r| !rows[r][step].is_zero()) else {
                return Ok(R::zero());
            };
            rows.swap(step, swap);
            negate = !negate;
        }
        let (done, rest) = rows.split_at_mut(step + 1);
        let pivot_row = &done[step];
        let pivot = &pivot_row[step];
        for row in rest.iter_mut() {
            let lead = row[step].clone();
            for j in step + 1..n {
                let cross = pivot.mul(&row[j]).sub(&lead.mul(&pivot_row[j]));
                row[j] = cross.exact_div(&prev).map_err(|e| Error::InternalDivision {
                    step,
                    source: Box::new(e),
                })?;
            }
            row[step] = R::zero();
        }
        prev = pivot.clone();
    }
    let det = rows[n - 1][n - 1].clone();
    Ok(if negate { det.neg() } else { det })
}

/// `D(m,k,n)(w)`, building the triangle exactly as deep as needed.
pub fn hankel_det<R: Ring>(w: &WeightSpec<R>, m: i64, k: usize, n: usize) -> Result<R> {
    let spec = HankelSpec::new(m, k, n);
    let table = AdmissibleTable::build(w, spec.depth().unwrap_or(0));
    hankel_det_with(&table, spec)
}

/// Same as [`hankel_det`] against an existing table.
pub fn hankel_det_with<R: Ring>(t: &AdmissibleTable<R>, spec: HankelSpec) -> Result<R> {
    det_fraction_free(&hankel_matrix(t, spec)?)
}

/// `D(m,k,0), ..., D(m,k,n_max)` from one shared table.
pub fn hankel_sequence<R: Ring>(w: &WeightSpec<R>, m: i64, k: usize, n_max: usize) -> Result<Vec<R>> {
    let depth = HankelSpec::new(m, k, n_max).depth().unwrap_or(0);
    let table = AdmissibleTable::build(w, depth);
    (0..=n_max)
        .map(|n| hankel_det_with(&table, HankelSpec::new(m, k, n)))
        .collect()
}
