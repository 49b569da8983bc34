//! Weight sequences, the shift operator, and the admissible triangle
//!
//! ```text
//! a(n,k) = a(n-1,k-1) + s_k a(n-1,k) + a(n-1,k+1),   a(0,k) = [k = 0],
//! ```
//!
//! with `a(n,k) = 0` for `k < 0` or `n < 0`. `a(n,k)` is the total weight of
//! the 3-step lattice paths from `(0,0)` to `(n,k)`; [`paths_oracle`]
//! enumerates those paths directly for cross-checking.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::{Poly, Ring};

/// A weight sequence `s = (s_0, s_1, ...)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightSpec<R> {
    /// Stored prefix, then `tail` for every later index.
    Explicit {
        values: Vec<R>,
        tail: R,
    },
    Constant(R),
    /// `E^offset` applied to `base`.
    Shifted {
        base: Box<WeightSpec<R>>,
        offset: usize,
    },
}

impl<R: Ring> WeightSpec<R> {
    pub fn explicit(values: Vec<R>, tail: R) -> Self {
        WeightSpec::Explicit { values, tail }
    }

    pub fn constant(value: R) -> Self {
        WeightSpec::Constant(value)
    }

    pub fn weight_at(&self, k: usize) -> R {
        match self {
            WeightSpec::Explicit { values, tail } => values.get(k).unwrap_or(tail).clone(),
            WeightSpec::Constant(v) => v.clone(),
            WeightSpec::Shifted { base, offset } => base.weight_at(k + offset),
        }
    }

    /// The shifted sequence `E s = (s_1, s_2, ...)`.
    pub fn shift(&self) -> Self {
        self.shifted_by(1)
    }

    pub fn shifted_by(&self, j: usize) -> Self {
        match self {
            WeightSpec::Shifted { base, offset } => WeightSpec::Shifted {
                base: base.clone(),
                offset: offset + j,
            },
            _ if j == 0 => self.clone(),
            _ => WeightSpec::Shifted {
                base: Box::new(self.clone()),
                offset: j,
            },
        }
    }

    pub fn try_map<S, F>(&self, f: &F) -> Option<WeightSpec<S>>
    where
        F: Fn(&R) -> Option<S>,
    {
        Some(match self {
            WeightSpec::Explicit { values, tail } => WeightSpec::Explicit {
                values: values.iter().map(f).collect::<Option<_>>()?,
                tail: f(tail)?,
            },
            WeightSpec::Constant(v) => WeightSpec::Constant(f(v)?),
            WeightSpec::Shifted { base, offset } => WeightSpec::Shifted {
                base: Box::new(base.try_map(f)?),
                offset: *offset,
            },
        })
    }
}

impl WeightSpec<Poly> {
    /// Integer version of a spec that does not mention `c`.
    pub fn to_integer(&self) -> Option<WeightSpec<BigInt>> {
        self.try_map(&Poly::as_constant)
    }

    pub fn is_symbolic(&self) -> bool {
        self.to_integer().is_none()
    }
}

impl WeightSpec<BigInt> {
    pub fn to_symbolic(&self) -> WeightSpec<Poly> {
        self.try_map(&|v: &BigInt| Some(Poly::constant(v.clone())))
            .expect("integer specs always lift")
    }
}

fn render_scalar<R: Ring>(v: &R) -> String {
    let s = v.to_string();
    if s == "1*c" {
        "c".to_owned()
    } else {
        s
    }
}

/// Renders in the same syntax [`FromStr`] accepts.
impl<R: Ring> fmt::Display for WeightSpec<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightSpec::Explicit { values, tail } => {
                let vals: Vec<_> = values.iter().map(render_scalar).collect();
                write!(f, "explicit:{};tail={}", vals.join(","), render_scalar(tail))
            }
            WeightSpec::Constant(v) => write!(f, "const:{}", render_scalar(v)),
            WeightSpec::Shifted { base, offset } => write!(f, "shift^{offset}:{base}"),
        }
    }
}

fn parse_scalar(s: &str) -> Result<Poly> {
    let s = s.trim();
    if s == "c" {
        return Ok(Poly::var());
    }
    s.parse::<BigInt>()
        .map(Poly::constant)
        .map_err(|_| Error::Usage(format!("bad weight value `{s}` (expected an integer or `c`)")))
}

/// Grammar: `const:<v>`, `explicit:<v>,<v>,...[;tail=<v>]`, `shift:<spec>`,
/// `shift^<j>:<spec>`, where `<v>` is an integer or the symbol `c`.
impl FromStr for WeightSpec<Poly> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, rest) = s.split_once(':').ok_or_else(|| {
            Error::Usage(format!(
                "bad weight spec `{s}` (expected const:<v>, explicit:<v>,..;tail=<v> or shift^<j>:<spec>)"
            ))
        })?;
        match head {
            "const" => Ok(WeightSpec::Constant(parse_scalar(rest)?)),
            "explicit" => {
                let (list, tail) = match rest.split_once(';') {
                    Some((list, tail)) => {
                        let tail = tail
                            .trim()
                            .strip_prefix("tail=")
                            .ok_or_else(|| Error::Usage(format!("bad explicit tail `{tail}` (expected tail=<v>)")))?;
                        (list, parse_scalar(tail)?)
                    }
                    None => (rest, Poly::zero()),
                };
                let values = if list.trim().is_empty() {
                    Vec::new()
                } else {
                    list.split(',').map(parse_scalar).collect::<Result<_>>()?
                };
                Ok(WeightSpec::Explicit { values, tail })
            }
            _ => {
                let offset = match head.strip_prefix("shift") {
                    Some("") => 1,
                    Some(pow) => pow
                        .strip_prefix('^')
                        .and_then(|j| j.parse::<usize>().ok())
                        .ok_or_else(|| Error::Usage(format!("bad shift `{head}`")))?,
                    None => return Err(Error::Usage(format!("unknown weight spec kind `{head}`"))),
                };
                Ok(rest.parse::<WeightSpec<Poly>>()?.shifted_by(offset))
            }
        }
    }
}

/// The triangle `a(n,k)` for `0 <= k <= n <= max_n`.
#[derive(Clone, Debug)]
pub struct AdmissibleTable<R> {
    spec: WeightSpec<R>,
    rows: Vec<Vec<R>>,
}

impl<R: Ring> AdmissibleTable<R> {
    pub fn build(spec: &WeightSpec<R>, max_n: usize) -> Self {
        let weights: Vec<R> = (0..=max_n).map(|k| spec.weight_at(k)).collect();
        let mut rows: Vec<Vec<R>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![R::one()]);
        for n in 1..=max_n {
            let prev = &rows[n - 1];
            let row = (0..=n)
                .map(|k| {
                    let mut v = if k > 0 { prev[k - 1].clone() } else { R::zero() };
                    if let Some(a) = prev.get(k) {
                        v = v.add(&weights[k].mul(a));
                    }
                    if let Some(a) = prev.get(k + 1) {
                        v = v.add(a);
                    }
                    v
                })
                .collect();
            rows.push(row);
        }
        AdmissibleTable {
            spec: spec.clone(),
            rows,
        }
    }

    pub fn spec(&self) -> &WeightSpec<R> {
        &self.spec
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, n: usize) -> Option<&[R]> {
        self.rows.get(n).map(Vec::as_slice)
    }

    /// `a(n,k)`, zero for `n < 0` or `k > n`.
    pub fn column(&self, k: usize, n: i64) -> Result<R> {
        if n < 0 {
            return Ok(R::zero());
        }
        let row = self.rows.get(n as usize).ok_or(Error::OutOfRange {
            requested: n,
            max_n: self.max_n(),
        })?;
        Ok(row.get(k).cloned().unwrap_or_else(R::zero))
    }
}

/// Longest path length [`paths_oracle`] will enumerate.
pub const ORACLE_MAX_LEN: usize = 14;

/// Total weight of 3-step paths `(0,0) -> (n,k)` that never go below the
/// axis, by explicit enumeration. `H` at height `j` weighs `s_j`.
pub fn paths_oracle<R: Ring>(w: &WeightSpec<R>, n: usize, k: usize) -> Result<R> {
    if n > ORACLE_MAX_LEN {
        return Err(Error::TooLarge {
            n,
            limit: ORACLE_MAX_LEN,
        });
    }
    let weights: Vec<R> = (0..=n).map(|j| w.weight_at(j)).collect();
    let mut total = R::zero();
    walk(&weights, n, k, 0, R::one(), &mut total);
    Ok(total)
}

fn walk<R: Ring>(weights: &[R], left: usize, target: usize, height: usize, weight: R, total: &mut R) {
    if left == 0 {
        if height == target {
            *total = total.add(&weight);
        }
        return;
    }
    walk(weights, left - 1, target, height + 1, weight.clone(), total);
    walk(weights, left - 1, target, height, weight.mul(&weights[height]), total);
    if height > 0 {
        walk(weights, left - 1, target, height - 1, weight, total);
    }
}
