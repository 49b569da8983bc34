//! Structured outcome of a verification run.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ring::Ring;

pub type Params = BTreeMap<String, String>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClaimId {
    #[serde(rename = "lemma13")]
    Lemma13,
    #[serde(rename = "theorem1")]
    Theorem1,
    #[serde(rename = "theorem2")]
    Theorem2,
    #[serde(rename = "corollary6")]
    Corollary6,
    #[serde(rename = "identities7_8")]
    Identities7_8,
    #[serde(rename = "conjectures9_10")]
    Conjectures9_10,
    #[serde(rename = "series_identities")]
    SeriesIdentities,
    #[serde(rename = "theorem3")]
    Theorem3,
}

impl ClaimId {
    pub const ALL: [ClaimId; 8] = [
        ClaimId::Lemma13,
        ClaimId::Theorem1,
        ClaimId::Theorem2,
        ClaimId::Corollary6,
        ClaimId::Identities7_8,
        ClaimId::Conjectures9_10,
        ClaimId::SeriesIdentities,
        ClaimId::Theorem3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClaimId::Lemma13 => "lemma13",
            ClaimId::Theorem1 => "theorem1",
            ClaimId::Theorem2 => "theorem2",
            ClaimId::Corollary6 => "corollary6",
            ClaimId::Identities7_8 => "identities7_8",
            ClaimId::Conjectures9_10 => "conjectures9_10",
            ClaimId::SeriesIdentities => "series_identities",
            ClaimId::Theorem3 => "theorem3",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == s)
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Refuted,
    Mixed,
}

impl Status {
    /// `Verified` iff nothing failed and something was tested; `Refuted` when
    /// every instance failed.
    pub fn from_counts(instances: usize, failures: usize) -> Self {
        if failures == 0 && instances > 0 {
            Status::Verified
        } else if failures > 0 && failures == instances {
            Status::Refuted
        } else {
            Status::Mixed
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Refuted => "refuted",
            Status::Mixed => "mixed",
        }
    }
}

/// Failed instance: full parameters and both sides, rendered canonically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub params: Params,
    pub lhs: String,
    pub rhs: String,
    pub category: String,
}

/// Per-clause tally. Only clauses with `asserted = true` feed the report's
/// headline counts; the others are alternative readings kept for diagnosis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseOutcome {
    pub clause: String,
    pub asserted: bool,
    pub instances_tested: usize,
    pub failures: Vec<Witness>,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub claim_id: ClaimId,
    pub params: Params,
    pub instances_tested: usize,
    pub failures: Vec<Witness>,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub clauses: Vec<ClauseOutcome>,
}

impl CheckReport {
    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }

    pub fn clause(&self, name: &str) -> Option<&ClauseOutcome> {
        self.clauses.iter().find(|c| c.clause == name)
    }
}

/// One evaluated instance of one clause.
#[derive(Clone, Debug)]
pub struct Instance<R> {
    pub clause: &'static str,
    pub asserted: bool,
    pub params: Params,
    pub lhs: R,
    pub rhs: R,
}

impl<R: Ring> Instance<R> {
    pub fn new(clause: &'static str, params: Params, lhs: R, rhs: R) -> Self {
        Instance {
            clause,
            asserted: true,
            params,
            lhs,
            rhs,
        }
    }

    /// An alternative reading that is reported but does not decide the status.
    pub fn diagnostic(clause: &'static str, params: Params, lhs: R, rhs: R) -> Self {
        Instance {
            asserted: false,
            ..Self::new(clause, params, lhs, rhs)
        }
    }

    fn witness(&self) -> Option<Witness> {
        if self.lhs == self.rhs {
            return None;
        }
        let category = if !self.lhs.is_zero() && self.lhs == self.rhs.neg() {
            "sign-flip"
        } else {
            "mismatch"
        };
        let mut params = self.params.clone();
        params.insert("clause".to_owned(), self.clause.to_owned());
        Some(Witness {
            params,
            lhs: self.lhs.to_string(),
            rhs: self.rhs.to_string(),
            category: category.to_owned(),
        })
    }
}

/// Folds instances, in order, into a report. Clause order is order of first
/// appearance.
pub fn tally<R: Ring>(claim_id: ClaimId, params: Params, instances: Vec<Instance<R>>) -> CheckReport {
    let mut clauses: Vec<ClauseOutcome> = Vec::new();
    for inst in instances {
        let idx = match clauses.iter().position(|c| c.clause == inst.clause) {
            Some(i) => i,
            None => {
                clauses.push(ClauseOutcome {
                    clause: inst.clause.to_owned(),
                    asserted: inst.asserted,
                    instances_tested: 0,
                    failures: Vec::new(),
                    status: Status::Mixed,
                });
                clauses.len() - 1
            }
        };
        let c = &mut clauses[idx];
        c.instances_tested += 1;
        c.failures.extend(inst.witness());
    }
    let mut instances_tested = 0;
    let mut failures = Vec::new();
    for c in clauses.iter_mut() {
        c.status = Status::from_counts(c.instances_tested, c.failures.len());
        if c.asserted {
            instances_tested += c.instances_tested;
            failures.extend(c.failures.iter().cloned());
        }
    }
    CheckReport {
        claim_id,
        params,
        instances_tested,
        status: Status::from_counts(instances_tested, failures.len()),
        failures,
        clauses,
    }
}

/// Builds a [`Params`] map from `(key, value)` pairs.
#[macro_export]
macro_rules! params {
    ($($k:expr => $v:expr),* $(,)?) => {{
        #[allow(unused_mut)]
        let mut p = $crate::verify::Params::new();
        $( p.insert($k.to_string(), $v.to_string()); )*
        p
    }};
}
