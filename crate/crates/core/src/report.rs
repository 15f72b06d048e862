//! Check results shared by every verification routine and by the CLI reports.

use serde::Serialize;

use crate::field::{Field, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// Basis indices of the failing case, in the order the check enumerates them.
    pub indices: Vec<usize>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// An ordered collection of checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CheckSet {
    checks: Vec<Check>,
}

impl CheckSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Compares `lhs == rhs` on every case; records the first failing case.
    pub fn compare<I, F>(&mut self, field: Field, id: &str, cases: I, mut eval: F)
    where
        I: IntoIterator<Item = Vec<usize>>,
        F: FnMut(&[usize]) -> (Vec<Scalar>, Vec<Scalar>),
    {
        let mut n = 0usize;
        let mut failures = 0usize;
        let mut first = None;
        for case in cases {
            n += 1;
            let (lhs, rhs) = eval(&case);
            if lhs != rhs {
                failures += 1;
                if first.is_none() {
                    first = Some(Counterexample { indices: case, lhs: field.format_vec(&lhs), rhs: field.format_vec(&rhs) });
                }
            }
        }
        let (status, detail) =
            if failures == 0 { (Status::Pass, format!("{n} cases")) } else { (Status::Fail, format!("{failures} of {n} cases fail")) };
        self.checks.push(Check { id: id.to_string(), status, detail, counterexample: first });
    }

    pub fn record(&mut self, id: &str, ok: bool, detail: impl Into<String>) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.checks.push(Check { id: id.to_string(), status, detail: detail.into(), counterexample: None });
    }

    pub fn not_applicable(&mut self, id: &str, detail: impl Into<String>) {
        self.checks.push(Check { id: id.to_string(), status: Status::NotApplicable, detail: detail.into(), counterexample: None });
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: CheckSet) {
        self.checks.extend(other.checks);
    }

    /// Appends `other` with every id prefixed by `prefix.`.
    pub fn extend_prefixed(&mut self, prefix: &str, other: CheckSet) {
        for mut c in other.checks {
            c.id = format!("{prefix}.{}", c.id);
            self.checks.push(c);
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed()).collect()
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }
}

/// All index tuples `0..n` of the given arity, lexicographic.
pub fn tuples(n: usize, arity: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

/// Index tuples over a product of ranges.
pub fn grid(dims: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for &n in dims {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}
