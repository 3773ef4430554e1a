//! Structured verification reports: one entry per law and index tuple.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::matrix::{difference, Matrix};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub law: String,
    /// Human-readable statement of the identity being tested.
    pub formula: String,
    pub index: Vec<String>,
    pub passed: bool,
    /// First basis vector on which the two sides differ, when they do.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Report {
        Report {
            title: title.into(),
            ..Report::default()
        }
    }

    pub fn record(
        &mut self,
        law: &str,
        formula: &str,
        index: Vec<String>,
        witness: Option<String>,
    ) {
        self.checks.push(Check {
            law: law.to_string(),
            formula: formula.to_string(),
            index,
            passed: witness.is_none(),
            witness,
        });
    }

    pub fn pass(&mut self, law: &str, formula: &str, index: Vec<String>) {
        self.record(law, formula, index, None);
    }

    pub fn fail(&mut self, law: &str, formula: &str, index: Vec<String>, witness: String) {
        self.record(law, formula, index, Some(witness));
    }

    /// Records whether two linear maps agree.
    pub fn compare(
        &mut self,
        law: &str,
        formula: &str,
        index: Vec<String>,
        lhs: Result<Matrix>,
        rhs: Result<Matrix>,
    ) {
        let witness = difference(&lhs, &rhs);
        self.record(law, formula, index, witness);
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
        self.notes.extend(other.notes);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed_laws(&self) -> BTreeSet<String> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.law.clone())
            .collect()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn laws(&self) -> BTreeSet<String> {
        self.checks.iter().map(|c| c.law.clone()).collect()
    }

    /// Sorts checks by law, then index tuple, so output never depends on
    /// evaluation order.
    pub fn normalize(&mut self) {
        self.checks
            .sort_by(|a, b| (&a.law, &a.index).cmp(&(&b.law, &b.index)));
    }

    pub fn normalized(mut self) -> Report {
        self.normalize();
        self
    }

    pub fn to_text(&self) -> String {
        let mut r = self.clone();
        r.normalize();
        let mut out = String::new();
        let failed = r.checks.iter().filter(|c| !c.passed).count();
        let _ = writeln!(
            out,
            "{}: {} checks, {} failed",
            r.title,
            r.checks.len(),
            failed
        );
        for c in &r.checks {
            let verdict = if c.passed { "ok  " } else { "FAIL" };
            let _ = write!(out, "  {verdict} {} [{}]", c.law, c.index.join(", "));
            if let Some(w) = &c.witness {
                let _ = write!(out, " -- {} -- {w}", c.formula);
            }
            out.push('\n');
        }
        for n in &r.notes {
            let _ = writeln!(out, "  note: {n}");
        }
        out
    }
}

/// Label list helper for index tuples.
pub fn idx<I, S>(parts: I) -> Vec<String>
where
    I: IntoIterator<Item = S>,
    S: ToString,
{
    parts.into_iter().map(|s| s.to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_is_by_law_then_index() {
        let mut r = Report::new("t");
        r.pass("b", "", idx(["1"]));
        r.fail("a", "", idx(["2"]), "x".into());
        r.pass("a", "", idx(["1"]));
        r.normalize();
        let order: Vec<_> = r
            .checks
            .iter()
            .map(|c| (c.law.as_str(), c.index[0].as_str()))
            .collect();
        assert_eq!(order, [("a", "1"), ("a", "2"), ("b", "1")]);
        assert_eq!(r.failed_laws().into_iter().collect::<Vec<_>>(), ["a"]);
        assert!(!r.all_passed());
    }
}
