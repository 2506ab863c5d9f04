//! Verification reports.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::scalar::Rational;

/// Where a check failed and what the nonzero residual was there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Basis element names of the violating argument tuple.
    pub args: Vec<String>,
    /// Nonzero residual coefficients, keyed by basis name.
    pub residual: Vec<(String, Rational)>,
}

impl Witness {
    pub fn new(args: Vec<String>, names: &[String], residual: &[Rational]) -> Self {
        Witness {
            args,
            residual: names
                .iter()
                .zip(residual)
                .filter(|(_, c)| !c.is_zero())
                .map(|(n, c)| (n.clone(), c.clone()))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub pass: bool,
    /// Verification order (weight or arity bound) for truncated checks.
    pub order: Option<usize>,
    pub witness: Option<Witness>,
}

impl Report {
    pub fn pass(check: impl Into<String>) -> Self {
        Report {
            check: check.into(),
            pass: true,
            order: None,
            witness: None,
        }
    }

    pub fn fail(check: impl Into<String>, witness: Witness) -> Self {
        Report {
            check: check.into(),
            pass: false,
            order: None,
            witness: Some(witness),
        }
    }

    pub fn with_order(mut self, order: usize) -> Self {
        self.order = Some(order);
        self
    }

    pub fn from_witness(check: impl Into<String>, witness: Option<Witness>) -> Self {
        match witness {
            None => Report::pass(check),
            Some(w) => Report::fail(check, w),
        }
    }
}

pub fn all_pass(reports: &[Report]) -> bool {
    reports.iter().all(|r| r.pass)
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", if self.pass { "PASS" } else { "FAIL" }, self.check)?;
        if let Some(o) = self.order {
            write!(f, " (order {o})")?;
        }
        if let Some(w) = &self.witness {
            write!(f, " at ({})", w.args.join(", "))?;
            let parts: Vec<String> = w.residual.iter().map(|(n, c)| format!("{c}·{n}")).collect();
            write!(f, " residual {}", if parts.is_empty() { "0".into() } else { parts.join(" + ") })?;
        }
        Ok(())
    }
}
