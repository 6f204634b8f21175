use std::fmt;

use serde::Serialize;

/// One failed axiom together with the elements that witness the failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: &'static str,
    pub witness: Vec<usize>,
}

/// Outcome of an axiom check.
///
/// By default only the first witness per axiom is kept; verbose checks keep
/// all of them.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub(crate) fn collector(verbose: bool) -> Collector {
        Collector { verbose, violations: Vec::new() }
    }

    pub fn violates(&self, axiom: &str) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    pub fn first(&self, axiom: &str) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            return write!(f, "all axioms hold");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{} at {:?}", v.axiom, v.witness)?;
        }
        Ok(())
    }
}

pub(crate) struct Collector {
    verbose: bool,
    violations: Vec<Violation>,
}

impl Collector {
    /// Whether further witnesses for `axiom` are still wanted.
    pub fn wants(&self, axiom: &str) -> bool {
        self.verbose || !self.violations.iter().any(|v| v.axiom == axiom)
    }

    pub fn record(&mut self, axiom: &'static str, witness: Vec<usize>) {
        if self.wants(axiom) {
            self.violations.push(Violation { axiom, witness });
        }
    }

    pub fn finish(self) -> AxiomReport {
        AxiomReport { passed: self.violations.is_empty(), violations: self.violations }
    }
}
