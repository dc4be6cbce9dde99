use serde::{Deserialize, Serialize};

/// Outcome of checking one law or identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub law: String,
    pub holds: bool,
    pub samples_run: usize,
    /// First counterexample found, rendered for humans.
    pub witness: Option<String>,
}

impl Verdict {
    pub fn pass(law: impl Into<String>, samples_run: usize) -> Self {
        Verdict {
            law: law.into(),
            holds: true,
            samples_run,
            witness: None,
        }
    }

    pub fn fail(law: impl Into<String>, samples_run: usize, witness: impl Into<String>) -> Self {
        Verdict {
            law: law.into(),
            holds: false,
            samples_run,
            witness: Some(witness.into()),
        }
    }
}

/// Accumulates samples for a single law and keeps the first witness.
#[derive(Debug, Clone)]
pub(crate) struct LawTally {
    law: String,
    samples: usize,
    witness: Option<String>,
}

impl LawTally {
    pub(crate) fn new(law: impl Into<String>) -> Self {
        LawTally {
            law: law.into(),
            samples: 0,
            witness: None,
        }
    }

    pub(crate) fn record(&mut self, holds: bool, witness: impl FnOnce() -> String) {
        self.samples += 1;
        if !holds && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    pub(crate) fn finish(self) -> Verdict {
        match self.witness {
            None => Verdict::pass(self.law, self.samples),
            Some(w) => Verdict::fail(self.law, self.samples, w),
        }
    }
}

/// A named list of verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub subject: String,
    pub verdicts: Vec<Verdict>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }

    pub fn verdict(&self, law: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.law == law)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| !v.holds)
    }
}
