//! A registry of checks that evaluate published statements about Ward,
//! double Ward and related quasigroups over generated families of tables.
//!
//! Every entry pairs an instance generator with a predicate. The generator
//! yields [`Instance`]s up to an order cap; the predicate either passes,
//! reports that the instance does not meet the statement's hypotheses, or
//! fails with a reason and a witness tuple. A failing instance is kept as a
//! [`Counterexample`] and can be re-checked with [`replay`].
//!
//! Statements given as biconditionals are checked one direction at a time,
//! so the failure reason names the direction that broke.

mod families;
mod registry;
mod sec2;
mod sec3;
mod sec4;
mod sec5;
mod sec6;
mod sec7;
mod util;

use std::fmt;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::table::Magma;

pub use registry::registry_ids;

/// Parameters of a suite run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Largest order of any generated table; each entry also has its own cap.
    pub max_order: usize,
    /// Enables the order-5 sweep of the parastrophe theorem and the order-6
    /// search, which are slow.
    pub extended: bool,
}

impl SuiteConfig {
    pub fn new(max_order: usize) -> Self {
        SuiteConfig {
            max_order,
            extended: false,
        }
    }

    pub fn with_extended(mut self, extended: bool) -> Self {
        self.extended = extended;
        self
    }
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig::new(4)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Confirmed,
    Refuted,
    /// No instance met the hypotheses within the caps.
    Skipped,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Confirmed => "confirmed",
            Verdict::Refuted => "refuted",
            Verdict::Skipped => "skipped",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One member of a family: the tables a statement is evaluated on, their
/// distinguished points, and a tag for entries with several parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub label: String,
    pub tables: Vec<Magma>,
    pub points: Vec<usize>,
    pub part: usize,
}

impl Instance {
    pub fn new(label: impl Into<String>, tables: Vec<Magma>, points: Vec<usize>) -> Self {
        Instance {
            label: label.into(),
            tables,
            points,
            part: 0,
        }
    }

    pub fn with_part(mut self, part: usize) -> Self {
        self.part = part;
        self
    }

    pub(crate) fn t(&self, i: usize) -> &Magma {
        &self.tables[i]
    }

    pub(crate) fn p(&self, i: usize) -> usize {
        self.points[i]
    }
}

/// Why a predicate failed on an instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub reason: String,
    /// Elements (0-based) locating the failure; empty when the failure is a
    /// whole-table comparison.
    pub witness: Vec<usize>,
}

impl Failure {
    pub fn new(reason: impl Into<String>) -> Self {
        Failure {
            reason: reason.into(),
            witness: Vec::new(),
        }
    }

    pub fn with_witness(mut self, witness: Vec<usize>) -> Self {
        self.witness = witness;
        self
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.reason)?;
        if !self.witness.is_empty() {
            write!(f, " at {:?}", self.witness)?;
        }
        Ok(())
    }
}

/// `Ok(true)`: the instance met the hypotheses and passed. `Ok(false)`: the
/// hypotheses do not hold, so the instance is not counted.
pub(crate) type Step = std::result::Result<bool, Failure>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub instance: Instance,
    pub failure: Failure,
}

/// How an entry turns instance outcomes into a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantifier {
    /// Confirmed when every counted instance passes.
    Universal,
    /// A search: confirmed when some instance is found. The predicate
    /// reports a find as a failure and the find is kept as the example.
    Existential,
}

/// The report for one registry entry.
#[derive(Debug, Clone)]
pub struct TheoremCheck {
    pub id: &'static str,
    pub description: &'static str,
    pub family: &'static str,
    /// The order cap actually used: the smaller of the configured cap and the
    /// entry's own.
    pub max_order: usize,
    pub quantifier: Quantifier,
    pub verdict: Verdict,
    /// Instances that met the hypotheses.
    pub instances: usize,
    /// Instances on which the predicate failed (finds, for searches).
    pub failures: usize,
    /// The first failing instance.
    pub counterexample: Option<Counterexample>,
    /// Set for entries whose statement is known to be wrong as printed; a
    /// refutation is then the expected outcome.
    pub known_discrepancy: bool,
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl TheoremCheck {
    /// Whether the outcome matches expectations: statements not known to be
    /// wrong are confirmed or skipped. Known discrepancies may be confirmed
    /// when their counterexamples lie above the cap, and searches carry no
    /// expectation, so both always match.
    pub fn as_expected(&self) -> bool {
        match self.quantifier {
            Quantifier::Existential => true,
            Quantifier::Universal => self.known_discrepancy || self.verdict != Verdict::Refuted,
        }
    }
}

/// Re-runs the predicate of entry `id` on an instance; `Some` means it
/// fails (or, for a search, is a find).
pub fn replay(id: &str, instance: &Instance) -> Result<Option<Failure>> {
    let entry = registry::lookup(id).ok_or_else(|| Error::UnknownCheck(id.to_string()))?;
    Ok((entry.check)(instance).err())
}

/// One-line description and family descriptor of entry `id`.
pub fn describe(id: &str) -> Option<(&'static str, &'static str)> {
    registry::lookup(id).map(|e| (e.description, e.family))
}

pub fn run_check(id: &str, config: &SuiteConfig) -> Result<TheoremCheck> {
    let entry = registry::lookup(id).ok_or_else(|| Error::UnknownCheck(id.to_string()))?;
    Ok(run_entry(entry, config))
}

/// Every entry in registry order.
pub fn run_all(config: &SuiteConfig) -> Vec<TheoremCheck> {
    registry::REGISTRY
        .iter()
        .map(|e| run_entry(e, config))
        .collect()
}

fn run_entry(entry: &registry::Entry, config: &SuiteConfig) -> TheoremCheck {
    let start = Instant::now();
    let cap = config.max_order.min(entry.cap);
    let mut report = TheoremCheck {
        id: entry.id,
        description: entry.description,
        family: entry.family,
        max_order: cap,
        quantifier: entry.quantifier,
        verdict: Verdict::Skipped,
        instances: 0,
        failures: 0,
        counterexample: None,
        known_discrepancy: entry.discrepancy,
        notes: entry.notes.iter().map(|n| n.to_string()).collect(),
        elapsed: Duration::ZERO,
    };
    if entry.extended_only && !config.extended {
        report.notes.push("runs only with the extended flag".into());
        report.elapsed = start.elapsed();
        return report;
    }
    if cap > 0 {
        for instance in (entry.instances)(cap, config.extended) {
            match (entry.check)(&instance) {
                Ok(false) => {}
                Ok(true) => report.instances += 1,
                Err(failure) => {
                    report.instances += 1;
                    report.failures += 1;
                    if report.counterexample.is_none() {
                        report.counterexample = Some(Counterexample { instance, failure });
                    }
                }
            }
        }
    }
    report.verdict = match (entry.quantifier, report.instances, report.failures) {
        (_, 0, _) => Verdict::Skipped,
        (Quantifier::Universal, _, 0) => Verdict::Confirmed,
        (Quantifier::Universal, _, _) => Verdict::Refuted,
        (Quantifier::Existential, _, 0) => Verdict::Refuted,
        (Quantifier::Existential, _, _) => Verdict::Confirmed,
    };
    report.elapsed = start.elapsed();
    report
}

#[cfg(test)]
mod tests;
