//! Verification suites shared by the acceptance tests and the CLI.
//!
//! Each suite sweeps a finite grid, compares closed forms against an
//! independent computation and collects every mismatch.

mod algebra;
mod hall_suite;
mod schur_suite;
mod vbln_suite;

use std::fmt;

use serde::Serialize;

pub use algebra::{hecke_suite, laurent_suite, length_suite};
pub use hall_suite::hall_suite;
pub use schur_suite::schur_oracle_suite;
pub use vbln_suite::{level_coherence_suite, relation_e_suite, triangular_suite};

/// Outcome of one suite.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn new(name: &str) -> Self {
        Self {
            name: name.to_string(),
            checked: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checked > 0
    }

    /// Records one comparison.
    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn merge(&mut self, other: SuiteReport) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {}: {} checks, {} failures",
            self.name,
            self.checked,
            self.failures.len()
        )?;
        for msg in self.failures.iter().take(5) {
            write!(f, "\n    {msg}")?;
        }
        Ok(())
    }
}

/// Grid sizes. `Config::default()` is the full acceptance grid.
#[derive(Clone, Debug)]
pub struct Config {
    /// Smallest level swept.
    pub r_min: usize,
    /// Largest level swept.
    pub r_max: usize,
    /// Periods swept by the Schur suites.
    pub periods: Vec<usize>,
    /// Field sizes for brute-force Hall numbers.
    pub primes: Vec<u64>,
    /// Seeded random samples per item where a suite samples.
    pub samples: usize,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            r_min: 1,
            r_max: 4,
            periods: vec![2, 3],
            primes: vec![2, 3],
            samples: 200,
            seed: 7,
        }
    }
}

impl Config {
    /// Levels from `max(floor, r_min)` to `r_max`.
    pub fn levels(&self, floor: usize) -> std::ops::RangeInclusive<usize> {
        floor.max(self.r_min)..=self.r_max
    }

    /// `|j - i|` bound of the `Θ_△(n, r)` window used by the exhaustive sweeps.
    pub fn span(&self, n: usize) -> i64 {
        n as i64
    }
}

/// All suites by name, in acceptance order.
pub const SUITES: [&str; 8] = [
    "schur-oracle",
    "length",
    "hecke",
    "hall",
    "relation-e",
    "level-coherence",
    "triangular",
    "laurent",
];

pub fn run_suite(name: &str, cfg: &Config) -> Option<SuiteReport> {
    Some(match name {
        "schur-oracle" => schur_oracle_suite(cfg),
        "length" => length_suite(cfg),
        "hecke" => hecke_suite(cfg),
        "hall" => hall_suite(cfg),
        "relation-e" => relation_e_suite(cfg),
        "level-coherence" => level_coherence_suite(cfg),
        "triangular" => triangular_suite(cfg),
        "laurent" => laurent_suite(cfg),
        _ => return None,
    })
}
