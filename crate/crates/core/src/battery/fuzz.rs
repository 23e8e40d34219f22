//! Seeded fuzzing: random modules over the fixture rings, each run through
//! the whole battery. Every failure names the command that replays it.

use std::ops::Range;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use super::{run_battery, BatteryMeta, BatteryReport, Tally};
use crate::algmod::catalog::ring_by_name;
use crate::algmod::random::random_module_traced;
use crate::algmod::FiniteAlgebra;
use crate::error::{Error, Result};
use crate::preds::Witness;
use crate::Budget;

/// Constructor steps per random module.
pub const FUZZ_STEPS: usize = 6;

/// Rings fuzzed by default, by short name.
pub fn fuzz_rings() -> Vec<&'static str> {
    vec!["tz2", "dn", "m2f2", "ut2"]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzConfig {
    pub rings: Vec<String>,
    /// Seeds run for every ring.
    pub seeds: Range<u64>,
    pub budget: Budget,
    pub steps: usize,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            rings: fuzz_rings().into_iter().map(String::from).collect(),
            seeds: 0..125,
            budget: Budget::default(),
            steps: FUZZ_STEPS,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzFailure {
    pub ring: String,
    pub seed: u64,
    pub check: String,
    pub witness: Witness,
    pub replay: String,
}

/// One random module and its battery report.
#[derive(Clone, Debug, Serialize)]
pub struct FuzzRun {
    pub ring: String,
    pub seed: u64,
    pub steps: Vec<String>,
    pub report: BatteryReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct FuzzReport {
    pub runs: usize,
    pub totals: Tally,
    pub failures: Vec<FuzzFailure>,
    pub warnings: Vec<String>,
    #[serde(skip)]
    pub runtime: Duration,
}

impl FuzzReport {
    pub fn has_failures(&self) -> bool {
        !self.failures.is_empty()
    }
}

/// The CLI invocation that reruns exactly one seed.
pub fn replay_command(ring: &str, seed: u64) -> String {
    format!("modgoldie fuzz --rings {ring} --seeds {seed}..{}", seed + 1)
}

fn ring(name: &str) -> Result<Arc<FiniteAlgebra>> {
    let key = name.strip_prefix("ring-").unwrap_or(name);
    ring_by_name(key)
        .map(Arc::new)
        .ok_or_else(|| Error::Fixture(format!("unknown ring `{name}`")))
}

/// Builds the random module for `(ring, seed)` and runs the battery on it.
pub fn fuzz_one(ring_name: &str, seed: u64, budget: Budget, steps: usize) -> Result<FuzzRun> {
    let a = ring(ring_name)?;
    let rm = random_module_traced(&a, seed, steps);
    let meta = BatteryMeta {
        progenerator: rm.free,
        budget,
    };
    let report = run_battery(&rm.module, meta);
    Ok(FuzzRun {
        ring: ring_name.to_string(),
        seed,
        steps: rm.steps,
        report,
    })
}

/// Runs every `(ring, seed)` pair in parallel; results are in input order.
pub fn fuzz(config: &FuzzConfig) -> Result<FuzzReport> {
    let start = Instant::now();
    for r in &config.rings {
        ring(r)?;
    }
    let jobs: Vec<(&str, u64)> = config
        .rings
        .iter()
        .flat_map(|r| config.seeds.clone().map(move |s| (r.as_str(), s)))
        .collect();
    let runs: Vec<FuzzRun> = jobs
        .par_iter()
        .map(|&(r, s)| fuzz_one(r, s, config.budget, config.steps))
        .collect::<Result<_>>()?;

    let mut totals = Tally::default();
    let mut failures = Vec::new();
    for run in &runs {
        totals.merge(&run.report.tally());
        for c in run.report.failures() {
            let super::Verdict::Fail { witness } = &c.verdict else {
                unreachable!("filtered to failures")
            };
            failures.push(FuzzFailure {
                ring: run.ring.clone(),
                seed: run.seed,
                check: c.id.to_string(),
                witness: witness.clone(),
                replay: replay_command(&run.ring, run.seed),
            });
        }
    }
    let mut warnings = Vec::new();
    if config.budget.lattice_cap == 0 || config.budget.scan_limit == 0 {
        warnings.push("budget is zero: checks that need enumeration report unknown".to_string());
    }
    if !runs.is_empty() && totals.unknown == totals.total() {
        warnings.push("every check was unknown".to_string());
    }
    Ok(FuzzReport {
        runs: runs.len(),
        totals,
        failures,
        warnings,
        runtime: start.elapsed(),
    })
}
