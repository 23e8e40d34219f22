//! The theorem battery: each implication between the predicates becomes an
//! executable check that computes its hypotheses first and only then its
//! conclusion. Also hosts the seeded fuzzer and the worked `mod-es` example.
//!
//! A check whose hypotheses fail is `not_applicable` and names them. A check
//! that runs out of budget is `unknown`. A `fail` carries a witness that can
//! be replayed with the operations it names.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::algmod::ModulePresentation;
use crate::error::{Error, Result};
use crate::preds::{Analysis, Witness};
use crate::Budget;

mod checks;
mod demo;
mod fuzz;

pub use demo::{demo_remark, DemoClaim, DemoReport};
pub use fuzz::{
    fuzz, fuzz_one, fuzz_rings, replay_command, FuzzConfig, FuzzFailure, FuzzReport, FuzzRun,
    FUZZ_STEPS,
};

/// Largest number of external modules (submodules and quotients of `M`)
/// that checks quantifying over modules in `sigma[M]` visit.
pub const UNIVERSE_CAP: usize = 24;

/// Largest `End_R(M)` enumerated element by element inside a check.
pub const CHECK_SCAN_LIMIT: u64 = 1 << 14;

/// Largest `End_R(M)` handed to the elementwise ring oracles.
pub const CHECK_ORACLE_LIMIT: u64 = 1 << 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verdict {
    Pass { detail: String },
    Fail { witness: Witness },
    NotApplicable { reason: String },
    Unknown { reason: String },
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Pass { .. } => "pass",
            Verdict::Fail { .. } => "fail",
            Verdict::NotApplicable { .. } => "not_applicable",
            Verdict::Unknown { .. } => "unknown",
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass { .. })
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail { .. })
    }

    pub fn is_not_applicable(&self) -> bool {
        matches!(self, Verdict::NotApplicable { .. })
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Verdict::Unknown { .. })
    }
}

/// A predicate a check requires before its conclusion is tested.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Hypothesis {
    SelfProjective,
    Semiprime,
    Prime,
    Retractable,
    Duo,
    NonMSingular,
    GeneratesSubmodules,
    Progenerator,
}

impl Hypothesis {
    pub fn name(self) -> &'static str {
        match self {
            Hypothesis::SelfProjective => "self_projective",
            Hypothesis::Semiprime => "semiprime",
            Hypothesis::Prime => "prime",
            Hypothesis::Retractable => "retractable",
            Hypothesis::Duo => "duo",
            Hypothesis::NonMSingular => "non_m_singular",
            Hypothesis::GeneratesSubmodules => "generates_submodules",
            Hypothesis::Progenerator => "progenerator",
        }
    }

    fn evaluate(self, an: &Analysis<'_>, meta: &BatteryMeta) -> Result<bool> {
        Ok(match self {
            Hypothesis::SelfProjective => an.is_self_projective()?.holds(),
            Hypothesis::Semiprime => an.is_semiprime()?.holds(),
            Hypothesis::Prime => an.is_prime()?.holds(),
            Hypothesis::Retractable => an.is_retractable()?.holds(),
            Hypothesis::Duo => an.is_duo()?.holds(),
            Hypothesis::NonMSingular => an.is_non_m_singular()?.holds(),
            Hypothesis::GeneratesSubmodules => an.generates_its_submodules()?.holds(),
            Hypothesis::Progenerator => meta.progenerator,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremCheck {
    pub id: &'static str,
    /// The implication being tested, in words.
    pub statement: &'static str,
    pub hypotheses: Vec<Hypothesis>,
    pub verdict: Verdict,
}

/// Flags that come with a module rather than from computation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BatteryMeta {
    /// Asserted by the fixture: `M` is a progenerator of `sigma[M]`.
    pub progenerator: bool,
    pub budget: Budget,
}

impl BatteryMeta {
    pub fn progenerator(progenerator: bool) -> Self {
        BatteryMeta {
            progenerator,
            ..Default::default()
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
    pub unknown: usize,
}

impl Tally {
    pub fn add(&mut self, v: &Verdict) {
        match v {
            Verdict::Pass { .. } => self.pass += 1,
            Verdict::Fail { .. } => self.fail += 1,
            Verdict::NotApplicable { .. } => self.not_applicable += 1,
            Verdict::Unknown { .. } => self.unknown += 1,
        }
    }

    pub fn merge(&mut self, other: &Tally) {
        self.pass += other.pass;
        self.fail += other.fail;
        self.not_applicable += other.not_applicable;
        self.unknown += other.unknown;
    }

    pub fn total(&self) -> usize {
        self.pass + self.fail + self.not_applicable + self.unknown
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BatteryReport {
    pub module: String,
    pub dim: usize,
    pub meta: BatteryMeta,
    pub checks: Vec<TheoremCheck>,
    /// Wall time; left out of serialized reports so they replay byte for byte.
    #[serde(skip)]
    pub runtime: Duration,
}

impl BatteryReport {
    pub fn tally(&self) -> Tally {
        let mut t = Tally::default();
        for c in &self.checks {
            t.add(&c.verdict);
        }
        t
    }

    pub fn failures(&self) -> impl Iterator<Item = &TheoremCheck> {
        self.checks.iter().filter(|c| c.verdict.is_fail())
    }

    pub fn has_failures(&self) -> bool {
        self.failures().next().is_some()
    }

    pub fn check(&self, id: &str) -> Option<&TheoremCheck> {
        self.checks.iter().find(|c| c.id == id)
    }
}

/// Result of a conclusion procedure.
pub(crate) enum Outcome {
    Pass(String),
    Fail(Witness),
}

pub(crate) struct Ctx<'a, 'm> {
    pub an: &'a Analysis<'m>,
    pub meta: &'a BatteryMeta,
}

pub(crate) struct Entry {
    pub id: &'static str,
    pub statement: &'static str,
    pub hypotheses: &'static [Hypothesis],
    pub run: fn(&Ctx<'_, '_>) -> Result<Outcome>,
}

/// Identifiers of every registered check, in report order.
pub fn check_ids() -> Vec<&'static str> {
    checks::REGISTRY.iter().map(|e| e.id).collect()
}

fn error_verdict(e: Error, context: &str) -> Verdict {
    if e.is_budget() {
        Verdict::Unknown {
            reason: format!("{context}: {e}"),
        }
    } else {
        Verdict::Fail {
            witness: Witness::new(format!("{context} raised an error: {e}")),
        }
    }
}

fn evaluate(entry: &Entry, ctx: &Ctx<'_, '_>) -> Verdict {
    if ctx.an.module().is_zero() {
        return Verdict::NotApplicable {
            reason: "the zero module".into(),
        };
    }
    let mut unmet = Vec::new();
    let mut undecided = None;
    for &h in entry.hypotheses {
        match h.evaluate(ctx.an, ctx.meta) {
            Ok(true) => {}
            Ok(false) => unmet.push(h.name()),
            Err(e) if e.is_budget() => {
                undecided.get_or_insert_with(|| format!("hypothesis {}: {e}", h.name()));
            }
            Err(e) => return error_verdict(e, &format!("hypothesis {}", h.name())),
        }
    }
    if !unmet.is_empty() {
        return Verdict::NotApplicable {
            reason: format!("unmet: {}", unmet.join(", ")),
        };
    }
    if let Some(reason) = undecided {
        return Verdict::Unknown { reason };
    }
    match (entry.run)(ctx) {
        Ok(Outcome::Pass(detail)) => Verdict::Pass { detail },
        Ok(Outcome::Fail(witness)) => Verdict::Fail { witness },
        Err(e) => error_verdict(e, "conclusion"),
    }
}

/// Runs every registered check on `m`, in id order.
pub fn run_battery(m: &ModulePresentation, meta: BatteryMeta) -> BatteryReport {
    let start = Instant::now();
    let an = Analysis::new(m, meta.budget);
    let ctx = Ctx {
        an: &an,
        meta: &meta,
    };
    let checks = checks::REGISTRY
        .iter()
        .map(|e| TheoremCheck {
            id: e.id,
            statement: e.statement,
            hypotheses: e.hypotheses.to_vec(),
            verdict: evaluate(e, &ctx),
        })
        .collect();
    BatteryReport {
        module: m.name().to_string(),
        dim: m.dim(),
        meta,
        checks,
        runtime: start.elapsed(),
    }
}
