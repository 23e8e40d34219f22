//! Plain-text renderings of the reports. JSON goes through serde directly.

use std::fmt::Write;

use crate::algmod::catalog::FixtureModule;
use crate::algmod::Submodule;
use crate::battery::{BatteryReport, DemoReport, FuzzReport, Verdict};
use crate::latt::cover_relation;
use crate::preds::{Answer, PredicateReport, Witness};

fn answer(a: Answer) -> &'static str {
    match a {
        Answer::True => "true",
        Answer::False => "false",
        Answer::Unknown => "unknown",
    }
}

fn compact(rows: &[Vec<u8>]) -> String {
    let inner: Vec<String> = rows
        .iter()
        .map(|r| {
            format!(
                "[{}]",
                r.iter().map(u8::to_string).collect::<Vec<_>>().join(",")
            )
        })
        .collect();
    format!("[{}]", inner.join(","))
}

fn witness_lines(out: &mut String, w: &Witness, indent: &str) {
    for named in w.submodules.iter().chain(&w.maps) {
        let _ = writeln!(out, "{indent}{} = {}", named.name, compact(&named.rows));
    }
}

pub fn predicate_text(r: &PredicateReport) -> String {
    let mut out = String::new();
    let size = |s: Option<usize>| s.map_or_else(|| "over cap".to_string(), |n| n.to_string());
    let _ = writeln!(
        out,
        "module {} (dim {}, End dim {}, {} submodules, {} fully invariant{})",
        r.module,
        r.dim,
        r.end_dim,
        size(r.lattice_size),
        size(r.fi_lattice_size),
        if r.progenerator { ", progenerator" } else { "" }
    );
    for (name, a) in r.verdicts() {
        let _ = writeln!(out, "  {name:<26}{}", answer(a));
    }
    if let Some(u) = r.udim {
        let _ = writeln!(out, "  {:<26}{u}", "udim");
    }
    if let (Some(n), Some(c)) = (r.left_annihilator_count, r.left_annihilator_chain) {
        let _ = writeln!(out, "  {:<26}{n} (longest chain {c})", "left annihilators");
    }
    for (name, w) in &r.witnesses {
        let _ = writeln!(out, "  why not {name}: {}", w.note);
        witness_lines(&mut out, w, "    ");
    }
    for n in &r.notes {
        let _ = writeln!(out, "  note: {n}");
    }
    out
}

pub fn battery_text(r: &BatteryReport) -> String {
    let mut out = String::new();
    let t = r.tally();
    let _ = writeln!(
        out,
        "battery {} (dim {}): {} pass, {} fail, {} not applicable, {} unknown",
        r.module, r.dim, t.pass, t.fail, t.not_applicable, t.unknown
    );
    for c in &r.checks {
        let (label, text) = match &c.verdict {
            Verdict::Pass { detail } => ("pass", detail.as_str()),
            Verdict::Fail { witness } => ("FAIL", witness.note.as_str()),
            Verdict::NotApplicable { reason } => ("n/a", reason.as_str()),
            Verdict::Unknown { reason } => ("unknown", reason.as_str()),
        };
        let _ = writeln!(out, "  {:<4} {label:<8}{text}", c.id);
        if let Verdict::Fail { witness } = &c.verdict {
            let _ = writeln!(out, "       statement: {}", c.statement);
            witness_lines(&mut out, witness, "       ");
        }
    }
    out
}

pub fn lattice_text(fm: &FixtureModule, elems: &[Submodule], fi: bool) -> String {
    let mut out = String::new();
    let kind = if fi {
        "fully invariant submodules"
    } else {
        "submodules"
    };
    let _ = writeln!(out, "{} {kind} of {}", elems.len(), fm.module.name());
    for (i, s) in elems.iter().enumerate() {
        let alias = fm.alias_of(s).unwrap_or("");
        let _ = writeln!(out, "  {i:>3}  dim {}  {alias:<6}{}", s.dim(), s.space());
    }
    let covers: Vec<String> = cover_relation(elems)
        .iter()
        .map(|(a, b)| format!("{a}-{b}"))
        .collect();
    let _ = writeln!(out, "covers: {}", covers.join(" "));
    out
}

pub fn fuzz_text(r: &FuzzReport) -> String {
    let mut out = String::new();
    let t = &r.totals;
    let _ = writeln!(
        out,
        "fuzz: {} modules, {} checks: {} pass, {} fail, {} not applicable, {} unknown",
        r.runs,
        t.total(),
        t.pass,
        t.fail,
        t.not_applicable,
        t.unknown
    );
    for f in &r.failures {
        let _ = writeln!(
            out,
            "FAIL {} on ring {} seed {}: {}",
            f.check, f.ring, f.seed, f.witness.note
        );
        witness_lines(&mut out, &f.witness, "    ");
        let _ = writeln!(out, "    replay: {}", f.replay);
    }
    out
}

pub fn demo_text(r: &DemoReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "worked example on {}", r.module);
    for (i, c) in r.claims.iter().enumerate() {
        let mark = if c.holds { "ok" } else { "FAIL" };
        let _ = writeln!(out, "  {:>2}. [{mark}] {}", i + 1, c.claim);
        if !c.detail.is_empty() {
            let _ = writeln!(out, "          {}", c.detail);
        }
    }
    out
}
