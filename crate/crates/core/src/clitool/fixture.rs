//! The fixture file: one ring and the modules over it, as JSON with integer
//! entries only. Parsing reports the line and field of the first problem
//! and validates everything before any computation starts.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algmod::catalog::{Fixture, FixtureModule};
use crate::algmod::{FiniteAlgebra, ModulePresentation, Submodule};
use crate::fplin::{Matrix, Prime, Subspace};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixtureFile {
    pub format_version: u32,
    pub ring: RingSpec,
    pub modules: Vec<ModuleSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub name: String,
    pub p: u32,
    pub dim: usize,
    pub labels: Vec<String>,
    /// Nonzero structure constants `[i, j, k, value]`: `e_i e_j` has `value` at `e_k`.
    pub structure_constants: Vec<[i64; 4]>,
    pub unit: Vec<i64>,
    #[serde(default)]
    pub commutative: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub name: String,
    pub dim: usize,
    /// One matrix per ring basis element, as a list of rows.
    pub action: Vec<Vec<Vec<i64>>>,
    /// Named submodules by spanning rows.
    #[serde(default)]
    pub aliases: BTreeMap<String, Vec<Vec<i64>>>,
    #[serde(default)]
    pub progenerator: bool,
    #[serde(default)]
    pub notes: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixtureError {
    Io {
        path: String,
        message: String,
    },
    /// Malformed JSON or a field of the wrong shape.
    Syntax {
        line: usize,
        column: usize,
        field: String,
        message: String,
    },
    /// Well-formed, but the values do not describe a valid ring or module.
    Invalid {
        field: String,
        message: String,
    },
}

impl fmt::Display for FixtureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixtureError::Io { path, message } => write!(f, "cannot read {path}: {message}"),
            FixtureError::Syntax {
                line,
                column,
                field,
                message,
            } => {
                write!(
                    f,
                    "line {line}, column {column}, field `{field}`: {message}"
                )
            }
            FixtureError::Invalid { field, message } => write!(f, "field `{field}`: {message}"),
        }
    }
}

impl std::error::Error for FixtureError {}

fn invalid(field: impl Into<String>, message: impl Into<String>) -> FixtureError {
    FixtureError::Invalid {
        field: field.into(),
        message: message.into(),
    }
}

pub fn parse_fixture_file(text: &str) -> Result<FixtureFile, FixtureError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let field = e.path().to_string();
        let inner = e.into_inner();
        let full = inner.to_string();
        let suffix = format!(" at line {} column {}", inner.line(), inner.column());
        let message = full.strip_suffix(&suffix).unwrap_or(&full).to_string();
        FixtureError::Syntax {
            line: inner.line(),
            column: inner.column(),
            field,
            message,
        }
    })
}

/// Reads, parses and validates a fixture file.
pub fn load_fixture(path: &Path) -> Result<Fixture, FixtureError> {
    let text = std::fs::read_to_string(path).map_err(|e| FixtureError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_fixture(&text)
}

pub fn parse_fixture(text: &str) -> Result<Fixture, FixtureError> {
    parse_fixture_file(text)?.into_fixture()
}

fn entry(p: Prime, field: impl Fn() -> String, v: i64) -> Result<u8, FixtureError> {
    if (0..i64::from(p.get())).contains(&v) {
        Ok(v as u8)
    } else {
        Err(invalid(field(), format!("{v} is not in 0..{}", p.get())))
    }
}

fn rows_of(
    p: Prime,
    cols: usize,
    field: &str,
    rows: &[Vec<i64>],
) -> Result<Vec<Vec<u8>>, FixtureError> {
    rows.iter()
        .enumerate()
        .map(|(r, row)| {
            if row.len() != cols {
                return Err(invalid(
                    format!("{field}[{r}]"),
                    format!("row has {} entries, expected {cols}", row.len()),
                ));
            }
            row.iter()
                .enumerate()
                .map(|(c, &v)| entry(p, || format!("{field}[{r}][{c}]"), v))
                .collect()
        })
        .collect()
}

impl FixtureFile {
    pub fn into_fixture(self) -> Result<Fixture, FixtureError> {
        if self.format_version != FORMAT_VERSION {
            return Err(invalid(
                "format_version",
                format!(
                    "unsupported version {} (expected {FORMAT_VERSION})",
                    self.format_version
                ),
            ));
        }
        let ring = Arc::new(self.ring.build()?);
        let mut names = BTreeSet::new();
        let mut modules = Vec::new();
        for (i, spec) in self.modules.iter().enumerate() {
            if !names.insert(spec.name.as_str()) {
                return Err(invalid(
                    format!("modules[{i}].name"),
                    format!("duplicate module name `{}`", spec.name),
                ));
            }
            modules.push(spec.build(&ring, &format!("modules[{i}]"))?);
        }
        let name = ring
            .name()
            .strip_prefix("ring-")
            .unwrap_or(ring.name())
            .to_string();
        Ok(Fixture {
            name,
            ring,
            modules,
        })
    }

    pub fn from_fixture(fixture: &Fixture) -> Self {
        FixtureFile {
            format_version: FORMAT_VERSION,
            ring: RingSpec::from_algebra(&fixture.ring),
            modules: fixture
                .modules
                .iter()
                .map(ModuleSpec::from_fixture_module)
                .collect(),
        }
    }
}

impl RingSpec {
    fn build(&self) -> Result<FiniteAlgebra, FixtureError> {
        let p = Prime::new(self.p).map_err(|e| invalid("ring.p", e.to_string()))?;
        let n = self.dim;
        if n == 0 {
            return Err(invalid("ring.dim", "dimension must be positive"));
        }
        if self.labels.len() != n {
            return Err(invalid(
                "ring.labels",
                format!("{} labels for dimension {n}", self.labels.len()),
            ));
        }
        if self.unit.len() != n {
            return Err(invalid(
                "ring.unit",
                format!("{} entries for dimension {n}", self.unit.len()),
            ));
        }
        let unit = self
            .unit
            .iter()
            .enumerate()
            .map(|(i, &v)| entry(p, || format!("ring.unit[{i}]"), v))
            .collect::<Result<Vec<u8>, _>>()?;
        let mut triples = Vec::new();
        for (t, c) in self.structure_constants.iter().enumerate() {
            let field = || format!("ring.structure_constants[{t}]");
            let mut idx = [0usize; 3];
            for (slot, &x) in idx.iter_mut().zip(&c[..3]) {
                if !(0..n as i64).contains(&x) {
                    return Err(invalid(field(), format!("index {x} is not in 0..{n}")));
                }
                *slot = x as usize;
            }
            let v = entry(p, || format!("{}[3]", field()), c[3])?;
            triples.push((idx[0], idx[1], idx[2], v));
        }
        let a = FiniteAlgebra::from_triples(
            self.name.clone(),
            p,
            self.labels.clone(),
            &triples,
            unit,
            self.commutative,
        )
        .map_err(|e| invalid("ring", e.to_string()))?;
        a.validate().map_err(|e| invalid("ring", e.to_string()))?;
        Ok(a)
    }

    fn from_algebra(a: &FiniteAlgebra) -> Self {
        RingSpec {
            name: a.name().to_string(),
            p: u32::from(a.prime()),
            dim: a.dim(),
            labels: a.labels().to_vec(),
            structure_constants: a
                .triples()
                .into_iter()
                .map(|(i, j, k, v)| [i as i64, j as i64, k as i64, i64::from(v)])
                .collect(),
            unit: a.unit().iter().map(|&x| i64::from(x)).collect(),
            commutative: a.is_commutative_flagged(),
        }
    }
}

impl ModuleSpec {
    fn build(&self, ring: &Arc<FiniteAlgebra>, field: &str) -> Result<FixtureModule, FixtureError> {
        let p = ring.prime();
        if self.action.len() != ring.dim() {
            return Err(invalid(
                format!("{field}.action"),
                format!(
                    "{} matrices for a ring of dimension {}",
                    self.action.len(),
                    ring.dim()
                ),
            ));
        }
        let mut action = Vec::new();
        for (i, rows) in self.action.iter().enumerate() {
            let f = format!("{field}.action[{i}]");
            if rows.len() != self.dim {
                return Err(invalid(
                    &f,
                    format!("{} rows, expected {}", rows.len(), self.dim),
                ));
            }
            let rows = rows_of(p, self.dim, &f, rows)?;
            action.push(
                Matrix::from_rows(p, self.dim, &rows).map_err(|e| invalid(&f, e.to_string()))?,
            );
        }
        let module = ModulePresentation::new(self.name.clone(), ring.clone(), self.dim, action);
        module
            .validate()
            .map_err(|e| invalid(field, e.to_string()))?;
        let mut aliases = BTreeMap::new();
        for (name, rows) in &self.aliases {
            let f = format!("{field}.aliases.{name}");
            let rows = rows_of(p, self.dim, &f, rows)?;
            let s = module
                .submodule_from_rows(&rows)
                .map_err(|e| invalid(&f, e.to_string()))?;
            aliases.insert(name.clone(), s);
        }
        Ok(FixtureModule {
            module,
            aliases,
            progenerator: self.progenerator,
            notes: self.notes.clone(),
        })
    }

    fn from_fixture_module(fm: &FixtureModule) -> Self {
        let to_i64 = |rows: Vec<Vec<u8>>| -> Vec<Vec<i64>> {
            rows.into_iter()
                .map(|r| r.into_iter().map(i64::from).collect())
                .collect()
        };
        ModuleSpec {
            name: fm.module.name().to_string(),
            dim: fm.module.dim(),
            action: fm
                .module
                .action()
                .iter()
                .map(|a| to_i64(a.to_rows()))
                .collect(),
            aliases: fm
                .aliases
                .iter()
                .map(|(k, s)| (k.clone(), to_i64(s.to_rows())))
                .collect(),
            progenerator: fm.progenerator,
            notes: fm.notes.clone(),
        }
    }
}

fn row_json(row: &[i64]) -> String {
    format!(
        "[{}]",
        row.iter()
            .map(i64::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    )
}

fn rows_json(rows: &[Vec<i64>]) -> String {
    format!(
        "[{}]",
        rows.iter()
            .map(|r| row_json(r))
            .collect::<Vec<_>>()
            .join(", ")
    )
}

fn string_json(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

/// Pretty JSON with one matrix or constant per line, so diffs stay readable.
pub fn render_fixture_file(f: &FixtureFile) -> String {
    let mut out = String::new();
    let r = &f.ring;
    out.push_str("{\n");
    out.push_str(&format!("  \"format_version\": {},\n", f.format_version));
    out.push_str("  \"ring\": {\n");
    out.push_str(&format!("    \"name\": {},\n", string_json(&r.name)));
    out.push_str(&format!("    \"p\": {},\n", r.p));
    out.push_str(&format!("    \"dim\": {},\n", r.dim));
    let labels: Vec<String> = r.labels.iter().map(|l| string_json(l)).collect();
    out.push_str(&format!("    \"labels\": [{}],\n", labels.join(", ")));
    out.push_str("    \"structure_constants\": [\n");
    let consts: Vec<String> = r
        .structure_constants
        .iter()
        .map(|c| format!("      {}", row_json(c)))
        .collect();
    out.push_str(&consts.join(",\n"));
    out.push_str("\n    ],\n");
    out.push_str(&format!("    \"unit\": {},\n", row_json(&r.unit)));
    out.push_str(&format!("    \"commutative\": {}\n", r.commutative));
    out.push_str("  },\n");
    out.push_str("  \"modules\": [");
    let modules: Vec<String> = f
        .modules
        .iter()
        .map(|m| {
            let mut s = String::from("\n    {\n");
            s.push_str(&format!("      \"name\": {},\n", string_json(&m.name)));
            s.push_str(&format!("      \"dim\": {},\n", m.dim));
            s.push_str("      \"action\": [\n");
            let mats: Vec<String> = m
                .action
                .iter()
                .map(|a| format!("        {}", rows_json(a)))
                .collect();
            s.push_str(&mats.join(",\n"));
            s.push_str("\n      ],\n");
            s.push_str("      \"aliases\": {");
            let aliases: Vec<String> = m
                .aliases
                .iter()
                .map(|(k, v)| format!("\n        {}: {}", string_json(k), rows_json(v)))
                .collect();
            s.push_str(&aliases.join(","));
            s.push_str(if aliases.is_empty() {
                "},\n"
            } else {
                "\n      },\n"
            });
            s.push_str(&format!("      \"progenerator\": {},\n", m.progenerator));
            s.push_str(&format!("      \"notes\": {}\n", string_json(&m.notes)));
            s.push_str("    }");
            s
        })
        .collect();
    out.push_str(&modules.join(","));
    out.push_str(if modules.is_empty() { "]\n" } else { "\n  ]\n" });
    out.push_str("}\n");
    out
}

/// An alias, `0`, `M`, or spanning rows as `[[1,0,0],[0,1,0]]` or `1,0,0;0,1,0`.
pub fn parse_submodule(fm: &FixtureModule, arg: &str) -> Result<Submodule, String> {
    if let Some(s) = fm.aliases.get(arg) {
        return Ok(s.clone());
    }
    let m = &fm.module;
    match arg {
        "0" => return Ok(m.zero_submodule()),
        "M" => return Ok(m.whole()),
        _ => {}
    }
    let bad = || {
        format!(
            "`{arg}` is neither an alias of {} nor a list of rows",
            m.name()
        )
    };
    let raw: Vec<Vec<i64>> = if arg.trim_start().starts_with('[') {
        serde_json::from_str(arg).map_err(|_| bad())?
    } else {
        arg.split(';')
            .map(|r| {
                r.split(',')
                    .map(|x| x.trim().parse::<i64>())
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?
    };
    let p = i64::from(m.prime().get());
    let mut vecs = Vec::new();
    for r in raw {
        if r.len() != m.dim() {
            return Err(format!("`{arg}`: rows must have {} entries", m.dim()));
        }
        vecs.push(
            r.into_iter()
                .map(|x| x.rem_euclid(p) as u8)
                .collect::<Vec<u8>>(),
        );
    }
    m.submodule(Subspace::span(m.prime(), m.dim(), &vecs))
        .map_err(|_| format!("`{arg}` does not span a submodule of {}", m.name()))
}
