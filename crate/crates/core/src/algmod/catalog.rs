//! The shipped fixture rings and modules.
//!
//! | ring | algebra | modules |
//! |------|---------|---------|
//! | `ring-tz2` | `F_2<1,a,b>`, `a^2 = ab = ba = b^2 = 0` | `mod-es` (dual of the regular module), its quotient by the socle, the regular module, the simple |
//! | `ring-f2f2` | `F_2 x F_2` | `mod-a2` (regular), both simples |
//! | `ring-m2f2` | 2x2 matrices over `F_2` | `mod-m22` (regular), the column simple |
//! | `ring-dn` | `F_2[x]/(x^2)` | `mod-dn` (regular), the simple |
//! | `ring-ut2` | upper-triangular 2x2 over `F_2` | `mod-p1` (column module), the regular module, both simples |

use std::collections::BTreeMap;
use std::sync::Arc;

use super::{matlis_dual, quotient, regular_module, FiniteAlgebra, ModulePresentation, Submodule};
use crate::fplin::{Matrix, Prime};

/// A module shipped with a fixture, with named submodules and metadata.
#[derive(Clone, Debug)]
pub struct FixtureModule {
    pub module: ModulePresentation,
    pub aliases: BTreeMap<String, Submodule>,
    /// Asserted by the fixture author: the module is a progenerator of sigma[M].
    pub progenerator: bool,
    pub notes: String,
}

impl FixtureModule {
    fn new(module: ModulePresentation) -> Self {
        FixtureModule {
            module,
            aliases: BTreeMap::new(),
            progenerator: false,
            notes: String::new(),
        }
    }

    fn alias<R: AsRef<[u8]>>(mut self, name: &str, rows: &[R]) -> Self {
        let s = self
            .module
            .submodule_from_rows(rows)
            .expect("catalog alias is a submodule");
        self.aliases.insert(name.to_string(), s);
        self
    }

    fn progenerator(mut self) -> Self {
        self.progenerator = true;
        self
    }

    fn notes(mut self, notes: &str) -> Self {
        self.notes = notes.to_string();
        self
    }

    /// Alias whose submodule equals `s`, if any.
    pub fn alias_of(&self, s: &Submodule) -> Option<&str> {
        self.aliases
            .iter()
            .find(|(_, v)| *v == s)
            .map(|(k, _)| k.as_str())
    }
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub ring: Arc<FiniteAlgebra>,
    pub modules: Vec<FixtureModule>,
}

impl Fixture {
    pub fn module(&self, name: &str) -> Option<&FixtureModule> {
        self.modules.iter().find(|m| m.module.name() == name)
    }
}

fn labels(ls: &[&str]) -> Vec<String> {
    ls.iter().map(|s| s.to_string()).collect()
}

/// Products with the unit `e_0` on either side.
fn unital(n: usize) -> Vec<(usize, usize, usize, u8)> {
    let mut t = Vec::new();
    for j in 0..n {
        t.push((0, j, j, 1));
        if j != 0 {
            t.push((j, 0, j, 1));
        }
    }
    t
}

fn unit_vec(n: usize, ones: &[usize]) -> Vec<u8> {
    let mut u = vec![0; n];
    for &i in ones {
        u[i] = 1;
    }
    u
}

pub fn ring_f2() -> FiniteAlgebra {
    FiniteAlgebra::from_triples(
        "ring-f2",
        Prime::TWO,
        labels(&["1"]),
        &unital(1),
        vec![1],
        true,
    )
    .unwrap()
}

/// The trivial extension `Z_2 x| (Z_2 + Z_2)`.
pub fn ring_tz2() -> FiniteAlgebra {
    FiniteAlgebra::from_triples(
        "ring-tz2",
        Prime::TWO,
        labels(&["1", "a", "b"]),
        &unital(3),
        unit_vec(3, &[0]),
        true,
    )
    .unwrap()
}

pub fn ring_f2f2() -> FiniteAlgebra {
    FiniteAlgebra::from_triples(
        "ring-f2f2",
        Prime::TWO,
        labels(&["e1", "e2"]),
        &[(0, 0, 0, 1), (1, 1, 1, 1)],
        unit_vec(2, &[0, 1]),
        true,
    )
    .unwrap()
}

/// Full matrix algebra `M_2(F_2)` on the matrix units `E11, E12, E21, E22`.
pub fn ring_m2f2() -> FiniteAlgebra {
    let idx = |i: usize, j: usize| 2 * i + j;
    let mut t = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            for l in 0..2 {
                t.push((idx(i, j), idx(j, l), idx(i, l), 1));
            }
        }
    }
    FiniteAlgebra::from_triples(
        "ring-m2f2",
        Prime::TWO,
        labels(&["E11", "E12", "E21", "E22"]),
        &t,
        unit_vec(4, &[0, 3]),
        false,
    )
    .unwrap()
}

/// Dual numbers `F_2[x]/(x^2)`.
pub fn ring_dn() -> FiniteAlgebra {
    FiniteAlgebra::from_triples(
        "ring-dn",
        Prime::TWO,
        labels(&["1", "x"]),
        &unital(2),
        unit_vec(2, &[0]),
        true,
    )
    .unwrap()
}

/// Upper-triangular 2x2 matrices over `F_2` on `e11, e12, e22`.
pub fn ring_ut2() -> FiniteAlgebra {
    FiniteAlgebra::from_triples(
        "ring-ut2",
        Prime::TWO,
        labels(&["e11", "e12", "e22"]),
        &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)],
        unit_vec(3, &[0, 2]),
        false,
    )
    .unwrap()
}

pub fn all_rings() -> Vec<FiniteAlgebra> {
    vec![ring_tz2(), ring_f2f2(), ring_m2f2(), ring_dn(), ring_ut2()]
}

/// Ring by its catalog name (`ring-tz2`, `tz2`, ...).
pub fn ring_by_name(name: &str) -> Option<FiniteAlgebra> {
    let key = name.strip_prefix("ring-").unwrap_or(name);
    all_rings()
        .into_iter()
        .chain([ring_f2()])
        .find(|r| r.name() == format!("ring-{key}"))
}

fn one_dim(name: &str, a: &Arc<FiniteAlgebra>, values: &[u8]) -> ModulePresentation {
    let action = values
        .iter()
        .map(|&v| Matrix::from_rows(a.prime(), 1, &[[v]]).unwrap())
        .collect();
    ModulePresentation::new(name, a.clone(), 1, action)
}

/// The injective hull of the simple over `ring-tz2`: basis `f0, f1, f2` with
/// `a f1 = f0`, `b f2 = f0`.
pub fn mod_es() -> ModulePresentation {
    let r = Arc::new(ring_tz2());
    matlis_dual(&regular_module(&r)).unwrap().renamed("mod-es")
}

pub fn simple_tz2() -> ModulePresentation {
    one_dim("simple-tz2", &Arc::new(ring_tz2()), &[1, 0, 0])
}

pub fn mod_a2() -> ModulePresentation {
    regular_module(&Arc::new(ring_f2f2())).renamed("mod-a2")
}

pub fn mod_m22() -> ModulePresentation {
    regular_module(&Arc::new(ring_m2f2())).renamed("mod-m22")
}

pub fn simple_col() -> ModulePresentation {
    let a = Arc::new(ring_m2f2());
    let p = a.prime();
    let action = (0..4)
        .map(|k| Matrix::from_fn(p, 2, 2, |i, j| u8::from(2 * i + j == k)))
        .collect();
    ModulePresentation::new("simple-col", a, 2, action)
}

pub fn mod_dn() -> ModulePresentation {
    regular_module(&Arc::new(ring_dn())).renamed("mod-dn")
}

pub fn simple_dn() -> ModulePresentation {
    one_dim("simple-dn", &Arc::new(ring_dn()), &[1, 0])
}

/// Column vectors `F_2^2` under upper-triangular matrices: the projective
/// cover of the simple on which `e22` acts as 1, with socle the other simple.
pub fn mod_p1() -> ModulePresentation {
    let a = Arc::new(ring_ut2());
    let p = a.prime();
    let unit = |r: usize, c: usize| Matrix::from_fn(p, 2, 2, |i, j| u8::from(i == r && j == c));
    ModulePresentation::new("mod-p1", a, 2, vec![unit(0, 0), unit(0, 1), unit(1, 1)])
}

pub fn tz2_fixture() -> Fixture {
    let es = mod_es();
    let ring = es.algebra().clone();
    let s = es.submodule_from_rows(&[[1, 0, 0]]).unwrap();
    let es_mod_s = quotient(&es, &s).unwrap().0.renamed("mod-es/S");
    let reg = regular_module(&ring).renamed("reg-tz2");
    let modules = vec![
        FixtureModule::new(es)
            .alias("S", &[[1, 0, 0]])
            .alias("K", &[[1, 0, 0], [0, 1, 0]])
            .alias("L", &[[1, 0, 0], [0, 0, 1]])
            .alias("N", &[[1, 0, 0], [0, 1, 1]])
            .notes("E(S) over Z2 x| (Z2+Z2), realized as the dual of the regular module"),
        FixtureModule::new(es_mod_s).notes("M/S = S+S, not duo"),
        FixtureModule::new(reg)
            .alias("J1", &[[0, 1, 0]])
            .alias("J2", &[[0, 0, 1]])
            .alias("J3", &[[0, 1, 1]])
            .alias("I", &[[0, 1, 0], [0, 0, 1]])
            .progenerator(),
        FixtureModule::new(one_dim("simple-tz2", &ring, &[1, 0, 0])),
    ];
    Fixture {
        name: "tz2".into(),
        ring,
        modules,
    }
}

pub fn f2f2_fixture() -> Fixture {
    let a2 = mod_a2();
    let ring = a2.algebra().clone();
    let modules = vec![
        FixtureModule::new(a2)
            .alias("e1R", &[[1, 0]])
            .alias("e2R", &[[0, 1]])
            .progenerator(),
        FixtureModule::new(one_dim("simple-e1", &ring, &[1, 0])),
        FixtureModule::new(one_dim("simple-e2", &ring, &[0, 1])),
    ];
    Fixture {
        name: "f2f2".into(),
        ring,
        modules,
    }
}

pub fn m2f2_fixture() -> Fixture {
    let m22 = mod_m22();
    let ring = m22.algebra().clone();
    let col = ModulePresentation::new(
        "simple-col",
        ring.clone(),
        2,
        simple_col().action().to_vec(),
    );
    let modules = vec![
        FixtureModule::new(m22)
            .alias("C1", &[[1, 0, 0, 0], [0, 0, 1, 0]])
            .alias("C2", &[[0, 1, 0, 0], [0, 0, 0, 1]])
            .progenerator()
            .notes("regular module of a simple artinian ring"),
        FixtureModule::new(col),
    ];
    Fixture {
        name: "m2f2".into(),
        ring,
        modules,
    }
}

pub fn dn_fixture() -> Fixture {
    let dn = mod_dn();
    let ring = dn.algebra().clone();
    let modules = vec![
        FixtureModule::new(dn).alias("xR", &[[0, 1]]).progenerator(),
        FixtureModule::new(one_dim("simple-dn", &ring, &[1, 0])),
    ];
    Fixture {
        name: "dn".into(),
        ring,
        modules,
    }
}

pub fn ut2_fixture() -> Fixture {
    let p1 = mod_p1();
    let ring = p1.algebra().clone();
    let reg = regular_module(&ring).renamed("reg-ut2");
    let modules = vec![
        FixtureModule::new(p1)
            .alias("soc", &[[1, 0]])
            .notes("projective, not retractable"),
        FixtureModule::new(reg).progenerator(),
        FixtureModule::new(one_dim("simple-1", &ring, &[1, 0, 0])),
        FixtureModule::new(one_dim("simple-2", &ring, &[0, 0, 1])),
    ];
    Fixture {
        name: "ut2".into(),
        ring,
        modules,
    }
}

pub fn all_fixtures() -> Vec<Fixture> {
    vec![
        tz2_fixture(),
        f2f2_fixture(),
        m2f2_fixture(),
        dn_fixture(),
        ut2_fixture(),
    ]
}

/// Every shipped module, with its fixture metadata.
pub fn all_fixture_modules() -> Vec<FixtureModule> {
    all_fixtures().into_iter().flat_map(|f| f.modules).collect()
}

/// A shipped module by name (`mod-es`, `mod-a2`, ...).
pub fn fixture_module(name: &str) -> Option<FixtureModule> {
    all_fixture_modules()
        .into_iter()
        .find(|m| m.module.name() == name)
}
