//! Module-level predicates: prime and semiprime submodules, retractable,
//! duo, self-projective, non-M-singular, compressibility, monoform and
//! injectivity tests, and the Goldie report.
//!
//! Everything goes through an [`Analysis`], which caches the lattices,
//! `End_R(M)` and hom spaces of one module. Every negative verdict carries a
//! [`Witness`] that can be re-checked with a single call.

use std::cell::{OnceCell, RefCell};
use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::algmod::{carve, quotient, ModulePresentation, Submodule};
use crate::error::{Error, Result};
use crate::fplin::{all_vectors, Matrix, Subspace};
use crate::homlab::{
    endo_algebra, exists_mono, hom_into, hom_space, hom_space_killing, EndoAlgebra, HomBasis,
    MonoSearch,
};
use crate::latt::{self, all_submodules, cyclic, fully_invariant_with, SubmoduleLattice};
use crate::prodann::{left_annihilator_poset, product_with, LeftAnnihilatorPoset};
use crate::Budget;

/// Largest `End_R(M)` whose elements are enumerated by the semiprojective test.
pub const SEMIPROJECTIVE_SCAN_LIMIT: u64 = 1 << 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedRows {
    pub name: String,
    pub rows: Vec<Vec<u8>>,
}

/// Concrete data behind a negative verdict.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub note: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub submodules: Vec<NamedRows>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub maps: Vec<NamedRows>,
}

impl Witness {
    pub fn new(note: impl Into<String>) -> Self {
        Witness {
            note: note.into(),
            ..Default::default()
        }
    }

    pub fn sub(mut self, name: &str, s: &Subspace) -> Self {
        self.submodules.push(NamedRows {
            name: name.into(),
            rows: s.to_rows(),
        });
        self
    }

    pub fn map(mut self, name: &str, f: &Matrix) -> Self {
        self.maps.push(NamedRows {
            name: name.into(),
            rows: f.to_rows(),
        });
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Holds {
    Yes,
    No(Box<Witness>),
}

impl Holds {
    pub fn holds(&self) -> bool {
        matches!(self, Holds::Yes)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Holds::Yes => None,
            Holds::No(w) => Some(w),
        }
    }

    pub fn no(w: Witness) -> Self {
        Holds::No(Box::new(w))
    }

    pub(crate) fn from_failure(w: Option<Witness>) -> Self {
        w.map_or(Holds::Yes, Holds::no)
    }
}

/// Three-valued verdict for reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    True,
    False,
    Unknown,
}

impl Answer {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Answer::True
        } else {
            Answer::False
        }
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            Answer::True => Some(true),
            Answer::False => Some(false),
            Answer::Unknown => None,
        }
    }
}

/// Both routes of the semiprime test for one submodule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiprimeTest {
    /// Over fully invariant `K`: `K_M K <= N` implies `K <= N`.
    pub definition: Holds,
    /// Over elements `m` outside `N`: `(Rm)_M (Rm)` is not inside `N`.
    pub element: Holds,
}

/// Cached computations for one module.
pub struct Analysis<'m> {
    m: &'m ModulePresentation,
    budget: Budget,
    lattice: OnceCell<Result<SubmoduleLattice>>,
    fi: OnceCell<Result<SubmoduleLattice>>,
    end: OnceCell<HomBasis>,
    endo: OnceCell<EndoAlgebra>,
    poset: OnceCell<Result<LeftAnnihilatorPoset>>,
    homs: RefCell<HashMap<Submodule, HomBasis>>,
    memo: RefCell<HashMap<&'static str, Result<Holds>>>,
}

fn coords_in(s: &Subspace, t: &Subspace) -> Subspace {
    let rows: Vec<Vec<u8>> = t
        .basis_vectors()
        .map(|v| s.coordinates(v).expect("inner subspace lies in the outer"))
        .collect();
    Subspace::span(s.prime(), s.dim(), &rows)
}

impl<'m> Analysis<'m> {
    pub fn new(m: &'m ModulePresentation, budget: Budget) -> Self {
        Analysis {
            m,
            budget,
            lattice: OnceCell::new(),
            fi: OnceCell::new(),
            end: OnceCell::new(),
            endo: OnceCell::new(),
            poset: OnceCell::new(),
            homs: RefCell::new(HashMap::new()),
            memo: RefCell::new(HashMap::new()),
        }
    }

    pub fn module(&self) -> &'m ModulePresentation {
        self.m
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    fn memo(&self, key: &'static str, f: impl FnOnce() -> Result<Holds>) -> Result<Holds> {
        if let Some(r) = self.memo.borrow().get(key) {
            return r.clone();
        }
        let r = f();
        self.memo.borrow_mut().insert(key, r.clone());
        r
    }

    pub fn lattice(&self) -> Result<&SubmoduleLattice> {
        self.lattice
            .get_or_init(|| all_submodules(self.m, self.budget.lattice_cap))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn fi_lattice(&self) -> Result<&SubmoduleLattice> {
        self.lattice()?;
        self.fi
            .get_or_init(|| fully_invariant_with(self.m, self.end(), self.budget.lattice_cap))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn end(&self) -> &HomBasis {
        self.end
            .get_or_init(|| hom_space(self.m, self.m).expect("same algebra"))
    }

    pub fn endo(&self) -> &EndoAlgebra {
        self.endo.get_or_init(|| endo_algebra(self.m))
    }

    pub fn left_annihilators(&self) -> Result<&LeftAnnihilatorPoset> {
        let lattice = self.lattice()?;
        self.poset
            .get_or_init(|| left_annihilator_poset(self.m, lattice))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// `Hom_R(M, S)` as endomorphisms with image in `s`.
    pub fn hom_into(&self, s: &Submodule) -> HomBasis {
        if let Some(h) = self.homs.borrow().get(s) {
            return h.clone();
        }
        let h = hom_into(self.m, s).expect("a submodule of this module");
        self.homs.borrow_mut().insert(s.clone(), h.clone());
        h
    }

    pub fn product(&self, k: &Submodule, l: &Submodule) -> Submodule {
        product_with(&self.hom_into(l), k)
    }

    pub fn annihilator(&self, n: &Submodule) -> Submodule {
        Submodule::trusted(self.hom_into(n).common_kernel())
    }

    pub fn power(&self, n: &Submodule, e: usize) -> Submodule {
        let mut cur = if e == 0 {
            self.m.zero_submodule()
        } else {
            n.clone()
        };
        for _ in 1..e {
            cur = self.product(n, &cur);
        }
        cur
    }

    pub fn trace(&self, x: &Submodule) -> Submodule {
        Submodule::trusted(self.hom_into(x).image_span())
    }

    pub fn minimal_submodules(&self) -> Result<Vec<Submodule>> {
        Ok(self.lattice()?.atoms().into_iter().cloned().collect())
    }

    pub fn socle(&self) -> Result<Submodule> {
        Ok(self
            .minimal_submodules()?
            .iter()
            .fold(self.m.zero_submodule(), |acc, t| acc.join(t)))
    }

    pub fn udim(&self) -> Result<usize> {
        Ok(latt::udim_of(&self.minimal_submodules()?, self.m))
    }

    /// In a finite module `K <=_e M` exactly when `K` contains the socle.
    pub fn is_essential(&self, k: &Submodule) -> Result<bool> {
        Ok(self.socle()?.leq(k))
    }

    pub fn essential_submodules(&self) -> Result<Vec<Submodule>> {
        let soc = self.socle()?;
        Ok(self
            .lattice()?
            .iter()
            .filter(|k| soc.leq(k))
            .cloned()
            .collect())
    }

    pub fn is_uniform(&self, s: &Submodule) -> Result<bool> {
        Ok(!s.is_zero()
            && self
                .minimal_submodules()?
                .iter()
                .filter(|t| t.leq(s))
                .count()
                == 1)
    }

    pub fn is_fully_invariant(&self, s: &Submodule) -> bool {
        latt::is_stable_under(s, self.end())
    }

    fn check_fi_proper(&self, n: &Submodule) -> Result<()> {
        if !self.m.is_action_closed(n) || n.ambient() != self.m.dim() {
            return Err(Error::NotSubmodule);
        }
        if !self.is_fully_invariant(n) {
            return Err(Error::NotFullyInvariant);
        }
        if n.is_full() {
            return Err(Error::NotProper);
        }
        Ok(())
    }

    /// For fully invariant `K, L`: `K_M L <= P` implies `K <= P` or `L <= P`.
    pub fn is_prime_submodule(&self, p: &Submodule) -> Result<Holds> {
        self.check_fi_proper(p)?;
        let fi = self.fi_lattice()?;
        for k in fi {
            if k.leq(p) {
                continue;
            }
            for l in fi {
                if !l.leq(p) && self.product(k, l).leq(p) {
                    return Ok(Holds::no(
                        Witness::new("K_M L <= P with K, L not inside P")
                            .sub("P", p)
                            .sub("K", k)
                            .sub("L", l),
                    ));
                }
            }
        }
        Ok(Holds::Yes)
    }

    pub fn is_semiprime_submodule(&self, n: &Submodule) -> Result<SemiprimeTest> {
        self.check_fi_proper(n)?;
        let fi = self.fi_lattice()?;
        let definition = Holds::from_failure(
            fi.iter()
                .find(|k| !k.leq(n) && self.product(k, k).leq(n))
                .map(|k| {
                    Witness::new("K_M K <= N with K not inside N")
                        .sub("N", n)
                        .sub("K", k)
                }),
        );
        let mut element = Holds::Yes;
        for v in all_vectors(self.m.prime(), self.m.dim()) {
            if n.contains(&v)? {
                continue;
            }
            let rm = cyclic(self.m, &v);
            if self.product(&rm, &rm).leq(n) {
                element = Holds::no(
                    Witness::new("(Rm)_M (Rm) <= N with m outside N")
                        .sub("N", n)
                        .sub("Rm", &rm),
                );
                break;
            }
        }
        Ok(SemiprimeTest {
            definition,
            element,
        })
    }

    fn zero_module_failure(&self) -> Option<Holds> {
        self.m
            .is_zero()
            .then(|| Holds::no(Witness::new("the zero module")))
    }

    pub fn is_prime(&self) -> Result<Holds> {
        self.memo("prime", || match self.zero_module_failure() {
            Some(h) => Ok(h),
            None => self.is_prime_submodule(&self.m.zero_submodule()),
        })
    }

    pub fn is_semiprime(&self) -> Result<Holds> {
        self.memo("semiprime", || match self.zero_module_failure() {
            Some(h) => Ok(h),
            None => Ok(self
                .is_semiprime_submodule(&self.m.zero_submodule())?
                .definition),
        })
    }

    /// Proper fully invariant prime submodules, in canonical order.
    pub fn prime_submodules(&self) -> Result<Vec<Submodule>> {
        let mut out = Vec::new();
        for p in self.fi_lattice()? {
            if !p.is_full() && self.is_prime_submodule(p)?.holds() {
                out.push(p.clone());
            }
        }
        Ok(out)
    }

    pub fn minimal_primes(&self) -> Result<Vec<Submodule>> {
        let primes = self.prime_submodules()?;
        Ok(primes
            .iter()
            .filter(|p| !primes.iter().any(|q| q != *p && q.leq(p)))
            .cloned()
            .collect())
    }

    /// Every minimal submodule receives a nonzero map from `M`; every
    /// nonzero submodule contains a minimal one.
    pub fn is_retractable(&self) -> Result<Holds> {
        self.memo("retractable", || {
            let starving = self
                .minimal_submodules()?
                .into_iter()
                .find(|t| self.hom_into(t).is_zero());
            Ok(Holds::from_failure(
                starving.map(|t| Witness::new("Hom_R(M, T) = 0").sub("T", &t)),
            ))
        })
    }

    pub fn is_duo(&self) -> Result<Holds> {
        self.memo("duo", || {
            for s in self.lattice()? {
                if let Some(f) = latt::unstable_witness(s, self.end()) {
                    return Ok(Holds::no(
                        Witness::new("submodule not stable under an endomorphism")
                            .sub("N", s)
                            .map("f", f),
                    ));
                }
            }
            Ok(Holds::Yes)
        })
    }

    /// `tr^M(N) = N` for every submodule `N`.
    pub fn generates_its_submodules(&self) -> Result<Holds> {
        self.memo("generates", || {
            let bad = self
                .lattice()?
                .iter()
                .find(|n| self.trace(n) != **n)
                .cloned();
            Ok(Holds::from_failure(bad.map(|n| {
                Witness::new("tr^M(N) != N")
                    .sub("N", &n)
                    .sub("trace", &self.trace(&n))
            })))
        })
    }

    /// Every `N` equals `I M` for a two-sided ideal `I` of `End_R(M)`. This
    /// holds exactly when every `N` is fully invariant with `tr^M(N) = N`,
    /// the ideal then being `Hom_R(M, N)`.
    pub fn is_multiplication_over_endo(&self) -> Result<Holds> {
        self.memo("multiplication", || {
            if let Holds::No(w) = self.is_duo()? {
                return Ok(Holds::No(w));
            }
            self.generates_its_submodules()
        })
    }

    /// Every map `M -> M/K` factors through the projection.
    pub fn is_self_projective(&self) -> Result<Holds> {
        self.memo("self_projective", || {
            for k in self.lattice()? {
                if k.is_zero() || k.is_full() {
                    continue;
                }
                let (q, proj) = quotient(self.m, k)?;
                let all = hom_space(self.m, &q)?;
                let lifted: Vec<Matrix> = self.end().mats().iter().map(|f| proj.mul(f)).collect();
                let lifted = HomBasis::span_of(self.m.prime(), self.m.dim(), q.dim(), &lifted);
                if lifted.dim() < all.dim() {
                    let g = all
                        .mats()
                        .iter()
                        .find(|g| !lifted.contains(g))
                        .expect("strictly larger space");
                    return Ok(Holds::no(
                        Witness::new("map M -> M/K that does not lift")
                            .sub("K", k)
                            .map("g", g)
                            .map("projection", &proj),
                    ));
                }
            }
            Ok(Holds::Yes)
        })
    }

    pub fn is_semisimple(&self) -> Result<Holds> {
        self.memo("semisimple", || {
            let soc = self.socle()?;
            Ok(if soc.is_full() {
                Holds::Yes
            } else {
                Holds::no(Witness::new("socle is a proper submodule").sub("socle", &soc))
            })
        })
    }

    /// `Hom_R(M/N, M) = 0` for every essential `N`.
    pub fn is_non_m_singular(&self) -> Result<Holds> {
        self.memo("non_m_singular", || {
            for n in self.essential_submodules()? {
                if n.is_full() {
                    continue;
                }
                let (q, _) = quotient(self.m, &n)?;
                let h = hom_space(&q, self.m)?;
                if let Some(f) = h.mats().first() {
                    return Ok(Holds::no(
                        Witness::new("Hom_R(M/N, M) != 0 with N essential")
                            .sub("N", &n)
                            .map("f", f),
                    ));
                }
            }
            Ok(Holds::Yes)
        })
    }

    /// `sum f(M)` over `f: M -> N` with essential kernel.
    pub fn singular_lower(&self, n: &ModulePresentation) -> Result<Subspace> {
        Ok(hom_space_killing(self.m, n, self.socle()?.space())?.image_span())
    }

    /// A monomorphism `M -> N` for every essential `N`.
    pub fn is_essentially_compressible(&self) -> Result<Holds> {
        self.memo("essentially_compressible", || {
            for n in self.essential_submodules()? {
                let (cn, _) = carve(self.m, &n)?;
                match exists_mono(self.m, &cn, self.budget.scan_limit)? {
                    MonoSearch::Yes(_) => {}
                    MonoSearch::No => {
                        return Ok(Holds::no(
                            Witness::new("no monomorphism into an essential submodule")
                                .sub("N", &n),
                        ))
                    }
                    MonoSearch::Unknown { .. } => {
                        return Err(Error::Undecided(format!(
                            "monomorphism into submodule of dim {}",
                            n.dim()
                        )))
                    }
                }
            }
            Ok(Holds::Yes)
        })
    }

    /// Some `f: M -> N` with `f o f != 0`, for every nonzero `N`. A map into a
    /// minimal `T <= N` is a map into `N`, so minimal submodules decide it.
    /// `F^2` is a quadratic form in the coordinates: it vanishes identically
    /// exactly when every `F_i^2` and every `F_i F_j + F_j F_i` vanishes.
    pub fn is_weakly_compressible(&self) -> Result<Holds> {
        self.memo("weakly_compressible", || {
            for t in self.minimal_submodules()? {
                if square_nonzero(&self.hom_into(&t)).is_none() {
                    return Ok(Holds::no(
                        Witness::new("every f: M -> N has f o f = 0").sub("N", &t),
                    ));
                }
            }
            Ok(Holds::Yes)
        })
    }

    /// `fS = Hom_R(M, f(M))` for every `f` in `S = End_R(M)`.
    pub fn is_semiprojective(&self) -> Result<Holds> {
        self.memo("semiprojective", || {
            let end = self.end();
            let limit = self.budget.scan_limit.min(SEMIPROJECTIVE_SCAN_LIMIT);
            for f in crate::homlab::enumerate(end, limit)? {
                let image = Submodule::trusted(Subspace::row_space(&f.transpose()));
                let fs: Vec<Matrix> = end.mats().iter().map(|g| f.mul(g)).collect();
                let fs = HomBasis::span_of(self.m.prime(), self.m.dim(), self.m.dim(), &fs);
                if fs.dim() != self.hom_into(&image).dim() {
                    return Ok(Holds::no(Witness::new("fS != Hom_R(M, f(M))").map("f", &f)));
                }
            }
            Ok(Holds::Yes)
        })
    }

    /// Nonzero maps from nonzero submodules of `s` into `s` are injective.
    /// A non-injective nonzero map kills some minimal submodule, so it is
    /// enough to look for nonzero maps `A -> s` vanishing on a minimal `T < A`.
    pub fn is_monoform(&self, s: &Submodule) -> Result<Holds> {
        if s.is_zero() {
            return Ok(Holds::no(Witness::new("the zero submodule")));
        }
        let (ms, _) = carve(self.m, s)?;
        let lattice = self.lattice()?;
        let inside: Vec<&Submodule> = lattice
            .iter()
            .filter(|a| !a.is_zero() && a.leq(s))
            .collect();
        let minimals: Vec<&Submodule> = lattice.atoms().into_iter().filter(|t| t.leq(s)).collect();
        for a in &inside {
            let a_in_s = Submodule::trusted(coords_in(s, a));
            let (ma, _) = carve(&ms, &a_in_s)?;
            for t in minimals.iter().filter(|t| t.leq(a) && **t != *a) {
                let t_in_a = coords_in(a, t);
                let h = hom_space_killing(&ma, &ms, &t_in_a)?;
                if let Some(f) = h.mats().first() {
                    return Ok(Holds::no(
                        Witness::new("nonzero map A -> S killing T")
                            .sub("S", s)
                            .sub("A", a)
                            .sub("T", t)
                            .map("f (carved coordinates)", f),
                    ));
                }
            }
        }
        Ok(Holds::Yes)
    }

    /// Every nonzero submodule contains a monoform submodule.
    pub fn has_enough_monoforms(&self) -> Result<Holds> {
        self.memo("enough_monoforms", || {
            let lattice = self.lattice()?;
            let mut monoform: HashMap<&Submodule, bool> = HashMap::new();
            for n in lattice.iter().filter(|n| !n.is_zero()) {
                let mut found = false;
                for s in lattice.iter().filter(|s| !s.is_zero() && s.leq(n)) {
                    let ok = match monoform.get(s) {
                        Some(&b) => b,
                        None => {
                            let b = self.is_monoform(s)?.holds();
                            monoform.insert(s, b);
                            b
                        }
                    };
                    if ok {
                        found = true;
                        break;
                    }
                }
                if !found {
                    return Ok(Holds::no(
                        Witness::new("no monoform submodule inside N").sub("N", n),
                    ));
                }
            }
            Ok(Holds::Yes)
        })
    }

    /// Submodules `N` admitting a monomorphism `M -> N`.
    pub fn regular_submodules(&self) -> Result<Vec<Submodule>> {
        let mut out = Vec::new();
        for n in self.lattice()? {
            let (cn, _) = carve(self.m, n)?;
            match exists_mono(self.m, &cn, self.budget.scan_limit)? {
                MonoSearch::Yes(_) => out.push(n.clone()),
                MonoSearch::No => {}
                MonoSearch::Unknown { .. } => {
                    return Err(Error::Undecided("regular submodule search".into()))
                }
            }
        }
        Ok(out)
    }

    /// Every map `A -> K` from a submodule `A` in `sources` extends to `M`.
    fn injective_over(&self, k: &ModulePresentation, sources: &[Submodule]) -> Result<Holds> {
        self.m.same_algebra(k)?;
        let whole = hom_space(self.m, k)?;
        for a in sources {
            let (ma, incl) = carve(self.m, a)?;
            let local = hom_space(&ma, k)?;
            let restricted: Vec<Matrix> = whole.mats().iter().map(|f| f.mul(&incl)).collect();
            let restricted = HomBasis::span_of(self.m.prime(), ma.dim(), k.dim(), &restricted);
            if restricted.dim() < local.dim() {
                let g = local
                    .mats()
                    .iter()
                    .find(|g| !restricted.contains(g))
                    .expect("strictly larger space");
                return Ok(Holds::no(
                    Witness::new("map A -> K with no extension to M")
                        .sub("A", a)
                        .map("g (carved coordinates)", g),
                ));
            }
        }
        Ok(Holds::Yes)
    }

    pub fn is_m_injective(&self, k: &ModulePresentation) -> Result<Holds> {
        let sources: Vec<Submodule> = self.lattice()?.elements().to_vec();
        self.injective_over(k, &sources)
    }

    pub fn is_regm_injective(&self, k: &ModulePresentation) -> Result<Holds> {
        let sources = self.regular_submodules()?;
        self.injective_over(k, &sources)
    }

    pub fn goldie_report(&self) -> Result<GoldieReport> {
        let poset = self.left_annihilators()?;
        let semiprime = self.is_semiprime()?.holds();
        let prime = self.is_prime()?.holds();
        Ok(GoldieReport {
            udim: self.udim()?,
            left_annihilators: poset.count(),
            left_annihilator_chain: poset.longest_chain(),
            left_annihilators_all: poset.all_count(),
            acc_trivially: poset.acc_holds(),
            goldie: true,
            semiprime_goldie: semiprime,
            prime_goldie: prime,
            note: "finite module: ACC on left annihilators and finite uniform dimension hold"
                .into(),
        })
    }

    /// Every predicate, with witnesses for the false ones.
    pub fn report(&self, progenerator: bool) -> PredicateReport {
        let mut witnesses = BTreeMap::new();
        let mut notes = Vec::new();
        let mut answer = |name: &str, r: Result<Holds>| -> Answer {
            match r {
                Ok(Holds::Yes) => Answer::True,
                Ok(Holds::No(w)) => {
                    witnesses.insert(name.to_string(), *w);
                    Answer::False
                }
                Err(e) => {
                    notes.push(format!("{name}: {e}"));
                    Answer::Unknown
                }
            }
        };
        let prime = answer("prime", self.is_prime());
        let semiprime = answer("semiprime", self.is_semiprime());
        let duo = answer("duo", self.is_duo());
        let retractable = answer("retractable", self.is_retractable());
        let weakly_compressible = answer("weakly_compressible", self.is_weakly_compressible());
        let essentially_compressible = answer(
            "essentially_compressible",
            self.is_essentially_compressible(),
        );
        let self_projective = answer("self_projective", self.is_self_projective());
        let non_m_singular = answer("non_m_singular", self.is_non_m_singular());
        let semisimple = answer("semisimple", self.is_semisimple());
        let semiprojective = answer("semiprojective", self.is_semiprojective());
        let multiplication_over_endo = answer(
            "multiplication_over_endo",
            self.is_multiplication_over_endo(),
        );
        let enough_monoforms = answer("enough_monoforms", self.has_enough_monoforms());
        let goldie = self.goldie_report().ok();
        PredicateReport {
            module: self.m.name().to_string(),
            dim: self.m.dim(),
            progenerator,
            lattice_size: self.lattice().ok().map(SubmoduleLattice::len),
            fi_lattice_size: self.fi_lattice().ok().map(SubmoduleLattice::len),
            end_dim: self.end().dim(),
            prime,
            semiprime,
            duo,
            retractable,
            weakly_compressible,
            essentially_compressible,
            self_projective,
            non_m_singular,
            semisimple,
            semiprojective,
            multiplication_over_endo,
            enough_monoforms,
            goldie: if goldie.is_some() {
                Answer::True
            } else {
                Answer::Unknown
            },
            udim: goldie.as_ref().map(|g| g.udim),
            left_annihilator_count: goldie.as_ref().map(|g| g.left_annihilators),
            left_annihilator_chain: goldie.as_ref().map(|g| g.left_annihilator_chain),
            goldie_report: goldie,
            witnesses,
            notes,
        }
    }
}

/// Basis element or pair sum with nonzero square, if any.
pub fn square_nonzero(h: &HomBasis) -> Option<Matrix> {
    let mats = h.mats();
    for f in mats {
        if !f.mul(f).is_zero() {
            return Some(f.clone());
        }
    }
    for (i, f) in mats.iter().enumerate() {
        for g in &mats[i + 1..] {
            if !f.mul(g).add(&g.mul(f)).is_zero() {
                return Some(f.add(g));
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoldieReport {
    pub udim: usize,
    pub left_annihilators: usize,
    pub left_annihilator_chain: usize,
    pub left_annihilators_all: usize,
    pub acc_trivially: bool,
    pub goldie: bool,
    pub semiprime_goldie: bool,
    pub prime_goldie: bool,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredicateReport {
    pub module: String,
    pub dim: usize,
    pub progenerator: bool,
    pub lattice_size: Option<usize>,
    pub fi_lattice_size: Option<usize>,
    pub end_dim: usize,
    pub prime: Answer,
    pub semiprime: Answer,
    pub duo: Answer,
    pub retractable: Answer,
    pub weakly_compressible: Answer,
    pub essentially_compressible: Answer,
    pub self_projective: Answer,
    pub non_m_singular: Answer,
    pub semisimple: Answer,
    pub semiprojective: Answer,
    pub multiplication_over_endo: Answer,
    pub enough_monoforms: Answer,
    pub goldie: Answer,
    pub udim: Option<usize>,
    pub left_annihilator_count: Option<usize>,
    pub left_annihilator_chain: Option<usize>,
    pub goldie_report: Option<GoldieReport>,
    pub witnesses: BTreeMap<String, Witness>,
    pub notes: Vec<String>,
}

impl PredicateReport {
    /// The boolean verdicts by name, in a fixed order.
    pub fn verdicts(&self) -> Vec<(&'static str, Answer)> {
        vec![
            ("prime", self.prime),
            ("semiprime", self.semiprime),
            ("duo", self.duo),
            ("retractable", self.retractable),
            ("weakly_compressible", self.weakly_compressible),
            ("essentially_compressible", self.essentially_compressible),
            ("self_projective", self.self_projective),
            ("non_m_singular", self.non_m_singular),
            ("semisimple", self.semisimple),
            ("semiprojective", self.semiprojective),
            ("multiplication_over_endo", self.multiplication_over_endo),
            ("enough_monoforms", self.enough_monoforms),
            ("goldie", self.goldie),
        ]
    }
}

/// `M/K` for an essential `K`: M-singular by construction.
pub fn make_singular_quotient(m: &ModulePresentation, k: &Submodule) -> Result<ModulePresentation> {
    if !latt::is_essential(m, k) {
        return Err(Error::NotEssential);
    }
    Ok(quotient(m, k)?
        .0
        .renamed(format!("{}/{}", m.name(), k.dim())))
}

/// `Z(N)` computed over `R`: elements whose annihilator in `R` is an
/// essential left ideal, i.e. elements killed by the left socle of `R`.
pub fn classical_singular(n: &ModulePresentation) -> Subspace {
    let a = n.algebra();
    let reg = crate::algmod::regular_module(a);
    let soc = latt::socle(&reg);
    let stacked = soc
        .basis_vectors()
        .map(|s| n.action_of(s))
        .fold(Matrix::zeros(n.prime(), 0, n.dim()), |acc, m| acc.stack(&m));
    crate::fplin::nullspace(&stacked)
}

/// Convenience wrappers with the default budget.
pub fn is_duo(m: &ModulePresentation) -> Result<bool> {
    Ok(Analysis::new(m, Budget::default()).is_duo()?.holds())
}

pub fn is_semiprime(m: &ModulePresentation) -> Result<bool> {
    Ok(Analysis::new(m, Budget::default()).is_semiprime()?.holds())
}

pub fn is_prime(m: &ModulePresentation) -> Result<bool> {
    Ok(Analysis::new(m, Budget::default()).is_prime()?.holds())
}

pub fn is_retractable(m: &ModulePresentation) -> Result<bool> {
    Ok(Analysis::new(m, Budget::default())
        .is_retractable()?
        .holds())
}

pub fn is_self_projective(m: &ModulePresentation) -> Result<bool> {
    Ok(Analysis::new(m, Budget::default())
        .is_self_projective()?
        .holds())
}

pub fn predicate_report(m: &ModulePresentation, progenerator: bool) -> PredicateReport {
    Analysis::new(m, Budget::default()).report(progenerator)
}

#[cfg(test)]
mod tests;
