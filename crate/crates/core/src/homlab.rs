//! Hom spaces between finite modules, solved as the kernel of the stacked
//! equivariance system `F A_M(e_i) = A_N(e_i) F`.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algmod::{FiniteAlgebra, ModulePresentation, Submodule};
use crate::error::Result;
use crate::fplin::{nullspace, Matrix, Prime, Subspace};

/// Default number of hom-space elements a monomorphism scan may visit.
pub const DEFAULT_SCAN_BUDGET: u64 = 1 << 20;

/// A basis of `Hom_R(M, N)` as `d_N x d_M` matrices.
///
/// The span is kept as a canonical subspace of row-major flattened matrices,
/// so membership and coordinates are exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomBasis {
    p: Prime,
    source_dim: usize,
    target_dim: usize,
    space: Subspace,
    mats: Vec<Matrix>,
}

impl HomBasis {
    pub(crate) fn from_space(
        p: Prime,
        source_dim: usize,
        target_dim: usize,
        space: Subspace,
    ) -> Self {
        let mats = space
            .basis_vectors()
            .map(|v| Matrix::from_flat(p, target_dim, source_dim, v))
            .collect();
        HomBasis {
            p,
            source_dim,
            target_dim,
            space,
            mats,
        }
    }

    pub fn span_of(p: Prime, source_dim: usize, target_dim: usize, mats: &[Matrix]) -> Self {
        let flat: Vec<&[u8]> = mats.iter().map(Matrix::as_flat).collect();
        let space = Subspace::span(p, source_dim * target_dim, &flat);
        Self::from_space(p, source_dim, target_dim, space)
    }

    pub fn dim(&self) -> usize {
        self.mats.len()
    }

    pub fn is_zero(&self) -> bool {
        self.mats.is_empty()
    }

    pub fn mats(&self) -> &[Matrix] {
        &self.mats
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn element(&self, coeffs: &[u8]) -> Matrix {
        Matrix::combination(self.p, self.target_dim, self.source_dim, &self.mats, coeffs)
    }

    pub fn contains(&self, f: &Matrix) -> bool {
        f.rows() == self.target_dim
            && f.cols() == self.source_dim
            && self.space.coordinates(f.as_flat()).is_some()
    }

    pub fn coordinates(&self, f: &Matrix) -> Option<Vec<u8>> {
        self.space.coordinates(f.as_flat())
    }

    /// Number of elements, `p^dim`, when it fits in a u128.
    pub fn cardinality(&self) -> Option<u128> {
        (self.p.get() as u128).checked_pow(self.dim() as u32)
    }

    /// Sum of the images of all elements.
    pub fn image_span(&self) -> Subspace {
        let mut cols = Vec::new();
        for f in &self.mats {
            for j in 0..f.cols() {
                cols.push(f.column(j));
            }
        }
        Subspace::span(self.p, self.target_dim, &cols)
    }

    /// Intersection of the kernels of all elements.
    pub fn common_kernel(&self) -> Subspace {
        let stacked = self
            .mats
            .iter()
            .fold(Matrix::zeros(self.p, 0, self.source_dim), |acc, f| {
                acc.stack(f)
            });
        nullspace(&stacked)
    }
}

/// Extra linear constraints on a hom space.
#[derive(Default)]
struct Constraints<'a> {
    /// Images must land in this subspace of the target.
    image_in: Option<&'a Subspace>,
    /// Elements must vanish on this subspace of the source.
    kills: Option<&'a Subspace>,
}

fn solve(m: &ModulePresentation, n: &ModulePresentation, extra: Constraints<'_>) -> HomBasis {
    let p = m.prime();
    let (dm, dn) = (m.dim(), n.dim());
    let unknowns = dm * dn;
    let idx = |i: usize, j: usize| i * dm + j;
    let mut rows: Vec<Vec<u8>> = Vec::new();
    for (am, an) in m.action().iter().zip(n.action()) {
        for i in 0..dn {
            for j in 0..dm {
                let mut row = vec![0u8; unknowns];
                for k in 0..dm {
                    let c = am.get(k, j);
                    if c != 0 {
                        row[idx(i, k)] = p.add(row[idx(i, k)], c);
                    }
                }
                for k in 0..dn {
                    let c = an.get(i, k);
                    if c != 0 {
                        row[idx(k, j)] = p.sub(row[idx(k, j)], c);
                    }
                }
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
    }
    if let Some(target) = extra.image_in {
        for c in target.perp().basis_vectors() {
            for j in 0..dm {
                let mut row = vec![0u8; unknowns];
                for (i, &ci) in c.iter().enumerate() {
                    row[idx(i, j)] = ci;
                }
                rows.push(row);
            }
        }
    }
    if let Some(kernel) = extra.kills {
        for v in kernel.basis_vectors() {
            for i in 0..dn {
                let mut row = vec![0u8; unknowns];
                for (j, &vj) in v.iter().enumerate() {
                    row[idx(i, j)] = vj;
                }
                rows.push(row);
            }
        }
    }
    let system = Matrix::from_rows(p, unknowns, &rows).expect("rows have the unknown count");
    HomBasis::from_space(p, dm, dn, nullspace(&system))
}

/// Basis of `Hom_R(M, N)`.
pub fn hom_space(m: &ModulePresentation, n: &ModulePresentation) -> Result<HomBasis> {
    m.same_algebra(n)?;
    Ok(solve(m, n, Constraints::default()))
}

/// `Hom_R(M, N)` restricted to maps vanishing on `kill`, a subspace of `M`.
pub fn hom_space_killing(
    m: &ModulePresentation,
    n: &ModulePresentation,
    kill: &Subspace,
) -> Result<HomBasis> {
    m.same_algebra(n)?;
    Ok(solve(
        m,
        n,
        Constraints {
            image_in: None,
            kills: Some(kill),
        },
    ))
}

/// Endomorphisms of `M` with image inside the submodule `l`, i.e.
/// `Hom_R(M, L)` composed with the inclusion.
pub fn hom_into(m: &ModulePresentation, l: &Submodule) -> Result<HomBasis> {
    if l.ambient() != m.dim() || !m.is_action_closed(l) {
        return Err(crate::error::Error::NotSubmodule);
    }
    Ok(solve(
        m,
        m,
        Constraints {
            image_in: Some(l.space()),
            kills: None,
        },
    ))
}

/// `End_R(M)` as a finite algebra, with its matrix representation on `M`.
#[derive(Clone, Debug)]
pub struct EndoAlgebra {
    pub algebra: Arc<FiniteAlgebra>,
    pub rep: HomBasis,
}

impl EndoAlgebra {
    /// Matrix on `M` of an element given in algebra coordinates.
    pub fn matrix_of(&self, coords: &[u8]) -> Matrix {
        self.rep.element(coords)
    }
}

pub fn endo_algebra(m: &ModulePresentation) -> EndoAlgebra {
    let rep = solve(m, m, Constraints::default());
    let k = rep.dim();
    let mut triples = Vec::new();
    for (i, fi) in rep.mats().iter().enumerate() {
        for (j, fj) in rep.mats().iter().enumerate() {
            let prod = fi.mul(fj);
            let coords = rep
                .coordinates(&prod)
                .expect("End(M) is closed under composition");
            for (l, c) in coords.into_iter().enumerate() {
                if c != 0 {
                    triples.push((i, j, l, c));
                }
            }
        }
    }
    let unit = rep
        .coordinates(&Matrix::identity(m.prime(), m.dim()))
        .expect("identity is an endomorphism");
    let labels = (0..k).map(|i| format!("f{i}")).collect();
    let mut algebra = FiniteAlgebra::from_triples(
        format!("End({})", m.name()),
        m.prime(),
        labels,
        &triples,
        unit,
        false,
    )
    .expect("well-formed structure constants");
    if algebra.commutes() {
        algebra = FiniteAlgebra::from_triples(
            algebra.name().to_string(),
            m.prime(),
            algebra.labels().to_vec(),
            &triples,
            algebra.unit().to_vec(),
            true,
        )
        .expect("well-formed structure constants");
    }
    EndoAlgebra {
        algebra: Arc::new(algebra),
        rep,
    }
}

/// `tr^M(X)`: the sum of `f(M)` over `f: M -> X`.
pub fn trace(m: &ModulePresentation, x: &Submodule) -> Result<Submodule> {
    Ok(Submodule::trusted(hom_into(m, x)?.image_span()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonoSearch {
    Yes(Matrix),
    No,
    /// The hom space was too large to scan and sampling found no witness.
    Unknown {
        hom_dim: usize,
        sampled: u64,
    },
}

impl MonoSearch {
    pub fn is_yes(&self) -> bool {
        matches!(self, MonoSearch::Yes(_))
    }

    /// `Some(true/false)` when decided.
    pub fn decided(&self) -> Option<bool> {
        match self {
            MonoSearch::Yes(_) => Some(true),
            MonoSearch::No => Some(false),
            MonoSearch::Unknown { .. } => None,
        }
    }
}

/// Searches `Hom_R(M, N)` for an injective map.
///
/// `No` is only returned after a dimension obstruction, a common kernel, or
/// an exhaustive scan in modular Gray-code order; the first injective element
/// in that order is the witness.
pub fn exists_mono(
    m: &ModulePresentation,
    n: &ModulePresentation,
    budget: u64,
) -> Result<MonoSearch> {
    m.same_algebra(n)?;
    if m.dim() == 0 {
        return Ok(MonoSearch::Yes(Matrix::zeros(m.prime(), n.dim(), 0)));
    }
    if m.dim() > n.dim() {
        return Ok(MonoSearch::No);
    }
    let hom = hom_space(m, n)?;
    Ok(mono_in_space(&hom, budget))
}

/// Injective element of an arbitrary hom space, same search as [`exists_mono`].
pub fn mono_in_space(hom: &HomBasis, budget: u64) -> MonoSearch {
    let dm = hom.source_dim();
    if dm == 0 {
        return MonoSearch::Yes(Matrix::zeros(hom.prime(), hom.target_dim(), 0));
    }
    if hom.is_zero() || dm > hom.target_dim() || !hom.common_kernel().is_zero() {
        return MonoSearch::No;
    }
    match hom.cardinality() {
        Some(size) if size <= budget as u128 => gray_scan(hom, size as u64),
        _ => sample(hom, budget),
    }
}

fn gray_scan(hom: &HomBasis, size: u64) -> MonoSearch {
    let p = hom.prime();
    let dm = hom.source_dim();
    if p == Prime::TWO && hom.target_dim() <= 64 {
        let pack = |f: &Matrix| -> Vec<u64> {
            (0..f.cols())
                .map(|j| (0..f.rows()).fold(0u64, |w, i| w | ((f.get(i, j) as u64) << i)))
                .collect()
        };
        let basis: Vec<Vec<u64>> = hom.mats().iter().map(pack).collect();
        let mut cur = vec![0u64; dm];
        let mut coeffs = vec![0u8; hom.dim()];
        for t in 1..size {
            let j = t.trailing_zeros() as usize;
            coeffs[j] ^= 1;
            for (c, b) in cur.iter_mut().zip(&basis[j]) {
                *c ^= b;
            }
            if gf2_columns_independent(&cur) {
                return MonoSearch::Yes(hom.element(&coeffs));
            }
        }
        return MonoSearch::No;
    }
    let q = p.get() as u64;
    let mut coeffs = vec![0u8; hom.dim()];
    let mut cur = Matrix::zeros(p, hom.target_dim(), dm);
    for t in 1..size {
        let mut j = 0;
        let mut x = t;
        while x % q == 0 {
            x /= q;
            j += 1;
        }
        coeffs[j] = p.add(coeffs[j], 1);
        cur = cur.add(&hom.mats()[j]);
        if cur.rank() == dm {
            return MonoSearch::Yes(hom.element(&coeffs));
        }
    }
    MonoSearch::No
}

fn gf2_columns_independent(cols: &[u64]) -> bool {
    let mut basis: Vec<u64> = Vec::with_capacity(cols.len());
    for &c in cols {
        let mut v = c;
        for &b in &basis {
            let top = 63 - b.leading_zeros();
            if v >> top & 1 == 1 {
                v ^= b;
            }
        }
        if v == 0 {
            return false;
        }
        basis.push(v);
        basis.sort_unstable_by(|a, b| b.cmp(a));
    }
    true
}

fn sample(hom: &HomBasis, budget: u64) -> MonoSearch {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d6f6e6f);
    let p = hom.prime();
    let tries = budget.min(1 << 14);
    for _ in 0..tries {
        let coeffs: Vec<u8> = (0..hom.dim()).map(|_| rng.gen_range(0..p.get())).collect();
        let f = hom.element(&coeffs);
        if f.rank() == hom.source_dim() {
            return MonoSearch::Yes(f);
        }
    }
    MonoSearch::Unknown {
        hom_dim: hom.dim(),
        sampled: tries,
    }
}

/// Every element of a hom space, in lexicographic coordinate order.
pub fn enumerate(hom: &HomBasis, budget: u64) -> Result<Vec<Matrix>> {
    let size = hom.cardinality().unwrap_or(u128::MAX);
    if size > budget as u128 {
        return Err(crate::error::Error::Budget { size, budget });
    }
    Ok(crate::fplin::all_vectors(hom.prime(), hom.dim())
        .map(|c| hom.element(&c))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algmod::{carve, catalog, direct_sum};
    use crate::fplin::all_vectors;

    /// Exhaustive search over all `d_N x d_M` matrices.
    fn brute_hom(m: &ModulePresentation, n: &ModulePresentation) -> Vec<Matrix> {
        let p = m.prime();
        all_vectors(p, m.dim() * n.dim())
            .map(|v| Matrix::from_flat(p, n.dim(), m.dim(), &v))
            .filter(|f| {
                m.action()
                    .iter()
                    .zip(n.action())
                    .all(|(am, an)| f.mul(am) == an.mul(f))
            })
            .collect()
    }

    fn sub(m: &ModulePresentation, rows: &[&[u8]]) -> Submodule {
        m.submodule_from_rows(rows).unwrap()
    }

    #[test]
    fn hom_into_socle_of_mod_es() {
        let es = catalog::mod_es();
        let s = sub(&es, &[&[1, 0, 0]]);
        let (sm, _) = carve(&es, &s).unwrap();
        let h = hom_space(&es, &sm).unwrap();
        assert_eq!(h.dim(), 2);
        let brute = brute_hom(&es, &sm);
        assert_eq!(brute.len(), 4);
        for f in &brute {
            assert!(h.contains(f));
            assert_eq!(f.get(0, 0), 0, "f0 maps to zero");
        }
    }

    #[test]
    fn schur_for_simples() {
        for m in [
            catalog::simple_tz2(),
            catalog::simple_col(),
            catalog::simple_dn(),
        ] {
            assert_eq!(hom_space(&m, &m).unwrap().dim(), 1, "{m:?}");
        }
    }

    #[test]
    fn top_of_p1_differs_from_socle() {
        let p1 = catalog::mod_p1();
        let soc = sub(&p1, &[&[1, 0]]);
        let (sm, _) = carve(&p1, &soc).unwrap();
        assert_eq!(hom_space(&p1, &sm).unwrap().dim(), 0);
        assert!(brute_hom(&p1, &sm).iter().all(Matrix::is_zero));
    }

    #[test]
    fn hom_into_examples() {
        let es = catalog::mod_es();
        let l = sub(&es, &[&[1, 0, 0], &[0, 0, 1]]);
        let h = hom_into(&es, &l).unwrap();
        assert_eq!(h.dim(), 2);
        let s = sub(&es, &[&[1, 0, 0]]);
        // oracle: filter the 8 endomorphisms by image containment
        let ends = brute_hom(&es, &es);
        assert_eq!(ends.len(), 8);
        let into_l: Vec<_> = ends.iter().filter(|f| s_contains_image(&l, f)).collect();
        assert_eq!(into_l.len(), 4);
        for f in into_l {
            assert!(h.contains(f));
            assert!(s.image_under(f).is_zero(), "kills S");
            assert!(s_contains_image(&s, f), "maps into S");
        }
        assert_eq!(
            hom_into(&es, &es.whole()).unwrap(),
            hom_space(&es, &es).unwrap()
        );
        let a2 = catalog::mod_a2();
        assert_eq!(hom_into(&a2, &sub(&a2, &[&[1, 0]])).unwrap().dim(), 1);
    }

    fn s_contains_image(s: &Subspace, f: &Matrix) -> bool {
        (0..f.cols()).all(|j| s.contains(&f.column(j)).unwrap())
    }

    #[test]
    fn endo_algebras() {
        let e = endo_algebra(&catalog::mod_es());
        e.algebra.validate().unwrap();
        assert_eq!(e.algebra.dim(), 3);
        assert!(e.algebra.is_commutative_flagged());
        let s = endo_algebra(&catalog::simple_tz2());
        assert_eq!(s.algebra.dim(), 1);
        let a2 = endo_algebra(&catalog::mod_a2());
        assert_eq!(a2.algebra.dim(), 2);
        assert!(a2.algebra.commutes());
        for fm in catalog::all_fixture_modules() {
            endo_algebra(&fm.module).algebra.validate().unwrap();
        }
    }

    #[test]
    fn traces() {
        let es = catalog::mod_es();
        let s = sub(&es, &[&[1, 0, 0]]);
        assert_eq!(trace(&es, &s).unwrap(), s);
        assert_eq!(trace(&es, &es.whole()).unwrap(), es.whole());
        let p1 = catalog::mod_p1();
        assert!(trace(&p1, &sub(&p1, &[&[1, 0]])).unwrap().is_zero());
    }

    #[test]
    fn mono_examples() {
        let es = catalog::mod_es();
        match exists_mono(&es, &es, DEFAULT_SCAN_BUDGET).unwrap() {
            MonoSearch::Yes(f) => assert_eq!(f.rank(), 3),
            other => panic!("{other:?}"),
        }
        let (sm, _) = carve(&es, &sub(&es, &[&[1, 0, 0]])).unwrap();
        assert_eq!(
            exists_mono(&es, &sm, DEFAULT_SCAN_BUDGET).unwrap(),
            MonoSearch::No
        );
        let a2 = catalog::mod_a2();
        let (e1, _) = carve(&a2, &sub(&a2, &[&[1, 0]])).unwrap();
        assert_eq!(
            exists_mono(&a2, &e1, DEFAULT_SCAN_BUDGET).unwrap(),
            MonoSearch::No
        );
    }

    #[test]
    fn mono_search_matches_brute_force() {
        for fm in catalog::all_fixture_modules() {
            let m = &fm.module;
            let ends = brute_hom(m, m);
            let found = exists_mono(m, m, DEFAULT_SCAN_BUDGET).unwrap();
            assert_eq!(found.is_yes(), ends.iter().any(|f| f.rank() == m.dim()));
        }
        // a non-trivial No: Hom(S+S, mod-es) has no injective element
        let s = catalog::simple_tz2();
        let ss = direct_sum(&[&s, &s]).unwrap();
        let es = catalog::mod_es();
        let brute = brute_hom(&ss, &es);
        assert!(brute.iter().all(|f| f.rank() < 2));
        assert_eq!(
            exists_mono(&ss, &es, DEFAULT_SCAN_BUDGET).unwrap(),
            MonoSearch::No
        );
    }

    #[test]
    fn unknown_when_budget_is_zero() {
        let s = catalog::simple_tz2();
        let sss = direct_sum(&[&s, &s, &s]).unwrap();
        let h = hom_space(&sss, &sss).unwrap();
        assert_eq!(h.dim(), 9);
        assert!(matches!(mono_in_space(&h, 0), MonoSearch::Unknown { .. }));
    }

    #[test]
    fn algebra_mismatch() {
        let es = catalog::mod_es();
        let a2 = catalog::mod_a2();
        assert!(hom_space(&es, &a2).is_err());
        assert!(exists_mono(&es, &a2, 10).is_err());
    }
}
