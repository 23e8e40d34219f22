//! Submodule lattices: cyclic closure, enumeration, fully invariant
//! submodules, essentiality, socle, uniform dimension and pseudocomplements.

use std::collections::BTreeSet;

use crate::algmod::{ModulePresentation, Submodule};
use crate::error::{Error, Result};
use crate::fplin::{all_vectors, Matrix, Prime, Subspace};
use crate::homlab::{hom_space, HomBasis};

/// Default element-count cap for lattice enumeration.
pub const DEFAULT_LATTICE_CAP: usize = 4096;

/// Largest ambient space whose vectors are scanned when seeding cyclic
/// submodules.
pub const VECTOR_SCAN_LIMIT: u64 = 1 << 22;

/// Incrementally maintained fully reduced echelon basis.
struct Echelon {
    p: Prime,
    rows: Vec<(usize, Vec<u8>)>,
}

impl Echelon {
    fn new(p: Prime) -> Self {
        Echelon {
            p,
            rows: Vec::new(),
        }
    }

    fn reduce(&self, v: &mut [u8]) {
        let p = self.p;
        for (pc, row) in &self.rows {
            let c = v[*pc];
            if c != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = p.sub(*x, p.mul(c, r));
                }
            }
        }
    }

    /// Adds `v` if it is independent; returns whether it was added.
    fn insert(&mut self, mut v: Vec<u8>) -> bool {
        let p = self.p;
        self.reduce(&mut v);
        let Some(pc) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = p.inv(v[pc]);
        for x in v.iter_mut() {
            *x = p.mul(*x, inv);
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[pc];
            if c != 0 {
                for (x, &r) in row.iter_mut().zip(&v) {
                    *x = p.sub(*x, p.mul(c, r));
                }
            }
        }
        self.rows.push((pc, v));
        true
    }

    fn into_subspace(self, ambient: usize) -> Subspace {
        let rows: Vec<Vec<u8>> = self.rows.into_iter().map(|(_, r)| r).collect();
        Subspace::span(self.p, ambient, &rows)
    }
}

/// Smallest subspace containing `seeds` and closed under every matrix in `mats`.
pub fn closure<V: AsRef<[u8]>>(p: Prime, dim: usize, mats: &[Matrix], seeds: &[V]) -> Subspace {
    let mut ech = Echelon::new(p);
    let mut queue: Vec<Vec<u8>> = Vec::new();
    for s in seeds {
        let v = s.as_ref().to_vec();
        if ech.insert(v.clone()) {
            queue.push(v);
        }
    }
    while let Some(w) = queue.pop() {
        for a in mats {
            let u = a.mul_vec(&w);
            if ech.insert(u.clone()) {
                queue.push(u);
            }
        }
    }
    ech.into_subspace(dim)
}

/// The submodule `Rv`.
pub fn cyclic(m: &ModulePresentation, v: &[u8]) -> Submodule {
    Submodule::trusted(closure(m.prime(), m.dim(), m.action(), &[v]))
}

/// Nonzero vectors up to scalars: the first nonzero coordinate is 1.
fn projective_points(p: Prime, dim: usize) -> impl Iterator<Item = Vec<u8>> {
    all_vectors(p, dim).filter(|v| v.iter().find(|&&x| x != 0) == Some(&1))
}

fn check_scan(p: Prime, dim: usize) -> Result<()> {
    match p.count(dim) {
        Some(n) if n <= VECTOR_SCAN_LIMIT => Ok(()),
        _ => Err(Error::Budget {
            size: (p.get() as u128).saturating_pow(dim as u32),
            budget: VECTOR_SCAN_LIMIT,
        }),
    }
}

/// Every subspace of `F_p^dim` closed under `mats`, in canonical order.
///
/// Seeds with the distinct cyclic subspaces, then closes under sums with
/// them until a fixpoint. Every invariant subspace is a sum of cyclic ones,
/// so the fixpoint is the whole lattice.
pub fn invariant_subspaces(
    p: Prime,
    dim: usize,
    mats: &[Matrix],
    cap: usize,
) -> Result<Vec<Subspace>> {
    check_scan(p, dim)?;
    let zero = Subspace::zero(p, dim);
    let cyclics: BTreeSet<Subspace> = projective_points(p, dim)
        .map(|v| closure(p, dim, mats, &[v]))
        .collect();
    let mut seen: BTreeSet<Subspace> = BTreeSet::new();
    seen.insert(zero.clone());
    let mut frontier = vec![zero];
    while let Some(x) = frontier.pop() {
        for c in &cyclics {
            if c.is_subspace_of(&x) {
                continue;
            }
            let y = x.sum(c).expect("common ambient");
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::LatticeCap { cap });
                }
                seen.insert(y.clone());
                frontier.push(y);
            }
        }
    }
    if seen.len() > cap {
        return Err(Error::LatticeCap { cap });
    }
    Ok(seen.into_iter().collect())
}

/// A finite lattice of submodules, in canonical order (dimension, then basis).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubmoduleLattice {
    elements: Vec<Submodule>,
}

impl SubmoduleLattice {
    pub(crate) fn from_sorted(elements: Vec<Submodule>) -> Self {
        SubmoduleLattice { elements }
    }

    pub fn elements(&self) -> &[Submodule] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, s: &Submodule) -> Option<usize> {
        self.elements.binary_search(s).ok()
    }

    pub fn contains(&self, s: &Submodule) -> bool {
        self.index_of(s).is_some()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Submodule> {
        self.elements.iter()
    }

    /// Pairs `(i, j)` with `elements[i]` covered by `elements[j]`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        cover_relation(&self.elements)
    }

    /// Minimal nonzero elements.
    pub fn atoms(&self) -> Vec<&Submodule> {
        self.elements
            .iter()
            .filter(|s| !s.is_zero())
            .filter(|s| {
                !self
                    .elements
                    .iter()
                    .any(|t| !t.is_zero() && t != *s && t.leq(s))
            })
            .collect()
    }
}

impl<'a> IntoIterator for &'a SubmoduleLattice {
    type Item = &'a Submodule;
    type IntoIter = std::slice::Iter<'a, Submodule>;
    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

/// Cover relation of a finite poset of submodules.
pub fn cover_relation(elems: &[Submodule]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, a) in elems.iter().enumerate() {
        for (j, b) in elems.iter().enumerate() {
            if i == j || !a.leq(b) || a == b {
                continue;
            }
            let between = elems
                .iter()
                .any(|c| c != a && c != b && a.leq(c) && c.leq(b));
            if !between {
                out.push((i, j));
            }
        }
    }
    out
}

/// Number of elements in a longest chain of a finite poset of submodules.
pub fn longest_chain(elems: &[Submodule]) -> usize {
    let mut order: Vec<usize> = (0..elems.len()).collect();
    order.sort_by_key(|&i| elems[i].dim());
    let mut best = vec![1usize; elems.len()];
    for (pos, &j) in order.iter().enumerate() {
        for &i in &order[..pos] {
            if elems[i] != elems[j] && elems[i].leq(&elems[j]) {
                best[j] = best[j].max(best[i] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// The full submodule lattice, with a hard cap on its size.
pub fn all_submodules(m: &ModulePresentation, cap: usize) -> Result<SubmoduleLattice> {
    let elems = invariant_subspaces(m.prime(), m.dim(), m.action(), cap)?;
    Ok(SubmoduleLattice::from_sorted(
        elems.into_iter().map(Submodule::trusted).collect(),
    ))
}

/// Whether every endomorphism in `end` maps `s` into itself.
pub fn is_stable_under(s: &Subspace, end: &HomBasis) -> bool {
    end.mats()
        .iter()
        .all(|f| s.image_under(f).is_subspace_of(s))
}

/// First endomorphism basis element moving `s` out of itself.
pub fn unstable_witness<'a>(s: &Subspace, end: &'a HomBasis) -> Option<&'a Matrix> {
    end.mats()
        .iter()
        .find(|f| !s.image_under(f).is_subspace_of(s))
}

/// Lattice of fully invariant submodules: subspaces closed under the action
/// and under a basis of `End_R(M)`.
pub fn fully_invariant(m: &ModulePresentation, cap: usize) -> Result<SubmoduleLattice> {
    let end = hom_space(m, m)?;
    fully_invariant_with(m, &end, cap)
}

pub fn fully_invariant_with(
    m: &ModulePresentation,
    end: &HomBasis,
    cap: usize,
) -> Result<SubmoduleLattice> {
    let mats: Vec<Matrix> = m.action().iter().chain(end.mats()).cloned().collect();
    let elems = invariant_subspaces(m.prime(), m.dim(), &mats, cap)?;
    Ok(SubmoduleLattice::from_sorted(
        elems.into_iter().map(Submodule::trusted).collect(),
    ))
}

/// `k <=_e M`: every nonzero cyclic submodule meets `k`.
pub fn is_essential(m: &ModulePresentation, k: &Submodule) -> bool {
    essential_witness(m, k).is_none()
}

/// A nonzero vector whose cyclic submodule misses `k`.
pub fn essential_witness(m: &ModulePresentation, k: &Submodule) -> Option<Vec<u8>> {
    if k.is_full() {
        return None;
    }
    projective_points(m.prime(), m.dim())
        .find(|v| !k.contains(v).expect("same ambient") && cyclic(m, v).meet(k).is_zero())
}

/// Minimal nonzero submodules, in canonical order.
pub fn minimal_submodules(m: &ModulePresentation) -> Vec<Submodule> {
    let cyclics: BTreeSet<Submodule> = projective_points(m.prime(), m.dim())
        .map(|v| cyclic(m, &v))
        .collect();
    cyclics
        .iter()
        .filter(|c| {
            c.elements()
                .filter(|v| v.iter().any(|&x| x != 0))
                .all(|v| cyclic(m, &v) == **c)
        })
        .cloned()
        .collect()
}

pub fn socle(m: &ModulePresentation) -> Submodule {
    socle_of(&minimal_submodules(m), m)
}

fn socle_of(minimals: &[Submodule], m: &ModulePresentation) -> Submodule {
    minimals
        .iter()
        .fold(m.zero_submodule(), |acc, t| acc.join(t))
}

/// Composition length of the socle: the number of simples in a greedy
/// independent family of minimal submodules.
pub fn udim_of(minimals: &[Submodule], m: &ModulePresentation) -> usize {
    let mut cur = m.zero_submodule();
    let mut count = 0;
    for t in minimals {
        if cur.meet(t).is_zero() {
            cur = cur.join(t);
            count += 1;
        }
    }
    count
}

pub fn udim(m: &ModulePresentation) -> usize {
    udim_of(&minimal_submodules(m), m)
}

/// `s` is nonzero and contains exactly one minimal submodule.
pub fn is_uniform(m: &ModulePresentation, s: &Submodule) -> bool {
    !s.is_zero() && minimal_submodules(m).iter().filter(|t| t.leq(s)).count() == 1
}

/// A maximal submodule meeting `k` in zero, built greedily over vectors in
/// lexicographic order.
pub fn pseudocomplement(m: &ModulePresentation, k: &Submodule) -> Submodule {
    let mut cur = m.zero_submodule();
    for v in projective_points(m.prime(), m.dim()) {
        if cur.contains(&v).expect("same ambient") {
            continue;
        }
        let cand = cur.join(&cyclic(m, &v));
        if cand.meet(k).is_zero() {
            cur = cand;
        }
    }
    cur
}

/// All maximal fully invariant submodules meeting `k` in zero.
pub fn fi_pseudocomplements(fi: &SubmoduleLattice, k: &Submodule) -> Vec<Submodule> {
    let meets_zero: Vec<&Submodule> = fi.iter().filter(|l| l.meet(k).is_zero()).collect();
    meets_zero
        .iter()
        .filter(|l| !meets_zero.iter().any(|o| o != *l && l.leq(o)))
        .map(|l| (*l).clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algmod::{catalog, direct_sum, quotient, regular_module};
    use std::sync::Arc;

    fn sub(m: &ModulePresentation, rows: &[&[u8]]) -> Submodule {
        m.submodule_from_rows(rows).unwrap()
    }

    /// All subsets of F_2^d closed under addition and the action, found by
    /// brute force over bitmasks of vectors.
    fn brute_submodule_sets(m: &ModulePresentation) -> Vec<u64> {
        assert_eq!(m.prime(), Prime::TWO);
        let d = m.dim();
        let n = 1usize << d;
        assert!(n <= 16);
        let to_vec = |x: usize| {
            (0..d)
                .map(|i| ((x >> (d - 1 - i)) & 1) as u8)
                .collect::<Vec<u8>>()
        };
        let to_idx = |v: &[u8]| v.iter().fold(0usize, |a, &b| (a << 1) | b as usize);
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << n) {
            if mask & 1 == 0 {
                continue;
            }
            let members: Vec<usize> = (0..n).filter(|&x| mask >> x & 1 == 1).collect();
            let add_closed = members
                .iter()
                .all(|&a| members.iter().all(|&b| mask >> (a ^ b) & 1 == 1));
            let act_closed = members.iter().all(|&a| {
                m.action()
                    .iter()
                    .all(|mat| mask >> to_idx(&mat.mul_vec(&to_vec(a))) & 1 == 1)
            });
            if add_closed && act_closed {
                out.push(mask);
            }
        }
        out
    }

    fn as_mask(s: &Subspace) -> u64 {
        s.elements().fold(0u64, |acc, v| {
            acc | 1 << v.iter().fold(0usize, |a, &b| (a << 1) | b as usize)
        })
    }

    #[test]
    fn cyclic_examples() {
        let es = catalog::mod_es();
        assert_eq!(cyclic(&es, &[0, 1, 0]), sub(&es, &[&[1, 0, 0], &[0, 1, 0]]));
        assert!(cyclic(&es, &[0, 0, 0]).is_zero());
        let a2 = catalog::mod_a2();
        assert!(cyclic(&a2, &[1, 1]).is_full());
    }

    #[test]
    fn mod_es_lattice_matches_brute_force() {
        let es = catalog::mod_es();
        let lat = all_submodules(&es, DEFAULT_LATTICE_CAP).unwrap();
        assert_eq!(lat.len(), 6);
        let mut ours: Vec<u64> = lat.iter().map(|s| as_mask(s)).collect();
        ours.sort();
        let mut brute = brute_submodule_sets(&es);
        brute.sort();
        assert_eq!(ours, brute);
        let fixture = catalog::tz2_fixture();
        let fm = fixture.module("mod-es").unwrap();
        for name in ["S", "K", "L", "N"] {
            assert!(lat.contains(&fm.aliases[name]));
        }
    }

    #[test]
    fn every_fixture_lattice_matches_brute_force() {
        for fm in catalog::all_fixture_modules() {
            let m = &fm.module;
            if m.dim() > 4 {
                continue;
            }
            let lat = all_submodules(m, DEFAULT_LATTICE_CAP).unwrap();
            let mut ours: Vec<u64> = lat.iter().map(|s| as_mask(s)).collect();
            ours.sort();
            let mut brute = brute_submodule_sets(m);
            brute.sort();
            assert_eq!(ours, brute, "{}", m.name());
        }
    }

    #[test]
    fn lattice_is_sum_and_meet_closed() {
        for fm in catalog::all_fixture_modules() {
            let lat = all_submodules(&fm.module, DEFAULT_LATTICE_CAP).unwrap();
            for a in &lat {
                for b in &lat {
                    assert!(lat.contains(&a.join(b)));
                    assert!(lat.contains(&a.meet(b)));
                }
            }
        }
    }

    #[test]
    fn small_lattices() {
        let s = catalog::simple_tz2();
        assert_eq!(all_submodules(&s, DEFAULT_LATTICE_CAP).unwrap().len(), 2);
        let es = catalog::mod_es();
        let (q, _) = quotient(&es, &sub(&es, &[&[1, 0, 0]])).unwrap();
        assert_eq!(all_submodules(&q, DEFAULT_LATTICE_CAP).unwrap().len(), 5);
        let ss = direct_sum(&[&s, &s]).unwrap();
        assert_eq!(all_submodules(&ss, DEFAULT_LATTICE_CAP).unwrap().len(), 5);
        let reg = regular_module(&Arc::new(catalog::ring_tz2()));
        assert_eq!(all_submodules(&reg, DEFAULT_LATTICE_CAP).unwrap().len(), 6);
    }

    #[test]
    fn cap_is_a_hard_error() {
        let es = catalog::mod_es();
        assert_eq!(all_submodules(&es, 5), Err(Error::LatticeCap { cap: 5 }));
        assert!(all_submodules(&es, 6).is_ok());
        assert!(all_submodules(&es, 0).is_err());
    }

    #[test]
    fn cover_relation_of_mod_es() {
        let es = catalog::mod_es();
        let lat = all_submodules(&es, DEFAULT_LATTICE_CAP).unwrap();
        let covers = lat.covers();
        assert_eq!(covers.len(), 7);
        let dims: Vec<(usize, usize)> = covers
            .iter()
            .map(|&(i, j)| (lat.elements()[i].dim(), lat.elements()[j].dim()))
            .collect();
        assert_eq!(dims.iter().filter(|d| **d == (0, 1)).count(), 1);
        assert_eq!(dims.iter().filter(|d| **d == (1, 2)).count(), 3);
        assert_eq!(dims.iter().filter(|d| **d == (2, 3)).count(), 3);
        assert_eq!(longest_chain(lat.elements()), 4);
    }

    #[test]
    fn fully_invariant_examples() {
        let es = catalog::mod_es();
        assert_eq!(fully_invariant(&es, DEFAULT_LATTICE_CAP).unwrap().len(), 6);
        let (q, _) = quotient(&es, &sub(&es, &[&[1, 0, 0]])).unwrap();
        let fi = fully_invariant(&q, DEFAULT_LATTICE_CAP).unwrap();
        assert_eq!(fi.len(), 2);
        let reg = regular_module(&Arc::new(catalog::ring_tz2()));
        assert_eq!(fully_invariant(&reg, DEFAULT_LATTICE_CAP).unwrap().len(), 6);
    }

    #[test]
    fn fi_lattice_is_inside_the_lattice() {
        for fm in catalog::all_fixture_modules() {
            let m = &fm.module;
            let lat = all_submodules(m, DEFAULT_LATTICE_CAP).unwrap();
            let fi = fully_invariant(m, DEFAULT_LATTICE_CAP).unwrap();
            assert!(fi.iter().all(|s| lat.contains(s)));
            let end = hom_space(m, m).unwrap();
            for s in &lat {
                assert_eq!(fi.contains(s), is_stable_under(s, &end));
            }
        }
    }

    #[test]
    fn essential_examples() {
        let es = catalog::mod_es();
        assert!(is_essential(&es, &sub(&es, &[&[1, 0, 0]])));
        assert!(is_essential(&es, &sub(&es, &[&[1, 0, 0], &[0, 1, 0]])));
        let a2 = catalog::mod_a2();
        assert!(!is_essential(&a2, &sub(&a2, &[&[1, 0]])));
    }

    #[test]
    fn essential_iff_contains_socle() {
        for fm in catalog::all_fixture_modules() {
            let m = &fm.module;
            let soc = socle(m);
            assert!(is_essential(m, &soc), "{}", m.name());
            for k in &all_submodules(m, DEFAULT_LATTICE_CAP).unwrap() {
                assert_eq!(is_essential(m, k), soc.leq(k), "{}", m.name());
                assert_eq!(is_essential(m, k), pseudocomplement(m, k).is_zero());
            }
        }
    }

    #[test]
    fn socle_and_udim() {
        let es = catalog::mod_es();
        assert_eq!(socle(&es), sub(&es, &[&[1, 0, 0]]));
        assert_eq!(minimal_submodules(&es).len(), 1);
        assert_eq!(udim(&es), 1);
        assert!(is_uniform(&es, &es.whole()));
        let a2 = catalog::mod_a2();
        assert!(socle(&a2).is_full());
        assert_eq!(minimal_submodules(&a2).len(), 2);
        assert_eq!(udim(&a2), 2);
        let z = crate::algmod::zero_module(es.algebra());
        assert!(socle(&z).is_zero());
        assert_eq!(udim(&z), 0);
        let s = catalog::simple_tz2();
        assert_eq!(udim(&direct_sum(&[&s, &s, &s]).unwrap()), 3);
    }

    #[test]
    fn udim_is_additive() {
        let ms: Vec<_> = catalog::all_fixture_modules()
            .into_iter()
            .map(|f| f.module)
            .collect();
        for a in &ms {
            for b in &ms {
                if a.same_algebra(b).is_err() || a.dim() + b.dim() > 6 {
                    continue;
                }
                assert_eq!(udim(&direct_sum(&[a, b]).unwrap()), udim(a) + udim(b));
            }
        }
    }

    #[test]
    fn pseudocomplements() {
        let es = catalog::mod_es();
        assert!(pseudocomplement(&es, &sub(&es, &[&[1, 0, 0]])).is_zero());
        assert!(pseudocomplement(&es, &es.whole()).is_zero());
        let a2 = catalog::mod_a2();
        let e1 = sub(&a2, &[&[1, 0]]);
        let fi = fully_invariant(&a2, DEFAULT_LATTICE_CAP).unwrap();
        assert_eq!(fi_pseudocomplements(&fi, &e1), vec![sub(&a2, &[&[0, 1]])]);
        assert_eq!(pseudocomplement(&a2, &e1), sub(&a2, &[&[0, 1]]));
    }
}
