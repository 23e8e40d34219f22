//! The product `K_M L`, its powers, annihilators `Ann_M(N)` and left
//! annihilators `A_X` of sets of endomorphisms.

use crate::algmod::{ModulePresentation, Submodule};
use crate::error::{Error, Result};
use crate::fplin::{Matrix, Subspace};
use crate::homlab::{hom_into, hom_space_killing, HomBasis};
use crate::latt::{longest_chain, SubmoduleLattice};

fn check_sub(m: &ModulePresentation, s: &Submodule) -> Result<()> {
    if s.ambient() != m.dim() || !m.is_action_closed(s) {
        return Err(Error::NotSubmodule);
    }
    Ok(())
}

/// `sum f(k)` over a hom space given by its basis.
pub fn product_with(hom_l: &HomBasis, k: &Submodule) -> Submodule {
    let mut images = Vec::new();
    for f in hom_l.mats() {
        for v in k.basis_vectors() {
            images.push(f.mul_vec(v));
        }
    }
    Submodule::trusted(Subspace::span(hom_l.prime(), hom_l.target_dim(), &images))
}

/// `K_M L = sum { f(K) : f in Hom_R(M, L) }`.
pub fn product(m: &ModulePresentation, k: &Submodule, l: &Submodule) -> Result<Submodule> {
    check_sub(m, k)?;
    Ok(product_with(&hom_into(m, l)?, k))
}

/// `N^0 = 0`, `N^1 = N`, `N^e = N_M N^(e-1)`.
pub fn power(m: &ModulePresentation, n: &Submodule, e: i64) -> Result<Submodule> {
    if e < 0 {
        return Err(Error::NegativeExponent(e));
    }
    check_sub(m, n)?;
    let mut cur = if e == 0 {
        m.zero_submodule()
    } else {
        n.clone()
    };
    for _ in 1..e {
        let next = product(m, n, &cur)?;
        if next == cur {
            break;
        }
        cur = next;
    }
    Ok(cur)
}

/// `Ann_M(N)`: the common kernel of `Hom_R(M, N)`.
pub fn annihilator(m: &ModulePresentation, n: &Submodule) -> Result<Submodule> {
    Ok(Submodule::trusted(hom_into(m, n)?.common_kernel()))
}

/// `A_X`: the intersection of the kernels of the endomorphisms in `xs`.
pub fn left_annihilator(m: &ModulePresentation, xs: &[Matrix]) -> Result<Submodule> {
    for f in xs {
        let equivariant = f.rows() == m.dim()
            && f.cols() == m.dim()
            && m.action().iter().all(|a| f.mul(a) == a.mul(f));
        if !equivariant {
            return Err(Error::NotEquivariant);
        }
    }
    let stacked = xs
        .iter()
        .fold(Matrix::zeros(m.prime(), 0, m.dim()), |acc, f| acc.stack(f));
    Ok(Submodule::trusted(crate::fplin::nullspace(&stacked)))
}

/// Left annihilators of a module, ordered canonically.
///
/// `all` holds every `A_X` for `X` a set of endomorphisms; it always
/// contains `0 = A_{1}` and `M = A_{}`. `proper` only uses sets of
/// endomorphisms that are not monomorphisms, so it holds `0` only when the
/// kernels of non-injective endomorphisms already meet in zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftAnnihilatorPoset {
    pub all: Vec<Submodule>,
    pub proper: Vec<Submodule>,
}

impl LeftAnnihilatorPoset {
    pub fn count(&self) -> usize {
        self.proper.len()
    }

    pub fn longest_chain(&self) -> usize {
        longest_chain(&self.proper)
    }

    pub fn all_count(&self) -> usize {
        self.all.len()
    }

    pub fn all_longest_chain(&self) -> usize {
        longest_chain(&self.all)
    }

    /// A finite poset satisfies ACC; this is always true and reported as such.
    pub fn acc_holds(&self) -> bool {
        true
    }
}

/// `K` is a left annihilator exactly when it is the common kernel of the
/// endomorphisms vanishing on it, so the poset is read off the lattice.
pub fn left_annihilator_poset(
    m: &ModulePresentation,
    lattice: &SubmoduleLattice,
) -> Result<LeftAnnihilatorPoset> {
    let mut all = Vec::new();
    for k in lattice {
        let killers = hom_space_killing(m, m, k)?;
        if killers.common_kernel() == *k.space() {
            all.push(k.clone());
        }
    }
    let mut proper: Vec<Submodule> = all.iter().filter(|k| !k.is_zero()).cloned().collect();
    let meet = proper.iter().fold(m.whole(), |acc, k| acc.meet(k));
    if meet.is_zero() && !m.is_zero() {
        proper.insert(0, meet);
    }
    if m.is_zero() {
        proper = all.clone();
    }
    Ok(LeftAnnihilatorPoset { all, proper })
}

/// `N = Ann_M(Ann_M(N))`.
pub fn is_annihilator_submodule(m: &ModulePresentation, n: &Submodule) -> Result<bool> {
    Ok(annihilator(m, &annihilator(m, n)?)? == *n)
}

/// A nonzero `K` in the lattice with `Ann_M(K) = N`, if any.
pub fn annihilator_witness(
    m: &ModulePresentation,
    lattice: &SubmoduleLattice,
    n: &Submodule,
) -> Result<Option<Submodule>> {
    for k in lattice {
        if !k.is_zero() && annihilator(m, k)? == *n {
            return Ok(Some(k.clone()));
        }
    }
    Ok(None)
}

/// Idempotent endomorphism with image `n`, certifying a direct summand.
pub fn summand_idempotent(
    m: &ModulePresentation,
    n: &Submodule,
    budget: u64,
) -> Result<Option<Matrix>> {
    let into = hom_into(m, n)?;
    for f in crate::homlab::enumerate(&into, budget)? {
        if f.mul(&f) == f && n.image_under(&f) == *n.space() {
            return Ok(Some(f));
        }
    }
    Ok(None)
}
