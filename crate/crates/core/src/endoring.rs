//! Ring-theoretic verdicts on finite algebras, used for `End_R(M)`: the
//! Jacobson radical, semiprime and prime tests, and two-sided ideals.
//!
//! For a finite algebra `A` acting faithfully on `V` with composition series
//! `0 = V_0 < ... < V_l = V`, the radical is `{x : x V_i <= V_(i-1)}`: that
//! set is a nilpotent ideal and kills every composition factor. Prime means
//! simple here, since a finite prime ring is semiprime artinian with one
//! block.

use crate::algmod::FiniteAlgebra;
use crate::error::Result;
use crate::fplin::{all_vectors, nullspace, Matrix, Prime, Subspace};
use crate::homlab::EndoAlgebra;
use crate::latt::{closure, invariant_subspaces, DEFAULT_LATTICE_CAP};

/// Largest algebra on which the elementwise oracles run by default.
pub const ORACLE_LIMIT: u64 = 1 << 16;

/// Largest algebra whose two-sided ideals are enumerated for the prime
/// verdict; larger ones go through the center.
pub const IDEAL_SCAN_LIMIT: u64 = 1 << 12;

/// Composition series of `F_p^dim` under `mats`, from 0 up to the whole space.
///
/// Each step scans coset representatives supported off the pivots of the
/// current term and keeps the smallest cyclic extension.
pub fn composition_series(p: Prime, dim: usize, mats: &[Matrix]) -> Vec<Subspace> {
    let mut series = vec![Subspace::zero(p, dim)];
    loop {
        let cur = series.last().expect("nonempty").clone();
        if cur.is_full() {
            return series;
        }
        let base: Vec<Vec<u8>> = cur.to_rows();
        let free = cur.complement_indices();
        let mut best: Option<Subspace> = None;
        for coeffs in all_vectors(p, free.len()) {
            if coeffs.iter().find(|&&x| x != 0) != Some(&1) {
                continue;
            }
            let mut v = vec![0u8; dim];
            for (&i, &c) in free.iter().zip(&coeffs) {
                v[i] = c;
            }
            let mut seeds = base.clone();
            seeds.push(v);
            let ext = closure(p, dim, mats, &seeds);
            if best.as_ref().is_none_or(|b| ext.dim() < b.dim()) {
                let done = ext.dim() == cur.dim() + 1;
                best = Some(ext);
                if done {
                    break;
                }
            }
        }
        series.push(best.expect("a vector outside a proper subspace"));
    }
}

/// Radical of an algebra given by the images `rho(e_i)` of its basis in a
/// faithful representation on `F_p^dim`, as a subspace of coordinate space.
pub fn radical_of_rep(p: Prime, n: usize, rho: &[Matrix], dim: usize) -> Subspace {
    let series = composition_series(p, dim, rho);
    let mut rows: Vec<Vec<u8>> = Vec::new();
    for w in series.windows(2) {
        let (lower, upper) = (&w[0], &w[1]);
        let perp = lower.perp();
        for v in upper.basis_vectors() {
            let images: Vec<Vec<u8>> = rho.iter().map(|r| r.mul_vec(v)).collect();
            for u in perp.basis_vectors() {
                let row: Vec<u8> = images
                    .iter()
                    .map(|img| {
                        u.iter()
                            .zip(img)
                            .fold(0u8, |acc, (&a, &b)| p.add(acc, p.mul(a, b)))
                    })
                    .collect();
                rows.push(row);
            }
        }
    }
    nullspace(&Matrix::from_rows(p, n, &rows).expect("rows have the algebra dimension"))
}

/// `J(A)` through the left regular representation.
pub fn radical(a: &FiniteAlgebra) -> Subspace {
    let rho: Vec<Matrix> = (0..a.dim()).map(|i| a.left_mult(i)).collect();
    radical_of_rep(a.prime(), a.dim(), &rho, a.dim())
}

/// `J(End_R(M))` through the action of `End_R(M)` on `M`.
pub fn endo_radical(e: &EndoAlgebra) -> Subspace {
    radical_of_rep(
        e.algebra.prime(),
        e.algebra.dim(),
        e.rep.mats(),
        e.rep.source_dim(),
    )
}

/// Two-sided ideals: subspaces closed under left and right multiplication.
pub fn two_sided_ideals(a: &FiniteAlgebra, cap: usize) -> Result<Vec<Subspace>> {
    let mats: Vec<Matrix> = (0..a.dim())
        .flat_map(|i| [a.left_mult(i), a.right_mult(i)])
        .collect();
    invariant_subspaces(a.prime(), a.dim(), &mats, cap)
}

/// The center `{x : x e_j = e_j x for all j}`.
pub fn center(a: &FiniteAlgebra) -> Subspace {
    let (p, n) = (a.prime(), a.dim());
    let mut rows = Vec::new();
    for j in 0..n {
        for k in 0..n {
            rows.push(
                (0..n)
                    .map(|i| p.sub(a.constant(i, j, k), a.constant(j, i, k)))
                    .collect::<Vec<u8>>(),
            );
        }
    }
    nullspace(&Matrix::from_rows(p, n, &rows).expect("rows have the algebra dimension"))
}

/// Whether the center is a field: its regular module has no proper nonzero
/// submodule.
pub fn center_is_field(a: &FiniteAlgebra) -> Result<bool> {
    let z = center(a);
    let p = a.prime();
    let k = z.dim();
    let rho: Vec<Matrix> = z
        .basis_vectors()
        .map(|zi| {
            let mut m = Matrix::zeros(p, k, k);
            for (col, zj) in z.basis_vectors().enumerate() {
                let coords = z
                    .coordinates(&a.mul(zi, zj))
                    .expect("the center is a subalgebra");
                for (row, c) in coords.into_iter().enumerate() {
                    m.set(row, col, c);
                }
            }
            m
        })
        .collect();
    match invariant_subspaces(p, k, &rho, 2) {
        Ok(lattice) => Ok(lattice.len() == 2),
        Err(crate::error::Error::LatticeCap { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

fn left_mult_of(a: &FiniteAlgebra, x: &[u8]) -> Matrix {
    let mats: Vec<Matrix> = (0..a.dim()).map(|i| a.left_mult(i)).collect();
    Matrix::combination(a.prime(), a.dim(), a.dim(), &mats, x)
}

/// `For all x != 0 there is a with x a x != 0`, by enumeration. `None` when
/// the algebra is too large.
pub fn semiprime_oracle(a: &FiniteAlgebra, limit: u64) -> Option<bool> {
    let size = a.prime().count(a.dim())?;
    if size > limit {
        return None;
    }
    Some(
        all_vectors(a.prime(), a.dim())
            .filter(|x| x.iter().any(|&c| c != 0))
            .all(|x| {
                (0..a.dim()).any(|i| {
                    a.mul(&a.mul(&x, &a.basis_element(i)), &x)
                        .iter()
                        .any(|&c| c != 0)
                })
            }),
    )
}

/// `For all x, y != 0 there is a with x a y != 0`, by enumerating `x` and
/// solving for the `y` with `x A y = 0`.
pub fn prime_oracle(a: &FiniteAlgebra, limit: u64) -> Option<bool> {
    let size = a.prime().count(a.dim())?;
    if size > limit {
        return None;
    }
    Some(
        all_vectors(a.prime(), a.dim())
            .filter(|x| x.iter().any(|&c| c != 0))
            .all(|x| {
                let stacked = (0..a.dim())
                    .map(|i| left_mult_of(a, &a.mul(&x, &a.basis_element(i))))
                    .fold(Matrix::zeros(a.prime(), 0, a.dim()), |acc, m| acc.stack(&m));
                nullspace(&stacked).is_zero()
            }),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingVerdict {
    pub radical: Subspace,
    pub semiprime: bool,
    pub prime: bool,
    /// The two-sided ideal lattice, when small enough to enumerate.
    pub ideals: Option<Vec<Subspace>>,
    pub semiprime_oracle: Option<bool>,
    pub prime_oracle: Option<bool>,
}

impl RingVerdict {
    /// The elementwise oracles agree wherever they ran.
    pub fn oracles_agree(&self) -> bool {
        self.semiprime_oracle.is_none_or(|o| o == self.semiprime)
            && self.prime_oracle.is_none_or(|o| o == self.prime)
    }
}

fn verdict(a: &FiniteAlgebra, radical: Subspace, oracle_limit: u64) -> Result<RingVerdict> {
    let semiprime = radical.is_zero();
    let small = a
        .prime()
        .count(a.dim())
        .is_some_and(|n| n <= IDEAL_SCAN_LIMIT.min(oracle_limit));
    let ideals = if small {
        two_sided_ideals(a, DEFAULT_LATTICE_CAP).ok()
    } else {
        None
    };
    let prime = semiprime
        && match &ideals {
            Some(ideals) => ideals.len() == 2,
            None => center_is_field(a)?,
        };
    Ok(RingVerdict {
        radical,
        semiprime,
        prime,
        ideals,
        semiprime_oracle: semiprime_oracle(a, oracle_limit),
        prime_oracle: prime_oracle(a, oracle_limit),
    })
}

pub fn ring_verdict(a: &FiniteAlgebra) -> Result<RingVerdict> {
    verdict(a, radical(a), ORACLE_LIMIT)
}

/// [`ring_verdict`] with the elementwise oracles and the ideal enumeration
/// capped at `oracle_limit` elements.
pub fn ring_verdict_with(a: &FiniteAlgebra, oracle_limit: u64) -> Result<RingVerdict> {
    verdict(a, radical(a), oracle_limit)
}

/// Coordinates in `A/I` of an element of `A`, on the standard basis vectors
/// outside the pivots of `I`.
fn reducer(ideal: &Subspace) -> impl Fn(Vec<u8>) -> Vec<u8> + '_ {
    let p = ideal.prime();
    let keep = ideal.complement_indices();
    let pivots = ideal.pivot_columns();
    move |mut x: Vec<u8>| {
        for (row, &c) in ideal.basis().row_iter().zip(&pivots) {
            let coeff = x[c];
            if coeff != 0 {
                for (xi, &r) in x.iter_mut().zip(row) {
                    *xi = p.sub(*xi, p.mul(coeff, r));
                }
            }
        }
        keep.iter().map(|&i| x[i]).collect()
    }
}

/// `A/I` for a two-sided ideal `I`, on the standard basis vectors outside
/// the pivots of `I`. The caller guarantees that `I` is two-sided.
pub fn quotient_algebra(a: &FiniteAlgebra, ideal: &Subspace) -> Result<FiniteAlgebra> {
    let p = a.prime();
    let keep = ideal.complement_indices();
    let reduce = reducer(ideal);
    let mut triples = Vec::new();
    for (bi, &i) in keep.iter().enumerate() {
        for (bj, &j) in keep.iter().enumerate() {
            let prod = reduce(a.mul(&a.basis_element(i), &a.basis_element(j)));
            triples.extend(
                prod.into_iter()
                    .enumerate()
                    .filter(|(_, c)| *c != 0)
                    .map(|(k, c)| (bi, bj, k, c)),
            );
        }
    }
    let labels = keep.iter().map(|&i| a.labels()[i].clone()).collect();
    FiniteAlgebra::from_triples(
        format!("{}/I", a.name()),
        p,
        labels,
        &triples,
        reduce(a.unit().to_vec()),
        a.is_commutative_flagged(),
    )
}

/// Verdict on `A/I` given `J(A)`, using `J(A/I) = (J(A) + I)/I`.
pub fn quotient_verdict(
    a: &FiniteAlgebra,
    radical_a: &Subspace,
    ideal: &Subspace,
    oracle_limit: u64,
) -> Result<RingVerdict> {
    let q = quotient_algebra(a, ideal)?;
    let reduce = reducer(ideal);
    let images: Vec<Vec<u8>> = radical_a
        .basis_vectors()
        .map(|v| reduce(v.to_vec()))
        .collect();
    verdict(
        &q,
        Subspace::span(a.prime(), q.dim(), &images),
        oracle_limit,
    )
}

/// Verdict on `End_R(M)`, running the elementwise oracles only up to
/// `oracle_limit` elements.
pub fn endo_verdict(e: &EndoAlgebra, oracle_limit: u64) -> Result<RingVerdict> {
    verdict(&e.algebra, endo_radical(e), oracle_limit)
}

pub fn is_semiprime_ring(a: &FiniteAlgebra) -> bool {
    radical(a).is_zero()
}

pub fn is_prime_ring(a: &FiniteAlgebra) -> Result<bool> {
    Ok(ring_verdict(a)?.prime)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algmod::catalog;
    use crate::homlab::endo_algebra;

    /// Elements `x` with `x^k = 0` for some `k`, by enumeration.
    fn nilpotents(a: &FiniteAlgebra) -> Vec<Vec<u8>> {
        all_vectors(a.prime(), a.dim())
            .filter(|x| {
                let mut cur = x.clone();
                for _ in 0..=a.dim() {
                    if cur.iter().all(|&c| c == 0) {
                        return true;
                    }
                    cur = a.mul(&cur, x);
                }
                false
            })
            .collect()
    }

    #[test]
    fn radicals() {
        assert!(radical(&catalog::ring_f2()).is_zero());
        assert!(radical(&catalog::ring_m2f2()).is_zero());
        assert!(radical(&catalog::ring_f2f2()).is_zero());
        assert_eq!(radical(&catalog::ring_tz2()).dim(), 2);
        assert_eq!(radical(&catalog::ring_dn()).dim(), 1);
        assert_eq!(radical(&catalog::ring_ut2()).to_rows(), vec![vec![0, 1, 0]]);
        let e = endo_algebra(&catalog::mod_es());
        let j = endo_radical(&e);
        assert_eq!(j.dim(), 2);
        // local algebra: the radical is exactly the set of nilpotents
        let nil = nilpotents(&e.algebra);
        assert_eq!(nil.len(), 4);
        for x in &nil {
            assert!(j.contains(x).unwrap());
        }
        assert_eq!(radical(&e.algebra), j);
    }

    #[test]
    fn radical_is_a_nilpotent_ideal_without_idempotents() {
        let mut algebras: Vec<FiniteAlgebra> = catalog::all_rings();
        for fm in catalog::all_fixture_modules() {
            algebras.push((*endo_algebra(&fm.module).algebra).clone());
        }
        for a in &algebras {
            let j = radical(a);
            for x in j.basis_vectors() {
                for i in 0..a.dim() {
                    let e = a.basis_element(i);
                    assert!(
                        j.contains(&a.mul(x, &e)).unwrap() && j.contains(&a.mul(&e, x)).unwrap()
                    );
                }
            }
            let nil = nilpotents(a);
            for x in j.elements() {
                assert!(nil.contains(&x), "{}", a.name());
                let nonzero = x.iter().any(|&c| c != 0);
                assert!(
                    !nonzero || a.mul(&x, &x) != x,
                    "idempotent in radical of {}",
                    a.name()
                );
            }
        }
    }

    #[test]
    fn regular_and_faithful_routes_agree() {
        for fm in catalog::all_fixture_modules() {
            let e = endo_algebra(&fm.module);
            assert_eq!(
                radical(&e.algebra),
                endo_radical(&e),
                "{}",
                fm.module.name()
            );
        }
    }

    #[test]
    fn ideal_lattices() {
        assert_eq!(
            two_sided_ideals(&catalog::ring_f2f2(), 64).unwrap().len(),
            4
        );
        assert_eq!(
            two_sided_ideals(&catalog::ring_m2f2(), 64).unwrap().len(),
            2
        );
        assert_eq!(two_sided_ideals(&catalog::ring_tz2(), 64).unwrap().len(), 6);
    }

    #[test]
    fn verdict_examples() {
        let a2 = ring_verdict(&endo_algebra(&catalog::mod_a2()).algebra).unwrap();
        assert!(a2.semiprime && !a2.prime);
        let es = endo_verdict(&endo_algebra(&catalog::mod_es()), ORACLE_LIMIT).unwrap();
        assert!(!es.semiprime && !es.prime);
        let m2 = ring_verdict(&catalog::ring_m2f2()).unwrap();
        assert!(m2.semiprime && m2.prime);
        assert!(center_is_field(&catalog::ring_m2f2()).unwrap());
        assert!(!center_is_field(&catalog::ring_f2f2()).unwrap());
    }

    #[test]
    fn oracles_agree_on_fixtures() {
        let mut algebras: Vec<FiniteAlgebra> = catalog::all_rings();
        for fm in catalog::all_fixture_modules() {
            algebras.push((*endo_algebra(&fm.module).algebra).clone());
        }
        for a in &algebras {
            let v = ring_verdict(a).unwrap();
            assert!(v.semiprime_oracle.is_some() && v.prime_oracle.is_some());
            assert!(v.oracles_agree(), "{}: {v:?}", a.name());
            if v.semiprime {
                assert_eq!(v.prime, center_is_field(a).unwrap(), "{}", a.name());
            }
        }
    }

    /// `I` is semiprime (prime) as an ideal of `A`: for `x, y` outside `I`
    /// some basis element `a` has `x a x` (`x a y`) outside `I`.
    fn ideal_oracle(a: &FiniteAlgebra, i: &Subspace) -> (bool, bool) {
        let outside: Vec<Vec<u8>> = all_vectors(a.prime(), a.dim())
            .filter(|x| !i.contains(x).unwrap())
            .collect();
        let escapes = |x: &[u8], y: &[u8]| {
            (0..a.dim()).any(|k| {
                !i.contains(&a.mul(&a.mul(x, &a.basis_element(k)), y))
                    .unwrap()
            })
        };
        let semiprime = outside.iter().all(|x| escapes(x, x));
        let prime = outside
            .iter()
            .all(|x| outside.iter().all(|y| escapes(x, y)));
        (semiprime, prime)
    }

    #[test]
    fn quotient_algebras_match_the_ideal_oracle() {
        let mut algebras: Vec<FiniteAlgebra> = catalog::all_rings();
        algebras.push((*endo_algebra(&catalog::mod_es()).algebra).clone());
        for a in &algebras {
            let rad = radical(a);
            for i in two_sided_ideals(a, DEFAULT_LATTICE_CAP).unwrap() {
                if i.is_full() {
                    continue;
                }
                let q = quotient_algebra(a, &i).unwrap();
                q.validate().unwrap();
                assert_eq!(q.dim(), a.dim() - i.dim());
                let v = ring_verdict(&q).unwrap();
                assert_eq!(
                    (v.semiprime, v.prime),
                    ideal_oracle(a, &i),
                    "{} / {:?}",
                    a.name(),
                    i.to_rows()
                );
                let lifted = quotient_verdict(a, &rad, &i, ORACLE_LIMIT).unwrap();
                assert_eq!(lifted.radical, v.radical);
                assert_eq!((lifted.semiprime, lifted.prime), (v.semiprime, v.prime));
            }
        }
    }
}
