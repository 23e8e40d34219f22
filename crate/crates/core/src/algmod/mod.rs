//! Finite algebras given by structure constants, and their left modules
//! given by one action matrix per algebra basis element.
//!
//! Module vectors are columns: the basis element `e_i` sends `v` to
//! `action[i] * v`. Submodules are canonical subspaces closed under every
//! action matrix.

use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fplin::{Matrix, Prime, Subspace};

pub mod catalog;
pub mod random;

/// A finite-dimensional unital associative algebra over F_p.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteAlgebra {
    name: String,
    p: Prime,
    labels: Vec<String>,
    /// `consts[(i*n + j)*n + k]` is the coefficient of `e_k` in `e_i e_j`.
    consts: Vec<u8>,
    unit: Vec<u8>,
    commutative: bool,
}

impl fmt::Debug for FiniteAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FiniteAlgebra({}, F{}, dim {})",
            self.name,
            self.p.get(),
            self.dim()
        )
    }
}

impl FiniteAlgebra {
    /// Builds an algebra from sparse structure constants `(i, j, k, value)`.
    /// Nothing is checked here; call [`FiniteAlgebra::validate`].
    pub fn from_triples(
        name: impl Into<String>,
        p: Prime,
        labels: Vec<String>,
        triples: &[(usize, usize, usize, u8)],
        unit: Vec<u8>,
        commutative: bool,
    ) -> Result<Self> {
        let name = name.into();
        let n = labels.len();
        let bad = |detail: String| Error::InvalidAlgebra {
            algebra: name.clone(),
            detail,
        };
        if unit.len() != n {
            return Err(bad(format!(
                "unit has length {} but dimension is {n}",
                unit.len()
            )));
        }
        let mut consts = vec![0u8; n * n * n];
        for &(i, j, k, v) in triples {
            if i >= n || j >= n || k >= n {
                return Err(bad(format!(
                    "structure constant index ({i},{j},{k}) out of range"
                )));
            }
            let slot = &mut consts[(i * n + j) * n + k];
            *slot = p.add(*slot, v % p.get());
        }
        let unit = unit.into_iter().map(|x| x % p.get()).collect();
        Ok(FiniteAlgebra {
            name,
            p,
            labels,
            consts,
            unit,
            commutative,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[u8] {
        &self.unit
    }

    pub fn is_commutative_flagged(&self) -> bool {
        self.commutative
    }

    #[inline]
    pub fn constant(&self, i: usize, j: usize, k: usize) -> u8 {
        let n = self.dim();
        self.consts[(i * n + j) * n + k]
    }

    /// Nonzero structure constants as `(i, j, k, value)`.
    pub fn triples(&self) -> Vec<(usize, usize, usize, u8)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = self.constant(i, j, k);
                    if c != 0 {
                        out.push((i, j, k, c));
                    }
                }
            }
        }
        out
    }

    /// Product of two elements given in coordinates.
    pub fn mul(&self, x: &[u8], y: &[u8]) -> Vec<u8> {
        let (p, n) = (self.p, self.dim());
        let mut out = vec![0u8; n];
        for (i, &xi) in x.iter().enumerate().filter(|(_, &v)| v != 0) {
            for (j, &yj) in y.iter().enumerate().filter(|(_, &v)| v != 0) {
                let c = p.mul(xi, yj);
                for (k, o) in out.iter_mut().enumerate() {
                    *o = p.add(*o, p.mul(c, self.constant(i, j, k)));
                }
            }
        }
        out
    }

    pub fn basis_element(&self, i: usize) -> Vec<u8> {
        let mut v = vec![0u8; self.dim()];
        v[i] = 1;
        v
    }

    /// Matrix of `y -> e_i y` on coordinate columns.
    pub fn left_mult(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.p, self.dim(), self.dim(), |k, j| {
            self.constant(i, j, k)
        })
    }

    /// Matrix of `y -> y e_i` on coordinate columns.
    pub fn right_mult(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.p, self.dim(), self.dim(), |k, j| {
            self.constant(j, i, k)
        })
    }

    /// Checks associativity on all basis triples, the unit laws, and the
    /// commutativity flag when it is set. Reports the first violation.
    pub fn validate(&self) -> Result<()> {
        let n = self.dim();
        let bad = |detail: String| {
            Err(Error::InvalidAlgebra {
                algebra: self.name.clone(),
                detail,
            })
        };
        if n == 0 {
            return bad("dimension must be positive".into());
        }
        for i in 0..n {
            let ei = self.basis_element(i);
            for j in 0..n {
                let ej = self.basis_element(j);
                let eij = self.mul(&ei, &ej);
                for k in 0..n {
                    let ek = self.basis_element(k);
                    if self.mul(&eij, &ek) != self.mul(&ei, &self.mul(&ej, &ek)) {
                        return bad(format!(
                            "associativity fails on ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        ));
                    }
                }
            }
        }
        for i in 0..n {
            let ei = self.basis_element(i);
            if self.mul(&self.unit, &ei) != ei || self.mul(&ei, &self.unit) != ei {
                return bad(format!(
                    "unit is not a two-sided identity on {}",
                    self.labels[i]
                ));
            }
        }
        if self.commutative {
            for i in 0..n {
                for j in i + 1..n {
                    let (ei, ej) = (self.basis_element(i), self.basis_element(j));
                    if self.mul(&ei, &ej) != self.mul(&ej, &ei) {
                        return bad(format!(
                            "flagged commutative but {}*{} != {}*{}",
                            self.labels[i], self.labels[j], self.labels[j], self.labels[i]
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Returns true when all basis elements commute, regardless of the flag.
    pub fn commutes(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                let (ei, ej) = (self.basis_element(i), self.basis_element(j));
                self.mul(&ei, &ej) == self.mul(&ej, &ei)
            })
        })
    }
}

/// A finite left module over a [`FiniteAlgebra`].
#[derive(Clone, PartialEq, Eq)]
pub struct ModulePresentation {
    name: String,
    algebra: Arc<FiniteAlgebra>,
    dim: usize,
    action: Vec<Matrix>,
}

impl fmt::Debug for ModulePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Module({}, dim {} over {})",
            self.name, self.dim, self.algebra.name
        )
    }
}

impl ModulePresentation {
    /// Nothing is checked here; call [`ModulePresentation::validate`].
    pub fn new(
        name: impl Into<String>,
        algebra: Arc<FiniteAlgebra>,
        dim: usize,
        action: Vec<Matrix>,
    ) -> Self {
        ModulePresentation {
            name: name.into(),
            algebra,
            dim,
            action,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn algebra(&self) -> &Arc<FiniteAlgebra> {
        &self.algebra
    }

    pub fn prime(&self) -> Prime {
        self.algebra.prime()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    /// Action matrix of an arbitrary algebra element.
    pub fn action_of(&self, x: &[u8]) -> Matrix {
        Matrix::combination(self.prime(), self.dim, self.dim, &self.action, x)
    }

    pub fn same_algebra(&self, other: &ModulePresentation) -> Result<()> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) || *self.algebra == *other.algebra {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn zero_submodule(&self) -> Submodule {
        Submodule(Subspace::zero(self.prime(), self.dim))
    }

    pub fn whole(&self) -> Submodule {
        Submodule(Subspace::full(self.prime(), self.dim))
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    /// Checks shapes, that the unit acts as the identity, and the module law
    /// `A(e_i) A(e_j) = sum_k c_ijk A(e_k)` on all basis pairs.
    pub fn validate(&self) -> Result<()> {
        let bad = |detail: String| {
            Err(Error::InvalidModule {
                module: self.name.clone(),
                detail,
            })
        };
        let n = self.algebra.dim();
        if self.action.len() != n {
            return bad(format!(
                "{} action matrices for an algebra of dimension {n}",
                self.action.len()
            ));
        }
        for (i, a) in self.action.iter().enumerate() {
            if a.rows() != self.dim || a.cols() != self.dim {
                return bad(format!(
                    "action matrix {i} is {}x{}, expected {}x{}",
                    a.rows(),
                    a.cols(),
                    self.dim,
                    self.dim
                ));
            }
            if a.prime() != self.prime() {
                return bad(format!("action matrix {i} is over the wrong field"));
            }
        }
        if self.action_of(self.algebra.unit()) != Matrix::identity(self.prime(), self.dim) {
            return bad("the unit does not act as the identity".into());
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = self.action[i].mul(&self.action[j]);
                let rhs = self.action_of(&self.algebra.mul(
                    &self.algebra.basis_element(i),
                    &self.algebra.basis_element(j),
                ));
                if lhs != rhs {
                    let l = self.algebra.labels();
                    return bad(format!("module law fails on pair ({}, {})", l[i], l[j]));
                }
            }
        }
        Ok(())
    }

    pub fn is_action_closed(&self, s: &Subspace) -> bool {
        s.ambient() == self.dim
            && self.action.iter().all(|a| {
                s.basis_vectors()
                    .all(|v| s.coordinates(&a.mul_vec(v)).is_some())
            })
    }

    pub fn submodule(&self, space: Subspace) -> Result<Submodule> {
        if space.prime() != self.prime() || space.ambient() != self.dim {
            return Err(Error::NotSubmodule);
        }
        if !self.is_action_closed(&space) {
            return Err(Error::NotSubmodule);
        }
        Ok(Submodule(space))
    }

    pub fn submodule_from_rows<R: AsRef<[u8]>>(&self, rows: &[R]) -> Result<Submodule> {
        if rows.iter().any(|r| r.as_ref().len() != self.dim) {
            return Err(Error::NotSubmodule);
        }
        self.submodule(Subspace::span(self.prime(), self.dim, rows))
    }

    /// Conjugates every action matrix by an invertible change of basis `q`.
    /// Returns the new presentation; `q` maps old coordinates to new ones.
    pub fn change_basis(&self, q: &Matrix) -> Option<ModulePresentation> {
        let q_inv = q.inverse()?;
        Some(ModulePresentation {
            name: self.name.clone(),
            algebra: self.algebra.clone(),
            dim: self.dim,
            action: self.action.iter().map(|a| a.conjugate(q, &q_inv)).collect(),
        })
    }
}

/// An action-closed subspace of a module.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Submodule(Subspace);

impl fmt::Debug for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Submodule{:?}", self.0.to_rows())
    }
}

impl Deref for Submodule {
    type Target = Subspace;
    fn deref(&self) -> &Subspace {
        &self.0
    }
}

impl Submodule {
    /// Wraps a subspace the caller knows to be action-closed.
    pub(crate) fn trusted(space: Subspace) -> Self {
        Submodule(space)
    }

    pub fn space(&self) -> &Subspace {
        &self.0
    }

    pub fn into_space(self) -> Subspace {
        self.0
    }

    pub fn leq(&self, other: &Submodule) -> bool {
        self.0.is_subspace_of(&other.0)
    }

    pub fn join(&self, other: &Submodule) -> Submodule {
        Submodule(self.0.sum(&other.0).expect("submodules of one module"))
    }

    pub fn meet(&self, other: &Submodule) -> Submodule {
        Submodule(
            self.0
                .intersect(&other.0)
                .expect("submodules of one module"),
        )
    }
}

/// The left regular module `A` over itself.
pub fn regular_module(a: &Arc<FiniteAlgebra>) -> ModulePresentation {
    let action = (0..a.dim()).map(|i| a.left_mult(i)).collect();
    ModulePresentation::new(format!("reg({})", a.name()), a.clone(), a.dim(), action)
}

/// Linear dual with transposed action. Only a left module when the algebra
/// is commutative.
pub fn matlis_dual(m: &ModulePresentation) -> Result<ModulePresentation> {
    let a = m.algebra();
    if !a.is_commutative_flagged() || !a.commutes() {
        return Err(Error::NotCommutative(a.name().to_string()));
    }
    let action = m.action().iter().map(Matrix::transpose).collect();
    Ok(ModulePresentation::new(
        format!("dual({})", m.name()),
        a.clone(),
        m.dim(),
        action,
    ))
}

/// Block-diagonal direct sum.
pub fn direct_sum(ms: &[&ModulePresentation]) -> Result<ModulePresentation> {
    let first = ms.first().ok_or_else(|| Error::InvalidModule {
        module: "direct sum".into(),
        detail: "empty list of summands".into(),
    })?;
    for m in ms {
        first.same_algebra(m)?;
    }
    let a = first.algebra().clone();
    let p = a.prime();
    let dim: usize = ms.iter().map(|m| m.dim()).sum();
    let action = (0..a.dim())
        .map(|i| {
            let mut out = Matrix::zeros(p, dim, dim);
            let mut off = 0;
            for m in ms {
                let blk = &m.action()[i];
                for r in 0..m.dim() {
                    for c in 0..m.dim() {
                        out.set(off + r, off + c, blk.get(r, c));
                    }
                }
                off += m.dim();
            }
            out
        })
        .collect();
    let name = ms.iter().map(|m| m.name()).collect::<Vec<_>>().join("+");
    Ok(ModulePresentation::new(format!("({name})"), a, dim, action))
}

/// Reduces `v` modulo `s`, returning the coordinates on `s`'s complement indices.
fn project_vector(s: &Subspace, complement: &[usize], v: &[u8]) -> Vec<u8> {
    let p = s.prime();
    let mut rest = v.to_vec();
    for row in s.basis_vectors() {
        let pc = row
            .iter()
            .position(|&x| x != 0)
            .expect("canonical rows are nonzero");
        let c = rest[pc];
        if c != 0 {
            for (r, &b) in rest.iter_mut().zip(row) {
                *r = p.sub(*r, p.mul(c, b));
            }
        }
    }
    complement.iter().map(|&c| rest[c]).collect()
}

/// `M/S` on the standard-basis complement of the pivots of `S`, with the
/// projection matrix `M -> M/S`.
pub fn quotient(m: &ModulePresentation, s: &Submodule) -> Result<(ModulePresentation, Matrix)> {
    if s.ambient() != m.dim() || !m.is_action_closed(s) {
        return Err(Error::NotSubmodule);
    }
    let p = m.prime();
    let comp = s.complement_indices();
    let q = comp.len();
    let mut proj = Matrix::zeros(p, q, m.dim());
    for j in 0..m.dim() {
        let mut e = vec![0u8; m.dim()];
        e[j] = 1;
        for (i, x) in project_vector(s, &comp, &e).into_iter().enumerate() {
            proj.set(i, j, x);
        }
    }
    let action = m
        .action()
        .iter()
        .map(|a| {
            let mut out = Matrix::zeros(p, q, q);
            for (col, &c) in comp.iter().enumerate() {
                let img = a.column(c);
                for (row, x) in proj.mul_vec(&img).into_iter().enumerate() {
                    out.set(row, col, x);
                }
            }
            out
        })
        .collect();
    let qm = ModulePresentation::new(
        format!("{}/{}", m.name(), s.dim()),
        m.algebra().clone(),
        q,
        action,
    );
    Ok((qm, proj))
}

/// A submodule as a module in its own right (on its canonical basis), with
/// the inclusion matrix.
pub fn carve(m: &ModulePresentation, s: &Submodule) -> Result<(ModulePresentation, Matrix)> {
    if s.ambient() != m.dim() || !m.is_action_closed(s) {
        return Err(Error::NotSubmodule);
    }
    let p = m.prime();
    let k = s.dim();
    let incl = s.basis().transpose();
    let action = m
        .action()
        .iter()
        .map(|a| {
            let mut out = Matrix::zeros(p, k, k);
            for (col, b) in s.basis_vectors().enumerate() {
                let coords = s
                    .coordinates(&a.mul_vec(b))
                    .expect("submodule is action-closed");
                for (row, x) in coords.into_iter().enumerate() {
                    out.set(row, col, x);
                }
            }
            out
        })
        .collect();
    let cm = ModulePresentation::new(
        format!("{}|{}", m.name(), k),
        m.algebra().clone(),
        k,
        action,
    );
    Ok((cm, incl))
}

/// The zero module over an algebra.
pub fn zero_module(a: &Arc<FiniteAlgebra>) -> ModulePresentation {
    let action = (0..a.dim())
        .map(|_| Matrix::zeros(a.prime(), 0, 0))
        .collect();
    ModulePresentation::new("zero", a.clone(), 0, action)
}

#[cfg(test)]
mod tests {
    use super::catalog;
    use super::*;

    #[test]
    fn fixture_algebras_validate() {
        for a in catalog::all_rings() {
            a.validate().unwrap_or_else(|e| panic!("{}: {e}", a.name()));
        }
        let f2 = catalog::ring_f2();
        f2.validate().unwrap();
        assert_eq!(f2.dim(), 1);
    }

    fn tamper(extra: (usize, usize, usize, u8)) -> FiniteAlgebra {
        let r = catalog::ring_tz2();
        let mut triples = r.triples();
        triples.push(extra);
        FiniteAlgebra::from_triples(
            "tampered",
            r.prime(),
            r.labels().to_vec(),
            &triples,
            r.unit().to_vec(),
            true,
        )
        .unwrap()
    }

    #[test]
    fn tampered_tz2_tables() {
        // a*a = b turns the table into F_2[x]/(x^3) with b = x^2, which is
        // still associative and commutative
        tamper((1, 1, 2, 1)).validate().unwrap();
        // a*b = a while b*a = 0
        let err = tamper((1, 2, 1, 1)).validate().unwrap_err();
        assert!(matches!(err, Error::InvalidAlgebra { .. }), "{err}");
        assert!(err.to_string().contains("associativity"), "{err}");
    }

    #[test]
    fn modules_validate() {
        for fx in catalog::all_fixtures() {
            for fm in &fx.modules {
                fm.module.validate().unwrap_or_else(|e| panic!("{e}"));
            }
        }
    }

    #[test]
    fn unit_must_act_as_identity() {
        let r = Arc::new(catalog::ring_tz2());
        let mut m = regular_module(&r);
        m.action[0] = Matrix::zeros(r.prime(), 3, 3);
        assert!(matches!(m.validate(), Err(Error::InvalidModule { .. })));
    }

    #[test]
    fn mod_es_is_dual_of_regular() {
        let es = catalog::mod_es();
        let a = &es.action()[1];
        let b = &es.action()[2];
        let p = es.prime();
        let e01 = Matrix::from_rows(p, 3, &[[0, 1, 0], [0, 0, 0], [0, 0, 0]]).unwrap();
        let e02 = Matrix::from_rows(p, 3, &[[0, 0, 1], [0, 0, 0], [0, 0, 0]]).unwrap();
        assert_eq!(a, &e01);
        assert_eq!(b, &e02);
        es.validate().unwrap();
    }

    #[test]
    fn matlis_dual_rejects_noncommutative() {
        let ut = Arc::new(catalog::ring_ut2());
        assert!(matches!(
            matlis_dual(&regular_module(&ut)),
            Err(Error::NotCommutative(_))
        ));
    }

    #[test]
    fn quotient_of_mod_es_by_socle_has_trivial_action() {
        let es = catalog::mod_es();
        let s = es.submodule_from_rows(&[[1, 0, 0]]).unwrap();
        let (q, proj) = quotient(&es, &s).unwrap();
        q.validate().unwrap();
        assert_eq!(q.dim(), 2);
        assert!(q.action()[1].is_zero() && q.action()[2].is_zero());
        assert_eq!((proj.rows(), proj.cols()), (2, 3));
        assert_eq!(proj.mul_vec(&[1, 0, 0]), vec![0, 0]);
    }

    #[test]
    fn carve_restricts_action() {
        let es = catalog::mod_es();
        let k = es.submodule_from_rows(&[[1, 0, 0], [0, 1, 0]]).unwrap();
        let (km, incl) = carve(&es, &k).unwrap();
        km.validate().unwrap();
        assert_eq!(km.dim(), 2);
        // a f1 = f0 on the carved basis (f0, f1); b acts as zero
        assert_eq!(km.action()[1].to_rows(), vec![vec![0, 1], vec![0, 0]]);
        assert!(km.action()[2].is_zero());
        assert_eq!(incl.mul_vec(&[0, 1]), vec![0, 1, 0]);
    }

    #[test]
    fn carve_and_quotient_reject_non_submodules() {
        let es = catalog::mod_es();
        assert!(es.submodule_from_rows(&[[0, 1, 0]]).is_err());
        let fake = Submodule::trusted(Subspace::span(es.prime(), 3, &[[0, 1, 0]]));
        assert!(carve(&es, &fake).is_err());
        assert!(quotient(&es, &fake).is_err());
    }

    #[test]
    fn direct_sum_of_simples() {
        let s = catalog::simple_tz2();
        let ss = direct_sum(&[&s, &s]).unwrap();
        ss.validate().unwrap();
        assert_eq!(ss.dim(), 2);
        let other = catalog::simple_dn();
        assert_eq!(
            direct_sum(&[&s, &other]).unwrap_err(),
            Error::AlgebraMismatch
        );
    }
}
