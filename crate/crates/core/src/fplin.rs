//! Exact dense linear algebra over a prime field F_p.
//!
//! Entries are stored as bytes, so `p < 256`. Row reduction over F_2 packs
//! rows into 64-bit words and eliminates with XOR; every other prime uses the
//! byte path. Subspaces are always kept in reduced row-echelon form with the
//! zero rows dropped, which makes structural equality coincide with equality
//! of the underlying sets of vectors.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinError {
    #[error("{0} is not a prime below 256")]
    NotPrime(u32),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimMismatch { expected: usize, found: usize },
    #[error("field mismatch: F_{0} vs F_{1}")]
    FieldMismatch(u8, u8),
}

/// A prime modulus together with its arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Prime(u8);

impl TryFrom<u32> for Prime {
    type Error = LinError;
    fn try_from(p: u32) -> Result<Self, LinError> {
        Prime::new(p)
    }
}

impl From<Prime> for u32 {
    fn from(p: Prime) -> u32 {
        p.0 as u32
    }
}

impl Prime {
    pub const TWO: Prime = Prime(2);

    pub fn new(p: u32) -> Result<Self, LinError> {
        if !(2..256).contains(&p)
            || (2..p)
                .take_while(|d| d * d <= p)
                .any(|d| p.is_multiple_of(d))
        {
            return Err(LinError::NotPrime(p));
        }
        Ok(Prime(p as u8))
    }

    #[inline]
    pub fn get(self) -> u8 {
        self.0
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        ((a as u16 + b as u16) % self.0 as u16) as u8
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        ((a as u16 + self.0 as u16 - b as u16) % self.0 as u16) as u8
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % self.0 as u16) as u8
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    /// Multiplicative inverse by Fermat; `a` must be nonzero.
    pub fn inv(self, a: u8) -> u8 {
        debug_assert!(!a.is_multiple_of(self.0));
        let mut result = 1u8;
        let mut base = a % self.0;
        let mut e = self.0 as u32 - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    pub fn reduce(self, v: i64) -> u8 {
        v.rem_euclid(self.0 as i64) as u8
    }

    /// Number of vectors in F_p^dim, if it fits in a u64.
    pub fn count(self, dim: usize) -> Option<u64> {
        (self.0 as u64).checked_pow(dim as u32)
    }
}

/// Dense row-major matrix over F_p.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    p: Prime,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.p.0)?;
        f.debug_list().entries(self.row_iter()).finish()
    }
}

impl Matrix {
    pub fn zeros(p: Prime, rows: usize, cols: usize) -> Self {
        Matrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: Prime, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from rows; entries are reduced mod p.
    pub fn from_rows<R: AsRef<[u8]>>(p: Prime, cols: usize, rows: &[R]) -> Result<Self, LinError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(LinError::DimMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r.iter().map(|&x| x % p.0));
        }
        Ok(Matrix {
            p,
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn from_fn(p: Prime, rows: usize, cols: usize, f: impl Fn(usize, usize) -> u8) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j) % p.0);
            }
        }
        Matrix {
            p,
            rows,
            cols,
            data,
        }
    }

    /// Unflattens a row-major coordinate vector.
    pub fn from_flat(p: Prime, rows: usize, cols: usize, flat: &[u8]) -> Self {
        assert_eq!(flat.len(), rows * cols);
        Matrix {
            p,
            rows,
            cols,
            data: flat.to_vec(),
        }
    }

    #[inline]
    pub fn prime(&self) -> Prime {
        self.p
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.data[i * self.cols + j] = v % self.p.0;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[u8]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        self.row_iter().map(<[u8]>::to_vec).collect()
    }

    pub fn column(&self, j: usize) -> Vec<u8> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    /// Row-major flattening, used to treat spaces of matrices as vector spaces.
    pub fn as_flat(&self) -> &[u8] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.p, self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        assert_eq!(self.p, other.p);
        let p = self.p;
        let mut out = Matrix::zeros(p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = p.add(out.data[idx], p.mul(a, other.get(k, j)));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(self.cols, v.len());
        let p = self.p;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0u8, |acc, (&a, &b)| p.add(acc, p.mul(a, b)))
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let p = self.p;
        Matrix {
            p,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| p.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.scale(self.p.neg(1)))
    }

    pub fn scale(&self, c: u8) -> Matrix {
        let p = self.p;
        Matrix {
            p,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| p.mul(a, c)).collect(),
        }
    }

    /// Linear combination `sum coeffs[i] * mats[i]`; all matrices share a shape.
    pub fn combination(
        p: Prime,
        rows: usize,
        cols: usize,
        mats: &[Matrix],
        coeffs: &[u8],
    ) -> Matrix {
        let mut out = Matrix::zeros(p, rows, cols);
        for (m, &c) in mats.iter().zip(coeffs) {
            if c == 0 {
                continue;
            }
            for (o, &x) in out.data.iter_mut().zip(&m.data) {
                *o = p.add(*o, p.mul(c, x));
            }
        }
        out
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            p: self.p,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn rank(&self) -> usize {
        rref(self).1
    }

    /// Conjugation `Q * self * Q^-1`; `q_inv` must be the inverse of `q`.
    pub fn conjugate(&self, q: &Matrix, q_inv: &Matrix) -> Matrix {
        q.mul(self).mul(q_inv)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Matrix::from_fn(self.p, n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j)
            } else if j - n == i {
                1
            } else {
                0
            }
        });
        let (r, _) = rref(&aug);
        if r.rows < n || (0..n).any(|i| r.get(i, i) != 1) {
            return None;
        }
        Some(Matrix::from_fn(self.p, n, n, |i, j| r.get(i, n + j)))
    }
}

/// Reduced row-echelon form with zero rows removed, and its rank.
pub fn rref(m: &Matrix) -> (Matrix, usize) {
    if m.p == Prime::TWO {
        rref_gf2(m)
    } else {
        rref_generic(m)
    }
}

fn rref_generic(m: &Matrix) -> (Matrix, usize) {
    let p = m.p;
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| a.get(r, c) != 0) else {
            continue;
        };
        if piv != rank {
            for j in 0..cols {
                a.data.swap(piv * cols + j, rank * cols + j);
            }
        }
        let inv = p.inv(a.get(rank, c));
        for j in 0..cols {
            let idx = rank * cols + j;
            a.data[idx] = p.mul(a.data[idx], inv);
        }
        for r in 0..rows {
            let f = a.get(r, c);
            if r == rank || f == 0 {
                continue;
            }
            for j in 0..cols {
                let sub = p.mul(f, a.get(rank, j));
                let idx = r * cols + j;
                a.data[idx] = p.sub(a.data[idx], sub);
            }
        }
        rank += 1;
    }
    a.data.truncate(rank * cols);
    a.rows = rank;
    (a, rank)
}

fn rref_gf2(m: &Matrix) -> (Matrix, usize) {
    let cols = m.cols;
    let words = cols.div_ceil(64).max(1);
    let mut rows: Vec<Vec<u64>> = m
        .row_iter()
        .map(|r| {
            let mut w = vec![0u64; words];
            for (j, &x) in r.iter().enumerate() {
                if x & 1 == 1 {
                    w[j / 64] |= 1 << (j % 64);
                }
            }
            w
        })
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows.len() {
            break;
        }
        let (wi, bit) = (c / 64, 1u64 << (c % 64));
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][wi] & bit != 0) else {
            continue;
        };
        rows.swap(piv, rank);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[wi] & bit != 0 {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    let mut data = Vec::with_capacity(rank * cols);
    for row in &rows[..rank] {
        data.extend((0..cols).map(|j| ((row[j / 64] >> (j % 64)) & 1) as u8));
    }
    (
        Matrix {
            p: m.p,
            rows: rank,
            cols,
            data,
        },
        rank,
    )
}

/// Pivot column of each row of a matrix already in RREF.
fn pivots(r: &Matrix) -> Vec<usize> {
    r.row_iter()
        .map(|row| {
            row.iter()
                .position(|&x| x != 0)
                .expect("rref rows are nonzero")
        })
        .collect()
}

/// Kernel `{v : m v = 0}` as a canonical subspace of F_p^cols.
pub fn nullspace(m: &Matrix) -> Subspace {
    let p = m.p;
    let (r, _) = rref(m);
    let piv = pivots(&r);
    let mut is_pivot = vec![false; m.cols];
    for &c in &piv {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in (0..m.cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0u8; m.cols];
        v[free] = 1;
        for (i, &pc) in piv.iter().enumerate() {
            v[pc] = p.neg(r.get(i, free));
        }
        basis.push(v);
    }
    Subspace::span(p, m.cols, &basis)
}

/// A subspace of F_p^ambient in canonical reduced row-echelon form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} in {}: {:?})",
            self.dim(),
            self.ambient,
            self.basis.to_rows()
        )
    }
}

/// The canonical basis as `[[1,0,0],[0,1,0]]`.
impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.basis_vectors().enumerate() {
            let entries: Vec<String> = row.iter().map(u8::to_string).collect();
            write!(
                f,
                "{}[{}]",
                if i == 0 { "" } else { "," },
                entries.join(",")
            )?;
        }
        write!(f, "]")
    }
}

/// Ordered by dimension, then lexicographically by canonical basis.
impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ambient
            .cmp(&other.ambient)
            .then(self.dim().cmp(&other.dim()))
            .then_with(|| self.basis.data.cmp(&other.basis.data))
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Subspace {
    pub fn zero(p: Prime, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(p, 0, ambient),
        }
    }

    pub fn full(p: Prime, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(p, ambient),
        }
    }

    pub fn span<V: AsRef<[u8]>>(p: Prime, ambient: usize, vectors: &[V]) -> Self {
        let m =
            Matrix::from_rows(p, ambient, vectors).expect("vector length equals ambient dimension");
        Self::row_space(&m)
    }

    pub fn row_space(m: &Matrix) -> Self {
        let (basis, _) = rref(m);
        Subspace {
            ambient: m.cols,
            basis,
        }
    }

    #[inline]
    pub fn prime(&self) -> Prime {
        self.basis.p
    }

    #[inline]
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[u8]> + '_ {
        self.basis.row_iter()
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        self.basis.to_rows()
    }

    fn check(&self, other: &Subspace) -> Result<(), LinError> {
        if self.prime() != other.prime() {
            return Err(LinError::FieldMismatch(self.prime().0, other.prime().0));
        }
        if self.ambient != other.ambient {
            return Err(LinError::DimMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinError> {
        self.check(other)?;
        Ok(Self::row_space(&self.basis.stack(&other.basis)))
    }

    /// Intersection via `(A^perp + B^perp)^perp`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinError> {
        self.check(other)?;
        if self.is_full() || other.is_zero() {
            return Ok(other.clone());
        }
        if other.is_full() || self.is_zero() {
            return Ok(self.clone());
        }
        let constraints = self.perp().basis.stack(&other.perp().basis);
        Ok(nullspace(&constraints))
    }

    /// Orthogonal complement under the standard dot product.
    pub fn perp(&self) -> Subspace {
        nullspace(&self.basis)
    }

    pub fn contains(&self, v: &[u8]) -> Result<bool, LinError> {
        if v.len() != self.ambient {
            return Err(LinError::DimMismatch {
                expected: self.ambient,
                found: v.len(),
            });
        }
        Ok(self.coordinates(v).is_some())
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[u8]) -> Option<Vec<u8>> {
        let p = self.prime();
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.dim());
        for row in self.basis.row_iter() {
            let pc = row
                .iter()
                .position(|&x| x != 0)
                .expect("canonical rows are nonzero");
            let c = rest[pc];
            coords.push(c);
            if c != 0 {
                for (r, &b) in rest.iter_mut().zip(row) {
                    *r = p.sub(*r, p.mul(c, b));
                }
            }
        }
        rest.iter().all(|&x| x == 0).then_some(coords)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient
            && self.dim() <= other.dim()
            && self.basis_vectors().all(|v| other.coordinates(v).is_some())
    }

    /// Image of the subspace under `m` acting on column vectors.
    pub fn image_under(&self, m: &Matrix) -> Subspace {
        let imgs: Vec<Vec<u8>> = self.basis_vectors().map(|v| m.mul_vec(v)).collect();
        Subspace::span(self.prime(), m.rows(), &imgs)
    }

    /// Pivot columns of the canonical basis.
    pub fn pivot_columns(&self) -> Vec<usize> {
        pivots(&self.basis)
    }

    /// Standard basis indices completing the pivots to a basis of the ambient space.
    pub fn complement_indices(&self) -> Vec<usize> {
        let piv = self.pivot_columns();
        (0..self.ambient).filter(|c| !piv.contains(c)).collect()
    }

    /// Every vector of the subspace, in lexicographic order of coordinates.
    pub fn elements(&self) -> impl Iterator<Item = Vec<u8>> + '_ {
        let p = self.prime();
        all_vectors(p, self.dim()).map(move |c| {
            let mut v = vec![0u8; self.ambient];
            for (row, &ci) in self.basis.row_iter().zip(&c) {
                if ci == 0 {
                    continue;
                }
                for (x, &b) in v.iter_mut().zip(row) {
                    *x = p.add(*x, p.mul(ci, b));
                }
            }
            v
        })
    }
}

/// All vectors of F_p^n in lexicographic order (last coordinate fastest).
pub fn all_vectors(p: Prime, n: usize) -> impl Iterator<Item = Vec<u8>> {
    let total = p.count(n).expect("vector space too large to enumerate");
    let q = p.get() as u64;
    (0..total).map(move |mut idx| {
        let mut v = vec![0u8; n];
        for i in (0..n).rev() {
            v[i] = (idx % q) as u8;
            idx /= q;
        }
        v
    })
}
