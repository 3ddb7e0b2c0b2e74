//! Dense exact linear algebra: row reduction, solving, kernels, subspaces and
//! determinants over a [`FieldSpec`].

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::scalar::{FieldSpec, Scalar};

/// `2^61 - 1`.
const SCREEN_PRIME: u64 = (1 << 61) - 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
}

/// A dense `rows x cols` matrix, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, field, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::DimensionMismatch { expected: cols, got: row.len() });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: n, cols, field, data })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<Scalar>]) -> Result<Self, LinalgError> {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(LinalgError::DimensionMismatch { expected: rows, got: col.len() });
            }
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        Ok(m)
    }

    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect();
        Self::from_rows(field, cols, rows).expect("ragged integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, got: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(self.field.zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn mul_mat(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if other.rows != self.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, got: other.rows });
        }
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = &out[(i, j)] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Reduced row echelon form, with rank and pivot columns.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inverse().expect("pivot is nonzero");
            for j in c..m.cols {
                m[(r, j)] = &m[(r, j)] * &inv;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        if !m[(r, j)].is_zero() {
                            m[(i, j)] = &m[(i, j)] - &(&f * &m[(r, j)]);
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { rank: pivots.len(), matrix: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        Subspace::span(self.field, self.cols, self.row_vectors().iter().map(Vec::as_slice)).dim()
    }

    /// Some `x` with `self * x = b`, free variables set to zero; `None` when
    /// the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.rows, got: b.len() });
        }
        let mut aug = Self::zeros(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let red = aug.rref();
        if red.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (r, &c) in red.pivots.iter().enumerate() {
            x[c] = red.matrix[(r, self.cols)].clone();
        }
        Ok(Some(x))
    }

    /// Null space `{x : self * x = 0}`.
    pub fn kernel(&self) -> Subspace {
        // The row space is built incrementally so tall stacked operators stay cheap.
        let rows = Subspace::span(self.field, self.cols, self.row_vectors().iter().map(Vec::as_slice));
        rows.annihilator()
    }

    /// Exact singularity test. Over the rationals a nonzero determinant
    /// modulo a large prime settles the common nonsingular case without
    /// rational elimination.
    pub fn is_singular(&self) -> Result<bool, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        if let Some(reduced) = self.reduce_mod(SCREEN_PRIME) {
            if !reduced.determinant()?.is_zero() {
                return Ok(false);
            }
        }
        Ok(self.determinant()?.is_zero())
    }

    // Image under Z_(p) -> F_p; `None` unless rational with denominators prime to `p`.
    fn reduce_mod(&self, p: u64) -> Option<Matrix> {
        let field = FieldSpec::prime(p).ok()?;
        let data = self
            .data
            .iter()
            .map(|s| {
                let q = s.as_rational()?;
                field.from_fraction(q.numer().clone(), q.denom().clone()).ok()
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Matrix { rows: self.rows, cols: self.cols, field, data })
    }

    pub fn determinant(&self) -> Result<Scalar, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = self.field.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(self.field.zero());
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det = &det * &pivot;
            let inv = pivot.inverse().expect("pivot is nonzero");
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] * &inv;
                for j in c..n {
                    if !m[(c, j)].is_zero() {
                        m[(i, j)] = &m[(i, j)] - &(&f * &m[(c, j)]);
                    }
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut aug = Self::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = self.field.one();
        }
        let red = aug.rref();
        if red.rank < n || red.pivots[n - 1] != n - 1 {
            return Err(LinalgError::Singular);
        }
        let mut inv = Self::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = red.matrix[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.row_vectors().serialize(serializer)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// A subspace of `F^n`, held as the nonzero rows of its reduced row echelon
/// basis. Two subspaces are equal exactly when these bases are identical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    field: FieldSpec,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace { ambient_dim, field, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        let id = Matrix::identity(field, ambient_dim);
        Subspace { ambient_dim, field, basis: id.row_vectors(), pivots: (0..ambient_dim).collect() }
    }

    /// The span of `vectors`. Panics if a vector has the wrong length.
    pub fn span<'a>(field: FieldSpec, ambient_dim: usize, vectors: impl IntoIterator<Item = &'a [Scalar]>) -> Self {
        let mut s = Self::zero(field, ambient_dim);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    /// Adds `v` to the spanning set, keeping the basis reduced. Returns
    /// whether the dimension grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "vector length does not match ambient dimension");
        let mut w = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !w[p].is_zero() {
                let f = w[p].clone();
                for (wj, rj) in w.iter_mut().zip(row) {
                    if !rj.is_zero() {
                        *wj = &*wj - &(&f * rj);
                    }
                }
            }
        }
        let Some(lead) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[lead].inverse().expect("leading entry is nonzero");
        for x in w.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for row in self.basis.iter_mut() {
            if !row[lead].is_zero() {
                let f = row[lead].clone();
                for (rj, wj) in row.iter_mut().zip(&w) {
                    if !wj.is_zero() {
                        *rj = &*rj - &(&f * wj);
                    }
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < lead);
        self.basis.insert(at, w);
        self.pivots.insert(at, lead);
        true
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(self.field, self.ambient_dim, self.basis.clone()).expect("basis rows have ambient length")
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is not in
    /// the subspace.
    pub fn span_membership(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinalgError> {
        if v.len() != self.ambient_dim {
            return Err(LinalgError::DimensionMismatch { expected: self.ambient_dim, got: v.len() });
        }
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = vec![self.field.zero(); self.ambient_dim];
        for (c, row) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (acc, r) in rebuilt.iter_mut().zip(row) {
                if !r.is_zero() {
                    *acc = &*acc + &(c * r);
                }
            }
        }
        Ok((rebuilt.as_slice() == v).then_some(coords))
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        matches!(self.span_membership(v), Ok(Some(_)))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|b| other.contains(b))
    }

    /// The subspace spanned by both.
    pub fn join(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for b in &other.basis {
            s.insert(b);
        }
        s
    }

    /// Solutions `x` of `b . x = 0` for every basis row `b`.
    pub fn annihilator(&self) -> Subspace {
        let free: Vec<usize> = (0..self.ambient_dim).filter(|c| !self.pivots.contains(c)).collect();
        let mut k = Subspace::zero(self.field, self.ambient_dim);
        for &f in &free {
            let mut x = vec![self.field.zero(); self.ambient_dim];
            x[f] = self.field.one();
            for (row, &p) in self.basis.iter().zip(&self.pivots) {
                x[p] = -&row[f];
            }
            k.insert(&x);
        }
        k
    }
}

impl Serialize for Subspace {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("Subspace", 3)?;
        st.serialize_field("ambient_dim", &self.ambient_dim)?;
        st.serialize_field("dim", &self.dim())?;
        st.serialize_field("basis", &self.basis)?;
        st.end()
    }
}
