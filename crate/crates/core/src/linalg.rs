//! Dense real linear algebra.
//!
//! A small row-major [`Matrix`] type plus the handful of decompositions the
//! homology pipelines need: rank, orthonormal left null spaces,
//! Moore–Penrose inverses, symmetric spectra and the elimination routines
//! used to isolate dying harmonic generators. SVD and symmetric eigen
//! solves are delegated to `nalgebra`; everything else is local.
//!
//! Conventions for degenerate shapes are total: an empty or zero matrix has
//! rank 0, the left null space of an `m × 0` matrix is the `m × m` identity
//! (and `0 × 0` for `m = 0`), and a `0 × 0` matrix has no eigenvalues.

use std::ops::{Index, IndexMut};

use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Numerical cutoffs shared by every rank and zero test.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    /// Singular values at or below `rank_tol_factor · max(rows, cols) · σ_max` count as zero.
    pub rank_tol_factor: f64,
    /// Eigenvalues with `|λ| ≤ zero_eig_tol` are reported as exactly zero.
    pub zero_eig_tol: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { rank_tol_factor: 1e-12, zero_eig_tol: 1e-8 }
    }
}

impl Tolerance {
    pub fn new(rank_tol_factor: f64, zero_eig_tol: f64) -> Result<Self> {
        let ok = |x: f64| x.is_finite() && x > 0.0;
        if !ok(rank_tol_factor) || !ok(zero_eig_tol) {
            return Err(Error::input("tolerances must be finite and strictly positive"));
        }
        Ok(Tolerance { rank_tol_factor, zero_eig_tol })
    }

    fn rank_cutoff(&self, rows: usize, cols: usize, sigma_max: f64) -> f64 {
        self.rank_tol_factor * rows.max(cols) as f64 * sigma_max
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    /// Builds a matrix from row-major entries, rejecting NaN/Inf.
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::input(format!(
                "matrix {rows}x{cols} needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        if data.iter().any(|x| !x.is_finite()) {
            return Err(Error::input("matrix has non-finite entries"));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    /// Panics on ragged input; intended for literals and tests.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.as_ref().len(), cols, "ragged rows");
            data.extend_from_slice(r.as_ref());
        }
        Matrix { rows: rows.len(), cols, data }
    }

    /// Empty `rows × 0` or `0 × cols` matrices are allowed.
    pub fn from_row_vecs(rows: Vec<Vec<f64>>, cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r);
        }
        Matrix { rows: n, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<f64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn matmul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matmul shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                let rrow = rhs.row(k);
                let orow = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (o, b) in orow.iter_mut().zip(rrow) {
                    *o += a * b;
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "add shape mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "sub shape mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// `[self | rhs]`.
    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows, "hstack row mismatch");
        let cols = self.cols + rhs.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(rhs.row(i));
        }
        Matrix { rows: self.rows, cols, data }
    }

    /// `[self ; rhs]`.
    pub fn vstack(&self, rhs: &Matrix) -> Matrix {
        // a 0-row operand adopts the other's width
        if self.rows == 0 {
            return rhs.clone();
        }
        if rhs.rows == 0 {
            return self.clone();
        }
        assert_eq!(self.cols, rhs.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Matrix { rows: self.rows + rhs.rows, cols: self.cols, data }
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.rows, idx.len());
        for i in 0..self.rows {
            for (k, &j) in idx.iter().enumerate() {
                out[(i, k)] = self[(i, j)];
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Matrix { rows: idx.len(), cols: self.cols, data }
    }

    /// Appends `extra` zero columns on the right.
    pub fn pad_columns(&self, extra: usize) -> Matrix {
        self.hstack(&Matrix::zeros(self.rows, extra))
    }

    pub fn scale(&self, s: f64) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn trace(&self) -> f64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    fn to_na(&self) -> DMatrix<f64> {
        DMatrix::from_row_slice(self.rows, self.cols, &self.data)
    }

    fn from_na(m: &DMatrix<f64>) -> Matrix {
        let (rows, cols) = m.shape();
        let mut out = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out[(i, j)] = m[(i, j)];
            }
        }
        out
    }

    fn ensure_finite(&self) -> Result<()> {
        if self.data.iter().all(|x| x.is_finite()) {
            Ok(())
        } else {
            Err(Error::input("matrix has non-finite entries"))
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// Singular values in descending order.
pub fn singular_values(m: &Matrix) -> Vec<f64> {
    if m.is_empty() {
        return Vec::new();
    }
    let mut s: Vec<f64> = m.to_na().singular_values().iter().copied().collect();
    s.sort_by(|a, b| b.total_cmp(a));
    s
}

pub fn rank(m: &Matrix, tol: &Tolerance) -> Result<usize> {
    rank_with_scale(m, tol, 0.0)
}

/// Rank with the cutoff measured against `max(σ_max, scale)`; pass the norm of
/// the factors when `m` is a product that may be pure rounding noise.
pub fn rank_with_scale(m: &Matrix, tol: &Tolerance, scale: f64) -> Result<usize> {
    m.ensure_finite()?;
    let s = singular_values(m);
    let Some(&smax) = s.first() else { return Ok(0) };
    if smax == 0.0 {
        return Ok(0);
    }
    let cutoff = tol.rank_cutoff(m.rows, m.cols, smax.max(scale));
    Ok(s.iter().filter(|&&x| x > cutoff).count())
}

/// Full SVD pieces, sorted by descending singular value: `(U, σ, Vᵀ)` with
/// `U` square `rows × rows`. Columns are zero-padded so that the thin
/// decomposition already yields every left singular vector.
fn full_left_svd(m: &Matrix) -> (Matrix, Vec<f64>) {
    let rows = m.rows;
    let padded = if m.cols < rows { m.pad_columns(rows - m.cols) } else { m.clone() };
    let svd = padded.to_na().svd(true, false);
    let u = svd.u.expect("U requested");
    let sv: Vec<f64> = svd.singular_values.iter().copied().collect();
    let mut order: Vec<usize> = (0..sv.len()).collect();
    order.sort_by(|&a, &b| sv[b].total_cmp(&sv[a]));
    let mut u_sorted = Matrix::zeros(rows, rows);
    for (k, &src) in order.iter().enumerate() {
        for i in 0..rows {
            u_sorted[(i, k)] = u[(i, src)];
        }
    }
    (u_sorted, order.iter().map(|&k| sv[k]).collect())
}

/// Orthonormal rows spanning `{x : x·m = 0}`; row count is `rows(m) − rank(m)`.
pub fn left_null_space(m: &Matrix, tol: &Tolerance) -> Result<Matrix> {
    m.ensure_finite()?;
    let rows = m.rows;
    if rows == 0 {
        return Ok(Matrix::zeros(0, 0));
    }
    if m.cols == 0 || m.max_abs() == 0.0 {
        return Ok(Matrix::identity(rows));
    }
    let (u, sv) = full_left_svd(m);
    let cutoff = tol.rank_cutoff(m.rows, m.cols, sv[0]);
    let r = sv.iter().filter(|&&x| x > cutoff).count();
    let idx: Vec<usize> = (r..rows).collect();
    Ok(u.select_columns(&idx).transpose())
}

/// Orthonormal rows spanning the row space of `m`.
pub fn row_space_basis(m: &Matrix, tol: &Tolerance) -> Result<Matrix> {
    row_space_basis_above(m, tol, 0.0)
}

/// As [`row_space_basis`], additionally discarding directions whose singular
/// value is at or below the absolute `floor`.
pub fn row_space_basis_above(m: &Matrix, tol: &Tolerance, floor: f64) -> Result<Matrix> {
    m.ensure_finite()?;
    if m.is_empty() || m.max_abs() == 0.0 {
        return Ok(Matrix::zeros(0, m.cols));
    }
    // row space of m = column space of mᵀ
    let (u, sv) = full_left_svd(&m.transpose());
    let cutoff = tol.rank_cutoff(m.rows, m.cols, sv[0]).max(floor);
    let r = sv.iter().filter(|&&x| x > cutoff).count();
    let idx: Vec<usize> = (0..r).collect();
    Ok(u.select_columns(&idx).transpose())
}

/// Moore–Penrose inverse with the default rank cutoff.
pub fn pseudo_inverse(m: &Matrix) -> Result<Matrix> {
    pseudo_inverse_with(m, &Tolerance::default())
}

pub fn pseudo_inverse_with(m: &Matrix, tol: &Tolerance) -> Result<Matrix> {
    m.ensure_finite()?;
    if m.is_empty() || m.max_abs() == 0.0 {
        return Ok(Matrix::zeros(m.cols, m.rows));
    }
    let svd = m.to_na().svd(true, true);
    let smax = svd.singular_values.iter().fold(0.0f64, |a, &b| a.max(b));
    let cutoff = tol.rank_cutoff(m.rows, m.cols, smax);
    let u = svd.u.as_ref().expect("U requested");
    let vt = svd.v_t.as_ref().expect("Vt requested");
    // m⁺ = V Σ⁺ Uᵀ
    let mut out = DMatrix::<f64>::zeros(m.cols, m.rows);
    for (k, &s) in svd.singular_values.iter().enumerate() {
        if s <= cutoff {
            continue;
        }
        let vk = vt.row(k).transpose();
        let uk = u.column(k);
        out += (vk * uk.transpose()) / s;
    }
    Ok(Matrix::from_na(&out))
}

/// Ascending eigenvalues of a symmetric matrix, with near-zero values
/// snapped to exactly `0.0`.
pub fn symmetric_eigenvalues(m: &Matrix, tol: &Tolerance) -> Result<Vec<f64>> {
    m.ensure_finite()?;
    if m.rows != m.cols {
        return Err(Error::input(format!("eigenvalues need a square matrix, got {}x{}", m.rows, m.cols)));
    }
    let n = m.rows;
    if n == 0 {
        return Ok(Vec::new());
    }
    let scale = m.max_abs().max(1.0);
    for i in 0..n {
        for j in (i + 1)..n {
            if (m[(i, j)] - m[(j, i)]).abs() > tol.zero_eig_tol * scale {
                return Err(Error::input(format!("matrix is not symmetric at ({i}, {j})")));
            }
        }
    }
    let sym = m.add(&m.transpose()).scale(0.5);
    let eig = SymmetricEigen::new(sym.to_na());
    let mut vals: Vec<f64> =
        eig.eigenvalues.iter().map(|&x| if x.abs() <= tol.zero_eig_tol { 0.0 } else { x }).collect();
    vals.sort_by(f64::total_cmp);
    Ok(vals)
}

/// Orthonormal rows spanning the eigenspace of `|λ| ≤ zero_eig_tol` of a
/// symmetric matrix.
pub fn symmetric_kernel(m: &Matrix, tol: &Tolerance) -> Result<Matrix> {
    symmetric_eigenvalues(m, tol)?;
    let n = m.rows;
    if n == 0 {
        return Ok(Matrix::zeros(0, 0));
    }
    let sym = m.add(&m.transpose()).scale(0.5);
    let eig = SymmetricEigen::new(sym.to_na());
    let mut rows = Vec::new();
    for (k, &lambda) in eig.eigenvalues.iter().enumerate() {
        if lambda.abs() <= tol.zero_eig_tol {
            rows.push(eig.eigenvectors.column(k).iter().copied().collect::<Vec<f64>>());
        }
    }
    Ok(Matrix::from_row_vecs(rows, n))
}

fn negligible(x: f64, scale: f64) -> bool {
    x.abs() <= 1e-12 * scale
}

/// Unpivoted Gaussian elimination `m = L·U`.
///
/// `L` is unit lower triangular and records the elimination factors, `U`
/// is the eliminated matrix (`L⁻¹·m = U`). A zero pivot with nonzero
/// entries below it yields [`Error::ZeroPivot`].
pub fn triangular_eliminate(m: &Matrix) -> Result<(Matrix, Matrix)> {
    m.ensure_finite()?;
    let (rows, cols) = m.shape();
    let scale = m.max_abs().max(f64::MIN_POSITIVE);
    let mut l = Matrix::identity(rows);
    let mut u = m.clone();
    for j in 0..cols.min(rows) {
        let pivot = u[(j, j)];
        let below_nonzero = ((j + 1)..rows).any(|i| !negligible(u[(i, j)], scale));
        if negligible(pivot, scale) {
            if below_nonzero {
                return Err(Error::ZeroPivot { column: j });
            }
            continue;
        }
        for i in (j + 1)..rows {
            let factor = u[(i, j)] / pivot;
            if factor == 0.0 {
                continue;
            }
            l[(i, j)] = factor;
            for k in j..cols {
                let v = u[(j, k)];
                u[(i, k)] -= factor * v;
            }
            u[(i, j)] = 0.0;
        }
    }
    Ok((l, u))
}

/// Inverse of a square lower-triangular matrix by forward substitution.
pub fn lower_triangular_inverse(m: &Matrix) -> Result<Matrix> {
    m.ensure_finite()?;
    let n = m.rows;
    if m.cols != n {
        return Err(Error::input("lower_triangular_inverse needs a square matrix"));
    }
    let scale = m.max_abs().max(f64::MIN_POSITIVE);
    for i in 0..n {
        for j in (i + 1)..n {
            if !negligible(m[(i, j)], scale) {
                return Err(Error::input(format!("matrix is not lower triangular at ({i}, {j})")));
            }
        }
        if negligible(m[(i, i)], scale) {
            return Err(Error::Singular);
        }
    }
    let mut inv = Matrix::zeros(n, n);
    for k in 0..n {
        for i in 0..n {
            let mut acc = if i == k { 1.0 } else { 0.0 };
            for j in 0..i {
                acc -= m[(i, j)] * inv[(j, k)];
            }
            inv[(i, k)] = acc / m[(i, i)];
        }
    }
    Ok(inv)
}

/// Row-echelon form by Gaussian elimination with partial pivoting.
pub fn pivoted_row_echelon(m: &Matrix) -> Matrix {
    pivoted_row_echelon_with_transform(m).1
}

/// Same as [`pivoted_row_echelon`], also returning the invertible `T` with
/// `T·m = E`.
pub fn pivoted_row_echelon_with_transform(m: &Matrix) -> (Matrix, Matrix) {
    let (rows, cols) = m.shape();
    let scale = m.max_abs().max(f64::MIN_POSITIVE);
    let mut e = m.clone();
    let mut t = Matrix::identity(rows);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let (best, best_val) =
            (r..rows).map(|i| (i, e[(i, c)].abs())).fold((r, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if negligible(best_val, scale) {
            for i in r..rows {
                e[(i, c)] = 0.0;
            }
            continue;
        }
        swap_rows(&mut e, r, best);
        swap_rows(&mut t, r, best);
        for i in (r + 1)..rows {
            let factor = e[(i, c)] / e[(r, c)];
            if factor == 0.0 {
                continue;
            }
            for k in c..cols {
                let v = e[(r, k)];
                e[(i, k)] -= factor * v;
            }
            e[(i, c)] = 0.0;
            for k in 0..rows {
                let v = t[(r, k)];
                t[(i, k)] -= factor * v;
            }
        }
        r += 1;
    }
    (t, e)
}

fn swap_rows(m: &mut Matrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for k in 0..m.cols {
        m.data.swap(a * m.cols + k, b * m.cols + k);
    }
}

/// Orthonormal basis of the row space of `m` in a canonical form that
/// depends only on the subspace: Gram–Schmidt over the projections of the
/// coordinate axes, taken in column order. The first nonzero coefficient of
/// every returned row is positive.
pub fn canonical_row_basis(m: &Matrix, tol: &Tolerance) -> Result<Matrix> {
    canonical_row_basis_above(m, tol, 0.0)
}

/// [`canonical_row_basis`] of the directions with singular value above `floor`.
pub fn canonical_row_basis_above(m: &Matrix, tol: &Tolerance, floor: f64) -> Result<Matrix> {
    let q = row_space_basis_above(m, tol, floor)?;
    let k = q.rows;
    let n = q.cols;
    if k == 0 {
        return Ok(Matrix::zeros(0, n));
    }
    // projector onto the subspace
    let proj = q.transpose().matmul(&q);
    let mut threshold = 1e-6;
    loop {
        let mut picked: Vec<Vec<f64>> = Vec::with_capacity(k);
        for j in 0..n {
            if picked.len() == k {
                break;
            }
            let mut v: Vec<f64> = (0..n).map(|i| proj[(i, j)]).collect();
            for _ in 0..2 {
                for p in &picked {
                    let d: f64 = p.iter().zip(&v).map(|(a, b)| a * b).sum();
                    for (x, y) in v.iter_mut().zip(p) {
                        *x -= d * y;
                    }
                }
            }
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm > threshold {
                v.iter_mut().for_each(|x| *x /= norm);
                picked.push(v);
            }
        }
        if picked.len() == k || threshold < 1e-13 {
            let mut out = Matrix::from_row_vecs(picked, n);
            clean_small(&mut out);
            return Ok(out);
        }
        threshold *= 1e-3;
    }
}

fn clean_small(m: &mut Matrix) {
    for x in m.data.iter_mut() {
        if x.abs() < 1e-14 {
            *x = 0.0;
        }
    }
}

/// Orthogonal projection of each row of `m` onto the row space of the
/// orthonormal-row matrix `onto`.
pub fn project_rows(m: &Matrix, onto: &Matrix) -> Matrix {
    if onto.rows == 0 {
        return Matrix::zeros(m.rows, m.cols);
    }
    m.matmul(&onto.transpose()).matmul(onto)
}
