//! Chain bases and integer boundary blocks shared by every complex type.
//!
//! A cell is a vertex sequence: a simplex (strictly increasing), an
//! elementary path, or a directed hyperedge. Boundaries are taken by single
//! omission with sign `(-1)^i`, so one implementation serves all of them.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix, Tolerance};

pub type Cell = Vec<usize>;

/// Above this many dense entries, ranks go through the smaller Gram matrix.
const DENSE_RANK_LIMIT: usize = 2_000_000;

/// Single-omission faces with their signs; faces that coincide are summed
/// and cancelled pairs dropped.
pub fn faces(cell: &[usize]) -> Vec<(Cell, i32)> {
    if cell.len() <= 1 {
        return Vec::new();
    }
    let mut out: Vec<(Cell, i32)> = Vec::with_capacity(cell.len());
    for i in 0..cell.len() {
        let mut f = cell.to_vec();
        f.remove(i);
        let sign = if i % 2 == 0 { 1 } else { -1 };
        match out.iter_mut().find(|(g, _)| *g == f) {
            Some(slot) => slot.1 += sign,
            None => out.push((f, sign)),
        }
    }
    out.retain(|(_, s)| *s != 0);
    out
}

/// `d(d(cell))` with like terms collected; empty exactly when `d∘d` vanishes
/// on `cell`.
pub fn double_boundary(cell: &[usize]) -> Vec<(Cell, i32)> {
    let mut acc: Vec<(Cell, i32)> = Vec::new();
    for (f, s) in faces(cell) {
        for (g, t) in faces(&f) {
            match acc.iter_mut().find(|(h, _)| *h == g) {
                Some(slot) => slot.1 += s * t,
                None => acc.push((g, s * t)),
            }
        }
    }
    acc.retain(|(_, c)| *c != 0);
    acc
}

/// Sparse integer matrix stored by rows.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SparseBlock {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<(usize, i32)>>,
}

impl SparseBlock {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseBlock { rows, cols, entries: vec![Vec::new(); rows] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_entries(&self, i: usize) -> &[(usize, i32)] {
        &self.entries[i]
    }

    pub fn nnz(&self) -> usize {
        self.entries.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.rows, self.cols);
        for (i, row) in self.entries.iter().enumerate() {
            for &(j, v) in row {
                m[(i, j)] = v as f64;
            }
        }
        m
    }

    /// Integer product `self · rhs`, used to confirm `d∘d = 0` exactly.
    pub fn compose(&self, rhs: &SparseBlock) -> Vec<Vec<i64>> {
        assert_eq!(self.cols, rhs.rows, "compose shape mismatch");
        let mut out = vec![vec![0i64; rhs.cols]; self.rows];
        for (i, row) in self.entries.iter().enumerate() {
            for &(k, a) in row {
                for &(j, b) in &rhs.entries[k] {
                    out[i][j] += a as i64 * b as i64;
                }
            }
        }
        out
    }

    /// `B·Bᵀ` (rows × rows).
    pub fn outer_gram(&self) -> Matrix {
        let mut by_col: Vec<Vec<(usize, i32)>> = vec![Vec::new(); self.cols];
        for (i, row) in self.entries.iter().enumerate() {
            for &(j, v) in row {
                by_col[j].push((i, v));
            }
        }
        let mut g = Matrix::zeros(self.rows, self.rows);
        for col in &by_col {
            for &(a, va) in col {
                for &(b, vb) in col {
                    g[(a, b)] += (va * vb) as f64;
                }
            }
        }
        g
    }

    /// `Bᵀ·B` (cols × cols).
    pub fn inner_gram(&self) -> Matrix {
        let mut g = Matrix::zeros(self.cols, self.cols);
        for row in &self.entries {
            for &(a, va) in row {
                for &(b, vb) in row {
                    g[(a, b)] += (va * vb) as f64;
                }
            }
        }
        g
    }

    pub fn rank(&self, tol: &Tolerance) -> Result<usize> {
        if self.rows == 0 || self.cols == 0 || self.nnz() == 0 {
            return Ok(0);
        }
        if self.rows * self.cols <= DENSE_RANK_LIMIT {
            return linalg::rank(&self.to_dense(), tol);
        }
        let gram = if self.rows <= self.cols { self.outer_gram() } else { self.inner_gram() };
        let ev = linalg::symmetric_eigenvalues(&gram, tol)?;
        let top = ev.last().copied().unwrap_or(0.0).max(1.0);
        Ok(ev.iter().filter(|&&l| l > tol.zero_eig_tol * top).count())
    }
}

/// Per-dimension boundary matrices together with their bases.
///
/// `B_p` has one row per cell of `basis[p]` and one column per cell of
/// `ambient[p - 1]`. For simplicial complexes the two bases coincide; for
/// paths and directed hyperedges the ambient basis also holds faces that
/// are not themselves cells.
#[derive(Clone, Debug, Serialize)]
pub struct BoundaryBlocks {
    basis: Vec<Vec<Cell>>,
    ambient: Vec<Vec<Cell>>,
    blocks: Vec<SparseBlock>,
}

impl BoundaryBlocks {
    /// Builds `B_p` for each `p ≥ 1`. Every face of a cell of `basis[p]`
    /// must appear in `ambient[p - 1]`.
    pub fn build(basis: Vec<Vec<Cell>>, ambient: Vec<Vec<Cell>>) -> Result<Self> {
        if basis.len() != ambient.len() {
            return Err(Error::Internal("basis and ambient dimension counts differ".into()));
        }
        let mut blocks = Vec::with_capacity(basis.len());
        for p in 0..basis.len() {
            if p == 0 {
                blocks.push(SparseBlock::zeros(basis[0].len(), 0));
                continue;
            }
            let lookup: HashMap<&[usize], usize> =
                ambient[p - 1].iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect();
            let mut block = SparseBlock::zeros(basis[p].len(), ambient[p - 1].len());
            for (r, cell) in basis[p].iter().enumerate() {
                for (f, s) in faces(cell) {
                    let &c = lookup.get(f.as_slice()).ok_or_else(|| {
                        Error::Internal(format!("face {f:?} of {cell:?} missing from the ambient basis"))
                    })?;
                    block.entries[r].push((c, s));
                }
                block.entries[r].sort_unstable();
            }
            blocks.push(block);
        }
        Ok(BoundaryBlocks { basis, ambient, blocks })
    }

    /// Simplicial case: the ambient basis is the basis itself.
    pub fn simplicial(basis: Vec<Vec<Cell>>) -> Result<Self> {
        let ambient = basis.clone();
        Self::build(basis, ambient)
    }

    /// Number of dimensions stored (top dimension + 1).
    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self, p: usize) -> &[Cell] {
        self.basis.get(p).map_or(&[], Vec::as_slice)
    }

    pub fn ambient(&self, p: usize) -> &[Cell] {
        self.ambient.get(p).map_or(&[], Vec::as_slice)
    }

    pub fn count(&self, p: usize) -> usize {
        self.basis(p).len()
    }

    /// `B_p`; `None` for `p = 0` and for `p` past the top dimension.
    pub fn block(&self, p: usize) -> Option<&SparseBlock> {
        if p == 0 {
            None
        } else {
            self.blocks.get(p)
        }
    }

    pub fn dense(&self, p: usize) -> Matrix {
        match self.block(p) {
            Some(b) => b.to_dense(),
            None if p == 0 => Matrix::zeros(self.count(0), 0),
            None => Matrix::zeros(0, self.ambient(p - 1).len()),
        }
    }

    pub fn rank(&self, p: usize, tol: &Tolerance) -> Result<usize> {
        self.block(p).map_or(Ok(0), |b| b.rank(tol))
    }

    /// Cumulative cell-count offsets: `dim_index[p]` is where dimension `p`
    /// starts in the concatenated basis; the last entry is the total.
    pub fn dim_index(&self) -> Vec<usize> {
        let mut idx = vec![0];
        for b in &self.basis {
            idx.push(idx.last().unwrap() + b.len());
        }
        idx
    }
}
