//! Infimum chain complexes `Inf_p = {x ∈ D_p : d x ∈ D_{p-1}}`.
//!
//! `D_p` is spanned by a chosen set of cells (hyperedges, allowed paths,
//! directed hyperedges) inside an ambient basis that is closed under taking
//! faces. The same pipeline serves hypergraphs, digraphs and hyperdigraphs.

use std::collections::HashMap;

use serde::Serialize;

use crate::chain::{BoundaryBlocks, Cell};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix, Tolerance};
use crate::spectrum::SpectralReport;

/// One dimension of the infimum pipeline.
#[derive(Clone, Debug, Serialize)]
pub struct InfimumLevel {
    /// `B_p`: boundary of the `k_p` cells into the ambient `(p−1)`-basis.
    pub boundary: Matrix,
    /// Columns of `B_p` at the positions of the `(p−1)`-cells.
    pub indexed: Matrix,
    /// The remaining columns of `B_p`.
    pub rest: Matrix,
    /// `A_p`: orthonormal rows spanning the left null space of `rest`.
    pub basis: Matrix,
    /// Right inverse of `A_p`.
    pub basis_inverse: Matrix,
}

#[derive(Clone, Debug, Serialize)]
pub struct InfimumChainData {
    blocks: BoundaryBlocks,
    index: Vec<Vec<usize>>,
    levels: Vec<InfimumLevel>,
}

/// Positions of `members` inside `ambient`.
pub(crate) fn positions(members: &[Cell], ambient: &[Cell]) -> Result<Vec<usize>> {
    let lookup: HashMap<&[usize], usize> = ambient.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect();
    members
        .iter()
        .map(|m| {
            lookup
                .get(m.as_slice())
                .copied()
                .ok_or_else(|| Error::Internal(format!("{m:?} is missing from the ambient basis")))
        })
        .collect()
}

/// Splits the columns of `b` into `(b[:, idx], b[:, rest])`.
pub fn split_columns(b: &Matrix, idx: &[usize]) -> Result<(Matrix, Matrix)> {
    let mut keep = vec![false; b.cols()];
    for &j in idx {
        if j >= b.cols() {
            return Err(Error::input(format!("column index {j} out of range for {} columns", b.cols())));
        }
        if keep[j] {
            return Err(Error::input(format!("column index {j} repeated")));
        }
        keep[j] = true;
    }
    let rest: Vec<usize> = (0..b.cols()).filter(|&j| !keep[j]).collect();
    Ok((b.select_columns(idx), b.select_columns(&rest)))
}

fn orthonormal_inverse(a: &Matrix, tol: &Tolerance) -> Result<Matrix> {
    let t = a.transpose();
    let err = a.matmul(&t).sub(&Matrix::identity(a.rows())).max_abs();
    if err <= tol.zero_eig_tol {
        Ok(t)
    } else {
        linalg::pseudo_inverse_with(a, tol)
    }
}

impl InfimumChainData {
    /// `members[p]` must lie in `ambient[p]`, and every face of a member of
    /// dimension `p` must lie in `ambient[p − 1]`.
    pub fn new(members: Vec<Vec<Cell>>, ambient: Vec<Vec<Cell>>, tol: &Tolerance) -> Result<Self> {
        let index: Vec<Vec<usize>> =
            members.iter().zip(&ambient).map(|(m, a)| positions(m, a)).collect::<Result<_>>()?;
        let blocks = BoundaryBlocks::build(members, ambient)?;
        let mut levels = Vec::with_capacity(blocks.len());
        for p in 0..blocks.len() {
            let boundary = blocks.dense(p);
            let (indexed, rest) = if p == 0 {
                (Matrix::zeros(blocks.count(0), 0), Matrix::zeros(blocks.count(0), 0))
            } else {
                split_columns(&boundary, &index[p - 1])?
            };
            let basis =
                if rest.cols() == 0 { Matrix::identity(boundary.rows()) } else { linalg::left_null_space(&rest, tol)? };
            let basis_inverse = orthonormal_inverse(&basis, tol)?;
            levels.push(InfimumLevel { boundary, indexed, rest, basis, basis_inverse });
        }
        Ok(InfimumChainData { blocks, index, levels })
    }

    /// Number of dimensions (top dimension + 1).
    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn level(&self, p: usize) -> Option<&InfimumLevel> {
        self.levels.get(p)
    }

    pub fn blocks(&self) -> &BoundaryBlocks {
        &self.blocks
    }

    /// `I_p`: where the `p`-cells sit in the ambient `p`-basis.
    pub fn index(&self, p: usize) -> &[usize] {
        self.index.get(p).map_or(&[], Vec::as_slice)
    }

    /// Ambient `p`-basis size.
    pub fn l(&self, p: usize) -> usize {
        self.blocks.ambient(p).len()
    }

    /// Number of `p`-cells.
    pub fn k(&self, p: usize) -> usize {
        self.blocks.count(p)
    }

    /// `dim Inf_p`.
    pub fn r(&self, p: usize) -> usize {
        self.levels.get(p).map_or(0, |l| l.basis.rows())
    }

    /// `M_p = A_p B̃_p A_{p−1}⁻¹`, of shape `r_p × r_{p−1}`; `None` for `p = 0`
    /// or past the top dimension.
    pub fn infimum_boundary(&self, p: usize) -> Option<Matrix> {
        if p == 0 || p >= self.levels.len() {
            return None;
        }
        let cur = &self.levels[p];
        let prev = &self.levels[p - 1];
        Some(cur.basis.matmul(&cur.indexed).matmul(&prev.basis_inverse))
    }

    /// Replaces `A_p` by `q · A_p` for an orthogonal `q`.
    pub fn remix(&mut self, p: usize, q: &Matrix, tol: &Tolerance) -> Result<()> {
        let level = self.levels.get_mut(p).ok_or_else(|| Error::input(format!("dimension {p} out of range")))?;
        if q.shape() != (level.basis.rows(), level.basis.rows()) {
            return Err(Error::input("remix matrix has the wrong shape"));
        }
        level.basis = q.matmul(&level.basis);
        level.basis_inverse = orthonormal_inverse(&level.basis, tol)?;
        Ok(())
    }

    /// `r_p − rank M_p − rank M_{p+1}` for every stored dimension.
    pub fn betti_by_rank(&self, tol: &Tolerance) -> Result<Vec<usize>> {
        let mut ranks = vec![0usize; self.levels.len() + 1];
        for (p, slot) in ranks.iter_mut().enumerate() {
            if let Some(m) = self.infimum_boundary(p) {
                let scale = largest_singular_value(&self.levels[p].indexed)
                    * largest_singular_value(&self.levels[p - 1].basis_inverse);
                *slot = linalg::rank_with_scale(&m, tol, scale)?;
            }
        }
        (0..self.levels.len())
            .map(|p| {
                let r = self.r(p);
                r.checked_sub(ranks[p] + ranks[p + 1])
                    .ok_or_else(|| Error::Internal(format!("negative Betti number in dimension {p}")))
            })
            .collect()
    }

    /// `rank[E_p ; B_{p+1}] − rank B_{p+1} − rank B_p`, where `E_p` is the
    /// inclusion of the `p`-cells into the ambient `p`-basis.
    pub fn betti_by_stacking(&self, tol: &Tolerance) -> Result<Vec<usize>> {
        let n = self.levels.len();
        let ranks: Vec<usize> = (0..=n).map(|p| self.blocks.rank(p, tol)).collect::<Result<_>>()?;
        (0..n)
            .map(|p| {
                let l = self.l(p);
                let mut incl = Matrix::zeros(self.k(p), l);
                for (row, &j) in self.index(p).iter().enumerate() {
                    incl[(row, j)] = 1.0;
                }
                let up = if p + 1 < n { self.blocks.dense(p + 1) } else { Matrix::zeros(0, l) };
                let stacked = linalg::rank(&incl.vstack(&up), tol)?;
                stacked
                    .checked_sub(ranks[p] + ranks[p + 1])
                    .ok_or_else(|| Error::Internal(format!("negative Betti number in dimension {p}")))
            })
            .collect()
    }

    /// `L_p = M_p M_pᵀ + M_{p+1}ᵀ M_{p+1}` on `Inf_p`.
    pub fn laplacian(&self, p: usize) -> Result<Matrix> {
        if p >= self.levels.len() {
            return Err(Error::input(format!(
                "dimension {p} exceeds the top dimension {}",
                self.levels.len().saturating_sub(1)
            )));
        }
        let r = self.r(p);
        let mut l = Matrix::zeros(r, r);
        if let Some(m) = self.infimum_boundary(p) {
            l = l.add(&m.matmul(&m.transpose()));
        }
        if let Some(m) = self.infimum_boundary(p + 1) {
            l = l.add(&m.transpose().matmul(&m));
        }
        Ok(l)
    }

    pub fn spectral_report(&self, p: usize, tol: &Tolerance) -> Result<SpectralReport> {
        SpectralReport::of_matrix(p, &self.laplacian(p)?, tol)
    }
}

fn largest_singular_value(m: &Matrix) -> f64 {
    linalg::singular_values(m).first().copied().unwrap_or(0.0)
}

/// Groups cells by dimension (`len − 1`), sorting each group.
pub(crate) fn group_by_dim(cells: impl IntoIterator<Item = Cell>, dims: usize) -> Vec<Vec<Cell>> {
    let mut out: Vec<Vec<Cell>> = vec![Vec::new(); dims];
    for c in cells {
        let p = c.len() - 1;
        if p < dims {
            out[p].push(c);
        }
    }
    for g in &mut out {
        g.sort();
        g.dedup();
    }
    out
}

/// Ambient basis made of the members plus every face of every member.
pub(crate) fn reduced_ambient(members: &[Vec<Cell>]) -> Vec<Vec<Cell>> {
    let dims = members.len();
    let mut cells: Vec<Cell> = members.iter().flatten().cloned().collect();
    for group in members.iter().skip(1) {
        for c in group {
            cells.extend(crate::chain::faces(c).into_iter().map(|(f, _)| f));
        }
    }
    group_by_dim(cells, dims)
}
