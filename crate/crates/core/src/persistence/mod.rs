//! Rips filtrations, Betti and spectral-gap curves, persistent Laplacians
//! and tracking of harmonic generators across thresholds.

mod harmonic;

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::chain::{BoundaryBlocks, Cell};
use crate::complex::{self, hodge_laplacian, PointCloud, RipsParams, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix, Tolerance};
use crate::spectrum::{Gap, SpectralReport};

pub use harmonic::{
    harmonic_births, harmonic_births_by_elimination, harmonic_space, harmonic_transition, track_harmonics,
    HarmonicEvent, HarmonicTrack, TrackStep, Transition,
};

/// One threshold of a filtration.
#[derive(Clone, Debug, Serialize)]
pub struct FiltrationStep {
    pub threshold: f64,
    /// Canonically ordered complex.
    pub complex: SimplicialComplex,
    /// Per-dimension basis: simplices of earlier steps first, in their
    /// earlier order, then the new ones lexicographically.
    pub basis: Vec<Vec<Cell>>,
}

impl FiltrationStep {
    pub fn count(&self, p: usize) -> usize {
        self.basis.get(p).map_or(0, Vec::len)
    }

    pub fn basis(&self, p: usize) -> &[Cell] {
        self.basis.get(p).map_or(&[], Vec::as_slice)
    }

    pub fn boundary(&self) -> BoundaryBlocks {
        BoundaryBlocks::simplicial(self.basis.clone()).expect("Rips complexes are face-closed")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Filtration {
    cloud: PointCloud,
    params: RipsParams,
    steps: Vec<FiltrationStep>,
}

/// Rips complexes at each threshold with prefix-stable bases.
pub fn build_filtration(cloud: &PointCloud, thresholds: &[f64], max_dim: usize) -> Result<Filtration> {
    build_filtration_with(cloud, thresholds, RipsParams::new(max_dim))
}

pub fn build_filtration_with(cloud: &PointCloud, thresholds: &[f64], params: RipsParams) -> Result<Filtration> {
    for w in thresholds.windows(2) {
        if w[0].is_nan() || w[1].is_nan() || w[0] >= w[1] {
            return Err(Error::input(format!("thresholds must be strictly increasing ({} then {})", w[0], w[1])));
        }
    }
    let complexes =
        thresholds.iter().map(|&t| complex::rips_complex_with(cloud, t, params)).collect::<Result<Vec<_>>>()?;
    Ok(Filtration { cloud: cloud.clone(), params, steps: prefix_steps(thresholds, complexes) })
}

/// Filtration from explicitly given nested complexes.
pub fn filtration_from_complexes(thresholds: &[f64], complexes: Vec<SimplicialComplex>) -> Result<Filtration> {
    if thresholds.len() != complexes.len() {
        return Err(Error::input("one threshold per complex is required"));
    }
    for w in thresholds.windows(2) {
        if w[0].is_nan() || w[1].is_nan() || w[0] >= w[1] {
            return Err(Error::input(format!("thresholds must be strictly increasing ({} then {})", w[0], w[1])));
        }
    }
    for (i, w) in complexes.windows(2).enumerate() {
        if let Some(s) = w[0].simplices().iter().find(|s| !w[1].contains(s)) {
            return Err(Error::input(format!("simplex {s:?} of complex {i} is missing from complex {}", i + 1)));
        }
    }
    let max_dim = complexes.iter().filter_map(SimplicialComplex::dim).max().unwrap_or(0);
    let params = RipsParams::new(max_dim);
    Ok(Filtration { cloud: PointCloud::default(), params, steps: prefix_steps(thresholds, complexes) })
}

fn prefix_steps(thresholds: &[f64], complexes: Vec<SimplicialComplex>) -> Vec<FiltrationStep> {
    let mut steps: Vec<FiltrationStep> = Vec::with_capacity(thresholds.len());
    for (&t, complex) in thresholds.iter().zip(complexes) {
        let mut basis: Vec<Vec<Cell>> = steps.last().map(|s| s.basis.clone()).unwrap_or_default();
        let known: HashSet<&Cell> = basis.iter().flatten().collect();
        let fresh: Vec<Cell> = complex.simplices().iter().filter(|s| !known.contains(s)).cloned().collect();
        for s in fresh {
            let p = s.len() - 1;
            if basis.len() <= p {
                basis.resize(p + 1, Vec::new());
            }
            basis[p].push(s);
        }
        steps.push(FiltrationStep { threshold: t, complex, basis });
    }
    steps
}

impl Filtration {
    pub fn cloud(&self) -> &PointCloud {
        &self.cloud
    }

    pub fn max_dim(&self) -> usize {
        self.params.max_dim
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn thresholds(&self) -> Vec<f64> {
        self.steps.iter().map(|s| s.threshold).collect()
    }

    pub fn steps(&self) -> &[FiltrationStep] {
        &self.steps
    }

    pub fn step(&self, i: usize) -> &FiltrationStep {
        &self.steps[i]
    }

    /// Index of the step at threshold `t` (relative tolerance `1e-12`).
    pub fn index_of(&self, t: f64) -> Result<usize> {
        self.steps
            .iter()
            .position(|s| (s.threshold - t).abs() <= 1e-12 * s.threshold.abs().max(1.0))
            .ok_or_else(|| Error::input(format!("threshold {t} is not part of the filtration")))
    }

    fn pair(&self, a: f64, b: f64) -> Result<(usize, usize)> {
        if a > b {
            return Err(Error::input(format!("need a <= b, got a = {a}, b = {b}")));
        }
        Ok((self.index_of(a)?, self.index_of(b)?))
    }
}

fn check_p(f: &Filtration, p: usize) -> Result<()> {
    if p > f.max_dim() {
        return Err(Error::input(format!("dimension {p} exceeds the maximum dimension {}", f.max_dim())));
    }
    Ok(())
}

pub fn betti_curve(f: &Filtration, p: usize, tol: &Tolerance) -> Result<Vec<(f64, usize)>> {
    check_p(f, p)?;
    f.steps
        .par_iter()
        .map(|s| {
            let b = complex::betti_numbers(&s.complex, tol)?;
            Ok((s.threshold, b.get(p).copied().unwrap_or(0)))
        })
        .collect()
}

pub fn spectral_gap_curve(f: &Filtration, p: usize, tol: &Tolerance) -> Result<Vec<(f64, Gap)>> {
    check_p(f, p)?;
    f.steps
        .par_iter()
        .map(|s| {
            let bb = s.boundary();
            if bb.count(p) == 0 {
                return Ok((s.threshold, Gap::Empty));
            }
            let r = SpectralReport::of_matrix(p, &hodge_laplacian(&bb, p), tol)?;
            Ok((s.threshold, r.gap))
        })
        .collect()
}

/// Blocks of `B^b_p` relative to the basis split into simplices of `K_a`
/// (old) and the rest (new).
#[derive(Clone, Debug, Serialize)]
pub struct BlockBoundary {
    /// Old `p`-simplices against old `(p−1)`-simplices; this is `B^a_p`.
    pub old_old: Matrix,
    /// New `p`-simplices against old `(p−1)`-simplices.
    pub new_old: Matrix,
    /// New `p`-simplices against new `(p−1)`-simplices.
    pub new_new: Matrix,
}

pub fn block_boundary(f: &Filtration, a: f64, b: f64, p: usize) -> Result<BlockBoundary> {
    let (ia, ib) = f.pair(a, b)?;
    block_boundary_at(f, ia, ib, p)
}

pub(crate) fn block_boundary_at(f: &Filtration, ia: usize, ib: usize, p: usize) -> Result<BlockBoundary> {
    let (sa, sb) = (f.step(ia), f.step(ib));
    let old_rows = sa.count(p);
    let rows = sb.count(p);
    let old_cols = if p == 0 { 0 } else { sa.count(p - 1) };
    let cols = if p == 0 { 0 } else { sb.count(p - 1) };
    let full = if p == 0 { Matrix::zeros(rows, 0) } else { sb.boundary().dense(p) };
    let old_idx: Vec<usize> = (0..old_cols).collect();
    let new_idx: Vec<usize> = (old_cols..cols).collect();
    let old_row_idx: Vec<usize> = (0..old_rows).collect();
    let new_row_idx: Vec<usize> = (old_rows..rows).collect();
    let old_new = full.select_rows(&old_row_idx).select_columns(&new_idx);
    if old_new.max_abs() != 0.0 {
        return Err(Error::Internal("an old simplex has a new face".into()));
    }
    let old = full.select_columns(&old_idx);
    Ok(BlockBoundary {
        old_old: old.select_rows(&old_row_idx),
        new_old: old.select_rows(&new_row_idx),
        new_new: full.select_rows(&new_row_idx).select_columns(&new_idx),
    })
}

/// `Δ^{a,b}_p`: the down term of `K_a` plus the up term restricted to
/// `(p+1)`-chains of `K_b` whose boundary lies in `C_p(K_a)`.
pub fn persistent_laplacian(f: &Filtration, a: f64, b: f64, p: usize, tol: &Tolerance) -> Result<SpectralReport> {
    let (ia, ib) = f.pair(a, b)?;
    let l = persistent_laplacian_matrix(f, ia, ib, p, tol)?;
    SpectralReport::of_matrix(p, &l, tol)
}

pub(crate) fn persistent_laplacian_matrix(
    f: &Filtration,
    ia: usize,
    ib: usize,
    p: usize,
    tol: &Tolerance,
) -> Result<Matrix> {
    check_p(f, p)?;
    let sa = f.step(ia);
    let n = sa.count(p);
    let mut l = Matrix::zeros(n, n);
    if p >= 1 {
        if let Some(down) = sa.boundary().block(p) {
            l = l.add(&down.outer_gram());
        }
    }
    let up = block_boundary_at(f, ia, ib, p + 1)?;
    // chains on old (p+1)-simplices always qualify; new ones only in
    // combinations whose new-face part cancels
    l = l.add(&up.old_old.transpose().matmul(&up.old_old));
    if up.new_old.rows() > 0 {
        let z = linalg::left_null_space(&up.new_new, tol)?;
        let d = z.matmul(&up.new_old);
        l = l.add(&d.transpose().matmul(&d));
    }
    Ok(l)
}

/// Rank of `H_p(K_a) → H_p(K_b)`, as the kernel dimension of `Δ^{a,b}_p`.
pub fn persistent_betti(f: &Filtration, a: f64, b: f64, p: usize, tol: &Tolerance) -> Result<usize> {
    Ok(persistent_laplacian(f, a, b, p, tol)?.betti)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn two_square_cloud() -> PointCloud {
        PointCloud::new(vec![
            vec![0.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![1.0, 0.0, 0.0],
            vec![1.0, 1.0, 0.0],
            vec![0.0, 0.0, 2.0],
            vec![0.0, 1.0, 2.0],
            vec![1.0, 0.0, 2.0],
            vec![1.0, 1.0, 1.5],
        ])
        .unwrap()
    }

    /// Hollow triangle at `a = 1.5`, filled at `b = 2.5`.
    fn triangle() -> Filtration {
        let hollow = complex::canonicalize(&[[0, 1], [0, 2], [1, 2]]).unwrap();
        let filled = complex::canonicalize(&[[0, 1, 2]]).unwrap();
        filtration_from_complexes(&[1.5, 2.5], vec![hollow, filled]).unwrap()
    }

    fn hexagon() -> PointCloud {
        let pts = (0..6)
            .map(|i| {
                let a = std::f64::consts::PI / 3.0 * i as f64;
                vec![2.0 * a.cos(), 2.0 * a.sin()]
            })
            .collect();
        PointCloud::new(pts).unwrap()
    }

    #[test]
    fn two_square_filtration_sizes() {
        let f = build_filtration(&two_square_cloud(), &[1.1, 1.3], 2).unwrap();
        assert_eq!(f.step(0).complex.len(), 14);
        assert_eq!(f.step(1).complex.len(), 16);
        assert_eq!(&f.step(1).basis(1)[6..], &[vec![5, 7], vec![6, 7]]);
        assert_eq!(f.step(0).basis(1), &f.step(1).basis(1)[..6]);
    }

    #[test]
    fn rejects_non_monotone_thresholds() {
        assert!(build_filtration(&two_square_cloud(), &[1.3, 1.1], 2).is_err());
        assert!(build_filtration(&two_square_cloud(), &[1.1, 1.1], 2).is_err());
        assert!(build_filtration(&two_square_cloud(), &[], 2).unwrap().is_empty());
    }

    #[test]
    fn hexagon_curves() {
        let tol = Tolerance::default();
        let f = build_filtration(&hexagon(), &[1.9, 2.1, 3.6, 4.1], 2).unwrap();
        let b0: Vec<usize> = betti_curve(&f, 0, &tol).unwrap().into_iter().map(|x| x.1).collect();
        let b1: Vec<usize> = betti_curve(&f, 1, &tol).unwrap().into_iter().map(|x| x.1).collect();
        assert_eq!(b0, vec![6, 1, 1, 1]);
        assert_eq!(b1, vec![0, 1, 0, 0]);
        let gaps = spectral_gap_curve(&f, 0, &tol).unwrap();
        assert_eq!(gaps[0].1, Gap::AllZero);
        assert!((gaps[1].1.value().unwrap() - 1.0).abs() < 1e-8);
        assert_eq!(spectral_gap_curve(&f, 1, &tol).unwrap()[0].1, Gap::Empty);
    }

    #[test]
    fn persistent_laplacian_diagonal_matches_ordinary() {
        let tol = Tolerance::default();
        let f = build_filtration(&two_square_cloud(), &[1.1, 1.3], 2).unwrap();
        for p in 0..2 {
            let pl = persistent_laplacian(&f, 1.1, 1.1, p, &tol).unwrap();
            let sr = complex::spectral_report(&f.step(0).complex, p, &tol).unwrap();
            assert_eq!(pl.eigenvalues.len(), sr.eigenvalues.len());
            for (x, y) in pl.eigenvalues.iter().zip(&sr.eigenvalues) {
                assert!((x - y).abs() < 1e-8);
            }
        }
        assert_eq!(persistent_betti(&f, 1.1, 1.3, 1, &tol).unwrap(), 1);
        assert!(persistent_laplacian(&f, 1.3, 1.1, 1, &tol).is_err());
        assert!(persistent_laplacian(&f, 1.1, 1.2, 1, &tol).is_err());
    }

    #[test]
    fn filled_triangle_kills_the_cycle() {
        let tol = Tolerance::default();
        let f = triangle();
        assert_eq!(betti_curve(&f, 1, &tol).unwrap()[0].1, 1);
        assert_eq!(persistent_betti(&f, 1.5, 1.5, 1, &tol).unwrap(), 1);
        assert_eq!(persistent_betti(&f, 1.5, 2.5, 1, &tol).unwrap(), 0);
    }
}
