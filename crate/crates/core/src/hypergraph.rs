//! Embedded homology and Laplacians of hypergraphs.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::chain::Cell;
use crate::complex::{self, canonicalize, PointCloud, RipsParams, SimplicialComplex};
use crate::error::{Error, Result};
use crate::infimum::{self, InfimumChainData};
use crate::linalg::Tolerance;
use crate::spectrum::SpectralReport;

/// Hyperedges need not be closed under faces.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Hypergraph {
    vertices: Vec<usize>,
    hyperedges: Vec<Cell>,
}

impl Hypergraph {
    /// Sorts each hyperedge and the list; duplicates collapse.
    pub fn new<S: AsRef<[usize]>>(hyperedges: &[S]) -> Result<Self> {
        let mut set: BTreeSet<Cell> = BTreeSet::new();
        for e in hyperedges {
            let mut v = e.as_ref().to_vec();
            if v.is_empty() {
                return Err(Error::input("empty hyperedge"));
            }
            v.sort_unstable();
            if v.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::input(format!("hyperedge {:?} repeats a vertex", e.as_ref())));
            }
            set.insert(v);
        }
        let mut hyperedges: Vec<Cell> = set.into_iter().collect();
        hyperedges.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        let vertices: BTreeSet<usize> = hyperedges.iter().flatten().copied().collect();
        Ok(Hypergraph { vertices: vertices.into_iter().collect(), hyperedges })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn hyperedges(&self) -> &[Cell] {
        &self.hyperedges
    }

    pub fn dim(&self) -> Option<usize> {
        self.hyperedges.last().map(|e| e.len() - 1)
    }

    fn by_dim(&self) -> Vec<Vec<Cell>> {
        infimum::group_by_dim(self.hyperedges.iter().cloned(), self.dim().map_or(0, |d| d + 1))
    }
}

/// `ΔH`: every nonempty subset of every hyperedge.
pub fn simplicial_closure(h: &Hypergraph) -> SimplicialComplex {
    canonicalize(h.hyperedges()).expect("hyperedges have distinct vertices")
}

/// For each dimension, positions of the hyperedges among the simplices of
/// the closure.
pub fn hyperedge_indices(h: &Hypergraph, closure: &SimplicialComplex) -> Result<Vec<Vec<usize>>> {
    let ambient = closure.by_dim();
    let members = h.by_dim();
    if members.len() > ambient.len() {
        return Err(Error::Internal("hypergraph exceeds the dimension of its closure".into()));
    }
    members.iter().zip(&ambient).map(|(m, a)| infimum::positions(m, a)).collect()
}

pub fn infimum_data(h: &Hypergraph, tol: &Tolerance) -> Result<InfimumChainData> {
    let ambient = simplicial_closure(h).by_dim();
    InfimumChainData::new(h.by_dim(), ambient, tol)
}

/// Betti numbers of the embedded homology from the stacked-rank formula.
pub fn embedded_betti(h: &Hypergraph, tol: &Tolerance) -> Result<Vec<usize>> {
    infimum_data(h, tol)?.betti_by_stacking(tol)
}

pub fn hypergraph_laplacian(h: &Hypergraph, p: usize, tol: &Tolerance) -> Result<SpectralReport> {
    infimum_data(h, tol)?.spectral_report(p, tol)
}

/// Rips hypergraph keeping only simplices whose vertices carry at least two
/// colors; every vertex is kept.
pub fn two_color_rips_hypergraph(cloud: &PointCloud, threshold: f64, max_dim: usize) -> Result<Hypergraph> {
    two_color_rips_hypergraph_with(cloud, threshold, RipsParams::new(max_dim))
}

pub fn two_color_rips_hypergraph_with(cloud: &PointCloud, threshold: f64, params: RipsParams) -> Result<Hypergraph> {
    let colors: Vec<&str> = cloud
        .labels()
        .iter()
        .enumerate()
        .map(|(i, l)| l.as_deref().ok_or_else(|| Error::input(format!("point {i} has no color label"))))
        .collect::<Result<_>>()?;
    let rips = complex::rips_complex_with(cloud, threshold, params)?;
    let edges: Vec<&Cell> =
        rips.simplices().iter().filter(|s| s.len() == 1 || s.iter().any(|&v| colors[v] != colors[s[0]])).collect();
    Hypergraph::new(&edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::betti_numbers;

    fn hg(list: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(list).unwrap()
    }

    fn hexagon(threshold: f64) -> Hypergraph {
        let pts: Vec<Vec<f64>> = (0..6)
            .map(|i| {
                let a = std::f64::consts::PI / 3.0 * i as f64;
                vec![2.0 * a.cos(), 2.0 * a.sin()]
            })
            .collect();
        let labels = (0..6).map(|i| Some(if i % 2 == 0 { "red" } else { "blue" }.to_string())).collect();
        let cloud = PointCloud::with_labels(pts, labels).unwrap();
        two_color_rips_hypergraph(&cloud, threshold, 2).unwrap()
    }

    #[test]
    fn closure_examples() {
        assert_eq!(simplicial_closure(&hg(&[&[0, 1, 2]])).len(), 7);
        let closed = hg(&[&[0], &[1], &[0, 1]]);
        assert_eq!(simplicial_closure(&closed).simplices(), closed.hyperedges());
        let k = simplicial_closure(&hg(&[&[0, 1], &[1, 2, 3]]));
        let expect: Vec<Cell> =
            vec![vec![0], vec![1], vec![2], vec![3], vec![0, 1], vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 2, 3]];
        assert_eq!(k.simplices(), expect.as_slice());
    }

    #[test]
    fn index_examples() {
        let closed = hg(&[&[0, 1, 2], &[0], &[1], &[2], &[0, 1], &[0, 2], &[1, 2]]);
        let idx = hyperedge_indices(&closed, &simplicial_closure(&closed)).unwrap();
        assert_eq!(idx, vec![vec![0, 1, 2], vec![0, 1, 2], vec![0]]);
        let h = hg(&[&[0], &[1], &[0, 1, 2]]);
        let idx = hyperedge_indices(&h, &simplicial_closure(&h)).unwrap();
        assert_eq!(idx, vec![vec![0, 1], vec![], vec![0]]);
    }

    #[test]
    fn embedded_betti_examples() {
        let tol = Tolerance::default();
        let closed = hg(&[&[0, 1, 2], &[2, 3], &[0], &[1], &[2], &[3], &[0, 1], &[0, 2], &[1, 2]]);
        assert_eq!(embedded_betti(&closed, &tol).unwrap(), betti_numbers(&simplicial_closure(&closed), &tol).unwrap());
        let h = hg(&[&[0], &[1], &[0, 1, 2]]);
        assert_eq!(embedded_betti(&h, &tol).unwrap(), vec![2, 0, 0]);
        let data = infimum_data(&h, &tol).unwrap();
        assert_eq!(data.level(2).unwrap().basis.rows(), 0);
        assert_eq!(data.betti_by_rank(&tol).unwrap(), vec![2, 0, 0]);
    }

    #[test]
    fn face_closed_reduces_to_boundary() {
        let tol = Tolerance::default();
        let closed = hg(&[&[0, 1, 2], &[0], &[1], &[2], &[0, 1], &[0, 2], &[1, 2]]);
        let data = infimum_data(&closed, &tol).unwrap();
        for p in 1..3 {
            let level = data.level(p).unwrap();
            assert_eq!(level.rest.cols(), 0);
            assert_eq!(level.basis, crate::linalg::Matrix::identity(data.k(p)));
            assert_eq!(data.infimum_boundary(p).unwrap(), level.boundary);
        }
    }

    #[test]
    fn hexagon_two_color_hyperedges() {
        let h = hexagon(2.1);
        let edges: Vec<&Cell> = h.hyperedges().iter().filter(|e| e.len() == 2).collect();
        let expect: Vec<Cell> = vec![vec![0, 1], vec![0, 5], vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 5]];
        assert_eq!(edges, expect.iter().collect::<Vec<_>>());
        assert_eq!(h.hyperedges().len(), 12);

        let h = hexagon(2.0 * 3f64.sqrt() * 1.01);
        assert!(!h.hyperedges().contains(&vec![0, 2]));
        assert!(h.hyperedges().contains(&vec![0, 1, 2]));
        assert!(h.hyperedges().contains(&vec![1, 2, 3]));
    }

    #[test]
    fn one_color_keeps_only_vertices() {
        let cloud =
            PointCloud::with_labels(vec![vec![0.0], vec![1.0]], vec![Some("c".into()), Some("c".into())]).unwrap();
        let h = two_color_rips_hypergraph(&cloud, 5.0, 2).unwrap();
        assert_eq!(h.hyperedges(), &[vec![0], vec![1]]);
        let unlabeled = PointCloud::new(vec![vec![0.0]]).unwrap();
        assert!(matches!(two_color_rips_hypergraph(&unlabeled, 1.0, 2), Err(Error::Input(_))));
    }
}
