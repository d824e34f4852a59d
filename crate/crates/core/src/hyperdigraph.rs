//! Homology of hyperdigraphs: sets of ordered sequences of distinct vertices.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::chain::{BoundaryBlocks, Cell};
use crate::error::{Error, Result};
use crate::infimum::{self, InfimumChainData};
use crate::linalg::Tolerance;
use crate::spectrum::SpectralReport;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Hyperdigraph {
    vertices: Vec<usize>,
    directed_hyperedges: Vec<Cell>,
}

impl Hyperdigraph {
    /// Order within each sequence is kept; the list is sorted by length then
    /// lexicographically.
    pub fn new<S: AsRef<[usize]>>(sequences: &[S]) -> Result<Self> {
        let mut seen: BTreeSet<Cell> = BTreeSet::new();
        for s in sequences {
            let s = s.as_ref();
            if s.is_empty() {
                return Err(Error::input("empty directed hyperedge"));
            }
            let distinct: BTreeSet<usize> = s.iter().copied().collect();
            if distinct.len() != s.len() {
                return Err(Error::input(format!("directed hyperedge {s:?} repeats a vertex")));
            }
            if !seen.insert(s.to_vec()) {
                return Err(Error::input(format!("duplicate directed hyperedge {s:?}")));
            }
        }
        let mut directed_hyperedges: Vec<Cell> = seen.into_iter().collect();
        directed_hyperedges.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        let vertices: BTreeSet<usize> = directed_hyperedges.iter().flatten().copied().collect();
        Ok(Hyperdigraph { vertices: vertices.into_iter().collect(), directed_hyperedges })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn directed_hyperedges(&self) -> &[Cell] {
        &self.directed_hyperedges
    }

    pub fn dim(&self) -> Option<usize> {
        self.directed_hyperedges.last().map(|e| e.len() - 1)
    }

    fn members(&self) -> Vec<Vec<Cell>> {
        infimum::group_by_dim(self.directed_hyperedges.iter().cloned(), self.dim().map_or(0, |d| d + 1))
    }
}

/// Boundary into the sequences made of the hyperedges and their faces.
pub fn hyperdigraph_boundary(h: &Hyperdigraph) -> BoundaryBlocks {
    let members = h.members();
    let ambient = infimum::reduced_ambient(&members);
    BoundaryBlocks::build(members, ambient).expect("ambient holds every face")
}

pub fn hyperdigraph_infimum_data(h: &Hyperdigraph, tol: &Tolerance) -> Result<InfimumChainData> {
    let members = h.members();
    let ambient = infimum::reduced_ambient(&members);
    InfimumChainData::new(members, ambient, tol)
}

pub fn hyperdigraph_betti(h: &Hyperdigraph, tol: &Tolerance) -> Result<Vec<usize>> {
    hyperdigraph_infimum_data(h, tol)?.betti_by_stacking(tol)
}

pub fn hyperdigraph_laplacian(h: &Hyperdigraph, p: usize, tol: &Tolerance) -> Result<SpectralReport> {
    hyperdigraph_infimum_data(h, tol)?.spectral_report(p, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Hyperdigraph::new(&[vec![0, 1, 0]]).is_err());
        assert!(Hyperdigraph::new(&[vec![0, 1], vec![0, 1]]).is_err());
        let h = Hyperdigraph::new(&[vec![1, 0], vec![0]]).unwrap();
        assert_eq!(h.directed_hyperedges(), &[vec![0], vec![1, 0]]);
    }

    #[test]
    fn boundary_orientation() {
        let h = Hyperdigraph::new(&[vec![0, 1]]).unwrap();
        assert_eq!(hyperdigraph_boundary(&h).dense(1).row(0), &[-1.0, 1.0]);
        let h = Hyperdigraph::new(&[vec![1, 0]]).unwrap();
        assert_eq!(hyperdigraph_boundary(&h).dense(1).row(0), &[1.0, -1.0]);
    }

    #[test]
    fn betti_examples() {
        let tol = Tolerance::default();
        let seg = Hyperdigraph::new(&[vec![0], vec![1], vec![0, 1]]).unwrap();
        assert_eq!(hyperdigraph_betti(&seg, &tol).unwrap(), vec![1, 0]);
        let cyc = Hyperdigraph::new(&[vec![0], vec![1], vec![2], vec![0, 1], vec![1, 2], vec![2, 0]]).unwrap();
        assert_eq!(hyperdigraph_betti(&cyc, &tol).unwrap(), vec![1, 1]);
    }

    #[test]
    fn laplacian_of_segment() {
        let tol = Tolerance::default();
        let seg = Hyperdigraph::new(&[vec![0], vec![1], vec![0, 1]]).unwrap();
        let r = hyperdigraph_laplacian(&seg, 0, &tol).unwrap();
        assert_eq!(r.eigenvalues[0], 0.0);
        assert!((r.eigenvalues[1] - 2.0).abs() < 1e-12);
        assert!(hyperdigraph_laplacian(&seg, 2, &tol).is_err());
    }
}
