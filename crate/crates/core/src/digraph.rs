//! Path homology of digraphs.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::chain::{BoundaryBlocks, Cell};
use crate::error::{Error, Result};
use crate::infimum::{self, InfimumChainData};
use crate::linalg::Tolerance;
use crate::spectrum::SpectralReport;

pub const DEFAULT_MAX_LEN: usize = 3;

/// Simple digraph: no loops, no repeated directed edge.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Digraph {
    vertices: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

impl Digraph {
    /// Vertex list is the union of `vertices` and all edge endpoints.
    pub fn new(vertices: &[usize], edges: &[(usize, usize)]) -> Result<Self> {
        let mut seen = HashSet::new();
        for &(a, b) in edges {
            if a == b {
                return Err(Error::input(format!("loop at vertex {a}")));
            }
            if !seen.insert((a, b)) {
                return Err(Error::input(format!("duplicate edge {a} -> {b}")));
            }
        }
        let vs: BTreeSet<usize> = vertices.iter().copied().chain(edges.iter().flat_map(|&(a, b)| [a, b])).collect();
        let mut edges = edges.to_vec();
        edges.sort_unstable();
        Ok(Digraph { vertices: vs.into_iter().collect(), edges })
    }

    pub fn from_edges(edges: &[(usize, usize)]) -> Result<Self> {
        Self::new(&[], edges)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a, b)).is_ok()
    }

    fn successors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let start = self.edges.partition_point(|&(a, _)| a < v);
        self.edges[start..].iter().take_while(move |&&(a, _)| a == v).map(|&(_, b)| b)
    }
}

/// Allowed paths by length, plus the ambient elementary paths they bound into.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathBasis {
    paths: Vec<Vec<Cell>>,
    ambient: Vec<Vec<Cell>>,
}

impl PathBasis {
    /// Allowed paths of length `p` (with `p + 1` vertices), sorted.
    pub fn paths(&self, p: usize) -> &[Cell] {
        self.paths.get(p).map_or(&[], Vec::as_slice)
    }

    pub fn ambient(&self, p: usize) -> &[Cell] {
        self.ambient.get(p).map_or(&[], Vec::as_slice)
    }

    pub fn max_len(&self) -> usize {
        self.paths.len().saturating_sub(1)
    }

    /// All allowed paths, shortest first.
    pub fn all_paths(&self) -> impl Iterator<Item = &Cell> {
        self.paths.iter().flatten()
    }
}

/// Every allowed path with at most `max_len` edges.
pub fn enumerate_paths(g: &Digraph, max_len: usize) -> PathBasis {
    let mut paths: Vec<Vec<Cell>> = vec![Vec::new(); max_len + 1];
    let mut stack: Vec<Cell> = g.vertices.iter().rev().map(|&v| vec![v]).collect();
    while let Some(path) = stack.pop() {
        let len = path.len() - 1;
        if len < max_len {
            let last = *path.last().unwrap();
            let next: Vec<usize> = g.successors(last).collect();
            for &w in next.iter().rev() {
                let mut ext = path.clone();
                ext.push(w);
                stack.push(ext);
            }
        }
        paths[len].push(path);
    }
    for group in &mut paths {
        group.sort();
    }
    let ambient = infimum::reduced_ambient(&paths);
    PathBasis { paths, ambient }
}

pub fn path_boundary_matrices(basis: &PathBasis) -> BoundaryBlocks {
    BoundaryBlocks::build(basis.paths.clone(), basis.ambient.clone()).expect("ambient holds every face")
}

/// The infimum pipeline with allowed paths as cells.
pub fn path_infimum_data(basis: &PathBasis, tol: &Tolerance) -> Result<InfimumChainData> {
    InfimumChainData::new(basis.paths.clone(), basis.ambient.clone(), tol)
}

/// Path Betti numbers for `p = 0..max_len`.
pub fn path_betti(g: &Digraph, max_len: usize, tol: &Tolerance) -> Result<Vec<usize>> {
    let basis = enumerate_paths(g, max_len);
    let mut b = path_infimum_data(&basis, tol)?.betti_by_stacking(tol)?;
    b.truncate(max_len);
    Ok(b)
}

pub fn path_laplacian(g: &Digraph, p: usize, max_len: usize, tol: &Tolerance) -> Result<SpectralReport> {
    if p + 1 > max_len {
        return Err(Error::input(format!("dimension {p} needs a path length cap of at least {}", p + 1)));
    }
    let basis = enumerate_paths(g, max_len);
    path_infimum_data(&basis, tol)?.spectral_report(p, tol)
}
