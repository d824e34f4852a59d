//! Abstract simplicial complexes, Rips construction and Hodge spectra.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::chain::{BoundaryBlocks, Cell};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Tolerance};
use crate::spectrum::SpectralReport;

/// Simplices sorted by dimension, then lexicographically, closed under faces.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SimplicialComplex {
    vertices: Vec<usize>,
    simplices: Vec<Cell>,
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn simplices(&self) -> &[Cell] {
        &self.simplices
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Highest simplex dimension, `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.simplices.last().map(|s| s.len() - 1)
    }

    /// `n_p` for `p = 0..=dim`.
    pub fn counts(&self) -> Vec<usize> {
        self.by_dim().iter().map(Vec::len).collect()
    }

    /// Simplices grouped by dimension.
    pub fn by_dim(&self) -> Vec<Vec<Cell>> {
        let mut out: Vec<Vec<Cell>> = vec![Vec::new(); self.dim().map_or(0, |d| d + 1)];
        for s in &self.simplices {
            out[s.len() - 1].push(s.clone());
        }
        out
    }

    pub fn contains(&self, simplex: &[usize]) -> bool {
        self.simplices.binary_search_by(|s| (s.len(), s.as_slice()).cmp(&(simplex.len(), simplex))).is_ok()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.counts().iter().enumerate().map(|(p, &n)| if p % 2 == 0 { n as i64 } else { -(n as i64) }).sum()
    }

    /// Assumes `simplices` are strictly increasing, face-closed and sorted.
    pub(crate) fn from_sorted(simplices: Vec<Cell>) -> Self {
        let vertices = simplices.iter().take_while(|s| s.len() == 1).map(|s| s[0]).collect();
        SimplicialComplex { vertices, simplices }
    }
}

fn dim_lex_key(s: &Cell) -> (usize, &Cell) {
    (s.len(), s)
}

/// Sorts each simplex, adds every missing face, drops duplicates and sorts
/// the result by dimension then lexicographically.
pub fn canonicalize<S: AsRef<[usize]>>(simplices: &[S]) -> Result<SimplicialComplex> {
    let mut all: BTreeSet<Cell> = BTreeSet::new();
    for s in simplices {
        let mut v = s.as_ref().to_vec();
        if v.is_empty() {
            return Err(Error::input("empty simplex"));
        }
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::input(format!("simplex {:?} repeats a vertex", s.as_ref())));
        }
        if v.len() > 24 {
            return Err(Error::input(format!("simplex with {} vertices is too large to close", v.len())));
        }
        if all.contains(&v) {
            continue;
        }
        insert_closure(&v, &mut all);
    }
    let mut list: Vec<Cell> = all.into_iter().collect();
    list.sort_by(|a, b| dim_lex_key(a).cmp(&dim_lex_key(b)));
    Ok(SimplicialComplex::from_sorted(list))
}

fn insert_closure(v: &[usize], out: &mut BTreeSet<Cell>) {
    let n = v.len();
    for mask in 1u32..(1u32 << n) {
        let sub: Cell = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| v[i]).collect();
        out.insert(sub);
    }
}

/// Points in Euclidean space with optional per-point labels.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct PointCloud {
    points: Vec<Vec<f64>>,
    labels: Vec<Option<String>>,
}

impl PointCloud {
    pub fn new(points: Vec<Vec<f64>>) -> Result<Self> {
        let n = points.len();
        Self::with_labels(points, vec![None; n])
    }

    pub fn with_labels(points: Vec<Vec<f64>>, labels: Vec<Option<String>>) -> Result<Self> {
        if labels.len() != points.len() {
            return Err(Error::input("label count differs from point count"));
        }
        if let Some(first) = points.first() {
            let d = first.len();
            for (i, p) in points.iter().enumerate() {
                if p.len() != d {
                    return Err(Error::input(format!("point {i} has dimension {}, expected {d}", p.len())));
                }
                if p.iter().any(|x| !x.is_finite()) {
                    return Err(Error::input(format!("point {i} has a non-finite coordinate")));
                }
            }
        }
        Ok(PointCloud { points, labels })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn ambient_dim(&self) -> usize {
        self.points.first().map_or(0, Vec::len)
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    pub fn distance(&self, i: usize, j: usize) -> f64 {
        self.points[i].iter().zip(&self.points[j]).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt()
    }
}

/// Options for Rips construction.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RipsParams {
    pub max_dim: usize,
    /// Admit pairs at exactly the threshold distance.
    pub closed: bool,
}

impl Default for RipsParams {
    fn default() -> Self {
        RipsParams { max_dim: 2, closed: false }
    }
}

impl RipsParams {
    pub fn new(max_dim: usize) -> Self {
        RipsParams { max_dim, closed: false }
    }

    pub(crate) fn admits(&self, distance: f64, threshold: f64) -> bool {
        if self.closed {
            distance <= threshold
        } else {
            distance < threshold
        }
    }
}

/// Rips complex with the strict `distance < threshold` rule.
pub fn rips_complex(cloud: &PointCloud, threshold: f64, max_dim: usize) -> Result<SimplicialComplex> {
    rips_complex_with(cloud, threshold, RipsParams::new(max_dim))
}

pub fn rips_complex_with(cloud: &PointCloud, threshold: f64, params: RipsParams) -> Result<SimplicialComplex> {
    if !threshold.is_finite() || threshold < 0.0 {
        return Err(Error::input(format!("threshold must be finite and non-negative, got {threshold}")));
    }
    let n = cloud.len();
    let mut adj = vec![vec![false; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let ok = params.admits(cloud.distance(i, j), threshold);
            adj[i][j] = ok;
            adj[j][i] = ok;
        }
    }
    Ok(SimplicialComplex::from_sorted(clique_expand(n, &adj, params.max_dim)))
}

/// All cliques up to `max_dim + 1` vertices, in dimension-lexicographic order.
pub(crate) fn clique_expand(n: usize, adj: &[Vec<bool>], max_dim: usize) -> Vec<Cell> {
    let mut out: Vec<Cell> = (0..n).map(|v| vec![v]).collect();
    let mut layer: Vec<Cell> = out.clone();
    for _ in 0..max_dim {
        let mut next = Vec::new();
        for s in &layer {
            let last = *s.last().unwrap();
            for v in (last + 1)..n {
                if s.iter().all(|&u| adj[u][v]) {
                    let mut t = s.clone();
                    t.push(v);
                    next.push(t);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

pub fn boundary_matrices(k: &SimplicialComplex) -> BoundaryBlocks {
    BoundaryBlocks::simplicial(k.by_dim()).expect("canonical complexes are face-closed")
}

/// `β_p = n_p − rank B_p − rank B_{p+1}` for `p = 0..=dim`.
pub fn betti_numbers(k: &SimplicialComplex, tol: &Tolerance) -> Result<Vec<usize>> {
    betti_from_blocks(&boundary_matrices(k), tol)
}

pub(crate) fn betti_from_blocks(bb: &BoundaryBlocks, tol: &Tolerance) -> Result<Vec<usize>> {
    let ranks: Vec<usize> = (0..=bb.len()).map(|p| bb.rank(p, tol)).collect::<Result<_>>()?;
    Ok((0..bb.len()).map(|p| bb.count(p) - ranks[p] - ranks[p + 1]).collect())
}

/// Dirac operator on the concatenated chain basis.
pub fn dirac_matrix(k: &SimplicialComplex) -> Matrix {
    let bb = boundary_matrices(k);
    let idx = bb.dim_index();
    let total = *idx.last().unwrap();
    let mut d = Matrix::zeros(total, total);
    for p in 1..bb.len() {
        let block = bb.block(p).unwrap();
        for r in 0..block.rows() {
            for &(c, v) in block.row_entries(r) {
                let (i, j) = (idx[p] + r, idx[p - 1] + c);
                d[(i, j)] = v as f64;
                d[(j, i)] = v as f64;
            }
        }
    }
    d
}

/// Dense `B_p B_pᵀ + B_{p+1}ᵀ B_{p+1}` from simplicial blocks.
pub(crate) fn hodge_laplacian(bb: &BoundaryBlocks, p: usize) -> Matrix {
    let n = bb.count(p);
    let mut l = match bb.block(p) {
        Some(b) => b.outer_gram(),
        None => Matrix::zeros(n, n),
    };
    if let Some(up) = bb.block(p + 1) {
        l = l.add(&up.inner_gram());
    }
    l
}

pub fn laplacian_matrix(k: &SimplicialComplex, p: usize, _tol: &Tolerance) -> Result<Matrix> {
    check_dimension(k, p)?;
    Ok(hodge_laplacian(&boundary_matrices(k), p))
}

pub fn spectral_report(k: &SimplicialComplex, p: usize, tol: &Tolerance) -> Result<SpectralReport> {
    let l = laplacian_matrix(k, p, tol)?;
    SpectralReport::of_matrix(p, &l, tol)
}

fn check_dimension(k: &SimplicialComplex, p: usize) -> Result<()> {
    match k.dim() {
        Some(d) if p <= d => Ok(()),
        Some(d) => Err(Error::input(format!("dimension {p} exceeds the top dimension {d}"))),
        None => Err(Error::input("the complex is empty")),
    }
}
