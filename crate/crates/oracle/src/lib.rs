//! Exact rational reference computations.
//!
//! Everything here is written directly from the definitions, with no
//! floating point and no shared code with `topolap-core`, so that it can
//! serve as an independent oracle in tests. Performance is not a goal.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

/// Row-reduces a copy of `rows` in place and returns the reduced rows
/// together with the pivot column of each nonzero row.
pub fn rref(rows: &[Vec<Q>], ncols: usize) -> (Vec<Vec<Q>>, Vec<usize>) {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(pr) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..ncols {
                    let v = &m[r][j] * &f;
                    m[i][j] = &m[i][j] - v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[Vec<Q>], ncols: usize) -> usize {
    if rows.is_empty() || ncols == 0 {
        return 0;
    }
    rref(rows, ncols).1.len()
}

pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let qrows: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
    rank(&qrows, ncols)
}

/// Basis of `{x : x * M = 0}` where `M` has `nrows` rows and `ncols` columns.
pub fn left_kernel(m: &[Vec<Q>], nrows: usize, ncols: usize) -> Vec<Vec<Q>> {
    // x M = 0  <=>  M^T x^T = 0
    let mt: Vec<Vec<Q>> = (0..ncols).map(|j| (0..nrows).map(|i| m[i][j].clone()).collect()).collect();
    right_kernel(&mt, nrows)
}

/// Basis of `{x : M x = 0}` for `M` with `ncols` columns.
pub fn right_kernel(m: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let (red, pivots) = if m.is_empty() { (Vec::new(), Vec::new()) } else { rref(m, ncols) };
    let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivot_set.contains(c)) {
        let mut v = vec![Q::zero(); ncols];
        v[free] = Q::one();
        for (row, &pc) in red.iter().zip(&pivots) {
            v[pc] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Boundary of a vertex sequence: signed single-omission faces.
pub fn faces(cell: &[usize]) -> Vec<(Vec<usize>, i64)> {
    if cell.len() <= 1 {
        return Vec::new();
    }
    (0..cell.len())
        .map(|i| {
            let mut f = cell.to_vec();
            f.remove(i);
            (f, if i % 2 == 0 { 1 } else { -1 })
        })
        .collect()
}

/// Betti numbers of the chain complex `Inf_* = D ∩ d⁻¹D` where `D_p` is
/// spanned by the given cells of length `p + 1`, inside the full space of
/// vertex sequences. Cells are arbitrary sequences; for sets pass them
/// sorted. Returns Betti numbers for `p = 0..=top` where `top` is the
/// largest cell dimension present.
pub fn infimum_betti(cells: &[Vec<usize>]) -> Vec<usize> {
    let top = match cells.iter().map(|c| c.len()).max() {
        Some(l) => l - 1,
        None => return Vec::new(),
    };
    let mut by_dim: Vec<Vec<Vec<usize>>> = vec![Vec::new(); top + 1];
    for c in cells {
        if !by_dim[c.len() - 1].contains(c) {
            by_dim[c.len() - 1].push(c.clone());
        }
    }
    // coordinates of the ambient (p-1)-space: every face that occurs
    let inf_basis: Vec<Vec<Vec<Q>>> = (0..=top)
        .map(|p| {
            let k = by_dim[p].len();
            if p == 0 {
                return identity(k);
            }
            let allowed: BTreeSet<&Vec<usize>> = by_dim[p - 1].iter().collect();
            let mut outside: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
            for c in &by_dim[p] {
                for (f, _) in faces(c) {
                    if !allowed.contains(&f) {
                        let n = outside.len();
                        outside.entry(f).or_insert(n);
                    }
                }
            }
            if outside.is_empty() {
                return identity(k);
            }
            let m: Vec<Vec<Q>> = by_dim[p]
                .iter()
                .map(|c| {
                    let mut row = vec![Q::zero(); outside.len()];
                    for (f, s) in faces(c) {
                        if let Some(&j) = outside.get(&f) {
                            row[j] = &row[j] + q(s);
                        }
                    }
                    row
                })
                .collect();
            left_kernel(&m, k, outside.len())
        })
        .collect();

    // boundary of Inf_p expressed in D_{p-1} coordinates
    let boundary_rank = |p: usize| -> usize {
        if p == 0 || p > top || inf_basis[p].is_empty() || by_dim[p - 1].is_empty() {
            return 0;
        }
        let index: HashMap<&Vec<usize>, usize> = by_dim[p - 1].iter().enumerate().map(|(i, c)| (c, i)).collect();
        let rows: Vec<Vec<Q>> = inf_basis[p]
            .iter()
            .map(|x| {
                let mut out = vec![Q::zero(); by_dim[p - 1].len()];
                for (coef, c) in x.iter().zip(&by_dim[p]) {
                    if coef.is_zero() {
                        continue;
                    }
                    for (f, s) in faces(c) {
                        if let Some(&j) = index.get(&f) {
                            out[j] = &out[j] + coef * q(s);
                        }
                    }
                }
                out
            })
            .collect();
        rank(&rows, by_dim[p - 1].len())
    };

    (0..=top).map(|p| inf_basis[p].len() - boundary_rank(p) - boundary_rank(p + 1)).collect()
}

fn identity(k: usize) -> Vec<Vec<Q>> {
    (0..k).map(|i| (0..k).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()).collect()
}

/// All subsets of all given simplices, each sorted.
pub fn closure(simplices: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = BTreeSet::new();
    for s in simplices {
        let mut s = s.clone();
        s.sort_unstable();
        let n = s.len();
        for mask in 1u32..(1 << n) {
            let sub: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| s[i]).collect();
            out.insert(sub);
        }
    }
    let mut v: Vec<Vec<usize>> = out.into_iter().collect();
    v.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    v
}

/// Simplicial Betti numbers of a face-closed family, by exact ranks.
pub fn simplicial_betti(simplices: &[Vec<usize>]) -> Vec<usize> {
    infimum_betti(&closure(simplices))
}

/// Exact integer boundary matrix from `rows` (p-cells) to `cols` ((p-1)-cells).
pub fn boundary_i64(rows: &[Vec<usize>], cols: &[Vec<usize>]) -> Vec<Vec<i64>> {
    let index: HashMap<&Vec<usize>, usize> = cols.iter().enumerate().map(|(i, c)| (c, i)).collect();
    rows.iter()
        .map(|c| {
            let mut row = vec![0i64; cols.len()];
            for (f, s) in faces(c) {
                if let Some(&j) = index.get(&f) {
                    row[j] += s;
                }
            }
            row
        })
        .collect()
}

/// Rank of `H_p(K_a) -> H_p(K_b)` for face-closed `K_a ⊆ K_b`.
pub fn induced_map_rank(ka: &[Vec<usize>], kb: &[Vec<usize>], p: usize) -> usize {
    let dim_cells = |k: &[Vec<usize>], d: usize| -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = k.iter().filter(|s| s.len() == d + 1).cloned().collect();
        v.sort();
        v
    };
    let cp_b = dim_cells(kb, p);
    let cp_a = dim_cells(ka, p);
    if cp_a.is_empty() {
        return 0;
    }
    let to_q = |m: Vec<Vec<i64>>| -> Vec<Vec<Q>> { m.into_iter().map(|r| r.into_iter().map(q).collect()).collect() };
    // cycles of K_a as rows over C_p(K_a)
    let cycles_a: Vec<Vec<Q>> = if p == 0 {
        identity(cp_a.len())
    } else {
        let cm = dim_cells(ka, p - 1);
        if cm.is_empty() {
            identity(cp_a.len())
        } else {
            let b = to_q(boundary_i64(&cp_a, &cm));
            left_kernel(&b, cp_a.len(), cm.len())
        }
    };
    let index_b: HashMap<&Vec<usize>, usize> = cp_b.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let padded: Vec<Vec<Q>> = cycles_a
        .iter()
        .map(|z| {
            let mut row = vec![Q::zero(); cp_b.len()];
            for (coef, c) in z.iter().zip(&cp_a) {
                row[index_b[c]] = coef.clone();
            }
            row
        })
        .collect();
    let boundaries_b = to_q(boundary_i64(&dim_cells(kb, p + 1), &cp_b));
    let mut stacked = padded;
    let rb = rank(&boundaries_b, cp_b.len());
    stacked.extend(boundaries_b);
    rank(&stacked, cp_b.len()) - rb
}

/// Allowed paths of length `0..=max_len` by exhaustive search over all
/// vertex sequences, sorted by (length, lexicographic).
pub fn allowed_paths_exhaustive(vertices: &[usize], edges: &[(usize, usize)], max_len: usize) -> Vec<Vec<usize>> {
    let edge_set: BTreeSet<(usize, usize)> = edges.iter().copied().collect();
    let mut out = Vec::new();
    for len in 0..=max_len {
        let mut seqs: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..=len {
            seqs = seqs
                .into_iter()
                .flat_map(|s| {
                    vertices.iter().map(move |&v| {
                        let mut t = s.clone();
                        t.push(v);
                        t
                    })
                })
                .collect();
        }
        let mut ok: Vec<Vec<usize>> =
            seqs.into_iter().filter(|s| s.windows(2).all(|w| edge_set.contains(&(w[0], w[1])))).collect();
        ok.sort();
        out.extend(ok);
    }
    out
}

/// Path Betti numbers for `p = 0..max_len` (the top length only serves
/// to bound `Ω_{max_len}`).
pub fn path_betti(vertices: &[usize], edges: &[(usize, usize)], max_len: usize) -> Vec<usize> {
    let paths = allowed_paths_exhaustive(vertices, edges, max_len);
    let mut b = infimum_betti(&paths);
    b.resize(max_len + 1, 0);
    b.truncate(max_len);
    b
}
