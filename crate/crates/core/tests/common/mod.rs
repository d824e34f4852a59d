#![allow(dead_code)]

use nalgebra::DMatrix;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use topolap_core::{Cell, Matrix, PointCloud};

/// Uniform points in a cube, or a jittered ring (so that loops actually occur).
pub fn random_cloud(rng: &mut ChaCha8Rng, max_points: usize, dim: usize) -> PointCloud {
    if dim >= 2 && max_points >= 4 && rng.gen_bool(0.5) {
        return random_ring(rng, max_points, dim);
    }
    let n = rng.gen_range(1..=max_points);
    let pts = (0..n).map(|_| (0..dim).map(|_| rng.gen_range(0.0..2.0)).collect()).collect();
    PointCloud::new(pts).unwrap()
}

fn random_ring(rng: &mut ChaCha8Rng, max_points: usize, dim: usize) -> PointCloud {
    let n = rng.gen_range(4..=max_points);
    let pts = (0..n)
        .map(|i| {
            let a = std::f64::consts::TAU * i as f64 / n as f64 + rng.gen_range(-0.2..0.2);
            let r = 1.0 + rng.gen_range(-0.15..0.15);
            let mut p = vec![r * a.cos(), r * a.sin()];
            p.extend((2..dim).map(|_| rng.gen_range(-0.2..0.2)));
            p
        })
        .collect();
    PointCloud::new(pts).unwrap()
}

/// Two sorted thresholds spread over the cloud's distance range.
pub fn random_thresholds(rng: &mut ChaCha8Rng) -> [f64; 2] {
    let a: f64 = rng.gen_range(0.2..2.0);
    let b: f64 = rng.gen_range(0.2..2.0);
    if (a - b).abs() < 1e-6 {
        [a, a + 0.3]
    } else {
        [a.min(b), a.max(b)]
    }
}

pub fn random_hyperedges(rng: &mut ChaCha8Rng, vertices: usize, max_edges: usize) -> Vec<Cell> {
    let m = rng.gen_range(1..=max_edges);
    let mut out: Vec<Cell> = Vec::new();
    if vertices >= 3 && m >= 3 && rng.gen_bool(0.5) {
        let k = rng.gen_range(3..=vertices.min(m).min(5));
        out.extend((0..k).map(|i| {
            let mut e = vec![i, (i + 1) % k];
            e.sort_unstable();
            e
        }));
    }
    for _ in 0..64 {
        if out.len() == m {
            break;
        }
        let size = [1, 2, 2, 2, 3, 3, 4][rng.gen_range(0..7)].min(vertices);
        let mut e: Cell = Vec::new();
        while e.len() < size {
            let v = rng.gen_range(0..vertices);
            if !e.contains(&v) {
                e.push(v);
            }
        }
        e.sort_unstable();
        if !out.contains(&e) {
            out.push(e);
        }
    }
    out
}

pub fn random_digraph_edges(rng: &mut ChaCha8Rng, vertices: usize, density: f64) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for a in 0..vertices {
        for b in 0..vertices {
            if a != b && rng.gen_bool(density) {
                edges.push((a, b));
            }
        }
    }
    edges
}

/// True when the digraph has a directed cycle with two or three edges.
pub fn has_short_cycle(edges: &[(usize, usize)]) -> bool {
    let has = |a: usize, b: usize| edges.contains(&(a, b));
    edges.iter().any(|&(a, b)| has(b, a) || edges.iter().any(|&(c, d)| c == b && has(d, a)))
}

/// Haar-ish orthonormal matrix from the QR factor of a Gaussian-like draw.
pub fn random_orthonormal(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let m = DMatrix::from_fn(n, n, |_, _| rng.gen_range(-1.0..1.0));
    let q = m.qr().q();
    Matrix::new(n, n, q.transpose().as_slice().to_vec()).unwrap()
}

pub fn sorted_close(a: &[f64], b: &[f64], tol: f64) -> bool {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    a.len() == b.len() && a.iter().zip(&b).all(|(x, y)| (x - y).abs() <= tol * (1.0 + x.abs().max(y.abs())))
}

pub fn close_up_to_sign(a: &[f64], b: &[f64], tol: f64) -> bool {
    let same = a.iter().zip(b).all(|(x, y)| (x - y).abs() < tol);
    let flip = a.iter().zip(b).all(|(x, y)| (x + y).abs() < tol);
    a.len() == b.len() && (same || flip)
}

pub fn two_square_cloud() -> PointCloud {
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

pub fn broken_hexagon_cloud() -> PointCloud {
    let h = 3f64.sqrt() / 2.0;
    PointCloud::new(vec![
        vec![0.5, h, 0.0],
        vec![-0.5, h, 0.0],
        vec![-1.0, 0.0, 0.0],
        vec![1.0, 0.0, 0.0],
        vec![0.5, -h, 0.0],
        vec![-0.5, -h, 0.3],
    ])
    .unwrap()
}

pub fn five_point_cloud() -> PointCloud {
    PointCloud::new(vec![vec![0.0, 0.0], vec![2.0, 1.0], vec![2.0, 1.0], vec![3.0, 3.0], vec![3.0, 4.0]]).unwrap()
}

pub fn data_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}
