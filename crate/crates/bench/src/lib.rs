//! Deterministic inputs shared by the benchmarks.

use topolap_core::io::{self, CloudFormat};
use topolap_core::{Hypergraph, PointCloud};

const C60_XYZ: &str = include_str!("../../../data/c60.xyz");

pub fn c60() -> PointCloud {
    io::parse_point_cloud_str(C60_XYZ, CloudFormat::Xyz).expect("bundled geometry parses")
}

/// `n` points on a unit circle with a small deterministic wobble in z.
pub fn ring(n: usize) -> PointCloud {
    let pts = (0..n)
        .map(|i| {
            let a = std::f64::consts::TAU * i as f64 / n as f64;
            vec![a.cos(), a.sin(), 0.05 * (3.0 * a).sin()]
        })
        .collect();
    PointCloud::new(pts).expect("finite coordinates")
}

/// Every pair and every third triple on `n` vertices, plus all vertices.
pub fn dense_hypergraph(n: usize) -> Hypergraph {
    let mut edges: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    for a in 0..n {
        for b in a + 1..n {
            edges.push(vec![a, b]);
            for c in b + 1..n {
                if (a + b + c) % 3 == 0 {
                    edges.push(vec![a, b, c]);
                }
            }
        }
    }
    Hypergraph::new(&edges).expect("distinct vertices")
}
