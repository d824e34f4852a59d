mod common;

use proptest::prelude::*;
use topolap_core::digraph::{self, Digraph};
use topolap_core::hyperdigraph::{self, Hyperdigraph};
use topolap_core::Tolerance;
use topolap_oracle as oracle;

fn digraph_edges(n: usize) -> impl Strategy<Value = Vec<(usize, usize)>> {
    prop::collection::btree_set((0..n, 0..n), 0..=10).prop_map(|s| s.into_iter().filter(|(a, b)| a != b).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn path_betti_matches_exact_omega(edges in digraph_edges(5), max_len in 1usize..=3) {
        let tol = Tolerance::default();
        let g = Digraph::new(&[0, 1, 2, 3, 4], &edges).unwrap();
        let got = digraph::path_betti(&g, max_len, &tol).unwrap();
        prop_assert_eq!(&got, &oracle::path_betti(g.vertices(), g.edges(), max_len));
        for (p, &b) in got.iter().enumerate() {
            prop_assert_eq!(digraph::path_laplacian(&g, p, max_len, &tol).unwrap().betti, b);
        }
    }

    #[test]
    fn enumeration_matches_exhaustive_search(edges in digraph_edges(4), max_len in 0usize..=3) {
        let g = Digraph::new(&[0, 1, 2, 3], &edges).unwrap();
        let basis = digraph::enumerate_paths(&g, max_len);
        let fast: Vec<Vec<usize>> = basis.all_paths().cloned().collect();
        prop_assert_eq!(fast, oracle::allowed_paths_exhaustive(g.vertices(), g.edges(), max_len));
    }

    #[test]
    fn hyperdigraph_of_paths_reproduces_path_homology(edges in digraph_edges(5)) {
        prop_assume!(!common::has_short_cycle(&edges));
        let tol = Tolerance::default();
        let g = Digraph::new(&[0, 1, 2, 3, 4], &edges).unwrap();
        let paths: Vec<Vec<usize>> = digraph::enumerate_paths(&g, 3).all_paths().cloned().collect();
        let hd = Hyperdigraph::new(&paths).unwrap();
        let expect = digraph::path_betti(&g, 3, &tol).unwrap();
        let got = hyperdigraph::hyperdigraph_betti(&hd, &tol).unwrap();
        prop_assert_eq!(&got[..expect.len().min(got.len())], &expect[..expect.len().min(got.len())]);
        for p in 0..expect.len().min(got.len()) {
            let a = hyperdigraph::hyperdigraph_laplacian(&hd, p, &tol).unwrap();
            let b = digraph::path_laplacian(&g, p, 3, &tol).unwrap();
            prop_assert!(common::sorted_close(&a.eigenvalues, &b.eigenvalues, 1e-8));
        }
    }
}
