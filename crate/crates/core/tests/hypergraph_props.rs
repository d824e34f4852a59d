mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use topolap_core::complex;
use topolap_core::hypergraph::{self, Hypergraph};
use topolap_core::Tolerance;
use topolap_oracle as oracle;

fn hyperedges() -> impl Strategy<Value = Vec<Vec<usize>>> {
    prop::collection::vec(prop::collection::btree_set(0usize..6, 1..=4), 1..=8)
        .prop_map(|sets| sets.into_iter().map(|s| s.into_iter().collect()).collect())
}

fn padded(mut b: Vec<usize>, len: usize) -> Vec<usize> {
    b.resize(len, 0);
    b
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn embedded_betti_matches_exact_infimum(edges in hyperedges()) {
        let tol = Tolerance::default();
        let h = Hypergraph::new(&edges).unwrap();
        let expect = oracle::infimum_betti(h.hyperedges());
        let got = hypergraph::embedded_betti(&h, &tol).unwrap();
        prop_assert_eq!(padded(got.clone(), expect.len()), padded(expect.clone(), got.len()));
        let data = hypergraph::infimum_data(&h, &tol).unwrap();
        prop_assert_eq!(data.betti_by_rank(&tol).unwrap(), got.clone());
        for (p, &b) in got.iter().enumerate() {
            prop_assert_eq!(data.spectral_report(p, &tol).unwrap().betti, b);
        }
    }

    #[test]
    fn closure_reduces_to_simplicial(edges in hyperedges()) {
        let tol = Tolerance::default();
        let h = Hypergraph::new(&edges).unwrap();
        let k = hypergraph::simplicial_closure(&h);
        let closed = Hypergraph::new(k.simplices()).unwrap();
        prop_assert_eq!(hypergraph::embedded_betti(&closed, &tol).unwrap(), complex::betti_numbers(&k, &tol).unwrap());
        for p in 0..=k.dim().unwrap() {
            let a = hypergraph::hypergraph_laplacian(&closed, p, &tol).unwrap();
            let b = complex::spectral_report(&k, p, &tol).unwrap();
            prop_assert!(common::sorted_close(&a.eigenvalues, &b.eigenvalues, 1e-9));
        }
    }

    #[test]
    fn spectra_survive_orthonormal_remixing(edges in hyperedges(), seed in any::<u64>()) {
        let tol = Tolerance::default();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = Hypergraph::new(&edges).unwrap();
        let mut data = hypergraph::infimum_data(&h, &tol).unwrap();
        let before: Vec<Vec<f64>> = (0..data.len()).map(|p| data.spectral_report(p, &tol).unwrap().eigenvalues).collect();
        for p in 0..data.len() {
            let q = common::random_orthonormal(&mut rng, data.r(p));
            data.remix(p, &q, &tol).unwrap();
        }
        for (p, ev) in before.iter().enumerate() {
            let after = data.spectral_report(p, &tol).unwrap().eigenvalues;
            prop_assert!(common::sorted_close(ev, &after, 1e-8));
        }
    }
}
