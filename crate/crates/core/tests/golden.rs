mod common;

use common::{broken_hexagon_cloud, close_up_to_sign, data_path, five_point_cloud, two_square_cloud};
use topolap_core::complex::{self, canonicalize, rips_complex};
use topolap_core::io::{self, CloudFormat, CurveFormat, Scale};
use topolap_core::persistence::{self, build_filtration};
use topolap_core::{Cell, Gap, RipsParams, Tolerance};
use topolap_oracle as oracle;

#[test]
fn rips_list_for_five_points() {
    let k = rips_complex(&five_point_cloud(), 3.0, 2).unwrap();
    let expect: Vec<Cell> = vec![
        vec![0],
        vec![1],
        vec![2],
        vec![3],
        vec![4],
        vec![0, 1],
        vec![0, 2],
        vec![1, 2],
        vec![1, 3],
        vec![2, 3],
        vec![3, 4],
        vec![0, 1, 2],
        vec![1, 2, 3],
    ];
    assert_eq!(k.simplices(), expect.as_slice());
    assert_eq!(k.dim(), Some(2));
}

#[test]
fn two_component_complex() {
    let cells: Vec<Vec<usize>> = vec![
        vec![1],
        vec![2],
        vec![3],
        vec![4],
        vec![5],
        vec![1, 2],
        vec![2, 3],
        vec![2, 4],
        vec![3, 4],
        vec![2, 3, 4],
    ];
    let k = canonicalize(&cells).unwrap();
    let b = complex::betti_numbers(&k, &Tolerance::default()).unwrap();
    assert_eq!(b, vec![2, 0, 0]);
    assert_eq!(b, oracle::simplicial_betti(&cells));
}

#[test]
fn harmonic_transcript_cube() {
    let tol = Tolerance::default();
    let f = build_filtration(&two_square_cloud(), &[1.1, 1.3], 2).unwrap();
    assert_eq!(f.step(0).complex.len(), 14);
    assert_eq!(f.step(1).basis(1)[6..], [vec![5, 7], vec![6, 7]]);
    let wa = persistence::harmonic_space(&f, 1.1, 1, &tol).unwrap();
    let text = io::format_generators(f.step(0).basis(1), &wa, 7).unwrap();
    assert!(
        text == "0.5 [0, 1] -0.5 [0, 2] + 0.5 [1, 3] -0.5 [2, 3]"
            || text == "-0.5 [0, 1] + 0.5 [0, 2] -0.5 [1, 3] + 0.5 [2, 3]",
        "{text}"
    );
    let t = persistence::harmonic_transition(&f, 1.1, 1.3, 1, &tol).unwrap();
    assert_eq!((t.survivors.rows(), t.death_count), (1, 0));
    let births = persistence::harmonic_births(&f, 1.1, 1.3, 1, &tol, &t.survivors).unwrap();
    assert_eq!(births.rows(), 1);
    assert!(close_up_to_sign(births.row(0), &[0.0, 0.0, 0.0, 0.0, -0.5, 0.5, -0.5, 0.5], 1e-6));
}

#[test]
fn harmonic_transcript_hexagon_loop() {
    let tol = Tolerance::default();
    let f = build_filtration(&broken_hexagon_cloud(), &[1.0, 1.2], 2).unwrap();
    let a: Vec<Cell> = f.step(0).complex.simplices().to_vec();
    assert_eq!(a[6..], [vec![0, 3], vec![1, 2], vec![3, 4]]);
    assert_eq!(f.step(1).basis(1), &[vec![0, 3], vec![1, 2], vec![3, 4], vec![0, 1], vec![2, 5], vec![4, 5]]);
    let wa = persistence::harmonic_space(&f, 1.0, 1, &tol).unwrap();
    assert_eq!(io::format_generators(f.step(0).basis(1), &wa, 7).unwrap(), "none");
    let t = persistence::harmonic_transition(&f, 1.0, 1.2, 1, &tol).unwrap();
    let births = persistence::harmonic_births(&f, 1.0, 1.2, 1, &tol, &t.survivors).unwrap();
    assert_eq!(births.rows(), 1);
    assert!(births.row(0).iter().all(|x| (x.abs() - 0.4082483).abs() < 1e-6));
}

#[test]
fn hexagon_fixture_curves() {
    let tol = Tolerance::default();
    let cloud = io::parse_point_cloud(&data_path("hexagon.csv"), CloudFormat::Csv).unwrap();
    let ts = [1.9, 2.1, 2.0 * 3f64.sqrt() * 1.01, 4.1];
    let f = build_filtration(&cloud, &ts, 2).unwrap();
    let rips = io::rips_curve_records(&f, &tol).unwrap();
    let two = io::two_color_curve_records(&cloud, &ts, RipsParams::default(), &tol).unwrap();
    let b: Vec<(usize, usize)> = rips.iter().map(|r| (r.betti0, r.betti1)).collect();
    assert_eq!(b, vec![(6, 0), (1, 1), (1, 0), (1, 0)]);
    assert!((rips[1].gap0.unwrap() - 1.0).abs() < 1e-8);
    assert!((rips[2].gap0.unwrap() - 4.0).abs() < 1e-8 && (rips[2].gap1.unwrap() - 2.0).abs() < 1e-8);
    assert_eq!((two[1].betti0, two[1].betti1), (1, 1));
    assert!((two[1].gap0.unwrap() - rips[1].gap0.unwrap()).abs() < 1e-8);
    assert_eq!((two[2].betti0, two[2].betti1), (1, 1));
    assert!((two[2].gap0.unwrap() - 1.0).abs() < 1e-8 && (two[2].gap1.unwrap() - 1.0).abs() < 1e-8);
    assert!((two[3].gap0.unwrap() - 3.0).abs() < 1e-8 && (two[3].gap1.unwrap() - 3.0).abs() < 1e-8);
    assert_eq!(persistence::spectral_gap_curve(&f, 1, &tol).unwrap()[0].1, Gap::Empty);

    let dir = tempfile::tempdir().unwrap();
    for format in [CurveFormat::Csv, CurveFormat::Json] {
        let path = dir.path().join("curves");
        io::emit_curves(&rips, &path, format).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        let parsed = io::parse_curves(&text, format).unwrap();
        assert_eq!(parsed.len(), 4);
        assert_eq!(io::format_curves(&parsed, format).unwrap(), text);
        for (x, y) in parsed.iter().zip(&rips) {
            assert!((x.threshold - y.threshold).abs() <= 1e-9 * y.threshold);
            assert_eq!((x.betti0, x.betti1), (y.betti0, y.betti1));
        }
    }
}

#[test]
fn radius_scale_doubles_thresholds() {
    let t = io::resolve_thresholds(&io::parse_range("1.05:2.05:0.5").unwrap(), Scale::Radius).unwrap();
    assert_eq!(t, vec![2.1, 3.1, 4.1]);
}

#[test]
fn molecules_load() {
    let c20 = io::parse_point_cloud(&data_path("c20.xyz"), CloudFormat::Xyz).unwrap();
    assert_eq!(c20.len(), 20);
    assert!(c20.labels().iter().all(|l| l.as_deref() == Some("C")));
    let c60 = io::parse_point_cloud(&data_path("c60.xyz"), CloudFormat::Xyz).unwrap();
    assert_eq!(c60.len(), 60);
    let k = rips_complex(&c60, 1.45, 1).unwrap();
    assert_eq!(k.counts(), vec![60, 90]);
    assert_eq!(complex::betti_numbers(&k, &Tolerance::default()).unwrap(), vec![1, 31]);
}
