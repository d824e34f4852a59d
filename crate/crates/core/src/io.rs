//! File formats: point clouds, combinatorial inputs, curve tables and
//! generator listings.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chain::Cell;
use crate::complex::{PointCloud, RipsParams};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::hyperdigraph::Hyperdigraph;
use crate::hypergraph::{self, Hypergraph};
use crate::linalg::{Matrix, Tolerance};
use crate::persistence::{self, Filtration};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CloudFormat {
    Csv,
    Xyz,
}

impl CloudFormat {
    /// Guesses from the file extension; anything but `.xyz` reads as CSV.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("xyz") => CloudFormat::Xyz,
            _ => CloudFormat::Csv,
        }
    }
}

impl FromStr for CloudFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(CloudFormat::Csv),
            "xyz" => Ok(CloudFormat::Xyz),
            _ => Err(Error::input(format!("unknown point cloud format '{s}'"))),
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })
}

pub fn parse_point_cloud(path: &Path, format: CloudFormat) -> Result<PointCloud> {
    parse_point_cloud_str(&read(path)?, format)
}

pub fn parse_point_cloud_str(text: &str, format: CloudFormat) -> Result<PointCloud> {
    let cloud = match format {
        CloudFormat::Csv => parse_csv_cloud(text)?,
        CloudFormat::Xyz => parse_xyz(text)?,
    };
    if cloud.is_empty() {
        log::warn!("point cloud is empty");
    }
    Ok(cloud)
}

/// One point per line; a trailing non-numeric field is a label.
fn parse_csv_cloud(text: &str) -> Result<PointCloud> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut points = Vec::new();
    let mut labels = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line() as usize);
            Error::parse(line, e.to_string())
        })?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        let fields: Vec<&str> = record.iter().collect();
        if fields.iter().all(|f| f.is_empty()) {
            continue;
        }
        let (coords, label) = match fields.split_last() {
            Some((last, rest)) if last.parse::<f64>().is_err() && !rest.is_empty() => (rest, Some(last.to_string())),
            _ => (fields.as_slice(), None),
        };
        let point = coords
            .iter()
            .map(|f| f.parse::<f64>().map_err(|_| Error::parse(line, format!("'{f}' is not a number"))))
            .collect::<Result<Vec<f64>>>()?;
        if point.iter().any(|x| !x.is_finite()) {
            return Err(Error::parse(line, "non-finite coordinate"));
        }
        points.push(point);
        labels.push(label);
    }
    PointCloud::with_labels(points, labels)
}

/// Count line, comment line, then `Element x y z` lines.
fn parse_xyz(text: &str) -> Result<PointCloud> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let Some((_, first)) = lines.by_ref().find(|(_, l)| !l.is_empty()) else {
        return Ok(PointCloud::default());
    };
    let count: usize = first.parse().map_err(|_| Error::parse(1, format!("expected an atom count, got '{first}'")))?;
    lines.next();
    let mut points = Vec::with_capacity(count);
    let mut labels = Vec::with_capacity(count);
    for (line, l) in lines {
        if points.len() == count {
            if !l.is_empty() {
                log::warn!("ignoring content after {count} atoms (line {line})");
            }
            break;
        }
        let fields: Vec<&str> = l.split_whitespace().collect();
        if fields.len() < 4 {
            return Err(Error::parse(line, "expected 'Element x y z'"));
        }
        let xyz = fields[1..4]
            .iter()
            .map(|f| f.parse::<f64>().map_err(|_| Error::parse(line, format!("'{f}' is not a number"))))
            .collect::<Result<Vec<f64>>>()?;
        points.push(xyz);
        labels.push(Some(fields[0].to_string()));
    }
    if points.len() != count {
        return Err(Error::input(format!("header announces {count} atoms but {} were read", points.len())));
    }
    PointCloud::with_labels(points, labels)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombinatorialKind {
    Hypergraph,
    Digraph,
    Hyperdigraph,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Combinatorial {
    Hypergraph(Hypergraph),
    Digraph(Digraph),
    Hyperdigraph(Hyperdigraph),
}

pub fn parse_combinatorial(path: &Path, kind: CombinatorialKind) -> Result<Combinatorial> {
    parse_combinatorial_str(&read(path)?, kind)
}

/// One edge per line as whitespace-separated vertex ids; `#` starts a comment.
pub fn parse_combinatorial_str(text: &str, kind: CombinatorialKind) -> Result<Combinatorial> {
    let mut rows: Vec<(usize, Vec<usize>)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let ids = body
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| Error::parse(line, format!("'{t}' is not a vertex id"))))
            .collect::<Result<Vec<usize>>>()?;
        let mut seen = ids.clone();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::parse(line, "repeated vertex"));
        }
        rows.push((line, ids));
    }
    match kind {
        CombinatorialKind::Hypergraph => {
            let edges: Vec<Vec<usize>> = rows.into_iter().map(|(_, e)| e).collect();
            Ok(Combinatorial::Hypergraph(Hypergraph::new(&edges)?))
        }
        CombinatorialKind::Digraph => {
            let mut vertices = Vec::new();
            let mut edges: Vec<(usize, usize)> = Vec::new();
            for (line, ids) in rows {
                match ids.as_slice() {
                    [v] => vertices.push(*v),
                    [a, b] => {
                        if edges.contains(&(*a, *b)) {
                            return Err(Error::parse(line, format!("duplicate edge {a} -> {b}")));
                        }
                        edges.push((*a, *b));
                    }
                    _ => return Err(Error::parse(line, "a digraph line holds one vertex or one edge")),
                }
            }
            Ok(Combinatorial::Digraph(Digraph::new(&vertices, &edges)?))
        }
        CombinatorialKind::Hyperdigraph => {
            let mut seqs: Vec<Vec<usize>> = Vec::new();
            for (line, ids) in rows {
                if seqs.contains(&ids) {
                    return Err(Error::parse(line, "duplicate directed hyperedge"));
                }
                seqs.push(ids);
            }
            Ok(Combinatorial::Hyperdigraph(Hyperdigraph::new(&seqs)?))
        }
    }
}

/// One row of a Betti/spectral-gap curve table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveRecord {
    pub threshold: f64,
    pub betti0: usize,
    pub betti1: usize,
    pub gap0: Option<f64>,
    pub gap1: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurveFormat {
    Csv,
    Json,
}

impl FromStr for CurveFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(CurveFormat::Csv),
            "json" => Ok(CurveFormat::Json),
            _ => Err(Error::input(format!("unknown output format '{s}'"))),
        }
    }
}

/// Formats like C's `%.{digits}g`.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific notation");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= digits as i32 {
        let m = trim_fraction(mantissa);
        format!("{m}e{}{:02}", if exp < 0 { '-' } else { '+' }, exp.abs())
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_fraction(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Rounds to 10 significant digits, the precision of every emitted float.
pub fn round_significant(x: f64) -> f64 {
    format_significant(x, 10).parse().expect("formatted float parses")
}

pub fn format_curves(records: &[CurveRecord], format: CurveFormat) -> Result<String> {
    if records.is_empty() {
        return Err(Error::input("no curve records to emit"));
    }
    match format {
        CurveFormat::Csv => {
            let mut out = String::from("threshold,betti0,betti1,gap0,gap1\n");
            let gap = |g: Option<f64>| g.map_or(String::new(), |v| format_significant(v, 10));
            for r in records {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    format_significant(r.threshold, 10),
                    r.betti0,
                    r.betti1,
                    gap(r.gap0),
                    gap(r.gap1)
                )
                .expect("writing to a String");
            }
            Ok(out)
        }
        CurveFormat::Json => {
            let rounded: Vec<CurveRecord> = records
                .iter()
                .map(|r| CurveRecord {
                    threshold: round_significant(r.threshold),
                    betti0: r.betti0,
                    betti1: r.betti1,
                    gap0: r.gap0.map(round_significant),
                    gap1: r.gap1.map(round_significant),
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&rounded).map_err(|e| Error::Internal(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
    }
}

pub fn emit_curves(records: &[CurveRecord], path: &Path, format: CurveFormat) -> Result<()> {
    let text = format_curves(records, format)?;
    fs::write(path, text).map_err(|source| Error::Io { path: path.to_path_buf(), source })
}

pub fn parse_curves(text: &str, format: CurveFormat) -> Result<Vec<CurveRecord>> {
    match format {
        CurveFormat::Json => serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string())),
        CurveFormat::Csv => {
            let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(text.as_bytes());
            let mut out = Vec::new();
            for record in reader.records() {
                let record =
                    record.map_err(|e| Error::parse(e.position().map_or(0, |p| p.line() as usize), e.to_string()))?;
                let line = record.position().map_or(0, |p| p.line() as usize);
                if record.len() != 5 {
                    return Err(Error::parse(line, format!("expected 5 fields, found {}", record.len())));
                }
                let num = |i: usize| -> Result<f64> {
                    record[i].parse().map_err(|_| Error::parse(line, format!("'{}' is not a number", &record[i])))
                };
                let count = |i: usize| -> Result<usize> {
                    record[i].parse().map_err(|_| Error::parse(line, format!("'{}' is not a count", &record[i])))
                };
                let gap = |i: usize| -> Result<Option<f64>> {
                    if record[i].is_empty() {
                        Ok(None)
                    } else {
                        num(i).map(Some)
                    }
                };
                out.push(CurveRecord {
                    threshold: num(0)?,
                    betti0: count(1)?,
                    betti1: count(2)?,
                    gap0: gap(3)?,
                    gap1: gap(4)?,
                });
            }
            Ok(out)
        }
    }
}

/// Betti and gap curves of a Rips filtration in dimensions 0 and 1.
pub fn rips_curve_records(f: &Filtration, tol: &Tolerance) -> Result<Vec<CurveRecord>> {
    let b0 = persistence::betti_curve(f, 0, tol)?;
    let g0 = persistence::spectral_gap_curve(f, 0, tol)?;
    let (b1, g1) = if f.max_dim() >= 1 {
        (persistence::betti_curve(f, 1, tol)?, persistence::spectral_gap_curve(f, 1, tol)?)
    } else {
        (b0.iter().map(|&(t, _)| (t, 0)).collect(), g0.iter().map(|&(t, _)| (t, crate::Gap::Empty)).collect())
    };
    Ok((0..b0.len())
        .map(|i| CurveRecord {
            threshold: b0[i].0,
            betti0: b0[i].1,
            betti1: b1[i].1,
            gap0: g0[i].1.value(),
            gap1: g1[i].1.value(),
        })
        .collect())
}

/// Curves of the two-color Rips hypergraph at each threshold.
pub fn two_color_curve_records(
    cloud: &PointCloud,
    thresholds: &[f64],
    params: RipsParams,
    tol: &Tolerance,
) -> Result<Vec<CurveRecord>> {
    thresholds
        .par_iter()
        .map(|&t| {
            let h = hypergraph::two_color_rips_hypergraph_with(cloud, t, params)?;
            let data = hypergraph::infimum_data(&h, tol)?;
            let betti = data.betti_by_stacking(tol)?;
            let gap = |p: usize| -> Result<Option<f64>> {
                if p >= data.len() {
                    return Ok(None);
                }
                Ok(data.spectral_report(p, tol)?.gap.value())
            };
            Ok(CurveRecord {
                threshold: t,
                betti0: betti.first().copied().unwrap_or(0),
                betti1: betti.get(1).copied().unwrap_or(0),
                gap0: gap(0)?,
                gap1: gap(1)?,
            })
        })
        .collect()
}

/// Python-style float display of a value rounded to `decimals` places.
fn display_coefficient(x: f64, decimals: usize) -> String {
    let s = format!("{x:.decimals$}");
    let s = trim_fraction(&s);
    if s.contains('.') {
        s.to_string()
    } else {
        format!("{s}.0")
    }
}

fn format_cell(c: &[usize]) -> String {
    let inner: Vec<String> = c.iter().map(usize::to_string).collect();
    format!("[{}]", inner.join(", "))
}

/// Renders each row of `w` as a signed combination of the basis cells, e.g.
/// `0.5 [0, 1] -0.5 [0, 2]`. Rows are joined by `and`; no rows gives `none`.
pub fn format_generators(basis: &[Cell], w: &Matrix, decimals: usize) -> Result<String> {
    if w.rows() == 0 {
        return Ok("none".into());
    }
    if w.cols() != basis.len() {
        return Err(Error::input(format!("generator matrix has {} columns for {} basis cells", w.cols(), basis.len())));
    }
    let unit = 0.5 * 10f64.powi(-(decimals as i32));
    let rows: Vec<String> = (0..w.rows())
        .map(|i| {
            let mut out = String::new();
            for (x, cell) in w.row(i).iter().zip(basis) {
                if x.abs() < unit {
                    continue;
                }
                let mag = display_coefficient(x.abs(), decimals);
                let term = match (out.is_empty(), *x < 0.0) {
                    (true, false) => format!("{mag} {}", format_cell(cell)),
                    (true, true) => format!("-{mag} {}", format_cell(cell)),
                    (false, false) => format!(" + {mag} {}", format_cell(cell)),
                    (false, true) => format!(" -{mag} {}", format_cell(cell)),
                };
                out.push_str(&term);
            }
            if out.is_empty() {
                "0".into()
            } else {
                out
            }
        })
        .collect();
    Ok(rows.join(" and "))
}

/// Whether thresholds compare against pair distance or against half of it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Scale {
    #[default]
    Distance,
    Radius,
}

impl Scale {
    pub fn to_distance(self, t: f64) -> f64 {
        match self {
            Scale::Distance => t,
            Scale::Radius => 2.0 * t,
        }
    }
}

impl FromStr for Scale {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "distance" => Ok(Scale::Distance),
            "radius" => Ok(Scale::Radius),
            _ => Err(Error::input(format!("unknown scale '{s}'"))),
        }
    }
}

/// Parses `start:stop:step` into an inclusive ascending grid.
pub fn parse_range(spec: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = spec.split(':').collect();
    let [start, stop, step] = parts.as_slice() else {
        return Err(Error::input(format!("range '{spec}' must look like start:stop:step")));
    };
    let num = |s: &str| s.trim().parse::<f64>().map_err(|_| Error::input(format!("'{s}' is not a number")));
    let (start, stop, step) = (num(start)?, num(stop)?, num(step)?);
    if !step.is_finite() || step <= 0.0 || !start.is_finite() || !stop.is_finite() {
        return Err(Error::input("range step must be positive and bounds finite"));
    }
    if stop < start {
        return Err(Error::input("range stop is below its start"));
    }
    let n = ((stop - start) / step + 1e-9).floor() as usize;
    Ok((0..=n).map(|i| round_to_digits(start + i as f64 * step, 12)).collect())
}

fn round_to_digits(x: f64, digits: usize) -> f64 {
    format_significant(x, digits).parse().expect("formatted float parses")
}

/// Parses a comma-separated threshold list.
pub fn parse_threshold_list(spec: &str) -> Result<Vec<f64>> {
    spec.split(',')
        .map(|s| s.trim().parse::<f64>().map_err(|_| Error::input(format!("'{s}' is not a number"))))
        .collect()
}

/// Converts to distance scale and checks the list is nonempty and strictly increasing.
pub fn resolve_thresholds(values: &[f64], scale: Scale) -> Result<Vec<f64>> {
    if values.is_empty() {
        return Err(Error::input("no thresholds given"));
    }
    if values.iter().any(|t| !t.is_finite() || *t < 0.0) {
        return Err(Error::input("thresholds must be finite and non-negative"));
    }
    if values.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::input("thresholds must be strictly increasing"));
    }
    Ok(values.iter().map(|&t| scale.to_distance(t)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_cloud() {
        let c = parse_point_cloud_str("0,0,0\n0,1,0\n", CloudFormat::Csv).unwrap();
        assert_eq!((c.len(), c.ambient_dim()), (2, 3));
        let c = parse_point_cloud_str("# hexagon\n2,0,red\n1, 1.5, blue\n", CloudFormat::Csv).unwrap();
        assert_eq!(c.labels()[1].as_deref(), Some("blue"));
        assert_eq!(c.points()[1], vec![1.0, 1.5]);
        assert!(parse_point_cloud_str("", CloudFormat::Csv).unwrap().is_empty());
        let err = parse_point_cloud_str("0,0\n1,x,2\n", CloudFormat::Csv).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err:?}");
        assert!(matches!(parse_point_cloud_str("0,0\n1,2,3\n", CloudFormat::Csv), Err(Error::Input(_))));
    }

    #[test]
    fn xyz_cloud() {
        let text = "2\nwater-ish\nO 0.0 0.0 0.0\nH 0.96 0 0\n";
        let c = parse_point_cloud_str(text, CloudFormat::Xyz).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.labels()[0].as_deref(), Some("O"));
        assert!(parse_point_cloud_str("3\nx\nC 0 0 0\n", CloudFormat::Xyz).is_err());
        assert!(matches!(parse_point_cloud_str("2\nx\nC 0 0\n", CloudFormat::Xyz), Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn combinatorial_inputs() {
        let Combinatorial::Hypergraph(h) =
            parse_combinatorial_str("0 1\n1 2 3\n", CombinatorialKind::Hypergraph).unwrap()
        else {
            panic!()
        };
        assert_eq!(h.hyperedges(), &[vec![0, 1], vec![1, 2, 3]]);
        let Combinatorial::Digraph(g) =
            parse_combinatorial_str("0 1\n1 0 # back\n", CombinatorialKind::Digraph).unwrap()
        else {
            panic!()
        };
        assert_eq!(g.edges(), &[(0, 1), (1, 0)]);
        let err = parse_combinatorial_str("0 1\n0 1\n", CombinatorialKind::Digraph).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(parse_combinatorial_str("0 1 0\n", CombinatorialKind::Hyperdigraph).is_err());
        let Combinatorial::Hyperdigraph(hd) =
            parse_combinatorial_str("1 0\n0\n", CombinatorialKind::Hyperdigraph).unwrap()
        else {
            panic!()
        };
        assert_eq!(hd.directed_hyperedges(), &[vec![0], vec![1, 0]]);
    }

    #[test]
    fn significant_digits() {
        assert_eq!(format_significant(2.1, 10), "2.1");
        assert_eq!(format_significant(1.0, 10), "1");
        assert_eq!(format_significant(0.9999999999999999, 10), "1");
        assert_eq!(format_significant(3.498742631289132, 10), "3.498742631");
        assert_eq!(format_significant(1.5e-7, 10), "1.5e-07");
        assert_eq!(format_significant(12345678901.0, 10), "1.23456789e+10");
        assert_eq!(format_significant(-0.25, 10), "-0.25");
    }

    fn sample() -> Vec<CurveRecord> {
        vec![
            CurveRecord { threshold: 1.9, betti0: 6, betti1: 0, gap0: None, gap1: None },
            CurveRecord { threshold: 2.1, betti0: 1, betti1: 1, gap0: Some(1.0000000000000004), gap1: Some(2.0 / 3.0) },
        ]
    }

    #[test]
    fn curve_round_trips() {
        for format in [CurveFormat::Csv, CurveFormat::Json] {
            let text = format_curves(&sample(), format).unwrap();
            let parsed = parse_curves(&text, format).unwrap();
            assert_eq!(format_curves(&parsed, format).unwrap(), text);
            assert_eq!(parsed[0].gap0, None);
        }
        let csv = format_curves(&sample(), CurveFormat::Csv).unwrap();
        assert_eq!(csv, "threshold,betti0,betti1,gap0,gap1\n1.9,6,0,,\n2.1,1,1,1,0.6666666667\n");
        assert!(format_curves(&[], CurveFormat::Csv).is_err());
    }

    #[test]
    fn emit_to_unwritable_path_is_io_error() {
        let err = emit_curves(&sample(), Path::new("/nonexistent-dir/x.csv"), CurveFormat::Csv).unwrap_err();
        assert_eq!(err.category(), "io");
    }

    #[test]
    fn generator_text() {
        let basis = vec![vec![0, 1], vec![0, 2], vec![1, 3], vec![2, 3]];
        let w = Matrix::from_rows(&[[0.5, -0.5, 0.5, -0.5]]);
        assert_eq!(format_generators(&basis, &w, 7).unwrap(), "0.5 [0, 1] -0.5 [0, 2] + 0.5 [1, 3] -0.5 [2, 3]");
        assert_eq!(format_generators(&basis, &Matrix::zeros(0, 4), 7).unwrap(), "none");
        let one = Matrix::from_rows(&[[1.0]]);
        assert_eq!(format_generators(&[vec![0, 1]], &one, 7).unwrap(), "1.0 [0, 1]");
        let s = 1.0 / 6f64.sqrt();
        let w = Matrix::from_rows(&[[-s, s]]);
        assert_eq!(
            format_generators(&[vec![0, 1], vec![1, 2]], &w, 7).unwrap(),
            "-0.4082483 [0, 1] + 0.4082483 [1, 2]"
        );
        assert!(format_generators(&basis, &one, 7).is_err());
    }

    #[test]
    fn thresholds() {
        assert_eq!(parse_range("0.1:0.5:0.1").unwrap(), vec![0.1, 0.2, 0.3, 0.4, 0.5]);
        assert_eq!(parse_range("1:1:0.5").unwrap(), vec![1.0]);
        assert!(parse_range("1:0:0.5").is_err());
        assert!(parse_range("1:2").is_err());
        assert_eq!(parse_threshold_list("1.1, 1.3").unwrap(), vec![1.1, 1.3]);
        assert_eq!(resolve_thresholds(&[1.0, 1.5], Scale::Radius).unwrap(), vec![2.0, 3.0]);
        assert!(resolve_thresholds(&[1.3, 1.1], Scale::Distance).is_err());
        assert!(resolve_thresholds(&[], Scale::Distance).is_err());
    }
}
