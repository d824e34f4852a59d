use serde::Serialize;
use topolap_core::io::{self, format_significant, round_significant};
use topolap_core::persistence::{HarmonicEvent, HarmonicTrack};
use topolap_core::{Error, Result, SimplicialComplex, SpectralReport};

use crate::OutputFormat;

#[derive(Serialize)]
pub struct SpectrumRow {
    pub dimension: usize,
    pub betti: usize,
    pub gap: Option<f64>,
    pub eigenvalues: Vec<f64>,
}

impl From<&SpectralReport> for SpectrumRow {
    fn from(r: &SpectralReport) -> Self {
        SpectrumRow {
            dimension: r.dimension,
            betti: r.betti,
            gap: r.gap.value().map(round_significant),
            eigenvalues: r.eigenvalues.iter().copied().map(round_significant).collect(),
        }
    }
}

fn sig(x: f64) -> String {
    format_significant(x, 10)
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Error::Internal(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn csv_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let internal = |e: csv::Error| Error::Internal(e.to_string());
    w.write_record(header).map_err(internal)?;
    for row in rows {
        w.write_record(&row).map_err(internal)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
}

fn join_cell(c: &[usize]) -> String {
    c.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

pub fn rips(threshold: f64, k: &SimplicialComplex, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Csv => csv_table(
            &["dimension", "simplex"],
            k.simplices().iter().map(|s| vec![(s.len() - 1).to_string(), join_cell(s)]),
        ),
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                threshold: f64,
                dimension: Option<usize>,
                simplices: &'a [Vec<usize>],
            }
            json(&Out { threshold: round_significant(threshold), dimension: k.dim(), simplices: k.simplices() })
        }
    }
}

pub fn betti(threshold: f64, betti: &[usize], format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Csv => csv_table(
            &["dimension", "betti"],
            betti.iter().enumerate().map(|(p, b)| vec![p.to_string(), b.to_string()]),
        ),
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                threshold: f64,
                betti: &'a [usize],
            }
            json(&Out { threshold: round_significant(threshold), betti })
        }
    }
}

pub fn spectra(rows: &[SpectrumRow], format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Csv => csv_table(
            &["dimension", "betti", "gap", "eigenvalues"],
            rows.iter().map(|r| {
                vec![
                    r.dimension.to_string(),
                    r.betti.to_string(),
                    r.gap.map_or(String::new(), sig),
                    r.eigenvalues.iter().map(|&x| sig(x)).collect::<Vec<_>>().join(" "),
                ]
            }),
        ),
        OutputFormat::Json => json(&rows),
    }
}

pub fn track(t: &HarmonicTrack, decimals: usize, format: OutputFormat) -> Result<String> {
    let died = |i: usize| -> usize {
        t.events
            .iter()
            .map(|e| match e {
                HarmonicEvent::Death { step, count, .. } if *step == i => *count,
                _ => 0,
            })
            .sum()
    };
    match format {
        OutputFormat::Csv => {
            let rows = t
                .steps
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    Ok(vec![
                        sig(s.threshold),
                        s.generators.rows().to_string(),
                        s.survived.to_string(),
                        (s.generators.rows() - s.survived).to_string(),
                        died(i).to_string(),
                        io::format_generators(&s.basis, &s.generators, decimals)?,
                    ])
                })
                .collect::<Result<Vec<_>>>()?;
            csv_table(&["threshold", "dimension", "survived", "born", "died", "generators"], rows)
        }
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Step<'a> {
                threshold: f64,
                dimension: usize,
                survived: usize,
                born: usize,
                died: usize,
                basis: &'a [Vec<usize>],
                generators: Vec<Vec<f64>>,
            }
            #[derive(Serialize)]
            struct Out<'a> {
                dimension: usize,
                steps: Vec<Step<'a>>,
            }
            let scale = 10f64.powi(decimals as i32);
            let steps = t
                .steps
                .iter()
                .enumerate()
                .map(|(i, s)| Step {
                    threshold: round_significant(s.threshold),
                    dimension: s.generators.rows(),
                    survived: s.survived,
                    born: s.generators.rows() - s.survived,
                    died: died(i),
                    basis: &s.basis,
                    generators: s
                        .generators
                        .row_vecs()
                        .into_iter()
                        .map(|r| r.into_iter().map(|x| (x * scale).round() / scale + 0.0).collect())
                        .collect(),
                })
                .collect();
            json(&Out { dimension: t.dimension, steps })
        }
    }
}
