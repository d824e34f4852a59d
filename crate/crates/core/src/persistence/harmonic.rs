use serde::Serialize;

use super::Filtration;
use crate::chain::Cell;
use crate::complex::hodge_laplacian;
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix, Tolerance};

/// Outcome of carrying the harmonic space at `a` over to `b`.
#[derive(Clone, Debug, Serialize)]
pub struct Transition {
    /// Orthonormal rows over the `p`-basis at `b` spanning the image of the
    /// harmonic space at `a`.
    pub survivors: Matrix,
    pub death_count: usize,
    /// Orthonormal rows over the `p`-basis at `a` spanning the generators
    /// whose class dies.
    pub dying: Matrix,
    /// Combinations of the generators at `a` that are still harmonic at `b`
    /// without any correction.
    pub unchanged: Matrix,
}

/// Orthonormal basis of the harmonic `p`-chains at step `i`, canonically
/// chosen (see [`linalg::canonical_row_basis`]).
pub(crate) fn harmonic_basis_at(f: &Filtration, i: usize, p: usize, tol: &Tolerance) -> Result<Matrix> {
    let step = f.step(i);
    let n = step.count(p);
    if n == 0 {
        return Ok(Matrix::zeros(0, 0));
    }
    let kernel = linalg::symmetric_kernel(&hodge_laplacian(&step.boundary(), p), tol)?;
    linalg::canonical_row_basis(&kernel, tol)
}

/// `W^a`: rows are unit harmonic `p`-chains at `a`, one per Betti class.
pub fn harmonic_space(f: &Filtration, a: f64, p: usize, tol: &Tolerance) -> Result<Matrix> {
    super::check_p(f, p)?;
    harmonic_basis_at(f, f.index_of(a)?, p, tol)
}

fn pad(w: &Matrix, cols: usize) -> Matrix {
    if w.rows() == 0 {
        Matrix::zeros(0, cols)
    } else {
        w.pad_columns(cols - w.cols())
    }
}

fn row_is_zero(m: &Matrix, i: usize, eps: f64) -> bool {
    m.row(i).iter().all(|x| x.abs() <= eps)
}

/// Row combinations of `wp` that make `u` vanish, found by elimination on
/// `u`; unpivoted first, pivoted when that cannot isolate the zero rows.
fn annihilated_rows(wp: &Matrix, u: &Matrix, tol: &Tolerance) -> Result<Matrix> {
    let r = u.rows();
    let eps = tol.zero_eig_tol * u.max_abs().max(1.0);
    let expected = r - linalg::rank(u, tol)?;
    let unpivoted = linalg::triangular_eliminate(u).and_then(|(l, e)| Ok((linalg::lower_triangular_inverse(&l)?, e)));
    let (t, e) = match unpivoted {
        Ok((t, e)) if (0..r).filter(|&i| row_is_zero(&e, i, eps)).count() == expected => (t, e),
        _ => {
            log::debug!("unpivoted elimination could not isolate dead generators; pivoting");
            linalg::pivoted_row_echelon_with_transform(u)
        }
    };
    let zero_rows: Vec<usize> = (0..r).filter(|&i| row_is_zero(&e, i, eps)).collect();
    let combos = t.matmul(wp).select_rows(&zero_rows);
    linalg::canonical_row_basis(&combos, tol)
}

pub(crate) fn transition_from(f: &Filtration, ib: usize, p: usize, wa: &Matrix, tol: &Tolerance) -> Result<Transition> {
    let sb = f.step(ib);
    let nb = sb.count(p);
    let r = wa.rows();
    if r == 0 {
        return Ok(Transition {
            survivors: Matrix::zeros(0, nb),
            death_count: 0,
            dying: Matrix::zeros(0, wa.cols()),
            unchanged: Matrix::zeros(0, nb),
        });
    }
    let wp = pad(wa, nb);
    let bb = sb.boundary();
    let u = wp.matmul(&bb.dense(p + 1).transpose());
    if u.max_abs() <= tol.zero_eig_tol {
        return Ok(Transition {
            survivors: wp.clone(),
            death_count: 0,
            dying: Matrix::zeros(0, wa.cols()),
            unchanged: wp,
        });
    }
    let unchanged = annihilated_rows(&wp, &u, tol)?;
    let wb = harmonic_basis_at(f, ib, p, tol)?;
    // harmonic representatives at b of the classes carried from a
    let coords = if wb.rows() == 0 { Matrix::zeros(r, 0) } else { wp.matmul(&wb.transpose()) };
    let survivors = if wb.rows() == 0 {
        Matrix::zeros(0, nb)
    } else {
        linalg::canonical_row_basis_above(&coords.matmul(&wb), tol, tol.zero_eig_tol)?
    };
    let dying = if coords.cols() == 0 {
        wa.clone()
    } else {
        let c = unit_scale_left_null(&coords, tol)?;
        if c.rows() == 0 {
            Matrix::zeros(0, wa.cols())
        } else {
            linalg::canonical_row_basis(&c.matmul(wa), tol)?
        }
    };
    let death_count = r - survivors.rows();
    if dying.rows() != death_count {
        return Err(Error::Internal(format!(
            "death count {death_count} disagrees with {} dying generators",
            dying.rows()
        )));
    }
    Ok(Transition { survivors, death_count, dying, unchanged })
}

/// Left null space of a matrix whose entries are inner products of unit
/// vectors, treating singular values below `zero_eig_tol` as zero.
fn unit_scale_left_null(m: &Matrix, tol: &Tolerance) -> Result<Matrix> {
    let kept = linalg::row_space_basis_above(&m.transpose(), tol, tol.zero_eig_tol)?;
    // complement of the column space of m inside the row coordinates
    let full = Matrix::identity(m.rows());
    let residual = full.sub(&linalg::project_rows(&full, &kept));
    linalg::canonical_row_basis_above(&residual, tol, tol.zero_eig_tol)
}

/// Carries `W^a` to `b`: surviving generators and the number of deaths.
pub fn harmonic_transition(f: &Filtration, a: f64, b: f64, p: usize, tol: &Tolerance) -> Result<Transition> {
    super::check_p(f, p)?;
    let (ia, ib) = f.pair(a, b)?;
    let wa = harmonic_basis_at(f, ia, p, tol)?;
    transition_from(f, ib, p, &wa, tol)
}

fn births_at(f: &Filtration, ib: usize, p: usize, survivors: &Matrix, tol: &Tolerance) -> Result<Matrix> {
    let wb = harmonic_basis_at(f, ib, p, tol)?;
    let nb = f.step(ib).count(p);
    if wb.rows() == 0 {
        return Ok(Matrix::zeros(0, nb));
    }
    if survivors.rows() > 0 && survivors.cols() != nb {
        return Err(Error::input(format!("survivors have {} columns, expected {nb}", survivors.cols())));
    }
    let residual = wb.sub(&linalg::project_rows(&wb, survivors));
    let births = linalg::canonical_row_basis_above(&residual, tol, tol.zero_eig_tol)?;
    if births.rows() + survivors.rows() != wb.rows() {
        return Err(Error::Internal(format!(
            "{} survivors and {} births do not fill a harmonic space of dimension {}",
            survivors.rows(),
            births.rows(),
            wb.rows()
        )));
    }
    Ok(births)
}

/// Generators born at `b`: the part of the harmonic space at `b` orthogonal
/// to `survivors`.
pub fn harmonic_births(
    f: &Filtration,
    a: f64,
    b: f64,
    p: usize,
    tol: &Tolerance,
    survivors: &Matrix,
) -> Result<Matrix> {
    super::check_p(f, p)?;
    let (_, ib) = f.pair(a, b)?;
    births_at(f, ib, p, survivors, tol)
}

/// Births read off an echelon form of the harmonic basis at `b` taken with
/// the columns reversed, so rows pivoting on new simplices come first.
pub fn harmonic_births_by_elimination(f: &Filtration, a: f64, b: f64, p: usize, tol: &Tolerance) -> Result<Matrix> {
    super::check_p(f, p)?;
    let (ia, ib) = f.pair(a, b)?;
    let wb = harmonic_basis_at(f, ib, p, tol)?;
    let nb = f.step(ib).count(p);
    let new = nb - f.step(ia).count(p);
    if wb.rows() == 0 || new == 0 {
        return Ok(Matrix::zeros(0, nb));
    }
    let reversed: Vec<usize> = (0..nb).rev().collect();
    let echelon = linalg::pivoted_row_echelon(&wb.select_columns(&reversed));
    let eps = 1e-9;
    let rows: Vec<usize> =
        (0..echelon.rows()).filter(|&i| echelon.row(i)[..new].iter().any(|x| x.abs() > eps)).collect();
    let picked = echelon.select_rows(&rows).select_columns(&reversed);
    linalg::canonical_row_basis(&picked, tol)
}

#[derive(Clone, Debug, Serialize)]
pub struct TrackStep {
    pub threshold: f64,
    /// The `p`-simplices indexing the generator columns.
    pub basis: Vec<Cell>,
    /// Orthonormal harmonic generators: survivors first, then births.
    pub generators: Matrix,
    pub survived: usize,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HarmonicEvent {
    Birth { step: usize, threshold: f64, generator: Vec<f64> },
    Death { step: usize, threshold: f64, count: usize, dying: Matrix },
}

#[derive(Clone, Debug, Serialize)]
pub struct HarmonicTrack {
    pub dimension: usize,
    pub steps: Vec<TrackStep>,
    pub events: Vec<HarmonicEvent>,
}

impl HarmonicTrack {
    /// Harmonic space dimension at each threshold.
    pub fn dimensions(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.generators.rows()).collect()
    }

    pub fn births(&self) -> impl Iterator<Item = &HarmonicEvent> {
        self.events.iter().filter(|e| matches!(e, HarmonicEvent::Birth { .. }))
    }

    pub fn deaths(&self) -> impl Iterator<Item = &HarmonicEvent> {
        self.events.iter().filter(|e| matches!(e, HarmonicEvent::Death { .. }))
    }
}

/// Follows harmonic generators through consecutive thresholds.
pub fn track_harmonics(f: &Filtration, p: usize, tol: &Tolerance) -> Result<HarmonicTrack> {
    super::check_p(f, p)?;
    if f.is_empty() {
        return Err(Error::input("the filtration has no thresholds"));
    }
    let mut steps: Vec<TrackStep> = Vec::with_capacity(f.len());
    let mut events = Vec::new();
    for i in 0..f.len() {
        let step = f.step(i);
        let (survivors, births) = if i == 0 {
            let w = harmonic_basis_at(f, 0, p, tol)?;
            (Matrix::zeros(0, step.count(p)), w)
        } else {
            let prev = &steps[i - 1];
            let t = transition_from(f, i, p, &prev.generators, tol)?;
            if t.death_count > 0 {
                events.push(HarmonicEvent::Death {
                    step: i,
                    threshold: step.threshold,
                    count: t.death_count,
                    dying: t.dying.clone(),
                });
            }
            let births = births_at(f, i, p, &t.survivors, tol)?;
            (t.survivors, births)
        };
        for k in 0..births.rows() {
            events.push(HarmonicEvent::Birth { step: i, threshold: step.threshold, generator: births.row(k).to_vec() });
        }
        let survived = survivors.rows();
        let generators = survivors.vstack(&births);
        let generators = if generators.rows() == 0 { Matrix::zeros(0, step.count(p)) } else { generators };
        steps.push(TrackStep { threshold: step.threshold, basis: step.basis(p).to_vec(), generators, survived });
    }
    Ok(HarmonicTrack { dimension: p, steps, events })
}
