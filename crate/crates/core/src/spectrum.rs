use serde::Serialize;

use crate::error::Result;
use crate::linalg::{self, Matrix, Tolerance};

/// Smallest strictly positive eigenvalue, or why there is none.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Gap {
    Value(f64),
    /// Nonempty spectrum made entirely of zeros.
    AllZero,
    /// No chains in this dimension.
    Empty,
}

impl Gap {
    pub fn value(&self) -> Option<f64> {
        match self {
            Gap::Value(v) => Some(*v),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralReport {
    pub dimension: usize,
    /// Ascending, with near-zero values snapped to `0.0`.
    pub eigenvalues: Vec<f64>,
    pub betti: usize,
    pub gap: Gap,
}

impl SpectralReport {
    pub fn from_eigenvalues(dimension: usize, eigenvalues: Vec<f64>) -> Self {
        let betti = eigenvalues.iter().filter(|&&x| x == 0.0).count();
        let gap = if eigenvalues.is_empty() {
            Gap::Empty
        } else {
            eigenvalues.iter().copied().find(|&x| x > 0.0).map_or(Gap::AllZero, Gap::Value)
        };
        SpectralReport { dimension, eigenvalues, betti, gap }
    }

    pub fn of_matrix(dimension: usize, laplacian: &Matrix, tol: &Tolerance) -> Result<Self> {
        Ok(Self::from_eigenvalues(dimension, linalg::symmetric_eigenvalues(laplacian, tol)?))
    }
}
