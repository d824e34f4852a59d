pub mod chain;
pub mod complex;
pub mod digraph;
pub mod error;
pub mod hyperdigraph;
pub mod hypergraph;
pub mod infimum;
pub mod io;
pub mod linalg;
pub mod persistence;
pub mod spectrum;

pub use chain::{BoundaryBlocks, Cell, SparseBlock};
pub use complex::{PointCloud, RipsParams, SimplicialComplex};
pub use digraph::{Digraph, PathBasis};
pub use error::{Error, Result};
pub use hyperdigraph::Hyperdigraph;
pub use hypergraph::Hypergraph;
pub use infimum::{InfimumChainData, InfimumLevel};
pub use io::{CloudFormat, Combinatorial, CombinatorialKind, CurveFormat, CurveRecord, Scale};
pub use linalg::{Matrix, Tolerance};
pub use persistence::{Filtration, HarmonicTrack};
pub use spectrum::{Gap, SpectralReport};
