//! Combinatorics of Schubert curves in Grassmannians: tableaux, growth
//! diagrams, chains of dual equivalence classes, monodromy of the covering
//! over the real locus, and first-order K-theory coefficients.

pub mod catalog;
pub mod dual;
pub mod error;
pub mod growth;
pub mod ktheory;
pub mod monodromy;
pub mod osculating;
pub mod shapes;
pub mod tableau;

pub use dual::{DEChain, Decgd, DualClass};
pub use error::{Error, Result};
pub use growth::{CylindricalGrowthDiagram, GrowthDiagram};
pub use ktheory::{ParityReport, ParityScan, PieriReport};
pub use monodromy::{
    CircularOrdering, CoveringModel, Generator, MonodromyWord, OrbitReport, OrderingPreset,
};
pub use osculating::{OsculatingReport, PluckerVector, Polynomial};
pub use shapes::{Partition, Rectangle, SkewShape};
pub use tableau::{IncreasingTableau, StandardSkewTableau};
