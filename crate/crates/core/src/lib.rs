//! Warping degrees and warping sums of knot diagrams.

pub mod codes;
pub mod diagram;
pub mod error;
pub mod families;
pub mod oracle;
pub mod table;
pub mod warping;

pub use codes::{GaussCode, Notation, Occurrence, Sign, Strand};
pub use diagram::OrientedDiagram;
pub use error::Error;
pub use warping::{profile, summary, warping_degree, WarpingProfile, WarpingSummary};
