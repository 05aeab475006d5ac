//! Growth diagrams on Ferrers shapes.

pub mod chains;
pub mod correspondences;
pub mod enumeration;
pub mod error;
pub mod figures;
pub mod fillings;
pub mod greene;
pub mod growth;
pub mod insertion;
pub mod local_rules;
pub mod partitions;
pub mod shapes;

pub use chains::ChainSpec;
pub use correspondences::{Matching, SetPartition};
pub use enumeration::{Budget, Constraint, CountTable, Instance, Report, Status, TheoremId};
pub use error::{Error, Result};
pub use fillings::{Filling, FillingClass};
pub use growth::{label_diagram, reconstruct, Boundary, GrowthDiagram, OscillatingTableau};
pub use local_rules::Variant;
pub use partitions::Partition;
pub use shapes::{CellBoard, FerrersShape, StackPolyomino, Step};
