//! Word-representability of graphs, with emphasis on split graphs.
//!
//! A graph is word-representable when some word over its vertices has
//! letters `x` and `y` alternating exactly when `xy` is an edge. Equivalently
//! the graph admits a semi-transitive orientation. The [`split`] and
//! [`characterization`] modules decide the question for split graphs using
//! forbidden induced subgraphs, with exhaustive search as a fallback oracle.

pub mod characterization;
pub mod error;
pub mod families;
pub mod graph;
pub mod orientation;
pub mod split;
pub mod word;

pub use characterization::{classify, classify_split, Reason, Verdict, Witness};
pub use error::*;
pub use graph::{Graph, VertexSet};
pub use families::FamilyId;
pub use orientation::OrientedGraph;
pub use split::SplitPartition;
pub use word::Word;
