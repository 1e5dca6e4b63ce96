//! One constructive procedure per audited claim. Every colorer returns a
//! [`ColoredInstance`] whose coloring the caller re-verifies.

pub mod adjacent_cycle;
pub mod an_star3;
pub mod circulant;
pub mod dihedral;
pub mod kneser;
pub mod sn_tm;

use crate::coloring::TotalColoring;
use crate::graph::Graph;

/// A construction outcome: the graph, its coloring, and a replayable log.
pub struct ColoredInstance {
    pub graph: Graph,
    pub coloring: TotalColoring,
    pub log: Vec<String>,
}
