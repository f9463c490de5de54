//! Bounds on delta distances: parity and inequality constraints, pathway
//! evidence, the clasp splitting procedure, pathway search and table
//! reproduction.

mod bounds;
mod clasp;
mod graph;
mod props;
mod search;
mod tables;

use core::fmt;

pub use bounds::{combine, Constraint, Derivation, DistanceBound, InconsistentEvidence};
pub use clasp::{clasp_split_upper, Clasp, ClaspWord, NonzeroLinking};
pub use graph::{
    completely_split, parse_edge, replay, verify_edge, EvidenceEdge, PathwayGraph, ReplayError,
    Witness, REPLAY_SIMPLIFY_BUDGET,
};
pub use props::{
    certified_nonsplit, component_names, distance, lower_self, mixed_equivalent, parity_proper,
    parity_self, split_bounds, split_lower, split_parity, sum_component_u, AnalysisError,
    SplitBounds, SplitLower,
};
pub use search::{bfs_pathways, SearchConfig, SearchError, SearchReport};
pub use tables::{
    published_layout, published_unit_edges, reproduce, table3_links, CellStatus, Computed, Printed,
    TableCell, TableModel, TableRow, Which, TABLE3_COLUMNS,
};

/// Which delta moves a distance counts.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum MoveClass {
    SelfDelta,
    Mixed,
    Any,
}

impl MoveClass {
    pub fn name(self) -> &'static str {
        match self {
            MoveClass::SelfDelta => "self",
            MoveClass::Mixed => "mixed",
            MoveClass::Any => "any",
        }
    }

    pub fn parse(text: &str) -> Option<MoveClass> {
        match text {
            "self" => Some(MoveClass::SelfDelta),
            "mixed" => Some(MoveClass::Mixed),
            "any" => Some(MoveClass::Any),
            _ => None,
        }
    }

    /// True when an edge of class `edge` may be used for distances of this class.
    pub fn allows(self, edge: MoveClass) -> bool {
        self == MoveClass::Any || self == edge
    }
}

impl fmt::Display for MoveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
