//! Exact solvers at desk scale.

mod covers;
mod extremes;
mod forcing_number;
mod invariants;

use serde::{Deserialize, Serialize};

use crate::graph::{OrientedGraph, VertexSet};

pub use covers::{
    induced_kary_cover_number, induced_kary_cover_number_with, path_cover_number,
    tree_cover_number, CoverPart, TreeCover, COVER_LIMIT, PATH_COVER_LIMIT,
};
pub use extremes::{
    extreme_profile, max_oriented_forcing, min_oriented_forcing, orientation_extreme, Extreme,
    ExtremeOptions, KExtremes, EXTREME_EDGE_LIMIT,
};
pub use forcing_number::{
    forcing_number_masks, min_forcing_number, min_forcing_number_with_limit, SUBSET_LIMIT,
};
pub use invariants::{
    clique_number, degree_invariants, diameter, independence_number, induced_matching_number,
    matching_number, InvariantValue, InvariantWitness, Number, CLIQUE_LIMIT, MATCHING_LIMIT,
    MIM_LIMIT,
};

/// Witness attached to a [`SolveResult`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    ForcingSet {
        set: VertexSet,
    },
    Orientation {
        /// Direction bits read as an integer (bit `i` belongs to edge `i`).
        bits: u64,
        orientation: OrientedGraph,
        forcing_set: VertexSet,
    },
}

impl Witness {
    pub fn forcing_set(&self) -> &VertexSet {
        match self {
            Witness::ForcingSet { set } => set,
            Witness::Orientation { forcing_set, .. } => forcing_set,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolveResult {
    pub problem: String,
    pub parameters: serde_json::Value,
    pub value: usize,
    pub witness: Witness,
    /// Forcing-set candidates tested (`fk`) or orientations scored (`mof`, `MOF`).
    pub explored: u64,
    pub limits_hit: bool,
}
