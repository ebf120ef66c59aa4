//! Monochromatic-structure extraction.
//!
//! Given a two-colouring of `K_N`, the pipelines look for a monochromatic copy
//! of a biclique-path graph (Case 1) or a clique-path graph (Case 2) the way a
//! constructive proof would: a long monochromatic path, a greedy tiling of
//! its tail by bicliques or cliques in the other colour, and an assembly step.
//! Every run ends either in a [`MonoEmbedding`] or in a [`StepFailure`]
//! whose payload can be checked against the colouring on its own.

mod clique_paths;
mod path;
mod pipeline;
mod tiling;
mod trace;

pub use clique_paths::{cover_by_clique_paths, cover_by_clique_paths_in, CliquePath};
pub use path::{find_long_mono_path, longest_mono_path_exhaustive};
pub use pipeline::{extract_case1, extract_case1_traced, extract_case2, extract_case2_traced};
pub use tiling::{greedy_mono_tiling, stitch_case1};
pub use trace::{Trace, TraceOutcome, TraceStep};

use serde::{Deserialize, Serialize};

use crate::colouring::EdgeColouring;
use crate::graph::{Embedding, Graph};

/// A copy of a target graph all of whose edges have colour `colour`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoEmbedding {
    pub colour: u8,
    pub embedding: Embedding,
}

impl MonoEmbedding {
    /// Injective, in range, and every pattern edge lands on a pair of `colour`.
    pub fn verify(&self, c: &EdgeColouring, pattern: &Graph) -> bool {
        let map = &self.embedding.map;
        if map.len() != pattern.n() || map.iter().any(|&v| v >= c.n()) {
            return false;
        }
        let mut seen = vec![false; c.n()];
        for &v in map {
            if std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        pattern.edges().iter().all(|&(u, v)| c.get(map[u], map[v]) == self.colour)
    }
}

/// Why a clique cover stopped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoverFailure {
    /// Pairwise `colour` vertices, one per end-clique.
    Clique { colour: u8, vertices: Vec<usize> },
    /// Every vertex of `clique` is already a link endpoint.
    NoRepresentative { clique: Vec<usize>, used: Vec<usize> },
}

/// A certified failure of one pipeline step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StepFailure {
    MonoPathTooShort {
        colour: u8,
        path: Vec<usize>,
        required: usize,
    },
    RedBicliquePresent {
        colour: u8,
        embedding: Embedding,
    },
    TileShortfall {
        colour: u8,
        tiles: Vec<Embedding>,
        required: usize,
    },
    /// All pairs between `b_side` and `a_side` have `colour`: a `K_{t,t}` in
    /// the colour the tiling was supposed to avoid.
    ConnectorMissing {
        colour: u8,
        b_side: Vec<usize>,
        a_side: Vec<usize>,
    },
    CliqueCoverFail(CoverFailure),
    AssemblyShortfall {
        colour: u8,
        paths: Vec<CliquePath>,
        t: usize,
        n: usize,
    },
}

impl StepFailure {
    pub fn name(&self) -> &'static str {
        match self {
            StepFailure::MonoPathTooShort { .. } => "MONO_PATH_TOO_SHORT",
            StepFailure::RedBicliquePresent { .. } => "RED_BICLIQUE_PRESENT",
            StepFailure::TileShortfall { .. } => "TILE_SHORTFALL",
            StepFailure::ConnectorMissing { .. } => "CONNECTOR_MISSING",
            StepFailure::CliqueCoverFail(_) => "CLIQUE_COVER_FAIL",
            StepFailure::AssemblyShortfall { .. } => "ASSEMBLY_SHORTFALL",
        }
    }

    /// Checks the payload against `c` directly. `t` is the biclique side or
    /// clique order of the run.
    pub fn verify(&self, c: &EdgeColouring, t: usize) -> bool {
        let in_range = |vs: &[usize]| vs.iter().all(|&v| v < c.n());
        match self {
            StepFailure::MonoPathTooShort { colour, path, required } => {
                in_range(path) && distinct(path) && path.len() < *required && is_mono_path(c, path, *colour)
            }
            StepFailure::RedBicliquePresent { colour, embedding } => MonoEmbedding {
                colour: *colour,
                embedding: embedding.clone(),
            }
            .verify(c, &Graph::complete_bipartite(t, t)),
            StepFailure::TileShortfall { colour, tiles, required } => {
                let pattern = Graph::complete_bipartite(t, t);
                let all: Vec<usize> = tiles.iter().flat_map(|e| e.map.iter().copied()).collect();
                distinct(&all)
                    && all.len() < *required
                    && tiles.iter().all(|e| {
                        MonoEmbedding {
                            colour: *colour,
                            embedding: e.clone(),
                        }
                        .verify(c, &pattern)
                    })
            }
            StepFailure::ConnectorMissing { colour, b_side, a_side } => {
                let both: Vec<usize> = b_side.iter().chain(a_side).copied().collect();
                b_side.len() == t
                    && a_side.len() == t
                    && in_range(&both)
                    && distinct(&both)
                    && b_side.iter().all(|&b| a_side.iter().all(|&a| c.get(a, b) == *colour))
            }
            StepFailure::CliqueCoverFail(CoverFailure::Clique { colour, vertices }) => {
                vertices.len() == t && in_range(vertices) && distinct(vertices) && is_mono_clique(c, vertices, *colour)
            }
            StepFailure::CliqueCoverFail(CoverFailure::NoRepresentative { clique, used }) => {
                !clique.is_empty() && clique.iter().all(|v| used.contains(v))
            }
            StepFailure::AssemblyShortfall { colour, paths, t: tt, n } => {
                *tt == t
                    && paths.iter().all(|p| p.verify_in(c, *colour, t))
                    && paths.iter().map(|p| p.cliques.len()).max().unwrap_or(0) * t < *n
            }
        }
    }

    /// Same failure with the two colours exchanged.
    pub fn swap_colours(&self) -> StepFailure {
        let sw = |c: &u8| 1 - *c;
        match self.clone() {
            StepFailure::MonoPathTooShort { colour, path, required } => StepFailure::MonoPathTooShort {
                colour: sw(&colour),
                path,
                required,
            },
            StepFailure::RedBicliquePresent { colour, embedding } => StepFailure::RedBicliquePresent {
                colour: sw(&colour),
                embedding,
            },
            StepFailure::TileShortfall { colour, tiles, required } => StepFailure::TileShortfall {
                colour: sw(&colour),
                tiles,
                required,
            },
            StepFailure::ConnectorMissing { colour, b_side, a_side } => StepFailure::ConnectorMissing {
                colour: sw(&colour),
                b_side,
                a_side,
            },
            StepFailure::CliqueCoverFail(CoverFailure::Clique { colour, vertices }) => {
                StepFailure::CliqueCoverFail(CoverFailure::Clique {
                    colour: sw(&colour),
                    vertices,
                })
            }
            f @ StepFailure::CliqueCoverFail(CoverFailure::NoRepresentative { .. }) => f,
            StepFailure::AssemblyShortfall { colour, paths, t, n } => StepFailure::AssemblyShortfall {
                colour: sw(&colour),
                paths,
                t,
                n,
            },
        }
    }
}

impl std::fmt::Display for StepFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

pub(crate) fn distinct(vs: &[usize]) -> bool {
    let mut seen = std::collections::HashSet::new();
    vs.iter().all(|v| seen.insert(*v))
}

pub(crate) fn is_mono_path(c: &EdgeColouring, path: &[usize], colour: u8) -> bool {
    path.windows(2).all(|w| c.get(w[0], w[1]) == colour)
}

pub(crate) fn is_mono_clique(c: &EdgeColouring, vs: &[usize], colour: u8) -> bool {
    vs.iter()
        .enumerate()
        .all(|(i, &u)| vs[i + 1..].iter().all(|&v| c.get(u, v) == colour))
}
