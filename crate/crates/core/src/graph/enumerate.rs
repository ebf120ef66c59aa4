//! One representative per isomorphism class of small graphs.
//!
//! Graphs on `n` vertices are grown from the classes on `n - 1` vertices by
//! adding a vertex with every possible neighbourhood; children are kept only
//! if their canonical form has not been seen. Every class on `n` vertices is
//! reached this way because deleting any vertex yields some class on `n - 1`.

use std::collections::HashSet;

use super::{canon::canonical_labelling, canonical_form, Graph};
use crate::error::GraphError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFilter {
    All,
    Connected,
    NoIsolated,
}

impl GraphFilter {
    pub fn accepts(self, g: &Graph) -> bool {
        match self {
            GraphFilter::All => true,
            GraphFilter::Connected => g.is_connected(),
            GraphFilter::NoIsolated => !g.has_isolated_vertex(),
        }
    }
}

pub const MAX_ENUMERATION_ORDER: usize = 8;

/// Canonical representatives on `n` vertices, ordered by edge count and then
/// canonical key.
pub fn enumerate_graphs(n: usize, filter: GraphFilter) -> Result<Vec<Graph>, GraphError> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(GraphError::EnumerationRange(n));
    }
    let mut level = vec![Graph::empty(1)];
    for m in 1..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for parent in &level {
            for nbhd in 0u64..1 << m {
                let mut rows = parent.rows().to_vec();
                rows.push(nbhd);
                for v in 0..m {
                    if nbhd >> v & 1 == 1 {
                        rows[v] |= 1 << m;
                    }
                }
                let child = Graph::from_rows(rows).expect("extension is a simple graph");
                let lab = canonical_labelling(&child);
                if seen.insert(lab.certificate.clone()) {
                    next.push(Graph::from_rows(lab.certificate).expect("canonical rows"));
                }
            }
        }
        level = next;
    }
    let mut out: Vec<(usize, Vec<u8>, Graph)> = level
        .into_iter()
        .filter(|g| filter.accepts(g))
        .map(|g| (g.edge_count(), canonical_form(&g), g))
        .collect();
    out.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    Ok(out.into_iter().map(|(_, _, g)| g).collect())
}
