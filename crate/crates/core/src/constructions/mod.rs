//! Graph families with prescribed Ramsey growth.
//!
//! Each base graph (a biclique, a clique or a complete multipartite graph)
//! gets a pendant path: the path's first vertex is joined by a single edge to
//! vertex 0 of the base, and the path continues on consecutive indices.

mod oracle;
mod select;

pub use oracle::{Family, RamseyOracle, LEDGER_FILE};
pub use select::{build_g, select_t_case1, select_t_case2, BuiltGraph, Case, Preset, Regime};

use crate::error::ConstructionError;
use crate::graph::Graph;

fn with_pendant_path(base: &Graph, n: usize) -> Result<Graph, ConstructionError> {
    let b = base.n();
    let mut g = base.with_isolated(n - b)?;
    for v in b..n {
        g.add_edge(if v == b { 0 } else { v - 1 }, v);
    }
    Ok(g)
}

fn invalid(msg: String) -> ConstructionError {
    ConstructionError::InvalidParameters(msg)
}

/// `K_{t,t}` (class A is `0..t`) plus a pendant path on `n - 2t` vertices.
pub fn biclique_path_graph(t: usize, n: usize) -> Result<Graph, ConstructionError> {
    if t == 0 || n < 2 * t {
        return Err(invalid(format!("biclique path graph needs n >= 2t >= 2, got t={t}, n={n}")));
    }
    with_pendant_path(&Graph::complete_bipartite(t, t), n)
}

/// `K_t` plus a pendant path on `n - t` vertices.
pub fn clique_path_graph(t: usize, n: usize) -> Result<Graph, ConstructionError> {
    if t == 0 || n < t {
        return Err(invalid(format!("clique path graph needs n >= t >= 1, got t={t}, n={n}")));
    }
    with_pendant_path(&Graph::complete(t), n)
}

/// Complete `k`-partite graph with parts of size `t` plus a pendant path.
pub fn multipartite_path_graph(k: usize, t: usize, n: usize) -> Result<Graph, ConstructionError> {
    if k == 0 || t == 0 || n < k * t {
        return Err(invalid(format!("multipartite path graph needs n >= kt >= 1, got k={k}, t={t}, n={n}")));
    }
    if k == 1 && t > 1 {
        return Err(invalid("a single part of size above 1 is disconnected".into()));
    }
    with_pendant_path(&Graph::complete_multipartite(k, t), n)
}

/// `K_{1,a} ∪ K_{1,b}` with centres 0 and `a + 1`.
pub fn double_star(a: usize, b: usize) -> Result<Graph, ConstructionError> {
    if a == 0 || b == 0 {
        return Err(invalid(format!("double star needs a, b >= 1, got ({a}, {b})")));
    }
    Ok(Graph::star(a).disjoint_union(&Graph::star(b))?)
}

/// `K_t` plus `n - t` isolated vertices.
pub fn clique_plus_isolated(t: usize, n: usize) -> Result<Graph, ConstructionError> {
    if n < t {
        return Err(invalid(format!("need n >= t, got t={t}, n={n}")));
    }
    Ok(Graph::complete(t).with_isolated(n - t)?)
}
