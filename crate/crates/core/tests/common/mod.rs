//! Brute-force checks written without the library's matchers, canonical
//! forms or search code.

#![allow(dead_code)]

use ramsey_core::constructions::{biclique_path_graph, clique_path_graph};
use ramsey_core::extraction::{CoverFailure, MonoEmbedding, StepFailure};
use ramsey_core::{EdgeColouring, Graph};

/// Some injective map of `pattern` into `vertices` (which must contain
/// `must` if given) with every pattern edge on a pair of `colour`.
fn mono_map(c: &EdgeColouring, pattern: &Graph, colour: u8, vertices: &[usize], must: Option<usize>) -> bool {
    let k = pattern.n();
    let edges = pattern.edges();
    let mut map = Vec::with_capacity(k);
    let mut used = vec![false; c.n()];
    fn rec(
        c: &EdgeColouring,
        edges: &[(usize, usize)],
        k: usize,
        colour: u8,
        vertices: &[usize],
        must: Option<usize>,
        map: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let i = map.len();
        if i == k {
            return must.is_none_or(|m| map.contains(&m));
        }
        for &v in vertices {
            if used[v] {
                continue;
            }
            let ok = edges
                .iter()
                .filter(|&&(a, b)| a.max(b) == i)
                .all(|&(a, b)| c.get(map[a.min(b)], v) == colour);
            if !ok {
                continue;
            }
            used[v] = true;
            map.push(v);
            if rec(c, edges, k, colour, vertices, must, map, used) {
                return true;
            }
            map.pop();
            used[v] = false;
        }
        false
    }
    rec(c, &edges, k, colour, vertices, must, &mut map, &mut used)
}

/// Does `c` contain a monochromatic `pattern`?
pub fn naive_has_mono(c: &EdgeColouring, pattern: &Graph) -> bool {
    if pattern.n() > c.n() {
        return false;
    }
    let all: Vec<usize> = (0..c.n()).collect();
    (0..c.colours()).any(|col| mono_map(c, pattern, col, &all, None))
}

/// `K_n -> (pattern)_2` by enumerating every labelled colouring: literally
/// for `n <= 6`, and by vertex-by-vertex backtracking (still over labelled
/// colourings, pruned only when the new vertex completes a copy) above.
pub fn naive_arrows(n: usize, pattern: &Graph) -> bool {
    if pattern.n() > n {
        return false;
    }
    let pairs = n * (n - 1) / 2;
    if n <= 6 {
        return (0u64..1 << pairs).all(|bits| {
            let col = (0..pairs).map(|k| (bits >> k & 1) as u8).collect();
            naive_has_mono(&EdgeColouring::from_pairs(n, 2, col).unwrap(), pattern)
        });
    }
    let mut c = EdgeColouring::uniform(n, 2, 0).unwrap();
    !free_completion(&mut c, pattern, 1, n)
}

/// Colours the pairs `{i, j}` for `i < j` of each new vertex `j` and keeps
/// only prefixes on `0..=j` without a copy through `j`.
fn free_completion(c: &mut EdgeColouring, pattern: &Graph, j: usize, n: usize) -> bool {
    if j == n {
        return true;
    }
    let prefix: Vec<usize> = (0..=j).collect();
    for bits in 0u64..1 << j {
        for i in 0..j {
            c.set(i, j, (bits >> i & 1) as u8);
        }
        let through_j = (0..2).any(|col| mono_map(c, pattern, col, &prefix, Some(j)));
        if !through_j && free_completion(c, pattern, j + 1, n) {
            return true;
        }
    }
    false
}

/// No monochromatic `K_k`, checked over every `k`-subset.
pub fn no_mono_clique(c: &EdgeColouring, k: usize) -> bool {
    fn rec(c: &EdgeColouring, k: usize, start: usize, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == k {
            let col = c.get(chosen[0], chosen[1]);
            let mono = chosen
                .iter()
                .enumerate()
                .all(|(a, &u)| chosen[a + 1..].iter().all(|&v| c.get(u, v) == col));
            return !mono;
        }
        for v in start..c.n() {
            chosen.push(v);
            let ok = rec(c, k, v + 1, chosen);
            chosen.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    rec(c, k, 0, &mut Vec::new())
}

pub fn distinct_in_range(vs: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    vs.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
}

/// Every pattern edge lands on a pair of the claimed colour.
pub fn embedding_ok(c: &EdgeColouring, pattern: &Graph, m: &MonoEmbedding) -> bool {
    let map = &m.embedding.map;
    map.len() == pattern.n()
        && distinct_in_range(map, c.n())
        && (0..pattern.n()).all(|u| (u + 1..pattern.n()).all(|v| !pattern.has_edge(u, v) || c.get(map[u], map[v]) == m.colour))
}

pub fn target(case: u8, t: usize, n: usize) -> Graph {
    if case == 1 {
        biclique_path_graph(t, n).unwrap()
    } else {
        clique_path_graph(t, n).unwrap()
    }
}

fn all_pairs(c: &EdgeColouring, xs: &[usize], ys: &[usize], colour: u8) -> bool {
    xs.iter().all(|&x| ys.iter().all(|&y| c.get(x, y) == colour))
}

fn clique(c: &EdgeColouring, vs: &[usize], colour: u8) -> bool {
    vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| c.get(u, v) == colour))
}

/// Independent reading of each failure certificate.
pub fn failure_ok(c: &EdgeColouring, t: usize, f: &StepFailure) -> bool {
    let n = c.n();
    match f {
        StepFailure::MonoPathTooShort { colour, path, required } => {
            distinct_in_range(path, n) && path.len() < *required && path.windows(2).all(|w| c.get(w[0], w[1]) == *colour)
        }
        StepFailure::RedBicliquePresent { colour, embedding } => {
            let m = &embedding.map;
            m.len() == 2 * t && distinct_in_range(m, n) && all_pairs(c, &m[..t], &m[t..], *colour)
        }
        StepFailure::TileShortfall { colour, tiles, required } => {
            let all: Vec<usize> = tiles.iter().flat_map(|e| e.map.clone()).collect();
            distinct_in_range(&all, n)
                && all.len() < *required
                && tiles
                    .iter()
                    .all(|e| e.map.len() == 2 * t && all_pairs(c, &e.map[..t], &e.map[t..], *colour))
        }
        StepFailure::ConnectorMissing { colour, b_side, a_side } => {
            let both: Vec<usize> = b_side.iter().chain(a_side).copied().collect();
            b_side.len() == t && a_side.len() == t && distinct_in_range(&both, n) && all_pairs(c, b_side, a_side, *colour)
        }
        StepFailure::CliqueCoverFail(CoverFailure::Clique { colour, vertices }) => {
            vertices.len() == t && distinct_in_range(vertices, n) && clique(c, vertices, *colour)
        }
        StepFailure::CliqueCoverFail(CoverFailure::NoRepresentative { clique, used }) => {
            !clique.is_empty() && clique.iter().all(|v| used.contains(v))
        }
        StepFailure::AssemblyShortfall { colour, paths, t: tt, n: target_n } => {
            let longest = paths.iter().map(|p| p.cliques.len()).max().unwrap_or(0);
            *tt == t
                && longest * t < *target_n
                && paths.iter().all(|p| {
                    let vs: Vec<usize> = p.cliques.iter().flatten().copied().collect();
                    let ends: Vec<usize> = p.links.iter().flat_map(|&(x, y)| [x, y]).collect();
                    distinct_in_range(&vs, n)
                        && distinct_in_range(&ends, n)
                        && p.cliques.iter().all(|q| q.len() == t && clique(c, q, *colour))
                        && p.links.len() + 1 == p.cliques.len()
                        && p.links.iter().enumerate().all(|(i, &(x, y))| {
                            p.cliques[i].contains(&x) && p.cliques[i + 1].contains(&y) && c.get(x, y) == *colour
                        })
                })
        }
    }
}
