//! The two extraction pipelines.
//!
//! Both start from a long monochromatic path. The colouring is normalised so
//! that this path is red; results are mapped back at the end. The first `n`
//! path vertices are set aside and `S` is the rest of the path.
//!
//! If `S` holds a red copy of the base graph (`K_{t,t}` or `K_t`), a red
//! target is assembled directly: with `p` the smallest path index used by
//! that copy, the vertex at `p` becomes the attachment vertex and the path
//! vertices `p - 1, p - 2, ...` form the pendant path. Since `p >= n` they
//! exist, and they avoid the copy by the choice of `p`.

use serde_json::json;

use crate::colouring::{EdgeColouring, BLUE, RED};
use crate::constructions::{biclique_path_graph, clique_path_graph};
use crate::graph::{Embedding, Graph, LexMatcher};

use super::clique_paths::{cover_by_clique_paths_in, CliquePath};
use super::path::find_long_mono_path;
use super::tiling::{greedy_mono_tiling, stitch_in};
use super::trace::{Trace, TraceOutcome, TraceStep};
use super::{MonoEmbedding, StepFailure};

/// Blue or red copy of `biclique_path_graph(t, n)`, or a certified failure.
///
/// # Panics
/// Panics unless `c` is a two-colouring and `n >= 2t >= 2`.
pub fn extract_case1(c: &EdgeColouring, t: usize, n: usize) -> Result<MonoEmbedding, StepFailure> {
    extract_case1_traced(c, t, n).0
}

/// Copy of `clique_path_graph(t, n)`, or a certified failure.
///
/// # Panics
/// Panics unless `c` is a two-colouring and `n >= t >= 1`.
pub fn extract_case2(c: &EdgeColouring, t: usize, n: usize) -> Result<MonoEmbedding, StepFailure> {
    extract_case2_traced(c, t, n).0
}

pub fn extract_case1_traced(c: &EdgeColouring, t: usize, n: usize) -> (Result<MonoEmbedding, StepFailure>, Trace) {
    assert!(t >= 1 && n >= 2 * t, "need n >= 2t >= 2");
    run(c, 1, t, n)
}

pub fn extract_case2_traced(c: &EdgeColouring, t: usize, n: usize) -> (Result<MonoEmbedding, StepFailure>, Trace) {
    assert!(t >= 1 && n >= t, "need n >= t >= 1");
    run(c, 2, t, n)
}

fn run(c: &EdgeColouring, case: u8, t: usize, n: usize) -> (Result<MonoEmbedding, StepFailure>, Trace) {
    assert_eq!(c.colours(), 2, "two colours required");
    assert!(c.n() >= 2, "at least two vertices required");
    let mut steps = Vec::new();
    let (colour, path) = find_long_mono_path(c);
    steps.push(TraceStep::new("mono_path", json!({ "colour": colour, "path": path })));
    let swapped = colour != RED;
    let work = if swapped { c.swap_colours(RED, BLUE) } else { c.clone() };

    let result = if case == 1 {
        case1(&work, &path, t, n, &mut steps)
    } else {
        case2(&work, &path, t, n, &mut steps)
    };
    let result = match result {
        Ok(m) if swapped => Ok(MonoEmbedding {
            colour: 1 - m.colour,
            embedding: m.embedding,
        }),
        Err(f) if swapped => Err(f.swap_colours()),
        other => other,
    };
    let outcome = match &result {
        Ok(m) => TraceOutcome::Embedding(m.clone()),
        Err(f) => TraceOutcome::Failure(f.clone()),
    };
    let trace = Trace {
        case,
        t,
        n,
        colouring: c.to_string(),
        steps,
        outcome,
    };
    (result, trace)
}

fn trimmed(work: &EdgeColouring, path: &[usize], n: usize, steps: &mut Vec<TraceStep>) -> Result<Vec<usize>, StepFailure> {
    let required = (2 * work.n()).div_ceil(3);
    if path.len() < required {
        return Err(StepFailure::MonoPathTooShort {
            colour: RED,
            path: path.to_vec(),
            required,
        });
    }
    let s = path[n.min(path.len())..].to_vec();
    steps.push(TraceStep::new("trim", json!({ "removed": n.min(path.len()), "S": s })));
    Ok(s)
}

/// Red copy of `base` inside `S`, anchored as described in the module docs.
/// `sides` lists interchangeable vertex groups of `base` (the anchor must be
/// moved to pattern vertex 0).
fn red_shortcut(
    work: &EdgeColouring,
    path: &[usize],
    s: &[usize],
    base: &Graph,
    n: usize,
    biclique_side: Option<usize>,
    steps: &mut Vec<TraceStep>,
) -> Option<MonoEmbedding> {
    let allowed = s.iter().fold(0u64, |m, &v| m | 1 << v);
    let mut map = LexMatcher::new(base).find(&work.class_rows(RED), allowed)?;
    steps.push(TraceStep::new("red_base", json!({ "map": map })));
    let mut pos = vec![usize::MAX; work.n()];
    for (i, &v) in path.iter().enumerate() {
        pos[v] = i;
    }
    let p = map.iter().map(|&v| pos[v]).min().expect("non-empty base");
    let anchor = path[p];
    let k = map.iter().position(|&v| v == anchor).unwrap();
    match biclique_side {
        Some(t) => {
            if k >= t {
                map.rotate_left(t);
            }
            let k = map.iter().position(|&v| v == anchor).unwrap();
            map.swap(0, k);
        }
        None => map.swap(0, k),
    }
    let tail = n - base.n();
    if p < tail {
        return None;
    }
    map.extend((1..=tail).map(|j| path[p - j]));
    Some(MonoEmbedding {
        colour: RED,
        embedding: Embedding { map },
    })
}

fn case1(work: &EdgeColouring, path: &[usize], t: usize, n: usize, steps: &mut Vec<TraceStep>) -> Result<MonoEmbedding, StepFailure> {
    let s = trimmed(work, path, n, steps)?;
    let ktt = Graph::complete_bipartite(t, t);
    if let Some(allowed_copy) = LexMatcher::new(&ktt).find(&work.class_rows(RED), s.iter().fold(0, |m, &v| m | 1 << v)) {
        return red_shortcut(work, path, &s, &ktt, n, Some(t), steps).ok_or(StepFailure::RedBicliquePresent {
            colour: RED,
            embedding: Embedding { map: allowed_copy },
        });
    }
    let tiles = greedy_mono_tiling(work, &s, &ktt, BLUE);
    steps.push(TraceStep::new(
        "tiling",
        json!({ "tiles": tiles.iter().map(|e| &e.map).collect::<Vec<_>>() }),
    ));
    let m = stitch_in(work, &tiles, t, n, BLUE)?;
    steps.push(TraceStep::new("stitch", json!({ "map": m.embedding.map })));
    Ok(m)
}

fn case2(work: &EdgeColouring, path: &[usize], t: usize, n: usize, steps: &mut Vec<TraceStep>) -> Result<MonoEmbedding, StepFailure> {
    let s = trimmed(work, path, n, steps)?;
    let kt = Graph::complete(t);
    if let Some(m) = red_shortcut(work, path, &s, &kt, n, None, steps) {
        return Ok(m);
    }
    let cliques: Vec<Vec<usize>> = greedy_mono_tiling(work, &s, &kt, BLUE)
        .into_iter()
        .map(|e| e.map)
        .collect();
    steps.push(TraceStep::new("tiling", json!({ "cliques": cliques })));
    let paths = cover_by_clique_paths_in(work, &cliques, t, BLUE)?;
    steps.push(TraceStep::new(
        "cover",
        json!({ "paths": paths.iter().map(|p| json!({ "cliques": p.cliques, "links": p.links })).collect::<Vec<_>>() }),
    ));
    let Some(longest) = paths.iter().fold(None::<&CliquePath>, |best, p| match best {
        Some(b) if b.cliques.len() >= p.cliques.len() => Some(b),
        _ => Some(p),
    }) else {
        return Err(StepFailure::AssemblyShortfall {
            colour: BLUE,
            paths,
            t,
            n,
        });
    };
    if longest.cliques.len() * t < n {
        return Err(StepFailure::AssemblyShortfall {
            colour: BLUE,
            paths: paths.clone(),
            t,
            n,
        });
    }
    let m = realise_clique_path(longest, t, n);
    steps.push(TraceStep::new("assemble", json!({ "map": m.embedding.map })));
    Ok(m)
}

/// The last clique is the `K_t`; the earlier cliques are crossed from entry
/// to exit link vertex, and the pendant path is the tail of that walk.
fn realise_clique_path(p: &CliquePath, t: usize, n: usize) -> MonoEmbedding {
    let l = p.cliques.len();
    let mut walk = Vec::with_capacity(t * (l - 1));
    for i in 0..l - 1 {
        let exit = p.links[i].0;
        let q = &p.cliques[i];
        let entry = if i == 0 {
            q.iter().copied().find(|&v| v != exit).unwrap_or(exit)
        } else {
            p.links[i - 1].1
        };
        walk.push(entry);
        walk.extend(q.iter().copied().filter(|&v| v != entry && v != exit));
        if exit != entry {
            walk.push(exit);
        }
    }
    let last = &p.cliques[l - 1];
    let anchor = if l >= 2 { p.links[l - 2].1 } else { last[0] };
    let mut map = vec![anchor];
    map.extend(last.iter().copied().filter(|&v| v != anchor));
    for j in 0..n - t {
        map.push(walk[walk.len() - 1 - j]);
    }
    MonoEmbedding {
        colour: BLUE,
        embedding: Embedding { map },
    }
}

/// Target graph of a pipeline run.
pub(crate) fn target_graph(case: u8, t: usize, n: usize) -> Option<Graph> {
    match case {
        1 => biclique_path_graph(t, n).ok(),
        2 => clique_path_graph(t, n).ok(),
        _ => None,
    }
}
