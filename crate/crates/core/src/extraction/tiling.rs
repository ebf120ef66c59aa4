//! Greedy monochromatic tilings and the Case 1 stitching step.

use crate::colouring::{EdgeColouring, BLUE};
use crate::graph::{Embedding, Graph, LexMatcher};

use super::{MonoEmbedding, StepFailure};

/// Disjoint copies of `pattern` in `colour` inside `s`, each the
/// lexicographically least one among the still uncovered vertices.
pub fn greedy_mono_tiling(c: &EdgeColouring, s: &[usize], pattern: &Graph, colour: u8) -> Vec<Embedding> {
    if colour >= c.colours() {
        return Vec::new();
    }
    let rows = c.class_rows(colour);
    let matcher = LexMatcher::new(pattern);
    let mut free = s.iter().filter(|&&v| v < c.n()).fold(0u64, |m, &v| m | 1 << v);
    let mut tiles = Vec::new();
    if pattern.n() == 0 {
        return tiles;
    }
    while let Some(map) = matcher.find(&rows, free) {
        let e = Embedding { map };
        free &= !e.image_mask();
        tiles.push(e);
    }
    tiles
}

/// Threads a blue copy of the biclique-path graph through blue `K_{t,t}`
/// tiles (class A is `map[..t]`, class B is `map[t..]`).
///
/// The last tile is the biclique of the target. Every earlier tile is
/// crossed by a spanning path from its entry vertex in A to its exit vertex
/// in B, the exit joined to the next tile's entry by a blue connector; the
/// pendant path is the last `n - 2t` vertices of this walk.
pub fn stitch_case1(c: &EdgeColouring, tiles: &[Embedding], t: usize, n: usize) -> Result<MonoEmbedding, StepFailure> {
    stitch_in(c, tiles, t, n, BLUE)
}

pub(crate) fn stitch_in(
    c: &EdgeColouring,
    tiles: &[Embedding],
    t: usize,
    n: usize,
    colour: u8,
) -> Result<MonoEmbedding, StepFailure> {
    assert!(t >= 1 && n >= 2 * t, "need n >= 2t >= 2");
    let covered: usize = tiles.iter().map(|e| e.map.len()).sum();
    if tiles.is_empty() || covered < n {
        return Err(StepFailure::TileShortfall {
            colour,
            tiles: tiles.to_vec(),
            required: n,
        });
    }
    let side_a = |i: usize| &tiles[i].map[..t];
    let side_b = |i: usize| &tiles[i].map[t..2 * t];
    let s = tiles.len();

    // entry[i] in A_i, exit[i] in B_i; connector exit[i] -> entry[i + 1]
    let mut entry = vec![side_a(0)[0]; s];
    let mut exit = vec![usize::MAX; s];
    for i in 0..s - 1 {
        let found = side_b(i)
            .iter()
            .flat_map(|&b| side_a(i + 1).iter().map(move |&a| (b, a)))
            .find(|&(b, a)| c.get(a, b) == colour);
        match found {
            Some((b, a)) => {
                exit[i] = b;
                entry[i + 1] = a;
            }
            None => {
                return Err(StepFailure::ConnectorMissing {
                    colour: 1 - colour,
                    b_side: side_b(i).to_vec(),
                    a_side: side_a(i + 1).to_vec(),
                })
            }
        }
    }

    let mut walk = Vec::with_capacity(2 * t * (s - 1));
    for i in 0..s - 1 {
        let rest_a: Vec<usize> = side_a(i).iter().copied().filter(|&v| v != entry[i]).collect();
        let rest_b: Vec<usize> = side_b(i).iter().copied().filter(|&v| v != exit[i]).collect();
        walk.push(entry[i]);
        for (b, a) in rest_b.iter().zip(&rest_a) {
            walk.push(*b);
            walk.push(*a);
        }
        walk.push(exit[i]);
    }

    let last = s - 1;
    let mut map = Vec::with_capacity(n);
    map.push(entry[last]);
    map.extend(side_a(last).iter().copied().filter(|&v| v != entry[last]));
    map.extend_from_slice(side_b(last));
    for j in 0..n - 2 * t {
        map.push(walk[walk.len() - 1 - j]);
    }
    Ok(MonoEmbedding {
        colour,
        embedding: Embedding { map },
    })
}
