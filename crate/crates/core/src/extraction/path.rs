//! Long monochromatic paths in two-colourings.
//!
//! Three stages, each kept only while the target `⌈2N/3⌉` is unmet:
//!
//! 1. Insertion: vertices are added one by one to a pair of disjoint paths,
//!    one per colour, that together cover everything seen so far.
//! 2. Rotation-extension on each of the two paths.
//! 3. Exhaustive search for a path on exactly the target number of vertices.
//!
//! Colours enter only through "the colour of pair `(0, 1)`" and "the other
//! one", so exchanging the colours of the input exchanges the output colour
//! and leaves the path unchanged.

use crate::colouring::EdgeColouring;
use crate::graph::{vertex_mask, Bits};

/// Rotations explored per attempt before giving up on stage 2.
const ROTATION_LIMIT: usize = 400;

/// A monochromatic path on at least `⌈2N/3⌉` vertices.
///
/// # Panics
/// Panics unless `c` is a two-colouring of `K_N` with `N >= 2`.
pub fn find_long_mono_path(c: &EdgeColouring) -> (u8, Vec<usize>) {
    assert_eq!(c.colours(), 2, "two colours required");
    let n = c.n();
    assert!(n >= 2, "at least two vertices required");
    let target = (2 * n).div_ceil(3);
    let x = c.get(0, 1);
    let y = 1 - x;
    let rows = [c.class_rows(x), c.class_rows(y)];

    let (px, py) = insertion_cover(c, x);
    let mut best: (u8, Vec<usize>) = if px.len() >= py.len() { (x, px.clone()) } else { (y, py.clone()) };
    if best.1.len() >= target {
        return best;
    }
    for (k, start) in [(0usize, px), (1, py)] {
        let mut p = if start.is_empty() { vec![0] } else { start };
        improve(&rows[k], &mut p, n);
        let colour = [x, y][k];
        if p.len() > best.1.len() {
            best = (colour, p);
        }
        if best.1.len() >= target {
            return best;
        }
    }
    for (k, colour) in [(0usize, x), (1, y)] {
        if let Some(p) = path_of_length(&rows[k], n, target) {
            return (colour, p);
        }
    }
    unreachable!("every two-colouring of K_{n} has a monochromatic path on {target} vertices")
}

/// Disjoint paths in colours `x` and `1 - x` covering all vertices.
fn insertion_cover(c: &EdgeColouring, x: u8) -> (Vec<usize>, Vec<usize>) {
    let y = 1 - x;
    let mut px: Vec<usize> = Vec::new();
    let mut py: Vec<usize> = Vec::new();
    for v in 0..c.n() {
        let Some(&u) = px.last() else {
            px.push(v);
            continue;
        };
        if c.get(u, v) == x {
            px.push(v);
            continue;
        }
        let Some(&w) = py.last() else {
            py.push(v);
            continue;
        };
        if c.get(w, v) == y {
            py.push(v);
        } else if c.get(u, w) == x {
            // u-w-v continues the x path; the y path loses its end w
            py.pop();
            px.push(w);
            px.push(v);
        } else {
            px.pop();
            py.push(u);
            py.push(v);
        }
    }
    (px, py)
}

/// Rotation-extension on the graph `rows`, growing `path` in place.
fn improve(rows: &[u64], path: &mut Vec<usize>, n: usize) {
    let full = vertex_mask(n);
    loop {
        let used = path.iter().fold(0u64, |m, &v| m | 1 << v);
        let free = full & !used;
        if free == 0 {
            return;
        }
        if let Some(w) = Bits(rows[*path.last().unwrap()] & free).next() {
            path.push(w);
            continue;
        }
        if let Some(w) = Bits(rows[path[0]] & free).next() {
            path.insert(0, w);
            continue;
        }
        if let Some(p) = rotate_to_extendable(rows, path, free) {
            *path = p;
            continue;
        }
        path.reverse();
        if let Some(p) = rotate_to_extendable(rows, path, free) {
            *path = p;
            continue;
        }
        // closed into a cycle: reopen next to a vertex with a free neighbour
        let (first, last) = (path[0], *path.last().unwrap());
        if path.len() >= 3 && rows[first] >> last & 1 == 1 {
            if let Some(i) = path.iter().position(|&v| rows[v] & free != 0) {
                let w = Bits(rows[path[i]] & free).next().unwrap();
                let mut p = vec![w];
                p.extend_from_slice(&path[i..]);
                p.extend_from_slice(&path[..i]);
                *path = p;
                continue;
            }
        }
        return;
    }
}

/// Breadth-first search over rotations with the start fixed, stopping at a
/// path whose new end has a neighbour in `free`.
fn rotate_to_extendable(rows: &[u64], path: &[usize], free: u64) -> Option<Vec<usize>> {
    let mut seen_ends = 1u64 << path.last().unwrap();
    let mut queue = std::collections::VecDeque::from([path.to_vec()]);
    let mut explored = 0;
    while let Some(p) = queue.pop_front() {
        explored += 1;
        if explored > ROTATION_LIMIT {
            return None;
        }
        let len = p.len();
        let end = p[len - 1];
        let mut pos = [usize::MAX; 64];
        for (i, &v) in p.iter().enumerate() {
            pos[v] = i;
        }
        for u in Bits(rows[end]) {
            let i = pos[u];
            if i == usize::MAX || i + 2 >= len {
                continue;
            }
            let new_end = p[i + 1];
            if seen_ends >> new_end & 1 == 1 {
                continue;
            }
            seen_ends |= 1 << new_end;
            let mut q = p[..=i].to_vec();
            q.extend(p[i + 1..].iter().rev());
            if let Some(w) = Bits(rows[new_end] & free).next() {
                q.push(w);
                return Some(q);
            }
            queue.push_back(q);
        }
    }
    None
}

/// Some path on exactly `target` vertices in `rows`, by exhaustive search.
fn path_of_length(rows: &[u64], n: usize, target: usize) -> Option<Vec<usize>> {
    fn reach(rows: &[u64], from: usize, within: u64) -> u32 {
        let mut seen = 0u64;
        let mut frontier = rows[from] & within;
        while frontier != 0 {
            seen |= frontier;
            let mut next = 0;
            for v in Bits(frontier) {
                next |= rows[v];
            }
            frontier = next & within & !seen;
        }
        seen.count_ones()
    }
    fn dfs(rows: &[u64], path: &mut Vec<usize>, used: u64, full: u64, target: usize) -> bool {
        if path.len() >= target {
            return true;
        }
        let end = *path.last().unwrap();
        if path.len() + (reach(rows, end, full & !used) as usize) < target {
            return false;
        }
        for w in Bits(rows[end] & full & !used) {
            path.push(w);
            if dfs(rows, path, used | 1 << w, full, target) {
                return true;
            }
            path.pop();
        }
        false
    }
    let full = vertex_mask(n);
    (0..n).find_map(|s| {
        let mut path = vec![s];
        dfs(rows, &mut path, 1 << s, full, target).then_some(path)
    })
}

/// Longest monochromatic path by exhaustive search (small `N` only).
pub fn longest_mono_path_exhaustive(c: &EdgeColouring) -> usize {
    let n = c.n();
    let mut best = n.min(1);
    for colour in 0..c.colours() {
        let rows = c.class_rows(colour);
        while best < n && path_of_length(&rows, n, best + 1).is_some() {
            best += 1;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::{BLUE, RED};
    use crate::extraction::is_mono_path;
    use crate::graph::{enumerate_graphs, Graph, GraphFilter};

    fn check(c: &EdgeColouring) -> (u8, Vec<usize>) {
        let (colour, p) = find_long_mono_path(c);
        assert!(p.len() >= (2 * c.n()).div_ceil(3), "{c}");
        assert!(is_mono_path(c, &p, colour));
        assert!(crate::extraction::distinct(&p));
        (colour, p)
    }

    #[test]
    fn all_red() {
        let c = EdgeColouring::uniform(6, 2, RED).unwrap();
        let (colour, p) = check(&c);
        assert_eq!((colour, p.len()), (RED, 6));
    }

    #[test]
    fn bipartite_red() {
        let c = EdgeColouring::from_red_graph(&Graph::complete_bipartite(3, 3));
        let (_, p) = check(&c);
        assert!(p.len() >= 4);
        assert_eq!(longest_mono_path_exhaustive(&c), 6);
    }

    #[test]
    fn every_colouring_up_to_seven() {
        for n in 2..=7 {
            for g in enumerate_graphs(n, GraphFilter::All).unwrap() {
                check(&EdgeColouring::from_red_graph(&g));
            }
        }
    }

    #[test]
    fn swapping_colours_swaps_the_answer() {
        for seed in 0..20 {
            let c = EdgeColouring::random(15, 2, seed).unwrap();
            let (a, p) = check(&c);
            let (b, q) = check(&c.swap_colours(RED, BLUE));
            assert_eq!((1 - a, p), (b, q));
        }
    }

    #[test]
    fn random_up_to_forty() {
        for seed in 0..200 {
            let n = 2 + (seed as usize % 39);
            check(&EdgeColouring::random(n, 2, seed).unwrap());
        }
    }
}
