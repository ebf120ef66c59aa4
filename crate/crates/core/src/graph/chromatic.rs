//! Exact chromatic number by DSATUR-ordered backtracking.

use super::{Bits, Graph};

/// Exact chromatic number; `0` for the graph on no vertices.
pub fn chromatic_number(g: &Graph) -> usize {
    chromatic_number_with_budget(g, u64::MAX).expect("unbounded budget")
}

/// Exact chromatic number, or `None` if more than `max_nodes` search nodes
/// would be needed.
pub fn chromatic_number_with_budget(g: &Graph, max_nodes: u64) -> Option<usize> {
    let n = g.n();
    if n == 0 {
        return Some(0);
    }
    let lower = g.clique_number().max(1);
    let mut nodes = 0u64;
    for k in lower..=n {
        let mut colour = vec![usize::MAX; n];
        match colourable(g, k, &mut colour, 0, &mut nodes, max_nodes) {
            Some(true) => return Some(k),
            Some(false) => continue,
            None => return None,
        }
    }
    unreachable!("every graph is n-colourable")
}

/// Tries to extend `colour` to a proper `k`-colouring. `None` on budget exhaustion.
fn colourable(
    g: &Graph,
    k: usize,
    colour: &mut [usize],
    coloured: usize,
    nodes: &mut u64,
    max_nodes: u64,
) -> Option<bool> {
    let n = g.n();
    if coloured == n {
        return Some(true);
    }
    *nodes += 1;
    if *nodes > max_nodes {
        return None;
    }
    // DSATUR: most distinct neighbour colours, then highest uncoloured degree.
    let mut pick = usize::MAX;
    let mut pick_key = (0usize, 0usize);
    let mut pick_forbidden = 0u64;
    for v in 0..n {
        if colour[v] != usize::MAX {
            continue;
        }
        let mut forbidden = 0u64;
        let mut free_degree = 0;
        for u in Bits(g.neighbours(v)) {
            if colour[u] == usize::MAX {
                free_degree += 1;
            } else {
                forbidden |= 1 << colour[u];
            }
        }
        let key = (forbidden.count_ones() as usize, free_degree);
        if pick == usize::MAX || key > pick_key {
            pick = v;
            pick_key = key;
            pick_forbidden = forbidden;
        }
    }
    // Symmetry: a fresh colour is only ever tried once, as the lowest unused one.
    let used_colours = colour
        .iter()
        .filter(|&&c| c != usize::MAX)
        .fold(0u64, |m, &c| m | 1 << c);
    let fresh_limit = (used_colours.count_ones() as usize + 1).min(k);
    for c in 0..fresh_limit {
        if pick_forbidden >> c & 1 == 1 {
            continue;
        }
        colour[pick] = c;
        match colourable(g, k, colour, coloured + 1, nodes, max_nodes) {
            Some(true) => return Some(true),
            None => {
                colour[pick] = usize::MAX;
                return None;
            }
            Some(false) => {}
        }
    }
    colour[pick] = usize::MAX;
    Some(false)
}
