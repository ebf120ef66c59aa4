//! Seeded tabu search for pattern-free colourings.
//!
//! Only ever used to raise a lower bound: anything it returns is re-verified
//! by the exact matcher, and failing to find a colouring proves nothing.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::colouring::{pair_count, EdgeColouring};
use crate::graph::{vertex_mask, Bits, EdgeAnchoredMatcher, Graph};

use super::find_mono_copy;

/// Per-pair copy counts stop here; large counts only steer the search.
const COUNT_CAP: u64 = 64;

/// Parameters of the randomised witness search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WitnessSearch {
    pub seed: u64,
    /// Recolouring moves per host size.
    pub max_steps: u64,
}

impl Default for WitnessSearch {
    fn default() -> Self {
        Self {
            seed: 0,
            max_steps: 200_000,
        }
    }
}

enum Counter {
    Clique(usize),
    General(EdgeAnchoredMatcher),
}

impl Counter {
    fn new(pattern: &Graph) -> Self {
        let k = pattern.n();
        if pattern.edge_count() == k * (k - 1) / 2 {
            Counter::Clique(k)
        } else {
            Counter::General(EdgeAnchoredMatcher::new(pattern))
        }
    }

    /// Copies through `uv` if `uv` had colour class `rows` (edge set in place).
    fn through(&self, rows: &[u64], allowed: u64, u: usize, v: usize) -> u64 {
        match self {
            Counter::Clique(k) => count_cliques(rows, rows[u] & rows[v] & allowed, k - 2, COUNT_CAP),
            Counter::General(m) => m.count_with_edge(rows, allowed, u, v, COUNT_CAP),
        }
    }
}

fn count_cliques(rows: &[u64], cand: u64, k: usize, cap: u64) -> u64 {
    if k == 0 {
        return 1;
    }
    if (cand.count_ones() as usize) < k {
        return 0;
    }
    let mut total = 0;
    for v in Bits(cand) {
        // only higher-indexed vertices so each clique is counted once
        let rest = cand & rows[v] & !((2u64 << v) - 1);
        total += count_cliques(rows, rest, k - 1, cap);
        if total >= cap {
            return cap;
        }
    }
    total
}

/// Tabu search for an `r`-colouring of `K_n` with no monochromatic `pattern`.
pub fn local_search_witness(n: usize, r: u8, pattern: &Graph, params: &WitnessSearch) -> Option<EdgeColouring> {
    if !(2..=3).contains(&r) || n > 64 {
        return None;
    }
    if pattern.n() > n {
        return Some(EdgeColouring::uniform(n, r, 0).expect("valid shape"));
    }
    if pattern.edge_count() == 0 {
        return None;
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let allowed = vertex_mask(n);
    let counter = Counter::new(&super::without_isolated(pattern));
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed ^ (n as u64) << 32);
    let mut col: Vec<u8> = (0..pair_count(n))
        .map(|_| ((rng.next_u32() as u64 * r as u64) >> 32) as u8)
        .collect();
    let mut rows = vec![vec![0u64; n]; r as usize];
    for (p, &(u, v)) in pairs.iter().enumerate() {
        let c = col[p] as usize;
        rows[c][u] |= 1 << v;
        rows[c][v] |= 1 << u;
    }
    let mut tabu_until = vec![0u64; pairs.len()];
    let mut bad = vec![0u64; pairs.len()];
    let mut candidates: Vec<(usize, u8)> = Vec::new();
    for step in 0..params.max_steps {
        let mut total = 0;
        for (p, &(u, v)) in pairs.iter().enumerate() {
            bad[p] = counter.through(&rows[col[p] as usize], allowed, u, v);
            total += bad[p];
        }
        if total == 0 {
            let c = EdgeColouring::from_pairs(n, r, col).expect("valid colours");
            return find_mono_copy(&c, pattern).is_none().then_some(c);
        }
        let mut best = i64::MAX;
        candidates.clear();
        for (p, &(u, v)) in pairs.iter().enumerate() {
            if bad[p] == 0 {
                continue;
            }
            for c in 0..r {
                if c == col[p] {
                    continue;
                }
                let rc = &mut rows[c as usize];
                rc[u] |= 1 << v;
                rc[v] |= 1 << u;
                let after = counter.through(rc, allowed, u, v);
                rc[u] &= !(1 << v);
                rc[v] &= !(1 << u);
                let delta = after as i64 - bad[p] as i64;
                let aspirated = total as i64 + delta == 0;
                if tabu_until[p] > step && !aspirated {
                    continue;
                }
                if delta < best {
                    best = delta;
                    candidates.clear();
                }
                if delta == best {
                    candidates.push((p, c));
                }
            }
        }
        if candidates.is_empty() {
            // everything tabu: random recolouring of a random bad pair
            let bads: Vec<usize> = (0..pairs.len()).filter(|&p| bad[p] > 0).collect();
            let p = bads[(rng.next_u32() as usize) % bads.len()];
            let c = (col[p] + 1 + (rng.next_u32() % (r as u32 - 1)) as u8) % r;
            candidates.push((p, c));
        }
        let (p, c) = candidates[(rng.next_u32() as usize) % candidates.len()];
        let (u, v) = pairs[p];
        let old = col[p] as usize;
        rows[old][u] &= !(1 << v);
        rows[old][v] &= !(1 << u);
        rows[c as usize][u] |= 1 << v;
        rows[c as usize][v] |= 1 << u;
        col[p] = c;
        tabu_until[p] = step + 1 + (n as u64 / 2) + (rng.next_u32() % 8) as u64;
    }
    None
}
