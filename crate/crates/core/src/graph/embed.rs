//! Subgraph (not induced) embeddings by bitset backtracking.

use serde::{Deserialize, Serialize};

use super::{vertex_mask, Bits, Graph};

/// Injective map from pattern vertices to host vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn image_mask(&self) -> u64 {
        self.map.iter().fold(0, |m, &v| m | 1u64 << v)
    }
}

/// Lexicographically least embedding of `pattern` into `host`, if any.
pub fn find_embedding(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    find_embedding_within(host, pattern, vertex_mask(host.n()))
}

/// As [`find_embedding`], using only host vertices in `allowed`.
pub fn find_embedding_within(host: &Graph, pattern: &Graph, allowed: u64) -> Option<Embedding> {
    LexMatcher::new(pattern)
        .find(host.rows(), allowed & vertex_mask(host.n()))
        .map(|map| Embedding { map })
}

/// Checks injectivity, range and edge preservation directly.
pub fn verify_embedding(host: &Graph, pattern: &Graph, e: &Embedding) -> bool {
    if e.map.len() != pattern.n() || e.map.iter().any(|&v| v >= host.n()) {
        return false;
    }
    let mut seen = 0u64;
    for &v in &e.map {
        if seen >> v & 1 == 1 {
            return false;
        }
        seen |= 1 << v;
    }
    pattern
        .edges()
        .into_iter()
        .all(|(u, v)| host.has_edge(e.map[u], e.map[v]))
}

/// Matches pattern vertices in index order, host candidates in increasing
/// order, so the first embedding found is the lexicographically least.
pub(crate) struct LexMatcher {
    back: Vec<u64>,
    degree: Vec<u32>,
}

impl LexMatcher {
    pub(crate) fn new(pattern: &Graph) -> Self {
        let n = pattern.n();
        Self {
            back: (0..n).map(|k| pattern.neighbours(k) & vertex_mask(k)).collect(),
            degree: (0..n).map(|k| pattern.degree(k) as u32).collect(),
        }
    }

    pub(crate) fn find(&self, rows: &[u64], allowed: u64) -> Option<Vec<usize>> {
        let n = self.back.len();
        if n > allowed.count_ones() as usize {
            return None;
        }
        let mut map = vec![0usize; n];
        if self.extend(rows, allowed, 0, 0, &mut map) {
            Some(map)
        } else {
            None
        }
    }

    fn extend(&self, rows: &[u64], allowed: u64, k: usize, used: u64, map: &mut [usize]) -> bool {
        if k == self.back.len() {
            return true;
        }
        let mut cand = allowed & !used;
        for p in Bits(self.back[k]) {
            cand &= rows[map[p]];
        }
        let need = self.degree[k];
        for v in Bits(cand) {
            if (rows[v] & allowed).count_ones() < need {
                continue;
            }
            map[k] = v;
            if self.extend(rows, allowed, k + 1, used | 1 << v, map) {
                return true;
            }
        }
        false
    }
}

/// One matching order that starts by placing a fixed pattern edge.
struct AnchoredPlan {
    order: Vec<usize>,
    /// For each step, the already placed pattern neighbours of `order[step]`.
    back: Vec<Vec<usize>>,
}

/// Finds or counts copies of a pattern that use a prescribed host edge.
///
/// The incremental arrowing search only needs to look for copies through the
/// pair it has just coloured, so every pattern edge, in both orientations, is
/// tried as the anchor.
pub(crate) struct EdgeAnchoredMatcher {
    n: usize,
    degree: Vec<u32>,
    plans: Vec<AnchoredPlan>,
}

impl EdgeAnchoredMatcher {
    pub(crate) fn new(pattern: &Graph) -> Self {
        let n = pattern.n();
        let mut plans = Vec::new();
        for (p, q) in pattern.edges() {
            for (a, b) in [(p, q), (q, p)] {
                plans.push(Self::plan(pattern, a, b));
            }
        }
        Self {
            n,
            degree: (0..n).map(|v| pattern.degree(v) as u32).collect(),
            plans,
        }
    }

    fn plan(pattern: &Graph, a: usize, b: usize) -> AnchoredPlan {
        let n = pattern.n();
        let mut order = vec![a, b];
        let mut placed = 1u64 << a | 1u64 << b;
        while order.len() < n {
            // Prefer the unplaced vertex with most placed neighbours, then
            // highest degree, then lowest index.
            let next = (0..n)
                .filter(|&v| placed >> v & 1 == 0)
                .max_by_key(|&v| {
                    (
                        (pattern.neighbours(v) & placed).count_ones(),
                        pattern.degree(v),
                        std::cmp::Reverse(v),
                    )
                })
                .expect("unplaced vertex exists");
            order.push(next);
            placed |= 1 << next;
        }
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                Bits(pattern.neighbours(v))
                    .filter(|&u| pos[u] < i)
                    .collect()
            })
            .collect();
        AnchoredPlan { order, back }
    }

    /// Is there a copy inside `allowed` whose image uses the edge `ab`?
    /// `ab` must be an edge of `rows`.
    pub(crate) fn contains_with_edge(&self, rows: &[u64], allowed: u64, a: usize, b: usize) -> bool {
        if self.n > allowed.count_ones() as usize {
            return false;
        }
        let mut map = vec![usize::MAX; self.n];
        self.plans.iter().any(|plan| {
            let mut found = false;
            self.run(plan, rows, allowed, a, b, &mut map, &mut |_| {
                found = true;
                true
            });
            found
        })
    }

    /// Number of (plan, embedding) pairs through `ab`, stopping at `cap`.
    /// Proportional to the number of copies through `ab`.
    pub(crate) fn count_with_edge(&self, rows: &[u64], allowed: u64, a: usize, b: usize, cap: u64) -> u64 {
        if self.n > allowed.count_ones() as usize {
            return 0;
        }
        let mut map = vec![usize::MAX; self.n];
        let mut count = 0u64;
        for plan in &self.plans {
            self.run(plan, rows, allowed, a, b, &mut map, &mut |_| {
                count += 1;
                count >= cap
            });
            if count >= cap {
                break;
            }
        }
        count
    }

    #[allow(clippy::too_many_arguments)]
    fn run(
        &self,
        plan: &AnchoredPlan,
        rows: &[u64],
        allowed: u64,
        a: usize,
        b: usize,
        map: &mut [usize],
        on_leaf: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let (pa, pb) = (plan.order[0], plan.order[1]);
        let deg_ok = |v: usize, need: u32| (rows[v] & allowed).count_ones() >= need;
        if !deg_ok(a, self.degree[pa]) || !deg_ok(b, self.degree[pb]) {
            return false;
        }
        map[pa] = a;
        map[pb] = b;
        self.step(plan, rows, allowed, 2, 1 << a | 1 << b, map, on_leaf)
    }

    #[allow(clippy::too_many_arguments)]
    fn step(
        &self,
        plan: &AnchoredPlan,
        rows: &[u64],
        allowed: u64,
        k: usize,
        used: u64,
        map: &mut [usize],
        on_leaf: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if k == self.n {
            return on_leaf(map);
        }
        let x = plan.order[k];
        let mut cand = allowed & !used;
        for &p in &plan.back[k] {
            cand &= rows[map[p]];
        }
        let need = self.degree[x];
        for v in Bits(cand) {
            if (rows[v] & allowed).count_ones() < need {
                continue;
            }
            map[x] = v;
            if self.step(plan, rows, allowed, k + 1, used | 1 << v, map, on_leaf) {
                return true;
            }
        }
        false
    }
}
