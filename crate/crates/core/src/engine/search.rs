//! Vertex-by-vertex extension of pattern-free colourings.
//!
//! A colouring of `K_{m+1}` is an extension of its restriction to the first
//! `m` vertices, and the new pairs `(i, m)` are exactly the last `m` entries
//! in colex order. Each new pair is coloured in turn and the branch is cut as
//! soon as a monochromatic copy through that pair appears, which is the only
//! place a new copy can appear.

use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use crate::colouring::EdgeColouring;
use crate::graph::{vertex_mask, EdgeAnchoredMatcher};

use super::SearchBudget;

/// Pair assignments between two checks of the shared counters.
const CHARGE_EVERY: u64 = 1024;

/// Shared node and wall-clock accounting.
pub(crate) struct Tracker {
    nodes: AtomicU64,
    max_nodes: u64,
    start: Instant,
    max_seconds: f64,
    stopped: AtomicBool,
}

impl Tracker {
    pub(crate) fn new(budget: &SearchBudget) -> Self {
        Self {
            nodes: AtomicU64::new(0),
            max_nodes: budget.max_nodes,
            start: Instant::now(),
            max_seconds: budget.max_seconds,
            stopped: AtomicBool::new(false),
        }
    }

    /// Adds `k` nodes; false once the budget is gone.
    fn charge(&self, k: u64) -> bool {
        let total = self.nodes.fetch_add(k, Ordering::Relaxed).saturating_add(k);
        if total > self.max_nodes || self.start.elapsed().as_secs_f64() > self.max_seconds {
            self.stopped.store(true, Ordering::Relaxed);
        }
        !self.stopped.load(Ordering::Relaxed)
    }

    pub(crate) fn exhausted(&self) -> bool {
        self.stopped.load(Ordering::Relaxed)
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }

    pub(crate) fn seconds(&self) -> f64 {
        self.start.elapsed().as_secs_f64()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Flow {
    Done,
    /// The callback asked to stop.
    Halted,
    Exhausted,
}

pub(crate) struct Extender<'a> {
    pub matcher: &'a EdgeAnchoredMatcher,
    pub r: u8,
    pub tracker: &'a Tracker,
}

struct ExtendState<'e> {
    rows: Vec<Vec<u64>>,
    new_cols: Vec<u8>,
    pending: u64,
    emit: &'e mut dyn FnMut(EdgeColouring) -> bool,
}

impl Extender<'_> {
    /// Calls `emit` on every pattern-free one-vertex extension of `parent`,
    /// in lexicographic order of the new pair colours.
    pub(crate) fn extend(&self, parent: &EdgeColouring, emit: &mut dyn FnMut(EdgeColouring) -> bool) -> Flow {
        let m = parent.n();
        if self.tracker.exhausted() {
            return Flow::Exhausted;
        }
        let mut rows = parent.all_class_rows();
        for r in &mut rows {
            r.push(0);
        }
        let mut st = ExtendState {
            rows,
            new_cols: vec![0; m],
            pending: 0,
            emit,
        };
        let flow = self.rec(parent, &mut st, 0);
        if flow == Flow::Done {
            self.tracker.charge(st.pending);
        }
        flow
    }

    fn rec(&self, parent: &EdgeColouring, st: &mut ExtendState, i: usize) -> Flow {
        let m = parent.n();
        if i == m {
            let mut col = parent.pairs().to_vec();
            col.extend_from_slice(&st.new_cols);
            let child = EdgeColouring::from_pairs(m + 1, self.r, col).expect("valid extension");
            return if (st.emit)(child) { Flow::Halted } else { Flow::Done };
        }
        let allowed = vertex_mask(m + 1);
        for c in 0..self.r {
            st.pending += 1;
            if st.pending >= CHARGE_EVERY {
                if !self.tracker.charge(st.pending) {
                    return Flow::Exhausted;
                }
                st.pending = 0;
            }
            let rows = &mut st.rows[c as usize];
            rows[i] |= 1 << m;
            rows[m] |= 1 << i;
            let bad = self.matcher.contains_with_edge(rows, allowed, i, m);
            let flow = if bad {
                Flow::Done
            } else {
                st.new_cols[i] = c;
                self.rec(parent, st, i + 1)
            };
            let rows = &mut st.rows[c as usize];
            rows[i] &= !(1 << m);
            rows[m] &= !(1 << i);
            if flow != Flow::Done {
                return flow;
            }
        }
        Flow::Done
    }

    /// All pattern-free extensions of every parent, one per isomorphism
    /// class, sorted by canonical key. `Err` carries any child seen before
    /// the budget ran out.
    pub(crate) fn next_level(&self, level: &[EdgeColouring]) -> Result<Vec<EdgeColouring>, Option<EdgeColouring>> {
        let parts: Vec<(HashMap<Vec<u64>, EdgeColouring>, Flow)> = level
            .par_iter()
            .map(|parent| {
                let mut kids = HashMap::new();
                let flow = self.extend(parent, &mut |child| {
                    let (key, canon) = child.canonical();
                    kids.entry(key).or_insert(canon);
                    false
                });
                (kids, flow)
            })
            .collect();
        if parts.iter().any(|(_, f)| *f == Flow::Exhausted) {
            let any = parts
                .into_iter()
                .filter_map(|(kids, _)| kids.into_iter().min_by(|a, b| a.0.cmp(&b.0)))
                .min_by(|a, b| a.0.cmp(&b.0))
                .map(|(_, c)| c);
            return Err(any);
        }
        let mut merged = BTreeMap::new();
        for (kids, _) in parts {
            merged.extend(kids);
        }
        Ok(merged.into_values().collect())
    }

    /// First pattern-free colouring on `target` vertices reachable from the
    /// parents, in parent order. `Err` on budget exhaustion.
    pub(crate) fn first_completion(&self, level: &[EdgeColouring], target: usize) -> Result<Option<EdgeColouring>, ()> {
        let found = level
            .par_iter()
            .map(|p| self.dfs(p, target))
            .find_map_first(|res| match res {
                Ok(None) => None,
                other => Some(other),
            });
        match found {
            None => Ok(None),
            Some(Ok(w)) => Ok(w),
            Some(Err(())) => Err(()),
        }
    }

    fn dfs(&self, c: &EdgeColouring, target: usize) -> Result<Option<EdgeColouring>, ()> {
        if c.n() >= target {
            return Ok(Some(c.clone()));
        }
        let mut found = None;
        let mut failed = false;
        let flow = self.extend(c, &mut |child| match self.dfs(&child, target) {
            Ok(Some(w)) => {
                found = Some(w);
                true
            }
            Ok(None) => false,
            Err(()) => {
                failed = true;
                true
            }
        });
        if failed || flow == Flow::Exhausted {
            return Err(());
        }
        Ok(found)
    }
}
