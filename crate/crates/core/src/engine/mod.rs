//! Arrowing decisions and Ramsey numbers by exhaustive search.
//!
//! The search keeps, for each host size `m`, one representative of every
//! isomorphism class of pattern-free `r`-colourings of `K_m` and grows them
//! one vertex at a time (see [`search`]). An empty level proves arrowing. Past
//! the configured isomorph-rejection depth the remaining vertices are filled
//! in by plain depth-first search.

mod local;
mod search;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::colouring::{EdgeColouring, MAX_COLOURS};
use crate::error::EngineError;
use crate::graph::{write_graph6, EdgeAnchoredMatcher, Embedding, Graph, LexMatcher};

pub use local::{local_search_witness, WitnessSearch};
use search::{Extender, Tracker};

/// Limits for one engine call. Both must be positive.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_seconds: f64,
}

impl SearchBudget {
    pub fn new(max_nodes: u64, max_seconds: f64) -> Self {
        assert!(max_nodes > 0 && max_seconds > 0.0, "budget limits must be positive");
        Self { max_nodes, max_seconds }
    }

    pub fn unlimited() -> Self {
        Self {
            max_nodes: u64::MAX,
            max_seconds: f64::INFINITY,
        }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self::new(100_000_000, 600.0)
    }
}

/// What backs the upper end of a [`RamseyResult`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum UpperCertificate {
    ProvedBySearch,
    BudgetExhausted,
    KnownBound(String),
}

impl fmt::Display for UpperCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UpperCertificate::ProvedBySearch => f.write_str("PROVED_BY_SEARCH"),
            UpperCertificate::BudgetExhausted => f.write_str("BUDGET_EXHAUSTED"),
            UpperCertificate::KnownBound(name) => write!(f, "KNOWN_BOUND({name})"),
        }
    }
}

/// An exact Ramsey number or an interval `[lo, hi]`; `hi = None` is unbounded.
#[derive(Clone, Debug, PartialEq)]
pub struct RamseyResult {
    pub lo: usize,
    pub hi: Option<usize>,
    /// Pattern-free colouring on `lo - 1` vertices.
    pub witness: Option<EdgeColouring>,
    pub upper_certificate: UpperCertificate,
    pub nodes: u64,
    pub seconds: f64,
}

impl RamseyResult {
    pub fn exact(&self) -> bool {
        self.hi == Some(self.lo)
    }

    pub fn value(&self) -> Option<usize> {
        self.exact().then_some(self.lo)
    }

    /// Interval backed by named bounds rather than a search.
    pub fn known_bounds(lo: usize, hi: Option<usize>, name: &str) -> Self {
        Self {
            lo,
            hi,
            witness: None,
            upper_certificate: UpperCertificate::KnownBound(name.to_string()),
            nodes: 0,
            seconds: 0.0,
        }
    }

    /// Machine-readable summary.
    pub fn record(&self, pattern: &Graph, r: u8) -> ResultRecord {
        ResultRecord {
            pattern: write_graph6(pattern),
            colours: r,
            lo: self.lo,
            hi: self.hi,
            exact: self.exact(),
            certificate: self.upper_certificate.to_string(),
            nodes: self.nodes,
            seconds: self.seconds,
            witness: self.witness.as_ref().map(|w| w.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub pattern: String,
    pub colours: u8,
    pub lo: usize,
    pub hi: Option<usize>,
    pub exact: bool,
    pub certificate: String,
    pub nodes: u64,
    pub seconds: f64,
    pub witness: Option<String>,
}

/// Outcome of one arrowing question.
#[derive(Clone, Debug, PartialEq)]
pub enum Arrowing {
    Arrows,
    Witness(EdgeColouring),
    Unknown,
}

/// Engine configuration beyond the budget.
#[derive(Clone, Debug, PartialEq)]
pub struct EngineConfig {
    pub budget: SearchBudget,
    /// Host sizes (in vertices) up to which every level is reduced to one
    /// colouring per isomorphism class.
    pub iso_depth: usize,
    /// Randomised search used to push the lower bound after the exact
    /// search runs out of budget.
    pub witness_search: Option<WitnessSearch>,
}

impl EngineConfig {
    pub fn with_budget(budget: SearchBudget) -> Self {
        Self {
            budget,
            iso_depth: usize::MAX,
            witness_search: None,
        }
    }
}

impl Default for EngineConfig {
    fn default() -> Self {
        Self::with_budget(SearchBudget::default())
    }
}

/// A monochromatic copy of `pattern`: lowest colour first, then the
/// lexicographically least embedding in that colour.
pub fn find_mono_copy(c: &EdgeColouring, pattern: &Graph) -> Option<(u8, Embedding)> {
    let matcher = LexMatcher::new(pattern);
    (0..c.colours()).find_map(|colour| {
        matcher
            .find(&c.class_rows(colour), c.vertex_mask())
            .map(|map| (colour, Embedding { map }))
    })
}

fn check_colours(r: u8) -> Result<(), EngineError> {
    if (2..=MAX_COLOURS).contains(&r) {
        Ok(())
    } else {
        Err(EngineError::UnsupportedColours(r))
    }
}

fn seed_level(r: u8) -> Vec<EdgeColouring> {
    vec![EdgeColouring::uniform(1, r, 0).expect("one vertex")]
}

/// Does every `r`-colouring of `K_n` contain a monochromatic `pattern`?
pub fn arrows(n: usize, r: u8, pattern: &Graph, budget: SearchBudget) -> Result<Arrowing, EngineError> {
    arrows_with(n, r, pattern, &EngineConfig::with_budget(budget))
}

pub fn arrows_with(n: usize, r: u8, pattern: &Graph, cfg: &EngineConfig) -> Result<Arrowing, EngineError> {
    check_colours(r)?;
    if n == 0 {
        return Err(EngineError::EmptyHost);
    }
    if n > 64 {
        return Ok(Arrowing::Unknown);
    }
    if pattern.n() > n {
        return Ok(Arrowing::Witness(EdgeColouring::uniform(n, r, 0).expect("valid shape")));
    }
    if pattern.edge_count() == 0 {
        return Ok(Arrowing::Arrows);
    }
    // with at least |V(pattern)| host vertices, isolated pattern vertices always fit
    let core = without_isolated(pattern);
    let matcher = EdgeAnchoredMatcher::new(&core);
    let tracker = Tracker::new(&cfg.budget);
    let ext = Extender {
        matcher: &matcher,
        r,
        tracker: &tracker,
    };
    let mut level = seed_level(r);
    // full levels up to n - 1, then the first completion to n
    while level[0].n() + 1 < n.min(cfg.iso_depth.max(1)) {
        match ext.next_level(&level) {
            Ok(next) if next.is_empty() => return Ok(Arrowing::Arrows),
            Ok(next) => level = next,
            Err(_) => return Ok(Arrowing::Unknown),
        }
    }
    Ok(match ext.first_completion(&level, n) {
        Ok(Some(w)) => Arrowing::Witness(w),
        Ok(None) => Arrowing::Arrows,
        Err(()) => Arrowing::Unknown,
    })
}

/// `R_r(pattern)`, or the best interval the budget allows.
pub fn ramsey_number(pattern: &Graph, r: u8, budget: SearchBudget) -> Result<RamseyResult, EngineError> {
    ramsey_number_with(pattern, r, &EngineConfig::with_budget(budget))
}

pub fn ramsey_number_with(pattern: &Graph, r: u8, cfg: &EngineConfig) -> Result<RamseyResult, EngineError> {
    check_colours(r)?;
    let tracker = Tracker::new(&cfg.budget);
    let finish = |lo: usize, hi: Option<usize>, witness: Option<EdgeColouring>| RamseyResult {
        lo,
        hi,
        witness,
        upper_certificate: if hi.is_some() {
            UpperCertificate::ProvedBySearch
        } else {
            UpperCertificate::BudgetExhausted
        },
        nodes: tracker.nodes(),
        seconds: tracker.seconds(),
    };
    let k = pattern.n();
    if pattern.edge_count() == 0 {
        // any host on k vertices contains it, none smaller does
        let witness = (k >= 2).then(|| EdgeColouring::uniform(k - 1, r, 0).expect("valid shape"));
        return Ok(finish(k, Some(k), witness));
    }
    let core = without_isolated(pattern);
    if core.n() < k {
        // R(G + isolated vertices) = max(R(G), |V|)
        let res = ramsey_number_with(&core, r, cfg)?;
        let witness = if res.lo > k {
            res.witness
        } else {
            Some(EdgeColouring::uniform(k - 1, r, 0).expect("valid shape"))
        };
        return Ok(RamseyResult {
            lo: res.lo.max(k),
            hi: res.hi.map(|h| h.max(k)),
            witness,
            ..res
        });
    }
    let matcher = EdgeAnchoredMatcher::new(pattern);
    let ext = Extender {
        matcher: &matcher,
        r,
        tracker: &tracker,
    };
    let mut level = seed_level(r);
    // `best` is pattern-free on `best.n()` vertices, so R > best.n()
    let mut best = level[0].clone();
    loop {
        let m = level[0].n();
        if m >= 64 {
            break;
        }
        if m < cfg.iso_depth {
            match ext.next_level(&level) {
                Ok(next) if next.is_empty() => return Ok(finish(m + 1, Some(m + 1), Some(best))),
                Ok(next) => {
                    level = next;
                    best = level[0].clone();
                }
                Err(partial) => {
                    if let Some(c) = partial {
                        best = c;
                    }
                    break;
                }
            }
        } else {
            // beyond the reduction depth: one complete DFS per host size
            let mut target = best.n() + 1;
            loop {
                match ext.first_completion(&level, target) {
                    Ok(Some(w)) => {
                        best = w;
                        target += 1;
                        if target > 64 {
                            break;
                        }
                    }
                    Ok(None) => return Ok(finish(target, Some(target), Some(best))),
                    Err(()) => break,
                }
            }
            break;
        }
    }
    if best.n() + 1 < k {
        best = EdgeColouring::uniform(k - 1, r, 0).expect("valid shape");
    }
    if let Some(params) = &cfg.witness_search {
        while best.n() < 64 {
            match local_search_witness(best.n() + 1, r, pattern, params) {
                Some(w) => best = w,
                None => break,
            }
        }
    }
    Ok(finish(best.n() + 1, None, Some(best)))
}

/// The subgraph induced by the non-isolated vertices.
///
/// The extension step only looks for copies through the newest pair, which
/// misses copies that use the newest vertex as an isolated pattern vertex.
pub(crate) fn without_isolated(pattern: &Graph) -> Graph {
    let keep: Vec<usize> = (0..pattern.n()).filter(|&v| pattern.degree(v) > 0).collect();
    pattern.induced(&keep)
}

/// Two-colour Ramsey number of the path on `v` vertices.
pub fn path_ramsey_oracle(v: usize) -> usize {
    assert!(v >= 2, "a path needs at least 2 vertices");
    v + v / 2 - 1
}

/// `⌈(3m+1)/2⌉` for a path with `m` edges, the edge-count form of the law.
pub fn path_edge_expression(m: usize) -> usize {
    (3 * m + 1).div_ceil(2)
}
