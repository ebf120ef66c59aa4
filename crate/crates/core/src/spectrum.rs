//! Ramsey values attained by small graphs.
//!
//! For `n`-vertex graphs, `R_n` collects the values of all isomorphism
//! classes, `R_n°` those without isolated vertices and `R_n^c` the connected
//! ones. Only exact results are set members; interval results are listed as
//! unresolved.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use rayon::prelude::*;

use crate::constructions::double_star;
use crate::engine::{ramsey_number_with, EngineConfig, RamseyResult};
use crate::graph::{canonical_form, enumerate_graphs, write_graph6, Graph, GraphFilter};

#[derive(Clone, Debug)]
pub struct ClassRecord {
    pub key: Vec<u8>,
    pub graph: Graph,
    pub graph6: String,
    pub connected: bool,
    pub no_isolated: bool,
    pub result: RamseyResult,
}

#[derive(Clone, Debug)]
pub struct SpectrumReport {
    pub n: usize,
    /// One per isomorphism class, ordered by canonical key.
    pub records: Vec<ClassRecord>,
    pub all: BTreeSet<usize>,
    pub no_isolated: BTreeSet<usize>,
    pub connected: BTreeSet<usize>,
    /// graph6 of every class with an interval result.
    pub unresolved: Vec<String>,
}

/// Two-colour Ramsey numbers of every graph on `n` vertices.
///
/// # Panics
/// Panics unless `1 <= n <= 6`.
pub fn spectrum(n: usize, cfg: &EngineConfig) -> SpectrumReport {
    assert!((1..=6).contains(&n), "spectrum supports 1 <= n <= 6");
    let mut graphs: Vec<(Vec<u8>, Graph)> = enumerate_graphs(n, GraphFilter::All)
        .expect("n in range")
        .into_iter()
        .map(|g| (canonical_form(&g), g))
        .collect();
    graphs.sort_by(|a, b| a.0.cmp(&b.0));
    let records: Vec<ClassRecord> = graphs
        .into_par_iter()
        .map(|(key, graph)| {
            let result = ramsey_number_with(&graph, 2, cfg).expect("two colours, non-empty pattern");
            ClassRecord {
                key,
                graph6: write_graph6(&graph),
                connected: graph.is_connected(),
                no_isolated: !graph.has_isolated_vertex(),
                graph,
                result,
            }
        })
        .collect();

    let mut report = SpectrumReport {
        n,
        records,
        all: BTreeSet::new(),
        no_isolated: BTreeSet::new(),
        connected: BTreeSet::new(),
        unresolved: Vec::new(),
    };
    for r in &report.records {
        match r.result.value() {
            Some(v) => {
                report.all.insert(v);
                if r.no_isolated {
                    report.no_isolated.insert(v);
                }
                if r.connected {
                    report.connected.insert(v);
                }
            }
            None => report.unresolved.push(r.graph6.clone()),
        }
    }
    report.check_invariants();
    report
}

impl SpectrumReport {
    fn check_invariants(&self) {
        assert!(self.all.contains(&self.n), "the empty graph has R = n");
        assert!(self.connected.is_subset(&self.no_isolated) || self.n == 1);
        assert!(self.no_isolated.is_subset(&self.all));
        let top = self
            .records
            .iter()
            .find(|r| r.graph.edge_count() == self.n * (self.n - 1) / 2)
            .and_then(|r| r.result.hi);
        for &v in &self.all {
            assert!(v >= self.n);
            if let Some(h) = top {
                assert!(v <= h, "{v} exceeds R(K_n) <= {h}");
            }
        }
    }

    /// Smallest exact value over classes without isolated vertices.
    pub fn min_no_isolated(&self) -> Option<usize> {
        self.no_isolated.first().copied()
    }

    /// Text table and summary block.
    pub fn render(&self, c: Ratio) -> String {
        let mut out = String::new();
        writeln!(out, "n = {}", self.n).unwrap();
        writeln!(out, "{:<10} {:>9} {:>11} {:>5} {:>5}  certificate", "graph6", "connected", "no_isolated", "lo", "hi").unwrap();
        for r in &self.records {
            let hi = r.result.hi.map_or("inf".to_string(), |h| h.to_string());
            writeln!(
                out,
                "{:<10} {:>9} {:>11} {:>5} {:>5}  {}",
                r.graph6, r.connected, r.no_isolated, r.result.lo, hi, r.result.upper_certificate
            )
            .unwrap();
        }
        writeln!(out, "R_n = {}", set_text(&self.all)).unwrap();
        writeln!(out, "R_n_no_isolated = {}", set_text(&self.no_isolated)).unwrap();
        writeln!(out, "R_n_connected = {}", set_text(&self.connected)).unwrap();
        writeln!(out, "UNRESOLVED = [{}]", self.unresolved.join(", ")).unwrap();
        let floor = check_burr_erdos_floor(self);
        writeln!(out, "floor {} {} min {} attained by [{}]", floor.floor, floor.status, opt(floor.minimum), floor.attaining.join(", ")).unwrap();
        if let Some(&top) = self.connected.last() {
            let gaps = find_c_gaps(&self.connected, c, self.n, top);
            writeln!(out, "gaps c={c} on [{}, {top}] = {}", self.n, set_text(&gaps.into_iter().collect())).unwrap();
        }
        out
    }
}

fn opt(v: Option<usize>) -> String {
    v.map_or("-".to_string(), |v| v.to_string())
}

fn set_text(s: &BTreeSet<usize>) -> String {
    let items: Vec<String> = s.iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FloorStatus {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for FloorStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FloorStatus::Pass => "PASS",
            FloorStatus::Fail => "FAIL",
            FloorStatus::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FloorCheck {
    /// `⌈4n/3⌉ - 1`.
    pub floor: usize,
    pub status: FloorStatus,
    /// Least lower bound over connected classes.
    pub minimum: Option<usize>,
    /// Connected classes whose exact value is the minimum.
    pub attaining: Vec<String>,
}

/// Lower bound `⌈4n/3⌉ - 1` for connected graphs.
pub fn check_burr_erdos_floor(report: &SpectrumReport) -> FloorCheck {
    let floor = (4 * report.n).div_ceil(3) - 1;
    let connected: Vec<&ClassRecord> = report.records.iter().filter(|r| r.connected).collect();
    let minimum = connected.iter().map(|r| r.result.lo).min();
    let attaining = connected
        .iter()
        .filter(|r| r.result.value().is_some() && Some(r.result.lo) == minimum)
        .map(|r| r.graph6.clone())
        .collect();
    let status = if connected.iter().any(|r| !r.result.exact() && r.result.lo < floor) {
        FloorStatus::Inconclusive
    } else if minimum.is_none_or(|m| m >= floor) {
        FloorStatus::Pass
    } else {
        FloorStatus::Fail
    };
    FloorCheck {
        floor,
        status,
        minimum,
        attaining,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InclusionStatus {
    Verified,
    /// The engine value differs from the target.
    Mismatch(usize),
    Unverified,
    /// No double star with `3a - 2i = v`, `i <= 2`, fits in `n` vertices.
    NoCandidate,
}

impl fmt::Display for InclusionStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InclusionStatus::Verified => f.write_str("VERIFIED"),
            InclusionStatus::Mismatch(r) => write!(f, "MISMATCH({r})"),
            InclusionStatus::Unverified => f.write_str("UNVERIFIED"),
            InclusionStatus::NoCandidate => f.write_str("NO_CANDIDATE"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InclusionEntry {
    pub value: usize,
    pub a: usize,
    pub i: usize,
    /// graph6 of the padded double star.
    pub graph6: String,
    pub status: InclusionStatus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InclusionReport {
    pub n: usize,
    /// `[n, ⌊3(n-2)/2⌋ - 3]`, empty when `hi < n`.
    pub lo: usize,
    pub hi: isize,
    pub entries: Vec<InclusionEntry>,
}

impl InclusionReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.status == InclusionStatus::Verified)
    }
}

/// Upper end of the double-star interval, `⌊3(n-2)/2⌋ - 3`.
pub fn inclusion_interval_hi(n: usize) -> isize {
    (3 * (n as isize - 2)).div_euclid(2) - 3
}

/// For each `v` in `[n, ⌊3(n-2)/2⌋ - 3]`, the double star `Σ_{a,a-i}` with
/// `3a - 2i = v` padded to `n` vertices. Adding isolated vertices to `G`
/// gives `max(R(G), n)`, so the engine is run on the unpadded star.
pub fn check_interval_inclusion(n: usize, cfg: &EngineConfig) -> InclusionReport {
    let hi = inclusion_interval_hi(n);
    let mut entries = Vec::new();
    let mut v = n;
    while (v as isize) <= hi {
        entries.push(inclusion_entry(n, v, cfg));
        v += 1;
    }
    InclusionReport { n, lo: n, hi, entries }
}

fn inclusion_entry(n: usize, v: usize, cfg: &EngineConfig) -> InclusionEntry {
    let candidate = (0..=2usize).find_map(|i| {
        let s = v + 2 * i;
        let a = s / 3;
        (s % 3 == 0 && a > i && 2 * a - i + 2 <= n).then_some((a, i))
    });
    let Some((a, i)) = candidate else {
        return InclusionEntry {
            value: v,
            a: 0,
            i: 0,
            graph6: String::new(),
            status: InclusionStatus::NoCandidate,
        };
    };
    let core = double_star(a, a - i).expect("a > i >= 0");
    let padded = core.with_isolated(n - core.n()).expect("at most 64 vertices");
    let status = match ramsey_number_with(&core, 2, cfg).ok().and_then(|r| r.value()) {
        Some(r) if r.max(n) == v => InclusionStatus::Verified,
        Some(r) => InclusionStatus::Mismatch(r.max(n)),
        None => InclusionStatus::Unverified,
    };
    InclusionEntry {
        value: v,
        a,
        i,
        graph6: write_graph6(&padded),
        status,
    }
}

/// A positive rational `num / den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0, "zero denominator");
        Self { num, den }
    }

    /// `⌈a * num / den⌉`.
    pub fn ceil_mul(self, a: usize) -> usize {
        ((a as u128 * self.num as u128).div_ceil(self.den as u128)) as usize
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Accepts `p/q`, an integer, or a decimal such as `1.1`.
impl FromStr for Ratio {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("invalid ratio {s:?}");
        let s = s.trim();
        if let Some((p, q)) = s.split_once('/') {
            let num = p.trim().parse().map_err(|_| bad())?;
            let den: u64 = q.trim().parse().map_err(|_| bad())?;
            if den == 0 {
                return Err(bad());
            }
            return Ok(Ratio { num, den });
        }
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        if frac.len() > 9 || !frac.chars().all(|ch| ch.is_ascii_digit()) {
            return Err(bad());
        }
        let den = 10u64.pow(frac.len() as u32);
        let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
        let frac: u64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
        Ok(Ratio {
            num: int.checked_mul(den).and_then(|x| x.checked_add(frac)).ok_or_else(bad)?,
            den,
        })
    }
}

/// Every `a` in `[lo, hi]` with `[a, ⌈c a⌉]` disjoint from `values`.
///
/// # Panics
/// Panics unless `c > 1`.
pub fn find_c_gaps(values: &BTreeSet<usize>, c: Ratio, lo: usize, hi: usize) -> Vec<usize> {
    assert!(c.num > c.den, "c must exceed 1");
    (lo..=hi)
        .filter(|&a| values.range(a..=c.ceil_mul(a)).next().is_none())
        .collect()
}
