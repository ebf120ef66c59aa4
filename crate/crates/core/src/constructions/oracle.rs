//! Ramsey values of cliques and bicliques for the parameter-selection rules.
//!
//! Entries come from the engine when it finishes within budget and are
//! otherwise intervals built from the engine's lower bound and closed-form
//! bounds. Results can be persisted in a text ledger, one line per entry:
//!
//! ```text
//! <family> <t> <lo> <hi|inf> <certificate> <version>
//! ```
//!
//! `family` is `K` or `Ktt` and `certificate` one of `PROVED_BY_SEARCH`,
//! `BUDGET_EXHAUSTED` or `KNOWN_BOUND(name)`.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, RwLock};

use crate::engine::{ramsey_number_with, EngineConfig, RamseyResult, UpperCertificate};
use crate::error::OracleError;
use crate::graph::{canonical_form, Graph};

/// File name of the ledger inside a cache directory.
pub const LEDGER_FILE: &str = "oracle.ledger";

/// Patterns larger than this are never handed to the engine.
const ENGINE_MAX_ORDER: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// `K_t`
    Clique,
    /// `K_{t,t}`
    Biclique,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::Clique => "K",
            Family::Biclique => "Ktt",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        match s {
            "K" => Some(Family::Clique),
            "Ktt" => Some(Family::Biclique),
            _ => None,
        }
    }

    pub fn pattern(self, t: usize) -> Graph {
        match self {
            Family::Clique => Graph::complete(t),
            Family::Biclique => Graph::complete_bipartite(t, t),
        }
    }

    /// Human-readable name of the member with parameter `t`.
    pub fn name(self, t: usize) -> String {
        match self {
            Family::Clique => format!("K_{t}"),
            Family::Biclique => format!("K_{{{t},{t}}}"),
        }
    }

    /// Closed-form bounds for the two-colour Ramsey number.
    pub(crate) fn closed_form(self, t: usize) -> (usize, Option<usize>, &'static str) {
        match self {
            Family::Clique => {
                let lo = if t >= 3 { pow2_half_floor(t) + 1 } else { t };
                (lo, binomial(2 * t - 2, t - 1), "2^(t/2)<R(K_t)<=C(2t-2,t-1)")
            }
            Family::Biclique => {
                let lo = (2 * t).max(pow2_half_ceil(t));
                (lo, binomial(4 * t - 2, 2 * t - 1), "2^(t/2)<=R(K_tt)<=R(K_2t)")
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// `⌊2^{t/2}⌋` (saturating).
fn pow2_half_floor(t: usize) -> usize {
    if t / 2 >= usize::BITS as usize - 1 {
        return usize::MAX;
    }
    let base = 1usize << (t / 2);
    if t % 2 == 0 {
        base
    } else {
        // ⌊base·√2⌋ is the largest x with x² ≤ 2·base²
        let target = 2 * (base as u128) * (base as u128);
        let mut x = ((base as f64) * std::f64::consts::SQRT_2) as u128;
        while x * x > target {
            x -= 1;
        }
        while (x + 1) * (x + 1) <= target {
            x += 1;
        }
        x as usize
    }
}

/// `⌈2^{t/2}⌉`.
fn pow2_half_ceil(t: usize) -> usize {
    let f = pow2_half_floor(t);
    if t % 2 == 0 {
        f
    } else {
        f.saturating_add(1)
    }
}

fn binomial(n: usize, k: usize) -> Option<usize> {
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc * (n as u128 - i) / (i + 1);
        if acc > usize::MAX as u128 {
            return None;
        }
    }
    Some(acc as usize)
}

type Table = BTreeMap<(Family, usize), RamseyResult>;

/// Lookup table for `R(K_t)` and `R(K_{t,t})`.
///
/// Readers take a snapshot of an immutable table; the engine runs outside any
/// lock and results are published by replacing the snapshot.
pub struct RamseyOracle {
    table: RwLock<Arc<Table>>,
    config: EngineConfig,
    engine_enabled: bool,
    ledger: Option<PathBuf>,
    writer: Mutex<()>,
}

impl RamseyOracle {
    /// Oracle that computes missing entries with the engine under `config`.
    pub fn new(config: EngineConfig) -> Self {
        Self {
            table: RwLock::new(Arc::new(BTreeMap::new())),
            config,
            engine_enabled: true,
            ledger: None,
            writer: Mutex::new(()),
        }
    }

    /// Oracle that only knows inserted entries and closed-form bounds.
    pub fn bounds_only() -> Self {
        let mut o = Self::new(EngineConfig::default());
        o.engine_enabled = false;
        o
    }

    /// Loads `dir/oracle.ledger` if present and appends new entries to it.
    pub fn with_cache_dir(mut self, dir: &Path) -> Result<Self, OracleError> {
        let path = dir.join(LEDGER_FILE);
        if path.exists() {
            let text = fs::read_to_string(&path).map_err(|e| OracleError::Io(e.to_string()))?;
            let mut table = (**self.table.read().expect("oracle lock")).clone();
            for (key, res) in parse_ledger(&text)? {
                table.insert(key, res);
            }
            self.table = RwLock::new(Arc::new(table));
        }
        self.ledger = Some(path);
        Ok(self)
    }

    pub fn snapshot(&self) -> Arc<BTreeMap<(Family, usize), RamseyResult>> {
        Arc::clone(&self.table.read().expect("oracle lock"))
    }

    /// Adds or replaces an entry (not written to the ledger).
    pub fn insert(&self, family: Family, t: usize, result: RamseyResult) {
        let _w = self.writer.lock().expect("oracle writer");
        let mut table = (*self.snapshot()).clone();
        table.insert((family, t), result);
        *self.table.write().expect("oracle lock") = Arc::new(table);
    }

    /// Two-colour Ramsey number of the family member with parameter `t >= 1`.
    pub fn get(&self, family: Family, t: usize) -> Result<RamseyResult, OracleError> {
        assert!(t >= 1, "family parameter starts at 1");
        if let Some(r) = self.snapshot().get(&(family, t)) {
            return Ok(r.clone());
        }
        let (clo, chi, name) = family.closed_form(t);
        let pattern = family.pattern(t);
        let result = if self.engine_enabled && pattern.n() <= ENGINE_MAX_ORDER {
            let res = ramsey_number_with(&pattern, 2, &self.config)?;
            if res.exact() {
                res
            } else {
                RamseyResult {
                    lo: res.lo.max(clo),
                    hi: chi,
                    witness: res.witness.filter(|w| w.n() + 1 >= clo),
                    upper_certificate: UpperCertificate::KnownBound(name.into()),
                    nodes: res.nodes,
                    seconds: res.seconds,
                }
            }
        } else {
            RamseyResult::known_bounds(clo, chi, name)
        };
        self.publish(family, t, &result)?;
        Ok(result)
    }

    /// Two-colour Ramsey number of an arbitrary pattern. Cliques and
    /// bicliques go through the table; anything else is searched directly
    /// (up to the engine size limit) and not cached.
    pub fn two_colour(&self, h: &Graph) -> Result<RamseyResult, OracleError> {
        let n = h.n();
        if n >= 1 && h.edge_count() == n * (n - 1) / 2 {
            return self.get(Family::Clique, n);
        }
        if n >= 2 && n % 2 == 0 && canonical_form(h) == canonical_form(&Graph::complete_bipartite(n / 2, n / 2)) {
            return self.get(Family::Biclique, n / 2);
        }
        if self.engine_enabled && n <= ENGINE_MAX_ORDER {
            return Ok(ramsey_number_with(h, 2, &self.config)?);
        }
        Ok(RamseyResult::known_bounds(n, None, "order"))
    }

    fn publish(&self, family: Family, t: usize, result: &RamseyResult) -> Result<(), OracleError> {
        let _w = self.writer.lock().expect("oracle writer");
        let mut table = (*self.snapshot()).clone();
        if table.contains_key(&(family, t)) {
            return Ok(());
        }
        table.insert((family, t), result.clone());
        *self.table.write().expect("oracle lock") = Arc::new(table);
        if let Some(path) = &self.ledger {
            if let Some(dir) = path.parent() {
                fs::create_dir_all(dir).map_err(|e| OracleError::Io(e.to_string()))?;
            }
            let mut f = fs::OpenOptions::new()
                .create(true)
                .append(true)
                .open(path)
                .map_err(|e| OracleError::Io(e.to_string()))?;
            writeln!(f, "{}", ledger_line(family, t, result)).map_err(|e| OracleError::Io(e.to_string()))?;
        }
        Ok(())
    }
}

pub(crate) fn ledger_line(family: Family, t: usize, r: &RamseyResult) -> String {
    let hi = r.hi.map_or("inf".to_string(), |h| h.to_string());
    format!(
        "{} {} {} {} {} {}",
        family.tag(),
        t,
        r.lo,
        hi,
        r.upper_certificate,
        env!("CARGO_PKG_VERSION")
    )
}

fn parse_ledger(text: &str) -> Result<Vec<((Family, usize), RamseyResult)>, OracleError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |reason: &str| OracleError::Ledger {
            line: i + 1,
            reason: reason.to_string(),
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 6 {
            return Err(bad("expected 6 fields"));
        }
        let family = Family::parse(fields[0]).ok_or_else(|| bad("unknown family"))?;
        let t: usize = fields[1].parse().map_err(|_| bad("bad parameter"))?;
        let lo: usize = fields[2].parse().map_err(|_| bad("bad lower bound"))?;
        let hi = match fields[3] {
            "inf" => None,
            s => Some(s.parse::<usize>().map_err(|_| bad("bad upper bound"))?),
        };
        if t == 0 || hi.is_some_and(|h| h < lo) {
            return Err(bad("inconsistent entry"));
        }
        let cert = match fields[4] {
            "PROVED_BY_SEARCH" => UpperCertificate::ProvedBySearch,
            "BUDGET_EXHAUSTED" => UpperCertificate::BudgetExhausted,
            s => match s.strip_prefix("KNOWN_BOUND(").and_then(|s| s.strip_suffix(')')) {
                Some(name) => UpperCertificate::KnownBound(name.to_string()),
                None => return Err(bad("unknown certificate")),
            },
        };
        if (cert == UpperCertificate::ProvedBySearch) != (hi == Some(lo)) {
            return Err(bad("only searched entries are exact"));
        }
        out.push((
            (family, t),
            RamseyResult {
                lo,
                hi,
                witness: None,
                upper_certificate: cert,
                nodes: 0,
                seconds: 0.0,
            },
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::SearchBudget;

    #[test]
    fn closed_forms() {
        assert_eq!(pow2_half_floor(3), 2);
        assert_eq!(pow2_half_floor(4), 4);
        assert_eq!(pow2_half_floor(5), 5);
        assert_eq!(pow2_half_ceil(5), 6);
        assert_eq!(Family::Clique.closed_form(4).0, 5);
        assert_eq!(Family::Clique.closed_form(4).1, Some(20));
        assert_eq!(Family::Biclique.closed_form(3).0, 6);
        assert_eq!(binomial(6, 3), Some(20));
        assert_eq!(binomial(126, 63), None);
    }

    #[test]
    fn small_entries_are_exact() {
        let o = RamseyOracle::new(EngineConfig::with_budget(SearchBudget::new(10_000_000, 60.0)));
        for (fam, t, v) in [
            (Family::Clique, 1, 1),
            (Family::Clique, 2, 2),
            (Family::Clique, 3, 6),
            (Family::Biclique, 1, 2),
            (Family::Biclique, 2, 6),
        ] {
            let r = o.get(fam, t).unwrap();
            assert_eq!(r.value(), Some(v), "{fam} {t}");
            assert_eq!(r.upper_certificate, UpperCertificate::ProvedBySearch);
        }
    }

    #[test]
    fn ledger_round_trip() {
        let dir = std::env::temp_dir().join(format!("oracle-ledger-{}", std::process::id()));
        let _ = fs::remove_dir_all(&dir);
        let o = RamseyOracle::new(EngineConfig::default()).with_cache_dir(&dir).unwrap();
        o.get(Family::Clique, 3).unwrap();
        let o2 = RamseyOracle::bounds_only().with_cache_dir(&dir).unwrap();
        assert_eq!(o2.snapshot().get(&(Family::Clique, 3)).unwrap().value(), Some(6));
        let text = fs::read_to_string(dir.join(LEDGER_FILE)).unwrap();
        assert!(text.starts_with("K 3 6 6 PROVED_BY_SEARCH "));
        fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn ledger_rejects_garbage() {
        assert!(parse_ledger("K 3 6 6 PROVED_BY_SEARCH 0.1.0\n").is_ok());
        assert!(parse_ledger("K 3 6 7 PROVED_BY_SEARCH 0.1.0\n").is_err());
        assert!(parse_ledger("Q 3 6 6 PROVED_BY_SEARCH 0.1.0\n").is_err());
        assert!(parse_ledger("K 3 6 inf\n").is_err());
        assert!(parse_ledger("# comment\n\nKtt 3 10 inf KNOWN_BOUND(x) 0.1.0\n").is_ok());
    }
}
