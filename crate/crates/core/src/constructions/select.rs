//! Parameter selection and the case split of the growth-rate construction.
//!
//! Case 1 applies when `f(n)^8 <= 2^n` and Case 2 when `f(n) >= ⌈2n·log2 n⌉`,
//! both decided in exact integer arithmetic; if both hold, Case 1 wins. A
//! value in neither range is out of regime: the Case 1 graph is used when its
//! biclique fits into `n` vertices, the Case 2 graph otherwise.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use super::oracle::{Family, RamseyOracle};
use super::{biclique_path_graph, clique_path_graph};
use crate::error::{ConstructionError, OracleError, Straddle};
use crate::graph::Graph;

/// Smallest `t` with `R(K_{t,t}) > fn_value`.
pub fn select_t_case1(fn_value: u64, oracle: &RamseyOracle) -> Result<usize, OracleError> {
    select(fn_value, oracle, Family::Biclique, |lo| lo as u64 > fn_value, |hi| hi as u64 <= fn_value)
}

/// Smallest `t` with `R(K_t) >= fn_value`.
pub fn select_t_case2(fn_value: u64, oracle: &RamseyOracle) -> Result<usize, OracleError> {
    select(fn_value, oracle, Family::Clique, |lo| lo as u64 >= fn_value, |hi| (hi as u64) < fn_value)
}

fn select(
    fn_value: u64,
    oracle: &RamseyOracle,
    family: Family,
    lo_passes: impl Fn(usize) -> bool,
    hi_fails: impl Fn(usize) -> bool,
) -> Result<usize, OracleError> {
    for t in 1..=64 {
        let r = oracle.get(family, t)?;
        if lo_passes(r.lo) {
            return Ok(t);
        }
        match r.hi {
            Some(hi) if hi_fails(hi) => continue,
            hi => {
                return Err(OracleError::Insufficient(Straddle {
                    key: family.name(t),
                    lo: r.lo,
                    hi,
                    threshold: fn_value,
                }))
            }
        }
    }
    unreachable!("closed-form lower bounds exceed any u64 threshold before t = 64")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Case {
    One,
    Two,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    Case1Range,
    Case2Range,
    OutOfRegime,
}

/// Result of [`build_g`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuiltGraph {
    pub graph: Graph,
    pub case: Case,
    pub regime: Regime,
    pub t: usize,
    pub fn_value: u64,
}

/// `f(n)^8 <= 2^n`, i.e. `f(n) <= 2^{n/8}`.
fn in_case1_range(f: u64, n: usize) -> bool {
    BigUint::from(f).pow(8) <= BigUint::from(1u8) << n
}

/// `⌈2n·log2 n⌉`: the least `f` with `2^f >= n^{2n}`.
pub(crate) fn case2_threshold(n: usize) -> u64 {
    if n <= 1 {
        return 0;
    }
    let p = BigUint::from(n).pow(2 * n as u32);
    let bits = p.bits();
    if p == BigUint::from(1u8) << (bits - 1) {
        bits - 1
    } else {
        bits
    }
}

/// Largest `f` with `f^8 <= 2^n`, i.e. `⌊2^{n/8}⌋`.
pub(crate) fn case1_threshold(n: usize) -> u64 {
    let mut f = 2f64.powf(n as f64 / 8.0) as u64;
    while f > 0 && !in_case1_range(f, n) {
        f -= 1;
    }
    while in_case1_range(f + 1, n) {
        f += 1;
    }
    f
}

/// Named choices of `f` mirroring the regime boundaries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preset {
    /// `f(n) = n`
    Linear,
    /// `f(n) = ⌈2n·log2 n⌉`
    TwoNLogN,
    /// `f(n) = ⌊2^{n/8}⌋`, floored at `n`
    Exponential,
}

impl Preset {
    pub fn value(self, n: usize) -> u64 {
        match self {
            Preset::Linear => n as u64,
            Preset::TwoNLogN => case2_threshold(n).max(n as u64),
            Preset::Exponential => case1_threshold(n).max(n as u64),
        }
    }

    /// Values on `1..=n`.
    pub fn table(self, n: usize) -> BTreeMap<usize, u64> {
        (1..=n).map(|m| (m, self.value(m))).collect()
    }
}

/// The `n`-vertex graph whose Ramsey number is at least `f(n)`.
pub fn build_g(f_values: &BTreeMap<usize, u64>, n: usize, oracle: &RamseyOracle) -> Result<BuiltGraph, ConstructionError> {
    let mut prev: Option<(usize, u64)> = None;
    for (&m, &f) in f_values {
        if let Some((pm, pf)) = prev {
            if f < pf {
                return Err(ConstructionError::NonMonotone {
                    n_prev: pm,
                    f_prev: pf,
                    n: m,
                    f,
                });
            }
        }
        prev = Some((m, f));
    }
    let f = *f_values.get(&n).ok_or(ConstructionError::MissingValue { n })?;
    if n == 0 || n > 64 {
        return Err(ConstructionError::InvalidParameters(format!("n must be in 1..=64, got {n}")));
    }
    // upper end of the range checked against the closed-form clique bound
    let upper = Family::Clique.closed_form(n).1;
    if f < n as u64 || upper.is_some_and(|hi| f > hi as u64) {
        return Err(ConstructionError::OutOfRange { n, f });
    }
    let regime = if in_case1_range(f, n) {
        Regime::Case1Range
    } else if f >= case2_threshold(n) {
        Regime::Case2Range
    } else {
        Regime::OutOfRegime
    };
    let case1 = || -> Result<Option<BuiltGraph>, ConstructionError> {
        let t = select_t_case1(f, oracle)?;
        if 2 * t > n {
            return Ok(None);
        }
        Ok(Some(BuiltGraph {
            graph: biclique_path_graph(t, n)?,
            case: Case::One,
            regime,
            t,
            fn_value: f,
        }))
    };
    let case2 = || -> Result<BuiltGraph, ConstructionError> {
        let t = select_t_case2(f, oracle)?;
        if t > n {
            return Err(ConstructionError::InvalidParameters(format!(
                "Case 2 needs t <= n, got t={t}, n={n}"
            )));
        }
        Ok(BuiltGraph {
            graph: clique_path_graph(t, n)?,
            case: Case::Two,
            regime,
            t,
            fn_value: f,
        })
    };
    match regime {
        Regime::Case1Range => case1()?.ok_or_else(|| {
            ConstructionError::InvalidParameters(format!("Case 1 biclique does not fit into {n} vertices"))
        }),
        Regime::Case2Range => case2(),
        Regime::OutOfRegime => match case1()? {
            Some(b) => Ok(b),
            None => case2(),
        },
    }
}
