//! Witness colourings for lower bounds.
//!
//! * Random two-colourings of `K_N` without a monochromatic `K_{t,t}`.
//! * The blocked three-colouring: `chi(H) - 1` blocks, each a copy of an
//!   `H`-free two-colouring, with every cross-block pair green. The green
//!   class is complete multipartite with `chi(H) - 1` parts, so it holds no
//!   graph of chromatic number `chi(H)`; any monochromatic copy of a graph
//!   containing a connected `H` would have its `H` inside one block.

use rayon::prelude::*;

use crate::colouring::{EdgeColouring, GREEN};
use crate::constructions::RamseyOracle;
use crate::engine::{find_mono_copy, local_search_witness, WitnessSearch};
use crate::error::{LowerBoundError, OracleError, Straddle};
use crate::graph::{chromatic_number, find_embedding, write_graph6, Graph, MAX_VERTICES};

/// First of `max_tries` random colourings (attempt `k` uses seed
/// `seed + k`) without a monochromatic `K_{t,t}`.
///
/// # Panics
/// Panics if `t == 0`, `n == 0` or `n > 64`.
pub fn random_biclique_witness(t: usize, n: usize, seed: u64, max_tries: u64) -> Option<EdgeColouring> {
    assert!(t >= 1 && (1..=MAX_VERTICES).contains(&n), "need t >= 1 and 1 <= N <= 64");
    let ktt = Graph::complete_bipartite(t, t);
    (0..max_tries).into_par_iter().find_map_first(|k| {
        let c = EdgeColouring::random(n, 2, seed.wrapping_add(k)).expect("valid shape");
        verify_no_mono(&c, &ktt).then_some(c)
    })
}

/// Blocked three-colouring of `K_{(chi_h - 1) M}` from an `H`-free
/// two-colouring of `K_M`. Block `i` is `{iM, ..., iM + M - 1}`.
pub fn blocked_3colouring(h_witness: &EdgeColouring, chi_h: usize) -> Result<EdgeColouring, LowerBoundError> {
    if chi_h < 2 {
        return Err(LowerBoundError::ChromaticTooSmall(chi_h));
    }
    if h_witness.colours() != 2 {
        return Err(LowerBoundError::WitnessColours(h_witness.colours()));
    }
    let m = h_witness.n();
    let total = (chi_h - 1).saturating_mul(m);
    if total > MAX_VERTICES {
        return Err(LowerBoundError::TooLarge(total));
    }
    let mut c = EdgeColouring::uniform(total, 3, GREEN).expect("valid shape");
    for b in 0..chi_h - 1 {
        for j in 1..m {
            for i in 0..j {
                c.set(b * m + i, b * m + j, h_witness.get(i, j));
            }
        }
    }
    Ok(c)
}

pub fn verify_no_mono(c: &EdgeColouring, g: &Graph) -> bool {
    find_mono_copy(c, g).is_none()
}

/// `R_3(G) >= value`, certified by `witness`.
#[derive(Clone, Debug, PartialEq)]
pub struct R3Bound {
    pub value: usize,
    pub chi_h: usize,
    pub r2_h: usize,
    pub witness: EdgeColouring,
}

/// `(chi(H) - 1)(R_2(H) - 1) + 1` for connected `H` inside `G`, with the
/// blocked witness checked against `G`.
pub fn r3_lower_bound(g: &Graph, h: &Graph, oracle: &RamseyOracle) -> Result<R3Bound, LowerBoundError> {
    if !h.is_connected() {
        return Err(LowerBoundError::Disconnected);
    }
    if find_embedding(g, h).is_none() {
        return Err(LowerBoundError::NotSubgraph);
    }
    let chi_h = chromatic_number(h);
    let res = oracle.two_colour(h)?;
    if !res.exact() {
        return Err(OracleError::Insufficient(Straddle {
            key: format!("R({})", write_graph6(h)),
            lo: res.lo,
            hi: res.hi,
            threshold: res.lo as u64,
        })
        .into());
    }
    let r2_h = res.lo;
    let witness = match res.witness {
        Some(w) => w,
        None if r2_h <= 1 => EdgeColouring::uniform(0, 2, 0).expect("valid shape"),
        None => local_search_witness(r2_h - 1, 2, h, &WitnessSearch::default()).ok_or(LowerBoundError::BadWitness)?,
    };
    if witness.n() + 1 != r2_h || !verify_no_mono(&witness, h) {
        return Err(LowerBoundError::BadWitness);
    }
    let blocked = blocked_3colouring(&witness, chi_h)?;
    if !verify_no_mono(&blocked, g) {
        return Err(LowerBoundError::BadWitness);
    }
    Ok(R3Bound {
        value: blocked.n() + 1,
        chi_h,
        r2_h,
        witness: blocked,
    })
}

/// Colouring text preceded by comments naming the excluded pattern and the
/// bound it implies.
pub fn witness_text(c: &EdgeColouring, excluded: &Graph) -> String {
    format!(
        "# no monochromatic {}\n# R_{}({}) >= {}\n{}",
        write_graph6(excluded),
        c.colours(),
        write_graph6(excluded),
        c.n() + 1,
        c
    )
}
