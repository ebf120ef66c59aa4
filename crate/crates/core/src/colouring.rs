//! Edge colourings of complete graphs.
//!
//! Colours are small integers with a fixed reading: 0 is red, 1 is blue and
//! 2 is green. Pair colours are stored in one flat array indexed by the
//! colexicographic rank of the pair, `rank(i < j) = j(j-1)/2 + i`, which is
//! also the order of the text format.
//!
//! Random colourings draw from `ChaCha8Rng` (crate `rand_chacha` pinned to
//! 0.3.1) seeded with `seed_from_u64(seed)`; pair `k` in colex order takes
//! the colour `(next_u32() * r) >> 32`. This keeps identical `(N, r, seed)`
//! triples identical on every platform.

use std::fmt;
use std::str::FromStr;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::ColouringError;
use crate::graph::{canonical_labelling_relations, vertex_mask, Graph, MAX_VERTICES};

pub const RED: u8 = 0;
pub const BLUE: u8 = 1;
pub const GREEN: u8 = 2;

pub const MAX_COLOURS: u8 = 3;

#[inline]
pub(crate) const fn pair_rank(u: usize, v: usize) -> usize {
    let (i, j) = if u < v { (u, v) } else { (v, u) };
    j * (j - 1) / 2 + i
}

#[inline]
pub(crate) const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// An `r`-colouring of the edges of `K_N`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeColouring {
    n: usize,
    r: u8,
    col: Vec<u8>,
}

impl EdgeColouring {
    /// Every pair gets `colour`.
    pub fn uniform(n: usize, r: u8, colour: u8) -> Result<Self, ColouringError> {
        Self::check_shape(n, r)?;
        if colour >= r {
            return Err(ColouringError::ColourOutOfRange {
                colour: colour as usize,
                r,
            });
        }
        Ok(Self {
            n,
            r,
            col: vec![colour; pair_count(n)],
        })
    }

    /// Builds from colours in colex pair order.
    pub fn from_pairs(n: usize, r: u8, col: Vec<u8>) -> Result<Self, ColouringError> {
        Self::check_shape(n, r)?;
        let expected = pair_count(n);
        if col.len() < expected {
            return Err(ColouringError::MissingEntries {
                expected,
                found: col.len(),
            });
        }
        if col.len() > expected {
            return Err(ColouringError::DimensionMismatch {
                expected,
                extra: col.len() - expected,
            });
        }
        if let Some(&c) = col.iter().find(|&&c| c >= r) {
            return Err(ColouringError::ColourOutOfRange { colour: c as usize, r });
        }
        Ok(Self { n, r, col })
    }

    /// Two-colouring whose red class is `red` and blue class its complement.
    pub fn from_red_graph(red: &Graph) -> Self {
        let n = red.n();
        let mut col = vec![BLUE; pair_count(n)];
        for (u, v) in red.edges() {
            col[pair_rank(u, v)] = RED;
        }
        Self { n, r: 2, col }
    }

    fn check_shape(n: usize, r: u8) -> Result<(), ColouringError> {
        if n > MAX_VERTICES {
            return Err(ColouringError::TooManyVertices(n));
        }
        if !(1..=MAX_COLOURS).contains(&r) {
            return Err(ColouringError::UnsupportedColours(r as usize));
        }
        Ok(())
    }

    /// Uniform random colouring from the pinned generator; see the module docs.
    pub fn random(n: usize, r: u8, seed: u64) -> Result<Self, ColouringError> {
        Self::check_shape(n, r)?;
        if r < 2 {
            return Err(ColouringError::UnsupportedColours(r as usize));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let col = (0..pair_count(n))
            .map(|_| ((rng.next_u32() as u64 * r as u64) >> 32) as u8)
            .collect();
        Ok(Self { n, r, col })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn colours(&self) -> u8 {
        self.r
    }

    /// Colours in colex pair order.
    pub fn pairs(&self) -> &[u8] {
        &self.col
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u8 {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.col[pair_rank(u, v)]
    }

    pub fn set(&mut self, u: usize, v: usize, colour: u8) {
        assert!(u != v && u < self.n && v < self.n, "invalid pair ({u},{v})");
        assert!(colour < self.r, "colour {colour} out of range");
        self.col[pair_rank(u, v)] = colour;
    }

    /// Graph on all `N` vertices whose edges are the pairs of colour `i`.
    pub fn colour_class(&self, i: u8) -> Result<Graph, ColouringError> {
        if i >= self.r {
            return Err(ColouringError::ColourOutOfRange {
                colour: i as usize,
                r: self.r,
            });
        }
        Ok(Graph::from_rows(self.class_rows(i)).expect("colour classes are simple graphs"))
    }

    pub(crate) fn class_rows(&self, i: u8) -> Vec<u64> {
        let mut rows = vec![0u64; self.n];
        for j in 1..self.n {
            let base = j * (j - 1) / 2;
            for u in 0..j {
                if self.col[base + u] == i {
                    rows[u] |= 1 << j;
                    rows[j] |= 1 << u;
                }
            }
        }
        rows
    }

    /// Sub-colouring induced by `subset`, relabelled in increasing vertex order.
    pub fn restrict(&self, subset: &[usize]) -> Result<EdgeColouring, ColouringError> {
        let mut vs = subset.to_vec();
        vs.sort_unstable();
        vs.dedup();
        if let Some(&v) = vs.iter().find(|&&v| v >= self.n) {
            return Err(ColouringError::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(self.relabelled_subset(&vs))
    }

    /// Sub-colouring on `vertices` taken in the given order (no sorting).
    pub(crate) fn relabelled_subset(&self, vertices: &[usize]) -> EdgeColouring {
        let m = vertices.len();
        let mut col = Vec::with_capacity(pair_count(m));
        for j in 1..m {
            for i in 0..j {
                col.push(self.get(vertices[i], vertices[j]));
            }
        }
        EdgeColouring { n: m, r: self.r, col }
    }

    /// Exchanges colours `a` and `b` on every pair.
    pub fn swap_colours(&self, a: u8, b: u8) -> EdgeColouring {
        let col = self
            .col
            .iter()
            .map(|&c| if c == a { b } else if c == b { a } else { c })
            .collect();
        EdgeColouring { n: self.n, r: self.r, col }
    }

    /// Per-class neighbourhood rows, one vector per colour.
    pub(crate) fn all_class_rows(&self) -> Vec<Vec<u64>> {
        (0..self.r).map(|c| self.class_rows(c)).collect()
    }

    pub(crate) fn vertex_mask(&self) -> u64 {
        vertex_mask(self.n)
    }

    /// Canonical representative under vertex relabelling (colours stay
    /// fixed), with its key. Two colourings are isomorphic iff keys match.
    pub fn canonical(&self) -> (Vec<u64>, EdgeColouring) {
        let rows = self.all_class_rows();
        let relations: Vec<&[u64]> = rows[..self.r as usize - 1].iter().map(Vec::as_slice).collect();
        let lab = canonical_labelling_relations(self.n, &relations);
        let n = self.n;
        let mut col = vec![self.r - 1; pair_count(n)];
        for j in 1..n {
            for i in 0..j {
                for (k, block) in lab.certificate.chunks(n).enumerate() {
                    if block[i] >> j & 1 == 1 {
                        col[pair_rank(i, j)] = k as u8;
                        break;
                    }
                }
            }
        }
        let canon = EdgeColouring { n, r: self.r, col };
        (lab.certificate, canon)
    }
}

impl fmt::Debug for EdgeColouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeColouring(N={}, r={}, {:?})", self.n, self.r, self.col)
    }
}

/// Text format: `N r`, then line `j` (1-based) holds the colours of
/// `{0,j}, {1,j}, ..., {j-1,j}`.
impl fmt::Display for EdgeColouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.r)?;
        for j in 1..self.n {
            let base = j * (j - 1) / 2;
            for (i, c) in self.col[base..base + j].iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{c}")?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

/// Parses the text format; lines starting with `#` are comments and entries
/// are read as a whitespace-separated stream.
impl FromStr for EdgeColouring {
    type Err = ColouringError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut tokens = text
            .lines()
            .filter(|l| !l.trim_start().starts_with('#'))
            .flat_map(str::split_whitespace);
        let mut header = |what: &str| -> Result<usize, ColouringError> {
            let tok = tokens
                .next()
                .ok_or_else(|| ColouringError::Header(format!("missing {what}")))?;
            tok.parse()
                .map_err(|_| ColouringError::Header(format!("bad {what} {tok:?}")))
        };
        let n = header("vertex count")?;
        let r = header("colour count")?;
        if n > MAX_VERTICES {
            return Err(ColouringError::TooManyVertices(n));
        }
        if !(1..=MAX_COLOURS as usize).contains(&r) {
            return Err(ColouringError::UnsupportedColours(r));
        }
        let mut col = Vec::with_capacity(pair_count(n));
        for tok in tokens {
            let c: usize = tok.parse().map_err(|_| ColouringError::BadToken(tok.to_string()))?;
            if c >= r {
                return Err(ColouringError::ColourOutOfRange { colour: c, r: r as u8 });
            }
            col.push(c as u8);
        }
        Self::from_pairs(n, r as u8, col)
    }
}
