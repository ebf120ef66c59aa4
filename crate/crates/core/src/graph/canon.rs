//! Canonical labelling by equitable-partition refinement and individualisation.
//!
//! The input is a list of symmetric "relation" row sets over the same vertex
//! set: one for a plain graph, `r - 1` colour classes for an `r`-colouring of
//! a complete graph (the last class is implied). The canonical labelling is
//! the leaf of the search tree whose relabelled rows are lexicographically
//! least; subtrees equivalent under an already discovered automorphism that
//! fixes the current path are skipped.

use super::{vertex_mask, Bits, Graph};

/// A canonical labelling: `perm[v]` is the canonical position of vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalLabelling {
    pub perm: Vec<usize>,
    /// Relabelled rows, one block of `n` words per relation.
    pub certificate: Vec<u64>,
}

impl CanonicalLabelling {
    /// Canonical rows of relation `k`.
    pub fn rows(&self, k: usize, n: usize) -> &[u64] {
        &self.certificate[k * n..(k + 1) * n]
    }
}

pub fn canonical_labelling(g: &Graph) -> CanonicalLabelling {
    canonical_labelling_relations(g.n(), &[g.rows()])
}

/// Isomorphism-invariant key: vertex count followed by the canonical rows.
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    let lab = canonical_labelling(g);
    let bytes_per_row = g.n().div_ceil(8);
    let mut out = Vec::with_capacity(1 + g.n() * bytes_per_row);
    out.push(g.n() as u8);
    for row in &lab.certificate {
        out.extend_from_slice(&row.to_le_bytes()[..bytes_per_row]);
    }
    out
}

pub(crate) fn canonical_labelling_relations(n: usize, relations: &[&[u64]]) -> CanonicalLabelling {
    debug_assert!(relations.iter().all(|r| r.len() == n));
    if n == 0 {
        return CanonicalLabelling {
            perm: Vec::new(),
            certificate: Vec::new(),
        };
    }
    let mut search = Search {
        n,
        relations,
        best: None,
        automorphisms: Vec::new(),
    };
    let mut cells = vec![vertex_mask(n)];
    let mut path = Vec::new();
    search.descend(&mut cells, &mut path);
    let best = search.best.expect("search visits at least one leaf");
    let (certificate, perm) = (best.certificate, best.perm);
    CanonicalLabelling { perm, certificate }
}

/// Automorphisms are kept up to this many; more only prune marginally.
const MAX_STORED_AUTOMORPHISMS: usize = 128;

struct Leaf {
    certificate: Vec<u64>,
    perm: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    n: usize,
    relations: &'a [&'a [u64]],
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Returns `Some(d)` when the rest of the tree below depth `d` is known to
    /// be an automorphic image of explored territory, so the caller should
    /// unwind to the node at depth `d`.
    fn descend(&mut self, cells: &mut Vec<u64>, path: &mut Vec<usize>) -> Option<usize> {
        self.refine(cells);
        if cells.len() == self.n {
            return self.leaf(cells, path);
        }
        let (target_idx, target) = cells
            .iter()
            .copied()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|&(i, c)| (c.count_ones(), i))
            .expect("non-discrete partition has a non-singleton cell");

        let mut tried: Vec<usize> = Vec::new();
        for v in Bits(target) {
            if !tried.is_empty() && self.equivalent_to_tried(path, v, &tried) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target_idx]);
            child.push(1u64 << v);
            child.push(target & !(1u64 << v));
            child.extend_from_slice(&cells[target_idx + 1..]);
            path.push(v);
            let jump = self.descend(&mut child, path);
            path.pop();
            if let Some(depth) = jump {
                if depth < path.len() {
                    return jump;
                }
            }
        }
        None
    }

    /// Is `v` in the orbit of an already explored sibling under the
    /// automorphisms found so far that fix `path` pointwise?
    fn equivalent_to_tried(&self, path: &[usize], v: usize, tried: &[usize]) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for aut in &self.automorphisms {
            if path.iter().any(|&p| aut[p] != p) {
                continue;
            }
            any = true;
            for x in 0..self.n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, aut[x]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        tried.iter().any(|&w| find(&mut parent, w) == root)
    }

    /// Splits cells by the number of neighbours each vertex has in every cell,
    /// per relation, until the partition is equitable. Signatures are hashed;
    /// a collision only weakens the refinement, it never breaks invariance.
    fn refine(&self, cells: &mut Vec<u64>) {
        let mut scratch: Vec<(u64, usize)> = Vec::with_capacity(self.n);
        loop {
            let snapshot = cells.clone();
            cells.clear();
            let mut changed = false;
            for &cell in &snapshot {
                if cell & (cell - 1) == 0 {
                    cells.push(cell);
                    continue;
                }
                scratch.clear();
                for v in Bits(cell) {
                    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
                    for rel in self.relations {
                        let row = rel[v];
                        for &other in &snapshot {
                            let count = (row & other).count_ones() as u64;
                            h = (h ^ count).wrapping_mul(0x0000_0100_0000_01b3);
                        }
                    }
                    scratch.push((h, v));
                }
                scratch.sort_unstable();
                let mut group = 0u64;
                let mut last = scratch[0].0;
                for &(h, v) in scratch.iter() {
                    if h != last {
                        cells.push(group);
                        group = 0;
                        last = h;
                        changed = true;
                    }
                    group |= 1u64 << v;
                }
                cells.push(group);
            }
            if !changed {
                return;
            }
        }
    }

    fn leaf(&mut self, cells: &[u64], path: &[usize]) -> Option<usize> {
        let mut perm = vec![0usize; self.n];
        for (pos, cell) in cells.iter().enumerate() {
            perm[cell.trailing_zeros() as usize] = pos;
        }
        let certificate = self.certificate(&perm);
        let leaf = Leaf {
            certificate,
            perm,
            path: path.to_vec(),
        };
        let Some(best) = &self.best else {
            self.best = Some(leaf);
            return None;
        };
        match leaf.certificate.cmp(&best.certificate) {
            std::cmp::Ordering::Less => {
                self.best = Some(leaf);
                None
            }
            std::cmp::Ordering::Greater => None,
            std::cmp::Ordering::Equal => {
                // best^-1 ∘ perm maps the graph onto itself and fixes the
                // common prefix of the two paths, so the current branch below
                // that prefix mirrors the already explored branch of the best leaf.
                let mut inv = vec![0usize; self.n];
                for (v, &p) in best.perm.iter().enumerate() {
                    inv[p] = v;
                }
                let aut: Vec<usize> = leaf.perm.iter().map(|&p| inv[p]).collect();
                let common = best
                    .path
                    .iter()
                    .zip(&leaf.path)
                    .take_while(|(a, b)| a == b)
                    .count();
                if self.automorphisms.len() < MAX_STORED_AUTOMORPHISMS
                    && aut.iter().enumerate().any(|(i, &a)| i != a)
                {
                    self.automorphisms.push(aut);
                }
                Some(common)
            }
        }
    }

    fn certificate(&self, perm: &[usize]) -> Vec<u64> {
        let n = self.n;
        let mut out = vec![0u64; n * self.relations.len()];
        for (k, rel) in self.relations.iter().enumerate() {
            for v in 0..n {
                let mut row = 0u64;
                for u in Bits(rel[v]) {
                    row |= 1u64 << perm[u];
                }
                out[k * n + perm[v]] = row;
            }
        }
        out
    }
}
