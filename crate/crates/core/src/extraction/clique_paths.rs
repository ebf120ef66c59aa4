//! Clique-paths: disjoint monochromatic cliques `Q^1, ..., Q^l` with an edge
//! of the same colour between consecutive cliques, the edges pairwise
//! vertex-disjoint.

use serde::{Deserialize, Serialize};

use crate::colouring::{EdgeColouring, BLUE};

use super::{distinct, is_mono_clique, CoverFailure, StepFailure};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliquePath {
    pub cliques: Vec<Vec<usize>>,
    /// `links[i]` joins a vertex of `cliques[i]` to one of `cliques[i + 1]`.
    pub links: Vec<(usize, usize)>,
}

/// The four structural conditions, checked separately.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CliquePathCheck {
    pub cliques_disjoint: bool,
    pub cliques_complete: bool,
    pub links_coloured: bool,
    pub links_disjoint: bool,
}

impl CliquePathCheck {
    pub fn all(&self) -> bool {
        self.cliques_disjoint && self.cliques_complete && self.links_coloured && self.links_disjoint
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum End {
    Front,
    Back,
}

impl CliquePath {
    fn single(clique: Vec<usize>) -> Self {
        Self {
            cliques: vec![clique],
            links: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.cliques.iter().map(Vec::len).sum()
    }

    pub fn check(&self, c: &EdgeColouring, colour: u8, t: usize) -> CliquePathCheck {
        let all: Vec<usize> = self.cliques.iter().flatten().copied().collect();
        let in_range = all.iter().all(|&v| v < c.n());
        let cliques_disjoint = in_range && distinct(&all);
        let cliques_complete = in_range
            && !self.cliques.is_empty()
            && self.cliques.iter().all(|q| q.len() == t && is_mono_clique(c, q, colour));
        let links_coloured = in_range
            && self.links.len() + 1 == self.cliques.len()
            && self.links.iter().enumerate().all(|(i, &(x, y))| {
                self.cliques[i].contains(&x) && self.cliques[i + 1].contains(&y) && c.get(x, y) == colour
            });
        let ends: Vec<usize> = self.links.iter().flat_map(|&(x, y)| [x, y]).collect();
        CliquePathCheck {
            cliques_disjoint,
            cliques_complete,
            links_coloured,
            links_disjoint: distinct(&ends),
        }
    }

    /// All four conditions in the given colour.
    pub fn verify_in(&self, c: &EdgeColouring, colour: u8, t: usize) -> bool {
        self.check(c, colour, t).all()
    }

    pub fn verify(&self, c: &EdgeColouring, t: usize) -> bool {
        self.verify_in(c, BLUE, t)
    }

    fn reversed(&self) -> Self {
        Self {
            cliques: self.cliques.iter().rev().cloned().collect(),
            links: self.links.iter().rev().map(|&(x, y)| (y, x)).collect(),
        }
    }

    fn ends(&self) -> &'static [End] {
        if self.cliques.len() == 1 {
            &[End::Front]
        } else {
            &[End::Front, End::Back]
        }
    }

    /// The end-clique at `end` and its vertices already used by a link.
    fn end_clique(&self, end: End) -> (&[usize], Vec<usize>) {
        let l = self.cliques.len();
        match end {
            End::Front => (&self.cliques[0], self.links.first().map(|&(x, _)| x).into_iter().collect()),
            End::Back => (&self.cliques[l - 1], self.links.last().map(|&(_, y)| y).into_iter().collect()),
        }
    }

    fn free_at(&self, end: End) -> Vec<usize> {
        let (q, used) = self.end_clique(end);
        q.iter().copied().filter(|v| !used.contains(v)).collect()
    }
}

/// Covers disjoint blue `K_t`'s by at most `t - 1` blue clique-paths.
pub fn cover_by_clique_paths(c: &EdgeColouring, cliques: &[Vec<usize>], t: usize) -> Result<Vec<CliquePath>, StepFailure> {
    cover_by_clique_paths_in(c, cliques, t, BLUE)
}

/// As [`cover_by_clique_paths`] with cliques and links in `colour`.
///
/// Starting from one path per clique, any two paths whose end-cliques have
/// free vertices (not used by a link) joined by a `colour` pair are merged
/// while possible. Success means at most `t - 1` paths remain. If no such pair exists while `t` or
/// more paths are left, one free vertex from the front end-clique of each of
/// the first `t` paths spans a `K_t` in the other colour, which is returned.
/// An end-clique of a path with a link has `t - 1` free vertices, so a free
/// vertex is missing only when `t = 1`.
pub fn cover_by_clique_paths_in(
    c: &EdgeColouring,
    cliques: &[Vec<usize>],
    t: usize,
    colour: u8,
) -> Result<Vec<CliquePath>, StepFailure> {
    let mut paths: Vec<CliquePath> = cliques.iter().cloned().map(CliquePath::single).collect();
    let limit = t.saturating_sub(1);
    loop {
        match find_merge(c, &paths, colour) {
            Some((i, ei, j, ej, qi, qj)) => {
                let head = if ei == End::Front { paths[i].reversed() } else { paths[i].clone() };
                let tail = if ej == End::Back { paths[j].reversed() } else { paths[j].clone() };
                let mut merged = head;
                merged.links.push((qi, qj));
                merged.links.extend(tail.links);
                merged.cliques.extend(tail.cliques);
                paths.remove(j);
                paths[i] = merged;
            }
            None if paths.len() <= limit => return Ok(paths),
            None => {
                let mut reps = Vec::with_capacity(t);
                for p in paths.iter().take(t) {
                    match p.free_at(End::Front).first() {
                        Some(&q) => reps.push(q),
                        None => {
                            let (q, used) = p.end_clique(End::Front);
                            return Err(StepFailure::CliqueCoverFail(CoverFailure::NoRepresentative {
                                clique: q.to_vec(),
                                used,
                            }));
                        }
                    }
                }
                return Err(StepFailure::CliqueCoverFail(CoverFailure::Clique {
                    colour: 1 - colour,
                    vertices: reps,
                }));
            }
        }
    }
}

type Merge = (usize, End, usize, End, usize, usize);

fn find_merge(c: &EdgeColouring, paths: &[CliquePath], colour: u8) -> Option<Merge> {
    for i in 0..paths.len() {
        for j in i + 1..paths.len() {
            for &ei in paths[i].ends() {
                let fi = paths[i].free_at(ei);
                for &ej in paths[j].ends() {
                    let fj = paths[j].free_at(ej);
                    for &qi in &fi {
                        if let Some(&qj) = fj.iter().find(|&&qj| c.get(qi, qj) == colour) {
                            return Some((i, ei, j, ej, qi, qj));
                        }
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::RED;
    use crate::graph::Graph;

    fn triangles(k: usize) -> Vec<Vec<usize>> {
        (0..k).map(|i| vec![3 * i, 3 * i + 1, 3 * i + 2]).collect()
    }

    #[test]
    fn single_clique() {
        let c = EdgeColouring::uniform(3, 2, BLUE).unwrap();
        let paths = cover_by_clique_paths(&c, &triangles(1), 3).unwrap();
        assert_eq!(paths.len(), 1);
        assert!(paths[0].links.is_empty());
        assert!(paths[0].verify(&c, 3));
    }

    #[test]
    fn all_blue_merges_into_one() {
        let c = EdgeColouring::uniform(12, 2, BLUE).unwrap();
        let paths = cover_by_clique_paths(&c, &triangles(4), 3).unwrap();
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].cliques.len(), 4);
        assert!(paths[0].verify(&c, 3));
    }

    #[test]
    fn red_bipartite_blowup() {
        // red: complete bipartite between {0..5} and {6..11}; blue inside parts
        let mut red = Graph::empty(12);
        for u in 0..6 {
            for v in 6..12 {
                red.add_edge(u, v);
            }
        }
        let c = EdgeColouring::from_red_graph(&red);
        let paths = cover_by_clique_paths(&c, &triangles(4), 3).unwrap();
        assert!(paths.len() <= 2);
        let mut covered: Vec<Vec<usize>> = paths.iter().flat_map(|p| p.cliques.clone()).collect();
        covered.sort();
        assert_eq!(covered, triangles(4));
        assert!(paths.iter().all(|p| p.verify(&c, 3)));
    }

    #[test]
    fn red_triangle_certificate() {
        // three blue triangles with every cross pair red
        let mut red = Graph::complete(9);
        for q in triangles(3) {
            red.remove_edge(q[0], q[1]);
            red.remove_edge(q[0], q[2]);
            red.remove_edge(q[1], q[2]);
        }
        let c = EdgeColouring::from_red_graph(&red);
        match cover_by_clique_paths(&c, &triangles(3), 3) {
            Err(f @ StepFailure::CliqueCoverFail(CoverFailure::Clique { colour: RED, .. })) => assert!(f.verify(&c, 3)),
            other => panic!("{other:?}"),
        }
    }
}
