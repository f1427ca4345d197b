//! Canonical labeling of small graphs by exhaustive search.
//!
//! The canonical form is the lexicographically smallest upper-triangle bit
//! string `x(0,1), x(0,2), x(1,2), x(0,3), ...` over all relabelings,
//! returned as the graph6 encoding of that relabeling. The search places
//! vertices one position at a time; placing position `j` fixes the `j` bits
//! of column `j`, so only candidates attaining the smallest column value are
//! expanded. Twin vertices (equal neighborhoods apart from each other) are
//! interchangeable, and only the lowest unplaced member of a twin class is
//! tried at each step.

use crate::error::GraphError;
use crate::graph::Graph;
use crate::graph6;

/// Largest order accepted by [`canonical_form`] and [`is_isomorphic`].
pub const MAX_CANON_VERTICES: usize = 10;

struct Search<'a> {
    adj: &'a [u64],
    /// For each vertex, the twins with a smaller index.
    lower_twins: Vec<u64>,
    /// Best column values so far; `best[j]` is column `j` (index 0 unused).
    best: Vec<u64>,
    placed: Vec<usize>,
    /// Abort as soon as anything beats the initial `best`.
    stop_on_improvement: bool,
    improved: bool,
}

impl<'a> Search<'a> {
    fn new(adj: &'a [u64], best: Vec<u64>, stop_on_improvement: bool) -> Self {
        let n = adj.len();
        let lower_twins = (0..n)
            .map(|v| {
                (0..v)
                    .filter(|&u| {
                        let mask = !((1u64 << u) | (1u64 << v));
                        adj[u] & mask == adj[v] & mask
                    })
                    .fold(0u64, |acc, u| acc | (1u64 << u))
            })
            .collect();
        Search {
            adj,
            lower_twins,
            best,
            placed: Vec::with_capacity(n),
            stop_on_improvement,
            improved: false,
        }
    }

    fn column(&self, v: usize) -> u64 {
        let row = self.adj[v];
        self.placed
            .iter()
            .fold(0u64, |c, &p| (c << 1) | ((row >> p) & 1))
    }

    /// Returns false when the search was aborted.
    fn run(&mut self, used: u64) -> bool {
        let n = self.adj.len();
        let j = self.placed.len();
        if j == n {
            return true;
        }
        let mut candidates = 0u64;
        if j == 0 {
            candidates = (1u64 << n) - 1;
        } else {
            let mut min = u64::MAX;
            for v in 0..n {
                if used & (1u64 << v) != 0 {
                    continue;
                }
                let c = self.column(v);
                if c < min {
                    min = c;
                    candidates = 0;
                }
                if c == min {
                    candidates |= 1u64 << v;
                }
            }
            if min > self.best[j] {
                return true;
            }
            if min < self.best[j] {
                if self.stop_on_improvement {
                    self.improved = true;
                    return false;
                }
                self.best[j] = min;
                for b in &mut self.best[j + 1..] {
                    *b = u64::MAX;
                }
            }
        }
        let mut rest = candidates;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            // an unplaced lower twin covers this branch
            if self.lower_twins[v] & !used != 0 {
                continue;
            }
            self.placed.push(v);
            let keep_going = self.run(used | (1u64 << v));
            self.placed.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }
}

fn identity_columns(adj: &[u64]) -> Vec<u64> {
    let n = adj.len();
    let mut cols = vec![0u64; n];
    for (j, col) in cols.iter_mut().enumerate().skip(1) {
        *col = (0..j).fold(0u64, |c, i| (c << 1) | ((adj[j] >> i) & 1));
    }
    cols
}

fn check_size(n: usize) -> Result<(), GraphError> {
    if n > MAX_CANON_VERTICES {
        Err(GraphError::SizeLimit {
            what: "canonical form",
            limit: MAX_CANON_VERTICES,
            n,
        })
    } else {
        Ok(())
    }
}

/// True iff the labeling given by `adj` is already the canonical one.
pub(crate) fn is_canonical_labeling(adj: &[u64]) -> bool {
    let mut search = Search::new(adj, identity_columns(adj), true);
    search.run(0);
    !search.improved
}

/// The canonical relabeling of `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph, GraphError> {
    check_size(g.order())?;
    let adj = g.adjacency();
    let n = adj.len();
    let mut search = Search::new(adj, identity_columns(adj), false);
    search.run(0);
    let mut out = vec![0u64; n];
    for j in 1..n {
        let col = search.best[j];
        for i in 0..j {
            if (col >> (j - 1 - i)) & 1 == 1 {
                out[i] |= 1u64 << j;
                out[j] |= 1u64 << i;
            }
        }
    }
    Ok(Graph::from_adjacency_unchecked(out))
}

/// Canonical form as graph6 bytes; equal exactly for isomorphic graphs.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>, GraphError> {
    Ok(graph6::emit_bytes(&canonical_graph(g)?))
}

pub fn canonical_graph6(g: &Graph) -> Result<String, GraphError> {
    Ok(graph6::emit_graph6(&canonical_graph(g)?))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool, GraphError> {
    check_size(g.order())?;
    check_size(h.order())?;
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;
    use std::collections::HashSet;

    /// Minimum over all n! relabelings, no pruning.
    fn brute_force_form(g: &Graph) -> Vec<u8> {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best: Option<Vec<u8>> = None;
        loop {
            let s = graph6::emit_bytes(&g.permute(&perm).unwrap());
            if best.as_ref().is_none_or(|b| s < *b) {
                best = Some(s);
            }
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
            perm.swap(i - 1, j);
            perm[i..].reverse();
        }
        best.unwrap()
    }

    fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        (0u64..1 << pairs.len()).map(move |m| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| m >> k & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    }

    #[test]
    fn relabeled_path_has_same_form() {
        let a = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, &[(1, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn c4_and_claw_differ() {
        let c4 = Graph::construct(Family::Cycle(4)).unwrap();
        let claw = Graph::construct(Family::Star(3)).unwrap();
        assert_ne!(canonical_form(&c4).unwrap(), canonical_form(&claw).unwrap());
    }

    #[test]
    fn matches_brute_force_on_all_labeled_graphs_up_to_5() {
        for n in 1..=5 {
            for g in labeled_graphs(n) {
                let fast = canonical_form(&g).unwrap();
                assert_eq!(fast, brute_force_form(&g), "{g:?}");
                let canonical = is_canonical_labeling(g.adjacency());
                assert_eq!(canonical, graph6::emit_bytes(&g) == fast, "{g:?}");
            }
        }
    }

    #[test]
    fn eleven_classes_on_four_vertices() {
        let forms: HashSet<_> = labeled_graphs(4)
            .map(|g| canonical_form(&g).unwrap())
            .collect();
        assert_eq!(forms.len(), 11);
        let oracle: HashSet<_> = labeled_graphs(4).map(|g| brute_force_form(&g)).collect();
        assert_eq!(forms, oracle);
    }

    #[test]
    fn isomorphism_examples() {
        let c4 = Graph::construct(Family::Cycle(4)).unwrap();
        let k22 = Graph::construct(Family::CompleteBipartite(2, 2)).unwrap();
        assert!(is_isomorphic(&c4, &k22).unwrap());

        let k3k1 = Graph::construct(Family::Complete(3))
            .unwrap()
            .with_isolated(1)
            .unwrap();
        let claw = Graph::construct(Family::Star(3)).unwrap();
        assert!(!is_isomorphic(&k3k1, &claw).unwrap());

        let cp2 = Graph::construct(Family::CocktailParty(2)).unwrap();
        assert!(is_isomorphic(&cp2, &c4).unwrap());
        assert_eq!(brute_force_form(&cp2), brute_force_form(&c4));
    }

    #[test]
    fn cocktail_party_complement_is_matching() {
        let cp3 = Graph::construct(Family::CocktailParty(3)).unwrap();
        let k2 = Graph::construct(Family::Complete(2)).unwrap();
        let three_k2 = k2.disjoint_union(&k2).unwrap().disjoint_union(&k2).unwrap();
        let shuffled = three_k2.permute(&[3, 0, 5, 1, 4, 2]).unwrap();
        assert!(is_isomorphic(&cp3.complement(), &shuffled).unwrap());
        assert_eq!(
            brute_force_form(&cp3.complement()),
            brute_force_form(&shuffled)
        );
    }

    #[test]
    fn size_limit() {
        let g = Graph::empty(11).unwrap();
        assert!(matches!(
            canonical_form(&g),
            Err(GraphError::SizeLimit { .. })
        ));
        assert!(is_isomorphic(&g, &g).is_err());
        let g10 = Graph::empty(10).unwrap();
        assert_eq!(canonical_graph(&g10).unwrap(), g10);
    }
}
