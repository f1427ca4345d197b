//! Exact minimum dominating sets.
//!
//! The phrase "minimal dominating set" is sometimes used loosely for a
//! dominating set of size gamma; that is called a *minimum* dominating set here.

use serde::Serialize;

use crate::error::GraphError;
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DominationResult {
    pub gamma: usize,
    #[serde(serialize_with = "serialize_set")]
    pub witness: VertexSet,
}

fn serialize_set<S: serde::Serializer>(s: &VertexSet, ser: S) -> Result<S::Ok, S::Error> {
    ser.collect_seq(s.iter())
}

/// Every vertex outside `s` has a neighbor in `s`.
pub fn is_dominating(g: &Graph, s: VertexSet) -> Result<bool, GraphError> {
    if !s.is_subset(g.vertices()) {
        let vertex = 63 - s.difference(g.vertices()).bits().leading_zeros() as usize;
        return Err(GraphError::VertexOutOfRange {
            vertex,
            n: g.order(),
        });
    }
    Ok(covered_by(g, s) == g.vertices())
}

fn covered_by(g: &Graph, s: VertexSet) -> VertexSet {
    s.iter()
        .fold(VertexSet::EMPTY, |acc, v| acc.union(g.closed_neighbors(v)))
}

struct BranchAndBound {
    closed: Vec<u64>,
    all: u64,
    best_size: usize,
    best: u64,
}

impl BranchAndBound {
    fn greedy(&self) -> u64 {
        let mut covered = 0u64;
        let mut chosen = 0u64;
        while covered != self.all {
            let v = (0..self.closed.len())
                .max_by_key(|&v| {
                    (
                        (self.closed[v] & !covered).count_ones(),
                        std::cmp::Reverse(v),
                    )
                })
                .expect("nonempty graph");
            chosen |= 1u64 << v;
            covered |= self.closed[v];
        }
        chosen
    }

    fn search(&mut self, chosen: u64, covered: u64) {
        let uncovered = self.all & !covered;
        let size = chosen.count_ones() as usize;
        if uncovered == 0 {
            if size < self.best_size {
                self.best_size = size;
                self.best = chosen;
            }
            return;
        }
        // lower bound: every further vertex covers at most `reach` new vertices
        let reach = self
            .closed
            .iter()
            .map(|&c| (c & uncovered).count_ones())
            .max()
            .unwrap_or(0) as usize;
        let left = uncovered.count_ones() as usize;
        if size + left.div_ceil(reach) >= self.best_size {
            return;
        }
        // branch on the uncovered vertex with the fewest possible dominators
        let mut pick = usize::MAX;
        let mut pick_options = u32::MAX;
        let mut rest = uncovered;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let options = self.closed[v].count_ones();
            if options < pick_options {
                pick_options = options;
                pick = v;
            }
        }
        let mut options = self.closed[pick];
        while options != 0 {
            let w = options.trailing_zeros() as usize;
            options &= options - 1;
            self.search(chosen | (1u64 << w), covered | self.closed[w]);
        }
    }
}

/// Exact domination number with a witness.
///
/// The search is seeded with a greedy solution, so the witness is the first
/// strictly improving set found under the fixed branching order, or the
/// greedy set when that is already optimal. Either way it is deterministic.
pub fn domination_number(g: &Graph) -> DominationResult {
    let n = g.order();
    let mut bb = BranchAndBound {
        closed: (0..n).map(|v| g.closed_neighbors(v).bits()).collect(),
        all: g.vertices().bits(),
        best_size: usize::MAX,
        best: 0,
    };
    let greedy = bb.greedy();
    bb.best = greedy;
    bb.best_size = greedy.count_ones() as usize;
    bb.search(0, 0);
    DominationResult {
        gamma: bb.best_size,
        witness: VertexSet(bb.best),
    }
}
