//! Structural recognizers: bipartitions, semiregularity, twin-edge
//! augmentation (`B⁺`, `S⁺`) and the extremal families attaining the
//! domination-constrained spectral bounds.

use std::fmt;

use serde::Serialize;

use crate::canon;
use crate::error::GraphError;
use crate::graph::{Bipartition, Family, Graph, VertexSet};

/// Largest order accepted by [`is_in_s_plus`].
pub const MAX_S_PLUS_VERTICES: usize = 20;
/// Largest `|E_U| + |E_W|` accepted by [`b_plus_members`].
pub const MAX_TWIN_PAIRS: usize = 20;

/// Same-side pairs with identical neighborhoods on the opposite side.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TwinEdgeSets {
    pub e_u: Vec<(usize, usize)>,
    pub e_w: Vec<(usize, usize)>,
}

impl TwinEdgeSets {
    pub fn len(&self) -> usize {
        self.e_u.len() + self.e_w.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.e_u.iter().chain(&self.e_w).copied()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ExtremalKind {
    #[serde(rename = "L_theorem")]
    LTheorem,
    #[serde(rename = "Q_clique")]
    QClique,
    #[serde(rename = "Q_cocktail")]
    QCocktail,
    #[serde(rename = "bipartite_L")]
    BipartiteL,
}

impl ExtremalKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ExtremalKind::LTheorem => "L_theorem",
            ExtremalKind::QClique => "Q_clique",
            ExtremalKind::QCocktail => "Q_cocktail",
            ExtremalKind::BipartiteL => "bipartite_L",
        }
    }
}

impl fmt::Display for ExtremalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Certificate that a graph belongs to one of the extremal families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtremalWitness {
    pub kind: ExtremalKind,
    pub isolated_count: usize,
    pub core_vertices: VertexSet,
    pub bipartition: Option<Bipartition>,
}

/// Which graphs count as "bipartite semi-regular" when testing `S⁺`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SemiregularReading {
    /// Constant degree `r >= 1` on `U` and `s >= 1` on `W`.
    #[default]
    Degrees,
    /// As `Degrees`, and the bipartite graph must also be connected.
    Connected,
}

/// Two-colors every component by BFS. The lowest vertex of each component
/// goes to `U`, so isolated vertices land in `U`.
pub fn bipartition_of(g: &Graph) -> Option<Bipartition> {
    let mut u = VertexSet::EMPTY;
    let mut w = VertexSet::EMPTY;
    for comp in g.components() {
        let start = comp.first().expect("components are nonempty");
        let mut side = [VertexSet::singleton(start), VertexSet::EMPTY];
        let mut frontier = side[0];
        let mut parity = 0;
        while !frontier.is_empty() {
            let next = frontier
                .iter()
                .fold(VertexSet::EMPTY, |acc, v| acc.union(g.neighbors(v)));
            if !next.intersection(side[parity]).is_empty() {
                return None;
            }
            parity ^= 1;
            frontier = next.difference(side[parity]);
            side[parity] = side[parity].union(frontier);
        }
        u = u.union(side[0]);
        w = w.union(side[1]);
    }
    Some(Bipartition { u, w })
}

pub fn is_bipartite(g: &Graph) -> bool {
    bipartition_of(g).is_some()
}

/// Checks that `bp` partitions `V(g)` and that no edge lies inside a part.
pub fn validate_bipartition(g: &Graph, bp: &Bipartition) -> Result<(), GraphError> {
    let invalid = |m: String| Err(GraphError::InvalidBipartition(m));
    if !bp.u.intersection(bp.w).is_empty() {
        return invalid("parts are not disjoint".into());
    }
    if bp.vertices() != g.vertices() {
        return invalid(format!(
            "parts {} and {} do not cover the vertex set",
            bp.u, bp.w
        ));
    }
    for (a, b) in g.edges() {
        if bp.u.contains(a) == bp.u.contains(b) {
            return invalid(format!("edge {a}{b} lies inside a part"));
        }
    }
    Ok(())
}

fn constant_degree(g: &Graph, part: VertexSet) -> Option<usize> {
    let d = g.degree(part.first()?);
    part.iter().all(|v| g.degree(v) == d).then_some(d)
}

/// All of `U` share one degree `r >= 1` and all of `W` one degree `s >= 1`.
pub fn is_semiregular_bipartite(g: &Graph, bp: &Bipartition) -> Result<bool, GraphError> {
    validate_bipartition(g, bp)?;
    Ok(matches!(
        (constant_degree(g, bp.u), constant_degree(g, bp.w)),
        (Some(r), Some(s)) if r >= 1 && s >= 1
    ))
}

fn twin_pairs(b: &Graph, side: VertexSet, other: VertexSet) -> Vec<(usize, usize)> {
    let members: Vec<usize> = side.iter().collect();
    let mut out = Vec::new();
    for (i, &x) in members.iter().enumerate() {
        let nx = b.neighbors(x).intersection(other);
        for &y in &members[i + 1..] {
            if b.neighbors(y).intersection(other) == nx {
                out.push((x, y));
            }
        }
    }
    out
}

pub fn twin_edge_sets(b: &Graph, bp: &Bipartition) -> Result<TwinEdgeSets, GraphError> {
    validate_bipartition(b, bp)?;
    Ok(TwinEdgeSets {
        e_u: twin_pairs(b, bp.u, bp.w),
        e_w: twin_pairs(b, bp.w, bp.u),
    })
}

/// Every graph `H` with `E(B) ⊆ E(H) ⊆ E(B) ∪ E_U ∪ E_W`.
///
/// Subsets are produced in binary counting order over the pair list
/// `E_U ++ E_W`, so `b` itself comes first.
pub fn b_plus_members(
    b: &Graph,
    bp: &Bipartition,
) -> Result<impl Iterator<Item = Graph>, GraphError> {
    let twins = twin_edge_sets(b, bp)?;
    if twins.len() > MAX_TWIN_PAIRS {
        return Err(GraphError::TwinCapExceeded(twins.len()));
    }
    let pairs: Vec<(usize, usize)> = twins.pairs().collect();
    let base = b.adjacency().to_vec();
    Ok((0u32..1 << pairs.len()).map(move |mask| {
        let mut adj = base.clone();
        for (k, &(x, y)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                adj[x] |= 1u64 << y;
                adj[y] |= 1u64 << x;
            }
        }
        Graph::from_adjacency_unchecked(adj)
    }))
}

/// Membership in `S⁺` under the default reading.
pub fn is_in_s_plus(g: &Graph) -> Result<Option<Bipartition>, GraphError> {
    is_in_s_plus_with(g, SemiregularReading::default())
}

/// Searches bipartitions `(U, W)` of `V(g)` with `0 ∈ U` for one whose
/// cross edges form a semiregular bipartite `B` and whose within-part edges
/// all join twins of `B`. Returns the first such bipartition in mask order.
pub fn is_in_s_plus_with(
    g: &Graph,
    reading: SemiregularReading,
) -> Result<Option<Bipartition>, GraphError> {
    let n = g.order();
    if n > MAX_S_PLUS_VERTICES {
        return Err(GraphError::SizeLimit {
            what: "S+ membership",
            limit: MAX_S_PLUS_VERTICES,
            n,
        });
    }
    let adj = g.adjacency();
    let all = g.vertices().bits();
    'masks: for mask in 1u64..(1u64 << (n - 1)) {
        let w = mask << 1;
        let u = all & !w;
        let mut degrees = [None::<u32>; 2];
        for (v, &row) in adj.iter().enumerate() {
            let (side, other) = if u >> v & 1 == 1 { (0, w) } else { (1, u) };
            let d = (row & other).count_ones();
            if d == 0 {
                continue 'masks;
            }
            match degrees[side] {
                None => degrees[side] = Some(d),
                Some(e) if e != d => continue 'masks,
                _ => {}
            }
        }
        for v in 0..n {
            let (same, other) = if u >> v & 1 == 1 { (u, w) } else { (w, u) };
            let cross = adj[v] & other;
            let mut inside = adj[v] & same;
            while inside != 0 {
                let x = inside.trailing_zeros() as usize;
                inside &= inside - 1;
                if adj[x] & other != cross {
                    continue 'masks;
                }
            }
        }
        if reading == SemiregularReading::Connected {
            let cross: Vec<u64> = (0..n)
                .map(|v| adj[v] & if u >> v & 1 == 1 { w } else { u })
                .collect();
            if !Graph::from_adjacency_unchecked(cross).is_connected() {
                continue;
            }
        }
        return Ok(Some(Bipartition {
            u: VertexSet(u),
            w: VertexSet(w),
        }));
    }
    Ok(None)
}

fn check_gamma(g: &Graph, gamma: usize, low: usize) -> Result<(), GraphError> {
    let n = g.order();
    if gamma < low || gamma + 1 > n {
        return Err(GraphError::InvalidParameters(format!(
            "gamma = {gamma} outside {low}..={} for n = {n}",
            n.saturating_sub(1)
        )));
    }
    Ok(())
}

/// Splits `core` into two unions of complement components, each side of
/// size at least 2, so that every cross pair is an edge of `g`.
fn all_cross_bipartition(g: &Graph, core: VertexSet) -> Option<Bipartition> {
    let m = core.len();
    if m < 4 {
        return None;
    }
    let sub = g.induced(core).ok()?;
    let members: Vec<usize> = core.iter().collect();
    let lift = |s: VertexSet| -> VertexSet { s.iter().map(|i| members[i]).collect() };
    let comps = sub.complement().components();
    // ways[s] = first union of components (in order) with s vertices
    let mut ways: Vec<Option<VertexSet>> = vec![None; m + 1];
    ways[0] = Some(VertexSet::EMPTY);
    for c in &comps {
        for s in (0..=m - c.len()).rev() {
            if let (Some(base), None) = (ways[s], ways[s + c.len()]) {
                ways[s + c.len()] = Some(base.union(*c));
            }
        }
    }
    let side = (2..=m - 2).find_map(|s| ways[s])?;
    let u = lift(side);
    let w = core.difference(u);
    let (u, w) = if u.first() < w.first() {
        (u, w)
    } else {
        (w, u)
    };
    Some(Bipartition { u, w })
}

/// Equality family of the Laplacian bound `mu <= n - gamma + 2`:
/// `gamma - 2` isolated vertices plus a core `H ∈ K_{a,b}⁺` with
/// `a, b >= 2`, and maximum degree at most `n - gamma`.
pub fn is_extremal_l(g: &Graph, gamma: usize) -> Result<Option<ExtremalWitness>, GraphError> {
    check_gamma(g, gamma, 2)?;
    let n = g.order();
    let isolated = g.isolated_vertices();
    if isolated.len() != gamma - 2 || g.max_degree() > n - gamma {
        return Ok(None);
    }
    let core = g.vertices().difference(isolated);
    Ok(all_cross_bipartition(g, core).map(|bp| ExtremalWitness {
        kind: ExtremalKind::LTheorem,
        isolated_count: isolated.len(),
        core_vertices: core,
        bipartition: Some(bp),
    }))
}

/// Bipartite equality family: `gamma - 2` isolated vertices plus
/// `K_{a, n-gamma+2-a}` with `2 <= a <= (n - gamma + 2) / 2`.
pub fn is_extremal_bipartite_l(g: &Graph, gamma: usize) -> Result<bool, GraphError> {
    if !is_bipartite(g) {
        return Err(GraphError::InvalidParameters(
            "graph is not bipartite".into(),
        ));
    }
    check_gamma(g, gamma, 2)?;
    let isolated = g.isolated_vertices();
    if isolated.len() != gamma - 2 {
        return Ok(false);
    }
    let core = g.vertices().difference(isolated);
    let h = g.induced(core)?;
    let bp = bipartition_of(&h).expect("subgraph of a bipartite graph");
    let (a, b) = (bp.u.len(), bp.w.len());
    Ok(a >= 2 && b >= 2 && h.edge_count() == a * b)
}

/// `g ≅ family ∪ k K_1`, by canonical form when small enough.
fn isomorphic_to_padded(
    g: &Graph,
    family: Family,
    isolated: usize,
    structural: impl Fn(&Graph) -> bool,
) -> Result<bool, GraphError> {
    if g.order() <= canon::MAX_CANON_VERTICES {
        let target = Graph::construct(family)?.with_isolated(isolated)?;
        return canon::is_isomorphic(g, &target);
    }
    let iso = g.isolated_vertices();
    if iso.len() != isolated {
        return Ok(false);
    }
    let core = g.induced(g.vertices().difference(iso))?;
    Ok(structural(&core))
}

/// Equality families of the signless bound `q <= 2(n - gamma)`:
/// `K_{n-gamma+1} ∪ (gamma-1) K_1`, or for `gamma >= 2` with `n - gamma`
/// even, the cocktail party graph on `n - gamma + 2` vertices plus
/// `gamma - 2` isolated vertices.
pub fn is_extremal_q(g: &Graph, gamma: usize) -> Result<Option<ExtremalWitness>, GraphError> {
    check_gamma(g, gamma, 1)?;
    let n = g.order();
    let isolated = g.isolated_vertices();
    let witness = |kind| ExtremalWitness {
        kind,
        isolated_count: isolated.len(),
        core_vertices: g.vertices().difference(isolated),
        bipartition: None,
    };
    let core_size = n - gamma + 1;
    if isomorphic_to_padded(g, Family::Complete(core_size), gamma - 1, |h| {
        h.order() == core_size && h.is_complete()
    })? {
        return Ok(Some(witness(ExtremalKind::QClique)));
    }
    if gamma >= 2 && (n - gamma).is_multiple_of(2) {
        let k = (n - gamma + 2) / 2;
        let is_cocktail =
            |h: &Graph| h.order() == 2 * k && h.complement().degrees().iter().all(|&d| d == 1);
        if isomorphic_to_padded(g, Family::CocktailParty(k), gamma - 2, is_cocktail)? {
            return Ok(Some(witness(ExtremalKind::QCocktail)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(f: Family) -> Graph {
        Graph::construct(f).unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(vs.iter().copied())
    }

    #[test]
    fn bipartition_examples() {
        let c4 = g(Family::Cycle(4));
        assert_eq!(
            bipartition_of(&c4),
            Some(Bipartition {
                u: set(&[0, 2]),
                w: set(&[1, 3])
            })
        );
        assert_eq!(bipartition_of(&g(Family::Complete(3))), None);
        assert_eq!(
            bipartition_of(&Graph::empty(2).unwrap()),
            Some(Bipartition {
                u: set(&[0, 1]),
                w: VertexSet::EMPTY
            })
        );
        assert_eq!(bipartition_of(&g(Family::Cycle(5))), None);
    }

    #[test]
    fn semiregular_examples() {
        let k23 = g(Family::CompleteBipartite(2, 3));
        let bp = Bipartition {
            u: set(&[0, 1]),
            w: set(&[2, 3, 4]),
        };
        assert!(is_semiregular_bipartite(&k23, &bp).unwrap());

        let p4 = g(Family::Path(4));
        let bp = Bipartition {
            u: set(&[0, 2]),
            w: set(&[1, 3]),
        };
        assert!(!is_semiregular_bipartite(&p4, &bp).unwrap());

        let c6 = g(Family::Cycle(6));
        let bp = bipartition_of(&c6).unwrap();
        assert!(is_semiregular_bipartite(&c6, &bp).unwrap());

        let bad = Bipartition {
            u: set(&[0, 1]),
            w: set(&[2, 3]),
        };
        assert!(is_semiregular_bipartite(&p4, &bad).is_err());
        let partial = Bipartition {
            u: set(&[0]),
            w: set(&[1]),
        };
        assert!(is_semiregular_bipartite(&p4, &partial).is_err());
    }

    #[test]
    fn twin_examples() {
        let k23 = g(Family::CompleteBipartite(2, 3));
        let bp = Bipartition {
            u: set(&[0, 1]),
            w: set(&[2, 3, 4]),
        };
        let t = twin_edge_sets(&k23, &bp).unwrap();
        assert_eq!(t.e_u, vec![(0, 1)]);
        assert_eq!(t.e_w, vec![(2, 3), (2, 4), (3, 4)]);

        let c6 = g(Family::Cycle(6));
        let t = twin_edge_sets(&c6, &bipartition_of(&c6).unwrap()).unwrap();
        assert!(t.is_empty());

        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let bp = Bipartition {
            u: set(&[0, 2]),
            w: set(&[1, 3]),
        };
        assert!(twin_edge_sets(&two_k2, &bp).unwrap().is_empty());
    }

    #[test]
    fn b_plus_examples() {
        let k22 = g(Family::CompleteBipartite(2, 2));
        let bp = bipartition_of(&k22).unwrap();
        let members: Vec<Graph> = b_plus_members(&k22, &bp).unwrap().collect();
        assert_eq!(members.len(), 4);
        assert_eq!(members[0], k22);
        assert_eq!(members[3], g(Family::Complete(4)));
        assert_eq!(members[1].edge_count(), 5);
        assert_eq!(members[2].edge_count(), 5);

        let c6 = g(Family::Cycle(6));
        let members: Vec<Graph> = b_plus_members(&c6, &bipartition_of(&c6).unwrap())
            .unwrap()
            .collect();
        assert_eq!(members, vec![c6]);

        let k23 = g(Family::CompleteBipartite(2, 3));
        assert_eq!(
            b_plus_members(&k23, &bipartition_of(&k23).unwrap())
                .unwrap()
                .count(),
            16
        );

        // K_{3,6}: 3 + 15 twin pairs fit; K_{2,7}: 1 + 21 do not.
        let k36 = g(Family::CompleteBipartite(3, 6));
        assert!(b_plus_members(&k36, &bipartition_of(&k36).unwrap()).is_ok());
        let k27 = g(Family::CompleteBipartite(2, 7));
        assert!(matches!(
            b_plus_members(&k27, &bipartition_of(&k27).unwrap()).err(),
            Some(GraphError::TwinCapExceeded(22))
        ));
    }

    #[test]
    fn s_plus_examples() {
        assert!(is_in_s_plus(&g(Family::CompleteBipartite(2, 2)))
            .unwrap()
            .is_some());
        // K_{1,3} with all three leaf pairs as twin edges
        let k4 = is_in_s_plus(&g(Family::Complete(4))).unwrap().unwrap();
        assert_eq!((k4.u, k4.w), (set(&[0, 2, 3]), set(&[1])));
        assert!(is_in_s_plus(&g(Family::Path(4))).unwrap().is_none());
        assert!(is_in_s_plus(&Graph::empty(21).unwrap()).is_err());
    }

    #[test]
    fn extremal_l_examples() {
        let k22 = g(Family::CompleteBipartite(2, 2));
        let w = is_extremal_l(&k22, 2).unwrap().unwrap();
        assert_eq!(w.isolated_count, 0);
        assert_eq!(
            w.bipartition,
            Some(Bipartition {
                u: set(&[0, 1]),
                w: set(&[2, 3])
            })
        );

        assert_eq!(is_extremal_l(&g(Family::Complete(4)), 2).unwrap(), None);

        let diag = k22.with_edge(0, 1).unwrap().with_isolated(1).unwrap();
        assert_eq!(diag.max_degree(), 3);
        assert_eq!(is_extremal_l(&diag, 3).unwrap(), None);

        let k22k1 = k22.with_isolated(1).unwrap();
        assert!(is_extremal_l(&k22k1, 3).unwrap().is_some());

        assert!(is_extremal_l(&k22, 1).is_err());
        assert!(is_extremal_l(&k22, 4).is_err());
    }

    #[test]
    fn extremal_bipartite_l_examples() {
        let k23k1 = g(Family::CompleteBipartite(2, 3)).with_isolated(1).unwrap();
        assert!(is_extremal_bipartite_l(&k23k1, 3).unwrap());
        assert!(!is_extremal_bipartite_l(&g(Family::Cycle(6)), 2).unwrap());
        assert!(is_extremal_bipartite_l(&g(Family::Star(4)), 1).is_err());
        assert!(is_extremal_bipartite_l(&g(Family::Complete(3)), 2).is_err());
    }

    #[test]
    fn extremal_q_examples() {
        let k4k1 = g(Family::Complete(4)).with_isolated(1).unwrap();
        assert_eq!(
            is_extremal_q(&k4k1, 2).unwrap().unwrap().kind,
            ExtremalKind::QClique
        );
        let cp3 = g(Family::CocktailParty(3));
        assert_eq!(
            is_extremal_q(&cp3, 2).unwrap().unwrap().kind,
            ExtremalKind::QCocktail
        );
        assert_eq!(is_extremal_q(&g(Family::Cycle(5)), 2).unwrap(), None);
        assert!(is_extremal_q(&cp3, 6).is_err());
        assert!(is_extremal_q(&cp3, 0).is_err());
    }

    #[test]
    fn extremal_q_structural_path_for_large_graphs() {
        let big = g(Family::Complete(9)).with_isolated(3).unwrap();
        assert_eq!(
            is_extremal_q(&big, 4).unwrap().unwrap().kind,
            ExtremalKind::QClique
        );
        let cp = g(Family::CocktailParty(5)).with_isolated(2).unwrap();
        assert_eq!(
            is_extremal_q(&cp, 4).unwrap().unwrap().kind,
            ExtremalKind::QCocktail
        );
        assert_eq!(is_extremal_q(&g(Family::Cycle(12)), 4).unwrap(), None);
    }
}
