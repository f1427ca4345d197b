//! Per-graph verdicts for every spectral bound and extremal characterization.
//!
//! A verdict never signals a mathematical violation through `Err`; that is
//! reported with `bound_holds == false` or `characterization_consistent ==
//! false`. Errors are reserved for misuse (a checker invoked outside its
//! preconditions) and for a structural equality decision that disagrees
//! with the numerically computed radius, which means a tolerance is wrong.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::domination::{domination_number, DominationResult};
use crate::error::CheckError;
use crate::graph::{Bipartition, Graph};
use crate::spectral::{self, neighborhood_union_bound};
use crate::structure::{self, bipartition_of};

/// Slack allowed on every inequality.
pub const BOUND_TOL: f64 = 1e-9;
/// Numeric equality threshold, used to corroborate structural decisions.
pub const EQUALITY_TOL: f64 = 1e-7;
/// Allowed gap between `mu` and `q` on bipartite graphs.
pub const BIPARTITE_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    L21,
    L22,
    L23,
    L31,
    T31,
    C32,
    T41,
    #[serde(rename = "Q_BIPARTITE")]
    QBipartite,
    #[serde(rename = "BRAND_SEIFTER")]
    BrandSeifter,
    #[serde(rename = "ORE")]
    Ore,
    #[serde(rename = "Q_2N2")]
    Q2n2,
}

impl TheoremId {
    pub const ALL: [TheoremId; 11] = [
        TheoremId::L21,
        TheoremId::L22,
        TheoremId::L23,
        TheoremId::L31,
        TheoremId::T31,
        TheoremId::C32,
        TheoremId::T41,
        TheoremId::QBipartite,
        TheoremId::BrandSeifter,
        TheoremId::Ore,
        TheoremId::Q2n2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::L21 => "L21",
            TheoremId::L22 => "L22",
            TheoremId::L23 => "L23",
            TheoremId::L31 => "L31",
            TheoremId::T31 => "T31",
            TheoremId::C32 => "C32",
            TheoremId::T41 => "T41",
            TheoremId::QBipartite => "Q_BIPARTITE",
            TheoremId::BrandSeifter => "BRAND_SEIFTER",
            TheoremId::Ore => "ORE",
            TheoremId::Q2n2 => "Q_2N2",
        }
    }

    /// Whether the statement includes an "equality if and only if" clause.
    pub fn has_characterization(self) -> bool {
        !matches!(
            self,
            TheoremId::L21 | TheoremId::BrandSeifter | TheoremId::Ore
        )
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    /// Accepts the canonical ids case-insensitively, plus `L` for `T31` and
    /// `Q` for `T41`.
    fn from_str(s: &str) -> Result<Self, String> {
        let upper = s.trim().to_ascii_uppercase().replace('-', "_");
        match upper.as_str() {
            "L" => return Ok(TheoremId::T31),
            "Q" => return Ok(TheoremId::T41),
            _ => {}
        }
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == upper)
            .ok_or_else(|| format!("unknown theorem id `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremVerdict {
    pub theorem_id: TheoremId,
    pub n: usize,
    pub gamma: usize,
    pub bound_value: f64,
    pub computed_value: f64,
    pub bound_holds: bool,
    pub equality: bool,
    pub recognizer_accepts: bool,
    pub characterization_consistent: bool,
    pub detail: String,
}

/// Everything the checkers need about one graph, computed once.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub graph: Graph,
    pub domination: DominationResult,
    pub mu: f64,
    pub q: f64,
    pub bipartition: Option<Bipartition>,
    pub connected: bool,
}

impl Analysis {
    pub fn new(g: &Graph) -> Self {
        let domination = domination_number(g);
        // gamma = n only for the edgeless graph, whose radii are zero
        let (mu, q) = if domination.gamma == g.order() {
            (0.0, 0.0)
        } else {
            (spectral::mu(g), spectral::q(g))
        };
        Analysis {
            graph: g.clone(),
            domination,
            mu,
            q,
            bipartition: bipartition_of(g),
            connected: g.is_connected(),
        }
    }

    pub fn n(&self) -> usize {
        self.graph.order()
    }

    pub fn gamma(&self) -> usize {
        self.domination.gamma
    }

    fn verdict(
        &self,
        theorem_id: TheoremId,
        bound_value: f64,
        computed_value: f64,
    ) -> TheoremVerdict {
        TheoremVerdict {
            theorem_id,
            n: self.n(),
            gamma: self.gamma(),
            bound_value,
            computed_value,
            bound_holds: true,
            equality: false,
            recognizer_accepts: false,
            characterization_consistent: true,
            detail: String::new(),
        }
    }

    fn not_applicable(&self, theorem: TheoremId, reason: impl Into<String>) -> CheckError {
        CheckError::NotApplicable {
            theorem,
            reason: reason.into(),
        }
    }
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() < EQUALITY_TOL
}

/// Compares a structural equality decision with the numeric radius.
fn corroborate(
    theorem: TheoremId,
    structural: bool,
    value: f64,
    bound: f64,
) -> Result<bool, CheckError> {
    if structural != close(value, bound) {
        return Err(CheckError::ToleranceConflict {
            theorem,
            structural,
            value,
            bound,
        });
    }
    Ok(structural)
}

/// `mu(G) = m` exactly when some component on `m` vertices has a
/// disconnected complement (components never exceed their order).
fn has_component_with_full_mu(g: &Graph, m: usize) -> bool {
    g.components().into_iter().any(|c| {
        c.len() == m && m >= 2 && !g.induced(c).expect("component").complement().is_connected()
    })
}

/// `q(G) = 2r` with `r = Δ` exactly when some component is `r`-regular.
fn has_regular_component(g: &Graph, r: usize) -> bool {
    g.components()
        .into_iter()
        .any(|c| c.iter().all(|v| g.degree(v) == r))
}

fn describe_bipartition(bp: &Option<Bipartition>) -> String {
    match bp {
        Some(bp) => format!("U={} W={}", bp.u, bp.w),
        None => String::new(),
    }
}

fn edgeless_shortcut(
    a: &Analysis,
    id: TheoremId,
    bound: f64,
    family_is_edgeless: bool,
) -> TheoremVerdict {
    let mut v = a.verdict(id, bound, 0.0);
    v.bound_holds = 0.0 <= bound + BOUND_TOL;
    v.equality = bound == 0.0;
    v.recognizer_accepts = family_is_edgeless;
    v.characterization_consistent = v.equality == v.recognizer_accepts;
    v.detail = "edgeless graph: gamma = n, radii are zero".into();
    v
}

/// Laplacian bound `mu <= n - gamma + 2`; `gamma = 1` is routed to
/// [`check_remark_gamma1`].
pub fn check_theorem_l(a: &Analysis) -> Result<TheoremVerdict, CheckError> {
    let (n, gamma) = (a.n(), a.gamma());
    if gamma == n {
        return Ok(edgeless_shortcut(a, TheoremId::T31, 2.0, false));
    }
    if gamma == 1 {
        let mut v = check_remark_gamma1(a)?;
        v.theorem_id = TheoremId::T31;
        return Ok(v);
    }
    let bound = n - gamma + 2;
    let mut v = a.verdict(TheoremId::T31, bound as f64, a.mu);
    v.bound_holds = a.mu <= bound as f64 + BOUND_TOL;
    v.equality = corroborate(
        TheoremId::T31,
        has_component_with_full_mu(&a.graph, bound),
        a.mu,
        bound as f64,
    )?;
    let witness = structure::is_extremal_l(&a.graph, gamma)?;
    v.recognizer_accepts = witness.is_some();
    v.characterization_consistent = v.equality == v.recognizer_accepts;
    v.detail = match witness {
        Some(w) => format!(
            "extremal: {} isolated, {}",
            w.isolated_count,
            describe_bipartition(&w.bipartition)
        ),
        None => format!("slack {:.9}", bound as f64 - a.mu),
    };
    Ok(v)
}

/// `gamma = 1` forces a universal vertex and `mu = n`.
pub fn check_remark_gamma1(a: &Analysis) -> Result<TheoremVerdict, CheckError> {
    let n = a.n();
    if a.gamma() != 1 || n < 2 {
        return Err(a.not_applicable(
            TheoremId::T31,
            format!(
                "remark needs gamma = 1 and n >= 2, got gamma = {}, n = {n}",
                a.gamma()
            ),
        ));
    }
    let mut v = a.verdict(TheoremId::T31, n as f64, a.mu);
    let universal = (0..n).find(|&u| a.graph.degree(u) == n - 1);
    v.equality = close(a.mu, n as f64);
    v.recognizer_accepts = universal.is_some();
    v.bound_holds = a.mu <= n as f64 + BOUND_TOL && v.equality;
    v.characterization_consistent = v.equality == v.recognizer_accepts;
    v.detail = match universal {
        Some(u) => format!("gamma = 1 remark: vertex {u} is universal, mu = n"),
        None => "gamma = 1 but no universal vertex".into(),
    };
    Ok(v)
}

fn bipartite_range(a: &Analysis, id: TheoremId) -> Result<(), CheckError> {
    if a.bipartition.is_none() {
        return Err(a.not_applicable(id, "graph is not bipartite"));
    }
    if a.gamma() < 2 {
        return Err(a.not_applicable(id, format!("needs gamma >= 2, got {}", a.gamma())));
    }
    Ok(())
}

/// Bipartite case of the Laplacian bound, with the complete-bipartite family.
pub fn check_corollary_bipartite(a: &Analysis) -> Result<TheoremVerdict, CheckError> {
    bipartite_range(a, TheoremId::C32)?;
    let (n, gamma) = (a.n(), a.gamma());
    if gamma == n {
        return Ok(edgeless_shortcut(a, TheoremId::C32, 2.0, false));
    }
    let bound = n - gamma + 2;
    let mut v = a.verdict(TheoremId::C32, bound as f64, a.mu);
    v.bound_holds = a.mu <= bound as f64 + BOUND_TOL;
    v.equality = corroborate(
        TheoremId::C32,
        has_component_with_full_mu(&a.graph, bound),
        a.mu,
        bound as f64,
    )?;
    v.recognizer_accepts = structure::is_extremal_bipartite_l(&a.graph, gamma)?;
    v.characterization_consistent = v.equality == v.recognizer_accepts;
    v.detail = format!("slack {:.9}", bound as f64 - a.mu);
    Ok(v)
}

/// Signless bound `q <= 2(n - gamma)`.
pub fn check_theorem_q(a: &Analysis) -> Result<TheoremVerdict, CheckError> {
    let (n, gamma) = (a.n(), a.gamma());
    if gamma == n {
        // K_1 ∪ (n-1) K_1 is the edgeless graph itself
        return Ok(edgeless_shortcut(a, TheoremId::T41, 0.0, true));
    }
    let r = n - gamma;
    let bound = 2 * r;
    let mut v = a.verdict(TheoremId::T41, bound as f64, a.q);
    v.bound_holds = a.q <= bound as f64 + BOUND_TOL;
    v.equality = corroborate(
        TheoremId::T41,
        has_regular_component(&a.graph, r),
        a.q,
        bound as f64,
    )?;
    let witness = structure::is_extremal_q(&a.graph, gamma)?;
    v.recognizer_accepts = witness.is_some();
    v.characterization_consistent = v.equality == v.recognizer_accepts;
    v.detail = match witness {
        Some(w) => format!("extremal {}: {} isolated", w.kind, w.isolated_count),
        None => format!("slack {:.9}", bound as f64 - a.q),
    };
    Ok(v)
}

/// Bipartite signless bound `q <= n - gamma + 2`, plus `q = mu`.
pub fn check_q_bipartite(a: &Analysis) -> Result<TheoremVerdict, CheckError> {
    bipartite_range(a, TheoremId::QBipartite)?;
    let (n, gamma) = (a.n(), a.gamma());
    if gamma == n {
        return Ok(edgeless_shortcut(a, TheoremId::QBipartite, 2.0, false));
    }
    let bound = n - gamma + 2;
    let gap = (a.q - a.mu).abs();
    let mut v = a.verdict(TheoremId::QBipartite, bound as f64, a.q);
    v.bound_holds = a.q <= bound as f64 + BOUND_TOL && gap < BIPARTITE_TOL;
    v.equality = corroborate(
        TheoremId::QBipartite,
        has_component_with_full_mu(&a.graph, bound),
        a.q,
        bound as f64,
    )?;
    v.recognizer_accepts = structure::is_extremal_bipartite_l(&a.graph, gamma)?;
    v.characterization_consistent = v.equality == v.recognizer_accepts;
    v.detail = format!("|q - mu| = {gap:.3e}");
    Ok(v)
}

/// Strict bound `mu < n - ceil((gamma - 2) / 2)` for connected graphs with
/// `gamma >= 3`.
pub fn check_brand_seifter(a: &Analysis) -> Result<TheoremVerdict, CheckError> {
    let (n, gamma) = (a.n(), a.gamma());
    if !a.connected || gamma < 3 {
        return Err(a.not_applicable(
            TheoremId::BrandSeifter,
            "needs a connected graph with gamma >= 3",
        ));
    }
    let bound = (n - (gamma - 2).div_ceil(2)) as f64;
    let mut v = a.verdict(TheoremId::BrandSeifter, bound, a.mu);
    v.bound_holds = a.mu < bound - BOUND_TOL;
    v.detail = format!("margin {:.9}", bound - a.mu);
    Ok(v)
}

/// `gamma <= floor(n / 2)` without isolated vertices.
pub fn check_ore(a: &Analysis) -> Result<TheoremVerdict, CheckError> {
    if !a.graph.isolated_vertices().is_empty() {
        return Err(a.not_applicable(TheoremId::Ore, "graph has isolated vertices"));
    }
    let bound = a.n() / 2;
    let mut v = a.verdict(TheoremId::Ore, bound as f64, a.gamma() as f64);
    v.bound_holds = a.gamma() <= bound;
    v.equality = a.gamma() == bound;
    v.detail = format!("witness {}", a.domination.witness);
    Ok(v)
}

/// `q <= 2(n - 1)` with equality only for `K_n`.
pub fn check_q_2n2(a: &Analysis) -> Result<TheoremVerdict, CheckError> {
    let bound = 2.0 * (a.n() - 1) as f64;
    let mut v = a.verdict(TheoremId::Q2n2, bound, a.q);
    v.bound_holds = a.q <= bound + BOUND_TOL;
    v.equality = close(a.q, bound);
    v.recognizer_accepts = a.graph.is_complete();
    v.characterization_consistent = v.equality == v.recognizer_accepts;
    Ok(v)
}

/// `mu(G + uv) >= mu(G)` for one non-edge `uv`.
pub fn check_l21(a: &Analysis, u: usize, w: usize) -> Result<TheoremVerdict, CheckError> {
    if u == w || a.graph.has_edge(u, w) {
        return Err(a.not_applicable(TheoremId::L21, format!("{u}{w} is not a non-edge")));
    }
    let plus = a.graph.with_edge(u, w)?;
    let after = spectral::mu(&plus);
    let mut v = a.verdict(TheoremId::L21, a.mu, after);
    v.bound_holds = after >= a.mu - BOUND_TOL;
    v.equality = close(after, a.mu);
    v.detail = format!("added {u}{w}");
    Ok(v)
}

/// [`check_l21`] over every non-edge, reporting the smallest increase.
pub fn check_l21_all(a: &Analysis) -> Result<TheoremVerdict, CheckError> {
    let mut worst: Option<TheoremVerdict> = None;
    for (u, w) in a.graph.non_edges() {
        let v = check_l21(a, u, w)?;
        let gain = v.computed_value - v.bound_value;
        if worst
            .as_ref()
            .is_none_or(|b| gain < b.computed_value - b.bound_value)
        {
            worst = Some(v);
        }
    }
    worst.ok_or_else(|| a.not_applicable(TheoremId::L21, "graph is complete"))
}

/// `mu <= n` with equality iff the complement is disconnected.
pub fn check_l22(a: &Analysis) -> Result<TheoremVerdict, CheckError> {
    let n = a.n() as f64;
    let mut v = a.verdict(TheoremId::L22, n, a.mu);
    v.bound_holds = a.mu <= n + BOUND_TOL;
    v.equality = close(a.mu, n);
    v.recognizer_accepts = !a.graph.complement().is_connected();
    v.characterization_consistent = v.equality == v.recognizer_accepts;
    Ok(v)
}

/// `2 avg_degree <= q <= 2 max_degree`; for connected graphs each equality
/// holds iff the graph is regular.
pub fn check_l23(a: &Analysis) -> Result<TheoremVerdict, CheckError> {
    let lower = 2.0 * a.graph.average_degree();
    let upper = 2.0 * a.graph.max_degree() as f64;
    let mut v = a.verdict(TheoremId::L23, upper, a.q);
    v.bound_holds = lower - BOUND_TOL <= a.q && a.q <= upper + BOUND_TOL;
    let lower_eq = close(a.q, lower);
    let upper_eq = close(a.q, upper);
    v.equality = lower_eq || upper_eq;
    v.recognizer_accepts = a.graph.is_regular();
    if a.connected {
        v.characterization_consistent =
            lower_eq == v.recognizer_accepts && upper_eq == v.recognizer_accepts;
        v.detail = format!("lower {lower:.9}");
    } else {
        v.detail = format!("lower {lower:.9}; disconnected, characterization not applicable");
    }
    Ok(v)
}

/// `mu <= max |N(u) ∪ N(v)|` over edges, with equality iff the graph is in
/// `S⁺`. Connected graphs with at least one edge only.
pub fn check_l31(a: &Analysis) -> Result<TheoremVerdict, CheckError> {
    if !a.connected || a.graph.edge_count() == 0 {
        return Err(a.not_applicable(TheoremId::L31, "needs a connected graph with an edge"));
    }
    if a.n() > structure::MAX_S_PLUS_VERTICES {
        return Err(a.not_applicable(TheoremId::L31, "S+ search is limited to 20 vertices"));
    }
    let bound = neighborhood_union_bound(&a.graph)? as f64;
    let mut v = a.verdict(TheoremId::L31, bound, a.mu);
    v.bound_holds = a.mu <= bound + BOUND_TOL;
    v.equality = close(a.mu, bound);
    let witness = structure::is_in_s_plus(&a.graph)?;
    v.recognizer_accepts = witness.is_some();
    v.characterization_consistent = v.equality == v.recognizer_accepts;
    v.detail = describe_bipartition(&witness);
    Ok(v)
}

/// Whether [`check`] has anything to say about this graph.
pub fn applies(a: &Analysis, id: TheoremId) -> bool {
    let (n, gamma) = (a.n(), a.gamma());
    match id {
        TheoremId::T31 | TheoremId::T41 | TheoremId::L22 | TheoremId::L23 | TheoremId::Q2n2 => true,
        TheoremId::C32 | TheoremId::QBipartite => a.bipartition.is_some() && gamma >= 2,
        TheoremId::BrandSeifter => a.connected && gamma >= 3,
        TheoremId::Ore => a.graph.isolated_vertices().is_empty(),
        TheoremId::L21 => !a.graph.is_complete(),
        TheoremId::L31 => {
            a.connected && a.graph.edge_count() > 0 && n <= structure::MAX_S_PLUS_VERTICES
        }
    }
}

/// Runs one checker, or returns `None` when its preconditions do not hold.
pub fn check(a: &Analysis, id: TheoremId) -> Result<Option<TheoremVerdict>, CheckError> {
    if !applies(a, id) {
        return Ok(None);
    }
    let v = match id {
        TheoremId::L21 => check_l21_all(a),
        TheoremId::L22 => check_l22(a),
        TheoremId::L23 => check_l23(a),
        TheoremId::L31 => check_l31(a),
        TheoremId::T31 => check_theorem_l(a),
        TheoremId::C32 => check_corollary_bipartite(a),
        TheoremId::T41 => check_theorem_q(a),
        TheoremId::QBipartite => check_q_bipartite(a),
        TheoremId::BrandSeifter => check_brand_seifter(a),
        TheoremId::Ore => check_ore(a),
        TheoremId::Q2n2 => check_q_2n2(a),
    }?;
    Ok(Some(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn analysis(f: Family) -> Analysis {
        Analysis::new(&Graph::construct(f).unwrap())
    }

    #[test]
    fn theorem_l_examples() {
        let v = check_theorem_l(&analysis(Family::CompleteBipartite(2, 2))).unwrap();
        assert_eq!((v.bound_value, v.gamma), (4.0, 2));
        assert!(
            v.equality && v.recognizer_accepts && v.characterization_consistent && v.bound_holds
        );

        let v = check_theorem_l(&analysis(Family::Path(4))).unwrap();
        assert_eq!(v.bound_value, 4.0);
        assert!((v.computed_value - (2.0 + 2f64.sqrt())).abs() < 1e-9);
        assert!(!v.equality && !v.recognizer_accepts && v.bound_holds);

        let v = check_theorem_l(&analysis(Family::Complete(4))).unwrap();
        assert_eq!(v.gamma, 1);
        assert_eq!(v.bound_value, 4.0);
        assert!(v.detail.contains("remark"));
        assert!(v.equality && v.bound_holds);
    }

    #[test]
    fn remark_examples() {
        let v = check_remark_gamma1(&analysis(Family::Star(3))).unwrap();
        assert!((v.computed_value - 4.0).abs() < 1e-9 && v.bound_holds);
        let v = check_remark_gamma1(&analysis(Family::Complete(5))).unwrap();
        assert!((v.computed_value - 5.0).abs() < 1e-9 && v.bound_holds);
        assert!(matches!(
            check_remark_gamma1(&analysis(Family::Cycle(4))),
            Err(CheckError::NotApplicable { .. })
        ));
    }

    #[test]
    fn corollary_examples() {
        let g = Graph::construct(Family::CompleteBipartite(2, 3))
            .unwrap()
            .with_isolated(1)
            .unwrap();
        let v = check_corollary_bipartite(&Analysis::new(&g)).unwrap();
        assert_eq!((v.n, v.gamma, v.bound_value), (6, 3, 5.0));
        assert!(v.equality && v.recognizer_accepts);

        let v = check_corollary_bipartite(&analysis(Family::Cycle(6))).unwrap();
        assert_eq!(v.bound_value, 6.0);
        assert!((v.computed_value - 4.0).abs() < 1e-9 && !v.equality);

        let k2 = Graph::construct(Family::Complete(2)).unwrap();
        let three_k2 = k2.disjoint_union(&k2).unwrap().disjoint_union(&k2).unwrap();
        let v = check_corollary_bipartite(&Analysis::new(&three_k2)).unwrap();
        assert_eq!((v.gamma, v.bound_value), (3, 5.0));
        assert!((v.computed_value - 2.0).abs() < 1e-9 && !v.equality);

        assert!(check_corollary_bipartite(&analysis(Family::Complete(3))).is_err());
    }

    #[test]
    fn theorem_q_examples() {
        let g = Graph::construct(Family::Complete(4))
            .unwrap()
            .with_isolated(1)
            .unwrap();
        let v = check_theorem_q(&Analysis::new(&g)).unwrap();
        assert_eq!((v.gamma, v.bound_value), (2, 6.0));
        assert!(v.equality && v.recognizer_accepts && v.detail.contains("Q_clique"));

        let v = check_theorem_q(&analysis(Family::CocktailParty(3))).unwrap();
        assert_eq!((v.gamma, v.bound_value), (2, 8.0));
        assert!(v.equality && v.recognizer_accepts && v.detail.contains("Q_cocktail"));

        // C_5 is 2-regular, so q = 4 < 6.
        let v = check_theorem_q(&analysis(Family::Cycle(5))).unwrap();
        assert_eq!(v.bound_value, 6.0);
        assert!((v.computed_value - 4.0).abs() < 1e-9);
        assert!(!v.equality && !v.recognizer_accepts);
    }

    #[test]
    fn q_bipartite_examples() {
        let v = check_q_bipartite(&analysis(Family::CompleteBipartite(2, 2))).unwrap();
        assert!(v.equality && v.recognizer_accepts && v.bound_holds);
        let a = analysis(Family::Path(4));
        let v = check_q_bipartite(&a).unwrap();
        assert!((v.computed_value - a.mu).abs() < 1e-8);
        assert!((v.computed_value - 3.414213562).abs() < 1e-8);
        assert!(check_q_bipartite(&analysis(Family::Complete(3))).is_err());
    }

    #[test]
    fn brand_seifter_examples() {
        let v = check_brand_seifter(&analysis(Family::Path(7))).unwrap();
        assert_eq!((v.gamma, v.bound_value), (3, 6.0));
        assert!((v.computed_value - 3.801937736).abs() < 1e-8 && v.bound_holds);
        let v = check_brand_seifter(&analysis(Family::Cycle(9))).unwrap();
        assert_eq!((v.gamma, v.bound_value), (3, 8.0));
        assert!(v.bound_holds);
        assert!(check_brand_seifter(&analysis(Family::Complete(4))).is_err());
    }

    #[test]
    fn lemma_examples() {
        let v = check_ore(&analysis(Family::Cycle(5))).unwrap();
        assert_eq!((v.computed_value, v.bound_value), (2.0, 2.0));
        assert!(v.bound_holds);

        let v = check_q_2n2(&analysis(Family::Complete(4))).unwrap();
        assert_eq!(v.bound_value, 6.0);
        assert!(v.equality && v.recognizer_accepts);

        let v = check_l31(&analysis(Family::CompleteBipartite(2, 2))).unwrap();
        assert_eq!(v.bound_value, 4.0);
        assert!(v.equality && v.recognizer_accepts);

        let a = analysis(Family::Path(4));
        let v = check_l21(&a, 0, 3).unwrap();
        assert!(v.bound_holds && v.computed_value > v.bound_value);
        assert!(check_l21(&a, 0, 1).is_err());

        let v = check_l22(&analysis(Family::CompleteBipartite(2, 3))).unwrap();
        assert!(v.equality && v.recognizer_accepts);
        let v = check_l23(&analysis(Family::Cycle(5))).unwrap();
        assert!(v.equality && v.recognizer_accepts && v.characterization_consistent);
    }

    #[test]
    fn edgeless_graphs_short_circuit() {
        let a = Analysis::new(&Graph::empty(3).unwrap());
        assert_eq!((a.mu, a.q, a.gamma()), (0.0, 0.0, 3));
        let v = check_theorem_q(&a).unwrap();
        assert!(v.equality && v.recognizer_accepts && v.characterization_consistent);
        let v = check_theorem_l(&a).unwrap();
        assert!(!v.equality && !v.recognizer_accepts && v.bound_holds);
        let k1 = Analysis::new(&Graph::empty(1).unwrap());
        assert!(check_theorem_l(&k1).unwrap().bound_holds);
        assert!(check_remark_gamma1(&k1).is_err());
    }

    #[test]
    fn theorem_id_parsing() {
        for id in TheoremId::ALL {
            assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), id);
            assert_eq!(serde_json::to_string(&id).unwrap(), format!("\"{id}\""));
        }
        assert_eq!("L".parse::<TheoremId>().unwrap(), TheoremId::T31);
        assert_eq!("q".parse::<TheoremId>().unwrap(), TheoremId::T41);
        assert!("T99".parse::<TheoremId>().is_err());
    }
}
