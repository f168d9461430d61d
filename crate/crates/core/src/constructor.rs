//! Building n-vertex r-uniform critical hypergraphs with few edges.
//!
//! A plan is one of: a single base hypergraph padded to `n` vertices; the
//! complete hypergraph `K_{2r-1}^{(r)}` padded to `n`; or a wreath product of
//! an `r1`-uniform and an `r2`-uniform base, raised to uniformity `r` by
//! `t = r - r1*r2` augmentation steps and then padded. Every candidate plan's
//! size is computed exactly from the counting formulas, and the cheapest plan
//! that fits in `n` vertices and the edge cap wins.
//!
//! The factor split search is seeded from the classical choices
//! `r2 = ⌊n / 4Br⌋, r1 = ⌊r / r2⌋` (moderate n) and `r1 = ⌊8Br² / n⌋,
//! r2 = ⌊r / r1⌋` (large n) with `B = 4`, widened by [`SEARCH_RADIUS`] and by
//! every `r2 = q + 1` for which a plane of order q exists.

use std::cmp::Ordering;

use log::warn;
use num_bigint::BigUint;
use serde::Serialize;

use crate::combinatorics::is_prime;
use crate::cover::{is_critical, CriticalityReport, DEFAULT_NODE_BUDGET};
use crate::error::{Error, Result};
use crate::generators::{base_candidates, materialize, BaseChoice, BaseKind, DEFAULT_EDGE_CAP};
use crate::hypergraph::Hypergraph;
use crate::par;
use crate::serde_big;
use crate::transforms::{add_one, augmented_counts, wreath_product};

/// Half-width of the window searched around each seeded `r2`.
pub const SEARCH_RADIUS: usize = 5;

/// Seed constant for the factor split formulas.
pub const SEED_B: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PlanCase {
    KahnBaseOnly,
    CompleteOnly,
    ProductCaseSmallN,
    ProductCaseLargeN,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FactorSplit {
    pub r1: usize,
    pub r2: usize,
    pub t: usize,
}

/// The formula values the split search started from.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SplitAnchors {
    pub b: usize,
    pub small_n: Option<FactorSplit>,
    pub large_n: Option<FactorSplit>,
}

impl SplitAnchors {
    pub fn new(n: usize, r: usize) -> Self {
        let b = SEED_B;
        let r2 = n / (4 * b * r);
        let small_n = (r2 >= 1).then(|| FactorSplit { r1: r / r2, r2, t: r % r2 });
        let r1 = 8 * b * r * r / n;
        let large_n = (r1 >= 1).then(|| FactorSplit { r1, r2: r / r1, t: r % r1 });
        SplitAnchors { b, small_n, large_n }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ConstructionPlan {
    pub n: usize,
    pub r: usize,
    pub case: PlanCase,
    pub r1: usize,
    pub r2: usize,
    pub t: usize,
    /// Outer factor; absent for single-base plans.
    pub base1: Option<BaseChoice>,
    pub base2: BaseChoice,
    pub predicted_vertices: u64,
    #[serde(with = "serde_big")]
    pub predicted_edges: BigUint,
    pub anchors: SplitAnchors,
    pub edge_cap: u64,
}

impl ConstructionPlan {
    fn single(n: usize, r: usize, base: BaseChoice, anchors: &SplitAnchors, edge_cap: u64) -> Self {
        let case = if base.kind == BaseKind::Complete { PlanCase::CompleteOnly } else { PlanCase::KahnBaseOnly };
        ConstructionPlan {
            n,
            r,
            case,
            r1: 1,
            r2: r,
            t: 0,
            base1: None,
            predicted_vertices: base.predicted_vertices,
            predicted_edges: base.predicted_edges.clone(),
            base2: base,
            anchors: anchors.clone(),
            edge_cap,
        }
    }

    fn product(
        n: usize,
        r: usize,
        outer: BaseChoice,
        inner: BaseChoice,
        anchors: &SplitAnchors,
        edge_cap: u64,
    ) -> Self {
        let (r1, r2) = (outer.uniformity, inner.uniformity);
        let t = r - r1 * r2;
        let vertices = outer.predicted_vertices * inner.predicted_vertices;
        let edges = product_edges(&outer.predicted_edges, &inner.predicted_edges, r1);
        let (predicted_vertices, predicted_edges) = augmented_counts(vertices, edges, r1 * r2, t);
        let case = if t < r2 && r1 == r / r2 { PlanCase::ProductCaseSmallN } else { PlanCase::ProductCaseLargeN };
        ConstructionPlan {
            n,
            r,
            case,
            r1,
            r2,
            t,
            base1: Some(outer),
            base2: inner,
            predicted_vertices,
            predicted_edges,
            anchors: anchors.clone(),
            edge_cap,
        }
    }

    pub fn is_feasible(&self) -> bool {
        self.predicted_vertices <= self.n as u64 && self.predicted_edges <= BigUint::from(self.edge_cap)
    }

    /// Total order used to pick among plans: edges, then `r2`, then `r1`,
    /// then vertices and base kinds.
    pub fn cost_order(&self, other: &Self) -> Ordering {
        let key = |p: &Self| {
            (
                p.predicted_edges.clone(),
                p.r2,
                p.r1,
                p.predicted_vertices,
                p.case,
                p.base1.as_ref().map(|b| (b.kind, b.order_q)),
                (p.base2.kind, p.base2.order_q),
            )
        };
        key(self).cmp(&key(other))
    }
}

fn product_edges(outer_edges: &BigUint, inner_edges: &BigUint, r1: usize) -> BigUint {
    outer_edges * inner_edges.pow(r1 as u32)
}

#[derive(Clone, Debug, Serialize)]
pub struct BuildResult {
    #[serde(skip)]
    pub hypergraph: Hypergraph,
    pub plan: ConstructionPlan,
    pub verified: Option<CriticalityReport>,
}

#[derive(Clone, Copy, Debug)]
pub struct BuildOptions {
    pub edge_cap: u64,
    pub verify: bool,
    pub node_budget: u64,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { edge_cap: DEFAULT_EDGE_CAP, verify: false, node_budget: DEFAULT_NODE_BUDGET }
    }
}

fn check_parameters(n: usize, r: usize) -> Result<()> {
    if r < 2 || n + 1 < 2 * r {
        return Err(Error::NoSuchHypergraph { n, r });
    }
    Ok(())
}

/// Candidate `r2` values: windows around the seeded splits plus `q + 1` for
/// every available plane order q.
fn inner_uniformities(r: usize, anchors: &SplitAnchors) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    for seed in [anchors.small_n.map(|s| s.r2), anchors.large_n.map(|s| s.r2)].into_iter().flatten() {
        out.extend(seed.saturating_sub(SEARCH_RADIUS)..=seed + SEARCH_RADIUS);
    }
    out.extend((1..r as u64).filter(|&q| q == 1 || is_prime(q)).map(|q| q as usize + 1));
    out.retain(|&r2| r2 >= 2 && 2 * r2 <= r);
    out.sort_unstable();
    out.dedup();
    out
}

/// Every plan considered for `(n, r)`, feasible or not.
pub fn candidate_plans(n: usize, r: usize, edge_cap: u64) -> Result<Vec<ConstructionPlan>> {
    check_parameters(n, r)?;
    let anchors = SplitAnchors::new(n, r);
    let mut plans: Vec<ConstructionPlan> =
        base_candidates(r).into_iter().map(|b| ConstructionPlan::single(n, r, b, &anchors, edge_cap)).collect();

    let mut splits = Vec::new();
    for r2 in inner_uniformities(r, &anchors) {
        for r1 in 2..=r / r2 {
            let t = r - r1 * r2;
            if t < r1.max(r2) {
                splits.push((r1, r2));
            }
        }
    }
    let products = par::map(splits.len(), |i| {
        let (r1, r2) = splits[i];
        let mut out = Vec::new();
        for outer in base_candidates(r1) {
            for inner in base_candidates(r2) {
                out.push(ConstructionPlan::product(n, r, outer.clone(), inner, &anchors, edge_cap));
            }
        }
        out
    });
    plans.extend(products.into_iter().flatten());
    Ok(plans)
}

/// The cheapest feasible plan under [`ConstructionPlan::cost_order`]. On
/// failure the error carries the cheapest plan that fits in n vertices.
pub fn plan_construction(n: usize, r: usize, edge_cap: u64) -> Result<ConstructionPlan> {
    let mut plans = candidate_plans(n, r, edge_cap)?;
    plans.sort_by(ConstructionPlan::cost_order);
    match plans.iter().position(ConstructionPlan::is_feasible) {
        Some(i) => Ok(plans.swap_remove(i)),
        None => {
            let fits = plans.iter().position(|p| p.predicted_vertices <= n as u64).unwrap_or(0);
            Err(Error::NoFeasiblePlan { cheapest: plans.into_iter().nth(fits).map(Box::new) })
        }
    }
}

/// Exact edge count of the plan [`plan_construction`] selects under the
/// default edge cap.
pub fn predicted_edge_bound(n: usize, r: usize) -> Result<BigUint> {
    Ok(plan_construction(n, r, DEFAULT_EDGE_CAP)?.predicted_edges)
}

/// Executes a plan: factors, product, `t` augmentations, padding to `n`.
pub fn execute_plan(plan: &ConstructionPlan) -> Result<Hypergraph> {
    let cap = plan.edge_cap;
    let mut h = match &plan.base1 {
        None => materialize(&plan.base2, cap)?,
        Some(outer) => {
            let outer = materialize(outer, cap)?;
            let inner = materialize(&plan.base2, cap)?;
            wreath_product(&outer, &inner, cap)?
        }
    };
    for _ in 0..plan.t {
        h = add_one(&h, cap)?;
    }
    if h.n() as u64 != plan.predicted_vertices || BigUint::from(h.edge_count()) != plan.predicted_edges {
        return Err(Error::Internal(format!(
            "plan predicted {} vertices and {} edges, realized {} and {}",
            plan.predicted_vertices,
            plan.predicted_edges,
            h.n(),
            h.edge_count()
        )));
    }
    h.pad_isolated(plan.n)
}

/// Plans and builds an n-vertex r-uniform critical hypergraph. With
/// `verify`, the result is checked by the cover solver; an exhausted node
/// budget leaves `verified` empty rather than failing.
pub fn build_critical(n: usize, r: usize, options: BuildOptions) -> Result<BuildResult> {
    let plan = plan_construction(n, r, options.edge_cap)?;
    let hypergraph = execute_plan(&plan)?;
    let verified = if options.verify {
        match is_critical(&hypergraph, options.node_budget) {
            Ok(report) if report.critical => Some(report),
            Ok(report) => {
                return Err(Error::Internal(format!(
                    "constructed hypergraph for (n, r) = ({n}, {r}) is not critical: {}",
                    report.reason.unwrap_or_default()
                )))
            }
            Err(Error::BudgetExhausted { lower, upper, nodes }) => {
                warn!("verification of ({n}, {r}) stopped after {nodes} nodes; tau in [{lower}, {upper}]");
                None
            }
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    Ok(BuildResult { hypergraph, plan, verified })
}
