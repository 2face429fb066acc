//! Algebraic decision procedures for connectivity and bipartiteness of
//! generalized Cayley graphs. None of them looks at the graph itself, so they
//! can be checked against the BFS answers in [`crate::graph`].

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gcs::{alpha_partition, GCSubset};
use crate::graph::build_gc_graph;
use crate::group::{ElementSet, FiniteGroup};

/// Which clause decided a connectivity verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Branch {
    /// `⟨S⟩ = G` and `⟨SS⁻¹⟩ = G`.
    GeneratesAndFullProduct,
    /// `⟨SS⁻¹⟩` is an α-invariant subgroup of index 2 missing `S`.
    IndexTwoCoset,
    FailsGeneration,
    FailsIndex,
    FailsAlphaInvariance,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectivityVerdict {
    pub connected: bool,
    pub branch: Branch,
    /// `|⟨S⟩|`.
    pub generated_order: usize,
    /// `|⟨SS⁻¹⟩|`.
    pub product_subgroup_order: usize,
    /// `|G : ⟨SS⁻¹⟩|`.
    pub index: usize,
    /// `α(⟨SS⁻¹⟩) = ⟨SS⁻¹⟩`.
    pub alpha_invariant: bool,
    #[serde(skip)]
    pub product_subgroup: ElementSet,
}

/// Exponents `k_s` (element index, multiplicity) with odd sum whose product
/// lies in `ω_α(G)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OddWitness {
    pub terms: Vec<(usize, usize)>,
    /// Human-readable form, e.g. `(0,0,2)^3`.
    pub text: String,
    pub product: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BipartiteVerdict {
    pub bipartite: bool,
    pub witness: Option<OddWitness>,
}

/// The three equivalent bipartiteness conditions for connected graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConnectedBipartiteVerdict {
    pub bipartite: bool,
    /// BFS two-colouring of the graph.
    pub graph_two_colourable: bool,
    /// `|⟨SS⁻¹⟩| = |G|/2`.
    pub half_order_product: bool,
    /// `S ∩ ⟨SS⁻¹⟩ = ∅`.
    pub disjoint_from_product: bool,
}

/// `⟨SS⁻¹⟩`.
pub fn product_subgroup(s: &GCSubset) -> ElementSet {
    let g = s.group();
    g.generated_subgroup(&g.set_product(s.members(), &g.set_inverse(s.members())))
}

/// `⟨S⁻¹S⟩`.
pub fn inverse_product_subgroup(s: &GCSubset) -> ElementSet {
    let g = s.group();
    g.generated_subgroup(&g.set_product(&g.set_inverse(s.members()), s.members()))
}

fn subgroup_data(s: &GCSubset) -> (ElementSet, usize, usize, bool) {
    let g = s.group();
    let h = product_subgroup(s);
    let index = g.order() / h.len();
    let alpha_invariant = s.alpha().apply_set(&h) == h;
    (h, g.generated_subgroup(s.members()).len(), index, alpha_invariant)
}

/// Connected iff `⟨S⟩ = G`, `|G : ⟨SS⁻¹⟩| ≤ 2` and `⟨SS⁻¹⟩` is α-invariant.
/// The first failing condition names the branch.
pub fn connected_algebraic(s: &GCSubset) -> ConnectivityVerdict {
    let g = s.group();
    let (h, generated_order, index, alpha_invariant) = subgroup_data(s);
    let branch = if generated_order != g.order() {
        Branch::FailsGeneration
    } else if index > 2 {
        Branch::FailsIndex
    } else if !alpha_invariant {
        Branch::FailsAlphaInvariance
    } else if index == 1 {
        Branch::GeneratesAndFullProduct
    } else {
        Branch::IndexTwoCoset
    };
    ConnectivityVerdict {
        connected: matches!(branch, Branch::GeneratesAndFullProduct | Branch::IndexTwoCoset),
        branch,
        generated_order,
        product_subgroup_order: h.len(),
        index,
        alpha_invariant,
        product_subgroup: h,
    }
}

/// Coset form: connected iff `S` lies in no right coset of a proper
/// subgroup, or `S ⊆ Hg` with `H = ⟨SS⁻¹⟩` α-invariant of index 2 and
/// `g ∉ H`. Any proper `K` with `S ⊆ Kg` contains `⟨SS⁻¹⟩`, so `H` is the
/// only subgroup that needs testing.
pub fn connected_coset_criterion(s: &GCSubset) -> ConnectivityVerdict {
    let g = s.group();
    let (h, generated_order, index, alpha_invariant) = subgroup_data(s);
    let branch = match s.members().first() {
        _ if h.len() == g.order() => Branch::GeneratesAndFullProduct,
        None => Branch::FailsGeneration,
        Some(x) if h.contains(x) => Branch::FailsGeneration,
        Some(_) if index != 2 => Branch::FailsIndex,
        Some(_) if !alpha_invariant => Branch::FailsAlphaInvariance,
        Some(_) => Branch::IndexTwoCoset,
    };
    ConnectivityVerdict {
        connected: matches!(branch, Branch::GeneratesAndFullProduct | Branch::IndexTwoCoset),
        branch,
        generated_order,
        product_subgroup_order: h.len(),
        index,
        alpha_invariant,
        product_subgroup: h,
    }
}

/// Non-bipartite iff some product `Π s^{k_s}` with `Σ k_s` odd lands in
/// `ω_α(G)`. Decided by BFS over (element, parity) states; the witness is
/// read off the BFS tree. Abelian groups only.
pub fn bipartite_algebraic(s: &GCSubset) -> Result<BipartiteVerdict> {
    let g = s.group();
    if !g.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let omega = alpha_partition(g, s.alpha())?.omega;
    let n = g.order();
    let state = |x: usize, parity: usize| 2 * x + parity;
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; 2 * n];
    let mut seen = vec![false; 2 * n];
    seen[state(0, 0)] = true;
    let mut queue = VecDeque::from([state(0, 0)]);
    while let Some(cur) = queue.pop_front() {
        let (x, parity) = (cur / 2, cur % 2);
        for t in s.members().iter() {
            let next = state(g.mul(x, t), 1 - parity);
            if seen[next] {
                continue;
            }
            seen[next] = true;
            parent[next] = Some((cur, t));
            if next % 2 == 1 && omega.contains(next / 2) {
                let mut counts = vec![0usize; n];
                let mut at = next;
                while let Some((prev, t)) = parent[at] {
                    counts[t] += 1;
                    at = prev;
                }
                let terms: Vec<(usize, usize)> =
                    counts.iter().enumerate().filter(|(_, &k)| k > 0).map(|(i, &k)| (i, k)).collect();
                return Ok(BipartiteVerdict { bipartite: false, witness: Some(make_witness(g, terms)) });
            }
            queue.push_back(next);
        }
    }
    Ok(BipartiteVerdict { bipartite: true, witness: None })
}

fn make_witness(g: &FiniteGroup, terms: Vec<(usize, usize)>) -> OddWitness {
    let text = terms
        .iter()
        .map(|&(x, k)| if k == 1 { g.element_name(x).to_string() } else { format!("{}^{k}", g.element_name(x)) })
        .collect::<Vec<_>>()
        .join(" * ");
    let product = terms.iter().fold(0, |acc, &(x, k)| g.mul(acc, g.pow(x, k as i64)));
    OddWitness { terms, text, product: g.element_name(product).to_string() }
}

/// Re-multiplies a witness: odd exponent sum, members of `S`, product in ω.
pub fn verify_witness(s: &GCSubset, terms: &[(usize, usize)]) -> bool {
    let g = s.group();
    let Ok(part) = alpha_partition(g, s.alpha()) else { return false };
    let total: usize = terms.iter().map(|t| t.1).sum();
    let product = terms.iter().fold(0, |acc, &(x, k)| g.mul(acc, g.pow(x, k as i64)));
    total % 2 == 1 && terms.iter().all(|&(x, _)| s.members().contains(x)) && part.omega.contains(product)
}

/// The class of `e` under reachability by walks of even length.
pub fn theta_class(s: &GCSubset) -> Result<ElementSet> {
    let x = build_gc_graph(s)?;
    let n = x.n();
    let mut seen = ElementSet::new(n);
    seen.insert(0);
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for u in x.neighbors(v) {
            for w in x.neighbors(u) {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
    }
    Ok(seen)
}

/// `⟨S⁻¹S⟩ ∪ ⟨SS⁻¹⟩s`, the component of `e`, using the least `s ∈ S` and
/// checking that every other choice gives the same set.
pub fn identity_component_algebraic(s: &GCSubset) -> Result<ElementSet> {
    let g = s.group();
    let first = s.members().first().ok_or(Error::EmptySubset)?;
    let left = inverse_product_subgroup(s);
    let right = product_subgroup(s);
    let with = |t: usize| left.union(&g.right_translate(&right, t));
    let component = with(first);
    if let Some(t) = s.members().iter().find(|&t| with(t) != component) {
        return Err(Error::Inconsistent(format!("component depends on the choice of {}", g.element_name(t))));
    }
    Ok(component)
}

/// For connected graphs: bipartite ⇔ `|⟨SS⁻¹⟩| = |G|/2` ⇔ `S ∩ ⟨SS⁻¹⟩ = ∅`.
pub fn bipartite_when_connected(s: &GCSubset) -> Result<ConnectedBipartiteVerdict> {
    if !connected_algebraic(s).connected {
        return Err(Error::NotConnected);
    }
    let g = s.group();
    let h = product_subgroup(s);
    let graph_two_colourable = build_gc_graph(s)?.is_bipartite();
    let half_order_product = 2 * h.len() == g.order();
    let disjoint_from_product = s.members().is_disjoint(&h);
    if graph_two_colourable != half_order_product || half_order_product != disjoint_from_product {
        return Err(Error::Inconsistent(format!(
            "bipartiteness conditions disagree for {}: colouring {graph_two_colourable}, half order {half_order_product}, disjoint {disjoint_from_product}",
            s.format()
        )));
    }
    Ok(ConnectedBipartiteVerdict {
        bipartite: graph_two_colourable,
        graph_two_colourable,
        half_order_product,
        disjoint_from_product,
    })
}

/// `α(⟨S⁻¹S⟩) = ⟨SS⁻¹⟩`.
pub fn verify_alpha_bridge(s: &GCSubset) -> bool {
    s.alpha().apply_set(&inverse_product_subgroup(s)) == product_subgroup(s)
}
