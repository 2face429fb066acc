//! Named instances with machine-checkable expectations. Each subset is
//! validated first; verdicts are then compared against the algebraic
//! criteria and the graph search, which must also agree with each other.

use std::sync::Arc;

use serde::Serialize;

use crate::automorphism::{involution_conjugacy_classes, involutory_automorphisms};
use crate::catalog::build_str;
use crate::criteria::{
    bipartite_algebraic, bipartite_when_connected, connected_algebraic, connected_coset_criterion, verify_witness,
    Branch,
};
use crate::error::Result;
use crate::gcs::{alpha_partition, enumerate_gcs, validate_gcs, GCSubset};
use crate::graph::{are_isomorphic, build_gc_graph, direct_product_graph, integral_spectrum, is_isomorphism};
use crate::notation::{parse_alpha, parse_element_set};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Expect {
    /// `Some(false)`: the subset must be rejected.
    pub valid: Option<bool>,
    pub connected: Option<bool>,
    /// First failing clause of the direct connectivity test.
    pub branch: Option<Branch>,
    pub bipartite: Option<bool>,
    pub integral: Option<bool>,
    /// Product of the odd-walk witness, by element name.
    pub witness_product: Option<&'static str>,
    /// Number of valid size-3 subsets under α.
    pub cubic_subsets: Option<usize>,
    pub big_omega_empty: Option<bool>,
    /// Non-identity involutions of Aut(G), and their class count.
    pub involutions: Option<usize>,
    pub involution_classes: Option<usize>,
}

/// `(group, α, subset)` for each factor of a product fixture; the product
/// graph is rebuilt from them and compared vertex by vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProductFactors {
    pub left: (&'static str, &'static str, &'static str),
    pub right: (&'static str, &'static str, &'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FixtureKind {
    Single,
    /// Every listed graph is isomorphic to the first; `subset = None` on a
    /// member means all valid size-3 subsets for that α.
    IsomorphicFamily(&'static [(&'static str, &'static str, Option<&'static str>)]),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Fixture {
    pub id: &'static str,
    pub group: &'static str,
    pub alpha: &'static str,
    pub subset: Option<&'static str>,
    pub expect: Expect,
    pub factors: Option<ProductFactors>,
    pub kind: FixtureKind,
    pub anchor: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixtureOutcome {
    pub id: String,
    pub anchor: String,
    pub passed: bool,
    pub failures: Vec<String>,
}

const NONE: Expect = Expect {
    valid: None,
    connected: None,
    branch: None,
    bipartite: None,
    integral: None,
    witness_product: None,
    cubic_subsets: None,
    big_omega_empty: None,
    involutions: None,
    involution_classes: None,
};

const fn single(id: &'static str, group: &'static str, alpha: &'static str, subset: Option<&'static str>, expect: Expect, anchor: &'static str) -> Fixture {
    Fixture { id, group, alpha, subset, expect, factors: None, kind: FixtureKind::Single, anchor }
}

const fn disconnected(branch: Option<Branch>) -> Expect {
    Expect { valid: Some(true), connected: Some(false), branch, ..NONE }
}

const fn good() -> Expect {
    Expect { valid: Some(true), connected: Some(true), integral: Some(true), ..NONE }
}

const fn empty_family() -> Expect {
    Expect { cubic_subsets: Some(0), ..NONE }
}

const Z2_CUBED_ALPHA: &str = "(1,0,0)->(1,0,0), (0,1,0)->(0,1,0), (0,0,1)->(0,1,1)";
const GEN: Option<Branch> = Some(Branch::FailsGeneration);

const Z2_CUBED_AND_Q8: &[(&str, &str, Option<&str>)] = &[
    ("Z2^3", Z2_CUBED_ALPHA, Some("(1,0,0),(0,0,1),(0,1,1)")),
    ("Z2^3", Z2_CUBED_ALPHA, Some("(1,0,0),(1,0,1),(1,1,1)")),
    ("Z2^3", Z2_CUBED_ALPHA, Some("(1,1,0),(0,0,1),(0,1,1)")),
    ("Z2^3", Z2_CUBED_ALPHA, Some("(1,1,0),(1,0,1),(1,1,1)")),
    ("Q8", "a->a^-1, b->b", None),
];

const D6_TRIPLE: &[(&str, &str, Option<&str>)] = &[
    ("D6", "a->a^-1, b->b", Some("b,ab,a^2b")),
    ("D6", "a->a^-1, b->ab", Some("b,ab,a^2b")),
    ("D6", "a->a^-1, b->a^2b", Some("b,ab,a^2b")),
];

const D8_TRIPLE: &[(&str, &str, Option<&str>)] =
    &[("D8", "a->a^-1, b->b", None), ("D8", "a->a^-1, b->a^2b", None), ("Q8", "a->a^-1, b->b", Some("a,b,a^2b"))];

/// The registry, in a fixed order.
pub fn fixtures() -> Vec<Fixture> {
    let mut out = vec![
        single(
            "z14-bipartite",
            "Z14",
            "inv",
            Some("g,g^3,g^5"),
            Expect { valid: Some(true), bipartite: Some(true), connected: Some(true), ..NONE },
            "bipartite example: Z14 under inversion, odd generators",
        ),
        single(
            "z2sq-z6-odd-walk",
            "Z2^2 x Z6",
            "(1,0,0)->(1,0,0), (0,1,0)->(0,1,0), (0,0,1)->(0,1,1)",
            Some("(1,0,0),(0,0,2),(0,0,4)"),
            Expect { valid: Some(true), bipartite: Some(false), witness_product: Some("(0,0,0)"), ..NONE },
            "non-bipartite example: Z2^2 x Z6, cube of (0,0,2)",
        ),
        single("z2sq-swap", "Z2^2", "(0,1)->(1,0), (1,0)->(0,1)", None, Expect { big_omega_empty: Some(true), ..empty_family() }, "abelian: Z2^2 has no cubic subsets"),
    ];
    for (i, s) in ["(1,0,0),(0,0,1),(0,1,1)", "(1,0,0),(1,0,1),(1,1,1)", "(1,1,0),(0,0,1),(0,1,1)", "(1,1,0),(1,0,1),(1,1,1)"]
        .into_iter()
        .enumerate()
    {
        let id: &'static str = ["z2cube-s1", "z2cube-s2", "z2cube-s3", "z2cube-s4"][i];
        out.push(single(id, "Z2^3", Z2_CUBED_ALPHA, Some(s), good(), "abelian: elementary Z2^3, one involution class"));
    }
    out.push(single("z2cube-count", "Z2^3", Z2_CUBED_ALPHA, None, Expect { cubic_subsets: Some(4), ..NONE }, "abelian: exactly four cubic subsets of Z2^3"));
    out.extend([
        single("z8-cube", "Z8", "g->g^3", None, Expect { big_omega_empty: Some(true), ..empty_family() }, "abelian: Z8 under g->g^3"),
        single("z8-fifth", "Z8", "g->g^5", None, Expect { big_omega_empty: Some(true), ..empty_family() }, "abelian: Z8 under g->g^5"),
        single("z2cube-iso", "Z2^3", Z2_CUBED_ALPHA, None, NONE, "abelian: Z2^3 graphs pairwise isomorphic, and to the Q8 graphs"),
    ]);
    if let Some(last) = out.last_mut() {
        last.kind = FixtureKind::IsomorphicFamily(Z2_CUBED_AND_Q8);
    }
    for (id, alpha) in [("d6-alpha0", "a->a^-1, b->b"), ("d6-alpha1", "a->a^-1, b->ab"), ("d6-alpha2", "a->a^-1, b->a^2b")] {
        out.push(single(id, "D6", alpha, Some("b,ab,a^2b"), good(), "order 6: D6 reflections"));
    }
    out.push(Fixture {
        kind: FixtureKind::IsomorphicFamily(D6_TRIPLE),
        ..single("d6-iso", "D6", "a->a^-1, b->b", None, NONE, "order 6: the three D6 graphs are isomorphic")
    });
    out.extend([
        single("q8-alpha", "Q8", "a->a^-1, b->ab", None, Expect { big_omega_empty: Some(true), ..empty_family() }, "order 8: Q8 class with omega = <a>"),
        single("q8-beta", "Q8", "a->a^-1, b->b", Some("a,b,a^2b"), good(), "order 8: Q8 class with three-way partition"),
        single("q8-classes", "Q8", "a->a^-1, b->b", None, Expect { involution_classes: Some(2), ..NONE }, "order 8: two involution classes in Aut(Q8)"),
        single("d8-empty-rows", "D8", "a->a^-1, b->ab", None, empty_family(), "order 8: D8 rows with empty Omega"),
        single("d8-beta1", "D8", "a->a^-1, b->b", Some("a,a^3,b"), good(), "order 8: D8 graphs are connected and integral"),
        single(
            "d10-nonintegral",
            "D10",
            "a->a^-1, b->b",
            Some("b,ab,a^4b"),
            Expect { valid: Some(true), connected: Some(true), integral: Some(false), ..NONE },
            "order 10: connected but not integral",
        ),
        single(
            "a4-conjugation",
            "A4",
            "conj:(12)(34)",
            Some("(123),(124),(12)(34)"),
            disconnected(Some(Branch::FailsIndex)),
            "order 12: A4, product subgroup of order 3",
        ),
        single("f54", "F54", "a->a^-1, b->b", Some("b,b^2,b^3"), disconnected(GEN), "order 20: Frobenius group"),
    ]);
    out.push(Fixture {
        kind: FixtureKind::IsomorphicFamily(D8_TRIPLE),
        ..single("d8-iso", "D8", "a->a^-1, b->b", None, NONE, "order 8: D8 and Q8 cubic graphs share one shape")
    });
    for (id, group, alpha) in [
        ("t12-lemma", "T12", "a->a, b->a^3b"),
        ("t20-lemma", "T20", "a->a, b->a^5b"),
        ("t24-lemma", "T24", "a->a, b->a^6b"),
    ] {
        out.push(single(id, group, alpha, Some("b,a^2b,a^4b"), disconnected(None), "dicyclic family: disconnected cubic graph"));
    }
    for (id, group) in [("d12-lemma", "D12"), ("d20-lemma", "D20"), ("d24-lemma", "D24")] {
        out.push(single(id, group, "a->a^-1, b->a^2b", Some("a^3b,a^-1b,ab"), disconnected(None), "dihedral family D4n, n >= 3"));
    }
    out.push(single("d8-lemma-boundary", "D8", "a->a^-1, b->a^2b", None, Expect { cubic_subsets: Some(8), ..NONE }, "dihedral family: n = 2 is the exception"));

    let products = [
        (
            "d12xz2",
            "D12 x Z2",
            "(a,0)->(a^-1,0), (b,0)->(a^2b,0), (e,1)->(e,1)",
            "(a^3b,1),(a^-1b,1),(ab,1)",
            ProductFactors { left: ("D12", "a->a^-1, b->a^2b", "a^3b,a^-1b,ab"), right: ("Z2", "id", "1") },
        ),
        (
            "t12xz2",
            "T12 x Z2",
            "(a,0)->(a,0), (b,0)->(a^3b,0), (e,1)->(e,1)",
            "(b,1),(a^2b,1),(a^4b,1)",
            ProductFactors { left: ("T12", "a->a, b->a^3b", "b,a^2b,a^4b"), right: ("Z2", "id", "1") },
        ),
        (
            "d6xz4",
            "D6 x Z4",
            "(a,0)->(a^-1,0), (b,0)->(a^2b,0), (e,1)->(e,3)",
            "(b,1),(ab,1),(a^2b,1)",
            ProductFactors { left: ("D6", "a->a^-1, b->a^2b", "b,ab,a^2b"), right: ("Z4", "inv", "1") },
        ),
        (
            "a4xz2",
            "A4 x Z2",
            "conj:((12)(34),0)",
            "((123),1),((124),1),((12)(34),1)",
            ProductFactors { left: ("A4", "conj:(12)(34)", "(123),(124),(12)(34)"), right: ("Z2", "id", "1") },
        ),
    ];
    for (id, group, alpha, subset, factors) in products {
        out.push(Fixture {
            factors: Some(factors),
            ..single(id, group, alpha, Some(subset), disconnected(None), "order 24: product with a disconnected factor")
        });
    }
    out.extend([
        single("q8xz3-s1", "Q8 x Z3", "(e,1)->(e,1), (a,0)->(a^-1,0), (b,0)->(b,0)", Some("(a,0),(a,1),(a,2)"), disconnected(GEN), "order 24: Q8 x Z3, S1"),
        single("d24-s2", "D24", "a->a^5, b->b", Some("a^2,a^6,a^10"), disconnected(GEN), "order 24: D24, S2"),
        single("s4-s3", "S4", "conj:(12)", Some("(12),(13),(23)"), disconnected(GEN), "order 24: Sym(4), S3"),
        single("d8xz3-s4", "D8 x Z3", "(e,1)->(e,1), (a,0)->(a^-1,0), (b,0)->(a^2b,0)", Some("(a,0),(a,1),(a,2)"), disconnected(GEN), "order 24: D8 x Z3, S4"),
        single("u24-s5", "U24", "a->a, b->b^-1", Some("a,a^7,a^4"), disconnected(GEN), "order 24: U24, S5"),
        single("v24-s6", "V24", "a->a, b->b^-1", Some("a,a^5,a^3"), disconnected(GEN), "order 24: V24, S6"),
        single("sl23-classes", "SL23", "A->[[0,2],[1,0]], B->[[0,1],[2,2]]", None, Expect { involutions: Some(9), involution_classes: Some(2), ..NONE }, "order 24: SL(2,3) involutions"),
        single("sl23-alpha7", "SL23", "A->[[0,2],[1,0]], B->[[0,1],[2,2]]", None, Expect { big_omega_empty: Some(true), ..empty_family() }, "order 24: SL(2,3), first class"),
        single("sl23-alpha8", "SL23", "A->[[2,1],[1,1]], B->[[1,2],[0,1]]", None, Expect { big_omega_empty: Some(true), ..empty_family() }, "order 24: SL(2,3), second class"),
        single("d30-s9", "D30", "a->a^4, b->b", Some("b,a^5b,a^10b"), disconnected(GEN), "order 30: D30, S9"),
        single("u30-s10", "U30", "a->a, b->b^-1", Some("a,a^-1,a^5"), disconnected(GEN), "order 30: U30, S10"),
        // The published subset contains (a,0) = ω-image of (a^3,0), so it
        // is rejected; the companion below gives a valid disconnected one.
        single("d10xz3-s11", "D10 x Z3", "(e,1)->(e,1), (a,0)->(a^-1,0), (b,0)->(a^2b,0)", Some("(a,0),(a,1),(a,2)"), Expect { valid: Some(false), ..NONE }, "order 30: D10 x Z3, S11 as published"),
        single("d10xz3-repaired", "D10 x Z3", "(e,1)->(e,1), (a,0)->(a^-1,0), (b,0)->(b,0)", Some("(b,0),(b,1),(b,2)"), disconnected(GEN), "order 30: D10 x Z3, valid replacement witness"),
    ]);
    out
}

fn subset_of(group: &str, alpha: &str, subset: &str) -> Result<GCSubset> {
    let g = Arc::new(build_str(group)?);
    let a = parse_alpha(&g, alpha)?;
    let s = parse_element_set(&g, subset)?;
    validate_gcs(&g, &a, &s)
}

fn check<T: PartialEq + std::fmt::Debug>(failures: &mut Vec<String>, what: &str, want: Option<T>, got: T) {
    if let Some(w) = want {
        if w != got {
            failures.push(format!("{what}: expected {w:?}, got {got:?}"));
        }
    }
}

/// Oracle agreement plus expectations for one validated subset.
fn check_subset(s: &GCSubset, e: &Expect, failures: &mut Vec<String>) -> Result<()> {
    let graph = build_gc_graph(s)?;
    let direct = connected_algebraic(s);
    let coset = connected_coset_criterion(s);
    let bfs = graph.is_connected();
    if direct.connected != bfs || coset.connected != bfs {
        failures.push(format!("connectivity oracles disagree: direct {}, coset {}, search {bfs}", direct.connected, coset.connected));
    }
    check(failures, "connected", e.connected, bfs);
    check(failures, "branch", e.branch, direct.branch);
    let bipartite = graph.is_bipartite();
    check(failures, "bipartite", e.bipartite, bipartite);
    if s.group().is_abelian() {
        let alg = bipartite_algebraic(s)?;
        if alg.bipartite != bipartite {
            failures.push("bipartiteness oracles disagree".into());
        }
        if let Some(w) = &alg.witness {
            if !verify_witness(s, &w.terms) {
                failures.push(format!("odd-walk witness {} does not verify", w.text));
            }
            check(failures, "witness product", e.witness_product, w.product.as_str());
        } else if e.witness_product.is_some() {
            failures.push("expected an odd-walk witness".into());
        }
    }
    if bfs {
        if let Err(err) = bipartite_when_connected(s) {
            failures.push(format!("connected bipartite conditions: {err}"));
        }
    }
    if e.integral.is_some() {
        check(failures, "integral", e.integral, integral_spectrum(&graph)?.integral);
    }
    Ok(())
}

fn check_factors(s: &GCSubset, f: &ProductFactors, failures: &mut Vec<String>) -> Result<()> {
    let x = build_gc_graph(&subset_of(f.left.0, f.left.1, f.left.2)?)?;
    let y = build_gc_graph(&subset_of(f.right.0, f.right.1, f.right.2)?)?;
    let product = direct_product_graph(&x, &y);
    let direct = build_gc_graph(s)?;
    if product.n() != direct.n() || product.edges() != direct.edges() {
        failures.push("product of factor graphs differs from the graph of the product data".into());
    }
    if direct.is_connected() && !(x.is_connected() && y.is_connected()) {
        failures.push("connected product with a disconnected factor".into());
    }
    Ok(())
}

fn family_graphs(members: &[(&str, &str, Option<&str>)]) -> Result<Vec<(String, crate::graph::SimpleGraph)>> {
    let mut graphs = Vec::new();
    for &(group, alpha, subset) in members {
        match subset {
            Some(set) => {
                let s = subset_of(group, alpha, set)?;
                graphs.push((format!("{group} {}", s.format()), build_gc_graph(&s)?));
            }
            None => {
                let g = Arc::new(build_str(group)?);
                let a = parse_alpha(&g, alpha)?;
                for s in enumerate_gcs(&g, &a, 3)? {
                    graphs.push((format!("{group} {}", s.format()), build_gc_graph(&s)?));
                }
            }
        }
    }
    Ok(graphs)
}

/// Explicit, edge-verified isomorphisms from the first member of a family
/// to each other member.
pub fn family_isomorphisms(members: &[(&str, &str, Option<&str>)]) -> Result<Vec<(String, Option<Vec<usize>>)>> {
    let graphs = family_graphs(members)?;
    let Some((_, first)) = graphs.first() else { return Ok(Vec::new()) };
    graphs
        .iter()
        .map(|(name, x)| {
            let map = are_isomorphic(first, x)?.filter(|m| is_isomorphism(first, x, m));
            Ok((name.clone(), map))
        })
        .collect()
}

fn run_inner(f: &Fixture, failures: &mut Vec<String>) -> Result<()> {
    let g = Arc::new(build_str(f.group)?);
    let alpha = parse_alpha(&g, f.alpha)?;
    let e = &f.expect;
    if e.cubic_subsets.is_some() {
        check(failures, "cubic subsets", e.cubic_subsets, enumerate_gcs(&g, &alpha, 3)?.len());
    }
    if e.big_omega_empty.is_some() {
        check(failures, "Omega empty", e.big_omega_empty, alpha_partition(&g, &alpha)?.big_omega.is_empty());
    }
    if e.involutions.is_some() {
        check(failures, "involutions", e.involutions, involutory_automorphisms(&g, false)?.len());
    }
    if e.involution_classes.is_some() {
        check(failures, "involution classes", e.involution_classes, involution_conjugacy_classes(&g)?.len());
    }
    if let Some(set) = f.subset {
        let members = parse_element_set(&g, set)?;
        match (validate_gcs(&g, &alpha, &members), e.valid) {
            (Err(err), Some(false)) => {
                let _ = err;
            }
            (Err(err), _) => failures.push(format!("subset rejected: {err}")),
            (Ok(_), Some(false)) => failures.push("subset accepted but expected to be invalid".into()),
            (Ok(s), _) => {
                check_subset(&s, e, failures)?;
                if let Some(factors) = &f.factors {
                    check_factors(&s, factors, failures)?;
                }
            }
        }
    }
    if let FixtureKind::IsomorphicFamily(members) = f.kind {
        for (name, map) in family_isomorphisms(members)? {
            if map.is_none() {
                failures.push(format!("{name} is not isomorphic to the first member"));
            }
        }
    }
    Ok(())
}

pub fn run_fixture(f: &Fixture) -> FixtureOutcome {
    let mut failures = Vec::new();
    if let Err(err) = run_inner(f, &mut failures) {
        failures.push(format!("error: {err}"));
    }
    FixtureOutcome { id: f.id.to_string(), anchor: f.anchor.to_string(), passed: failures.is_empty(), failures }
}

pub fn run_fixtures() -> Vec<FixtureOutcome> {
    let all = fixtures();
    super::par_map(&all, run_fixture)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let all = fixtures();
        let mut ids: Vec<_> = all.iter().map(|f| f.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), all.len());
    }

    #[test]
    fn every_fixture_passes() {
        let failed: Vec<_> = run_fixtures().into_iter().filter(|o| !o.passed).collect();
        assert!(failed.is_empty(), "{failed:#?}");
    }
}
