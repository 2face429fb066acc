//! Runs the ten acceptance criteria and prints one line per criterion.
//! Exits non-zero if any criterion fails, except those listed in
//! `KNOWN_UNATTAINABLE`, which still print their FAIL line.

mod common;

use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use gencay_core::automorphism::{automorphism_group, involutory_automorphisms};
use gencay_core::catalog::{build_str, Kind, CATALOG_ORDERS};
use gencay_core::census::{
    cayley_sum_census, family_isomorphisms, reproduce_table1, run_census, survivor_diff, CensusOptions, CensusReport,
};
use gencay_core::criteria::{
    bipartite_algebraic, connected_algebraic, connected_coset_criterion, identity_component_algebraic,
    verify_alpha_bridge, verify_witness,
};
use gencay_core::gcs::{enumerate_gcs, validate_gcs};
use gencay_core::graph::{build_gc_graph, direct_product_graph, integral_spectrum};
use gencay_core::group::product_set;
use gencay_core::notation::{parse_alpha, parse_element_set};
use gencay_core::{direct_product, ElementSet};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

/// Criterion 3 cannot hold as stated: Z2^3 has a square-free cubic subset
/// spanning an index-2 subgroup, whose sum graph is two disjoint K4s.
const KNOWN_UNATTAINABLE: &[&str] = &["3 cayley sum classification"];

fn census(kind: Kind) -> CensusReport {
    run_census(&CATALOG_ORDERS, kind, &CensusOptions::default()).expect("census runs")
}

fn classification(report: &CensusReport, expected: &[&str]) -> Outcome {
    match survivor_diff(report, expected) {
        None => Ok(format!("survivors: {}", report.survivor_line())),
        Some(diff) => Err(format!("survivors: {}; {diff}", report.survivor_line())),
    }
}

fn cayley_sum() -> Outcome {
    let r = cayley_sum_census(&CATALOG_ORDERS, 3).map_err(|e| e.to_string())?;
    let mut got = r.survivors.clone();
    let mut want = vec!["Z2^2", "Z2^3", "Z6", "Z8"];
    got.sort();
    want.sort();
    let note = format!("connected and integral: {}; integral only: {}", r.survivors.join(", "), r.integral_only.join(", "));
    if got == want {
        return Ok(note);
    }
    let culprit = r
        .groups
        .iter()
        .find(|g| g.passes() != want.contains(&g.group.as_str()))
        .map(|g| format!("{}: {}", g.group, g.first_failure.as_deref().unwrap_or("no failing subset")))
        .unwrap_or_default();
    Err(format!("{note}; first difference {culprit}"))
}

fn table1() -> Outcome {
    reproduce_table1().map(|t| format!("{} rows match", t.lines().count() - 1)).map_err(|e| e.to_string())
}

fn examples() -> Outcome {
    let sub = |group: &str, alpha: &str, set: &str| {
        let g = Arc::new(build_str(group).unwrap());
        let a = parse_alpha(&g, alpha).unwrap();
        let s = parse_element_set(&g, set).unwrap();
        validate_gcs(&g, &a, &s).unwrap()
    };
    let z14 = sub("Z14", "inv", "g,g^3,g^5");
    let v14 = bipartite_algebraic(&z14).map_err(|e| e.to_string())?;
    if !v14.bipartite || !build_gc_graph(&z14).unwrap().is_bipartite() {
        return Err("Z14 example is not bipartite".into());
    }
    let s2 = sub("Z2^2 x Z6", "(1,0,0)->(1,0,0), (0,1,0)->(0,1,0), (0,0,1)->(0,1,1)", "(1,0,0),(0,0,2),(0,0,4)");
    let v = bipartite_algebraic(&s2).map_err(|e| e.to_string())?;
    let w = v.witness.ok_or("no witness for the product example")?;
    if v.bipartite || build_gc_graph(&s2).unwrap().is_bipartite() {
        return Err("product example reported bipartite".into());
    }
    if !verify_witness(&s2, &w.terms) || w.product != "(0,0,0)" {
        return Err(format!("witness {} with product {} does not verify", w.text, w.product));
    }
    Ok(format!("Z14 bipartite; product example odd witness {} = {}", w.text, w.product))
}

fn oracle_equivalence() -> Outcome {
    let mut checked = 0usize;
    for (name, g) in common::small_catalog() {
        let g = Arc::new(g);
        for alpha in involutory_automorphisms(&g, false).unwrap() {
            for k in 1..=g.order() {
                for s in enumerate_gcs(&g, &alpha, k).unwrap() {
                    checked += 1;
                    let graph = build_gc_graph(&s).unwrap();
                    let bfs = graph.is_connected();
                    let fail = |what: &str| Err(format!("{what} disagrees on {name} [{}] {}", alpha.describe(&g), s.format()));
                    if connected_algebraic(&s).connected != bfs || connected_coset_criterion(&s).connected != bfs {
                        return fail("connectivity");
                    }
                    if g.is_abelian() && bipartite_algebraic(&s).unwrap().bipartite != graph.is_bipartite() {
                        return fail("bipartiteness");
                    }
                    let component = ElementSet::from_indices(g.order(), graph.component_of(0));
                    if identity_component_algebraic(&s).ok() != Some(component) {
                        return fail("identity component");
                    }
                    if !verify_alpha_bridge(&s) {
                        return fail("alpha bridge");
                    }
                }
            }
        }
    }
    Ok(format!("{checked} (G, alpha, S) instances, no disagreement"))
}

fn conjugation_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x51);
    let mut checked = 0;
    for (name, g) in common::small_catalog() {
        let g = Arc::new(g);
        let auts = automorphism_group(&g).unwrap();
        let involutions = involutory_automorphisms(&g, false).unwrap();
        let usable: Vec<_> = involutions.iter().filter(|a| !common::blocks(&g, a).is_empty()).collect();
        if usable.is_empty() {
            continue;
        }
        for _ in 0..100 {
            let alpha = usable.choose(&mut rng).unwrap();
            let s = common::random_subset(&mut rng, &g, alpha).unwrap();
            let beta = auts.choose(&mut rng).unwrap();
            let t = gencay_core::gcs::conjugate_gcs(&s, beta).map_err(|e| e.to_string())?;
            let (x, y) = (build_gc_graph(&s).unwrap(), build_gc_graph(&t).unwrap());
            if !gencay_core::graph::is_isomorphism(&x, &y, beta.image()) {
                return Err(format!("{name}: beta is not an isomorphism for {}", s.format()));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} sampled conjugations are graph isomorphisms"))
}

fn product_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x412);
    let pool = ["Z2", "Z3", "Z4", "Z2^2", "Z6", "D6", "Z8", "D8", "Q8"];
    let mut connected_products = 0;
    for trial in 0..20 {
        let pick = |rng: &mut ChaCha8Rng| loop {
            let g = Arc::new(build_str(pool.choose(rng).unwrap()).unwrap());
            let alphas: Vec<_> = involutory_automorphisms(&g, true)
                .unwrap()
                .into_iter()
                .filter(|a| !common::blocks(&g, a).is_empty())
                .collect();
            if let Some(a) = alphas.choose(rng) {
                return common::random_subset(rng, &g, a).unwrap();
            }
        };
        let (s1, s2) = loop {
            let (a, b) = (pick(&mut rng), pick(&mut rng));
            if a.group().order() * b.group().order() <= 64 {
                break (a, b);
            }
        };
        let (x, y) = (build_gc_graph(&s1).unwrap(), build_gc_graph(&s2).unwrap());
        let tensor = direct_product_graph(&x, &y);
        let g = Arc::new(direct_product(s1.group(), s2.group()));
        let alpha = s1.alpha().product(s2.alpha());
        let s = validate_gcs(&g, &alpha, &product_set(s1.members(), s2.members())).map_err(|e| e.to_string())?;
        let direct = build_gc_graph(&s).unwrap();
        // Same i*|H|+j vertex indexing on both sides; labels differ only in
        // tuple nesting.
        if tensor.n() != direct.n() || tensor.edges() != direct.edges() {
            return Err(format!("trial {trial}: {} x {} differs from its product data", s1.group().name(), s2.group().name()));
        }
        if direct.is_connected() {
            connected_products += 1;
            if !(x.is_connected() && y.is_connected()) {
                return Err(format!("trial {trial}: connected product with a disconnected factor"));
            }
        }
        let _ = rng.gen::<u8>();
    }
    Ok(format!("20 products vertex-exact ({connected_products} connected, factors connected)"))
}

fn isomorphism_claims() -> Outcome {
    let z2cube = "(1,0,0)->(1,0,0), (0,1,0)->(0,1,0), (0,0,1)->(0,1,1)";
    let families: [&[(&str, &str, Option<&str>)]; 2] = [
        &[
            ("Z2^3", z2cube, Some("(1,0,0),(0,0,1),(0,1,1)")),
            ("Z2^3", z2cube, Some("(1,0,0),(1,0,1),(1,1,1)")),
            ("Z2^3", z2cube, Some("(1,1,0),(0,0,1),(0,1,1)")),
            ("Z2^3", z2cube, Some("(1,1,0),(1,0,1),(1,1,1)")),
            ("Q8", "a->a^-1, b->b", None),
        ],
        &[
            ("D6", "a->a^-1, b->b", Some("b,ab,a^2b")),
            ("D6", "a->a^-1, b->ab", Some("b,ab,a^2b")),
            ("D6", "a->a^-1, b->a^2b", Some("b,ab,a^2b")),
        ],
    ];
    let mut maps = 0;
    for family in families {
        for (name, map) in family_isomorphisms(family).map_err(|e| e.to_string())? {
            map.ok_or(format!("{name} is not isomorphic to the first member"))?;
            maps += 1;
        }
    }
    Ok(format!("{maps} explicit isomorphisms verified edge by edge"))
}

fn spectral_soundness(reports: &[&CensusReport]) -> Outcome {
    let mut graphs = 0;
    for report in reports {
        for record in report.groups.iter().filter(|r| report.survivors.contains(&r.group)) {
            let g = Arc::new(build_str(&record.group).unwrap());
            for row in record.rows.iter().filter(|r| r.connected) {
                let alpha = parse_alpha(&g, &row.alpha).map_err(|e| e.to_string())?;
                let set = parse_element_set(&g, &row.subset).map_err(|e| e.to_string())?;
                let graph = build_gc_graph(&validate_gcs(&g, &alpha, &set).map_err(|e| e.to_string())?).unwrap();
                let v = integral_spectrum(&graph).map_err(|e| e.to_string())?;
                let sum: i64 = v.roots.iter().sum();
                let squares: i64 = v.roots.iter().map(|r| r * r).sum();
                let ok = v.integral
                    && v.roots.len() == graph.n()
                    && v.roots.iter().all(|r| (-3..=3).contains(r))
                    && sum == 0
                    && squares == 2 * graph.edge_count() as i64;
                if !ok {
                    return Err(format!("{} {}: spectrum {:?}", record.group, row.subset, v.roots));
                }
                graphs += 1;
            }
        }
    }
    let g = Arc::new(build_str("D10").unwrap());
    let a = parse_alpha(&g, "a->a^-1, b->b").unwrap();
    let s = validate_gcs(&g, &a, &parse_element_set(&g, "b,ab,a^4b").unwrap()).unwrap();
    let d10 = integral_spectrum(&build_gc_graph(&s).unwrap()).unwrap();
    if d10.integral {
        return Err("D10 example reported integral".into());
    }
    Ok(format!("{graphs} survivor graphs integral in [-3,3]; D10 example leaves {}", d10.remainder))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let abelian = census(Kind::Abelian);
    let nonabelian = census(Kind::Nonabelian);
    let results: Vec<(&str, Outcome)> = vec![
        ("1 abelian classification", classification(&abelian, &["Z6", "Z2^3", "Z8"])),
        ("2 non-abelian classification", classification(&nonabelian, &["D6", "D8", "Q8"])),
        ("3 cayley sum classification", cayley_sum()),
        ("4 D8 involution table", table1()),
        ("5 bipartite examples", examples()),
        ("6 oracle equivalence", oracle_equivalence()),
        ("7 conjugation invariance", conjugation_invariance()),
        ("8 product identity", product_identity()),
        ("9 isomorphism claims", isomorphism_claims()),
        ("10 spectral soundness", spectral_soundness(&[&abelian, &nonabelian])),
    ];
    let (mut failed, mut unexpected) = (0, 0);
    for (name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                let known = KNOWN_UNATTAINABLE.contains(name);
                unexpected += usize::from(!known);
                let tag = if known { " [known unattainable]" } else { "" };
                println!("FAIL criterion {name}{tag}: {detail}");
            }
        }
    }
    println!("{} of {} criteria passed in {:.1?}", results.len() - failed, results.len(), start.elapsed());
    if unexpected == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
