//! Exhaustive classification of groups by the behaviour of their
//! generalized Cayley graphs of a fixed valency, plus the fixture registry,
//! the D8 involution table and report emitters.

mod fixtures;
mod report;
mod table1;

use std::sync::Arc;

use serde::Serialize;

pub use fixtures::{
    family_isomorphisms, fixtures, run_fixture, run_fixtures, Expect, Fixture, FixtureKind, FixtureOutcome, ProductFactors,
};
pub use report::ReportFormat;
pub use table1::{render_table1, reproduce_table1, TABLE1_GOLDEN};

use crate::automorphism::{automorphism_group, classes_under};
use crate::catalog::{catalog_of_order, Kind, CATALOG_ORDERS};
use crate::criteria::{bipartite_algebraic, connected_algebraic, connected_coset_criterion, Branch};
use crate::error::{Error, Result};
use crate::gcs::{enumerate_gcs, GCSubset};
use crate::graph::{build_cayley_sum_graph, build_gc_graph, integral_spectrum};
use crate::group::{ElementSet, FiniteGroup, GroupMap};

#[cfg(feature = "parallel")]
fn par_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    items.iter().map(f).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusOptions {
    pub subset_size: usize,
    /// Only one involution per Aut(G)-conjugacy class.
    pub use_conjugacy_reduction: bool,
    /// Also treat `α = id` (whose graphs are ordinary Cayley graphs).
    pub include_identity_alpha: bool,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions { subset_size: 3, use_conjugacy_reduction: true, include_identity_alpha: false }
    }
}

/// One `(α, S)` pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    /// Index of the involution class, in [`GroupRecord::classes`] order.
    pub alpha_class: usize,
    pub alpha: String,
    pub subset: String,
    pub connected: bool,
    pub branch: Branch,
    pub bipartite: bool,
    pub integral: bool,
    /// Integer eigenvalues, descending; complete when `integral`.
    pub eigenvalues: Vec<i64>,
    /// Non-integral factor of the characteristic polynomial, if any.
    pub remainder: Option<String>,
}

impl CensusRow {
    pub fn passes(&self) -> bool {
        self.connected && self.integral
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum GroupVerdict {
    AllConnectedIntegral,
    NoCubicGCS,
    /// `row` indexes the first failing row.
    Excluded { row: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlphaClass {
    pub representative: String,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupRecord {
    pub group: String,
    pub order: usize,
    pub abelian: bool,
    pub classes: Vec<AlphaClass>,
    pub rows: Vec<CensusRow>,
    pub verdict: GroupVerdict,
}

impl GroupRecord {
    pub fn witness(&self) -> Option<&CensusRow> {
        match self.verdict {
            GroupVerdict::Excluded { row } => self.rows.get(row),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub subset_size: usize,
    pub orders: Vec<usize>,
    pub kind: Kind,
    pub groups: Vec<GroupRecord>,
    pub survivors: Vec<String>,
}

impl CensusReport {
    pub fn survivor_line(&self) -> String {
        self.survivors.join(", ")
    }

    pub fn render(&self, format: ReportFormat) -> Result<String> {
        report::render(self, format)
    }
}

fn evaluate(s: &GCSubset, class: usize) -> Result<CensusRow> {
    let g = s.group();
    let graph = build_gc_graph(s)?;
    let verdict = connected_algebraic(s);
    let coset = connected_coset_criterion(s);
    let bfs = graph.is_connected();
    if verdict.connected != bfs || coset.connected != bfs {
        return Err(Error::Inconsistent(format!(
            "connectivity disagrees for {} in {}: direct {}, coset {}, search {bfs}",
            s.format(),
            g.name(),
            verdict.connected,
            coset.connected
        )));
    }
    let bipartite = graph.is_bipartite();
    if g.is_abelian() && bipartite_algebraic(s)?.bipartite != bipartite {
        return Err(Error::Inconsistent(format!("bipartiteness disagrees for {} in {}", s.format(), g.name())));
    }
    let spectrum = integral_spectrum(&graph)?;
    Ok(CensusRow {
        alpha_class: class,
        alpha: s.alpha().describe(g),
        subset: s.format(),
        connected: bfs,
        branch: verdict.branch,
        bipartite,
        integral: spectrum.integral,
        eigenvalues: spectrum.roots,
        remainder: (!spectrum.integral).then(|| spectrum.remainder.to_string()),
    })
}

/// Involution classes of `g` (with `{id}` first when requested).
fn alpha_classes(g: &FiniteGroup, include_identity: bool) -> Result<Vec<Vec<GroupMap>>> {
    let auts = automorphism_group(g)?;
    let involutions: Vec<GroupMap> = auts.iter().filter(|a| a.is_involutory() && !a.is_identity()).cloned().collect();
    let mut classes = classes_under(&auts, &involutions);
    if include_identity {
        classes.insert(0, vec![GroupMap::identity(g.order())]);
    }
    Ok(classes)
}

/// Every `(α, S)` row of one group, and its verdict.
pub fn classify_group(name: &str, g: FiniteGroup, options: &CensusOptions) -> Result<GroupRecord> {
    if g.order() > 30 {
        return Err(Error::OrderLimitExceeded { order: g.order(), limit: 30 });
    }
    let g = Arc::new(g);
    let classes = alpha_classes(&g, options.include_identity_alpha)?;
    let mut work: Vec<(usize, GroupMap)> = Vec::new();
    for (i, class) in classes.iter().enumerate() {
        if options.use_conjugacy_reduction {
            work.push((i, class[0].clone()));
        } else {
            work.extend(class.iter().map(|a| (i, a.clone())));
        }
    }
    let mut subsets: Vec<(usize, GCSubset)> = Vec::new();
    for (i, alpha) in &work {
        subsets.extend(enumerate_gcs(&g, alpha, options.subset_size)?.into_iter().map(|s| (*i, s)));
    }
    let rows = par_map(&subsets, |(i, s)| evaluate(s, *i)).into_iter().collect::<Result<Vec<_>>>()?;
    let verdict = match rows.iter().position(|r| !r.passes()) {
        _ if rows.is_empty() => GroupVerdict::NoCubicGCS,
        Some(row) => GroupVerdict::Excluded { row },
        None => GroupVerdict::AllConnectedIntegral,
    };
    Ok(GroupRecord {
        group: name.to_string(),
        order: g.order(),
        abelian: g.is_abelian(),
        classes: classes
            .iter()
            .map(|c| AlphaClass { representative: c[0].describe(&g), size: c.len() })
            .collect(),
        rows,
        verdict,
    })
}

fn check_orders(orders: &[usize]) -> Result<()> {
    match orders.iter().find(|n| !CATALOG_ORDERS.contains(n)) {
        Some(n) => Err(Error::UnsupportedOrder(format!("order {n} is outside the census range {CATALOG_ORDERS:?}"))),
        None => Ok(()),
    }
}

/// Classifies every catalog group of the given orders. Survivors are the
/// groups admitting at least one subset whose graphs all pass.
pub fn run_census(orders: &[usize], kind: Kind, options: &CensusOptions) -> Result<CensusReport> {
    check_orders(orders)?;
    let mut orders = orders.to_vec();
    orders.sort_unstable();
    orders.dedup();
    let mut groups = Vec::new();
    for &n in &orders {
        groups.extend(catalog_of_order(n, kind)?);
    }
    let records = par_map(&groups, |(name, g)| classify_group(name, g.clone(), options))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let survivors = records
        .iter()
        .filter(|r| r.verdict == GroupVerdict::AllConnectedIntegral)
        .map(|r| r.group.clone())
        .collect();
    Ok(CensusReport { subset_size: options.subset_size, orders, kind, groups: records, survivors })
}

/// `None` when the survivors are exactly `expected` (as a set); otherwise a
/// description of the difference naming the first counterexample row.
pub fn survivor_diff(report: &CensusReport, expected: &[&str]) -> Option<String> {
    let mut problems = Vec::new();
    for record in &report.groups {
        let survived = record.verdict == GroupVerdict::AllConnectedIntegral;
        let wanted = expected.contains(&record.group.as_str());
        if survived == wanted {
            continue;
        }
        let detail = match (record.verdict, record.witness()) {
            (_, Some(row)) => format!(
                "{} excluded by alpha [{}], S = {}: connected={} ({}), integral={}",
                record.group, row.alpha, row.subset, row.connected, row.branch, row.integral
            ),
            (GroupVerdict::NoCubicGCS, _) => format!("{} admits no subset of size {}", record.group, report.subset_size),
            _ => format!("{} survived unexpectedly", record.group),
        };
        problems.push(detail);
    }
    for name in expected {
        if !report.groups.iter().any(|r| r.group == *name) {
            problems.push(format!("{name} is not in the catalog"));
        }
    }
    (!problems.is_empty()).then(|| problems.join("; "))
}

/// One abelian group in the Cayley sum census.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SumRecord {
    pub group: String,
    pub order: usize,
    /// Square-free subsets of the requested size.
    pub subsets: usize,
    pub disconnected: usize,
    pub non_integral: usize,
    /// First subset whose graph is disconnected or non-integral.
    pub first_failure: Option<String>,
}

impl SumRecord {
    pub fn passes(&self) -> bool {
        self.subsets > 0 && self.disconnected == 0 && self.non_integral == 0
    }

    pub fn all_integral(&self) -> bool {
        self.subsets > 0 && self.non_integral == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SumCensusReport {
    pub subset_size: usize,
    pub groups: Vec<SumRecord>,
    /// Groups whose sum graphs are all connected and integral.
    pub survivors: Vec<String>,
    /// Groups whose sum graphs are all integral, connectivity ignored.
    pub integral_only: Vec<String>,
}

fn k_subsets(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(pool: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..pool.len() {
            if pool.len() - i < k - cur.len() {
                break;
            }
            cur.push(pool[i]);
            go(pool, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(pool, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Checks every Cayley sum graph `Cay⁺(G, S)` with `S` square-free of size
/// `k`, over the abelian catalog groups of the given orders.
pub fn cayley_sum_census(orders: &[usize], k: usize) -> Result<SumCensusReport> {
    check_orders(orders)?;
    let mut orders = orders.to_vec();
    orders.sort_unstable();
    orders.dedup();
    let mut groups = Vec::new();
    for &n in &orders {
        groups.extend(catalog_of_order(n, Kind::Abelian)?);
    }
    let records = par_map(&groups, |(name, g)| -> Result<SumRecord> {
        let pool: Vec<usize> = g.squares().complement().to_vec();
        let mut record =
            SumRecord { group: name.clone(), order: g.order(), subsets: 0, disconnected: 0, non_integral: 0, first_failure: None };
        for members in k_subsets(&pool, k) {
            let s = ElementSet::from_indices(g.order(), members);
            let graph = build_cayley_sum_graph(g, &s)?;
            let connected = graph.is_connected();
            let integral = integral_spectrum(&graph)?.integral;
            record.subsets += 1;
            record.disconnected += usize::from(!connected);
            record.non_integral += usize::from(!integral);
            if (!connected || !integral) && record.first_failure.is_none() {
                record.first_failure =
                    Some(format!("{}: connected={connected}, integral={integral}", g.format_set(&s)));
            }
        }
        Ok(record)
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let pick = |f: fn(&SumRecord) -> bool| records.iter().filter(|r| f(r)).map(|r| r.group.clone()).collect();
    Ok(SumCensusReport {
        subset_size: k,
        survivors: pick(SumRecord::passes),
        integral_only: pick(SumRecord::all_integral),
        groups: records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build_str;

    fn classify(name: &str) -> GroupRecord {
        classify_group(name, build_str(name).unwrap(), &CensusOptions::default()).unwrap()
    }

    #[test]
    fn z6_and_z8_pass() {
        for name in ["Z6", "Z8"] {
            assert_eq!(classify(name).verdict, GroupVerdict::AllConnectedIntegral, "{name}");
        }
    }

    #[test]
    fn z4_and_z2_squared_have_no_cubic_subsets() {
        assert_eq!(classify("Z4").verdict, GroupVerdict::NoCubicGCS);
        assert_eq!(classify("Z2^2").verdict, GroupVerdict::NoCubicGCS);
        let with_id = CensusOptions { include_identity_alpha: true, ..Default::default() };
        let r = classify_group("Z2^2", build_str("Z2^2").unwrap(), &with_id).unwrap();
        assert_eq!(r.verdict, GroupVerdict::AllConnectedIntegral);
    }

    #[test]
    fn d10_excluded_by_non_integral_graph() {
        let r = classify("D10");
        let w = r.witness().unwrap();
        assert!(w.connected && !w.integral);
        assert!(r.rows.iter().any(|row| row.subset == "{b, ab, a^4b}" && !row.integral));
    }

    #[test]
    fn reduction_matches_full_enumeration() {
        for name in ["D8", "Q8", "Z2^3", "D12"] {
            let g = build_str(name).unwrap();
            let reduced = classify_group(name, g.clone(), &CensusOptions::default()).unwrap();
            let full = classify_group(name, g, &CensusOptions { use_conjugacy_reduction: false, ..Default::default() }).unwrap();
            let kind = |v: GroupVerdict| std::mem::discriminant(&v);
            assert_eq!(kind(reduced.verdict), kind(full.verdict), "{name}");
            for (i, class) in full.classes.iter().enumerate() {
                let per_class = |r: &GroupRecord| r.rows.iter().filter(|row| row.alpha_class == i).count();
                assert_eq!(per_class(&full), class.size * per_class(&reduced), "{name} class {i}");
            }
        }
    }

    #[test]
    fn empty_order_set_gives_empty_report() {
        let r = run_census(&[], Kind::All, &CensusOptions::default()).unwrap();
        assert!(r.groups.is_empty() && r.survivors.is_empty());
        assert!(run_census(&[7], Kind::All, &CensusOptions::default()).is_err());
    }

    #[test]
    fn small_sum_census() {
        let r = cayley_sum_census(&[4], 3).unwrap();
        let z4 = r.groups.iter().find(|g| g.group == "Z4").unwrap();
        assert_eq!(z4.subsets, 0);
        let v4 = r.groups.iter().find(|g| g.group == "Z2^2").unwrap();
        assert_eq!(v4.subsets, 1);
        assert_eq!(r.survivors, vec!["Z2^2".to_string()]);
    }
}
