#![allow(dead_code)]

use std::sync::Arc;

use gencay_core::gcs::{alpha_partition, validate_gcs, GCSubset};
use gencay_core::{ElementSet, FiniteGroup, GroupMap};
use rand::Rng;

/// Catalog groups of order at most 16 (the catalog stops at 12 there).
pub fn small_catalog() -> Vec<(String, FiniteGroup)> {
    use gencay_core::catalog::{catalog_of_order, Kind, CATALOG_ORDERS};
    CATALOG_ORDERS
        .iter()
        .filter(|&&n| n <= 16)
        .flat_map(|&n| catalog_of_order(n, Kind::All).unwrap())
        .collect()
}

/// Ω singles and ℧ pairs: any union of blocks is a valid subset.
pub fn blocks(g: &FiniteGroup, alpha: &GroupMap) -> Vec<Vec<usize>> {
    let part = alpha_partition(g, alpha).unwrap();
    let mut out: Vec<Vec<usize>> = part.big_omega.iter().map(|x| vec![x]).collect();
    for x in part.mho.iter() {
        let y = alpha.apply(g.inv(x));
        if x < y {
            out.push(vec![x, y]);
        }
    }
    out
}

/// A uniformly random non-empty union of blocks, or `None` if α has none.
pub fn random_subset(rng: &mut impl Rng, g: &Arc<FiniteGroup>, alpha: &GroupMap) -> Option<GCSubset> {
    let b = blocks(g, alpha);
    if b.is_empty() {
        return None;
    }
    loop {
        let mut s = ElementSet::new(g.order());
        for block in &b {
            if rng.gen_bool(0.5) {
                for &x in block {
                    s.insert(x);
                }
            }
        }
        if !s.is_empty() {
            return Some(validate_gcs(g, alpha, &s).expect("unions of blocks are valid"));
        }
    }
}
