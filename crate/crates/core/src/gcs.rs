//! Generalized Cayley subsets: the α-partition of a group, validation,
//! enumeration, the translation stabilizer and transport by automorphisms.

use std::sync::Arc;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::group::{ElementSet, FiniteGroup, GroupMap};

/// `α(x⁻¹)x`.
pub fn omega_of(g: &FiniteGroup, alpha: &GroupMap, x: usize) -> usize {
    g.mul(alpha.apply(g.inv(x)), x)
}

/// The partition `G = ω ⊎ Ω ⊎ ℧` induced by an involutory automorphism:
/// `ω = {α(g⁻¹)g}`, `Ω` the other elements with `α(g) = g⁻¹`, and `℧` the
/// elements with `α(g) ≠ g⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaPartition {
    pub omega: ElementSet,
    pub big_omega: ElementSet,
    pub mho: ElementSet,
}

pub fn alpha_partition(g: &FiniteGroup, alpha: &GroupMap) -> Result<AlphaPartition> {
    if !alpha.is_involutory() {
        return Err(Error::NotInvolutory);
    }
    let n = g.order();
    let omega = ElementSet::from_indices(n, (0..n).map(|x| omega_of(g, alpha, x)));
    let inverted = ElementSet::from_indices(n, (0..n).filter(|&x| alpha.apply(x) == g.inv(x)));
    Ok(AlphaPartition { big_omega: inverted.difference(&omega), mho: inverted.complement(), omega })
}

/// A subset `S` satisfying `S ∩ ω = ∅` and `α(S⁻¹) = S`, bound to its group
/// and automorphism.
#[derive(Clone)]
pub struct GCSubset {
    group: Arc<FiniteGroup>,
    alpha: GroupMap,
    members: ElementSet,
}

impl std::fmt::Debug for GCSubset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GCSubset({} | {} | {})", self.group.name(), self.alpha.describe(&self.group), self.format())
    }
}

impl PartialEq for GCSubset {
    fn eq(&self, other: &Self) -> bool {
        *self.group == *other.group && self.alpha == other.alpha && self.members == other.members
    }
}

impl GCSubset {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn alpha(&self) -> &GroupMap {
        &self.alpha
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn names(&self) -> Vec<String> {
        self.group.set_names(&self.members)
    }

    /// `{s1, s2, ...}` in index order.
    pub fn format(&self) -> String {
        self.group.format_set(&self.members)
    }
}

impl Serialize for GCSubset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("GCSubset", 4)?;
        st.serialize_field("group", self.group.name())?;
        st.serialize_field("alpha", &self.alpha.describe(&self.group))?;
        st.serialize_field("alpha_image", self.alpha.image())?;
        st.serialize_field("members", &self.names())?;
        st.end()
    }
}

/// Consequences of validity: an odd-size subset meets Ω, and members in ℧
/// come paired with `α(s⁻¹)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetFacts {
    pub meets_big_omega: bool,
    pub mho_pairs: Vec<(usize, usize)>,
}

pub fn subset_facts(s: &GCSubset) -> SubsetFacts {
    let (g, alpha) = (s.group(), s.alpha());
    let part = alpha_partition(g, alpha).expect("validated subsets carry an involution");
    let mho_pairs = s
        .members
        .intersection(&part.mho)
        .iter()
        .map(|x| (x, alpha.apply(g.inv(x))))
        .filter(|(x, y)| x < y)
        .collect();
    SubsetFacts { meets_big_omega: !s.members.is_disjoint(&part.big_omega), mho_pairs }
}

/// Checks the subset conditions and binds `S` to `(G, α)`.
pub fn validate_gcs(g: &Arc<FiniteGroup>, alpha: &GroupMap, s: &ElementSet) -> Result<GCSubset> {
    if !alpha.is_involutory() {
        return Err(Error::NotInvolutory);
    }
    for x in 0..g.order() {
        let w = omega_of(g, alpha, x);
        if s.contains(w) {
            return Err(Error::MeetsOmega(g.element_name(w).to_string()));
        }
    }
    for x in s.iter() {
        if !s.contains(alpha.apply(g.inv(x))) {
            return Err(Error::NotAlphaSymmetric(g.element_name(x).to_string()));
        }
    }
    let out = GCSubset { group: Arc::clone(g), alpha: alpha.clone(), members: s.clone() };
    debug_assert!(s.len() % 2 == 0 || subset_facts(&out).meets_big_omega);
    Ok(out)
}

/// Every valid subset of size `k`, sorted by member index list. Ω elements
/// are chosen singly and ℧ elements in pairs `{s, α(s⁻¹)}`, so both
/// conditions hold by construction.
pub fn enumerate_gcs(g: &Arc<FiniteGroup>, alpha: &GroupMap, k: usize) -> Result<Vec<GCSubset>> {
    let part = alpha_partition(g, alpha)?;
    let mut blocks: Vec<Vec<usize>> = part.big_omega.iter().map(|x| vec![x]).collect();
    for x in part.mho.iter() {
        let y = alpha.apply(g.inv(x));
        if x < y {
            blocks.push(vec![x, y]);
        }
    }
    let mut found = Vec::new();
    let mut chosen = g.empty_set();
    fn search(
        blocks: &[Vec<usize>],
        start: usize,
        remaining: usize,
        chosen: &mut ElementSet,
        found: &mut Vec<ElementSet>,
    ) {
        if remaining == 0 {
            found.push(chosen.clone());
            return;
        }
        for i in start..blocks.len() {
            if blocks[i].len() > remaining {
                continue;
            }
            for &x in &blocks[i] {
                chosen.insert(x);
            }
            search(blocks, i + 1, remaining - blocks[i].len(), chosen, found);
            for &x in &blocks[i] {
                chosen.remove(x);
            }
        }
    }
    if k == 0 {
        return Ok(Vec::new());
    }
    search(&blocks, 0, k, &mut chosen, &mut found);
    found.sort_by_cached_key(|s| s.to_vec());
    found.dedup();
    Ok(found
        .into_iter()
        .map(|members| GCSubset { group: Arc::clone(g), alpha: alpha.clone(), members })
        .collect())
}

/// `G_α(S) = {g : α(g) S g⁻¹ = S}`, the elements whose right translations
/// preserve the graph. Defined for abelian groups only.
pub fn stabilizer_set(s: &GCSubset) -> Result<ElementSet> {
    let g = s.group();
    if !g.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let n = g.order();
    Ok(ElementSet::from_indices(
        n,
        (0..n).filter(|&x| {
            let shift = g.mul(s.alpha.apply(x), g.inv(x));
            g.left_translate(shift, &s.members) == s.members
        }),
    ))
}

/// Transports `(S, α)` to `(β(S), βαβ⁻¹)`.
pub fn conjugate_gcs(s: &GCSubset, beta: &GroupMap) -> Result<GCSubset> {
    let alpha = s.alpha.conjugate_by(beta);
    validate_gcs(&s.group, &alpha, &beta.apply_set(&s.members))
        .map_err(|e| Error::Inconsistent(format!("conjugation broke validity: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build_str;
    use crate::notation::{parse_alpha, parse_element_set};

    fn setup(group: &str, alpha: &str) -> (Arc<FiniteGroup>, GroupMap) {
        let g = Arc::new(build_str(group).unwrap());
        let a = parse_alpha(&g, alpha).unwrap();
        (g, a)
    }

    #[test]
    fn d8_first_involution_partition() {
        let (g, a) = setup("D8", "a->a, b->a^2b");
        let p = alpha_partition(&g, &a).unwrap();
        assert_eq!(g.format_set(&p.omega), "{e, a^2}");
        assert!(p.big_omega.is_empty());
    }

    #[test]
    fn q8_partition() {
        let (g, a) = setup("Q8", "a->a^-1, b->b");
        let p = alpha_partition(&g, &a).unwrap();
        assert_eq!(g.format_set(&p.omega), "{e, a^2}");
        assert_eq!(g.format_set(&p.big_omega), "{a, a^3, ab, a^3b}");
        assert_eq!(g.format_set(&p.mho), "{b, a^2b}");
    }

    #[test]
    fn z2_cubed_partition_and_subsets() {
        let (g, a) = setup("Z2^3", "(1,0,0)->(1,0,0), (0,1,0)->(0,1,0), (0,0,1)->(0,1,1)");
        let p = alpha_partition(&g, &a).unwrap();
        assert_eq!(g.format_set(&p.omega), "{(0,0,0), (0,1,0)}");
        assert_eq!(g.format_set(&p.big_omega), "{(1,0,0), (1,1,0)}");
        let subsets = enumerate_gcs(&g, &a, 3).unwrap();
        assert_eq!(subsets.len(), 4);
        let s1 = parse_element_set(&g, "(1,0,0),(0,0,1),(0,1,1)").unwrap();
        assert!(subsets.iter().any(|s| *s.members() == s1));
    }

    #[test]
    fn identity_is_never_allowed() {
        let (g, a) = setup("Z14", "inv");
        let e = parse_element_set(&g, "e").unwrap();
        assert!(matches!(validate_gcs(&g, &a, &e), Err(Error::MeetsOmega(_))));
        let s = parse_element_set(&g, "g,g^3,g^5").unwrap();
        let s = validate_gcs(&g, &a, &s).unwrap();
        assert!(subset_facts(&s).meets_big_omega);
        assert!(stabilizer_set(&s).unwrap().contains(0));
    }

    #[test]
    fn asymmetric_subset_is_rejected() {
        let (g, a) = setup("D8", "a->a^-1, b->b");
        let s = parse_element_set(&g, "ab").unwrap();
        assert!(matches!(validate_gcs(&g, &a, &s), Err(Error::NotAlphaSymmetric(_))));
        let s = parse_element_set(&g, "ab, a^3b").unwrap();
        assert_eq!(subset_facts(&validate_gcs(&g, &a, &s).unwrap()).mho_pairs, vec![(5, 7)]);
    }

    #[test]
    fn non_involution_rejected() {
        let g = Arc::new(build_str("Z5").unwrap());
        let a = parse_alpha(&g, "g->g^2").unwrap();
        assert_eq!(alpha_partition(&g, &a).unwrap_err(), Error::NotInvolutory);
    }

    #[test]
    fn conjugation_by_identity_and_alpha() {
        let (g, a) = setup("Z2^2 x Z6", "inv");
        for s in enumerate_gcs(&g, &a, 3).unwrap() {
            assert_eq!(conjugate_gcs(&s, &GroupMap::identity(g.order())).unwrap(), s);
            // α(S⁻¹) = S means transporting by α itself lands on S⁻¹.
            let t = conjugate_gcs(&s, &a).unwrap();
            assert_eq!(t.alpha(), &a);
            assert_eq!(*t.members(), g.set_inverse(s.members()));
        }
    }
}
