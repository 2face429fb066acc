//! Automorphism groups by generator-image backtracking.
//!
//! A homomorphism out of a finite group is determined by the images of a
//! generating set, so the search only ranges over images of a small
//! generating set, pruned by element order and by checking injectivity on
//! each partial subgroup as generators are added.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::group::{ElementSet, FiniteGroup, GroupMap};

/// Search guard for the automorphism and isomorphism searches.
pub const AUTOMORPHISM_ORDER_LIMIT: usize = 64;

/// Greedy generating set: repeatedly add the largest-order element (lowest
/// index on ties) lying outside the subgroup generated so far.
pub fn generating_set(g: &FiniteGroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut closure = g.generated_subgroup(&g.empty_set());
    while closure.len() < g.order() {
        let next = (0..g.order())
            .filter(|&x| !closure.contains(x))
            .max_by_key(|&x| (g.element_order(x), std::cmp::Reverse(x)))
            .expect("closure is proper");
        gens.push(next);
        closure = g.generated_subgroup(&ElementSet::from_indices(g.order(), gens.iter().copied()));
    }
    gens
}

/// Extends `gens[i] -> images[i]` to a map on `<gens>` by breadth-first
/// search along right multiplication. Returns `None` when the assignment is
/// inconsistent or not injective. Unreached entries stay `usize::MAX`.
fn extend(src: &FiniteGroup, dst: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; src.order()];
    let mut used = vec![false; dst.order()];
    map[0] = 0;
    used[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for (&s, &t) in gens.iter().zip(images) {
            let y = src.mul(x, s);
            let fy = dst.mul(map[x], t);
            if map[y] == usize::MAX {
                if used[fy] {
                    return None;
                }
                used[fy] = true;
                map[y] = fy;
                queue.push_back(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}

/// All homomorphic bijections `src -> dst` defined on the generating set,
/// depth-first; stops after the first when `first_only`.
fn search_isomorphisms(src: &FiniteGroup, dst: &FiniteGroup, first_only: bool) -> Vec<Vec<usize>> {
    if src.order() != dst.order() {
        return Vec::new();
    }
    let gens = generating_set(src);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            let ord = src.element_order(s);
            (0..dst.order()).filter(|&t| dst.element_order(t) == ord).collect()
        })
        .collect();
    let mut found = Vec::new();
    let mut images = Vec::with_capacity(gens.len());
    fn recurse(
        src: &FiniteGroup,
        dst: &FiniteGroup,
        gens: &[usize],
        candidates: &[Vec<usize>],
        images: &mut Vec<usize>,
        found: &mut Vec<Vec<usize>>,
        first_only: bool,
    ) {
        let depth = images.len();
        for &t in &candidates[depth] {
            if first_only && !found.is_empty() {
                return;
            }
            images.push(t);
            if let Some(map) = extend(src, dst, &gens[..=depth], images) {
                if depth + 1 == gens.len() {
                    if map.iter().all(|&x| x != usize::MAX) {
                        found.push(map);
                    }
                } else {
                    recurse(src, dst, gens, candidates, images, found, first_only);
                }
            }
            images.pop();
        }
    }
    if gens.is_empty() {
        return vec![vec![0]];
    }
    recurse(src, dst, &gens, &candidates, &mut images, &mut found, first_only);
    found
}

/// Every automorphism of `g`, sorted by image array.
pub fn automorphism_group(g: &FiniteGroup) -> Result<Vec<GroupMap>> {
    if g.order() > AUTOMORPHISM_ORDER_LIMIT {
        return Err(Error::OrderLimitExceeded { order: g.order(), limit: AUTOMORPHISM_ORDER_LIMIT });
    }
    let mut auts: Vec<GroupMap> = search_isomorphisms(g, g, false)
        .into_iter()
        .map(|image| GroupMap::automorphism(g, image))
        .collect::<Result<_>>()?;
    auts.sort();
    Ok(auts)
}

/// An isomorphism `g -> h` as an image array, if one exists.
pub fn find_group_isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Result<Option<Vec<usize>>> {
    let limit = AUTOMORPHISM_ORDER_LIMIT;
    if g.order() > limit {
        return Err(Error::OrderLimitExceeded { order: g.order(), limit });
    }
    Ok(search_isomorphisms(g, h, true).into_iter().next())
}

/// All `α` with `α∘α = id`; the identity only when `include_identity`.
pub fn involutory_automorphisms(g: &FiniteGroup, include_identity: bool) -> Result<Vec<GroupMap>> {
    Ok(automorphism_group(g)?
        .into_iter()
        .filter(|a| a.is_involutory() && (include_identity || !a.is_identity()))
        .collect())
}

/// Aut(G)-conjugacy classes of the non-identity involutions. Each class is
/// sorted, so its first member is the lexicographically smallest image
/// array; classes are ordered by that representative.
pub fn involution_conjugacy_classes(g: &FiniteGroup) -> Result<Vec<Vec<GroupMap>>> {
    let auts = automorphism_group(g)?;
    let involutions: Vec<GroupMap> =
        auts.iter().filter(|a| a.is_involutory() && !a.is_identity()).cloned().collect();
    Ok(classes_under(&auts, &involutions))
}

pub(crate) fn classes_under(auts: &[GroupMap], involutions: &[GroupMap]) -> Vec<Vec<GroupMap>> {
    let mut remaining: BTreeSet<GroupMap> = involutions.iter().cloned().collect();
    let mut classes = Vec::new();
    while let Some(alpha) = remaining.pop_first() {
        let orbit: BTreeSet<GroupMap> = auts.iter().map(|beta| alpha.conjugate_by(beta)).collect();
        for member in &orbit {
            remaining.remove(member);
        }
        classes.push(orbit.into_iter().collect::<Vec<_>>());
    }
    classes.sort_by(|a, b| a[0].cmp(&b[0]));
    classes
}

/// The automorphism sending each `pairs[i].0` to `pairs[i].1`. The sources
/// must generate `g`.
pub fn automorphism_from_images(g: &FiniteGroup, pairs: &[(usize, usize)]) -> Result<GroupMap> {
    let (gens, images): (Vec<usize>, Vec<usize>) = pairs.iter().copied().unzip();
    let map = extend(g, g, &gens, &images)
        .ok_or_else(|| Error::NotAnAutomorphism("generator images are inconsistent".into()))?;
    if map.contains(&usize::MAX) {
        return Err(Error::NotAnAutomorphism("the given elements do not generate the group".into()));
    }
    GroupMap::automorphism(g, map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::direct_product;

    #[test]
    fn trivial_group_has_one_automorphism() {
        let g = FiniteGroup::cyclic(1);
        assert_eq!(automorphism_group(&g).unwrap().len(), 1);
    }

    #[test]
    fn cyclic_automorphism_counts_match_totient() {
        for (n, phi) in [(2, 1), (6, 2), (8, 4), (10, 4), (12, 4), (30, 8)] {
            assert_eq!(automorphism_group(&FiniteGroup::cyclic(n)).unwrap().len(), phi, "Z{n}");
        }
    }

    #[test]
    fn z8_has_three_nontrivial_involutions() {
        let g = FiniteGroup::cyclic(8);
        let invs = involutory_automorphisms(&g, false).unwrap();
        let mults: Vec<usize> = invs.iter().map(|a| a.apply(1)).collect();
        assert_eq!(mults, vec![3, 5, 7]);
        assert_eq!(involutory_automorphisms(&g, true).unwrap().len(), 4);
    }

    #[test]
    fn z6_has_only_inversion() {
        let g = FiniteGroup::cyclic(6);
        let invs = involutory_automorphisms(&g, false).unwrap();
        assert_eq!(invs, vec![GroupMap::inversion(&g).unwrap()]);
    }

    #[test]
    fn elementary_abelian_eight_has_gl32() {
        let z2 = FiniteGroup::cyclic(2);
        let g = direct_product(&direct_product(&z2, &z2), &z2);
        let auts = automorphism_group(&g).unwrap();
        assert_eq!(auts.len(), 168);
        let classes = involution_conjugacy_classes(&g).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].len(), 21);
    }

    #[test]
    fn images_must_generate() {
        let g = FiniteGroup::cyclic(6);
        assert!(automorphism_from_images(&g, &[(2, 4)]).is_err());
        assert!(automorphism_from_images(&g, &[(1, 2)]).is_err());
        let a = automorphism_from_images(&g, &[(1, 5)]).unwrap();
        assert_eq!(a, GroupMap::inversion(&g).unwrap());
    }

    #[test]
    fn order_limit_is_enforced() {
        let g = FiniteGroup::cyclic(65);
        assert!(matches!(automorphism_group(&g), Err(Error::OrderLimitExceeded { .. })));
    }
}
