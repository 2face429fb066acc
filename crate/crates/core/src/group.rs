//! Finite groups as explicit multiplication tables.
//!
//! Elements are indices `0..order`, with the identity always at index 0.
//! Subsets of a group are [`ElementSet`] bit-sets and automorphisms are
//! [`GroupMap`] image arrays.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// How element names of a group should be read back by the element parser.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Notation {
    /// Names are words in the named generators (`a^2b`).
    Words,
    /// Cyclic group; names are the integers `0..n` and `g` generates.
    Cyclic,
    /// Permutations of `1..=degree` written in cycle notation.
    Permutation { degree: usize },
    /// 2x2 matrices written `[[a,b],[c,d]]`, generators `A`, `B`.
    Matrix,
    /// Direct product; names are tuples over the flattened factors.
    Product,
}

/// A finite group stored as its full multiplication table.
#[derive(Clone)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<usize>,
    inverses: Vec<usize>,
    names: Vec<String>,
    generators: Vec<(String, usize)>,
    components: Vec<FiniteGroup>,
    notation: Notation,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish()
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table && self.names == other.names
    }
}

impl Eq for FiniteGroup {}

/// Checks every group axiom on `table` and returns the validated group.
///
/// Index 0 must be the identity. Errors name the first violation found.
pub fn validate_group(table: Vec<Vec<usize>>, names: Vec<String>) -> Result<FiniteGroup> {
    let n = table.len();
    if n == 0 || names.len() != n || table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
        return Err(Error::MalformedTable);
    }
    for i in 0..n {
        if table[0][i] != i {
            return Err(Error::NoIdentity(format!("row 0 maps {i} to {}", table[0][i])));
        }
        if table[i][0] != i {
            return Err(Error::NoIdentity(format!("column 0 maps {i} to {}", table[i][0])));
        }
    }
    let mut seen = vec![false; n];
    for (i, row) in table.iter().enumerate() {
        seen.iter_mut().for_each(|s| *s = false);
        for &x in row {
            if seen[x] {
                return Err(Error::NotLatinSquare(format!("row {i} repeats {x}")));
            }
            seen[x] = true;
        }
    }
    for j in 0..n {
        seen.iter_mut().for_each(|s| *s = false);
        for row in &table {
            if seen[row[j]] {
                return Err(Error::NotLatinSquare(format!("column {j} repeats {}", row[j])));
            }
            seen[row[j]] = true;
        }
    }
    let mut inverses = vec![usize::MAX; n];
    for i in 0..n {
        let inv = (0..n).find(|&j| table[i][j] == 0 && table[j][i] == 0);
        match inv {
            Some(j) => inverses[i] = j,
            None => return Err(Error::NoInverse(i)),
        }
    }
    for i in 0..n {
        for j in 0..n {
            let ij = table[i][j];
            for k in 0..n {
                if table[ij][k] != table[i][table[j][k]] {
                    return Err(Error::NotAssociative(i, j, k));
                }
            }
        }
    }
    let flat = table.into_iter().flatten().collect();
    Ok(FiniteGroup {
        name: format!("G{n}"),
        order: n,
        table: flat,
        inverses,
        names,
        generators: Vec::new(),
        components: Vec::new(),
        notation: Notation::Words,
    })
}

impl FiniteGroup {
    /// Builds a group from a table already known to satisfy the axioms.
    pub(crate) fn from_trusted(table: Vec<usize>, names: Vec<String>) -> Self {
        let order = names.len();
        debug_assert_eq!(table.len(), order * order);
        let mut inverses = vec![0; order];
        for i in 0..order {
            inverses[i] = (0..order).find(|&j| table[i * order + j] == 0).expect("latin square");
        }
        FiniteGroup {
            name: format!("G{order}"),
            order,
            table,
            inverses,
            names,
            generators: Vec::new(),
            components: Vec::new(),
            notation: Notation::Words,
        }
    }

    pub(crate) fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub(crate) fn with_generators(mut self, generators: Vec<(String, usize)>) -> Self {
        self.generators = generators;
        self
    }

    pub(crate) fn with_notation(mut self, notation: Notation) -> Self {
        self.notation = notation;
        self
    }

    /// The cyclic group of order `n` with elements named `0..n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let table = (0..n * n).map(|k| (k / n + k % n) % n).collect();
        let names = (0..n).map(|i| i.to_string()).collect();
        let gens = if n > 1 { vec![("g".to_string(), 1)] } else { Vec::new() };
        Self::from_trusted(table, names)
            .with_name(format!("Z{n}"))
            .with_generators(gens)
            .with_notation(Notation::Cyclic)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element_name(&self, g: usize) -> &str {
        &self.names[g]
    }

    /// Named generators used by the word parser (may be empty).
    pub fn generators(&self) -> &[(String, usize)] {
        &self.generators
    }

    /// Flattened direct factors; empty unless this group is a direct product.
    pub fn components(&self) -> &[FiniteGroup] {
        &self.components
    }

    pub fn notation(&self) -> Notation {
        self.notation
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `a^k` for any integer `k`.
    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        let mut acc = 0;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Row `i` of the table as a vector, for display and validation.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.order)
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::new(self.order)
    }

    /// The subgroup generated by `t`: breadth-first closure from `e` under
    /// right multiplication by members of `t`.
    pub fn generated_subgroup(&self, t: &ElementSet) -> ElementSet {
        let gens: Vec<usize> = t.iter().collect();
        let mut out = ElementSet::new(self.order);
        out.insert(0);
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let y = self.mul(x, g);
                if out.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        out
    }

    pub fn set_product(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        let mut out = ElementSet::new(self.order);
        for x in a.iter() {
            for y in b.iter() {
                out.insert(self.mul(x, y));
            }
        }
        out
    }

    pub fn set_inverse(&self, a: &ElementSet) -> ElementSet {
        ElementSet::from_indices(self.order, a.iter().map(|x| self.inv(x)))
    }

    /// Image of a set under right multiplication by `g`.
    pub fn right_translate(&self, a: &ElementSet, g: usize) -> ElementSet {
        ElementSet::from_indices(self.order, a.iter().map(|x| self.mul(x, g)))
    }

    /// Image of a set under left multiplication by `g`.
    pub fn left_translate(&self, g: usize, a: &ElementSet) -> ElementSet {
        ElementSet::from_indices(self.order, a.iter().map(|x| self.mul(g, x)))
    }

    pub fn is_subgroup(&self, h: &ElementSet) -> bool {
        h.contains(0) && h.iter().all(|x| h.iter().all(|y| h.contains(self.mul(x, self.inv(y)))))
    }

    /// The right coset `Hg`; `h` must be a subgroup.
    pub fn right_coset(&self, h: &ElementSet, g: usize) -> Result<ElementSet> {
        if !self.is_subgroup(h) {
            return Err(Error::NotASubgroup);
        }
        Ok(self.right_translate(h, g))
    }

    pub fn subgroup_index(&self, h: &ElementSet) -> Result<usize> {
        if !self.is_subgroup(h) {
            return Err(Error::NotASubgroup);
        }
        Ok(self.order / h.len())
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_elementary_abelian_2(&self) -> bool {
        self.is_abelian() && (0..self.order).all(|a| self.mul(a, a) == 0)
    }

    /// `{g^2 : g in G}`.
    pub fn squares(&self) -> ElementSet {
        ElementSet::from_indices(self.order, (0..self.order).map(|g| self.mul(g, g)))
    }

    pub fn center(&self) -> ElementSet {
        ElementSet::from_indices(
            self.order,
            (0..self.order).filter(|&a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a))),
        )
    }

    /// Histogram of element orders, indexed by order.
    pub fn order_histogram(&self) -> Vec<usize> {
        let mut hist = vec![0; self.order + 1];
        for g in 0..self.order {
            hist[self.element_order(g)] += 1;
        }
        hist
    }

    /// Display names of a set, ascending by index.
    pub fn set_names(&self, a: &ElementSet) -> Vec<String> {
        a.iter().map(|x| self.names[x].clone()).collect()
    }

    /// `{a, b, ...}` with names in index order.
    pub fn format_set(&self, a: &ElementSet) -> String {
        format!("{{{}}}", self.set_names(a).join(", "))
    }
}

/// Componentwise product; element `(i, j)` has index `i * |H| + j`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let (m, k) = (g.order, h.order);
    let n = m * k;
    let mut table = vec![0; n * n];
    for a in 0..n {
        let (a1, a2) = (a / k, a % k);
        for b in 0..n {
            let (b1, b2) = (b / k, b % k);
            table[a * n + b] = g.mul(a1, b1) * k + h.mul(a2, b2);
        }
    }
    let inner = |f: &FiniteGroup, i: usize| -> String {
        let name = &f.names[i];
        if f.notation == Notation::Product {
            name[1..name.len() - 1].to_string()
        } else {
            name.clone()
        }
    };
    let names = (0..n).map(|a| format!("({},{})", inner(g, a / k), inner(h, a % k))).collect();
    let flatten = |f: &FiniteGroup| -> Vec<FiniteGroup> {
        if f.notation == Notation::Product {
            f.components.clone()
        } else {
            vec![f.clone()]
        }
    };
    let mut components = flatten(g);
    components.extend(flatten(h));
    let mut out = FiniteGroup::from_trusted(table, names)
        .with_name(format!("{} x {}", g.name, h.name))
        .with_notation(Notation::Product);
    out.components = components;
    out
}

/// A fixed-size bit-set over the element indices of one group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    n: usize,
    words: Vec<u64>,
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl ElementSet {
    pub fn new(n: usize) -> Self {
        ElementSet { n, words: vec![0; n.div_ceil(64)] }
    }

    pub fn full(n: usize) -> Self {
        Self::from_indices(n, 0..n)
    }

    pub fn from_indices(n: usize, items: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::new(n);
        for i in items {
            s.insert(i);
        }
        s
    }

    /// Size of the ambient group.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.n && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Returns true when `i` was not already present.
    pub fn insert(&mut self, i: usize) -> bool {
        assert!(i < self.n, "element {i} outside group of order {}", self.n);
        let fresh = !self.contains(i);
        self.words[i / 64] |= 1 << (i % 64);
        fresh
    }

    pub fn remove(&mut self, i: usize) -> bool {
        let had = self.contains(i);
        if had {
            self.words[i / 64] &= !(1 << (i % 64));
        }
        had
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&i| self.contains(i))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(self.n, other.n, "element sets from different groups");
        let words = self.words.iter().zip(&other.words).map(|(&a, &b)| f(a, b)).collect();
        ElementSet { n: self.n, words }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Self {
        Self::full(self.n).difference(self)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.difference(other).is_empty()
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.intersection(other).is_empty()
    }
}

/// A map `G -> G` stored as an image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupMap {
    image: Vec<usize>,
}

impl GroupMap {
    pub fn identity(n: usize) -> Self {
        GroupMap { image: (0..n).collect() }
    }

    /// Wraps an image array after checking it is an automorphism of `g`.
    pub fn automorphism(g: &FiniteGroup, image: Vec<usize>) -> Result<Self> {
        let n = g.order();
        if image.len() != n {
            return Err(Error::NotAnAutomorphism("image has wrong length".into()));
        }
        if image[0] != 0 {
            return Err(Error::NotAnAutomorphism("identity is not fixed".into()));
        }
        let set = ElementSet::from_indices(n, image.iter().copied().filter(|&x| x < n));
        if set.len() != n {
            return Err(Error::NotAnAutomorphism("image is not a permutation".into()));
        }
        for i in 0..n {
            for j in 0..n {
                if image[g.mul(i, j)] != g.mul(image[i], image[j]) {
                    return Err(Error::NotAnAutomorphism(format!(
                        "not a homomorphism at ({}, {})",
                        g.element_name(i),
                        g.element_name(j)
                    )));
                }
            }
        }
        Ok(GroupMap { image })
    }

    /// Inverse map `g -> g^-1`; an automorphism only for abelian groups.
    pub fn inversion(g: &FiniteGroup) -> Result<Self> {
        Self::automorphism(g, (0..g.order()).map(|x| g.inv(x)).collect())
    }

    /// Inner automorphism `x -> c x c^-1`.
    pub fn conjugation(g: &FiniteGroup, c: usize) -> Self {
        let ci = g.inv(c);
        GroupMap { image: (0..g.order()).map(|x| g.mul(g.mul(c, x), ci)).collect() }
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn apply_set(&self, s: &ElementSet) -> ElementSet {
        ElementSet::from_indices(s.universe(), s.iter().map(|x| self.image[x]))
    }

    /// `self ∘ other`, i.e. `x -> self(other(x))`.
    pub fn compose(&self, other: &GroupMap) -> GroupMap {
        GroupMap { image: other.image.iter().map(|&x| self.image[x]).collect() }
    }

    pub fn inverse(&self) -> GroupMap {
        let mut image = vec![0; self.image.len()];
        for (i, &x) in self.image.iter().enumerate() {
            image[x] = i;
        }
        GroupMap { image }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn is_involutory(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| self.image[x] == i)
    }

    /// `β α β^-1`.
    pub fn conjugate_by(&self, beta: &GroupMap) -> GroupMap {
        beta.compose(self).compose(&beta.inverse())
    }

    /// `α1 × α2` on `G1 × G2` under the `i * |G2| + j` indexing.
    pub fn product(&self, other: &GroupMap) -> GroupMap {
        let k = other.image.len();
        let n = self.image.len() * k;
        GroupMap { image: (0..n).map(|x| self.image[x / k] * k + other.image[x % k]).collect() }
    }

    /// Images of the named generators, e.g. `a->a^3, b->ab`. Groups without
    /// named generators use their greedy generating set.
    pub fn describe(&self, g: &FiniteGroup) -> String {
        let gens: Vec<usize> = if g.generators().is_empty() {
            crate::automorphism::generating_set(g)
        } else {
            g.generators().iter().map(|(_, x)| *x).collect()
        };
        if gens.is_empty() {
            return "id".into();
        }
        gens.iter()
            .map(|&x| {
                let name = g.generators().iter().find(|(_, y)| *y == x).map_or(g.element_name(x), |(n, _)| n);
                format!("{name}->{}", g.element_name(self.image[x]))
            })
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Product set `A × B` inside `G × H`.
pub fn product_set(a: &ElementSet, b: &ElementSet) -> ElementSet {
    let k = b.universe();
    ElementSet::from_indices(a.universe() * k, a.iter().flat_map(|x| b.iter().map(move |y| x * k + y)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> FiniteGroup {
        FiniteGroup::cyclic(n)
    }

    #[test]
    fn trivial_and_order_two_tables_validate() {
        let g = validate_group(vec![vec![0]], vec!["e".into()]).unwrap();
        assert_eq!(g.order(), 1);
        let g = validate_group(vec![vec![0, 1], vec![1, 0]], vec!["e".into(), "x".into()]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.inv(1), 1);
    }

    #[test]
    fn idempotent_non_identity_is_rejected() {
        let t = vec![vec![0, 1, 2], vec![1, 1, 0], vec![2, 0, 1]];
        let err = validate_group(t, vec!["e".into(), "x".into(), "y".into()]).unwrap_err();
        assert!(matches!(err, Error::NotLatinSquare(_) | Error::NoInverse(_)), "{err:?}");
    }

    #[test]
    fn non_associative_loop_is_rejected() {
        // A Latin square with identity 0 that is not a group (order-5 loop).
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let names = (0..5).map(|i| i.to_string()).collect();
        assert!(matches!(validate_group(t, names), Err(Error::NotAssociative(..))));
    }

    #[test]
    fn missing_identity_is_rejected() {
        let t = vec![vec![1, 0], vec![0, 1]];
        assert!(matches!(validate_group(t, vec!["x".into(), "y".into()]), Err(Error::NoIdentity(_))));
    }

    #[test]
    fn generated_subgroup_of_empty_set_is_trivial() {
        let g = z(14);
        assert_eq!(g.generated_subgroup(&g.empty_set()).to_vec(), vec![0]);
        let h = g.generated_subgroup(&ElementSet::from_indices(14, [2]));
        assert_eq!(h.to_vec(), vec![0, 2, 4, 6, 8, 10, 12]);
        assert_eq!(g.subgroup_index(&h).unwrap(), 2);
    }

    #[test]
    fn set_arithmetic() {
        let g = z(6);
        let e = ElementSet::from_indices(6, [0]);
        let b = ElementSet::from_indices(6, [1, 4]);
        assert_eq!(g.set_product(&e, &b), b);
        assert_eq!(g.set_inverse(&b).to_vec(), vec![2, 5]);
        let h = ElementSet::from_indices(6, [0, 3]);
        assert_eq!(g.right_coset(&h, 1).unwrap().to_vec(), vec![1, 4]);
        assert_eq!(g.subgroup_index(&h).unwrap(), 3);
        assert_eq!(g.subgroup_index(&b), Err(Error::NotASubgroup));
        assert_eq!(g.right_coset(&b, 0), Err(Error::NotASubgroup));
    }

    #[test]
    fn direct_product_indexing_and_names() {
        let g = direct_product(&z(2), &z(3));
        assert_eq!(g.order(), 6);
        assert!(g.is_abelian());
        assert_eq!(g.element_name(4), "(1,1)");
        assert_eq!(g.order_histogram()[6], 2);
        let k = direct_product(&direct_product(&z(2), &z(2)), &z(6));
        assert_eq!(k.order(), 24);
        assert_eq!(k.element_name(2 * 6 + 2), "(1,0,2)");
        assert_eq!(k.components().len(), 3);
    }

    #[test]
    fn predicates() {
        let g = direct_product(&direct_product(&z(2), &z(2)), &z(2));
        assert!(g.is_elementary_abelian_2());
        assert_eq!(g.squares().to_vec(), vec![0]);
        assert_eq!(z(14).squares().to_vec(), vec![0, 2, 4, 6, 8, 10, 12]);
        assert!(!z(4).is_elementary_abelian_2());
    }

    #[test]
    fn group_map_algebra() {
        let g = z(8);
        let a = GroupMap::automorphism(&g, (0..8).map(|x| x * 3 % 8).collect()).unwrap();
        assert!(a.is_involutory());
        assert!(!a.is_identity());
        assert!(a.compose(&a).is_identity());
        assert_eq!(a.inverse(), a);
        assert!(GroupMap::automorphism(&g, (0..8).map(|x| x * 2 % 8).collect()).is_err());
        let p = a.product(&GroupMap::identity(2));
        assert_eq!(p.apply(1 * 2 + 1), 3 * 2 + 1);
    }
}
