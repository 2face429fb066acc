//! Named group constructors, the order-indexed catalog and the group
//! expression language.

mod parser;
pub mod presentation;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{direct_product, FiniteGroup, Notation};
pub use parser::parse_group_expr;
use presentation::Presentation;

/// Largest group order any constructor will build.
pub const MAX_ORDER: usize = 64;

/// Orders covered by [`catalog_of_order`].
pub const CATALOG_ORDERS: [usize; 8] = [4, 6, 8, 10, 12, 20, 24, 30];

/// Abstract syntax of a group expression. Dihedral and dicyclic groups are
/// indexed by their order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupExpr {
    Cyclic(usize),
    ElemAbelian2(usize),
    Dihedral(usize),
    Dicyclic(usize),
    Quaternion,
    Sym(usize),
    Alt(usize),
    SL23,
    F54,
    U24,
    V24,
    U30,
    Product(Box<GroupExpr>, Box<GroupExpr>),
    Power(Box<GroupExpr>, usize),
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GroupExpr::*;
        match self {
            Cyclic(n) => write!(f, "Z{n}"),
            ElemAbelian2(k) => write!(f, "Z2^{k}"),
            Dihedral(n) => write!(f, "D{n}"),
            Dicyclic(n) => write!(f, "T{n}"),
            Quaternion => f.write_str("Q8"),
            Sym(n) => write!(f, "S{n}"),
            Alt(n) => write!(f, "A{n}"),
            SL23 => f.write_str("SL23"),
            F54 => f.write_str("F54"),
            U24 => f.write_str("U24"),
            V24 => f.write_str("V24"),
            U30 => f.write_str("U30"),
            Product(l, r) => match **r {
                Product(..) => write!(f, "{l} x ({r})"),
                _ => write!(f, "{l} x {r}"),
            },
            Power(b, k) => match **b {
                Product(..) | Power(..) | ElemAbelian2(_) | Cyclic(2) => write!(f, "({b})^{k}"),
                _ => write!(f, "{b}^{k}"),
            },
        }
    }
}

fn factorial(n: usize) -> Option<usize> {
    (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k))
}

impl GroupExpr {
    /// The order of the described group, `None` on overflow.
    pub fn order(&self) -> Option<usize> {
        use GroupExpr::*;
        match self {
            Cyclic(n) | Dihedral(n) | Dicyclic(n) => Some(*n),
            ElemAbelian2(k) => 1usize.checked_shl(*k as u32).filter(|_| *k < 63),
            Quaternion => Some(8),
            Sym(n) => factorial(*n),
            Alt(n) => factorial(*n).map(|f| if *n >= 2 { f / 2 } else { f }),
            SL23 | U24 | V24 => Some(24),
            F54 => Some(20),
            U30 => Some(30),
            Product(l, r) => l.order()?.checked_mul(r.order()?),
            Power(b, k) => {
                let o = b.order()?;
                (0..*k).try_fold(1usize, |acc, _| acc.checked_mul(o))
            }
        }
    }
}

/// Builds the group described by `expr`, named by its printed form.
pub fn build(expr: &GroupExpr) -> Result<FiniteGroup> {
    let expected = expr.order().filter(|&o| o <= MAX_ORDER).ok_or_else(|| {
        Error::UnsupportedOrder(format!("{expr} has order above {MAX_ORDER}"))
    })?;
    let g = build_unchecked(expr)?;
    if g.order() != expected {
        return Err(Error::Inconsistent(format!(
            "{expr} enumerated to order {}, expected {expected}",
            g.order()
        )));
    }
    Ok(g.with_name(expr.to_string()))
}

/// Parses and builds in one step.
pub fn build_str(text: &str) -> Result<FiniteGroup> {
    build(&parse_group_expr(text)?)
}

fn present(relators: &[&str]) -> Result<FiniteGroup> {
    Presentation::new(relators).build()
}

fn build_unchecked(expr: &GroupExpr) -> Result<FiniteGroup> {
    use GroupExpr::*;
    match expr {
        Cyclic(n) => Ok(FiniteGroup::cyclic(*n)),
        ElemAbelian2(k) => {
            let z2 = FiniteGroup::cyclic(2);
            Ok((1..*k).fold(z2.clone(), |acc, _| direct_product(&acc, &z2)))
        }
        Dihedral(n) => dihedral(*n),
        Dicyclic(n) => dicyclic(*n),
        Quaternion => present(&["a^4", "a^2b^-2", "b^-1aba"]),
        Sym(n) => Ok(permutation_group(*n, false)),
        Alt(n) => Ok(permutation_group(*n, true)),
        SL23 => Ok(sl23()),
        F54 => present(&["a^5", "b^4", "b^-1aba^-2"]),
        U24 => present(&["a^8", "b^3", "a^-1bab"]),
        V24 => present(&["a^6", "b^4", "baba", "b^-1ab^-1a"]),
        U30 => present(&["a^10", "b^3", "a^-1bab"]),
        Product(l, r) => Ok(direct_product(&build(l)?, &build(r)?)),
        Power(b, k) => {
            let base = build(b)?;
            Ok((1..*k).fold(base.clone(), |acc, _| direct_product(&acc, &base)))
        }
    }
}

/// Dihedral group of the given order: `a^m = b^2 = e, bab = a^-1`.
fn dihedral(order: usize) -> Result<FiniteGroup> {
    present(&[&format!("a^{}", order / 2), "b^2", "baba"])
}

/// Dicyclic group of order `4n`: `a^2n = b^4 = e, a^n = b^2, b^-1ab = a^-1`.
fn dicyclic(order: usize) -> Result<FiniteGroup> {
    let n = order / 4;
    present(&[&format!("a^{}", 2 * n), "b^4", &format!("a^{n}b^-2"), "b^-1aba"])
}

/// Cycle notation on `1..=n` for an image array over `0..n`; `e` for the
/// identity.
pub(crate) fn permutation_name(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            out.push_str(&(x + 1).to_string());
            x = perm[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}

fn is_even(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    let mut transpositions = 0;
    for start in 0..perm.len() {
        let mut x = start;
        let mut len = 0;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        transpositions += len.max(1) - 1;
    }
    transpositions % 2 == 0
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Symmetric or alternating group on `1..=n`, composing left to right:
/// in `pq`, `p` acts first.
fn permutation_group(n: usize, even_only: bool) -> FiniteGroup {
    let elements: Vec<Vec<usize>> =
        permutations(n).into_iter().filter(|p| !even_only || is_even(p)).collect();
    let index: std::collections::HashMap<&[usize], usize> =
        elements.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let m = elements.len();
    let mut table = vec![0; m * m];
    for (i, p) in elements.iter().enumerate() {
        for (j, q) in elements.iter().enumerate() {
            let pq: Vec<usize> = p.iter().map(|&x| q[x]).collect();
            table[i * m + j] = index[pq.as_slice()];
        }
    }
    let names = elements.iter().map(|p| permutation_name(p)).collect();
    FiniteGroup::from_trusted(table, names).with_notation(Notation::Permutation { degree: n })
}

/// SL(2,3): 2x2 matrices over the field of three elements with determinant
/// one, identity first and the rest in lexicographic order of entries.
fn sl23() -> FiniteGroup {
    type M = [usize; 4];
    let mul = |x: &M, y: &M| -> M {
        [
            (x[0] * y[0] + x[1] * y[2]) % 3,
            (x[0] * y[1] + x[1] * y[3]) % 3,
            (x[2] * y[0] + x[3] * y[2]) % 3,
            (x[2] * y[1] + x[3] * y[3]) % 3,
        ]
    };
    let identity: M = [1, 0, 0, 1];
    let mut elements = vec![identity];
    for k in 0..81 {
        let m: M = [k / 27, k / 9 % 3, k / 3 % 3, k % 3];
        if m != identity && (m[0] * m[3] + 2 * m[1] * m[2]) % 3 == 1 {
            elements.push(m);
        }
    }
    let pos = |m: &M| elements.iter().position(|x| x == m).expect("closed under products");
    let n = elements.len();
    let mut table = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = pos(&mul(&elements[i], &elements[j]));
        }
    }
    let names = elements.iter().map(|m| format!("[[{},{}],[{},{}]]", m[0], m[1], m[2], m[3])).collect();
    let a = pos(&[0, 1, 2, 0]);
    let b = pos(&[1, 1, 0, 1]);
    FiniteGroup::from_trusted(table, names)
        .with_generators(vec![("A".into(), a), ("B".into(), b)])
        .with_notation(Notation::Matrix)
}

/// Which part of a catalog to list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Abelian,
    Nonabelian,
    All,
}

impl std::str::FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "abelian" => Ok(Kind::Abelian),
            "nonabelian" | "non-abelian" => Ok(Kind::Nonabelian),
            "all" => Ok(Kind::All),
            _ => Err(Error::Parse { offset: 0, expected: "abelian, nonabelian or all".into() }),
        }
    }
}

fn prime_factors(mut n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Partitions of `n` into non-increasing parts, largest-first order.
fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Abelian groups of order `n` written by invariant factors, e.g.
/// `Z2 x Z4`, `Z2^2 x Z6`; most invariant factors first.
pub fn abelian_names(n: usize) -> Vec<String> {
    let mut combos: Vec<Vec<usize>> = vec![Vec::new()];
    for (p, e) in prime_factors(n) {
        let mut next = Vec::new();
        for combo in &combos {
            for part in partitions(e, e) {
                let mut c = combo.clone();
                // Store p-power parts largest first; index k joins invariant factor k.
                let powers: Vec<usize> = part.iter().map(|&k| p.pow(k as u32)).collect();
                for (k, q) in powers.into_iter().enumerate() {
                    if k < c.len() {
                        c[k] *= q;
                    } else {
                        c.push(q);
                    }
                }
                next.push(c);
            }
        }
        combos = next;
    }
    combos
        .into_iter()
        .rev()
        .map(|mut factors| {
            factors.sort_unstable();
            let twos = factors.iter().filter(|&&f| f == 2).count();
            let mut parts = Vec::new();
            match twos {
                0 => {}
                1 => parts.push("Z2".to_string()),
                k => parts.push(format!("Z2^{k}")),
            }
            parts.extend(factors.iter().filter(|&&f| f != 2).map(|f| format!("Z{f}")));
            if parts.is_empty() {
                "Z1".into()
            } else {
                parts.join(" x ")
            }
        })
        .collect()
}

fn nonabelian_names(n: usize) -> &'static [&'static str] {
    match n {
        6 => &["D6"],
        8 => &["D8", "Q8"],
        10 => &["D10"],
        12 => &["D12", "T12", "A4"],
        20 => &["D20", "T20", "F54"],
        24 => &[
            "D12 x Z2", "T12 x Z2", "D6 x Z4", "A4 x Z2", "Q8 x Z3", "D24", "T24", "S4", "D8 x Z3", "U24",
            "V24", "SL23",
        ],
        30 => &["D30", "U30", "D10 x Z3"],
        _ => &[],
    }
}

/// Isomorphism-class representatives of order `n` (one of
/// [`CATALOG_ORDERS`]), abelian groups first.
pub fn catalog_of_order(n: usize, kind: Kind) -> Result<Vec<(String, FiniteGroup)>> {
    if !CATALOG_ORDERS.contains(&n) {
        return Err(Error::UnsupportedOrder(format!("no catalog for order {n}")));
    }
    let mut names: Vec<String> = Vec::new();
    if kind != Kind::Nonabelian {
        names.extend(abelian_names(n));
    }
    if kind != Kind::Abelian {
        names.extend(nonabelian_names(n).iter().map(|s| s.to_string()));
    }
    names
        .into_iter()
        .map(|name| {
            let g = build_str(&name)?;
            Ok((name, g))
        })
        .collect()
}
