//! Groups from two-generator presentations.
//!
//! The presentation is enumerated with a Hasse-Lange-Todd coset enumeration
//! over the trivial subgroup, which yields the regular permutation action.
//! Elements are then named by their normal form `a^i b^j`.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::notation::parse_free_word;

const UNDEF: usize = usize::MAX;
const COSET_LIMIT: usize = 1 << 20;

/// A presentation on the generators `a` and `b`.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub relators: Vec<String>,
}

struct CosetTable {
    cols: usize,
    table: Vec<Vec<usize>>,
    parent: Vec<usize>,
}

impl CosetTable {
    fn new(cols: usize) -> Self {
        CosetTable { cols, table: vec![vec![UNDEF; cols]], parent: vec![0] }
    }

    fn alive(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn define(&mut self, c: usize, x: usize) -> Result<()> {
        let d = self.table.len();
        if d >= COSET_LIMIT {
            return Err(Error::UnsupportedOrder("coset enumeration exceeded its limit".into()));
        }
        self.table.push(vec![UNDEF; self.cols]);
        self.parent.push(d);
        self.table[c][x] = d;
        self.table[d][x ^ 1] = c;
        Ok(())
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut root = c;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut x = c;
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    fn merge(&mut self, k: usize, l: usize, queue: &mut Vec<usize>) {
        let (k, l) = (self.rep(k), self.rep(l));
        if k == l {
            return;
        }
        let (lo, hi) = (k.min(l), k.max(l));
        self.parent[hi] = lo;
        queue.push(hi);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let e = queue[i];
            i += 1;
            for x in 0..self.cols {
                let f = self.table[e][x];
                if f == UNDEF {
                    continue;
                }
                self.table[f][x ^ 1] = UNDEF;
                let (e1, f1) = (self.rep(e), self.rep(f));
                if self.table[e1][x] != UNDEF {
                    let t = self.table[e1][x];
                    self.merge(f1, t, &mut queue);
                } else if self.table[f1][x ^ 1] != UNDEF {
                    let t = self.table[f1][x ^ 1];
                    self.merge(e1, t, &mut queue);
                } else {
                    self.table[e1][x] = f1;
                    self.table[f1][x ^ 1] = e1;
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: usize, word: &[usize]) -> Result<()> {
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0, word.len());
        loop {
            while i < j && self.table[f][word[i]] != UNDEF {
                f = self.table[f][word[i]];
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i && self.table[b][word[j - 1] ^ 1] != UNDEF {
                b = self.table[b][word[j - 1] ^ 1];
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            } else if j == i + 1 {
                self.table[f][word[i]] = b;
                self.table[b][word[i] ^ 1] = f;
                return Ok(());
            }
            self.define(f, word[i])?;
        }
    }
}

/// Enumerates the cosets of the trivial subgroup. Returns, for each
/// generator column (`2k` for generator `k`, `2k+1` for its inverse), the
/// permutation it induces on the compacted cosets; coset 0 is the identity.
fn enumerate(gens: usize, relators: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    let mut ct = CosetTable::new(2 * gens);
    let mut c = 0;
    while c < ct.table.len() {
        for r in relators {
            if !ct.alive(c) {
                break;
            }
            ct.scan_and_fill(c, r)?;
        }
        if ct.alive(c) {
            for x in 0..ct.cols {
                if ct.table[c][x] == UNDEF {
                    ct.define(c, x)?;
                }
            }
        }
        c += 1;
    }
    let live: Vec<usize> = (0..ct.table.len()).filter(|&c| ct.alive(c)).collect();
    let mut renumber = vec![UNDEF; ct.table.len()];
    for (k, &c) in live.iter().enumerate() {
        renumber[c] = k;
    }
    let mut actions = vec![vec![0; live.len()]; ct.cols];
    for (k, &c) in live.iter().enumerate() {
        for (x, action) in actions.iter_mut().enumerate() {
            let target = ct.rep(ct.table[c][x]);
            action[k] = renumber[target];
        }
    }
    Ok(actions)
}

fn power_name(letter: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => letter.to_string(),
        _ => format!("{letter}^{k}"),
    }
}

impl Presentation {
    pub fn new(relators: &[&str]) -> Self {
        Presentation { relators: relators.iter().map(|r| r.to_string()).collect() }
    }

    /// Builds the group, naming elements `a^i b^j` (first occurrence in
    /// `j`-major order wins) with the identity `e` at index 0.
    pub fn build(&self) -> Result<FiniteGroup> {
        let letters = ["a", "b"];
        let relators: Vec<Vec<usize>> = self
            .relators
            .iter()
            .map(|r| {
                let word = parse_free_word(r, &letters)?;
                Ok(word
                    .into_iter()
                    .flat_map(|(g, k)| {
                        let col = if k < 0 { 2 * g + 1 } else { 2 * g };
                        std::iter::repeat_n(col, k.unsigned_abs() as usize)
                    })
                    .collect())
            })
            .collect::<Result<_>>()?;
        let actions = enumerate(2, &relators)?;
        let n = actions[0].len();
        // perms[c]: right multiplication by the element of coset c.
        let mut perms: Vec<Option<Vec<usize>>> = vec![None; n];
        perms[0] = Some((0..n).collect());
        let mut queue = VecDeque::from([0]);
        while let Some(c) = queue.pop_front() {
            let pc = perms[c].clone().expect("visited");
            for action in actions.iter().step_by(2) {
                let d = action[c];
                if perms[d].is_none() {
                    perms[d] = Some(pc.iter().map(|&x| action[x]).collect());
                    queue.push_back(d);
                }
            }
        }
        let perms: Vec<Vec<usize>> = perms.into_iter().map(|p| p.expect("action is transitive")).collect();

        let walk = |start: usize, col: usize, k: usize| (0..k).fold(start, |c, _| actions[col][c]);
        let ord = |col: usize| {
            let mut k = 1;
            while walk(0, col, k) != 0 {
                k += 1;
            }
            k
        };
        let (ord_a, ord_b) = (ord(0), ord(2));
        let mut order_of_discovery = Vec::with_capacity(n);
        let mut names = vec![String::new(); n];
        let mut seen = vec![false; n];
        for j in 0..ord_b {
            for i in 0..ord_a {
                let c = walk(walk(0, 0, i), 2, j);
                if !seen[c] {
                    seen[c] = true;
                    order_of_discovery.push(c);
                    let name = format!("{}{}", power_name("a", i), power_name("b", j));
                    names[c] = if name.is_empty() { "e".to_string() } else { name };
                }
            }
        }
        if order_of_discovery.len() != n {
            return Err(Error::Inconsistent("elements are not all of the form a^i b^j".into()));
        }
        let mut index = vec![0; n];
        for (k, &c) in order_of_discovery.iter().enumerate() {
            index[c] = k;
        }
        let mut table = vec![0; n * n];
        for (x, &cx) in order_of_discovery.iter().enumerate() {
            for (y, &cy) in order_of_discovery.iter().enumerate() {
                table[x * n + y] = index[perms[cy][cx]];
            }
        }
        let ordered_names = order_of_discovery.iter().map(|&c| names[c].clone()).collect();
        let a = index[actions[0][0]];
        let b = index[actions[2][0]];
        Ok(FiniteGroup::from_trusted(table, ordered_names)
            .with_generators(vec![("a".into(), a), ("b".into(), b)]))
    }
}
