//! Backtracking graph isomorphism for small graphs.
//!
//! Vertices of both graphs are first coloured by joint colour refinement
//! (degree, loop flag, then multisets of neighbour colours until stable).
//! The search maps vertices of the first graph in BFS order, trying only
//! same-coloured targets that agree on adjacency with everything mapped so
//! far.

use std::collections::{BTreeMap, VecDeque};

use super::SimpleGraph;
use crate::error::{Error, Result};

pub const ISOMORPHISM_SIZE_LIMIT: usize = 32;

/// Stable colouring of the disjoint union of `x` and `y`. Vertex `v` of `y`
/// is `x.n() + v`.
fn refine(x: &SimpleGraph, y: &SimpleGraph) -> Vec<usize> {
    let graphs = [x, y];
    let locate = |u: usize| if u < x.n() { (0, u) } else { (1, u - x.n()) };
    let total = x.n() + y.n();
    let mut colour: Vec<usize> = (0..total)
        .map(|u| {
            let (k, v) = locate(u);
            graphs[k].degree(v) * 2 + usize::from(graphs[k].has_edge(v, v))
        })
        .collect();
    let mut classes = usize::MAX;
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..total)
            .map(|u| {
                let (k, v) = locate(u);
                let offset = if k == 0 { 0 } else { x.n() };
                let mut around: Vec<usize> = graphs[k].neighbors(v).map(|w| colour[w + offset]).collect();
                around.sort_unstable();
                (colour[u], around)
            })
            .collect();
        let mut ids = BTreeMap::new();
        for sig in &signatures {
            let next = ids.len();
            ids.entry(sig.clone()).or_insert(next);
        }
        // Renumber in signature order so the colouring is canonical.
        let ranks: BTreeMap<_, usize> = ids.keys().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        colour = signatures.iter().map(|s| ranks[s]).collect();
        if ranks.len() == classes {
            return colour;
        }
        classes = ranks.len();
    }
}

/// Checks that `map` is a bijection carrying edges onto edges and
/// non-edges onto non-edges.
pub fn is_isomorphism(x: &SimpleGraph, y: &SimpleGraph, map: &[usize]) -> bool {
    if x.n() != y.n() || map.len() != x.n() {
        return false;
    }
    let mut hit = vec![false; y.n()];
    for &v in map {
        if v >= y.n() || std::mem::replace(&mut hit[v], true) {
            return false;
        }
    }
    (0..x.n()).all(|u| (0..x.n()).all(|v| x.has_edge(u, v) == y.has_edge(map[u], map[v])))
}

/// An explicit isomorphism `x -> y` (as `map[v]` for each vertex of `x`), or
/// `None` when the graphs are not isomorphic.
pub fn are_isomorphic(x: &SimpleGraph, y: &SimpleGraph) -> Result<Option<Vec<usize>>> {
    for g in [x, y] {
        if g.n() > ISOMORPHISM_SIZE_LIMIT {
            return Err(Error::SizeLimitExceeded { n: g.n(), limit: ISOMORPHISM_SIZE_LIMIT });
        }
    }
    if x.n() != y.n() || x.edge_count() != y.edge_count() {
        return Ok(None);
    }
    let n = x.n();
    let colour = refine(x, y);
    let (cx, cy) = colour.split_at(n);
    let mut hx = cx.to_vec();
    let mut hy = cy.to_vec();
    hx.sort_unstable();
    hy.sort_unstable();
    if hx != hy {
        return Ok(None);
    }

    // BFS order over x, so each new vertex usually has a mapped neighbour.
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for w in x.neighbors(v) {
                if !std::mem::replace(&mut seen[w], true) {
                    queue.push_back(w);
                }
            }
        }
    }

    struct Search<'a> {
        x: &'a SimpleGraph,
        y: &'a SimpleGraph,
        cx: &'a [usize],
        cy: &'a [usize],
        order: Vec<usize>,
        map: Vec<usize>,
        used: Vec<bool>,
    }

    impl Search<'_> {
        fn run(&mut self, depth: usize) -> bool {
            if depth == self.order.len() {
                return true;
            }
            let v = self.order[depth];
            for t in 0..self.y.n() {
                if self.used[t] || self.cx[v] != self.cy[t] {
                    continue;
                }
                let consistent = self.order[..depth]
                    .iter()
                    .all(|&u| self.x.has_edge(u, v) == self.y.has_edge(self.map[u], t))
                    && self.x.has_edge(v, v) == self.y.has_edge(t, t);
                if !consistent {
                    continue;
                }
                self.map[v] = t;
                self.used[t] = true;
                if self.run(depth + 1) {
                    return true;
                }
                self.used[t] = false;
            }
            false
        }
    }

    let mut search = Search { x, y, cx, cy, order, map: vec![usize::MAX; n], used: vec![false; n] };
    if !search.run(0) {
        return Ok(None);
    }
    if !is_isomorphism(x, y, &search.map) {
        return Err(Error::Inconsistent("isomorphism search returned an invalid map".into()));
    }
    Ok(Some(search.map))
}
