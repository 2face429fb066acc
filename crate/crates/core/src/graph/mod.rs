//! Undirected graphs on indexed vertices and the constructions over groups:
//! generalized Cayley graphs, Cayley graphs with loops, Cayley sum graphs and
//! direct (tensor) products.

mod iso;
mod spectrum;

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gcs::GCSubset;
use crate::group::{ElementSet, FiniteGroup};
pub use iso::{are_isomorphic, is_isomorphism, ISOMORPHISM_SIZE_LIMIT};
pub use spectrum::{char_poly, integral_spectrum, IntegerPoly, SpectrumVerdict, SPECTRUM_SIZE_LIMIT};

/// Undirected graph stored as adjacency bit-rows. Loops are only legal when
/// `loops_allowed` is set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    rows: Vec<ElementSet>,
    loops_allowed: bool,
    labels: Vec<String>,
}

/// Outcome of a BFS two-colouring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bipartition {
    /// A proper colouring with colours 0 and 1.
    Coloring(Vec<u8>),
    /// A closed walk of odd length, listed without repeating the start.
    OddCycle(Vec<usize>),
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartition::Coloring(_))
    }
}

/// Output formats for [`export_graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    Json,
}

impl std::str::FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(GraphFormat::Dot),
            "json" => Ok(GraphFormat::Json),
            _ => Err(Error::Parse { offset: 0, expected: "dot or json".into() }),
        }
    }
}

impl SimpleGraph {
    pub fn empty(labels: Vec<String>, loops_allowed: bool) -> Self {
        let n = labels.len();
        SimpleGraph { rows: vec![ElementSet::new(n); n], loops_allowed, labels }
    }

    /// Builds a graph from an edge list; a pair `(v, v)` is a loop.
    pub fn from_edges(labels: Vec<String>, edges: &[(usize, usize)], loops_allowed: bool) -> Result<Self> {
        let mut g = Self::empty(labels, loops_allowed);
        for &(u, v) in edges {
            if u >= g.n() || v >= g.n() {
                return Err(Error::Inconsistent(format!("edge ({u}, {v}) out of range")));
            }
            if u == v && !loops_allowed {
                return Err(Error::Inconsistent(format!("loop at {u} in a loop-free graph")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn loops_allowed(&self) -> bool {
        self.loops_allowed
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[v].iter()
    }

    pub fn neighbor_set(&self, v: usize) -> &ElementSet {
        &self.rows[v]
    }

    /// Number of neighbours; a loop counts once.
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    /// The common degree, if every vertex has the same one.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.rows.first().map_or(0, ElementSet::len);
        self.rows.iter().all(|r| r.len() == d).then_some(d)
    }

    pub fn has_loops(&self) -> bool {
        (0..self.n()).any(|v| self.has_edge(v, v))
    }

    /// Edges `(i, j)` with `i <= j`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n()).flat_map(|i| self.rows[i].iter().filter(move |&j| j >= i).map(move |j| (i, j))).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// The same graph with vertex `v` renamed `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> SimpleGraph {
        let mut labels = vec![String::new(); self.n()];
        for (v, &p) in perm.iter().enumerate() {
            labels[p] = self.labels[v].clone();
        }
        let mut out = Self::empty(labels, self.loops_allowed);
        for (u, v) in self.edges() {
            out.add_edge(perm[u], perm[v]);
        }
        out
    }

    /// Vertices reachable from `start`, ascending.
    pub fn component_of(&self, start: usize) -> Vec<usize> {
        let mut seen = ElementSet::new(self.n());
        seen.insert(start);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen.to_vec()
    }

    /// Connected components, ordered by their least vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut assigned = ElementSet::new(self.n());
        let mut out = Vec::new();
        for v in 0..self.n() {
            if !assigned.contains(v) {
                let comp = self.component_of(v);
                for &w in &comp {
                    assigned.insert(w);
                }
                out.push(comp);
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.component_of(0).len() == self.n()
    }

    /// BFS two-colouring; on failure, an odd cycle through the offending
    /// edge, recovered from the BFS tree.
    pub fn bipartition(&self) -> Bipartition {
        let n = self.n();
        let mut color = vec![u8::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        for root in 0..n {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        parent[w] = v;
                        depth[w] = depth[v] + 1;
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return Bipartition::OddCycle(tree_cycle(&parent, &depth, v, w));
                    }
                }
            }
        }
        Bipartition::Coloring(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_bipartite()
    }

    pub fn to_dot(&self) -> String {
        let quote = |v: usize| format!("\"{}\"", self.labels[v].replace('\\', "\\\\").replace('"', "\\\""));
        let mut parts = Vec::new();
        for v in 0..self.n() {
            if self.degree(v) == 0 {
                parts.push(format!("{};", quote(v)));
            }
        }
        for (u, v) in self.edges() {
            parts.push(format!("{} -- {};", quote(u), quote(v)));
        }
        if parts.is_empty() {
            "graph { }".into()
        } else {
            format!("graph {{ {} }}", parts.join(" "))
        }
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct View<'a> {
            n: usize,
            labels: &'a [String],
            edges: Vec<[usize; 2]>,
        }
        let view = View { n: self.n(), labels: &self.labels, edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect() };
        serde_json::to_string(&view).expect("graph serializes")
    }
}

/// Joins the tree paths from `v` and `w` up to their lowest common ancestor.
fn tree_cycle(parent: &[usize], depth: &[usize], v: usize, w: usize) -> Vec<usize> {
    if v == w {
        return vec![v];
    }
    let (mut a, mut b) = (v, w);
    let (mut left, mut right) = (vec![a], vec![b]);
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

/// Checks that `cycle` is a closed walk of odd length in `x`.
pub fn is_odd_cycle(x: &SimpleGraph, cycle: &[usize]) -> bool {
    !cycle.is_empty()
        && cycle.len() % 2 == 1
        && (0..cycle.len()).all(|i| x.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]))
}

pub fn export_graph(x: &SimpleGraph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Dot => x.to_dot(),
        GraphFormat::Json => x.to_json(),
    }
}

/// `GC(G, S, α)`: `g ~ h` iff `α(g⁻¹)h ∈ S`.
pub fn build_gc_graph(s: &GCSubset) -> Result<SimpleGraph> {
    let (g, alpha) = (s.group(), s.alpha());
    let n = g.order();
    let mut arcs = vec![ElementSet::new(n); n];
    for (x, row) in arcs.iter_mut().enumerate() {
        let base = alpha.apply(x);
        for t in s.members().iter() {
            row.insert(g.mul(base, t));
        }
    }
    for x in 0..n {
        if arcs[x].contains(x) {
            return Err(Error::Inconsistent(format!("loop at {}", g.element_name(x))));
        }
        if let Some(y) = arcs[x].iter().find(|&y| !arcs[y].contains(x)) {
            return Err(Error::Inconsistent(format!(
                "asymmetric adjacency between {} and {}",
                g.element_name(x),
                g.element_name(y)
            )));
        }
    }
    Ok(SimpleGraph { rows: arcs, loops_allowed: false, labels: g.names().to_vec() })
}

/// `Cay(G, T)` with `{g, gt}` for `t ∈ T`; a loop at every vertex when
/// `e ∈ T`.
pub fn build_cayley_graph(g: &FiniteGroup, t: &ElementSet) -> Result<SimpleGraph> {
    if let Some(x) = t.iter().find(|&x| !t.contains(g.inv(x))) {
        return Err(Error::NotSymmetricSet(g.element_name(x).to_string()));
    }
    let mut out = SimpleGraph::empty(g.names().to_vec(), true);
    for x in 0..g.order() {
        for s in t.iter() {
            out.add_edge(x, g.mul(x, s));
        }
    }
    Ok(out)
}

/// `Cay⁺(G, S)` for abelian `G`: `g ~ h` iff `gh ∈ S`, with `S` square-free.
pub fn build_cayley_sum_graph(g: &FiniteGroup, s: &ElementSet) -> Result<SimpleGraph> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian);
    }
    if let Some(x) = s.intersection(&g.squares()).first() {
        return Err(Error::NotSquareFree(g.element_name(x).to_string()));
    }
    let mut out = SimpleGraph::empty(g.names().to_vec(), false);
    for x in 0..g.order() {
        for t in s.iter() {
            out.add_edge(x, g.mul(g.inv(x), t));
        }
    }
    Ok(out)
}

/// Tensor product: `(x1, y1) ~ (x2, y2)` iff `x1 ~ x2` and `y1 ~ y2`;
/// vertex `(i, j)` has index `i * |Y| + j`.
pub fn direct_product_graph(x: &SimpleGraph, y: &SimpleGraph) -> SimpleGraph {
    let k = y.n();
    let labels = (0..x.n() * k).map(|v| format!("({},{})", x.labels[v / k], y.labels[v % k])).collect();
    let mut out = SimpleGraph::empty(labels, x.loops_allowed || y.loops_allowed);
    for (a1, a2) in x.edges() {
        for (b1, b2) in y.edges() {
            out.add_edge(a1 * k + b1, a2 * k + b2);
            out.add_edge(a1 * k + b2, a2 * k + b1);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build_str;
    use crate::gcs::validate_gcs;
    use crate::notation::{parse_alpha, parse_element_set};
    use std::sync::Arc;

    fn gc(group: &str, alpha: &str, set: &str) -> SimpleGraph {
        let g = Arc::new(build_str(group).unwrap());
        let a = parse_alpha(&g, alpha).unwrap();
        let s = parse_element_set(&g, set).unwrap();
        build_gc_graph(&validate_gcs(&g, &a, &s).unwrap()).unwrap()
    }

    #[test]
    fn z14_example_is_bipartite_cubic() {
        let x = gc("Z14", "inv", "g,g^3,g^5");
        assert_eq!(x.regular_degree(), Some(3));
        assert_eq!(x.edge_count(), 21);
        match x.bipartition() {
            Bipartition::Coloring(c) => {
                for (u, v) in x.edges() {
                    assert_ne!(c[u], c[v]);
                }
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn product_example_has_odd_cycle() {
        let x = gc("Z2^2 x Z6", "(1,0,0)->(1,0,0), (0,1,0)->(0,1,0), (0,0,1)->(0,1,1)", "(1,0,0),(0,0,2),(0,0,4)");
        assert_eq!(x.edge_count(), 36);
        match x.bipartition() {
            Bipartition::OddCycle(c) => assert!(is_odd_cycle(&x, &c), "{c:?}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn dot_and_json() {
        let k2 = SimpleGraph::from_edges(vec!["0".into(), "1".into()], &[(0, 1)], false).unwrap();
        assert_eq!(k2.to_dot(), r#"graph { "0" -- "1"; }"#);
        assert_eq!(k2.to_json(), r#"{"n":2,"labels":["0","1"],"edges":[[0,1]]}"#);
        let iso = SimpleGraph::from_edges(vec!["a".into(), "b".into(), "c".into()], &[(1, 2)], false).unwrap();
        assert_eq!(iso.to_dot(), r#"graph { "a"; "b" -- "c"; }"#);
    }

    #[test]
    fn cayley_with_loops() {
        let z4 = build_str("Z4").unwrap();
        let c4 = build_cayley_graph(&z4, &ElementSet::from_indices(4, [1, 3])).unwrap();
        assert_eq!(c4.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        let loops = build_cayley_graph(&z4, &ElementSet::from_indices(4, [0])).unwrap();
        assert_eq!(loops.edges(), vec![(0, 0), (1, 1), (2, 2), (3, 3)]);
        assert!(matches!(build_cayley_graph(&z4, &ElementSet::from_indices(4, [1])), Err(Error::NotSymmetricSet(_))));
    }

    #[test]
    fn cayley_sum_graphs() {
        let z6 = build_str("Z6").unwrap();
        let x = build_cayley_sum_graph(&z6, &ElementSet::from_indices(6, [1, 3, 5])).unwrap();
        assert!(x.is_connected());
        assert_eq!(x.regular_degree(), Some(3));
        let v4 = build_str("Z2^2").unwrap();
        let k4 = build_cayley_sum_graph(&v4, &ElementSet::from_indices(4, [1, 2, 3])).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert!(matches!(
            build_cayley_sum_graph(&z6, &ElementSet::from_indices(6, [2])),
            Err(Error::NotSquareFree(_))
        ));
    }

    #[test]
    fn tensor_with_k2_splits_bipartite_graphs() {
        let c4 = SimpleGraph::from_edges((0..4).map(|i| i.to_string()).collect(), &[(0, 1), (1, 2), (2, 3), (0, 3)], false)
            .unwrap();
        let k2 = SimpleGraph::from_edges(vec!["0".into(), "1".into()], &[(0, 1)], false).unwrap();
        assert_eq!(direct_product_graph(&c4, &k2).connected_components().len(), 2);
        let empty = SimpleGraph::empty(vec!["x".into()], false);
        assert_eq!(direct_product_graph(&empty, &empty).edge_count(), 0);
    }

    #[test]
    fn odd_cycle_from_triangle_with_tail() {
        let x = SimpleGraph::from_edges((0..4).map(|i| i.to_string()).collect(), &[(0, 1), (1, 2), (2, 3), (3, 1)], false)
            .unwrap();
        match x.bipartition() {
            Bipartition::OddCycle(c) => {
                assert!(is_odd_cycle(&x, &c));
                assert_eq!(c.len(), 3);
            }
            other => panic!("{other:?}"),
        }
    }
}
