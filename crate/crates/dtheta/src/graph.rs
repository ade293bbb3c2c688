//! Simple undirected graphs on vertex labels 0..n, with bitset vertex sets
//! and zero-copy "views" (a root graph plus a live-vertex mask) so vertex
//! deletions never relabel.

use serde_json::{json, Value};
use smallvec::SmallVec;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("vertex {v} out of range for a {n}-vertex graph")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("graph6 error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },
    #[error("graph has {n} vertices, over the limit of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("bad graph JSON: {0}")]
    BadJson(String),
}

/// A set of vertex indices backed by 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: SmallVec<[u64; 2]>,
}

fn word_count(n: usize) -> usize {
    n.div_ceil(64)
}

impl VertexSet {
    /// Empty set with capacity for vertices 0..n.
    pub fn empty(n: usize) -> Self {
        VertexSet {
            words: SmallVec::from_elem(0, word_count(n)),
        }
    }

    /// The full set {0, ..., n-1}.
    pub fn full(n: usize) -> Self {
        let mut words = SmallVec::from_elem(!0u64, word_count(n));
        if n % 64 != 0 {
            if let Some(last) = words.last_mut() {
                *last &= (1u64 << (n % 64)) - 1;
            }
        }
        VertexSet { words }
    }

    pub fn from_vertices(n: usize, vs: &[usize]) -> Self {
        let mut s = Self::empty(n);
        for &v in vs {
            s.insert(v);
        }
        s
    }

    pub fn insert(&mut self, v: usize) {
        self.words[v / 64] |= 1u64 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1u64 << (v % 64));
    }

    pub fn contains(&self, v: usize) -> bool {
        self.words
            .get(v / 64)
            .is_some_and(|w| w & (1u64 << (v % 64)) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersect(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    /// Set difference self \ other.
    pub fn minus(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        debug_assert_eq!(self.words.len(), other.words.len());
        VertexSet {
            words: self
                .words
                .iter()
                .zip(other.words.iter())
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(&a, &b)| a & !b == 0)
    }

    pub fn is_disjoint_from(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(&a, &b)| a & b == 0)
    }

    pub fn min_elem(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Members in increasing order.
    pub fn iter(&self) -> SetIter<'_> {
        SetIter {
            words: &self.words,
            word_idx: 0,
            cur: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct SetIter<'a> {
    words: &'a [u64],
    word_idx: usize,
    cur: u64,
}

impl Iterator for SetIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.cur == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.word_idx];
        }
        let bit = self.cur.trailing_zeros() as usize;
        self.cur &= self.cur - 1;
        Some(self.word_idx * 64 + bit)
    }
}

/// A simple undirected graph with adjacency bitsets.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::empty(n); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { v: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop { v: u });
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Removes the edge if present; does nothing otherwise.
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.adj[u].remove(v);
            self.adj[v].remove(u);
        }
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as (u, v) with u < v, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = vec![];
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Complement on the same vertex set (no self loops).
    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n);
        let mut adj = Vec::with_capacity(self.n);
        for v in 0..self.n {
            let mut s = full.minus(&self.adj[v]);
            s.remove(v);
            adj.push(s);
        }
        Graph { n: self.n, adj }
    }

    /// Graph with the union of both edge sets. Panics on different sizes.
    pub fn union_edges(&self, other: &Graph) -> Graph {
        assert_eq!(self.n, other.n, "edge union needs equal vertex counts");
        Graph {
            n: self.n,
            adj: self
                .adj
                .iter()
                .zip(other.adj.iter())
                .map(|(a, b)| a.union(b))
                .collect(),
        }
    }

    pub fn view(&self) -> View<'_> {
        View {
            graph: self,
            live: VertexSet::full(self.n),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// A root graph restricted to a live vertex subset. Deleting vertices only
/// shrinks the mask, so labels always refer to the root graph.
#[derive(Clone)]
pub struct View<'g> {
    graph: &'g Graph,
    live: VertexSet,
}

impl<'g> View<'g> {
    pub fn of(graph: &'g Graph, live: VertexSet) -> Self {
        View { graph, live }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn live(&self) -> &VertexSet {
        &self.live
    }

    pub fn n_live(&self) -> usize {
        self.live.len()
    }

    pub fn is_live(&self, v: usize) -> bool {
        self.live.contains(v)
    }

    /// View with one vertex removed.
    pub fn without(&self, v: usize) -> View<'g> {
        debug_assert!(self.live.contains(v));
        let mut live = self.live.clone();
        live.remove(v);
        View {
            graph: self.graph,
            live,
        }
    }

    /// View with a set of vertices removed.
    pub fn without_set(&self, drop: &VertexSet) -> View<'g> {
        View {
            graph: self.graph,
            live: self.live.minus(drop),
        }
    }

    pub fn restricted_to(&self, keep: &VertexSet) -> View<'g> {
        View {
            graph: self.graph,
            live: self.live.intersect(keep),
        }
    }

    pub fn live_neighbors(&self, v: usize) -> VertexSet {
        self.graph.adj[v].intersect(&self.live)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.live_neighbors(v).len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.live.contains(u) && self.live.contains(v) && self.graph.has_edge(u, v)
    }

    /// Live edges as (u, v) with u < v, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = vec![];
        for u in self.live.iter() {
            for v in self.live_neighbors(u).iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut remaining = self.live.clone();
        let mut out = vec![];
        while let Some(start) = remaining.min_elem() {
            let mut comp = VertexSet::empty(self.graph.n);
            let mut frontier = vec![start];
            comp.insert(start);
            remaining.remove(start);
            while let Some(v) = frontier.pop() {
                for w in self.graph.adj[v].intersect(&remaining).iter() {
                    comp.insert(w);
                    remaining.remove(w);
                    frontier.push(w);
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// All simple paths from u to v (vertex sequences including endpoints),
    /// in lexicographic order. Returns None if there are more than
    /// max_paths.
    pub fn paths_between(
        &self,
        u: usize,
        v: usize,
        max_paths: usize,
    ) -> Option<Vec<Vec<usize>>> {
        assert!(u != v, "paths between a vertex and itself");
        assert!(self.live.contains(u) && self.live.contains(v));
        let mut out = vec![];
        let mut current = vec![u];
        let mut used = VertexSet::empty(self.graph.n);
        used.insert(u);
        if self.path_dfs(v, &mut current, &mut used, &mut out, max_paths) {
            Some(out)
        } else {
            None
        }
    }

    fn path_dfs(
        &self,
        target: usize,
        current: &mut Vec<usize>,
        used: &mut VertexSet,
        out: &mut Vec<Vec<usize>>,
        max_paths: usize,
    ) -> bool {
        let here = *current.last().unwrap();
        if here == target {
            if out.len() >= max_paths {
                return false;
            }
            out.push(current.clone());
            return true;
        }
        for w in self.live_neighbors(here).minus(used).iter() {
            current.push(w);
            used.insert(w);
            let ok = self.path_dfs(target, current, used, out, max_paths);
            current.pop();
            used.remove(w);
            if !ok {
                return false;
            }
        }
        true
    }
}

/// All maximal cliques (Bron-Kerbosch with pivoting). Each clique is sorted
/// ascending and the list is sorted lexicographically. Isolated vertices
/// yield singleton cliques.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut r = vec![];
    bron_kerbosch(
        g,
        &mut r,
        VertexSet::full(g.n()),
        VertexSet::empty(g.n()),
        &mut out,
    );
    for clique in &mut out {
        clique.sort_unstable();
    }
    out.sort();
    out
}

fn bron_kerbosch(
    g: &Graph,
    r: &mut Vec<usize>,
    p: VertexSet,
    x: VertexSet,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(r.clone());
        return;
    }
    // Pivot: the vertex of P union X covering most of P, ties to least index.
    let pivot = p
        .union(&x)
        .iter()
        .max_by_key(|&u| (p.intersect(g.neighbors(u)).len(), usize::MAX - u))
        .unwrap();
    let mut p = p;
    let mut x = x;
    for v in p.minus(g.neighbors(pivot)).to_vec() {
        r.push(v);
        bron_kerbosch(
            g,
            r,
            p.intersect(g.neighbors(v)),
            x.intersect(g.neighbors(v)),
            out,
        );
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

/// JSON form {"n": 4, "edges": [[0, 1], [2, 3]]}.
pub fn graph_to_json(g: &Graph) -> Value {
    json!({
        "n": g.n(),
        "edges": g.edges().iter().map(|&(u, v)| json!([u, v])).collect::<Vec<_>>(),
    })
}

pub fn graph_from_json(v: &Value) -> Result<Graph, GraphError> {
    let obj = v
        .as_object()
        .ok_or_else(|| GraphError::BadJson("expected object".into()))?;
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| GraphError::BadJson("missing or bad vertex count n".into()))?
        as usize;
    let edges = obj
        .get("edges")
        .and_then(Value::as_array)
        .ok_or_else(|| GraphError::BadJson("missing or bad edges array".into()))?;
    let mut g = Graph::new(n);
    for e in edges {
        let pair = e
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| GraphError::BadJson(format!("edge {e} is not a pair")))?;
        let u = pair[0]
            .as_u64()
            .ok_or_else(|| GraphError::BadJson(format!("bad endpoint in {e}")))?;
        let v = pair[1]
            .as_u64()
            .ok_or_else(|| GraphError::BadJson(format!("bad endpoint in {e}")))?;
        g.add_edge(u as usize, v as usize)?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn vertex_set_basics() {
        let mut s = VertexSet::empty(70);
        assert!(s.is_empty());
        s.insert(0);
        s.insert(65);
        s.insert(3);
        assert_eq!(s.to_vec(), vec![0, 3, 65]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(65) && !s.contains(64));
        s.remove(3);
        assert_eq!(s.to_vec(), vec![0, 65]);
        assert_eq!(s.min_elem(), Some(0));
        assert_eq!(VertexSet::full(70).len(), 70);
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(VertexSet::full(0).len(), 0);
    }

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_vertices(8, &[0, 1, 2, 5]);
        let b = VertexSet::from_vertices(8, &[2, 3, 5, 7]);
        assert_eq!(a.union(&b).to_vec(), vec![0, 1, 2, 3, 5, 7]);
        assert_eq!(a.intersect(&b).to_vec(), vec![2, 5]);
        assert_eq!(a.minus(&b).to_vec(), vec![0, 1]);
        assert!(a.intersect(&b).is_subset_of(&a));
        assert!(!a.is_subset_of(&b));
        assert!(a.minus(&b).is_disjoint_from(&b));
    }

    #[test]
    fn edge_validation() {
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { v: 3, n: 3 })
        ));
        assert!(matches!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(GraphError::SelfLoop { v: 1 })
        ));
        let g = graph(3, &[(0, 1), (1, 0)]);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn components_sorted_by_min() {
        let g = graph(7, &[(4, 6), (1, 2), (2, 0)]);
        let comps = g.view().components();
        let as_vecs: Vec<Vec<usize>> = comps.iter().map(VertexSet::to_vec).collect();
        assert_eq!(as_vecs, vec![vec![0, 1, 2], vec![3], vec![4, 6], vec![5]]);
        assert!(!g.view().is_connected());
        assert!(graph(3, &[(0, 1), (1, 2)]).view().is_connected());
        assert!(graph(0, &[]).view().is_connected());
    }

    #[test]
    fn view_deletion_keeps_labels() {
        let g = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let v = g.view().without(2);
        assert_eq!(v.edges(), vec![(0, 1), (3, 4)]);
        assert_eq!(v.n_live(), 4);
        let w = v.without_set(&VertexSet::from_vertices(5, &[0, 4]));
        assert_eq!(w.edges(), vec![]);
        assert_eq!(w.live().to_vec(), vec![1, 3]);
        assert_eq!(v.live_neighbors(1).to_vec(), vec![0]);
        assert_eq!(v.degree(1), 1);
    }

    #[test]
    fn complement_and_union() {
        let c5 = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
        let comp = c5.complement();
        assert_eq!(comp.edges(), vec![(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]);
        assert_eq!(c5.union_edges(&comp).edge_count(), 10);
        assert_eq!(graph(3, &[]).complement().edge_count(), 3);
    }

    #[test]
    fn cliques_of_known_graphs() {
        let g = graph(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]);
        assert_eq!(maximal_cliques(&g), vec![vec![0, 1, 2], vec![2, 3]]);
        let empty3 = graph(3, &[]);
        assert_eq!(
            maximal_cliques(&empty3),
            vec![vec![0], vec![1], vec![2]]
        );
        let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(maximal_cliques(&k4), vec![vec![0, 1, 2, 3]]);
        let c5 = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
        assert_eq!(
            maximal_cliques(&c5),
            vec![vec![0, 1], vec![0, 4], vec![1, 2], vec![2, 3], vec![3, 4]]
        );
    }

    #[test]
    fn paths_with_caps() {
        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let paths = c4.view().paths_between(0, 2, 100).unwrap();
        assert_eq!(paths, vec![vec![0, 1, 2], vec![0, 3, 2]]);
        assert_eq!(c4.view().paths_between(0, 2, 1), None);
        assert_eq!(c4.view().paths_between(0, 2, 2).unwrap().len(), 2);
        let two = graph(2, &[]);
        assert_eq!(two.view().paths_between(0, 1, 10).unwrap(), Vec::<Vec<usize>>::new());
    }

    #[test]
    fn json_round_trip() {
        let g = graph(4, &[(0, 2), (1, 3)]);
        let j = graph_to_json(&g);
        assert_eq!(j, serde_json::json!({"n": 4, "edges": [[0, 2], [1, 3]]}));
        assert_eq!(graph_from_json(&j).unwrap(), g);
        assert!(graph_from_json(&serde_json::json!({"edges": []})).is_err());
        assert!(graph_from_json(&serde_json::json!({"n": 2, "edges": [[0, 0]]})).is_err());
    }

    fn arbitrary_graph() -> impl Strategy<Value = Graph> {
        (1usize..9).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            proptest::collection::vec(proptest::bool::ANY, pairs.len()).prop_map(move |mask| {
                let chosen: Vec<(usize, usize)> = pairs
                    .iter()
                    .zip(mask.iter())
                    .filter(|(_, &keep)| keep)
                    .map(|(&e, _)| e)
                    .collect();
                Graph::from_edges(n, &chosen).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn complement_is_involution(g in arbitrary_graph()) {
            prop_assert_eq!(g.complement().complement(), g);
        }

        #[test]
        fn components_partition_live_set(g in arbitrary_graph()) {
            let comps = g.view().components();
            let mut seen = VertexSet::empty(g.n());
            for c in &comps {
                prop_assert!(!c.is_empty());
                prop_assert!(seen.is_disjoint_from(c));
                seen = seen.union(c);
                // No live edges leave a component.
                for u in c.iter() {
                    prop_assert!(g.neighbors(u).is_subset_of(c));
                }
            }
            prop_assert_eq!(seen, VertexSet::full(g.n()));
        }

        #[test]
        fn cliques_are_maximal_cliques(g in arbitrary_graph()) {
            let cliques = maximal_cliques(&g);
            for c in &cliques {
                for (i, &u) in c.iter().enumerate() {
                    for &v in &c[i + 1..] {
                        prop_assert!(g.has_edge(u, v));
                    }
                }
                // Maximality: no vertex extends the clique.
                for w in 0..g.n() {
                    if !c.contains(&w) {
                        prop_assert!(!c.iter().all(|&u| g.has_edge(u, w)));
                    }
                }
            }
            // Every edge appears in some clique.
            for (u, v) in g.edges() {
                prop_assert!(cliques.iter().any(|c| c.contains(&u) && c.contains(&v)));
            }
            // Deterministic and duplicate free.
            let mut sorted = cliques.clone();
            sorted.sort();
            sorted.dedup();
            prop_assert_eq!(sorted, cliques);
        }
    }
}
