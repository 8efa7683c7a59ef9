//! Simple undirected graphs on `1..=n` and the elementary constructions used
//! throughout the crate: induced subgraphs, components, neighborhood
//! saturation `G_v`, and the cut-edge pair `(G \ e, (G \ e)_e)`.

mod io;
mod vertex_set;

pub use io::{parse_graph, parse_json, parse_text};
pub use vertex_set::{Iter, VertexSet};

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple undirected graph on the vertices `1..=n`.
///
/// Adjacency is kept both as bitsets (constant-time membership, fast induced
/// queries) and as a sorted edge list (deterministic iteration).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
}

/// An induced subgraph relabeled to `1..=k` in increasing order of the
/// original labels. `labels[i]` is the original label of vertex `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced {
    pub graph: Graph,
    pub labels: Vec<usize>,
}

impl Induced {
    /// Original label of a vertex of the induced graph.
    pub fn original(&self, v: usize) -> usize {
        self.labels[v - 1]
    }

    pub fn original_set(&self, s: &VertexSet) -> VertexSet {
        s.iter().map(|v| self.original(v)).collect()
    }

    /// Label in the induced graph of an original vertex, if it was kept.
    pub fn local(&self, original: usize) -> Option<usize> {
        self.labels.binary_search(&original).ok().map(|i| i + 1)
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            adj: vec![VertexSet::new(); n],
            edges: Vec::new(),
        }
    }

    /// Builds a graph, rejecting self-loops, duplicate edges and labels
    /// outside `1..=n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (k, (u, v)) in edges.into_iter().enumerate() {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::Parse {
                    line: k + 1,
                    message: format!("self-loop at vertex {u}"),
                });
            }
            if g.has_edge(u, v) {
                return Err(Error::Parse {
                    line: k + 1,
                    message: format!("duplicate edge {{{u}, {v}}}"),
                });
            }
            g.adj[u - 1].insert(v);
            g.adj[v - 1].insert(u);
            g.edges.push((u.min(v), u.max(v)));
        }
        g.edges.sort_unstable();
        Ok(g)
    }

    /// Like [`Graph::from_edges`] but silently merges repeated edges.
    fn from_edge_set(n: usize, edges: BTreeSet<(usize, usize)>) -> Self {
        let mut g = Self::empty(n);
        for &(u, v) in &edges {
            g.adj[u - 1].insert(v);
            g.adj[v - 1].insert(u);
        }
        g.edges = edges.into_iter().collect();
        g
    }

    pub fn complete(n: usize) -> Self {
        let edges = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
        Self::from_edge_set(n, edges.collect())
    }

    /// The path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Self {
        Self::from_edge_set(n, (1..n).map(|u| (u, u + 1)).collect())
    }

    pub fn cycle(n: usize) -> Self {
        let mut e: BTreeSet<_> = (1..n).map(|u| (u, u + 1)).collect();
        if n >= 3 {
            e.insert((1, n));
        }
        Self::from_edge_set(n, e)
    }

    /// The star `K_{1,m}` with center `1` and leaves `2..=m+1`.
    pub fn star(m: usize) -> Self {
        Self::from_edge_set(m + 1, (2..=m + 1).map(|v| (1, v)).collect())
    }

    /// Disjoint union of cliques glued along the given vertex sets; a
    /// convenience for writing fixtures as lists of maximal cliques.
    pub fn from_cliques(n: usize, cliques: &[&[usize]]) -> Result<Self> {
        let mut e = BTreeSet::new();
        for c in cliques {
            for (i, &u) in c.iter().enumerate() {
                for &v in &c[i + 1..] {
                    if u == v || u == 0 || v == 0 || u > n || v > n {
                        return Err(Error::InvalidParameter(format!("bad clique {c:?} for n = {n}")));
                    }
                    e.insert((u.min(v), u.max(v)));
                }
            }
        }
        Ok(Self::from_edge_set(n, e))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn check_set(&self, a: &VertexSet) -> Result<()> {
        match a.last() {
            Some(v) if v > self.n => Err(Error::VertexOutOfRange { vertex: v, n: self.n }),
            _ => Ok(()),
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && u <= self.n && self.adj[u - 1].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    pub fn is_pendant(&self, v: usize) -> bool {
        self.degree(v) == 1
    }

    /// Whether `a` induces a complete subgraph.
    pub fn is_clique(&self, a: &VertexSet) -> bool {
        a.iter().all(|v| {
            let mut rest = a.clone();
            rest.remove(v);
            rest.is_subset(&self.adj[v - 1])
        })
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }

    /// `K_{1,m}` with `m >= 2`: one vertex adjacent to all others and no
    /// other edges.
    pub fn is_star(&self) -> bool {
        self.n >= 3 && self.edges.len() == self.n - 1 && (1..=self.n).any(|v| self.degree(v) == self.n - 1)
    }

    /// Single-word adjacency masks (bit `k` is vertex `k + 1`), available
    /// when `n <= 64`.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        self.adj.iter().map(VertexSet::as_mask).collect()
    }

    /// The induced subgraph `G[A]`, relabeled to `1..=|A|` preserving order.
    pub fn induced_subgraph(&self, a: &VertexSet) -> Result<Induced> {
        self.check_set(a)?;
        let labels = a.to_vec();
        let edges = self
            .edges
            .iter()
            .filter(|(u, v)| a.contains(*u) && a.contains(*v))
            .map(|&(u, v)| {
                let lu = labels.binary_search(&u).unwrap() + 1;
                let lv = labels.binary_search(&v).unwrap() + 1;
                (lu, lv)
            })
            .collect();
        Ok(Induced {
            graph: Self::from_edge_set(labels.len(), edges),
            labels,
        })
    }

    /// `G \ v` as an induced subgraph.
    pub fn remove_vertex(&self, v: usize) -> Result<Induced> {
        self.check_vertex(v)?;
        let mut keep = self.vertices();
        keep.remove(v);
        self.induced_subgraph(&keep)
    }

    /// Connected components of `G[within]`, each as a vertex set, ordered by
    /// smallest element.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut left = within.clone();
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp.clone();
            while !frontier.is_empty() {
                let mut next = VertexSet::new();
                for u in &frontier {
                    next = next.union(&self.adj[u - 1]);
                }
                next = next.intersection(within).difference(&comp);
                comp = comp.union(&next);
                frontier = next;
            }
            left = left.difference(&comp);
            out.push(comp);
        }
        out
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertices())
    }

    /// `c_G`: the number of connected components.
    pub fn component_count(&self) -> usize {
        self.connected_components().len()
    }

    /// `c_G(T)`: the number of components of `G[[n] \ T]`.
    pub fn component_count_without(&self, t: &VertexSet) -> usize {
        self.components_within(&self.vertices().difference(t)).len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Returns a copy with the given edges added (existing ones are kept).
    pub fn with_edges<I>(&self, extra: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut e: BTreeSet<_> = self.edges.iter().copied().collect();
        for (u, v) in extra {
            if u != v {
                e.insert((u.min(v), u.max(v)));
            }
        }
        Self::from_edge_set(self.n, e)
    }

    /// Adds every edge of the clique on `a`.
    pub fn with_clique(&self, a: &VertexSet) -> Self {
        let vs = a.to_vec();
        self.with_edges(
            vs.iter()
                .enumerate()
                .flat_map(|(i, &u)| vs[i + 1..].iter().map(move |&v| (u, v))),
        )
    }

    /// `G_v`: the graph with the neighborhood of `v` completed to a clique.
    pub fn saturate_vertex(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        Ok(self.with_clique(&self.adj[v - 1]))
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Self> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let e = (u.min(v), u.max(v));
        Ok(Self::from_edge_set(
            self.n,
            self.edges.iter().copied().filter(|&x| x != e).collect(),
        ))
    }

    /// For a non-edge `e = {u, v}`, the graph `G_e` whose edge set adds the
    /// cliques on `N(u)` and on `N(v)`.
    pub fn saturate_non_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if self.has_edge(u, v) || u == v {
            return Err(Error::InvalidParameter(format!(
                "{{{u}, {v}}} must be a non-edge"
            )));
        }
        Ok(self.with_clique(&self.adj[u - 1]).with_clique(&self.adj[v - 1]))
    }

    /// The pair `(G \ e, (G \ e)_e)` for an edge `e = {u, v}`.
    pub fn cut_edge_constructions(&self, u: usize, v: usize) -> Result<(Self, Self)> {
        let removed = self.delete_edge(u, v)?;
        let saturated = removed.saturate_non_edge(u, v)?;
        Ok((removed, saturated))
    }

    /// Relabels vertex `v` to `perm[v - 1]`; `perm` must be a permutation of
    /// `1..=n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let mut seen = VertexSet::new();
        if perm.len() != self.n || !perm.iter().all(|&p| p >= 1 && p <= self.n && seen.insert(p)) {
            return Err(Error::InvalidParameter("not a permutation".into()));
        }
        Ok(Self::from_edge_set(
            self.n,
            self.edges
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (perm[a - 1], perm[b - 1]);
                    (x.min(y), x.max(y))
                })
                .collect(),
        ))
    }

    /// Disjoint union with `other`, whose vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let off = self.n;
        let mut e: BTreeSet<_> = self.edges.iter().copied().collect();
        e.extend(other.edges.iter().map(|&(a, b)| (a + off, b + off)));
        Self::from_edge_set(self.n + other.n, e)
    }

    /// The graph text format: `n` on the first line, then one `u v` per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for (u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n,
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// JSON form of a graph: `{"n": int, "edges": [[u, v], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strip3() -> Graph {
        Graph::from_edges(5, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)]).unwrap()
    }

    fn four_triangles() -> Graph {
        Graph::from_edges(
            6,
            [
                (1, 2),
                (1, 3),
                (2, 3),
                (2, 4),
                (2, 5),
                (3, 5),
                (3, 6),
                (4, 5),
                (5, 6),
            ],
        )
        .unwrap()
    }

    #[test]
    fn induced_triangle_and_identity() {
        let g = strip3();
        let t = g.induced_subgraph(&VertexSet::from([1, 2, 3])).unwrap();
        assert_eq!(t.graph, Graph::complete(3));
        assert_eq!(t.labels, vec![1, 2, 3]);
        let all = g.induced_subgraph(&g.vertices()).unwrap();
        assert_eq!(all.graph, g);
    }

    #[test]
    fn induced_keeps_label_map() {
        let s = four_triangles()
            .induced_subgraph(&VertexSet::from([4, 5, 6]))
            .unwrap();
        // 4 - 5 - 6 in the drawing, relabeled 1 - 2 - 3
        assert_eq!(s.graph, Graph::path(3));
        assert_eq!(s.original(3), 6);
        assert_eq!(s.local(5), Some(2));
        assert_eq!(s.local(1), None);
    }

    #[test]
    fn induced_rejects_out_of_range() {
        assert!(matches!(
            strip3().induced_subgraph(&VertexSet::from([1, 9])),
            Err(Error::VertexOutOfRange { vertex: 9, n: 5 })
        ));
    }

    #[test]
    fn components() {
        assert_eq!(Graph::complete(5).component_count(), 1);
        let g = strip3();
        let comps = g.components_within(&VertexSet::from([1, 4, 5]));
        assert_eq!(comps, vec![VertexSet::from([1]), VertexSet::from([4, 5])]);
        assert_eq!(g.component_count_without(&VertexSet::from([2, 3])), 2);
        let e = Graph::empty(3);
        assert_eq!(
            e.connected_components(),
            vec![VertexSet::from([1]), VertexSet::from([2]), VertexSet::from([3])]
        );
    }

    #[test]
    fn saturation() {
        assert_eq!(Graph::path(3).saturate_vertex(2).unwrap(), Graph::complete(3));
        assert_eq!(Graph::complete(4).saturate_vertex(3).unwrap(), Graph::complete(4));
        assert_eq!(Graph::star(3).saturate_vertex(1).unwrap(), Graph::complete(4));
        let gv = strip3().saturate_vertex(3).unwrap();
        assert_eq!(gv.saturate_vertex(3).unwrap(), gv);
    }

    #[test]
    fn cut_edge_pairs() {
        let p3 = Graph::path(3);
        let (a, b) = p3.cut_edge_constructions(1, 2).unwrap();
        let expect = Graph::from_edges(3, [(2, 3)]).unwrap();
        assert_eq!(a, expect);
        assert_eq!(b, expect);

        // K_3 \ {1,2} is the path 1 - 3 - 2; both endpoints have the single
        // neighbor 3, so saturating adds nothing.
        let (a, b) = Graph::complete(3).cut_edge_constructions(1, 2).unwrap();
        assert_eq!(a, Graph::from_edges(3, [(1, 3), (2, 3)]).unwrap());
        assert_eq!(b, a);

        let (_, b) = Graph::star(3).cut_edge_constructions(1, 2).unwrap();
        assert_eq!(b, Graph::from_cliques(4, &[&[1, 3, 4]]).unwrap());

        assert_eq!(
            Graph::path(3).cut_edge_constructions(1, 3),
            Err(Error::NotAnEdge(1, 3))
        );
    }

    #[test]
    fn degrees() {
        assert_eq!(Graph::path(3).degree(2), 2);
        assert!(Graph::path(3).is_pendant(1));
        assert_eq!(Graph::complete(5).degree(4), 4);
        assert!(Graph::star(3).is_star());
        assert!(!Graph::complete(2).is_star());
        assert!(!Graph::path(4).is_star());
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(
            Graph::from_edges(3, [(1, 2), (2, 1)]),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Graph::from_edges(3, [(2, 2)]),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(Graph::from_edges(3, [(1, 4)]).is_err());
    }
}
