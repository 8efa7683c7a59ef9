//! Chordality, maximal cliques, and leaf orders of clique complexes.
//!
//! A graph is chordal exactly when its clique complex `Δ(G)` is a
//! quasi-forest, i.e. its facets admit a leaf order. Both sides of that
//! equivalence are computed independently here: chordality through maximum
//! cardinality search, leaf orders by peeling leaves off the facet list.

use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

/// Outcome of a chordality test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum Chordality {
    /// A perfect elimination order, first-eliminated vertex first.
    Chordal { peo: Vec<usize> },
    /// A chordless cycle of length at least four, in cyclic order.
    NotChordal { cycle: Vec<usize> },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }
}

/// Maximum cardinality search visiting order, ties broken by lowest label.
pub fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n + 1];
    let mut visited = VertexSet::new();
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (1..=n)
            .filter(|&v| !visited.contains(v))
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("unvisited vertex");
        visited.insert(v);
        order.push(v);
        for u in g.neighbors(v) {
            if !visited.contains(u) {
                weight[u] += 1;
            }
        }
    }
    order
}

/// Neighbors of each vertex visited before it in `order`, indexed by vertex.
fn earlier_neighbors(g: &Graph, order: &[usize]) -> Vec<VertexSet> {
    let mut seen = VertexSet::new();
    let mut out = vec![VertexSet::new(); g.n() + 1];
    for &v in order {
        out[v] = g.neighbors(v).intersection(&seen);
        seen.insert(v);
    }
    out
}

pub fn is_chordal(g: &Graph) -> Chordality {
    let order = mcs_order(g);
    let earlier = earlier_neighbors(g, &order);
    if order.iter().all(|&v| g.is_clique(&earlier[v])) {
        let mut peo = order;
        peo.reverse();
        Chordality::Chordal { peo }
    } else {
        Chordality::NotChordal {
            cycle: chordless_cycle(g).expect("MCS rejected a graph without a chordless cycle"),
        }
    }
}

/// Finds a chordless cycle of length at least four, if any.
///
/// Every such cycle passes through some vertex `v` whose two cycle neighbors
/// `x, y` are non-adjacent, with the rest of the cycle avoiding the other
/// neighbors of `v`. A shortest `x`-`y` path in that region is induced, so
/// closing it through `v` gives a chordless cycle.
pub fn chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    for v in 1..=g.n() {
        let nv: Vec<usize> = g.neighbors(v).to_vec();
        for (i, &x) in nv.iter().enumerate() {
            for &y in &nv[i + 1..] {
                if g.has_edge(x, y) {
                    continue;
                }
                let mut allowed = g.vertices().difference(g.neighbors(v));
                allowed.remove(v);
                allowed.insert(x);
                allowed.insert(y);
                if let Some(path) = shortest_path(g, x, y, &allowed) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn shortest_path(g: &Graph, from: usize, to: usize, allowed: &VertexSet) -> Option<Vec<usize>> {
    let mut prev = vec![0usize; g.n() + 1];
    let mut seen = VertexSet::singleton(from);
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for w in g.neighbors(u).intersection(allowed).iter() {
            if seen.insert(w) {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

/// All maximal cliques, sorted lexicographically by their sorted vertex
/// lists. Chordal graphs use the elimination-order method; other graphs fall
/// back to pivoting Bron-Kerbosch.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut cliques = match is_chordal(g) {
        Chordality::Chordal { peo } => chordal_cliques(g, &peo),
        Chordality::NotChordal { .. } => bron_kerbosch_all(g),
    };
    sort_lex(&mut cliques);
    cliques
}

pub(crate) fn sort_lex(sets: &mut [VertexSet]) {
    sets.sort_by(|a, b| a.iter().cmp(b.iter()));
}

fn chordal_cliques(g: &Graph, peo: &[usize]) -> Vec<VertexSet> {
    let order: Vec<usize> = peo.iter().rev().copied().collect();
    let earlier = earlier_neighbors(g, &order);
    let candidates: Vec<VertexSet> = order
        .iter()
        .map(|&v| {
            let mut c = earlier[v].clone();
            c.insert(v);
            c
        })
        .collect();
    let mut out: Vec<VertexSet> = Vec::new();
    for (i, c) in candidates.iter().enumerate() {
        let dominated = candidates
            .iter()
            .enumerate()
            .any(|(j, d)| j != i && c.is_subset(d) && (c != d || j < i));
        if !dominated {
            out.push(c.clone());
        }
    }
    out
}

fn bron_kerbosch_all(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    bron_kerbosch(g, VertexSet::new(), g.vertices(), VertexSet::new(), &mut out);
    out
}

fn bron_kerbosch(g: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = p
        .union(&x)
        .iter()
        .max_by_key(|&u| g.neighbors(u).intersection(&p).len())
        .expect("P is nonempty");
    for v in p.difference(g.neighbors(pivot)).iter() {
        let mut r2 = r.clone();
        r2.insert(v);
        let nv = g.neighbors(v);
        bron_kerbosch(g, r2, p.intersection(nv), x.intersection(nv), out);
        p.remove(v);
        x.insert(v);
    }
}

/// The branches of `facets[leaf]` within the sub-complex on `among`: facets
/// `G != F` with `H ∩ F ⊆ G ∩ F` for every other facet `H`. Empty when `F`
/// is not a leaf (or is the only facet).
pub fn branches(facets: &[VertexSet], leaf: usize, among: &[usize]) -> Vec<usize> {
    let f = &facets[leaf];
    let others: Vec<usize> = among.iter().copied().filter(|&h| h != leaf).collect();
    let meet = others
        .iter()
        .fold(VertexSet::new(), |acc, &h| acc.union(&facets[h].intersection(f)));
    others
        .into_iter()
        .filter(|&h| meet.is_subset(&facets[h]))
        .collect()
}

/// Whether `facets[leaf]` is a leaf of the sub-complex on `among`.
pub fn is_leaf(facets: &[VertexSet], leaf: usize, among: &[usize]) -> bool {
    among.iter().all(|&h| h == leaf) || !branches(facets, leaf, among).is_empty()
}

/// Result of searching for a leaf order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LeafOrder {
    /// Facet indices `F_1, ..., F_r`: each `F_i` with `i > 1` is a leaf of
    /// the complex on `F_1, ..., F_i`.
    Order(Vec<usize>),
    /// Facet indices of a sub-complex with more than one facet and no leaf.
    Stuck(Vec<usize>),
}

/// Builds a leaf order by repeatedly removing a leaf (the highest-indexed
/// one) and placing it last.
pub fn leaf_order(facets: &[VertexSet]) -> LeafOrder {
    let mut remaining: Vec<usize> = (0..facets.len()).collect();
    let mut reversed = Vec::with_capacity(facets.len());
    while remaining.len() > 1 {
        let Some(pos) = remaining.iter().rposition(|&f| is_leaf(facets, f, &remaining)) else {
            return LeafOrder::Stuck(remaining);
        };
        reversed.push(remaining.remove(pos));
    }
    reversed.extend(remaining);
    reversed.reverse();
    LeafOrder::Order(reversed)
}

/// Checks the leaf-order condition directly from its definition.
pub fn verify_leaf_order(facets: &[VertexSet], order: &[usize]) -> bool {
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len() == facets.len()
        && order.len() == facets.len()
        && (1..order.len()).all(|i| {
            let prefix = &order[..=i];
            let f = &facets[order[i]];
            prefix[..i].iter().any(|&g| {
                prefix[..i]
                    .iter()
                    .all(|&h| facets[h].intersection(f).is_subset(&facets[g].intersection(f)))
            })
        })
}

/// The clique complex `Δ(G)`: its facets (maximal cliques) and, when the
/// graph is chordal, a leaf order of them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueComplex {
    pub facets: Vec<VertexSet>,
    pub leaf_order: Option<Vec<usize>>,
}

impl CliqueComplex {
    pub fn of(g: &Graph) -> Self {
        let facets = maximal_cliques(g);
        let leaf_order = match leaf_order(&facets) {
            LeafOrder::Order(o) => Some(o),
            LeafOrder::Stuck(_) => None,
        };
        Self { facets, leaf_order }
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// `ω(G)`, the size of a largest facet.
    pub fn clique_number(&self) -> usize {
        self.facets.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    /// Indices of the facets containing every vertex of `a`.
    pub fn facets_containing(&self, a: &VertexSet) -> Vec<usize> {
        (0..self.facets.len())
            .filter(|&i| a.is_subset(&self.facets[i]))
            .collect()
    }

    /// `cdeg(v)`: the number of facets containing `v`.
    pub fn clique_degree(&self, v: usize) -> usize {
        self.facets.iter().filter(|f| f.contains(v)).count()
    }
}

/// Free vertices (in exactly one maximal clique), internal vertices, and the
/// clique degree of every vertex (`cdeg[v - 1]`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexRoles {
    pub free: VertexSet,
    pub internal: VertexSet,
    pub cdeg: Vec<usize>,
}

pub fn free_and_internal_vertices(g: &Graph, cc: &CliqueComplex) -> VertexRoles {
    let cdeg: Vec<usize> = (1..=g.n()).map(|v| cc.clique_degree(v)).collect();
    let free = (1..=g.n()).filter(|&v| cdeg[v - 1] == 1).collect();
    let internal = (1..=g.n()).filter(|&v| cdeg[v - 1] > 1).collect();
    VertexRoles { free, internal, cdeg }
}
