//! Minimal cut sets, the family `C(G)` of sets with the cut point property,
//! and descriptions of the minimal primes `P_T(G)`.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::chordal::CliqueComplex;
use crate::error::{Error, Result};
use crate::gbg;
use crate::graph::{Graph, VertexSet};

/// Default vertex cap for the exponential enumeration of `C(G)`.
pub const DEFAULT_CUT_POINT_CAP: usize = 16;

/// Vertices adjacent to `d` but outside it.
fn boundary(g: &Graph, d: &VertexSet) -> VertexSet {
    d.iter()
        .fold(VertexSet::new(), |acc, v| acc.union(g.neighbors(v)))
        .difference(d)
}

/// Whether `a` is an inclusion-minimal cut set.
///
/// Such a set lies inside one component `C`, and removing it splits `C`
/// into at least two pieces each of which is adjacent to every vertex of
/// `a`. Conversely every set with that shape is a minimal cut set.
pub fn is_minimal_cut_set(g: &Graph, a: &VertexSet) -> bool {
    if a.is_empty() || g.check_set(a).is_err() {
        return false;
    }
    let Some(c) = g.connected_components().into_iter().find(|c| a.is_subset(c)) else {
        return false;
    };
    let pieces = g.components_within(&c.difference(a));
    pieces.len() >= 2 && pieces.iter().all(|d| boundary(g, d) == *a)
}

/// Minimal separators of the connected vertex set `c`, by closing the
/// neighborhood separators under the standard generation step.
fn minimal_separators(g: &Graph, c: &VertexSet) -> BTreeSet<VertexSet> {
    let mut found = BTreeSet::new();
    let mut queue = VecDeque::new();
    fn push(s: VertexSet, found: &mut BTreeSet<VertexSet>, queue: &mut VecDeque<VertexSet>) {
        if !s.is_empty() && found.insert(s.clone()) {
            queue.push_back(s);
        }
    }
    for v in c {
        let mut closed = g.neighbors(v).intersection(c);
        closed.insert(v);
        for d in g.components_within(&c.difference(&closed)) {
            push(boundary(g, &d), &mut found, &mut queue);
        }
    }
    while let Some(s) = queue.pop_front() {
        for x in &s {
            let removed = s.union(g.neighbors(x));
            for d in g.components_within(&c.difference(&removed)) {
                push(boundary(g, &d), &mut found, &mut queue);
            }
        }
    }
    found
}

/// All minimal cut sets, ordered by size and then lexicographically.
pub fn minimal_cut_sets(g: &Graph) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = g
        .connected_components()
        .iter()
        .flat_map(|c| minimal_separators(g, c))
        .filter(|s| is_minimal_cut_set(g, s))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Minimal cut sets of a generalized block graph read off its facets: the
/// nonempty pairwise facet intersections `A` such that the facets through
/// `A` meet exactly in `A` and every other facet misses `A`.
pub fn minimal_cut_sets_gbg(g: &Graph, cc: &CliqueComplex) -> Result<Vec<VertexSet>> {
    if !gbg::classify_graph(g).verdict.is_gbg() {
        return Err(Error::NotGbg);
    }
    Ok(cut_sets_from_facets(&cc.facets))
}

pub(crate) fn cut_sets_from_facets(facets: &[VertexSet]) -> Vec<VertexSet> {
    let mut out = BTreeSet::new();
    for (i, fi) in facets.iter().enumerate() {
        for fj in &facets[i + 1..] {
            let a = fi.intersection(fj);
            if a.is_empty() || out.contains(&a) {
                continue;
            }
            let meet = facets
                .iter()
                .filter(|f| f.intersects(&a))
                .try_fold(None::<VertexSet>, |acc, f| {
                    if !a.is_subset(f) {
                        return None;
                    }
                    Some(Some(match acc {
                        None => f.clone(),
                        Some(m) => m.intersection(f),
                    }))
                });
            if matches!(meet, Some(Some(m)) if m == a) {
                out.insert(a);
            }
        }
    }
    out.into_iter().collect()
}

/// Number of connected components of the subgraph induced on `within`, with
/// single-word adjacency masks.
pub(crate) fn mask_component_count(adj: &[u64], within: u64) -> usize {
    let mut left = within;
    let mut count = 0;
    while left != 0 {
        let mut comp = left & left.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                next |= adj[f.trailing_zeros() as usize];
                f &= f - 1;
            }
            next &= left & !comp;
            comp |= next;
            frontier = next;
        }
        left &= !comp;
        count += 1;
    }
    count
}

/// Whether every `i` in `t` is a cut vertex of `G[T̄ ∪ {i}]`.
pub fn has_cut_point_property(g: &Graph, t: &VertexSet) -> bool {
    if g.check_set(t).is_err() {
        return false;
    }
    let base = g.component_count_without(t);
    t.iter().all(|i| {
        let mut smaller = t.clone();
        smaller.remove(i);
        g.component_count_without(&smaller) < base
    })
}

/// The family `C(G)`, including `∅`, ordered by size and then
/// lexicographically. Refuses graphs with more than `cap` vertices
/// (default [`DEFAULT_CUT_POINT_CAP`]).
pub fn cut_point_sets(g: &Graph, cap: Option<usize>) -> Result<Vec<VertexSet>> {
    let cap = cap.unwrap_or(DEFAULT_CUT_POINT_CAP);
    let n = g.n();
    if n > cap {
        return Err(Error::ResourceLimit(format!(
            "C(G) enumeration is capped at {cap} vertices, graph has {n}"
        )));
    }
    if n >= 64 {
        return Err(Error::ResourceLimit("C(G) enumeration needs n < 64".into()));
    }
    let adj = g.adjacency_masks().expect("n < 64");
    let full = (1u64 << n) - 1;
    let mut out: Vec<VertexSet> = (0..=full)
        .filter(|&t| {
            let rest = full & !t;
            let base = mask_component_count(&adj, rest);
            let mut bits = t;
            while bits != 0 {
                let i = bits & bits.wrapping_neg();
                if mask_component_count(&adj, rest | i) >= base {
                    return false;
                }
                bits &= bits - 1;
            }
            true
        })
        .map(VertexSet::from_mask)
        .collect();
    out.sort();
    Ok(out)
}

/// Minimal cut sets together with the family `C(G)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutSetFamily {
    pub minimal_cut_sets: Vec<VertexSet>,
    pub cut_point_sets: Vec<VertexSet>,
}

impl CutSetFamily {
    pub fn of(g: &Graph, cap: Option<usize>) -> Result<Self> {
        Ok(Self {
            minimal_cut_sets: minimal_cut_sets(g),
            cut_point_sets: cut_point_sets(g, cap)?,
        })
    }
}

/// The prime `P_T(G)`: the variables `x_i, y_i` for `i ∈ T` and the
/// binomial edge ideal of the complete graph on each component of `G[T̄]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalPrimeDescription {
    pub t: VertexSet,
    pub variables: Vec<String>,
    pub components: Vec<VertexSet>,
    pub generators: Vec<String>,
}

pub fn minimal_prime_description(g: &Graph, t: &VertexSet) -> Result<MinimalPrimeDescription> {
    g.check_set(t)?;
    if !has_cut_point_property(g, t) {
        return Err(Error::NotCutPointSet(t.to_vec()));
    }
    let variables: Vec<String> = t
        .iter()
        .flat_map(|i| [format!("x_{i}"), format!("y_{i}")])
        .collect();
    let components = g.components_within(&g.vertices().difference(t));
    let mut generators = variables.clone();
    for c in &components {
        let vs = c.to_vec();
        for (k, &i) in vs.iter().enumerate() {
            for &j in &vs[k + 1..] {
                generators.push(format!("x_{i}y_{j}-x_{j}y_{i}"));
            }
        }
    }
    Ok(MinimalPrimeDescription {
        t: t.clone(),
        variables,
        components,
        generators,
    })
}

/// `G_A`: the facets containing the minimal cut set `a` are replaced by the
/// clique on their union.
pub fn merge_at_cutset(g: &Graph, a: &VertexSet) -> Result<Graph> {
    g.check_set(a)?;
    if !is_minimal_cut_set(g, a) {
        return Err(Error::NotMinimalCutSet(a.to_vec()));
    }
    let cc = CliqueComplex::of(g);
    let union = cc
        .facets
        .iter()
        .filter(|f| a.is_subset(f))
        .fold(VertexSet::new(), |acc, f| acc.union(f));
    Ok(g.with_clique(&union))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(v: &[&[usize]]) -> Vec<VertexSet> {
        v.iter().map(|s| s.iter().copied().collect()).collect()
    }

    fn strip3() -> Graph {
        Graph::from_cliques(5, &[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5]]).unwrap()
    }

    fn four_triangles() -> Graph {
        Graph::from_cliques(6, &[&[1, 2, 3], &[2, 3, 5], &[2, 4, 5], &[3, 5, 6]]).unwrap()
    }

    fn brute_minimal(g: &Graph) -> Vec<VertexSet> {
        let n = g.n();
        let c = g.component_count();
        let cuts: Vec<VertexSet> = (0u64..1 << n)
            .map(VertexSet::from_mask)
            .filter(|t| g.component_count_without(t) > c)
            .collect();
        let mut out: Vec<VertexSet> = cuts
            .iter()
            .filter(|t| !cuts.iter().any(|s| s != *t && s.is_subset(t)))
            .cloned()
            .collect();
        out.sort();
        out
    }

    #[test]
    fn fixture_cut_sets() {
        assert_eq!(minimal_cut_sets(&strip3()), sets(&[&[2, 3], &[3, 4]]));
        assert_eq!(
            minimal_cut_sets(&four_triangles()),
            sets(&[&[2, 3], &[2, 5], &[3, 5]])
        );
        assert!(minimal_cut_sets(&Graph::complete(5)).is_empty());
        assert_eq!(minimal_cut_sets(&strip3()), brute_minimal(&strip3()));
        assert_eq!(
            minimal_cut_sets(&four_triangles()),
            brute_minimal(&four_triangles())
        );
    }

    #[test]
    fn agrees_with_brute_force_on_small_graphs() {
        let graphs = [
            Graph::path(5),
            Graph::cycle(6),
            Graph::star(4),
            Graph::cycle(5).with_edges([(1, 3)]),
            Graph::path(3).disjoint_union(&Graph::cycle(4)),
            Graph::empty(3),
            Graph::from_edges(
                7,
                [(1, 2), (2, 3), (3, 4), (4, 1), (4, 5), (5, 6), (6, 7), (7, 5)],
            )
            .unwrap(),
        ];
        for g in &graphs {
            assert_eq!(minimal_cut_sets(g), brute_minimal(g), "{g:?}");
        }
    }

    #[test]
    fn gbg_fast_path() {
        let shared = Graph::from_cliques(4, &[&[1, 2, 3], &[2, 3, 4]]).unwrap();
        let cc = CliqueComplex::of(&shared);
        assert_eq!(minimal_cut_sets_gbg(&shared, &cc).unwrap(), sets(&[&[2, 3]]));

        let bowtie = Graph::from_cliques(5, &[&[1, 2, 3], &[3, 4, 5]]).unwrap();
        let cc = CliqueComplex::of(&bowtie);
        assert_eq!(minimal_cut_sets_gbg(&bowtie, &cc).unwrap(), sets(&[&[3]]));

        let chain = Graph::from_cliques(7, &[&[1, 2, 3], &[3, 4, 5], &[5, 6, 7]]).unwrap();
        let cc = CliqueComplex::of(&chain);
        assert_eq!(minimal_cut_sets_gbg(&chain, &cc).unwrap(), sets(&[&[3], &[5]]));

        let cc = CliqueComplex::of(&strip3());
        assert_eq!(minimal_cut_sets_gbg(&strip3(), &cc), Err(Error::NotGbg));
    }

    #[test]
    fn cut_point_families() {
        assert_eq!(
            cut_point_sets(&strip3(), None).unwrap(),
            sets(&[&[], &[2, 3], &[3, 4]])
        );
        assert_eq!(cut_point_sets(&Graph::complete(3), None).unwrap(), sets(&[&[]]));
        assert_eq!(cut_point_sets(&Graph::path(3), None).unwrap(), sets(&[&[], &[2]]));
        for t in cut_point_sets(&four_triangles(), None).unwrap() {
            assert!(has_cut_point_property(&four_triangles(), &t));
        }
        assert!(matches!(
            cut_point_sets(&Graph::path(17), None),
            Err(Error::ResourceLimit(_))
        ));
        assert_eq!(cut_point_sets(&Graph::path(17), Some(17)).unwrap().len(), 1597);
    }

    #[test]
    fn prime_descriptions() {
        let d = minimal_prime_description(&strip3(), &VertexSet::from([2, 3])).unwrap();
        assert_eq!(d.variables, ["x_2", "y_2", "x_3", "y_3"]);
        assert_eq!(d.components, sets(&[&[1], &[4, 5]]));
        assert_eq!(d.generators.last().unwrap(), "x_4y_5-x_5y_4");

        let d = minimal_prime_description(&four_triangles(), &VertexSet::from([2, 3])).unwrap();
        assert_eq!(d.components, sets(&[&[1], &[4, 5, 6]]));

        let d = minimal_prime_description(&four_triangles(), &VertexSet::new()).unwrap();
        assert!(d.variables.is_empty());
        assert_eq!(d.components, sets(&[&[1, 2, 3, 4, 5, 6]]));

        assert_eq!(
            minimal_prime_description(&strip3(), &VertexSet::from([3])),
            Err(Error::NotCutPointSet(vec![3]))
        );
    }

    #[test]
    fn merging() {
        let g = strip3();
        assert_eq!(
            merge_at_cutset(&g, &VertexSet::from([2, 3])).unwrap(),
            g.with_edges([(1, 4)])
        );
        let bowtie = Graph::from_cliques(5, &[&[1, 2, 3], &[3, 4, 5]]).unwrap();
        assert_eq!(
            merge_at_cutset(&bowtie, &VertexSet::from([3])).unwrap(),
            Graph::complete(5)
        );
        let shared = Graph::from_cliques(4, &[&[1, 2, 3], &[2, 3, 4]]).unwrap();
        assert_eq!(
            merge_at_cutset(&shared, &VertexSet::from([2, 3])).unwrap(),
            Graph::complete(4)
        );
        assert_eq!(
            merge_at_cutset(&shared, &VertexSet::from([2])),
            Err(Error::NotMinimalCutSet(vec![2]))
        );
    }
}
