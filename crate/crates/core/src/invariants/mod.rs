//! Scalar invariants of a graph and the results built on them: the
//! decomposition into indecomposable pieces, induced flowers, the
//! unique-extremal classifier, extremal Betti predictions and regularity
//! bounds.

mod bounds;
mod decompose;
mod flower;

pub use bounds::{
    bounds_report, classify_unique_extremal, extremal_prediction, improved_upper_bound, Bound, BoundsReport,
    ExtremalPrediction, UniqueExtremal,
};
pub use decompose::{decompose, Decomposition};
pub use flower::{find_flower, FlowerWitness, Petal};

use std::collections::BTreeMap;

use serde::Serialize;

use crate::chordal::{branches, free_and_internal_vertices, CliqueComplex};
use crate::cutset::minimal_cut_sets;
use crate::error::{Error, Result};
use crate::gbg::{classify_graph, Verdict};
use crate::graph::{Graph, VertexSet};

/// Default vertex cap for the exhaustive longest-induced-path search.
pub const DEFAULT_PATH_CAP: usize = 40;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub n: usize,
    pub c_g: usize,
    pub chordal: bool,
    pub gbg: bool,
    pub omega: usize,
    pub cl: usize,
    /// `a_i` for `1 <= i <= ω - 1`.
    pub a: BTreeMap<usize, usize>,
    pub m: usize,
    /// Projective dimension by the generalized block graph formula; absent
    /// for other graphs.
    pub p: Option<usize>,
    pub f: usize,
    pub iv: usize,
    pub pv: usize,
    pub alpha_type1: usize,
    pub k_pdeg: usize,
    /// Absent when the graph exceeds the search cap.
    pub ell: Option<usize>,
    pub cdeg: Vec<usize>,
    pub pdeg: Vec<usize>,
    pub deg: Vec<usize>,
    pub is_star: bool,
}

/// Number of pendant neighbors of each vertex, `pdeg[v - 1]`.
pub fn pendant_degrees(g: &Graph) -> Vec<usize> {
    (1..=g.n())
        .map(|v| g.neighbors(v).iter().filter(|&u| g.is_pendant(u)).count())
        .collect()
}

/// `a_i` counts by size, for `1 <= i < ω`.
pub fn cut_set_counts(cut_sets: &[VertexSet], omega: usize) -> BTreeMap<usize, usize> {
    let mut a: BTreeMap<usize, usize> = (1..omega).map(|i| (i, 0)).collect();
    for s in cut_sets {
        *a.entry(s.len()).or_default() += 1;
    }
    a
}

/// `n - c_G + Σ_{i >= 2} (i - 1) a_i`.
pub fn pd_formula(n: usize, c_g: usize, a: &BTreeMap<usize, usize>) -> usize {
    n - c_g + a.iter().map(|(i, ai)| (i - 1) * ai).sum::<usize>()
}

pub fn invariant_report(g: &Graph) -> InvariantReport {
    invariant_report_with_cap(g, DEFAULT_PATH_CAP)
}

pub fn invariant_report_with_cap(g: &Graph, path_cap: usize) -> InvariantReport {
    let n = g.n();
    let cert = classify_graph(g);
    let gbg = cert.verdict.is_gbg();
    let cc = CliqueComplex::of(g);
    let roles = free_and_internal_vertices(g, &cc);
    let cuts = minimal_cut_sets(g);
    let omega = cc.clique_number();
    let a = cut_set_counts(&cuts, omega);
    let c_g = g.component_count();
    let pdeg = pendant_degrees(g);
    let alpha = (1..=n)
        .filter(|&v| pdeg[v - 1] >= 1 && roles.cdeg[v - 1] == pdeg[v - 1] + 1)
        .count();
    InvariantReport {
        n,
        c_g,
        chordal: cert.verdict != Verdict::NotChordal,
        gbg,
        omega,
        cl: cc.facet_count(),
        m: cuts.len(),
        p: gbg.then(|| pd_formula(n, c_g, &a)),
        a,
        f: roles.free.len(),
        iv: roles.internal.len(),
        pv: (1..=n).filter(|&v| g.is_pendant(v)).count(),
        alpha_type1: alpha,
        k_pdeg: pdeg.iter().filter(|&&d| d >= 1).count(),
        ell: longest_induced_path(g, path_cap).ok(),
        cdeg: roles.cdeg,
        deg: (1..=n).map(|v| g.degree(v)).collect(),
        pdeg,
        is_star: g.is_star(),
    }
}

/// `ℓ(G)`: the number of edges of a longest induced path, by exhaustive
/// search over induced paths. Refuses graphs with more than `cap` vertices.
pub fn longest_induced_path(g: &Graph, cap: usize) -> Result<usize> {
    if g.n() > cap.min(64) {
        return Err(Error::ResourceLimit(format!(
            "induced path search is capped at {} vertices, graph has {}",
            cap.min(64),
            g.n()
        )));
    }
    let adj = g.adjacency_masks().expect("n <= 64");

    fn extend(adj: &[u64], last: usize, blocked: u64, len: usize, best: &mut usize) {
        *best = (*best).max(len);
        let closed = blocked | adj[last] | 1 << last;
        let mut next = adj[last] & !blocked;
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            extend(adj, w, closed | 1 << w, len + 1, best);
        }
    }

    let mut best = 0;
    for v in 0..g.n() {
        extend(&adj, v, 1 << v, 0, &mut best);
    }
    Ok(best)
}

/// The junction at the last leaf of a leaf order: `A = F_r ∩ ⋂ branches`,
/// together with the leaf and all its branches.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeafJunction {
    pub leaf: VertexSet,
    pub branches: Vec<VertexSet>,
    pub a: VertexSet,
}

/// Computes the [`LeafJunction`] of the leaf order produced by the chordal
/// engine. Absent for non-chordal graphs and single-facet complexes.
pub fn last_leaf_junction(g: &Graph) -> Option<LeafJunction> {
    let cc = CliqueComplex::of(g);
    let order = cc.leaf_order.as_ref()?;
    let (&last, _) = order.split_last()?;
    if order.len() < 2 {
        return None;
    }
    let bs = branches(&cc.facets, last, order);
    let leaf = cc.facets[last].clone();
    let a = bs
        .iter()
        .fold(leaf.clone(), |acc, &b| acc.intersection(&cc.facets[b]));
    Some(LeafJunction {
        leaf,
        branches: bs.iter().map(|&b| cc.facets[b].clone()).collect(),
        a,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tree14() -> Graph {
        Graph::from_edges(
            14,
            [
                (1, 2),
                (2, 3),
                (2, 4),
                (4, 5),
                (5, 6),
                (5, 7),
                (4, 8),
                (8, 9),
                (9, 10),
                (9, 11),
                (8, 12),
                (12, 13),
                (12, 14),
            ],
        )
        .unwrap()
    }

    #[test]
    fn tree_example() {
        let r = invariant_report(&tree14());
        assert_eq!((r.cl, r.alpha_type1, r.pv, r.m), (13, 4, 8, 6));
        assert_eq!(r.deg[3], 3);
        assert_eq!(r.p, Some(13));
        assert_eq!(r.ell, Some(5));
    }

    #[test]
    fn complete_and_shared_edge() {
        let r = invariant_report(&Graph::complete(5));
        assert_eq!((r.m, r.p, r.f, r.cl), (0, Some(4), 5, 1));
        let shared = Graph::from_cliques(4, &[&[1, 2, 3], &[2, 3, 4]]).unwrap();
        let r = invariant_report(&shared);
        assert_eq!(r.a.get(&2), Some(&1));
        assert_eq!((r.n, r.m, r.p), (4, 1, Some(4)));
    }

    #[test]
    fn non_gbg_has_no_formula_pd() {
        let strip3 = Graph::from_cliques(5, &[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5]]).unwrap();
        let r = invariant_report(&strip3);
        assert_eq!(r.p, None);
        assert_eq!(r.m, 2);
        assert!(r.chordal && !r.gbg);
    }

    #[test]
    fn induced_paths() {
        assert_eq!(longest_induced_path(&Graph::path(6), 40), Ok(5));
        assert_eq!(longest_induced_path(&Graph::complete(6), 40), Ok(1));
        let strip3 = Graph::from_cliques(5, &[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5]]).unwrap();
        // 1 - 2 - 4 - 5 is induced
        assert_eq!(longest_induced_path(&strip3, 40), Ok(3));
        assert_eq!(longest_induced_path(&Graph::cycle(7), 40), Ok(5));
        assert_eq!(longest_induced_path(&Graph::empty(3), 40), Ok(0));
        assert!(longest_induced_path(&Graph::path(41), 40).is_err());
    }

    #[test]
    fn leaf_junction_of_chain() {
        let g = Graph::from_cliques(7, &[&[1, 2, 3], &[3, 4, 5], &[5, 6, 7]]).unwrap();
        let j = last_leaf_junction(&g).unwrap();
        assert_eq!(j.a.len(), 1);
        assert_eq!(j.branches.len(), 1);
        assert!(last_leaf_junction(&Graph::complete(3)).is_none());
    }
}
