//! Recognition and seeded generation of generalized block graphs.
//!
//! A chordal graph is a generalized block graph when any three maximal
//! cliques sharing a vertex meet pairwise in the same set. Block graphs are
//! the special case where all minimal cut sets are single vertices.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chordal::{is_chordal, maximal_cliques, Chordality};
use crate::cutset::cut_sets_from_facets;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Gbg,
    BlockGraph,
    ChordalNotGbg,
    NotChordal,
}

impl Verdict {
    /// True for generalized block graphs, block graphs included.
    pub fn is_gbg(self) -> bool {
        matches!(self, Verdict::Gbg | Verdict::BlockGraph)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// Three facets with a common vertex whose pairwise intersections differ.
    FacetTriple([VertexSet; 3]),
    ChordlessCycle(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GbgCertificate {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

impl GbgCertificate {
    /// Re-checks the witness against `g` from scratch.
    pub fn is_consistent_with(&self, g: &Graph) -> bool {
        match (&self.verdict, &self.witness) {
            (Verdict::NotChordal, Some(Witness::ChordlessCycle(c))) => is_chordless_cycle(g, c),
            (Verdict::ChordalNotGbg, Some(Witness::FacetTriple(t))) => {
                let facets = maximal_cliques(g);
                is_chordal(g).is_chordal()
                    && t.iter().all(|f| facets.contains(f))
                    && violates_triple(&t[0], &t[1], &t[2])
            }
            (Verdict::Gbg | Verdict::BlockGraph, None) => {
                let facets = maximal_cliques(g);
                let block = cut_sets_from_facets(&facets).iter().all(|a| a.len() == 1);
                first_violating_triple(&facets).is_none()
                    && is_chordal(g).is_chordal()
                    && block == (self.verdict == Verdict::BlockGraph)
            }
            _ => false,
        }
    }
}

fn is_chordless_cycle(g: &Graph, c: &[usize]) -> bool {
    let k = c.len();
    let distinct: VertexSet = c.iter().copied().collect();
    k >= 4
        && distinct.len() == k
        && (0..k).all(|i| {
            (i + 1..k).all(|j| {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                g.has_edge(c[i], c[j]) == consecutive
            })
        })
}

fn violates_triple(a: &VertexSet, b: &VertexSet, c: &VertexSet) -> bool {
    let ab = a.intersection(b);
    let ac = a.intersection(c);
    let bc = b.intersection(c);
    ab.intersects(c) && !(ab == ac && ac == bc)
}

/// Scans, vertex by vertex, the facets through each vertex for a triple
/// breaking the pairwise-intersection condition.
fn first_violating_triple(facets: &[VertexSet]) -> Option<[VertexSet; 3]> {
    let top = facets.iter().filter_map(VertexSet::last).max().unwrap_or(0);
    for v in 1..=top {
        let through: Vec<&VertexSet> = facets.iter().filter(|f| f.contains(v)).collect();
        if through.len() < 3 {
            continue;
        }
        let first = through[0].intersection(through[1]);
        let uniform = through
            .iter()
            .enumerate()
            .all(|(i, a)| through[i + 1..].iter().all(|b| a.intersection(b) == first));
        if uniform {
            continue;
        }
        for i in 0..through.len() {
            for j in i + 1..through.len() {
                for k in j + 1..through.len() {
                    if violates_triple(through[i], through[j], through[k]) {
                        return Some([through[i].clone(), through[j].clone(), through[k].clone()]);
                    }
                }
            }
        }
    }
    None
}

pub fn classify_graph(g: &Graph) -> GbgCertificate {
    if let Chordality::NotChordal { cycle } = is_chordal(g) {
        return GbgCertificate {
            verdict: Verdict::NotChordal,
            witness: Some(Witness::ChordlessCycle(cycle)),
        };
    }
    let facets = maximal_cliques(g);
    if let Some(triple) = first_violating_triple(&facets) {
        return GbgCertificate {
            verdict: Verdict::ChordalNotGbg,
            witness: Some(Witness::FacetTriple(triple)),
        };
    }
    let verdict = if cut_sets_from_facets(&facets).iter().all(|a| a.len() == 1) {
        Verdict::BlockGraph
    } else {
        Verdict::Gbg
    };
    GbgCertificate {
        verdict,
        witness: None,
    }
}

/// Output of [`random_gbg`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RandomGbg {
    pub graph: Graph,
    /// Set when the output happens to be a star `K_{1,m}`.
    pub is_star: bool,
}

/// Generates a connected generalized block graph with `facet_count` maximal
/// cliques of size at most `max_clique`, deterministically from `seed`.
///
/// Starting from one clique, each step either glues a clique of fresh
/// vertices along an existing junction, or picks a new junction `A` inside
/// an existing facet `F` (with `A ≠ F` and `A` disjoint from all earlier
/// junctions) and glues a fresh clique along it. Junctions stay pairwise
/// disjoint, which keeps the intersection condition satisfied. Vertex labels
/// are shuffled at the end so that label-sensitive code sees varied inputs.
/// The generator is ChaCha8 seeded with `seed`.
pub fn random_gbg(seed: u64, facet_count: usize, max_clique: usize) -> Result<RandomGbg> {
    if facet_count == 0 {
        return Err(Error::InvalidParameter("facet count must be at least 1".into()));
    }
    if max_clique < 2 {
        return Err(Error::InvalidParameter(
            "max clique size must be at least 2".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut next = 1usize;
    let mut fresh = |k: usize| {
        let out: Vec<usize> = (next..next + k).collect();
        next += k;
        out
    };

    let mut facets: Vec<Vec<usize>> = vec![fresh(rng.gen_range(2..=max_clique))];
    let mut junctions: Vec<Vec<usize>> = Vec::new();
    let mut used = VertexSet::new();

    while facets.len() < facet_count {
        let open: Vec<(usize, Vec<usize>)> = facets
            .iter()
            .enumerate()
            .map(|(i, f)| {
                (
                    i,
                    f.iter()
                        .copied()
                        .filter(|v| !used.contains(*v))
                        .collect::<Vec<_>>(),
                )
            })
            .filter(|(i, avail)| !avail.is_empty() && facets[*i].len() >= 2)
            .collect();
        let reuse = !junctions.is_empty() && (open.is_empty() || rng.gen_bool(0.5));
        let junction = if reuse {
            junctions[rng.gen_range(0..junctions.len())].clone()
        } else {
            let (i, avail) = &open[rng.gen_range(0..open.len())];
            let size = rng.gen_range(1..=avail.len().min(facets[*i].len() - 1));
            let mut a: Vec<usize> = avail.choose_multiple(&mut rng, size).copied().collect();
            a.sort_unstable();
            for &v in &a {
                used.insert(v);
            }
            junctions.push(a.clone());
            a
        };
        let extra = rng.gen_range(1..=max_clique - junction.len());
        let mut clique = junction;
        clique.extend(fresh(extra));
        facets.push(clique);
    }

    let n = next - 1;
    let mut perm: Vec<usize> = (1..=n).collect();
    perm.shuffle(&mut rng);
    let cliques: Vec<&[usize]> = facets.iter().map(Vec::as_slice).collect();
    let graph = Graph::from_cliques(n, &cliques)?.relabel(&perm)?;
    let is_star = graph.is_star();
    Ok(RandomGbg { graph, is_star })
}
