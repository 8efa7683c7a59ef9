use serde::Serialize;

use crate::chordal::{is_chordal, CliqueComplex};
use crate::error::{Error, Result};
use crate::graph::{Graph, Induced, VertexSet};

/// The decomposition of a chordal graph into indecomposable induced
/// subgraphs glued at vertices that are free in both sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    /// Vertex sets of the pieces, in original labels, sorted
    /// lexicographically. Isolated vertices form their own pieces.
    pub components: Vec<VertexSet>,
    pub glue_vertices: VertexSet,
}

impl Decomposition {
    pub fn is_indecomposable(&self) -> bool {
        self.glue_vertices.is_empty()
    }

    pub fn graphs(&self, g: &Graph) -> Vec<Induced> {
        self.components
            .iter()
            .map(|c| g.induced_subgraph(c).expect("piece of g"))
            .collect()
    }
}

/// Splits at every cut vertex lying in exactly two maximal cliques. Two
/// facets end up in the same piece exactly when they are linked by a chain
/// of facets sharing non-glue vertices.
pub fn decompose(g: &Graph) -> Result<Decomposition> {
    if !is_chordal(g).is_chordal() {
        return Err(Error::NotChordal);
    }
    let cc = CliqueComplex::of(g);
    let base = g.component_count();
    let glue: VertexSet = (1..=g.n())
        .filter(|&v| cc.clique_degree(v) == 2)
        .filter(|&v| g.component_count_without(&VertexSet::singleton(v)) > base)
        .collect();

    let r = cc.facets.len();
    let mut parent: Vec<usize> = (0..r).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..r {
        for j in i + 1..r {
            let shared = cc.facets[i].intersection(&cc.facets[j]);
            if !shared.difference(&glue).is_empty() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut pieces: Vec<VertexSet> = vec![VertexSet::new(); r];
    for i in 0..r {
        let root = find(&mut parent, i);
        pieces[root] = pieces[root].union(&cc.facets[i]);
    }
    let mut components: Vec<VertexSet> = pieces.into_iter().filter(|p| !p.is_empty()).collect();
    crate::chordal::sort_lex(&mut components);
    Ok(Decomposition {
        components,
        glue_vertices: glue,
    })
}
