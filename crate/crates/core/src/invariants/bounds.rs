use serde::Serialize;

use super::{decompose, find_flower, invariant_report_with_cap, FlowerWitness, InvariantReport};
use crate::chordal::{free_and_internal_vertices, CliqueComplex};
use crate::error::{Error, Result};
use crate::gbg::classify_graph;
use crate::graph::Graph;

/// Components with at least one edge. Isolated vertices contribute nothing
/// to the Betti table, so several statements count only these.
fn nontrivial_components(g: &Graph) -> usize {
    g.connected_components().iter().filter(|c| c.len() >= 2).count()
}

fn require_gbg(g: &Graph) -> Result<()> {
    if classify_graph(g).verdict.is_gbg() {
        Ok(())
    } else {
        Err(Error::NotGbg)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UniqueExtremal {
    pub unique: bool,
    /// `m(G) + 1` for connected graphs; in general `m(G)` plus the number
    /// of components with an edge.
    pub exact_reg: Option<usize>,
    pub flower: Option<FlowerWitness>,
}

/// Decides whether `S/J_G` has a unique extremal Betti number: exactly
/// when no piece of the decomposition contains an induced flower.
pub fn classify_unique_extremal(g: &Graph) -> Result<UniqueExtremal> {
    require_gbg(g)?;
    let d = decompose(g)?;
    let flower = d.graphs(g).into_iter().find_map(|piece| {
        find_flower(&piece.graph).map(|mut w| {
            w.hub = piece.original(w.hub);
            for p in &mut w.petals {
                *p = match *p {
                    super::Petal::Triangle { a, b } => super::Petal::Triangle {
                        a: piece.original(a),
                        b: piece.original(b),
                    },
                    super::Petal::Star { c, x, y } => super::Petal::Star {
                        c: piece.original(c),
                        x: piece.original(x),
                        y: piece.original(y),
                    },
                };
            }
            w
        })
    });
    let m = crate::cutset::minimal_cut_sets(g).len();
    let unique = flower.is_none();
    Ok(UniqueExtremal {
        unique,
        exact_reg: unique.then(|| m + nontrivial_components(g)),
        flower,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalPrediction {
    /// `(p, p + m + 1)` for connected graphs; over several components the
    /// positions add up.
    pub position: (usize, usize),
    /// Product over the indecomposable pieces of `f - 1`, present when each
    /// piece is complete or has all internal vertices in more than two
    /// maximal cliques.
    pub value: Option<usize>,
    pub unique: bool,
}

pub fn extremal_prediction(g: &Graph) -> Result<ExtremalPrediction> {
    require_gbg(g)?;
    let unique = classify_unique_extremal(g)?.unique;
    let mut position = (0, 0);
    let mut value = Some(1usize);
    for piece in decompose(g)?.graphs(g) {
        let h = &piece.graph;
        if h.n() < 2 {
            continue;
        }
        let r = invariant_report_with_cap(h, 0);
        let p = r.p.expect("pieces of a GBG are GBGs");
        position = (position.0 + p, position.1 + p + r.m + 1);
        let cc = CliqueComplex::of(h);
        let roles = free_and_internal_vertices(h, &cc);
        let predicted = h.is_complete() || roles.internal.iter().all(|v| roles.cdeg[v - 1] > 2);
        value = match (value, predicted) {
            (Some(acc), true) => Some(acc * (r.f - 1)),
            _ => None,
        };
    }
    Ok(ExtremalPrediction {
        position,
        value,
        unique,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub value: Option<usize>,
    pub applicable: bool,
}

impl Bound {
    fn new(value: Option<usize>, applicable: bool) -> Self {
        Self {
            value,
            applicable: applicable && value.is_some(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    /// `ℓ(G)`, valid for every graph.
    pub lower_mm: Bound,
    /// `m(G)` plus the number of components with an edge.
    pub lower_gbg: Bound,
    pub upper_general: Bound,
    /// `cl(G)`, valid for chordal graphs.
    pub upper_cl: Bound,
    /// Sum over the pieces of the decomposition: 0 for an isolated vertex,
    /// 1 for a complete piece, 2 for a star, `cl + α - pv` otherwise.
    pub upper_improved: Bound,
    pub exact_reg: Bound,
}

/// `cl + α - pv` summed over decomposition pieces, with the special values
/// for complete graphs and stars.
pub fn improved_upper_bound(g: &Graph) -> Result<usize> {
    let d = decompose(g)?;
    let mut total: i64 = 0;
    for piece in d.graphs(g) {
        let h = &piece.graph;
        total += if h.n() == 1 {
            0
        } else if h.is_complete() {
            1
        } else if h.is_star() {
            2
        } else {
            let r = invariant_report_with_cap(h, 0);
            r.cl as i64 + r.alpha_type1 as i64 - r.pv as i64
        };
    }
    Ok(total.max(0) as usize)
}

pub fn bounds_report(g: &Graph, report: &InvariantReport) -> BoundsReport {
    let gbg = report.gbg;
    let exact = if gbg {
        classify_unique_extremal(g).ok().and_then(|u| u.exact_reg)
    } else {
        None
    };
    BoundsReport {
        lower_mm: Bound::new(report.ell, true),
        lower_gbg: Bound::new(Some(report.m + nontrivial_components(g)), gbg),
        upper_general: Bound::new(Some(g.n().saturating_sub(1)), true),
        upper_cl: Bound::new(Some(report.cl), report.chordal),
        upper_improved: Bound::new(
            report.chordal.then(|| improved_upper_bound(g).ok()).flatten(),
            gbg,
        ),
        exact_reg: Bound::new(exact, gbg),
    }
}

#[cfg(test)]
mod tests {
    use super::super::invariant_report;
    use super::*;

    fn flower30() -> Graph {
        Graph::from_cliques(7, &[&[1, 2, 3], &[1, 4, 5], &[1, 6, 7]]).unwrap()
    }

    fn flower03() -> Graph {
        Graph::from_edges(
            10,
            [
                (1, 2),
                (2, 3),
                (2, 4),
                (1, 5),
                (5, 6),
                (5, 7),
                (1, 8),
                (8, 9),
                (8, 10),
            ],
        )
        .unwrap()
    }

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
    fn unique_classifier() {
        let k = classify_unique_extremal(&Graph::complete(5)).unwrap();
        assert_eq!((k.unique, k.exact_reg), (true, Some(1)));
        let f = classify_unique_extremal(&flower30()).unwrap();
        assert_eq!((f.unique, f.exact_reg), (false, None));
        let p = classify_unique_extremal(&Graph::path(4)).unwrap();
        assert_eq!(p.exact_reg, Some(3));
        let t = classify_unique_extremal(&tree14()).unwrap();
        assert!(!t.unique);
        assert!(t.flower.unwrap().is_induced_in(&tree14()));
        let strip3 = Graph::from_cliques(5, &[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5]]).unwrap();
        assert_eq!(classify_unique_extremal(&strip3), Err(Error::NotGbg));
    }

    #[test]
    fn predictions() {
        let k4 = extremal_prediction(&Graph::complete(4)).unwrap();
        assert_eq!((k4.position, k4.value), ((3, 4), Some(3)));
        let f = extremal_prediction(&flower30()).unwrap();
        assert_eq!((f.position, f.value, f.unique), ((6, 8), Some(5), false));
        let shared = Graph::from_cliques(4, &[&[1, 2, 3], &[2, 3, 4]]).unwrap();
        let s = extremal_prediction(&shared).unwrap();
        assert_eq!((s.position, s.value), ((4, 6), None));
        // K_3 plus an isolated vertex behaves like K_3
        let padded = Graph::complete(3).disjoint_union(&Graph::empty(1));
        assert_eq!(extremal_prediction(&padded).unwrap().position, (2, 3));
        assert_eq!(extremal_prediction(&padded).unwrap().value, Some(2));
        // two triangles glued at a vertex: pieces K_3 and K_3
        let bowtie = Graph::from_cliques(5, &[&[1, 2, 3], &[3, 4, 5]]).unwrap();
        let b = extremal_prediction(&bowtie).unwrap();
        assert_eq!((b.position, b.value), ((4, 6), Some(4)));
    }

    #[test]
    fn bounds() {
        let g = tree14();
        let b = bounds_report(&g, &invariant_report(&g));
        assert_eq!(b.upper_improved.value, Some(9));
        assert_eq!(b.lower_gbg.value, Some(7));
        assert_eq!(
            b.exact_reg,
            Bound {
                value: None,
                applicable: false
            }
        );

        let g = flower03();
        let r = invariant_report(&g);
        assert_eq!((r.cl, r.alpha_type1, r.pv, r.m), (9, 3, 6, 4));
        assert_eq!(bounds_report(&g, &r).upper_improved.value, Some(6));

        let p4 = Graph::path(4);
        let b = bounds_report(&p4, &invariant_report(&p4));
        assert_eq!(b.exact_reg.value, Some(3));
        assert_eq!(b.upper_improved.value, Some(3));
        assert_eq!(b.lower_mm.value, Some(3));

        let four_triangles =
            Graph::from_cliques(6, &[&[1, 2, 3], &[2, 3, 5], &[2, 4, 5], &[3, 5, 6]]).unwrap();
        let b = bounds_report(&four_triangles, &invariant_report(&four_triangles));
        assert!(!b.lower_gbg.applicable && !b.upper_improved.applicable);
        assert!(b.upper_cl.applicable && b.lower_mm.applicable);
        assert_eq!((b.lower_mm.value, b.upper_general.value), (Some(3), Some(5)));
    }
}
