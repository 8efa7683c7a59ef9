//! Combined reports shared by the command line and the C interface.

use std::fmt::Write as _;

use serde::Serialize;

use crate::gbg::{classify_graph, GbgCertificate};
use crate::graph::{Graph, VertexSet};
use crate::invariants::{
    bounds_report, classify_unique_extremal, decompose, extremal_prediction, invariant_report, BoundsReport,
    ExtremalPrediction, InvariantReport, UniqueExtremal,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Analysis {
    pub invariants: InvariantReport,
    pub bounds: BoundsReport,
    /// Absent for graphs that are not generalized block graphs.
    pub extremal_prediction: Option<ExtremalPrediction>,
    pub unique_extremal: Option<UniqueExtremal>,
    pub certificate: GbgCertificate,
}

pub fn analyze(g: &Graph) -> Analysis {
    let invariants = invariant_report(g);
    let bounds = bounds_report(g, &invariants);
    Analysis {
        extremal_prediction: extremal_prediction(g).ok(),
        unique_extremal: classify_unique_extremal(g).ok(),
        certificate: classify_graph(g),
        invariants,
        bounds,
    }
}

fn opt<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(|| "-".into(), |v| v.to_string())
}

impl Analysis {
    pub fn to_table_string(&self) -> String {
        let r = &self.invariants;
        let b = &self.bounds;
        let mut s = String::new();
        let _ = writeln!(s, "verdict        {:?}", self.certificate.verdict);
        let _ = writeln!(s, "n              {}", r.n);
        let _ = writeln!(s, "components     {}", r.c_g);
        let _ = writeln!(s, "omega          {}", r.omega);
        let a: Vec<String> = r.a.iter().map(|(i, v)| format!("a_{i}={v}")).collect();
        let _ = writeln!(s, "cut sets       m={} {}", r.m, a.join(" "));
        let _ = writeln!(s, "pd formula     {}", opt(r.p));
        let _ = writeln!(s, "free/internal  {}/{}", r.f, r.iv);
        let _ = writeln!(s, "cl             {}", r.cl);
        let _ = writeln!(s, "alpha          {}", r.alpha_type1);
        let _ = writeln!(s, "pv             {}", r.pv);
        let _ = writeln!(s, "ell            {}", opt(r.ell));
        for (name, bound) in [
            ("lower_mm", b.lower_mm),
            ("lower_gbg", b.lower_gbg),
            ("upper_general", b.upper_general),
            ("upper_cl", b.upper_cl),
            ("upper_improved", b.upper_improved),
            ("exact_reg", b.exact_reg),
        ] {
            let shown = if bound.applicable {
                opt(bound.value)
            } else {
                "n/a".into()
            };
            let _ = writeln!(s, "{name:<15}{shown}");
        }
        if let Some(p) = &self.extremal_prediction {
            let _ = writeln!(
                s,
                "extremal       beta_{},{} = {}",
                p.position.0,
                p.position.1,
                opt(p.value)
            );
        }
        if let Some(u) = &self.unique_extremal {
            let _ = writeln!(s, "unique         {}", if u.unique { "yes" } else { "no" });
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub indecomposable: bool,
    pub glue_vertices: VertexSet,
    /// Vertex sets of the pieces together with their edges in original labels.
    pub pieces: Vec<Piece>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Piece {
    pub vertices: VertexSet,
    pub edges: Vec<(usize, usize)>,
}

pub fn decomposition_report(g: &Graph) -> crate::Result<DecompositionReport> {
    let d = decompose(g)?;
    let pieces = d
        .graphs(g)
        .into_iter()
        .zip(&d.components)
        .map(|(ind, vs)| Piece {
            vertices: vs.clone(),
            edges: ind
                .graph
                .edges()
                .iter()
                .map(|&(u, v)| (ind.original(u), ind.original(v)))
                .collect(),
        })
        .collect();
    Ok(DecompositionReport {
        indecomposable: d.is_indecomposable(),
        glue_vertices: d.glue_vertices.clone(),
        pieces,
    })
}

impl DecompositionReport {
    pub fn to_table_string(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{} piece(s), glue vertices {}",
            self.pieces.len(),
            self.glue_vertices
        );
        for p in &self.pieces {
            let _ = writeln!(s, "{} edges {:?}", p.vertices, p.edges);
        }
        s
    }
}
