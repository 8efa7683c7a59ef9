//! Exact Betti tables of `S/in(J_G)` through the admissible-path Gröbner
//! basis and Hochster's formula. The initial ideal is squarefree, so its
//! regularity, projective dimension and extremal Betti numbers agree with
//! those of `S/J_G`.

mod hochster;
pub mod linalg;
mod paths;
mod table;

pub use hochster::{betti_table, FieldChoice, OracleConfig, DEFAULT_MAX_VARS};
pub use paths::{
    admissible_paths, initial_ideal, monomial_string, AdmissiblePath, MonomialIdeal, RingVariable,
};
pub use table::{betti_polynomial_product, BettiTable};

use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleSummary {
    pub reg: usize,
    pub pd: usize,
    pub extremal: Vec<(usize, usize, u64)>,
    pub unique_extremal: bool,
    #[serde(skip)]
    pub table: BettiTable,
}

pub fn oracle_summary(g: &Graph, config: &OracleConfig) -> Result<OracleSummary> {
    let table = betti_table(&initial_ideal(g), config)?;
    Ok(OracleSummary {
        reg: table.reg(),
        pd: table.pd(),
        extremal: table.extremal(),
        unique_extremal: table.has_unique_extremal(),
        table,
    })
}
