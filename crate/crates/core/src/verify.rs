//! Runs the combinatorial predictions against the Betti oracle.

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Result;
use crate::graph::{Graph, GraphJson};
use crate::invariants::{
    bounds_report, classify_unique_extremal, decompose, extremal_prediction, invariant_report,
};
use crate::oracle::{betti_polynomial_product, oracle_summary, OracleConfig, OracleSummary};

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum CheckStatus {
    Pass {
        #[serde(skip_serializing_if = "Value::is_null")]
        detail: Value,
    },
    Fail {
        witness: FailureWitness,
    },
    Skipped {
        reason: String,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FailureWitness {
    pub graph: GraphJson,
    pub expected: Value,
    pub actual: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: &'static str,
    #[serde(flatten)]
    pub status: CheckStatus,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationOutcome {
    pub oracle: OracleSummary,
    pub checks: Vec<Check>,
}

impl VerificationOutcome {
    pub fn all_passed(&self) -> bool {
        !self
            .checks
            .iter()
            .any(|c| matches!(c.status, CheckStatus::Fail { .. }))
    }

    pub fn check(&self, name: &str) -> Option<&CheckStatus> {
        self.checks.iter().find(|c| c.name == name).map(|c| &c.status)
    }
}

struct Checker<'a> {
    g: &'a Graph,
    checks: Vec<Check>,
}

impl Checker<'_> {
    fn compare<T: Serialize + PartialEq>(&mut self, name: &'static str, expected: T, actual: T) {
        let status = if expected == actual {
            CheckStatus::Pass {
                detail: json!(actual),
            }
        } else {
            CheckStatus::Fail {
                witness: FailureWitness {
                    graph: self.g.to_json(),
                    expected: json!(expected),
                    actual: json!(actual),
                },
            }
        };
        self.checks.push(Check { name, status });
    }

    fn skip(&mut self, name: &'static str, reason: &str) {
        self.checks.push(Check {
            name,
            status: CheckStatus::Skipped {
                reason: reason.into(),
            },
        });
    }
}

const NOT_GBG: &str = "not a generalized block graph";

pub fn verify_graph(g: &Graph, config: &OracleConfig) -> Result<VerificationOutcome> {
    let oracle = oracle_summary(g, config)?;
    let report = invariant_report(g);
    let bounds = bounds_report(g, &report);
    let mut c = Checker {
        g,
        checks: Vec::new(),
    };

    match report.p {
        Some(p) if report.gbg => c.compare("pd-formula", p, oracle.pd),
        _ => c.skip("pd-formula", NOT_GBG),
    }

    if report.gbg {
        let prediction = extremal_prediction(g)?;
        let (i, j) = prediction.position;
        let at = oracle.table.get(i, j);
        let extremal = oracle.extremal.iter().any(|&(r, s, _)| (r, s) == (i, j));
        c.compare(
            "extremal-position",
            json!({"position": [i, j], "extremal": true}),
            json!({"position": [i, j], "extremal": extremal && at != 0}),
        );
        match prediction.value {
            Some(v) => c.compare("extremal-value", v as u64, at),
            None => c.skip(
                "extremal-value",
                "some piece has an internal vertex in exactly two maximal cliques",
            ),
        }
        let classifier = classify_unique_extremal(g)?;
        let expected = json!({"unique": classifier.unique, "reg": classifier.exact_reg});
        let actual = json!({
            "unique": oracle.unique_extremal,
            "reg": classifier.exact_reg.map(|_| oracle.reg),
        });
        c.compare("unique-classifier", expected, actual);
    } else {
        c.skip("extremal-position", NOT_GBG);
        c.skip("extremal-value", NOT_GBG);
        c.skip("unique-classifier", NOT_GBG);
    }

    // every applicable bound, lower and upper, against the oracle regularity
    let reg = oracle.reg;
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    for (name, b, is_lower) in [
        ("lower_mm", bounds.lower_mm, true),
        ("lower_gbg", bounds.lower_gbg, true),
        ("upper_general", bounds.upper_general, false),
        ("upper_cl", bounds.upper_cl, false),
        ("upper_improved", bounds.upper_improved, false),
    ] {
        if let (true, Some(v)) = (b.applicable, b.value) {
            if is_lower { &mut lower } else { &mut upper }.push((name, v));
        }
    }
    let held = lower.iter().all(|&(_, v)| v <= reg) && upper.iter().all(|&(_, v)| reg <= v);
    let sandwich = json!({
        "lower": lower.iter().map(|&(n, v)| (n, v)).collect::<std::collections::BTreeMap<_, _>>(),
        "upper": upper.iter().map(|&(n, v)| (n, v)).collect::<std::collections::BTreeMap<_, _>>(),
        "reg": reg,
    });
    if held {
        c.checks.push(Check {
            name: "bounds-sandwich",
            status: CheckStatus::Pass { detail: sandwich },
        });
    } else {
        c.compare("bounds-sandwich", json!("all bounds hold"), sandwich);
    }

    match decompose(g) {
        Ok(d) => {
            let pieces: Vec<Graph> = d
                .graphs(g)
                .into_iter()
                .map(|p| p.graph)
                .filter(|h| h.n() >= 2)
                .collect();
            if pieces.len() < 2 {
                c.skip("betti-product", "fewer than two nontrivial pieces");
            } else {
                let tables = pieces
                    .iter()
                    .map(|h| oracle_summary(h, config).map(|s| s.table))
                    .collect::<Result<Vec<_>>>()?;
                let product = betti_polynomial_product(&tables);
                let data = |reg: usize, pd: usize, ext: &[(usize, usize, u64)]| json!({"reg": reg, "pd": pd, "extremal": ext});
                c.compare(
                    "betti-product",
                    data(product.reg(), product.pd(), &product.extremal()),
                    data(oracle.reg, oracle.pd, &oracle.extremal),
                );
                if let Some(Check {
                    status: CheckStatus::Pass { detail },
                    ..
                }) = c.checks.last_mut()
                {
                    detail["full_table_match"] = json!(product == oracle.table);
                }
            }
        }
        Err(_) => c.skip("betti-product", "decomposition needs a chordal graph"),
    }

    Ok(VerificationOutcome {
        oracle,
        checks: c.checks,
    })
}
