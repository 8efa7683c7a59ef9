//! Graded Betti numbers of `S/I` for a squarefree monomial ideal `I`.
//!
//! With `Δ` the Stanley–Reisner complex of `I`, `β_{i,W} = dim H̃_{|W|-i-1}(Δ|_W)`
//! for every subset `W` of the variables. Only `W` that are unions of
//! generators can contribute: a variable of `W` outside every generator
//! inside `W` is a cone point of `Δ|_W`. For each such `W` the smaller of
//! `Δ|_W` and its Alexander dual `{F ⊆ W : W \ F contains a generator}` is
//! built; for the dual, `β_{i,W} = dim H̃_{i-2}`.

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::linalg::{reduced_homology, reduced_homology_rational, PrimeField};
use super::paths::MonomialIdeal;
use super::table::BettiTable;
use crate::error::{Error, Result};

pub const DEFAULT_MAX_VARS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldChoice {
    Rational,
    Prime(u64),
}

impl FieldChoice {
    /// `0` is characteristic zero; anything else must be a prime below `2^32`.
    pub fn from_characteristic(c: u64) -> Result<Self> {
        if c == 0 {
            return Ok(FieldChoice::Rational);
        }
        let prime = (2..1 << 32).contains(&c) && (2..).take_while(|d| d * d <= c).all(|d| c % d != 0);
        if prime {
            Ok(FieldChoice::Prime(c))
        } else {
            Err(Error::InvalidParameter(format!(
                "characteristic {c} is not 0 or a prime below 2^32"
            )))
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldChoice::Rational => 0,
            FieldChoice::Prime(p) => p,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub field: FieldChoice,
    pub max_vars: usize,
    pub prune: bool,
    pub time_limit: Option<Duration>,
    /// Maximum number of subsets `W` whose homology is computed.
    pub subset_limit: Option<u64>,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            field: FieldChoice::Rational,
            max_vars: DEFAULT_MAX_VARS,
            prune: true,
            time_limit: None,
            subset_limit: None,
        }
    }
}

/// Downward-closed family of subsets of `w`, bucketed by size and sorted.
/// `member(face, v)` says whether `face ∪ {v}` stays in the family given
/// that `face` is in it. Returns `None` once more than `limit` faces exist.
fn enumerate_faces(w: u64, limit: usize, member: &impl Fn(u64, u32) -> bool) -> Option<Vec<Vec<u64>>> {
    let mut faces: Vec<Vec<u64>> = vec![vec![0]];
    let mut count = 1usize;
    let mut stack: Vec<u64> = vec![0];
    while let Some(face) = stack.pop() {
        // extend only by vertices above the current maximum
        let above = if face == 0 {
            w
        } else {
            w & !((1u64 << (63 - face.leading_zeros())) << 1).wrapping_sub(1)
        };
        let mut rest = above;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            if member(face, v) {
                let next = face | 1 << v;
                let k = next.count_ones() as usize;
                if faces.len() <= k {
                    faces.push(Vec::new());
                }
                faces[k].push(next);
                count += 1;
                if count > limit {
                    return None;
                }
                stack.push(next);
            }
        }
    }
    for bucket in &mut faces {
        bucket.sort_unstable();
    }
    Some(faces)
}

fn homology(field: FieldChoice, faces: &[Vec<u64>]) -> Vec<usize> {
    match field {
        FieldChoice::Rational => reduced_homology_rational(faces),
        FieldChoice::Prime(p) => {
            reduced_homology(&PrimeField::new(p), faces).expect("modular arithmetic never overflows")
        }
    }
}

/// Contributions `(i, β_{i,W})` of a single subset `W`.
fn subset_betti(ideal_gens: &[u64], w: u64, field: FieldChoice, dual_allowed: bool) -> Vec<(usize, u64)> {
    let size = w.count_ones() as usize;
    if w == 0 {
        return vec![(0, 1)];
    }
    let inside: Vec<u64> = ideal_gens.iter().copied().filter(|&g| g & !w == 0).collect();
    let in_delta = |face: u64, v: u32| {
        let f = face | 1 << v;
        !inside.iter().any(|&g| g & (1 << v) != 0 && g & !f == 0)
    };
    let limit = if dual_allowed && size >= 2 {
        1usize << (size - 1)
    } else {
        usize::MAX
    };
    let mut out = Vec::new();
    if let Some(faces) = enumerate_faces(w, limit, &in_delta) {
        // entry k is H̃_{k-1}; β_{i,W} sits at dimension |W| - i - 1
        for (k, &h) in homology(field, &faces).iter().enumerate() {
            if h > 0 && size >= k {
                out.push((size - k, h as u64));
            }
        }
        return out;
    }
    let in_dual = |face: u64, v: u32| {
        let f = face | 1 << v;
        inside.iter().any(|&g| g & f == 0)
    };
    let faces = enumerate_faces(w, usize::MAX, &in_dual).expect("no limit");
    for (k, &h) in homology(field, &faces).iter().enumerate() {
        // H̃_{k-1} of the dual is H̃_{i-2}, so i = k + 1
        if h > 0 {
            out.push((k + 1, h as u64));
        }
    }
    out
}

/// Subsets that are unions of the generators they contain.
fn candidate_subsets(gens: &[u64], vars: usize) -> Vec<u64> {
    let support = gens.iter().fold(0u64, |a, &g| a | g);
    (0u64..1 << vars)
        .into_par_iter()
        .filter(|&w| w & !support == 0 && gens.iter().filter(|&&g| g & !w == 0).fold(0, |a, &g| a | g) == w)
        .collect()
}

pub fn betti_table(ideal: &MonomialIdeal, config: &OracleConfig) -> Result<BettiTable> {
    let vars = ideal.variable_count();
    if vars > config.max_vars || vars > 63 {
        return Err(Error::ResourceLimit(format!(
            "{vars} ring variables exceed the cap of {}",
            config.max_vars.min(63)
        )));
    }
    let gens = ideal.generators();
    let subsets: Vec<u64> = if config.prune {
        candidate_subsets(gens, vars)
    } else {
        (0u64..1 << vars).collect()
    };
    if let Some(limit) = config.subset_limit {
        if subsets.len() as u64 > limit {
            return Err(Error::ResourceLimit(format!(
                "{} subsets exceed the limit of {limit}",
                subsets.len()
            )));
        }
    }
    let deadline = config.time_limit.map(|t| Instant::now() + t);
    let expired = AtomicBool::new(false);
    let per_subset: Vec<Vec<(usize, u64)>> = subsets
        .par_iter()
        .map(|&w| {
            if expired.load(Ordering::Relaxed) {
                return Vec::new();
            }
            if deadline.is_some_and(|d| Instant::now() > d) {
                expired.store(true, Ordering::Relaxed);
                return Vec::new();
            }
            subset_betti(gens, w, config.field, config.prune)
        })
        .collect();
    if expired.load(Ordering::Relaxed) {
        return Err(Error::ResourceLimit(format!(
            "time limit of {:?} exceeded",
            config.time_limit.unwrap_or_default()
        )));
    }
    let mut table = BettiTable::default();
    for (w, contributions) in subsets.iter().zip(per_subset) {
        let j = w.count_ones() as usize;
        for (i, v) in contributions {
            table.add(i, j, v);
        }
    }
    Ok(table)
}
