use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

/// Graded Betti numbers `β_{i,j}` of `S/I`, nonzero entries only.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
}

#[derive(Serialize)]
struct TableJson {
    betti: Vec<(usize, usize, u64)>,
    reg: usize,
    pd: usize,
    extremal: Vec<(usize, usize, u64)>,
}

impl BettiTable {
    /// The table of `S/S`: only `β_{0,0} = 1`.
    pub fn trivial() -> Self {
        Self::from_entries([((0, 0), 1)])
    }

    pub fn from_entries(entries: impl IntoIterator<Item = ((usize, usize), u64)>) -> Self {
        Self {
            entries: entries.into_iter().filter(|&(_, v)| v != 0).collect(),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.entries
    }

    pub(crate) fn add(&mut self, i: usize, j: usize, v: u64) {
        if v != 0 {
            *self.entries.entry((i, j)).or_insert(0) += v;
        }
    }

    pub fn pd(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn reg(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    /// Nonzero `β_{i,j}` with `β_{r,s} = 0` for every other `(r, s)` with
    /// `r >= i` and `s - r >= j - i`.
    pub fn extremal(&self) -> Vec<(usize, usize, u64)> {
        self.entries
            .iter()
            .filter(|&(&(i, j), _)| {
                !self
                    .entries
                    .keys()
                    .any(|&(r, s)| (r, s) != (i, j) && r >= i && s - r >= j - i)
            })
            .map(|(&(i, j), &v)| (i, j, v))
            .collect()
    }

    pub fn has_unique_extremal(&self) -> bool {
        self.extremal().len() == 1
    }

    /// The table of a tensor product: Betti polynomials multiply.
    pub fn product(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (&(i, j), &a) in &self.entries {
            for (&(r, s), &b) in &other.entries {
                out.add(i + r, j + s, a * b);
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(TableJson {
            betti: self.entries.iter().map(|(&(i, j), &v)| (i, j, v)).collect(),
            reg: self.reg(),
            pd: self.pd(),
            extremal: self.extremal(),
        })
        .expect("plain data serializes")
    }

    /// Macaulay2-style display: columns are homological degrees, rows are
    /// `j - i`, zeros shown as `.`.
    pub fn to_table_string(&self) -> String {
        let pd = self.pd();
        let reg = self.reg();
        let cell = |i: usize, r: usize| match self.get(i, i + r) {
            0 => ".".to_string(),
            v => v.to_string(),
        };
        let width = (0..=pd)
            .flat_map(|i| (0..=reg).map(move |r| (i, r)))
            .map(|(i, r)| cell(i, r).len().max(i.to_string().len()))
            .max()
            .unwrap_or(1);
        let label = format!("{reg}:").len().max("total:".len());
        let mut s = String::new();
        let _ = write!(s, "{:>label$}", "");
        for i in 0..=pd {
            let _ = write!(s, " {i:>width$}");
        }
        s.push('\n');
        let _ = write!(s, "{:>label$}", "total:");
        for i in 0..=pd {
            let t: u64 = self
                .entries
                .iter()
                .filter(|(k, _)| k.0 == i)
                .map(|(_, v)| v)
                .sum();
            let _ = write!(s, " {t:>width$}");
        }
        s.push('\n');
        for r in 0..=reg {
            let _ = write!(s, "{:>label$}", format!("{r}:"));
            for i in 0..=pd {
                let _ = write!(s, " {:>width$}", cell(i, r));
            }
            s.push('\n');
        }
        s
    }
}

/// Product of several tables; the empty product is the trivial table.
pub fn betti_polynomial_product<'a>(tables: impl IntoIterator<Item = &'a BettiTable>) -> BettiTable {
    tables
        .into_iter()
        .fold(BettiTable::trivial(), |acc, t| acc.product(t))
}
