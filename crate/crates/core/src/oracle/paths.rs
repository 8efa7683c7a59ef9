use std::fmt;

use serde::Serialize;

use crate::graph::Graph;

/// A variable of `S = K[x_1, ..., x_n, y_1, ..., y_n]`, ordered so that
/// `x_1 > ... > x_n > y_1 > ... > y_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RingVariable {
    X(usize),
    Y(usize),
}

impl RingVariable {
    /// Bit position in monomial masks over `n` vertices: `x_i` is bit
    /// `i - 1` and `y_i` is bit `n + i - 1`, so lower bits are larger
    /// variables.
    pub fn bit(self, n: usize) -> usize {
        match self {
            RingVariable::X(i) => i - 1,
            RingVariable::Y(i) => n + i - 1,
        }
    }

    pub fn from_bit(bit: usize, n: usize) -> Self {
        if bit < n {
            RingVariable::X(bit + 1)
        } else {
            RingVariable::Y(bit - n + 1)
        }
    }
}

impl Ord for RingVariable {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let key = |v: &Self| match *v {
            RingVariable::X(i) => (1, usize::MAX - i),
            RingVariable::Y(i) => (0, usize::MAX - i),
        };
        key(self).cmp(&key(other))
    }
}

impl PartialOrd for RingVariable {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RingVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingVariable::X(i) => write!(f, "x_{i}"),
            RingVariable::Y(i) => write!(f, "y_{i}"),
        }
    }
}

/// Writes a squarefree monomial mask as a product of variables, largest
/// variable first; `1` for the empty monomial.
pub fn monomial_string(mask: u64, n: usize) -> String {
    if mask == 0 {
        return "1".into();
    }
    let mut s = String::new();
    let mut m = mask;
    while m != 0 {
        let b = m.trailing_zeros() as usize;
        s.push_str(&RingVariable::from_bit(b, n).to_string());
        m &= m - 1;
    }
    s
}

/// An admissible path `i = i_0, i_1, ..., i_r = j` with `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdmissiblePath {
    pub i: usize,
    pub j: usize,
    pub interior: Vec<usize>,
    /// `u_π = Π_{i_k > j} x_{i_k} Π_{i_l < i} y_{i_l}` as a variable mask.
    pub u: u64,
}

impl AdmissiblePath {
    pub fn vertices(&self) -> Vec<usize> {
        let mut v = vec![self.i];
        v.extend(&self.interior);
        v.push(self.j);
        v
    }

    /// Support of the lex-leading term `u_π x_i y_j`.
    pub fn leading_support(&self, n: usize) -> u64 {
        self.u | 1 << RingVariable::X(self.i).bit(n) | 1 << RingVariable::Y(self.j).bit(n)
    }
}

/// All admissible paths. The minimality condition on interior subsets is
/// equivalent to the path being induced, which the search enforces as it
/// extends: a new vertex may not touch any path vertex except the last.
pub fn admissible_paths(g: &Graph) -> Vec<AdmissiblePath> {
    let n = g.n();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let mut path = vec![i];
            extend(g, i, j, &mut path, &mut out);
        }
    }
    out
}

fn extend(g: &Graph, i: usize, j: usize, path: &mut Vec<usize>, out: &mut Vec<AdmissiblePath>) {
    let last = *path.last().expect("nonempty path");
    for w in g.neighbors(last) {
        let earlier = &path[..path.len() - 1];
        if path.contains(&w) || earlier.iter().any(|&e| g.has_edge(e, w)) {
            continue;
        }
        if w == j {
            let interior = path[1..].to_vec();
            let n = g.n();
            let u = interior.iter().fold(0u64, |acc, &v| {
                if v > j {
                    acc | 1 << RingVariable::X(v).bit(n)
                } else {
                    acc | 1 << RingVariable::Y(v).bit(n)
                }
            });
            out.push(AdmissiblePath { i, j, interior, u });
        } else if w < i || w > j {
            path.push(w);
            extend(g, i, j, path, out);
            path.pop();
        }
    }
}

/// A squarefree monomial ideal in the `2n` variables of `S`, stored as its
/// minimal generators (variable masks).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<u64>,
}

impl MonomialIdeal {
    /// Builds the ideal from any generating set, keeping only the
    /// inclusion-minimal supports.
    pub fn new(n: usize, supports: impl IntoIterator<Item = u64>) -> Self {
        let mut all: Vec<u64> = supports.into_iter().collect();
        all.sort_unstable_by_key(|&m| (m.count_ones(), m));
        all.dedup();
        let mut generators: Vec<u64> = Vec::new();
        for m in all {
            if !generators.iter().any(|&g| g & !m == 0) {
                generators.push(m);
            }
        }
        Self { n, generators }
    }

    /// Number of graph vertices; the ring has `2n` variables.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn variable_count(&self) -> usize {
        2 * self.n
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn generator_strings(&self) -> Vec<String> {
        self.generators
            .iter()
            .map(|&m| monomial_string(m, self.n))
            .collect()
    }

    /// Whether the squarefree monomial `mask` lies in the ideal.
    pub fn contains(&self, mask: u64) -> bool {
        self.generators.iter().any(|&g| g & !mask == 0)
    }
}

/// The squarefree initial ideal `in(J_G)` under the lex order.
pub fn initial_ideal(g: &Graph) -> MonomialIdeal {
    let n = g.n();
    MonomialIdeal::new(n, admissible_paths(g).iter().map(|p| p.leading_support(n)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(g: &Graph) -> Vec<String> {
        let mut v = initial_ideal(g).generator_strings();
        v.sort();
        v
    }

    #[test]
    fn variable_order() {
        let mut vs = vec![
            RingVariable::Y(1),
            RingVariable::X(2),
            RingVariable::Y(3),
            RingVariable::X(1),
        ];
        vs.sort();
        vs.reverse();
        assert_eq!(
            vs,
            vec![
                RingVariable::X(1),
                RingVariable::X(2),
                RingVariable::Y(1),
                RingVariable::Y(3)
            ]
        );
    }

    #[test]
    fn small_initial_ideals() {
        assert_eq!(gens(&Graph::complete(2)), vec!["x_1y_2"]);
        let p3 = Graph::path(3);
        assert_eq!(admissible_paths(&p3).len(), 2);
        assert_eq!(gens(&p3), vec!["x_1y_2", "x_2y_3"]);

        // the star 2 - 1 - 3
        let star = Graph::star(2);
        let paths = admissible_paths(&star);
        assert_eq!(paths.len(), 3);
        let long = paths.iter().find(|p| !p.interior.is_empty()).unwrap();
        assert_eq!((long.i, long.j, long.u), (2, 3, 1 << RingVariable::Y(1).bit(3)));
        assert_eq!(gens(&star), vec!["x_1y_2", "x_1y_3", "x_2y_1y_3"]);
    }

    #[test]
    fn complete_graph_has_only_edges() {
        let k = Graph::complete(5);
        assert_eq!(admissible_paths(&k).len(), 10);
        assert_eq!(initial_ideal(&k).generators().len(), 10);
    }
}
