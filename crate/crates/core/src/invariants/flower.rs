use serde::Serialize;

use crate::graph::{Graph, VertexSet};

/// One petal of a flower around a hub `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Petal {
    /// A triangle `{v, a, b}`.
    Triangle { a: usize, b: usize },
    /// A star `K_{1,3}` with center `c` and leaves `v, x, y`.
    Star { c: usize, x: usize, y: usize },
}

impl Petal {
    pub fn vertices(&self) -> VertexSet {
        match *self {
            Petal::Triangle { a, b } => VertexSet::from([a, b]),
            Petal::Star { c, x, y } => VertexSet::from([c, x, y]),
        }
    }
}

/// An induced flower `F_{h,k}(v)` with `h + k = 3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlowerWitness {
    pub hub: usize,
    pub petals: Vec<Petal>,
    pub h: usize,
    pub k: usize,
}

impl FlowerWitness {
    /// Checks that the witness vertices induce exactly the flower.
    pub fn is_induced_in(&self, g: &Graph) -> bool {
        let v = self.hub;
        let mut expected: Vec<(usize, usize)> = Vec::new();
        let mut all = VertexSet::singleton(v);
        for p in &self.petals {
            match *p {
                Petal::Triangle { a, b } => expected.extend([(v, a), (v, b), (a, b)]),
                Petal::Star { c, x, y } => expected.extend([(v, c), (c, x), (c, y)]),
            }
            let pv = p.vertices();
            if pv.intersects(&all) {
                return false;
            }
            all = all.union(&pv);
        }
        let expected: Vec<(usize, usize)> = {
            let mut e: Vec<_> = expected.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
            e.sort_unstable();
            e
        };
        let Ok(sub) = g.induced_subgraph(&all) else {
            return false;
        };
        let actual: Vec<(usize, usize)> = sub
            .graph
            .edges()
            .iter()
            .map(|&(a, b)| (sub.original(a), sub.original(b)))
            .collect();
        self.petals.len() == 3 && self.h + self.k == 3 && actual == expected
    }
}

fn petals_at(g: &Graph, v: usize) -> Vec<Petal> {
    let nv = g.neighbors(v).to_vec();
    let mut closed = g.neighbors(v).clone();
    closed.insert(v);
    let mut out = Vec::new();
    for (i, &a) in nv.iter().enumerate() {
        for &b in &nv[i + 1..] {
            if g.has_edge(a, b) {
                out.push(Petal::Triangle { a, b });
            }
        }
    }
    for &c in &nv {
        let outer = g.neighbors(c).difference(&closed).to_vec();
        for (i, &x) in outer.iter().enumerate() {
            for &y in &outer[i + 1..] {
                if !g.has_edge(x, y) {
                    out.push(Petal::Star { c, x, y });
                }
            }
        }
    }
    out
}

fn separated(g: &Graph, p: &VertexSet, q: &VertexSet) -> bool {
    p.is_disjoint(q) && p.iter().all(|u| g.neighbors(u).is_disjoint(q))
}

/// Searches every hub for three pairwise disjoint, mutually non-adjacent
/// petals. An induced flower with more petals contains one with exactly
/// three, so this decides whether any induced `F_{h,k}(v)` with
/// `h + k >= 3` exists.
pub fn find_flower(g: &Graph) -> Option<FlowerWitness> {
    for v in 1..=g.n() {
        let petals = petals_at(g, v);
        let sets: Vec<VertexSet> = petals.iter().map(Petal::vertices).collect();
        for i in 0..petals.len() {
            for j in i + 1..petals.len() {
                if !separated(g, &sets[i], &sets[j]) {
                    continue;
                }
                for k in j + 1..petals.len() {
                    if separated(g, &sets[i], &sets[k]) && separated(g, &sets[j], &sets[k]) {
                        let chosen = vec![petals[i].clone(), petals[j].clone(), petals[k].clone()];
                        let h = chosen
                            .iter()
                            .filter(|p| matches!(p, Petal::Triangle { .. }))
                            .count();
                        return Some(FlowerWitness {
                            hub: v,
                            petals: chosen,
                            h,
                            k: 3 - h,
                        });
                    }
                }
            }
        }
    }
    None
}
