//! Brute-force reference implementations, graph corpora and the property
//! checks shared by the property suite and the acceptance runner.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use bei_core::cutset::{cut_point_sets, has_cut_point_property, merge_at_cutset, minimal_cut_sets};
use bei_core::gbg::{classify_graph, random_gbg};
use bei_core::graph::parse_graph;
use bei_core::invariants::{
    bounds_report, classify_unique_extremal, decompose, extremal_prediction, improved_upper_bound,
    invariant_report_with_cap, last_leaf_junction, longest_induced_path,
};
use bei_core::oracle::{oracle_summary, OracleConfig};
use bei_core::{Graph, VertexSet};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn fixture(name: &str) -> Graph {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.txt"));
    parse_graph(&std::fs::read_to_string(&path).unwrap()).unwrap()
}

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.txt"))
}

pub const FIXTURES: [&str; 15] = [
    "strip3",
    "four_triangles",
    "tree14",
    "k3",
    "k4",
    "k5",
    "p3",
    "p4",
    "p5",
    "p6",
    "flower30",
    "flower03",
    "flower12",
    "bowtie",
    "shared_edge",
];

pub fn set(vs: &[usize]) -> VertexSet {
    vs.iter().copied().collect()
}

pub fn random_graph(seed: u64, n: usize, p: f64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_tree(seed: u64, n: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<(usize, usize)> = (2..=n).map(|v| (rng.gen_range(1..v), v)).collect();
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_permutation(seed: u64, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (1..=n).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    perm
}

/// Random GBGs with at most `max_n` vertices; parameters cycle with the seed.
pub fn gbg_corpus(count: usize, max_n: usize, max_facets: usize, max_clique: usize) -> Vec<(u64, Graph)> {
    let mut out = Vec::new();
    let mut seed = 0u64;
    while out.len() < count {
        let facets = 1 + (seed as usize % max_facets);
        let clique = 2 + (seed as usize / max_facets) % (max_clique - 1);
        let g = random_gbg(seed, facets, clique).unwrap().graph;
        if g.n() <= max_n {
            out.push((seed, g));
        }
        seed += 1;
    }
    out
}

/// The 200-graph oracle corpus (n ≤ 9).
pub fn oracle_corpus() -> Vec<(u64, Graph)> {
    gbg_corpus(200, 9, 5, 4)
}

/// The 1000-graph combinatorial corpus (n ≤ 20).
pub fn combinatorial_corpus() -> Vec<(u64, Graph)> {
    gbg_corpus(1000, 20, 8, 5)
}

fn masks(n: usize) -> impl Iterator<Item = u64> {
    0..1u64 << n
}

fn mask_set(m: u64) -> VertexSet {
    VertexSet::from_mask(m)
}

pub fn components_of(g: &Graph, within: u64) -> usize {
    g.components_within(&mask_set(within)).len()
}

/// Chordal iff no induced cycle of length at least four, by subset search.
pub fn brute_has_chordless_cycle(g: &Graph) -> bool {
    masks(g.n()).any(|m| {
        if m.count_ones() < 4 {
            return false;
        }
        let s = mask_set(m);
        s.iter().all(|v| g.neighbors(v).intersection(&s).len() == 2) && components_of(g, m) == 1
    })
}

pub fn brute_maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let cliques: Vec<u64> = masks(g.n())
        .filter(|&m| m != 0 && g.is_clique(&mask_set(m)))
        .collect();
    let mut out: Vec<VertexSet> = cliques
        .iter()
        .filter(|&&m| !cliques.iter().any(|&o| o != m && o & m == m))
        .map(|&m| mask_set(m))
        .collect();
    out.sort();
    out
}

/// The intersection condition over all facet triples of a chordal graph.
pub fn brute_is_gbg(g: &Graph) -> bool {
    if brute_has_chordless_cycle(g) {
        return false;
    }
    let f = brute_maximal_cliques(g);
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            for k in j + 1..f.len() {
                let (ij, ik, jk) = (
                    f[i].intersection(&f[j]),
                    f[i].intersection(&f[k]),
                    f[j].intersection(&f[k]),
                );
                if !ij.intersection(&f[k]).is_empty() && !(ij == ik && ik == jk) {
                    return false;
                }
            }
        }
    }
    true
}

/// Inclusion-minimal sets whose removal increases the number of components.
pub fn brute_minimal_cut_sets(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let full = (1u64 << n) - 1;
    let base = components_of(g, full);
    let is_cut = |t: u64| components_of(g, full & !t) > base;
    let mut out: Vec<VertexSet> = masks(n)
        .filter(|&t| t != 0 && is_cut(t))
        .filter(|&t| {
            let mut sub = (t - 1) & t;
            loop {
                if sub != 0 && is_cut(sub) {
                    return false;
                }
                if sub == 0 {
                    return true;
                }
                sub = (sub - 1) & t;
            }
        })
        .map(mask_set)
        .collect();
    out.sort();
    out
}

/// Admissible paths by the textbook definition, as `(i, j, vertices)`.
pub fn brute_admissible_paths(g: &Graph) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    fn walk(g: &Graph, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(path.clone());
        let last = *path.last().unwrap();
        for w in g.neighbors(last).iter() {
            if !path.contains(&w) {
                path.push(w);
                walk(g, path, out);
                path.pop();
            }
        }
    }
    for i in 1..=g.n() {
        let mut all = Vec::new();
        walk(g, &mut vec![i], &mut all);
        for p in all {
            let j = *p.last().unwrap();
            if p.len() < 2 || j <= i {
                continue;
            }
            let interior = &p[1..p.len() - 1];
            if interior.iter().any(|&v| v > i && v < j) {
                continue;
            }
            // no proper subset of the interior connects i to j
            let k = interior.len();
            let minimal = (0..(1u64 << k) - 1).all(|sub| {
                let mut s: VertexSet = (0..k)
                    .filter(|b| sub >> b & 1 == 1)
                    .map(|b| interior[b])
                    .collect();
                s.insert(i);
                s.insert(j);
                !g.components_within(&s)
                    .iter()
                    .any(|c| c.contains(i) && c.contains(j))
            });
            if minimal {
                out.insert(p);
            }
        }
    }
    out
}

fn size_counts(sets: &[VertexSet]) -> BTreeMap<usize, usize> {
    let mut a = BTreeMap::new();
    for s in sets {
        *a.entry(s.len()).or_insert(0) += 1;
    }
    a
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn original_sets(ind: &bei_core::graph::Induced, sets: Vec<VertexSet>) -> BTreeSet<VertexSet> {
    sets.iter().map(|s| ind.original_set(s)).collect()
}

/// Leaf-junction facts on a connected indecomposable GBG with at least two
/// facets: `A` is a minimal cut set, `G_A` and the deletion stay GBGs, and
/// `m` drops as expected.
pub fn check_leaf_junction(h: &Graph) -> Result<(), String> {
    let Some(lj) = last_leaf_junction(h) else {
        return Ok(());
    };
    let a = lj.a.clone();
    let alpha = a.len();
    let q = lj.branches.len();
    let base = invariant_report_with_cap(h, 0);
    let p = base.p.ok_or("not a GBG")?;
    let counts = size_counts(&minimal_cut_sets(h));
    let complement = h.vertices().difference(&a);

    let g_a = merge_at_cutset(h, &a).map_err(|e| e.to_string())?;
    let g_a_bar = g_a.induced_subgraph(&complement).unwrap().graph;
    let g_bar = h.induced_subgraph(&complement).unwrap().graph;
    for (name, x) in [("G_A", &g_a), ("G_A[A']", &g_a_bar), ("G[A']", &g_bar)] {
        ensure(classify_graph(x).verdict.is_gbg(), || {
            format!("(a) {name} is not a GBG")
        })?;
    }
    let mut expected = counts.clone();
    *expected.get_mut(&alpha).ok_or("A is not counted")? -= 1;
    expected.retain(|_, v| *v > 0);

    for (part, x, shift) in [("b", &g_a, alpha - 1), ("c", &g_a_bar, 2 * alpha - 1)] {
        let r = invariant_report_with_cap(x, 0);
        let got = size_counts(&minimal_cut_sets(x));
        ensure(got == expected, || {
            format!("({part}) a_i: expected {expected:?}, got {got:?}")
        })?;
        ensure(r.m + 1 == base.m, || {
            format!("({part}) m = {}, expected {}", r.m, base.m - 1)
        })?;
        ensure(r.p == Some(p - shift), || {
            format!("({part}) p = {:?}, expected {}", r.p, p - shift)
        })?;
    }

    let r = invariant_report_with_cap(&g_bar, 0);
    let got = size_counts(&minimal_cut_sets(&g_bar));
    ensure(
        got.iter().all(|(i, v)| v <= expected.get(i).unwrap_or(&0)),
        || format!("(d) a_i: {got:?} exceeds {expected:?}"),
    )?;
    ensure(r.m < base.m, || format!("(d) m = {} not below {}", r.m, base.m))?;
    let bound = (p + 1).checked_sub(2 * alpha + q).ok_or("(d) negative bound")?;
    ensure(r.p.is_some_and(|x| x <= bound), || {
        format!("(d) p = {:?} exceeds {bound}", r.p)
    })
}

/// Combinatorial statements for one GBG of the n ≤ 20 corpus.
pub fn check_combinatorial(g: &Graph) -> Result<(), String> {
    ensure(classify_graph(g).verdict.is_gbg(), || {
        "generator output is not a GBG".into()
    })?;
    let d = decompose(g).map_err(|e| e.to_string())?;
    let pieces: Vec<Graph> = d.graphs(g).into_iter().map(|p| p.graph).collect();
    let m = minimal_cut_sets(g).len();
    let piece_m: usize = pieces.iter().map(|h| minimal_cut_sets(h).len()).sum();
    if g.is_connected() {
        ensure(m == piece_m + pieces.len() - 1, || {
            format!("m = {m}, pieces give {piece_m} + {} - 1", pieces.len())
        })?;
    }
    for h in &pieces {
        if h.n() < 2 {
            continue;
        }
        check_leaf_junction(h)?;
        let r = invariant_report_with_cap(h, 0);
        if r.pv > 0 {
            ensure(r.pv > r.alpha_type1, || {
                format!("pv = {} <= alpha = {}", r.pv, r.alpha_type1)
            })?;
        }
    }
    let r = invariant_report_with_cap(g, 0);
    if g.is_connected() {
        let ell = longest_induced_path(g, 64).map_err(|e| e.to_string())?;
        ensure(ell <= m + 1, || format!("ell = {ell} > m + 1 = {}", m + 1))?;
        let u = classify_unique_extremal(g).map_err(|e| e.to_string())?;
        if u.unique {
            let b = bounds_report(g, &r);
            ensure(b.lower_gbg.value == u.exact_reg.map(|x| x + r.c_g - 1), || {
                "lower_gbg differs from exact_reg".into()
            })?;
        }
    }
    Ok(())
}

/// Cut point sets of `G_A` against those of `G`, for GBGs with n ≤ 14.
pub fn check_cut_point_sets(g: &Graph) -> Result<(), String> {
    let c = cut_point_sets(g, Some(14)).map_err(|e| e.to_string())?;
    let c_set: BTreeSet<VertexSet> = c.iter().cloned().collect();
    for a in minimal_cut_sets(g) {
        ensure(has_cut_point_property(g, &a) && c_set.contains(&a), || {
            format!("{a} is not in C(G)")
        })?;
        for t in &c {
            ensure(a.is_subset(t) || a.is_disjoint(t), || format!("{a} overlaps {t}"))?;
        }
        let g_a = merge_at_cutset(g, &a).map_err(|e| e.to_string())?;
        let c_ga: BTreeSet<VertexSet> = cut_point_sets(&g_a, Some(14)).unwrap().into_iter().collect();
        let avoiding: BTreeSet<VertexSet> = c.iter().filter(|t| a.is_disjoint(t)).cloned().collect();
        ensure(c_ga == avoiding, || {
            format!("C(G_A) differs from the members of C(G) avoiding {a}")
        })?;
        let ind = g_a.induced_subgraph(&g.vertices().difference(&a)).unwrap();
        let c_bar = original_sets(&ind, cut_point_sets(&ind.graph, Some(14)).unwrap());
        ensure(c_bar.is_subset(&c_ga), || {
            format!("C(G_A[complement of {a}]) is not inside C(G_A)")
        })?;
    }
    Ok(())
}

/// Oracle statements for one GBG of the n ≤ 9 corpus.
pub fn check_oracle(g: &Graph) -> Result<(), String> {
    let s = oracle_summary(g, &OracleConfig::default()).map_err(|e| e.to_string())?;
    let r = invariant_report_with_cap(g, 0);
    let p = r.p.ok_or("not a GBG")?;
    ensure(s.pd == p, || format!("pd {} vs formula {p}", s.pd))?;

    let pred = extremal_prediction(g).map_err(|e| e.to_string())?;
    let (i, j) = pred.position;
    if g.is_connected() {
        ensure((i, j) == (p, p + r.m + 1), || {
            format!("prediction {:?}", pred.position)
        })?;
    }
    let v = s.table.get(i, j);
    ensure(
        v != 0 && s.extremal.iter().any(|&(a, b, _)| (a, b) == (i, j)),
        || {
            format!(
                "beta_{i},{j} = {v} is not extremal; extremal set {:?}",
                s.extremal
            )
        },
    )?;
    if let Some(value) = pred.value {
        ensure(value as u64 == v, || {
            format!("beta_{i},{j} = {v}, predicted {value}")
        })?;
    }
    let u = classify_unique_extremal(g).map_err(|e| e.to_string())?;
    ensure(u.unique == s.unique_extremal, || {
        format!("classifier {} vs oracle {}", u.unique, s.unique_extremal)
    })?;
    ensure(
        s.unique_extremal == (s.table.get(s.pd, s.pd + s.reg) != 0),
        || "unique flag disagrees with beta_{pd,pd+reg}".into(),
    )?;
    if u.unique {
        ensure(Some(s.reg) == u.exact_reg, || {
            format!("reg {} vs m + 1 = {:?}", s.reg, u.exact_reg)
        })?;
    }
    let upper = improved_upper_bound(g).map_err(|e| e.to_string())?;
    ensure(r.m + r.c_g <= s.reg && s.reg <= upper, || {
        format!("sandwich {} <= {} <= {upper} fails", r.m + r.c_g, s.reg)
    })
}
