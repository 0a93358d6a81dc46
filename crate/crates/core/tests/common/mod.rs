//! Brute-force oracles shared by the integration tests. They are kept
//! deliberately naive and independent of the library's algorithms.

#![allow(dead_code)]

use chromideal::graph::{Graph, VertexSet};
use chromideal::ideal::{Monomial, MonomialIdeal};
use rand::Rng;

/// Smallest `k` admitting a proper colouring, by plain backtracking in
/// vertex order.
pub fn brute_chi(g: &Graph) -> usize {
    fn extend(g: &Graph, k: usize, colour: &mut Vec<usize>) -> bool {
        let v = colour.len();
        if v == g.n() {
            return true;
        }
        let used = colour.iter().max().map_or(0, |&c| c + 1);
        for c in 0..k.min(used + 1) {
            if (0..v).all(|u| !(g.has_edge(u, v) && colour[u] == c)) {
                colour.push(c);
                if extend(g, k, colour) {
                    return true;
                }
                colour.pop();
            }
        }
        false
    }
    (0..=g.n())
        .find(|&k| extend(g, k, &mut Vec::new()))
        .expect("n colours always suffice")
}

pub fn brute_critical(g: &Graph) -> bool {
    let chi = brute_chi(g);
    (0..g.n()).all(|v| brute_chi(&g.delete_vertex(v).unwrap()) < chi)
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect())
}

fn independent(g: &Graph, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(k, &u)| set[k + 1..].iter().all(|&v| !g.has_edge(u, v)))
}

pub fn brute_alpha(g: &Graph) -> usize {
    subsets(g.n())
        .filter(|s| independent(g, s))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

pub fn brute_maximal_independent_sets(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let mut out: Vec<VertexSet> = subsets(n)
        .filter(|s| independent(g, s))
        .filter(|s| (0..n).all(|v| s.contains(&v) || s.iter().any(|&u| g.has_edge(u, v))))
        .map(VertexSet::new)
        .collect();
    out.sort();
    out
}

/// Every independent set, including the empty one.
pub fn independent_sets(g: &Graph) -> Vec<VertexSet> {
    subsets(g.n())
        .filter(|s| independent(g, s))
        .map(VertexSet::new)
        .collect()
}

/// Tries every bijection.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    fn extend(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let v = map.len();
        if v == g.n() {
            return true;
        }
        for t in 0..h.n() {
            if used[t] || (0..v).any(|u| g.has_edge(u, v) != h.has_edge(map[u], t)) {
                continue;
            }
            map.push(t);
            used[t] = true;
            if extend(g, h, map, used) {
                return true;
            }
            used[t] = false;
            map.pop();
        }
        false
    }
    g.n() == h.n() && g.edge_count() == h.edge_count() && extend(g, h, &mut Vec::new(), &mut vec![false; h.n()])
}

/// `G[K_b]`: each vertex becomes a `b`-clique, cliques of adjacent vertices
/// fully joined. Its chromatic number is `χ_b(G)`.
pub fn lexicographic_with_clique(g: &Graph, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..g.n() {
        for i in 0..b {
            for j in i + 1..b {
                edges.push((u * b + i, u * b + j));
            }
        }
    }
    for (u, v) in g.edges() {
        for i in 0..b {
            for j in 0..b {
                edges.push((u * b + i, v * b + j));
            }
        }
    }
    Graph::new(g.n() * b, edges).unwrap()
}

pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    Graph::new(g.n(), g.edges().into_iter().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// A random graph with at least one edge and no isolated vertices.
pub fn random_graph_without_isolated(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    assert!(n >= 2);
    loop {
        let g = random_graph(rng, n, p);
        if g.edge_count() > 0 && g.isolated_vertices().is_empty() {
            return g;
        }
    }
}

pub fn random_ideal(rng: &mut impl Rng, nvars: usize, max_gens: usize, max_exp: u32) -> MonomialIdeal {
    let count = rng.gen_range(1..=max_gens);
    let gens = (0..count)
        .map(|_| Monomial::new((0..nvars).map(|_| rng.gen_range(0..=max_exp)).collect()))
        .collect();
    MonomialIdeal::new(nvars, gens).unwrap()
}

/// All exponent vectors in `{0..=bound}^nvars`.
pub fn box_monomials(nvars: usize, bound: u32) -> Vec<Monomial> {
    let mut out = vec![Vec::new()];
    for _ in 0..nvars {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u32>| {
                (0..=bound).map(move |e| {
                    let mut next = prefix.clone();
                    next.push(e);
                    next
                })
            })
            .collect();
    }
    out.into_iter().map(Monomial::new).collect()
}

/// Membership by scanning generators.
pub fn divides_some(gens: &[Monomial], m: &Monomial) -> bool {
    gens.iter()
        .any(|g| (0..m.nvars()).all(|i| g.exponent(i) <= m.exponent(i)))
}

/// Minimal generators of `J^d` from all `d`-fold products, minimalised by
/// pairwise division tests.
pub fn brute_power(j: &MonomialIdeal, d: usize) -> Vec<Monomial> {
    let mut acc = vec![Monomial::one(j.nvars())];
    for _ in 0..d {
        acc = acc
            .iter()
            .flat_map(|a| j.gens().iter().map(move |g| a.mul(g)))
            .collect();
        acc.sort();
        acc.dedup();
    }
    acc.iter()
        .filter(|m| !acc.iter().any(|o| o != *m && o.divides(m)))
        .cloned()
        .collect()
}

pub fn corpus() -> Vec<(&'static str, Graph)> {
    vec![
        ("C5", Graph::cycle(5).unwrap()),
        ("C7", Graph::cycle(7).unwrap()),
        ("C9", Graph::cycle(9).unwrap()),
        ("K3", Graph::complete(3).unwrap()),
        ("K4", Graph::complete(4).unwrap()),
        ("antihole7", Graph::antihole(7).unwrap()),
        ("Petersen", Graph::petersen()),
        ("Grotzsch", Graph::cycle(5).unwrap().mycielski().unwrap()),
        ("P4", Graph::path(4).unwrap()),
        ("C6", Graph::cycle(6).unwrap()),
    ]
}
