//! Simple undirected graphs on contiguous vertex indices `0..n`, together with
//! the constructions the rest of the crate needs: vertex expansion, the
//! `s`-th expansion, the Mycielski construction, the standard critical
//! families, and enumeration of maximal independent sets / minimal vertex
//! covers.
//!
//! A vertex written `x_i` in the usual 1-based notation is index `i - 1` here.
//!
//! Adjacency is stored as one `u128` bitmask per vertex, so a graph has at
//! most [`MAX_VERTICES`] vertices.

mod enumerate;
mod isomorphism;

pub use enumerate::{canonical_form, connected_graphs, graphs_up_to_iso};
pub use isomorphism::is_isomorphic;

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 128;

/// Provenance of a vertex created by an expansion: it is copy number `copy`
/// (1-based) of the vertex `base` of the graph that was expanded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ShadowLabel {
    pub base: usize,
    pub copy: usize,
}

/// A sorted, duplicate-free set of vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub(crate) fn from_mask(mut mask: u128) -> Self {
        let mut v = Vec::with_capacity(mask.count_ones() as usize);
        while mask != 0 {
            v.push(mask.trailing_zeros() as usize);
            mask &= mask - 1;
        }
        VertexSet(v)
    }

    /// Bitmask of the members. Members must be below [`MAX_VERTICES`].
    pub(crate) fn mask(&self) -> u128 {
        self.0.iter().fold(0u128, |m, &v| m | (1u128 << v))
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// `{0..n} \ self`.
    pub fn complement(&self, n: usize) -> VertexSet {
        VertexSet((0..n).filter(|v| !self.contains(*v)).collect())
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        VertexSet::new(v)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// The standard families of critical graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// The cycle `C_n`, `n >= 3`.
    Cycle,
    /// The clique `K_n`, `n >= 1`.
    Complete,
    /// The complement of `C_n`, `n >= 3`.
    Antihole,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Antihole => "antihole",
        }
    }

    fn min_order(self) -> usize {
        match self {
            Family::Cycle | Family::Antihole => 3,
            Family::Complete => 1,
        }
    }
}

/// A finite simple graph. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u128>,
    labels: Option<Vec<ShadowLabel>>,
}

#[inline]
pub(crate) fn bits(mut mask: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u128 {
    if n >= 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

impl Graph {
    /// Builds a graph from an edge list. Repeated and reversed pairs are
    /// merged.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            g.adj[u] |= 1u128 << v;
            g.adj[v] |= 1u128 << u;
        }
        Ok(g)
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
            labels: None,
        })
    }

    pub(crate) fn from_masks(adj: Vec<u128>) -> Graph {
        Graph {
            n: adj.len(),
            adj,
            labels: None,
        }
    }

    pub fn family(kind: Family, n: usize) -> Result<Graph> {
        if n < kind.min_order() {
            return Err(Error::FamilyTooSmall {
                kind: kind.name(),
                min: kind.min_order(),
                n,
            });
        }
        match kind {
            Family::Cycle => Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))),
            Family::Complete => Graph::complete(n),
            Family::Antihole => Ok(Graph::family(Family::Cycle, n)?.complement()),
        }
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        Graph::family(Family::Cycle, n)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        let all = full_mask(n);
        for v in 0..n {
            g.adj[v] = all & !(1u128 << v);
        }
        Ok(g)
    }

    pub fn antihole(n: usize) -> Result<Graph> {
        Graph::family(Family::Antihole, n)
    }

    /// The path on `n >= 1` vertices `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Graph> {
        if n < 1 {
            return Err(Error::FamilyTooSmall {
                kind: "path",
                min: 1,
                n,
            });
        }
        Graph::new(n, (1..n).map(|i| (i - 1, i)))
    }

    /// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
    pub fn petersen() -> Graph {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::new(10, edges).expect("petersen edges are valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    pub(crate) fn neighbor_mask(&self, v: usize) -> u128 {
        self.adj[v]
    }

    pub(crate) fn masks(&self) -> &[u128] {
        &self.adj
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] >> u >> 1) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn labels(&self) -> Option<&[ShadowLabel]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<ShadowLabel> {
        self.labels.as_ref().map(|l| l[v])
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.adj[v] == 0).collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = 1u128;
        let mut frontier = 1u128;
        while frontier != 0 {
            let mut next = 0u128;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == full_mask(self.n)
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        let mask = set.mask();
        set.iter().all(|v| self.adj[v] & mask == 0)
    }

    pub fn complement(&self) -> Graph {
        let all = full_mask(self.n);
        let adj = (0..self.n).map(|v| all & !self.adj[v] & !(1u128 << v)).collect();
        Graph {
            n: self.n,
            adj,
            labels: self.labels.clone(),
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    fn check_set(&self, set: &VertexSet) -> Result<()> {
        match set.max() {
            Some(v) => self.check_vertex(v),
            None => Ok(()),
        }
    }

    /// The subgraph induced on `set`. Vertex `set[k]` becomes vertex `k`;
    /// labels are carried along.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<Graph> {
        self.check_set(set)?;
        let members = set.as_slice();
        let adj = members
            .iter()
            .map(|&u| {
                members
                    .iter()
                    .enumerate()
                    .filter(|(_, &v)| self.adj[u] >> v & 1 == 1)
                    .fold(0u128, |m, (k, _)| m | (1u128 << k))
            })
            .collect();
        let labels = self.labels.as_ref().map(|l| members.iter().map(|&v| l[v]).collect());
        Ok(Graph {
            n: members.len(),
            adj,
            labels,
        })
    }

    /// `G \ v`. Vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        self.induced_subgraph(&VertexSet((0..self.n).filter(|&u| u != v).collect()))
    }

    fn labels_or_identity(&self) -> Vec<ShadowLabel> {
        match &self.labels {
            Some(l) => l.clone(),
            None => (0..self.n).map(|i| ShadowLabel { base: i, copy: 1 }).collect(),
        }
    }

    /// The expansion `G[W]`: every `w` in `W` is replaced by two adjacent
    /// shadows, each adjacent to all former neighbours of `w` (and to both
    /// shadows of neighbours that are themselves in `W`).
    ///
    /// Vertex `w` keeps its index and acts as the first shadow; the second
    /// shadows are appended as `n, n+1, ...` in increasing order of `w`. The
    /// appended vertex carries the label `(base(w), c + 1)` where `c` is the
    /// largest copy number already used for that base.
    pub fn expand(&self, set: &VertexSet) -> Result<Graph> {
        self.check_set(set)?;
        let m = self.n + set.len();
        if m > MAX_VERTICES {
            return Err(Error::TooManyVertices(m));
        }
        let mut copy_of = vec![usize::MAX; self.n];
        for (k, w) in set.iter().enumerate() {
            copy_of[w] = self.n + k;
        }
        let mut adj = self.adj.clone();
        adj.resize(m, 0);
        for w in set.iter() {
            let c = copy_of[w];
            let mut row = self.adj[w] | (1u128 << w);
            for u in self.neighbors(w) {
                if copy_of[u] != usize::MAX {
                    row |= 1u128 << copy_of[u];
                }
            }
            adj[c] = row;
            for u in bits(row) {
                adj[u] |= 1u128 << c;
            }
        }

        let mut labels = self.labels_or_identity();
        for w in set.iter() {
            let base = labels[w].base;
            let next = labels
                .iter()
                .filter(|l| l.base == base)
                .map(|l| l.copy)
                .max()
                .unwrap_or(0)
                + 1;
            labels.push(ShadowLabel { base, copy: next });
        }
        Ok(Graph {
            n: m,
            adj,
            labels: Some(labels),
        })
    }

    /// The `s`-th expansion `G^s`. Shadow `j` (1-based) of vertex `i` has
    /// index `i * s + (j - 1)` and label `(i, j)`.
    pub fn power_expansion(&self, s: usize) -> Result<Graph> {
        if s < 1 {
            return Err(Error::NonPositive {
                what: "expansion power s",
            });
        }
        let m = self.n * s;
        if m > MAX_VERTICES {
            return Err(Error::TooManyVertices(m));
        }
        let block = full_mask(s);
        let mut adj = vec![0u128; m];
        for i in 0..self.n {
            let mut row = block << (i * s);
            for u in self.neighbors(i) {
                row |= block << (u * s);
            }
            for j in 0..s {
                adj[i * s + j] = row & !(1u128 << (i * s + j));
            }
        }
        let labels = (0..self.n)
            .flat_map(|i| (1..=s).map(move |j| ShadowLabel { base: i, copy: j }))
            .collect();
        Ok(Graph {
            n: m,
            adj,
            labels: Some(labels),
        })
    }

    /// Index of shadow `copy` (1-based) of vertex `base` inside
    /// `self.power_expansion(s)`.
    pub fn shadow_index(base: usize, copy: usize, s: usize) -> usize {
        base * s + (copy - 1)
    }

    /// Mycielski's construction. Vertices `0..n` are the original `x_i`,
    /// `n..2n` are `y_i` (adjacent to the neighbours of `x_i`), and `2n` is
    /// `z`, adjacent to every `y_i`.
    pub fn mycielski(&self) -> Result<Graph> {
        let n = self.n;
        let mut g = Graph::empty(2 * n + 1)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v);
            g.add_edge(n + u, v);
            g.add_edge(u, n + v);
        }
        for i in 0..n {
            g.add_edge(n + i, 2 * n);
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1u128 << v;
        self.adj[v] |= 1u128 << u;
    }

    /// Every maximal independent set, sorted lexicographically by members.
    pub fn maximal_independent_sets(&self) -> Vec<VertexSet> {
        let comp = self.complement();
        let mut out = Vec::new();
        maximal_cliques(comp.masks(), 0, full_mask(self.n), 0, &mut out);
        let mut sets: Vec<VertexSet> = out.into_iter().map(VertexSet::from_mask).collect();
        sets.sort();
        sets
    }

    /// Complements of [`Graph::maximal_independent_sets`], in the same order.
    pub fn minimal_vertex_covers(&self) -> Vec<VertexSet> {
        self.maximal_independent_sets()
            .iter()
            .map(|s| s.complement(self.n))
            .collect()
    }

    /// Size of a largest clique.
    pub fn clique_number(&self) -> usize {
        let mut best = 0;
        max_clique(&self.adj, 0, full_mask(self.n), &mut best);
        best
    }

    /// Size of a largest independent set.
    pub fn independence_number(&self) -> usize {
        self.complement().clique_number()
    }
}

/// Bron–Kerbosch with Tomita pivoting. `r`, `p`, `x` are vertex masks.
fn maximal_cliques(adj: &[u128], r: u128, mut p: u128, mut x: u128, out: &mut Vec<u128>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot = bits(p | x)
        .max_by_key(|&u| (adj[u] & p).count_ones())
        .expect("p | x is non-empty");
    for v in bits(p & !adj[pivot]) {
        let bit = 1u128 << v;
        maximal_cliques(adj, r | bit, p & adj[v], x & adj[v], out);
        p &= !bit;
        x |= bit;
    }
}

fn max_clique(adj: &[u128], size: usize, mut p: u128, best: &mut usize) {
    if p == 0 {
        *best = (*best).max(size);
        return;
    }
    while p != 0 {
        if size + p.count_ones() as usize <= *best {
            return;
        }
        let v = p.trailing_zeros() as usize;
        max_clique(adj, size + 1, p & adj[v], best);
        p &= !(1u128 << v);
    }
}
