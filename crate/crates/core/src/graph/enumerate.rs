//! Enumeration of small graphs up to isomorphism.
//!
//! Graphs on `n` vertices are produced from the classes on `n - 1` vertices by
//! attaching a new vertex to every possible neighbourhood and keeping one
//! representative per canonical form. Practical up to `n = 8`.

use super::{bits, Graph};
use std::collections::HashSet;

type Cells = Vec<Vec<usize>>;

/// Refines an ordered partition until it is equitable. Each vertex is keyed
/// by its cell and its neighbour counts in every cell; cells split according
/// to the sorted key order, so the result depends only on the isomorphism
/// class of `(graph, partition)`.
fn refine(g: &Graph, mut cells: Cells) -> Cells {
    loop {
        let cell_mask: Vec<u128> = cells
            .iter()
            .map(|c| c.iter().fold(0u128, |m, &v| m | (1u128 << v)))
            .collect();
        let mut keyed: Vec<(usize, Vec<u32>, usize)> = Vec::with_capacity(g.n());
        for (ci, cell) in cells.iter().enumerate() {
            for &v in cell {
                let counts = cell_mask
                    .iter()
                    .map(|m| (g.neighbor_mask(v) & m).count_ones())
                    .collect();
                keyed.push((ci, counts, v));
            }
        }
        keyed.sort();
        let mut next: Cells = Vec::with_capacity(cells.len());
        for k in 0..keyed.len() {
            if k > 0 && keyed[k].0 == keyed[k - 1].0 && keyed[k].1 == keyed[k - 1].1 {
                next.last_mut().expect("previous cell exists").push(keyed[k].2);
            } else {
                next.push(vec![keyed[k].2]);
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn relabelled_rows(g: &Graph, order: &[usize]) -> Vec<u128> {
    let mut pos = vec![0usize; g.n()];
    for (k, &v) in order.iter().enumerate() {
        pos[v] = k;
    }
    order
        .iter()
        .map(|&v| bits(g.neighbor_mask(v)).fold(0u128, |m, u| m | (1u128 << pos[u])))
        .collect()
}

fn search(g: &Graph, cells: Cells, best: &mut Option<Vec<u128>>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let rows = relabelled_rows(g, &order);
        if best.as_ref().is_none_or(|b| rows > *b) {
            *best = Some(rows);
        }
        return;
    };
    let cell = &cells[target];
    let mut tried: Vec<usize> = Vec::new();
    for &v in cell {
        // Twins inside the cell are swapped by an automorphism that fixes
        // the current partition, so one representative per twin class is
        // enough.
        let is_twin = tried.iter().any(|&u| {
            let (bu, bv) = (1u128 << u, 1u128 << v);
            g.neighbor_mask(u) & !bv == g.neighbor_mask(v) & !bu
        });
        if is_twin {
            continue;
        }
        tried.push(v);
        let mut next: Cells = Vec::with_capacity(cells.len() + 1);
        next.extend(cells[..target].iter().cloned());
        next.push(vec![v]);
        next.push(cell.iter().copied().filter(|&u| u != v).collect());
        next.extend(cells[target + 1..].iter().cloned());
        search(g, refine(g, next), best);
    }
}

/// A certificate that is equal for two graphs iff they are isomorphic: the
/// lexicographically largest adjacency-row sequence over all labellings
/// reachable by individualisation and refinement.
pub fn canonical_form(g: &Graph) -> Vec<u128> {
    if g.n() == 0 {
        return Vec::new();
    }
    let mut best = None;
    search(g, refine(g, vec![(0..g.n()).collect()]), &mut best);
    best.expect("search reaches at least one leaf")
}

/// One representative per isomorphism class of graphs on `n` vertices, in
/// increasing order of canonical form. Each representative is the canonical
/// relabelling of its class.
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    let mut level: Vec<Vec<u128>> = vec![Vec::new()];
    for k in 1..=n {
        let mut seen: HashSet<Vec<u128>> = HashSet::new();
        for rows in &level {
            for nbhd in 0..(1u128 << (k - 1)) {
                let mut adj = rows.clone();
                for u in bits(nbhd) {
                    adj[u] |= 1u128 << (k - 1);
                }
                adj.push(nbhd);
                seen.insert(canonical_form(&Graph::from_masks(adj)));
            }
        }
        level = seen.into_iter().collect();
        level.sort();
    }
    level.into_iter().map(Graph::from_masks).collect()
}

/// Connected graphs on `n` vertices up to isomorphism.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    graphs_up_to_iso(n).into_iter().filter(Graph::is_connected).collect()
}
