use super::{bits, Graph};
use std::collections::HashMap;

/// Colour refinement run on the disjoint union of `g` and `h`, so that colour
/// classes are comparable across the two graphs. Vertices of `h` are offset by
/// `g.n()`.
fn joint_refinement(g: &Graph, h: &Graph) -> Vec<usize> {
    let n = g.n() + h.n();
    let neigh = |v: usize| -> Vec<usize> {
        if v < g.n() {
            g.neighbors(v).collect()
        } else {
            h.neighbors(v - g.n()).map(|u| u + g.n()).collect()
        }
    };
    let adjacency: Vec<Vec<usize>> = (0..n).map(neigh).collect();
    let mut colour: Vec<usize> = adjacency.iter().map(Vec::len).collect();
    let mut classes = colour.iter().collect::<std::collections::BTreeSet<_>>().len();
    loop {
        let keys: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut k: Vec<usize> = adjacency[v].iter().map(|&u| colour[u]).collect();
                k.sort_unstable();
                (colour[v], k)
            })
            .collect();
        let mut sorted: Vec<&(usize, Vec<usize>)> = keys.iter().collect();
        sorted.sort();
        sorted.dedup();
        let index: HashMap<&(usize, Vec<usize>), usize> = sorted.iter().enumerate().map(|(i, k)| (*k, i)).collect();
        colour = keys.iter().map(|k| index[k]).collect();
        if sorted.len() == classes {
            return colour;
        }
        classes = sorted.len();
    }
}

/// Exact isomorphism test by backtracking. Candidates are restricted to
/// vertices of equal refined colour (which subsumes equal degree), and `g` is
/// mapped in breadth-first order starting from its rarest colour class so
/// that adjacency constraints prune early.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let n = g.n();
    if n == 0 {
        return true;
    }
    let colour = joint_refinement(g, h);
    let (cg, ch) = colour.split_at(n);
    let mut hist_g = cg.to_vec();
    let mut hist_h = ch.to_vec();
    hist_g.sort_unstable();
    hist_h.sort_unstable();
    if hist_g != hist_h {
        return false;
    }

    let mut freq: HashMap<usize, usize> = HashMap::new();
    for &c in cg {
        *freq.entry(c).or_default() += 1;
    }
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u128;
    while order.len() < n {
        let start = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .min_by_key(|&v| (freq[&cg[v]], v))
            .expect("unplaced vertex exists");
        placed |= 1u128 << start;
        let mut head = order.len();
        order.push(start);
        while head < order.len() {
            let v = order[head];
            head += 1;
            for u in g.neighbors(v) {
                if placed >> u & 1 == 0 {
                    placed |= 1u128 << u;
                    order.push(u);
                }
            }
        }
    }

    let mut image = vec![usize::MAX; n];
    extend(g, h, cg, ch, &order, 0, &mut image, 0)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    cg: &[usize],
    ch: &[usize],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: u128,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    let mapped_neighbours = order[..depth].iter().filter(|&&u| g.has_edge(u, v));
    let mut required = 0u128;
    for &u in mapped_neighbours {
        required |= 1u128 << image[u];
    }
    let mapped_mask: u128 = order[..depth].iter().fold(0, |m, &u| m | (1u128 << image[u]));
    for w in bits(super::full_mask(h.n()) & !used) {
        if ch[w] != cg[v] {
            continue;
        }
        // neighbours of w among already-mapped vertices must be exactly the
        // images of v's mapped neighbours
        if h.neighbor_mask(w) & mapped_mask != required {
            continue;
        }
        image[v] = w;
        if extend(g, h, cg, ch, order, depth + 1, image, used | (1u128 << w)) {
            return true;
        }
    }
    image[v] = usize::MAX;
    false
}
