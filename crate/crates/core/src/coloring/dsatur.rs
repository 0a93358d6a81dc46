//! DSATUR-ordered exact backtracking for k-colourability.

use crate::graph::{bits, full_mask};

const NONE: u8 = u8::MAX;

struct Search<'a> {
    adj: &'a [u128],
    k: usize,
    colour: Vec<u8>,
    /// `counts[v * k + c]`: coloured neighbours of `v` holding colour `c`.
    counts: Vec<u16>,
    forbidden: Vec<u128>,
    uncoloured: u128,
}

impl Search<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        self.colour[v] = c as u8;
        self.uncoloured &= !(1u128 << v);
        for u in bits(self.adj[v]) {
            let slot = &mut self.counts[u * self.k + c];
            *slot += 1;
            if *slot == 1 {
                self.forbidden[u] |= 1u128 << c;
            }
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.colour[v] = NONE;
        self.uncoloured |= 1u128 << v;
        for u in bits(self.adj[v]) {
            let slot = &mut self.counts[u * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.forbidden[u] &= !(1u128 << c);
            }
        }
    }

    fn pick(&self) -> usize {
        bits(self.uncoloured)
            .max_by_key(|&v| {
                (
                    self.forbidden[v].count_ones(),
                    (self.adj[v] & self.uncoloured).count_ones(),
                    std::cmp::Reverse(v),
                )
            })
            .expect("pick is called with uncoloured vertices left")
    }

    /// `used` colours `0..used` appear so far; a fresh colour is only ever
    /// the next unused one.
    fn dfs(&mut self, used: usize) -> bool {
        if self.uncoloured == 0 {
            return true;
        }
        let v = self.pick();
        let palette = full_mask((used + 1).min(self.k));
        let options = palette & !self.forbidden[v];
        for c in bits(options) {
            self.assign(v, c);
            if self.dfs(used.max(c + 1)) {
                return true;
            }
            self.unassign(v, c);
        }
        false
    }
}

/// A proper colouring with at most `k` colours, or `None` if none exists.
/// Colours are tried lowest first.
pub(crate) fn colour_with(adj: &[u128], k: usize) -> Option<Vec<usize>> {
    let n = adj.len();
    if n == 0 {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }
    let k = k.min(n);
    let mut s = Search {
        adj,
        k,
        colour: vec![NONE; n],
        counts: vec![0; n * k],
        forbidden: vec![0; n],
        uncoloured: full_mask(n),
    };
    s.dfs(0).then(|| s.colour.iter().map(|&c| c as usize).collect())
}

/// Greedy DSATUR colouring (no backtracking), used as an upper bound.
pub(crate) fn greedy(adj: &[u128]) -> Vec<usize> {
    let n = adj.len();
    let mut colour = vec![usize::MAX; n];
    let mut forbidden = vec![0u128; n];
    let mut uncoloured = full_mask(n);
    while uncoloured != 0 {
        let v = bits(uncoloured)
            .max_by_key(|&v| {
                (
                    forbidden[v].count_ones(),
                    (adj[v] & uncoloured).count_ones(),
                    std::cmp::Reverse(v),
                )
            })
            .expect("uncoloured is non-empty");
        let c = (!forbidden[v]).trailing_zeros() as usize;
        colour[v] = c;
        uncoloured &= !(1u128 << v);
        for u in bits(adj[v]) {
            forbidden[u] |= 1u128 << c;
        }
    }
    colour
}
