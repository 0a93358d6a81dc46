//! Minimum set multicover by depth-first branch and bound.
//!
//! Given sets over `n` elements and a demand per element, find the fewest
//! sets (repetition allowed) so that element `v` lies in at least
//! `demand[v]` of them. The search deepens the budget from a lower bound and
//! remembers, per residual-demand vector, the largest budget already shown to
//! be insufficient.

use crate::graph::bits;
use std::collections::HashMap;

struct Search<'a> {
    sets: &'a [u128],
    containing: Vec<Vec<usize>>,
    max_set: u32,
    failed: HashMap<Vec<u16>, usize>,
    chosen: Vec<usize>,
}

impl Search<'_> {
    fn lower_bound(&self, residual: &[u16]) -> usize {
        let total: u32 = residual.iter().map(|&d| d as u32).sum();
        let by_size = total.div_ceil(self.max_set.max(1)) as usize;
        let by_max = residual.iter().copied().max().unwrap_or(0) as usize;
        by_size.max(by_max)
    }

    fn dfs(&mut self, residual: &mut Vec<u16>, budget: usize) -> bool {
        if residual.iter().all(|&d| d == 0) {
            return true;
        }
        if self.lower_bound(residual) > budget {
            return false;
        }
        if self.failed.get(residual.as_slice()).is_some_and(|&b| b >= budget) {
            return false;
        }

        // element with positive residual demand that lies in the fewest sets
        let v = (0..residual.len())
            .filter(|&v| residual[v] > 0)
            .min_by_key(|&v| (self.containing[v].len(), std::cmp::Reverse(residual[v]), v))
            .expect("some demand is positive");
        let mut options: Vec<(u32, usize)> = self.containing[v]
            .iter()
            .map(|&s| {
                let gain = bits(self.sets[s]).filter(|&u| residual[u] > 0).count() as u32;
                (gain, s)
            })
            .collect();
        options.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

        for (_, s) in options {
            let touched: Vec<usize> = bits(self.sets[s]).filter(|&u| residual[u] > 0).collect();
            for &u in &touched {
                residual[u] -= 1;
            }
            self.chosen.push(s);
            let ok = self.dfs(residual, budget - 1);
            if ok {
                return true;
            }
            self.chosen.pop();
            for &u in &touched {
                residual[u] += 1;
            }
        }
        let entry = self.failed.entry(residual.clone()).or_insert(0);
        *entry = (*entry).max(budget);
        false
    }
}

/// Returns the indices of a minimum multicover (with repetition), or `None`
/// when some element with positive demand lies in no set.
pub(crate) fn min_multicover(n: usize, sets: &[u128], demand: &[u16]) -> Option<Vec<usize>> {
    assert_eq!(demand.len(), n);
    let mut containing = vec![Vec::new(); n];
    for (s, &mask) in sets.iter().enumerate() {
        for v in bits(mask) {
            containing[v].push(s);
        }
    }
    if (0..n).any(|v| demand[v] > 0 && containing[v].is_empty()) {
        return None;
    }
    let max_set = sets.iter().map(|m| m.count_ones()).max().unwrap_or(0);
    let mut search = Search {
        sets,
        containing,
        max_set,
        failed: HashMap::new(),
        chosen: Vec::new(),
    };
    let mut residual = demand.to_vec();
    let mut budget = search.lower_bound(&residual);
    loop {
        if search.dfs(&mut residual, budget) {
            let mut chosen = search.chosen;
            chosen.sort_unstable();
            return Some(chosen);
        }
        budget += 1;
    }
}
