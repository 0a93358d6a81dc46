//! Exact dual simplex over arbitrary-precision rationals for covering LPs
//!
//! ```text
//!     minimise   c·x
//!     subject to A x >= b,  x >= 0,      with c >= 0.
//! ```
//!
//! With `c >= 0` the all-slack basis is dual feasible, so the dual simplex
//! can start there without a phase one. Pivoting follows Bland's rule
//! (smallest-index leaving row, smallest-index entering column among ratio
//! ties), which rules out cycling.

use num::{BigRational, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum LpError {
    Infeasible,
    NegativeCost(usize),
}

#[derive(Clone, Debug)]
pub(crate) struct LpSolution {
    /// Optimal primal point, one entry per column of `A`.
    pub x: Vec<BigRational>,
    /// Optimal dual multipliers, one per row: `y >= 0`, `yᵀA <= c`,
    /// `yᵀb = c·x`.
    pub y: Vec<BigRational>,
    pub objective: BigRational,
}

pub(crate) fn minimize_covering(
    a: &[Vec<BigRational>],
    b: &[BigRational],
    c: &[BigRational],
) -> Result<LpSolution, LpError> {
    let rows = a.len();
    let cols = c.len();
    if let Some(j) = c.iter().position(|v| v.is_negative()) {
        return Err(LpError::NegativeCost(j));
    }
    let width = cols + rows;

    // Row i reads  -A_i x + s_i = -b_i.
    let mut tab: Vec<Vec<BigRational>> = Vec::with_capacity(rows);
    let mut rhs: Vec<BigRational> = Vec::with_capacity(rows);
    for i in 0..rows {
        let mut row = vec![BigRational::zero(); width];
        for j in 0..cols {
            row[j] = -a[i][j].clone();
        }
        row[cols + i] = BigRational::from_integer(1.into());
        tab.push(row);
        rhs.push(-b[i].clone());
    }
    let mut reduced: Vec<BigRational> = c
        .iter()
        .cloned()
        .chain((0..rows).map(|_| BigRational::zero()))
        .collect();
    let mut basis: Vec<usize> = (cols..width).collect();

    loop {
        let leaving = (0..rows).filter(|&i| rhs[i].is_negative()).min_by_key(|&i| basis[i]);
        let Some(r) = leaving else { break };

        let mut entering: Option<(usize, BigRational)> = None;
        for j in 0..width {
            if !tab[r][j].is_negative() {
                continue;
            }
            let ratio = &reduced[j] / -tab[r][j].clone();
            match &entering {
                Some((_, best)) if ratio >= *best => {}
                _ => entering = Some((j, ratio)),
            }
        }
        let Some((e, _)) = entering else {
            return Err(LpError::Infeasible);
        };

        let pivot = tab[r][e].clone();
        for v in tab[r].iter_mut() {
            *v /= &pivot;
        }
        rhs[r] /= &pivot;
        let pivot_row = tab[r].clone();
        let pivot_rhs = rhs[r].clone();
        for i in 0..rows {
            if i == r || tab[i][e].is_zero() {
                continue;
            }
            let f = tab[i][e].clone();
            for (v, p) in tab[i].iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
            rhs[i] -= &f * &pivot_rhs;
        }
        if !reduced[e].is_zero() {
            let f = reduced[e].clone();
            for (v, p) in reduced.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        }
        basis[r] = e;
    }

    let mut x = vec![BigRational::zero(); cols];
    for (i, &var) in basis.iter().enumerate() {
        if var < cols {
            x[var] = rhs[i].clone();
        }
    }
    // The reduced cost of slack i is the optimal multiplier of row i.
    let y: Vec<BigRational> = (0..rows).map(|i| reduced[cols + i].clone()).collect();
    let objective = x.iter().zip(c).fold(BigRational::zero(), |acc, (xi, ci)| acc + xi * ci);
    Ok(LpSolution { x, y, objective })
}
