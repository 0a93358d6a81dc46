//! Exact chromatic invariants: the chromatic number, criticality, the
//! `b`-fold chromatic number and the fractional chromatic number.
//!
//! * `χ(G)` is decided by DSATUR-ordered backtracking, deepening `k` from the
//!   clique number up to a greedy upper bound.
//! * `χ_b(G)` is the smallest multiset of maximal independent sets covering
//!   every vertex at least `b` times; the chosen sets are the colour classes.
//! * `χ_f(G)` is the optimum of the covering LP over all maximal independent
//!   sets, solved exactly. The certificate carries both the primal weights
//!   and the dual fractional clique, so optimality can be checked without
//!   rerunning the solver.

mod dsatur;
mod multicover;
mod simplex;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use num::{BigInt, BigRational, Integer, One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = num::rational::Ratio<i64>;

/// A `b`-fold colouring: every vertex gets `b` distinct colours from
/// `0..colors_used`, and adjacent vertices get disjoint colour sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coloring {
    pub b: usize,
    pub colors_used: usize,
    pub assignment: Vec<Vec<usize>>,
}

impl Coloring {
    /// Colour `c` is the class `classes[c]`; each vertex keeps the lowest `b`
    /// classes containing it.
    fn from_classes(g: &Graph, b: usize, classes: &[VertexSet]) -> Coloring {
        let assignment = (0..g.n())
            .map(|v| {
                classes
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| c.contains(v))
                    .map(|(i, _)| i)
                    .take(b)
                    .collect()
            })
            .collect();
        Coloring {
            b,
            colors_used: classes.len(),
            assignment,
        }
    }

    fn from_proper(colour: Vec<usize>) -> Coloring {
        let colors_used = colour.iter().map(|c| c + 1).max().unwrap_or(0);
        Coloring {
            b: 1,
            colors_used,
            assignment: colour.into_iter().map(|c| vec![c]).collect(),
        }
    }

    /// Checks the colouring invariants against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |msg: String| Err(Error::InvariantViolation(msg));
        if self.assignment.len() != g.n() {
            return bad(format!(
                "colouring covers {} of {} vertices",
                self.assignment.len(),
                g.n()
            ));
        }
        for (v, cols) in self.assignment.iter().enumerate() {
            let mut sorted = cols.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != self.b || cols.len() != self.b {
                return bad(format!("vertex {v} has colours {cols:?}, expected {} distinct", self.b));
            }
            if cols.iter().any(|&c| c >= self.colors_used) {
                return bad(format!("vertex {v} uses a colour outside 0..{}", self.colors_used));
            }
        }
        for (u, v) in g.edges() {
            if self.assignment[u].iter().any(|c| self.assignment[v].contains(c)) {
                return bad(format!("adjacent vertices {u} and {v} share a colour"));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Chromatic {
    pub value: usize,
    /// Absent only for the graph with no vertices.
    pub witness: Option<Coloring>,
}

/// Exact chromatic number with a proper colouring attaining it.
pub fn chromatic_number(g: &Graph) -> Chromatic {
    if g.n() == 0 {
        return Chromatic {
            value: 0,
            witness: None,
        };
    }
    let greedy = dsatur::greedy(g.masks());
    let upper = greedy.iter().max().map_or(0, |c| c + 1);
    for k in g.clique_number()..upper {
        if let Some(colour) = dsatur::colour_with(g.masks(), k) {
            return Chromatic {
                value: k,
                witness: Some(Coloring::from_proper(colour)),
            };
        }
    }
    Chromatic {
        value: upper,
        witness: Some(Coloring::from_proper(greedy)),
    }
}

/// Shorthand for `chromatic_number(g).value`.
pub fn chi(g: &Graph) -> usize {
    chromatic_number(g).value
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Criticality {
    pub critical: bool,
    pub chi: usize,
    /// Vertices whose deletion leaves the chromatic number unchanged.
    pub failing_vertices: Vec<usize>,
}

/// `G` is critical iff `χ(G \ v) = χ(G) - 1` for every vertex `v`.
pub fn is_critical(g: &Graph) -> Result<Criticality> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let chi_g = chi(g);
    let failing: Vec<usize> = (0..g.n())
        .into_par_iter()
        .filter(|&v| {
            let h = g.delete_vertex(v).expect("vertex in range");
            chi(&h) == chi_g
        })
        .collect();
    Ok(Criticality {
        critical: failing.is_empty(),
        chi: chi_g,
        failing_vertices: failing,
    })
}

/// True iff `g` is critically `s`-chromatic.
pub fn is_critically(g: &Graph, s: usize) -> bool {
    if g.n() == 0 || chi(g) != s {
        return false;
    }
    (0..g.n())
        .into_par_iter()
        .all(|v| chi(&g.delete_vertex(v).expect("vertex in range")) == s - 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BFold {
    pub value: usize,
    pub witness: Coloring,
}

/// Exact `b`-fold chromatic number `χ_b(G)`.
pub fn b_fold_chromatic(g: &Graph, b: usize) -> Result<BFold> {
    if b < 1 {
        return Err(Error::NonPositive { what: "fold count b" });
    }
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let demand = u16::try_from(b).map_err(|_| Error::InvariantViolation(format!("fold count {b} too large")))?;
    let sets = g.maximal_independent_sets();
    let masks: Vec<u128> = sets.iter().map(VertexSet::mask).collect();
    let chosen = multicover::min_multicover(g.n(), &masks, &vec![demand; g.n()])
        .expect("every vertex lies in a maximal independent set");
    let classes: Vec<VertexSet> = chosen.iter().map(|&i| sets[i].clone()).collect();
    let witness = Coloring::from_classes(g, b, &classes);
    Ok(BFold {
        value: classes.len(),
        witness,
    })
}

/// Optimal solution of the fractional colouring LP together with its dual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionalCertificate {
    /// Independent sets with positive weight, in canonical order.
    pub weights: Vec<(VertexSet, Rational)>,
    /// Fractional clique: per-vertex weights with total at most 1 on every
    /// independent set.
    pub clique_weights: Vec<Rational>,
    pub total: Rational,
}

impl FractionalCertificate {
    /// Checks primal feasibility, dual feasibility and equal objectives.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        let bad = |msg: String| Err(Error::InvariantViolation(msg));
        let zero = Rational::zero();
        let one = Rational::one();
        if self.weights.iter().any(|(s, w)| *w < zero || !g.is_independent(s)) {
            return bad("certificate uses a negative weight or a dependent set".into());
        }
        for v in 0..g.n() {
            let cover: Rational = self
                .weights
                .iter()
                .filter(|(s, _)| s.contains(v))
                .map(|(_, w)| *w)
                .sum();
            if cover < one {
                return bad(format!("vertex {v} covered with weight {cover}"));
            }
        }
        let total: Rational = self.weights.iter().map(|(_, w)| *w).sum();
        if total != self.total {
            return bad(format!("weights sum to {total}, certificate claims {}", self.total));
        }
        if self.clique_weights.len() != g.n() || self.clique_weights.iter().any(|w| *w < zero) {
            return bad("malformed fractional clique".into());
        }
        for s in g.maximal_independent_sets() {
            let load: Rational = s.iter().map(|v| self.clique_weights[v]).sum();
            if load > one {
                return bad(format!("fractional clique puts {load} on independent set {s}"));
            }
        }
        let clique_total: Rational = self.clique_weights.iter().sum();
        if clique_total != self.total {
            return bad(format!(
                "fractional clique {clique_total} does not match cover {}",
                self.total
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionalChromatic {
    pub value: Rational,
    pub certificate: FractionalCertificate,
    /// A fold count `b` with `χ_b(G) = b · χ_f(G)`: the least common
    /// denominator of the certificate weights. Not claimed to be minimal.
    pub achieving_b: usize,
    /// The `achieving_b`-fold colouring read off the certificate.
    pub witness: Coloring,
}

impl FractionalChromatic {
    /// Recomputes `χ_b` for `b = achieving_b` by branch and bound and checks
    /// that it equals `b · χ_f`.
    pub fn cross_check(&self, g: &Graph) -> Result<bool> {
        let b = self.achieving_b;
        let expected = self.value * Rational::from_integer(b as i64);
        Ok(expected.is_integer() && b_fold_chromatic(g, b)?.value as i64 == expected.to_integer())
    }
}

fn to_small(q: &BigRational) -> Result<Rational> {
    match (q.numer().to_i64(), q.denom().to_i64()) {
        (Some(n), Some(d)) => Ok(Rational::new(n, d)),
        _ => Err(Error::InvariantViolation(format!("rational {q} exceeds 64-bit range"))),
    }
}

/// Exact fractional chromatic number.
pub fn fractional_chromatic(g: &Graph) -> Result<FractionalChromatic> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let sets = g.maximal_independent_sets();
    let one = BigRational::one();
    let a: Vec<Vec<BigRational>> = (0..g.n())
        .map(|v| {
            sets.iter()
                .map(|s| {
                    if s.contains(v) {
                        one.clone()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    let rhs = vec![one.clone(); g.n()];
    let cost = vec![one; sets.len()];
    let sol = simplex::minimize_covering(&a, &rhs, &cost)
        .map_err(|e| Error::InvariantViolation(format!("fractional colouring LP failed: {e:?}")))?;

    let mut weights = Vec::new();
    let mut lcd = BigInt::one();
    for (s, w) in sets.iter().zip(&sol.x) {
        if !w.is_zero() {
            lcd = lcd.lcm(w.denom());
            weights.push((s.clone(), to_small(w)?));
        }
    }
    let clique_weights = sol.y.iter().map(to_small).collect::<Result<Vec<_>>>()?;
    let value = to_small(&sol.objective)?;
    let certificate = FractionalCertificate {
        weights,
        clique_weights,
        total: value,
    };

    let achieving_b = lcd
        .to_usize()
        .ok_or_else(|| Error::InvariantViolation("fold count overflow".into()))?;
    let mut classes = Vec::new();
    for (s, w) in &certificate.weights {
        let copies = (*w * Rational::from_integer(achieving_b as i64)).to_integer();
        classes.extend(std::iter::repeat_n(s.clone(), copies as usize));
    }
    let witness = Coloring::from_classes(g, achieving_b, &classes);
    Ok(FractionalChromatic {
        value,
        certificate,
        achieving_b,
        witness,
    })
}

/// True iff `χ(G) - 1 < χ_f(G) <= χ(G)`.
pub fn classify_chi_f_window(g: &Graph) -> Result<bool> {
    let chi_g = Rational::from_integer(chi(g) as i64);
    let chi_f = fractional_chromatic(g)?.value;
    Ok(chi_g - Rational::one() < chi_f && chi_f <= chi_g)
}
