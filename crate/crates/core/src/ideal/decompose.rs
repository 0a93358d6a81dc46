//! Irredundant irreducible decomposition of monomial ideals.
//!
//! Two engines are provided:
//!
//! * Splitting: if a minimal generator `m` factors as `u·v` with
//!   `gcd(u, v) = 1`, then `I = (I + (u)) ∩ (I + (v))`. Splitting repeatedly
//!   ends at ideals generated by pure powers, which are irreducible. The
//!   components gathered from both branches are then pruned.
//! * Incremental: start from the decomposition of one principal ideal and
//!   add the remaining generators one by one, refining components that do
//!   not contain the new generator.
//!
//! In both, an irreducible component that contains another one is
//! redundant, and dropping all such components leaves the irredundant
//! decomposition (irreducible monomial ideals are meet-prime in the lattice
//! of monomial ideals).

use super::{minimalize, Monomial, MonomialIdeal};
use crate::error::{Error, Result};
use crate::graph::VertexSet;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

/// `(x_i^{a_i} : a_i >= 1)`. Stored densely; exponent 0 marks a variable
/// outside the support.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IrreducibleIdeal {
    exps: Vec<u32>,
}

impl IrreducibleIdeal {
    /// From `(variable, exponent)` pairs. Exponents must be positive.
    pub fn new(nvars: usize, pairs: impl IntoIterator<Item = (usize, u32)>) -> Result<IrreducibleIdeal> {
        let mut exps = vec![0; nvars];
        for (i, a) in pairs {
            if i >= nvars {
                return Err(Error::VariableMismatch {
                    left: nvars,
                    right: i + 1,
                });
            }
            if a == 0 {
                return Err(Error::NonPositive {
                    what: "irreducible exponent",
                });
            }
            exps[i] = a;
        }
        Ok(IrreducibleIdeal { exps })
    }

    /// Dense exponent vector, zero outside the support.
    pub fn from_dense(exps: Vec<u32>) -> IrreducibleIdeal {
        IrreducibleIdeal { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn support(&self) -> VertexSet {
        (0..self.exps.len()).filter(|&i| self.exps[i] > 0).collect()
    }

    pub fn exponent(&self, i: usize) -> Option<u32> {
        (self.exps[i] > 0).then_some(self.exps[i])
    }

    /// `(variable, exponent)` pairs over the support, by variable.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| (i, a))
    }

    pub fn dense(&self) -> &[u32] {
        &self.exps
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.pairs().any(|(i, a)| m.exponent(i) >= a)
    }

    /// `self ⊇ other`: every generator `x_i^{b_i}` of `other` is divisible by
    /// `x_i^{a_i}`.
    pub fn contains_ideal(&self, other: &IrreducibleIdeal) -> bool {
        contains_dense(&self.exps, &other.exps)
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let n = self.exps.len();
        MonomialIdeal::from_minimal(
            n,
            minimalize(self.pairs().map(|(i, a)| Monomial::pure_power(n, i, a)).collect()),
        )
    }

    fn sort_key(&self) -> (Vec<usize>, Vec<u32>) {
        let (s, e) = self.pairs().unzip();
        (s, e)
    }
}

impl PartialOrd for IrreducibleIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on `(support, exponents on the support)`.
impl Ord for IrreducibleIdeal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for IrreducibleIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, (i, a)) in self.pairs().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            match a {
                1 => write!(f, "x{}", i + 1)?,
                _ => write!(f, "x{}^{}", i + 1, a)?,
            }
        }
        write!(f, ")")
    }
}

fn contains_dense(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(&ai, &bi)| bi == 0 || (ai > 0 && ai <= bi))
}

/// Drops duplicates and every component that contains another component.
fn prune(mut comps: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    comps.sort();
    comps.dedup();
    let keep: Vec<bool> = (0..comps.len())
        .map(|i| !(0..comps.len()).any(|j| j != i && contains_dense(&comps[i], &comps[j])))
        .collect();
    comps
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect()
}

/// The unique irredundant irreducible decomposition of an ideal, in
/// canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    nvars: usize,
    components: Vec<IrreducibleIdeal>,
}

impl Decomposition {
    pub fn components(&self) -> &[IrreducibleIdeal] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Membership in the intersection of the components.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.components.iter().all(|c| c.contains(m))
    }

    pub fn has_component(&self, c: &IrreducibleIdeal) -> bool {
        self.components.binary_search(c).is_ok()
    }

    /// Recomputes the ideal as the intersection of the components.
    pub fn to_ideal(&self) -> MonomialIdeal {
        let mut it = self.components.iter().map(IrreducibleIdeal::to_ideal);
        let first = it.next().expect("decomposition of a proper nonzero ideal is non-empty");
        it.fold(first, |acc, c| acc.intersect(&c).expect("same variable count"))
    }
}

type Memo = HashMap<Vec<Monomial>, Rc<Vec<Vec<u32>>>>;

/// Adds the generator `extra` (which no current generator divides) and drops
/// the generators it divides.
fn with_generator(gens: &[Monomial], extra: Monomial) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = gens.iter().filter(|g| !extra.divides(g)).cloned().collect();
    let at = out.binary_search(&extra).unwrap_or_else(|p| p);
    out.insert(at, extra);
    out
}

fn decompose_gens(gens: Vec<Monomial>, memo: &mut Memo) -> Rc<Vec<Vec<u32>>> {
    if let Some(hit) = memo.get(&gens) {
        return Rc::clone(hit);
    }
    // first generator (lex order) that is not a pure power
    let result = match gens.iter().find(|g| !g.is_pure_power()) {
        None => {
            let mut exps = vec![0; gens.first().map_or(0, Monomial::nvars)];
            for g in &gens {
                let i = g.support()[0];
                exps[i] = g.exponent(i);
            }
            Rc::new(vec![exps])
        }
        Some(m) => {
            let i = m.support()[0];
            let u = Monomial::pure_power(m.nvars(), i, m.exponent(i));
            let v = m.checked_div(&u).expect("u divides m");
            let left = decompose_gens(with_generator(&gens, u), memo);
            let right = decompose_gens(with_generator(&gens, v), memo);
            Rc::new(prune(left.iter().chain(right.iter()).cloned().collect()))
        }
    };
    memo.insert(gens, Rc::clone(&result));
    result
}

/// Adds generators one at a time. A component `Q` that does not contain the
/// new generator `m` is replaced by the components `Q + (x_i^{m_i})` for `i`
/// in the support of `m`; components that contain `m` survive unchanged and
/// are never made redundant by the new ones.
fn decompose_incremental(gens: &[Monomial]) -> Vec<Vec<u32>> {
    let n = gens[0].nvars();
    let support_mask = |e: &[u32]| {
        e.iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .fold(0u128, |m, (i, _)| m | (1u128 << (i % 128)))
    };
    let mut order: Vec<&Monomial> = gens.iter().collect();
    order.sort_by_key(|g| (g.degree(), (*g).clone()));

    let mut comps: Vec<(u128, Vec<u32>)> = Vec::new();
    let first = order[0];
    for i in first.support() {
        let e = Monomial::pure_power(n, i, first.exponent(i)).exps;
        comps.push((support_mask(&e), e));
    }
    for m in &order[1..] {
        let mut kept = Vec::with_capacity(comps.len());
        let mut fresh: Vec<(u128, Vec<u32>)> = Vec::new();
        for (mask, q) in comps {
            if q.iter().zip(m.exponents()).any(|(&qi, &mi)| qi > 0 && mi >= qi) {
                kept.push((mask, q));
                continue;
            }
            for i in m.support() {
                let mut e = q.clone();
                e[i] = m.exponent(i);
                fresh.push((mask | (1u128 << (i % 128)), e));
            }
        }
        fresh.sort();
        fresh.dedup();
        let redundant = |k: usize, e: &(u128, Vec<u32>)| -> bool {
            let by_kept = kept.iter().any(|p| p.0 & !e.0 == 0 && contains_dense(&e.1, &p.1));
            by_kept
                || fresh
                    .iter()
                    .enumerate()
                    .any(|(j, p)| j != k && p.0 & !e.0 == 0 && contains_dense(&e.1, &p.1))
        };
        let survivors: Vec<bool> = fresh.iter().enumerate().map(|(k, e)| !redundant(k, e)).collect();
        kept.extend(fresh.into_iter().zip(survivors).filter_map(|(e, ok)| ok.then_some(e)));
        comps = kept;
    }
    comps.into_iter().map(|(_, e)| e).collect()
}

/// Algorithm used by [`irreducible_decomposition_with`]. Both produce the
/// same (unique) decomposition.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Engine {
    /// Recursive coprime splitting of generators with a memo table. The
    /// memo grows quickly with the number of generators.
    Splitting,
    /// Generator-by-generator refinement of the component list.
    #[default]
    Incremental,
}

/// Irredundant irreducible decomposition of a proper, nonzero monomial ideal.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Decomposition> {
    irreducible_decomposition_with(ideal, Engine::default())
}

pub fn irreducible_decomposition_with(ideal: &MonomialIdeal, engine: Engine) -> Result<Decomposition> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let comps = match engine {
        Engine::Splitting => {
            let mut memo = Memo::new();
            decompose_gens(ideal.gens().to_vec(), &mut memo).as_ref().clone()
        }
        Engine::Incremental => decompose_incremental(ideal.gens()),
    };
    let mut components: Vec<IrreducibleIdeal> = comps.into_iter().map(|exps| IrreducibleIdeal { exps }).collect();
    components.sort();
    Ok(Decomposition {
        nvars: ideal.nvars(),
        components,
    })
}

/// Supports of the irreducible components, i.e. the associated primes of
/// `R/I`, in canonical order.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<Vec<VertexSet>> {
    let d = irreducible_decomposition(ideal)?;
    let mut primes: Vec<VertexSet> = d.components().iter().map(IrreducibleIdeal::support).collect();
    primes.sort();
    primes.dedup();
    Ok(primes)
}
