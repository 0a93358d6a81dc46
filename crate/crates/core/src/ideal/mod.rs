//! Monomial ideals in `k[x_1, ..., x_n]`, stored by their minimal generators.
//!
//! Variable `x_{i+1}` is index `i`, matching vertex `i` of the graph a cover
//! ideal comes from. Nothing here depends on the coefficient field.

mod decompose;

pub use decompose::{
    associated_primes, irreducible_decomposition, irreducible_decomposition_with, Decomposition, Engine,
    IrreducibleIdeal,
};

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::HashSet;
use std::fmt;

/// A monomial `x^a`, stored as its exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Monomial {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Monomial {
        Monomial { exps: vec![0; nvars] }
    }

    /// `(x_1 ... x_n)^e`.
    pub fn uniform(nvars: usize, e: u32) -> Monomial {
        Monomial { exps: vec![e; nvars] }
    }

    /// `x_i^e`.
    pub fn pure_power(nvars: usize, i: usize, e: u32) -> Monomial {
        let mut exps = vec![0; nvars];
        exps[i] = e;
        Monomial { exps }
    }

    /// The squarefree monomial on `support`.
    pub fn squarefree(nvars: usize, support: impl IntoIterator<Item = usize>) -> Monomial {
        let mut exps = vec![0; nvars];
        for i in support {
            exps[i] = 1;
        }
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.exps.len()).filter(|&i| self.exps[i] > 0).collect()
    }

    pub fn is_pure_power(&self) -> bool {
        self.exps.iter().filter(|&&e| e > 0).count() == 1
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    /// `self / other`, or `None` if `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
        })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            match e {
                1 => write!(f, "x{}", i + 1)?,
                _ => write!(f, "x{}^{}", i + 1, e)?,
            }
        }
        Ok(())
    }
}

/// A monomial ideal given by its minimal generators, sorted
/// lexicographically by exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

/// Keeps the divisibility-minimal elements of `gens`, sorted.
pub(crate) fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let nvars = gens.first().map_or(0, Monomial::nvars);
    let mut index = DivisorTrie::new(nvars);
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        // earlier entries have lower degree, so only they can divide `g`
        if !index.has_divisor(&g.exps) {
            index.insert(&g.exps);
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

/// Prefix tree over exponent vectors answering "does a stored monomial
/// divide this one".
struct DivisorTrie {
    depth: usize,
    /// children of each node as `(exponent, child)`
    nodes: Vec<Vec<(u32, usize)>>,
}

impl DivisorTrie {
    fn new(depth: usize) -> DivisorTrie {
        DivisorTrie {
            depth,
            nodes: vec![Vec::new()],
        }
    }

    fn insert(&mut self, exps: &[u32]) {
        let mut node = 0;
        for &e in exps {
            node = match self.nodes[node].iter().find(|c| c.0 == e) {
                Some(&(_, child)) => child,
                None => {
                    let child = self.nodes.len();
                    self.nodes.push(Vec::new());
                    self.nodes[node].push((e, child));
                    child
                }
            };
        }
    }

    fn has_divisor(&self, exps: &[u32]) -> bool {
        self.nodes.len() > 1 && self.search(0, 0, exps)
    }

    fn search(&self, node: usize, level: usize, exps: &[u32]) -> bool {
        if level == self.depth {
            return true;
        }
        self.nodes[node]
            .iter()
            .any(|&(e, child)| e <= exps[level] && self.search(child, level + 1, exps))
    }
}

impl MonomialIdeal {
    /// The ideal generated by `gens` (any generating set; it is reduced to
    /// the minimal one).
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Result<MonomialIdeal> {
        if let Some(g) = gens.iter().find(|g| g.nvars() != nvars) {
            return Err(Error::VariableMismatch {
                left: nvars,
                right: g.nvars(),
            });
        }
        Ok(MonomialIdeal {
            nvars,
            gens: minimalize(gens),
        })
    }

    /// Builds from exponent vectors.
    pub fn from_exponents(nvars: usize, gens: &[&[u32]]) -> Result<MonomialIdeal> {
        MonomialIdeal::new(nvars, gens.iter().map(|e| Monomial::new(e.to_vec())).collect())
    }

    pub(crate) fn from_minimal(nvars: usize, gens: Vec<Monomial>) -> MonomialIdeal {
        MonomialIdeal { nvars, gens }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    fn check_same(&self, nvars: usize) -> Result<()> {
        if self.nvars != nvars {
            Err(Error::VariableMismatch {
                left: self.nvars,
                right: nvars,
            })
        } else {
            Ok(())
        }
    }

    /// Minimal generators of `I·J`.
    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same(other.nvars)?;
        let mut seen = HashSet::with_capacity(self.gens.len() * other.gens.len());
        let products: Vec<Monomial> = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.mul(b)))
            .filter(|m| seen.insert(m.clone()))
            .collect();
        Ok(MonomialIdeal {
            nvars: self.nvars,
            gens: minimalize(products),
        })
    }

    /// Minimal generators of `I^s`.
    pub fn power(&self, s: usize) -> Result<MonomialIdeal> {
        if s < 1 {
            return Err(Error::NonPositive { what: "power s" });
        }
        let mut acc = self.clone();
        for _ in 1..s {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// `I + J`.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same(other.nvars)?;
        MonomialIdeal::new(self.nvars, self.gens.iter().chain(&other.gens).cloned().collect())
    }

    /// `I ∩ J`, generated by pairwise least common multiples.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same(other.nvars)?;
        let lcms = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.lcm(b)))
            .collect();
        Ok(MonomialIdeal {
            nvars: self.nvars,
            gens: minimalize(lcms),
        })
    }

    /// Ideal membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.check_same(m.nvars())?;
        Ok(self.gens.iter().any(|g| g.divides(m)))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// The cover ideal `J(G)`: generated by the squarefree monomials of the
/// minimal vertex covers of `G`.
pub fn cover_ideal(g: &Graph) -> Result<MonomialIdeal> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    if let Some(&v) = g.isolated_vertices().first() {
        return Err(Error::IsolatedVertex(v));
    }
    let gens = g
        .minimal_vertex_covers()
        .iter()
        .map(|c| Monomial::squarefree(g.n(), c.iter()))
        .collect();
    Ok(MonomialIdeal {
        nvars: g.n(),
        gens: minimalize(gens),
    })
}

struct PowerSearch<'a> {
    gens: &'a [Monomial],
    /// `min_degree[i]`: smallest degree among `gens[i..]`.
    min_degree: Vec<u64>,
    max_exp: Vec<u32>,
    /// Variables present in every generator.
    always: Vec<usize>,
    /// Pairs `(a, b)` such that every generator involves `x_a` or `x_b`.
    pairs: Vec<(usize, usize)>,
    failed: HashSet<(usize, u32, Vec<u32>)>,
}

impl PowerSearch<'_> {
    fn feasible_bounds(&self, idx: usize, k: u32, rest: &[u32]) -> bool {
        let total: u64 = rest.iter().map(|&e| e as u64).sum();
        if total < k as u64 * self.min_degree[idx] {
            return false;
        }
        if self.always.iter().any(|&a| rest[a] < k) {
            return false;
        }
        self.pairs.iter().all(|&(a, b)| rest[a] + rest[b] >= k)
    }

    /// Can `k` generators from `gens[idx..]` (with repetition) be multiplied
    /// under the exponent budget `rest`?
    fn dfs(&mut self, idx: usize, k: u32, rest: Vec<u32>) -> bool {
        if k == 0 {
            return true;
        }
        if idx == self.gens.len() || !self.feasible_bounds(idx, k, &rest) {
            return false;
        }
        // exponents beyond what k more generators could use are irrelevant
        let rest: Vec<u32> = rest.iter().zip(&self.max_exp).map(|(&r, &m)| r.min(k * m)).collect();
        let key = (idx, k, rest);
        if self.failed.contains(&key) {
            return false;
        }
        let (_, _, rest) = key;
        let g = &self.gens[idx];
        if g.exps.iter().zip(&rest).all(|(a, r)| a <= r) {
            let taken = rest.iter().zip(&g.exps).map(|(r, a)| r - a).collect();
            if self.dfs(idx, k - 1, taken) {
                return true;
            }
        }
        if self.dfs(idx + 1, k, rest.clone()) {
            return true;
        }
        self.failed.insert((idx, k, rest));
        false
    }
}

/// Decides `m ∈ J^d` directly, by searching for `d` generators of `J`
/// (repetition allowed) whose product divides `m`. Does not form `J^d`.
pub fn contains_in_power(j: &MonomialIdeal, d: usize, m: &Monomial) -> Result<bool> {
    if d < 1 {
        return Err(Error::NonPositive { what: "power d" });
    }
    j.check_same(m.nvars())?;
    if j.is_zero() {
        return Ok(false);
    }
    let k = u32::try_from(d).map_err(|_| Error::InvariantViolation(format!("power {d} too large")))?;
    let n = j.nvars;
    let gens = &j.gens;
    let mut min_degree = vec![u64::MAX; gens.len() + 1];
    for i in (0..gens.len()).rev() {
        min_degree[i] = min_degree[i + 1].min(gens[i].degree());
    }
    let max_exp: Vec<u32> = (0..n)
        .map(|v| gens.iter().map(|g| g.exps[v]).max().unwrap_or(0))
        .collect();
    let always = (0..n).filter(|&a| gens.iter().all(|g| g.exps[a] > 0)).collect();
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if gens.iter().all(|g| g.exps[a] > 0 || g.exps[b] > 0) {
                pairs.push((a, b));
            }
        }
    }
    let mut search = PowerSearch {
        gens,
        min_degree,
        max_exp,
        always,
        pairs,
        failed: HashSet::new(),
    };
    Ok(search.dfs(0, k, m.exps.clone()))
}

/// `min { d : (x_1 ... x_n)^(d-b) ∈ J(G)^d }`, scanning `d = b, b+1, ...`.
/// This is an ideal-membership characterisation of `χ_b(G)`.
pub fn b_fold_via_membership(g: &Graph, b: usize) -> Result<usize> {
    if b < 1 {
        return Err(Error::NonPositive { what: "fold count b" });
    }
    let j = cover_ideal(g)?;
    // χ_b(G) <= b · n, so the scan terminates
    for d in b..=b * g.n() {
        let m = Monomial::uniform(g.n(), (d - b) as u32);
        if contains_in_power(&j, d, &m)? {
            return Ok(d);
        }
    }
    Err(Error::InvariantViolation(format!(
        "no d <= {} passes the membership test",
        b * g.n()
    )))
}
