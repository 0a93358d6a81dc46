//! Checks that tie the two sides together.
//!
//! * A component `(x_{i_1}^{a_1}, ..., x_{i_r}^{a_r})` of `J(G)^s` corresponds
//!   to the shadow set `Y` holding shadows `1..=s-a_j+1` of each `x_{i_j}`
//!   inside `G^s`, and the component is present exactly when `G^s` induces a
//!   critically `(s+1)`-chromatic graph on `Y`. [`verify_correspondence`]
//!   checks both directions.
//! * [`persistence_check`] compares the associated primes of `J^s` and
//!   `J^{s+1}`; [`persistence_step`] replays, for one component, the
//!   construction that lifts it to a component of `J^{s+1}` from an
//!   expansion witness.
//! * [`conjecture_search`] looks for `W` with `G[W]` critically
//!   `(χ(G)+1)`-chromatic, and [`probe_expansion`] examines a single `W`.
//! * [`technical_lemma_check`] tests the membership
//!   `(x_1...x_n)^{d-b} / m_W^b ∈ J(G)^d` with `d = χ_b(G[W])`.

use crate::coloring::{b_fold_chromatic, chi, is_critical, is_critically};
use crate::error::{Error, Result};
use crate::graph::{is_isomorphic, Graph, VertexSet};
use crate::ideal::{
    associated_primes, contains_in_power, cover_ideal, irreducible_decomposition, Decomposition, IrreducibleIdeal,
    Monomial,
};
use rayon::prelude::*;

/// Shadow set of `component` inside `G^s`, using the vertex numbering of
/// [`Graph::power_expansion`].
pub fn component_to_y(component: &IrreducibleIdeal, s: usize) -> Result<VertexSet> {
    let s32 = s as u32;
    let mut members = Vec::new();
    for (i, a) in component.pairs() {
        if a < 1 || a > s32 {
            return Err(Error::ExponentOutOfRange {
                var: i + 1,
                exponent: a,
                s: s32,
            });
        }
        for copy in 1..=(s32 - a + 1) as usize {
            members.push(Graph::shadow_index(i, copy, s));
        }
    }
    Ok(VertexSet::new(members))
}

/// One component of `J(G)^s` with the outcome of its criticality check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentCorrespondence {
    pub component: IrreducibleIdeal,
    pub s: usize,
    pub y: VertexSet,
    /// `G^s` induces a critically `(s+1)`-chromatic graph on `y`.
    pub verified_critical: bool,
    pub chi: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrespondenceReport {
    pub s: usize,
    pub components: Vec<ComponentCorrespondence>,
    /// Number of exponent vectors examined for the converse direction
    /// (zero when the converse was not requested).
    pub converse_candidates: usize,
    /// Exponent vectors whose shadow set induces a critically
    /// `(s+1)`-chromatic graph but which are missing from the decomposition.
    pub unmatched: Vec<IrreducibleIdeal>,
}

impl CorrespondenceReport {
    pub fn all_verified(&self) -> bool {
        self.components.iter().all(|c| c.verified_critical) && self.unmatched.is_empty()
    }

    pub fn failures(&self) -> Vec<&ComponentCorrespondence> {
        self.components.iter().filter(|c| !c.verified_critical).collect()
    }
}

fn check_component(gs: &Graph, component: &IrreducibleIdeal, s: usize) -> Result<ComponentCorrespondence> {
    let y = component_to_y(component, s)?;
    let h = gs.induced_subgraph(&y)?;
    let chi_h = chi(&h);
    let verified_critical = chi_h == s + 1 && is_critically(&h, s + 1);
    Ok(ComponentCorrespondence {
        component: component.clone(),
        s,
        y,
        verified_critical,
        chi: chi_h,
    })
}

/// Exponent vectors with entries in `1..=s` over every non-empty support.
fn exponent_candidates(n: usize, s: u32) -> Vec<IrreducibleIdeal> {
    let mut out = Vec::new();
    let mut digits = vec![0u32; n];
    loop {
        // odometer over {0, 1, ..., s}^n, 0 meaning "not in the support"
        let mut k = 0;
        while k < n && digits[k] == s {
            digits[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
        digits[k] += 1;
        out.push(IrreducibleIdeal::from_dense(digits.clone()));
    }
    out.sort();
    out
}

/// Decomposes `J(G)^s`, checks every component's shadow set, and (with
/// `converse`) checks that every critically `(s+1)`-chromatic shadow set of
/// canonical form has its component in the decomposition.
pub fn verify_correspondence(g: &Graph, s: usize, converse: bool) -> Result<CorrespondenceReport> {
    let j = cover_ideal(g)?.power(s)?;
    let decomposition = irreducible_decomposition(&j)?;
    verify_with_decomposition(g, s, &decomposition, converse)
}

/// As [`verify_correspondence`] with a precomputed decomposition of
/// `J(G)^s`.
pub fn verify_with_decomposition(
    g: &Graph,
    s: usize,
    decomposition: &Decomposition,
    converse: bool,
) -> Result<CorrespondenceReport> {
    let gs = g.power_expansion(s)?;
    let components = decomposition
        .components()
        .par_iter()
        .map(|c| check_component(&gs, c, s))
        .collect::<Result<Vec<_>>>()?;

    let (converse_candidates, unmatched) = if converse {
        let candidates = exponent_candidates(g.n(), s as u32);
        let unmatched = candidates
            .par_iter()
            .filter(|c| !decomposition.has_component(c))
            .map(|c| check_component(&gs, c, s).map(|r| (c, r.verified_critical)))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(|&(_, critical)| critical)
            .map(|(c, _)| c.clone())
            .collect();
        (candidates.len(), unmatched)
    } else {
        (0, Vec::new())
    };
    Ok(CorrespondenceReport {
        s,
        components,
        converse_candidates,
        unmatched,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PersistenceOutcome {
    pub s: usize,
    pub holds: bool,
    /// Primes of `J^s` that are not associated to `J^{s+1}`.
    pub missing: Vec<VertexSet>,
    pub ass_s: Vec<VertexSet>,
    pub ass_next: Vec<VertexSet>,
}

fn compare_primes(s: usize, ass_s: Vec<VertexSet>, ass_next: Vec<VertexSet>) -> PersistenceOutcome {
    let missing: Vec<VertexSet> = ass_s
        .iter()
        .filter(|p| ass_next.binary_search(p).is_err())
        .cloned()
        .collect();
    PersistenceOutcome {
        s,
        holds: missing.is_empty(),
        missing,
        ass_s,
        ass_next,
    }
}

/// `Ass(R/J^s) ⊆ Ass(R/J^{s+1})` for `J = J(G)`.
pub fn persistence_check(g: &Graph, s: usize) -> Result<PersistenceOutcome> {
    if s < 1 {
        return Err(Error::NonPositive { what: "power s" });
    }
    let j = cover_ideal(g)?;
    let js = j.power(s)?;
    let next = js.multiply(&j)?;
    Ok(compare_primes(s, associated_primes(&js)?, associated_primes(&next)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    MaximalIndependentOnly,
    AllSubsets,
}

/// Outcome of expanding a critical graph at one vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureWitness {
    pub w: VertexSet,
    pub is_maximal_independent: bool,
    pub expanded_chi: usize,
    /// `G[W]` is critically `(χ(G)+1)`-chromatic.
    pub expanded_critical: bool,
}

impl ConjectureWitness {
    pub fn is_witness(&self) -> bool {
        self.expanded_critical
    }
}

fn is_maximal_independent(g: &Graph, w: &VertexSet) -> bool {
    if !g.is_independent(w) {
        return false;
    }
    let mask = w.mask();
    (0..g.n()).all(|v| w.contains(v) || g.neighbor_mask(v) & mask != 0)
}

fn probe_with_chi(g: &Graph, chi_g: usize, w: &VertexSet) -> Result<ConjectureWitness> {
    let expanded = g.expand(w)?;
    let expanded_chi = chi(&expanded);
    let expanded_critical = expanded_chi == chi_g + 1 && is_critically(&expanded, chi_g + 1);
    Ok(ConjectureWitness {
        w: w.clone(),
        is_maximal_independent: is_maximal_independent(g, w),
        expanded_chi,
        expanded_critical,
    })
}

/// Expands `g` at `w` and reports the chromatic number and criticality of
/// the result. If `g` is critical, `w` is maximal independent and the
/// chromatic number goes up, the expansion must be critical; a violation is
/// returned as an error.
pub fn probe_expansion(g: &Graph, w: &VertexSet) -> Result<ConjectureWitness> {
    let chi_g = chi(g);
    let probe = probe_with_chi(g, chi_g, w)?;
    if probe.is_maximal_independent && probe.expanded_chi == chi_g + 1 && !probe.expanded_critical {
        let crit = is_critical(g)?;
        if crit.critical {
            return Err(Error::InvariantViolation(format!(
                "critical graph expanded at maximal independent set {w} has chi {} but is not critical",
                probe.expanded_chi
            )));
        }
    }
    Ok(probe)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub found: bool,
    pub witness: Option<ConjectureWitness>,
    /// The whole candidate space of the mode was scanned without success.
    pub exhausted: bool,
    /// Size of the candidate batches submitted: all maximal independent
    /// sets, plus one batch per subset size in [`SearchMode::AllSubsets`].
    pub candidates_tried: usize,
}

fn subsets_of_size(n: usize, k: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(VertexSet::new(idx.iter().copied()));
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Searches for `W` such that `G[W]` is critically `(χ(G)+1)`-chromatic.
/// Maximal independent sets are tried first in canonical order; in
/// [`SearchMode::AllSubsets`] the remaining subsets follow by increasing
/// size, then lexicographically. The first witness in that order is
/// returned regardless of scheduling.
pub fn conjecture_search(g: &Graph, mode: SearchMode) -> Result<SearchOutcome> {
    let crit = is_critical(g)?;
    if !crit.critical {
        return Err(Error::NotCritical {
            chi: crit.chi,
            failing: crit.failing_vertices,
        });
    }
    let chi_g = crit.chi;
    let mis = g.maximal_independent_sets();
    let mut tried = 0;

    let mut scan = |candidates: &[VertexSet]| -> Result<Option<ConjectureWitness>> {
        tried += candidates.len();
        let hit = candidates
            .par_iter()
            .find_map_first(|w| match probe_with_chi(g, chi_g, w) {
                Ok(p) if p.expanded_critical => Some(Ok(p)),
                Ok(_) => None,
                Err(e) => Some(Err(e)),
            });
        hit.transpose()
    };

    if let Some(w) = scan(&mis)? {
        return Ok(SearchOutcome {
            found: true,
            witness: Some(w),
            exhausted: false,
            candidates_tried: tried,
        });
    }
    if mode == SearchMode::AllSubsets {
        for k in 0..=g.n() {
            let rest: Vec<VertexSet> = subsets_of_size(g.n(), k)
                .into_iter()
                .filter(|w| mis.binary_search(w).is_err())
                .collect();
            if let Some(w) = scan(&rest)? {
                return Ok(SearchOutcome {
                    found: true,
                    witness: Some(w),
                    exhausted: false,
                    candidates_tried: tried,
                });
            }
        }
    }
    Ok(SearchOutcome {
        found: false,
        witness: None,
        exhausted: true,
        candidates_tried: tried,
    })
}

/// `d = χ_b(G[W])` and the monomial `(x_1...x_n)^{d-b} / m_W^b`, where
/// `m_W` is the product of the variables in `W`.
pub fn technical_lemma_monomial(g: &Graph, w: &VertexSet, b: usize) -> Result<(usize, Monomial)> {
    let expanded = g.expand(w)?;
    let d = b_fold_chromatic(&expanded, b)?.value;
    let mut exps = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let e = d as i64 - b as i64 - if w.contains(v) { b as i64 } else { 0 };
        if e < 0 {
            return Err(Error::InvariantViolation(format!(
                "exponent of x{} would be {e} (d = {d}, b = {b})",
                v + 1
            )));
        }
        exps.push(e as u32);
    }
    Ok((d, Monomial::new(exps)))
}

/// Checks that the monomial of [`technical_lemma_monomial`] lies in
/// `J(G)^d`. The membership always holds, so `false` signals a defect
/// somewhere in the pipeline.
pub fn technical_lemma_check(g: &Graph, w: &VertexSet, b: usize) -> Result<bool> {
    let j = cover_ideal(g)?;
    let (d, m) = technical_lemma_monomial(g, w, b)?;
    contains_in_power(&j, d, &m)
}

/// Replay of the lifting argument for one component of `J(G)^s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PersistenceStep {
    pub component: IrreducibleIdeal,
    /// Expansion witness inside the induced subgraph on the shadow set, in
    /// that subgraph's numbering.
    pub witness: Option<VertexSet>,
    /// `(variable, b_i)`: shadows of each variable inside the witness.
    pub shifts: Vec<(usize, u32)>,
    /// `0 <= b_i <= a_i` for every variable of the support.
    pub shifts_in_range: bool,
    /// `(x_i^{a_i - b_i + 1})`.
    pub lifted: Option<IrreducibleIdeal>,
    /// The expanded subgraph is isomorphic to the induced subgraph of
    /// `G^{s+1}` on the lifted shadow set.
    pub isomorphic: bool,
    /// The lifted component appears in the decomposition of `J^{s+1}`.
    pub lifted_present: bool,
}

impl PersistenceStep {
    pub fn holds(&self) -> bool {
        self.witness.is_some() && self.shifts_in_range && self.isomorphic && self.lifted_present
    }
}

/// For a component of `J(G)^s`, finds an expansion witness of the induced
/// critical subgraph `H` of `G^s`, derives the shifts `b_i`, and checks that
/// the lifted component appears in `next`, the decomposition of
/// `J(G)^{s+1}`.
pub fn persistence_step(
    g: &Graph,
    s: usize,
    component: &IrreducibleIdeal,
    next: &Decomposition,
) -> Result<PersistenceStep> {
    let y = component_to_y(component, s)?;
    let h = g.power_expansion(s)?.induced_subgraph(&y)?;
    let search = conjecture_search(&h, SearchMode::AllSubsets)?;
    let mut step = PersistenceStep {
        component: component.clone(),
        witness: None,
        shifts: Vec::new(),
        shifts_in_range: false,
        lifted: None,
        isomorphic: false,
        lifted_present: false,
    };
    let Some(found) = search.witness else {
        return Ok(step);
    };
    let labels = h.labels().expect("power expansion is labelled");
    let mut lifted = vec![0u32; g.n()];
    let mut in_range = true;
    for (i, a) in component.pairs() {
        let b = found.w.iter().filter(|&v| labels[v].base == i).count() as u32;
        in_range &= b <= a;
        step.shifts.push((i, b));
        lifted[i] = a + 1 - b.min(a);
    }
    let lifted = IrreducibleIdeal::from_dense(lifted);
    let y_next = component_to_y(&lifted, s + 1)?;
    let h_next = g.power_expansion(s + 1)?.induced_subgraph(&y_next)?;
    step.isomorphic = is_isomorphic(&h.expand(&found.w)?, &h_next);
    step.lifted_present = next.has_component(&lifted);
    step.shifts_in_range = in_range;
    step.lifted = Some(lifted);
    step.witness = Some(found.w);
    Ok(step)
}

/// A persistence failure (or a graph the sweep could not process).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepFinding {
    pub graph_index: usize,
    pub s: usize,
    pub missing: Vec<VertexSet>,
    /// Components of `J^s` whose support is missing from `Ass(J^{s+1})`.
    pub evidence: Vec<IrreducibleIdeal>,
    pub error: Option<Error>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub graphs: usize,
    pub checks: usize,
    pub failures: Vec<SweepFinding>,
}

impl SweepReport {
    pub fn clean(&self) -> bool {
        self.failures.is_empty()
    }
}

fn sweep_one(index: usize, g: &Graph, s_max: usize) -> (usize, Vec<SweepFinding>) {
    let err = |s: usize, e: Error| SweepFinding {
        graph_index: index,
        s,
        missing: vec![],
        evidence: vec![],
        error: Some(e),
    };
    let j = match cover_ideal(g) {
        Ok(j) => j,
        Err(e) => return (0, vec![err(0, e)]),
    };
    let mut decomps: Vec<Decomposition> = Vec::with_capacity(s_max + 1);
    let mut power = j.clone();
    for s in 1..=s_max + 1 {
        if s > 1 {
            power = match power.multiply(&j) {
                Ok(p) => p,
                Err(e) => return (0, vec![err(s, e)]),
            };
        }
        match irreducible_decomposition(&power) {
            Ok(d) => decomps.push(d),
            Err(e) => return (0, vec![err(s, e)]),
        }
    }
    let primes = |d: &Decomposition| {
        let mut p: Vec<VertexSet> = d.components().iter().map(IrreducibleIdeal::support).collect();
        p.sort();
        p.dedup();
        p
    };
    let mut findings = Vec::new();
    for s in 1..=s_max {
        let outcome = compare_primes(s, primes(&decomps[s - 1]), primes(&decomps[s]));
        if !outcome.holds {
            let evidence = decomps[s - 1]
                .components()
                .iter()
                .filter(|c| outcome.missing.contains(&c.support()))
                .cloned()
                .collect();
            findings.push(SweepFinding {
                graph_index: index,
                s,
                missing: outcome.missing,
                evidence,
                error: None,
            });
        }
    }
    (s_max, findings)
}

/// Runs the persistence comparison for `s = 1..=s_max` on every graph.
/// Failures (and graphs without a cover ideal) are recorded, not raised.
pub fn persistence_sweep(family: &[Graph], s_max: usize) -> SweepReport {
    let results: Vec<(usize, Vec<SweepFinding>)> = family
        .par_iter()
        .enumerate()
        .map(|(i, g)| sweep_one(i, g, s_max))
        .collect();
    let mut report = SweepReport {
        graphs: family.len(),
        ..Default::default()
    };
    for (checks, findings) in results {
        report.checks += checks;
        report.failures.extend(findings);
    }
    report
}
