mod common;

use chromideal::coloring::{b_fold_chromatic, chi, chromatic_number, fractional_chromatic, is_critical, Rational};
use chromideal::correspondence::{persistence_step, technical_lemma_check, verify_correspondence};
use chromideal::graph::{is_isomorphic, Graph, VertexSet};
use chromideal::ideal::{
    associated_primes, b_fold_via_membership, contains_in_power, cover_ideal, irreducible_decomposition,
    irreducible_decomposition_with, Engine, Monomial, MonomialIdeal,
};
use common::*;
use proptest::prelude::*;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

fn graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
    })
}

fn graph_without_isolated(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    graph(min_n, max_n).prop_filter("needs edges and no isolated vertex", |g| {
        g.edge_count() > 0 && g.isolated_vertices().is_empty()
    })
}

fn graph_and_subset(min_n: usize, max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    graph(min_n, max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), prop::collection::vec(any::<bool>(), n))
            .prop_map(|(g, pick)| (g, VertexSet::new((0..pick.len()).filter(|&i| pick[i]))))
    })
}

fn ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=5).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(0u32..=4, n), 1..=6)
            .prop_map(move |gens| MonomialIdeal::new(n, gens.into_iter().map(Monomial::new).collect()).unwrap())
    })
}

fn proper_ideal() -> impl Strategy<Value = MonomialIdeal> {
    ideal().prop_filter("proper ideal", |i| !i.is_unit())
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn same_vars_pair() -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal)> {
    (1usize..=4).prop_flat_map(|n| {
        let one = move || {
            prop::collection::vec(prop::collection::vec(0u32..=3, n), 1..=4)
                .prop_map(move |gens| MonomialIdeal::new(n, gens.into_iter().map(Monomial::new).collect()).unwrap())
        };
        (one(), one())
    })
}

proptest! {
    #![proptest_config(config(128))]

    #[test]
    fn chromatic_number_matches_oracle(g in graph(0, 8)) {
        let c = chromatic_number(&g);
        prop_assert_eq!(c.value, brute_chi(&g));
        if let Some(w) = c.witness {
            prop_assert!(w.validate(&g).is_ok());
            prop_assert_eq!(w.colors_used, c.value);
        }
    }

    #[test]
    fn criticality_matches_oracle(g in graph(1, 6)) {
        let crit = is_critical(&g).unwrap();
        prop_assert_eq!(crit.critical, brute_critical(&g));
        prop_assert_eq!(crit.critical, crit.failing_vertices.is_empty());
    }

    #[test]
    fn independent_sets_match_oracle(g in graph(0, 8)) {
        let mis = g.maximal_independent_sets();
        prop_assert_eq!(&mis, &brute_maximal_independent_sets(&g));
        let covers = g.minimal_vertex_covers();
        prop_assert_eq!(covers.len(), mis.len());
        for (c, s) in covers.iter().zip(&mis) {
            prop_assert_eq!(c, &s.complement(g.n()));
        }
        prop_assert_eq!(g.independence_number(), brute_alpha(&g));
    }

    #[test]
    fn isomorphism_matches_oracle(g in graph(1, 6), h in graph(1, 6)) {
        prop_assert_eq!(is_isomorphic(&g, &h), brute_isomorphic(&g, &h));
    }

    #[test]
    fn relabelling_preserves_isomorphism_class((g, perm) in graph(1, 9).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), permutation(n))
    })) {
        prop_assert!(is_isomorphic(&g, &relabel(&g, &perm)));
    }

    #[test]
    fn power_expansion_shape(g in graph(1, 7), s in 1usize..=3) {
        let gs = g.power_expansion(s).unwrap();
        prop_assert_eq!(gs.n(), g.n() * s);
        prop_assert_eq!(gs.edge_count(), g.n() * s * (s - 1) / 2 + g.edge_count() * s * s);
        let labels = gs.labels().unwrap();
        for (v, label) in labels.iter().enumerate() {
            prop_assert_eq!(label.base, v / s);
            prop_assert_eq!(label.copy, v % s + 1);
        }
        if s == 1 {
            prop_assert!(is_isomorphic(&gs, &g));
        }
    }

    #[test]
    fn expansion_shape((g, w) in graph_and_subset(0, 8)) {
        let e = g.expand(&w).unwrap();
        let inside = g.edges().iter().filter(|&&(u, v)| w.contains(u) && w.contains(v)).count();
        let degrees: usize = w.iter().map(|v| g.degree(v)).sum();
        prop_assert_eq!(e.n(), g.n() + w.len());
        prop_assert_eq!(e.edge_count(), g.edge_count() + w.len() + degrees + inside);
        prop_assert_eq!(e.induced_subgraph(&VertexSet::new(0..g.n())).unwrap().edges(), g.edges());
        if w.is_empty() {
            prop_assert_eq!((e.n(), e.edges()), (g.n(), g.edges()));
        }
    }

    #[test]
    fn expansion_is_a_power_expansion_slice((g, w) in graph_and_subset(1, 6)) {
        // shadows 1 and 2 of W together with shadow 1 of the rest
        let members = (0..g.n()).flat_map(|v| {
            let copies = if w.contains(v) { 2 } else { 1 };
            (1..=copies).map(move |j| Graph::shadow_index(v, j, 2))
        });
        let slice = g.power_expansion(2).unwrap().induced_subgraph(&VertexSet::new(members)).unwrap();
        prop_assert!(is_isomorphic(&slice, &g.expand(&w).unwrap()));
    }

    #[test]
    fn mycielski_raises_chromatic_number(g in graph(1, 6)) {
        let m = g.mycielski().unwrap();
        prop_assert_eq!(m.n(), 2 * g.n() + 1);
        prop_assert_eq!(m.edge_count(), 3 * g.edge_count() + g.n());
        if g.edge_count() > 0 {
            prop_assert_eq!(chi(&m), chi(&g) + 1);
            prop_assert_eq!(m.clique_number(), g.clique_number());
        }
    }

    #[test]
    fn cover_ideal_is_vertex_cover_membership(g in graph_without_isolated(2, 7)) {
        let j = cover_ideal(&g).unwrap();
        prop_assert!(j.is_squarefree());
        for m in box_monomials(g.n(), 1) {
            let cover = g.edges().iter().all(|&(u, v)| m.exponent(u) > 0 || m.exponent(v) > 0);
            prop_assert_eq!(j.contains(&m).unwrap(), cover);
        }
    }

    #[test]
    fn decomposition_matches_membership(i in proper_ideal()) {
        let d = irreducible_decomposition(&i).unwrap();
        for m in box_monomials(i.nvars(), 5) {
            prop_assert_eq!(d.contains(&m), divides_some(i.gens(), &m));
        }
        prop_assert_eq!(d.to_ideal(), i.clone());
        let mut supports: Vec<VertexSet> = d.components().iter().map(|c| c.support()).collect();
        supports.sort();
        supports.dedup();
        prop_assert_eq!(associated_primes(&i).unwrap(), supports);
    }

    #[test]
    fn decomposition_is_irredundant(i in proper_ideal()) {
        let d = irreducible_decomposition(&i).unwrap();
        let comps = d.components();
        for (k, c) in comps.iter().enumerate() {
            for (l, o) in comps.iter().enumerate() {
                prop_assert!(k == l || !c.contains_ideal(o), "{} contains {}", c, o);
            }
        }
        prop_assert!(comps.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn engines_agree(i in proper_ideal()) {
        prop_assert_eq!(
            irreducible_decomposition_with(&i, Engine::Splitting).unwrap(),
            irreducible_decomposition_with(&i, Engine::Incremental).unwrap()
        );
    }

    #[test]
    fn engines_agree_on_cover_ideal_powers(g in graph_without_isolated(2, 6), s in 1usize..=3) {
        let j = cover_ideal(&g).unwrap().power(s).unwrap();
        prop_assert_eq!(
            irreducible_decomposition_with(&j, Engine::Splitting).unwrap(),
            irreducible_decomposition_with(&j, Engine::Incremental).unwrap()
        );
    }

    #[test]
    fn ideal_operations_respect_membership((a, b) in same_vars_pair()) {
        let sum = a.sum(&b).unwrap();
        let meet = a.intersect(&b).unwrap();
        let product = a.multiply(&b).unwrap();
        prop_assert_eq!(&product, &b.multiply(&a).unwrap());
        for m in box_monomials(a.nvars(), 4) {
            let (in_a, in_b) = (a.contains(&m).unwrap(), b.contains(&m).unwrap());
            prop_assert_eq!(sum.contains(&m).unwrap(), in_a || in_b);
            prop_assert_eq!(meet.contains(&m).unwrap(), in_a && in_b);
            if product.contains(&m).unwrap() {
                prop_assert!(in_a && in_b);
            }
        }
    }

    #[test]
    fn power_membership_matches_expanded_power(g in graph_without_isolated(2, 5), d in 1usize..=3) {
        let j = cover_ideal(&g).unwrap();
        let gens = brute_power(&j, d);
        let power = j.power(d).unwrap();
        prop_assert_eq!(power.gens(), gens.as_slice());
        for m in box_monomials(g.n(), d as u32) {
            prop_assert_eq!(contains_in_power(&j, d, &m).unwrap(), divides_some(&gens, &m));
        }
    }

    #[test]
    fn components_have_exponents_up_to_s(g in graph_without_isolated(2, 6), s in 1usize..=3) {
        let d = irreducible_decomposition(&cover_ideal(&g).unwrap().power(s).unwrap()).unwrap();
        for c in d.components() {
            prop_assert!(c.pairs().all(|(_, a)| a >= 1 && a as usize <= s), "{}", c);
        }
    }
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn b_fold_matches_lexicographic_product(g in graph(1, 5), b in 1usize..=3) {
        let r = b_fold_chromatic(&g, b).unwrap();
        prop_assert!(r.witness.validate(&g).is_ok());
        prop_assert_eq!(r.witness.b, b);
        prop_assert_eq!(r.value, brute_chi(&lexicographic_with_clique(&g, b)));
    }

    #[test]
    fn b_fold_by_membership(g in graph_without_isolated(2, 6), b in 1usize..=2) {
        prop_assert_eq!(b_fold_via_membership(&g, b).unwrap(), b_fold_chromatic(&g, b).unwrap().value);
    }

    #[test]
    fn fractional_chromatic_bounds(g in graph(1, 8)) {
        let f = fractional_chromatic(&g).unwrap();
        let q = |n: usize, d: usize| Rational::new(n as i64, d as i64);
        prop_assert!(f.certificate.verify(&g).is_ok());
        prop_assert!(q(g.clique_number(), 1) <= f.value);
        prop_assert!(f.value <= q(chi(&g), 1));
        prop_assert!(q(g.n(), brute_alpha(&g)) <= f.value);
        prop_assert!(f.witness.validate(&g).is_ok());
        prop_assert_eq!(q(f.witness.colors_used, f.achieving_b), f.value);
        if f.achieving_b <= 3 {
            prop_assert_eq!(q(b_fold_chromatic(&g, f.achieving_b).unwrap().value, f.achieving_b), f.value);
        }
    }

    #[test]
    fn correspondence_holds_on_small_graphs(g in graph_without_isolated(2, 5), s in 1usize..=2) {
        let r = verify_correspondence(&g, s, true).unwrap();
        prop_assert!(r.all_verified(), "{:?}", r);
    }

    #[test]
    fn components_lift_to_the_next_power(g in graph_without_isolated(2, 5), s in 1usize..=2) {
        let j = cover_ideal(&g).unwrap();
        let d = irreducible_decomposition(&j.power(s).unwrap()).unwrap();
        let next = irreducible_decomposition(&j.power(s + 1).unwrap()).unwrap();
        for c in d.components() {
            let step = persistence_step(&g, s, c, &next).unwrap();
            prop_assert!(step.holds(), "{}: {:?}", c, step);
        }
    }

    #[test]
    fn technical_lemma_on_random_inputs((g, w) in graph_and_subset(2, 7), b in 1usize..=2) {
        prop_assume!(g.edge_count() > 0 && g.isolated_vertices().is_empty());
        prop_assert!(technical_lemma_check(&g, &w, b).unwrap());
    }
}
