mod support;

use matroid_packing::certificate::{verify_certificate, verify_even_factor, Certificate, Instance};
use matroid_packing::cnf::{CnfFormula, Literal};
use matroid_packing::constructions::{direct_sum, dual, truncate, MatroidDescriptor};
use matroid_packing::formats::{
    parse_arc_list, parse_bipartite, parse_dimacs, read_instance_json, write_arc_list, write_bipartite, write_dimacs,
    write_instance_json,
};
use matroid_packing::reductions::{
    r2_naesat_to_modular_trees, r3_evenfactor_to_c4k2, r3_factor_to_two_factor, r4_c4k2_to_paritybases,
    r5_to_partition_matroid_case, CommonBasesInstance, ModularInstance,
};
use matroid_packing::ElementSet;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use support::*;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn set_strategy(n: usize) -> impl Strategy<Value = ElementSet> {
    any::<u64>().prop_map(move |m| ElementSet::from_mask(n, m & ((1u64 << n) - 1)))
}

fn formula_strategy() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (2usize..=5).prop_flat_map(|n| {
        let lit = (1..=n as i64, any::<bool>()).prop_map(|(v, neg)| if neg { -v } else { v });
        let clause = prop::collection::vec(lit, 2..=4);
        (Just(n), prop::collection::vec(clause, 0..=5))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn set_algebra(a in set_strategy(40), b in set_strategy(40)) {
        prop_assert_eq!(a.complement().complement(), a.clone());
        prop_assert_eq!(a.union(&b).complement(), a.complement().intersection(&b.complement()));
        prop_assert_eq!(a.difference(&b).union(&a.intersection(&b)), a.clone());
        prop_assert_eq!(a.embed(100, 30).slice(30, 40), a.clone());
        prop_assert!(a.intersection(&b).is_subset(&a));
        prop_assert_eq!(a.len() + a.complement().len(), 40);
    }

    #[test]
    fn independence_is_down_closed_and_exchanges(seed in any::<u64>(), n in 1usize..=7) {
        let m = random_matroid(&mut rng(seed), n, 3);
        prop_assert_eq!(axioms_brute(&m), Ok(()));
    }

    #[test]
    fn dual_is_an_involution_with_rank_formula(seed in any::<u64>(), n in 1usize..=8) {
        let m = random_matroid(&mut rng(seed), n, 2);
        let d = dual(&m);
        prop_assert!(dual(&d).oracle_equivalent(&m, 24).unwrap());
        let r = m.full_rank();
        for x in subsets(n) {
            prop_assert_eq!(d.rank_of(&x), x.len() + m.rank_of(&x.complement()) - r);
        }
    }

    #[test]
    fn rank_is_a_matroid_rank(seed in any::<u64>(), n in 1usize..=8) {
        let m = random_matroid(&mut rng(seed), n, 2);
        prop_assert_eq!(m.rank_of(&ElementSet::empty(n)), 0);
        for x in subsets(n) {
            let rx = m.rank_of(&x);
            for e in 0..n {
                let re = m.rank_of(&x.with(e));
                prop_assert!(rx <= re && re <= rx + 1);
                for f in e + 1..n {
                    let rf = m.rank_of(&x.with(f));
                    prop_assert!(re + rf >= m.rank_of(&x.with(e).with(f)) + rx);
                }
            }
        }
    }

    #[test]
    fn truncation_and_sum_ranks(seed in any::<u64>(), a in 1usize..=5, b in 1usize..=5, k in 0usize..=6) {
        let mut g = rng(seed);
        let m1 = random_matroid(&mut g, a, 2);
        let m2 = random_matroid(&mut g, b, 2);
        prop_assert_eq!(direct_sum(&m1, &m2).full_rank(), m1.full_rank() + m2.full_rank());
        prop_assert_eq!(truncate(&m1, k).full_rank(), m1.full_rank().min(k));
    }

    #[test]
    fn descriptors_round_trip(seed in any::<u64>(), n in 1usize..=7) {
        let m = random_matroid(&mut rng(seed), n, 3);
        let text = serde_json::to_string(&m.descriptor().unwrap()).unwrap();
        let back: MatroidDescriptor = serde_json::from_str(&text).unwrap();
        let rebuilt = back.build().unwrap();
        prop_assert!(rebuilt.oracle_equivalent(&m, 24).unwrap());
        prop_assert_eq!(serde_json::to_string(&rebuilt.descriptor().unwrap()).unwrap(), text);
    }

    #[test]
    fn normalization_is_idempotent_and_nae_is_flip_symmetric((n, raw) in formula_strategy()) {
        let raw: Vec<Vec<Literal>> = raw.iter().map(|c| c.iter().map(|&l| Literal::from_dimacs(l).unwrap()).collect()).collect();
        let Ok((f, _)) = CnfFormula::normalize(n, raw) else { return Ok(()) };
        let (again, notes) = CnfFormula::normalize(n, f.clauses().to_vec()).unwrap();
        prop_assert_eq!(&again, &f);
        prop_assert!(notes.is_empty());
        let (parsed, _) = parse_dimacs(&write_dimacs(&f)).unwrap();
        prop_assert_eq!(&parsed, &f);
        for mask in 0u32..1 << n {
            let a: Vec<bool> = (0..n).map(|j| mask >> j & 1 == 1).collect();
            let flipped: Vec<bool> = a.iter().map(|v| !v).collect();
            prop_assert_eq!(f.nae_satisfied(&a), f.nae_satisfied(&flipped));
        }
    }

    #[test]
    fn r2_size_laws((n, raw) in formula_strategy()) {
        let raw: Vec<Vec<Literal>> = raw.iter().map(|c| c.iter().map(|&l| Literal::from_dimacs(l).unwrap()).collect()).collect();
        let Ok((f, _)) = CnfFormula::normalize(n, raw) else { return Ok(()) };
        let out = r2_naesat_to_modular_trees(&f).unwrap();
        let g = out.instance.graph();
        let lits = f.total_literals();
        prop_assert_eq!(g.edge_count(), 2 * n + 4 * lits);
        prop_assert_eq!(g.vertex_count(), n + 2 * lits + 1);
        prop_assert_eq!(g.edge_count(), 2 * g.vertex_count() - 2);
        prop_assert_eq!(out.provenance.roles.len(), g.edge_count());
    }

    #[test]
    fn r3_lifts_cycles_six_fold(seed in any::<u64>(), n in 1usize..=6) {
        let d = random_digraph(&mut rng(seed), n, 0.5);
        let out = r3_evenfactor_to_c4k2(&d).unwrap();
        prop_assert_eq!(out.graph.left_size(), 3 * n);
        prop_assert_eq!(out.graph.edges().len(), 5 * n + d.arcs().len());
        if let Some(arcs) = even_factor_brute(n, d.arcs()) {
            let mut source = verify_even_factor(&d, &arcs).unwrap();
            let edges = r3_factor_to_two_factor(&out, &arcs).unwrap();
            let inst = Instance::C4k2TwoFactor(out.graph.clone());
            verify_certificate(&inst, &Certificate::EdgeSet(edges.clone())).unwrap();
            let mut lifted = matroid_packing::certificate::verify_c4k2_two_factor(&out.graph, &edges).unwrap();
            source.iter_mut().for_each(|l| *l *= 6);
            source.sort_unstable();
            lifted.sort_unstable();
            prop_assert_eq!(lifted, source);
        }
    }

    #[test]
    fn r4_doubles_every_edge(seed in any::<u64>(), k in 1usize..=5) {
        let g = random_bipartite(&mut rng(seed), k, k, 0.5);
        let out = r4_c4k2_to_paritybases(&g).unwrap();
        let doubled = out.doubled.as_ref().unwrap();
        prop_assert_eq!(doubled.edges().len(), 2 * g.edges().len());
        prop_assert_eq!(out.instance.matroid().size(), 2 * k);
        prop_assert_eq!(out.instance.pairs().len(), k);
    }

    #[test]
    fn r5_output_ranks(seed in any::<u64>(), half in 1usize..=3) {
        let mut g = rng(seed);
        let n = 2 * half;
        let inst = CommonBasesInstance::new(random_half_rank_matroid(&mut g, n), random_half_rank_matroid(&mut g, n), 2).unwrap();
        let out = r5_to_partition_matroid_case(&inst).unwrap();
        prop_assert_eq!(out.instance.size(), 2 * n);
        prop_assert_eq!(out.instance.m1().full_rank(), n);
        prop_assert_eq!(out.instance.m2().full_rank(), n);
    }

    #[test]
    fn text_formats_round_trip(seed in any::<u64>(), n in 1usize..=6) {
        let mut g = rng(seed);
        let d = random_digraph(&mut g, n, 0.4);
        let text = write_arc_list(&d);
        prop_assert_eq!(write_arc_list(&parse_arc_list(&text).unwrap()), text);
        let b = random_bipartite(&mut g, n, n + 1, 0.4);
        let text = write_bipartite(&b);
        prop_assert_eq!(write_bipartite(&parse_bipartite(&text).unwrap()), text);
    }

    #[test]
    fn instance_documents_round_trip(seed in any::<u64>(), half in 1usize..=3) {
        let mut g = rng(seed);
        let n = 2 * half;
        let m = random_half_rank_matroid(&mut g, n);
        let modules = random_modules(&mut g, n, 2);
        let instances = [
            Instance::ModularBases(ModularInstance::new(m.clone(), modules).unwrap()),
            Instance::CommonBases(CommonBasesInstance::new(m.clone(), m, 2).unwrap()),
            Instance::PerfectEvenFactor(random_digraph(&mut g, n, 0.5)),
            Instance::C4k2TwoFactor(random_bipartite(&mut g, n, n, 0.5)),
        ];
        for inst in instances {
            let text = write_instance_json(&inst).unwrap();
            let back = read_instance_json(&text).unwrap();
            prop_assert_eq!(back.problem(), inst.problem());
            prop_assert_eq!(write_instance_json(&back).unwrap(), text);
        }
    }
}
