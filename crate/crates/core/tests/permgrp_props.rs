mod common;

use std::collections::HashSet;

use cliffgroups::permgrp::{coset_action, normal_subgroups, Perm, PermGroup};
use cliffgroups::Limits;
use proptest::prelude::*;

use common::*;

fn perm(degree: usize) -> impl Strategy<Value = Perm> {
    Just((0..degree as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

fn group(max_degree: usize) -> impl Strategy<Value = PermGroup> {
    (1..=max_degree).prop_flat_map(|d| {
        prop::collection::vec(perm(d), 1..=3).prop_map(move |gens| PermGroup::new(d, gens).unwrap())
    })
}

/// Groups whose brute-force closure stays at most 5000 elements.
fn small_group() -> impl Strategy<Value = PermGroup> {
    prop_oneof![
        group(7).prop_filter("at most 5000 elements", |g| g.order() <= 5000),
        // intransitive products of small cycles reach other shapes
        (prop::collection::vec(2u32..=5, 1..=3), 1usize..=2).prop_map(|(lens, k)| {
            let degree: u32 = lens.iter().sum();
            let mut start = 0;
            let mut gens = Vec::new();
            for &l in &lens {
                let cyc: Vec<u32> = (start + 1..=start + l).collect();
                gens.push(
                    Perm::from_cycles(degree as usize, &[&cyc])
                        .unwrap()
                        .pow(k as i64),
                );
                start += l;
            }
            PermGroup::new(degree as usize, gens).unwrap()
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn order_matches_brute_force(g in small_group()) {
        let elems = elements_of(&g);
        prop_assert_eq!(elems.len() as u128, g.order());
        let all: Vec<Perm> = g.elements(5000).unwrap();
        let a: HashSet<Vec<u32>> = all.iter().map(|p| p.images().to_vec()).collect();
        let b: HashSet<Vec<u32>> = elems.into_iter().collect();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn membership_matches_brute_force(gens in prop::collection::vec(perm(6), 1..=2), x in perm(6)) {
        let g = PermGroup::new(6, gens).unwrap();
        let elems: HashSet<Vec<u32>> = elements_of(&g).into_iter().collect();
        prop_assert_eq!(g.contains(&x), elems.contains(x.images()));
    }

    #[test]
    fn derived_subgroup_is_normal_with_abelian_quotient(g in small_group()) {
        let d = g.derived_subgroup();
        prop_assert!(d.is_subgroup_of(&g));
        prop_assert!(d.is_normal_in(&g));
        prop_assert_eq!(g.order() % d.order(), 0);
        let l = Limits::default();
        let q = coset_action(&g, &d, &l).unwrap();
        prop_assert!(q.image().is_abelian());
        prop_assert_eq!(q.image().order() * d.order(), g.order());
    }

    #[test]
    fn quotient_orders_multiply(g in group(6)) {
        let l = Limits::default();
        for n in normal_subgroups(&g, &l).unwrap() {
            let q = coset_action(&g, &n.group, &l).unwrap();
            prop_assert_eq!(q.image().order() * n.order, g.order());
            // the coset map is a homomorphism with kernel N
            for a in g.gens() {
                for b in g.gens() {
                    prop_assert_eq!(q.map(&a.mul(b)), q.map(a).mul(&q.map(b)));
                }
            }
            for x in n.group.gens() {
                prop_assert!(q.map(x).is_identity());
            }
        }
    }

    #[test]
    fn center_matches_brute_force(g in group(6)) {
        let elems = elements_of(&g);
        let central = elems
            .iter()
            .filter(|z| elems.iter().all(|x| compose(z, x) == compose(x, z)))
            .count();
        prop_assert_eq!(g.center(5000).unwrap().order(), central as u128);
    }
}
