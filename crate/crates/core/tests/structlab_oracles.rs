mod common;

use std::collections::HashSet;

use cliffgroups::matgrp::VectorAction;
use cliffgroups::permgrp::{Perm, PermGroup};
use cliffgroups::quantum::named_generators;
use cliffgroups::structlab::{
    automorphism_group, commutator_set, construct, find_complement, isomorphic, AutTier, Complement,
};
use cliffgroups::Limits;
use proptest::prelude::*;

use common::*;

/// The subgroup of `G × H` generated by the witness pairs is the graph of an
/// isomorphism exactly when its projections are both bijective.
fn witness_is_isomorphism(g: &PermGroup, h: &PermGroup, pairs: &[(Perm, Perm)]) -> bool {
    let (dg, dh) = (g.degree(), h.degree());
    let gens: Vec<Images> = pairs
        .iter()
        .map(|(a, b)| {
            let mut v = a.images().to_vec();
            v.extend(b.images().iter().map(|&x| x + dg as u32));
            v
        })
        .collect();
    let Some(graph) = brute_elements(dg + dh, &gens, 1 << 20) else {
        return false;
    };
    let left: HashSet<&[u32]> = graph.iter().map(|v| &v[..dg]).collect();
    let right: HashSet<&[u32]> = graph.iter().map(|v| &v[dg..]).collect();
    let in_g = pairs.iter().all(|(a, _)| g.contains(a));
    let in_h = pairs.iter().all(|(_, b)| h.contains(b));
    in_g && in_h
        && graph.len() as u128 == g.order()
        && left.len() == graph.len()
        && right.len() == graph.len()
        && h.order() == g.order()
}

#[test]
fn automorphism_orders_match_brute_force() {
    let l = Limits::default();
    for (name, g) in corpus().into_iter().filter(|(_, g)| g.order() <= 64) {
        let elems = elements_of(&g);
        let a = automorphism_group(&g, &l, AutTier::Required).unwrap();
        assert_eq!(a.order, brute_aut_count(&elems) as u128, "{name}");
        let central = elems
            .iter()
            .filter(|z| elems.iter().all(|x| compose(z, x) == compose(x, z)))
            .count();
        assert_eq!(a.center_order, central as u128, "{name}");
        assert_eq!(a.inner_order * a.center_order, g.order(), "{name}");
        assert_eq!(a.group.order(), a.order, "{name}");
        assert_eq!(a.order % a.inner_order, 0, "{name}");
    }
}

#[test]
fn isomorphism_witnesses_are_isomorphisms() {
    let l = Limits::default();
    let pairs = [
        ("dihedral(12)", "direct(cyclic(2), symmetric(3))", true),
        ("symmetric(3)", "dihedral(6)", true),
        ("direct(cyclic(2), cyclic(3))", "cyclic(6)", true),
        ("quaternion8", "dihedral(8)", false),
        ("alternating(4)", "dihedral(12)", false),
        ("symmetric(4)", "sl23", false),
        ("wreath(cyclic(2), cyclic(2))", "dihedral(8)", true),
    ];
    for (a, b, want) in pairs {
        let g = construct(a).unwrap();
        let h = construct(b).unwrap();
        let r = isomorphic(&g, &h, &l).unwrap();
        assert_eq!(r.isomorphic, want, "{a} vs {b}");
        if let Some(w) = &r.witness {
            assert!(witness_is_isomorphism(&g, &h, w), "{a} vs {b}");
        }
        assert_eq!(r.isomorphic, r.witness.is_some(), "{a} vs {b}");
    }
}

#[test]
fn commutator_sets_match_brute_force() {
    let l = Limits::default();
    for (name, g) in corpus() {
        let elems = elements_of(&g);
        let k = brute_commutators(&elems);
        let r = commutator_set(&g, &l).unwrap();
        assert_eq!(r.set_size, k.len() as u128, "{name}");
        assert_eq!(r.derived_order, g.derived_subgroup().order(), "{name}");
        let d = g.derived_subgroup();
        assert!(
            k.iter()
                .all(|x| d.contains(&Perm::from_images(x.clone()).unwrap())),
            "{name}"
        );
    }
}

/// The order-960 perfect group: the deficiency found by the library is
/// reproduced by the all-pairs oracle.
#[test]
fn commutator_deficiency_of_order_960_group() {
    let m = construct("wreath(cyclic(2), symmetric(5))")
        .unwrap()
        .derived_subgroup();
    let elems = elements_of(&m);
    assert_eq!(elems.len(), 960);
    let k = brute_commutators(&elems);
    let r = commutator_set(&m, &Limits::default()).unwrap();
    assert_eq!(r.deficiency(), 960 - k.len() as u128);
    assert!(r.deficiency() > 0);
}

fn closure_of(degree: usize, gens: &[&Images], cap: usize) -> Option<Vec<Images>> {
    let gens: Vec<Images> = gens.iter().map(|g| g.to_vec()).collect();
    brute_elements(degree, &gens, cap)
}

/// Complements of `n` in `g` found by trying every pair of elements as
/// generators; enough when the quotient is 2-generated.
fn brute_complements(g: &PermGroup, n: &PermGroup) -> usize {
    let elems = elements_of(g);
    let target = (g.order() / n.order()) as usize;
    let inside_n: HashSet<Images> = elements_of(n).into_iter().collect();
    let mut found: HashSet<Vec<Images>> = HashSet::new();
    for a in &elems {
        for b in &elems {
            if let Some(mut h) = closure_of(g.degree(), &[a, b], target) {
                if h.len() == target && h.iter().filter(|x| inside_n.contains(*x)).count() == 1 {
                    h.sort();
                    found.insert(h);
                }
            }
        }
    }
    found.len()
}

#[test]
fn one_qubit_clifford_does_not_split_over_paulis() {
    let l = Limits::default();
    let c1 = named_generators("c1").unwrap();
    let action = VectorAction::new(&c1, l.enumeration).unwrap();
    let g = action.perm_group(&c1).unwrap();
    let n = action.perm_group(&named_generators("p1").unwrap()).unwrap();
    assert_eq!((g.order(), n.order()), (192, 16));
    assert_eq!(brute_complements(&g, &n), 0);
    assert!(matches!(
        find_complement(&g, &n, &l).unwrap(),
        Complement::NotFound { exhaustive: true }
    ));
}

#[test]
fn complement_search_agrees_with_brute_force() {
    let l = Limits::default();
    let cases = [
        ("symmetric(4)", "[(1,2)(3,4), (1,3)(2,4)]"),
        ("dihedral(8)", "[(1,3)(2,4)]"),
        ("quaternion8", "center"),
        ("cyclic(4)", "square"),
        ("direct(cyclic(2), cyclic(4))", "square"),
    ];
    for (spec, sub) in cases {
        let g = construct(spec).unwrap();
        let n = match sub {
            "center" => g.center(1000).unwrap(),
            "square" => g
                .subgroup(g.gens().iter().map(|x| x.pow(2)).collect())
                .unwrap(),
            cycles => {
                let gens = cycles
                    .trim_matches(['[', ']'])
                    .split(", ")
                    .map(|c| Perm::parse(c, g.degree()).unwrap())
                    .collect();
                g.subgroup(gens).unwrap()
            }
        };
        assert!(n.is_normal_in(&g), "{spec}");
        let brute = brute_complements(&g, &n);
        match find_complement(&g, &n, &l).unwrap() {
            Complement::Found(h) => {
                assert!(brute > 0, "{spec}");
                assert_eq!(h.order() * n.order(), g.order(), "{spec}");
                assert!(h.is_subgroup_of(&g));
                let hn: HashSet<Images> = elements_of(&h).into_iter().collect();
                assert_eq!(
                    elements_of(&n).iter().filter(|x| hn.contains(*x)).count(),
                    1,
                    "{spec}"
                );
            }
            Complement::NotFound { exhaustive } => {
                assert!(exhaustive, "{spec}");
                assert_eq!(brute, 0, "{spec}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn relabelled_groups_are_isomorphic(i in 0..CORPUS.len(), seed in any::<u64>()) {
        use rand::SeedableRng;
        let g = construct(CORPUS[i]).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let s = random_perm(&mut rng, g.degree());
        let h = PermGroup::new(g.degree(), g.gens().iter().map(|x| x.conj(&s)).collect()).unwrap();
        let r = isomorphic(&g, &h, &Limits::default()).unwrap();
        prop_assert!(r.isomorphic);
        prop_assert!(witness_is_isomorphism(&g, &h, &r.witness.unwrap()));
    }

    #[test]
    fn commutators_generate_the_derived_subgroup(i in 0..CORPUS.len()) {
        let g = construct(CORPUS[i]).unwrap();
        let k = brute_commutators(&elements_of(&g));
        let gens: Vec<Perm> = k.into_iter().map(|x| Perm::from_images(x).unwrap()).collect();
        let span = PermGroup::new(g.degree(), gens).unwrap();
        prop_assert!(span.same_group(&g.derived_subgroup()));
    }
}
