use cliffgroups::cyclo::Cyclotomic;
use cliffgroups::matgrp::{dagger, kron, matmul, UnitaryMatrix, VectorAction};
use cliffgroups::quantum::{
    bell_group, clifford_group, clifford_order_formula, mub_chain, named_generators, pauli_graph,
    pauli_group, yang_baxter_check, AutOrder, GateCatalog,
};
use cliffgroups::structlab::AutTier;
use cliffgroups::Limits;
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn cliffords_normalize_paulis() {
    let l = Limits::default();
    let c2 = clifford_group(2, &l).unwrap();
    let p2 = pauli_group(2, &l).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..50 {
        let u = c2.element(rng.gen_range(0..c2.order()));
        let g = p2.element(rng.gen_range(0..p2.order()));
        let conj = matmul(&matmul(u, g).unwrap(), &dagger(u)).unwrap();
        assert!(p2.contains(&conj));
    }
}

#[test]
fn order_formula_against_direct_product() {
    // 8 · 2^(n² + 2n) · Π (4^j − 1), computed independently
    let independent = |n: u32| -> BigUint {
        let mut v = BigUint::from(8u32) << (n * n + 2 * n);
        for j in 1..=n {
            v *= (BigUint::from(1u32) << (2 * j)) - 1u32;
        }
        v
    };
    for n in 1..=5 {
        assert_eq!(
            clifford_order_formula(n).unwrap(),
            independent(n),
            "n = {n}"
        );
    }
    assert_eq!(
        clifford_order_formula(3).unwrap(),
        BigUint::from(743_178_240u64)
    );
    let l = Limits::default();
    for n in 1..=2 {
        let enumerated = clifford_group(n as usize, &l).unwrap().order() as u64;
        assert_eq!(
            clifford_order_formula(n).unwrap(),
            BigUint::from(enumerated)
        );
    }
}

#[test]
fn bell_group_inside_clifford_group() {
    let l = Limits::default();
    let c2 = clifford_group(2, &l).unwrap();
    let b2 = bell_group(&l).unwrap();
    assert_eq!(b2.order(), 15360);
    assert!(b2.gens().iter().all(|g| c2.contains(g)));
    assert_eq!(c2.order() / b2.order(), 6);
    assert_eq!(c2.order() % b2.order(), 0);
}

#[test]
fn permutation_forms_are_faithful() {
    let l = Limits::default();
    for (name, order) in [
        ("p1", 16u128),
        ("c1", 192),
        ("p2", 64),
        ("b2", 15360),
        ("c2", 92160),
    ] {
        let gens = named_generators(name).unwrap();
        let action = VectorAction::new(&gens, l.enumeration).unwrap();
        let g = action.perm_group(&gens).unwrap();
        assert_eq!(g.order(), order, "{name}");
        for m in &gens {
            assert_eq!(&action.matrix_of(&action.perm_of(m).unwrap()), m, "{name}");
        }
    }
}

#[test]
fn yang_baxter() {
    let cat = GateCatalog::new();
    let r = cat.get("R").unwrap();
    assert!(yang_baxter_check(r).unwrap());
    // the swap is a solution, CZ is not
    let swap =
        UnitaryMatrix::from_int_rows(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]])
            .unwrap();
    assert!(yang_baxter_check(&swap).unwrap());
    assert!(!yang_baxter_check(cat.get("CZ").unwrap()).unwrap());
    // scaling by a root of unity keeps a solution
    let w = Cyclotomic::root_of_unity(8).unwrap();
    assert!(yang_baxter_check(&r.scale(&w)).unwrap());
    assert!(yang_baxter_check(&kron(
        &UnitaryMatrix::identity(2),
        &UnitaryMatrix::identity(2)
    ))
    .unwrap());
}

#[test]
fn pauli_graphs() {
    let one = pauli_graph(1).unwrap();
    assert_eq!(one.graph.len(), 3);
    assert_eq!(one.graph.edge_count(), 0);
    let two = pauli_graph(2).unwrap();
    assert_eq!(two.graph.len(), 15);
    assert!((0..15).all(|v| two.graph.degree(v) == 6));
    assert_eq!(two.graph.max_independent_set().len(), 5);
    let three = pauli_graph(3).unwrap();
    assert_eq!(three.graph.len(), 63);
    // each operator commutes with 4^n / 2 − 2 others
    assert!((0..63).all(|v| three.graph.degree(v) == 30));
}

#[test]
fn two_qubit_chain() {
    let steps = mub_chain(2, &Limits::default(), AutTier::Required).unwrap();
    let got: Vec<(usize, usize, Option<u128>)> = steps
        .iter()
        .map(|s| {
            let aut = match s.aut {
                AutOrder::Known(o) => Some(o),
                AutOrder::Inconclusive(_) => None,
            };
            (s.k, s.group.order(), aut)
        })
        .collect();
    assert_eq!(
        got,
        [
            (2, 8, Some(8)),
            (3, 16, Some(48)),
            (4, 32, Some(1920)),
            (5, 32, Some(1920))
        ]
    );
}
