//! Brute-force oracles shared by the integration tests. Nothing here uses
//! stabilizer chains, class tables or the search code under test.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use cliffgroups::permgrp::{Perm, PermGroup};
use cliffgroups::structlab::construct;
use rand::seq::SliceRandom;
use rand::Rng;

pub type Images = Vec<u32>;

pub fn compose(a: &[u32], b: &[u32]) -> Images {
    // right action: x^(ab) = (x^a)^b
    a.iter().map(|&x| b[x as usize]).collect()
}

pub fn inverse(a: &[u32]) -> Images {
    let mut out = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x as usize] = i as u32;
    }
    out
}

/// Every element reachable from the generators, by breadth-first search.
pub fn brute_elements(degree: usize, gens: &[Images], cap: usize) -> Option<Vec<Images>> {
    let id: Images = (0..degree as u32).collect();
    let mut seen: HashSet<Images> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    let mut out = Vec::new();
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = compose(&x, g);
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return None;
                }
                queue.push_back(y);
            }
        }
        out.push(x);
    }
    Some(out)
}

pub fn elements_of(g: &PermGroup) -> Vec<Images> {
    let gens: Vec<Images> = g.gens().iter().map(|p| p.images().to_vec()).collect();
    brute_elements(g.degree(), &gens, 1 << 20).expect("small group")
}

pub fn commutator(a: &[u32], b: &[u32]) -> Images {
    compose(&compose(&inverse(a), &inverse(b)), &compose(a, b))
}

/// The set of commutators `[x, y]` over all ordered pairs.
pub fn brute_commutators(elems: &[Images]) -> HashSet<Images> {
    let mut out = HashSet::new();
    for x in elems {
        for y in elems {
            out.insert(commutator(x, y));
        }
    }
    out
}

pub fn random_perm<R: Rng>(rng: &mut R, degree: usize) -> Perm {
    let mut v: Vec<u32> = (0..degree as u32).collect();
    v.shuffle(rng);
    Perm::from_images(v).unwrap()
}

/// Small groups of assorted shapes used corpus-wide.
pub const CORPUS: [&str; 16] = [
    "cyclic(1)",
    "cyclic(6)",
    "direct(cyclic(2), cyclic(2))",
    "direct(cyclic(2), cyclic(4))",
    "dihedral(8)",
    "dihedral(12)",
    "quaternion8",
    "symmetric(3)",
    "symmetric(4)",
    "alternating(4)",
    "sl23",
    "direct(cyclic(2), symmetric(3))",
    "direct(quaternion8, cyclic(2))",
    "wreath(cyclic(2), cyclic(2))",
    "wreath(cyclic(2), symmetric(3))",
    "alternating(5)",
];

pub fn corpus() -> Vec<(&'static str, PermGroup)> {
    CORPUS.iter().map(|s| (*s, construct(s).unwrap())).collect()
}

/// Automorphisms of a group given by its multiplication table, counted by
/// trying every image tuple for a fixed generating list.
pub fn brute_aut_count(elems: &[Images]) -> usize {
    let n = elems.len();
    let index: std::collections::HashMap<&Images, usize> =
        elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mul: Vec<Vec<usize>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| index[&compose(&elems[a], &elems[b])])
                .collect()
        })
        .collect();
    let order = |a: usize| {
        let (mut x, mut k) = (a, 1);
        while x != 0 {
            x = mul[x][a];
            k += 1;
        }
        k
    };
    assert!(
        elems[0].iter().enumerate().all(|(i, &x)| i as u32 == x),
        "identity first"
    );

    // greedy generating list
    let mut gens = Vec::new();
    let mut span = vec![false; n];
    span[0] = true;
    let close = |span: &mut Vec<bool>, gens: &[usize]| loop {
        let cur: Vec<usize> = (0..n).filter(|&i| span[i]).collect();
        let mut grew = false;
        for &a in &cur {
            for &g in gens {
                let c = mul[a][g];
                if !span[c] {
                    span[c] = true;
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    };
    for a in 0..n {
        if !span[a] {
            gens.push(a);
            close(&mut span, &gens);
        }
    }

    // words: every element as a product of generators
    let mut word: Vec<Option<Vec<usize>>> = vec![None; n];
    word[0] = Some(vec![]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(a) = queue.pop_front() {
        for (j, &g) in gens.iter().enumerate() {
            let c = mul[a][g];
            if word[c].is_none() {
                let mut w = word[a].clone().unwrap();
                w.push(j);
                word[c] = Some(w);
                queue.push_back(c);
            }
        }
    }
    let word: Vec<Vec<usize>> = word.into_iter().map(Option::unwrap).collect();

    let mut count = 0;
    let mut images = vec![0usize; gens.len()];
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| (0..n).filter(|&x| order(x) == order(g)).collect())
        .collect();
    fn rec(
        k: usize,
        images: &mut Vec<usize>,
        cands: &[Vec<usize>],
        check: &dyn Fn(&[usize]) -> bool,
        count: &mut usize,
    ) {
        if k == images.len() {
            if check(images) {
                *count += 1;
            }
            return;
        }
        for &c in &cands[k] {
            images[k] = c;
            rec(k + 1, images, cands, check, count);
        }
    }
    let check = |im: &[usize]| {
        let f: Vec<usize> = word
            .iter()
            .map(|w| w.iter().fold(0, |acc, &j| mul[acc][im[j]]))
            .collect();
        let mut hit = vec![false; n];
        for &x in &f {
            if hit[x] {
                return false;
            }
            hit[x] = true;
        }
        // multiplicative on generators suffices by induction on word length
        (0..n).all(|a| gens.iter().all(|&g| f[mul[a][g]] == mul[f[a]][f[g]]))
    };
    rec(0, &mut images, &candidates, &check, &mut count);
    count
}
