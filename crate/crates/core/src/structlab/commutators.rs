use crate::error::Result;
use crate::limits::Limits;
use crate::permgrp::{GroupTable, PermGroup};

/// How the commutator set was enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommutatorMethod {
    /// `[x, y]` for every ordered pair.
    AllPairs,
    /// `[x, y]` for class representatives `x` and all `y`, closed under conjugation.
    ClassReps,
}

/// The set `K = {[x, y] : x, y ∈ G}` compared with `G′ = ⟨K⟩`.
#[derive(Clone, Debug)]
pub struct CommutatorReport {
    pub group_order: u128,
    pub derived_order: u128,
    pub set_size: u128,
    /// Methods that were run; all of them produced the same set.
    pub methods: Vec<CommutatorMethod>,
}

impl CommutatorReport {
    /// `|G′| − |K|`, zero exactly when every element of `G′` is a commutator.
    pub fn deficiency(&self) -> u128 {
        self.derived_order - self.set_size
    }
}

fn all_pairs(t: &GroupTable) -> Vec<bool> {
    let mut k = vec![false; t.len()];
    for x in 0..t.len() {
        for y in 0..t.len() {
            k[t.commutator(x, y)] = true;
        }
    }
    k
}

fn by_class_reps(t: &GroupTable) -> Vec<bool> {
    let mut k = vec![false; t.len()];
    for class in t.conjugacy_classes() {
        for y in 0..t.len() {
            k[t.commutator(class[0], y)] = true;
        }
    }
    // [g⁻¹xg, y] = g⁻¹[x, gyg⁻¹]g, so K is the conjugation closure of these.
    let gens = t.gens();
    let mut stack: Vec<usize> = (0..t.len()).filter(|&z| k[z]).collect();
    while let Some(z) = stack.pop() {
        for &g in &gens {
            let w = t.conj(z, g);
            if !k[w] {
                k[w] = true;
                stack.push(w);
            }
        }
    }
    k
}

/// Enumerates the commutator set of `G`, using every method the limits allow.
pub fn commutator_set(g: &PermGroup, limits: &Limits) -> Result<CommutatorReport> {
    let n = g.order();
    let pairs = n <= limits.commutator_pairs as u128;
    let reps = n <= limits.commutator_classes as u128;
    if !pairs {
        Limits::check("commutator set", n, limits.commutator_classes)?;
    }
    let t = GroupTable::new(g, limits.enumeration)?;
    let mut methods = Vec::new();
    let mut set: Option<Vec<bool>> = None;
    let mut record = |m: CommutatorMethod, k: Vec<bool>| {
        if let Some(prev) = &set {
            assert!(*prev == k, "commutator set methods disagree");
        }
        methods.push(m);
        set = Some(k);
    };
    if pairs {
        record(CommutatorMethod::AllPairs, all_pairs(&t));
    }
    if reps {
        record(CommutatorMethod::ClassReps, by_class_reps(&t));
    }
    let set = set.expect("at least one method ran");
    let set_size = set.iter().filter(|&&b| b).count() as u128;
    let derived_order = g.derived_subgroup().order();
    Ok(CommutatorReport {
        group_order: n,
        derived_order,
        set_size,
        methods,
    })
}
