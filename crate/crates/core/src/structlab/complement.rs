use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::permgrp::{GroupTable, PermGroup};

/// Outcome of a complement search.
#[derive(Clone, Debug)]
pub enum Complement {
    /// A subgroup `H` with `H ∩ N = 1` and `HN = G`.
    Found(PermGroup),
    /// No complement was found. With `exhaustive` set the search covered
    /// every candidate and proves none exists; otherwise it ran out of nodes.
    NotFound { exhaustive: bool },
}

impl Complement {
    pub fn group(&self) -> Option<&PermGroup> {
        match self {
            Complement::Found(h) => Some(h),
            Complement::NotFound { .. } => None,
        }
    }
}

/// Size of `⟨gens⟩`, or `None` once it exceeds `cap`.
fn bounded_order(t: &GroupTable, gens: &[usize], cap: usize) -> Option<usize> {
    let mut seen = vec![false; t.len()];
    seen[0] = true;
    let mut elems = vec![0usize];
    let mut k = 0;
    while k < elems.len() {
        for &g in gens {
            let y = t.mul(elems[k], g);
            if !seen[y] {
                if elems.len() == cap {
                    return None;
                }
                seen[y] = true;
                elems.push(y);
            }
        }
        k += 1;
    }
    Some(elems.len())
}

struct Search<'a> {
    t: &'a GroupTable,
    /// Elements of `N`.
    n: Vec<usize>,
    /// Lifts `lⱼ` of a generating sequence of `G/N`.
    lifts: Vec<usize>,
    /// Order of `lⱼN` in `G/N`.
    q_order: Vec<usize>,
    /// `|⟨q₁, …, qⱼ⟩|`.
    q_size: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// Returns `Ok(None)` on an exhausted subtree, `Err(())` on budget overrun.
    fn run(&mut self, chosen: &mut Vec<usize>) -> std::result::Result<Option<Vec<usize>>, ()> {
        let j = chosen.len();
        if j == self.lifts.len() {
            return Ok(Some(chosen.clone()));
        }
        for k in 0..self.n.len() {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(());
            }
            let c = self.t.mul(self.lifts[j], self.n[k]);
            if self.t.order_of(c) != self.q_order[j] {
                continue;
            }
            chosen.push(c);
            if bounded_order(self.t, chosen, self.q_size[j]) == Some(self.q_size[j]) {
                if let Some(h) = self.run(chosen)? {
                    return Ok(Some(h));
                }
            }
            chosen.pop();
        }
        Ok(None)
    }
}

/// Searches for a complement to the normal subgroup `N` of `G`.
///
/// A generating sequence `q₁, …, q_k` of `G/N` is lifted one term at a time
/// to `lⱼ·c` with `c ∈ N`. A partial choice survives only while the lifts
/// generate a group of the same order as `⟨q₁, …, qⱼ⟩`, which forces the
/// lifted group to meet `N` trivially.
pub fn find_complement(g: &PermGroup, n: &PermGroup, limits: &Limits) -> Result<Complement> {
    if !n.is_normal_in(g) {
        return Err(Error::InvalidArgument(
            "N is not a normal subgroup of G".into(),
        ));
    }
    let t = GroupTable::new(g, limits.enumeration)?;
    let n_elems: Vec<usize> = n
        .elements(limits.enumeration)?
        .iter()
        .map(|p| t.index_of(p).expect("N is inside G"))
        .collect();
    let n_ord = n_elems.len();
    let index = t.len() / n_ord;
    let mut in_n = vec![false; t.len()];
    for &x in &n_elems {
        in_n[x] = true;
    }
    let mut n_gens: Vec<usize> = n
        .gens()
        .iter()
        .map(|p| t.index_of(p).expect("N is inside G"))
        .collect();
    let mut lifts = Vec::new();
    let mut q_order = Vec::new();
    let mut q_size = Vec::new();
    let mut covered = n_ord;
    for x in t.gens() {
        if covered == t.len() {
            break;
        }
        n_gens.push(x);
        let size = t.closure_mask(&n_gens).iter().filter(|&&b| b).count();
        if size == covered {
            n_gens.pop();
            continue;
        }
        covered = size;
        lifts.push(x);
        q_size.push(size / n_ord);
        let mut o = 1;
        let mut y = x;
        while !in_n[y] {
            y = t.mul(y, x);
            o += 1;
        }
        q_order.push(o);
    }
    let mut s = Search {
        t: &t,
        n: n_elems,
        lifts,
        q_order,
        q_size,
        nodes: 0,
        budget: limits.search_nodes,
    };
    let mut chosen = Vec::new();
    Ok(match s.run(&mut chosen) {
        Err(()) => Complement::NotFound { exhaustive: false },
        Ok(None) => Complement::NotFound { exhaustive: true },
        Ok(Some(h)) => {
            let gens = h.iter().map(|&x| t.perm(x)).collect();
            let h = g.subgroup(gens)?.with_known_order(index as u128);
            Complement::Found(h)
        }
    })
}
