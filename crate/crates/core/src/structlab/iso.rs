use super::hom::extend_injective;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::permgrp::{GroupTable, Perm, PermGroup};

/// Per-element invariants preserved by isomorphisms: order and class size.
fn invariants(t: &GroupTable) -> (Vec<(usize, usize)>, Vec<u32>) {
    let classes = t.conjugacy_classes();
    let mut inv = vec![(0, 0); t.len()];
    let mut class_of = vec![0u32; t.len()];
    for (ci, c) in classes.iter().enumerate() {
        for &x in c {
            inv[x] = (t.order_of(x), c.len());
            class_of[x] = ci as u32;
        }
    }
    (inv, class_of)
}

/// Backtracking search for isomorphisms `src → tgt` along a generating sequence.
struct Search<'a> {
    src: &'a GroupTable,
    tgt: &'a GroupTable,
    seq: Vec<usize>,
    cands: Vec<Vec<usize>>,
    /// `(order(sᵢ·sⱼ), order([sᵢ, sⱼ]))` for `j < i`.
    pair: Vec<Vec<(usize, usize)>>,
    nodes: u64,
    budget: u64,
}

impl<'a> Search<'a> {
    fn new(src: &'a GroupTable, tgt: &'a GroupTable, budget: u64) -> Self {
        let (sinv, _) = invariants(src);
        let (tinv, _) = invariants(tgt);
        let seq = generating_sequence(src, &sinv, &tinv);
        let cands = seq
            .iter()
            .map(|&s| (0..tgt.len()).filter(|&y| tinv[y] == sinv[s]).collect())
            .collect();
        let pair = (0..seq.len())
            .map(|i| {
                (0..i)
                    .map(|j| {
                        (
                            src.order_of(src.mul(seq[j], seq[i])),
                            src.order_of(src.commutator(seq[j], seq[i])),
                        )
                    })
                    .collect()
            })
            .collect();
        Search {
            src,
            tgt,
            seq,
            cands,
            pair,
            nodes: 0,
            budget,
        }
    }

    fn compatible(&self, fixed: &[usize], c: usize) -> bool {
        let i = fixed.len();
        fixed.iter().enumerate().all(|(j, &t)| {
            let (o, k) = self.pair[i][j];
            self.tgt.order_of(self.tgt.mul(t, c)) == o
                && self.tgt.order_of(self.tgt.commutator(t, c)) == k
        })
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExhausted(format!(
                "isomorphism search exceeded {} nodes",
                self.budget
            )));
        }
        Ok(())
    }

    /// Tries `c` as the next image; returns whether the partial map stays an injective homomorphism.
    fn push(&mut self, fixed: &mut Vec<usize>, c: usize) -> Result<bool> {
        self.tick()?;
        if !self.compatible(fixed, c) {
            return Ok(false);
        }
        fixed.push(c);
        let i = fixed.len();
        if extend_injective(self.src, &self.seq[..i], self.tgt, fixed).is_none() {
            fixed.pop();
            return Ok(false);
        }
        Ok(true)
    }

    /// Completes `fixed` to a full isomorphism, returning its element map.
    fn complete(&mut self, fixed: &mut Vec<usize>) -> Result<Option<Vec<u32>>> {
        let i = fixed.len();
        if i == self.seq.len() {
            return Ok(extend_injective(self.src, &self.seq, self.tgt, fixed));
        }
        for k in 0..self.cands[i].len() {
            let c = self.cands[i][k];
            if self.push(fixed, c)? {
                if let Some(m) = self.complete(fixed)? {
                    fixed.pop();
                    return Ok(Some(m));
                }
                fixed.pop();
            }
        }
        Ok(None)
    }
}

/// A generating sequence chosen greedily: each step takes an element outside
/// the current subgroup with the fewest same-invariant partners in the
/// target, preferring larger orders, then smaller indices.
fn generating_sequence(
    t: &GroupTable,
    sinv: &[(usize, usize)],
    tinv: &[(usize, usize)],
) -> Vec<usize> {
    let mut count = std::collections::HashMap::new();
    for v in tinv {
        *count.entry(*v).or_insert(0usize) += 1;
    }
    let mut in_k = vec![false; t.len()];
    in_k[0] = true;
    let mut seq = Vec::new();
    while in_k.iter().any(|&b| !b) {
        let x = (0..t.len())
            .filter(|&x| !in_k[x])
            .min_by_key(|&x| {
                let c = count.get(&sinv[x]).copied().unwrap_or(0);
                (c, std::cmp::Reverse(t.order_of(x)), x)
            })
            .expect("some element is outside K");
        seq.push(x);
        in_k = t.closure_mask(&seq);
    }
    seq
}

/// Outcome of an isomorphism test.
#[derive(Clone, Debug)]
pub struct IsoResult {
    pub isomorphic: bool,
    /// Generators of the first group paired with their images in the second.
    pub witness: Option<Vec<(Perm, Perm)>>,
}

/// Decides `G ≅ H` exactly, returning a verified generator-image witness.
pub fn isomorphic(g: &PermGroup, h: &PermGroup, limits: &Limits) -> Result<IsoResult> {
    let no = IsoResult {
        isomorphic: false,
        witness: None,
    };
    if g.order() != h.order() {
        return Ok(no);
    }
    Limits::check("isomorphism test", g.order(), limits.iso_order)?;
    let tg = GroupTable::new(g, limits.enumeration)?;
    let th = GroupTable::new(h, limits.enumeration)?;
    let fg = crate::permgrp::table_fingerprint(&tg, limits)?;
    let fh = crate::permgrp::table_fingerprint(&th, limits)?;
    if fg != fh {
        return Ok(no);
    }
    let mut s = Search::new(&tg, &th, limits.search_nodes);
    if s.seq.is_empty() {
        return Ok(IsoResult {
            isomorphic: true,
            witness: Some(Vec::new()),
        });
    }
    // Composing with inner automorphisms of H, the first image can be taken
    // to be the least element of its conjugacy class.
    let (_, class_of) = invariants(&th);
    let mut seen = vec![false; th.conjugacy_classes().len()];
    let firsts: Vec<usize> = s.cands[0]
        .iter()
        .copied()
        .filter(|&c| !std::mem::replace(&mut seen[class_of[c] as usize], true))
        .collect();
    s.cands[0] = firsts;
    let mut fixed = Vec::new();
    let found = s.complete(&mut fixed)?;
    Ok(match found {
        None => no,
        Some(map) => IsoResult {
            isomorphic: true,
            witness: Some(
                s.seq
                    .iter()
                    .map(|&x| (tg.perm(x), th.perm(map[x] as usize)))
                    .collect(),
            ),
        },
    })
}

/// `Aut(G)` as permutations of element indices, with `Inn(G)` alongside.
#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    pub order: u128,
    /// Acts on the indices of [`table`](Self::table).
    pub group: PermGroup,
    pub inner: PermGroup,
    pub inner_order: u128,
    pub center_order: u128,
    pub table: GroupTable,
}

impl AutomorphismGroup {
    pub fn outer_order(&self) -> u128 {
        self.order / self.inner_order
    }
}

/// Which capacity bound applies to an automorphism computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AutTier {
    Required,
    Extended,
}

/// Computes `Aut(G)` level by level along a generating sequence `s₁, …, s_k`.
///
/// At level `i` the automorphisms fixing `s₁ … s_{i−1}` move `sᵢ` around an
/// orbit; its size is found by searching for one automorphism per candidate
/// image not already reached. `|Aut(G)|` is the product of the orbit sizes
/// and the automorphisms found generate `Aut(G)`.
pub fn automorphism_group(
    g: &PermGroup,
    limits: &Limits,
    tier: AutTier,
) -> Result<AutomorphismGroup> {
    let bound = match tier {
        AutTier::Required => limits.aut_order,
        AutTier::Extended => limits.aut_order_extended,
    };
    Limits::check("automorphism group", g.order(), bound)?;
    let t = GroupTable::new(g, limits.enumeration)?;
    let mut s = Search::new(&t, &t, limits.search_nodes);
    let k = s.seq.len();
    let mut auts: Vec<Vec<u32>> = Vec::new();
    let mut order: u128 = 1;
    for i in (0..k).rev() {
        let prefix: Vec<usize> = s.seq[..i].to_vec();
        let fixes = |m: &Vec<u32>| prefix.iter().all(|&x| m[x] as usize == x);
        let mut in_orbit = vec![false; t.len()];
        let mut orbit = vec![s.seq[i]];
        in_orbit[s.seq[i]] = true;
        let grow =
            |orbit: &mut Vec<usize>, in_orbit: &mut Vec<bool>, auts: &[Vec<u32>], from: usize| {
                let gens: Vec<&Vec<u32>> = auts.iter().filter(|m| fixes(m)).collect();
                let mut q = from;
                while q < orbit.len() {
                    for m in &gens {
                        let y = m[orbit[q]] as usize;
                        if !in_orbit[y] {
                            in_orbit[y] = true;
                            orbit.push(y);
                        }
                    }
                    q += 1;
                }
            };
        grow(&mut orbit, &mut in_orbit, &auts, 0);
        for ci in 0..s.cands[i].len() {
            let c = s.cands[i][ci];
            if in_orbit[c] {
                continue;
            }
            let mut fixed = prefix.clone();
            if !s.push(&mut fixed, c)? {
                continue;
            }
            if let Some(m) = s.complete(&mut fixed)? {
                auts.push(m);
                in_orbit[c] = true;
                orbit.push(c);
                grow(&mut orbit, &mut in_orbit, &auts, 0);
            }
        }
        order *= orbit.len() as u128;
    }
    let n = t.len();
    let gens: Vec<Perm> = auts
        .into_iter()
        .map(Perm::from_images)
        .collect::<Result<_>>()?;
    let group = PermGroup::new(n, gens)?.with_known_order(order);
    let inner_gens: Vec<Perm> = t
        .gens()
        .iter()
        .map(|&x| {
            let img = (0..n).map(|y| t.conj(y, x) as u32).collect();
            Perm::from_images(img)
        })
        .collect::<Result<_>>()?;
    let inner = PermGroup::new(n, inner_gens)?;
    let center_order = (0..n)
        .filter(|&y| t.gens().iter().all(|&x| t.mul(x, y) == t.mul(y, x)))
        .count() as u128;
    let inner_order = inner.order();
    debug_assert_eq!(inner_order * center_order, n as u128);
    Ok(AutomorphismGroup {
        order,
        group,
        inner,
        inner_order,
        center_order,
        table: t,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structlab::construct;

    fn l() -> Limits {
        Limits::default()
    }

    #[test]
    fn small_isomorphisms() {
        let z4 = construct("cyclic(4)").unwrap();
        let v4 = construct("dihedral(4)").unwrap();
        assert!(!isomorphic(&z4, &v4, &l()).unwrap().isomorphic);
        let d12 = construct("dihedral(12)").unwrap();
        let z2s3 = construct("direct(cyclic(2), symmetric(3))").unwrap();
        let r = isomorphic(&d12, &z2s3, &l()).unwrap();
        assert!(r.isomorphic);
        assert!(!r.witness.unwrap().is_empty());
        let q8 = construct("quaternion8").unwrap();
        let d8 = construct("dihedral(8)").unwrap();
        assert!(!isomorphic(&q8, &d8, &l()).unwrap().isomorphic);
    }

    #[test]
    fn automorphism_orders() {
        for (s, want) in [
            ("dihedral(4)", 6),
            ("quaternion8", 24),
            ("dihedral(8)", 8),
            ("cyclic(8)", 4),
            ("symmetric(3)", 6),
            ("symmetric(4)", 24),
        ] {
            let a = automorphism_group(&construct(s).unwrap(), &l(), AutTier::Required).unwrap();
            assert_eq!(a.order, want, "{s}");
            assert_eq!(a.group.order(), want);
            assert_eq!(a.inner_order * a.center_order, a.table.len() as u128);
        }
    }

    #[test]
    fn tier_bound_is_a_capacity_error() {
        let s6 = construct("symmetric(6)").unwrap();
        let e = automorphism_group(&s6, &l(), AutTier::Required).unwrap_err();
        assert!(e.is_inconclusive());
    }
}
