use rustc_hash::FxHashMap;

use super::matrix::UnitaryMatrix;
use crate::error::{Error, Result};
use crate::permgrp::{Perm, PermGroup};

/// A finite matrix group with every element listed; the identity is element 0.
#[derive(Clone)]
pub struct MatrixGroup {
    dim: usize,
    gens: Vec<UnitaryMatrix>,
    elements: Vec<UnitaryMatrix>,
    /// First element index per hash, chained through `next`.
    heads: FxHashMap<u64, u32>,
    next: Vec<u32>,
}

const NIL: u32 = u32::MAX;

impl std::fmt::Debug for MatrixGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "MatrixGroup(dim {}, order {}, {} generators)",
            self.dim,
            self.order(),
            self.gens.len()
        )
    }
}

impl MatrixGroup {
    fn empty(dim: usize, gens: Vec<UnitaryMatrix>) -> Self {
        MatrixGroup {
            dim,
            gens,
            elements: Vec::new(),
            heads: FxHashMap::default(),
            next: Vec::new(),
        }
    }

    fn lookup_hashed(&self, m: &UnitaryMatrix, h: u64) -> Option<usize> {
        let mut k = *self.heads.get(&h)?;
        while k != NIL {
            if self.elements[k as usize] == *m {
                return Some(k as usize);
            }
            k = self.next[k as usize];
        }
        None
    }

    /// Appends `m` if new; returns its index and whether it was inserted.
    fn insert(&mut self, m: UnitaryMatrix) -> (usize, bool) {
        let h = m.stable_hash();
        if let Some(i) = self.lookup_hashed(&m, h) {
            return (i, false);
        }
        let i = self.elements.len() as u32;
        let prev = self.heads.insert(h, i).unwrap_or(NIL);
        self.next.push(prev);
        self.elements.push(m);
        (i as usize, true)
    }

    /// Rebuilds a group from a stored element list, checking that the list
    /// starts with the identity, has no repeats, contains every generator and
    /// is closed under multiplication by the generators.
    pub fn from_elements(gens: Vec<UnitaryMatrix>, elements: Vec<UnitaryMatrix>) -> Result<Self> {
        let dim = elements
            .first()
            .map(UnitaryMatrix::dim)
            .ok_or_else(|| Error::InvalidArgument("empty element list".into()))?;
        if !elements[0].is_identity() {
            return Err(Error::InvalidArgument(
                "element 0 must be the identity".into(),
            ));
        }
        let mut grp = MatrixGroup::empty(dim, gens);
        for m in elements {
            if !grp.insert(m).1 {
                return Err(Error::InvalidArgument("repeated element".into()));
            }
        }
        for g in &grp.gens {
            for e in &grp.elements {
                if !grp.contains(&e.mul_unchecked(g)) {
                    return Err(Error::InvalidArgument(
                        "element list is not closed under the generators".into(),
                    ));
                }
            }
        }
        Ok(grp)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[UnitaryMatrix] {
        &self.gens
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[UnitaryMatrix] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &UnitaryMatrix {
        &self.elements[i]
    }

    pub fn index_of(&self, m: &UnitaryMatrix) -> Option<usize> {
        if m.dim() != self.dim {
            return None;
        }
        self.lookup_hashed(m, m.stable_hash())
    }

    pub fn contains(&self, m: &UnitaryMatrix) -> bool {
        self.index_of(m).is_some()
    }

    /// Index of `elements[a] · elements[b]`.
    pub fn mul_index(&self, a: usize, b: usize) -> usize {
        let p = self.elements[a].mul_unchecked(&self.elements[b]);
        self.index_of(&p).expect("group is closed under products")
    }

    /// Permutation of element indices induced by right multiplication by `m`.
    pub fn right_regular_perm(&self, m: &UnitaryMatrix) -> Result<Perm> {
        let img = self
            .elements
            .iter()
            .map(|e| {
                self.index_of(&e.mul_unchecked(m))
                    .map(|i| i as u32)
                    .ok_or_else(|| Error::InvalidArgument("matrix is not in the group".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Perm::from_images_unchecked(img))
    }

    /// Regular permutation representation: element `i` goes to `index(elements[i]·g)`.
    /// Since products act left to right, `perm(a·b) = perm(a)·perm(b)`.
    pub fn regular_perm_rep(&self) -> PermGroup {
        let gens = self
            .gens
            .iter()
            .map(|g| self.right_regular_perm(g).expect("generators are members"))
            .collect();
        PermGroup::new(self.order(), gens)
            .expect("degrees agree")
            .with_known_order(self.order() as u128)
    }
}

/// Enumerates `⟨gens⟩` by Dimino's algorithm.
///
/// Element order is deterministic for a given generator list: each new
/// generator adds whole right cosets of the previous subgroup, in the order
/// they are discovered.
pub fn closure(gens: &[UnitaryMatrix], budget: usize) -> Result<MatrixGroup> {
    let dim = match gens.first() {
        Some(g) => g.dim(),
        None => {
            return Err(Error::InvalidArgument(
                "closure needs at least one generator".into(),
            ))
        }
    };
    for g in gens {
        if g.dim() != dim {
            return Err(Error::InvalidArgument(format!(
                "generator dimensions differ: {} vs {dim}",
                g.dim()
            )));
        }
        if !g.is_unitary() {
            return Err(Error::InvalidArgument(format!(
                "generator {g} is not unitary"
            )));
        }
    }
    let mut grp = MatrixGroup::empty(dim, gens.to_vec());
    grp.insert(UnitaryMatrix::identity(dim));
    for i in 0..gens.len() {
        if grp.contains(&gens[i]) {
            continue;
        }
        let prev = grp.order();
        let mut reps: Vec<usize> = vec![0];
        let add_coset = |grp: &mut MatrixGroup, e: &UnitaryMatrix| -> Result<usize> {
            let start = grp.order();
            if start + prev > budget {
                return Err(Error::ClosureOverflow { budget });
            }
            for h in 0..prev {
                let x = grp.elements[h].mul_unchecked(e);
                grp.insert(x);
            }
            Ok(start)
        };
        let g = gens[i].clone();
        reps.push(add_coset(&mut grp, &g)?);
        let mut r = 1;
        while r < reps.len() {
            for s in &gens[..=i] {
                let e = grp.elements[reps[r]].mul_unchecked(s);
                if !grp.contains(&e) {
                    let at = add_coset(&mut grp, &e)?;
                    reps.push(at);
                }
            }
            r += 1;
        }
    }
    Ok(grp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::Cyclotomic;

    fn x() -> UnitaryMatrix {
        UnitaryMatrix::from_int_rows(&[&[0, 1], &[1, 0]]).unwrap()
    }

    fn p() -> UnitaryMatrix {
        UnitaryMatrix::diag(&[Cyclotomic::one(), Cyclotomic::i()])
    }

    #[test]
    fn small_closures() {
        let g = closure(&[x()], 100).unwrap();
        assert_eq!(g.order(), 2);
        assert!(g.element(0).is_identity());
        let r = g.regular_perm_rep();
        assert_eq!(r.order(), 2);
        assert_eq!(r.degree(), 2);
        let xp = closure(&[x(), p()], 100).unwrap();
        assert_eq!(xp.order(), 32);
    }

    #[test]
    fn overflow_is_reported() {
        assert!(matches!(
            closure(&[x(), p()], 10),
            Err(Error::ClosureOverflow { budget: 10 })
        ));
    }

    #[test]
    fn regular_rep_is_homomorphic() {
        let g = closure(&[x(), p()], 100).unwrap();
        for a in [3, 7, 11] {
            for b in [1, 5, 20] {
                let pa = g.right_regular_perm(g.element(a)).unwrap();
                let pb = g.right_regular_perm(g.element(b)).unwrap();
                let pab = g.right_regular_perm(g.element(g.mul_index(a, b))).unwrap();
                assert_eq!(pa.mul(&pb), pab);
            }
        }
    }
}
