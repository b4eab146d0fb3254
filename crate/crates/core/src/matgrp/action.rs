use rustc_hash::FxHashMap;

use super::matrix::UnitaryMatrix;
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::permgrp::{Perm, PermGroup};

/// The orbit of the standard basis row vectors under `v ↦ v·M`.
///
/// A matrix fixing every basis vector is the identity, so this action is
/// faithful and usually far smaller than the regular one.
#[derive(Clone, Debug)]
pub struct VectorAction {
    dim: usize,
    points: Vec<Vec<Cyclotomic>>,
    index: FxHashMap<Vec<Cyclotomic>, u32>,
}

impl VectorAction {
    /// Orbit of `e₀, …, e_{d−1}` under the generators; fails past `budget` points.
    pub fn new(gens: &[UnitaryMatrix], budget: usize) -> Result<Self> {
        let dim = gens
            .first()
            .map(UnitaryMatrix::dim)
            .ok_or_else(|| Error::InvalidArgument("vector action needs a generator".into()))?;
        let mut act = VectorAction {
            dim,
            points: Vec::new(),
            index: FxHashMap::default(),
        };
        for i in 0..dim {
            let mut e = vec![Cyclotomic::zero(); dim];
            e[i] = Cyclotomic::one();
            act.add(e);
        }
        let mut k = 0;
        while k < act.points.len() {
            for g in gens {
                let w = g.apply_row(&act.points[k]);
                act.add(w);
                if act.points.len() > budget {
                    return Err(Error::Capacity {
                        what: "vector orbit",
                        needed: act.points.len() as u128,
                        limit: budget as u128,
                    });
                }
            }
            k += 1;
        }
        Ok(act)
    }

    fn add(&mut self, v: Vec<Cyclotomic>) {
        let n = self.points.len() as u32;
        if let std::collections::hash_map::Entry::Vacant(e) = self.index.entry(v) {
            self.points.push(e.key().clone());
            e.insert(n);
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[Vec<Cyclotomic>] {
        &self.points
    }

    pub fn point_index(&self, v: &[Cyclotomic]) -> Option<usize> {
        self.index.get(v).map(|&i| i as usize)
    }

    /// Permutation induced by `m`; errors if `m` does not preserve the orbit.
    pub fn perm_of(&self, m: &UnitaryMatrix) -> Result<Perm> {
        let img = self
            .points
            .iter()
            .map(|v| {
                self.point_index(&m.apply_row(v))
                    .map(|i| i as u32)
                    .ok_or_else(|| {
                        Error::InvalidArgument("matrix does not preserve the orbit".into())
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Perm::from_images_unchecked(img))
    }

    /// Recovers the matrix from its permutation: row `i` is the image of `eᵢ`.
    pub fn matrix_of(&self, p: &Perm) -> UnitaryMatrix {
        let entries = (0..self.dim)
            .flat_map(|i| self.points[p.apply(i as u32) as usize].iter().cloned())
            .collect();
        UnitaryMatrix::new(self.dim, entries).expect("rows have the right length")
    }

    /// The permutation group generated by the images of `gens`.
    pub fn perm_group(&self, gens: &[UnitaryMatrix]) -> Result<PermGroup> {
        let pgens = gens
            .iter()
            .map(|g| self.perm_of(g))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(self.degree(), pgens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signed_permutations() {
        let x = UnitaryMatrix::from_int_rows(&[&[0, 1], &[1, 0]]).unwrap();
        let z = UnitaryMatrix::from_int_rows(&[&[1, 0], &[0, -1]]).unwrap();
        let act = VectorAction::new(&[x.clone(), z.clone()], 100).unwrap();
        assert_eq!(act.degree(), 4);
        let g = act.perm_group(&[x.clone(), z.clone()]).unwrap();
        assert_eq!(g.order(), 8);
        let xz = x.matmul(&z).unwrap();
        let p = act.perm_of(&xz).unwrap();
        assert_eq!(p, act.perm_of(&x).unwrap().mul(&act.perm_of(&z).unwrap()));
        assert_eq!(act.matrix_of(&p), xz);
    }
}
