use super::group::PermGroup;
use super::perm::Perm;
use crate::error::Result;
use crate::limits::Limits;

/// All elements of a permutation group, indexed `0..len` with the identity at 0.
///
/// Index `i` is the element [`PermGroup::element_at`]`(i)`. Products are
/// looked up by computing only the base images of the product and reading
/// the index off the stabilizer chain, so no hash map is needed.
#[derive(Clone)]
pub struct GroupTable {
    group: PermGroup,
    degree: usize,
    base: Vec<u32>,
    data: Vec<u32>,
    inv: Vec<u32>,
    ord: Vec<u32>,
    gens: Vec<u32>,
}

impl std::fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GroupTable({} elements)", self.len())
    }
}

impl GroupTable {
    pub fn new(group: &PermGroup, limit: usize) -> Result<Self> {
        let n = group.order();
        Limits::check("element table", n, limit)?;
        let n = n as usize;
        let degree = group.degree();
        let chain = group.chain();
        let base = chain.base();
        let mut data = Vec::with_capacity(n * degree);
        for i in 0..n {
            data.extend_from_slice(chain.element_at(i as u128).images());
        }
        let mut t = GroupTable {
            group: group.clone(),
            degree,
            base,
            data,
            inv: Vec::new(),
            ord: Vec::new(),
            gens: Vec::new(),
        };
        t.inv = (0..n)
            .map(|i| {
                let p = t.images(i);
                let mut imgs: Vec<u32> = t
                    .base
                    .iter()
                    .map(|&b| p.iter().position(|&x| x == b).expect("bijection") as u32)
                    .collect();
                t.lookup(&mut imgs)
            })
            .collect();
        t.ord = (0..n).map(|i| t.compute_order(i)).collect();
        t.gens = group
            .gens()
            .iter()
            .map(|g| t.index_of(g).expect("generator is a member") as u32)
            .collect();
        Ok(t)
    }

    fn lookup(&self, imgs: &mut [u32]) -> u32 {
        self.group
            .chain()
            .index_of_base_images(imgs)
            .expect("product of members is a member") as u32
    }

    fn compute_order(&self, i: usize) -> u32 {
        let mut k = 1;
        let mut x = i;
        while x != 0 {
            x = self.mul(x, i);
            k += 1;
        }
        k
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.inv.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Indices of the group's generators.
    pub fn gens(&self) -> Vec<usize> {
        self.gens.iter().map(|&g| g as usize).collect()
    }

    pub fn images(&self, i: usize) -> &[u32] {
        &self.data[i * self.degree..(i + 1) * self.degree]
    }

    pub fn perm(&self, i: usize) -> Perm {
        Perm::from_images_unchecked(self.images(i).to_vec())
    }

    /// Index of `g`, or `None` if it is not in the group.
    pub fn index_of(&self, g: &Perm) -> Option<usize> {
        if g.degree() != self.degree {
            return None;
        }
        let mut imgs: Vec<u32> = self.base.iter().map(|&b| g.apply(b)).collect();
        let i = self.group.chain().index_of_base_images(&mut imgs)? as usize;
        (self.images(i) == g.images()).then_some(i)
    }

    /// Index of `a · b` (apply `a`, then `b`).
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let pa = self.images(a);
        let pb = self.images(b);
        let mut imgs: Vec<u32> = self
            .base
            .iter()
            .map(|&x| pb[pa[x as usize] as usize])
            .collect();
        self.lookup(&mut imgs) as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn order_of(&self, a: usize) -> usize {
        self.ord[a] as usize
    }

    /// `g⁻¹ · a · g`.
    pub fn conj(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), a), g)
    }

    /// `a · b · a⁻¹ · b⁻¹`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let mut acc = 0;
        for _ in 0..k % self.order_of(a) {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// Membership mask of the subgroup generated by `gens`.
    pub fn closure_mask(&self, gens: &[usize]) -> Vec<bool> {
        let mut mask = vec![false; self.len()];
        mask[0] = true;
        let mut elems = vec![0usize];
        let mut k = 0;
        while k < elems.len() {
            let x = elems[k];
            for &g in gens {
                let y = self.mul(x, g);
                if !mask[y] {
                    mask[y] = true;
                    elems.push(y);
                }
            }
            k += 1;
        }
        mask
    }

    /// Sorted element indices of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mask = self.closure_mask(gens);
        (0..self.len()).filter(|&i| mask[i]).collect()
    }

    /// Histogram of element orders as `(order, count)`, ascending.
    pub fn order_histogram(&self) -> Vec<(u64, u64)> {
        let mut h = std::collections::BTreeMap::new();
        for &o in &self.ord {
            *h.entry(o as u64).or_insert(0u64) += 1;
        }
        h.into_iter().collect()
    }

    /// Checks `mul` against direct composition for every pair; test helper.
    #[cfg(test)]
    pub(crate) fn verify(&self) -> bool {
        (0..self.len()).all(|a| {
            (0..self.len()).all(|b| self.perm(a).mul(&self.perm(b)) == self.perm(self.mul(a, b)))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s4() -> PermGroup {
        PermGroup::new(
            4,
            vec![
                Perm::parse("(1,2)", 4).unwrap(),
                Perm::parse("(1,2,3,4)", 4).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn table_of_s4() {
        let t = GroupTable::new(&s4(), 1000).unwrap();
        assert_eq!(t.len(), 24);
        assert!(t.perm(0).is_identity());
        assert!(t.verify());
        for a in 0..24 {
            assert_eq!(t.mul(a, t.inv(a)), 0);
            assert_eq!(t.index_of(&t.perm(a)), Some(a));
        }
        assert_eq!(t.order_histogram(), vec![(1, 1), (2, 9), (3, 8), (4, 6)]);
        let v4 = t.closure(&[
            t.index_of(&Perm::parse("(1,2)(3,4)", 4).unwrap()).unwrap(),
            t.index_of(&Perm::parse("(1,3)(2,4)", 4).unwrap()).unwrap(),
        ]);
        assert_eq!(v4.len(), 4);
    }

    #[test]
    fn capacity_is_enforced() {
        assert!(GroupTable::new(&s4(), 10).is_err());
    }
}
