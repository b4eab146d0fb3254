//! Deterministic Schreier–Sims.
//!
//! Base points are always the smallest point moved by the element that forces
//! a new level, so the chain (and every enumeration derived from it) depends
//! only on the generator list. When the caller already knows the group order
//! the completion loop stops as soon as the basic orbit lengths multiply to
//! it; a chain whose orbit product equals the true order is complete.

use super::perm::Perm;

/// Transversals are stored explicitly below this degree and recomputed from
/// Schreier vectors above it.
const EXPLICIT_DEGREE: usize = 2048;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base: u32,
    pub gens: Vec<Perm>,
    pub orbit: Vec<u32>,
    /// Orbit position of each point, `u32::MAX` outside the orbit.
    pos: Vec<u32>,
    /// For orbit position `k > 0`: `(position of predecessor, generator index)`.
    back: Vec<(u32, u32)>,
    /// `u_β` and `u_β⁻¹` per orbit position, when stored explicitly.
    explicit: Option<(Vec<Perm>, Vec<Perm>)>,
}

impl Level {
    fn new(base: u32, degree: usize) -> Self {
        let mut l = Level {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            pos: Vec::new(),
            back: Vec::new(),
            explicit: None,
        };
        l.rebuild(degree);
        l
    }

    fn rebuild(&mut self, degree: usize) {
        self.pos = vec![u32::MAX; degree];
        self.orbit = vec![self.base];
        self.back = vec![(u32::MAX, u32::MAX)];
        self.pos[self.base as usize] = 0;
        let explicit = degree <= EXPLICIT_DEGREE;
        let mut fwd = Vec::new();
        let mut inv = Vec::new();
        if explicit {
            fwd.push(Perm::identity(degree));
            inv.push(Perm::identity(degree));
        }
        let mut k = 0;
        while k < self.orbit.len() {
            let p = self.orbit[k];
            for (gi, g) in self.gens.iter().enumerate() {
                let q = g.apply(p);
                if self.pos[q as usize] == u32::MAX {
                    self.pos[q as usize] = self.orbit.len() as u32;
                    self.orbit.push(q);
                    self.back.push((k as u32, gi as u32));
                    if explicit {
                        let u = fwd[k].mul(g);
                        inv.push(u.inv());
                        fwd.push(u);
                    }
                }
            }
            k += 1;
        }
        self.explicit = if explicit { Some((fwd, inv)) } else { None };
    }

    #[inline]
    pub fn position(&self, p: u32) -> Option<usize> {
        let k = self.pos[p as usize];
        (k != u32::MAX).then_some(k as usize)
    }

    /// `u` with `base^u = orbit[k]`.
    pub fn transversal(&self, k: usize) -> Perm {
        if let Some((fwd, _)) = &self.explicit {
            return fwd[k].clone();
        }
        let mut path = Vec::new();
        let mut j = k;
        while j != 0 {
            let (prev, g) = self.back[j];
            path.push(g);
            j = prev as usize;
        }
        let mut u = Perm::identity(self.pos.len());
        for g in path.iter().rev() {
            u = u.mul(&self.gens[*g as usize]);
        }
        u
    }

    pub fn transversal_inv(&self, k: usize) -> Perm {
        if let Some((_, inv)) = &self.explicit {
            return inv[k].clone();
        }
        self.transversal(k).inv()
    }

    /// `x · u_k⁻¹` without cloning stored inverses.
    fn strip_by(&self, x: &Perm, k: usize) -> Perm {
        match &self.explicit {
            Some((_, inv)) => x.mul(&inv[k]),
            None => x.mul(&self.transversal(k).inv()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    pub(crate) levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, gens: &[Perm], target: Option<u128>) -> Self {
        let gens: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut base: Vec<u32> = Vec::new();
        for g in &gens {
            if base.iter().all(|&b| g.apply(b) == b) {
                base.push(g.smallest_moved_point().expect("non-identity"));
            }
        }
        let mut levels: Vec<Level> = Vec::with_capacity(base.len());
        for (i, &b) in base.iter().enumerate() {
            let mut l = Level::new(b, degree);
            l.gens = gens
                .iter()
                .filter(|g| base[..i].iter().all(|&c| g.apply(c) == c))
                .cloned()
                .collect();
            l.rebuild(degree);
            levels.push(l);
        }
        let mut chain = StabChain { degree, levels };
        if !chain.levels.is_empty() {
            let top = chain.levels.len() - 1;
            chain.complete(top, target);
        }
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Strong generators (the generators of the top level).
    pub fn strong_generators(&self) -> &[Perm] {
        self.levels
            .first()
            .map(|l| l.gens.as_slice())
            .unwrap_or(&[])
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Strips `g` through levels `from..`; returns the residue and the level
    /// at which it fell out (`levels.len()` if it passed every level).
    pub fn sift(&self, g: &Perm, from: usize) -> (Perm, usize) {
        let mut x = g.clone();
        for (i, l) in self.levels.iter().enumerate().skip(from) {
            let b = x.apply(l.base);
            match l.position(b) {
                Some(k) => {
                    if k != 0 {
                        x = l.strip_by(&x, k);
                    }
                }
                None => return (x, i),
            }
        }
        (x, self.levels.len())
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (r, _) = self.sift(g, 0);
        r.is_identity()
    }

    /// Adds a generator; returns `false` if it was already a member.
    pub fn add_generator(&mut self, g: &Perm) -> bool {
        let (res, j) = self.sift(g, 0);
        if res.is_identity() {
            return false;
        }
        self.insert_residue(res, 0, j);
        let top = self.levels.len() - 1;
        self.complete(top.min(j), None);
        true
    }

    fn insert_residue(&mut self, res: Perm, from: usize, to: usize) {
        if to == self.levels.len() {
            let b = res.smallest_moved_point().expect("non-identity residue");
            self.levels.push(Level::new(b, self.degree));
        }
        for l in from..=to {
            self.levels[l].gens.push(res.clone());
            self.levels[l].rebuild(self.degree);
        }
    }

    fn complete(&mut self, start: usize, target: Option<u128>) {
        if target.is_some_and(|t| self.order() == t) {
            return;
        }
        let mut i = start as isize;
        'outer: while i >= 0 {
            let li = i as usize;
            let orbit_len = self.levels[li].orbit.len();
            let ngens = self.levels[li].gens.len();
            for k in 0..orbit_len {
                for s in 0..ngens {
                    let (h, j) = {
                        let l = &self.levels[li];
                        let g = &l.gens[s];
                        let img = g.apply(l.orbit[k]);
                        let kk = l.position(img).expect("orbit closed");
                        let h = l.transversal(k).mul(g);
                        let h = l.strip_by(&h, kk);
                        if h.is_identity() {
                            continue;
                        }
                        self.sift(&h, li + 1)
                    };
                    if j < self.levels.len() || !h.is_identity() {
                        self.insert_residue(h, li + 1, j);
                        if target.is_some_and(|t| self.order() == t) {
                            return;
                        }
                        i = j as isize;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
    }

    /// Visits every group element exactly once, identity first.
    pub fn for_each_element(&self, mut f: impl FnMut(&Perm)) {
        let trans: Vec<Vec<Perm>> = self
            .levels
            .iter()
            .map(|l| (0..l.orbit.len()).map(|k| l.transversal(k)).collect())
            .collect();
        fn rec(trans: &[Vec<Perm>], depth: usize, acc: &Perm, f: &mut dyn FnMut(&Perm)) {
            if depth == 0 {
                f(acc);
                return;
            }
            for u in &trans[depth - 1] {
                rec(trans, depth - 1, &acc.mul(u), f);
            }
        }
        let id = Perm::identity(self.degree);
        rec(&trans, trans.len(), &id, &mut f);
    }

    /// Inverse of [`element_at`](Self::element_at) given only the base images
    /// of a group element. `imgs` is overwritten. Returns `None` when no group
    /// element has these base images; for non-members that happen to match
    /// one, the result is that member's index.
    pub fn index_of_base_images(&self, imgs: &mut [u32]) -> Option<u128> {
        let mut idx: u128 = 0;
        for (i, l) in self.levels.iter().enumerate() {
            let k = l.position(imgs[i])?;
            idx = idx * l.orbit.len() as u128 + k as u128;
            if k != 0 && i + 1 < imgs.len() {
                match &l.explicit {
                    Some((_, inv)) => {
                        for v in &mut imgs[i + 1..] {
                            *v = inv[k].apply(*v);
                        }
                    }
                    None => {
                        let u = l.transversal_inv(k);
                        for v in &mut imgs[i + 1..] {
                            *v = u.apply(*v);
                        }
                    }
                }
            }
        }
        Some(idx)
    }

    /// The element with mixed-radix coordinates `index` (one orbit position per level).
    pub fn element_at(&self, mut index: u128) -> Perm {
        let mut x = Perm::identity(self.degree);
        for l in self.levels.iter().rev() {
            let len = l.orbit.len() as u128;
            let k = (index % len) as usize;
            index /= len;
            x = x.mul(&l.transversal(k));
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Perm {
        Perm::parse(s, n).unwrap()
    }

    #[test]
    fn symmetric_five() {
        let c = StabChain::new(5, &[p("(1,2)", 5), p("(1,2,3,4,5)", 5)], None);
        assert_eq!(c.order(), 120);
        assert!(c.contains(&p("(1,3)(2,5)", 5)));
    }

    #[test]
    fn trivial_and_membership() {
        let c = StabChain::new(4, &[], None);
        assert_eq!(c.order(), 1);
        let a4 = StabChain::new(4, &[p("(1,2,3)", 4), p("(2,3,4)", 4)], None);
        assert_eq!(a4.order(), 12);
        assert!(!a4.contains(&p("(1,2)", 4)));
        let mut seen = std::collections::HashSet::new();
        a4.for_each_element(|g| {
            seen.insert(g.clone());
        });
        assert_eq!(seen.len(), 12);
    }

    #[test]
    fn add_generator_grows() {
        let mut c = StabChain::new(4, &[p("(1,2,3)", 4), p("(2,3,4)", 4)], None);
        assert!(!c.add_generator(&p("(1,2)(3,4)", 4)));
        assert!(c.add_generator(&p("(1,2)", 4)));
        assert_eq!(c.order(), 24);
    }

    #[test]
    fn known_order_short_circuits() {
        let gens = [p("(1,2)", 6), p("(1,2,3,4,5,6)", 6)];
        let c = StabChain::new(6, &gens, Some(720));
        assert_eq!(c.order(), 720);
    }
}
