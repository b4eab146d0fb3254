use rustc_hash::FxHashSet;

use super::group::PermGroup;
use super::perm::Perm;
use super::quotient::coset_action;
use super::table::GroupTable;
use crate::error::Result;
use crate::limits::Limits;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: Perm,
    pub size: usize,
}

impl GroupTable {
    /// Conjugacy classes as sorted index lists, ordered by smallest member.
    /// The identity class comes first.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let gens = self.gens();
        let ginv: Vec<usize> = gens.iter().map(|&g| self.inv(g)).collect();
        let mut class_of = vec![u32::MAX; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if class_of[start] != u32::MAX {
                continue;
            }
            let id = out.len() as u32;
            class_of[start] = id;
            let mut members = vec![start];
            let mut k = 0;
            while k < members.len() {
                let x = members[k];
                for (&g, &gi) in gens.iter().zip(&ginv) {
                    let y = self.mul(self.mul(gi, x), g);
                    if class_of[y] == u32::MAX {
                        class_of[y] = id;
                        members.push(y);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }
}

pub fn conjugacy_classes(g: &PermGroup, limits: &Limits) -> Result<Vec<ConjugacyClass>> {
    let t = GroupTable::new(g, limits.enumeration)?;
    Ok(t.conjugacy_classes()
        .into_iter()
        .map(|c| ConjugacyClass {
            representative: t.perm(c[0]),
            size: c.len(),
        })
        .collect())
}

/// A normal subgroup together with the conjugacy classes it contains.
#[derive(Clone, Debug)]
pub struct NormalSubgroup {
    pub group: PermGroup,
    pub order: u128,
    /// `classes[i]` is true when the `i`-th conjugacy class of the parent lies inside.
    pub classes: Vec<bool>,
    parent_order: u128,
}

impl NormalSubgroup {
    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order == self.parent_order
    }

    pub fn is_proper_nontrivial(&self) -> bool {
        !self.is_trivial() && !self.is_whole()
    }
}

/// Every normal subgroup, sorted by order, trivial group first and `G` last.
///
/// Each is the normal closure of one conjugacy class or a join of such.
pub fn normal_subgroups(g: &PermGroup, limits: &Limits) -> Result<Vec<NormalSubgroup>> {
    let t = GroupTable::new(g, limits.enumeration)?;
    let classes = t.conjugacy_classes();
    let reps: Vec<Perm> = classes.iter().map(|c| t.perm(c[0])).collect();
    let mask_of = |h: &PermGroup| -> Vec<bool> { reps.iter().map(|r| h.contains(r)).collect() };

    let mut seen: FxHashSet<Vec<bool>> = FxHashSet::default();
    let mut found: Vec<(Vec<bool>, PermGroup)> = Vec::new();
    let trivial = PermGroup::trivial(g.degree());
    let m = mask_of(&trivial);
    seen.insert(m.clone());
    found.push((m, trivial));
    for r in reps.iter().skip(1) {
        let h = g.normal_closure_unchecked(std::slice::from_ref(r));
        let m = mask_of(&h);
        if seen.insert(m.clone()) {
            found.push((m, h));
        }
    }
    let mut i = 1;
    while i < found.len() {
        for j in 1..i {
            let (a, b) = (&found[i].0, &found[j].0);
            let a_in_b = a.iter().zip(b).all(|(&x, &y)| !x || y);
            let b_in_a = a.iter().zip(b).all(|(&x, &y)| x || !y);
            if a_in_b || b_in_a {
                continue;
            }
            let mut gens = found[i].1.gens().to_vec();
            gens.extend_from_slice(found[j].1.gens());
            let h = g.normal_closure_unchecked(&gens);
            let m = mask_of(&h);
            if seen.insert(m.clone()) {
                found.push((m, h));
            }
        }
        i += 1;
    }
    let parent_order = g.order();
    let mut out: Vec<NormalSubgroup> = found
        .into_iter()
        .map(|(classes, group)| NormalSubgroup {
            order: group.order(),
            group,
            classes,
            parent_order,
        })
        .collect();
    out.sort_by(|a, b| {
        a.order
            .cmp(&b.order)
            .then_with(|| b.classes.cmp(&a.classes))
    });
    Ok(out)
}

/// Invariant factors `d₁ | d₂ | …` of `G/G′`; empty for perfect groups.
pub fn abelian_invariants(g: &PermGroup, limits: &Limits) -> Result<Vec<u64>> {
    let d = g.derived_subgroup();
    let q = coset_action(g, &d, limits)?.into_image();
    let t = GroupTable::new(&q, limits.enumeration)?;
    Ok(table_abelian_invariants(&t))
}

/// Invariant factors of an abelian group given by its table.
pub(crate) fn table_abelian_invariants(t: &GroupTable) -> Vec<u64> {
    let n = t.len();
    let mut in_k = vec![false; n];
    in_k[0] = true;
    let mut k_size = 1;
    let mut k_gens: Vec<usize> = Vec::new();
    let mut factors = Vec::new();
    while k_size < n {
        // Element of largest order modulo K; ties go to the smallest index.
        let (mut best, mut best_ord) = (0, 0);
        for x in 0..n {
            if in_k[x] {
                continue;
            }
            let (mut y, mut m) = (x, 1);
            while !in_k[y] {
                y = t.mul(y, x);
                m += 1;
            }
            if m > best_ord {
                best = x;
                best_ord = m;
            }
        }
        factors.push(best_ord as u64);
        k_gens.push(best);
        in_k = t.closure_mask(&k_gens);
        k_size = in_k.iter().filter(|&&b| b).count();
    }
    factors.reverse();
    factors
}

/// Isomorphism invariants used to tell groups apart cheaply.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupFingerprint {
    pub order: u128,
    /// `(element order, count)`, ascending.
    pub order_histogram: Vec<(u64, u64)>,
    /// Conjugacy class sizes, ascending.
    pub class_sizes: Vec<usize>,
    pub center_order: u128,
    pub derived_series: Vec<u128>,
    pub abelian_invariants: Vec<u64>,
}

pub fn fingerprint(g: &PermGroup, limits: &Limits) -> Result<GroupFingerprint> {
    let t = GroupTable::new(g, limits.enumeration)?;
    table_fingerprint(&t, limits)
}

pub(crate) fn table_fingerprint(t: &GroupTable, limits: &Limits) -> Result<GroupFingerprint> {
    let g = t.group();
    let mut class_sizes: Vec<usize> = t.conjugacy_classes().iter().map(Vec::len).collect();
    class_sizes.sort_unstable();
    let center_order = class_sizes.iter().take_while(|&&s| s == 1).count() as u128;
    Ok(GroupFingerprint {
        order: t.len() as u128,
        order_histogram: t.order_histogram(),
        class_sizes,
        center_order,
        derived_series: g.derived_series_orders(),
        abelian_invariants: abelian_invariants(g, limits)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(n, gens.iter().map(|s| Perm::parse(s, n).unwrap()).collect()).unwrap()
    }

    #[test]
    fn s3_class_sizes() {
        let s3 = grp(3, &["(1,2)", "(1,2,3)"]);
        let mut sizes: Vec<usize> = conjugacy_classes(&s3, &Limits::default())
            .unwrap()
            .iter()
            .map(|c| c.size)
            .collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
    }

    #[test]
    fn s4_normal_subgroup_orders() {
        let s4 = grp(4, &["(1,2)", "(1,2,3,4)"]);
        let ns = normal_subgroups(&s4, &Limits::default()).unwrap();
        let orders: Vec<u128> = ns.iter().map(|n| n.order).collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
        assert!(ns[0].is_trivial() && ns[3].is_whole());
    }

    #[test]
    fn a5_is_simple() {
        let a5 = grp(5, &["(1,2,3)", "(1,2,3,4,5)"]);
        let ns = normal_subgroups(&a5, &Limits::default()).unwrap();
        assert_eq!(ns.len(), 2);
        assert!(abelian_invariants(&a5, &Limits::default())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn cyclic_and_klein_invariants() {
        let z6 = grp(6, &["(1,2,3,4,5,6)"]);
        assert_eq!(
            abelian_invariants(&z6, &Limits::default()).unwrap(),
            vec![6]
        );
        let z2z4 = grp(6, &["(1,2)", "(3,4,5,6)"]);
        assert_eq!(
            abelian_invariants(&z2z4, &Limits::default()).unwrap(),
            vec![2, 4]
        );
        let z4 = grp(4, &["(1,2,3,4)"]);
        let v4 = grp(4, &["(1,2)(3,4)", "(1,3)(2,4)"]);
        let l = Limits::default();
        assert_ne!(
            fingerprint(&z4, &l).unwrap().order_histogram,
            fingerprint(&v4, &l).unwrap().order_histogram
        );
    }

    #[test]
    fn s4_fingerprint() {
        let s4 = grp(4, &["(1,2)", "(1,2,3,4)"]);
        let f = fingerprint(&s4, &Limits::default()).unwrap();
        assert_eq!(f.class_sizes, vec![1, 3, 6, 6, 8]);
        assert_eq!(f.center_order, 1);
        assert_eq!(f.derived_series, vec![24, 12, 4, 1]);
        assert_eq!(f.abelian_invariants, vec![2]);
    }
}
