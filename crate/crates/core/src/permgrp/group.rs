use std::fmt;
use std::sync::{Arc, OnceLock};

use super::chain::StabChain;
use super::perm::Perm;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// A permutation group given by generators, with a lazily built stabilizer chain.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    known_order: Option<u128>,
    chain: Arc<OnceLock<StabChain>>,
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::InvalidArgument(format!(
                "generator {g} has degree {}, expected {degree}",
                g.degree()
            )));
        }
        Ok(Self::from_parts(degree, gens))
    }

    pub(crate) fn from_parts(degree: usize, gens: Vec<Perm>) -> Self {
        PermGroup {
            degree,
            gens,
            known_order: None,
            chain: Arc::new(OnceLock::new()),
        }
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_parts(degree, Vec::new())
    }

    /// Records an order known from elsewhere; chain construction stops once it is reached.
    pub fn with_known_order(mut self, order: u128) -> Self {
        self.known_order = Some(order);
        self.chain = Arc::new(OnceLock::new());
        self
    }

    /// Parses a group file: `degree N` then one generator per line in cycle notation.
    pub fn parse_file(text: &str) -> Result<Self> {
        let mut degree = None;
        let mut gens = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let at = |e: Error| match e {
                Error::Parse { msg, .. } => Error::Parse { line: ln + 1, msg },
                Error::InvalidArgument(msg) => Error::Parse { line: ln + 1, msg },
                other => other,
            };
            match degree {
                None => {
                    let n = line
                        .strip_prefix("degree")
                        .and_then(|r| r.trim().parse::<usize>().ok())
                        .ok_or(Error::Parse {
                            line: ln + 1,
                            msg: "expected 'degree N'".into(),
                        })?;
                    degree = Some(n);
                }
                Some(n) => gens.push(Perm::parse(line, n).map_err(at)?),
            }
        }
        let n = degree.ok_or(Error::Parse {
            line: 0,
            msg: "missing 'degree N' line".into(),
        })?;
        PermGroup::new(n, gens)
    }

    pub fn to_file(&self) -> String {
        let mut s = format!("degree {}\n", self.degree);
        for g in &self.gens {
            s.push_str(&g.to_cycle_string());
            s.push('\n');
        }
        s
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn gens(&self) -> &[Perm] {
        &self.gens
    }

    pub fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::new(self.degree, &self.gens, self.known_order))
    }

    /// Builds the stabilizer chain now; returns it for inspection.
    pub fn bsgs(&self) -> &StabChain {
        self.chain()
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.chain().contains(g)
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.iter().all(Perm::is_identity)
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    pub fn is_abelian(&self) -> bool {
        self.gens
            .iter()
            .enumerate()
            .all(|(i, a)| self.gens[i + 1..].iter().all(|b| a.mul(b) == b.mul(a)))
    }

    /// Subgroup on the same points generated by `gens`.
    pub fn subgroup(&self, gens: Vec<Perm>) -> Result<PermGroup> {
        PermGroup::new(self.degree, gens)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.gens.iter().all(|g| other.contains(g))
    }

    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    /// Is `self` a normal subgroup of `g`?
    pub fn is_normal_in(&self, g: &PermGroup) -> bool {
        self.is_subgroup_of(g)
            && self
                .gens
                .iter()
                .all(|n| g.gens.iter().all(|x| self.contains(&n.conj(x))))
    }

    /// Every element, identity first, in stabilizer-chain order.
    pub fn elements(&self, limit: usize) -> Result<Vec<Perm>> {
        Limits::check("element enumeration", self.order(), limit)?;
        let mut out = Vec::with_capacity(self.order() as usize);
        self.chain().for_each_element(|g| out.push(g.clone()));
        Ok(out)
    }

    /// Deterministic pseudo-random element indexed by `seed` (for sampling).
    pub fn element_at(&self, seed: u128) -> Perm {
        self.chain().element_at(seed % self.order())
    }

    /// Smallest normal subgroup containing `seeds`.
    pub fn normal_closure(&self, seeds: &[Perm]) -> Result<PermGroup> {
        for s in seeds {
            if !self.contains(s) {
                return Err(Error::InvalidArgument(format!(
                    "seed {s} is not in the group"
                )));
            }
        }
        Ok(self.normal_closure_unchecked(seeds))
    }

    pub(crate) fn normal_closure_unchecked(&self, seeds: &[Perm]) -> PermGroup {
        let mut chain = StabChain::new(self.degree, &[], None);
        let mut gens: Vec<Perm> = Vec::new();
        let mut queue: Vec<Perm> = seeds.to_vec();
        while let Some(x) = queue.pop() {
            if x.is_identity() || !chain.add_generator(&x) {
                continue;
            }
            for g in &self.gens {
                queue.push(x.conj(g));
            }
            gens.push(x);
        }
        let order = chain.order();
        let n = PermGroup::from_parts(self.degree, gens);
        let _ = n.chain.set(chain);
        debug_assert_eq!(n.order(), order);
        n
    }

    /// `[G, G]`, the normal closure of commutators of generators.
    pub fn derived_subgroup(&self) -> PermGroup {
        let mut seeds = Vec::new();
        for (i, a) in self.gens.iter().enumerate() {
            for b in &self.gens[i + 1..] {
                let c = a.commutator(b);
                if !c.is_identity() {
                    seeds.push(c);
                }
            }
        }
        self.normal_closure_unchecked(&seeds)
    }

    /// Orders of `G ⊇ G′ ⊇ G″ ⊇ …` until the series stabilizes.
    pub fn derived_series_orders(&self) -> Vec<u128> {
        let mut out = vec![self.order()];
        let mut cur = self.clone();
        loop {
            let next = cur.derived_subgroup();
            let o = next.order();
            if o == *out.last().expect("nonempty") {
                return out;
            }
            out.push(o);
            if o == 1 {
                return out;
            }
            cur = next;
        }
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subgroup().order() == self.order()
    }

    /// `Z(G)`, by testing every element against the generators.
    pub fn center(&self, limit: usize) -> Result<PermGroup> {
        Limits::check("center enumeration", self.order(), limit)?;
        let mut chain = StabChain::new(self.degree, &[], None);
        let mut gens = Vec::new();
        self.chain().for_each_element(|x| {
            if self.gens.iter().all(|g| x.mul(g) == g.mul(x)) && !chain.contains(x) {
                chain.add_generator(x);
                gens.push(x.clone());
            }
        });
        let z = PermGroup::from_parts(self.degree, gens);
        let _ = z.chain.set(chain);
        Ok(z)
    }

    /// Orbits of the group on its points, each sorted, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for s in 0..self.degree {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut orb = vec![s as u32];
            let mut k = 0;
            while k < orb.len() {
                for g in &self.gens {
                    let q = g.apply(orb[k]);
                    if !seen[q as usize] {
                        seen[q as usize] = true;
                        orb.push(q);
                    }
                }
                k += 1;
            }
            orb.sort_unstable();
            out.push(orb);
        }
        out
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup(degree {}, gens [", self.degree)?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "])")
    }
}

/// Builds the chain of `g`; free-function form.
pub fn bsgs(g: &PermGroup) -> &StabChain {
    g.bsgs()
}

pub fn center(g: &PermGroup, limits: &Limits) -> Result<PermGroup> {
    g.center(limits.enumeration)
}

pub fn derived_subgroup(g: &PermGroup) -> PermGroup {
    g.derived_subgroup()
}

pub fn normal_closure(g: &PermGroup, seeds: &[Perm]) -> Result<PermGroup> {
    g.normal_closure(seeds)
}
