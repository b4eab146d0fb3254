use rustc_hash::FxHashMap;

use super::chain::StabChain;
use super::group::PermGroup;
use super::perm::Perm;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// A permutation image of `G/N`, with the map sending elements of `G` into it.
#[derive(Clone, Debug)]
pub struct CosetAction {
    image: PermGroup,
    kind: Kind,
}

#[derive(Clone, Debug)]
enum Kind {
    /// `N` trivial: the image is `G` itself.
    Identity,
    /// Action on the orbits of `N`; `block[p]` is the orbit containing point `p`.
    Blocks { block: Vec<u32> },
    /// Action on right cosets `Nx`, each stored as its canonical representative.
    Cosets {
        n_chain: StabChain,
        reps: Vec<Perm>,
        index: FxHashMap<Perm, u32>,
    },
}

impl CosetAction {
    /// The quotient as a permutation group.
    pub fn image(&self) -> &PermGroup {
        &self.image
    }

    pub fn into_image(self) -> PermGroup {
        self.image
    }

    /// Number of points the quotient acts on.
    pub fn degree(&self) -> usize {
        self.image.degree()
    }

    /// Image of an element of `G` under `G → G/N`.
    pub fn map(&self, g: &Perm) -> Perm {
        match &self.kind {
            Kind::Identity => g.clone(),
            Kind::Blocks { block } => block_image(block, self.image.degree(), g),
            Kind::Cosets {
                n_chain,
                reps,
                index,
            } => {
                let img = reps
                    .iter()
                    .map(|r| index[&canonical_rep(n_chain, &r.mul(g))])
                    .collect();
                Perm::from_images_unchecked(img)
            }
        }
    }
}

fn block_image(block: &[u32], nblocks: usize, g: &Perm) -> Perm {
    let mut img = vec![u32::MAX; nblocks];
    for (p, &b) in block.iter().enumerate() {
        if b != u32::MAX && img[b as usize] == u32::MAX {
            img[b as usize] = block[g.apply(p as u32) as usize];
        }
    }
    Perm::from_images_unchecked(img)
}

/// Least element of the coset `N·x`, lexicographic in the base images of `N`'s chain.
fn canonical_rep(n: &StabChain, x: &Perm) -> Perm {
    let mut x = x.clone();
    for l in &n.levels {
        let (k, _) = l
            .orbit
            .iter()
            .enumerate()
            .map(|(k, &g)| (k, x.apply(g)))
            .min_by_key(|&(_, v)| v)
            .expect("orbit is nonempty");
        if k != 0 {
            x = l.transversal(k).mul(&x);
        }
    }
    x
}

/// The action of `G` on the cosets of the normal subgroup `N`; its image is `G/N`.
///
/// When `N` is the kernel of the action on its own orbits (true for centers
/// of matrix groups acting on vectors, where orbits are rays) that small
/// action is used; otherwise cosets are enumerated explicitly.
pub fn coset_action(g: &PermGroup, n: &PermGroup, limits: &Limits) -> Result<CosetAction> {
    if !n.is_normal_in(g) {
        return Err(Error::InvalidArgument(
            "subgroup is not normal, so the coset action is not a quotient".into(),
        ));
    }
    let index = g.order() / n.order();
    Limits::check("quotient index", index, limits.enumeration)?;
    if n.order() == 1 {
        return Ok(CosetAction {
            image: g.clone(),
            kind: Kind::Identity,
        });
    }

    let mut block = vec![u32::MAX; g.degree()];
    let orbits = n.orbits();
    let moved: Vec<&Vec<u32>> = orbits.iter().filter(|o| o.len() > 1).collect();
    let mut nb = 0u32;
    for o in &orbits {
        for &p in o {
            block[p as usize] = nb;
        }
        nb += 1;
    }
    if !moved.is_empty() {
        let gens: Vec<Perm> = g
            .gens()
            .iter()
            .map(|x| block_image(&block, nb as usize, x))
            .collect();
        let image = PermGroup::from_parts(nb as usize, gens);
        if image.order() == index {
            let image = image.with_known_order(index);
            return Ok(CosetAction {
                image,
                kind: Kind::Blocks { block },
            });
        }
    }

    let n_chain = n.chain().clone();
    let id = canonical_rep(&n_chain, &g.identity());
    let mut reps = vec![id.clone()];
    let mut index_of: FxHashMap<Perm, u32> = FxHashMap::default();
    index_of.insert(id, 0);
    let mut images: Vec<Vec<u32>> = vec![Vec::new(); g.gens().len()];
    let mut k = 0;
    while k < reps.len() {
        for (gi, x) in g.gens().iter().enumerate() {
            let c = canonical_rep(&n_chain, &reps[k].mul(x));
            let next = reps.len() as u32;
            let j = *index_of.entry(c.clone()).or_insert(next);
            if j == next {
                reps.push(c);
            }
            images[gi].push(j);
        }
        k += 1;
    }
    debug_assert_eq!(reps.len() as u128, index);
    let gens = images
        .into_iter()
        .map(Perm::from_images_unchecked)
        .collect();
    let image = PermGroup::from_parts(reps.len(), gens).with_known_order(index);
    Ok(CosetAction {
        image,
        kind: Kind::Cosets {
            n_chain,
            reps,
            index: index_of,
        },
    })
}
