use crate::permgrp::GroupTable;

const UNSET: u32 = u32::MAX;

/// Extends `gens[i] ↦ imgs[i]` to a homomorphism on `⟨gens⟩`.
///
/// Walks the Cayley graph of `⟨gens⟩` from the identity, setting
/// `φ(x·gᵢ) = φ(x)·φ(gᵢ)` and checking every edge for consistency, which
/// proves the map is a homomorphism. Returns the map indexed by source
/// element, `u32::MAX` outside `⟨gens⟩`, or `None` if some edge disagrees.
pub fn extend_hom(
    src: &GroupTable,
    gens: &[usize],
    tgt: &GroupTable,
    imgs: &[usize],
) -> Option<Vec<u32>> {
    let mut map = vec![UNSET; src.len()];
    map[0] = 0;
    let mut queue = vec![0usize];
    let mut k = 0;
    while k < queue.len() {
        let x = queue[k];
        let fx = map[x] as usize;
        for (&g, &t) in gens.iter().zip(imgs) {
            let y = src.mul(x, g);
            let fy = tgt.mul(fx, t) as u32;
            if map[y] == UNSET {
                map[y] = fy;
                queue.push(y);
            } else if map[y] != fy {
                return None;
            }
        }
        k += 1;
    }
    Some(map)
}

/// Like [`extend_hom`] but also fails unless the map is injective on `⟨gens⟩`.
pub fn extend_injective(
    src: &GroupTable,
    gens: &[usize],
    tgt: &GroupTable,
    imgs: &[usize],
) -> Option<Vec<u32>> {
    let map = extend_hom(src, gens, tgt, imgs)?;
    let mut hit = vec![false; tgt.len()];
    for &y in map.iter().filter(|&&y| y != UNSET) {
        if std::mem::replace(&mut hit[y as usize], true) {
            return None;
        }
    }
    Some(map)
}
