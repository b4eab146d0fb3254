//! Structural analysis: group constructions, isomorphism and automorphism
//! searches, commutator sets and complements.

mod commutators;
mod complement;
mod hom;
mod iso;
mod spec;

pub use commutators::{commutator_set, CommutatorMethod, CommutatorReport};
pub use complement::{find_complement, Complement};
pub use hom::{extend_hom, extend_injective};
pub use iso::{automorphism_group, isomorphic, AutTier, AutomorphismGroup, IsoResult};
pub use spec::{construct, direct_product, semidirect, wreath, GroupSpec};
