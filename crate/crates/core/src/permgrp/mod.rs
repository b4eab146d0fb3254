//! Permutation groups: stabilizer chains, subgroups, quotients and element tables.

mod chain;
mod classes;
mod group;
mod perm;
mod quotient;
mod table;

pub use chain::StabChain;
pub use classes::{
    abelian_invariants, conjugacy_classes, fingerprint, normal_subgroups, ConjugacyClass,
    GroupFingerprint, NormalSubgroup,
};
pub use group::{bsgs, center, derived_subgroup, normal_closure, PermGroup};
pub use perm::Perm;
pub use quotient::{coset_action, CosetAction};
pub use table::GroupTable;

pub(crate) use classes::table_fingerprint;
