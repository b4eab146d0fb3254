//! Exact computational group theory for quantum gate groups.
//!
//! Gate matrices live over cyclotomic numbers ([`cyclo`]), generate finite
//! matrix groups ([`matgrp`]), and are analyzed through faithful permutation
//! representations ([`permgrp`]). [`structlab`] adds reference groups,
//! isomorphism and automorphism search, and commutator-set scans;
//! [`quantum`] builds the Pauli, Clifford and Bell groups together with the
//! Pauli commutation geometry; [`claims`] runs a ledger of structural
//! assertions against all of it.

pub mod claims;
pub mod cyclo;
pub mod error;
pub mod limits;
pub mod matgrp;
pub mod permgrp;
pub mod quantum;
pub mod structlab;

pub use error::{Error, Result};
pub use limits::Limits;
