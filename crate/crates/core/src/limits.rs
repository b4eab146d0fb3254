//! Capacity limits shared by every enumeration and search.
//!
//! Defaults can be overridden with the `CLIFFGROUPS_LIMITS` environment
//! variable, a comma-separated list of `key=value` pairs, for example
//! `CLIFFGROUPS_LIMITS=enumeration=400000,iso_order=30000`.

use crate::error::{Error, Result};

pub const LIMITS_ENV: &str = "CLIFFGROUPS_LIMITS";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest matrix group `closure` will enumerate.
    pub closure_budget: usize,
    /// Largest group whose elements are listed explicitly.
    pub enumeration: usize,
    /// Largest order accepted by `isomorphic`.
    pub iso_order: usize,
    /// Largest group for automorphism computations in the required tier.
    pub aut_order: usize,
    /// Largest group for automorphism computations in the extended tier.
    pub aut_order_extended: usize,
    /// Largest group for the all-pairs commutator scan.
    pub commutator_pairs: usize,
    /// Largest group for the class-based commutator scan.
    pub commutator_classes: usize,
    /// Node budget for backtracking searches.
    pub search_nodes: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            closure_budget: 200_000,
            enumeration: 200_000,
            iso_order: 20_000,
            aut_order: 128,
            aut_order_extended: 8192,
            commutator_pairs: 4096,
            commutator_classes: 20_000,
            search_nodes: 50_000_000,
        }
    }
}

impl Limits {
    /// Defaults with overrides from `CLIFFGROUPS_LIMITS` applied.
    pub fn from_env() -> Result<Self> {
        let mut l = Limits::default();
        if let Ok(spec) = std::env::var(LIMITS_ENV) {
            l.apply_overrides(&spec)?;
        }
        Ok(l)
    }

    pub fn apply_overrides(&mut self, spec: &str) -> Result<()> {
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = item.split_once('=').ok_or_else(|| {
                Error::InvalidArgument(format!("limit override {item:?} lacks '='"))
            })?;
            let v: u64 = v.trim().parse().map_err(|_| {
                Error::InvalidArgument(format!("limit override {item:?} is not a number"))
            })?;
            let slot: &mut usize = match k.trim() {
                "closure_budget" => &mut self.closure_budget,
                "enumeration" => &mut self.enumeration,
                "iso_order" => &mut self.iso_order,
                "aut_order" => &mut self.aut_order,
                "aut_order_extended" => &mut self.aut_order_extended,
                "commutator_pairs" => &mut self.commutator_pairs,
                "commutator_classes" => &mut self.commutator_classes,
                "search_nodes" => {
                    self.search_nodes = v;
                    continue;
                }
                other => return Err(Error::InvalidArgument(format!("unknown limit {other:?}"))),
            };
            *slot = v as usize;
        }
        Ok(())
    }

    pub(crate) fn check(what: &'static str, needed: u128, limit: usize) -> Result<()> {
        if needed > limit as u128 {
            Err(Error::Capacity {
                what,
                needed,
                limit: limit as u128,
            })
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides_parse() {
        let mut l = Limits::default();
        l.apply_overrides("enumeration=10, aut_order=64,search_nodes=5")
            .unwrap();
        assert_eq!(l.enumeration, 10);
        assert_eq!(l.aut_order, 64);
        assert_eq!(l.search_nodes, 5);
        assert!(l.apply_overrides("bogus=1").is_err());
        assert!(l.apply_overrides("enumeration").is_err());
    }
}
