use num_bigint::BigUint;

use crate::cyclo::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::matgrp::{closure, MatrixGroup, UnitaryMatrix};

/// Exact one- and two-qubit gates.
#[derive(Clone, Debug)]
pub struct GateCatalog {
    pub sigma0: UnitaryMatrix,
    pub sigma_x: UnitaryMatrix,
    pub sigma_y: UnitaryMatrix,
    pub sigma_z: UnitaryMatrix,
    /// Hadamard, `(1/√2)[[1, 1], [1, −1]]`.
    pub h: UnitaryMatrix,
    /// Phase gate `Diag(1, i)`.
    pub p: UnitaryMatrix,
    /// Controlled-Z, `Diag(1, 1, 1, −1)`.
    pub cz: UnitaryMatrix,
    /// Bell basis change, `(1/√2)[[1,0,0,1],[0,1,−1,0],[0,1,1,0],[−1,0,0,1]]`.
    pub r: UnitaryMatrix,
}

fn scaled_int_rows(rows: &[&[i64]], s: &Cyclotomic) -> UnitaryMatrix {
    let m = UnitaryMatrix::from_int_rows(rows).expect("square rows");
    m.scale(s)
}

impl GateCatalog {
    pub fn new() -> Self {
        let inv_sqrt2 = &Cyclotomic::sqrt2() * &Cyclotomic::from_rational(Rational::new(1, 2));
        let i = Cyclotomic::i();
        let sigma_x = UnitaryMatrix::from_int_rows(&[&[0, 1], &[1, 0]]).expect("2x2");
        let sigma_z = UnitaryMatrix::from_int_rows(&[&[1, 0], &[0, -1]]).expect("2x2");
        let sigma_y = sigma_x.mul_unchecked(&sigma_z).scale(&i);
        GateCatalog {
            sigma0: UnitaryMatrix::identity(2),
            sigma_x,
            sigma_y,
            sigma_z,
            h: scaled_int_rows(&[&[1, 1], &[1, -1]], &inv_sqrt2),
            p: UnitaryMatrix::diag(&[Cyclotomic::one(), i]),
            cz: UnitaryMatrix::diag(&[1, 1, 1, -1].map(Cyclotomic::from_int)),
            r: scaled_int_rows(
                &[&[1, 0, 0, 1], &[0, 1, -1, 0], &[0, 1, 1, 0], &[-1, 0, 0, 1]],
                &inv_sqrt2,
            ),
        }
    }

    /// Gate by name: `I`/`sigma0`, `X`, `Y`, `Z`, `H`, `P`, `CZ`, `R`.
    pub fn get(&self, name: &str) -> Option<&UnitaryMatrix> {
        Some(match name {
            "I" | "sigma0" => &self.sigma0,
            "X" | "sigma_x" => &self.sigma_x,
            "Y" | "sigma_y" => &self.sigma_y,
            "Z" | "sigma_z" => &self.sigma_z,
            "H" => &self.h,
            "P" => &self.p,
            "CZ" => &self.cz,
            "R" => &self.r,
            _ => return None,
        })
    }

    /// Tensor product of single-qubit Paulis from a word over `IXYZ`, leftmost most significant.
    pub fn pauli_word(&self, word: &str) -> Result<UnitaryMatrix> {
        let mut acc: Option<UnitaryMatrix> = None;
        for c in word.chars() {
            let m = match c {
                'I' => &self.sigma0,
                'X' => &self.sigma_x,
                'Y' => &self.sigma_y,
                'Z' => &self.sigma_z,
                _ => {
                    return Err(Error::InvalidArgument(format!(
                        "bad Pauli letter {c:?} in {word:?}"
                    )))
                }
            };
            acc = Some(match acc {
                None => m.clone(),
                Some(a) => a.kron(m),
            });
        }
        acc.ok_or_else(|| Error::InvalidArgument("empty Pauli word".into()))
    }
}

impl Default for GateCatalog {
    fn default() -> Self {
        Self::new()
    }
}

/// Generators of the `n`-qubit Pauli group: `X, Y, Z` acting on each qubit in turn.
pub fn pauli_generators(n: usize) -> Result<Vec<UnitaryMatrix>> {
    if !(1..=3).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "Pauli group needs 1 ≤ n ≤ 3, got {n}"
        )));
    }
    let cat = GateCatalog::new();
    let mut gens = Vec::new();
    for q in 0..n {
        for letter in ['X', 'Y', 'Z'] {
            let word: String = (0..n).map(|k| if k == q { letter } else { 'I' }).collect();
            gens.push(cat.pauli_word(&word)?);
        }
    }
    Ok(gens)
}

/// `XX, ZZ, XY, YZ, ZX`. These are Hermitian and satisfy `XY·YZ·ZX = −I`, so
/// they generate only a 32-element subgroup of the two-qubit Pauli group
/// (the scalar `i` is missing).
pub fn pauli2_five_generators() -> Vec<UnitaryMatrix> {
    let cat = GateCatalog::new();
    ["XX", "ZZ", "XY", "YZ", "ZX"]
        .iter()
        .map(|w| cat.pauli_word(w).expect("valid word"))
        .collect()
}

pub fn pauli_group(n: usize, limits: &Limits) -> Result<MatrixGroup> {
    closure(&pauli_generators(n)?, limits.closure_budget)
}

/// `⟨H, P⟩` for one qubit; `⟨H⊗H, H⊗P, CZ⟩` for two.
pub fn clifford_generators(n: usize) -> Result<Vec<UnitaryMatrix>> {
    let c = GateCatalog::new();
    match n {
        1 => Ok(vec![c.h, c.p]),
        2 => Ok(vec![c.h.kron(&c.h), c.h.kron(&c.p), c.cz]),
        _ => Err(Error::InvalidArgument(format!(
            "Clifford group needs n ∈ {{1, 2}}, got {n}"
        ))),
    }
}

pub fn clifford_group(n: usize, limits: &Limits) -> Result<MatrixGroup> {
    closure(&clifford_generators(n)?, limits.closure_budget)
}

/// `⟨H⊗H, H⊗P, R⟩`.
pub fn bell_generators() -> Vec<UnitaryMatrix> {
    let c = GateCatalog::new();
    vec![c.h.kron(&c.h), c.h.kron(&c.p), c.r]
}

pub fn bell_group(limits: &Limits) -> Result<MatrixGroup> {
    closure(&bell_generators(), limits.closure_budget)
}

/// Generators of a gate group by short name: `p1`, `p2`, `p3`, `p2five`, `c1`, `c2`, `b2`.
pub fn named_generators(name: &str) -> Result<Vec<UnitaryMatrix>> {
    match name {
        "p1" => pauli_generators(1),
        "p2" => pauli_generators(2),
        "p3" => pauli_generators(3),
        "p2five" => Ok(pauli2_five_generators()),
        "c1" => clifford_generators(1),
        "c2" => clifford_generators(2),
        "b2" => Ok(bell_generators()),
        _ => Err(Error::InvalidArgument(format!(
            "unknown gate group {name:?}"
        ))),
    }
}

/// `2^(n²+2n+3) · ∏_{j=1..n} (4^j − 1)`.
pub fn clifford_order_formula(n: u32) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let mut acc = BigUint::from(1u32) << (n * n + 2 * n + 3) as usize;
    for j in 1..=n {
        acc *= (BigUint::from(1u32) << (2 * j) as usize) - 1u32;
    }
    Ok(acc)
}

/// `(R⊗I)(I⊗R)(R⊗I) = (I⊗R)(R⊗I)(I⊗R)` with `I` the 2×2 identity.
pub fn yang_baxter_check(r: &UnitaryMatrix) -> Result<bool> {
    if r.dim() != 4 {
        return Err(Error::InvalidArgument(format!(
            "expected a 4x4 matrix, got {}",
            r.dim()
        )));
    }
    let id = UnitaryMatrix::identity(2);
    let a = r.kron(&id);
    let b = id.kron(r);
    let lhs = a.mul_unchecked(&b).mul_unchecked(&a);
    let rhs = b.mul_unchecked(&a).mul_unchecked(&b);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_identities() {
        let c = GateCatalog::new();
        assert!(c.h.is_unitary() && c.r.is_unitary() && c.cz.is_unitary());
        assert!(c.h.mul_unchecked(&c.h).is_identity());
        assert_eq!(c.p.order(10), Some(4));
        assert_eq!(c.p.mul_unchecked(&c.p), c.sigma_z);
        let xz = c.sigma_x.mul_unchecked(&c.sigma_z);
        let zx = c.sigma_z.mul_unchecked(&c.sigma_x);
        assert_eq!(xz, zx.scale(&Cyclotomic::from_int(-1)));
        assert_eq!(c.sigma_y.to_text(), "[[0, -E(4)], [E(4), 0]]");
        assert_eq!(c.r.dagger().mul_unchecked(&c.r), UnitaryMatrix::identity(4));
    }

    #[test]
    fn formula_values() {
        assert_eq!(clifford_order_formula(1).unwrap(), BigUint::from(192u32));
        assert_eq!(clifford_order_formula(2).unwrap(), BigUint::from(92160u32));
    }

    #[test]
    fn small_group_orders() {
        let l = Limits::default();
        assert_eq!(pauli_group(1, &l).unwrap().order(), 16);
        assert_eq!(pauli_group(2, &l).unwrap().order(), 64);
        assert_eq!(clifford_group(1, &l).unwrap().order(), 192);
        assert_eq!(
            closure(&pauli2_five_generators(), 1000).unwrap().order(),
            32
        );
    }

    #[test]
    fn yang_baxter_for_r_and_cz() {
        let c = GateCatalog::new();
        assert!(yang_baxter_check(&c.r).unwrap());
        // Both sides are diagonal: ABA = B and BAB = A for the involutions
        // A = CZ⊗I, B = I⊗CZ, which differ.
        assert!(!yang_baxter_check(&c.cz).unwrap());
        assert!(yang_baxter_check(&c.h).is_err());
    }
}
