use std::fmt;
use std::hash::{Hash, Hasher};

use rustc_hash::FxHasher;

use crate::cyclo::{lcm, Cyclotomic, Dense};
use crate::error::{Error, Result};

/// Square matrix over cyclotomic numbers, row-major.
///
/// Named for its role: every matrix built by the gate catalog is unitary,
/// and [`UnitaryMatrix::new_unitary`] checks that exactly. Plain
/// [`UnitaryMatrix::new`] skips the check so intermediate products and test
/// fixtures can be built freely.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitaryMatrix {
    dim: usize,
    entries: Vec<Cyclotomic>,
}

impl UnitaryMatrix {
    pub fn new(dim: usize, entries: Vec<Cyclotomic>) -> Result<Self> {
        if dim == 0 || entries.len() != dim * dim {
            return Err(Error::InvalidArgument(format!(
                "matrix of dim {dim} needs {} entries, got {}",
                dim * dim,
                entries.len()
            )));
        }
        Ok(UnitaryMatrix { dim, entries })
    }

    /// Like [`new`](Self::new) but rejects matrices with `M·M† ≠ I`.
    pub fn new_unitary(dim: usize, entries: Vec<Cyclotomic>) -> Result<Self> {
        let m = Self::new(dim, entries)?;
        if !m.is_unitary() {
            return Err(Error::InvalidArgument("matrix is not unitary".into()));
        }
        Ok(m)
    }

    /// Builds from rows of integers, a convenience for permutation and sign matrices.
    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        let dim = rows.len();
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().map(|&v| Cyclotomic::from_int(v)))
            .collect();
        Self::new(dim, entries)
    }

    pub fn identity(dim: usize) -> Self {
        Self::diag(&vec![Cyclotomic::one(); dim])
    }

    pub fn diag(d: &[Cyclotomic]) -> Self {
        let dim = d.len();
        let mut entries = vec![Cyclotomic::zero(); dim * dim];
        for (i, v) in d.iter().enumerate() {
            entries[i * dim + i] = v.clone();
        }
        UnitaryMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Cyclotomic] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.entries[i * self.dim + j]
    }

    pub fn row(&self, i: usize) -> &[Cyclotomic] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    fn common_conductor(&self) -> u32 {
        self.entries.iter().fold(1, |n, e| lcm(n, e.conductor()))
    }

    /// Exact product `self · rhs`.
    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        if self.dim != rhs.dim {
            return Err(Error::InvalidArgument(format!(
                "dimension mismatch: {} vs {}",
                self.dim, rhs.dim
            )));
        }
        Ok(self.mul_unchecked(rhs))
    }

    pub(crate) fn mul_unchecked(&self, rhs: &Self) -> Self {
        let d = self.dim;
        let n = lcm(self.common_conductor(), rhs.common_conductor());
        let mut entries = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let mut acc = Dense::new(n);
                for k in 0..d {
                    let a = &self.entries[i * d + k];
                    let b = &rhs.entries[k * d + j];
                    if !a.is_zero() && !b.is_zero() {
                        acc.add_product(a, b);
                    }
                }
                entries.push(acc.finish());
            }
        }
        UnitaryMatrix { dim: d, entries }
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        let d = self.dim;
        let n = v
            .iter()
            .fold(self.common_conductor(), |n, e| lcm(n, e.conductor()));
        (0..d)
            .map(|j| {
                let mut acc = Dense::new(n);
                for (k, vk) in v.iter().enumerate() {
                    let b = &self.entries[k * d + j];
                    if !vk.is_zero() && !b.is_zero() {
                        acc.add_product(vk, b);
                    }
                }
                acc.finish()
            })
            .collect()
    }

    /// Kronecker product; `self` is the most significant (leftmost) factor.
    pub fn kron(&self, rhs: &Self) -> Self {
        let (a, b) = (self.dim, rhs.dim);
        let d = a * b;
        let mut entries = Vec::with_capacity(d * d);
        for r in 0..d {
            for c in 0..d {
                let x = &self.entries[(r / b) * a + c / b];
                let y = &rhs.entries[(r % b) * b + c % b];
                entries.push(if x.is_zero() || y.is_zero() {
                    Cyclotomic::zero()
                } else {
                    x * y
                });
            }
        }
        UnitaryMatrix { dim: d, entries }
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        let d = self.dim;
        let mut entries = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                entries.push(self.entries[j * d + i].conj());
            }
        }
        UnitaryMatrix { dim: d, entries }
    }

    pub fn scale(&self, s: &Cyclotomic) -> Self {
        UnitaryMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        let d = self.dim;
        self.entries.iter().enumerate().all(|(k, e)| {
            if k / d == k % d {
                e.is_one()
            } else {
                e.is_zero()
            }
        })
    }

    pub fn is_unitary(&self) -> bool {
        self.mul_unchecked(&self.dagger()).is_identity()
    }

    /// Scalar multiple of the identity?
    pub fn scalar_value(&self) -> Option<Cyclotomic> {
        let d = self.dim;
        let s = self.entries[0].clone();
        for (k, e) in self.entries.iter().enumerate() {
            let want_diag = k / d == k % d;
            if (want_diag && *e != s) || (!want_diag && !e.is_zero()) {
                return None;
            }
        }
        Some(s)
    }

    /// Multiplicative order, if it is at most `limit`.
    pub fn order(&self, limit: usize) -> Option<usize> {
        let mut acc = self.clone();
        for k in 1..=limit {
            if acc.is_identity() {
                return Some(k);
            }
            acc = acc.mul_unchecked(self);
        }
        None
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.mul_unchecked(other) == other.mul_unchecked(self)
    }

    /// Deterministic 64-bit hash of the canonical entries.
    pub fn stable_hash(&self) -> u64 {
        let mut h = FxHasher::default();
        self.hash(&mut h);
        h.finish()
    }

    /// Text form `[[a, b], [c, d]]` with entries in cyclotomic syntax.
    pub fn to_text(&self) -> String {
        let rows: Vec<String> = (0..self.dim)
            .map(|i| {
                let cells: Vec<String> = self.row(i).iter().map(|c| c.to_string()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    }

    pub fn parse_text(s: &str) -> Result<Self> {
        let bad = |m: &str| Error::Parse {
            line: 0,
            msg: format!("{m} in matrix {s:?}"),
        };
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| bad("missing outer brackets"))?
            .trim();
        let mut rows: Vec<Vec<Cyclotomic>> = Vec::new();
        let mut rest = inner;
        while !rest.is_empty() {
            let body = rest.strip_prefix('[').ok_or_else(|| bad("expected '['"))?;
            let close = body.find(']').ok_or_else(|| bad("unclosed row"))?;
            let cells = body[..close]
                .split(',')
                .map(|c| c.parse::<Cyclotomic>())
                .collect::<Result<Vec<_>>>()?;
            rows.push(cells);
            rest = body[close + 1..].trim_start();
            if let Some(r) = rest.strip_prefix(',') {
                rest = r.trim_start();
            } else if !rest.is_empty() {
                return Err(bad("expected ',' between rows"));
            }
        }
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(bad("matrix is not square"));
        }
        Self::new(dim, rows.into_iter().flatten().collect())
    }
}

impl fmt::Debug for UnitaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Display for UnitaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl std::ops::Mul for &UnitaryMatrix {
    type Output = UnitaryMatrix;
    fn mul(self, rhs: &UnitaryMatrix) -> UnitaryMatrix {
        self.matmul(rhs).expect("dimension mismatch")
    }
}

/// Free-function form of [`UnitaryMatrix::matmul`].
pub fn matmul(a: &UnitaryMatrix, b: &UnitaryMatrix) -> Result<UnitaryMatrix> {
    a.matmul(b)
}

/// Free-function form of [`UnitaryMatrix::kron`].
pub fn kron(a: &UnitaryMatrix, b: &UnitaryMatrix) -> UnitaryMatrix {
    a.kron(b)
}

/// Free-function form of [`UnitaryMatrix::dagger`].
pub fn dagger(a: &UnitaryMatrix) -> UnitaryMatrix {
    a.dagger()
}
