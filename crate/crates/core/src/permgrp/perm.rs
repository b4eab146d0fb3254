use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `0..degree`, acting on the right.
///
/// Points are stored 0-based; the text form uses 1-based cycle notation such
/// as `(1,2)(3,4,5)`. The product `a * b` applies `a` first and then `b`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            img: (0..degree as u32).collect(),
        }
    }

    /// Checks that `img` is a bijection on `0..img.len()`.
    pub fn from_images(img: Vec<u32>) -> Result<Self> {
        let n = img.len();
        let mut seen = vec![false; n];
        for &x in &img {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::InvalidArgument(
                    "images do not form a bijection".into(),
                ));
            }
            seen[x] = true;
        }
        Ok(Perm { img })
    }

    pub(crate) fn from_images_unchecked(img: Vec<u32>) -> Self {
        debug_assert!(Perm::from_images(img.clone()).is_ok());
        Perm { img }
    }

    /// Builds from 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut img: Vec<u32> = (0..degree as u32).collect();
        let mut seen = vec![false; degree];
        for cyc in cycles {
            for (k, &p) in cyc.iter().enumerate() {
                let q = cyc[(k + 1) % cyc.len()];
                if p == 0 || p as usize > degree || q == 0 || q as usize > degree {
                    return Err(Error::InvalidArgument(format!(
                        "point {p} outside 1..{degree}"
                    )));
                }
                if seen[p as usize - 1] {
                    return Err(Error::InvalidArgument(format!(
                        "point {p} repeated in cycles"
                    )));
                }
                seen[p as usize - 1] = true;
                img[p as usize - 1] = q - 1;
            }
        }
        Ok(Perm { img })
    }

    /// Parses cycle notation like `(1,2)(3,4,5)`; `()` is the identity.
    pub fn parse(s: &str, degree: usize) -> Result<Self> {
        let bad = |m: &str| Error::Parse {
            line: 0,
            msg: format!("{m} in permutation {s:?}"),
        };
        let mut cycles: Vec<Vec<u32>> = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
            let close = body.find(')').ok_or_else(|| bad("unclosed cycle"))?;
            let inner = body[..close].trim();
            if !inner.is_empty() {
                let pts = inner
                    .split(',')
                    .map(|t| t.trim().parse::<u32>().map_err(|_| bad("bad point")))
                    .collect::<Result<Vec<_>>>()?;
                cycles.push(pts);
            }
            rest = body[close + 1..].trim_start();
        }
        let refs: Vec<&[u32]> = cycles.iter().map(|c| c.as_slice()).collect();
        Perm::from_cycles(degree, &refs)
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.img
    }

    #[inline]
    pub fn apply(&self, p: u32) -> u32 {
        self.img[p as usize]
    }

    /// `self` then `other`.
    pub fn mul(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            img: self.img.iter().map(|&x| other.img[x as usize]).collect(),
        }
    }

    pub fn inv(&self) -> Perm {
        let mut img = vec![0u32; self.img.len()];
        for (i, &x) in self.img.iter().enumerate() {
            img[x as usize] = i as u32;
        }
        Perm { img }
    }

    /// `g⁻¹·self·g`.
    pub fn conj(&self, g: &Perm) -> Perm {
        g.inv().mul(self).mul(g)
    }

    /// `[self, g] = self·g·self⁻¹·g⁻¹`.
    pub fn commutator(&self, g: &Perm) -> Perm {
        self.mul(g).mul(&self.inv()).mul(&g.inv())
    }

    pub fn pow(&self, k: i64) -> Perm {
        let mut base = if k < 0 { self.inv() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Perm::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn smallest_moved_point(&self) -> Option<u32> {
        self.img
            .iter()
            .enumerate()
            .find(|(i, &x)| *i as u32 != x)
            .map(|(i, _)| i as u32)
    }

    /// Disjoint cycles of length ≥ 2, 0-based, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.img.len()];
        let mut out = Vec::new();
        for start in 0..self.img.len() {
            if seen[start] || self.img[start] as usize == start {
                continue;
            }
            let mut cyc = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cyc.push(p as u32);
                p = self.img[p] as usize;
            }
            out.push(cyc);
        }
        out
    }

    /// Element order: lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| {
            let l = c.len() as u64;
            acc / gcd(acc, l) * l
        })
    }

    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".into();
        }
        cycles
            .iter()
            .map(|c| {
                let pts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
                format!("({})", pts.join(","))
            })
            .collect()
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl std::ops::Mul for &Perm {
    type Output = Perm;
    fn mul(self, rhs: &Perm) -> Perm {
        Perm::mul(self, rhs)
    }
}
