//! Elements of cyclotomic fields in canonical (Zumbroich) basis form.
//!
//! An element of `Q(ζ_n)` is a rational combination of powers `ζ_n^k`. The
//! powers are redundant, so every value is rewritten onto the Zumbroich basis
//! of its field and then moved down to the smallest field containing it.
//! After that two elements are equal exactly when their stored data is equal,
//! which is what lets matrices over these numbers be hashed.
//!
//! For `n = Π p^ν` an exponent `i` is split into its prime-power components
//! `e_p = i·(n/p^ν)^{-1} mod p^ν`. The exponent is a basis exponent iff for
//! `p = 2` the top binary digit of `e_2` is zero, and for odd `p` the top
//! balanced base-`p` digit of `e_p` is nonzero.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;

use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    conductor: u32,
    /// Sorted by exponent, no zero coefficients.
    coeffs: Vec<(u32, Rational)>,
}

/// Binary field operation selector for [`arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Applies `op` to `a` and `b`; division by zero is an arithmetic error.
pub fn arith(a: &Cyclotomic, b: &Cyclotomic, op: ArithOp) -> Result<Cyclotomic> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

pub(crate) fn factorize(mut n: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut nu = 0;
            while n.is_multiple_of(p) {
                n /= p;
                nu += 1;
            }
            out.push((p, nu));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm(a: u32, b: u32) -> u32 {
    (a as u64 / gcd(a as u64, b as u64) * b as u64) as u32
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (m as i64, (a % m) as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1);
    t.rem_euclid(m as i64) as u64
}

/// Non-basis exponents of `Q(ζ_n)`, grouped by the prime that rejects them.
struct BasisInfo {
    /// `(p, exponents whose p-component is not a basis digit)`.
    rejects: Vec<(u32, Vec<u32>)>,
}

impl BasisInfo {
    fn compute(n: u32) -> Self {
        let mut rejects = Vec::new();
        for (p, nu) in factorize(n) {
            let q = p.pow(nu);
            let m = n / q;
            let inv = mod_inverse(m as u64, q as u64);
            let mut bad = Vec::new();
            for i in 0..n {
                let e = (i as u64 * inv % q as u64) as i64;
                let reject = if p == 2 {
                    e >= (q / 2) as i64
                } else {
                    let (pi, half) = (p as i64, (p as i64 - 1) / 2);
                    let mut rest = e;
                    for _ in 0..nu - 1 {
                        let mut d = rest.rem_euclid(pi);
                        if d > half {
                            d -= pi;
                        }
                        rest = (rest - d) / pi;
                    }
                    rest.rem_euclid(pi) == 0
                };
                if reject {
                    bad.push(i);
                }
            }
            rejects.push((p, bad));
        }
        BasisInfo { rejects }
    }
}

const CACHED_CONDUCTORS: usize = 512;

fn with_basis<R>(n: u32, f: impl FnOnce(&BasisInfo) -> R) -> R {
    static CACHE: OnceLock<Vec<OnceLock<BasisInfo>>> = OnceLock::new();
    if (n as usize) < CACHED_CONDUCTORS {
        let cache = CACHE.get_or_init(|| (0..CACHED_CONDUCTORS).map(|_| OnceLock::new()).collect());
        f(cache[n as usize].get_or_init(|| BasisInfo::compute(n)))
    } else {
        f(&BasisInfo::compute(n))
    }
}

/// Rewrites a dense coefficient vector over all powers of `ζ_n` onto the
/// Zumbroich basis, in place.
fn to_basis(n: u32, c: &mut [Rational]) {
    with_basis(n, |info| {
        for (p, bad) in &info.rejects {
            for &i in bad {
                if c[i as usize].is_zero() {
                    continue;
                }
                let v = std::mem::take(&mut c[i as usize]);
                if *p == 2 {
                    let j = ((i + n / 2) % n) as usize;
                    c[j] = &c[j] - &v;
                } else {
                    let step = n / p;
                    for t in 1..*p {
                        let j = ((i + t * step) % n) as usize;
                        c[j] = &c[j] - &v;
                    }
                }
            }
        }
    });
}

/// Moves a basis-form dense vector to the smallest conductor that holds it.
fn reduce_conductor(mut n: u32, mut c: Vec<Rational>) -> (u32, Vec<Rational>) {
    'outer: loop {
        if n == 1 {
            return (n, c);
        }
        if n % 4 == 2 {
            // Basis exponents of Q(ζ_2m), m odd, are exactly the even ones.
            let m = n / 2;
            let mut d = vec![Rational::ZERO; m as usize];
            for (i, v) in c.into_iter().enumerate() {
                if !v.is_zero() {
                    debug_assert!(i % 2 == 0);
                    d[i / 2] = v;
                }
            }
            n = m;
            c = d;
            continue;
        }
        for (p, nu) in factorize(n) {
            if nu >= 2 {
                let divisible = c
                    .iter()
                    .enumerate()
                    .all(|(i, v)| v.is_zero() || (i as u32).is_multiple_of(p));
                if divisible {
                    let m = n / p;
                    let mut d = vec![Rational::ZERO; m as usize];
                    for (i, v) in c.into_iter().enumerate() {
                        if !v.is_zero() {
                            d[i / p as usize] = v;
                        }
                    }
                    n = m;
                    c = d;
                    continue 'outer;
                }
            } else {
                // p odd, p || n: a subfield element has equal coefficients on
                // the p-1 basis exponents of each residue class mod n/p.
                let m = n / p;
                let mut d = vec![Rational::ZERO; m as usize];
                let mut ok = true;
                for r in 0..m {
                    let mut shared: Option<&Rational> = None;
                    let mut zero_slot = 0;
                    for t in 0..p {
                        let i = r + t * m;
                        if i.is_multiple_of(p) {
                            zero_slot = i;
                            continue;
                        }
                        let v = &c[i as usize];
                        match shared {
                            None => shared = Some(v),
                            Some(s) if s == v => {}
                            Some(_) => {
                                ok = false;
                                break;
                            }
                        }
                    }
                    if !ok {
                        break;
                    }
                    if let Some(s) = shared {
                        if !s.is_zero() {
                            d[(zero_slot / p) as usize] = -s;
                        }
                    }
                }
                if ok {
                    n = m;
                    c = d;
                    continue 'outer;
                }
            }
        }
        return (n, c);
    }
}

/// Accumulates `Σ c_k ζ_n^k` over arbitrary (non-basis) exponents.
pub(crate) struct Dense {
    n: u32,
    buf: Vec<Rational>,
}

impl Dense {
    pub(crate) fn new(n: u32) -> Self {
        Dense {
            n,
            buf: vec![Rational::ZERO; n as usize],
        }
    }

    pub(crate) fn add_term(&mut self, exp: u64, c: &Rational) {
        let j = (exp % self.n as u64) as usize;
        self.buf[j] = &self.buf[j] + c;
    }

    /// Adds `a * b`; both conductors must divide `n`.
    pub(crate) fn add_product(&mut self, a: &Cyclotomic, b: &Cyclotomic) {
        let sa = self.n / a.conductor;
        let sb = self.n / b.conductor;
        for (ea, ca) in &a.coeffs {
            for (eb, cb) in &b.coeffs {
                let j = ((ea * sa + eb * sb) % self.n) as usize;
                self.buf[j].add_mul_assign(ca, cb);
            }
        }
    }

    pub(crate) fn add_scaled(&mut self, a: &Cyclotomic, sign_negative: bool) {
        let sa = self.n / a.conductor;
        for (e, c) in &a.coeffs {
            let j = ((e * sa) % self.n) as usize;
            self.buf[j] = if sign_negative {
                &self.buf[j] - c
            } else {
                &self.buf[j] + c
            };
        }
    }

    pub(crate) fn finish(mut self) -> Cyclotomic {
        to_basis(self.n, &mut self.buf);
        let (n, c) = reduce_conductor(self.n, self.buf);
        let coeffs = c
            .into_iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i as u32, v))
            .collect();
        Cyclotomic {
            conductor: n,
            coeffs,
        }
    }
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::ONE)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_int(n))
    }

    pub fn from_rational(r: Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Cyclotomic {
            conductor: 1,
            coeffs: vec![(0, r)],
        }
    }

    /// `ζ_n = exp(2πi/n)`, written `E(n)` in text form.
    pub fn root_of_unity(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "root_of_unity: n must be positive".into(),
            ));
        }
        let mut d = Dense::new(n);
        d.add_term(1 % n as u64, &Rational::ONE);
        Ok(d.finish())
    }

    /// `ζ_n^k` for any integer `k`.
    pub fn root_power(n: u32, k: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "root_power: n must be positive".into(),
            ));
        }
        let mut d = Dense::new(n);
        d.add_term(k.rem_euclid(n as i64) as u64, &Rational::ONE);
        Ok(d.finish())
    }

    pub fn i() -> Self {
        Self::root_of_unity(4).expect("n > 0")
    }

    /// `√2 = ζ_8 − ζ_8³`.
    pub fn sqrt2() -> Self {
        let z8 = Self::root_of_unity(8).expect("n > 0");
        &z8 - &z8.pow(3)
    }

    /// Square root of an integer, the `ER(n)` of the text form. The value is
    /// the nonnegative real root for `n ≥ 0` and `i·√|n|` otherwise.
    pub fn sqrt_int(n: i64) -> Self {
        if n == 0 {
            return Self::zero();
        }
        let mut m = n.unsigned_abs();
        let mut outside = 1i64;
        let mut inside = Self::one();
        let mut p = 2u64;
        while p * p <= m {
            let mut nu = 0;
            while m.is_multiple_of(p) {
                m /= p;
                nu += 1;
            }
            for _ in 0..nu / 2 {
                outside *= p as i64;
            }
            if nu % 2 == 1 {
                inside = &inside * &sqrt_prime(p as u32);
            }
            p += 1;
        }
        if m > 1 {
            inside = &inside * &sqrt_prime(m as u32);
        }
        let mut r = &inside * &Self::from_int(outside);
        if n < 0 {
            r = &r * &Self::i();
        }
        r
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// `(exponent, coefficient)` pairs on the canonical basis of `Q(ζ_conductor)`.
    pub fn coeffs(&self) -> &[(u32, Rational)] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.conductor == 1 && self.coeffs.len() == 1 && self.coeffs[0].1.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match (self.conductor, self.coeffs.as_slice()) {
            (1, []) => Some(Rational::ZERO),
            (1, [(_, r)]) => Some(r.clone()),
            _ => None,
        }
    }

    /// Image under the Galois automorphism `ζ_n ↦ ζ_n^k`, `gcd(k, n) = 1`.
    pub fn galois(&self, k: i64) -> Self {
        let n = self.conductor;
        if n == 1 {
            return self.clone();
        }
        let k = k.rem_euclid(n as i64) as u64;
        debug_assert_eq!(gcd(k, n as u64), 1);
        let mut d = Dense::new(n);
        for (e, c) in &self.coeffs {
            d.add_term(*e as u64 * k, c);
        }
        d.finish()
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// Multiplicative inverse via the norm: `a⁻¹ = Π_{σ≠1} σ(a) / N(a)`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Arithmetic("division by zero".into()));
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(r.recip().expect("nonzero")));
        }
        let n = self.conductor as u64;
        let mut prod = Self::one();
        for k in 2..n {
            if gcd(k, n) == 1 {
                prod = &prod * &self.galois(k as i64);
            }
        }
        let norm = (self * &prod)
            .as_rational()
            .ok_or_else(|| Error::Arithmetic("norm is not rational".into()))?;
        Ok(&prod * &Self::from_rational(norm.recip().expect("nonzero norm")))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, k: i64) -> Self {
        self.checked_pow(k).expect("zero to a negative power")
    }

    pub fn checked_pow(&self, k: i64) -> Result<Self> {
        let mut base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Floating-point value under `ζ_n ↦ exp(2πi/n)`.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        self.coeffs.iter().fold((0.0, 0.0), |(re, im), (e, c)| {
            let theta = 2.0 * std::f64::consts::PI * *e as f64 / n;
            let v = c.to_f64();
            (re + v * theta.cos(), im + v * theta.sin())
        })
    }

    fn combine(a: &Self, b: &Self, negate_b: bool) -> Self {
        let mut d = Dense::new(lcm(a.conductor, b.conductor));
        d.add_scaled(a, false);
        d.add_scaled(b, negate_b);
        d.finish()
    }
}

fn legendre(a: u64, p: u64) -> i64 {
    let mut r = 1u64;
    let mut b = a % p;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    if r == 1 {
        1
    } else if r == 0 {
        0
    } else {
        -1
    }
}

/// `√p` for a prime `p`, via the quadratic Gauss sum for odd `p`.
fn sqrt_prime(p: u32) -> Cyclotomic {
    if p == 2 {
        return Cyclotomic::sqrt2();
    }
    let mut d = Dense::new(p);
    for k in 1..p {
        d.add_term(k as u64, &Rational::from_int(legendre(k as u64, p as u64)));
    }
    let gauss = d.finish();
    if p % 4 == 1 {
        gauss
    } else {
        &gauss * &-Cyclotomic::i()
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        Cyclotomic::combine(self, rhs, false)
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        Cyclotomic::combine(self, rhs, true)
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.is_zero() || rhs.is_zero() {
            return Cyclotomic::zero();
        }
        let mut d = Dense::new(lcm(self.conductor, rhs.conductor));
        d.add_product(self, rhs);
        d.finish()
    }
}

impl<'a> Div<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn div(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::from_int(n)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Cyclotomic::from_rational(r)
    }
}

/// Rationals sort before irrationals and by value among themselves;
/// irrationals sort by conductor and then by their coefficient lists.
impl Ord for Cyclotomic {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.as_rational(), other.as_rational()) {
            (Some(a), Some(b)) => a.cmp(&b),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => self
                .conductor
                .cmp(&other.conductor)
                .then_with(|| self.coeffs.cmp(&other.coeffs)),
        }
    }
}

impl PartialOrd for Cyclotomic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let n = self.conductor;
        for (idx, (e, c)) in self.coeffs.iter().enumerate() {
            let root = match e {
                0 => String::new(),
                1 => format!("E({n})"),
                _ => format!("E({n})^{e}"),
            };
            let term = if root.is_empty() {
                c.to_string()
            } else if c.is_one() {
                root
            } else if (-c).is_one() {
                format!("-{root}")
            } else {
                format!("{c}*{root}")
            };
            if idx > 0 && !term.starts_with('-') {
                write!(f, "+")?;
            }
            write!(f, "{term}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for Cyclotomic {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        super::parse::parse_cyclotomic(s)
    }
}

/// Big integer helper for rational coefficients in parsed text.
pub(crate) fn rational_from_digits(s: &str) -> Option<Rational> {
    let n: BigInt = s.parse().ok()?;
    Some(Rational::from_big(n, BigInt::from(1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32) -> Cyclotomic {
        Cyclotomic::root_of_unity(n).unwrap()
    }

    #[test]
    fn small_roots() {
        assert!(z(1).is_one());
        assert_eq!(z(2), Cyclotomic::from_int(-1));
        assert_eq!(
            &Cyclotomic::i() * &Cyclotomic::i(),
            Cyclotomic::from_int(-1)
        );
        assert_eq!(z(8).pow(4), Cyclotomic::from_int(-1));
        assert!(z(8).pow(8).is_one());
        assert!(matches!(
            Cyclotomic::root_of_unity(0),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn basis_of_three_excludes_one() {
        // 1 = -ζ3 - ζ3² is not stored with exponent 0 once multiplied out.
        let s = &z(3) + &z(3).pow(2);
        assert_eq!(s, Cyclotomic::from_int(-1));
        assert!(s.is_rational());
        assert!((&z(3) * &z(3).pow(2)).is_one());
    }

    #[test]
    fn sqrt2_is_real_and_squares_to_two() {
        let r = Cyclotomic::sqrt2();
        assert_eq!(&r * &r, Cyclotomic::from_int(2));
        assert_eq!(r.conj(), r);
        assert!((&r * &r.inv().unwrap()).is_one());
        let (re, im) = r.to_complex();
        assert!((re - 2f64.sqrt()).abs() < 1e-12 && im.abs() < 1e-12);
        assert_eq!(r.to_string(), "E(8)-E(8)^3");
    }

    #[test]
    fn conjugation_inverts_roots() {
        assert_eq!(Cyclotomic::i().conj(), -Cyclotomic::i());
        assert_eq!(z(8).conj(), z(8).pow(7));
    }

    #[test]
    fn conductor_two_mod_four_is_reduced() {
        let z6 = z(6);
        assert_eq!(z6.conductor(), 3);
        assert_eq!(z6.pow(6), Cyclotomic::one());
        assert_eq!(z6, -z(3).pow(2));
    }

    #[test]
    fn subfield_detection_for_squarefree_prime() {
        // ζ15^5 = ζ3 lives in conductor 3.
        let x = z(15).pow(5);
        assert_eq!(x, z(3));
        assert_eq!(x.conductor(), 3);
        let y = &z(15).pow(3) + &z(15).pow(12);
        assert_eq!(y.conductor(), 5);
    }

    #[test]
    fn integer_square_roots() {
        for n in [-7i64, -3, -1, 2, 3, 5, 6, 12, 50] {
            let r = Cyclotomic::sqrt_int(n);
            assert_eq!(&r * &r, Cyclotomic::from_int(n), "ER({n})");
            if n > 0 {
                let (re, im) = r.to_complex();
                assert!(re > 0.0 && im.abs() < 1e-9, "ER({n}) = {re}+{im}i");
            }
        }
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let e = arith(&z(4), &Cyclotomic::zero(), ArithOp::Div);
        assert!(matches!(e, Err(Error::Arithmetic(_))));
    }
}
