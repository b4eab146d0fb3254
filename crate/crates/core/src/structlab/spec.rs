use std::fmt;
use std::str::FromStr;

use super::hom::extend_hom;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::permgrp::{GroupTable, Perm, PermGroup};

/// A reference group, written `wreath(cyclic(2), alternating(5))` and so on.
///
/// Dihedral groups are named by their order: `dihedral(12)` has 12 elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u32),
    Dihedral(u32),
    Symmetric(u32),
    Alternating(u32),
    Quaternion8,
    /// `SL(2,3)` acting on the eight nonzero vectors of `F₃²`.
    Sl23,
    Direct(Vec<GroupSpec>),
    /// `semidirect(N, H, [[w, …], …])`: row `j` lists, for the `j`-th generator
    /// of `H`, the images of `N`'s generators as words in `a1, a2, …`.
    Semidirect(Box<GroupSpec>, Box<GroupSpec>, Vec<Vec<String>>),
    /// `wreath(M, H)`: `Mᵏ ⋊ H` for `H` acting on `k` points.
    Wreath(Box<GroupSpec>, Box<GroupSpec>),
}

fn grp(n: usize, gens: &[&str]) -> PermGroup {
    let gens = gens
        .iter()
        .map(|s| Perm::parse(s, n).expect("valid cycle"))
        .collect();
    PermGroup::new(n, gens).expect("degrees agree")
}

fn cycle(n: u32, from: u32) -> String {
    let pts: Vec<String> = (from..=n).map(|p| p.to_string()).collect();
    format!("({})", pts.join(","))
}

impl GroupSpec {
    /// The permutation group this spec names.
    pub fn construct(&self) -> Result<PermGroup> {
        let bad = |m: String| Err(Error::InvalidArgument(m));
        Ok(match self {
            GroupSpec::Cyclic(0) => return bad("cyclic(0) is undefined".into()),
            GroupSpec::Cyclic(1) => PermGroup::trivial(1),
            GroupSpec::Cyclic(n) => grp(*n as usize, &[&cycle(*n, 1)]),
            GroupSpec::Dihedral(o) if *o == 0 || o % 2 == 1 => {
                return bad(format!("dihedral order must be even, got {o}"))
            }
            GroupSpec::Dihedral(2) => grp(2, &["(1,2)"]),
            GroupSpec::Dihedral(4) => grp(4, &["(1,2)(3,4)", "(1,3)(2,4)"]),
            GroupSpec::Dihedral(o) => {
                let m = o / 2;
                let refl: String = (1..=m / 2)
                    .map(|i| format!("({},{})", i, m + 1 - i))
                    .collect();
                grp(m as usize, &[&cycle(m, 1), &refl])
            }
            GroupSpec::Symmetric(0) => return bad("symmetric(0) is undefined".into()),
            GroupSpec::Symmetric(1) => PermGroup::trivial(1),
            GroupSpec::Symmetric(2) => grp(2, &["(1,2)"]),
            GroupSpec::Symmetric(n) => grp(*n as usize, &["(1,2)", &cycle(*n, 1)]),
            GroupSpec::Alternating(0) => return bad("alternating(0) is undefined".into()),
            GroupSpec::Alternating(n) if *n <= 2 => PermGroup::trivial(*n as usize),
            GroupSpec::Alternating(3) => grp(3, &["(1,2,3)"]),
            GroupSpec::Alternating(n) => {
                let long = if n % 2 == 1 {
                    cycle(*n, 1)
                } else {
                    cycle(*n, 2)
                };
                grp(*n as usize, &["(1,2,3)", &long])
            }
            GroupSpec::Quaternion8 => grp(8, &["(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"]),
            GroupSpec::Sl23 => sl23(),
            GroupSpec::Direct(parts) => {
                let groups = parts
                    .iter()
                    .map(|p| p.construct())
                    .collect::<Result<Vec<_>>>()?;
                direct_product(&groups)
            }
            GroupSpec::Semidirect(n, h, action) => {
                semidirect(&n.construct()?, &h.construct()?, action)?
            }
            GroupSpec::Wreath(m, h) => wreath(&m.construct()?, &h.construct()?),
        })
    }

    /// Order predicted by the kind's formula, from constructed factors.
    pub fn expected_order(&self) -> Result<u128> {
        Ok(match self {
            GroupSpec::Cyclic(n) | GroupSpec::Dihedral(n) => *n as u128,
            GroupSpec::Symmetric(n) => (1..=*n as u128).product(),
            GroupSpec::Alternating(n) => ((1..=*n as u128).product::<u128>() / 2).max(1),
            GroupSpec::Quaternion8 => 8,
            GroupSpec::Sl23 => 24,
            GroupSpec::Direct(parts) => parts
                .iter()
                .map(|p| p.expected_order())
                .product::<Result<u128>>()?,
            GroupSpec::Semidirect(n, h, _) => n.expected_order()? * h.expected_order()?,
            GroupSpec::Wreath(m, h) => {
                let k = h.construct()?.degree() as u32;
                m.expected_order()?.pow(k) * h.expected_order()?
            }
        })
    }
}

fn sl23() -> PermGroup {
    // Nonzero vectors (x, y) of F₃², numbered 1..8 in the order below.
    let pts: Vec<(u32, u32)> = (0..3)
        .flat_map(|x| (0..3).map(move |y| (x, y)))
        .filter(|&v| v != (0, 0))
        .collect();
    let act = |m: [[u32; 2]; 2]| -> Perm {
        let img = pts
            .iter()
            .map(|&(x, y)| {
                let w = (
                    (x * m[0][0] + y * m[1][0]) % 3,
                    (x * m[0][1] + y * m[1][1]) % 3,
                );
                pts.iter().position(|&p| p == w).expect("nonzero image") as u32
            })
            .collect();
        Perm::from_images(img).expect("invertible matrix")
    };
    PermGroup::new(8, vec![act([[1, 1], [0, 1]]), act([[1, 0], [1, 1]])]).expect("degree 8")
}

/// Direct product acting on the disjoint union of the factors' points.
pub fn direct_product(groups: &[PermGroup]) -> PermGroup {
    let degree: usize = groups.iter().map(PermGroup::degree).sum();
    let mut gens = Vec::new();
    let mut offset = 0u32;
    for g in groups {
        for x in g.gens() {
            let mut img: Vec<u32> = (0..degree as u32).collect();
            for (p, &q) in x.images().iter().enumerate() {
                img[offset as usize + p] = offset + q;
            }
            gens.push(Perm::from_images(img).expect("shifted bijection"));
        }
        offset += g.degree() as u32;
    }
    PermGroup::new(degree.max(1), gens).expect("degrees agree")
}

/// `M ≀ H` in its imprimitive action: `k` blocks of `M`'s points, permuted by `H`.
pub fn wreath(m: &PermGroup, h: &PermGroup) -> PermGroup {
    let (dm, k) = (m.degree(), h.degree());
    let degree = dm * k;
    let mut gens = Vec::new();
    for b in 0..k {
        for x in m.gens() {
            let mut img: Vec<u32> = (0..degree as u32).collect();
            for (p, &q) in x.images().iter().enumerate() {
                img[b * dm + p] = (b * dm) as u32 + q;
            }
            gens.push(Perm::from_images(img).expect("block bijection"));
        }
    }
    for y in h.gens() {
        let img = (0..degree)
            .map(|p| (y.apply((p / dm) as u32) as usize * dm + p % dm) as u32)
            .collect();
        gens.push(Perm::from_images(img).expect("block permutation"));
    }
    PermGroup::new(degree, gens).expect("degrees agree")
}

/// Evaluates a word like `a1*a2^-1` over the generators of `t`.
fn eval_word(t: &GroupTable, gens: &[usize], word: &str) -> Result<usize> {
    let bad = || Error::InvalidArgument(format!("bad word {word:?}"));
    let mut acc = 0;
    for factor in word.split('*').map(str::trim) {
        if factor == "1" {
            continue;
        }
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => (
                n.trim(),
                e.trim()
                    .trim_matches(|c| c == '(' || c == ')')
                    .parse::<i64>()
                    .map_err(|_| bad())?,
            ),
            None => (factor, 1),
        };
        let k: usize = name
            .strip_prefix('a')
            .and_then(|s| s.parse().ok())
            .ok_or_else(bad)?;
        let g = *gens.get(k.wrapping_sub(1)).ok_or_else(bad)?;
        let g = if exp < 0 { t.inv(g) } else { g };
        acc = t.mul(acc, t.pow(g, exp.unsigned_abs() as usize));
    }
    Ok(acc)
}

/// `N ⋊ H` in its regular representation on pairs `(h, n)`.
///
/// Point `(h, n)` goes to `(h, n·a)` under `a ∈ N` and to `(h·g, n^g)` under
/// a generator `g` of `H`, where `n^g` is the given automorphism. The action
/// is accepted only if each map is an automorphism of `N` and the generated
/// group has order `|N|·|H|`.
pub fn semidirect(n: &PermGroup, h: &PermGroup, action: &[Vec<String>]) -> Result<PermGroup> {
    let limit = Limits::default().enumeration;
    let tn = GroupTable::new(n, limit)?;
    let th = GroupTable::new(h, limit)?;
    let ngens = tn.gens();
    let hgens = th.gens();
    if action.len() != hgens.len() {
        return Err(Error::InvalidArgument(format!(
            "action lists {} maps but H has {} generators",
            action.len(),
            hgens.len()
        )));
    }
    let (nn, nh) = (tn.len(), th.len());
    let degree = nn * nh;
    let mut gens = Vec::new();
    for &a in &ngens {
        let img = (0..degree)
            .map(|p| ((p / nn) * nn + tn.mul(p % nn, a)) as u32)
            .collect();
        gens.push(Perm::from_images_unchecked(img));
    }
    for (row, &g) in action.iter().zip(&hgens) {
        if row.len() != ngens.len() {
            return Err(Error::InvalidArgument(format!(
                "each action row needs {} images, got {}",
                ngens.len(),
                row.len()
            )));
        }
        let imgs = row
            .iter()
            .map(|w| eval_word(&tn, &ngens, w))
            .collect::<Result<Vec<_>>>()?;
        let phi = extend_hom(&tn, &ngens, &tn, &imgs)
            .filter(|m| {
                let mut seen = vec![false; nn];
                m.iter()
                    .all(|&y| !std::mem::replace(&mut seen[y as usize], true))
            })
            .ok_or_else(|| {
                Error::InvalidArgument("action map is not an automorphism of N".into())
            })?;
        let img = (0..degree)
            .map(|p| (th.mul(p / nn, g) * nn + phi[p % nn] as usize) as u32)
            .collect();
        gens.push(Perm::from_images_unchecked(img));
    }
    let g = PermGroup::new(degree, gens)?;
    if g.order() != (nn * nh) as u128 {
        return Err(Error::InvalidArgument(
            "action maps do not define a homomorphism H → Aut(N)".into(),
        ));
    }
    Ok(g)
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic({n})"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral({n})"),
            GroupSpec::Symmetric(n) => write!(f, "symmetric({n})"),
            GroupSpec::Alternating(n) => write!(f, "alternating({n})"),
            GroupSpec::Quaternion8 => write!(f, "quaternion8"),
            GroupSpec::Sl23 => write!(f, "sl23"),
            GroupSpec::Direct(parts) => {
                let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "direct({})", s.join(", "))
            }
            GroupSpec::Semidirect(n, h, act) => {
                let rows: Vec<String> = act.iter().map(|r| format!("[{}]", r.join(", "))).collect();
                write!(f, "semidirect({n}, {h}, [{}])", rows.join(", "))
            }
            GroupSpec::Wreath(m, h) => write!(f, "wreath({m}, {h})"),
        }
    }
}

struct Parser<'a> {
    s: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            line: 0,
            msg: format!("{msg} at column {} of {:?}", self.pos + 1, self.s),
        }
    }

    fn ws(&mut self) {
        while self.s[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.s[self.pos..].chars().next().map_or(1, char::len_utf8);
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.ws();
        if self.s[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{c}'")))
        }
    }

    fn ident(&mut self) -> Result<&'a str> {
        self.ws();
        let start = self.pos;
        let rest = &self.s[start..];
        let len = rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(rest.len());
        if len == 0 {
            return Err(self.err("expected a name"));
        }
        self.pos += len;
        Ok(&self.s[start..start + len])
    }

    fn number(&mut self) -> Result<u32> {
        let t = self.ident()?;
        t.parse()
            .map_err(|_| self.err(&format!("expected a number, got {t:?}")))
    }

    /// A bracketed word list `[w, w, …]`; words run up to `,` or `]`.
    fn word_list(&mut self) -> Result<Vec<String>> {
        self.expect('[')?;
        let mut out = Vec::new();
        loop {
            self.ws();
            let rest = &self.s[self.pos..];
            let end = rest
                .find([',', ']'])
                .ok_or_else(|| self.err("unclosed '['"))?;
            let w = rest[..end].trim();
            if !w.is_empty() {
                out.push(w.to_string());
            }
            self.pos += end;
            if self.eat(']') {
                return Ok(out);
            }
            self.expect(',')?;
        }
    }

    fn spec(&mut self) -> Result<GroupSpec> {
        let name = self.ident()?;
        let spec = match name {
            "quaternion8" | "sl23" => {
                if self.eat('(') {
                    self.expect(')')?;
                }
                return Ok(if name == "sl23" {
                    GroupSpec::Sl23
                } else {
                    GroupSpec::Quaternion8
                });
            }
            "cyclic" | "dihedral" | "symmetric" | "alternating" => {
                self.expect('(')?;
                let n = self.number()?;
                match name {
                    "cyclic" => GroupSpec::Cyclic(n),
                    "dihedral" => GroupSpec::Dihedral(n),
                    "symmetric" => GroupSpec::Symmetric(n),
                    _ => GroupSpec::Alternating(n),
                }
            }
            "direct" => {
                self.expect('(')?;
                let mut parts = vec![self.spec()?];
                while self.eat(',') {
                    parts.push(self.spec()?);
                }
                GroupSpec::Direct(parts)
            }
            "wreath" => {
                self.expect('(')?;
                let m = self.spec()?;
                self.expect(',')?;
                let h = self.spec()?;
                GroupSpec::Wreath(Box::new(m), Box::new(h))
            }
            "semidirect" => {
                self.expect('(')?;
                let n = self.spec()?;
                self.expect(',')?;
                let h = self.spec()?;
                self.expect(',')?;
                self.expect('[')?;
                let mut rows = Vec::new();
                self.ws();
                if !self.eat(']') {
                    loop {
                        rows.push(self.word_list()?);
                        if self.eat(']') {
                            break;
                        }
                        self.expect(',')?;
                    }
                }
                GroupSpec::Semidirect(Box::new(n), Box::new(h), rows)
            }
            other => return Err(self.err(&format!("unknown group kind {other:?}"))),
        };
        self.expect(')')?;
        Ok(spec)
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { s, pos: 0 };
        let spec = p.spec()?;
        p.ws();
        if p.pos != s.len() {
            return Err(p.err("trailing input"));
        }
        Ok(spec)
    }
}

/// Parses and constructs in one step.
pub fn construct(spec: &str) -> Result<PermGroup> {
    spec.parse::<GroupSpec>()?.construct()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_match_formulas() {
        for s in [
            "cyclic(1)",
            "cyclic(6)",
            "dihedral(2)",
            "dihedral(4)",
            "dihedral(12)",
            "symmetric(4)",
            "alternating(4)",
            "alternating(5)",
            "alternating(6)",
            "quaternion8",
            "sl23",
            "direct(cyclic(2), symmetric(3))",
            "wreath(cyclic(2), symmetric(5))",
            "wreath(cyclic(2), alternating(5))",
            "semidirect(cyclic(3), cyclic(2), [[a1^2]])",
        ] {
            let spec: GroupSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            assert_eq!(
                spec.construct().unwrap().order(),
                spec.expected_order().unwrap(),
                "{s}"
            );
        }
        assert_eq!(
            construct("wreath(cyclic(2), symmetric(5))")
                .unwrap()
                .order(),
            3840
        );
        assert_eq!(
            construct("wreath(cyclic(2), alternating(5))")
                .unwrap()
                .order(),
            1920
        );
    }

    #[test]
    fn sl23_has_one_involution() {
        let g = construct("sl23").unwrap();
        let t = GroupTable::new(&g, 100).unwrap();
        assert_eq!(t.len(), 24);
        assert_eq!((0..24).filter(|&i| t.order_of(i) == 2).count(), 1);
    }

    #[test]
    fn bad_specs() {
        assert!("cyclic(".parse::<GroupSpec>().is_err());
        assert!("frobenius(20)".parse::<GroupSpec>().is_err());
        assert!("cyclic(3) x".parse::<GroupSpec>().is_err());
        assert!(construct("dihedral(7)").is_err());
        // a1 -> a1^2 is not an automorphism of Z4.
        assert!(construct("semidirect(cyclic(4), cyclic(2), [[a1^2]])").is_err());
        // An order-2 automorphism cannot come from a generator of Z3.
        assert!(construct("semidirect(cyclic(3), cyclic(3), [[a1^2]])").is_err());
    }
}
