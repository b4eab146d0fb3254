//! Text syntax for cyclotomic numbers: `E(n)` is `ζ_n`, `ER(n)` is `√n`,
//! integers and `p/q` are rationals, combined with `+ - * / ^` and parentheses.

use super::cyclotomic::{rational_from_digits, Cyclotomic};
use crate::error::{Error, Result};

pub fn parse_cyclotomic(s: &str) -> Result<Cyclotomic> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse {
            line: 0,
            msg: format!(
                "{msg} at column {} in {:?}",
                self.pos + 1,
                String::from_utf8_lossy(self.src)
            ),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn digits(&mut self) -> Result<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn small_int(&mut self) -> Result<i64> {
        let neg = self.eat(b'-');
        let d = self.digits()?;
        let v: i64 = d.parse().map_err(|_| self.error("integer out of range"))?;
        Ok(if neg { -v } else { v })
    }

    fn expr(&mut self) -> Result<Cyclotomic> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Cyclotomic> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.eat(b'/') {
                let rhs = self.unary()?;
                acc = acc.checked_div(&rhs)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Cyclotomic> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Cyclotomic> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let k = if self.eat(b'(') {
                let k = self.small_int()?;
                self.expect(b')')?;
                k
            } else {
                self.small_int()?
            };
            return base.checked_pow(k);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Cyclotomic> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits()?.to_string();
                let r = rational_from_digits(&d).ok_or_else(|| self.error("bad integer"))?;
                Ok(Cyclotomic::from_rational(r))
            }
            Some(b'E') => {
                self.pos += 1;
                let sqrt = self.src.get(self.pos) == Some(&b'R');
                if sqrt {
                    self.pos += 1;
                }
                self.expect(b'(')?;
                let n = self.small_int()?;
                self.expect(b')')?;
                if sqrt {
                    Ok(Cyclotomic::sqrt_int(n))
                } else {
                    let n = u32::try_from(n).map_err(|_| self.error("E(n) needs 0 < n < 2^32"))?;
                    Cyclotomic::root_of_unity(n)
                }
            }
            _ => Err(self.error("unexpected token")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gap_style_inputs() {
        let r2 = parse_cyclotomic("ER(2)").unwrap();
        assert_eq!(r2, Cyclotomic::sqrt2());
        assert_eq!(
            parse_cyclotomic("E(4)^2").unwrap(),
            Cyclotomic::from_int(-1)
        );
        assert_eq!(
            parse_cyclotomic(" 1/2 * ( 1 + E(4) ) ")
                .unwrap()
                .to_string(),
            "1/2+1/2*E(4)"
        );
        assert_eq!(
            parse_cyclotomic("E(8)^-1").unwrap(),
            parse_cyclotomic("E(8)^7").unwrap()
        );
        assert!(parse_cyclotomic("1/0").is_err());
        assert!(parse_cyclotomic("E(4").is_err());
        assert!(parse_cyclotomic("2 3").is_err());
    }

    #[test]
    fn printed_form_round_trips() {
        for s in [
            "0",
            "-3/7",
            "E(8)-E(8)^3",
            "-1/2*E(3)+5*E(3)^2",
            "E(5)+E(5)^4",
        ] {
            let v = parse_cyclotomic(s).unwrap();
            assert_eq!(parse_cyclotomic(&v.to_string()).unwrap(), v, "{s}");
        }
    }
}
