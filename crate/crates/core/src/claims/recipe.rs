//! Recipe expressions: `order(c2)`, `iso(quotient(b2, p2), direct(cyclic(2), symmetric(5)))`.

use std::fmt;

use crate::error::{Error, Result};
use crate::structlab::GroupSpec;

const SPEC_HEADS: [&str; 9] = [
    "cyclic",
    "dihedral",
    "symmetric",
    "alternating",
    "quaternion8",
    "sl23",
    "direct",
    "semidirect",
    "wreath",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Int(u64),
    Name(String),
    Call(String, Vec<Term>),
    Spec(GroupSpec),
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Int(n) => write!(f, "{n}"),
            Term::Name(s) => write!(f, "{s}"),
            Term::Spec(s) => write!(f, "{s}"),
            Term::Call(h, args) => {
                let a: Vec<String> = args.iter().map(Term::to_string).collect();
                write!(f, "{h}({})", a.join(", "))
            }
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::InvalidArgument(format!(
            "recipe {:?}: {msg} at offset {}",
            self.src, self.pos
        ))
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.src[self.pos..]
                .chars()
                .next()
                .map_or(1, char::len_utf8);
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.err(&format!("expected {c:?}")))
        }
    }

    fn word(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let len = rest
            .find(|c: char| !(c.is_alphanumeric() || c == '_'))
            .unwrap_or(rest.len());
        self.pos += len;
        &self.src[start..start + len]
    }

    /// End offset of the balanced parenthesised group starting at `self.pos`.
    fn balanced_end(&self) -> Result<usize> {
        let mut depth = 0i32;
        for (i, c) in self.src[self.pos..].char_indices() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth == 0 {
                        return Ok(self.pos + i + 1);
                    }
                }
                _ => {}
            }
        }
        Err(self.err("unbalanced parentheses"))
    }

    fn term(&mut self) -> Result<Term> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let w = self.word().to_string();
        if w.is_empty() {
            return Err(self.err("expected a name or number"));
        }
        if w.chars().all(|c| c.is_ascii_digit()) {
            return w
                .parse()
                .map(Term::Int)
                .map_err(|_| self.err("number too large"));
        }
        let has_args = self.peek() == Some('(');
        if SPEC_HEADS.contains(&w.as_str()) {
            let end = if has_args {
                self.balanced_end()?
            } else {
                self.pos
            };
            let text = &self.src[start..end];
            self.pos = end;
            return text.parse::<GroupSpec>().map(Term::Spec);
        }
        if !has_args {
            return Ok(Term::Name(w));
        }
        self.eat('(')?;
        let mut args = Vec::new();
        if self.peek() != Some(')') {
            loop {
                args.push(self.term()?);
                if self.peek() == Some(',') {
                    self.eat(',')?;
                } else {
                    break;
                }
            }
        }
        self.eat(')')?;
        Ok(Term::Call(w, args))
    }
}

pub fn parse_recipe(src: &str) -> Result<Term> {
    let mut p = Parser { src, pos: 0 };
    let t = p.term()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(t)
}
