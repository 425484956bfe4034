//! Text descriptors for `GL2(F_q)` representations.
//!
//! ```text
//! sum   := term ('+' term)*
//! term  := [N '*'] atom
//! atom  := triv | sgn | st | st*sgn | st(j) | lin(j)
//!        | ps(1,sgn) | ps(j1,j2) | pschi(j) | cusp(u)
//!        | S(lin(j)) | S(st(j)) | S(ps(j1,j2)) | S(cusp(u))
//!        | regular
//! ```
//!
//! Bare atoms must be orthogonal; `S(...)` must wrap a non-orthogonal one.

use num_bigint::BigUint;

use super::{FieldParam, Irrep, Oir, OrthRep};
use crate::error::{Error, Result};

pub fn parse_descriptor(field: FieldParam, input: &str) -> Result<OrthRep> {
    let mut p = Parser {
        field,
        src: input,
        pos: 0,
    };
    let rep = p.sum()?;
    p.skip_ws();
    if p.pos != input.len() {
        return Err(Error::parse(
            p.pos,
            format!("unexpected '{}'", p.rest_token()),
        ));
    }
    Ok(rep)
}

struct Parser<'a> {
    field: FieldParam,
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn rest_token(&self) -> &'a str {
        let rest = &self.src[self.pos..];
        let end = rest
            .find(|c: char| c.is_whitespace() || "+*(),".contains(c))
            .unwrap_or(rest.len());
        if end == 0 {
            &rest[..rest.chars().next().map_or(0, char::len_utf8)]
        } else {
            &rest[..end]
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
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
            let found = if self.pos >= self.src.len() {
                "end of input".to_string()
            } else {
                format!("'{}'", self.rest_token())
            };
            Err(Error::parse(
                self.pos,
                format!("expected '{c}', found {found}"),
            ))
        }
    }

    fn word(&mut self) -> Result<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
        {
            self.pos += 1;
        }
        if start == self.pos {
            let found = if start >= self.src.len() {
                "end of input".to_string()
            } else {
                format!("'{}'", self.rest_token())
            };
            return Err(Error::parse(
                start,
                format!("expected a representation, found {found}"),
            ));
        }
        Ok((start, &self.src[start..self.pos]))
    }

    fn number(&mut self) -> Result<u64> {
        let (at, w) = self.word()?;
        w.parse()
            .map_err(|_| Error::parse(at, format!("expected a number, found '{w}'")))
    }

    fn sum(&mut self) -> Result<OrthRep> {
        let mut acc = self.term()?;
        while self.eat('+') {
            acc = acc.add(&self.term()?)?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<OrthRep> {
        self.skip_ws();
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let n = self.number()?;
            self.expect('*')?;
            let rep = self.atom()?;
            return Ok(rep.scale(&BigUint::from(n)));
        }
        self.atom()
    }

    fn single(&self, oir: Oir) -> OrthRep {
        OrthRep::single(self.field, oir)
    }

    fn atom(&mut self) -> Result<OrthRep> {
        let f = self.field;
        let (at, name) = self.word()?;
        match name {
            "triv" => Ok(self.single(Oir::Orth(f.linear(0)))),
            "sgn" => Ok(self.single(Oir::Orth(f.linear(f.sgn_index())))),
            "regular" => Ok(OrthRep::regular(f)),
            "st" => {
                self.skip_ws();
                if self.peek() == Some('*') {
                    let save = self.pos;
                    self.pos += 1;
                    match self.word() {
                        Ok((_, "sgn")) => {
                            return Ok(self.single(Oir::Orth(f.steinberg(f.sgn_index()))))
                        }
                        _ => self.pos = save,
                    }
                }
                if self.peek() == Some('(') {
                    self.pos = at;
                    let irrep = self.irrep()?;
                    return Ok(self.single(f.orth(irrep)?));
                }
                Ok(self.single(Oir::Orth(f.steinberg(0))))
            }
            "pschi" => {
                self.expect('(')?;
                let j = self.number()?;
                self.expect(')')?;
                let n = f.n();
                let irrep = f.principal(j, (n - j % n) % n)?;
                Ok(self.single(f.orth(irrep)?))
            }
            "S" => {
                self.expect('(')?;
                let irrep = self.irrep()?;
                self.expect(')')?;
                Ok(self.single(f.sym(irrep)?))
            }
            "lin" | "ps" | "cusp" => {
                self.pos = at;
                let irrep = self.irrep()?;
                Ok(self.single(f.orth(irrep)?))
            }
            other => Err(Error::parse(
                at,
                format!("unknown representation '{other}'"),
            )),
        }
    }

    /// `lin(j)`, `st(j)`, `ps(j1,j2)`, `ps(1,sgn)` or `cusp(u)`.
    fn irrep(&mut self) -> Result<Irrep> {
        let f = self.field;
        let (at, name) = self.word()?;
        self.expect('(')?;
        let irrep = match name {
            "lin" => f.linear(self.number()?),
            "st" => f.steinberg(self.number()?),
            "cusp" => f.cuspidal(self.number()?)?,
            "ps" => {
                let (aat, a) = self.word()?;
                self.expect(',')?;
                let (bat, b) = self.word()?;
                let index = |w: &str, pos: usize| -> Result<u64> {
                    w.parse()
                        .map_err(|_| Error::parse(pos, format!("expected a number, found '{w}'")))
                };
                match (a, b) {
                    ("1" | "triv", "sgn") => f.principal(0, f.sgn_index())?,
                    _ => f.principal(index(a, aat)?, index(b, bat)?)?,
                }
            }
            other => {
                return Err(Error::parse(at, format!("unknown irreducible '{other}'")));
            }
        };
        self.expect(')')?;
        Ok(irrep)
    }
}
