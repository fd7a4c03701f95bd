//! Text syntax for words and relations.
//!
//! ```text
//! relation := word ( '=' word )?
//! word     := factor ( ('*' | whitespace) factor )*
//! factor   := atom ( '^' integer )?
//! atom     := name | '1' | '(' word ')' | '[' word ',' word ']'
//! name     := [A-Za-z] [A-Za-z0-9_']*
//! ```
//!
//! `[u,v]` is `u*v*u^-1*v^-1`. A relation `u = v` denotes the relator `u*v^-1`.

use super::word::{free_reduce, Letter, Word};
use crate::error::{Error, Result};

const MAX_DEPTH: usize = 128;
const MAX_LEN: usize = 1 << 20;

pub fn parse_word(s: &str) -> Result<Word> {
    let mut p = Parser { src: s.as_bytes(), pos: 0, depth: 0 };
    p.skip_ws();
    if p.at_end() {
        return Ok(Word::identity());
    }
    let w = p.word()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(w)
}

/// Parses `u` or `u = v`, returning the relator `u*v^-1`.
pub fn parse_relation(s: &str) -> Result<Word> {
    let mut p = Parser { src: s.as_bytes(), pos: 0, depth: 0 };
    p.skip_ws();
    let lhs = if p.peek() == Some(b'=') { Word::identity() } else { p.word()? };
    p.skip_ws();
    let out = if p.peek() == Some(b'=') {
        p.pos += 1;
        p.skip_ws();
        let rhs = p.word()?;
        lhs.mul(&rhs.inverse())
    } else {
        lhs
    };
    p.skip_ws();
    if !p.at_end() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

pub fn is_valid_name(s: &str) -> bool {
    let b = s.as_bytes();
    !b.is_empty() && b[0].is_ascii_alphabetic() && b[1..].iter().all(|&c| is_name_byte(c))
}

fn is_name_byte(c: u8) -> bool {
    c.is_ascii_alphanumeric() || c == b'_' || c == b'\''
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    depth: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn word(&mut self) -> Result<Word> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.err("nesting too deep"));
        }
        let mut acc = self.factor()?;
        loop {
            let save = self.pos;
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    self.skip_ws();
                }
                Some(c) if c.is_ascii_alphabetic() || c == b'(' || c == b'[' || c == b'1' => {
                    // whitespace-separated juxtaposition
                    if save == self.pos {
                        return Err(self.err("expected '*' between factors"));
                    }
                }
                _ => {
                    self.pos = save;
                    break;
                }
            }
            let f = self.factor()?;
            if acc.len() + f.len() > MAX_LEN {
                return Err(self.err("word too long"));
            }
            acc = acc.mul(&f);
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Word> {
        let base = self.atom()?;
        let save = self.pos;
        self.skip_ws();
        if self.peek() != Some(b'^') {
            self.pos = save;
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let k = self.integer()?;
        if base.syllables() == 1 {
            let l = &base.letters()[0];
            let exp = l.exp.checked_mul(k).ok_or_else(|| self.err("exponent overflow"))?;
            return Ok(free_reduce([Letter::new(l.gen.clone(), exp)]));
        }
        if (base.len() as u128) * (k.unsigned_abs() as u128) > MAX_LEN as u128 {
            return Err(self.err("word too long"));
        }
        Ok(base.pow(k))
    }

    fn atom(&mut self) -> Result<Word> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                self.skip_ws();
                let w = if self.peek() == Some(b')') { Word::identity() } else { self.word()? };
                self.skip_ws();
                self.expect(b')')?;
                Ok(w)
            }
            Some(b'[') => {
                self.pos += 1;
                self.skip_ws();
                let u = self.word()?;
                self.skip_ws();
                self.expect(b',')?;
                self.skip_ws();
                let v = self.word()?;
                self.skip_ws();
                self.expect(b']')?;
                if 2 * (u.len() + v.len()) > MAX_LEN {
                    return Err(self.err("word too long"));
                }
                Ok(Word::commutator(&u, &v))
            }
            Some(b'1') => {
                self.pos += 1;
                if self.peek().is_some_and(is_name_byte) {
                    return Err(self.err("names must start with a letter"));
                }
                Ok(Word::identity())
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.peek().is_some_and(is_name_byte) {
                    self.pos += 1;
                }
                // ASCII only, so this slice is valid UTF-8.
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Ok(Word::gen(name))
            }
            _ => Err(self.err("expected a generator, '1', '(' or '['")),
        }
    }

    fn integer(&mut self) -> Result<i64> {
        let start = self.pos;
        if matches!(self.peek(), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits {
            return Err(self.err("expected an integer exponent"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse::<i64>()
            .map_err(|_| self.err("exponent out of range"))
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sugar() {
        assert_eq!(parse_word("[a^-1,d]").unwrap().to_string(), "a^-1*d*a*d^-1");
        assert_eq!(parse_word("d*a*d^-1").unwrap().to_string(), "d*a*d^-1");
        assert_eq!(parse_word("(x y)^2").unwrap().to_string(), "x*y*x*y");
        assert_eq!(parse_word("a'*b'").unwrap().to_string(), "a'*b'");
        assert!(parse_word("1").unwrap().is_identity());
        assert!(parse_word("").unwrap().is_identity());
    }

    #[test]
    fn relations() {
        let r = parse_relation("d*a*d^-1 = [d,b^-1]").unwrap();
        assert_eq!(r, parse_word("d*a*d^-1*[d,b^-1]^-1").unwrap());
        assert_eq!(parse_relation("b = [a^-1,d]^2").unwrap().len(), 9);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_word("a**b").is_err());
        assert!(parse_word("[a,b").is_err());
        assert!(parse_word("a^").is_err());
        assert!(parse_word("1a").is_err());
        assert!(parse_word("ab)").is_err());
        assert!(parse_word(&"(".repeat(1000)).is_err());
        assert!(parse_word("(a*b)^99999999999").is_err());
    }
}
