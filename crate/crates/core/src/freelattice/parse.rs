//! Recursive-descent parser for the term syntax.
//!
//! ```text
//! term := sum
//! sum  := prod ('+' prod)*
//! prod := atom (('*')? atom)*      -- juxtaposition is meet
//! atom := generator | '(' term ')'
//! ```
//!
//! A generator token is a lower-case letter followed by digits, so `bc`
//! lexes as the meet of `b` and `c` while `b2` is a single generator.

use super::{Term, TermError, TermStore};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Plus,
    Star,
    LParen,
    RParen,
    Ident(String),
}

pub fn parse_into(store: &mut TermStore, input: &str) -> Result<Term, TermError> {
    let toks = lex(input)?;
    let mut parser = Parser {
        store,
        toks: &toks,
        at: 0,
    };
    let term = parser.sum()?;
    match parser.peek() {
        None => Ok(term),
        Some(_) => Err(TermError::Syntax(parser.pos())),
    }
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, TermError> {
    let bytes = input.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                toks.push((i, Tok::Plus));
                i += 1;
            }
            '*' => {
                toks.push((i, Tok::Star));
                i += 1;
            }
            '(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            'a'..='z' => {
                let start = i;
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                toks.push((start, Tok::Ident(input[start..i].to_string())));
            }
            _ => return Err(TermError::Syntax(i)),
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    store: &'a mut TermStore,
    toks: &'a [(usize, Tok)],
    at: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks
            .get(self.at)
            .or_else(|| self.toks.last())
            .map(|&(p, _)| p)
            .unwrap_or(0)
    }

    fn sum(&mut self) -> Result<Term, TermError> {
        let mut parts = vec![self.prod()?];
        while self.peek() == Some(&Tok::Plus) {
            self.at += 1;
            parts.push(self.prod()?);
        }
        Ok(self.store.join(parts))
    }

    fn prod(&mut self) -> Result<Term, TermError> {
        let mut parts = vec![self.atom()?];
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.at += 1;
                    parts.push(self.atom()?);
                }
                Some(Tok::Ident(_)) | Some(Tok::LParen) => parts.push(self.atom()?),
                _ => break,
            }
        }
        Ok(self.store.meet(parts))
    }

    fn atom(&mut self) -> Result<Term, TermError> {
        match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                self.at += 1;
                self.store.gen(&name)
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let inner = self.sum()?;
                if self.peek() == Some(&Tok::RParen) {
                    self.at += 1;
                    Ok(inner)
                } else {
                    Err(TermError::Syntax(self.pos()))
                }
            }
            _ => Err(TermError::Syntax(self.pos())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::TermStore;
    use super::*;

    #[test]
    fn parses_paper_notation() {
        let mut s = TermStore::new();
        let t = s.parse("a(b+c) + bc").unwrap();
        let explicit = s.parse("(a * (b + c)) + (b * c)").unwrap();
        assert_eq!(t, explicit);
    }

    #[test]
    fn single_generator() {
        let mut s = TermStore::new();
        let x = s.parse("x").unwrap();
        let g = s.gen("x").unwrap();
        assert_eq!(x, g);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let mut s = TermStore::new();
        assert_eq!(s.parse("a + + b"), Err(TermError::Syntax(4)));
        assert!(s.parse("").is_err());
        assert!(s.parse("(a + b").is_err());
        assert!(s.parse("a B").is_err());
    }

    #[test]
    fn subscripted_names_lex_as_one_token() {
        let mut s = TermStore::new();
        let t = s.parse("a1b").unwrap();
        let a1 = s.gen("a1").unwrap();
        let b = s.gen("b").unwrap();
        let expected = s.meet([a1, b]);
        assert_eq!(t, expected);
    }
}
