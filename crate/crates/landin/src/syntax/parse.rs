use std::rc::Rc;

use thiserror::Error;

use super::term::{name, ExtTerm, Name, Pattern, Term};

const MAX_DEPTH: usize = 512;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Open,
    Close,
    Int(i64),
    Ident(String),
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b'(' | b'[' => {
                out.push((i, Tok::Open));
                i += 1;
            }
            b')' | b']' => {
                out.push((i, Tok::Close));
                i += 1;
            }
            b';' => {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
            }
            _ if c.is_ascii_whitespace() => i += 1,
            _ => {
                let start = i;
                while i < bytes.len() {
                    let d = bytes[i];
                    if d.is_ascii_whitespace() || matches!(d, b'(' | b')' | b'[' | b']' | b';') {
                        break;
                    }
                    i += 1;
                }
                let text = &src[start..i];
                let is_num = text.bytes().enumerate().all(|(k, b)| {
                    b.is_ascii_digit() || (k == 0 && b == b'-' && text.len() > 1)
                });
                if is_num {
                    let n = text.parse::<i64>().map_err(|_| ParseError {
                        offset: start,
                        message: format!("integer literal `{text}` out of range"),
                    })?;
                    out.push((start, Tok::Int(n)));
                } else {
                    out.push((start, Tok::Ident(text.to_string())));
                }
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    depth: usize,
}

const TERM_KEYWORDS: &[&str] = &["lam", "let"];
const EXT_KEYWORDS: &[&str] = &[
    "lam", "let", "shift1", "reset1", "shift2", "reset2", "C1", "C2", "callcc", "pair", "inl",
    "inr", "case", "letp",
];

impl Parser {
    fn new(src: &str) -> Result<Parser, ParseError> {
        Ok(Parser {
            toks: tokenize(src)?,
            pos: 0,
            end: src.len(),
            depth: 0,
        })
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect_close(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            Some(Tok::Close) => {
                self.pos += 1;
                Ok(())
            }
            Some(_) => self.err("expected `)`"),
            None => self.err("unexpected end of input, expected `)`"),
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        if self.pos < self.toks.len() {
            self.err("trailing input after term")
        } else {
            Ok(())
        }
    }

    fn enter(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return self.err("term nested too deeply");
        }
        Ok(())
    }

    fn binder(&mut self, keywords: &[&str]) -> Result<Name, ParseError> {
        match self.next() {
            Some(Tok::Ident(s)) if !keywords.contains(&s.as_str()) => Ok(name(&s)),
            Some(Tok::Ident(s)) => {
                self.pos -= 1;
                self.err(format!("keyword `{s}` cannot be used as a binder"))
            }
            Some(_) => {
                self.pos -= 1;
                self.err("expected an identifier")
            }
            None => self.err("unexpected end of input, expected an identifier"),
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        self.enter()?;
        let r = self.term_inner();
        self.depth -= 1;
        r
    }

    fn term_inner(&mut self) -> Result<Term, ParseError> {
        let at = self.offset();
        match self.next() {
            None => self.err("unexpected end of input"),
            Some(Tok::Close) => {
                self.pos -= 1;
                self.err("unexpected `)`")
            }
            Some(Tok::Int(n)) => Ok(Term::Lit(n)),
            Some(Tok::Ident(s)) if s == "J" => Ok(Term::J),
            Some(Tok::Ident(s)) if TERM_KEYWORDS.contains(&s.as_str()) => Err(ParseError {
                offset: at,
                message: format!("keyword `{s}` used as a variable"),
            }),
            Some(Tok::Ident(s)) => Ok(Term::Var(name(&s))),
            Some(Tok::Open) => {
                let head = match self.peek() {
                    Some(Tok::Ident(s)) => Some(s.clone()),
                    _ => None,
                };
                let t = match head.as_deref() {
                    Some("lam") => {
                        self.pos += 1;
                        let x = self.binder(TERM_KEYWORDS)?;
                        let body = self.term()?;
                        Term::Lam(x, Rc::new(body))
                    }
                    Some("let") => {
                        self.pos += 1;
                        let x = self.binder(TERM_KEYWORDS)?;
                        let t0 = self.term()?;
                        let t1 = self.term()?;
                        Term::App(Rc::new(Term::Lam(x, Rc::new(t1))), Rc::new(t0))
                    }
                    Some(s) if EXT_KEYWORDS.contains(&s) => {
                        return self.err(format!("`{s}` is not allowed in a source term"));
                    }
                    _ => {
                        let t0 = self.term()?;
                        let t1 = self.term()?;
                        Term::App(Rc::new(t0), Rc::new(t1))
                    }
                };
                self.expect_close()?;
                Ok(t)
            }
        }
    }

    fn pattern(&mut self) -> Result<Pattern, ParseError> {
        self.enter()?;
        let r = self.pattern_inner();
        self.depth -= 1;
        r
    }

    fn pattern_inner(&mut self) -> Result<Pattern, ParseError> {
        match self.peek() {
            Some(Tok::Open) => {
                self.pos += 1;
                let p = match self.next() {
                    Some(Tok::Ident(s)) if s == "pair" => {
                        let a = self.pattern()?;
                        let b = self.pattern()?;
                        Pattern::Pair(Box::new(a), Box::new(b))
                    }
                    Some(Tok::Ident(s)) if s == "inl" => Pattern::Inl(Box::new(self.pattern()?)),
                    Some(Tok::Ident(s)) if s == "inr" => Pattern::Inr(Box::new(self.pattern()?)),
                    _ => {
                        self.pos -= 1;
                        return self.err("expected `pair`, `inl` or `inr` pattern");
                    }
                };
                self.expect_close()?;
                Ok(p)
            }
            _ => Ok(Pattern::Var(self.binder(EXT_KEYWORDS)?)),
        }
    }

    fn case_arm(&mut self, tag: &str) -> Result<(Pattern, ExtTerm), ParseError> {
        match self.next() {
            Some(Tok::Open) => {}
            _ => {
                self.pos = self.pos.saturating_sub(1);
                return self.err(format!("expected `({tag} ...)` case arm"));
            }
        }
        match self.next() {
            Some(Tok::Ident(s)) if s == tag => {}
            _ => {
                self.pos -= 1;
                return self.err(format!("expected `{tag}`"));
            }
        }
        let p = self.pattern()?;
        let body = self.ext()?;
        self.expect_close()?;
        Ok((p, body))
    }

    fn ext(&mut self) -> Result<ExtTerm, ParseError> {
        self.enter()?;
        let r = self.ext_inner();
        self.depth -= 1;
        r
    }

    fn ext_inner(&mut self) -> Result<ExtTerm, ParseError> {
        use ExtTerm as E;
        let at = self.offset();
        match self.next() {
            None => self.err("unexpected end of input"),
            Some(Tok::Close) => {
                self.pos -= 1;
                self.err("unexpected `)`")
            }
            Some(Tok::Int(n)) => Ok(E::Lit(n)),
            Some(Tok::Ident(s)) if EXT_KEYWORDS.contains(&s.as_str()) => Err(ParseError {
                offset: at,
                message: format!("keyword `{s}` used as a variable"),
            }),
            Some(Tok::Ident(s)) => Ok(E::Var(name(&s))),
            Some(Tok::Open) => {
                let head = match self.peek() {
                    Some(Tok::Ident(s)) if EXT_KEYWORDS.contains(&s.as_str()) => {
                        Some(s.clone())
                    }
                    _ => None,
                };
                if head.is_some() {
                    self.pos += 1;
                }
                let r = |t: ExtTerm| Rc::new(t);
                let t = match head.as_deref() {
                    Some("lam") => {
                        let x = self.binder(EXT_KEYWORDS)?;
                        E::Lam(x, r(self.ext()?))
                    }
                    Some("let") => {
                        let p = self.pattern()?;
                        let t0 = self.ext()?;
                        let t1 = self.ext()?;
                        match p {
                            Pattern::Var(x) => E::App(r(E::Lam(x, r(t1))), r(t0)),
                            p => E::LetP(p, r(t0), r(t1)),
                        }
                    }
                    Some("letp") => {
                        let p = self.pattern()?;
                        let t0 = self.ext()?;
                        let t1 = self.ext()?;
                        E::LetP(p, r(t0), r(t1))
                    }
                    Some("shift1") => {
                        let k = self.binder(EXT_KEYWORDS)?;
                        E::Shift1(k, r(self.ext()?))
                    }
                    Some("shift2") => {
                        let k = self.binder(EXT_KEYWORDS)?;
                        E::Shift2(k, r(self.ext()?))
                    }
                    Some("C1") => {
                        let k = self.binder(EXT_KEYWORDS)?;
                        E::Cop1(k, r(self.ext()?))
                    }
                    Some("C2") => {
                        let k = self.binder(EXT_KEYWORDS)?;
                        E::Cop2(k, r(self.ext()?))
                    }
                    Some("reset1") => E::Reset1(r(self.ext()?)),
                    Some("reset2") => E::Reset2(r(self.ext()?)),
                    Some("callcc") => E::Callcc(r(self.ext()?)),
                    Some("inl") => E::Inl(r(self.ext()?)),
                    Some("inr") => E::Inr(r(self.ext()?)),
                    Some("pair") => {
                        let a = self.ext()?;
                        let b = self.ext()?;
                        E::Pair(r(a), r(b))
                    }
                    Some("case") => {
                        let s = self.ext()?;
                        let arm_at = self.offset();
                        let (p, l) = self.case_arm("inl")?;
                        let (q, rr) = self.case_arm("inr")?;
                        if let (Pattern::Var(x), Pattern::Var(y)) = (&p, &q) {
                            if x == y {
                                return Err(ParseError {
                                    offset: arm_at,
                                    message: format!("case binders must differ, both are `{x}`"),
                                });
                            }
                        }
                        E::Case(r(s), p, r(l), q, r(rr))
                    }
                    _ => {
                        let t0 = self.ext()?;
                        let t1 = self.ext()?;
                        E::App(r(t0), r(t1))
                    }
                };
                self.expect_close()?;
                Ok(t)
            }
        }
    }
}

/// Parses a source term; extended forms are rejected.
pub fn parse_term(src: &str) -> Result<Term, ParseError> {
    let mut p = Parser::new(src)?;
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

/// Parses a term of the extended language. `J` is an ordinary identifier here.
pub fn parse_ext(src: &str) -> Result<ExtTerm, ParseError> {
    let mut p = Parser::new(src)?;
    let t = p.ext()?;
    p.finish()?;
    Ok(t)
}
