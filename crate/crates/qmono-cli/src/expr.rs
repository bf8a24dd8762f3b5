//! Expression parser for algebra elements.
//!
//! Grammar:
//!
//! ```text
//! expr   := ["-"] term (("+" | "-") term)*
//! term   := factor ("*"? factor)*
//! factor := atom ("^" exponent)?
//! atom   := "a" | "as" | "c" | "cs" | "q" | rational | "(" expr ")"
//! exponent := integer | "(" integer "/2" ")"        (half-integers only on q)
//! rational := integer ("/" integer)?
//! ```
//!
//! The canonical text printed by the engine parses back to the same
//! element; the round-trip test in the suite pins this.

use std::fmt;

use qmono_core::algebra::AlgElt;
use qmono_core::actions::UqGenerator;
use qmono_core::scalars::Scalar;

/// Parse failure with a byte position into the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset of the offending token.
    pub position: usize,
    /// Human-readable description.
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

// ---- tokens ----

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(i64),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    pos: usize,
}

fn lex(input: &str) -> Result<Vec<Spanned>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'+' => {
                out.push(Spanned { tok: Tok::Plus, pos: i });
                i += 1;
            }
            b'-' => {
                out.push(Spanned { tok: Tok::Minus, pos: i });
                i += 1;
            }
            b'*' => {
                out.push(Spanned { tok: Tok::Star, pos: i });
                i += 1;
            }
            b'^' => {
                out.push(Spanned { tok: Tok::Caret, pos: i });
                i += 1;
            }
            b'/' => {
                out.push(Spanned { tok: Tok::Slash, pos: i });
                i += 1;
            }
            b'(' => {
                out.push(Spanned { tok: Tok::LParen, pos: i });
                i += 1;
            }
            b')' => {
                out.push(Spanned { tok: Tok::RParen, pos: i });
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text = &input[start..i];
                let value = text.parse::<i64>().map_err(|_| ParseError {
                    position: start,
                    message: format!("integer {} out of range", text),
                })?;
                out.push(Spanned { tok: Tok::Int(value), pos: start });
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                    i += 1;
                }
                out.push(Spanned {
                    tok: Tok::Ident(input[start..i].to_string()),
                    pos: start,
                });
            }
            _ => {
                return Err(ParseError {
                    position: i,
                    message: format!("unexpected character {:?}", b as char),
                })
            }
        }
    }
    Ok(out)
}

// ---- parser ----

struct Parser {
    toks: Vec<Spanned>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|s| &s.tok)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|s| s.pos).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|s| s.tok.clone());
        if t.is_some() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: &Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(want) {
            self.at += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected {}", what)))
        }
    }

    fn err(&self, message: String) -> ParseError {
        ParseError { position: self.pos(), message }
    }

    fn expr(&mut self) -> Result<AlgElt, ParseError> {
        let mut negate = false;
        if self.peek() == Some(&Tok::Minus) {
            self.at += 1;
            negate = true;
        }
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.at += 1;
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(Tok::Minus) => {
                    self.at += 1;
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<AlgElt, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.at += 1;
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                Some(Tok::Ident(_)) | Some(Tok::Int(_)) | Some(Tok::LParen) => {
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<AlgElt, ParseError> {
        let pos = self.pos();
        // q is special: its exponent may be a half-integer
        let is_q = matches!(self.peek(), Some(Tok::Ident(name)) if name == "q");
        if is_q {
            self.at += 1;
            if self.peek() == Some(&Tok::Caret) {
                self.at += 1;
                let twice = self.q_exponent()?;
                return Ok(AlgElt::constant(Scalar::s_pow(twice)));
            }
            return Ok(AlgElt::constant(Scalar::q_pow(1)));
        }
        let base = match self.bump() {
            Some(Tok::Ident(name)) => match name.as_str() {
                "a" => AlgElt::word(1, 0, 0),
                "as" => AlgElt::word(-1, 0, 0),
                "c" => AlgElt::word(0, 1, 0),
                "cs" => AlgElt::word(0, 0, 1),
                _ => {
                    return Err(ParseError {
                        position: pos,
                        message: format!("unknown identifier {}", name),
                    })
                }
            },
            Some(Tok::Int(n)) => {
                // rational: INT ("/" INT)?
                if self.peek() == Some(&Tok::Slash) {
                    self.at += 1;
                    let dpos = self.pos();
                    match self.bump() {
                        Some(Tok::Int(d)) if d != 0 => {
                            AlgElt::constant(Scalar::ratio(n, d))
                        }
                        Some(Tok::Int(_)) => {
                            return Err(ParseError {
                                position: dpos,
                                message: "zero denominator".into(),
                            })
                        }
                        _ => {
                            return Err(ParseError {
                                position: dpos,
                                message: "expected denominator".into(),
                            })
                        }
                    }
                } else {
                    AlgElt::constant(Scalar::ratio(n, 1))
                }
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect(&Tok::RParen, "closing parenthesis")?;
                inner
            }
            Some(other) => {
                return Err(ParseError {
                    position: pos,
                    message: format!("unexpected token {:?}", other),
                })
            }
            None => {
                return Err(ParseError {
                    position: pos,
                    message: "unexpected end of input".into(),
                })
            }
        };
        if self.peek() == Some(&Tok::Caret) {
            self.at += 1;
            self.raise(base)
        } else {
            Ok(base)
        }
    }

    /// Apply an integer exponent to a parsed base. Negative exponents
    /// are only meaningful on constants, where they invert the scalar.
    fn raise(&mut self, base: AlgElt) -> Result<AlgElt, ParseError> {
        let pos = self.pos();
        let mut neg = false;
        if self.peek() == Some(&Tok::Minus) {
            self.at += 1;
            neg = true;
        }
        let e = match self.bump() {
            Some(Tok::Int(n)) => n,
            _ => {
                return Err(ParseError {
                    position: pos,
                    message: "expected integer exponent".into(),
                })
            }
        };
        if !neg {
            let e = u32::try_from(e).map_err(|_| ParseError {
                position: pos,
                message: "power out of range".into(),
            })?;
            return Ok(base.pow(e));
        }
        // negative power: invert a constant
        if base.is_zero() {
            return Err(ParseError {
                position: pos,
                message: "negative power of zero".into(),
            });
        }
        let mut terms = base.terms();
        let coeff = match (terms.next(), terms.next()) {
            (Some((m, coeff)), None) if m.is_unit() => coeff.clone(),
            _ => {
                return Err(ParseError {
                    position: pos,
                    message: "negative power of a non-constant element".into(),
                })
            }
        };
        let inv = coeff.checked_inv().map_err(|_| ParseError {
            position: pos,
            message: "negative power of zero".into(),
        })?;
        Ok(AlgElt::constant(inv.pow(e)))
    }

    /// Exponent of q: integer e (meaning q^e) or "(k/2)" (meaning
    /// q^{k/2}); returns twice the exponent.
    fn q_exponent(&mut self) -> Result<i64, ParseError> {
        match self.peek() {
            Some(Tok::LParen) => {
                self.at += 1;
                let mut neg = false;
                if self.peek() == Some(&Tok::Minus) {
                    self.at += 1;
                    neg = true;
                }
                let kpos = self.pos();
                let k = match self.bump() {
                    Some(Tok::Int(k)) => k,
                    _ => {
                        return Err(ParseError {
                            position: kpos,
                            message: "expected integer numerator".into(),
                        })
                    }
                };
                self.expect(&Tok::Slash, "/ in half-integer power")?;
                let dpos = self.pos();
                match self.bump() {
                    Some(Tok::Int(2)) => {}
                    _ => {
                        return Err(ParseError {
                            position: dpos,
                            message: "half-integer powers use denominator 2".into(),
                        })
                    }
                }
                self.expect(&Tok::RParen, "closing parenthesis")?;
                Ok(if neg { -k } else { k })
            }
            _ => {
                let mut neg = false;
                if self.peek() == Some(&Tok::Minus) {
                    self.at += 1;
                    neg = true;
                }
                let pos = self.pos();
                match self.bump() {
                    Some(Tok::Int(e)) => Ok(if neg { -2 * e } else { 2 * e }),
                    _ => Err(ParseError {
                        position: pos,
                        message: "expected integer exponent".into(),
                    }),
                }
            }
        }
    }
}

/// Parse an element expression.
pub fn parse_element(input: &str) -> Result<AlgElt, ParseError> {
    let toks = lex(input)?;
    let mut p = Parser { toks, at: 0, end: input.len() };
    if p.peek().is_none() {
        return Err(p.err("empty expression".into()));
    }
    let out = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input".into()));
    }
    Ok(out)
}

/// Parse a whitespace-separated action word over {K, Kinv, E, F}.
pub fn parse_action_word(input: &str) -> Result<Vec<UqGenerator>, ParseError> {
    let mut out = Vec::new();
    let mut offset = 0;
    for chunk in input.split_whitespace() {
        let pos = input[offset..].find(chunk).map(|d| offset + d).unwrap_or(offset);
        offset = pos + chunk.len();
        let g = match chunk {
            "K" => UqGenerator::K,
            "Kinv" => UqGenerator::Kinv,
            "E" => UqGenerator::E,
            "F" => UqGenerator::F,
            _ => {
                return Err(ParseError {
                    position: pos,
                    message: format!("unknown generator {} (expected K, Kinv, E, F)", chunk),
                })
            }
        };
        out.push(g);
    }
    if out.is_empty() {
        return Err(ParseError { position: 0, message: "empty action word".into() });
    }
    Ok(out)
}

// ---- tests ----
