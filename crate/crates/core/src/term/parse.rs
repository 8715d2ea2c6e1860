//! Concrete syntax:
//!
//! ```text
//! expr   := conj ('|' conj)*
//! conj   := unary ('&' unary)*
//! unary  := '!' unary | 'D' INT '(' expr ')' | 'J' INT '(' expr ')' | atom
//! atom   := '0' | '1' | 'x' INT | '(' expr ')'
//! ```
//!
//! `|` and `&` are associative; chains are built as balanced trees, which
//! for two or three operands is the same as nesting to the left.

use super::Term;
use crate::error::{LmnError, Result};

pub fn parse(text: &str) -> Result<Term> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let term = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(format!("unexpected {:?}", p.src[p.pos] as char)));
    }
    Ok(term)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> LmnError {
        LmnError::Parse { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
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
            match self.peek() {
                Some(got) => Err(self.error(format!("expected {:?}, found {:?}", c as char, got as char))),
                None => Err(self.error(format!("expected {:?}, found end of input", c as char))),
            }
        }
    }

    /// Digits immediately following the current position (no whitespace).
    fn number(&mut self, what: &str) -> Result<u32> {
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') {
            return Err(self.error(format!("{what} must not be negative")));
        }
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(format!("expected digits for {what}")));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| LmnError::Parse { pos: start, msg: format!("{what} is too large") })
    }

    fn expr(&mut self) -> Result<Term> {
        let mut operands = vec![self.conj()?];
        while self.eat(b'|') {
            operands.push(self.conj()?);
        }
        Ok(Term::join_all(operands))
    }

    fn conj(&mut self) -> Result<Term> {
        let mut operands = vec![self.unary()?];
        while self.eat(b'&') {
            operands.push(self.unary()?);
        }
        Ok(Term::meet_all(operands))
    }

    fn unary(&mut self) -> Result<Term> {
        let Some(c) = self.peek() else {
            return Err(self.error("unexpected end of input"));
        };
        let start = self.pos;
        match c {
            b'!' => {
                self.pos += 1;
                Ok(Term::neg(self.unary()?))
            }
            b'D' | b'J' => {
                self.pos += 1;
                let index = self.number("operator index")?;
                if c == b'D' && index == 0 {
                    return Err(LmnError::Parse { pos: start, msg: "D0 is not an operator; nuances start at D1".into() });
                }
                self.expect(b'(')?;
                let arg = self.expr()?;
                self.expect(b')')?;
                Ok(if c == b'D' { Term::delta(index, arg) } else { Term::jay(index, arg) })
            }
            b'x' => {
                self.pos += 1;
                let k = self.number("variable index")?;
                if k == 0 {
                    return Err(LmnError::Parse { pos: start, msg: "variables start at x1".into() });
                }
                Ok(Term::Var(k))
            }
            b'0'..=b'9' => match self.number("constant")? {
                0 => Ok(Term::Zero),
                1 => Ok(Term::One),
                other => Err(LmnError::Parse { pos: start, msg: format!("constant must be 0 or 1, got {other}") }),
            },
            b'(' => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            other => Err(self.error(format!("unexpected {:?}", other as char))),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Prec {
    Or,
    And,
    Unary,
}

/// Prints with the fewest parentheses the grammar allows.
pub fn format(term: &Term) -> String {
    let mut out = String::new();
    write_term(term, Prec::Or, &mut out);
    out
}

fn write_term(term: &Term, ctx: Prec, out: &mut String) {
    match term {
        Term::Zero => out.push('0'),
        Term::One => out.push('1'),
        Term::Var(k) => {
            out.push('x');
            out.push_str(&k.to_string());
        }
        Term::Or(a, b) => write_binary(a, b, " | ", Prec::Or, ctx, out),
        Term::And(a, b) => write_binary(a, b, " & ", Prec::And, ctx, out),
        Term::Neg(a) => {
            out.push('!');
            write_term(a, Prec::Unary, out);
        }
        Term::Delta(i, a) | Term::Jay(i, a) => {
            out.push(if matches!(term, Term::Delta(..)) { 'D' } else { 'J' });
            out.push_str(&i.to_string());
            out.push('(');
            write_term(a, Prec::Or, out);
            out.push(')');
        }
    }
}

fn write_binary(a: &Term, b: &Term, op: &str, prec: Prec, ctx: Prec, out: &mut String) {
    let parens = ctx > prec;
    if parens {
        out.push('(');
    }
    write_term(a, prec, out);
    out.push_str(op);
    write_term(b, prec, out);
    if parens {
        out.push(')');
    }
}
