//! Recursive-descent parser for the expression grammar
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' unary)?
//! primary := number | 'x' | '(' expr ')'
//!          | ('exp' | 'ln' | 'abs') '(' expr ')' | 'log' '(' expr ';' expr ')'
//! ```
//!
//! `^` is right-associative and binds tighter than unary minus, so `-x^2`
//! is `-(x^2)` and `2^-x` is accepted. Error positions are 0-based
//! character offsets.

use super::expr::Expr;
use crate::error::{Error, Result};

pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error(format!("unexpected `{}`", p.chars[p.pos])));
    }
    Ok(e)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => Err(self.error(format!("expected `{c}`, found `{found}`"))),
                None => Err(self.error(format!("expected `{c}` before end of input"))),
            }
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = lhs + self.term()?;
            } else if self.eat('-') {
                lhs = lhs - self.term()?;
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = lhs * self.unary()?;
            } else if self.eat('/') {
                lhs = lhs / self.unary()?;
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.primary()?;
        if self.eat('^') {
            return Ok(base.pow(self.unary()?));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr> {
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() || c == '.' => self.number(),
            Some(c) if c.is_alphabetic() => self.identifier(),
            Some(c) => Err(self.error(format!("unexpected `{c}`"))),
        }
    }

    fn number(&mut self) -> Result<Expr> {
        let start = self.pos;
        let digits = |p: &mut Parser| {
            while p.chars.get(p.pos).is_some_and(|c| c.is_ascii_digit()) {
                p.pos += 1;
            }
        };
        digits(self);
        if self.chars.get(self.pos) == Some(&'.') {
            self.pos += 1;
            digits(self);
        }
        // exponent only when digits follow, so `2e` never swallows `exp`
        if matches!(self.chars.get(self.pos), Some('e' | 'E')) {
            let mut look = self.pos + 1;
            if matches!(self.chars.get(look), Some('+' | '-')) {
                look += 1;
            }
            if self.chars.get(look).is_some_and(|c| c.is_ascii_digit()) {
                self.pos = look;
                digits(self);
            }
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        match text.parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(Expr::c(v)),
            _ => Err(Error::Syntax {
                pos: start,
                msg: format!("malformed number `{text}`"),
            }),
        }
    }

    fn identifier(&mut self) -> Result<Expr> {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_alphanumeric() || *c == '_') {
            self.pos += 1;
        }
        let name: String = self.chars[start..self.pos].iter().collect();
        match name.as_str() {
            "x" => Ok(Expr::x()),
            "exp" | "ln" | "abs" => {
                self.expect('(')?;
                let arg = self.expr()?;
                self.expect(')')?;
                Ok(match name.as_str() {
                    "exp" => arg.exp(),
                    "ln" => arg.ln(),
                    _ => arg.abs(),
                })
            }
            "log" => {
                self.expect('(')?;
                let base_pos = self.pos;
                let base = self.expr()?;
                let a = match base.as_const() {
                    Some(a) if a > 0.0 && a != 1.0 => a,
                    _ => {
                        return Err(Error::Syntax {
                            pos: base_pos,
                            msg: "log base must be a positive number other than 1".into(),
                        })
                    }
                };
                self.expect(';')?;
                let arg = self.expr()?;
                self.expect(')')?;
                Ok(Expr::log(a, arg))
            }
            _ => Err(Error::UnknownIdentifier { pos: start, name }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::Expr::*;

    #[test]
    fn structure() {
        let e = parse("x^2+1").unwrap();
        assert!(matches!(&e, Add(a, b) if matches!(**a, Pow(..)) && **b == Const(1.0)));
        let e = parse("2*x^3 - 6*x^2 + 15*x + 40").unwrap();
        assert_eq!(e.eval(2.0).unwrap(), 16.0 - 24.0 + 30.0 + 40.0);
        assert_eq!(parse("2^3^2").unwrap(), Const(512.0));
        assert_eq!(parse("-x^2").unwrap().eval(3.0).unwrap(), -9.0);
        assert_eq!(parse("8/4/2").unwrap(), Const(1.0));
        assert_eq!(parse("1e-3").unwrap(), Const(0.001));
        assert_eq!(parse("log(10; x)").unwrap().eval(100.0).unwrap(), 2.0);
    }

    #[test]
    fn errors_carry_positions() {
        assert!(matches!(parse("ln(x"), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(parse("x + y"), Err(Error::UnknownIdentifier { pos: 4, .. })));
        assert!(matches!(parse("sin(x)"), Err(Error::UnknownIdentifier { pos: 0, .. })));
        assert!(matches!(parse("2 +"), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse("(x))"), Err(Error::Syntax { pos: 3, .. })));
        assert!(parse("log(1; x)").is_err());
        assert!(parse("").is_err());
    }

    #[test]
    fn round_trip() {
        for text in [
            "x^2 + 1",
            "(x^2 + 1)/x",
            "x - (x - 1)",
            "2^-x",
            "exp(3*x)*ln(x)",
            "-(x + 1)^2",
            "x^x",
            "(-2)*x + abs(x - 3)",
            "log(2; x + 1)",
            "1/(1/x)",
        ] {
            let e = parse(text).unwrap();
            assert_eq!(parse(&e.to_string()).unwrap(), e, "{text} printed as {e}");
        }
    }
}
