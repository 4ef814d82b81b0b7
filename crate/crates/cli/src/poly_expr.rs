//! Polynomial expressions: rational constants, generators, `+ - * / ^` and
//! parentheses. Division is only allowed by a nonzero constant.

use logchern_core::{Monomial, Poly, Q};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Code, ParseError};

const MAX_EXPONENT: u32 = 64;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

/// Parses `text` over the generators `names`. `line` and `col` locate the
/// first character of `text` for error messages.
pub fn parse_poly(text: &str, names: &[String], line: usize, col: usize) -> Result<Poly, ParseError> {
    let toks = lex(text, line, col)?;
    let mut p = Parser { toks, pos: 0, names, line, end: col + text.chars().count() };
    if p.toks.is_empty() {
        return Err(p.err_at(p.end, Code::Syntax, "expected a polynomial"));
    }
    let out = p.expr()?;
    if let Some((_, c)) = p.toks.get(p.pos) {
        return Err(p.err_at(*c, Code::Syntax, "unexpected trailing input"));
    }
    Ok(out)
}

fn lex(text: &str, line: usize, col0: usize) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && (chars[i] == '.' || chars[i] == 'e' && chars.get(i + 1).map_or(false, |d| d.is_ascii_digit())) {
                return Err(ParseError::new(Code::Syntax, line, col0 + i, "floating-point numbers are not accepted"));
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((Tok::Num(digits.parse().expect("digits")), col));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(ParseError::new(Code::Syntax, line, col, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    names: &'a [String],
    line: usize,
    end: usize,
}

impl Parser<'_> {
    fn err_at(&self, col: usize, code: Code, msg: impl Into<String>) -> ParseError {
        ParseError::new(code, self.line, col, msg)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.1)
    }

    fn peek_sym(&self, s: char) -> bool {
        matches!(self.toks.get(self.pos), Some((Tok::Sym(c), _)) if *c == s)
    }

    fn nvars(&self) -> usize {
        self.names.len()
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.peek_sym('+') {
                self.pos += 1;
                acc = &acc + &self.term()?;
            } else if self.peek_sym('-') {
                self.pos += 1;
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            if self.peek_sym('*') {
                self.pos += 1;
                acc = &acc * &self.factor()?;
            } else if self.peek_sym('/') {
                self.pos += 1;
                let at = self.here();
                let d = self.factor()?;
                match d.as_constant() {
                    Some(c) if !c.is_zero() => acc = acc.scale(&(Q::from_integer(1.into()) / c)),
                    Some(_) => return Err(self.err_at(at, Code::InvalidValue, "division by zero")),
                    None => return Err(self.err_at(at, Code::Syntax, "division is only allowed by a constant")),
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Poly, ParseError> {
        if self.peek_sym('-') {
            self.pos += 1;
            return Ok(-&self.factor()?);
        }
        if self.peek_sym('+') {
            self.pos += 1;
            return self.factor();
        }
        let base = self.atom()?;
        if self.peek_sym('^') {
            self.pos += 1;
            let at = self.here();
            match self.toks.get(self.pos) {
                Some((Tok::Num(n), _)) => {
                    let k = n.to_u32().filter(|k| *k <= MAX_EXPONENT).ok_or_else(|| {
                        self.err_at(at, Code::InvalidValue, format!("exponent must be at most {MAX_EXPONENT}"))
                    })?;
                    self.pos += 1;
                    return Ok(base.pow(k));
                }
                _ => return Err(self.err_at(at, Code::Syntax, "expected a non-negative integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        let at = self.here();
        let tok = self.toks.get(self.pos).cloned();
        match tok {
            Some((Tok::Num(n), _)) => {
                self.pos += 1;
                Ok(Poly::constant(self.nvars(), Q::from_integer(n)))
            }
            Some((Tok::Ident(name), _)) => {
                self.pos += 1;
                let i = self.names.iter().position(|g| *g == name).ok_or_else(|| {
                    self.err_at(at, Code::UnknownGenerator, format!("unknown generator `{name}`"))
                })?;
                let mut exps = vec![0; self.nvars()];
                exps[i] = 1;
                Ok(Poly::monomial(Monomial::from_exponents(exps), Q::from_integer(1.into())))
            }
            Some((Tok::Sym('('), _)) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.peek_sym(')') {
                    return Err(self.err_at(self.here(), Code::Syntax, "expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(self.err_at(at, Code::Syntax, "expected a number, generator or `(`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names() -> Vec<String> {
        vec!["H".into(), "e".into()]
    }

    fn render(p: &Poly) -> String {
        p.render(&names(), &[1, 1])
    }

    #[test]
    fn arithmetic() {
        let p = parse_poly("(1+H)^3 - 3/2*H*e + e/2", &names(), 1, 1).unwrap();
        assert_eq!(render(&p), "1 + 3*H + 1/2*e + 3*H^2 - 3/2*H*e + H^3");
        assert_eq!(render(&parse_poly("-H - -e", &names(), 1, 1).unwrap()), "-H + e");
        assert_eq!(render(&parse_poly("0", &names(), 1, 1).unwrap()), "0");
    }

    #[test]
    fn errors_are_positioned() {
        let e = parse_poly("H + x", &names(), 4, 10).unwrap_err();
        assert_eq!((e.code, e.line, e.column), (Code::UnknownGenerator, 4, 14));
        let e = parse_poly("H + 1.5", &names(), 1, 1).unwrap_err();
        assert_eq!((e.code, e.column), (Code::Syntax, 6));
        let e = parse_poly("H / e", &names(), 1, 1).unwrap_err();
        assert_eq!(e.code, Code::Syntax);
        assert_eq!(parse_poly("H/0", &names(), 1, 1).unwrap_err().code, Code::InvalidValue);
        assert_eq!(parse_poly("(H", &names(), 1, 1).unwrap_err().code, Code::Syntax);
        assert_eq!(parse_poly("H^99", &names(), 1, 1).unwrap_err().code, Code::InvalidValue);
        assert_eq!(parse_poly("", &names(), 1, 1).unwrap_err().code, Code::Syntax);
        assert_eq!(parse_poly("H H", &names(), 1, 1).unwrap_err().code, Code::Syntax);
    }
}
