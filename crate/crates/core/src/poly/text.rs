//! Plain-text polynomial format: `3/2*x[1,2]^2*x[3,1] - xL[1,1] + 4`.
//! Indices are 1-based; `xL`, `xR` and `x{l}` tag tensor legs and levels.

use num_traits::{One, Signed, Zero};

use super::{MonoOrder, Monomial, Polynomial, Role, Var, VarSet};
use crate::error::PolyError;
use crate::scalar::{format_scalar, parse_scalar, Scalar};

pub fn format_monomial(vars: &VarSet, m: &Monomial) -> String {
    let parts: Vec<String> = m
        .exponents()
        .map(|(v, e)| if e == 1 { vars.get(v).to_string() } else { format!("{}^{e}", vars.get(v)) })
        .collect();
    parts.join("*")
}

fn format_term(vars: &VarSet, m: &Monomial, c: &Scalar) -> String {
    if m.is_one() {
        return format_scalar(c);
    }
    let mono = format_monomial(vars, m);
    if c.is_one() {
        mono
    } else {
        format!("{}*{mono}", format_scalar(c))
    }
}

pub fn format_polynomial(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().iter().enumerate() {
        let negative = c.is_negative();
        let abs = c.abs();
        if k == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&format_term(p.vars(), m, &abs));
    }
    out
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, message: impl Into<String>) -> PolyError {
        PolyError::Parse { position: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
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

    fn number(&mut self) -> Result<Scalar, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() || c == '.' || c == '/' {
                self.pos += 1;
            } else {
                break;
            }
        }
        parse_scalar(&self.src[start..self.pos])
            .map_err(|e| PolyError::Parse { position: start, message: e.to_string() })
    }

    fn uint(&mut self) -> Result<usize, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.src[start..self.pos].parse().map_err(|_| self.err("expected an integer"))
    }

    fn variable(&mut self, vars: &VarSet) -> Result<usize, PolyError> {
        self.skip_ws();
        let start = self.pos;
        if !self.eat('x') {
            return Err(self.err("expected a variable"));
        }
        let role = if self.src[self.pos..].starts_with('L') {
            self.pos += 1;
            Role::Left
        } else if self.src[self.pos..].starts_with('R') {
            self.pos += 1;
            Role::Right
        } else if self.src[self.pos..].starts_with('{') {
            self.pos += 1;
            let l = self.uint()?;
            if !self.eat('}') {
                return Err(self.err("expected `}`"));
            }
            Role::Level(l as u32)
        } else {
            Role::Plain
        };
        if !self.eat('[') {
            return Err(self.err("expected `[`"));
        }
        let row = self.uint()?;
        if !self.eat(',') {
            return Err(self.err("expected `,`"));
        }
        let col = self.uint()?;
        if !self.eat(']') {
            return Err(self.err("expected `]`"));
        }
        if row == 0 || col == 0 {
            return Err(PolyError::Parse { position: start, message: "indices are 1-based".into() });
        }
        let v = Var { role, row: row - 1, col: col - 1 };
        vars.index_of(&v).ok_or(PolyError::Parse { position: start, message: format!("unknown variable {v}") })
    }

    fn factor(&mut self, vars: &VarSet, pairs: &mut Vec<(usize, u32)>, coeff: &mut Scalar) -> Result<(), PolyError> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() || c == '.' => {
                let n = self.number()?;
                *coeff *= n;
            }
            Some('x') => {
                let v = self.variable(vars)?;
                let e = if self.eat('^') { self.uint()? as u32 } else { 1 };
                pairs.push((v, e));
            }
            _ => return Err(self.err("expected a number or variable")),
        }
        Ok(())
    }
}

pub fn parse_polynomial(text: &str, vars: &VarSet, order: MonoOrder) -> Result<Polynomial, PolyError> {
    let mut p = Parser { src: text, pos: 0 };
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        p.skip_ws();
        if p.pos == text.len() {
            if first {
                return Err(p.err("empty polynomial"));
            }
            break;
        }
        let mut sign = Scalar::one();
        if p.eat('-') {
            sign = -sign;
        } else if !p.eat('+') && !first {
            return Err(p.err("expected `+` or `-`"));
        }
        first = false;
        let mut pairs = Vec::new();
        let mut coeff = sign;
        p.factor(vars, &mut pairs, &mut coeff)?;
        while p.eat('*') {
            p.factor(vars, &mut pairs, &mut coeff)?;
        }
        terms.push((Monomial::from_pairs(&pairs), coeff));
    }
    let out = Polynomial::from_terms(vars, order, terms);
    debug_assert!(!out.terms().iter().any(|t| t.1.is_zero()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let v = VarSet::matrix(Role::Plain, 2, 2);
        let o = MonoOrder::DegRevLex;
        let text = "x[1,1]*x[2,2] - x[2,1]*x[1,2] + 3/2*x[1,1]^2 - 4";
        let p = parse_polynomial(text, &v, o).unwrap();
        let back = format_polynomial(&p);
        assert_eq!(parse_polynomial(&back, &v, o).unwrap(), p);
        // degrevlex: x[1,2]*x[2,1] beats x[1,1]*x[2,2] (last variable x[2,2] present)
        assert_eq!(back, "3/2*x[1,1]^2 - x[1,2]*x[2,1] + x[1,1]*x[2,2] - 4");
    }

    #[test]
    fn tagged_variables() {
        let v = VarSet::matrix(Role::Left, 1, 1).concat(&VarSet::matrix(Role::Right, 1, 1)).concat(&VarSet::matrix(
            Role::Level(1),
            1,
            1,
        ));
        let p = parse_polynomial("xL[1,1]*xR[1,1] - x{1}[1,1]", &v, MonoOrder::Lex).unwrap();
        assert_eq!(format_polynomial(&p), "xL[1,1]*xR[1,1] - x{1}[1,1]");
    }

    #[test]
    fn errors_carry_positions() {
        let v = VarSet::with_count(1);
        let e = parse_polynomial("x[1,1] + x[2,1]", &v, MonoOrder::Lex).unwrap_err();
        assert!(matches!(e, PolyError::Parse { position: 9, .. }), "{e:?}");
        assert!(parse_polynomial("x[1,1] x[1,1]", &v, MonoOrder::Lex).is_err());
        assert!(parse_polynomial("", &v, MonoOrder::Lex).is_err());
    }
}
