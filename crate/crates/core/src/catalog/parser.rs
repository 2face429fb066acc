//! Recursive-descent parser for group expressions.
//!
//! ```text
//! expr := term ('x' term)*
//! term := atom ('^' INT)?
//! atom := 'Z' INT | 'D' INT | 'T' INT | 'Q8' | 'S' INT | 'A' INT
//!       | 'SL23' | 'F54' | 'U24' | 'V24' | 'U30' | '(' expr ')'
//! ```
//!
//! Whitespace is ignored everywhere. `Z2^k` is read as the elementary
//! abelian group of rank `k`; other powers stay as `Power`.

use super::GroupExpr;
use crate::error::{Error, Result};

const ATOMS: &str = "Z<n>, D<n>, T<n>, Q8, S<n>, A<n>, SL23, F54, U24, V24, U30, `(`";

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn fail<T>(&mut self, expected: &str) -> Result<T> {
        self.skip_ws();
        Err(Error::Parse { offset: self.pos, expected: expected.to_string() })
    }

    fn int(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        let digits = self.src[start..].bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return self.fail("integer");
        }
        self.pos += digits;
        match self.src[start..self.pos].parse::<usize>() {
            Ok(v) if v >= 1 => Ok(v),
            _ => Err(Error::Parse { offset: start, expected: "positive integer".into() }),
        }
    }

    fn expr(&mut self) -> Result<GroupExpr> {
        let mut left = self.term()?;
        while self.eat("x") || self.eat("×") {
            let right = self.term()?;
            left = GroupExpr::Product(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn term(&mut self) -> Result<GroupExpr> {
        let atom = self.atom()?;
        if !self.eat("^") {
            return Ok(atom);
        }
        let k = self.int()?;
        Ok(match atom {
            GroupExpr::Cyclic(2) => GroupExpr::ElemAbelian2(k),
            other => GroupExpr::Power(Box::new(other), k),
        })
    }

    fn atom(&mut self) -> Result<GroupExpr> {
        if self.eat("(") {
            let inner = self.expr()?;
            if !self.eat(")") {
                return self.fail("`)` or `x`");
            }
            // `(Z2)^k` stays a power so that it round-trips through printing.
            if inner == GroupExpr::Cyclic(2) && self.eat("^") {
                return Ok(GroupExpr::Power(Box::new(inner), self.int()?));
            }
            return Ok(inner);
        }
        for (kw, expr) in [
            ("SL23", GroupExpr::SL23),
            ("Q8", GroupExpr::Quaternion),
            ("F54", GroupExpr::F54),
            ("U24", GroupExpr::U24),
            ("V24", GroupExpr::V24),
            ("U30", GroupExpr::U30),
        ] {
            if self.eat(kw) {
                return Ok(expr);
            }
        }
        let Some(letter) = self.peek() else { return self.fail(ATOMS) };
        let start = self.pos;
        let ctor: fn(usize) -> GroupExpr = match letter {
            'Z' => GroupExpr::Cyclic,
            'D' => GroupExpr::Dihedral,
            'T' => GroupExpr::Dicyclic,
            'S' => GroupExpr::Sym,
            'A' => GroupExpr::Alt,
            _ => return self.fail(ATOMS),
        };
        self.pos += 1;
        let n = self.int()?;
        let bad = |what: &str| Err(Error::Parse { offset: start, expected: what.to_string() });
        match letter {
            'D' if n < 4 || n % 2 != 0 => bad("dihedral order: even and at least 4"),
            'T' if n % 4 != 0 => bad("dicyclic order: a multiple of 4"),
            _ => Ok(ctor(n)),
        }
    }
}

/// Parses a group expression such as `Z2^2 x Z6` or `D8 x Z3`.
pub fn parse_group_expr(text: &str) -> Result<GroupExpr> {
    let mut p = Parser { src: text, pos: 0 };
    if p.peek().is_none() {
        return p.fail(ATOMS);
    }
    let expr = p.expr()?;
    if p.peek().is_some() {
        return p.fail("`x` or end of input");
    }
    Ok(expr)
}
