//! Text syntax for polynomials, rational functions and words.
//!
//! Rational-function expressions:
//!
//! ```text
//! expr    := ('+' | '-')? term (('+' | '-') term)*
//! term    := factor (('*' | '/') factor)*
//! factor  := primary ('^' '-'? int)?
//! primary := int | VAR | '(' expr ')'
//! ```
//!
//! so `3/2*X^2 - X + 1`, `(X - 1)/(X)` and `1/X` are all accepted. A
//! polynomial is an expression whose value has a constant denominator.
//!
//! Words:
//!
//! ```text
//! word   := factor ('*' factor)*
//! factor := atom ('^' '-'? int)?
//! atom   := 's(' expr ')' | 'a(' expr ')' | 'm(' expr ')'
//!         | '[' word ',' word ']' | '(' word ')' | '1'
//! ```
//!
//! Every generator literal gets the id given by its canonical spelling
//! (`s(1)`, `a(X^2)`, ...), bound to the element it denotes. Printing a
//! parsed word therefore yields text that parses back to the same word.

use num_bigint::BigInt;

use crate::error::Error;
use crate::jonquieres::JonqElement;
use crate::poly::Poly;
use crate::rat::Rat;
use crate::ratfunc::RatFunc;
use crate::words::{commutator, Assignment, Word};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_whitespace()) {
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

    fn expect(&mut self, c: u8) -> Result<(), Error> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{}`", c as char)))
        }
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        let mut msg = msg.into();
        match self.src.get(self.pos) {
            Some(&c) => msg.push_str(&format!(", found `{}`", c as char)),
            None => msg.push_str(", found end of input"),
        }
        Error::syntax(self.pos, msg)
    }

    fn at(&self, pos: usize, err: Error) -> Error {
        match err {
            e @ Error::Syntax { .. } => e,
            e => Error::syntax(pos, e.to_string()),
        }
    }

    fn finish(&mut self) -> Result<(), Error> {
        if self.peek().is_some() {
            Err(self.error("unexpected trailing input"))
        } else {
            Ok(())
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn int(&mut self) -> Result<i64, Error> {
        let neg = self.eat(b'-');
        let start = self.pos;
        let d = self.digits().ok_or_else(|| self.error("expected integer"))?;
        let v: i64 = d
            .parse()
            .map_err(|_| Error::syntax(start, "integer out of range"))?;
        Ok(if neg { -v } else { v })
    }

    fn rf_expr(&mut self, var: u8) -> Result<RatFunc, Error> {
        let mut acc = if self.eat(b'-') {
            -self.rf_term(var)?
        } else {
            self.eat(b'+');
            self.rf_term(var)?
        };
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.rf_term(var)?;
            } else if self.eat(b'-') {
                acc = &acc - &self.rf_term(var)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn rf_term(&mut self, var: u8) -> Result<RatFunc, Error> {
        let mut acc = self.rf_factor(var)?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.rf_factor(var)?;
            } else if self.peek() == Some(b'/') {
                let pos = self.pos;
                self.pos += 1;
                let rhs = self.rf_factor(var)?;
                acc = acc.checked_div(&rhs).map_err(|e| self.at(pos, e))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn rf_factor(&mut self, var: u8) -> Result<RatFunc, Error> {
        let base = self.rf_primary(var)?;
        if self.peek() == Some(b'^') {
            let pos = self.pos;
            self.pos += 1;
            let k = self.int()?;
            return base.pow(k).map_err(|e| self.at(pos, e));
        }
        Ok(base)
    }

    fn rf_primary(&mut self, var: u8) -> Result<RatFunc, Error> {
        match self.peek() {
            Some(c) if c == var => {
                self.pos += 1;
                Ok(RatFunc::x())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.rf_expr(var)?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits().unwrap();
                let n: BigInt = d.parse().unwrap();
                Ok(RatFunc::constant(Rat::from_bigint(n)))
            }
            _ => Err(self.error(format!("expected number, `{}` or `(`", var as char))),
        }
    }

    fn word(&mut self, env: &mut Assignment) -> Result<Word, Error> {
        let mut acc = self.word_factor(env)?;
        while self.eat(b'*') {
            acc = acc.mul(&self.word_factor(env)?);
        }
        Ok(acc)
    }

    fn word_factor(&mut self, env: &mut Assignment) -> Result<Word, Error> {
        let base = self.word_atom(env)?;
        if self.eat(b'^') {
            let k = self.int()?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn word_atom(&mut self, env: &mut Assignment) -> Result<Word, Error> {
        let start = self.peek().map(|_| self.pos);
        match self.peek() {
            Some(b'[') => {
                self.pos += 1;
                let u = self.word(env)?;
                self.expect(b',')?;
                let v = self.word(env)?;
                self.expect(b']')?;
                Ok(commutator(&u, &v))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.word(env)?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Word::empty())
            }
            Some(kind @ (b's' | b'a' | b'm')) => {
                let pos = start.unwrap();
                self.pos += 1;
                self.expect(b'(')?;
                let param = self.rf_expr(b'X')?;
                self.expect(b')')?;
                let (id, value) = literal(kind, param).map_err(|e| self.at(pos, e))?;
                env.bind(id.clone(), value);
                Ok(Word::gen(id))
            }
            _ => Err(self.error("expected generator `s(..)`, `a(..)`, `m(..)`, `[` or `(`")),
        }
    }
}

fn literal(kind: u8, param: RatFunc) -> Result<(String, JonqElement), Error> {
    match kind {
        b's' => {
            let t = param
                .as_constant()
                .ok_or_else(|| Error::Precondition("translation amount must be a constant".into()))?;
            Ok((format!("s({t})"), JonqElement::translation(t)))
        }
        b'a' => Ok((format!("a({param})"), JonqElement::alpha(param))),
        _ => {
            let id = format!("m({param})");
            Ok((id, JonqElement::mu(param)?))
        }
    }
}

/// Parses a rational function in the variable `var`.
pub fn parse_ratfunc(input: &str, var: char) -> Result<RatFunc, Error> {
    let var = u8::try_from(var)
        .ok()
        .filter(u8::is_ascii_alphabetic)
        .ok_or_else(|| Error::Precondition(format!("unsupported variable `{var}`")))?;
    let mut cur = Cursor::new(input);
    let value = cur.rf_expr(var)?;
    cur.finish()?;
    Ok(value)
}

/// Parses a polynomial in the variable `var`.
pub fn parse_poly(input: &str, var: char) -> Result<Poly, Error> {
    let rf = parse_ratfunc(input, var)?;
    match rf.as_poly() {
        Some(p) => Ok(p.clone()),
        None => Err(Error::syntax(0, format!("`{}` is not a polynomial", input.trim()))),
    }
}

/// Parses a rational constant, written as an expression without variables.
pub fn parse_rat(input: &str) -> Result<Rat, Error> {
    let rf = parse_ratfunc(input, 'X')?;
    rf.as_constant()
        .ok_or_else(|| Error::syntax(0, format!("`{}` is not a constant", input.trim())))
}

/// Parses a word together with the bindings of its generator literals.
pub fn parse_word(input: &str) -> Result<(Word, Assignment), Error> {
    let mut cur = Cursor::new(input);
    let mut env = Assignment::new();
    let word = cur.word(&mut env)?;
    cur.finish()?;
    Ok((word, env))
}

/// Parses and evaluates a word in one step.
pub fn eval_word(input: &str) -> Result<JonqElement, Error> {
    let (word, env) = parse_word(input)?;
    word.evaluate(&env)
}
