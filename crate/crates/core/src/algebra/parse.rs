//! Recursive-descent parser for the rational-function expression grammar:
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := atom ('^' uint)?
//! atom   := 't' | constant-symbol | uint | '(' expr ')'
//! ```
//!
//! `-` is a synonym for `+` (characteristic 2). Constant symbols are `0`,
//! `1`, and the field's generator symbol. Whitespace is insignificant.
//! Integers reduce modulo 2 as constants; exponents are plain unsigned
//! integers. `Display` on [`RatFunc`] emits this grammar, and parsing a
//! rendered canonical value returns the identical value.

use std::fmt;

use super::field::BinaryField;
use super::ratfunc::RatFunc;

/// Largest accepted exponent; guards against pathological inputs allocating
/// enormous polynomials.
const MAX_EXPONENT: u64 = 4096;

/// A parse failure, with the byte position where it occurred.
#[derive(Clone, Copy, PartialEq, Eq, Debug, thiserror::Error)]
#[error("parse error at position {pos}: {kind}")]
pub struct ParseError {
    pub pos: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedEnd,
    /// A letter that is neither `t` nor the field's generator symbol.
    UnknownSymbol(char),
    DivisionByZero,
    ExponentTooLarge,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character '{c}'"),
            ParseErrorKind::UnexpectedEnd => write!(f, "unexpected end of input"),
            ParseErrorKind::UnknownSymbol(c) => {
                write!(f, "unknown symbol '{c}' for this constant field")
            }
            ParseErrorKind::DivisionByZero => write!(f, "division by zero"),
            ParseErrorKind::ExponentTooLarge => {
                write!(f, "exponent exceeds the supported bound {MAX_EXPONENT}")
            }
        }
    }
}

/// Parse an expression over the given constant field into a canonical
/// rational function. Total on the grammar; everything else errors with a
/// position.
pub fn parse_ratfunc(text: &str, field: BinaryField) -> Result<RatFunc, ParseError> {
    let mut p = Parser { chars: text.chars().collect(), pos: 0, field };
    let value = p.expr()?;
    p.skip_ws();
    match p.peek() {
        None => Ok(value),
        Some(c) => Err(p.error(ParseErrorKind::UnexpectedChar(c))),
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    field: BinaryField,
}

impl Parser {
    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { pos: self.pos, kind }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(self.error(ParseErrorKind::UnexpectedChar(c))),
            None => Err(self.error(ParseErrorKind::UnexpectedEnd)),
        }
    }

    fn expr(&mut self) -> Result<RatFunc, ParseError> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') | Some('-') => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = &acc + &rhs;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc, ParseError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.bump();
                    let rhs = self.factor()?;
                    acc = &acc * &rhs;
                }
                Some('/') => {
                    let op_pos = self.pos;
                    self.bump();
                    let rhs = self.factor()?;
                    acc = acc.checked_div(&rhs).map_err(|_| ParseError {
                        pos: op_pos,
                        kind: ParseErrorKind::DivisionByZero,
                    })?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RatFunc, ParseError> {
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() == Some('^') {
            self.bump();
            let e = self.uint()?;
            return Ok(base.pow(e as u32));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatFunc, ParseError> {
        self.skip_ws();
        match self.peek() {
            None => Err(self.error(ParseErrorKind::UnexpectedEnd)),
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(inner)
            }
            Some('t') => {
                self.bump();
                Ok(RatFunc::t(self.field))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.uint()?;
                Ok(RatFunc::constant(self.field.from_int(n)))
            }
            Some(c) if c == self.field.symbol() && self.field.degree() >= 2 => {
                self.bump();
                Ok(RatFunc::constant(self.field.generator()))
            }
            Some(c) if c.is_alphabetic() => Err(self.error(ParseErrorKind::UnknownSymbol(c))),
            Some(c) => Err(self.error(ParseErrorKind::UnexpectedChar(c))),
        }
    }

    fn uint(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(c) = self.peek() {
            let Some(d) = c.to_digit(10) else { break };
            self.bump();
            value = value * 10 + d as u64;
            if value > MAX_EXPONENT {
                return Err(ParseError { pos: start, kind: ParseErrorKind::ExponentTooLarge });
            }
        }
        if self.pos == start {
            match self.peek() {
                Some(c) => Err(self.error(ParseErrorKind::UnexpectedChar(c))),
                None => Err(self.error(ParseErrorKind::UnexpectedEnd)),
            }
        } else {
            Ok(value)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::poly::Poly;
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f2() -> BinaryField {
        BinaryField::new(1).unwrap()
    }

    #[test]
    fn parses_quotient_of_high_powers() {
        let f = parse_ratfunc("(t^16+1)/t^8", f2()).unwrap();
        let t = RatFunc::t(f2());
        let expected = (&t.pow(16) + &RatFunc::one(f2())).checked_div(&t.pow(8)).unwrap();
        assert_eq!(f, expected);
        // Whitespace and '-' as '+' are accepted.
        assert_eq!(parse_ratfunc(" ( t^16 - 1 ) / t^8 ", f2()).unwrap(), expected);
    }

    #[test]
    fn parses_constants_and_integers() {
        assert!(parse_ratfunc("0", f2()).unwrap().is_zero());
        assert_eq!(parse_ratfunc("7", f2()).unwrap(), RatFunc::one(f2()));
        let gf4 = BinaryField::new(2).unwrap();
        let f = parse_ratfunc("w*t + 1", gf4).unwrap();
        let expected = &(&RatFunc::constant(gf4.generator()) * &RatFunc::t(gf4))
            + &RatFunc::one(gf4);
        assert_eq!(f, expected);
    }

    #[test]
    fn rejects_malformed_input_with_position() {
        let err = parse_ratfunc("t^", f2()).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnexpectedEnd);
        let err = parse_ratfunc("t + $", f2()).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnexpectedChar('$'));
        assert_eq!(err.pos, 4);
        let err = parse_ratfunc("(t+1", f2()).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnexpectedEnd);
        let err = parse_ratfunc("t)", f2()).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnexpectedChar(')'));
        let err = parse_ratfunc("t^5000", f2()).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::ExponentTooLarge);
    }

    #[test]
    fn rejects_symbols_outside_the_field() {
        let err = parse_ratfunc("w+t", f2()).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnknownSymbol('w'));
        let gf4 = BinaryField::new(2).unwrap();
        let err = parse_ratfunc("z*t", gf4).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnknownSymbol('z'));
    }

    #[test]
    fn division_by_zero_is_reported_at_the_operator() {
        let err = parse_ratfunc("1/(t+t)", f2()).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::DivisionByZero);
        assert_eq!(err.pos, 1);
    }

    /// parse ∘ print is the identity on canonical forms.
    #[test]
    fn print_parse_round_trip_on_random_values() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x1eaf);
        for _ in 0..500 {
            let m = *[1usize, 2, 3, 4].get(rng.gen_range(0..4)).unwrap();
            let field = BinaryField::new(m).unwrap();
            let rand_poly = |rng: &mut ChaCha8Rng, allow_zero: bool| loop {
                let deg = rng.gen_range(0..=6);
                let coeffs: Vec<_> = (0..=deg)
                    .map(|_| field.element(rng.gen_range(0..field.order()) as u32))
                    .collect();
                let p = Poly::from_coeffs(field, coeffs);
                if allow_zero || !p.is_zero() {
                    return p;
                }
            };
            let num = rand_poly(&mut rng, true);
            let den = rand_poly(&mut rng, false);
            let f = RatFunc::new(num, den).unwrap();
            let printed = f.to_string();
            let reparsed = parse_ratfunc(&printed, field)
                .unwrap_or_else(|e| panic!("failed to reparse {printed:?}: {e}"));
            assert_eq!(reparsed, f, "round trip through {printed:?}");
        }
    }
}
