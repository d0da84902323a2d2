//! Text syntax for polynomials: parsing and formatting.
//!
//! The grammar, with insignificant whitespace between tokens:
//!
//! ```text
//! polynomial  ::= [sign] term { sign term }
//! term        ::= coefficient [ "*" factors ] | factors
//! factors     ::= factor { "*" factor }
//! factor      ::= "x" index [ "^" exponent ]
//! coefficient ::= rational | "(" [sign] rational ")"
//! rational    ::= integer [ "/" integer ]
//! sign        ::= "+" | "-"
//! ```
//!
//! Variables are `x1` through `xn`, 1-based; the dimension `n` is supplied
//! by the caller and out-of-range indices are rejected. Denominators must be
//! nonzero. Duplicate monomials are summed. The Unicode minus sign (U+2212)
//! is accepted wherever `-` is, since inputs are often pasted from rendered
//! mathematics.
//!
//! Formatting writes terms in ascending total degree and `x1`-major order
//! within a degree, with fractional coefficients parenthesized, e.g.
//! `(1/2)+(1/2)*x1+(1/2)*x2`. Formatting and parsing are mutually inverse:
//! `parse(format(p))` reproduces `p` exactly.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::poly::{MultiIndex, Rational, SparsePolynomial};

/// Syntax error, with the byte offset at which it was detected.
#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

fn fail<T>(position: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { position, message: message.into() })
}

const UNICODE_MINUS: &str = "\u{2212}";

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { bytes: text.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    /// Consumes `+`, `-`, or the Unicode minus sign.
    fn eat_sign(&mut self) -> Option<i32> {
        match self.peek() {
            Some(b'+') => {
                self.pos += 1;
                Some(1)
            }
            Some(b'-') => {
                self.pos += 1;
                Some(-1)
            }
            _ if self.bytes[self.pos..].starts_with(UNICODE_MINUS.as_bytes()) => {
                self.pos += UNICODE_MINUS.len();
                Some(-1)
            }
            _ => None,
        }
    }

    fn eat_digits(&mut self) -> Option<&'a [u8]> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.bytes[start..self.pos])
    }
}

/// Parses `text` as a polynomial in the variables `x1 ... x<dimension>`.
pub fn parse_polynomial(text: &str, dimension: usize) -> Result<SparsePolynomial, ParseError> {
    let mut cur = Cursor::new(text);
    let mut poly = SparsePolynomial::zero(dimension);

    cur.skip_ws();
    if cur.peek().is_none() {
        return fail(cur.pos, "empty polynomial text");
    }
    let mut sign = cur.eat_sign().unwrap_or(1);
    loop {
        let (index, coefficient) = parse_term(&mut cur, dimension)?;
        let signed = if sign < 0 { -coefficient } else { coefficient };
        poly = &poly + &SparsePolynomial::monomial(dimension, index, signed);

        cur.skip_ws();
        match cur.eat_sign() {
            Some(separator) => {
                cur.skip_ws();
                // A term may carry its own sign after the separator.
                sign = separator * cur.eat_sign().unwrap_or(1);
            }
            None => break,
        }
    }
    cur.skip_ws();
    if cur.peek().is_some() {
        return fail(cur.pos, "unexpected trailing input");
    }
    Ok(poly)
}

fn parse_term(cur: &mut Cursor, dimension: usize) -> Result<(MultiIndex, Rational), ParseError> {
    cur.skip_ws();
    let mut exponents = vec![0u32; dimension];
    match cur.peek() {
        Some(b'(') | Some(b'0'..=b'9') => {
            let coefficient = parse_coefficient(cur)?;
            cur.skip_ws();
            if cur.eat(b'*') {
                parse_factors(cur, &mut exponents)?;
            }
            Ok((MultiIndex::new(exponents), coefficient))
        }
        Some(b'x') => {
            parse_factors(cur, &mut exponents)?;
            Ok((MultiIndex::new(exponents), Rational::one()))
        }
        _ => fail(cur.pos, "expected a coefficient or a variable"),
    }
}

fn parse_factors(cur: &mut Cursor, exponents: &mut [u32]) -> Result<(), ParseError> {
    loop {
        parse_factor(cur, exponents)?;
        cur.skip_ws();
        if !cur.eat(b'*') {
            return Ok(());
        }
    }
}

fn parse_factor(cur: &mut Cursor, exponents: &mut [u32]) -> Result<(), ParseError> {
    cur.skip_ws();
    let at = cur.pos;
    if !cur.eat(b'x') {
        return fail(at, "expected a variable like x1");
    }
    let index_at = cur.pos;
    let digits = match cur.eat_digits() {
        Some(d) => d,
        None => return fail(index_at, "expected a variable index after 'x'"),
    };
    let index: usize = match std::str::from_utf8(digits).unwrap().parse() {
        Ok(i) => i,
        Err(_) => return fail(index_at, "variable index out of range"),
    };
    if index == 0 {
        return fail(index_at, "variable indices start at x1");
    }
    if index > exponents.len() {
        return fail(
            index_at,
            format!("variable x{} exceeds dimension {}", index, exponents.len()),
        );
    }

    let mut exponent: u32 = 1;
    cur.skip_ws();
    if cur.eat(b'^') {
        cur.skip_ws();
        let exp_at = cur.pos;
        let digits = match cur.eat_digits() {
            Some(d) => d,
            None => return fail(exp_at, "expected a nonnegative integer exponent"),
        };
        exponent = match std::str::from_utf8(digits).unwrap().parse() {
            Ok(e) => e,
            Err(_) => return fail(exp_at, "exponent out of range"),
        };
    }
    exponents[index - 1] = match exponents[index - 1].checked_add(exponent) {
        Some(e) => e,
        None => return fail(at, "exponent out of range"),
    };
    Ok(())
}

fn parse_coefficient(cur: &mut Cursor) -> Result<Rational, ParseError> {
    cur.skip_ws();
    if cur.eat(b'(') {
        cur.skip_ws();
        let negative = matches!(cur.eat_sign(), Some(-1));
        let value = parse_bare_rational(cur)?;
        cur.skip_ws();
        if !cur.eat(b')') {
            return fail(cur.pos, "expected ')'");
        }
        Ok(if negative { -value } else { value })
    } else {
        parse_bare_rational(cur)
    }
}

fn parse_bare_rational(cur: &mut Cursor) -> Result<Rational, ParseError> {
    cur.skip_ws();
    let at = cur.pos;
    let digits = match cur.eat_digits() {
        Some(d) => d,
        None => return fail(at, "expected an integer"),
    };
    let numer = BigInt::parse_bytes(digits, 10).unwrap();
    cur.skip_ws();
    if cur.eat(b'/') {
        cur.skip_ws();
        let denom_at = cur.pos;
        let digits = match cur.eat_digits() {
            Some(d) => d,
            None => return fail(denom_at, "expected a positive denominator"),
        };
        let denom = BigInt::parse_bytes(digits, 10).unwrap();
        if denom.is_zero() {
            return fail(denom_at, "denominator must be nonzero");
        }
        Ok(Rational::new(numer, denom))
    } else {
        Ok(Rational::from_integer(numer))
    }
}

/// Parses a standalone rational like `2`, `1/2`, or `-3/4`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let mut cur = Cursor::new(text);
    cur.skip_ws();
    if cur.peek().is_none() {
        return fail(cur.pos, "empty rational text");
    }
    let negative = matches!(cur.eat_sign(), Some(-1));
    let value = parse_bare_rational(&mut cur)?;
    cur.skip_ws();
    if cur.peek().is_some() {
        return fail(cur.pos, "unexpected trailing input");
    }
    Ok(if negative { -value } else { value })
}

/// Formats a rational as `a` or `a/b` (reduced, positive denominator).
/// This is the form `parse_rational` reads back.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<(&MultiIndex, &Rational)> = self.terms().collect();
        // Ascending total degree, x1-major within a degree.
        terms.sort_by(|(a, _), (b, _)| {
            a.total_degree()
                .cmp(&b.total_degree())
                .then_with(|| b.exponents().cmp(a.exponents()))
        });
        for (i, (index, coefficient)) in terms.iter().enumerate() {
            let negative = coefficient.is_negative();
            if i == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { "-" } else { "+" })?;
            }
            let magnitude = if negative { -(*coefficient).clone() } else { (*coefficient).clone() };
            write_term(f, index, &magnitude)?;
        }
        Ok(())
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, index: &MultiIndex, magnitude: &Rational) -> fmt::Result {
    let constant = index.is_origin();
    if constant || !magnitude.is_one() {
        if magnitude.denom().is_one() {
            write!(f, "{}", magnitude.numer())?;
        } else {
            write!(f, "({}/{})", magnitude.numer(), magnitude.denom())?;
        }
        if !constant {
            f.write_str("*")?;
        }
    }
    let mut first = true;
    for (axis, &exponent) in index.exponents().iter().enumerate() {
        if exponent == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        write!(f, "x{}", axis + 1)?;
        if exponent > 1 {
            write!(f, "^{}", exponent)?;
        }
    }
    Ok(())
}
