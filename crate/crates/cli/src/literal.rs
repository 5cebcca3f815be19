//! Textual complex literals.
//!
//! ```text
//! complex := real | imag | real sign imag
//! real    := [sign] digits ['.' digits]
//! imag    := [sign] [digits ['.' digits]] 'i'
//! sign    := '+' | '-'
//! ```
//!
//! No whitespace and no exponents. A bare `i` (optionally signed) is `±1i`.

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid complex literal `{input}`: {reason}")]
pub struct LiteralError {
    pub input: String,
    pub reason: &'static str,
}

struct Scanner<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn sign(&mut self) -> Option<f64> {
        match self.peek() {
            Some(b'+') => {
                self.pos += 1;
                Some(1.0)
            }
            Some(b'-') => {
                self.pos += 1;
                Some(-1.0)
            }
            _ => None,
        }
    }

    fn digits(&mut self) -> usize {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        self.pos - start
    }

    /// `digits ['.' digits]`, returned as the matched text.
    fn unsigned(&mut self) -> Result<Option<&'a str>, &'static str> {
        let start = self.pos;
        if self.digits() == 0 {
            return Ok(None);
        }
        if self.peek() == Some(b'.') {
            self.pos += 1;
            if self.digits() == 0 {
                return Err("expected digits after '.'");
            }
        }
        Ok(Some(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii")))
    }

    fn at_end(&self) -> bool {
        self.pos == self.src.len()
    }
}

fn to_f64(text: &str) -> f64 {
    text.parse().expect("grammar admits only valid decimal text")
}

pub fn parse_complex(input: &str) -> Result<Complex64, LiteralError> {
    let fail = |reason| LiteralError { input: input.to_string(), reason };
    let mut sc = Scanner { src: input.as_bytes(), pos: 0 };
    if sc.at_end() {
        return Err(fail("empty literal"));
    }
    let lead = sc.sign().unwrap_or(1.0);
    let first = sc.unsigned().map_err(fail)?;
    match (first, sc.peek()) {
        (None, Some(b'i')) => {
            sc.pos += 1;
            if !sc.at_end() {
                return Err(fail("trailing characters after 'i'"));
            }
            Ok(Complex64::new(0.0, lead))
        }
        (None, _) => Err(fail("expected digits or 'i'")),
        (Some(t), None) => Ok(Complex64::new(lead * to_f64(t), 0.0)),
        (Some(t), Some(b'i')) => {
            sc.pos += 1;
            if !sc.at_end() {
                return Err(fail("trailing characters after 'i'"));
            }
            Ok(Complex64::new(0.0, lead * to_f64(t)))
        }
        (Some(t), Some(b'+' | b'-')) => {
            let re = lead * to_f64(t);
            let joiner = sc.sign().expect("peeked a sign");
            let inner = sc.sign().unwrap_or(1.0);
            let mag = sc.unsigned().map_err(fail)?.map_or(1.0, to_f64);
            if sc.peek() != Some(b'i') {
                return Err(fail("imaginary part must end with 'i'"));
            }
            sc.pos += 1;
            if !sc.at_end() {
                return Err(fail("trailing characters after 'i'"));
            }
            Ok(Complex64::new(re, joiner * inner * mag))
        }
        (Some(_), Some(_)) => Err(fail("unexpected character")),
    }
}

fn clean(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

/// Shortest round-trip text in the literal grammar. Input must be finite.
pub fn format_complex(z: Complex64) -> String {
    let (re, im) = (clean(z.re), clean(z.im));
    if im == 0.0 {
        format!("{re}")
    } else if re == 0.0 {
        format!("{im}i")
    } else {
        let sign = if im < 0.0 { '-' } else { '+' };
        format!("{re}{sign}{}i", im.abs())
    }
}
