//! Polynomial text grammar.
//!
//! A polynomial is a sum of terms `[sign] [coeff] ['z' ['^' exp]]` with integer
//! coefficients and exponents. Whitespace is ignored anywhere and an optional
//! `*` may separate a coefficient from `z`. Repeated exponents are summed.
//! Ascending coefficient lists such as `[1, 0, -1]` are accepted as well.

use super::{Poly, PolyError};
use crate::scalar::Coeff;

pub fn parse_poly<T: Coeff>(text: &str) -> Result<Poly<T>, PolyError> {
    let chars: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .map(|(i, c)| (i, if c == '\u{2212}' { '-' } else { c }))
        .collect();
    if chars.is_empty() {
        return Err(PolyError::Parse {
            position: 0,
            message: "empty polynomial".into(),
        });
    }
    if chars[0].1 == '[' {
        return parse_coeff_list(text);
    }

    let mut p = Parser {
        chars: &chars,
        pos: 0,
        end: text.len(),
    };
    let mut terms: Vec<T> = Vec::new();
    let mut first = true;
    while !p.done() {
        let negative = match p.peek() {
            Some('+') => {
                p.pos += 1;
                false
            }
            Some('-') => {
                p.pos += 1;
                true
            }
            _ if first => false,
            Some(c) => return Err(p.error(format!("expected '+' or '-', found '{c}'"))),
            None => unreachable!(),
        };
        first = false;

        let coeff_digits = p.digits();
        let has_var = p.peek() == Some('*') || p.peek() == Some('z');
        if p.peek() == Some('*') {
            if coeff_digits.is_none() {
                return Err(p.error("'*' must follow a coefficient".into()));
            }
            p.pos += 1;
            if p.peek() != Some('z') {
                return Err(p.error("expected 'z' after '*'".into()));
            }
        }
        let mut exp = 0usize;
        if has_var {
            p.pos += 1; // 'z'
            exp = 1;
            if p.peek() == Some('^') {
                p.pos += 1;
                let digits = p.digits().ok_or_else(|| p.error("expected exponent after '^'".into()))?;
                exp = digits
                    .parse::<usize>()
                    .map_err(|_| p.error(format!("exponent '{digits}' out of range")))?;
            }
        } else if coeff_digits.is_none() {
            return Err(match p.peek() {
                Some(c) => p.error(format!("unexpected character '{c}'")),
                None => p.error("dangling sign".into()),
            });
        }

        let mut c = match coeff_digits {
            Some(d) => T::from_str_radix(&d, 10).map_err(|_| p.error(format!("bad coefficient '{d}'")))?,
            None => T::one(),
        };
        if negative {
            c = -c;
        }
        if terms.len() <= exp {
            terms.resize(exp + 1, T::zero());
        }
        terms[exp] = terms[exp].clone() + c;

        if let Some(ch) = p.peek() {
            if ch != '+' && ch != '-' {
                return Err(p.error(format!("unexpected character '{ch}'")));
            }
        }
    }
    Ok(Poly::new(terms))
}

/// Parses an ascending coefficient list, `[c0, c1, ...]`.
pub fn parse_coeff_list<T: Coeff>(text: &str) -> Result<Poly<T>, PolyError> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| PolyError::Parse {
            position: 0,
            message: "coefficient list must be enclosed in brackets".into(),
        })?;
    let offset = text.find('[').unwrap_or(0) + 1;
    if inner.trim().is_empty() {
        return Ok(Poly::zero());
    }
    let mut coeffs = Vec::new();
    let mut pos = offset;
    for item in inner.split(',') {
        let t = item.trim().replace('\u{2212}', "-");
        let c = T::from_str_radix(&t, 10).map_err(|_| PolyError::Parse {
            position: pos,
            message: format!("bad coefficient '{t}'"),
        })?;
        coeffs.push(c);
        pos += item.len() + 1;
    }
    Ok(Poly::new(coeffs))
}

/// Ascending coefficient list text, the inverse of [`parse_coeff_list`].
pub fn format_coeff_list<T: Coeff>(p: &Poly<T>) -> String {
    let items: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
    format!("[{}]", items.join(","))
}

struct Parser<'a> {
    chars: &'a [(usize, char)],
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn done(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |&(i, _)| i)
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().map(|&(_, c)| c).collect())
    }

    fn error(&self, message: String) -> PolyError {
        PolyError::Parse {
            position: self.offset(),
            message,
        }
    }
}
