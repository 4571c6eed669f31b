//! Text input: field specifications (`Q`, `F5`, `F5^2`) and polynomial
//! expressions in `t`.
//!
//! The polynomial grammar accepts sums, differences, products (explicit `*`
//! or juxtaposition), non-negative integer powers, division by nonzero
//! constants and parentheses. Integer literals map into the field, so `1/2`
//! is a rational over `Q` and an inverse over `F_p`. Over an extension field
//! the generator is written `u`, e.g. `(u+1)*t + u`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var,
    Gen,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn perr(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
    }
}

fn tokenize(text: &str, var: char, generator: Option<char>) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        i += 1;
        let tok = match c {
            c if c.is_whitespace() => continue,
            '0'..='9' => {
                let mut end = i;
                while end < chars.len() && chars[end].1.is_ascii_digit() {
                    end += 1;
                }
                let stop = chars.get(end).map_or(text.len(), |&(p, _)| p);
                i = end;
                Tok::Num(text[pos..stop].parse().unwrap())
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            c if c == var => Tok::Var,
            c if Some(c) == generator => Tok::Gen,
            c => return Err(perr(pos, format!("unexpected character '{c}'"))),
        };
        out.push((pos, tok));
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    i: usize,
    field: &'a Field,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.i).map(|(_, t)| t.clone());
        self.i += 1;
        t
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let pos = self.pos();
                    let d = self.unary()?;
                    if !d.is_constant() || d.is_zero() {
                        return Err(perr(pos, "division by a zero or non-constant expression"));
                    }
                    let inv = d.coeff(0).inv()?;
                    acc = acc.scale(&inv);
                }
                Some(Tok::Num(_) | Tok::Var | Tok::Gen | Tok::LParen) => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(-self.unary()?)
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let pos = self.pos();
            match self.bump() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n.try_into().map_err(|_| perr(pos, "exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => Err(perr(pos, "expected a non-negative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Num(n)) => Ok(Poly::constant(self.field.from_bigint(&n))),
            Some(Tok::Var) => Ok(Poly::t(self.field)),
            Some(Tok::Gen) => {
                let g = self
                    .field
                    .generator()
                    .ok_or_else(|| perr(pos, "generator 'u' requires an extension field"))?;
                Ok(Poly::constant(g))
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                let close = self.pos();
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(perr(close, "expected ')'")),
                }
            }
            Some(t) => Err(perr(pos, format!("unexpected token {t:?}"))),
            None => Err(perr(pos, "unexpected end of input")),
        }
    }
}

fn parse_in(text: &str, field: &Field, var: char, generator: Option<char>) -> Result<Poly> {
    let toks = tokenize(text, var, generator)?;
    let mut p = Parser {
        toks,
        i: 0,
        field,
        end: text.len(),
    };
    let out = p.expr()?;
    if p.i < p.toks.len() {
        return Err(perr(p.pos(), "trailing input"));
    }
    Ok(out)
}

/// Parse a polynomial in `t` over `field`.
pub fn parse_poly(text: &str, field: &Field) -> Result<Poly> {
    let generator = field.generator().map(|_| 'u');
    parse_in(text, field, 't', generator)
}

/// Parse a comma-separated list; commas inside parentheses do not split.
pub fn parse_poly_list(text: &str, field: &Field) -> Result<Vec<Poly>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text
        .char_indices()
        .chain(std::iter::once((text.len(), ',')))
    {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth <= 0 => {
                let piece = &text[start..i];
                if piece.trim().is_empty() {
                    return Err(perr(start, "empty list entry"));
                }
                out.push(parse_poly(piece, field).map_err(|e| match e {
                    Error::Parse { pos, msg } => Error::Parse {
                        pos: pos + start,
                        msg,
                    },
                    other => other,
                })?);
                start = i + 1;
            }
            _ => {}
        }
    }
    Ok(out)
}

/// Parse `Q`, `F<p>` or `F<p>^<k>`. For extensions an explicit modulus in
/// `u` may be supplied; otherwise the smallest irreducible one is used.
pub fn parse_field(spec: &str, modulus: Option<&str>) -> Result<Field> {
    let s = spec.trim();
    if s == "Q" {
        if modulus.is_some() {
            return Err(Error::InvalidField(
                "a modulus needs an extension field".into(),
            ));
        }
        return Ok(Field::rationals());
    }
    let rest = s
        .strip_prefix('F')
        .ok_or_else(|| Error::InvalidField(format!("unknown field '{s}'")))?;
    let (p_str, k_str) = match rest.split_once('^') {
        Some((p, k)) => (p, Some(k)),
        None => (rest, None),
    };
    let p: u64 = p_str
        .parse()
        .map_err(|_| Error::InvalidField(format!("bad characteristic in '{s}'")))?;
    let k: usize = match k_str {
        Some(k) => k
            .parse()
            .map_err(|_| Error::InvalidField(format!("bad extension degree in '{s}'")))?,
        None => 1,
    };
    match modulus {
        None => Field::extension(p, k),
        Some(m) => {
            if k < 2 {
                return Err(Error::InvalidField(
                    "a modulus needs an extension field".into(),
                ));
            }
            let base = Field::prime(p)?;
            let poly = parse_in(m, &base, 'u', None)?;
            if poly.deg() != Some(k) || !poly.is_monic() {
                return Err(Error::ReducibleModulus);
            }
            let coeffs = poly
                .coeffs()
                .iter()
                .map(|c| c.to_index().unwrap())
                .collect();
            Field::extension_with_modulus(p, coeffs)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn basic_rational() {
        let q = Field::rationals();
        let f = parse_poly("t^2 - 2*t + 1", &q).unwrap();
        assert_eq!(f, Poly::from_i64s(&q, &[1, -2, 1]));
        let g = parse_poly("1/2*t + 1/3", &q).unwrap();
        let half = q
            .from_rational(&BigRational::new(1.into(), 2.into()))
            .unwrap();
        let third = q
            .from_rational(&BigRational::new(1.into(), 3.into()))
            .unwrap();
        assert_eq!(g.coeffs(), &[third, half]);
    }

    #[test]
    fn factored_forms() {
        let q = Field::rationals();
        let f = parse_poly("(t-1)^2", &q).unwrap();
        assert_eq!(f, Poly::from_i64s(&q, &[1, -2, 1]));
        let g = parse_poly("-t^2 + 2t(t+1)", &q).unwrap();
        assert_eq!(g, Poly::from_i64s(&q, &[0, 2, 1]));
        let l = parse_poly_list("(t-1)^7, t^7, (t+1)^7", &q).unwrap();
        assert_eq!(l.len(), 3);
        assert_eq!(l[2].deg(), Some(7));
    }

    #[test]
    fn extension_coefficients() {
        let f25 = parse_field("F5^2", None).unwrap();
        let f = parse_poly("(u+1)*t + u", &f25).unwrap();
        assert_eq!(f.deg(), Some(1));
        assert_eq!(f.to_string(), "(u+1)*t + u");
        assert!(parse_poly("u*t", &Field::prime(5).unwrap()).is_err());
    }

    #[test]
    fn errors_carry_positions() {
        let q = Field::rationals();
        assert!(matches!(
            parse_poly("t + ", &q),
            Err(Error::Parse { pos: 4, .. })
        ));
        assert!(matches!(
            parse_poly("t $ 1", &q),
            Err(Error::Parse { pos: 2, .. })
        ));
        assert!(matches!(parse_poly("1/t", &q), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_poly_list("t, t + )", &q),
            Err(Error::Parse { pos: 7, .. })
        ));
        let f5 = Field::prime(5).unwrap();
        assert_eq!(
            parse_poly("1/5", &f5),
            Err(Error::Parse {
                pos: 2,
                msg: "division by a zero or non-constant expression".into()
            })
        );
    }

    #[test]
    fn field_specs() {
        assert_eq!(parse_field("Q", None).unwrap().to_string(), "Q");
        assert_eq!(parse_field("F7", None).unwrap().size(), Some(7));
        assert_eq!(parse_field("F5^2", None).unwrap().size(), Some(25));
        let f = parse_field("F5^2", Some("u^2+3")).unwrap();
        let u = f.generator().unwrap();
        assert_eq!(&u * &u, f.from_i64(2));
        assert!(parse_field("F5^2", Some("u^2+1")).is_err());
        assert!(parse_field("F6", None).is_err());
        assert!(parse_field("R", None).is_err());
    }
}
