//! Dense univariate polynomials in `t` over a [`Field`].
//!
//! Coefficients are stored ascending (`coeffs[i]` multiplies `t^i`) with no
//! trailing zeros, so the zero polynomial is the empty vector and has degree
//! [`Degree::NegInf`]. The descending coordinate layout used by the linear
//! algebra lives only at the [`Poly::to_vector`] / [`Poly::from_vector`]
//! boundary.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{self, Field, FieldElement};

/// A polynomial degree, with `NegInf` ordered below every integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInf,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(d) => Some(d),
        }
    }

    /// `max(self, 0)` as used by the index of a type.
    pub fn clamp_zero(self) -> usize {
        self.finite().unwrap_or(0)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Clone)]
pub struct Poly {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}

impl Eq for Poly {}

impl Hash for Poly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl Poly {
    pub fn zero(field: &Field) -> Self {
        Poly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &Field) -> Self {
        Self::constant(field.one())
    }

    pub fn constant(c: FieldElement) -> Self {
        let field = c.field().clone();
        Self::from_raw(field, vec![c])
    }

    /// `c * t^n`.
    pub fn monomial(c: FieldElement, n: usize) -> Self {
        let field = c.field().clone();
        let mut coeffs = vec![field.zero(); n];
        coeffs.push(c);
        Self::from_raw(field, coeffs)
    }

    /// The variable `t`.
    pub fn t(field: &Field) -> Self {
        Self::monomial(field.one(), 1)
    }

    /// Build from ascending coefficients, checking that they share `field`.
    pub fn new(field: &Field, coeffs: Vec<FieldElement>) -> Result<Self> {
        if coeffs.iter().any(|c| c.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(Self::from_raw(field.clone(), coeffs))
    }

    /// Build from ascending integer coefficients mapped into `field`.
    pub fn from_i64s(field: &Field, coeffs: &[i64]) -> Self {
        Self::from_raw(
            field.clone(),
            coeffs.iter().map(|&c| field.from_i64(c)).collect(),
        )
    }

    fn from_raw(field: Field, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Ascending coefficients without trailing zeros.
    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInf,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn deg(&self) -> Option<usize> {
        self.degree().finite()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Zero or monic.
    pub fn in_nonneg_cone(&self) -> bool {
        self.is_zero() || self.is_monic()
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Ok(Self::from_raw(self.field.clone(), coeffs))
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.field));
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Ok(Self::from_raw(self.field.clone(), out))
    }

    pub fn scale(&self, c: &FieldElement) -> Poly {
        Self::from_raw(
            self.field.clone(),
            self.coeffs.iter().map(|x| x * c).collect(),
        )
    }

    /// Multiply by `t^n`.
    pub fn shift(&self, n: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::from_raw(self.field.clone(), coeffs)
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut acc = Poly::one(&self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `(q, r)` with `self = q * divisor + r` and `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check(divisor)?;
        let lead_inv = divisor.leading().ok_or(Error::DivisionByZero)?.inv()?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(&self.field), self.clone()));
        }
        let mut quot = vec![self.field.zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (i, b) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = &rem[k + i] - &(&c * b);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((
            Self::from_raw(self.field.clone(), quot),
            Self::from_raw(self.field.clone(), rem),
        ))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Quotient when `divisor` divides `self`, `None` otherwise.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Option<Poly>> {
        let (q, r) = self.divmod(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    pub fn evaluate(&self, x: &FieldElement) -> Result<FieldElement> {
        if x.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        Ok(self
            .coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * x) + c))
    }

    /// Divide by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Coordinates in `k^{d+1}`, highest power first and padded with
    /// `d - deg` leading zeros.
    pub fn to_vector(&self, d: usize) -> Result<Vec<FieldElement>> {
        if let Some(e) = self.deg() {
            if e > d {
                return Err(Error::DegreeOverflow {
                    degree: e,
                    dim: d + 1,
                });
            }
        }
        Ok((0..=d).rev().map(|i| self.coeff(i)).collect())
    }

    pub fn from_vector(field: &Field, v: &[FieldElement]) -> Poly {
        Self::from_raw(field.clone(), v.iter().rev().cloned().collect())
    }

    /// Coefficient-wise image in `target`.
    pub fn embed(&self, target: &Field) -> Result<Poly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| target.embed(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_raw(target.clone(), coeffs))
    }
}

/// Monic greatest common divisor.
pub fn gcd(f: &Poly, g: &Poly) -> Result<Poly> {
    Ok(ext_gcd(f, g)?.0)
}

/// `(d, s, t)` with `d = gcd(f, g)` monic and `s f + t g = d`.
pub fn ext_gcd(f: &Poly, g: &Poly) -> Result<(Poly, Poly, Poly)> {
    f.check(g)?;
    if f.is_zero() && g.is_zero() {
        return Err(Error::UndefinedGcd);
    }
    let field = f.field();
    let (mut r0, mut r1) = (f.clone(), g.clone());
    let (mut s0, mut s1) = (Poly::one(field), Poly::zero(field));
    let (mut t0, mut t1) = (Poly::zero(field), Poly::one(field));
    while !r1.is_zero() {
        let (q, r) = r0.divmod(&r1)?;
        r0 = std::mem::replace(&mut r1, r);
        let s2 = &s0 - &(&q * &s1);
        s0 = std::mem::replace(&mut s1, s2);
        let t2 = &t0 - &(&q * &t1);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let inv = r0.leading().expect("nonzero gcd").inv()?;
    Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
}

/// Monic gcd of a list; the zero polynomials are skipped.
pub fn gcd_all(polys: &[Poly]) -> Result<Poly> {
    let mut it = polys.iter().filter(|p| !p.is_zero());
    let first = it.next().ok_or(Error::UndefinedGcd)?;
    let mut acc = first.monic();
    for p in it {
        acc = gcd(&acc, p)?;
    }
    Ok(acc)
}

/// `(D, G)` with `D = gcd(A_1, ..., A_n)` monic and `sum G_i A_i = D`,
/// by iterating the two-term extended Euclidean algorithm.
pub fn bezout(polys: &[Poly]) -> Result<(Poly, Vec<Poly>)> {
    if polys.len() < 2 {
        return Err(Error::TooFewPolynomials);
    }
    if polys.iter().all(Poly::is_zero) {
        return Err(Error::UndefinedGcd);
    }
    let field = polys[0].field().clone();
    let mut d = Poly::zero(&field);
    let mut coeffs: Vec<Poly> = Vec::with_capacity(polys.len());
    for p in polys {
        if d.is_zero() && p.is_zero() {
            coeffs.push(Poly::zero(&field));
            continue;
        }
        let (g, s, t) = ext_gcd(&d, p)?;
        for c in coeffs.iter_mut() {
            *c = &*c * &s;
        }
        coeffs.push(t);
        d = g;
    }
    debug_assert!(
        {
            let sum = polys
                .iter()
                .zip(&coeffs)
                .fold(Poly::zero(&field), |acc, (a, g)| &acc + &(a * g));
            sum == d
        },
        "Bezout identity failed"
    );
    Ok((d, coeffs))
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a> $tr<&'a Poly> for &'a Poly {
            type Output = Poly;
            fn $method(self, rhs: &'a Poly) -> Poly {
                self.$checked(rhs)
                    .expect(concat!("Poly::", stringify!($method)))
            }
        }
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_raw(self.field.clone(), self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = field::is_negative(c);
            let mag = if negative { -c } else { c.clone() };
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let text = mag.to_string();
            let compound = text.contains('+') || text.contains('-');
            let coef = if compound { format!("({text})") } else { text };
            match i {
                0 => write!(f, "{coef}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{coef}*")?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
