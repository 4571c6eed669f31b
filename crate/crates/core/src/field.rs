//! Exact arithmetic over the rationals, prime fields and their extensions.
//!
//! A [`Field`] is a cheap, shareable handle on a field descriptor. Every
//! [`FieldElement`] carries its field, so mixing elements of different fields
//! is detected at run time. The `checked_*` methods report the mismatch as an
//! [`Error`]; the operator impls panic instead and are meant for code paths
//! where all operands provably come from one field.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Largest characteristic accepted; keeps products of residues inside `u128`
/// comfortably and trial-division primality cheap.
pub const MAX_CHARACTERISTIC: u64 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    Prime {
        p: u64,
    },
    /// `F_p[u] / (modulus)`, modulus stored ascending, monic, of length `degree + 1`.
    Extension {
        p: u64,
        degree: usize,
        modulus: Vec<u64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cardinality {
    Finite(u64),
    Infinite,
}

#[derive(Clone)]
pub struct Field(Arc<FieldKind>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::Prime { p } => write!(f, "F{p}"),
            FieldKind::Extension { p, degree, .. } => write!(f, "F{p}^{degree}"),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl Field {
    pub fn rationals() -> Self {
        Field(Arc::new(FieldKind::Rationals))
    }

    pub fn prime(p: u64) -> Result<Self> {
        if p > MAX_CHARACTERISTIC {
            return Err(Error::InvalidField(format!("characteristic {p} too large")));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field(Arc::new(FieldKind::Prime { p })))
    }

    /// `F_{p^k}` with the modulus chosen by [`find_irreducible`]. `k = 1`
    /// yields the prime field.
    pub fn extension(p: u64, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidField(
                "extension degree must be positive".into(),
            ));
        }
        if k == 1 {
            return Self::prime(p);
        }
        Self::prime(p)?;
        check_size(p, k)?;
        let modulus = find_irreducible(p, k);
        Ok(Field(Arc::new(FieldKind::Extension {
            p,
            degree: k,
            modulus,
        })))
    }

    /// `F_p[u]/(modulus)` for an explicit ascending coefficient list.
    pub fn extension_with_modulus(p: u64, modulus: Vec<u64>) -> Result<Self> {
        Self::prime(p)?;
        if modulus.len() < 3 || *modulus.last().unwrap() != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::ReducibleModulus);
        }
        let k = modulus.len() - 1;
        check_size(p, k)?;
        if !is_irreducible(p, &modulus) {
            return Err(Error::ReducibleModulus);
        }
        Ok(Field(Arc::new(FieldKind::Extension {
            p,
            degree: k,
            modulus,
        })))
    }

    pub fn kind(&self) -> &FieldKind {
        &self.0
    }

    pub fn characteristic(&self) -> u64 {
        match *self.0 {
            FieldKind::Rationals => 0,
            FieldKind::Prime { p } | FieldKind::Extension { p, .. } => p,
        }
    }

    pub fn cardinality(&self) -> Cardinality {
        match &*self.0 {
            FieldKind::Rationals => Cardinality::Infinite,
            FieldKind::Prime { p } => Cardinality::Finite(*p),
            FieldKind::Extension { p, degree, .. } => Cardinality::Finite(p.pow(*degree as u32)),
        }
    }

    /// Number of elements, `None` for the rationals.
    pub fn size(&self) -> Option<u64> {
        match self.cardinality() {
            Cardinality::Finite(q) => Some(q),
            Cardinality::Infinite => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.size().is_some()
    }

    /// `|k| > count`.
    pub fn exceeds(&self, count: u64) -> bool {
        self.size().is_none_or(|q| q > count)
    }

    pub fn zero(&self) -> FieldElement {
        let value = match &*self.0 {
            FieldKind::Rationals => Value::Rational(BigRational::zero()),
            FieldKind::Prime { .. } => Value::Residue(0),
            FieldKind::Extension { degree, .. } => Value::Ext(vec![0; *degree].into()),
        };
        FieldElement {
            field: self.clone(),
            value,
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        let value = match &*self.0 {
            FieldKind::Rationals => Value::Rational(BigRational::from_integer(n.into())),
            FieldKind::Prime { p } => Value::Residue(reduce_i64(n, *p)),
            FieldKind::Extension { p, degree, .. } => {
                let mut c = vec![0; *degree];
                c[0] = reduce_i64(n, *p);
                Value::Ext(c.into())
            }
        };
        FieldElement {
            field: self.clone(),
            value,
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElement {
        match &*self.0 {
            FieldKind::Rationals => FieldElement {
                field: self.clone(),
                value: Value::Rational(BigRational::from_integer(n.clone())),
            },
            FieldKind::Prime { p } | FieldKind::Extension { p, .. } => {
                let r = n.mod_floor(&BigInt::from(*p)).to_i64().unwrap();
                self.from_i64(r)
            }
        }
    }

    /// Image of a rational number; fails when the denominator vanishes in
    /// positive characteristic.
    pub fn from_rational(&self, r: &BigRational) -> Result<FieldElement> {
        let num = self.from_bigint(r.numer());
        let den = self.from_bigint(r.denom());
        num.checked_div(&den)
    }

    /// The generator `u` of an extension field.
    pub fn generator(&self) -> Option<FieldElement> {
        match &*self.0 {
            FieldKind::Extension { degree, .. } => {
                let mut c = vec![0; *degree];
                c[1] = 1;
                Some(FieldElement {
                    field: self.clone(),
                    value: Value::Ext(c.into()),
                })
            }
            _ => None,
        }
    }

    /// Element with the given coefficients in the generator (extension fields)
    /// or the given residue (prime fields).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement> {
        match &*self.0 {
            FieldKind::Rationals => Err(Error::FieldMismatch),
            FieldKind::Prime { p } => {
                if coeffs.iter().skip(1).any(|&c| c % p != 0) {
                    return Err(Error::FieldMismatch);
                }
                Ok(self.from_i64((coeffs.first().copied().unwrap_or(0) % p) as i64))
            }
            FieldKind::Extension { p, degree, modulus } => {
                let mut c: Vec<u64> = coeffs.iter().map(|&x| x % p).collect();
                reduce_ext(&mut c, modulus, *p);
                c.resize(*degree, 0);
                Ok(FieldElement {
                    field: self.clone(),
                    value: Value::Ext(c.into()),
                })
            }
        }
    }

    /// Inverse of [`FieldElement::to_index`] for finite fields.
    pub fn from_index(&self, mut idx: u64) -> Option<FieldElement> {
        let q = self.size()?;
        if idx >= q {
            return None;
        }
        match &*self.0 {
            FieldKind::Prime { .. } => Some(self.from_i64(idx as i64)),
            FieldKind::Extension { p, degree, .. } => {
                let mut c = vec![0; *degree];
                for slot in c.iter_mut() {
                    *slot = idx % p;
                    idx /= p;
                }
                Some(FieldElement {
                    field: self.clone(),
                    value: Value::Ext(c.into()),
                })
            }
            FieldKind::Rationals => None,
        }
    }

    /// All elements of a finite field in index order.
    pub fn elements(&self) -> Option<impl Iterator<Item = FieldElement> + '_> {
        let q = self.size()?;
        Some((0..q).map(move |i| self.from_index(i).unwrap()))
    }

    /// Image of `x` under the inclusion of its field into `self`.
    pub fn embed(&self, x: &FieldElement) -> Result<FieldElement> {
        if x.field == *self {
            return Ok(x.clone());
        }
        match (&*x.field.0, &*self.0, &x.value) {
            (
                FieldKind::Prime { p: a },
                FieldKind::Extension { p: b, degree, .. },
                Value::Residue(r),
            ) if a == b => {
                let mut c = vec![0; *degree];
                c[0] = *r;
                Ok(FieldElement {
                    field: self.clone(),
                    value: Value::Ext(c.into()),
                })
            }
            _ => Err(Error::FieldMismatch),
        }
    }
}

fn check_size(p: u64, k: usize) -> Result<()> {
    let fits = u32::try_from(k)
        .ok()
        .and_then(|k| p.checked_pow(k))
        .is_some();
    if fits {
        Ok(())
    } else {
        Err(Error::InvalidField(format!("F{p}^{k} is too large")))
    }
}

fn reduce_i64(n: i64, p: u64) -> u64 {
    n.rem_euclid(p as i64) as u64
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Reduce an ascending coefficient vector modulo a monic polynomial over F_p.
fn reduce_ext(c: &mut Vec<u64>, modulus: &[u64], p: u64) {
    let k = modulus.len() - 1;
    while c.len() > k {
        let top = c.pop().unwrap();
        if top == 0 {
            continue;
        }
        let shift = c.len() - k;
        for (i, &m) in modulus[..k].iter().enumerate() {
            let sub = mulmod(top, m, p);
            c[shift + i] = (c[shift + i] + p - sub) % p;
        }
    }
}

/// Remainder of `a` modulo the monic `b` over F_p, ascending coefficients.
fn fp_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    reduce_ext(&mut r, b, p);
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

/// Exhaustive trial division by every monic polynomial of degree `1..=k/2`.
pub fn is_irreducible(p: u64, modulus: &[u64]) -> bool {
    let k = modulus.len() - 1;
    for deg in 1..=k / 2 {
        let count = p.pow(deg as u32);
        for idx in 0..count {
            let mut div = Vec::with_capacity(deg + 1);
            let mut rest = idx;
            for _ in 0..deg {
                div.push(rest % p);
                rest /= p;
            }
            div.push(1);
            if fp_rem(modulus, &div, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest monic irreducible polynomial of degree `k` over
/// `F_p`, ordered by its coefficient sequence from `u^{k-1}` down to `u^0`.
/// Returned in ascending order (`modulus[i]` is the coefficient of `u^i`).
pub fn find_irreducible(p: u64, k: usize) -> Vec<u64> {
    assert!(k >= 1, "degree must be positive");
    let mut lower = vec![0u64; k];
    loop {
        let mut cand = lower.clone();
        cand.push(1);
        if is_irreducible(p, &cand) {
            return cand;
        }
        // Increment with u^{k-1} as the most significant digit and u^0 least.
        let mut i = 0;
        loop {
            lower[i] += 1;
            if lower[i] < p {
                break;
            }
            lower[i] = 0;
            i += 1;
            assert!(i < k, "no irreducible polynomial found");
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Value {
    Rational(BigRational),
    Residue(u64),
    Ext(Box<[u64]>),
}

#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    value: Value,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.field == other.field
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.value.hash(state);
    }
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Rational(r) => r.is_zero(),
            Value::Residue(r) => *r == 0,
            Value::Ext(c) => c.iter().all(|&x| x == 0),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            Value::Rational(r) => r.is_one(),
            Value::Residue(r) => *r == 1,
            Value::Ext(c) => c[0] == 1 && c[1..].iter().all(|&x| x == 0),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.value {
            Value::Rational(r) => Some(r),
            _ => None,
        }
    }

    /// Coefficients over `F_p`: the residue for prime fields, the generator
    /// coefficients (ascending) for extensions.
    pub fn coeffs(&self) -> Option<Vec<u64>> {
        match &self.value {
            Value::Rational(_) => None,
            Value::Residue(r) => Some(vec![*r]),
            Value::Ext(c) => Some(c.to_vec()),
        }
    }

    /// Position of the element in `0..q` for finite fields.
    pub fn to_index(&self) -> Option<u64> {
        match (&self.value, self.field.kind()) {
            (Value::Residue(r), _) => Some(*r),
            (Value::Ext(c), FieldKind::Extension { p, .. }) => {
                Some(c.iter().rev().fold(0u64, |acc, &x| acc * p + x))
            }
            _ => None,
        }
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn with(&self, value: Value) -> Self {
        FieldElement {
            field: self.field.clone(),
            value,
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let v = match (&self.value, &other.value, self.field.kind()) {
            (Value::Rational(a), Value::Rational(b), _) => Value::Rational(a + b),
            (Value::Residue(a), Value::Residue(b), FieldKind::Prime { p }) => {
                Value::Residue((a + b) % p)
            }
            (Value::Ext(a), Value::Ext(b), FieldKind::Extension { p, .. }) => {
                Value::Ext(a.iter().zip(b.iter()).map(|(x, y)| (x + y) % p).collect())
            }
            _ => unreachable!("value does not match field kind"),
        };
        Ok(self.with(v))
    }

    pub fn neg(&self) -> Self {
        let v = match (&self.value, self.field.kind()) {
            (Value::Rational(a), _) => Value::Rational(-a),
            (Value::Residue(a), FieldKind::Prime { p }) => Value::Residue((p - a) % p),
            (Value::Ext(a), FieldKind::Extension { p, .. }) => {
                Value::Ext(a.iter().map(|x| (p - x) % p).collect())
            }
            _ => unreachable!("value does not match field kind"),
        };
        self.with(v)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let v = match (&self.value, &other.value, self.field.kind()) {
            (Value::Rational(a), Value::Rational(b), _) => Value::Rational(a * b),
            (Value::Residue(a), Value::Residue(b), FieldKind::Prime { p }) => {
                Value::Residue(mulmod(*a, *b, *p))
            }
            (Value::Ext(a), Value::Ext(b), FieldKind::Extension { p, modulus, .. }) => {
                let k = a.len();
                let mut prod = vec![0u64; 2 * k - 1];
                for (i, &x) in a.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for (j, &y) in b.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + mulmod(x, y, *p)) % p;
                    }
                }
                reduce_ext(&mut prod, modulus, *p);
                Value::Ext(prod.into())
            }
            _ => unreachable!("value does not match field kind"),
        };
        Ok(self.with(v))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match (&self.value, self.field.kind()) {
            (Value::Rational(a), _) => self.with(Value::Rational(a.recip())),
            (Value::Residue(a), FieldKind::Prime { p }) => {
                self.with(Value::Residue(powmod(*a, p - 2, *p)))
            }
            (Value::Ext(_), FieldKind::Extension { .. }) => {
                let q = self.field.size().unwrap();
                self.pow(q - 2)
            }
            _ => unreachable!("value does not match field kind"),
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        self.checked_mul(&other.inv()?)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Value::Residue(r) => write!(f, "{r}"),
            Value::Ext(c) => {
                let mut first = true;
                for (i, &x) in c.iter().enumerate().rev() {
                    if x == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, "+")?;
                    }
                    first = false;
                    match (i, x) {
                        (0, _) => write!(f, "{x}")?,
                        (1, 1) => write!(f, "u")?,
                        (1, _) => write!(f, "{x}*u")?,
                        (_, 1) => write!(f, "u^{i}")?,
                        _ => write!(f, "{x}*u^{i}")?,
                    }
                }
                if first {
                    write!(f, "0")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a> $tr<&'a FieldElement> for &'a FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &'a FieldElement) -> FieldElement {
                self.$checked(rhs)
                    .expect(concat!("FieldElement::", stringify!($method)))
            }
        }
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &'a FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(self)
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(&self)
    }
}

/// Uniform element of a finite field; over the rationals a uniform integer in
/// `[-bound, bound]`.
pub fn random_element<R: Rng + ?Sized>(field: &Field, rng: &mut R, bound: u64) -> FieldElement {
    match field.size() {
        Some(q) => field.from_index(rng.gen_range(0..q)).unwrap(),
        None => {
            let b = bound.min(i64::MAX as u64) as i64;
            field.from_i64(rng.gen_range(-b..=b))
        }
    }
}

/// Signed magnitude helper used by formatting code elsewhere.
pub(crate) fn is_negative(x: &FieldElement) -> bool {
    x.as_rational().is_some_and(|r| r.is_negative())
}
