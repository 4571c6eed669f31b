//! Degree patterns of cone solutions and the affine pieces they cover.
//!
//! For a target degree `d`, a type is a tuple `(e_1, ..., e_n)` of degrees
//! with exactly one index `j` reaching `e_j + a_j = d` and every other entry
//! either `-inf` or strictly below `d - a_i`. Each type carries a matrix
//! `A_T` and a column `B_T` such that the targets representable with exactly
//! that degree pattern are the coordinate vectors in `col(A_T) + B_T`.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::linalg::{self, Matrix, Vector};
use crate::poly::{Degree, Poly};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeTuple {
    // Field order gives the (j, entries) lexicographic order.
    j: usize,
    entries: Vec<Degree>,
    d: usize,
}

impl TypeTuple {
    /// Checked constructor; `j` is recovered from the entries.
    pub fn new(entries: Vec<Degree>, d: usize, degrees: &[usize]) -> Result<Self> {
        if entries.len() != degrees.len() {
            return Err(Error::TypeMismatch);
        }
        let tops: Vec<usize> = (0..entries.len())
            .filter(|&i| degrees[i] <= d && entries[i] == Degree::Finite(d - degrees[i]))
            .collect();
        let [j] = tops[..] else {
            return Err(Error::TypeMismatch);
        };
        let ty = TypeTuple { j, entries, d };
        ty.validate(degrees)?;
        Ok(ty)
    }

    pub fn entries(&self) -> &[Degree] {
        &self.entries
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// The distinguished index reaching the top degree (0-based).
    pub fn j(&self) -> usize {
        self.j
    }

    /// Indices with positive degree.
    pub fn r_set(&self) -> Vec<usize> {
        (0..self.entries.len())
            .filter(|&i| matches!(self.entries[i], Degree::Finite(e) if e > 0))
            .collect()
    }

    /// Indices with degree zero.
    pub fn s_set(&self) -> Vec<usize> {
        (0..self.entries.len())
            .filter(|&i| self.entries[i] == Degree::Finite(0))
            .collect()
    }

    /// `sum max(e_i, 0)`, the number of free coefficients.
    pub fn index(&self) -> usize {
        self.entries.iter().map(|e| e.clamp_zero()).sum()
    }

    pub fn validate(&self, degrees: &[usize]) -> Result<()> {
        let n = degrees.len();
        if self.entries.len() != n || self.j >= n || degrees[self.j] > self.d {
            return Err(Error::TypeMismatch);
        }
        for (i, (&e, &a)) in self.entries.iter().zip(degrees).enumerate() {
            let ok = if i == self.j {
                e == Degree::Finite(self.d - a)
            } else {
                match e {
                    Degree::NegInf => true,
                    Degree::Finite(e) => e + a < self.d,
                }
            };
            if !ok {
                return Err(Error::TypeMismatch);
            }
        }
        Ok(())
    }
}

impl fmt::Display for TypeTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Lazy enumeration of all types for degree `d`, ordered by `(j, entries)`
/// with `-inf` below every integer.
pub struct TypeIter {
    d: usize,
    degrees: Vec<usize>,
    j: usize,
    // Per-position option lists for the current j and an odometer over them.
    options: Vec<Vec<Degree>>,
    digits: Vec<usize>,
    started: bool,
}

impl TypeIter {
    fn options_for(&self, j: usize) -> Vec<Vec<Degree>> {
        self.degrees
            .iter()
            .enumerate()
            .map(|(i, &a)| {
                if i == j {
                    vec![Degree::Finite(self.d - a)]
                } else {
                    let top = self.d.saturating_sub(a);
                    std::iter::once(Degree::NegInf)
                        .chain((0..top).map(Degree::Finite))
                        .collect()
                }
            })
            .collect()
    }

    /// Move to the next valid `j` at or after `from`; false when exhausted.
    fn seek_j(&mut self, from: usize) -> bool {
        let next = (from..self.degrees.len()).find(|&j| self.degrees[j] <= self.d);
        match next {
            Some(j) => {
                self.j = j;
                self.options = self.options_for(j);
                self.digits = vec![0; self.degrees.len()];
                true
            }
            None => {
                self.j = self.degrees.len();
                false
            }
        }
    }
}

impl Iterator for TypeIter {
    type Item = TypeTuple;

    fn next(&mut self) -> Option<TypeTuple> {
        if !self.started {
            self.started = true;
            if !self.seek_j(0) {
                return None;
            }
        } else {
            if self.j >= self.degrees.len() {
                return None;
            }
            // Advance the odometer, last position least significant.
            let mut pos = self.degrees.len();
            loop {
                if pos == 0 {
                    if !self.seek_j(self.j + 1) {
                        return None;
                    }
                    break;
                }
                pos -= 1;
                self.digits[pos] += 1;
                if self.digits[pos] < self.options[pos].len() {
                    break;
                }
                self.digits[pos] = 0;
            }
        }
        let entries = self
            .digits
            .iter()
            .zip(&self.options)
            .map(|(&k, opts)| opts[k])
            .collect();
        Some(TypeTuple {
            j: self.j,
            entries,
            d: self.d,
        })
    }
}

pub fn enumerate_types(d: usize, degrees: &[usize]) -> TypeIter {
    TypeIter {
        d,
        degrees: degrees.to_vec(),
        j: 0,
        options: Vec::new(),
        digits: Vec::new(),
        started: false,
    }
}

/// `|T_d|` in closed form, saturating at `u64::MAX`.
pub fn count_types(d: usize, degrees: &[usize]) -> u64 {
    let mut total = 0u64;
    for (j, &aj) in degrees.iter().enumerate() {
        if aj > d {
            continue;
        }
        let prod = degrees
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != j)
            .fold(1u64, |acc, (_, &a)| {
                acc.saturating_mul(d.saturating_sub(a) as u64 + 1)
            });
        total = total.saturating_add(prod);
    }
    total
}

/// Degrees of a list of nonzero polynomials.
pub fn degrees_of(polys: &[Poly]) -> Vec<usize> {
    polys
        .iter()
        .map(|p| p.deg().expect("nonzero polynomial"))
        .collect()
}

/// The `(d+1) x (e+1)` matrix whose column `j` is the coordinate vector of
/// `A t^{e-j}` (0-based `j`).
pub fn build_mi(a: &Poly, e: usize, d: usize) -> Result<Matrix> {
    let da = a.deg().ok_or(Error::TypeMismatch)?;
    if e + da > d {
        return Err(Error::DegreeOverflow {
            degree: e + da,
            dim: d + 1,
        });
    }
    let cols = (0..=e)
        .map(|j| a.shift(e - j).to_vector(d))
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_columns(a.field(), d + 1, &cols)
}

/// `(A_T, B_T)` for one type, with the rank of `A_T` computed on demand.
#[derive(Debug)]
pub struct AffinePiece {
    ty: TypeTuple,
    a_t: Matrix,
    b_t: Vector,
    rank: OnceLock<usize>,
}

impl AffinePiece {
    pub fn ty(&self) -> &TypeTuple {
        &self.ty
    }

    pub fn a_t(&self) -> &Matrix {
        &self.a_t
    }

    pub fn b_t(&self) -> &[FieldElement] {
        &self.b_t
    }

    pub fn rank(&self) -> usize {
        *self.rank.get_or_init(|| linalg::rank(&self.a_t))
    }

    /// Coefficients `xi` with `A_T xi + B_T = v`, free variables zero, or
    /// `None` when `v` lies outside the piece.
    pub fn locate(&self, v: &[FieldElement]) -> Result<Option<Vector>> {
        if v.len() != self.b_t.len() {
            return Err(Error::Shape("target vector length".into()));
        }
        let rhs: Vector = v.iter().zip(&self.b_t).map(|(x, b)| x - b).collect();
        linalg::solve(&self.a_t, &rhs)
    }
}

pub fn build_piece(ty: &TypeTuple, polys: &[Poly], d: usize) -> Result<AffinePiece> {
    let field = polys
        .first()
        .ok_or(Error::TooFewPolynomials)?
        .field()
        .clone();
    let degrees = polys
        .iter()
        .map(|p| p.deg().ok_or(Error::TypeMismatch))
        .collect::<Result<Vec<_>>>()?;
    if ty.d != d {
        return Err(Error::TypeMismatch);
    }
    ty.validate(&degrees)?;
    let mut b_t = vec![field.zero(); d + 1];
    let add_into = |acc: &mut Vector, v: &[FieldElement]| {
        for (a, x) in acc.iter_mut().zip(v) {
            *a = &*a + x;
        }
    };
    for i in ty.s_set() {
        add_into(&mut b_t, &polys[i].to_vector(d)?);
    }
    let r = ty.r_set();
    let a_t = if r.is_empty() {
        Matrix::zeros(&field, d + 1, 1)
    } else {
        let mut blocks = Vec::with_capacity(r.len());
        for &i in &r {
            let e = ty.entries[i].clamp_zero();
            let m = build_mi(&polys[i], e, d)?;
            add_into(&mut b_t, &m.column(0));
            let rest: Vec<Vector> = (1..=e).map(|c| m.column(c)).collect();
            blocks.push(Matrix::from_columns(&field, d + 1, &rest)?);
        }
        Matrix::hstack(&blocks)?
    };
    Ok(AffinePiece {
        ty: ty.clone(),
        a_t,
        b_t,
        rank: OnceLock::new(),
    })
}
