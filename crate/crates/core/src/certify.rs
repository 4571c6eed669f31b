//! Explicit counter-examples at the Frobenius degree.
//!
//! At `d = g` every piece `A_T` has rank below `d`, so each piece lies in an
//! affine hyperplane `n_T . w = n_T . B_T` of the monic slice `e . w = 1`.
//! A line through the slice that leaves one plane and avoids the finitely
//! many crossing points with the others yields an unreachable target.

use crate::error::{Error, Result};
use crate::field::{random_element, Field, FieldElement};
use crate::linalg::{augmented_rank, dot, nullspace, Vector};
use crate::poly::Poly;
use crate::rng::DetRng;
use crate::solver::{check_characteristic, check_inputs, solve_for};
use crate::typespace::{
    build_piece, count_types, degrees_of, enumerate_types, AffinePiece, TypeTuple,
};

/// Sampling attempts before giving up on a point off every plane.
const MAX_DRAWS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneCert {
    pub ty: TypeTuple,
    /// Normal with first coordinate zero and first nonzero coordinate one.
    pub normal: Vector,
    pub b_t: Vector,
    /// `normal . b_t`.
    pub rhs: FieldElement,
}

fn unit(field: &Field, len: usize) -> Vector {
    let mut e = vec![field.zero(); len];
    e[0] = field.one();
    e
}

/// Canonical normal of the hyperplane containing a rank-deficient piece.
pub fn normal_vector(piece: &AffinePiece) -> Result<PlaneCert> {
    let d = piece.ty().d();
    if piece.rank() >= d {
        return Err(Error::RankTooHigh);
    }
    let basis = nullspace(&piece.a_t().transpose());
    let mut n = basis
        .into_iter()
        .find(|v| v[1..].iter().any(|x| !x.is_zero()))
        .ok_or(Error::RankTooHigh)?;
    let field = piece.a_t().field().clone();
    n[0] = field.zero();
    let lead = n.iter().find(|x| !x.is_zero()).unwrap().inv()?;
    let normal: Vector = n.iter().map(|x| x * &lead).collect();
    let rhs = dot(&normal, piece.b_t());
    Ok(PlaneCert {
        ty: piece.ty().clone(),
        normal,
        b_t: piece.b_t().to_vec(),
        rhs,
    })
}

/// Planes that differ from `u`'s within the monic slice.
pub fn dedup_planes(certs: &[PlaneCert], u: &PlaneCert) -> Result<Vec<PlaneCert>> {
    let field = u.rhs.field().clone();
    let e = (unit(&field, u.normal.len()), field.one());
    let base = (u.normal.clone(), u.rhs.clone());
    let mut kept = Vec::new();
    for c in certs {
        let system = [e.clone(), base.clone(), (c.normal.clone(), c.rhs.clone())];
        if augmented_rank(&field, &system)? == 3 {
            kept.push(c.clone());
        }
    }
    Ok(kept)
}

/// `n . (w - b)`.
fn offset(cert: &PlaneCert, w: &[FieldElement]) -> FieldElement {
    let diff: Vector = w.iter().zip(&cert.b_t).map(|(x, b)| x - b).collect();
    dot(&cert.normal, &diff)
}

/// Draws from the field; over the rationals the integer range doubles with
/// every call.
struct Sampler<'a> {
    field: &'a Field,
    bound: u64,
}

impl Sampler<'_> {
    fn draw(&mut self, rng: &mut DetRng) -> FieldElement {
        let x = random_element(self.field, rng, self.bound);
        if !self.field.is_finite() {
            self.bound = self.bound.saturating_mul(2);
        }
        x
    }
}

/// Monic polynomial of degree `d` with no cone representation, where `d` is
/// the Frobenius degree of `polys`.
pub fn counter_example(polys: &[Poly], d: usize, rng: &mut DetRng) -> Result<Poly> {
    let field = check_inputs(polys)?;
    check_characteristic(&field, polys.len())?;
    if let Some(i) = polys.iter().position(Poly::is_constant) {
        return Err(Error::ConstantInput(i));
    }
    let degrees = degrees_of(polys);
    let count = count_types(d, &degrees);
    if !field.exceeds(count) {
        return Err(Error::FieldTooSmall {
            degree: d,
            types: count,
            size: field.size().unwrap_or(u64::MAX),
        });
    }
    let certs = enumerate_types(d, &degrees)
        .map(|ty| normal_vector(&build_piece(&ty, polys, d)?))
        .collect::<Result<Vec<_>>>()?;

    let candidate = match certs.split_first() {
        // Nothing of degree d is reachable.
        None => Poly::monomial(field.one(), d),
        Some((u_cert, rest)) => line_sweep(&field, d, u_cert, &dedup_planes(rest, u_cert)?, rng)?,
    };
    if solve_for(&candidate, polys)?.is_some() {
        return Err(Error::VerificationFailed(format!(
            "{candidate} is representable"
        )));
    }
    Ok(candidate)
}

fn line_sweep(
    field: &Field,
    d: usize,
    u_cert: &PlaneCert,
    kept: &[PlaneCert],
    rng: &mut DetRng,
) -> Result<Poly> {
    let pivot = u_cert
        .normal
        .iter()
        .position(|x| !x.is_zero())
        .expect("nonzero normal");
    let mut sampler = Sampler { field, bound: 4 };

    // u on U's plane inside the monic slice, off every kept plane.
    let mut u = None;
    for _ in 0..MAX_DRAWS {
        let mut w = vec![field.zero(); d + 1];
        w[0] = field.one();
        for (i, slot) in w.iter_mut().enumerate().skip(1) {
            if i != pivot {
                *slot = sampler.draw(rng);
            }
        }
        let partial = dot(&u_cert.normal, &w);
        w[pivot] = &u_cert.rhs - &partial;
        if kept.iter().all(|c| !offset(c, &w).is_zero()) {
            u = Some(w);
            break;
        }
    }
    let u =
        u.ok_or_else(|| Error::VerificationFailed("no admissible point on the base plane".into()))?;
    debug_assert!(offset(u_cert, &u).is_zero());

    // v in the slice, one unit off U's plane.
    let mut v = vec![field.zero(); d + 1];
    v[0] = field.one();
    v[pivot] = &u_cert.rhs + &field.one();
    let direction: Vector = v.iter().zip(&u).map(|(a, b)| a - b).collect();

    // w = u + beta (v - u) meets plane T exactly at beta = -n.(u - B) / n.(v - u).
    let mut gamma = vec![field.zero()];
    for c in kept {
        let slope = dot(&c.normal, &direction);
        if !slope.is_zero() {
            gamma.push(-(&offset(c, &u) / &slope));
        }
    }
    let mut beta = None;
    for _ in 0..MAX_DRAWS {
        let b = sampler.draw(rng);
        if !gamma.contains(&b) {
            beta = Some(b);
            break;
        }
    }
    let beta =
        beta.ok_or_else(|| Error::VerificationFailed("no admissible line parameter".into()))?;
    let w: Vector = u
        .iter()
        .zip(&direction)
        .map(|(a, dir)| a + &(&beta * dir))
        .collect();
    if offset(u_cert, &w) != beta || kept.iter().any(|c| offset(c, &w).is_zero()) {
        return Err(Error::VerificationFailed(
            "line point lies on a plane".into(),
        ));
    }
    Ok(Poly::from_vector(field, &w))
}
