#![allow(dead_code)]

use frobdeg::field::{random_element, Field, FieldElement};
use frobdeg::linalg::{nullspace, rank, Matrix};
use frobdeg::poly::{bezout, gcd, Poly};
use frobdeg::rng::DetRng;
use frobdeg::solver::solve_for;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use rand::Rng;

pub const PROPERTY_CASES: u32 = 1000;

pub fn fields() -> Vec<Field> {
    vec![
        Field::rationals(),
        Field::prime(7).unwrap(),
        Field::extension(5, 2).unwrap(),
        Field::extension(2, 3).unwrap(),
    ]
}

/// Rational `n / d` over Q; the residue of `n` by index otherwise.
pub fn element(field: &Field, n: i64, d: i64) -> FieldElement {
    match field.size() {
        None => &field.from_i64(n) / &field.from_i64(d),
        Some(q) => field.from_index(n.rem_euclid(q as i64) as u64).unwrap(),
    }
}

pub fn poly_from(field: &Field, raw: &[(i64, i64)]) -> Poly {
    Poly::new(
        field,
        raw.iter().map(|&(n, d)| element(field, n, d)).collect(),
    )
    .unwrap()
}

fn raw_coeffs(max_len: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-30i64..30, 1i64..8), 0..max_len)
}

fn run<S: Strategy>(
    strategy: S,
    cases: u32,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let mut runner = TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    });
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

pub fn field_axioms(cases: u32) -> Result<(), String> {
    let fs = fields();
    let e = || (-40i64..40, 1i64..9);
    let s = (0..fs.len(), [e(), e(), e()]);
    run(s, cases, |(fi, raw)| {
        let f = &fs[fi];
        let [a, b, c] = raw.map(|(n, d)| element(f, n, d));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &f.zero(), a.clone());
        prop_assert_eq!(&a * &f.one(), a.clone());
        prop_assert!((&a + &(-&a)).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        } else {
            prop_assert!(a.inv().is_err());
        }
        Ok(())
    })
}

pub fn divmod_identity(cases: u32) -> Result<(), String> {
    let fs = fields();
    let s = (0..fs.len(), raw_coeffs(8), raw_coeffs(5));
    run(s, cases, |(fi, fr, gr)| {
        let f = &fs[fi];
        let (a, b) = (poly_from(f, &fr), poly_from(f, &gr));
        if b.is_zero() {
            prop_assert!(a.divmod(&b).is_err());
            return Ok(());
        }
        let (q, r) = a.divmod(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.degree() < b.degree());
        Ok(())
    })
}

pub fn bezout_identity(cases: u32) -> Result<(), String> {
    let fs = fields();
    let s = (0..fs.len(), prop::collection::vec(raw_coeffs(5), 2..5));
    run(s, cases, |(fi, raws)| {
        let f = &fs[fi];
        let polys: Vec<Poly> = raws.iter().map(|r| poly_from(f, r)).collect();
        if polys.iter().all(Poly::is_zero) {
            prop_assert!(bezout(&polys).is_err());
            return Ok(());
        }
        let (d, g) = bezout(&polys).unwrap();
        let sum = polys
            .iter()
            .zip(&g)
            .fold(Poly::zero(f), |acc, (a, x)| &acc + &(a * x));
        prop_assert_eq!(&sum, &d);
        prop_assert!(d.is_monic());
        for p in &polys {
            prop_assert!(p.rem(&d).unwrap().is_zero());
        }
        if polys.len() == 2 && !polys[0].is_zero() {
            prop_assert_eq!(gcd(&polys[0], &polys[1]).unwrap(), d);
        }
        Ok(())
    })
}

pub fn rank_nullity(cases: u32) -> Result<(), String> {
    let fs = fields();
    let s = (
        0..fs.len(),
        1usize..6,
        1usize..6,
        prop::collection::vec((-3i64..4, 1i64..3), 36),
    );
    run(s, cases, |(fi, rows, cols, raw)| {
        let f = &fs[fi];
        let data: Vec<Vec<FieldElement>> = (0..rows)
            .map(|r| {
                (0..cols)
                    .map(|c| {
                        let (n, d) = raw[r * 6 + c];
                        element(f, n, d)
                    })
                    .collect()
            })
            .collect();
        let m = Matrix::from_rows(f, data).unwrap();
        let r = rank(&m);
        let kernel = nullspace(&m);
        prop_assert_eq!(r + kernel.len(), cols);
        prop_assert_eq!(r, rank(&m.transpose()));
        for v in &kernel {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(FieldElement::is_zero));
        }
        Ok(())
    })
}

pub fn vector_round_trip(cases: u32) -> Result<(), String> {
    let fs = fields();
    let s = (0..fs.len(), raw_coeffs(8), 0usize..4);
    run(s, cases, |(fi, raw, pad)| {
        let f = &fs[fi];
        let p = poly_from(f, &raw);
        let d = p.deg().unwrap_or(0) + pad;
        let v = p.to_vector(d).unwrap();
        prop_assert_eq!(v.len(), d + 1);
        prop_assert_eq!(Poly::from_vector(f, &v), p.clone());
        if let Some(e) = p.deg() {
            if e > 0 {
                prop_assert!(p.to_vector(e - 1).is_err());
            }
        }
        Ok(())
    })
}

/// Monic polynomial of degree `deg` with coefficients drawn by `random_element`.
pub fn random_monic(field: &Field, deg: usize, rng: &mut DetRng, bound: u64) -> Poly {
    let mut c: Vec<FieldElement> = (0..deg)
        .map(|_| random_element(field, rng, bound))
        .collect();
    c.push(field.one());
    Poly::new(field, c).unwrap()
}

/// Representable target built from a random cone combination whose top
/// degree is reached by one index only.
pub fn witness_reverification(cases: u32) -> Result<(), String> {
    let q = Field::rationals();
    let s = (
        prop::collection::vec((1usize..4, raw_coeffs(3)), 2..4),
        0usize..3,
        prop::collection::vec((0u8..3, raw_coeffs(3)), 3),
    );
    run(s, cases, |(specs, extra, xs)| {
        let polys: Vec<Poly> = specs
            .iter()
            .map(|(deg, raw)| {
                let mut c: Vec<FieldElement> = (0..*deg)
                    .map(|i| raw.get(i).map_or(q.zero(), |&(n, d)| element(&q, n, d)))
                    .collect();
                c.push(q.one());
                Poly::new(&q, c).unwrap()
            })
            .collect();
        if !frobdeg::poly::gcd_all(&polys).unwrap().is_one() {
            return Ok(());
        }
        let a0 = polys[0].deg().unwrap();
        let top = a0 + extra;
        // x_0 is monic of degree `extra`; every other x_i stays below top.
        let mut x = Vec::new();
        for (i, a) in polys.iter().enumerate() {
            let (kind, raw) = &xs[i.min(2)];
            let xi = if i == 0 {
                let mut c: Vec<FieldElement> = (0..extra)
                    .map(|k| raw.get(k).map_or(q.zero(), |&(n, d)| element(&q, n, d)))
                    .collect();
                c.push(q.one());
                Poly::new(&q, c).unwrap()
            } else {
                let room = top.checked_sub(a.deg().unwrap()).filter(|&r| r > 0);
                match (kind, room) {
                    (0, _) | (_, None) => Poly::zero(&q),
                    (1, _) => Poly::one(&q),
                    (_, Some(r)) => {
                        let deg = (raw.len()).min(r - 1);
                        let mut c: Vec<FieldElement> =
                            (0..deg).map(|k| element(&q, raw[k].0, raw[k].1)).collect();
                        c.push(q.one());
                        Poly::new(&q, c).unwrap()
                    }
                }
            };
            x.push(xi);
        }
        let target = x
            .iter()
            .zip(&polys)
            .fold(Poly::zero(&q), |acc, (xi, a)| &acc + &(xi * a));
        prop_assert!(target.is_monic());
        let w = solve_for(&target, &polys).unwrap();
        prop_assert!(w.is_some(), "no witness for {} over {:?}", target, polys);
        prop_assert!(w.unwrap().verify(&target, &polys));
        Ok(())
    })
}

/// Uniform integer in `lo..=hi`.
pub fn pick(rng: &mut DetRng, lo: usize, hi: usize) -> usize {
    rng.gen_range(lo..=hi)
}
