//! Exhaustive ground truth over finite fields.
//!
//! Two independent methods: a census of every degree-`d` monic polynomial
//! reachable through the affine pieces, and a direct search over all cone
//! combinations. Field elements are handled as integer indices with
//! table-driven arithmetic.

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement, FieldKind};
use crate::linalg::pivot_columns;
use crate::poly::{Degree, Poly};
use crate::solver::{check_characteristic, check_inputs, FrobeniusReport, Method, SolutionWitness};
use crate::typespace::{build_piece, degrees_of, enumerate_types};

/// Index arithmetic for a finite field. Prime fields reduce modulo `p`;
/// extensions add digit-wise and multiply through discrete logarithms.
struct Compact {
    q: u32,
    p: u32,
    digits: u32,
    /// Extension fields only: `exp[i] = g^i` and `log[x]` for `x != 0`.
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl Compact {
    fn new(field: &Field) -> Result<Self> {
        let q = field
            .size()
            .ok_or_else(|| Error::Precondition("brute force needs a finite field".into()))?;
        let q = u32::try_from(q).map_err(|_| Error::CapacityExceeded {
            needed: q as u128,
            cap: u32::MAX as u64,
        })?;
        match field.kind() {
            FieldKind::Prime { p } => Ok(Compact {
                q,
                p: *p as u32,
                digits: 1,
                exp: Vec::new(),
                log: Vec::new(),
            }),
            FieldKind::Extension { p, degree, .. } => {
                let (exp, log) = log_tables(field, q);
                Ok(Compact {
                    q,
                    p: *p as u32,
                    digits: *degree as u32,
                    exp,
                    log,
                })
            }
            FieldKind::Rationals => unreachable!("finite size"),
        }
    }

    fn is_prime(&self) -> bool {
        self.exp.is_empty()
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        if self.is_prime() {
            let s = a + b;
            return if s >= self.p { s - self.p } else { s };
        }
        let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
        for _ in 0..self.digits {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.is_prime() {
            return ((a as u64 * b as u64) % self.p as u64) as u32;
        }
        let e = (self.log[a as usize] + self.log[b as usize]) % (self.q - 1);
        self.exp[e as usize]
    }

    fn index(&self, x: &FieldElement) -> u32 {
        x.to_index().expect("finite field element") as u32
    }
}

/// Powers of a primitive element and their inverse map.
fn log_tables(field: &Field, q: u32) -> (Vec<u32>, Vec<u32>) {
    let order = (q - 1) as usize;
    for candidate in field.elements().expect("finite").skip(2) {
        let mut exp = Vec::with_capacity(order);
        let mut x = field.one();
        for _ in 0..order {
            exp.push(x.to_index().unwrap() as u32);
            x = &x * &candidate;
            if x.is_one() {
                break;
            }
        }
        if exp.len() == order {
            let mut log = vec![0; q as usize];
            for (i, &e) in exp.iter().enumerate() {
                log[e as usize] = i as u32;
            }
            return (exp, log);
        }
    }
    unreachable!("multiplicative group of a finite field is cyclic")
}

fn checked_power(q: u64, d: usize, cap: u64) -> Result<u64> {
    let needed = (q as u128).saturating_pow(d as u32);
    if needed > cap as u128 {
        return Err(Error::CapacityExceeded { needed, cap });
    }
    Ok(needed as u64)
}

/// The monic degree-`d` polynomials reachable by cone combinations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeCensus {
    pub d: usize,
    /// `q^d`, the number of monic polynomials of degree `d`.
    pub total: u64,
    pub reachable_count: u64,
    /// Smallest unreachable polynomial in coefficient order, highest power first.
    pub missing_example: Option<Poly>,
    field: Field,
    bits: Vec<u64>,
}

impl DegreeCensus {
    pub fn is_full(&self) -> bool {
        self.reachable_count == self.total
    }

    fn key(&self, f: &Poly) -> Option<u64> {
        if f.field() != &self.field || !f.is_monic() || f.deg() != Some(self.d) {
            return None;
        }
        let q = self.field.size().unwrap();
        let v = f.to_vector(self.d).ok()?;
        Some(v[1..].iter().fold(0, |k, c| k * q + c.to_index().unwrap()))
    }

    /// Whether the monic polynomial `f` of degree `d` was reached.
    pub fn contains(&self, f: &Poly) -> bool {
        self.key(f)
            .is_some_and(|k| self.bits[(k / 64) as usize] >> (k % 64) & 1 == 1)
    }

    /// Every reachable polynomial in key order.
    pub fn reachable(&self) -> impl Iterator<Item = Poly> + '_ {
        (0..self.total)
            .filter(|k| self.bits[(k / 64) as usize] >> (k % 64) & 1 == 1)
            .map(|k| self.decode(k))
    }

    fn decode(&self, mut key: u64) -> Poly {
        let q = self.field.size().unwrap();
        let mut v = vec![self.field.zero(); self.d + 1];
        v[0] = self.field.one();
        for c in (1..=self.d).rev() {
            v[c] = self.field.from_index(key % q).unwrap();
            key /= q;
        }
        Poly::from_vector(&self.field, &v)
    }
}

fn finite_inputs(polys: &[Poly]) -> Result<Field> {
    let field = check_inputs(polys)?;
    if !field.is_finite() {
        return Err(Error::Precondition(
            "brute force needs a finite field".into(),
        ));
    }
    check_characteristic(&field, polys.len())?;
    if let Some(i) = polys.iter().position(Poly::is_constant) {
        return Err(Error::ConstantInput(i));
    }
    Ok(field)
}

/// Union over all types of the affine pieces at degree `d`, as a bitset of
/// the `q^d` monic polynomials. Stops early once every one is reached.
pub fn enumerate_reachable(d: usize, polys: &[Poly], capacity: u64) -> Result<DegreeCensus> {
    let field = finite_inputs(polys)?;
    let ops = Compact::new(&field)?;
    let q = ops.q as u64;
    let total = checked_power(q, d, capacity)?;
    let mut census = DegreeCensus {
        d,
        total,
        reachable_count: 0,
        missing_example: None,
        field: field.clone(),
        bits: vec![0; total.div_ceil(64) as usize],
    };
    let degrees = degrees_of(polys);
    for ty in enumerate_types(d, &degrees) {
        if census.is_full() {
            break;
        }
        let piece = build_piece(&ty, polys, d)?;
        let a_t = piece.a_t();
        let pivots = pivot_columns(a_t);
        // The pivot columns span the same space as A_T.
        checked_power(q, pivots.len(), capacity)?;
        let base: Vec<u32> = piece.b_t()[1..].iter().map(|x| ops.index(x)).collect();
        // multiples[j][x] = x * column_j, without the leading coordinate.
        let multiples: Vec<Vec<Vec<u32>>> = pivots
            .iter()
            .map(|&c| {
                let col: Vec<u32> = a_t.column(c)[1..].iter().map(|x| ops.index(x)).collect();
                (0..ops.q)
                    .map(|x| col.iter().map(|&y| ops.mul(x, y)).collect())
                    .collect()
            })
            .collect();
        sweep(&ops, &multiples, base, &mut census);
    }
    if !census.is_full() {
        let missing = (0..total)
            .find(|k| census.bits[(k / 64) as usize] >> (k % 64) & 1 == 0)
            .expect("census not full");
        census.missing_example = Some(census.decode(missing));
    }
    Ok(census)
}

/// Mark `base + sum x_j column_j` for every choice of the `x_j`.
fn sweep(ops: &Compact, multiples: &[Vec<Vec<u32>>], base: Vec<u32>, census: &mut DegreeCensus) {
    let q = ops.q as u64;
    let width = base.len();
    // levels[j] holds base + sum of the first j chosen multiples.
    let mut levels = vec![vec![0u32; width]; multiples.len() + 1];
    levels[0] = base;
    fn rec(
        level: usize,
        ops: &Compact,
        multiples: &[Vec<Vec<u32>>],
        levels: &mut [Vec<u32>],
        census: &mut DegreeCensus,
        q: u64,
    ) {
        if census.is_full() {
            return;
        }
        if level == multiples.len() {
            let key = levels[level].iter().fold(0u64, |k, &c| k * q + c as u64);
            let (w, b) = ((key / 64) as usize, key % 64);
            if census.bits[w] >> b & 1 == 0 {
                census.bits[w] |= 1 << b;
                census.reachable_count += 1;
            }
            return;
        }
        for x in 0..ops.q as usize {
            let (done, rest) = levels.split_at_mut(level + 1);
            for ((out, &a), &b) in rest[0]
                .iter_mut()
                .zip(&done[level])
                .zip(&multiples[level][x])
            {
                *out = ops.add(a, b);
            }
            rec(level + 1, ops, multiples, levels, census, q);
        }
    }
    rec(0, ops, multiples, &mut levels, census, q);
}

/// Every element of the cone of degree at most `max_deg`: zero, then by
/// degree, then by coefficient indices.
fn cone_elements(field: &Field, max_deg: Option<usize>) -> Vec<Poly> {
    let mut out = vec![Poly::zero(field)];
    let Some(max_deg) = max_deg else {
        return out;
    };
    let q = field.size().unwrap();
    for e in 0..=max_deg {
        let count = q.pow(e as u32);
        for mut k in 0..count {
            let mut coeffs = vec![field.zero(); e + 1];
            coeffs[e] = field.one();
            for slot in (0..e).rev() {
                coeffs[slot] = field.from_index(k % q).unwrap();
                k /= q;
            }
            out.push(Poly::new(field, coeffs).unwrap());
        }
    }
    out
}

/// First cone solution of `sum x_i A_i = F` found by trying every
/// `x_1, ..., x_{n-1}` with `deg x_i <= deg F - deg A_i` and dividing the
/// remainder by `A_n`.
pub fn brute_solve(f: &Poly, polys: &[Poly], capacity: u64) -> Result<Option<SolutionWitness>> {
    let field = finite_inputs(polys)?;
    if f.field() != &field {
        return Err(Error::FieldMismatch);
    }
    if !f.is_monic() {
        return Err(Error::Precondition("target must be monic".into()));
    }
    let fd = f.deg().unwrap();
    let (head, last) = polys.split_at(polys.len() - 1);
    let last = &last[0];
    let q = field.size().unwrap() as u128;
    let mut needed: u128 = 1;
    let mut lists = Vec::new();
    for a in head {
        let max_deg = fd.checked_sub(a.deg().unwrap());
        let size = 1 + max_deg.map_or(0, |m| (0..=m as u32).map(|e| q.saturating_pow(e)).sum());
        needed = needed.saturating_mul(size);
        if needed > capacity as u128 {
            return Err(Error::CapacityExceeded {
                needed,
                cap: capacity,
            });
        }
        lists.push(
            cone_elements(&field, max_deg)
                .into_iter()
                .map(|x| {
                    let prod = &x * a;
                    (x, prod)
                })
                .collect::<Vec<_>>(),
        );
    }

    fn rec(
        level: usize,
        rest: &Poly,
        lists: &[Vec<(Poly, Poly)>],
        last: &Poly,
        chosen: &mut Vec<Poly>,
    ) -> Option<Vec<Poly>> {
        if level == lists.len() {
            let (quo, rem) = rest.divmod(last).ok()?;
            if rem.is_zero() && quo.in_nonneg_cone() {
                let mut x = chosen.clone();
                x.push(quo);
                return Some(x);
            }
            return None;
        }
        for (x, prod) in &lists[level] {
            let next = rest - prod;
            chosen.push(x.clone());
            if let Some(w) = rec(level + 1, &next, lists, last, chosen) {
                return Some(w);
            }
            chosen.pop();
        }
        None
    }
    Ok(rec(0, f, &lists, last, &mut Vec::new()).map(|x| SolutionWitness { x }))
}

/// Frobenius degree by descending census from `d_max`.
pub fn brute_g(polys: &[Poly], d_max: usize, capacity: u64) -> Result<FrobeniusReport> {
    let field = check_inputs(polys)?;
    if !field.is_finite() {
        return Err(Error::Precondition(
            "brute force needs a finite field".into(),
        ));
    }
    if polys.iter().any(Poly::is_constant) {
        return Ok(FrobeniusReport {
            g: Degree::NegInf,
            upper_bound: None,
            lower_bound: None,
            method: Method::Degenerate,
            probed_degrees: Vec::new(),
            counterexample: None,
        });
    }
    let mut probed = Vec::new();
    let mut found = None;
    for d in (0..=d_max).rev() {
        probed.push(d);
        let census = enumerate_reachable(d, polys, capacity)?;
        if let Some(m) = census.missing_example {
            found = Some((d, m));
            break;
        }
    }
    let (g, counterexample) = match found {
        Some((d, m)) => (Degree::Finite(d), Some(m)),
        None => (Degree::NegInf, None),
    };
    Ok(FrobeniusReport {
        g,
        upper_bound: None,
        lower_bound: None,
        method: Method::OracleFallback,
        probed_degrees: probed,
        counterexample,
    })
}
