//! Frobenius degree computation, cone solvability and the closed-form
//! families.
//!
//! The main entry point is [`frobenius_degree`]: it scans candidate degrees
//! from the upper bound downwards and returns the first degree at which the
//! monic polynomials are not all representable. Fullness at a degree is
//! decided by the rank criterion when there are fewer types than field
//! elements, and by exhaustive census over small finite fields otherwise.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::oracle;
use crate::poly::{self, Degree, Poly};
use crate::typespace::{build_piece, count_types, degrees_of, enumerate_types, TypeTuple};

pub const DEFAULT_PERMUTE_CAP: u64 = 5040;
pub const DEFAULT_CAPACITY: u64 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    /// Orderings are minimized in the upper bound while `(n-1)!` stays below this.
    pub permute_cap: u64,
    /// Largest number of vectors or combinations a brute-force search may visit.
    pub capacity: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            permute_cap: DEFAULT_PERMUTE_CAP,
            capacity: DEFAULT_CAPACITY,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    RankCriterion,
    OracleFallback,
    ClosedFormDim2,
    /// Every monic target is representable: a constant input or
    /// characteristic at most `n`.
    Degenerate,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::RankCriterion => "rank_criterion",
            Method::OracleFallback => "oracle_fallback",
            Method::ClosedFormDim2 => "closed_form_dim2",
            Method::Degenerate => "degenerate",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusReport {
    pub g: Degree,
    pub upper_bound: Option<usize>,
    /// Present only when the field is large enough for the bound to hold.
    pub lower_bound: Option<usize>,
    pub method: Method,
    pub probed_degrees: Vec<usize>,
    pub counterexample: Option<Poly>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionWitness {
    pub x: Vec<Poly>,
}

impl SolutionWitness {
    /// Every entry is zero or monic and `sum x_i A_i = target`.
    pub fn verify(&self, target: &Poly, polys: &[Poly]) -> bool {
        if self.x.len() != polys.len() || !self.x.iter().all(Poly::in_nonneg_cone) {
            return false;
        }
        let sum = self
            .x
            .iter()
            .zip(polys)
            .fold(Poly::zero(target.field()), |acc, (x, a)| &acc + &(x * a));
        sum == *target
    }

    /// Degree pattern of the witness.
    pub fn degrees(&self) -> Vec<Degree> {
        self.x.iter().map(Poly::degree).collect()
    }
}

/// Common field of a list of monic, nonzero polynomials.
pub(crate) fn check_inputs(polys: &[Poly]) -> Result<Field> {
    if polys.len() < 2 {
        return Err(Error::TooFewPolynomials);
    }
    let field = polys[0].field().clone();
    for (i, p) in polys.iter().enumerate() {
        if p.field() != &field {
            return Err(Error::FieldMismatch);
        }
        if !p.is_monic() {
            return Err(Error::NotMonic(i));
        }
    }
    Ok(field)
}

fn check_coprime(polys: &[Poly]) -> Result<()> {
    if poly::gcd_all(polys)?.is_one() {
        Ok(())
    } else {
        Err(Error::NotCoprime)
    }
}

/// Characteristic zero or larger than `n`.
pub(crate) fn check_characteristic(field: &Field, n: usize) -> Result<()> {
    let p = field.characteristic();
    if p != 0 && p <= n as u64 {
        Err(Error::CharacteristicTooSmall { p, n })
    } else {
        Ok(())
    }
}

fn check_target(f: &Poly, field: &Field) -> Result<()> {
    if f.field() != field {
        return Err(Error::FieldMismatch);
    }
    if !f.is_monic() {
        return Err(Error::Precondition("target must be monic".into()));
    }
    Ok(())
}

fn factorial_at_most(n: usize, cap: u64) -> bool {
    let mut acc = 1u64;
    for k in 2..=n as u64 {
        acc = match acc.checked_mul(k) {
            Some(v) => v,
            None => return false,
        };
        if acc > cap {
            return false;
        }
    }
    true
}

/// Bound from dropping one polynomial as the "last" one: either the rest is
/// coprime, or its gcd `D` is factored out.
fn bound_with_last(list: &[Poly], last: usize, minimize: bool) -> Result<usize> {
    let rest: Vec<Poly> = list
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != last)
        .map(|(_, p)| p.clone())
        .collect();
    let d = poly::gcd_all(&rest)?;
    if d.is_one() {
        return ordered_bound(&rest, minimize);
    }
    let reduced = rest
        .iter()
        .map(|p| p.div_exact(&d).map(|q| q.expect("gcd divides")))
        .collect::<Result<Vec<_>>>()?;
    let inner = ordered_bound(&reduced, minimize)?;
    Ok(inner.max(list[last].deg().unwrap()) + d.deg().unwrap())
}

fn ordered_bound(list: &[Poly], minimize: bool) -> Result<usize> {
    if list.len() == 2 {
        return Ok(list[0].deg().unwrap() + list[1].deg().unwrap());
    }
    let m = list.len();
    let lasts: Vec<usize> = if minimize {
        (0..m).collect()
    } else {
        vec![m - 1]
    };
    let mut best = usize::MAX;
    for last in lasts {
        best = best.min(bound_with_last(list, last, minimize)?);
    }
    Ok(best)
}

/// Upper bound on the Frobenius degree from the inductive existence argument,
/// minimized over which polynomial is treated last and, when `(n-1)!` does
/// not exceed `permute_cap`, over the orderings of the remaining ones.
pub fn upper_bound(polys: &[Poly], permute_cap: u64) -> Result<usize> {
    check_inputs(polys)?;
    if let Some(i) = polys.iter().position(Poly::is_constant) {
        return Err(Error::ConstantInput(i));
    }
    check_coprime(polys)?;
    let n = polys.len();
    if n == 2 {
        return ordered_bound(polys, false);
    }
    let minimize = factorial_at_most(n - 1, permute_cap);
    let mut best = usize::MAX;
    for last in 0..n {
        best = best.min(bound_with_last(polys, last, minimize)?);
    }
    Ok(best)
}

/// Largest `d >= 0` with `sum max(d - a_i, 0) <= d`.
pub fn lower_bound(degrees: &[usize]) -> usize {
    let total: usize = degrees.iter().sum();
    (0..=total)
        .filter(|&d| degrees.iter().map(|&a| d.saturating_sub(a)).sum::<usize>() <= d)
        .max()
        .unwrap_or(0)
}

/// Whether every monic polynomial of degree `d` is representable, by the
/// rank criterion. Requires fewer types than field elements.
pub fn is_full(d: usize, polys: &[Poly]) -> Result<bool> {
    let field = check_inputs(polys)?;
    if let Some(i) = polys.iter().position(Poly::is_constant) {
        return Err(Error::ConstantInput(i));
    }
    check_characteristic(&field, polys.len())?;
    let degrees = degrees_of(polys);
    let count = count_types(d, &degrees);
    if !field.exceeds(count) {
        return Err(Error::FieldTooSmall {
            degree: d,
            types: count,
            size: field.size().unwrap_or(u64::MAX),
        });
    }
    is_full_unchecked(d, polys, &degrees)
}

fn is_full_unchecked(d: usize, polys: &[Poly], degrees: &[usize]) -> Result<bool> {
    for ty in enumerate_types(d, degrees) {
        // Fewer columns than d cannot reach rank d.
        if ty.index() < d {
            continue;
        }
        if build_piece(&ty, polys, d)?.rank() == d {
            return Ok(true);
        }
    }
    Ok(false)
}

fn degenerate(upper: Option<usize>) -> FrobeniusReport {
    FrobeniusReport {
        g: Degree::NegInf,
        upper_bound: upper,
        lower_bound: None,
        method: Method::Degenerate,
        probed_degrees: Vec::new(),
        counterexample: None,
    }
}

pub fn frobenius_degree(polys: &[Poly], config: &Config) -> Result<FrobeniusReport> {
    let field = check_inputs(polys)?;
    if polys.iter().any(Poly::is_constant) {
        return Ok(degenerate(None));
    }
    check_coprime(polys)?;
    let upper = upper_bound(polys, config.permute_cap)?;
    if check_characteristic(&field, polys.len()).is_err() {
        return Ok(degenerate(Some(upper)));
    }
    let degrees = degrees_of(polys);
    let lower = lower_bound(&degrees);
    let lower_valid = field.exceeds(count_types(lower, &degrees));

    let mut probed = Vec::new();
    let mut used_oracle = false;
    let mut found = None;
    for d in (0..=upper).rev() {
        probed.push(d);
        if field.exceeds(count_types(d, &degrees)) {
            if !is_full_unchecked(d, polys, &degrees)? {
                found = Some((d, None));
                break;
            }
        } else {
            used_oracle = true;
            let census = oracle::enumerate_reachable(d, polys, config.capacity)?;
            if let Some(missing) = census.missing_example {
                found = Some((d, Some(missing)));
                break;
            }
        }
    }
    let (g, counterexample) = match found {
        Some((d, c)) => (Degree::Finite(d), c),
        None => (Degree::NegInf, None),
    };
    if lower_valid && !used_oracle {
        debug_assert!(g >= Degree::Finite(lower), "lower bound violated");
    }
    Ok(FrobeniusReport {
        g,
        upper_bound: Some(upper),
        lower_bound: lower_valid.then_some(lower),
        method: if used_oracle {
            Method::OracleFallback
        } else {
            Method::RankCriterion
        },
        probed_degrees: probed,
        counterexample,
    })
}

fn check_pair(a: &Poly, b: &Poly) -> Result<Field> {
    let field = check_inputs(&[a.clone(), b.clone()])?;
    if a.is_constant() {
        return Err(Error::ConstantInput(0));
    }
    if b.is_constant() {
        return Err(Error::ConstantInput(1));
    }
    if !poly::gcd(a, b)?.is_one() {
        return Err(Error::NotCoprime);
    }
    Ok(field)
}

/// Closed form for two polynomials: `g = deg A + deg B`, certified by
/// `AB - A - B`.
pub fn frobenius_dim2(a: &Poly, b: &Poly) -> Result<FrobeniusReport> {
    let field = check_pair(a, b)?;
    check_characteristic(&field, 2)?;
    let g = a.deg().unwrap() + b.deg().unwrap();
    let counter = &(&(a * b) - a) - b;
    Ok(FrobeniusReport {
        g: Degree::Finite(g),
        upper_bound: Some(g),
        lower_bound: Some(g),
        method: Method::ClosedFormDim2,
        probed_degrees: Vec::new(),
        counterexample: Some(counter),
    })
}

/// Cone solution of `xA + yB = F` with `deg x = deg B` for
/// `deg F > deg A + deg B`.
pub fn dim2_solution(a: &Poly, b: &Poly, f: &Poly) -> Result<SolutionWitness> {
    let field = check_pair(a, b)?;
    check_target(f, &field)?;
    if f.deg().unwrap() <= a.deg().unwrap() + b.deg().unwrap() {
        return Err(Error::DegreeTooSmall);
    }
    let (_, g) = poly::bezout(&[a.clone(), b.clone()])?;
    // F = (F g_0) A + (F g_1) B; reduce the A-cofactor below deg B.
    let x0 = (f * &g[0]).rem(b)?;
    let y0 = (f - &(&x0 * a))
        .div_exact(b)?
        .ok_or_else(|| Error::VerificationFailed("B does not divide F - x0 A".into()))?;
    let w = SolutionWitness {
        x: vec![&x0 + b, &y0 - a],
    };
    if !w.verify(f, &[a.clone(), b.clone()]) {
        return Err(Error::VerificationFailed("dimension-2 witness".into()));
    }
    Ok(w)
}

/// Rebuild `(x_1, ..., x_n)` from the piece coefficients of type `ty`.
fn reconstruct(
    ty: &TypeTuple,
    xi: &[crate::field::FieldElement],
    field: &Field,
) -> SolutionWitness {
    let r = ty.r_set();
    let mut off = 0;
    let x = ty
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &e)| match e {
            Degree::NegInf => Poly::zero(field),
            Degree::Finite(0) => Poly::one(field),
            Degree::Finite(e) => {
                debug_assert!(r.contains(&i));
                // Block holds coefficients of t^{e-1}, ..., t^0.
                let mut coeffs: Vec<_> = xi[off..off + e].iter().rev().cloned().collect();
                coeffs.push(field.one());
                off += e;
                Poly::new(field, coeffs).expect("same field")
            }
        })
        .collect();
    SolutionWitness { x }
}

/// Cone solution of `sum x_i A_i = F`, searching the affine piece of every
/// type in turn; `None` when `F` is not representable.
pub fn solve_for(f: &Poly, polys: &[Poly]) -> Result<Option<SolutionWitness>> {
    let field = check_inputs(polys)?;
    check_target(f, &field)?;
    check_characteristic(&field, polys.len())?;
    if let Some(i) = polys.iter().position(Poly::is_constant) {
        let mut x = vec![Poly::zero(&field); polys.len()];
        x[i] = f.clone();
        return Ok(Some(SolutionWitness { x }));
    }
    Ok(consistent_types(f, polys)?
        .into_iter()
        .next()
        .map(|(_, w)| w))
}

/// Iterator over the types whose piece contains `F`, with a witness each.
fn consistent_types_iter<'a>(
    f: &'a Poly,
    polys: &'a [Poly],
) -> Result<impl Iterator<Item = Result<(TypeTuple, SolutionWitness)>> + 'a> {
    let d = f.deg().unwrap();
    let degrees = degrees_of(polys);
    let target = f.to_vector(d)?;
    let field = f.field().clone();
    Ok(enumerate_types(d, &degrees).filter_map(move |ty| {
        let step = || -> Result<Option<(TypeTuple, SolutionWitness)>> {
            let piece = build_piece(&ty, polys, d)?;
            Ok(piece
                .locate(&target)?
                .map(|xi| (ty.clone(), reconstruct(&ty, &xi, &field))))
        };
        step().transpose()
    }))
}

fn consistent_types(f: &Poly, polys: &[Poly]) -> Result<Option<(TypeTuple, SolutionWitness)>> {
    let first = consistent_types_iter(f, polys)?.next().transpose()?;
    if let Some((_, w)) = &first {
        if !w.verify(f, polys) {
            return Err(Error::VerificationFailed("piece witness".into()));
        }
    }
    Ok(first)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dim2Extras {
    /// `count - 2(f - a - b)`.
    pub c: i64,
    /// Consistent types `(f - a, c)` with `c < a`.
    pub chi_ab: usize,
    /// Consistent types `(c, f - b)` with `c < b`.
    pub chi_ba: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Denumerant {
    pub types: Vec<TypeTuple>,
    pub count: usize,
    pub dim2: Option<Dim2Extras>,
}

/// Number of distinct degree patterns among the cone solutions of `F`.
pub fn type_denumerant(f: &Poly, polys: &[Poly]) -> Result<Denumerant> {
    let field = check_inputs(polys)?;
    check_target(f, &field)?;
    check_characteristic(&field, polys.len())?;
    if let Some(i) = polys.iter().position(Poly::is_constant) {
        return Err(Error::ConstantInput(i));
    }
    let types = consistent_types_iter(f, polys)?
        .map(|r| {
            let (ty, w) = r?;
            if !w.verify(f, polys) {
                return Err(Error::VerificationFailed("piece witness".into()));
            }
            Ok(ty)
        })
        .collect::<Result<Vec<_>>>()?;
    let count = types.len();
    let fd = f.deg().unwrap();
    let dim2 = if polys.len() == 2 {
        let (a, b) = (polys[0].deg().unwrap(), polys[1].deg().unwrap());
        (fd > a + b).then(|| Dim2Extras {
            c: count as i64 - 2 * (fd - a - b) as i64,
            chi_ab: types
                .iter()
                .filter(|t| t.j() == 0 && t.entries()[1] < Degree::Finite(a))
                .count(),
            chi_ba: types
                .iter()
                .filter(|t| t.j() == 1 && t.entries()[0] < Degree::Finite(b))
                .count(),
        })
    } else {
        None
    };
    Ok(Denumerant { types, count, dim2 })
}

/// Cone solution with every `deg x_i >= m` in characteristic `0 < p <= n`,
/// from the vanishing sums `p * prod = 0` over blocks of size divisible by p.
pub fn charp_unbounded(polys: &[Poly], f: &Poly, m: usize) -> Result<SolutionWitness> {
    let field = check_inputs(polys)?;
    let n = polys.len();
    let p = field.characteristic();
    if p == 0 || p > n as u64 {
        return Err(Error::CharacteristicMismatch { p, n });
    }
    check_coprime(polys)?;
    check_target(f, &field)?;
    if m == 0 {
        return Err(Error::Precondition("m must be positive".into()));
    }
    let p = p as usize;
    let (blocks, rem) = (n / p, n % p);
    let r_set: Vec<usize> = (0..blocks * p).collect();
    let s_set: Vec<usize> = if rem == 0 {
        Vec::new()
    } else {
        (n - p..n).collect()
    };

    let (_, g) = poly::bezout(polys)?;
    let g: Vec<Poly> = g.iter().map(|gi| gi * f).collect();
    let deg_g = |i: usize| g[i].deg().map_or(-1, |d| d as i64);

    let cofactors = |set: &[usize]| -> Vec<Poly> {
        let prod = set
            .iter()
            .fold(Poly::one(&field), |acc, &i| &acc * &polys[i]);
        set.iter()
            .map(|&i| prod.div_exact(&polys[i]).unwrap().unwrap())
            .collect()
    };
    let z = cofactors(&r_set);
    let y = cofactors(&s_set);
    let deg = |q: &Poly| q.deg().unwrap() as i64;

    // Exponent on the S block: at least m and large enough to dominate G_s.
    let mut low = m as i64;
    for (k, &s) in s_set.iter().enumerate() {
        low = low.max(deg_g(s) - deg(&y[k]) + 1);
    }
    // Exponent on the R block: dominates G_r and, on the overlap, the S term.
    let mut high = low;
    for (k, &r) in r_set.iter().enumerate() {
        high = high.max(deg_g(r) - deg(&z[k]) + 1);
        if let Some(ks) = s_set.iter().position(|&s| s == r) {
            high = high.max(low + deg(&y[ks]) - deg(&z[k]) + 1);
        }
    }
    if s_set.is_empty() {
        // Single block: the exponent is the smallest admissible one >= m.
        low = high;
    }
    let (low, high) = (low as usize, high as usize);

    let mut x = g.clone();
    for (k, &r) in r_set.iter().enumerate() {
        x[r] = &x[r] + &z[k].shift(high);
    }
    for (k, &s) in s_set.iter().enumerate() {
        x[s] = &x[s] + &y[k].shift(low);
    }
    let w = SolutionWitness { x };
    let min_deg =
        w.x.iter()
            .map(|xi| xi.deg().unwrap_or(0))
            .min()
            .unwrap_or(0);
    if !w.verify(f, polys) || min_deg < m {
        return Err(Error::VerificationFailed(
            "positive characteristic witness".into(),
        ));
    }
    Ok(w)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductFamily {
    pub tilde: Vec<Poly>,
    pub g_expected: usize,
    pub counterexample: Poly,
}

/// From pairwise coprime `A_i`, the cofactors `P / A_i` of `P = prod A_i`,
/// whose Frobenius degree is `sum deg A_i`, certified by `P - sum P / A_i`.
pub fn product_family(polys: &[Poly]) -> Result<ProductFamily> {
    let field = check_inputs(polys)?;
    if let Some(i) = polys.iter().position(Poly::is_constant) {
        return Err(Error::ConstantInput(i));
    }
    check_characteristic(&field, polys.len())?;
    for i in 0..polys.len() {
        for j in i + 1..polys.len() {
            if !poly::gcd(&polys[i], &polys[j])?.is_one() {
                return Err(Error::NotPairwiseCoprime);
            }
        }
    }
    let prod = polys.iter().fold(Poly::one(&field), |acc, a| &acc * a);
    let tilde: Vec<Poly> = polys
        .iter()
        .map(|a| prod.div_exact(a).map(|q| q.unwrap()))
        .collect::<Result<_>>()?;
    let sum = tilde.iter().fold(Poly::zero(&field), |acc, t| &acc + t);
    Ok(ProductFamily {
        g_expected: polys.iter().map(|a| a.deg().unwrap()).sum(),
        counterexample: &prod - &sum,
        tilde,
    })
}

/// Counter-example `D G + (D - 1) A_n` for `(A_1, ..., A_{n-1}, A_n)` where
/// `D = gcd(A_1, ..., A_{n-1})` and `G` is a counter-example for the
/// quotients `A_i / D`.
pub fn stacked_family(head: &[Poly], last: &Poly, g: &Poly) -> Result<Poly> {
    if head.len() < 2 {
        return Err(Error::TooFewPolynomials);
    }
    let mut all = head.to_vec();
    all.push(last.clone());
    let field = check_inputs(&all)?;
    check_characteristic(&field, all.len())?;
    check_target(g, &field)?;
    if let Some(i) = all.iter().position(Poly::is_constant) {
        return Err(Error::ConstantInput(i));
    }
    let d = poly::gcd_all(head)?;
    if d.is_one() {
        return Err(Error::Precondition(
            "gcd of the leading polynomials is constant".into(),
        ));
    }
    if head.contains(&d) {
        return Err(Error::Precondition(
            "gcd equals one of the leading polynomials".into(),
        ));
    }
    if !poly::gcd(&d, last)?.is_one() {
        return Err(Error::Precondition(
            "gcd is not coprime to the last polynomial".into(),
        ));
    }
    if last.deg() <= g.deg() {
        return Err(Error::Precondition(
            "last polynomial must have degree above G".into(),
        ));
    }
    let quotients = head
        .iter()
        .map(|a| a.div_exact(&d).map(|q| q.unwrap()))
        .collect::<Result<Vec<_>>>()?;
    if solve_for(g, &quotients)?.is_some() {
        return Err(Error::Precondition(
            "G is representable by the quotients".into(),
        ));
    }
    let one = Poly::one(&field);
    Ok(&(&d * g) + &(&(&d - &one) * last))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly_list;
    use Degree::{Finite as F, NegInf as N};

    fn q() -> Field {
        Field::rationals()
    }

    fn polys(s: &str) -> Vec<Poly> {
        parse_poly_list(s, &q()).unwrap()
    }

    fn one(s: &str) -> Poly {
        polys(s).remove(0)
    }

    #[test]
    fn upper_bounds() {
        assert_eq!(upper_bound(&polys("t+1, t+2, t+3"), 5040).unwrap(), 2);
        assert_eq!(
            upper_bound(&polys("(t-1)^7, t^7, (t+1)^7"), 5040).unwrap(),
            14
        );
        assert_eq!(upper_bound(&polys("t^2, t^3+1"), 5040).unwrap(), 5);
        assert_eq!(
            upper_bound(&polys("t, 1"), 5040),
            Err(Error::ConstantInput(1))
        );
        assert_eq!(upper_bound(&polys("t, t^2"), 5040), Err(Error::NotCoprime));
        // gcd(t^2, t^2 + t) = t: max(3, 1 + 1) + 1.
        assert_eq!(upper_bound(&polys("t^2, t^2+t, t^3+1"), 0).unwrap(), 4);
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(lower_bound(&[2, 2, 2]), 3);
        assert_eq!(lower_bound(&[7, 7, 7]), 10);
        for a in 1..6 {
            assert_eq!(lower_bound(&[a, a]), 2 * a);
        }
    }

    #[test]
    fn fullness() {
        let a = polys("(t-1)^2, t^2, (t+1)^2");
        assert!(is_full(4, &a).unwrap());
        assert!(!is_full(3, &a).unwrap());
        assert!(!is_full(1, &a).unwrap());
        let f5 = Field::prime(5).unwrap();
        let small = parse_poly_list("t+1, t+2, t+3", &f5).unwrap();
        assert!(matches!(
            is_full(2, &small),
            Err(Error::FieldTooSmall { types: 12, .. })
        ));
        let f3 = Field::prime(3).unwrap();
        let c3 = parse_poly_list("t, t+1, t+2", &f3).unwrap();
        assert!(matches!(
            is_full(2, &c3),
            Err(Error::CharacteristicTooSmall { .. })
        ));
    }

    #[test]
    fn degree_small_examples() {
        let r = frobenius_degree(&polys("(t-1)^2, t^2, (t+1)^2"), &Config::default()).unwrap();
        assert_eq!(r.g, F(3));
        assert_eq!(r.method, Method::RankCriterion);
        let r = frobenius_degree(&polys("t^2+1, t^2, t^2-1"), &Config::default()).unwrap();
        assert_eq!(r.g, F(4));
        let r = frobenius_degree(&polys("t, 1"), &Config::default()).unwrap();
        assert_eq!((r.g, r.method), (N, Method::Degenerate));
        let f2 = Field::prime(2).unwrap();
        let r =
            frobenius_degree(&parse_poly_list("t, t+1", &f2).unwrap(), &Config::default()).unwrap();
        assert_eq!((r.g, r.method), (N, Method::Degenerate));
        assert_eq!(
            frobenius_degree(&polys("t^2, t^2+t"), &Config::default()),
            Err(Error::NotCoprime)
        );
        assert_eq!(
            frobenius_degree(&polys("2*t, t+1"), &Config::default()),
            Err(Error::NotMonic(0))
        );
    }

    #[test]
    fn dim2_closed_form() {
        let r = frobenius_dim2(&one("t"), &one("t+1")).unwrap();
        assert_eq!(r.g, F(2));
        assert_eq!(r.counterexample.unwrap(), one("t^2 - t - 1"));
        assert_eq!(frobenius_dim2(&one("t^2"), &one("t+3")).unwrap().g, F(3));
        let ab = polys("t, t+1");
        assert!(solve_for(&one("t^2-t-1"), &ab).unwrap().is_none());
        let f2 = Field::prime(2).unwrap();
        let p2 = parse_poly_list("t, t+1", &f2).unwrap();
        assert!(matches!(
            frobenius_dim2(&p2[0], &p2[1]),
            Err(Error::CharacteristicTooSmall { p: 2, n: 2 })
        ));
    }

    #[test]
    fn dim2_witness() {
        let w = dim2_solution(&one("t"), &one("t+1"), &one("t^3")).unwrap();
        assert_eq!(w.x, vec![one("t+2"), one("t^2-2*t")]);
        assert_eq!(
            dim2_solution(&one("t"), &one("t+1"), &one("t^2")),
            Err(Error::DegreeTooSmall)
        );
        // Boundary deg F = a + b + 1.
        let (a, b) = (one("t^2+1"), one("t-3"));
        let f = &(&(&a * &b) * &one("t")) + &one("t^2+5");
        let w = dim2_solution(&a, &b, &f).unwrap();
        assert_eq!(w.x[0].deg(), b.deg());
        assert_eq!(w.x[1].deg(), Some(f.deg().unwrap() - b.deg().unwrap()));
    }

    #[test]
    fn solve_examples() {
        let ab = polys("t, t+1");
        let w = solve_for(&one("t^3"), &ab).unwrap().unwrap();
        assert!(w.verify(&one("t^3"), &ab));
        assert_eq!(w.degrees(), vec![F(2), N]);
        let a3 = polys("t^2+1, t, t+5");
        let w = solve_for(&a3[0], &a3).unwrap().unwrap();
        assert_eq!(w.x, vec![one("1"), Poly::zero(&q()), Poly::zero(&q())]);
        assert!(solve_for(&one("2*t"), &ab).is_err());
    }

    #[test]
    fn denumerant_example() {
        let ab = polys("t, t+1");
        let den = type_denumerant(&one("t^3"), &ab).unwrap();
        let got: Vec<Vec<Degree>> = den.types.iter().map(|t| t.entries().to_vec()).collect();
        assert_eq!(
            got,
            vec![
                vec![F(2), N],
                vec![F(2), F(1)],
                vec![F(0), F(2)],
                vec![F(1), F(2)]
            ]
        );
        assert_eq!(den.count, 4);
        assert_eq!(
            den.dim2,
            Some(Dim2Extras {
                c: 2,
                chi_ab: 1,
                chi_ba: 1
            })
        );
    }

    #[test]
    fn charp_examples() {
        let f2 = Field::prime(2).unwrap();
        let a = parse_poly_list("t, t+1", &f2).unwrap();
        let f = Poly::one(&f2);
        let w = charp_unbounded(&a, &f, 3).unwrap();
        assert_eq!(w.x, parse_poly_list("t^3*(t+1) + 1, t^4 + 1", &f2).unwrap());
        let w = charp_unbounded(&a, &f, 10).unwrap();
        assert!(w.x.iter().all(|x| x.deg().unwrap() >= 10));

        let f3 = Field::prime(3).unwrap();
        let a = parse_poly_list("t, t+1, t+2", &f3).unwrap();
        let w = charp_unbounded(&a, &Poly::t(&f3), 1).unwrap();
        assert!(w.verify(&Poly::t(&f3), &a));

        // n = 3 over F_2: one full block and an overlapping tail block.
        let a = parse_poly_list("t, t+1, t^2+t+1", &f2).unwrap();
        for m in [1, 4, 9] {
            let target = parse_poly_list("t^3 + t", &f2).unwrap().remove(0);
            let w = charp_unbounded(&a, &target, m).unwrap();
            assert!(w.verify(&target, &a));
            assert!(w.x.iter().all(|x| x.deg().unwrap() >= m));
        }
        assert!(matches!(
            charp_unbounded(&polys("t, t+1"), &one("t"), 1),
            Err(Error::CharacteristicMismatch { p: 0, n: 2 })
        ));
    }

    #[test]
    fn product_family_examples() {
        let fam = product_family(&polys("t, t+1")).unwrap();
        assert_eq!(fam.tilde, polys("t+1, t"));
        assert_eq!(fam.g_expected, 2);
        assert_eq!(fam.counterexample, one("t^2-t-1"));
        let fam = product_family(&polys("t, t+1, t+2")).unwrap();
        assert_eq!(fam.g_expected, 3);
        assert_eq!(fam.counterexample, one("t^3 - 4*t - 2"));
        assert!(solve_for(&fam.counterexample, &fam.tilde)
            .unwrap()
            .is_none());
        assert_eq!(
            product_family(&polys("t, t^2+t")),
            Err(Error::NotPairwiseCoprime)
        );
    }

    #[test]
    fn stacked_family_example() {
        let head = polys("t^2, t^2+t");
        let last = one("t^3+1");
        let g = one("t^2-t-1");
        let f = stacked_family(&head, &last, &g).unwrap();
        assert_eq!(f.deg(), Some(4));
        let all = polys("t^2, t^2+t, t^3+1");
        assert!(solve_for(&f, &all).unwrap().is_none());
        assert!(stacked_family(&polys("t, t+1"), &last, &g).is_err());
        assert!(stacked_family(&head, &one("t^2+1"), &g).is_err());
        assert!(stacked_family(&head, &last, &one("t^3")).is_err());
    }
}
