//! Hilbert data (function, series, polynomial, regularity), the regular
//! sequence criterion, the probabilistic generic initial ideal, and the
//! Pommaret routes to regularity and depth.
//!
//! The Hilbert series of a monomial ideal is computed by the colon-ideal
//! splitting recursion; the Hilbert function is independently available by
//! counting standard monomials degree by degree, and the two routes
//! cross-check each other in the tests.

use num::{BigInt, BigRational, One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, BuchbergerOptions, GroebnerBasis};
use crate::pommaret::{pommaret_completion, CompletionResult, PommaretBasis};
use crate::ring::{LinearChange, Polynomial, Term};
use crate::stability::MonomialIdeal;

/// Exact Hilbert data of a proper monomial ideal (equivalently, of any ideal
/// through its leading ideal): the reduced series numerator `p` with
/// `p(1) != 0`, the pole order, a table of Hilbert function values, the
/// Hilbert polynomial and the Hilbert regularity.
#[derive(Debug, Clone, PartialEq)]
pub struct HilbertData {
    numerator: Vec<BigInt>,
    pole_order: usize,
    hf_table: Vec<BigInt>,
    hilbert_polynomial: Vec<BigRational>,
    hilb: u32,
}

impl HilbertData {
    /// Reduced numerator coefficients of `HS(t) = p(t) / (1-t)^D`.
    pub fn numerator(&self) -> &[BigInt] {
        &self.numerator
    }

    /// Pole order `D`; equals the dimension of the factor ring.
    pub fn pole_order(&self) -> usize {
        self.pole_order
    }

    /// Tabulated Hilbert function values from degree 0 upwards.
    pub fn hf_table(&self) -> &[BigInt] {
        &self.hf_table
    }

    /// Hilbert polynomial coefficients (constant first); empty means zero.
    pub fn hilbert_polynomial(&self) -> &[BigRational] {
        &self.hilbert_polynomial
    }

    /// Least degree from which the Hilbert function equals the polynomial.
    pub fn hilb(&self) -> u32 {
        self.hilb
    }

    /// Hilbert function value at any degree, from the series.
    pub fn hf(&self, t: u32) -> BigInt {
        if let Some(v) = self.hf_table.get(t as usize) {
            return v.clone();
        }
        hf_from_series(&self.numerator, self.pole_order, t)
    }

    /// Exact Hilbert polynomial value at an integer degree.
    pub fn hp(&self, t: u32) -> BigRational {
        eval_poly(&self.hilbert_polynomial, &BigInt::from(t))
    }

    /// Sum of the numerator coefficients: the degree of the ideal, and for
    /// pole order zero the (finite) vector-space dimension of the quotient.
    pub fn numerator_at_one(&self) -> BigInt {
        self.numerator.iter().sum()
    }
}

fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(out)
}

fn poly_shift(p: &[BigInt], k: usize) -> Vec<BigInt> {
    if p.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); k];
    out.extend_from_slice(p);
    out
}

/// Divide by `1 - t` exactly; `None` when `p(1) != 0`.
fn divide_by_one_minus_t(p: &[BigInt]) -> Option<Vec<BigInt>> {
    if p.is_empty() {
        return Some(Vec::new());
    }
    let mut q = Vec::with_capacity(p.len());
    let mut acc = BigInt::zero();
    for c in p {
        acc += c;
        q.push(acc.clone());
    }
    if q.pop().is_none_or(|last| last.is_zero()) {
        Some(trim(q))
    } else {
        None
    }
}

/// Numerator of the Hilbert series of `P/J` over `(1-t)^n`, by splitting off
/// one minimal generator at a time: `num(J + <m>) = num(J) - t^deg(m) num(J : m)`.
fn series_numerator(gens: &[Term]) -> Vec<BigInt> {
    match gens.split_last() {
        None => vec![BigInt::one()],
        Some((m, rest)) => {
            if m.is_one() {
                return Vec::new();
            }
            let base = series_numerator(rest);
            let colon: Vec<Term> = {
                let quotients = rest.iter().map(|u| u.try_div(&u.gcd(m)).unwrap());
                MonomialIdeal::minimal_generators(m.arity(), quotients)
                    .generators()
                    .to_vec()
            };
            let colon_num = if colon.iter().any(Term::is_one) {
                Vec::new()
            } else {
                series_numerator(&colon)
            };
            poly_sub(&base, &poly_shift(&colon_num, m.degree() as usize))
        }
    }
}

fn binomial(top: &BigInt, k: usize) -> BigInt {
    if top.is_negative() {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        // a zero factor (top < k) correctly collapses the product
        num *= top - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

fn hf_from_series(numerator: &[BigInt], pole_order: usize, t: u32) -> BigInt {
    if pole_order == 0 {
        return numerator.get(t as usize).cloned().unwrap_or_else(BigInt::zero);
    }
    let mut sum = BigInt::zero();
    for (j, c) in numerator.iter().enumerate().take(t as usize + 1) {
        let top = BigInt::from(t as i64 - j as i64 + pole_order as i64 - 1);
        sum += c * binomial(&top, pole_order - 1);
    }
    sum
}

fn eval_poly(coeffs: &[BigRational], at: &BigInt) -> BigRational {
    let x = BigRational::from_integer(at.clone());
    let mut acc = BigRational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * &x + c;
    }
    acc
}

fn poly_mul_rational(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Hilbert polynomial from the reduced numerator: the binomial expansion of
/// `p(t) / (1-t)^D` as a polynomial in the degree.
fn hilbert_polynomial_from(numerator: &[BigInt], pole_order: usize) -> Vec<BigRational> {
    if pole_order == 0 {
        return Vec::new();
    }
    let k = pole_order - 1;
    let mut acc = vec![BigRational::zero(); k + 1];
    for (j, c) in numerator.iter().enumerate() {
        // C(T - j + D - 1, D - 1) as a polynomial in T
        let mut term = vec![BigRational::from_integer(BigInt::one())];
        for i in 0..k {
            let shift = BigInt::from(pole_order as i64 - 1 - j as i64 - i as i64);
            term = poly_mul_rational(
                &term,
                &[
                    BigRational::from_integer(shift),
                    BigRational::from_integer(BigInt::one()),
                ],
            );
        }
        let mut factorial = BigInt::one();
        for i in 1..=k {
            factorial *= BigInt::from(i);
        }
        let c_rat = BigRational::from_integer(c.clone()) / BigRational::from_integer(factorial);
        for (i, coeff) in term.iter().enumerate() {
            acc[i] += coeff * &c_rat;
        }
    }
    while acc.last().is_some_and(Zero::is_zero) {
        acc.pop();
    }
    acc
}

/// Number of degree-`t` standard monomials of `J`, counted directly.
pub fn hilbert_function(ideal: &MonomialIdeal, t: u32) -> BigInt {
    fn count(ideal: &MonomialIdeal, exps: &mut Vec<u32>, left: u32, acc: &mut BigInt) {
        if exps.len() + 1 == ideal.nvars() {
            exps.push(left);
            if !ideal.contains(&Term::new(exps.clone())) {
                *acc += 1;
            }
            exps.pop();
            return;
        }
        for e in 0..=left {
            exps.push(e);
            count(ideal, exps, left - e, acc);
            exps.pop();
        }
    }
    let mut acc = BigInt::zero();
    count(ideal, &mut Vec::new(), t, &mut acc);
    acc
}

/// Exact Hilbert data of a proper monomial ideal.
pub fn hilbert_series(ideal: &MonomialIdeal) -> Result<HilbertData> {
    if ideal.generators().iter().any(Term::is_one) {
        return Err(Error::UnitIdeal);
    }
    let n = ideal.nvars();
    let mut numerator = trim(series_numerator(ideal.generators()));
    let mut pole_order = n;
    while pole_order > 0 {
        match divide_by_one_minus_t(&numerator) {
            Some(reduced) => {
                numerator = reduced;
                pole_order -= 1;
            }
            None => break,
        }
    }
    if pole_order == 0 {
        // fully polynomial series; nothing left to cancel
    } else if numerator.iter().sum::<BigInt>().is_zero() {
        return Err(Error::InvalidParameter(
            "series numerator still cancels; reduction bug".into(),
        ));
    }
    let hilbert_polynomial = hilbert_polynomial_from(&numerator, pole_order);
    let safe = numerator.len() as u32; // deg(p) + 1
    let hf_table: Vec<BigInt> = (0..=safe + 2)
        .map(|t| hf_from_series(&numerator, pole_order, t))
        .collect();
    let hp_at = |t: u32| eval_poly(&hilbert_polynomial, &BigInt::from(t));
    debug_assert_eq!(
        BigRational::from_integer(hf_table[safe as usize].clone()),
        hp_at(safe)
    );
    let mut hilb = safe;
    while hilb > 0 {
        let t = hilb - 1;
        if BigRational::from_integer(hf_table[t as usize].clone()) == hp_at(t) {
            hilb -= 1;
        } else {
            break;
        }
    }
    Ok(HilbertData {
        numerator,
        pole_order,
        hf_table,
        hilbert_polynomial,
        hilb,
    })
}

/// Hilbert regularity by direct function-vs-polynomial comparison.
pub fn hilbert_regularity(ideal: &MonomialIdeal) -> Result<u32> {
    Ok(hilbert_series(ideal)?.hilb())
}

/// Generator degrees sorted descending, padded with 1 up to length `n` and
/// truncated to the `n` largest.
pub fn padded_degrees(degrees: &[u32], n: usize) -> Vec<u32> {
    let mut d: Vec<u32> = degrees.to_vec();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d.resize(d.len().max(n), 1);
    d.truncate(n);
    d
}

/// For `dim <= 1`: check that the Hilbert function is constant from degree
/// `d_1 + ... + d_n - n + 1` onward, `d_i` the generator degrees padded by 1.
pub fn stabilization_check(
    hilbert: &HilbertData,
    generator_degrees: &[u32],
    nvars: usize,
) -> Result<bool> {
    if hilbert.pole_order() > 1 {
        return Err(Error::InvalidParameter(format!(
            "stabilization requires dimension <= 1, got {}",
            hilbert.pole_order()
        )));
    }
    let start: u32 = padded_degrees(generator_degrees, nvars).iter().sum::<u32>() - nvars as u32 + 1;
    // constant through the regularity implies constant forever
    let until = start.max(hilbert.hilb()) + 1;
    Ok((start..until).all(|t| hilbert.hf(t) == hilbert.hf(t + 1)))
}

/// Reduced Gröbner basis of an ideal given by generators.
pub fn reduced_gb(gens: &[Polynomial]) -> Result<GroebnerBasis> {
    Ok(buchberger(gens, &BuchbergerOptions::default())?.0)
}

/// Both regular-sequence criteria: the Hilbert series must equal
/// `prod (1 - t^d_i) / (1-t)^n`, equivalently the dimension must be `n - k`.
pub fn is_regular_sequence(gens: &[Polynomial]) -> Result<bool> {
    crate::ring::validate_proper(gens)?;
    let n = gens[0].nvars();
    if gens.len() > n {
        return Ok(false);
    }
    let gb = reduced_gb(gens)?;
    let data = hilbert_series(&gb.leading_ideal())?;
    // expected reduced form: numerator prod (1 + t + .. + t^(d_i - 1)),
    // pole order n - k
    let mut expected = vec![BigInt::one()];
    for g in gens {
        let d = g.degree().unwrap() as usize;
        let block: Vec<BigInt> = vec![BigInt::one(); d];
        let mut out = vec![BigInt::zero(); expected.len() + block.len() - 1];
        for (i, a) in expected.iter().enumerate() {
            for (j, b) in block.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        expected = out;
    }
    Ok(data.numerator() == expected.as_slice() && data.pole_order() == n - gens.len())
}

/// Dimension criterion alone, for cross-checking against the series route.
pub fn is_regular_sequence_by_dimension(gens: &[Polynomial]) -> Result<bool> {
    crate::ring::validate_proper(gens)?;
    let n = gens[0].nvars();
    if gens.len() > n {
        return Ok(false);
    }
    let gb = reduced_gb(gens)?;
    Ok(gb.leading_ideal().dimension() == n - gens.len())
}

#[derive(Debug, Clone)]
pub struct GinOptions {
    /// Independent agreeing transformations required.
    pub trials: u32,
    /// Initial coefficient range; doubles on each retry.
    pub coefficient_bound: i64,
    pub max_retries: u32,
}

impl Default for GinOptions {
    fn default() -> Self {
        GinOptions {
            trials: 2,
            coefficient_bound: 1000,
            max_retries: 3,
        }
    }
}

/// Generic initial ideal by seeded random changes of coordinates: `trials`
/// independent samples must produce identical leading ideals; on
/// disagreement the coefficient range doubles, up to `max_retries`.
pub fn gin(gens: &[Polynomial], seed: u64, options: &GinOptions) -> Result<MonomialIdeal> {
    if options.trials < 2 {
        return Err(Error::InvalidParameter("gin needs at least 2 trials".into()));
    }
    crate::ring::validate_proper(gens)?;
    let n = gens[0].nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bound = options.coefficient_bound;
    for _ in 0..=options.max_retries {
        let mut leading: Option<MonomialIdeal> = None;
        let mut agreed = true;
        for _ in 0..options.trials {
            let change = LinearChange::random(n, bound, &mut rng);
            let moved = change.apply_all(gens)?;
            let lt = reduced_gb(&moved)?.leading_ideal();
            match &leading {
                None => leading = Some(lt),
                Some(prev) => {
                    if *prev != lt {
                        agreed = false;
                        break;
                    }
                }
            }
        }
        if agreed {
            return Ok(leading.unwrap());
        }
        bound = bound.saturating_mul(2);
    }
    Err(Error::GinInconclusive {
        retries: options.max_retries,
    })
}

/// Regularity and depth of a proper homogeneous ideal: transform to quasi
/// stable position when needed, then read both off the Pommaret basis.
pub fn reg_and_depth(gens: &[Polynomial], seed: u64) -> Result<(u32, usize)> {
    let basis = quasi_stable_pommaret_basis(gens, seed)?;
    Ok((basis.regularity(), basis.depth()))
}

/// Pommaret basis of the ideal itself when already in quasi stable position,
/// otherwise of a verified random coordinate transform of it.
pub fn quasi_stable_pommaret_basis(gens: &[Polynomial], seed: u64) -> Result<PommaretBasis> {
    let gb = reduced_gb(gens)?;
    match pommaret_completion(&gb, 256)? {
        CompletionResult::Complete(basis) => Ok(basis),
        CompletionResult::NotQuasiStable { .. } => {
            let (_, transformed) = crate::harness::transform_to_position(
                gens,
                crate::harness::TargetPosition::QuasiStable,
                seed,
                &crate::harness::TransformOptions::default(),
            )?;
            match pommaret_completion(&transformed.groebner_basis, 256)? {
                CompletionResult::Complete(basis) => Ok(basis),
                CompletionResult::NotQuasiStable { .. } => unreachable!(
                    "transformation verified quasi stable position"
                ),
            }
        }
    }
}
