//! Coordinate transformations to generic positions, seeded corpus
//! generation, per-theorem verification and fixture reproduction.
//!
//! Transformation is randomized but verified: the target predicate is tested
//! on the leading ideal of the transformed system, so a returned change of
//! coordinates is never trusted on luck alone. Every theorem check first
//! establishes its own hypotheses and records a reason when they fail, and a
//! failed applicable check is a hard failure for the caller.

use num::{BigInt, One};
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bounds::{bound, BoundParams, Formula, Magnitude, DEFAULT_BIT_CAP};
use crate::error::{Error, Result};
use crate::fset::{f_set, f_tilde_set, lemma_mora_check, mora_variant_check};
use crate::groebner::{buchberger, truncated_gb, BuchbergerOptions, GroebnerBasis};
use crate::invariants::{
    gin, hilbert_series, is_regular_sequence, is_regular_sequence_by_dimension, padded_degrees,
    stabilization_check, GinOptions, HilbertData,
};
use crate::pommaret::{pommaret_completion, CompletionResult, PommaretBasis};
use crate::ring::{format_polynomial, LinearChange, Polynomial, RingContext, Term};
use crate::stability::MonomialIdeal;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TargetPosition {
    QuasiStable,
    StronglyStable,
}

impl TargetPosition {
    pub fn satisfied_by(&self, lt: &MonomialIdeal) -> bool {
        match self {
            TargetPosition::QuasiStable => lt.is_quasi_stable(),
            TargetPosition::StronglyStable => lt.is_strongly_stable(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            TargetPosition::QuasiStable => "quasi stable",
            TargetPosition::StronglyStable => "strongly stable",
        }
    }
}

#[derive(Debug, Clone)]
pub struct TransformOptions {
    pub coefficient_bound: i64,
    pub max_retries: u32,
    /// Return the identity change when the ideal already sits in the target
    /// position.
    pub allow_identity: bool,
}

impl Default for TransformOptions {
    fn default() -> Self {
        TransformOptions {
            coefficient_bound: 1000,
            max_retries: 8,
            allow_identity: true,
        }
    }
}

/// A coordinate-transformed ideal together with its reduced basis and the
/// number of resamples the transformation needed.
#[derive(Debug, Clone)]
pub struct TransformedIdeal {
    pub generators: Vec<Polynomial>,
    pub groebner_basis: GroebnerBasis,
    pub retries: u32,
}

/// Move a proper homogeneous ideal into the target position by seeded dense
/// random changes of coordinates; the position is verified, never assumed.
pub fn transform_to_position(
    gens: &[Polynomial],
    target: TargetPosition,
    seed: u64,
    options: &TransformOptions,
) -> Result<(LinearChange, TransformedIdeal)> {
    crate::ring::validate_proper(gens)?;
    let n = gens[0].nvars();
    let (gb, _) = buchberger(gens, &BuchbergerOptions::default())?;
    if options.allow_identity && target.satisfied_by(&gb.leading_ideal()) {
        return Ok((
            LinearChange::identity(n),
            TransformedIdeal {
                generators: gens.to_vec(),
                groebner_basis: gb,
                retries: 0,
            },
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut obstruction = String::from("never attempted");
    for retry in 0..options.max_retries {
        let change = LinearChange::random(n, options.coefficient_bound, &mut rng);
        let moved = change.apply_all(gens)?;
        let (gb, _) = buchberger(&moved, &BuchbergerOptions::default())?;
        let lt = gb.leading_ideal();
        if target.satisfied_by(&lt) {
            return Ok((
                change,
                TransformedIdeal {
                    generators: moved,
                    groebner_basis: gb,
                    retries: retry,
                },
            ));
        }
        obstruction = match lt.quasi_stable_witness() {
            Some((gen, i, j)) => format!(
                "generator {gen} blocks the swap of variable {} for variable {}",
                i + 1,
                j + 1
            ),
            None => "leading ideal quasi stable but not strongly stable".into(),
        };
    }
    Err(Error::TransformFailed {
        target: target.name().into(),
        retries: options.max_retries,
        obstruction,
    })
}

/// Parameters for the seeded random corpus.
#[derive(Debug, Clone, Serialize)]
pub struct CorpusSpec {
    pub count: usize,
    pub max_vars: usize,
    pub max_degree: u32,
    pub max_generators: usize,
    pub seed: u64,
    pub target: TargetPosition,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            count: 200,
            max_vars: 4,
            max_degree: 4,
            max_generators: 4,
            seed: 0,
            target: TargetPosition::StronglyStable,
        }
    }
}

/// One corpus member: the raw random ideal and its verified transform.
#[derive(Debug, Clone)]
pub struct CorpusIdeal {
    pub index: usize,
    pub original: Vec<Polynomial>,
    pub change: LinearChange,
    pub transformed: TransformedIdeal,
}

fn random_term<R: Rng>(nvars: usize, degree: u32, rng: &mut R) -> Term {
    let mut exps = vec![0u32; nvars];
    for _ in 0..degree {
        exps[rng.gen_range(0..nvars)] += 1;
    }
    Term::new(exps)
}

fn random_homogeneous<R: Rng>(nvars: usize, degree: u32, rng: &mut R) -> Polynomial {
    loop {
        let terms = rng.gen_range(1..=3usize);
        let mut entries = Vec::with_capacity(terms);
        for _ in 0..terms {
            let c = loop {
                let c = rng.gen_range(-3i64..=3);
                if c != 0 {
                    break c;
                }
            };
            entries.push((
                random_term(nvars, degree, rng),
                crate::ring::Coeff::from_integer(BigInt::from(c)),
            ));
        }
        let f = Polynomial::from_terms(nvars, entries);
        if !f.is_zero() {
            return f;
        }
    }
}

/// Deterministic random corpus; every member is transformed to the target
/// position and that position re-verified.
pub fn generate_corpus(spec: &CorpusSpec) -> Result<Vec<CorpusIdeal>> {
    if spec.max_vars < 2 || spec.max_vars > 6 {
        return Err(Error::InvalidParameter("corpus needs 2 <= max_vars <= 6".into()));
    }
    if spec.max_degree < 1 || spec.max_degree > 6 || spec.max_generators < 1 || spec.max_generators > 8 {
        return Err(Error::InvalidParameter(
            "corpus needs 1 <= max_degree <= 6 and 1 <= max_generators <= 8".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut out = Vec::with_capacity(spec.count);
    let transform_options = TransformOptions {
        // small entries keep the exact arithmetic fast; the verified
        // predicate, not the entry size, carries the guarantee
        coefficient_bound: 7,
        max_retries: 8,
        allow_identity: true,
    };
    let mut index = 0;
    while out.len() < spec.count {
        let nvars = rng.gen_range(2..=spec.max_vars);
        let k = rng.gen_range(1..=spec.max_generators);
        let gens: Vec<Polynomial> = (0..k)
            .map(|_| {
                let degree = rng.gen_range(1..=spec.max_degree);
                random_homogeneous(nvars, degree, &mut rng)
            })
            .collect();
        let seed = rng.gen::<u64>();
        match transform_to_position(&gens, spec.target, seed, &transform_options) {
            Ok((change, transformed)) => {
                out.push(CorpusIdeal {
                    index,
                    original: gens,
                    change,
                    transformed,
                });
                index += 1;
            }
            Err(Error::TransformFailed { .. }) | Err(Error::DegreeCapExceeded { .. }) => {
                // resample; determinism is preserved by the shared stream
                continue;
            }
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// One theorem entry of a verification report.
#[derive(Debug, Clone, Serialize)]
pub struct TheoremCheck {
    pub id: String,
    pub applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub holds: Option<bool>,
}

impl TheoremCheck {
    fn not_applicable(id: &str, reason: impl Into<String>) -> Self {
        TheoremCheck {
            id: id.into(),
            applicable: false,
            reason: Some(reason.into()),
            lhs: None,
            rhs: None,
            holds: None,
        }
    }

    fn result(id: &str, lhs: impl ToString, rhs: impl ToString, holds: bool) -> Self {
        TheoremCheck {
            id: id.into(),
            applicable: true,
            reason: None,
            lhs: Some(lhs.to_string()),
            rhs: Some(rhs.to_string()),
            holds: Some(holds),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub ideal: String,
    pub nvars: usize,
    pub homogeneous: bool,
    pub input_degrees: Vec<u32>,
    pub quasi_stable: bool,
    pub stable: bool,
    pub strongly_stable: bool,
    pub noether: bool,
    pub max_gb_degree: u32,
    pub dimension: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub depth: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regularity: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f_size: Option<usize>,
    pub hilb: u32,
    pub seed: u64,
    pub checks: Vec<TheoremCheck>,
}

impl VerificationReport {
    pub fn all_applicable_hold(&self) -> bool {
        self.checks
            .iter()
            .filter(|c| c.applicable)
            .all(|c| c.holds == Some(true))
    }

    pub fn failures(&self) -> Vec<&TheoremCheck> {
        self.checks
            .iter()
            .filter(|c| c.applicable && c.holds != Some(true))
            .collect()
    }
}

fn magnitude_string(m: &Magnitude) -> String {
    m.display()
}

fn check_upper_bound(id: &str, lhs: &BigInt, bound_value: &crate::bounds::BoundValue) -> TheoremCheck {
    let holds = bound_value.at_least(lhs, DEFAULT_BIT_CAP);
    TheoremCheck::result(id, lhs, magnitude_string(&bound_value.magnitude), holds)
}

/// Verify every theorem whose hypotheses the ideal satisfies.
pub fn verify_theorems(gens: &[Polynomial], ideal_name: &str, seed: u64) -> Result<VerificationReport> {
    crate::ring::validate_proper(gens)?;
    if gens.iter().all(Polynomial::is_homogeneous) {
        verify_homogeneous(gens, ideal_name, seed)
    } else {
        verify_affine(gens, ideal_name, seed)
    }
}

fn verify_homogeneous(
    gens: &[Polynomial],
    ideal_name: &str,
    seed: u64,
) -> Result<VerificationReport> {
    let n = gens[0].nvars();
    let input_degrees: Vec<u32> = gens.iter().map(|g| g.degree().unwrap()).collect();
    let d = *input_degrees.iter().max().unwrap();
    let (gb, _) = buchberger(gens, &BuchbergerOptions::default())?;
    let lt = gb.leading_ideal();
    let quasi_stable = lt.is_quasi_stable();
    let stable = lt.is_stable();
    let strongly_stable = lt.is_strongly_stable();
    let noether = lt.is_noether_position();
    let dimension = lt.dimension();
    let deg = gb.max_degree();
    let hilbert = hilbert_series(&lt)?;

    let pommaret = if quasi_stable {
        match pommaret_completion(&gb, 256)? {
            CompletionResult::Complete(basis) => Some(basis),
            CompletionResult::NotQuasiStable { .. } => None,
        }
    } else {
        None
    };
    let depth = pommaret.as_ref().map(PommaretBasis::depth);
    let regularity = pommaret.as_ref().map(PommaretBasis::regularity);

    let f_report = if strongly_stable { Some(f_set(&gb)?) } else { None };
    let f_size = f_report.as_ref().map(|r| r.f_size());

    let mut checks = Vec::new();
    let params = |dim: Option<usize>, depth: Option<usize>| BoundParams {
        n,
        d,
        dim,
        depth,
        degrees: Some(input_degrees.clone()),
    };

    // dimension cross-check: combinatorial vs Hilbert series pole order
    checks.push(TheoremCheck::result(
        "dimension_pole_order",
        dimension,
        hilbert.pole_order(),
        dimension == hilbert.pole_order(),
    ));

    // in dimension <= 1 the Noether and quasi stable positions coincide
    if dimension <= 1 {
        checks.push(TheoremCheck::result(
            "noether_equals_quasi_stable",
            noether,
            quasi_stable,
            noether == quasi_stable,
        ));
    } else {
        checks.push(TheoremCheck::not_applicable(
            "noether_equals_quasi_stable",
            format!("needs dimension <= 1, got {dimension}"),
        ));
    }

    // strongly stable checks
    if strongly_stable {
        let hs_a = bound(Formula::hs_A, &params(Some(dimension), None))?;
        checks.push(check_upper_bound("degree_within_a_bound", &BigInt::from(deg), &hs_a));
        let fset_bound = bound(Formula::fset_bound, &params(Some(dimension), None))?;
        checks.push(check_upper_bound(
            "fset_within_bound",
            &BigInt::from(f_size.unwrap()),
            &fset_bound,
        ));
        if dimension >= 1 && dimension < n {
            let hs_c = bound(Formula::hs_C, &params(Some(dimension), None))?;
            checks.push(check_upper_bound("degree_within_c_bound", &BigInt::from(deg), &hs_c));
        } else {
            checks.push(TheoremCheck::not_applicable(
                "degree_within_c_bound",
                format!("needs 1 <= D <= n-1, got D = {dimension}"),
            ));
        }
        let reg = regularity.expect("strongly stable implies quasi stable");
        checks.push(TheoremCheck::result("deg_eq_reg", deg, reg, deg == reg));

        let lambda = depth.unwrap();
        if dimension > 1 && dimension > lambda && dimension < n {
            let p = params(Some(dimension), Some(lambda));
            let a_depth = bound(Formula::hs_A_depth, &p)?;
            checks.push(check_upper_bound("degree_within_a_depth_bound", &BigInt::from(deg), &a_depth));
            checks.push(check_upper_bound("reg_within_a_depth_bound", &BigInt::from(reg), &a_depth));
            let c_depth = bound(Formula::hs_C_depth, &p)?;
            checks.push(check_upper_bound("reg_within_c_depth_bound", &BigInt::from(reg), &c_depth));
        } else {
            let reason = format!("needs D > 1 and D > depth, got D = {dimension}, depth = {lambda:?}");
            checks.push(TheoremCheck::not_applicable("degree_within_a_depth_bound", reason.clone()));
            checks.push(TheoremCheck::not_applicable("reg_within_a_depth_bound", reason.clone()));
            checks.push(TheoremCheck::not_applicable("reg_within_c_depth_bound", reason));
        }

        if n >= 2 {
            let mora = lemma_mora_check(&gb, d)?;
            checks.push(TheoremCheck::result(
                "restriction_degree_inequality",
                mora.degree_lhs,
                mora.degree_rhs,
                mora.degree_holds,
            ));
            checks.push(TheoremCheck::result(
                "restriction_count_inequality",
                mora.count_lhs,
                mora.count_rhs,
                mora.count_holds,
            ));
        }

        checks.push(TheoremCheck::result(
            "cp_gap",
            format!("generator degrees of LT up to {}", lt.max_generator_degree()),
            format!("no gaps above {d}"),
            lt.cp_gap_check(d),
        ));

        // truncated-basis cross-validation at every degree
        let mut trunc_ok = true;
        let mut trunc_detail = String::new();
        for t in 1..=deg {
            let truncated = truncated_gb(gens, t)?;
            if t >= deg && !truncated.certified {
                trunc_ok = false;
                trunc_detail = format!("t = {t} beyond deg(I) must certify");
                break;
            }
            if truncated.certified {
                let sub: Vec<Polynomial> = gens
                    .iter()
                    .filter(|g| g.degree().unwrap() <= t)
                    .cloned()
                    .collect();
                let expected: Vec<Polynomial> = if sub.is_empty() {
                    Vec::new()
                } else {
                    buchberger(&sub, &BuchbergerOptions::default())?
                        .0
                        .generators()
                        .to_vec()
                };
                if truncated.elements != expected {
                    trunc_ok = false;
                    trunc_detail = format!("t = {t}: certified result differs from direct basis");
                    break;
                }
            }
        }
        checks.push(TheoremCheck::result(
            "truncated_gb",
            format!("t = 1..{deg}"),
            if trunc_detail.is_empty() { "all certified levels match".into() } else { trunc_detail },
            trunc_ok,
        ));

        if dimension > 0 {
            let restricted_dim = lt.restrict_last(1).dimension();
            checks.push(TheoremCheck::result(
                "dim_restriction",
                dimension,
                restricted_dim + 1,
                dimension == restricted_dim + 1,
            ));
        }
    } else {
        for id in [
            "degree_within_a_bound",
            "fset_within_bound",
            "degree_within_c_bound",
            "deg_eq_reg",
            "degree_within_a_depth_bound",
            "reg_within_a_depth_bound",
            "reg_within_c_depth_bound",
            "restriction_degree_inequality",
            "restriction_count_inequality",
            "cp_gap",
            "truncated_gb",
        ] {
            checks.push(TheoremCheck::not_applicable(id, "not in strongly stable position"));
        }
    }

    // quasi stable checks
    if quasi_stable {
        let reg = regularity.unwrap();
        let lambda = depth.unwrap();
        checks.push(TheoremCheck::result("deg_le_reg", deg, reg, deg <= reg));
        if dimension <= 1 {
            let laz = bound(Formula::lazard, &params(None, Some(lambda)))?;
            checks.push(check_upper_bound("degree_within_lazard_bound", &BigInt::from(deg), &laz));
            checks.push(check_upper_bound("reg_within_lazard_bound", &BigInt::from(reg), &laz));
        } else {
            checks.push(TheoremCheck::not_applicable(
                "degree_within_lazard_bound",
                format!("needs dimension <= 1, got {dimension}"),
            ));
            checks.push(TheoremCheck::not_applicable(
                "reg_within_lazard_bound",
                format!("needs dimension <= 1, got {dimension}"),
            ));
        }
        if dimension == lambda && noether {
            let cm = bound(Formula::cm_noether, &params(Some(dimension), None))?;
            checks.push(check_upper_bound("cm_noether", &BigInt::from(deg), &cm));
        } else {
            checks.push(TheoremCheck::not_applicable(
                "cm_noether",
                format!("needs Cohen-Macaulay (D = depth) in Noether position; D = {dimension}, depth = {lambda}"),
            ));
        }
        // depth reduction: restriction by the depth preserves deg and reg
        if lambda >= 1 {
            let restricted = gb.restrict_last(lambda);
            let deg_holds = restricted.max_degree() == deg;
            checks.push(TheoremCheck::result(
                "depth_reduction_degree",
                deg,
                restricted.max_degree(),
                deg_holds,
            ));
            let reg_restricted = match pommaret_completion(&restricted, 256)? {
                CompletionResult::Complete(basis) => Some(basis.regularity()),
                CompletionResult::NotQuasiStable { .. } => None,
            };
            checks.push(match reg_restricted {
                Some(r) => TheoremCheck::result("depth_reduction_reg", reg, r, reg == r),
                None => TheoremCheck::result(
                    "depth_reduction_reg",
                    reg,
                    "restriction lost quasi stability",
                    false,
                ),
            });
        } else {
            checks.push(TheoremCheck::not_applicable("depth_reduction_degree", "depth 0"));
            checks.push(TheoremCheck::not_applicable("depth_reduction_reg", "depth 0"));
        }
    } else {
        for id in ["deg_le_reg", "degree_within_lazard_bound", "cm_noether", "depth_reduction_degree", "depth_reduction_reg"] {
            checks.push(TheoremCheck::not_applicable(id, "not in quasi stable position"));
        }
        // the regularity is coordinate invariant, so its bound applies even
        // in bad coordinates; compute it through a verified transformation
        if dimension <= 1 {
            let basis = crate::invariants::quasi_stable_pommaret_basis(gens, seed)?;
            let laz = bound(Formula::lazard, &params(None, Some(basis.depth())))?;
            checks.push(check_upper_bound(
                "reg_within_lazard_bound",
                &BigInt::from(basis.regularity()),
                &laz,
            ));
        } else {
            checks.push(TheoremCheck::not_applicable(
                "reg_within_lazard_bound",
                format!("needs dimension <= 1, got {dimension}"),
            ));
        }
    }

    // zero-dimensional bounds
    if dimension == 0 {
        let mac = bound(Formula::macaulay_0dim, &params(Some(0), None))?;
        checks.push(check_upper_bound("degree_within_macaulay_bound", &BigInt::from(deg), &mac));
        let product: BigInt = padded_degrees(&input_degrees, n)
            .iter()
            .map(|&x| BigInt::from(x))
            .product();
        let count = hilbert.numerator_at_one().clone();
        checks.push(TheoremCheck::result(
            "count_within_degree_product",
            count.clone(),
            product.clone(),
            count <= product,
        ));
    } else {
        checks.push(TheoremCheck::not_applicable("degree_within_macaulay_bound", "dimension > 0"));
        checks.push(TheoremCheck::not_applicable("count_within_degree_product", "dimension > 0"));
    }

    // Hilbert function stabilization in dimension <= 1
    if dimension <= 1 {
        let holds = stabilization_check(&hilbert, &input_degrees, n)?;
        let start: u32 = padded_degrees(&input_degrees, n).iter().sum::<u32>() - n as u32 + 1;
        checks.push(TheoremCheck::result(
            "hf_stabilization",
            format!("constant from degree {start}"),
            format!("hilb = {}", hilbert.hilb()),
            holds,
        ));
    } else {
        checks.push(TheoremCheck::not_applicable(
            "hf_stabilization",
            format!("needs dimension <= 1, got {dimension}"),
        ));
    }

    // regular sequence criterion: both routes must agree
    {
        let by_series = is_regular_sequence(gens)?;
        let by_dim = is_regular_sequence_by_dimension(gens)?;
        checks.push(TheoremCheck::result(
            "regular_sequence_routes",
            by_series,
            by_dim,
            by_series == by_dim,
        ));
    }

    // Macaulay: the Hilbert function of the ideal equals that of its
    // leading ideal; independent rank computation over two large primes
    {
        let window = 8.min(hilbert.hilb().max(d) + 2);
        let holds = macaulay_hf_check(gens, &hilbert, window);
        checks.push(TheoremCheck::result(
            "macaulay_hf",
            format!("rank route, degrees 0..={window}"),
            "leading ideal route",
            holds,
        ));
    }

    // invariance of dimension and Hilbert data under a random change
    {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(0x9e3779b97f4a7c15));
        let change = LinearChange::random(n, 7, &mut rng);
        let moved = change.apply_all(gens)?;
        let (moved_gb, _) = buchberger(&moved, &BuchbergerOptions::default())?;
        let moved_lt = moved_gb.leading_ideal();
        let moved_hilbert = hilbert_series(&moved_lt)?;
        let window = hilbert.hilb().max(moved_hilbert.hilb()) + 2;
        let hf_equal = (0..=window).all(|t| hilbert.hf(t) == moved_hilbert.hf(t));
        let holds = moved_lt.dimension() == dimension
            && moved_hilbert.hilb() == hilbert.hilb()
            && hf_equal;
        checks.push(TheoremCheck::result(
            "linear_change_invariance",
            format!("dim {dimension}, hilb {}", hilbert.hilb()),
            format!("dim {}, hilb {}", moved_lt.dimension(), moved_hilbert.hilb()),
            holds,
        ));
    }

    Ok(VerificationReport {
        ideal: ideal_name.into(),
        nvars: n,
        homogeneous: true,
        input_degrees,
        quasi_stable,
        stable,
        strongly_stable,
        noether,
        max_gb_degree: deg,
        dimension,
        depth,
        regularity,
        f_size,
        hilb: hilbert.hilb(),
        seed,
        checks,
    })
}

/// Affine inputs: homogenize, and when the homogenized system is in quasi
/// stable position of dimension at most one, verify the affine degree bound.
fn verify_affine(gens: &[Polynomial], ideal_name: &str, seed: u64) -> Result<VerificationReport> {
    let n = gens[0].nvars();
    let input_degrees: Vec<u32> = gens.iter().map(|g| g.degree().unwrap()).collect();
    let homogenized: Vec<Polynomial> = gens.iter().map(Polynomial::homogenize).collect();
    let (hgb, _) = buchberger(&homogenized, &BuchbergerOptions::default())?;
    let lt = hgb.leading_ideal();
    let quasi_stable = lt.is_quasi_stable();
    let dimension = lt.dimension();
    let hilbert = hilbert_series(&lt)?;
    let mut checks = Vec::new();

    let mut depth = None;
    let mut regularity = None;
    if quasi_stable && dimension <= 1 {
        let basis = match pommaret_completion(&hgb, 256)? {
            CompletionResult::Complete(b) => b,
            CompletionResult::NotQuasiStable { .. } => unreachable!("verified quasi stable"),
        };
        depth = Some(basis.depth());
        regularity = Some(basis.regularity());
        let lambda = basis.depth();
        // affine reduced basis via dehomogenization of the projective one
        let affine = affine_reduced_basis(&hgb);
        let affine_deg = affine
            .iter()
            .filter_map(Polynomial::degree)
            .max()
            .unwrap_or(0);
        let laz = bound(
            Formula::lazard_affine,
            &BoundParams {
                n,
                d: *input_degrees.iter().max().unwrap(),
                dim: None,
                depth: Some(lambda),
                degrees: Some(input_degrees.clone()),
            },
        )?;
        checks.push(check_upper_bound("affine_lazard_bound", &BigInt::from(affine_deg), &laz));
    } else {
        checks.push(TheoremCheck::not_applicable(
            "affine_lazard_bound",
            format!(
                "homogenization must be quasi stable of dimension <= 1; quasi stable = {quasi_stable}, dimension = {dimension}"
            ),
        ));
    }

    Ok(VerificationReport {
        ideal: ideal_name.into(),
        nvars: n,
        homogeneous: false,
        input_degrees,
        quasi_stable,
        stable: lt.is_stable(),
        strongly_stable: lt.is_strongly_stable(),
        noether: lt.is_noether_position(),
        max_gb_degree: hgb.max_degree(),
        dimension,
        depth,
        regularity,
        f_size: None,
        hilb: hilbert.hilb(),
        seed,
        checks,
    })
}

/// Reduced basis of the dehomogenized ideal: dehomogenize the projective
/// basis and interreduce. For degrevlex with the homogenizing variable
/// smallest this stays a Gröbner basis.
pub fn affine_reduced_basis(hgb: &GroebnerBasis) -> Vec<Polynomial> {
    let mut elements: Vec<Polynomial> = hgb
        .generators()
        .iter()
        .map(Polynomial::dehomogenize)
        .filter(|g| !g.is_zero())
        .collect();
    elements.sort_by(|a, b| a.leading_term().unwrap().cmp(b.leading_term().unwrap()));
    // drop elements whose leading term another element divides
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in &elements {
        if !minimal
            .iter()
            .any(|m| m.leading_term().unwrap().divides(g.leading_term().unwrap()))
        {
            minimal.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let nf = crate::groebner::normal_form(&minimal[i], &others);
        if !nf.is_zero() {
            reduced.push(nf.monic());
        }
    }
    reduced.sort_by(|a, b| a.leading_term().unwrap().cmp(b.leading_term().unwrap()));
    reduced
}

// ---- Macaulay cross-check over finite fields ----

const MACAULAY_PRIMES: [u64; 2] = [2_305_843_009_213_693_951, 2_147_483_647];

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

fn bigint_mod(v: &BigInt, p: u64) -> u64 {
    let m = (v % BigInt::from(p)).to_string();
    let parsed: i128 = m.parse().unwrap();
    ((parsed % p as i128 + p as i128) % p as i128) as u64
}

fn all_terms_of_degree(nvars: usize, degree: u32) -> Vec<Term> {
    fn rec(nvars: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Term>) {
        if cur.len() + 1 == nvars {
            cur.push(left);
            out.push(Term::new(cur.clone()));
            cur.pop();
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(nvars, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(nvars, degree, &mut Vec::new(), &mut out);
    out
}

fn rank_mod_p(rows: &mut [Vec<u64>], p: u64) -> usize {
    let mut rank = 0;
    let cols = rows.first().map_or(0, Vec::len);
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = invmod(rows[rank][col], p);
        for c in col..cols {
            rows[rank][c] = mulmod(rows[rank][c], inv, p);
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let factor = rows[r][col];
                for c in col..cols {
                    let sub = mulmod(factor, rows[rank][c], p);
                    rows[r][c] = (rows[r][c] + p - sub) % p;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Dimension of the degree-`s` piece of the ideal by rank over GF(p); a
/// random unlucky prime can only undercount, so both primes must disagree
/// with the expected value before the check fails.
fn ideal_piece_rank(gens: &[Polynomial], s: u32, p: u64) -> usize {
    let nvars = gens[0].nvars();
    let basis_terms = all_terms_of_degree(nvars, s);
    let col_of: std::collections::HashMap<Term, usize> = basis_terms
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, t)| (t, i))
        .collect();
    let mut rows = Vec::new();
    for g in gens {
        let d = g.degree().unwrap();
        if d > s {
            continue;
        }
        // clear denominators; this rescales rows only
        let denom_lcm = g
            .terms()
            .iter()
            .fold(BigInt::one(), |acc, (_, c)| num::integer::lcm(acc, c.denom().clone()));
        for m in all_terms_of_degree(nvars, s - d) {
            let mut row = vec![0u64; basis_terms.len()];
            for (t, c) in g.terms() {
                let idx = col_of[&t.mul(&m)];
                let scaled = c * crate::ring::Coeff::from_integer(denom_lcm.clone());
                debug_assert!(scaled.denom().is_one());
                row[idx] = bigint_mod(scaled.numer(), p);
            }
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return 0;
    }
    rank_mod_p(&mut rows, p)
}

fn macaulay_hf_check(gens: &[Polynomial], hilbert: &HilbertData, window: u32) -> bool {
    let nvars = gens[0].nvars();
    's: for s in 0..=window {
        let full = num::BigInt::from(all_terms_of_degree(nvars, s).len());
        let expected_rank = &full - hilbert.hf(s);
        for p in MACAULAY_PRIMES {
            if BigInt::from(ideal_piece_rank(gens, s, p)) == expected_rank {
                continue 's;
            }
        }
        return false;
    }
    true
}

// ---- fixtures ----

#[derive(Debug, Clone, Serialize)]
pub struct FixtureCheck {
    pub fixture: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct FixtureSummary {
    pub checks: Vec<FixtureCheck>,
}

impl FixtureSummary {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, fixture: &str, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(FixtureCheck {
            fixture: fixture.into(),
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }
}

fn term(exps: &[u32]) -> Term {
    Term::new(exps.to_vec())
}

fn terms_brief(terms: &[Term]) -> String {
    terms.iter().map(Term::to_string).collect::<Vec<_>>().join(", ")
}

fn mono_ideal(nvars: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::minimal_generators(nvars, gens.iter().map(|e| Term::new(e.to_vec())))
}

/// Reproduce the worked examples end to end.
pub fn run_fixtures() -> Result<FixtureSummary> {
    let mut summary = FixtureSummary::default();

    // --- fixture: three quadrics in three variables (Green) ---
    {
        let fixture = "green";
        let (_, gens) = crate::ring::parse_ideal("ring: x1 x2 x3\nx1*x3\nx1*x2 + x2^2\nx1^2\n")?;
        let (gb, _) = buchberger(&gens, &BuchbergerOptions::default())?;
        let expected_lt = mono_ideal(3, &[&[1, 0, 1], &[1, 1, 0], &[2, 0, 0], &[0, 2, 1], &[0, 3, 0]]);
        let lt = gb.leading_ideal();
        summary.push(fixture, "leading_ideal", lt == expected_lt, terms_brief(lt.generators()));
        summary.push(fixture, "lt_strongly_stable", lt.is_strongly_stable(), "");
        let g = gin(&gens, 0, &GinOptions::default())?;
        let expected_gin = mono_ideal(3, &[&[0, 2, 0], &[1, 1, 0], &[2, 0, 0], &[1, 0, 2]]);
        summary.push(fixture, "gin", g == expected_gin, terms_brief(g.generators()));
        summary.push(fixture, "gin_differs_from_lt", g != lt, "");
        summary.push(fixture, "gin_strongly_stable", g.is_strongly_stable(), "");
    }

    // --- fixture: two plane quadrics ---
    {
        let fixture = "plane_quadrics";
        let (_, gens) = crate::ring::parse_ideal("ring: x1 x2\nx1^2\nx1*x2 + x2^2\n")?;
        let g = gin(&gens, 0, &GinOptions::default())?;
        let expected_gin = mono_ideal(2, &[&[1, 1], &[2, 0], &[0, 3]]);
        summary.push(fixture, "gin", g == expected_gin, terms_brief(g.generators()));
        let (gb, _) = buchberger(&gens, &BuchbergerOptions::default())?;
        let report = f_set(&gb)?;
        summary.push(fixture, "f_count", report.f_size() == 4, format!("#F = {}", report.f_size()));
        let deg = gb.max_degree();
        summary.push(fixture, "deg", deg == 3, format!("deg = {deg}"));
        let hs_a = bound(
            Formula::hs_A,
            &BoundParams { n: 2, d: 2, dim: Some(0), depth: None, degrees: None },
        )?;
        summary.push(
            fixture,
            "deg_within_hs_a",
            hs_a.at_least(&BigInt::from(deg), DEFAULT_BIT_CAP) && hs_a.display() == "4",
            format!("bound = {}", hs_a.display()),
        );
        let mac = bound(
            Formula::macaulay_0dim,
            &BoundParams { n: 2, d: 2, dim: Some(0), depth: None, degrees: Some(vec![2, 2]) },
        )?;
        summary.push(
            fixture,
            "macaulay_exact",
            mac.display() == "3",
            format!("bound = {}", mac.display()),
        );
    }

    // --- fixture: the monomial pair with large Mora sets ---
    {
        let fixture = "mora_remark";
        let (_, gens) = crate::ring::parse_ideal("ring: x1 x2\nx1^2\nx2^11*x1\n")?;
        let (gb, _) = buchberger(&gens, &BuchbergerOptions::default())?;
        summary.push(fixture, "deg", gb.max_degree() == 12, format!("deg = {}", gb.max_degree()));
        let inner = f_set(&gb.restrict_last(1))?;
        summary.push(
            fixture,
            "restricted_f",
            inner.f == vec![term(&[0]), term(&[1])],
            terms_brief(&inner.f),
        );
        let tilde = f_tilde_set(&gb);
        summary.push(fixture, "tilde_count", tilde.len() == 23, format!("#F~ = {}", tilde.len()));
        let variant = mora_variant_check(&gb)?;
        summary.push(
            fixture,
            "variant_fails",
            !variant.degree_holds
                && !variant.count_holds
                && variant.degree_lhs == 12
                && variant.degree_rhs == 4
                && variant.count_lhs == 23
                && variant.count_rhs == 4,
            format!("{variant:?}"),
        );
        let corrected = lemma_mora_check(&gb, 12)?;
        summary.push(
            fixture,
            "corrected_holds",
            corrected.degree_holds && corrected.count_holds,
            format!("{corrected:?}"),
        );
        let g = gin(&gens, 0, &GinOptions::default())?;
        summary.push(
            fixture,
            "already_generic",
            g == gb.leading_ideal(),
            terms_brief(g.generators()),
        );
    }

    // --- fixture: the Lazard conjecture counterexample family ---
    {
        let fixture = "lazard_counterexample";
        for t in [2u32, 3, 4] {
            let text = format!(
                "ring: x1 x2 x3 x4\nx1*x2^{} - x3^{}\nx1^{} - x2*x3^{}*x4\nx1^{}*x3 - x2^{}*x4\n",
                t - 1,
                t,
                t + 1,
                t - 1,
                t,
                t
            );
            let (ctx, gens) = crate::ring::parse_ideal(&text)?;
            let (gb, _) = buchberger(&gens, &BuchbergerOptions::default())?;
            // the high-degree element x3^(t^2+1) - x2^(t^2) x4
            let witness = crate::ring::parse_polynomial(
                &ctx,
                &format!("x3^{} - x2^{}*x4", t * t + 1, t * t),
            )?;
            summary.push(
                fixture,
                &format!("witness_element_t{t}"),
                gb.generators().contains(&witness),
                format!("deg(I) = {}", gb.max_degree()),
            );
            if t == 4 {
                let expected_lt = mono_ideal(
                    4,
                    &[
                        &[1, 3, 0, 0],
                        &[4, 0, 1, 0],
                        &[5, 0, 0, 0],
                        &[3, 0, 5, 0],
                        &[2, 0, 9, 0],
                        &[1, 0, 13, 0],
                        &[0, 0, 17, 0],
                    ],
                );
                let lt = gb.leading_ideal();
                summary.push(fixture, "lt_t4", lt == expected_lt, terms_brief(lt.generators()));
                summary.push(fixture, "deg_t4", gb.max_degree() == 17, format!("{}", gb.max_degree()));
                let degree_sum: u32 = [t, t + 1, t + 1].iter().sum::<u32>() - 3;
                summary.push(
                    fixture,
                    "exceeds_lazard_bound",
                    gb.max_degree() > degree_sum && degree_sum == 11,
                    format!("deg {} > {degree_sum}", gb.max_degree()),
                );
                summary.push(fixture, "dim_t4", lt.dimension() == 2, format!("{}", lt.dimension()));
                let restricted = gb.restrict_last(1);
                let rlt = restricted.leading_ideal();
                summary.push(fixture, "restricted_dim", rlt.dimension() == 1, "");
                let obstruction = rlt.quasi_stable_witness();
                summary.push(
                    fixture,
                    "restricted_not_quasi_stable",
                    obstruction.as_ref().map(|(_, _, j)| *j) == Some(1),
                    format!("{obstruction:?}"),
                );
                summary.push(
                    fixture,
                    "restricted_same_generators",
                    rlt == expected_lt.restrict_last(1),
                    "",
                );
                // the regularity bound survives in bad coordinates: reg is
                // invariant and stays within the degree-sum bound even
                // though deg(I',<) = 17 escapes it
                let restricted_gens: Vec<Polynomial> = gens
                    .iter()
                    .map(|g| g.restrict_last(1))
                    .filter(|g| !g.is_zero())
                    .collect();
                let basis = crate::invariants::quasi_stable_pommaret_basis(&restricted_gens, 0)?;
                let r = 3 - basis.depth();
                let degree_bound: u32 =
                    crate::invariants::padded_degrees(&[t, t + 1, t + 1], r).iter().sum::<u32>()
                        - r as u32
                        + 1;
                summary.push(
                    fixture,
                    "restricted_reg_within_bound",
                    basis.regularity() <= degree_bound
                        && restricted.max_degree() > degree_bound,
                    format!(
                        "reg(I') = {} <= {degree_bound} while deg(I',<) = {}",
                        basis.regularity(),
                        restricted.max_degree()
                    ),
                );
            }
        }
    }

    Ok(summary)
}

// ---- corpus verification ----

#[derive(Debug, Clone, Serialize)]
pub struct CorpusSummary {
    pub spec: CorpusSpec,
    pub members: usize,
    pub failures: Vec<String>,
    /// Dimensions exercised by the strongly stable degree-bound check.
    pub dimensions_exercised: Vec<usize>,
    pub reports: Vec<VerificationReport>,
}

impl CorpusSummary {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Generate the corpus and verify every applicable theorem on each member,
/// including invariance of the invariants under the applied transformation.
pub fn verify_corpus(spec: &CorpusSpec) -> Result<CorpusSummary> {
    let corpus = generate_corpus(spec)?;
    // members are verified independently in parallel; the merge below is by
    // index, so reports are deterministic for a fixed seed
    let results: Vec<Result<(VerificationReport, Vec<String>)>> = corpus
        .par_iter()
        .map(|member| {
            let name = format!("corpus[{}]", member.index);
            let report = verify_theorems(
                &member.transformed.generators,
                &name,
                spec.seed ^ member.index as u64,
            )?;
            let mut failures: Vec<String> = report
                .failures()
                .iter()
                .map(|f| format!("{name}: {} ({:?} vs {:?})", f.id, f.lhs, f.rhs))
                .collect();
            // invariance against the original coordinates
            let (original_gb, _) = buchberger(&member.original, &BuchbergerOptions::default())?;
            let original_lt = original_gb.leading_ideal();
            let original_hilbert = hilbert_series(&original_lt)?;
            if original_lt.dimension() != report.dimension {
                failures.push(format!("{name}: dimension changed under transformation"));
            }
            let window = original_hilbert.hilb().max(report.hilb) + 2;
            let transformed_lt = member.transformed.groebner_basis.leading_ideal();
            let transformed_hilbert = hilbert_series(&transformed_lt)?;
            if (0..=window).any(|t| original_hilbert.hf(t) != transformed_hilbert.hf(t)) {
                failures.push(format!("{name}: Hilbert function changed under transformation"));
            }
            // regularity and depth under an independent second transform
            let second = crate::invariants::quasi_stable_pommaret_basis(
                &member.original,
                (spec.seed ^ member.index as u64).wrapping_mul(2).wrapping_add(1),
            )?;
            if Some(second.regularity()) != report.regularity
                || Some(second.depth()) != report.depth
            {
                failures.push(format!(
                    "{name}: regularity/depth changed under transformation ({:?}/{:?} vs {}/{})",
                    report.regularity,
                    report.depth,
                    second.regularity(),
                    second.depth()
                ));
            }
            Ok((report, failures))
        })
        .collect();
    let mut failures = Vec::new();
    let mut dimensions = std::collections::BTreeSet::new();
    let mut reports = Vec::with_capacity(corpus.len());
    for result in results {
        let (report, member_failures) = result?;
        if report.strongly_stable {
            dimensions.insert(report.dimension);
        }
        failures.extend(member_failures);
        reports.push(report);
    }
    Ok(CorpusSummary {
        spec: spec.clone(),
        members: corpus.len(),
        failures,
        dimensions_exercised: dimensions.into_iter().collect(),
        reports,
    })
}

/// Pretty name for an ideal from its file stem or an explicit label.
pub fn ideal_label(path: Option<&std::path::Path>) -> String {
    path.and_then(|p| p.file_stem())
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "ideal".into())
}

#[allow(dead_code)]
fn format_ideal(ctx: &RingContext, gens: &[Polynomial]) -> String {
    gens.iter()
        .map(|g| format_polynomial(ctx, g))
        .collect::<Vec<_>>()
        .join("; ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_ideal;

    #[test]
    fn transform_reaches_strongly_stable_position() {
        let (_, gens) = parse_ideal("ring: x1 x2 x3\nx1*x2 - x3^2\nx2^2\n").unwrap();
        let (change, transformed) =
            transform_to_position(&gens, TargetPosition::StronglyStable, 3, &TransformOptions::default())
                .unwrap();
        assert!(transformed.groebner_basis.leading_ideal().is_strongly_stable());
        assert!(!change.is_identity());
    }

    #[test]
    fn transform_keeps_identity_when_already_positioned() {
        let (_, gens) = parse_ideal("ring: x1 x2\nx1^2\nx2^11*x1\n").unwrap();
        let (change, transformed) =
            transform_to_position(&gens, TargetPosition::StronglyStable, 0, &TransformOptions::default())
                .unwrap();
        assert!(change.is_identity());
        assert_eq!(transformed.retries, 0);
    }

    #[test]
    fn quasi_stable_after_one_generic_change() {
        let (_, gens) = parse_ideal("ring: x1 x2\nx1*x2\n").unwrap();
        let (_, transformed) =
            transform_to_position(&gens, TargetPosition::QuasiStable, 5, &TransformOptions::default())
                .unwrap();
        assert!(transformed.groebner_basis.leading_ideal().is_quasi_stable());
    }

    #[test]
    fn corpus_is_deterministic_and_verified() {
        let spec = CorpusSpec {
            count: 6,
            max_vars: 3,
            max_degree: 3,
            max_generators: 3,
            seed: 42,
            target: TargetPosition::StronglyStable,
        };
        let a = generate_corpus(&spec).unwrap();
        let b = generate_corpus(&spec).unwrap();
        assert_eq!(a.len(), 6);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.original, y.original);
            assert_eq!(x.transformed.generators, y.transformed.generators);
            assert!(x
                .transformed
                .groebner_basis
                .leading_ideal()
                .is_strongly_stable());
        }
        let empty = generate_corpus(&CorpusSpec { count: 0, ..spec }).unwrap();
        assert!(empty.is_empty());
    }

    #[test]
    fn verify_green_fixture_report() {
        let (_, gens) = parse_ideal("ring: x1 x2 x3\nx1*x3\nx1*x2 + x2^2\nx1^2\n").unwrap();
        let report = verify_theorems(&gens, "green", 0).unwrap();
        assert!(report.strongly_stable);
        assert_eq!(report.max_gb_degree, 3);
        assert_eq!(report.dimension, 1);
        assert!(report.all_applicable_hold(), "failures: {:?}", report.failures());
    }

    #[test]
    fn verify_lazard_restriction_marks_degree_bound_inapplicable() {
        // the 3-variable restriction: not quasi stable, dimension 1
        let text = "ring: x1 x2 x3\nx1*x2^3 - x3^4\nx1^5\nx1^4*x3\n";
        let (_, gens) = parse_ideal(text).unwrap();
        let report = verify_theorems(&gens, "lazard_restricted", 0).unwrap();
        assert!(!report.quasi_stable);
        let check = report
            .checks
            .iter()
            .find(|c| c.id == "degree_within_lazard_bound")
            .unwrap();
        assert!(!check.applicable);
        assert!(check.reason.as_deref().unwrap().contains("not in quasi stable"));
        assert!(report.all_applicable_hold(), "failures: {:?}", report.failures());
    }

    #[test]
    fn verify_affine_input() {
        // inhomogeneous input goes through homogenization
        let (_, gens) = parse_ideal("ring: x1 x2\nx1^2 - x2\nx2^3 - 1\n").unwrap();
        let report = verify_theorems(&gens, "affine", 0).unwrap();
        assert!(!report.homogeneous);
        assert!(report.all_applicable_hold(), "failures: {:?}", report.failures());
    }

    #[test]
    fn affine_bound_holds_on_dehomogenized_corpus() {
        // quasi stable corpus members of low dimension whose generators
        // keep a term free of the last variable re-homogenize to the same
        // ideal, so the affine degree bound must apply and hold
        let spec = CorpusSpec {
            count: 20,
            max_vars: 3,
            max_degree: 3,
            max_generators: 3,
            seed: 13,
            target: TargetPosition::QuasiStable,
        };
        let corpus = generate_corpus(&spec).unwrap();
        let mut exercised = 0;
        for member in &corpus {
            let gens = &member.transformed.generators;
            let lt = member.transformed.groebner_basis.leading_ideal();
            if lt.dimension() > 1 {
                continue;
            }
            let nvars = gens[0].nvars();
            let keeps_constant_term = gens.iter().all(|g| {
                g.terms()
                    .iter()
                    .any(|(t, _)| t.exponent(nvars - 1) == 0)
            });
            if !keeps_constant_term {
                continue;
            }
            let affine: Vec<Polynomial> = gens.iter().map(Polynomial::dehomogenize).collect();
            if affine.iter().any(|g| g.is_zero() || g.degree() == Some(0)) {
                continue;
            }
            // a still-homogeneous system routes to the projective checks
            if affine.iter().all(Polynomial::is_homogeneous) {
                continue;
            }
            let report = verify_theorems(&affine, "affine", 0).unwrap();
            let check = report
                .checks
                .iter()
                .find(|c| c.id == "affine_lazard_bound")
                .unwrap();
            assert!(check.applicable, "homogenization should recover the member");
            assert_eq!(check.holds, Some(true), "{check:?}");
            exercised += 1;
        }
        assert!(exercised >= 3, "too few affine cases exercised: {exercised}");
    }

    #[test]
    fn fixtures_pass() {
        let summary = run_fixtures().unwrap();
        let failed: Vec<_> = summary.checks.iter().filter(|c| !c.passed).collect();
        assert!(failed.is_empty(), "failed fixture checks: {failed:?}");
    }

    #[test]
    fn small_corpus_passes_all_checks() {
        let spec = CorpusSpec {
            count: 10,
            max_vars: 3,
            max_degree: 3,
            max_generators: 3,
            seed: 7,
            target: TargetPosition::StronglyStable,
        };
        let summary = verify_corpus(&spec).unwrap();
        assert!(summary.all_passed(), "failures: {:?}", summary.failures);
    }
}
