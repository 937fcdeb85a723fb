//! The combinatorial sets `N(I)` (standard monomials), `F(I)` and the Mora
//! variant `F~(I)`, together with the two-sided degree/cardinality
//! inequalities they satisfy in strongly stable position.
//!
//! `F(I)` is `N(I)` for zero-dimensional ideals and otherwise recurses into
//! the ideal with the last variable set to zero: it collects the standard
//! monomials `tau * xn^a` with `tau` drawn from the restriction's `F` and
//! total degree below the maximal Gröbner basis degree. The `F~` variant
//! replaces "drawn from the restriction's `F`" by "standard for the
//! restriction"; it exists to reproduce a known failure and reports carry a
//! warning when it is used.

use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::ring::Term;
use crate::stability::MonomialIdeal;

/// All standard monomials of degree at most `up_to_degree`.
pub fn standard_monomials(ideal: &MonomialIdeal, up_to_degree: u32) -> Vec<Term> {
    let mut out = Vec::new();
    let mut exps = Vec::new();
    collect_standard(ideal, up_to_degree, &mut exps, &mut out);
    out.sort();
    out
}

fn collect_standard(ideal: &MonomialIdeal, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Term>) {
    if exps.len() == ideal.nvars() {
        let t = Term::new(exps.clone());
        if !ideal.contains(&t) {
            out.push(t);
        }
        return;
    }
    for e in 0..=left {
        exps.push(e);
        collect_standard(ideal, left - e, exps, out);
        exps.pop();
    }
}

/// Data for one restriction level of the recursion.
#[derive(Debug, Clone)]
pub struct FSetLevel {
    /// Number of variables at this level.
    pub nvars: usize,
    /// Dimension of the level ideal.
    pub dimension: usize,
    /// `deg(I, <)` of the level ideal.
    pub max_gb_degree: u32,
    /// Cardinality of `F` at this level.
    pub f_size: usize,
}

/// `F(I)` together with the per-level data of the recursion.
#[derive(Debug, Clone)]
pub struct FSetReport {
    pub f: Vec<Term>,
    /// Level 0 is the input ideal, level 1 its restriction, and so on.
    pub levels: Vec<FSetLevel>,
}

impl FSetReport {
    pub fn f_size(&self) -> usize {
        self.f.len()
    }
}

fn require_strongly_stable(lt: &MonomialIdeal) -> Result<()> {
    if !lt.is_strongly_stable() {
        return Err(Error::PositionRequired(
            "strongly stable position".into(),
        ));
    }
    Ok(())
}

/// `F(I)` of an ideal in strongly stable position, from its reduced basis.
pub fn f_set(gb: &GroebnerBasis) -> Result<FSetReport> {
    let lt = gb.leading_ideal();
    require_strongly_stable(&lt)?;
    let mut levels = Vec::new();
    let f = f_set_recursive(gb, &mut levels);
    Ok(FSetReport { f, levels })
}

fn f_set_recursive(gb: &GroebnerBasis, levels: &mut Vec<FSetLevel>) -> Vec<Term> {
    let lt = gb.leading_ideal();
    let dimension = lt.dimension();
    let level_index = levels.len();
    levels.push(FSetLevel {
        nvars: gb.nvars(),
        dimension,
        max_gb_degree: gb.max_degree(),
        f_size: 0,
    });
    let f = if dimension == 0 {
        // finite complement: the function vanishes from its regularity on
        let bound = crate::invariants::hilbert_series(&lt)
            .map(|h| h.hilb())
            .unwrap_or_else(|_| lt.max_generator_degree() * gb.nvars() as u32);
        standard_monomials(&lt, bound)
    } else {
        let inner = f_set_recursive(&gb.restrict_last(1), levels);
        let degree_bound = gb.max_degree();
        let nvars = gb.nvars();
        let mut out = Vec::new();
        for tau in &inner {
            if tau.degree() >= degree_bound {
                continue;
            }
            for a in 0..degree_bound - tau.degree() {
                let mut exps = tau.exponents().to_vec();
                exps.push(a);
                let candidate = Term::new(exps);
                debug_assert_eq!(candidate.arity(), nvars);
                if !lt.contains(&candidate) {
                    out.push(candidate);
                }
            }
        }
        out.sort();
        out
    };
    levels[level_index].f_size = f.len();
    f
}

/// The Mora variant: `tau` ranges over all standard monomials of the
/// restriction instead of its `F` set.
pub fn f_tilde_set(gb: &GroebnerBasis) -> Vec<Term> {
    let lt = gb.leading_ideal();
    if lt.dimension() == 0 {
        let bound = crate::invariants::hilbert_series(&lt)
            .map(|h| h.hilb())
            .unwrap_or_else(|_| lt.max_generator_degree() * gb.nvars() as u32);
        return standard_monomials(&lt, bound);
    }
    let degree_bound = gb.max_degree();
    let restricted_lt = gb.restrict_last(1).leading_ideal();
    let mut out = Vec::new();
    if degree_bound == 0 {
        return out;
    }
    for tau in standard_monomials(&restricted_lt, degree_bound - 1) {
        for a in 0..degree_bound - tau.degree() {
            let mut exps = tau.exponents().to_vec();
            exps.push(a);
            let candidate = Term::new(exps);
            if !lt.contains(&candidate) {
                out.push(candidate);
            }
        }
    }
    out.sort();
    out
}

/// Both sides of the degree and cardinality inequalities relating an ideal
/// to its last-variable restriction.
#[derive(Debug, Clone, serde::Serialize)]
pub struct MoraCheck {
    pub degree_lhs: u32,
    pub degree_rhs: u64,
    pub degree_holds: bool,
    pub count_lhs: u64,
    pub count_rhs: u64,
    pub count_holds: bool,
}

/// Evaluate the corrected inequalities
/// `deg(I,<) <= max(d, deg(I_n,<)) + #F(I_n)` and
/// `#F(I) <= max(d, #F(I_n))^2` for an ideal in strongly stable position.
/// `input_degree` is the maximal degree of the original generators.
pub fn lemma_mora_check(gb: &GroebnerBasis, input_degree: u32) -> Result<MoraCheck> {
    if gb.nvars() < 2 {
        return Err(Error::InvalidParameter(
            "the restriction inequalities need at least 2 variables".into(),
        ));
    }
    require_strongly_stable(&gb.leading_ideal())?;
    let outer = f_set(gb)?;
    let restricted = gb.restrict_last(1);
    let inner = f_set(&restricted)?;

    let degree_lhs = gb.max_degree();
    let degree_rhs = u64::from(input_degree.max(restricted.max_degree())) + inner.f_size() as u64;
    let count_lhs = outer.f_size() as u64;
    let base = u64::from(input_degree).max(inner.f_size() as u64);
    let count_rhs = base * base;
    Ok(MoraCheck {
        degree_lhs,
        degree_rhs,
        degree_holds: u64::from(degree_lhs) <= degree_rhs,
        count_lhs,
        count_rhs,
        count_holds: count_lhs <= count_rhs,
    })
}

/// The historical (refuted) version of the inequalities, using `F~`:
/// `deg(I,<) <= deg(I_n,<) + #F~(I_n)` and `#F(I) <= (#F~(I_n))^2`.
pub fn mora_variant_check(gb: &GroebnerBasis) -> Result<MoraCheck> {
    if gb.nvars() < 2 {
        return Err(Error::InvalidParameter(
            "the restriction inequalities need at least 2 variables".into(),
        ));
    }
    let restricted = gb.restrict_last(1);
    let inner = f_tilde_set(&restricted);
    let outer = f_tilde_set(gb);
    let degree_lhs = gb.max_degree();
    let degree_rhs = u64::from(restricted.max_degree()) + inner.len() as u64;
    let count_lhs = outer.len() as u64;
    let count_rhs = (inner.len() as u64) * (inner.len() as u64);
    Ok(MoraCheck {
        degree_lhs,
        degree_rhs,
        degree_holds: u64::from(degree_lhs) <= degree_rhs,
        count_lhs,
        count_rhs,
        count_holds: count_lhs <= count_rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{buchberger, BuchbergerOptions};
    use crate::ring::parse_ideal;

    fn gb_of(text: &str) -> GroebnerBasis {
        let (_, gens) = parse_ideal(text).unwrap();
        buchberger(&gens, &BuchbergerOptions::default()).unwrap().0
    }

    fn t(exps: &[u32]) -> Term {
        Term::new(exps.to_vec())
    }

    #[test]
    fn standard_monomials_of_artinian_ideal() {
        let j = MonomialIdeal::minimal_generators(
            2,
            [t(&[2, 0]), t(&[1, 1]), t(&[0, 3])],
        );
        let n = standard_monomials(&j, 10);
        assert_eq!(n, vec![t(&[0, 0]), t(&[0, 1]), t(&[1, 0]), t(&[0, 2])]);
        // counts agree with the Hilbert function table
        let data = crate::invariants::hilbert_series(&j).unwrap();
        for degree in 0..4u32 {
            let count = n.iter().filter(|m| m.degree() == degree).count();
            assert_eq!(num::BigInt::from(count), data.hf(degree));
        }
    }

    #[test]
    fn standard_monomials_bounded() {
        let j = MonomialIdeal::minimal_generators(1, [t(&[1])]);
        assert_eq!(standard_monomials(&j, 7), vec![t(&[0])]);
    }

    #[test]
    fn f_equals_n_in_dimension_zero() {
        // x1^2, x1x2 + x2^2 has gin <x1x2, x1^2, x2^3> and dim 0
        let gb = gb_of("ring: x1 x2\nx1^2\nx1*x2 + x2^2\n");
        let report = f_set(&gb).unwrap();
        assert_eq!(report.f_size(), 4);
        assert_eq!(report.levels[0].dimension, 0);
    }

    #[test]
    fn f_of_restricted_monomial_fixture() {
        // I = <x1^2, x2^11 x1>: F(I_2) = {1, x1}
        let gb = gb_of("ring: x1 x2\nx1^2\nx2^11*x1\n");
        let restricted = gb.restrict_last(1);
        let inner = f_set(&restricted).unwrap();
        assert_eq!(inner.f, vec![t(&[0]), t(&[1])]);

        let tilde = f_tilde_set(&gb);
        assert_eq!(tilde.len(), 23);

        let outer = f_set(&gb).unwrap();
        // F <= F~ always
        assert!(outer.f.iter().all(|m| tilde.contains(m)));
        assert!(outer.f.iter().all(|m| m.degree() < gb.max_degree()));
    }

    #[test]
    fn mora_fixture_checks() {
        let gb = gb_of("ring: x1 x2\nx1^2\nx2^11*x1\n");
        // the historical variant fails on both counts: 12 <= 4 and 23 <= 4
        let variant = mora_variant_check(&gb).unwrap();
        assert_eq!(variant.degree_lhs, 12);
        assert_eq!(variant.degree_rhs, 4);
        assert!(!variant.degree_holds);
        assert_eq!(variant.count_lhs, 23);
        assert_eq!(variant.count_rhs, 4);
        assert!(!variant.count_holds);
        // the corrected form holds (input degree d = 12)
        let fixed = lemma_mora_check(&gb, 12).unwrap();
        assert!(fixed.degree_holds);
        assert!(fixed.count_holds);
    }

    #[test]
    fn f_set_requires_strong_stability() {
        let gb = gb_of("ring: x1 x2 x3\nx1*x2 - x3^2\n");
        assert!(!gb.leading_ideal().is_strongly_stable());
        assert!(f_set(&gb).is_err());
    }

    #[test]
    fn zero_dimensional_count_bound() {
        // #F(I) <= d1 * d2 for a 0-dimensional complete intersection
        let gb = gb_of("ring: x1 x2\nx1^2\nx1*x2 + x2^2\n");
        let report = f_set(&gb).unwrap();
        assert!(report.f_size() as u64 <= 4);
        // in dimension zero, #F is the full standard-monomial count
        let data = crate::invariants::hilbert_series(&gb.leading_ideal()).unwrap();
        assert_eq!(num::BigInt::from(report.f_size()), data.numerator_at_one());
    }
}
