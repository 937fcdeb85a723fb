//! Exact evaluation of the closed-form degree and regularity bounds, plus
//! pairwise comparison of all bounds applicable to a parameter set.
//!
//! Values are either materialized as exact rationals or kept in the symbolic
//! power form `coeff * base^(exp2/2)` once the materialized size would pass
//! the bit cap (or the exponent is half-integral, which happens only for the
//! dimension-zero branch of `hs_A` with `n - D` odd). Comparisons against
//! integers and between bounds square both sides first, so they stay exact
//! whenever anything desk-sized is involved; only two astronomically large
//! symbolic values fall back to log comparison.

use std::cmp::Ordering;

use num::bigint::BigUint;
use num::{BigInt, BigRational, One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::invariants::padded_degrees;

/// Default materialization cap in bits; `STABLEGB_BIT_CAP` overrides it in
/// the command-line interface.
pub const DEFAULT_BIT_CAP: u64 = 1_000_000;

/// Every bound formula the crate evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[allow(non_camel_case_types)]
pub enum Formula {
    moller_mora,
    giusti,
    dube,
    caviglia_sbarra,
    mayr_ritscher,
    hs_A,
    hs_A_depth,
    hs_C,
    hs_C_depth,
    macaulay_0dim,
    lazard,
    lazard_affine,
    cm_noether,
    fset_bound,
}

impl Formula {
    pub const ALL: [Formula; 14] = [
        Formula::moller_mora,
        Formula::giusti,
        Formula::dube,
        Formula::caviglia_sbarra,
        Formula::mayr_ritscher,
        Formula::hs_A,
        Formula::hs_A_depth,
        Formula::hs_C,
        Formula::hs_C_depth,
        Formula::macaulay_0dim,
        Formula::lazard,
        Formula::lazard_affine,
        Formula::cm_noether,
        Formula::fset_bound,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Formula::moller_mora => "moller_mora",
            Formula::giusti => "giusti",
            Formula::dube => "dube",
            Formula::caviglia_sbarra => "caviglia_sbarra",
            Formula::mayr_ritscher => "mayr_ritscher",
            Formula::hs_A => "hs_A",
            Formula::hs_A_depth => "hs_A_depth",
            Formula::hs_C => "hs_C",
            Formula::hs_C_depth => "hs_C_depth",
            Formula::macaulay_0dim => "macaulay_0dim",
            Formula::lazard => "lazard",
            Formula::lazard_affine => "lazard_affine",
            Formula::cm_noether => "cm_noether",
            Formula::fset_bound => "fset_bound",
        }
    }
}

/// Inputs a formula may consume; each formula checks its own preconditions.
#[derive(Debug, Clone, Default)]
pub struct BoundParams {
    pub n: usize,
    pub d: u32,
    pub dim: Option<usize>,
    pub depth: Option<usize>,
    pub degrees: Option<Vec<u32>>,
}

impl BoundParams {
    fn dim(&self, formula: Formula) -> Result<usize> {
        self.dim.ok_or_else(|| {
            Error::InvalidParameter(format!("{} needs the dimension", formula.id()))
        })
    }

    fn depth(&self, formula: Formula) -> Result<usize> {
        self.depth.ok_or_else(|| {
            Error::InvalidParameter(format!("{} needs the depth", formula.id()))
        })
    }

    fn degrees(&self, formula: Formula) -> Result<&[u32]> {
        self.degrees.as_deref().ok_or_else(|| {
            Error::InvalidParameter(format!("{} needs the generator degrees", formula.id()))
        })
    }
}

/// A bound value: exact, or `coeff * base^(exp2/2)` above the bit cap.
#[derive(Debug, Clone, PartialEq)]
pub enum Magnitude {
    Exact(BigRational),
    Power {
        coeff: u32,
        base: BigRational,
        exp2: BigUint,
    },
}

impl Magnitude {
    fn power(coeff: u32, base: BigRational, exp2: BigUint, cap_bits: u64) -> Magnitude {
        if base.is_one() {
            return Magnitude::Exact(rat(coeff as i64));
        }
        let m = Magnitude::Power { coeff, base, exp2 };
        match m.materialize(cap_bits) {
            Some(v) => Magnitude::Exact(v),
            None => m,
        }
    }

    /// Approximate size of the value in bits.
    pub fn log2(&self) -> f64 {
        match self {
            Magnitude::Exact(v) => ratio_log2(v),
            Magnitude::Power { coeff, base, exp2 } => {
                (*coeff as f64).log2() + exp2_to_f64(exp2) / 2.0 * ratio_log2(base)
            }
        }
    }

    /// Exact value when the exponent is integral and the size fits the cap.
    pub fn materialize(&self, cap_bits: u64) -> Option<BigRational> {
        match self {
            Magnitude::Exact(v) => Some(v.clone()),
            Magnitude::Power { coeff, base, exp2 } => {
                if exp2 % 2u32 != BigUint::zero() {
                    return None;
                }
                if self.log2() > cap_bits as f64 {
                    return None;
                }
                let e = (exp2 / 2u32).to_usize()?;
                Some(num::pow::pow(base.clone(), e) * BigRational::from_integer(BigInt::from(*coeff)))
            }
        }
    }

    /// Exact square when it fits within twice the cap.
    fn square(&self, cap_bits: u64) -> Option<BigRational> {
        match self {
            Magnitude::Exact(v) => Some(v * v),
            Magnitude::Power { coeff, base, exp2 } => {
                if self.log2() * 2.0 > 2.0 * cap_bits as f64 {
                    return None;
                }
                let e = exp2.to_usize()?;
                let c = BigRational::from_integer(BigInt::from(*coeff));
                Some(num::pow::pow(base.clone(), e) * &c * &c)
            }
        }
    }

    /// Total order on the magnitudes. Exact whenever either side squares
    /// under the cap or both sides share coefficient and base; the remaining
    /// comparisons of two astronomically large values use logarithms.
    pub fn compare(&self, other: &Magnitude, cap_bits: u64) -> Ordering {
        if let (Magnitude::Exact(a), Magnitude::Exact(b)) = (self, other) {
            return a.cmp(b);
        }
        if let (Some(a), Some(b)) = (self.square(cap_bits), other.square(cap_bits)) {
            return a.cmp(&b);
        }
        if let (
            Magnitude::Power { coeff: c1, base: b1, exp2: e1 },
            Magnitude::Power { coeff: c2, base: b2, exp2: e2 },
        ) = (self, other)
        {
            if c1 == c2 && b1 == b2 {
                return e1.cmp(e2);
            }
        }
        self.log2()
            .partial_cmp(&other.log2())
            .unwrap_or(Ordering::Equal)
    }

    /// Does the bound dominate the given integer? Exact via squaring.
    pub fn at_least(&self, value: &BigInt, cap_bits: u64) -> bool {
        if value <= &BigInt::zero() {
            return true;
        }
        let v = BigRational::from_integer(value.clone());
        if let Magnitude::Exact(x) = self {
            return *x >= v;
        }
        match self.square(cap_bits) {
            Some(sq) => sq >= &v * &v,
            // not materializable even squared: the bound exceeds the cap
            // while the integer is desk-sized
            None => self.log2() >= ratio_log2(&v),
        }
    }

    pub fn display(&self) -> String {
        match self {
            Magnitude::Exact(v) => {
                if v.denom().is_one() {
                    v.numer().to_string()
                } else {
                    format!("{}/{} (ceil {})", v.numer(), v.denom(), v.ceil().to_integer())
                }
            }
            Magnitude::Power { coeff, base, exp2 } => {
                let base_str = if base.denom().is_one() {
                    base.numer().to_string()
                } else {
                    format!("({}/{})", base.numer(), base.denom())
                };
                let exp_str = if exp2 % 2u32 == BigUint::zero() {
                    (exp2 / 2u32).to_string()
                } else {
                    format!("({exp2}/2)")
                };
                if *coeff == 1 {
                    format!("{base_str}^{exp_str}")
                } else {
                    format!("{coeff}*{base_str}^{exp_str}")
                }
            }
        }
    }
}

fn ratio_log2(v: &BigRational) -> f64 {
    let num_bits = v.numer().bits() as f64;
    let den_bits = v.denom().bits() as f64;
    // refine with the top limbs for small values
    match v.to_f64() {
        Some(f) if f.is_finite() && f > 0.0 => f.log2(),
        _ => num_bits - den_bits,
    }
}

fn exp2_to_f64(e: &BigUint) -> f64 {
    e.to_f64().unwrap_or(f64::MAX)
}

/// One evaluated bound.
#[derive(Debug, Clone)]
pub struct BoundValue {
    pub formula: Formula,
    pub magnitude: Magnitude,
}

impl BoundValue {
    pub fn display(&self) -> String {
        self.magnitude.display()
    }

    pub fn at_least(&self, value: &BigInt, cap_bits: u64) -> bool {
        self.magnitude.at_least(value, cap_bits)
    }
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn exact_int(v: i64) -> Magnitude {
    Magnitude::Exact(rat(v))
}

fn pow2(k: usize) -> BigUint {
    BigUint::one() << k
}

fn check(ok: bool, formula: Formula, requirement: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "{} requires {requirement}",
            formula.id()
        )))
    }
}

/// Evaluate one formula with the default bit cap.
pub fn bound(formula: Formula, params: &BoundParams) -> Result<BoundValue> {
    bound_with_cap(formula, params, DEFAULT_BIT_CAP)
}

pub fn bound_with_cap(formula: Formula, params: &BoundParams, cap_bits: u64) -> Result<BoundValue> {
    let n = params.n;
    let d = params.d as i64;
    check(n >= 1, formula, "n >= 1")?;
    check(d >= 1, formula, "d >= 1")?;
    let magnitude = match formula {
        Formula::moller_mora => {
            // (2d)^((2n+2)^(n+1))
            let e = num::pow::pow(BigUint::from(2 * n as u64 + 2), n + 1);
            Magnitude::power(1, rat(2 * d), e * 2u32, cap_bits)
        }
        Formula::giusti => Magnitude::power(1, rat(2 * d), pow2(n), cap_bits),
        Formula::dube => {
            // 2 (d^2/2 + d)^(2^(n-1))
            let base = rat(d * d) / rat(2) + rat(d);
            Magnitude::power(2, base, pow2(n), cap_bits)
        }
        Formula::caviglia_sbarra => {
            check(n >= 2, formula, "n >= 2")?;
            Magnitude::power(1, rat(2 * d), pow2(n - 1), cap_bits)
        }
        Formula::mayr_ritscher => {
            let dim = params.dim(formula)?;
            check((1..n).contains(&dim), formula, "1 <= D <= n-1")?;
            let base = num::pow::pow(rat(d), n - dim) / rat(2) + rat(d);
            Magnitude::power(2, base, pow2(dim), cap_bits)
        }
        Formula::hs_A => {
            let dim = params.dim(formula)?;
            check(dim < n, formula, "0 <= D <= n-1")?;
            let linear = rat((n as i64 - dim as i64 + 1) * (d - 1) + 1);
            let e2 = BigUint::from(n - dim) * pow2(dim);
            let power = Magnitude::power(2, rat(d), e2, cap_bits);
            if power.compare(&Magnitude::Exact(linear.clone()), cap_bits) == Ordering::Less {
                Magnitude::Exact(linear)
            } else {
                power
            }
        }
        Formula::hs_A_depth => {
            let dim = params.dim(formula)?;
            let depth = params.depth(formula)?;
            check(dim > 1, formula, "D > 1")?;
            check(dim > depth, formula, "D > depth")?;
            check(dim < n, formula, "D <= n-1")?;
            let e2 = BigUint::from(n - dim) * pow2(dim - depth);
            Magnitude::power(2, rat(d), e2, cap_bits)
        }
        Formula::hs_C => {
            let dim = params.dim(formula)?;
            check((1..n).contains(&dim), formula, "1 <= D <= n-1")?;
            let base = num::pow::pow(rat(d), n - dim) + rat((n as i64 - dim as i64) * (d - 1));
            Magnitude::power(1, base, pow2(dim), cap_bits)
        }
        Formula::hs_C_depth => {
            let dim = params.dim(formula)?;
            let depth = params.depth(formula)?;
            check((1..n).contains(&dim), formula, "1 <= D <= n-1")?;
            check(dim > depth, formula, "D > depth")?;
            let base = num::pow::pow(rat(d), n - dim) + rat((n as i64 - dim as i64) * (d - 1));
            Magnitude::power(1, base, pow2(dim - depth), cap_bits)
        }
        Formula::macaulay_0dim => {
            let degrees = padded_degrees(params.degrees(formula)?, n);
            exact_int(degrees.iter().map(|&x| x as i64).sum::<i64>() - n as i64 + 1)
        }
        Formula::lazard => {
            let depth = params.depth(formula)?;
            check(depth < n, formula, "depth < n")?;
            let r = n - depth;
            let degrees = padded_degrees(params.degrees(formula)?, r);
            exact_int(degrees.iter().map(|&x| x as i64).sum::<i64>() - r as i64 + 1)
        }
        Formula::lazard_affine => {
            let depth = params.depth(formula)?;
            check(depth < n + 1, formula, "depth <= n")?;
            let r = n + 1 - depth;
            let degrees = padded_degrees(params.degrees(formula)?, r);
            exact_int(degrees.iter().map(|&x| x as i64).sum::<i64>() - r as i64 + 1)
        }
        Formula::cm_noether => {
            let dim = params.dim(formula)?;
            check(dim < n, formula, "D < n")?;
            let r = n - dim;
            let degrees = padded_degrees(params.degrees(formula)?, r);
            exact_int(degrees.iter().map(|&x| x as i64).sum::<i64>() - r as i64 + 1)
        }
        Formula::fset_bound => {
            let dim = params.dim(formula)?;
            check(dim < n, formula, "D <= n-1")?;
            let e2 = BigUint::from(n - dim) * pow2(dim + 1);
            Magnitude::power(1, rat(d), e2, cap_bits)
        }
    };
    Ok(BoundValue { formula, magnitude })
}

/// Every bound applicable to `(n, d, D, depth?)`, sorted ascending; formulas
/// needing generator degrees are included when degrees are supplied.
pub fn compare_bounds(params: &BoundParams, cap_bits: u64) -> Vec<BoundValue> {
    let mut out: Vec<BoundValue> = Formula::ALL
        .iter()
        .filter_map(|&f| bound_with_cap(f, params, cap_bits).ok())
        .collect();
    out.sort_by(|a, b| {
        a.magnitude
            .compare(&b.magnitude, cap_bits)
            .then_with(|| a.formula.id().cmp(b.formula.id()))
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: usize, d: u32, dim: impl Into<Option<usize>>, depth: impl Into<Option<usize>>) -> BoundParams {
        BoundParams {
            n,
            d,
            dim: dim.into(),
            depth: depth.into(),
            degrees: None,
        }
    }

    fn value_of(formula: Formula, p: &BoundParams) -> BigInt {
        bound(formula, p)
            .unwrap()
            .magnitude
            .materialize(DEFAULT_BIT_CAP)
            .unwrap()
            .ceil()
            .to_integer()
    }

    #[test]
    fn remark_comparisons() {
        // frozen by direct formula evaluation
        assert_eq!(value_of(Formula::hs_A, &params(5, 3, 4, None)), BigInt::from(13122));
        assert_eq!(value_of(Formula::hs_C, &params(5, 3, 4, None)), BigInt::from(390625));
        assert_eq!(value_of(Formula::hs_A, &params(5, 2, 4, None)), BigInt::from(512));
        assert_eq!(
            value_of(Formula::mayr_ritscher, &params(5, 2, 4, None)),
            BigInt::from(13122)
        );
        assert_eq!(value_of(Formula::hs_A, &params(5, 4, 2, None)), BigInt::from(8192));
        assert_eq!(
            value_of(Formula::mayr_ritscher, &params(5, 4, 2, None)),
            BigInt::from(2592)
        );
        assert_eq!(
            value_of(Formula::mayr_ritscher, &params(5, 2, 3, None)),
            BigInt::from(512)
        );
        assert_eq!(value_of(Formula::hs_C, &params(5, 2, 3, None)), BigInt::from(1296));
    }

    #[test]
    fn remark_discrepancies_evaluate_exactly() {
        // these two computed directions disagree with the printed claims;
        // the values themselves are what matters
        assert_eq!(value_of(Formula::hs_A, &params(3, 5, 2, None)), BigInt::from(50));
        assert_eq!(value_of(Formula::hs_C, &params(3, 5, 2, None)), BigInt::from(81));
        assert_eq!(
            value_of(Formula::mayr_ritscher, &params(4, 5, 1, None)),
            BigInt::from(135)
        );
        assert_eq!(value_of(Formula::hs_C, &params(4, 5, 1, None)), BigInt::from(137));
    }

    #[test]
    fn mayr_ritscher_fractional_display() {
        // odd d leaves a half-integral intermediate; the exact rational and
        // its ceiling are both reported
        let b = bound(Formula::mayr_ritscher, &params(4, 5, 1, None)).unwrap();
        assert_eq!(b.display(), "135");
        let b = bound(Formula::mayr_ritscher, &params(3, 3, 1, None)).unwrap();
        // 2 (9/2 + 3) = 15
        assert_eq!(b.display(), "15");
        let b = bound(Formula::mayr_ritscher, &params(4, 3, 2, None)).unwrap();
        // 2 (9/2 + 3)^2 = 2 (15/2)^2 = 225/2
        assert!(b.display().contains("225/2"));
        assert!(b.display().contains("ceil 113"));
    }

    #[test]
    fn degree_list_bounds() {
        let p = BoundParams {
            n: 3,
            d: 5,
            dim: Some(0),
            depth: Some(0),
            degrees: Some(vec![5, 5, 5]),
        };
        assert_eq!(value_of(Formula::lazard, &p), BigInt::from(13));
        assert_eq!(value_of(Formula::macaulay_0dim, &p), BigInt::from(13));
        let p22 = BoundParams {
            n: 2,
            d: 2,
            dim: Some(0),
            depth: Some(0),
            degrees: Some(vec![2, 2]),
        };
        assert_eq!(value_of(Formula::macaulay_0dim, &p22), BigInt::from(3));
        // padding with ones
        let short = BoundParams {
            n: 4,
            d: 3,
            dim: None,
            depth: Some(0),
            degrees: Some(vec![3, 2]),
        };
        assert_eq!(value_of(Formula::lazard, &short), BigInt::from(3 + 2 + 1 + 1 - 4 + 1));
    }

    #[test]
    fn half_exponent_case() {
        // hs_A at D = 0 with odd n: exponent (n-D)/2 is half-integral
        let b = bound(Formula::hs_A, &params(3, 5, 0, None)).unwrap();
        match &b.magnitude {
            Magnitude::Power { coeff: 2, exp2, .. } => {
                assert_eq!(exp2, &BigUint::from(3u32));
            }
            other => panic!("expected symbolic half power, got {other:?}"),
        }
        // 2*5^1.5 ~ 22.36: dominates 22, not 23
        assert!(b.at_least(&BigInt::from(22), DEFAULT_BIT_CAP));
        assert!(!b.at_least(&BigInt::from(23), DEFAULT_BIT_CAP));
        // and the linear branch can win: n=3, d=1 gives max(1, 2*1) = 2
        let b = bound(Formula::hs_A, &params(3, 1, 0, None)).unwrap();
        assert_eq!(b.display(), "2");
    }

    #[test]
    fn symbolic_above_cap() {
        // moller_mora at n = 5 blows past the default cap
        let b = bound(Formula::moller_mora, &params(5, 2, None, None)).unwrap();
        assert!(matches!(b.magnitude, Magnitude::Power { .. }));
        assert!(b.display().starts_with("4^"));
        assert!(b.at_least(&BigInt::from(u64::MAX), DEFAULT_BIT_CAP));
        // and is strictly larger than everything materialized
        let g = bound(Formula::giusti, &params(5, 2, None, None)).unwrap();
        assert_eq!(
            b.magnitude.compare(&g.magnitude, DEFAULT_BIT_CAP),
            Ordering::Greater
        );
    }

    #[test]
    fn materialized_and_symbolic_agree() {
        for n in 1..=4usize {
            for d in 2..=6u32 {
                let p = params(n, d, None, None);
                let b = bound(Formula::giusti, &p).unwrap();
                let big_cap = b.magnitude.materialize(DEFAULT_BIT_CAP).unwrap();
                // force the symbolic representation with a tiny cap
                let sym = bound_with_cap(Formula::giusti, &p, 0).unwrap();
                assert!(matches!(sym.magnitude, Magnitude::Power { .. }));
                assert_eq!(sym.magnitude.materialize(DEFAULT_BIT_CAP).unwrap(), big_cap);
                assert_eq!(
                    sym.magnitude.compare(&b.magnitude, DEFAULT_BIT_CAP),
                    Ordering::Equal
                );
            }
        }
    }

    #[test]
    fn depth_variants_collapse_at_zero_depth() {
        for n in 3..=5usize {
            for d in 2..=4u32 {
                for dim in 2..n {
                    let with_depth = params(n, d, dim, 0usize);
                    let a_depth = bound(Formula::hs_A_depth, &with_depth).unwrap();
                    // exponential branch of hs_A
                    let e2 = BigUint::from(n - dim) * (BigUint::one() << dim);
                    let a_exp = Magnitude::power(2, rat(d as i64), e2, DEFAULT_BIT_CAP);
                    assert_eq!(
                        a_depth.magnitude.compare(&a_exp, DEFAULT_BIT_CAP),
                        Ordering::Equal
                    );
                    let c_depth = bound(Formula::hs_C_depth, &with_depth).unwrap();
                    let c = bound(Formula::hs_C, &with_depth).unwrap();
                    assert_eq!(
                        c_depth.magnitude.compare(&c.magnitude, DEFAULT_BIT_CAP),
                        Ordering::Equal
                    );
                }
            }
        }
    }

    #[test]
    fn depth_reduction_consistency() {
        // evaluating the undepthed bounds in n - depth variables and
        // dimension D - depth reproduces the depth-refined variants
        for n in 4..=5usize {
            for d in 2..=3u32 {
                for dim in 2..n {
                    for depth in 1..dim.min(2) + 1 {
                        if dim <= depth || dim - depth < 1 {
                            continue;
                        }
                        let refined = bound(Formula::hs_C_depth, &params(n, d, dim, depth)).unwrap();
                        let reduced = bound(Formula::hs_C, &params(n - depth, d, dim - depth, None));
                        if let Ok(reduced) = reduced {
                            assert_eq!(
                                refined.magnitude.compare(&reduced.magnitude, DEFAULT_BIT_CAP),
                                Ordering::Equal,
                                "hs_C n={n} d={d} D={dim} depth={depth}"
                            );
                        }
                        if dim > 1 && dim - depth >= 1 {
                            let refined =
                                bound(Formula::hs_A_depth, &params(n, d, dim, depth)).unwrap();
                            let e2 = BigUint::from((n - depth) - (dim - depth))
                                * (BigUint::one() << (dim - depth));
                            let reduced = Magnitude::power(2, rat(d as i64), e2, DEFAULT_BIT_CAP);
                            assert_eq!(
                                refined.magnitude.compare(&reduced, DEFAULT_BIT_CAP),
                                Ordering::Equal,
                                "hs_A n={n} d={d} D={dim} depth={depth}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn monotone_in_degree() {
        for n in 2..=5usize {
            for dim in 0..n {
                for d in 1..10u32 {
                    for f in Formula::ALL {
                        // modest cap: huge values stay symbolic on purpose
                        let cap = 16_384;
                        let lo = bound_with_cap(f, &params(n, d, dim, 0usize), cap);
                        let hi = bound_with_cap(f, &params(n, d + 1, dim, 0usize), cap);
                        if let (Ok(lo), Ok(hi)) = (lo, hi) {
                            assert_ne!(
                                lo.magnitude.compare(&hi.magnitude, cap),
                                Ordering::Greater,
                                "{} at n={n} D={dim} d={d}",
                                f.id()
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn table_is_sorted() {
        let table = compare_bounds(&params(5, 4, 2, 0usize), DEFAULT_BIT_CAP);
        assert!(table.len() >= 6);
        for pair in table.windows(2) {
            assert_ne!(
                pair[0].magnitude.compare(&pair[1].magnitude, DEFAULT_BIT_CAP),
                Ordering::Greater
            );
        }
        // spot check: B(5,4,2) = 2592 < A(5,4,2) = 8192
        let pos = |f: Formula| table.iter().position(|b| b.formula == f).unwrap();
        assert!(pos(Formula::mayr_ritscher) < pos(Formula::hs_A));
    }
}
