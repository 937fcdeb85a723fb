//! Pommaret division, involutive completion, and the Pommaret-basis routes to
//! Castelnuovo-Mumford regularity and depth.
//!
//! The class of a term is the largest variable index with positive exponent;
//! its multiplicative variables are that variable and everything smaller in
//! the order (larger in index). A finite Pommaret basis exists exactly for
//! ideals in quasi stable position, so completion first decides that verdict
//! on the leading ideal and only then runs on a guaranteed-finite problem.

use crate::error::{Error, Result};
use crate::groebner::{normal_form, GroebnerBasis};
use crate::ring::{Polynomial, Term};
use crate::stability::MonomialIdeal;

/// Checked class of a term (largest variable index with positive exponent,
/// 0-based). The constant term has no class.
pub fn cls(t: &Term) -> Result<usize> {
    t.class_index()
        .ok_or_else(|| Error::InvalidParameter("the constant term has no class".into()))
}

/// Pommaret divisibility: `b` divides `a` and the quotient involves only
/// variables with index at least the class of `b`.
pub fn pommaret_divides(b: &Term, a: &Term) -> bool {
    let Some(class) = b.class_index() else {
        return false;
    };
    match a.try_div(b) {
        Some(q) => q.class_index().is_none_or(|c| c >= class) && q.exponents()[..class].iter().all(|&e| e == 0),
        None => false,
    }
}

/// One element of a Pommaret basis with its class metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct PommaretElement {
    pub polynomial: Polynomial,
    /// 0-based class of the leading term.
    pub class: usize,
}

impl PommaretElement {
    /// 0-based indices of the multiplicative variables.
    pub fn multiplicative(&self, nvars: usize) -> Vec<usize> {
        (self.class..nvars).collect()
    }
}

/// A finite Pommaret basis: the involutive cones of the leading terms are
/// pairwise disjoint and cover the leading ideal.
#[derive(Debug, Clone, PartialEq)]
pub struct PommaretBasis {
    nvars: usize,
    elements: Vec<PommaretElement>,
    max_degree: u32,
    max_class: usize,
}

impl PommaretBasis {
    fn new(nvars: usize, mut elements: Vec<PommaretElement>) -> Self {
        elements.sort_by(|a, b| {
            a.polynomial
                .leading_term()
                .unwrap()
                .cmp(b.polynomial.leading_term().unwrap())
        });
        let max_degree = elements
            .iter()
            .map(|e| e.polynomial.degree().unwrap())
            .max()
            .unwrap_or(0);
        let max_class = elements.iter().map(|e| e.class).max().unwrap_or(0);
        PommaretBasis {
            nvars,
            elements,
            max_degree,
            max_class,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn elements(&self) -> &[PommaretElement] {
        &self.elements
    }

    pub fn leading_terms(&self) -> Vec<Term> {
        self.elements
            .iter()
            .map(|e| e.polynomial.leading_term().unwrap().clone())
            .collect()
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    /// 0-based maximal class over the elements.
    pub fn max_class(&self) -> usize {
        self.max_class
    }

    /// Castelnuovo-Mumford regularity: the maximal element degree.
    pub fn regularity(&self) -> u32 {
        self.max_degree
    }

    /// Depth: the number of trailing variables below every class.
    pub fn depth(&self) -> usize {
        self.nvars - (self.max_class + 1)
    }

    /// Drop the last `count` variables; allowed up to the depth.
    pub fn restrict_last(&self, count: usize) -> Result<PommaretBasis> {
        if count > self.depth() {
            return Err(Error::InvalidParameter(format!(
                "cannot restrict by {count} variables: depth is {}",
                self.depth()
            )));
        }
        if count == 0 {
            return Ok(self.clone());
        }
        let elements = self
            .elements
            .iter()
            .map(|e| PommaretElement {
                polynomial: e.polynomial.restrict_last(count),
                class: e.class,
            })
            .collect();
        Ok(PommaretBasis::new(self.nvars - count, elements))
    }
}

/// Remainder of `f` under involutive division: no term of the result is
/// Pommaret-divisible by a leading term of the basis.
pub fn involutive_normal_form(f: &Polynomial, basis: &PommaretBasis) -> Polynomial {
    let mut cur = f.clone();
    let mut remainder: Vec<(Term, crate::ring::Coeff)> = Vec::new();
    'outer: while let Some((lt, lc)) = cur.terms().first().cloned() {
        for e in &basis.elements {
            let glt = e.polynomial.leading_term().unwrap();
            if pommaret_divides(glt, &lt) {
                let u = lt.try_div(glt).unwrap();
                let factor = &lc / e.polynomial.leading_coeff().unwrap();
                cur = cur.sub(&e.polynomial.mul_monomial(&u, &factor));
                continue 'outer;
            }
        }
        remainder.push((lt.clone(), lc.clone()));
        cur = cur.sub(&Polynomial::monomial(cur.nvars(), lt, lc));
    }
    Polynomial::from_terms(f.nvars(), remainder)
}

/// Outcome of an involutive completion.
#[derive(Debug, Clone)]
pub enum CompletionResult {
    Complete(PommaretBasis),
    /// The leading ideal is not quasi stable, so no finite basis exists;
    /// carries the failing generator and variable pair (0-based).
    NotQuasiStable {
        generator: Term,
        removed_var: usize,
        blocked_var: usize,
    },
}

/// Monomial involutive completion. Quasi stability of `ideal` must already
/// hold; the degree cap is only a crash guard.
fn complete_terms(ideal: &MonomialIdeal, degree_cap: u32) -> Result<Vec<Term>> {
    let mut set: Vec<Term> = ideal.generators().to_vec();
    loop {
        // products of elements with their nonmultiplicative variables that
        // have no Pommaret divisor yet, smallest first
        let mut obstruction: Option<Term> = None;
        for m in &set {
            let class = m.class_index().expect("unit cannot generate a proper ideal");
            for var in 0..class {
                let product = m.mul_var(var);
                if set.iter().any(|h| pommaret_divides(h, &product)) {
                    continue;
                }
                if obstruction.as_ref().is_none_or(|o| product < *o) {
                    obstruction = Some(product);
                }
            }
        }
        match obstruction {
            None => break,
            Some(p) => {
                if p.degree() > degree_cap {
                    return Err(Error::DegreeCapExceeded {
                        cap: degree_cap,
                        partial: set.into_iter().map(Polynomial::term).collect(),
                    });
                }
                set.push(p);
                // involutive autoreduction
                loop {
                    let removable = set.iter().position(|h| {
                        set.iter()
                            .any(|other| other != h && pommaret_divides(other, h))
                    });
                    match removable {
                        Some(i) => {
                            set.remove(i);
                        }
                        None => break,
                    }
                }
            }
        }
    }
    set.sort();
    Ok(set)
}

/// Pommaret basis of the monomial ideal itself, or the quasi-stability
/// obstruction.
pub fn complete_monomial_ideal(ideal: &MonomialIdeal, degree_cap: u32) -> Result<CompletionResult> {
    if let Some((generator, removed_var, blocked_var)) = ideal.quasi_stable_witness() {
        return Ok(CompletionResult::NotQuasiStable {
            generator,
            removed_var,
            blocked_var,
        });
    }
    let terms = complete_terms(ideal, degree_cap)?;
    let elements = terms
        .into_iter()
        .map(|t| {
            let class = t.class_index().unwrap();
            PommaretElement {
                polynomial: Polynomial::term(t),
                class,
            }
        })
        .collect();
    Ok(CompletionResult::Complete(PommaretBasis::new(
        ideal.nvars(),
        elements,
    )))
}

/// Pommaret basis of the ideal of a reduced Gröbner basis: the monomial
/// completion of the leading ideal, lifted to tail-reduced polynomials.
pub fn pommaret_completion(gb: &GroebnerBasis, degree_cap: u32) -> Result<CompletionResult> {
    let lt = gb.leading_ideal();
    if let Some((generator, removed_var, blocked_var)) = lt.quasi_stable_witness() {
        return Ok(CompletionResult::NotQuasiStable {
            generator,
            removed_var,
            blocked_var,
        });
    }
    let terms = complete_terms(&lt, degree_cap)?;
    let elements = terms
        .into_iter()
        .map(|m| {
            let class = m.class_index().unwrap();
            let g = gb
                .generators()
                .iter()
                .find(|g| g.leading_term().unwrap().divides(&m))
                .expect("completed term lies in the leading ideal");
            let u = m.try_div(g.leading_term().unwrap()).unwrap();
            let lifted = g.mul_monomial(&u, &g.leading_coeff().unwrap().recip());
            PommaretElement {
                polynomial: tail_reduce(&lifted, gb.generators()),
                class,
            }
        })
        .collect();
    Ok(CompletionResult::Complete(PommaretBasis::new(
        gb.nvars(),
        elements,
    )))
}

/// Reduce every non-leading term fully; the leading monomial is kept.
fn tail_reduce(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let (_, _, lm) = f.leading_data().unwrap();
    lm.add(&normal_form(&f.sub(&lm), basis))
}
