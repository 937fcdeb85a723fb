//! Degree-by-degree Buchberger computation with the normal strategy, reduced
//! Gröbner bases, degree-truncated bases and an early-termination certificate
//! for strongly stable leading ideals.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use crate::error::{Error, Result};
use crate::ring::{Polynomial, Term};
use crate::stability::MonomialIdeal;

/// A reduced Gröbner basis w.r.t. degrevlex: monic generators with pairwise
/// distinct leading terms, none of which divides a term of another generator.
/// Generators are kept in ascending leading-term order.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis {
    nvars: usize,
    generators: Vec<Polynomial>,
    max_degree: u32,
}

impl GroebnerBasis {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Maximal degree of a generator of the reduced basis.
    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn leading_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::minimal_generators(
            self.nvars,
            self.generators.iter().map(|g| g.leading_term().unwrap().clone()),
        )
    }

    /// Set the last `count` variables to zero. For degrevlex and homogeneous
    /// ideals this yields the reduced basis of the restricted ideal.
    pub fn restrict_last(&self, count: usize) -> GroebnerBasis {
        let generators: Vec<Polynomial> = self
            .generators
            .iter()
            .map(|g| g.restrict_last(count))
            .filter(|g| !g.is_zero())
            .collect();
        let max_degree = generators.iter().filter_map(Polynomial::degree).max().unwrap_or(0);
        GroebnerBasis {
            nvars: self.nvars - count,
            generators,
            max_degree,
        }
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        normal_form(f, &self.generators).is_zero()
    }
}

/// Per-degree record of an S-pair run.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct DegreeEntry {
    pub degree: u32,
    pub pairs_treated: usize,
    pub new_generators: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, serde::Serialize)]
pub struct BuchbergerTrace {
    pub per_degree: Vec<DegreeEntry>,
    pub early_stop_degree: Option<u32>,
}

#[derive(Debug, Clone)]
pub struct BuchbergerOptions {
    /// Stop once the current leading ideal is strongly stable and a full
    /// degree brings no new generator.
    pub early_stop_if_stable: bool,
    /// Resource guard; Buchberger itself always terminates.
    pub degree_cap: u32,
}

impl Default for BuchbergerOptions {
    fn default() -> Self {
        BuchbergerOptions {
            early_stop_if_stable: false,
            degree_cap: 64,
        }
    }
}

/// Remainder of `f` under full division by `basis`: no term of the result is
/// divisible by any leading term of `basis`. Divisors are tried in order.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let mut cur = f.clone();
    let mut remainder: Vec<(Term, crate::ring::Coeff)> = Vec::new();
    'outer: while let Some((lt, lc)) = cur.terms().first().cloned() {
        for g in basis {
            if g.is_zero() {
                continue;
            }
            let glt = g.leading_term().unwrap();
            if let Some(u) = lt.try_div(glt) {
                let factor = &lc / g.leading_coeff().unwrap();
                cur = cur.sub(&g.mul_monomial(&u, &factor));
                continue 'outer;
            }
        }
        // irreducible leading monomial; move it to the remainder
        remainder.push((lt.clone(), lc));
        cur = cur.sub(&Polynomial::monomial(cur.nvars(), lt, remainder.last().unwrap().1.clone()));
    }
    Polynomial::from_terms(f.nvars(), remainder)
}

/// S-polynomial with the monic-monic difference convention.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let (ft, fc, _) = f.leading_data()?;
    let (gt, gc, _) = g.leading_data()?;
    let lcm = ft.lcm(&gt);
    let uf = lcm.try_div(&ft).unwrap();
    let ug = lcm.try_div(&gt).unwrap();
    Ok(f.mul_monomial(&uf, &fc.recip()).sub(&g.mul_monomial(&ug, &gc.recip())))
}

fn validate_homogeneous_input(gens: &[Polynomial]) -> Result<usize> {
    crate::ring::validate_proper(gens)?;
    let nvars = gens[0].nvars();
    for g in gens {
        if g.nvars() != nvars {
            return Err(Error::ArityMismatch(nvars, g.nvars()));
        }
        if !g.is_homogeneous() {
            return Err(Error::InvalidParameter(
                "generators must be homogeneous".into(),
            ));
        }
    }
    Ok(nvars)
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct PairKey {
    degree: u32,
    lcm: Term,
    seq: u64,
}

struct PairQueue {
    heap: BinaryHeap<Reverse<(PairKey, usize, usize)>>,
    pending: HashSet<(usize, usize)>,
    seq: u64,
}

impl PairQueue {
    fn new() -> Self {
        PairQueue {
            heap: BinaryHeap::new(),
            pending: HashSet::new(),
            seq: 0,
        }
    }

    fn push(&mut self, basis: &[Polynomial], i: usize, j: usize) {
        let lcm = basis[i]
            .leading_term()
            .unwrap()
            .lcm(basis[j].leading_term().unwrap());
        self.seq += 1;
        let key = PairKey {
            degree: lcm.degree(),
            lcm,
            seq: self.seq,
        };
        self.heap.push(Reverse((key, i, j)));
        self.pending.insert((i, j));
    }

    fn pop(&mut self) -> Option<(u32, Term, usize, usize)> {
        self.heap.pop().map(|Reverse((key, i, j))| {
            self.pending.remove(&(i, j));
            (key.degree, key.lcm, i, j)
        })
    }

    fn peek_degree(&self) -> Option<u32> {
        self.heap.peek().map(|Reverse((key, _, _))| key.degree)
    }

    fn is_pending(&self, i: usize, j: usize) -> bool {
        let key = if i < j { (i, j) } else { (j, i) };
        self.pending.contains(&key)
    }
}

/// True when the chain criterion eliminates the pair `(i, j)`.
fn chain_criterion(basis: &[Polynomial], queue: &PairQueue, lcm: &Term, i: usize, j: usize) -> bool {
    (0..basis.len()).any(|k| {
        k != i
            && k != j
            && basis[k].leading_term().unwrap().divides(lcm)
            && !queue.is_pending(i, k)
            && !queue.is_pending(j, k)
    })
}

struct Engine {
    basis: Vec<Polynomial>,
    queue: PairQueue,
    trace: BuchbergerTrace,
    input_degree: u32,
}

enum StopRule {
    Exhaust { early_stop_if_stable: bool, degree_cap: u32 },
    Truncate { treat_up_to: u32 },
}

enum RunOutcome {
    Exhausted,
    EarlyStop(u32),
    Capped(u32),
    /// Truncated run; true when the witness degree produced no generator.
    TruncationCertified(bool),
}

impl Engine {
    fn new(gens: &[Polynomial]) -> Self {
        let basis: Vec<Polynomial> = gens.iter().map(Polynomial::monic).collect();
        let mut queue = PairQueue::new();
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                queue.push(&basis, i, j);
            }
        }
        let input_degree = basis.iter().filter_map(Polynomial::degree).max().unwrap_or(0);
        Engine {
            basis,
            queue,
            trace: BuchbergerTrace::default(),
            input_degree,
        }
    }

    fn basis_degree(&self) -> u32 {
        self.basis
            .iter()
            .map(|g| g.leading_term().unwrap().degree())
            .max()
            .unwrap_or(0)
    }

    fn leading_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::minimal_generators(
            self.basis[0].nvars(),
            self.basis.iter().map(|g| g.leading_term().unwrap().clone()),
        )
    }

    /// Process S-pairs in normal-strategy order until the stop rule fires.
    fn run(&mut self, rule: &StopRule) -> RunOutcome {
        let mut cur_degree: Option<u32> = None;
        let mut pairs_treated = 0usize;
        let mut new_generators = 0usize;
        let mut truncation_clean = true;
        loop {
            let next_degree = self.queue.peek_degree();
            // close out a finished degree group
            if let Some(deg) = cur_degree {
                if next_degree != Some(deg) {
                    self.trace.per_degree.push(DegreeEntry {
                        degree: deg,
                        pairs_treated,
                        new_generators,
                    });
                    if let StopRule::Exhaust { early_stop_if_stable: true, .. } = rule {
                        let threshold = self.input_degree.max(self.basis_degree());
                        let stable_from = if new_generators == 0 && deg > threshold {
                            Some(deg)
                        } else {
                            // a gap in pair degrees is a vacuous full degree
                            match next_degree {
                                Some(nd) if nd > deg + 1 && deg + 1 > threshold => Some(deg + 1),
                                None => Some(deg.max(threshold) + 1),
                                _ => None,
                            }
                        };
                        if let Some(s) = stable_from {
                            if self.leading_ideal().is_strongly_stable() {
                                return RunOutcome::EarlyStop(s);
                            }
                        }
                    }
                    pairs_treated = 0;
                    new_generators = 0;
                }
            }
            let Some(next) = next_degree else {
                return match rule {
                    StopRule::Truncate { .. } => RunOutcome::TruncationCertified(truncation_clean),
                    _ => RunOutcome::Exhausted,
                };
            };
            match rule {
                StopRule::Exhaust { degree_cap, .. } => {
                    if next > *degree_cap {
                        return RunOutcome::Capped(*degree_cap);
                    }
                }
                StopRule::Truncate { treat_up_to } => {
                    if next > treat_up_to + 1 {
                        return RunOutcome::TruncationCertified(truncation_clean);
                    }
                }
            }
            let (degree, lcm, i, j) = self.queue.pop().unwrap();
            cur_degree = Some(degree);
            let fi = &self.basis[i];
            let fj = &self.basis[j];
            if fi.leading_term().unwrap().coprime(fj.leading_term().unwrap()) {
                continue;
            }
            if chain_criterion(&self.basis, &self.queue, &lcm, i, j) {
                continue;
            }
            pairs_treated += 1;
            let s = s_polynomial(fi, fj).unwrap();
            let nf = normal_form(&s, &self.basis);
            if !nf.is_zero() {
                if let StopRule::Truncate { treat_up_to } = rule {
                    if degree > *treat_up_to {
                        // the probe degree only witnesses; nothing is added
                        truncation_clean = false;
                        continue;
                    }
                }
                new_generators += 1;
                let idx = self.basis.len();
                self.basis.push(nf.monic());
                for k in 0..idx {
                    self.queue.push(&self.basis, k, idx);
                }
            }
        }
    }
}

/// Interreduce a generating set whose leading terms already generate the
/// leading ideal; the result is the unique reduced basis.
fn reduce_basis(mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    basis.retain(|g| !g.is_zero());
    basis.sort_by(|a, b| a.leading_term().unwrap().cmp(b.leading_term().unwrap()));
    basis.dedup_by(|a, b| a.leading_term() == b.leading_term());
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in &basis {
        let lt = g.leading_term().unwrap();
        if !minimal
            .iter()
            .any(|m| m.leading_term().unwrap().divides(lt))
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
        reduced.push(normal_form(&minimal[i], &others).monic());
    }
    reduced.retain(|g| !g.is_zero());
    reduced.sort_by(|a, b| a.leading_term().unwrap().cmp(b.leading_term().unwrap()));
    reduced
}

/// Reduced Gröbner basis of a homogeneous ideal, with the per-degree trace.
pub fn buchberger(
    gens: &[Polynomial],
    options: &BuchbergerOptions,
) -> Result<(GroebnerBasis, BuchbergerTrace)> {
    let nvars = validate_homogeneous_input(gens)?;
    let mut engine = Engine::new(gens);
    let rule = StopRule::Exhaust {
        early_stop_if_stable: options.early_stop_if_stable,
        degree_cap: options.degree_cap,
    };
    match engine.run(&rule) {
        RunOutcome::Capped(cap) => Err(Error::DegreeCapExceeded {
            cap,
            partial: reduce_basis(engine.basis),
        }),
        RunOutcome::EarlyStop(degree) => {
            engine.trace.early_stop_degree = Some(degree);
            finish(nvars, engine)
        }
        _ => finish(nvars, engine),
    }
}

fn finish(nvars: usize, engine: Engine) -> Result<(GroebnerBasis, BuchbergerTrace)> {
    let trace = engine.trace.clone();
    let generators = reduce_basis(engine.basis);
    let max_degree = generators.iter().filter_map(Polynomial::degree).max().unwrap_or(0);
    Ok((
        GroebnerBasis {
            nvars,
            generators,
            max_degree,
        },
        trace,
    ))
}

/// `deg(I, <)`: the maximal degree in the reduced Gröbner basis.
pub fn max_gb_degree(gens: &[Polynomial]) -> Result<u32> {
    Ok(buchberger(gens, &BuchbergerOptions::default())?.0.max_degree())
}

/// Result of a degree-truncated run.
#[derive(Debug, Clone)]
pub struct TruncatedBasis {
    /// Interreduced elements of degree at most the truncation bound.
    pub elements: Vec<Polynomial>,
    /// True when every S-polynomial one degree past the bound reduced to
    /// zero; for strongly stable leading ideals this certifies a Gröbner
    /// basis of the ideal generated by the elements of degree at most `t`.
    pub certified: bool,
}

/// Treat all S-polynomials of degree at most `t`, then probe degree `t + 1`.
pub fn truncated_gb(gens: &[Polynomial], t: u32) -> Result<TruncatedBasis> {
    validate_homogeneous_input(gens)?;
    let mut engine = Engine::new(gens);
    let rule = StopRule::Truncate { treat_up_to: t };
    let mut certified = match engine.run(&rule) {
        RunOutcome::TruncationCertified(clean) => clean,
        _ => unreachable!("truncated runs always finish"),
    };
    // elements past the bound cannot enter the truncated result
    let kept: Vec<Polynomial> = engine
        .basis
        .into_iter()
        .filter(|g| g.degree().unwrap_or(0) <= t)
        .collect();
    if kept.is_empty() {
        certified = true;
    }
    Ok(TruncatedBasis {
        elements: reduce_basis(kept),
        certified,
    })
}
