//! Monomial-ideal combinatorics: minimal generating sets, the quasi / stable
//! / strongly stable predicates, variable restrictions, per-variable degrees,
//! combinatorial dimension and Noether position.
//!
//! All predicates quantify over minimal generators only; the usual closure
//! argument lifts them to every term of the ideal, and the test suite checks
//! that against a raw-definition brute force.

use crate::ring::Term;

/// A monomial ideal, stored through its unique minimal generating set in
/// ascending degrevlex order. An empty generating set denotes the zero ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Term>,
}

impl MonomialIdeal {
    /// Divisibility-minimal subset of `terms` generating the same ideal.
    pub fn minimal_generators(nvars: usize, terms: impl IntoIterator<Item = Term>) -> Self {
        let mut terms: Vec<Term> = terms.into_iter().collect();
        terms.sort();
        terms.dedup();
        let mut gens: Vec<Term> = Vec::new();
        // ascending order: earlier terms can divide later ones, never vice versa
        for t in terms {
            if !gens.iter().any(|g| g.divides(&t)) {
                gens.push(t);
            }
        }
        MonomialIdeal { nvars, gens }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: Vec::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Term] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, t: &Term) -> bool {
        self.gens.iter().any(|g| g.divides(t))
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.gens.iter().map(Term::degree).max().unwrap_or(0)
    }

    /// Maximal exponent of variable `var` over the minimal generators.
    pub fn variable_degree(&self, var: usize) -> u32 {
        self.gens.iter().map(|g| g.exponent(var)).max().unwrap_or(0)
    }

    /// Least `e` with `x_var^e` in the ideal, if any pure power lies in it.
    pub fn pure_power_degree(&self, var: usize) -> Option<u32> {
        self.gens
            .iter()
            .filter(|g| g.class_index() == Some(var) && g.exponent(var) == g.degree())
            .map(Term::degree)
            .min()
    }

    /// Substitute the last `count` variables by zero.
    pub fn restrict_last(&self, count: usize) -> MonomialIdeal {
        assert!(count < self.nvars);
        let keep = self.nvars - count;
        let gens = self
            .gens
            .iter()
            .filter(|g| g.exponents()[keep..].iter().all(|&e| e == 0))
            .map(|g| Term::new(g.exponents()[..keep].to_vec()))
            .collect();
        MonomialIdeal { nvars: keep, gens }
    }

    /// Krull dimension of the factor ring: the largest cardinality of a set
    /// of variables supporting no minimal generator.
    pub fn dimension(&self) -> usize {
        let n = self.nvars;
        if self.is_zero() {
            return n;
        }
        let supports: Vec<u32> = self
            .gens
            .iter()
            .map(|g| {
                g.exponents()
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .fold(0u32, |m, (i, _)| m | (1 << i))
            })
            .collect();
        let mut best = 0;
        for subset in 0u32..(1 << n) {
            let size = subset.count_ones() as usize;
            if size > best && supports.iter().all(|&s| s & !subset != 0) {
                best = size;
            }
        }
        best
    }

    /// Strongly stable: every swap of a variable for a smaller one stays
    /// inside the ideal.
    pub fn is_strongly_stable(&self) -> bool {
        self.gens.iter().all(|m| {
            (0..self.nvars).all(|i| {
                if m.exponent(i) == 0 {
                    return true;
                }
                (0..i).all(|j| {
                    let swapped = swap_var(m, i, j);
                    self.contains(&swapped)
                })
            })
        })
    }

    /// Stable: swapping the class variable for any smaller one stays inside.
    pub fn is_stable(&self) -> bool {
        self.gens.iter().all(|m| match m.class_index() {
            None => true,
            Some(c) => (0..c).all(|j| self.contains(&swap_var(m, c, j))),
        })
    }

    /// Quasi stable: for each generator, each variable occurring in it and
    /// each smaller variable, some power of the smaller variable compensates
    /// removing the occurring one entirely.
    pub fn is_quasi_stable(&self) -> bool {
        self.quasi_stable_witness().is_none()
    }

    /// A failing `(generator, i, j)` triple when the ideal is not quasi
    /// stable; the search bound on `t` is the maximal generator degree.
    pub fn quasi_stable_witness(&self) -> Option<(Term, usize, usize)> {
        let t_bound = self.max_generator_degree();
        for m in &self.gens {
            for i in 0..self.nvars {
                let s = m.exponent(i);
                if s == 0 {
                    continue;
                }
                for j in 0..i {
                    let mut base: Vec<u32> = m.exponents().to_vec();
                    base[i] = 0;
                    let found = (0..=t_bound).any(|t| {
                        let mut exps = base.clone();
                        exps[j] += t;
                        self.contains(&Term::new(exps))
                    });
                    if !found {
                        return Some((m.clone(), i, j));
                    }
                }
            }
        }
        None
    }

    /// Noether position test on a leading ideal: a pure power of each of the
    /// first `n - D` variables must be present.
    pub fn is_noether_position(&self) -> bool {
        let d = self.dimension();
        (0..self.nvars - d).all(|i| self.pure_power_degree(i).is_some())
    }

    /// Crystallisation gap check: beyond any degree `s >= d` at which the
    /// minimal generators pause, no further generator may appear.
    pub fn cp_gap_check(&self, d: u32) -> bool {
        let max = self.max_generator_degree();
        let mut present = vec![false; max as usize + 2];
        for g in &self.gens {
            present[g.degree() as usize] = true;
        }
        for s in d..max {
            if !present[s as usize + 1] && self.gens.iter().any(|g| g.degree() > s) {
                return false;
            }
        }
        true
    }
}

fn swap_var(m: &Term, from: usize, to: usize) -> Term {
    let mut exps = m.exponents().to_vec();
    exps[from] -= 1;
    exps[to] += 1;
    Term::new(exps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(nvars: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimal_generators(nvars, gens.iter().map(|e| Term::new(e.to_vec())))
    }

    // LT of the Green example ideal in k[x1,x2,x3]
    fn green_lt() -> MonomialIdeal {
        ideal(3, &[&[1, 0, 1], &[1, 1, 0], &[2, 0, 0], &[0, 2, 1], &[0, 3, 0]])
    }

    // gin of the Green example ideal
    fn green_gin() -> MonomialIdeal {
        ideal(3, &[&[0, 2, 0], &[1, 1, 0], &[2, 0, 0], &[1, 0, 2]])
    }

    // the Lazard counterexample leading ideal at t = 4, in 4 and in 3 variables
    fn lazard_lt4() -> MonomialIdeal {
        ideal(
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
        )
    }

    fn lazard_lt4_restricted() -> MonomialIdeal {
        lazard_lt4().restrict_last(1)
    }

    #[test]
    fn minimal_generators_drop_multiples() {
        let j = ideal(2, &[&[1, 0], &[2, 0]]);
        assert_eq!(j.generators(), &[Term::new(vec![1, 0])]);
        assert_eq!(green_lt().generators().len(), 5);
    }

    #[test]
    fn strongly_stable_fixtures() {
        assert!(green_lt().is_strongly_stable());
        assert!(green_gin().is_strongly_stable());
        assert!(!lazard_lt4_restricted().is_strongly_stable());
    }

    #[test]
    fn quasi_stable_fixtures() {
        assert!(green_lt().is_quasi_stable());
        assert!(!lazard_lt4_restricted().is_quasi_stable());
        // no pure power of x1 ever appears
        assert!(!ideal(2, &[&[1, 1]]).is_quasi_stable());
        // the witness names the missing escape for x2 (index 1)
        let (_, _, j) = lazard_lt4_restricted().quasi_stable_witness().unwrap();
        assert_eq!(j, 1);
    }

    #[test]
    fn stable_fixtures() {
        assert!(green_lt().is_stable());
        assert!(!ideal(2, &[&[2, 0], &[0, 2]]).is_stable());
        assert!(ideal(2, &[&[1, 0]]).is_stable());
    }

    #[test]
    fn restriction_drops_tail_variables() {
        let j = ideal(2, &[&[2, 0], &[1, 11]]);
        let r = j.restrict_last(1);
        assert_eq!(r.generators(), &[Term::new(vec![2])]);
        // restriction of the t=4 example keeps the same generators minus x4
        assert_eq!(lazard_lt4_restricted().generators().len(), 7);
    }

    #[test]
    fn variable_degrees() {
        let j = ideal(2, &[&[2, 0], &[1, 11]]);
        assert_eq!(j.variable_degree(0), 2);
        assert_eq!(j.variable_degree(1), 11);
    }

    #[test]
    fn dimensions() {
        assert_eq!(ideal(2, &[&[2, 0], &[1, 1], &[0, 3]]).dimension(), 0);
        assert_eq!(lazard_lt4().dimension(), 2);
        assert_eq!(lazard_lt4_restricted().dimension(), 1);
        assert_eq!(green_lt().dimension(), 1);
    }

    #[test]
    fn noether_position() {
        // dim 1 in 3 vars: needs pure powers of x1 and x2; x2 has none
        assert!(!lazard_lt4_restricted().is_noether_position());
        assert!(green_lt().is_noether_position());
        assert!(ideal(2, &[&[2, 0], &[1, 11]]).is_noether_position());
    }

    #[test]
    fn cp_gap() {
        assert!(ideal(2, &[&[2, 0], &[1, 1], &[0, 3]]).cp_gap_check(3));
        // generator degrees {4,5,8,11,14,17} have gaps above 5
        assert!(!lazard_lt4().cp_gap_check(5));
        assert!(green_lt().cp_gap_check(3));
    }

    #[test]
    fn variable_degree_survives_restriction_when_quasi_stable() {
        // deg_i of the restriction to the first i variables equals deg_i of
        // the full ideal
        for j in [
            green_lt(),
            green_gin(),
            ideal(2, &[&[2, 0], &[1, 11]]),
            ideal(2, &[&[2, 0], &[0, 2]]),
            ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 3, 0], &[0, 0, 4]]),
        ] {
            assert!(j.is_quasi_stable());
            for i in 0..j.nvars() {
                let restricted = if i + 1 == j.nvars() {
                    j.clone()
                } else {
                    j.restrict_last(j.nvars() - i - 1)
                };
                assert_eq!(
                    restricted.variable_degree(i),
                    j.variable_degree(i),
                    "variable {i} of {j:?}"
                );
            }
        }
    }

    #[test]
    fn noether_equals_quasi_stable_in_low_dimension() {
        let fixtures = [
            green_lt(),
            lazard_lt4_restricted(),
            ideal(2, &[&[2, 0], &[1, 11]]),
            ideal(2, &[&[1, 1]]),
            ideal(2, &[&[3, 0], &[2, 1], &[1, 2]]),
            ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0]]),
        ];
        for j in fixtures {
            if j.dimension() <= 1 {
                assert_eq!(
                    j.is_noether_position(),
                    j.is_quasi_stable(),
                    "equivalence fails on {j:?}"
                );
            }
        }
    }

    #[test]
    fn implications_and_restriction_stability() {
        for j in [green_lt(), green_gin(), ideal(2, &[&[2, 0], &[1, 11]])] {
            assert!(j.is_strongly_stable());
            assert!(j.is_stable());
            assert!(j.is_quasi_stable());
            for count in 1..j.nvars() {
                assert!(j.restrict_last(count).is_strongly_stable());
            }
        }
    }

    // raw-definition oracle: quantify over every ideal term up to a degree
    // bound instead of the minimal generators only
    fn all_terms(nvars: usize, max_degree: u32) -> Vec<Term> {
        fn rec(nvars: usize, pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Term>) {
            if pos == nvars {
                out.push(Term::new(cur.clone()));
                return;
            }
            for e in 0..=left {
                cur.push(e);
                rec(nvars, pos + 1, left - e, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        for d in 0..=max_degree {
            let mut cur = Vec::new();
            rec(nvars, 0, d, &mut cur, &mut out);
        }
        out.retain(|t| t.degree() <= max_degree);
        out
    }

    fn raw_strongly_stable(j: &MonomialIdeal, bound: u32) -> bool {
        all_terms(j.nvars(), bound)
            .into_iter()
            .filter(|m| j.contains(m))
            .all(|m| {
                (0..j.nvars()).all(|i| {
                    m.exponent(i) == 0 || (0..i).all(|jj| j.contains(&swap_var(&m, i, jj)))
                })
            })
    }

    fn raw_stable(j: &MonomialIdeal, bound: u32) -> bool {
        all_terms(j.nvars(), bound)
            .into_iter()
            .filter(|m| j.contains(m) && !m.is_one())
            .all(|m| {
                let c = m.class_index().unwrap();
                (0..c).all(|jj| j.contains(&swap_var(&m, c, jj)))
            })
    }

    fn raw_quasi_stable(j: &MonomialIdeal, bound: u32) -> bool {
        let t_bound = j.max_generator_degree() + bound;
        all_terms(j.nvars(), bound)
            .into_iter()
            .filter(|m| j.contains(m))
            .all(|m| {
                (0..j.nvars()).all(|i| {
                    (1..=m.exponent(i)).all(|s| {
                        (0..i).all(|jj| {
                            (0..=t_bound).any(|t| {
                                let mut exps = m.exponents().to_vec();
                                exps[i] -= s;
                                exps[jj] += t;
                                j.contains(&Term::new(exps))
                            })
                        })
                    })
                })
            })
    }

    #[test]
    fn predicates_match_raw_definition() {
        let fixtures = vec![
            green_lt(),
            green_gin(),
            lazard_lt4_restricted(),
            ideal(2, &[&[2, 0], &[0, 2]]),
            ideal(2, &[&[1, 1]]),
            ideal(2, &[&[2, 0], &[1, 11]]),
            ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 3, 0]]),
            ideal(3, &[&[1, 0, 1]]),
            ideal(3, &[&[3, 0, 0], &[0, 0, 2]]),
        ];
        for j in fixtures {
            let bound = j.max_generator_degree() + j.nvars() as u32;
            assert_eq!(j.is_strongly_stable(), raw_strongly_stable(&j, bound), "{j:?}");
            assert_eq!(j.is_stable(), raw_stable(&j, bound), "{j:?}");
            assert_eq!(j.is_quasi_stable(), raw_quasi_stable(&j, bound), "{j:?}");
        }
    }
}
