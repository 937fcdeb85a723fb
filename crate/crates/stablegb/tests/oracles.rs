//! Oracle equivalences: the Gröbner, Pommaret and stability machinery
//! against independent brute-force routes. The linear-algebra oracle here
//! does exact fraction Gaussian elimination straight from the generators and
//! never touches the division-based code paths it is checking.

use num::{BigInt, BigRational, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use stablegb::groebner::{buchberger, normal_form, truncated_gb, BuchbergerOptions};
use stablegb::invariants::{gin, hilbert_series, quasi_stable_pommaret_basis, GinOptions};
use stablegb::pommaret::{complete_monomial_ideal, pommaret_divides, CompletionResult};
use stablegb::ring::{parse_ideal, Polynomial, Term};
use stablegb::stability::MonomialIdeal;

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

/// Exact row reduction; returns the rank.
fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].clone().recip();
        for c in col..cols {
            let v = &rows[rank][c] * &inv;
            rows[rank][c] = v;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..cols {
                    let sub = &factor * &rows[rank][c];
                    rows[r][c] -= sub;
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

/// Rows spanning the degree-`s` piece of the ideal, one per monomial
/// multiple of a generator.
fn degree_piece_rows(gens: &[Polynomial], s: u32) -> (Vec<Term>, Vec<Vec<BigRational>>) {
    let nvars = gens[0].nvars();
    let basis = all_terms_of_degree(nvars, s);
    let index: std::collections::HashMap<&Term, usize> =
        basis.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut rows = Vec::new();
    for g in gens {
        let d = g.degree().unwrap();
        if d > s {
            continue;
        }
        for m in all_terms_of_degree(nvars, s - d) {
            let mut row = vec![BigRational::zero(); basis.len()];
            for (t, c) in g.terms() {
                row[index[&t.mul(&m)]] = c.clone();
            }
            rows.push(row);
        }
    }
    (basis, rows)
}

/// Membership of a homogeneous polynomial by pure linear algebra.
fn member_by_linear_algebra(f: &Polynomial, gens: &[Polynomial]) -> bool {
    if f.is_zero() {
        return true;
    }
    let s = f.degree().unwrap();
    let (basis, rows) = degree_piece_rows(gens, s);
    let base_rank = rank(rows.clone());
    let mut vector = vec![BigRational::zero(); basis.len()];
    let index: std::collections::HashMap<&Term, usize> =
        basis.iter().enumerate().map(|(i, t)| (t, i)).collect();
    for (t, c) in f.terms() {
        vector[index[t]] = c.clone();
    }
    let mut extended = rows;
    extended.push(vector);
    rank(extended) == base_rank
}

fn random_homogeneous(nvars: usize, degree: u32, rng: &mut ChaCha8Rng) -> Polynomial {
    let monomials = all_terms_of_degree(nvars, degree);
    loop {
        let mut terms: Vec<(Term, BigRational)> = Vec::new();
        for t in &monomials {
            if rng.gen_bool(0.4) {
                let c = rng.gen_range(-4i64..=4);
                terms.push((t.clone(), BigRational::from_integer(BigInt::from(c))));
            }
        }
        let f = Polynomial::from_terms(nvars, terms);
        if !f.is_zero() {
            return f;
        }
    }
}

fn fixture_ideals() -> Vec<(&'static str, Vec<Polynomial>)> {
    let texts = [
        ("green", "ring: x1 x2 x3\nx1*x3\nx1*x2 + x2^2\nx1^2\n"),
        ("plane", "ring: x1 x2\nx1^2\nx1*x2 + x2^2\n"),
        ("mora", "ring: x1 x2\nx1^2\nx2^11*x1\n"),
        ("mixed", "ring: x1 x2 x3\nx1^2 - x2*x3\nx2^2*x3 - x3^3\n"),
        ("cubic", "ring: x1 x2 x3\nx1*x2*x3 - x3^3\nx1^2*x2 + x2^3\n"),
    ];
    texts
        .iter()
        .map(|(name, text)| (*name, parse_ideal(text).unwrap().1))
        .collect()
}

#[test]
fn groebner_membership_matches_linear_algebra() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for (name, gens) in fixture_ideals() {
        let (gb, _) = buchberger(&gens, &BuchbergerOptions::default()).unwrap();
        let nvars = gens[0].nvars();
        if nvars > 3 {
            continue;
        }
        // random elements of the ideal reduce to zero, and agreement holds
        // on arbitrary random polynomials up to degree 8
        for degree in 1..=8u32 {
            for _ in 0..3 {
                let f = random_homogeneous(nvars, degree, &mut rng);
                let by_division = normal_form(&f, gb.generators()).is_zero();
                let by_rank = member_by_linear_algebra(&f, &gens);
                assert_eq!(by_division, by_rank, "{name} degree {degree}");
            }
            // certified members: random combination of the generators
            let combo = gens.iter().fold(Polynomial::zero(nvars), |acc, g| {
                let extra = degree.checked_sub(g.degree().unwrap());
                match extra {
                    None => acc,
                    Some(extra) => {
                        let multiplier = random_homogeneous(nvars, extra, &mut rng);
                        acc.add(&multiplier.mul(g))
                    }
                }
            });
            if !combo.is_zero() {
                assert!(normal_form(&combo, gb.generators()).is_zero(), "{name}");
                assert!(member_by_linear_algebra(&combo, &gens), "{name}");
            }
        }
    }
}

#[test]
fn hilbert_function_matches_rank_oracle() {
    for (name, gens) in fixture_ideals() {
        let nvars = gens[0].nvars();
        let (gb, _) = buchberger(&gens, &BuchbergerOptions::default()).unwrap();
        let data = hilbert_series(&gb.leading_ideal()).unwrap();
        for s in 0..=10u32 {
            let (basis, rows) = degree_piece_rows(&gens, s);
            let hf = BigInt::from(basis.len() - rank(rows));
            assert_eq!(hf, data.hf(s), "{name} degree {s} ({nvars} vars)");
        }
    }
}

#[test]
fn truncated_basis_matches_degreewise_pieces() {
    // all S-polynomials treated up to degree t: the leading ideal pieces at
    // degrees <= t must already be exact
    for (name, gens) in fixture_ideals() {
        let (gb, _) = buchberger(&gens, &BuchbergerOptions::default()).unwrap();
        for t in 1..=gb.max_degree() {
            let truncated = truncated_gb(&gens, t).unwrap();
            let lt_terms: Vec<Term> = truncated
                .elements
                .iter()
                .map(|g| g.leading_term().unwrap().clone())
                .collect();
            let lt = MonomialIdeal::minimal_generators(gens[0].nvars(), lt_terms);
            for s in 0..=t {
                let (basis, rows) = degree_piece_rows(&gens, s);
                let expected = rank(rows);
                let got = basis.iter().filter(|m| lt.contains(m)).count();
                assert_eq!(got, expected, "{name} t={t} s={s}");
            }
        }
    }
}

#[test]
fn pommaret_cones_partition_the_leading_ideal() {
    for (name, gens) in fixture_ideals() {
        let (gb, _) = buchberger(&gens, &BuchbergerOptions::default()).unwrap();
        let lt = gb.leading_ideal();
        if !lt.is_quasi_stable() {
            continue;
        }
        let basis = match complete_monomial_ideal(&lt, 128).unwrap() {
            CompletionResult::Complete(b) => b,
            CompletionResult::NotQuasiStable { .. } => unreachable!(),
        };
        let heads = basis.leading_terms();
        for s in 0..=basis.max_degree() + 3 {
            for term in all_terms_of_degree(lt.nvars(), s) {
                let divisors = heads.iter().filter(|h| pommaret_divides(h, &term)).count();
                if lt.contains(&term) {
                    assert_eq!(divisors, 1, "{name}: {term} must sit in exactly one cone");
                } else {
                    assert_eq!(divisors, 0, "{name}: {term} is standard");
                }
            }
        }
    }
}

#[test]
fn stability_predicates_match_raw_definitions() {
    // quantify over every ideal term within the bound, not just generators
    let fixtures: Vec<MonomialIdeal> = vec![
        MonomialIdeal::minimal_generators(
            3,
            [
                Term::new(vec![1, 0, 1]),
                Term::new(vec![1, 1, 0]),
                Term::new(vec![2, 0, 0]),
                Term::new(vec![0, 2, 1]),
                Term::new(vec![0, 3, 0]),
            ],
        ),
        MonomialIdeal::minimal_generators(2, [Term::new(vec![1, 1])]),
        MonomialIdeal::minimal_generators(2, [Term::new(vec![2, 0]), Term::new(vec![0, 2])]),
        MonomialIdeal::minimal_generators(
            3,
            [Term::new(vec![2, 0, 0]), Term::new(vec![0, 1, 1])],
        ),
        MonomialIdeal::minimal_generators(
            3,
            [Term::new(vec![1, 0, 0])],
        ),
    ];
    for j in &fixtures {
        let bound = j.max_generator_degree() + j.nvars() as u32;
        let terms: Vec<Term> = (0..=bound)
            .flat_map(|d| all_terms_of_degree(j.nvars(), d))
            .filter(|t| j.contains(t))
            .collect();
        let raw_strong = terms.iter().all(|m| {
            (0..j.nvars()).all(|i| {
                m.exponent(i) == 0
                    || (0..i).all(|jj| {
                        let mut e = m.exponents().to_vec();
                        e[i] -= 1;
                        e[jj] += 1;
                        j.contains(&Term::new(e))
                    })
            })
        });
        let raw_stable = terms.iter().filter(|m| !m.is_one()).all(|m| {
            let c = m.class_index().unwrap();
            (0..c).all(|jj| {
                let mut e = m.exponents().to_vec();
                e[c] -= 1;
                e[jj] += 1;
                j.contains(&Term::new(e))
            })
        });
        let t_bound = j.max_generator_degree() + bound;
        let raw_quasi = terms.iter().all(|m| {
            (0..j.nvars()).all(|i| {
                (1..=m.exponent(i)).all(|s| {
                    (0..i).all(|jj| {
                        (0..=t_bound).any(|t| {
                            let mut e = m.exponents().to_vec();
                            e[i] -= s;
                            e[jj] += t;
                            j.contains(&Term::new(e))
                        })
                    })
                })
            })
        });
        assert_eq!(j.is_strongly_stable(), raw_strong, "{j:?}");
        assert_eq!(j.is_stable(), raw_stable, "{j:?}");
        assert_eq!(j.is_quasi_stable(), raw_quasi, "{j:?}");
    }
}

#[test]
fn strongly_stable_complement_is_reverse_stable() {
    // standard monomials swap upward: x^a in N with a_i > 0 implies
    // x_j x^a / x_i in N for j > i
    let (_, gens) = parse_ideal("ring: x1 x2 x3\nx1*x3\nx1*x2 + x2^2\nx1^2\n").unwrap();
    let (gb, _) = buchberger(&gens, &BuchbergerOptions::default()).unwrap();
    let lt = gb.leading_ideal();
    assert!(lt.is_strongly_stable());
    for degree in 0..=6u32 {
        for m in all_terms_of_degree(3, degree) {
            if lt.contains(&m) {
                continue;
            }
            for i in 0..3 {
                if m.exponent(i) == 0 {
                    continue;
                }
                for jj in i + 1..3 {
                    let mut e = m.exponents().to_vec();
                    e[i] -= 1;
                    e[jj] += 1;
                    assert!(
                        !lt.contains(&Term::new(e.clone())),
                        "swap of {m} landed in the ideal"
                    );
                }
            }
        }
    }
}

#[test]
fn stable_position_pommaret_basis_is_the_reduced_basis() {
    // for a stable leading ideal the two bases coincide element by element
    for text in [
        "ring: x1 x2 x3\nx1*x3\nx1*x2 + x2^2\nx1^2\n",
        "ring: x1 x2\nx1^2\nx1*x2 + x2^2\n",
        "ring: x1 x2\nx1^2\nx2^11*x1\n",
    ] {
        let (_, gens) = parse_ideal(text).unwrap();
        let (gb, _) = buchberger(&gens, &BuchbergerOptions::default()).unwrap();
        assert!(gb.leading_ideal().is_stable());
        let basis = match stablegb::pommaret::pommaret_completion(&gb, 128).unwrap() {
            CompletionResult::Complete(b) => b,
            CompletionResult::NotQuasiStable { .. } => unreachable!(),
        };
        let mut from_pommaret: Vec<Polynomial> =
            basis.elements().iter().map(|e| e.polynomial.clone()).collect();
        from_pommaret.sort_by(|a, b| a.leading_term().unwrap().cmp(b.leading_term().unwrap()));
        assert_eq!(from_pommaret, gb.generators());
    }
}

#[test]
fn pommaret_regularity_matches_gin_route() {
    // the maximal Pommaret degree equals the largest minimal generator
    // degree of the generic initial ideal (characteristic zero)
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for trial in 0..6u64 {
        let nvars = rng.gen_range(2..=3usize);
        let k = rng.gen_range(1..=2usize);
        let gens: Vec<Polynomial> = (0..k)
            .map(|_| {
                let d = rng.gen_range(1..=3u32);
                random_homogeneous(nvars, d, &mut rng)
            })
            .collect();
        let basis = quasi_stable_pommaret_basis(&gens, trial).unwrap();
        let g = gin(&gens, trial.wrapping_add(1), &GinOptions::default()).unwrap();
        assert!(g.is_strongly_stable(), "gin is Borel-fixed in characteristic zero");
        assert_eq!(
            basis.regularity(),
            g.max_generator_degree(),
            "trial {trial}: {gens:?}"
        );
    }
}

#[test]
fn normal_form_zero_iff_member_for_random_ideals() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..4 {
        let nvars = 2 + (rng.gen::<u32>() % 2) as usize;
        let gens: Vec<Polynomial> = (0..2)
            .map(|_| {
                let d = rng.gen_range(1..=3u32);
                random_homogeneous(nvars, d, &mut rng)
            })
            .collect();
        let (gb, _) = buchberger(&gens, &BuchbergerOptions::default()).unwrap();
        for degree in 1..=6u32 {
            let f = random_homogeneous(nvars, degree, &mut rng);
            assert_eq!(
                normal_form(&f, gb.generators()).is_zero(),
                member_by_linear_algebra(&f, &gens)
            );
        }
    }
}
