//! Exact polynomial arithmetic over Q with the degree reverse lexicographic
//! order (`x_n` smallest), linear changes of variables, homogenization and the
//! ideal text format.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Exact coefficient type used everywhere in the crate.
pub type Coeff = BigRational;

/// The ambient polynomial ring: a number of variables and their print names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingContext {
    names: Vec<String>,
}

impl RingContext {
    /// Ring with default names `x1..xn`.
    pub fn new(nvars: usize) -> Self {
        assert!(nvars >= 1, "ring needs at least one variable");
        RingContext {
            names: (1..=nvars).map(|i| format!("x{i}")).collect(),
        }
    }

    pub fn with_names(names: Vec<String>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::InvalidParameter("ring needs at least one variable".into()));
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(Error::InvalidParameter(format!("duplicate variable name `{a}`")));
            }
        }
        Ok(RingContext { names })
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, var: usize) -> &str {
        &self.names[var]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Ring extended by one homogenizing variable appended as the smallest.
    pub fn extended(&self) -> Self {
        let mut names = self.names.clone();
        let mut fresh = format!("x{}", names.len() + 1);
        while names.contains(&fresh) {
            fresh.push('h');
        }
        names.push(fresh);
        RingContext { names }
    }

    /// Ring with the last `count` variables removed.
    pub fn restricted(&self, count: usize) -> Self {
        assert!(count < self.nvars());
        RingContext {
            names: self.names[..self.nvars() - count].to_vec(),
        }
    }
}

/// A power product of the variables, stored as a dense exponent vector with
/// the total degree cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    exponents: Vec<u32>,
    degree: u32,
}

impl Term {
    pub fn new(exponents: Vec<u32>) -> Self {
        let degree = exponents.iter().sum();
        Term { exponents, degree }
    }

    /// The constant term 1.
    pub fn one(nvars: usize) -> Self {
        Term {
            exponents: vec![0; nvars],
            degree: 0,
        }
    }

    /// The single variable `x_(var+1)`.
    pub fn variable(nvars: usize, var: usize) -> Self {
        let mut exponents = vec![0; nvars];
        exponents[var] = 1;
        Term { exponents, degree: 1 }
    }

    pub fn arity(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exponents[var]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Index of the largest variable with positive exponent, or `None` for 1.
    pub fn class_index(&self) -> Option<usize> {
        self.exponents.iter().rposition(|&e| e > 0)
    }

    pub fn mul(&self, other: &Term) -> Term {
        debug_assert_eq!(self.arity(), other.arity());
        Term {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
            degree: self.degree + other.degree,
        }
    }

    pub fn mul_var(&self, var: usize) -> Term {
        let mut exponents = self.exponents.clone();
        exponents[var] += 1;
        Term {
            exponents,
            degree: self.degree + 1,
        }
    }

    pub fn divides(&self, other: &Term) -> bool {
        debug_assert_eq!(self.arity(), other.arity());
        self.degree <= other.degree
            && self
                .exponents
                .iter()
                .zip(&other.exponents)
                .all(|(a, b)| a <= b)
    }

    pub fn try_div(&self, other: &Term) -> Option<Term> {
        if other.divides(self) {
            Some(Term {
                exponents: self
                    .exponents
                    .iter()
                    .zip(&other.exponents)
                    .map(|(a, b)| a - b)
                    .collect(),
                degree: self.degree - other.degree,
            })
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Term) -> Term {
        debug_assert_eq!(self.arity(), other.arity());
        Term::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Term) -> Term {
        debug_assert_eq!(self.arity(), other.arity());
        Term::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn coprime(&self, other: &Term) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Drop the last `count` variables; the term must not involve them.
    pub fn restricted(&self, count: usize) -> Term {
        debug_assert!(self.exponents[self.arity() - count..].iter().all(|&e| e == 0));
        Term::new(self.exponents[..self.arity() - count].to_vec())
    }

    /// Reinterpret in a ring with `extra` more (larger-index) variables.
    pub fn extended(&self, extra: usize) -> Term {
        let mut exponents = self.exponents.clone();
        exponents.extend(std::iter::repeat_n(0, extra));
        Term {
            exponents,
            degree: self.degree,
        }
    }
}

/// Degrevlex: higher total degree wins; on equal degree the term whose last
/// nonzero exponent difference is negative is the greater one.
impl Ord for Term {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.arity(), other.arity());
        match self.degree.cmp(&other.degree) {
            Ordering::Equal => {
                for i in (0..self.exponents.len()).rev() {
                    let (a, b) = (self.exponents[i], other.exponents[i]);
                    if a != b {
                        return if a < b { Ordering::Greater } else { Ordering::Less };
                    }
                }
                Ordering::Equal
            }
            o => o,
        }
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Checked degrevlex comparison for terms of possibly different arity.
pub fn degrevlex_cmp(a: &Term, b: &Term) -> Result<Ordering> {
    if a.arity() != b.arity() {
        return Err(Error::ArityMismatch(a.arity(), b.arity()));
    }
    Ok(a.cmp(b))
}

/// Sparse polynomial with exact rational coefficients; terms are kept in
/// descending degrevlex order so the leading data sits at index 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<(Term, Coeff)>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, c: Coeff) -> Self {
        if c.is_zero() {
            Polynomial::zero(nvars)
        } else {
            Polynomial {
                nvars,
                terms: vec![(Term::one(nvars), c)],
            }
        }
    }

    /// Build from unsorted terms, combining duplicates and dropping zeros.
    pub fn from_terms(nvars: usize, terms: Vec<(Term, Coeff)>) -> Self {
        let mut map: BTreeMap<Term, Coeff> = BTreeMap::new();
        for (t, c) in terms {
            debug_assert_eq!(t.arity(), nvars);
            let entry = map.entry(t).or_insert_with(Coeff::zero);
            *entry += c;
        }
        let mut out: Vec<(Term, Coeff)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        out.reverse();
        Polynomial { nvars, terms: out }
    }

    pub fn monomial(nvars: usize, t: Term, c: Coeff) -> Self {
        debug_assert_eq!(t.arity(), nvars);
        if c.is_zero() {
            Polynomial::zero(nvars)
        } else {
            Polynomial { nvars, terms: vec![(t, c)] }
        }
    }

    pub fn term(t: Term) -> Self {
        let nvars = t.arity();
        Polynomial::monomial(nvars, t, Coeff::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Term, Coeff)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first().map(|(t, _)| t)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Leading term, coefficient and monomial of a nonzero polynomial.
    pub fn leading_data(&self) -> Result<(Term, Coeff, Polynomial)> {
        match self.terms.first() {
            Some((t, c)) => Ok((
                t.clone(),
                c.clone(),
                Polynomial::monomial(self.nvars, t.clone(), c.clone()),
            )),
            None => Err(Error::ZeroPolynomial),
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(t, _)| t.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((t0, _)) => self.terms.iter().all(|(t, _)| t.degree() == t0.degree()),
        }
    }

    pub fn coeff_of(&self, t: &Term) -> Coeff {
        self.terms
            .iter()
            .find(|(u, _)| u == t)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Coeff::zero)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, c)| (t.clone(), -c.clone())).collect(),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, ca) = &self.terms[i];
            let (b, cb) = &other.terms[j];
            match a.cmp(b) {
                Ordering::Greater => {
                    out.push((a.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b.clone(), cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca + cb;
                    if !c.is_zero() {
                        out.push((a.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(other.terms[j..].iter().cloned());
        Polynomial { nvars: self.nvars, terms: out }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    /// Multiply by the monomial `c * t`; term order is preserved.
    pub fn mul_monomial(&self, t: &Term, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(u, cu)| (u.mul(t), cu * c)).collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, ct)| (t.clone(), ct * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut map: BTreeMap<Term, Coeff> = BTreeMap::new();
        for (t, c) in &self.terms {
            for (u, d) in &other.terms {
                let entry = map.entry(t.mul(u)).or_insert_with(Coeff::zero);
                *entry += c * d;
            }
        }
        let mut terms: Vec<(Term, Coeff)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.reverse();
        Polynomial { nvars: self.nvars, terms }
    }

    /// Divide through by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    /// Substitute `images[j]` for variable `j`; exact, with cached powers.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.nvars);
        let out_nvars = images.first().map_or(self.nvars, |p| p.nvars);
        let mut max_exp = vec![0u32; self.nvars];
        for (t, _) in &self.terms {
            for (j, m) in max_exp.iter_mut().enumerate() {
                *m = (*m).max(t.exponent(j));
            }
        }
        // powers[j][e] = images[j]^e
        let powers: Vec<Vec<Polynomial>> = images
            .iter()
            .enumerate()
            .map(|(j, img)| {
                let mut pows = vec![Polynomial::constant(out_nvars, Coeff::one())];
                for e in 1..=max_exp[j] as usize {
                    let next = pows[e - 1].mul(img);
                    pows.push(next);
                }
                pows
            })
            .collect();
        let mut acc = Polynomial::zero(out_nvars);
        for (t, c) in &self.terms {
            let mut prod = Polynomial::constant(out_nvars, c.clone());
            for j in 0..self.nvars {
                let e = t.exponent(j) as usize;
                if e > 0 {
                    prod = prod.mul(&powers[j][e]);
                }
            }
            acc = acc.add(&prod);
        }
        acc
    }

    /// Homogenize with one extra smallest variable; the result has arity
    /// `nvars + 1` and is homogeneous of the polynomial's total degree.
    pub fn homogenize(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero(self.nvars + 1);
        }
        let d = self.degree().unwrap();
        let terms = self
            .terms
            .iter()
            .map(|(t, c)| {
                let mut exps = t.exponents().to_vec();
                exps.push(d - t.degree());
                (Term::new(exps), c.clone())
            })
            .collect();
        Polynomial::from_terms(self.nvars + 1, terms)
    }

    /// Set the last variable to 1, dropping to arity `nvars - 1`.
    pub fn dehomogenize(&self) -> Polynomial {
        assert!(self.nvars >= 2);
        let terms = self
            .terms
            .iter()
            .map(|(t, c)| {
                (Term::new(t.exponents()[..self.nvars - 1].to_vec()), c.clone())
            })
            .collect();
        Polynomial::from_terms(self.nvars - 1, terms)
    }

    /// Set the last `count` variables to 0.
    pub fn restrict_last(&self, count: usize) -> Polynomial {
        assert!(count < self.nvars);
        let keep = self.nvars - count;
        let terms = self
            .terms
            .iter()
            .filter(|(t, _)| t.exponents()[keep..].iter().all(|&e| e == 0))
            .map(|(t, c)| (Term::new(t.exponents()[..keep].to_vec()), c.clone()))
            .collect();
        Polynomial { nvars: keep, terms }
    }

    /// Reinterpret in a ring with `extra` more (larger-index) variables.
    pub fn extended(&self, extra: usize) -> Polynomial {
        Polynomial {
            nvars: self.nvars + extra,
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.extended(extra), c.clone()))
                .collect(),
        }
    }
}

/// An invertible linear change of variables; entry `(i, j)` is the
/// coefficient of the old variable `x_(i+1)` in the image of `x_(j+1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearChange {
    n: usize,
    matrix: Vec<Vec<Coeff>>,
}

impl LinearChange {
    pub fn new(matrix: Vec<Vec<Coeff>>) -> Result<Self> {
        let n = matrix.len();
        if n == 0 || matrix.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidParameter("matrix must be square".into()));
        }
        let lc = LinearChange { n, matrix };
        if lc.determinant().is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(lc)
    }

    pub fn identity(n: usize) -> Self {
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Coeff::one() } else { Coeff::zero() })
                    .collect()
            })
            .collect();
        LinearChange { n, matrix }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, c)| if i == j { c.is_one() } else { c.is_zero() })
        })
    }

    /// Dense random matrix with integer entries in `[-bound, bound]`,
    /// resampled until invertible.
    pub fn random<R: Rng>(n: usize, bound: i64, rng: &mut R) -> Self {
        assert!(bound >= 1);
        loop {
            let matrix: Vec<Vec<Coeff>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| Coeff::from_integer(BigInt::from(rng.gen_range(-bound..=bound))))
                        .collect()
                })
                .collect();
            let lc = LinearChange { n, matrix };
            if !lc.determinant().is_zero() {
                return lc;
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &[Vec<Coeff>] {
        &self.matrix
    }

    pub fn determinant(&self) -> Coeff {
        let mut m = self.matrix.clone();
        let n = self.n;
        let mut det = Coeff::one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m[r][col].is_zero());
            let Some(pivot) = pivot else {
                return Coeff::zero();
            };
            if pivot != col {
                m.swap(pivot, col);
                det = -det;
            }
            let p = m[col][col].clone();
            det *= &p;
            for r in col + 1..n {
                let factor = &m[r][col] / &p;
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let sub = &factor * &m[col][c];
                    m[r][c] -= sub;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> LinearChange {
        let n = self.n;
        let mut m: Vec<Vec<Coeff>> = self
            .matrix
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut ext = row.clone();
                ext.extend((0..n).map(|j| if i == j { Coeff::one() } else { Coeff::zero() }));
                ext
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !m[r][col].is_zero())
                .expect("invertible by construction");
            m.swap(pivot, col);
            let p = m[col][col].clone();
            for c in 0..2 * n {
                m[col][c] /= p.clone();
            }
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let factor = m[r][col].clone();
                    for c in 0..2 * n {
                        let sub = &factor * &m[col][c];
                        m[r][c] -= sub;
                    }
                }
            }
        }
        LinearChange {
            n,
            matrix: m.into_iter().map(|row| row[n..].to_vec()).collect(),
        }
    }

    /// Apply the substitution `x_j -> sum_i m[i][j] x_i` to `f`.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.nvars() != self.n {
            return Err(Error::ArityMismatch(self.n, f.nvars()));
        }
        let images: Vec<Polynomial> = (0..self.n)
            .map(|j| {
                Polynomial::from_terms(
                    self.n,
                    (0..self.n)
                        .map(|i| (Term::variable(self.n, i), self.matrix[i][j].clone()))
                        .collect(),
                )
            })
            .collect();
        Ok(f.substitute(&images))
    }

    pub fn apply_all(&self, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
        gens.iter().map(|f| self.apply(f)).collect()
    }
}

fn format_coeff(c: &Coeff) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Render a term like `x1^2*x3` (or `1` for the constant term).
pub fn format_term(ctx: &RingContext, t: &Term) -> String {
    if t.is_one() {
        return "1".into();
    }
    let mut parts = Vec::new();
    for (j, &e) in t.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ctx.name(j).to_string()),
            _ => parts.push(format!("{}^{}", ctx.name(j), e)),
        }
    }
    parts.join("*")
}

/// Render terms in descending degrevlex order, e.g. `x1*x2 + x2^2`.
pub fn format_polynomial(ctx: &RingContext, f: &Polynomial) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (t, c)) in f.terms().iter().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if t.is_one() {
            out.push_str(&format_coeff(&abs));
        } else if abs.is_one() {
            out.push_str(&format_term(ctx, t));
        } else {
            out.push_str(&format_coeff(&abs));
            out.push('*');
            out.push_str(&format_term(ctx, t));
        }
    }
    out
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_term(&RingContext::new(self.arity()), self))
    }
}

struct Lexer<'a> {
    text: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Star,
    Caret,
    Plus,
    Minus,
    Slash,
    End,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str, line: usize) -> Self {
        Lexer { text: text.as_bytes(), pos: 0, line, col: 1 }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { line: self.line, col: self.col, msg: msg.into() }
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.text.get(self.pos).copied();
        if b.is_some() {
            self.pos += 1;
            self.col += 1;
        }
        b
    }

    fn peek(&self) -> Option<u8> {
        self.text.get(self.pos).copied()
    }

    fn next_tok(&mut self) -> Result<(Tok, usize)> {
        while matches!(self.peek(), Some(b' ') | Some(b'\t') | Some(b'\r')) {
            self.bump();
        }
        let col = self.col;
        let Some(b) = self.peek() else {
            return Ok((Tok::End, col));
        };
        match b {
            b'*' => {
                self.bump();
                Ok((Tok::Star, col))
            }
            b'^' => {
                self.bump();
                Ok((Tok::Caret, col))
            }
            b'+' => {
                self.bump();
                Ok((Tok::Plus, col))
            }
            b'-' => {
                self.bump();
                Ok((Tok::Minus, col))
            }
            b'/' => {
                self.bump();
                Ok((Tok::Slash, col))
            }
            b'0'..=b'9' => {
                let start = self.pos;
                while matches!(self.peek(), Some(b'0'..=b'9')) {
                    self.bump();
                }
                let s = std::str::from_utf8(&self.text[start..self.pos]).unwrap();
                Ok((Tok::Int(s.parse().unwrap()), col))
            }
            b if b.is_ascii_alphabetic() || b == b'_' => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
                    self.bump();
                }
                let s = std::str::from_utf8(&self.text[start..self.pos]).unwrap();
                Ok((Tok::Ident(s.to_string()), col))
            }
            other => Err(self.err(format!("unexpected character `{}`", other as char))),
        }
    }
}

struct PolyParser<'a> {
    lexer: Lexer<'a>,
    ctx: &'a RingContext,
    tok: Tok,
    tok_col: usize,
}

impl<'a> PolyParser<'a> {
    fn new(text: &'a str, line: usize, ctx: &'a RingContext) -> Result<Self> {
        let mut lexer = Lexer::new(text, line);
        let (tok, tok_col) = lexer.next_tok()?;
        Ok(PolyParser { lexer, ctx, tok, tok_col })
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { line: self.lexer.line, col: self.tok_col, msg: msg.into() }
    }

    fn advance(&mut self) -> Result<()> {
        let (tok, col) = self.lexer.next_tok()?;
        self.tok = tok;
        self.tok_col = col;
        Ok(())
    }

    fn parse_polynomial(&mut self) -> Result<Polynomial> {
        let n = self.ctx.nvars();
        let mut terms: Vec<(Term, Coeff)> = Vec::new();
        let mut sign = Coeff::one();
        match self.tok {
            Tok::Minus => {
                sign = -sign;
                self.advance()?;
            }
            Tok::Plus => {
                self.advance()?;
            }
            _ => {}
        }
        loop {
            let (t, c) = self.parse_monomial()?;
            terms.push((t, c * &sign));
            match self.tok {
                Tok::Plus => {
                    sign = Coeff::one();
                    self.advance()?;
                }
                Tok::Minus => {
                    sign = -Coeff::one();
                    self.advance()?;
                }
                Tok::End => break,
                _ => return Err(self.err("expected `+`, `-` or end of line")),
            }
        }
        Ok(Polynomial::from_terms(n, terms))
    }

    fn parse_monomial(&mut self) -> Result<(Term, Coeff)> {
        let n = self.ctx.nvars();
        let mut coeff = Coeff::one();
        let mut exps = vec![0u32; n];
        loop {
            match std::mem::replace(&mut self.tok, Tok::End) {
                Tok::Int(num) => {
                    self.advance()?;
                    let mut c = Coeff::from_integer(num);
                    if self.tok == Tok::Slash {
                        self.advance()?;
                        match std::mem::replace(&mut self.tok, Tok::End) {
                            Tok::Int(den) => {
                                if den.is_zero() {
                                    return Err(self.err("zero denominator"));
                                }
                                c /= Coeff::from_integer(den);
                                self.advance()?;
                            }
                            _ => return Err(self.err("expected denominator after `/`")),
                        }
                    }
                    coeff *= c;
                }
                Tok::Ident(name) => {
                    let Some(var) = self.ctx.index_of(&name) else {
                        return Err(self.err(format!("unknown variable `{name}`")));
                    };
                    self.advance()?;
                    let e = if self.tok == Tok::Caret {
                        self.advance()?;
                        match std::mem::replace(&mut self.tok, Tok::End) {
                            Tok::Int(e) => {
                                self.advance()?;
                                u32::try_from(&e)
                                    .map_err(|_| self.err("exponent too large"))?
                            }
                            _ => return Err(self.err("expected integer exponent after `^`")),
                        }
                    } else {
                        1
                    };
                    exps[var] += e;
                }
                other => {
                    self.tok = other;
                    return Err(self.err("expected coefficient or variable"));
                }
            }
            if self.tok == Tok::Star {
                self.advance()?;
            } else {
                break;
            }
        }
        Ok((Term::new(exps), coeff))
    }
}

/// Parse a single polynomial in the generator syntax.
pub fn parse_polynomial(ctx: &RingContext, text: &str) -> Result<Polynomial> {
    parse_polynomial_at(ctx, text, 1)
}

fn parse_polynomial_at(ctx: &RingContext, text: &str, line: usize) -> Result<Polynomial> {
    let mut parser = PolyParser::new(text, line, ctx)?;
    parser.parse_polynomial()
}

/// Parse the ideal file format: a `ring: x1 x2 ...` header followed by one
/// generator per line; `#` starts a comment.
pub fn parse_ideal(text: &str) -> Result<(RingContext, Vec<Polynomial>)> {
    let mut ctx: Option<RingContext> = None;
    let mut gens = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        match &ctx {
            None => {
                let Some(rest) = trimmed.strip_prefix("ring:") else {
                    return Err(Error::Parse {
                        line: line_no,
                        col: 1,
                        msg: "expected `ring: x1 x2 ...` header".into(),
                    });
                };
                let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                ctx = Some(RingContext::with_names(names).map_err(|e| Error::Parse {
                    line: line_no,
                    col: 1,
                    msg: e.to_string(),
                })?);
            }
            Some(c) => {
                let f = parse_polynomial_at(c, line, line_no)?;
                if f.is_zero() {
                    return Err(Error::Parse {
                        line: line_no,
                        col: 1,
                        msg: "zero generator".into(),
                    });
                }
                gens.push(f);
            }
        }
    }
    match ctx {
        Some(c) => Ok((c, gens)),
        None => Err(Error::Parse { line: 1, col: 1, msg: "missing `ring:` header".into() }),
    }
}

/// Reject ideals the rest of the crate does not treat: empty generating
/// sets and the unit ideal (a nonzero constant generator).
pub fn validate_proper(gens: &[Polynomial]) -> Result<()> {
    if gens.is_empty() {
        return Err(Error::InvalidParameter("ideal needs at least one generator".into()));
    }
    for f in gens {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if f.degree() == Some(0) {
            return Err(Error::UnitIdeal);
        }
    }
    Ok(())
}
