//! Sparse multivariate polynomials over the rationals with a graded
//! lexicographic term order, so equal polynomials have identical
//! serialized forms.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Rational, Ring};
use crate::error::{Error, Result};

/// Exponent vector of length `nvars`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn constant(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        assert!(idx < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[idx] = 1;
        Monomial(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, then exponents left to right.
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `u_1 .. u_nvars`; no zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = MultiPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::constant(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        MultiPoly::constant(nvars, Rational::one())
    }

    pub fn from_int(nvars: usize, n: i64) -> Self {
        MultiPoly::constant(nvars, Rational::from_int(n))
    }

    /// The variable `u_{idx+1}`.
    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut p = MultiPoly::zero(nvars);
        p.terms.insert(Monomial::var(nvars, idx), Rational::one());
        p
    }

    /// All `nvars` variables, in order.
    pub fn vars(nvars: usize) -> Vec<Self> {
        (0..nvars).map(|i| MultiPoly::var(nvars, i)).collect()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_constant())
    }

    /// The constant value, if this polynomial is constant.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_constant() {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn iter_terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        assert_eq!(m.0.len(), self.nvars, "monomial length mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, co)| (m.clone(), co * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = MultiPoly::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact substitution; the homomorphism property
    /// `eval(p*q) = eval(p)*eval(q)` holds by construction.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch(self.nvars, point.len()));
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    v = &v * &x.pow(e);
                }
            }
            total = &total + &v;
        }
        Ok(total)
    }

    /// Polynomial with the variables permuted: variable `i` of the result is
    /// variable `perm[i]` of the input.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars);
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; self.nvars];
            for (i, &src) in perm.iter().enumerate() {
                e[i] = m.0[src];
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// gcd of the rational coefficients (positive), zero for the zero poly.
    pub fn content(&self) -> Rational {
        let mut g = Rational::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
        }
        g
    }

    /// Componentwise minimum of all exponent vectors (the largest monomial
    /// dividing every term); constant monomial for the zero poly.
    pub fn monomial_content(&self) -> Monomial {
        let mut min: Option<Vec<u32>> = None;
        for m in self.terms.keys() {
            match &mut min {
                None => min = Some(m.0.clone()),
                Some(v) => {
                    for (a, b) in v.iter_mut().zip(&m.0) {
                        *a = (*a).min(*b);
                    }
                }
            }
        }
        Monomial(min.unwrap_or_else(|| vec![0; self.nvars]))
    }

    /// Divide every term by `c * u^m`; caller guarantees divisibility.
    pub fn div_content(&self, c: &Rational, m: &Monomial) -> Self {
        assert!(!c.is_zero());
        let inv = c.try_inv().unwrap();
        let mut out = MultiPoly::zero(self.nvars);
        for (mono, co) in &self.terms {
            let e: Vec<u32> = mono
                .0
                .iter()
                .zip(&m.0)
                .map(|(a, b)| {
                    assert!(a >= b, "monomial content does not divide");
                    a - b
                })
                .collect();
            out.add_term(Monomial(e), co * &inv);
        }
        out
    }

    /// Exact division: `Some(q)` with `self = q * den` when `den` divides
    /// `self`, `None` otherwise. Greedy leading-term elimination; the
    /// leading monomial of the remainder strictly decreases, and a
    /// non-divisible leading term proves non-divisibility.
    pub fn try_exact_div(&self, den: &MultiPoly) -> Option<MultiPoly> {
        self.assert_same_vars(den);
        if den.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(MultiPoly::zero(self.nvars));
        }
        let (den_lm, den_lc) = den.terms.iter().next_back().unwrap();
        if self.total_degree() < den.total_degree() {
            return None;
        }
        let den_lc_inv = den_lc.try_inv().unwrap();
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.nvars);
        while !rem.is_zero() {
            let (rem_lm, rem_lc) = {
                let (m, c) = rem.terms.iter().next_back().unwrap();
                (m.clone(), c.clone())
            };
            let mut q_exp = Vec::with_capacity(self.nvars);
            for (a, b) in rem_lm.0.iter().zip(&den_lm.0) {
                if a < b {
                    return None;
                }
                q_exp.push(a - b);
            }
            let q_mono = Monomial(q_exp);
            let q_coeff = &rem_lc * &den_lc_inv;
            for (m, c) in &den.terms {
                rem.add_term(q_mono.mul(m), -&(&q_coeff * c));
            }
            quot.add_term(q_mono, q_coeff);
        }
        Some(quot)
    }

    /// Coefficient sign of the leading (highest graded-lex) term; 0 for zero.
    pub fn leading_sign(&self) -> i32 {
        match self.terms.iter().next_back() {
            None => 0,
            Some((_, c)) => {
                if c.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    fn assert_same_vars(&self, other: &Self) {
        assert_eq!(
            self.nvars, other.nvars,
            "variable count mismatch: {} vs {}",
            self.nvars, other.nvars
        );
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.assert_same_vars(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.assert_same_vars(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.assert_same_vars(rhs);
        let mut out = MultiPoly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

macro_rules! poly_binop_forward {
    ($trait:ident, $method:ident) => {
        impl $trait<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &'a MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.$method(&rhs)
            }
        }
    };
}

poly_binop_forward!(Add, add);
poly_binop_forward!(Sub, sub);
poly_binop_forward!(Mul, mul);

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl fmt::Display for MultiPoly {
    /// Terms in descending graded-lex order, e.g. `2*u1^2 - u1*u2 + 1/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("u{}", i + 1)
                    } else {
                        format!("u{}^{}", i + 1, e)
                    }
                })
                .collect::<Vec<_>>()
                .join("*");
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl Ring for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.nvars)
    }
    fn one_like(&self) -> Self {
        MultiPoly::one(self.nvars)
    }
    fn int_like(&self, n: i64) -> Self {
        MultiPoly::from_int(self.nvars, n)
    }
    fn rat_like(&self, q: &Rational) -> Self {
        MultiPoly::constant(self.nvars, q.clone())
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
}
