//! Fractions of multivariate polynomials. Equality is decided by
//! cross-multiplication; reduction only strips common content, never
//! computes a full polynomial gcd.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{Field, MultiPoly, Rational, Ring};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc { num, den }.reduced())
    }

    pub fn from_poly(num: MultiPoly) -> Self {
        let den = num.one_like();
        RatFunc { num, den }
    }

    pub fn zero(nvars: usize) -> Self {
        RatFunc::from_poly(MultiPoly::zero(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        RatFunc::from_poly(MultiPoly::one(nvars))
    }

    /// The variable `u_{idx+1}` as a rational function.
    pub fn var(nvars: usize, idx: usize) -> Self {
        RatFunc::from_poly(MultiPoly::var(nvars, idx))
    }

    pub fn vars(nvars: usize) -> Vec<Self> {
        (0..nvars).map(|i| RatFunc::var(nvars, i)).collect()
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Strip common rational content and common monomial factors, collapse
    /// to a polynomial whenever the denominator divides the numerator
    /// exactly, and make the denominator's leading coefficient positive.
    /// Never changes the equality class (no general gcd is computed).
    fn reduced(self) -> Self {
        if self.num.is_zero() {
            return RatFunc {
                den: self.num.one_like(),
                num: self.num,
            };
        }
        if self.den.is_one() {
            return self;
        }
        if let Some(q) = self.num.try_exact_div(&self.den) {
            return RatFunc {
                den: q.one_like(),
                num: q,
            };
        }
        let c = self.num.content().gcd(&self.den.content());
        let mn = self.num.monomial_content();
        let md = self.den.monomial_content();
        let shared = super::Monomial(
            mn.0.iter()
                .zip(&md.0)
                .map(|(a, b)| (*a).min(*b))
                .collect(),
        );
        let mut num = self.num.div_content(&c, &shared);
        let mut den = self.den.div_content(&c, &shared);
        if den.leading_sign() < 0 {
            num = -num;
            den = -den;
        }
        RatFunc { num, den }
    }

    pub fn try_inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc {
            num: self.den.clone(),
            den: self.num.clone(),
        }
        .reduced())
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.try_inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = RatFunc::one(self.nvars());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation; a vanishing denominator is a singularity.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        let d = self.den.eval(point)?;
        if d.is_zero() {
            return Err(Error::Singular(format!(
                "denominator {} vanishes at the given point",
                self.den
            )));
        }
        Ok(&self.num.eval(point)? / &d)
    }
}

impl PartialEq for RatFunc {
    /// `p/q == p'/q'` iff `p*q' == p'*q`.
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
        .reduced()
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        RatFunc {
            num: &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
        .reduced()
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
        .reduced()
    }
}

impl Div<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.try_div(rhs).expect("division by zero rational function")
    }
}

macro_rules! ratfunc_binop_forward {
    ($trait:ident, $method:ident) => {
        impl $trait<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &'a RatFunc) -> RatFunc {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<RatFunc> for &'a RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                self.$method(&rhs)
            }
        }
    };
}

ratfunc_binop_forward!(Add, add);
ratfunc_binop_forward!(Sub, sub);
ratfunc_binop_forward!(Mul, mul);
ratfunc_binop_forward!(Div, div);

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Ring for RatFunc {
    fn zero_like(&self) -> Self {
        RatFunc::zero(self.nvars())
    }
    fn one_like(&self) -> Self {
        RatFunc::one(self.nvars())
    }
    fn int_like(&self, n: i64) -> Self {
        RatFunc::from_poly(MultiPoly::from_int(self.nvars(), n))
    }
    fn rat_like(&self, q: &Rational) -> Self {
        RatFunc::from_poly(MultiPoly::constant(self.nvars(), q.clone()))
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

impl Field for RatFunc {
    fn try_inv(&self) -> Result<Self> {
        RatFunc::try_inv(self)
    }

    fn try_div(&self, rhs: &Self) -> Result<Self> {
        RatFunc::try_div(self, rhs)
    }
}
