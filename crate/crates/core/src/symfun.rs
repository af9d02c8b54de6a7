//! Symmetric functions: signed elementary symmetric functions, Schur
//! q-functions, the eta polynomials and the gamma rational functions.

use crate::error::{Error, Result};
use crate::ring::{Field, MultiPoly, RatFunc, Rational, Ring};

/// Coefficients `a_0..a_r` of `prod_i (x - u_i)`, over any ground ring.
/// `a_j = (-1)^{r-j} eps_{r-j}(u)` and `a_r = 1`.
pub fn elem_sym_values<K: Ring>(u: &[K]) -> Vec<K> {
    assert!(!u.is_empty());
    let one = u[0].one_like();
    let zero = u[0].zero_like();
    let mut coeffs = vec![one];
    for ui in u {
        let mut next = vec![zero.clone(); coeffs.len() + 1];
        for (j, c) in coeffs.iter().enumerate() {
            // multiply by (x - u_i): shift up, subtract u_i * c
            next[j + 1] = next[j + 1].clone() + c.clone();
            next[j] = next[j].clone() - ui.clone() * c.clone();
        }
        coeffs = next;
    }
    coeffs
}

/// Schur q-functions `q_0..q_limit` of `u`, from the generating function
/// `prod_i (1 + u_i t)/(1 - u_i t) = sum_a q_a t^a`, computed by multiplying
/// the truncated one-variable series `1 + 2u t + 2u^2 t^2 + ...`.
pub fn schur_q_values<K: Ring>(u: &[K], limit: usize) -> Vec<K> {
    assert!(!u.is_empty());
    let one = u[0].one_like();
    let zero = u[0].zero_like();
    let two = u[0].int_like(2);
    let mut series = vec![one.clone()];
    series.resize(limit + 1, zero.clone());
    for ui in u {
        let mut factor = vec![one.clone()];
        let mut pow = ui.clone();
        for _ in 1..=limit {
            factor.push(two.clone() * pow.clone());
            pow = pow * ui.clone();
        }
        let mut next = vec![zero.clone(); limit + 1];
        for (i, a) in series.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in factor.iter().enumerate().take(limit + 1 - i) {
                next[i + j] = next[i + j].clone() + a.clone() * b.clone();
            }
        }
        series = next;
    }
    series
}

/// `eta_a = q_{a+1} + (1/2)(-1)^{r-1} q_a + (1/2) delta_{a,0}` for
/// `a = 0..limit`.
pub fn eta_values<K: Ring>(u: &[K], limit: usize) -> Vec<K> {
    let r = u.len();
    let q = schur_q_values(u, limit + 1);
    let half = u[0].rat_like(&Rational::new(1, 2));
    let sign = if r % 2 == 1 { 1 } else { -1 };
    let half_signed = half.clone() * u[0].int_like(sign);
    (0..=limit)
        .map(|a| {
            let mut v = q[a + 1].clone() + half_signed.clone() * q[a].clone();
            if a == 0 {
                v = v + half.clone();
            }
            v
        })
        .collect()
}

/// `gamma_i = (2u_i - (-1)^r) prod_{j != i} (u_i + u_j)/(u_i - u_j)`.
/// Fails when some `u_i - u_j` is zero.
pub fn gamma_values<F: Field>(u: &[F]) -> Result<Vec<F>> {
    let r = u.len();
    assert!(r >= 1);
    let sign = u[0].int_like(if r % 2 == 0 { 1 } else { -1 });
    let two = u[0].int_like(2);
    let mut out = Vec::with_capacity(r);
    for i in 0..r {
        let mut g = two.clone() * u[i].clone() - sign.clone();
        for j in 0..r {
            if j == i {
                continue;
            }
            let diff = u[i].clone() - u[j].clone();
            if diff.is_zero() {
                return Err(Error::Singular(format!(
                    "u_{} = u_{} makes gamma undefined",
                    i + 1,
                    j + 1
                )));
            }
            let quot = (u[i].clone() + u[j].clone()).try_div(&diff)?;
            g = g * quot;
        }
        out.push(g);
    }
    Ok(out)
}

/// Signed elementary symmetric functions as polynomials in `u_1..u_r`.
#[derive(Clone, Debug)]
pub struct SignedElemSeq {
    pub r: usize,
    pub a: Vec<MultiPoly>,
}

pub fn signed_elementary(r: usize) -> SignedElemSeq {
    assert!(r >= 1);
    SignedElemSeq {
        r,
        a: elem_sym_values(&MultiPoly::vars(r)),
    }
}

/// Schur q-functions as polynomials in `u_1..u_r`, up to degree `limit`.
#[derive(Clone, Debug)]
pub struct SchurQSeq {
    pub r: usize,
    pub limit: usize,
    pub q: Vec<MultiPoly>,
}

pub fn schur_q(r: usize, limit: usize) -> SchurQSeq {
    assert!(r >= 1);
    SchurQSeq {
        r,
        limit,
        q: schur_q_values(&MultiPoly::vars(r), limit),
    }
}

/// The eta polynomials in `u_1..u_r`, up to index `limit`.
#[derive(Clone, Debug)]
pub struct EtaSeq {
    pub r: usize,
    pub limit: usize,
    pub eta: Vec<MultiPoly>,
}

pub fn eta(r: usize, limit: usize) -> EtaSeq {
    assert!(r >= 1);
    EtaSeq {
        r,
        limit,
        eta: eta_values(&MultiPoly::vars(r), limit),
    }
}

/// The gamma rational functions `gamma_1..gamma_r` in `u_1..u_r`.
#[derive(Clone, Debug)]
pub struct GammaSeq {
    pub r: usize,
    pub gamma: Vec<RatFunc>,
}

pub fn gamma(r: usize) -> GammaSeq {
    assert!(r >= 1);
    // The u_i are distinct indeterminates, so no singularity can occur.
    GammaSeq {
        r,
        gamma: gamma_values(&RatFunc::vars(r)).unwrap(),
    }
}

/// The weighted power sum `sum_i gamma_i u_i^a`.
pub fn weighted_power_sum(g: &GammaSeq, a: usize) -> RatFunc {
    let u = RatFunc::vars(g.r);
    let mut acc = RatFunc::zero(g.r);
    for (gi, ui) in g.gamma.iter().zip(&u) {
        acc = &acc + &(gi * &ui.pow(a as u32));
    }
    acc
}
