//! Algebra parameters: the cyclotomic roots `u_1..u_r` and the unwrapping
//! sequence `omega_0, omega_1, ...`.

use crate::error::{Error, Result};
use crate::ring::{MultiPoly, RatFunc, Rational, Ring};
use crate::symfun::{elem_sym_values, eta_values};

/// Parameters of a two-strand degenerate cyclotomic BMW algebra over the
/// ground ring `K`.
///
/// Only a finite omega prefix is stored (at least `r` values). Indices past
/// the prefix are generated on demand from the recurrence
/// `sum_j a_j * omega_{j+m} = 0` solved for the top index, where the `a_j`
/// are the signed elementary symmetric functions of the `u_i`.
#[derive(Clone, Debug)]
pub struct ParameterSet<K: Ring> {
    r: usize,
    u: Vec<K>,
    omega: Vec<K>,
    elem_sym: Vec<K>,
}

impl<K: Ring> ParameterSet<K> {
    pub fn new(u: Vec<K>, omega: Vec<K>) -> Result<Self> {
        let r = u.len();
        if r == 0 {
            return Err(Error::Invalid("need at least one u parameter".into()));
        }
        if omega.len() < r {
            return Err(Error::OmegaPrefix {
                need: r,
                have: omega.len(),
            });
        }
        let elem_sym = elem_sym_values(&u);
        Ok(ParameterSet {
            r,
            u,
            omega,
            elem_sym,
        })
    }

    /// u-admissible parameters: `omega_a = eta_a(u)`.
    pub fn u_admissible(u: Vec<K>) -> Result<Self> {
        if u.is_empty() {
            return Err(Error::Invalid("need at least one u parameter".into()));
        }
        let omega = eta_values(&u, u.len() - 1);
        ParameterSet::new(u, omega)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn u(&self) -> &[K] {
        &self.u
    }

    /// Signed elementary symmetric functions `a_0..a_r` of the `u_i`,
    /// i.e. the coefficients of `prod_i (x - u_i)`.
    pub fn elem_sym(&self) -> &[K] {
        &self.elem_sym
    }

    /// Length of the stored omega prefix.
    pub fn stored_len(&self) -> usize {
        self.omega.len()
    }

    /// `omega_0 .. omega_upto` inclusive, extending by the recurrence past
    /// the stored prefix.
    pub fn omega_table(&self, upto: usize) -> Vec<K> {
        let mut table: Vec<K> = self.omega.iter().take(upto + 1).cloned().collect();
        while table.len() <= upto {
            let m = table.len() - self.r;
            // omega_{m+r} = -sum_{j<r} a_j omega_{j+m}
            let mut acc = self.zero();
            for j in 0..self.r {
                acc = acc + self.elem_sym[j].clone() * table[j + m].clone();
            }
            table.push(-acc);
        }
        table
    }

    pub fn omega(&self, a: usize) -> K {
        if a < self.omega.len() {
            self.omega[a].clone()
        } else {
            self.omega_table(a).pop().unwrap()
        }
    }

    /// Copy with one stored omega replaced; used to probe non-admissible
    /// parameter sets.
    pub fn with_omega(&self, index: usize, value: K) -> Self {
        let mut p = self.clone();
        assert!(index < p.omega.len(), "index beyond stored prefix");
        p.omega[index] = value;
        p
    }

    pub fn zero(&self) -> K {
        self.u[0].zero_like()
    }

    pub fn one(&self) -> K {
        self.u[0].one_like()
    }

    pub fn int(&self, n: i64) -> K {
        self.u[0].int_like(n)
    }

    pub fn rat(&self, q: &Rational) -> K {
        self.u[0].rat_like(q)
    }
}

impl ParameterSet<MultiPoly> {
    /// Symbolic u-admissible parameters: the `u_i` are the variables of
    /// the polynomial ring and `omega = eta`.
    pub fn symbolic_eta(r: usize) -> Self {
        ParameterSet::u_admissible(MultiPoly::vars(r)).unwrap()
    }

    /// Symbolic parameters with an explicitly supplied omega prefix.
    pub fn symbolic_with_omega(r: usize, omega: Vec<MultiPoly>) -> Result<Self> {
        for w in &omega {
            if w.nvars() != r {
                return Err(Error::DimensionMismatch(r, w.nvars()));
            }
        }
        ParameterSet::new(MultiPoly::vars(r), omega)
    }

    /// The same parameters viewed in the rational-function field.
    pub fn lift_to_ratfunc(&self) -> ParameterSet<RatFunc> {
        ParameterSet::new(
            self.u.iter().cloned().map(RatFunc::from_poly).collect(),
            self.omega.iter().cloned().map(RatFunc::from_poly).collect(),
        )
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn numeric_omega_extension_follows_recurrence() {
        // r=2, u=(2,3), omega = eta(u): values 10, 45, 165, ...
        let p = ParameterSet::u_admissible(vec![q(2), q(3)]).unwrap();
        assert_eq!(p.omega(0), q(10));
        assert_eq!(p.omega(1), q(45));
        // a_0 = 6, a_1 = -5: omega_2 = -(6*10 - 5*45) = 165
        assert_eq!(p.omega(2), q(165));
        let table = p.omega_table(4);
        assert_eq!(table[3], -(&(&q(6) * &q(45)) + &(&q(-5) * &q(165))));
        assert_eq!(table.len(), 5);
    }

    #[test]
    fn prefix_shorter_than_r_is_rejected() {
        assert!(matches!(
            ParameterSet::new(vec![q(2), q(3)], vec![q(10)]),
            Err(Error::OmegaPrefix { need: 2, have: 1 })
        ));
    }

    #[test]
    fn symbolic_eta_matches_numeric_evaluation() {
        let sym = ParameterSet::symbolic_eta(2);
        let point = [q(2), q(3)];
        for a in 0..4 {
            let expected = ParameterSet::u_admissible(vec![q(2), q(3)])
                .unwrap()
                .omega(a);
            assert_eq!(sym.omega(a).eval(&point).unwrap(), expected);
        }
    }
}
