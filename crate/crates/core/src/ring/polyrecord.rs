//! Wire format for polynomials: a list of `{exponents, coeff}` records in
//! graded-lex order.

use serde::{Deserialize, Serialize};

use super::{Monomial, MultiPoly, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct PolyRecord {
    pub exponents: Vec<u32>,
    pub coeff: Rational,
}

impl MultiPoly {
    pub fn to_records(&self) -> Vec<PolyRecord> {
        self.iter_terms()
            .map(|(m, c)| PolyRecord {
                exponents: m.0.clone(),
                coeff: c.clone(),
            })
            .collect()
    }

    pub fn from_records(nvars: usize, records: &[PolyRecord]) -> Result<Self> {
        let mut p = MultiPoly::zero(nvars);
        for rec in records {
            if rec.exponents.len() != nvars {
                return Err(Error::DimensionMismatch(nvars, rec.exponents.len()));
            }
            p.add_term(Monomial(rec.exponents.clone()), rec.coeff.clone());
        }
        Ok(p)
    }
}
