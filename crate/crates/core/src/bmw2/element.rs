//! Basis words of the two-strand algebra and finitely supported linear
//! combinations of them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ring::Ring;

/// Generators of the two-strand algebra.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Gen {
    E,
    S,
    X1,
    X2,
}

impl Gen {
    pub const ALL: [Gen; 4] = [Gen::E, Gen::S, Gen::X1, Gen::X2];
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Gen::E => "e",
            Gen::S => "s",
            Gen::X1 => "x1",
            Gen::X2 => "x2",
        };
        write!(f, "{s}")
    }
}

impl FromStr for Gen {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "e" => Ok(Gen::E),
            "s" => Ok(Gen::S),
            "x1" => Ok(Gen::X1),
            "x2" => Ok(Gen::X2),
            other => Err(Error::Parse(format!(
                "unknown generator {other:?} (expected e, s, x1 or x2)"
            ))),
        }
    }
}

/// Parse a whitespace-separated generator word such as `"s x1 e"`.
pub fn parse_word(s: &str) -> Result<Vec<Gen>> {
    s.split_whitespace().map(str::parse).collect()
}

/// Families of the 3r^2 spanning words.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Family {
    /// `x1^a e x1^b`
    Exe,
    /// `x1^a x2^b s`
    Xxs,
    /// `x1^a x2^b`
    Xx,
}

/// One of the spanning words, with both exponents in `0..r`.
/// The identity element is `(Xx, 0, 0)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct BasisWord {
    pub family: Family,
    pub a: usize,
    pub b: usize,
}

impl BasisWord {
    pub fn exe(a: usize, b: usize) -> Self {
        BasisWord {
            family: Family::Exe,
            a,
            b,
        }
    }

    pub fn xxs(a: usize, b: usize) -> Self {
        BasisWord {
            family: Family::Xxs,
            a,
            b,
        }
    }

    pub fn xx(a: usize, b: usize) -> Self {
        BasisWord {
            family: Family::Xx,
            a,
            b,
        }
    }

    pub fn identity() -> Self {
        BasisWord::xx(0, 0)
    }

    pub fn is_identity(&self) -> bool {
        *self == BasisWord::identity()
    }

    /// The word spelled out as a generator sequence.
    pub fn factorization(&self) -> Vec<Gen> {
        let mut out = Vec::with_capacity(self.a + self.b + 1);
        out.extend(std::iter::repeat(Gen::X1).take(self.a));
        match self.family {
            Family::Exe => {
                out.push(Gen::E);
                out.extend(std::iter::repeat(Gen::X1).take(self.b));
            }
            Family::Xxs => {
                out.extend(std::iter::repeat(Gen::X2).take(self.b));
                out.push(Gen::S);
            }
            Family::Xx => {
                out.extend(std::iter::repeat(Gen::X2).take(self.b));
            }
        }
        out
    }

    /// All 3r^2 spanning words, in a fixed deterministic order.
    pub fn all(r: usize) -> Vec<BasisWord> {
        let mut out = Vec::with_capacity(3 * r * r);
        for family in [Family::Exe, Family::Xxs, Family::Xx] {
            for a in 0..r {
                for b in 0..r {
                    out.push(BasisWord { family, a, b });
                }
            }
        }
        out
    }
}

impl fmt::Display for BasisWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self.factorization();
        if gens.is_empty() {
            return write!(f, "1");
        }
        // collapse runs into powers: "x1^2 e x1"
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < gens.len() {
            let g = gens[i];
            let mut n = 1;
            while i + n < gens.len() && gens[i + n] == g {
                n += 1;
            }
            if n == 1 {
                parts.push(g.to_string());
            } else {
                parts.push(format!("{g}^{n}"));
            }
            i += n;
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// Finitely supported map from basis words to ground-ring coefficients.
/// No zero coefficients are stored.
#[derive(Clone, PartialEq, Debug)]
pub struct AlgebraElement<K: Ring> {
    terms: BTreeMap<BasisWord, K>,
}

impl<K: Ring> AlgebraElement<K> {
    pub fn zero() -> Self {
        AlgebraElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn from_word(w: BasisWord, coeff: K) -> Self {
        let mut el = AlgebraElement::zero();
        el.add_term(w, coeff);
        el
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &BasisWord) -> Option<&K> {
        self.terms.get(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BasisWord, &K)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, w: BasisWord, coeff: K) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(c) => {
                let sum = c.clone() + coeff;
                if sum.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *c = sum;
                }
            }
            None => {
                self.terms.insert(w, coeff);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, factor: &K) {
        if factor.is_zero() {
            return;
        }
        for (w, c) in &other.terms {
            self.add_term(*w, c.clone() * factor.clone());
        }
    }

    pub fn add_elem(&mut self, other: &Self) {
        for (w, c) in &other.terms {
            self.add_term(*w, c.clone());
        }
    }

    pub fn sub_elem(&mut self, other: &Self) {
        for (w, c) in &other.terms {
            self.add_term(*w, -c.clone());
        }
    }

    pub fn scale(&self, factor: &K) -> Self {
        let mut out = AlgebraElement::zero();
        out.add_scaled(self, factor);
        out
    }

    pub fn neg(&self) -> Self {
        AlgebraElement {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (*w, -c.clone()))
                .collect(),
        }
    }
}

impl<K: Ring> fmt::Display for AlgebraElement<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format!("({c})*[{w}]"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Rational;

    #[test]
    fn word_display_and_factorization() {
        assert_eq!(BasisWord::identity().to_string(), "1");
        assert_eq!(BasisWord::exe(2, 1).to_string(), "x1^2 e x1");
        assert_eq!(BasisWord::xxs(1, 2).to_string(), "x1 x2^2 s");
        assert_eq!(BasisWord::xx(0, 1).to_string(), "x2");
        assert_eq!(
            BasisWord::exe(1, 0).factorization(),
            vec![Gen::X1, Gen::E]
        );
        assert_eq!(BasisWord::all(2).len(), 12);
        assert_eq!(BasisWord::all(3).len(), 27);
    }

    #[test]
    fn parse_word_rejects_unknown_tokens() {
        assert_eq!(
            parse_word("s x1 e").unwrap(),
            vec![Gen::S, Gen::X1, Gen::E]
        );
        assert!(parse_word("s q").is_err());
    }

    #[test]
    fn zero_terms_are_pruned() {
        let mut el = AlgebraElement::from_word(BasisWord::identity(), Rational::one());
        el.add_term(BasisWord::identity(), Rational::from_int(-1));
        assert!(el.is_zero());
    }
}
