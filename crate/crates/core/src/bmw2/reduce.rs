//! Rewriting of generator words onto the 3r^2 spanning words.
//!
//! Every rule below is a consequence of the defining relations:
//!   s x1^a = x2^a s + sum_{c=1}^{a} x2^{c-1} (e - 1) x1^{a-c}
//!   s x2^b = x1^b s + sum_{c=1}^{b} x1^{b-c} (1 - e) x2^{c-1}
//!   s x1^a e = (-1)^a x1^a e + sum_{c=1}^{a} (-1)^{c-1} w_{a-c} x1^{c-1} e
//!             - [a odd] x1^{a-1} e
//!   e x1^a e = w_a e,  x2 e = -x1 e,  e x2 = -e x1,  se = es = e,  s^2 = 1,
//!   x1^r = -sum_{j<r} a_j x1^j.
//!
//! x2-powers of degree r are eliminated through the cached expansion of
//! x2^r, obtained once from x2 = s x1 s - e + s applied to x2 * x2^{r-1};
//! that bootstrap only ever needs rewrites whose intermediate x2-degree
//! stays below r.

use super::element::{AlgebraElement, BasisWord, Gen};
use crate::params::ParameterSet;
use crate::ring::Ring;

pub struct Reducer<K: Ring> {
    params: ParameterSet<K>,
    /// Expansion of x2^r over the basis; absent only during bootstrap.
    ypow_r: Option<AlgebraElement<K>>,
}

impl<K: Ring> Reducer<K> {
    pub fn new(params: ParameterSet<K>) -> Self {
        let mut red = Reducer {
            params,
            ypow_r: None,
        };
        red.ypow_r = Some(red.compute_ypow_r());
        red
    }

    pub fn params(&self) -> &ParameterSet<K> {
        &self.params
    }

    pub fn r(&self) -> usize {
        self.params.r()
    }

    fn sign(&self, k: usize) -> K {
        self.params.int(if k % 2 == 0 { 1 } else { -1 })
    }

    fn omega(&self, a: usize) -> K {
        self.params.omega(a)
    }

    /// Coefficients `c_0..c_{r-1}` of `x1^k` modulo the cyclotomic relation.
    fn xpow(&self, k: usize) -> Vec<K> {
        let r = self.r();
        let a = self.params.elem_sym();
        let zero = self.params.zero();
        let mut c = vec![zero.clone(); r];
        if k < r {
            c[k] = self.params.one();
            return c;
        }
        c[r - 1] = self.params.one();
        for _ in 0..(k - (r - 1)) {
            // multiply by x1: shift up, fold the overflow back in
            let top = c[r - 1].clone();
            for j in (1..r).rev() {
                c[j] = c[j - 1].clone() - a[j].clone() * top.clone();
            }
            c[0] = -(a[0].clone() * top);
        }
        c
    }

    /// `x1^A e x1^B` for arbitrary exponents.
    fn exe(&self, a: usize, b: usize) -> AlgebraElement<K> {
        let ca = self.xpow(a);
        let cb = self.xpow(b);
        let mut out = AlgebraElement::zero();
        for (j, cj) in ca.iter().enumerate() {
            if cj.is_zero() {
                continue;
            }
            for (k, ck) in cb.iter().enumerate() {
                out.add_term(BasisWord::exe(j, k), cj.clone() * ck.clone());
            }
        }
        out
    }

    /// `e x1^k s`, reducing the x1-power first. On a reduced power `j < r`:
    /// `e x1^j s = (-1)^j e x1^j + sum_c (-1)^{c-1} w_{j-c} e x1^{c-1}
    ///             - [j odd] e x1^{j-1}`.
    fn exs(&self, k: usize) -> AlgebraElement<K> {
        let mut out = AlgebraElement::zero();
        for (j, cj) in self.xpow(k).iter().enumerate() {
            if cj.is_zero() {
                continue;
            }
            out.add_term(BasisWord::exe(0, j), self.sign(j) * cj.clone());
            for c in 1..=j {
                out.add_term(
                    BasisWord::exe(0, c - 1),
                    self.sign(c - 1) * self.omega(j - c) * cj.clone(),
                );
            }
            if j % 2 == 1 {
                out.add_term(BasisWord::exe(0, j - 1), -cj.clone());
            }
        }
        out
    }

    /// `s x1^a e x1^b` (`a, b < r`).
    fn s_exe(&self, a: usize, b: usize) -> AlgebraElement<K> {
        let mut out = AlgebraElement::zero();
        out.add_term(BasisWord::exe(a, b), self.sign(a));
        for c in 1..=a {
            out.add_term(
                BasisWord::exe(c - 1, b),
                self.sign(c - 1) * self.omega(a - c),
            );
        }
        if a % 2 == 1 {
            out.add_term(BasisWord::exe(a - 1, b), self.params.int(-1));
        }
        out
    }

    /// `x1^A x2^B` for arbitrary exponents.
    fn xx(&self, a: usize, b: usize) -> AlgebraElement<K> {
        let r = self.r();
        if b < r {
            let mut out = AlgebraElement::zero();
            for (j, cj) in self.xpow(a).iter().enumerate() {
                out.add_term(BasisWord::xx(j, b), cj.clone());
            }
            return out;
        }
        let ypow_r = self
            .ypow_r
            .as_ref()
            .expect("x2-degree overflow during bootstrap");
        let mut out = AlgebraElement::zero();
        for (w, c) in ypow_r.clone().iter() {
            let shifted = self.yshift(b - r, w);
            let shifted = self.xshift(a, &shifted);
            out.add_scaled(&shifted, c);
        }
        out
    }

    /// `x1^A x2^B s` for arbitrary exponents.
    fn xxs(&self, a: usize, b: usize) -> AlgebraElement<K> {
        let r = self.r();
        if b < r {
            let mut out = AlgebraElement::zero();
            for (j, cj) in self.xpow(a).iter().enumerate() {
                out.add_term(BasisWord::xxs(j, b), cj.clone());
            }
            return out;
        }
        self.rightmul_s(&self.xx(a, b))
    }

    /// Left-multiply a basis word by `x2^k`.
    fn yshift(&self, k: usize, w: &BasisWord) -> AlgebraElement<K> {
        use super::element::Family::*;
        if k == 0 {
            return AlgebraElement::from_word(*w, self.params.one());
        }
        match w.family {
            Exe => self.exe(w.a + k, w.b).scale(&self.sign(k)),
            Xx => self.xx(w.a, w.b + k),
            Xxs => self.xxs(w.a, w.b + k),
        }
    }

    /// Left-multiply an element by `x1^k`.
    fn xshift(&self, k: usize, el: &AlgebraElement<K>) -> AlgebraElement<K> {
        if k == 0 {
            return el.clone();
        }
        let mut out = AlgebraElement::zero();
        for (w, c) in el.iter() {
            for (j, cj) in self.xpow(w.a + k).iter().enumerate() {
                if cj.is_zero() {
                    continue;
                }
                out.add_term(
                    BasisWord {
                        family: w.family,
                        a: j,
                        b: w.b,
                    },
                    c.clone() * cj.clone(),
                );
            }
        }
        out
    }

    /// `s x1^a x2^b` (`a, b < r`), by pushing `s` through both powers:
    ///   s x1^a x2^b = x1^b x2^a s
    ///     + sum_{c=1}^{b} [ x1^{b-c} x2^{a+c-1}
    ///                       - (-1)^{a+c-1} x1^{a+b-c} e x1^{c-1} ]
    ///     + sum_{c=1}^{a} [ (-1)^{b+c-1} x1^{c-1} e x1^{a+b-c}
    ///                       - x1^{a-c} x2^{b+c-1} ].
    fn s_xy(&self, a: usize, b: usize) -> AlgebraElement<K> {
        let mut out = AlgebraElement::from_word(BasisWord::xxs(b, a), self.params.one());
        for c in 1..=b {
            out.add_elem(&self.xx(b - c, a + c - 1));
            out.add_scaled(&self.exe(a + b - c, c - 1), &(-self.sign(a + c - 1)));
        }
        for c in 1..=a {
            out.add_scaled(&self.exe(c - 1, a + b - c), &self.sign(b + c - 1));
            out.sub_elem(&self.xx(a - c, b + c - 1));
        }
        out
    }

    /// Right multiplication by `s` (used for `s * xxs` words and for the
    /// involution; all three cases are closed forms).
    pub fn rightmul_s(&self, el: &AlgebraElement<K>) -> AlgebraElement<K> {
        use super::element::Family::*;
        let mut out = AlgebraElement::zero();
        for (w, c) in el.iter() {
            match w.family {
                Xx => out.add_term(BasisWord::xxs(w.a, w.b), c.clone()),
                Xxs => out.add_term(BasisWord::xx(w.a, w.b), c.clone()),
                Exe => {
                    // x1^a (e x1^b s)
                    out.add_term(BasisWord::exe(w.a, w.b), self.sign(w.b) * c.clone());
                    for d in 1..=w.b {
                        out.add_term(
                            BasisWord::exe(w.a, d - 1),
                            self.sign(d - 1) * self.omega(w.b - d) * c.clone(),
                        );
                    }
                    if w.b % 2 == 1 {
                        out.add_term(BasisWord::exe(w.a, w.b - 1), -c.clone());
                    }
                }
            }
        }
        out
    }

    /// Expansion of `x2^r`: substitute `x2 = s x1 s - e + s` into
    /// `x2 * x2^{r-1}`. All intermediate rewrites keep the x2-degree
    /// below r, so this terminates without referring to itself.
    fn compute_ypow_r(&self) -> AlgebraElement<K> {
        let prev = AlgebraElement::from_word(BasisWord::xx(0, self.r() - 1), self.params.one());
        let s_prev = self.leftmul(Gen::S, &prev);
        let xs_prev = self.leftmul(Gen::X1, &s_prev);
        let mut out = self.leftmul(Gen::S, &xs_prev);
        out.sub_elem(&self.leftmul(Gen::E, &prev));
        out.add_elem(&s_prev);
        out
    }

    /// Left multiplication of a basis word by a generator.
    pub fn leftmul_word(&self, g: Gen, w: &BasisWord) -> AlgebraElement<K> {
        use super::element::Family::*;
        match (g, w.family) {
            (Gen::X1, Exe) => self.exe(w.a + 1, w.b),
            (Gen::X1, Xxs) => self.xxs(w.a + 1, w.b),
            (Gen::X1, Xx) => self.xx(w.a + 1, w.b),
            (Gen::X2, Exe) => self.exe(w.a + 1, w.b).neg(),
            (Gen::X2, Xxs) => self.xxs(w.a, w.b + 1),
            (Gen::X2, Xx) => self.xx(w.a, w.b + 1),
            (Gen::E, Exe) => AlgebraElement::from_word(BasisWord::exe(0, w.b), self.omega(w.a)),
            (Gen::E, Xxs) => self.exs(w.a + w.b).scale(&self.sign(w.b)),
            (Gen::E, Xx) => self.exe(0, w.a + w.b).scale(&self.sign(w.b)),
            (Gen::S, Exe) => self.s_exe(w.a, w.b),
            (Gen::S, Xx) => self.s_xy(w.a, w.b),
            (Gen::S, Xxs) => self.rightmul_s(&self.s_xy(w.a, w.b)),
        }
    }

    /// Linear extension of `leftmul_word`.
    pub fn leftmul(&self, g: Gen, el: &AlgebraElement<K>) -> AlgebraElement<K> {
        let mut out = AlgebraElement::zero();
        for (w, c) in el.iter() {
            out.add_scaled(&self.leftmul_word(g, w), c);
        }
        out
    }

    /// Rewrite an arbitrary generator word onto the spanning set.
    pub fn reduce_word(&self, word: &[Gen]) -> AlgebraElement<K> {
        let mut el = AlgebraElement::from_word(BasisWord::identity(), self.params.one());
        for g in word.iter().rev() {
            el = self.leftmul(*g, &el);
        }
        el
    }

    /// The involution fixing e, s, x1 and x2. On basis words:
    /// `(x1^a e x1^b)* = x1^b e x1^a`, `(x1^a x2^b)* = x1^a x2^b`, and
    /// `(x1^a x2^b s)* = s x1^a x2^b`, which is rewritten back to the basis.
    pub fn involution(&self, el: &AlgebraElement<K>) -> AlgebraElement<K> {
        use super::element::Family::*;
        let mut out = AlgebraElement::zero();
        for (w, c) in el.iter() {
            match w.family {
                Exe => out.add_term(BasisWord::exe(w.b, w.a), c.clone()),
                Xx => out.add_term(*w, c.clone()),
                Xxs => out.add_scaled(&self.s_xy(w.a, w.b), c),
            }
        }
        out
    }
}
