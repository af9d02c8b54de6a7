//! The two-strand degenerate cyclotomic BMW algebra as a based algebra:
//! rewriting onto the 3r^2 spanning words, structure constants, the
//! involution, and the freeness certificate.

mod element;
mod reduce;
mod table;

pub use element::{parse_word, AlgebraElement, BasisWord, Family, Gen};
pub use reduce::Reducer;
pub use table::{build_table, freeness_certificate, StructureTable};

use crate::params::ParameterSet;
use crate::ring::Ring;

/// Rewrite a generator word onto the spanning set for the given parameters.
pub fn reduce_word<K: Ring>(params: ParameterSet<K>, word: &[Gen]) -> AlgebraElement<K> {
    Reducer::new(params).reduce_word(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{MultiPoly, Rational};

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn numeric_23() -> ParameterSet<Rational> {
        ParameterSet::u_admissible(vec![q(2), q(3)]).unwrap()
    }

    fn elem(parts: &[(BasisWord, i64)]) -> AlgebraElement<Rational> {
        let mut el = AlgebraElement::zero();
        for (w, c) in parts {
            el.add_term(*w, q(*c));
        }
        el
    }

    #[test]
    fn reduce_word_examples() {
        let red = Reducer::new(numeric_23());
        // e e = w_0 e
        assert_eq!(
            red.reduce_word(&parse_word("e e").unwrap()),
            elem(&[(BasisWord::exe(0, 0), 10)])
        );
        // s e = e
        assert_eq!(
            red.reduce_word(&parse_word("s e").unwrap()),
            elem(&[(BasisWord::exe(0, 0), 1)])
        );
        // s x1 e = -x1 e + (w_0 - 1) e
        assert_eq!(
            red.reduce_word(&parse_word("s x1 e").unwrap()),
            elem(&[(BasisWord::exe(1, 0), -1), (BasisWord::exe(0, 0), 9)])
        );
        // x2 e = -x1 e
        assert_eq!(
            red.reduce_word(&parse_word("x2 e").unwrap()),
            elem(&[(BasisWord::exe(1, 0), -1)])
        );
    }

    #[test]
    fn reduce_word_symbolic_coefficient() {
        // s x1 e over the symbolic u-admissible parameters at r=2
        let red = Reducer::new(ParameterSet::symbolic_eta(2));
        let el = red.reduce_word(&parse_word("s x1 e").unwrap());
        let u = MultiPoly::vars(2);
        let w0_minus_1 =
            &(&u[0] + &u[1]).scale(&q(2)) - &MultiPoly::one(2);
        assert_eq!(el.coeff(&BasisWord::exe(1, 0)), Some(&MultiPoly::from_int(2, -1)));
        assert_eq!(el.coeff(&BasisWord::exe(0, 0)), Some(&w0_minus_1));
        assert_eq!(el.num_terms(), 2);
    }

    /// x2^2 at r=2, u=(2,3), omega = eta(u); checked by hand against two
    /// independent routes (the involution fixes it, and e * x2^2 = e x1^2).
    #[test]
    fn x2_squared_expansion_frozen() {
        let red = Reducer::new(numeric_23());
        let got = red.reduce_word(&parse_word("x2 x2").unwrap());
        let expected = elem(&[
            (BasisWord::exe(1, 0), 1),
            (BasisWord::exe(0, 1), 1),
            (BasisWord::exe(0, 0), -4),
            (BasisWord::xxs(0, 1), 1),
            (BasisWord::xxs(1, 0), 1),
            (BasisWord::xxs(0, 0), -5),
            (BasisWord::xx(0, 1), 5),
            (BasisWord::xx(0, 0), -6),
        ]);
        assert_eq!(got, expected);
        assert_eq!(red.involution(&got), got);
        let e_then = red.leftmul(Gen::E, &got);
        assert_eq!(
            e_then,
            elem(&[(BasisWord::exe(0, 1), 5), (BasisWord::exe(0, 0), -6)])
        );
    }

    #[test]
    fn table_examples() {
        // r=1 symbolic: 3 words, e*e = (2u_1 + 1) e
        let table = build_table(ParameterSet::symbolic_eta(1));
        assert_eq!(table.words().len(), 3);
        let e = BasisWord::exe(0, 0);
        let ee = table.product_words(&e, &e);
        let u1 = MultiPoly::var(1, 0);
        let eta0 = &u1.scale(&q(2)) + &MultiPoly::one(1);
        assert_eq!(ee, AlgebraElement::from_word(e, eta0));

        // r=2 numeric: e * (x1 e) = w_1 e = 45 e
        let table = build_table(numeric_23());
        let xe = BasisWord::exe(1, 0);
        assert_eq!(
            table.product_words(&e, &xe),
            AlgebraElement::from_word(e, q(45))
        );

        // identity is neutral
        let id = BasisWord::identity();
        for w in table.words() {
            assert_eq!(
                table.product_words(&id, w),
                AlgebraElement::from_word(*w, q(1))
            );
            assert_eq!(
                table.product_words(w, &id),
                AlgebraElement::from_word(*w, q(1))
            );
        }
    }

    #[test]
    fn generator_expansion_of_identity_matches_generators() {
        let table = build_table(numeric_23());
        let id = BasisWord::identity();
        assert_eq!(
            table.left_mult(Gen::E, &id),
            &elem(&[(BasisWord::exe(0, 0), 1)])
        );
        assert_eq!(
            table.left_mult(Gen::S, &id),
            &elem(&[(BasisWord::xxs(0, 0), 1)])
        );
        assert_eq!(
            table.left_mult(Gen::X1, &id),
            &elem(&[(BasisWord::xx(1, 0), 1)])
        );
        assert_eq!(
            table.left_mult(Gen::X2, &id),
            &elem(&[(BasisWord::xx(0, 1), 1)])
        );
    }

    #[test]
    fn involution_examples() {
        let red = Reducer::new(numeric_23());
        let xe = AlgebraElement::from_word(BasisWord::exe(1, 0), q(1));
        assert_eq!(
            red.involution(&xe),
            AlgebraElement::from_word(BasisWord::exe(0, 1), q(1))
        );
        let xx = AlgebraElement::from_word(BasisWord::xx(1, 1), q(1));
        assert_eq!(red.involution(&xx), xx);
    }

    #[test]
    fn involution_is_an_anti_automorphism_of_order_two() {
        let table = build_table(numeric_23());
        for w in table.words() {
            let el = AlgebraElement::from_word(*w, q(1));
            assert_eq!(table.involution(&table.involution(&el)), el, "word {w}");
        }
        for w1 in table.words() {
            for w2 in table.words() {
                let e1 = AlgebraElement::from_word(*w1, q(1));
                let e2 = AlgebraElement::from_word(*w2, q(1));
                let lhs = table.involution(&table.multiply(&e1, &e2));
                let rhs = table.multiply(&table.involution(&e2), &table.involution(&e1));
                assert_eq!(lhs, rhs, "words {w1}, {w2}");
            }
        }
    }

    #[test]
    fn left_ideal_of_e_words_is_invariant() {
        // span{x1^a e} is closed under left multiplication by all generators
        let instances = vec![vec![q(2)], vec![q(2), q(3)], vec![q(1), q(2), q(3)]];
        for u in instances {
            let table = build_table(ParameterSet::u_admissible(u).unwrap());
            for g in Gen::ALL {
                for a in 0..table.r() {
                    let el = table.left_mult(g, &BasisWord::exe(a, 0));
                    for (w, _) in el.iter() {
                        assert_eq!(w.family, Family::Exe);
                        assert_eq!(w.b, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn unwrapping_holds_up_to_2r() {
        let table = build_table(numeric_23());
        let params = table.params().clone();
        let omega = params.omega_table(2 * table.r());
        let e = AlgebraElement::from_word(BasisWord::exe(0, 0), q(1));
        for a in 0..=(2 * table.r()) {
            let mut mid = e.clone();
            for _ in 0..a {
                mid = table.apply_gen(Gen::X1, &mid);
            }
            let lhs = table.apply_gen(Gen::E, &mid);
            assert_eq!(lhs, e.scale(&omega[a]), "a={a}");
        }
    }

    #[test]
    fn relations_and_associativity_symbolic_small() {
        for r in 1..=2 {
            let (ok, report) = freeness_certificate(ParameterSet::symbolic_eta(r));
            assert!(ok, "r={r}: {:?}", report.first_failure());
        }
    }

    #[test]
    fn non_admissible_parameters_fail_certification() {
        let bad = numeric_23().with_omega(0, q(11));
        let (ok, report) = freeness_certificate(bad);
        assert!(!ok);
        let failure = report.first_failure().unwrap();
        assert!(failure.witness.is_some());
    }
}
