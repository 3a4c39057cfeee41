use num_traits::One;

use super::*;
use crate::group::{GroupTable, Subgroup};
use crate::io::{builtin, subgroup_from_words, WordParser};

const CAP: usize = 5000;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn sub(g: &GroupTable, words: &str) -> Subgroup {
    subgroup_from_words(g, words).unwrap()
}

#[test]
fn hats() {
    let c2 = builtin("cyclic(2)", CAP).unwrap();
    let triv = Subgroup::trivial(&c2);
    assert_eq!(AlgebraElement::hat(2, &triv), AlgebraElement::one(2));
    let h = AlgebraElement::hat(2, &Subgroup::whole(&c2));
    assert_eq!(h.coeff(0), q(1, 2));
    assert_eq!(h.coeff(1), q(1, 2));
    let s3 = builtin("symmetric(3)", CAP).unwrap();
    let c3 = AlgebraElement::hat(6, &sub(&s3, "(1,2,3)"));
    assert_eq!(c3.mul(&c3, &s3), c3);
}

#[test]
fn products() {
    let c2 = builtin("cyclic(2)", CAP).unwrap();
    let one = AlgebraElement::one(2);
    let g = AlgebraElement::basis(2, 1);
    let plus = one.add(&g).scale(&q(1, 2));
    let minus = one.sub(&g).scale(&q(1, 2));
    assert_eq!(plus.mul(&one, &c2), plus);
    assert!(minus.mul(&plus, &c2).is_zero());
    assert!(plus.is_idempotent(&c2) && minus.is_idempotent(&c2));
}

#[test]
fn epsilons() {
    let c2 = builtin("cyclic(2)", CAP).unwrap();
    let w = Subgroup::whole(&c2);
    assert_eq!(epsilon(&c2, &w, &w).unwrap(), AlgebraElement::hat(2, &w));
    let e = epsilon(&c2, &w, &Subgroup::trivial(&c2)).unwrap();
    assert_eq!((e.coeff(0), e.coeff(1)), (q(1, 2), q(-1, 2)));
    let c6 = builtin("cyclic(6)", CAP).unwrap();
    let e = epsilon(&c6, &Subgroup::whole(&c6), &Subgroup::trivial(&c6)).unwrap();
    assert_eq!(e.support_size(), 6);
    // (1 - hat C2)(1 - hat C3) expanded by hand
    let one = AlgebraElement::one(6);
    let c2h = AlgebraElement::hat(6, &sub(&c6, "a^3"));
    let c3h = AlgebraElement::hat(6, &sub(&c6, "a^2"));
    assert_eq!(e, one.sub(&c2h).mul(&one.sub(&c3h), &c6));
}

#[test]
fn conjugation() {
    let s3 = builtin("symmetric(3)", CAP).unwrap();
    let p = WordParser::new(&s3);
    let t = p.eval("(1,2)").unwrap();
    let c3 = sub(&s3, "(1,2,3)");
    let e = epsilon(&s3, &c3, &Subgroup::trivial(&s3)).unwrap();
    assert_eq!(e.conj(&s3, s3.identity()), e);
    assert_eq!(e.conj(&s3, t), e);
    let h = sub(&s3, "(1,2)");
    let r = p.eval("(1,2,3)").unwrap();
    assert_eq!(AlgebraElement::hat(6, &h).conj(&s3, r), AlgebraElement::hat(6, &s3.conjugate_subgroup(&h, r)));
}

#[test]
fn centralizers() {
    let s3 = builtin("symmetric(3)", CAP).unwrap();
    let w = Subgroup::whole(&s3);
    let triv = Subgroup::trivial(&s3);
    let central = AlgebraElement::hat(6, &w);
    assert_eq!(centralizer_of_element_in(&s3, &w, &central), w);
    let h = sub(&s3, "(1,2)");
    let e = epsilon(&s3, &h, &triv).unwrap();
    assert_eq!(centralizer_of_element_in(&s3, &w, &e), h);
}

#[test]
fn conjugate_sums() {
    let s3 = builtin("symmetric(3)", CAP).unwrap();
    let w = Subgroup::whole(&s3);
    let triv = Subgroup::trivial(&s3);
    let c3 = sub(&s3, "(1,2,3)");
    let one = AlgebraElement::one(6);
    assert_eq!(e_sum(&s3, &w, &c3, &triv).unwrap(), one.sub(&AlgebraElement::hat(6, &c3)));
    let h = sub(&s3, "(1,2)");
    let e = epsilon(&s3, &h, &triv).unwrap();
    assert_eq!(distinct_conjugates(&s3, &w, &e).len(), 3);
    let s = e_sum(&s3, &w, &h, &triv).unwrap();
    assert!(s.is_central_in(&s3, &w));
    let mut manual = AlgebraElement::zero(6);
    for t in ["(1,2)", "(1,3)", "(2,3)"] {
        manual = manual.add(&epsilon(&s3, &sub(&s3, t), &triv).unwrap());
    }
    assert_eq!(s, manual);
    // central epsilon: a single conjugate
    let c6 = builtin("cyclic(6)", CAP).unwrap();
    let cw = Subgroup::whole(&c6);
    let ct = Subgroup::trivial(&c6);
    assert_eq!(e_sum(&c6, &cw, &cw, &ct).unwrap(), epsilon(&c6, &cw, &ct).unwrap());
}

#[test]
fn idempotency_scalars() {
    let s3 = builtin("symmetric(3)", CAP).unwrap();
    let w = Subgroup::whole(&s3);
    let triv = Subgroup::trivial(&s3);
    let e = e_sum(&s3, &w, &sub(&s3, "(1,2,3)"), &triv).unwrap();
    assert!(idempotency_scalar(&s3, &e).unwrap().is_one());
    let ex1 = builtin("paper-ex1", CAP).unwrap();
    let h = sub(&ex1, "x5,x6,x3*x4^2");
    let k = sub(&ex1, "x5^3");
    let e = e_sum(&ex1, &Subgroup::whole(&ex1), &h, &k).unwrap();
    assert_eq!(idempotency_scalar(&ex1, &e).unwrap(), q(2, 1));
    let r = WordParser::new(&s3).eval("(1,2,3)").unwrap();
    let x = AlgebraElement::basis(6, r).add(&AlgebraElement::one(6));
    assert!(idempotency_scalar(&s3, &x).is_err());
    let t = WordParser::new(&s3).eval("(1,2)").unwrap();
    let y = AlgebraElement::basis(6, t).add(&AlgebraElement::one(6));
    assert_eq!(idempotency_scalar(&s3, &y).unwrap(), q(2, 1));
}

#[test]
fn ranks() {
    let s3 = builtin("symmetric(3)", CAP).unwrap();
    let w = Subgroup::whole(&s3);
    let one = AlgebraElement::one(6);
    assert_eq!(ideal_rank(&s3, &one).unwrap(), 6);
    assert_eq!(ideal_rank(&s3, &AlgebraElement::hat(6, &w)).unwrap(), 1);
    let e = one.sub(&AlgebraElement::hat(6, &sub(&s3, "(1,2,3)")));
    assert_eq!(ideal_rank(&s3, &e).unwrap(), 4);
    for x in [&one, &AlgebraElement::hat(6, &w), &e] {
        assert_eq!(ideal_rank_exact(&s3, x), ideal_rank(&s3, x).unwrap());
    }
    // a non-idempotent element still has an exact rank
    let t = AlgebraElement::basis(6, WordParser::new(&s3).eval("(1,2)").unwrap());
    assert_eq!(ideal_rank_exact(&s3, &one.add(&t)), 3);
}

#[test]
fn canonical_text_is_sorted() {
    let c2 = builtin("cyclic(2)", CAP).unwrap();
    let e = epsilon(&c2, &Subgroup::whole(&c2), &Subgroup::trivial(&c2)).unwrap();
    let text = e.canonical_text(&c2);
    assert_eq!(text[0].1, "1/2");
    assert_eq!(text[1].1, "-1/2");
    assert_eq!(rational_text(&q(4, 2)), "2/1");
}
