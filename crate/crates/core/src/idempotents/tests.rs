use super::*;
use crate::io::{builtin, subgroup_from_words};

const CAP: usize = 5000;

fn sub(g: &GroupTable, w: &str) -> Subgroup {
    subgroup_from_words(g, w).unwrap()
}

fn half() -> Rational {
    ratio(1, 2)
}

#[test]
fn s3_bruteforce_criterion() {
    let g = builtin("symmetric(3)", CAP).unwrap();
    let c3 = sub(&g, "(1,2,3)");
    let c2 = sub(&g, "(1,2)");
    let one = Subgroup::trivial(&g);
    assert!(is_shoda_bruteforce(&g, &c3, &one));
    assert!(!is_shoda_bruteforce(&g, &c2, &one));
    assert!(is_shoda_bruteforce(&g, &Subgroup::whole(&g), &c3));
    assert!(!is_shoda_bruteforce(&g, &Subgroup::whole(&g), &one));
}

#[test]
fn s3_pcis() {
    let g = builtin("symmetric(3)", CAP).unwrap();
    let whole = Subgroup::whole(&g);
    let c3 = sub(&g, "(1,2,3)");
    let one = Subgroup::trivial(&g);
    let n = g.order();
    let p = pci(&g, &c3, &one, &Rational::one()).unwrap();
    assert_eq!(p, AlgebraElement::one(n).sub(&AlgebraElement::hat(n, &c3)));
    assert_eq!(pci(&g, &whole, &whole, &Rational::one()).unwrap(), AlgebraElement::hat(n, &whole));
    assert!(is_strong_shoda(&g, &whole, &c3).unwrap());
    assert!(is_strong_shoda(&g, &c3, &one).unwrap());
    // alpha = 2 breaks idempotency
    assert!(matches!(pci(&g, &c3, &one, &ratio(2, 1)), Err(Error::IdempotencyFailure(_))));
}

#[test]
fn prime_cyclic_completeness() {
    let g = builtin("cyclic(5)", CAP).unwrap();
    let (_, recs) = pipeline(&g, CAP).unwrap();
    let rep = verify_complete(&g, &recs, true).unwrap();
    assert_eq!(rep.distinct_pcis, 2);
    assert!(rep.sum_is_one && rep.pairwise_orthogonal && rep.passes());
    assert_eq!(rep.rank_sum, Some(5));
}

#[test]
fn ex2_records() {
    let g = builtin("paper-ex2", CAP).unwrap();
    let (_, recs) = pipeline(&g, CAP).unwrap();
    assert_eq!(recs.len(), 8);
    let rep = verify_complete(&g, &recs, true).unwrap();
    assert_eq!(rep.distinct_pcis, 8);
    assert!(rep.passes() && rep.all_good && rep.distinct_across_trees);
    assert_eq!(rep.rank_sum, Some(54));
    for r in &recs {
        assert!(alpha_matches_scalar(&g, r).unwrap());
        if r.path.height() <= 2 {
            assert!(r.strong && r.alpha.is_one());
        }
        if r.cor52 {
            assert!(r.strong);
        }
    }
    // the pairs named for the trivial kernel give the same idempotents as ours
    let h = sub(&g, "a,c,d");
    let mut named: Vec<AlgebraElement> =
        ["c", "a,c"].iter().map(|k| pci(&g, &h, &sub(&g, k), &Rational::one()).unwrap()).collect();
    let trivial = Subgroup::trivial(&g);
    let mut ours: Vec<AlgebraElement> = recs.iter().filter(|r| r.n == trivial).map(|r| r.pci.clone()).collect();
    named.sort_by(canonical_cmp);
    ours.sort_by(canonical_cmp);
    assert_eq!(named, ours);
}

#[test]
fn ex1_alphas() {
    let g = builtin("paper-ex1", CAP).unwrap();
    let (_, recs) = pipeline(&g, CAP).unwrap();
    assert_eq!(recs.len(), 9);
    let g2 = sub(&g, "x5,x6,x3*x4^2");
    let halves: Vec<&ShodaRecord> = recs.iter().filter(|r| r.alpha == half()).collect();
    assert_eq!(halves.len(), 2);
    assert_eq!(recs.iter().filter(|r| r.alpha.is_one()).count(), 7);
    for r in &halves {
        assert!(!r.strong);
        assert!(!r.cor52);
        assert_eq!(r.h.order(), g2.order());
    }
    for r in &recs {
        assert!(r.good);
        assert!(alpha_matches_scalar(&g, r).unwrap());
        assert_eq!(alpha_via_normalizers(&g, &r.path).unwrap(), r.alpha);
        assert_eq!(alpha_is_one_criterion(&g, &r.path).unwrap(), r.alpha.is_one());
        if r.cor52 {
            assert!(r.strong);
        }
    }
    // the pairs named for alpha = 1/2
    for k in ["x3*x4^2*x6^3,x5^3", "x5^3"] {
        let e = e_sum(&g, &Subgroup::whole(&g), &g2, &sub(&g, k)).unwrap();
        assert_eq!(idempotency_scalar(&g, &e).unwrap(), ratio(2, 1));
        let p = e.scale(&half());
        assert!(recs.iter().any(|r| r.pci == p));
    }
    let rep = verify_complete(&g, &recs, false).unwrap();
    assert_eq!(rep.distinct_pcis, 9);
    assert!(rep.passes() && rep.sum_is_one && rep.pairwise_orthogonal);
}

#[test]
fn forest_matches_bruteforce() {
    for name in ["symmetric(3)", "dihedral(4)", "quaternion8", "cyclic(6)", "paper-ex2"] {
        let g = builtin(name, CAP).unwrap();
        let (_, recs) = pipeline(&g, CAP).unwrap();
        let mut ours: Vec<AlgebraElement> = distinct_pcis(&recs).into_iter().cloned().collect();
        ours.sort_by(canonical_cmp);
        assert_eq!(ours, bruteforce_pcis(&g, CAP).unwrap(), "{name}");
        for r in &recs {
            assert!(is_shoda_bruteforce(&g, &r.h, &r.k), "{name}");
        }
    }
}
