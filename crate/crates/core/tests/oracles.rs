//! Values computed by hand from the structure constants of 𝔥₃ and 𝔥₅.

use gpc_core::calculus::lie_covector;
use gpc_core::catalog;
use gpc_core::*;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn x(i: usize) -> Vector {
    Vector::basis(3, i)
}

fn a(i: usize) -> Covector {
    Covector::basis(3, i)
}

#[test]
fn heisenberg_differentials() {
    // dα³(X1, X2) = −α³([X1, X2]) = 1.
    let h3 = catalog::heisenberg3();
    let d3 = chevalley_d(&h3, &Form::from_covector(&a(2))).unwrap();
    assert_eq!(d3, Form::monomial(3, &[0, 1], q(1, 1)));
    for i in 0..2 {
        assert!(chevalley_d(&h3, &Form::from_covector(&a(i)))
            .unwrap()
            .is_zero());
    }
}

#[test]
fn heisenberg_courant_brackets() {
    let h3 = catalog::heisenberg3();
    let g = |k| GeneralizedSection::<Rational>::frame(3, k);
    assert_eq!(
        courant(&h3, &g(0), &g(1)),
        GeneralizedSection::from_vector(-x(2))
    );
    // (L_{X1} α³)(X2) = −α³(−X3) = 1.
    assert_eq!(
        courant(&h3, &g(0), &g(5)),
        GeneralizedSection::from_form(a(1))
    );
    assert_eq!(
        courant(&h3, &g(5), &g(0)),
        GeneralizedSection::from_form(-a(1))
    );
    assert!(courant(&h3, &g(3), &g(4)).is_zero());
}

#[test]
fn example2_e10_generators() {
    // t = 1/2 gives (c, s) = (5/3, 4/3); the E10 coefficient is ±(5/4 − 3/4 e).
    let h = hyperbolic_point(&q(1, 2)).unwrap();
    assert_eq!((h.c.clone(), h.s.clone()), (q(5, 3), q(4, 3)));
    let s = catalog::example2(catalog::heisenberg3(), &h);
    let eb = eigenbundles(&s).unwrap();
    let k = SplitComplex::new(q(5, 4), q(-3, 4));
    let complex = |v: Vector, f: Covector| GeneralizedSection::new(v, f).complexify();
    let g2 = &complex(x(1), Covector::zero(3))
        + &GeneralizedSection::from_form(a(2).complexify().scale(&k));
    let g3 = &complex(x(2), Covector::zero(3))
        + &GeneralizedSection::from_form(a(1).complexify().scale(&-k));
    let hand = SubbundleSpan::new(BundleLabel::E10, 3, vec![g2.clone(), g3.clone()]);
    assert!(hand.same_span(eb.get(BundleLabel::E10)));
    for u in [&g2, &g3] {
        for v in [&g2, &g3] {
            assert!(pairing(u, v).is_zero());
        }
    }
}

#[test]
fn drift_lie_derivative_of_eta() {
    // E = X1 + X3, η = α³: (L_E η)(X2) = −α³([X1 + X3, X2]) = 1.
    let s = catalog::drift_h3();
    assert_eq!(lie_covector(&s.algebra, &s.e, &s.eta), a(1));
    let w = check_normal(&s)
        .get("5.1.LEeta")
        .unwrap()
        .witness
        .clone()
        .unwrap();
    assert_eq!((w.input.as_str(), w.lhs.as_str()), ("X2", "1"));
}

#[test]
fn h5_counter_instance_value() {
    // dξ(ρg1, ρg2) = e⁺ · e⁺ · dα⁵(X1, X2) = e⁺.
    let s = catalog::h5_bialgebroid_counter();
    let r = bialgebroid_check(&s).unwrap();
    assert!(!r.passes("4.2.E10") && !r.passes("4.2.E01"));
    assert_eq!(SplitComplex::e_plus(), SplitComplex::new(q(1, 2), q(1, 2)));
    assert_eq!(
        r.get("4.2.E10").unwrap().witness.as_ref().unwrap().lhs,
        SplitComplex::e_plus().to_string()
    );
}
