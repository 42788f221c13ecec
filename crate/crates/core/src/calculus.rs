//! Calculus on invariant tensors: musical maps, pairing, Lie derivatives and
//! the Courant, Dorfman and Koszul brackets with their Nijenhuis operators.
//!
//! Invariant functions are constant, so `d f = 0` and `X(f) = 0`. These terms
//! are still formed explicitly so every bracket formula stays complete.

use crate::error::{Error, Result};
use crate::lie::{chevalley_d, LieAlgebra};
use crate::report::{compare, CheckReport, Condition};
use crate::scalar::{Rational, Scalar};
use crate::tensor::{
    Covector, Endomorphism, Form, GeneralizedEndomorphism, GeneralizedSection, Multivector, Tensor,
    Vector,
};

/// `π♯α`, defined by `β(π♯α) = π(α, β)`.
pub fn sharp<S: Scalar>(pi: &Multivector<S>, a: &Covector<S>) -> Result<Vector<S>> {
    Error::check_dim(pi.dim(), a.dim())?;
    assert_eq!(pi.degree(), 2, "sharp needs a bivector");
    Ok(pi.interior(a).to_vector())
}

/// `σ♭X`, defined by `(σ♭X)(Y) = σ(X, Y)`.
pub fn flat<S: Scalar>(sigma: &Form<S>, x: &Vector<S>) -> Result<Covector<S>> {
    Error::check_dim(sigma.dim(), x.dim())?;
    assert_eq!(sigma.degree(), 2, "flat needs a 2-form");
    Ok(sigma.interior(x).to_covector())
}

/// `⟨X+α, Y+β⟩ = ½(β(X) + α(Y))`.
pub fn pairing<S: Scalar>(u: &GeneralizedSection<S>, v: &GeneralizedSection<S>) -> S {
    (v.form.eval(&u.vector) + &u.form.eval(&v.vector)).scale(&Rational::half())
}

/// Neutral metric `g(X+α, Y+β) = α(Y) + β(X)`, twice the pairing.
pub fn neutral_metric<S: Scalar>(u: &GeneralizedSection<S>, v: &GeneralizedSection<S>) -> S {
    v.form.eval(&u.vector) + &u.form.eval(&v.vector)
}

/// Differential of an invariant function; invariant functions are constant.
pub fn d_function<S: Scalar>(alg: &LieAlgebra, _f: &S) -> Covector<S> {
    Covector::zero(alg.dim())
}

/// `X(f) = df(X)` for an invariant function `f`.
pub fn apply_to_function<S: Scalar>(alg: &LieAlgebra, x: &Vector<S>, f: &S) -> S {
    d_function(alg, f).eval(x)
}

/// `(L_X α)(Y) = X(α(Y)) − α([X,Y])`.
pub fn lie_covector<S: Scalar>(alg: &LieAlgebra, x: &Vector<S>, a: &Covector<S>) -> Covector<S> {
    let n = alg.dim();
    Covector(
        (0..n)
            .map(|k| {
                let ek = Vector::basis(n, k);
                apply_to_function(alg, x, &a.eval(&ek)) - &a.eval(&alg.bracket(x, &ek))
            })
            .collect(),
    )
}

/// `(L_X ω)(Y_1,…,Y_k) = −Σ_a ω(…, [X,Y_a], …)` on invariant forms.
pub fn lie_form<S: Scalar>(alg: &LieAlgebra, x: &Vector<S>, w: &Form<S>) -> Form<S> {
    let n = alg.dim();
    let k = w.degree();
    let mut out = Form::zero(n, k);
    let frame: Vec<Vector<S>> = (0..n).map(|i| Vector::basis(n, i)).collect();
    for tuple in crate::tensor::increasing_tuples(n, k) {
        let mut acc = S::zero();
        for a in 0..k {
            let br = alg.bracket(x, &frame[tuple[a]]);
            if br.is_zero() {
                continue;
            }
            let args: Vec<&Vector<S>> = (0..k)
                .map(|b| if b == a { &br } else { &frame[tuple[b]] })
                .collect();
            acc = acc - &w.eval(&args);
        }
        out.add_term(&tuple, acc);
    }
    out
}

/// `L_X(Y_1∧…∧Y_k) = Σ_a Y_1∧…∧[X,Y_a]∧…∧Y_k`.
pub fn lie_multivector<S: Scalar>(
    alg: &LieAlgebra,
    x: &Vector<S>,
    p: &Multivector<S>,
) -> Multivector<S> {
    let n = alg.dim();
    let mut out = Multivector::zero(n, p.degree());
    let frame: Vec<Vec<S>> = (0..n).map(|i| Vector::<S>::basis(n, i).0).collect();
    for (idx, c) in p.terms() {
        for a in 0..idx.len() {
            let br = alg.bracket(x, &Vector(frame[idx[a]].clone())).0;
            if br.iter().all(|v| v.is_zero()) {
                continue;
            }
            let factors: Vec<&[S]> = idx
                .iter()
                .enumerate()
                .map(|(b, &i)| {
                    if b == a {
                        br.as_slice()
                    } else {
                        frame[i].as_slice()
                    }
                })
                .collect();
            out = &out + &Multivector::wedge_of(n, &factors).scale(c);
        }
    }
    out
}

/// `(L_X F)(Y) = [X, FY] − F[X, Y]`.
pub fn lie_endomorphism<S: Scalar>(
    alg: &LieAlgebra,
    x: &Vector<S>,
    f: &Endomorphism<S>,
) -> Endomorphism<S> {
    let n = alg.dim();
    let images: Vec<Vector<S>> = (0..n)
        .map(|j| {
            let y = Vector::basis(n, j);
            &alg.bracket(x, &f.apply(&y)) - &f.apply(&alg.bracket(x, &y))
        })
        .collect();
    Endomorphism::from_images(&images)
}

/// Lie derivative of any supported tensor along an invariant vector field.
pub fn lie_derivative<S: Scalar>(
    alg: &LieAlgebra,
    x: &Vector<S>,
    t: &Tensor<S>,
) -> Result<Tensor<S>> {
    let n = alg.dim();
    Error::check_dim(n, x.dim())?;
    Error::check_dim(n, t.dim())?;
    Ok(match t {
        Tensor::Vector(y) => Tensor::Vector(alg.bracket(x, y)),
        Tensor::Form(w) => Tensor::Form(lie_form(alg, x, w)),
        Tensor::Multivector(p) => Tensor::Multivector(lie_multivector(alg, x, p)),
        Tensor::Endomorphism(f) => Tensor::Endomorphism(lie_endomorphism(alg, x, f)),
    })
}

/// `⟦X+α, Y+β⟧ = [X,Y] + L_Xβ − L_Yα − ½d(i_Xβ − i_Yα)`.
pub fn courant<S: Scalar>(
    alg: &LieAlgebra,
    u: &GeneralizedSection<S>,
    v: &GeneralizedSection<S>,
) -> GeneralizedSection<S> {
    let vector = alg.bracket(&u.vector, &v.vector);
    let exact = v.form.eval(&u.vector) - &u.form.eval(&v.vector);
    let form = &(&lie_covector(alg, &u.vector, &v.form) - &lie_covector(alg, &v.vector, &u.form))
        - &d_function(alg, &exact).scale_r(&Rational::half());
    GeneralizedSection::new(vector, form)
}

/// `u ∘ v = ⟦u, v⟧ + d⟨u, v⟩`.
pub fn dorfman<S: Scalar>(
    alg: &LieAlgebra,
    u: &GeneralizedSection<S>,
    v: &GeneralizedSection<S>,
) -> GeneralizedSection<S> {
    let c = courant(alg, u, v);
    let d = d_function(alg, &pairing(u, v));
    GeneralizedSection::new(c.vector, &c.form + &d)
}

/// `[α, β]_π = L_{π♯α}β − L_{π♯β}α − dπ(α, β)`.
pub fn koszul<S: Scalar>(
    alg: &LieAlgebra,
    pi: &Multivector<S>,
    a: &Covector<S>,
    b: &Covector<S>,
) -> Result<Covector<S>> {
    Error::check_dim(alg.dim(), pi.dim())?;
    let pa = sharp(pi, a)?;
    let pb = sharp(pi, b)?;
    let val = pi.eval(&[a, b]);
    Ok(&(&lie_covector(alg, &pa, b) - &lie_covector(alg, &pb, a)) - &d_function(alg, &val))
}

/// `N_F(X,Y) = [FX,FY] + F²[X,Y] − F[FX,Y] − F[X,FY]`.
pub fn nijenhuis_endo<S: Scalar>(
    alg: &LieAlgebra,
    f: &Endomorphism<S>,
    x: &Vector<S>,
    y: &Vector<S>,
) -> Vector<S> {
    let (fx, fy) = (f.apply(x), f.apply(y));
    let t1 = alg.bracket(&fx, &fy);
    let t2 = f.apply(&f.apply(&alg.bracket(x, y)));
    let t3 = f.apply(&(&alg.bracket(&fx, y) + &alg.bracket(x, &fy)));
    &(&t1 + &t2) - &t3
}

/// `⟦𝒥u,𝒥v⟧ − 𝒥(⟦𝒥u,v⟧ + ⟦u,𝒥v⟧) + ⟦u,v⟧`.
pub fn gen_nijenhuis<S: Scalar>(
    alg: &LieAlgebra,
    j: &GeneralizedEndomorphism,
    u: &GeneralizedSection<S>,
    v: &GeneralizedSection<S>,
) -> GeneralizedSection<S> {
    let (ju, jv) = (j.apply(u), j.apply(v));
    let t1 = courant(alg, &ju, &jv);
    let t2 = j.apply(&(&courant(alg, &ju, v) + &courant(alg, u, &jv)));
    &(&t1 - &t2) + &courant(alg, u, v)
}

/// Same operator with `𝒥²⟦u,v⟧` in place of `⟦u,v⟧`.
pub fn gen_nijenhuis_squared<S: Scalar>(
    alg: &LieAlgebra,
    j: &GeneralizedEndomorphism,
    u: &GeneralizedSection<S>,
    v: &GeneralizedSection<S>,
) -> GeneralizedSection<S> {
    let (ju, jv) = (j.apply(u), j.apply(v));
    let t1 = courant(alg, &ju, &jv);
    let t2 = j.apply(&(&courant(alg, &ju, v) + &courant(alg, u, &jv)));
    let t3 = j.apply(&j.apply(&courant(alg, u, v)));
    &(&t1 - &t2) + &t3
}

/// `⅓(⟨⟦A,B⟧,C⟩ + ⟨⟦B,C⟧,A⟩ + ⟨⟦C,A⟧,B⟩)`.
pub fn nij_triple<S: Scalar>(
    alg: &LieAlgebra,
    a: &GeneralizedSection<S>,
    b: &GeneralizedSection<S>,
    c: &GeneralizedSection<S>,
) -> S {
    let s = pairing(&courant(alg, a, b), c)
        + &pairing(&courant(alg, b, c), a)
        + &pairing(&courant(alg, c, a), b);
    s.scale(&Rational::new(1, 3))
}

/// `ρ*: T*M → TM ⊕ T*M`, dual to the anchor under the pairing.
fn co_anchor<S: Scalar>(a: &Covector<S>) -> GeneralizedSection<S> {
    GeneralizedSection::from_form(a.scale_r(&Rational::from_integer(2)))
}

/// Courant-algebroid axioms (c1)–(c5) for the Dorfman bracket on a named sample.
pub fn courant_axioms(
    alg: &LieAlgebra,
    sample: &[(String, GeneralizedSection<Rational>)],
) -> CheckReport {
    let names = alg.names();
    let probes: Vec<String> = sample.iter().map(|(n, _)| n.clone()).collect();
    let s = |i: usize| &sample[i].1;
    let constants = [Rational::from_integer(2), Rational::new(-1, 3)];
    let conditions = vec![
        Condition::new("c1", probes.clone(), 3, move |ix| {
            let (a, b, c) = (s(ix[0]), s(ix[1]), s(ix[2]));
            let lhs = dorfman(alg, a, &dorfman(alg, b, c));
            let rhs = &dorfman(alg, &dorfman(alg, a, b), c) + &dorfman(alg, b, &dorfman(alg, a, c));
            compare(&lhs, &rhs, names)
        }),
        Condition::new("c2", probes.clone(), 2, move |ix| {
            let e = s(ix[0]) + s(ix[1]);
            let lhs = dorfman(alg, &e, &e);
            let rhs = co_anchor(&d_function(alg, &pairing(&e, &e)));
            compare(&lhs, &rhs, names)
        }),
        Condition::new("c3", probes.clone(), 3, move |ix| {
            let (e, a, b) = (s(ix[0]), s(ix[1]), s(ix[2]));
            let lhs = apply_to_function(alg, &e.vector, &pairing(a, b));
            let rhs = pairing(&dorfman(alg, e, a), b) + &pairing(a, &dorfman(alg, e, b));
            compare(&lhs, &rhs, names)
        }),
        Condition::new("c4", probes.clone(), 2, move |ix| {
            let (a, b) = (s(ix[0]), s(ix[1]));
            let lhs = dorfman(alg, a, b).vector;
            let rhs = alg.bracket(&a.vector, &b.vector);
            compare(&lhs, &rhs, names)
        }),
        Condition::new("c5", probes, 2, move |ix| {
            let (a, b) = (s(ix[0]), s(ix[1]));
            constants.iter().find_map(|f| {
                let lhs = dorfman(alg, a, &b.scale(f));
                let rhs =
                    &dorfman(alg, a, b).scale(f) + &b.scale(&apply_to_function(alg, &a.vector, f));
                compare(&lhs, &rhs, names)
            })
        }),
    ];
    CheckReport::from_conditions("courant_axioms", &conditions)
}

/// `i_{X∧Y} dω = dω(X, Y, ·)` for a 2-form `ω`.
pub fn interior_pair_d(
    alg: &LieAlgebra,
    w: &Form<Rational>,
    x: &Vector<Rational>,
    y: &Vector<Rational>,
) -> Covector<Rational> {
    let dw = chevalley_d(alg, w).expect("form lives on the algebra");
    dw.interior(x).interior(y).to_covector()
}
