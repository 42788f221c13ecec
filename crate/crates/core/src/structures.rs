//! Generalized almost para-contact structures `(F, π, σ, Z, ξ)`, generalized
//! almost paracomplex structures, the adapted lift to `M × ℝ` and both
//! tensorial normality criteria.

use num_traits::{One, Zero};

use crate::calculus::{
    courant, d_function, flat, gen_nijenhuis, gen_nijenhuis_squared, interior_pair_d, koszul,
    lie_covector, lie_endomorphism, lie_form, lie_multivector, neutral_metric, nijenhuis_endo,
    pairing, sharp,
};
use crate::error::{Error, Result};
use crate::lie::{central_extension, chevalley_d, LieAlgebra};
use crate::linalg::kernel;
use crate::render::{Names, Render};
use crate::report::{compare, CheckReport, Condition, Mismatch};
use crate::scalar::Rational;
use crate::tensor::{
    Covector, Endomorphism, Form, GeneralizedEndomorphism, GeneralizedSection, Multivector, Vector,
};

/// Tuple `(F, π, σ, Z, ξ)` on a Lie algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneralizedParaContact {
    pub name: String,
    pub algebra: LieAlgebra,
    pub f: Endomorphism,
    pub pi: Multivector,
    pub sigma: Form,
    pub z: Vector,
    pub xi: Covector,
}

impl GeneralizedParaContact {
    pub fn new(
        name: impl Into<String>,
        algebra: LieAlgebra,
        f: Endomorphism,
        pi: Multivector,
        sigma: Form,
        z: Vector,
        xi: Covector,
    ) -> Result<Self> {
        let n = algebra.dim();
        f.check_dim(n)?;
        pi.check_dim(n)?;
        sigma.check_dim(n)?;
        Error::check_dim(n, z.dim())?;
        Error::check_dim(n, xi.dim())?;
        assert_eq!(
            (pi.degree(), sigma.degree()),
            (2, 2),
            "π and σ have degree 2"
        );
        Ok(GeneralizedParaContact {
            name: name.into(),
            algebra,
            f,
            pi,
            sigma,
            z,
            xi,
        })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn names(&self) -> &Names {
        self.algebra.names()
    }

    pub fn z_section(&self) -> GeneralizedSection {
        GeneralizedSection::from_vector(self.z.clone())
    }

    pub fn xi_section(&self) -> GeneralizedSection {
        GeneralizedSection::from_form(self.xi.clone())
    }

    pub fn p_sharp(&self, a: &Covector) -> Vector {
        sharp(&self.pi, a).expect("dimensions checked at construction")
    }

    pub fn sigma_flat(&self, x: &Vector) -> Covector {
        flat(&self.sigma, x).expect("dimensions checked at construction")
    }

    /// `dξ(X, Y)`.
    pub fn dxi(&self, x: &Vector, y: &Vector) -> Rational {
        let d =
            chevalley_d(&self.algebra, &Form::from_covector(&self.xi)).expect("dimensions checked");
        d.eval(&[x, y])
    }

    /// Basis of `ker ξ ⊕ ker Z = {X + α : ξ(X) = 0, α(Z) = 0}`, row-reduced.
    pub fn kernel_basis(&self) -> Vec<GeneralizedSection> {
        let n = self.dim();
        let mut eq_xi = self.xi.0.clone();
        eq_xi.extend(std::iter::repeat(Rational::zero()).take(n));
        let mut eq_z = vec![Rational::zero(); n];
        eq_z.extend(self.z.0.iter().cloned());
        let k = kernel(2 * n, &[eq_xi, eq_z]);
        let rs = crate::linalg::RowSpace::new(2 * n, &k);
        rs.basis()
            .iter()
            .map(|c| GeneralizedSection::from_coords(c))
            .collect()
    }
}

/// Generalized almost paracomplex structure given by the blocks `(a, π, θ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneralizedParacomplex {
    pub name: String,
    pub algebra: LieAlgebra,
    pub a: Endomorphism,
    pub pi: Multivector,
    pub theta: Form,
}

impl GeneralizedParacomplex {
    pub fn new(
        name: impl Into<String>,
        algebra: LieAlgebra,
        a: Endomorphism,
        pi: Multivector,
        theta: Form,
    ) -> Result<Self> {
        let n = algebra.dim();
        a.check_dim(n)?;
        pi.check_dim(n)?;
        theta.check_dim(n)?;
        Ok(GeneralizedParacomplex {
            name: name.into(),
            algebra,
            a,
            pi,
            theta,
        })
    }

    /// `(X, α) ↦ (aX + π♯α, θ♭X − a*α)`.
    pub fn matrix(&self) -> GeneralizedEndomorphism {
        GeneralizedEndomorphism::from_blocks(&self.a, &self.pi, &self.theta)
    }
}

/// The block endomorphism `𝔉(X, α) = (FX + π♯α, σ♭X − F*α)`.
pub fn assemble_f(s: &GeneralizedParaContact) -> GeneralizedEndomorphism {
    GeneralizedEndomorphism::from_blocks(&s.f, &s.pi, &s.sigma)
}

/// `ℨ(X, α) = (ξ(X)Z, α(Z)ξ)`.
pub fn assemble_z(s: &GeneralizedParaContact) -> GeneralizedEndomorphism {
    GeneralizedEndomorphism::symmetric_outer(&s.z, &s.xi)
}

pub fn generalized_frame(n: usize) -> Vec<GeneralizedSection> {
    (0..2 * n)
        .map(|k| GeneralizedSection::frame(n, k))
        .collect()
}

fn frame_vectors(n: usize) -> Vec<Vector> {
    (0..n).map(|i| Vector::basis(n, i)).collect()
}

fn frame_covectors(n: usize) -> Vec<Covector> {
    (0..n).map(|i| Covector::basis(n, i)).collect()
}

fn zero_check<T: Render>(value: &T, is_zero: bool, names: &Names) -> Option<Mismatch> {
    (!is_zero).then(|| Mismatch {
        lhs: value.render(names),
        rhs: "0".into(),
    })
}

/// Structure axioms: skewness, `ξ(Z) = 1`, `𝔉Z = 𝔉ξ = 0` and `𝔉² = I − Z⊙ξ`.
pub fn check_def1(s: &GeneralizedParaContact) -> CheckReport {
    let n = s.dim();
    let names = s.names();
    let ff = assemble_f(s);
    let zz = assemble_z(s);
    let frame = generalized_frame(n);
    let probes = names.generalized_all();
    let (zs, xs) = (s.z_section(), s.xi_section());
    let conditions = vec![
        Condition::new("3.1.skew", probes.clone(), 2, |ix| {
            let (u, v) = (&frame[ix[0]], &frame[ix[1]]);
            let val = pairing(&ff.apply(u), v) + pairing(u, &ff.apply(v));
            compare(&val, &Rational::zero(), names)
        }),
        Condition::single("3.1.unit", || {
            compare(&s.xi.eval(&s.z), &Rational::one(), names)
        }),
        Condition::new("3.2.Z", vec![zs.render(names)], 1, |_| {
            let img = ff.apply(&zs);
            zero_check(&img, img.is_zero(), names)
        }),
        Condition::new("3.2.xi", vec![xs.render(names)], 1, |_| {
            let img = ff.apply(&xs);
            zero_check(&img, img.is_zero(), names)
        }),
        Condition::new("3.3", probes, 1, |ix| {
            let u = &frame[ix[0]];
            compare(&ff.apply(&ff.apply(u)), &(u - &zz.apply(u)), names)
        }),
    ];
    CheckReport::from_conditions("def1", &conditions)
}

fn require_def1(s: &GeneralizedParaContact) -> Result<()> {
    let r = check_def1(s);
    if r.passed() {
        Ok(())
    } else {
        Err(Error::Def1Violation {
            failures: r.failing_labels(),
        })
    }
}

/// Lift to `M × ℝ`: `a = F`, `π = P − Z∧∂t`, `θ = σ + ξ∧dt`.
///
/// This sign choice gives `𝒥(0, dt) = (Z, 0)`, `𝒥(∂t, 0) = (0, −ξ)` and `𝒥² = I`.
pub fn adapted_lift(s: &GeneralizedParaContact) -> Result<GeneralizedParacomplex> {
    require_def1(s)?;
    let ext = central_extension(&s.algebra);
    let n = s.dim();
    let m = n + 1;
    let z = s.z.pad(1);
    let xi = s.xi.pad(1);
    let dt_vec = Vector::<Rational>::basis(m, n);
    let dt = Covector::<Rational>::basis(m, n);
    let pi = &s.pi.pad(1) - &Multivector::bivector(&z, &dt_vec);
    let theta = &s.sigma.pad(1) + &Form::wedge_of(m, &[&xi.0, &dt.0]);
    GeneralizedParacomplex::new(
        format!("{}+lift", s.name),
        ext.algebra,
        s.f.pad(1),
        pi,
        theta,
    )
}

/// `𝒥² = I`, `𝒥 ≠ I`, orthogonality and vanishing of the Nijenhuis operator on all frame pairs.
pub fn check_integrability(j: &GeneralizedParacomplex) -> CheckReport {
    let alg = &j.algebra;
    let n = alg.dim();
    let names = alg.names();
    let jj = j.matrix();
    let frame = generalized_frame(n);
    let probes = names.generalized_all();
    let conditions = vec![
        Condition::new("J2", probes.clone(), 1, |ix| {
            let u = &frame[ix[0]];
            compare(&jj.apply(&jj.apply(u)), u, names)
        }),
        Condition::single("J!=I", || {
            (jj == GeneralizedEndomorphism::identity(n)).then(|| Mismatch {
                lhs: "I".into(),
                rhs: "≠ I".into(),
            })
        }),
        Condition::new("2.0", probes.clone(), 2, |ix| {
            let (u, v) = (&frame[ix[0]], &frame[ix[1]]);
            compare(
                &(pairing(&jj.apply(u), v) + pairing(u, &jj.apply(v))),
                &Rational::zero(),
                names,
            )
        }),
        Condition::new("2.2", probes, 2, |ix| {
            let val = gen_nijenhuis(alg, &jj, &frame[ix[0]], &frame[ix[1]]);
            zero_check(&val, val.is_zero(), names)
        }),
    ];
    CheckReport::from_conditions("paracomplex", &conditions)
}

/// Invariant differential of a bilinear (not necessarily alternating) form:
/// `dβ(A,B,C) = −β([A,B],C) + β([A,C],B) − β([B,C],A)`.
fn d_bilinear(
    alg: &LieAlgebra,
    beta: impl Fn(&Vector, &Vector) -> Rational,
    a: &Vector,
    b: &Vector,
    c: &Vector,
) -> Rational {
    -beta(&alg.bracket(a, b), c) + beta(&alg.bracket(a, c), b) - beta(&alg.bracket(b, c), a)
}

/// Conditions A1–A5 without the structure-axiom precondition.
pub fn thm31_report(s: &GeneralizedParaContact) -> CheckReport {
    let n = s.dim();
    let alg = &s.algebra;
    let names = s.names();
    let xs = frame_vectors(n);
    let cs = frame_covectors(n);
    let fp = names.frame.clone();
    let cp = names.coframe.clone();
    let f = &s.f;
    let kos = |a: &Covector, b: &Covector| koszul(alg, &s.pi, a, b).expect("dimensions checked");
    let dsigma = chevalley_d(alg, &s.sigma).expect("dimensions checked");
    let conditions = vec![
        Condition::new("A1", cp.clone(), 2, |ix| {
            let (a, b) = (&cs[ix[0]], &cs[ix[1]]);
            compare(
                &alg.bracket(&s.p_sharp(a), &s.p_sharp(b)),
                &s.p_sharp(&kos(a, b)),
                names,
            )
        }),
        Condition::new("A2.1", cp.clone(), 1, |ix| {
            let a = &cs[ix[0]];
            compare(&f.apply(&s.p_sharp(a)), &s.p_sharp(&f.dual(a)), names)
        }),
        Condition::new("A2.2", cp.clone(), 2, |ix| {
            let (a, b) = (&cs[ix[0]], &cs[ix[1]]);
            let lhs = f.dual(&kos(a, b));
            let rhs = &(&lie_covector(alg, &s.p_sharp(a), &f.dual(b))
                - &lie_covector(alg, &s.p_sharp(b), &f.dual(a)))
                + &d_function(alg, &s.pi.eval(&[b, &f.dual(a)]));
            compare(&lhs, &rhs, names)
        }),
        Condition::single("A3.1", || {
            let v = s.sigma_flat(&s.z);
            zero_check(&v, v.is_zero(), names)
        }),
        Condition::single("A3.2", || {
            let v = s.p_sharp(&s.xi);
            zero_check(&v, v.is_zero(), names)
        }),
        Condition::new("A3.3", fp.clone(), 1, |ix| {
            let x = &xs[ix[0]];
            let rhs = &(x - &s.p_sharp(&s.sigma_flat(x))) - &s.z.scale(&s.xi.eval(x));
            compare(&f.apply(&f.apply(x)), &rhs, names)
        }),
        Condition::new("A3.4", fp.clone(), 2, |ix| {
            let (x, y) = (&xs[ix[0]], &xs[ix[1]]);
            let rhs = &s.p_sharp(&interior_pair_d(alg, &s.sigma, x, y)) + &s.z.scale(&s.dxi(x, y));
            compare(&nijenhuis_endo(alg, f, x, y), &rhs, names)
        }),
        Condition::single("A4.1", || {
            let v = f.apply(&s.z);
            zero_check(&v, v.is_zero(), names)
        }),
        Condition::single("A4.2", || {
            let v = f.dual(&s.xi);
            zero_check(&v, v.is_zero(), names)
        }),
        Condition::new("A4.3", fp.clone(), 2, |ix| {
            let (x, y) = (&xs[ix[0]], &xs[ix[1]]);
            let val = lie_covector(alg, &f.apply(x), &s.xi).eval(y)
                - &lie_covector(alg, &f.apply(y), &s.xi).eval(x);
            compare(&val, &Rational::zero(), names)
        }),
        Condition::new("A4.4", fp.clone(), 3, |ix| {
            let (x, y, w) = (&xs[ix[0]], &xs[ix[1]], &xs[ix[2]]);
            let sigma_f = |a: &Vector, b: &Vector| s.sigma.eval(&[&f.apply(a), b]);
            let lhs = d_bilinear(alg, sigma_f, x, y, w);
            let rhs = dsigma.eval(&[&f.apply(x), y, w])
                + &dsigma.eval(&[x, &f.apply(y), w])
                + &dsigma.eval(&[x, y, &f.apply(w)]);
            compare(&lhs, &rhs, names)
        }),
        Condition::single("A5.1", || {
            let v = lie_covector(alg, &s.z, &s.xi);
            zero_check(&v, v.is_zero(), names)
        }),
        Condition::single("A5.2", || {
            let v = lie_multivector(alg, &s.z, &s.pi);
            zero_check(&v, v.is_zero(), names)
        }),
        Condition::single("A5.3", || {
            let v = lie_endomorphism(alg, &s.z, f);
            zero_check(&v, v.is_zero(), names)
        }),
        Condition::single("A5.4", || {
            let v = lie_form(alg, &s.z, &s.sigma);
            zero_check(&v, v.is_zero(), names)
        }),
        Condition::new("A5.5", cp, 1, |ix| {
            let v = lie_covector(alg, &s.p_sharp(&cs[ix[0]]), &s.xi);
            zero_check(&v, v.is_zero(), names)
        }),
    ];
    let mut r = CheckReport::from_conditions("normality31", &conditions);
    r.notes
        .push("A3.4 uses N_F = P♯(i_{X∧Y}dσ) + dξ(X,Y)Z".into());
    r
}

pub fn normality_thm31(s: &GeneralizedParaContact) -> Result<CheckReport> {
    require_def1(s)?;
    Ok(thm31_report(s))
}

/// Conditions 3.20–3.25 without the structure-axiom precondition.
pub fn thm32_report(s: &GeneralizedParaContact) -> CheckReport {
    let n = s.dim();
    let alg = &s.algebra;
    let names = s.names();
    let ff = assemble_f(s);
    let zz = assemble_z(s);
    let frame = generalized_frame(n);
    let probes = names.generalized_all();
    let kb = s.kernel_basis();
    let kp: Vec<String> = kb.iter().map(|u| u.render(names)).collect();
    let (zs, xs) = (s.z_section(), s.xi_section());
    let conditions = vec![
        Condition::new("3.20", probes.clone(), 1, |ix| {
            let u = &frame[ix[0]];
            compare(&ff.apply(&ff.apply(u)), &(u - &zz.apply(u)), names)
        }),
        Condition::new("3.21", probes.clone(), 2, |ix| {
            let (u, v) = (&frame[ix[0]], &frame[ix[1]]);
            let lhs = gen_nijenhuis_squared(alg, &ff, u, v);
            let rhs = -zz.apply(&courant(alg, u, v));
            compare(&lhs, &rhs, names)
        }),
        Condition::single("3.22", || {
            let u = &zs + &xs;
            compare(&pairing(&u, &u), &Rational::one(), names)
        }),
        Condition::new("3.23", kp.clone(), 1, |ix| {
            let u = &kb[ix[0]];
            let lhs = courant(alg, &zs, &ff.apply(u));
            let moved = GeneralizedSection::new(
                alg.bracket(&s.z, &u.vector),
                lie_covector(alg, &s.z, &u.form),
            );
            compare(&lhs, &ff.apply(&moved), names)
        }),
        Condition::new("3.24.skew", probes.clone(), 2, |ix| {
            let (u, v) = (&frame[ix[0]], &frame[ix[1]]);
            compare(
                &(neutral_metric(&ff.apply(u), v) + neutral_metric(u, &ff.apply(v))),
                &Rational::zero(),
                names,
            )
        }),
        Condition::new("3.24.FZ", probes, 1, |ix| {
            let v = ff.apply(&zz.apply(&frame[ix[0]]));
            zero_check(&v, v.is_zero(), names)
        }),
        Condition::new("3.25", kp, 1, |ix| {
            let u = &kb[ix[0]];
            let lhs = courant(alg, &ff.apply(u), &xs);
            let rhs = ff.apply(&GeneralizedSection::from_form(lie_covector(
                alg, &u.vector, &s.xi,
            )));
            compare(&lhs, &rhs, names)
        }),
    ];
    let mut r = CheckReport::from_conditions("normality32", &conditions);
    r.notes
        .push("3.21 evaluated as ⟦𝔉u,𝔉v⟧ − 𝔉(⟦𝔉u,v⟧ + ⟦u,𝔉v⟧) + 𝔉²⟦u,v⟧ = −ℨ⟦u,v⟧".into());
    r.notes
        .push("3.22 evaluated with the pairing ⟨,⟩ = g/2; the neutral metric g gives 2".into());
    r.notes
        .push("3.23 and 3.25 range over a basis of ker ξ ⊕ ker Z".into());
    r
}

pub fn normality_thm32(s: &GeneralizedParaContact) -> Result<CheckReport> {
    require_def1(s)?;
    Ok(thm32_report(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::BracketSpec;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn h3() -> LieAlgebra {
        let names = Names::from_frame(vec!["X1".into(), "X2".into(), "X3".into()]);
        LieAlgebra::from_brackets(
            names,
            &[BracketSpec {
                i: 0,
                j: 1,
                out: vec![(2, q(-1, 1))],
            }],
        )
        .unwrap()
    }

    fn example2(c: Rational, s: Rational) -> GeneralizedParaContact {
        let mut m = vec![vec![Rational::zero(); 3]; 3];
        m[1][1] = c.clone();
        m[2][2] = c;
        GeneralizedParaContact::new(
            "example2",
            h3(),
            Endomorphism::from_matrix(m),
            Multivector::monomial(3, &[1, 2], s.clone()),
            Form::monomial(3, &[1, 2], s),
            Vector::basis(3, 0),
            Covector::basis(3, 0),
        )
        .unwrap()
    }

    #[test]
    fn example2_block_images() {
        let s = example2(q(5, 3), q(4, 3));
        let ff = assemble_f(&s);
        let x2 = GeneralizedSection::<Rational>::frame(3, 1);
        let want = GeneralizedSection::new(
            Vector::basis(3, 1).scale(&q(5, 3)),
            Covector::basis(3, 2).scale(&q(4, 3)),
        );
        assert_eq!(ff.apply(&x2), want);
        assert!(ff
            .apply(&GeneralizedSection::<Rational>::frame(3, 0))
            .is_zero());
        let zz = assemble_z(&s);
        assert_eq!(
            zz.apply(&GeneralizedSection::<Rational>::frame(3, 3)),
            GeneralizedSection::frame(3, 3)
        );
        assert!(zz.apply(&x2).is_zero());
    }

    #[test]
    fn example2_passes_everything() {
        let s = example2(q(5, 3), q(4, 3));
        assert!(check_def1(&s).passed());
        assert!(normality_thm31(&s).unwrap().passed());
        assert!(normality_thm32(&s).unwrap().passed());
        let j = adapted_lift(&s).unwrap();
        let r = check_integrability(&j);
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn lift_time_directions() {
        let s = example2(q(5, 3), q(4, 3));
        let jj = adapted_lift(&s).unwrap().matrix();
        let dt = GeneralizedSection::<Rational>::frame(4, 7);
        let ddt = GeneralizedSection::<Rational>::frame(4, 3);
        assert_eq!(jj.apply(&dt), GeneralizedSection::frame(4, 0));
        assert_eq!(jj.apply(&ddt), -GeneralizedSection::<Rational>::frame(4, 4));
    }

    #[test]
    fn broken_sigma_caught_at_z() {
        let mut s = example2(q(5, 3), q(4, 3));
        s.sigma = Form::monomial(3, &[0, 1], q(1, 1));
        let r = check_def1(&s);
        let w = r.get("3.2.Z").unwrap().witness.clone().unwrap();
        assert_eq!(w.input, "X1");
        assert_eq!(w.lhs, "α2");
        assert!(matches!(
            normality_thm31(&s),
            Err(Error::Def1Violation { .. })
        ));
    }
}
