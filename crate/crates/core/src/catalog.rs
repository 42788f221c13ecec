//! Named exact constructors: the worked examples on `𝔥₃`, classical
//! structures for the classical bridge, and negative controls.

use num_traits::{One, Zero};

use crate::algebroid::{Classification, SplitSection};
use crate::classical::AlmostParaContact;
use crate::error::{Error, Result};
use crate::lie::{BracketSpec, LieAlgebra};
use crate::render::Names;
use crate::scalar::{hyperbolic_point, HyperbolicPoint, Rational, SplitComplex};
use crate::schema::Definition;
use crate::structures::GeneralizedParaContact;
use crate::tensor::{Covector, Endomorphism, Form, GeneralizedSection, Multivector, Vector};

/// Catalog entry with its parameter slots.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EntryInfo {
    pub name: &'static str,
    pub summary: &'static str,
    pub params: &'static [&'static str],
}

pub const ENTRIES: &[EntryInfo] = &[
    EntryInfo {
        name: "example2",
        summary: "generalized structure on h3 from a hyperbolic point (t)",
        params: &["t"],
    },
    EntryInfo {
        name: "example3",
        summary: "strong family on h3 (r, t), r² ≠ 1",
        params: &["r", "t"],
    },
    EntryInfo {
        name: "abelian_classical",
        summary: "diagonal classical structure on abelian R³",
        params: &[],
    },
    EntryInfo {
        name: "para_sasakian_h3",
        summary: "normal classical structure on h3 with central E",
        params: &[],
    },
    EntryInfo {
        name: "twisted_h3",
        summary: "non-normal classical structure on h3 (negative control)",
        params: &[],
    },
    EntryInfo {
        name: "drift_h3",
        summary: "classical structure on h3 with L_E η ≠ 0 (negative control)",
        params: &[],
    },
    EntryInfo {
        name: "broken_a3",
        summary: "F = 0 on h3, violates the structure axioms (negative control)",
        params: &[],
    },
    EntryInfo {
        name: "h5_bialgebroid_counter",
        summary: "para-contact structure on h5 with dξ of type (2,0)",
        params: &[],
    },
];

/// Exact parameters; unset slots take the entry defaults `r = 1/2`, `t = 1/2`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Params {
    pub r: Option<Rational>,
    pub t: Option<Rational>,
}

impl Params {
    pub fn t(t: Rational) -> Self {
        Params {
            r: None,
            t: Some(t),
        }
    }

    pub fn rt(r: Rational, t: Rational) -> Self {
        Params {
            r: Some(r),
            t: Some(t),
        }
    }
}

/// Results an entry must reproduce.
#[derive(Clone, Debug, PartialEq)]
pub struct Expectation {
    pub def1: bool,
    /// Normality of the generalized structure; `None` when the structure axioms fail.
    pub normal: Option<bool>,
    pub class: Option<Classification>,
    /// `check_normal` on the classical structure, for classical entries.
    pub classical_normal: Option<bool>,
    /// `bialgebroid_check`, when `L` is closed.
    pub bialgebroid: Option<bool>,
}

pub fn info(name: &str) -> Result<&'static EntryInfo> {
    ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownEntry(name.to_string()))
}

pub fn expectation(name: &str) -> Result<Expectation> {
    use Classification::*;
    let e = |def1, normal, class, classical_normal, bialgebroid| Expectation {
        def1,
        normal,
        class,
        classical_normal,
        bialgebroid,
    };
    Ok(match info(name)?.name {
        "example2" => e(true, Some(true), Some(Strong), None, Some(true)),
        "example3" => e(true, Some(true), Some(Strong), None, Some(true)),
        "abelian_classical" => e(true, Some(true), Some(Strong), Some(true), Some(true)),
        "para_sasakian_h3" => e(true, Some(true), Some(Strong), Some(true), Some(true)),
        "twisted_h3" => e(true, Some(false), Some(Almost), Some(false), None),
        "drift_h3" => e(true, Some(false), Some(Almost), Some(false), None),
        "broken_a3" => e(false, None, None, None, None),
        "h5_bialgebroid_counter" => e(true, Some(false), Some(ParaContact), None, Some(false)),
        _ => unreachable!("every listed entry has an expectation"),
    })
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn frame(n: usize) -> Names {
    Names::from_frame((1..=n).map(|i| format!("X{i}")).collect())
}

/// `𝔥₃` with `[X1, X2] = −X3`.
pub fn heisenberg3() -> LieAlgebra {
    LieAlgebra::from_brackets(
        frame(3),
        &[BracketSpec {
            i: 0,
            j: 1,
            out: vec![(2, q(-1, 1))],
        }],
    )
    .expect("valid table")
}

/// `𝔥₅` with `[X1, X2] = [X3, X4] = −X5`.
pub fn heisenberg5() -> LieAlgebra {
    LieAlgebra::from_brackets(
        frame(5),
        &[
            BracketSpec {
                i: 0,
                j: 1,
                out: vec![(4, q(-1, 1))],
            },
            BracketSpec {
                i: 2,
                j: 3,
                out: vec![(4, q(-1, 1))],
            },
        ],
    )
    .expect("valid table")
}

pub fn abelian(n: usize) -> LieAlgebra {
    LieAlgebra::abelian(frame(n))
}

fn check_params(name: &str, p: &Params) -> Result<()> {
    let allowed = info(name)?.params;
    for (slot, set) in [("r", p.r.is_some()), ("t", p.t.is_some())] {
        if set && !allowed.contains(&slot) {
            return Err(Error::schema(
                format!("params.{slot}"),
                format!("{name} has no parameter {slot}"),
            ));
        }
    }
    Ok(())
}

fn default_t(p: &Params) -> Rational {
    p.t.clone().unwrap_or_else(|| q(1, 2))
}

/// `F = c(X2⊗α² + X3⊗α³)`, `σ = s α²∧α³`, `π = s X2∧X3`, `Z = X1`, `ξ = α¹`.
pub fn example2(alg: LieAlgebra, h: &HyperbolicPoint) -> GeneralizedParaContact {
    h3_family("example2", alg, &h.c, &h.s, &h.s)
}

fn h3_family(
    name: &str,
    alg: LieAlgebra,
    f: &Rational,
    sigma: &Rational,
    pi: &Rational,
) -> GeneralizedParaContact {
    let n = alg.dim();
    let mut m = vec![vec![Rational::zero(); n]; n];
    m[1][1] = f.clone();
    m[2][2] = f.clone();
    GeneralizedParaContact::new(
        name,
        alg,
        Endomorphism::from_matrix(m),
        Multivector::monomial(n, &[1, 2], pi.clone()),
        Form::monomial(n, &[1, 2], sigma.clone()),
        Vector::basis(n, 0),
        Covector::basis(n, 0),
    )
    .expect("dimensions agree")
}

/// Coefficients `(F, σ, π)` of the family: `2rs/(1−r²)`, `(−r²+2rc−1)/(1−r²)`, `(r²+2rc+1)/(1−r²)`.
pub fn example3_coefficients(
    r: &Rational,
    h: &HyperbolicPoint,
) -> Result<(Rational, Rational, Rational)> {
    let r2 = r * r;
    let inv = (Rational::one() - &r2)
        .recip()
        .ok_or_else(|| Error::SingularParameter(format!("r = {r} makes 1 − r² vanish")))?;
    let two_rc = r * &h.c + r * &h.c;
    let f = (r * &h.s + r * &h.s) * &inv;
    let sigma = (-&r2 + &two_rc - Rational::one()) * &inv;
    let pi = (&r2 + &two_rc + Rational::one()) * &inv;
    if &f * &f - &sigma * &pi != Rational::one() {
        return Err(Error::DegenerateParameter(format!(
            "F² − σπ ≠ 1 at r = {r}"
        )));
    }
    Ok((f, sigma, pi))
}

pub fn example3(r: &Rational, h: &HyperbolicPoint) -> Result<GeneralizedParaContact> {
    let (f, sigma, pi) = example3_coefficients(r, h)?;
    Ok(h3_family("example3", heisenberg3(), &f, &sigma, &pi))
}

fn classical(
    name: &str,
    alg: LieAlgebra,
    images: &[Vector],
    e: Vector,
    eta: Covector,
) -> AlmostParaContact {
    AlmostParaContact::new(name, alg, Endomorphism::from_images(images), e, eta)
        .expect("dimensions agree")
}

/// `φX1 = X1`, `φX2 = −X2`, `E = X3`, `η = α³` on abelian `ℝ³`.
pub fn abelian_classical() -> AlmostParaContact {
    let v = |i| Vector::basis(3, i);
    classical(
        "abelian_classical",
        abelian(3),
        &[v(0), -&v(1), Vector::zero(3)],
        v(2),
        Covector::basis(3, 2),
    )
}

/// `φX1 = X2`, `φX2 = X1`, `E = X3`, `η = α³` on `𝔥₃`.
pub fn para_sasakian_h3() -> AlmostParaContact {
    let v = |i| Vector::basis(3, i);
    classical(
        "para_sasakian_h3",
        heisenberg3(),
        &[v(1), v(0), Vector::zero(3)],
        v(2),
        Covector::basis(3, 2),
    )
}

/// `φX2 = X3`, `φX3 = X2`, `E = X1`, `η = α¹` on `𝔥₃`.
pub fn twisted_h3() -> AlmostParaContact {
    let v = |i| Vector::basis(3, i);
    classical(
        "twisted_h3",
        heisenberg3(),
        &[Vector::zero(3), v(2), v(1)],
        v(0),
        Covector::basis(3, 0),
    )
}

/// `φX1 = X1`, `φX2 = −X2`, `φX3 = −X1`, `E = X1 + X3`, `η = α³` on `𝔥₃`.
pub fn drift_h3() -> AlmostParaContact {
    let v = |i| Vector::basis(3, i);
    classical(
        "drift_h3",
        heisenberg3(),
        &[v(0), -&v(1), -&v(0)],
        &v(0) + &v(2),
        Covector::basis(3, 2),
    )
}

/// `F = 0`, `π = 0`, `σ = α²∧α³`, `Z = X1`, `ξ = α¹` on `𝔥₃`.
pub fn broken_a3() -> GeneralizedParaContact {
    GeneralizedParaContact::new(
        "broken_a3",
        heisenberg3(),
        Endomorphism::zero(3),
        Multivector::zero(3, 2),
        Form::monomial(3, &[1, 2], Rational::one()),
        Vector::basis(3, 0),
        Covector::basis(3, 0),
    )
    .expect("dimensions agree")
}

/// `F = I − Z⊗ξ`, `π = σ = 0`, `Z = X5`, `ξ = α⁵` on `𝔥₅`.
pub fn h5_bialgebroid_counter() -> GeneralizedParaContact {
    let z = Vector::basis(5, 4);
    let xi = Covector::basis(5, 4);
    GeneralizedParaContact::new(
        "h5_bialgebroid_counter",
        heisenberg5(),
        &Endomorphism::identity(5) - &Endomorphism::outer(&z, &xi),
        Multivector::zero(5, 2),
        Form::zero(5, 2),
        z,
        xi,
    )
    .expect("dimensions agree")
}

fn generalized_def(s: GeneralizedParaContact) -> Definition {
    let mut d = Definition::new(Some(s.name.clone()), s.algebra.clone());
    d.structure = Some(s);
    d
}

fn classical_def(a: AlmostParaContact) -> Definition {
    let mut d = Definition::new(Some(a.name.clone()), a.algebra.clone());
    d.classical = Some(a);
    d
}

pub fn build(name: &str, p: &Params) -> Result<Definition> {
    check_params(name, p)?;
    Ok(match name {
        "example2" => generalized_def(example2(heisenberg3(), &hyperbolic_point(&default_t(p))?)),
        "example3" => {
            let r = p.r.clone().unwrap_or_else(|| q(1, 2));
            generalized_def(example3(&r, &hyperbolic_point(&default_t(p))?)?)
        }
        "abelian_classical" => classical_def(abelian_classical()),
        "para_sasakian_h3" => classical_def(para_sasakian_h3()),
        "twisted_h3" => classical_def(twisted_h3()),
        "drift_h3" => classical_def(drift_h3()),
        "broken_a3" => generalized_def(broken_a3()),
        "h5_bialgebroid_counter" => generalized_def(h5_bialgebroid_counter()),
        _ => unreachable!("check_params rejects unknown names"),
    })
}

/// Closed-form generators of `L_t` and `L*_t` for the strong family and the
/// nonzero bracket `⟦X1, g2⟧`, written with `(c, s)` the hyperbolic point.
#[derive(Clone, Debug, PartialEq)]
pub struct Example3Trivialization {
    /// `X1`, `g2`, `g3`.
    pub l: Vec<SplitSection>,
    /// `α¹`, `h2`, `h3`.
    pub lstar: Vec<SplitSection>,
    /// `⟦X1, g2⟧ = (r² + rc − e rs)X3 − (rs + e(r² − rc))α²`.
    pub bracket: SplitSection,
}

pub fn example3_trivialization(r: &Rational, h: &HyperbolicPoint) -> Example3Trivialization {
    let sc = |a: Rational, b: Rational| SplitComplex::new(a, b);
    let r2 = r * r;
    let rc = r * &h.c;
    let rs = r * &h.s;
    let term = |vi: Option<(usize, SplitComplex)>, fi: Option<(usize, SplitComplex)>| {
        let mut u = GeneralizedSection::<SplitComplex>::zero(3);
        if let Some((i, c)) = vi {
            u.vector.0[i] = c;
        }
        if let Some((i, c)) = fi {
            u.form.0[i] = c;
        }
        u
    };
    let g2 = term(
        Some((1, sc(-(&r2 + &rc), rs.clone()))),
        Some((2, sc(-rs.clone(), -&r2 + &rc))),
    );
    let g3 = term(
        Some((2, sc(-(&r2 + &rc), rs.clone()))),
        Some((1, sc(rs.clone(), &r2 - &rc))),
    );
    let h2 = term(
        Some((2, sc(-rs.clone(), -(&r2 + &rc)))),
        Some((1, sc(-&r2 + &rc, rs.clone()))),
    );
    let h3 = term(
        Some((1, sc(rs.clone(), &r2 + &rc))),
        Some((2, sc(-&r2 + &rc, rs.clone()))),
    );
    let bracket = term(
        Some((2, sc(&r2 + &rc, -rs.clone()))),
        Some((1, sc(-rs.clone(), -(&r2 - &rc)))),
    );
    let x1 = GeneralizedSection::from_vector(Vector::basis(3, 0));
    let a1 = GeneralizedSection::from_form(Covector::basis(3, 0));
    Example3Trivialization {
        l: vec![x1, g2, g3],
        lstar: vec![a1, h2, h3],
        bracket,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singular_and_unknown() {
        let err = build("example3", &Params::rt(q(1, 1), q(1, 2))).unwrap_err();
        assert!(matches!(err, Error::SingularParameter(_)));
        assert!(matches!(
            build("nope", &Params::default()),
            Err(Error::UnknownEntry(_))
        ));
        assert!(matches!(
            build("broken_a3", &Params::t(q(1, 2))),
            Err(Error::Schema { .. })
        ));
    }

    #[test]
    fn example2_at_half() {
        let d = build("example2", &Params::t(q(1, 2))).unwrap();
        let s = d.structure.unwrap();
        assert_eq!(s.f.entry(1, 1), &q(5, 3));
        assert_eq!(s.sigma.component(&[1, 2]), q(4, 3));
        assert_eq!(s.pi.component(&[1, 2]), q(4, 3));
    }

    #[test]
    fn every_entry_builds() {
        for e in ENTRIES {
            build(e.name, &Params::default()).unwrap();
            expectation(e.name).unwrap();
        }
    }
}
