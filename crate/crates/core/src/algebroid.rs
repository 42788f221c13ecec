//! Split-complex eigenbundles of a generalized almost para-contact structure,
//! isotropy, Courant closure, classification and the bialgebroid test.
//!
//! A split-complex span is stored through its light-cone components: the real
//! spans `(V⁺, V⁻)` with `g = e⁺g⁺ + e⁻g⁻`. Membership, rank and closure are
//! component-wise, which is sound despite the zero divisors `e⁺e⁻ = 0`.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::calculus::{courant, pairing};
use crate::error::{Error, Result};
use crate::lie::chevalley_d;
use crate::linalg::{kernel, RowSpace};
use crate::render::{Names, Render};
use crate::report::{CheckReport, Condition, Mismatch};
use crate::scalar::{Rational, SplitComplex};
use crate::structures::{assemble_f, check_def1, GeneralizedParaContact};
use crate::tensor::{Form, GeneralizedSection};

pub type SplitSection = GeneralizedSection<SplitComplex>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BundleLabel {
    #[serde(rename = "L_Z")]
    LZ,
    #[serde(rename = "L_ξ")]
    LXi,
    E10,
    E01,
    L,
    Lbar,
    Lstar,
    Lbarstar,
}

impl BundleLabel {
    pub const ALL: [BundleLabel; 8] = [
        BundleLabel::LZ,
        BundleLabel::LXi,
        BundleLabel::E10,
        BundleLabel::E01,
        BundleLabel::L,
        BundleLabel::Lbar,
        BundleLabel::Lstar,
        BundleLabel::Lbarstar,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BundleLabel::LZ => "L_Z",
            BundleLabel::LXi => "L_ξ",
            BundleLabel::E10 => "E10",
            BundleLabel::E01 => "E01",
            BundleLabel::L => "L",
            BundleLabel::Lbar => "Lbar",
            BundleLabel::Lstar => "Lstar",
            BundleLabel::Lbarstar => "Lbarstar",
        }
    }
}

impl fmt::Display for BundleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Split-complex span of generators together with its light-cone components.
#[derive(Clone, Debug, PartialEq)]
pub struct SubbundleSpan {
    pub label: BundleLabel,
    pub generators: Vec<SplitSection>,
    plus: RowSpace,
    minus: RowSpace,
}

impl SubbundleSpan {
    pub fn new(label: BundleLabel, n: usize, generators: Vec<SplitSection>) -> Self {
        let (p, m): (Vec<_>, Vec<_>) = generators
            .iter()
            .map(|g| {
                let (a, b) = g.lightcone();
                (a.coords(), b.coords())
            })
            .unzip();
        SubbundleSpan {
            label,
            generators,
            plus: RowSpace::new(2 * n, &p),
            minus: RowSpace::new(2 * n, &m),
        }
    }

    /// Real span of the `e⁺` components.
    pub fn plus(&self) -> &RowSpace {
        &self.plus
    }

    /// Real span of the `e⁻` components.
    pub fn minus(&self) -> &RowSpace {
        &self.minus
    }

    /// Real ranks of the light-cone components.
    pub fn rank(&self) -> (usize, usize) {
        (self.plus.rank(), self.minus.rank())
    }

    pub fn contains(&self, u: &SplitSection) -> bool {
        let (a, b) = u.lightcone();
        self.plus.contains(&a.coords()) && self.minus.contains(&b.coords())
    }

    /// `u` with both light-cone components reduced against the span; zero iff `u` lies in it.
    pub fn residual(&self, u: &SplitSection) -> SplitSection {
        let (a, b) = u.lightcone();
        let ra = GeneralizedSection::from_coords(&self.plus.residual(&a.coords()));
        let rb = GeneralizedSection::from_coords(&self.minus.residual(&b.coords()));
        GeneralizedSection::from_lightcone(&ra, &rb)
    }

    /// Equality of split-complex spans, compared component-wise.
    pub fn same_span(&self, other: &SubbundleSpan) -> bool {
        self.plus == other.plus && self.minus == other.minus
    }

    pub fn summary(&self, names: &Names) -> BundleSummary {
        let render_rows = |rs: &RowSpace| {
            rs.basis()
                .iter()
                .map(|r| GeneralizedSection::<Rational>::from_coords(r).render(names))
                .collect()
        };
        let (p, m) = self.rank();
        BundleSummary {
            label: self.label,
            rank: [p, m],
            generators: self.generators.iter().map(|g| g.render(names)).collect(),
            lightcone_plus: render_rows(&self.plus),
            lightcone_minus: render_rows(&self.minus),
        }
    }
}

/// Printable description of a bundle in split-complex and light-cone form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleSummary {
    pub label: BundleLabel,
    pub rank: [usize; 2],
    pub generators: Vec<String>,
    pub lightcone_plus: Vec<String>,
    pub lightcone_minus: Vec<String>,
}

/// The eight bundles of a structure, in [`BundleLabel::ALL`] order.
#[derive(Clone, Debug, PartialEq)]
pub struct Eigenbundles {
    pub bundles: Vec<SubbundleSpan>,
    /// `+1` eigenspace of `𝔉` on `ker ξ ⊕ ker Z`.
    pub v_plus: RowSpace,
    /// `−1` eigenspace of `𝔉` on `ker ξ ⊕ ker Z`.
    pub v_minus: RowSpace,
}

impl Eigenbundles {
    pub fn get(&self, label: BundleLabel) -> &SubbundleSpan {
        self.bundles
            .iter()
            .find(|b| b.label == label)
            .expect("all labels present")
    }
}

fn eigenspace(s: &GeneralizedParaContact, lambda: &Rational) -> RowSpace {
    let n = s.dim();
    let ff = assemble_f(s);
    let mut eqs: Vec<Vec<Rational>> = Vec::new();
    let mut eq_xi = s.xi.0.clone();
    eq_xi.extend(std::iter::repeat_n(Rational::zero(), n));
    let mut eq_z = vec![Rational::zero(); n];
    eq_z.extend(s.z.0.iter().cloned());
    eqs.push(eq_xi);
    eqs.push(eq_z);
    for (i, row) in ff.matrix().iter().enumerate() {
        let mut r = row.clone();
        r[i] = &r[i] - lambda;
        eqs.push(r);
    }
    RowSpace::new(2 * n, &kernel(2 * n, &eqs))
}

/// `𝔉² = I` on `ker ξ ⊕ ker Z` with equal-rank `±1` eigenspaces spanning it.
fn split_kernel(s: &GeneralizedParaContact) -> Result<(RowSpace, RowSpace)> {
    let ff = assemble_f(s);
    let names = s.names();
    for u in s.kernel_basis() {
        let back = ff.apply(&ff.apply(&u));
        if back != u {
            return Err(Error::DegenerateStructure(format!(
                "𝔉² ≠ I on ker ξ ⊕ ker Z: 𝔉²({}) = {}",
                u.render(names),
                back.render(names)
            )));
        }
    }
    let vp = eigenspace(s, &Rational::one());
    let vm = eigenspace(s, &-Rational::one());
    let k = s.kernel_basis().len();
    if vp.rank() != vm.rank() || vp.rank() + vm.rank() != k {
        return Err(Error::DegenerateStructure(format!(
            "eigenspace ranks ({}, {}) on a kernel of rank {k}",
            vp.rank(),
            vm.rank()
        )));
    }
    Ok((vp, vm))
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

fn real_section(v: &[Rational]) -> GeneralizedSection<Rational> {
    GeneralizedSection::from_coords(v)
}

/// `L_Z`, `L_ξ`, `E^{(1,0)} = e⁺V⁺ ⊕ e⁻V⁻`, `E^{(0,1)} = e⁺V⁻ ⊕ e⁻V⁺` and the four sums.
pub fn eigenbundles(s: &GeneralizedParaContact) -> Result<Eigenbundles> {
    let (vp, vm) = split_kernel(s)?;
    require_def1(s)?;
    let n = s.dim();
    let pair = |a: &[Rational], b: &[Rational]| {
        GeneralizedSection::from_lightcone(&real_section(a), &real_section(b))
    };
    let e10: Vec<SplitSection> = vp
        .basis()
        .iter()
        .zip(vm.basis())
        .map(|(v, w)| pair(v, w))
        .collect();
    let e01: Vec<SplitSection> = vp
        .basis()
        .iter()
        .zip(vm.basis())
        .map(|(v, w)| pair(w, v))
        .collect();
    let z = s.z_section().complexify();
    let xi = s.xi_section().complexify();
    let with = |head: &SplitSection, tail: &[SplitSection]| {
        let mut g = vec![head.clone()];
        g.extend(tail.iter().cloned());
        g
    };
    let bundles = vec![
        SubbundleSpan::new(BundleLabel::LZ, n, vec![z.clone()]),
        SubbundleSpan::new(BundleLabel::LXi, n, vec![xi.clone()]),
        SubbundleSpan::new(BundleLabel::E10, n, e10.clone()),
        SubbundleSpan::new(BundleLabel::E01, n, e01.clone()),
        SubbundleSpan::new(BundleLabel::L, n, with(&z, &e10)),
        SubbundleSpan::new(BundleLabel::Lbar, n, with(&z, &e01)),
        SubbundleSpan::new(BundleLabel::Lstar, n, with(&xi, &e01)),
        SubbundleSpan::new(BundleLabel::Lbarstar, n, with(&xi, &e10)),
    ];
    Ok(Eigenbundles {
        bundles,
        v_plus: vp,
        v_minus: vm,
    })
}

fn generator_probes(b: &SubbundleSpan, names: &Names) -> Vec<String> {
    b.generators.iter().map(|g| g.render(names)).collect()
}

/// `⟨g_i, g_j⟩ = 0` on all generator pairs.
pub fn isotropy_check(b: &SubbundleSpan, names: &Names) -> CheckReport {
    let g = &b.generators;
    let cond = Condition::new(
        format!("isotropy.{}", b.label),
        generator_probes(b, names),
        2,
        |ix| {
            let v = pairing(&g[ix[0]], &g[ix[1]]);
            (!v.is_zero()).then(|| Mismatch {
                lhs: v.to_string(),
                rhs: "0".into(),
            })
        },
    );
    CheckReport::from_conditions("isotropy", &[cond])
}

/// A generator pair with nonzero Courant bracket.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GeneratorBracket {
    pub i: usize,
    pub j: usize,
    pub input: String,
    pub value: String,
    #[serde(skip)]
    pub section: SplitSection,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Closure {
    pub report: CheckReport,
    /// Nonzero brackets `⟦g_i, g_j⟧` with `i < j`.
    pub nonzero: Vec<GeneratorBracket>,
}

impl Closure {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

/// Whether every generator bracket lies in the span, with the nonzero brackets listed.
pub fn closure_check(s: &GeneralizedParaContact, b: &SubbundleSpan) -> Closure {
    let alg = &s.algebra;
    let names = s.names();
    let g = &b.generators;
    let probes = generator_probes(b, names);
    let cond = Condition::new(format!("closure.{}", b.label), probes.clone(), 2, |ix| {
        let v = courant(alg, &g[ix[0]], &g[ix[1]]);
        let r = b.residual(&v);
        (!r.is_zero()).then(|| Mismatch {
            lhs: v.render(names),
            rhs: format!("residual {}", r.render(names)),
        })
    });
    let report = CheckReport::from_conditions("closure", &[cond]);
    let mut nonzero = Vec::new();
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            let v = courant(alg, &g[i], &g[j]);
            if !v.is_zero() {
                nonzero.push(GeneratorBracket {
                    i,
                    j,
                    input: format!("({}, {})", probes[i], probes[j]),
                    value: v.render(names),
                    section: v,
                });
            }
        }
    }
    Closure { report, nonzero }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Almost,
    ParaContact,
    Strong,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Almost => "almost",
            Classification::ParaContact => "para_contact",
            Classification::Strong => "strong",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Classification together with the two closure results it rests on.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassifyResult {
    pub class: Classification,
    pub l: Closure,
    pub lstar: Closure,
}

pub fn classify_detailed(s: &GeneralizedParaContact) -> Result<ClassifyResult> {
    let eb = eigenbundles(s)?;
    let l = closure_check(s, eb.get(BundleLabel::L));
    let lstar = closure_check(s, eb.get(BundleLabel::Lstar));
    let class = match (l.passed(), lstar.passed()) {
        (true, true) => Classification::Strong,
        (true, false) => Classification::ParaContact,
        _ => Classification::Almost,
    };
    Ok(ClassifyResult { class, l, lstar })
}

/// `strong` if `L` and `L*` are closed, `para_contact` if only `L` is, `almost` otherwise.
pub fn classify(s: &GeneralizedParaContact) -> Result<Classification> {
    Ok(classify_detailed(s)?.class)
}

/// `dξ(ρu, ρv) = 0` on generator pairs of `E^{(1,0)}` and of `E^{(0,1)}`.
pub fn bialgebroid_check(s: &GeneralizedParaContact) -> Result<CheckReport> {
    let eb = eigenbundles(s)?;
    let l = closure_check(s, eb.get(BundleLabel::L));
    if !l.passed() {
        return Err(Error::PreconditionViolation(
            "L is not closed under the Courant bracket".into(),
        ));
    }
    let names = s.names();
    let dxi = chevalley_d(&s.algebra, &Form::from_covector(&s.xi))
        .expect("dimensions checked")
        .complexify();
    let cond = |label: BundleLabel| {
        let b = eb.get(label);
        let g = &b.generators;
        let dxi = &dxi;
        Condition::new(
            format!("4.2.{label}"),
            generator_probes(b, names),
            2,
            move |ix| {
                let v = dxi.eval(&[&g[ix[0]].vector, &g[ix[1]].vector]);
                (!v.is_zero()).then(|| Mismatch {
                    lhs: v.to_string(),
                    rhs: "0".into(),
                })
            },
        )
    };
    let report = CheckReport::from_conditions(
        "bialgebroid",
        &[cond(BundleLabel::E10), cond(BundleLabel::E01)],
    );
    Ok(report)
}

/// `⟦Z, g⟧ ∈ E^{(1,0)}` for every generator `g` of `E^{(1,0)}`.
pub fn z_invariance_check(s: &GeneralizedParaContact) -> Result<CheckReport> {
    let eb = eigenbundles(s)?;
    let b = eb.get(BundleLabel::E10);
    let names = s.names();
    let z = s.z_section().complexify();
    let g = &b.generators;
    let cond = Condition::new("5.1.lemma", generator_probes(b, names), 1, |ix| {
        let v = courant(&s.algebra, &z, &g[ix[0]]);
        let r = b.residual(&v);
        (!r.is_zero()).then(|| Mismatch {
            lhs: v.render(names),
            rhs: format!("residual {}", r.render(names)),
        })
    });
    let report = CheckReport::from_conditions("z_invariance", &[cond]);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{BracketSpec, LieAlgebra};
    use crate::tensor::{Covector, Endomorphism, Multivector, Vector};

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

    fn twisted_lift() -> GeneralizedParaContact {
        let v = |i| Vector::basis(3, i);
        let phi = Endomorphism::from_images(&[Vector::zero(3), v(2), v(1)]);
        GeneralizedParaContact::new(
            "t",
            h3(),
            phi,
            Multivector::zero(3, 2),
            Form::zero(3, 2),
            v(0),
            Covector::basis(3, 0),
        )
        .unwrap()
    }

    #[test]
    fn twisted_lift_bundles() {
        let s = twisted_lift();
        let eb = eigenbundles(&s).unwrap();
        let names = s.names();
        let e10 = eb.get(BundleLabel::E10);
        assert_eq!(e10.rank(), (2, 2));
        assert_eq!(e10.generators[0].render(names), "X2 + e X3");
        for b in &eb.bundles {
            assert!(isotropy_check(b, names).passed(), "{}", b.label);
        }
        let c = closure_check(&s, eb.get(BundleLabel::L));
        let w = c.report.results[0].witness.clone().unwrap();
        assert_eq!(w.input, "(X1, X2 + e X3)");
        assert_eq!(w.lhs, "-X3");
        assert_eq!(classify(&s).unwrap(), Classification::Almost);
        assert!(matches!(
            bialgebroid_check(&s),
            Err(Error::PreconditionViolation(_))
        ));
    }

    #[test]
    fn generators_are_e_eigenvectors() {
        let s = twisted_lift();
        let ff = assemble_f(&s);
        let eb = eigenbundles(&s).unwrap();
        for g in &eb.get(BundleLabel::E10).generators {
            assert_eq!(ff.apply(g), g.scale(&SplitComplex::e()));
        }
        for g in &eb.get(BundleLabel::E01).generators {
            assert_eq!(ff.apply(g), g.scale(&-SplitComplex::e()));
        }
    }

    #[test]
    fn zero_endomorphism_is_degenerate() {
        let mut s = twisted_lift();
        s.f = Endomorphism::zero(3);
        assert!(matches!(
            eigenbundles(&s),
            Err(Error::DegenerateStructure(_))
        ));
    }
}
