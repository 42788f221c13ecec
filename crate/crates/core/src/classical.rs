//! Classical almost para-contact structures `(φ, E, η)`: axioms, normality,
//! the product structure on `M × ℝ` and the lift to a generalized structure.

use num_traits::{One, Zero};

use crate::calculus::{lie_covector, lie_endomorphism, nijenhuis_endo};
use crate::error::{Error, Result};
use crate::lie::{central_extension, chevalley_d, LieAlgebra};
use crate::linalg::{kernel, RowSpace};
use crate::render::{Names, Render};
use crate::report::{compare, CheckReport, Condition, Mismatch};
use crate::scalar::Rational;
use crate::structures::{GeneralizedParaContact, GeneralizedParacomplex};
use crate::tensor::{Covector, Endomorphism, Form, Multivector, Vector};

#[derive(Clone, Debug, PartialEq)]
pub struct AlmostParaContact {
    pub name: String,
    pub algebra: LieAlgebra,
    pub phi: Endomorphism,
    pub e: Vector,
    pub eta: Covector,
}

impl AlmostParaContact {
    pub fn new(
        name: impl Into<String>,
        algebra: LieAlgebra,
        phi: Endomorphism,
        e: Vector,
        eta: Covector,
    ) -> Result<Self> {
        let n = algebra.dim();
        phi.check_dim(n)?;
        Error::check_dim(n, e.dim())?;
        Error::check_dim(n, eta.dim())?;
        Ok(AlmostParaContact {
            name: name.into(),
            algebra,
            phi,
            e,
            eta,
        })
    }

    pub fn names(&self) -> &Names {
        self.algebra.names()
    }

    /// Dimension of the `λ`-eigenspace of `φ`.
    pub fn eigen_dim(&self, lambda: &Rational) -> usize {
        let n = self.algebra.dim();
        let rows: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            self.phi.entry(i, j) - lambda
                        } else {
                            self.phi.entry(i, j).clone()
                        }
                    })
                    .collect()
            })
            .collect();
        kernel(n, &rows).len()
    }

    pub fn rank_phi(&self) -> usize {
        RowSpace::new(self.algebra.dim(), self.phi.matrix()).rank()
    }
}

fn zero_check<T: Render>(value: &T, is_zero: bool, names: &Names) -> Option<Mismatch> {
    (!is_zero).then(|| Mismatch {
        lhs: value.render(names),
        rhs: "0".into(),
    })
}

/// `φE = 0`, `η∘φ = 0`, `η(E) = 1`, `φ² = I − η⊗E`, odd dimension, rank `2n` and equal `±1` eigenspaces.
pub fn check_apc(a: &AlmostParaContact) -> CheckReport {
    let dim = a.algebra.dim();
    let names = a.names();
    let xs: Vec<Vector> = (0..dim).map(|i| Vector::basis(dim, i)).collect();
    let half = dim / 2;
    let conditions = vec![
        Condition::single("apc.dim", || {
            dim.is_multiple_of(2).then(|| Mismatch {
                lhs: format!("dim = {dim}"),
                rhs: "odd".into(),
            })
        }),
        Condition::single("apc.phiE", || {
            let v = a.phi.apply(&a.e);
            zero_check(&v, v.is_zero(), names)
        }),
        Condition::single("apc.etaphi", || {
            let v = a.phi.dual(&a.eta);
            zero_check(&v, v.is_zero(), names)
        }),
        Condition::single("apc.etaE", || {
            compare(&a.eta.eval(&a.e), &Rational::one(), names)
        }),
        Condition::new("apc.phi2", names.frame.clone(), 1, |ix| {
            let x = &xs[ix[0]];
            compare(
                &a.phi.apply(&a.phi.apply(x)),
                &(x - &a.e.scale(&a.eta.eval(x))),
                names,
            )
        }),
        Condition::single("apc.balance", || {
            let (p, m) = (
                a.eigen_dim(&Rational::one()),
                a.eigen_dim(&-Rational::one()),
            );
            (p != half || m != half).then(|| Mismatch {
                lhs: format!("dim V+ = {p}, dim V- = {m}"),
                rhs: format!("{half}, {half}"),
            })
        }),
        Condition::single("apc.rank", || {
            let r = a.rank_phi();
            (r != 2 * half).then(|| Mismatch {
                lhs: format!("rank φ = {r}"),
                rhs: (2 * half).to_string(),
            })
        }),
    ];
    CheckReport::from_conditions("apc", &conditions)
}

fn require_apc(a: &AlmostParaContact) -> Result<()> {
    let r = check_apc(a);
    if r.passed() {
        Ok(())
    } else {
        Err(Error::ApcViolation {
            failures: r.failing_labels(),
        })
    }
}

/// Normality: `N_φ = dη ⊗ E` (differential without the ½), `L_E η = 0`, `L_E φ = 0`.
pub fn check_normal(a: &AlmostParaContact) -> CheckReport {
    let n = a.algebra.dim();
    let alg = &a.algebra;
    let names = a.names();
    let xs: Vec<Vector> = (0..n).map(|i| Vector::basis(n, i)).collect();
    let deta = chevalley_d(alg, &Form::from_covector(&a.eta)).expect("dimensions checked");
    let le_eta = lie_covector(alg, &a.e, &a.eta);
    let le_phi = lie_endomorphism(alg, &a.e, &a.phi);
    let conditions = vec![
        Condition::new("5.1.N", names.frame.clone(), 2, |ix| {
            let (x, y) = (&xs[ix[0]], &xs[ix[1]]);
            compare(
                &nijenhuis_endo(alg, &a.phi, x, y),
                &a.e.scale(&deta.eval(&[x, y])),
                names,
            )
        }),
        Condition::new("5.1.LEeta", names.frame.clone(), 1, |ix| {
            compare(&le_eta.eval(&xs[ix[0]]), &Rational::zero(), names)
        }),
        Condition::new("5.1.LEphi", names.frame.clone(), 1, |ix| {
            let v = le_phi.apply(&xs[ix[0]]);
            zero_check(&v, v.is_zero(), names)
        }),
    ];
    CheckReport::from_conditions("normal", &conditions)
}

/// `J(X, f d/dt) = (φX + fE, η(X) d/dt)`, as the generalized structure `diag(J, −J*)`.
pub fn product_j(a: &AlmostParaContact) -> Result<GeneralizedParacomplex> {
    require_apc(a)?;
    let ext = central_extension(&a.algebra);
    let n = a.algebra.dim();
    let mut images: Vec<Vector> = (0..n)
        .map(|j| {
            let mut v = a.phi.column(j).pad(1);
            v.0[n] = a.eta.0[j].clone();
            v
        })
        .collect();
    images.push(a.e.pad(1));
    let m = n + 1;
    GeneralizedParacomplex::new(
        format!("{}+product", a.name),
        ext.algebra,
        Endomorphism::from_images(&images),
        Multivector::zero(m, 2),
        Form::zero(m, 2),
    )
}

/// `F = φ`, `π = 0`, `σ = 0`, `Z = E`, `ξ = η`.
pub fn lift_to_generalized(a: &AlmostParaContact) -> Result<GeneralizedParaContact> {
    require_apc(a)?;
    let n = a.algebra.dim();
    GeneralizedParaContact::new(
        a.name.clone(),
        a.algebra.clone(),
        a.phi.clone(),
        Multivector::zero(n, 2),
        Form::zero(n, 2),
        a.e.clone(),
        a.eta.clone(),
    )
}
