//! Finite-dimensional real Lie algebras given by structure constants, their
//! Chevalley–Eilenberg differential and the central extension modeling `M × ℝ`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::render::{Names, Render};
use crate::report::{CheckReport, Condition, Mismatch};
use crate::scalar::{Rational, Scalar};
use crate::tensor::{increasing_tuples, Form, Vector};

/// Lie algebra with `[X_i, X_j] = Σ_k c[i][j][k] X_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra {
    names: Names,
    c: Vec<Vec<Vec<Rational>>>,
}

/// One declared bracket `[X_i, X_j] = Σ c X_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct BracketSpec {
    pub i: usize,
    pub j: usize,
    pub out: Vec<(usize, Rational)>,
}

impl LieAlgebra {
    pub fn abelian(names: Names) -> Self {
        let n = names.dim();
        LieAlgebra {
            names,
            c: vec![vec![vec![Rational::zero(); n]; n]; n],
        }
    }

    /// Declared pairs are taken as given; an undeclared mirror `(j, i)` is filled by antisymmetry.
    pub fn from_brackets(names: Names, brackets: &[BracketSpec]) -> Result<Self> {
        let n = names.dim();
        let mut alg = Self::abelian(names);
        let mut declared = vec![vec![false; n]; n];
        for (pos, b) in brackets.iter().enumerate() {
            if b.i >= n || b.j >= n {
                return Err(Error::schema(
                    format!("brackets[{pos}]"),
                    format!("index out of range for dim {n}"),
                ));
            }
            if declared[b.i][b.j] {
                return Err(Error::schema(
                    format!("brackets[{pos}]"),
                    format!("pair ({}, {}) declared twice", b.i, b.j),
                ));
            }
            declared[b.i][b.j] = true;
            for (k, c) in &b.out {
                if *k >= n {
                    return Err(Error::schema(
                        format!("brackets[{pos}].out"),
                        format!("index {k} out of range for dim {n}"),
                    ));
                }
                alg.c[b.i][b.j][*k] = &alg.c[b.i][b.j][*k] + c;
            }
        }
        for i in 0..n {
            for j in 0..n {
                if declared[i][j] && !declared[j][i] && i != j {
                    for k in 0..n {
                        alg.c[j][i][k] = -&alg.c[i][j][k];
                    }
                }
            }
        }
        Ok(alg)
    }

    /// Builds from a full constant table `c[i][j][k]` without symmetrizing.
    pub fn from_constants(names: Names, c: Vec<Vec<Vec<Rational>>>) -> Self {
        let n = names.dim();
        assert!(
            c.len() == n
                && c.iter()
                    .all(|r| r.len() == n && r.iter().all(|v| v.len() == n)),
            "table shape"
        );
        LieAlgebra { names, c }
    }

    pub fn dim(&self) -> usize {
        self.names.dim()
    }

    pub fn names(&self) -> &Names {
        &self.names
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[i][j][k]
    }

    /// Brackets needed to rebuild the table with [`LieAlgebra::from_brackets`]:
    /// every nonzero `i < j` pair, plus any pair breaking antisymmetry.
    pub fn bracket_specs(&self) -> Vec<BracketSpec> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let mirrored = i != j && (0..n).all(|k| self.c[j][i][k] == -&self.c[i][j][k]);
                let terms: Vec<(usize, Rational)> = (0..n)
                    .filter(|&k| !self.c[i][j][k].is_zero())
                    .map(|k| (k, self.c[i][j][k].clone()))
                    .collect();
                let keep = if mirrored {
                    i < j && !terms.is_empty()
                } else {
                    i > j || !terms.is_empty()
                };
                if keep {
                    out.push(BracketSpec { i, j, out: terms });
                }
            }
        }
        out
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> Vector<Rational> {
        Vector(self.c[i][j].clone())
    }

    pub fn bracket<S: Scalar>(&self, x: &Vector<S>, y: &Vector<S>) -> Vector<S> {
        let n = self.dim();
        let mut out = vec![S::zero(); n];
        for i in 0..n {
            if x.0[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y.0[j].is_zero() {
                    continue;
                }
                let xy = x.0[i].clone() * &y.0[j];
                for k in 0..n {
                    let c = &self.c[i][j][k];
                    if !c.is_zero() {
                        out[k] = out[k].clone() + &xy.scale(c);
                    }
                }
            }
        }
        Vector(out)
    }

    /// `Σ_m (c^m_{ij} c^l_{mk} + c^m_{jk} c^l_{mi} + c^m_{ki} c^l_{mj})` as a vector in `l`.
    pub fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vector<Rational> {
        let e = |a| Vector::<Rational>::basis(self.dim(), a);
        let t1 = self.bracket(&self.basis_bracket(i, j), &e(k));
        let t2 = self.bracket(&self.basis_bracket(j, k), &e(i));
        let t3 = self.bracket(&self.basis_bracket(k, i), &e(j));
        &(&t1 + &t2) + &t3
    }
}

/// Antisymmetry and Jacobi, each with the first violating index tuple (1-based) as witness.
pub fn validate_context(alg: &LieAlgebra) -> CheckReport {
    let n = alg.dim();
    let probes: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let names = alg.names();
    let antisym = Condition::new("antisymmetry", probes.clone(), 2, move |ix| {
        let (i, j) = (ix[0], ix[1]);
        let lhs = alg.basis_bracket(i, j);
        let rhs = -alg.basis_bracket(j, i);
        crate::report::compare(&lhs, &rhs, names)
    });
    let jacobi = Condition::new("jacobi", probes, 3, move |ix| {
        let v = alg.jacobiator(ix[0], ix[1], ix[2]);
        (!v.is_zero()).then(|| Mismatch {
            lhs: v.render(names),
            rhs: "0".into(),
        })
    });
    CheckReport::from_conditions("validate", &[antisym, jacobi])
}

/// Chevalley–Eilenberg differential of an invariant `k`-form:
/// `dω(X_0,…,X_k) = Σ_{a<b} (−1)^{a+b} ω([X_a,X_b], X_0,…,X̂_a,…,X̂_b,…,X_k)`.
pub fn chevalley_d<S: Scalar>(alg: &LieAlgebra, w: &Form<S>) -> Result<Form<S>> {
    let n = alg.dim();
    w.check_dim(n)?;
    let k = w.degree();
    let mut out = Form::zero(n, k + 1);
    if k + 1 > n {
        return Ok(out);
    }
    let frame: Vec<Vec<S>> = (0..n).map(|i| Vector::<S>::basis(n, i).0).collect();
    for tuple in increasing_tuples(n, k + 1) {
        let mut acc = S::zero();
        for a in 0..=k {
            for b in a + 1..=k {
                let br: Vec<S> = alg
                    .basis_bracket(tuple[a], tuple[b])
                    .0
                    .into_iter()
                    .map(S::from)
                    .collect();
                if br.iter().all(Zero::is_zero) {
                    continue;
                }
                let mut args: Vec<&[S]> = vec![&br];
                args.extend(
                    tuple
                        .iter()
                        .enumerate()
                        .filter(|(p, _)| *p != a && *p != b)
                        .map(|(_, &t)| frame[t].as_slice()),
                );
                let v = w.eval_dense(&args);
                acc = if (a + b) % 2 == 0 { acc + &v } else { acc - &v };
            }
        }
        out.add_term(&tuple, acc);
    }
    Ok(out)
}

/// `M × ℝ`: the base algebra with a central generator `d/dt` appended last.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtendedAlgebra {
    pub base: LieAlgebra,
    pub algebra: LieAlgebra,
}

impl ExtendedAlgebra {
    /// Index of `d/dt` (and of `dt` in the coframe).
    pub fn time_index(&self) -> usize {
        self.base.dim()
    }
}

pub fn central_extension(alg: &LieAlgebra) -> ExtendedAlgebra {
    let n = alg.dim();
    let mut frame = alg.names().frame.clone();
    let mut coframe = alg.names().coframe.clone();
    frame.push("d/dt".into());
    coframe.push("dt".into());
    let mut c = vec![vec![vec![Rational::zero(); n + 1]; n + 1]; n + 1];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                c[i][j][k] = alg.constant(i, j, k).clone();
            }
        }
    }
    ExtendedAlgebra {
        base: alg.clone(),
        algebra: LieAlgebra::from_constants(Names::new(frame, coframe), c),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::Covector;

    fn names3() -> Names {
        Names::from_frame(vec!["X1".into(), "X2".into(), "X3".into()])
    }

    fn h3() -> LieAlgebra {
        LieAlgebra::from_brackets(
            names3(),
            &[BracketSpec {
                i: 0,
                j: 1,
                out: vec![(2, Rational::from_integer(-1))],
            }],
        )
        .unwrap()
    }

    #[test]
    fn mirror_filled_by_antisymmetry() {
        let g = h3();
        assert_eq!(g.constant(1, 0, 2), &Rational::from_integer(1));
        assert!(validate_context(&g).passed());
    }

    #[test]
    fn jacobi_failure_reports_first_triple() {
        let one = Rational::from_integer(1);
        let g = LieAlgebra::from_brackets(
            names3(),
            &[
                BracketSpec {
                    i: 0,
                    j: 1,
                    out: vec![(1, one.clone())],
                },
                BracketSpec {
                    i: 0,
                    j: 2,
                    out: vec![(2, one.clone())],
                },
                BracketSpec {
                    i: 1,
                    j: 2,
                    out: vec![(0, one)],
                },
            ],
        )
        .unwrap();
        let r = validate_context(&g);
        assert!(r.passes("antisymmetry"));
        let j = r.get("jacobi").unwrap();
        let w = j.witness.as_ref().unwrap();
        assert_eq!(w.input, "(1, 2, 3)");
        assert_eq!(w.lhs, "2 X1");
    }

    #[test]
    fn differential_of_coframe() {
        let g = h3();
        let a3 = Form::from_covector(&Covector::<Rational>::basis(3, 2));
        let d = chevalley_d(&g, &a3).unwrap();
        assert_eq!(d, Form::monomial(3, &[0, 1], Rational::from_integer(1)));
        let a1 = Form::from_covector(&Covector::<Rational>::basis(3, 0));
        assert!(chevalley_d(&g, &a1).unwrap().is_zero());
        let bad = Form::from_covector(&Covector::<Rational>::basis(4, 0));
        assert!(matches!(
            chevalley_d(&g, &bad),
            Err(Error::ContextMismatch { .. })
        ));
    }

    #[test]
    fn extension_is_central() {
        let ext = central_extension(&h3());
        assert_eq!(ext.algebra.dim(), 4);
        assert_eq!(ext.algebra.names().frame[3], "d/dt");
        assert_eq!(ext.algebra.names().coframe[3], "dt");
        for i in 0..4 {
            assert!(ext.algebra.basis_bracket(3, i).is_zero());
        }
        assert!(validate_context(&ext.algebra).passed());
        let a3 = Form::from_covector(&Covector::<Rational>::basis(4, 2));
        assert_eq!(
            chevalley_d(&ext.algebra, &a3).unwrap(),
            Form::monomial(4, &[0, 1], Rational::from_integer(1))
        );
        let dt = Form::from_covector(&Covector::<Rational>::basis(4, 3));
        assert!(chevalley_d(&ext.algebra, &dt).unwrap().is_zero());
    }
}
