//! Invariant tensors in a fixed frame: vectors, 1-forms, alternating forms and
//! multivectors, endomorphisms and sections of `TM ⊕ TM*`.

use std::collections::BTreeMap;
use std::marker::PhantomData;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar, SplitComplex};

fn zip_with<S: Scalar>(a: &[S], b: &[S], f: impl Fn(&S, &S) -> S) -> Vec<S> {
    assert_eq!(a.len(), b.len(), "dimension mismatch");
    a.iter().zip(b).map(|(x, y)| f(x, y)).collect()
}

fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    a.iter()
        .zip(b)
        .fold(S::zero(), |acc, (x, y)| acc + &(x.clone() * y))
}

macro_rules! dense_type {
    ($name:ident, $doc:literal) => {
        #[doc = $doc]
        #[derive(Clone, PartialEq, Debug)]
        pub struct $name<S = Rational>(pub Vec<S>);

        impl<S: Scalar> $name<S> {
            pub fn zero(dim: usize) -> Self {
                $name(vec![S::zero(); dim])
            }

            pub fn basis(dim: usize, i: usize) -> Self {
                let mut v = vec![S::zero(); dim];
                v[i] = S::one();
                $name(v)
            }

            pub fn from_terms(dim: usize, terms: &[(usize, S)]) -> Self {
                let mut v = vec![S::zero(); dim];
                for (i, c) in terms {
                    v[*i] = v[*i].clone() + c;
                }
                $name(v)
            }

            pub fn dim(&self) -> usize {
                self.0.len()
            }

            pub fn coeffs(&self) -> &[S] {
                &self.0
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(Zero::is_zero)
            }

            pub fn scale(&self, c: &S) -> Self {
                $name(self.0.iter().map(|x| x.clone() * c).collect())
            }

            pub fn scale_r(&self, r: &Rational) -> Self {
                $name(self.0.iter().map(|x| x.scale(r)).collect())
            }

            /// Same coefficients with `extra` trailing zero slots.
            pub fn pad(&self, extra: usize) -> Self {
                let mut v = self.0.clone();
                v.extend(std::iter::repeat(S::zero()).take(extra));
                $name(v)
            }
        }

        impl $name<Rational> {
            pub fn complexify(&self) -> $name<SplitComplex> {
                $name(self.0.iter().cloned().map(SplitComplex::from).collect())
            }
        }

        impl<S: Scalar> Add for &$name<S> {
            type Output = $name<S>;
            fn add(self, rhs: Self) -> $name<S> {
                $name(zip_with(&self.0, &rhs.0, |a, b| a.clone() + b))
            }
        }

        impl<S: Scalar> Sub for &$name<S> {
            type Output = $name<S>;
            fn sub(self, rhs: Self) -> $name<S> {
                $name(zip_with(&self.0, &rhs.0, |a, b| a.clone() - b))
            }
        }

        impl<S: Scalar> Add for $name<S> {
            type Output = $name<S>;
            fn add(self, rhs: Self) -> $name<S> {
                &self + &rhs
            }
        }

        impl<S: Scalar> Sub for $name<S> {
            type Output = $name<S>;
            fn sub(self, rhs: Self) -> $name<S> {
                &self - &rhs
            }
        }

        impl<S: Scalar> Neg for &$name<S> {
            type Output = $name<S>;
            fn neg(self) -> $name<S> {
                $name(self.0.iter().map(|x| -x.clone()).collect())
            }
        }

        impl<S: Scalar> Neg for $name<S> {
            type Output = $name<S>;
            fn neg(self) -> $name<S> {
                -&self
            }
        }
    };
}

dense_type!(
    Vector,
    "Invariant vector field, coefficients on the frame `X_i`."
);
dense_type!(
    Covector,
    "Invariant 1-form, coefficients on the coframe `α^i`."
);

impl<S: Scalar> Covector<S> {
    /// `α(X)`.
    pub fn eval(&self, x: &Vector<S>) -> S {
        dot(&self.0, &x.0)
    }
}

/// Marker for covariant alternating tensors (forms).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Lower;
/// Marker for contravariant alternating tensors (multivectors).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Upper;

/// Totally antisymmetric tensor stored by strictly increasing index tuples.
///
/// Only nonzero components are stored. Evaluation uses the determinant
/// convention `(v¹∧…∧vᵏ)(w₁,…,w_k) = det[vᵃ(w_b)]`.
#[derive(Clone, PartialEq, Debug)]
pub struct Alternating<S, K> {
    dim: usize,
    degree: usize,
    terms: BTreeMap<Vec<usize>, S>,
    kind: PhantomData<K>,
}

pub type Form<S = Rational> = Alternating<S, Lower>;
pub type Multivector<S = Rational> = Alternating<S, Upper>;

/// Sorts `idx` in place and returns the permutation sign, or `None` on a repeat.
fn sort_sign(idx: &mut [usize]) -> Option<bool> {
    let mut odd = false;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(odd)
    }
}

/// All strictly increasing `k`-tuples in `0..n`, lexicographic.
pub fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn det<S: Scalar>(m: &mut Vec<Vec<S>>) -> S {
    // Laplace expansion; degrees stay small.
    let k = m.len();
    match k {
        0 => S::one(),
        1 => m[0][0].clone(),
        2 => m[0][0].clone() * &m[1][1] - &(m[0][1].clone() * &m[1][0]),
        _ => {
            let mut acc = S::zero();
            for c in 0..k {
                if m[0][c].is_zero() {
                    continue;
                }
                let mut minor: Vec<Vec<S>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != c)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][c].clone() * &det(&mut minor);
                acc = if c % 2 == 0 { acc + &term } else { acc - &term };
            }
            acc
        }
    }
}

impl<S: Scalar, K> Alternating<S, K> {
    pub fn zero(dim: usize, degree: usize) -> Self {
        Alternating {
            dim,
            degree,
            terms: BTreeMap::new(),
            kind: PhantomData,
        }
    }

    /// The unit scalar as a degree-0 element.
    pub fn unit(dim: usize) -> Self {
        let mut out = Self::zero(dim, 0);
        out.add_term(&[], S::one());
        out
    }

    /// `c · e^{i₁}∧…∧e^{i_k}` for indices in any order.
    pub fn monomial(dim: usize, idx: &[usize], c: S) -> Self {
        let mut out = Self::zero(dim, idx.len());
        out.add_term(idx, c);
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero components over strictly increasing index tuples.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &S)> {
        self.terms.iter()
    }

    /// Component at an arbitrary index tuple, with the antisymmetry sign applied.
    pub fn component(&self, idx: &[usize]) -> S {
        let mut key = idx.to_vec();
        match sort_sign(&mut key) {
            None => S::zero(),
            Some(odd) => {
                let c = self.terms.get(&key).cloned().unwrap_or_else(S::zero);
                if odd {
                    -c
                } else {
                    c
                }
            }
        }
    }

    pub fn add_term(&mut self, idx: &[usize], c: S) {
        assert_eq!(idx.len(), self.degree, "degree mismatch");
        assert!(idx.iter().all(|&i| i < self.dim), "index out of range");
        if c.is_zero() {
            return;
        }
        let mut key = idx.to_vec();
        let Some(odd) = sort_sign(&mut key) else {
            return;
        };
        let c = if odd { -c } else { c };
        let entry = self.terms.entry(key.clone()).or_insert_with(S::zero);
        *entry = entry.clone() + &c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(self.dim, self.degree);
        for (k, v) in &self.terms {
            out.add_term(k, v.clone() * c);
        }
        out
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Alternating<T, K> {
        let mut out = Alternating::zero(self.dim, self.degree);
        for (k, v) in &self.terms {
            out.add_term(k, f(v));
        }
        out
    }

    pub fn wedge(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = Self::zero(self.dim, self.degree + other.degree);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let idx: Vec<usize> = a.iter().chain(b).copied().collect();
                out.add_term(&idx, x.clone() * y);
            }
        }
        out
    }

    /// Wedge of degree-1 elements given by dense coefficients.
    pub fn wedge_of(dim: usize, factors: &[&[S]]) -> Self {
        let mut out = Self::unit(dim);
        for f in factors {
            let mut one = Self::zero(dim, 1);
            for (i, c) in f.iter().enumerate() {
                one.add_term(&[i], c.clone());
            }
            out = out.wedge(&one);
        }
        out
    }

    /// Insertion into the first slot: `(i_v ω)(w₂,…,w_k) = ω(v, w₂,…,w_k)`.
    pub fn contract(&self, v: &[S]) -> Self {
        assert_eq!(v.len(), self.dim, "dimension mismatch");
        assert!(self.degree > 0, "contraction of a scalar");
        let mut out = Self::zero(self.dim, self.degree - 1);
        for (idx, c) in &self.terms {
            for (pos, &i) in idx.iter().enumerate() {
                if v[i].is_zero() {
                    continue;
                }
                let rest: Vec<usize> = idx
                    .iter()
                    .enumerate()
                    .filter(|(p, _)| *p != pos)
                    .map(|(_, &j)| j)
                    .collect();
                let t = v[i].clone() * c;
                out.add_term(&rest, if pos % 2 == 0 { t } else { -t });
            }
        }
        out
    }

    /// Full evaluation on `degree` dense arguments.
    pub fn eval_dense(&self, args: &[&[S]]) -> S {
        assert_eq!(args.len(), self.degree, "arity mismatch");
        let mut acc = S::zero();
        for (idx, c) in &self.terms {
            let mut m: Vec<Vec<S>> = idx
                .iter()
                .map(|&i| args.iter().map(|a| a[i].clone()).collect())
                .collect();
            let d = det(&mut m);
            if !d.is_zero() {
                acc = acc + &(c.clone() * &d);
            }
        }
        acc
    }

    /// Coefficient of the unique degree-0 component.
    pub fn scalar_part(&self) -> S {
        self.component(&[])
    }

    /// Full antisymmetric matrix of a degree-2 element.
    pub fn to_matrix(&self) -> Vec<Vec<S>> {
        assert_eq!(self.degree, 2, "matrix form needs degree 2");
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.component(&[i, j])).collect())
            .collect()
    }

    /// Degree-2 element from the strictly upper triangle of `m`.
    pub fn from_upper(m: &[Vec<S>]) -> Self {
        let n = m.len();
        let mut out = Self::zero(n, 2);
        for (i, row) in m.iter().enumerate() {
            for (j, c) in row.iter().enumerate().skip(i + 1) {
                out.add_term(&[i, j], c.clone());
            }
        }
        out
    }

    /// Same components in a space with `extra` more basis elements.
    pub fn pad(&self, extra: usize) -> Self {
        let mut out = Self::zero(self.dim + extra, self.degree);
        for (k, v) in &self.terms {
            out.add_term(k, v.clone());
        }
        out
    }

    pub fn check_dim(&self, dim: usize) -> Result<()> {
        Error::check_dim(dim, self.dim)
    }
}

impl<K> Alternating<Rational, K> {
    pub fn complexify(&self) -> Alternating<SplitComplex, K> {
        self.map(|c| SplitComplex::from(c.clone()))
    }
}

impl<S: Scalar, K> Add for &Alternating<S, K> {
    type Output = Alternating<S, K>;
    fn add(self, rhs: Self) -> Alternating<S, K> {
        assert_eq!(
            (self.dim, self.degree),
            (rhs.dim, rhs.degree),
            "shape mismatch"
        );
        let mut out = Alternating {
            dim: self.dim,
            degree: self.degree,
            terms: self.terms.clone(),
            kind: PhantomData,
        };
        for (k, v) in &rhs.terms {
            out.add_term(k, v.clone());
        }
        out
    }
}

impl<S: Scalar, K> Neg for &Alternating<S, K> {
    type Output = Alternating<S, K>;
    fn neg(self) -> Alternating<S, K> {
        self.map(|c| -c.clone())
    }
}

impl<S: Scalar, K> Sub for &Alternating<S, K> {
    type Output = Alternating<S, K>;
    fn sub(self, rhs: Self) -> Alternating<S, K> {
        self + &(-rhs)
    }
}

impl<S: Scalar> Form<S> {
    pub fn from_covector(a: &Covector<S>) -> Self {
        Self::wedge_of(a.dim(), &[&a.0])
    }

    /// Coefficients of a degree-1 form.
    pub fn to_covector(&self) -> Covector<S> {
        assert_eq!(self.degree, 1, "not a 1-form");
        Covector((0..self.dim).map(|i| self.component(&[i])).collect())
    }

    pub fn interior(&self, x: &Vector<S>) -> Self {
        self.contract(&x.0)
    }

    pub fn eval(&self, args: &[&Vector<S>]) -> S {
        let dense: Vec<&[S]> = args.iter().map(|v| v.0.as_slice()).collect();
        self.eval_dense(&dense)
    }
}

impl<S: Scalar> Multivector<S> {
    pub fn from_vector(x: &Vector<S>) -> Self {
        Self::wedge_of(x.dim(), &[&x.0])
    }

    pub fn to_vector(&self) -> Vector<S> {
        assert_eq!(self.degree, 1, "not a vector");
        Vector((0..self.dim).map(|i| self.component(&[i])).collect())
    }

    /// `X ∧ Y` for two vectors.
    pub fn bivector(x: &Vector<S>, y: &Vector<S>) -> Self {
        Self::wedge_of(x.dim(), &[&x.0, &y.0])
    }

    pub fn interior(&self, a: &Covector<S>) -> Self {
        self.contract(&a.0)
    }

    pub fn eval(&self, args: &[&Covector<S>]) -> S {
        let dense: Vec<&[S]> = args.iter().map(|v| v.0.as_slice()).collect();
        self.eval_dense(&dense)
    }
}

/// Endomorphism of the tangent frame; `m[i][j]` is the coefficient of `X_i` in `F(X_j)`.
#[derive(Clone, PartialEq, Debug)]
pub struct Endomorphism<S = Rational> {
    m: Vec<Vec<S>>,
}

impl<S: Scalar> Endomorphism<S> {
    pub fn from_matrix(m: Vec<Vec<S>>) -> Self {
        let n = m.len();
        assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
        Endomorphism { m }
    }

    pub fn zero(n: usize) -> Self {
        Endomorphism {
            m: vec![vec![S::zero(); n]; n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut out = Self::zero(n);
        for i in 0..n {
            out.m[i][i] = S::one();
        }
        out
    }

    /// Endomorphism with `F(X_j) = images[j]`.
    pub fn from_images(images: &[Vector<S>]) -> Self {
        let n = images.len();
        let mut out = Self::zero(n);
        for (j, v) in images.iter().enumerate() {
            for i in 0..n {
                out.m[i][j] = v.0[i].clone();
            }
        }
        out
    }

    /// `X ↦ ξ(X)Z`.
    pub fn outer(z: &Vector<S>, xi: &Covector<S>) -> Self {
        let n = z.dim();
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.m[i][j] = z.0[i].clone() * &xi.0[j];
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.m.len()
    }

    pub fn matrix(&self) -> &[Vec<S>] {
        &self.m
    }

    pub fn entry(&self, i: usize, j: usize) -> &S {
        &self.m[i][j]
    }

    pub fn apply(&self, x: &Vector<S>) -> Vector<S> {
        Vector(self.m.iter().map(|row| dot(row, &x.0)).collect())
    }

    /// Dual action `(F*α)(X) = α(FX)`.
    pub fn dual(&self, a: &Covector<S>) -> Covector<S> {
        let n = self.dim();
        Covector(
            (0..n)
                .map(|j| (0..n).fold(S::zero(), |acc, i| acc + &(a.0[i].clone() * &self.m[i][j])))
                .collect(),
        )
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.dim();
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.m[i][j] = (0..n).fold(S::zero(), |acc, k| {
                    acc + &(self.m[i][k].clone() * &other.m[k][j])
                });
            }
        }
        out
    }

    pub fn column(&self, j: usize) -> Vector<S> {
        Vector(self.m.iter().map(|r| r[j].clone()).collect())
    }

    pub fn trace(&self) -> S {
        (0..self.dim()).fold(S::zero(), |acc, i| acc + &self.m[i][i])
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().flatten().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &S) -> Self {
        Endomorphism {
            m: self
                .m
                .iter()
                .map(|r| r.iter().map(|x| x.clone() * c).collect())
                .collect(),
        }
    }

    /// Block-diagonal extension acting as zero on `extra` new frame elements.
    pub fn pad(&self, extra: usize) -> Self {
        let n = self.dim() + extra;
        let mut out = Self::zero(n);
        for (i, row) in self.m.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                out.m[i][j] = x.clone();
            }
        }
        out
    }

    pub fn check_dim(&self, dim: usize) -> Result<()> {
        Error::check_dim(dim, self.dim())
    }
}

impl<S: Scalar> Add for &Endomorphism<S> {
    type Output = Endomorphism<S>;
    fn add(self, rhs: Self) -> Endomorphism<S> {
        Endomorphism {
            m: self
                .m
                .iter()
                .zip(&rhs.m)
                .map(|(a, b)| zip_with(a, b, |x, y| x.clone() + y))
                .collect(),
        }
    }
}

impl<S: Scalar> Sub for &Endomorphism<S> {
    type Output = Endomorphism<S>;
    fn sub(self, rhs: Self) -> Endomorphism<S> {
        Endomorphism {
            m: self
                .m
                .iter()
                .zip(&rhs.m)
                .map(|(a, b)| zip_with(a, b, |x, y| x.clone() - y))
                .collect(),
        }
    }
}

impl<S: Scalar> Neg for &Endomorphism<S> {
    type Output = Endomorphism<S>;
    fn neg(self) -> Endomorphism<S> {
        self.scale(&-S::one())
    }
}

/// Section `X + α` of `TM ⊕ TM*`.
#[derive(Clone, PartialEq, Debug)]
pub struct GeneralizedSection<S = Rational> {
    pub vector: Vector<S>,
    pub form: Covector<S>,
}

impl<S: Scalar> GeneralizedSection<S> {
    pub fn new(vector: Vector<S>, form: Covector<S>) -> Self {
        assert_eq!(vector.dim(), form.dim(), "dimension mismatch");
        GeneralizedSection { vector, form }
    }

    pub fn zero(n: usize) -> Self {
        Self::new(Vector::zero(n), Covector::zero(n))
    }

    pub fn from_vector(x: Vector<S>) -> Self {
        let n = x.dim();
        Self::new(x, Covector::zero(n))
    }

    pub fn from_form(a: Covector<S>) -> Self {
        let n = a.dim();
        Self::new(Vector::zero(n), a)
    }

    /// Element `k` of the generalized frame `(X_1,…,X_n, α^1,…,α^n)`.
    pub fn frame(n: usize, k: usize) -> Self {
        if k < n {
            Self::from_vector(Vector::basis(n, k))
        } else {
            Self::from_form(Covector::basis(n, k - n))
        }
    }

    pub fn dim(&self) -> usize {
        self.vector.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.vector.is_zero() && self.form.is_zero()
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.vector.scale(c), self.form.scale(c))
    }

    pub fn scale_r(&self, r: &Rational) -> Self {
        Self::new(self.vector.scale_r(r), self.form.scale_r(r))
    }

    /// Concatenated coordinates `(X, α)` of length `2n`.
    pub fn coords(&self) -> Vec<S> {
        self.vector.0.iter().chain(&self.form.0).cloned().collect()
    }

    pub fn from_coords(c: &[S]) -> Self {
        assert!(c.len() % 2 == 0, "odd coordinate count");
        let n = c.len() / 2;
        Self::new(Vector(c[..n].to_vec()), Covector(c[n..].to_vec()))
    }
}

impl GeneralizedSection<Rational> {
    pub fn complexify(&self) -> GeneralizedSection<SplitComplex> {
        GeneralizedSection::new(self.vector.complexify(), self.form.complexify())
    }
}

impl GeneralizedSection<SplitComplex> {
    /// `e⁺·plus + e⁻·minus`.
    pub fn from_lightcone(
        plus: &GeneralizedSection<Rational>,
        minus: &GeneralizedSection<Rational>,
    ) -> Self {
        let c: Vec<SplitComplex> = plus
            .coords()
            .iter()
            .zip(minus.coords())
            .map(|(p, m)| SplitComplex::from_lightcone(p, &m))
            .collect();
        Self::from_coords(&c)
    }

    /// Real components `(plus, minus)` with `self = e⁺·plus + e⁻·minus`.
    pub fn lightcone(&self) -> (GeneralizedSection<Rational>, GeneralizedSection<Rational>) {
        let (p, m): (Vec<Rational>, Vec<Rational>) =
            self.coords().iter().map(SplitComplex::lightcone).unzip();
        (
            GeneralizedSection::from_coords(&p),
            GeneralizedSection::from_coords(&m),
        )
    }

    /// Paraconjugation `e ↦ −e`.
    pub fn conjugate(&self) -> Self {
        let c: Vec<SplitComplex> = self.coords().iter().map(SplitComplex::conjugate).collect();
        Self::from_coords(&c)
    }
}

impl<S: Scalar> Add for &GeneralizedSection<S> {
    type Output = GeneralizedSection<S>;
    fn add(self, rhs: Self) -> GeneralizedSection<S> {
        GeneralizedSection::new(&self.vector + &rhs.vector, &self.form + &rhs.form)
    }
}

impl<S: Scalar> Sub for &GeneralizedSection<S> {
    type Output = GeneralizedSection<S>;
    fn sub(self, rhs: Self) -> GeneralizedSection<S> {
        GeneralizedSection::new(&self.vector - &rhs.vector, &self.form - &rhs.form)
    }
}

impl<S: Scalar> Add for GeneralizedSection<S> {
    type Output = GeneralizedSection<S>;
    fn add(self, rhs: Self) -> GeneralizedSection<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for GeneralizedSection<S> {
    type Output = GeneralizedSection<S>;
    fn sub(self, rhs: Self) -> GeneralizedSection<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Neg for &GeneralizedSection<S> {
    type Output = GeneralizedSection<S>;
    fn neg(self) -> GeneralizedSection<S> {
        GeneralizedSection::new(-&self.vector, -&self.form)
    }
}

impl<S: Scalar> Neg for GeneralizedSection<S> {
    type Output = GeneralizedSection<S>;
    fn neg(self) -> GeneralizedSection<S> {
        -&self
    }
}

/// Real endomorphism of `TM ⊕ TM*` as a `2n × 2n` matrix in the generalized frame.
#[derive(Clone, PartialEq, Debug)]
pub struct GeneralizedEndomorphism {
    n: usize,
    m: Vec<Vec<Rational>>,
}

impl GeneralizedEndomorphism {
    pub fn from_matrix(n: usize, m: Vec<Vec<Rational>>) -> Self {
        assert!(
            m.len() == 2 * n && m.iter().all(|r| r.len() == 2 * n),
            "matrix must be 2n × 2n"
        );
        GeneralizedEndomorphism { n, m }
    }

    pub fn zero(n: usize) -> Self {
        GeneralizedEndomorphism {
            n,
            m: vec![vec![Rational::zero(); 2 * n]; 2 * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut out = Self::zero(n);
        for i in 0..2 * n {
            out.m[i][i] = Rational::one();
        }
        out
    }

    /// `(X, α) ↦ (aX + π♯α, θ♭X − a*α)`.
    pub fn from_blocks(
        a: &Endomorphism<Rational>,
        pi: &Multivector<Rational>,
        theta: &Form<Rational>,
    ) -> Self {
        let n = a.dim();
        assert_eq!((pi.dim(), pi.degree()), (n, 2), "bivector shape");
        assert_eq!((theta.dim(), theta.degree()), (n, 2), "2-form shape");
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.m[i][j] = a.entry(i, j).clone();
                out.m[i][n + j] = pi.component(&[j, i]);
                out.m[n + j][i] = theta.component(&[i, j]);
                out.m[n + j][n + i] = -a.entry(i, j);
            }
        }
        out
    }

    /// Sends `u` to `ξ(X)Z + α(Z)ξ` for `u = X + α`.
    pub fn symmetric_outer(z: &Vector<Rational>, xi: &Covector<Rational>) -> Self {
        let n = z.dim();
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.m[i][j] = &z.0[i] * &xi.0[j];
                out.m[n + i][n + j] = &xi.0[i] * &z.0[j];
            }
        }
        out
    }

    pub fn half_dim(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.m
    }

    pub fn apply<S: Scalar>(&self, u: &GeneralizedSection<S>) -> GeneralizedSection<S> {
        assert_eq!(u.dim(), self.n, "dimension mismatch");
        let c = u.coords();
        let out: Vec<S> = self
            .m
            .iter()
            .map(|row| {
                row.iter().zip(&c).fold(S::zero(), |acc, (r, x)| {
                    if r.is_zero() {
                        acc
                    } else {
                        acc + &x.scale(r)
                    }
                })
            })
            .collect();
        GeneralizedSection::from_coords(&out)
    }

    pub fn compose(&self, other: &Self) -> Self {
        let k = 2 * self.n;
        let mut out = Self::zero(self.n);
        for i in 0..k {
            for j in 0..k {
                out.m[i][j] = (0..k).map(|l| &self.m[i][l] * &other.m[l][j]).sum();
            }
        }
        out
    }

    pub fn trace(&self) -> Rational {
        (0..2 * self.n).map(|i| self.m[i][i].clone()).sum()
    }

    pub fn sub(&self, other: &Self) -> Self {
        let m = self
            .m
            .iter()
            .zip(&other.m)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect())
            .collect();
        GeneralizedEndomorphism { n: self.n, m }
    }
}

/// A tensor of any supported kind, for kind-generic operations.
#[derive(Clone, PartialEq, Debug)]
pub enum Tensor<S = Rational> {
    Vector(Vector<S>),
    Form(Form<S>),
    Multivector(Multivector<S>),
    Endomorphism(Endomorphism<S>),
}

impl<S: Scalar> Tensor<S> {
    pub fn dim(&self) -> usize {
        match self {
            Tensor::Vector(v) => v.dim(),
            Tensor::Form(f) => f.dim(),
            Tensor::Multivector(p) => p.dim(),
            Tensor::Endomorphism(e) => e.dim(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Tensor::Vector(v) => v.is_zero(),
            Tensor::Form(f) => f.is_zero(),
            Tensor::Multivector(p) => p.is_zero(),
            Tensor::Endomorphism(e) => e.is_zero(),
        }
    }
}

impl<S: Scalar> From<Covector<S>> for Tensor<S> {
    fn from(a: Covector<S>) -> Self {
        Tensor::Form(Form::from_covector(&a))
    }
}
