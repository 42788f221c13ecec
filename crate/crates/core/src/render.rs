//! Exact human-readable rendering of tensors against frame names.

use crate::scalar::Scalar;
use crate::tensor::{
    Alternating, Covector, Endomorphism, GeneralizedSection, Lower, Upper, Vector,
};

/// Labels for the frame `X_i` and coframe `α^i` of a context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Names {
    pub frame: Vec<String>,
    pub coframe: Vec<String>,
}

impl Names {
    pub fn new(frame: Vec<String>, coframe: Vec<String>) -> Self {
        assert_eq!(frame.len(), coframe.len(), "frame/coframe length mismatch");
        Names { frame, coframe }
    }

    /// Coframe label derived from a frame label: `X3 → α3`, `e1 → e^1`, otherwise `name*`.
    pub fn dual_label(frame: &str) -> String {
        if let Some(rest) = frame.strip_prefix('X') {
            format!("α{rest}")
        } else if let Some(rest) = frame.strip_prefix('e') {
            format!("e^{rest}")
        } else if frame == "d/dt" {
            "dt".to_string()
        } else {
            format!("{frame}*")
        }
    }

    pub fn from_frame(frame: Vec<String>) -> Self {
        let coframe = frame.iter().map(|f| Self::dual_label(f)).collect();
        Names { frame, coframe }
    }

    pub fn dim(&self) -> usize {
        self.frame.len()
    }

    /// Label of element `k` of the generalized frame `(X_1,…,X_n, α^1,…,α^n)`.
    pub fn generalized(&self, k: usize) -> &str {
        let n = self.dim();
        if k < n {
            &self.frame[k]
        } else {
            &self.coframe[k - n]
        }
    }

    pub fn generalized_all(&self) -> Vec<String> {
        self.frame.iter().chain(&self.coframe).cloned().collect()
    }
}

/// Renders a linear combination `Σ c_i · label_i`, skipping zero coefficients.
pub fn combination<S: Scalar>(terms: impl IntoIterator<Item = (String, S)>) -> String {
    let mut out = String::new();
    for (label, c) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative_term();
        let mag = if neg { -c } else { c };
        let sep = match (out.is_empty(), neg) {
            (true, false) => "",
            (true, true) => "-",
            (false, false) => " + ",
            (false, true) => " - ",
        };
        out.push_str(sep);
        let body = if label.is_empty() {
            mag.to_string()
        } else if mag.is_one() {
            label
        } else if mag.is_compound() {
            format!("({mag}) {label}")
        } else {
            format!("{mag} {label}")
        };
        out.push_str(&body);
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

pub trait Render {
    fn render(&self, names: &Names) -> String;
}

impl<S: Scalar> Render for Vector<S> {
    fn render(&self, names: &Names) -> String {
        combination(names.frame.iter().cloned().zip(self.0.iter().cloned()))
    }
}

impl<S: Scalar> Render for Covector<S> {
    fn render(&self, names: &Names) -> String {
        combination(names.coframe.iter().cloned().zip(self.0.iter().cloned()))
    }
}

impl<S: Scalar> Render for GeneralizedSection<S> {
    fn render(&self, names: &Names) -> String {
        let labels = names.generalized_all();
        combination(labels.into_iter().zip(self.coords()))
    }
}

fn render_alternating<S: Scalar, K>(a: &Alternating<S, K>, labels: &[String]) -> String {
    combination(a.terms().map(|(idx, c)| {
        let label = idx
            .iter()
            .map(|&i| labels[i].as_str())
            .collect::<Vec<_>>()
            .join("∧");
        (label, c.clone())
    }))
}

impl<S: Scalar> Render for Alternating<S, Lower> {
    fn render(&self, names: &Names) -> String {
        render_alternating(self, &names.coframe)
    }
}

impl<S: Scalar> Render for Alternating<S, Upper> {
    fn render(&self, names: &Names) -> String {
        render_alternating(self, &names.frame)
    }
}

impl<S: Scalar> Render for Endomorphism<S> {
    fn render(&self, names: &Names) -> String {
        let cols: Vec<String> = (0..self.dim())
            .map(|j| format!("{} ↦ {}", names.frame[j], self.column(j).render(names)))
            .collect();
        format!("{{{}}}", cols.join(", "))
    }
}

impl Render for crate::scalar::Rational {
    fn render(&self, _: &Names) -> String {
        self.to_string()
    }
}

impl Render for crate::scalar::SplitComplex {
    fn render(&self, _: &Names) -> String {
        self.to_string()
    }
}
