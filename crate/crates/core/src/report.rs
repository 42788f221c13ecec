//! Labeled conditions, exhaustive sweeps and structured pass/fail reports.

use serde::{Deserialize, Serialize};

use crate::render::{Names, Render};

/// Offending inputs of a failed condition together with both sides of the equation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub input: String,
    /// Positions of the inputs in the condition's probe list; re-evaluating there reproduces the mismatch.
    pub indices: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionResult {
    pub condition: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    /// Number of input tuples evaluated.
    pub checked: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct CheckReport {
    pub suite: String,
    pub results: Vec<ConditionResult>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(suite: impl Into<String>) -> Self {
        CheckReport {
            suite: suite.into(),
            results: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn from_conditions(suite: impl Into<String>, conditions: &[Condition<'_>]) -> Self {
        let mut out = Self::new(suite);
        out.results = conditions.iter().map(Condition::run).collect();
        out
    }

    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    pub fn summary(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "fail"
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &ConditionResult> {
        self.results.iter().filter(|r| !r.pass)
    }

    pub fn failing_labels(&self) -> Vec<String> {
        self.failures().map(|r| r.condition.clone()).collect()
    }

    pub fn get(&self, label: &str) -> Option<&ConditionResult> {
        self.results.iter().find(|r| r.condition == label)
    }

    /// Whether `label` is present and passed.
    pub fn passes(&self, label: &str) -> bool {
        self.get(label).is_some_and(|r| r.pass)
    }

    pub fn push(&mut self, r: ConditionResult) {
        self.results.push(r);
    }
}

/// The two sides of an equation that failed to hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub lhs: String,
    pub rhs: String,
}

/// `None` when `lhs == rhs`, otherwise both sides rendered.
pub fn compare<T: PartialEq + Render>(lhs: &T, rhs: &T, names: &Names) -> Option<Mismatch> {
    if lhs == rhs {
        None
    } else {
        Some(Mismatch {
            lhs: lhs.render(names),
            rhs: rhs.render(names),
        })
    }
}

type Eval<'a> = Box<dyn Fn(&[usize]) -> Option<Mismatch> + Send + Sync + 'a>;

/// An equation quantified over all `arity`-tuples of a named probe list.
pub struct Condition<'a> {
    pub label: String,
    probes: Vec<String>,
    arity: usize,
    eval: Eval<'a>,
}

impl<'a> Condition<'a> {
    pub fn new(
        label: impl Into<String>,
        probes: Vec<String>,
        arity: usize,
        eval: impl Fn(&[usize]) -> Option<Mismatch> + Send + Sync + 'a,
    ) -> Self {
        Condition {
            label: label.into(),
            probes,
            arity,
            eval: Box::new(eval),
        }
    }

    /// A condition with no inputs.
    pub fn single(
        label: impl Into<String>,
        eval: impl Fn() -> Option<Mismatch> + Send + Sync + 'a,
    ) -> Self {
        Condition::new(label, Vec::new(), 0, move |_| eval())
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn probes(&self) -> &[String] {
        &self.probes
    }

    pub fn eval_at(&self, idx: &[usize]) -> Option<Mismatch> {
        (self.eval)(idx)
    }

    /// Input label for a tuple of probe positions.
    pub fn input_name(&self, idx: &[usize]) -> String {
        match idx {
            [] => "()".to_string(),
            [i] => self.probes[*i].clone(),
            _ => format!(
                "({})",
                idx.iter()
                    .map(|&i| self.probes[i].as_str())
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        }
    }

    /// Sweeps tuples in lexicographic order and stops at the first mismatch.
    pub fn run(&self) -> ConditionResult {
        let m = self.probes.len();
        let mut idx = vec![0usize; self.arity];
        let mut checked = 0;
        if self.arity > 0 && m == 0 {
            return ConditionResult {
                condition: self.label.clone(),
                pass: true,
                witness: None,
                checked,
            };
        }
        loop {
            checked += 1;
            if let Some(Mismatch { lhs, rhs }) = self.eval_at(&idx) {
                let witness = Witness {
                    input: self.input_name(&idx),
                    indices: idx,
                    lhs,
                    rhs,
                };
                return ConditionResult {
                    condition: self.label.clone(),
                    pass: false,
                    witness: Some(witness),
                    checked,
                };
            }
            let mut pos = self.arity;
            loop {
                if pos == 0 {
                    return ConditionResult {
                        condition: self.label.clone(),
                        pass: true,
                        witness: None,
                        checked,
                    };
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < m {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_order_and_witness() {
        let probes = vec!["a".to_string(), "b".to_string(), "c".to_string()];
        let c = Condition::new("lt", probes, 2, |ix| {
            (ix[0] == 2 && ix[1] == 1).then(|| Mismatch {
                lhs: "x".into(),
                rhs: "y".into(),
            })
        });
        let r = c.run();
        assert!(!r.pass);
        let w = r.witness.unwrap();
        assert_eq!(w.input, "(c, b)");
        assert_eq!(w.indices, vec![2, 1]);
        assert_eq!(r.checked, 8);
        assert!(c.eval_at(&w.indices).is_some());
    }

    #[test]
    fn nullary_condition() {
        let c = Condition::single("one", || None);
        let r = c.run();
        assert!(r.pass);
        assert_eq!(r.checked, 1);
    }
}
