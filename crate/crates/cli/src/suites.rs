//! Check suites selectable with `--suite`, each producing one [`SuiteOutcome`].

use std::fmt;
use std::str::FromStr;

use gpc_core::algebroid::{BundleSummary, GeneratorBracket};
use gpc_core::report::ConditionResult;
use gpc_core::structures::{assemble_f, thm31_report, thm32_report};
use gpc_core::{
    adapted_lift, bialgebroid_check, check_apc, check_def1, check_integrability, check_normal,
    classify_detailed, closure_check, eigenbundles, isotropy_check, z_invariance_check,
    BundleLabel, CheckReport, Definition, Error, GeneralizedParaContact, Render, SplitComplex,
    Zero,
};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Def1,
    Paracomplex,
    Normality31,
    Normality32,
    Classify,
    Eigenbundles,
    Isotropy,
    Closure,
    Bialgebroid,
    Classical,
}

impl Suite {
    /// Order used by `all`.
    pub const ALL: [Suite; 10] = [
        Suite::Def1,
        Suite::Paracomplex,
        Suite::Normality31,
        Suite::Normality32,
        Suite::Classify,
        Suite::Eigenbundles,
        Suite::Isotropy,
        Suite::Closure,
        Suite::Bialgebroid,
        Suite::Classical,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Def1 => "def1",
            Suite::Paracomplex => "paracomplex",
            Suite::Normality31 => "normality31",
            Suite::Normality32 => "normality32",
            Suite::Classify => "classify",
            Suite::Eigenbundles => "eigenbundles",
            Suite::Isotropy => "isotropy",
            Suite::Closure => "closure",
            Suite::Bialgebroid => "bialgebroid",
            Suite::Classical => "classical",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .iter()
            .copied()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
                format!(
                    "unknown suite {s:?}; expected one of {}, all",
                    names.join(", ")
                )
            })
    }
}

/// Expands a comma-separated selection; `all` keeps the `classical` suite only when
/// the definition carries a classical structure.
pub fn parse_selection(spec: &str, has_classical: bool) -> Result<Vec<Suite>, String> {
    let mut out = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let picked: Vec<Suite> = if part == "all" {
            Suite::ALL
                .iter()
                .copied()
                .filter(|s| *s != Suite::Classical || has_classical)
                .collect()
        } else {
            vec![part.parse()?]
        };
        for s in picked {
            if !out.contains(&s) {
                out.push(s);
            }
        }
    }
    if out.is_empty() {
        return Err("no suite selected".into());
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteOutcome {
    pub suite: String,
    pub summary: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<String>,
    pub results: Vec<ConditionResult>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub bundles: Vec<BundleSummary>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub brackets: Vec<GeneratorBracket>,
}

impl SuiteOutcome {
    fn new(suite: Suite) -> Self {
        SuiteOutcome {
            suite: suite.name().into(),
            summary: "pass",
            error: None,
            classification: None,
            results: Vec::new(),
            notes: Vec::new(),
            bundles: Vec::new(),
            brackets: Vec::new(),
        }
    }

    pub fn from_report(suite: &str, r: CheckReport) -> Self {
        let mut out = SuiteOutcome::new(Suite::Def1);
        out.suite = suite.into();
        out.absorb(r);
        out.finish()
    }

    fn absorb(&mut self, r: CheckReport) {
        self.results.extend(r.results);
        self.notes.extend(r.notes);
    }

    fn fail_with(mut self, e: &Error) -> Self {
        self.error = Some(e.to_string());
        self.finish()
    }

    fn finish(mut self) -> Self {
        let ok = self.error.is_none() && self.results.iter().all(|r| r.pass);
        self.summary = if ok { "pass" } else { "fail" };
        self
    }

    pub fn passed(&self) -> bool {
        self.summary == "pass"
    }
}

fn structure(def: &Definition) -> Result<GeneralizedParaContact, Error> {
    def.generalized()?.ok_or_else(|| {
        Error::PreconditionViolation("definition has no structure or classical block".into())
    })
}

pub fn run(suite: Suite, def: &Definition) -> SuiteOutcome {
    let out = SuiteOutcome::new(suite);
    if suite == Suite::Paracomplex {
        if let Some(j) = &def.paracomplex {
            let mut out = out;
            out.absorb(check_integrability(j));
            return out.finish();
        }
    }
    if suite == Suite::Classical {
        return classical(out, def);
    }
    match structure(def) {
        Ok(s) => run_on(out, suite, &s),
        Err(e) => out.fail_with(&e),
    }
}

fn classical(mut out: SuiteOutcome, def: &Definition) -> SuiteOutcome {
    let Some(a) = &def.classical else {
        return out.fail_with(&Error::PreconditionViolation(
            "definition has no classical block".into(),
        ));
    };
    let apc = check_apc(a);
    let ok = apc.passed();
    out.absorb(apc);
    if ok {
        out.absorb(check_normal(a));
    } else {
        out.notes
            .push("normality not evaluated: almost para-contact axioms fail".into());
    }
    out.finish()
}

/// Structure-axiom failures followed by the unchecked sweep, so the first failing theorem condition is visible.
fn with_def1(
    mut out: SuiteOutcome,
    s: &GeneralizedParaContact,
    sweep: CheckReport,
) -> SuiteOutcome {
    let d = check_def1(s);
    if !d.passed() {
        out.error = Some(
            Error::Def1Violation {
                failures: d.failing_labels(),
            }
            .to_string(),
        );
        out.notes
            .push("conditions below are evaluated without the structure-axiom precondition".into());
        out.results.extend(d.failures().cloned());
    }
    out.absorb(sweep);
    out.finish()
}

fn run_on(mut out: SuiteOutcome, suite: Suite, s: &GeneralizedParaContact) -> SuiteOutcome {
    let names = s.names();
    match suite {
        Suite::Def1 => {
            out.absorb(check_def1(s));
            out.finish()
        }
        Suite::Paracomplex => match adapted_lift(s) {
            Ok(j) => {
                out.absorb(check_integrability(&j));
                out.finish()
            }
            Err(e) => out.fail_with(&e),
        },
        Suite::Normality31 => with_def1(out, s, thm31_report(s)),
        Suite::Normality32 => with_def1(out, s, thm32_report(s)),
        Suite::Classify => match classify_detailed(s) {
            Ok(c) => {
                out.classification = Some(c.class.to_string());
                out.finish()
            }
            Err(e) => out.fail_with(&e),
        },
        Suite::Eigenbundles => match eigenbundles(s) {
            Ok(eb) => {
                let ff = assemble_f(s);
                let e = SplitComplex::e();
                for b in &eb.bundles {
                    out.bundles.push(b.summary(names));
                    let lambda = match b.label {
                        BundleLabel::LZ | BundleLabel::LXi => SplitComplex::zero(),
                        BundleLabel::E10 => e.clone(),
                        BundleLabel::E01 => -e.clone(),
                        _ => continue,
                    };
                    let probes: Vec<String> =
                        b.generators.iter().map(|g| g.render(names)).collect();
                    let cond = gpc_core::report::Condition::new(
                        format!("eigen.{}", b.label),
                        probes,
                        1,
                        |ix| {
                            let g = &b.generators[ix[0]];
                            gpc_core::report::compare(&ff.apply(g), &g.scale(&lambda), names)
                        },
                    );
                    out.results.push(cond.run());
                }
                out.finish()
            }
            Err(e) => out.fail_with(&e),
        },
        Suite::Isotropy => match eigenbundles(s) {
            Ok(eb) => {
                for b in &eb.bundles {
                    out.absorb(isotropy_check(b, names));
                }
                out.finish()
            }
            Err(e) => out.fail_with(&e),
        },
        Suite::Closure => match eigenbundles(s) {
            Ok(eb) => {
                for label in [
                    BundleLabel::L,
                    BundleLabel::Lbar,
                    BundleLabel::Lstar,
                    BundleLabel::Lbarstar,
                ] {
                    let c = closure_check(s, eb.get(label));
                    out.absorb(c.report);
                    out.brackets.extend(c.nonzero.into_iter().map(|mut b| {
                        b.input = format!("{label} {}", b.input);
                        b
                    }));
                }
                if let Ok(r) = z_invariance_check(s) {
                    out.notes.push(format!("⟦Z, E10⟧ ⊂ E10: {}", r.summary()));
                }
                out.finish()
            }
            Err(e) => out.fail_with(&e),
        },
        Suite::Bialgebroid => match bialgebroid_check(s) {
            Ok(r) => {
                out.absorb(r);
                out.finish()
            }
            Err(e) => out.fail_with(&e),
        },
        Suite::Classical => unreachable!("handled before the structure is resolved"),
    }
}

/// Runs the selection on scoped threads; results keep the selection order.
pub fn run_all(selection: &[Suite], def: &Definition) -> Vec<SuiteOutcome> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = selection
            .iter()
            .map(|&s| scope.spawn(move || run(s, def)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite panicked"))
            .collect()
    })
}
