//! JSON definitions of a Lie algebra with optional generalized, classical or
//! paracomplex structures.
//!
//! Scalars are rational strings (`"-3/4"`) or integers. Frame indices are
//! 1-based. An endomorphism is a matrix whose entry `[i][j]` is the coefficient
//! of `X_i` in the image of `X_j`; a bivector or 2-form is an antisymmetric or
//! strictly upper-triangular matrix of components `[i][j]`.
//!
//! ```json
//! {
//!   "name": "example2",
//!   "algebra": {"dim": 3, "brackets": [{"i": 1, "j": 2, "out": [{"k": 3, "c": "-1"}]}]},
//!   "structure": {"F": [[...]], "pi": [[...]], "sigma": [[...]], "Z": [...], "xi": [...]}
//! }
//! ```

use serde::{Deserialize, Serialize};

use crate::classical::{lift_to_generalized, AlmostParaContact};
use crate::error::{Error, Result};
use crate::lie::{BracketSpec, LieAlgebra};
use crate::render::Names;
use crate::scalar::Rational;
use crate::structures::{GeneralizedParaContact, GeneralizedParacomplex};
use crate::tensor::{Alternating, Covector, Endomorphism, Vector};
use num_traits::Zero;

/// A parsed input file.
#[derive(Clone, Debug, PartialEq)]
pub struct Definition {
    pub name: Option<String>,
    pub algebra: LieAlgebra,
    pub structure: Option<GeneralizedParaContact>,
    pub classical: Option<AlmostParaContact>,
    pub paracomplex: Option<GeneralizedParacomplex>,
}

impl Definition {
    pub fn new(name: Option<String>, algebra: LieAlgebra) -> Self {
        Definition {
            name,
            algebra,
            structure: None,
            classical: None,
            paracomplex: None,
        }
    }

    pub fn display_name(&self) -> &str {
        self.name.as_deref().unwrap_or("structure")
    }

    /// The generalized structure if given, otherwise the lift of the classical one.
    pub fn generalized(&self) -> Result<Option<GeneralizedParaContact>> {
        match (&self.structure, &self.classical) {
            (Some(s), _) => Ok(Some(s.clone())),
            (None, Some(a)) => lift_to_generalized(a).map(Some),
            (None, None) => Ok(None),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DefinitionDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    algebra: AlgebraDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    structure: Option<StructureDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    classical: Option<ClassicalDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    paracomplex: Option<ParacomplexDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraDoc {
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    frame: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    coframe: Option<Vec<String>>,
    #[serde(default)]
    brackets: Vec<BracketDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BracketDoc {
    i: usize,
    j: usize,
    out: Vec<TermDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermDoc {
    k: usize,
    c: Rational,
}

type Matrix = Vec<Vec<Rational>>;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StructureDoc {
    #[serde(rename = "F")]
    f: Matrix,
    pi: Matrix,
    sigma: Matrix,
    #[serde(rename = "Z")]
    z: Vec<Rational>,
    xi: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ClassicalDoc {
    phi: Matrix,
    #[serde(rename = "E")]
    e: Vec<Rational>,
    eta: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ParacomplexDoc {
    a: Matrix,
    pi: Matrix,
    theta: Matrix,
}

fn default_frame(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("X{i}")).collect()
}

fn vector_of(path: &str, v: Vec<Rational>, n: usize) -> Result<Vec<Rational>> {
    if v.len() != n {
        return Err(Error::schema(
            path,
            format!("expected {n} components, found {}", v.len()),
        ));
    }
    Ok(v)
}

fn square(path: &str, m: Matrix, n: usize) -> Result<Matrix> {
    if m.len() != n {
        return Err(Error::schema(
            path,
            format!("expected {n} rows, found {}", m.len()),
        ));
    }
    for (i, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(Error::schema(
                format!("{path}[{i}]"),
                format!("expected {n} entries, found {}", row.len()),
            ));
        }
    }
    Ok(m)
}

/// Accepts an antisymmetric matrix or one with zero diagonal and lower triangle.
fn alternating<K>(path: &str, m: Matrix, n: usize) -> Result<Alternating<Rational, K>> {
    let m = square(path, m, n)?;
    let upper_only = (0..n).all(|i| (0..i).all(|j| m[i][j].is_zero()));
    for i in 0..n {
        if !m[i][i].is_zero() {
            return Err(Error::schema(
                format!("{path}[{i}][{i}]"),
                "diagonal entries must vanish",
            ));
        }
        for j in 0..i {
            if !upper_only && m[i][j] != -&m[j][i] {
                return Err(Error::schema(
                    format!("{path}[{i}][{j}]"),
                    "matrix is neither antisymmetric nor upper triangular",
                ));
            }
        }
    }
    Ok(Alternating::from_upper(&m))
}

fn algebra_from(doc: AlgebraDoc) -> Result<LieAlgebra> {
    let n = doc.dim;
    if n == 0 {
        return Err(Error::schema("algebra.dim", "dimension must be positive"));
    }
    let frame = doc.frame.unwrap_or_else(|| default_frame(n));
    if frame.len() != n {
        return Err(Error::schema(
            "algebra.frame",
            format!("expected {n} names, found {}", frame.len()),
        ));
    }
    let names = match doc.coframe {
        Some(c) if c.len() != n => {
            return Err(Error::schema(
                "algebra.coframe",
                format!("expected {n} names, found {}", c.len()),
            ))
        }
        Some(c) => Names::new(frame, c),
        None => Names::from_frame(frame),
    };
    let mut specs = Vec::new();
    for (p, b) in doc.brackets.into_iter().enumerate() {
        let idx = |field: &str, v: usize| {
            if v == 0 || v > n {
                Err(Error::schema(
                    format!("algebra.brackets[{p}].{field}"),
                    format!("index {v} outside 1..={n}"),
                ))
            } else {
                Ok(v - 1)
            }
        };
        let (i, j) = (idx("i", b.i)?, idx("j", b.j)?);
        let mut out = Vec::new();
        for (q, t) in b.out.into_iter().enumerate() {
            out.push((idx(&format!("out[{q}].k"), t.k)?, t.c));
        }
        specs.push(BracketSpec { i, j, out });
    }
    LieAlgebra::from_brackets(names, &specs).map_err(|e| match e {
        Error::Schema { path, message } => Error::Schema {
            path: format!("algebra.{path}"),
            message,
        },
        other => other,
    })
}

/// Parses a definition; syntax errors carry line and column, semantic errors a field path.
pub fn from_json(text: &str) -> Result<Definition> {
    let doc: DefinitionDoc = serde_json::from_str(text).map_err(|e| {
        Error::schema(
            format!("line {} column {}", e.line(), e.column()),
            e.to_string(),
        )
    })?;
    let name = doc.name;
    let label = name.clone().unwrap_or_else(|| "structure".into());
    let algebra = algebra_from(doc.algebra)?;
    let n = algebra.dim();
    let mut def = Definition::new(name, algebra.clone());
    if let Some(s) = doc.structure {
        def.structure = Some(GeneralizedParaContact::new(
            label.clone(),
            algebra.clone(),
            Endomorphism::from_matrix(square("structure.F", s.f, n)?),
            alternating("structure.pi", s.pi, n)?,
            alternating("structure.sigma", s.sigma, n)?,
            Vector(vector_of("structure.Z", s.z, n)?),
            Covector(vector_of("structure.xi", s.xi, n)?),
        )?);
    }
    if let Some(c) = doc.classical {
        def.classical = Some(AlmostParaContact::new(
            label.clone(),
            algebra.clone(),
            Endomorphism::from_matrix(square("classical.phi", c.phi, n)?),
            Vector(vector_of("classical.E", c.e, n)?),
            Covector(vector_of("classical.eta", c.eta, n)?),
        )?);
    }
    if let Some(p) = doc.paracomplex {
        def.paracomplex = Some(GeneralizedParacomplex::new(
            label,
            algebra,
            Endomorphism::from_matrix(square("paracomplex.a", p.a, n)?),
            alternating("paracomplex.pi", p.pi, n)?,
            alternating("paracomplex.theta", p.theta, n)?,
        )?);
    }
    Ok(def)
}

fn algebra_doc(alg: &LieAlgebra) -> AlgebraDoc {
    let names = alg.names();
    let frame = (names.frame != default_frame(alg.dim())).then(|| names.frame.clone());
    let coframe = (Names::from_frame(names.frame.clone()).coframe != names.coframe)
        .then(|| names.coframe.clone());
    let brackets = alg
        .bracket_specs()
        .into_iter()
        .map(|b| BracketDoc {
            i: b.i + 1,
            j: b.j + 1,
            out: b
                .out
                .into_iter()
                .map(|(k, c)| TermDoc { k: k + 1, c })
                .collect(),
        })
        .collect();
    AlgebraDoc {
        dim: alg.dim(),
        frame,
        coframe,
        brackets,
    }
}

/// Pretty-printed JSON; [`from_json`] reads it back to an equal definition.
pub fn to_json(def: &Definition) -> String {
    let doc = DefinitionDoc {
        name: def.name.clone(),
        algebra: algebra_doc(&def.algebra),
        structure: def.structure.as_ref().map(|s| StructureDoc {
            f: s.f.matrix().to_vec(),
            pi: s.pi.to_matrix(),
            sigma: s.sigma.to_matrix(),
            z: s.z.0.clone(),
            xi: s.xi.0.clone(),
        }),
        classical: def.classical.as_ref().map(|a| ClassicalDoc {
            phi: a.phi.matrix().to_vec(),
            e: a.e.0.clone(),
            eta: a.eta.0.clone(),
        }),
        paracomplex: def.paracomplex.as_ref().map(|p| ParacomplexDoc {
            a: p.a.matrix().to_vec(),
            pi: p.pi.to_matrix(),
            theta: p.theta.to_matrix(),
        }),
    };
    serde_json::to_string_pretty(&doc).expect("definition documents always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    const H3: &str = r#"{
        "name": "ex",
        "algebra": {"dim": 3, "brackets": [{"i": 1, "j": 2, "out": [{"k": 3, "c": "-1"}]}]},
        "structure": {
            "F": [[0,0,0],[0,"5/3",0],[0,0,"5/3"]],
            "pi": [[0,0,0],[0,0,"4/3"],[0,0,0]],
            "sigma": [[0,0,0],[0,0,"4/3"],[0,"-4/3",0]],
            "Z": [1,0,0],
            "xi": ["1","0","0"]
        }
    }"#;

    #[test]
    fn parses_and_round_trips() {
        let d = from_json(H3).unwrap();
        let s = d.structure.as_ref().unwrap();
        assert_eq!(s.pi.component(&[1, 2]), Rational::new(4, 3));
        assert_eq!(s.sigma.component(&[2, 1]), Rational::new(-4, 3));
        assert_eq!(d.algebra.constant(1, 0, 2), &Rational::from_integer(1));
        let again = from_json(&to_json(&d)).unwrap();
        assert_eq!(again, d);
    }

    #[test]
    fn field_paths() {
        let bad = H3.replace(r#""Z": [1,0,0]"#, r#""Z": [1,0]"#);
        assert_eq!(
            from_json(&bad).unwrap_err(),
            Error::schema("structure.Z", "expected 3 components, found 2")
        );
        let bad = H3.replace(r#"[0,"-4/3",0]"#, r#"[0,"4/3",0]"#);
        assert!(
            matches!(from_json(&bad), Err(Error::Schema { path, .. }) if path == "structure.sigma[2][1]")
        );
        let bad = H3.replace(r#""k": 3"#, r#""k": 4"#);
        assert!(
            matches!(from_json(&bad), Err(Error::Schema { path, .. }) if path == "algebra.brackets[0].out[0].k")
        );
        let bad = H3.replace("\"5/3\",0]", "\"5/0\",0]");
        assert!(
            matches!(from_json(&bad), Err(Error::Schema { path, .. }) if path.starts_with("line 5"))
        );
    }
}
