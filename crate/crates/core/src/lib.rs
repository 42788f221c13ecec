//! Exact verification of generalized almost para-contact structures on Lie
//! algebras: invariant tensor calculus over the rationals and the split-complex
//! numbers, Courant brackets, normality criteria, eigenbundles and closure.
//!
//! Geometry on a Lie group is modeled by left-invariant tensors, so every
//! operator reduces to finite linear algebra on the structure constants.

pub mod algebroid;
pub mod calculus;
pub mod catalog;
pub mod classical;
pub mod error;
pub mod lie;
pub mod linalg;
pub mod render;
pub mod report;
pub mod scalar;
pub mod schema;
pub mod structures;
pub mod tensor;

pub use num_traits::{One, Zero};

pub use algebroid::{
    bialgebroid_check, classify, classify_detailed, closure_check, eigenbundles, isotropy_check,
    z_invariance_check, BundleLabel, Classification, Closure, Eigenbundles, SplitSection,
    SubbundleSpan,
};
pub use calculus::{
    courant, courant_axioms, dorfman, flat, gen_nijenhuis, koszul, lie_derivative, nij_triple,
    nijenhuis_endo, pairing, sharp,
};
pub use classical::{check_apc, check_normal, lift_to_generalized, product_j, AlmostParaContact};
pub use error::{Error, Result};
pub use lie::{
    central_extension, chevalley_d, validate_context, BracketSpec, ExtendedAlgebra, LieAlgebra,
};
pub use render::{Names, Render};
pub use report::{CheckReport, ConditionResult, Witness};
pub use scalar::{hyperbolic_point, HyperbolicPoint, Rational, Scalar, SplitComplex};
pub use schema::{from_json, to_json, Definition};
pub use structures::{
    adapted_lift, check_def1, check_integrability, normality_thm31, normality_thm32,
    GeneralizedParaContact, GeneralizedParacomplex,
};
pub use tensor::{
    Covector, Endomorphism, Form, GeneralizedEndomorphism, GeneralizedSection, Multivector, Tensor,
    Vector,
};
