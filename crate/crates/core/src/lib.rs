//! Eccentric distance sum laboratory for trees.
//!
//! Exact invariants, domination and matching numbers, named tree families,
//! EDS-monotone transformations, exhaustive enumeration of free trees and a
//! verification harness that checks extremal claims against enumeration.

pub mod enumeration;
pub mod error;
pub mod families;
pub mod formulas;
pub mod harness;
pub mod formats;
pub mod invariants;
pub mod params;
pub mod transform;
pub mod tree;

pub use enumeration::{canonical_code, isomorphic, CanonicalCode, ConstraintSpec, FreeTrees};
pub use error::{Error, Result};
pub use invariants::{eds, Invariant, InvariantRecord};
pub use params::{domination_number, matching_number};
pub use tree::{Tree, VertexVector};
pub use families::FamilySpec;
pub use formulas::{Evaluation, FormulaId, Variant, Winner};
pub use transform::{Relation, TransformOp, TransformOutcome};
pub use harness::{TheoremId, Verdict, VerificationReport, Verifier};
