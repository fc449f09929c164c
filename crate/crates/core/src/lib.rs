//! Mod-2 characteristic-number calculus over Dold manifolds `P(h,i)` and
//! real projective spaces.
//!
//! The layers build on each other:
//!
//! * [`ring`]: truncated graded polynomial rings over GF(2) and their classes.
//! * [`manifold`], [`bundle`]: cohomology of `P(h,i)` and `RP^n`, bundles as
//!   total Stiefel-Whitney classes.
//! * [`projective`]: projectivized bundles and the pushforward to the base.
//! * [`obstruction`]: fixed-data characteristic numbers for involutions
//!   fixing `RP^odd ⊔ P(h,i)`.
//! * [`constraints`]: the arithmetic admissibility conditions and an
//!   enumerator over parameter ranges.
//! * [`dsl`], [`verify`]: an expression language for classes and the
//!   verification suites behind the `charnum` CLI.

pub mod binom;
pub mod bundle;
pub mod constraints;
pub mod dsl;
pub mod error;
pub mod manifold;
pub mod obstruction;
pub mod projective;
pub mod ring;
pub mod verify;

pub use binom::lucas;
pub use bundle::{
    bundle_named, bundle_standard, rp_side_bundle, stably_equal, whitney_sum, Bundle, DualClass,
    NamedBundle,
};
pub use error::{Error, Result};
pub use manifold::{dold_manifold, real_projective, Manifold, ManifoldKind};
pub use projective::{projectivize, ProjBundle};
pub use ring::{neg_pow_expand, ClassPoly, GeneratorSpec, Monomial, Ring, RingSpec};
pub use verify::{run_suite, suite_output, Suite, SuiteOutput, SuiteParams, VerificationReport};
