//! Closed-form zeta functions of supersingular genus-2 curves
//! `y^2 + y = a x^5 + b x^3 + c x + d` over `F_{2^m}`, their
//! isomorphism-class census, and a brute-force oracle to check both.

pub mod census;
pub mod error;
pub mod factorclass;
pub mod gf2;
pub mod invariants;
pub mod linalg;
pub mod oracle;
pub mod report;
pub mod sscurve;
pub mod zeta;

pub use census::{ClassRep, EmptyReason, FindResult, IsogenyClassInfo, IsogenyKind};
pub use error::{Error, Result};
pub use factorclass::{FactorShape, RadicalData};
pub use gf2::{Fe, Fe2, FieldCtx, QuadFactor};
pub use invariants::{InvariantData, Sign};
pub use sscurve::{Curve, IsoWitness};
pub use zeta::ZetaData;
