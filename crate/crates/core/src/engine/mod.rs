//! The constructive coloring pipeline.
//!
//! `color_equitably` chains the pieces: derive `(k, q, r)`, write |A| in
//! normalized form `xq + u + M`, pick the number `t` of mixed classes, then
//! build the cover in three steps (A-pure classes, greedy mixed classes with
//! rebalancing, B-pure remainder).

mod constants;
mod cover;
mod driver;
mod feasibility;
mod normalize;
mod params;
mod split;

pub use constants::{compute_constants, hypotheses_hold, hypotheses_hold_for, ConstantsResult};
pub use cover::{
    build_mixed_classes, construct_cover, cover_pure, rebalance, ClassKind, ColorClass,
    Construction, Cover, MixedClasses,
};
pub use driver::{choose_t, color_equitably, Colored, Mode, Outcome};
pub use feasibility::{feasibility, FeasibilityReport};
pub use normalize::{normalize, Branch, NormalizationTrace, NormalizedForm};
pub use params::{derive_parameters, BaseParameters, ColoringParameters};
pub use split::{split, SplitVector};

use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("maximum degree {delta} is below 2")]
    DegreeTooSmall { delta: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("cannot split {m} into {t} parts of at most {h}")]
    InfeasibleSplit { m: usize, t: usize, h: i64 },
    #[error("{len} vertices cannot form {count_big} classes of size {} plus classes of size {q}", .q + 1)]
    SizeMismatch {
        len: usize,
        count_big: usize,
        q: usize,
    },
    #[error("zeta = {0} must exceed 41/2")]
    ZetaTooSmall(Rational),
}
