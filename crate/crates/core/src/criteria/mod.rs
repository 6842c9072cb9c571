//! Constructive compactness criteria for finite families of step functions.
//!
//! The pieces fit together as follows. [`chong_majorant`] builds one
//! positive `g` whose orbit contains the whole family, [`construct_n_function`]
//! turns any integrable function into an N-function `G` with a finite
//! modular bound, and [`dvp_certificate`] chains the two so that a single
//! `G` bounds the modular of every member. [`summable_scaler`] is the
//! reweighting of a summable sequence used inside the N-function construction.

mod family;
mod fixtures;
mod majorant;
mod nfunction;
mod reports;
mod scaler;

pub use family::FunctionFamily;
pub use fixtures::{standard_fixtures, Fixtures};
pub use majorant::{
    chong_majorant, chong_majorant_infinite, chong_majorant_infinite_with_ceiling, chong_majorant_with_floor,
    convex_transfer_check, dvp_certificate, ChongMajorant, DvpCertificate, InfiniteChongMajorant,
    DEFAULT_FLOOR_LOG2, DEFAULT_TAIL_CEILING_LOG2,
};
pub use nfunction::{construct_n_function, LevelSet, NFunctionConstruction};
pub use reports::{
    equi_abs_continuity_report, tail_decay_check, uniform_integrability_report, EquiRow, NormKind, UiRow,
};
pub use scaler::{summable_scaler, ScalerResult, SequenceTail, SummableSequence, Thresholds};
