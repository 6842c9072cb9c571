//! Exact decreasing rearrangements, Hardy–Littlewood–Pólya submajorization,
//! Orlicz modulars and norms, concave majorants, and constructive weak
//! compactness certificates for piecewise functions on `(0, 1)` and `(0, ∞)`.
//!
//! All computations use exact rationals. Quantities with irrational values
//! (Luxemburg norms, fundamental functions) are returned as certified
//! enclosures.
//!
//! ```
//! use rearr::prelude::*;
//!
//! let f = StepFunction::indicator(Domain::HalfLine, int(3), int(4)).unwrap();
//! let g = DecreasingTailFunction::plateau_with_tail(int(1), int(1), int(1), 2).unwrap();
//! assert!(submajorizes(&g, &f).unwrap());
//! ```

mod error;

pub mod cli;
pub mod criteria;
pub mod document;
pub mod envelope;
pub mod orlicz;
pub mod piecewise;
pub mod rational;
pub mod rearrangement;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::criteria::{
        chong_majorant, chong_majorant_infinite, construct_n_function, convex_transfer_check, dvp_certificate,
        equi_abs_continuity_report, standard_fixtures, summable_scaler, tail_decay_check,
        uniform_integrability_report, FunctionFamily, NormKind, SequenceTail, SummableSequence,
    };
    pub use crate::envelope::{derivative_step, least_concave_majorant, marcinkiewicz_norm, ConcaveMajorant};
    pub use crate::orlicz::{
        fundamental_function, luxemburg_norm, modular, young_conjugate, young_inequality_check, Density,
        NormEnclosure, OrliczFunction,
    };
    pub use crate::piecewise::{
        dominates_everywhere, DecreasingTailFunction, Domain, Integrand, PartialIntegral, Piece,
        PiecewiseAffineFunction, PowerTail, StepFunction,
    };
    pub use crate::rational::{int, pow2, rat, Extended, Rational};
    pub use crate::rearrangement::{
        decreasing_rearrangement, distribution_function, majorizes, orbit_contains, submajorizes,
    };
    pub use crate::{Error, Result};
}
