//! The boundary group acting on sign configurations, cylinder calculus, and
//! the dyadic invariant of the resulting groupoid.

pub mod cylinder;
pub mod dyadic;
pub mod gamma;
pub mod invariant;

pub use cylinder::{act, Act, ClassReduction, CylinderFunction, CylinderSet, FlipPattern, KeyFlip, MAX_KEYS};
pub use dyadic::Dyadic;
pub use gamma::{
    boundary, freeness_check, orbit_reach, ribbon_to_gamma, solve_boundary, word_operator, BoundaryPattern, GammaElement,
};
pub use invariant::{invariant_triple, DiagonalModel, InvariantOptions, InvariantReport, SampleRecord, TripleData};
