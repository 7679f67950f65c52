//! Exact Pauli-group algebra over finite edge supports.

mod operator;
mod phase;
pub mod stabilizer;
mod sum;
mod syndrome;

pub use operator::{ribbon_x, ribbon_z, sigma_x, sigma_y, sigma_z, PauliKind, PauliOperator};
pub use phase::Phase;
pub use stabilizer::{EdgeIndex, Membership, PackedPauli, SignedStabilizerGroup};
pub use sum::PauliSum;
pub use syndrome::{anticommutes_with_site, full_syndrome, solve_syndrome, syndrome, SyndromeSolution};

/// Free-function form of [`PauliOperator::multiply`].
pub fn multiply(p: &PauliOperator, q: &PauliOperator) -> PauliOperator {
    p.multiply(q)
}

/// Free-function form of [`PauliOperator::commutes`].
pub fn commutes(p: &PauliOperator, q: &PauliOperator) -> bool {
    p.commutes(q)
}

/// Free-function form of [`SignedStabilizerGroup::membership`].
pub fn membership(p: &PauliOperator, g: &SignedStabilizerGroup) -> Membership {
    g.membership(p)
}
