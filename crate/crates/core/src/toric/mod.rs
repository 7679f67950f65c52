//! The toric code on the infinite plane: star and face operators, signed
//! frustration-free projector nets, local topological order, the symmetries
//! that flip a single site, and the structure of excitations.

mod excitation;
mod expectation;
mod ltqo;
mod net;
mod nolift;
mod symmetry;

pub use excitation::{excitation_operator, excitation_operator_routed, path_independence};
pub use expectation::{conditional_expectation, StabilizerPolynomial};
pub use ltqo::{ltqo_radius, omega_f, GrowthConfig, LtqoCertificate, TermCertificate};
pub use net::{compress, ff_monotone, ground_net, projector_net, CompressionResult, ProjectorNetElement};
pub use nolift::{no_lift_certificate, NoLiftReport};
pub use symmetry::{stabilization_length, symmetry_ribbon, transport_check, truncated_symmetry, TransportReport};

use crate::lattice::{face_edges, star_edges, Face, Site, Vertex};
use crate::pauli::PauliOperator;

/// `A_v = ∏_{e ∋ v} σˣ_e`.
pub fn star(v: Vertex) -> PauliOperator {
    PauliOperator::x_string(star_edges(v))
}

/// `B_f = ∏_{e ∈ f} σᶻ_e`.
pub fn face(f: Face) -> PauliOperator {
    PauliOperator::z_string(face_edges(f))
}

/// `S_w`: the star at a vertex or the face operator at a face.
pub fn site_operator(w: &Site) -> PauliOperator {
    match w {
        Site::Vertex(v) => star(*v),
        Site::Face(f) => face(*f),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{l_dual_path, Rect, Routing};
    use crate::pauli::{full_syndrome, ribbon_x};

    #[test]
    fn stars_and_faces_are_commuting_involutions() {
        let rect = Rect::new(-2, -2, 2, 2);
        let ops: Vec<PauliOperator> =
            rect.vertices().map(star).chain(rect.faces().map(face)).collect();
        for a in &ops {
            assert!(a.multiply(a).is_identity());
            assert!(a.is_hermitian());
            assert_eq!(a.weight(), 4);
            for b in &ops {
                assert!(a.commutes(b));
            }
        }
    }

    #[test]
    fn dual_ribbon_flips_end_faces() {
        let a = Face::new(-1, 0);
        let b = Face::new(2, 3);
        let r = ribbon_x(&l_dual_path(a, b, Routing::HorizontalFirst).unwrap()).unwrap();
        assert_eq!(full_syndrome(&r), vec![Site::Face(a), Site::Face(b)]);
    }
}
