use std::collections::BTreeSet;
use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use super::Phase;
use crate::error::{Error, Result};
use crate::lattice::{Edge, LatticePath, PathKind};

/// Which single-edge Pauli a letter denotes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PauliKind {
    X,
    Z,
}

/// A finitely supported Pauli operator `phase · X(x_support) · Z(z_support)`.
///
/// The Z factors act first. An edge in both supports carries `σˣσᶻ = -iσʸ`,
/// so `σʸ` itself is `i · X(e) Z(e)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PauliOperator {
    pub x_support: BTreeSet<Edge>,
    pub z_support: BTreeSet<Edge>,
    pub phase: Phase,
}

fn sym_diff(a: &BTreeSet<Edge>, b: &BTreeSet<Edge>) -> BTreeSet<Edge> {
    a.symmetric_difference(b).copied().collect()
}

fn overlap(a: &BTreeSet<Edge>, b: &BTreeSet<Edge>) -> usize {
    if a.len() <= b.len() {
        a.iter().filter(|e| b.contains(e)).count()
    } else {
        b.iter().filter(|e| a.contains(e)).count()
    }
}

impl PauliOperator {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn new<X, Z>(x: X, z: Z, phase: Phase) -> Self
    where
        X: IntoIterator<Item = Edge>,
        Z: IntoIterator<Item = Edge>,
    {
        Self { x_support: x.into_iter().collect(), z_support: z.into_iter().collect(), phase }
    }

    pub fn x_string<I: IntoIterator<Item = Edge>>(edges: I) -> Self {
        Self::new(edges, [], Phase::ONE)
    }

    pub fn z_string<I: IntoIterator<Item = Edge>>(edges: I) -> Self {
        Self::new([], edges, Phase::ONE)
    }

    pub fn single(kind: PauliKind, e: Edge) -> Self {
        match kind {
            PauliKind::X => sigma_x(e),
            PauliKind::Z => sigma_z(e),
        }
    }

    pub fn with_phase(mut self, phase: Phase) -> Self {
        self.phase = phase;
        self
    }

    pub fn scaled(mut self, phase: Phase) -> Self {
        self.phase *= phase;
        self
    }

    pub fn is_identity(&self) -> bool {
        self.x_support.is_empty() && self.z_support.is_empty() && self.phase == Phase::ONE
    }

    /// True when the supports are empty, whatever the phase.
    pub fn is_scalar(&self) -> bool {
        self.x_support.is_empty() && self.z_support.is_empty()
    }

    pub fn support(&self) -> BTreeSet<Edge> {
        self.x_support.union(&self.z_support).copied().collect()
    }

    pub fn weight(&self) -> usize {
        self.x_support.len() + self.z_support.len() - overlap(&self.x_support, &self.z_support)
    }

    /// Same supports with phase one; the key under which sums store a term.
    pub fn unphased(&self) -> Self {
        Self { x_support: self.x_support.clone(), z_support: self.z_support.clone(), phase: Phase::ONE }
    }

    pub fn multiply(&self, other: &Self) -> Self {
        // (a X₁Z₁)(b X₂Z₂) = ab (-1)^{|Z₁∩X₂|} X₁X₂ Z₁Z₂
        let swap = overlap(&self.z_support, &other.x_support) % 2 == 1;
        Self {
            x_support: sym_diff(&self.x_support, &other.x_support),
            z_support: sym_diff(&self.z_support, &other.z_support),
            phase: self.phase * other.phase * Phase::sign(swap),
        }
    }

    pub fn commutes(&self, other: &Self) -> bool {
        (overlap(&self.x_support, &other.z_support) + overlap(&self.z_support, &other.x_support)).is_multiple_of(2)
    }

    pub fn inverse(&self) -> Self {
        // (a X Z)⁻¹ = a⁻¹ Z X = a⁻¹ (-1)^{|X∩Z|} X Z
        let odd = overlap(&self.x_support, &self.z_support) % 2 == 1;
        Self {
            x_support: self.x_support.clone(),
            z_support: self.z_support.clone(),
            phase: self.phase.inverse() * Phase::sign(odd),
        }
    }

    pub fn adjoint(&self) -> Self {
        self.inverse()
    }

    pub fn is_hermitian(&self) -> bool {
        *self == self.adjoint()
    }

    /// `u · self · u⁻¹`.
    pub fn conjugated_by(&self, u: &Self) -> Self {
        u.multiply(self).multiply(&u.inverse())
    }

    pub fn product<'a, I: IntoIterator<Item = &'a PauliOperator>>(ops: I) -> Self {
        ops.into_iter().fold(Self::identity(), |acc, p| acc.multiply(p))
    }
}

impl Mul for &PauliOperator {
    type Output = PauliOperator;

    fn mul(self, rhs: &PauliOperator) -> PauliOperator {
        self.multiply(rhs)
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.phase)?;
        for e in &self.x_support {
            write!(f, " X{e}")?;
        }
        for e in &self.z_support {
            write!(f, " Z{e}")?;
        }
        Ok(())
    }
}

pub fn sigma_x(e: Edge) -> PauliOperator {
    PauliOperator::new([e], [], Phase::ONE)
}

pub fn sigma_z(e: Edge) -> PauliOperator {
    PauliOperator::new([], [e], Phase::ONE)
}

pub fn sigma_y(e: Edge) -> PauliOperator {
    PauliOperator::new([e], [e], Phase::I)
}

/// `∏_{e∈ρ} σᶻ_e` along a direct path.
pub fn ribbon_z(path: &LatticePath) -> Result<PauliOperator> {
    if path.kind() != PathKind::Direct {
        return Err(Error::WrongPathKind { expected: PathKind::Direct });
    }
    Ok(PauliOperator::z_string(path.edges().iter().copied()))
}

/// `∏ σˣ_e` over the edges crossed by a dual path.
pub fn ribbon_x(path: &LatticePath) -> Result<PauliOperator> {
    if path.kind() != PathKind::Dual {
        return Err(Error::WrongPathKind { expected: PathKind::Dual });
    }
    Ok(PauliOperator::x_string(path.edges().iter().copied()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{l_dual_path, l_path, Face, Routing, Vertex};

    #[test]
    fn single_edge_products() {
        let e = Edge::horizontal(0, 0);
        assert!(sigma_x(e).multiply(&sigma_x(e)).is_identity());
        assert!(sigma_z(e).multiply(&sigma_z(e)).is_identity());
        let xz = sigma_x(e).multiply(&sigma_z(e));
        assert_eq!(xz, PauliOperator::new([e], [e], Phase::ONE));
        // Z X = -X Z
        assert_eq!(sigma_z(e).multiply(&sigma_x(e)), xz.clone().scaled(Phase::MINUS_ONE));
        // Y = i X Z is Hermitian and squares to one, X Z is not Hermitian
        assert!(sigma_y(e).is_hermitian());
        assert!(sigma_y(e).multiply(&sigma_y(e)).is_identity());
        assert!(!xz.is_hermitian());
    }

    #[test]
    fn disjoint_supports_commute() {
        let e = Edge::horizontal(0, 0);
        let f = Edge::vertical(0, 0);
        assert!(!sigma_x(e).commutes(&sigma_z(e)));
        assert!(sigma_x(e).commutes(&sigma_z(f)));
    }

    #[test]
    fn inverse_is_two_sided() {
        let e = Edge::horizontal(0, 0);
        let f = Edge::vertical(1, 0);
        let p = PauliOperator::new([e, f], [e], Phase::I);
        assert!(p.multiply(&p.inverse()).is_identity());
        assert!(p.inverse().multiply(&p).is_identity());
    }

    #[test]
    fn ribbons_reject_wrong_kind() {
        let d = l_path(Vertex::new(0, 0), Vertex::new(2, 1), Routing::HorizontalFirst).unwrap();
        let dd = l_dual_path(Face::new(0, 0), Face::new(2, 1), Routing::HorizontalFirst).unwrap();
        assert!(ribbon_x(&d).is_err());
        assert!(ribbon_z(&dd).is_err());
        let single = LatticePath::direct(vec![Vertex::new(0, 0), Vertex::new(1, 0)]).unwrap();
        assert_eq!(ribbon_z(&single).unwrap(), sigma_z(Edge::horizontal(0, 0)));
        assert!(ribbon_z(&d).unwrap().multiply(&ribbon_z(&d).unwrap()).is_identity());
    }

    #[test]
    fn crossing_ribbons_pick_up_intersection_sign() {
        // a horizontal direct path crossed by a vertical dual path
        let rho = l_path(Vertex::new(-2, 0), Vertex::new(3, 0), Routing::HorizontalFirst).unwrap();
        for (top, crossings) in [(1, 1), (-3, 0)] {
            let dual = l_dual_path(Face::new(0, -2), Face::new(0, top), Routing::VerticalFirst).unwrap();
            let fz = ribbon_z(&rho).unwrap();
            let fx = ribbon_x(&dual).unwrap();
            let shared = fz.z_support.intersection(&fx.x_support).count();
            assert_eq!(shared, crossings);
            assert_eq!(fz.multiply(&fx), fx.multiply(&fz).scaled(Phase::sign(shared % 2 == 1)));
        }
    }
}
