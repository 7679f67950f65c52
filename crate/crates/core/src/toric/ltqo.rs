use num_traits::Zero;

use super::net::{compress, projector_net, CompressionResult};
use crate::config::ExtendedConfig;
use crate::error::{Error, Result};
use crate::lattice::{Patch, Rect, Vertex};
use crate::pauli::{PauliOperator, PauliSum};
use crate::scalar::Gaussian;

/// Growth schedule for the boxes `Δ`: concentric rectangles around the
/// support, one ring per step, at most `cap` rings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrowthConfig {
    pub cap: u32,
}

impl Default for GrowthConfig {
    fn default() -> Self {
        Self { cap: 10 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermCertificate {
    /// The Pauli term with phase one; its phase lives in `coefficient`.
    pub operator: PauliOperator,
    pub coefficient: Gaussian,
    pub classification: CompressionResult,
}

/// A box `Δ` on which `P_Δ(f) X P_Δ(f) = value · P_Δ(f)` holds exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LtqoCertificate {
    pub rect: Rect,
    pub patch: Patch,
    /// Rings added around the starting rectangle.
    pub rings: u32,
    pub terms: Vec<TermCertificate>,
    pub value: Gaussian,
}

/// Grows `Δ` until every Pauli term of `x` compresses to zero or a scalar.
///
/// The first box is the bounding rectangle of `region` together with the
/// support of `x`; each further step adds one ring.
pub fn ltqo_radius(x: &PauliSum, region: &Patch, f: &ExtendedConfig, growth: GrowthConfig) -> Result<LtqoCertificate> {
    let start = Rect::bounding_edges(region.edges.iter().chain(x.support().iter()))
        .unwrap_or_else(|| Rect::point(Vertex::new(0, 0)));
    let mut residual = x.len();
    for rings in 0..=growth.cap {
        let rect = start.inflate(rings as i64);
        let patch = Patch::from_rect(rect);
        let net = projector_net(&patch, f)?;
        let terms: Vec<TermCertificate> = x
            .terms()
            .map(|(p, c)| TermCertificate {
                operator: p.clone(),
                coefficient: *c,
                classification: compress(p, &net),
            })
            .collect();
        residual = terms.iter().filter(|t| !t.classification.is_settled()).count();
        if residual == 0 {
            let value = terms
                .iter()
                .map(|t| match t.classification {
                    CompressionResult::Scalar(s) => t.coefficient * s.to_gaussian(),
                    _ => Gaussian::zero(),
                })
                .fold(Gaussian::zero(), |a, b| a + b);
            return Ok(LtqoCertificate { rect, patch, rings, terms, value });
        }
    }
    Err(Error::GrowthCapExceeded { cap: growth.cap, residual })
}

/// Value of the unique pure extension of the evaluation state at `f` on a
/// finitely supported Pauli: `0` or a phase.
pub fn omega_f(p: &PauliOperator, f: &ExtendedConfig, growth: GrowthConfig) -> Result<Gaussian> {
    Ok(ltqo_radius(&PauliSum::from(p.clone()), &Patch::default(), f, growth)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{Configuration, Sign};
    use crate::lattice::{box_patch, l_path, Edge, Routing, Site};
    use crate::pauli::{ribbon_z, sigma_z, Phase};
    use crate::scalar::gaussian;
    use crate::toric::star;

    #[test]
    fn generator_settles_immediately() {
        let v = Vertex::new(2, 2);
        let f = ExtendedConfig::new(Configuration::constant([Site::Vertex(v)], Sign::Minus), Sign::Plus);
        let cert = ltqo_radius(&star(v).into(), &Patch::default(), &f, GrowthConfig::default()).unwrap();
        assert_eq!(cert.rings, 0);
        assert_eq!(cert.patch, box_patch(v, 1).unwrap());
        assert_eq!(cert.value, gaussian(-1, 0));
    }

    #[test]
    fn single_edge_needs_one_ring() {
        let e = Edge::horizontal(0, 0);
        let cert = ltqo_radius(&sigma_z(e).into(), &Patch::default(), &ExtendedConfig::ones(), GrowthConfig::default())
            .unwrap();
        assert_eq!(cert.rings, 1);
        assert_eq!(cert.terms[0].classification, CompressionResult::Zero);
        assert!(cert.value.is_zero());
    }

    #[test]
    fn open_ribbon_is_zero() {
        let r = ribbon_z(&l_path(Vertex::new(0, 0), Vertex::new(2, 1), Routing::HorizontalFirst).unwrap()).unwrap();
        let cert = ltqo_radius(&r.into(), &Patch::default(), &ExtendedConfig::ones(), GrowthConfig::default()).unwrap();
        assert_eq!(cert.terms[0].classification, CompressionResult::Zero);
    }

    #[test]
    fn cap_is_reported() {
        let e = Edge::horizontal(0, 0);
        let err = ltqo_radius(&sigma_z(e).into(), &Patch::default(), &ExtendedConfig::ones(), GrowthConfig { cap: 0 });
        assert_eq!(err, Err(Error::GrowthCapExceeded { cap: 0, residual: 1 }));
    }

    #[test]
    fn omega_tracks_phase() {
        let v = Vertex::new(0, 0);
        let p = star(v).scaled(Phase::I);
        assert_eq!(omega_f(&p, &ExtendedConfig::ones(), GrowthConfig::default()).unwrap(), gaussian(0, 1));
        assert_eq!(omega_f(&PauliOperator::identity(), &ExtendedConfig::ones(), GrowthConfig::default()).unwrap(), gaussian(1, 0));
    }
}
