use serde::Serialize;

use super::net::{ground_net, projector_net};
use crate::config::Configuration;
use crate::error::Result;
use crate::lattice::{straight_path, Patch, Rect, Site};
use crate::pauli::{ribbon_x, ribbon_z, PauliOperator};

/// The length-`n` ribbon along the rightward straight path from `w`:
/// a Z-string for a vertex, an X-string across the dual path for a face.
pub fn symmetry_ribbon(w: Site, n: usize) -> Result<PauliOperator> {
    let path = straight_path(w, n)?;
    match w {
        Site::Vertex(_) => ribbon_z(&path),
        Site::Face(_) => ribbon_x(&path),
    }
}

/// `F p F` for the truncated ribbon `F` of length `n` starting at `w`.
///
/// Conjugation flips the sign of `S_w` and of the site at the far end of the
/// ribbon and fixes every other `S_{w'}`; once the far end has left the
/// region of interest the result no longer depends on `n`.
pub fn truncated_symmetry(w: Site, n: usize, p: &PauliOperator) -> Result<PauliOperator> {
    Ok(p.conjugated_by(&symmetry_ribbon(w, n)?))
}

/// Smallest ribbon length whose far end lies to the right of `rect`.
pub fn stabilization_length(w: Site, rect: &Rect) -> usize {
    (rect.x1 - w.anchor().x + 1).max(1) as usize
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransportReport {
    pub flipped: Vec<Site>,
    pub generators: usize,
    /// Sites whose signed generator was not carried onto the unsigned one.
    pub mismatches: Vec<Site>,
}

impl TransportReport {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Conjugates every signed generator of `P_Λ(f)` by the composition of the
/// single-site symmetries over the sites where `f = −1`, and checks that the
/// result is the matching generator of `P_Λ(1)`.
pub fn transport_check(patch: &Patch, f: &Configuration) -> Result<TransportReport> {
    let signed = projector_net(patch, f)?;
    let plain = ground_net(patch);
    let rect = patch.bounding_rect().unwrap_or_else(|| Rect::point(crate::lattice::Vertex::new(0, 0)));
    let flipped: Vec<Site> = signed.config().minus_set();
    let mut u = PauliOperator::identity();
    for w in &flipped {
        u = u.multiply(&symmetry_ribbon(*w, stabilization_length(*w, &rect))?);
    }
    let mismatches = signed
        .group()
        .generators()
        .iter()
        .zip(plain.group().generators())
        .zip(signed.sites())
        .filter(|((g, h), _)| g.conjugated_by(&u) != **h)
        .map(|(_, w)| *w)
        .collect();
    Ok(TransportReport { flipped, generators: signed.sites().len(), mismatches })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Sign;
    use crate::lattice::{box_patch, Face, Vertex};
    use crate::pauli::Phase;
    use crate::toric::site_operator;

    #[test]
    fn flips_own_site_only() {
        let rect = Rect::new(-3, -3, 3, 3);
        let sites: Vec<Site> = rect.vertices().map(Site::Vertex).chain(rect.faces().map(Site::Face)).collect();
        for w in [Site::Vertex(Vertex::new(0, 1)), Site::Face(Face::new(-1, 0))] {
            let n = stabilization_length(w, &rect);
            for w2 in &sites {
                let s = site_operator(w2);
                let expected = if w2 == &w { s.clone().scaled(Phase::MINUS_ONE) } else { s.clone() };
                assert_eq!(truncated_symmetry(w, n, &s).unwrap(), expected, "{w} on {w2}");
            }
        }
    }

    #[test]
    fn short_ribbon_also_flips_far_end() {
        let v = Vertex::new(0, 0);
        let far = site_operator(&Site::Vertex(v.offset(2, 0)));
        assert_eq!(truncated_symmetry(Site::Vertex(v), 2, &far).unwrap(), far.clone().scaled(Phase::MINUS_ONE));
        assert_eq!(truncated_symmetry(Site::Vertex(v), 3, &far).unwrap(), far);
    }

    #[test]
    fn transport_on_box() {
        let p = box_patch(Vertex::new(0, 0), 2).unwrap();
        let f = Configuration::new(
            p.interior_sites().into_iter().enumerate().map(|(i, w)| (w, Sign::from_bool_minus(i % 3 == 0))).collect(),
        );
        let report = transport_check(&p, &f).unwrap();
        assert!(report.holds(), "{report:?}");
        assert!(!report.flipped.is_empty());
    }
}
