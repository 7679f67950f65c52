use serde::{Deserialize, Serialize};

use super::site_operator;
use crate::config::{Configuration, Sign, SignField};
use crate::error::{Error, Result};
use crate::lattice::{Patch, Site};
use crate::pauli::{EdgeIndex, Membership, PauliOperator, Phase, SignedStabilizerGroup};

/// The ground projector `P_Λ(f) = ∏ ½(1 + f(w) S_w)` over the interior sites
/// of a patch, held symbolically as its signed stabilizer group.
#[derive(Clone, Debug)]
pub struct ProjectorNetElement {
    patch: Patch,
    sites: Vec<Site>,
    config: Configuration,
    group: SignedStabilizerGroup,
}

impl ProjectorNetElement {
    pub fn patch(&self) -> &Patch {
        &self.patch
    }

    /// Interior sites; generator `i` is `f(sites[i]) · S_{sites[i]}`.
    pub fn sites(&self) -> &[Site] {
        &self.sites
    }

    pub fn config(&self) -> &Configuration {
        &self.config
    }

    pub fn group(&self) -> &SignedStabilizerGroup {
        &self.group
    }

    /// Number of projector factors, i.e. interior sites.
    pub fn rank_deficit(&self) -> usize {
        self.sites.len()
    }
}

/// Builds `P_Λ(f)`; `f` must give a sign at every interior site of `patch`.
pub fn projector_net<F: SignField<Site>>(patch: &Patch, f: &F) -> Result<ProjectorNetElement> {
    let sites = patch.interior_sites();
    let mut config = Configuration::default();
    let mut generators = Vec::with_capacity(sites.len());
    for w in &sites {
        let s = f.sign_at(w).ok_or(Error::MissingSite(*w))?;
        config.values.insert(*w, s);
        generators.push(site_operator(w).scaled(s.phase()));
    }
    let index = EdgeIndex::new(patch.edges.iter().copied());
    let group = SignedStabilizerGroup::with_index(index, generators)?;
    Ok(ProjectorNetElement { patch: patch.clone(), sites, config, group })
}

/// Symbolic witness of `P_Λ ≤ P_Λ'` for `Λ' ⊆ Λ`: every signed generator of
/// the smaller element is a `+1` member of the larger one's group.
pub fn ff_monotone(larger: &ProjectorNetElement, smaller: &ProjectorNetElement) -> Result<bool> {
    if !smaller.patch.is_subset(&larger.patch) {
        return Err(Error::NotNested { inner: smaller.patch.len() });
    }
    for (w, s) in &smaller.config.values {
        if let Some(t) = larger.config.get(w) {
            if t != *s {
                return Err(Error::ConfigMismatch(*w));
            }
        }
    }
    Ok(smaller.group.generators().iter().all(|g| {
        matches!(larger.group.membership(g), Membership::Member { sign, .. } if sign == Phase::ONE)
    }))
}

/// Classification of `P p P` for a Pauli `p` and a net element `P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "scalar", rename_all = "lowercase")]
pub enum CompressionResult {
    /// `p` anticommutes with a signed generator, so `P p P = 0`.
    Zero,
    /// `P p P = s · P`.
    Scalar(Phase),
    /// `p` commutes with the group but is not a multiple of a member.
    Residual,
}

impl CompressionResult {
    pub fn is_settled(&self) -> bool {
        !matches!(self, CompressionResult::Residual)
    }
}

pub fn compress(p: &PauliOperator, e: &ProjectorNetElement) -> CompressionResult {
    if !e.group.commutes_with_all(p) {
        return CompressionResult::Zero;
    }
    match e.group.membership(p) {
        // product of generators G = s·p and P G = P, so P p P = s⁻¹ P
        Membership::Member { sign, .. } => CompressionResult::Scalar(sign.inverse()),
        Membership::NotMember => CompressionResult::Residual,
    }
}

/// Convenience: the all-`+1` net element on a patch.
pub fn ground_net(patch: &Patch) -> ProjectorNetElement {
    projector_net(patch, &crate::config::ExtendedConfig::constant(Sign::Plus))
        .expect("interior stars and faces of a planar patch are independent")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::ExtendedConfig;
    use crate::lattice::{box_patch, star_edges, Vertex};
    use crate::pauli::sigma_z;
    use crate::toric::{face, star};

    #[test]
    fn generator_count_matches_interior() {
        let p = box_patch(Vertex::new(0, 0), 2).unwrap();
        let e = ground_net(&p);
        assert_eq!(e.group().len(), 9 + 16);
        assert_eq!(e.rank_deficit(), e.sites().len());
    }

    #[test]
    fn missing_site_is_an_error() {
        let p = box_patch(Vertex::new(0, 0), 1).unwrap();
        let f = Configuration::constant([Site::Vertex(Vertex::new(0, 0))], Sign::Plus);
        assert!(matches!(projector_net(&p, &f), Err(Error::MissingSite(Site::Face(_)))));
    }

    #[test]
    fn compress_examples() {
        let c = Vertex::new(0, 0);
        let p = box_patch(c, 1).unwrap();
        let f = ExtendedConfig::new(Configuration::constant([Site::Vertex(c)], Sign::Minus), Sign::Plus);
        let e = projector_net(&p, &f).unwrap();
        // the signed generator itself
        assert_eq!(compress(&star(c).scaled(Phase::MINUS_ONE), &e), CompressionResult::Scalar(Phase::ONE));
        assert_eq!(compress(&star(c), &e), CompressionResult::Scalar(Phase::MINUS_ONE));
        let faces = crate::lattice::Rect::square(c, 1).faces().collect::<Vec<_>>();
        assert_eq!(compress(&face(faces[0]).multiply(&face(faces[1])), &e), CompressionResult::Scalar(Phase::ONE));
        assert_eq!(compress(&sigma_z(star_edges(c)[0]), &e), CompressionResult::Zero);
        // boundary edge not adjacent to the centre: commutes with everything interior
        let edge = crate::lattice::Edge::horizontal(-1, 1);
        assert_eq!(compress(&sigma_z(edge), &e), CompressionResult::Residual);
    }

    #[test]
    fn monotone_and_mismatch() {
        let c = Vertex::new(0, 0);
        let small = ground_net(&box_patch(c, 1).unwrap());
        let big = ground_net(&box_patch(c, 2).unwrap());
        assert!(ff_monotone(&big, &small).unwrap());
        assert!(ff_monotone(&small, &small).unwrap());
        assert!(ff_monotone(&small, &big).is_err());
        let flipped = ExtendedConfig::new(Configuration::constant([Site::Vertex(c)], Sign::Minus), Sign::Plus);
        let small_f = projector_net(&box_patch(c, 1).unwrap(), &flipped).unwrap();
        assert_eq!(ff_monotone(&big, &small_f), Err(Error::ConfigMismatch(Site::Vertex(c))));
    }
}
