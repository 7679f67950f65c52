//! The group `Γ` of finitely supported edge labelings, its boundary map into
//! sign patterns on sites, and the resulting action on configurations.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::cylinder::{Act, CylinderSet, FlipPattern};
use crate::config::{Configuration, Sign};
use crate::error::{Error, Result};
use crate::lattice::{l_dual_path, l_path, Edge, Face, Rect, Routing, Site, Vertex};
use crate::pauli::{PauliKind, PauliOperator};

/// `γ : E_x ∪ E_z → ℤ₂`, stored as the two sets where `γ = −1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GammaElement {
    pub x_part: BTreeSet<Edge>,
    pub z_part: BTreeSet<Edge>,
}

impl GammaElement {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn generator(kind: PauliKind, e: Edge) -> Self {
        let mut g = Self::identity();
        match kind {
            PauliKind::X => g.x_part.insert(e),
            PauliKind::Z => g.z_part.insert(e),
        };
        g
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self {
            x_part: self.x_part.symmetric_difference(&other.x_part).copied().collect(),
            z_part: self.z_part.symmetric_difference(&other.z_part).copied().collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.x_part.is_empty() && self.z_part.is_empty()
    }
}

/// `∂γ`: the finite set of sites where the boundary pattern is `−1`.
/// Both its vertex part and its face part have even size.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct BoundaryPattern {
    flips: BTreeSet<Site>,
}

impl BoundaryPattern {
    pub fn new(flips: BTreeSet<Site>) -> Result<Self> {
        let vertices = flips.iter().filter(|w| w.is_vertex()).count();
        if vertices % 2 == 1 {
            return Err(Error::OddParity("vertices"));
        }
        if (flips.len() - vertices) % 2 == 1 {
            return Err(Error::OddParity("faces"));
        }
        Ok(Self { flips })
    }

    pub fn identity() -> Self {
        Self::default()
    }

    pub fn value(&self, w: &Site) -> Sign {
        Sign::from_bool_minus(self.flips.contains(w))
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self { flips: self.flips.symmetric_difference(&other.flips).copied().collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.flips.is_empty()
    }
}

impl FlipPattern<Site> for BoundaryPattern {
    fn flips(&self) -> &BTreeSet<Site> {
        &self.flips
    }
}

/// `∂γ(v) = ∏_{e ∋ v} γ(z, e)`, `∂γ(f) = ∏_{e ∈ f} γ(x, e)`.
pub fn boundary(gamma: &GammaElement) -> BoundaryPattern {
    let mut flips = BTreeSet::new();
    let mut toggle = |w: Site| {
        if !flips.remove(&w) {
            flips.insert(w);
        }
    };
    for e in &gamma.z_part {
        for v in e.endpoints() {
            toggle(Site::Vertex(v));
        }
    }
    for e in &gamma.x_part {
        for f in e.faces() {
            toggle(Site::Face(f));
        }
    }
    BoundaryPattern { flips }
}

/// A `γ` whose boundary restricted to the keys of `target` is `target`.
///
/// Vertices to flip are paired in order with L-shaped direct paths (the
/// z-part); with an odd count the last one is routed to the corner just
/// below-left of the keys' bounding box grown by one ring, which lies outside
/// that box. Faces are handled the same way with dual paths (the x-part).
pub fn solve_boundary(target: &BTreeMap<Site, Sign>) -> GammaElement {
    let flips: Vec<Site> = target.iter().filter(|(_, s)| s.is_minus()).map(|(w, _)| *w).collect();
    let vertices: Vec<Vertex> = flips
        .iter()
        .filter_map(|w| match w {
            Site::Vertex(v) => Some(*v),
            Site::Face(_) => None,
        })
        .collect();
    let faces: Vec<Face> = flips
        .iter()
        .filter_map(|w| match w {
            Site::Face(f) => Some(*f),
            Site::Vertex(_) => None,
        })
        .collect();
    let aux = Rect::bounding(target.keys().map(|w| w.anchor()))
        .map(|r| r.inflate(1))
        .map(|r| Vertex::new(r.x0 - 1, r.y0 - 1))
        .unwrap_or(Vertex::new(0, 0));

    let mut gamma = GammaElement::identity();
    let toggle = |set: &mut BTreeSet<Edge>, edges: &[Edge]| {
        for e in edges {
            if !set.remove(e) {
                set.insert(*e);
            }
        }
    };
    for pair in vertices.chunks(2) {
        let (a, b) = (pair[0], pair.get(1).copied().unwrap_or(aux));
        let path = l_path(a, b, Routing::HorizontalFirst).expect("distinct endpoints");
        toggle(&mut gamma.z_part, path.edges());
    }
    for pair in faces.chunks(2) {
        let (a, b) = (pair[0], pair.get(1).copied().unwrap_or(Face { corner: aux }));
        let path = l_dual_path(a, b, Routing::HorizontalFirst).expect("distinct endpoints");
        toggle(&mut gamma.x_part, path.edges());
    }
    gamma
}

/// A `γ` moving `f` into the cylinder `c`: witness of minimality.
pub fn orbit_reach(f: &Configuration, c: &CylinderSet<Site>) -> Result<GammaElement> {
    let mut mismatch = BTreeMap::new();
    for (w, s) in c.pattern() {
        let fw = f.get(w).ok_or(Error::MissingSite(*w))?;
        mismatch.insert(*w, fw * *s);
    }
    Ok(solve_boundary(&mismatch))
}

/// Checks that `∂γ` is either trivial or moves every configuration on the
/// window. Errors when the window does not contain the flips.
pub fn freeness_check(gamma: &GammaElement, window: &BTreeSet<Site>) -> Result<bool> {
    let b = boundary(gamma);
    if !b.flips().is_subset(window) {
        return Err(Error::InvalidArgument("window does not contain the boundary flips".into()));
    }
    if b.is_identity() {
        return Ok(true);
    }
    // ∂γ·f = f on the window would force ∂γ|_window = 1; check on the
    // constant configuration, which differs exactly on the flips.
    let f = Configuration::constant(window.iter().copied(), Sign::Plus);
    let moved = f.act(&b);
    Ok(b.flips().iter().all(|w| moved.get(w) != f.get(w)))
}

/// `γ_u` for the Pauli word `u = ∏ σ^{k}_e`.
pub fn ribbon_to_gamma(word: &[(PauliKind, Edge)]) -> GammaElement {
    word.iter().fold(GammaElement::identity(), |g, (k, e)| g.compose(&GammaElement::generator(*k, *e)))
}

/// The Pauli operator spelled by a word.
pub fn word_operator(word: &[(PauliKind, Edge)]) -> PauliOperator {
    word.iter().fold(PauliOperator::identity(), |u, (k, e)| u.multiply(&PauliOperator::single(*k, *e)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_of_single_edges() {
        let e = Edge::vertical(1, 2);
        let z = boundary(&GammaElement::generator(PauliKind::Z, e));
        assert_eq!(z.flips().iter().copied().collect::<Vec<_>>(), e.endpoints().map(Site::Vertex).to_vec());
        let x = boundary(&GammaElement::generator(PauliKind::X, e));
        assert_eq!(x.flips().iter().copied().collect::<Vec<_>>(), e.faces().map(Site::Face).to_vec());
        assert!(boundary(&GammaElement::identity()).is_identity());
    }

    #[test]
    fn parity_enforced() {
        let one = [Site::Vertex(Vertex::new(0, 0))].into_iter().collect();
        assert_eq!(BoundaryPattern::new(one), Err(Error::OddParity("vertices")));
    }

    #[test]
    fn solve_pair_and_odd() {
        let v1 = Site::Vertex(Vertex::new(0, 0));
        let v2 = Site::Vertex(Vertex::new(2, 3));
        let t: BTreeMap<Site, Sign> = [(v1, Sign::Minus), (v2, Sign::Minus)].into_iter().collect();
        let g = solve_boundary(&t);
        assert!(g.x_part.is_empty());
        assert_eq!(boundary(&g).flips().iter().copied().collect::<Vec<_>>(), vec![v1, v2]);

        let t: BTreeMap<Site, Sign> = [(v1, Sign::Minus), (v2, Sign::Plus)].into_iter().collect();
        let b = boundary(&solve_boundary(&t));
        assert!(b.flips().contains(&v1));
        assert!(!b.flips().contains(&v2));
        assert_eq!(b.flips().len(), 2);
        let outside = b.flips().iter().find(|w| **w != v1).unwrap();
        assert!(!Rect::new(0, 0, 2, 3).contains(outside.anchor()));

        let all_plus: BTreeMap<Site, Sign> = [(v1, Sign::Plus)].into_iter().collect();
        assert!(solve_boundary(&all_plus).is_identity());
    }

    #[test]
    fn word_squares_to_identity() {
        let word = [(PauliKind::Z, Edge::horizontal(0, 0)), (PauliKind::X, Edge::vertical(1, 1))];
        let doubled: Vec<_> = word.iter().chain(word.iter()).copied().collect();
        assert!(ribbon_to_gamma(&doubled).is_identity());
    }

    #[test]
    fn freeness() {
        let g = GammaElement::generator(PauliKind::Z, Edge::horizontal(0, 0));
        let window: BTreeSet<Site> = Rect::new(-1, -1, 2, 2).vertices().map(Site::Vertex).collect();
        assert!(freeness_check(&g, &window).unwrap());
        assert!(freeness_check(&g, &BTreeSet::new()).is_err());
    }
}
