//! Seeded random lattice objects shared by the suites and the examples.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::config::{Configuration, ExtendedConfig, Sign};
use crate::lattice::{Edge, Face, Patch, Rect, Site, Vertex};
use crate::pauli::{PauliOperator, Phase};

pub fn vertex<R: Rng>(rng: &mut R, rect: &Rect) -> Vertex {
    Vertex::new(rng.gen_range(rect.x0..=rect.x1), rng.gen_range(rect.y0..=rect.y1))
}

/// A face whose four corners lie in `rect`.
pub fn face<R: Rng>(rng: &mut R, rect: &Rect) -> Face {
    Face::new(rng.gen_range(rect.x0..rect.x1), rng.gen_range(rect.y0..rect.y1))
}

pub fn site<R: Rng>(rng: &mut R, rect: &Rect) -> Site {
    if rng.gen_bool(0.5) {
        Site::Vertex(vertex(rng, rect))
    } else {
        Site::Face(face(rng, rect))
    }
}

pub fn distinct_vertices<R: Rng>(rng: &mut R, rect: &Rect) -> (Vertex, Vertex) {
    let a = vertex(rng, rect);
    loop {
        let b = vertex(rng, rect);
        if b != a {
            return (a, b);
        }
    }
}

pub fn distinct_faces<R: Rng>(rng: &mut R, rect: &Rect) -> (Face, Face) {
    let a = face(rng, rect);
    loop {
        let b = face(rng, rect);
        if b != a {
            return (a, b);
        }
    }
}

pub fn phase<R: Rng>(rng: &mut R) -> Phase {
    Phase::from_power(rng.gen_range(0..4))
}

/// Each edge of `edges` carries X, Y or Z with probability `density`.
pub fn pauli<R: Rng>(rng: &mut R, edges: &[Edge], density: f64) -> PauliOperator {
    let mut x = Vec::new();
    let mut z = Vec::new();
    for e in edges {
        if rng.gen_bool(density) {
            match rng.gen_range(0..3) {
                0 => x.push(*e),
                1 => z.push(*e),
                _ => {
                    x.push(*e);
                    z.push(*e);
                }
            }
        }
    }
    PauliOperator::new(x, z, phase(rng))
}

pub fn signs<R: Rng, I: IntoIterator<Item = Site>>(rng: &mut R, sites: I) -> Configuration {
    Configuration::new(sites.into_iter().map(|w| (w, Sign::from_bool_minus(rng.gen_bool(0.5)))).collect())
}

/// Random signs on every site touching `patch`, `+1` elsewhere.
pub fn extended<R: Rng>(rng: &mut R, patch: &Patch) -> ExtendedConfig {
    ExtendedConfig::new(signs(rng, patch.touching_sites()), Sign::Plus)
}

pub fn edge_subset<R: Rng>(rng: &mut R, edges: &[Edge], k: usize) -> Vec<Edge> {
    edges.choose_multiple(rng, k.min(edges.len())).copied().collect()
}
