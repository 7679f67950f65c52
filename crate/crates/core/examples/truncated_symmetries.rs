//! Truncated symmetries: a long ribbon flips the sign of exactly one site
//! operator, and conjugating a net element moves it to the flipped configuration.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toric_diagonal::lattice::{box_patch, Face, Rect, Site, Vertex};
use toric_diagonal::report::sample;
use toric_diagonal::toric::{site_operator, stabilization_length, symmetry_ribbon, transport_check, truncated_symmetry};

fn main() -> toric_diagonal::Result<()> {
    let window = Rect::square(Vertex::new(0, 0), 3);
    for w in [Site::Vertex(Vertex::new(1, 0)), Site::Face(Face::new(-1, 2))] {
        let n = stabilization_length(w, &window);
        println!("{w}: ribbon of length {n} = {}", symmetry_ribbon(w, n)?);
        let flipped: Vec<Site> = window
            .vertices()
            .map(Site::Vertex)
            .chain(window.faces().map(Site::Face))
            .filter(|u| {
                let s = site_operator(u);
                truncated_symmetry(w, n, &s).map(|t| t != s).unwrap_or(false)
            })
            .collect();
        println!("  flips {flipped:?}");
    }

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let patch = box_patch(Vertex::new(0, 0), 2)?;
    let f = sample::signs(&mut rng, patch.interior_sites());
    let report = transport_check(&patch, &f)?;
    println!("transport on box(2): {} generators, holds = {}", report.generators, report.holds());
    Ok(())
}
