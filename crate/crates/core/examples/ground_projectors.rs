//! Projector net elements on nested boxes and the frustration-free order.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toric_diagonal::lattice::{box_patch, Vertex};
use toric_diagonal::report::sample;
use toric_diagonal::toric::{ff_monotone, projector_net};

fn main() -> toric_diagonal::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let outer = box_patch(Vertex::new(0, 0), 3)?;
    let f = sample::extended(&mut rng, &outer);

    for n in 1..=3 {
        let e = projector_net(&box_patch(Vertex::new(0, 0), n)?, &f)?;
        println!("box({n}): {} edges, {} generators", e.patch().len(), e.group().len());
    }
    let big = projector_net(&outer, &f)?;
    let small = projector_net(&box_patch(Vertex::new(1, -1), 2)?, &f)?;
    println!("P_large ≤ P_small: {}", ff_monotone(&big, &small)?);
    Ok(())
}
