//! The obstruction to flipping a single star inside a box.

use toric_diagonal::lattice::Vertex;
use toric_diagonal::toric::no_lift_certificate;

fn main() -> toric_diagonal::Result<()> {
    for n in 1..=4 {
        let r = no_lift_certificate(Vertex::new(0, 0), n)?;
        println!(
            "n = {n}: {} closure stars, ring of {} edges, single flip infeasible = {}, certificate holds = {}",
            r.closure_stars,
            r.boundary_length,
            r.single_flip_infeasible,
            r.holds()
        );
    }
    Ok(())
}
