//! Growing a box until every local term of an observable is settled.

use toric_diagonal::config::ExtendedConfig;
use toric_diagonal::lattice::{box_patch, Edge, Vertex};
use toric_diagonal::pauli::{sigma_x, sigma_z, PauliSum};
use toric_diagonal::scalar::gaussian;
use toric_diagonal::toric::{ltqo_radius, star, GrowthConfig};

fn main() -> toric_diagonal::Result<()> {
    let region = box_patch(Vertex::new(0, 0), 1)?;
    let f = ExtendedConfig::ones();
    let mut x = PauliSum::term(gaussian(2, 0), star(Vertex::new(0, 0)));
    x.add_term(gaussian(0, 1), sigma_x(Edge::horizontal(0, 0)));
    x.add_term(gaussian(1, 0), sigma_z(Edge::vertical(1, 0)));

    let cert = ltqo_radius(&x, &region, &f, GrowthConfig { cap: 3 })?;
    println!("settled after {} extra rings on {} edges", cert.rings, cert.patch.len());
    for t in &cert.terms {
        println!("  {} · {}: {:?}", t.coefficient, t.operator, t.classification);
    }
    println!("ω_f(X) = {}", cert.value);
    Ok(())
}
