//! Exact dense matrices on small patches, used as an independent check.

use toric_diagonal::config::ExtendedConfig;
use toric_diagonal::lattice::{box_patch, Edge, Vertex};
use toric_diagonal::oracle::{dense, dense_compress, dense_hamiltonian};
use toric_diagonal::pauli::sigma_z;
use toric_diagonal::toric::{compress, ground_net, star};

fn main() -> toric_diagonal::Result<()> {
    let patch = box_patch(Vertex::new(0, 0), 1)?;
    let s = dense(&star(Vertex::new(0, 0)), &patch)?;
    println!("star on {} edges: dimension {}, involution = {}", patch.len(), s.dimension(), s.is_involution());

    let spectrum = dense_hamiltonian(&patch, &ExtendedConfig::ones())?;
    for level in &spectrum.levels {
        println!("  energy {} with multiplicity {}", level.energy, level.multiplicity);
    }

    let e = ground_net(&patch);
    for p in [star(Vertex::new(0, 0)), sigma_z(Edge::horizontal(0, 0))] {
        let d = dense_compress(&p, &e)?;
        println!("{p}: symbolic {:?}, dense agrees = {}", compress(&p, &e), d.agrees_with(&compress(&p, &e)));
    }
    Ok(())
}
