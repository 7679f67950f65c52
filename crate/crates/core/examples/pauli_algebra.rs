//! Pauli strings on lattice edges: products, commutation, and membership in a
//! signed stabilizer group.

use toric_diagonal::lattice::{Edge, Face, Vertex};
use toric_diagonal::pauli::{sigma_x, sigma_y, sigma_z, Membership, PauliOperator, Phase, SignedStabilizerGroup};
use toric_diagonal::toric::{face, star};

fn main() -> toric_diagonal::Result<()> {
    let e = Edge::horizontal(0, 0);
    let xz = sigma_x(e).multiply(&sigma_z(e));
    println!("X·Z = {xz}, Y = {}", sigma_y(e));
    println!("X and Z on one edge commute: {}", sigma_x(e).commutes(&sigma_z(e)));

    let s = star(Vertex::new(0, 0));
    let f = face(Face::new(0, 0));
    println!("star {s}");
    println!("face {f}");
    println!("star and face commute: {}", s.commutes(&f));

    // a group with a flipped face sign
    let group = SignedStabilizerGroup::new(vec![s.clone(), f.clone().scaled(Phase::MINUS_ONE)])?;
    for p in [s.multiply(&f), f.clone(), sigma_x(e), PauliOperator::identity().scaled(Phase::I)] {
        match group.membership(&p) {
            Membership::Member { sign, .. } => println!("{p}: member up to {sign}"),
            Membership::NotMember => println!("{p}: not a member"),
        }
    }
    Ok(())
}
