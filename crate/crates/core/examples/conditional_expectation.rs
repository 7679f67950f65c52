//! The expectation onto stabilizer polynomials and its bimodule property.

use toric_diagonal::config::{ExtendedConfig, Sign};
use toric_diagonal::lattice::{Edge, Face, Site, Vertex};
use toric_diagonal::pauli::{sigma_x, PauliOperator, PauliSum};
use toric_diagonal::scalar::gaussian;
use toric_diagonal::toric::{conditional_expectation, face, star, StabilizerPolynomial};

fn main() -> toric_diagonal::Result<()> {
    let v = Vertex::new(0, 0);
    let w = Face::new(0, 0);
    let mut x = PauliSum::term(gaussian(3, 0), star(v).multiply(&face(w)));
    x.add_term(gaussian(1, 1), sigma_x(Edge::vertical(0, 0)));
    x.add_term(gaussian(-1, 0), PauliOperator::identity());

    let e = conditional_expectation(&x);
    println!("X    = {x}");
    println!("E(X) = {e}");

    let m = StabilizerPolynomial::monomial(gaussian(1, 0), [Site::Vertex(v)]);
    let left = conditional_expectation(&m.to_pauli_sum().multiply(&x));
    println!("E(A_v X) = A_v E(X): {}", left == m.multiply(&e));

    let f = ExtendedConfig::constant(Sign::Minus);
    println!("evaluated at all −1: {}", e.evaluate(&f)?);
    Ok(())
}
