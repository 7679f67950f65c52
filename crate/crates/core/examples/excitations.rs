//! Creating excitations in pairs, syndromes, and path independence.

use toric_diagonal::lattice::{box_patch, Face, Rect, Routing, Site, Vertex};
use toric_diagonal::pauli::{full_syndrome, solve_syndrome, SyndromeSolution};
use toric_diagonal::toric::{excitation_operator_routed, path_independence};

fn main() -> toric_diagonal::Result<()> {
    let v = [(Vertex::new(0, 0), Vertex::new(3, 2))];
    let f = [(Face::new(-2, 1), Face::new(1, -1))];
    let a = excitation_operator_routed(&v, &f, Routing::HorizontalFirst)?;
    let b = excitation_operator_routed(&v, &f, Routing::VerticalFirst)?;
    println!("syndrome: {:?}", full_syndrome(&a));
    println!("two routings differ by {}", a.multiply(&b));
    println!("membership of the loop: {:?}", path_independence(&v, &[])?);

    // no Pauli on box(1) flips the centre star and no other star of its closure
    let patch = box_patch(Vertex::new(0, 0), 1)?;
    let sites: Vec<Site> = Rect::square(Vertex::new(0, 0), 1).vertices().map(Site::Vertex).collect();
    let target: Vec<bool> = sites.iter().map(|w| *w == Site::Vertex(Vertex::new(0, 0))).collect();
    match solve_syndrome(&sites, &target, &patch)? {
        SyndromeSolution::Infeasible => println!("single star flip on box(1): infeasible"),
        SyndromeSolution::Solution(p) => println!("solution {p}"),
    }
    Ok(())
}
