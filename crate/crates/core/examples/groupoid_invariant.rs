//! Flip patterns acting on sign configurations, cylinder functions, and the
//! dyadic invariant computed for two diagonal models.

use std::collections::BTreeMap;

use toric_diagonal::config::Sign;
use toric_diagonal::groupoid::{
    boundary, invariant_triple, solve_boundary, Act, CylinderFunction, DiagonalModel, FlipPattern, InvariantOptions,
};
use toric_diagonal::lattice::{Face, Site, Vertex};

fn main() -> toric_diagonal::Result<()> {
    let keys = vec![Site::Vertex(Vertex::new(0, 0)), Site::Vertex(Vertex::new(2, 1)), Site::Face(Face::new(1, 0))];
    let target: BTreeMap<Site, Sign> = keys.iter().map(|w| (*w, Sign::Minus)).collect();
    let gamma = solve_boundary(&target);
    let b = boundary(&gamma);
    println!("element with {} x-edges, {} z-edges flips {:?}", gamma.x_part.len(), gamma.z_part.len(), b.flips());

    let mut sorted = keys.clone();
    sorted.sort();
    let q = CylinderFunction::from_table(sorted, vec![3, 0, 1, 0, 0, 2, 0, 1])?;
    let moved = q.act(&b);
    println!("measure {} before, {} after the flip", q.measure(), moved.measure());
    println!("commutator class: {}", q.sub(&moved)?.class_reduce().coefficient);

    let opts = InvariantOptions::default();
    for model in [DiagonalModel::ToricDiagonal, DiagonalModel::StandardDiagonal] {
        let r = invariant_triple(model, &opts);
        println!("{model:?}: order unit {}, all properties hold = {}", r.data.order_unit, r.data.holds());
    }
    Ok(())
}
