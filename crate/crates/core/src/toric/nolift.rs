use serde::Serialize;

use super::star;
use crate::error::Result;
use crate::lattice::{box_patch, boundary_dual_path, closure_patch, l_path, Routing, Site, Vertex};
use crate::pauli::{ribbon_x, ribbon_z, solve_syndrome, syndrome, PauliOperator, SyndromeSolution};

/// Finite certificate that the map sending each star to a single `σᶻ`
/// cannot lift to an automorphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NoLiftReport {
    pub n: i64,
    pub center: Vertex,
    /// Stars interior to the closure of the box.
    pub closure_stars: usize,
    pub boundary_length: usize,
    /// `∏ A_u` over the closure equals the X-ribbon around the box.
    pub product_matches_ribbon: bool,
    /// No Pauli on the box anticommutes with `A_center` alone.
    pub single_flip_infeasible: bool,
    /// A two-star syndrome is solvable on the box.
    pub two_star_witness: Option<PauliOperator>,
    /// The L-shaped ribbon between the two stars has that same syndrome.
    pub ribbon_witness_ok: bool,
}

impl NoLiftReport {
    pub fn holds(&self) -> bool {
        self.product_matches_ribbon && self.single_flip_infeasible && self.two_star_witness.is_some() && self.ribbon_witness_ok
    }
}

pub fn no_lift_certificate(center: Vertex, n: i64) -> Result<NoLiftReport> {
    let b = box_patch(center, n)?;
    let closure = closure_patch(&b)?;
    let ring = boundary_dual_path(&b)?;
    let stars: Vec<PauliOperator> = closure.interior_vertices().into_iter().map(star).collect();
    let product = PauliOperator::product(stars.iter());
    let product_matches_ribbon = product == ribbon_x(&ring)?;

    let sites: Vec<Site> = b.touching_sites().into_iter().filter(Site::is_vertex).collect();
    let single: Vec<bool> = sites.iter().map(|w| *w == Site::Vertex(center)).collect();
    let single_flip_infeasible = solve_syndrome(&sites, &single, &b)? == SyndromeSolution::Infeasible;

    let other = center.offset(n, n);
    let pair: Vec<bool> = sites.iter().map(|w| *w == Site::Vertex(center) || *w == Site::Vertex(other)).collect();
    let two_star_witness = match solve_syndrome(&sites, &pair, &b)? {
        SyndromeSolution::Solution(p) if syndrome(&p, &sites) == pair => Some(p),
        _ => None,
    };
    let ribbon = ribbon_z(&l_path(center, other, Routing::HorizontalFirst)?)?;
    let ribbon_witness_ok = syndrome(&ribbon, &sites) == pair;

    Ok(NoLiftReport {
        n,
        center,
        closure_stars: stars.len(),
        boundary_length: ring.len(),
        product_matches_ribbon,
        single_flip_infeasible,
        two_star_witness,
        ribbon_witness_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_box() {
        let r = no_lift_certificate(Vertex::new(0, 0), 1).unwrap();
        assert!(r.holds(), "{r:?}");
        assert_eq!(r.closure_stars, 9);
        assert_eq!(r.boundary_length, 12);
    }

    #[test]
    fn off_origin() {
        assert!(no_lift_certificate(Vertex::new(-4, 7), 3).unwrap().holds());
    }
}
