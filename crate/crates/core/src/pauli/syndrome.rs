use super::{PauliOperator, Phase};
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec};
use crate::lattice::{Patch, Site};
use crate::pauli::stabilizer::EdgeIndex;

/// Whether `p` anticommutes with the star or face operator at `w`.
///
/// Stars are X-type and see only the Z-support; faces are Z-type and see only
/// the X-support.
pub fn anticommutes_with_site(p: &PauliOperator, w: &Site) -> bool {
    let support = match w {
        Site::Vertex(_) => &p.z_support,
        Site::Face(_) => &p.x_support,
    };
    w.edges().iter().filter(|e| support.contains(e)).count() % 2 == 1
}

/// One bit per listed site, set when `p` anticommutes with its operator.
pub fn syndrome(p: &PauliOperator, sites: &[Site]) -> Vec<bool> {
    sites.iter().map(|w| anticommutes_with_site(p, w)).collect()
}

/// Every site, anywhere on the lattice, whose operator anticommutes with `p`.
pub fn full_syndrome(p: &PauliOperator) -> Vec<Site> {
    let mut candidates = std::collections::BTreeSet::new();
    for e in &p.z_support {
        candidates.extend(e.endpoints().map(Site::Vertex));
    }
    for e in &p.x_support {
        candidates.extend(e.faces().map(Site::Face));
    }
    candidates.into_iter().filter(|w| anticommutes_with_site(p, w)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SyndromeSolution {
    Infeasible,
    Solution(PauliOperator),
}

/// Finds a Pauli supported in `support` whose syndrome on `sites` is `target`.
pub fn solve_syndrome(sites: &[Site], target: &[bool], support: &Patch) -> Result<SyndromeSolution> {
    if sites.len() != target.len() {
        return Err(Error::InvalidArgument(format!(
            "{} sites but {} target bits",
            sites.len(),
            target.len()
        )));
    }
    let index = EdgeIndex::new(support.edges.iter().copied());
    let n = index.len();
    // unknowns: x bits in 0..n, z bits in n..2n
    let mut m = BitMatrix::new(2 * n);
    for w in sites {
        let offset = if w.is_vertex() { n } else { 0 };
        let cols = w.edges().into_iter().filter_map(|e| index.position(&e)).map(|i| i + offset);
        m.push_row(BitVec::from_indices(2 * n, cols));
    }
    let rhs = BitVec::from_indices(sites.len(), target.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i));
    Ok(match m.solve(&rhs) {
        None => SyndromeSolution::Infeasible,
        Some(u) => SyndromeSolution::Solution(PauliOperator {
            x_support: u.ones().filter(|&i| i < n).map(|i| index.edge(i)).collect(),
            z_support: u.ones().filter(|&i| i >= n).map(|i| index.edge(i - n)).collect(),
            phase: Phase::ONE,
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{box_patch, l_path, Edge, Routing, Vertex};
    use crate::pauli::{ribbon_z, sigma_z};

    #[test]
    fn ribbon_flips_its_endpoints() {
        let a = Vertex::new(-1, 2);
        let b = Vertex::new(3, -1);
        let r = ribbon_z(&l_path(a, b, Routing::HorizontalFirst).unwrap()).unwrap();
        assert_eq!(full_syndrome(&r), vec![Site::Vertex(a), Site::Vertex(b)]);
    }

    #[test]
    fn two_star_target_is_feasible() {
        let p = box_patch(Vertex::new(0, 0), 1).unwrap();
        let sites: Vec<Site> = crate::lattice::Rect::square(Vertex::new(0, 0), 1).vertices().map(Site::Vertex).collect();
        let target: Vec<bool> =
            sites.iter().map(|w| *w == Site::Vertex(Vertex::new(0, 0)) || *w == Site::Vertex(Vertex::new(1, 0))).collect();
        match solve_syndrome(&sites, &target, &p).unwrap() {
            SyndromeSolution::Solution(s) => assert_eq!(syndrome(&s, &sites), target),
            SyndromeSolution::Infeasible => panic!("expected a solution"),
        }
        let odd: Vec<bool> = sites.iter().map(|w| *w == Site::Vertex(Vertex::new(0, 0))).collect();
        assert_eq!(solve_syndrome(&sites, &odd, &p).unwrap(), SyndromeSolution::Infeasible);
    }

    #[test]
    fn syndrome_bits() {
        let e = Edge::horizontal(0, 0);
        let sites = [Site::Vertex(Vertex::new(0, 0)), Site::Vertex(Vertex::new(1, 0)), Site::Vertex(Vertex::new(2, 0))];
        assert_eq!(syndrome(&sigma_z(e), &sites), vec![true, true, false]);
    }
}
