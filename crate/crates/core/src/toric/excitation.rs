use std::collections::BTreeSet;

use super::net::ground_net;
use crate::error::{Error, Result};
use crate::lattice::{l_dual_path, l_path, Face, Patch, Rect, Routing, Site, Vertex};
use crate::pauli::{ribbon_x, ribbon_z, Membership, PauliOperator};

fn check_distinct(v_pairs: &[(Vertex, Vertex)], f_pairs: &[(Face, Face)]) -> Result<()> {
    let mut seen = BTreeSet::new();
    let all = v_pairs
        .iter()
        .flat_map(|(a, b)| [Site::Vertex(*a), Site::Vertex(*b)])
        .chain(f_pairs.iter().flat_map(|(a, b)| [Site::Face(*a), Site::Face(*b)]));
    for w in all {
        if !seen.insert(w) {
            return Err(Error::OverlappingPairs(w));
        }
    }
    Ok(())
}

/// `R = ∏ F^z_{ρ_i} ∏ F^x_{ρ̃_j}` pairing the listed endpoints with L-shaped
/// ribbons (horizontal leg first). Its syndrome is exactly the listed sites.
pub fn excitation_operator(v_pairs: &[(Vertex, Vertex)], f_pairs: &[(Face, Face)]) -> Result<PauliOperator> {
    excitation_operator_routed(v_pairs, f_pairs, Routing::HorizontalFirst)
}

pub fn excitation_operator_routed(
    v_pairs: &[(Vertex, Vertex)],
    f_pairs: &[(Face, Face)],
    routing: Routing,
) -> Result<PauliOperator> {
    check_distinct(v_pairs, f_pairs)?;
    let mut r = PauliOperator::identity();
    for (a, b) in v_pairs {
        r = r.multiply(&ribbon_z(&l_path(*a, *b, routing)?)?);
    }
    for (a, b) in f_pairs {
        r = r.multiply(&ribbon_x(&l_dual_path(*a, *b, routing)?)?);
    }
    Ok(r)
}

/// Compares the two L-routings of the same endpoints: `R · R'⁻¹` is a closed
/// product of loops and must lie in the stabilizer group of a patch holding
/// both. The sign is `+1` when only one kind of excitation is present; with
/// both kinds, a dual loop enclosing one end of a direct ribbon gives `−1`.
pub fn path_independence(v_pairs: &[(Vertex, Vertex)], f_pairs: &[(Face, Face)]) -> Result<Membership> {
    let r = excitation_operator_routed(v_pairs, f_pairs, Routing::HorizontalFirst)?;
    let r2 = excitation_operator_routed(v_pairs, f_pairs, Routing::VerticalFirst)?;
    let q = r.multiply(&r2.inverse());
    let support = r.support().union(&r2.support()).copied().collect::<BTreeSet<_>>();
    let Some(rect) = Rect::bounding_edges(&support) else {
        return Ok(Membership::Member { sign: crate::pauli::Phase::ONE, witness: vec![] });
    };
    Ok(ground_net(&Patch::from_rect(rect.inflate(1))).group().membership(&q))
}
