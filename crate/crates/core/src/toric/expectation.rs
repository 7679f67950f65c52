use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;

use super::net::ground_net;
use super::site_operator;
use crate::config::SignField;
use crate::error::{Error, Result};
use crate::lattice::{Patch, Rect, Site};
use crate::pauli::{Membership, PauliOperator, PauliSum};
use crate::scalar::Gaussian;

/// A polynomial in the commuting involutions `S_w`, i.e. an element of the
/// diagonal written in its monomial basis. Monomials are sets of sites.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StabilizerPolynomial {
    terms: BTreeMap<BTreeSet<Site>, Gaussian>,
}

impl StabilizerPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial<I: IntoIterator<Item = Site>>(c: Gaussian, sites: I) -> Self {
        let mut p = Self::zero();
        p.add_term(c, sites.into_iter().collect());
        p
    }

    pub fn add_term(&mut self, c: Gaussian, sites: BTreeSet<Site>) {
        let entry = self.terms.entry(sites.clone()).or_insert_with(Gaussian::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&sites);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BTreeSet<Site>, &Gaussian)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*c, m.clone());
        }
        out
    }

    /// Product; monomials multiply by symmetric difference since `S_w² = 1`.
    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                out.add_term(c * d, a.symmetric_difference(b).copied().collect());
            }
        }
        out
    }

    /// Evaluates at a configuration, `S_w ↦ f(w)`.
    pub fn evaluate<F: SignField<Site>>(&self, f: &F) -> Result<Gaussian> {
        let mut total = Gaussian::zero();
        for (m, c) in &self.terms {
            let mut minus = false;
            for w in m {
                minus ^= f.sign_at(w).ok_or(Error::MissingSite(*w))?.is_minus();
            }
            total += if minus { -c } else { *c };
        }
        Ok(total)
    }

    /// The same element written as a sum of Pauli operators.
    pub fn to_pauli_sum(&self) -> PauliSum {
        PauliSum::from_terms(self.terms.iter().map(|(m, c)| {
            let ops: Vec<PauliOperator> = m.iter().map(site_operator).collect();
            (*c, PauliOperator::product(ops.iter()))
        }))
    }
}

impl fmt::Display for StabilizerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})")?;
            for w in m {
                write!(f, "·S{w}")?;
            }
        }
        Ok(())
    }
}

/// The conditional expectation onto the diagonal.
///
/// A Pauli term survives exactly when it is, up to phase, a product of star
/// and face operators; the decomposition is found on the bounding rectangle
/// of its support grown by one ring, which contains every site that can
/// appear in it.
pub fn conditional_expectation(x: &PauliSum) -> StabilizerPolynomial {
    let mut out = StabilizerPolynomial::zero();
    for (p, c) in x.terms() {
        if p.is_scalar() {
            out.add_term(*c, BTreeSet::new());
            continue;
        }
        let rect = Rect::bounding_edges(&p.support()).expect("non-scalar term has support").inflate(1);
        let net = ground_net(&Patch::from_rect(rect));
        if let Membership::Member { sign, witness } = net.group().membership(p) {
            // ∏ S = sign · p
            let sites = witness.iter().map(|&i| net.sites()[i]).collect();
            out.add_term(c * sign.inverse().to_gaussian(), sites);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{Edge, Face, Vertex};
    use crate::pauli::sigma_x;
    use crate::scalar::gaussian;
    use crate::toric::{face, star};

    #[test]
    fn star_maps_to_its_monomial() {
        let v = Vertex::new(1, -1);
        assert_eq!(
            conditional_expectation(&star(v).into()),
            StabilizerPolynomial::monomial(gaussian(1, 0), [Site::Vertex(v)])
        );
    }

    #[test]
    fn single_sigma_x_vanishes() {
        assert!(conditional_expectation(&sigma_x(Edge::vertical(0, 0)).into()).is_zero());
    }

    #[test]
    fn linear_combination() {
        let v = Vertex::new(0, 0);
        let f = Face::new(0, 0);
        let x = PauliSum::scalar(gaussian(3, 0)).add(&PauliSum::from(star(v).multiply(&face(f))));
        let expected = StabilizerPolynomial::monomial(gaussian(3, 0), [])
            .add(&StabilizerPolynomial::monomial(gaussian(1, 0), [Site::Vertex(v), Site::Face(f)]));
        assert_eq!(conditional_expectation(&x), expected);
    }

    #[test]
    fn idempotent_on_examples() {
        let v = Vertex::new(0, 0);
        let x = PauliSum::from(star(v).multiply(&star(v.offset(1, 0)))).add(&PauliSum::from(face(Face::new(3, 3))));
        let e = conditional_expectation(&x);
        assert_eq!(conditional_expectation(&e.to_pauli_sum()), e);
    }
}
