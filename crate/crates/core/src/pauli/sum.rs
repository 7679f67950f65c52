use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::PauliOperator;
use crate::scalar::{one, Gaussian};

/// A finite linear combination of Pauli operators with exact coefficients.
///
/// Keys are stored with phase one; an operator's phase is folded into its
/// coefficient, so no two terms share a key.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PauliSum {
    terms: BTreeMap<PauliOperator, Gaussian>,
}

impl PauliSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::scalar(one())
    }

    pub fn scalar(c: Gaussian) -> Self {
        Self::term(c, PauliOperator::identity())
    }

    pub fn term(c: Gaussian, p: PauliOperator) -> Self {
        let mut s = Self::zero();
        s.add_term(c, p);
        s
    }

    pub fn from_terms<I: IntoIterator<Item = (Gaussian, PauliOperator)>>(terms: I) -> Self {
        let mut s = Self::zero();
        for (c, p) in terms {
            s.add_term(c, p);
        }
        s
    }

    pub fn add_term(&mut self, c: Gaussian, p: PauliOperator) {
        let c = c * p.phase.to_gaussian();
        let key = p.unphased();
        let entry = self.terms.entry(key.clone()).or_insert_with(Gaussian::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Terms in canonical order; each operator has phase one.
    pub fn terms(&self) -> impl Iterator<Item = (&PauliOperator, &Gaussian)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: &PauliOperator) -> Gaussian {
        self.terms.get(&p.unphased()).map_or_else(Gaussian::zero, |c| c * p.phase.inverse().to_gaussian())
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(*c, p.clone());
        }
        out
    }

    pub fn scale(&self, c: Gaussian) -> Self {
        Self::from_terms(self.terms.iter().map(|(p, d)| (c * d, p.clone())))
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (p, c) in &self.terms {
            for (q, d) in &other.terms {
                out.add_term(c * d, p.multiply(q));
            }
        }
        out
    }

    pub fn support(&self) -> std::collections::BTreeSet<crate::lattice::Edge> {
        self.terms.keys().flat_map(|p| p.support()).collect()
    }
}

impl From<PauliOperator> for PauliSum {
    fn from(p: PauliOperator) -> Self {
        Self::term(one(), p)
    }
}

impl fmt::Display for PauliSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})·[{p}]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Edge;
    use crate::pauli::{sigma_x, sigma_z, Phase};
    use crate::scalar::gaussian;

    #[test]
    fn phases_fold_into_coefficients() {
        let e = Edge::horizontal(0, 0);
        let mut s = PauliSum::zero();
        s.add_term(gaussian(1, 0), sigma_x(e).scaled(Phase::I));
        s.add_term(gaussian(0, -1), sigma_x(e));
        assert!(s.is_empty());
    }

    #[test]
    fn product_of_sums() {
        let e = Edge::horizontal(0, 0);
        let a = PauliSum::from_terms([(gaussian(1, 0), sigma_x(e)), (gaussian(1, 0), sigma_z(e))]);
        // (X + Z)² = 2
        assert_eq!(a.multiply(&a), PauliSum::scalar(gaussian(2, 0)));
        assert_eq!(a.coefficient(&sigma_z(e).scaled(Phase::MINUS_ONE)), gaussian(-1, 0));
    }
}
