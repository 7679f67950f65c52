//! Stabilizer groups as row-reduced symplectic matrices.
//!
//! Edges of the working support are indexed densely and an operator becomes a
//! pair of word-packed bit rows `(x | z)` plus a phase. The group keeps a
//! reduced row echelon form in which every row also records which generators
//! it is a product of and the exact phase of that product.

use std::collections::{BTreeMap, BTreeSet};

use super::{PauliOperator, Phase};
use crate::error::{Error, Result};
use crate::gf2::BitVec;
use crate::lattice::Edge;

/// Dense numbering of a finite edge set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeIndex {
    edges: Vec<Edge>,
    position: BTreeMap<Edge, usize>,
}

impl EdgeIndex {
    pub fn new<I: IntoIterator<Item = Edge>>(edges: I) -> Self {
        let set: BTreeSet<Edge> = edges.into_iter().collect();
        let edges: Vec<Edge> = set.into_iter().collect();
        let position = edges.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        Self { edges, position }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn position(&self, e: &Edge) -> Option<usize> {
        self.position.get(e).copied()
    }

    pub fn edge(&self, i: usize) -> Edge {
        self.edges[i]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Packs `p`, or `None` if its support leaves the index.
    pub fn pack(&self, p: &PauliOperator) -> Option<PackedPauli> {
        let n = self.len();
        let mut x = BitVec::zeros(n);
        let mut z = BitVec::zeros(n);
        for e in &p.x_support {
            x.set(self.position(e)?, true);
        }
        for e in &p.z_support {
            z.set(self.position(e)?, true);
        }
        Some(PackedPauli { x, z, phase: p.phase })
    }

    /// Packs the part of `p` inside the index; enough for commutation tests
    /// against operators supported in the index.
    pub fn pack_restricted(&self, p: &PauliOperator) -> PackedPauli {
        let n = self.len();
        let x = BitVec::from_indices(n, p.x_support.iter().filter_map(|e| self.position(e)));
        let z = BitVec::from_indices(n, p.z_support.iter().filter_map(|e| self.position(e)));
        PackedPauli { x, z, phase: p.phase }
    }

    pub fn unpack(&self, p: &PackedPauli) -> PauliOperator {
        PauliOperator {
            x_support: p.x.ones().map(|i| self.edges[i]).collect(),
            z_support: p.z.ones().map(|i| self.edges[i]).collect(),
            phase: p.phase,
        }
    }
}

/// Bit-packed `phase · X(x) · Z(z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackedPauli {
    pub x: BitVec,
    pub z: BitVec,
    pub phase: Phase,
}

impl PackedPauli {
    pub fn commutes(&self, other: &Self) -> bool {
        (self.x.and_count(&other.z) + self.z.and_count(&other.x)).is_multiple_of(2)
    }

    /// `self · other`, in place into `other`'s slot.
    fn left_multiply_into(&self, other: &mut Self) {
        let swap = self.z.and_count(&other.x) % 2 == 1;
        other.phase = self.phase * other.phase * Phase::sign(swap);
        other.x.xor_assign(&self.x);
        other.z.xor_assign(&self.z);
    }

    pub fn is_scalar(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    fn bit(&self, col: usize) -> bool {
        let n = self.x.len();
        if col < n {
            self.x.get(col)
        } else {
            self.z.get(col - n)
        }
    }

    fn first_one(&self) -> Option<usize> {
        self.x.first_one().or_else(|| self.z.first_one().map(|i| i + self.x.len()))
    }
}

#[derive(Clone, Debug)]
struct EchelonRow {
    pivot: usize,
    op: PackedPauli,
    combination: BitVec,
}

/// Outcome of a membership query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    NotMember,
    /// The product of the listed generators equals `sign · p`.
    Member { sign: Phase, witness: Vec<usize> },
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member { .. })
    }
}

/// An abelian group generated by independent commuting Hermitian Paulis.
#[derive(Clone, Debug)]
pub struct SignedStabilizerGroup {
    index: EdgeIndex,
    generators: Vec<PauliOperator>,
    packed: Vec<PackedPauli>,
    rows: Vec<EchelonRow>,
}

impl SignedStabilizerGroup {
    /// Builds the group over the union of the generators' supports.
    pub fn new(generators: Vec<PauliOperator>) -> Result<Self> {
        let index = EdgeIndex::new(generators.iter().flat_map(|g| g.support()));
        Self::with_index(index, generators)
    }

    /// Builds the group over a caller-chosen edge index, which must contain
    /// every generator's support.
    pub fn with_index(index: EdgeIndex, generators: Vec<PauliOperator>) -> Result<Self> {
        let mut group = Self { index, generators: Vec::new(), packed: Vec::new(), rows: Vec::new() };
        for g in generators {
            group.insert(g)?;
        }
        Ok(group)
    }

    fn insert(&mut self, g: PauliOperator) -> Result<()> {
        let k = self.generators.len();
        if !g.phase.is_real() || !g.multiply(&g).is_identity() {
            return Err(Error::NotInvolution(k));
        }
        let packed = self.index.pack(&g).ok_or(Error::SupportOverflow)?;
        if let Some(j) = self.packed.iter().position(|h| !h.commutes(&packed)) {
            return Err(Error::Anticommuting(j, k));
        }
        // Combination bitsets grow by one column per generator.
        for row in &mut self.rows {
            let mut c = BitVec::zeros(k + 1);
            for i in row.combination.ones() {
                c.set(i, true);
            }
            row.combination = c;
        }
        let mut acc = packed.clone();
        let mut combination = BitVec::from_indices(k + 1, [k]);
        for row in &self.rows {
            if acc.bit(row.pivot) {
                row.op.left_multiply_into(&mut acc);
                combination.xor_assign(&row.combination);
            }
        }
        let pivot = acc.first_one().ok_or(Error::Dependent(k))?;
        for row in &mut self.rows {
            if row.op.bit(pivot) {
                acc.left_multiply_into(&mut row.op);
                row.combination.xor_assign(&combination);
            }
        }
        let pos = self.rows.partition_point(|r| r.pivot < pivot);
        self.rows.insert(pos, EchelonRow { pivot, op: acc, combination });
        self.generators.push(g);
        self.packed.push(packed);
        Ok(())
    }

    pub fn generators(&self) -> &[PauliOperator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn index(&self) -> &EdgeIndex {
        &self.index
    }

    /// Index of the first generator anticommuting with `p`, if any.
    pub fn first_anticommuting(&self, p: &PauliOperator) -> Option<usize> {
        let packed = self.index.pack_restricted(p);
        self.packed.iter().position(|g| !g.commutes(&packed))
    }

    pub fn commutes_with_all(&self, p: &PauliOperator) -> bool {
        self.first_anticommuting(p).is_none()
    }

    /// Decides whether `p` is, up to a phase, a product of generators.
    pub fn membership(&self, p: &PauliOperator) -> Membership {
        let Some(mut acc) = self.index.pack(p) else { return Membership::NotMember };
        if self.packed.iter().any(|g| !g.commutes(&acc)) {
            return Membership::NotMember;
        }
        let mut combination = BitVec::zeros(self.generators.len());
        for row in &self.rows {
            if acc.bit(row.pivot) {
                row.op.left_multiply_into(&mut acc);
                combination.xor_assign(&row.combination);
            }
        }
        if !acc.is_scalar() {
            return Membership::NotMember;
        }
        // G · p = c  ⇒  G = c⁻¹ · p, since G² = 1.
        Membership::Member { sign: acc.phase.inverse(), witness: combination.ones().collect() }
    }

    /// The reduced row echelon form, as `(x | z)` bit rows without phases.
    pub fn row_space(&self) -> Vec<(BitVec, BitVec)> {
        self.rows.iter().map(|r| (r.op.x.clone(), r.op.z.clone())).collect()
    }
}
