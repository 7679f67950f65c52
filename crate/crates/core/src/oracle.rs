//! Brute-force matrices on patches of at most [`ORACLE_EDGE_CAP`] edges.
//!
//! Basis state `b` has bit `i` set when the qubit on the `i`-th edge of the
//! patch (in sorted order) is in the `σᶻ = −1` state. Matrices are stored
//! row-sparse with dyadic Gaussian entries `entry / 2^scale`, which keeps
//! every operation exact without gcd work. Nothing here reuses the symbolic
//! phase rules of the `pauli` module.

use std::collections::BTreeMap;

use num_complex::Complex;
use num_rational::Rational64;
use serde::Serialize;

use crate::config::SignField;
use crate::error::{Error, Result};
use crate::lattice::{Edge, Patch, Site};
use crate::pauli::PauliOperator;
use crate::scalar::Gaussian;
use crate::toric::{projector_net, site_operator, CompressionResult, ProjectorNetElement};

pub const ORACLE_EDGE_CAP: usize = 12;

type Entry = Complex<i64>;

const ZERO: Entry = Complex::new(0, 0);
const ONE: Entry = Complex::new(1, 0);

#[derive(Clone, Debug)]
pub struct DenseOperator {
    edges: Vec<Edge>,
    scale: u32,
    rows: Vec<Vec<(usize, Entry)>>,
}

impl PartialEq for DenseOperator {
    fn eq(&self, other: &Self) -> bool {
        self.edges == other.edges && self.scale == other.scale && self.rows == other.rows
    }
}

impl Eq for DenseOperator {}

fn check_size(patch: &Patch) -> Result<()> {
    if patch.len() > ORACLE_EDGE_CAP {
        return Err(Error::OracleTooLarge { edges: patch.len(), cap: ORACLE_EDGE_CAP });
    }
    Ok(())
}

fn to_gaussian(z: Entry, scale: u32) -> Gaussian {
    let d = 1i64 << scale;
    Complex::new(Rational64::new(z.re, d), Rational64::new(z.im, d))
}

impl DenseOperator {
    fn from_rows(edges: Vec<Edge>, scale: u32, rows: Vec<Vec<(usize, Entry)>>) -> Self {
        let mut m = Self { edges, scale, rows };
        m.normalize();
        m
    }

    fn normalize(&mut self) {
        for row in &mut self.rows {
            row.retain(|(_, z)| *z != ZERO);
        }
        while self.scale > 0
            && self.rows.iter().flatten().all(|(_, z)| z.re % 2 == 0 && z.im % 2 == 0)
        {
            for (_, z) in self.rows.iter_mut().flatten() {
                *z = Complex::new(z.re / 2, z.im / 2);
            }
            self.scale -= 1;
        }
        if self.rows.iter().all(Vec::is_empty) {
            self.scale = 0;
        }
    }

    pub fn identity(patch: &Patch) -> Result<Self> {
        check_size(patch)?;
        let edges: Vec<Edge> = patch.edges.iter().copied().collect();
        let dim = 1usize << edges.len();
        Ok(Self { edges, scale: 0, rows: (0..dim).map(|i| vec![(i, ONE)]).collect() })
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn nonzeros(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn entry(&self, i: usize, j: usize) -> Gaussian {
        let z = self.rows[i].iter().find(|(c, _)| *c == j).map_or(ZERO, |(_, z)| *z);
        to_gaussian(z, self.scale)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    fn same_space(&self, other: &Self) {
        assert_eq!(self.edges, other.edges, "operators on different patches");
    }

    fn combine(&self, other: &Self, sign: i64) -> Self {
        self.same_space(other);
        let scale = self.scale.max(other.scale);
        let (sa, sb) = (1i64 << (scale - self.scale), (1i64 << (scale - other.scale)) * sign);
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut acc: BTreeMap<usize, Entry> = BTreeMap::new();
                for (j, z) in a {
                    *acc.entry(*j).or_insert(ZERO) += z * sa;
                }
                for (j, z) in b {
                    *acc.entry(*j).or_insert(ZERO) += z * sb;
                }
                acc.into_iter().collect()
            })
            .collect();
        Self::from_rows(self.edges.clone(), scale, rows)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, -1)
    }

    /// Multiplies by the Gaussian integer `c` and divides by `2^halvings`.
    pub fn scaled(&self, c: Entry, halvings: u32) -> Self {
        let rows = self.rows.iter().map(|r| r.iter().map(|(j, z)| (*j, z * c)).collect()).collect();
        Self::from_rows(self.edges.clone(), self.scale + halvings, rows)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same_space(other);
        let dim = self.dimension();
        let mut scratch = vec![ZERO; dim];
        let mut touched = Vec::new();
        let rows = self
            .rows
            .iter()
            .map(|row| {
                for (k, a) in row {
                    for (j, b) in &other.rows[*k] {
                        if scratch[*j] == ZERO {
                            touched.push(*j);
                        }
                        scratch[*j] += a * b;
                    }
                }
                touched.sort_unstable();
                touched.dedup();
                let out: Vec<(usize, Entry)> =
                    touched.iter().map(|j| (*j, std::mem::replace(&mut scratch[*j], ZERO))).filter(|(_, z)| *z != ZERO).collect();
                touched.clear();
                out
            })
            .collect();
        Self::from_rows(self.edges.clone(), self.scale + other.scale, rows)
    }

    pub fn adjoint(&self) -> Self {
        let mut rows = vec![Vec::new(); self.dimension()];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, z) in row {
                rows[*j].push((i, z.conj()));
            }
        }
        Self::from_rows(self.edges.clone(), self.scale, rows)
    }

    pub fn is_hermitian(&self) -> bool {
        self.adjoint() == *self
    }

    /// Unitary and Hermitian.
    pub fn is_involution(&self) -> bool {
        self.is_hermitian() && self.mul(self) == Self { edges: self.edges.clone(), scale: 0, rows: identity_rows(self.dimension()) }
    }

    /// The Gaussian integer `c` with `self = c · other`, if there is one.
    pub fn ratio(&self, other: &Self) -> Option<Entry> {
        self.same_space(other);
        let Some((i, (j, b))) = other.rows.iter().enumerate().find_map(|(i, r)| r.first().map(|e| (i, *e))) else {
            return self.is_zero().then_some(ZERO);
        };
        let (_, a) = self.rows[i].iter().find(|(c, _)| *c == j)?;
        // a / 2^s = c · b / 2^t
        let (a, b) = if self.scale >= other.scale {
            (*a, b * (1i64 << (self.scale - other.scale)))
        } else {
            (a * (1i64 << (other.scale - self.scale)), b)
        };
        let (num, den) = (a * b.conj(), b.norm_sqr());
        if num.re % den != 0 || num.im % den != 0 {
            return None;
        }
        let c = Complex::new(num.re / den, num.im / den);
        (*self == other.scaled(c, 0)).then_some(c)
    }

    pub fn is_idempotent(&self) -> bool {
        self.mul(self) == *self
    }

    fn trace_entry(&self) -> Entry {
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.iter().find(|(j, _)| *j == i).map(|(_, z)| *z))
            .fold(ZERO, |a, b| a + b)
    }

    pub fn trace(&self) -> Gaussian {
        to_gaussian(self.trace_entry(), self.scale)
    }
}

fn identity_rows(dim: usize) -> Vec<Vec<(usize, Entry)>> {
    (0..dim).map(|i| vec![(i, ONE)]).collect()
}

/// Column `bit` of the 2×2 product `σˣ^{x} σᶻ^{z}` as `(row bit, value)` pairs.
fn local_column(x: bool, z: bool, bit: usize) -> Vec<(usize, Entry)> {
    let sx = [[ZERO, ONE], [ONE, ZERO]];
    let sz = [[ONE, ZERO], [ZERO, -ONE]];
    let id = [[ONE, ZERO], [ZERO, ONE]];
    let a = if x { sx } else { id };
    let b = if z { sz } else { id };
    (0..2)
        .map(|r| (r, (0..2).map(|k| a[r][k] * b[k][bit]).fold(ZERO, |s, t| s + t)))
        .filter(|(_, v)| *v != ZERO)
        .collect()
}

/// Tensor product over the patch of the single-qubit factors of `p`, times its phase.
pub fn dense(p: &PauliOperator, patch: &Patch) -> Result<DenseOperator> {
    check_size(patch)?;
    if !p.support().iter().all(|e| patch.contains(e)) {
        return Err(Error::SupportOverflow);
    }
    let edges: Vec<Edge> = patch.edges.iter().copied().collect();
    let n = edges.len();
    let phase = match p.phase.power() {
        0 => ONE,
        1 => Complex::new(0, 1),
        2 => -ONE,
        _ => Complex::new(0, -1),
    };
    let locals: Vec<[Vec<(usize, Entry)>; 2]> = edges
        .iter()
        .map(|e| {
            let (x, z) = (p.x_support.contains(e), p.z_support.contains(e));
            [local_column(x, z, 0), local_column(x, z, 1)]
        })
        .collect();
    let dim = 1usize << n;
    let mut rows = vec![Vec::new(); dim];
    let (mut terms, mut next) = (Vec::with_capacity(2), Vec::with_capacity(2));
    for col in 0..dim {
        terms.clear();
        terms.push((0usize, phase));
        for (i, local) in locals.iter().enumerate() {
            next.clear();
            for (r, v) in &terms {
                for (b, w) in &local[col >> i & 1] {
                    next.push((r | (b << i), v * w));
                }
            }
            std::mem::swap(&mut terms, &mut next);
        }
        for (r, v) in &terms {
            rows[*r].push((col, *v));
        }
    }
    for r in &mut rows {
        r.sort_unstable_by_key(|(j, _)| *j);
    }
    Ok(DenseOperator::from_rows(edges, 0, rows))
}

fn site_factor(w: &Site, minus: bool, patch: &Patch) -> Result<DenseOperator> {
    let s = dense(&site_operator(w), patch)?;
    let s = if minus { s.scaled(-ONE, 0) } else { s };
    Ok(DenseOperator::identity(patch)?.add(&s).scaled(ONE, 1))
}

fn product_projector(patch: &Patch, factors: &[(Site, bool)]) -> Result<DenseOperator> {
    factors.iter().try_fold(DenseOperator::identity(patch)?, |m, (w, minus)| Ok(m.mul(&site_factor(w, *minus, patch)?)))
}

/// `∏ ½(1 + f(w) S_w)` over the element's sites.
pub fn dense_projector(e: &ProjectorNetElement) -> Result<DenseOperator> {
    dense_projector_on(e, e.patch())
}

/// The same projector acting on a larger patch.
pub fn dense_projector_on(e: &ProjectorNetElement, space: &Patch) -> Result<DenseOperator> {
    check_size(space)?;
    if !e.patch().is_subset(space) {
        return Err(Error::NotNested { inner: e.patch().len() });
    }
    let factors: Vec<(Site, bool)> =
        e.sites().iter().map(|w| (*w, e.config().get(w).expect("site has a sign").is_minus())).collect();
    product_projector(space, &factors)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralLevel {
    pub energy: u32,
    pub multiplicity: u64,
}

#[derive(Clone, Debug)]
pub struct HamiltonianSpectrum {
    pub hamiltonian: DenseOperator,
    /// Number of projector terms.
    pub terms: usize,
    pub levels: Vec<SpectralLevel>,
    /// The sector projectors are idempotent, sum to the identity, and each
    /// is an eigenprojector of the Hamiltonian with the stated energy.
    pub resolution_ok: bool,
}

/// `H = Σ_w ½(1 − f(w) S_w)` and its spectrum from syndrome sectors.
pub fn dense_hamiltonian<F: SignField<Site>>(patch: &Patch, f: &F) -> Result<HamiltonianSpectrum> {
    check_size(patch)?;
    let e = projector_net(patch, f)?;
    let base: Vec<(Site, bool)> =
        e.sites().iter().map(|w| (*w, e.config().get(w).expect("site has a sign").is_minus())).collect();
    let id = DenseOperator::identity(patch)?;
    let mut h = DenseOperator::from_rows(id.edges.clone(), 0, vec![Vec::new(); id.dimension()]);
    for (w, minus) in &base {
        h = h.add(&id.sub(&site_factor(w, *minus, patch)?));
    }

    let m = base.len();
    let mut resolution_ok = true;
    let mut total = DenseOperator::from_rows(id.edges.clone(), 0, vec![Vec::new(); id.dimension()]);
    let mut levels: BTreeMap<u32, u64> = BTreeMap::new();
    for sector in 0..1usize << m {
        let factors: Vec<(Site, bool)> = base.iter().enumerate().map(|(i, (w, minus))| (*w, minus ^ (sector >> i & 1 == 1))).collect();
        let p = product_projector(patch, &factors)?;
        let energy = sector.count_ones();
        resolution_ok &= p.is_idempotent() && h.mul(&p) == p.scaled(Complex::new(i64::from(energy), 0), 0);
        let tr = p.trace();
        resolution_ok &= tr.im == Rational64::from_integer(0) && tr.re.is_integer();
        *levels.entry(energy).or_default() += (*tr.re.numer()).max(0) as u64;
        total = total.add(&p);
    }
    resolution_ok &= total == id;
    Ok(HamiltonianSpectrum {
        hamiltonian: h,
        terms: m,
        levels: levels.into_iter().map(|(energy, multiplicity)| SpectralLevel { energy, multiplicity }).collect(),
        resolution_ok,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseCompression {
    /// `Tr(P X P) / Tr(P)`.
    pub omega: Gaussian,
    /// `P X P = ω P`.
    pub proportional: bool,
    pub is_zero: bool,
}

impl DenseCompression {
    pub fn agrees_with(&self, c: &CompressionResult) -> bool {
        match c {
            CompressionResult::Zero => self.is_zero,
            CompressionResult::Scalar(s) => self.proportional && !self.is_zero && self.omega == s.to_gaussian(),
            CompressionResult::Residual => !self.proportional,
        }
    }
}

pub fn dense_compress(p: &PauliOperator, e: &ProjectorNetElement) -> Result<DenseCompression> {
    let proj = dense_projector(e)?;
    let x = dense(p, e.patch())?;
    Ok(compress_with(&proj, &x))
}

/// Compression against an already built projector.
pub fn compress_with(proj: &DenseOperator, x: &DenseOperator) -> DenseCompression {
    let pxp = proj.mul(x).mul(proj);
    let (tp, tx) = (proj.trace_entry(), pxp.trace_entry());
    // Tr(P)·PXP = Tr(PXP)·P, scales aligned
    let lhs = pxp.scaled(tp, proj.scale);
    let rhs = proj.scaled(tx, pxp.scale);
    let omega = to_gaussian(tx, pxp.scale) / to_gaussian(tp, proj.scale);
    DenseCompression { omega, proportional: lhs == rhs, is_zero: pxp.is_zero() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::ExtendedConfig;
    use crate::lattice::{box_patch, Rect, Vertex};
    use crate::pauli::{sigma_x, sigma_y, sigma_z, Phase};
    use crate::scalar::{gaussian, zero};
    use crate::toric::ground_net;

    fn small() -> Patch {
        Patch::from_rect(Rect::new(0, 0, 1, 1))
    }

    #[test]
    fn single_qubit_matrices() {
        let p = Patch::new([Edge::horizontal(0, 0)]);
        let e = Edge::horizontal(0, 0);
        let y = dense(&sigma_y(e), &p).unwrap();
        // σʸ = [[0, −i], [i, 0]]
        assert_eq!(y.entry(0, 1), gaussian(0, -1));
        assert_eq!(y.entry(1, 0), gaussian(0, 1));
        assert_eq!(y.entry(0, 0), zero());
        let z = dense(&sigma_z(e), &p).unwrap();
        assert_eq!(z.entry(1, 1), gaussian(-1, 0));
        assert!(dense(&sigma_x(e), &p).unwrap().is_involution());
    }

    #[test]
    fn multiplicative_with_phase() {
        let p = small();
        let edges: Vec<Edge> = p.edges.iter().copied().collect();
        let a = sigma_x(edges[0]).multiply(&sigma_z(edges[0])).multiply(&sigma_y(edges[2]));
        let b = sigma_z(edges[0]).multiply(&sigma_x(edges[2])).scaled(Phase::I);
        let (da, db) = (dense(&a, &p).unwrap(), dense(&b, &p).unwrap());
        assert_eq!(dense(&a.multiply(&b), &p).unwrap(), da.mul(&db));
        assert_eq!(da.trace(), zero());
    }

    #[test]
    fn cap_and_support() {
        let big = box_patch(Vertex::new(0, 0), 2).unwrap();
        assert!(matches!(dense(&PauliOperator::identity(), &big), Err(Error::OracleTooLarge { .. })));
        assert_eq!(dense(&sigma_x(Edge::vertical(5, 5)), &small()), Err(Error::SupportOverflow));
    }

    #[test]
    fn unit_box_spectrum() {
        let b = box_patch(Vertex::new(0, 0), 1).unwrap();
        let s = dense_hamiltonian(&b, &ExtendedConfig::ones()).unwrap();
        assert!(s.resolution_ok);
        assert_eq!(s.terms, 5);
        let binom = [1u64, 5, 10, 10, 5, 1];
        for l in &s.levels {
            assert_eq!(l.multiplicity, binom[l.energy as usize] << 7);
        }
        let p = dense_projector(&ground_net(&b)).unwrap();
        assert!(p.is_hermitian() && p.is_idempotent());
        assert_eq!(p.trace(), gaussian(128, 0));
    }

    #[test]
    fn compression_of_a_star() {
        let b = box_patch(Vertex::new(0, 0), 1).unwrap();
        let e = ground_net(&b);
        let star = crate::toric::star(Vertex::new(0, 0));
        let c = dense_compress(&star, &e).unwrap();
        assert!(c.proportional && c.omega == gaussian(1, 0));
        let c = dense_compress(&sigma_z(Edge::horizontal(0, 0)), &e).unwrap();
        assert!(c.is_zero && c.proportional);
        let c = dense_compress(&sigma_z(Edge::horizontal(-1, -1)), &e).unwrap();
        assert!(!c.proportional);
    }
}

