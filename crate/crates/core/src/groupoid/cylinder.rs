//! Cylinder sets `Ω(K, ε)` and integer-valued locally constant functions on
//! them, for any key type (sites for the toric diagonal, edges for the
//! standard one).

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::dyadic::Dyadic;
use crate::config::{Configuration, Sign, SignField};
use crate::error::{Error, Result};

/// Largest key set a function table may span.
pub const MAX_KEYS: usize = 20;

/// A finite set of keys whose sign is flipped.
pub trait FlipPattern<K> {
    fn flips(&self) -> &BTreeSet<K>;
}

/// Finitely supported flips of edges: the acting group of the standard diagonal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct KeyFlip<K: Ord> {
    flips: BTreeSet<K>,
}

impl<K: Ord + Copy> KeyFlip<K> {
    pub fn new(flips: BTreeSet<K>) -> Self {
        Self { flips }
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self { flips: self.flips.symmetric_difference(&other.flips).copied().collect() }
    }
}

impl<K: Ord> FlipPattern<K> for KeyFlip<K> {
    fn flips(&self) -> &BTreeSet<K> {
        &self.flips
    }
}

/// Pointwise multiplication by a flip pattern.
pub trait Act<K> {
    fn act<B: FlipPattern<K>>(&self, b: &B) -> Self;
}

pub fn act<K, B: FlipPattern<K>, T: Act<K>>(b: &B, target: &T) -> T {
    target.act(b)
}

impl<K: Ord + Copy> Act<K> for Configuration<K> {
    fn act<B: FlipPattern<K>>(&self, b: &B) -> Self {
        Configuration::new(
            self.window()
                .map(|k| {
                    let s = self.get(k).expect("key from window");
                    (*k, if b.flips().contains(k) { s.flip() } else { s })
                })
                .collect(),
        )
    }
}

/// `Ω(K, ε)`; an empty pattern is the whole space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CylinderSet<K: Ord> {
    pattern: BTreeMap<K, Sign>,
}

impl<K: Ord + Copy> CylinderSet<K> {
    pub fn new(pattern: BTreeMap<K, Sign>) -> Self {
        Self { pattern }
    }

    pub fn whole() -> Self {
        Self { pattern: BTreeMap::new() }
    }

    /// `Ω(K, +1…+1)`.
    pub fn canonical<I: IntoIterator<Item = K>>(keys: I) -> Self {
        Self { pattern: keys.into_iter().map(|k| (k, Sign::Plus)).collect() }
    }

    pub fn pattern(&self) -> &BTreeMap<K, Sign> {
        &self.pattern
    }

    pub fn key_set(&self) -> BTreeSet<K> {
        self.pattern.keys().copied().collect()
    }

    /// `None` when the field does not determine membership.
    pub fn contains<F: SignField<K>>(&self, f: &F) -> Option<bool> {
        let mut inside = true;
        for (k, s) in &self.pattern {
            inside &= f.sign_at(k)? == *s;
        }
        Some(inside)
    }

    /// Splits into the `2^{|K′∖K|}` cylinders over `keys`.
    pub fn refine(&self, keys: &BTreeSet<K>) -> Result<Vec<Self>> {
        if !self.pattern.keys().all(|k| keys.contains(k)) {
            return Err(Error::NotRefinement);
        }
        let extra: Vec<K> = keys.iter().filter(|k| !self.pattern.contains_key(k)).copied().collect();
        if extra.len() > MAX_KEYS {
            return Err(Error::SupportOverflow);
        }
        Ok((0..1usize << extra.len())
            .map(|bits| {
                let mut pattern = self.pattern.clone();
                for (i, k) in extra.iter().enumerate() {
                    pattern.insert(*k, Sign::from_bool_minus(bits >> i & 1 == 1));
                }
                Self { pattern }
            })
            .collect())
    }

    pub fn indicator(&self) -> CylinderFunction<K> {
        let keys: Vec<K> = self.pattern.keys().copied().collect();
        let target = index_of(self.pattern.values().copied());
        let table = (0..1usize << keys.len()).map(|j| i64::from(j == target)).collect();
        CylinderFunction::from_raw(keys, table)
    }
}

impl<K: Ord + Copy> Act<K> for CylinderSet<K> {
    fn act<B: FlipPattern<K>>(&self, b: &B) -> Self {
        Self {
            pattern: self
                .pattern
                .iter()
                .map(|(k, s)| (*k, if b.flips().contains(k) { s.flip() } else { *s }))
                .collect(),
        }
    }
}

fn index_of<I: IntoIterator<Item = Sign>>(signs: I) -> usize {
    signs.into_iter().enumerate().fold(0, |acc, (i, s)| acc | (usize::from(s.is_minus()) << i))
}

/// `Σ_ε table[ε] · 1_{Ω(K,ε)}`. Bit `i` of a table index is set when
/// `keys[i]` takes the value `−1`. The key set is kept minimal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CylinderFunction<K: Ord> {
    keys: Vec<K>,
    table: Vec<i64>,
}

impl<K: Ord + Copy> CylinderFunction<K> {
    /// `keys` must be strictly increasing and `table` of length `2^{|keys|}`.
    pub fn from_table(keys: Vec<K>, table: Vec<i64>) -> Result<Self> {
        if keys.len() > MAX_KEYS {
            return Err(Error::SupportOverflow);
        }
        if !keys.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument("keys must be strictly increasing".into()));
        }
        if table.len() != 1 << keys.len() {
            return Err(Error::InvalidArgument(format!(
                "table has {} entries, expected {}",
                table.len(),
                1usize << keys.len()
            )));
        }
        Ok(Self::from_raw(keys, table))
    }

    fn from_raw(keys: Vec<K>, table: Vec<i64>) -> Self {
        let mut q = Self { keys, table };
        q.canonicalize();
        q
    }

    pub fn constant(c: i64) -> Self {
        Self { keys: Vec::new(), table: vec![c] }
    }

    pub fn keys(&self) -> &[K] {
        &self.keys
    }

    pub fn table(&self) -> &[i64] {
        &self.table
    }

    fn canonicalize(&mut self) {
        let mut i = 0;
        while i < self.keys.len() {
            let bit = 1usize << i;
            let independent = (0..self.table.len()).filter(|j| j & bit == 0).all(|j| self.table[j] == self.table[j | bit]);
            if independent {
                let low = bit - 1;
                self.table = (0..self.table.len() / 2).map(|j| self.table[(j & low) | ((j & !low) << 1)]).collect();
                self.keys.remove(i);
            } else {
                i += 1;
            }
        }
    }

    pub fn value_at<F: SignField<K>>(&self, f: &F) -> Option<i64> {
        let mut j = 0;
        for (i, k) in self.keys.iter().enumerate() {
            j |= usize::from(f.sign_at(k)?.is_minus()) << i;
        }
        Some(self.table[j])
    }

    /// The table over a superset of the keys.
    pub fn refine(&self, keys: &BTreeSet<K>) -> Result<(Vec<K>, Vec<i64>)> {
        if !self.keys.iter().all(|k| keys.contains(k)) {
            return Err(Error::NotRefinement);
        }
        if keys.len() > MAX_KEYS {
            return Err(Error::SupportOverflow);
        }
        let all: Vec<K> = keys.iter().copied().collect();
        let positions: Vec<usize> = self.keys.iter().map(|k| all.binary_search(k).expect("subset")).collect();
        let table = (0..1usize << all.len())
            .map(|j| {
                let old = positions.iter().enumerate().fold(0, |acc, (i, p)| acc | ((j >> p & 1) << i));
                self.table[old]
            })
            .collect();
        Ok((all, table))
    }

    fn combine(&self, other: &Self, op: impl Fn(i64, i64) -> i64) -> Result<Self> {
        let keys: BTreeSet<K> = self.keys.iter().chain(&other.keys).copied().collect();
        let (all, a) = self.refine(&keys)?;
        let (_, b) = other.refine(&keys)?;
        Ok(Self::from_raw(all, a.into_iter().zip(b).map(|(x, y)| op(x, y)).collect()))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, |x, y| x + y)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, |x, y| x - y)
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_raw(self.keys.clone(), self.table.iter().map(|x| x * c).collect())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.table.iter().all(|x| *x >= 0)
    }

    /// `∫ Q dμ` for the uniform product measure.
    pub fn measure(&self) -> Dyadic {
        Dyadic::new(self.table.iter().sum(), self.keys.len() as u32)
    }

    /// `[Q] = a · [1_{Ω(K, +…+)}]`.
    pub fn class_reduce(&self) -> ClassReduction<K> {
        ClassReduction {
            coefficient: self.table.iter().sum(),
            representative: CylinderSet::canonical(self.keys.iter().copied()),
        }
    }
}

impl<K: Ord + Copy> Act<K> for CylinderFunction<K> {
    fn act<B: FlipPattern<K>>(&self, b: &B) -> Self {
        let mask = index_of(self.keys.iter().map(|k| Sign::from_bool_minus(b.flips().contains(k))));
        Self { keys: self.keys.clone(), table: (0..self.table.len()).map(|j| self.table[j ^ mask]).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassReduction<K: Ord> {
    pub coefficient: i64,
    pub representative: CylinderSet<K>,
}

impl<K: Ord + Copy> ClassReduction<K> {
    pub fn measure(&self) -> Dyadic {
        self.representative.indicator().measure().scale(self.coefficient)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{Site, Vertex};
    use proptest::prelude::*;

    fn keys(n: i64) -> Vec<Site> {
        (0..n).map(|i| Site::Vertex(Vertex::new(i, 0))).collect()
    }

    fn cyl(signs: &[i8]) -> CylinderSet<Site> {
        CylinderSet::new(keys(signs.len() as i64).into_iter().zip(signs.iter().map(|s| Sign::try_from(*s).unwrap())).collect())
    }

    #[test]
    fn indicator_measure() {
        assert_eq!(cyl(&[1, -1, 1]).indicator().measure(), Dyadic::new(1, 3));
        assert_eq!(CylinderFunction::<Site>::constant(1).measure(), Dyadic::one());
        assert_eq!(CylinderSet::<Site>::whole().indicator(), CylinderFunction::constant(1));
    }

    #[test]
    fn redundant_keys_dropped() {
        let q = CylinderFunction::from_table(keys(2), vec![5, 7, 5, 7]).unwrap();
        assert_eq!(q.keys(), &keys(1)[..]);
        assert_eq!(q.table(), &[5, 7]);
        let sum = cyl(&[1]).indicator().add(&cyl(&[-1]).indicator()).unwrap();
        assert_eq!(sum, CylinderFunction::constant(1));
    }

    #[test]
    fn two_cylinders_reduce() {
        let q = cyl(&[1, 1]).indicator().add(&cyl(&[-1, 1]).indicator().add(&cyl(&[-1, -1]).indicator()).unwrap()).unwrap();
        let r = q.class_reduce();
        assert_eq!(r.coefficient, 3);
        assert_eq!(r.representative, cyl(&[1, 1]));
        assert_eq!(r.measure(), q.measure());
    }

    #[test]
    fn refine_partitions() {
        let c = cyl(&[-1]);
        let all: BTreeSet<Site> = keys(3).into_iter().collect();
        let parts = c.refine(&all).unwrap();
        assert_eq!(parts.len(), 4);
        let total = parts.iter().try_fold(CylinderFunction::constant(0), |acc, p| acc.add(&p.indicator())).unwrap();
        assert_eq!(total, c.indicator());
        assert!(cyl(&[1, 1]).refine(&keys(1).into_iter().collect()).is_err());
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(CylinderFunction::from_table(keys(2), vec![1, 2, 3]).is_err());
        let mut k = keys(2);
        k.reverse();
        assert!(CylinderFunction::from_table(k, vec![1, 2, 3, 4]).is_err());
    }

    proptest! {
        #[test]
        fn action_is_involutive_and_measure_preserving(
            table in proptest::collection::vec(-4i64..5, 16),
            flips in proptest::collection::btree_set(0i64..6, 0..6),
        ) {
            let q = CylinderFunction::from_table(keys(4), table).unwrap();
            let b = KeyFlip::new(flips.into_iter().map(|i| Site::Vertex(Vertex::new(i, 0))).collect());
            prop_assert_eq!(q.act(&b).act(&b), q.clone());
            prop_assert_eq!(q.act(&b).measure(), q.measure());
            prop_assert_eq!(q.sub(&q.act(&b)).unwrap().class_reduce().coefficient, 0);
            prop_assert_eq!(q.class_reduce().measure(), q.measure());
            let wide: BTreeSet<Site> = keys(6).into_iter().collect();
            let (k, t) = q.refine(&wide).unwrap();
            prop_assert_eq!(CylinderFunction::from_table(k, t).unwrap(), q);
        }

        #[test]
        fn action_on_sets_matches_functions(signs in proptest::collection::vec(prop_oneof![Just(1i8), Just(-1i8)], 1..5),
                                            flips in proptest::collection::btree_set(0i64..6, 0..6)) {
            let c = cyl(&signs);
            let b = KeyFlip::new(flips.into_iter().map(|i| Site::Vertex(Vertex::new(i, 0))).collect());
            prop_assert_eq!(c.act(&b).indicator(), c.indicator().act(&b));
        }
    }
}
