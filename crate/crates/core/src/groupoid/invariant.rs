//! The ordered group `(H₀, H₀⁺, [1])` seen through the measure map, for the
//! toric diagonal (keys are sites, flips are boundary patterns) and the
//! standard diagonal (keys are edges, flips are arbitrary).

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::cylinder::{Act, CylinderFunction, CylinderSet, FlipPattern, KeyFlip};
use super::dyadic::Dyadic;
use super::gamma::{boundary, solve_boundary, BoundaryPattern};
use crate::config::Sign;
use crate::lattice::{Edge, Rect, Site, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiagonalModel {
    ToricDiagonal,
    StandardDiagonal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvariantOptions {
    /// Number of keys in the window.
    pub window: usize,
    pub samples: usize,
    /// Largest key set of a sampled function.
    pub max_keys: usize,
    pub seed: u64,
}

impl Default for InvariantOptions {
    fn default() -> Self {
        Self { window: 16, samples: 200, max_keys: 8, seed: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleRecord {
    pub keys: usize,
    pub coefficient: i64,
    pub measure: Dyadic,
    pub nonnegative: bool,
}

/// Model-independent content of the report; equal across the two models.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleData {
    pub window: usize,
    /// `a · 2^{−k}` for `|a| ≤ 3`, `k ≤ window`, each realized by an indicator multiple.
    pub realizable: Vec<Dyadic>,
    pub order_unit: Dyadic,
    pub samples: Vec<SampleRecord>,
    pub consistency_ok: bool,
    pub exchange_ok: bool,
    pub invariance_ok: bool,
    pub image_ok: bool,
    pub positivity_ok: bool,
    pub homomorphism_ok: bool,
    pub injective_ok: bool,
}

impl TripleData {
    pub fn holds(&self) -> bool {
        self.order_unit == Dyadic::one()
            && self.consistency_ok
            && self.exchange_ok
            && self.invariance_ok
            && self.image_ok
            && self.positivity_ok
            && self.homomorphism_ok
            && self.injective_ok
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub model: DiagonalModel,
    pub data: TripleData,
}

trait Model {
    type Key: Ord + Copy;
    type Flip: FlipPattern<Self::Key>;

    fn window(n: usize) -> Vec<Self::Key>;
    /// A flip whose restriction to the target's keys is the target.
    fn exchange(target: &BTreeMap<Self::Key, Sign>) -> Self::Flip;
}

struct Toric;
struct Standard;

fn growing_rect<T: Ord, F: Fn(&Rect) -> Vec<T>>(n: usize, keys: F) -> Vec<T> {
    let mut r = 0;
    loop {
        let mut all = keys(&Rect::square(Vertex::new(0, 0), r));
        if all.len() >= n {
            all.truncate(n);
            return all;
        }
        r += 1;
    }
}

impl Model for Toric {
    type Key = Site;
    type Flip = BoundaryPattern;

    fn window(n: usize) -> Vec<Site> {
        // half vertices, half faces
        let faces = n / 2;
        let mut v: Vec<Site> = growing_rect(n - faces, |r| r.vertices().map(Site::Vertex).collect());
        v.extend(growing_rect(faces, |r| r.faces().map(Site::Face).collect()));
        v.sort();
        v
    }

    fn exchange(target: &BTreeMap<Site, Sign>) -> BoundaryPattern {
        boundary(&solve_boundary(target))
    }
}

impl Model for Standard {
    type Key = Edge;
    type Flip = KeyFlip<Edge>;

    fn window(n: usize) -> Vec<Edge> {
        growing_rect(n, |r| r.edges().into_iter().collect())
    }

    fn exchange(target: &BTreeMap<Edge, Sign>) -> KeyFlip<Edge> {
        KeyFlip::new(target.iter().filter(|(_, s)| s.is_minus()).map(|(k, _)| *k).collect())
    }
}

/// Index-level draw shared by both models so that they see identical data.
struct Draw {
    keys: Vec<usize>,
    table: Vec<i64>,
    relabel: Vec<bool>,
    flip_keys: Vec<usize>,
    flip_signs: Vec<bool>,
}

fn draws(opts: &InvariantOptions) -> Vec<Draw> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let kmax = opts.max_keys.min(opts.window);
    (0..opts.samples)
        .map(|i| {
            let k = rng.gen_range(0..=kmax);
            let mut keys = sample(&mut rng, opts.window, k).into_vec();
            keys.sort_unstable();
            // every third sample is non-negative so positivity is exercised
            let low = if i % 3 == 0 { 0 } else { -3 };
            let table = (0..1usize << k).map(|_| rng.gen_range(low..=3)).collect();
            let relabel = (0..k).map(|_| rng.gen_bool(0.5)).collect();
            let nf = rng.gen_range(0..=kmax);
            let flip_keys = sample(&mut rng, opts.window, nf).into_vec();
            let flip_signs = (0..nf).map(|_| rng.gen_bool(0.5)).collect();
            Draw { keys, table, relabel, flip_keys, flip_signs }
        })
        .collect()
}

fn run<M: Model>(opts: &InvariantOptions) -> TripleData {
    let window = M::window(opts.window);
    let realizable_max = opts.window.min(opts.max_keys.max(1));
    let mut realizable = BTreeSet::new();
    let mut image_ok = true;
    for k in 0..=realizable_max {
        for a in -3..=3i64 {
            let q = CylinderSet::canonical(window[..k].iter().copied()).indicator().scale(a);
            let m = q.measure();
            image_ok &= m == Dyadic::new(a, k as u32);
            realizable.insert(m);
        }
    }
    let order_unit = CylinderFunction::<M::Key>::constant(1).measure();

    let mut samples = Vec::new();
    let (mut consistency_ok, mut exchange_ok, mut invariance_ok) = (true, true, true);
    let (mut positivity_ok, mut homomorphism_ok, mut injective_ok) = (true, true, true);
    let mut previous: Option<CylinderFunction<M::Key>> = None;
    for d in draws(opts) {
        let keys: Vec<M::Key> = d.keys.iter().map(|i| window[*i]).collect();
        let q = CylinderFunction::from_table(keys.clone(), d.table).expect("valid draw");
        let m = q.measure();
        let r = q.class_reduce();

        consistency_ok &= r.measure() == m && m == Dyadic::new(r.coefficient, q.keys().len() as u32);

        // the representative is reached from any cylinder on the same keys
        let from: BTreeMap<M::Key, Sign> = keys.iter().zip(&d.relabel).map(|(k, b)| (*k, Sign::from_bool_minus(*b))).collect();
        let c = CylinderSet::new(from.clone());
        exchange_ok &= c.act(&M::exchange(&from)) == CylinderSet::canonical(keys.iter().copied());

        let target: BTreeMap<M::Key, Sign> =
            d.flip_keys.iter().zip(&d.flip_signs).map(|(i, b)| (window[*i], Sign::from_bool_minus(*b))).collect();
        let b = M::exchange(&target);
        let moved = q.act(&b);
        invariance_ok &= moved.measure() == m && q.sub(&moved).map(|x| x.class_reduce().coefficient == 0).unwrap_or(false);

        let nonnegative = q.is_nonnegative();
        positivity_ok &= !nonnegative || m.is_nonnegative();
        injective_ok &= m.is_zero() == (r.coefficient == 0);
        if let Some(p) = &previous {
            homomorphism_ok &= p.add(&q).map(|s| s.measure() == p.measure() + m).unwrap_or(false);
        }
        samples.push(SampleRecord { keys: q.keys().len(), coefficient: r.coefficient, measure: m, nonnegative });
        image_ok &= m.exponent() as usize <= q.keys().len();
        previous = Some(q);
    }
    positivity_ok &= samples.iter().any(|s| s.nonnegative && !s.measure.is_zero());

    TripleData {
        window: opts.window,
        realizable: realizable.into_iter().collect(),
        order_unit,
        samples,
        consistency_ok,
        exchange_ok,
        invariance_ok,
        image_ok,
        positivity_ok,
        homomorphism_ok,
        injective_ok,
    }
}

pub fn invariant_triple(model: DiagonalModel, opts: &InvariantOptions) -> InvariantReport {
    let data = match model {
        DiagonalModel::ToricDiagonal => run::<Toric>(opts),
        DiagonalModel::StandardDiagonal => run::<Standard>(opts),
    };
    InvariantReport { model, data }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_models_agree() {
        let opts = InvariantOptions { samples: 60, ..Default::default() };
        let toric = invariant_triple(DiagonalModel::ToricDiagonal, &opts);
        let standard = invariant_triple(DiagonalModel::StandardDiagonal, &opts);
        assert!(toric.data.holds(), "{:?}", toric.data);
        assert_eq!(toric.data, standard.data);
    }

    #[test]
    fn windows_are_distinct() {
        let w = Toric::window(16);
        assert_eq!(w.iter().collect::<BTreeSet<_>>().len(), 16);
        assert_eq!(Standard::window(16).len(), 16);
    }
}
