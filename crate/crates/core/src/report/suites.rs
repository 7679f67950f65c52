use std::collections::{BTreeMap, BTreeSet};

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{sample, Case, Outcome, RunOptions};
use crate::config::{ExtendedConfig, Sign};
use crate::error::Result;
use crate::groupoid::{
    boundary, freeness_check, invariant_triple, orbit_reach, ribbon_to_gamma, solve_boundary, word_operator, Act,
    BoundaryPattern, CylinderFunction, CylinderSet, DiagonalModel, FlipPattern, Dyadic, GammaElement, InvariantOptions,
};
use crate::lattice::{box_patch, face_edges, l_dual_path, l_path, star_edges, Edge, Face, Patch, Rect, Routing, Site, Vertex};
use crate::oracle::{compress_with, dense, dense_hamiltonian, dense_projector, dense_projector_on, DenseOperator};
use crate::pauli::{full_syndrome, ribbon_x, ribbon_z, Membership, PauliKind, PauliOperator, PauliSum, Phase, SignedStabilizerGroup};
use crate::scalar::{gaussian, Gaussian};
use crate::toric::{
    compress, conditional_expectation, ff_monotone, ground_net, ltqo_radius, no_lift_certificate, omega_f,
    path_independence, projector_net, site_operator, stabilization_length, transport_check, truncated_symmetry,
    GrowthConfig, StabilizerPolynomial,
};

fn rng(seed: u64, tag: &str) -> ChaCha8Rng {
    let h = tag.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3));
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

fn window(n: i64) -> Rect {
    Rect::square(Vertex::new(0, 0), n)
}

fn sites_of(rect: &Rect) -> Vec<Site> {
    rect.vertices().map(Site::Vertex).chain(rect.faces().map(Site::Face)).collect()
}

fn unit_box() -> Patch {
    box_patch(Vertex::new(0, 0), 1).expect("unit box")
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

fn random_routing<R: Rng>(rng: &mut R) -> Routing {
    if rng.gen_bool(0.5) {
        Routing::HorizontalFirst
    } else {
        Routing::VerticalFirst
    }
}

fn phase_entry(p: Phase) -> Complex<i64> {
    [Complex::new(1, 0), Complex::new(0, 1), Complex::new(-1, 0), Complex::new(0, -1)][p.power() as usize]
}

fn gaussian_entry(c: &Gaussian) -> Complex<i64> {
    assert!(c.re.is_integer() && c.im.is_integer(), "integer coefficients only");
    Complex::new(c.re.to_integer(), c.im.to_integer())
}

pub(super) fn algebra(o: &RunOptions) -> Vec<Case> {
    let (seed, b, samples) = (o.seed, o.box_size, o.samples);
    vec![
        Case::new(
            "algebra.site-operators",
            "A_v² = B_f² = 1, A_v B_f = B_f A_v",
            json!({ "window_half_width": b + 2 }),
            move || {
                let ops: Vec<(Site, PauliOperator)> =
                    sites_of(&window(b + 2)).into_iter().map(|w| (w, site_operator(&w))).collect();
                let mut pairs = 0usize;
                for (i, (w, p)) in ops.iter().enumerate() {
                    if !p.is_hermitian() || !p.multiply(p).is_identity() {
                        return Ok(Outcome::new(false, json!({ "not_involution": w })));
                    }
                    for (w2, q) in &ops[i + 1..] {
                        pairs += 1;
                        if !p.commutes(q) {
                            return Ok(Outcome::new(false, json!({ "anticommuting": [w, w2] })));
                        }
                    }
                }
                Ok(Outcome::new(true, json!({ "operators": ops.len(), "pairs": pairs })))
            },
        ),
        Case::new(
            "algebra.ribbon-signs",
            "F^z_ρ A_v = (−1)^{1_{∂ρ}(v)} A_v F^z_ρ, F^z_ρ B_f = B_f F^z_ρ, and dually for F^x",
            json!({ "window_half_width": b + 2, "samples": samples }),
            move || {
                let mut rng = rng(seed, "algebra.ribbon-signs");
                let rect = window(b + 2);
                let mut by_rule: BTreeMap<String, usize> = BTreeMap::new();
                for _ in 0..samples {
                    let z_kind = rng.gen_bool(0.5);
                    let routing = random_routing(&mut rng);
                    let (ribbon, ends) = if z_kind {
                        let (a, c) = sample::distinct_vertices(&mut rng, &rect);
                        (ribbon_z(&l_path(a, c, routing)?)?, [Site::Vertex(a), Site::Vertex(c)])
                    } else {
                        let (a, c) = sample::distinct_faces(&mut rng, &rect);
                        (ribbon_x(&l_dual_path(a, c, routing)?)?, [Site::Face(a), Site::Face(c)])
                    };
                    let w = if rng.gen_bool(0.25) { ends[rng.gen_range(0..2)] } else { sample::site(&mut rng, &rect) };
                    let expected = ends.contains(&w);
                    let anticommutes = !ribbon.commutes(&site_operator(&w));
                    let rule = format!(
                        "{}-ribbon/{}{}",
                        if z_kind { "z" } else { "x" },
                        if w.is_vertex() { "star" } else { "face" },
                        if expected { "/endpoint" } else { "" }
                    );
                    *by_rule.entry(rule).or_default() += 1;
                    if anticommutes != expected {
                        return Ok(Outcome::new(false, json!({ "site": w, "ends": ends, "anticommutes": anticommutes })));
                    }
                }
                Ok(Outcome::new(true, json!({ "checked_by_rule": by_rule })))
            },
        ),
        Case::new(
            "algebra.syndrome-parity",
            "|syn(p) ∩ V| ≡ |syn(p) ∩ F| ≡ 0 (mod 2)",
            json!({ "window_half_width": b + 2, "samples": samples * 10 }),
            move || {
                let mut rng = rng(seed, "algebra.syndrome-parity");
                let edges: Vec<Edge> = window(b + 2).edges().into_iter().collect();
                let mut max_excitations = 0;
                for _ in 0..samples * 10 {
                    let density = rng.gen_range(0.01..0.3);
                    let p = sample::pauli(&mut rng, &edges, density);
                    let s = full_syndrome(&p);
                    let stars = s.iter().filter(|w| w.is_vertex()).count();
                    if stars % 2 == 1 || (s.len() - stars) % 2 == 1 {
                        return Ok(Outcome::new(false, json!({ "operator": p, "syndrome": s })));
                    }
                    max_excitations = max_excitations.max(s.len());
                }
                Ok(Outcome::new(true, json!({ "max_excitations": max_excitations })))
            },
        ),
        Case::new(
            "algebra.path-independence",
            "R_ρ R_ρ'⁻¹ ∈ +⟨A_v, B_f⟩ for one excitation kind",
            json!({ "window_half_width": b + 1, "samples": (samples / 5).max(1) }),
            move || {
                let mut rng = rng(seed, "algebra.path-independence");
                let rect = window(b + 1);
                let mut checked = 0;
                for _ in 0..(samples / 5).max(1) {
                    let vertex_kind = rng.gen_bool(0.5);
                    let pairs = rng.gen_range(1..=2);
                    let mut used = BTreeSet::new();
                    let (mut vp, mut fp) = (Vec::new(), Vec::new());
                    while vp.len() + fp.len() < pairs {
                        if vertex_kind {
                            let (a, c) = sample::distinct_vertices(&mut rng, &rect);
                            if used.insert(Site::Vertex(a)) & used.insert(Site::Vertex(c)) {
                                vp.push((a, c));
                            }
                        } else {
                            let (a, c) = sample::distinct_faces(&mut rng, &rect);
                            if used.insert(Site::Face(a)) & used.insert(Site::Face(c)) {
                                fp.push((a, c));
                            }
                        }
                    }
                    match path_independence(&vp, &fp)? {
                        Membership::Member { sign, .. } if sign == Phase::ONE => checked += 1,
                        m => return Ok(Outcome::new(false, json!({ "vertex_pairs": vp, "face_pairs": fp, "membership": format!("{m:?}") }))),
                    }
                }
                // mixed kinds: the routings may differ by a braiding sign
                let mixed = path_independence(&[(Vertex::new(0, 0), Vertex::new(3, 3))], &[(Face::new(2, 2), Face::new(5, 5))])?;
                let braiding = match mixed {
                    Membership::Member { sign, .. } => Some(sign),
                    Membership::NotMember => None,
                };
                Ok(Outcome::new(braiding.is_some(), json!({ "single_kind_checked": checked, "mixed_example_sign": braiding })))
            },
        ),
    ]
}

pub(super) fn frustration_free(o: &RunOptions) -> Vec<Case> {
    let (seed, b, samples) = (o.seed, o.box_size, o.samples);
    let configs = (samples / 10).max(1);
    vec![
        Case::new(
            "frustration-free.nested-boxes",
            "P_Λ ≤ P_Λ' for Λ' ⊆ Λ",
            json!({ "max_box": b, "configs": configs }),
            move || {
                let mut rng = rng(seed, "frustration-free.nested-boxes");
                let origin = Vertex::new(0, 0);
                let mut checked = 0;
                for _ in 0..configs {
                    let f = sample::extended(&mut rng, &box_patch(origin, b)?);
                    for large in 2..=b {
                        let big = projector_net(&box_patch(origin, large)?, &f)?;
                        for small in 1..large {
                            let little = projector_net(&box_patch(origin, small)?, &f)?;
                            if !ff_monotone(&big, &little)? {
                                return Ok(Outcome::new(false, json!({ "large": large, "small": small, "f": f.window })));
                            }
                            checked += 1;
                        }
                    }
                }
                Ok(Outcome::new(true, json!({ "pairs_checked": checked })))
            },
        ),
        Case::new(
            "frustration-free.oracle-order",
            "P_Λ P_Λ' = P_Λ (operator order)",
            json!({ "space": "box(1)", "configs": 10 }),
            move || {
                let mut rng = rng(seed, "frustration-free.oracle-order");
                let space = unit_box();
                let smaller = [
                    Patch::new(star_edges(Vertex::new(0, 0))),
                    Patch::new(face_edges(Face::new(-1, -1))),
                    Patch::from_rect(Rect::new(-1, -1, 1, 0)),
                    Patch::from_rect(Rect::new(-1, -1, 0, 1)),
                ];
                let mut checked = 0;
                for _ in 0..10 {
                    let f = sample::extended(&mut rng, &space);
                    let big = projector_net(&space, &f)?;
                    let symbolic_ok = smaller.iter().all(|s| ff_monotone(&big, &projector_net(s, &f).unwrap()).unwrap());
                    let pb = dense_projector(&big)?;
                    for s in &smaller {
                        let ps = dense_projector_on(&projector_net(s, &f)?, &space)?;
                        if pb.mul(&ps) != pb || ps.mul(&pb) != pb || !symbolic_ok {
                            return Ok(Outcome::new(false, json!({ "smaller_edges": s.len(), "f": f.window })));
                        }
                        checked += 1;
                    }
                }
                Ok(Outcome::new(true, json!({ "pairs_checked": checked })))
            },
        ),
    ]
}

fn single_edge_paulis(patch: &Patch) -> Vec<PauliOperator> {
    patch
        .edges
        .iter()
        .flat_map(|e| {
            [
                PauliOperator::single(PauliKind::X, *e),
                PauliOperator::single(PauliKind::Z, *e),
                crate::pauli::sigma_y(*e),
            ]
        })
        .collect()
}

pub(super) fn ltqo(o: &RunOptions) -> Vec<Case> {
    let (seed, samples) = (o.seed, o.samples);
    let configs = (samples / 20).max(1);
    let oracle_configs = configs.min(8);
    let mut cases = vec![Case::new(
        "ltqo.single-edge",
        "P_Δ X P_Δ = ω_Δ(X) P_Δ, Δ ⊇ box(1) grown by ≤ 3 rings",
        json!({ "region": "box(1)", "configs": configs, "ring_cap": 3 }),
        move || {
            let mut rng = rng(seed, "ltqo.single-edge");
            let region = unit_box();
            let ops = single_edge_paulis(&region);
            let mut rings: BTreeMap<u32, usize> = BTreeMap::new();
            for _ in 0..configs {
                let f = sample::extended(&mut rng, &box_patch(Vertex::new(0, 0), 4)?);
                for x in &ops {
                    let cert = ltqo_radius(&x.clone().into(), &region, &f, GrowthConfig { cap: 3 })?;
                    *rings.entry(cert.rings).or_default() += 1;
                }
            }
            Ok(Outcome::new(true, json!({ "rings_histogram": rings })))
        },
    )];
    for k in 0..oracle_configs {
        cases.push(Case::new(
            format!("ltqo.oracle-{k}"),
            "ω_Λ(X) = Tr(P_Λ X P_Λ) / Tr(P_Λ)",
            json!({ "patch": "box(1)", "config_index": k }),
            move || {
                let mut rng = rng(seed, "ltqo.oracle");
                let region = unit_box();
                let mut f = sample::extended(&mut rng, &region);
                for _ in 0..k {
                    f = sample::extended(&mut rng, &region);
                }
                let net = projector_net(&region, &f)?;
                let p = dense_projector(&net)?;
                let mut classes: BTreeMap<String, usize> = BTreeMap::new();
                for x in single_edge_paulis(&region) {
                    let symbolic = compress(&x, &net);
                    let oracle = compress_with(&p, &dense(&x, &region)?);
                    if !oracle.agrees_with(&symbolic) {
                        return Ok(Outcome::new(false, json!({ "operator": x, "symbolic": symbolic })));
                    }
                    let cert = ltqo_radius(&x.clone().into(), &region, &f, GrowthConfig { cap: 3 })?;
                    if cert.rings == 0 && cert.terms[0].classification != symbolic {
                        return Ok(Outcome::new(false, json!({ "operator": x, "certificate_disagrees": true })));
                    }
                    *classes.entry(format!("{symbolic:?}")).or_default() += 1;
                }
                Ok(Outcome::new(true, json!({ "classifications": classes })))
            },
        ));
    }
    cases
}

/// Fifty Pauli sums on the unit box whose terms the unit box already settles.
pub fn expectation_test_set(seed: u64) -> Vec<PauliSum> {
    let mut rng = rng(seed, "expectation.test-set");
    let region = unit_box();
    let net = ground_net(&region);
    let gens: Vec<PauliOperator> = net.sites().iter().map(site_operator).collect();
    let singles = single_edge_paulis(&region);
    let mut set = vec![PauliSum::identity()];
    while set.len() < 50 {
        let mut x = PauliSum::zero();
        for _ in 0..rng.gen_range(1..=3) {
            let member = gens.iter().filter(|_| rng.gen_bool(0.5)).fold(PauliOperator::identity(), |a, g| a.multiply(g));
            let term = match rng.gen_range(0..3) {
                0 => member,
                1 => singles[rng.gen_range(0..singles.len())].clone(),
                _ => member.multiply(&singles[rng.gen_range(0..singles.len())]),
            };
            if !compress(&term, &net).is_settled() {
                continue;
            }
            let c = gaussian(rng.gen_range(-3..=3), rng.gen_range(-3..=3));
            x.add_term(c, term.scaled(sample::phase(&mut rng)));
        }
        if !x.is_empty() {
            set.push(x);
        }
    }
    set
}

fn dense_sum(x: &PauliSum, patch: &Patch) -> Result<DenseOperator> {
    let mut acc: Option<DenseOperator> = None;
    for (p, c) in x.terms() {
        let d = dense(p, patch)?.scaled(gaussian_entry(c), 0);
        acc = Some(match acc {
            None => d,
            Some(a) => a.add(&d),
        });
    }
    match acc {
        Some(a) => Ok(a),
        None => Ok(DenseOperator::identity(patch)?.scaled(Complex::new(0, 0), 0)),
    }
}

pub(super) fn expectation(o: &RunOptions) -> Vec<Case> {
    let seed = o.seed;
    let mut cases: Vec<Case> = (0..4)
        .map(|k| {
            Case::new(
                format!("expectation.oracle-{k}"),
                "E(a)(f) = ω̃_f(a)",
                json!({ "test_set": 50, "patch": "box(1)", "config_index": k }),
                move || {
                    let mut rng = rng(seed, &format!("expectation.oracle-{k}"));
                    let region = unit_box();
                    let f = sample::extended(&mut rng, &region);
                    let p = dense_projector(&projector_net(&region, &f)?)?;
                    for x in expectation_test_set(seed) {
                        let e = conditional_expectation(&x).evaluate(&f)?;
                        let oracle = compress_with(&p, &dense_sum(&x, &region)?);
                        let symbolic = x
                            .terms()
                            .map(|(t, c)| omega_f(t, &f, GrowthConfig::default()).map(|w| c * w))
                            .sum::<Result<Gaussian>>()?;
                        if !oracle.proportional || oracle.omega != e || symbolic != e {
                            return Ok(Outcome::new(false, json!({ "sum": x.to_string(), "expectation": e.to_string(), "oracle": oracle.omega.to_string() })));
                        }
                    }
                    Ok(Outcome::new(true, json!({ "sums_checked": 50 })))
                },
            )
        })
        .collect();
    cases.push(Case::new(
        "expectation.axioms",
        "E(S x S') = S E(x) S', E∘E = E, E(1) = 1",
        json!({ "test_set": 50 }),
        move || {
            let region = unit_box();
            let sites = region.interior_sites();
            if conditional_expectation(&PauliSum::identity()) != StabilizerPolynomial::monomial(gaussian(1, 0), []) {
                return Ok(Outcome::new(false, json!({ "unitality": false })));
            }
            let mut checked = 0;
            for x in expectation_test_set(seed) {
                let e = conditional_expectation(&x);
                if conditional_expectation(&e.to_pauli_sum()) != e {
                    return Ok(Outcome::new(false, json!({ "idempotence": x.to_string() })));
                }
                for w in &sites {
                    let s = PauliSum::from(site_operator(w));
                    let m = StabilizerPolynomial::monomial(gaussian(1, 0), [*w]);
                    let left = conditional_expectation(&s.multiply(&x)) == m.multiply(&e);
                    let right = conditional_expectation(&x.multiply(&s)) == e.multiply(&m);
                    if !(left && right) {
                        return Ok(Outcome::new(false, json!({ "bimodule": x.to_string(), "site": w })));
                    }
                    checked += 1;
                }
            }
            Ok(Outcome::new(true, json!({ "bimodule_checks": checked })))
        },
    ));
    cases
}

pub(super) fn symmetries(o: &RunOptions) -> Vec<Case> {
    let (seed, b, samples) = (o.seed, o.box_size, o.samples);
    let configs = (samples / 10).max(1);
    vec![
        Case::new(
            "symmetries.flip",
            "α_w(P_w) = 1 − P_w, α_w(P_w') = P_w' for w' ≠ w",
            json!({ "window_half_width": b }),
            move || {
                let rect = window(b);
                let sites = sites_of(&rect);
                for w in &sites {
                    let n = stabilization_length(*w, &rect);
                    for w2 in &sites {
                        let s = site_operator(w2);
                        let expected = if w2 == w { s.clone().scaled(Phase::MINUS_ONE) } else { s.clone() };
                        if truncated_symmetry(*w, n, &s)? != expected {
                            return Ok(Outcome::new(false, json!({ "site": w, "other": w2, "length": n })));
                        }
                    }
                }
                Ok(Outcome::new(true, json!({ "sites": sites.len() })))
            },
        ),
        Case::new(
            "symmetries.transport",
            "(∏_{f(w) = −1} α_w)(P_Δ(f)) = P_Δ(1)",
            json!({ "box": b, "configs": configs }),
            move || {
                let mut rng = rng(seed, "symmetries.transport");
                let patch = box_patch(Vertex::new(0, 0), b)?;
                let mut flipped = 0;
                for _ in 0..configs {
                    let f = sample::signs(&mut rng, patch.interior_sites());
                    let r = transport_check(&patch, &f)?;
                    if !r.holds() {
                        return Ok(Outcome::new(false, json!(r)));
                    }
                    flipped += r.flipped.len();
                }
                Ok(Outcome::new(true, json!({ "flipped_sites_total": flipped })))
            },
        ),
    ]
}

fn random_gamma<R: Rng>(rng: &mut R, edges: &[Edge]) -> GammaElement {
    let (nx, nz) = (rng.gen_range(0..=8), rng.gen_range(0..=8));
    GammaElement {
        x_part: sample::edge_subset(rng, edges, nx).into_iter().collect(),
        z_part: sample::edge_subset(rng, edges, nz).into_iter().collect(),
    }
}

pub(super) fn groupoid(o: &RunOptions) -> Vec<Case> {
    let (seed, b, samples) = (o.seed, o.box_size, o.samples);
    vec![
        Case::new(
            "groupoid.boundary-homomorphism",
            "∂(γ_1 γ_2) = ∂γ_1 ∂γ_2, with even parity on vertices and on faces",
            json!({ "window_half_width": b + 1, "samples": samples }),
            move || {
                let mut rng = rng(seed, "groupoid.boundary-homomorphism");
                let edges: Vec<Edge> = window(b + 1).edges().into_iter().collect();
                for _ in 0..samples {
                    let (g1, g2) = (random_gamma(&mut rng, &edges), random_gamma(&mut rng, &edges));
                    let lhs = boundary(&g1.compose(&g2));
                    let rhs = boundary(&g1).compose(&boundary(&g2));
                    let parity = BoundaryPattern::new(lhs.flips().clone()).is_ok();
                    if lhs != rhs || !parity {
                        return Ok(Outcome::new(false, json!({ "g1": g1, "g2": g2 })));
                    }
                }
                Ok(Outcome::new(true, json!({ "pairs": samples })))
            },
        ),
        Case::new(
            "groupoid.epimorphism",
            "u* η(Q) u = η(Q ∘ α_{∂γ_u}), Ad_{σ^z_e}(S_w) = (−1)^{1_{∂e}(w) 1_V(w)} S_w",
            json!({ "window": "10x10", "word_length": 20, "samples": samples }),
            move || {
                let mut rng = rng(seed, "groupoid.epimorphism");
                let rect = window(5);
                let edges: Vec<Edge> = rect.edges().into_iter().collect();
                let sites = sites_of(&rect);
                for _ in 0..samples {
                    let word: Vec<(PauliKind, Edge)> = (0..20)
                        .map(|_| {
                            let k = if rng.gen_bool(0.5) { PauliKind::X } else { PauliKind::Z };
                            (k, edges[rng.gen_range(0..edges.len())])
                        })
                        .collect();
                    let u = word_operator(&word);
                    let pattern = boundary(&ribbon_to_gamma(&word));
                    for w in &sites {
                        let s = site_operator(w);
                        if s.conjugated_by(&u) != s.clone().scaled(pattern.value(w).phase()) {
                            return Ok(Outcome::new(false, json!({ "word": word, "site": w })));
                        }
                    }
                }
                Ok(Outcome::new(true, json!({ "words": samples, "sites_per_word": sites.len() })))
            },
        ),
        Case::new(
            "groupoid.free-minimal",
            "∂γ·f = f ⇒ ∂γ = 1; ∃ γ: ∂γ·f ∈ Ω(K, ε)",
            json!({ "max_keys": 12, "samples": samples }),
            move || {
                let mut rng = rng(seed, "groupoid.free-minimal");
                let key_sites = sites_of(&window(b));
                let f_sites = sites_of(&window(b + 3));
                let f_window: BTreeSet<Site> = f_sites.iter().copied().collect();
                let mut moved = 0;
                for _ in 0..samples {
                    let f = sample::signs(&mut rng, f_sites.iter().copied());
                    let k = rng.gen_range(0..=12);
                    let keys: Vec<Site> = rand::seq::index::sample(&mut rng, key_sites.len(), k).into_iter().map(|i| key_sites[i]).collect();
                    let c = CylinderSet::new(keys.iter().map(|w| (*w, Sign::from_bool_minus(rng.gen_bool(0.5)))).collect());
                    let gamma = orbit_reach(&f, &c)?;
                    let pattern = boundary(&gamma);
                    let g = f.act(&pattern);
                    if c.contains(&g) != Some(true) || !freeness_check(&gamma, &f_window)? {
                        return Ok(Outcome::new(false, json!({ "cylinder": c, "gamma": gamma })));
                    }
                    if !pattern.is_identity() {
                        if g == f {
                            return Ok(Outcome::new(false, json!({ "fixed_point": gamma })));
                        }
                        moved += 1;
                    }
                }
                Ok(Outcome::new(true, json!({ "nontrivial_moves": moved })))
            },
        ),
        Case::new(
            "groupoid.local-finiteness",
            "|⟨∂γ_1, …, ∂γ_k⟩| = 2^r ≤ 2^k",
            json!({ "samples": (samples / 10).max(1), "max_generators": 6 }),
            move || {
                let mut rng = rng(seed, "groupoid.local-finiteness");
                let edges: Vec<Edge> = window(b).edges().into_iter().collect();
                let mut largest = 0;
                for _ in 0..(samples / 10).max(1) {
                    let k = rng.gen_range(1..=6);
                    let gens: Vec<BoundaryPattern> = (0..k).map(|_| boundary(&random_gamma(&mut rng, &edges))).collect();
                    let mut group: BTreeSet<Vec<Site>> = BTreeSet::new();
                    let mut frontier = vec![BoundaryPattern::identity()];
                    group.insert(Vec::new());
                    while let Some(x) = frontier.pop() {
                        if !x.compose(&x).is_identity() {
                            return Ok(Outcome::new(false, json!({ "not_involution": x })));
                        }
                        for g in &gens {
                            let y = x.compose(g);
                            if group.insert(y.flips().iter().copied().collect()) {
                                frontier.push(y);
                            }
                        }
                        if group.len() > 1 << k {
                            return Ok(Outcome::new(false, json!({ "generators": k, "size_exceeds": 1 << k })));
                        }
                    }
                    if !group.len().is_power_of_two() {
                        return Ok(Outcome::new(false, json!({ "size": group.len() })));
                    }
                    largest = largest.max(group.len());
                }
                Ok(Outcome::new(true, json!({ "largest_subgroup": largest })))
            },
        ),
    ]
}

pub(super) fn invariant(o: &RunOptions) -> Vec<Case> {
    let (seed, b, samples) = (o.seed, o.box_size, o.samples);
    vec![
        Case::new(
            "invariant.measure-consistency",
            "φ(1_{Ω(K,ε)}) = 2^{−|K|}, [Q] = a [1_{Ω(K,ε)}]",
            json!({ "max_keys": 12, "samples": samples }),
            move || {
                let mut rng = rng(seed, "invariant.measure-consistency");
                let sites = sites_of(&window(b));
                for _ in 0..samples {
                    let k = rng.gen_range(0..=12);
                    let mut keys: Vec<Site> = rand::seq::index::sample(&mut rng, sites.len(), k).into_iter().map(|i| sites[i]).collect();
                    keys.sort();
                    let table = (0..1usize << k).map(|_| rng.gen_range(-3..=3)).collect();
                    let q = CylinderFunction::from_table(keys.clone(), table)?;
                    let r = q.class_reduce();
                    let consistent = q.measure() == Dyadic::new(r.coefficient, q.keys().len() as u32) && r.measure() == q.measure();
                    let target = keys.iter().map(|w| (*w, Sign::from_bool_minus(rng.gen_bool(0.5)))).collect();
                    let flip = boundary(&solve_boundary(&target));
                    let moved = q.act(&flip);
                    let invariant = moved.measure() == q.measure() && q.sub(&moved)?.class_reduce().coefficient == 0;
                    if !(consistent && invariant) {
                        return Ok(Outcome::new(false, json!({ "keys": keys, "consistent": consistent, "invariant": invariant })));
                    }
                }
                Ok(Outcome::new(true, json!({ "functions": samples })))
            },
        ),
        Case::new(
            "invariant.triple",
            "(H_0, H_0^+, [1]) ≅ (ℤ[½], ℤ₊[½], 1)",
            json!({ "window": 16, "samples": samples.min(500), "max_keys": 12 }),
            move || {
                let opts = InvariantOptions { window: 16, samples: samples.min(500), max_keys: 12, seed };
                let toric = invariant_triple(DiagonalModel::ToricDiagonal, &opts);
                let standard = invariant_triple(DiagonalModel::StandardDiagonal, &opts);
                let identical = toric.data == standard.data;
                Ok(Outcome::new(
                    identical && toric.data.holds() && standard.data.holds(),
                    json!({
                        "identical": identical,
                        "order_unit": toric.data.order_unit,
                        "realizable": toric.data.realizable,
                        "positive_samples": toric.data.samples.iter().filter(|s| s.nonnegative).count(),
                    }),
                ))
            },
        ),
    ]
}

pub(super) fn no_lift(o: &RunOptions) -> Vec<Case> {
    let max = o.box_size.max(6);
    (1..=max)
        .map(|n| {
            Case::new(
                format!("no-lift.box-{n:02}"),
                "∏_{u ∈ Λ̄_n} A_u = F^x_{∂̃Λ_n}",
                json!({ "n": n }),
                move || {
                    let r = no_lift_certificate(Vertex::new(0, 0), n)?;
                    Ok(Outcome::new(
                        r.holds(),
                        json!({
                            "closure_stars": r.closure_stars,
                            "boundary_length": r.boundary_length,
                            "star_product_is_boundary_ribbon": r.product_matches_ribbon,
                            "single_flip_infeasible": r.single_flip_infeasible,
                            "two_star_witness_weight": r.two_star_witness.as_ref().map(PauliOperator::weight),
                            "ribbon_witness": r.ribbon_witness_ok,
                        }),
                    ))
                },
            )
        })
        .collect()
}

fn six_edge_patch() -> Patch {
    let mut edges: Vec<Edge> = face_edges(Face::new(0, 0)).to_vec();
    edges.push(Edge::horizontal(1, 0));
    edges.push(Edge::vertical(2, 0));
    Patch::new(edges)
}

/// Dense membership: some product of generators equals a phase times `p`.
fn dense_membership(p: &DenseOperator, elements: &[(Vec<usize>, DenseOperator)]) -> Option<Phase> {
    elements.iter().find_map(|(_, g)| {
        let c = g.ratio(p)?;
        [Phase::ONE, Phase::I, Phase::MINUS_ONE, Phase::MINUS_I].into_iter().find(|ph| phase_entry(*ph) == c)
    })
}

fn group_elements(gens: &[PauliOperator], patch: &Patch) -> Result<Vec<(Vec<usize>, DenseOperator)>> {
    let dense_gens = gens.iter().map(|g| dense(g, patch)).collect::<Result<Vec<_>>>()?;
    let id = DenseOperator::identity(patch)?;
    Ok((0..1usize << gens.len())
        .map(|mask| {
            let idx: Vec<usize> = (0..gens.len()).filter(|i| mask >> i & 1 == 1).collect();
            let m = idx.iter().fold(id.clone(), |a, i| a.mul(&dense_gens[*i]));
            (idx, m)
        })
        .collect())
}

fn membership_agrees(p: &PauliOperator, dp: &DenseOperator, group: &SignedStabilizerGroup, elements: &[(Vec<usize>, DenseOperator)]) -> bool {
    match group.membership(p) {
        // ∏ witness = sign · p
        Membership::Member { sign, witness } => {
            let prod = elements.iter().find(|(idx, _)| *idx == witness).map(|(_, m)| m);
            prod.is_some_and(|m| m.ratio(dp) == Some(phase_entry(sign))) && dense_membership(dp, elements) == Some(sign)
        }
        Membership::NotMember => dense_membership(dp, elements).is_none(),
    }
}

pub(super) fn oracle_crosscheck(o: &RunOptions) -> Vec<Case> {
    let (seed, samples) = (o.seed, o.samples);
    let mut cases = vec![
        Case::new(
            "oracle-crosscheck.exhaustive-6",
            "dense(pq) = dense(p) dense(q), [p, q] = 0 ⇔ [dense p, dense q] = 0",
            json!({ "edges": 6 }),
            move || {
                let patch = six_edge_patch();
                let mut ops = single_edge_paulis(&patch);
                ops.push(PauliOperator::identity());
                ops.push(PauliOperator::identity().scaled(Phase::I));
                ops.push(site_operator(&Site::Face(Face::new(0, 0))));
                let xx = PauliOperator::x_string([Edge::horizontal(1, 0), Edge::vertical(2, 0)]).scaled(Phase::MINUS_ONE);
                ops.push(xx.clone());
                let gens = vec![site_operator(&Site::Face(Face::new(0, 0))), xx];
                let group = SignedStabilizerGroup::new(gens.clone())?;
                let elements = group_elements(&gens, &patch)?;
                let dense_ops = ops.iter().map(|p| dense(p, &patch)).collect::<Result<Vec<_>>>()?;
                let mut members = 0;
                for (i, p) in ops.iter().enumerate() {
                    for (j, q) in ops.iter().enumerate() {
                        let pq = p.multiply(q);
                        let (dp, dq) = (&dense_ops[i], &dense_ops[j]);
                        let dpq = dense(&pq, &patch)?;
                        let product_ok = dpq == dp.mul(dq);
                        let commute_ok = p.commutes(q) == (dp.mul(dq) == dq.mul(dp));
                        if !(product_ok && commute_ok && membership_agrees(&pq, &dpq, &group, &elements)) {
                            return Ok(Outcome::new(false, json!({ "p": p, "q": q })));
                        }
                        members += usize::from(group.membership(&pq).is_member());
                    }
                }
                Ok(Outcome::new(true, json!({ "operators": ops.len(), "pairs": ops.len() * ops.len(), "member_products": members })))
            },
        ),
        Case::new(
            "oracle-crosscheck.random-12",
            "dense(pq) = dense(p) dense(q), Tr dense(p) = 0 for p ∉ ℂ1",
            json!({ "edges": 12, "samples": samples }),
            move || {
                let mut rng = rng(seed, "oracle-crosscheck.random-12");
                let patch = unit_box();
                let edges: Vec<Edge> = patch.edges.iter().copied().collect();
                let net = ground_net(&patch);
                let gens: Vec<PauliOperator> = net.group().generators().to_vec();
                let elements = group_elements(&gens, &patch)?;
                let mut members = 0;
                for _ in 0..samples {
                    let p = sample::pauli(&mut rng, &edges, 0.5);
                    let q = if rng.gen_bool(0.5) {
                        gens.iter().filter(|_| rng.gen_bool(0.5)).fold(PauliOperator::identity(), |a, g| a.multiply(g)).scaled(sample::phase(&mut rng))
                    } else {
                        sample::pauli(&mut rng, &edges, 0.5)
                    };
                    let (dp, dq) = (dense(&p, &patch)?, dense(&q, &patch)?);
                    let ok = dense(&p.multiply(&q), &patch)? == dp.mul(&dq)
                        && p.commutes(&q) == (dp.mul(&dq) == dq.mul(&dp))
                        && (p.is_scalar() || dp.trace() == gaussian(0, 0))
                        && membership_agrees(&q, &dq, net.group(), &elements);
                    if !ok {
                        return Ok(Outcome::new(false, json!({ "p": p, "q": q })));
                    }
                    members += usize::from(net.group().membership(&q).is_member());
                }
                Ok(Outcome::new(true, json!({ "pairs": samples, "member_samples": members })))
            },
        ),
    ];
    let patches: [(&str, Patch); 5] = [
        ("star", Patch::new(star_edges(Vertex::new(0, 0)))),
        ("face", Patch::new(face_edges(Face::new(0, 0)))),
        ("two-faces", Patch::from_rect(Rect::new(-1, -1, 1, 0))),
        ("six-edges", six_edge_patch()),
        ("box-1", unit_box()),
    ];
    for (name, patch) in patches {
        cases.push(Case::new(
            format!("oracle-crosscheck.spectrum-{name}"),
            "spec(Σ P_v^⊥ + Σ P_f^⊥) = {0..m}, mult(k) = C(m,k) 2^{|Λ|−m}",
            json!({ "patch": name, "edges": patch.len(), "configs": 3 }),
            move || {
                let mut rng = rng(seed, &format!("oracle-crosscheck.spectrum-{name}"));
                let n = patch.len();
                let mut configs = vec![ExtendedConfig::ones()];
                configs.extend((0..2).map(|_| sample::extended(&mut rng, &patch)));
                let mut terms = 0;
                for f in &configs {
                    let s = dense_hamiltonian(&patch, f)?;
                    let m = s.terms;
                    terms = m;
                    let expected: Vec<(u32, u64)> = (0..=m).map(|k| (k as u32, binomial(m, k) << (n - m))).collect();
                    let got: Vec<(u32, u64)> = s.levels.iter().map(|l| (l.energy, l.multiplicity)).collect();
                    let p = dense_projector(&projector_net(&patch, f)?)?;
                    let rank_ok = p.trace() == gaussian(1i64 << (n - m), 0) && p.is_hermitian() && p.is_idempotent();
                    if !(s.resolution_ok && got == expected && rank_ok && s.hamiltonian.is_hermitian()) {
                        return Ok(Outcome::new(false, json!({ "levels": got, "expected": expected, "rank_ok": rank_ok })));
                    }
                }
                Ok(Outcome::new(true, json!({ "terms": terms, "multiplicities": (0..=terms).map(|k| binomial(terms, k) << (n - terms)).collect::<Vec<_>>() })))
            },
        ));
    }
    cases
}
