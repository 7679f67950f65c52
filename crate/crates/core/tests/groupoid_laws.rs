use std::collections::BTreeMap;

use proptest::prelude::*;
use toric_diagonal::config::{Configuration, Sign};
use toric_diagonal::groupoid::{boundary, solve_boundary, Act, CylinderFunction, GammaElement};
use toric_diagonal::lattice::{Edge, Face, Rect, Site, Vertex};

fn window_edges() -> Vec<Edge> {
    Rect::new(0, 0, 5, 5).edges().into_iter().collect()
}

fn gamma() -> impl Strategy<Value = GammaElement> {
    let edges = window_edges();
    let n = edges.len();
    (proptest::collection::btree_set(0..n, 0..8), proptest::collection::btree_set(0..n, 0..8)).prop_map(move |(x, z)| {
        GammaElement { x_part: x.iter().map(|i| edges[*i]).collect(), z_part: z.iter().map(|i| edges[*i]).collect() }
    })
}

fn sites() -> Vec<Site> {
    let r = Rect::new(-2, -2, 7, 7);
    r.vertices().map(Site::Vertex).chain(r.faces().map(Site::Face)).collect()
}

proptest! {
    #[test]
    fn boundary_is_a_homomorphism(a in gamma(), b in gamma()) {
        prop_assert_eq!(boundary(&a.compose(&b)), boundary(&a).compose(&boundary(&b)));
    }

    #[test]
    fn action_composes(a in gamma(), b in gamma(), bits in proptest::collection::vec(any::<bool>(), 181)) {
        let f = Configuration::new(sites().into_iter().zip(bits).map(|(w, m)| (w, Sign::from_bool_minus(m))).collect());
        let (ba, bb) = (boundary(&a), boundary(&b));
        prop_assert_eq!(f.act(&ba).act(&bb), f.act(&ba.compose(&bb)));
        prop_assert_eq!(f.act(&ba).act(&ba), f);
    }

    #[test]
    fn solved_boundary_hits_every_key(vs in proptest::collection::btree_set((0i64..6, 0i64..6), 0..6),
                                      fs in proptest::collection::btree_set((0i64..5, 0i64..5), 0..6)) {
        let target: BTreeMap<Site, Sign> = vs.iter().map(|(x, y)| (Site::Vertex(Vertex::new(*x, *y)), Sign::Minus))
            .chain(fs.iter().map(|(x, y)| (Site::Face(Face::new(*x, *y)), Sign::Plus)))
            .collect();
        let b = boundary(&solve_boundary(&target));
        for (w, s) in &target {
            prop_assert_eq!(b.value(w), *s);
        }
    }

    #[test]
    fn measure_is_invariant(table in proptest::collection::vec(-5i64..5, 8), g in gamma()) {
        let mut keys = vec![Site::Vertex(Vertex::new(1, 1)), Site::Vertex(Vertex::new(3, 2)), Site::Face(Face::new(2, 2))];
        keys.sort();
        let q = CylinderFunction::from_table(keys, table).unwrap();
        prop_assert_eq!(q.act(&boundary(&g)).measure(), q.measure());
    }
}
