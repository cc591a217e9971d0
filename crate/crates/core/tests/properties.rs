mod common;

use common::seeded_diagram;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vassiliev_core::algebra::ratio;
use vassiliev_core::brauer::{BrElement, BrMatching};
use vassiliev_core::diagram::{connected_sum, flip_vertex};
use vassiliev_core::{evaluate, Diagram, Poly, RawDiagram, WeightFlavor};

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-9i64..=9, 1i64..=4), 0..6)
        .prop_map(|cs| Poly::from_coeffs(cs.into_iter().map(|(n, d)| ratio(n, d)).collect()))
}

fn small_diagram() -> impl Strategy<Value = Diagram> {
    (any::<u64>(), 1usize..=2, 0usize..=3, 0usize..=2).prop_filter_map(
        "no valid wiring",
        |(seed, circles, half, vertices)| {
            let legs = 2 * half + vertices % 2;
            seeded_diagram(seed, circles, legs, vertices)
        },
    )
}

fn matching(k: usize) -> impl Strategy<Value = BrMatching> {
    any::<u64>().prop_map(move |seed| {
        let mut pts: Vec<usize> = (0..2 * k).collect();
        pts.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let pairs: Vec<(usize, usize)> = pts.chunks(2).map(|p| (p[0], p[1])).collect();
        BrMatching::from_pairs(k, &pairs).unwrap()
    })
}

fn element(k: usize) -> impl Strategy<Value = BrElement> {
    prop::collection::vec((matching(k), poly()), 1..4).prop_map(move |terms| {
        terms.into_iter().fold(BrElement::zero(k), |acc, (m, p)| {
            &acc + &BrElement::basis(m).scale(&p)
        })
    })
}

fn weights(d: &Diagram) -> (Poly, Poly) {
    (
        evaluate(d, WeightFlavor::Gl, false).unwrap(),
        evaluate(d, WeightFlavor::So, false).unwrap(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn poly_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Poly::one(), a.clone());
    }

    #[test]
    fn poly_division(a in poly(), b in poly()) {
        match a.div_rem(&b) {
            None => prop_assert!(b.is_zero()),
            Some((q, r)) => {
                prop_assert_eq!(&(&q * &b) + &r, a.clone());
                if let Some(rd) = r.degree() {
                    prop_assert!(rd < b.degree().unwrap());
                }
            }
        }
    }

    #[test]
    fn poly_shift_and_text_round_trip(a in poly(), n in -5i64..=5, d in 1i64..=3) {
        let s = ratio(n, d);
        prop_assert_eq!(a.taylor_shift(&s).taylor_shift(&-s.clone()), a.clone());
        prop_assert_eq!(a.in_ctilde().from_ctilde(), a.clone());
        prop_assert_eq!(a.taylor_shift(&s).eval(&ratio(0, 1)), a.eval(&s));
        prop_assert_eq!(a.to_string().parse::<Poly>().unwrap(), a.clone());
    }

    #[test]
    fn brauer_associative((k, a, b, c) in (1usize..=4).prop_flat_map(|k| (Just(k), element(k), element(k), element(k)))) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!((&a * &b).trace(), (&b * &a).trace());
        prop_assert_eq!((&a + &b).trace(), &a.trace() + &b.trace());
        prop_assert_eq!(&a * &BrElement::identity(k), a.clone());
    }

    #[test]
    fn raw_json_round_trip(d in small_diagram()) {
        let (circles, vertices, edges) = d.to_parts();
        let name = |p: &u32| format!("p{p}");
        let raw = RawDiagram {
            circles: circles.iter().map(|c| c.iter().map(name).collect()).collect(),
            vertices: vertices.iter().map(|v| v.iter().map(name).collect()).collect(),
            edges: edges.iter().map(|e| e.iter().map(name).collect()).collect(),
        };
        let back = RawDiagram::from_json(&raw.to_json()).unwrap();
        prop_assert_eq!(&back, &raw);
        prop_assert_eq!(back.to_diagram().unwrap(), d);
    }

    #[test]
    fn relabeling_preserves_diagram(d in small_diagram(), seed in any::<u64>()) {
        let (circles, vertices, edges) = d.to_parts();
        let mut perm: Vec<u32> = (0..d.point_count() as u32).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let map = |p: &u32| perm[*p as usize];
        let relabeled = Diagram::from_parts(
            circles.iter().map(|c| c.iter().map(map).collect()).collect(),
            vertices.iter().map(|v| [map(&v[1]), map(&v[2]), map(&v[0])]).collect(),
            edges.iter().map(|e| [map(&e[1]), map(&e[0])]).collect(),
        )
        .unwrap();
        prop_assert_eq!(&relabeled, &d);
        prop_assert_eq!(weights(&relabeled), weights(&d));
    }

    #[test]
    fn flipping_a_vertex_negates(d in small_diagram()) {
        prop_assume!(d.vertex_count() > 0);
        let flipped = flip_vertex(&d, 0).unwrap();
        let (gl, so) = weights(&d);
        prop_assert_eq!(weights(&flipped), (-gl, -so));
    }

    #[test]
    fn connected_sum_is_multiplicative(a in small_diagram(), b in small_diagram()) {
        let sum = connected_sum(&a, 0, &b, 0).unwrap();
        let (ga, sa) = weights(&a);
        let (gb, sb) = weights(&b);
        let (gs, ss) = weights(&sum);
        prop_assert_eq!(&gs * &Poly::c(), &ga * &gb);
        prop_assert_eq!(&ss * &Poly::c(), &sa * &sb);
    }
}
