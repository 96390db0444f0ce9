//! Property suites over random closed triangulations and random
//! relabelings of the reference builders.

mod common;

use proptest::prelude::*;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tri4::constructions::{build_fig8, build_k6, build_triple_t};
use tri4::iso::{isomorphic, signature};
use tri4::perm::Perm;
use tri4::tri::{Gluing, RidgeSlot, Triangulation};

/// A random closed triangulation: repeatedly glue the first unpaired slot
/// to a random other unpaired slot by a random compatible permutation.
/// `V * n` must be even.
fn random_closed<const V: usize>(n: usize, seed: u64) -> Triangulation<V> {
    assert!((V * n).is_multiple_of(2));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Triangulation::<V>::new(n);
    loop {
        let unpaired = t.unpaired_slots();
        let Some((&from, rest)) = unpaired.split_first() else {
            return t;
        };
        let to = *rest.choose(&mut rng).expect("even slot count");
        let mut labels: Vec<u8> = (0..V as u8).filter(|&l| l != to.facet).collect();
        labels.shuffle(&mut rng);
        let mut images = [0u8; V];
        let mut next = labels.into_iter();
        for (i, img) in images.iter_mut().enumerate() {
            *img = if i as u8 == from.facet {
                to.facet
            } else {
                next.next().unwrap()
            };
        }
        let map = Perm::from_images(images).unwrap();
        t.add_gluing(Gluing { from, to, map }).unwrap();
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn face_cycles_partition_all_slots(half in 1usize..=3, seed in any::<u64>()) {
        let t = random_closed::<5>(2 * half, seed);
        let cycles = t.ridge_cycles().unwrap();
        let mut seen = std::collections::HashSet::new();
        for c in &cycles {
            for slot in &c.slots {
                prop_assert!(seen.insert(*slot));
            }
        }
        prop_assert_eq!(seen.len(), 10 * t.num_simplices());
    }

    #[test]
    fn class_partitions_cover_all_slots(half in 1usize..=3, seed in any::<u64>()) {
        let t = random_closed::<5>(2 * half, seed);
        let n = t.num_simplices();
        prop_assert_eq!(t.vertex_classes().iter().map(|c| c.len()).sum::<usize>(), 5 * n);
        prop_assert_eq!(t.edge_classes().iter().map(|c| c.len()).sum::<usize>(), 10 * n);
        prop_assert!(t.validate().involution_consistent);
    }

    #[test]
    fn return_class_is_anchor_independent(half in 1usize..=2, seed in any::<u64>()) {
        let t = random_closed::<5>(2 * half, seed);
        for cycle in t.ridge_cycles().unwrap() {
            let class = cycle.return_class();
            for slot in &cycle.slots {
                for exit in [slot.omitted.0, slot.omitted.1] {
                    let re = t.ridge_cycle_from(*slot, exit).unwrap();
                    prop_assert_eq!(re.return_class(), class);
                    prop_assert_eq!(re.len(), cycle.len());
                }
            }
        }
    }

    #[test]
    fn signature_and_orientability_are_relabeling_invariant(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = build_triple_t(3);
        let r = common::random_relabeling(&t, &mut rng);
        prop_assert_eq!(signature(&t), signature(&r));
        prop_assert_eq!(t.orientability().is_some(), r.orientability().is_some());
        let f = build_fig8();
        let rf = common::random_relabeling(&f, &mut rng);
        prop_assert_eq!(signature(&f), signature(&rf));
        prop_assert!(isomorphic(&f, &rf).is_some());
    }

    #[test]
    fn cusp_surfaces_match_their_classes(half in 1usize..=2, seed in any::<u64>()) {
        let t = random_closed::<5>(2 * half, seed);
        for class in t.edge_classes() {
            let surface = t.cusp_surface(&class).unwrap();
            prop_assert_eq!(surface.num_triangles(), class.len());
            prop_assert_eq!(
                surface.vertex_valences().iter().sum::<usize>(),
                3 * surface.num_triangles()
            );
        }
    }

    /// Euler characteristic and orientability of the cusp surfaces survive
    /// any renumbering of simplices and vertex labels.
    #[test]
    fn cusp_surface_invariants_survive_relabeling(half in 1usize..=2, seed in any::<u64>()) {
        let t = random_closed::<5>(2 * half, seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
        let r = common::random_relabeling(&t, &mut rng);
        let summary = |t: &Triangulation<5>| {
            let mut pairs: Vec<(usize, i64, bool)> = t
                .edge_classes()
                .iter()
                .map(|c| {
                    let s = t.cusp_surface(c).unwrap();
                    (
                        s.num_triangles(),
                        s.euler_characteristic().unwrap(),
                        s.orientable().unwrap(),
                    )
                })
                .collect();
            pairs.sort_unstable();
            pairs
        };
        prop_assert_eq!(summary(&t), summary(&r));
    }

    /// Valence of a cusp-surface vertex equals the length of the face cycle
    /// through the corresponding 2-face, times the orbit size of the edge
    /// under the cycle's return map (a non-trivial return wraps the surface
    /// vertex around the 2-face several times; the factor is 1 on manifold
    /// complexes).
    #[test]
    fn cusp_vertex_valences_follow_face_cycles(half in 1usize..=2, seed in any::<u64>()) {
        let t = random_closed::<5>(2 * half, seed);
        for class in t.edge_classes() {
            let surface = t.cusp_surface(&class).unwrap();
            for corner_class in surface.corner_classes() {
                let (triangle, corner) = corner_class[0];
                let (s, (p, q)) = class[triangle];
                let others: Vec<u8> = (0..5u8).filter(|&l| l != p && l != q).collect();
                let w = others[corner as usize];
                // the 2-face spanned by {p, q, w}
                let omitted: Vec<u8> =
                    (0..5u8).filter(|&l| l != p && l != q && l != w).collect();
                let face = RidgeSlot::new(s, omitted[0], omitted[1]);
                let cycle = t.ridge_cycle_from(face, face.omitted.0).unwrap();
                let h = &cycle.holonomy;
                let mut orbit = 1usize;
                let (mut a, mut b) = (h.image(p), h.image(q));
                while (a.min(b), a.max(b)) != (p.min(q), p.max(q)) {
                    (a, b) = (h.image(a), h.image(b));
                    orbit += 1;
                }
                prop_assert_eq!(corner_class.len(), cycle.len() * orbit);
                if cycle.return_class() == tri4::ReturnClass::Identity {
                    prop_assert_eq!(corner_class.len(), cycle.len());
                }
            }
        }
    }

    #[test]
    fn vertex_link_sizes_match_class_sizes(half in 1usize..=2, seed in any::<u64>()) {
        let t = random_closed::<5>(2 * half, seed);
        let classes = t.vertex_classes();
        let mut link_sizes: Vec<usize> = classes
            .iter()
            .map(|c| {
                let link = t.vertex_link(c).unwrap();
                prop_assert!(link.is_closed());
                Ok(link.num_simplices())
            })
            .collect::<Result<_, _>>()?;
        let mut class_sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
        link_sizes.sort_unstable();
        class_sizes.sort_unstable();
        prop_assert_eq!(&link_sizes, &class_sizes);
        prop_assert_eq!(class_sizes.iter().sum::<usize>(), 5 * t.num_simplices());
    }

    #[test]
    fn six_valent_manifold_links_are_certified(seed in any::<u64>()) {
        // On the builders with both conditions, every vertex link passes the
        // tetrahedral certificate and every cusp surface is flat; this holds
        // for any relabeling.
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for t in [build_triple_t(3), build_k6()] {
            let r = common::random_relabeling(&t, &mut rng);
            prop_assert!(r.is_six_valent().unwrap() && r.is_manifold().unwrap());
            for class in r.vertex_classes() {
                let link = r.vertex_link(&class).unwrap();
                let cert = link.tetrahedral_certificate().unwrap();
                prop_assert!(cert.granted());
            }
            for class in r.edge_classes() {
                let surface = r.cusp_surface(&class).unwrap();
                prop_assert_eq!(surface.euler_characteristic().unwrap(), 0);
                prop_assert!(surface.vertex_valences().iter().all(|&v| v == 6));
            }
        }
    }
}

#[test]
fn k6_verdicts_are_coloring_independent() {
    use tri4::constructions::{build_k6_colored, K6_EDGE_COLORING};
    // A second proper coloring: relabel vertices by a 6-cycle and colors by
    // a 5-cycle; the edge table differs entry by entry.
    let relabeled: Vec<(usize, usize, u8)> = K6_EDGE_COLORING
        .iter()
        .map(|&(u, w, c)| ((u + 1) % 6, (w + 1) % 6, (c + 2) % 5))
        .collect();
    let other: [(usize, usize, u8); 15] = relabeled.try_into().unwrap();
    assert_ne!(other.as_slice(), K6_EDGE_COLORING.as_slice());

    let a = build_k6_colored(&K6_EDGE_COLORING);
    let b = build_k6_colored(&other);
    assert_eq!(a.is_six_valent().unwrap(), b.is_six_valent().unwrap());
    assert_eq!(a.is_manifold().unwrap(), b.is_manifold().unwrap());
    assert_eq!(a.orientability().is_some(), b.orientability().is_some());
    assert_eq!(a.vertex_classes().len(), b.vertex_classes().len());
    assert_eq!(a.edge_classes().len(), b.edge_classes().len());
    for t in [&a, &b] {
        for class in t.edge_classes() {
            let surface = t.cusp_surface(&class).unwrap();
            assert_eq!(
                surface.classify().unwrap(),
                tri4::SurfaceClass::KleinBottle
            );
        }
    }
    assert_eq!(signature(&a), signature(&b));
}

#[test]
fn symmetry_composition_and_orientation_effects() {
    use tri4::iso::{symmetries, OrientationEffect};
    let t = build_fig8();
    let syms = symmetries(&t);
    for x in &syms {
        for y in &syms {
            let xy = x.then(y);
            let found = syms
                .iter()
                .find(|s| s.simplex_map == xy.simplex_map && s.label_maps == xy.label_maps)
                .expect("closed under composition");
            // orientation effect of a composition is the product of effects
            assert_eq!(found.orientation_effect, xy.orientation_effect);
            assert_ne!(xy.orientation_effect, OrientationEffect::Undefined);
        }
    }
}
