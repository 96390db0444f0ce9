//! Shared fixtures and helpers for the integration suites.
#![allow(dead_code)] // each test binary uses a subset

use rand::seq::SliceRandom;
use rand::Rng;

use tri4::perm::Perm;
use tri4::tri::Triangulation;

/// A closed but disconnected 4-dimensional complex with 4 simplices
/// (two identity-glued pairs); its Euler characteristic is 2/3.
pub fn synthetic_n4() -> Triangulation<5> {
    use tri4::tri::{FacetSlot, Gluing};
    let mut t = Triangulation::<5>::new(4);
    for f in 0..5u8 {
        for (a, b) in [(0usize, 1usize), (2, 3)] {
            t.add_gluing(Gluing {
                from: FacetSlot { simplex: a, facet: f },
                to: FacetSlot { simplex: b, facet: f },
                map: Perm::identity(),
            })
            .unwrap();
        }
    }
    t
}

pub fn random_perm<const V: usize, R: Rng>(rng: &mut R) -> Perm<V> {
    let mut images: Vec<u8> = (0..V as u8).collect();
    images.shuffle(rng);
    let mut array = [0u8; V];
    array.copy_from_slice(&images);
    Perm::from_images(array).unwrap()
}

/// A uniformly random relabeling: shuffled simplex indices and independent
/// label permutations per simplex.
pub fn random_relabeling<const V: usize, R: Rng>(
    t: &Triangulation<V>,
    rng: &mut R,
) -> Triangulation<V> {
    let n = t.num_simplices();
    let mut simplex_map: Vec<usize> = (0..n).collect();
    simplex_map.shuffle(rng);
    let label_maps: Vec<Perm<V>> = (0..n).map(|_| random_perm(rng)).collect();
    t.relabeled(&simplex_map, &label_maps)
}
