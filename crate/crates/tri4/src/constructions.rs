//! Deterministic builders for the reference triangulations.
//!
//! Vertex labels are 0-based throughout: where a pairing table elsewhere
//! numbers vertices 1..5, label `k` here stands for vertex `k+1`, so the
//! cone vertex "5" is label 4.

use crate::link3::Triangulation3;
use crate::core4::Triangulation4;
use crate::perm::{Perm, Perm5};
use crate::tri::{FacetSlot, Gluing};

fn glue<const V: usize>(
    t: &mut crate::tri::Triangulation<V>,
    a: usize,
    f: u8,
    b: usize,
    g: u8,
    images: [u8; V],
) {
    let map = Perm::from_images(images).expect("builder map is a bijection");
    t.add_gluing(Gluing {
        from: FacetSlot { simplex: a, facet: f },
        to: FacetSlot { simplex: b, facet: g },
        map,
    })
    .expect("builder gluing is valid");
}

/// The two-tetrahedron ideal triangulation of the figure-eight knot
/// complement: tetrahedra A = 0 and B = 1, four face pairings, two edges,
/// one vertex.
pub fn build_fig8() -> Triangulation3 {
    let mut t = Triangulation3::new(2);
    glue(&mut t, 0, 2, 1, 2, [0, 3, 2, 1]);
    glue(&mut t, 0, 3, 1, 3, [2, 1, 0, 3]);
    glue(&mut t, 0, 1, 1, 0, [2, 0, 3, 1]);
    glue(&mut t, 0, 0, 1, 1, [1, 3, 0, 2]);
    t
}

/// The internal gluings of the cone: the same four pairings as
/// [`build_fig8`], extended to 4-simplices fixing the cone label 4.
const CONE_GLUINGS: [(usize, u8, usize, u8, [u8; 5]); 4] = [
    (0, 2, 1, 2, [0, 3, 2, 1, 4]),
    (0, 3, 1, 3, [2, 1, 0, 3, 4]),
    (0, 1, 1, 0, [2, 0, 3, 1, 4]),
    (0, 0, 1, 1, [1, 3, 0, 2, 4]),
];

/// The cone over the figure-eight triangulation: two 4-simplices A = 0 and
/// B = 1 glued along the four facets containing the cone vertex (label 4).
/// The two facets opposite label 4 stay unpaired.
pub fn build_cone_c() -> Triangulation4 {
    let mut t = Triangulation4::new(2);
    for &(a, f, b, g, images) in &CONE_GLUINGS {
        glue(&mut t, a, f, b, g, images);
    }
    t
}

/// `k` copies of the cone arranged in a cycle: copy `c` occupies simplices
/// `A = 2c` and `B = 2c + 1`, and each copy's open A-side facet is glued to
/// the next copy's open B-side facet by the transposition of labels 0 and 1.
/// `k = 3` is the closed, orientable, 6-valent triangulation with 6
/// simplices and 15 gluings; smaller `k` gives short face cycles on the
/// 2-faces containing label 4's facet.
pub fn build_triple_t(k: usize) -> Triangulation4 {
    assert!(k >= 1);
    let mut t = Triangulation4::new(2 * k);
    for c in 0..k {
        for &(a, f, b, g, images) in &CONE_GLUINGS {
            glue(&mut t, 2 * c + a, f, 2 * c + b, g, images);
        }
    }
    let swap01 = [1, 0, 2, 3, 4];
    for c in 0..k {
        let next = (c + 1) % k;
        glue(&mut t, 2 * c, 4, 2 * next + 1, 4, swap01);
    }
    t
}

/// A proper 5-edge-coloring of the complete graph on the six vertices
/// 0..5: color `i` pairs vertex `i` with vertex 5 and matches the remaining
/// four vertices as `{i+1, i+4}` and `{i+2, i+3}` (mod 5). Entries are
/// `(vertex, vertex, color)`.
pub const K6_EDGE_COLORING: [(usize, usize, u8); 15] = [
    (0, 5, 0), (1, 4, 0), (2, 3, 0),
    (1, 5, 1), (2, 0, 1), (3, 4, 1),
    (2, 5, 2), (3, 1, 2), (4, 0, 2),
    (3, 5, 3), (4, 2, 3), (0, 1, 3),
    (4, 5, 4), (0, 3, 4), (1, 2, 4),
];

/// Builds the 6-simplex block from an arbitrary proper 5-edge-coloring of
/// the complete graph on six vertices: one simplex per graph vertex, and
/// for each edge with color `i` an identity gluing of the two facets
/// labeled `i`. The analysis verdicts do not depend on the coloring chosen.
pub fn build_k6_colored(coloring: &[(usize, usize, u8); 15]) -> Triangulation4 {
    let mut t = Triangulation4::new(6);
    for &(u, w, color) in coloring {
        glue(&mut t, u, color, w, color, Perm5::identity().images());
    }
    t
}

/// The block triangulation on the complete graph over six vertices with the
/// pinned coloring [`K6_EDGE_COLORING`]: closed, 6-valent with trivial
/// returns, non-orientable, five boundary components and ten cusps.
pub fn build_k6() -> Triangulation4 {
    build_k6_colored(&K6_EDGE_COLORING)
}

/// Two simplices glued along all `V` facets by identity maps. Every face
/// cycle has length 2, so the 4-dimensional version is a manifold complex
/// that fails 6-valence; useful as a negative control.
pub fn build_identity_double<const V: usize>() -> crate::tri::Triangulation<V> {
    let mut t = crate::tri::Triangulation::<V>::new(2);
    for f in 0..V as u8 {
        t.add_gluing(Gluing {
            from: FacetSlot { simplex: 0, facet: f },
            to: FacetSlot { simplex: 1, facet: f },
            map: Perm::identity(),
        })
        .expect("identity double is valid");
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tri::ReturnClass;

    #[test]
    fn fig8_counts() {
        let t = build_fig8();
        assert_eq!(t.num_simplices(), 2);
        assert_eq!(t.num_gluings(), 4);
        assert!(t.is_closed());
        assert_eq!(t.vertex_classes().len(), 1);
        let cycles = t.edge_cycles().unwrap();
        assert_eq!(cycles.len(), 2);
        assert!(cycles.iter().all(|c| c.len() == 6));
        assert!(cycles
            .iter()
            .all(|c| c.return_class() == ReturnClass::Identity));
        assert!(t.orientability().is_some());
    }

    #[test]
    fn cone_is_open_at_the_two_apex_opposite_facets() {
        let t = build_cone_c();
        let report = t.validate();
        assert!(!report.closed);
        assert_eq!(
            report.unpaired,
            vec![
                FacetSlot { simplex: 0, facet: 4 },
                FacetSlot { simplex: 1, facet: 4 }
            ]
        );
        // every pairing fixes the cone label
        for g in t.gluings() {
            assert_eq!(g.map.image(4), 4);
        }
    }

    #[test]
    fn cone_apex_vertices_form_one_class() {
        let t = build_cone_c();
        let classes = t.vertex_classes();
        let apex = classes
            .iter()
            .find(|c| c.contains(&(0, 4)))
            .expect("apex class exists");
        assert_eq!(apex, &vec![(0, 4), (1, 4)]);
    }

    #[test]
    fn cone_apex_link_is_the_figure_eight_triangulation() {
        let t = build_cone_c();
        let classes = t.vertex_classes();
        let apex = classes.iter().find(|c| c.contains(&(0, 4))).unwrap();
        let link = t.vertex_link(apex).unwrap();
        assert!(link.is_closed());
        // identical gluing tables, not merely isomorphic
        assert_eq!(link, build_fig8());
    }

    #[test]
    fn triple_t_counts() {
        let t = build_triple_t(3);
        assert_eq!(t.num_simplices(), 6);
        assert_eq!(t.num_gluings(), 15);
        assert!(t.is_closed());
    }

    #[test]
    fn triple_t_face_cycles() {
        let t = build_triple_t(3);
        let cycles = t.face_cycles().unwrap();
        assert_eq!(cycles.len(), 10);
        assert!(cycles.iter().all(|c| c.len() == 6));
        assert!(cycles
            .iter()
            .all(|c| c.return_class() == ReturnClass::Identity));
        assert!(t.is_six_valent().unwrap());
        assert!(t.is_manifold().unwrap());
        assert!(t.orientability().is_some());
    }

    #[test]
    fn short_cycles_for_one_and_two_cones() {
        for (k, expected) in [(1usize, 2usize), (2, 4)] {
            let t = build_triple_t(k);
            assert!(t.is_closed());
            let cycles = t.face_cycles().unwrap();
            // cycles through 2-faces off the cone vertex have length 2k
            let off_label: Vec<_> = cycles
                .iter()
                .filter(|c| c.slots[0].omitted.1 == 4)
                .collect();
            assert_eq!(off_label.len(), 4);
            assert!(off_label.iter().all(|c| c.len() == expected));
            assert!(!t.is_six_valent().unwrap());
        }
    }

    #[test]
    fn k6_facets_and_verdicts() {
        let t = build_k6();
        assert_eq!(t.num_simplices(), 6);
        assert_eq!(t.num_gluings(), 15);
        assert!(t.is_closed());
        assert!(t.is_six_valent().unwrap());
        assert!(t.is_manifold().unwrap());
        assert!(t.orientability().is_none());
        assert_eq!(t.vertex_classes().len(), 5);
        assert_eq!(t.edge_classes().len(), 10);
    }

    #[test]
    fn k6_coloring_is_proper() {
        let mut seen = std::collections::HashSet::new();
        for &(u, w, c) in &K6_EDGE_COLORING {
            assert!(u != w);
            assert!(seen.insert((u.min(w), u.max(w))));
            assert!(seen.insert((6 + u, c as usize))); // vertex-color pairs unique
            assert!(seen.insert((6 + w, c as usize)));
        }
        assert_eq!(K6_EDGE_COLORING.len(), 15);
    }
}
