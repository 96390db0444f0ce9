//! Boundary 3-manifold triangulations and cusp surfaces.
//!
//! The boundary components of the complex encoded by a closed 4-dimensional
//! triangulation are in one-to-one correspondence with its vertex classes,
//! each triangulated by the link of the class. Cusps correspond to edge
//! classes; their cross-sections are flat surfaces with one triangle per
//! `(simplex, edge)` slot.

use thiserror::Error;

use crate::surface2::{SideSlot, SurfaceClass, TriangulatedSurface};
use crate::tri::{FacetSlot, Gluing, NotClosed, ReturnClass, RidgeCycle, Triangulation};
use crate::perm::Perm;

pub type Triangulation3 = Triangulation<4>;

/// An edge cycle of an ideal 3-dimensional triangulation: the orbit of a
/// `(tetrahedron, edge)` slot. Its length is the edge valence; its return
/// map permutes the edge's two endpoint labels.
pub type EdgeCycle3 = RidgeCycle<4>;

/// Volume of the regular ideal hyperbolic tetrahedron,
/// `2 * Lobachevsky(pi/6) = 1.0149416064096536...`.
pub const TET_VOLUME: f64 = 1.0149416064096536;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinkError {
    #[error("slot class is not a class of the triangulation's slot partition")]
    NotAClass,
    #[error(transparent)]
    NotClosed(#[from] NotClosed),
}

/// Certificate that a closed 3-dimensional triangulation is a tessellation
/// by regular ideal tetrahedra: granted iff every edge valence is 6 and
/// every edge return map is trivial.
#[derive(Clone, Debug)]
pub struct TetrahedralCertificate {
    pub all_valence_six: bool,
    pub all_returns_trivial: bool,
    pub orientable: bool,
    pub num_cusps: usize,
    pub cusp_surfaces: Vec<SurfaceClass>,
    /// `M * TET_VOLUME`; meaningful only when the certificate is granted.
    pub volume: f64,
}

impl TetrahedralCertificate {
    pub fn granted(&self) -> bool {
        self.all_valence_six && self.all_returns_trivial
    }
}

/// Compresses the labels `0..V` minus `removed` to `0..V-1`, preserving order.
fn compress(label: u8, removed: u8) -> u8 {
    if label > removed {
        label - 1
    } else {
        label
    }
}

impl Triangulation<5> {
    /// The boundary 3-manifold triangulation induced on a vertex class:
    /// one tetrahedron per `(simplex, vertex)` slot, labeled by the
    /// simplex's other four labels compressed order-preservingly to 0..3.
    /// Each 4-dimensional gluing on a facet containing the vertex induces
    /// one face gluing; the link of a class of a closed triangulation is
    /// closed.
    pub fn vertex_link(&self, class: &[(usize, u8)]) -> Result<Triangulation3, LinkError> {
        let mut index = std::collections::BTreeMap::new();
        for (i, &slot) in class.iter().enumerate() {
            index.insert(slot, i);
        }
        let mut link = Triangulation3::new(class.len());
        for (&(s, v), &i) in &index {
            for u in 0..5u8 {
                if u == v {
                    continue;
                }
                let Some(g) = self.gluing_at(FacetSlot { simplex: s, facet: u }) else {
                    continue; // partial input: the induced face stays open
                };
                let v2 = g.map.image(v);
                let &j = index.get(&(g.to.simplex, v2)).ok_or(LinkError::NotAClass)?;
                let from = FacetSlot {
                    simplex: i,
                    facet: compress(u, v),
                };
                let to = FacetSlot {
                    simplex: j,
                    facet: compress(g.map.image(u), v2),
                };
                if (from.simplex, from.facet) > (to.simplex, to.facet) {
                    continue; // inserted from the other side
                }
                let mut images = [0u8; 4];
                for w in 0..5u8 {
                    if w != v {
                        images[compress(w, v) as usize] = compress(g.map.image(w), v2);
                    }
                }
                let map = Perm::<4>::from_images(images).expect("induced map is a bijection");
                link.add_gluing(Gluing { from, to, map })
                    .map_err(|_| LinkError::NotAClass)?;
            }
        }
        Ok(link)
    }

    /// The cusp cross-section surface of an edge class: one triangle per
    /// `(simplex, edge)` slot, with vertices the three labels off the edge
    /// (compressed to 0..2) and sides indexed by the three facets containing
    /// the edge.
    pub fn cusp_surface(&self, class: &[(usize, (u8, u8))]) -> Result<TriangulatedSurface, LinkError> {
        link_surface::<5>(self, class)
    }
}

impl Triangulation3 {
    /// The edge cycles of a closed ideal triangulation; cycles partition the
    /// `6 M` `(tetrahedron, edge)` slots.
    pub fn edge_cycles(&self) -> Result<Vec<EdgeCycle3>, NotClosed> {
        self.ridge_cycles()
    }

    /// The vertex-link surface of a vertex class: one triangle per
    /// `(tetrahedron, vertex)` slot.
    pub fn cusp_link_surface(&self, class: &[(usize, u8)]) -> Result<TriangulatedSurface, LinkError> {
        let class: Vec<(usize, Vec<u8>)> =
            class.iter().map(|&(s, v)| (s, vec![v])).collect();
        apex_link_surface::<4>(self, &class)
    }

    /// `M * TET_VOLUME` for a closed triangulation with `M` tetrahedra.
    pub fn volume(&self) -> Result<f64, NotClosed> {
        if !self.is_closed() {
            return Err(NotClosed {
                unpaired: self.unpaired_slots(),
            });
        }
        Ok(self.num_simplices() as f64 * TET_VOLUME)
    }

    /// Decimal rendering of the volume, 17 significant digits.
    pub fn volume_decimal(&self) -> Result<String, NotClosed> {
        if !self.is_closed() {
            return Err(NotClosed {
                unpaired: self.unpaired_slots(),
            });
        }
        Ok(crate::decimal::tet_volume_times(self.num_simplices()))
    }

    /// Edge valences, return maps, orientability and cusp surfaces in one
    /// record. The certificate is granted iff all valences are 6 and all
    /// edge return maps are trivial.
    pub fn tetrahedral_certificate(&self) -> Result<TetrahedralCertificate, NotClosed> {
        let cycles = self.edge_cycles()?;
        let all_valence_six = cycles.iter().all(|c| c.len() == 6);
        let all_returns_trivial = cycles
            .iter()
            .all(|c| c.return_class() == ReturnClass::Identity);
        let orientable = self.orientability().is_some();
        let vertex_classes = self.vertex_classes();
        let cusp_surfaces = vertex_classes
            .iter()
            .map(|class| {
                let surface = self
                    .cusp_link_surface(class)
                    .expect("closed triangulation induces closed link surfaces");
                surface
                    .classify()
                    .expect("closed link surface classifies")
            })
            .collect::<Vec<_>>();
        Ok(TetrahedralCertificate {
            all_valence_six,
            all_returns_trivial,
            orientable,
            num_cusps: vertex_classes.len(),
            cusp_surfaces,
            volume: self.num_simplices() as f64 * TET_VOLUME,
        })
    }
}

/// Shared link-surface construction via apex label sets: the surface has one
/// triangle per `(simplex, apex set)` slot in the class, where the apex set
/// has `V - 3` labels; triangle vertices are the three remaining labels and
/// side `f` (a remaining label) faces the gluing on facet `f`.
fn apex_link_surface<const V: usize>(
    t: &Triangulation<V>,
    class: &[(usize, Vec<u8>)],
) -> Result<TriangulatedSurface, LinkError> {
    let mut index = std::collections::BTreeMap::new();
    for (i, slot) in class.iter().enumerate() {
        index.insert(slot.clone(), i);
    }
    let mut surface = TriangulatedSurface::new(class.len());
    for (slot, &i) in &index {
        let (s, apex) = (slot.0, &slot.1);
        let others: Vec<u8> = (0..V as u8).filter(|l| !apex.contains(l)).collect();
        debug_assert_eq!(others.len(), 3);
        let local = |l: u8| others.iter().position(|&o| o == l).unwrap() as u8;
        for &f in &others {
            let Some(g) = t.gluing_at(FacetSlot { simplex: s, facet: f }) else {
                return Err(LinkError::NotClosed(NotClosed {
                    unpaired: t.unpaired_slots(),
                }));
            };
            let mut apex2: Vec<u8> = apex.iter().map(|&a| g.map.image(a)).collect();
            apex2.sort_unstable();
            let key = (g.to.simplex, apex2.clone());
            let &j = index.get(&key).ok_or(LinkError::NotAClass)?;
            let others2: Vec<u8> = (0..V as u8).filter(|l| !apex2.contains(l)).collect();
            let local2 = |l: u8| others2.iter().position(|&o| o == l).unwrap() as u8;
            let from = SideSlot {
                triangle: i,
                side: local(f),
            };
            let to = SideSlot {
                triangle: j,
                side: local2(g.map.image(f)),
            };
            if (from.triangle, from.side) > (to.triangle, to.side) {
                continue; // inserted from the other side
            }
            // endpoints of side f, in increasing local order
            let ends: Vec<u8> = others.iter().copied().filter(|&o| o != f).collect();
            let img0 = local2(g.map.image(ends[0]));
            let img1 = local2(g.map.image(ends[1]));
            let reversed = img0 > img1;
            surface
                .add_side_gluing(from, to, reversed)
                .map_err(|_| LinkError::NotAClass)?;
        }
    }
    Ok(surface)
}

/// Edge-class link surface for 4-dimensional triangulations.
fn link_surface<const V: usize>(
    t: &Triangulation<V>,
    class: &[(usize, (u8, u8))],
) -> Result<TriangulatedSurface, LinkError> {
    let class: Vec<(usize, Vec<u8>)> = class
        .iter()
        .map(|&(s, (a, b))| (s, vec![a.min(b), a.max(b)]))
        .collect();
    apex_link_surface::<V>(t, &class)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn identity_double4() -> Triangulation<5> {
        let mut t = Triangulation::<5>::new(2);
        for f in 0..5 {
            t.add_gluing(Gluing {
                from: FacetSlot { simplex: 0, facet: f },
                to: FacetSlot { simplex: 1, facet: f },
                map: Perm::identity(),
            })
            .unwrap();
        }
        t
    }

    fn identity_double3() -> Triangulation3 {
        let mut t = Triangulation3::new(2);
        for f in 0..4 {
            t.add_gluing(Gluing {
                from: FacetSlot { simplex: 0, facet: f },
                to: FacetSlot { simplex: 1, facet: f },
                map: Perm::identity(),
            })
            .unwrap();
        }
        t
    }

    #[test]
    fn tet_volume_constant_is_the_lobachevsky_value() {
        // Two independent oracles for 2 * Lobachevsky(pi/6): the series
        //   L(t) = t - t ln(2t) + sum_{n>=1} zeta(2n)/(n(2n+1)) t^{2n+1}/pi^{2n}
        // and Simpson quadrature of -int_0^t ln|2 sin x| dx with the
        // logarithmic singularity integrated analytically.
        let theta = std::f64::consts::PI / 6.0;
        let pi = std::f64::consts::PI;

        let zeta = |s: i32| -> f64 {
            if s == 2 {
                return pi * pi / 6.0;
            }
            let mut total = 0.0;
            for k in 1..200_000u64 {
                let term = (k as f64).powi(-s);
                total += term;
                if term < 1e-22 {
                    break;
                }
            }
            total
        };
        let mut series = theta * (1.0 - (2.0 * theta).ln());
        for n in 1..25 {
            series += zeta(2 * n) / ((n as f64) * (2 * n + 1) as f64)
                * theta.powi(2 * n + 1)
                / pi.powi(2 * n);
        }
        let from_series = 2.0 * series;

        // -int_0^theta ln(2x) dx = theta(1 - ln(2 theta)); the remainder
        // integrand ln(sin x / x) extends smoothly by 0 at x = 0.
        let smooth = |x: f64| {
            if x == 0.0 {
                0.0
            } else {
                (x.sin() / x).ln()
            }
        };
        let n = 100_000;
        let h = theta / n as f64;
        let mut simpson = smooth(0.0) + smooth(theta);
        for k in 1..n {
            let w = if k % 2 == 1 { 4.0 } else { 2.0 };
            simpson += w * smooth(k as f64 * h);
        }
        simpson *= h / 3.0;
        let from_quadrature = 2.0 * (theta * (1.0 - (2.0 * theta).ln()) - simpson);

        assert!((from_series - from_quadrature).abs() < 1e-12);
        assert!((TET_VOLUME - from_series).abs() < 1e-14);
        // leading digits of the figure-eight complement volume
        assert!((2.0 * TET_VOLUME - 2.029883).abs() < 1e-6);
    }

    #[test]
    fn identity_double_link_of_a_vertex_class() {
        let t = identity_double4();
        let classes = t.vertex_classes();
        assert_eq!(classes.len(), 5);
        let link = t.vertex_link(&classes[0]).unwrap();
        assert_eq!(link.num_simplices(), 2);
        assert!(link.is_closed());
    }

    #[test]
    fn identity_double_cusp_surface_is_a_sphere() {
        let t = identity_double4();
        let eclasses = t.edge_classes();
        assert_eq!(eclasses.len(), 10);
        for class in &eclasses {
            let s = t.cusp_surface(class).unwrap();
            assert_eq!(s.num_triangles(), class.len());
            let chi = s.euler_characteristic().unwrap();
            assert!(chi > 0);
            assert!(s.vertex_valences().contains(&2));
            assert_eq!(s.classify().unwrap(), SurfaceClass::Sphere);
        }
    }

    #[test]
    fn identity_double3_certificate_denied() {
        let t = identity_double3();
        let cert = t.tetrahedral_certificate().unwrap();
        assert!(!cert.all_valence_six);
        assert!(!cert.granted());
    }

    #[test]
    fn one_tetrahedron_certificate_denied() {
        // faces glued in pairs within a single tetrahedron
        let mut t = Triangulation3::new(1);
        t.add_gluing(Gluing {
            from: FacetSlot { simplex: 0, facet: 0 },
            to: FacetSlot { simplex: 0, facet: 1 },
            map: Perm::from_images([1, 0, 2, 3]).unwrap(),
        })
        .unwrap();
        t.add_gluing(Gluing {
            from: FacetSlot { simplex: 0, facet: 2 },
            to: FacetSlot { simplex: 0, facet: 3 },
            map: Perm::from_images([0, 1, 3, 2]).unwrap(),
        })
        .unwrap();
        assert!(t.is_closed());
        let cert = t.tetrahedral_certificate().unwrap();
        assert!(!cert.all_valence_six);
        assert!(!cert.granted());
        let cycles = t.edge_cycles().unwrap();
        assert!(cycles.iter().any(|c| c.len() != 6));
        assert_eq!(cycles.iter().map(|c| c.len()).sum::<usize>(), 6);
    }

    #[test]
    fn volume_scales_with_tetrahedra() {
        let t = identity_double3();
        assert_eq!(t.volume().unwrap(), 2.0 * TET_VOLUME);
        assert_eq!(t.volume_decimal().unwrap(), "2.0298832128193072");
    }

    #[test]
    fn link_rejects_non_classes() {
        let t = identity_double4();
        // (0,0) and (1,1) are in different vertex classes
        let bogus = vec![(0usize, 0u8), (1usize, 1u8)];
        assert!(matches!(
            t.vertex_link(&bogus),
            Err(LinkError::NotAClass)
        ));
    }
}
