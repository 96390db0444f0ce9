//! A small kernel for facet-pairing triangulations of hyperbolic
//! 4-manifolds assembled from rectified 5-cells.
//!
//! The library represents 4-dimensional triangulations (labeled 4-simplices
//! with facet pairings), checks the combinatorial hyperbolicity conditions
//! (every face cycle of length 6 with trivial return map), and derives the
//! induced boundary data: vertex links as ideal 3-manifold triangulations,
//! cusp cross-section surfaces, exact volumes and Euler characteristics.
//! Canonical signatures and isomorphism testing make the derived objects
//! comparable.
//!
//! Modules:
//! - [`tri`]: the generic facet-pairing kernel (validation, face cycles,
//!   orientability, vertex/edge classes),
//! - [`core4`] / [`link3`] / [`surface2`]: dimension-specific operations,
//! - [`iso`]: isomorphism, signatures, symmetries (rayon-parallel seed
//!   search behind the default `parallel` feature),
//! - [`constructions`]: the reference builders (`fig8`, `coneC`, `tripleT`,
//!   `k6block`),
//! - [`io`]: the `tri3`/`tri4` text formats,
//! - [`report`]: JSON analysis reports.

#![forbid(unsafe_code)]

pub mod constructions;
pub mod core4;
pub mod decimal;
pub mod io;
pub mod iso;
pub mod link3;
pub mod perm;
pub mod report;
pub mod surface2;
pub mod tri;

mod unionfind;

pub use core4::{ExactVolume, FaceCycle, FaceSlot, Triangulation4};
pub use link3::{EdgeCycle3, TetrahedralCertificate, Triangulation3, TET_VOLUME};
pub use perm::{Perm, Perm4, Perm5};
pub use surface2::{SurfaceClass, TriangulatedSurface};
pub use tri::{FacetSlot, Gluing, GluingError, NotClosed, ReturnClass, RidgeCycle, RidgeSlot, Triangulation};
