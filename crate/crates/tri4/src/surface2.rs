//! Closed triangulated surfaces assembled from labeled triangles.
//!
//! Triangles have local vertex labels 0, 1, 2; side `j` is the side opposite
//! vertex `j`. Side gluings carry an orientation bit: `reversed` says
//! whether the side's endpoints, taken in increasing label order, map to the
//! partner side's endpoints in decreasing order. This is enough data for the
//! Euler characteristic, orientability and the (chi, orientability)
//! classification.

use std::fmt;

use thiserror::Error;

use crate::unionfind::UnionFind;

/// A (triangle, side) incidence.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SideSlot {
    pub triangle: usize,
    pub side: u8,
}

impl fmt::Display for SideSlot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.triangle, self.side)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SideGluingError {
    #[error("triangle index {index} out of range (have {count} triangles)")]
    TriangleOutOfRange { index: usize, count: usize },
    #[error("side label {0} out of range")]
    SideOutOfRange(u8),
    #[error("side {0} glued to itself")]
    GluedToItself(SideSlot),
    #[error("side {0} is already glued")]
    AlreadyGlued(SideSlot),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("surface is not closed: {} unpaired side(s)", unpaired.len())]
pub struct SurfaceNotClosed {
    pub unpaired: Vec<SideSlot>,
}

/// Classification of a closed connected surface by Euler characteristic and
/// orientability.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SurfaceClass {
    Sphere,
    Torus,
    KleinBottle,
    Other { chi: i64, orientable: bool },
}

impl fmt::Display for SurfaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceClass::Sphere => write!(f, "sphere"),
            SurfaceClass::Torus => write!(f, "torus"),
            SurfaceClass::KleinBottle => write!(f, "klein_bottle"),
            SurfaceClass::Other { chi, orientable } => {
                write!(f, "other(chi={chi}, orientable={orientable})")
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct TriangulatedSurface {
    // per triangle, per side: (partner triangle, partner side, reversed)
    table: Vec<[Option<(usize, u8, bool)>; 3]>,
}

/// Direction in which the canonical boundary cycle 0 -> 1 -> 2 -> 0
/// traverses side `j`: +1 if in increasing endpoint order, -1 otherwise.
fn boundary_direction(side: u8) -> i8 {
    match side {
        0 | 2 => 1,
        1 => -1,
        _ => unreachable!(),
    }
}

impl TriangulatedSurface {
    pub fn new(num_triangles: usize) -> Self {
        assert!(num_triangles >= 1);
        TriangulatedSurface {
            table: vec![[None; 3]; num_triangles],
        }
    }

    pub fn num_triangles(&self) -> usize {
        self.table.len()
    }

    fn check(&self, slot: SideSlot) -> Result<(), SideGluingError> {
        if slot.triangle >= self.table.len() {
            return Err(SideGluingError::TriangleOutOfRange {
                index: slot.triangle,
                count: self.table.len(),
            });
        }
        if slot.side >= 3 {
            return Err(SideGluingError::SideOutOfRange(slot.side));
        }
        Ok(())
    }

    pub fn add_side_gluing(
        &mut self,
        a: SideSlot,
        b: SideSlot,
        reversed: bool,
    ) -> Result<(), SideGluingError> {
        self.check(a)?;
        self.check(b)?;
        if a == b {
            return Err(SideGluingError::GluedToItself(a));
        }
        if self.table[a.triangle][a.side as usize].is_some() {
            return Err(SideGluingError::AlreadyGlued(a));
        }
        if self.table[b.triangle][b.side as usize].is_some() {
            return Err(SideGluingError::AlreadyGlued(b));
        }
        self.table[a.triangle][a.side as usize] = Some((b.triangle, b.side, reversed));
        self.table[b.triangle][b.side as usize] = Some((a.triangle, a.side, reversed));
        Ok(())
    }

    pub fn unpaired_sides(&self) -> Vec<SideSlot> {
        let mut out = Vec::new();
        for (t, row) in self.table.iter().enumerate() {
            for (s, e) in row.iter().enumerate() {
                if e.is_none() {
                    out.push(SideSlot {
                        triangle: t,
                        side: s as u8,
                    });
                }
            }
        }
        out
    }

    pub fn is_closed(&self) -> bool {
        self.table.iter().all(|row| row.iter().all(|e| e.is_some()))
    }

    fn require_closed(&self) -> Result<(), SurfaceNotClosed> {
        if self.is_closed() {
            Ok(())
        } else {
            Err(SurfaceNotClosed {
                unpaired: self.unpaired_sides(),
            })
        }
    }

    /// Corner classes (the surface vertices). A corner is a
    /// (triangle, vertex) incidence; the gluing of side `j` identifies its
    /// two endpoint corners with the partner side's endpoints, matched in
    /// increasing or decreasing order according to the orientation bit.
    pub fn corner_classes(&self) -> Vec<Vec<(usize, u8)>> {
        let n = self.table.len();
        let mut uf = UnionFind::new(3 * n);
        let idx = |t: usize, v: u8| 3 * t + v as usize;
        for (t, row) in self.table.iter().enumerate() {
            for (s, e) in row.iter().enumerate() {
                if let Some((t2, s2, reversed)) = *e {
                    let ends = |side: usize| -> (u8, u8) {
                        match side {
                            0 => (1, 2),
                            1 => (0, 2),
                            2 => (0, 1),
                            _ => unreachable!(),
                        }
                    };
                    let (a1, a2) = ends(s);
                    let (b1, b2) = ends(s2 as usize);
                    if reversed {
                        uf.union(idx(t, a1), idx(t2, b2));
                        uf.union(idx(t, a2), idx(t2, b1));
                    } else {
                        uf.union(idx(t, a1), idx(t2, b1));
                        uf.union(idx(t, a2), idx(t2, b2));
                    }
                }
            }
        }
        uf.classes()
            .into_iter()
            .map(|c| c.into_iter().map(|i| (i / 3, (i % 3) as u8)).collect())
            .collect()
    }

    /// Valence (number of incident triangle corners) of each surface vertex,
    /// in corner-class order.
    pub fn vertex_valences(&self) -> Vec<usize> {
        self.corner_classes().iter().map(|c| c.len()).collect()
    }

    /// `V - E + F` with `E = 3F/2` and `V` the number of corner classes.
    pub fn euler_characteristic(&self) -> Result<i64, SurfaceNotClosed> {
        self.require_closed()?;
        let f = self.table.len() as i64;
        let v = self.corner_classes().len() as i64;
        Ok(v - 3 * f / 2 + f)
    }

    /// Whether the triangles admit orientations making every side gluing
    /// orientation-reversing as a boundary identification.
    pub fn orientable(&self) -> Result<bool, SurfaceNotClosed> {
        self.require_closed()?;
        let n = self.table.len();
        let mut sign: Vec<Option<i8>> = vec![None; n];
        let mut queue = std::collections::VecDeque::new();
        for start in 0..n {
            if sign[start].is_some() {
                continue;
            }
            sign[start] = Some(1);
            queue.push_back(start);
            while let Some(t) = queue.pop_front() {
                let st = sign[t].unwrap();
                for (s, e) in self.table[t].iter().enumerate() {
                    let (t2, s2, reversed) = e.unwrap();
                    let r = if reversed { -1 } else { 1 };
                    // compatible orientations traverse the shared side in
                    // opposite directions
                    let forced =
                        -st * boundary_direction(s as u8) * boundary_direction(s2) * r;
                    match sign[t2] {
                        None => {
                            sign[t2] = Some(forced);
                            queue.push_back(t2);
                        }
                        Some(existing) => {
                            if existing != forced {
                                return Ok(false);
                            }
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.table.len();
        let mut uf = UnionFind::new(n);
        for (t, row) in self.table.iter().enumerate() {
            for e in row.iter().flatten() {
                uf.union(t, e.0);
            }
        }
        uf.classes()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Classification by `(chi, orientability)`. Meaningful for closed
    /// connected surfaces; for disconnected input, classify components
    /// separately via [`TriangulatedSurface::components`].
    pub fn classify(&self) -> Result<SurfaceClass, SurfaceNotClosed> {
        let chi = self.euler_characteristic()?;
        let orientable = self.orientable()?;
        Ok(match (chi, orientable) {
            (2, true) => SurfaceClass::Sphere,
            (0, true) => SurfaceClass::Torus,
            (0, false) => SurfaceClass::KleinBottle,
            _ => SurfaceClass::Other { chi, orientable },
        })
    }
}
