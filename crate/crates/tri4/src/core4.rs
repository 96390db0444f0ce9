//! 4-dimensional facet-pairing triangulations.
//!
//! A closed 4-dimensional triangulation encodes a gluing of rectified
//! 5-cells: each 4-simplex stands for one copy of the polytope, each facet
//! pairing for an isometry between octahedral facets. The face cycles below
//! carry the two combinatorial hyperbolicity conditions: the glued complex
//! is a manifold iff every return map is the identity, and it is hyperbolic
//! with totally geodesic boundary iff in addition every cycle has length 6.

use num_rational::Ratio;

use crate::tri::{NotClosed, RidgeCycle, RidgeSlot, ReturnClass, Triangulation};

pub type Triangulation4 = Triangulation<5>;

/// A 2-face slot of a 4-simplex: the face spanned by the three labels other
/// than the omitted pair. Ten per simplex.
pub type FaceSlot = RidgeSlot;

/// A face cycle of a 4-dimensional triangulation.
pub type FaceCycle = RidgeCycle<5>;

/// Volume of the rectified 5-cell as a rational multiple of pi^2.
pub const RECTIFIED_5_CELL_PI2_COEFFICIENT: (i64, i64) = (2, 9);

/// An exact hyperbolic volume `coefficient * pi^2`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ExactVolume {
    pub coefficient: Ratio<i64>,
}

impl ExactVolume {
    /// Decimal rendering, 17 significant digits.
    pub fn decimal(&self) -> String {
        crate::decimal::pi_squared_times(self.coefficient)
    }

    pub fn approx(&self) -> f64 {
        let q = *self.coefficient.numer() as f64 / *self.coefficient.denom() as f64;
        q * std::f64::consts::PI * std::f64::consts::PI
    }
}

impl std::fmt::Display for ExactVolume {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}*pi^2", self.coefficient)
    }
}

impl Triangulation4 {
    /// The face cycles of a closed triangulation. Every 2-face slot lies in
    /// exactly one cycle; the sum of cycle lengths is `10 * N`.
    pub fn face_cycles(&self) -> Result<Vec<FaceCycle>, NotClosed> {
        self.ridge_cycles()
    }

    /// True iff every face-cycle return map is the identity, so the glued
    /// complex is a manifold.
    pub fn is_manifold(&self) -> Result<bool, NotClosed> {
        Ok(self
            .face_cycles()?
            .iter()
            .all(|c| c.return_class() == ReturnClass::Identity))
    }

    /// True iff every face cycle has length 6.
    pub fn is_six_valent(&self) -> Result<bool, NotClosed> {
        Ok(self.face_cycles()?.iter().all(|c| c.len() == 6))
    }

    /// Exact volume of the glued complex: `N` copies of the rectified
    /// 5-cell, i.e. `2N/9 * pi^2`.
    pub fn exact_volume(&self) -> Result<ExactVolume, NotClosed> {
        if !self.is_closed() {
            return Err(NotClosed {
                unpaired: self.unpaired_slots(),
            });
        }
        let (num, den) = RECTIFIED_5_CELL_PI2_COEFFICIENT;
        Ok(ExactVolume {
            coefficient: Ratio::new(num * self.num_simplices() as i64, den),
        })
    }

    /// Euler characteristic `N / 6` as an exact rational. An integer value
    /// is necessary for the triangulation to be 6-valent with trivial
    /// returns, since the volume is proportional to the Euler characteristic
    /// through `4 pi^2 / 3`.
    pub fn euler_characteristic(&self) -> Result<Ratio<i64>, NotClosed> {
        if !self.is_closed() {
            return Err(NotClosed {
                unpaired: self.unpaired_slots(),
            });
        }
        Ok(Ratio::new(self.num_simplices() as i64, 6))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tri::{FacetSlot, Gluing};
    use crate::perm::Perm5;

    fn identity_double() -> Triangulation4 {
        let mut t = Triangulation4::new(2);
        for f in 0..5 {
            t.add_gluing(Gluing {
                from: FacetSlot { simplex: 0, facet: f },
                to: FacetSlot { simplex: 1, facet: f },
                map: Perm5::identity(),
            })
            .unwrap();
        }
        t
    }

    #[test]
    fn identity_double_is_manifold_but_not_six_valent() {
        let t = identity_double();
        assert!(t.is_manifold().unwrap());
        assert!(!t.is_six_valent().unwrap());
    }

    #[test]
    fn volume_and_euler_arithmetic() {
        let t = identity_double();
        let vol = t.exact_volume().unwrap();
        assert_eq!(vol.coefficient, Ratio::new(4, 9));
        assert_eq!(t.euler_characteristic().unwrap(), Ratio::new(1, 3));
        // chi == (3/4) * volume coefficient
        assert_eq!(
            t.euler_characteristic().unwrap(),
            vol.coefficient * Ratio::new(3, 4)
        );
    }

    #[test]
    fn euler_characteristic_integrality_flags() {
        // N = 4: chi = 2/3, not an integer, so the complex cannot be
        // 6-valent with trivial returns.
        let mut t = Triangulation4::new(4);
        for f in 0..5 {
            for (a, b) in [(0usize, 1usize), (2, 3)] {
                t.add_gluing(Gluing {
                    from: FacetSlot { simplex: a, facet: f },
                    to: FacetSlot { simplex: b, facet: f },
                    map: Perm5::identity(),
                })
                .unwrap();
            }
        }
        let chi = t.euler_characteristic().unwrap();
        assert_eq!(chi, Ratio::new(2, 3));
        assert!(!chi.is_integer());
    }

    #[test]
    fn volume_requires_closed() {
        let t = Triangulation4::new(1);
        assert!(t.exact_volume().is_err());
        assert!(t.euler_characteristic().is_err());
    }

    #[test]
    fn exact_volume_display() {
        let t = identity_double();
        let vol = t.exact_volume().unwrap();
        assert_eq!(vol.to_string(), "4/9*pi^2");
        assert!((vol.approx() - 4.386_490_844_928_604).abs() < 1e-12);
    }
}
