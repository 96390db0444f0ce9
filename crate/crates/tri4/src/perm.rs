//! Small fixed-degree permutations on the labels `0..N`.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("images {images:?} are not a bijection of 0..{degree}")]
pub struct NotABijection {
    pub degree: usize,
    pub images: Vec<u8>,
}

/// A permutation of `{0, .., N-1}` stored as its image array.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm<const N: usize> {
    images: [u8; N],
}

pub type Perm5 = Perm<5>;
pub type Perm4 = Perm<4>;

impl<const N: usize> Perm<N> {
    pub fn identity() -> Self {
        let mut images = [0u8; N];
        for (i, img) in images.iter_mut().enumerate() {
            *img = i as u8;
        }
        Perm { images }
    }

    pub fn from_images(images: [u8; N]) -> Result<Self, NotABijection> {
        let mut seen = [false; N];
        for &img in &images {
            if (img as usize) >= N || seen[img as usize] {
                return Err(NotABijection {
                    degree: N,
                    images: images.to_vec(),
                });
            }
            seen[img as usize] = true;
        }
        Ok(Perm { images })
    }

    /// The transposition swapping `a` and `b`.
    pub fn transposition(a: u8, b: u8) -> Self {
        assert!((a as usize) < N && (b as usize) < N);
        let mut p = Self::identity();
        p.images.swap(a as usize, b as usize);
        p
    }

    pub fn image(&self, label: u8) -> u8 {
        self.images[label as usize]
    }

    pub fn images(&self) -> [u8; N] {
        self.images
    }

    pub fn inverse(&self) -> Self {
        let mut images = [0u8; N];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u8;
        }
        Perm { images }
    }

    /// Composition applying `self` first, then `next`.
    pub fn then(&self, next: &Self) -> Self {
        let mut images = [0u8; N];
        for (i, img) in images.iter_mut().enumerate() {
            *img = next.images[self.images[i] as usize];
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i as u8 == img)
    }

    /// Parity: `+1` for even permutations, `-1` for odd.
    pub fn sign(&self) -> i8 {
        let mut inversions = 0;
        for i in 0..N {
            for j in (i + 1)..N {
                if self.images[i] > self.images[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// All `N!` permutations in lexicographic order of their image arrays.
    pub fn all() -> impl Iterator<Item = Self> {
        use itertools::Itertools;
        (0..N as u8).permutations(N).map(|v| {
            let mut images = [0u8; N];
            images.copy_from_slice(&v);
            Perm { images }
        })
    }
}

impl<const N: usize> fmt::Debug for Perm<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, img) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{img}")?;
        }
        write!(f, "]")
    }
}

impl<const N: usize> fmt::Display for Perm<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_inverse() {
        let p = Perm5::from_images([1, 3, 0, 2, 4]).unwrap();
        assert!(p.then(&p.inverse()).is_identity());
        assert!(p.inverse().then(&p).is_identity());
        assert!(Perm5::identity().is_identity());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm4::from_images([0, 0, 1, 2]).is_err());
        assert!(Perm4::from_images([0, 1, 2, 4]).is_err());
    }

    #[test]
    fn composition_order() {
        // then(p, q) applies p first.
        let p = Perm4::from_images([1, 0, 2, 3]).unwrap();
        let q = Perm4::from_images([0, 2, 1, 3]).unwrap();
        let r = p.then(&q);
        assert_eq!(r.image(0), q.image(p.image(0)));
        assert_eq!(r.images(), [2, 0, 1, 3]);
    }

    #[test]
    fn sign_matches_transposition_count() {
        assert_eq!(Perm5::identity().sign(), 1);
        assert_eq!(Perm5::transposition(0, 1).sign(), -1);
        // 3-cycle (0 1 2) is even.
        assert_eq!(Perm5::from_images([1, 2, 0, 3, 4]).unwrap().sign(), 1);
        // 4-cycle is odd.
        assert_eq!(Perm5::from_images([1, 2, 3, 0, 4]).unwrap().sign(), -1);
    }

    #[test]
    fn all_is_lexicographic_and_complete() {
        let perms: Vec<Perm4> = Perm4::all().collect();
        assert_eq!(perms.len(), 24);
        assert!(perms.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(perms[0], Perm4::identity());
    }

    #[test]
    fn sign_is_multiplicative() {
        for p in Perm4::all() {
            for q in Perm4::all().step_by(5) {
                assert_eq!(p.then(&q).sign(), p.sign() * q.sign());
            }
        }
    }
}
