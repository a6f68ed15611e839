//! Permutations of `{0..n-1}` stored as image arrays.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("image {image} out of range for degree {degree}")]
    OutOfRange { image: usize, degree: usize },
    #[error("point {0} is hit twice")]
    NotBijective(usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
}

/// A bijection of `{0..n-1}`. Ordering is lexicographic on the image array.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &image in &images {
            if image >= degree {
                return Err(PermError::OutOfRange { image, degree });
            }
            if std::mem::replace(&mut seen[image], true) {
                return Err(PermError::NotBijective(image));
            }
        }
        Ok(Permutation(images))
    }

    /// Builds a permutation from disjoint cycles over 0-based points.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(PermError::OutOfRange { image: p, degree });
                }
                images[p] = cycle[(i + 1) % cycle.len()];
            }
        }
        Self::from_images(images)
    }

    /// Parses 1-based images, the external convention.
    pub fn from_one_based(images: &[usize]) -> Result<Self, PermError> {
        let degree = images.len();
        let shifted = images
            .iter()
            .map(|&i| {
                i.checked_sub(1)
                    .ok_or(PermError::OutOfRange { image: 0, degree })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_images(shifted)
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.0.iter().map(|&i| i + 1).collect()
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn images(&self) -> &[usize] {
        &self.0
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (x, &y) in self.0.iter().enumerate() {
            inv[y] = x;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(x, &y)| x == y)
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(x, &y)| *x == y).map(|(x, _)| x)
    }

    pub fn fixed_point_count(&self) -> usize {
        self.fixed_points().count()
    }

    /// Disjoint cycles including fixed points, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.0[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.0[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lengths.sort_unstable();
        lengths
    }

    pub fn order(&self) -> usize {
        self.cycles().iter().map(Vec::len).fold(1, lcm)
    }

    pub fn pow(&self, mut exp: usize) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            exp >>= 1;
        }
        acc
    }

    /// Conjugate by a relabeling: the permutation `relabel ∘ self ∘ relabel⁻¹`.
    pub fn conjugate_by(&self, relabel: &Permutation) -> Permutation {
        relabel.compose(self).compose(&relabel.inverse())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Cycle notation with 1-based points, `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_one_based().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(d)?;
        Permutation::from_one_based(&images).map_err(serde::de::Error::custom)
    }
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_roundtrip() {
        let p = Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
        assert_eq!(p.images(), &[1, 2, 3, 0]);
        assert_eq!(p.to_string(), "(1,2,3,4)");
        assert_eq!(p.order(), 4);
        assert_eq!(p.pow(4), Permutation::identity(4));
        assert_eq!(p.compose(&p.inverse()), Permutation::identity(4));
    }

    #[test]
    fn compose_applies_right_first() {
        let a = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        // (a∘b)(1) = a(2) = 2
        assert_eq!(a.compose(&b).apply(1), 2);
        assert_eq!(b.compose(&a).apply(1), 0);
    }

    #[test]
    fn rejects_non_bijection() {
        assert_eq!(
            Permutation::from_images(vec![0, 0]),
            Err(PermError::NotBijective(0))
        );
        assert!(Permutation::from_one_based(&[0, 1]).is_err());
        assert!(Permutation::from_images(vec![2, 0]).is_err());
    }

    #[test]
    fn identity_display() {
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert_eq!(Permutation::identity(3).fixed_point_count(), 3);
    }
}
