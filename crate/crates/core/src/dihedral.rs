//! Elements of the dihedral group `D_2n`.
//!
//! An element is `s^rot` (a rotation) or `r s^rot` (a reflection), subject to
//! `r² = e`, `sⁿ = e`, `(rs)² = e`. Products follow the same right-to-left
//! convention as [`crate::perm::Permutation::compose`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DihedralElement {
    n: usize,
    rot: usize,
    refl: bool,
}

impl DihedralElement {
    pub fn new(n: usize, rot: usize, refl: bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParams("dihedral order n must be positive".into()));
        }
        Ok(Self { n, rot: rot % n, refl })
    }

    pub fn identity(n: usize) -> Self {
        Self { n, rot: 0, refl: false }
    }

    pub fn rotation(n: usize, rot: usize) -> Self {
        Self { n, rot: rot % n, refl: false }
    }

    pub fn reflection(n: usize, rot: usize) -> Self {
        Self { n, rot: rot % n, refl: true }
    }

    pub fn order_n(&self) -> usize {
        self.n
    }

    pub fn rot(&self) -> usize {
        self.rot
    }

    pub fn is_reflection(&self) -> bool {
        self.refl
    }

    pub fn is_identity(&self) -> bool {
        !self.refl && self.rot == 0
    }

    /// `self ∘ rhs` with `s^a ∘ s^b = s^(a+b)`, `s^a ∘ r s^b = r s^(b-a)`,
    /// `r s^a ∘ s^b = r s^(a+b)`, `r s^a ∘ r s^b = s^(b-a)`.
    pub fn compose(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::DegreeMismatch(self.n, rhs.n));
        }
        let n = self.n;
        Ok(if rhs.refl {
            Self {
                n,
                rot: (rhs.rot + n - self.rot % n) % n,
                refl: !self.refl,
            }
        } else {
            Self {
                n,
                rot: (self.rot + rhs.rot) % n,
                refl: self.refl,
            }
        })
    }

    pub fn inverse(&self) -> Self {
        if self.refl {
            *self // every reflection is an involution
        } else {
            Self {
                n: self.n,
                rot: (self.n - self.rot) % self.n,
                refl: false,
            }
        }
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.refl, self.rot) {
            (false, 0) => write!(f, "e"),
            (false, 1) => write!(f, "s"),
            (false, a) => write!(f, "s^{a}"),
            (true, 0) => write!(f, "r"),
            (true, 1) => write!(f, "rs"),
            (true, a) => write!(f, "rs^{a}"),
        }
    }
}

impl fmt::Debug for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_relations_hold() {
        let n = 7;
        let r = DihedralElement::reflection(n, 0);
        let s = DihedralElement::rotation(n, 1);
        assert!(r.compose(&r).unwrap().is_identity());
        let mut sn = DihedralElement::identity(n);
        for _ in 0..n {
            sn = sn.compose(&s).unwrap();
        }
        assert!(sn.is_identity());
        let rs = r.compose(&s).unwrap();
        assert!(rs.compose(&rs).unwrap().is_identity());
    }

    #[test]
    fn reflections_are_involutions() {
        for a in 0..9 {
            let x = DihedralElement::reflection(9, a);
            assert_eq!(x.inverse(), x);
            assert!(x.compose(&x).unwrap().is_identity());
        }
    }

    #[test]
    fn rotation_inverse() {
        let s3 = DihedralElement::rotation(10, 3);
        assert!(s3.compose(&s3.inverse()).unwrap().is_identity());
        assert_eq!(s3.inverse().rot(), 7);
    }

    #[test]
    fn display_forms() {
        assert_eq!(DihedralElement::identity(5).to_string(), "e");
        assert_eq!(DihedralElement::rotation(5, 2).to_string(), "s^2");
        assert_eq!(DihedralElement::reflection(5, 0).to_string(), "r");
        assert_eq!(DihedralElement::reflection(5, 3).to_string(), "rs^3");
    }
}
