//! Compact oriented surfaces with a canonical first-homology basis.
//!
//! The basis of `H_1(F_{g,b})` is ordered `a_1, b_1, ..., a_g, b_g, d_1, ..., d_{b-1}`,
//! where `d_j` is the class of the `j`-th boundary circle. The last circle is
//! omitted since the boundary classes sum to zero.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Surface {
    pub genus: u32,
    pub boundary: u32,
}

impl Surface {
    pub const DISK: Surface = Surface::new(0, 1);
    pub const ANNULUS: Surface = Surface::new(0, 2);

    pub const fn new(genus: u32, boundary: u32) -> Self {
        Surface { genus, boundary }
    }

    pub fn h1_rank(&self) -> usize {
        2 * self.genus as usize + (self.boundary as usize).saturating_sub(1)
    }

    pub fn euler(&self) -> i64 {
        surface_euler(*self)
    }

    /// Index of `a_i` (1-based `i`) in the canonical basis.
    pub fn a_index(&self, i: u32) -> usize {
        assert!(i >= 1 && i <= self.genus, "a_{i} does not exist on {self}");
        2 * (i as usize - 1)
    }

    pub fn b_index(&self, i: u32) -> usize {
        self.a_index(i) + 1
    }

    /// Index of `d_j` (1-based `j`, `j < boundary`) in the canonical basis.
    pub fn d_index(&self, j: u32) -> usize {
        assert!(j >= 1 && j < self.boundary, "d_{j} is not a basis class on {self}");
        2 * self.genus as usize + (j as usize - 1)
    }

    pub fn zero_class(&self) -> HomologyClass {
        HomologyClass::zero(self.h1_rank())
    }

    pub fn a(&self, i: u32) -> HomologyClass {
        HomologyClass::basis(self.h1_rank(), self.a_index(i))
    }

    pub fn b(&self, i: u32) -> HomologyClass {
        HomologyClass::basis(self.h1_rank(), self.b_index(i))
    }

    pub fn d(&self, j: u32) -> HomologyClass {
        HomologyClass::basis(self.h1_rank(), self.d_index(j))
    }

    /// Algebraic intersection number `<x, y> = x^T J y`.
    pub fn pairing(&self, x: &HomologyClass, y: &HomologyClass) -> Result<i64> {
        self.check_class(x)?;
        self.check_class(y)?;
        Ok((0..self.genus as usize)
            .map(|i| {
                let (a, b) = (2 * i, 2 * i + 1);
                x.0[a] * y.0[b] - x.0[b] * y.0[a]
            })
            .sum())
    }

    pub fn check_class(&self, c: &HomologyClass) -> Result<()> {
        if c.len() != self.h1_rank() {
            return Err(Error::LengthMismatch {
                expected: self.h1_rank(),
                found: c.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F({},{})", self.genus, self.boundary)
    }
}

/// Coordinates of a class in the canonical basis of some surface.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomologyClass(pub Vec<i64>);

impl HomologyClass {
    pub fn zero(len: usize) -> Self {
        HomologyClass(vec![0; len])
    }

    pub fn basis(len: usize, index: usize) -> Self {
        let mut v = vec![0; len];
        v[index] = 1;
        HomologyClass(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    pub fn scaled(&self, k: i64) -> Self {
        HomologyClass(self.0.iter().map(|x| x * k).collect())
    }
}

impl From<Vec<i64>> for HomologyClass {
    fn from(v: Vec<i64>) -> Self {
        HomologyClass(v)
    }
}

/// The intersection form `J` on the canonical basis.
///
/// `J(a_i, b_i) = 1`, `J(b_i, a_i) = -1`; boundary classes pair trivially.
pub fn intersection_form(s: Surface) -> IntMatrix {
    let n = s.h1_rank();
    let mut j = IntMatrix::zeros(n, n);
    for i in 1..=s.genus {
        let (a, b) = (s.a_index(i), s.b_index(i));
        j[(a, b)] = BigInt::from(1);
        j[(b, a)] = BigInt::from(-1);
    }
    j
}

pub fn surface_euler(s: Surface) -> i64 {
    2 - 2 * i64::from(s.genus) - i64::from(s.boundary)
}
