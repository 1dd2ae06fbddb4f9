//! Coordinate vectors in an ambient algebra basis.

use griess_exact::ExactScalar;
use std::ops::{Index, IndexMut};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element(Vec<ExactScalar>);

impl Element {
    pub fn new(coords: Vec<ExactScalar>) -> Self {
        Element(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        Element(vec![ExactScalar::zero(); dim])
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut e = Self::zeros(dim);
        e.0[i] = ExactScalar::one();
        e
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(ExactScalar::is_zero)
    }

    pub fn coords(&self) -> &[ExactScalar] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<ExactScalar> {
        self.0
    }

    /// Iterator over the nonzero coordinates.
    pub fn support(&self) -> impl Iterator<Item = (usize, &ExactScalar)> {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn add(&self, other: &Element) -> Element {
        assert_eq!(self.len(), other.len());
        Element(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Element) -> Element {
        assert_eq!(self.len(), other.len());
        Element(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, c: &ExactScalar) -> Element {
        Element(self.0.iter().map(|a| a * c).collect())
    }

    pub fn add_scaled(&mut self, c: &ExactScalar, other: &Element) {
        assert_eq!(self.len(), other.len());
        if c.is_zero() {
            return;
        }
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            if !b.is_zero() {
                *a += &(c * b);
            }
        }
    }

    /// Linear combination of elements.
    pub fn combine(dim: usize, terms: &[(ExactScalar, &Element)]) -> Element {
        let mut acc = Element::zeros(dim);
        for (c, e) in terms {
            acc.add_scaled(c, e);
        }
        acc
    }
}

impl Index<usize> for Element {
    type Output = ExactScalar;
    fn index(&self, i: usize) -> &ExactScalar {
        &self.0[i]
    }
}

impl IndexMut<usize> for Element {
    fn index_mut(&mut self, i: usize) -> &mut ExactScalar {
        &mut self.0[i]
    }
}
