//! Dense 1D and 2D grids of series entries.

use crate::error::{Error, Result};
use crate::monomial::ComponentVar;
use crate::polynomial::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    D1(usize),
    D2(usize, usize),
}

impl Shape {
    pub fn dim(&self) -> usize {
        match self {
            Shape::D1(_) => 1,
            Shape::D2(..) => 2,
        }
    }

    pub fn len(&self) -> usize {
        match *self {
            Shape::D1(n) => n,
            Shape::D2(m, n) => m * n,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `(rows, cols)`; a 1D grid is a single column of `n` rows.
    pub fn rows_cols(&self) -> (usize, usize) {
        match *self {
            Shape::D1(n) => (n, 1),
            Shape::D2(m, n) => (m, n),
        }
    }

    pub fn extents(&self) -> Vec<usize> {
        match *self {
            Shape::D1(n) => vec![n],
            Shape::D2(m, n) => vec![m, n],
        }
    }
}

/// A 1D list or 2D row-major grid of ring entries, indexed from 0.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesGrid<R> {
    shape: Shape,
    entries: Vec<R>,
}

impl<R> SeriesGrid<R> {
    pub fn new_1d(entries: Vec<R>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidSpec("grid extent must be at least 1".into()));
        }
        Ok(SeriesGrid { shape: Shape::D1(entries.len()), entries })
    }

    pub fn new_2d(rows: usize, cols: usize, entries: Vec<R>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidSpec("grid extents must be at least 1".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::InvalidSpec(format!(
                "{rows}x{cols} grid needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(SeriesGrid { shape: Shape::D2(rows, cols), entries })
    }

    pub fn from_fn_1d(n: usize, f: impl FnMut(usize) -> R) -> Result<Self> {
        Self::new_1d((0..n).map(f).collect())
    }

    pub fn from_fn_2d(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Result<Self> {
        let entries = (0..rows).flat_map(|k| (0..cols).map(move |l| (k, l))).map(|(k, l)| f(k, l)).collect();
        Self::new_2d(rows, cols, entries)
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn dim(&self) -> usize {
        self.shape.dim()
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<R> {
        self.entries
    }

    /// Entry `k` of a 1D grid, or the `k`-th entry in row-major order.
    pub fn get(&self, k: usize) -> Option<&R> {
        self.entries.get(k)
    }

    pub fn get2(&self, k: usize, l: usize) -> Option<&R> {
        let (rows, cols) = self.shape.rows_cols();
        (k < rows && l < cols).then(|| &self.entries[k * cols + l])
    }

    pub fn map<S>(&self, f: impl FnMut(&R) -> S) -> SeriesGrid<S> {
        SeriesGrid { shape: self.shape, entries: self.entries.iter().map(f).collect() }
    }

    /// Row-major `(index, entry)` pairs; 1D indices have one element.
    pub fn indexed(&self) -> impl Iterator<Item = (Vec<usize>, &R)> {
        let shape = self.shape;
        self.entries.iter().enumerate().map(move |(i, e)| match shape {
            Shape::D1(_) => (vec![i], e),
            Shape::D2(_, n) => (vec![i / n, i % n], e),
        })
    }

    pub(crate) fn from_parts(shape: Shape, entries: Vec<R>) -> Self {
        debug_assert_eq!(shape.len(), entries.len());
        SeriesGrid { shape, entries }
    }

    pub(crate) fn check_same_shape<S>(&self, other: &SeriesGrid<S>) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        if self.shape != other.shape {
            return Err(Error::ExtentMismatch { left: self.shape.extents(), right: other.shape.extents() });
        }
        Ok(())
    }
}

impl SeriesGrid<Polynomial> {
    /// `[family[0], .., family[n-1]]`.
    pub fn components_1d(family: char, n: usize) -> Result<Self> {
        Self::from_fn_1d(n, |k| Polynomial::var(ComponentVar::new_1d(family, k as u32)))
    }

    /// `family[k,l]` for `k < rows`, `l < cols`.
    pub fn components_2d(family: char, rows: usize, cols: usize) -> Result<Self> {
        Self::from_fn_2d(rows, cols, |k, l| Polynomial::var(ComponentVar::new_2d(family, k as u32, l as u32)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extents_must_be_positive() {
        assert!(SeriesGrid::<i32>::new_1d(vec![]).is_err());
        assert!(SeriesGrid::<i32>::new_2d(0, 3, vec![]).is_err());
        assert!(SeriesGrid::new_2d(2, 2, vec![1, 2, 3]).is_err());
    }

    #[test]
    fn row_major_layout() {
        let g = SeriesGrid::from_fn_2d(2, 3, |k, l| 10 * k + l).unwrap();
        assert_eq!(g.entries(), &[0, 1, 2, 10, 11, 12]);
        assert_eq!(g.get2(1, 2), Some(&12));
        assert_eq!(g.get2(2, 0), None);
        let idx: Vec<_> = g.indexed().map(|(i, _)| i).collect();
        assert_eq!(idx[4], vec![1, 1]);
    }

    #[test]
    fn component_grids() {
        let g = SeriesGrid::components_2d('v', 2, 2).unwrap();
        assert_eq!(g.get2(1, 0).unwrap().to_string(), "v[1,0]");
        let err = g.check_same_shape(&SeriesGrid::components_2d('u', 2, 3).unwrap()).unwrap_err();
        assert!(matches!(err, Error::ExtentMismatch { .. }));
    }
}
