//! Straight, skew and boxed shapes in English notation (row 0 on top).

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Partition, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ShapeKind {
    Straight,
    Skew,
    /// `λ^□`: λ plus a disconnected box north-east of it.
    Boxed(Partition),
}

/// A skew diagram `outer / inner`. Cells of row `r` occupy columns
/// `inner[r] .. outer[r]` (0-based).
///
/// `λ^□` is realized as `(λ₁+1, λ₁, λ₂, ...) / (λ₁)`: the box sits alone in
/// row 0 at column `λ₁`, and λ fills rows `1..=ℓ(λ)` from column 0.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shape {
    kind: ShapeKind,
    outer: Partition,
    inner: Partition,
}

impl Shape {
    pub fn straight(lambda: Partition) -> Self {
        Shape {
            kind: ShapeKind::Straight,
            outer: lambda,
            inner: Partition::empty(),
        }
    }

    pub fn skew(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.is_contained_in(&outer) {
            return Err(Error::InvalidShape(format!(
                "{inner} is not contained in {outer}"
            )));
        }
        if inner.is_empty() {
            return Ok(Shape::straight(outer));
        }
        Ok(Shape {
            kind: ShapeKind::Skew,
            outer,
            inner,
        })
    }

    pub fn boxed(lambda: Partition) -> Result<Self> {
        if lambda.is_empty() {
            return Err(Error::InvalidShape(
                "boxed shape needs a nonempty partition".into(),
            ));
        }
        let first = lambda.part(0);
        let mut outer = vec![first + 1];
        outer.extend_from_slice(lambda.parts());
        Ok(Shape {
            kind: ShapeKind::Boxed(lambda),
            outer: Partition::new(outer)?,
            inner: Partition::new(vec![first])?,
        })
    }

    pub fn kind(&self) -> &ShapeKind {
        &self.kind
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_boxed(&self) -> bool {
        matches!(self.kind, ShapeKind::Boxed(_))
    }

    /// The partition λ of a boxed shape `λ^□`.
    pub fn boxed_lambda(&self) -> Option<&Partition> {
        match &self.kind {
            ShapeKind::Boxed(l) => Some(l),
            _ => None,
        }
    }

    /// The disconnected cell of a boxed shape.
    pub fn box_cell(&self) -> Option<(usize, usize)> {
        self.boxed_lambda().map(|l| (0, l.part(0)))
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    /// Column range `start..end` of row `r`.
    pub fn row_range(&self, r: usize) -> (usize, usize) {
        (self.inner.part(r), self.outer.part(r))
    }

    pub fn row_len(&self, r: usize) -> usize {
        let (s, e) = self.row_range(r);
        e - s
    }

    pub fn contains(&self, r: usize, c: usize) -> bool {
        let (s, e) = self.row_range(r);
        r < self.num_rows() && c >= s && c < e
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.num_rows()).flat_map(move |r| {
            let (s, e) = self.row_range(r);
            (s..e).map(move |c| (r, c))
        })
    }

    pub fn above(&self, (r, c): (usize, usize)) -> Option<(usize, usize)> {
        (r > 0 && self.contains(r - 1, c)).then(|| (r - 1, c))
    }

    pub fn left(&self, (r, c): (usize, usize)) -> Option<(usize, usize)> {
        (c > 0 && self.contains(r, c - 1)).then(|| (r, c - 1))
    }

    pub fn below(&self, (r, c): (usize, usize)) -> Option<(usize, usize)> {
        self.contains(r + 1, c).then(|| (r + 1, c))
    }

    pub fn right(&self, (r, c): (usize, usize)) -> Option<(usize, usize)> {
        self.contains(r, c + 1).then(|| (r, c + 1))
    }

    /// Row lengths, top to bottom.
    pub fn row_lengths(&self) -> Vec<usize> {
        (0..self.num_rows()).map(|r| self.row_len(r)).collect()
    }
}
