//! Dense vectors and square matrices over a semiring.
//!
//! Shape mismatches between operands are programming errors and panic;
//! inputs coming from files or the command line are validated when they
//! are parsed.

use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};
use crate::semiring::{LMonoid, Semiring};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector<S>(Vec<S>);

impl<S: Semiring> Vector<S> {
    pub fn new(entries: Vec<S>) -> Self {
        assert!(!entries.is_empty(), "vectors must have positive dimension");
        Vector(entries)
    }

    pub fn zeros(dim: usize) -> Self {
        Vector::new(vec![S::zero(); dim])
    }

    /// The unit vector `e_index` (0-based).
    pub fn unit(dim: usize, index: usize) -> Self {
        assert!(
            index < dim,
            "unit index {index} out of range for dimension {dim}"
        );
        let mut entries = vec![S::zero(); dim];
        entries[index] = S::one();
        Vector(entries)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[S] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<S> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, S> {
        self.0.iter()
    }

    pub fn map(&self, f: impl FnMut(&S) -> S) -> Self {
        Vector(self.0.iter().map(f).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(S::is_zero)
    }

    /// Appends one entry, lifting the vector into a larger state space.
    pub fn extended(&self, entry: S) -> Self {
        let mut entries = self.0.clone();
        entries.push(entry);
        Vector(entries)
    }

    fn check_dim(&self, other: &Self) {
        assert_eq!(self.dim(), other.dim(), "vector dimension mismatch");
    }

    /// Pointwise semiring addition.
    pub fn combine(&self, other: &Self) -> Self {
        self.check_dim(other);
        Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.combine(b))
                .collect(),
        )
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map(|x| x.times(s))
    }

    /// `⊕_x o[x] · v[x]`, the row vector `self` applied to `v`.
    pub fn dot(&self, v: &Self) -> S {
        self.check_dim(v);
        self.0
            .iter()
            .zip(&v.0)
            .fold(S::zero(), |acc, (a, b)| acc.combine(&a.times(b)))
    }
}

impl<S: LMonoid> Vector<S> {
    /// Componentwise lattice order.
    pub fn leq(&self, other: &Self) -> bool {
        self.check_dim(other);
        self.0.iter().zip(&other.0).all(|(a, b)| a.leq(b))
    }

    /// `self → v`: the meet over all components of `self[i] → v[i]`.
    pub fn residuum(&self, v: &Self) -> S {
        self.check_dim(v);
        self.0
            .iter()
            .zip(&v.0)
            .fold(S::top(), |acc, (l, x)| acc.meet(&l.residuum(x)))
    }
}

impl<S> Index<usize> for Vector<S> {
    type Output = S;

    fn index(&self, index: usize) -> &S {
        &self.0[index]
    }
}

impl<'a, S> IntoIterator for &'a Vector<S> {
    type Item = &'a S;
    type IntoIter = std::slice::Iter<'a, S>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl<S: fmt::Display> fmt::Display for Vector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Square matrix; `entry(src, dst)` is the weight of the edge `src → dst`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<S> {
    dim: usize,
    entries: Vec<S>,
}

impl<S: Semiring> Matrix<S> {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim > 0, "matrices must have positive dimension");
        Matrix {
            dim,
            entries: vec![S::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, S::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::usage("matrices must have positive dimension"));
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Matrix { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, src: usize, dst: usize) -> &S {
        &self.entries[src * self.dim + dst]
    }

    pub fn set(&mut self, src: usize, dst: usize, value: S) {
        self.entries[src * self.dim + dst] = value;
    }

    pub fn row(&self, src: usize) -> &[S] {
        &self.entries[src * self.dim..(src + 1) * self.dim]
    }

    /// Successor-weight application: `result[y] = ⊕_x v[x] · M[x][y]`, so
    /// that the unit vector `e_x` maps to the outgoing weights of `x`.
    pub fn apply(&self, v: &Vector<S>) -> Vector<S> {
        assert_eq!(self.dim, v.dim(), "matrix/vector dimension mismatch");
        let mut out = vec![S::zero(); self.dim];
        for (x, vx) in v.iter().enumerate() {
            if vx.is_zero() {
                continue;
            }
            for (y, m) in self.row(x).iter().enumerate() {
                out[y] = out[y].combine(&vx.times(m));
            }
        }
        Vector(out)
    }

    /// Adds one state with no edges except `fill` on the diagonal.
    pub fn extended(&self, fill: S) -> Self {
        let dim = self.dim + 1;
        let mut m = Self::zeros(dim);
        for src in 0..self.dim {
            for dst in 0..self.dim {
                m.set(src, dst, self.entry(src, dst).clone());
            }
        }
        m.set(self.dim, self.dim, fill);
        m
    }
}
