use num_rational::BigRational;
use num_traits::Zero;

use crate::linalg::Vector;
use crate::semiring::Rational;

/// An incrementally maintained echelon basis of a subspace of `ℚⁿ`.
///
/// Every stored row has a leading 1 at its pivot column, and that column is
/// zero in every row inserted later, so reducing against the rows in
/// insertion order eliminates each pivot exactly once.
#[derive(Clone, Debug, Default)]
pub struct Generators {
    dim: usize,
    rows: Vec<(usize, Vec<BigRational>)>,
}

impl Generators {
    pub fn new(dim: usize) -> Self {
        Generators {
            dim,
            rows: Vec::new(),
        }
    }

    pub fn from_vectors<'a>(
        dim: usize,
        vectors: impl IntoIterator<Item = &'a Vector<Rational>>,
    ) -> Self {
        let mut gens = Self::new(dim);
        for v in vectors {
            gens.insert(v);
        }
        gens
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &Vector<Rational>) -> Vec<BigRational> {
        assert_eq!(v.dim(), self.dim, "vector dimension mismatch");
        let mut residual: Vec<BigRational> = v.iter().map(|x| x.0.clone()).collect();
        for (pivot, row) in &self.rows {
            let factor = residual[*pivot].clone();
            if factor.is_zero() {
                continue;
            }
            for (r, x) in residual.iter_mut().zip(row) {
                if !x.is_zero() {
                    *r -= &factor * x;
                }
            }
        }
        residual
    }

    /// Adds `v` to the generating set. Returns `false` if it was already
    /// in the span.
    pub fn insert(&mut self, v: &Vector<Rational>) -> bool {
        let mut residual = self.reduce(v);
        let Some(pivot) = residual.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = residual[pivot].clone();
        for x in residual.iter_mut() {
            *x /= &lead;
        }
        self.rows.push((pivot, residual));
        true
    }

    pub fn contains(&self, u: &Vector<Rational>) -> bool {
        self.reduce(u).iter().all(Zero::is_zero)
    }
}

/// Whether `u` lies in the linear span of `gens`.
pub fn span_member(u: &Vector<Rational>, gens: &Generators) -> bool {
    gens.contains(u)
}

pub(crate) fn difference(v: &Vector<Rational>, w: &Vector<Rational>) -> Vector<Rational> {
    Vector::new(v.iter().zip(w).map(|(a, b)| a.sub(b)).collect())
}

/// `(v, w) ∈ c(R)` over the rational field: `v − w` lies in the span of
/// the differences `u − u'` of the pairs in `relation`.
pub fn in_congruence_ring(
    v: &Vector<Rational>,
    w: &Vector<Rational>,
    relation: &[(Vector<Rational>, Vector<Rational>)],
) -> bool {
    let diffs: Vec<_> = relation.iter().map(|(a, b)| difference(a, b)).collect();
    span_member(
        &difference(v, w),
        &Generators::from_vectors(v.dim(), &diffs),
    )
}
