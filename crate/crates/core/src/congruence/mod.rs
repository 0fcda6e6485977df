//! Deciding membership in the congruence closure `c(R)` and the
//! precongruence closure `p(R)` of a finite relation `R` of vectors.
//!
//! Over l-monoids both closures are decided by rewriting to normal form
//! ([`RewriteSystem`]); over the rational field the congruence closure is
//! decided by span membership of differences ([`Generators`]).

mod rewrite;
mod ring;

pub use rewrite::{
    rewrite_step, FuelExhausted, Mode, RewriteRule, RewriteSystem, Strategy, DEFAULT_REWRITE_FUEL,
};
pub use ring::{in_congruence_ring, span_member, Generators};

use crate::linalg::Vector;
use crate::semiring::{Boolean, MaxTimes, Rational, Semiring, TropicalNat, TropicalReal};

/// An incrementally grown relation `R` that can answer `(v, w) ∈ c(R)`.
pub trait CongruenceClosure<S> {
    fn contains(&mut self, v: &Vector<S>, w: &Vector<S>) -> Result<bool, FuelExhausted>;
    fn insert(&mut self, v: &Vector<S>, w: &Vector<S>);
    /// Rewrite steps spent so far (zero for non-rewriting procedures).
    fn rewrite_steps(&self) -> u64 {
        0
    }
}

impl<S: crate::semiring::LMonoid> CongruenceClosure<S> for RewriteSystem<S> {
    fn contains(&mut self, v: &Vector<S>, w: &Vector<S>) -> Result<bool, FuelExhausted> {
        self.in_congruence(v, w)
    }

    fn insert(&mut self, v: &Vector<S>, w: &Vector<S>) {
        self.add_pair(v, w);
    }

    fn rewrite_steps(&self) -> u64 {
        self.steps()
    }
}

/// Congruence closure over `ℚ` as the span of pair differences.
#[derive(Clone, Debug)]
pub struct RingCongruence(Generators);

impl RingCongruence {
    pub fn new(dim: usize) -> Self {
        RingCongruence(Generators::new(dim))
    }
}

impl CongruenceClosure<Rational> for RingCongruence {
    fn contains(
        &mut self,
        v: &Vector<Rational>,
        w: &Vector<Rational>,
    ) -> Result<bool, FuelExhausted> {
        Ok(self.0.contains(&ring::difference(v, w)))
    }

    fn insert(&mut self, v: &Vector<Rational>, w: &Vector<Rational>) {
        self.0.insert(&ring::difference(v, w));
    }
}

/// Semirings with a congruence-closure procedure.
pub trait HasCongruence: Semiring {
    type Closure: CongruenceClosure<Self>;

    fn congruence_closure(dim: usize, rewrite_fuel: u64) -> Self::Closure;
}

macro_rules! rewriting_congruence {
    ($($ty:ty),*) => {$(
        impl HasCongruence for $ty {
            type Closure = RewriteSystem<$ty>;

            fn congruence_closure(dim: usize, rewrite_fuel: u64) -> Self::Closure {
                RewriteSystem::new(dim, Mode::Symmetric).with_fuel(rewrite_fuel)
            }
        }
    )*};
}

rewriting_congruence!(Boolean, TropicalNat, TropicalReal, MaxTimes);

impl HasCongruence for Rational {
    type Closure = RingCongruence;

    fn congruence_closure(dim: usize, _rewrite_fuel: u64) -> Self::Closure {
        RingCongruence::new(dim)
    }
}
