//! Up-to congruence techniques for weighted automata over semirings.
//!
//! The crate decides language equivalence (HKC), language inclusion (HKP,
//! HKP') and the threshold problem over the tropical semiring (HKP_A,
//! HKP_A', ABK) by exploring pairs of vectors and pruning every pair that
//! already lies in the (pre)congruence closure of the pairs seen so far.
//! Closure membership is decided by rewriting to normal form over
//! l-monoids and by span membership over the rational field.
//!
//! ```
//! use upto_core::algorithms::{hkp_a, Budget};
//! use upto_core::bench::exp_family;
//!
//! let (aut, init) = exp_family(3);
//! let verdict = hkp_a(&aut, &init, 3, Budget::default()).unwrap();
//! assert!(verdict.is_false());
//! assert_eq!(verdict.witness.unwrap().len(), 4);
//! ```

pub mod algorithms;
pub mod automata;
pub mod bench;
pub mod congruence;
pub mod error;
pub mod format;
pub mod linalg;
pub mod semiring;
pub mod spath;

pub use error::{Error, Result};
pub use linalg::{Matrix, Vector};
pub use semiring::{
    Boolean, LMonoid, MaxTimes, Rational, Semiring, SemiringId, TropicalNat, TropicalReal,
};
