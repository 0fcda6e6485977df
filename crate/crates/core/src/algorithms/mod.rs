//! Decision procedures for weighted automata: HKC (equivalence), HKP and
//! HKP' (inclusion), HKP_A and HKP_A' (threshold), SIM (similarity) and the
//! ABK baseline.

mod abk;
mod hk;
mod sim;
mod verdict;

pub use abk::abk;
pub use hk::{hkc, hkp, hkp_a, hkp_a_prime, hkp_prime};
pub use sim::{sim, SimilarityRelation};
pub use verdict::{Answer, Budget, Stats, Verdict, DEFAULT_PAIR_FUEL};
