use std::collections::{HashSet, VecDeque};

use crate::automata::{abstraction, WeightedAutomaton};
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::semiring::TropicalNat;

use super::verdict::{Budget, Stats, Trail, Verdict};

/// ABK: the threshold check by plain exploration of abstracted vectors,
/// without any up-to technique. `relation_size` reports `|P|`.
pub fn abk(
    aut: &WeightedAutomaton<TropicalNat>,
    v0: &Vector<TropicalNat>,
    threshold: u64,
    budget: Budget,
) -> Result<Verdict> {
    if v0.dim() != aut.states() {
        return Err(Error::DimensionMismatch {
            expected: aut.states(),
            found: v0.dim(),
        });
    }
    let mut trail = Trail::default();
    let mut todo = VecDeque::from([(v0.clone(), Trail::ROOT)]);
    let mut seen: HashSet<Vector<TropicalNat>> = HashSet::new();
    let mut stats = Stats::default();

    while let Some((v, node)) = todo.pop_front() {
        if stats.pairs_processed == budget.pairs {
            stats.relation_size = seen.len();
            return Ok(Verdict::exhausted(stats));
        }
        stats.pairs_processed += 1;
        if seen.contains(&v) {
            continue;
        }
        let within = matches!(aut.output(&v), TropicalNat::Finite(x) if x <= threshold);
        if !within {
            stats.relation_size = seen.len();
            return Ok(Verdict::refuted(trail.word(node), stats));
        }
        for sym in 0..aut.alphabet().len() {
            let child = trail.extend(node, sym);
            todo.push_back((abstraction(&aut.step(sym, &v), threshold), child));
        }
        seen.insert(v);
    }
    stats.relation_size = seen.len();
    Ok(Verdict::holds(stats))
}
