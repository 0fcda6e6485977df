//! The Hopcroft-Karp style exploration shared by HKC, HKP and their
//! threshold and similarity variants.

use std::collections::VecDeque;

use crate::automata::{abstraction, WeightedAutomaton};
use crate::congruence::{CongruenceClosure, FuelExhausted, HasCongruence, Mode, RewriteSystem};
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::semiring::{LMonoid, Semiring, TropicalNat};

use super::sim::{sim, SimilarityRelation};
use super::verdict::{Budget, Stats, Trail, Verdict};

/// The relation `R` together with its up-to closure.
trait UpTo<S> {
    fn contains(&mut self, v: &Vector<S>, w: &Vector<S>) -> Result<bool, FuelExhausted>;
    fn insert(&mut self, v: &Vector<S>, w: &Vector<S>);
    fn rewrite_steps(&self) -> u64;
}

struct Congruence<C>(C);

impl<S, C: CongruenceClosure<S>> UpTo<S> for Congruence<C> {
    fn contains(&mut self, v: &Vector<S>, w: &Vector<S>) -> Result<bool, FuelExhausted> {
        self.0.contains(v, w)
    }
    fn insert(&mut self, v: &Vector<S>, w: &Vector<S>) {
        self.0.insert(v, w)
    }
    fn rewrite_steps(&self) -> u64 {
        self.0.rewrite_steps()
    }
}

struct Precongruence<S>(RewriteSystem<S>);

impl<S: LMonoid> UpTo<S> for Precongruence<S> {
    fn contains(&mut self, v: &Vector<S>, w: &Vector<S>) -> Result<bool, FuelExhausted> {
        self.0.in_precongruence(v, w)
    }
    fn insert(&mut self, v: &Vector<S>, w: &Vector<S>) {
        self.0.add_pair(v, w)
    }
    fn rewrite_steps(&self) -> u64 {
        self.0.steps()
    }
}

fn check_operands<S: Semiring>(aut: &WeightedAutomaton<S>, vectors: &[&Vector<S>]) -> Result<()> {
    for v in vectors {
        if v.dim() != aut.states() {
            return Err(Error::DimensionMismatch {
                expected: aut.states(),
                found: v.dim(),
            });
        }
    }
    Ok(())
}

/// The main loop: FIFO `todo`, closure check at extraction, output check,
/// successor generation, then insertion into `R`.
fn explore<S: Semiring>(
    aut: &WeightedAutomaton<S>,
    v1: &Vector<S>,
    v2: &Vector<S>,
    budget: Budget,
    closure: &mut impl UpTo<S>,
    outputs_ok: impl Fn(&S, &S) -> bool,
    successor_right: impl Fn(Vector<S>) -> Vector<S>,
) -> Verdict {
    let mut trail = Trail::default();
    let mut todo = VecDeque::from([(v1.clone(), v2.clone(), Trail::ROOT)]);
    let mut stats = Stats::default();

    while let Some((a, b, node)) = todo.pop_front() {
        if stats.pairs_processed == budget.pairs {
            stats.rewrite_steps = closure.rewrite_steps();
            return Verdict::exhausted(stats);
        }
        stats.pairs_processed += 1;
        match closure.contains(&a, &b) {
            Ok(true) => continue,
            Ok(false) => {}
            Err(FuelExhausted) => {
                stats.rewrite_steps = closure.rewrite_steps();
                return Verdict::exhausted(stats);
            }
        }
        if !outputs_ok(&aut.output(&a), &aut.output(&b)) {
            stats.rewrite_steps = closure.rewrite_steps();
            return Verdict::refuted(trail.word(node), stats);
        }
        for sym in 0..aut.alphabet().len() {
            let child = trail.extend(node, sym);
            todo.push_back((aut.step(sym, &a), successor_right(aut.step(sym, &b)), child));
        }
        closure.insert(&a, &b);
        stats.relation_size += 1;
    }
    stats.rewrite_steps = closure.rewrite_steps();
    Verdict::holds(stats)
}

/// HKC: language equivalence of `v1` and `v2` up to congruence.
pub fn hkc<S: HasCongruence>(
    aut: &WeightedAutomaton<S>,
    v1: &Vector<S>,
    v2: &Vector<S>,
    budget: Budget,
) -> Result<Verdict> {
    check_operands(aut, &[v1, v2])?;
    let mut closure = Congruence(S::congruence_closure(aut.states(), budget.rewrite_steps));
    Ok(explore(
        aut,
        v1,
        v2,
        budget,
        &mut closure,
        |x, y| x == y,
        |v| v,
    ))
}

fn directed_system<S: LMonoid>(
    dim: usize,
    budget: Budget,
    sim: Option<&SimilarityRelation>,
) -> RewriteSystem<S> {
    let mut rs = RewriteSystem::new(dim, Mode::Directed).with_fuel(budget.rewrite_steps);
    if let Some(sim) = sim {
        for (i, j) in sim.iter() {
            rs.add_pair(&Vector::unit(dim, i), &Vector::unit(dim, j));
        }
    }
    rs
}

/// HKP: language inclusion `⟦v1⟧ ⊑ ⟦v2⟧` up to precongruence.
pub fn hkp<S: LMonoid>(
    aut: &WeightedAutomaton<S>,
    v1: &Vector<S>,
    v2: &Vector<S>,
    budget: Budget,
) -> Result<Verdict> {
    check_operands(aut, &[v1, v2])?;
    let mut closure = Precongruence(directed_system(aut.states(), budget, None));
    Ok(explore(aut, v1, v2, budget, &mut closure, S::leq, |v| v))
}

/// HKP': HKP whose precongruence is additionally seeded with the
/// similarity pairs `(e_i, e_j)`.
pub fn hkp_prime<S: LMonoid>(
    aut: &WeightedAutomaton<S>,
    v1: &Vector<S>,
    v2: &Vector<S>,
    budget: Budget,
    sim: &SimilarityRelation,
) -> Result<Verdict> {
    check_operands(aut, &[v1, v2])?;
    if sim.states() != aut.states() {
        return Err(Error::DimensionMismatch {
            expected: aut.states(),
            found: sim.states(),
        });
    }
    let mut closure = Precongruence(directed_system(aut.states(), budget, Some(sim)));
    let mut verdict = explore(aut, v1, v2, budget, &mut closure, S::leq, |v| v);
    verdict.stats.sim_size = Some(sim.non_reflexive_len());
    Ok(verdict)
}

fn threshold_run(
    aut: &WeightedAutomaton<TropicalNat>,
    v: &Vector<TropicalNat>,
    threshold: u64,
    budget: Budget,
    with_sim: bool,
) -> Result<Verdict> {
    check_operands(aut, &[v])?;
    let (ext, et) = aut.extend_with_threshold_state(threshold);
    let lifted = v.extended(TropicalNat::INF);
    let similarity = with_sim.then(|| sim(&ext));
    let mut closure = Precongruence(directed_system(ext.states(), budget, similarity.as_ref()));
    let mut verdict = explore(
        &ext,
        &et,
        &lifted,
        budget,
        &mut closure,
        TropicalNat::leq,
        |w| abstraction(&w, threshold),
    );
    verdict.stats.sim_size = similarity.map(|s| s.non_reflexive_len());
    Ok(verdict)
}

/// HKP_A: does `⟦v⟧(w) ≤ threshold` hold for every word `w`?
///
/// Runs HKP on the automaton extended with a threshold state `t`, checking
/// `e_t` against `v` and abstracting the right-hand successors.
pub fn hkp_a(
    aut: &WeightedAutomaton<TropicalNat>,
    v: &Vector<TropicalNat>,
    threshold: u64,
    budget: Budget,
) -> Result<Verdict> {
    threshold_run(aut, v, threshold, budget, false)
}

/// HKP_A': HKP_A with the precongruence seeded by the similarity of the
/// extended automaton. The similarity computation is part of the run.
pub fn hkp_a_prime(
    aut: &WeightedAutomaton<TropicalNat>,
    v: &Vector<TropicalNat>,
    threshold: u64,
    budget: Budget,
) -> Result<Verdict> {
    threshold_run(aut, v, threshold, budget, true)
}
