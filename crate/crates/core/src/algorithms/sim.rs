use std::collections::BTreeSet;

use crate::automata::WeightedAutomaton;
use crate::linalg::Vector;
use crate::semiring::LMonoid;

/// A relation on unit vectors; `(i, j)` means `e_i ⪯ e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimilarityRelation {
    states: usize,
    pairs: BTreeSet<(usize, usize)>,
}

impl SimilarityRelation {
    pub fn reflexive(states: usize) -> Self {
        SimilarityRelation {
            states,
            pairs: (0..states).map(|i| (i, i)).collect(),
        }
    }

    pub fn states(&self) -> usize {
        self.states
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.pairs.contains(&(i, j))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn non_reflexive_len(&self) -> usize {
        self.pairs.iter().filter(|(i, j)| i != j).count()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    /// `u = ⨆{e_i · (e_k → target) | (i, k) ∈ R}`.
    fn upper_bound<S: LMonoid>(&self, target: &Vector<S>) -> Vector<S> {
        let mut u: Vec<S> = vec![S::zero(); self.states];
        for &(i, k) in &self.pairs {
            let scale = Vector::<S>::unit(self.states, k).residuum(target);
            u[i] = u[i].combine(&scale);
        }
        Vector::new(u)
    }

    /// Clause (ii) for the pair `(i, j)` and letter `sym`: `t_a(e_i) ⊑ u`.
    fn step_simulated<S: LMonoid>(
        &self,
        aut: &WeightedAutomaton<S>,
        sym: usize,
        i: usize,
        j: usize,
    ) -> bool {
        let u = self.upper_bound(&aut.step(sym, &Vector::unit(self.states, j)));
        aut.step(sym, &Vector::unit(self.states, i)).leq(&u)
    }

    /// Whether `(i, j)` satisfies both simulation clauses relative to `self`.
    pub fn pair_is_simulated<S: LMonoid>(
        &self,
        aut: &WeightedAutomaton<S>,
        i: usize,
        j: usize,
    ) -> bool {
        let n = self.states;
        aut.output(&Vector::unit(n, i))
            .leq(&aut.output(&Vector::unit(n, j)))
            && (0..aut.alphabet().len()).all(|a| self.step_simulated(aut, a, i, j))
    }

    /// Whether every pair of the relation satisfies the simulation clauses.
    pub fn is_simulation<S: LMonoid>(&self, aut: &WeightedAutomaton<S>) -> bool {
        self.states == aut.states() && self.iter().all(|(i, j)| self.pair_is_simulated(aut, i, j))
    }
}

/// SIM: the greatest simulation relation on unit vectors.
///
/// Starts from all pairs of unit vectors, removes pairs whose outputs are
/// not ordered, then removes pairs violating the transition clause until
/// a fixpoint is reached.
pub fn sim<S: LMonoid>(aut: &WeightedAutomaton<S>) -> SimilarityRelation {
    let n = aut.states();
    let outputs: Vec<S> = (0..n).map(|i| aut.output(&Vector::unit(n, i))).collect();
    let mut rel = SimilarityRelation {
        states: n,
        pairs: (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| outputs[i].leq(&outputs[j]))
            .collect(),
    };
    let units: Vec<Vector<S>> = (0..n).map(|i| Vector::unit(n, i)).collect();
    loop {
        let before = rel.pairs.len();
        for a in 0..aut.alphabet().len() {
            let succ: Vec<Vector<S>> = units.iter().map(|e| aut.step(a, e)).collect();
            for j in 0..n {
                let candidates: Vec<usize> = (0..n).filter(|&i| rel.contains(i, j)).collect();
                if candidates.is_empty() {
                    continue;
                }
                let u = rel.upper_bound(&succ[j]);
                for i in candidates {
                    if !succ[i].leq(&u) {
                        rel.pairs.remove(&(i, j));
                    }
                }
            }
        }
        if rel.pairs.len() == before {
            return rel;
        }
    }
}
