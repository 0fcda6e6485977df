use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::semiring::LMonoid;

pub const DEFAULT_REWRITE_FUEL: u64 = 1_000_000;

/// Normal-form computation ran out of rewrite steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
#[error("rewrite fuel exhausted")]
pub struct FuelExhausted;

/// A rule `lhs ↦ rhs` with `lhs ⊑ rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule<S> {
    pub lhs: Vector<S>,
    pub rhs: Vector<S>,
}

impl<S: LMonoid> RewriteRule<S> {
    /// The multiplicand `lhs → v` used when the rule is applied to `v`.
    pub fn multiplicand(&self, v: &Vector<S>) -> S {
        self.lhs.residuum(v)
    }
}

/// Symmetric systems decide the congruence closure, directed systems the
/// precongruence closure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Symmetric,
    Directed,
}

/// Order in which rules are attempted while computing a normal form. All
/// strategies are fair: a rule that stays applicable is eventually applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Attempt every rule once per pass, in insertion order.
    RoundRobin,
    ReverseRoundRobin,
    /// Each pass visits the rules in a fresh pseudo-random permutation.
    RandomFair(u64),
    /// Always apply the applicable rule with the ⊑-greatest multiplicand.
    /// Over the tropical semiring this makes rewriting behave like
    /// Dijkstra's algorithm.
    Greedy,
}

/// One rewrite step: `v ⇝ v ⊔ rhs · (lhs → v)`, provided the result is
/// strictly above `v`.
pub fn rewrite_step<S: LMonoid>(v: &Vector<S>, rule: &RewriteRule<S>) -> Option<Vector<S>> {
    let m = rule.multiplicand(v);
    if m.is_zero() {
        return None;
    }
    let candidate = v.combine(&rule.rhs.scale(&m));
    (candidate != *v).then_some(candidate)
}

/// A rewriting system derived from a finite relation, with a memo of
/// previously computed normal forms.
#[derive(Clone, Debug)]
pub struct RewriteSystem<S> {
    dim: usize,
    mode: Mode,
    rules: Vec<RewriteRule<S>>,
    fuel: u64,
    strategy: Strategy,
    rng: ChaCha8Rng,
    cache: HashMap<Vector<S>, Vector<S>>,
    steps: u64,
}

impl<S: LMonoid> RewriteSystem<S> {
    pub fn new(dim: usize, mode: Mode) -> Self {
        RewriteSystem {
            dim,
            mode,
            rules: Vec::new(),
            fuel: DEFAULT_REWRITE_FUEL,
            strategy: Strategy::RoundRobin,
            rng: ChaCha8Rng::seed_from_u64(0),
            cache: HashMap::new(),
            steps: 0,
        }
    }

    /// Builds the rules for every pair of `relation`: `v ↦ v ⊔ v'` and
    /// `v' ↦ v ⊔ v'` in symmetric mode, only the latter in directed mode.
    pub fn from_relation(
        dim: usize,
        relation: &[(Vector<S>, Vector<S>)],
        mode: Mode,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::usage("rewrite systems need a positive dimension"));
        }
        let mut rs = Self::new(dim, mode);
        for (v, w) in relation {
            for x in [v, w] {
                if x.dim() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        found: x.dim(),
                    });
                }
            }
            rs.add_pair(v, w);
        }
        Ok(rs)
    }

    pub fn with_fuel(mut self, fuel: u64) -> Self {
        self.fuel = fuel;
        self
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.set_strategy(strategy);
        self
    }

    pub fn set_strategy(&mut self, strategy: Strategy) {
        if let Strategy::RandomFair(seed) = strategy {
            self.rng = ChaCha8Rng::seed_from_u64(seed);
        }
        self.strategy = strategy;
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn rules(&self) -> &[RewriteRule<S>] {
        &self.rules
    }

    /// Total rewrite steps performed over the lifetime of the system.
    pub fn steps(&self) -> u64 {
        self.steps
    }

    /// Adds the rules generated by the relation pair `(v, w)`.
    pub fn add_pair(&mut self, v: &Vector<S>, w: &Vector<S>) {
        let join = v.combine(w);
        if self.mode == Mode::Symmetric {
            self.add_rule(RewriteRule {
                lhs: v.clone(),
                rhs: join.clone(),
            });
        }
        self.add_rule(RewriteRule {
            lhs: w.clone(),
            rhs: join,
        });
    }

    /// Adds a raw rule. Rules with `lhs = rhs` never apply and are dropped.
    pub fn add_rule(&mut self, rule: RewriteRule<S>) {
        assert_eq!(rule.lhs.dim(), self.dim, "rule dimension mismatch");
        assert_eq!(rule.rhs.dim(), self.dim, "rule dimension mismatch");
        if rule.lhs == rule.rhs {
            return;
        }
        self.rules.push(rule);
        self.cache.clear();
    }

    /// The normal form `⇓v`.
    pub fn normal_form(&mut self, v: &Vector<S>) -> Result<Vector<S>, FuelExhausted> {
        if let Some(nf) = self.cache.get(v) {
            return Ok(nf.clone());
        }
        let nf = match self.strategy {
            Strategy::Greedy => self.normalize_greedy(v)?,
            _ => self.normalize_passes(v)?,
        };
        self.cache.insert(v.clone(), nf.clone());
        Ok(nf)
    }

    fn normalize_passes(&mut self, v: &Vector<S>) -> Result<Vector<S>, FuelExhausted> {
        let mut order: Vec<usize> = (0..self.rules.len()).collect();
        if self.strategy == Strategy::ReverseRoundRobin {
            order.reverse();
        }
        let mut current = v.clone();
        let mut used = 0u64;
        loop {
            if let Strategy::RandomFair(_) = self.strategy {
                order.shuffle(&mut self.rng);
            }
            let mut applied = false;
            for &i in &order {
                if let Some(next) = rewrite_step(&current, &self.rules[i]) {
                    used += 1;
                    self.steps += 1;
                    if used > self.fuel {
                        return Err(FuelExhausted);
                    }
                    current = next;
                    applied = true;
                }
            }
            if !applied {
                return Ok(current);
            }
        }
    }

    fn normalize_greedy(&mut self, v: &Vector<S>) -> Result<Vector<S>, FuelExhausted> {
        let mut current = v.clone();
        let mut used = 0u64;
        loop {
            let mut best: Option<(S, Vector<S>)> = None;
            for rule in &self.rules {
                let Some(next) = rewrite_step(&current, rule) else {
                    continue;
                };
                let m = rule.multiplicand(&current);
                if best.as_ref().is_none_or(|(b, _)| b.leq(&m) && *b != m) {
                    best = Some((m, next));
                }
            }
            let Some((_, next)) = best else {
                return Ok(current);
            };
            used += 1;
            self.steps += 1;
            if used > self.fuel {
                return Err(FuelExhausted);
            }
            current = next;
        }
    }

    /// `(v, w) ∈ c(R)` iff both vectors have the same normal form.
    pub fn in_congruence(&mut self, v: &Vector<S>, w: &Vector<S>) -> Result<bool, FuelExhausted> {
        debug_assert_eq!(self.mode, Mode::Symmetric);
        if v == w {
            return Ok(true);
        }
        Ok(self.normal_form(v)? == self.normal_form(w)?)
    }

    /// `(v, w) ∈ p(R)` iff `v ⊑ ⇓w`.
    pub fn in_precongruence(
        &mut self,
        v: &Vector<S>,
        w: &Vector<S>,
    ) -> Result<bool, FuelExhausted> {
        debug_assert_eq!(self.mode, Mode::Directed);
        if v.leq(w) {
            return Ok(true);
        }
        Ok(v.leq(&self.normal_form(w)?))
    }
}
