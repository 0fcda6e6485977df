//! Samplers and independent oracles shared by the integration tests.
#![allow(dead_code)]

pub mod laws;

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap, HashMap, HashSet, VecDeque};
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use upto_core::automata::WeightedAutomaton;
use upto_core::{Boolean, Matrix, MaxTimes, Rational, Semiring, TropicalNat, TropicalReal, Vector};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random scalars for fuzzing, both as a seeded draw and as a proptest
/// strategy.
pub trait Sample: Semiring + Sized {
    fn sample(rng: &mut ChaCha8Rng) -> Self;
    fn strategy() -> BoxedStrategy<Self>;
}

impl Sample for Boolean {
    fn sample(rng: &mut ChaCha8Rng) -> Self {
        Boolean(rng.random_bool(0.5))
    }
    fn strategy() -> BoxedStrategy<Self> {
        any::<bool>().prop_map(Boolean).boxed()
    }
}

impl Sample for TropicalNat {
    fn sample(rng: &mut ChaCha8Rng) -> Self {
        if rng.random_ratio(1, 5) {
            TropicalNat::INF
        } else {
            TropicalNat::fin(rng.random_range(0..=30))
        }
    }
    fn strategy() -> BoxedStrategy<Self> {
        prop_oneof![1 => Just(TropicalNat::INF), 4 => (0u64..=30).prop_map(TropicalNat::fin)]
            .boxed()
    }
}

impl Sample for TropicalReal {
    fn sample(rng: &mut ChaCha8Rng) -> Self {
        if rng.random_ratio(1, 5) {
            TropicalReal::Infinity
        } else {
            TropicalReal::ratio(rng.random_range(0..=40), rng.random_range(1..=6))
        }
    }
    fn strategy() -> BoxedStrategy<Self> {
        prop_oneof![
            1 => Just(TropicalReal::Infinity),
            4 => (0i64..=40, 1i64..=6).prop_map(|(p, q)| TropicalReal::ratio(p, q)),
        ]
        .boxed()
    }
}

impl Sample for MaxTimes {
    fn sample(rng: &mut ChaCha8Rng) -> Self {
        let q = rng.random_range(1..=8);
        MaxTimes::ratio(rng.random_range(0..=q), q)
    }
    fn strategy() -> BoxedStrategy<Self> {
        (1i64..=8)
            .prop_flat_map(|q| (0..=q).prop_map(move |p| MaxTimes::ratio(p, q)))
            .boxed()
    }
}

impl Sample for Rational {
    fn sample(rng: &mut ChaCha8Rng) -> Self {
        Rational::ratio(rng.random_range(-12..=12), rng.random_range(1..=5))
    }
    fn strategy() -> BoxedStrategy<Self> {
        (-12i64..=12, 1i64..=5)
            .prop_map(|(p, q)| Rational::ratio(p, q))
            .boxed()
    }
}

pub fn sample_vector<S: Sample>(rng: &mut ChaCha8Rng, dim: usize) -> Vector<S> {
    Vector::new((0..dim).map(|_| S::sample(rng)).collect())
}

pub fn vector_strategy<S: Sample>(dim: usize) -> impl Strategy<Value = Vector<S>> {
    proptest::collection::vec(S::strategy(), dim).prop_map(Vector::new)
}

pub fn sample_matrix<S: Sample>(rng: &mut ChaCha8Rng, dim: usize) -> Matrix<S> {
    let mut m = Matrix::zeros(dim);
    for src in 0..dim {
        for dst in 0..dim {
            m.set(src, dst, S::sample(rng));
        }
    }
    m
}

/// A random automaton whose entries are zero with probability `sparsity`.
pub fn sample_automaton<S: Sample>(
    rng: &mut ChaCha8Rng,
    states: usize,
    letters: RangeInclusive<usize>,
    sparsity: f64,
) -> WeightedAutomaton<S> {
    let letters = rng.random_range(letters);
    let entry = |rng: &mut ChaCha8Rng| {
        if rng.random_bool(sparsity) {
            S::zero()
        } else {
            S::sample(rng)
        }
    };
    let trans = (0..letters)
        .map(|_| {
            let mut m = Matrix::zeros(states);
            for src in 0..states {
                for dst in 0..states {
                    m.set(src, dst, entry(rng));
                }
            }
            m
        })
        .collect();
    let output = Vector::new((0..states).map(|_| entry(rng)).collect());
    let alphabet = (0..letters)
        .map(|i| char::from(b'a' + i as u8).to_string())
        .collect();
    WeightedAutomaton::new(alphabet, output, trans).unwrap()
}

/// All words over `letters` symbols of length at most `max_len`.
pub fn words(letters: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<usize>| {
                (0..letters).map(move |a| {
                    let mut w = w.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

// ---------------------------------------------------------------------------
// Plain tropical numbers: `None` is ∞.

pub type Dist = Option<u64>;

pub fn tn(x: &TropicalNat) -> Dist {
    x.finite()
}

pub fn add(a: Dist, b: Dist) -> Dist {
    Some(a? + b?)
}

pub fn min(a: Dist, b: Dist) -> Dist {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Dijkstra over nonnegative weights; `weights[i][j]` is the arc `i → j`.
pub fn dijkstra(weights: &[Vec<Dist>], source: usize) -> Vec<Dist> {
    let n = weights.len();
    let mut dist: Vec<Dist> = vec![None; n];
    let mut heap = BinaryHeap::from([Reverse((0u64, source))]);
    while let Some(Reverse((d, u))) = heap.pop() {
        if dist[u].is_some() {
            continue;
        }
        dist[u] = Some(d);
        for (v, w) in weights[u].iter().enumerate() {
            if let (Some(w), None) = (w, dist[v]) {
                heap.push(Reverse((d + w, v)));
            }
        }
    }
    dist
}

/// Decides `⟦v⟧(w) ≤ T` for all words by exploring capped weight vectors,
/// where every entry above `T` collapses to ∞. Returns a shortest
/// violating word.
pub fn threshold_oracle(
    aut: &WeightedAutomaton<TropicalNat>,
    v: &Vector<TropicalNat>,
    t: u64,
) -> Option<Vec<usize>> {
    let n = aut.states();
    let cap = |x: Dist| x.filter(|&x| x <= t);
    let start: Vec<Dist> = v.iter().map(tn).map(cap).collect();
    let out: Vec<Dist> = aut.output_vector().iter().map(tn).collect();
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([(start, vec![])]);
    while let Some((cur, word)) = queue.pop_front() {
        let weight = (0..n).fold(None, |acc, x| min(acc, add(cur[x], out[x])));
        if !matches!(weight, Some(w) if w <= t) {
            return Some(word);
        }
        for a in 0..aut.alphabet().len() {
            let m = aut.transition(a);
            let next: Vec<Dist> = (0..n)
                .map(|y| cap((0..n).fold(None, |acc, x| min(acc, add(cur[x], tn(m.entry(x, y)))))))
                .collect();
            if seen.insert(next.clone()) {
                let mut w = word.clone();
                w.push(a);
                queue.push_back((next, w));
            }
        }
    }
    None
}

/// Greatest simulation over the tropical naturals, computed directly on
/// numbers: `(i, j)` survives iff `o_i ≥ o_j` and, for every letter, each
/// `t_a(e_i)[k]` is at least `min{t_a(e_j)[l] | (k, l) kept}`.
pub fn tropical_similarity(aut: &WeightedAutomaton<TropicalNat>) -> BTreeSet<(usize, usize)> {
    let n = aut.states();
    let ge = |a: Dist, b: Dist| match (a, b) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some(x), Some(y)) => x >= y,
    };
    let o: Vec<Dist> = aut.output_vector().iter().map(tn).collect();
    let mut rel: BTreeSet<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| ge(o[i], o[j]))
        .collect();
    loop {
        let keep: BTreeSet<(usize, usize)> = rel
            .iter()
            .copied()
            .filter(|&(i, j)| {
                (0..aut.alphabet().len()).all(|a| {
                    let m = aut.transition(a);
                    (0..n).all(|k| {
                        let bound = rel
                            .iter()
                            .filter(|&&(k2, _)| k2 == k)
                            .fold(None, |acc, &(_, l)| min(acc, tn(m.entry(j, l))));
                        ge(tn(m.entry(i, k)), bound)
                    })
                })
            })
            .collect();
        if keep == rel {
            return rel;
        }
        rel = keep;
    }
}

// ---------------------------------------------------------------------------
// Boolean oracles on bitmask vectors.

pub fn to_mask(v: &Vector<Boolean>) -> u32 {
    v.iter()
        .enumerate()
        .fold(0, |m, (i, b)| if b.0 { m | 1 << i } else { m })
}

pub fn from_mask(mask: u32, dim: usize) -> Vector<Boolean> {
    Vector::new((0..dim).map(|i| Boolean(mask >> i & 1 == 1)).collect())
}

/// The congruence closure of `relation` on `{0,1}^dim`, saturated under
/// reflexivity, symmetry, transitivity and joins.
pub fn boolean_saturation(dim: usize, relation: &[(u32, u32)]) -> HashSet<(u32, u32)> {
    let all = 1u32 << dim;
    let mut c: HashSet<(u32, u32)> = (0..all).map(|v| (v, v)).collect();
    for &(v, w) in relation {
        c.insert((v, w));
        c.insert((w, v));
    }
    loop {
        let pairs: Vec<(u32, u32)> = c.iter().copied().collect();
        let mut next = c.clone();
        for &(a, b) in &pairs {
            for &(x, y) in &pairs {
                next.insert((a | x, b | y));
                if b == x {
                    next.insert((a, y));
                }
            }
        }
        if next.len() == c.len() {
            return c;
        }
        c = next;
    }
}

/// Boolean language equivalence by breadth-first exploration of the
/// determinised pair graph. Returns a shortest distinguishing word.
pub fn boolean_distinguishing_word(
    aut: &WeightedAutomaton<Boolean>,
    v1: u32,
    v2: u32,
) -> Option<Vec<usize>> {
    boolean_pair_search(aut, v1, v2, |a, b| a != b)
}

/// A shortest word accepted from `v1` but not from `v2`.
pub fn boolean_inclusion_counterexample(
    aut: &WeightedAutomaton<Boolean>,
    v1: u32,
    v2: u32,
) -> Option<Vec<usize>> {
    boolean_pair_search(aut, v1, v2, |a, b| a && !b)
}

fn boolean_pair_search(
    aut: &WeightedAutomaton<Boolean>,
    v1: u32,
    v2: u32,
    bad: impl Fn(bool, bool) -> bool,
) -> Option<Vec<usize>> {
    let n = aut.states();
    let out = to_mask(aut.output_vector());
    let succ: Vec<Vec<u32>> = (0..aut.alphabet().len())
        .map(|a| {
            (0..n)
                .map(|x| {
                    (0..n).fold(0, |m, y| {
                        if aut.transition(a).entry(x, y).0 {
                            m | 1 << y
                        } else {
                            m
                        }
                    })
                })
                .collect()
        })
        .collect();
    let step = |a: usize, s: u32| {
        (0..n)
            .filter(|x| s >> x & 1 == 1)
            .fold(0, |m, x| m | succ[a][x])
    };
    let mut seen = HashSet::from([(v1, v2)]);
    let mut queue = VecDeque::from([(v1, v2, vec![])]);
    while let Some((s1, s2, word)) = queue.pop_front() {
        if bad(s1 & out != 0, s2 & out != 0) {
            return Some(word);
        }
        for a in 0..aut.alphabet().len() {
            let next = (step(a, s1), step(a, s2));
            if seen.insert(next) {
                let mut w = word.clone();
                w.push(a);
                queue.push_back((next.0, next.1, w));
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Rational field: exact language equivalence by linear algebra.

fn q(r: &Rational) -> BigRational {
    r.0.clone()
}

/// Reduces `u` against an echelon basis keyed by pivot column.
fn reduce(basis: &HashMap<usize, Vec<BigRational>>, mut u: Vec<BigRational>) -> Vec<BigRational> {
    for col in 0..u.len() {
        if u[col].is_zero() {
            continue;
        }
        if let Some(row) = basis.get(&col) {
            let f = u[col].clone();
            for (x, r) in u.iter_mut().zip(row) {
                *x -= &f * r;
            }
        }
    }
    u
}

/// `⟦v1⟧ = ⟦v2⟧` iff the forward-reachable space of `v1 - v2` lies in the
/// kernel of the output functional.
pub fn rational_equivalent(
    aut: &WeightedAutomaton<Rational>,
    v1: &Vector<Rational>,
    v2: &Vector<Rational>,
) -> bool {
    let n = aut.states();
    let o: Vec<BigRational> = aut.output_vector().iter().map(q).collect();
    let diff: Vec<BigRational> = v1.iter().zip(v2.iter()).map(|(a, b)| q(a) - q(b)).collect();
    let mut basis: HashMap<usize, Vec<BigRational>> = HashMap::new();
    let mut queue = VecDeque::from([diff]);
    while let Some(u) = queue.pop_front() {
        let r = reduce(&basis, u.clone());
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        let inv = BigRational::one() / &r[p];
        let row: Vec<BigRational> = r.iter().map(|x| x * &inv).collect();
        for other in basis.values_mut() {
            let f = other[p].clone();
            if !f.is_zero() {
                for (x, y) in other.iter_mut().zip(&row) {
                    *x -= &f * y;
                }
            }
        }
        basis.insert(p, row);
        let weight: BigRational = u.iter().zip(&o).map(|(a, b)| a * b).sum();
        if !weight.is_zero() {
            return false;
        }
        for a in 0..aut.alphabet().len() {
            let m = aut.transition(a);
            let next = (0..n)
                .map(|y| (0..n).map(|x| &u[x] * q(m.entry(x, y))).sum())
                .collect();
            queue.push_back(next);
        }
    }
    true
}

pub fn big(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rank of a family of rational vectors by Gauss-Jordan elimination.
pub fn rational_rank(vectors: &[Vec<BigRational>]) -> usize {
    let mut basis: HashMap<usize, Vec<BigRational>> = HashMap::new();
    for v in vectors {
        let r = reduce(&basis, v.clone());
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        let inv = BigRational::one() / &r[p];
        let row: Vec<BigRational> = r.iter().map(|x| x * &inv).collect();
        for other in basis.values_mut() {
            let f = other[p].clone();
            if !f.is_zero() {
                for (x, y) in other.iter_mut().zip(&row) {
                    *x -= &f * y;
                }
            }
        }
        basis.insert(p, row);
    }
    basis.len()
}

pub fn rational_entries(v: &Vector<Rational>) -> Vec<BigRational> {
    v.iter().map(q).collect()
}
