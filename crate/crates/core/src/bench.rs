//! Random instance generation, the exponential family and a benchmark
//! harness comparing the threshold algorithms.
//!
//! All randomness comes from ChaCha8 (`rand_chacha`) seeded with
//! `seed_from_u64`, which is stable across platforms and releases. Per
//! instance seeds are derived from the run seed with the SplitMix64
//! finalizer.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algorithms::{abk, hkp_a, hkp_a_prime, Answer, Budget, Verdict};
use crate::automata::WeightedAutomaton;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::semiring::{Semiring, TropicalNat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenParams {
    pub n_states: usize,
    pub threshold: u64,
    /// Probability `(numerator, denominator)` that an edge is finite.
    pub edge_prob: (u32, u32),
    pub weight_range: RangeInclusive<u64>,
    pub alphabet_range: RangeInclusive<usize>,
    pub seed: u64,
}

impl GenParams {
    pub fn new(n_states: usize, threshold: u64, seed: u64) -> Self {
        GenParams {
            n_states,
            threshold,
            edge_prob: (9, 10),
            weight_range: 0..=10,
            alphabet_range: 1..=5,
            seed,
        }
    }

    fn validate(&self) -> Result<()> {
        let (num, den) = self.edge_prob;
        if self.n_states == 0 {
            return Err(Error::usage("n_states must be positive"));
        }
        if den == 0 || num > den {
            return Err(Error::usage("edge_prob must lie in [0, 1]"));
        }
        if self.weight_range.is_empty()
            || self.alphabet_range.is_empty()
            || *self.alphabet_range.start() == 0
        {
            return Err(Error::usage("generator ranges must be nonempty"));
        }
        Ok(())
    }
}

/// A random tropical automaton together with its initial vector `e_1`.
///
/// The alphabet size is uniform in `alphabet_range`; every transition
/// `(src, symbol, dst)` and every output is independently finite with
/// probability `edge_prob`, with a weight uniform in `weight_range`.
pub fn gen_random(p: &GenParams) -> Result<(WeightedAutomaton<TropicalNat>, Vector<TropicalNat>)> {
    p.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let n = p.n_states;
    let (num, den) = p.edge_prob;
    let weight = |rng: &mut ChaCha8Rng| {
        if rng.random_ratio(num, den) {
            TropicalNat::fin(rng.random_range(p.weight_range.clone()))
        } else {
            TropicalNat::INF
        }
    };
    let k = rng.random_range(p.alphabet_range.clone());
    let mut trans = Vec::with_capacity(k);
    for _ in 0..k {
        let mut m = Matrix::zeros(n);
        for src in 0..n {
            for dst in 0..n {
                m.set(src, dst, weight(&mut rng));
            }
        }
        trans.push(m);
    }
    let output = Vector::new((0..n).map(|_| weight(&mut rng)).collect());
    let alphabet = default_alphabet(k);
    Ok((
        WeightedAutomaton::new(alphabet, output, trans)?,
        Vector::unit(n, 0),
    ))
}

fn default_alphabet(k: usize) -> Vec<String> {
    (0..k)
        .map(|i| {
            if i < 26 {
                char::from(b'a' + i as u8).to_string()
            } else {
                format!("s{i}")
            }
        })
        .collect()
}

/// Indices of the states of [`exp_family`].
#[derive(Clone, Copy, Debug)]
pub struct ExpStates {
    pub n: usize,
}

impl ExpStates {
    pub fn x(self) -> usize {
        0
    }
    /// `x_i` for `1 ≤ i ≤ n`.
    pub fn xi(self, i: usize) -> usize {
        i
    }
    pub fn y(self) -> usize {
        self.n + 1
    }
    pub fn yi(self, i: usize) -> usize {
        self.n + 1 + i
    }
}

/// The family with states `x, x_1..x_n, y, y_1..y_n` where every word of
/// length `m ≤ n` reaches a distinct vector from `e_x ⊔ e_y`.
///
/// `x` and `y` loop on `a, b`; `x -a-> x_1`, `y -b-> y_1`, and
/// `x_i, y_i` move to `x_{i+1}, y_{i+1}` on both letters. All transitions
/// weigh 1, all outputs are 0.
pub fn exp_family(n: usize) -> (WeightedAutomaton<TropicalNat>, Vector<TropicalNat>) {
    assert!(n >= 1, "the exponential family needs n ≥ 1");
    let s = ExpStates { n };
    let dim = 2 * n + 2;
    let one = TropicalNat::fin(1);
    let mut ta = Matrix::zeros(dim);
    let mut tb = Matrix::zeros(dim);
    for m in [&mut ta, &mut tb] {
        m.set(s.x(), s.x(), one);
        m.set(s.y(), s.y(), one);
        for i in 1..n {
            m.set(s.xi(i), s.xi(i + 1), one);
            m.set(s.yi(i), s.yi(i + 1), one);
        }
    }
    ta.set(s.x(), s.xi(1), one);
    tb.set(s.y(), s.yi(1), one);
    let aut = WeightedAutomaton::new(
        vec!["a".into(), "b".into()],
        Vector::new(vec![TropicalNat::one(); dim]),
        vec![ta, tb],
    )
    .expect("well-formed family");
    let init = Vector::unit(dim, s.x()).combine(&Vector::unit(dim, s.y()));
    (aut, init)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algo {
    Abk,
    HkpA,
    HkpAPrime,
}

impl Algo {
    pub const ALL: [Algo; 3] = [Algo::Abk, Algo::HkpA, Algo::HkpAPrime];

    pub fn name(self) -> &'static str {
        match self {
            Algo::Abk => "abk",
            Algo::HkpA => "hkpa",
            Algo::HkpAPrime => "hkpa-sim",
        }
    }

    pub fn run(
        self,
        aut: &WeightedAutomaton<TropicalNat>,
        v: &Vector<TropicalNat>,
        threshold: u64,
        budget: Budget,
    ) -> Result<Verdict> {
        match self {
            Algo::Abk => abk(aut, v, threshold, budget),
            Algo::HkpA => hkp_a(aut, v, threshold, budget),
            Algo::HkpAPrime => hkp_a_prime(aut, v, threshold, budget),
        }
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algo::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| {
                Error::usage(format!(
                    "unknown algorithm `{s}` (expected abk, hkpa or hkpa-sim)"
                ))
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRow {
    pub seed: u64,
    pub n_states: usize,
    pub threshold: u64,
    pub algo: Algo,
    pub run: usize,
    pub answer: Answer,
    pub runtime_us: u64,
    pub relation_size: usize,
    pub sim_size: Option<usize>,
}

impl BenchRow {
    pub fn fuel_exhausted(&self) -> bool {
        self.answer == Answer::FuelExhausted
    }
}

pub const CSV_HEADER: [&str; 10] = [
    "seed",
    "n_states",
    "threshold",
    "algo",
    "run",
    "verdict",
    "runtime_ms",
    "relation_size",
    "sim_size",
    "fuel_exhausted",
];

pub fn write_csv<W: Write>(rows: &[BenchRow], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in rows {
        w.write_record([
            r.seed.to_string(),
            r.n_states.to_string(),
            r.threshold.to_string(),
            r.algo.to_string(),
            r.run.to_string(),
            r.answer.to_string(),
            format!("{:.3}", r.runtime_us as f64 / 1000.0),
            r.relation_size.to_string(),
            r.sim_size.map(|s| s.to_string()).unwrap_or_default(),
            r.fuel_exhausted().to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Nearest-rank percentile: the value at 1-based index `⌈p/100 · n⌉` of
/// the sorted sample.
pub fn percentile<T: Ord + Copy>(sorted: &[T], p: u32) -> Option<T> {
    if sorted.is_empty() {
        return None;
    }
    let n = sorted.len();
    let rank = (p as usize * n).div_ceil(100).clamp(1, n);
    Some(sorted[rank - 1])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Metric {
    RuntimeUs,
    RelationSize,
    SimSize,
}

impl Metric {
    pub fn name(self) -> &'static str {
        match self {
            Metric::RuntimeUs => "runtime_us",
            Metric::RelationSize => "relation_size",
            Metric::SimSize => "sim_size",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Percentiles {
    pub p50: u64,
    pub p90: u64,
    pub p99: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummaryEntry {
    pub n_states: usize,
    pub threshold: u64,
    pub algo: Algo,
    pub metric: Metric,
    pub percentiles: Option<Percentiles>,
    pub samples: usize,
    /// Runs excluded because they ran out of fuel.
    pub exhausted: usize,
}

/// Percentiles per `(cell, algorithm, metric)`, skipping exhausted runs.
pub fn summarize(rows: &[BenchRow]) -> Vec<SummaryEntry> {
    let mut groups: BTreeMap<(usize, u64, Algo), Vec<&BenchRow>> = BTreeMap::new();
    for r in rows {
        groups
            .entry((r.n_states, r.threshold, r.algo))
            .or_default()
            .push(r);
    }
    let mut out = Vec::new();
    for ((n_states, threshold, algo), group) in groups {
        let exhausted = group.iter().filter(|r| r.fuel_exhausted()).count();
        let done: Vec<&&BenchRow> = group.iter().filter(|r| !r.fuel_exhausted()).collect();
        for metric in [Metric::RuntimeUs, Metric::RelationSize, Metric::SimSize] {
            let mut values: Vec<u64> = done
                .iter()
                .filter_map(|r| match metric {
                    Metric::RuntimeUs => Some(r.runtime_us),
                    Metric::RelationSize => Some(r.relation_size as u64),
                    Metric::SimSize => r.sim_size.map(|s| s as u64),
                })
                .collect();
            if metric == Metric::SimSize && values.is_empty() {
                continue;
            }
            values.sort_unstable();
            let percentiles = percentile(&values, 50).map(|p50| Percentiles {
                p50,
                p90: percentile(&values, 90).unwrap_or(p50),
                p99: percentile(&values, 99).unwrap_or(p50),
            });
            out.push(SummaryEntry {
                n_states,
                threshold,
                algo,
                metric,
                percentiles,
                samples: values.len(),
                exhausted,
            });
        }
    }
    out
}

pub fn render_summary(summary: &[SummaryEntry]) -> String {
    let mut s = String::from("cell\talgo\tmetric\tp50\tp90\tp99\tsamples\texhausted\n");
    for e in summary {
        let (p50, p90, p99) = e
            .percentiles
            .map_or(("-".into(), "-".into(), "-".into()), |p| {
                (p.p50.to_string(), p.p90.to_string(), p.p99.to_string())
            });
        s.push_str(&format!(
            "({},{})\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            e.n_states,
            e.threshold,
            e.algo,
            e.metric.name(),
            p50,
            p90,
            p99,
            e.samples,
            e.exhausted
        ));
    }
    s
}

/// SplitMix64 finalizer over the run seed, the grid cell and the run index.
pub fn instance_seed(base: u64, cell: usize, run: usize) -> u64 {
    let mut z = base
        .wrapping_add(
            (cell as u64)
                .wrapping_mul(0x9E37_79B9_7F4A_7C15)
                .rotate_left(32),
        )
        .wrapping_add((run as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    /// `(n_states, threshold)` cells.
    pub grid: Vec<(usize, u64)>,
    pub runs_per_cell: usize,
    pub algos: Vec<Algo>,
    pub seed: u64,
    pub budget: Budget,
}

#[derive(Clone, Debug)]
pub struct BenchReport {
    /// Sorted by cell, run and algorithm.
    pub rows: Vec<BenchRow>,
    pub summary: Vec<SummaryEntry>,
}

/// Runs every algorithm on `runs_per_cell` random instances per cell.
/// Instances run in parallel; each run owns its state.
pub fn run_bench(config: &BenchConfig) -> Result<BenchReport> {
    let jobs: Vec<(usize, usize)> = (0..config.grid.len())
        .flat_map(|c| (0..config.runs_per_cell).map(move |r| (c, r)))
        .collect();
    let rows: Vec<Vec<BenchRow>> = jobs
        .par_iter()
        .map(|&(cell, run)| {
            let (n_states, threshold) = config.grid[cell];
            let seed = instance_seed(config.seed, cell, run);
            let (aut, init) = gen_random(&GenParams::new(n_states, threshold, seed))?;
            config
                .algos
                .iter()
                .map(|&algo| {
                    let start = Instant::now();
                    let verdict = algo.run(&aut, &init, threshold, config.budget)?;
                    let runtime_us = start.elapsed().as_micros() as u64;
                    Ok(BenchRow {
                        seed,
                        n_states,
                        threshold,
                        algo,
                        run,
                        answer: verdict.answer,
                        runtime_us,
                        relation_size: verdict.stats.relation_size,
                        sim_size: verdict.stats.sim_size,
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let mut rows: Vec<BenchRow> = rows.into_iter().flatten().collect();
    rows.sort_by_key(|r| (r.n_states, r.threshold, r.run, r.algo));
    let summary = summarize(&rows);
    Ok(BenchReport { rows, summary })
}
