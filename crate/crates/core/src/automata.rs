//! Weighted automata `(X, o, t)` and their language semantics.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::semiring::{Semiring, TropicalNat};

/// Default cap on the number of entries of a brute-force language table.
pub const DEFAULT_TABLE_CAP: usize = 1_000_000;

/// Words are sequences of alphabet indices.
pub type Word = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedAutomaton<S> {
    alphabet: Vec<String>,
    output: Vector<S>,
    trans: Vec<Matrix<S>>,
}

impl<S: Semiring> WeightedAutomaton<S> {
    /// `trans[i]` is the transition matrix of `alphabet[i]`.
    pub fn new(alphabet: Vec<String>, output: Vector<S>, trans: Vec<Matrix<S>>) -> Result<Self> {
        if alphabet.is_empty() {
            return Err(Error::usage("the alphabet must not be empty"));
        }
        for (i, sym) in alphabet.iter().enumerate() {
            if sym.is_empty() || sym.chars().any(char::is_whitespace) {
                return Err(Error::usage(format!("invalid symbol `{sym}`")));
            }
            if alphabet[..i].contains(sym) {
                return Err(Error::usage(format!("duplicate symbol `{sym}`")));
            }
        }
        if trans.len() != alphabet.len() {
            return Err(Error::usage(format!(
                "{} transition matrices for {} symbols",
                trans.len(),
                alphabet.len()
            )));
        }
        let n = output.dim();
        if let Some(m) = trans.iter().find(|m| m.dim() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: m.dim(),
            });
        }
        Ok(WeightedAutomaton {
            alphabet,
            output,
            trans,
        })
    }

    pub fn states(&self) -> usize {
        self.output.dim()
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn output_vector(&self) -> &Vector<S> {
        &self.output
    }

    pub fn transition(&self, sym: usize) -> &Matrix<S> {
        &self.trans[sym]
    }

    pub fn symbol_index(&self, sym: &str) -> Result<usize> {
        self.alphabet
            .iter()
            .position(|s| s == sym)
            .ok_or_else(|| Error::UnknownSymbol(sym.to_string()))
    }

    pub fn parse_word(&self, symbols: &[&str]) -> Result<Word> {
        symbols.iter().map(|s| self.symbol_index(s)).collect()
    }

    /// Space-separated symbol names; the empty word renders as "".
    pub fn render_word(&self, word: &[usize]) -> String {
        word.iter()
            .map(|&i| self.alphabet[i].as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// `t_a(v)`.
    pub fn step(&self, sym: usize, v: &Vector<S>) -> Vector<S> {
        self.trans[sym].apply(v)
    }

    pub fn step_symbol(&self, sym: &str, v: &Vector<S>) -> Result<Vector<S>> {
        Ok(self.step(self.symbol_index(sym)?, v))
    }

    /// `o(v)`.
    pub fn output(&self, v: &Vector<S>) -> S {
        self.output.dot(v)
    }

    /// The vector reached from `v` after reading `word`.
    pub fn run(&self, v: &Vector<S>, word: &[usize]) -> Vector<S> {
        word.iter().fold(v.clone(), |acc, &a| self.step(a, &acc))
    }

    /// `⟦v⟧(word)`.
    pub fn language_weight(&self, v: &Vector<S>, word: &[usize]) -> S {
        self.output(&self.run(v, word))
    }

    /// `⟦v⟧(w)` for every word of length at most `max_len`, computed by
    /// breadth-first propagation of vectors.
    pub fn brute_language_table(
        &self,
        v: &Vector<S>,
        max_len: usize,
        cap: usize,
    ) -> Result<LanguageTable<S>> {
        let k = self.alphabet.len();
        let mut total = 0usize;
        let mut level = 1usize;
        for len in 0..=max_len {
            if len > 0 {
                level = level.saturating_mul(k);
            }
            total = total.saturating_add(level);
            if total > cap {
                return Err(Error::usage(format!(
                    "language table up to length {max_len} exceeds the cap of {cap} entries"
                )));
            }
        }

        let mut entries = BTreeMap::new();
        let mut frontier = vec![(Word::new(), v.clone())];
        for len in 0..=max_len {
            let mut next = Vec::new();
            for (word, vec) in frontier {
                entries.insert(word.clone(), self.output(&vec));
                if len < max_len {
                    for a in 0..k {
                        let mut w = word.clone();
                        w.push(a);
                        next.push((w, self.step(a, &vec)));
                    }
                }
            }
            frontier = next;
        }
        Ok(LanguageTable { max_len, entries })
    }
}

impl WeightedAutomaton<TropicalNat> {
    /// Adds a state `t` with output `threshold` and a 0-weighted self-loop
    /// for every letter, appended as the last state. Returns the extended
    /// automaton and `e_t`.
    pub fn extend_with_threshold_state(&self, threshold: u64) -> (Self, Vector<TropicalNat>) {
        let n = self.states();
        let output = self.output.extended(TropicalNat::fin(threshold));
        let trans = self
            .trans
            .iter()
            .map(|m| m.extended(TropicalNat::fin(0)))
            .collect();
        let extended = WeightedAutomaton {
            alphabet: self.alphabet.clone(),
            output,
            trans,
        };
        (extended, Vector::unit(n + 1, n))
    }
}

/// Replaces every entry above `threshold` by `∞`.
pub fn abstraction(v: &Vector<TropicalNat>, threshold: u64) -> Vector<TropicalNat> {
    v.map(|x| abstract_scalar(*x, threshold))
}

pub fn abstract_scalar(x: TropicalNat, threshold: u64) -> TropicalNat {
    match x {
        TropicalNat::Finite(s) if s <= threshold => x,
        _ => TropicalNat::Infinity,
    }
}

/// Exhaustive language values for all words up to a length bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LanguageTable<S> {
    max_len: usize,
    entries: BTreeMap<Word, S>,
}

impl<S> LanguageTable<S> {
    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, word: &[usize]) -> Option<&S> {
        self.entries.get(word)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &S)> {
        self.entries.iter()
    }
}
