use std::fmt;

use crate::automata::Word;
use crate::congruence::DEFAULT_REWRITE_FUEL;

/// Default bound on the number of pairs extracted from `todo`.
pub const DEFAULT_PAIR_FUEL: u64 = 1_000_000;

/// Step budgets for a decision run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of pairs (or vectors, for ABK) extracted from `todo`.
    pub pairs: u64,
    /// Maximum rewrite steps per normal-form computation.
    pub rewrite_steps: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            pairs: DEFAULT_PAIR_FUEL,
            rewrite_steps: DEFAULT_REWRITE_FUEL,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Answer {
    True,
    False,
    FuelExhausted,
}

impl Answer {
    pub fn as_str(self) -> &'static str {
        match self {
            Answer::True => "true",
            Answer::False => "false",
            Answer::FuelExhausted => "fuel-exhausted",
        }
    }
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    /// `|R|`, or `|P|` for ABK.
    pub relation_size: usize,
    pub pairs_processed: u64,
    pub rewrite_steps: u64,
    /// Size of the precomputed similarity without reflexive pairs.
    pub sim_size: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub answer: Answer,
    /// Present iff `answer` is [`Answer::False`].
    pub witness: Option<Word>,
    pub stats: Stats,
}

impl Verdict {
    pub(crate) fn holds(stats: Stats) -> Self {
        Verdict {
            answer: Answer::True,
            witness: None,
            stats,
        }
    }

    pub(crate) fn refuted(witness: Word, stats: Stats) -> Self {
        Verdict {
            answer: Answer::False,
            witness: Some(witness),
            stats,
        }
    }

    pub(crate) fn exhausted(stats: Stats) -> Self {
        Verdict {
            answer: Answer::FuelExhausted,
            witness: None,
            stats,
        }
    }

    pub fn is_true(&self) -> bool {
        self.answer == Answer::True
    }

    pub fn is_false(&self) -> bool {
        self.answer == Answer::False
    }

    /// Stable single-line rendering, e.g.
    /// `false witness="a b" relation_size=3 pairs_processed=5 rewrite_steps=9 sim_size=-`.
    pub fn summary(&self, alphabet: &[String]) -> String {
        let mut line = self.answer.to_string();
        if let Some(w) = &self.witness {
            let word: Vec<&str> = w.iter().map(|&i| alphabet[i].as_str()).collect();
            line.push_str(&format!(" witness=\"{}\"", word.join(" ")));
        }
        let s = &self.stats;
        line.push_str(&format!(
            " relation_size={} pairs_processed={} rewrite_steps={} sim_size={}",
            s.relation_size,
            s.pairs_processed,
            s.rewrite_steps,
            s.sim_size
                .map_or_else(|| "-".to_string(), |n| n.to_string())
        ));
        line
    }
}

/// Words generating the entries of `todo`, stored as a parent-pointer tree.
#[derive(Debug, Default)]
pub(crate) struct Trail {
    nodes: Vec<(usize, usize)>,
}

impl Trail {
    pub const ROOT: usize = usize::MAX;

    pub fn extend(&mut self, parent: usize, sym: usize) -> usize {
        self.nodes.push((parent, sym));
        self.nodes.len() - 1
    }

    pub fn word(&self, mut node: usize) -> Word {
        let mut word = Vec::new();
        while node != Self::ROOT {
            let (parent, sym) = self.nodes[node];
            word.push(sym);
            node = parent;
        }
        word.reverse();
        word
    }
}
