//! Single-source shortest paths computed as normal forms of the rewriting
//! system `{e_i ↦ v_i}`, where `v_i` holds the outgoing arc weights of `i`.

use crate::congruence::{
    FuelExhausted, Mode, RewriteRule, RewriteSystem, Strategy, DEFAULT_REWRITE_FUEL,
};
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::semiring::LMonoid;

/// A directed graph with tropical arc weights; `weight(i, j)` is `∞` when
/// there is no arc. Every vertex carries a 0-weighted self-loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedDigraph<S> {
    rows: Vec<Vector<S>>,
}

impl<S: LMonoid> WeightedDigraph<S> {
    /// Builds a graph from its adjacency rows (row = source). Diagonal
    /// entries are fixed to the multiplicative unit, i.e. weight 0.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::usage("graphs need at least one vertex"));
        }
        let rows = rows
            .into_iter()
            .enumerate()
            .map(|(i, mut row)| {
                if row.len() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        found: row.len(),
                    });
                }
                row[i] = S::one();
                Ok(Vector::new(row))
            })
            .collect::<Result<_>>()?;
        Ok(WeightedDigraph { rows })
    }

    pub fn vertices(&self) -> usize {
        self.rows.len()
    }

    pub fn weight(&self, src: usize, dst: usize) -> &S {
        &self.rows[src][dst]
    }

    pub fn row(&self, src: usize) -> &Vector<S> {
        &self.rows[src]
    }
}

/// One rule `e_i ↦ v_i` per vertex; vertices without outgoing arcs
/// produce `e_i ↦ e_i`, which is dropped.
pub fn graph_rules<S: LMonoid>(graph: &WeightedDigraph<S>) -> RewriteSystem<S> {
    let n = graph.vertices();
    let mut rs = RewriteSystem::new(n, Mode::Symmetric);
    for (i, row) in graph.rows.iter().enumerate() {
        rs.add_rule(RewriteRule {
            lhs: Vector::unit(n, i),
            rhs: row.clone(),
        });
    }
    rs
}

/// Shortest-path weights from `source` (0-based) to every vertex.
pub fn shortest_paths<S: LMonoid>(
    graph: &WeightedDigraph<S>,
    source: usize,
) -> Result<Vector<S>, FuelExhausted> {
    shortest_paths_with(graph, source, Strategy::RoundRobin)
}

pub fn shortest_paths_with<S: LMonoid>(
    graph: &WeightedDigraph<S>,
    source: usize,
    strategy: Strategy,
) -> Result<Vector<S>, FuelExhausted> {
    assert!(source < graph.vertices(), "source vertex out of range");
    let mut rs = graph_rules(graph)
        .with_fuel(DEFAULT_REWRITE_FUEL)
        .with_strategy(strategy);
    rs.normal_form(&Vector::unit(graph.vertices(), source))
}
