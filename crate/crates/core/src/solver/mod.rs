//! Exact total dominator chromatic number.
//!
//! [`chi_d_t`] is a branch-and-bound over restricted-growth colorings. [`brute_force_chi_d_t`]
//! is an independent oracle that scans every set partition and shares no search code with it.

mod brute;
mod chromatic;
mod optimal;
mod search;

use std::time::Duration;

use serde::Serialize;

pub use brute::{brute_force_chi_d_t, BRUTE_FORCE_MAX_ORDER};
pub use chromatic::chromatic_number;
pub use optimal::{enumerate_optimal_tdc, tdcs_with_classes, TdcStream};

use crate::coloring::Coloring;
use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, MAX_MASK_ORDER};

/// Order in which the search assigns vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum VertexOrder {
    /// Reverse smallest-last order: the densest core first.
    #[default]
    Degeneracy,
    MaxDegreeFirst,
    Natural,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub node_budget: Option<u64>,
    pub time_budget: Option<Duration>,
    pub order: VertexOrder,
    pub workers: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_budget: None,
            time_budget: None,
            order: VertexOrder::Degeneracy,
            workers: 1,
        }
    }
}

impl SearchConfig {
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn with_node_budget(mut self, nodes: u64) -> Self {
        self.node_budget = Some(nodes);
        self
    }

    pub fn with_time_budget(mut self, budget: Duration) -> Self {
        self.time_budget = Some(budget);
        self
    }

    pub fn with_order(mut self, order: VertexOrder) -> Self {
        self.order = order;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.node_budget == Some(0) {
            return Err(invalid("node budget must be positive"));
        }
        if self.time_budget.is_some_and(|t| t.is_zero()) {
            return Err(invalid("time budget must be positive"));
        }
        if self.workers == 0 {
            return Err(invalid("worker count must be positive"));
        }
        Ok(())
    }
}

/// Optimum, a canonical optimal witness, and search statistics.
#[derive(Debug, Clone)]
pub struct SolveResult {
    pub value: usize,
    pub witness: Coloring,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

/// Shared precondition check for everything that needs a total dominator coloring to exist.
pub(crate) fn check_solvable(g: &Graph, max: usize) -> Result<()> {
    if g.order() == 0 {
        return Err(invalid("graph has no vertices"));
    }
    if let Some(vertex) = g.isolated_vertex() {
        return Err(Error::NoTdcExists { vertex });
    }
    if g.order() > max {
        return Err(Error::InstanceTooLarge { n: g.order(), max });
    }
    Ok(())
}

/// χ_d^t(G) with a witness.
///
/// The witness is the first optimal coloring in the search's depth-first order, written in
/// canonical form, so it does not depend on the worker count.
pub fn chi_d_t(g: &Graph, cfg: &SearchConfig) -> Result<SolveResult> {
    check_solvable(g, MAX_MASK_ORDER)?;
    cfg.validate()?;
    search::solve(g, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_total_dominator;
    use crate::graph::*;

    fn value(g: &Graph) -> usize {
        chi_d_t(g, &SearchConfig::default()).unwrap().value
    }

    #[test]
    fn family_values() {
        assert_eq!(value(&cycle(4).unwrap()), 2);
        for k in 2..8 {
            assert_eq!(value(&complete(k).unwrap()), k);
        }
        assert_eq!(value(&path(4).unwrap()), 3);
        assert_eq!(value(&wheel(4).unwrap()), 3);
        assert_eq!(value(&wheel(5).unwrap()), 4);
        for a in 1..4 {
            for b in 1..4 {
                assert_eq!(value(&complete_multipartite(&[a, b]).unwrap()), 2);
            }
        }
    }

    #[test]
    fn witness_is_valid_and_canonical() {
        for g in [cycle(7).unwrap(), path(8).unwrap(), wheel(6).unwrap()] {
            let r = chi_d_t(&g, &SearchConfig::default()).unwrap();
            assert!(is_total_dominator(&g, &r.witness).unwrap());
            assert_eq!(r.witness.num_colors(), r.value);
            assert!(r.witness.is_canonical());
        }
    }

    #[test]
    fn precondition_errors() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(
            chi_d_t(&g, &SearchConfig::default()).unwrap_err(),
            Error::NoTdcExists { vertex: 2 }
        );
        assert!(matches!(
            chi_d_t(&Graph::empty(1), &SearchConfig::default()),
            Err(Error::NoTdcExists { vertex: 0 })
        ));
        assert!(chi_d_t(&path(3).unwrap(), &SearchConfig::default().with_workers(0)).is_err());
        assert!(chi_d_t(
            &path(3).unwrap(),
            &SearchConfig::default().with_node_budget(0)
        )
        .is_err());
    }

    #[test]
    fn node_budget_reports_upper_bound() {
        let g = iterated_mycielskian(&cycle(5).unwrap(), 1);
        let err = chi_d_t(&g, &SearchConfig::default().with_node_budget(3)).unwrap_err();
        match err {
            Error::BudgetExceeded { upper_bound } => assert!((5..=11).contains(&upper_bound)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn orders_agree() {
        let g = mycielskian(&path(4).unwrap());
        let values: Vec<usize> = [
            VertexOrder::Degeneracy,
            VertexOrder::MaxDegreeFirst,
            VertexOrder::Natural,
        ]
        .into_iter()
        .map(|o| {
            chi_d_t(&g, &SearchConfig::default().with_order(o))
                .unwrap()
                .value
        })
        .collect();
        assert_eq!(values, vec![4, 4, 4]);
    }

    #[test]
    fn worker_count_does_not_change_witness() {
        for g in [
            mycielskian(&cycle(5).unwrap()),
            cycle(11).unwrap(),
            complement(&cycle(9).unwrap()),
        ] {
            let one = chi_d_t(&g, &SearchConfig::default()).unwrap();
            let four = chi_d_t(&g, &SearchConfig::default().with_workers(4)).unwrap();
            assert_eq!(one.value, four.value);
            assert_eq!(one.witness, four.witness);
        }
    }
}
