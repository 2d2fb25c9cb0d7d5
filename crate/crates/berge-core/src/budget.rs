//! Node/time budgets for the NP-hard searches. Exhausting a budget is always
//! reported distinctly from a proven negative.

use std::time::Instant;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_millis: Option<u64>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget {
        max_nodes: None,
        max_millis: None,
    };

    pub fn nodes(max_nodes: u64) -> Budget {
        Budget {
            max_nodes: Some(max_nodes),
            max_millis: None,
        }
    }

    pub fn new(max_nodes: Option<u64>, max_millis: Option<u64>) -> Budget {
        Budget {
            max_nodes,
            max_millis,
        }
    }
}

pub(crate) struct BudgetTracker {
    budget: Budget,
    start: Instant,
    nodes: u64,
    tripped: bool,
}

impl BudgetTracker {
    pub(crate) fn new(budget: Budget) -> Self {
        BudgetTracker {
            budget,
            start: Instant::now(),
            nodes: 0,
            tripped: false,
        }
    }

    /// Counts one explored node; returns false once the budget is exhausted.
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        if self.tripped {
            return false;
        }
        self.nodes += 1;
        if let Some(max) = self.budget.max_nodes {
            if self.nodes > max {
                self.tripped = true;
                return false;
            }
        }
        if let Some(max) = self.budget.max_millis {
            if self.nodes.is_multiple_of(4096) && self.start.elapsed().as_millis() as u64 > max {
                self.tripped = true;
                return false;
            }
        }
        true
    }
}
