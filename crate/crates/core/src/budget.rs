//! Wall-clock budgets shared across the stages of a solve.
//!
//! A [`Budget`] is a deadline, not a stopwatch: every stage of an algorithm
//! (master and slave solves, classical evaluations) draws down the same
//! deadline, so the total wall time of a solve is bounded by the single
//! limit the caller supplied.

use std::time::{Duration, Instant};

/// Deadline-based time budget. `unlimited()` never expires.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { deadline: None }
    }

    pub fn with_limit(limit: Duration) -> Self {
        Budget {
            deadline: Some(Instant::now() + limit),
        }
    }

    /// Child budget covering half of the time left on `self`.
    /// Used when a stage must leave room for a sibling stage of similar size.
    pub fn half_of_remaining(&self) -> Self {
        match self.remaining() {
            None => Budget::unlimited(),
            Some(rem) => Budget {
                deadline: Some(Instant::now() + rem / 2),
            },
        }
    }

    /// Time left, or `None` when unlimited. Expired budgets report zero.
    pub fn remaining(&self) -> Option<Duration> {
        self.deadline
            .map(|d| d.saturating_duration_since(Instant::now()))
    }

    pub fn expired(&self) -> bool {
        matches!(self.remaining(), Some(rem) if rem.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unlimited_never_expires() {
        let b = Budget::unlimited();
        assert!(!b.expired());
        assert!(b.remaining().is_none());
    }

    #[test]
    fn zero_limit_expires_immediately() {
        let b = Budget::with_limit(Duration::ZERO);
        assert!(b.expired());
    }

    #[test]
    fn half_of_remaining_is_shorter() {
        let b = Budget::with_limit(Duration::from_secs(10));
        let h = b.half_of_remaining();
        let hr = h.remaining().unwrap();
        assert!(hr <= Duration::from_secs(5));
        assert!(hr >= Duration::from_secs(4));
    }
}
