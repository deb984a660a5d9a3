//! Wall-clock budgets for the exhaustive searches.

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

/// Nodes expanded between clock reads.
const CHECK_INTERVAL: u64 = 1 << 12;

/// An optional point in time after which searches give up.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Deadline(Option<Instant>);

impl Deadline {
    pub fn none() -> Self {
        Deadline(None)
    }

    pub fn after(budget: Option<Duration>) -> Self {
        Deadline(budget.and_then(|b| Instant::now().checked_add(b)))
    }

    pub fn expired(&self) -> bool {
        self.0.is_some_and(|d| Instant::now() >= d)
    }
}

/// Per-worker node counter that polls the deadline and a shared stop flag.
pub(crate) struct Ticker<'a> {
    deadline: Deadline,
    stop: &'a AtomicBool,
    pub(crate) nodes: u64,
    timed_out: bool,
}

impl<'a> Ticker<'a> {
    pub(crate) fn new(deadline: Deadline, stop: &'a AtomicBool) -> Self {
        Ticker {
            deadline,
            stop,
            nodes: 0,
            timed_out: false,
        }
    }

    /// Counts one node; returns true when the search must unwind.
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.timed_out {
            return true;
        }
        if self.nodes.is_multiple_of(CHECK_INTERVAL) {
            if self.stop.load(Ordering::Relaxed) {
                self.timed_out = true;
            } else if self.deadline.expired() {
                self.timed_out = true;
                self.stop.store(true, Ordering::Relaxed);
            }
        }
        self.timed_out
    }

    pub(crate) fn timed_out(&self) -> bool {
        self.timed_out
    }
}
