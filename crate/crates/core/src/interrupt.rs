//! Cooperative cancellation for long Gröbner computations.

use crate::{Error, Result};

/// Polled by long-running loops; returning `true` aborts the computation
/// with [`Error::Interrupted`].
pub trait Interrupt: Sync {
    fn should_stop(&self) -> bool;
}

/// Never interrupts.
#[derive(Debug, Clone, Copy, Default)]
pub struct NeverInterrupt;

impl Interrupt for NeverInterrupt {
    fn should_stop(&self) -> bool {
        false
    }
}

impl<F: Fn() -> bool + Sync> Interrupt for F {
    fn should_stop(&self) -> bool {
        self()
    }
}

/// Resource limits for a Gröbner basis computation.
#[derive(Clone, Copy)]
pub struct Limits<'a> {
    /// Maximal number of S-pairs to reduce; `None` means unbounded.
    pub max_pairs: Option<usize>,
    pub interrupt: &'a dyn Interrupt,
}

impl Default for Limits<'_> {
    fn default() -> Self {
        Limits {
            max_pairs: None,
            interrupt: &NeverInterrupt,
        }
    }
}

impl core::fmt::Debug for Limits<'_> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Limits")
            .field("max_pairs", &self.max_pairs)
            .finish_non_exhaustive()
    }
}

impl<'a> Limits<'a> {
    pub fn with_interrupt(interrupt: &'a dyn Interrupt) -> Self {
        Limits {
            max_pairs: None,
            interrupt,
        }
    }

    pub(crate) fn check(&self, pairs_done: usize) -> Result<()> {
        if let Some(max) = self.max_pairs {
            if pairs_done > max {
                return Err(Error::PairBudgetExceeded(max));
            }
        }
        if self.interrupt.should_stop() {
            return Err(Error::Interrupted);
        }
        Ok(())
    }
}
