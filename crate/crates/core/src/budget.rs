//! Explicit caps for the exhaustive searches.

use crate::error::{Error, Result};

/// Maximum number of candidate assignments a search may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Budget {
    pub const DEFAULT: Budget = Budget(10_000_000);

    pub fn unlimited() -> Self {
        Budget(u64::MAX)
    }

    pub(crate) fn meter(self, what: &'static str) -> Meter {
        Meter {
            what,
            bound: self.0,
            used: 0,
        }
    }

    /// Fails up front when a search of known size would not fit.
    pub(crate) fn require(self, what: &'static str, required: u64) -> Result<()> {
        if required > self.0 {
            Err(Error::BudgetExceeded {
                what,
                bound: self.0,
                required: Some(required),
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}

#[derive(Debug)]
pub(crate) struct Meter {
    what: &'static str,
    bound: u64,
    used: u64,
}

impl Meter {
    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.bound {
            Err(Error::BudgetExceeded {
                what: self.what,
                bound: self.bound,
                required: None,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn remaining(&self) -> u64 {
        self.bound.saturating_sub(self.used)
    }
}
