//! Process-wide size caps for the exhaustive routines.

use core::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};

/// Default vertex cap for exhaustive searches.
pub const DEFAULT_DESK_CAP: usize = 24;
/// Default cap on the number of cycles a single enumeration may produce.
pub const DEFAULT_CYCLE_CAP: usize = 1_000_000;
/// Hard cap for isomorphism tests and anything using 64-bit vertex masks.
pub const MASK_CAP: usize = 64;

static DESK_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_DESK_CAP);
static CYCLE_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_CYCLE_CAP);

pub fn desk_cap() -> usize {
    DESK_CAP.load(Ordering::Relaxed)
}

/// Values above [`MASK_CAP`] are clamped.
pub fn set_desk_cap(cap: usize) {
    DESK_CAP.store(cap.min(MASK_CAP), Ordering::Relaxed);
}

pub fn cycle_cap() -> usize {
    CYCLE_CAP.load(Ordering::Relaxed)
}

pub fn set_cycle_cap(cap: usize) {
    CYCLE_CAP.store(cap, Ordering::Relaxed);
}

pub(crate) fn check_desk(order: usize) -> Result<()> {
    let cap = desk_cap();
    if order > cap {
        return Err(Error::CapExceeded { order, cap });
    }
    Ok(())
}

pub(crate) fn check_mask(order: usize) -> Result<()> {
    if order > MASK_CAP {
        return Err(Error::CapExceeded { order, cap: MASK_CAP });
    }
    Ok(())
}
