//! Threaded runners, report formats and the cross-validation suite on top of
//! `rghw-core`.

pub mod export;
pub mod parallel;
pub mod report;
pub mod verify;

use rghw_core::Error;

/// Process exit status for a failed run.
pub fn exit_code(err: &Error) -> u8 {
    match err {
        Error::RouteDisagreement { .. } => 1,
        Error::CapExceeded { .. } => 3,
        _ => 2,
    }
}

/// Enumeration cap used when neither a flag nor `RGHW_CAP` sets one.
pub const DEFAULT_CAP: u128 = rghw_core::subspaces::DEFAULT_ENUMERATION_CAP;
