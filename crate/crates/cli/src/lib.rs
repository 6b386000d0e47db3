//! Report formats and input parsing shared by the `qbinpos` binary and its
//! tests.

pub mod input;
pub mod report;

/// Process exit statuses.
pub mod exit {
    pub const OK: i32 = 0;
    /// A violation, or a reproduction that does not match its known values.
    pub const VIOLATION: i32 = 1;
    pub const USAGE: i32 = 2;
    /// Checkpoint or other I/O failure.
    pub const IO: i32 = 3;
}
