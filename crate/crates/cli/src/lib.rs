//! Library side of the `pbheap` command: input parsing, heapsort, the
//! seeded self-check and the instrumented benchmark.

pub mod bench;
pub mod check;
pub mod counters;
pub mod input;
pub mod sort;

pub use bench::{run_bench, write_csv, BenchRecord, CSV_HEADER};
pub use check::{run_check, CheckReport, CheckedOrder};
pub use counters::OpCounters;
pub use input::{format_integers, parse_integers, InputError};
pub use sort::heap_sort;

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: u8 = 0;
    pub const PROPERTY_FAILURE: u8 = 1;
    pub const INPUT_ERROR: u8 = 2;
}
