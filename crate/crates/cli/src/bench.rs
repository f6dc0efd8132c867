//! Instrumented measurements of heapify, insert and remove.

use std::io::Write;
use std::time::Instant;

use pbheap::update::{heapify_observed, insert_observed, remove_observed};
use pbheap::{heapify, insert, remove, Natural};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::counters::OpCounters;

pub const CSV_HEADER: &str = "operation,n,rep,comparisons,allocations,depth,wall_nanos";

/// One measured operation. Field order is the CSV column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchRecord {
    pub operation: &'static str,
    pub n: usize,
    pub rep: u32,
    pub comparisons: u64,
    pub allocations: u64,
    pub depth: u32,
    pub wall_nanos: u64,
}

impl BenchRecord {
    fn new(
        operation: &'static str,
        n: usize,
        rep: u32,
        counters: OpCounters,
        wall_nanos: u64,
    ) -> Self {
        BenchRecord {
            operation,
            n,
            rep,
            comparisons: counters.comparisons,
            allocations: counters.branch_allocations,
            depth: counters.max_recursion_depth,
            wall_nanos,
        }
    }
}

/// Input values for one `(n, rep)` cell; a pure function of its arguments.
pub fn workload(seed: u64, n: usize, rep: u32) -> Vec<i64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((n as u64) << 20) ^ rep as u64);
    (0..n).map(|_| rng.random()).collect()
}

/// Measures `heapify`, `insert` and `remove` for every size and repetition.
///
/// Counters come from an instrumented run; wall time from a separate
/// uninstrumented run of the same operation on the same input.
pub fn run_bench(sizes: &[usize], reps: u32, seed: u64) -> Vec<BenchRecord> {
    let mut records = Vec::with_capacity(sizes.len() * reps as usize * 3);
    for &n in sizes {
        for rep in 0..reps {
            let values = workload(seed, n, rep);
            let extra = values.first().copied().unwrap_or_default().wrapping_mul(31);

            let mut counters = OpCounters::new();
            let base = heapify_observed(values.clone(), &Natural, &mut counters);
            let input = values.clone();
            let start = Instant::now();
            let timed = heapify(input, &Natural);
            let wall = start.elapsed().as_nanos() as u64;
            drop(timed);
            records.push(BenchRecord::new("heapify", n, rep, counters, wall));

            counters.reset();
            let _ = insert_observed(&base, extra, &Natural, &mut counters);
            let start = Instant::now();
            let timed = insert(&base, extra, &Natural);
            let wall = start.elapsed().as_nanos() as u64;
            drop(timed);
            records.push(BenchRecord::new("insert", n, rep, counters, wall));

            counters.reset();
            if !base.is_empty() {
                let _ = remove_observed(&base, &Natural, &mut counters);
                let start = Instant::now();
                let timed = remove(&base, &Natural);
                let wall = start.elapsed().as_nanos() as u64;
                drop(timed);
                records.push(BenchRecord::new("remove", n, rep, counters, wall));
            }
        }
    }
    records
}

pub fn write_csv<W: Write>(records: &[BenchRecord], out: W) -> Result<(), csv::Error> {
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    if records.is_empty() {
        writer.write_record(CSV_HEADER.split(','))?;
    }
    for record in records {
        writer.serialize(record)?;
    }
    writer.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_matches() {
        let mut buf = Vec::new();
        write_csv(&run_bench(&[3], 1, 1), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().next(), Some(CSV_HEADER));
        assert_eq!(text.lines().count(), 4);
        assert!(!text.contains('\r'));

        let mut empty = Vec::new();
        write_csv(&[], &mut empty).unwrap();
        assert_eq!(String::from_utf8(empty).unwrap(), format!("{CSV_HEADER}\n"));
    }

    #[test]
    fn workloads_are_reproducible() {
        assert_eq!(workload(7, 100, 2), workload(7, 100, 2));
        assert_ne!(workload(7, 100, 2), workload(7, 100, 3));
        assert_ne!(workload(7, 100, 2), workload(8, 100, 2));
    }

    #[test]
    fn insert_depth_on_perfect_heaps() {
        for k in 1..=10u32 {
            let n = (1usize << k) - 1;
            let records = run_bench(&[n], 1, 5);
            let ins = records.iter().find(|r| r.operation == "insert").unwrap();
            assert_eq!(ins.depth, k);
            assert!(ins.allocations <= k as u64 + 1);
        }
    }

    #[test]
    fn remove_allocations_at_1024() {
        let records = run_bench(&[1024], 3, 1);
        for r in records.iter().filter(|r| r.operation == "remove") {
            assert!(r.allocations <= 2 * 11 + 2, "{r:?}");
            assert!(r.depth <= 11);
        }
    }
}
