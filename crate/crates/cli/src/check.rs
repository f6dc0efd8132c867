//! Seeded self-check: differential, invariant and bound properties of the
//! persistent heap against the array oracle.

use std::cmp::Ordering;
use std::fmt;

use pbheap::compare::is_total_order;
use pbheap::update::{insert_observed, remove_observed};
use pbheap::{
    check_caches, check_heap_order, check_shape, heapify, remove, Comparator, Heap, Natural,
};
use pbheap_oracle::{level_order_shape, multiset, multiset_of, shape_of, OracleHeap};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::counters::OpCounters;

/// Comparator under test. `flipped` inverts every comparison, which turns
/// the heap into a max-heap and must be caught by the check.
#[derive(Debug, Clone, Copy, Default)]
pub struct CheckedOrder {
    pub flipped: bool,
}

impl Comparator<i64> for CheckedOrder {
    fn compare(&self, a: &i64, b: &i64) -> Ordering {
        if self.flipped {
            b.cmp(a)
        } else {
            a.cmp(b)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Insert(i64),
    Remove,
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Op::Insert(x) => write!(f, "insert {x}"),
            Op::Remove => f.write_str("remove"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct PropertyResult {
    pub name: &'static str,
    pub failure: Option<String>,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub properties: Vec<PropertyResult>,
    /// Shortest op sequence found that breaks the step-wise properties.
    pub counterexample: Option<Vec<Op>>,
}

impl CheckReport {
    pub fn all_passed(&self) -> bool {
        self.properties.iter().all(PropertyResult::passed)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.properties {
            match &p.failure {
                None => writeln!(f, "PASS {}", p.name)?,
                Some(why) => writeln!(f, "FAIL {}: {}", p.name, why)?,
            }
        }
        if let Some(ops) = &self.counterexample {
            writeln!(f, "counterexample ({} ops):", ops.len())?;
            for op in ops {
                writeln!(f, "  {op}")?;
            }
        }
        Ok(())
    }
}

pub fn random_ops(rng: &mut ChaCha8Rng, count: usize) -> Vec<Op> {
    (0..count)
        .map(|_| {
            if rng.random_bool(0.5) {
                Op::Insert(rng.random_range(-1000..=1000))
            } else {
                Op::Remove
            }
        })
        .collect()
}

/// First step-wise violation when replaying `ops`, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
struct StepFailure {
    step: usize,
    property: &'static str,
    detail: String,
}

fn floor_log2_plus_one(n: usize) -> u32 {
    if n == 0 {
        0
    } else {
        usize::BITS - n.leading_zeros()
    }
}

/// Replays `ops` on the persistent heap and the oracle side by side,
/// checking every step-wise property. Returns the first failure.
fn replay(ops: &[Op], order: CheckedOrder) -> Option<StepFailure> {
    let fail = |step, property, detail: String| {
        Some(StepFailure {
            step,
            property,
            detail,
        })
    };
    let mut heap = Heap::Leaf;
    let mut oracle = OracleHeap::new();
    let mut counters = OpCounters::new();
    for (step, op) in ops.iter().enumerate() {
        let before = heap.size();
        let height = heap.height();
        counters.reset();
        match *op {
            Op::Insert(x) => {
                heap = insert_observed(&heap, x, &order, &mut counters);
                oracle.insert(x);
                if counters.branch_allocations > height as u64 + 1 {
                    return fail(
                        step,
                        "allocation-bound",
                        format!(
                            "insert into height {height} allocated {}",
                            counters.branch_allocations
                        ),
                    );
                }
            }
            Op::Remove => {
                let got = remove_observed(&heap, &order, &mut counters);
                let want = oracle.delete_min();
                match (got, want) {
                    (Ok(next), Ok(_)) => heap = next,
                    (Err(_), Err(_)) => {}
                    (got, want) => {
                        return fail(
                            step,
                            "differential",
                            format!(
                                "remove disagreed on emptiness: heap ok={}, oracle ok={}",
                                got.is_ok(),
                                want.is_ok()
                            ),
                        );
                    }
                }
                if counters.branch_allocations > 2 * height as u64 + 2 {
                    return fail(
                        step,
                        "allocation-bound",
                        format!(
                            "remove from height {height} allocated {}",
                            counters.branch_allocations
                        ),
                    );
                }
            }
        }
        if counters.max_recursion_depth > floor_log2_plus_one(before) {
            return fail(
                step,
                "path-length",
                format!(
                    "depth {} on a heap of size {before}",
                    counters.max_recursion_depth
                ),
            );
        }
        if heap.minimum().ok() != oracle.min().ok() || heap.size() != oracle.len() {
            return fail(
                step,
                "differential",
                format!(
                    "heap (min {:?}, size {}) vs oracle (min {:?}, size {})",
                    heap.minimum().ok(),
                    heap.size(),
                    oracle.min().ok(),
                    oracle.len()
                ),
            );
        }
        if !check_shape(&heap) || !check_caches(&heap) || !check_heap_order(&heap, &Natural) {
            return fail(
                step,
                "invariants",
                format!(
                    "shape={} caches={} order={}",
                    check_shape(&heap),
                    check_caches(&heap),
                    check_heap_order(&heap, &Natural)
                ),
            );
        }
    }
    None
}

/// Truncates to the failing prefix, then greedily drops single ops while
/// the same property still fails.
fn shrink(ops: &[Op], order: CheckedOrder, failure: &StepFailure) -> Vec<Op> {
    let mut current = ops[..=failure.step].to_vec();
    if current.len() > 2000 {
        return current;
    }
    let still_fails =
        |candidate: &[Op]| replay(candidate, order).is_some_and(|f| f.property == failure.property);
    let mut i = current.len();
    while i > 0 {
        i -= 1;
        let mut candidate = current.clone();
        candidate.remove(i);
        if still_fails(&candidate) {
            current = candidate;
        }
    }
    current
}

fn snapshot(heap: &Heap<i64>) -> Vec<(i64, usize, u32)> {
    let mut out = Vec::with_capacity(heap.size());
    let mut stack = vec![heap];
    while let Some(h) = stack.pop() {
        if let Some(node) = h.node() {
            out.push((*node.element(), node.size(), node.height()));
            stack.push(node.right());
            stack.push(node.left());
        }
    }
    out
}

/// Runs every property with the given seed and op budget.
pub fn run_check(seed: u64, ops: usize, order: CheckedOrder) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut properties = Vec::new();
    let mut counterexample = None;

    let samples: Vec<i64> = (0..ops.min(24)).map(|_| rng.random_range(-5..=5)).collect();
    properties.push(PropertyResult {
        name: "ordering-laws",
        failure: (!is_total_order(&order, &samples))
            .then(|| "comparator is not a total order".to_string()),
    });

    let script = random_ops(&mut rng, ops);
    let step = replay(&script, order);
    for name in [
        "differential",
        "invariants",
        "path-length",
        "allocation-bound",
    ] {
        let failure = step
            .as_ref()
            .filter(|f| f.property == name)
            .map(|f| format!("step {}: {}", f.step, f.detail));
        properties.push(PropertyResult { name, failure });
    }
    if let Some(f) = &step {
        counterexample = Some(shrink(&script, order, f));
    }

    properties.push(PropertyResult {
        name: "persistence",
        failure: check_persistence(&script, order),
    });

    let trials = ops.div_ceil(200);
    let mut heapify_failure = None;
    let mut sort_failure = None;
    for trial in 0..trials {
        let len = rng.random_range(0..=512);
        let items: Vec<i64> = (0..len).map(|_| rng.random_range(-100..=100)).collect();
        let h = heapify(items.clone(), &order);
        if heapify_failure.is_none()
            && (multiset_of(&h) != multiset(&items)
                || shape_of(&h) != level_order_shape(len)
                || !check_heap_order(&h, &Natural))
        {
            heapify_failure = Some(format!("trial {trial}: input of length {len}"));
        }

        let len = rng.random_range(0..=64);
        let items: Vec<i64> = (0..len).map(|_| rng.random()).collect();
        let mut h = heapify(items.clone(), &order);
        let mut drained = Vec::with_capacity(len);
        while let Ok(&m) = h.minimum() {
            drained.push(m);
            h = remove(&h, &order).expect("non-empty");
        }
        if sort_failure.is_none() && drained != multiset(&items) {
            sort_failure = Some(format!("trial {trial}: {items:?} drained as {drained:?}"));
        }
    }
    properties.push(PropertyResult {
        name: "heapify",
        failure: heapify_failure,
    });
    properties.push(PropertyResult {
        name: "heapsort",
        failure: sort_failure,
    });

    CheckReport {
        properties,
        counterexample,
    }
}

/// Captures structural snapshots of versions along the script and verifies
/// none changed after all later versions were derived.
fn check_persistence(script: &[Op], order: CheckedOrder) -> Option<String> {
    let mut heap = Heap::Leaf;
    let mut kept = Vec::new();
    for (step, op) in script.iter().enumerate() {
        heap = match *op {
            Op::Insert(x) => insert_observed(&heap, x, &order, &mut ()),
            Op::Remove => remove(&heap, &order).unwrap_or(heap),
        };
        if step % 97 == 0 {
            kept.push((step, heap.clone(), snapshot(&heap)));
        }
    }
    kept.into_iter()
        .find(|(_, version, before)| snapshot(version) != *before)
        .map(|(step, _, _)| format!("version after step {step} changed"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clean_run_passes() {
        let report = run_check(42, 2000, CheckedOrder::default());
        assert!(report.all_passed(), "{report}");
        assert!(report.counterexample.is_none());
    }

    #[test]
    fn zero_ops_is_vacuous() {
        let report = run_check(1, 0, CheckedOrder::default());
        assert!(report.all_passed());
    }

    #[test]
    fn flipped_comparison_is_caught_with_small_counterexample() {
        let report = run_check(42, 1000, CheckedOrder { flipped: true });
        assert!(!report.all_passed());
        let ops = report.counterexample.expect("counterexample");
        assert!(!ops.is_empty() && ops.len() <= 4, "{ops:?}");
        assert!(replay(&ops, CheckedOrder { flipped: true }).is_some());
        assert!(replay(&ops, CheckedOrder::default()).is_none());
    }

    #[test]
    fn log_bound() {
        assert_eq!(floor_log2_plus_one(0), 0);
        assert_eq!(floor_log2_plus_one(1), 1);
        assert_eq!(floor_log2_plus_one(7), 3);
        assert_eq!(floor_log2_plus_one(8), 4);
    }

    #[test]
    fn op_display() {
        assert_eq!(Op::Insert(-3).to_string(), "insert -3");
        assert_eq!(Op::Remove.to_string(), "remove");
    }
}
