//! Structural invariant checkers.
//!
//! These walk the whole tree and recompute everything from scratch; they
//! never trust the cached `size`/`height` fields.

use std::cmp::Ordering;

use crate::compare::Comparator;
use crate::heap::{is_perfect_count, Heap};

/// True iff the tree is complete: every level full except possibly the
/// last, which is filled from the left.
pub fn check_shape<E>(heap: &Heap<E>) -> bool {
    shape_of(heap).is_some()
}

/// Recomputed `(height, perfect)` for a complete tree, `None` otherwise.
fn shape_of<E>(heap: &Heap<E>) -> Option<(u32, bool)> {
    let Some(node) = heap.node() else {
        return Some((0, true));
    };
    let (lh, lp) = shape_of(node.left())?;
    let (rh, rp) = shape_of(node.right())?;
    let complete = (lp && lh == rh) || (rp && lh == rh + 1);
    complete.then_some((lh.max(rh) + 1, lp && rp && lh == rh))
}

/// True iff no child is strictly less than its parent under `cmp`.
pub fn check_heap_order<E, C: Comparator<E>>(heap: &Heap<E>, cmp: &C) -> bool {
    let Some(node) = heap.node() else {
        return true;
    };
    [node.left(), node.right()].into_iter().all(|child| {
        child
            .peek()
            .is_none_or(|c| cmp.compare(node.element(), c) != Ordering::Greater)
            && check_heap_order(child, cmp)
    })
}

/// True iff every cached size and height matches a bottom-up recount.
pub fn check_caches<E>(heap: &Heap<E>) -> bool {
    recount(heap).is_some()
}

fn recount<E>(heap: &Heap<E>) -> Option<(usize, u32)> {
    let Some(node) = heap.node() else {
        return Some((0, 0));
    };
    let (ls, lh) = recount(node.left())?;
    let (rs, rh) = recount(node.right())?;
    let size = ls + rs + 1;
    let height = lh.max(rh) + 1;
    (node.size() == size && node.height() == height).then_some((size, height))
}

/// Perfectness from recounted size and height, independent of the caches.
pub fn recomputed_is_perfect<E>(heap: &Heap<E>) -> bool {
    fn walk<E>(heap: &Heap<E>) -> (usize, u32) {
        match heap.node() {
            None => (0, 0),
            Some(node) => {
                let (ls, lh) = walk(node.left());
                let (rs, rh) = walk(node.right());
                (ls + rs + 1, lh.max(rh) + 1)
            }
        }
    }
    let (size, height) = walk(heap);
    is_perfect_count(size, height)
}

/// All three invariants at once.
pub fn check_all<E, C: Comparator<E>>(heap: &Heap<E>, cmp: &C) -> bool {
    check_caches(heap) && check_shape(heap) && check_heap_order(heap, cmp)
}
