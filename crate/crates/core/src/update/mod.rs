//! Copy-on-path updates: insertion, bottom-up construction and removal.
//!
//! Each operation walks a single root-to-leaf path, rebuilding the nodes on
//! it and sharing every subtree off it. Internally the recursion hands back
//! an unbuilt [`Parts`] triple instead of a finished node, so a node that the
//! caller would immediately take apart again (a swap during bubble-up, bubble
//! down or float) is never allocated. The observable results are identical
//! to building every intermediate node.

mod build;
mod insert;
mod remove;

pub use build::{bubble_down, bubble_down_observed, heapify, heapify_observed};
pub use insert::{bubble_up, bubble_up_observed, insert, insert_observed};
pub use remove::{
    float_left, float_right, merge_children, merge_children_observed, remove, remove_observed,
};

use std::cmp::Ordering;

use crate::compare::Comparator;
use crate::heap::Heap;
use crate::observe::{Event, Observer};

/// Element and children of a node that has not been allocated yet.
struct Parts<E> {
    element: E,
    left: Heap<E>,
    right: Heap<E>,
}

impl<E> Parts<E> {
    fn new(element: E, left: Heap<E>, right: Heap<E>) -> Self {
        Parts {
            element,
            left,
            right,
        }
    }

    fn build<O: Observer>(self, obs: &mut O, depth: u32) -> Heap<E> {
        obs.on_event(Event::Allocate, depth);
        Heap::branch(self.element, self.left, self.right)
    }
}

impl<E: Clone> Parts<E> {
    /// Shallow copy of an existing branch: clones the element, shares the
    /// children.
    fn of(heap: &Heap<E>) -> Option<Self> {
        heap.node()
            .map(|n| Parts::new(n.element().clone(), n.left().clone(), n.right().clone()))
    }
}

/// A child slot that is either an existing heap or a freshly computed,
/// not yet allocated node.
enum Sub<E> {
    Built(Heap<E>),
    Pending(Parts<E>),
}

impl<E: Clone> Sub<E> {
    fn root(&self) -> Option<&E> {
        match self {
            Sub::Built(h) => h.peek(),
            Sub::Pending(p) => Some(&p.element),
        }
    }

    fn into_parts(self) -> Option<Parts<E>> {
        match self {
            Sub::Built(h) => Parts::of(&h),
            Sub::Pending(p) => Some(p),
        }
    }

    fn into_heap<O: Observer>(self, obs: &mut O, depth: u32) -> Heap<E> {
        match self {
            Sub::Built(h) => h,
            Sub::Pending(p) => p.build(obs, depth),
        }
    }
}

#[inline]
fn greater<E, C: Comparator<E>, O: Observer>(
    cmp: &C,
    obs: &mut O,
    depth: u32,
    a: &E,
    b: &E,
) -> bool {
    obs.on_event(Event::Compare, depth);
    cmp.compare(a, b) == Ordering::Greater
}

#[inline]
fn less<E, C: Comparator<E>, O: Observer>(cmp: &C, obs: &mut O, depth: u32, a: &E, b: &E) -> bool {
    obs.on_event(Event::Compare, depth);
    cmp.compare(a, b) == Ordering::Less
}
