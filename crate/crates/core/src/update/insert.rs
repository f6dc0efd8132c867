use super::{greater, Parts, Sub};
use crate::compare::Comparator;
use crate::heap::Heap;
use crate::observe::{Event, Observer};

/// Rebuilds a node from `x` and two children, swapping `x` with whichever
/// child root is smaller. The left child is tried first.
///
/// Only one level is fixed; the result is heap-ordered when at most one
/// child root is smaller than `x`.
pub fn bubble_up<E: Clone, C: Comparator<E>>(
    x: E,
    left: &Heap<E>,
    right: &Heap<E>,
    cmp: &C,
) -> Heap<E> {
    bubble_up_observed(x, left, right, cmp, &mut ())
}

pub fn bubble_up_observed<E: Clone, C: Comparator<E>, O: Observer>(
    x: E,
    left: &Heap<E>,
    right: &Heap<E>,
    cmp: &C,
    obs: &mut O,
) -> Heap<E> {
    let parts = bubble_up_parts(
        x,
        Sub::Built(left.clone()),
        Sub::Built(right.clone()),
        cmp,
        obs,
        1,
    );
    parts.build(obs, 1)
}

fn bubble_up_parts<E: Clone, C: Comparator<E>, O: Observer>(
    x: E,
    left: Sub<E>,
    right: Sub<E>,
    cmp: &C,
    obs: &mut O,
    depth: u32,
) -> Parts<E> {
    let below = depth + 1;
    if left.root().is_some_and(|y| greater(cmp, obs, depth, &x, y)) {
        let l = left.into_parts().expect("left root exists");
        let child = Parts::new(x, l.left, l.right).build(obs, below);
        return Parts::new(l.element, child, right.into_heap(obs, below));
    }
    if right
        .root()
        .is_some_and(|z| greater(cmp, obs, depth, &x, z))
    {
        let r = right.into_parts().expect("right root exists");
        let child = Parts::new(x, r.left, r.right).build(obs, below);
        return Parts::new(r.element, left.into_heap(obs, below), child);
    }
    Parts::new(x, left.into_heap(obs, below), right.into_heap(obs, below))
}

/// Returns a new heap holding the elements of `heap` plus `x`.
///
/// The new element goes into the first free slot of the last level and is
/// bubbled up along the path. `heap` itself is untouched; the result shares
/// every subtree off that path.
pub fn insert<E: Clone, C: Comparator<E>>(heap: &Heap<E>, x: E, cmp: &C) -> Heap<E> {
    insert_observed(heap, x, cmp, &mut ())
}

pub fn insert_observed<E: Clone, C: Comparator<E>, O: Observer>(
    heap: &Heap<E>,
    x: E,
    cmp: &C,
    obs: &mut O,
) -> Heap<E> {
    insert_parts(heap, x, cmp, obs, 1).build(obs, 1)
}

fn insert_parts<E: Clone, C: Comparator<E>, O: Observer>(
    heap: &Heap<E>,
    x: E,
    cmp: &C,
    obs: &mut O,
    depth: u32,
) -> Parts<E> {
    let Some(node) = heap.node() else {
        return Parts::new(x, Heap::Leaf, Heap::Leaf);
    };
    obs.on_event(Event::Visit, depth);
    let (left, right) = (node.left(), node.right());

    // Fill the left subtree until it is perfect, then the right one until
    // it catches up in height; a new level starts on the left.
    let go_left = !left.is_perfect() || (right.is_perfect() && right.height() >= left.height());

    let (l, r) = if go_left {
        (
            Sub::Pending(insert_parts(left, x, cmp, obs, depth + 1)),
            Sub::Built(right.clone()),
        )
    } else {
        (
            Sub::Built(left.clone()),
            Sub::Pending(insert_parts(right, x, cmp, obs, depth + 1)),
        )
    };
    bubble_up_parts(node.element().clone(), l, r, cmp, obs, depth)
}
