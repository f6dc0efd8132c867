use super::build::bubble_down_parts;
use super::Parts;
use crate::compare::Comparator;
use crate::error::HeapError;
use crate::heap::Heap;
use crate::observe::{Event, Observer};

/// Lifts the root of `left` into the parent slot and parks `x` in its place,
/// without comparing anything.
pub fn float_left<E: Clone>(x: E, left: &Heap<E>, right: &Heap<E>) -> Heap<E> {
    float_left_parts(x, Parts::of(left), right.clone(), &mut (), 1).build(&mut (), 1)
}

/// Mirror image of [`float_left`].
pub fn float_right<E: Clone>(x: E, left: &Heap<E>, right: &Heap<E>) -> Heap<E> {
    float_right_parts(x, left.clone(), Parts::of(right), &mut (), 1).build(&mut (), 1)
}

fn float_left_parts<E, O: Observer>(
    x: E,
    left: Option<Parts<E>>,
    right: Heap<E>,
    obs: &mut O,
    depth: u32,
) -> Parts<E> {
    match left {
        Some(l) => {
            let parked = Parts::new(x, l.left, l.right).build(obs, depth + 1);
            Parts::new(l.element, parked, right)
        }
        None => Parts::new(x, Heap::Leaf, right),
    }
}

fn float_right_parts<E, O: Observer>(
    x: E,
    left: Heap<E>,
    right: Option<Parts<E>>,
    obs: &mut O,
    depth: u32,
) -> Parts<E> {
    match right {
        Some(r) => {
            let parked = Parts::new(x, r.left, r.right).build(obs, depth + 1);
            Parts::new(r.element, left, parked)
        }
        None => Parts::new(x, left, Heap::Leaf),
    }
}

/// Joins the two children of a deleted root into one complete tree by
/// detaching the last node of the bottom level and floating it up to the
/// root position.
///
/// Only heap order at the root of the result may be violated. The inputs
/// must be the two children of a complete heap; this is an internal step of
/// [`remove`] exposed for testing.
pub fn merge_children<E: Clone>(left: &Heap<E>, right: &Heap<E>) -> Heap<E> {
    merge_children_observed(left, right, &mut ())
}

pub fn merge_children_observed<E: Clone, O: Observer>(
    left: &Heap<E>,
    right: &Heap<E>,
    obs: &mut O,
) -> Heap<E> {
    match merge_parts(left, right, obs, 1) {
        Some(parts) => parts.build(obs, 1),
        None => Heap::Leaf,
    }
}

/// `depth` is the level of `left` and `right`.
fn merge_parts<E: Clone, O: Observer>(
    left: &Heap<E>,
    right: &Heap<E>,
    obs: &mut O,
    depth: u32,
) -> Option<Parts<E>> {
    if left.is_empty() && right.is_empty() {
        return None;
    }
    // The last node is on the left while the left subtree is incomplete, or
    // when both are perfect but the bottom level stops at the left edge.
    let take_left = !left.is_perfect() || (right.is_perfect() && right.height() < left.height());
    if take_left {
        let node = left
            .node()
            .expect("an incomplete or taller subtree is non-empty");
        obs.on_event(Event::Visit, depth);
        let merged = merge_parts(node.left(), node.right(), obs, depth + 1);
        Some(float_left_parts(
            node.element().clone(),
            merged,
            right.clone(),
            obs,
            depth,
        ))
    } else {
        let node = right.node().expect("right subtree holds the last node");
        obs.on_event(Event::Visit, depth);
        let merged = merge_parts(node.left(), node.right(), obs, depth + 1);
        Some(float_right_parts(
            node.element().clone(),
            left.clone(),
            merged,
            obs,
            depth,
        ))
    }
}

/// Returns a new heap without one occurrence of the minimum.
///
/// The last node replaces the root (first walk) and is then sunk with
/// bubble-down (second walk). `heap` itself is untouched.
pub fn remove<E: Clone, C: Comparator<E>>(heap: &Heap<E>, cmp: &C) -> Result<Heap<E>, HeapError> {
    remove_observed(heap, cmp, &mut ())
}

pub fn remove_observed<E: Clone, C: Comparator<E>, O: Observer>(
    heap: &Heap<E>,
    cmp: &C,
    obs: &mut O,
) -> Result<Heap<E>, HeapError> {
    let root = heap.node().ok_or(HeapError::Empty)?;
    obs.on_event(Event::Visit, 1);
    Ok(match merge_parts(root.left(), root.right(), obs, 2) {
        None => Heap::Leaf,
        Some(g) => bubble_down_parts(g.element, g.left, g.right, cmp, obs, 1).build(obs, 1),
    })
}
