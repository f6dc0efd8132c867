use super::{greater, less, Parts};
use crate::compare::Comparator;
use crate::heap::Heap;
use crate::observe::{Event, Observer};

/// Places `x` above two heap-ordered children, sinking it along the path of
/// smaller children until it is no greater than both.
///
/// The right child is taken only when its root is strictly smaller than the
/// left root; on a tie the descent goes left.
pub fn bubble_down<E: Clone, C: Comparator<E>>(
    x: E,
    left: &Heap<E>,
    right: &Heap<E>,
    cmp: &C,
) -> Heap<E> {
    bubble_down_observed(x, left, right, cmp, &mut ())
}

pub fn bubble_down_observed<E: Clone, C: Comparator<E>, O: Observer>(
    x: E,
    left: &Heap<E>,
    right: &Heap<E>,
    cmp: &C,
    obs: &mut O,
) -> Heap<E> {
    bubble_down_parts(x, left.clone(), right.clone(), cmp, obs, 1).build(obs, 1)
}

pub(super) fn bubble_down_parts<E: Clone, C: Comparator<E>, O: Observer>(
    x: E,
    left: Heap<E>,
    right: Heap<E>,
    cmp: &C,
    obs: &mut O,
    depth: u32,
) -> Parts<E> {
    obs.on_event(Event::Visit, depth);
    let below = depth + 1;
    if let (Some(l), Some(r)) = (left.node(), right.node()) {
        let (y, z) = (l.element(), r.element());
        if less(cmp, obs, depth, z, y) && greater(cmp, obs, depth, &x, z) {
            let z = z.clone();
            let sunk = bubble_down_parts(x, r.left().clone(), r.right().clone(), cmp, obs, below);
            return Parts::new(z, left, sunk.build(obs, below));
        }
    }
    if let Some(l) = left.node() {
        let y = l.element();
        if greater(cmp, obs, depth, &x, y) {
            let y = y.clone();
            let sunk = bubble_down_parts(x, l.left().clone(), l.right().clone(), cmp, obs, below);
            return Parts::new(y, sunk.build(obs, below), right);
        }
    }
    Parts::new(x, left, right)
}

/// Builds a heap from `items` in linear time.
///
/// Element `i` becomes the node whose children are built from elements
/// `2i + 1` and `2i + 2`, so the tree has the level-order shape of the input
/// and every subtree is fixed up bottom-up with [`bubble_down`].
pub fn heapify<E: Clone, C: Comparator<E>>(items: Vec<E>, cmp: &C) -> Heap<E> {
    heapify_observed(items, cmp, &mut ())
}

pub fn heapify_observed<E: Clone, C: Comparator<E>, O: Observer>(
    items: Vec<E>,
    cmp: &C,
    obs: &mut O,
) -> Heap<E> {
    let mut slots: Vec<Option<E>> = items.into_iter().map(Some).collect();
    build(&mut slots, 0, cmp, obs, 1)
}

fn build<E: Clone, C: Comparator<E>, O: Observer>(
    slots: &mut [Option<E>],
    index: usize,
    cmp: &C,
    obs: &mut O,
    depth: u32,
) -> Heap<E> {
    if index >= slots.len() {
        return Heap::Leaf;
    }
    let left = build(slots, 2 * index + 1, cmp, obs, depth + 1);
    let right = build(slots, 2 * index + 2, cmp, obs, depth + 1);
    let x = slots[index].take().expect("each slot is consumed once");
    bubble_down_parts(x, left, right, cmp, obs, depth).build(obs, depth)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::check_all;
    use crate::compare::{Natural, Reversed};
    use crate::update::test_support::{b, leaf, s};
    use proptest::prelude::*;

    #[test]
    fn bubble_down_at_frontier() {
        assert_eq!(bubble_down(9, &leaf(), &leaf(), &Natural), s(9));
    }

    #[test]
    fn bubble_down_goes_left_when_left_is_smaller() {
        let h = bubble_down(4, &s(2), &s(3), &Natural);
        assert_eq!(h, b(2, s(4), s(3)));
    }

    #[test]
    fn bubble_down_goes_right_when_right_is_smaller() {
        let h = bubble_down(4, &s(3), &s(2), &Natural);
        assert_eq!(h, b(2, s(3), s(4)));
    }

    #[test]
    fn bubble_down_tie_prefers_left() {
        let h = bubble_down(5, &s(1), &s(1), &Natural);
        assert_eq!(h, b(1, s(5), s(1)));
    }

    #[test]
    fn bubble_down_equal_key_does_not_swap() {
        let h = bubble_down(2, &s(2), &s(3), &Natural);
        assert_eq!(h, b(2, s(2), s(3)));
    }

    #[test]
    fn bubble_down_sinks_multiple_levels() {
        let left = b(2, s(5), s(4));
        let h = bubble_down(9, &left, &s(3), &Natural);
        assert_eq!(h, b(2, b(4, s(5), s(9)), s(3)));
        assert!(check_all(&h, &Natural));
    }

    #[test]
    fn heapify_small_inputs() {
        assert_eq!(heapify(Vec::<i32>::new(), &Natural), leaf());
        assert_eq!(heapify(vec![7], &Natural), s(7));
        assert_eq!(heapify(vec![2, 1], &Natural), b(1, s(2), leaf()));
        let h = heapify(vec![1, 2, 3], &Natural);
        assert!(!h.is_empty());
        assert_eq!(h.size(), 3);
    }

    #[test]
    fn heapify_with_reversed_order_is_a_max_heap() {
        let h = heapify(vec![3, 9, 1, 4], &Reversed(Natural));
        assert_eq!(h.minimum(), Ok(&9));
        assert!(check_all(&h, &Reversed(Natural)));
    }

    proptest! {
        #[test]
        fn heapify_is_valid_and_conserves(items in proptest::collection::vec(-50i32..50, 0..200)) {
            let h = heapify(items.clone(), &Natural);
            prop_assert!(check_all(&h, &Natural));
            let mut got: Vec<_> = h.iter().copied().collect();
            let mut want = items;
            got.sort();
            want.sort();
            prop_assert_eq!(got, want);
        }
    }
}
