//! Reference implementations used as ground truth for `pbheap`.
//!
//! [`OracleHeap`] is the textbook mutable array heap with sift-up and
//! sift-down. It shares no code with the persistent heap and compares with
//! `Ord` directly. [`level_order_shape`] derives the complete-tree shape of
//! `n` nodes from array index arithmetic alone, and [`multiset_of`] flattens
//! a persistent heap for conservation checks.

use pbheap::Heap;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("oracle heap is empty")]
pub struct EmptyOracle;

/// Array-backed binary min-heap in level order.
#[derive(Debug, Clone, Default)]
pub struct OracleHeap<E> {
    slots: Vec<E>,
}

impl<E: Ord> OracleHeap<E> {
    pub fn new() -> Self {
        OracleHeap { slots: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn min(&self) -> Result<&E, EmptyOracle> {
        self.slots.first().ok_or(EmptyOracle)
    }

    pub fn insert(&mut self, x: E) {
        self.slots.push(x);
        let mut i = self.slots.len() - 1;
        while i > 0 {
            let parent = (i - 1) / 2;
            if self.slots[parent] <= self.slots[i] {
                break;
            }
            self.slots.swap(parent, i);
            i = parent;
        }
    }

    pub fn delete_min(&mut self) -> Result<E, EmptyOracle> {
        if self.slots.is_empty() {
            return Err(EmptyOracle);
        }
        let min = self.slots.swap_remove(0);
        let n = self.slots.len();
        let mut i = 0;
        loop {
            let (l, r) = (2 * i + 1, 2 * i + 2);
            let mut smallest = i;
            if l < n && self.slots[l] < self.slots[smallest] {
                smallest = l;
            }
            if r < n && self.slots[r] < self.slots[smallest] {
                smallest = r;
            }
            if smallest == i {
                break;
            }
            self.slots.swap(i, smallest);
            i = smallest;
        }
        Ok(min)
    }

    /// Parent-not-greater-than-child over the whole array.
    pub fn is_valid(&self) -> bool {
        (1..self.slots.len()).all(|i| self.slots[(i - 1) / 2] <= self.slots[i])
    }

    pub fn drain_sorted(mut self) -> Vec<E> {
        let mut out = Vec::with_capacity(self.len());
        while let Ok(x) = self.delete_min() {
            out.push(x);
        }
        out
    }
}

impl<E: Ord> FromIterator<E> for OracleHeap<E> {
    fn from_iter<I: IntoIterator<Item = E>>(iter: I) -> Self {
        let mut heap = OracleHeap::new();
        for x in iter {
            heap.insert(x);
        }
        heap
    }
}

/// Shape of a binary tree, ignoring elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Shape {
    Empty,
    Node(Box<Shape>, Box<Shape>),
}

impl Shape {
    pub fn size(&self) -> usize {
        match self {
            Shape::Empty => 0,
            Shape::Node(l, r) => l.size() + r.size() + 1,
        }
    }

    /// Sizes of the two subtrees under the root, `None` for the empty shape.
    pub fn split(&self) -> Option<(usize, usize)> {
        match self {
            Shape::Empty => None,
            Shape::Node(l, r) => Some((l.size(), r.size())),
        }
    }
}

/// The complete-tree shape on `n` nodes: node `i` has children `2i + 1` and
/// `2i + 2` when those indices are below `n`.
pub fn level_order_shape(n: usize) -> Shape {
    fn at(i: usize, n: usize) -> Shape {
        if i >= n {
            Shape::Empty
        } else {
            Shape::Node(Box::new(at(2 * i + 1, n)), Box::new(at(2 * i + 2, n)))
        }
    }
    at(0, n)
}

pub fn shape_of<E>(heap: &Heap<E>) -> Shape {
    match heap.node() {
        None => Shape::Empty,
        Some(node) => Shape::Node(
            Box::new(shape_of(node.left())),
            Box::new(shape_of(node.right())),
        ),
    }
}

/// Every element stored in `heap`, sorted ascending.
pub fn multiset_of<E: Ord + Clone>(heap: &Heap<E>) -> Vec<E> {
    let mut out: Vec<E> = heap.iter().cloned().collect();
    out.sort();
    out
}

/// Sorted copy of `items`.
pub fn multiset<E: Ord + Clone>(items: &[E]) -> Vec<E> {
    let mut out = items.to_vec();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sorted_drain() {
        let mut o = OracleHeap::new();
        for x in [3, 1, 2] {
            o.insert(x);
        }
        assert_eq!(o.delete_min(), Ok(1));
        assert_eq!(o.delete_min(), Ok(2));
        assert_eq!(o.delete_min(), Ok(3));
        assert_eq!(o.delete_min(), Err(EmptyOracle));
    }

    #[test]
    fn min_access() {
        let mut o = OracleHeap::new();
        assert_eq!(o.min(), Err(EmptyOracle));
        o.insert(5);
        assert_eq!(o.min(), Ok(&5));
        assert_eq!(o.len(), 1);
    }

    #[test]
    fn shapes() {
        assert_eq!(level_order_shape(0), Shape::Empty);
        assert_eq!(level_order_shape(0).split(), None);
        assert_eq!(level_order_shape(4).split(), Some((2, 1)));
        assert_eq!(level_order_shape(7).split(), Some((3, 3)));
        assert_eq!(level_order_shape(5).split(), Some((3, 1)));
        for n in 0..100 {
            assert_eq!(level_order_shape(n).size(), n);
        }
    }

    #[test]
    fn multisets() {
        assert!(multiset_of::<i32>(&Heap::Leaf).is_empty());
        assert_eq!(multiset_of(&Heap::singleton(7)), vec![7]);
        let h = Heap::branch(1, Heap::singleton(3), Heap::singleton(1));
        assert_eq!(multiset_of(&h), vec![1, 1, 3]);
    }

    proptest! {
        #[test]
        fn drain_is_nondecreasing(items in proptest::collection::vec(any::<i16>(), 0..300)) {
            let o: OracleHeap<_> = items.iter().copied().collect();
            prop_assert!(o.is_valid());
            let drained = o.drain_sorted();
            prop_assert!(drained.windows(2).all(|w| w[0] <= w[1]));
            prop_assert_eq!(drained, multiset(&items));
        }
    }
}
