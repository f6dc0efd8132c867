use std::sync::Arc;

use crate::error::HeapError;

/// A persistent binary tree node store.
///
/// `Leaf` is the empty heap. A `Branch` owns one element and two shared
/// subtrees, and caches the node count and level count of the subtree it
/// roots. Nodes are never mutated once built; every update produces fresh
/// nodes along one root-to-leaf path and reuses everything else.
#[derive(Debug, Default, PartialEq, Eq)]
pub enum Heap<E> {
    #[default]
    Leaf,
    Branch(Arc<Node<E>>),
}

#[derive(Debug, PartialEq, Eq)]
pub struct Node<E> {
    element: E,
    left: Heap<E>,
    right: Heap<E>,
    size: usize,
    height: u32,
}

impl<E> Clone for Heap<E> {
    fn clone(&self) -> Self {
        match self {
            Heap::Leaf => Heap::Leaf,
            Heap::Branch(node) => Heap::Branch(Arc::clone(node)),
        }
    }
}

impl<E> Node<E> {
    pub fn element(&self) -> &E {
        &self.element
    }

    pub fn left(&self) -> &Heap<E> {
        &self.left
    }

    pub fn right(&self) -> &Heap<E> {
        &self.right
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn height(&self) -> u32 {
        self.height
    }
}

impl<E> Heap<E> {
    /// The empty heap.
    pub const fn leaf() -> Self {
        Heap::Leaf
    }

    /// Smart constructor: the only way to build a `Branch`.
    ///
    /// Computes the cached size and height from the children. Heap order is
    /// not checked here; that is the caller's responsibility.
    pub fn branch(element: E, left: Heap<E>, right: Heap<E>) -> Self {
        let size = left.size() + right.size() + 1;
        let height = left.height().max(right.height()) + 1;
        Heap::Branch(Arc::new(Node {
            element,
            left,
            right,
            size,
            height,
        }))
    }

    /// Builds a node with arbitrary cached fields, for exercising the cache
    /// checker.
    #[cfg(test)]
    pub(crate) fn branch_with_caches(
        element: E,
        left: Heap<E>,
        right: Heap<E>,
        size: usize,
        height: u32,
    ) -> Self {
        Heap::Branch(Arc::new(Node {
            element,
            left,
            right,
            size,
            height,
        }))
    }

    pub fn singleton(element: E) -> Self {
        Self::branch(element, Heap::Leaf, Heap::Leaf)
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Heap::Leaf)
    }

    pub fn node(&self) -> Option<&Node<E>> {
        match self {
            Heap::Leaf => None,
            Heap::Branch(node) => Some(node),
        }
    }

    /// The root element, which is the least element stored.
    pub fn minimum(&self) -> Result<&E, HeapError> {
        self.node().map(Node::element).ok_or(HeapError::Empty)
    }

    /// Root element without the error wrapper.
    pub fn peek(&self) -> Option<&E> {
        self.node().map(Node::element)
    }

    pub fn left(&self) -> Option<&Heap<E>> {
        self.node().map(Node::left)
    }

    pub fn right(&self) -> Option<&Heap<E>> {
        self.node().map(Node::right)
    }

    pub fn size(&self) -> usize {
        self.node().map_or(0, Node::size)
    }

    pub fn len(&self) -> usize {
        self.size()
    }

    /// Levels in the tree: 0 for `Leaf`, 1 for a singleton.
    pub fn height(&self) -> u32 {
        self.node().map_or(0, Node::height)
    }

    /// True iff every level is full, i.e. `size == 2^height - 1`.
    pub fn is_perfect(&self) -> bool {
        is_perfect_count(self.size(), self.height())
    }

    /// Two heaps share their root node (same allocation).
    pub fn ptr_eq(&self, other: &Heap<E>) -> bool {
        match (self, other) {
            (Heap::Leaf, Heap::Leaf) => true,
            (Heap::Branch(a), Heap::Branch(b)) => Arc::ptr_eq(a, b),
            _ => false,
        }
    }

    /// Pre-order traversal of the stored elements.
    pub fn iter(&self) -> Iter<'_, E> {
        let mut stack = Vec::new();
        if let Some(node) = self.node() {
            stack.push(node);
        }
        Iter { stack }
    }
}

pub(crate) fn is_perfect_count(size: usize, height: u32) -> bool {
    // Exact integer test; a u128 shift covers every height a usize-sized
    // tree can reach.
    if height >= 128 {
        return false;
    }
    size as u128 == (1u128 << height) - 1
}

pub struct Iter<'a, E> {
    stack: Vec<&'a Node<E>>,
}

impl<'a, E> Iterator for Iter<'a, E> {
    type Item = &'a E;

    fn next(&mut self) -> Option<&'a E> {
        let node = self.stack.pop()?;
        if let Some(right) = node.right.node() {
            self.stack.push(right);
        }
        if let Some(left) = node.left.node() {
            self.stack.push(left);
        }
        Some(&node.element)
    }
}

impl<'a, E> IntoIterator for &'a Heap<E> {
    type Item = &'a E;
    type IntoIter = Iter<'a, E>;

    fn into_iter(self) -> Iter<'a, E> {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: i32) -> Heap<i32> {
        Heap::singleton(x)
    }

    #[test]
    fn leaf_is_empty_with_zero_caches() {
        let h: Heap<i32> = Heap::leaf();
        assert!(h.is_empty());
        assert_eq!(h.size(), 0);
        assert_eq!(h.height(), 0);
        assert_eq!(h.minimum(), Err(HeapError::Empty));
        assert!(h.is_perfect());
    }

    #[test]
    fn smart_constructor_caches() {
        let one = s(5);
        assert_eq!((one.size(), one.height()), (1, 1));
        assert!(!one.is_empty());
        assert_eq!(one.minimum(), Ok(&5));

        let three = Heap::branch(1, s(2), s(3));
        assert_eq!((three.size(), three.height()), (3, 2));
        assert!(three.is_perfect());

        let two = Heap::branch(1, s(2), Heap::Leaf);
        assert_eq!((two.size(), two.height()), (2, 2));
        assert!(!two.is_perfect());
    }

    #[test]
    fn perfect_sizes() {
        let seven = Heap::branch(1, Heap::branch(2, s(4), s(5)), Heap::branch(3, s(6), s(7)));
        assert_eq!((seven.size(), seven.height()), (7, 3));
        assert!(seven.is_perfect());

        let four = Heap::branch(1, Heap::branch(2, s(4), Heap::Leaf), s(3));
        assert_eq!((four.size(), four.height()), (4, 3));
        assert!(!four.is_perfect());
    }

    #[test]
    fn perfect_count_is_exact_at_large_heights() {
        assert!(is_perfect_count(usize::MAX, 64));
        assert!(!is_perfect_count(usize::MAX - 1, 64));
        assert!(is_perfect_count((1usize << 53) - 1, 53));
        assert!(!is_perfect_count(1usize << 53, 53));
        assert!(!is_perfect_count(usize::MAX, 200));
    }

    #[test]
    fn children_are_shared_not_copied() {
        let child = s(2);
        let parent = Heap::branch(1, child.clone(), Heap::Leaf);
        assert!(parent.left().unwrap().ptr_eq(&child));
    }

    #[test]
    fn preorder_iteration() {
        let h = Heap::branch(1, Heap::branch(2, s(4), Heap::Leaf), s(3));
        let got: Vec<_> = h.iter().copied().collect();
        assert_eq!(got, vec![1, 2, 4, 3]);
    }

    #[test]
    fn default_is_leaf_without_element_bounds() {
        struct Opaque;
        assert!(Heap::<Opaque>::default().is_empty());
    }

    #[test]
    fn heaps_are_send_and_sync() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Heap<i64>>();
    }
}
