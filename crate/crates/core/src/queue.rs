use std::fmt;

use crate::compare::{Comparator, Natural};
use crate::error::HeapError;
use crate::heap::Heap;
use crate::update;

/// A heap bundled with the comparator of its lineage.
///
/// Every method returns a new value and leaves `self` as it was, so old
/// versions stay usable. Cloning is O(1).
#[derive(Clone)]
pub struct PersistentHeap<E, C = Natural> {
    root: Heap<E>,
    cmp: C,
}

impl<E: Ord + Clone> PersistentHeap<E, Natural> {
    pub fn new() -> Self {
        Self::with_comparator(Natural)
    }
}

impl<E: Ord + Clone> Default for PersistentHeap<E, Natural> {
    fn default() -> Self {
        Self::new()
    }
}

impl<E: Clone, C: Comparator<E> + Clone> PersistentHeap<E, C> {
    pub fn with_comparator(cmp: C) -> Self {
        PersistentHeap {
            root: Heap::Leaf,
            cmp,
        }
    }

    /// Linear-time construction.
    pub fn from_vec_with(items: Vec<E>, cmp: C) -> Self {
        let root = update::heapify(items, &cmp);
        PersistentHeap { root, cmp }
    }

    pub fn insert(&self, x: E) -> Self {
        self.derive(update::insert(&self.root, x, &self.cmp))
    }

    pub fn remove(&self) -> Result<Self, HeapError> {
        update::remove(&self.root, &self.cmp).map(|root| self.derive(root))
    }

    /// The minimum and the heap without it.
    pub fn pop(&self) -> Result<(E, Self), HeapError> {
        let min = self.minimum()?.clone();
        Ok((min, self.remove()?))
    }

    pub fn minimum(&self) -> Result<&E, HeapError> {
        self.root.minimum()
    }

    pub fn len(&self) -> usize {
        self.root.size()
    }

    pub fn is_empty(&self) -> bool {
        self.root.is_empty()
    }

    pub fn height(&self) -> u32 {
        self.root.height()
    }

    pub fn root(&self) -> &Heap<E> {
        &self.root
    }

    pub fn comparator(&self) -> &C {
        &self.cmp
    }

    /// Elements in ascending order, by repeated removal.
    pub fn into_sorted_vec(self) -> Vec<E> {
        let mut out = Vec::with_capacity(self.len());
        let mut heap = self;
        while let Ok((min, rest)) = heap.pop() {
            out.push(min);
            heap = rest;
        }
        out
    }

    fn derive(&self, root: Heap<E>) -> Self {
        PersistentHeap {
            root,
            cmp: self.cmp.clone(),
        }
    }
}

impl<E: Ord + Clone> FromIterator<E> for PersistentHeap<E, Natural> {
    fn from_iter<I: IntoIterator<Item = E>>(iter: I) -> Self {
        Self::from_vec_with(iter.into_iter().collect(), Natural)
    }
}

impl<E: fmt::Debug, C> fmt::Debug for PersistentHeap<E, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PersistentHeap")
            .field("root", &self.root)
            .finish()
    }
}
