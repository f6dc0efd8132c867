//! A persistent binary min-heap.
//!
//! The heap is an immutable complete binary tree whose nodes cache their
//! subtree size and height. Those two numbers are enough to find the first
//! free slot (for insertion) and the last occupied slot (for removal) in
//! O(1) per level, so `insert` and `remove` run in O(log n) and rebuild
//! only the nodes on one path. `heapify` builds a heap from a vector in
//! O(n). Old versions remain valid and share structure with new ones.
//!
//! ```
//! use pbheap::{heapify, insert, remove, Natural};
//!
//! let h = heapify(vec![5, 3, 8, 1], &Natural);
//! let h2 = insert(&h, 0, &Natural);
//! let h3 = remove(&h2, &Natural).unwrap();
//! assert_eq!(h.minimum(), Ok(&1));
//! assert_eq!(h2.minimum(), Ok(&0));
//! assert_eq!(h3.minimum(), Ok(&1));
//! ```

pub mod check;
pub mod compare;
mod error;
mod heap;
pub mod observe;
mod queue;
pub mod update;

pub use check::{check_all, check_caches, check_heap_order, check_shape};
pub use compare::{Comparator, Natural, Reversed};
pub use error::HeapError;
pub use heap::{Heap, Iter, Node};
pub use observe::{Event, Observer};
pub use queue::PersistentHeap;
pub use update::{
    bubble_down, bubble_up, float_left, float_right, heapify, insert, merge_children, remove,
};
