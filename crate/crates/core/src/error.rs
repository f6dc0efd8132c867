use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum HeapError {
    /// `minimum` or `remove` was called on an empty heap.
    #[error("operation requires a non-empty heap")]
    Empty,
}
