use pbheap::{Event, Observer};

/// Counts comparator calls, node allocations and the deepest tree level an
/// operation reached.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct OpCounters {
    pub comparisons: u64,
    pub branch_allocations: u64,
    pub max_recursion_depth: u32,
}

impl OpCounters {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn reset(&mut self) {
        *self = Self::default();
    }
}

impl Observer for OpCounters {
    fn on_event(&mut self, event: Event, depth: u32) {
        match event {
            Event::Compare => self.comparisons += 1,
            Event::Allocate => self.branch_allocations += 1,
            Event::Visit => self.max_recursion_depth = self.max_recursion_depth.max(depth),
        }
    }
}
