//! Instrumentation hook.
//!
//! Every update operation has an `_observed` variant taking an [`Observer`].
//! The plain variants pass `&mut ()`, whose callback is empty and inlines
//! away.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Event {
    /// One call to the comparator.
    Compare,
    /// One `Branch` node built by the smart constructor.
    Allocate,
    /// The recursion entered an existing node at the given tree level.
    Visit,
}

/// Receives `(event, depth)` callbacks. `depth` is the 1-based tree level
/// the operation is working at when the event fires.
pub trait Observer {
    fn on_event(&mut self, event: Event, depth: u32);
}

impl Observer for () {
    #[inline(always)]
    fn on_event(&mut self, _event: Event, _depth: u32) {}
}

impl<O: Observer + ?Sized> Observer for &mut O {
    #[inline]
    fn on_event(&mut self, event: Event, depth: u32) {
        (**self).on_event(event, depth)
    }
}
