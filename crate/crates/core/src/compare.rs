//! Total orders over heap elements.
//!
//! A heap lineage fixes one comparator when it is created and every update
//! derived from it uses the same one. [`Natural`] gives a min-heap over an
//! `Ord` type; [`Reversed`] flips any comparator (a max-heap over `Natural`).
//! Any `Fn(&E, &E) -> Ordering` closure is also a comparator.

use std::cmp::Ordering;

pub trait Comparator<E> {
    fn compare(&self, a: &E, b: &E) -> Ordering;
}

/// The element type's own `Ord`.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct Natural;

impl<E: Ord> Comparator<E> for Natural {
    fn compare(&self, a: &E, b: &E) -> Ordering {
        a.cmp(b)
    }
}

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct Reversed<C>(pub C);

impl<E, C: Comparator<E>> Comparator<E> for Reversed<C> {
    fn compare(&self, a: &E, b: &E) -> Ordering {
        self.0.compare(b, a)
    }
}

impl<E, F> Comparator<E> for F
where
    F: Fn(&E, &E) -> Ordering,
{
    fn compare(&self, a: &E, b: &E) -> Ordering {
        self(a, b)
    }
}

/// Checks reflexivity, antisymmetry and transitivity of `cmp` over every
/// pair and triple drawn from `samples`. Cubic in `samples.len()`.
pub fn is_total_order<E, C: Comparator<E>>(cmp: &C, samples: &[E]) -> bool {
    for a in samples {
        if cmp.compare(a, a) != Ordering::Equal {
            return false;
        }
        for b in samples {
            let ab = cmp.compare(a, b);
            if ab != cmp.compare(b, a).reverse() {
                return false;
            }
            for c in samples {
                let bc = cmp.compare(b, c);
                // a <= b <= c implies a <= c, strictly if either step is strict.
                if ab != Ordering::Greater && bc != Ordering::Greater {
                    let ac = cmp.compare(a, c);
                    let strict = ab == Ordering::Less || bc == Ordering::Less;
                    if ac == Ordering::Greater || (strict && ac != Ordering::Less) {
                        return false;
                    }
                }
            }
        }
    }
    true
}
