use pbheap::{heapify, remove, Natural};

/// Heapsort through the persistent heap: linear-time build, then repeated
/// minimum removal.
pub fn heap_sort(values: Vec<i64>) -> Vec<i64> {
    let mut out = Vec::with_capacity(values.len());
    let mut heap = heapify(values, &Natural);
    while let Ok(&min) = heap.minimum() {
        out.push(min);
        heap = remove(&heap, &Natural).expect("non-empty");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorts() {
        assert_eq!(heap_sort(vec![3, 1, 2]), vec![1, 2, 3]);
        assert_eq!(heap_sort(vec![]), Vec::<i64>::new());
        assert_eq!(
            heap_sort(vec![i64::MAX, 0, i64::MIN, 0]),
            vec![i64::MIN, 0, 0, i64::MAX]
        );
    }
}
