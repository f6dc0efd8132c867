use itertools::Itertools;
use pbheap::{check_all, heapify, insert, remove, Heap, Natural};
use pbheap_oracle::{level_order_shape, multiset, multiset_of, shape_of, OracleHeap};
use proptest::prelude::*;

#[derive(Debug, Clone)]
enum Op {
    Insert(i32),
    Remove,
}

fn op() -> impl Strategy<Value = Op> {
    prop_oneof![(-20i32..20).prop_map(Op::Insert), Just(Op::Remove)]
}

fn drain(mut h: Heap<i32>) -> Vec<i32> {
    let mut out = Vec::new();
    while let Ok(&m) = h.minimum() {
        out.push(m);
        h = remove(&h, &Natural).unwrap();
        assert!(check_all(&h, &Natural));
    }
    out
}

#[test]
fn exhaustive_heapsort_up_to_seven() {
    let mut cases = 0;
    for n in 0..=7 {
        let sorted: Vec<i32> = (1..=n).collect();
        for perm in sorted.iter().copied().permutations(n as usize) {
            let mut h = Heap::Leaf;
            for &x in &perm {
                h = insert(&h, x, &Natural);
                assert!(check_all(&h, &Natural));
            }
            assert_eq!(drain(h), sorted);
            assert_eq!(drain(heapify(perm, &Natural)), sorted);
            cases += 1;
        }
    }
    assert_eq!(cases, 5914);
}

#[test]
fn heapify_shape_follows_level_order() {
    for n in 0..300 {
        let h = heapify((0..n as i32).rev().collect(), &Natural);
        assert_eq!(shape_of(&h), level_order_shape(n));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn heapsort_matches_sort(items in proptest::collection::vec(any::<i32>(), 0..=64)) {
        prop_assert_eq!(drain(heapify(items.clone(), &Natural)), multiset(&items));
    }
}

proptest! {
    #[test]
    fn interleaved_ops_match_oracle(ops in proptest::collection::vec(op(), 0..400)) {
        let mut heap = Heap::Leaf;
        let mut oracle = OracleHeap::new();
        for op in ops {
            match op {
                Op::Insert(x) => {
                    heap = insert(&heap, x, &Natural);
                    oracle.insert(x);
                }
                Op::Remove => {
                    let got = remove(&heap, &Natural);
                    let want = oracle.delete_min();
                    prop_assert_eq!(got.is_ok(), want.is_ok());
                    if let Ok(next) = got {
                        heap = next;
                    }
                }
            }
            prop_assert_eq!(heap.minimum().ok(), oracle.min().ok());
            prop_assert_eq!(heap.size(), oracle.len());
            prop_assert!(check_all(&heap, &Natural));
        }
        prop_assert_eq!(multiset_of(&heap), oracle.drain_sorted());
    }

    #[test]
    fn heapify_conserves_and_matches_shape(items in proptest::collection::vec(any::<i64>(), 0..1000)) {
        let h = heapify(items.clone(), &Natural);
        prop_assert!(check_all(&h, &Natural));
        prop_assert_eq!(shape_of(&h), level_order_shape(items.len()));
        prop_assert_eq!(multiset_of(&h), multiset(&items));
    }
}
