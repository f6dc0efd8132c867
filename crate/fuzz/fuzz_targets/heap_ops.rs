//! Decodes arbitrary bytes into an insert/remove script and replays it on
//! the persistent heap and the array oracle in lockstep.

#![no_main]

use libfuzzer_sys::arbitrary::{self, Arbitrary};
use libfuzzer_sys::fuzz_target;
use pbheap::{check_all, heapify, insert, remove, Heap, Natural};
use pbheap_oracle::{level_order_shape, multiset, multiset_of, shape_of, OracleHeap};

#[derive(Arbitrary, Debug)]
enum Op {
    Insert(i16),
    Remove,
}

#[derive(Arbitrary, Debug)]
struct Script {
    seed: Vec<i16>,
    ops: Vec<Op>,
}

fuzz_target!(|script: Script| {
    let start = heapify(script.seed.clone(), &Natural);
    assert!(check_all(&start, &Natural));
    assert_eq!(shape_of(&start), level_order_shape(script.seed.len()));
    assert_eq!(multiset_of(&start), multiset(&script.seed));

    let mut oracle: OracleHeap<i16> = script.seed.iter().copied().collect();
    let mut heap: Heap<i16> = start.clone();
    let frozen = multiset_of(&start);
    for op in script.ops {
        match op {
            Op::Insert(x) => {
                heap = insert(&heap, x, &Natural);
                oracle.insert(x);
            }
            Op::Remove => {
                let got = remove(&heap, &Natural);
                assert_eq!(got.is_ok(), oracle.delete_min().is_ok());
                if let Ok(next) = got {
                    heap = next;
                }
            }
        }
        assert_eq!(heap.minimum().ok(), oracle.min().ok());
        assert_eq!(heap.size(), oracle.len());
        assert!(check_all(&heap, &Natural));
    }
    assert_eq!(multiset_of(&start), frozen);
});
