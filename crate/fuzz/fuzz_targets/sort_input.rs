#![no_main]

use libfuzzer_sys::fuzz_target;
use pbheap_cli::{heap_sort, parse_integers};

fuzz_target!(|data: &[u8]| {
    let Ok(values) = parse_integers(data) else {
        return;
    };
    let mut expected = values.clone();
    expected.sort_unstable();
    assert_eq!(heap_sort(values), expected);
});
