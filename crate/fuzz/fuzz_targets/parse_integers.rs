#![no_main]

use libfuzzer_sys::fuzz_target;
use pbheap_cli::{format_integers, parse_integers};

fuzz_target!(|data: &[u8]| {
    if let Ok(values) = parse_integers(data) {
        let text = format_integers(&values);
        assert_eq!(parse_integers(text.as_bytes()).as_ref(), Ok(&values));
    }
});
