#![no_main]

use alcove_spin::codec::{decode_set, set_value};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(set) = decode_set(text) {
        let again = decode_set(&set_value(&set).to_string()).expect("re-encoded set decodes");
        assert_eq!(again, set);
    }
});
