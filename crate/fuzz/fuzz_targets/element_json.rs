#![no_main]

use alcove_spin::codec::{decode_element, encode_element};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(w) = decode_element(text) {
        let again = decode_element(&encode_element(&w)).expect("re-encoded element decodes");
        assert_eq!(again, w);
    }
});
