#![no_main]

use alcove_spin::codec::decode_extended_alcove;
use alcove_spin::IwElement;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(alcove) = decode_extended_alcove(text) {
        let w = IwElement::from_extended_alcove(&alcove).expect("valid alcoves come from elements");
        assert_eq!(w.to_extended_alcove(), alcove);
    }
});
