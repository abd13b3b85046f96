#![no_main]

use alcove_spin::codec::{decode_certificate, encode_certificate};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(cert) = decode_certificate(text) {
        let again =
            decode_certificate(&encode_certificate(&cert)).expect("re-encoded certificate decodes");
        assert_eq!(again, cert);
    }
});
