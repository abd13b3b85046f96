#![no_main]

use alcove_spin::codec::decode_signed_permutation;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(sigma) = decode_signed_permutation(text) {
        assert!(sigma
            .compose(&sigma.invert())
            .expect("same size")
            .is_identity());
    }
});
