#![no_main]

use alcove_spin::Mu;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(mu) = Mu::parse(text) {
        assert_eq!(Mu::parse(mu.label()), Ok(mu));
    }
});
