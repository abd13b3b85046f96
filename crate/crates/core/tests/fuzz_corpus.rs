//! Replays the checked-in fuzz seeds through the decoders with the same
//! properties the fuzz targets assert.

use std::fs;
use std::path::PathBuf;

use alcove_spin::codec::{
    decode_certificate, decode_element, decode_extended_alcove, decode_set,
    decode_signed_permutation, encode_certificate, encode_element, set_value,
};
use alcove_spin::{IwElement, Mu};

/// Seeds of one target, as `(file name, contents)`.
fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut out: Vec<(String, String)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|entry| {
            let path = entry.unwrap().path();
            let name = path.file_name().unwrap().to_string_lossy().into_owned();
            (name, fs::read_to_string(&path).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

/// Counts accepted seeds, checking that the round trip of each is stable.
fn replay<T: PartialEq + std::fmt::Debug>(
    target: &str,
    decode: impl Fn(&str) -> Option<T>,
    encode: impl Fn(&T) -> String,
) -> usize {
    let mut accepted = 0;
    for (name, text) in seeds(target) {
        if let Some(x) = decode(&text) {
            assert_eq!(decode(&encode(&x)).as_ref(), Some(&x), "{target}/{name}");
            accepted += 1;
        }
    }
    accepted
}

#[test]
fn element_seeds() {
    assert_eq!(
        replay("element_json", |t| decode_element(t).ok(), encode_element),
        4
    );
}

#[test]
fn element_set_seeds() {
    let n = replay(
        "element_set_json",
        |t| decode_set(t).ok(),
        |s| set_value(s).to_string(),
    );
    assert_eq!(n, 3);
}

#[test]
fn certificate_seeds() {
    let n = replay(
        "certificate_json",
        |t| decode_certificate(t).ok(),
        encode_certificate,
    );
    assert_eq!(n, 6);
}

#[test]
fn extended_alcove_seeds() {
    let mut accepted = 0;
    for (name, text) in seeds("extended_alcove") {
        if let Ok(alcove) = decode_extended_alcove(&text) {
            let w = IwElement::from_extended_alcove(&alcove).unwrap();
            assert_eq!(w.to_extended_alcove(), alcove, "{name}");
            accepted += 1;
        }
    }
    assert_eq!(accepted, 3);
}

#[test]
fn signed_permutation_seeds() {
    let n = replay(
        "signed_permutation",
        |t| decode_signed_permutation(t).ok(),
        |s| format!("{:?}", s.one_line()),
    );
    assert_eq!(n, 4);
}

#[test]
fn mu_label_seeds() {
    let n = replay("mu_label", |t| Mu::parse(t).ok(), |m| m.label().to_string());
    assert_eq!(n, 2);
}
