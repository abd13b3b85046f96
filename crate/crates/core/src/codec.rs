//! JSON encoding of elements, sets and ascent certificates, and the text
//! decoders used by the command-line tool.
//!
//! Every decoder validates its input completely and never panics.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::admissibility::AscentCertificate;
use crate::iwahori_weyl::{ExtendedAlcove, IwElement};
use crate::length_bruhat::AffineRoot;
use crate::root_datum::{Cocharacter, Mu, SignedPermutation};
use crate::{Error, Result};

/// Largest coordinate accepted from external input.
const MAX_COORD: i64 = 1 << 32;

/// Largest `n` accepted for certificates, whose checks compute lengths.
const MAX_CERT_N: usize = 16;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ElementJson {
    t: Vec<i64>,
    perm: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RootJson {
    i: usize,
    j: usize,
    d: i64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StepJson {
    alpha: RootJson,
    element: ElementJson,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CertificateJson {
    mu: String,
    start: ElementJson,
    chain: Vec<StepJson>,
    target: Vec<i64>,
}

fn element_json(w: &IwElement) -> ElementJson {
    ElementJson {
        t: w.translation_part().coords().to_vec(),
        perm: w.perm().one_line(),
    }
}

fn element_from_json(e: ElementJson) -> Result<IwElement> {
    if e.t.iter().any(|x| x.unsigned_abs() > MAX_COORD as u64) {
        return Err(Error::Decode("translation entries out of range".into()));
    }
    let sigma = SignedPermutation::from_one_line(e.checked_perm()?)?;
    IwElement::new(Cocharacter::new(e.t)?, sigma)
}

impl ElementJson {
    fn checked_perm(&self) -> Result<Vec<usize>> {
        if self.perm.len() != self.t.len() {
            return Err(Error::SizeMismatch {
                expected: self.t.len(),
                found: self.perm.len(),
            });
        }
        Ok(self.perm.clone())
    }
}

fn to_sorted<T: Serialize>(value: &T) -> Value {
    // `serde_json::Map` is ordered by key, so converting through `Value` sorts keys.
    serde_json::to_value(value).expect("plain data serializes")
}

pub fn element_value(w: &IwElement) -> Value {
    to_sorted(&element_json(w))
}

pub fn encode_element(w: &IwElement) -> String {
    element_value(w).to_string()
}

pub fn decode_element(text: &str) -> Result<IwElement> {
    let e: ElementJson = serde_json::from_str(text).map_err(|e| Error::Decode(e.to_string()))?;
    element_from_json(e)
}

/// A sorted JSON array of elements.
pub fn set_value(set: &[IwElement]) -> Value {
    let mut items: Vec<&IwElement> = set.iter().collect();
    items.sort();
    Value::Array(items.into_iter().map(element_value).collect())
}

pub fn decode_set(text: &str) -> Result<Vec<IwElement>> {
    let items: Vec<ElementJson> =
        serde_json::from_str(text).map_err(|e| Error::Decode(e.to_string()))?;
    let mut out = items
        .into_iter()
        .map(element_from_json)
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

pub fn root_value(alpha: &AffineRoot) -> Value {
    to_sorted(&RootJson {
        i: alpha.i(),
        j: alpha.j(),
        d: alpha.d(),
    })
}

pub fn certificate_value(cert: &AscentCertificate) -> Value {
    to_sorted(&CertificateJson {
        mu: cert.mu.label().to_string(),
        start: element_json(&cert.start),
        chain: cert
            .chain
            .iter()
            .map(|(alpha, w)| StepJson {
                alpha: RootJson {
                    i: alpha.i(),
                    j: alpha.j(),
                    d: alpha.d(),
                },
                element: element_json(w),
            })
            .collect(),
        target: cert.target.coords().to_vec(),
    })
}

pub fn encode_certificate(cert: &AscentCertificate) -> String {
    certificate_value(cert).to_string()
}

/// Parses a certificate and re-verifies every link.
pub fn decode_certificate(text: &str) -> Result<AscentCertificate> {
    let c: CertificateJson =
        serde_json::from_str(text).map_err(|e| Error::Decode(e.to_string()))?;
    let mu = Mu::parse(&c.mu)?;
    let start = element_from_json(c.start)?;
    let n = start.n();
    if n > MAX_CERT_N {
        return Err(Error::Decode(format!(
            "n = {n} too large for a certificate"
        )));
    }
    let mut chain = Vec::with_capacity(c.chain.len());
    for step in c.chain {
        let alpha = AffineRoot::new(n, step.alpha.i, step.alpha.j, step.alpha.d)?;
        if alpha.d().unsigned_abs() > MAX_COORD as u64 {
            return Err(Error::Decode("root constant out of range".into()));
        }
        let w = element_from_json(step.element)?;
        if w.n() != n {
            return Err(Error::SizeMismatch {
                expected: 2 * n,
                found: 2 * w.n(),
            });
        }
        chain.push((alpha, w));
    }
    if c.target.len() != 2 * n {
        return Err(Error::SizeMismatch {
            expected: 2 * n,
            found: c.target.len(),
        });
    }
    let cert = AscentCertificate {
        mu,
        start,
        chain,
        target: Cocharacter::new(c.target)?,
    };
    cert.verify()?;
    Ok(cert)
}

/// Parses `[[v_0], [v_1], …]` into an extended alcove.
pub fn decode_extended_alcove(text: &str) -> Result<ExtendedAlcove> {
    let vertices: Vec<Vec<i64>> =
        serde_json::from_str(text).map_err(|e| Error::Decode(e.to_string()))?;
    ExtendedAlcove::new(vertices)
}

/// Parses a signed permutation in one-line notation, entries separated by
/// whitespace or commas, optionally wrapped in brackets.
pub fn decode_signed_permutation(text: &str) -> Result<SignedPermutation> {
    let body = text.trim();
    let body = body
        .strip_prefix('[')
        .and_then(|b| b.strip_suffix(']'))
        .unwrap_or(body);
    let images = body
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|e| Error::Decode(format!("{s:?}: {e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    SignedPermutation::from_one_line(images)
}
