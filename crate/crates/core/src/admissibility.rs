//! `Adm°(μ)` and `Adm(μ)` through Bruhat closure, and the reflection ascent
//! that walks a spin-permissible element up to a translation.

use std::collections::BTreeSet;

use crate::iwahori_weyl::IwElement;
use crate::length_bruhat::{length, lower_closure, AffineRoot};
use crate::permissibility::{
    cyclic_contains, is_gl_permissible, is_spin_permissible, k_interval_from, mu_vectors,
    tilde_from, KInterval,
};
use crate::root_datum::{binom2, isotropic_orbit, orbit, star, Cocharacter, Mu};
use crate::{Error, Result};

/// `Adm°(μ) = {w : w <= t_{σμ} for some σ ∈ W°}`, sorted.
pub fn adm_circ(n: usize, mu: Mu) -> Vec<IwElement> {
    let tops: Vec<IwElement> = orbit(&mu.cocharacter(n), n)
        .expect("valid n")
        .iter()
        .map(IwElement::translation)
        .collect();
    lower_closure(&tops)
}

/// `Adm(μ) = Adm°(μ) ∪ Adm°(τμτ⁻¹)`, sorted.
pub fn adm(n: usize, mu: Mu) -> Vec<IwElement> {
    let set: BTreeSet<IwElement> = adm_circ(n, mu)
        .into_iter()
        .chain(adm_circ(n, mu.swap()))
        .collect();
    set.into_iter().collect()
}

/// A chain of reflections carrying an element of `Perm^sp(μ)` to a translation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AscentCertificate {
    pub mu: Mu,
    pub start: IwElement,
    /// Each entry is a root `α` and the element `s_α · (previous element)`.
    pub chain: Vec<(AffineRoot, IwElement)>,
    pub target: Cocharacter,
}

impl AscentCertificate {
    /// Re-checks every link from scratch.
    pub fn verify(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Certificate(msg));
        if !is_spin_permissible(&self.start, self.mu) {
            return fail("start element is not spin-permissible".into());
        }
        let mut cur = self.start.clone();
        let mut len = length(&cur);
        for (step, (alpha, next)) in self.chain.iter().enumerate() {
            if alpha.n() != cur.n() {
                return fail(format!("step {step}: root of the wrong rank"));
            }
            if alpha.reflection().mul(&cur) != *next {
                return fail(format!(
                    "step {step}: element is not s_α times its predecessor"
                ));
            }
            if !is_spin_permissible(next, self.mu) {
                return fail(format!("step {step}: element is not spin-permissible"));
            }
            let l = length(next);
            if l <= len {
                return fail(format!("step {step}: length does not increase"));
            }
            cur = next.clone();
            len = l;
        }
        if cur != IwElement::translation(&self.target) {
            return fail("chain does not end at the target translation".into());
        }
        if isotropic_orbit(self.target.coords()) != Some(self.mu) {
            return fail("target is not in the W°-orbit of μ".into());
        }
        if self.chain.len() + length(&self.start) > binom2(cur.n()) {
            return fail("chain longer than C(n, 2) - ℓ(start)".into());
        }
        Ok(())
    }
}

fn k_mask(mus: &[Vec<i64>], m: usize) -> u64 {
    mus.iter()
        .enumerate()
        .filter(|(_, mu)| mu[m - 1] == 0)
        .fold(0, |acc, (k, _)| acc | 1 << k)
}

fn interval_mask(x: usize, y: usize, n: usize) -> u64 {
    (0..2 * n)
        .filter(|&k| cyclic_contains(x, y, k, n))
        .fold(0, |acc, k| acc | 1 << k)
}

fn in_k(mus: &[Vec<i64>], m: usize, k: usize) -> bool {
    mus[k % mus.len()][m - 1] == 0
}

fn root(n: usize, i: usize, j: usize, d: i64) -> Result<AffineRoot> {
    AffineRoot::new(n, i, j, d).map_err(|e| Error::Internal(format!("ascent produced {e}")))
}

/// The root attached to a proper `r` with `r̃ ≠ r*` by the four-case choice:
/// (i) `[r, r̃) ⊂ K_r̃`, `r < r̃`: `α_{r,r̃;0}`; (ii) `[r, r̃) ⊂ K_r̃`, `r̃ < r`:
/// `α_{r̃,r;-1}`; (iii) `K_r̃ ⊂ [r, r̃)`, `r < r̃`: `α_{r,r̃;-1}`;
/// (iv) `K_r̃ ⊂ [r, r̃)`, `r̃ < r`: `α_{r̃,r;0}`. First applicable case wins.
fn interval_lemma_root(mus: &[Vec<i64>], r: usize) -> Result<AffineRoot> {
    let n = mus.len() / 2;
    let rt = tilde_from(mus, r)?.ok_or_else(|| Error::Internal(format!("{r} is not proper")))?;
    let span = interval_mask(r, rt, n);
    let k_rt = k_mask(mus, rt);
    if span & !k_rt == 0 {
        if r < rt {
            return root(n, r, rt, 0);
        }
        return root(n, rt, r, -1);
    }
    if k_rt & !span == 0 {
        if r < rt {
            return root(n, r, rt, -1);
        }
        return root(n, rt, r, 0);
    }
    Err(Error::Internal(format!(
        "no case of the interval lemma applies to r = {r}"
    )))
}

/// One reflection `α` with `s_α w ∈ Perm^sp(μ)` and `w < s_α w`.
pub fn ascent_step(w: &IwElement, mu: Mu) -> Result<AffineRoot> {
    if !is_spin_permissible(w, mu) {
        return Err(Error::NotGlPermissible);
    }
    let alpha = choose_root(w)?;
    let next = alpha.reflection().mul(w);
    if !is_spin_permissible(&next, mu) || length(&next) <= length(w) {
        return Err(Error::Internal(format!(
            "ascent root {alpha:?} fails its postconditions at {w:?}"
        )));
    }
    Ok(alpha)
}

fn choose_root(w: &IwElement) -> Result<AffineRoot> {
    let n = w.n();
    let mus = mu_vectors(w)?;
    let proper = |m: usize| -> Result<bool> { Ok(k_interval_from(&mus, m)?.is_proper()) };
    let tilde = |m: usize| -> Result<usize> {
        tilde_from(&mus, m)?.ok_or_else(|| Error::Internal(format!("{m} is not proper")))
    };

    let mut a = None;
    for m in 1..=2 * n {
        if proper(m)? {
            a = Some(m);
            break;
        }
    }
    let a = a.ok_or(Error::TranslationElement)?;

    let before = &mus[a - 1];
    let after = &mus[a % (2 * n)];
    let gained: Vec<usize> = (1..=2 * n)
        .filter(|&j| after[j - 1] == 0 && before[j - 1] != 0)
        .collect();
    let [b] = gained[..] else {
        return Err(Error::Internal(format!("E_a \\ E_(a-1) = {gained:?}")));
    };
    let m = b.min(star(n, b));

    // Some proper r in [a, m) with r̃ ≠ r* and min(r̃, r̃*) < m.
    for r in a..m {
        if !proper(r)? {
            continue;
        }
        let rt = tilde(r)?;
        if rt != star(n, r) && rt.min(star(n, rt)) < m {
            return interval_lemma_root(&mus, r);
        }
    }

    // Some proper l in (a, m).
    for l in a + 1..m {
        if !proper(l)? {
            continue;
        }
        if tilde(l)? == star(n, l) {
            return root(n, a, l, 0);
        }
        return root(n, l, m, 0);
    }

    // a is the only proper element of [a, m).
    interval_lemma_root(&mus, b)
}

/// Iterates [`ascent_step`] until a translation `t_{μ'}` is reached.
pub fn ascent_chain(w: &IwElement, mu: Mu) -> Result<AscentCertificate> {
    let mut chain = Vec::new();
    let mut cur = w.clone();
    while !cur.is_translation() {
        if chain.len() > binom2(w.n()) {
            return Err(Error::Internal("ascent did not terminate".into()));
        }
        let alpha = ascent_step(&cur, mu)?;
        cur = alpha.reflection().mul(&cur);
        chain.push((alpha, cur.clone()));
    }
    if !is_spin_permissible(&cur, mu) {
        return Err(Error::NotGlPermissible);
    }
    let cert = AscentCertificate {
        mu,
        start: w.clone(),
        chain,
        target: cur.translation_part().clone(),
    };
    cert.verify()?;
    Ok(cert)
}

/// `α_{i,j;0}` when `i < j`, `α_{j,i;-1}` when `j < i`.
pub fn lemma_root(n: usize, i: usize, j: usize) -> Result<AffineRoot> {
    if i < j {
        AffineRoot::new(n, i, j, 0)
    } else {
        AffineRoot::new(n, j, i, -1)
    }
}

/// `i ∈ K_j` and `j - 1 ∉ K_i`, the condition for `s_{lemma_root(i, j)} w` to be
/// GL-permissible.
pub fn gl_reflection_condition(w: &IwElement, i: usize, j: usize) -> Result<bool> {
    check_pair(w.n(), i, j)?;
    let mus = mu_vectors(w)?;
    Ok(in_k(&mus, j, i) && !in_k(&mus, i, j + 2 * w.n() - 1))
}

/// For proper `i`: evaluates `i ∈ K_j` and `ĩ ∉ K_j`. When it holds, the reflection
/// [`lemma_root`]`(i, j)` is checked to give a GL-permissible, strictly longer
/// element, and a violation is reported as an error.
pub fn lemma_glperm_bruhat(i: usize, j: usize, w: &IwElement) -> Result<bool> {
    let n = w.n();
    check_pair(n, i, j)?;
    let mus = mu_vectors(w)?;
    let it = match k_interval_from(&mus, i)? {
        KInterval::Interval { lower, .. } => lower,
        _ => return Err(Error::Internal(format!("{i} is not proper"))),
    };
    let holds = in_k(&mus, j, i) && !in_k(&mus, j, it);
    if holds {
        let next = lemma_root(n, i, j)?.reflection().mul(w);
        if !is_gl_permissible(&next) || length(&next) <= length(w) {
            return Err(Error::Internal(format!(
                "reflection lemma fails for ({i}, {j}) at {w:?}"
            )));
        }
    }
    Ok(holds)
}

fn check_pair(n: usize, i: usize, j: usize) -> Result<()> {
    let ok = (1..=2 * n).contains(&i) && (1..=2 * n).contains(&j) && j != i && j != star(n, i);
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidRoot { i, j, d: 0 })
    }
}
