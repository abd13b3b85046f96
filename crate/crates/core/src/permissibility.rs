//! The vectors `μ_k^w`, the sets `E_k^w` and `K_m`, and the permissible sets
//! `Perm^sp(μ)`, `Perm(μ)` and `Z`.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::index_set::IndexSet;
use crate::iwahori_weyl::{standard_vertex, BaseAlcove, ExtendedAlcove, IwElement};
use crate::root_datum::{
    conv_contains, is_totally_isotropic, isotropic_orbit, isotropic_vectors, star, w_group,
    Cocharacter, HalfVector, Mu, SignedPermutation,
};
use crate::{Error, Result};

/// `μ_k^w = v_k - ω_k` for `0 <= k < 2n`, checked to be 0/1 vectors.
pub fn mu_vectors(w: &IwElement) -> Result<Vec<Vec<i64>>> {
    let mus = raw_mu_vectors(w);
    let n = w.n() as i64;
    if mus.iter().flatten().any(|&x| x != 0 && x != 1)
        || mus.iter().any(|m| m.iter().sum::<i64>() != n)
    {
        return Err(Error::NotGlPermissible);
    }
    Ok(mus)
}

fn raw_mu_vectors(w: &IwElement) -> Vec<Vec<i64>> {
    let n = w.n();
    let alcove = w.to_extended_alcove();
    (0..2 * n)
        .map(|k| {
            let v = alcove.vertex(k);
            v.iter()
                .zip(standard_vertex(n, k))
                .map(|(a, b)| a - b)
                .collect()
        })
        .collect()
}

/// `E_k^w = {j : μ_k^w(j) = 0}` for `0 <= k < 2n`.
pub fn e_sets(w: &IwElement) -> Result<Vec<IndexSet>> {
    Ok(mu_vectors(w)?
        .iter()
        .map(|m| IndexSet::zeros_of(m))
        .collect())
}

/// `K_m = {k ∈ ℤ/2n : μ_k(m) = 0}`, either empty, everything, or a cyclic
/// interval `[lower, upper)` of residues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KInterval {
    Empty,
    Full,
    Interval { lower: usize, upper: usize },
}

impl KInterval {
    pub fn contains(&self, k: usize, n: usize) -> bool {
        match *self {
            KInterval::Empty => false,
            KInterval::Full => true,
            KInterval::Interval { lower, upper } => cyclic_contains(lower, upper, k % (2 * n), n),
        }
    }

    pub fn is_proper(&self) -> bool {
        matches!(self, KInterval::Interval { .. })
    }
}

/// Membership of `k` in the cyclic interval `[x, y)` of `ℤ/2n`; empty when `x = y`.
pub fn cyclic_contains(x: usize, y: usize, k: usize, n: usize) -> bool {
    let m = 2 * n;
    let (x, y, k) = (x % m, y % m, k % m);
    (k + m - x) % m < (y + m - x) % m
}

/// `K_m` computed from precomputed `μ_k`.
pub fn k_interval_from(mus: &[Vec<i64>], m: usize) -> Result<KInterval> {
    let len = mus.len();
    if m == 0 || m > len {
        return Err(Error::InvalidIndexSet(format!("{m} not in 1..={len}")));
    }
    let member: Vec<bool> = mus.iter().map(|mu| mu[m - 1] == 0).collect();
    if member.iter().all(|&b| !b) {
        return Ok(KInterval::Empty);
    }
    if member.iter().all(|&b| b) {
        return Ok(KInterval::Full);
    }
    let prev = |k: usize| member[(k + len - 1) % len];
    let lowers: Vec<usize> = (0..len).filter(|&k| member[k] && !prev(k)).collect();
    let uppers: Vec<usize> = (0..len).filter(|&k| !member[k] && prev(k)).collect();
    if lowers.len() != 1 || uppers.len() != 1 {
        return Err(Error::Internal(format!("K_{m} is not a cyclic interval")));
    }
    Ok(KInterval::Interval {
        lower: lowers[0],
        upper: uppers[0],
    })
}

pub fn k_interval(w: &IwElement, m: usize) -> Result<KInterval> {
    k_interval_from(&mu_vectors(w)?, m)
}

/// `m̃` for a proper `m`, as an index in `1..=2n` (residue 0 read as `2n`).
pub fn tilde_from(mus: &[Vec<i64>], m: usize) -> Result<Option<usize>> {
    Ok(match k_interval_from(mus, m)? {
        KInterval::Interval { lower, .. } => Some(if lower == 0 { mus.len() } else { lower }),
        _ => None,
    })
}

/// (P1) `ω_i <= v_i <= ω_i + 1` for all `i`, and (P2) `Σv_0 = n`.
pub fn is_gl_permissible(w: &IwElement) -> bool {
    let n = w.n();
    let mus = raw_mu_vectors(w);
    let box_ok = |k: usize| mus[k].iter().all(|&x| x == 0 || x == 1);
    let half = (0..=n).all(box_ok);
    let full = (0..2 * n).all(box_ok);
    assert_eq!(
        half, full,
        "P1 on 0..=n disagrees with P1 on all indices for {w:?}"
    );
    half && w.translation_part().coords().iter().sum::<i64>() == n as i64
}

/// GL-permissible, and each totally isotropic `μ_i^w` (`0 <= i <= n`) lies in `W°μ`.
pub fn is_spin_permissible(w: &IwElement, mu: Mu) -> bool {
    if !is_gl_permissible(w) {
        return false;
    }
    let mus = raw_mu_vectors(w);
    mus[..=w.n()]
        .iter()
        .filter(|m| is_totally_isotropic(m))
        .all(|m| isotropic_orbit(m) == Some(mu))
}

/// Search over `μ_0, …, μ_n` with `μ_{k+1} = μ_k - e_j + e_{k+1}`, `j = σ(k+1)`.
struct PermSearch {
    n: usize,
    orbit: Option<Mu>,
    found: Vec<IwElement>,
}

impl PermSearch {
    fn run(&mut self, mus: &mut Vec<Vec<i64>>, first_half: &mut Vec<usize>) {
        let n = self.n;
        let k = first_half.len();
        if k == n {
            self.finish(mus, first_half);
            return;
        }
        let cur = mus[k].clone();
        for j in 1..=2 * n {
            if first_half.iter().any(|&s| s == j || s == star(n, j)) {
                continue;
            }
            let mut next = cur.clone();
            if j != k + 1 {
                if cur[j - 1] != 1 || cur[k] != 0 {
                    continue;
                }
                next[j - 1] = 0;
                next[k] = 1;
            }
            if let Some(mu) = self.orbit {
                if is_totally_isotropic(&next) && isotropic_orbit(&next) != Some(mu) {
                    continue;
                }
            }
            mus.push(next);
            first_half.push(j);
            self.run(mus, first_half);
            first_half.pop();
            mus.pop();
        }
    }

    /// Completes `v_0, …, v_n` to an extended alcove by duality with `d = 0`.
    fn finish(&mut self, mus: &[Vec<i64>], first_half: &[usize]) {
        let n = self.n;
        let len = 2 * n;
        let mut vertices = vec![Vec::new(); len];
        for (k, mu) in mus.iter().enumerate() {
            let omega = standard_vertex(n, k);
            vertices[k] = mu.iter().zip(omega).map(|(a, b)| a + b).collect();
        }
        for k in 1..n {
            let v: Vec<i64> = (1..=len).map(|j| -vertices[k][star(n, j) - 1]).collect();
            vertices[len - k] = v;
        }
        let alcove = ExtendedAlcove::new(vertices).expect("search produces valid alcoves");
        let w = IwElement::from_extended_alcove(&alcove).expect("valid alcove");
        let sigma = SignedPermutation::from_first_half(n, first_half).expect("valid first half");
        assert_eq!(w.perm(), &sigma);
        assert!(is_gl_permissible(&w));
        self.found.push(w);
    }
}

fn search(n: usize, orbit: Option<Mu>) -> Vec<IwElement> {
    let starts: Vec<Cocharacter> = isotropic_vectors(n)
        .into_iter()
        .filter(|v| orbit.is_none_or(|mu| isotropic_orbit(v.coords()) == Some(mu)))
        .collect();
    let found: BTreeSet<IwElement> = starts
        .par_iter()
        .flat_map_iter(|start| {
            let mut s = PermSearch {
                n,
                orbit,
                found: Vec::new(),
            };
            s.run(&mut vec![start.coords().to_vec()], &mut Vec::new());
            s.found
        })
        .collect();
    found.into_iter().collect()
}

/// `Perm^sp(μ)`, sorted.
pub fn enumerate_perm_sp(n: usize, mu: Mu) -> Vec<IwElement> {
    search(n, Some(mu))
}

/// All GL-permissible elements of `W̃`, sorted.
pub fn z_set(n: usize) -> Vec<IwElement> {
    search(n, None)
}

/// `w ≡ t_μ mod W_a` and `w·x - x ∈ Conv(W°μ)` for every vertex `x` of the
/// closed base alcove.
pub fn is_permissible(w: &IwElement, mu: Mu) -> bool {
    let n = w.n();
    let vertices: Vec<HalfVector> = BaseAlcove::get(n)
        .vertices()
        .iter()
        .map(|(_, v)| v.clone())
        .collect();
    displacements_in_hull(w, mu, &vertices)
        && w.same_wa_coset(&IwElement::translation(&mu.cocharacter(n)))
}

/// The same test at the points `(ω_k + ω_{2n-k}) / 2`, `0 <= k <= n`.
pub fn is_permissible_at_symplectic_vertices(w: &IwElement, mu: Mu) -> bool {
    let n = w.n();
    let points: Vec<HalfVector> = (0..=n)
        .map(|k| {
            let (a, b) = (
                standard_vertex(n, k),
                standard_vertex(n, (2 * n - k) % (2 * n)),
            );
            HalfVector::from_twice(a.iter().zip(&b).map(|(x, y)| x + y).collect())
        })
        .collect();
    displacements_in_hull(w, mu, &points)
        && w.same_wa_coset(&IwElement::translation(&mu.cocharacter(n)))
}

fn displacements_in_hull(w: &IwElement, mu: Mu, points: &[HalfVector]) -> bool {
    points.iter().all(|x| {
        let moved = w.act_half(x);
        let diff = HalfVector::from_twice(
            moved
                .twice()
                .iter()
                .zip(x.twice())
                .map(|(a, b)| a - b)
                .collect(),
        );
        conv_contains(mu, &diff, w.n()).expect("matching sizes")
    })
}

/// `Perm(μ)`: candidates `t_λ σ` with `λ` an isotropic 0/1 vector (forced by the
/// vertex `x = 0`) and `σ ∈ S^h_2n`, filtered by [`is_permissible`].
pub fn enumerate_perm(n: usize, mu: Mu) -> Vec<IwElement> {
    let perms = w_group(n);
    let candidates: Vec<IwElement> = isotropic_vectors(n)
        .into_iter()
        .flat_map(|t| {
            perms
                .iter()
                .map(move |s| IwElement::new(t.clone(), s.clone()).expect("matching sizes"))
        })
        .collect();
    let mut out: Vec<IwElement> = candidates
        .into_par_iter()
        .filter(|w| is_permissible(w, mu))
        .collect();
    out.sort();
    out
}
