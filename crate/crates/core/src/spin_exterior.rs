//! The involution `a` on `∧^n V`, its eigenspaces, and the spin condition on
//! `T`-fixed points of the naive local model.

use std::collections::BTreeMap;
use std::fmt;

use crate::index_set::IndexSet;
use crate::iwahori_weyl::{integer_rank, IwElement};
use crate::permissibility::e_sets;
use crate::root_datum::{isotropic_orbit, star};
use crate::{Error, Result};

/// One-line notation of `σ_E`: `1..=n` go to `E*` in decreasing order and
/// `n+1..=2n` to `E^⊥` in increasing order.
pub fn sigma_e(e: &IndexSet) -> Result<Vec<usize>> {
    if e.len() != e.n() {
        return Err(Error::InvalidIndexSet(format!(
            "{e:?} does not have {} elements",
            e.n()
        )));
    }
    let mut images: Vec<usize> = e.star().members();
    images.reverse();
    images.extend(e.perp().members());
    Ok(images)
}

/// `sgn(σ_E)`, by counting inversions.
pub fn sigma_sign(e: &IndexSet) -> Result<i64> {
    let p = sigma_e(e)?;
    let mut inversions = 0;
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if p[a] > p[b] {
                inversions += 1;
            }
        }
    }
    Ok(if inversions % 2 == 0 { 1 } else { -1 })
}

/// An element of `∧^n V` in the basis `{e_E}`, with integer coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct SpinVector {
    n: usize,
    coeffs: BTreeMap<IndexSet, i64>,
}

impl SpinVector {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(e: IndexSet) -> Self {
        let mut v = Self::zero(e.n());
        v.add_term(e, 1);
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, e: IndexSet, c: i64) {
        let entry = self.coeffs.entry(e).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.coeffs.remove(&e);
        }
    }

    pub fn coefficient(&self, e: &IndexSet) -> i64 {
        self.coeffs.get(e).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IndexSet, &i64)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.coeffs {
            out.add_term(*e, c * k);
        }
        out
    }

    /// Coordinates in the basis of size-`n` subsets ordered by bitmask.
    pub fn dense(&self) -> Vec<i64> {
        IndexSet::all_of_half_size(self.n)
            .iter()
            .map(|e| self.coefficient(e))
            .collect()
    }
}

impl fmt::Debug for SpinVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.coeffs.iter()).finish()
    }
}

/// `a(e_E) = sgn(σ_E) e_{E^⊥}`, extended linearly.
pub fn apply_a(v: &SpinVector) -> Result<SpinVector> {
    let mut out = SpinVector::zero(v.n);
    for (e, c) in &v.coeffs {
        out.add_term(e.perp(), c * sigma_sign(e)?);
    }
    Ok(out)
}

/// Vectors `e_E + sign·sgn(σ_E) e_{E^⊥}` spanning the `sign`-eigenspace of `a`,
/// with zero vectors dropped and one representative per pair `{E, E^⊥}`.
pub fn eigenbasis(n: usize, sign: i64) -> Result<Vec<SpinVector>> {
    if sign != 1 && sign != -1 {
        return Err(Error::Internal(format!("eigenvalue {sign} is not ±1")));
    }
    let mut out = Vec::new();
    for e in IndexSet::all_of_half_size(n) {
        let perp = e.perp();
        if perp < e {
            continue;
        }
        let mut v = SpinVector::basis(e);
        v.add_term(perp, sign * sigma_sign(&e)?);
        if v.is_zero() {
            continue;
        }
        if perp == e {
            v = SpinVector::basis(e);
        }
        out.push(v);
    }
    Ok(out)
}

/// Dimension of the `sign`-eigenspace, as the rank of [`eigenbasis`].
pub fn eigenspace_dimension(n: usize, sign: i64) -> Result<usize> {
    let rows: Vec<Vec<i64>> = eigenbasis(n, sign)?.iter().map(SpinVector::dense).collect();
    integer_rank(&rows).ok_or_else(|| Error::Internal("rank computation overflowed".into()))
}

/// Dense matrix of `a` (columns indexed by `E`), and whether `a² = 1`.
pub fn a_matrix(n: usize) -> Result<(Vec<Vec<i64>>, bool)> {
    let basis = IndexSet::all_of_half_size(n);
    let index: BTreeMap<IndexSet, usize> = basis.iter().enumerate().map(|(k, e)| (*e, k)).collect();
    let size = basis.len();
    let mut m = vec![vec![0; size]; size];
    for (col, e) in basis.iter().enumerate() {
        m[index[&e.perp()]][col] = sigma_sign(e)?;
    }
    let squared_is_identity = (0..size).all(|r| {
        (0..size).all(|c| {
            let s: i64 = (0..size).map(|k| m[r][k] * m[k][c]).sum();
            s == i64::from(r == c)
        })
    });
    Ok((m, squared_is_identity))
}

/// A `T`-fixed point `{F_i}` of the naive local model, through the index sets
/// `E_i` with `F_i = kE_i`, `0 <= i < 2n`.
#[derive(Clone, PartialEq, Eq)]
pub struct TFixedPoint {
    sets: Vec<IndexSet>,
}

impl TFixedPoint {
    /// Checks sizes, `E_{2n-i} = E_i^⊥`, and that `E_{i+1}` arises from `E_i` by
    /// replacing `i+1` with one other index or not at all.
    pub fn new(sets: Vec<IndexSet>) -> Result<Self> {
        let len = sets.len();
        let bad = |msg: String| Err(Error::MalformedFixedPoint(msg));
        if len < 4 || !len.is_multiple_of(2) {
            return bad(format!("{len} sets"));
        }
        let n = len / 2;
        for (i, e) in sets.iter().enumerate() {
            if e.n() != n || e.len() != n {
                return bad(format!("E_{i} = {e:?} is not an {n}-subset of 1..={len}"));
            }
            if sets[(len - i) % len] != e.perp() {
                return bad(format!("E_{} is not E_{i}^⊥", (len - i) % len));
            }
        }
        for i in 0..len {
            let (cur, next) = (sets[i], sets[(i + 1) % len]);
            let lost = IndexSet::from_bits(n, cur.bits() & !next.bits());
            if lost.len() > 1 || (lost.len() == 1 && !lost.contains(i + 1)) {
                return bad(format!("E_{} does not follow from E_{i}", (i + 1) % len));
            }
        }
        Ok(Self { sets })
    }

    pub fn from_element(w: &IwElement) -> Result<Self> {
        Self::new(e_sets(w)?)
    }

    pub fn n(&self) -> usize {
        self.sets.len() / 2
    }

    pub fn sets(&self) -> &[IndexSet] {
        &self.sets
    }

    /// `π`-exponent difference `d_i^⊥ - d_i` with `d_i = #(E_i ∩ {1..i})`.
    pub fn exponent_gap(&self, i: usize) -> i64 {
        let e = self.sets[i];
        e.perp().count_up_to(i) as i64 - e.count_up_to(i) as i64
    }

    /// `2s_i = #{j ∈ A_i : j, j* ∉ E_i}` halved, for `0 <= i <= n`.
    pub fn s_value(&self, i: usize) -> usize {
        let n = self.n();
        let e = self.sets[i];
        let count = (1..=2 * n)
            .filter(|&j| j <= i || j >= star(n, i))
            .filter(|&j| !e.contains(j) && !e.contains(star(n, j)))
            .count();
        count / 2
    }

    /// `#(E_i ∩ A_i)` with `A_i = {1..i} ∪ {i*..2n}`.
    pub fn a_count(&self, i: usize) -> usize {
        let n = self.n();
        let e = self.sets[i];
        (1..=2 * n)
            .filter(|&j| (j <= i || j >= star(n, i)) && e.contains(j))
            .count()
    }
}

impl fmt::Debug for TFixedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.sets).finish()
    }
}

/// Whether the line `∧^n F_i` lies in the reduction of `(∧^n Λ_i)_ε`.
///
/// With `e^i_E = π^{-d_i} e_E`, `a(e^i_E) = sgn(σ_E) π^k e^i_{E^⊥}` where
/// `k = d_i^⊥ - d_i`. For `E ≠ E^⊥` the eigenvectors in the lattice are
/// `c(e^i_E + ε sgn π^k e^i_{E^⊥})` with `c`, `cπ^k` integral; such a vector
/// reduces to a multiple of `ē_E` exactly when `k > 0`. For `E = E^⊥`,
/// `e^i_E` is itself an eigenvector with eigenvalue `sgn(σ_E)`.
fn line_in_image(p: &TFixedPoint, i: usize, eps: i64) -> bool {
    let e = p.sets[i];
    if e.is_totally_isotropic() {
        sigma_sign(&e).expect("size n") == eps
    } else {
        p.exponent_gap(i) > 0
    }
}

/// The spin condition, checked lattice by lattice for each sign.
pub fn tfixed_spin_direct(p: &TFixedPoint) -> bool {
    let len = p.sets.len();
    [1, -1]
        .iter()
        .any(|&eps| (0..len).all(|i| line_in_image(p, i, eps)))
}

/// The totally isotropic `E_i`, `0 <= i <= n`, lie in one `W°`-orbit.
pub fn tfixed_spin_combinatorial(p: &TFixedPoint) -> bool {
    let n = p.n();
    let mut orbits = p.sets[..=n]
        .iter()
        .filter(|e| e.is_totally_isotropic())
        .map(|e| {
            let mu: Vec<i64> = (1..=2 * n).map(|j| i64::from(!e.contains(j))).collect();
            isotropic_orbit(&mu)
        });
    let Some(first) = orbits.next() else {
        return true;
    };
    orbits.all(|o| o == first)
}

/// For `1 <= i <= n` with `#(E_i ∩ A_i) < i`: `d_i^⊥ - d_i = s_i > 0` and
/// `d_{2n-i}^⊥ - d_{2n-i} = s_i`.
pub fn case_one_identity(p: &TFixedPoint) -> bool {
    let n = p.n();
    (1..=n).filter(|&i| p.a_count(i) < i).all(|i| {
        let s = p.s_value(i) as i64;
        s > 0 && p.exponent_gap(i) == s && p.exponent_gap(2 * n - i) == s
    })
}
