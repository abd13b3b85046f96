//! Finite Weyl group `S^h_2n`, the cocharacter lattice of the diagonal torus of
//! `GO_2n`, the coroot lattice and the convex hulls `Conv(W°μ)`.
//!
//! Indices are 1-based throughout: positions run over `1..=2n` and the
//! involution `i ↦ i* = 2n + 1 - i` pairs them up.

use std::collections::BTreeSet;
use std::fmt;

use crate::{Error, Result};

/// `i* = 2n + 1 - i`.
#[inline]
pub fn star(n: usize, i: usize) -> usize {
    debug_assert!((1..=2 * n).contains(&i));
    2 * n + 1 - i
}

/// `C(n, 2)`, the length of every translation `t_μ` with `μ ∈ W°μ1 ∪ W°μ2`.
pub fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Element of `S^h_2n`: a permutation of `{1, …, 2n}` commuting with `*`.
///
/// Stored in one-line notation, `images[i - 1] = σ(i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    images: Vec<u8>,
}

impl SignedPermutation {
    pub fn from_one_line(images: Vec<usize>) -> Result<Self> {
        let len = images.len();
        if len < 2 || !len.is_multiple_of(2) || len > 64 {
            return Err(Error::InvalidPermutation(format!(
                "length {len} is not 2n with 1 <= n <= 32"
            )));
        }
        let n = len / 2;
        let mut seen = vec![false; len + 1];
        for &x in &images {
            if x == 0 || x > len || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection of 1..={len}"
                )));
            }
            seen[x] = true;
        }
        for i in 1..=len {
            if images[star(n, i) - 1] != star(n, images[i - 1]) {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} does not commute with i -> i*"
                )));
            }
        }
        Ok(Self {
            images: images.into_iter().map(|x| x as u8).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=2 * n as u8).collect(),
        }
    }

    /// The transposition `(n, n+1)`; it generates `W / W°`.
    pub fn tau(n: usize) -> Self {
        let mut images: Vec<u8> = (1..=2 * n as u8).collect();
        images.swap(n - 1, n);
        Self { images }
    }

    /// Builds `σ` from its values on `1..=n`; the rest is forced by `σ(i*) = σ(i)*`.
    pub fn from_first_half(n: usize, first: &[usize]) -> Result<Self> {
        if first.len() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: first.len(),
            });
        }
        let mut images = vec![0; 2 * n];
        for (k, &x) in first.iter().enumerate() {
            if x == 0 || x > 2 * n {
                return Err(Error::InvalidPermutation(format!("image {x} out of range")));
            }
            images[k] = x;
            images[star(n, k + 1) - 1] = star(n, x);
        }
        Self::from_one_line(images)
    }

    /// Half the number of points moved on.
    pub fn n(&self) -> usize {
        self.images.len() / 2
    }

    /// `σ(i)` for `1 <= i <= 2n`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    /// `(σσ')(i) = σ(σ'(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.images.len() != other.images.len() {
            return Err(Error::SizeMismatch {
                expected: self.images.len(),
                found: other.images.len(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        Self {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize - 1])
                .collect(),
        }
    }

    pub fn invert(&self) -> Self {
        let mut images = vec![0u8; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize - 1] = i as u8 + 1;
        }
        Self { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| x as usize == i + 1)
    }

    /// Parity as a permutation of `{1, …, 2n}`, computed from the cycle type.
    pub fn is_even(&self) -> bool {
        let len = self.images.len();
        let mut visited = vec![false; len];
        let mut transpositions = 0;
        for start in 0..len {
            if visited[start] {
                continue;
            }
            let mut cur = start;
            let mut cycle_len = 0;
            while !visited[cur] {
                visited[cur] = true;
                cur = self.images[cur] as usize - 1;
                cycle_len += 1;
            }
            transpositions += cycle_len - 1;
        }
        transpositions % 2 == 0
    }

    /// Membership in `W°`, the index-two subgroup of even elements.
    pub fn is_in_w_circ(&self) -> bool {
        self.is_even()
    }

    /// Coordinate permutation `(σv)(σ(i)) = v(i)`.
    pub fn act_on_vector(&self, v: &Cocharacter) -> Result<Cocharacter> {
        if v.len() != self.images.len() {
            return Err(Error::SizeMismatch {
                expected: self.images.len(),
                found: v.len(),
            });
        }
        Ok(Cocharacter {
            coords: self.permute(&v.coords),
        })
    }

    /// Same action on a bare coordinate vector.
    pub fn permute<T: Copy + Default>(&self, v: &[T]) -> Vec<T> {
        let mut out = vec![T::default(); v.len()];
        for (i, &x) in v.iter().enumerate() {
            out[self.images[i] as usize - 1] = x;
        }
        out
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

/// All of `S^h_2n = {±1}^n ⋊ S_n`, in canonical order.
pub fn w_group(n: usize) -> Vec<SignedPermutation> {
    let mut out = signed_permutations(n, false);
    out.sort();
    out
}

/// `W°`, generated directly as even sign changes times `S_n`.
pub fn w_circ_group(n: usize) -> Vec<SignedPermutation> {
    let mut out = signed_permutations(n, true);
    out.sort();
    out
}

fn signed_permutations(n: usize, even_only: bool) -> Vec<SignedPermutation> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (1..=n).collect();
    for_each_permutation(&mut perm, 0, &mut |p| {
        for flips in 0u32..(1 << n) {
            if even_only && flips.count_ones() % 2 == 1 {
                continue;
            }
            let first: Vec<usize> = p
                .iter()
                .enumerate()
                .map(|(k, &x)| if flips >> k & 1 == 1 { star(n, x) } else { x })
                .collect();
            out.push(
                SignedPermutation::from_first_half(n, &first).expect("valid signed permutation"),
            );
        }
    });
    out
}

fn for_each_permutation(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        for_each_permutation(p, k + 1, f);
        p.swap(k, i);
    }
}

/// Cocharacter of the diagonal torus: an integer `2n`-vector with
/// `r_1 + r_2n = r_2 + r_{2n-1} = … = r_n + r_{n+1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cocharacter {
    coords: Vec<i64>,
}

impl Cocharacter {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.len() < 2 || !coords.len().is_multiple_of(2) || coords.len() > 64 {
            return Err(Error::InvalidCocharacter(format!(
                "length {} is not 2n with 1 <= n <= 32",
                coords.len()
            )));
        }
        let len = coords.len();
        let c = coords[0].checked_add(coords[len - 1]);
        let ok =
            c.is_some() && (0..len / 2).all(|i| coords[i].checked_add(coords[len - 1 - i]) == c);
        if !ok {
            return Err(Error::InvalidCocharacter(format!(
                "{coords:?} violates the similitude constraint"
            )));
        }
        Ok(Self { coords })
    }

    pub fn zero(n: usize) -> Self {
        Self {
            coords: vec![0; 2 * n],
        }
    }

    /// `(1^(n), 0^(n))`.
    pub fn mu1(n: usize) -> Self {
        let mut coords = vec![0; 2 * n];
        coords[..n].fill(1);
        Self { coords }
    }

    /// `(1^(n-1), 0, 1, 0^(n-1))`.
    pub fn mu2(n: usize) -> Self {
        let mut coords = vec![0; 2 * n];
        coords[..n - 1].fill(1);
        coords[n] = 1;
        Self { coords }
    }

    /// `λ_i`: `1` in slot `i`, `-1` in slot `i*`.
    pub fn lambda(n: usize, i: usize) -> Self {
        let mut coords = vec![0; 2 * n];
        coords[i - 1] += 1;
        coords[star(n, i) - 1] -= 1;
        Self { coords }
    }

    pub fn n(&self) -> usize {
        self.coords.len() / 2
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// `v(i)`, 1-based.
    pub fn get(&self, i: usize) -> i64 {
        self.coords[i - 1]
    }

    /// The common value `c = r_1 + r_2n`.
    pub fn c(&self) -> i64 {
        self.coords[0] + self.coords[self.coords.len() - 1]
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        Self {
            coords: self.coords.iter().map(|a| a * k).collect(),
        }
    }

    /// Membership in `Q^∨`: all pair sums vanish and `r_1 + … + r_n` is even.
    pub fn in_coroot_lattice(&self) -> bool {
        let n = self.n();
        self.c() == 0 && self.coords[..n].iter().sum::<i64>() % 2 == 0
    }

    /// `μ(j) = 1 - μ(j*)` for all `j`, on a 0/1 vector.
    pub fn is_totally_isotropic(&self) -> bool {
        is_totally_isotropic(&self.coords)
    }
}

impl fmt::Debug for Cocharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}

/// `v(j) + v(j*) = 1` for every `j`, with every entry in `{0, 1}`.
pub fn is_totally_isotropic(v: &[i64]) -> bool {
    let len = v.len();
    v.iter().all(|&x| x == 0 || x == 1) && (0..len).all(|j| v[j] + v[len - 1 - j] == 1)
}

/// The two minuscule cocharacters for which all three sets are computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mu {
    Mu1,
    Mu2,
}

impl Mu {
    pub const ALL: [Mu; 2] = [Mu::Mu1, Mu::Mu2];

    pub fn cocharacter(self, n: usize) -> Cocharacter {
        match self {
            Mu::Mu1 => Cocharacter::mu1(n),
            Mu::Mu2 => Cocharacter::mu2(n),
        }
    }

    /// The other one: `τμ1τ⁻¹ = μ2`.
    pub fn swap(self) -> Mu {
        match self {
            Mu::Mu1 => Mu::Mu2,
            Mu::Mu2 => Mu::Mu1,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Mu::Mu1 => "mu1",
            Mu::Mu2 => "mu2",
        }
    }

    pub fn parse(label: &str) -> Result<Mu> {
        match label.trim().to_ascii_lowercase().as_str() {
            "mu1" | "μ1" | "1" => Ok(Mu::Mu1),
            "mu2" | "μ2" | "2" => Ok(Mu::Mu2),
            other => Err(Error::UnsupportedMu(other.to_string())),
        }
    }

    /// Recognises `μ1` or `μ2` among cocharacters.
    pub fn from_cocharacter(mu: &Cocharacter) -> Result<Mu> {
        let n = mu.n();
        if n >= 2 && *mu == Cocharacter::mu1(n) {
            Ok(Mu::Mu1)
        } else if n >= 2 && *mu == Cocharacter::mu2(n) {
            Ok(Mu::Mu2)
        } else {
            Err(Error::UnsupportedMu(format!("{mu:?}")))
        }
    }
}

impl fmt::Display for Mu {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Which of the two `W°`-orbits a totally isotropic 0/1 vector lies in.
///
/// `W°` changes an even number of signs, so the parity of the number of ones
/// among positions `1..=n` is an orbit invariant: it is `n mod 2` on `W°μ1`
/// and `n - 1 mod 2` on `W°μ2`.
pub fn isotropic_orbit(v: &[i64]) -> Option<Mu> {
    if !is_totally_isotropic(v) {
        return None;
    }
    let n = v.len() / 2;
    let ones = v[..n].iter().filter(|&&x| x == 1).count();
    if ones % 2 == n % 2 {
        Some(Mu::Mu1)
    } else {
        Some(Mu::Mu2)
    }
}

/// `{σμ : σ ∈ W°}` in lexicographic order.
pub fn orbit(mu: &Cocharacter, n: usize) -> Result<Vec<Cocharacter>> {
    if mu.n() != n {
        return Err(Error::SizeMismatch {
            expected: 2 * n,
            found: mu.len(),
        });
    }
    let set: BTreeSet<Cocharacter> = w_circ_group(n)
        .iter()
        .map(|s| Cocharacter {
            coords: s.permute(&mu.coords),
        })
        .collect();
    Ok(set.into_iter().collect())
}

/// Checks the parity classifier against explicit `W°`-orbits for this `n`.
pub fn validate_orbit_classifier(n: usize) -> Result<()> {
    for mu in Mu::ALL {
        for v in orbit(&mu.cocharacter(n), n)? {
            if isotropic_orbit(v.coords()) != Some(mu) {
                return Err(Error::Internal(format!(
                    "orbit classifier misplaces {v:?} (expected {mu})"
                )));
            }
        }
    }
    Ok(())
}

/// Point of `X_*(T) ⊗ ℝ` with half-integer coordinates, stored doubled.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfVector {
    twice: Vec<i64>,
}

impl HalfVector {
    pub fn from_twice(twice: Vec<i64>) -> Self {
        Self { twice }
    }

    pub fn from_integral(v: &Cocharacter) -> Self {
        Self {
            twice: v.coords.iter().map(|x| 2 * x).collect(),
        }
    }

    /// `(a + b) / 2`.
    pub fn midpoint(a: &[i64], b: &[i64]) -> Self {
        Self {
            twice: a.iter().zip(b).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn twice(&self) -> &[i64] {
        &self.twice
    }

    pub fn len(&self) -> usize {
        self.twice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.twice.is_empty()
    }
}

impl fmt::Debug for HalfVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .twice
            .iter()
            .map(|&x| {
                if x % 2 == 0 {
                    format!("{}", x / 2)
                } else {
                    format!("{x}/2")
                }
            })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Membership of `x` in `Conv(W°μ)`, `μ ∈ {μ1, μ2}`, via its facet description:
/// `0 <= x <= 1`, `c(x) = 1`, and `μ'·x >= 1` for every `μ'` in `W°μ` (odd `n`)
/// or in `τW°μ` (even `n`).
pub fn conv_contains(mu: Mu, x: &HalfVector, n: usize) -> Result<bool> {
    if x.len() != 2 * n {
        return Err(Error::SizeMismatch {
            expected: 2 * n,
            found: x.len(),
        });
    }
    let t = &x.twice;
    if t.iter().any(|&v| !(0..=2).contains(&v)) {
        return Ok(false);
    }
    if (0..2 * n).any(|j| t[j] + t[2 * n - 1 - j] != 2) {
        return Ok(false);
    }
    let facet_mu = if n % 2 == 1 { mu } else { mu.swap() };
    for normal in orbit(&facet_mu.cocharacter(n), n)? {
        let dot: i64 = normal.coords.iter().zip(t).map(|(a, b)| a * b).sum();
        if dot < 2 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All 0/1 vectors satisfying the similitude constraint with `c = 1`, i.e. the
/// totally isotropic ones, in lexicographic order.
pub fn isotropic_vectors(n: usize) -> Vec<Cocharacter> {
    let mut out: Vec<Cocharacter> = (0u32..(1 << n))
        .map(|bits| {
            let mut coords = vec![0; 2 * n];
            for j in 0..n {
                let one = bits >> j & 1 == 1;
                coords[j] = one as i64;
                coords[2 * n - 1 - j] = 1 - one as i64;
            }
            Cocharacter { coords }
        })
        .collect();
    out.sort();
    out
}
