//! The Iwahori-Weyl group `W̃ = X_*(T) ⋊ S^h_2n`, extended alcoves, the base
//! alcove and the factorization `W̃ = W_a ⋊ Ω`.

use std::fmt;
use std::sync::OnceLock;

use crate::length_bruhat::{length, root_directions, AffineRoot};
use crate::root_datum::{star, Cocharacter, HalfVector, SignedPermutation};
use crate::{Error, Result};

/// `ω_i = ((-1)^(i), 0^(2n-i))`, the `i`-th vertex of the standard extended alcove.
pub fn standard_vertex(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; 2 * n];
    v[..i.min(2 * n)].fill(-1);
    v
}

/// Element `t_λ σ` of `W̃`, acting on `X_*(T) ⊗ ℝ` by `x ↦ λ + σx`.
///
/// Ordered lexicographically by translation part, then by one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IwElement {
    t: Cocharacter,
    sigma: SignedPermutation,
}

impl IwElement {
    pub fn new(t: Cocharacter, sigma: SignedPermutation) -> Result<Self> {
        if t.len() != 2 * sigma.n() {
            return Err(Error::SizeMismatch {
                expected: 2 * sigma.n(),
                found: t.len(),
            });
        }
        Ok(Self { t, sigma })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            t: Cocharacter::zero(n),
            sigma: SignedPermutation::identity(n),
        }
    }

    pub fn translation(mu: &Cocharacter) -> Self {
        Self {
            t: mu.clone(),
            sigma: SignedPermutation::identity(mu.n()),
        }
    }

    pub fn from_perm(sigma: SignedPermutation) -> Self {
        Self {
            t: Cocharacter::zero(sigma.n()),
            sigma,
        }
    }

    pub fn tau(n: usize) -> Self {
        Self::from_perm(SignedPermutation::tau(n))
    }

    pub fn n(&self) -> usize {
        self.sigma.n()
    }

    pub fn translation_part(&self) -> &Cocharacter {
        &self.t
    }

    pub fn perm(&self) -> &SignedPermutation {
        &self.sigma
    }

    pub fn is_translation(&self) -> bool {
        self.sigma.is_identity()
    }

    /// Membership in `W̃° = X_*(T) ⋊ W°`.
    pub fn is_in_identity_component(&self) -> bool {
        self.sigma.is_in_w_circ()
    }

    /// `(t, σ)(t', σ') = (t + σt', σσ')`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                expected: 2 * self.n(),
                found: 2 * other.n(),
            });
        }
        Ok(self.mul(other))
    }

    pub(crate) fn mul(&self, other: &Self) -> Self {
        let moved = self.sigma.act_on_vector(&other.t).expect("same size");
        Self {
            t: self.t.add(&moved),
            sigma: self.sigma.compose_unchecked(&other.sigma),
        }
    }

    pub fn inverse(&self) -> Self {
        let inv = self.sigma.invert();
        let t = inv.act_on_vector(&self.t).expect("same size").neg();
        Self { t, sigma: inv }
    }

    /// `w · x = t + σx` on an arbitrary integer vector.
    pub fn act(&self, x: &[i64]) -> Vec<i64> {
        let moved = self.sigma.permute(x);
        moved
            .iter()
            .zip(self.t.coords())
            .map(|(a, b)| a + b)
            .collect()
    }

    /// `w · x` on a half-integral point.
    pub fn act_half(&self, x: &HalfVector) -> HalfVector {
        let moved = self.sigma.permute(x.twice());
        HalfVector::from_twice(
            moved
                .iter()
                .zip(self.t.coords())
                .map(|(a, b)| a + 2 * b)
                .collect(),
        )
    }

    /// `v_i = w · ω_i` for `0 <= i < 2n`.
    pub fn to_extended_alcove(&self) -> ExtendedAlcove {
        let n = self.n();
        let vertices = (0..2 * n)
            .map(|i| self.act(&standard_vertex(n, i)))
            .collect();
        ExtendedAlcove { n, vertices }
    }

    /// Inverse of [`to_extended_alcove`](Self::to_extended_alcove): `t = v_0` and
    /// `σ(k)` is the position where `v_{k-1}` and `v_k` differ.
    pub fn from_extended_alcove(alcove: &ExtendedAlcove) -> Result<Self> {
        let n = alcove.n;
        let t = Cocharacter::new(alcove.vertices[0].clone())?;
        let mut images = Vec::with_capacity(2 * n);
        for k in 1..=2 * n {
            let prev = alcove.vertex(k - 1);
            let cur = alcove.vertex(k);
            let pos = (0..2 * n)
                .find(|&j| prev[j] != cur[j])
                .ok_or_else(|| Error::InvalidAlcove(format!("v_{} = v_{k}", k - 1)))?;
            images.push(pos + 1);
        }
        let sigma = SignedPermutation::from_one_line(images)
            .map_err(|e| Error::InvalidAlcove(e.to_string()))?;
        let w = Self { t, sigma };
        if w.to_extended_alcove() != *alcove {
            return Err(Error::Internal("extended alcove round trip failed".into()));
        }
        Ok(w)
    }

    /// `w = x·ω` with `x ∈ W_a` and `ω ∈ Ω`, found by walking `wA` back to `A`
    /// through walls of `A`.
    pub fn omega_component(&self) -> (IwElement, IwElement) {
        let (word, omega) = self.reduced_word();
        let mut wa = IwElement::identity(self.n());
        for root in &word {
            wa = wa.mul(&root.reflection());
        }
        (wa, omega)
    }

    /// A reduced expression `w = s_1 ⋯ s_k ω` in the simple reflections, as the
    /// list of wall roots `s_1, …, s_k`, together with `ω`.
    pub fn reduced_word(&self) -> (Vec<AffineRoot>, IwElement) {
        let base = BaseAlcove::get(self.n());
        let mut cur = self.clone();
        let mut len = length(&cur);
        let mut word = Vec::with_capacity(len);
        while len > 0 {
            let step = base
                .walls()
                .iter()
                .map(|s| (s, s.reflection().mul(&cur)))
                .map(|(s, next)| (s, length(&next), next))
                .find(|(_, l, _)| *l < len);
            let (s, l, next) = step.expect("some wall of A separates A from wA");
            assert_eq!(
                l + 1,
                len,
                "simple reflection changed length by more than one"
            );
            word.push(*s);
            cur = next;
            len = l;
        }
        (word, cur)
    }

    pub fn omega_part(&self) -> IwElement {
        self.omega_component().1
    }

    pub fn same_wa_coset(&self, other: &Self) -> bool {
        self.n() == other.n() && self.omega_part() == other.omega_part()
    }
}

impl fmt::Debug for IwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(t={:?}, σ={:?})", self.t, self.sigma)
    }
}

/// Sequence `v_0, …, v_{2n-1}` of integer vectors satisfying
/// (A1) `v_0 >= v_1 >= … >= v_2n := v_0 - (1, …, 1)`,
/// (A2) `Σv_i = Σv_{i-1} - 1`, and
/// (A3) `v_i(j) + v_{2n-i}(j*) = d` for a constant `d`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtendedAlcove {
    n: usize,
    vertices: Vec<Vec<i64>>,
}

impl ExtendedAlcove {
    pub fn new(vertices: Vec<Vec<i64>>) -> Result<Self> {
        let len = vertices.len();
        if len < 2 || !len.is_multiple_of(2) || len > 64 {
            return Err(Error::InvalidAlcove(format!("{len} vertices is not 2n")));
        }
        let n = len / 2;
        if let Some(bad) = vertices.iter().find(|v| v.len() != len) {
            return Err(Error::InvalidAlcove(format!(
                "vertex of length {} in a sequence of {len}",
                bad.len()
            )));
        }
        // Bounded entries keep every derived quantity within i64.
        if vertices
            .iter()
            .flatten()
            .any(|x| x.unsigned_abs() > 1 << 40)
        {
            return Err(Error::InvalidAlcove("entries out of range".into()));
        }
        let alcove = Self { n, vertices };
        for i in 1..=len {
            let prev = alcove.vertex(i - 1);
            let cur = alcove.vertex(i);
            if prev.iter().zip(&cur).any(|(a, b)| a < b) {
                return Err(Error::InvalidAlcove(format!(
                    "v_{} >= v_{i} fails (A1)",
                    i - 1
                )));
            }
            if cur.iter().sum::<i64>() != prev.iter().sum::<i64>() - 1 {
                return Err(Error::InvalidAlcove(format!(
                    "Σv_{i} = Σv_{} - 1 fails (A2)",
                    i - 1
                )));
            }
        }
        let d = alcove.vertex(1)[0] + alcove.vertex(len - 1)[len - 1];
        for i in 1..=len {
            let vi = alcove.vertex(i);
            let vd = alcove.vertex(len - i);
            for j in 1..=len {
                if vi[j - 1] + vd[star(n, j) - 1] != d {
                    return Err(Error::InvalidAlcove(format!(
                        "duality fails at i = {i}, j = {j} (A3)"
                    )));
                }
            }
        }
        Ok(alcove)
    }

    /// The standard extended alcove `ω_0, …, ω_{2n-1}`.
    pub fn standard(n: usize) -> Self {
        Self {
            n,
            vertices: (0..2 * n).map(|i| standard_vertex(n, i)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `v_i` for `0 <= i <= 2n`; `v_2n = v_0 - (1, …, 1)`.
    pub fn vertex(&self, i: usize) -> Vec<i64> {
        if i == 2 * self.n {
            self.vertices[0].iter().map(|x| x - 1).collect()
        } else {
            self.vertices[i].clone()
        }
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    /// The constant `d` of (A3).
    pub fn duality_constant(&self) -> i64 {
        let len = 2 * self.n;
        self.vertex(1)[0] + self.vertex(len - 1)[len - 1]
    }
}

impl fmt::Debug for ExtendedAlcove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.vertices).finish()
    }
}

/// The base alcove `A` in the negative chamber, through its closed-vertex list.
#[derive(Clone, Debug)]
pub struct BaseAlcove {
    n: usize,
    vertices: Vec<(String, HalfVector)>,
    walls: Vec<AffineRoot>,
    interior_scale: i64,
    interior: Vec<i64>,
}

static BASE_ALCOVES: [OnceLock<BaseAlcove>; 33] = [const { OnceLock::new() }; 33];

impl BaseAlcove {
    /// Shared instance for rank `n` (`2 <= n <= 32`).
    pub fn get(n: usize) -> &'static BaseAlcove {
        assert!((2..=32).contains(&n), "n = {n} out of range");
        BASE_ALCOVES[n].get_or_init(|| BaseAlcove::build(n))
    }

    fn build(n: usize) -> Self {
        let len = 2 * n;
        let mut vertices = Vec::new();
        vertices.push(("a_0".to_string(), HalfVector::from_twice(vec![0; len])));
        let mut a0p = vec![0; len];
        a0p[0] = -2;
        a0p[len - 1] = 2;
        vertices.push(("a_0'".to_string(), HalfVector::from_twice(a0p)));
        for i in 2..=n.saturating_sub(2) {
            let mut v = vec![0; len];
            v[..i].fill(-1);
            v[len - i..].fill(1);
            vertices.push((format!("a_{i}"), HalfVector::from_twice(v)));
        }
        let mut an = vec![1; len];
        an[..n].fill(-1);
        vertices.push((format!("a_{n}"), HalfVector::from_twice(an.clone())));
        an[n - 1] = 1;
        an[n] = -1;
        vertices.push((format!("a_{n}'"), HalfVector::from_twice(an)));

        // Barycenter of the vertices, scaled by 2·#vertices to stay integral.
        let interior_scale = 2 * vertices.len() as i64;
        let mut interior = vec![0; len];
        for (_, v) in &vertices {
            for (acc, x) in interior.iter_mut().zip(v.twice()) {
                *acc += x;
            }
        }
        let mut alcove = Self {
            n,
            vertices,
            walls: Vec::new(),
            interior_scale,
            interior,
        };
        alcove.walls = alcove.find_walls();
        alcove
    }

    /// Affine roots `α_{a,b;d}` (`d ∈ {0, -1}`) whose zero set meets the closed
    /// alcove in a facet, i.e. in vertices of affine rank `n - 1`.
    fn find_walls(&self) -> Vec<AffineRoot> {
        let mut walls = Vec::new();
        for (a, b) in root_directions(self.n) {
            for d in [0, -1] {
                let on_wall: Vec<&[i64]> = self
                    .vertices
                    .iter()
                    .map(|(_, v)| v.twice())
                    .filter(|v| v[a - 1] - v[b - 1] == 2 * d)
                    .collect();
                if on_wall.is_empty() {
                    continue;
                }
                let diffs: Vec<Vec<i64>> = on_wall[1..]
                    .iter()
                    .map(|v| v.iter().zip(on_wall[0]).map(|(x, y)| x - y).collect())
                    .collect();
                if integer_rank(&diffs).expect("small entries") == self.n - 1 {
                    walls.push(AffineRoot::new(self.n, a, b, d).expect("normalized direction"));
                }
            }
        }
        walls.sort();
        walls
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Named closed vertices, with representatives satisfying `c = 0`.
    pub fn vertices(&self) -> &[(String, HalfVector)] {
        &self.vertices
    }

    /// Walls of `A`; their reflections are the simple affine reflections.
    pub fn walls(&self) -> &[AffineRoot] {
        &self.walls
    }

    /// An interior point `p`, returned as `(scale, scale·p)`.
    pub fn interior_point(&self) -> (i64, &[i64]) {
        (self.interior_scale, &self.interior)
    }
}

/// Rank over `ℚ` by fraction-free elimination, dividing rows by their content
/// after each step. `None` on overflow.
pub(crate) fn integer_rank(rows: &[Vec<i64>]) -> Option<usize> {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let pivot_row = m[rank].clone();
        for row in m.iter_mut().skip(rank + 1) {
            let factor = row[col];
            if factor == 0 {
                continue;
            }
            let pivot = pivot_row[col];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = x.checked_mul(pivot)?.checked_sub(factor.checked_mul(y)?)?;
            }
            let g = row.iter().fold(0i128, |g, &x| gcd(g, x.abs()));
            if g > 1 {
                row.iter_mut().for_each(|x| *x /= g);
            }
        }
        rank += 1;
    }
    Some(rank)
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
