//! Affine roots and reflections, the length function and the Bruhat order.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;

use crate::iwahori_weyl::{BaseAlcove, IwElement};
use crate::root_datum::{star, Cocharacter, SignedPermutation};
use crate::{Error, Result};

/// The affine function `x ↦ x_i - x_j - d` with `i < j`, `j ≠ i*`, stored in the
/// representative of `α_{i,j;d} = α_{j*,i*;d}` with the smaller first index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineRoot {
    n: u8,
    i: u8,
    j: u8,
    d: i64,
}

impl AffineRoot {
    pub fn new(n: usize, i: usize, j: usize, d: i64) -> Result<Self> {
        let bad = || Error::InvalidRoot { i, j, d };
        if !(2..=32).contains(&n) || i == 0 || j > 2 * n || i >= j || j == star(n, i) {
            return Err(bad());
        }
        let (i, j) = if i < star(n, j) {
            (i, j)
        } else {
            (star(n, j), star(n, i))
        };
        Ok(Self {
            n: n as u8,
            i: i as u8,
            j: j as u8,
            d,
        })
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn i(&self) -> usize {
        self.i as usize
    }

    pub fn j(&self) -> usize {
        self.j as usize
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn eval(&self, x: &[i64]) -> i64 {
        x[self.i() - 1] - x[self.j() - 1] - self.d
    }

    /// `s_α = t_{d(e_i - e_j + e_j* - e_i*)} · (i j)(i* j*)`.
    pub fn reflection(&self) -> IwElement {
        let n = self.n();
        let (i, j) = (self.i(), self.j());
        let (is, js) = (star(n, i), star(n, j));
        let mut images: Vec<usize> = (1..=2 * n).collect();
        images.swap(i - 1, j - 1);
        images.swap(is - 1, js - 1);
        let sigma = SignedPermutation::from_one_line(images).expect("double transposition");
        let mut t = vec![0; 2 * n];
        t[i - 1] += self.d;
        t[j - 1] -= self.d;
        t[js - 1] += self.d;
        t[is - 1] -= self.d;
        let t = Cocharacter::new(t).expect("c = 0");
        IwElement::new(t, sigma).expect("matching sizes")
    }
}

impl fmt::Debug for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "α({},{};{})", self.i, self.j, self.d)
    }
}

/// Pairs `(a, b)`, `a < b`, `b ≠ a*`, one per root direction up to `α ~ α*`.
pub fn root_directions(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * (n - 1));
    for a in 1..=2 * n {
        for b in a + 1..=2 * n {
            if b != star(n, a) && a < star(n, b) {
                out.push((a, b));
            }
        }
    }
    out
}

/// `s_α · w`.
pub fn reflect(alpha: &AffineRoot, w: &IwElement) -> Result<IwElement> {
    alpha.reflection().multiply(w)
}

/// For each root direction, the value `floor(α_0(w·p))` at the image of the
/// barycenter `p` of `A`.
fn image_floors(w: &IwElement) -> Vec<((usize, usize), i64)> {
    let n = w.n();
    let base = BaseAlcove::get(n);
    let (scale, p) = base.interior_point();
    let q: Vec<i64> = w
        .perm()
        .permute(p)
        .iter()
        .zip(w.translation_part().coords())
        .map(|(x, t)| x + scale * t)
        .collect();
    root_directions(n)
        .into_iter()
        .map(|(a, b)| {
            let diff = q[a - 1] - q[b - 1];
            assert!(diff % scale != 0, "barycenter image lies on a hyperplane");
            ((a, b), diff.div_euclid(scale))
        })
        .collect()
}

/// Affine root hyperplanes separating the interiors of `A` and `w·A`.
pub fn separating_hyperplanes(w: &IwElement) -> Vec<AffineRoot> {
    let n = w.n();
    let mut out = Vec::new();
    for ((a, b), f) in image_floors(w) {
        let range = if f >= 0 { 0..=f } else { f + 1..=-1 };
        for d in range {
            out.push(AffineRoot::new(n, a, b, d).expect("normalized direction"));
        }
    }
    out.sort();
    out
}

/// `ℓ(w)`, the number of hyperplanes separating `A` from `w·A`.
pub fn length(w: &IwElement) -> usize {
    image_floors(w)
        .into_iter()
        .map(|(_, f)| (f + 1).unsigned_abs() as usize)
        .sum()
}

/// Elements `s_H · w` for the hyperplanes `H` separating `A` and `wA`; these are
/// exactly the reflections `s` with `ℓ(sw) < ℓ(w)`.
fn descents(w: &IwElement) -> Vec<IwElement> {
    separating_hyperplanes(w)
        .iter()
        .map(|h| h.reflection().mul(w))
        .collect()
}

/// `{x : x ≤ w for some w ∈ tops}`, sorted.
pub fn lower_closure(tops: &[IwElement]) -> Vec<IwElement> {
    let mut seen: HashSet<IwElement> = tops.iter().cloned().collect();
    let mut frontier: Vec<IwElement> = seen.iter().cloned().collect();
    while !frontier.is_empty() {
        let next: Vec<IwElement> = frontier.par_iter().flat_map_iter(descents).collect();
        frontier.clear();
        for x in next {
            if seen.insert(x.clone()) {
                frontier.push(x);
            }
        }
    }
    let sorted: BTreeSet<IwElement> = seen.into_iter().collect();
    sorted.into_iter().collect()
}

/// Bruhat order on `W̃`: same `W_a`-coset and comparable `W_a`-parts.
pub fn bruhat_leq(w: &IwElement, w2: &IwElement) -> bool {
    if w.n() != w2.n() || !w.same_wa_coset(w2) {
        return false;
    }
    let target = length(w);
    let mut seen = HashSet::new();
    let mut stack = vec![w2.clone()];
    while let Some(x) = stack.pop() {
        if x == *w {
            return true;
        }
        if length(&x) <= target || !seen.insert(x.clone()) {
            continue;
        }
        stack.extend(descents(&x));
    }
    false
}

/// Repeated Bruhat queries against a fixed family of upper elements, with each
/// lower closure computed once.
#[derive(Default)]
pub struct BruhatOracle {
    closures: HashMap<IwElement, HashSet<IwElement>>,
}

impl BruhatOracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn leq(&mut self, w: &IwElement, top: &IwElement) -> bool {
        self.closures
            .entry(top.clone())
            .or_insert_with(|| {
                lower_closure(std::slice::from_ref(top))
                    .into_iter()
                    .collect()
            })
            .contains(w)
    }
}
