//! Summary of every set and check for one `(n, μ)`.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::admissibility::{adm, adm_circ, ascent_chain};
use crate::codec::set_value;
use crate::iwahori_weyl::{BaseAlcove, IwElement};
use crate::permissibility::{enumerate_perm, enumerate_perm_sp, z_set};
use crate::root_datum::Mu;
use crate::spin_exterior::eigenspace_dimension;
use crate::Result;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SetSizes {
    pub adm_circ: usize,
    pub adm: usize,
    pub perm_sp: usize,
    pub perm: usize,
    pub z_even: usize,
    pub z: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Flags {
    /// `Adm°(μ) = Perm^sp(μ)`.
    pub adm_circ_eq_perm_sp: bool,
    /// `Perm^sp(μ) = Perm(μ)`.
    pub perm_sp_eq_perm: bool,
    /// `Adm(μ) = Perm^sp(μ1) ⊔ Perm^sp(μ2)`.
    pub adm_eq_spin_permissible: bool,
    /// `Perm^sp(μ1) ⊔ Perm^sp(μ2) ⊊ Z ∩ W̃°`.
    pub spin_strictly_in_z_even: bool,
    /// `Z ∩ W̃° ⊊ Z`.
    pub z_even_strictly_in_z: bool,
    /// Every element of `Perm^sp(μ)` carries a verified ascent certificate.
    pub all_certified: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct WallJson {
    pub i: usize,
    pub j: usize,
    pub d: i64,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct EigenDims {
    pub plus: usize,
    pub minus: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Report {
    pub n: usize,
    pub mu: String,
    pub sizes: SetSizes,
    pub flags: Flags,
    pub certificates: usize,
    pub walls: Vec<WallJson>,
    pub eigenspace_dims: EigenDims,
    /// Wall-clock time of [`Report::build`], omitted for reproducible output.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

fn same(a: &[IwElement], b: &[IwElement]) -> bool {
    // Byte comparison of the canonical serializations.
    let (x, y) = (set_value(a).to_string(), set_value(b).to_string());
    x == y
}

fn strictly_contained(small: &[IwElement], big: &[IwElement]) -> bool {
    small.len() < big.len() && small.iter().all(|w| big.binary_search(w).is_ok())
}

impl Report {
    pub fn build(n: usize, mu: Mu) -> Result<Report> {
        let start = Instant::now();
        let adm_circ_set = adm_circ(n, mu);
        let adm_set = adm(n, mu);
        let perm_sp = enumerate_perm_sp(n, mu);
        let perm_sp_other = enumerate_perm_sp(n, mu.swap());
        let perm = enumerate_perm(n, mu);
        let z = z_set(n);
        let z_even: Vec<IwElement> = z
            .iter()
            .filter(|w| w.is_in_identity_component())
            .cloned()
            .collect();

        let mut spin: Vec<IwElement> = perm_sp.iter().chain(&perm_sp_other).cloned().collect();
        spin.sort();
        let disjoint = spin.windows(2).all(|p| p[0] != p[1]);

        let certified: Vec<bool> = perm_sp
            .par_iter()
            .map(|w| ascent_chain(w, mu).is_ok())
            .collect();
        let certificates = certified.iter().filter(|&&ok| ok).count();

        let walls = BaseAlcove::get(n)
            .walls()
            .iter()
            .map(|a| WallJson {
                i: a.i(),
                j: a.j(),
                d: a.d(),
            })
            .collect();

        Ok(Report {
            n,
            mu: mu.label().to_string(),
            sizes: SetSizes {
                adm_circ: adm_circ_set.len(),
                adm: adm_set.len(),
                perm_sp: perm_sp.len(),
                perm: perm.len(),
                z_even: z_even.len(),
                z: z.len(),
            },
            flags: Flags {
                adm_circ_eq_perm_sp: same(&adm_circ_set, &perm_sp),
                perm_sp_eq_perm: same(&perm_sp, &perm),
                adm_eq_spin_permissible: disjoint && same(&adm_set, &spin),
                spin_strictly_in_z_even: strictly_contained(&spin, &z_even),
                z_even_strictly_in_z: strictly_contained(&z_even, &z),
                all_certified: certificates == perm_sp.len(),
            },
            certificates,
            walls,
            eigenspace_dims: EigenDims {
                plus: eigenspace_dimension(n, 1)?,
                minus: eigenspace_dimension(n, -1)?,
            },
            elapsed_ms: Some(start.elapsed().as_millis()),
        })
    }

    pub fn without_timing(mut self) -> Report {
        self.elapsed_ms = None;
        self
    }

    pub fn passed(&self) -> bool {
        let f = &self.flags;
        f.adm_circ_eq_perm_sp
            && f.perm_sp_eq_perm
            && f.adm_eq_spin_permissible
            && f.spin_strictly_in_z_even
            && f.z_even_strictly_in_z
            && f.all_certified
    }

    /// JSON with sorted keys.
    pub fn to_value(&self) -> Value {
        serde_json::to_value(self).expect("plain data serializes")
    }

    pub const CSV_HEADER: &'static str =
        "n,mu,adm_circ,adm,perm_sp,perm,z_even,z,certificates,eigen_plus,eigen_minus,passed";

    pub fn csv_row(&self) -> String {
        let s = &self.sizes;
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            self.n,
            self.mu,
            s.adm_circ,
            s.adm,
            s.perm_sp,
            s.perm,
            s.z_even,
            s.z,
            self.certificates,
            self.eigenspace_dims.plus,
            self.eigenspace_dims.minus,
            self.passed()
        )
    }
}
