use alcove_spin::admissibility::{gl_reflection_condition, lemma_glperm_bruhat, lemma_root};
use alcove_spin::length_bruhat::root_directions;
use alcove_spin::permissibility::k_interval;
use alcove_spin::root_datum::{binom2, isotropic_orbit, star};
use alcove_spin::{
    adm, adm_circ, ascent_chain, ascent_step, bruhat_leq, enumerate_perm_sp, is_gl_permissible,
    is_spin_permissible, length, z_set, AffineRoot, IwElement, Mu,
};

fn long_runs() -> bool {
    std::env::var("ALCOVE_SPIN_LONG").is_ok_and(|v| v == "1")
}

/// Every root `α_{a,b;d}` with `|d| <= 1` whose reflection moves `w` up inside
/// `Perm^sp(μ)`.
fn brute_force_ascents(w: &IwElement, mu: Mu) -> Vec<AffineRoot> {
    let n = w.n();
    let l = length(w);
    let mut out = Vec::new();
    for (a, b) in root_directions(n) {
        for d in -1..=1 {
            let alpha = AffineRoot::new(n, a, b, d).unwrap();
            let next = alpha.reflection().multiply(w).unwrap();
            if is_spin_permissible(&next, mu) && length(&next) > l {
                out.push(alpha);
            }
        }
    }
    out
}

#[test]
fn ascent_step_is_one_of_the_brute_force_ascents() {
    for n in 2..=3 {
        for mu in Mu::ALL {
            for w in enumerate_perm_sp(n, mu) {
                let candidates = brute_force_ascents(&w, mu);
                if w.is_translation() {
                    assert!(candidates.is_empty(), "translation {w:?} is not maximal");
                    assert!(ascent_step(&w, mu).is_err());
                    continue;
                }
                let alpha = ascent_step(&w, mu).unwrap();
                assert!(candidates.contains(&alpha), "{alpha:?} at {w:?}");
            }
        }
    }
}

#[test]
fn chains_end_at_translations_in_the_orbit() {
    for n in 2..=3 {
        for mu in Mu::ALL {
            for w in enumerate_perm_sp(n, mu) {
                let cert = ascent_chain(&w, mu).unwrap();
                cert.verify().unwrap();
                assert!(cert.chain.len() <= binom2(n) - length(&w));
                assert_eq!(isotropic_orbit(cert.target.coords()), Some(mu));
                let top = IwElement::translation(&cert.target);
                assert_eq!(length(&top), binom2(n));
                assert!(bruhat_leq(&w, &top));
            }
        }
    }
}

#[test]
fn tampered_certificate_is_rejected() {
    let w = enumerate_perm_sp(3, Mu::Mu1)
        .into_iter()
        .find(|w| length(w) == 0)
        .unwrap();
    let mut cert = ascent_chain(&w, Mu::Mu1).unwrap();
    cert.verify().unwrap();
    cert.chain.pop();
    assert!(cert.verify().is_err());
    let mut cert = ascent_chain(&w, Mu::Mu1).unwrap();
    cert.mu = Mu::Mu2;
    assert!(cert.verify().is_err());
}

#[test]
fn adm_circ_has_one_maximal_element_per_orbit_point() {
    for n in 2..=3 {
        for mu in Mu::ALL {
            let set = adm_circ(n, mu);
            let maximal: Vec<&IwElement> = set
                .iter()
                .filter(|x| !set.iter().any(|y| y != *x && bruhat_leq(x, y)))
                .collect();
            assert_eq!(maximal.len(), 1 << (n - 1));
            assert!(maximal.iter().all(|w| w.is_translation()));
            // Every element of Adm° lies in a single W_a-coset.
            assert!(set.iter().all(|w| w.same_wa_coset(&set[0])));
        }
    }
}

#[test]
fn adm_is_adm_circ_and_its_tau_conjugate() {
    for n in 2..=3 {
        for mu in Mu::ALL {
            let circ = adm_circ(n, mu);
            let full = adm(n, mu);
            assert_eq!(full.len(), 2 * circ.len());
            let tau = IwElement::tau(n);
            for w in &circ {
                assert!(full.binary_search(w).is_ok());
                let conj = tau.multiply(w).unwrap().multiply(&tau.inverse()).unwrap();
                assert!(full.binary_search(&conj).is_ok());
                assert!(circ.binary_search(&conj).is_err());
            }
        }
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=2 * n).flat_map(move |i| {
        (1..=2 * n)
            .filter(move |&j| j != i && j != star(n, i))
            .map(move |j| (i, j))
    })
}

#[test]
fn weak_reflection_lemma() {
    for n in 2..=3 {
        for w in z_set(n) {
            for (i, j) in pairs(n) {
                let next = lemma_root(n, i, j)
                    .unwrap()
                    .reflection()
                    .multiply(&w)
                    .unwrap();
                assert_eq!(
                    gl_reflection_condition(&w, i, j).unwrap(),
                    is_gl_permissible(&next),
                    "{w:?} i={i} j={j}"
                );
            }
        }
    }
}

/// Both directions of the strong form: for proper `i`, `i ∈ K_j` and
/// `ĩ ∉ K_j` exactly when the reflection gives a longer GL-permissible element.
#[test]
fn strong_reflection_lemma() {
    let top = if long_runs() { 4 } else { 3 };
    for n in 2..=top {
        let mut holds = 0;
        for w in z_set(n) {
            for (i, j) in pairs(n) {
                if !k_interval(&w, i).unwrap().is_proper() {
                    continue;
                }
                let condition = lemma_glperm_bruhat(i, j, &w).unwrap();
                let next = lemma_root(n, i, j)
                    .unwrap()
                    .reflection()
                    .multiply(&w)
                    .unwrap();
                let ascends = is_gl_permissible(&next) && length(&next) > length(&w);
                assert_eq!(condition, ascends, "{w:?} i={i} j={j}");
                holds += usize::from(condition);
            }
        }
        assert!(holds > 0);
    }
}

#[test]
fn lemma_inputs_are_validated() {
    let w = z_set(2).into_iter().find(|w| !w.is_translation()).unwrap();
    assert!(gl_reflection_condition(&w, 1, 4).is_err());
    assert!(gl_reflection_condition(&w, 1, 1).is_err());
    assert!(lemma_glperm_bruhat(0, 2, &w).is_err());
    let t = IwElement::translation(&Mu::Mu1.cocharacter(2));
    assert!(lemma_glperm_bruhat(1, 2, &t).is_err());
}
