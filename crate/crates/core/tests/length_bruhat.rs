use std::collections::BTreeSet;

use alcove_spin::iwahori_weyl::BaseAlcove;
use alcove_spin::length_bruhat::{reflect, root_directions, separating_hyperplanes, BruhatOracle};
use alcove_spin::root_datum::{orbit, w_group};
use alcove_spin::{bruhat_leq, length, lower_closure, AffineRoot, Cocharacter, IwElement, Mu};
use proptest::prelude::*;

/// `{x : x ≤ w}` by the subword property: products of subwords of a reduced
/// word of `w`, times its length-zero part.
fn subword_closure(w: &IwElement) -> BTreeSet<IwElement> {
    let (word, omega) = w.reduced_word();
    assert_eq!(word.len(), length(w));
    let mut out = BTreeSet::new();
    for mask in 0u32..1 << word.len() {
        let mut x = IwElement::identity(w.n());
        for (k, s) in word.iter().enumerate() {
            if mask >> k & 1 == 1 {
                x = x.multiply(&s.reflection()).unwrap();
            }
        }
        out.insert(x.multiply(&omega).unwrap());
    }
    out
}

fn sample(n: usize) -> Vec<IwElement> {
    let shifts = [
        Cocharacter::zero(n),
        Cocharacter::mu1(n),
        Cocharacter::mu2(n),
        Cocharacter::mu1(n).scale(2),
    ];
    let mut out = Vec::new();
    for t in &shifts {
        for s in w_group(n) {
            out.push(IwElement::new(t.clone(), s).unwrap());
        }
    }
    out
}

#[test]
fn lower_closure_matches_subwords() {
    for n in 2..=3 {
        for mu in Mu::ALL {
            let tops: Vec<IwElement> = orbit(&mu.cocharacter(n), n)
                .unwrap()
                .iter()
                .map(IwElement::translation)
                .collect();
            let by_subwords: BTreeSet<IwElement> = tops.iter().flat_map(subword_closure).collect();
            let by_bfs: BTreeSet<IwElement> = lower_closure(&tops).into_iter().collect();
            assert_eq!(by_bfs, by_subwords, "n = {n}, {mu}");
        }
    }
    let w = IwElement::translation(&Cocharacter::mu1(2));
    assert_eq!(lower_closure(std::slice::from_ref(&w)).len(), 2);
}

#[test]
fn bruhat_leq_matches_subwords() {
    let n = 3;
    let tops = sample(n).into_iter().step_by(5).take(20);
    for top in tops {
        let below = subword_closure(&top);
        for x in &below {
            assert!(bruhat_leq(x, &top));
        }
        for x in sample(n).iter().filter(|x| !below.contains(x)).take(40) {
            assert!(!bruhat_leq(x, &top));
        }
    }
}

#[test]
fn lower_closure_is_idempotent() {
    let tops = vec![IwElement::translation(&Cocharacter::mu1(3))];
    let once = lower_closure(&tops);
    assert_eq!(lower_closure(&once), once);
}

#[test]
fn length_symmetries() {
    for n in 2..=4 {
        let tau = IwElement::tau(n);
        for w in sample(n).into_iter().step_by(3) {
            let l = length(&w);
            assert_eq!(length(&w.inverse()), l);
            assert_eq!(length(&tau.multiply(&w).unwrap()), l);
            assert_eq!(length(&w.multiply(&w.omega_part()).unwrap()), l);
        }
    }
}

#[test]
fn walls_are_exactly_the_length_one_reflections() {
    for n in 2..=5 {
        let mut length_one = Vec::new();
        for (a, b) in root_directions(n) {
            for d in -2..=2 {
                let alpha = AffineRoot::new(n, a, b, d).unwrap();
                if length(&alpha.reflection()) == 1 {
                    length_one.push(alpha);
                }
            }
        }
        length_one.sort();
        assert_eq!(BaseAlcove::get(n).walls(), &length_one[..]);
    }
}

#[test]
fn bruhat_order_is_graded_and_tau_invariant() {
    let n = 3;
    let closure = lower_closure(&[IwElement::translation(&Cocharacter::mu1(n))]);
    let tau = IwElement::tau(n);
    let conj = |w: &IwElement| tau.multiply(w).unwrap().multiply(&tau.inverse()).unwrap();
    for x in &closure {
        for y in &closure {
            let leq = bruhat_leq(x, y);
            assert_eq!(leq, bruhat_leq(&conj(x), &conj(y)));
            assert_eq!(
                leq,
                bruhat_leq(&tau.multiply(x).unwrap(), &tau.multiply(y).unwrap())
            );
            if leq && x != y {
                assert!(length(x) < length(y));
                assert!(!bruhat_leq(y, x));
                let between = closure
                    .iter()
                    .any(|z| z != x && z != y && bruhat_leq(x, z) && bruhat_leq(z, y));
                if !between {
                    assert_eq!(length(x) + 1, length(y), "cover {x:?} < {y:?}");
                }
            }
        }
    }
}

#[test]
fn reflection_moves_extended_alcove_pointwise() {
    let n = 3;
    for w in sample(n).into_iter().step_by(11) {
        for (a, b) in root_directions(n) {
            let alpha = AffineRoot::new(n, a, b, -1).unwrap();
            let s = alpha.reflection();
            let moved = reflect(&alpha, &w).unwrap().to_extended_alcove();
            let expected: Vec<Vec<i64>> = w
                .to_extended_alcove()
                .vertices()
                .iter()
                .map(|v| s.act(v))
                .collect();
            assert_eq!(moved.vertices(), &expected[..]);
        }
    }
}

#[test]
fn fixed_hyperplane() {
    let alpha = AffineRoot::new(3, 1, 2, 0).unwrap();
    let x = [4, 4, 1, 2, 9, 9];
    assert_eq!(alpha.reflection().act(&x), x.to_vec());
    let alpha = AffineRoot::new(2, 1, 2, 0).unwrap();
    assert_eq!(alpha.reflection().act(&[1, 0, 1, 0]), vec![0, 1, 0, 1]);
    let alpha = AffineRoot::new(2, 1, 2, 1).unwrap();
    assert_eq!(alpha.reflection().act(&[0, 0, 0, 0]), vec![1, -1, 1, -1]);
}

#[test]
fn distinct_translations_of_equal_length_are_incomparable() {
    let a = IwElement::translation(&Cocharacter::new(vec![1, 1, 0, 0]).unwrap());
    let b = IwElement::translation(&Cocharacter::new(vec![0, 0, 1, 1]).unwrap());
    assert!(!bruhat_leq(&a, &b));
    assert!(!bruhat_leq(&b, &a));
    assert!(bruhat_leq(&a, &a));
    let id = IwElement::identity(2);
    assert!(!bruhat_leq(&id, &a));
    assert_eq!(lower_closure(std::slice::from_ref(&id)), vec![id]);
}

fn any_element() -> impl Strategy<Value = IwElement> {
    let group = w_group(3);
    (
        proptest::collection::vec(-3i64..=3, 3),
        -3i64..=3,
        0..group.len(),
    )
        .prop_map(move |(head, c, k)| {
            let mut v = head.clone();
            v.extend(head.iter().rev().map(|x| c - x));
            IwElement::new(Cocharacter::new(v).unwrap(), group[k].clone()).unwrap()
        })
}

proptest! {
    #[test]
    fn reflections_never_preserve_length(w in any_element(), k in 0usize..6, d in -3i64..=3) {
        let (a, b) = root_directions(3)[k];
        let alpha = AffineRoot::new(3, a, b, d).unwrap();
        let sw = reflect(&alpha, &w).unwrap();
        prop_assert_ne!(length(&sw), length(&w));
        prop_assert_eq!(reflect(&alpha, &sw).unwrap(), w.clone());
        let separates = separating_hyperplanes(&w).contains(&alpha);
        prop_assert_eq!(separates, length(&sw) < length(&w));
    }

    #[test]
    fn wall_reflections_change_length_by_one(w in any_element()) {
        let l = length(&w);
        for s in BaseAlcove::get(3).walls() {
            let ls = length(&s.reflection().multiply(&w).unwrap());
            prop_assert!(ls + 1 == l || l + 1 == ls);
        }
    }

    #[test]
    fn omega_factorization(w in any_element()) {
        let (wa, omega) = w.omega_component();
        prop_assert_eq!(wa.multiply(&omega).unwrap(), w.clone());
        prop_assert_eq!(length(&omega), 0);
        prop_assert!(wa.translation_part().in_coroot_lattice());
        prop_assert!(wa.perm().is_in_w_circ());
    }
}

#[test]
fn coset_test_matches_coroot_lattice() {
    let n = 2;
    let elements = sample(n);
    for x in elements.iter().step_by(3) {
        for y in elements.iter().step_by(5) {
            let quotient = x.multiply(&y.inverse()).unwrap();
            let same =
                quotient.translation_part().in_coroot_lattice() && quotient.perm().is_in_w_circ();
            assert_eq!(x.same_wa_coset(y), same, "{x:?} vs {y:?}");
        }
    }
}

#[test]
fn memoized_oracle_agrees() {
    let mut oracle = BruhatOracle::new();
    let tops: Vec<IwElement> = orbit(&Cocharacter::mu2(3), 3)
        .unwrap()
        .iter()
        .map(IwElement::translation)
        .collect();
    let all = lower_closure(&tops);
    for top in &tops {
        for x in &all {
            assert_eq!(oracle.leq(x, top), bruhat_leq(x, top));
        }
    }
}
