//! Agreement between independent computations of the same object.

use hochlie::assoc::{center, group_algebra, radical, radical_chop, radical_frobenius, AssocAlgebra};
use hochlie::deriv::{derivations, derivations_by_basis_pairs, inner_derivations};
use hochlie::verify::{catalog, SuiteConfig};
use hochlie::{GroupSpec, PrimeField, Scalar, Subspace};

fn test_algebras(max: usize) -> Vec<(String, AssocAlgebra)> {
    let cfg = SuiteConfig { max_group_order: max, ..SuiteConfig::default() };
    catalog(&cfg).unwrap().into_iter().map(|e| (e.id.clone(), e.build().unwrap())).collect()
}

/// Commutative algebras outside the p-group families, including non-local and
/// non-split ones.
fn extra_commutative() -> Vec<(String, AssocAlgebra)> {
    [(6, 2), (6, 3), (10, 5), (3, 2), (5, 2), (14, 7), (12, 2)]
        .into_iter()
        .map(|(n, p)| {
            let a = group_algebra(&GroupSpec::Cyclic { n }.build().unwrap(), PrimeField::new(p).unwrap()).unwrap();
            (format!("k[C{n}]/GF({p})"), a)
        })
        .collect()
}

#[test]
fn chop_radical_matches_frobenius_kernel_on_commutative_algebras() {
    let mut checked = 0;
    for (id, a) in test_algebras(32).into_iter().chain(extra_commutative()) {
        if !a.is_commutative() {
            continue;
        }
        let chop = radical_chop(&a, 0).unwrap();
        let frob = radical_frobenius(&a).unwrap();
        assert_eq!(chop, frob, "{id}");
        checked += 1;
    }
    assert!(checked >= 25, "only {checked} commutative algebras");
}

#[test]
fn chop_radical_is_the_augmentation_ideal_of_p_group_algebras() {
    for (id, a) in test_algebras(32) {
        let Some(spec) = a.meta().group.clone() else { continue };
        let g = spec.build().unwrap();
        if g.p_group_prime() != Some(a.field().p()) {
            continue;
        }
        let f = a.field();
        let aug: Vec<Vec<Scalar>> = (0..a.dim())
            .filter(|&x| x != g.identity())
            .map(|x| {
                let mut v = vec![0; a.dim()];
                v[x] = 1;
                v[g.identity()] = f.neg(1);
                v
            })
            .collect();
        let aug = Subspace::from_vectors(f, a.dim(), aug);
        assert_eq!(radical_chop(&a, 0).unwrap(), aug, "{id}");
        assert_eq!(radical(&a).unwrap().space(), &aug, "{id}");
    }
}

#[test]
fn generator_derivations_match_all_pairs_system() {
    for (id, a) in test_algebras(16).into_iter().chain(extra_commutative()) {
        let fast = derivations(&a).unwrap();
        let slow = derivations_by_basis_pairs(&a).unwrap();
        assert_eq!(fast.space(), slow.space(), "{id}");
    }
}

#[test]
fn inner_derivation_count_matches_center() {
    for (id, a) in test_algebras(16) {
        let ider = inner_derivations(&a).unwrap();
        let z = center(&a).unwrap();
        assert_eq!(ider.dim() + z.algebra.dim(), a.dim(), "{id}");
        if let Some(spec) = &a.meta().group {
            // the center of kG has one basis element per conjugacy class
            assert_eq!(z.algebra.dim(), spec.build().unwrap().conjugacy_classes().len(), "{id}");
        }
    }
}
