use serde::{Deserialize, Serialize};

use super::ideals::{ideal_product, quotient, IdealSubspace};
use super::{AssocAlgebra, RadicalHint};
use crate::error::{Error, Result};
use crate::ffmat::{Matrix, QuotientBasis, Scalar, Subspace};
use crate::meataxe::{exhaustive_submodule, find_submodule, SearchParams, SubmoduleSearch};

/// Seed for the chopping search inside [`radical`].
const CHOP_SEED: u64 = 0x5eed_0001;
/// Independent reseeds before giving up on a factor.
const CHOP_RETRIES: u64 = 3;
/// Largest number of 1-dimensional subspaces scanned by the exhaustive fallback.
const EXHAUSTIVE_LINES: u64 = 2_000_000;

/// Which algorithm produced the cached radical.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RadicalMethod {
    Frobenius,
    Augmentation,
    Chop,
}

/// Kernel of `x ↦ x^(p^m)`, `p^m ≥ dim`. Only valid for commutative algebras,
/// where this map is GF(p)-linear.
pub fn radical_frobenius(a: &AssocAlgebra) -> Result<Subspace> {
    if !a.is_commutative() {
        return Err(Error::InvalidParameter("Frobenius radical requires a commutative algebra".into()));
    }
    let q = a.frobenius_exponent();
    let cols: Vec<Vec<Scalar>> = (0..a.dim()).map(|i| a.pow(&a.basis_vector(i), q)).collect();
    Ok(Matrix::from_columns(a.field(), a.dim(), &cols)?.kernel())
}

/// Action matrices of every basis element on the factor `top / bottom` of the
/// left regular module.
fn factor_action(a: &AssocAlgebra, q: &QuotientBasis, elems: &[usize]) -> Result<Vec<Matrix>> {
    let ls = a.left_matrices();
    let n = q.dim();
    elems
        .iter()
        .map(|&e| {
            let cols = (0..n)
                .map(|j| {
                    let v = ls[e].mul_vec(&q.lift(&unit_vec(n, j)));
                    q.coordinates(&v).ok_or_else(|| Error::Internal("factor is not a submodule quotient".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            Matrix::from_columns(a.field(), n, &cols)
        })
        .collect()
}

fn unit_vec(n: usize, j: usize) -> Vec<Scalar> {
    let mut v = vec![0; n];
    v[j] = 1;
    v
}

fn split_factor(a: &AssocAlgebra, gens: &[Matrix], seed: u64) -> Result<Option<Subspace>> {
    let params = SearchParams::default();
    for r in 0..CHOP_RETRIES {
        match find_submodule(a.field(), gens, seed.wrapping_add(r), &params) {
            Ok(SubmoduleSearch::Reducible(s)) => return Ok(Some(s)),
            Ok(SubmoduleSearch::Irreducible(_)) => return Ok(None),
            Err(Error::Inconclusive(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    let n = gens[0].rows() as u32;
    let p = a.field().p() as u64;
    let lines = p.checked_pow(n).map(|t| (t - 1) / (p - 1));
    match lines {
        Some(l) if l <= EXHAUSTIVE_LINES => Ok(exhaustive_submodule(a.field(), gens)),
        _ => Err(Error::Inconclusive(format!("could not split a composition factor of dimension {n}"))),
    }
}

/// Composition factors of the left regular module, as `(bottom, top)` pairs
/// in ambient coordinates.
pub(crate) fn composition_factors(a: &AssocAlgebra, seed: u64) -> Result<Vec<(Subspace, Subspace)>> {
    let f = a.field();
    let d = a.dim();
    let gens_idx: Vec<usize> = a.generators().to_vec();
    let mut stack = vec![(Subspace::zero(f, d), Subspace::full(f, d))];
    let mut factors = Vec::new();
    let mut counter = 0u64;
    while let Some((bottom, top)) = stack.pop() {
        let q = QuotientBasis::new(&top, &bottom)?;
        if q.dim() == 1 {
            factors.push((bottom, top));
            continue;
        }
        let gens = if gens_idx.is_empty() {
            // the algebra is spanned by 1, so every factor is 1-dimensional
            vec![Matrix::identity(f, q.dim())]
        } else {
            factor_action(a, &q, &gens_idx)?
        };
        counter += 1;
        match split_factor(a, &gens, seed.wrapping_mul(0x9e37_79b9).wrapping_add(counter))? {
            Some(s) => {
                let lifted: Vec<Vec<Scalar>> = s.vectors().map(|v| q.lift(v)).collect();
                let mid = bottom.sum(&Subspace::from_vectors(f, d, lifted))?;
                stack.push((mid.clone(), top));
                stack.push((bottom, mid));
            }
            None => factors.push((bottom, top)),
        }
    }
    Ok(factors)
}

/// `J(A)` as the common annihilator of the composition factors of `_A A`.
pub fn radical_chop(a: &AssocAlgebra, seed: u64) -> Result<Subspace> {
    let d = a.dim();
    let f = a.field();
    let factors = composition_factors(a, seed)?;
    let all: Vec<usize> = (0..d).collect();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (bottom, top) in &factors {
        let q = QuotientBasis::new(top, bottom)?;
        let acts = factor_action(a, &q, &all)?;
        let n = q.dim();
        for r in 0..n {
            for c in 0..n {
                rows.push(acts.iter().map(|m| m.get(r, c)).collect());
            }
        }
    }
    Ok(Matrix::from_rows(f, d, &rows)?.kernel())
}

fn augmentation_ideal(a: &AssocAlgebra) -> Subspace {
    let d = a.dim();
    let f = a.field();
    let vecs = (1..d)
        .map(|i| {
            let mut v = vec![0; d];
            v[0] = f.neg(1);
            v[i] = 1;
            v
        })
        .collect();
    Subspace::from_vectors(f, d, vecs)
}

/// Smallest `N` with `I^N = 0`, if reached within `dim + 1` steps.
fn nilpotency_of(a: &AssocAlgebra, i: &IdealSubspace) -> Result<Option<usize>> {
    let mut power = i.clone();
    let mut n = 1;
    while !power.is_zero() {
        if n > a.dim() + 1 {
            return Ok(None);
        }
        power = ideal_product(a, &power, i)?;
        n += 1;
    }
    Ok(Some(n))
}

fn is_semisimple(a: &AssocAlgebra) -> Result<bool> {
    if a.is_commutative() {
        Ok(radical_frobenius(a)?.is_zero())
    } else {
        Ok(radical_chop(a, CHOP_SEED)?.is_zero())
    }
}

fn compute_radical(a: &AssocAlgebra) -> Result<(IdealSubspace, RadicalMethod)> {
    let (space, method) = if a.is_commutative() {
        (radical_frobenius(a)?, RadicalMethod::Frobenius)
    } else if a.meta().radical_hint == Some(RadicalHint::Augmentation) && a.unit()[0] == 1 {
        (augmentation_ideal(a), RadicalMethod::Augmentation)
    } else {
        (radical_chop(a, CHOP_SEED)?, RadicalMethod::Chop)
    };
    let j = IdealSubspace::new(a, space)?;
    if nilpotency_of(a, &j)?.is_none() {
        if method == RadicalMethod::Augmentation {
            // a wrong hint falls back to the generic algorithm
            let j = IdealSubspace::new(a, radical_chop(a, CHOP_SEED)?)?;
            return finish(a, j, RadicalMethod::Chop);
        }
        return Err(Error::Internal("computed radical is not nilpotent".into()));
    }
    finish(a, j, method)
}

fn finish(a: &AssocAlgebra, j: IdealSubspace, method: RadicalMethod) -> Result<(IdealSubspace, RadicalMethod)> {
    if nilpotency_of(a, &j)?.is_none() {
        return Err(Error::Internal("computed radical is not nilpotent".into()));
    }
    if method != RadicalMethod::Augmentation {
        let q = quotient(a, &j)?;
        if !is_semisimple(&q.algebra)? {
            return Err(Error::Internal("quotient by computed radical is not semisimple".into()));
        }
    } else if j.dim() + 1 != a.dim() {
        return Err(Error::Internal("augmentation ideal has wrong codimension".into()));
    }
    Ok((j, method))
}

/// `J(A)`, cached per algebra. Always verified to be a nilpotent two-sided
/// ideal with semisimple quotient.
pub fn radical(a: &AssocAlgebra) -> Result<&IdealSubspace> {
    a.cache.radical.get_or_try_init(|| compute_radical(a)).map(|(j, _)| j)
}

/// The method used for [`radical`].
pub fn radical_method(a: &AssocAlgebra) -> Result<RadicalMethod> {
    a.cache.radical.get_or_try_init(|| compute_radical(a)).map(|(_, m)| *m)
}

/// Smallest `N ≥ 1` with `J^N = 0`.
pub fn nilpotency_index(a: &AssocAlgebra) -> Result<usize> {
    let j = radical(a)?;
    nilpotency_of(a, j)?.ok_or_else(|| Error::Internal("radical is not nilpotent".into()))
}

/// `dim J^i / J^{i+1}` for `i = 1, 2, …` while `J^i ≠ 0`.
pub fn radical_layers(a: &AssocAlgebra) -> Result<Vec<usize>> {
    let j = radical(a)?;
    let mut out = Vec::new();
    let mut power = j.clone();
    while !power.is_zero() {
        let next = ideal_product(a, &power, j)?;
        out.push(power.dim() - next.dim());
        power = next;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assoc::group_algebra;
    use crate::ffmat::PrimeField;
    use crate::groups::GroupSpec;

    fn kg(spec: GroupSpec, p: u32) -> AssocAlgebra {
        group_algebra(&spec.build().unwrap(), PrimeField::new(p).unwrap()).unwrap()
    }

    #[test]
    fn radical_dims() {
        assert_eq!(radical(&kg(GroupSpec::Cyclic { n: 2 }, 2)).unwrap().dim(), 1);
        assert_eq!(radical(&kg(GroupSpec::ElemAbelian { p: 3, n: 2 }, 3)).unwrap().dim(), 8);
        assert_eq!(radical(&kg(GroupSpec::SemidirectCpCm { p: 3, m: 2, d: 2 }, 3)).unwrap().dim(), 4);
        assert!(radical(&kg(GroupSpec::Cyclic { n: 2 }, 3)).unwrap().is_zero());
    }

    #[test]
    fn chop_agrees_with_frobenius_and_augmentation() {
        for (spec, p) in [
            (GroupSpec::Cyclic { n: 4 }, 2),
            (GroupSpec::Cyclic { n: 6 }, 3),
            (GroupSpec::ElemAbelian { p: 2, n: 3 }, 2),
        ] {
            let a = kg(spec, p);
            assert_eq!(radical_chop(&a, 1).unwrap(), radical_frobenius(&a).unwrap());
        }
        for spec in [GroupSpec::Dihedral { order: 8 }, GroupSpec::Quaternion8] {
            let a = kg(spec, 2);
            assert_eq!(radical_method(&a).unwrap(), RadicalMethod::Augmentation);
            assert_eq!(&radical_chop(&a, 2).unwrap(), radical(&a).unwrap().space());
        }
    }

    #[test]
    fn layers() {
        assert_eq!(radical_layers(&kg(GroupSpec::Cyclic { n: 4 }, 2)).unwrap(), vec![1, 1, 1]);
        assert_eq!(radical_layers(&kg(GroupSpec::ElemAbelian { p: 2, n: 2 }, 2)).unwrap(), vec![2, 1]);
        assert_eq!(nilpotency_index(&kg(GroupSpec::Cyclic { n: 4 }, 2)).unwrap(), 4);
    }

    #[test]
    fn non_split_semisimple_radical_is_zero() {
        // kC3 over GF(2) is GF(2) x GF(4)
        let a = kg(GroupSpec::Cyclic { n: 3 }, 2);
        assert!(radical_chop(&a, 0).unwrap().is_zero());
        assert!(radical(&a).unwrap().is_zero());
    }
}
