use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::radical::{radical, radical_layers};
use super::AssocAlgebra;
use crate::error::Result;
use crate::ffmat::{Matrix, Scalar, Subspace};

const RANDOM_FORMS: usize = 64;
const EXHAUSTIVE_FORMS: u64 = 100_000;
const FORM_SEED: u64 = 0x5f0_4a11;

/// Outcome of the search for a symmetrizing form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Symmetry {
    /// `lambda` (coefficients on the basis) gives a nondegenerate symmetric
    /// associative form `(x, y) ↦ lambda(xy)`.
    Symmetric { lambda: Vec<Scalar> },
    NotSymmetric,
    Inconclusive { space_dim: usize },
}

impl Symmetry {
    pub fn is_symmetric(&self) -> bool {
        matches!(self, Symmetry::Symmetric { .. })
    }
}

/// Gram matrix `G[i][j] = lambda(b_i b_j)`.
fn gram(a: &AssocAlgebra, lambda: &[Scalar]) -> Matrix {
    let d = a.dim();
    let f = a.field();
    let mut g = Matrix::zero(f, d, d);
    for i in 0..d {
        for j in 0..d {
            g.set(i, j, f.dot(lambda, &a.basis_product(i, j)));
        }
    }
    g
}

fn is_symmetrizing(a: &AssocAlgebra, lambda: &[Scalar]) -> bool {
    let g = gram(a, lambda);
    g == g.transpose() && g.rank() == a.dim()
}

/// Searches the functionals vanishing on commutators for one with a
/// nondegenerate form. Group algebras are tried first with `lambda(g) = [g = 1]`.
pub fn is_symmetric(a: &AssocAlgebra) -> Result<Symmetry> {
    let d = a.dim();
    let f = a.field();
    if a.meta().group.is_some() {
        let mut lambda = vec![0; d];
        lambda[0] = 1;
        if is_symmetrizing(a, &lambda) {
            return Ok(Symmetry::Symmetric { lambda });
        }
    }
    let mut comms = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            let c = f.sub_vec(&a.basis_product(i, j), &a.basis_product(j, i));
            if c.iter().any(|&x| x != 0) {
                comms.push(c);
            }
        }
    }
    let solutions: Subspace = Subspace::from_vectors(f, d, comms).annihilator();
    let k = solutions.dim();
    if k == 0 {
        return Ok(Symmetry::NotSymmetric);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(FORM_SEED);
    for _ in 0..RANDOM_FORMS {
        let coords: Vec<Scalar> = (0..k).map(|_| rng.gen_range(0..f.p())).collect();
        let lambda = solutions.combine(&coords);
        if is_symmetrizing(a, &lambda) {
            return Ok(Symmetry::Symmetric { lambda });
        }
    }
    let p = f.p() as u64;
    match p.checked_pow(k as u32) {
        Some(total) if total <= EXHAUSTIVE_FORMS => {
            for idx in 1..total {
                let mut t = idx;
                let coords: Vec<Scalar> = (0..k)
                    .map(|_| {
                        let c = (t % p) as Scalar;
                        t /= p;
                        c
                    })
                    .collect();
                let lambda = solutions.combine(&coords);
                if is_symmetrizing(a, &lambda) {
                    return Ok(Symmetry::Symmetric { lambda });
                }
            }
            Ok(Symmetry::NotSymmetric)
        }
        _ => Ok(Symmetry::Inconclusive { space_dim: k }),
    }
}

/// `dim A/J = 1`.
pub fn is_local(a: &AssocAlgebra) -> Result<bool> {
    Ok(a.dim() - radical(a)?.dim() == 1)
}

/// Every radical layer `J^i/J^{i+1}` (`i ≥ 1`) has dimension at most 1.
pub fn is_uniserial(a: &AssocAlgebra) -> Result<bool> {
    Ok(radical_layers(a)?.iter().all(|&l| l <= 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assoc::{group_algebra, truncated_polynomial_algebra, AlgebraMeta};
    use crate::ffmat::PrimeField;
    use crate::groups::GroupSpec;

    fn kg(spec: GroupSpec, p: u32) -> AssocAlgebra {
        group_algebra(&spec.build().unwrap(), PrimeField::new(p).unwrap()).unwrap()
    }

    #[test]
    fn group_algebras_are_symmetric_with_the_trace_form() {
        for (spec, p) in [(GroupSpec::Dihedral { order: 8 }, 2), (GroupSpec::SemidirectCpCm { p: 3, m: 2, d: 2 }, 3)] {
            let a = kg(spec, p);
            match is_symmetric(&a).unwrap() {
                Symmetry::Symmetric { lambda } => assert_eq!(lambda[0], 1),
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn generic_search_without_group_meta() {
        let f = PrimeField::new(3).unwrap();
        let a = truncated_polynomial_algebra(f, 1, 3).unwrap();
        assert!(is_symmetric(&a).unwrap().is_symmetric());
        let stripped = kg(GroupSpec::Quaternion8, 2).with_meta(AlgebraMeta::default());
        assert!(is_symmetric(&stripped).unwrap().is_symmetric());
    }

    #[test]
    fn upper_triangular_matrices_are_not_symmetric() {
        // basis e11, e12, e22 of the 2x2 upper triangular matrices over GF(2)
        let f = PrimeField::new(2).unwrap();
        let prods = vec![(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)];
        let a = AssocAlgebra::new(f, 3, prods, vec![1, 0, 1], vec!["e11".into(), "e12".into(), "e22".into()], AlgebraMeta::default())
            .unwrap();
        assert_eq!(is_symmetric(&a).unwrap(), Symmetry::NotSymmetric);
    }

    #[test]
    fn local_and_uniserial() {
        assert!(is_local(&kg(GroupSpec::Dihedral { order: 8 }, 2)).unwrap());
        assert!(!is_local(&kg(GroupSpec::SemidirectCpCm { p: 3, m: 2, d: 2 }, 3)).unwrap());
        assert!(is_uniserial(&kg(GroupSpec::Cyclic { n: 4 }, 2)).unwrap());
        assert!(!is_uniserial(&kg(GroupSpec::ElemAbelian { p: 2, n: 2 }, 2)).unwrap());
    }
}
