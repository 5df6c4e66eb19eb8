use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ideals::{center, quotient, subalgebra_with_unit, SubalgebraWithEmbedding};
use super::radical::radical;
use super::AssocAlgebra;
use crate::error::{Error, Result};
use crate::ffmat::{Scalar, Subspace};
use crate::poly::{krylov_minpoly, roots};

const SPLIT_SEED: u64 = 0x1de4_7001;
const SPLIT_ATTEMPTS: usize = 64;

/// Whether a commutative semisimple algebra is a product of copies of GF(p),
/// i.e. Frobenius fixes every basis element.
fn is_split_commutative(b: &AssocAlgebra) -> bool {
    let p = b.field().p() as u128;
    (0..b.dim()).all(|i| {
        let v = b.basis_vector(i);
        b.pow(&v, p) == v
    })
}

/// Primitive idempotents of a commutative split semisimple algebra
/// `B ≅ k^r`, by CRT idempotents of minimal polynomials of random elements.
fn primitive_idempotents_split(b: &AssocAlgebra, seed: u64) -> Result<Vec<Vec<Scalar>>> {
    let f = b.field();
    let r = b.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut idems = vec![b.unit().to_vec()];
    let mut attempts = 0;
    while idems.len() < r {
        attempts += 1;
        if attempts > SPLIT_ATTEMPTS {
            return Err(Error::Inconclusive(format!("idempotent splitting stalled at {} of {r}", idems.len())));
        }
        let x: Vec<Scalar> = (0..r).map(|_| rng.gen_range(0..f.p())).collect();
        let mut next = Vec::new();
        for e in &idems {
            let y = b.mul(&x, e);
            let ly = b.left_mul_matrix(&y);
            let m = krylov_minpoly(&ly, e);
            let rts = roots(f, &m, &mut rng);
            if rts.len() != m.degree().unwrap_or(0) {
                return Err(Error::NotSplit(f.p()));
            }
            if rts.len() <= 1 {
                next.push(e.clone());
                continue;
            }
            for (li, &lam) in rts.iter().enumerate() {
                // prod_{mu != lam} (y - mu e) / (lam - mu)
                let mut acc = e.clone();
                for (mi, &mu) in rts.iter().enumerate() {
                    if mi == li {
                        continue;
                    }
                    let mut t = y.clone();
                    f.axpy(&mut t, f.neg(mu), e);
                    f.scale(&mut t, f.inv(f.sub(lam, mu)));
                    acc = b.mul(&acc, &t);
                }
                next.push(acc);
            }
        }
        idems = next;
    }
    Ok(idems)
}

/// Lifts a complete set of orthogonal idempotents of `A/I` (`I` nil) to `A`.
fn lift_orthogonal(a: &AssocAlgebra, lifts: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let f = a.field();
    let q = a.frobenius_exponent();
    let one = a.unit().to_vec();
    let mut sum = vec![0; a.dim()];
    let mut out = Vec::with_capacity(lifts.len());
    for (k, x) in lifts.iter().enumerate() {
        if k + 1 == lifts.len() {
            out.push(f.sub_vec(&one, &sum));
            break;
        }
        let c = f.sub_vec(&one, &sum);
        let y = a.mul(&a.mul(&c, x), &c);
        let e = a.pow(&y, q);
        sum = f.add_vec(&sum, &e);
        out.push(e);
    }
    out
}

fn check_idempotents(a: &AssocAlgebra, es: &[Vec<Scalar>]) -> Result<()> {
    let f = a.field();
    let mut sum = vec![0; a.dim()];
    for (i, e) in es.iter().enumerate() {
        if a.mul(e, e) != *e {
            return Err(Error::Internal("lifted element is not idempotent".into()));
        }
        for (j, g) in es.iter().enumerate() {
            if i != j && a.mul(e, g).iter().any(|&c| c != 0) {
                return Err(Error::Internal("lifted idempotents are not orthogonal".into()));
            }
        }
        sum = f.add_vec(&sum, e);
    }
    if sum != a.unit() {
        return Err(Error::Internal("lifted idempotents do not sum to 1".into()));
    }
    Ok(())
}

/// Complete set of orthogonal primitive idempotents, assuming `A/J` is split
/// basic (a product of copies of GF(p)).
pub fn lift_idempotents(a: &AssocAlgebra) -> Result<Vec<Vec<Scalar>>> {
    let j = radical(a)?;
    let q = quotient(a, j)?;
    if !q.algebra.is_commutative() || !is_split_commutative(&q.algebra) {
        return Err(Error::NotSplit(a.field().p()));
    }
    let bar = primitive_idempotents_split(&q.algebra, SPLIT_SEED)?;
    let lifts: Vec<Vec<Scalar>> = bar.iter().map(|e| q.lift(e)).collect();
    let es = lift_orthogonal(a, &lifts);
    check_idempotents(a, &es)?;
    for (e, eb) in es.iter().zip(&bar) {
        if q.project(e) != *eb {
            return Err(Error::Internal("lifted idempotent does not reduce to its image".into()));
        }
    }
    let mut es = es;
    es.sort();
    Ok(es)
}

/// `E = span(e_i)`, a complement to `J(A)` in the split basic case.
pub fn wedderburn_complement(a: &AssocAlgebra) -> Result<SubalgebraWithEmbedding> {
    let es = lift_idempotents(a)?;
    let space = Subspace::from_vectors(a.field(), a.dim(), es);
    let j = radical(a)?;
    if space.dim() + j.dim() != a.dim() || !space.intersect(j.space())?.is_zero() {
        return Err(Error::Internal("idempotent span is not a complement to the radical".into()));
    }
    let unit = a.unit().to_vec();
    subalgebra_with_unit(a, space, &unit, "e", "semisimple complement")
}

/// A block `eA` of the algebra, with unit `e`.
#[derive(Clone, Debug)]
pub struct Block {
    pub idempotent: Vec<Scalar>,
    pub sub: SubalgebraWithEmbedding,
}

/// Blocks cut out by the central primitive idempotents, sorted by idempotent.
pub fn block_decomposition(a: &AssocAlgebra) -> Result<Vec<Block>> {
    let z = center(a)?;
    let zalg = &z.algebra;
    let jz = radical(zalg)?;
    let zq = quotient(zalg, jz)?;
    if !is_split_commutative(&zq.algebra) {
        return Err(Error::NotSplit(a.field().p()));
    }
    let bar = primitive_idempotents_split(&zq.algebra, SPLIT_SEED)?;
    let lifts: Vec<Vec<Scalar>> = bar.iter().map(|e| zq.lift(e)).collect();
    let zes = lift_orthogonal(zalg, &lifts);
    check_idempotents(zalg, &zes)?;
    let mut es: Vec<Vec<Scalar>> = zes.iter().map(|e| z.embed(e)).collect();
    es.sort();
    let mut blocks = Vec::with_capacity(es.len());
    let mut total = 0;
    for e in es {
        let le = a.left_mul_matrix(&e);
        let space = le.transpose().row_space();
        total += space.dim();
        let sub = subalgebra_with_unit(a, space, &e, "b", "block")?;
        blocks.push(Block { idempotent: e, sub });
    }
    if total != a.dim() {
        return Err(Error::Internal("block dimensions do not add up".into()));
    }
    Ok(blocks)
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
    fn local_algebra_has_one_idempotent() {
        let a = kg(GroupSpec::Quaternion8, 2);
        assert_eq!(lift_idempotents(&a).unwrap(), vec![a.unit().to_vec()]);
    }

    #[test]
    fn s3_has_two_idempotents_and_one_block() {
        let a = kg(GroupSpec::SemidirectCpCm { p: 3, m: 2, d: 2 }, 3);
        let es = lift_idempotents(&a).unwrap();
        assert_eq!(es.len(), 2);
        let e = wedderburn_complement(&a).unwrap();
        assert_eq!(e.algebra.dim(), 2);
        let blocks = block_decomposition(&a).unwrap();
        assert_eq!(blocks.len(), 1);
        assert_eq!(blocks[0].sub.algebra.dim(), 6);
    }

    #[test]
    fn c6_over_gf3_splits_into_two_blocks() {
        let a = kg(GroupSpec::Cyclic { n: 6 }, 3);
        assert_eq!(lift_idempotents(&a).unwrap().len(), 2);
        let blocks = block_decomposition(&a).unwrap();
        assert_eq!(blocks.iter().map(|b| b.sub.algebra.dim()).collect::<Vec<_>>(), vec![3, 3]);
        for b in &blocks {
            assert!(b.sub.algebra.is_commutative());
        }
    }

    #[test]
    fn non_split_quotient_is_reported() {
        // kC3 over GF(2) contains GF(4)
        let a = kg(GroupSpec::Cyclic { n: 3 }, 2);
        assert_eq!(lift_idempotents(&a).unwrap_err(), Error::NotSplit(2));
    }
}
