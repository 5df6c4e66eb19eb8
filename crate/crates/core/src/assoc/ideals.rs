use std::sync::Arc;

use super::{AlgebraMeta, AssocAlgebra};
use crate::error::{Error, Result};
use crate::ffmat::{Matrix, Scalar, Subspace};
use crate::meataxe::spin;

/// A two-sided ideal, stored as a subspace of the parent's coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealSubspace {
    space: Subspace,
}

impl IdealSubspace {
    /// Wraps `space` after checking closure under left and right
    /// multiplication by the algebra generators.
    pub fn new(a: &AssocAlgebra, space: Subspace) -> Result<Self> {
        if space.ambient() != a.dim() {
            return Err(Error::DimensionMismatch { expected: a.dim(), found: space.ambient() });
        }
        let ls = a.left_matrices();
        let rs = a.right_matrices();
        for &g in a.generators() {
            for v in space.vectors() {
                if !space.contains(&ls[g].mul_vec(v)) || !space.contains(&rs[g].mul_vec(v)) {
                    return Err(Error::Internal("subspace is not a two-sided ideal".into()));
                }
            }
        }
        Ok(IdealSubspace { space })
    }

    pub fn zero(a: &AssocAlgebra) -> Self {
        IdealSubspace { space: Subspace::zero(a.field(), a.dim()) }
    }

    pub fn whole(a: &AssocAlgebra) -> Self {
        IdealSubspace { space: Subspace::full(a.field(), a.dim()) }
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.space.contains(v)
    }
}

/// A subalgebra `S ⊆ A` together with its inclusion.
///
/// The basis of `S` is the RREF basis of `space`; `embedding` has these
/// vectors as columns.
#[derive(Clone, Debug)]
pub struct SubalgebraWithEmbedding {
    pub algebra: AssocAlgebra,
    pub space: Subspace,
    pub embedding: Matrix,
}

impl SubalgebraWithEmbedding {
    /// Parent coordinates of an element given in subalgebra coordinates.
    pub fn embed(&self, coords: &[Scalar]) -> Vec<Scalar> {
        self.space.combine(coords)
    }

    /// Subalgebra coordinates of a parent element, if it lies in the subalgebra.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.space.coordinates(v)
    }
}

/// `A/I` with the projection from parent coordinates.
///
/// The quotient basis is the image of the parent basis vectors indexed by
/// `kept`, the non-pivot columns of the ideal.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    pub algebra: AssocAlgebra,
    pub ideal: Subspace,
    pub kept: Vec<usize>,
    pub projection: Matrix,
}

impl QuotientAlgebra {
    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        let r = self.ideal.reduce(v);
        self.kept.iter().map(|&c| r[c]).collect()
    }

    /// A preimage of a quotient element.
    pub fn lift(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let mut v = vec![0; self.ideal.ambient()];
        for (&c, &x) in self.kept.iter().zip(coords) {
            v[c] = x;
        }
        v
    }
}

/// The algebra structure on a subspace closed under the product and
/// containing `unit` (which need not be the unit of `a`).
pub fn subalgebra_with_unit(
    a: &AssocAlgebra,
    space: Subspace,
    unit: &[Scalar],
    label_prefix: &str,
    ancestry: &str,
) -> Result<SubalgebraWithEmbedding> {
    let n = space.dim();
    let unit_coords = space.coordinates(unit).ok_or(Error::NotContained)?;
    let mut products = Vec::with_capacity(n * n);
    for x in space.vectors() {
        for y in space.vectors() {
            let c = space.coordinates(&a.mul(x, y)).ok_or_else(|| Error::Internal("subspace is not closed under the product".into()))?;
            products.push(c);
        }
    }
    let mut meta = AlgebraMeta { ancestry: a.meta().ancestry.clone(), ..Default::default() };
    meta.ancestry.push(ancestry.to_string());
    let labels = (0..n).map(|i| format!("{label_prefix}{i}")).collect();
    let algebra = AssocAlgebra::from_products(a.field(), n, &products, unit_coords, labels, meta)?;
    let embedding = space.basis().transpose();
    Ok(SubalgebraWithEmbedding { algebra, space, embedding })
}

/// Unital subalgebra on a product-closed subspace containing `1`.
pub fn subalgebra_from_space(a: &AssocAlgebra, space: Subspace, label_prefix: &str) -> Result<SubalgebraWithEmbedding> {
    let unit = a.unit().to_vec();
    subalgebra_with_unit(a, space, &unit, label_prefix, "subalgebra")
}

/// `Z(A)`, the kernel of `x ↦ (x s - s x)` over the algebra generators `s`.
pub fn center(a: &AssocAlgebra) -> Result<Arc<SubalgebraWithEmbedding>> {
    a.cache
        .center
        .get_or_try_init(|| {
            let d = a.dim();
            let ls = a.left_matrices();
            let rs = a.right_matrices();
            let mut rows = Vec::new();
            for &s in a.generators() {
                rows.extend(rs[s].sub(&ls[s]).row_vectors());
            }
            let space = if rows.is_empty() { Subspace::full(a.field(), d) } else { Matrix::from_rows(a.field(), d, &rows)?.kernel() };
            // the kernel over generators must agree with the full basis definition
            for z in space.vectors() {
                for i in 0..d {
                    let b = a.basis_vector(i);
                    if a.mul(z, &b) != a.mul(&b, z) {
                        return Err(Error::Internal("center element fails to commute with a basis element".into()));
                    }
                }
            }
            let unit = a.unit().to_vec();
            let z = subalgebra_with_unit(a, space, &unit, "z", "center")?;
            if !z.algebra.is_commutative() {
                return Err(Error::Internal("center is not commutative".into()));
            }
            Ok(Arc::new(z))
        })
        .cloned()
}

/// Smallest two-sided ideal containing `seed`.
pub fn ideal_from(a: &AssocAlgebra, seed: &Subspace) -> Result<IdealSubspace> {
    if seed.ambient() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: seed.ambient() });
    }
    let ls = a.left_matrices();
    let rs = a.right_matrices();
    let mut acting = Vec::new();
    for &g in a.generators() {
        acting.push(ls[g].clone());
        acting.push(rs[g].clone());
    }
    let seeds: Vec<Vec<Scalar>> = seed.vectors().map(|v| v.to_vec()).collect();
    let space = if seeds.is_empty() { Subspace::zero(a.field(), a.dim()) } else { spin(a.field(), &acting, &seeds) };
    IdealSubspace::new(a, space)
}

/// The span of all products `xy` with `x ∈ i`, `y ∈ k`.
pub fn ideal_product(a: &AssocAlgebra, i: &IdealSubspace, k: &IdealSubspace) -> Result<IdealSubspace> {
    let mut prods = Vec::with_capacity(i.dim() * k.dim());
    for x in i.space.vectors() {
        for y in k.space.vectors() {
            prods.push(a.mul(x, y));
        }
    }
    IdealSubspace::new(a, Subspace::from_vectors(a.field(), a.dim(), prods))
}

/// `I^n`, with `I^0 = A`.
pub fn ideal_power(a: &AssocAlgebra, i: &IdealSubspace, n: usize) -> Result<IdealSubspace> {
    if n == 0 {
        return Ok(IdealSubspace::whole(a));
    }
    let mut acc = i.clone();
    for _ in 1..n {
        if acc.is_zero() {
            break;
        }
        acc = ideal_product(a, &acc, i)?;
    }
    Ok(acc)
}

fn annihilator_of(a: &AssocAlgebra, i: &IdealSubspace, left: bool, right: bool) -> Result<Subspace> {
    let d = a.dim();
    let mut rows = Vec::new();
    for j in i.space.vectors() {
        if left {
            // j x = 0
            rows.extend(a.left_mul_matrix(j).row_vectors());
        }
        if right {
            // x j = 0
            rows.extend(a.right_mul_matrix(j).row_vectors());
        }
    }
    if rows.is_empty() {
        return Ok(Subspace::full(a.field(), d));
    }
    Ok(Matrix::from_rows(a.field(), d, &rows)?.kernel())
}

/// `soc(A) = {x : Jx = 0 and xJ = 0}`.
pub fn socle(a: &AssocAlgebra) -> Result<IdealSubspace> {
    let j = super::radical(a)?;
    IdealSubspace::new(a, annihilator_of(a, j, true, true)?)
}

/// Socle of the left regular module, `{x : Jx = 0}`.
pub fn left_socle(a: &AssocAlgebra) -> Result<IdealSubspace> {
    let j = super::radical(a)?;
    IdealSubspace::new(a, annihilator_of(a, j, true, false)?)
}

/// Socle of the right regular module, `{x : xJ = 0}`.
pub fn right_socle(a: &AssocAlgebra) -> Result<IdealSubspace> {
    let j = super::radical(a)?;
    IdealSubspace::new(a, annihilator_of(a, j, false, true)?)
}

/// Whether `J(A) = J(Z(A)) A`.
pub fn ot_criterion(a: &AssocAlgebra) -> Result<bool> {
    let z = center(a)?;
    let jz = super::radical(&z.algebra)?;
    let seeds: Vec<Vec<Scalar>> = jz.space().vectors().map(|v| z.embed(v)).collect();
    let generated = ideal_from(a, &Subspace::from_vectors(a.field(), a.dim(), seeds))?;
    Ok(generated.space() == super::radical(a)?.space())
}

/// `A/I`. Fails with [`Error::NotProper`] when `I = A`.
pub fn quotient(a: &AssocAlgebra, i: &IdealSubspace) -> Result<QuotientAlgebra> {
    if i.space.is_full() {
        return Err(Error::NotProper);
    }
    let ideal = i.space.clone();
    let kept = ideal.free_columns();
    let q = kept.len();
    let project = |v: &[Scalar]| -> Vec<Scalar> {
        let r = ideal.reduce(v);
        kept.iter().map(|&c| r[c]).collect()
    };
    let mut products = Vec::with_capacity(q * q);
    for &x in &kept {
        for &y in &kept {
            products.push(project(&a.basis_product(x, y)));
        }
    }
    let unit = project(a.unit());
    let labels = kept.iter().map(|&c| a.labels()[c].clone()).collect();
    let mut meta = AlgebraMeta { ancestry: a.meta().ancestry.clone(), ..Default::default() };
    meta.ancestry.push(format!("quotient by ideal of dim {}", ideal.dim()));
    let algebra = AssocAlgebra::from_products(a.field(), q, &products, unit, labels, meta)?;
    let cols: Vec<Vec<Scalar>> = (0..a.dim()).map(|l| project(&a.basis_vector(l))).collect();
    let projection = Matrix::from_columns(a.field(), q, &cols)?;
    let out = QuotientAlgebra { algebra, ideal, kept, projection };
    // projection is multiplicative on basis pairs
    for x in 0..a.dim() {
        for y in 0..a.dim() {
            let lhs = out.project(&a.basis_product(x, y));
            let rhs = out.algebra.mul(&cols[x], &cols[y]);
            if lhs != rhs {
                return Err(Error::Internal("quotient projection is not multiplicative".into()));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assoc::{group_algebra, radical};
    use crate::ffmat::PrimeField;
    use crate::groups::GroupSpec;

    fn kg(spec: GroupSpec, p: u32) -> AssocAlgebra {
        group_algebra(&spec.build().unwrap(), PrimeField::new(p).unwrap()).unwrap()
    }

    #[test]
    fn center_dims_match_class_counts() {
        for (spec, p) in [
            (GroupSpec::SemidirectCpCm { p: 3, m: 2, d: 2 }, 3),
            (GroupSpec::Dihedral { order: 8 }, 2),
            (GroupSpec::Quaternion8, 2),
            (GroupSpec::ExtraspecialP3ExponentP { p: 3 }, 3),
        ] {
            let g = spec.build().unwrap();
            let a = group_algebra(&g, PrimeField::new(p).unwrap()).unwrap();
            assert_eq!(center(&a).unwrap().algebra.dim(), g.conjugacy_classes().len(), "{spec}");
        }
    }

    #[test]
    fn unit_generates_everything() {
        let a = kg(GroupSpec::Dihedral { order: 8 }, 2);
        let seed = Subspace::from_vectors(a.field(), 8, vec![a.unit().to_vec()]);
        assert!(ideal_from(&a, &seed).unwrap().space().is_full());
    }

    #[test]
    fn powers_of_radical_of_c4() {
        let a = kg(GroupSpec::Cyclic { n: 4 }, 2);
        let j = radical(&a).unwrap().clone();
        assert_eq!(ideal_power(&a, &j, 3).unwrap().dim(), 1);
        assert!(ideal_power(&a, &j, 4).unwrap().is_zero());
    }

    #[test]
    fn jz_times_a_for_s3() {
        let a = kg(GroupSpec::SemidirectCpCm { p: 3, m: 2, d: 2 }, 3);
        let z = center(&a).unwrap();
        let jz = radical(&z.algebra).unwrap();
        let seeds: Vec<Vec<Scalar>> = jz.space().vectors().map(|v| z.embed(v)).collect();
        let gen = ideal_from(&a, &Subspace::from_vectors(a.field(), 6, seeds)).unwrap();
        assert_eq!(gen.dim(), 2);
        assert_eq!(radical(&a).unwrap().dim(), 4);
        assert!(!ot_criterion(&a).unwrap());
    }

    #[test]
    fn ot_criterion_cases() {
        assert!(ot_criterion(&kg(GroupSpec::Cyclic { n: 9 }, 3)).unwrap());
        assert!(!ot_criterion(&kg(GroupSpec::Dihedral { order: 8 }, 2)).unwrap());
        assert!(!ot_criterion(&kg(GroupSpec::Quaternion8, 2)).unwrap());
    }

    #[test]
    fn quotients() {
        let a = kg(GroupSpec::Cyclic { n: 4 }, 2);
        let j = radical(&a).unwrap().clone();
        let j2 = ideal_power(&a, &j, 2).unwrap();
        let q = quotient(&a, &j2).unwrap();
        assert_eq!(q.algebra.dim(), 2);
        assert!(q.algebra.is_commutative());
        let b = kg(GroupSpec::ElemAbelian { p: 3, n: 2 }, 3);
        let jb = radical(&b).unwrap().clone();
        let q = quotient(&b, &ideal_power(&b, &jb, 2).unwrap()).unwrap();
        assert_eq!(q.algebra.dim(), 3);
        let same = quotient(&b, &IdealSubspace::zero(&b)).unwrap();
        assert_eq!(same.algebra.dim(), 9);
        assert_eq!(quotient(&b, &IdealSubspace::whole(&b)).unwrap_err(), Error::NotProper);
    }

    #[test]
    fn socle_of_local_group_algebra_is_the_norm_element() {
        let a = kg(GroupSpec::Quaternion8, 2);
        let s = socle(&a).unwrap();
        assert_eq!(s.dim(), 1);
        assert_eq!(s.space().vector(0), &[1u32; 8][..]);
        assert_eq!(left_socle(&a).unwrap(), s);
        assert_eq!(right_socle(&a).unwrap(), s);
    }

    #[test]
    fn socle_of_semisimple_algebra_is_everything() {
        let a = kg(GroupSpec::Cyclic { n: 2 }, 3);
        assert!(socle(&a).unwrap().space().is_full());
    }
}
