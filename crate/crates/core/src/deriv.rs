//! Derivations, inner derivations and `HH¹ = Der/IDer` with its Lie bracket
//! and `Z(A)`-module structure.
//!
//! A linear map `f` on a `d`-dimensional algebra is a `d × d` matrix whose
//! column `l` is `f(b_l)`; as a vector it is flattened row-major, so entry
//! `(k, l)` sits at index `k * d + l`. Spaces of maps are RREF subspaces of
//! this `d²`-dimensional space, which makes their bases canonical.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::assoc::{
    center, ideal_power, is_symmetric, lift_idempotents, quotient, radical, socle, wedderburn_complement, AssocAlgebra,
    IdealSubspace, QuotientAlgebra, SubalgebraWithEmbedding, Symmetry,
};
use crate::error::{Error, Result};
use crate::ffmat::{Echelon, Matrix, PrimeField, QuotientBasis, Scalar, Subspace};
use crate::lie::LieAlgebra;

fn flatten(m: &Matrix) -> Vec<Scalar> {
    m.data().to_vec()
}

fn unflatten(f: PrimeField, d: usize, v: &[Scalar]) -> Matrix {
    Matrix::from_data(f, d, d, v.to_vec()).expect("square shape")
}

/// `fg - gf`
pub fn commutator(f: &Matrix, g: &Matrix) -> Matrix {
    f.mul(g).sub(&g.mul(f))
}

/// Leibniz rule `f(b_i b_j) = f(b_i) b_j + b_i f(b_j)` on every basis pair.
pub fn is_derivation(a: &AssocAlgebra, m: &Matrix) -> bool {
    let d = a.dim();
    if m.rows() != d || m.cols() != d {
        return false;
    }
    let f = a.field();
    let cols: Vec<Vec<Scalar>> = (0..d).map(|l| m.column(l)).collect();
    for i in 0..d {
        let bi = a.basis_vector(i);
        for j in 0..d {
            let bj = a.basis_vector(j);
            let lhs = m.mul_vec(&a.basis_product(i, j));
            let rhs = f.add_vec(&a.mul(&cols[i], &bj), &a.mul(&bi, &cols[j]));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// A subspace of linear maps `A → A`, in the flattened canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationSpace {
    field: PrimeField,
    alg_dim: usize,
    space: Subspace,
}

impl DerivationSpace {
    pub fn from_subspace(field: PrimeField, alg_dim: usize, space: Subspace) -> Result<Self> {
        if space.ambient() != alg_dim * alg_dim {
            return Err(Error::DimensionMismatch { expected: alg_dim * alg_dim, found: space.ambient() });
        }
        Ok(DerivationSpace { field, alg_dim, space })
    }

    pub fn from_matrices(field: PrimeField, alg_dim: usize, ms: &[Matrix]) -> Self {
        let space = Subspace::from_vectors(field, alg_dim * alg_dim, ms.iter().map(flatten).collect());
        DerivationSpace { field, alg_dim, space }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }
    pub fn alg_dim(&self) -> usize {
        self.alg_dim
    }
    pub fn space(&self) -> &Subspace {
        &self.space
    }
    pub fn matrix(&self, i: usize) -> Matrix {
        unflatten(self.field, self.alg_dim, self.space.vector(i))
    }
    pub fn matrices(&self) -> Vec<Matrix> {
        (0..self.dim()).map(|i| self.matrix(i)).collect()
    }
    pub fn contains(&self, m: &Matrix) -> bool {
        self.space.contains(m.data())
    }
    pub fn coordinates(&self, m: &Matrix) -> Option<Vec<Scalar>> {
        self.space.coordinates(m.data())
    }
    pub fn combine(&self, coords: &[Scalar]) -> Matrix {
        unflatten(self.field, self.alg_dim, &self.space.combine(coords))
    }
}

/// `Der(A)`, solved through a generating set.
///
/// With generators `S` and a basis of words `w` built by right multiplication,
/// `f(ws) = f(w)s + w f(s)` expresses `f` through the unknowns `f(s)`. The
/// Leibniz rule on the pairs `(b_i, s)` together with `f(1) = 0` is equivalent
/// to the rule on all pairs. Every basis element is then re-checked on all pairs.
pub fn derivations(a: &AssocAlgebra) -> Result<DerivationSpace> {
    let d = a.dim();
    let f = a.field();
    let gens = a.generators().to_vec();
    if gens.is_empty() {
        return Ok(DerivationSpace { field: f, alg_dim: d, space: Subspace::zero(f, d * d) });
    }
    let m = gens.len() * d;
    let rs = a.right_matrices();
    // place d x d block into columns of generator slot s
    let selector = |block: &Matrix, s: usize| -> Matrix {
        let mut out = Matrix::zero(f, d, m);
        for r in 0..d {
            out.row_mut(r)[s * d..(s + 1) * d].copy_from_slice(block.row(r));
        }
        out
    };
    // word basis with the expression of f on each word in terms of the unknowns
    let mut ech = Echelon::new(f, d);
    let mut words: Vec<Vec<Scalar>> = vec![a.unit().to_vec()];
    let mut exprs: Vec<Matrix> = vec![Matrix::zero(f, d, m)];
    ech.insert(a.unit().to_vec());
    let mut next = 0;
    while next < words.len() && words.len() < d {
        let w = words[next].clone();
        let ew = exprs[next].clone();
        next += 1;
        let lw = a.left_mul_matrix(&w);
        for (si, &s) in gens.iter().enumerate() {
            let ws = rs[s].mul_vec(&w);
            if ech.insert(ws.clone()) {
                let e = rs[s].mul(&ew).add(&selector(&lw, si));
                words.push(ws);
                exprs.push(e);
                if words.len() == d {
                    break;
                }
            }
        }
    }
    if words.len() != d {
        return Err(Error::Internal("generators do not span the algebra".into()));
    }
    // expression of f(b_i) via W^{-1}
    let wmat = Matrix::from_columns(f, d, &words)?;
    let winv = wmat.inverse().ok_or_else(|| Error::Internal("word basis is singular".into()))?;
    let basis_exprs: Vec<Matrix> = (0..d)
        .map(|i| {
            let mut acc = Matrix::zero(f, d, m);
            for j in 0..d {
                let c = winv.get(j, i);
                if c != 0 {
                    acc.add_scaled(c, &exprs[j]);
                }
            }
            acc
        })
        .collect();
    let ls = a.left_matrices();
    let mut system = Echelon::new(f, m);
    let push_block = |block: &Matrix, system: &mut Echelon| {
        for r in 0..block.rows() {
            let row = block.row(r);
            if row.iter().any(|&x| x != 0) {
                system.insert(row.to_vec());
            }
        }
    };
    for (si, &s) in gens.iter().enumerate() {
        // f(b_s) agrees with the unknown block for s
        let own = basis_exprs[s].sub(&selector(&Matrix::identity(f, d), si));
        push_block(&own, &mut system);
        for i in 0..d {
            // f(b_i b_s) - f(b_i) b_s - b_i f(b_s)
            let mut lhs = Matrix::zero(f, d, m);
            for (k, &c) in a.basis_product(i, s).iter().enumerate() {
                if c != 0 {
                    lhs.add_scaled(c, &basis_exprs[k]);
                }
            }
            let eq = lhs.sub(&rs[s].mul(&basis_exprs[i])).sub(&selector(&ls[i], si));
            push_block(&eq, &mut system);
        }
    }
    let solutions = system.into_subspace().basis().kernel();
    let mats: Vec<Matrix> = solutions
        .vectors()
        .map(|u| {
            let cols: Vec<Vec<Scalar>> = basis_exprs.iter().map(|e| e.mul_vec(u)).collect();
            Matrix::from_columns(f, d, &cols).expect("shape")
        })
        .collect();
    let space = DerivationSpace::from_matrices(f, d, &mats);
    for i in 0..space.dim() {
        if !is_derivation(a, &space.matrix(i)) {
            return Err(Error::Internal("solved map fails the Leibniz rule".into()));
        }
    }
    Ok(space)
}

/// `Der(A)` from the full Leibniz system over all ordered basis pairs.
/// Quadratic in the number of unknowns; used as an independent cross-check.
pub fn derivations_by_basis_pairs(a: &AssocAlgebra) -> Result<DerivationSpace> {
    let d = a.dim();
    let f = a.field();
    let mut system = Echelon::new(f, d * d);
    let sc = |i: usize, j: usize| a.basis_product(i, j);
    for i in 0..d {
        for j in 0..d {
            let bij = sc(i, j);
            // coordinate m of f(b_i b_j) - f(b_i) b_j - b_i f(b_j)
            let mut rows = vec![vec![0 as Scalar; d * d]; d];
            for (k, &c) in bij.iter().enumerate() {
                if c != 0 {
                    for (mm, row) in rows.iter_mut().enumerate() {
                        row[mm * d + k] = f.add(row[mm * d + k], c);
                    }
                }
            }
            for l in 0..d {
                let lj = sc(l, j);
                let il = sc(i, l);
                for (mm, row) in rows.iter_mut().enumerate() {
                    if lj[mm] != 0 {
                        row[l * d + i] = f.sub(row[l * d + i], lj[mm]);
                    }
                    if il[mm] != 0 {
                        row[l * d + j] = f.sub(row[l * d + j], il[mm]);
                    }
                }
            }
            for row in rows {
                if row.iter().any(|&x| x != 0) {
                    system.insert(row);
                }
            }
        }
    }
    let space = system.into_subspace().basis().kernel();
    DerivationSpace::from_subspace(f, d, space)
}

/// Matrix of `ad_c = [c, -]`.
pub fn inner_derivation(a: &AssocAlgebra, c: &[Scalar]) -> Matrix {
    a.left_mul_matrix(c).sub(&a.right_mul_matrix(c))
}

/// `IDer(A)`, spanned by `ad_{b_c}`; its dimension is checked against `dim A - dim Z(A)`.
pub fn inner_derivations(a: &AssocAlgebra) -> Result<DerivationSpace> {
    let d = a.dim();
    let ls = a.left_matrices();
    let rs = a.right_matrices();
    let mats: Vec<Matrix> = (0..d).map(|c| ls[c].sub(&rs[c])).collect();
    let space = DerivationSpace::from_matrices(a.field(), d, &mats);
    let z = center(a)?;
    if space.dim() != d - z.algebra.dim() {
        return Err(Error::Internal("dim IDer differs from dim A - dim Z(A)".into()));
    }
    Ok(space)
}

/// `HH¹(A) = Der(A)/IDer(A)` with canonical coset representatives.
#[derive(Clone, Debug)]
pub struct HH1Presentation {
    pub der: DerivationSpace,
    pub ider: DerivationSpace,
    /// Representatives: the RREF completion of `IDer` inside `Der`.
    pub quotient: QuotientBasis,
    pub lie: LieAlgebra,
    pub center: Arc<SubalgebraWithEmbedding>,
    /// Action of each center basis element on HH¹ coordinates.
    pub zmod: Vec<Matrix>,
}

impl HH1Presentation {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn alg_dim(&self) -> usize {
        self.der.alg_dim
    }

    pub fn rep(&self, i: usize) -> Matrix {
        unflatten(self.der.field, self.der.alg_dim, self.quotient.reps.vector(i))
    }

    pub fn reps(&self) -> Vec<Matrix> {
        (0..self.dim()).map(|i| self.rep(i)).collect()
    }

    /// HH¹ coordinates of a derivation (`None` if the map is not in `Der`).
    pub fn coordinates(&self, m: &Matrix) -> Option<Vec<Scalar>> {
        self.quotient.coordinates(m.data())
    }

    /// A representative of the class with the given coordinates.
    pub fn lift(&self, coords: &[Scalar]) -> Matrix {
        unflatten(self.der.field, self.der.alg_dim, &self.quotient.lift(coords))
    }

    /// Action on HH¹ coordinates of a central element given in parent coordinates.
    pub fn z_action(&self, a: &AssocAlgebra, z: &[Scalar]) -> Result<Matrix> {
        let lz = a.left_mul_matrix(z);
        let cols = (0..self.dim())
            .map(|j| {
                self.coordinates(&lz.mul(&self.rep(j)))
                    .ok_or_else(|| Error::Internal("z·f is not a derivation".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_columns(a.field(), self.dim(), &cols)
    }
}

/// Computes `HH¹(A)`, checking `[Der, IDer] ⊆ IDer`, closure of the
/// representatives' brackets in `Der`, and `Z(A)·IDer ⊆ IDer`.
pub fn hh1(a: &AssocAlgebra) -> Result<HH1Presentation> {
    let f = a.field();
    let der = derivations(a)?;
    let ider = inner_derivations(a)?;
    if !ider.space.is_subspace_of(&der.space) {
        return Err(Error::Internal("inner derivations are not derivations".into()));
    }
    let quotient = QuotientBasis::new(&der.space, &ider.space)?;
    let reps: Vec<Matrix> = (0..quotient.dim()).map(|i| unflatten(f, a.dim(), quotient.reps.vector(i))).collect();
    let mut err = None;
    let lie = LieAlgebra::from_dense_upper(f, reps.len(), |i, j| match quotient.coordinates(commutator(&reps[i], &reps[j]).data()) {
        Some(c) => c,
        None => {
            err.get_or_insert(Error::Internal("bracket of derivations left Der".into()));
            Vec::new()
        }
    })?;
    if let Some(e) = err {
        return Err(e);
    }
    let ider_mats = ider.matrices();
    for dm in der.matrices() {
        for im in &ider_mats {
            if !ider.contains(&commutator(&dm, im)) {
                return Err(Error::Internal("[Der, IDer] is not contained in IDer".into()));
            }
        }
    }
    let z = center(a)?;
    let mut h = HH1Presentation { der, ider, quotient, lie, center: z.clone(), zmod: Vec::new() };
    for zv in z.space.vectors() {
        let lz = a.left_mul_matrix(zv);
        for im in &ider_mats {
            if !h.ider.contains(&lz.mul(im)) {
                return Err(Error::Internal("Z(A)·IDer is not contained in IDer".into()));
            }
        }
        let act = h.z_action(a, zv)?;
        h.zmod.push(act);
    }
    Ok(h)
}

/// `soc_{Z(A)}(HH¹) = {φ : z·φ = 0 for z in J(Z(A))}`, in HH¹ coordinates.
pub fn hh1_module_socle(a: &AssocAlgebra, h: &HH1Presentation) -> Result<Subspace> {
    let f = a.field();
    let z = &h.center;
    let jz = radical(&z.algebra)?;
    let mut rows = Vec::new();
    for w in jz.space().vectors() {
        rows.extend(h.z_action(a, &z.embed(w))?.row_vectors());
    }
    if rows.is_empty() || h.dim() == 0 {
        return Ok(Subspace::full(f, h.dim()));
    }
    Ok(Matrix::from_rows(f, h.dim(), &rows)?.kernel())
}

/// The linear map `HH¹(A) → HH¹(Z(A))` induced by restriction.
#[derive(Clone, Debug)]
pub struct CenterRestriction {
    pub target: HH1Presentation,
    /// `dim HH¹(Z) × dim HH¹(A)`.
    pub map: Matrix,
    pub kernel: Subspace,
}

fn restrict(a: &AssocAlgebra, z: &SubalgebraWithEmbedding, m: &Matrix) -> Result<Matrix> {
    let cols = z
        .space
        .vectors()
        .map(|zv| {
            z.coordinates(&m.mul_vec(zv)).ok_or_else(|| Error::Internal("derivation does not map Z(A) into Z(A)".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_columns(a.field(), z.algebra.dim(), &cols)
}

/// Restricts every representative to `Z(A)`; checks `f(Z) ⊆ Z`, that inner
/// derivations restrict to zero, and that the map preserves brackets.
pub fn restrict_to_center(a: &AssocAlgebra, h: &HH1Presentation) -> Result<CenterRestriction> {
    let z = h.center.clone();
    let target = hh1(&z.algebra)?;
    let f = a.field();
    for im in h.ider.matrices() {
        if !restrict(a, &z, &im)?.is_zero() {
            return Err(Error::Internal("inner derivation has nonzero restriction to Z(A)".into()));
        }
    }
    let cols = h
        .reps()
        .iter()
        .map(|r| {
            let g = restrict(a, &z, r)?;
            if !is_derivation(&z.algebra, &g) {
                return Err(Error::Internal("restriction is not a derivation of Z(A)".into()));
            }
            target.coordinates(&g).ok_or_else(|| Error::Internal("restriction outside Der(Z)".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let map = Matrix::from_columns(f, target.dim(), &cols)?;
    for i in 0..h.dim() {
        for j in i + 1..h.dim() {
            let lhs = map.mul_vec(&h.lie.basis_bracket(i, j));
            let rhs = target.lie.bracket(&cols[i], &cols[j]);
            if lhs != rhs {
                return Err(Error::Internal("restriction to Z(A) does not preserve brackets".into()));
            }
        }
    }
    let kernel = map.kernel();
    Ok(CenterRestriction { target, map, kernel })
}

/// The derivation induced on `A/I` by `f`, which must preserve `I`.
pub fn induce_on_quotient(a: &AssocAlgebra, q: &QuotientAlgebra, m: &Matrix) -> Result<Matrix> {
    for v in q.ideal.vectors() {
        if !q.ideal.contains(&m.mul_vec(v)) {
            return Err(Error::NotPreserved);
        }
    }
    let cols: Vec<Vec<Scalar>> = q.kept.iter().map(|&c| q.project(&m.column(c))).collect();
    let induced = Matrix::from_columns(a.field(), q.kept.len(), &cols)?;
    for l in 0..a.dim() {
        if q.project(&m.column(l)) != induced.mul_vec(&q.projection.column(l)) {
            return Err(Error::Internal("induced map does not commute with the projection".into()));
        }
    }
    if !is_derivation(&q.algebra, &induced) {
        return Err(Error::Internal("induced map is not a derivation".into()));
    }
    Ok(induced)
}

/// Convenience form of [`induce_on_quotient`] that builds `A/I` first.
pub fn induce_on_ideal(a: &AssocAlgebra, i: &IdealSubspace, m: &Matrix) -> Result<(QuotientAlgebra, Matrix)> {
    let q = quotient(a, i)?;
    let induced = induce_on_quotient(a, &q, m)?;
    Ok((q, induced))
}

/// `Der_m(A) = {f ∈ Der(A) : f(J) ⊆ J^m}`.
#[derive(Clone, Debug)]
pub struct FiltrationLevel {
    pub m: usize,
    pub space: DerivationSpace,
}

/// The filtration `Der_1 ⊇ … ⊇ Der_{m_max}`.
///
/// Checks nesting and `[Der_m, Der_n] ⊆ Der_{m+n-1}` for `m+n-1 ≤ m_max`.
/// The bracket check runs over a basis adapted to the flag, which covers every
/// pair `(m, n)` at once: an adapted element of level `l` lies in `Der_m` for
/// every `m ≤ l`.
pub fn der_filtration(a: &AssocAlgebra, der: &DerivationSpace, m_max: usize) -> Result<Vec<FiltrationLevel>> {
    let f = a.field();
    let d = a.dim();
    let j = radical(a)?.clone();
    let ders = der.matrices();
    let mut levels = Vec::with_capacity(m_max);
    for m in 1..=m_max {
        let jm = ideal_power(a, &j, m)?;
        let free = jm.space().free_columns();
        let images: Vec<Vec<Vec<Scalar>>> =
            ders.iter().map(|dm| j.space().vectors().map(|v| jm.space().reduce(&dm.mul_vec(v))).collect()).collect();
        let mut rows = Vec::new();
        for s in 0..j.dim() {
            for &c in &free {
                rows.push(images.iter().map(|img| img[s][c]).collect::<Vec<Scalar>>());
            }
        }
        let space = if rows.is_empty() || ders.is_empty() {
            der.space.clone()
        } else {
            let kernel = Matrix::from_rows(f, ders.len(), &rows)?.kernel();
            Subspace::from_vectors(f, d * d, kernel.vectors().map(|c| der.space.combine(c)).collect())
        };
        levels.push(FiltrationLevel { m, space: DerivationSpace::from_subspace(f, d, space)? });
    }
    for w in levels.windows(2) {
        if !w[1].space.space.is_subspace_of(&w[0].space.space) {
            return Err(Error::Internal("filtration is not decreasing".into()));
        }
    }
    // adapted basis: extend from the deepest level outwards
    let mut ech = Echelon::new(f, d * d);
    let mut adapted: Vec<(usize, Matrix)> = Vec::new();
    for lvl in levels.iter().rev() {
        for v in lvl.space.space.vectors() {
            if ech.insert(v.to_vec()) {
                adapted.push((lvl.m, unflatten(f, d, v)));
            }
        }
    }
    for x in 0..adapted.len() {
        for y in x..adapted.len() {
            let (lx, fx) = &adapted[x];
            let (ly, fy) = &adapted[y];
            let target = (lx + ly - 1).min(m_max);
            if !levels[target - 1].space.contains(&commutator(fx, fy)) {
                return Err(Error::Internal(format!("[Der_{lx}, Der_{ly}] is not contained in Der_{target}")));
            }
        }
    }
    Ok(levels)
}

/// Lie algebra structure on a bracket-closed space of derivations.
pub fn derivation_lie_algebra(space: &DerivationSpace) -> Result<LieAlgebra> {
    let mats = space.matrices();
    let mut err = None;
    let l = LieAlgebra::from_dense_upper(space.field, mats.len(), |i, j| match space.coordinates(&commutator(&mats[i], &mats[j])) {
        Some(c) => c,
        None => {
            err.get_or_insert(Error::Internal("space of derivations is not closed under the bracket".into()));
            Vec::new()
        }
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(l),
    }
}

/// Socle maps: `E`-`E`-bimodule maps killing `E + J²` with image in `soc(A)`.
#[derive(Clone, Debug)]
pub struct SocleMaps {
    pub space: DerivationSpace,
}

/// Computes the socle maps of a split symmetric algebra and verifies that
/// each is a derivation, that nonzero ones are outer, and that their classes
/// are killed by `J(Z(A))`.
pub fn socle_maps(a: &AssocAlgebra, h: &HH1Presentation) -> Result<SocleMaps> {
    let f = a.field();
    let d = a.dim();
    match is_symmetric(a)? {
        Symmetry::Symmetric { .. } => {}
        Symmetry::NotSymmetric => return Err(Error::NotSymmetric),
        Symmetry::Inconclusive { space_dim } => {
            return Err(Error::Inconclusive(format!("symmetry undecided on a {space_dim}-dimensional form space")))
        }
    }
    let e = wedderburn_complement(a)?;
    let j = radical(a)?.clone();
    let j2 = ideal_power(a, &j, 2)?;
    let kill = e.space.sum(j2.space())?;
    let soc = socle(a)?;
    let free = kill.free_columns();
    // f = sum_{c,t} y_{c,t} (projection onto coordinate c) ⊗ soc_t
    let mut candidates = Vec::new();
    for &c in &free {
        for s in soc.space().vectors() {
            let mut m = Matrix::zero(f, d, d);
            for l in 0..d {
                let r = kill.reduce(&a.basis_vector(l));
                if r[c] != 0 {
                    for (k, &x) in s.iter().enumerate() {
                        m.set(k, l, f.mul(r[c], x));
                    }
                }
            }
            candidates.push(m);
        }
    }
    let idems = lift_idempotents(a)?;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    if !candidates.is_empty() {
        let mut cons: Vec<Vec<Scalar>> = vec![Vec::new(); candidates.len()];
        for ev in &idems {
            let le = a.left_mul_matrix(ev);
            let re = a.right_mul_matrix(ev);
            for (ci, m) in candidates.iter().enumerate() {
                cons[ci].extend(flatten(&m.mul(&le).sub(&le.mul(m))));
                cons[ci].extend(flatten(&m.mul(&re).sub(&re.mul(m))));
            }
        }
        let n_rows = cons[0].len();
        for r in 0..n_rows {
            rows.push(cons.iter().map(|c| c[r]).collect());
        }
    }
    let mats: Vec<Matrix> = if candidates.is_empty() {
        Vec::new()
    } else if rows.is_empty() {
        candidates.clone()
    } else {
        let kernel = Matrix::from_rows(f, candidates.len(), &rows)?.kernel();
        kernel
            .vectors()
            .map(|y| {
                let mut m = Matrix::zero(f, d, d);
                for (ci, &c) in y.iter().enumerate() {
                    if c != 0 {
                        m.add_scaled(c, &candidates[ci]);
                    }
                }
                m
            })
            .collect()
    };
    let space = DerivationSpace::from_matrices(f, d, &mats);
    let msoc = hh1_module_socle(a, h)?;
    for m in space.matrices() {
        if !is_derivation(a, &m) {
            return Err(Error::Internal("socle map is not a derivation".into()));
        }
        let coords = h.coordinates(&m).ok_or_else(|| Error::Internal("socle map outside Der".into()))?;
        if !msoc.contains(&coords) {
            return Err(Error::Internal("socle map class is not in soc_Z(HH¹)".into()));
        }
    }
    if !space.space.intersect(&h.ider.space)?.is_zero() {
        return Err(Error::Internal("a nonzero socle map is inner".into()));
    }
    Ok(SocleMaps { space })
}

/// `dim e_i (J/J²) e_i` for the primitive idempotents of a split basic algebra.
pub fn ext1_self_dims(a: &AssocAlgebra) -> Result<Vec<usize>> {
    let f = a.field();
    let d = a.dim();
    let j = radical(a)?.clone();
    let j2 = ideal_power(a, &j, 2)?;
    let idems = lift_idempotents(a)?;
    Ok(idems
        .iter()
        .map(|e| {
            let corner = |s: &Subspace| {
                Subspace::from_vectors(f, d, s.vectors().map(|x| a.mul(&a.mul(e, x), e)).collect()).dim()
            };
            corner(j.space()) - corner(j2.space())
        })
        .collect())
}

/// Dimensions reported for an algebra's HH¹ computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HH1Dims {
    pub der: usize,
    pub ider: usize,
    pub hh1: usize,
}

impl HH1Presentation {
    pub fn dims(&self) -> HH1Dims {
        HH1Dims { der: self.der.dim(), ider: self.ider.dim(), hh1: self.dim() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assoc::{group_algebra, truncated_polynomial_algebra};
    use crate::groups::GroupSpec;

    fn kg(spec: GroupSpec, p: u32) -> AssocAlgebra {
        group_algebra(&spec.build().unwrap(), PrimeField::new(p).unwrap()).unwrap()
    }

    #[test]
    fn generator_solve_matches_all_pairs_oracle() {
        for (spec, p) in [
            (GroupSpec::Cyclic { n: 2 }, 2),
            (GroupSpec::Cyclic { n: 3 }, 3),
            (GroupSpec::Cyclic { n: 4 }, 2),
            (GroupSpec::ElemAbelian { p: 2, n: 2 }, 2),
            (GroupSpec::SemidirectCpCm { p: 3, m: 2, d: 2 }, 3),
            (GroupSpec::Dihedral { order: 8 }, 2),
            (GroupSpec::Cyclic { n: 6 }, 3),
        ] {
            let a = kg(spec.clone(), p);
            assert_eq!(derivations(&a).unwrap(), derivations_by_basis_pairs(&a).unwrap(), "{spec}");
        }
    }

    #[test]
    fn derivation_dims() {
        assert_eq!(derivations(&kg(GroupSpec::Cyclic { n: 2 }, 2)).unwrap().dim(), 2);
        assert_eq!(derivations(&kg(GroupSpec::Cyclic { n: 5 }, 5)).unwrap().dim(), 5);
        assert_eq!(derivations(&kg(GroupSpec::ElemAbelian { p: 3, n: 2 }, 3)).unwrap().dim(), 18);
    }

    #[test]
    fn inner_derivation_dims() {
        assert!(inner_derivations(&kg(GroupSpec::Cyclic { n: 4 }, 2)).unwrap().space().is_zero());
        assert_eq!(inner_derivations(&kg(GroupSpec::SemidirectCpCm { p: 3, m: 2, d: 2 }, 3)).unwrap().dim(), 3);
        assert_eq!(inner_derivations(&kg(GroupSpec::Dihedral { order: 8 }, 2)).unwrap().dim(), 3);
    }

    #[test]
    fn hh1_dims() {
        assert_eq!(hh1(&kg(GroupSpec::SemidirectCpCm { p: 3, m: 2, d: 2 }, 3)).unwrap().dim(), 1);
        assert_eq!(hh1(&kg(GroupSpec::Cyclic { n: 7 }, 7)).unwrap().dim(), 7);
        assert_eq!(hh1(&kg(GroupSpec::Cyclic { n: 2 }, 3)).unwrap().dim(), 0);
    }

    #[test]
    fn hh1_of_c2_bracket() {
        // basis of Der(k[t]/t^2) in group basis {1, g}, t = g - 1
        let a = kg(GroupSpec::Cyclic { n: 2 }, 2);
        let h = hh1(&a).unwrap();
        assert_eq!(h.dim(), 2);
        assert!(!h.lie.is_abelian());
        assert_eq!(h.lie.derived_algebra().dim(), 1);
    }

    #[test]
    fn restriction_for_commutative_algebra_is_bijective() {
        let a = kg(GroupSpec::Cyclic { n: 4 }, 2);
        let h = hh1(&a).unwrap();
        let r = restrict_to_center(&a, &h).unwrap();
        assert_eq!(r.map.rank(), h.dim());
        assert!(r.kernel.is_zero());
    }

    #[test]
    fn restriction_for_d8_has_kernel() {
        let a = kg(GroupSpec::Dihedral { order: 8 }, 2);
        let h = hh1(&a).unwrap();
        let r = restrict_to_center(&a, &h).unwrap();
        assert!(r.kernel.dim() >= 1);
    }

    #[test]
    fn filtration_of_truncated_polynomials() {
        let f = PrimeField::new(5).unwrap();
        let a = truncated_polynomial_algebra(f, 1, 5).unwrap();
        let der = derivations(&a).unwrap();
        let levels = der_filtration(&a, &der, 5).unwrap();
        // d/dt sends t to 1, so Der_1 misses it
        assert_eq!(levels[0].space.dim(), 4);
        assert_eq!(levels[1].space.dim(), 3);
        // J^5 = 0: derivations vanishing on J
        assert_eq!(levels[4].space.dim(), 0);
        let l2 = derivation_lie_algebra(&levels[1].space).unwrap();
        assert!(l2.is_nilpotent());
    }

    #[test]
    fn socle_maps_of_truncated_polynomials() {
        let f = PrimeField::new(3).unwrap();
        let a = truncated_polynomial_algebra(f, 1, 3).unwrap();
        let h = hh1(&a).unwrap();
        let s = socle_maps(&a, &h).unwrap();
        assert_eq!(s.space.dim(), 1);
        assert_eq!(hh1_module_socle(&a, &h).unwrap().dim(), 1);
        assert_eq!(ext1_self_dims(&a).unwrap(), vec![1]);
    }

    #[test]
    fn induced_derivation_on_quotient_by_j2() {
        let a = kg(GroupSpec::Cyclic { n: 4 }, 2);
        let j = radical(&a).unwrap().clone();
        let j2 = ideal_power(&a, &j, 2).unwrap();
        let der = derivations(&a).unwrap();
        for m in der.matrices() {
            let (q, g) = induce_on_ideal(&a, &j2, &m).unwrap();
            assert_eq!(g.rows(), q.algebra.dim());
        }
    }
}
