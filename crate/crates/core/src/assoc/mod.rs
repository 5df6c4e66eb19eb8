//! Finite-dimensional unital associative algebras given by structure constants.

mod idempotents;
mod ideals;
mod radical;
mod symmetric;

use std::sync::Arc;

use once_cell::sync::OnceCell;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffmat::{Matrix, PrimeField, Scalar, Subspace};
use crate::groups::{GroupSpec, GroupTable};
use crate::meataxe::spin;

pub use idempotents::{block_decomposition, lift_idempotents, wedderburn_complement, Block};
pub use ideals::{
    center, ideal_from, ideal_power, ideal_product, left_socle, ot_criterion, quotient, right_socle, socle,
    subalgebra_from_space, IdealSubspace, QuotientAlgebra, SubalgebraWithEmbedding,
};
pub use radical::{
    nilpotency_index, radical, radical_chop, radical_frobenius, radical_layers, radical_method, RadicalMethod,
};
pub use symmetric::{is_local, is_symmetric, is_uniserial, Symmetry};

/// Provenance carried along with an algebra.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraMeta {
    /// The group, when the algebra is a group algebra in the group basis.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupSpec>,
    /// Construction history, outermost last (e.g. `["kC4", "quotient by J^2"]`).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub ancestry: Vec<String>,
    /// Claimed radical shortcut; always re-verified before use.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radical_hint: Option<RadicalHint>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RadicalHint {
    /// The algebra is `kP` for a p-group `P`; the radical is the augmentation ideal.
    Augmentation,
}

#[derive(Clone, Debug, Default)]
struct Cache {
    left: OnceCell<Arc<Vec<Matrix>>>,
    right: OnceCell<Arc<Vec<Matrix>>>,
    generators: OnceCell<Vec<usize>>,
    radical: OnceCell<(IdealSubspace, RadicalMethod)>,
    center: OnceCell<Arc<SubalgebraWithEmbedding>>,
}

/// An associative unital algebra over GF(p) with basis `b_0 .. b_{d-1}` and
/// products `b_i b_j = sum_k c_{ij}^k b_k`.
#[derive(Clone, Debug)]
pub struct AssocAlgebra {
    field: PrimeField,
    dim: usize,
    // index i * dim + j -> sparse list of (k, c_{ij}^k)
    table: Vec<Vec<(u32, Scalar)>>,
    unit: Vec<Scalar>,
    labels: Vec<String>,
    meta: AlgebraMeta,
    cache: Cache,
}

impl PartialEq for AssocAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.dim == other.dim
            && self.table == other.table
            && self.unit == other.unit
            && self.labels == other.labels
            && self.meta == other.meta
    }
}

impl AssocAlgebra {
    /// Builds an algebra from sparse products `(i, j, k, c)` meaning
    /// `c_{ij}^k = c`. Repeated entries are summed.
    ///
    /// Fails unless the product is associative on all basis triples and the
    /// unit is a two-sided identity.
    pub fn new(
        field: PrimeField,
        dim: usize,
        products: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        unit: Vec<Scalar>,
        labels: Vec<String>,
        meta: AlgebraMeta,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidParameter("algebra dimension must be at least 1".into()));
        }
        if unit.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: unit.len() });
        }
        if labels.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: labels.len() });
        }
        let mut dense: Vec<Vec<Scalar>> = vec![Vec::new(); dim * dim];
        for (i, j, k, c) in products {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::InvalidParameter(format!("structure constant index ({i},{j},{k}) out of range")));
            }
            let slot = &mut dense[i * dim + j];
            if slot.is_empty() {
                slot.resize(dim, 0);
            }
            slot[k] = field.add(slot[k], field.reduce(c as u64));
        }
        let table = dense
            .into_iter()
            .map(|v| v.into_iter().enumerate().filter(|&(_, c)| c != 0).map(|(k, c)| (k as u32, c)).collect())
            .collect();
        let unit = unit.into_iter().map(|x| field.reduce(x as u64)).collect();
        let a = AssocAlgebra { field, dim, table, unit, labels, meta, cache: Cache::default() };
        a.check_unit()?;
        a.check_associative()?;
        Ok(a)
    }

    /// Builds an algebra from dense product vectors `b_i b_j`, indexed `i * dim + j`.
    pub(crate) fn from_products(
        field: PrimeField,
        dim: usize,
        products: &[Vec<Scalar>],
        unit: Vec<Scalar>,
        labels: Vec<String>,
        meta: AlgebraMeta,
    ) -> Result<Self> {
        let quads = products.iter().enumerate().flat_map(|(ij, v)| {
            v.iter()
                .enumerate()
                .filter(|&(_, &c)| c != 0)
                .map(move |(k, &c)| (ij / dim, ij % dim, k, c))
        });
        Self::new(field, dim, quads.collect::<Vec<_>>(), unit, labels, meta)
    }

    fn check_unit(&self) -> Result<()> {
        for i in 0..self.dim {
            let b = self.basis_vector(i);
            if self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b {
                return Err(Error::InvalidParameter(format!("unit is not a two-sided identity on basis element {i}")));
            }
        }
        Ok(())
    }

    fn check_associative(&self) -> Result<()> {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                let ij = self.basis_product(i, j);
                for k in 0..d {
                    // (b_i b_j) b_k
                    let mut lhs = vec![0u64; d];
                    for &(l, c) in &self.table[i * d + j] {
                        for &(m, c2) in &self.table[l as usize * d + k] {
                            lhs[m as usize] += c as u64 * c2 as u64;
                        }
                    }
                    // b_i (b_j b_k)
                    let mut rhs = vec![0u64; d];
                    for &(l, c) in &self.table[j * d + k] {
                        for &(m, c2) in &self.table[i * d + l as usize] {
                            rhs[m as usize] += c as u64 * c2 as u64;
                        }
                    }
                    let p = self.field.p() as u64;
                    if lhs.iter().zip(&rhs).any(|(x, y)| x % p != y % p) {
                        return Err(Error::InvalidParameter(format!(
                            "product is not associative on basis triple ({i},{j},{k})"
                        )));
                    }
                }
                let _ = ij;
            }
        }
        Ok(())
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn meta(&self) -> &AlgebraMeta {
        &self.meta
    }
    pub fn with_meta(mut self, meta: AlgebraMeta) -> Self {
        self.meta = meta;
        self.cache = Cache::default();
        self
    }

    /// Structure constants as sorted quadruples `(i, j, k, c)`.
    pub fn structure_constants(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let d = self.dim;
        self.table
            .iter()
            .enumerate()
            .flat_map(|(ij, v)| v.iter().map(move |&(k, c)| (ij / d, ij % d, k as usize, c)))
            .collect()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    /// `b_i b_j` as a dense vector.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut v = vec![0; self.dim];
        for &(k, c) in &self.table[i * self.dim + j] {
            v[k as usize] = c;
        }
        v
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim;
        let p = self.field.p() as u64;
        let mut acc = vec![0u64; d];
        let ys: Vec<(usize, u64)> = y.iter().enumerate().filter(|&(_, &b)| b != 0).map(|(j, &b)| (j, b as u64)).collect();
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for &(j, b) in &ys {
                let ab = a as u64 * b % p;
                for &(k, c) in &self.table[i * d + j] {
                    acc[k as usize] += ab * c as u64;
                }
            }
            // at most d^2 terms below 2^32 each land in any slot per row of x
            if acc.iter().any(|&s| s > 1 << 60) {
                acc.iter_mut().for_each(|s| *s %= p);
            }
        }
        acc.into_iter().map(|s| (s % p) as u32).collect()
    }

    /// `xy - yx`
    pub fn commutator(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.field.sub_vec(&self.mul(x, y), &self.mul(y, x))
    }

    pub fn pow(&self, x: &[Scalar], mut e: u128) -> Vec<Scalar> {
        let mut base = x.to_vec();
        let mut acc = self.unit.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Smallest power `p^m` with `p^m >= dim`; raising to it kills every nilpotent element.
    pub fn frobenius_exponent(&self) -> u128 {
        let p = self.field.p() as u128;
        let mut q = p;
        while q < self.dim as u128 {
            q *= p;
        }
        q
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim;
        (0..d).all(|i| (i + 1..d).all(|j| self.table[i * d + j] == self.table[j * d + i]))
    }

    /// Matrices of left multiplication by each basis element (column action).
    pub fn left_matrices(&self) -> Arc<Vec<Matrix>> {
        self.cache
            .left
            .get_or_init(|| {
                let d = self.dim;
                Arc::new(
                    (0..d)
                        .map(|i| {
                            let mut m = Matrix::zero(self.field, d, d);
                            for l in 0..d {
                                for &(k, c) in &self.table[i * d + l] {
                                    m.set(k as usize, l, c);
                                }
                            }
                            m
                        })
                        .collect(),
                )
            })
            .clone()
    }

    /// Matrices of right multiplication by each basis element (column action).
    pub fn right_matrices(&self) -> Arc<Vec<Matrix>> {
        self.cache
            .right
            .get_or_init(|| {
                let d = self.dim;
                Arc::new(
                    (0..d)
                        .map(|i| {
                            let mut m = Matrix::zero(self.field, d, d);
                            for l in 0..d {
                                for &(k, c) in &self.table[l * d + i] {
                                    m.set(k as usize, l, c);
                                }
                            }
                            m
                        })
                        .collect(),
                )
            })
            .clone()
    }

    /// Matrix of `y ↦ x y`.
    pub fn left_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let ls = self.left_matrices();
        let mut m = Matrix::zero(self.field, self.dim, self.dim);
        for (i, &c) in x.iter().enumerate() {
            if c != 0 {
                m.add_scaled(c, &ls[i]);
            }
        }
        m
    }

    /// Matrix of `y ↦ y x`.
    pub fn right_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let rs = self.right_matrices();
        let mut m = Matrix::zero(self.field, self.dim, self.dim);
        for (i, &c) in x.iter().enumerate() {
            if c != 0 {
                m.add_scaled(c, &rs[i]);
            }
        }
        m
    }

    /// A set of basis indices generating the algebra together with the unit,
    /// chosen greedily in basis order.
    pub fn generators(&self) -> &[usize] {
        self.cache.generators.get_or_init(|| {
            let rs = self.right_matrices();
            let mut gens: Vec<usize> = Vec::new();
            let mut sub = spin(self.field, &[], &[self.unit.clone()]);
            for i in 0..self.dim {
                if sub.is_full() {
                    break;
                }
                if sub.contains(&self.basis_vector(i)) {
                    continue;
                }
                gens.push(i);
                let acting: Vec<Matrix> = gens.iter().map(|&g| rs[g].clone()).collect();
                let seeds: Vec<Vec<Scalar>> = sub.vectors().map(|v| v.to_vec()).collect();
                sub = spin(self.field, &acting, &seeds);
            }
            gens
        })
    }

    /// Whether `space` is closed under the product.
    pub fn is_subalgebra(&self, space: &Subspace) -> bool {
        space.vectors().all(|x| space.vectors().all(|y| space.contains(&self.mul(x, y))))
    }
}

/// The group algebra `kG` in the group-element basis.
pub fn group_algebra(g: &GroupTable, field: PrimeField) -> Result<AssocAlgebra> {
    let n = g.order();
    let products = (0..n).flat_map(|a| (0..n).map(move |b| (a, b, g.mul(a, b), 1)));
    let mut unit = vec![0; n];
    unit[g.identity()] = 1;
    let radical_hint = (g.p_group_prime() == Some(field.p())).then_some(RadicalHint::Augmentation);
    let meta = AlgebraMeta { group: g.spec().cloned(), ancestry: Vec::new(), radical_hint };
    AssocAlgebra::new(field, n, products.collect::<Vec<_>>(), unit, g.labels().to_vec(), meta)
}

/// The truncated polynomial algebra `k[x_1..x_n]/(x_i^p)` in the monomial
/// basis; monomial `x^a` has index `sum a_i p^i`.
pub fn truncated_polynomial_algebra(field: PrimeField, n: u32, height: u32) -> Result<AssocAlgebra> {
    let h = height as usize;
    let d = h.pow(n);
    let digits = |mut x: usize| -> Vec<usize> {
        (0..n)
            .map(|_| {
                let r = x % h;
                x /= h;
                r
            })
            .collect()
    };
    let mut products = Vec::new();
    for a in 0..d {
        let da = digits(a);
        for b in 0..d {
            let db = digits(b);
            if da.iter().zip(&db).all(|(x, y)| x + y < h) {
                products.push((a, b, a + b, 1));
            }
        }
    }
    let mut unit = vec![0; d];
    unit[0] = 1;
    let labels = (0..d)
        .map(|a| {
            let da = digits(a);
            let parts: Vec<String> = da
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{e}", i + 1) })
                .collect();
            if parts.is_empty() {
                "1".to_string()
            } else {
                parts.join("*")
            }
        })
        .collect();
    let meta = AlgebraMeta { ancestry: vec![format!("k[x1..x{n}]/(x_i^{height})")], ..Default::default() };
    AssocAlgebra::new(field, d, products, unit, labels, meta)
}
