//! Spinning and Norton-style irreducibility testing for matrix modules.
//!
//! A module is a list of square matrices acting on column vectors. The
//! submodule search picks random elements `theta` of the enveloping algebra,
//! factors their characteristic polynomial, and spins null vectors of
//! `g(theta)` for small irreducible factors `g`. When the nullspace of
//! `g(theta)` has dimension exactly `deg g`, a full spin of one null vector
//! of `g(theta)` and of `g(theta)^T` certifies irreducibility.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffmat::{Echelon, Matrix, PrimeField, Scalar, Subspace};
use crate::poly::{charpoly, small_irreducible_factors};

/// Closure of the span of `seeds` under every generator.
pub fn spin(field: PrimeField, gens: &[Matrix], seeds: &[Vec<Scalar>]) -> Subspace {
    let n = seeds.first().map(|s| s.len()).or_else(|| gens.first().map(|g| g.cols())).unwrap_or(0);
    let mut ech = Echelon::new(field, n);
    let mut queue = Vec::new();
    for s in seeds {
        if ech.insert(s.clone()) {
            queue.push(s.clone());
        }
    }
    let mut next = 0;
    while next < queue.len() && ech.rank() < n {
        let v = queue[next].clone();
        next += 1;
        for g in gens {
            let w = g.mul_vec(&v);
            if ech.insert(w.clone()) {
                queue.push(w);
                if ech.rank() == n {
                    break;
                }
            }
        }
    }
    ech.into_subspace()
}

/// How `theta` was built: starting from the generators, each step appends
/// `pool[i] * pool[j]` (plus `pool[k]` when present); `theta` is a linear
/// combination of pool elements plus a multiple of the identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaRecipe {
    pub steps: Vec<(usize, usize, Option<usize>)>,
    pub combination: Vec<(Scalar, usize)>,
    pub shift: Scalar,
}

/// Transcript of a successful irreducibility certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrreducibilityCertificate {
    pub seed: u64,
    pub attempt: usize,
    pub theta: Option<ThetaRecipe>,
    /// Irreducible factor `g` of the characteristic polynomial, low degree first.
    pub factor: Vec<Scalar>,
    pub nullity: usize,
    pub primal_spin_dim: usize,
    pub dual_spin_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubmoduleSearch {
    /// A proper nonzero submodule.
    Reducible(Subspace),
    Irreducible(IrreducibilityCertificate),
}

/// Tuning for [`find_submodule`].
#[derive(Clone, Copy, Debug)]
pub struct SearchParams {
    pub attempts: usize,
    pub max_factor_degree: usize,
    /// Products appended to the pool per attempt.
    pub pool_steps: usize,
}

impl Default for SearchParams {
    fn default() -> Self {
        SearchParams { attempts: 200, max_factor_degree: 6, pool_steps: 6 }
    }
}

fn random_theta<R: Rng>(field: PrimeField, gens: &[Matrix], params: &SearchParams, rng: &mut R) -> (ThetaRecipe, Matrix) {
    let n = gens[0].rows();
    let p = field.p();
    let mut pool: Vec<Matrix> = gens.to_vec();
    let mut steps = Vec::with_capacity(params.pool_steps);
    for _ in 0..params.pool_steps {
        let i = rng.gen_range(0..pool.len());
        let j = rng.gen_range(0..pool.len());
        let mut m = pool[i].mul(&pool[j]);
        let k = if rng.gen_bool(0.5) { Some(rng.gen_range(0..pool.len())) } else { None };
        if let Some(k) = k {
            m.add_scaled(1, &pool[k]);
        }
        steps.push((i, j, k));
        pool.push(m);
    }
    let mut theta = Matrix::zero(field, n, n);
    let mut combination = Vec::new();
    for (idx, m) in pool.iter().enumerate() {
        let c = rng.gen_range(0..p);
        if c != 0 {
            theta.add_scaled(c, m);
            combination.push((c, idx));
        }
    }
    // identity shift moves eigenvalues around for tiny fields
    let shift = rng.gen_range(0..p);
    if shift != 0 {
        for i in 0..n {
            let v = field.add(theta.get(i, i), shift);
            theta.set(i, i, v);
        }
    }
    (ThetaRecipe { steps, combination, shift }, theta)
}

/// Searches for a proper nonzero submodule or certifies irreducibility.
///
/// Deterministic for a given `seed`. Returns [`Error::Inconclusive`] when no
/// decision was reached within the attempt budget.
pub fn find_submodule(field: PrimeField, gens: &[Matrix], seed: u64, params: &SearchParams) -> Result<SubmoduleSearch> {
    let n = match gens.first() {
        Some(g) => g.rows(),
        None => return Err(Error::InvalidParameter("module without generators".into())),
    };
    if n == 1 {
        return Ok(SubmoduleSearch::Irreducible(IrreducibilityCertificate {
            seed,
            attempt: 0,
            theta: None,
            factor: Vec::new(),
            nullity: 1,
            primal_spin_dim: 1,
            dual_spin_dim: 1,
        }));
    }
    // a common null vector of all generators spans a submodule
    {
        let stacked: Vec<Vec<Scalar>> = gens.iter().flat_map(|g| g.row_vectors()).collect();
        let common = Matrix::from_rows(field, n, &stacked)?.kernel();
        if !common.is_zero() {
            let v = common.vector(0).to_vec();
            return Ok(SubmoduleSearch::Reducible(Subspace::from_vectors(field, n, vec![v])));
        }
    }
    let transposed: Vec<Matrix> = gens.iter().map(|g| g.transpose()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..params.attempts {
        let (desc, theta) = random_theta(field, gens, params, &mut rng);
        let cp = charpoly(&theta);
        let factors = small_irreducible_factors(field, &cp, params.max_factor_degree, &mut rng);
        for g in factors {
            let gt = g.eval_matrix(&theta);
            let null = gt.kernel();
            if null.is_zero() {
                continue;
            }
            let deg = g.degree().unwrap_or(0);
            let tries = if null.dim() == deg { 1 } else { null.dim().min(4) };
            for i in 0..tries {
                let v = null.vector(i).to_vec();
                let s = spin(field, gens, &[v]);
                if s.dim() < n {
                    return Ok(SubmoduleSearch::Reducible(s));
                }
            }
            if null.dim() != deg {
                continue;
            }
            let dual_null = gt.transpose().kernel();
            let w = dual_null.vector(0).to_vec();
            let ds = spin(field, &transposed, &[w]);
            if ds.dim() < n {
                let sub = ds.annihilator();
                return Ok(SubmoduleSearch::Reducible(sub));
            }
            return Ok(SubmoduleSearch::Irreducible(IrreducibilityCertificate {
                seed,
                attempt,
                theta: Some(desc),
                factor: g.coeffs.clone(),
                nullity: null.dim(),
                primal_spin_dim: n,
                dual_spin_dim: n,
            }));
        }
    }
    Err(Error::Inconclusive(format!(
        "no submodule or good factor found in {} attempts (dim {n}, seed {seed})",
        params.attempts
    )))
}

/// Checks that `sub` is invariant under every generator.
pub fn is_submodule(gens: &[Matrix], sub: &Subspace) -> bool {
    gens.iter().all(|g| sub.vectors().all(|v| sub.contains(&g.mul_vec(v))))
}

/// Exhaustive search over all one-dimensional subspaces: returns a proper
/// nonzero submodule, or `None` if every nonzero vector spins to the whole space.
///
/// Only feasible when `(p^n - 1)/(p - 1)` is small.
pub fn exhaustive_submodule(field: PrimeField, gens: &[Matrix]) -> Option<Subspace> {
    let n = gens[0].rows();
    let p = field.p() as u64;
    // normalized vectors: leading nonzero entry equal to 1
    for lead in 0..n {
        let tail = n - lead - 1;
        let count = p.pow(tail as u32);
        for idx in 0..count {
            let mut v = vec![0; n];
            v[lead] = 1;
            let mut k = idx;
            for j in 0..tail {
                v[lead + 1 + j] = (k % p) as u32;
                k /= p;
            }
            let s = spin(field, gens, &[v]);
            if s.dim() < n {
                return Some(s);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    /// Permutation matrix of the n-cycle.
    fn cycle(f: PrimeField, n: usize) -> Matrix {
        let mut m = Matrix::zero(f, n, n);
        for i in 0..n {
            m.set((i + 1) % n, i, 1);
        }
        m
    }

    #[test]
    fn spin_of_cycle() {
        let f = gf(3);
        let c = cycle(f, 4);
        let s = spin(f, &[c.clone()], &[vec![1, 0, 0, 0]]);
        assert!(s.is_full());
        let s = spin(f, &[c], &[vec![1, 1, 1, 1]]);
        assert_eq!(s.dim(), 1);
    }

    #[test]
    fn permutation_module_is_reducible() {
        let f = gf(5);
        let c = cycle(f, 5);
        match find_submodule(f, &[c.clone()], 0, &SearchParams::default()).unwrap() {
            SubmoduleSearch::Reducible(s) => {
                assert!(s.dim() > 0 && s.dim() < 5);
                assert!(is_submodule(&[c], &s));
            }
            SubmoduleSearch::Irreducible(_) => panic!("permutation module has the all-ones submodule"),
        }
    }

    #[test]
    fn full_matrix_algebra_is_irreducible() {
        // elementary matrices E_{12}, E_{21}, E_{23}, E_{32} generate M_3
        let f = gf(2);
        let mut gens = Vec::new();
        for (i, j) in [(0, 1), (1, 0), (1, 2), (2, 1)] {
            let mut m = Matrix::zero(f, 3, 3);
            m.set(i, j, 1);
            gens.push(m);
        }
        match find_submodule(f, &gens, 7, &SearchParams::default()).unwrap() {
            SubmoduleSearch::Irreducible(c) => assert_eq!(c.primal_spin_dim, 3),
            SubmoduleSearch::Reducible(s) => panic!("unexpected submodule {s:?}"),
        }
        assert!(exhaustive_submodule(f, &gens).is_none());
    }

    #[test]
    fn non_split_irreducible_found_by_degree_two_factor() {
        // companion matrix of x^2 + x + 1 over GF(2): GF(4) acting on itself
        let f = gf(2);
        let m = Matrix::from_rows(f, 2, &[vec![0, 1], vec![1, 1]]).unwrap();
        match find_submodule(f, &[m], 1, &SearchParams::default()).unwrap() {
            SubmoduleSearch::Irreducible(c) => assert_eq!(c.factor.len(), 3),
            SubmoduleSearch::Reducible(_) => panic!("GF(4) is irreducible over GF(2)"),
        }
    }
}
