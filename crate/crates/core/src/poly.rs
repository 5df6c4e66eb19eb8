//! Univariate polynomials over GF(p), characteristic polynomials, and
//! extraction of low-degree irreducible factors.
//!
//! Coefficients are stored lowest degree first with no trailing zeros; the
//! zero polynomial is the empty vector.

use rand::Rng;

use crate::ffmat::{Matrix, PrimeField, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    pub coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![1] }
    }

    /// `x - a`
    pub fn linear(f: PrimeField, a: Scalar) -> Self {
        Poly::new(vec![f.neg(a), 1])
    }

    pub fn x() -> Self {
        Poly { coeffs: vec![0, 1] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Scalar {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn eval(&self, f: PrimeField, x: Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn add(&self, f: PrimeField, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n)
            .map(|i| f.add(*self.coeffs.get(i).unwrap_or(&0), *o.coeffs.get(i).unwrap_or(&0)))
            .collect();
        Poly::new(c)
    }

    pub fn sub(&self, f: PrimeField, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n)
            .map(|i| f.sub(*self.coeffs.get(i).unwrap_or(&0), *o.coeffs.get(i).unwrap_or(&0)))
            .collect();
        Poly::new(c)
    }

    pub fn mul(&self, f: PrimeField, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![0; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a != 0 {
                f.axpy(&mut c[i..i + o.coeffs.len()], a, &o.coeffs);
            }
        }
        Poly::new(c)
    }

    pub fn scale(&self, f: PrimeField, a: Scalar) -> Poly {
        Poly::new(self.coeffs.iter().map(|&c| f.mul(c, a)).collect())
    }

    pub fn monic(&self, f: PrimeField) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(f, f.inv(self.lead()))
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, f: PrimeField, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("polynomial division by zero");
        let inv = f.inv(d.lead());
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![0; r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = f.mul(r[k + dd], inv);
            q[k] = c;
            if c != 0 {
                f.axpy(&mut r[k..k + dd + 1], f.neg(c), &d.coeffs);
            }
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    pub fn rem(&self, f: PrimeField, d: &Poly) -> Poly {
        self.divrem(f, d).1
    }

    /// Monic gcd.
    pub fn gcd(&self, f: PrimeField, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(f, &b);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    pub fn mulmod(&self, f: PrimeField, o: &Poly, m: &Poly) -> Poly {
        self.mul(f, o).rem(f, m)
    }

    pub fn powmod(&self, f: PrimeField, mut e: u128, m: &Poly) -> Poly {
        let mut base = self.rem(f, m);
        let mut acc = Poly::one().rem(f, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mulmod(f, &base, m);
            }
            base = base.mulmod(f, &base, m);
            e >>= 1;
        }
        acc
    }

    /// Evaluates the polynomial at a square matrix by Horner's rule.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let f = m.field();
        let n = m.rows();
        let mut acc = Matrix::zero(f, n, n);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(m);
            for i in 0..n {
                let v = f.add(acc.get(i, i), c);
                acc.set(i, i, v);
            }
        }
        acc
    }
}

/// Characteristic polynomial `det(xI - m)` via reduction to Hessenberg form.
pub fn charpoly(m: &Matrix) -> Poly {
    assert_eq!(m.rows(), m.cols(), "charpoly of a non-square matrix");
    let f = m.field();
    let n = m.rows();
    let mut h: Vec<Vec<Scalar>> = m.row_vectors();
    // similarity transforms to upper Hessenberg form
    for col in 0..n.saturating_sub(2) {
        let piv = col + 1;
        let Some(i) = (piv..n).find(|&i| h[i][col] != 0) else {
            continue;
        };
        if i != piv {
            h.swap(i, piv);
            for row in h.iter_mut() {
                row.swap(i, piv);
            }
        }
        let t = f.inv(h[piv][col]);
        for j in piv + 1..n {
            let u = f.mul(h[j][col], t);
            if u == 0 {
                continue;
            }
            // row_j -= u * row_piv
            let src = h[piv].clone();
            f.axpy(&mut h[j], f.neg(u), &src);
            // col_piv += u * col_j
            for row in h.iter_mut() {
                let v = f.add(row[piv], f.mul(u, row[j]));
                row[piv] = v;
            }
        }
    }
    // charpoly recurrence on the Hessenberg matrix
    let mut ps: Vec<Poly> = vec![Poly::one()];
    for k in 0..n {
        let mut pk = Poly::linear(f, h[k][k]).mul(f, &ps[k]);
        let mut prod = 1;
        for i in (0..k).rev() {
            prod = f.mul(prod, h[i + 1][i]);
            if prod == 0 {
                break;
            }
            let c = f.mul(h[i][k], prod);
            if c != 0 {
                pk = pk.sub(f, &ps[i].scale(f, c));
            }
        }
        ps.push(pk);
    }
    ps.pop().unwrap()
}

/// Distinct monic irreducible factors of `g` of degree at most `max_deg`,
/// ordered by degree and then by coefficients.
pub fn small_irreducible_factors<R: Rng>(f: PrimeField, g: &Poly, max_deg: usize, rng: &mut R) -> Vec<Poly> {
    let mut rest = g.monic(f);
    let mut out = Vec::new();
    let x = Poly::x();
    let mut frob = x.clone(); // x^(p^e) mod rest, recomputed when rest shrinks
    for e in 1..=max_deg {
        let Some(dr) = rest.degree() else { break };
        if dr < e {
            break;
        }
        frob = frob.rem(f, &rest).powmod(f, f.p() as u128, &rest);
        let prod = frob.sub(f, &x).gcd(f, &rest);
        if prod.degree().unwrap_or(0) == 0 {
            continue;
        }
        let mut parts = Vec::new();
        equal_degree_split(f, &prod, e, rng, &mut parts);
        parts.sort_by(|a, b| a.coeffs.cmp(&b.coeffs));
        out.extend(parts);
        // strip every copy of the found factors
        loop {
            let c = rest.gcd(f, &prod);
            if c.degree().unwrap_or(0) == 0 {
                break;
            }
            rest = rest.divrem(f, &c).0;
        }
    }
    out
}

/// Cantor-Zassenhaus splitting of a squarefree product of degree-`e` irreducibles.
fn equal_degree_split<R: Rng>(f: PrimeField, g: &Poly, e: usize, rng: &mut R, out: &mut Vec<Poly>) {
    let d = g.degree().unwrap_or(0);
    if d == e {
        out.push(g.monic(f));
        return;
    }
    if d == 0 {
        return;
    }
    let p = f.p() as u128;
    let q = p.checked_pow(e as u32).expect("extension degree too large for splitting");
    loop {
        let a = Poly::new((0..d).map(|_| rng.gen_range(0..f.p())).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if f.p() == 2 {
            // absolute trace a + a^2 + ... + a^(2^(e-1))
            let mut t = a.rem(f, g);
            let mut acc = t.clone();
            for _ in 1..e {
                t = t.mulmod(f, &t, g);
                acc = acc.add(f, &t);
            }
            acc
        } else {
            a.powmod(f, (q - 1) / 2, g).sub(f, &Poly::one())
        };
        let c = b.gcd(f, g);
        let dc = c.degree().unwrap_or(0);
        if dc > 0 && dc < d {
            equal_degree_split(f, &c, e, rng, out);
            equal_degree_split(f, &g.divrem(f, &c).0, e, rng, out);
            return;
        }
    }
}

/// Distinct roots of `g` in GF(p), sorted.
pub fn roots<R: Rng>(f: PrimeField, g: &Poly, rng: &mut R) -> Vec<Scalar> {
    if g.is_zero() {
        return Vec::new();
    }
    if f.p() <= 64 {
        return (0..f.p()).filter(|&a| g.eval(f, a) == 0).collect();
    }
    let mut r: Vec<Scalar> = small_irreducible_factors(f, g, 1, rng)
        .into_iter()
        .map(|l| f.neg(l.coeffs[0]))
        .collect();
    r.sort_unstable();
    r
}

/// Minimal polynomial of the vector `v` under `m` (Krylov iteration).
pub fn krylov_minpoly(m: &Matrix, v: &[Scalar]) -> Poly {
    let f = m.field();
    let n = m.rows();
    // reduced Krylov vectors, each tagged with its combination of powers
    let mut basis: Vec<(usize, Vec<Scalar>, Vec<Scalar>)> = Vec::new();
    let mut cur = v.to_vec();
    for k in 0..=n {
        let mut w = cur.clone();
        let mut comb = vec![0; k + 1];
        comb[k] = 1;
        for (pc, row, rc) in &basis {
            let x = w[*pc];
            if x != 0 {
                let nx = f.neg(x);
                f.axpy(&mut w, nx, row);
                f.axpy(&mut comb[..rc.len()], nx, rc);
            }
        }
        match w.iter().position(|&x| x != 0) {
            None => return Poly::new(comb).monic(f),
            Some(pc) => {
                let inv = f.inv(w[pc]);
                f.scale(&mut w, inv);
                f.scale(&mut comb, inv);
                basis.push((pc, w, comb));
            }
        }
        cur = m.mul_vec(&cur);
    }
    unreachable!("Krylov sequence longer than the dimension")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn det(m: &Matrix) -> Scalar {
        // independent determinant by elimination with row swaps
        let f = m.field();
        let n = m.rows();
        let mut a = m.row_vectors();
        let mut d = 1;
        for c in 0..n {
            let Some(r) = (c..n).find(|&r| a[r][c] != 0) else { return 0 };
            if r != c {
                a.swap(r, c);
                d = f.neg(d);
            }
            d = f.mul(d, a[c][c]);
            let inv = f.inv(a[c][c]);
            for r in c + 1..n {
                let u = f.mul(a[r][c], inv);
                let src = a[c].clone();
                f.axpy(&mut a[r], f.neg(u), &src);
            }
        }
        d
    }

    #[test]
    fn charpoly_matches_determinant_and_cayley_hamilton() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for p in [2u32, 3, 5, 7] {
            let f = gf(p);
            for n in 1..7 {
                for _ in 0..10 {
                    let data = (0..n * n).map(|_| rng.gen_range(0..p)).collect();
                    let m = Matrix::from_data(f, n, n, data).unwrap();
                    let cp = charpoly(&m);
                    assert_eq!(cp.degree(), Some(n));
                    assert_eq!(cp.lead(), 1);
                    assert!(cp.eval_matrix(&m).is_zero());
                    for lam in 0..p {
                        let shifted = Matrix::identity(f, n).scaled(lam).sub(&m);
                        assert_eq!(cp.eval(f, lam), det(&shifted));
                    }
                }
            }
        }
    }

    #[test]
    fn factors_of_known_products() {
        let f = gf(2);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        // (x)(x+1)^2 (x^2+x+1)(x^3+x+1)
        let g = Poly::new(vec![0, 1])
            .mul(f, &Poly::new(vec![1, 1]))
            .mul(f, &Poly::new(vec![1, 1]))
            .mul(f, &Poly::new(vec![1, 1, 1]))
            .mul(f, &Poly::new(vec![1, 1, 0, 1]));
        let fs = small_irreducible_factors(f, &g, 6, &mut rng);
        assert_eq!(
            fs,
            vec![
                Poly::new(vec![0, 1]),
                Poly::new(vec![1, 1]),
                Poly::new(vec![1, 1, 1]),
                Poly::new(vec![1, 1, 0, 1]),
            ]
        );
        let f5 = gf(5);
        // (x-1)(x-2)(x-3)(x^2+2)
        let g = Poly::linear(f5, 1)
            .mul(f5, &Poly::linear(f5, 2))
            .mul(f5, &Poly::linear(f5, 3))
            .mul(f5, &Poly::new(vec![2, 0, 1]));
        let fs = small_irreducible_factors(f5, &g, 4, &mut rng);
        assert_eq!(fs.len(), 4);
        assert_eq!(roots(f5, &g, &mut rng), vec![1, 2, 3]);
    }

    #[test]
    fn roots_large_prime() {
        let f = gf(65521);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let g = Poly::linear(f, 17).mul(f, &Poly::linear(f, 40000)).mul(f, &Poly::new(vec![3, 0, 1]));
        let r = roots(f, &g, &mut rng);
        assert!(r.contains(&17) && r.contains(&40000));
        for x in r {
            assert_eq!(g.eval(f, x), 0);
        }
    }

    #[test]
    fn krylov_minpoly_annihilates() {
        let f = gf(3);
        let m = Matrix::from_rows(f, 3, &[vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        let mp = krylov_minpoly(&m, &[1, 0, 0]);
        assert_eq!(mp, Poly::new(vec![0, 0, 0, 1]));
        let mp = krylov_minpoly(&m, &[0, 0, 1]);
        assert_eq!(mp, Poly::new(vec![0, 1]));
    }
}
