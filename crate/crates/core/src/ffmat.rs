//! Exact arithmetic over GF(p) and dense linear algebra.
//!
//! Scalars are plain `u32` values kept canonical in `[0, p)`. Every matrix
//! carries its field so that operations can be checked for compatibility.
//! Subspaces are stored in reduced row-echelon form, which makes equality of
//! subspaces a structural comparison.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A canonical residue modulo the field characteristic.
pub type Scalar = u32;

/// Largest prime below 2^16; products of two residues then fit in a `u32`.
pub const MAX_PRIME: u32 = 65521;

// Inverses for p <= 7, indexed [p][a].
const SMALL_INV: [[u32; 7]; 8] = [
    [0; 7],
    [0; 7],
    [0, 1, 0, 0, 0, 0, 0],
    [0, 1, 2, 0, 0, 0, 0],
    [0; 7],
    [0, 1, 3, 2, 4, 0, 0],
    [0; 7],
    [0, 1, 4, 5, 2, 3, 6],
];

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The prime field GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct PrimeField {
    p: u32,
}

impl TryFrom<u32> for PrimeField {
    type Error = Error;
    fn try_from(p: u32) -> Result<Self> {
        PrimeField::new(p)
    }
}

impl From<PrimeField> for u32 {
    fn from(f: PrimeField) -> u32 {
        f.p
    }
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if p > MAX_PRIME || !is_prime(p as u64) {
            return Err(Error::InvalidPrime(p as u64));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(self, a: Scalar, b: Scalar) -> Scalar {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: Scalar, b: Scalar) -> Scalar {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: Scalar) -> Scalar {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: Scalar, b: Scalar) -> Scalar {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(self, a: Scalar) -> Scalar {
        assert!(a != 0, "inverse of zero in GF({})", self.p);
        if self.p <= 7 {
            return SMALL_INV[self.p as usize][a as usize];
        }
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        t0.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn div(self, a: Scalar, b: Scalar) -> Scalar {
        self.mul(a, self.inv(b))
    }

    pub fn pow(self, a: Scalar, mut e: u128) -> Scalar {
        let mut base = a;
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn from_i64(self, a: i64) -> Scalar {
        a.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn reduce(self, a: u64) -> Scalar {
        (a % self.p as u64) as u32
    }

    pub fn is_canonical(self, a: u64) -> bool {
        a < self.p as u64
    }

    /// `dst += f * src`, elementwise.
    #[inline]
    pub fn axpy(self, dst: &mut [Scalar], f: Scalar, src: &[Scalar]) {
        if f == 0 {
            return;
        }
        let p = self.p as u64;
        let f = f as u64;
        for (d, &s) in dst.iter_mut().zip(src) {
            if s != 0 {
                *d = ((*d as u64 + f * s as u64) % p) as u32;
            }
        }
    }

    pub fn scale(self, v: &mut [Scalar], f: Scalar) {
        for x in v.iter_mut() {
            *x = self.mul(*x, f);
        }
    }

    pub fn dot(self, a: &[Scalar], b: &[Scalar]) -> Scalar {
        let p = self.p as u64;
        let mut acc = 0u64;
        for (&x, &y) in a.iter().zip(b) {
            acc += x as u64 * y as u64;
            // two products below 2^32 each; flush well before u64 overflow
            if acc >= 1 << 62 {
                acc %= p;
            }
        }
        (acc % p) as u32
    }

    pub fn add_vec(self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(&x, &y)| self.add(x, y)).collect()
    }

    pub fn sub_vec(self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(&x, &y)| self.sub(x, y)).collect()
    }
}

/// Dense row-major matrix over GF(p).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from row-major data, reducing every entry mod p.
    pub fn from_data(field: PrimeField, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, found: data.len() });
        }
        let data = data.into_iter().map(|x| field.reduce(x as u64)).collect();
        Ok(Matrix { field, rows, cols, data })
    }

    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<Scalar>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
            }
            data.extend(r.iter().map(|&x| field.reduce(x as u64)));
        }
        Ok(Matrix { field, rows: rows.len(), cols, data })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: PrimeField, rows: usize, cols: &[Vec<Scalar>]) -> Result<Self> {
        let mut m = Self::zero(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch { expected: rows, found: c.len() });
            }
            for (i, &x) in c.iter().enumerate() {
                m.data[i * cols.len() + j] = field.reduce(x as u64);
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn data(&self) -> &[Scalar] {
        &self.data
    }
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.data[i * self.cols + j]
    }
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        debug_assert!(v < self.field.p());
        self.data[i * self.cols + j] = v;
    }
    #[inline]
    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [Scalar] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn into_data(self) -> Vec<Scalar> {
        self.data
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Self::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        assert_eq!(self.field, other.field);
        let f = self.field;
        let mut out = Matrix::zero(f, self.rows, other.cols);
        let p = f.p() as u64;
        let mut acc = vec![0u64; other.cols];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            let mut pending = 0u32;
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let orow = other.row(k);
                for (s, &b) in acc.iter_mut().zip(orow) {
                    *s += a * b as u64;
                }
                pending += 1;
                // each term < 2^32, so 2^30 terms can never overflow; reduce early anyway
                if pending == 1 << 20 {
                    acc.iter_mut().for_each(|s| *s %= p);
                    pending = 0;
                }
            }
            for (o, s) in out.row_mut(i).iter_mut().zip(&acc) {
                *o = (s % p) as u32;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows).map(|i| self.field.dot(self.row(i), v)).collect()
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.rows, v.len());
        let mut out = vec![0; self.cols];
        for (i, &x) in v.iter().enumerate() {
            self.field.axpy(&mut out, x, self.row(i));
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.field.add_vec(&self.data, &other.data);
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.field.sub_vec(&self.data, &other.data);
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn scaled(&self, c: Scalar) -> Matrix {
        let mut m = self.clone();
        self.field.scale(&mut m.data, c);
        m
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: Scalar, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.field.axpy(&mut self.data, c, &other.data);
    }

    /// Reduced row-echelon form and rank. Zero rows are dropped.
    pub fn rref(&self) -> (Matrix, usize) {
        let (m, pivots) = rref_with_pivots(self);
        let r = pivots.len();
        (m, r)
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.field, self.cols);
        for i in 0..self.rows {
            e.insert(self.row(i).to_vec());
        }
        e.rank()
    }

    /// Right kernel `{v : self * v = 0}`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = rref_with_pivots(self);
        let n = self.cols;
        let f = self.field;
        let mut is_pivot = vec![false; n];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0; n];
            v[free] = 1;
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(ri, free));
            }
            basis.push(v);
        }
        let k = Subspace::from_vectors(f, n, basis);
        debug_assert_eq!(k.dim() + pivots.len(), n);
        k
    }

    /// Some `x` with `self * x = b`, or `None` when `b` is outside the column space.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: b.len() });
        }
        let f = self.field;
        let n = self.cols;
        let mut aug = Matrix::zero(f, self.rows, n + 1);
        for i in 0..self.rows {
            aug.row_mut(i)[..n].copy_from_slice(self.row(i));
            aug.set(i, n, b[i]);
        }
        let (r, pivots) = rref_with_pivots(&aug);
        if pivots.last() == Some(&n) {
            return Ok(None);
        }
        let mut x = vec![0; n];
        for (ri, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(ri, n);
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let f = self.field;
        let mut aug = Matrix::zero(f, n, 2 * n);
        for i in 0..n {
            aug.row_mut(i)[..n].copy_from_slice(self.row(i));
            aug.set(i, n + i, 1);
        }
        let (r, pivots) = rref_with_pivots(&aug);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zero(f, n, n);
        for i in 0..n {
            inv.row_mut(i).copy_from_slice(&r.row(i)[n..]);
        }
        Some(inv)
    }

    /// Row space as a canonical subspace.
    pub fn row_space(&self) -> Subspace {
        Subspace::from_vectors(self.field, self.cols, self.row_vectors())
    }
}

/// Gauss-Jordan elimination returning the nonzero rows of the RREF and pivot columns.
pub fn rref_with_pivots(m: &Matrix) -> (Matrix, Vec<usize>) {
    let f = m.field;
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| a.data[i * cols + c] != 0) else {
            continue;
        };
        if pr != r {
            for j in 0..cols {
                a.data.swap(pr * cols + j, r * cols + j);
            }
        }
        let inv = f.inv(a.data[r * cols + c]);
        f.scale(a.row_mut(r), inv);
        let pivot_row = a.row(r).to_vec();
        for i in 0..rows {
            if i != r {
                let x = a.data[i * cols + c];
                if x != 0 {
                    f.axpy(a.row_mut(i), f.neg(x), &pivot_row);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.data.truncate(r * cols);
    a.rows = r;
    (a, pivots)
}

/// Incrementally built semi-echelon basis: each stored row has a leading 1 at
/// its pivot column and zeros before it.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: PrimeField,
    width: usize,
    // pivot column -> index into rows
    by_pivot: Vec<Option<usize>>,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: PrimeField, width: usize) -> Self {
        Echelon { field, width, by_pivot: vec![None; width], rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Reduces `v` against the stored rows in place; returns the first nonzero column, if any.
    pub fn reduce(&self, v: &mut [Scalar]) -> Option<usize> {
        let f = self.field;
        for c in 0..self.width {
            let x = v[c];
            if x == 0 {
                continue;
            }
            match self.by_pivot[c] {
                Some(ri) => f.axpy(v, f.neg(x), &self.rows[ri]),
                None => return Some(c),
            }
        }
        None
    }

    /// Inserts `v`; returns `true` iff it was independent of the stored rows.
    pub fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        debug_assert_eq!(v.len(), self.width);
        match self.reduce(&mut v) {
            None => false,
            Some(c) => {
                let inv = self.field.inv(v[c]);
                self.field.scale(&mut v, inv);
                self.by_pivot[c] = Some(self.rows.len());
                self.rows.push(v);
                self.pivots.push(c);
                true
            }
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w).is_none()
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace::from_vectors(self.field, self.width, self.rows)
    }
}

/// A linear subspace of GF(p)^n stored as the nonzero rows of its RREF.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zero(field, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(field, ambient), pivots: (0..ambient).collect() }
    }

    pub fn from_vectors(field: PrimeField, ambient: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        let mut e = Echelon::new(field, ambient);
        for v in vectors {
            e.insert(v);
        }
        let rows = e.rows;
        if rows.is_empty() {
            return Self::zero(field, ambient);
        }
        let m = Matrix::from_rows(field, ambient, &rows).expect("echelon rows have the ambient width");
        let (basis, pivots) = rref_with_pivots(&m);
        Subspace { ambient, basis, pivots }
    }

    pub fn field(&self) -> PrimeField {
        self.basis.field()
    }
    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }
    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }
    pub fn is_full(&self) -> bool {
        self.pivots.len() == self.ambient
    }
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn vector(&self, i: usize) -> &[Scalar] {
        self.basis.row(i)
    }
    pub fn vectors(&self) -> impl Iterator<Item = &[Scalar]> + '_ {
        (0..self.dim()).map(move |i| self.basis.row(i))
    }

    /// Non-pivot columns, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// Residue of `v` after eliminating every pivot column: zero at pivots.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let f = self.field();
        let mut w = v.to_vec();
        for (i, &c) in self.pivots.iter().enumerate() {
            let x = w[c];
            if x != 0 {
                f.axpy(&mut w, f.neg(x), self.basis.row(i));
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient);
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` in the RREF basis, or `None` if `v` is not in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&c| v[c]).collect())
    }

    /// Coordinates read off the pivot columns, trusting that `v` lies in the span.
    pub fn coordinates_unchecked(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.pivots.iter().map(|&c| v[c]).collect()
    }

    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim());
        let mut v = vec![0; self.ambient];
        for (i, &c) in coords.iter().enumerate() {
            self.field().axpy(&mut v, c, self.basis.row(i));
        }
        v
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let vs = self.basis.row_vectors().into_iter().chain(other.basis.row_vectors()).collect();
        Ok(Subspace::from_vectors(self.field(), self.ambient, vs))
    }

    /// Intersection by Zassenhaus' algorithm.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let n = self.ambient;
        let f = self.field();
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for v in self.vectors() {
            let mut r = v.to_vec();
            r.extend_from_slice(v);
            rows.push(r);
        }
        for v in other.vectors() {
            let mut r = v.to_vec();
            r.extend(std::iter::repeat(0).take(n));
            rows.push(r);
        }
        let big = Subspace::from_vectors(f, 2 * n, rows);
        let inter: Vec<Vec<Scalar>> = big
            .vectors()
            .filter(|r| r[..n].iter().all(|&x| x == 0))
            .map(|r| r[n..].to_vec())
            .collect();
        Ok(Subspace::from_vectors(f, n, inter))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.vectors().all(|v| other.contains(v))
    }

    /// Vectors of `self` completing a basis of `sub` to a basis of `self`:
    /// the RREF of `self` reduced modulo `sub`.
    pub fn quotient_reps(&self, sub: &Subspace) -> Result<Subspace> {
        self.check_ambient(sub)?;
        if !sub.is_subspace_of(self) {
            return Err(Error::NotContained);
        }
        let residues = self.vectors().map(|v| sub.reduce(v)).collect();
        Ok(Subspace::from_vectors(self.field(), self.ambient, residues))
    }

    /// Annihilator `{w : <w, v> = 0 for all v in self}` under the standard pairing.
    pub fn annihilator(&self) -> Subspace {
        if self.is_zero() {
            return Subspace::full(self.field(), self.ambient);
        }
        self.basis.kernel()
    }

    /// Image of the subspace under a linear map given as a matrix acting on columns.
    pub fn image(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient);
        let vs = self.vectors().map(|v| m.mul_vec(v)).collect();
        Subspace::from_vectors(self.field(), m.rows(), vs)
    }
}

/// Reduced vectors of a quotient `top / bottom`, with coordinate helpers.
///
/// The representatives have zeros at every pivot column of `bottom`, so the
/// class of a vector `v` in `top` has coordinates equal to the entries of
/// `bottom.reduce(v)` at the representatives' pivots.
#[derive(Clone, Debug)]
pub struct QuotientBasis {
    pub bottom: Subspace,
    pub reps: Subspace,
}

impl QuotientBasis {
    pub fn new(top: &Subspace, bottom: &Subspace) -> Result<Self> {
        let reps = top.quotient_reps(bottom)?;
        Ok(QuotientBasis { bottom: bottom.clone(), reps })
    }

    pub fn dim(&self) -> usize {
        self.reps.dim()
    }

    /// Coordinates of the class of `v`; `None` if `v` is outside `bottom + reps`.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let w = self.bottom.reduce(v);
        self.reps.coordinates(&w)
    }

    /// Coordinates read from the pivots of `bottom` and `reps` only.
    ///
    /// Valid for vectors known to lie in `bottom + reps`; costs
    /// `O(dim bottom * dim reps)` instead of a full reduction.
    pub fn coordinates_unchecked(&self, v: &[Scalar]) -> Vec<Scalar> {
        let f = self.bottom.field();
        self.reps
            .pivots()
            .iter()
            .map(|&c| {
                let mut x = v[c];
                for (i, &bc) in self.bottom.pivots().iter().enumerate() {
                    let y = v[bc];
                    if y != 0 {
                        x = f.sub(x, f.mul(y, self.bottom.vector(i)[c]));
                    }
                }
                x
            })
            .collect()
    }

    pub fn lift(&self, coords: &[Scalar]) -> Vec<Scalar> {
        self.reps.combine(coords)
    }
}
