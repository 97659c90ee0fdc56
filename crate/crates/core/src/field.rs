//! Dense linear algebra over prime fields GF(p).
//!
//! Every map in the crate (actions, intertwiners, units, counits, sections)
//! is an [`FpMatrix`]. Entries are stored row-major as residues in `[0, p)`
//! and all arithmetic goes through `u64` so that `p < 2^31` never overflows.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Default bound on `p^k` below which searches fall back to full enumeration.
pub const EXHAUSTIVE_THRESHOLD: u64 = 1 << 16;

/// A validated prime modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..(1 << 31)).contains(&p) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Prime(p as u32))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(self.0 as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.0 as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.0 as u64 - b as u64) % self.0 as u64) as u32
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    pub fn pow(self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1u32;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.0), "inverse of zero in GF({})", self.0);
        self.pow(a, self.0 as u64 - 2)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 4 {
        return n >= 2;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Dense row-major matrix over GF(p).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    p: Prime,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpMatrix<GF({})>{}x{} {:?}", self.p, self.rows, self.cols, self.to_rows())
    }
}

/// Result of row reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: FpMatrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl FpMatrix {
    pub fn zeros(p: Prime, rows: usize, cols: usize) -> Self {
        FpMatrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: Prime, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from row-major data, reducing every entry mod p.
    pub fn from_vec(p: Prime, rows: usize, cols: usize, data: Vec<i64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(FpMatrix { p, rows, cols, data: data.into_iter().map(|v| p.reduce(v)).collect() })
    }

    /// Builds a matrix from residues already in `[0, p)`.
    pub(crate) fn from_residues(p: Prime, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        debug_assert!(data.iter().all(|&v| v < p.get()));
        FpMatrix { p, rows, cols, data }
    }

    /// Builds a matrix from a list of rows. A matrix with zero rows needs
    /// `cols` to be known, so an empty list yields `0 x 0`.
    pub fn from_rows(p: Prime, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row {bad} has {} entries, expected {cols}",
                rows[bad].len()
            )));
        }
        Self::from_vec(p, rows.len(), cols, rows.iter().flatten().copied().collect())
    }

    pub fn from_fn(p: Prime, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u32) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c) % p.get());
            }
        }
        FpMatrix { p, rows, cols, data }
    }

    /// Column vector.
    pub fn column_vector(p: Prime, entries: &[u32]) -> Self {
        Self::from_fn(p, entries.len(), 1, |r, _| entries[r])
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.p.get();
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (0..self.cols).all(|c| self.get(r, c) == u32::from(r == c)))
    }

    fn check_prime(&self, other: &FpMatrix) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p.get(), other.p.get()));
        }
        Ok(())
    }

    /// Checked product `self * rhs`.
    pub fn mul(&self, rhs: &FpMatrix) -> Result<FpMatrix> {
        self.check_prime(rhs)?;
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let p = self.p.get() as u64;
        let mut out = vec![0u64; self.rows * rhs.cols];
        for r in 0..self.rows {
            let acc = &mut out[r * rhs.cols..(r + 1) * rhs.cols];
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let row = rhs.row(k);
                for (slot, &b) in acc.iter_mut().zip(row) {
                    *slot = (*slot + a * b as u64) % p;
                }
            }
        }
        Ok(FpMatrix::from_residues(
            self.p,
            self.rows,
            rhs.cols,
            out.into_iter().map(|v| v as u32).collect(),
        ))
    }

    fn zip_with(&self, rhs: &FpMatrix, f: impl Fn(u32, u32) -> u32) -> Result<FpMatrix> {
        self.check_prime(rhs)?;
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!(
                "shape {}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let data = self.data.iter().zip(&rhs.data).map(|(&a, &b)| f(a, b)).collect();
        Ok(FpMatrix::from_residues(self.p, self.rows, self.cols, data))
    }

    pub fn add(&self, rhs: &FpMatrix) -> Result<FpMatrix> {
        let p = self.p;
        self.zip_with(rhs, |a, b| p.add(a, b))
    }

    pub fn sub(&self, rhs: &FpMatrix) -> Result<FpMatrix> {
        let p = self.p;
        self.zip_with(rhs, |a, b| p.sub(a, b))
    }

    pub fn scale(&self, s: u32) -> FpMatrix {
        let p = self.p;
        let s = s % p.get();
        FpMatrix::from_residues(p, self.rows, self.cols, self.data.iter().map(|&v| p.mul(v, s)).collect())
    }

    pub fn transpose(&self) -> FpMatrix {
        FpMatrix::from_fn(self.p, self.cols, self.rows, |r, c| self.get(c, r))
    }

    /// `[self | rhs]`.
    pub fn hstack(&self, rhs: &FpMatrix) -> Result<FpMatrix> {
        self.check_prime(rhs)?;
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "hstack of {} and {} rows",
                self.rows, rhs.rows
            )));
        }
        let cols = self.cols + rhs.cols;
        Ok(FpMatrix::from_fn(self.p, self.rows, cols, |r, c| {
            if c < self.cols {
                self.get(r, c)
            } else {
                rhs.get(r, c - self.cols)
            }
        }))
    }

    /// `[self ; rhs]`.
    pub fn vstack(&self, rhs: &FpMatrix) -> Result<FpMatrix> {
        self.check_prime(rhs)?;
        if self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!(
                "vstack of {} and {} columns",
                self.cols, rhs.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Ok(FpMatrix::from_residues(self.p, self.rows + rhs.rows, self.cols, data))
    }

    /// Block-diagonal matrix `diag(self, rhs)`.
    pub fn block_diag(&self, rhs: &FpMatrix) -> Result<FpMatrix> {
        self.check_prime(rhs)?;
        let mut out = FpMatrix::zeros(self.p, self.rows + rhs.rows, self.cols + rhs.cols);
        out.set_block(0, 0, self);
        out.set_block(self.rows, self.cols, rhs);
        Ok(out)
    }

    /// Kronecker product.
    pub fn kron(&self, rhs: &FpMatrix) -> Result<FpMatrix> {
        self.check_prime(rhs)?;
        let p = self.p;
        Ok(FpMatrix::from_fn(p, self.rows * rhs.rows, self.cols * rhs.cols, |r, c| {
            p.mul(self.get(r / rhs.rows, c / rhs.cols), rhs.get(r % rhs.rows, c % rhs.cols))
        }))
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &FpMatrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols, "block out of range");
        for r in 0..block.rows {
            let dst = (r0 + r) * self.cols + c0;
            self.data[dst..dst + block.cols].copy_from_slice(block.row(r));
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> FpMatrix {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols, "block out of range");
        FpMatrix::from_fn(self.p, rows, cols, |r, c| self.get(r0 + r, c0 + c))
    }

    pub fn select_columns(&self, cols: &[usize]) -> FpMatrix {
        FpMatrix::from_fn(self.p, self.rows, cols.len(), |r, c| self.get(r, cols[c]))
    }

    pub fn select_rows(&self, rows: &[usize]) -> FpMatrix {
        FpMatrix::from_fn(self.p, rows.len(), self.cols, |r, c| self.get(rows[r], c))
    }

    /// Reduced row echelon form. Pivots are chosen as the first nonzero entry
    /// scanning columns left to right, so the output is canonical.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = m.rref_in_place(self.cols);
        Rref { matrix: m, pivots }
    }

    /// Row-reduces in place using only the first `limit` columns as pivot
    /// candidates; returns the pivot columns.
    fn rref_in_place(&mut self, limit: usize) -> Vec<usize> {
        let p = self.p;
        let pu = p.get() as u64;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut row = 0;
        let mut nz: Vec<usize> = Vec::with_capacity(cols);
        for col in 0..limit.min(cols) {
            if row == self.rows {
                break;
            }
            let Some(found) = (row..self.rows).find(|&r| self.data[r * cols + col] != 0) else {
                continue;
            };
            if found != row {
                for c in col..cols {
                    self.data.swap(found * cols + c, row * cols + c);
                }
            }
            let inv = p.inv(self.data[row * cols + col]);
            nz.clear();
            for c in col..cols {
                let v = &mut self.data[row * cols + c];
                if *v != 0 {
                    *v = p.mul(*v, inv);
                    nz.push(c);
                }
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.data[r * cols + col];
                if factor == 0 {
                    continue;
                }
                let f = pu - factor as u64;
                for &c in &nz {
                    let pv = self.data[row * cols + c] as u64;
                    let slot = &mut self.data[r * cols + c];
                    *slot = ((*slot as u64 + f * pv) % pu) as u32;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Solves `self * X = rhs`; `Ok(None)` when the system is inconsistent.
    pub fn solve_right(&self, rhs: &FpMatrix) -> Result<Option<FpMatrix>> {
        self.check_prime(rhs)?;
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "solve_right: A has {} rows, B has {}",
                self.rows, rhs.rows
            )));
        }
        let mut aug = self.hstack(rhs)?;
        let pivots = aug.rref_in_place(self.cols);
        let rank = pivots.len();
        // consistent iff every row below the pivot rows vanishes on the rhs block
        for r in rank..aug.rows {
            if aug.row(r)[self.cols..].iter().any(|&v| v != 0) {
                return Ok(None);
            }
        }
        let mut x = FpMatrix::zeros(self.p, self.cols, rhs.cols);
        for (r, &c) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.data[c * rhs.cols + j] = aug.get(r, self.cols + j);
            }
        }
        Ok(Some(x))
    }

    /// Solves `X * self = rhs`.
    pub fn solve_left(&self, rhs: &FpMatrix) -> Result<Option<FpMatrix>> {
        Ok(self.transpose().solve_right(&rhs.transpose())?.map(|x| x.transpose()))
    }

    pub fn inverse(&self) -> Option<FpMatrix> {
        if !self.is_square() {
            return None;
        }
        let x = self.solve_right(&FpMatrix::identity(self.p, self.rows)).ok()??;
        Some(x)
    }

    /// Columns form a basis of the right kernel, one per free column of the rref.
    pub fn kernel_basis(&self) -> FpMatrix {
        let Rref { matrix: r, pivots } = self.rref();
        let p = self.p;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut k = FpMatrix::zeros(p, self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            k.data[f * free.len() + j] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                k.data[pc * free.len() + j] = p.neg(r.get(row, f));
            }
        }
        k
    }

    /// Columns of `self` at the pivot positions of its rref: a basis of the
    /// column space drawn from the original columns.
    pub fn column_space_basis(&self) -> FpMatrix {
        let pivots = self.rref().pivots;
        self.select_columns(&pivots)
    }
}

impl Mul for &FpMatrix {
    type Output = FpMatrix;

    /// Panics on shape or modulus mismatch; use [`FpMatrix::mul`] for a checked product.
    fn mul(self, rhs: &FpMatrix) -> FpMatrix {
        FpMatrix::mul(self, rhs).expect("matrix product")
    }
}

impl Add for &FpMatrix {
    type Output = FpMatrix;

    fn add(self, rhs: &FpMatrix) -> FpMatrix {
        FpMatrix::add(self, rhs).expect("matrix sum")
    }
}

impl Sub for &FpMatrix {
    type Output = FpMatrix;

    fn sub(self, rhs: &FpMatrix) -> FpMatrix {
        FpMatrix::sub(self, rhs).expect("matrix difference")
    }
}

impl Neg for &FpMatrix {
    type Output = FpMatrix;

    fn neg(self) -> FpMatrix {
        self.scale(self.p.get() - 1)
    }
}

/// Incrementally maintained echelon basis of a subspace of GF(p)^n.
///
/// Each stored row has a leading one at its pivot and zeros at the pivots of
/// all rows inserted before it.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    p: Prime,
    len: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(p: Prime, len: usize) -> Self {
        EchelonBasis { p, len, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.len
    }

    /// Reduces `v` against the stored rows.
    pub fn reduce(&self, v: &mut [u32]) {
        let p = self.p;
        let pu = p.get() as u64;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let a = v[pc];
            if a == 0 {
                continue;
            }
            let f = pu - a as u64;
            for (slot, &b) in v.iter_mut().zip(row).skip(pc) {
                if b != 0 {
                    *slot = ((*slot as u64 + f * b as u64) % pu) as u32;
                }
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Inserts `v`; returns `true` when it was independent of the stored rows.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.len, "vector length");
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(pc) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.p.inv(w[pc]);
        for x in w.iter_mut() {
            *x = self.p.mul(*x, inv);
        }
        self.rows.push(w);
        self.pivots.push(pc);
        true
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Basis vectors as the columns of a `len x dim` matrix.
    pub fn to_columns(&self) -> FpMatrix {
        let d = self.rows.len();
        FpMatrix::from_fn(self.p, self.len, d, |r, c| self.rows[c][r])
    }
}

/// Searches the span of `basis` for an invertible matrix.
///
/// Tries each basis element alone, then `max_trials` seeded random
/// combinations, then (when the span has at most `threshold` elements) every
/// combination. In the exhaustive regime `None` proves no invertible element
/// exists. Returned coefficients index the original `basis`.
pub fn invertible_combination(
    basis: &[FpMatrix],
    seed: u64,
    max_trials: usize,
    threshold: u64,
) -> Result<Option<Vec<u32>>> {
    let Some(first) = basis.first() else {
        return Ok(None);
    };
    let p = first.prime();
    let n = first.rows();
    for m in basis {
        first.check_prime(m)?;
        if !m.is_square() || m.rows() != n {
            return Err(Error::DimensionMismatch(
                "invertible_combination needs square matrices of one shape".into(),
            ));
        }
    }
    if n == 0 {
        let mut coeffs = vec![0; basis.len()];
        coeffs[0] = 1;
        return Ok(Some(coeffs));
    }
    for (i, m) in basis.iter().enumerate() {
        if m.is_invertible() {
            let mut coeffs = vec![0; basis.len()];
            coeffs[i] = 1;
            return Ok(Some(coeffs));
        }
    }

    // restrict to an independent subfamily so every combination is distinct
    let flat = FpMatrix::from_fn(p, n * n, basis.len(), |r, c| basis[c].data[r]);
    let independent = flat.rref().pivots;
    let k = independent.len();
    let combine = |coeffs: &[u32]| -> FpMatrix {
        let mut acc = FpMatrix::zeros(p, n, n);
        for (&idx, &a) in independent.iter().zip(coeffs) {
            if a != 0 {
                for (slot, &b) in acc.data.iter_mut().zip(&basis[idx].data) {
                    *slot = p.add(*slot, p.mul(a, b));
                }
            }
        }
        acc
    };
    let expand = |coeffs: &[u32]| -> Vec<u32> {
        let mut full = vec![0; basis.len()];
        for (&idx, &a) in independent.iter().zip(coeffs) {
            full[idx] = a;
        }
        full
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coeffs = vec![0u32; k];
    for _ in 0..max_trials {
        for c in coeffs.iter_mut() {
            *c = rng.random_range(0..p.get());
        }
        if combine(&coeffs).is_invertible() {
            return Ok(Some(expand(&coeffs)));
        }
    }

    let space = (p.get() as u64).checked_pow(k as u32);
    if space.is_some_and(|s| s <= threshold) {
        let mut coeffs = vec![0u32; k];
        while increment(&mut coeffs, p.get()) {
            if combine(&coeffs).is_invertible() {
                return Ok(Some(expand(&coeffs)));
            }
        }
    }
    Ok(None)
}

/// Little-endian odometer over `GF(p)^k`; returns `false` after wrapping to zero.
pub(crate) fn increment(digits: &mut [u32], p: u32) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < p {
            return true;
        }
        *d = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    fn m(p: u64, rows: &[&[i64]]) -> FpMatrix {
        let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        FpMatrix::from_rows(gf(p), &rows).unwrap()
    }

    #[test]
    fn prime_validation() {
        assert!(Prime::new(2).is_ok());
        assert!(Prime::new(2_147_483_647).is_ok());
        assert!(Prime::new(1).is_err());
        assert!(Prime::new(9).is_err());
        assert!(Prime::new(1 << 31).is_err());
    }

    #[test]
    fn rref_examples() {
        let r = m(2, &[&[1, 1], &[1, 1]]).rref();
        assert_eq!(r.rank(), 1);
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(r.matrix, m(2, &[&[1, 1], &[0, 0]]));

        let empty = FpMatrix::zeros(gf(5), 0, 0).rref();
        assert_eq!(empty.rank(), 0);
        assert!(empty.pivots.is_empty());

        for p in [2, 3, 7] {
            let id = FpMatrix::identity(gf(p), 4);
            let r = id.rref();
            assert_eq!(r.matrix, id);
            assert_eq!(r.rank(), 4);
        }
    }

    #[test]
    fn solve_right_examples() {
        let b = m(3, &[&[2, 1], &[0, 1]]);
        assert_eq!(FpMatrix::identity(gf(3), 2).solve_right(&b).unwrap(), Some(b));

        let a = m(2, &[&[1, 1], &[1, 1]]);
        assert_eq!(a.solve_right(&m(2, &[&[1], &[0]])).unwrap(), None);

        let a = m(2, &[&[1, 1], &[0, 1]]);
        let x = a.solve_right(&FpMatrix::identity(gf(2), 2)).unwrap().unwrap();
        assert_eq!(x, m(2, &[&[1, 1], &[0, 1]]));
    }

    #[test]
    fn solve_right_errors() {
        let a = FpMatrix::identity(gf(3), 2);
        let b = FpMatrix::identity(gf(5), 2);
        assert!(matches!(a.solve_right(&b), Err(Error::ModulusMismatch(3, 5))));
        let c = FpMatrix::zeros(gf(3), 3, 1);
        assert!(matches!(a.solve_right(&c), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(FpMatrix::identity(gf(7), 3).kernel_basis().cols(), 0);

        let k = FpMatrix::zeros(gf(5), 2, 2).kernel_basis();
        assert_eq!(k.cols(), 2);
        assert_eq!(k.rank(), 2);

        let k = m(2, &[&[1, 1]]).kernel_basis();
        assert_eq!(k, m(2, &[&[1], &[1]]));
    }

    #[test]
    fn invertible_combination_examples() {
        let p = gf(2);
        let id = FpMatrix::identity(p, 2);
        assert_eq!(invertible_combination(&[id], 0, 16, EXHAUSTIVE_THRESHOLD).unwrap(), Some(vec![1]));

        let nil = m(3, &[&[0, 1], &[0, 0]]);
        assert_eq!(invertible_combination(&[nil], 0, 16, EXHAUSTIVE_THRESHOLD).unwrap(), None);

        let e11 = m(2, &[&[1, 0], &[0, 0]]);
        let e22 = m(2, &[&[0, 0], &[0, 1]]);
        assert_eq!(
            invertible_combination(&[e11.clone(), e22.clone()], 0, 0, EXHAUSTIVE_THRESHOLD).unwrap(),
            Some(vec![1, 1])
        );
        assert_eq!(invertible_combination(&[e11, e22], 9, 8, EXHAUSTIVE_THRESHOLD).unwrap(), Some(vec![1, 1]));

        let n = FpMatrix::zeros(p, 3, 3);
        assert_eq!(invertible_combination(&[], 0, 8, 16).unwrap(), None);
        assert_eq!(invertible_combination(&[n], 0, 8, 16).unwrap(), None);
    }

    #[test]
    fn inverse_and_products() {
        let a = m(5, &[&[2, 1], &[1, 4]]);
        let inv = a.inverse().unwrap();
        assert!((&a * &inv).is_identity());
        assert!((&inv * &a).is_identity());
        assert!(m(5, &[&[1, 2], &[2, 4]]).inverse().is_none());
        let k = m(3, &[&[1, 2]]).kron(&FpMatrix::identity(gf(3), 2)).unwrap();
        assert_eq!(k, m(3, &[&[1, 0, 2, 0], &[0, 1, 0, 2]]));
    }

    #[test]
    fn echelon_basis_tracks_span() {
        let p = gf(3);
        let mut e = EchelonBasis::new(p, 3);
        assert!(e.insert(&[1, 2, 0]));
        assert!(e.insert(&[0, 1, 1]));
        // (1,0,1) = (1,2,0) + (0,1,1)
        assert!(!e.insert(&[1, 0, 1]));
        assert!(e.contains(&[1, 0, 1]));
        assert_eq!(e.dim(), 2);
    }

    fn arb_matrix(p: u32, max: usize) -> impl Strategy<Value = FpMatrix> {
        (0..=max, 0..=max).prop_flat_map(move |(r, c)| {
            proptest::collection::vec(0..p as i64, r * c).prop_map(move |data| {
                FpMatrix::from_vec(Prime::new(p as u64).unwrap(), r, c, data).unwrap()
            })
        })
    }

    /// All vectors of GF(2)^n.
    fn all_vectors(n: usize) -> Vec<Vec<u32>> {
        (0..1u32 << n).map(|bits| (0..n).map(|i| (bits >> i) & 1).collect()).collect()
    }

    proptest! {
        #[test]
        fn rref_idempotent(a in arb_matrix(5, 6)) {
            let r = a.rref();
            prop_assert_eq!(r.matrix.rref().matrix, r.matrix.clone());
            prop_assert!(r.matrix.data().iter().all(|&v| v < 5));
        }

        #[test]
        fn rank_nullity(a in arb_matrix(3, 7)) {
            let k = a.kernel_basis();
            prop_assert_eq!(a.rank() + k.cols(), a.cols());
            prop_assert!((&a * &k).is_zero());
            prop_assert_eq!(k.rank(), k.cols());
        }

        #[test]
        fn solve_right_sound_and_complete_gf2(a in arb_matrix(2, 3), bcol in proptest::collection::vec(0..2i64, 3)) {
            let p = a.prime();
            let b = FpMatrix::from_vec(p, a.rows(), 1, bcol[..a.rows()].to_vec()).unwrap();
            let brute = all_vectors(a.cols()).into_iter().find(|x| {
                let x = FpMatrix::column_vector(p, x);
                &a * &x == b
            });
            match a.solve_right(&b).unwrap() {
                Some(x) => prop_assert_eq!(&a * &x, b),
                None => prop_assert!(brute.is_none()),
            }
        }
    }
}
