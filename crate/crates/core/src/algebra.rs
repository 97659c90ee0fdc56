//! Finite-dimensional associative unital algebras given by structure constants.

use crate::error::{Error, Result};
use crate::field::{invertible_combination, FpMatrix, Prime, EXHAUSTIVE_THRESHOLD};
use crate::group::GroupData;

/// Algebra with basis `e_0, .., e_{d-1}` and `e_i e_j = sum_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraData {
    p: Prime,
    dim: usize,
    structure: Vec<u32>,
    unit: Vec<u32>,
}

impl AlgebraData {
    /// Validates associativity and the unit axioms exhaustively.
    pub fn new(p: Prime, structure: &[Vec<Vec<i64>>], unit: &[i64]) -> Result<Self> {
        let dim = structure.len();
        if unit.len() != dim {
            return Err(Error::InvalidAlgebra(format!("unit has {} coefficients, dimension is {dim}", unit.len())));
        }
        let mut flat = Vec::with_capacity(dim * dim * dim);
        for (i, row) in structure.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::InvalidAlgebra(format!("structure[{i}] has {} entries", row.len())));
            }
            for (j, coeffs) in row.iter().enumerate() {
                if coeffs.len() != dim {
                    return Err(Error::InvalidAlgebra(format!(
                        "structure[{i}][{j}] has {} coefficients",
                        coeffs.len()
                    )));
                }
                flat.extend(coeffs.iter().map(|&v| p.reduce(v)));
            }
        }
        let alg = AlgebraData { p, dim, structure: flat, unit: unit.iter().map(|&v| p.reduce(v)).collect() };
        alg.validate()?;
        Ok(alg)
    }

    fn validate(&self) -> Result<()> {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                let ij = self.product_of_basis(i, j);
                for k in 0..d {
                    let left = self.mul_vec(&ij, &basis_vector(d, k));
                    let jk = self.product_of_basis(j, k);
                    let right = self.mul_vec(&basis_vector(d, i), &jk);
                    if left != right {
                        return Err(Error::InvalidAlgebra(format!("associativity fails at ({i},{j},{k})")));
                    }
                }
            }
        }
        for j in 0..d {
            let e = basis_vector(d, j);
            if self.mul_vec(&self.unit, &e) != e || self.mul_vec(&e, &self.unit) != e {
                return Err(Error::InvalidAlgebra(format!("unit axiom fails at e_{j}")));
            }
        }
        Ok(())
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[u32] {
        &self.unit
    }

    #[inline]
    pub fn coeff(&self, i: usize, j: usize, k: usize) -> u32 {
        self.structure[(i * self.dim + j) * self.dim + k]
    }

    fn product_of_basis(&self, i: usize, j: usize) -> Vec<u32> {
        (0..self.dim).map(|k| self.coeff(i, j, k)).collect()
    }

    /// Product of two elements in coordinates.
    pub fn mul_vec(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let p = self.p;
        let mut out = vec![0u32; self.dim];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let ab = p.mul(a, b);
                for (k, slot) in out.iter_mut().enumerate() {
                    *slot = p.add(*slot, p.mul(ab, self.coeff(i, j, k)));
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `e_a`: column `j` holds `e_a e_j`.
    pub fn left_mult(&self, a: usize) -> FpMatrix {
        FpMatrix::from_fn(self.p, self.dim, self.dim, |k, j| self.coeff(a, j, k))
    }

    /// Gram matrix `G[i][j] = lambda(e_i e_j)` of a linear functional.
    pub fn gram(&self, functional: &[u32]) -> FpMatrix {
        let p = self.p;
        FpMatrix::from_fn(p, self.dim, self.dim, |i, j| {
            (0..self.dim).fold(0, |acc, k| p.add(acc, p.mul(functional[k], self.coeff(i, j, k))))
        })
    }

    /// Group algebra `GF(p)G` on the element basis.
    pub fn group_algebra(group: &GroupData, p: Prime) -> Self {
        let n = group.order();
        let mut structure = vec![0u32; n * n * n];
        for i in 0..n {
            for j in 0..n {
                structure[(i * n + j) * n + group.mul(i, j)] = 1;
            }
        }
        let mut unit = vec![0; n];
        if n > 0 {
            unit[0] = 1;
        }
        AlgebraData { p, dim: n, structure, unit }
    }

    /// Truncated polynomial ring `GF(p)[x]/(x^n)` on the basis `1, x, .., x^{n-1}`.
    pub fn truncated_polynomial(n: usize, p: Prime) -> Self {
        let mut structure = vec![0u32; n * n * n];
        for i in 0..n {
            for j in 0..n {
                if i + j < n {
                    structure[(i * n + j) * n + i + j] = 1;
                }
            }
        }
        let mut unit = vec![0; n];
        if n > 0 {
            unit[0] = 1;
        }
        AlgebraData { p, dim: n, structure, unit }
    }

    /// Upper triangular 2x2 matrices on the basis `E11, E12, E22`.
    pub fn upper_triangular_2(p: Prime) -> Self {
        // E11 E11 = E11, E11 E12 = E12, E12 E22 = E12, E22 E22 = E22
        let mut structure = vec![0u32; 27];
        let mut set = |i: usize, j: usize, k: usize| structure[(i * 3 + j) * 3 + k] = 1;
        set(0, 0, 0);
        set(0, 1, 1);
        set(1, 2, 1);
        set(2, 2, 2);
        AlgebraData { p, dim: 3, structure, unit: vec![1, 0, 1] }
    }
}

fn basis_vector(d: usize, k: usize) -> Vec<u32> {
    let mut v = vec![0; d];
    v[k] = 1;
    v
}

/// Searches for a functional `lambda` with `(x, y) -> lambda(xy)` nondegenerate.
///
/// Coordinate functionals are tried first, then seeded random ones; when
/// `p^d` is at most the exhaustive threshold, `None` certifies that the
/// algebra is not Frobenius.
pub fn is_frobenius_algebra(alg: &AlgebraData, seed: u64) -> Result<Option<Vec<u32>>> {
    if alg.dim == 0 {
        return Ok(Some(Vec::new()));
    }
    let grams: Vec<FpMatrix> = (0..alg.dim)
        .map(|k| FpMatrix::from_fn(alg.p, alg.dim, alg.dim, |i, j| alg.coeff(i, j, k)))
        .collect();
    invertible_combination(&grams, seed, 256, EXHAUSTIVE_THRESHOLD)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn rejects_invalid_structure() {
        // GF(2)[x]/(x^2 + x + 1)
        let structure = vec![
            vec![vec![1, 0], vec![0, 1]],
            vec![vec![0, 1], vec![1, 1]],
        ];
        assert!(AlgebraData::new(gf(2), &structure, &[1, 0]).is_ok());
        let bad = vec![
            vec![vec![1, 0], vec![0, 1]],
            vec![vec![0, 1], vec![0, 0]],
        ];
        assert!(AlgebraData::new(gf(2), &bad, &[0, 1]).is_err());
        // (e1 e1) e1 = e2 e1 = e1 but e1 (e1 e1) = e1 e2 = 0
        let lopsided = vec![
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
            vec![vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]],
            vec![vec![0, 0, 1], vec![0, 1, 0], vec![0, 0, 0]],
        ];
        assert!(matches!(
            AlgebraData::new(gf(3), &lopsided, &[1, 0, 0]),
            Err(Error::InvalidAlgebra(_))
        ));
    }

    #[test]
    fn frobenius_examples() {
        let c2 = GroupData::from_cycles(&[vec![vec![1, 2]]]).unwrap();
        let kc2 = AlgebraData::group_algebra(&c2, gf(2));
        let lambda = is_frobenius_algebra(&kc2, 0).unwrap().unwrap();
        assert_eq!(lambda, vec![1, 0]);
        assert!(kc2.gram(&lambda).is_invertible());

        let dual = AlgebraData::truncated_polynomial(2, gf(3));
        let lambda = is_frobenius_algebra(&dual, 0).unwrap().unwrap();
        assert_eq!(lambda, vec![0, 1]);
        assert!(dual.gram(&lambda).is_invertible());

        let upper = AlgebraData::upper_triangular_2(gf(2));
        assert_eq!(is_frobenius_algebra(&upper, 0).unwrap(), None);
        // oracle: every nonzero functional on GF(2)^3 has a singular Gram matrix
        for bits in 1..8u32 {
            let f: Vec<u32> = (0..3).map(|i| (bits >> i) & 1).collect();
            assert!(!upper.gram(&f).is_invertible());
        }
    }

    #[test]
    fn builtin_algebras_validate() {
        let s3 = GroupData::from_cycles(&[vec![vec![1, 2]], vec![vec![1, 2, 3]]]).unwrap();
        let a = AlgebraData::group_algebra(&s3, gf(3));
        a.validate().unwrap();
        AlgebraData::truncated_polynomial(4, gf(5)).validate().unwrap();
        AlgebraData::upper_triangular_2(gf(3)).validate().unwrap();
    }
}
