//! Square matrices over GF(2) and their LUP decomposition.

use std::fmt;

use thiserror::Error;

use crate::gf2poly::{poly_mod, ModulusSpec, Polynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("singular map: multiplication by the zero polynomial")]
    ZeroConstant,
    #[error("constant has degree {degree}, field degree is {n}")]
    ConstantTooLarge { degree: usize, n: usize },
    #[error("matrix is singular (no pivot in column {0})")]
    Singular(usize),
    #[error("dimension mismatch: matrix is {expected}x{expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// Dense n×n matrix over GF(2), rows packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    n: usize,
    stride: usize,
    words: Vec<u64>,
}

impl Gf2Matrix {
    pub fn zero(n: usize) -> Self {
        let stride = n.div_ceil(64).max(1);
        Gf2Matrix { n, stride, words: vec![0; n * stride] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Builds from row strings such as `"1010"`; character `j` is column `j`.
    ///
    /// # Panics
    /// Panics on ragged input or characters other than `0`/`1`.
    pub fn from_rows(rows: &[&str]) -> Self {
        let n = rows.len();
        Self::from_fn(n, |i, j| {
            let row = rows[i].as_bytes();
            assert_eq!(row.len(), n, "row {i} has wrong length");
            match row[j] {
                b'0' => false,
                b'1' => true,
                c => panic!("bad matrix character {:?}", c as char),
            }
        })
    }

    /// Permutation matrix with a one at `(i, perm[i])` in every row.
    pub fn from_permutation(perm: &[usize]) -> Self {
        let mut m = Self::zero(perm.len());
        for (i, &p) in perm.iter().enumerate() {
            m.set(i, p, true);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.words[i * self.stride + j / 64] >> (j % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        let w = &mut self.words[i * self.stride + j / 64];
        if v {
            *w |= 1 << (j % 64);
        } else {
            *w &= !(1 << (j % 64));
        }
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.words[i * self.stride..(i + 1) * self.stride]
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let s = self.stride;
        for w in 0..s {
            let v = self.words[src * s + w];
            self.words[dst * s + w] ^= v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let s = self.stride;
        for w in 0..s {
            self.words.swap(a * s + w, b * s + w);
        }
    }

    pub fn mul(&self, rhs: &Gf2Matrix) -> Gf2Matrix {
        assert_eq!(self.n, rhs.n);
        let mut out = Gf2Matrix::zero(self.n);
        for i in 0..self.n {
            for k in 0..self.n {
                if self.get(i, k) {
                    let s = self.stride;
                    for w in 0..s {
                        out.words[i * s + w] ^= rhs.words[k * s + w];
                    }
                }
            }
        }
        out
    }

    /// Ones strictly off the diagonal.
    pub fn nnz_offdiag(&self) -> usize {
        let total: usize = self.words.iter().map(|w| w.count_ones() as usize).sum();
        total - (0..self.n).filter(|&i| self.get(i, i)).count()
    }

    pub fn is_lower_unitriangular(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i) && (i + 1..self.n).all(|j| !self.get(i, j)))
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i) && (0..i).all(|j| !self.get(i, j)))
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix({}x{})", self.n, self.n)?;
        for i in 0..self.n {
            let row: String = (0..self.n).map(|j| if self.get(i, j) { '1' } else { '0' }).collect();
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}

/// `Γ = P⁻¹ · L · U` with `L`, `U` unit-triangular.
///
/// `p_inv[i]` is the row of `L·U` that lands in row `i` of `Γ`, so the
/// permutation matrix `P⁻¹` has its ones at `(i, p_inv[i])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LupDecomposition {
    pub l: Gf2Matrix,
    pub u: Gf2Matrix,
    pub p_inv: Vec<usize>,
}

impl LupDecomposition {
    pub fn p_inv_matrix(&self) -> Gf2Matrix {
        Gf2Matrix::from_permutation(&self.p_inv)
    }

    pub fn recompose(&self) -> Gf2Matrix {
        self.p_inv_matrix().mul(&self.l.mul(&self.u))
    }

    /// CNOTs needed to apply `L` and `U` in place.
    pub fn cnot_count(&self) -> usize {
        self.l.nnz_offdiag() + self.u.nnz_offdiag()
    }
}

/// Matrix of `g ↦ f·g mod m`: column `j` holds `x^j · f mod m`.
pub fn constmult_matrix(f: &Polynomial, m: &ModulusSpec) -> Result<Gf2Matrix, LinalgError> {
    let n = m.n();
    let degree = f.degree().finite().ok_or(LinalgError::ZeroConstant)?;
    if degree >= n {
        return Err(LinalgError::ConstantTooLarge { degree, n });
    }
    let mut gamma = Gf2Matrix::zero(n);
    let mut column = f.clone();
    for j in 0..n {
        for i in column.exponents() {
            gamma.set(i, j, true);
        }
        column = poly_mod(&column.shl(1), m);
    }
    Ok(gamma)
}

/// Gaussian elimination column by column; the pivot for column `j` is the
/// lowest-indexed row `i >= j` holding a one.
pub fn lup_decompose(g: &Gf2Matrix) -> Result<LupDecomposition, LinalgError> {
    let n = g.dim();
    let mut u = g.clone();
    let mut l = Gf2Matrix::identity(n);
    // perm[i] = row of g now sitting at row i of u.
    let mut perm: Vec<usize> = (0..n).collect();

    for j in 0..n {
        let pivot = (j..n).find(|&i| u.get(i, j)).ok_or(LinalgError::Singular(j))?;
        if pivot != j {
            u.swap_rows(pivot, j);
            perm.swap(pivot, j);
            for c in 0..j {
                let (a, b) = (l.get(pivot, c), l.get(j, c));
                l.set(pivot, c, b);
                l.set(j, c, a);
            }
        }
        for i in j + 1..n {
            if u.get(i, j) {
                u.xor_row_into(j, i);
                l.set(i, j, true);
            }
        }
    }

    let mut p_inv = vec![0; n];
    for (i, &p) in perm.iter().enumerate() {
        p_inv[p] = i;
    }
    Ok(LupDecomposition { l, u, p_inv })
}

/// Matrix–vector product; the vector is a polynomial's coefficient list.
pub fn matvec(g: &Gf2Matrix, v: &Polynomial) -> Result<Polynomial, LinalgError> {
    if let Some(d) = v.degree().finite() {
        if d >= g.dim() {
            return Err(LinalgError::DimensionMismatch { expected: g.dim(), got: d + 1 });
        }
    }
    let mut packed = vec![0u64; g.stride];
    packed[..v.limbs().len()].copy_from_slice(v.limbs());
    let mut bits = vec![false; g.dim()];
    for (i, bit) in bits.iter_mut().enumerate() {
        let parity: u32 = g.row(i).iter().zip(&packed).map(|(a, b)| (a & b).count_ones()).sum();
        *bit = parity & 1 == 1;
    }
    Ok(Polynomial::from_bits(&bits))
}
