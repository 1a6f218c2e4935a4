//! Dense arbitrary-precision integer matrices.
//!
//! [`IntMatrix`] is the exchange format for every linear-algebra routine in
//! this crate: boundary operators, unimodular transforms, group actions.
//! Entries are [`BigInt`], so no public operation can overflow; the
//! multiplication kernel silently uses a machine-word fast path when both
//! operands fit in `i64` and falls back to big integers otherwise.

use std::fmt;
use std::ops::{Index, IndexMut, Range};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A dense `rows x cols` matrix over the integers, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    /// The zero matrix of the given shape. Degenerate shapes (zero rows or
    /// columns) are allowed and behave correctly under all operations.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    /// The `n x n` identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of big integers. All rows must have equal
    /// length; an empty row list yields the `0 x 0` matrix.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidInput(
                "matrix rows must all have the same length".into(),
            ));
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor from machine-integer rows (used pervasively in
    /// tests and for small fixed matrices).
    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        IntMatrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    /// Builds a matrix by evaluating `f(row, col)` at every position.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    pub(crate) fn from_flat(rows: usize, cols: usize, data: Vec<BigInt>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        IntMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// `(rows, cols)`.
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self[(i, j)].is_one()
                    } else {
                        self[(i, j)].is_zero()
                    }
                })
            })
    }

    /// Number of nonzero entries.
    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|v| !v.is_zero()).count()
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols)).map(|i| &self[(i, i)]).sum()
    }

    /// The contiguous sub-block given by half-open row and column ranges.
    pub fn submatrix(&self, rows: Range<usize>, cols: Range<usize>) -> IntMatrix {
        assert!(rows.end <= self.rows && cols.end <= self.cols);
        IntMatrix::from_fn(rows.len(), cols.len(), |i, j| {
            self[(rows.start + i, cols.start + j)].clone()
        })
    }

    /// Block-diagonal assembly of the given matrices.
    pub fn block_diag(blocks: &[&IntMatrix]) -> IntMatrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = IntMatrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn add(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.check_same_shape(other, "add")?;
        Ok(IntMatrix::from_fn(self.rows, self.cols, |i, j| {
            &self[(i, j)] + &other[(i, j)]
        }))
    }

    pub fn sub(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.check_same_shape(other, "subtract")?;
        Ok(IntMatrix::from_fn(self.rows, self.cols, |i, j| {
            &self[(i, j)] - &other[(i, j)]
        }))
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix::from_fn(self.rows, self.cols, |i, j| -&self[(i, j)])
    }

    pub fn scalar_mul(&self, s: &BigInt) -> IntMatrix {
        IntMatrix::from_fn(self.rows, self.cols, |i, j| s * &self[(i, j)])
    }

    /// Exact matrix product. Fails only on a shape mismatch.
    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::InvalidInput(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if let (Some(a), Some(b)) = (self.to_i64_flat(), other.to_i64_flat()) {
            if let Some(c) = mul_i64(&a, &b, self.rows, self.cols, other.cols) {
                return Ok(IntMatrix {
                    rows: self.rows,
                    cols: other.cols,
                    data: c.into_iter().map(BigInt::from).collect(),
                });
            }
        }
        Ok(self.mul_big(other))
    }

    /// Big-integer product; iterates over the sparser operand.
    fn mul_big(&self, other: &IntMatrix) -> IntMatrix {
        let (r, k, c) = (self.rows, self.cols, other.cols);
        let mut out = vec![BigInt::zero(); r * c];
        // Cost is (nonzeros of A) * c when driven by A, (nonzeros of B) * r
        // when driven by B; pick the cheaper side.
        if self.nnz() * c <= other.nnz() * r {
            for i in 0..r {
                for l in 0..k {
                    let a = &self[(i, l)];
                    if a.is_zero() {
                        continue;
                    }
                    for j in 0..c {
                        let b = &other[(l, j)];
                        if !b.is_zero() {
                            out[i * c + j] += a * b;
                        }
                    }
                }
            }
        } else {
            for l in 0..k {
                for j in 0..c {
                    let b = &other[(l, j)];
                    if b.is_zero() {
                        continue;
                    }
                    for i in 0..r {
                        let a = &self[(i, l)];
                        if !a.is_zero() {
                            out[i * c + j] += a * b;
                        }
                    }
                }
            }
        }
        IntMatrix {
            rows: r,
            cols: c,
            data: out,
        }
    }

    /// `self` raised to a non-negative power. Requires a square matrix.
    pub fn pow(&self, mut e: u64) -> Result<IntMatrix> {
        if !self.is_square() {
            return Err(Error::InvalidInput(
                "matrix power requires a square matrix".into(),
            ));
        }
        let mut result = IntMatrix::identity(self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    fn check_same_shape(&self, other: &IntMatrix, op: &str) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::InvalidInput(format!(
                "cannot {op} {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// All entries as `i64`, or `None` if any entry is out of range.
    fn to_i64_flat(&self) -> Option<Vec<i64>> {
        self.data.iter().map(ToPrimitive::to_i64).collect()
    }

    /// All entries as `i128`, or `None` if any entry is out of range.
    pub(crate) fn to_i128_flat(&self) -> Option<Vec<i128>> {
        self.data.iter().map(ToPrimitive::to_i128).collect()
    }

    pub(crate) fn flat(&self) -> &[BigInt] {
        &self.data
    }

    /// Largest absolute value of an entry (zero for empty shapes).
    pub fn max_abs(&self) -> BigInt {
        self.data
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

/// `i64`-entry product with `i128` accumulation; returns `None` on overflow
/// (the caller then redoes the product in big integers).
fn mul_i64(a: &[i64], b: &[i64], r: usize, k: usize, c: usize) -> Option<Vec<i128>> {
    let mut out = vec![0i128; r * c];
    for i in 0..r {
        for l in 0..k {
            let av = a[i * k + l];
            if av == 0 {
                continue;
            }
            let av = av as i128;
            for j in 0..c {
                let bv = b[l * c + j];
                if bv != 0 {
                    let term = av.checked_mul(bv as i128)?;
                    let slot = &mut out[i * c + j];
                    *slot = slot.checked_add(term)?;
                }
            }
        }
    }
    Some(out)
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix({}x{})", self.rows, self.cols)?;
        if self.rows * self.cols <= 400 {
            writeln!(f)?;
            write!(f, "{self}")?;
        }
        Ok(())
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let widths: Vec<usize> = (0..self.cols)
            .map(|j| {
                (0..self.rows)
                    .map(|i| self[(i, j)].to_string().len())
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", self[(i, j)].to_string(), width = widths[j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_matches_hand_computation() {
        let a = IntMatrix::from_i64_rows(&[&[1, 2], &[3, 4]]).unwrap();
        let b = IntMatrix::from_i64_rows(&[&[5, 6], &[7, 8]]).unwrap();
        let c = a.mul(&b).unwrap();
        let expected = IntMatrix::from_i64_rows(&[&[19, 22], &[43, 50]]).unwrap();
        assert_eq!(c, expected);
    }

    #[test]
    fn product_handles_empty_shapes() {
        let a = IntMatrix::zeros(0, 3);
        let b = IntMatrix::zeros(3, 2);
        assert_eq!(a.mul(&b).unwrap().shape(), (0, 2));
        let c = IntMatrix::zeros(2, 0);
        let d = IntMatrix::zeros(0, 4);
        assert_eq!(c.mul(&d).unwrap(), IntMatrix::zeros(2, 4));
    }

    #[test]
    fn product_survives_machine_overflow() {
        let big = i64::MAX;
        let a = IntMatrix::from_i64_rows(&[&[big, big], &[big, big]]).unwrap();
        let c = a.mul(&a).unwrap();
        let expected = BigInt::from(big) * BigInt::from(big) * 2;
        assert_eq!(c[(0, 0)], expected);
    }

    #[test]
    fn power_uses_binary_exponentiation() {
        let a = IntMatrix::from_i64_rows(&[&[0, -1], &[1, 0]]).unwrap();
        assert!(a.pow(4).unwrap().is_identity());
        assert_eq!(a.pow(2).unwrap(), IntMatrix::identity(2).neg());
        assert!(a.pow(0).unwrap().is_identity());
    }

    #[test]
    fn shape_mismatch_is_rejected() {
        let a = IntMatrix::zeros(2, 3);
        let b = IntMatrix::zeros(2, 3);
        assert!(a.mul(&b).is_err());
        assert!(a.add(&b.transpose()).is_err());
        assert!(a.pow(2).is_err());
    }

    #[test]
    fn block_diag_places_blocks() {
        let a = IntMatrix::identity(2);
        let b = IntMatrix::from_i64_rows(&[&[7]]).unwrap();
        let m = IntMatrix::block_diag(&[&a, &b]);
        assert_eq!(m.shape(), (3, 3));
        assert_eq!(m[(2, 2)], BigInt::from(7));
        assert_eq!(m[(0, 2)], BigInt::zero());
    }
}
