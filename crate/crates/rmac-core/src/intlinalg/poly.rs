//! Integer polynomials, cyclotomic polynomials and exact characteristic
//! polynomials.
//!
//! Two characteristic-polynomial routines are provided:
//!
//! * [`charpoly`] — the division-free Faddeev–LeVerrier recurrence, suitable
//!   for any square integer matrix of moderate size.
//! * [`charpoly_finite_order`] — a certified fast path for matrices of
//!   finite multiplicative order: such a matrix is diagonalizable over `Q`
//!   with root-of-unity eigenvalues, so its characteristic polynomial is a
//!   product of cyclotomics whose multiplicities are exposed by exact
//!   integer rank computations.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{divisors, euler_phi};
use crate::error::{Error, Result};
use crate::intlinalg::matrix::IntMatrix;
use crate::intlinalg::snf::{rank, require_square};

/// A polynomial with integer coefficients, stored in ascending degree order
/// with no trailing zeros (the zero polynomial has an empty coefficient
/// list).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// The monomial `c * x^e`.
    pub fn monomial(c: BigInt, e: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c;
        IntPoly::new(coeffs)
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = -BigInt::one();
        coeffs[n] = BigInt::one();
        IntPoly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the stored range).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        IntPoly::new(out)
    }

    pub fn pow(&self, e: usize) -> IntPoly {
        let mut out = IntPoly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Exact polynomial division; fails if `divisor` does not divide `self`
    /// over the integers.
    pub fn div_exact(&self, divisor: &IntPoly) -> Result<IntPoly> {
        if divisor.is_zero() {
            return Err(Error::InvalidInput("division by the zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let (dd, dr) = (self.coeffs.len() - 1, divisor.coeffs.len() - 1);
        if dd < dr {
            return Err(Error::InvalidInput(
                "polynomial division is not exact".into(),
            ));
        }
        let lead = divisor.coeffs.last().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigInt::zero(); dd - dr + 1];
        for k in (0..=dd - dr).rev() {
            let (q, r) = rem[k + dr].div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InvalidInput(
                    "polynomial division is not exact".into(),
                ));
            }
            if q.is_zero() {
                continue;
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                let delta = &q * c;
                rem[k + i] -= delta;
            }
            quo[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InvalidInput(
                "polynomial division is not exact".into(),
            ));
        }
        Ok(IntPoly::new(quo))
    }

    /// Substitutes `x -> x^d`.
    pub fn compose_power(&self, d: usize) -> IntPoly {
        if self.is_zero() || d == 0 {
            return if self.is_zero() {
                IntPoly::zero()
            } else {
                IntPoly::constant(self.coeffs.iter().sum())
            };
        }
        let mut out = vec![BigInt::zero(); (self.coeffs.len() - 1) * d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * d] = c.clone();
        }
        IntPoly::new(out)
    }

    /// Evaluates the polynomial at a square matrix (Horner form).
    pub fn eval_matrix(&self, m: &IntMatrix) -> Result<IntMatrix> {
        let n = require_square(m, "polynomial evaluation")?;
        let mut acc = IntMatrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m)?;
            if !c.is_zero() {
                for i in 0..n {
                    acc[(i, i)] += c;
                }
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            match (e, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{e}")?,
                (_, false) => write!(f, "{mag}*x^{e}")?,
            }
        }
        Ok(())
    }
}

/// The `n`-th cyclotomic polynomial, computed by exact division of
/// `x^n - 1` by the lower cyclotomics.
pub fn cyclotomic(n: u64) -> IntPoly {
    fn build(n: u64, memo: &mut BTreeMap<u64, IntPoly>) -> IntPoly {
        if let Some(p) = memo.get(&n) {
            return p.clone();
        }
        let mut p = IntPoly::x_pow_minus_one(n as usize);
        for d in divisors(n) {
            if d < n {
                let q = build(d, memo);
                p = p.div_exact(&q).expect("cyclotomic division is exact");
            }
        }
        memo.insert(n, p.clone());
        p
    }
    assert!(n >= 1, "cyclotomic index must be positive");
    build(n, &mut BTreeMap::new())
}

/// Characteristic polynomial `det(x*I - M)` via the division-free
/// Faddeev–LeVerrier recurrence. Exact for any square integer matrix;
/// intended for moderate sizes (cost is `n` matrix products).
pub fn charpoly(m: &IntMatrix) -> Result<IntPoly> {
    let n = require_square(m, "characteristic polynomial")?;
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut acc = IntMatrix::identity(n); // M_1 = I
    for k in 1..=n {
        let p = m.mul(&acc)?;
        let (q, r) = p.trace().div_rem(&BigInt::from(k as u64));
        debug_assert!(r.is_zero(), "Faddeev-LeVerrier trace division is exact");
        coeffs[n - k] = -q;
        if k < n {
            acc = p;
            let c = coeffs[n - k].clone();
            for i in 0..n {
                acc[(i, i)] += &c;
            }
        }
    }
    Ok(IntPoly::new(coeffs))
}

/// Characteristic polynomial of a matrix of finite multiplicative order,
/// with multiplicities by cyclotomic factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteOrderCharpoly {
    /// `(d, multiplicity)` pairs with positive multiplicity, ascending `d`:
    /// the characteristic polynomial is the product of `cyclotomic(d)`
    /// raised to these multiplicities.
    pub cyclotomic_multiplicities: Vec<(u64, usize)>,
    /// The expanded characteristic polynomial.
    pub poly: IntPoly,
}

impl FiniteOrderCharpoly {
    /// Factored rendering such as `(x - 1)^2 * (x^2 + x + 1)`.
    pub fn factored(&self) -> String {
        if self.cyclotomic_multiplicities.is_empty() {
            return "1".to_string();
        }
        self.cyclotomic_multiplicities
            .iter()
            .map(|&(d, m)| {
                let base = cyclotomic(d).to_string();
                if m == 1 {
                    format!("({base})")
                } else {
                    format!("({base})^{m}")
                }
            })
            .collect::<Vec<_>>()
            .join(" * ")
    }
}

/// Computes the characteristic polynomial of `m` given that `m^order = I`
/// (verified first; violations are rejected).
///
/// Every eigenvalue is then a root of unity of order dividing `order`, so
/// `charpoly(m) = prod_d cyclotomic(d)^{m_d}` over divisors `d` of `order`.
/// The multiplicity `m_d` equals `nullity(cyclotomic_d(m)) / phi(d)`, an
/// exact integer rank computation. The certificate that the nullities add
/// up to the matrix size is checked instead of trusted.
pub fn charpoly_finite_order(m: &IntMatrix, order: u64) -> Result<FiniteOrderCharpoly> {
    let n = require_square(m, "finite-order characteristic polynomial")?;
    if order == 0 {
        return Err(Error::InvalidInput("matrix order must be positive".into()));
    }
    if !m.pow(order)?.is_identity() {
        return Err(Error::InvalidInput(format!(
            "matrix does not satisfy M^{order} = I"
        )));
    }
    let mut multiplicities = Vec::new();
    let mut total_nullity = 0usize;
    for d in divisors(order) {
        let value = cyclotomic(d).eval_matrix(m)?;
        let nullity = n - rank(&value);
        total_nullity += nullity;
        let phi = euler_phi(d) as usize;
        if !nullity.is_multiple_of(phi) {
            return Err(Error::Verification(format!(
                "nullity {nullity} of cyclotomic({d}) evaluated at the matrix \
                 is not a multiple of phi({d}) = {phi}"
            )));
        }
        if nullity > 0 {
            multiplicities.push((d, nullity / phi));
        }
    }
    if total_nullity != n {
        return Err(Error::Verification(format!(
            "cyclotomic nullities sum to {total_nullity}, expected the matrix size {n}"
        )));
    }
    let mut poly = IntPoly::one();
    for &(d, mult) in &multiplicities {
        poly = poly.mul(&cyclotomic(d).pow(mult));
    }
    debug_assert_eq!(poly.degree(), Some(n));
    Ok(FiniteOrderCharpoly {
        cyclotomic_multiplicities: multiplicities,
        poly,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_formatting() {
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(IntPoly::from_i64(&[1]).to_string(), "1");
        assert_eq!(IntPoly::from_i64(&[1, 0, 1]).to_string(), "x^2 + 1");
        assert_eq!(IntPoly::from_i64(&[-1, 0, 0, 0, 0, 1]).to_string(), "x^5 - 1");
        assert_eq!(
            IntPoly::from_i64(&[1, 0, 0, 0, 0, -2, 0, 0, 0, 0, 1]).to_string(),
            "x^10 - 2*x^5 + 1"
        );
        assert_eq!(IntPoly::from_i64(&[0, -3, 2]).to_string(), "2*x^2 - 3*x");
    }

    #[test]
    fn cyclotomic_small_indices() {
        assert_eq!(cyclotomic(1), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic(2), IntPoly::from_i64(&[1, 1]));
        assert_eq!(cyclotomic(3), IntPoly::from_i64(&[1, 1, 1]));
        assert_eq!(cyclotomic(4), IntPoly::from_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), IntPoly::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), IntPoly::from_i64(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn cyclotomic_product_recovers_x_pow_minus_one() {
        for n in 1..=24u64 {
            let mut prod = IntPoly::one();
            for d in divisors(n) {
                prod = prod.mul(&cyclotomic(d));
            }
            assert_eq!(prod, IntPoly::x_pow_minus_one(n as usize), "n = {n}");
        }
    }

    #[test]
    fn charpoly_of_companion_matrix() {
        // Companion matrix of x^3 - 2x - 5.
        let m = IntMatrix::from_i64_rows(&[&[0, 0, 5], &[1, 0, 2], &[0, 1, 0]]).unwrap();
        let p = charpoly(&m).unwrap();
        assert_eq!(p, IntPoly::from_i64(&[-5, -2, 0, 1]));
    }

    #[test]
    fn charpoly_of_rotation_by_quarter_turn() {
        let m = IntMatrix::from_i64_rows(&[&[0, -1], &[1, 0]]).unwrap();
        assert_eq!(charpoly(&m).unwrap(), IntPoly::from_i64(&[1, 0, 1]));
        let fast = charpoly_finite_order(&m, 4).unwrap();
        assert_eq!(fast.poly, IntPoly::from_i64(&[1, 0, 1]));
        assert_eq!(fast.cyclotomic_multiplicities, vec![(4, 1)]);
        assert_eq!(fast.factored(), "(x^2 + 1)");
    }

    #[test]
    fn finite_order_matches_general_charpoly_on_permutations() {
        // 5-cycle permutation matrix: charpoly x^5 - 1.
        let mut m = IntMatrix::zeros(5, 5);
        for j in 0..5 {
            m[((j + 1) % 5, j)] = BigInt::one();
        }
        let slow = charpoly(&m).unwrap();
        let fast = charpoly_finite_order(&m, 5).unwrap();
        assert_eq!(slow, fast.poly);
        assert_eq!(fast.poly.to_string(), "x^5 - 1");
        assert_eq!(fast.cyclotomic_multiplicities, vec![(1, 1), (5, 1)]);
    }

    #[test]
    fn finite_order_rejects_infinite_order_input() {
        let m = IntMatrix::from_i64_rows(&[&[1, 1], &[0, 1]]).unwrap();
        assert!(charpoly_finite_order(&m, 6).is_err());
    }

    #[test]
    fn exact_division_detects_failure() {
        let p = IntPoly::from_i64(&[1, 0, 1]);
        let q = IntPoly::from_i64(&[1, 1]);
        assert!(p.div_exact(&q).is_err());
        let product = p.mul(&q);
        assert_eq!(product.div_exact(&q).unwrap(), p);
    }

    #[test]
    fn compose_power_spreads_exponents() {
        let p = IntPoly::from_i64(&[1, -2, 1]); // (x-1)^2
        assert_eq!(
            p.compose_power(5),
            IntPoly::from_i64(&[1, 0, 0, 0, 0, -2, 0, 0, 0, 0, 1])
        );
    }
}
