//! The integral `Z[Z_n]`-module decomposition of `H_1(Z_(K_n)(D^1, S^0))`:
//! one summand per rotation class of vertex subsets, realized either as a
//! module induced from the class stabilizer or as copies of the regular
//! representation, with explicit generator matrices and a characteristic
//! polynomial prediction for the cellular rotation action.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::intlinalg::{charpoly, smith_normal_form, IntMatrix, IntPoly};
use crate::polygon::genus_closed_form;
use crate::words::{representatives, WordClass};

/// A finite-order integer matrix together with the order of the cyclic
/// group it represents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionMatrix {
    matrix: IntMatrix,
    group_order: usize,
}

impl ActionMatrix {
    /// Wraps a matrix after verifying `M^group_order = I`, unit
    /// determinant and entries in `{-1, 0, +1}`.
    pub fn new(matrix: IntMatrix, group_order: usize) -> Result<Self> {
        if group_order == 0 || !matrix.is_square() {
            return Err(Error::InvalidInput(
                "an action matrix must be square with positive group order".into(),
            ));
        }
        if matrix.max_abs() > BigInt::one() {
            return Err(Error::Verification(
                "action matrix entries must lie in {-1, 0, +1}".into(),
            ));
        }
        if !matrix.pow(group_order as u64)?.is_identity() {
            return Err(Error::Verification(format!(
                "action matrix does not satisfy M^{group_order} = I"
            )));
        }
        let snf = smith_normal_form(&matrix);
        if snf.rank != matrix.rows() || !snf.invariant_factors.is_empty() {
            return Err(Error::Verification(
                "action matrix is not invertible over the integers".into(),
            ));
        }
        Ok(ActionMatrix { matrix, group_order })
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// Order of the represented cyclic group.
    pub fn group_order(&self) -> usize {
        self.group_order
    }

    /// Z-rank of the module.
    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }
}

/// The cycle matrix `A_k` sending basis vector `e_i` to `e_(i+1 mod k)`.
fn cycle_matrix(k: usize) -> IntMatrix {
    IntMatrix::from_fn(k, k, |i, j| i64::from(i == (j + 1) % k).into())
}

/// Generator matrix of the stabilizer `Z_(n/d)` acting on the module
/// `N_w` of a class with word length `d` and gap number `iota`.
///
/// Basis convention: the block-of-zeros endpoint chains `e_1, ...,
/// e_(iota*n/d - 1)`. The matrix is the block diagonal of `iota` cycle
/// matrices `A_(n/d)` with the last row and column removed and the last
/// column replaced by all `-1` (the truncated basis vector maps to minus
/// the sum of the others).
pub fn action_matrix(n: usize, d: usize, iota: usize) -> Result<ActionMatrix> {
    if d < 2 || d >= n || !n.is_multiple_of(d) {
        return Err(Error::InvalidInput(format!(
            "induced action needs a proper divisor 1 < d < n, got d = {d}, n = {n}"
        )));
    }
    if iota < 1 {
        return Err(Error::InvalidInput("gap number must be at least 1".into()));
    }
    let k = n / d;
    let size = iota * k - 1;
    let blocks: Vec<IntMatrix> = (0..iota).map(|_| cycle_matrix(k)).collect();
    let full = IntMatrix::block_diag(&blocks.iter().collect::<Vec<_>>());
    let mut m = full.submatrix(0..size, 0..size);
    for i in 0..size {
        m[(i, size - 1)] = BigInt::from(-1);
    }
    ActionMatrix::new(m, k)
}

/// `copies = iota - 1` copies of the regular representation `Z[Z_n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularModule {
    n: usize,
    copies: usize,
}

impl RegularModule {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn copies(&self) -> usize {
        self.copies
    }

    /// Z-rank: `copies * n`.
    pub fn dim(&self) -> usize {
        self.copies * self.n
    }

    /// The generator as a block diagonal of `copies` cycle matrices.
    pub fn generator(&self) -> Result<ActionMatrix> {
        let blocks: Vec<IntMatrix> = (0..self.copies).map(|_| cycle_matrix(self.n)).collect();
        ActionMatrix::new(
            IntMatrix::block_diag(&blocks.iter().collect::<Vec<_>>()),
            self.n,
        )
    }
}

/// The free `Z[Z_n]`-module `(Z[Z_n])^(iota - 1)` attached to a full-length
/// class. Words with `iota = 1` carry the zero module and are excluded.
pub fn regular_module(n: usize, iota: usize) -> Result<RegularModule> {
    if iota < 2 {
        return Err(Error::InvalidInput(format!(
            "a regular summand needs gap number >= 2, got {iota}"
        )));
    }
    Ok(RegularModule { n, copies: iota - 1 })
}

/// How one class contributes to `H_1` as a `Z[Z_n]`-module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleKind {
    /// Induced from the stabilizer `Z_(n/d)` acting on `N_w` via the
    /// generator matrix; total Z-rank `d * dim(N_w)`.
    Induced(ActionMatrix),
    /// Copies of the regular representation (classes with `d = n`).
    Regular(RegularModule),
}

impl ModuleKind {
    /// Z-rank of the full summand.
    pub fn rank(&self) -> usize {
        match self {
            ModuleKind::Induced(a) => a.dim(),
            ModuleKind::Regular(r) => r.dim(),
        }
    }
}

/// One summand of the decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub class: WordClass,
    pub kind: ModuleKind,
}

impl Summand {
    /// Z-rank contributed to `H_1`: `iota * n - d`.
    pub fn rank(&self) -> usize {
        match &self.kind {
            ModuleKind::Induced(a) => self.class.d * a.dim(),
            ModuleKind::Regular(r) => r.dim(),
        }
    }
}

/// The full decomposition of `H_1(Z_(K_n)(D^1, S^0))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H1Decomposition {
    pub n: usize,
    pub summands: Vec<Summand>,
    pub total_rank: usize,
}

/// Decomposes `H_1` into one summand per rotation class: classes with
/// `d < n` give modules induced from the stabilizer, classes with `d = n`
/// give copies of the regular representation. The total Z-rank is checked
/// against twice the surface genus.
pub fn decompose_h1(n: usize) -> Result<H1Decomposition> {
    if !(3..=crate::words::MAX_WORD_LENGTH).contains(&n) {
        return Err(Error::InvalidInput(format!(
            "decompose_h1 supports 3 <= n <= {}, got {n}",
            crate::words::MAX_WORD_LENGTH
        )));
    }
    let summands: Vec<Summand> = representatives(n)?
        .into_iter()
        .map(|class| {
            let kind = if class.d < n {
                ModuleKind::Induced(action_matrix(n, class.d, class.iota)?)
            } else {
                ModuleKind::Regular(regular_module(n, class.iota)?)
            };
            Ok(Summand { class, kind })
        })
        .collect::<Result<_>>()?;
    let total_rank: usize = summands.iter().map(Summand::rank).sum();
    let expected = BigInt::from(2) * genus_closed_form(n as u64)?;
    if BigInt::from(total_rank) != expected {
        return Err(Error::Verification(format!(
            "decomposition rank {total_rank} differs from 2g = {expected}"
        )));
    }
    Ok(H1Decomposition { n, summands, total_rank })
}

/// The induced action of the full rotation on a summand induced from the
/// stabilizer: `d` cyclically permuted copies of the module, the last
/// twisted by the stabilizer generator.
pub fn induced_block(action: &ActionMatrix, d: usize) -> IntMatrix {
    let k = action.dim();
    let size = d * k;
    IntMatrix::from_fn(size, size, |r, c| {
        let (copy_r, i) = (r / k, r % k);
        let (copy_c, j) = (c / k, c % k);
        if copy_c + 1 == copy_r && i == j {
            // Copy t maps identically onto copy t+1.
            BigInt::one()
        } else if copy_c == d - 1 && copy_r == 0 {
            // The last copy returns to the first through the stabilizer.
            action.matrix()[(i, j)].clone()
        } else {
            BigInt::from(0)
        }
    })
}

/// Characteristic polynomial of the rotation generator predicted by a
/// decomposition: `char(N_w)(x^d)` for each induced summand and
/// `(x^n - 1)^(copies)` for each regular one.
pub fn predicted_charpoly(dec: &H1Decomposition) -> Result<IntPoly> {
    let mut total = IntPoly::one();
    for summand in &dec.summands {
        let factor = match &summand.kind {
            ModuleKind::Induced(a) => {
                charpoly(a.matrix())?.compose_power(summand.class.d)
            }
            ModuleKind::Regular(r) => IntPoly::x_pow_minus_one(r.n()).pow(r.copies()),
        };
        total = total.mul(&factor);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intlinalg::charpoly_finite_order;

    fn matrix_rows(m: &IntMatrix) -> Vec<Vec<i64>> {
        (0..m.rows())
            .map(|i| (0..m.cols()).map(|j| i64::try_from(&m[(i, j)]).unwrap()).collect())
            .collect()
    }

    #[test]
    fn action_matrices_match_the_published_tables() {
        let a = action_matrix(6, 2, 1).unwrap();
        assert_eq!(matrix_rows(a.matrix()), [[0, -1], [1, -1]]);
        assert_eq!(a.group_order(), 3);

        let a = action_matrix(6, 3, 1).unwrap();
        assert_eq!(matrix_rows(a.matrix()), [[-1]]);
        assert_eq!(a.group_order(), 2);

        let a = action_matrix(8, 2, 1).unwrap();
        assert_eq!(
            matrix_rows(a.matrix()),
            [[0, 0, -1], [1, 0, -1], [0, 1, -1]]
        );
        assert_eq!(a.dim(), 3);
    }

    #[test]
    fn action_matrix_rejects_bad_parameters() {
        assert!(action_matrix(6, 6, 2).is_err()); // d = n is the regular case
        assert!(action_matrix(6, 4, 1).is_err()); // d does not divide n
        assert!(action_matrix(6, 1, 1).is_err());
        assert!(action_matrix(6, 2, 0).is_err());
    }

    #[test]
    fn action_matrices_have_the_right_order() {
        for (n, d, iota) in [(6, 2, 1), (6, 3, 1), (8, 2, 1), (8, 4, 1), (12, 6, 2), (12, 4, 2)] {
            let a = action_matrix(n, d, iota).unwrap();
            assert_eq!(a.dim(), iota * (n / d) - 1);
            assert!(a.matrix().pow(a.group_order() as u64).unwrap().is_identity());
            // No smaller power may be the identity (the representation is
            // faithful on the stabilizer).
            for e in 1..a.group_order() {
                assert!(
                    !a.matrix().pow(e as u64).unwrap().is_identity(),
                    "({n},{d},{iota}) collapsed at power {e}"
                );
            }
        }
    }

    #[test]
    fn regular_modules() {
        let r = regular_module(5, 2).unwrap();
        assert_eq!((r.copies(), r.dim()), (1, 5));
        let gen = r.generator().unwrap();
        assert_eq!(gen.group_order(), 5);

        let r = regular_module(10, 4).unwrap();
        assert_eq!(r.copies(), 3);
        assert!(regular_module(6, 1).is_err());
    }

    #[test]
    fn decomposition_for_five_is_two_regular_summands() {
        let dec = decompose_h1(5).unwrap();
        assert_eq!(dec.summands.len(), 2);
        assert!(dec
            .summands
            .iter()
            .all(|s| matches!(&s.kind, ModuleKind::Regular(r) if r.copies() == 1)));
        assert_eq!(dec.total_rank, 10);
    }

    #[test]
    fn decomposition_for_seven_is_fourteen_regular_copies() {
        let dec = decompose_h1(7).unwrap();
        let copies: usize = dec
            .summands
            .iter()
            .map(|s| match &s.kind {
                ModuleKind::Regular(r) => r.copies(),
                ModuleKind::Induced(_) => panic!("prime length has only regular summands"),
            })
            .sum();
        assert_eq!(copies, 14);
    }

    #[test]
    fn decomposition_for_eight_matches_the_display() {
        let dec = decompose_h1(8).unwrap();
        let mut sign_summands = 0;
        let mut rank3_summands = 0;
        let mut regular_copies = 0;
        for s in &dec.summands {
            match &s.kind {
                ModuleKind::Induced(a) if a.dim() == 1 => {
                    assert_eq!(matrix_rows(a.matrix()), [[-1]]);
                    assert_eq!(a.group_order(), 2);
                    sign_summands += 1;
                }
                ModuleKind::Induced(a) => {
                    assert_eq!((a.dim(), a.group_order()), (3, 4));
                    rank3_summands += 1;
                }
                ModuleKind::Regular(r) => regular_copies += r.copies(),
            }
        }
        assert_eq!(
            (sign_summands, rank3_summands, regular_copies),
            (3, 1, 30)
        );
        assert_eq!(dec.total_rank, 258);
    }

    #[test]
    fn total_rank_is_twice_the_genus() {
        for n in 3..=16usize {
            let dec = decompose_h1(n).unwrap();
            assert_eq!(
                BigInt::from(dec.total_rank),
                2 * genus_closed_form(n as u64).unwrap(),
                "n = {n}"
            );
        }
        assert!(decompose_h1(25).is_err());
        assert!(decompose_h1(2).is_err());
    }

    #[test]
    fn prime_decompositions_are_regular_with_the_corollary_count() {
        for p in [5usize, 7, 11, 13] {
            let dec = decompose_h1(p).unwrap();
            let copies: usize = dec
                .summands
                .iter()
                .map(|s| match &s.kind {
                    ModuleKind::Regular(r) => r.copies(),
                    ModuleKind::Induced(_) => panic!("unexpected induced summand for prime {p}"),
                })
                .sum();
            let genus = genus_closed_form(p as u64).unwrap();
            assert_eq!(BigInt::from(copies * p), 2 * genus, "p = {p}");
        }
    }

    #[test]
    fn predicted_charpolys_for_small_polygons() {
        assert_eq!(
            predicted_charpoly(&decompose_h1(3).unwrap()).unwrap(),
            IntPoly::one()
        );
        assert_eq!(
            predicted_charpoly(&decompose_h1(4).unwrap()).unwrap(),
            IntPoly::from_i64(&[1, 0, 1]) // x^2 + 1
        );
        assert_eq!(
            predicted_charpoly(&decompose_h1(5).unwrap()).unwrap(),
            IntPoly::x_pow_minus_one(5).pow(2)
        );
    }

    #[test]
    fn induced_block_realizes_the_composed_charpoly() {
        for (n, d, iota) in [(6, 2, 1), (6, 3, 1), (8, 4, 1), (12, 4, 2)] {
            let a = action_matrix(n, d, iota).unwrap();
            let block = induced_block(&a, d);
            assert_eq!(block.rows(), d * a.dim());
            assert!(block.pow(n as u64).unwrap().is_identity(), "({n},{d},{iota})");
            let direct = charpoly(&block).unwrap();
            let composed = charpoly(a.matrix()).unwrap().compose_power(d);
            assert_eq!(direct, composed, "({n},{d},{iota})");
        }
    }

    #[test]
    fn prediction_matches_the_cellular_action_for_small_n() {
        for n in [3usize, 4, 5, 6] {
            let a = crate::cellcomplex::sigma_on_h1(n).unwrap();
            let predicted = predicted_charpoly(&decompose_h1(n).unwrap()).unwrap();
            let cellular = if n <= 5 {
                charpoly(&a).unwrap()
            } else {
                charpoly_finite_order(&a, n as u64).unwrap().poly
            };
            assert_eq!(cellular, predicted, "n = {n}");
        }
    }

    #[test]
    fn ranks_use_the_iota_n_minus_d_formula() {
        for n in [6usize, 8, 12] {
            for s in decompose_h1(n).unwrap().summands {
                assert_eq!(
                    s.rank(),
                    s.class.iota * n - s.class.d,
                    "class {} in n = {n}",
                    s.class.word
                );
            }
        }
    }
}
