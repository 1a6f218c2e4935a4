//! Homology of integer chain complexes and functorially induced maps.
//!
//! Conventions, fixed once for the whole crate:
//!
//! * A degree is described by the pair of boundary matrices
//!   `d_k : C_k -> C_(k-1)` and `d_(k+1) : C_(k+1) -> C_k` (columns map to
//!   chains of one dimension lower).
//! * With `U * d_k * V = D` in Smith form and `r = rank(d_k)`, the columns
//!   `V e_r, ..., V e_(n-1)` are a basis of the *saturated* kernel lattice
//!   `ker d_k`. Homology is the cokernel of `d_(k+1)` rewritten in those
//!   kernel coordinates. This basis convention also pins down the matrix
//!   returned by [`induced_map_on_homology`].

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::intlinalg::group::FGAbelianGroup;
use crate::intlinalg::matrix::IntMatrix;
use crate::intlinalg::snf::{snf_with, SnfOptions};

/// Checks the composable-pair contract shared by the routines below.
fn check_chain_pair(d_k: &IntMatrix, d_k1: &IntMatrix) -> Result<()> {
    if d_k.cols() != d_k1.rows() {
        return Err(Error::InvalidInput(format!(
            "boundary shapes do not compose: d_k is {}x{}, d_(k+1) is {}x{}",
            d_k.rows(),
            d_k.cols(),
            d_k1.rows(),
            d_k1.cols()
        )));
    }
    if !d_k.mul(d_k1)?.is_zero() {
        return Err(Error::InvalidInput(
            "boundary composition d_k * d_(k+1) is nonzero".into(),
        ));
    }
    Ok(())
}

/// Kernel-coordinate data for one degree of a chain complex.
struct KernelPresentation {
    /// Rank of `d_k`.
    rank_dk: usize,
    /// Dimension of `ker d_k`.
    nullity: usize,
    /// `d_(k+1)` expressed in the kernel basis (a `nullity x n_(k+1)`
    /// presentation matrix of the homology group).
    presentation: IntMatrix,
    /// Kernel basis as columns (only kept when requested).
    kernel_basis: Option<IntMatrix>,
    /// Full coordinate transform `V^-1` (only kept when requested).
    v_inv: Option<IntMatrix>,
}

fn kernel_presentation(
    d_k: &IntMatrix,
    d_k1: &IntMatrix,
    keep_basis: bool,
) -> Result<KernelPresentation> {
    let snf_k = snf_with(
        d_k,
        SnfOptions {
            v: true,
            v_inv: true,
            ..SnfOptions::none()
        },
    );
    let r = snf_k.rank;
    let n_k = d_k.cols();
    let s = n_k - r;
    let v = snf_k.v.expect("v requested");
    let v_inv = snf_k.v_inv.expect("v_inv requested");
    let x = v_inv.mul(d_k1)?;
    // Columns of d_(k+1) are cycles, so their first r kernel-transform
    // coordinates vanish; anything else indicates an internal error.
    for i in 0..r {
        for j in 0..x.cols() {
            assert!(
                x[(i, j)].is_zero(),
                "internal error: image of d_(k+1) escapes ker d_k"
            );
        }
    }
    let presentation = x.submatrix(r..n_k, 0..x.cols());
    Ok(KernelPresentation {
        rank_dk: r,
        nullity: s,
        presentation,
        kernel_basis: keep_basis.then(|| v.submatrix(0..n_k, r..n_k)),
        v_inv: keep_basis.then_some(v_inv),
    })
}

/// Homology at the middle of `C_(k+1) -> C_k -> C_(k-1)` as an abstract
/// finitely generated abelian group.
///
/// Fails when the matrices do not compose or their product is nonzero.
pub fn chain_homology(d_k: &IntMatrix, d_k1: &IntMatrix) -> Result<FGAbelianGroup> {
    check_chain_pair(d_k, d_k1)?;
    let pres = kernel_presentation(d_k, d_k1, false)?;
    let snf_x = snf_with(&pres.presentation, SnfOptions::none());
    let rank = pres.nullity - snf_x.rank;
    FGAbelianGroup::new(rank, snf_x.nontrivial_factors())
}

/// Homology of the full complex `0 -> C_top -> ... -> C_0 -> 0` given the
/// boundary list `[d_1, ..., d_top]` and the number of 0-chains.
///
/// Returns `[H_0, ..., H_top]`.
pub fn complex_homology(n0: usize, boundaries: &[IntMatrix]) -> Result<Vec<FGAbelianGroup>> {
    let top = boundaries.len();
    let mut out = Vec::with_capacity(top + 1);
    for k in 0..=top {
        let d_k = if k == 0 {
            IntMatrix::zeros(0, n0)
        } else {
            boundaries[k - 1].clone()
        };
        let d_k1 = if k == top {
            IntMatrix::zeros(d_k.cols(), 0)
        } else {
            boundaries[k].clone()
        };
        out.push(chain_homology(&d_k, &d_k1)?);
    }
    Ok(out)
}

/// Matrix of the map induced on `H_k` by a chain map `f`.
///
/// Arguments: the two boundaries around degree `k` and the chain-map
/// components in degrees `k`, `k-1`, `k+1`. The chain-map identities
/// `f_(k-1) * d_k = d_k * f_k` and `f_k * d_(k+1) = d_(k+1) * f_(k+1)` are
/// verified. `H_k` must be torsion-free; torsion is reported as an
/// unsupported case rather than silently projected away.
///
/// The matrix is written in the deterministic homology basis described in
/// the module documentation, so repeated runs agree byte for byte and
/// matrices of composed maps multiply as expected.
pub fn induced_map_on_homology(
    d_k: &IntMatrix,
    d_k1: &IntMatrix,
    f_k: &IntMatrix,
    f_km1: &IntMatrix,
    f_kp1: &IntMatrix,
) -> Result<IntMatrix> {
    check_chain_pair(d_k, d_k1)?;
    let shape_err = |what: &str, m: &IntMatrix, n: usize| {
        Err(Error::InvalidInput(format!(
            "{what} must be {n}x{n}, got {}x{}",
            m.rows(),
            m.cols()
        )))
    };
    if f_km1.shape() != (d_k.rows(), d_k.rows()) {
        return shape_err("f_(k-1)", f_km1, d_k.rows());
    }
    if f_k.shape() != (d_k.cols(), d_k.cols()) {
        return shape_err("f_k", f_k, d_k.cols());
    }
    if f_kp1.shape() != (d_k1.cols(), d_k1.cols()) {
        return shape_err("f_(k+1)", f_kp1, d_k1.cols());
    }
    if f_km1.mul(d_k)? != d_k.mul(f_k)? {
        return Err(Error::InvalidInput(
            "not a chain map: f_(k-1) * d_k != d_k * f_k".into(),
        ));
    }
    if f_k.mul(d_k1)? != d_k1.mul(f_kp1)? {
        return Err(Error::InvalidInput(
            "not a chain map: f_k * d_(k+1) != d_(k+1) * f_(k+1)".into(),
        ));
    }

    let pres = kernel_presentation(d_k, d_k1, true)?;
    let kernel_basis = pres.kernel_basis.expect("basis requested");
    let v_inv = pres.v_inv.expect("v_inv requested");
    let snf_x = snf_with(
        &pres.presentation,
        SnfOptions {
            u: true,
            u_inv: true,
            ..SnfOptions::none()
        },
    );
    if !snf_x.nontrivial_factors().is_empty() {
        return Err(Error::Unsupported(
            "homology has torsion; the induced-map matrix is only defined here \
             for torsion-free homology"
                .into(),
        ));
    }
    let u_x = snf_x.u.expect("u requested");
    let u_x_inv = snf_x.u_inv.expect("u_inv requested");
    let t = snf_x.rank;
    let s = pres.nullity;
    let h = s - t;

    // Basis chains: columns of Z * (U_X^-1 restricted to its last h columns).
    let basis_chains = kernel_basis.mul(&u_x_inv.submatrix(0..s, t..s))?;
    // Push through the chain map and return to kernel coordinates.
    let mapped = v_inv.mul(&f_k.mul(&basis_chains)?)?;
    for i in 0..pres.rank_dk {
        for j in 0..h {
            assert!(
                mapped[(i, j)].is_zero(),
                "internal error: chain map does not preserve the kernel"
            );
        }
    }
    let y = mapped.submatrix(pres.rank_dk..mapped.rows(), 0..h);
    // Classes: last h coordinates after the U_X change of basis.
    let classes = u_x.mul(&y)?;
    Ok(classes.submatrix(t..s, 0..h))
}
