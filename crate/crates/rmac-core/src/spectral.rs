//! Group homology of cyclic groups via the periodic resolution, the
//! closed-form summand homology with its direct cross-check, assembly of
//! the second page of the homotopy-orbit spectral sequence, the
//! Hilbert–Poincaré coefficients, and the necklace identity audit.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::intlinalg::{chain_homology, FGAbelianGroup, IntMatrix};
use crate::modrep::action_matrix;
use crate::polygon::quotient_genus;
use crate::words::{count_l, necklace_count, representatives};

/// Group homology of a cyclic group with coefficients in a module,
/// collapsed to its period-2 pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicHomology {
    /// Degree 0: the coinvariants.
    pub h0: FGAbelianGroup,
    /// Degrees 1, 3, 5, ...
    pub h_odd: FGAbelianGroup,
    /// Degrees 2, 4, 6, ...
    pub h_even: FGAbelianGroup,
}

impl CyclicHomology {
    /// Entrywise direct sum.
    pub fn direct_sum(&self, other: &CyclicHomology) -> CyclicHomology {
        CyclicHomology {
            h0: self.h0.direct_sum(&other.h0),
            h_odd: self.h_odd.direct_sum(&other.h_odd),
            h_even: self.h_even.direct_sum(&other.h_even),
        }
    }

    pub fn trivial() -> CyclicHomology {
        CyclicHomology {
            h0: FGAbelianGroup::trivial(),
            h_odd: FGAbelianGroup::trivial(),
            h_even: FGAbelianGroup::trivial(),
        }
    }
}

/// Homology of `Z_m` with coefficients in `Z^k` acted on by `M` (the
/// generator), computed from the periodic resolution:
/// `h0 = coker(I - M)`, `h_odd = ker(I - M)/im(N)`,
/// `h_even = ker(N)/im(I - M)` with `N = I + M + ... + M^(m-1)`.
///
/// The positive-degree groups must come out pure torsion; this is a
/// theorem for finite-order `M` and is re-checked on every call.
pub fn cyclic_group_homology(m: usize, matrix: &IntMatrix) -> Result<CyclicHomology> {
    if m == 0 || !matrix.is_square() {
        return Err(Error::InvalidInput(
            "group homology needs m >= 1 and a square matrix".into(),
        ));
    }
    if !matrix.pow(m as u64)?.is_identity() {
        return Err(Error::InvalidInput(format!(
            "coefficient matrix does not satisfy M^{m} = I"
        )));
    }
    let k = matrix.rows();
    let b = IntMatrix::identity(k).sub(matrix)?;
    let mut norm = IntMatrix::zeros(k, k);
    let mut power = IntMatrix::identity(k);
    for _ in 0..m {
        norm = norm.add(&power)?;
        power = power.mul(matrix)?;
    }
    let h0 = chain_homology(&IntMatrix::zeros(0, k), &b)?;
    let h_odd = chain_homology(&b, &norm)?;
    let h_even = chain_homology(&norm, &b)?;
    for (name, h) in [("odd", &h_odd), ("even", &h_even)] {
        if h.rank() != 0 {
            return Err(Error::Verification(format!(
                "positive-degree {name} homology has free rank {}; it must be pure torsion",
                h.rank()
            )));
        }
    }
    Ok(CyclicHomology { h0, h_odd, h_even })
}

/// Homology of `Z_n` with coefficients in the summand of a class with
/// word length `d` and gap number `iota`, reduced to the stabilizer
/// `Z_(n/d)` acting on `N_w`.
///
/// Returns the closed form — `(Z^(iota-1) ⊕ Z_(n/d), 0, Z_(n/d))` for
/// `d < n` and `(Z^(iota-1), 0, 0)` for `d = n` — after checking it
/// against the direct periodic-resolution computation.
pub fn summand_homology(n: usize, d: usize, iota: usize) -> Result<CyclicHomology> {
    if d < 2 || d > n || !n.is_multiple_of(d) {
        return Err(Error::InvalidInput(format!(
            "summand homology needs a divisor 1 < d <= n, got d = {d}, n = {n}"
        )));
    }
    if iota < 1 || (d == n && iota < 2) {
        return Err(Error::InvalidInput(format!(
            "gap number {iota} is not realized for word length {d}"
        )));
    }
    let closed = if d < n {
        CyclicHomology {
            h0: FGAbelianGroup::free(iota - 1).direct_sum(&FGAbelianGroup::cyclic((n / d) as u64)),
            h_odd: FGAbelianGroup::trivial(),
            h_even: FGAbelianGroup::cyclic((n / d) as u64),
        }
    } else {
        CyclicHomology {
            h0: FGAbelianGroup::free(iota - 1),
            h_odd: FGAbelianGroup::trivial(),
            h_even: FGAbelianGroup::trivial(),
        }
    };
    // Shapiro reduction: compute over the stabilizer Z_(n/d) with the
    // explicit generator matrix (the trivial group on Z^(iota-1) when
    // d = n, where the stabilizer is trivial).
    let direct = if d < n {
        cyclic_group_homology(n / d, action_matrix(n, d, iota)?.matrix())?
    } else {
        cyclic_group_homology(1, &IntMatrix::identity(iota - 1))?
    };
    if direct != closed {
        return Err(Error::Verification(format!(
            "summand homology mismatch for (n, d, iota) = ({n}, {d}, {iota}): \
             closed form ({}, {}, {}), direct ({}, {}, {})",
            closed.h0, closed.h_odd, closed.h_even, direct.h0, direct.h_odd, direct.h_even
        )));
    }
    Ok(closed)
}

/// The second page of the homotopy-orbit spectral sequence: entries
/// `(p, q)` for `0 <= p <= max_p`, `0 <= q <= 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct E2Page {
    n: usize,
    max_p: usize,
    entries: BTreeMap<(usize, usize), FGAbelianGroup>,
}

impl E2Page {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max_p(&self) -> usize {
        self.max_p
    }

    /// Entry at column `p`, row `q`.
    pub fn entry(&self, p: usize, q: usize) -> Option<&FGAbelianGroup> {
        self.entries.get(&(p, q))
    }

    /// All entries, keyed `(p, q)` in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &FGAbelianGroup)> {
        self.entries.iter()
    }
}

/// Assembles the second page for the `n`-gon surface: rows `q = 0` and
/// `q = 2` carry the homology of `Z_n` with trivial `Z` coefficients
/// (`Z`, then `Z_n` at odd `p`, `0` at even `p >= 2`); row `q = 1` sums
/// the summand homologies placed by parity. The `(1, 1)` entry is
/// asserted to vanish.
pub fn e2_page(n: usize, max_p: usize) -> Result<E2Page> {
    if !(3..=16).contains(&n) {
        return Err(Error::InvalidInput(format!(
            "the page is assembled for 3 <= n <= 16, got {n}"
        )));
    }
    if max_p < 2 {
        return Err(Error::InvalidInput("max_p must be at least 2".into()));
    }
    let mut row1 = CyclicHomology::trivial();
    for class in representatives(n)? {
        row1 = row1.direct_sum(&summand_homology(n, class.d, class.iota)?);
    }
    if !row1.h_odd.is_trivial() {
        return Err(Error::Verification(format!(
            "entry (1, 1) must vanish, got {}",
            row1.h_odd
        )));
    }
    let z_n = FGAbelianGroup::cyclic(n as u64);
    let mut entries = BTreeMap::new();
    for p in 0..=max_p {
        for q in [0usize, 2] {
            let value = if p == 0 {
                FGAbelianGroup::free(1)
            } else if p % 2 == 1 {
                z_n.clone()
            } else {
                FGAbelianGroup::trivial()
            };
            entries.insert((p, q), value);
        }
        let value = if p == 0 {
            row1.h0.clone()
        } else if p % 2 == 1 {
            row1.h_odd.clone()
        } else {
            row1.h_even.clone()
        };
        entries.insert((p, 1), value);
    }
    Ok(E2Page { n, max_p, entries })
}

/// Coefficients `(1, R_n, 1)` of the Hilbert–Poincaré series of the
/// homotopy orbit space over a field whose characteristic does not divide
/// `n`: `R_n` is the free rank of the `(0, 1)` entry, the total copy
/// count of the regular representation in the decomposition.
pub fn poincare_series(n: usize) -> Result<(u64, u64, u64)> {
    if !(3..=16).contains(&n) {
        return Err(Error::InvalidInput(format!(
            "the series is computed for 3 <= n <= 16, got {n}"
        )));
    }
    let r: u64 = representatives(n)?
        .iter()
        .map(|c| c.iota as u64 - 1)
        .sum();
    Ok((1, r, 1))
}

/// The necklace identity audit: all published expressions for the free
/// rank `R_n` evaluated and compared.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityAudit {
    pub n: u64,
    /// `R_n` as the sum of `iota - 1` over the class representatives.
    pub rank: i64,
    /// `2 + 2^(n-2) - necklace_count(n)`.
    pub closed_form: i64,
    /// `sum over divisors d > 1 of n, sum over k of (k-1) * L(d, k)`.
    pub divisor_sum: i64,
    /// `2 * quotient_genus(n)`.
    pub twice_quotient_genus: i64,
    /// Free rank of `H_1` of the quotient cell complex (computed for
    /// `n <= 8`).
    pub cellular_rank: Option<i64>,
}

/// Checks `R_n = 2 + 2^(n-2) - necklace_count(n)` together with the
/// divisor-sum form and `2 * quotient_genus(n)`; for `n <= 8` the free
/// rank of `H_1` of the quotient complex is compared as well.
pub fn identity_audit(n: u64) -> Result<IdentityAudit> {
    identity_audit_with(n, n <= 8)
}

/// [`identity_audit`] with the cellular leg made explicit.
pub fn identity_audit_with(n: u64, cellular: bool) -> Result<IdentityAudit> {
    if !(3..=16).contains(&n) {
        return Err(Error::InvalidInput(format!(
            "the audit is defined for 3 <= n <= 16, got {n}"
        )));
    }
    let rank: i64 = representatives(n as usize)?
        .iter()
        .map(|c| c.iota as i64 - 1)
        .sum();
    let closed_form = 2 + (1i64 << (n - 2)) - necklace_count(n)? as i64;
    let mut divisor_sum: i64 = 0;
    for d in crate::arith::divisors(n) {
        if d == 1 {
            continue;
        }
        for k in 1..=d / 2 {
            divisor_sum += (k as i64 - 1) * count_l(d, k)? as i64;
        }
    }
    let twice_quotient_genus = (BigInt::from(2) * quotient_genus(n)?)
        .to_i64()
        .expect("fits for n <= 16");
    let cellular_rank = if cellular {
        let complex = crate::cellcomplex::build_rmac(&crate::simplicial::polygon_boundary(
            n as usize,
        )?)?;
        let action = crate::cellcomplex::rotation_action(&complex, n as usize)?;
        let quotient = crate::cellcomplex::quotient_complex(&complex, &action)?;
        Some(quotient.homology()?[1].rank() as i64)
    } else {
        None
    };
    let audit = IdentityAudit {
        n,
        rank,
        closed_form,
        divisor_sum,
        twice_quotient_genus,
        cellular_rank,
    };
    let legs_agree = audit.closed_form == audit.rank
        && audit.divisor_sum == audit.rank
        && audit.twice_quotient_genus == audit.rank
        && audit.cellular_rank.is_none_or(|c| c == audit.rank);
    if !legs_agree {
        return Err(Error::Verification(format!(
            "identity audit mismatch for n = {n}: rank {}, closed form {}, divisor sum {}, \
             2 * quotient genus {}, cellular {:?}",
            audit.rank,
            audit.closed_form,
            audit.divisor_sum,
            audit.twice_quotient_genus,
            audit.cellular_rank
        )));
    }
    Ok(audit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cellcomplex::sigma_on_h1;
    use crate::intlinalg::{complex_homology, smith_normal_form};
    use crate::modrep::{decompose_h1, induced_block, ModuleKind};

    fn cycle(k: usize) -> IntMatrix {
        IntMatrix::from_fn(k, k, |i, j| i64::from(i == (j + 1) % k).into())
    }

    fn group(rank: usize, factors: &[u64]) -> FGAbelianGroup {
        FGAbelianGroup::new(rank, factors.iter().map(|&f| f.into()).collect()).unwrap()
    }

    #[test]
    fn regular_sign_and_trivial_coefficients() {
        let h = cyclic_group_homology(6, &cycle(6)).unwrap();
        assert_eq!(
            (h.h0, h.h_odd, h.h_even),
            (group(1, &[]), group(0, &[]), group(0, &[]))
        );

        let sign = IntMatrix::from_i64_rows(&[&[-1]]).unwrap();
        let h = cyclic_group_homology(2, &sign).unwrap();
        assert_eq!(
            (h.h0, h.h_odd, h.h_even),
            (group(0, &[2]), group(0, &[]), group(0, &[2]))
        );

        let h = cyclic_group_homology(6, &IntMatrix::identity(2)).unwrap();
        assert_eq!(
            (h.h0, h.h_odd, h.h_even),
            (group(2, &[]), group(0, &[6, 6]), group(0, &[]))
        );
    }

    #[test]
    fn group_homology_rejects_wrong_order() {
        let m = IntMatrix::from_i64_rows(&[&[2]]).unwrap();
        assert!(cyclic_group_homology(3, &m).is_err());
        let sign = IntMatrix::from_i64_rows(&[&[-1]]).unwrap();
        assert!(cyclic_group_homology(3, &sign).is_err()); // (-1)^3 != 1
    }

    #[test]
    fn periodicity_on_the_extended_complex() {
        for (m, matrix) in [
            (4usize, IntMatrix::from_i64_rows(&[&[-1]]).unwrap()),
            (3, cycle(3)),
            (2, action_matrix(6, 3, 1).unwrap().matrix().clone()),
        ] {
            let h = cyclic_group_homology(m, &matrix).unwrap();
            let k = matrix.rows();
            let b = IntMatrix::identity(k).sub(&matrix).unwrap();
            let mut norm = IntMatrix::zeros(k, k);
            let mut power = IntMatrix::identity(k);
            for _ in 0..m {
                norm = norm.add(&power).unwrap();
                power = power.mul(&matrix).unwrap();
            }
            let extended = complex_homology(
                k,
                &[b.clone(), norm.clone(), b.clone(), norm, b],
            )
            .unwrap();
            assert_eq!(extended[1], h.h_odd);
            assert_eq!(extended[3], h.h_odd, "degree 3 repeats degree 1");
            assert_eq!(extended[2], h.h_even);
            assert_eq!(extended[4], h.h_even, "degree 4 repeats degree 2");
        }
    }

    #[test]
    fn summand_homology_matches_the_published_tuples() {
        let h = summand_homology(8, 2, 1).unwrap();
        assert_eq!(
            (h.h0, h.h_odd, h.h_even),
            (group(0, &[4]), group(0, &[]), group(0, &[4]))
        );

        let h = summand_homology(10, 5, 2).unwrap();
        assert_eq!(
            (h.h0, h.h_odd, h.h_even),
            (group(1, &[2]), group(0, &[]), group(0, &[2]))
        );

        let h = summand_homology(8, 8, 3).unwrap();
        assert_eq!(
            (h.h0, h.h_odd, h.h_even),
            (group(2, &[]), group(0, &[]), group(0, &[]))
        );

        assert!(summand_homology(8, 3, 1).is_err());
        assert!(summand_homology(8, 1, 1).is_err());
        assert!(summand_homology(8, 8, 1).is_err());
    }

    #[test]
    fn shapiro_reduction_agrees_with_the_full_induced_module() {
        for (n, d, iota) in [(6usize, 2, 1), (6, 3, 1), (8, 2, 1), (8, 4, 1), (12, 4, 2)] {
            let a = action_matrix(n, d, iota).unwrap();
            let full = induced_block(&a, d);
            let over_full_group = cyclic_group_homology(n, &full).unwrap();
            let reduced = summand_homology(n, d, iota).unwrap();
            assert_eq!(over_full_group, reduced, "({n}, {d}, {iota})");
        }
    }

    #[test]
    fn snf_of_generator_minus_identity_has_the_predicted_pattern() {
        for n in 3..=10usize {
            for class in representatives(n).unwrap() {
                if class.d == n {
                    continue;
                }
                let a = action_matrix(n, class.d, class.iota).unwrap();
                let k = a.dim();
                let b = a.matrix().sub(&IntMatrix::identity(k)).unwrap();
                let snf = smith_normal_form(&b);
                assert_eq!(
                    snf.rank,
                    class.iota * (n / class.d - 1),
                    "rank for {} in n = {n}",
                    class.word
                );
                assert_eq!(
                    snf.invariant_factors,
                    [(n as u64 / class.d as u64).into()],
                    "factors for {} in n = {n}",
                    class.word
                );
            }
        }
    }

    #[test]
    fn e2_page_for_the_hexagon_matches_the_figure() {
        let page = e2_page(6, 5).unwrap();
        assert_eq!(page.entry(0, 1).unwrap(), &group(4, &[2, 6]));
        assert_eq!(page.entry(2, 1).unwrap(), &group(0, &[2, 6]));
        assert_eq!(page.entry(4, 1).unwrap(), &group(0, &[2, 6]));
        for p in [1usize, 3, 5] {
            assert!(page.entry(p, 1).unwrap().is_trivial(), "(p, 1) = ({p}, 1)");
        }
        for q in [0usize, 2] {
            assert_eq!(page.entry(0, q).unwrap(), &group(1, &[]));
            assert_eq!(page.entry(1, q).unwrap(), &group(0, &[6]));
            assert_eq!(page.entry(2, q).unwrap(), &group(0, &[]));
            assert_eq!(page.entry(3, q).unwrap(), &group(0, &[6]));
        }
    }

    #[test]
    fn e2_page_for_the_octagon_and_square() {
        let page = e2_page(8, 3).unwrap();
        assert_eq!(page.entry(0, 1).unwrap(), &group(30, &[2, 2, 2, 4]));
        assert_eq!(page.entry(2, 1).unwrap(), &group(0, &[2, 2, 2, 4]));

        let page = e2_page(4, 2).unwrap();
        assert_eq!(page.entry(0, 1).unwrap(), &group(0, &[2]));
        assert_eq!(page.entry(2, 1).unwrap(), &group(0, &[2]));
        assert!(page.entry(1, 1).unwrap().is_trivial());

        assert!(e2_page(6, 1).is_err());
        assert!(e2_page(2, 4).is_err());
        assert!(e2_page(17, 4).is_err());
    }

    #[test]
    fn e2_torsion_at_the_origin_counts_lyndon_words() {
        for n in 3..=12usize {
            let page = e2_page(n, 2).unwrap();
            let mut expected = FGAbelianGroup::free(
                representatives(n).unwrap().iter().map(|c| c.iota - 1).sum(),
            );
            for d in crate::arith::divisors(n as u64) {
                let d = d as usize;
                if d == 1 || d == n {
                    continue;
                }
                for _ in 0..crate::words::moreau_count(d as u64).unwrap() {
                    expected = expected.direct_sum(&FGAbelianGroup::cyclic((n / d) as u64));
                }
            }
            assert_eq!(page.entry(0, 1).unwrap(), &expected, "n = {n}");
        }
    }

    #[test]
    fn group_homology_of_the_cellular_action_matches_the_decomposition() {
        for n in 3..=6usize {
            let a = sigma_on_h1(n).unwrap();
            let cellular = cyclic_group_homology(n, &a).unwrap();
            let mut predicted = CyclicHomology::trivial();
            for s in decompose_h1(n).unwrap().summands {
                let h = match &s.kind {
                    ModuleKind::Induced(_) | ModuleKind::Regular(_) => {
                        summand_homology(n, s.class.d, s.class.iota).unwrap()
                    }
                };
                predicted = predicted.direct_sum(&h);
            }
            assert_eq!(cellular, predicted, "n = {n}");
        }
    }

    #[test]
    fn poincare_coefficients() {
        assert_eq!(poincare_series(6).unwrap(), (1, 4, 1));
        assert_eq!(poincare_series(8).unwrap(), (1, 30, 1));
        assert_eq!(poincare_series(4).unwrap(), (1, 0, 1));
        assert_eq!(poincare_series(3).unwrap(), (1, 0, 1));
        assert!(poincare_series(2).is_err());
    }

    #[test]
    fn identity_audit_values() {
        let audit = identity_audit(6).unwrap();
        assert_eq!(audit.rank, 4);
        assert_eq!(audit.cellular_rank, Some(4));

        let audit = identity_audit(3).unwrap();
        assert_eq!(audit.rank, 0);

        let audit = identity_audit_with(8, false).unwrap();
        assert_eq!(audit.rank, 30);
        assert_eq!(audit.cellular_rank, None);

        for n in 9..=16u64 {
            let audit = identity_audit(n).unwrap();
            assert_eq!(audit.closed_form, audit.rank, "n = {n}");
            assert_eq!(audit.divisor_sum, audit.rank, "n = {n}");
        }
        assert!(identity_audit(17).is_err());
    }
}
