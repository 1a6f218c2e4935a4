//! Closed-form genus results for the surface `Z_(K_n)(D^1, S^0)` and its
//! rotation quotient, the Riemann–Hurwitz audit tying them together, and
//! hypercube-graph embedding reports.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::cellcomplex::{
    build_rmac, fixed_point_census, quotient_complex, rotation_action, surface_report, PeriodClass,
};
use crate::error::{Error, Result};
use crate::simplicial::polygon_boundary;
use crate::words::{moreau_count, necklace_count_big};

/// Genus of the closed orientable surface `Z_(K_n)(D^1, S^0)`:
/// `1 + (n-4) * 2^(n-3)`.
pub fn genus_closed_form(n: u64) -> Result<BigInt> {
    if n < 3 {
        return Err(Error::InvalidInput(format!("genus requires n >= 3, got {n}")));
    }
    Ok(BigInt::one() + (BigInt::from(n) - 4) * (BigInt::one() << (n - 3)))
}

/// Genus of the quotient surface by the rotation action:
/// `1 + 2^(n-3) - (1/2n) * sum over d | n of phi(d) * 2^(n/d)`,
/// i.e. `1 + 2^(n-3) - necklace_count(n)/2`.
pub fn quotient_genus(n: u64) -> Result<BigInt> {
    if n < 3 {
        return Err(Error::InvalidInput(format!(
            "quotient genus requires n >= 3, got {n}"
        )));
    }
    let necklaces = BigInt::from(necklace_count_big(n)?);
    let (half, rem) = num_integer::Integer::div_rem(&necklaces, &BigInt::from(2));
    if !rem.is_zero() {
        return Err(Error::Verification(format!(
            "necklace count {necklaces} for n = {n} is odd; the genus formula requires it even"
        )));
    }
    Ok(BigInt::one() + (BigInt::one() << (n - 3)) - half)
}

fn serialize_bigint<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(small) => s.serialize_i64(small),
        None => s.serialize_str(&v.to_string()),
    }
}

/// Euler characteristics and genus of the surface and its quotient, with
/// the branch data entering the Riemann–Hurwitz count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenusReport {
    pub n: u64,
    pub genus_total: i64,
    pub genus_quotient: i64,
    pub euler_total: i64,
    pub euler_quotient: i64,
    /// All period classes of vertices; classes of full period contribute
    /// no branching.
    pub branch_terms: Vec<PeriodClass>,
}

/// Recomputes the quotient Euler characteristic from
/// `chi(X) = n * chi(X/G) - sum over branch orbits of (n - n/n_x)`
/// using the fixed-point census, and checks it against [`quotient_genus`].
/// For `n <= 8` the quotient cell complex is built and checked as well.
pub fn riemann_hurwitz_audit(n: u64) -> Result<GenusReport> {
    riemann_hurwitz_audit_with(n, n <= 8)
}

/// [`riemann_hurwitz_audit`] with the cellular cross-check made explicit.
pub fn riemann_hurwitz_audit_with(n: u64, cellular: bool) -> Result<GenusReport> {
    if !(3..=12).contains(&n) {
        return Err(Error::InvalidInput(format!(
            "the audit is defined for 3 <= n <= 12, got {n}"
        )));
    }
    let genus_total = genus_closed_form(n)?
        .to_i64()
        .expect("genus fits for n <= 12");
    let euler_total = 2 - 2 * genus_total;
    let census = fixed_point_census(n as usize)?;
    let branch_sum: i64 = census
        .iter()
        .map(|c| c.orbit_count as i64 * (n as i64 - c.period as i64))
        .sum();
    // chi(X) = n chi(Q) - branch_sum, so n must divide the corrected total.
    let corrected = euler_total + branch_sum;
    if corrected % n as i64 != 0 {
        return Err(Error::Verification(format!(
            "chi(X) + branching = {corrected} is not divisible by n = {n}"
        )));
    }
    let euler_quotient = corrected / n as i64;
    if euler_quotient % 2 != 0 {
        return Err(Error::Verification(format!(
            "quotient Euler characteristic {euler_quotient} is odd"
        )));
    }
    let genus_quotient = (2 - euler_quotient) / 2;
    let formula = quotient_genus(n)?;
    if BigInt::from(genus_quotient) != formula {
        return Err(Error::Verification(format!(
            "Riemann–Hurwitz gives quotient genus {genus_quotient}, formula gives {formula}"
        )));
    }
    if cellular {
        let complex = build_rmac(&polygon_boundary(n as usize)?)?;
        let action = rotation_action(&complex, n as usize)?;
        let quotient = quotient_complex(&complex, &action)?;
        let report = surface_report(&quotient)?;
        if report.genus != Some(genus_quotient as u64) {
            return Err(Error::Verification(format!(
                "quotient complex reports genus {:?}, formula gives {genus_quotient}",
                report.genus
            )));
        }
        if report.euler != euler_quotient {
            return Err(Error::Verification(format!(
                "quotient complex has Euler characteristic {}, audit gives {euler_quotient}",
                report.euler
            )));
        }
    }
    Ok(GenusReport {
        n,
        genus_total,
        genus_quotient,
        euler_total,
        euler_quotient,
        branch_terms: census,
    })
}

/// Cell counts of the hypercube graph `Q_n` inside `Z_(K_n)(D^1, S^0)`
/// and the resulting genus bounds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypercubeReport {
    pub n: u64,
    #[serde(serialize_with = "serialize_bigint")]
    pub vertices: BigInt,
    #[serde(serialize_with = "serialize_bigint")]
    pub edges: BigInt,
    #[serde(serialize_with = "serialize_bigint")]
    pub faces: BigInt,
    #[serde(serialize_with = "serialize_bigint")]
    pub euler: BigInt,
    /// Genus of the surface the embedding lives on: a lower bound for the
    /// genus of any surface containing `Q_n` with quadrilateral 2-cells.
    #[serde(serialize_with = "serialize_bigint")]
    pub genus_lower_bound: BigInt,
    /// Genus of the rotation quotient: an upper bound for the genus of
    /// `Q_n / Z_n`.
    #[serde(serialize_with = "serialize_bigint")]
    pub quotient_upper_bound: BigInt,
}

/// Counts `V = 2^n`, `E = n 2^(n-1)`, `F = n 2^(n-2)` of the cubical
/// surface containing `Q_n` and reports the genus bounds. The identity
/// `V - E + F = 2 - 2 * genus` is re-verified exactly.
pub fn hypercube_report(n: u64) -> Result<HypercubeReport> {
    if n < 3 {
        return Err(Error::InvalidInput(format!(
            "hypercube report requires n >= 3, got {n}"
        )));
    }
    let vertices = BigInt::one() << n;
    let edges = BigInt::from(n) << (n - 1);
    let faces = BigInt::from(n) << (n - 2);
    // All 2-cells are quadrilaterals, so edge/face incidence gives 2E = 4F.
    assert_eq!(&edges * 2, &faces * 4, "quadrilateral incidence count");
    let euler = &vertices - &edges + &faces;
    let genus = genus_closed_form(n)?;
    if euler != BigInt::from(2) - 2 * &genus {
        return Err(Error::Verification(format!(
            "Euler count {euler} disagrees with 2 - 2g = {}",
            BigInt::from(2) - 2 * &genus
        )));
    }
    Ok(HypercubeReport {
        n,
        vertices,
        edges,
        faces,
        euler,
        genus_lower_bound: genus,
        quotient_upper_bound: quotient_genus(n)?,
    })
}

/// Total branching degree `sum over d | n of M(d) * (n - d)` appearing in
/// the Riemann–Hurwitz count; exposed for the verification pipeline.
pub fn branch_degree(n: u64) -> Result<BigInt> {
    let mut sum = BigInt::zero();
    for d in crate::arith::divisors(n) {
        sum += BigInt::from(moreau_count(d)?) * BigInt::from(n - d);
    }
    assert!(!sum.is_negative());
    Ok(sum)
}
