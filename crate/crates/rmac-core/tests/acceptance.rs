//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on
//! any failure. Each criterion carries a wall-clock budget; exceeding it
//! fails the criterion even when the values are right.

use std::time::{Duration, Instant};

use num_bigint::BigInt;

use rmac_core::cellcomplex::{
    build_cc, build_rmac, quotient_complex, rotation_action, sigma_on_h1, surface_report,
};
use rmac_core::intlinalg::{charpoly_finite_order, smith_normal_form, FGAbelianGroup, IntMatrix};
use rmac_core::modrep::{decompose_h1, predicted_charpoly, ModuleKind};
use rmac_core::polygon::{genus_closed_form, quotient_genus};
use rmac_core::simplicial::{automorphism_group, barycentric_subdivision, polygon_boundary};
use rmac_core::spectral::{
    cyclic_group_homology, e2_page, identity_audit_with, poincare_series, summand_homology,
    CyclicHomology,
};
use rmac_core::words::{
    count_l, lyndon_words, moreau_count, necklace_count, representative_families, representatives,
};
use rmac_core::{Error, Result};

/// A named criterion body with its wall-clock budget in seconds.
type Criterion = (&'static str, u64, fn() -> Result<String>);

fn main() {
    let criteria: [Criterion; 10] = [
        ("genus oracle, n = 3..9", 330, genus_oracle),
        ("quotient oracle, n = 3..8", 60, quotient_oracle),
        ("homology tables for K_5 and K_6", 10, homology_tables),
        ("word combinatorics", 1, word_combinatorics),
        ("decomposition displays, n = 5..10", 5, decomposition_displays),
        ("summand homology tuples, n = 8 and 10", 5, summand_tuples),
        ("E2 figures and collapse column", 10, e2_figures),
        ("cross-action agreement, n = 3..8", 120, cross_action),
        ("identity audit and Poincare series", 1, identity_and_poincare),
        ("property suites", 120, property_suites),
    ];
    let total = criteria.len();
    let mut failed = 0;
    for (i, (name, budget_secs, body)) in criteria.iter().enumerate() {
        let budget = Duration::from_secs(*budget_secs);
        let start = Instant::now();
        let result = body();
        let elapsed = start.elapsed();
        let over_budget = elapsed > budget;
        let (status, detail) = match result {
            Ok(_) if over_budget => (
                "FAIL",
                format!("took {elapsed:.2?}, budget {budget:.0?}"),
            ),
            Ok(detail) => ("PASS", detail),
            Err(e) => ("FAIL", e.to_string()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "[{:>2}/{total}] {status}  {name:<38}  ({:>7.2?})  {detail}",
            i + 1,
            elapsed
        );
    }
    if failed > 0 {
        println!("{failed}/{total} acceptance criteria FAILED");
        std::process::exit(1);
    }
    println!("{total}/{total} acceptance criteria passed");
}

fn verify(condition: bool, message: impl Into<String>) -> Result<()> {
    if condition {
        Ok(())
    } else {
        Err(Error::Verification(message.into()))
    }
}

/// Criterion 1: the cellular genus equals `1 + (n-4) 2^(n-3)` for n = 3..9, with
/// n <= 8 under 30 s and n = 9 under 5 min.
fn genus_oracle() -> Result<String> {
    let mut seen = Vec::new();
    let mut check = |n: usize| -> Result<()> {
        let report = surface_report(&build_rmac(&polygon_boundary(n)?)?)?;
        let expected = genus_closed_form(n as u64)?;
        let genus = report.genus.ok_or_else(|| {
            Error::Verification(format!("the complex over K_{n} is not a surface"))
        })?;
        verify(
            BigInt::from(genus) == expected,
            format!("genus {genus} for n = {n}, closed form {expected}"),
        )?;
        seen.push(genus.to_string());
        Ok(())
    };
    let small = Instant::now();
    for n in 3..=8 {
        check(n)?;
    }
    let small_elapsed = small.elapsed();
    verify(
        small_elapsed < Duration::from_secs(30),
        format!("n <= 8 took {small_elapsed:.2?}, budget 30s"),
    )?;
    let nine = Instant::now();
    check(9)?;
    let nine_elapsed = nine.elapsed();
    verify(
        nine_elapsed < Duration::from_secs(300),
        format!("n = 9 took {nine_elapsed:.2?}, budget 5min"),
    )?;
    Ok(format!("genus = {}", seen.join(", ")))
}

/// Criterion 2: the quotient by the rotation has genus `quotient_genus(n)` for
/// n = 3..8; n = 6 gives 2.
fn quotient_oracle() -> Result<String> {
    let mut seen = Vec::new();
    for n in 3..=8usize {
        let total = build_rmac(&polygon_boundary(n)?)?;
        let action = rotation_action(&total, n)?;
        let report = surface_report(&quotient_complex(&total, &action)?)?;
        let expected = quotient_genus(n as u64)?;
        let genus = report.genus.ok_or_else(|| {
            Error::Verification(format!("the quotient for n = {n} is not a surface"))
        })?;
        verify(
            BigInt::from(genus) == expected,
            format!("quotient genus {genus} for n = {n}, closed form {expected}"),
        )?;
        if n == 6 {
            verify(genus == 2, format!("quotient genus for n = 6 is {genus}"))?;
        }
        seen.push(genus.to_string());
    }
    Ok(format!("quotient genus = {}", seen.join(", ")))
}

/// Criterion 3: H_1 = Z^10 over K_5 and Z^34 over K_6, H_2 = Z in both.
fn homology_tables() -> Result<String> {
    for (n, rank) in [(5usize, 10usize), (6, 34)] {
        let homology = build_rmac(&polygon_boundary(n)?)?.homology()?;
        verify(
            homology[1] == FGAbelianGroup::free(rank),
            format!("H_1 over K_{n} is {}, expected Z^{rank}", homology[1]),
        )?;
        verify(
            homology[2] == FGAbelianGroup::free(1),
            format!("H_2 over K_{n} is {}, expected Z", homology[2]),
        )?;
    }
    Ok("H_1 = Z^10 and Z^34, H_2 = Z".into())
}

/// Criterion 4: the length-6 Lyndon list, L(6,2), necklace_count(6), and the Witt
/// identity up to n = 16.
fn word_combinatorics() -> Result<String> {
    let words: Vec<String> = lyndon_words(6)?.iter().map(ToString::to_string).collect();
    let expected = [
        "000001", "000011", "000101", "000111", "001011", "001101", "001111", "010111", "011111",
    ];
    verify(words == expected, format!("Lyndon words of length 6: {words:?}"))?;
    verify(count_l(6, 2)? == 4, "L(6,2) != 4")?;
    verify(necklace_count(6)? == 14, "necklace_count(6) != 14")?;
    for n in 1..=16u64 {
        let witt: u64 = (1..=n)
            .filter(|&d| n.is_multiple_of(d))
            .map(|d| Ok(d * moreau_count(d)?))
            .sum::<Result<u64>>()?;
        verify(witt == 1 << n, format!("Witt identity fails at n = {n}"))?;
    }
    Ok("9 words of length 6; Witt identity holds to n = 16".into())
}

/// Kind multiset of a decomposition: sorted (stabilizer order, module
/// rank, class count) triples, the total regular copy count, and the
/// total rank.
type DecompositionShape = (Vec<(usize, usize, usize)>, usize, usize);

fn decomposition_shape(n: usize) -> Result<DecompositionShape> {
    let dec = decompose_h1(n)?;
    let mut induced: Vec<(usize, usize, usize)> = Vec::new();
    let mut regular = 0usize;
    for s in &dec.summands {
        match &s.kind {
            ModuleKind::Induced(a) => {
                let key = (a.group_order(), a.dim());
                match induced.iter_mut().find(|(g, r, _)| (*g, *r) == key) {
                    Some((_, _, count)) => *count += 1,
                    None => induced.push((key.0, key.1, 1)),
                }
            }
            ModuleKind::Regular(r) => regular += r.copies(),
        }
    }
    induced.sort_unstable();
    Ok((induced, regular, dec.total_rank))
}

/// Criterion 5: the decomposition kinds/multiplicities for n = 5..10 with total
/// rank 2 * genus.
fn decomposition_displays() -> Result<String> {
    let expected: [(usize, DecompositionShape); 6] = [
        (5, (vec![], 2, 10)),
        (6, (vec![(2, 1, 2), (3, 2, 1)], 4, 34)),
        (7, (vec![], 14, 98)),
        (8, (vec![(2, 1, 3), (4, 3, 1)], 30, 258)),
        (9, (vec![(3, 2, 2)], 70, 642)),
        (10, (vec![(2, 1, 4), (2, 3, 2), (5, 4, 1)], 148, 1538)),
    ];
    for (n, shape_expected) in &expected {
        let shape = decomposition_shape(*n)?;
        verify(
            &shape == shape_expected,
            format!("decomposition for n = {n}: got {shape:?}"),
        )?;
        let twice_genus = BigInt::from(2) * genus_closed_form(*n as u64)?;
        verify(
            BigInt::from(shape.2) == twice_genus,
            format!("total rank for n = {n} is not 2g"),
        )?;
    }
    Ok("kinds, multiplicities and ranks match for n = 5..10".into())
}

/// Criterion 6: the printed degree-0 homology tuples, n = 8 and n = 10.
fn summand_tuples() -> Result<String> {
    let z = FGAbelianGroup::free;
    let c = FGAbelianGroup::cyclic;
    let z_plus_c2 = z(1).direct_sum(&c(2));
    // (n, d, iota, expected h0, expected class count)
    let cases: [(usize, usize, usize, &FGAbelianGroup, usize); 10] = [
        (8, 2, 1, &c(4), 1),
        (8, 4, 1, &c(2), 3),
        (8, 8, 2, &z(1), 16),
        (8, 8, 3, &z(2), 7),
        (10, 2, 1, &c(5), 1),
        (10, 5, 1, &c(2), 4),
        (10, 5, 2, &z_plus_c2, 2),
        (10, 10, 2, &z(1), 40),
        (10, 10, 3, &z(2), 42),
        (10, 10, 4, &z(3), 8),
    ];
    for (n, d, iota, h0, count) in cases {
        let homology = summand_homology(n, d, iota)?;
        verify(
            &homology.h0 == h0,
            format!("h0 for (n, d, iota) = ({n}, {d}, {iota}) is {}", homology.h0),
        )?;
        let family_size = representative_families(n)?
            .iter()
            .find(|f| f.d == d && f.iota == iota)
            .map(|f| f.classes.len());
        verify(
            family_size == Some(count),
            format!("class count for ({n}, {d}, {iota}) is {family_size:?}, expected {count}"),
        )?;
    }
    Ok("all 10 printed tuples and counts match".into())
}

/// Criterion 7: the published second pages for n = 6 and n = 8 entry-for-entry,
/// and the vanishing (1,1) entry through n = 12.
fn e2_figures() -> Result<String> {
    let group = |rank: usize, factors: &[u64]| {
        FGAbelianGroup::new(rank, factors.iter().map(|&f| f.into()).collect()).unwrap()
    };
    for (n, origin, even_torsion) in [
        (6usize, group(4, &[2, 6]), group(0, &[2, 6])),
        (8, group(30, &[2, 2, 2, 4]), group(0, &[2, 2, 2, 4])),
    ] {
        let page = e2_page(n, 4)?;
        for q in [0usize, 2] {
            for p in 0..=4usize {
                let expected = if p == 0 {
                    FGAbelianGroup::free(1)
                } else if p % 2 == 1 {
                    FGAbelianGroup::cyclic(n as u64)
                } else {
                    FGAbelianGroup::trivial()
                };
                verify(
                    page.entry(p, q) == Some(&expected),
                    format!("entry ({p}, {q}) for n = {n}"),
                )?;
            }
        }
        verify(
            page.entry(0, 1) == Some(&origin),
            format!("entry (0, 1) for n = {n}: {:?}", page.entry(0, 1)),
        )?;
        for p in [2usize, 4] {
            verify(
                page.entry(p, 1) == Some(&even_torsion),
                format!("entry ({p}, 1) for n = {n}"),
            )?;
        }
        for p in [1usize, 3] {
            verify(
                page.entry(p, 1) == Some(&FGAbelianGroup::trivial()),
                format!("entry ({p}, 1) for n = {n} must vanish"),
            )?;
        }
    }
    for n in 3..=12usize {
        let page = e2_page(n, 2)?;
        verify(
            page.entry(1, 1) == Some(&FGAbelianGroup::trivial()),
            format!("E2(1,1) nonzero for n = {n}"),
        )?;
    }
    Ok("figures for n = 6, 8 match; E2(1,1) = 0 for n = 3..12".into())
}

/// Criterion 8: the cellular rotation action on H_1 has the predicted group
/// homology and characteristic polynomial for n = 3..8.
fn cross_action() -> Result<String> {
    for n in 3..=8usize {
        let sigma = sigma_on_h1(n)?;
        let cellular = cyclic_group_homology(n, &sigma)?;
        let mut predicted = CyclicHomology::trivial();
        for class in representatives(n)? {
            predicted = predicted.direct_sum(&summand_homology(n, class.d, class.iota)?);
        }
        verify(
            cellular == predicted,
            format!(
                "group homology for n = {n}: cellular ({}, {}, {}), predicted ({}, {}, {})",
                cellular.h0,
                cellular.h_odd,
                cellular.h_even,
                predicted.h0,
                predicted.h_odd,
                predicted.h_even
            ),
        )?;
        let from_cells = charpoly_finite_order(&sigma, n as u64)?;
        let from_words = predicted_charpoly(&decompose_h1(n)?)?;
        verify(
            from_cells.poly == from_words,
            format!("characteristic polynomial mismatch for n = {n}"),
        )?;
    }
    Ok("group homology and charpoly agree for n = 3..8".into())
}

/// Criterion 9: R_n closed forms for n = 3..16 and the two published Poincare
/// triples.
fn identity_and_poincare() -> Result<String> {
    for n in 3..=16u64 {
        identity_audit_with(n, false)?;
    }
    verify(
        poincare_series(6)? == (1, 4, 1),
        "poincare_series(6) != (1, 4, 1)",
    )?;
    verify(
        poincare_series(8)? == (1, 30, 1),
        "poincare_series(8) != (1, 30, 1)",
    )?;
    Ok("R_n identities hold for n = 3..16; series (1,4,1) and (1,30,1)".into())
}

/// Splitmix-style deterministic generator for the random-matrix suite.
struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn below(&mut self, bound: u64) -> u64 {
        self.next() % bound
    }
}

/// Criterion 10: Boundary squares vanish on every built complex; the Smith
/// contract holds on 1000 random small matrices; (M - I) has the
/// predicted invariant factors for every in-scope class with n <= 12;
/// the polygon automorphism groups are dihedral.
fn property_suites() -> Result<String> {
    // Boundary-square checks over freshly built complexes of every flavor.
    let mut complexes = Vec::new();
    for n in 3..=8usize {
        let total = build_rmac(&polygon_boundary(n)?)?;
        let action = rotation_action(&total, n)?;
        complexes.push(quotient_complex(&total, &action)?);
        complexes.push(total);
        if n <= 6 {
            complexes.push(build_cc(&polygon_boundary(n)?)?.0);
        }
    }
    for complex in &complexes {
        let boundaries = complex.boundaries();
        for k in 0..boundaries.len().saturating_sub(1) {
            verify(
                boundaries[k].mul(&boundaries[k + 1])?.is_zero(),
                "boundary square does not vanish",
            )?;
        }
    }
    // The same vanishing for simplicial chain complexes, including a
    // barycentric subdivision.
    for k in [
        polygon_boundary(7)?,
        barycentric_subdivision(&polygon_boundary(5)?)?,
    ] {
        let boundaries = k.boundary_matrices();
        for i in 0..boundaries.len().saturating_sub(1) {
            verify(
                boundaries[i].mul(&boundaries[i + 1])?.is_zero(),
                "simplicial boundary square does not vanish",
            )?;
        }
    }

    // Smith contract on 1000 deterministic pseudo-random matrices.
    let mut rng = Rng(0x5eed);
    for _ in 0..1000 {
        let rows = 1 + rng.below(6) as usize;
        let cols = 1 + rng.below(6) as usize;
        let a = IntMatrix::from_fn(rows, cols, |_, _| BigInt::from(rng.below(19) as i64 - 9));
        let snf = smith_normal_form(&a);
        verify(
            snf.u.mul(&a)?.mul(&snf.v)? == snf.d,
            "U * A * V != D on a random matrix",
        )?;
        verify(
            snf.u.mul(&snf.u_inv)?.is_identity() && snf.v.mul(&snf.v_inv)?.is_identity(),
            "Smith transforms are not unimodular",
        )?;
        let mut previous: Option<BigInt> = None;
        for i in 0..rows.min(cols) {
            let entry = snf.d[(i, i)].clone();
            if let Some(p) = &previous {
                use num_integer::Integer;
                use num_traits::Zero;
                verify(
                    p.is_zero() && entry.is_zero() || !p.is_zero() && entry.is_multiple_of(p),
                    "diagonal is not a divisibility chain",
                )?;
            }
            previous = Some(entry);
        }
    }

    // (M - I) has Smith form diag(1, ..., 1, n/d, 0^(iota-1)) for every
    // in-scope class with d < n, up to n = 12.
    let mut classes_checked = 0usize;
    for n in 3..=12usize {
        for class in representatives(n)? {
            if class.d == n {
                continue;
            }
            let a = rmac_core::modrep::action_matrix(n, class.d, class.iota)?;
            let m_minus_i = a.matrix().sub(&IntMatrix::identity(a.dim()))?;
            let snf = smith_normal_form(&m_minus_i);
            let expected_rank = class.iota * (n / class.d - 1);
            verify(
                snf.rank == expected_rank && snf.invariant_factors == [(n as u64 / class.d as u64).into()],
                format!(
                    "Smith pattern for (n, d, iota) = ({n}, {}, {})",
                    class.d, class.iota
                ),
            )?;
            classes_checked += 1;
        }
    }

    // Dihedral automorphism groups.
    for n in 3..=8usize {
        let order = automorphism_group(&polygon_boundary(n)?)?.len();
        verify(order == 2 * n, format!("Aut(K_{n}) has order {order}"))?;
    }

    Ok(format!(
        "boundaries square to zero on {} complexes; 1000 Smith contracts; {} (M - I) patterns; dihedral groups",
        complexes.len(),
        classes_checked
    ))
}
