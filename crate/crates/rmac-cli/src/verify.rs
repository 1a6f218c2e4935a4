//! The cross-module verification driver behind `rmac verify`.
//!
//! Seven legs run in a fixed order; each either passes with a one-line
//! detail, fails with the text of the violated contract, or is skipped
//! when it needs cellular computations not available at the chosen
//! depth. Status lines go to standard output (byte-identical across
//! runs); per-leg wall-clock timings go to standard error.

use std::time::Instant;

use clap::ValueEnum;
use num_bigint::BigInt;
use serde::Serialize;

use rmac_core::cellcomplex::{
    build_rmac, build_rmac_capped, quotient_complex, rotation_action, sigma_on_h1, surface_report,
    CellComplex,
};
use rmac_core::intlinalg::{charpoly_finite_order, FGAbelianGroup, IntMatrix};
use rmac_core::modrep::{decompose_h1, predicted_charpoly};
use rmac_core::polygon::{genus_closed_form, quotient_genus, riemann_hurwitz_audit_with};
use rmac_core::simplicial::polygon_boundary;
use rmac_core::spectral::{
    cyclic_group_homology, e2_page, identity_audit_with, summand_homology, CyclicHomology,
};
use rmac_core::words::{moreau_count, representatives};
use rmac_core::{Error, Result};

use crate::render::json_line;

/// How much of the suite to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Depth {
    /// Closed formulas and stabilizer-sized computations only; 3 <= n <= 12.
    Quick,
    /// Everything, including the cellular oracles; 3 <= n <= 8.
    Full,
}

enum Outcome {
    Pass(String),
    Skip(String),
}

use Outcome::{Pass, Skip};

struct Ctx {
    n: usize,
    full: bool,
    cell_cap: Option<usize>,
    sigma: Option<IntMatrix>,
}

impl Ctx {
    fn build(&self) -> Result<CellComplex> {
        let k = polygon_boundary(self.n)?;
        match self.cell_cap {
            Some(cap) => build_rmac_capped(&k, cap),
            None => build_rmac(&k),
        }
    }

    /// The rotation generator on `H_1`, computed once and reused.
    fn sigma(&mut self) -> Result<&IntMatrix> {
        if self.sigma.is_none() {
            self.sigma = Some(sigma_on_h1(self.n)?);
        }
        Ok(self.sigma.as_ref().expect("just filled"))
    }
}

pub fn run(n: usize, depth: Option<Depth>, cell_cap: Option<usize>, json: bool) -> Result<()> {
    let depth = depth.unwrap_or(if n <= 8 { Depth::Full } else { Depth::Quick });
    let full = depth == Depth::Full;
    if full && !(3..=8).contains(&n) {
        return Err(Error::InvalidInput(format!(
            "--depth full runs the cellular oracles and supports 3 <= n <= 8, got {n}"
        )));
    }
    if !full && !(3..=12).contains(&n) {
        return Err(Error::InvalidInput(format!(
            "--depth quick supports 3 <= n <= 12, got {n}"
        )));
    }

    type Leg = (&'static str, fn(&mut Ctx) -> Result<Outcome>);
    let legs: [Leg; 7] = [
        ("genus oracle", leg_genus),
        ("quotient oracle", leg_quotient),
        ("Riemann-Hurwitz audit", leg_riemann_hurwitz),
        ("decomposition rank and charpoly", leg_decomposition),
        ("group homology agreement", leg_group_homology),
        ("E2 page assembly", leg_e2_page),
        ("identity audit", leg_identity),
    ];

    #[derive(Serialize)]
    struct LegOut {
        index: usize,
        name: &'static str,
        status: &'static str,
        detail: String,
    }
    #[derive(Serialize)]
    struct VerifyOut {
        n: usize,
        depth: &'static str,
        legs: Vec<LegOut>,
        passed: usize,
        failed: usize,
        skipped: usize,
    }

    let mut ctx = Ctx {
        n,
        full,
        cell_cap,
        sigma: None,
    };
    let total = legs.len();
    let name_width = legs.iter().map(|(name, _)| name.len()).max().unwrap_or(0);
    let mut results = Vec::new();
    for (i, (name, leg)) in legs.iter().enumerate() {
        let start = Instant::now();
        let (status, detail) = match leg(&mut ctx) {
            Ok(Pass(detail)) => ("PASS", detail),
            Ok(Skip(reason)) => ("SKIP", reason),
            Err(e) => ("FAIL", e.to_string()),
        };
        eprintln!(
            "[{}/{total}] {name}: {:.3}s",
            i + 1,
            start.elapsed().as_secs_f64()
        );
        if !json {
            println!(
                "[{}/{total}] {name:<name_width$}  {status}  {detail}",
                i + 1
            );
        }
        results.push(LegOut {
            index: i + 1,
            name,
            status,
            detail,
        });
    }
    let count = |status| results.iter().filter(|r| r.status == status).count();
    let (passed, failed, skipped) = (count("PASS"), count("FAIL"), count("SKIP"));
    if json {
        json_line(&VerifyOut {
            n,
            depth: if full { "full" } else { "quick" },
            legs: results,
            passed,
            failed,
            skipped,
        });
    } else {
        println!(
            "{passed} passed, {failed} failed, {skipped} skipped (n = {n}, depth = {})",
            if full { "full" } else { "quick" }
        );
    }
    if failed > 0 {
        return Err(Error::Verification(format!(
            "{failed} of {total} verification legs failed for n = {n}"
        )));
    }
    Ok(())
}

fn leg_genus(ctx: &mut Ctx) -> Result<Outcome> {
    if !ctx.full {
        return Ok(Skip("cellular oracle, run with --depth full".into()));
    }
    let report = surface_report(&ctx.build()?)?;
    let expected = genus_closed_form(ctx.n as u64)?;
    match report.genus {
        Some(g) if BigInt::from(g) == expected => {
            Ok(Pass(format!("cellular genus {g} matches the closed form")))
        }
        _ => Err(Error::Verification(format!(
            "cellular surface report {:?} does not give the closed-form genus {expected}",
            report.genus
        ))),
    }
}

fn leg_quotient(ctx: &mut Ctx) -> Result<Outcome> {
    if !ctx.full {
        return Ok(Skip("cellular oracle, run with --depth full".into()));
    }
    let total = ctx.build()?;
    let action = rotation_action(&total, ctx.n)?;
    let report = surface_report(&quotient_complex(&total, &action)?)?;
    let expected = quotient_genus(ctx.n as u64)?;
    match report.genus {
        Some(g) if BigInt::from(g) == expected => Ok(Pass(format!(
            "cellular quotient genus {g} matches the closed form"
        ))),
        _ => Err(Error::Verification(format!(
            "cellular quotient report {:?} does not give the closed-form genus {expected}",
            report.genus
        ))),
    }
}

fn leg_riemann_hurwitz(ctx: &mut Ctx) -> Result<Outcome> {
    let report = riemann_hurwitz_audit_with(ctx.n as u64, ctx.full)?;
    Ok(Pass(format!(
        "branch accounting closes: genus {} over quotient genus {}",
        report.genus_total, report.genus_quotient
    )))
}

fn leg_decomposition(ctx: &mut Ctx) -> Result<Outcome> {
    let n = ctx.n;
    let dec = decompose_h1(n)?;
    let predicted = predicted_charpoly(&dec)?;
    if predicted.degree() != Some(dec.total_rank) {
        return Err(Error::Verification(format!(
            "predicted characteristic polynomial has degree {:?}, expected rank {}",
            predicted.degree(),
            dec.total_rank
        )));
    }
    if !ctx.full {
        return Ok(Pass(format!(
            "rank {} = 2g over {} summands; predicted charpoly degree matches",
            dec.total_rank,
            dec.summands.len()
        )));
    }
    let sigma = ctx.sigma()?;
    let cellular = charpoly_finite_order(sigma, n as u64)?;
    if cellular.poly != predicted {
        return Err(Error::Verification(format!(
            "cellular characteristic polynomial {} differs from the predicted {}",
            cellular.factored(),
            predicted
        )));
    }
    Ok(Pass(format!(
        "rank {} = 2g; cellular characteristic polynomial {} matches",
        dec.total_rank,
        cellular.factored()
    )))
}

fn leg_group_homology(ctx: &mut Ctx) -> Result<Outcome> {
    let n = ctx.n;
    let classes = representatives(n)?;
    let mut predicted = CyclicHomology::trivial();
    for class in &classes {
        predicted = predicted.direct_sum(&summand_homology(n, class.d, class.iota)?);
    }
    if !ctx.full {
        return Ok(Pass(format!(
            "{} summand homologies verified against the stabilizer computation",
            classes.len()
        )));
    }
    let sigma = ctx.sigma()?.clone();
    let cellular = cyclic_group_homology(n, &sigma)?;
    if cellular != predicted {
        return Err(Error::Verification(format!(
            "H_*(Z_{n}; H_1) = ({}, {}, {}) differs from the summand direct sum ({}, {}, {})",
            cellular.h0,
            cellular.h_odd,
            cellular.h_even,
            predicted.h0,
            predicted.h_odd,
            predicted.h_even
        )));
    }
    Ok(Pass(format!(
        "H_*(Z_{n}; H_1) = ({}, {}, {}) matches the {}-summand direct sum",
        cellular.h0,
        cellular.h_odd,
        cellular.h_even,
        classes.len()
    )))
}

fn leg_e2_page(ctx: &mut Ctx) -> Result<Outcome> {
    let n = ctx.n;
    let page = e2_page(n, 4)?;
    let entry = page.entry(0, 1).expect("within range");
    // Independent census: free rank from the gap numbers, torsion
    // Z_(n/d) once per Lyndon word of each proper length d.
    let free: usize = representatives(n)?.iter().map(|c| c.iota - 1).sum();
    let mut expected = FGAbelianGroup::free(free);
    for d in (2..n).filter(|&d| n.is_multiple_of(d)) {
        for _ in 0..moreau_count(d as u64)? {
            expected = expected.direct_sum(&FGAbelianGroup::cyclic((n / d) as u64));
        }
    }
    if entry != &expected {
        return Err(Error::Verification(format!(
            "E2 entry (0, 1) = {entry} differs from the word census {expected}"
        )));
    }
    Ok(Pass(format!("E2(0,1) = {entry}; collapse column verified")))
}

fn leg_identity(ctx: &mut Ctx) -> Result<Outcome> {
    let cellular = ctx.full && ctx.n <= 8;
    let audit = identity_audit_with(ctx.n as u64, cellular)?;
    Ok(Pass(format!(
        "R_{} = {} across {} independent expressions",
        ctx.n,
        audit.rank,
        if cellular { 5 } else { 4 }
    )))
}
