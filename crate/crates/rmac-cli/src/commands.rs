//! Implementations of the non-verify subcommands.

use serde::Serialize;
use serde_json::Value;

use rmac_core::cellcomplex::{
    build_rmac, build_rmac_capped, quotient_complex, rotation_action, surface_report, CellComplex,
    PeriodClass, SurfaceReport,
};
use rmac_core::intlinalg::FGAbelianGroup;
use rmac_core::modrep::{decompose_h1, ModuleKind, Summand};
use rmac_core::polygon::{genus_closed_form, quotient_genus, riemann_hurwitz_audit};
use rmac_core::simplicial::{automorphism_group, automorphism_group_capped, SimplicialComplex};
use rmac_core::spectral::{e2_page as build_e2_page, poincare_series};
use rmac_core::words::representative_families;
use rmac_core::{Error, Result};

use crate::render::{bigint_json, json_line, key_values, table};
use crate::ComplexInput;

fn build(k: &SimplicialComplex, cell_cap: Option<usize>) -> Result<CellComplex> {
    match cell_cap {
        Some(cap) => build_rmac_capped(k, cap),
        None => build_rmac(k),
    }
}

pub fn genus(n: u64, quotient: bool, audit: bool, json: bool) -> Result<()> {
    #[derive(Serialize)]
    struct GenusOut {
        n: u64,
        genus: Value,
        #[serde(skip_serializing_if = "Option::is_none")]
        quotient_genus: Option<Value>,
        #[serde(skip_serializing_if = "Option::is_none")]
        euler: Option<i64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        quotient_euler: Option<i64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        branch_classes: Option<Vec<PeriodClass>>,
    }

    let out = if audit {
        let report = riemann_hurwitz_audit(n)?;
        GenusOut {
            n,
            genus: Value::from(report.genus_total),
            quotient_genus: Some(Value::from(report.genus_quotient)),
            euler: Some(report.euler_total),
            quotient_euler: Some(report.euler_quotient),
            branch_classes: Some(report.branch_terms),
        }
    } else {
        GenusOut {
            n,
            genus: bigint_json(&genus_closed_form(n)?),
            quotient_genus: quotient
                .then(|| quotient_genus(n).map(|g| bigint_json(&g)))
                .transpose()?,
            euler: None,
            quotient_euler: None,
            branch_classes: None,
        }
    };
    if json {
        json_line(&out);
        return Ok(());
    }
    let mut rows = vec![("n", out.n.to_string()), ("genus", out.genus.to_string())];
    if let Some(q) = &out.quotient_genus {
        rows.push(("quotient genus", q.to_string()));
    }
    if let Some(e) = out.euler {
        rows.push(("euler", e.to_string()));
    }
    if let Some(e) = out.quotient_euler {
        rows.push(("quotient euler", e.to_string()));
    }
    key_values(&rows);
    if let Some(classes) = &out.branch_classes {
        println!("branch classes:");
        table(
            &["period", "orbits", "vertices", "stabilizer"],
            &classes
                .iter()
                .map(|c| {
                    vec![
                        c.period.to_string(),
                        c.orbit_count.to_string(),
                        c.vertex_count.to_string(),
                        c.stabilizer_order.to_string(),
                    ]
                })
                .collect::<Vec<_>>(),
        );
    }
    Ok(())
}

#[derive(Serialize)]
struct ComplexReport {
    complex: String,
    cell_counts: Vec<usize>,
    euler: i64,
    homology: Vec<FGAbelianGroup>,
    #[serde(skip_serializing_if = "Option::is_none")]
    genus: Option<u64>,
}

impl ComplexReport {
    fn new(label: String, complex: &CellComplex, report: &SurfaceReport) -> ComplexReport {
        ComplexReport {
            complex: label,
            cell_counts: complex.cell_counts(),
            euler: report.euler,
            homology: report.homology.clone(),
            genus: report.genus,
        }
    }

    fn print(&self) {
        let mut rows = vec![
            ("complex".to_string(), self.complex.clone()),
            (
                "cells".to_string(),
                self.cell_counts
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join("  "),
            ),
            ("euler".to_string(), self.euler.to_string()),
        ];
        for (k, h) in self.homology.iter().enumerate() {
            rows.push((format!("H_{k}"), h.to_string()));
        }
        if let Some(g) = self.genus {
            rows.push(("genus".to_string(), g.to_string()));
        }
        key_values(&rows);
    }
}

pub fn homology(input: &ComplexInput, cell_cap: Option<usize>, json: bool) -> Result<()> {
    let k = input.load()?;
    let complex = build(&k, cell_cap)?;
    let report = surface_report(&complex)?;
    let out = ComplexReport::new(input.label(), &complex, &report);
    if json {
        json_line(&out);
    } else {
        out.print();
    }
    Ok(())
}

pub fn quotient(n: usize, cell_cap: Option<usize>, json: bool) -> Result<()> {
    let k = rmac_core::simplicial::polygon_boundary(n)?;
    let total = build(&k, cell_cap)?;
    let action = rotation_action(&total, n)?;
    let quotient = quotient_complex(&total, &action)?;
    let report = surface_report(&quotient)?;
    let out = ComplexReport::new(
        format!("quotient of the surface over the {n}-gon by the rotation"),
        &quotient,
        &report,
    );
    if json {
        json_line(&out);
    } else {
        out.print();
    }
    Ok(())
}

pub fn words(n: usize, json: bool) -> Result<()> {
    let families = representative_families(n)?;
    let total: usize = families.iter().map(|f| f.basis_count()).sum();
    if json {
        #[derive(Serialize)]
        struct FamilyOut {
            orbit_size: usize,
            gap_number: usize,
            class_count: usize,
            words: Vec<String>,
            faces: Vec<Vec<usize>>,
            basis: usize,
        }
        #[derive(Serialize)]
        struct WordsOut {
            n: usize,
            families: Vec<FamilyOut>,
            total_basis: usize,
        }
        let out = WordsOut {
            n,
            families: families
                .iter()
                .map(|f| FamilyOut {
                    orbit_size: f.d,
                    gap_number: f.full_gap(),
                    class_count: f.classes.len(),
                    words: f.classes.iter().map(|c| c.word.to_string()).collect(),
                    faces: f.classes.iter().map(|c| c.face.clone()).collect(),
                    basis: f.basis_count(),
                })
                .collect(),
            total_basis: total,
        };
        json_line(&out);
        return Ok(());
    }
    for family in &families {
        println!(
            "# of face: {} , each has orbit_size: {} , gap_number: {}",
            family.classes.len(),
            family.d,
            family.full_gap()
        );
        for class in &family.classes {
            let face: Vec<String> = class.face.iter().map(ToString::to_string).collect();
            println!("     [{}]", face.join(", "));
        }
        println!("number of basis: {}", family.basis_count());
    }
    println!("Total number of basis elements in H_1: {total}");
    Ok(())
}

/// Rendering of one summand in induction notation.
fn summand_text(s: &Summand) -> String {
    let n = s.class.n;
    match &s.kind {
        ModuleKind::Induced(a) => {
            let stabilizer = a.group_order();
            let module = if stabilizer == 2 && a.dim() == 1 {
                "sign".to_string()
            } else if a.dim() == 1 {
                "Z".to_string()
            } else {
                format!("Z^{}", a.dim())
            };
            format!("Ind[Z_{stabilizer} -> Z_{n}] {module}")
        }
        ModuleKind::Regular(r) => match r.copies() {
            1 => format!("Z[Z_{n}]"),
            c => format!("{c} x Z[Z_{n}]"),
        },
    }
}

pub fn decompose(n: usize, json: bool) -> Result<()> {
    let dec = decompose_h1(n)?;
    if json {
        #[derive(Serialize)]
        struct SummandOut {
            word: String,
            d: usize,
            iota: usize,
            face: Vec<usize>,
            kind: &'static str,
            #[serde(skip_serializing_if = "Option::is_none")]
            stabilizer_order: Option<usize>,
            #[serde(skip_serializing_if = "Option::is_none")]
            module_rank: Option<usize>,
            #[serde(skip_serializing_if = "Option::is_none")]
            copies: Option<usize>,
            rank: usize,
        }
        #[derive(Serialize)]
        struct DecompositionOut {
            n: usize,
            summands: Vec<SummandOut>,
            total_rank: usize,
        }
        let out = DecompositionOut {
            n,
            summands: dec
                .summands
                .iter()
                .map(|s| {
                    let (kind, stabilizer, module_rank, copies) = match &s.kind {
                        ModuleKind::Induced(a) => {
                            ("induced", Some(a.group_order()), Some(a.dim()), None)
                        }
                        ModuleKind::Regular(r) => ("regular", None, None, Some(r.copies())),
                    };
                    SummandOut {
                        word: s.class.word.to_string(),
                        d: s.class.d,
                        iota: s.class.iota,
                        face: s.class.face.clone(),
                        kind,
                        stabilizer_order: stabilizer,
                        module_rank,
                        copies,
                        rank: s.rank(),
                    }
                })
                .collect(),
            total_rank: dec.total_rank,
        };
        json_line(&out);
        return Ok(());
    }
    let rows: Vec<Vec<String>> = dec
        .summands
        .iter()
        .map(|s| {
            let face: Vec<String> = s.class.face.iter().map(ToString::to_string).collect();
            vec![
                s.class.d.to_string(),
                s.class.word.to_string(),
                s.class.iota.to_string(),
                format!("({})", face.join(" ")),
                s.class.d.to_string(),
                summand_text(s),
                s.rank().to_string(),
            ]
        })
        .collect();
    table(
        &["d", "Lyndon word", "iota", "Face", "Orbits", "Summand", "Rank"],
        &rows,
    );
    // Aggregate equal summands in first-seen order, counting classes for
    // induced modules and copies for the regular representation.
    let mut aggregated: Vec<(String, usize)> = Vec::new();
    for s in &dec.summands {
        let (text, weight) = match &s.kind {
            ModuleKind::Induced(_) => (summand_text(s), 1),
            ModuleKind::Regular(r) => (format!("Z[Z_{n}]"), r.copies()),
        };
        match aggregated.iter_mut().find(|(t, _)| *t == text) {
            Some((_, count)) => *count += weight,
            None => aggregated.push((text, weight)),
        }
    }
    let summary: Vec<String> = aggregated
        .iter()
        .map(|(text, count)| {
            if *count == 1 {
                text.clone()
            } else {
                format!("{count} x {text}")
            }
        })
        .collect();
    println!("summary: {}", summary.join(" + "));
    println!(
        "total rank: {} (twice the genus {})",
        dec.total_rank,
        dec.total_rank / 2
    );
    Ok(())
}

pub fn e2_page(n: usize, max_p: usize, field: bool, json: bool) -> Result<()> {
    if field {
        let (bottom, middle, top) = poincare_series(n)?;
        if json {
            #[derive(Serialize)]
            struct FieldPage {
                n: usize,
                field: bool,
                ranks: [u64; 3],
            }
            json_line(&FieldPage {
                n,
                field: true,
                ranks: [bottom, middle, top],
            });
            return Ok(());
        }
        println!("n = {n}, E^2 over a field with characteristic coprime to {n} (columns p >= 1 vanish)");
        let render = |r: u64| match r {
            0 => "0".to_string(),
            1 => "k".to_string(),
            r => format!("k^{r}"),
        };
        table(
            &["q\\p", "p=0"],
            &[
                vec!["q=2".into(), render(top)],
                vec!["q=1".into(), render(middle)],
                vec!["q=0".into(), render(bottom)],
            ],
        );
        return Ok(());
    }
    let page = build_e2_page(n, max_p)?;
    if json {
        #[derive(Serialize)]
        struct PageOut {
            n: usize,
            max_p: usize,
            entries: std::collections::BTreeMap<String, FGAbelianGroup>,
        }
        json_line(&PageOut {
            n,
            max_p,
            entries: page
                .entries()
                .map(|(&(p, q), group)| (format!("{p},{q}"), group.clone()))
                .collect(),
        });
        return Ok(());
    }
    println!("n = {n}, E^2 entries (column p, row q)");
    let mut header: Vec<String> = vec!["q\\p".into()];
    header.extend((0..=max_p).map(|p| format!("p={p}")));
    let header_refs: Vec<&str> = header.iter().map(String::as_str).collect();
    let rows: Vec<Vec<String>> = [2usize, 1, 0]
        .iter()
        .map(|&q| {
            let mut row = vec![format!("q={q}")];
            row.extend((0..=max_p).map(|p| page.entry(p, q).expect("in range").to_string()));
            row
        })
        .collect();
    table(&header_refs, &rows);
    Ok(())
}

pub fn poincare(n: usize, json: bool) -> Result<()> {
    let (c0, c1, c2) = poincare_series(n)?;
    if json {
        #[derive(Serialize)]
        struct PoincareOut {
            n: usize,
            coefficients: [u64; 3],
        }
        json_line(&PoincareOut {
            n,
            coefficients: [c0, c1, c2],
        });
        return Ok(());
    }
    let mut terms = Vec::new();
    for (coefficient, power) in [(c0, 0u32), (c1, 1), (c2, 2)] {
        let term = match (coefficient, power) {
            (0, _) => continue,
            (c, 0) => c.to_string(),
            (1, 1) => "t".to_string(),
            (c, 1) => format!("{c}t"),
            (1, p) => format!("t^{p}"),
            (c, p) => format!("{c}t^{p}"),
        };
        terms.push(term);
    }
    key_values(&[("n", n.to_string()), ("P(t)", terms.join(" + "))]);
    Ok(())
}

pub fn aut(input: &ComplexInput, perm_cap: Option<usize>, json: bool) -> Result<()> {
    let k = input.load()?;
    let group = match perm_cap {
        Some(cap) => automorphism_group_capped(&k, cap)?,
        None => automorphism_group(&k)?,
    };
    if json {
        #[derive(Serialize)]
        struct AutOut {
            complex: String,
            vertices: usize,
            order: usize,
            elements: Vec<Vec<usize>>,
        }
        json_line(&AutOut {
            complex: input.label(),
            vertices: k.vertex_count(),
            order: group.len(),
            elements: group.iter().map(|p| p.image().to_vec()).collect(),
        });
        return Ok(());
    }
    key_values(&[
        ("complex", input.label()),
        ("vertices", k.vertex_count().to_string()),
        ("order", group.len().to_string()),
    ]);
    println!("elements:");
    for p in &group {
        let images: Vec<String> = p.image().iter().map(ToString::to_string).collect();
        println!("  [{}]", images.join(", "));
    }
    Ok(())
}

pub fn dump(input: &ComplexInput, quotient: bool, cell_cap: Option<usize>) -> Result<()> {
    let k = input.load()?;
    let complex = build(&k, cell_cap)?;
    let dumped = if quotient {
        let n = input.n.ok_or_else(|| {
            Error::InvalidInput("--quotient needs the rotation action, so use --n".into())
        })?;
        let action = rotation_action(&complex, n)?;
        quotient_complex(&complex, &action)?
    } else {
        complex
    };
    println!("{}", dumped.to_json_dump());
    Ok(())
}
