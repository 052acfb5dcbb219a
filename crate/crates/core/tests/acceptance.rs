//! The ten acceptance criteria, one summary line each.

mod common;

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use mfcat::catalog::{all_types, Catalog, PhaseWindow};
use mfcat::gring::AdeType;
use mfcat::homcat::golden::{a_series, d_series, golden, ERRATA};
use mfcat::homcat::{
    ar_triangle_check, hom_dim, hom_space, jacobi_annihilates, neighbour_recursion_check,
    serre_duality_check, serre_multiset_check, HomTable,
};
use mfcat::quiver::{positive_roots, DynkinQuiver};
use mfcat::rat::Rat;
use mfcat::report::Report;
use mfcat::stability::{
    check_stability_axioms, heart_objects, principal_phase_range_check, strong_exceptionality_check,
};

/// A₁–A₈ with every b, D₄–D₈, E₆–E₈.
fn scope() -> Vec<(AdeType, u32)> {
    let mut v = Vec::new();
    for ty in all_types(8) {
        match ty {
            AdeType::A(l) => v.extend((1..=l).map(|b| (ty, b))),
            _ => v.push((ty, 1)),
        }
    }
    v
}

fn table_scope() -> Vec<(AdeType, u32)> {
    scope()
        .into_iter()
        .filter(|(ty, _)| match ty {
            AdeType::A(l) => (2..=6).contains(l),
            AdeType::D(l) => *l <= 6,
            _ => true,
        })
        .collect()
}

fn cat(ty: AdeType, b: u32) -> Arc<Catalog> {
    Catalog::get(ty, b).expect("type in scope")
}

fn window() -> PhaseWindow {
    PhaseWindow::new(Rat::ZERO, Rat::int(2))
}

fn label(ty: AdeType, b: u32) -> String {
    if ty.is_a() {
        format!("{ty}(b={b})")
    } else {
        ty.to_string()
    }
}

/// Folds reports; the detail is the first failing report or a count.
fn summarize(reports: Vec<Report>) -> Result<String, String> {
    let checked: usize = reports.iter().map(|r| r.checked).sum();
    match reports.iter().find(|r| !r.passed()) {
        Some(r) => Err(r.to_string().lines().take(4).collect::<Vec<_>>().join("; ")),
        None => Ok(format!("{checked} checks over {} reports", reports.len())),
    }
}

fn catalog_soundness() -> Result<String, String> {
    let mut n = 0;
    for (ty, b) in scope() {
        let c = cat(ty, b);
        for k in c.vertices() {
            let o = c.object(k, 0).map_err(|e| e.to_string())?;
            o.gmf
                .verify_mf()
                .map_err(|e| format!("{} k={k}: {e}", label(ty, b)))?;
            o.gmf
                .verify_grading()
                .map_err(|e| format!("{} k={k}: {e}", label(ty, b)))?;
            n += 1;
        }
    }
    Ok(format!("{n} objects, factorization and grading exact"))
}

fn tables() -> BTreeMap<(AdeType, u32), HomTable> {
    table_scope()
        .into_par_iter()
        .map(|(ty, b)| ((ty, b), HomTable::compute(&cat(ty, b)).expect("table")))
        .collect()
}

fn table3(tables: &BTreeMap<(AdeType, u32), HomTable>) -> Result<String, String> {
    let mut cells = 0;
    for (&(ty, b), t) in tables {
        for (&(k, kp), got) in &t.entries {
            let want = match ty {
                AdeType::A(l) => a_series(l, k, kp),
                AdeType::D(l) => d_series(l, k, kp),
                _ => golden(ty, k, kp).ok_or_else(|| format!("{ty}: no golden cell ({k},{kp})"))?,
            };
            if *got != want {
                return Err(format!(
                    "{} ({k},{kp}): computed [{got}], table [{want}]",
                    label(ty, b)
                ));
            }
            cells += 1;
        }
    }
    let errata: Vec<String> = ERRATA
        .iter()
        .map(|(ty, k, kp, old, new, _)| {
            let old = if old.is_empty() {
                String::new()
            } else {
                format!(" -{{{old}}}")
            };
            format!("{ty} ({k},{kp}){old} +{{{new}}}")
        })
        .collect();
    Ok(format!(
        "{cells} cells exact; errata applied to the printed table: {}",
        errata.join(", ")
    ))
}

fn neighbour_recursion(tables: &BTreeMap<(AdeType, u32), HomTable>) -> Result<String, String> {
    summarize(
        tables
            .iter()
            .map(|(&(ty, b), t)| {
                neighbour_recursion_check(&cat(ty, b), |k, kp| {
                    t.get(k, kp).cloned().unwrap_or_default()
                })
            })
            .collect(),
    )
}

fn serre(tables: &BTreeMap<(AdeType, u32), HomTable>) -> Result<String, String> {
    let mut reports: Vec<Report> = scope()
        .into_par_iter()
        .map(|(ty, b)| serre_duality_check(&cat(ty, b), &window()).expect("hom"))
        .collect();
    let extra: Vec<(AdeType, u32)> = scope()
        .into_iter()
        .filter(|k| !tables.contains_key(k))
        .collect();
    let extra: BTreeMap<(AdeType, u32), HomTable> = extra
        .into_par_iter()
        .map(|(ty, b)| ((ty, b), HomTable::compute(&cat(ty, b)).expect("table")))
        .collect();
    for (&(ty, b), t) in tables.iter().chain(&extra) {
        reports.push(serre_multiset_check(&cat(ty, b), |k, kp| {
            t.get(k, kp).cloned().unwrap_or_default()
        }));
    }
    summarize(reports)
}

fn ar_triangles() -> Result<String, String> {
    let jobs: Vec<(AdeType, u32, u32)> = scope()
        .into_iter()
        .flat_map(|(ty, b)| {
            cat(ty, b)
                .vertices()
                .map(move |k| (ty, b, k))
                .collect::<Vec<_>>()
        })
        .collect();
    let results: Vec<Result<(), String>> = jobs
        .par_iter()
        .map(|&(ty, b, k)| match ar_triangle_check(&cat(ty, b), k, 0) {
            Ok(r) if r.passed() => Ok(()),
            Ok(r) => Err(format!("{} k={k}: {r:?}", label(ty, b))),
            Err(e) => Err(format!("{} k={k}: {e}", label(ty, b))),
        })
        .collect();
    results.into_iter().collect::<Result<Vec<()>, String>>()?;
    Ok(format!("{} triangles", jobs.len()))
}

fn counting() -> Result<String, String> {
    for (ty, b) in scope() {
        let c = cat(ty, b);
        let heart = heart_objects(&c).len();
        let roots = positive_roots(ty).count();
        let lh2 = (c.rank() * c.h() / 2) as usize;
        if heart != roots || lh2 != roots {
            return Err(format!(
                "{}: heart {heart}, roots {roots}, l·h/2 {lh2}",
                label(ty, b)
            ));
        }
    }
    Ok(format!(
        "{} types, heart = positive roots = l·h/2",
        scope().len()
    ))
}

fn stability() -> Result<String, String> {
    let reports: Vec<Report> = scope()
        .into_par_iter()
        .enumerate()
        .flat_map(|(i, (ty, b))| {
            let mut rng = ChaCha8Rng::seed_from_u64(1000 + i as u64);
            let r = check_stability_axioms(&cat(ty, b), &window(), 100, &mut rng).expect("hom");
            r.axioms.into_iter().collect::<Vec<_>>()
        })
        .collect();
    summarize(reports)
}

fn exceptional() -> Result<String, String> {
    let reports: Vec<Report> = scope()
        .into_par_iter()
        .enumerate()
        .flat_map(|(i, (ty, b))| {
            let c = cat(ty, b);
            let mut rng = ChaCha8Rng::seed_from_u64(2000 + i as u64);
            let mut qs = vec![DynkinQuiver::principal(c.diagram.clone(), &c.principal)];
            qs.extend((0..5).map(|_| DynkinQuiver::random(c.diagram.clone(), &mut rng)));
            let mut out: Vec<Report> = qs
                .iter()
                .map(|q| strong_exceptionality_check(&c, q).expect("hom"))
                .collect();
            out.push(principal_phase_range_check(&c));
            out
        })
        .collect();
    summarize(reports)
}

fn oracle() -> Result<String, String> {
    let mut pairs = 0;
    for (ty, b) in [(AdeType::A(1), 1), (AdeType::A(2), 1), (AdeType::A(2), 2)] {
        let c = cat(ty, b);
        let objs = c.enumerate(&window());
        for x in &objs {
            for y in &objs {
                let fast = hom_dim(&x.gmf, &y.gmf).map_err(|e| e.to_string())?;
                let slow = common::oracle::hom_dim(&x.gmf, &y.gmf);
                if fast != slow {
                    return Err(format!(
                        "{} Hom(M{}_{}, M{}_{}): {fast} vs oracle {slow}",
                        label(ty, b),
                        x.k,
                        x.n,
                        y.k,
                        y.n
                    ));
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs agree"))
}

fn jacobi() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let types = scope();
    let mut done = 0;
    let mut seen = Vec::new();
    while done < 50 {
        let &(ty, b) = types.choose(&mut rng).expect("nonempty");
        let c = cat(ty, b);
        let objs = c.enumerate(&window());
        let x = objs.choose(&mut rng).expect("nonempty");
        let y = objs.choose(&mut rng).expect("nonempty");
        let space = hom_space(&x.gmf, &y.gmf).map_err(|e| e.to_string())?;
        if space.dim() == 0 {
            continue;
        }
        let i = rng.gen_range(0..space.dim());
        if !jacobi_annihilates(&x.gmf, &y.gmf, &space.basis[i]).map_err(|e| e.to_string())? {
            return Err(format!(
                "{} basis {i} of Hom(M{}_{}, M{}_{})",
                label(ty, b),
                x.k,
                x.n,
                y.k,
                y.n
            ));
        }
        seen.push(ty);
        done += 1;
    }
    seen.sort();
    seen.dedup();
    Ok(format!(
        "{done} classes over {} types, each ∂f annihilates",
        seen.len()
    ))
}

fn main() {
    let start = Instant::now();
    let mut failed = 0;
    let mut line = |n: u32, name: &str, r: Result<String, String>, t: Instant| {
        let secs = t.elapsed().as_secs_f64();
        match r {
            Ok(d) => println!("criterion {n:>2} PASS  {name}: {d} ({secs:.1}s)"),
            Err(d) => {
                failed += 1;
                println!("criterion {n:>2} FAIL  {name}: {d} ({secs:.1}s)");
            }
        }
    };
    let t = Instant::now();
    line(1, "catalog soundness", catalog_soundness(), t);
    let t = Instant::now();
    let tabs = tables();
    line(2, "Hom table reproduction", table3(&tabs), t);
    let t = Instant::now();
    line(3, "neighbour recursion", neighbour_recursion(&tabs), t);
    let t = Instant::now();
    line(4, "Serre duality", serre(&tabs), t);
    let t = Instant::now();
    line(5, "AR triangles", ar_triangles(), t);
    let t = Instant::now();
    line(6, "heart and root counts", counting(), t);
    let t = Instant::now();
    line(7, "stability axioms", stability(), t);
    let t = Instant::now();
    line(8, "exceptional collections", exceptional(), t);
    let t = Instant::now();
    line(9, "brute-force oracle", oracle(), t);
    let t = Instant::now();
    line(10, "Jacobi annihilation", jacobi(), t);
    println!(
        "{} of 10 criteria passed in {:.1}s",
        10 - failed,
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
