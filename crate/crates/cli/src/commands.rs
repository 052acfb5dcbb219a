use std::fmt::Write;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use mfcat::catalog::{Catalog, PhaseWindow};
use mfcat::homcat::golden::{golden, printed};
use mfcat::homcat::{
    ar_triangle_check, hom_dim, hom_multiset, irreducible_check, neighbour_recursion_check,
    serre_duality_check, serre_multiset_check, HomTable, Multiset,
};
use mfcat::quiver::{path_hom_dims, positive_roots, DynkinQuiver};
use mfcat::rat::Rat;
use mfcat::report::Report;
use mfcat::stability::{
    central_charge, check_stability_axioms, exceptional_collection, heart_objects,
    principal_phase_range_check, projectivity_check, strong_exceptionality_check,
};

use crate::{vertex, CliError, Format, Outcome};

fn math<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Math(e.to_string())
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn type_label(cat: &Catalog) -> String {
    if cat.ty.is_a() {
        format!("{}(b={})", cat.ty, cat.b)
    } else {
        cat.ty.to_string()
    }
}

fn multiset_json(m: &Multiset) -> Value {
    Value::Array(m.0.iter().map(|(c, d)| json!({"c": c, "dim": d})).collect())
}

fn tsv_rows(out: &mut String, cat: &Catalog, k: u32, kp: u32, m: &Multiset) {
    for (c, d) in &m.0 {
        let _ = writeln!(out, "{}\t{k}\t{kp}\t{c}\t{d}", cat.ty);
    }
}

const TSV_HEADER: &str = "type\tk\tkprime\tc\tmult\n";

fn reports_out(reports: &[Report], f: Format) -> Outcome {
    let ok = reports.iter().all(Report::passed);
    let text = match f {
        Format::Json => pretty(&Value::Array(
            reports
                .iter()
                .map(|r| json!({"name": r.name, "checked": r.checked, "passed": r.passed(), "failures": r.failures}))
                .collect(),
        )),
        Format::Tsv => {
            let mut s = String::from("check\tchecked\tfailed\n");
            for r in reports {
                let _ = writeln!(s, "{}\t{}\t{}", r.name, r.checked, r.failures.len());
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                let _ = writeln!(s, "{r}");
            }
            let _ = writeln!(s, "{}", if ok { "all checks passed" } else { "some checks FAILED" });
            s
        }
    };
    Outcome { text, ok }
}

fn table_report(cat: &Catalog, table: &HomTable, use_printed: bool) -> Report {
    let mut r = Report::new(format!("{} table of C(k,k') against the reference", cat.ty));
    for (&(k, kp), m) in &table.entries {
        let want = if use_printed {
            printed(cat.ty, k, kp)
        } else {
            golden(cat.ty, k, kp)
        };
        r.check(want.as_ref() == Some(m), || {
            format!(
                "({k},{kp}): computed [{m}], reference [{}]",
                want.map(|w| w.to_string()).unwrap_or_default()
            )
        });
    }
    r
}

pub fn verify(cat: &Catalog, f: Format, samples: usize, seed: u64) -> Result<Outcome, CliError> {
    let wide = PhaseWindow::new(Rat::ZERO, Rat::int(2));
    let mut reports = Vec::new();

    let mut sound = Report::new(format!(
        "{} catalog factorizations and gradings",
        type_label(cat)
    ));
    for k in cat.vertices() {
        for n in [0, 1] {
            let o = cat.object(k, n).map_err(math)?;
            let res = o
                .gmf
                .verify_mf()
                .map_err(|e| e.to_string())
                .and_then(|_| o.gmf.verify_grading().map_err(|e| e.to_string()));
            sound.check(res.is_ok(), || format!("M{k}_{n}: {}", res.unwrap_err()));
        }
    }
    reports.push(sound);

    let table = HomTable::compute(cat).map_err(math)?;
    let cell = |k: u32, kp: u32| table.get(k, kp).cloned().unwrap_or_default();
    reports.push(table_report(cat, &table, false));
    reports.push(neighbour_recursion_check(cat, cell));
    reports.push(serre_multiset_check(cat, cell));
    reports.push(serre_duality_check(cat, &wide).map_err(math)?);

    let mut ar = Report::new(format!("{} AR triangles", cat.ty));
    for k in cat.vertices() {
        let a = ar_triangle_check(cat, k, 0).map_err(math)?;
        ar.check(a.passed(), || format!("k={k}: {a:?}"));
    }
    reports.push(ar);
    reports.push(irreducible_check(cat, &wide).map_err(math)?);

    let roots = positive_roots(cat.ty);
    let mut count = Report::new(format!("{} heart, positive roots and l*h/2", cat.ty));
    let heart = heart_objects(cat).len();
    let lh2 = (cat.rank() * cat.h() / 2) as usize;
    count.check(heart == roots.count() && lh2 == roots.count(), || {
        format!("heart {heart}, roots {}, l*h/2 {lh2}", roots.count())
    });
    for k in cat.vertices() {
        let c = roots.highest[k as usize - 1];
        count.check(c == cat.nu(k) as i64, || {
            format!("k={k}: highest root coefficient {c}, nu {}", cat.nu(k))
        });
    }
    reports.push(count);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let axioms = check_stability_axioms(cat, &wide, samples, &mut rng).map_err(math)?;
    reports.extend(axioms.axioms);
    reports.push(projectivity_check(cat).map_err(math)?);

    let principal = DynkinQuiver::principal(cat.diagram.clone(), &cat.principal);
    let mut quivers = vec![principal.clone()];
    quivers.extend((0..5).map(|_| DynkinQuiver::random(cat.diagram.clone(), &mut rng)));
    for q in &quivers {
        reports.push(strong_exceptionality_check(cat, q).map_err(math)?);
    }
    reports.push(principal_phase_range_check(cat));

    let paths = path_hom_dims(&principal);
    let mut pat = Report::new(format!(
        "{} principal path counts against Hom(M^k_0, M^k'_0)",
        cat.ty
    ));
    for k in cat.vertices() {
        for kp in cat.vertices() {
            let d = hom_dim(
                &cat.object(k, 0).map_err(math)?.gmf,
                &cat.object(kp, 0).map_err(math)?.gmf,
            )
            .map_err(math)?;
            let p = paths.hom_dims[k as usize - 1][kp as usize - 1];
            pat.check(d == p, || format!("({k},{kp}): Hom {d}, paths {p}"));
        }
    }
    reports.push(pat);

    Ok(reports_out(&reports, f))
}

pub fn hom(
    cat: &Catalog,
    f: Format,
    from: u32,
    to: u32,
    n: Option<i64>,
) -> Result<Outcome, CliError> {
    let (k, kp) = (vertex(cat, from)?, vertex(cat, to)?);
    if let Some(n) = n {
        let x = cat.object(k, 0).map_err(math)?;
        let y = cat.object(kp, n).map_err(math)?;
        let d = hom_dim(&x.gmf, &y.gmf).map_err(math)?;
        let text = match f {
            Format::Json => pretty(&json!({"k": k, "kprime": kp, "n": n, "dim": d})),
            Format::Tsv => format!("type\tk\tkprime\tn\tdim\n{}\t{k}\t{kp}\t{n}\t{d}\n", cat.ty),
            Format::Text => format!("{d}\n"),
        };
        return Ok(Outcome { text, ok: true });
    }
    let m = hom_multiset(cat, k, kp).map_err(math)?;
    let text = match f {
        Format::Json => pretty(&multiset_json(&m)),
        Format::Tsv => {
            let mut s = TSV_HEADER.to_string();
            tsv_rows(&mut s, cat, k, kp, &m);
            s
        }
        Format::Text => format!("{m}\n"),
    };
    Ok(Outcome { text, ok: true })
}

pub fn table3(cat: &Catalog, f: Format, use_printed: bool) -> Result<Outcome, CliError> {
    let table = HomTable::compute(cat).map_err(math)?;
    let report = table_report(cat, &table, use_printed);
    let text = match f {
        Format::Json => {
            let entries: Vec<Value> = table
                .entries
                .iter()
                .map(|(&(k, kp), m)| json!({"k": k, "kprime": kp, "multiset": m.to_string(), "values": multiset_json(m)}))
                .collect();
            pretty(&json!({
                "type": cat.ty.to_string(),
                "b": cat.b,
                "h": cat.h(),
                "entries": entries,
                "mismatches": report.failures,
            }))
        }
        Format::Tsv => {
            let mut s = TSV_HEADER.to_string();
            for (&(k, kp), m) in &table.entries {
                tsv_rows(&mut s, cat, k, kp, m);
            }
            s
        }
        Format::Text => {
            let l = cat.rank();
            let cells: Vec<Vec<String>> = (1..=l)
                .map(|k| {
                    (1..=l)
                        .map(|kp| table.get(k, kp).map(|m| m.to_string()).unwrap_or_default())
                        .collect()
                })
                .collect();
            let width: Vec<usize> = (0..l as usize)
                .map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(0).max(1))
                .collect();
            let mut s = format!("{}  h = {}\n", type_label(cat), cat.h());
            let head: Vec<String> = (1..=l)
                .map(|kp| format!("{kp:<w$}", w = width[kp as usize - 1]))
                .collect();
            let _ = writeln!(s, "k\\k' | {}", head.join(" | ").trim_end());
            for (i, row) in cells.iter().enumerate() {
                let padded: Vec<String> = row
                    .iter()
                    .enumerate()
                    .map(|(j, c)| format!("{c:<w$}", w = width[j]))
                    .collect();
                let _ = writeln!(s, "{:<4} | {}", i + 1, padded.join(" | ").trim_end());
            }
            for m in &report.failures {
                let _ = writeln!(s, "mismatch {m}");
            }
            s
        }
    };
    Ok(Outcome {
        text,
        ok: report.passed(),
    })
}

pub fn ar(cat: &Catalog, f: Format, k: u32, n: i64) -> Result<Outcome, CliError> {
    let k = vertex(cat, k)?;
    let r = ar_triangle_check(cat, k, n).map_err(math)?;
    let text = match f {
        Format::Json => pretty(&json!({
            "k": r.k,
            "n": r.n,
            "hom_from_serre_inverse": r.hom_from_serre_inv,
            "neighbors": r.neighbors.iter().map(|(k, n)| json!({"k": k, "n": n})).collect::<Vec<_>>(),
            "cone_size": r.cone_size,
            "grading_matches": r.grading_matches,
            "end_dim": r.end_dim,
            "hom_to_neighbors": r.hom_to_neighbors,
            "passed": r.passed(),
        })),
        Format::Tsv => {
            let mut s = String::from("k\tn\thom_from_serre_inverse\tneighbors\tcone_size\tgrading_matches\tend_dim\tpassed\n");
            let nb: Vec<String> = r
                .neighbors
                .iter()
                .map(|(k, n)| format!("{k}:{n}"))
                .collect();
            let _ = writeln!(
                s,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.k,
                r.n,
                r.hom_from_serre_inv,
                nb.join(","),
                r.cone_size,
                r.grading_matches,
                r.end_dim,
                r.passed()
            );
            s
        }
        Format::Text => {
            let nb: Vec<String> = r
                .neighbors
                .iter()
                .map(|(k, n)| format!("M{k}_{n}"))
                .collect();
            let mut s = String::new();
            let _ = writeln!(s, "X = M{}_{}  phase {}", r.k, r.n, cat.phase_of(r.k, r.n));
            let _ = writeln!(s, "dim Hom(S^-1 X, X) = {}", r.hom_from_serre_inv);
            let _ = writeln!(s, "neighbours: {}", nb.join(" + "));
            let _ = writeln!(
                s,
                "cone size {}, grading matches: {}",
                r.cone_size, r.grading_matches
            );
            let _ = writeln!(s, "dim End(cone) = {}", r.end_dim);
            let _ = writeln!(s, "dim Hom(cone, neighbour) = {:?}", r.hom_to_neighbors);
            let _ = writeln!(s, "{}", if r.passed() { "ok" } else { "FAILED" });
            s
        }
    };
    Ok(Outcome {
        text,
        ok: r.passed(),
    })
}

pub fn stability(
    cat: &Catalog,
    f: Format,
    window: &PhaseWindow,
    check: bool,
    samples: usize,
    seed: u64,
) -> Result<Outcome, CliError> {
    let rows: Vec<(u32, i64, Rat, f64, (f64, f64))> = cat
        .enumerate(window)
        .into_iter()
        .map(|o| {
            let z = central_charge(&o.gmf);
            (o.k, o.n, z.phase.clone(), z.mass.to_f64(), z.value)
        })
        .collect();
    let report = if check {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Some(check_stability_axioms(cat, window, samples, &mut rng).map_err(math)?)
    } else {
        None
    };
    let ok = report.as_ref().is_none_or(|r| r.passed());
    let text = match f {
        Format::Json => {
            let objs: Vec<Value> = rows
                .iter()
                .map(|(k, n, p, m, z)| json!({"k": k, "n": n, "phase": p.to_string(), "mass": m, "Z": [z.0, z.1]}))
                .collect();
            let axioms: Option<Vec<Value>> = report.as_ref().map(|r| {
                r.axioms
                    .iter()
                    .map(|a| json!({"name": a.name, "checked": a.checked, "failures": a.failures}))
                    .collect()
            });
            pretty(&json!({"type": cat.ty.to_string(), "objects": objs, "axioms": axioms}))
        }
        Format::Tsv => {
            let mut s = String::from("type\tk\tn\tphase\tmass\tre_Z\tim_Z\n");
            for (k, n, p, m, z) in &rows {
                let _ = writeln!(
                    s,
                    "{}\t{k}\t{n}\t{p}\t{m:.12}\t{:.12}\t{:.12}",
                    cat.ty,
                    clean(z.0),
                    clean(z.1)
                );
            }
            s
        }
        Format::Text => {
            let mut s = format!("{:>3} {:>4} {:>8} {:>16}  Z\n", "k", "n", "phase", "mass");
            for (k, n, p, m, z) in &rows {
                let _ = writeln!(
                    s,
                    "{k:>3} {n:>4} {:>8} {m:>16.12}  ({:.12}, {:.12})",
                    p.to_string(),
                    clean(z.0),
                    clean(z.1)
                );
            }
            if let Some(r) = &report {
                s.push_str(&r.to_string());
            }
            s
        }
    };
    Ok(Outcome { text, ok })
}

/// Rounds away float noise so `-0.000000000000` never shows up.
fn clean(x: f64) -> f64 {
    if x.abs() < 1e-12 {
        0.0
    } else {
        x
    }
}

fn parse_orientation(cat: &Catalog, s: &str) -> Result<DynkinQuiver, CliError> {
    let principal = DynkinQuiver::principal(cat.diagram.clone(), &cat.principal);
    match s {
        "principal" => return Ok(principal),
        "opposite" => return Ok(principal.opposite()),
        _ => {}
    }
    if let Some(seed) = s.strip_prefix("random:") {
        let seed: u64 = seed
            .parse()
            .map_err(|_| CliError::BadRange(format!("bad seed in {s:?}")))?;
        return Ok(DynkinQuiver::random(
            cat.diagram.clone(),
            &mut ChaCha8Rng::seed_from_u64(seed),
        ));
    }
    let arrows = s
        .split(',')
        .map(|a| {
            let (x, y) = a
                .split_once("->")
                .ok_or_else(|| CliError::BadRange(format!("bad arrow {a:?}")))?;
            let p = |t: &str| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| CliError::BadRange(format!("bad arrow {a:?}")))
            };
            Ok((p(x)?, p(y)?))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    DynkinQuiver::new(cat.diagram.clone(), arrows).map_err(|e| CliError::BadRange(e.to_string()))
}

pub fn quiver(
    cat: &Catalog,
    f: Format,
    orientation: &str,
    paths: bool,
    collection: bool,
) -> Result<Outcome, CliError> {
    let q = parse_orientation(cat, orientation)?;
    let summary = path_hom_dims(&q);
    let roots = positive_roots(cat.ty);
    let ec = collection.then(|| exceptional_collection(cat, &q));
    let report = if collection {
        Some(strong_exceptionality_check(cat, &q).map_err(math)?)
    } else {
        None
    };
    let ok = report.as_ref().is_none_or(Report::passed);
    let text = match f {
        Format::Json => pretty(&json!({
            "type": cat.ty.to_string(),
            "arrows": q.arrows,
            "path_algebra_dim": summary.dim,
            "hom_dims": if paths { Some(&summary.hom_dims) } else { None },
            "positive_roots": roots.count(),
            "highest_root": roots.highest,
            "collection": ec.as_ref().map(|e| json!({"n": e.n, "order": e.order})),
            "check": report.as_ref().map(|r| json!({"checked": r.checked, "failures": r.failures})),
        })),
        Format::Tsv => {
            let mut s = String::from("k\tkprime\tpaths\n");
            for k in 1..=q.rank() {
                for kp in 1..=q.rank() {
                    let _ = writeln!(
                        s,
                        "{k}\t{kp}\t{}",
                        summary.hom_dims[k as usize - 1][kp as usize - 1]
                    );
                }
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "{} quiver: {q}", cat.ty);
            let _ = writeln!(s, "path algebra dimension {}", summary.dim);
            let _ = writeln!(
                s,
                "positive roots {}, highest root {:?}",
                roots.count(),
                roots.highest
            );
            if paths {
                for row in &summary.hom_dims {
                    let cells: Vec<String> = row.iter().map(|d| d.to_string()).collect();
                    let _ = writeln!(s, "{}", cells.join(" "));
                }
            }
            if let (Some(e), Some(r)) = (&ec, &report) {
                let _ = writeln!(s, "n-vector {:?}, order {:?}", e.n, e.order);
                let _ = writeln!(s, "{r}");
            }
            s
        }
    };
    Ok(Outcome { text, ok })
}

/// The JSON form of every `M^k_n` for one `n`; always JSON whatever the format.
pub fn export(cat: &Catalog, _f: Format, n: i64) -> Result<Outcome, CliError> {
    let objs = cat
        .vertices()
        .map(|k| {
            cat.object(k, n).map(|o| {
                serde_json::to_value(o.gmf.to_json(&cat.ty.to_string())).expect("serializes")
            })
        })
        .collect::<Result<Vec<Value>, _>>()
        .map_err(math)?;
    Ok(Outcome {
        text: pretty(&Value::Array(objs)),
        ok: true,
    })
}

pub fn catalog(cat: &Catalog, f: Format, n: i64) -> Result<Outcome, CliError> {
    struct Row {
        k: u32,
        nu: u32,
        sigma: u32,
        q: Vec<Rat>,
        qbar: Vec<Rat>,
        phase: Rat,
    }
    let rows: Vec<Row> = cat
        .vertices()
        .map(|k| {
            let (q, qbar) = cat.q_data(k).clone();
            Row {
                k,
                nu: cat.nu(k),
                sigma: cat.sigma(k),
                q,
                qbar,
                phase: cat.phase_of(k, n),
            }
        })
        .collect();
    let join = |v: &[Rat]| {
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    let text = match f {
        Format::Json => pretty(&json!({
            "type": cat.ty.to_string(),
            "b": cat.b,
            "f": cat.ring.f.to_string(),
            "h": cat.h(),
            "objects": rows.iter().map(|r| json!({
                "k": r.k, "nu": r.nu, "sigma": r.sigma, "n": n,
                "q": r.q.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                "qbar": r.qbar.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                "phase": r.phase.to_string(),
            })).collect::<Vec<_>>(),
        })),
        Format::Tsv => {
            let mut s = String::from("type\tk\tnu\tsigma\tq\tqbar\tphase\n");
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    cat.ty,
                    r.k,
                    r.nu,
                    r.sigma,
                    join(&r.q),
                    join(&r.qbar),
                    r.phase
                );
            }
            s
        }
        Format::Text => {
            let mut s = format!(
                "{}  f = {}  h = {}  base {}\n",
                type_label(cat),
                cat.ring.f,
                cat.h(),
                cat.principal.base
            );
            for r in &rows {
                let _ = writeln!(
                    s,
                    "k={:<2} nu={} sigma={} phase={:<6} q=({}) qbar=({})",
                    r.k,
                    r.nu,
                    r.sigma,
                    r.phase.to_string(),
                    join(&r.q),
                    join(&r.qbar)
                );
            }
            s
        }
    };
    Ok(Outcome { text, ok: true })
}
