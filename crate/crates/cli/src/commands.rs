use std::fmt::Write as _;
use std::io::Read;
use std::path::Path;

use frieze_core::analysis::{
    conjecture_scan, enumerate_tower_decompositions, enumerate_unitary_triangulations, find_unitary_triangulation,
    lemma56_scan, tower_decomposition, unit_arcs, ScanFilters, ScanOptions,
};
use frieze_core::frieze::to_frieze_pattern;
use frieze_core::geometry::DissectionFile;
use frieze_core::render::render_svg;
use frieze_core::sequences::{render_table, table};
use frieze_core::{classify, frieze_from_dissection, verify_frieze, Dissection, FriezeTable};
use serde_json::{json, Value};

use crate::{CliError, Format, Output, ScanArgs};

pub fn read_dissection(path: &Path) -> Result<Dissection, CliError> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::Io(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?
    };
    let file: DissectionFile =
        serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    file.into_dissection().map_err(|e| CliError::Invalid(e.to_string()))
}

pub fn write_out(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| CliError::Io(format!("stdout: {e}")))
        }
    }
}

pub fn emit(out: &Output, text: String) -> Result<(), CliError> {
    write_out(out.output.as_deref(), &text)
}

fn to_json(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn frieze_of(d: &Dissection) -> Result<FriezeTable, CliError> {
    frieze_from_dissection(d).map_err(|e| CliError::Invalid(e.to_string()))
}

pub fn frieze(d: &Dissection, verify: bool, format: Format) -> Result<String, CliError> {
    let t = frieze_of(d)?;
    if verify {
        verify_frieze(&t).map_err(|v| CliError::HardInvariant(format!("frieze of {d:?}: {v}")))?;
        eprintln!("Ptolemy relations verified");
    }
    let pattern = to_frieze_pattern(&t);
    Ok(match format {
        Format::Json => {
            let rows: Vec<Vec<String>> =
                pattern.rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
            let mut v = serde_json::to_value(t.json()).expect("serializable");
            v["pattern"] = json!(rows);
            if verify {
                v["verified"] = json!(true);
            }
            to_json(&v)
        }
        Format::Text => {
            let mut s = format!("n = {}\n", t.n());
            for (a, w) in t.entries() {
                let _ = writeln!(s, "f({},{}) = {w}", a.u(), a.v());
            }
            s.push('\n');
            s.push_str(&pattern.to_string());
            s
        }
    })
}

pub fn check(d: &Dissection, format: Format) -> Result<String, CliError> {
    let t = frieze_of(d)?;
    let invalid = |e: frieze_core::geometry::GeometryError| CliError::Invalid(e.to_string());
    let witnesses = enumerate_unitary_triangulations(&t);
    let witness = find_unitary_triangulation(&t);
    let decompositions = enumerate_tower_decompositions(d).map_err(invalid)?;
    let first = tower_decomposition(d).map_err(invalid)?;
    let class = classify(&t);
    let separated = d.is_separated().map_err(invalid)?;
    let v = json!({
        "n": d.n(),
        "arcs": d.to_file().arcs,
        "unitary": witness.is_some(),
        "unitary_witnesses_count": witnesses.len(),
        "witness": witness.as_ref().map(|w| w.arcs().to_vec()),
        "tower_decomposable": first.is_some(),
        "decompositions": decompositions.len(),
        "decomposition": first,
        "type": d.type_of(),
        "separated": separated,
        "class": class,
    });
    Ok(match format {
        Format::Json => to_json(&v),
        Format::Text => {
            let mut s = String::new();
            let arcs = |list: &[frieze_core::Arc]| list.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
            let _ = writeln!(s, "dissection: n = {}, arcs {}", d.n(), arcs(d.arcs()));
            let _ = writeln!(s, "type: {}", d.type_of());
            let _ = writeln!(s, "separated: {separated}");
            let _ = writeln!(s, "ge1: {}, nonneg_coeffs: {}", class.ge1, class.nonneg_coeffs);
            let _ = writeln!(s, "unitary: {} ({} unitary triangulations)", witness.is_some(), witnesses.len());
            if let Some(w) = &witness {
                let _ = writeln!(s, "witness: {}", arcs(w.arcs()));
            }
            let _ = writeln!(s, "tower_decomposable: {} ({} decompositions)", first.is_some(), decompositions.len());
            if let Some(dec) = &first {
                for tower in &dec.towers {
                    let faces: Vec<String> = tower.faces.iter().map(|f| format!("{f:?}")).collect();
                    let _ = writeln!(s, "  tower: roof {}, faces {}", tower.roof, faces.join(" "));
                }
                let _ = writeln!(s, "  glue: {}", arcs(&dec.glue_arcs));
            }
            s
        }
    })
}

pub fn scan(args: &ScanArgs) -> Result<String, CliError> {
    let (lo, hi) = args.n;
    if args.lemma56 && (args.type_max.is_some() || args.separated_only || args.four_angulations) {
        return Err(CliError::Usage("--lemma56 takes no filters; it checks type <= 3 dissections".into()));
    }
    let filters = ScanFilters {
        type_max: args.type_max,
        separated_only: args.separated_only,
        four_angulations_only: args.four_angulations,
    };
    let opts_for = |n: usize| ScanOptions {
        workers: args.workers,
        from_index: if n == lo { args.from_index } else { 0 },
        verify_friezes: args.verify,
        check_algorithm: true,
        max_counterexamples: args.max_reported,
    };
    let json = args.out.format == Format::Json;
    let mut text = String::new();
    if args.lemma56 {
        let mut reports = Vec::new();
        let _ = writeln!(text, "{:>3} {:>11} {:>8} {:>10} {:>11}", "n", "enumerated", "checked", "triangles", "violations");
        for n in lo..=hi {
            eprintln!("lemma scan n={n}");
            let r = lemma56_scan(n, &opts_for(n));
            let _ = writeln!(
                text,
                "{:>3} {:>11} {:>8} {:>10} {:>11}",
                n, r.enumerated, r.checked, r.triangles_checked, r.violation_count
            );
            reports.push(r);
        }
        let total: usize = reports.iter().map(|r| r.violation_count).sum();
        for r in &reports {
            for v in &r.violations {
                let _ = writeln!(
                    text,
                    "violation n={} index={} arcs={:?} triangle={:?} arc={} weight={}",
                    r.n, v.index, v.dissection.arcs, v.triangle, v.arc, v.weight
                );
            }
        }
        let _ = writeln!(text, "violations: {total}");
        return Ok(if json { to_json(&json!({"kind": "lemma56", "violations": total, "reports": reports})) } else { text });
    }
    let mut reports = Vec::new();
    let _ = writeln!(
        text,
        "{:>3} {:>11} {:>8} {:>8} {:>7} {:>7} {:>8} {:>16}",
        "n", "enumerated", "scanned", "unitary", "towers", "both", "neither", "counterexamples"
    );
    for n in lo..=hi {
        eprintln!("scan n={n}");
        let r = conjecture_scan(n, &filters, &opts_for(n)).map_err(|f| {
            CliError::HardInvariant(format!("{f}; dissection {}", serde_json::to_string(&f.dissection).unwrap()))
        })?;
        let c = &r.counts;
        let _ = writeln!(
            text,
            "{:>3} {:>11} {:>8} {:>8} {:>7} {:>7} {:>8} {:>16}",
            n, r.enumerated, r.scanned, c.unitary, c.tower_decomposable, c.both, c.neither, r.counterexample_count
        );
        reports.push(r);
    }
    let total: usize = reports.iter().map(|r| r.counterexample_count).sum();
    for r in &reports {
        for cx in &r.counterexamples {
            let _ = writeln!(text, "counterexample n={} index={} arcs={:?}", r.n, cx.index, cx.dissection.arcs);
        }
    }
    let _ = writeln!(text, "counterexamples: {total}");
    if total > 0 {
        eprintln!("found {total} dissections that are unitary without a tower decomposition");
    }
    let all: Vec<_> = reports.iter().flat_map(|r| &r.counterexamples).collect();
    let unitary: usize = reports.iter().map(|r| r.counts.unitary).sum();
    Ok(if json {
        to_json(&json!({
            "kind": "conjecture",
            "unitary": unitary,
            "counterexample_count": total,
            "counterexamples": all,
            "reports": reports,
        }))
    } else {
        text
    })
}

pub fn render(d: &Dissection, overlay_units: bool) -> Result<String, CliError> {
    let overlay = if overlay_units {
        let t = frieze_of(d)?;
        unit_arcs(&t).into_iter().filter(|a| !d.contains_arc(*a)).map(|a| (a, t.weight(a).clone())).collect()
    } else {
        Vec::new()
    };
    Ok(render_svg(d, &overlay))
}

pub fn sequences(max: usize, format: Format) -> String {
    let rows = table(max);
    match format {
        Format::Text => render_table(&rows),
        Format::Json => {
            let v: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "s": r.s.to_string(),
                        "d": r.d.to_string(),
                        "ell": r.ell.to_string(),
                        "a": r.a.to_string(),
                        "b": r.b.to_string(),
                        "pell": r.pell.to_string(),
                    })
                })
                .collect();
            to_json(&v)
        }
    }
}
