//! Exhaustive scans over enumerated dissections: unitarity against tower
//! decomposability, and the local check that the only new unit arcs next to
//! tower arcs are Pell arcs.

use std::collections::BTreeSet;

use serde::Serialize;

use super::towers::{pell_arcs, tower_arcs, tower_decomposition, unitary_from_towers};
use super::unitary::{is_unitary, triangulation_algorithm};
use crate::frieze::{frieze_from_dissection, verify_frieze, FriezeTable};
use crate::geometry::{enumerate_dissections, Arc, Dissection, DissectionEnumeration, DissectionFile};

/// Which dissections take part in a scan.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ScanFilters {
    /// Keep dissections whose vertices meet at most this many faces.
    pub type_max: Option<usize>,
    pub separated_only: bool,
    /// Enumerate 4-angulations only. Indices then refer to that enumeration.
    pub four_angulations_only: bool,
}

#[derive(Debug, Clone)]
pub struct ScanOptions {
    /// Worker threads; 0 lets the pool decide.
    pub workers: usize,
    /// Skip enumeration indices below this one.
    pub from_index: usize,
    /// Also check the Ptolemy relations of every frieze.
    pub verify_friezes: bool,
    /// Also run the ear-removal search and compare it with the interval DP.
    pub check_algorithm: bool,
    pub max_counterexamples: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            workers: 0,
            from_index: 0,
            verify_friezes: false,
            check_algorithm: true,
            max_counterexamples: 100,
        }
    }
}

/// A dissection identified by its position in the enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexedDissection {
    pub index: usize,
    pub dissection: DissectionFile,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ScanCounts {
    pub unitary: usize,
    pub tower_decomposable: usize,
    pub both: usize,
    pub neither: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub n: usize,
    pub filters: ScanFilters,
    pub from_index: usize,
    /// Size of the underlying enumeration.
    pub enumerated: usize,
    /// Dissections that passed the filters.
    pub scanned: usize,
    pub counts: ScanCounts,
    /// Unitary but not tower-decomposable, i.e. counterexamples to the
    /// conjecture. Counted in full, stored up to the configured limit.
    pub counterexample_count: usize,
    pub counterexamples: Vec<IndexedDissection>,
}

/// A proven statement failed on some dissection. This means a bug.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, thiserror::Error)]
#[error("hard invariant failed at n={n}, index {index}: {reason}")]
pub struct HardFailure {
    pub n: usize,
    pub index: usize,
    pub dissection: DissectionFile,
    pub reason: String,
}

enum Verdict {
    Skipped,
    Checked { unitary: bool, towers: bool },
}

fn enumeration(n: usize, filters: &ScanFilters) -> DissectionEnumeration {
    if filters.four_angulations_only {
        enumerate_dissections(n, &[4])
    } else {
        enumerate_dissections(n, &[3, 4])
    }
}

fn passes(d: &Dissection, filters: &ScanFilters) -> bool {
    if filters.type_max.is_some_and(|t| d.type_of() > t) {
        return false;
    }
    if filters.separated_only && !d.is_separated().unwrap_or(false) {
        return false;
    }
    true
}

fn judge(d: &Dissection, index: usize, filters: &ScanFilters, opts: &ScanOptions) -> Result<Verdict, HardFailure> {
    if !passes(d, filters) {
        return Ok(Verdict::Skipped);
    }
    let fail = |reason: String| HardFailure { n: d.n(), index, dissection: d.to_file(), reason };
    let t = frieze_from_dissection(d).map_err(|e| fail(e.to_string()))?;
    if opts.verify_friezes {
        verify_frieze(&t).map_err(|v| fail(format!("frieze violates {v}")))?;
    }
    let unitary = is_unitary(&t);
    if opts.check_algorithm && triangulation_algorithm(&t).is_some() != unitary {
        return Err(fail(format!("ear removal disagrees with the interval search (unitary = {unitary})")));
    }
    let dec = tower_decomposition(d).map_err(|e| fail(e.to_string()))?;
    if let Some(dec) = &dec {
        let tr = unitary_from_towers(dec).map_err(|e| fail(format!("tower fan is not a triangulation: {e}")))?;
        if let Some(a) = tr.arcs().iter().find(|a| !t.weight(**a).is_positive_unit()) {
            return Err(fail(format!("tower fan arc {a} has weight {}", t.weight(*a))));
        }
        if !unitary {
            return Err(fail("tower decomposition without a unitary triangulation".into()));
        }
    }
    Ok(Verdict::Checked { unitary, towers: dec.is_some() })
}

/// Applies `f` to every index in `from..len`, keeping the order.
#[cfg(feature = "parallel")]
fn map_indices<T: Send>(len: usize, from: usize, workers: usize, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
    use rayon::prelude::*;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(workers).build().expect("thread pool");
    pool.install(|| (from.min(len)..len).into_par_iter().map(f).collect())
}

#[cfg(not(feature = "parallel"))]
fn map_indices<T: Send>(len: usize, from: usize, _workers: usize, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
    map_indices_sequential(len, from, f)
}

fn map_indices_sequential<T>(len: usize, from: usize, f: impl Fn(usize) -> T) -> Vec<T> {
    (from.min(len)..len).map(f).collect()
}

/// Checks every dissection of the `n`-gon passing the filters: is its frieze
/// unitary, does it decompose into towers? A tower decomposition always gives a
/// unitary triangulation, so failing that is an error; unitary
/// dissections without towers are collected as counterexamples.
///
/// The report does not depend on the number of workers.
pub fn conjecture_scan(n: usize, filters: &ScanFilters, opts: &ScanOptions) -> Result<ScanReport, HardFailure> {
    let list = enumeration(n, filters);
    let verdicts = map_indices(list.len(), opts.from_index, opts.workers, |i| {
        judge(&list.get(i).expect("index in range"), i, filters, opts)
    });
    merge(n, &list, filters, opts, verdicts)
}

/// [`conjecture_scan`] on the calling thread.
pub fn conjecture_scan_sequential(
    n: usize,
    filters: &ScanFilters,
    opts: &ScanOptions,
) -> Result<ScanReport, HardFailure> {
    let list = enumeration(n, filters);
    let verdicts = map_indices_sequential(list.len(), opts.from_index, |i| {
        judge(&list.get(i).expect("index in range"), i, filters, opts)
    });
    merge(n, &list, filters, opts, verdicts)
}

fn merge(
    n: usize,
    list: &DissectionEnumeration,
    filters: &ScanFilters,
    opts: &ScanOptions,
    verdicts: Vec<Result<Verdict, HardFailure>>,
) -> Result<ScanReport, HardFailure> {
    let from = opts.from_index.min(list.len());
    let mut report = ScanReport {
        n,
        filters: *filters,
        from_index: from,
        enumerated: list.len(),
        scanned: 0,
        counts: ScanCounts::default(),
        counterexample_count: 0,
        counterexamples: Vec::new(),
    };
    for (offset, v) in verdicts.into_iter().enumerate() {
        let Verdict::Checked { unitary, towers } = v? else { continue };
        let c = &mut report.counts;
        report.scanned += 1;
        c.unitary += usize::from(unitary);
        c.tower_decomposable += usize::from(towers);
        match (unitary, towers) {
            (true, true) => c.both += 1,
            (false, false) => c.neither += 1,
            (true, false) => {
                report.counterexample_count += 1;
                if report.counterexamples.len() < opts.max_counterexamples {
                    let index = from + offset;
                    let d = list.get(index).expect("index in range");
                    report.counterexamples.push(IndexedDissection { index, dissection: d.to_file() });
                }
            }
            (false, true) => unreachable!("rejected as a hard failure"),
        }
    }
    Ok(report)
}

/// A vertex triple with two sides among the allowed arcs whose third side
/// is a unit but neither allowed nor a Pell arc.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma56Violation {
    pub index: usize,
    pub dissection: DissectionFile,
    pub triangle: [usize; 3],
    pub arc: Arc,
    pub weight: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma56Report {
    pub n: usize,
    pub from_index: usize,
    pub enumerated: usize,
    /// Dissections of type at most 3.
    pub checked: usize,
    /// Triples with two allowed sides and a third side that is not allowed.
    pub triangles_checked: usize,
    pub violation_count: usize,
    pub violations: Vec<Lemma56Violation>,
}

/// Third sides violating the rule in one dissection. Allowed arcs are polygon
/// sides, dissection arcs and tower arcs; returns the triples examined too.
pub fn lemma56_violations(d: &Dissection, t: &FriezeTable) -> (usize, Vec<([usize; 3], Arc)>) {
    let n = d.n();
    let mut allowed = vec![false; n * n];
    let mut mark = |a: Arc| {
        allowed[a.u() * n + a.v()] = true;
    };
    (0..n).for_each(|v| mark(Arc::new(v, (v + 1) % n)));
    d.arcs().iter().copied().for_each(&mut mark);
    tower_arcs(d).expect("tri/quad dissection").into_keys().for_each(&mut mark);
    let pell: BTreeSet<Arc> = pell_arcs(d).expect("tri/quad dissection").into_iter().map(|p| p.arc).collect();
    let ok = |x: usize, y: usize| allowed[x.min(y) * n + x.max(y)];

    let mut examined = 0;
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                let sides = [(x, y), (y, z), (x, z)];
                let good: Vec<bool> = sides.iter().map(|&(p, q)| ok(p, q)).collect();
                if good.iter().filter(|&&g| g).count() != 2 {
                    continue;
                }
                let (p, q) = sides[good.iter().position(|&g| !g).expect("one side missing")];
                let third = Arc::new(p, q);
                examined += 1;
                if t.weight(third).is_positive_unit() && !pell.contains(&third) {
                    out.push(([x, y, z], third));
                }
            }
        }
    }
    (examined, out)
}

/// Runs [`lemma56_violations`] over every dissection of type at most 3.
pub fn lemma56_scan(n: usize, opts: &ScanOptions) -> Lemma56Report {
    let list = enumerate_dissections(n, &[3, 4]);
    let results = map_indices(list.len(), opts.from_index, opts.workers, |i| {
        let d = list.get(i).expect("index in range");
        if d.type_of() > 3 {
            return None;
        }
        let t = frieze_from_dissection(&d).expect("tri/quad dissection");
        let (examined, bad) = lemma56_violations(&d, &t);
        let bad: Vec<Lemma56Violation> = bad
            .into_iter()
            .map(|(triangle, arc)| Lemma56Violation {
                index: i,
                dissection: d.to_file(),
                triangle,
                arc,
                weight: t.weight(arc).to_string(),
            })
            .collect();
        Some((examined, bad))
    });
    let mut report = Lemma56Report {
        n,
        from_index: opts.from_index.min(list.len()),
        enumerated: list.len(),
        checked: 0,
        triangles_checked: 0,
        violation_count: 0,
        violations: Vec::new(),
    };
    for (examined, bad) in results.into_iter().flatten() {
        report.checked += 1;
        report.triangles_checked += examined;
        report.violation_count += bad.len();
        let room = opts.max_counterexamples.saturating_sub(report.violations.len());
        report.violations.extend(bad.into_iter().take(room));
    }
    report
}
