#![allow(dead_code)]

use std::collections::BTreeSet;

use frieze_core::geometry::Face;
use frieze_core::{Arc, Dissection, QuadInt};

pub fn q(text: &str) -> QuadInt {
    text.parse().unwrap_or_else(|e| panic!("{text}: {e}"))
}

pub fn arcs(pairs: &[(usize, usize)]) -> BTreeSet<Arc> {
    pairs.iter().map(|&(a, b)| Arc::new(a, b)).collect()
}

/// Repeats a printed row to `len` entries, assuming `period`.
pub fn extend_row(printed: &[&str], period: usize, len: usize) -> Vec<QuadInt> {
    (0..len).map(|c| q(printed[c % period])).collect()
}

/// The octagon pattern printed as a frieze that no dissection produces.
pub fn octagon_rows() -> Vec<Vec<QuadInt>> {
    let rows: [&[&str]; 9] = [
        &["0"],
        &["1"],
        &["√2", "1+√2"],
        &["1+√2"],
        &["2+√2", "2"],
        &["1+√2"],
        &["√2", "1+√2"],
        &["1"],
        &["0"],
    ];
    rows.iter().map(|r| extend_row(r, r.len(), 8)).collect()
}

/// The hexagon pattern printed as a frieze with a negative coefficient.
pub fn hexagon_rows() -> Vec<Vec<QuadInt>> {
    let rows: [&[&str]; 7] = [
        &["0"],
        &["1"],
        &["1+√2", "√2", "3-√2"],
        &["1+√2", "-3+3√2", "2√2"],
        &["1+√2", "√2", "3-√2"],
        &["1"],
        &["0"],
    ];
    rows.iter().map(|r| extend_row(r, r.len(), 6)).collect()
}

/// Faces sharing a side, i.e. two vertices.
fn adjacent(x: &Face, y: &Face) -> bool {
    x.iter().filter(|v| y.contains(v)).count() == 2
}

/// A block of faces is a tower when it holds one triangle and otherwise
/// quadrilaterals, is connected, and no vertex lies on more than two of its
/// faces.
pub fn is_tower_block(faces: &[&Face]) -> bool {
    if faces.iter().filter(|f| f.len() == 3).count() != 1 || faces.iter().any(|f| f.len() != 3 && f.len() != 4) {
        return false;
    }
    let mut seen = vec![false; faces.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(k) = stack.pop() {
        for (m, g) in faces.iter().enumerate() {
            if !seen[m] && adjacent(faces[k], g) {
                seen[m] = true;
                stack.push(m);
            }
        }
    }
    if seen.contains(&false) {
        return false;
    }
    let vertices: BTreeSet<usize> = faces.iter().flat_map(|f| f.iter().copied()).collect();
    vertices.iter().all(|v| faces.iter().filter(|f| f.contains(v)).count() <= 2)
}

fn set_partitions(items: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let Some((&first, rest)) = items.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    for part in set_partitions(rest) {
        for k in 0..part.len() {
            let mut p = part.clone();
            p[k].insert(0, first);
            out.push(p);
        }
        let mut p = part;
        p.push(vec![first]);
        out.push(p);
    }
    out
}

/// Every partition of the faces into tower blocks, each block as sorted face
/// indices, the partition sorted.
pub fn brute_force_tower_partitions(d: &Dissection) -> BTreeSet<Vec<Vec<usize>>> {
    let faces = d.faces();
    let idx: Vec<usize> = (0..faces.len()).collect();
    set_partitions(&idx)
        .into_iter()
        .filter(|p| p.iter().all(|block| is_tower_block(&block.iter().map(|&k| &faces[k]).collect::<Vec<_>>())))
        .map(|mut p| {
            p.iter_mut().for_each(|b| b.sort());
            p.sort();
            p
        })
        .collect()
}
