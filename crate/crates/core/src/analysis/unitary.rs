//! Deciding whether a frieze is unitary, i.e. admits a triangulation all of
//! whose arcs carry unit weights.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::frieze::FriezeTable;
use crate::geometry::{crosses, Arc, Triangulation};

/// Diagonals whose weight is a positive unit.
pub fn unit_arcs(t: &FriezeTable) -> BTreeSet<Arc> {
    t.diagonals().filter(|(_, x)| x.is_positive_unit()).map(|(a, _)| a).collect()
}

/// Chords usable in a unitary triangulation, as an `n × n` matrix.
struct Usable {
    n: usize,
    ok: Vec<bool>,
}

impl Usable {
    fn new(t: &FriezeTable) -> Usable {
        let n = t.n();
        let mut ok = vec![false; n * n];
        for (a, x) in t.entries() {
            let usable = a.is_boundary(n) || x.is_positive_unit();
            ok[a.u() * n + a.v()] = usable;
        }
        Usable { n, ok }
    }

    fn get(&self, i: usize, j: usize) -> bool {
        self.ok[i * self.n + j]
    }

    /// Drops every chord crossing `forced`.
    fn force(&mut self, forced: Arc) {
        let n = self.n;
        for i in 0..n {
            for j in i + 1..n {
                if crosses(forced, Arc::new(i, j), n) {
                    self.ok[i * n + j] = false;
                }
            }
        }
    }

    /// `tri[i][j]`: the sub-polygon `i..=j` can be triangulated with usable
    /// chords, given that its base `(i,j)` is usable.
    fn triangulable(&self) -> Vec<bool> {
        let n = self.n;
        let mut tri = vec![false; n * n];
        for i in 0..n - 1 {
            tri[i * n + i + 1] = true;
        }
        for len in 2..n {
            for i in 0..n - len {
                let j = i + len;
                tri[i * n + j] = self.get(i, j) && (i + 1..j).any(|k| tri[i * n + k] && tri[k * n + j]);
            }
        }
        tri
    }

    fn feasible(&self) -> bool {
        let n = self.n;
        self.triangulable()[n - 1]
    }
}

/// Interval dynamic programme: is there a triangulation using only unit
/// arcs? `O(n³)`.
pub fn is_unitary(t: &FriezeTable) -> bool {
    Usable::new(t).feasible()
}

/// The lexicographically least unitary triangulation (comparing sorted arc
/// lists), if any.
pub fn find_unitary_triangulation(t: &FriezeTable) -> Option<Triangulation> {
    let n = t.n();
    let mut usable = Usable::new(t);
    if !usable.feasible() {
        return None;
    }
    // Greedy: the smallest arc that still extends to a unitary triangulation.
    let candidates: Vec<Arc> = unit_arcs(t).into_iter().collect();
    let mut chosen = Vec::with_capacity(n.saturating_sub(3));
    for a in candidates {
        if chosen.len() == n - 3 {
            break;
        }
        if chosen.iter().any(|&c| crosses(a, c, n)) || !usable.get(a.u(), a.v()) {
            continue;
        }
        let mut trial = Usable { n, ok: usable.ok.clone() };
        trial.force(a);
        if trial.feasible() {
            usable = trial;
            chosen.push(a);
        }
    }
    Some(Triangulation::new(n, chosen).expect("greedy choice yields a triangulation"))
}

/// Every unitary triangulation, sorted by arc list.
pub fn enumerate_unitary_triangulations(t: &FriezeTable) -> Vec<Triangulation> {
    let n = t.n();
    let usable = Usable::new(t);
    let tri = usable.triangulable();
    if !tri[n - 1] {
        return Vec::new();
    }
    let mut memo: HashMap<(usize, usize), Vec<Vec<Arc>>> = HashMap::new();
    let mut all: Vec<Vec<Arc>> = sub_triangulations(0, n - 1, n, &tri, &mut memo);
    for arcs in &mut all {
        arcs.sort_unstable();
    }
    all.sort_unstable();
    all.into_iter()
        .map(|arcs| Triangulation::new(n, arcs).expect("valid triangulation"))
        .collect()
}

fn sub_triangulations(
    i: usize,
    j: usize,
    n: usize,
    tri: &[bool],
    memo: &mut HashMap<(usize, usize), Vec<Vec<Arc>>>,
) -> Vec<Vec<Arc>> {
    if j == i + 1 {
        return vec![Vec::new()];
    }
    if let Some(hit) = memo.get(&(i, j)) {
        return hit.clone();
    }
    let mut out = Vec::new();
    for k in i + 1..j {
        if !(tri[i * n + k] && tri[k * n + j]) {
            continue;
        }
        let left = sub_triangulations(i, k, n, tri, memo);
        let right = sub_triangulations(k, j, n, tri, memo);
        for l in &left {
            for r in &right {
                let mut arcs = Vec::with_capacity(l.len() + r.len() + 2);
                if k - i >= 2 {
                    arcs.push(Arc::new(i, k));
                }
                if j - k >= 2 {
                    arcs.push(Arc::new(k, j));
                }
                arcs.extend_from_slice(l);
                arcs.extend_from_slice(r);
                out.push(arcs);
            }
        }
    }
    memo.insert((i, j), out.clone());
    out
}

/// A basic triangle of a sub-polygon: `apex` with both neighbours, cut off
/// by `chord`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ear {
    pub apex: usize,
    pub chord: Arc,
    /// The chord's weight is a unit.
    pub unit: bool,
}

/// All basic triangles of the polygon on `vertices` (in cyclic order). A
/// triangle has none: nothing remains to cut.
pub fn basic_triangles(vertices: &[usize], t: &FriezeTable) -> Vec<Ear> {
    let k = vertices.len();
    if k <= 3 {
        return Vec::new();
    }
    (0..k)
        .map(|idx| {
            let prev = vertices[(idx + k - 1) % k];
            let next = vertices[(idx + 1) % k];
            let chord = Arc::new(prev, next);
            Ear { apex: vertices[idx], chord, unit: t.weight(chord).is_positive_unit() }
        })
        .collect()
}

/// Repeatedly cuts off a basic triangle whose chord has unit weight, until a
/// triangle remains. All orders of ear removal are explored (with memoised
/// dead ends), so this succeeds exactly when some run of the procedure would.
pub fn triangulation_algorithm(t: &FriezeTable) -> Option<Triangulation> {
    let n = t.n();
    assert!(n <= 64, "polygon too large for the bitmask search");
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut dead: HashSet<u64> = HashSet::new();
    let mut path = Vec::with_capacity(n.saturating_sub(3));
    peel(t, full, &mut dead, &mut path).then(|| Triangulation::new(n, path).expect("peeled chords triangulate"))
}

fn peel(t: &FriezeTable, remaining: u64, dead: &mut HashSet<u64>, path: &mut Vec<Arc>) -> bool {
    if remaining.count_ones() <= 3 {
        return true;
    }
    if dead.contains(&remaining) {
        return false;
    }
    let vertices: Vec<usize> = (0..64).filter(|v| remaining >> v & 1 == 1).collect();
    for ear in basic_triangles(&vertices, t) {
        if !ear.unit {
            continue;
        }
        path.push(ear.chord);
        if peel(t, remaining & !(1u64 << ear.apex), dead, path) {
            return true;
        }
        path.pop();
    }
    dead.insert(remaining);
    false
}
