//! Towers: a triangle capping a straight stack of quadrilaterals. Tower
//! decompositions of a dissection, the triangulations they induce, and the
//! tower and Pell arcs of a dissection.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use serde::Serialize;

use crate::geometry::{face_edges, Arc, Dissection, Face, GeometryError, Triangulation};

/// One tower inside a dissection.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Tower {
    /// The triangle vertex away from the stack. For a bare triangle this is
    /// its least vertex.
    pub roof: usize,
    /// The triangle, then the quadrilaterals in stacking order.
    pub faces: Vec<Face>,
    /// `rungs[m]` is the arc shared by `faces[m]` and `faces[m + 1]`.
    pub rungs: Vec<Arc>,
}

impl Tower {
    /// Number of quadrilaterals.
    pub fn height(&self) -> usize {
        self.faces.len() - 1
    }

    /// The `2k + 3` vertices of the tower in increasing order.
    pub fn vertices(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.faces.iter().flatten().copied().collect();
        set.into_iter().collect()
    }

    /// The side of the `m`-th quadrilateral opposite the one it shares with
    /// the face below it (`1 ≤ m ≤ height`).
    pub fn far_edge(&self, m: usize) -> Arc {
        opposite(&self.faces[m], self.rungs[m - 1])
    }

    /// The arcs fanning out from the roof, paired with `m` such that the arc
    /// ends on the far edge of the `m`-th quadrilateral. Such an arc has
    /// weight `ℓ_m`.
    pub fn fan(&self) -> Vec<(Arc, usize)> {
        (1..=self.height())
            .flat_map(|m| {
                let (x, y) = self.far_edge(m).endpoints();
                [(Arc::new(self.roof, x), m), (Arc::new(self.roof, y), m)]
            })
            .collect()
    }
}

/// A partition of the faces of a dissection into towers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct TowerDecomposition {
    pub n: usize,
    /// Sorted by face lists.
    pub towers: Vec<Tower>,
    /// Dissection arcs lying between two towers.
    pub glue_arcs: Vec<Arc>,
}

/// Adjacency of faces across dissection arcs.
struct Dual<'a> {
    d: &'a Dissection,
    sides: HashMap<Arc, [usize; 2]>,
}

impl<'a> Dual<'a> {
    fn new(d: &'a Dissection) -> Dual<'a> {
        Dual { d, sides: d.arc_sides() }
    }

    fn face(&self, f: usize) -> &'a Face {
        &self.d.faces()[f]
    }

    fn across(&self, f: usize, e: Arc) -> Option<usize> {
        let [x, y] = *self.sides.get(&e)?;
        Some(if x == f { y } else { x })
    }

    /// Walks from `from` across `e` through quadrilaterals, always leaving by
    /// the side opposite the one entered. Returns the quadrilaterals, the arcs
    /// crossed to enter each of them, and the triangle reached, if any.
    fn straight_walk(&self, from: usize, mut e: Arc) -> (Vec<usize>, Vec<Arc>, Option<(usize, Arc)>) {
        let mut quads = Vec::new();
        let mut entries = Vec::new();
        let mut here = from;
        loop {
            let Some(next) = self.across(here, e) else {
                return (quads, entries, None);
            };
            if self.face(next).len() == 3 {
                return (quads, entries, Some((next, e)));
            }
            quads.push(next);
            entries.push(e);
            here = next;
            e = opposite(self.face(next), e);
        }
    }

    /// Every tower contained in the dissection, as a face bitmask and the
    /// tower itself.
    fn candidate_towers(&self) -> Vec<(u64, Tower)> {
        let mut out = Vec::new();
        for (t, tri) in self.d.faces().iter().enumerate() {
            if tri.len() != 3 {
                continue;
            }
            out.push((1u64 << t, Tower { roof: tri[0], faces: vec![tri.clone()], rungs: Vec::new() }));
            for e0 in face_edges(tri) {
                let roof = apex(tri, e0);
                let (quads, entries, _) = self.straight_walk(t, e0);
                let mut mask = 1u64 << t;
                for m in 1..=quads.len() {
                    mask |= 1u64 << quads[m - 1];
                    let mut faces = vec![tri.clone()];
                    faces.extend(quads[..m].iter().map(|&q| self.face(q).clone()));
                    out.push((mask, Tower { roof, faces, rungs: entries[..m].to_vec() }));
                }
            }
        }
        out
    }
}

/// The vertex of a triangle not on `e`.
fn apex(tri: &[usize], e: Arc) -> usize {
    *tri.iter().find(|&&v| !e.has_endpoint(v)).expect("triangle has an apex")
}

/// The side of `face` at `v` other than `e`.
fn side_at(face: &[usize], v: usize, e: Arc) -> Arc {
    face_edges(face).find(|x| x.has_endpoint(v) && *x != e).expect("face has two sides at each vertex")
}

/// The side of a quadrilateral opposite `e`.
fn opposite(quad: &[usize], e: Arc) -> Arc {
    let edges: Vec<Arc> = face_edges(quad).collect();
    let k = edges.iter().position(|&x| x == e).expect("edge of the quadrilateral");
    edges[(k + 2) % 4]
}

fn check_faces(d: &Dissection) -> Result<(), GeometryError> {
    d.check_tri_quad()?;
    assert!(d.faces().len() <= 64, "too many faces for the bitmask search");
    Ok(())
}

/// Exact cover of the faces by candidate towers: always extend with a tower
/// through the lowest uncovered face.
struct Cover<'a> {
    full: u64,
    by_face: Vec<Vec<&'a (u64, Tower)>>,
    dead: HashSet<u64>,
}

impl<'a> Cover<'a> {
    fn new(faces: usize, candidates: &'a [(u64, Tower)]) -> Cover<'a> {
        let mut by_face: Vec<Vec<&(u64, Tower)>> = vec![Vec::new(); faces];
        for c in candidates {
            for (f, list) in by_face.iter_mut().enumerate() {
                if c.0 >> f & 1 == 1 {
                    list.push(c);
                }
            }
        }
        let full = if faces == 64 { u64::MAX } else { (1u64 << faces) - 1 };
        Cover { full, by_face, dead: HashSet::new() }
    }

    fn exists(&mut self, used: u64) -> bool {
        if used == self.full {
            return true;
        }
        if self.dead.contains(&used) {
            return false;
        }
        let f = (!used).trailing_zeros() as usize;
        for i in 0..self.by_face[f].len() {
            let mask = self.by_face[f][i].0;
            if mask & used == 0 && self.exists(used | mask) {
                return true;
            }
        }
        self.dead.insert(used);
        false
    }

    fn all(&mut self, used: u64, stack: &mut Vec<&'a Tower>, out: &mut Vec<Vec<&'a Tower>>) -> bool {
        if used == self.full {
            out.push(stack.clone());
            return true;
        }
        if self.dead.contains(&used) {
            return false;
        }
        let f = (!used).trailing_zeros() as usize;
        let mut found = false;
        for i in 0..self.by_face[f].len() {
            let (mask, tower) = self.by_face[f][i];
            if mask & used == 0 {
                stack.push(tower);
                found |= self.all(used | mask, stack, out);
                stack.pop();
            }
        }
        if !found {
            self.dead.insert(used);
        }
        found
    }
}

/// Does the dissection decompose into towers?
pub fn has_tower_decomposition(d: &Dissection) -> Result<bool, GeometryError> {
    check_faces(d)?;
    let dual = Dual::new(d);
    let candidates = dual.candidate_towers();
    Ok(Cover::new(d.faces().len(), &candidates).exists(0))
}

/// All tower decompositions, sorted.
pub fn enumerate_tower_decompositions(d: &Dissection) -> Result<Vec<TowerDecomposition>, GeometryError> {
    check_faces(d)?;
    let dual = Dual::new(d);
    let candidates = dual.candidate_towers();
    let mut cover = Cover::new(d.faces().len(), &candidates);
    let mut raw = Vec::new();
    cover.all(0, &mut Vec::new(), &mut raw);
    let mut out: Vec<TowerDecomposition> = raw.into_iter().map(|towers| assemble(d, towers)).collect();
    out.sort();
    Ok(out)
}

/// The least tower decomposition, if there is one.
pub fn tower_decomposition(d: &Dissection) -> Result<Option<TowerDecomposition>, GeometryError> {
    Ok(enumerate_tower_decompositions(d)?.into_iter().next())
}

fn assemble(d: &Dissection, towers: Vec<&Tower>) -> TowerDecomposition {
    let mut towers: Vec<Tower> = towers.into_iter().cloned().collect();
    towers.sort();
    let internal: BTreeSet<Arc> = towers.iter().flat_map(|t| t.rungs.iter().copied()).collect();
    let glue_arcs = d.arcs().iter().copied().filter(|a| !internal.contains(a)).collect();
    TowerDecomposition { n: d.n(), towers, glue_arcs }
}

/// Fans every tower from its roof and keeps the glue arcs. Every arc of the
/// result has unit weight in the frieze of the dissection.
pub fn unitary_from_towers(dec: &TowerDecomposition) -> Result<Triangulation, GeometryError> {
    let arcs = dec
        .towers
        .iter()
        .flat_map(|t| t.fan().into_iter().map(|(a, _)| a))
        .chain(dec.glue_arcs.iter().copied());
    Triangulation::new(dec.n, arcs)
}

/// Arcs from the roof of some tower contained in the dissection to the far
/// side of its `m`-th quadrilateral, keyed by arc with the value `m`.
/// Non-diagonal arcs (sides of the polygon) are left out.
pub fn tower_arcs(d: &Dissection) -> Result<BTreeMap<Arc, usize>, GeometryError> {
    check_faces(d)?;
    let dual = Dual::new(d);
    let mut out = BTreeMap::new();
    for (_, tower) in dual.candidate_towers() {
        for (a, m) in tower.fan() {
            if !a.is_boundary(d.n()) {
                out.insert(a, m);
            }
        }
    }
    Ok(out)
}

/// An arc joining the roofs of an `i`-tower and a `j`-tower that meet at a
/// vertex shared with a triangle between them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct PellArc {
    pub arc: Arc,
    pub i: usize,
    pub j: usize,
}

/// Every Pell arc of the dissection.
///
/// Starting from a tower with `i ≥ 1` quadrilaterals, take a side `(c, d)`
/// of its last quadrilateral with `d` on the far edge. If the face across
/// `(c, d)` is a triangle `(c, d, e)`, walk straight from it across `(d, e)`
/// through `j ≥ 0` quadrilaterals; if a triangle caps the walk, its apex
/// `b` and the first roof `a` span a Pell arc.
///
/// A 1-tower also yields one from the other end: if a side `(r, x)` of its
/// triangle at the roof `r` borders a triangle `(r, x, e)`, walk straight
/// across `(r, e)` to a triangle with apex `b`. The arc from `b` to the far
/// corner of the quadrilateral next to `x` is a Pell arc with `i = 1`.
///
/// If instead the face across `(c, d)` (or `(r, x)`) is a quadrilateral,
/// leave it by its other side at `d` (or `r`) into a triangle `(d, y, z)`,
/// which with the quadrilateral across `(y, z)` forms a 1-tower with roof
/// `d`. Its corner next to `z` is `b`, and the arc from `a` (or from the
/// corner next to `x`) to `b` is a Pell arc with `j = 1`.
pub fn pell_arcs(d: &Dissection) -> Result<Vec<PellArc>, GeometryError> {
    check_faces(d)?;
    let dual = Dual::new(d);
    let mut out = BTreeSet::new();
    let face_index: HashMap<&Face, usize> = d.faces().iter().enumerate().map(|(k, f)| (f, k)).collect();
    // Walks from triangle `delta` across `(pivot, apex)` to a capping
    // triangle and returns its apex and the number of quadrilaterals passed.
    let cap = |delta: usize, pivot: usize, apex_v: usize| {
        let (quads, _, end) = dual.straight_walk(delta, Arc::new(pivot, apex_v));
        end.map(|(t2, exit)| (apex(dual.face(t2), exit), quads.len()))
    };
    // From a triangle `(d, y, z)` entered by `bridge = (d, y)`, the corner
    // next to `z` on the quadrilateral across `(y, z)`.
    let beyond_bridge = |delta: usize, bridge: Arc, d: usize| {
        let z = apex(dual.face(delta), bridge);
        let base = Arc::new(z, bridge.other(d));
        let quad = dual.across(delta, base)?;
        (dual.face(quad).len() == 4).then(|| side_at(dual.face(quad), z, base).other(z))
    };
    for (_, tower) in dual.candidate_towers() {
        let i = tower.height();
        if i == 0 {
            continue;
        }
        if i == 1 {
            let tri = face_index[&tower.faces[0]];
            let quad = &tower.faces[1];
            for side in face_edges(&tower.faces[0]).filter(|e| e.has_endpoint(tower.roof)) {
                let Some(next) = dual.across(tri, side) else { continue };
                let x = side.other(tower.roof);
                let corner = side_at(quad, x, tower.rungs[0]).other(x);
                if dual.face(next).len() == 3 {
                    if let Some((b, j)) = cap(next, tower.roof, apex(dual.face(next), side)) {
                        out.insert(PellArc { arc: Arc::new(corner, b), i, j });
                    }
                    continue;
                }
                let bridge = side_at(dual.face(next), tower.roof, side);
                let Some(delta) = dual.across(next, bridge) else { continue };
                if dual.face(delta).len() != 3 {
                    continue;
                }
                if let Some(b) = beyond_bridge(delta, bridge, tower.roof) {
                    out.insert(PellArc { arc: Arc::new(corner, b), i, j: 1 });
                }
            }
        }
        let far = tower.far_edge(i);
        let entry = tower.rungs[i - 1];
        let last = face_index[&tower.faces[i]];
        for side in face_edges(&tower.faces[i]) {
            if side == far || side == entry {
                continue;
            }
            let Some(next) = dual.across(last, side) else { continue };
            let dv = if far.has_endpoint(side.u()) { side.u() } else { side.v() };
            if dual.face(next).len() == 3 {
                if let Some((b, j)) = cap(next, dv, apex(dual.face(next), side)) {
                    out.insert(PellArc { arc: Arc::new(tower.roof, b), i, j });
                }
                continue;
            }
            let bridge = side_at(dual.face(next), dv, side);
            let Some(delta) = dual.across(next, bridge) else { continue };
            let tri = dual.face(delta);
            if tri.len() != 3 {
                continue;
            }
            if let Some(b) = beyond_bridge(delta, bridge, dv) {
                out.insert(PellArc { arc: Arc::new(tower.roof, b), i, j: 1 });
            }
        }
    }
    Ok(out.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frieze::frieze_from_dissection;
    use crate::geometry::enumerate_dissections;
    use crate::ring::QuadInt;

    fn face(v: &[usize]) -> Face {
        v.to_vec()
    }

    fn ten_gon() -> Dissection {
        Dissection::from_pairs(10, &[(1, 9), (2, 8), (4, 8), (5, 7)]).unwrap()
    }

    #[test]
    fn bare_triangle() {
        let d = Dissection::empty(3).unwrap();
        let all = enumerate_tower_decompositions(&d).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].towers[0].height(), 0);
        assert!(all[0].glue_arcs.is_empty());
    }

    #[test]
    fn ten_gon_decompositions() {
        let all = enumerate_tower_decompositions(&ten_gon()).unwrap();
        assert_eq!(all.len(), 2);
        let summary: Vec<(Vec<(usize, Vec<Face>)>, Vec<Arc>)> = all
            .iter()
            .map(|dec| (dec.towers.iter().map(|t| (t.roof, t.faces.clone())).collect(), dec.glue_arcs.clone()))
            .collect();
        let glued_at_2_8 = (
            vec![
                (0, vec![face(&[0, 1, 9]), face(&[1, 2, 8, 9])]),
                (6, vec![face(&[5, 6, 7]), face(&[4, 5, 7, 8]), face(&[2, 3, 4, 8])]),
            ],
            vec![Arc::new(2, 8)],
        );
        let glued_at_4_8 = (
            vec![
                (0, vec![face(&[0, 1, 9]), face(&[1, 2, 8, 9]), face(&[2, 3, 4, 8])]),
                (6, vec![face(&[5, 6, 7]), face(&[4, 5, 7, 8])]),
            ],
            vec![Arc::new(4, 8)],
        );
        assert!(summary.contains(&glued_at_2_8));
        assert!(summary.contains(&glued_at_4_8));
    }

    #[test]
    fn four_angulations_have_none() {
        let d = Dissection::from_pairs(8, &[(0, 3), (4, 7)]).unwrap();
        assert!(!has_tower_decomposition(&d).unwrap());
        assert!(tower_decomposition(&d).unwrap().is_none());
    }

    #[test]
    fn not_tri_quad_is_rejected() {
        let d = Dissection::empty(5).unwrap();
        assert!(matches!(has_tower_decomposition(&d), Err(GeometryError::NotTriQuad(_))));
    }

    #[test]
    fn existence_matches_enumeration() {
        for n in 3..=9 {
            for d in enumerate_dissections(n, &[3, 4]).iter() {
                let all = enumerate_tower_decompositions(&d).unwrap();
                assert_eq!(has_tower_decomposition(&d).unwrap(), !all.is_empty(), "{d:?}");
                let mut sorted = all.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted, all);
            }
        }
    }

    #[test]
    fn fan_triangulations_are_unitary() {
        for n in 3..=9 {
            for d in enumerate_dissections(n, &[3, 4]).iter() {
                let t = frieze_from_dissection(&d).unwrap();
                for dec in enumerate_tower_decompositions(&d).unwrap() {
                    let tr = unitary_from_towers(&dec).unwrap();
                    assert!(tr.arcs().iter().all(|a| t.weight(*a).is_positive_unit()), "{d:?}");
                }
            }
        }
    }

    #[test]
    fn tower_and_pell_weights_hold_everywhere() {
        for n in 4..=10 {
            for d in enumerate_dissections(n, &[3, 4]).iter() {
                let t = frieze_from_dissection(&d).unwrap();
                for (a, m) in tower_arcs(&d).unwrap() {
                    assert_eq!(*t.weight(a), QuadInt::unit_power(m as i64), "{d:?} {a}");
                }
                for p in pell_arcs(&d).unwrap() {
                    let expected = QuadInt::unit_power((p.i + p.j + 1) as i64);
                    assert_eq!(*t.weight(p.arc), expected, "{d:?} {p:?}");
                }
            }
        }
    }

    #[test]
    fn ten_gon_tower_arcs() {
        let arcs = tower_arcs(&ten_gon()).unwrap();
        assert_eq!(arcs.get(&Arc::new(0, 8)), Some(&1));
        assert_eq!(arcs.get(&Arc::new(0, 4)), Some(&2));
        assert_eq!(arcs.get(&Arc::new(6, 2)), Some(&2));
    }
}
