//! Convex polygons, arcs and dissections.
//!
//! Vertices of an `n`-gon are `0..n` in cyclic order. A [`Dissection`] stores
//! only its diagonals; boundary edges are implicit.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc as Shared;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("a polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertex {vertex} out of range for a {n}-gon")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("arc ({0},{0}) has equal endpoints")]
    DegenerateArc(usize),
    #[error("{0} is a boundary edge, not a diagonal")]
    BoundaryArc(Arc),
    #[error("arc {0} listed twice")]
    DuplicateArc(Arc),
    #[error("arcs {0} and {1} cross")]
    Crossing(Arc, Arc),
    #[error("face {0:?} is neither a triangle nor a quadrilateral")]
    NotTriQuad(Vec<usize>),
    #[error("face {0:?} is not a triangle")]
    NotTriangulation(Vec<usize>),
}

/// An unordered pair of distinct vertices, stored with `u < v`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", try_from = "[usize; 2]")]
pub struct Arc {
    u: usize,
    v: usize,
}

impl Arc {
    /// Panics if `x == y`; use [`Arc::try_new`] for untrusted input.
    pub fn new(x: usize, y: usize) -> Arc {
        Arc::try_new(x, y).expect("arc endpoints must differ")
    }

    pub fn try_new(x: usize, y: usize) -> Result<Arc, GeometryError> {
        match x.cmp(&y) {
            std::cmp::Ordering::Less => Ok(Arc { u: x, v: y }),
            std::cmp::Ordering::Greater => Ok(Arc { u: y, v: x }),
            std::cmp::Ordering::Equal => Err(GeometryError::DegenerateArc(x)),
        }
    }

    pub fn u(self) -> usize {
        self.u
    }

    pub fn v(self) -> usize {
        self.v
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn has_endpoint(self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint that is not `x`.
    pub fn other(self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            debug_assert_eq!(self.v, x);
            self.u
        }
    }

    pub fn is_boundary(self, n: usize) -> bool {
        self.v - self.u == 1 || (self.u == 0 && self.v == n - 1)
    }

    /// Strictly inside the open interval `(u, v)`; for arcs of a convex
    /// polygon this is one of the two sides of the chord.
    fn separates(self, x: usize) -> bool {
        self.u < x && x < self.v
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

impl fmt::Debug for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Arc> for [usize; 2] {
    fn from(a: Arc) -> Self {
        [a.u, a.v]
    }
}

impl TryFrom<[usize; 2]> for Arc {
    type Error = GeometryError;
    fn try_from(p: [usize; 2]) -> Result<Self, Self::Error> {
        Arc::try_new(p[0], p[1])
    }
}

/// Whether two arcs of an `n`-gon cross in their interiors. Arcs sharing an
/// endpoint never cross, and neither do boundary edges.
pub fn crosses(x: Arc, y: Arc, n: usize) -> bool {
    debug_assert!(x.v < n && y.v < n);
    if x.has_endpoint(y.u) || x.has_endpoint(y.v) {
        return false;
    }
    x.separates(y.u) != x.separates(y.v)
}

/// A face of a dissection: its vertices in increasing (hence cyclic) order.
pub type Face = Vec<usize>;

/// A validated set of pairwise non-crossing diagonals of an `n`-gon, with its
/// faces.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Dissection {
    n: usize,
    arcs: Vec<Arc>,
    faces: Vec<Face>,
}

impl Dissection {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = Arc>) -> Result<Dissection, GeometryError> {
        if n < 3 {
            return Err(GeometryError::TooFewVertices(n));
        }
        let mut list: Vec<Arc> = arcs.into_iter().collect();
        for a in &list {
            if a.v >= n {
                return Err(GeometryError::VertexOutOfRange { vertex: a.v, n });
            }
            if a.is_boundary(n) {
                return Err(GeometryError::BoundaryArc(*a));
            }
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GeometryError::DuplicateArc(w[0]));
        }
        for (i, &x) in list.iter().enumerate() {
            for &y in &list[i + 1..] {
                if crosses(x, y, n) {
                    return Err(GeometryError::Crossing(x, y));
                }
            }
        }
        let faces = extract_faces(n, &list);
        Ok(Dissection { n, arcs: list, faces })
    }

    /// Builds from `(u, v)` pairs in any order.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Dissection, GeometryError> {
        let arcs = pairs
            .iter()
            .map(|&(x, y)| {
                if x >= n || y >= n {
                    return Err(GeometryError::VertexOutOfRange { vertex: x.max(y), n });
                }
                Arc::try_new(x, y)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Dissection::new(n, arcs)
    }

    /// The undissected polygon.
    pub fn empty(n: usize) -> Result<Dissection, GeometryError> {
        Dissection::new(n, [])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Diagonals in increasing order.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Faces sorted lexicographically, each listed in increasing vertex order.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn contains_arc(&self, a: Arc) -> bool {
        self.arcs.binary_search(&a).is_ok()
    }

    pub fn is_boundary(&self, a: Arc) -> bool {
        a.is_boundary(self.n)
    }

    /// Every face is a triangle or a quadrilateral.
    pub fn is_tri_quad(&self) -> bool {
        self.faces.iter().all(|f| f.len() == 3 || f.len() == 4)
    }

    pub fn check_tri_quad(&self) -> Result<(), GeometryError> {
        match self.faces.iter().find(|f| f.len() != 3 && f.len() != 4) {
            Some(f) => Err(GeometryError::NotTriQuad(f.clone())),
            None => Ok(()),
        }
    }

    pub fn is_triangulation(&self) -> bool {
        self.arcs.len() + 3 == self.n
    }

    pub fn is_four_angulation(&self) -> bool {
        self.faces.iter().all(|f| f.len() == 4)
    }

    /// Number of faces containing each vertex.
    pub fn vertex_face_degree(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for f in &self.faces {
            for &v in f {
                deg[v] += 1;
            }
        }
        deg
    }

    /// The least `d` such that every vertex lies on at most `d` faces.
    pub fn type_of(&self) -> usize {
        self.vertex_face_degree().into_iter().max().unwrap_or(0)
    }

    /// Faces with exactly two sides on the polygon boundary.
    pub fn basic_triangles(&self) -> Vec<&Face> {
        self.faces
            .iter()
            .filter(|f| f.len() == 3 && face_edges(f).filter(|e| e.is_boundary(self.n)).count() == 2)
            .collect()
    }

    /// Separated: exactly one arc borders both a triangle and a quadrilateral,
    /// and in that quadrilateral both sides adjacent to the arc are polygon
    /// boundary edges. Pure triangulations and pure 4-angulations are not
    /// separated.
    pub fn is_separated(&self) -> Result<bool, GeometryError> {
        self.check_tri_quad()?;
        let sides = self.arc_sides();
        let mixed: Vec<(Arc, usize)> = self
            .arcs
            .iter()
            .filter_map(|a| {
                let [f, g] = sides[a];
                match (self.faces[f].len(), self.faces[g].len()) {
                    (3, 4) => Some((*a, g)),
                    (4, 3) => Some((*a, f)),
                    _ => None,
                }
            })
            .collect();
        let [(bridge, quad)] = mixed[..] else {
            return Ok(false);
        };
        let (x, y) = bridge.endpoints();
        let ok = face_edges(&self.faces[quad])
            .filter(|e| *e != bridge && (e.has_endpoint(x) || e.has_endpoint(y)))
            .all(|e| e.is_boundary(self.n));
        Ok(ok)
    }

    /// For each diagonal, the indices of the two faces it borders.
    pub fn arc_sides(&self) -> HashMap<Arc, [usize; 2]> {
        let mut partial: HashMap<Arc, Vec<usize>> = HashMap::new();
        for (idx, f) in self.faces.iter().enumerate() {
            for e in face_edges(f) {
                if !e.is_boundary(self.n) {
                    partial.entry(e).or_default().push(idx);
                }
            }
        }
        partial
            .into_iter()
            .map(|(a, v)| {
                debug_assert_eq!(v.len(), 2);
                (a, [v[0], v[1]])
            })
            .collect()
    }

    /// Diagonals of the polygon crossing `a`.
    pub fn crossing_arcs(&self, a: Arc) -> impl Iterator<Item = Arc> + '_ {
        self.arcs.iter().copied().filter(move |&b| crosses(a, b, self.n))
    }

    pub fn to_file(&self) -> DissectionFile {
        DissectionFile { n: self.n, arcs: self.arcs.iter().map(|a| [a.u, a.v]).collect() }
    }
}

impl fmt::Debug for Dissection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dissection(n={}, arcs={:?})", self.n, self.arcs)
    }
}

/// A dissection all of whose faces are triangles.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Triangulation(Dissection);

impl Triangulation {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = Arc>) -> Result<Triangulation, GeometryError> {
        Triangulation::try_from(Dissection::new(n, arcs)?)
    }

    pub fn dissection(&self) -> &Dissection {
        &self.0
    }

    pub fn into_dissection(self) -> Dissection {
        self.0
    }
}

impl TryFrom<Dissection> for Triangulation {
    type Error = GeometryError;
    fn try_from(d: Dissection) -> Result<Self, Self::Error> {
        match d.faces.iter().find(|f| f.len() != 3) {
            Some(f) => Err(GeometryError::NotTriangulation(f.clone())),
            None => Ok(Triangulation(d)),
        }
    }
}

impl std::ops::Deref for Triangulation {
    type Target = Dissection;
    fn deref(&self) -> &Dissection {
        &self.0
    }
}

impl fmt::Debug for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Triangulation(n={}, arcs={:?})", self.0.n, self.0.arcs)
    }
}

/// The sides of a face in cyclic order, starting with `(f[0], f[1])`.
pub fn face_edges(face: &[usize]) -> impl Iterator<Item = Arc> + '_ {
    let k = face.len();
    (0..k).map(move |i| Arc::new(face[i], face[(i + 1) % k]))
}

/// Corner walk: each directed edge `u → v` that has its face on the
/// increasing side continues at `v` with the neighbour reached by turning as
/// far as possible before coming back to `u`.
fn extract_faces(n: usize, arcs: &[Arc]) -> Vec<Face> {
    let mut nbrs: Vec<Vec<usize>> = (0..n).map(|v| vec![(v + n - 1) % n, (v + 1) % n]).collect();
    for a in arcs {
        nbrs[a.u].push(a.v);
        nbrs[a.v].push(a.u);
    }
    let fwd = |from: usize, to: usize| (to + n - from) % n;
    for (v, list) in nbrs.iter_mut().enumerate() {
        list.sort_unstable_by_key(|&w| fwd(v, w));
    }

    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut starts: Vec<(usize, usize)> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    for a in arcs {
        starts.push((a.u, a.v));
        starts.push((a.v, a.u));
    }

    let mut faces = Vec::with_capacity(arcs.len() + 1);
    for start in starts {
        if seen.contains(&start) {
            continue;
        }
        let mut face = Vec::new();
        let (mut u, mut v) = start;
        loop {
            seen.insert((u, v));
            face.push(u);
            let limit = fwd(v, u);
            let w = *nbrs[v]
                .iter()
                .rev()
                .find(|&&w| fwd(v, w) < limit)
                .unwrap_or(&u);
            u = v;
            v = w;
            if (u, v) == start {
                break;
            }
        }
        face.sort_unstable();
        faces.push(face);
    }
    faces.sort();
    faces
}

/// On-disk dissection: `{"n": 10, "arcs": [[1,9],[2,8],[4,8],[5,7]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DissectionFile {
    pub n: usize,
    pub arcs: Vec<[usize; 2]>,
}

impl DissectionFile {
    pub fn into_dissection(self) -> Result<Dissection, GeometryError> {
        let pairs: Vec<(usize, usize)> = self.arcs.iter().map(|p| (p[0], p[1])).collect();
        Dissection::from_pairs(self.n, &pairs)
    }
}

/// Every dissection of an `n`-gon whose faces all have sizes in a given set,
/// in lexicographic order of their sorted arc lists.
///
/// The list is materialized once, so a scan can be sharded or resumed by
/// index. Faces are extracted lazily in [`get`](Self::get).
#[derive(Clone)]
pub struct DissectionEnumeration {
    n: usize,
    arc_lists: Vec<Vec<Arc>>,
}

impl DissectionEnumeration {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.arc_lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arc_lists.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<Dissection> {
        let arcs = self.arc_lists.get(index)?;
        let faces = extract_faces(self.n, arcs);
        Some(Dissection { n: self.n, arcs: arcs.clone(), faces })
    }

    pub fn arc_list(&self, index: usize) -> Option<&[Arc]> {
        self.arc_lists.get(index).map(Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = Dissection> + '_ {
        (0..self.len()).map(move |i| self.get(i).expect("index in range"))
    }
}

/// Arc lists of every dissection of one polygon size, shared between sizes.
type ArcLists = Shared<Vec<Vec<(usize, usize)>>>;

/// Dissections of the `n`-gon all of whose faces have a size in
/// `face_sizes`. Sizes below 3 are ignored.
pub fn enumerate_dissections(n: usize, face_sizes: &[usize]) -> DissectionEnumeration {
    assert!(n >= 3, "polygon needs at least 3 vertices");
    let sizes: BTreeSet<usize> = face_sizes.iter().copied().filter(|&s| s >= 3).collect();
    let mut memo: HashMap<usize, ArcLists> = HashMap::new();
    let rel = sub_dissections(n, &sizes, &mut memo);
    let mut arc_lists: Vec<Vec<Arc>> = rel
        .iter()
        .map(|list| {
            let mut arcs: Vec<Arc> = list.iter().map(|&(a, b)| Arc::new(a, b)).collect();
            arcs.sort_unstable();
            arcs
        })
        .collect();
    arc_lists.sort_unstable();
    DissectionEnumeration { n, arc_lists }
}

/// Triangulations of the `n`-gon.
pub fn enumerate_triangulations(n: usize) -> DissectionEnumeration {
    enumerate_dissections(n, &[3])
}

/// Dissections of a polygon on the vertices `0..k` (so `k - 1` is joined to
/// `0` by the base edge), excluding the base itself. Results use local
/// indices and are shared between callers.
fn sub_dissections(
    k: usize,
    sizes: &BTreeSet<usize>,
    memo: &mut HashMap<usize, ArcLists>,
) -> ArcLists {
    if let Some(hit) = memo.get(&k) {
        return hit.clone();
    }
    let mut out = Vec::new();
    if k == 2 {
        out.push(Vec::new());
    } else {
        // The face on the base (0, k-1) has vertices 0 = c_0 < c_1 < … < c_{p-1} = k-1.
        for &p in sizes.iter().filter(|&&p| p <= k) {
            let mut corners = vec![0usize; p];
            corners[p - 1] = k - 1;
            choose_corners(&mut corners, 1, k, &mut |corners| {
                let mut partial: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
                for w in corners.windows(2) {
                    let (lo, hi) = (w[0], w[1]);
                    let span = hi - lo + 1;
                    if span == 2 {
                        continue;
                    }
                    let subs = sub_dissections(span, sizes, memo);
                    if subs.is_empty() {
                        partial.clear();
                        break;
                    }
                    let mut next = Vec::with_capacity(partial.len() * subs.len());
                    for base in &partial {
                        for sub in subs.iter() {
                            let mut arcs = base.clone();
                            arcs.push((lo, hi));
                            arcs.extend(sub.iter().map(|&(a, b)| (a + lo, b + lo)));
                            next.push(arcs);
                        }
                    }
                    partial = next;
                }
                out.extend(partial);
            });
        }
    }
    let shared = Shared::new(out);
    memo.insert(k, shared.clone());
    shared
}

fn choose_corners(corners: &mut Vec<usize>, slot: usize, k: usize, emit: &mut dyn FnMut(&[usize])) {
    let p = corners.len();
    if slot == p - 1 {
        emit(corners);
        return;
    }
    let remaining = p - 1 - slot;
    for c in corners[slot - 1] + 1..=k - 1 - remaining {
        corners[slot] = c;
        choose_corners(corners, slot + 1, k, emit);
    }
}
