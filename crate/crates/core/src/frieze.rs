//! Frieze tables over ℤ[√2]: the frieze of a dissection, validation against
//! the Ptolemy relation, frieze patterns, and the elementary classes.

use std::fmt;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::geometry::{Arc, Dissection, GeometryError};
use crate::ring::{chebyshev_u, QuadInt, RingError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FriezeError {
    #[error("the Euclidean frieze on a {0}-gon does not take values in Z[sqrt 2]")]
    UnsupportedP(usize),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("malformed frieze pattern: {0}")]
    PatternShape(String),
    #[error("bad entry in frieze pattern: {0}")]
    PatternEntry(#[from] RingError),
    #[error("row {row} must be constantly {expected}")]
    BoundaryRow { row: usize, expected: QuadInt },
    #[error("diamond condition fails at row {row}, column {column}")]
    DiamondViolation { row: usize, column: usize },
    #[error("pattern is not glide-symmetric at row {row}, column {column}")]
    GlideViolation { row: usize, column: usize },
}

/// The first way a table fails to be a frieze.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FriezeViolation {
    /// `f(i,i)` is not zero.
    Diagonal(usize),
    /// A boundary edge does not have weight one.
    Boundary(Arc),
    /// A diagonal has weight zero.
    ZeroWeight(Arc),
    /// The Ptolemy relation fails for this pair of crossing diagonals.
    Ptolemy(Arc, Arc),
}

impl fmt::Display for FriezeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FriezeViolation::Diagonal(i) => write!(f, "f({i},{i}) is not 0"),
            FriezeViolation::Boundary(a) => write!(f, "boundary edge {a} does not have weight 1"),
            FriezeViolation::ZeroWeight(a) => write!(f, "diagonal {a} has weight 0"),
            FriezeViolation::Ptolemy(x, y) => write!(f, "Ptolemy relation fails for {x} x {y}"),
        }
    }
}

/// A symmetric weight function on the vertex pairs of an `n`-gon.
///
/// Tables need not be friezes: [`verify_frieze`] decides that.
#[derive(Clone, PartialEq, Eq)]
pub struct FriezeTable {
    n: usize,
    w: Vec<QuadInt>,
}

impl FriezeTable {
    /// Zero on the diagonal, one on boundary edges, and `weight(arc)` on every
    /// other pair.
    pub fn from_fn(n: usize, mut weight: impl FnMut(Arc) -> QuadInt) -> FriezeTable {
        let mut t = FriezeTable { n, w: vec![QuadInt::zero(); n * n] };
        for i in 0..n {
            for j in i + 1..n {
                let a = Arc::new(i, j);
                let x = if a.is_boundary(n) { QuadInt::one() } else { weight(a) };
                t.set(a, x);
            }
        }
        t
    }

    /// A table with every pair given explicitly; boundary and diagonal entries
    /// are taken as given, so invalid tables can be represented.
    pub fn from_raw(n: usize, entries: impl IntoIterator<Item = (Arc, QuadInt)>) -> FriezeTable {
        let mut t = FriezeTable::from_fn(n, |_| QuadInt::zero());
        for (a, x) in entries {
            t.set(a, x);
        }
        t
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &QuadInt {
        &self.w[i * self.n + j]
    }

    pub fn weight(&self, a: Arc) -> &QuadInt {
        self.get(a.u(), a.v())
    }

    fn set(&mut self, a: Arc, x: QuadInt) {
        let (i, j) = a.endpoints();
        self.w[j * self.n + i] = x.clone();
        self.w[i * self.n + j] = x;
    }

    /// All `(arc, weight)` pairs with `i < j`, in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (Arc, &QuadInt)> + '_ {
        (0..self.n).flat_map(move |i| (i + 1..self.n).map(move |j| (Arc::new(i, j), self.get(i, j))))
    }

    /// Non-boundary pairs only.
    pub fn diagonals(&self) -> impl Iterator<Item = (Arc, &QuadInt)> + '_ {
        self.entries().filter(move |(a, _)| !a.is_boundary(self.n))
    }

    /// The table restricted to the given vertices (in increasing order),
    /// relabelled `0..k`.
    pub fn restrict(&self, vertices: &[usize]) -> FriezeTable {
        let k = vertices.len();
        let mut t = FriezeTable { n: k, w: vec![QuadInt::zero(); k * k] };
        for x in 0..k {
            for y in x + 1..k {
                t.set(Arc::new(x, y), self.get(vertices[x], vertices[y]).clone());
            }
        }
        t
    }

    /// Serializable view: `{"n": …, "weights": {"i,j": "a+b√2", …}}`.
    pub fn json(&self) -> FriezeJson<'_> {
        FriezeJson(self)
    }
}

impl fmt::Debug for FriezeTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.entries().map(|(a, x)| (a, x.to_string()))).finish()
    }
}

pub struct FriezeJson<'a>(&'a FriezeTable);

struct Weights<'a>(&'a FriezeTable);

impl Serialize for FriezeJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("FriezeTable", 2)?;
        st.serialize_field("n", &self.0.n)?;
        st.serialize_field("weights", &Weights(self.0))?;
        st.end()
    }
}

impl Serialize for Weights<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        for (a, x) in self.0.entries() {
            map.serialize_entry(&format!("{},{}", a.u(), a.v()), &x.to_string())?;
        }
        map.end()
    }
}

/// The Euclidean frieze `L_p(i,j) = U_{|j-i|-1}(λ_p)` for `p` in {3, 4}.
pub fn euclidean_frieze(p: usize) -> Result<FriezeTable, FriezeError> {
    let lambda = QuadInt::lambda(p).ok_or(FriezeError::UnsupportedP(p))?;
    Ok(FriezeTable::from_fn(p, |a| chebyshev_u((a.v() - a.u()) as i64 - 1, &lambda)))
}

/// The frieze `f_D` of a dissection into triangles and quadrilaterals.
///
/// Pairs on a common face get the Euclidean value for that face. Every other
/// pair crosses some dissection arc `(a,b)`, and since `f_D(a,b) = 1` the
/// Ptolemy relation gives `f(i,j) = f(i,a)f(j,b) + f(i,b)f(j,a)`. The arc
/// used is the crossed one nearest to `i`.
pub fn frieze_from_dissection(d: &Dissection) -> Result<FriezeTable, FriezeError> {
    d.check_tri_quad()?;
    let n = d.n();
    let mut memo: Vec<Option<QuadInt>> = vec![None; n * n];
    for i in 0..n {
        memo[i * n + i] = Some(QuadInt::zero());
    }
    for face in d.faces() {
        let p = face.len();
        let lambda = QuadInt::lambda(p).expect("tri/quad face");
        for x in 0..p {
            for y in x + 1..p {
                let k = (y - x).min(p - (y - x));
                let value = chebyshev_u(k as i64 - 1, &lambda);
                let (i, j) = (face[x], face[y]);
                memo[i * n + j] = Some(value.clone());
                memo[j * n + i] = Some(value);
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            resolve(d, &mut memo, i, j);
        }
    }
    let w = memo.into_iter().map(|x| x.expect("every pair resolved")).collect();
    Ok(FriezeTable { n, w })
}

fn resolve(d: &Dissection, memo: &mut Vec<Option<QuadInt>>, i: usize, j: usize) -> QuadInt {
    let n = d.n();
    if let Some(x) = &memo[i * n + j] {
        return x.clone();
    }
    let target = Arc::new(i, j);
    let crossed: Vec<Arc> = d.crossing_arcs(target).collect();
    let nearest = nearest_crossing(&crossed, i);
    let (a, b) = nearest.endpoints();
    let ia = resolve(d, memo, i, a);
    let jb = resolve(d, memo, j, b);
    let ib = resolve(d, memo, i, b);
    let ja = resolve(d, memo, j, a);
    let value = &(&ia * &jb) + &(&ib * &ja);
    memo[i * n + j] = Some(value.clone());
    memo[j * n + i] = Some(value.clone());
    value
}

/// Among pairwise non-crossing arcs all crossing a chord from `i`, the one
/// with no other on `i`'s side.
fn nearest_crossing(crossed: &[Arc], i: usize) -> Arc {
    let side = |x: Arc, v: usize| x.u() < v && v < x.v();
    *crossed
        .iter()
        .find(|&&x| {
            let i_side = side(x, i);
            crossed.iter().all(|&y| {
                y == x
                    || [y.u(), y.v()]
                        .into_iter()
                        .filter(|&v| !x.has_endpoint(v))
                        .all(|v| side(x, v) != i_side)
            })
        })
        .expect("a non-empty family of non-crossing chords has a nearest member")
}

/// Checks the frieze axioms exactly: zero diagonal, unit boundary, non-zero
/// diagonals, and the Ptolemy relation on every crossing pair.
pub fn verify_frieze(t: &FriezeTable) -> Result<(), FriezeViolation> {
    let n = t.n();
    for i in 0..n {
        if !t.get(i, i).is_zero() {
            return Err(FriezeViolation::Diagonal(i));
        }
    }
    for (a, x) in t.entries() {
        if a.is_boundary(n) {
            if !x.is_one() {
                return Err(FriezeViolation::Boundary(a));
            }
        } else if x.is_zero() {
            return Err(FriezeViolation::ZeroWeight(a));
        }
    }
    // Crossing pairs (i,j) × (k,l) with i < k < j < l.
    for i in 0..n {
        for k in i + 1..n {
            for j in k + 1..n {
                for l in j + 1..n {
                    let lhs = t.get(i, j) * t.get(k, l);
                    let rhs = &(t.get(i, l) * t.get(j, k)) + &(t.get(i, k) * t.get(j, l));
                    if lhs != rhs {
                        return Err(FriezeViolation::Ptolemy(Arc::new(i, j), Arc::new(k, l)));
                    }
                }
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FriezeClass {
    /// Every entry `f(i,j)` with `i < j` is at least 1.
    pub ge1: bool,
    /// Every entry `f(i,j)` with `i < j` is `a + b√2` with `a, b ≥ 0`.
    pub nonneg_coeffs: bool,
}

pub fn classify(t: &FriezeTable) -> FriezeClass {
    let one = QuadInt::one();
    FriezeClass {
        ge1: t.entries().all(|(_, x)| *x >= one),
        nonneg_coeffs: t.entries().all(|(_, x)| x.has_nonneg_coeffs()),
    }
}

/// A frieze pattern of width `n + 1` from an `n`-gon.
///
/// `rows[r][c]` is `m_{i, i+r}` with `i = c - ⌊r/2⌋ (mod n)`, so that in every
/// diamond the two middle entries share a column index and the rows sit
/// alternately offset by half a column. Rows `0` and `n` are zeros, rows `1`
/// and `n-1` are ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FriezePattern {
    n: usize,
    rows: Vec<Vec<QuadInt>>,
}

impl FriezePattern {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<QuadInt>] {
        &self.rows
    }

    /// `m_{i,j}` for `0 ≤ j - i ≤ n`, any integer `i`.
    pub fn entry(&self, i: i64, j: i64) -> &QuadInt {
        let n = self.n as i64;
        let r = j - i;
        assert!((0..=n).contains(&r));
        let c = (i + r / 2).rem_euclid(n) as usize;
        &self.rows[r as usize][c]
    }

    /// Builds a pattern from one period of each row (extra entries must
    /// repeat periodically), validating the boundary rows, the glide symmetry
    /// and the diamond condition.
    pub fn from_rows(rows: Vec<Vec<QuadInt>>) -> Result<FriezePattern, FriezeError> {
        if rows.len() < 4 {
            return Err(FriezeError::PatternShape(format!(
                "a frieze pattern needs at least 4 rows, got {}",
                rows.len()
            )));
        }
        let n = rows.len() - 1;
        let mut period = Vec::with_capacity(rows.len());
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() < n {
                return Err(FriezeError::PatternShape(format!(
                    "row {r} has {} entries, expected at least {n}",
                    row.len()
                )));
            }
            for c in n..row.len() {
                if row[c] != row[c - n] {
                    return Err(FriezeError::PatternShape(format!("row {r} is not {n}-periodic at column {c}")));
                }
            }
            period.push(row[..n].to_vec());
        }
        let pattern = FriezePattern { n, rows: period };
        pattern.validate()?;
        Ok(pattern)
    }

    fn validate(&self) -> Result<(), FriezeError> {
        let n = self.n;
        for (r, expected) in [(0, QuadInt::zero()), (1, QuadInt::one()), (n - 1, QuadInt::one()), (n, QuadInt::zero())] {
            if self.rows[r].iter().any(|x| *x != expected) {
                return Err(FriezeError::BoundaryRow { row: r, expected });
            }
        }
        let ni = n as i64;
        for r in 0..=ni {
            for i in 0..ni {
                if self.entry(i, i + r) != self.entry(i + r, i + ni) {
                    let c = (i + r / 2).rem_euclid(ni) as usize;
                    return Err(FriezeError::GlideViolation { row: r as usize, column: c });
                }
            }
        }
        // Diamond with top m_{i,j}, sides m_{i-1,j} and m_{i,j+1}, bottom m_{i-1,j+1}.
        for r in 0..=ni - 2 {
            for i in 0..ni {
                let j = i + r;
                let lhs = self.entry(i - 1, j) * self.entry(i, j + 1);
                let rhs = &(self.entry(i, j) * self.entry(i - 1, j + 1)) + &QuadInt::one();
                if lhs != rhs {
                    let c = (i + r / 2).rem_euclid(ni) as usize;
                    return Err(FriezeError::DiamondViolation { row: r as usize, column: c });
                }
            }
        }
        Ok(())
    }

    /// The frieze table `f(ī, j̄) = m_{i,j}`.
    pub fn to_table(&self) -> FriezeTable {
        let n = self.n;
        FriezeTable::from_raw(
            n,
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| {
                (Arc::new(i, j), self.entry(i as i64, j as i64).clone())
            }),
        )
    }

    /// Parses the text layout produced by [`Display`](fmt::Display): one
    /// row per line, entries separated by whitespace. Indentation is ignored.
    pub fn parse(text: &str) -> Result<FriezePattern, FriezeError> {
        let rows = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.split_whitespace().map(str::parse::<QuadInt>).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        FriezePattern::from_rows(rows)
    }
}

/// Rows of one period plus one repeated column; odd rows are indented by
/// half a cell. Every cell is right-aligned to the widest entry plus two
/// spaces of padding.
impl fmt::Display for FriezePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| row.iter().chain(row.first()).map(ToString::to_string).collect())
            .collect();
        let width = cells.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1) + 2;
        let width = width + width % 2;
        for (r, row) in cells.iter().enumerate() {
            let mut line = " ".repeat(if r % 2 == 1 { width / 2 } else { 0 });
            for cell in row {
                line.push_str(&format!("{cell:>width$}"));
            }
            writeln!(f, "{}", line.trim_end())?;
        }
        Ok(())
    }
}

/// The frieze pattern of width `n + 1` listing the values of `t`.
pub fn to_frieze_pattern(t: &FriezeTable) -> FriezePattern {
    let n = t.n();
    let rows = (0..=n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let i = (c as i64 - (r / 2) as i64).rem_euclid(n as i64) as usize;
                    if r == 0 || r == n {
                        QuadInt::zero()
                    } else {
                        t.get(i, (i + r) % n).clone()
                    }
                })
                .collect()
        })
        .collect();
    FriezePattern { n, rows }
}

/// Inverse of [`to_frieze_pattern`], with validation.
pub fn from_frieze_pattern(rows: Vec<Vec<QuadInt>>) -> Result<FriezeTable, FriezeError> {
    Ok(FriezePattern::from_rows(rows)?.to_table())
}
