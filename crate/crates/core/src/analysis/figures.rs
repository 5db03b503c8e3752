//! Explicit dissections with known arc weights: towers, stacks, Pell arcs and
//! the zig-zag family extending them.

use crate::geometry::{Arc, Dissection};
use crate::ring::QuadInt;

/// Weight of an arc from the roof of a tower to the far side of its `k`-th
/// quadrilateral.
pub fn tower_arc_weight(k: usize) -> QuadInt {
    QuadInt::unit_power(k as i64)
}

/// Weight of a Pell arc between an `i`-tower and a `j`-tower.
pub fn pell_arc_weight(i: usize, j: usize) -> QuadInt {
    assert!(i >= 1, "the first tower needs a quadrilateral");
    QuadInt::unit_power((i + j + 1) as i64)
}

/// A single `k`-tower on the `(2k+3)`-gon with roof 0: the rungs are
/// `(i, 2k+3-i)` for `1 ≤ i ≤ k`, and the arcs `(0, i)`, `(0, 2k+3-i)` weigh
/// `ℓ_{i-1}`.
pub fn build_tower(k: usize) -> Dissection {
    let n = 2 * k + 3;
    Dissection::new(n, (1..=k).map(|i| Arc::new(i, n - i))).expect("tower is a valid dissection")
}

/// A stack of `m ≥ 1` quadrilaterals on the `(2m+2)`-gon, rungs
/// `(i, 2m+1-i)` for `1 ≤ i < m`. The arc `(0, n)` weighs `s_n` and
/// `(0, 2m+1-n)` weighs `d_n` while they stay inside the stack.
pub fn build_stack(m: usize) -> Dissection {
    assert!(m >= 1);
    Dissection::new(2 * m + 2, (1..m).map(|i| Arc::new(i, 2 * m + 1 - i))).expect("stack is a valid dissection")
}

/// Vertex labels of the Pell configuration.
struct PellLabels {
    n: usize,
    a: usize,
    b: Option<usize>,
    t: Vec<usize>,
    u: Vec<usize>,
    p: Vec<usize>,
    q: Vec<usize>,
    e: usize,
}

/// An `i`-tower with roof `a`, whose last quadrilateral has a side `(c, d)`
/// bordering a triangle `(c, d, e)`, followed by `j` quadrilaterals stacked
/// on `(d, e)` and, if `capped`, a triangle with apex `b`.
///
/// Going round the polygon: `a, t_1, …, t_{i+1}, d, p_1, …, p_j, [b],
/// q_j, …, q_1, e, c, u_{i-1}, …, u_1`, with `d = u_{i+1}` and `c = u_i`.
fn pell_labels(i: usize, j: usize, capped: bool) -> PellLabels {
    assert!(i >= 1);
    let mut next = 0usize;
    let mut take = || {
        next += 1;
        next - 1
    };
    let a = take();
    // t[k] for 1 ≤ k ≤ i+1; index 0 unused.
    let mut t = vec![usize::MAX; i + 2];
    for slot in t.iter_mut().skip(1) {
        *slot = take();
    }
    // u[k] for 1 ≤ k ≤ i+1 and p[k], q[k] for 0 ≤ k ≤ j with p[0] = d,
    // q[0] = e.
    let mut u = vec![usize::MAX; i + 2];
    let mut p = vec![usize::MAX; j + 1];
    let mut q = vec![usize::MAX; j + 1];
    u[i + 1] = take();
    p[0] = u[i + 1];
    for slot in p.iter_mut().skip(1) {
        *slot = take();
    }
    let b = capped.then(&mut take);
    for k in (1..=j).rev() {
        q[k] = take();
    }
    let e = take();
    q[0] = e;
    for k in (1..=i).rev() {
        u[k] = take();
    }
    PellLabels { n: next, a, b, t, u, p, q, e }
}

fn pell_dissection(l: &PellLabels, i: usize, j: usize) -> Dissection {
    let mut arcs: Vec<Arc> = (1..=i).map(|k| Arc::new(l.t[k], l.u[k])).collect();
    arcs.push(Arc::new(l.u[i], l.u[i + 1]));
    arcs.push(Arc::new(l.u[i + 1], l.e));
    arcs.extend((1..=j).map(|k| Arc::new(l.p[k], l.q[k])));
    // Without a cap the last rung is a side of the polygon.
    if l.b.is_none() && j >= 1 {
        arcs.pop();
    }
    Dissection::new(l.n, arcs).expect("Pell configuration is a valid dissection")
}

/// The Pell configuration on the `(2i+2j+5)`-gon, with its Pell arc `(a, b)`
/// of weight `ℓ_{i+j+1}`.
pub fn build_pell_figure(i: usize, j: usize) -> (Dissection, Arc) {
    let l = pell_labels(i, j, true);
    let b = l.b.expect("capped");
    (pell_dissection(&l, i, j), Arc::new(l.a, b))
}

/// The Pell configuration with the cap removed, so the second stack ends on
/// the boundary (`j ≥ 1`). Returns the arc `(a, q_j)`, whose weight is
/// `ℓ_{i-1}(d_j + ℓ_{j+1})` and never a unit.
pub fn build_uncapped_pell_figure(i: usize, j: usize) -> (Dissection, Arc) {
    assert!(j >= 1);
    let l = pell_labels(i, j, false);
    (pell_dissection(&l, i, j), Arc::new(l.a, l.q[j]))
}

/// The zig-zag triangulation of the `2m`-gon `0, …, 2m-1` from the side
/// `(0, 2m-1)` towards the vertex `m`. After `(1, 2m-1)` the arcs advance
/// the low end once, then alternately the high end twice and the low end
/// twice: `(2, 2m-1), (2, 2m-2), (2, 2m-3), (3, 2m-3), (4, 2m-3), …`, ending
/// at `(m-1, m+1)`. Every vertex strictly between the two ends meets
/// exactly two triangles crossed by `(0, m)`, so `f(0, m) / f(2m-1, m)` is
/// `[2; 2, …, 2]`.
pub fn zig_zag(m: usize) -> Vec<Arc> {
    assert!(m >= 2);
    let mut arcs = Vec::with_capacity(2 * m - 3);
    let (mut lo, mut hi) = (1, 2 * m - 1);
    arcs.push(Arc::new(lo, hi));
    while arcs.len() < 2 * m - 3 {
        if (arcs.len() / 2) % 2 == 0 {
            lo += 1;
        } else {
            hi -= 1;
        }
        arcs.push(Arc::new(lo, hi));
    }
    arcs
}

/// An `i`-tower with roof `w` and a zig-zag triangulated `2m`-gon glued by
/// its side `(0, 2m-1)` onto a side of the last quadrilateral, `2m-1` being
/// on the far edge. The polygon has `2i + 2m + 1` vertices: `w = 0`,
/// `t_1, …, t_{i+1}`, then the `2m`-gon read `2m-1, …, 0`, then
/// `u_{i-1}, …, u_1`.
///
/// Returns the dissection, the arc `(w, m)` of weight `ℓ_{i+m-1}`, and the
/// map from `2m`-gon labels to polygon vertices.
pub fn build_pell_witness(i: usize, m: usize) -> (Dissection, Arc, Vec<usize>) {
    assert!(i >= 1 && m >= 2);
    let n = 2 * i + 2 * m + 1;
    let t = |k: usize| k;
    let hex = |h: usize| i + 2 + (2 * m - 1 - h);
    let u = |k: usize| if k == i { hex(0) } else { hex(0) + (i - k) };
    let mut arcs: Vec<Arc> = (1..=i).map(|k| Arc::new(t(k), u(k))).collect();
    arcs.push(Arc::new(hex(0), hex(2 * m - 1)));
    arcs.extend(zig_zag(m).into_iter().map(|a| Arc::new(hex(a.u()), hex(a.v()))));
    let d = Dissection::new(n, arcs).expect("witness is a valid dissection");
    let labels = (0..2 * m).map(hex).collect();
    (d, Arc::new(0, hex(m)), labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frieze::frieze_from_dissection;
    use crate::sequences::{d, pell, s};

    #[test]
    fn tower_shapes() {
        for k in 0..=5 {
            let t = build_tower(k);
            assert_eq!(t.n(), 2 * k + 3);
            assert_eq!(t.faces().iter().filter(|f| f.len() == 3).count(), 1);
            assert_eq!(t.faces().iter().filter(|f| f.len() == 4).count(), k);
        }
        assert_eq!(tower_arc_weight(0), QuadInt::one());
        assert_eq!(pell_arc_weight(1, 0), QuadInt::new(3, 2));
    }

    #[test]
    fn stack_gives_s_and_d() {
        for n in 1..=8 {
            let m = n + 2;
            let f = frieze_from_dissection(&build_stack(m)).unwrap();
            assert_eq!(*f.get(0, n), s(n), "s_{n}");
            assert_eq!(*f.get(0, 2 * m + 1 - n), d(n), "d_{n}");
        }
    }

    #[test]
    fn pell_figure_faces() {
        let (d, arc) = build_pell_figure(2, 1);
        assert_eq!(d.n(), 11);
        assert_eq!(d.type_of(), 3);
        assert_eq!(d.faces().iter().filter(|f| f.len() == 3).count(), 3);
        let f = frieze_from_dissection(&d).unwrap();
        assert_eq!(*f.weight(arc), QuadInt::new(17, 12));
    }

    #[test]
    fn uncapped_is_not_a_unit() {
        let (d, arc) = build_uncapped_pell_figure(1, 1);
        assert_eq!(d.n(), 8);
        let w = frieze_from_dissection(&d).unwrap().weight(arc).clone();
        assert_eq!(w, QuadInt::new(3, 3));
        assert_eq!(w.norm(), 9u32.into());
    }

    #[test]
    fn zig_zag_matches_small_cases() {
        let arcs = |v: &[(usize, usize)]| v.iter().map(|&(a, b)| Arc::new(a, b)).collect::<Vec<_>>();
        assert_eq!(zig_zag(2), arcs(&[(1, 3)]));
        assert_eq!(zig_zag(3), arcs(&[(1, 5), (2, 5), (2, 4)]));
        assert_eq!(zig_zag(4), arcs(&[(1, 7), (2, 7), (2, 6), (2, 5), (3, 5)]));
        assert_eq!(zig_zag(5), arcs(&[(1, 9), (2, 9), (2, 8), (2, 7), (3, 7), (4, 7), (4, 6)]));
    }

    #[test]
    fn witness_ratio_is_pell() {
        for m in 2..=6 {
            let (d, arc, h) = build_pell_witness(1, m);
            let f = frieze_from_dissection(&d).unwrap();
            assert_eq!(*f.weight(arc), QuadInt::unit_power(m as i64), "m={m}");
            assert_eq!(*f.get(h[0], h[m]), QuadInt::from(pell(m)), "m={m}");
            assert_eq!(*f.get(h[2 * m - 1], h[m]), QuadInt::from(pell(m - 1)), "m={m}");
        }
    }
}
