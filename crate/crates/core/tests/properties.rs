mod support;

use std::cmp::Ordering;

use frieze_core::analysis::{
    find_unitary_triangulation, has_tower_decomposition, tower_arcs, tower_decomposition, unitary_from_towers,
};
use frieze_core::frieze::{euclidean_frieze, from_frieze_pattern, to_frieze_pattern};
use frieze_core::geometry::crosses;
use frieze_core::ring::cmp_real;
use frieze_core::{frieze_from_dissection, verify_frieze, Arc, Dissection, QuadInt};
use proptest::prelude::*;

/// A tri/quad dissection of the `n`-gon driven by `choices`: a random
/// triangulation, then some arcs between two triangles removed.
fn dissection_from(n: usize, choices: &[usize]) -> Dissection {
    let mut next = choices.iter().copied().cycle();
    let mut arcs = Vec::new();
    let mut pending = vec![(0..n).collect::<Vec<usize>>()];
    while let Some(poly) = pending.pop() {
        if poly.len() <= 3 {
            continue;
        }
        // Triangle on the side (first, last) with a chosen apex.
        let k = 1 + next.next().unwrap() % (poly.len() - 2);
        let (first, last) = (poly[0], poly[poly.len() - 1]);
        if k > 1 {
            arcs.push(Arc::new(first, poly[k]));
        }
        if k < poly.len() - 2 {
            arcs.push(Arc::new(poly[k], last));
        }
        pending.push(poly[..=k].to_vec());
        pending.push(poly[k..].to_vec());
    }
    let mut d = Dissection::new(n, arcs.clone()).unwrap();
    for a in arcs {
        if next.next().unwrap() % 3 != 0 {
            continue;
        }
        let sides = d.arc_sides()[&a];
        if sides.iter().all(|&f| d.faces()[f].len() == 3) {
            d = Dissection::new(n, d.arcs().iter().copied().filter(|&x| x != a)).unwrap();
        }
    }
    d
}

fn dissections(max_n: usize) -> impl Strategy<Value = Dissection> {
    (3..=max_n, prop::collection::vec(0usize..10_000, 1..40)).prop_map(|(n, c)| dissection_from(n, &c))
}

fn quadint(bound: i64) -> impl Strategy<Value = QuadInt> {
    (-bound..=bound, -bound..=bound).prop_map(|(a, b)| QuadInt::new(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn norm_is_multiplicative(x in quadint(1_000_000), y in quadint(1_000_000)) {
        prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
    }

    #[test]
    fn comparison_is_exact_and_consistent(x in quadint(1_000_000), y in quadint(1_000_000), z in quadint(1_000_000)) {
        let (fx, fy) = (x.to_f64(), y.to_f64());
        if (fx - fy).abs() > 1e-6 * (1.0 + fx.abs().max(fy.abs())) {
            prop_assert_eq!(cmp_real(&x, &y), fx.partial_cmp(&fy).unwrap());
        }
        prop_assert_eq!(cmp_real(&x, &y), cmp_real(&y, &x).reverse());
        if cmp_real(&x, &y) != Ordering::Greater && cmp_real(&y, &z) != Ordering::Greater {
            prop_assert_ne!(cmp_real(&x, &z), Ordering::Greater);
        }
    }

    #[test]
    fn text_round_trip(x in quadint(1_000_000_000)) {
        prop_assert_eq!(x.to_string().parse::<QuadInt>().unwrap(), x);
    }

    #[test]
    fn unit_log_inverts_unit_power(m in -20i64..=30) {
        prop_assert_eq!(QuadInt::unit_power(m).unit_log().unwrap(), m);
    }

    #[test]
    fn crossing_is_symmetric(n in 4usize..20, a in 0usize..400, b in 0usize..400, c in 0usize..400, e in 0usize..400) {
        let pick = |x: usize, y: usize| {
            let (u, v) = (x % n, y % n);
            (u != v).then(|| Arc::new(u, v))
        };
        if let (Some(x), Some(y)) = (pick(a, b), pick(c, e)) {
            prop_assert_eq!(crosses(x, y, n), crosses(y, x, n));
            if x.is_boundary(n) {
                prop_assert!(!crosses(x, y, n));
            }
        }
    }

    #[test]
    fn dissection_invariants(d in dissections(14)) {
        let n = d.n();
        prop_assert!(d.is_tri_quad());
        prop_assert_eq!(d.faces().iter().map(|f| f.len() - 2).sum::<usize>(), n - 2);
        prop_assert_eq!(d.faces().len(), d.arcs().len() + 1);
        for (k, x) in d.arcs().iter().enumerate() {
            for y in &d.arcs()[k + 1..] {
                prop_assert!(!crosses(*x, *y, n));
            }
        }
    }

    #[test]
    fn friezes_of_dissections(d in dissections(14)) {
        let t = frieze_from_dissection(&d).unwrap();
        prop_assert!(verify_frieze(&t).is_ok(), "{:?}", d);
        for f in d.faces() {
            let local = t.restrict(f);
            let euclid = euclidean_frieze(f.len()).unwrap();
            prop_assert_eq!(local, euclid);
        }
        for (a, w) in t.diagonals() {
            prop_assert!(w.has_nonneg_coeffs());
            prop_assert_eq!(w.is_one(), d.contains_arc(a), "{}", a);
        }
        let pattern = to_frieze_pattern(&t);
        prop_assert_eq!(from_frieze_pattern(pattern.rows().to_vec()).unwrap(), t.clone());
    }

    #[test]
    fn towers_give_unitary_friezes(d in dissections(14)) {
        let t = frieze_from_dissection(&d).unwrap();
        for (a, m) in tower_arcs(&d).unwrap() {
            prop_assert_eq!(t.weight(a), &QuadInt::unit_power(m as i64));
        }
        let dec = tower_decomposition(&d).unwrap();
        prop_assert_eq!(dec.is_some(), has_tower_decomposition(&d).unwrap());
        if let Some(dec) = dec {
            let tr = unitary_from_towers(&dec).unwrap();
            prop_assert!(tr.arcs().iter().all(|a| t.weight(*a).is_positive_unit()));
            prop_assert!(find_unitary_triangulation(&t).is_some());
        }
    }

    #[test]
    fn towers_match_partition_oracle(d in dissections(9)) {
        let oracle = support::brute_force_tower_partitions(&d);
        prop_assert_eq!(has_tower_decomposition(&d).unwrap(), !oracle.is_empty());
    }
}
