use freiman::fiber::{self, check_growth_identities, h_vector, mu_from_h};
use freiman::ideal::{minimalize, Monomial};
use freiman::lattice::{freiman_lower_bound, ExponentVector, PointSet};
use freiman::MonomialIdeal;
use proptest::prelude::*;

const DIM: usize = 3;

fn point_set(max_len: usize, max_coord: u64) -> impl Strategy<Value = PointSet> {
    prop::collection::vec(prop::collection::vec(0..=max_coord, DIM), 1..=max_len)
        .prop_map(|rows| PointSet::from_rows(&rows).unwrap())
}

/// Exponent vectors of total degree `deg`, so the ideal is equigenerated.
fn equigenerated(max_len: usize, deg: u64) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec((0..=deg, 0..=deg), 1..=max_len).prop_map(move |pairs| {
        let rows: Vec<Vec<u64>> = pairs
            .into_iter()
            .map(|(a, b)| {
                let a = a.min(deg);
                let b = b.min(deg - a);
                vec![a, b, deg - a - b]
            })
            .collect();
        MonomialIdeal::new(PointSet::from_rows(&rows).unwrap()).unwrap()
    })
}

/// Quasi-equigenerated with weights (1, 2, 3) and weighted degree 6.
fn weighted() -> impl Strategy<Value = MonomialIdeal> {
    let pool: Vec<[u64; 3]> = (0..=6u64)
        .flat_map(|a| (0..=3u64).flat_map(move |b| (0..=2u64).map(move |c| [a, b, c])))
        .filter(|[a, b, c]| a + 2 * b + 3 * c == 6)
        .collect();
    prop::sample::subsequence(pool.clone(), 1..=pool.len())
        .prop_map(|rows| MonomialIdeal::new(PointSet::from_rows(&rows).unwrap()).unwrap())
}

fn translate(p: &PointSet, t: &[u64]) -> PointSet {
    PointSet::new(
        p.ambient_dim(),
        p.iter().map(|c| {
            ExponentVector::new(
                c.coords()
                    .iter()
                    .zip(t)
                    .map(|(a, b)| a + b)
                    .collect::<Vec<_>>(),
            )
        }),
    )
    .unwrap()
}

fn permute(p: &PointSet, perm: &[usize]) -> PointSet {
    PointSet::new(
        p.ambient_dim(),
        p.iter()
            .map(|c| ExponentVector::new(perm.iter().map(|&i| c.coords()[i]).collect::<Vec<_>>())),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn sumset_commutes(a in point_set(6, 3), b in point_set(6, 3)) {
        prop_assert_eq!(a.sumset(&b).unwrap(), b.sumset(&a).unwrap());
    }

    #[test]
    fn sumset_associates(a in point_set(4, 2), b in point_set(4, 2), c in point_set(4, 2)) {
        let left = a.sumset(&b).unwrap().sumset(&c).unwrap();
        let right = a.sumset(&b.sumset(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn freiman_inequality_holds(a in point_set(8, 4)) {
        let d = a.affine_dim().unwrap() as u64;
        let doubled = a.sumset(&a).unwrap().len() as i64;
        prop_assert!(doubled >= freiman_lower_bound(a.len() as u64, d).unwrap());
    }

    #[test]
    fn affine_dim_is_translation_and_permutation_invariant(
        a in point_set(7, 4),
        t in prop::collection::vec(0u64..5, DIM),
        perm in Just(vec![0usize, 1, 2]).prop_shuffle(),
    ) {
        let d = a.affine_dim().unwrap();
        prop_assert_eq!(translate(&a, &t).affine_dim().unwrap(), d);
        prop_assert_eq!(permute(&a, &perm).affine_dim().unwrap(), d);
        prop_assert!(d < a.len().max(1) && d <= DIM);
    }

    #[test]
    fn dilates_compose(a in point_set(4, 2), j in 1usize..3, k in 1usize..3) {
        let lhs = a.dilate(j + k).unwrap();
        let rhs = a.dilate(j).unwrap().sumset(&a.dilate(k).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn witnessed_power_matches_general_power(i in equigenerated(6, 3), k in 1usize..4) {
        let i = i.into_witnessed().unwrap();
        let (fast, general) = (i.power(k).unwrap(), i.power_general(k).unwrap());
        prop_assert_eq!(fast.generators(), general.generators());
    }

    #[test]
    fn weighted_power_matches_general_power(i in weighted(), k in 1usize..4) {
        let w = i.quasi_equigenerated_witness().unwrap().expect("weights (1,2,3) work");
        prop_assert!(w.weights.iter().all(|&x| x > 0));
        let i = i.into_witnessed().unwrap();
        let (fast, general) = (i.power(k).unwrap(), i.power_general(k).unwrap());
        prop_assert_eq!(fast.generators(), general.generators());
    }

    #[test]
    fn minimalize_is_idempotent(rows in prop::collection::vec(prop::collection::vec(0u64..4, DIM), 1..10)) {
        prop_assume!(rows.iter().any(|r| r.iter().any(|&x| x > 0)));
        let monos: Vec<Monomial> = rows
            .iter()
            .filter(|r| r.iter().any(|&x| x > 0))
            .map(|r| Monomial(ExponentVector::new(r.clone())))
            .collect();
        let once = minimalize(&monos).unwrap();
        let again: Vec<Monomial> = once.generators().iter().cloned().map(Monomial).collect();
        let twice = minimalize(&again).unwrap();
        prop_assert_eq!(twice.generators(), once.generators());
        // Every input is divisible by some kept generator.
        for m in &monos {
            prop_assert!(once.generators().iter().any(|g| g.divides(&m.0)));
        }
    }

    #[test]
    fn growth_bounds_and_partial_sums(i in equigenerated(8, 3)) {
        let g = check_growth_identities(&i, 4, 1_000_000).unwrap();
        prop_assert!(g.h_partial[2] >= 0);
        for r in &g.rows {
            prop_assert!(r.meets_bound, "k = {}: {} < {}", r.k, r.mu, r.lower_bound);
            prop_assert!(r.partial_sum_nonnegative);
        }
        if g.rows[0].equality {
            prop_assert!(g.equality_everywhere);
            prop_assert!(g.h_partial[2..].iter().all(|&h| h == 0));
        }
        prop_assert!(g.ell <= i.mu().min(i.ambient_dim()));
    }

    #[test]
    fn weighted_growth_bounds(i in weighted()) {
        let g = check_growth_identities(&i, 3, 1_000_000).unwrap();
        prop_assert!(g.rows.iter().all(|r| r.meets_bound && r.partial_sum_nonnegative));
    }

    #[test]
    fn h_vector_round_trip(i in equigenerated(8, 2)) {
        let ell = fiber::analytic_spread(&i).unwrap();
        let mu = fiber::mu_series(&i, 4, 1_000_000).unwrap();
        let h = h_vector(&mu, ell).unwrap();
        let back = mu_from_h(&h, ell, 4).unwrap();
        prop_assert_eq!(back, mu.iter().map(|&m| m as i64).collect::<Vec<_>>());
    }
}
