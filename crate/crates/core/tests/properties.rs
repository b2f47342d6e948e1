//! Property suites for the exact kernels. Case counts are pinned so runs
//! are comparable; proptest's own seeding keeps failures reproducible.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use conelab::classes::{dual_class, ModuleClass};
use conelab::cone::RationalCone;
use conelab::lattice::{smith_normal_form, GroupPresentation, IntegerMatrix};
use conelab::linalg::RationalVector;
use conelab::oracle::fm_contains;
use conelab::theorems::{stream_divergence_monitor, LinearStream, Verdict};

const CASES: u32 = 128;

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-20i64..=20, c), r))
}

fn cone_input() -> impl Strategy<Value = (usize, Vec<Vec<i64>>, Vec<i64>)> {
    (1usize..=4).prop_flat_map(|d| {
        (
            Just(d),
            prop::collection::vec(prop::collection::vec(-4i64..=4, d), 0..=6),
            prop::collection::vec(-6i64..=6, d),
        )
    })
}

fn vector(xs: &[i64]) -> RationalVector {
    RationalVector::from_integers(xs.iter().copied())
}

/// `Z^free + Z/t1 + Z/(t1 m)` style groups with a valid divisibility chain.
fn group() -> impl Strategy<Value = GroupPresentation> {
    (0usize..=3, prop::option::of((2i64..=6, prop::option::of(1i64..=3)))).prop_map(|(free, torsion)| {
        let orders = match torsion {
            None => vec![],
            Some((t, None)) => vec![BigInt::from(t)],
            Some((t, Some(m))) => vec![BigInt::from(t), BigInt::from(t * m)],
        };
        GroupPresentation::new(free, orders).unwrap()
    })
}

fn element(g: &GroupPresentation, seed: &[i64]) -> conelab::lattice::GroupElement {
    let free = (0..g.free_rank).map(|i| BigInt::from(seed[i % seed.len()])).collect();
    let torsion = g
        .torsion_orders
        .iter()
        .enumerate()
        .map(|(i, t)| BigInt::from(seed[(i + 3) % seed.len()]).mod_floor(t))
        .collect();
    g.element(free, torsion).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn smith_form_is_a_certificate(rows in matrix()) {
        let m = IntegerMatrix::from_i64_rows(&rows).unwrap();
        let s = smith_normal_form(&m);
        prop_assert_eq!(s.u.mul(&m).unwrap().mul(&s.v).unwrap(), s.d.clone());
        prop_assert!(s.u.is_unimodular() && s.v.is_unimodular());
        let factors = s.invariant_factors();
        for w in factors.windows(2) {
            prop_assert!(!w[0].is_negative());
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
        }
        for r in 0..s.d.rows() {
            for c in 0..s.d.cols() {
                prop_assert!(r == c || s.d.get(r, c).is_zero());
            }
        }
    }

    #[test]
    fn smith_form_is_transpose_invariant(rows in matrix()) {
        let m = IntegerMatrix::from_i64_rows(&rows).unwrap();
        let cols = m.cols();
        let t: Vec<Vec<i64>> = (0..cols).map(|c| rows.iter().map(|r| r[c]).collect()).collect();
        let mt = IntegerMatrix::from_i64_rows(&t).unwrap();
        prop_assert_eq!(smith_normal_form(&m).invariant_factors(), smith_normal_form(&mt).invariant_factors());
    }

    #[test]
    fn membership_matches_oracle((dim, gens, point) in cone_input()) {
        let gens: Vec<RationalVector> = gens.iter().map(|g| vector(g)).collect();
        let cone = RationalCone::new(dim, gens.clone()).unwrap();
        let x = vector(&point);
        let inside = cone.contains(&x).unwrap();
        prop_assert_eq!(inside, fm_contains(&gens, &x).unwrap());
        // Cones are closed under positive scaling.
        let scaled = x.scale(&BigRational::new(3.into(), 2.into()));
        prop_assert_eq!(cone.contains(&scaled).unwrap(), inside);
        for g in &gens {
            prop_assert!(cone.contains(g).unwrap());
        }
    }

    #[test]
    fn facets_describe_the_cone((dim, gens, _) in cone_input()) {
        let gens: Vec<RationalVector> = gens.iter().map(|g| vector(g)).collect();
        let cone = RationalCone::new(dim, gens.clone()).unwrap();
        let f = cone.facets();
        for g in &gens {
            for n in &f.normals {
                prop_assert!(!n.dot(g).is_negative());
            }
            for e in &f.equations {
                prop_assert!(e.dot(g).is_zero());
            }
        }
        let back = RationalCone::from_constraints(dim, &f.normals, &f.equations).unwrap();
        prop_assert!(cone.same_cone(&back).unwrap());
        prop_assert_eq!(back.facets(), f);
    }

    #[test]
    fn lineality_is_inside_both_directions((dim, gens, _) in cone_input()) {
        let gens: Vec<RationalVector> = gens.iter().map(|g| vector(g)).collect();
        let cone = RationalCone::new(dim, gens.clone()).unwrap();
        for l in cone.lineality_space() {
            prop_assert!(fm_contains(&gens, &l).unwrap());
            prop_assert!(fm_contains(&gens, &-&l).unwrap());
        }
    }

    #[test]
    fn class_arithmetic(g in group(), ra in 0u64..=4, rb in 0u64..=4, sa in prop::collection::vec(-7i64..=7, 4), sb in prop::collection::vec(-7i64..=7, 4)) {
        let a = ModuleClass::new("a", ra, element(&g, &sa));
        let b = ModuleClass::new("b", rb, element(&g, &sb));
        let sum = a.direct_sum(&b, &g).unwrap();
        prop_assert_eq!(sum.rank, ra + rb);
        prop_assert_eq!(sum.realify(), &a.realify() + &b.realify());
        let dd = dual_class(&dual_class(&a, &g).unwrap(), &g).unwrap();
        prop_assert!(dd.same_class(&a));
        // [M] + [M*] = 2 rank(M) [R] after realification.
        let total = &a.realify() + &dual_class(&a, &g).unwrap().realify();
        let mut expected = RationalVector::zeros(total.dim()).into_coords();
        expected[0] = BigRational::from_integer(BigInt::from(2 * ra));
        prop_assert_eq!(total, RationalVector::new(expected));
    }

    #[test]
    fn stream_divergence_is_monotone_in_the_bound(step in 1i64..=5, b1 in 0i64..=40, b2 in 0i64..=40) {
        let g = GroupPresentation::free(1);
        let stream = LinearStream {
            base: ModuleClass::free("R", 1, &g),
            step: element(&g, &[step]),
            group: g,
        };
        let index = |b: i64| {
            let r = stream_divergence_monitor(&stream, 1, 200, &BigRational::from_integer(b.into())).unwrap();
            prop_assert_eq!(r.verdict, Verdict::Violated);
            let n: u64 = r.get("index").unwrap().parse().unwrap();
            // First n with 1 + (n step)^2 > b^2.
            let expected = (0u64..).find(|&n| 1 + (n as i64 * step).pow(2) > b * b).unwrap();
            prop_assert_eq!(n, expected);
            Ok(n)
        };
        let (lo, hi) = (b1.min(b2), b1.max(b2));
        prop_assert!(index(lo)? <= index(hi)?);
    }
}
