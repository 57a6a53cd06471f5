use proptest::prelude::*;

use capelli_core::borel::{BorelDescriptor, WeightVector};
use capelli_core::equivalence::{monoidal_moves, orbit, OrbitResult, Point};
use capelli_core::isjp::build_isjp;
use capelli_core::partitions::{enumerate_hooks, frobenius_coords, is_hook, HookPartition};
use capelli_core::rational::{fmt_rational, frac, half, int, one, parse_rational, Rational};
use capelli_core::superalg::{derivation, multiply, SuperPolynomial, SuperSpace};
use capelli_core::sympoly::SparsePolynomial;
use capelli_core::tau::{m0, m0_and_x0, tau0_diag, MatrixFamilySpec};
use capelli_core::verify::{deterministic, verify_glm2n, Pair, SweepConfig};
use capelli_core::weights::{hw0_diag, hw0_glm2n, hw_b, hw_b_by_walk};

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(p, q)| frac(p, q))
}

fn mn() -> impl Strategy<Value = (usize, usize)> {
    prop_oneof![Just((1, 1)), Just((2, 1)), Just((1, 2)), Just((2, 2))]
}

fn hook(max: usize) -> impl Strategy<Value = (HookPartition, usize, usize)> {
    mn().prop_flat_map(move |(m, n)| {
        let hooks = enumerate_hooks(m, n, max);
        (0..hooks.len()).prop_map(move |i| (hooks[i].clone(), m, n))
    })
}

fn borel_and_hook(max: usize) -> impl Strategy<Value = (BorelDescriptor, HookPartition)> {
    mn().prop_flat_map(move |(m, n)| {
        let borels = BorelDescriptor::enumerate(m, n);
        let hooks = enumerate_hooks(m, n, max);
        (0..borels.len(), 0..hooks.len()).prop_map(move |(i, j)| (borels[i].clone(), hooks[j].clone()))
    })
}

fn super_poly(sp: SuperSpace) -> impl Strategy<Value = SuperPolynomial> {
    let d = sp.dim();
    prop::collection::vec((prop::collection::vec(0u32..3, d), -3i64..=3), 0..4).prop_map(move |terms| {
        terms.into_iter().fold(SuperPolynomial::zero(sp), |acc, (mut e, c)| {
            for (g, x) in e.iter_mut().enumerate() {
                if sp.is_odd(g) {
                    *x = (*x).min(1);
                }
            }
            acc.add(&SuperPolynomial::monomial(sp, e, int(c)))
        })
    })
}

fn homogeneous_parts(f: &SuperPolynomial) -> (SuperPolynomial, SuperPolynomial) {
    let sp = f.space();
    let mut even = SuperPolynomial::zero(sp);
    let mut odd = SuperPolynomial::zero(sp);
    for (e, c) in f.terms() {
        let parity: u32 = (0..sp.dim()).filter(|&g| sp.is_odd(g)).map(|g| e[g]).sum();
        let t = SuperPolynomial::monomial(sp, e.clone(), c.clone());
        if parity.is_multiple_of(2) {
            even = even.add(&t);
        } else {
            odd = odd.add(&t);
        }
    }
    (even, odd)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rational_text_round_trip(q in rational()) {
        prop_assert_eq!(parse_rational(&fmt_rational(&q)).unwrap(), q);
    }

    #[test]
    fn hooks_are_hooks_and_transpose_is_involutive((lam, m, n) in hook(7)) {
        prop_assert!(is_hook(lam.parts(), m, n));
        let t = lam.transpose();
        prop_assert_eq!(capelli_core::partitions::transpose(&t), lam.parts().to_vec());
        prop_assert_eq!(t.iter().sum::<usize>(), lam.size());
    }

    #[test]
    fn evaluation_is_a_ring_map(
        a in prop::collection::vec((prop::collection::vec(0u32..3, 3), -4i64..=4), 0..5),
        b in prop::collection::vec((prop::collection::vec(0u32..3, 3), -4i64..=4), 0..5),
        pt in prop::collection::vec(rational(), 3),
    ) {
        let build = |ts: &[(Vec<u32>, i64)]| SparsePolynomial::from_terms(
            2, 1, ts.iter().map(|(e, c)| (e.clone(), int(*c))).collect::<Vec<_>>()).unwrap();
        let (p, q) = (build(&a), build(&b));
        let (pv, qv) = (p.evaluate(&pt).unwrap(), q.evaluate(&pt).unwrap());
        prop_assert_eq!((&p * &q).evaluate(&pt).unwrap(), &pv * &qv);
        prop_assert_eq!((&p + &q).evaluate(&pt).unwrap(), &pv + &qv);
        prop_assert_eq!(&p - &p, SparsePolynomial::zero(2, 1));
    }

    #[test]
    fn node_identities_hold((lam, m, n) in hook(6)) {
        let d = tau0_diag(m, n).apply_diag(&hw0_diag(&lam, m, n)).unwrap();
        prop_assert_eq!(d, frobenius_coords(&lam, m, n, &one()).unwrap().coords());
        let g = m0_and_x0(m, n).apply_weight(&hw0_glm2n(&lam, m, n)).unwrap();
        prop_assert_eq!(g, frobenius_coords(&lam, m, n, &half()).unwrap().coords());
    }

    #[test]
    fn walk_matches_closed_form((b, lam) in borel_and_hook(6)) {
        prop_assert_eq!(hw_b_by_walk(&lam, &b), hw_b(&lam, &b));
    }

    #[test]
    fn r_b_decomposes((b, _lam) in borel_and_hook(0)) {
        let mut sum = b.even_core().r_b();
        for k in b.t_set() {
            sum = &sum + &b.r_odd(k).unwrap();
        }
        prop_assert_eq!(sum, b.r_b());
        prop_assert!(b.even_core().is_very_even());
    }

    #[test]
    fn family_c_agrees_with_m0_on_a_star(
        (lam, m, n) in hook(5),
        col in prop::collection::vec(rational(), 4),
        k in 1usize..=2,
    ) {
        prop_assume!(k <= n);
        let spec = MatrixFamilySpec::c(m, n);
        let mat = spec.member_with(&[(k, col[..m + n].to_vec())]).unwrap();
        prop_assert!(spec.contains(&mat).unwrap());
        let w = hw0_glm2n(&lam, m, n);
        prop_assert!(w.in_a_star());
        prop_assert_eq!(mat.mul_vec(&w.coords()).unwrap(), m0(m, n).mul_vec(&w.coords()).unwrap());
    }

    #[test]
    fn polynomials_are_constant_across_monoidal_moves(
        u in prop::collection::vec(rational(), 3),
        sign in prop::bool::ANY,
        i in 0usize..2,
        deg in 1usize..=3,
    ) {
        // put u on a hyperplane x_i + θ y_1 = ±½(1 − θ), θ = ½
        let theta = half();
        let c = half() * (one() - &theta);
        let target = if sign { c } else { -c };
        let mut coords = u;
        coords[2] = (&target - &coords[i]) / &theta;
        let p = Point::new(coords, 2, 1, theta.clone()).unwrap();
        let moves = monoidal_moves(&p);
        prop_assert!(!moves.is_empty());
        for mu in enumerate_hooks(2, 1, deg) {
            let f = build_isjp(&mu, 2, 1, &theta).unwrap();
            let at = f.evaluate(&p.coords).unwrap();
            for q in &moves {
                prop_assert_eq!(f.evaluate(&q.coords).unwrap(), at.clone());
            }
        }
    }

    #[test]
    fn finite_orbits_are_level_sets(r in 1i64..6, s in rational()) {
        let p = Point::new(vec![int(r) - frac(1, 4), s, int(1)], 2, 1, half()).unwrap();
        if let OrbitResult::Finite { points } = orbit(&p, 200) {
            for mu in enumerate_hooks(2, 1, 3) {
                let f = build_isjp(&mu, 2, 1, &half()).unwrap();
                let at = f.evaluate(&p.coords).unwrap();
                for q in &points {
                    prop_assert_eq!(f.evaluate(&q.coords).unwrap(), at.clone());
                }
            }
        }
    }

    #[test]
    fn supercommutative_product(
        a in super_poly(SuperSpace::new(1, 2)),
        b in super_poly(SuperSpace::new(1, 2)),
        c in super_poly(SuperSpace::new(1, 2)),
    ) {
        prop_assert_eq!(multiply(&multiply(&a, &b), &c), multiply(&a, &multiply(&b, &c)));
        let (ae, ao) = homogeneous_parts(&a);
        let (be, bo) = homogeneous_parts(&b);
        prop_assert_eq!(multiply(&ae, &b), multiply(&b, &ae));
        prop_assert_eq!(multiply(&ao, &bo), multiply(&bo, &ao).scale(&int(-1)));
        prop_assert_eq!(multiply(&ao, &be), multiply(&be, &ao));
    }

    #[test]
    fn derivations_supercommute(f in super_poly(SuperSpace::new(1, 2)), v in 0usize..3, w in 0usize..3) {
        let sp = f.space();
        let lhs = derivation(v, &derivation(w, &f));
        let rhs = derivation(w, &derivation(v, &f));
        let sign = if sp.is_odd(v) && sp.is_odd(w) { int(-1) } else { int(1) };
        prop_assert_eq!(lhs, rhs.scale(&sign));
    }

    #[test]
    fn odd_leibniz_rule(a in super_poly(SuperSpace::new(1, 2)), b in super_poly(SuperSpace::new(1, 2)), v in 0usize..3) {
        let sp = a.space();
        let (ae, ao) = homogeneous_parts(&a);
        let sign = if sp.is_odd(v) { int(-1) } else { int(1) };
        for (part, s) in [(ae, int(1)), (ao, sign)] {
            let lhs = derivation(v, &multiply(&part, &b));
            let rhs = multiply(&derivation(v, &part), &b).add(&multiply(&part, &derivation(v, &b)).scale(&s));
            prop_assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn sweep_reports_are_deterministic() {
    let cfg = SweepConfig::new(Pair::Glm2n, 2, 1, 3, 2);
    let a = serde_json::to_string(&deterministic(verify_glm2n(&cfg).unwrap())).unwrap();
    let b = serde_json::to_string(&deterministic(verify_glm2n(&cfg).unwrap())).unwrap();
    assert_eq!(a, b);
}

#[test]
fn weight_zero_is_additive_identity() {
    let w = WeightVector::from_ints(&[1, -2], &[3, 4]);
    assert_eq!(&w + &WeightVector::zero(2, 2), w);
}
