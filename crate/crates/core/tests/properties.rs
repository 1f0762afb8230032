use bezoutiant::analysis::{cauchy_bound, corner_entry_formula, count_real_roots, Pattern};
use bezoutiant::families::{instance_rng, interlacing_pair, Family};
use bezoutiant::scalar::{int, rat};
use bezoutiant::*;
use proptest::prelude::*;
use proptest::test_runner::RngSeed;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, prop::sample::select(vec![1i64, 1, 2, 3, 5])).prop_map(|(a, b)| rat(a, b))
}

fn nonzero() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |x| *x != int(0))
}

fn poly(max_degree: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(rational(), 0..=max_degree + 1).prop_map(Polynomial::new)
}

/// Polynomial of exact degree `d`.
fn poly_of_degree(d: usize) -> impl Strategy<Value = Polynomial> {
    (prop::collection::vec(rational(), d), nonzero()).prop_map(|(mut c, lead)| {
        c.push(lead);
        Polynomial::new(c)
    })
}

fn distinct(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::btree_set(rational(), n).prop_map(|s| s.into_iter().collect())
}

/// Nodes with grouped repetitions, multiplicities up to three.
fn grouped_nodes(max: usize) -> impl Strategy<Value = NodeSequence> {
    prop::collection::vec((rational(), 1usize..=3), 1..=max).prop_map(move |groups| {
        let mut out: Vec<Rational> = Vec::new();
        for (v, m) in groups {
            if out.contains(&v) {
                continue;
            }
            out.extend(std::iter::repeat_n(v, m));
        }
        out.truncate(max);
        NodeSequence::new(out)
    })
}

/// `(P, Q)` with `1 <= deg P <= max` and `deg Q <= deg P`.
fn bezout_pair(max: usize) -> impl Strategy<Value = (Polynomial, Polynomial)> {
    (1..=max).prop_flat_map(|n| (poly_of_degree(n), poly(n)))
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 96,
        rng_seed: RngSeed::Fixed(0x5e_edb3),
        ..ProptestConfig::default()
    })]

    #[test]
    fn expanded_root_form_vanishes_at_roots(lead in nonzero(), roots in prop::collection::vec(rational(), 0..6)) {
        let rf = RootForm::new(lead.clone(), NodeSequence::new(roots)).unwrap();
        let p = rf.expand();
        prop_assert_eq!(p.degree(), Some(rf.degree()));
        prop_assert_eq!(p.leading(), Some(&lead));
        for r in rf.roots().iter() {
            prop_assert_eq!(p.eval(r), int(0));
        }
    }

    #[test]
    fn multiplication_laws(a in poly(4), b in poly(4), c in poly(3)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
            prop_assert_eq!((&a * &b).degree(), Some(da + db));
        }
    }

    #[test]
    fn product_rule(a in poly(5), b in poly(5)) {
        let lhs = (&a * &b).derivative();
        let rhs = &(&a.derivative() * &b) + &(&a * &b.derivative());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn deflation_identity(p in poly(6), a in rational()) {
        // p(x) - p(a) = (x - a) * divide_linear(p, a)
        let lhs = &p - &Polynomial::constant(p.eval(&a));
        let rhs = &Polynomial::linear_factor(&a) * &p.divide_linear(&a);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gcd_divides_both(common in poly(2), a in poly(3), b in poly(3)) {
        let p = &common * &a;
        let q = &common * &b;
        prop_assume!(!p.is_zero() || !q.is_zero());
        let g = p.gcd(&q).unwrap();
        prop_assert_eq!(g.leading(), Some(&int(1)));
        prop_assert!(p.div_rem(&g).1.is_zero());
        prop_assert!(q.div_rem(&g).1.is_zero());
        if !common.is_zero() {
            prop_assert!(g.div_rem(&common.monic()).1.is_zero());
        }
    }

    #[test]
    fn bezout_is_symmetric_and_constructions_agree((p, q) in bezout_pair(7)) {
        let input = BezoutInput::new(&p, &q).unwrap();
        let b = bezout_via_product(&input);
        prop_assert!(b.is_symmetric());
        prop_assert_eq!(b, bezout_via_bilinear(&input));
    }

    #[test]
    fn bezout_is_antisymmetric(n in 1usize..=6, seed in any::<u64>()) {
        let mut rng = instance_rng(seed, 0);
        let p = bezoutiant::families::random_polynomial(&mut rng, n);
        let q = bezoutiant::families::random_polynomial(&mut rng, n);
        let pq = bezout(&p, &q).unwrap();
        let qp = bezout(&q, &p).unwrap();
        prop_assert_eq!(pq, qp.scale(&int(-1)));
    }

    #[test]
    fn bezout_is_linear_in_q(
        (p, q1) in bezout_pair(6),
        q2_seed in any::<u64>(),
        alpha in rational(),
        beta in rational(),
    ) {
        let n = p.degree().unwrap();
        let mut rng = instance_rng(q2_seed, 1);
        let q2 = bezoutiant::families::random_polynomial_in(&mut rng, 0..=n);
        let combo = &q1.scale(&alpha) + &q2.scale(&beta);
        let lhs = bezout(&p, &combo).unwrap();
        let rhs = bezout(&p, &q1).unwrap().scale(&alpha).add(&bezout(&p, &q2).unwrap().scale(&beta));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn det_identity_holds(seed in any::<u64>(), n in 1usize..=6, fam in 0usize..3) {
        let family = Family::ALL[fam];
        let inst = family.generate(&mut instance_rng(seed, 2), n);
        prop_assert!(bezout_det_identity(&inst.p, &inst.q).unwrap().holds());
    }

    #[test]
    fn engines_agree(q in poly(8), nodes in grouped_nodes(7)) {
        let a = divdiff_poly(&q, &nodes).unwrap();
        let b = divdiff_recursive(&q, &nodes).unwrap();
        let c = divdiff_hermite(&HermiteData::sample(&q, &nodes), &nodes).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(&b, &c);
    }

    #[test]
    fn divided_differences_are_symmetric(q in poly(7), nodes in (1usize..=6).prop_flat_map(distinct), shuffle in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut perm = nodes.clone();
        perm.shuffle(&mut instance_rng(shuffle, 3));
        prop_assert_eq!(divdiff_poly(&q, &nodes).unwrap(), divdiff_poly(&q, &perm).unwrap());
    }

    #[test]
    fn leading_coefficient_law(d in 0usize..=5, extra in 0usize..=2, seed in any::<u64>(), nodes in prop::collection::vec(rational(), 8)) {
        let q = bezoutiant::families::random_polynomial(&mut instance_rng(seed, 4), d);
        let k = d + 1 + extra;
        let value = divdiff_poly(&q, &nodes[..k]).unwrap();
        if extra == 0 {
            prop_assert_eq!(&value, q.leading().unwrap());
        } else {
            prop_assert_eq!(value, int(0));
        }
    }

    #[test]
    fn interpolant_matches_data(q in poly(8), nodes in grouped_nodes(6)) {
        let data = HermiteData::sample(&q, &nodes);
        let from_poly = newton_interp(&q.clone().into(), &nodes).unwrap();
        let from_data = newton_interp(&data.clone().into(), &nodes).unwrap();
        prop_assert_eq!(&from_poly, &from_data);
        prop_assert!(from_poly.degree_or_zero() < nodes.len());
        for g in data.groups() {
            let mut d = from_poly.clone();
            for want in &g.values {
                prop_assert_eq!(&d.eval(&g.node), want);
                d = d.derivative();
            }
        }
    }

    #[test]
    fn delta_structural_zeros(q in poly(6), nodes in grouped_nodes(7)) {
        let delta = delta_matrix(&q.into(), &nodes).unwrap();
        let m = delta.matrix();
        let n = m.dim();
        for i in 0..n {
            for j in 0..n {
                if i + j + 1 < n {
                    prop_assert_eq!(m.get(i, j), &int(0));
                }
            }
        }
    }

    #[test]
    fn delta_minors_ignore_node_order(q in poly(5), nodes in (2usize..=6).prop_flat_map(distinct), shuffle in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut perm = nodes.clone();
        perm.shuffle(&mut instance_rng(shuffle, 5));
        let a = delta_matrix(&q.clone().into(), &nodes).unwrap().matrix().trailing_minors();
        let b = delta_matrix(&q.into(), &perm).unwrap().matrix().trailing_minors();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn minor_identity_all_families(seed in any::<u64>(), n in 2usize..=7, fam in 0usize..3) {
        let inst = Family::ALL[fam].generate(&mut instance_rng(seed, 6), n);
        let report = minor_identity_check(&inst.p, &inst.q).unwrap();
        prop_assert!(report.holds(), "{:?}", report.checks);
    }

    #[test]
    fn subset_sum_formula_matches_direct_minors(seed in any::<u64>(), n in 1usize..=5) {
        let inst = Family::DistinctRoots.generate(&mut instance_rng(seed, 7), n);
        let minors = bezout(&inst.p.expand(), &inst.q).unwrap().trailing_minors();
        for s in 1..=n {
            prop_assert_eq!(&subset_sum_minor(&inst.p, &inst.q, s).unwrap(), minors.size(s));
        }
        prop_assert_eq!(&corner_entry_formula(&inst.p, &inst.q).unwrap(), minors.size(1));
    }

    #[test]
    fn interlacing_data_gives_strict_pattern(seed in any::<u64>(), n in 2usize..=6) {
        let (nodes, q) = interlacing_pair(&mut instance_rng(seed, 8), n);
        let minors = delta_matrix(&q.clone().into(), &nodes).unwrap().matrix().trailing_minors();
        let pattern = classify_pattern(&minors).classification;
        prop_assert!(matches!(pattern, Pattern::AllPositive | Pattern::Alternating), "{pattern:?}");
        let rep = interlace_verdict(&q.into(), &nodes, &rat(1, 1 << 16)).unwrap();
        prop_assert!(rep.sturm_confirmed);
    }

    #[test]
    fn sturm_counts_distinct_roots(
        roots in prop::collection::vec((rational(), 1usize..=3), 0..5),
        quad in 0i64..=4,
        lead in nonzero(),
    ) {
        let mut all = Vec::new();
        let mut distinct = Vec::new();
        for (r, m) in roots {
            if !distinct.contains(&r) {
                distinct.push(r.clone());
            }
            all.extend(std::iter::repeat_n(r, m));
        }
        let mut p = Polynomial::from_roots(&all).scale(&lead);
        if quad > 0 {
            // x^2 + quad has no real roots
            p = &p * &Polynomial::from_ints(&[quad, 0, 1]);
        }
        let chain = sturm_chain(&p).unwrap();
        let bound = cauchy_bound(&p);
        prop_assert_eq!(count_real_roots(&chain, &-bound.clone(), &bound), distinct.len());
        prop_assert_eq!(chain.count_all(), distinct.len());
        let g = p.gcd(&p.derivative()).unwrap();
        let squarefree = p.div_rem(&g).0;
        let isolated = isolate_roots(&squarefree, &rat(1, 64)).unwrap();
        prop_assert_eq!(isolated.len(), distinct.len());
        for w in isolated.windows(2) {
            prop_assert!(w[0].upper <= w[1].lower);
        }
        for r in &distinct {
            prop_assert_eq!(isolated.iter().filter(|i| i.contains(r)).count(), 1);
        }
    }
}
