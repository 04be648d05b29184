use proptest::prelude::*;
use zerosquare::oracle::{GenConfig, ZeroSquareGenerator};
use zerosquare::{
    complete_orthogonal, normalize, verify_certificate, Elem, Matrix, Ring, Vec3,
};

fn int(v: i64) -> Elem {
    Ring::Int.from_i64(v)
}

fn ring_strategy() -> impl Strategy<Value = Ring> {
    prop_oneof![Just(Ring::Int), Just(Ring::Fp(5)), Just(Ring::Fp(2)), Just(Ring::Nil16)]
}

fn elem(ring: Ring) -> BoxedStrategy<Elem> {
    match ring {
        Ring::Int => (-10_000i64..10_000).prop_map(int).boxed(),
        Ring::Fp(p) => (0..p).prop_map(Elem::Fp).boxed(),
        Ring::Nil16 => (0u8..16).prop_map(Ring::nil).boxed(),
    }
}

fn matrix(ring: Ring, n: usize) -> BoxedStrategy<Matrix> {
    proptest::collection::vec(elem(ring), n * n)
        .prop_map(move |e| Matrix::from_vec(ring, n, n, e).unwrap())
        .boxed()
}

fn ring_and_square_pair() -> impl Strategy<Value = (Matrix, Matrix)> {
    (ring_strategy(), 1usize..=4).prop_flat_map(|(r, n)| (matrix(r, n), matrix(r, n)))
}

/// Product of shears over Z together with its exact inverse.
fn unimodular_pair() -> impl Strategy<Value = (Matrix, Matrix)> {
    proptest::collection::vec((0usize..3, 1usize..3, -4i64..=4), 1..8).prop_map(|steps| {
        let mut m = Matrix::identity(Ring::Int, 3);
        let mut inv = Matrix::identity(Ring::Int, 3);
        for (i, off, k) in steps {
            let j = (i + off) % 3;
            let mut s = Matrix::identity(Ring::Int, 3);
            s.set(i, j, int(k)).unwrap();
            let mut s_inv = Matrix::identity(Ring::Int, 3);
            s_inv.set(i, j, int(-k)).unwrap();
            m = m.mul(&s).unwrap();
            inv = s_inv.mul(&inv).unwrap();
        }
        (m, inv)
    })
}

proptest! {
    #[test]
    fn xgcd_is_a_bezout_identity(a in any::<i64>(), b in any::<i64>()) {
        let r = Ring::Int;
        let (a, b) = (int(a), int(b));
        let (g, s, t) = r.xgcd(&a, &b).unwrap();
        prop_assert_eq!(r.add(&r.mul(&s, &a), &r.mul(&t, &b)), g.clone());
        prop_assert_eq!(r.canonical(&g), g.clone());
        if !r.is_zero(&g) {
            r.exact_div(&a, &g).unwrap();
            r.exact_div(&b, &g).unwrap();
        }
    }

    #[test]
    fn xgcd_over_prime_fields(a in 0u32..101, b in 0u32..101) {
        let r = Ring::Fp(101);
        let (a, b) = (Elem::Fp(a), Elem::Fp(b));
        let (g, s, t) = r.xgcd(&a, &b).unwrap();
        prop_assert_eq!(r.add(&r.mul(&s, &a), &r.mul(&t, &b)), g.clone());
        prop_assert!(g == Elem::Fp(0) || g == Elem::Fp(1));
    }

    #[test]
    fn gcd_list_reproduces_gcd(v in proptest::collection::vec(-1_000_000i64..1_000_000, 1..7)) {
        let r = Ring::Int;
        let v: Vec<Elem> = v.into_iter().map(int).collect();
        let (g, coeffs) = r.gcd_list(&v).unwrap();
        let combo = r.sum(&coeffs.iter().zip(&v).map(|(c, x)| r.mul(c, x)).collect::<Vec<_>>());
        prop_assert_eq!(combo, g.clone());
        if !r.is_zero(&g) {
            for x in &v {
                prop_assert!(r.exact_div(x, &g).is_ok());
            }
        }
    }

    #[test]
    fn canon_assoc_round_trips(r in ring_strategy(), seed in any::<i64>()) {
        let a = match r {
            Ring::Nil16 => Ring::nil((seed.rem_euclid(16)) as u8),
            _ => r.from_i64(seed),
        };
        let (u, c) = r.canon_assoc(&a);
        prop_assert!(r.is_unit(&u));
        prop_assert_eq!(r.mul(&u, &c), a);
        prop_assert_eq!(r.canonical(&c), c);
    }

    #[test]
    fn element_text_round_trips(r in ring_strategy(), seed in any::<i64>()) {
        let a = match r {
            Ring::Nil16 => Ring::nil((seed.rem_euclid(16)) as u8),
            _ => r.from_i64(seed),
        };
        prop_assert_eq!(r.parse_elem(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn square_entry_formula_is_the_square((t, _) in ring_and_square_pair()) {
        prop_assert_eq!(t.square_entry_formula().unwrap(), t.mul(&t).unwrap());
    }

    #[test]
    fn trace_is_linear_and_cyclic((a, b) in ring_and_square_pair()) {
        let r = a.ring();
        prop_assert_eq!(a.add(&b).unwrap().trace().unwrap(), r.add(&a.trace().unwrap(), &b.trace().unwrap()));
        prop_assert_eq!(a.mul(&b).unwrap().trace().unwrap(), b.mul(&a).unwrap().trace().unwrap());
    }

    #[test]
    fn det_is_multiplicative(a in matrix(Ring::Int, 3), b in matrix(Ring::Int, 3)) {
        let r = Ring::Int;
        prop_assert_eq!(a.mul(&b).unwrap().det().unwrap(), r.mul(&a.det().unwrap(), &b.det().unwrap()));
    }

    #[test]
    fn outer_products_have_vanishing_minors(
        p in proptest::collection::vec(-50i64..50, 1..6),
        q in proptest::collection::vec(-50i64..50, 1..6),
    ) {
        let p: Vec<Elem> = p.into_iter().map(int).collect();
        let q: Vec<Elem> = q.into_iter().map(int).collect();
        let t = Matrix::outer_product(Ring::Int, &p, &q).unwrap();
        prop_assert_eq!(t.all_minors2_zero(), None);
    }

    #[test]
    fn cross_product_is_orthogonal(a in proptest::array::uniform3(-1000i64..1000), b in proptest::array::uniform3(-1000i64..1000)) {
        let (a, b) = (Vec3::from_ints(Ring::Int, a), Vec3::from_ints(Ring::Int, b));
        prop_assert_eq!(a.cross(&b).unwrap().dot(&a).unwrap(), int(0));
        prop_assert_eq!(a.cross(&b).unwrap().dot(&b).unwrap(), int(0));
    }

    #[test]
    fn shifting_by_b_preserves_the_triple_product(
        b in proptest::array::uniform3(-100i64..100),
        c in proptest::array::uniform3(-100i64..100),
        x in proptest::array::uniform3(-100i64..100),
        s in -100i64..100,
    ) {
        let (b, c, x) = (Vec3::from_ints(Ring::Int, b), Vec3::from_ints(Ring::Int, c), Vec3::from_ints(Ring::Int, x));
        let shifted = x.sub(&b.scale(&int(s))).unwrap();
        prop_assert_eq!(Vec3::triple(&b, &c, &shifted).unwrap(), Vec3::triple(&b, &c, &x).unwrap());
    }

    /// `a` = a row of an invertible M, `b, c` = columns of M^-1, so `a.b = 1`
    /// and `a.c = 0` with all three unimodular.
    #[test]
    fn completion_is_orthogonal_with_unit_triple((m, inv) in unimodular_pair()) {
        let r = Ring::Int;
        let a = Vec3::from_slice(r, m.row(0)).unwrap();
        let b = Vec3::from_slice(r, &inv.col(0)).unwrap();
        let c = Vec3::from_slice(r, &inv.col(1)).unwrap();
        prop_assert!(b.cross(&c).unwrap().is_unimodular().unwrap());
        let done = complete_orthogonal(&a, &b, &c).unwrap();
        prop_assert_eq!(a.dot(&done.x).unwrap(), int(0));
        prop_assert!(r.is_unit(&Vec3::triple(&b, &c, &done.x).unwrap()));
        prop_assert_eq!(Vec3::triple(&b, &c, &done.x).unwrap(), done.unit);
    }

    #[test]
    fn generated_instances_normalize(n in 2usize..=3, bound in 1i64..1000, seed in any::<u64>(), steps in 0usize..6) {
        let t = ZeroSquareGenerator::new(GenConfig::new(n, bound, seed, steps)).unwrap().next_matrix().unwrap();
        let cert = normalize(&t).unwrap();
        prop_assert!(verify_certificate(&t, &cert).ok());
        prop_assert_eq!(cert.r.clone(), t.gcd_of_entries().unwrap());
        prop_assert_eq!(t.all_minors2_zero(), None);
    }

    #[test]
    fn matrix_json_round_trips((t, _) in ring_and_square_pair()) {
        prop_assert_eq!(Matrix::parse_json(&t.to_json_string()).unwrap(), t);
    }
}
