mod common;

use common::{divisors, tower, TOWERS};
use fqlin::linearized::{find_normal, is_normal, lin_eval, normal_coords, q_order, subfield_coords};
use fqlin::oracle::q_associate_direct;
use fqlin::poly::{self, FqPoly};
use fqlin::{make_field, FieldParams};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn associate_is_a_ring_homomorphism(t in 0..TOWERS.len(), seed in any::<u64>()) {
        let ctx = tower(t, 1);
        let k = ctx.base();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = poly::random_below(k, 2 * ctx.ell(), &mut rng);
        let g = poly::random_below(k, 2 * ctx.ell(), &mut rng);
        let a = ctx.random_element(&mut rng);
        let lf = lin_eval(&ctx, &f, &a).unwrap();
        let lg = lin_eval(&ctx, &g, &a).unwrap();
        prop_assert_eq!(lin_eval(&ctx, &poly::add(k, &f, &g), &a).unwrap(), ctx.add(&lf, &lg));
        prop_assert_eq!(lin_eval(&ctx, &f, &lg).unwrap(), lin_eval(&ctx, &poly::mul(k, &f, &g), &a).unwrap());
        prop_assert_eq!(lf, q_associate_direct(&ctx, &f, &a));
    }

    #[test]
    fn kernel_matches_divisibility(t in 0..TOWERS.len(), seed in any::<u64>()) {
        let ctx = tower(t, 2);
        let k = ctx.base();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = ctx.random_element(&mut rng);
        let m = q_order(&ctx, &a).unwrap().m_poly;
        prop_assert!(m.is_monic());
        prop_assert!(poly::divides(k, &m, &poly::xn_minus_1(k, ctx.ell())));
        prop_assert!(lin_eval(&ctx, &m, &a).unwrap().is_zero());
        let f = poly::random_below(k, ctx.ell() + 2, &mut rng);
        prop_assert_eq!(lin_eval(&ctx, &f, &a).unwrap().is_zero(), poly::divides(k, &m, &f));
        let multiple = poly::mul(k, &m, &poly::random_below(k, 3, &mut rng));
        prop_assert!(lin_eval(&ctx, &multiple, &a).unwrap().is_zero());
    }

    #[test]
    fn image_order_law(t in 0..TOWERS.len(), seed in any::<u64>()) {
        let ctx = tower(t, 3);
        let k = ctx.base();
        let n = ctx.ell();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let beta = find_normal(&ctx, n, seed).unwrap();
        let g = poly::random_below(k, n + 3, &mut rng);
        let xn = poly::xn_minus_1(k, n);
        let expected = poly::exact_div(k, &xn, &poly::gcd(k, &xn, &g).unwrap()).unwrap();
        let image = lin_eval(&ctx, &g, &beta).unwrap();
        prop_assert_eq!(q_order(&ctx, &image).unwrap().m_poly, expected);
    }

    #[test]
    fn image_stays_in_subfield(t in 0..TOWERS.len(), seed in any::<u64>()) {
        let ctx = tower(t, 4);
        let k = ctx.base();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for d in divisors(ctx.ell()) {
            let a = ctx.random_subfield_element(d, &mut rng).unwrap();
            let f = poly::random_below(k, 5, &mut rng);
            prop_assert!(ctx.in_subfield(&lin_eval(&ctx, &f, &a).unwrap(), d).unwrap());
        }
    }

    #[test]
    fn normal_coordinates_round_trip(t in 0..TOWERS.len(), seed in any::<u64>()) {
        let ctx = tower(t, 5);
        let n = ctx.ell();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let beta = find_normal(&ctx, n, seed).unwrap();
        let a = ctx.random_element(&mut rng);
        let c = normal_coords(&ctx, &beta, &a, n).unwrap();
        prop_assert!(c.is_zero() || c.degree().unwrap() < n);
        prop_assert_eq!(lin_eval(&ctx, &c, &beta).unwrap(), a);
        for m in divisors(n) {
            let sub = ctx.random_subfield_element(m, &mut rng).unwrap();
            let h = subfield_coords(&ctx, &beta, &sub, m, n).unwrap();
            prop_assert!(h.is_zero() || h.degree().unwrap() < m);
            let full = poly::mul(ctx.base(), &h, &poly::cyclic_cofactor(n, m));
            prop_assert_eq!(lin_eval(&ctx, &full, &beta).unwrap(), sub);
        }
    }

    #[test]
    fn find_normal_output_is_normal(t in 0..TOWERS.len(), seed in any::<u64>()) {
        let ctx = tower(t, 6);
        for n in divisors(ctx.ell()) {
            let b = find_normal(&ctx, n, seed).unwrap();
            prop_assert!(ctx.in_subfield(&b, n).unwrap());
            prop_assert!(is_normal(&ctx, &b, n).unwrap());
            prop_assert_eq!(q_order(&ctx, &b).unwrap().m_poly, poly::xn_minus_1(ctx.base(), n));
        }
    }
}

#[test]
fn f8_has_three_normal_elements() {
    let ctx = make_field(&FieldParams::new(2, 1, 3)).unwrap();
    let all = ctx.subfield_enumerate(3).unwrap();
    let normals = all.iter().filter(|b| is_normal(&ctx, b, 3).unwrap()).count();
    assert_eq!(normals, 3);
}

#[test]
fn normal_count_matches_unit_count() {
    // The number of normal elements of F_{q^n} equals the number of units of F_q[x]/(x^n-1).
    for &(p, n) in &[(2u64, 4usize), (3, 2), (3, 3), (2, 6)] {
        let ctx = make_field(&FieldParams::new(p, 1, n)).unwrap();
        let k = ctx.base();
        let xn = poly::xn_minus_1(k, n);
        let normals = ctx.subfield_enumerate(n).unwrap().iter().filter(|b| is_normal(&ctx, b, n).unwrap()).count();
        let units = ctx
            .subfield_enumerate(n)
            .unwrap()
            .iter()
            .filter(|a| {
                let f = FqPoly::from_coeffs(a.coords().to_vec());
                poly::gcd(k, &f, &xn).map(|g| g.degree() == Some(0)).unwrap_or(false)
            })
            .count();
        assert_eq!(normals, units, "p={p} n={n}");
    }
}
