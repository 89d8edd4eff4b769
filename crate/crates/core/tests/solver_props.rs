mod common;

use fqlin::oracle::{brute_count, brute_trace_fiber, q_associate_direct};
use fqlin::poly::{self, FqPoly};
use fqlin::solver::{
    count_solutions, lambda_ie, solve_one, sumset_size, trace_consistent, trace_count, zero_sum_count, EquationSpec,
    TraceTarget,
};
use fqlin::{make_field, FieldParams};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn zero_sum_and_sumset_exponents_add_up(q in prop::sample::select(vec![2u32, 3, 4, 5]), dims in prop::collection::vec(1usize..9, 2..5)) {
        let z = zero_sum_count(q, &dims).unwrap();
        let s = sumset_size(q, &dims);
        prop_assert_eq!(z.exponent + s.exponent, dims.iter().sum::<usize>() as u64);
        prop_assert_eq!(s.exponent, lambda_ie(&dims));
    }

    #[test]
    fn solvable_right_sides_share_an_exponent(
        p in prop::sample::select(vec![2u64, 3]),
        dims in prop::collection::vec(1usize..4, 1..3),
        seed in any::<u64>(),
    ) {
        let ell = fqlin::arith::lcm_all(dims.iter().map(|&d| d as u64)) as usize;
        let ctx = make_field(&FieldParams::new(p, 1, ell)).unwrap();
        let k = ctx.base();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f_list: Vec<FqPoly> = dims
            .iter()
            .map(|_| loop {
                let f = poly::random_below(k, 4, &mut rng);
                if !f.is_zero() {
                    break f;
                }
            })
            .collect();
        let homogeneous = EquationSpec::new(f_list.clone(), dims.clone(), ctx.zero(), 1).unwrap();
        let base_count = count_solutions(&ctx, &homogeneous).unwrap();
        prop_assert!(base_count.solvable);
        for _ in 0..4 {
            let b = ctx.random_element(&mut rng);
            let spec = EquationSpec::new(f_list.clone(), dims.clone(), b.clone(), ell).unwrap();
            let res = count_solutions(&ctx, &spec).unwrap();
            prop_assert_eq!(res.h_degree, base_count.h_degree);
            if res.solvable {
                prop_assert_eq!(res.exponent, base_count.exponent);
                let z = solve_one(&ctx, &spec).unwrap();
                let mut total = ctx.zero();
                for (zi, fi) in z.iter().zip(&f_list) {
                    total = ctx.add(&total, &q_associate_direct(&ctx, fi, zi));
                }
                prop_assert_eq!(total, b);
            }
            let oracle = brute_count(&ctx, &spec, 1 << 16).unwrap();
            let expected = res.count().and_then(|c| c.value()).unwrap_or(0);
            prop_assert_eq!(u128::from(oracle.count), expected);
        }
    }
}

#[test]
fn trace_fibers_partition_the_field() {
    let ctx = make_field(&FieldParams::new(2, 1, 6)).unwrap();
    let f4 = ctx.subfield_enumerate(2).unwrap();
    let f8 = ctx.subfield_enumerate(3).unwrap();
    let mut total = 0;
    let mut consistent = 0;
    let per = trace_count(2, 6, &[2, 3]).unwrap().value().unwrap() as u64;
    for b1 in &f4 {
        for b2 in &f8 {
            let targets = [TraceTarget::new(2, b1.clone()), TraceTarget::new(3, b2.clone())];
            let fiber = brute_trace_fiber(&ctx, &targets, 6, 1 << 10).unwrap().count;
            total += fiber;
            if trace_consistent(&ctx, &targets, 6).unwrap() {
                consistent += 1;
                assert_eq!(fiber, per);
            } else {
                assert_eq!(fiber, 0);
            }
        }
    }
    assert_eq!(total, 64);
    assert_eq!(consistent, 16);
    assert_eq!(consistent * per, 64);
}
