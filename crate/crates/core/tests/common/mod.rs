#![allow(dead_code)]

use fqlin::{make_field, FieldCtx, FieldParams};

/// Small towers covering prime fields, s > 1 and composite ℓ.
pub const TOWERS: &[(u64, u32, usize)] = &[(2, 1, 6), (3, 1, 4), (2, 2, 3), (5, 1, 2), (2, 1, 12), (3, 2, 2)];

pub fn tower(index: usize, seed: u64) -> FieldCtx {
    let (p, s, ell) = TOWERS[index % TOWERS.len()];
    make_field(&FieldParams::new(p, s, ell).seed(seed)).unwrap()
}

pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}
