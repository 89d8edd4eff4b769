use super::PowerCount;
use crate::arith::gcd;
use crate::error::{Error, Result};

/// `λ(d_1, …, d_k) = Σ d_i + Σ_{j≥2} (-1)^{j+1} Σ_{|S|=j} gcd(d_S)`, summed
/// directly over all `2^k` subsets. Equals `deg lcm(x^{d_1}-1, …, x^{d_k}-1)`.
pub fn lambda_ie(d_list: &[usize]) -> u64 {
    assert!(d_list.iter().all(|&d| d > 0), "degrees must be positive");
    assert!(d_list.len() < 32, "inclusion-exclusion over 2^k subsets needs k < 32");
    let k = d_list.len();
    let mut total: i128 = d_list.iter().map(|&d| d as i128).sum();
    for mask in 1u32..(1u32 << k) {
        let size = mask.count_ones();
        if size < 2 {
            continue;
        }
        let g = (0..k)
            .filter(|&i| mask >> i & 1 == 1)
            .fold(0, |g, i| gcd(g, d_list[i] as u64));
        if size % 2 == 0 {
            total -= g as i128;
        } else {
            total += g as i128;
        }
    }
    u64::try_from(total).expect("lambda is a polynomial degree")
}

/// `|F_{q^{d_1}} + … + F_{q^{d_k}}| = q^λ`.
pub fn sumset_size(q: u32, d_list: &[usize]) -> PowerCount {
    PowerCount::new(q, lambda_ie(d_list))
}

/// Solutions of `x_1 + … + x_k = 0` with `x_i ∈ F_{q^{d_i}}`: `q^{Σd_i - λ}`.
pub fn zero_sum_count(q: u32, d_list: &[usize]) -> Result<PowerCount> {
    if d_list.len() < 2 {
        return Err(Error::KTooSmall { min: 2, got: d_list.len() });
    }
    let sum: u64 = d_list.iter().map(|&d| d as u64).sum();
    Ok(PowerCount::new(q, sum - lambda_ie(d_list)))
}
