//! Rabin's irreducibility test and seeded generation of irreducible moduli.

use rand::Rng;

use crate::arith::prime_factors;
use crate::base::BaseField;
use crate::poly::{self, FqPoly};

/// True iff `f` (of degree ≥ 1) is irreducible over `k`.
///
/// `f` of degree n is irreducible iff `x^{q^n} ≡ x (mod f)` and
/// `gcd(x^{q^{n/r}} - x, f) = 1` for every prime `r | n`.
pub fn is_irreducible(k: &BaseField, f: &FqPoly) -> bool {
    let n = match f.degree() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    let f = poly::monic(k, f);
    let x = FqPoly::x();
    // frob[i] = x^{q^i} mod f
    let mut frob = Vec::with_capacity(n + 1);
    frob.push(poly::rem(k, &x, &f).expect("f is nonzero"));
    for i in 0..n {
        let next = poly::powmod(k, &frob[i], u64::from(k.q()), &f).expect("f is nonzero");
        frob.push(next);
    }
    if frob[n] != frob[0] {
        return false;
    }
    prime_factors(n as u64).into_iter().all(|r| {
        let h = poly::sub(k, &frob[n / r as usize], &x);
        poly::gcd(k, &h, &f).map(|g| g.degree() == Some(0)).unwrap_or(false)
    })
}

/// Draws monic polynomials of the given degree until one is irreducible.
/// Degree one always yields `x`.
pub fn random_irreducible<R: Rng + ?Sized>(k: &BaseField, degree: usize, rng: &mut R) -> FqPoly {
    assert!(degree >= 1, "degree must be positive");
    if degree == 1 {
        return FqPoly::x();
    }
    loop {
        let mut coeffs: Vec<_> = (0..degree).map(|_| rng.gen_range(0..k.q())).collect();
        if coeffs[0] == 0 {
            continue;
        }
        coeffs.push(1);
        let f = FqPoly::from_coeffs(coeffs);
        if is_irreducible(k, &f) {
            return f;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Monic irreducibles of degree n over F_q by exhaustive trial division.
    fn brute_irreducible(k: &BaseField, f: &FqPoly) -> bool {
        let n = f.degree().unwrap();
        let q = k.q() as usize;
        for d in 1..=n / 2 {
            for idx in 0..q.pow(d as u32) {
                let mut coeffs = Vec::with_capacity(d + 1);
                let mut rest = idx;
                for _ in 0..d {
                    coeffs.push((rest % q) as u32);
                    rest /= q;
                }
                coeffs.push(1);
                if poly::divides(k, &FqPoly::from_coeffs(coeffs), f) {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn quadratics_over_f2() {
        let k = BaseField::prime(2).unwrap();
        let irreducible: Vec<_> = (0..4u32)
            .map(|i| FqPoly::from_coeffs(vec![i & 1, i >> 1, 1]))
            .filter(|f| is_irreducible(&k, f))
            .collect();
        assert_eq!(irreducible, vec![FqPoly::from_coeffs(vec![1, 1, 1])]);
    }

    #[test]
    fn rabin_matches_trial_division() {
        for q in [2u64, 3] {
            let k = BaseField::prime(q).unwrap();
            for n in 2..=5usize {
                let total = (q as usize).pow(n as u32);
                for idx in 0..total {
                    let mut coeffs = Vec::new();
                    let mut rest = idx;
                    for _ in 0..n {
                        coeffs.push((rest % q as usize) as u32);
                        rest /= q as usize;
                    }
                    coeffs.push(1);
                    let f = FqPoly::from_coeffs(coeffs);
                    assert_eq!(is_irreducible(&k, &f), brute_irreducible(&k, &f), "{}", poly::format(&f));
                }
            }
        }
    }

    #[test]
    fn rabin_over_extension_coefficients() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let k = BaseField::random(2, 2, &mut rng).unwrap();
        for n in 2..=3usize {
            for idx in 0..4usize.pow(n as u32) {
                let mut coeffs: Vec<u32> = (0..n).map(|i| ((idx >> (2 * i)) & 3) as u32).collect();
                coeffs.push(1);
                let f = FqPoly::from_coeffs(coeffs);
                assert_eq!(is_irreducible(&k, &f), brute_irreducible(&k, &f));
            }
        }
    }

    #[test]
    fn generation_is_seeded() {
        let k = BaseField::prime(3).unwrap();
        let a = random_irreducible(&k, 6, &mut ChaCha8Rng::seed_from_u64(5));
        let b = random_irreducible(&k, 6, &mut ChaCha8Rng::seed_from_u64(5));
        assert_eq!(a, b);
        assert!(is_irreducible(&k, &a));
        assert_eq!(random_irreducible(&k, 1, &mut ChaCha8Rng::seed_from_u64(0)), FqPoly::x());
    }
}
