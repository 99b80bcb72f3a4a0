//! Seeded random generation of coefficients, points, and polynomials.
//!
//! Everything randomized in this crate draws from a ChaCha stream cipher
//! seeded explicitly, so that every check is reproducible from its seed.

use crate::ring::{rat, Bidegree, Monomial, PolyRing, Polynomial};
use num::rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The deterministic RNG used throughout.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A derived stream for trial `index` of a run seeded with `seed`.
/// Distinct trials get independent streams; the derivation is fixed so that
/// reports are reproducible.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    rng_from_seed(seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Shape of a random polynomial.
pub struct PolyProfile {
    pub max_terms: usize,
    pub max_exp: u32,
    pub coeff_bound: i64,
}

/// A random sparse polynomial with integer coefficients in
/// `[-coeff_bound, coeff_bound]`.  May be zero.
pub fn random_polynomial<R: Rng>(ring: &PolyRing, rng: &mut R, profile: &PolyProfile) -> Polynomial {
    let n_terms = rng.gen_range(0..=profile.max_terms);
    let mut terms = Vec::with_capacity(n_terms);
    for _ in 0..n_terms {
        let exp: Vec<u32> =
            (0..ring.num_vars()).map(|_| rng.gen_range(0..=profile.max_exp)).collect();
        let c = rng.gen_range(-profile.coeff_bound..=profile.coeff_bound);
        terms.push((Monomial(exp), rat(c)));
    }
    Polynomial::from_terms(ring.clone(), terms)
}

/// A random nonzero integer in `[-bound, bound]`.
pub fn random_nonzero_int<R: Rng>(rng: &mut R, bound: i64) -> i64 {
    loop {
        let c = rng.gen_range(-bound..=bound);
        if c != 0 {
            return c;
        }
    }
}

/// A random rational point of the ring: one integer value per variable,
/// drawn from `[-bound, bound]`.
pub fn random_point<R: Rng>(ring: &PolyRing, rng: &mut R, bound: i64) -> Vec<BigRational> {
    (0..ring.num_vars()).map(|_| rat(rng.gen_range(-bound..=bound))).collect()
}

/// For each variable of `source`, a random linear form in the variables of
/// `target` with nonzero integer coefficients in `[-bound, bound]`.
pub fn random_linear_forms<R: Rng>(
    source: &PolyRing,
    target: &PolyRing,
    rng: &mut R,
    bound: i64,
) -> Vec<Polynomial> {
    (0..source.num_vars())
        .map(|_| {
            let mut acc = target.zero();
            for j in 0..target.num_vars() {
                let c = random_nonzero_int(rng, bound);
                acc = &acc + &target.var_by_index(j).mul_int(c);
            }
            acc
        })
        .collect()
}

/// A random bihomogeneous polynomial of the given bidegree (zero if the
/// graded piece is empty).  Coefficients are integers in `[-bound, bound]`.
pub fn random_bihomogeneous<R: Rng>(
    ring: &PolyRing,
    rng: &mut R,
    degree: Bidegree,
    bound: i64,
) -> Polynomial {
    let monos = ring.monomials_of_bidegree(degree);
    let terms = monos
        .into_iter()
        .map(|m| (m, rat(rng.gen_range(-bound..=bound))))
        .collect();
    Polynomial::from_terms(ring.clone(), terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::CoefficientDomain;

    #[test]
    fn same_seed_same_stream() {
        let ring = PolyRing::new(
            &[("x", Bidegree(1, 0)), ("y", Bidegree(0, 1))],
            CoefficientDomain::Integers,
        );
        let profile = PolyProfile { max_terms: 6, max_exp: 4, coeff_bound: 100 };
        let mut a = rng_from_seed(7);
        let mut b = rng_from_seed(7);
        for _ in 0..20 {
            assert_eq!(
                random_polynomial(&ring, &mut a, &profile),
                random_polynomial(&ring, &mut b, &profile)
            );
        }
        let mut c = rng_from_seed(8);
        let differs = (0..20).any(|_| {
            random_polynomial(&ring, &mut a, &profile)
                != random_polynomial(&ring, &mut c, &profile)
        });
        assert!(differs, "different seeds should give different streams");
    }

    #[test]
    fn trial_streams_are_independent_and_reproducible() {
        let mut t0 = trial_rng(42, 0);
        let mut t1 = trial_rng(42, 1);
        let a: u64 = t0.gen();
        let b: u64 = t1.gen();
        assert_ne!(a, b);
        let mut again = trial_rng(42, 0);
        assert_eq!(a, again.gen::<u64>());
    }

    #[test]
    fn bihomogeneous_samples_live_in_one_graded_piece() {
        let ring = PolyRing::new(
            &[("x", Bidegree(1, 0)), ("y", Bidegree(1, 0)), ("p", Bidegree(0, 1))],
            CoefficientDomain::Integers,
        );
        let mut rng = rng_from_seed(3);
        for _ in 0..50 {
            let p = random_bihomogeneous(&ring, &mut rng, Bidegree(2, 1), 9);
            assert!(p.has_bidegree(Bidegree(2, 1)));
        }
    }
}
