//! Seeded generators for random polynomial tensor fields.
//!
//! Coefficients are drawn from `{-2, .., 2}` and monomials have total degree
//! at most `max_deg`. A master seed and a trial number determine the stream.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exterior::{
    increasing_tuples, Alternating, DifferentialForm, EndomorphismField, MultiVectorField, Variance,
};
use crate::gencplx::GeneralizedSection;
use crate::ratpoly::{int, Polynomial};

/// Generator for trial `trial` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn monomial_exponents<R: Rng>(rng: &mut R, n: usize, max_deg: u32) -> Vec<u32> {
    let deg = rng.gen_range(0..=max_deg);
    let mut exps = vec![0u32; n];
    for _ in 0..deg {
        exps[rng.gen_range(0..n)] += 1;
    }
    exps
}

/// Sparse polynomial with up to `3` terms.
pub fn polynomial<R: Rng>(rng: &mut R, n: usize, max_deg: u32) -> Polynomial {
    let mut p = Polynomial::zero(n);
    for _ in 0..rng.gen_range(1..=3) {
        let c = rng.gen_range(-2i64..=2);
        if c == 0 {
            continue;
        }
        p += &Polynomial::monomial(int(c), monomial_exponents(rng, n, max_deg));
    }
    p
}

/// Polynomial that is nonzero with probability `density`.
fn sparse_polynomial<R: Rng>(rng: &mut R, n: usize, max_deg: u32, density: f64) -> Polynomial {
    if rng.gen_bool(density) {
        polynomial(rng, n, max_deg)
    } else {
        Polynomial::zero(n)
    }
}

pub fn alternating<V: Variance, R: Rng>(
    rng: &mut R,
    n: usize,
    degree: usize,
    max_deg: u32,
) -> Alternating<V> {
    let comps = increasing_tuples(n, degree)
        .into_iter()
        .map(|idx| (idx, sparse_polynomial(rng, n, max_deg, 0.7)))
        .collect::<Vec<_>>();
    Alternating::from_components(n, degree, comps).expect("well-formed components")
}

pub fn form<R: Rng>(rng: &mut R, n: usize, degree: usize, max_deg: u32) -> DifferentialForm {
    alternating(rng, n, degree, max_deg)
}

pub fn multivector<R: Rng>(rng: &mut R, n: usize, degree: usize, max_deg: u32) -> MultiVectorField {
    alternating(rng, n, degree, max_deg)
}

pub fn endomorphism<R: Rng>(rng: &mut R, n: usize, max_deg: u32) -> EndomorphismField {
    let rows = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| sparse_polynomial(rng, n, max_deg, 0.5))
                .collect()
        })
        .collect();
    EndomorphismField::from_matrix(rows).expect("square matrix")
}

pub fn section<R: Rng>(rng: &mut R, n: usize, max_deg: u32) -> GeneralizedSection {
    GeneralizedSection::new(multivector(rng, n, 1, max_deg), form(rng, n, 1, max_deg))
        .expect("degree-1 parts")
}

/// A random Poisson bivector. On `R^2` every bivector; on `R^3` the
/// Jacobian structure `{x_i, x_j} = ε_{ijk} ∂_k C`; otherwise a sum of
/// planar structures `f_k(x_{2k}, x_{2k+1}) ∂_{2k}∧∂_{2k+1}`.
pub fn poisson_bivector<R: Rng>(rng: &mut R, n: usize, max_deg: u32) -> MultiVectorField {
    match n {
        0 | 1 => MultiVectorField::zero(n, 2),
        2 => multivector(rng, n, 2, max_deg),
        3 => {
            let c = polynomial(rng, n, max_deg + 1);
            let comps = vec![
                (vec![0, 1], c.diff(2)),
                (vec![1, 2], c.diff(0)),
                (vec![2, 0], c.diff(1)),
            ];
            MultiVectorField::from_components(n, 2, comps).expect("well-formed components")
        }
        _ => {
            let mut pi = MultiVectorField::zero(n, 2);
            for k in 0..n / 2 {
                let (a, b) = (2 * k, 2 * k + 1);
                let mut f = Polynomial::zero(n);
                for _ in 0..rng.gen_range(1..=2) {
                    let c = rng.gen_range(-2i64..=2);
                    let mut exps = vec![0u32; n];
                    for _ in 0..rng.gen_range(0..=max_deg) {
                        exps[if rng.gen_bool(0.5) { a } else { b }] += 1;
                    }
                    f += &Polynomial::monomial(int(c), exps);
                }
                pi = &pi + &MultiVectorField::term(f, &[a, b]);
            }
            pi
        }
    }
}
