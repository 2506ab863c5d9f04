//! Seeded random instances for randomized suites.
//!
//! Every generator draws from a caller-supplied [`ChaCha8Rng`], so a seed
//! fixes the whole run.

use rand::{Rng, SeedableRng};
pub use rand_chacha::ChaCha8Rng;

use crate::deformation::AltMap;
use crate::graded::{GradedVectorSpace, Sgla};
use crate::homotopy::sym::word_degree;
use crate::homotopy::{GradedCochain, GradedHookedCochain, GradedHookedMap, GradedSymMap, HomotopyOperator, PreLieInfinity};
use crate::lie::{LieAlgebra, LinearOperator};
use crate::linalg::{zero_vec, Matrix, Vector};
use crate::prelie::PreLieProduct;
use crate::scalar::Rational;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Mostly small integers, sometimes halves, zero about a third of the time.
pub fn scalar(rng: &mut ChaCha8Rng) -> Rational {
    if rng.random_bool(0.35) {
        return Rational::zero();
    }
    let n = rng.random_range(-3i64..=3);
    if rng.random_bool(0.2) {
        Rational::new(n, 2)
    } else {
        Rational::from_int(n)
    }
}

pub fn vector(rng: &mut ChaCha8Rng, n: usize) -> Vector {
    (0..n).map(|_| scalar(rng)).collect()
}

pub fn matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    let mut m = Matrix::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            m.set(r, c, scalar(rng));
        }
    }
    m
}

/// `T: V → g` with `dim V = dim_v`, `dim g = dim_g`.
pub fn operator(rng: &mut ChaCha8Rng, dim_v: usize, dim_g: usize) -> LinearOperator {
    LinearOperator::module_to_algebra(matrix(rng, dim_g, dim_v))
}

pub fn alt_map(rng: &mut ChaCha8Rng, arity: usize, dim_v: usize, dim_g: usize) -> AltMap {
    AltMap::from_fn(arity, dim_v, dim_g, |_| vector(rng, dim_g)).expect("shapes agree")
}

pub fn prelie_product(rng: &mut ChaCha8Rng, names: Vec<String>) -> PreLieProduct {
    let n = names.len();
    let mu = (0..n * n * n).map(|_| scalar(rng)).collect();
    PreLieProduct::new(names, mu).expect("cube of the dimension")
}

/// Copy of `lie` with one structure constant changed (and its antisymmetric
/// partner, so only the Jacobi identity can break).
pub fn perturb_lie(rng: &mut ChaCha8Rng, lie: &LieAlgebra) -> LieAlgebra {
    let n = lie.dim();
    let mut out = lie.clone();
    let (i, j, k) = loop {
        let (i, j) = (rng.random_range(0..n), rng.random_range(0..n));
        if i != j {
            break (i, j, rng.random_range(0..n));
        }
    };
    let delta = Rational::from_int(rng.random_range(1i64..=2));
    let v = lie.constant(i, j, k).clone() + delta;
    out.set_constant(j, i, k, -v.clone());
    out.set_constant(i, j, k, v);
    out
}

/// A graded space with `dim` generators, degrees drawn from `{-1, 0, 1}`.
pub fn graded_space(rng: &mut ChaCha8Rng, dim: usize, prefix: &str) -> GradedVectorSpace {
    let degrees = (0..dim).map(|_| rng.random_range(-1i32..=1)).collect();
    GradedVectorSpace::new((1..=dim).map(|i| format!("{prefix}{i}")).collect(), degrees).expect("lengths agree")
}

/// A homogeneous weight-`weight` map of the given degree; every entry whose
/// degree is compatible is drawn at random, all others are zero.
pub fn sym_map(
    rng: &mut ChaCha8Rng,
    weight: usize,
    degree: i32,
    domain: &GradedVectorSpace,
    codomain: &GradedVectorSpace,
) -> GradedSymMap {
    GradedSymMap::from_fn(weight, degree, domain, codomain, |word| {
        let target = word_degree(word, domain.degrees()) + degree;
        let mut v = zero_vec(codomain.dim());
        for (k, x) in v.iter_mut().enumerate() {
            if codomain.degree(k) == target {
                *x = scalar(rng);
            }
        }
        v
    })
    .expect("homogeneous by construction")
}

pub fn cochain(
    rng: &mut ChaCha8Rng,
    degree: i32,
    truncation: usize,
    domain: &GradedVectorSpace,
    codomain: &GradedVectorSpace,
) -> GradedCochain {
    let comps = (0..=truncation)
        .map(|w| sym_map(rng, w, degree, domain, codomain))
        .collect();
    GradedCochain::new(comps).expect("consistent components")
}

pub fn homotopy_operator(
    rng: &mut ChaCha8Rng,
    truncation: usize,
    domain: &GradedVectorSpace,
    codomain: &GradedVectorSpace,
) -> HomotopyOperator {
    HomotopyOperator::new(cochain(rng, 0, truncation, domain, codomain)).expect("degree 0")
}

/// Homogeneous weight-`weight` map `S^weight(V) ⊗ V → V` of the given degree.
pub fn hooked_map(rng: &mut ChaCha8Rng, weight: usize, degree: i32, space: &GradedVectorSpace) -> GradedHookedMap {
    GradedHookedMap::from_fn(weight, degree, space, |word, last| {
        let target = word_degree(word, space.degrees()) + space.degree(last) + degree;
        let mut v = zero_vec(space.dim());
        for (k, x) in v.iter_mut().enumerate() {
            if space.degree(k) == target {
                *x = scalar(rng);
            }
        }
        v
    })
    .expect("homogeneous by construction")
}

pub fn hooked_cochain(rng: &mut ChaCha8Rng, degree: i32, truncation: usize, space: &GradedVectorSpace) -> GradedHookedCochain {
    let comps = (0..=truncation).map(|w| hooked_map(rng, w, degree, space)).collect();
    GradedHookedCochain::new(comps).expect("consistent components")
}

/// Random degree-1 operations `m_1..m_k`; almost never a pre-Lie∞ algebra.
pub fn prelie_infinity(rng: &mut ChaCha8Rng, k: usize, space: &GradedVectorSpace) -> PreLieInfinity {
    PreLieInfinity::new(hooked_cochain(rng, 1, k - 1, space)).expect("degree 1")
}

/// Copy of `g` with one structure constant changed together with its
/// graded-symmetric partner, so homogeneity and symmetry survive.
pub fn perturb_sgla(rng: &mut ChaCha8Rng, g: &Sgla) -> Option<Sgla> {
    let n = g.dim();
    let degs = g.space().degrees();
    let mut slots = Vec::new();
    for i in 0..n {
        for j in i..n {
            for k in 0..n {
                let sym = (degs[i] * degs[j]).rem_euclid(2) == 0;
                if degs[k] == degs[i] + degs[j] + 1 && (i != j || sym) {
                    slots.push((i, j, k));
                }
            }
        }
    }
    if slots.is_empty() {
        return None;
    }
    let (i, j, k) = slots[rng.random_range(0..slots.len())];
    let v = g.constant(i, j, k).clone() + Rational::from_int(rng.random_range(1i64..=2));
    let sign = if (degs[i] * degs[j]).rem_euclid(2) == 0 { 1 } else { -1 };
    let mut out = g.clone();
    out.set_constant(j, i, k, v.clone().signed(sign));
    out.set_constant(i, j, k, v);
    Some(out)
}
