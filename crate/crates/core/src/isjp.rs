//! Interpolation super Jack polynomials `P_{λ,θ}` and Capelli eigenvalues.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::borel::BorelDescriptor;
use crate::error::{CapelliError, Result};
use crate::linalg::{solve_linear, RationalMatrix, Solution};
use crate::partitions::{enumerate_hooks, frobenius_coords, HookPartition};
use crate::rational::{factorial, int, one, Rational};
use crate::sympoly::{lambda_basis, LambdaBasis, SparsePolynomial};
use crate::tau::{canonical_map, m0_and_x0, tau0_diag, MapChoice};
use crate::weights::{hw0_diag, hw0_glm2n, hw_b};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InterpolationPolynomial {
    pub lambda: HookPartition,
    #[serde(with = "crate::rational::serde_q")]
    pub theta: Rational,
    #[serde(skip)]
    pub poly: SparsePolynomial,
}

impl InterpolationPolynomial {
    pub fn m(&self) -> usize {
        self.poly.num_x()
    }

    pub fn n(&self) -> usize {
        self.poly.num_y()
    }

    pub fn degree(&self) -> usize {
        self.lambda.size()
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        self.poly.evaluate(point)
    }
}

type PolyKey = (usize, usize, Rational, String);
type BasisKey = (usize, usize, Rational, usize);

fn poly_cache() -> &'static Mutex<HashMap<PolyKey, Arc<InterpolationPolynomial>>> {
    static CACHE: OnceLock<Mutex<HashMap<PolyKey, Arc<InterpolationPolynomial>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn basis_cache() -> &'static Mutex<HashMap<BasisKey, Arc<LambdaBasis>>> {
    static CACHE: OnceLock<Mutex<HashMap<BasisKey, Arc<LambdaBasis>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `lambda_basis` memoized per `(m, n, θ, d)`.
pub fn cached_basis(m: usize, n: usize, theta: &Rational, d: usize) -> Result<Arc<LambdaBasis>> {
    let key = (m, n, theta.clone(), d);
    if let Some(b) = basis_cache().lock().expect("cache lock").get(&key) {
        return Ok(b.clone());
    }
    let b = Arc::new(lambda_basis(m, n, theta, d)?);
    basis_cache()
        .lock()
        .expect("cache lock")
        .entry(key)
        .or_insert(b.clone());
    Ok(b)
}

/// Memoized [`build_isjp_uncached`].
pub fn build_isjp(
    lambda: &HookPartition,
    m: usize,
    n: usize,
    theta: &Rational,
) -> Result<Arc<InterpolationPolynomial>> {
    let key = (m, n, theta.clone(), lambda.key());
    if let Some(p) = poly_cache().lock().expect("cache lock").get(&key) {
        return Ok(p.clone());
    }
    let p = Arc::new(build_isjp_uncached(lambda, m, n, theta)?);
    poly_cache()
        .lock()
        .expect("cache lock")
        .entry(key)
        .or_insert(p.clone());
    Ok(p)
}

/// Solves for the element of `Λ_{m,n,θ}` of degree `≤ |λ|` vanishing at the
/// nodes of every other `μ` with `|μ| ≤ |λ|` and equal to `|λ|!` at the node
/// of `λ`.
pub fn build_isjp_uncached(
    lambda: &HookPartition,
    m: usize,
    n: usize,
    theta: &Rational,
) -> Result<InterpolationPolynomial> {
    build_with_normalization(lambda, m, n, theta, &factorial(lambda.size()))
}

/// As [`build_isjp_uncached`] with an arbitrary value at the node of `λ`.
pub fn build_with_normalization(
    lambda: &HookPartition,
    m: usize,
    n: usize,
    theta: &Rational,
    value: &Rational,
) -> Result<InterpolationPolynomial> {
    let d = lambda.size();
    let lam = lambda.with_context(m, n)?;
    let basis = cached_basis(m, n, theta, d)?;
    let nodes = enumerate_hooks(m, n, d);
    let mut a = RationalMatrix::zeros(nodes.len(), basis.dim());
    let mut rhs = vec![int(0); nodes.len()];
    for (r, mu) in nodes.iter().enumerate() {
        let pt = frobenius_coords(mu, m, n, theta)?.coords();
        for (c, f) in basis.elements.iter().enumerate() {
            a[(r, c)] = f.evaluate(&pt)?;
        }
        if *mu == lam {
            rhs[r] = value.clone();
        }
    }
    let coeffs = match solve_linear(&a, &rhs)? {
        Solution::Unique(x) => x,
        _ => return Err(CapelliError::InterpolationDegenerate),
    };
    let poly = coeffs
        .iter()
        .zip(&basis.elements)
        .fold(SparsePolynomial::zero(m, n), |acc, (c, f)| &acc + &f.scale(c));
    Ok(InterpolationPolynomial {
        lambda: lam,
        theta: theta.clone(),
        poly,
    })
}

/// `P_{μ,1}(τ₀(−λ̲₀, λ̲₀))`.
pub fn eigenvalue_diag(
    mu: &HookPartition,
    lambda: &HookPartition,
    m: usize,
    n: usize,
) -> Result<Rational> {
    let p = build_isjp(mu, m, n, &one())?;
    let arg = tau0_diag(m, n).apply_diag(&hw0_diag(lambda, m, n))?;
    p.evaluate(&arg)
}

/// `P_{μ,½}` evaluated at `τ₀(λ̲₀)`, or at the image of `λ̲_𝔟` under the
/// selected map for `𝔟`.
pub fn eigenvalue_glm2n(
    mu: &HookPartition,
    lambda: &HookPartition,
    m: usize,
    n: usize,
    b: &BorelDescriptor,
    choice: MapChoice,
) -> Result<Rational> {
    let theta = crate::rational::half();
    let p = build_isjp(mu, m, n, &theta)?;
    let arg = match choice {
        MapChoice::Tau0 => m0_and_x0(m, n).apply_weight(&hw0_glm2n(lambda, m, n))?,
        other => canonical_map(b, other)?.apply_weight(&hw_b(lambda, b))?,
    };
    p.evaluate(&arg)
}
