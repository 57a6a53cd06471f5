//! Highest weights of the summands `W_λ`, Weyl vectors and odd reflections.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::borel::{BorelDescriptor, DeltaEpsSeq, WeightVector};
use crate::error::{CapelliError, Result};
use crate::partitions::HookPartition;
use crate::rational::{frac, int, Rational};

/// `λ̲₀ = −Σ 2λ_i ε_i − Σ μ_j (δ_{2j−1} + δ_{2j})` with `μ_j = ⟨λ′_j − m⟩`,
/// the `𝔟^op`-highest weight of `W_λ ⊂ 𝒫(S²(C^{m|2n}))`.
pub fn hw0_glm2n(lambda: &HookPartition, m: usize, n: usize) -> WeightVector {
    let mut w = WeightVector::zero(m, 2 * n);
    for i in 1..=m {
        w.eps[i - 1] = int(-2 * lambda.part(i) as i64);
    }
    for j in 1..=n {
        let mu = int(-(lambda.conjugate_part(j).saturating_sub(m) as i64));
        w.delta[2 * j - 2] = mu.clone();
        w.delta[2 * j - 1] = mu;
    }
    w
}

/// `λ̲₀ = Σ λ_i ε_i + Σ ⟨λ′_j − m⟩ δ_j`, the standard highest weight of `V_λ`.
pub fn hw0_gl(lambda: &HookPartition, m: usize, n: usize) -> WeightVector {
    let mut w = WeightVector::zero(m, n);
    for i in 1..=m {
        w.eps[i - 1] = int(lambda.part(i) as i64);
    }
    for j in 1..=n {
        w.delta[j - 1] = int(lambda.conjugate_part(j).saturating_sub(m) as i64);
    }
    w
}

/// A weight of `𝔥_{m|n} ⊕ 𝔥_{m|n}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagWeight {
    pub left: WeightVector,
    pub right: WeightVector,
}

impl DiagWeight {
    pub fn coords(&self) -> Vec<Rational> {
        let mut v = self.left.coords();
        v.extend(self.right.coords());
        v
    }
}

/// `(−λ̲₀, λ̲₀)`, the `𝔟^op ⊕ 𝔟`-highest weight of `V_λ* ⊗ V_λ`.
pub fn hw0_diag(lambda: &HookPartition, m: usize, n: usize) -> DiagWeight {
    let w = hw0_gl(lambda, m, n);
    DiagWeight {
        left: -&w,
        right: w,
    }
}

/// Checks that `α = ±(ε_i − δ_k)`.
pub fn check_odd_isotropic(alpha: &WeightVector) -> Result<(usize, usize)> {
    let nz_e: Vec<usize> = (0..alpha.m()).filter(|&i| !alpha.eps[i].is_zero()).collect();
    let nz_d: Vec<usize> = (0..alpha.num_delta())
        .filter(|&k| !alpha.delta[k].is_zero())
        .collect();
    if nz_e.len() != 1 || nz_d.len() != 1 {
        return Err(CapelliError::NotIsotropic);
    }
    let (a, d) = (&alpha.eps[nz_e[0]], &alpha.delta[nz_d[0]]);
    let one = Rational::one();
    if !((a == &one && d == &-one.clone()) || (a == &-one.clone() && d == &one)) {
        return Err(CapelliError::NotIsotropic);
    }
    debug_assert!(alpha.form(alpha).is_zero());
    Ok((nz_e[0] + 1, nz_d[0] + 1))
}

/// `w − α` if `(w, α) ≠ 0`, otherwise `w`.
pub fn odd_reflection_step(w: &WeightVector, alpha: &WeightVector) -> Result<WeightVector> {
    check_odd_isotropic(alpha)?;
    if w.form(alpha).is_zero() {
        Ok(w.clone())
    } else {
        Ok(w - alpha)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericityReport {
    pub is_generic: bool,
    /// Least `I` with `ℓ_I > 2λ_I`, when one exists.
    pub index_i: Option<usize>,
    /// `min(ℓ_i, 2λ_i)` for `i = 1..m`.
    pub ell_cut: Vec<usize>,
}

pub fn genericity(lambda: &HookPartition, b: &BorelDescriptor) -> GenericityReport {
    let m = b.m();
    let ell_cut: Vec<usize> = (1..=m)
        .map(|i| b.ell_at(i).min(2 * lambda.part(i)))
        .collect();
    let index_i = (1..=m).find(|&i| b.ell_at(i) > 2 * lambda.part(i));
    let is_generic = m == 0 || 2 * lambda.part(m) >= b.ell_at(m);
    debug_assert_eq!(is_generic, index_i.is_none());
    GenericityReport {
        is_generic,
        index_i,
        ell_cut,
    }
}

/// `r(λ,𝔟) = Σ_i (δ_1 + … + δ_{ℓcut_i} − ℓcut_i ε_i)`.
pub fn r_lambda_b(lambda: &HookPartition, b: &BorelDescriptor) -> WeightVector {
    let mut w = WeightVector::zero(b.m(), 2 * b.n());
    for (i, &cut) in genericity(lambda, b).ell_cut.iter().enumerate() {
        w.eps[i] -= int(cut as i64);
        for k in 0..cut {
            w.delta[k] += Rational::one();
        }
    }
    w
}

/// `λ̲_𝔟 = λ̲₀ − r(λ,𝔟)`.
pub fn hw_b(lambda: &HookPartition, b: &BorelDescriptor) -> WeightVector {
    &hw0_glm2n(lambda, b.m(), b.n()) - &r_lambda_b(lambda, b)
}

/// `λ̲_𝔟` obtained by folding odd reflections over `𝒢_𝔟` starting at `λ̲₀`.
pub fn hw_b_by_walk(lambda: &HookPartition, b: &BorelDescriptor) -> WeightVector {
    b.generic_roots()
        .iter()
        .fold(hw0_glm2n(lambda, b.m(), b.n()), |w, a| {
            odd_reflection_step(&w, a).expect("generic roots are odd isotropic")
        })
}

/// The Weyl vector `ρ = ½Σ_{even α>0} α − ½Σ_{odd α>0} α` of a δε sequence,
/// where `s − t` is positive when `s` precedes `t`.
pub fn weyl_vector(seq: &DeltaEpsSeq) -> WeightVector {
    let syms = seq.symbols();
    let mut w = WeightVector::zero(seq.m(), seq.num_delta());
    let h = frac(1, 2);
    for (p, &s) in syms.iter().enumerate() {
        let mut c = Rational::zero();
        for (q, &t) in syms.iter().enumerate() {
            if q == p {
                continue;
            }
            let side = if q > p { h.clone() } else { -h.clone() };
            if s.is_odd_with(t) {
                c -= side;
            } else {
                c += side;
            }
        }
        *w.coeff_mut(s) = c;
    }
    w
}

/// `ρ₀` for `𝔟^op` of `gl(m|2n)`.
pub fn rho0_glm2n(m: usize, n: usize) -> WeightVector {
    weyl_vector(&DeltaEpsSeq::opposite_standard(m, 2 * n))
}

/// `ρ_𝔟 = ρ₀ + r_𝔟`.
pub fn rho_b(b: &BorelDescriptor) -> WeightVector {
    &rho0_glm2n(b.m(), b.n()) + &b.r_b()
}

/// `ρ₀ = Σ (m−n+1−2i)/2 ε_i + Σ (m+n+1−2j)/2 δ_j` for the standard Borel of
/// `gl(m|n)`.
pub fn rho_standard_gl(m: usize, n: usize) -> WeightVector {
    let (mi, ni) = (m as i64, n as i64);
    WeightVector::new(
        (1..=mi).map(|i| frac(mi - ni + 1 - 2 * i, 2)).collect(),
        (1..=ni).map(|j| frac(mi + ni + 1 - 2 * j, 2)).collect(),
    )
}

/// Result of moving a weight along a chain of odd reflections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Walk {
    pub end: DeltaEpsSeq,
    pub weight: WeightVector,
    /// The simple roots crossed, in order.
    pub roots: Vec<WeightVector>,
}

/// Bubbles `start` into `target` by adjacent swaps, applying an odd
/// reflection step for each swap. Only mixed-parity swaps are allowed, so the
/// targets must share the relative order of each index family with `start`.
pub fn walk(start: &DeltaEpsSeq, w: &WeightVector, target: &DeltaEpsSeq) -> Result<Walk> {
    let mut cur = start.symbols().to_vec();
    let goal = target.symbols();
    if cur.len() != goal.len() {
        return Err(CapelliError::DimensionMismatch {
            expected: cur.len(),
            actual: goal.len(),
        });
    }
    let (m, nd) = (start.m(), start.num_delta());
    let mut weight = w.clone();
    let mut roots = Vec::new();
    for p in 0..goal.len() {
        let q = cur[p..]
            .iter()
            .position(|s| *s == goal[p])
            .map(|off| p + off)
            .ok_or_else(|| CapelliError::InvalidBorel(format!("{target} not a reordering")))?;
        for t in (p..q).rev() {
            let (left, right) = (cur[t], cur[t + 1]);
            if !left.is_odd_with(right) {
                return Err(CapelliError::InvalidBorel(format!(
                    "{target} is not reachable from {start} by odd reflections"
                )));
            }
            let alpha = &WeightVector::unit(m, nd, left) - &WeightVector::unit(m, nd, right);
            weight = odd_reflection_step(&weight, &alpha)?;
            roots.push(alpha);
            cur.swap(t, t + 1);
        }
    }
    Ok(Walk {
        end: DeltaEpsSeq::new(m, nd, cur)?,
        weight,
        roots,
    })
}

/// Relabels a weight of `core` to the Borel `seq` with the same parity
/// pattern: the symbol at each position of `core` is sent to the symbol at
/// the same position of `seq`.
pub fn transport(core: &DeltaEpsSeq, w: &WeightVector, seq: &DeltaEpsSeq) -> WeightVector {
    let mut out = WeightVector::zero(w.m(), w.num_delta());
    for (&a, &b) in core.symbols().iter().zip(seq.symbols()) {
        *out.coeff_mut(b) = w.coeff(a).clone();
    }
    out
}

/// Highest weight of `V_λ` for an arbitrary Borel of `gl(m|n)`: odd
/// reflections from the standard Borel to the increasing core, then the
/// permutation onto `seq`.
pub fn hw_v_lambda(lambda: &HookPartition, seq: &DeltaEpsSeq) -> Result<WeightVector> {
    let (m, n) = (seq.m(), seq.num_delta());
    let core = seq.increasing_core();
    let wk = walk(&DeltaEpsSeq::standard(m, n), &hw0_gl(lambda, m, n), &core)?;
    Ok(transport(&core, &wk.weight, seq))
}

/// Highest weight of `V_λ*` for an arbitrary Borel of `gl(m|n)`: odd
/// reflections from `𝔟^op` (weight `−λ̲₀`) to the decreasing core, then the
/// permutation onto `seq`.
pub fn hw_v_lambda_dual(lambda: &HookPartition, seq: &DeltaEpsSeq) -> Result<WeightVector> {
    let (m, n) = (seq.m(), seq.num_delta());
    let core = seq.decreasing_core();
    let start = -&hw0_gl(lambda, m, n);
    let wk = walk(&DeltaEpsSeq::opposite_standard(m, n), &start, &core)?;
    Ok(transport(&core, &wk.weight, seq))
}

/// `(λ̲_{𝔟₁}, λ̲_{𝔟₂})` for the Borel `𝔟₁ ⊕ 𝔟₂` of `gl(m|n) ⊕ gl(m|n)`.
pub fn hw_diag_pair(
    lambda: &HookPartition,
    b1: &DeltaEpsSeq,
    b2: &DeltaEpsSeq,
) -> Result<DiagWeight> {
    Ok(DiagWeight {
        left: hw_v_lambda_dual(lambda, b1)?,
        right: hw_v_lambda(lambda, b2)?,
    })
}
