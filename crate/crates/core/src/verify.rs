//! Exhaustive desk-scale sweeps of the eigenvalue identities and
//! reconstruction of the `gl(2|2)` worked example.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::borel::{BorelClass, BorelDescriptor, DeltaEpsSeq, WeightVector};
use crate::equivalence::{closure_member, equivalent_up_to_degree, orbit, OrbitResult, Point, DEFAULT_BUDGET};
use crate::error::{CapelliError, Result};
use crate::isjp::{build_isjp, InterpolationPolynomial};
use crate::linalg::{solve_linear, RationalMatrix, Solution};
use crate::partitions::{enumerate_hooks, HookPartition};
use crate::rational::{fmt_rational, fmt_vec, half, int, one, Rational};
use crate::tau::{
    canonical_map, canonical_member, m0, m0_and_x0, tau0_diag, tau_diag, tau_rel_even_unchecked,
    AffineMap, MapChoice, MatrixFamilySpec, Side,
};
use crate::weights::{genericity, hw0_diag, hw0_glm2n, hw_b, hw_b_by_walk, hw_diag_pair, rho_b};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Pair {
    Diag,
    Glm2n,
}

impl std::str::FromStr for Pair {
    type Err = CapelliError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "diag" => Ok(Pair::Diag),
            "glm2n" => Ok(Pair::Glm2n),
            _ => Err(CapelliError::Parse(format!("unknown pair `{s}`"))),
        }
    }
}

/// Which Borels a sweep visits. List entries are `ℓ` vectors (`1,1`) or
/// δε sequences (`d2,e2,e1,d1`); for the diagonal pair they are two
/// sequences joined by `:`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BorelFilter {
    All,
    VeryEven,
    RelEven,
    List(Vec<String>),
}

impl std::str::FromStr for BorelFilter {
    type Err = CapelliError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(BorelFilter::All),
            "very_even" | "veryeven" => Ok(BorelFilter::VeryEven),
            "rel_even" | "releven" => Ok(BorelFilter::RelEven),
            _ => Ok(BorelFilter::List(
                s.split(';').map(|t| t.trim().to_string()).filter(|t| !t.is_empty()).collect(),
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub pair: Pair,
    pub m: usize,
    pub n: usize,
    pub lambda_max: usize,
    pub mu_max: usize,
    pub borels: BorelFilter,
    /// `None` checks every map applicable to each Borel.
    pub map: Option<MapChoice>,
    /// Build the selected map even when the Borel class forbids it.
    pub force_map: bool,
    pub equivalence_degree: usize,
}

impl SweepConfig {
    pub fn new(pair: Pair, m: usize, n: usize, lambda_max: usize, mu_max: usize) -> Self {
        SweepConfig {
            pair,
            m,
            n,
            lambda_max,
            mu_max,
            borels: BorelFilter::All,
            map: None,
            force_map: false,
            equivalence_degree: mu_max.max(crate::equivalence::DEFAULT_DEGREE),
        }
    }

    pub fn warnings(&self) -> Vec<String> {
        let mut w = Vec::new();
        if self.equivalence_degree < self.mu_max {
            w.push(format!(
                "equivalence degree {} is below mu_max {}",
                self.equivalence_degree, self.mu_max
            ));
        }
        w
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub check: String,
    pub lambda: String,
    pub mu: Option<String>,
    pub borel: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub cases: usize,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<u128>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn polys(m: usize, n: usize, max: usize, theta: &Rational) -> Result<Vec<Arc<InterpolationPolynomial>>> {
    enumerate_hooks(m, n, max)
        .par_iter()
        .map(|mu| build_isjp(mu, m, n, theta))
        .collect()
}

fn vec_str(v: &[Rational]) -> String {
    format!("({})", fmt_vec(v).join(", "))
}

#[derive(Default)]
struct Tally {
    cases: usize,
    failures: Vec<Failure>,
}

impl Tally {
    fn merge(parts: Vec<Tally>) -> Tally {
        parts.into_iter().fold(Tally::default(), |mut acc, t| {
            acc.cases += t.cases;
            acc.failures.extend(t.failures);
            acc
        })
    }
}

fn diag_pairs(cfg: &SweepConfig) -> Result<Vec<(DeltaEpsSeq, DeltaEpsSeq)>> {
    let (m, n) = (cfg.m, cfg.n);
    match &cfg.borels {
        BorelFilter::All => {
            let all = DeltaEpsSeq::enumerate_all(m, n);
            Ok(all
                .iter()
                .flat_map(|a| all.iter().map(move |b| (a.clone(), b.clone())))
                .collect())
        }
        BorelFilter::List(items) => items
            .iter()
            .map(|s| {
                let (a, b) = s
                    .split_once(':')
                    .ok_or_else(|| CapelliError::Parse(format!("expected `seq:seq`, got `{s}`")))?;
                Ok((DeltaEpsSeq::parse(a, m, n)?, DeltaEpsSeq::parse(b, m, n)?))
            })
            .collect(),
        other => Err(CapelliError::Parse(format!(
            "Borel filter {other:?} does not apply to the diagonal pair"
        ))),
    }
}

/// For every `λ`, `μ` and Borel pair `𝔟₁ ⊕ 𝔟₂`, compares
/// `P_{μ,1}∘τ_{𝔟,1}`, `P_{μ,1}∘τ_{𝔟,2}` and `P_{μ,1}∘τ₀` on the highest weights.
pub fn verify_diag(cfg: &SweepConfig) -> Result<SweepReport> {
    let start = Instant::now();
    let (m, n) = (cfg.m, cfg.n);
    let ps = polys(m, n, cfg.mu_max, &one())?;
    let pairs = diag_pairs(cfg)?;
    let lambdas = enumerate_hooks(m, n, cfg.lambda_max);
    let t0 = tau0_diag(m, n);
    let jobs: Vec<(&(DeltaEpsSeq, DeltaEpsSeq), &HookPartition)> =
        pairs.iter().flat_map(|p| lambdas.iter().map(move |l| (p, l))).collect();
    let parts: Vec<Tally> = jobs
        .par_iter()
        .map(|((b1, b2), lam)| -> Result<Tally> {
            let mut t = Tally::default();
            let w = hw_diag_pair(lam, b1, b2)?;
            let left = tau_diag(b1, b2, Side::Left)?.apply_diag(&w)?;
            let right = tau_diag(b1, b2, Side::Right)?.apply_diag(&w)?;
            let base = t0.apply_diag(&hw0_diag(lam, m, n))?;
            let borel = format!("{b1}⊕{b2}");
            for p in &ps {
                t.cases += 1;
                let (l, r, z) = (p.evaluate(&left)?, p.evaluate(&right)?, p.evaluate(&base)?);
                if l != z || r != z {
                    t.failures.push(Failure {
                        check: "diag_three_way".into(),
                        lambda: lam.to_string(),
                        mu: Some(p.lambda.to_string()),
                        borel: borel.clone(),
                        lhs: format!("{}, {}", fmt_rational(&l), fmt_rational(&r)),
                        rhs: fmt_rational(&z),
                    });
                }
            }
            Ok(t)
        })
        .collect::<Result<_>>()?;
    let tally = Tally::merge(parts);
    Ok(SweepReport {
        config: cfg.clone(),
        cases: tally.cases,
        failures: tally.failures,
        elapsed_ms: Some(start.elapsed().as_millis()),
    })
}

fn parse_borel(s: &str, m: usize, n: usize) -> Result<BorelDescriptor> {
    if s.chars().any(|c| matches!(c, 'd' | 'e' | 'δ' | 'ε')) {
        BorelDescriptor::parse_sequence(s, m, n)
    } else {
        BorelDescriptor::parse_ell(s, m, n)
    }
}

/// The decreasing Borels of `gl(m|2n)` selected by the filter.
pub fn select_borels(m: usize, n: usize, filter: &BorelFilter) -> Result<Vec<BorelDescriptor>> {
    let all = BorelDescriptor::enumerate(m, n);
    Ok(match filter {
        BorelFilter::All => all,
        BorelFilter::VeryEven => all.into_iter().filter(|b| b.is_very_even()).collect(),
        BorelFilter::RelEven => all.into_iter().filter(|b| b.is_relatively_even()).collect(),
        BorelFilter::List(items) => items
            .iter()
            .map(|s| parse_borel(s, m, n))
            .collect::<Result<_>>()?,
    })
}

/// The forced variant of a map: same construction, class guard skipped.
fn forced_map(b: &BorelDescriptor, choice: MapChoice) -> Result<AffineMap> {
    let (m, n) = (b.m(), b.n());
    match choice {
        MapChoice::RelEven => tau_rel_even_unchecked(b, &canonical_member(&MatrixFamilySpec::c_b(b))?),
        MapChoice::VeryEven => AffineMap::new(m0(m, n), m0(m, n).mul_vec(&rho_b(b).coords())?),
        other => canonical_map(b, other),
    }
}

fn map_name(c: MapChoice) -> &'static str {
    match c {
        MapChoice::Tau0 => "tau0",
        MapChoice::VeryEven => "very_even",
        MapChoice::RelEven => "rel_even",
        MapChoice::Full => "full",
    }
}

/// Maps checked for `b`: the full map always, plus the class-specific maps
/// (or only the selected one).
fn maps_for(b: &BorelDescriptor, cfg: &SweepConfig) -> Result<Vec<(MapChoice, AffineMap)>> {
    let mut out = vec![(MapChoice::Full, canonical_map(b, MapChoice::Full)?)];
    let wanted: Vec<MapChoice> = match cfg.map {
        None => {
            let class = b.classify().class;
            let mut v = Vec::new();
            if class != BorelClass::General {
                v.push(MapChoice::RelEven);
            }
            if class == BorelClass::VeryEven {
                v.push(MapChoice::VeryEven);
            }
            v
        }
        Some(MapChoice::Full) => Vec::new(),
        Some(MapChoice::Tau0) => {
            return Err(CapelliError::Parse("tau0 is the reference map, not a choice for 𝔟".into()))
        }
        Some(c) => vec![c],
    };
    for c in wanted {
        let map = if cfg.force_map { forced_map(b, c)? } else { canonical_map(b, c)? };
        out.push((c, map));
    }
    Ok(out)
}

/// A Borel with the maps checked on it and the generic-case construction.
type Prepared = (BorelDescriptor, Vec<(MapChoice, AffineMap)>, AffineMap);

/// For every selected decreasing `𝔟` and `λ`: (a) when `λ` is `𝔟`-generic,
/// the image of `λ̲_𝔟` under `M x + X_{𝔟_e}` (`M ∈ C_𝔟`) equals `τ₀(λ̲₀)`;
/// (b) and (c, d) `P_{μ,½}` agrees through each applicable map and `τ₀`.
pub fn verify_glm2n(cfg: &SweepConfig) -> Result<SweepReport> {
    let start = Instant::now();
    let (m, n) = (cfg.m, cfg.n);
    let ps = polys(m, n, cfg.mu_max, &half())?;
    let borels = select_borels(m, n, &cfg.borels)?;
    let lambdas = enumerate_hooks(m, n, cfg.lambda_max);
    let t0 = m0_and_x0(m, n);
    let prepared: Vec<Prepared> = borels
        .into_iter()
        .map(|b| {
            let maps = maps_for(&b, cfg)?;
            let generic = tau_rel_even_unchecked(&b, &canonical_member(&MatrixFamilySpec::c_b(&b))?)?;
            Ok((b, maps, generic))
        })
        .collect::<Result<_>>()?;
    let jobs: Vec<(usize, &HookPartition)> = (0..prepared.len())
        .flat_map(|i| lambdas.iter().map(move |l| (i, l)))
        .collect();
    let parts: Vec<Tally> = jobs
        .par_iter()
        .map(|&(bi, lam)| -> Result<Tally> {
            let (b, maps, generic_map) = &prepared[bi];
            let mut t = Tally::default();
            let lb = hw_b(lam, b);
            let base = t0.apply_weight(&hw0_glm2n(lam, m, n))?;
            let borel = b.to_string();
            if genericity(lam, b).is_generic {
                t.cases += 1;
                let img = generic_map.apply_weight(&lb)?;
                if img != base {
                    t.failures.push(Failure {
                        check: "generic_vector".into(),
                        lambda: lam.to_string(),
                        mu: None,
                        borel: borel.clone(),
                        lhs: vec_str(&img),
                        rhs: vec_str(&base),
                    });
                }
            }
            let base_vals: Vec<Rational> = ps.iter().map(|p| p.evaluate(&base)).collect::<Result<_>>()?;
            for (choice, map) in maps {
                let arg = map.apply_weight(&lb)?;
                for (p, z) in ps.iter().zip(&base_vals) {
                    t.cases += 1;
                    let v = p.evaluate(&arg)?;
                    if &v != z {
                        t.failures.push(Failure {
                            check: format!("eigenvalue_{}", map_name(*choice)),
                            lambda: lam.to_string(),
                            mu: Some(p.lambda.to_string()),
                            borel: borel.clone(),
                            lhs: fmt_rational(&v),
                            rhs: fmt_rational(z),
                        });
                    }
                }
            }
            Ok(t)
        })
        .collect::<Result<_>>()?;
    let tally = Tally::merge(parts);
    Ok(SweepReport {
        config: cfg.clone(),
        cases: tally.cases,
        failures: tally.failures,
        elapsed_ms: Some(start.elapsed().as_millis()),
    })
}

pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    match cfg.pair {
        Pair::Diag => verify_diag(cfg),
        Pair::Glm2n => verify_glm2n(cfg),
    }
}

/// The negative control: the `C_𝔟` construction forced onto `ℓ = (1,1)` of
/// `gl(2|2)`.
pub fn negative_control_config() -> SweepConfig {
    let mut cfg = SweepConfig::new(Pair::Glm2n, 2, 1, 5, 4);
    cfg.borels = BorelFilter::List(vec!["1,1".into()]);
    cfg.map = Some(MapChoice::RelEven);
    cfg.force_map = true;
    cfg
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub lambda: HookPartition,
    pub lambda_0: WeightVector,
    pub lambda_b: WeightVector,
    pub expected_0: WeightVector,
    pub expected_b: WeightVector,
    pub by_walk_agrees: bool,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub borel: BorelDescriptor,
    pub rows: Vec<TableRow>,
    pub all_match: bool,
}

/// Highest weights of `W_λ` for `ℓ = (1,1)` of `gl(2|2)` against the closed
/// forms `−(2r,2s,t,t)`, `−(2r−1,2s−1,t+2,t)`, `−(2r−1,0,1,0)` and `0`.
pub fn gl22_table(max: usize) -> Result<TableReport> {
    let b = BorelDescriptor::new(2, 1, vec![1, 1])?;
    let mut rows = Vec::new();
    let mut push = |parts: Vec<usize>, e0: WeightVector, eb: WeightVector| -> Result<()> {
        let lam = HookPartition::new(parts, 2, 1)?;
        let l0 = hw0_glm2n(&lam, 2, 1);
        let lb = hw_b(&lam, &b);
        let walked = hw_b_by_walk(&lam, &b);
        rows.push(TableRow {
            by_walk_agrees: walked == lb,
            matches: l0 == e0 && lb == eb && walked == lb,
            lambda: lam,
            lambda_0: l0,
            lambda_b: lb,
            expected_0: e0,
            expected_b: eb,
        });
        Ok(())
    };
    push(Vec::new(), WeightVector::zero(2, 2), WeightVector::zero(2, 2))?;
    for r in 1..=max as i64 {
        push(
            vec![r as usize],
            WeightVector::from_ints(&[-2 * r, 0], &[0, 0]),
            WeightVector::from_ints(&[-2 * r + 1, 0], &[-1, 0]),
        )?;
    }
    for r in 1..=max as i64 {
        for s in 1..=r {
            for t in 0..=max as i64 {
                let mut parts = vec![r as usize, s as usize];
                parts.extend(std::iter::repeat_n(1, t as usize));
                push(
                    parts,
                    WeightVector::from_ints(&[-2 * r, -2 * s], &[-t, -t]),
                    WeightVector::from_ints(&[-2 * r + 1, -2 * s + 1], &[-t - 2, -t]),
                )?;
            }
        }
    }
    let all_match = rows.iter().all(|r| r.matches);
    Ok(TableReport { borel: b, rows, all_match })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitRecord {
    pub r: usize,
    pub point: Point,
    pub orbit: OrbitResult,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct XCandidate {
    #[serde(with = "crate::rational::serde_qvec")]
    pub abc: Vec<Rational>,
    #[serde(with = "crate::rational::serde_qvec")]
    pub x: Vec<Rational>,
    /// Membership of `X′` in the closure attached to `τ₀(0) = X₀`.
    pub in_closure_of_x0: bool,
    /// `P_μ(X′) = P_μ(X₀)` for every `|μ| ≤ degree`.
    pub equivalent_to_x0_up_to_degree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UniquenessReport {
    pub borel: BorelDescriptor,
    #[serde(with = "crate::rational::serde_qvec")]
    pub x0: Vec<Rational>,
    pub r_b: WeightVector,
    pub orbits: Vec<OrbitRecord>,
    pub candidates: Vec<XCandidate>,
    #[serde(with = "crate::rational::serde_qvec")]
    pub x_selected: Vec<Rational>,
    pub m_selected: Vec<Vec<String>>,
    pub degree: usize,
    /// The selected map coincides with the canonical full map.
    pub matches_full_map: bool,
}

/// `M′(a,b,c) = M₀ + [0 | A, −A]` with `A = (a,b,c)`.
fn member_abc(abc: &[Rational]) -> Result<RationalMatrix> {
    MatrixFamilySpec::c(2, 1).member_with(&[(1, abc.to_vec())])
}

/// `τ′(x) = M′x + M′r_𝔟 + X₀`, written as an affine function of `(a,b,c)`
/// at a fixed `x`: returns the `3×3` coefficient block and the constant.
fn image_in_abc(x: &WeightVector, rb: &WeightVector) -> Result<(RationalMatrix, Vec<Rational>)> {
    let x0v = crate::tau::x0(2, 1);
    let eval = |abc: &[Rational]| -> Result<Vec<Rational>> {
        let mm = member_abc(abc)?;
        let mut v = mm.mul_vec(&x.coords())?;
        for ((a, b), c) in v.iter_mut().zip(mm.mul_vec(&rb.coords())?).zip(&x0v) {
            *a += b + c;
        }
        Ok(v)
    };
    let z = vec![int(0); 3];
    let c0 = eval(&z)?;
    let mut coef = RationalMatrix::zeros(3, 3);
    for j in 0..3 {
        let mut e = z.clone();
        e[j] = int(1);
        let col: Vec<Rational> = eval(&e)?.iter().zip(&c0).map(|(a, b)| a - b).collect();
        coef.set_column(j, &col);
    }
    Ok((coef, c0))
}

/// Reconstructs the uniqueness argument for `ℓ = (1,1)` of `gl(2|2)`: each
/// `λ = (r)` forces `τ′(λ̲_𝔟)` into the finite orbit of `τ₀(λ̲₀)`, which pins
/// `(a, b, c)` to two candidates; the `λ = ∅` condition then keeps one.
pub fn gl22_uniqueness(r_max: usize, degree: usize) -> Result<UniquenessReport> {
    let b = BorelDescriptor::new(2, 1, vec![1, 1])?;
    let rb = b.r_b();
    let x0v = crate::tau::x0(2, 1);
    let t0 = m0_and_x0(2, 1);
    let mut orbits = Vec::new();
    let mut surviving: Option<BTreeSet<Vec<Rational>>> = None;
    for r in 1..=r_max {
        let lam = HookPartition::new(vec![r], 2, 1)?;
        let p = Point::new(t0.apply_weight(&hw0_glm2n(&lam, 2, 1))?, 2, 1, half())?;
        let orb = orbit(&p, DEFAULT_BUDGET);
        let OrbitResult::Finite { points } = &orb else {
            return Err(CapelliError::Internal(format!("orbit for r = {r} is not finite")));
        };
        let (coef, c0) = image_in_abc(&hw_b(&lam, &b), &rb)?;
        let mut sols = BTreeSet::new();
        for q in points {
            let rhs: Vec<Rational> = q.coords.iter().zip(&c0).map(|(a, b)| a - b).collect();
            match solve_linear(&coef, &rhs)? {
                Solution::Unique(s) => {
                    sols.insert(s);
                }
                Solution::NoSolution => {}
                Solution::Underdetermined { .. } => {
                    return Err(CapelliError::Internal("orbit condition does not fix (a, b, c)".into()))
                }
            }
        }
        surviving = Some(match surviving {
            None => sols,
            Some(prev) => prev.intersection(&sols).cloned().collect(),
        });
        orbits.push(OrbitRecord { r, point: p, orbit: orb });
    }
    let x0p = Point::new(x0v.clone(), 2, 1, half())?;
    let mut candidates = Vec::new();
    for abc in surviving.unwrap_or_default() {
        let mm = member_abc(&abc)?;
        let x: Vec<Rational> = mm
            .mul_vec(&rb.coords())?
            .iter()
            .zip(&x0v)
            .map(|(a, b)| a + b)
            .collect();
        let xp = Point::new(x.clone(), 2, 1, half())?;
        candidates.push(XCandidate {
            in_closure_of_x0: closure_member(&x0p, &xp)?,
            equivalent_to_x0_up_to_degree: equivalent_up_to_degree(&x0p, &xp, degree)?,
            abc,
            x,
        });
    }
    let selected: Vec<&XCandidate> = candidates.iter().filter(|c| c.in_closure_of_x0).collect();
    let [sel] = selected.as_slice() else {
        return Err(CapelliError::Internal(format!(
            "{} candidates survive the λ = ∅ condition",
            selected.len()
        )));
    };
    let mm = member_abc(&sel.abc)?;
    let full = canonical_map(&b, MapChoice::Full)?;
    let m_json = AffineMap::new(mm.clone(), sel.x.clone())?.to_json();
    Ok(UniquenessReport {
        matches_full_map: full.matrix == mm && full.offset == sel.x,
        x_selected: sel.x.clone(),
        m_selected: m_json.matrix,
        borel: b,
        x0: x0v,
        r_b: rb,
        orbits,
        candidates,
        degree,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AppendixCase {
    pub even_dim: usize,
    pub odd_dim: usize,
    pub degree: usize,
    pub pairs: usize,
    pub mismatches: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AppendixReport {
    pub cases: Vec<AppendixCase>,
    /// `(d, scalar)` for `W = C^{1|0}`.
    pub capelli_gl1: Vec<(usize, Option<String>)>,
    pub passed: bool,
}

/// `φ′ = d!·φ` on all basis pairs for `p + q ≤ 3`, `d ≤ 3`, and the `gl(1)`
/// Capelli scalar for `d ≤ 4`.
pub fn verify_appendix() -> Result<AppendixReport> {
    use crate::rational::factorial;
    use crate::superalg::{capelli_scalar, pairing_phi, pairing_phi_prime, SuperSpace};
    let mut cases = Vec::new();
    for total in 1..=3 {
        for q in 0..=total {
            let sp = SuperSpace::new(total - q, q);
            for d in 0..=3 {
                let basis = sp.basis(d);
                let mut mismatches = 0;
                for u in &basis {
                    for p in &basis {
                        if pairing_phi_prime(u, p)? != factorial(d) * pairing_phi(u, p)? {
                            mismatches += 1;
                        }
                    }
                }
                cases.push(AppendixCase {
                    even_dim: total - q,
                    odd_dim: q,
                    degree: d,
                    pairs: basis.len() * basis.len(),
                    mismatches,
                });
            }
        }
    }
    let mut capelli_gl1 = Vec::new();
    let mut ok = cases.iter().all(|c| c.mismatches == 0);
    for d in 1..=4 {
        let s = capelli_scalar(SuperSpace::new(1, 0), d)?;
        ok &= s.as_ref() == Some(&factorial(d));
        capelli_gl1.push((d, s.as_ref().map(fmt_rational)));
    }
    Ok(AppendixReport {
        cases,
        capelli_gl1,
        passed: ok,
    })
}

/// Strips wall-clock fields so that identical configs give identical JSON.
pub fn deterministic(mut r: SweepReport) -> SweepReport {
    r.elapsed_ms = None;
    r
}
