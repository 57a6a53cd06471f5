//! Monoidal symmetry on `C^{m+n}`: one-step moves, orbits, the explicit orbit
//! closure available at `θ = ½`, and the degree-bounded `∼_E` test.

use std::collections::{BTreeSet, VecDeque};

use itertools::Itertools;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{CapelliError, Result};
use crate::isjp::build_isjp;
use crate::partitions::{enumerate_hooks, HookPartition};
use crate::rational::{fmt_vec, half, serde_q, serde_qvec, Rational};

pub const DEFAULT_BUDGET: usize = 10_000;
pub const DEFAULT_DEGREE: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    #[serde(with = "serde_qvec")]
    pub coords: Vec<Rational>,
    pub m: usize,
    pub n: usize,
    #[serde(with = "serde_q")]
    pub theta: Rational,
}

impl Point {
    pub fn new(coords: Vec<Rational>, m: usize, n: usize, theta: Rational) -> Result<Self> {
        if coords.len() != m + n {
            return Err(CapelliError::DimensionMismatch {
                expected: m + n,
                actual: coords.len(),
            });
        }
        Ok(Point {
            coords,
            m,
            n,
            theta,
        })
    }

    pub fn x(&self, i: usize) -> &Rational {
        &self.coords[i - 1]
    }

    pub fn y(&self, j: usize) -> &Rational {
        &self.coords[self.m + j - 1]
    }

    fn with_coords(&self, coords: Vec<Rational>) -> Point {
        Point {
            coords,
            m: self.m,
            n: self.n,
            theta: self.theta.clone(),
        }
    }

    /// All images under `S_m × S_n` acting on the two blocks separately.
    pub fn separate_permutations(&self) -> BTreeSet<Point> {
        let (m, n) = (self.m, self.n);
        let xs: Vec<Vec<Rational>> = self.coords[..m].iter().cloned().permutations(m).collect();
        let ys: Vec<Vec<Rational>> = self.coords[m..].iter().cloned().permutations(n).collect();
        xs.iter()
            .cartesian_product(&ys)
            .map(|(a, b)| self.with_coords(a.iter().chain(b).cloned().collect()))
            .collect()
    }
}

/// One step: `u − e_i + e_{m+j}` when `x_i + θy_j = ½(1−θ)`,
/// `u + e_i − e_{m+j}` when `x_i + θy_j = −½(1−θ)`, and the adjacent
/// transpositions inside each block.
pub fn monoidal_moves(u: &Point) -> Vec<Point> {
    let (m, n) = (u.m, u.n);
    let c = half() * (Rational::one() - &u.theta);
    let mut out = Vec::new();
    for i in 1..=m {
        for j in 1..=n {
            let s = u.x(i) + &u.theta * u.y(j);
            if s == c {
                let mut v = u.coords.clone();
                v[i - 1] -= Rational::one();
                v[m + j - 1] += Rational::one();
                out.push(u.with_coords(v));
            }
            if s == -c.clone() {
                let mut v = u.coords.clone();
                v[i - 1] += Rational::one();
                v[m + j - 1] -= Rational::one();
                out.push(u.with_coords(v));
            }
        }
    }
    let swaps = (0..m.saturating_sub(1)).chain(m..(m + n).saturating_sub(1));
    for t in swaps {
        if u.coords[t] != u.coords[t + 1] {
            let mut v = u.coords.clone();
            v.swap(t, t + 1);
            out.push(u.with_coords(v));
        }
    }
    out
}

/// A triple `(i, i₀, j)` with `x_i − x_{i₀} = 2x_i + x_{m+j} = −½`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub point: Point,
    pub i: usize,
    pub i0: usize,
    pub j: usize,
}

fn find_witness(u: &Point) -> Option<Witness> {
    let target = -half();
    for i in 1..=u.m {
        for i0 in 1..=u.m {
            if i == i0 || u.x(i) - u.x(i0) != target {
                continue;
            }
            for j in 1..=u.n {
                if u.x(i) * Rational::from_integer(2.into()) + u.y(j) == target {
                    return Some(Witness {
                        point: u.clone(),
                        i,
                        i0,
                        j,
                    });
                }
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum OrbitResult {
    Finite { points: Vec<Point> },
    InfiniteDetected { witness: Witness },
    BudgetExhausted { visited: usize },
}

/// Breadth-first closure under [`monoidal_moves`]. At `θ = ½` every state is
/// tested for an infinite-orbit witness before it is expanded.
pub fn orbit(u: &Point, budget: usize) -> OrbitResult {
    let detect = u.theta == half();
    let mut seen: BTreeSet<Point> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(u.clone());
    queue.push_back(u.clone());
    while let Some(p) = queue.pop_front() {
        if detect {
            if let Some(w) = find_witness(&p) {
                return OrbitResult::InfiniteDetected { witness: w };
            }
        }
        for q in monoidal_moves(&p) {
            if seen.insert(q.clone()) {
                if seen.len() > budget {
                    return OrbitResult::BudgetExhausted { visited: seen.len() };
                }
                queue.push_back(q);
            }
        }
    }
    OrbitResult::Finite {
        points: seen.into_iter().collect(),
    }
}

/// Whether `v` lies in the explicit closure set attached to a witness
/// triple of (a separate permutation of) `u`. Requires `θ = ½`.
pub fn closure_member(u: &Point, v: &Point) -> Result<bool> {
    if u.theta != half() || v.theta != half() {
        return Err(CapelliError::ThetaNotHalf);
    }
    if (u.m, u.n) != (v.m, v.n) {
        return Err(CapelliError::DimensionMismatch {
            expected: u.m + u.n,
            actual: v.m + v.n,
        });
    }
    let us = u.separate_permutations();
    if us.contains(v) {
        return Ok(true);
    }
    let m = u.m;
    let vs = v.separate_permutations();
    let h = half();
    let two = Rational::from_integer(2.into());
    for pu in &us {
        let target = -h.clone();
        for (i, i0) in (1..=m).cartesian_product(1..=m).filter(|(a, b)| a != b) {
            if pu.x(i) - pu.x(i0) != target {
                continue;
            }
            for j in 1..=u.n {
                if pu.x(i) * &two + pu.y(j) != target {
                    continue;
                }
                let triple = [i - 1, i0 - 1, m + j - 1];
                for pv in &vs {
                    let rest_agree = (0..u.coords.len())
                        .filter(|s| !triple.contains(s))
                        .all(|s| pv.coords[s] == pu.coords[s]);
                    if !rest_agree {
                        continue;
                    }
                    let a = pv.x(i) - pv.x(i0);
                    let b = pv.x(i) * &two + pv.y(j);
                    if a == b && (a == h || a == -h.clone()) {
                        return Ok(true);
                    }
                }
            }
        }
    }
    Ok(false)
}

/// A `μ` with `|μ| ≤ D` whose polynomial separates `u` and `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Separation {
    pub mu: HookPartition,
    #[serde(with = "serde_q")]
    pub at_u: Rational,
    #[serde(with = "serde_q")]
    pub at_v: Rational,
}

pub fn first_separation(u: &Point, v: &Point, degree: usize) -> Result<Option<Separation>> {
    if (u.m, u.n, &u.theta) != (v.m, v.n, &v.theta) {
        return Err(CapelliError::DimensionMismatch {
            expected: u.m + u.n,
            actual: v.m + v.n,
        });
    }
    for mu in enumerate_hooks(u.m, u.n, degree) {
        let p = build_isjp(&mu, u.m, u.n, &u.theta)?;
        let (a, b) = (p.evaluate(&u.coords)?, p.evaluate(&v.coords)?);
        if a != b {
            return Ok(Some(Separation {
                mu,
                at_u: a,
                at_v: b,
            }));
        }
    }
    Ok(None)
}

/// `P_{μ,θ}(u) = P_{μ,θ}(v)` for every `μ` with `|μ| ≤ D`.
pub fn equivalent_up_to_degree(u: &Point, v: &Point, degree: usize) -> Result<bool> {
    Ok(first_separation(u, v, degree)?.is_none())
}

impl std::fmt::Display for Point {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", fmt_vec(&self.coords).join(", "))
    }
}
