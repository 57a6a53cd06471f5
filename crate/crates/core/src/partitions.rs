//! Hook partitions and their twisted Frobenius coordinates.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{CapelliError, Result};
use crate::rational::{half, int, one, serde_q, serde_qvec, Rational};

/// A partition in the (m|n) hook, i.e. with `λ_{m+1} ≤ n`.
///
/// Parts are stored weakly decreasing and without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HookPartition {
    parts: Vec<usize>,
    m: usize,
    n: usize,
}

impl HookPartition {
    pub fn new(mut parts: Vec<usize>, m: usize, n: usize) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CapelliError::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        if parts.contains(&0) {
            return Err(CapelliError::InvalidPartition(format!(
                "{parts:?} has interior zeros"
            )));
        }
        let p = HookPartition { parts, m, n };
        if !is_hook(&p.parts, m, n) {
            return Err(CapelliError::NotHook(p.to_string(), m, n));
        }
        Ok(p)
    }

    pub fn empty(m: usize, n: usize) -> Self {
        HookPartition {
            parts: Vec::new(),
            m,
            n,
        }
    }

    /// Parses `"3,1,1"`; the empty string (or `"()"`, `"0"`) is the empty partition.
    pub fn parse(s: &str, m: usize, n: usize) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        if t.is_empty() || t == "0" || t == "∅" {
            return Ok(Self::empty(m, n));
        }
        let parts = t
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| CapelliError::Parse(format!("bad partition `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts, m, n)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` with 1-based `i`, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        assert!(i >= 1);
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// `λ′` with `λ′_i = #{j : λ_j ≥ i}`, truncated to its nonzero prefix.
    pub fn transpose(&self) -> Vec<usize> {
        transpose(&self.parts)
    }

    /// `λ′_j`, 1-based, zero past the end.
    pub fn conjugate_part(&self, j: usize) -> usize {
        self.parts.iter().filter(|&&p| p >= j).count()
    }

    /// `⟨λ′_j − m⟩ = max(0, λ′_j − m)`.
    pub fn leg_excess(&self, j: usize) -> usize {
        self.conjugate_part(j).saturating_sub(self.m)
    }

    /// `2λ`, a partition in the (m|2n) hook with even parts.
    pub fn double(&self) -> HookPartition {
        HookPartition {
            parts: self.parts.iter().map(|p| 2 * p).collect(),
            m: self.m,
            n: 2 * self.n,
        }
    }

    pub fn with_context(&self, m: usize, n: usize) -> Result<Self> {
        Self::new(self.parts.clone(), m, n)
    }

    /// Canonical key used by caches: `"3,1,1"`.
    pub fn key(&self) -> String {
        self.parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for HookPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "({})", self.key())
    }
}

impl fmt::Debug for HookPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}|{}]", self, self.m, self.n)
    }
}

pub fn is_hook(parts: &[usize], m: usize, n: usize) -> bool {
    parts.get(m).copied().unwrap_or(0) <= n
}

pub fn transpose(parts: &[usize]) -> Vec<usize> {
    let first = parts.first().copied().unwrap_or(0);
    (1..=first)
        .map(|i| parts.iter().filter(|&&p| p >= i).count())
        .collect()
}

/// All `λ ∈ H(m|n)` with `|λ| ≤ max_size`, ordered by size and then
/// lexicographically (largest first) within a size: ∅, (1), (2), (1,1), ...
pub fn enumerate_hooks(m: usize, n: usize, max_size: usize) -> Vec<HookPartition> {
    let mut out = Vec::new();
    for size in 0..=max_size {
        let mut of_size = Vec::new();
        partitions_of(size, size, &mut Vec::new(), &mut of_size);
        of_size.retain(|p| is_hook(p, m, n));
        of_size.sort_by(|a, b| b.cmp(a));
        out.extend(of_size.into_iter().map(|parts| HookPartition { parts, m, n }));
    }
    out
}

fn partitions_of(rest: usize, max_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if rest == 0 {
        out.push(cur.clone());
        return;
    }
    for p in (1..=rest.min(max_part)).rev() {
        cur.push(p);
        partitions_of(rest - p, p, cur, out);
        cur.pop();
    }
}

/// Partitions of exactly `size` with at most `len` parts, padded to length `len`.
pub fn partitions_with_at_most(size: usize, len: usize) -> Vec<Vec<usize>> {
    let mut all = Vec::new();
    partitions_of(size, size, &mut Vec::new(), &mut all);
    all.into_iter()
        .filter(|p| p.len() <= len)
        .map(|mut p| {
            p.resize(len, 0);
            p
        })
        .collect()
}

/// The point `(p(λ), q(λ))` at which `P_{μ,θ}` is interpolated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusPoint {
    #[serde(with = "serde_qvec")]
    pub x: Vec<Rational>,
    #[serde(with = "serde_qvec")]
    pub y: Vec<Rational>,
    #[serde(with = "serde_q")]
    pub theta: Rational,
}

impl FrobeniusPoint {
    pub fn coords(&self) -> Vec<Rational> {
        self.x.iter().chain(&self.y).cloned().collect()
    }
}

/// Twisted Frobenius coordinates
///
/// `p_i = λ_i − θ(i − ½) − ½(n − θm)` and
/// `q_j = ⟨λ′_j − m⟩ − θ⁻¹(j − ½) + ½(θ⁻¹n + m)`.
pub fn frobenius_coords(
    lambda: &HookPartition,
    m: usize,
    n: usize,
    theta: &Rational,
) -> Result<FrobeniusPoint> {
    if !crate::rational::is_positive(theta) {
        return Err(CapelliError::ThetaDomain(theta.to_string()));
    }
    if !is_hook(lambda.parts(), m, n) {
        return Err(CapelliError::NotHook(lambda.to_string(), m, n));
    }
    let h = half();
    let (mq, nq) = (int(m as i64), int(n as i64));
    let inv = one() / theta;
    let x = (1..=m)
        .map(|i| {
            int(lambda.part(i) as i64)
                - theta * (int(i as i64) - &h)
                - &h * (&nq - theta * &mq)
        })
        .collect();
    let y = (1..=n)
        .map(|j| {
            let excess = lambda.conjugate_part(j).saturating_sub(m);
            int(excess as i64) - &inv * (int(j as i64) - &h) + &h * (&inv * &nq + &mq)
        })
        .collect();
    Ok(FrobeniusPoint {
        x,
        y,
        theta: theta.clone(),
    })
}
