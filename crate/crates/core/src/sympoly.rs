//! Sparse polynomials in `x_1..x_m, y_1..y_n` over `Q` and the algebra
//! `Λ_{m,n,θ}` of separately symmetric polynomials with monoidal symmetry.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use itertools::Itertools;

use crate::error::{CapelliError, Result};
use crate::linalg::{nullspace_basis, RationalMatrix};
use crate::partitions::partitions_with_at_most;
use crate::rational::{fmt_rational, half, parse_rational, Rational};

/// Exponent vector of length `m + n`. Ordered by total degree, then
/// lexicographically with larger leading exponents first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct SparsePolynomial {
    num_x: usize,
    num_y: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl SparsePolynomial {
    pub fn zero(num_x: usize, num_y: usize) -> Self {
        SparsePolynomial {
            num_x,
            num_y,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(num_x: usize, num_y: usize, c: Rational) -> Self {
        let mut p = Self::zero(num_x, num_y);
        p.add_term(vec![0; num_x + num_y], c);
        p
    }

    pub fn one(num_x: usize, num_y: usize) -> Self {
        Self::constant(num_x, num_y, Rational::one())
    }

    /// The variable with flat index `v` (`x_i` is `i - 1`, `y_j` is `m + j - 1`).
    pub fn var(num_x: usize, num_y: usize, v: usize) -> Self {
        let mut e = vec![0; num_x + num_y];
        e[v] = 1;
        let mut p = Self::zero(num_x, num_y);
        p.add_term(e, Rational::one());
        p
    }

    pub fn x(num_x: usize, num_y: usize, i: usize) -> Self {
        Self::var(num_x, num_y, i - 1)
    }

    pub fn y(num_x: usize, num_y: usize, j: usize) -> Self {
        Self::var(num_x, num_y, num_x + j - 1)
    }

    pub fn from_terms(
        num_x: usize,
        num_y: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, Rational)>,
    ) -> Result<Self> {
        let mut p = Self::zero(num_x, num_y);
        for (e, c) in terms {
            if e.len() != num_x + num_y {
                return Err(CapelliError::DimensionMismatch {
                    expected: num_x + num_y,
                    actual: e.len(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn num_x(&self) -> usize {
        self.num_x
    }

    pub fn num_y(&self) -> usize {
        self.num_y
    }

    pub fn num_vars(&self) -> usize {
        self.num_x + self.num_y
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exp: &[u32]) -> Rational {
        self.terms
            .get(&Monomial(exp.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    fn add_term(&mut self, exp: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = Monomial(exp);
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.num_x, self.num_y);
        }
        SparsePolynomial {
            num_x: self.num_x,
            num_y: self.num_y,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    fn check_same_ring(&self, other: &Self) {
        assert!(
            self.num_x == other.num_x && self.num_y == other.num_y,
            "polynomials live in different rings"
        );
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.num_x, self.num_y);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation at a point of length `m + n`.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.num_vars() {
            return Err(CapelliError::DimensionMismatch {
                expected: self.num_vars(),
                actual: point.len(),
            });
        }
        let max_deg = self.total_degree().unwrap_or(0) as usize;
        let powers: Vec<Vec<Rational>> = point
            .iter()
            .map(|v| {
                let mut row = Vec::with_capacity(max_deg + 1);
                row.push(Rational::one());
                for k in 1..=max_deg {
                    let next = &row[k - 1] * v;
                    row.push(next);
                }
                row
            })
            .collect();
        let mut acc = Rational::zero();
        for (mono, c) in &self.terms {
            let mut t = c.clone();
            for (var, &e) in mono.0.iter().enumerate() {
                if e > 0 {
                    t *= &powers[var][e as usize];
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Simultaneous substitution `v ↦ g_v` for the listed variables.
    pub fn substitute(&self, subs: &[(usize, SparsePolynomial)]) -> Self {
        let mut pow_cache: Vec<Vec<SparsePolynomial>> = subs
            .iter()
            .map(|_| vec![Self::one(self.num_x, self.num_y)])
            .collect();
        let mut out = Self::zero(self.num_x, self.num_y);
        for (mono, c) in &self.terms {
            let mut rest = mono.0.clone();
            let mut factor = Self::constant(self.num_x, self.num_y, c.clone());
            for (s, (var, g)) in subs.iter().enumerate() {
                let e = rest[*var] as usize;
                rest[*var] = 0;
                while pow_cache[s].len() <= e {
                    let next = &pow_cache[s][pow_cache[s].len() - 1] * g;
                    pow_cache[s].push(next);
                }
                if e > 0 {
                    factor = &factor * &pow_cache[s][e];
                }
            }
            let mut mono_poly = Self::zero(self.num_x, self.num_y);
            mono_poly.add_term(rest, Rational::one());
            out = &out + &(&factor * &mono_poly);
        }
        out
    }

    /// Exchange two variables.
    pub fn swap_vars(&self, a: usize, b: usize) -> Self {
        let mut out = Self::zero(self.num_x, self.num_y);
        for (mono, c) in &self.terms {
            let mut e = mono.0.clone();
            e.swap(a, b);
            out.add_term(e, c.clone());
        }
        out
    }

    /// Invariance under all adjacent transpositions within the x-block and
    /// within the y-block.
    pub fn is_separately_symmetric(&self) -> bool {
        let m = self.num_x;
        let n = self.num_y;
        (0..m.saturating_sub(1)).all(|i| self.swap_vars(i, i + 1) == *self)
            && (0..n.saturating_sub(1)).all(|j| self.swap_vars(m + j, m + j + 1) == *self)
    }

    /// `f(…, x_i+½, …, y_j−½, …) − f(…, x_i−½, …, y_j+½, …)` restricted to the
    /// hyperplane `x_i = −θ y_j` (1-based `i`, `j`). The result no longer
    /// depends on `x_i`.
    pub fn monoidal_defect(&self, i: usize, j: usize, theta: &Rational) -> Self {
        let (m, n) = (self.num_x, self.num_y);
        let xv = i - 1;
        let yv = m + j - 1;
        let y = Self::var(m, n, yv);
        let on_plane = y.scale(&-theta.clone());
        let c = |q: Rational| Self::constant(m, n, q);
        let plus = self.substitute(&[(xv, &on_plane + &c(half())), (yv, &y - &c(half()))]);
        let minus = self.substitute(&[(xv, &on_plane - &c(half())), (yv, &y + &c(half()))]);
        &plus - &minus
    }

    /// The monoidal-symmetry condition, decided at the pair `(1, 1)`.
    /// Separate symmetry transports it to every other pair.
    pub fn satisfies_monoidal_symmetry(&self, theta: &Rational) -> Result<bool> {
        if !self.is_separately_symmetric() {
            return Err(CapelliError::NotSeparatelySymmetric);
        }
        if self.num_x == 0 || self.num_y == 0 {
            return Ok(true);
        }
        Ok(self.monoidal_defect(1, 1, theta).is_zero())
    }

    /// The monoidal-symmetry condition checked on every hyperplane
    /// `x_i + θ y_j = 0` independently. Does not require separate symmetry.
    pub fn satisfies_monoidal_symmetry_all_pairs(&self, theta: &Rational) -> bool {
        (1..=self.num_x)
            .cartesian_product(1..=self.num_y)
            .all(|(i, j)| self.monoidal_defect(i, j, theta).is_zero())
    }

    pub fn to_json(&self) -> PolynomialJson {
        PolynomialJson {
            m: self.num_x,
            n: self.num_y,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| TermJson {
                    exp: k.0.clone(),
                    coef: fmt_rational(v),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &PolynomialJson) -> Result<Self> {
        let terms = j
            .terms
            .iter()
            .map(|t| Ok((t.exp.clone(), parse_rational(&t.coef)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(j.m, j.n, terms)
    }
}

impl fmt::Debug for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mono, c) in self.terms.iter().rev() {
            let mut factors = Vec::new();
            for (v, &e) in mono.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = if v < self.num_x {
                    format!("x{}", v + 1)
                } else {
                    format!("y{}", v - self.num_x + 1)
                };
                factors.push(if e == 1 { name } else { format!("{name}^{e}") });
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (factors.is_empty(), c.is_one()) {
                (true, _) => write!(f, "{c}")?,
                (false, true) => write!(f, "{}", factors.join("*"))?,
                (false, false) => write!(f, "({c})*{}", factors.join("*"))?,
            }
        }
        Ok(())
    }
}

impl<'a> Add for &'a SparsePolynomial {
    type Output = SparsePolynomial;

    fn add(self, rhs: &'a SparsePolynomial) -> SparsePolynomial {
        self.check_same_ring(rhs);
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(k.0.clone(), v.clone());
        }
        out
    }
}

impl<'a> Sub for &'a SparsePolynomial {
    type Output = SparsePolynomial;

    fn sub(self, rhs: &'a SparsePolynomial) -> SparsePolynomial {
        self.check_same_ring(rhs);
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(k.0.clone(), -v.clone());
        }
        out
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn neg(self) -> SparsePolynomial {
        self.scale(&-Rational::one())
    }
}

impl<'a> Mul for &'a SparsePolynomial {
    type Output = SparsePolynomial;

    fn mul(self, rhs: &'a SparsePolynomial) -> SparsePolynomial {
        self.check_same_ring(rhs);
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ka, va) in &self.terms {
            for (kb, vb) in &rhs.terms {
                let e: Vec<u32> = ka.0.iter().zip(&kb.0).map(|(a, b)| a + b).collect();
                *acc.entry(Monomial(e)).or_insert_with(Rational::zero) += va * vb;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        SparsePolynomial {
            num_x: self.num_x,
            num_y: self.num_y,
            terms: acc,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coef: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub m: usize,
    pub n: usize,
    pub terms: Vec<TermJson>,
}

/// `m_α` on the variables `offset .. offset + α.len()`.
pub fn monomial_symmetric(num_x: usize, num_y: usize, offset: usize, alpha: &[usize]) -> SparsePolynomial {
    let k = alpha.len();
    let perms: BTreeSet<Vec<usize>> = alpha.iter().copied().permutations(k).collect();
    let mut p = SparsePolynomial::zero(num_x, num_y);
    for perm in perms {
        let mut e = vec![0u32; num_x + num_y];
        for (t, &a) in perm.iter().enumerate() {
            e[offset + t] = a as u32;
        }
        p.add_term(e, Rational::one());
    }
    p
}

/// Spanning set `m_α(x)·m_β(y)` of separately symmetric polynomials of total
/// degree `≤ d`, in graded order.
pub fn separately_symmetric_span(m: usize, n: usize, d: usize) -> Vec<SparsePolynomial> {
    let mut out = Vec::new();
    for total in 0..=d {
        for dx in (0..=total).rev() {
            let dy = total - dx;
            let xs = partitions_with_at_most(dx, m);
            let ys = partitions_with_at_most(dy, n);
            for a in &xs {
                for b in &ys {
                    let fx = monomial_symmetric(m, n, 0, a);
                    let fy = monomial_symmetric(m, n, m, b);
                    out.push(&fx * &fy);
                }
            }
        }
    }
    out
}

/// A basis of the degree-`≤ d` part of `Λ_{m,n,θ}`.
#[derive(Clone, Debug)]
pub struct LambdaBasis {
    pub m: usize,
    pub n: usize,
    pub theta: Rational,
    pub degree_bound: usize,
    pub elements: Vec<SparsePolynomial>,
}

impl LambdaBasis {
    pub fn dim(&self) -> usize {
        self.elements.len()
    }
}

/// Nullspace of the monoidal-defect map at `(1, 1)` on the separately
/// symmetric span.
pub fn lambda_basis(m: usize, n: usize, theta: &Rational, d: usize) -> Result<LambdaBasis> {
    if !crate::rational::is_positive(theta) {
        return Err(CapelliError::ThetaDomain(format!(
            "theta outside allowed domain: {theta}"
        )));
    }
    let span = separately_symmetric_span(m, n, d);
    let elements = if m == 0 || n == 0 {
        span
    } else {
        let defects: Vec<SparsePolynomial> =
            span.iter().map(|f| f.monoidal_defect(1, 1, theta)).collect();
        let monos: BTreeSet<Monomial> = defects
            .iter()
            .flat_map(|g| g.terms.keys().cloned())
            .collect();
        let row_of: BTreeMap<&Monomial, usize> =
            monos.iter().enumerate().map(|(r, k)| (k, r)).collect();
        let mut a = RationalMatrix::zeros(monos.len(), span.len());
        for (col, g) in defects.iter().enumerate() {
            for (k, v) in &g.terms {
                a[(row_of[k], col)] = v.clone();
            }
        }
        nullspace_basis(&a)
            .into_iter()
            .map(|coeffs| {
                coeffs
                    .iter()
                    .zip(&span)
                    .filter(|(c, _)| !c.is_zero())
                    .fold(SparsePolynomial::zero(m, n), |acc, (c, f)| {
                        &acc + &f.scale(c)
                    })
            })
            .collect()
    };
    Ok(LambdaBasis {
        m,
        n,
        theta: theta.clone(),
        degree_bound: d,
        elements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn xs(m: usize, n: usize, i: usize) -> SparsePolynomial {
        SparsePolynomial::x(m, n, i)
    }
    fn ys(m: usize, n: usize, j: usize) -> SparsePolynomial {
        SparsePolynomial::y(m, n, j)
    }

    #[test]
    fn evaluation() {
        let f = &xs(1, 1, 1) + &ys(1, 1, 1);
        assert_eq!(f.evaluate(&[frac(1, 2), frac(1, 2)]).unwrap(), int(1));
        assert_eq!(
            SparsePolynomial::one(1, 1).evaluate(&[int(9), int(-4)]).unwrap(),
            int(1)
        );
        let g = &xs(1, 1, 1) * &ys(1, 1, 1);
        assert_eq!(g.evaluate(&[int(2), int(3)]).unwrap(), int(6));
        assert!(g.evaluate(&[int(2)]).is_err());
    }

    #[test]
    fn separate_symmetry() {
        assert!((&xs(2, 0, 1) + &xs(2, 0, 2)).is_separately_symmetric());
        assert!(!(&xs(2, 0, 1) - &xs(2, 0, 2)).is_separately_symmetric());
        assert!((&(&xs(2, 1, 1) + &xs(2, 1, 2)) * &ys(2, 1, 1)).is_separately_symmetric());
    }

    #[test]
    fn monoidal_examples() {
        let th = frac(1, 2);
        let f = &xs(1, 1, 1) + &ys(1, 1, 1);
        assert!(f.satisfies_monoidal_symmetry(&th).unwrap());
        assert!(!xs(1, 1, 1).satisfies_monoidal_symmetry(&th).unwrap());
        let g = &xs(1, 1, 1) + &ys(1, 1, 1).scale(&int(2));
        assert!(!g.satisfies_monoidal_symmetry(&th).unwrap());
        assert_eq!(
            xs(2, 1, 1).satisfies_monoidal_symmetry(&th),
            Err(CapelliError::NotSeparatelySymmetric)
        );
    }

    #[test]
    fn zero_coefficients_never_stored() {
        let f = &xs(1, 1, 1) - &xs(1, 1, 1);
        assert!(f.is_zero());
        assert_eq!(f.len(), 0);
    }

    #[test]
    fn basis_small_cases() {
        let th = frac(1, 2);
        let b = lambda_basis(1, 1, &th, 1).unwrap();
        assert_eq!(b.dim(), 2);
        let one = SparsePolynomial::one(1, 1);
        let xy = &xs(1, 1, 1) + &ys(1, 1, 1);
        // span{1, x+y}: every element is a combination a + b(x+y)
        for e in &b.elements {
            let a = e.coefficient(&[0, 0]);
            let c = e.coefficient(&[1, 0]);
            assert_eq!(e, &(&one.scale(&a) + &xy.scale(&c)));
        }
        let b = lambda_basis(1, 0, &int(3), 2).unwrap();
        assert_eq!(b.dim(), 3);
        assert_eq!(lambda_basis(1, 1, &th, 2).unwrap().dim(), 4);
        assert!(matches!(
            lambda_basis(1, 1, &int(0), 2),
            Err(CapelliError::ThetaDomain(_))
        ));
    }

    #[test]
    fn json_roundtrip_keeps_grlex_order() {
        let f = &(&xs(1, 1, 1) * &xs(1, 1, 1)) + &(&ys(1, 1, 1) + &SparsePolynomial::constant(1, 1, frac(-3, 4)));
        let j = f.to_json();
        let degs: Vec<u32> = j.terms.iter().map(|t| t.exp.iter().sum()).collect();
        assert!(degs.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(j.terms[0].coef, "-3/4");
        assert_eq!(SparsePolynomial::from_json(&j).unwrap(), f);
    }
}
