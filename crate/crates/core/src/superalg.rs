//! The free supercommutative algebra on `W = C^{p|q}` (or on `W*`), the
//! superderivations `∂_v`, and the two pairings `𝒮^d(W) × 𝒫^d(W) → Q`.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::error::{CapelliError, Result};
use crate::linalg::{solve_linear, RationalMatrix, Solution};
use crate::rational::{factorial, Rational};

/// `C^{p|q}` with basis `v_1..v_{p+q}`; the first `p` are even.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SuperSpace {
    pub even_dim: usize,
    pub odd_dim: usize,
}

impl SuperSpace {
    pub fn new(even_dim: usize, odd_dim: usize) -> Self {
        SuperSpace { even_dim, odd_dim }
    }

    pub fn dim(&self) -> usize {
        self.even_dim + self.odd_dim
    }

    /// 0-based generator index.
    pub fn is_odd(&self, g: usize) -> bool {
        g >= self.even_dim
    }

    /// Exponent vectors of the degree-`d` monomials, odd exponents in {0, 1}.
    pub fn monomials(&self, d: usize) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.dim()];
        self.fill(0, d as u32, &mut cur, &mut out);
        out
    }

    fn fill(&self, g: usize, rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if g == self.dim() {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let top = if self.is_odd(g) { rest.min(1) } else { rest };
        for e in (0..=top).rev() {
            cur[g] = e;
            self.fill(g + 1, rest - e, cur, out);
        }
        cur[g] = 0;
    }

    pub fn basis(&self, d: usize) -> Vec<SuperPolynomial> {
        self.monomials(d)
            .into_iter()
            .map(|e| SuperPolynomial::monomial(*self, e, Rational::one()))
            .collect()
    }
}

/// An element of the supercommutative algebra, stored with odd factors in
/// increasing index order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperPolynomial {
    space: SuperSpace,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl SuperPolynomial {
    pub fn zero(space: SuperSpace) -> Self {
        SuperPolynomial {
            space,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(space: SuperSpace) -> Self {
        Self::monomial(space, vec![0; space.dim()], Rational::one())
    }

    pub fn monomial(space: SuperSpace, exp: Vec<u32>, c: Rational) -> Self {
        let mut p = Self::zero(space);
        assert_eq!(exp.len(), space.dim());
        if (0..space.dim()).all(|g| !space.is_odd(g) || exp[g] <= 1) && !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    /// The generator `v_g` (0-based).
    pub fn generator(space: SuperSpace, g: usize) -> Self {
        let mut e = vec![0; space.dim()];
        e[g] = 1;
        Self::monomial(space, e, Rational::one())
    }

    pub fn space(&self) -> SuperSpace {
        self.space
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    /// Total degree when homogeneous.
    pub fn degree(&self) -> Option<usize> {
        let degs: Vec<u32> = self.terms.keys().map(|e| e.iter().sum()).dedup().collect();
        match degs.as_slice() {
            [] => Some(0),
            [d] if self.terms.keys().all(|e| e.iter().sum::<u32>() == *d) => Some(*d as usize),
            _ => None,
        }
    }

    /// The constant term.
    pub fn scalar(&self) -> Rational {
        self.terms
            .get(&vec![0; self.space.dim()])
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let v = self.terms.entry(e.clone()).or_insert_with(Rational::zero);
        *v += c;
        if v.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.space);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    /// Monomial as a word of generator indices in canonical order.
    fn word(e: &[u32]) -> Vec<usize> {
        e.iter()
            .enumerate()
            .flat_map(|(g, &k)| std::iter::repeat_n(g, k as usize))
            .collect()
    }
}

/// Supercommutative product with Koszul signs.
pub fn multiply(a: &SuperPolynomial, b: &SuperPolynomial) -> SuperPolynomial {
    assert_eq!(a.space, b.space);
    let sp = a.space;
    let mut out = SuperPolynomial::zero(sp);
    for (ea, ca) in &a.terms {
        for (eb, cb) in &b.terms {
            let mut sign_flips = 0u32;
            let mut clash = false;
            for g in (0..sp.dim()).filter(|&g| sp.is_odd(g)) {
                if eb[g] == 1 {
                    if ea[g] == 1 {
                        clash = true;
                        break;
                    }
                    sign_flips += ((g + 1)..sp.dim())
                        .filter(|&h| sp.is_odd(h) && ea[h] == 1)
                        .count() as u32;
                }
            }
            if clash {
                continue;
            }
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let c = ca * cb;
            out.add_term(e, if sign_flips % 2 == 1 { -c } else { c });
        }
    }
    out
}

/// `∂_v` for the basis vector `v = v_g`, with `∂_v(v_h*) = δ_{gh}`.
pub fn derivation(g: usize, f: &SuperPolynomial) -> SuperPolynomial {
    let sp = f.space;
    let mut out = SuperPolynomial::zero(sp);
    for (e, c) in &f.terms {
        if e[g] == 0 {
            continue;
        }
        let mut e2 = e.clone();
        e2[g] -= 1;
        if sp.is_odd(g) {
            let before = (0..g).filter(|&h| sp.is_odd(h) && e[h] == 1).count();
            out.add_term(e2, if before % 2 == 1 { -c.clone() } else { c.clone() });
        } else {
            out.add_term(e2, c * Rational::from_integer(e[g].into()));
        }
    }
    out
}

/// `∂_u p` for `u` in `𝒮(W)`: for a monomial `v_{a_1}⋯v_{a_d}`,
/// `∂_{a_1}(⋯∂_{a_d}(p))`.
pub fn apply_operator(u: &SuperPolynomial, p: &SuperPolynomial) -> SuperPolynomial {
    let mut out = SuperPolynomial::zero(p.space);
    for (e, c) in &u.terms {
        let mut acc = p.clone();
        for &g in SuperPolynomial::word(e).iter().rev() {
            acc = derivation(g, &acc);
        }
        out = out.add(&acc.scale(c));
    }
    out
}

/// The symmetrized tensor of a monomial, scaled by `1/d!`.
fn symmetrize(sp: SuperSpace, e: &[u32]) -> BTreeMap<Vec<usize>, Rational> {
    let w = SuperPolynomial::word(e);
    let d = w.len();
    let inv_fact = factorial(d).recip();
    let mut out: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
    for perm in (0..d).permutations(d) {
        let mut flips = 0;
        for a in 0..d {
            for b in (a + 1)..d {
                if perm[a] > perm[b] && sp.is_odd(w[perm[a]]) && sp.is_odd(w[perm[b]]) {
                    flips += 1;
                }
            }
        }
        let t: Vec<usize> = perm.iter().map(|&i| w[i]).collect();
        let s = if flips % 2 == 1 { -inv_fact.clone() } else { inv_fact.clone() };
        *out.entry(t).or_insert_with(Rational::zero) += s;
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn check_degrees(u: &SuperPolynomial, p: &SuperPolynomial) -> Result<usize> {
    let du = u.degree().ok_or(CapelliError::DegreeMismatch(usize::MAX, 0))?;
    let dp = p.degree().ok_or(CapelliError::DegreeMismatch(0, usize::MAX))?;
    if du != dp {
        return Err(CapelliError::DegreeMismatch(du, dp));
    }
    Ok(du)
}

/// `φ(u)(p)`: embed both as symmetric tensors and pair by
/// `⟨v_1⊗⋯⊗v_d, v_1*⊗⋯⊗v_d*⟩ = Π ⟨v_{d−i+1}, v_i*⟩`.
pub fn pairing_phi(u: &SuperPolynomial, p: &SuperPolynomial) -> Result<Rational> {
    check_degrees(u, p)?;
    let sp = u.space;
    let mut total = Rational::zero();
    for (eu, cu) in &u.terms {
        let tu = symmetrize(sp, eu);
        for (ep, cp) in &p.terms {
            let tp = symmetrize(sp, ep);
            let mut s = Rational::zero();
            for (word, a) in &tu {
                let rev: Vec<usize> = word.iter().rev().copied().collect();
                if let Some(b) = tp.get(&rev) {
                    s += a * b;
                }
            }
            total += s * cu * cp;
        }
    }
    Ok(total)
}

/// `φ′(u)(p) = ∂_u p`, a scalar.
pub fn pairing_phi_prime(u: &SuperPolynomial, p: &SuperPolynomial) -> Result<Rational> {
    check_degrees(u, p)?;
    Ok(apply_operator(u, p).scalar())
}

/// The scalar by which `D = Σ w_i* ∂_{w_i}` acts on `𝒫^d(W)`, where `w_i*`
/// is the monomial basis and `w_i` its `φ`-dual basis of `𝒮^d(W)`. `None`
/// if `D` is not a scalar on `𝒫^d(W)`.
pub fn capelli_scalar(space: SuperSpace, d: usize) -> Result<Option<Rational>> {
    let basis = space.basis(d);
    let k = basis.len();
    if k == 0 {
        return Ok(None);
    }
    // gram[i][j] = φ(s_i)(b_j), with s_i and b_j the same monomial list
    let mut gram_t = RationalMatrix::zeros(k, k);
    for (i, s) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            gram_t[(j, i)] = pairing_phi(s, b)?;
        }
    }
    let mut dual = Vec::with_capacity(k);
    for i in 0..k {
        let mut e = vec![Rational::zero(); k];
        e[i] = Rational::one();
        let Solution::Unique(c) = solve_linear(&gram_t, &e)? else {
            return Err(CapelliError::Internal("φ is singular on this degree".into()));
        };
        let w = c
            .iter()
            .zip(&basis)
            .fold(SuperPolynomial::zero(space), |acc, (ci, s)| acc.add(&s.scale(ci)));
        dual.push(w);
    }
    let mut scalar: Option<Rational> = None;
    for p in &basis {
        let mut image = SuperPolynomial::zero(space);
        for (w, b) in dual.iter().zip(&basis) {
            let c = apply_operator(w, p).scalar();
            image = image.add(&b.scale(&c));
        }
        let c = p.terms.values().next().cloned().unwrap_or_else(Rational::one);
        let ratio = image
            .terms
            .get(p.terms.keys().next().expect("monomial"))
            .cloned()
            .unwrap_or_else(Rational::zero)
            / c;
        if image != p.scale(&ratio) {
            return Ok(None);
        }
        match &scalar {
            None => scalar = Some(ratio),
            Some(s) if *s != ratio => return Ok(None),
            _ => {}
        }
    }
    Ok(scalar)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn products() {
        let sp = SuperSpace::new(1, 2);
        let x = SuperPolynomial::generator(sp, 0);
        let xi = SuperPolynomial::generator(sp, 1);
        let eta = SuperPolynomial::generator(sp, 2);
        assert!(multiply(&xi, &xi).is_zero());
        assert_eq!(multiply(&xi, &eta), multiply(&eta, &xi).scale(&int(-1)));
        assert_eq!(multiply(&x, &xi), multiply(&xi, &x));
    }

    #[test]
    fn derivations() {
        let sp = SuperSpace::new(1, 2);
        let x = SuperPolynomial::generator(sp, 0);
        let x3 = multiply(&x, &multiply(&x, &x));
        assert_eq!(derivation(0, &x3), multiply(&x, &x).scale(&int(3)));
        let xi = SuperPolynomial::generator(sp, 1);
        let eta = SuperPolynomial::generator(sp, 2);
        assert_eq!(derivation(1, &multiply(&xi, &eta)), eta);
        assert_eq!(derivation(2, &multiply(&xi, &eta)), xi.scale(&int(-1)));
        assert!(derivation(0, &SuperPolynomial::one(sp)).is_zero());
    }

    #[test]
    fn even_power_pairings() {
        let sp = SuperSpace::new(1, 0);
        for d in 0..5u32 {
            let u = SuperPolynomial::monomial(sp, vec![d], int(1));
            assert_eq!(pairing_phi(&u, &u).unwrap(), int(1));
            assert_eq!(pairing_phi_prime(&u, &u).unwrap(), factorial(d as usize));
        }
    }

    #[test]
    fn odd_pair() {
        let sp = SuperSpace::new(0, 2);
        let u = SuperPolynomial::monomial(sp, vec![1, 1], int(1));
        assert_eq!(pairing_phi(&u, &u).unwrap(), crate::rational::frac(-1, 2));
        assert_eq!(pairing_phi_prime(&u, &u).unwrap(), int(-1));
    }

    #[test]
    fn degree_mismatch() {
        let sp = SuperSpace::new(1, 1);
        let a = SuperPolynomial::generator(sp, 0);
        let b = multiply(&a, &a);
        assert_eq!(pairing_phi(&a, &b), Err(CapelliError::DegreeMismatch(1, 2)));
    }

    #[test]
    fn gl1_capelli() {
        for d in 1..=4 {
            assert_eq!(capelli_scalar(SuperSpace::new(1, 0), d).unwrap(), Some(factorial(d)));
        }
    }
}
