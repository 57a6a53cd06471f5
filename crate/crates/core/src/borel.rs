//! Borel subalgebras containing the diagonal Cartan, encoded as δε sequences.
//!
//! [`DeltaEpsSeq`] is an arbitrary total order on `ε_1..ε_m, δ_1..δ_N`.
//! [`BorelDescriptor`] is the decreasing case for `gl(m|2n)`, stored by its
//! ℓ-vector.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{CapelliError, Result};
use crate::rational::{int, serde_qvec, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Symbol {
    /// `ε_i`, 1-based.
    Eps(usize),
    /// `δ_k`, 1-based.
    Delta(usize),
}

impl Symbol {
    pub fn is_odd_with(self, other: Symbol) -> bool {
        matches!(
            (self, other),
            (Symbol::Eps(_), Symbol::Delta(_)) | (Symbol::Delta(_), Symbol::Eps(_))
        )
    }

    fn parse(tok: &str) -> Result<Symbol> {
        let t = tok.trim();
        let bad = || CapelliError::Parse(format!("bad δε symbol `{tok}`"));
        let mut chars = t.chars();
        let head = chars.next().ok_or_else(bad)?;
        let idx: usize = chars.as_str().trim_start_matches('_').parse().map_err(|_| bad())?;
        if idx == 0 {
            return Err(bad());
        }
        match head {
            'e' | 'E' | 'ε' => Ok(Symbol::Eps(idx)),
            'd' | 'D' | 'δ' => Ok(Symbol::Delta(idx)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Eps(i) => write!(f, "ε{i}"),
            Symbol::Delta(k) => write!(f, "δ{k}"),
        }
    }
}

/// A weight `Σ a_i ε_i + Σ b_k δ_k` in the basis order `ε_1..ε_m δ_1..δ_N`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightVector {
    #[serde(with = "serde_qvec")]
    pub eps: Vec<Rational>,
    #[serde(with = "serde_qvec")]
    pub delta: Vec<Rational>,
}

impl WeightVector {
    pub fn zero(m: usize, nd: usize) -> Self {
        WeightVector {
            eps: vec![Rational::zero(); m],
            delta: vec![Rational::zero(); nd],
        }
    }

    pub fn new(eps: Vec<Rational>, delta: Vec<Rational>) -> Self {
        WeightVector { eps, delta }
    }

    pub fn from_ints(eps: &[i64], delta: &[i64]) -> Self {
        WeightVector {
            eps: eps.iter().map(|&v| int(v)).collect(),
            delta: delta.iter().map(|&v| int(v)).collect(),
        }
    }

    pub fn unit(m: usize, nd: usize, s: Symbol) -> Self {
        let mut w = Self::zero(m, nd);
        *w.coeff_mut(s) = Rational::one();
        w
    }

    pub fn m(&self) -> usize {
        self.eps.len()
    }

    pub fn num_delta(&self) -> usize {
        self.delta.len()
    }

    pub fn coeff(&self, s: Symbol) -> &Rational {
        match s {
            Symbol::Eps(i) => &self.eps[i - 1],
            Symbol::Delta(k) => &self.delta[k - 1],
        }
    }

    pub fn coeff_mut(&mut self, s: Symbol) -> &mut Rational {
        match s {
            Symbol::Eps(i) => &mut self.eps[i - 1],
            Symbol::Delta(k) => &mut self.delta[k - 1],
        }
    }

    /// Coordinates in the order `ε_1..ε_m δ_1..δ_N`.
    pub fn coords(&self) -> Vec<Rational> {
        self.eps.iter().chain(&self.delta).cloned().collect()
    }

    pub fn from_coords(m: usize, coords: &[Rational]) -> Self {
        WeightVector {
            eps: coords[..m].to_vec(),
            delta: coords[m..].to_vec(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        WeightVector {
            eps: self.eps.iter().map(|v| v * c).collect(),
            delta: self.delta.iter().map(|v| v * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.eps.iter().chain(&self.delta).all(Zero::is_zero)
    }

    /// The supersymmetric form with `(ε_i, ε_i) = 1`, `(δ_k, δ_k) = −1`.
    pub fn form(&self, other: &Self) -> Rational {
        let e: Rational = self.eps.iter().zip(&other.eps).map(|(a, b)| a * b).sum();
        let d: Rational = self.delta.iter().zip(&other.delta).map(|(a, b)| a * b).sum();
        e - d
    }

    /// Membership in `𝔞*`: `δ_{2k−1}` and `δ_{2k}` carry equal coefficients.
    pub fn in_a_star(&self) -> bool {
        self.delta.chunks(2).all(|c| c.len() == 2 && c[0] == c[1])
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.eps.iter().map(|q| q.to_string()).collect();
        let d: Vec<String> = self.delta.iter().map(|q| q.to_string()).collect();
        write!(f, "({} | {})", e.join(", "), d.join(", "))
    }
}

impl<'a> Add for &'a WeightVector {
    type Output = WeightVector;

    fn add(self, rhs: &'a WeightVector) -> WeightVector {
        assert_eq!((self.m(), self.num_delta()), (rhs.m(), rhs.num_delta()));
        WeightVector {
            eps: self.eps.iter().zip(&rhs.eps).map(|(a, b)| a + b).collect(),
            delta: self.delta.iter().zip(&rhs.delta).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub for &'a WeightVector {
    type Output = WeightVector;

    fn sub(self, rhs: &'a WeightVector) -> WeightVector {
        assert_eq!((self.m(), self.num_delta()), (rhs.m(), rhs.num_delta()));
        WeightVector {
            eps: self.eps.iter().zip(&rhs.eps).map(|(a, b)| a - b).collect(),
            delta: self.delta.iter().zip(&rhs.delta).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &WeightVector {
    type Output = WeightVector;

    fn neg(self) -> WeightVector {
        self.scale(&-Rational::one())
    }
}

/// A total order on `ε_1..ε_m, δ_1..δ_N`, i.e. a Borel subalgebra of
/// `gl(m|N)` containing the diagonal Cartan.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DeltaEpsSeq {
    m: usize,
    num_delta: usize,
    symbols: Vec<Symbol>,
}

impl DeltaEpsSeq {
    pub fn new(m: usize, num_delta: usize, symbols: Vec<Symbol>) -> Result<Self> {
        let mut seen_e = vec![false; m];
        let mut seen_d = vec![false; num_delta];
        for s in &symbols {
            let slot = match *s {
                Symbol::Eps(i) if (1..=m).contains(&i) => &mut seen_e[i - 1],
                Symbol::Delta(k) if (1..=num_delta).contains(&k) => &mut seen_d[k - 1],
                _ => {
                    return Err(CapelliError::InvalidBorel(format!(
                        "symbol {s} out of range for gl({m}|{num_delta})"
                    )))
                }
            };
            if *slot {
                return Err(CapelliError::InvalidBorel(format!("symbol {s} repeated")));
            }
            *slot = true;
        }
        if symbols.len() != m + num_delta {
            return Err(CapelliError::InvalidBorel(format!(
                "expected {} symbols, got {}",
                m + num_delta,
                symbols.len()
            )));
        }
        Ok(DeltaEpsSeq {
            m,
            num_delta,
            symbols,
        })
    }

    /// Parses `"d2,e2,e1,d1"` (also accepts `δ`/`ε`).
    pub fn parse(s: &str, m: usize, num_delta: usize) -> Result<Self> {
        let symbols = s
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(Symbol::parse)
            .collect::<Result<Vec<_>>>()?;
        Self::new(m, num_delta, symbols)
    }

    /// `ε_1 … ε_m δ_1 … δ_N`.
    pub fn standard(m: usize, num_delta: usize) -> Self {
        let symbols = (1..=m)
            .map(Symbol::Eps)
            .chain((1..=num_delta).map(Symbol::Delta))
            .collect();
        DeltaEpsSeq {
            m,
            num_delta,
            symbols,
        }
    }

    /// `δ_N … δ_1 ε_m … ε_1`.
    pub fn opposite_standard(m: usize, num_delta: usize) -> Self {
        let mut s = Self::standard(m, num_delta);
        s.symbols.reverse();
        s
    }

    pub fn reversed(&self) -> Self {
        let mut s = self.clone();
        s.symbols.reverse();
        s
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn num_delta(&self) -> usize {
        self.num_delta
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// Parity pattern: `true` at positions holding a δ.
    pub fn pattern(&self) -> Vec<bool> {
        self.symbols
            .iter()
            .map(|s| matches!(s, Symbol::Delta(_)))
            .collect()
    }

    /// Same parity pattern with both index families increasing left to right.
    pub fn increasing_core(&self) -> Self {
        self.core(true)
    }

    /// Same parity pattern with both index families decreasing left to right.
    pub fn decreasing_core(&self) -> Self {
        self.core(false)
    }

    fn core(&self, increasing: bool) -> Self {
        let (mut e, mut d) = if increasing { (1, 1) } else { (self.m, self.num_delta) };
        let symbols = self
            .pattern()
            .into_iter()
            .map(|is_delta| {
                let s = if is_delta { Symbol::Delta(d) } else { Symbol::Eps(e) };
                match (is_delta, increasing) {
                    (true, true) => d += 1,
                    (true, false) => d = d.saturating_sub(1),
                    (false, true) => e += 1,
                    (false, false) => e = e.saturating_sub(1),
                }
                s
            })
            .collect();
        DeltaEpsSeq {
            m: self.m,
            num_delta: self.num_delta,
            symbols,
        }
    }

    pub fn is_increasing(&self) -> bool {
        *self == self.increasing_core()
    }

    pub fn is_decreasing(&self) -> bool {
        *self == self.decreasing_core()
    }

    /// Every total order on the `m + N` symbols.
    pub fn enumerate_all(m: usize, num_delta: usize) -> Vec<Self> {
        use itertools::Itertools;
        let base = Self::standard(m, num_delta).symbols;
        base.iter()
            .copied()
            .permutations(base.len())
            .map(|symbols| DeltaEpsSeq {
                m,
                num_delta,
                symbols,
            })
            .collect()
    }
}

impl fmt::Display for DeltaEpsSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for DeltaEpsSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BorelClass {
    VeryEven,
    RelativelyEven,
    General,
}

impl fmt::Display for BorelClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BorelClass::VeryEven => "very even",
            BorelClass::RelativelyEven => "relatively even",
            BorelClass::General => "general",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub class: BorelClass,
    /// `T_𝔟 = {k : j_{2k} < j_{2k−1}}`, increasing.
    pub t_set: Vec<usize>,
}

/// A decreasing Borel subalgebra of `gl(m|2n)`, given by
/// `ℓ_1 ≤ … ≤ ℓ_m` with `ℓ_i ∈ [0, 2n]` the number of δs right of `ε_i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BorelDescriptor {
    m: usize,
    n: usize,
    ell: Vec<usize>,
}

impl BorelDescriptor {
    pub fn new(m: usize, n: usize, ell: Vec<usize>) -> Result<Self> {
        if ell.len() != m {
            return Err(CapelliError::InvalidBorel(format!(
                "ℓ-vector {ell:?} must have {m} entries"
            )));
        }
        if ell.windows(2).any(|w| w[0] > w[1]) {
            return Err(CapelliError::InvalidBorel(format!(
                "ℓ-vector {ell:?} is not weakly increasing"
            )));
        }
        if ell.iter().any(|&l| l > 2 * n) {
            return Err(CapelliError::InvalidBorel(format!(
                "ℓ-vector {ell:?} has an entry above {}",
                2 * n
            )));
        }
        Ok(BorelDescriptor { m, n, ell })
    }

    /// `𝔟^op`, the sequence `δ_{2n} … δ_1 ε_m … ε_1`.
    pub fn opposite_standard(m: usize, n: usize) -> Self {
        BorelDescriptor {
            m,
            n,
            ell: vec![0; m],
        }
    }

    /// Parses a comma-separated ℓ-vector (`"1,1"`).
    pub fn parse_ell(s: &str, m: usize, n: usize) -> Result<Self> {
        let ell = s
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| CapelliError::Parse(format!("bad ℓ-vector `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(m, n, ell)
    }

    pub fn from_sequence(seq: &DeltaEpsSeq, n: usize) -> Result<Self> {
        if seq.num_delta() != 2 * n {
            return Err(CapelliError::InvalidBorel(format!(
                "sequence has {} deltas, expected {}",
                seq.num_delta(),
                2 * n
            )));
        }
        if !seq.is_decreasing() {
            return Err(CapelliError::InvalidBorel(format!("{seq} is not decreasing")));
        }
        let m = seq.m();
        let syms = seq.symbols();
        let mut ell = vec![0; m];
        for (pos, s) in syms.iter().enumerate() {
            if let Symbol::Eps(i) = *s {
                ell[i - 1] = syms[pos + 1..]
                    .iter()
                    .filter(|t| matches!(t, Symbol::Delta(_)))
                    .count();
            }
        }
        Self::new(m, n, ell)
    }

    pub fn parse_sequence(s: &str, m: usize, n: usize) -> Result<Self> {
        Self::from_sequence(&DeltaEpsSeq::parse(s, m, 2 * n)?, n)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ell(&self) -> &[usize] {
        &self.ell
    }

    /// `ℓ_i`, 1-based.
    pub fn ell_at(&self, i: usize) -> usize {
        self.ell[i - 1]
    }

    /// `j_k = #{i : ℓ_i ≥ k}`, 1-based; zero outside `1..=2n`.
    pub fn j(&self, k: usize) -> usize {
        if k == 0 || k > 2 * self.n {
            return 0;
        }
        self.ell.iter().filter(|&&l| l >= k).count()
    }

    pub fn j_vector(&self) -> Vec<usize> {
        (1..=2 * self.n).map(|k| self.j(k)).collect()
    }

    /// The decreasing δε sequence: for `k = 2n` down to `0`, the εs with
    /// `ℓ_i = k` in decreasing index order, then `δ_k`.
    pub fn delta_epsilon_sequence(&self) -> DeltaEpsSeq {
        let mut symbols = Vec::with_capacity(self.m + 2 * self.n);
        for k in (0..=2 * self.n).rev() {
            for i in (1..=self.m).rev() {
                if self.ell[i - 1] == k {
                    symbols.push(Symbol::Eps(i));
                }
            }
            if k >= 1 {
                symbols.push(Symbol::Delta(k));
            }
        }
        DeltaEpsSeq {
            m: self.m,
            num_delta: 2 * self.n,
            symbols,
        }
    }

    fn weight_zero(&self) -> WeightVector {
        WeightVector::zero(self.m, 2 * self.n)
    }

    /// `𝒢_𝔟`: rows `i = m` down to `1`, then `δ_1 − ε_i, …, δ_{ℓ_i} − ε_i`.
    pub fn generic_roots(&self) -> Vec<WeightVector> {
        let mut out = Vec::new();
        for i in (1..=self.m).rev() {
            for k in 1..=self.ell[i - 1] {
                let mut a = self.weight_zero();
                a.delta[k - 1] = Rational::one();
                a.eps[i - 1] = -Rational::one();
                out.push(a);
            }
        }
        out
    }

    /// `r_𝔟 = −Σ ℓ_i ε_i + Σ j_k δ_k`.
    pub fn r_b(&self) -> WeightVector {
        WeightVector {
            eps: self.ell.iter().map(|&l| int(-(l as i64))).collect(),
            delta: (1..=2 * self.n).map(|k| int(self.j(k) as i64)).collect(),
        }
    }

    pub fn t_set(&self) -> Vec<usize> {
        (1..=self.n)
            .filter(|&k| self.j(2 * k) < self.j(2 * k - 1))
            .collect()
    }

    pub fn classify(&self) -> Classification {
        let class = if self.ell.iter().all(|l| l % 2 == 0) {
            BorelClass::VeryEven
        } else if (1..=self.n).all(|k| self.j(2 * k - 1) - self.j(2 * k) <= 1) {
            BorelClass::RelativelyEven
        } else {
            BorelClass::General
        };
        Classification {
            class,
            t_set: self.t_set(),
        }
    }

    pub fn is_very_even(&self) -> bool {
        self.classify().class == BorelClass::VeryEven
    }

    pub fn is_relatively_even(&self) -> bool {
        self.classify().class != BorelClass::General
    }

    /// `𝔟_e` with `ℓ_{i,𝔟_e} = 2⌊ℓ_i / 2⌋`.
    pub fn even_core(&self) -> BorelDescriptor {
        BorelDescriptor {
            m: self.m,
            n: self.n,
            ell: self.ell.iter().map(|l| 2 * (l / 2)).collect(),
        }
    }

    /// `(j_{2k−1} − j_{2k}) δ_{2k−1} − Σ_{i = m−j_{2k−1}+1}^{m−j_{2k}} ε_i`.
    pub fn r_odd(&self, k: usize) -> Result<WeightVector> {
        if !self.t_set().contains(&k) {
            return Err(CapelliError::NotInT(k));
        }
        let (hi, lo) = (self.j(2 * k - 1), self.j(2 * k));
        let mut w = self.weight_zero();
        w.delta[2 * k - 2] = int((hi - lo) as i64);
        for i in (self.m - hi + 1)..=(self.m - lo) {
            w.eps[i - 1] = -Rational::one();
        }
        Ok(w)
    }

    /// All decreasing Borels of `gl(m|2n)`, ℓ-vectors in lexicographic order.
    pub fn enumerate(m: usize, n: usize) -> Vec<BorelDescriptor> {
        fn rec(m: usize, top: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == m {
                out.push(cur.clone());
                return;
            }
            for v in lo..=top {
                cur.push(v);
                rec(m, top, v, cur, out);
                cur.pop();
            }
        }
        let mut all = Vec::new();
        rec(m, 2 * n, 0, &mut Vec::new(), &mut all);
        all.into_iter()
            .map(|ell| BorelDescriptor { m, n, ell })
            .collect()
    }

    /// `"1,1"`.
    pub fn key(&self) -> String {
        self.ell
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for BorelDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ℓ=({})", self.key())
    }
}

impl fmt::Debug for BorelDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self, self.delta_epsilon_sequence())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(m: usize, n: usize, ell: &[usize]) -> BorelDescriptor {
        BorelDescriptor::new(m, n, ell.to_vec()).unwrap()
    }

    #[test]
    fn sequences() {
        assert_eq!(b(2, 1, &[0, 0]).delta_epsilon_sequence().to_string(), "δ2δ1ε2ε1");
        assert_eq!(b(2, 1, &[1, 1]).delta_epsilon_sequence().to_string(), "δ2ε2ε1δ1");
        assert_eq!(b(2, 1, &[2, 2]).delta_epsilon_sequence().to_string(), "ε2ε1δ2δ1");
        assert_eq!(
            BorelDescriptor::parse_sequence("d2,e2,e1,d1", 2, 1).unwrap(),
            b(2, 1, &[1, 1])
        );
        assert!(BorelDescriptor::parse_sequence("d1,e2,e1,d2", 2, 1).is_err());
    }

    #[test]
    fn roots_and_r() {
        let bb = b(2, 1, &[1, 1]);
        assert_eq!(
            bb.generic_roots(),
            vec![
                WeightVector::from_ints(&[0, -1], &[1, 0]),
                WeightVector::from_ints(&[-1, 0], &[1, 0]),
            ]
        );
        assert_eq!(bb.r_b(), WeightVector::from_ints(&[-1, -1], &[2, 0]));
        assert!(BorelDescriptor::opposite_standard(2, 1).generic_roots().is_empty());
        assert!(BorelDescriptor::opposite_standard(2, 1).r_b().is_zero());
        let one = b(1, 1, &[2]);
        assert_eq!(
            one.generic_roots(),
            vec![
                WeightVector::from_ints(&[-1], &[1, 0]),
                WeightVector::from_ints(&[-1], &[0, 1]),
            ]
        );
        assert_eq!(one.r_b(), WeightVector::from_ints(&[-2], &[1, 1]));
    }

    #[test]
    fn classification() {
        let c = b(2, 1, &[2, 2]).classify();
        assert_eq!((c.class, c.t_set), (BorelClass::VeryEven, vec![]));
        let c = b(2, 1, &[1, 1]).classify();
        assert_eq!((c.class, c.t_set), (BorelClass::General, vec![1]));
        let c = b(1, 1, &[1]).classify();
        assert_eq!((c.class, c.t_set), (BorelClass::RelativelyEven, vec![1]));
    }

    #[test]
    fn even_cores_and_odd_parts() {
        assert_eq!(b(2, 1, &[1, 1]).even_core(), b(2, 1, &[0, 0]));
        assert_eq!(b(2, 1, &[2, 2]).even_core(), b(2, 1, &[2, 2]));
        assert_eq!(b(2, 1, &[1, 2]).even_core(), b(2, 1, &[0, 2]));
        assert_eq!(
            b(2, 1, &[1, 1]).r_odd(1).unwrap(),
            WeightVector::from_ints(&[-1, -1], &[2, 0])
        );
        assert_eq!(
            b(1, 1, &[1]).r_odd(1).unwrap(),
            WeightVector::from_ints(&[-1], &[1, 0])
        );
        assert_eq!(
            b(2, 2, &[3, 3]).r_odd(2).unwrap(),
            WeightVector::from_ints(&[-1, -1], &[0, 0, 2, 0])
        );
        assert_eq!(b(2, 1, &[2, 2]).r_odd(1), Err(CapelliError::NotInT(1)));
    }

    #[test]
    fn enumeration_count() {
        assert_eq!(BorelDescriptor::enumerate(2, 1).len(), 6);
        assert_eq!(BorelDescriptor::enumerate(2, 2).len(), 15);
        assert_eq!(BorelDescriptor::enumerate(3, 3).len(), 84);
        assert_eq!(DeltaEpsSeq::enumerate_all(2, 1).len(), 6);
    }

    #[test]
    fn cores() {
        let s = DeltaEpsSeq::parse("d1,e2,e1", 2, 1).unwrap();
        assert_eq!(s.increasing_core().to_string(), "δ1ε1ε2");
        assert_eq!(s.decreasing_core().to_string(), "δ1ε2ε1");
        assert!(s.is_decreasing());
        assert!(DeltaEpsSeq::standard(2, 2).is_increasing());
    }
}
