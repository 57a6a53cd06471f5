//! Affine maps from highest weights to arguments of interpolation polynomials.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::borel::{BorelClass, BorelDescriptor, DeltaEpsSeq, WeightVector};
use crate::error::{CapelliError, Result};
use crate::linalg::RationalMatrix;
use crate::rational::{fmt_rational, frac, half, int, Rational};
use crate::weights::{rho0_glm2n, rho_b, weyl_vector, DiagWeight};

/// `x ↦ matrix · x + offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap {
    pub matrix: RationalMatrix,
    pub offset: Vec<Rational>,
}

impl AffineMap {
    pub fn new(matrix: RationalMatrix, offset: Vec<Rational>) -> Result<Self> {
        if matrix.rows() != offset.len() {
            return Err(CapelliError::DimensionMismatch {
                expected: matrix.rows(),
                actual: offset.len(),
            });
        }
        Ok(AffineMap { matrix, offset })
    }

    pub fn apply(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        let mut v = self.matrix.mul_vec(x)?;
        for (a, b) in v.iter_mut().zip(&self.offset) {
            *a += b;
        }
        Ok(v)
    }

    pub fn apply_weight(&self, w: &WeightVector) -> Result<Vec<Rational>> {
        self.apply(&w.coords())
    }

    pub fn apply_diag(&self, w: &DiagWeight) -> Result<Vec<Rational>> {
        self.apply(&w.coords())
    }

    pub fn to_json(&self) -> AffineMapJson {
        AffineMapJson {
            matrix: self
                .matrix
                .to_rows()
                .iter()
                .map(|r| r.iter().map(fmt_rational).collect())
                .collect(),
            offset: self.offset.iter().map(fmt_rational).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineMapJson {
    pub matrix: Vec<Vec<String>>,
    pub offset: Vec<String>,
}

/// `Γ(a | b) = (a_1/2, …, a_m/2 | (b_1+b_2)/2, …, (b_{2n−1}+b_{2n})/2)`.
pub fn gamma(w: &WeightVector) -> Vec<Rational> {
    let h = half();
    w.eps
        .iter()
        .map(|a| a * &h)
        .chain(w.delta.chunks(2).map(|c| (&c[0] + &c[1]) * &h))
        .collect()
}

/// The matrix of `−Γ`, an `(m+n)×(m+2n)` matrix.
pub fn m0(m: usize, n: usize) -> RationalMatrix {
    let mut a = RationalMatrix::zeros(m + n, m + 2 * n);
    let mh = -half();
    for i in 0..m {
        a[(i, i)] = mh.clone();
    }
    for k in 0..n {
        a[(m + k, m + 2 * k)] = mh.clone();
        a[(m + k, m + 2 * k + 1)] = mh.clone();
    }
    a
}

/// `X₀ = M₀ ρ₀`.
pub fn x0(m: usize, n: usize) -> Vec<Rational> {
    m0(m, n)
        .mul_vec(&rho0_glm2n(m, n).coords())
        .expect("dimensions agree")
}

/// `τ₀(x) = M₀ x + X₀ = −Γ(x + ρ₀)`.
pub fn m0_and_x0(m: usize, n: usize) -> AffineMap {
    AffineMap {
        matrix: m0(m, n),
        offset: x0(m, n),
    }
}

/// `E_i = (m + 1 − 2n − 2i)/4`.
pub fn e_const(m: usize, n: usize, i: usize) -> Rational {
    frac(m as i64 + 1 - 2 * n as i64 - 2 * i as i64, 4)
}

/// `F_k = (m + 2 + 2n − 4k)/2`.
pub fn f_const(m: usize, n: usize, k: usize) -> Rational {
    frac(m as i64 + 2 + 2 * n as i64 - 4 * k as i64, 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    /// `M₀ + [0 | A]` with `A_{2k} = −A_{2k−1}`.
    C,
    /// Members of `C` with `M r_odd(𝔟,k) = 0` for `k ∈ T_𝔟`.
    CB,
    /// Members of `C` with `M δ_{2k−1} = ½e_{m−j_{2k}} − e_{m+k}` for `k ∈ T_𝔟`.
    CBFull,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFamilySpec {
    pub m: usize,
    pub n: usize,
    pub family: Family,
    pub borel: Option<BorelDescriptor>,
}

impl MatrixFamilySpec {
    pub fn c(m: usize, n: usize) -> Self {
        MatrixFamilySpec {
            m,
            n,
            family: Family::C,
            borel: None,
        }
    }

    pub fn c_b(b: &BorelDescriptor) -> Self {
        MatrixFamilySpec {
            m: b.m(),
            n: b.n(),
            family: Family::CB,
            borel: Some(b.clone()),
        }
    }

    pub fn c_b_full(b: &BorelDescriptor) -> Self {
        MatrixFamilySpec {
            m: b.m(),
            n: b.n(),
            family: Family::CBFull,
            borel: Some(b.clone()),
        }
    }

    fn constrained_ks(&self) -> Result<Vec<usize>> {
        match self.family {
            Family::C => Ok(Vec::new()),
            _ => Ok(self.borel_required()?.t_set()),
        }
    }

    fn borel_required(&self) -> Result<&BorelDescriptor> {
        self.borel
            .as_ref()
            .ok_or_else(|| CapelliError::InvalidBorel("family requires a Borel".into()))
    }

    /// Values of `k` whose column `A_{2k−1}` is unconstrained.
    pub fn free_parameters(&self) -> Result<Vec<usize>> {
        let fixed = self.constrained_ks()?;
        Ok((1..=self.n).filter(|k| !fixed.contains(k)).collect())
    }

    /// The `A_{2k−1}` column for a constrained `k`.
    fn fixed_column(&self, k: usize) -> Result<Vec<Rational>> {
        let b = self.borel_required()?;
        let (m, n) = (self.m, self.n);
        match self.family {
            Family::C => Err(CapelliError::Internal("C has no fixed columns".into())),
            Family::CB => {
                let gap = b.j(2 * k - 1) - b.j(2 * k);
                if gap == 0 {
                    return Err(CapelliError::Internal(format!("k = {k} has zero gap")));
                }
                let v = m0(m, n).mul_vec(&b.r_odd(k)?.coords())?;
                let s = -Rational::from_integer((gap as i64).into()).recip();
                Ok(v.iter().map(|x| x * &s).collect())
            }
            Family::CBFull => {
                let mut col = vec![Rational::zero(); m + n];
                col[m - b.j(2 * k) - 1] += half();
                col[m + k - 1] -= half();
                Ok(col)
            }
        }
    }

    /// Membership test.
    pub fn contains(&self, mat: &RationalMatrix) -> Result<bool> {
        let (m, n) = (self.m, self.n);
        if mat.rows() != m + n || mat.cols() != m + 2 * n {
            return Ok(false);
        }
        let base = m0(m, n);
        for c in 0..m {
            if mat.column(c) != base.column(c) {
                return Ok(false);
            }
        }
        for k in 0..n {
            let a1: Vec<Rational> = mat
                .column(m + 2 * k)
                .iter()
                .zip(base.column(m + 2 * k))
                .map(|(x, y)| x - y)
                .collect();
            let a2: Vec<Rational> = mat
                .column(m + 2 * k + 1)
                .iter()
                .zip(base.column(m + 2 * k + 1))
                .map(|(x, y)| x - y)
                .collect();
            if a1.iter().zip(&a2).any(|(x, y)| x != &-y.clone()) {
                return Ok(false);
            }
        }
        let Some(b) = &self.borel else {
            return Ok(self.family == Family::C);
        };
        for k in b.t_set() {
            let ok = match self.family {
                Family::C => true,
                Family::CB => mat.mul_vec(&b.r_odd(k)?.coords())?.iter().all(Zero::is_zero),
                Family::CBFull => {
                    let mut want = vec![Rational::zero(); m + n];
                    want[m - b.j(2 * k) - 1] += half();
                    want[m + k - 1] -= int(1);
                    mat.column(m + 2 * k - 2) == want
                }
            };
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The member with the given free columns `A_{2k−1}` (keyed by `k`).
    pub fn member_with(&self, free: &[(usize, Vec<Rational>)]) -> Result<RationalMatrix> {
        let (m, n) = (self.m, self.n);
        let mut mat = m0(m, n);
        let fixed = self.constrained_ks()?;
        let put = |mat: &mut RationalMatrix, k: usize, a: &[Rational]| {
            for r in 0..m + n {
                mat[(r, m + 2 * k - 2)] += &a[r];
                mat[(r, m + 2 * k - 1)] -= &a[r];
            }
        };
        for &k in &fixed {
            let a = self.fixed_column(k)?;
            put(&mut mat, k, &a);
        }
        for (k, a) in free {
            if fixed.contains(k) || *k == 0 || *k > n {
                return Err(CapelliError::NotInFamily(format!("column k = {k} is not free")));
            }
            if a.len() != m + n {
                return Err(CapelliError::DimensionMismatch {
                    expected: m + n,
                    actual: a.len(),
                });
            }
            put(&mut mat, *k, a);
        }
        Ok(mat)
    }
}

/// The member with all unconstrained `A` columns zero.
pub fn canonical_member(spec: &MatrixFamilySpec) -> Result<RationalMatrix> {
    let mat = spec.member_with(&[])?;
    if !spec.contains(&mat)? {
        return Err(CapelliError::Internal("canonical member fails membership".into()));
    }
    Ok(mat)
}

fn ensure_member(spec: &MatrixFamilySpec, mat: &RationalMatrix) -> Result<()> {
    if spec.contains(mat)? {
        Ok(())
    } else {
        Err(CapelliError::NotInFamily(format!("{:?}", spec.family)))
    }
}

/// `τ_𝔟(x) = M x + M₀ ρ_𝔟` for very even `𝔟` and `M ∈ C`.
pub fn tau_very_even(b: &BorelDescriptor, mat: &RationalMatrix) -> Result<AffineMap> {
    if b.classify().class != BorelClass::VeryEven {
        return Err(CapelliError::WrongBorelClass("very even"));
    }
    ensure_member(&MatrixFamilySpec::c(b.m(), b.n()), mat)?;
    let offset = m0(b.m(), b.n()).mul_vec(&rho_b(b).coords())?;
    AffineMap::new(mat.clone(), offset)
}

/// `τ_𝔟(x) = M x + X_{𝔟_e}` with `X_{𝔟_e} = M₀ ρ_{𝔟_e}`, for relatively even
/// `𝔟` and `M ∈ C_𝔟`.
pub fn tau_rel_even(b: &BorelDescriptor, mat: &RationalMatrix) -> Result<AffineMap> {
    if b.classify().class == BorelClass::General {
        return Err(CapelliError::WrongBorelClass("relatively even"));
    }
    tau_rel_even_unchecked(b, mat)
}

/// The relatively-even construction without the class guard. For a general
/// Borel this is not a valid eigenvalue map; it exists to exhibit that.
pub fn tau_rel_even_unchecked(b: &BorelDescriptor, mat: &RationalMatrix) -> Result<AffineMap> {
    ensure_member(&MatrixFamilySpec::c_b(b), mat)?;
    let offset = m0(b.m(), b.n()).mul_vec(&rho_b(&b.even_core()).coords())?;
    AffineMap::new(mat.clone(), offset)
}

/// `τ_𝔟^full(x) = M x + M r_𝔟 + X₀` for `M ∈ C_𝔟^full`.
pub fn tau_full(b: &BorelDescriptor, mat: &RationalMatrix) -> Result<AffineMap> {
    ensure_member(&MatrixFamilySpec::c_b_full(b), mat)?;
    let mut offset = mat.mul_vec(&b.r_b().coords())?;
    for (o, x) in offset.iter_mut().zip(x0(b.m(), b.n())) {
        *o += x;
    }
    AffineMap::new(mat.clone(), offset)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MapChoice {
    Tau0,
    VeryEven,
    RelEven,
    Full,
}

impl std::str::FromStr for MapChoice {
    type Err = CapelliError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tau0" => Ok(MapChoice::Tau0),
            "std" | "very_even" | "veryeven" => Ok(MapChoice::VeryEven),
            "releven" | "rel_even" | "tau_rel_even" => Ok(MapChoice::RelEven),
            "full" | "tau_full" => Ok(MapChoice::Full),
            _ => Err(CapelliError::Parse(format!("unknown map `{s}`"))),
        }
    }
}

/// The map of the requested kind built on the canonical family member.
pub fn canonical_map(b: &BorelDescriptor, choice: MapChoice) -> Result<AffineMap> {
    let (m, n) = (b.m(), b.n());
    match choice {
        MapChoice::Tau0 => Ok(m0_and_x0(m, n)),
        MapChoice::VeryEven => tau_very_even(b, &m0(m, n)),
        MapChoice::RelEven => tau_rel_even(b, &canonical_member(&MatrixFamilySpec::c_b(b))?),
        MapChoice::Full => tau_full(b, &canonical_member(&MatrixFamilySpec::c_b_full(b))?),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// `τ_{𝔟,1}(x, y) = −x̃ − ρ̃_{𝔟₁}` and `τ_{𝔟,2}(x, y) = ỹ + ρ̃_{𝔟₂}`.
pub fn tau_diag(b1: &DeltaEpsSeq, b2: &DeltaEpsSeq, side: Side) -> Result<AffineMap> {
    let (m, n) = (b1.m(), b1.num_delta());
    if (b2.m(), b2.num_delta()) != (m, n) {
        return Err(CapelliError::DimensionMismatch {
            expected: m + n,
            actual: b2.m() + b2.num_delta(),
        });
    }
    let d = m + n;
    let mut mat = RationalMatrix::zeros(d, 2 * d);
    let offset = match side {
        Side::Left => {
            for i in 0..d {
                mat[(i, i)] = int(-1);
            }
            (-&weyl_vector(b1)).coords()
        }
        Side::Right => {
            for i in 0..d {
                mat[(i, d + i)] = int(1);
            }
            weyl_vector(b2).coords()
        }
    };
    AffineMap::new(mat, offset)
}

/// `τ₀(x, y) = ỹ + ρ̃₀` for the standard pair `𝔟^op ⊕ 𝔟`.
pub fn tau0_diag(m: usize, n: usize) -> AffineMap {
    tau_diag(
        &DeltaEpsSeq::opposite_standard(m, n),
        &DeltaEpsSeq::standard(m, n),
        Side::Right,
    )
    .expect("standard pair")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_rational_list;

    fn q(s: &str) -> Vec<Rational> {
        parse_rational_list(s).unwrap()
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma(&rho0_glm2n(2, 1)), q("1/4,3/4,-1"));
        assert_eq!(gamma(&WeightVector::zero(2, 2)), q("0,0,0"));
        let (r, s, t) = (3, 2, 5);
        assert_eq!(
            gamma(&WeightVector::from_ints(&[-2 * r, -2 * s], &[-t, -t])),
            vec![int(-r), int(-s), int(-t)]
        );
    }

    #[test]
    fn m0_shape_and_x0() {
        assert_eq!(x0(2, 1), q("-1/4,-3/4,1"));
        let a = m0(2, 2);
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(a[(i, j)], if i == j { -half() } else { int(0) });
            }
        }
        for i in 0..2 {
            for j in 0..4 {
                let want = if j == 2 * i || j == 2 * i + 1 { -half() } else { int(0) };
                assert_eq!(a[(2 + i, 2 + j)], want);
            }
        }
        // τ₀ agrees with −Γ(x + ρ₀)
        let x = WeightVector::from_ints(&[3, -1], &[2, 7]);
        let lhs = m0_and_x0(2, 1).apply_weight(&x).unwrap();
        let rhs: Vec<Rational> = gamma(&(&x + &rho0_glm2n(2, 1))).iter().map(|v| -v).collect();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn canonical_members() {
        let b = BorelDescriptor::new(2, 1, vec![1, 1]).unwrap();
        assert_eq!(canonical_member(&MatrixFamilySpec::c(2, 1)).unwrap(), m0(2, 1));
        let cb = canonical_member(&MatrixFamilySpec::c_b(&b)).unwrap();
        let a1: Vec<Rational> = cb.column(2).iter().zip(m0(2, 1).column(2)).map(|(x, y)| x - y).collect();
        assert_eq!(a1, q("-1/4,-1/4,1/2"));
        let full = canonical_member(&MatrixFamilySpec::c_b_full(&b)).unwrap();
        let want = RationalMatrix::from_rows(vec![
            q("-1/2,0,0,0"),
            q("0,-1/2,1/2,-1/2"),
            q("0,0,-1,0"),
        ])
        .unwrap();
        assert_eq!(full, want);
        assert!(MatrixFamilySpec::c(2, 1).contains(&full).unwrap());
        assert!(!MatrixFamilySpec::c_b(&b).contains(&full).unwrap());
    }

    #[test]
    fn full_offset_example() {
        let b = BorelDescriptor::new(2, 1, vec![1, 1]).unwrap();
        let t = canonical_map(&b, MapChoice::Full).unwrap();
        assert_eq!(t.offset, q("1/4,3/4,-1"));
        let op = BorelDescriptor::opposite_standard(2, 1);
        assert_eq!(canonical_map(&op, MapChoice::Full).unwrap(), m0_and_x0(2, 1));
        assert_eq!(canonical_map(&op, MapChoice::VeryEven).unwrap(), m0_and_x0(2, 1));
    }

    #[test]
    fn class_guards() {
        let b = BorelDescriptor::new(2, 1, vec![1, 1]).unwrap();
        assert_eq!(
            canonical_map(&b, MapChoice::RelEven),
            Err(CapelliError::WrongBorelClass("relatively even"))
        );
        assert_eq!(
            tau_very_even(&b, &m0(2, 1)),
            Err(CapelliError::WrongBorelClass("very even"))
        );
        let re = BorelDescriptor::new(1, 1, vec![1]).unwrap();
        let t = canonical_map(&re, MapChoice::RelEven).unwrap();
        assert_eq!(t.offset, x0(1, 1));
    }

    #[test]
    fn constants() {
        assert_eq!(e_const(2, 1, 1), frac(-1, 4));
        assert_eq!(f_const(2, 1, 1), int(1));
        for (m, n) in [(1, 1), (2, 1), (2, 2), (3, 2)] {
            let ef: Vec<Rational> = (1..=m)
                .map(|i| e_const(m, n, i))
                .chain((1..=n).map(|k| f_const(m, n, k)))
                .collect();
            assert_eq!(x0(m, n), ef);
        }
    }
}
