//! Matrices `γ`, the TGW datum they determine, the consistency equations and
//! the representation `φ` of `𝒜(γ)^±` in `A_{p|q}^±`.
//!
//! The abstract TGW algebra is never built as a quotient. Homogeneous
//! elements are carried as their `φ`-image together with their formal `ℤ^m`
//! degree; on each graded component `φ` is injective, so this loses nothing
//! for homogeneous computations.

use std::fmt;
use std::ops::Deref;

use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::basering::{AutomorphismExponents, BaseRingElement};
use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use crate::signature::{Parity, Sign, Signature};
use crate::superweyl::{SuperElement, SuperMonomial};

/// Integer `n × m` matrix whose rows are indexed by the generator pairs of
/// the ambient signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaMatrix {
    sig: Signature,
    rows: Vec<Vec<i64>>,
    m: usize,
}

impl GammaMatrix {
    pub fn new(sig: Signature, rows: Vec<Vec<i64>>) -> Result<Self> {
        if rows.len() != sig.n() {
            return Err(Error::InvalidInput(format!(
                "matrix has {} rows but the parity vector has {} entries",
                rows.len(),
                sig.n()
            )));
        }
        let m = rows[0].len();
        if let Some(k) = rows.iter().position(|r| r.len() != m) {
            return Err(Error::InvalidInput(format!(
                "row {} has {} entries, expected {m}",
                k + 1,
                rows[k].len()
            )));
        }
        Ok(GammaMatrix { sig, rows, m })
    }

    /// Builds the matrix from its columns.
    pub fn from_columns(sig: Signature, columns: &[Vec<i64>]) -> Result<Self> {
        let n = sig.n();
        if let Some(c) = columns.iter().position(|c| c.len() != n) {
            return Err(Error::InvalidInput(format!("column {} does not have {n} entries", c + 1)));
        }
        let rows = (0..n).map(|j| columns.iter().map(|c| c[j]).collect()).collect();
        Ok(GammaMatrix { sig, rows, m: columns.len() })
    }

    pub fn identity(sig: Signature) -> Self {
        let n = sig.n();
        let rows = (0..n).map(|j| (0..n).map(|i| i64::from(i == j)).collect()).collect();
        GammaMatrix { sig, rows, m: n }
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// `γ_{ji}`, row `j`, column `i` (0-based).
    pub fn entry(&self, j: usize, i: usize) -> i64 {
        self.rows[j][i]
    }

    pub fn column(&self, i: usize) -> Vec<i64> {
        self.rows.iter().map(|r| r[i]).collect()
    }

    /// `γ(g)_j = Σ_i γ_{ji} g_i`.
    pub fn apply(&self, g: &[i64]) -> Vec<i64> {
        assert_eq!(g.len(), self.m, "vector length must equal the number of columns");
        self.rows.iter().map(|r| r.iter().zip(g).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn validate(&self) -> ValidationReport {
        validate_gamma(self)
    }

    pub fn validated(self) -> Result<ValidatedGamma> {
        let report = validate_gamma(&self);
        if report.is_valid() {
            Ok(ValidatedGamma(self))
        } else {
            Err(Error::InvalidGamma(report))
        }
    }
}

/// A matrix that passed [`validate_gamma`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidatedGamma(GammaMatrix);

impl Deref for ValidatedGamma {
    type Target = GammaMatrix;
    fn deref(&self) -> &GammaMatrix {
        &self.0
    }
}

impl ValidatedGamma {
    pub fn into_inner(self) -> GammaMatrix {
        self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// Condition (i): an entry of absolute value ≥ 2 in a Clifford row.
    CliffordEntry { row: usize, column: usize, value: i64 },
    /// Condition (ii): columns `a < b` share a row with a positive product
    /// and no Clifford row separates them with a negative product.
    ColumnPair { column_a: usize, column_b: usize, row: usize },
    ZeroColumn { column: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::CliffordEntry { row, column, value } => {
                write!(f, "condition (i): Clifford row {row} has entry {value} in column {column}")
            }
            Violation::ColumnPair { column_a, column_b, row } => write!(
                f,
                "condition (ii): columns {column_a} and {column_b} have a positive product in row {row} \
                 and no Clifford row with a negative product"
            ),
            Violation::ZeroColumn { column } => write!(f, "column {column} is zero"),
        }
    }
}

/// Indices in a report are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("valid");
        }
        for (k, v) in self.violations.iter().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

pub fn validate_gamma(gamma: &GammaMatrix) -> ValidationReport {
    let sig = gamma.signature();
    let (n, m) = (gamma.n(), gamma.m());
    let mut violations = Vec::new();

    for i in 0..m {
        if (0..n).all(|j| gamma.entry(j, i) == 0) {
            violations.push(Violation::ZeroColumn { column: i + 1 });
        }
    }
    for j in 0..n {
        if !sig.is_clifford(j) {
            continue;
        }
        for i in 0..m {
            let v = gamma.entry(j, i);
            if v.abs() >= 2 {
                violations.push(Violation::CliffordEntry { row: j + 1, column: i + 1, value: v });
            }
        }
    }
    for a in 0..m {
        for b in (a + 1)..m {
            let separated = (0..n).any(|k| sig.is_clifford(k) && gamma.entry(k, a) * gamma.entry(k, b) < 0);
            if separated {
                continue;
            }
            if let Some(k) = (0..n).find(|&k| gamma.entry(k, a) * gamma.entry(k, b) > 0) {
                violations.push(Violation::ColumnPair { column_a: a + 1, column_b: b + 1, row: k + 1 });
            }
        }
    }
    ValidationReport { valid: violations.is_empty(), violations }
}

/// `t_i = Π_j u_{ji}`, where the factor for row `j` is `∂_j^k x_j^k` when
/// `γ_{ji} = k > 0` and `x_j^k ∂_j^k` when `γ_{ji} = -k < 0`, both written in
/// `u_j`. On Weyl rows these are `(u_j+k-1)⋯(u_j+1)u_j` and
/// `(u_j-k)⋯(u_j-1)`; on a Clifford row with `γ_{ji} = -1` the factor is
/// `x_j ∂_j = 1 - u_j`.
pub fn derive_t(gamma: &ValidatedGamma, i: usize) -> BaseRingElement {
    let sig = gamma.signature();
    let mut t = BaseRingElement::one(sig);
    for j in 0..gamma.n() {
        let g = gamma.entry(j, i);
        let factor = match g.signum() {
            1 => BaseRingElement::rising_shift(sig, j, g as u32),
            -1 => BaseRingElement::falling_shift(sig, j, g.unsigned_abs() as u32),
            _ => continue,
        };
        t = t.mul(&factor);
    }
    t
}

/// `σ_i = τ_1^{γ_{1i}} ⋯ τ_n^{γ_{ni}}`.
pub fn derive_sigma(gamma: &ValidatedGamma, i: usize) -> AutomorphismExponents {
    AutomorphismExponents(gamma.column(i))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MuData {
    /// `μ_ij ∈ {±1}`; the diagonal carries the formula value but is unused.
    pub mu: Vec<Vec<i8>>,
    /// `p(i) = Σ_k γ_{ki} p(k) mod 2`.
    pub pparity: Vec<u8>,
    /// `p'(i) = Σ_k γ_{ki} mod 2`.
    pub pprime: Vec<u8>,
}

/// `μ_ij = (∓1)^{p'(i)p'(j)} (-1)^{p(i)p(j)}`, with `∓1 = +1` for `A^-` and
/// `-1` for `A^+`.
pub fn derive_mu(gamma: &ValidatedGamma) -> MuData {
    let sig = gamma.signature();
    let m = gamma.m();
    let pparity: Vec<u8> = (0..m)
        .map(|i| {
            let s: i64 = (0..gamma.n()).map(|k| gamma.entry(k, i) * sig.parity(k).bit() as i64).sum();
            s.rem_euclid(2) as u8
        })
        .collect();
    let pprime: Vec<u8> = (0..m)
        .map(|i| (0..gamma.n()).map(|k| gamma.entry(k, i)).sum::<i64>().rem_euclid(2) as u8)
        .collect();
    let mu = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut v: i8 = 1;
                    if sig.sign() == Sign::Plus && pprime[i] * pprime[j] == 1 {
                        v = -v;
                    }
                    if pparity[i] * pparity[j] == 1 {
                        v = -v;
                    }
                    v
                })
                .collect()
        })
        .collect();
    MuData { mu, pparity, pprime }
}

/// The derived datum `(t, σ, μ, p, p')` of `𝒜(γ)^±`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TgwDatum {
    pub sig: Signature,
    pub t: Vec<BaseRingElement>,
    pub sigma: Vec<AutomorphismExponents>,
    pub mu: Vec<Vec<i8>>,
    pub pparity: Vec<u8>,
    pub pprime: Vec<u8>,
}

impl TgwDatum {
    pub fn derive(gamma: &ValidatedGamma) -> Self {
        let m = gamma.m();
        let MuData { mu, pparity, pprime } = derive_mu(gamma);
        TgwDatum {
            sig: gamma.signature().clone(),
            t: (0..m).map(|i| derive_t(gamma, i)).collect(),
            sigma: (0..m).map(|i| derive_sigma(gamma, i)).collect(),
            mu,
            pparity,
            pprime,
        }
    }

    /// The datum `(R, τ, u, λ)` realising `A_{p|q}^±` itself.
    pub fn weyl_clifford(sig: &Signature) -> Self {
        let n = sig.n();
        TgwDatum {
            sig: sig.clone(),
            t: (0..n).map(|i| BaseRingElement::u(sig, i)).collect(),
            sigma: (0..n).map(|i| AutomorphismExponents::single(n, i, 1)).collect(),
            mu: (0..n).map(|i| (0..n).map(|j| sig.lambda(i, j)).collect()).collect(),
            pparity: sig.parity_bits(),
            pprime: vec![1; n],
        }
    }

    pub fn m(&self) -> usize {
        self.t.len()
    }

    /// Compares `(t, σ, μ)` with off-diagonal `μ` only.
    pub fn same_tgw_data(&self, other: &TgwDatum) -> bool {
        let m = self.m();
        self.sig == other.sig
            && self.t == other.t
            && self.sigma == other.sigma
            && other.m() == m
            && (0..m).all(|i| (0..m).all(|j| i == j || self.mu[i][j] == other.mu[i][j]))
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for i in 0..self.m() {
            out.push_str(&format!("t{} = {}\n", i + 1, self.t[i]));
        }
        for i in 0..self.m() {
            out.push_str(&format!("sigma{} = {}\n", i + 1, self.sigma[i].render()));
        }
        out.push_str("mu =\n");
        for row in &self.mu {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>2}")).collect();
            out.push_str(&format!("  [{}]\n", cells.join(" ")));
        }
        out.push_str(&format!("p  = {:?}\n", self.pparity));
        out.push_str(&format!("p' = {:?}\n", self.pprime));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairInstance {
    pub i: usize,
    pub j: usize,
    pub pass: bool,
    /// `LHS - RHS` in `R`.
    pub residual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripleInstance {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub pass: bool,
    pub residual: String,
}

/// Evaluation of the two families of consistency equations. This is a
/// diagnostic: for non-regular data the equations are not known to decide
/// consistency.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub label: &'static str,
    pub all_pass: bool,
    pub pairs: Vec<PairInstance>,
    pub triples: Vec<TripleInstance>,
}

/// Checks `σ_iσ_j(t_i t_j) = μ_ij μ_ji σ_i(t_i) σ_j(t_j)` for ordered pairs
/// `i ≠ j` and `σ_iσ_k(t_j) t_j = σ_i(t_j) σ_k(t_j)` for ordered triples of
/// distinct indices. Indices in the report are 1-based.
pub fn consistency_check(datum: &TgwDatum) -> ConsistencyReport {
    let m = datum.m();
    let pairs_idx: Vec<(usize, usize)> =
        (0..m).flat_map(|i| (0..m).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    let triples_idx: Vec<(usize, usize, usize)> = (0..m)
        .flat_map(|i| (0..m).flat_map(move |j| (0..m).map(move |k| (i, j, k))))
        .filter(|&(i, j, k)| i != j && j != k && i != k)
        .collect();

    let pairs: Vec<PairInstance> = pairs_idx
        .par_iter()
        .map(|&(i, j)| {
            let (t, s) = (&datum.t, &datum.sigma);
            let sij = s[i].compose(&s[j]);
            let lhs = t[i].mul(&t[j]).tau_apply(&sij);
            let factor = int((datum.mu[i][j] * datum.mu[j][i]) as i64);
            let rhs = t[i].tau_apply(&s[i]).mul(&t[j].tau_apply(&s[j])).scale(&factor);
            let residual = lhs.sub(&rhs);
            PairInstance { i: i + 1, j: j + 1, pass: residual.is_zero(), residual: residual.render() }
        })
        .collect();

    let triples: Vec<TripleInstance> = triples_idx
        .par_iter()
        .map(|&(i, j, k)| {
            let (t, s) = (&datum.t, &datum.sigma);
            let lhs = t[j].tau_apply(&s[i].compose(&s[k])).mul(&t[j]);
            let rhs = t[j].tau_apply(&s[i]).mul(&t[j].tau_apply(&s[k]));
            let residual = lhs.sub(&rhs);
            TripleInstance { i: i + 1, j: j + 1, k: k + 1, pass: residual.is_zero(), residual: residual.render() }
        })
        .collect();

    let all_pass = pairs.iter().all(|p| p.pass) && triples.iter().all(|t| t.pass);
    ConsistencyReport { label: "DIAGNOSTIC", all_pass, pairs, triples }
}

/// A generator `X_i` or `Y_i` of `𝒜(γ)^±` (0-based column).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X(usize),
    Y(usize),
}

impl Letter {
    pub fn column(self) -> usize {
        match self {
            Letter::X(i) | Letter::Y(i) => i,
        }
    }

    pub fn sign(self) -> i64 {
        match self {
            Letter::X(_) => 1,
            Letter::Y(_) => -1,
        }
    }

    /// Parses `X3` / `Y1` (1-based).
    pub fn parse(text: &str) -> Result<Letter> {
        let text = text.trim();
        let (head, tail) = text.split_at(text.chars().next().map_or(0, char::len_utf8));
        let idx: usize = tail
            .parse()
            .ok()
            .filter(|&k: &usize| k >= 1)
            .ok_or_else(|| Error::Parse(format!("bad letter '{text}', expected X<k> or Y<k>")))?;
        match head {
            "X" | "x" => Ok(Letter::X(idx - 1)),
            "Y" | "y" => Ok(Letter::Y(idx - 1)),
            _ => Err(Error::Parse(format!("bad letter '{text}', expected X<k> or Y<k>"))),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::X(i) => write!(f, "X{}", i + 1),
            Letter::Y(i) => write!(f, "Y{}", i + 1),
        }
    }
}

/// `φ(X_i) = x_1^{(γ_{1i})} ⋯ x_n^{(γ_{ni})}`, already in normal order.
pub fn phi_x_monomial(gamma: &ValidatedGamma, i: usize) -> SuperMonomial {
    let exps = gamma
        .column(i)
        .into_iter()
        .map(|k| if k >= 0 { (k as u32, 0) } else { (0, k.unsigned_abs() as u32) })
        .collect();
    SuperMonomial::new(gamma.signature(), exps).expect("validated columns respect the Clifford bound")
}

/// `φ(X_i)`, or `φ(Y_i) = φ(X_i)^*`.
pub fn phi_generator(gamma: &ValidatedGamma, letter: Letter) -> Result<SuperElement> {
    let i = letter.column();
    if i >= gamma.m() {
        return Err(Error::InvalidInput(format!("column {} out of range 1..={}", i + 1, gamma.m())));
    }
    let x = SuperElement::from_monomial(gamma.signature(), phi_x_monomial(gamma, i), Rational::one());
    Ok(match letter {
        Letter::X(_) => x,
        Letter::Y(_) => x.involution(),
    })
}

/// A homogeneous element of `𝒜(γ)^±`: formal degree in `ℤ^m` plus its image
/// under `φ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedElement {
    pub degree: Vec<i64>,
    pub image: SuperElement,
}

impl GradedElement {
    pub fn involution(&self) -> GradedElement {
        GradedElement { degree: self.degree.iter().map(|d| -d).collect(), image: self.image.involution() }
    }

    pub fn scale(&self, c: &Rational) -> GradedElement {
        GradedElement { degree: self.degree.clone(), image: self.image.scale(c) }
    }

    pub fn mul(&self, other: &GradedElement) -> Result<GradedElement> {
        if self.degree.len() != other.degree.len() {
            return Err(Error::InvalidInput("graded elements come from different matrices".into()));
        }
        Ok(GradedElement {
            degree: self.degree.iter().zip(&other.degree).map(|(a, b)| a + b).collect(),
            image: self.image.try_mul(&other.image)?,
        })
    }

    /// Sum of two elements of the same degree.
    pub fn add(&self, other: &GradedElement) -> Result<GradedElement> {
        if self.degree != other.degree {
            return Err(Error::InvalidInput("cannot add graded elements of different degrees".into()));
        }
        Ok(GradedElement { degree: self.degree.clone(), image: self.image.try_add(&other.image)? })
    }
}

/// Degree and `φ`-image of a word in the `X_i`, `Y_i`. A zero image means the
/// word vanishes in `𝒜(γ)^±`.
pub fn eval_word(gamma: &ValidatedGamma, word: &[Letter]) -> Result<GradedElement> {
    let m = gamma.m();
    let mut degree = vec![0i64; m];
    let mut image = SuperElement::one(gamma.signature());
    for &letter in word {
        let g = phi_generator(gamma, letter)?;
        degree[letter.column()] += letter.sign();
        image = image.try_mul(&g)?;
        if image.is_zero() {
            // keep accumulating the degree only
            continue;
        }
    }
    Ok(GradedElement { degree, image })
}

/// The gradation form: component of `ab` in formal degree zero, as an element of `R`.
/// Zero unless the formal degrees are opposite, even when `γ` sends their sum to zero.
pub fn gradation_pair(a: &GradedElement, b: &GradedElement) -> Result<BaseRingElement> {
    let prod = a.mul(b)?;
    if prod.degree.iter().any(|&d| d != 0) {
        return Ok(BaseRingElement::zero(prod.image.signature()));
    }
    Ok(prod.image.project_zero())
}

/// Lie-style parity of a column under the ambient parities, `Σ_k γ_{ki} p(k)`.
pub fn column_parity(gamma: &GammaMatrix, i: usize) -> Parity {
    let s: i64 = (0..gamma.n()).map(|k| gamma.entry(k, i) * gamma.signature().parity(k).bit() as i64).sum();
    if s.rem_euclid(2) == 0 {
        Parity::Even
    } else {
        Parity::Odd
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(sign: Sign, bits: &[u8]) -> Signature {
        Signature::from_bits(sign, bits).unwrap()
    }

    fn ex43() -> GammaMatrix {
        GammaMatrix::new(sig(Sign::Minus, &[0, 1, 1]), vec![vec![1, 3, 0], vec![1, 0, -1], vec![1, -1, 1]]).unwrap()
    }

    #[test]
    fn validation_examples() {
        for s in [Sign::Plus, Sign::Minus] {
            assert!(GammaMatrix::identity(sig(s, &[0, 1, 1])).validate().is_valid());
        }
        assert!(ex43().validate().is_valid());
        let bad = GammaMatrix::new(sig(Sign::Minus, &[1]), vec![vec![2]]).unwrap().validate();
        assert_eq!(bad.violations, vec![Violation::CliffordEntry { row: 1, column: 1, value: 2 }]);
        let bad = GammaMatrix::new(sig(Sign::Minus, &[0]), vec![vec![1, 1]]).unwrap().validate();
        assert_eq!(bad.violations, vec![Violation::ColumnPair { column_a: 1, column_b: 2, row: 1 }]);
        let bad = GammaMatrix::new(sig(Sign::Minus, &[0, 0]), vec![vec![1, 0], vec![0, 0]]).unwrap().validate();
        assert_eq!(bad.violations, vec![Violation::ZeroColumn { column: 2 }]);
    }

    #[test]
    fn shape_errors() {
        assert!(GammaMatrix::new(sig(Sign::Minus, &[0, 0]), vec![vec![1]]).is_err());
        assert!(GammaMatrix::new(sig(Sign::Minus, &[0, 0]), vec![vec![1], vec![1, 2]]).is_err());
    }

    #[test]
    fn refusal_references_validation() {
        let err = GammaMatrix::new(sig(Sign::Minus, &[1]), vec![vec![2]]).unwrap().validated().unwrap_err();
        assert!(matches!(err, Error::InvalidGamma(ref r) if !r.is_valid()));
        assert!(err.to_string().contains("condition (i)"));
    }

    #[test]
    fn t_factors() {
        let t = |k: i64| {
            let g = GammaMatrix::new(sig(Sign::Minus, &[0]), vec![vec![k]]).unwrap().validated().unwrap();
            derive_t(&g, 0).render()
        };
        assert_eq!(t(2), "u1 + u1^2"); // (u1+1)u1
        assert_eq!(t(-1), "-1 + u1");
        assert_eq!(t(-2), "2 - 3*u1 + u1^2"); // (u1-2)(u1-1)
        let odd = GammaMatrix::new(sig(Sign::Minus, &[1]), vec![vec![-1]]).unwrap().validated().unwrap();
        assert_eq!(derive_t(&odd, 0).render(), "1 - u1"); // x1 d1 on a Clifford row
    }

    #[test]
    fn t_zero_entry_contributes_one() {
        let s = sig(Sign::Minus, &[0, 0]);
        let g = GammaMatrix::new(s, vec![vec![1], vec![0]]).unwrap().validated().unwrap();
        assert_eq!(derive_t(&g, 0).render(), "u1");
    }

    #[test]
    fn identity_recovers_weyl_clifford() {
        for s in [Sign::Plus, Sign::Minus] {
            let sg = sig(s, &[0, 1, 1]);
            let g = GammaMatrix::identity(sg.clone()).validated().unwrap();
            let d = TgwDatum::derive(&g);
            assert!(d.same_tgw_data(&TgwDatum::weyl_clifford(&sg)));
        }
    }

    #[test]
    fn gl_superdiagonal_mu() {
        // α for p = 2, q = 1 in A^-: p'(i) = 0, only the column crossing the parity boundary is odd.
        let sg = sig(Sign::Minus, &[0, 0, 1]);
        let g = GammaMatrix::from_columns(sg, &[vec![1, -1, 0], vec![0, 1, -1]]).unwrap().validated().unwrap();
        let mu = derive_mu(&g);
        assert_eq!(mu.pprime, vec![0, 0]);
        assert_eq!(mu.pparity, vec![0, 1]);
        assert_eq!(mu.mu[0][1], 1);
        assert_eq!(mu.mu[1][0], 1);
    }

    #[test]
    fn consistency_trivial_for_single_column() {
        let g = GammaMatrix::identity(sig(Sign::Minus, &[1])).validated().unwrap();
        let r = consistency_check(&TgwDatum::derive(&g));
        assert!(r.pairs.is_empty() && r.triples.is_empty() && r.all_pass);
        assert_eq!(r.label, "DIAGNOSTIC");
    }

    #[test]
    fn phi_examples() {
        let sg = sig(Sign::Minus, &[0, 1]);
        let id = GammaMatrix::identity(sg.clone()).validated().unwrap();
        assert_eq!(phi_generator(&id, Letter::X(1)).unwrap(), SuperElement::x(&sg, 1));
        assert_eq!(phi_generator(&id, Letter::Y(1)).unwrap(), SuperElement::d(&sg, 1));
        let g = GammaMatrix::from_columns(sg.clone(), &[vec![1, -1]]).unwrap().validated().unwrap();
        assert_eq!(phi_generator(&g, Letter::X(0)).unwrap().render(), "x1*d2");
        let sq = GammaMatrix::from_columns(sig(Sign::Minus, &[1, 0]), &[vec![0, 2]]).unwrap().validated().unwrap();
        assert_eq!(phi_generator(&sq, Letter::X(0)).unwrap().render(), "x2^2");
        assert!(phi_generator(&sq, Letter::X(3)).is_err());
    }

    #[test]
    fn letters_parse() {
        assert_eq!(Letter::parse("X3").unwrap(), Letter::X(2));
        assert_eq!(Letter::parse("y1").unwrap(), Letter::Y(0));
        assert!(Letter::parse("Z1").is_err());
        assert!(Letter::parse("X0").is_err());
        assert!(Letter::parse("").is_err());
    }

    #[test]
    fn eval_word_tgw_relations() {
        let g = ex43().validated().unwrap();
        let d = TgwDatum::derive(&g);
        for i in 0..3 {
            let yx = eval_word(&g, &[Letter::Y(i), Letter::X(i)]).unwrap();
            assert_eq!(yx.degree, vec![0, 0, 0]);
            assert_eq!(yx.image, d.t[i].iota_embed());
            let xy = eval_word(&g, &[Letter::X(i), Letter::Y(i)]).unwrap();
            assert_eq!(xy.image, d.t[i].tau_apply(&d.sigma[i]).iota_embed());
        }
    }

    #[test]
    fn gradation_pair_examples() {
        let g = ex43().validated().unwrap();
        let d = TgwDatum::derive(&g);
        let x = eval_word(&g, &[Letter::X(0)]).unwrap();
        let y = eval_word(&g, &[Letter::Y(0)]).unwrap();
        assert_eq!(gradation_pair(&y, &x).unwrap(), d.t[0]);
        let x2 = eval_word(&g, &[Letter::X(1)]).unwrap();
        assert!(gradation_pair(&x, &x2).unwrap().is_zero());
    }

    #[test]
    fn gradation_pair_uses_formal_degree() {
        // γ(-1,-1) = 0 here, yet the formal degree is nonzero
        let g = GammaMatrix::new(sig(Sign::Minus, &[1]), vec![vec![-1, 1]]).unwrap().validated().unwrap();
        let a = eval_word(&g, &[Letter::Y(1), Letter::Y(0)]).unwrap();
        let b = eval_word(&g, &[Letter::Y(1), Letter::X(1)]).unwrap();
        assert!(!a.mul(&b).unwrap().image.project_zero().is_zero());
        assert!(gradation_pair(&a, &b).unwrap().is_zero());
    }
}
