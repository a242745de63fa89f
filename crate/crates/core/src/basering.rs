//! The commutative ring `R_{p|q}^± = k[u_1..u_n] / (u_i^2 - u_i : λ_ii = -1)`
//! and the automorphisms `τ_i`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::rational::{int, join_terms, signed_term, Rational};
use crate::signature::Signature;
use crate::superweyl::{Generator, SuperElement};

/// Reduced polynomial in `u_1..u_n`; exponents on Clifford directions are
/// at most 1.
#[derive(Clone, PartialEq, Eq)]
pub struct BaseRingElement {
    sig: Signature,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl BaseRingElement {
    pub fn zero(sig: &Signature) -> Self {
        BaseRingElement { sig: sig.clone(), terms: BTreeMap::new() }
    }

    pub fn one(sig: &Signature) -> Self {
        Self::constant(sig, Rational::one())
    }

    pub fn constant(sig: &Signature, c: Rational) -> Self {
        let mut out = Self::zero(sig);
        out.add_term(vec![0; sig.n()], c);
        out
    }

    /// The generator `u_i` (0-based).
    pub fn u(sig: &Signature, i: usize) -> Self {
        let mut exps = vec![0; sig.n()];
        exps[i] = 1;
        let mut out = Self::zero(sig);
        out.add_term(exps, Rational::one());
        out
    }

    /// `c·u_i + s`.
    pub fn linear(sig: &Signature, i: usize, c: Rational, s: Rational) -> Self {
        Self::u(sig, i).scale(&c).add(&Self::constant(sig, s))
    }

    /// Builds a reduced element from raw exponent vectors; exponents on
    /// Clifford directions collapse to 1 (`u_i^k = u_i`).
    pub fn reduce<I>(sig: &Signature, raw: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut out = Self::zero(sig);
        for (exps, c) in raw {
            assert_eq!(exps.len(), sig.n(), "exponent vector length must match the signature");
            out.add_term(exps, c);
        }
        out
    }

    fn add_term(&mut self, mut exps: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        for (i, e) in exps.iter_mut().enumerate() {
            if *e > 1 && self.sig.is_clifford(i) {
                *e = 1;
            }
        }
        let entry = self.terms.entry(exps).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("signature mismatch in base ring addition")
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.sig.ensure_same(&other.sig)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.sig);
        }
        BaseRingElement {
            sig: self.sig.clone(),
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("signature mismatch in base ring multiplication")
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.sig.ensure_same(&other.sig)?;
        let mut out = Self::zero(&self.sig);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exps = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(exps, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(&self.sig), |acc, _| acc.mul(self))
    }

    /// Structural equality after reduction; errors on signature mismatch.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.sig.ensure_same(&other.sig)?;
        Ok(self.terms == other.terms)
    }

    /// `τ_i^k(u_i)`: `u_i - k` on a Weyl direction; on a Clifford direction
    /// `u_i` for even `k` and `1 - u_i` for odd `k`.
    pub fn tau_power_of_u(sig: &Signature, i: usize, k: i64) -> Self {
        if sig.is_clifford(i) {
            if k.rem_euclid(2) == 0 {
                Self::u(sig, i)
            } else {
                Self::linear(sig, i, int(-1), int(1))
            }
        } else {
            Self::linear(sig, i, int(1), int(-k))
        }
    }

    /// `x_i^k ∂_i^k = τ_i(u_i) τ_i^2(u_i) ⋯ τ_i^k(u_i)`.
    pub fn falling_shift(sig: &Signature, i: usize, k: u32) -> Self {
        (1..=k as i64).fold(Self::one(sig), |acc, l| acc.mul(&Self::tau_power_of_u(sig, i, l)))
    }

    /// `∂_i^k x_i^k = u_i τ_i^{-1}(u_i) ⋯ τ_i^{-(k-1)}(u_i)`.
    pub fn rising_shift(sig: &Signature, i: usize, k: u32) -> Self {
        (0..k as i64).fold(Self::one(sig), |acc, l| acc.mul(&Self::tau_power_of_u(sig, i, -l)))
    }

    /// Applies `σ = τ_1^{e_1} ⋯ τ_n^{e_n}`.
    pub fn tau_apply(&self, e: &AutomorphismExponents) -> Self {
        assert_eq!(e.0.len(), self.sig.n(), "automorphism exponent length must match the signature");
        let images: Vec<Self> = (0..self.sig.n()).map(|i| Self::tau_power_of_u(&self.sig, i, e.0[i])).collect();
        let mut out = Self::zero(&self.sig);
        for (exps, c) in &self.terms {
            let mut term = Self::constant(&self.sig, c.clone());
            for (i, &d) in exps.iter().enumerate() {
                if d > 0 {
                    term = term.mul(&images[i].pow(d));
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// `ι`: `u_i ↦ ∂_i x_i`, normalised in the ambient superalgebra.
    pub fn iota_embed(&self) -> SuperElement {
        let sig = &self.sig;
        let us: Vec<SuperElement> = (0..sig.n())
            .map(|i| SuperElement::from_word(sig, &[Generator::D(i), Generator::X(i)]).expect("index in range"))
            .collect();
        let mut out = SuperElement::zero(sig);
        for (exps, c) in &self.terms {
            let mut term = SuperElement::constant(sig, c.clone());
            for (i, &d) in exps.iter().enumerate() {
                for _ in 0..d {
                    term = &term * &us[i];
                }
            }
            out = &out + &term;
        }
        out
    }

    /// Evaluates at a rational point.
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (x, &d) in point.iter().zip(exps) {
                for _ in 0..d {
                    term *= x;
                }
            }
            acc += term;
        }
        acc
    }

    pub fn render(&self) -> String {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            da.cmp(&db).then_with(|| b.cmp(a))
        });
        join_terms(terms.into_iter().map(|(exps, c)| {
            let body: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &d)| d > 0)
                .map(|(i, &d)| if d == 1 { format!("u{}", i + 1) } else { format!("u{}^{d}", i + 1) })
                .collect();
            signed_term(c, &body.join("*"))
        }))
    }
}

impl fmt::Display for BaseRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for BaseRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BaseRingElement({}; {})", self.sig, self.render())
    }
}

/// Exponent vector `e` of `σ = τ_1^{e_1} ⋯ τ_n^{e_n}`. The `τ_i` commute, so
/// composition is componentwise addition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AutomorphismExponents(pub Vec<i64>);

impl AutomorphismExponents {
    pub fn identity(n: usize) -> Self {
        AutomorphismExponents(vec![0; n])
    }

    pub fn single(n: usize, i: usize, k: i64) -> Self {
        let mut e = vec![0; n];
        e[i] = k;
        AutomorphismExponents(e)
    }

    pub fn compose(&self, other: &Self) -> Self {
        AutomorphismExponents(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn inverse(&self) -> Self {
        AutomorphismExponents(self.0.iter().map(|a| -a).collect())
    }

    pub fn scaled(&self, k: i64) -> Self {
        AutomorphismExponents(self.0.iter().map(|a| a * k).collect())
    }

    /// Whether `σ` acts trivially on `R` for the given signature.
    pub fn is_identity_on(&self, sig: &Signature) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &e)| if sig.is_clifford(i) { e.rem_euclid(2) == 0 } else { e == 0 })
    }

    /// `τ1^2*τ3^-1`, or `id`.
    pub fn render(&self) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| if e == 1 { format!("τ{}", i + 1) } else { format!("τ{}^{e}", i + 1) })
            .collect();
        if parts.is_empty() {
            "id".to_string()
        } else {
            parts.join("*")
        }
    }
}
