//! Normal-ordered arithmetic in the Clifford/Weyl superalgebra `A_{p|q}^±`.
//!
//! A monomial is stored as one `(a_i, b_i)` pair per index, standing for the
//! word `x_1^{a_1} ∂_1^{b_1} x_2^{a_2} ∂_2^{b_2} ⋯ x_n^{a_n} ∂_n^{b_n}`. This
//! order (indices ascending, `x` before `∂` within an index) is the normal
//! order used everywhere in the crate. Products are brought back to normal
//! order with three rewrite rules:
//!
//! 1. generators with distinct indices `i ≠ j` swap with the factor `λ_ij`;
//! 2. within one index, `∂_i x_i → 1 + λ_ii x_i ∂_i`;
//! 3. on a Clifford direction (`λ_ii = -1`), `x_i x_i → 0` and `∂_i ∂_i → 0`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::basering::BaseRingElement;
use crate::error::{Error, Result};
use crate::rational::{join_terms, signed_term, Rational};
use crate::signature::{Parity, Signature};

/// A single generator `x_i` or `∂_i` (0-based index).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    X(usize),
    D(usize),
}

impl Generator {
    pub fn index(self) -> usize {
        match self {
            Generator::X(i) | Generator::D(i) => i,
        }
    }

    pub fn dual(self) -> Generator {
        match self {
            Generator::X(i) => Generator::D(i),
            Generator::D(i) => Generator::X(i),
        }
    }
}

/// Exponent pairs `(a_i, b_i)` of a normal-ordered word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuperMonomial {
    exps: Vec<(u32, u32)>,
}

impl SuperMonomial {
    pub fn one(n: usize) -> Self {
        SuperMonomial { exps: vec![(0, 0); n] }
    }

    pub fn new(sig: &Signature, exps: Vec<(u32, u32)>) -> Result<Self> {
        let m = SuperMonomial { exps };
        m.check(sig)?;
        Ok(m)
    }

    pub fn generator(sig: &Signature, g: Generator) -> Result<Self> {
        let i = g.index();
        if i >= sig.n() {
            return Err(Error::InvalidInput(format!("generator index {} out of range 1..={}", i + 1, sig.n())));
        }
        let mut m = SuperMonomial::one(sig.n());
        match g {
            Generator::X(_) => m.exps[i].0 = 1,
            Generator::D(_) => m.exps[i].1 = 1,
        }
        Ok(m)
    }

    /// `x_j^{(k)}`: `x_j^k` for `k ≥ 0` and `∂_j^{-k}` for `k < 0`.
    pub fn power_gen(sig: &Signature, j: usize, k: i64) -> Result<Self> {
        if j >= sig.n() {
            return Err(Error::InvalidInput(format!("index {} out of range 1..={}", j + 1, sig.n())));
        }
        if sig.is_clifford(j) && k.abs() > 1 {
            return Err(Error::Nilpotent { index: j + 1, power: k });
        }
        let mut m = SuperMonomial::one(sig.n());
        let e = u32::try_from(k.unsigned_abs())
            .map_err(|_| Error::InvalidInput(format!("exponent {k} too large")))?;
        if k >= 0 {
            m.exps[j].0 = e;
        } else {
            m.exps[j].1 = e;
        }
        Ok(m)
    }

    pub fn exps(&self) -> &[(u32, u32)] {
        &self.exps
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&(a, b)| a == 0 && b == 0)
    }

    pub fn degree(&self) -> Vec<i64> {
        self.exps.iter().map(|&(a, b)| a as i64 - b as i64).collect()
    }

    /// Number of generator letters in the word.
    pub fn length(&self) -> u64 {
        self.exps.iter().map(|&(a, b)| (a + b) as u64).sum()
    }

    /// Z/2 parity of the monomial in the ambient superalgebra.
    pub fn parity(&self, sig: &Signature) -> Parity {
        let odd_letters: u64 = self
            .exps
            .iter()
            .enumerate()
            .filter(|(i, _)| sig.parity(*i) == Parity::Odd)
            .map(|(_, &(a, b))| (a + b) as u64)
            .sum();
        if odd_letters % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// The word spelled letter by letter in normal order.
    pub fn word(&self) -> Vec<Generator> {
        let mut out = Vec::new();
        for (i, &(a, b)) in self.exps.iter().enumerate() {
            out.extend(std::iter::repeat(Generator::X(i)).take(a as usize));
            out.extend(std::iter::repeat(Generator::D(i)).take(b as usize));
        }
        out
    }

    fn check(&self, sig: &Signature) -> Result<()> {
        if self.exps.len() != sig.n() {
            return Err(Error::InvalidInput(format!(
                "monomial has {} index slots but the signature has {}",
                self.exps.len(),
                sig.n()
            )));
        }
        for (i, &(a, b)) in self.exps.iter().enumerate() {
            if sig.is_clifford(i) && (a > 1 || b > 1) {
                return Err(Error::InvalidInput(format!(
                    "exponent above 1 on Clifford direction {}",
                    i + 1
                )));
            }
        }
        Ok(())
    }

    /// `x1^2*d1*x3` style rendering; empty for the unit.
    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        for (i, &(a, b)) in self.exps.iter().enumerate() {
            for (e, letter) in [(a, 'x'), (b, 'd')] {
                match e {
                    0 => {}
                    1 => parts.push(format!("{letter}{}", i + 1)),
                    _ => parts.push(format!("{letter}{}^{e}", i + 1)),
                }
            }
        }
        parts.join("*")
    }

    fn sort_key(&self) -> (Vec<i64>, &[(u32, u32)]) {
        (self.degree(), &self.exps)
    }
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    acc
}

fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, t| acc * BigInt::from(t))
}

/// Normal form of `(x^a ∂^b)(x^c ∂^d)` within a single index, as a list of
/// `((a', b'), coefficient)`.
fn single_index_product(clifford: bool, (a, b): (u32, u32), (c, d): (u32, u32)) -> Vec<((u32, u32), BigInt)> {
    if clifford {
        // ∂x = 1 - x∂, x^2 = ∂^2 = 0
        let mut out = Vec::with_capacity(2);
        if b == 1 && c == 1 {
            out.push(((a, d), BigInt::one()));
            out.push(((a + 1, d + 1), -BigInt::one()));
        } else {
            out.push(((a + c, b + d), BigInt::one()));
        }
        out.retain(|&((x, y), _)| x <= 1 && y <= 1);
        out
    } else {
        // ∂^b x^c = Σ_k C(b,k) C(c,k) k! x^{c-k} ∂^{b-k}
        (0..=b.min(c))
            .map(|k| ((a + c - k, b + d - k), binomial(b, k) * binomial(c, k) * factorial(k)))
            .collect()
    }
}

/// Normal form of the product of two normal-ordered monomials.
pub fn mono_mul(sig: &Signature, m1: &SuperMonomial, m2: &SuperMonomial) -> Result<SuperElement> {
    m1.check(sig)?;
    m2.check(sig)?;
    Ok(SuperElement { sig: sig.clone(), terms: mono_mul_terms(sig, m1, m2) })
}

fn mono_mul_terms(sig: &Signature, m1: &SuperMonomial, m2: &SuperMonomial) -> BTreeMap<SuperMonomial, Rational> {
    let n = sig.n();
    // Each block of m2 at index j travels left past the blocks of m1 at indices i > j.
    let mut negative = false;
    for j in 0..n {
        let right = (m2.exps[j].0 + m2.exps[j].1) as u64;
        if right == 0 {
            continue;
        }
        for i in (j + 1)..n {
            let left = (m1.exps[i].0 + m1.exps[i].1) as u64;
            if sig.lambda(i, j) == -1 && (left * right) % 2 == 1 {
                negative = !negative;
            }
        }
    }

    let mut partial: Vec<(Vec<(u32, u32)>, BigInt)> = vec![(Vec::with_capacity(n), BigInt::one())];
    for i in 0..n {
        let local = single_index_product(sig.is_clifford(i), m1.exps[i], m2.exps[i]);
        if local.is_empty() {
            return BTreeMap::new();
        }
        if local.len() == 1 {
            let (e, c) = &local[0];
            for (exps, coeff) in partial.iter_mut() {
                exps.push(*e);
                *coeff *= c;
            }
        } else {
            let mut next = Vec::with_capacity(partial.len() * local.len());
            for (exps, coeff) in &partial {
                for (e, c) in &local {
                    let mut v = exps.clone();
                    v.push(*e);
                    next.push((v, coeff * c));
                }
            }
            partial = next;
        }
    }

    let mut out = BTreeMap::new();
    for (exps, coeff) in partial {
        let coeff = if negative { -coeff } else { coeff };
        if !coeff.is_zero() {
            out.insert(SuperMonomial { exps }, Rational::from_integer(coeff));
        }
    }
    out
}

/// Exact-rational linear combination of normal-ordered monomials.
#[derive(Clone, PartialEq, Eq)]
pub struct SuperElement {
    sig: Signature,
    terms: BTreeMap<SuperMonomial, Rational>,
}

impl SuperElement {
    pub fn zero(sig: &Signature) -> Self {
        SuperElement { sig: sig.clone(), terms: BTreeMap::new() }
    }

    pub fn one(sig: &Signature) -> Self {
        Self::constant(sig, Rational::one())
    }

    pub fn constant(sig: &Signature, c: Rational) -> Self {
        Self::from_monomial(sig, SuperMonomial::one(sig.n()), c)
    }

    pub fn from_monomial(sig: &Signature, m: SuperMonomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SuperElement { sig: sig.clone(), terms }
    }

    pub fn from_terms<I>(sig: &Signature, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (SuperMonomial, Rational)>,
    {
        let mut out = SuperElement::zero(sig);
        for (m, c) in terms {
            m.check(sig)?;
            out.add_term(m, c);
        }
        Ok(out)
    }

    pub fn x(sig: &Signature, i: usize) -> Self {
        Self::gen(sig, Generator::X(i))
    }

    pub fn d(sig: &Signature, i: usize) -> Self {
        Self::gen(sig, Generator::D(i))
    }

    /// Panics if the index is out of range.
    pub fn gen(sig: &Signature, g: Generator) -> Self {
        let m = SuperMonomial::generator(sig, g).expect("generator index out of range");
        Self::from_monomial(sig, m, Rational::one())
    }

    /// Normal form of a word, folded left to right.
    pub fn from_word(sig: &Signature, word: &[Generator]) -> Result<Self> {
        let mut acc = SuperElement::one(sig);
        for &g in word {
            let m = SuperMonomial::generator(sig, g)?;
            acc = acc.mul_monomial_right(&m);
        }
        Ok(acc)
    }

    /// Normal form of a word, folded right to left.
    pub fn from_word_rev(sig: &Signature, word: &[Generator]) -> Result<Self> {
        let mut acc = SuperElement::one(sig);
        for &g in word.iter().rev() {
            let m = SuperMonomial::generator(sig, g)?;
            acc = acc.mul_monomial_left(&m);
        }
        Ok(acc)
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
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

    pub fn terms(&self) -> impl Iterator<Item = (&SuperMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &SuperMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The coefficient of the unit monomial.
    pub fn constant_term(&self) -> Rational {
        self.coefficient(&SuperMonomial::one(self.sig.n()))
    }

    fn add_term(&mut self, m: SuperMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m);
        match slot {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn mul_monomial_right(&self, m: &SuperMonomial) -> SuperElement {
        let mut out = SuperElement::zero(&self.sig);
        for (mono, c) in &self.terms {
            for (prod, pc) in mono_mul_terms(&self.sig, mono, m) {
                out.add_term(prod, c * pc);
            }
        }
        out
    }

    fn mul_monomial_left(&self, m: &SuperMonomial) -> SuperElement {
        let mut out = SuperElement::zero(&self.sig);
        for (mono, c) in &self.terms {
            for (prod, pc) in mono_mul_terms(&self.sig, m, mono) {
                out.add_term(prod, c * pc);
            }
        }
        out
    }

    pub fn try_add(&self, other: &SuperElement) -> Result<SuperElement> {
        self.sig.ensure_same(&other.sig)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &SuperElement) -> Result<SuperElement> {
        self.try_add(&other.scale(&-Rational::one()))
    }

    pub fn try_mul(&self, other: &SuperElement) -> Result<SuperElement> {
        self.sig.ensure_same(&other.sig)?;
        let mut out = SuperElement::zero(&self.sig);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let coeff = c1 * c2;
                for (prod, pc) in mono_mul_terms(&self.sig, m1, m2) {
                    out.add_term(prod, &coeff * pc);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> SuperElement {
        if c.is_zero() {
            return SuperElement::zero(&self.sig);
        }
        SuperElement {
            sig: self.sig.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// The anti-automorphism with `x_i ↦ ∂_i`, `∂_i ↦ x_i`: each monomial word
    /// is reversed, dualised letter by letter and renormalised.
    pub fn involution(&self) -> SuperElement {
        let mut out = SuperElement::zero(&self.sig);
        for (m, c) in &self.terms {
            let word: Vec<Generator> = m.word().into_iter().rev().map(Generator::dual).collect();
            let image = SuperElement::from_word(&self.sig, &word).expect("indices come from a valid monomial");
            for (pm, pc) in image.terms {
                out.add_term(pm, c * pc);
            }
        }
        out
    }

    /// Common `ℤ^n` degree of a nonzero homogeneous element.
    pub fn degree(&self) -> Result<Vec<i64>> {
        let mut degrees: Vec<Vec<i64>> = self.terms.keys().map(SuperMonomial::degree).collect();
        degrees.sort();
        degrees.dedup();
        match degrees.len() {
            0 => Err(Error::UndefinedDegree),
            1 => Ok(degrees.pop().unwrap()),
            _ => Err(Error::Inhomogeneous(degrees)),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree().is_ok()
    }

    /// Z/2 parity, if all monomials agree.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(|m| m.parity(&self.sig));
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    /// Degree-zero component rewritten as a polynomial in `u_i = ∂_i x_i`,
    /// using `x_i^k ∂_i^k = τ_i(u_i) τ_i^2(u_i) ⋯ τ_i^k(u_i)`.
    pub fn project_zero(&self) -> BaseRingElement {
        let mut out = BaseRingElement::zero(&self.sig);
        for (m, c) in &self.terms {
            if m.exps.iter().any(|&(a, b)| a != b) {
                continue;
            }
            let mut term = BaseRingElement::constant(&self.sig, c.clone());
            for (i, &(k, _)) in m.exps.iter().enumerate() {
                if k > 0 {
                    term = term.mul(&BaseRingElement::falling_shift(&self.sig, i, k));
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Terms sorted by `(degree, exponents)`; this is the rendering order.
    pub fn sorted_terms(&self) -> Vec<(&SuperMonomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.sort_key().cmp(&b.0.sort_key()));
        v
    }

    pub fn render(&self) -> String {
        join_terms(self.sorted_terms().into_iter().map(|(m, c)| signed_term(c, &m.render())))
    }
}

impl fmt::Display for SuperElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for SuperElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SuperElement({}; {})", self.sig, self.render())
    }
}

// Operator forms panic on signature mismatch; use the `try_*` methods for a
// `Result`.
impl<'a> Add<&'a SuperElement> for &'a SuperElement {
    type Output = SuperElement;
    fn add(self, rhs: &SuperElement) -> SuperElement {
        self.try_add(rhs).expect("signature mismatch in addition")
    }
}

impl<'a> Sub<&'a SuperElement> for &'a SuperElement {
    type Output = SuperElement;
    fn sub(self, rhs: &SuperElement) -> SuperElement {
        self.try_sub(rhs).expect("signature mismatch in subtraction")
    }
}

impl<'a> Mul<&'a SuperElement> for &'a SuperElement {
    type Output = SuperElement;
    fn mul(self, rhs: &SuperElement) -> SuperElement {
        self.try_mul(rhs).expect("signature mismatch in multiplication")
    }
}

impl Neg for &SuperElement {
    type Output = SuperElement;
    fn neg(self) -> SuperElement {
        self.scale(&-Rational::one())
    }
}
