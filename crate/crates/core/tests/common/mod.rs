//! Shared oracles and random generators for the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use supertgw_core::tgwdatum::GammaMatrix;
use supertgw_core::{
    BaseRingElement, Generator, Rational, Sign, Signature, SuperElement, SuperMonomial, ValidatedGamma,
};

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Vector in the Fock module: polynomial in the `x_i`, exponents capped at 1
/// on Clifford directions.
pub type FockVector = BTreeMap<Vec<u32>, Rational>;

fn fock_add(v: &mut FockVector, key: Vec<u32>, c: Rational) {
    let e = v.entry(key.clone()).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        v.remove(&key);
    }
}

fn swap_sign(sig: &Signature, i: usize, a: &[u32]) -> i64 {
    (0..i).map(|j| if sig.lambda(i, j) == -1 && a[j] % 2 == 1 { -1 } else { 1 }).product()
}

/// Action of one generator on the Fock module.
pub fn fock_gen(sig: &Signature, g: Generator, v: &FockVector) -> FockVector {
    let mut out = FockVector::new();
    for (a, c) in v {
        match g {
            Generator::X(i) => {
                if sig.is_clifford(i) && a[i] == 1 {
                    continue;
                }
                let mut b = a.clone();
                b[i] += 1;
                fock_add(&mut out, b, c * Rational::from_integer(swap_sign(sig, i, a).into()));
            }
            Generator::D(i) => {
                if a[i] == 0 {
                    continue;
                }
                let mut b = a.clone();
                b[i] -= 1;
                let k = swap_sign(sig, i, a) * a[i] as i64;
                fock_add(&mut out, b, c * Rational::from_integer(k.into()));
            }
        }
    }
    out
}

/// Action of an element, each monomial applied as its word right to left.
pub fn fock_apply(a: &SuperElement, v: &FockVector) -> FockVector {
    let sig = a.signature();
    let mut out = FockVector::new();
    for (m, c) in a.terms() {
        let mut w = v.clone();
        for g in m.word().into_iter().rev() {
            w = fock_gen(sig, g, &w);
        }
        for (k, x) in w {
            fock_add(&mut out, k, x * c);
        }
    }
    out
}

/// Basis vectors of total degree at most `d`.
pub fn fock_basis(sig: &Signature, d: u32) -> Vec<FockVector> {
    let n = sig.n();
    let mut keys = vec![vec![0u32; n]];
    for i in 0..n {
        let cap = if sig.is_clifford(i) { 1 } else { d };
        keys = keys
            .into_iter()
            .flat_map(|k| {
                (0..=cap).map(move |e| {
                    let mut k = k.clone();
                    k[i] = e;
                    k
                })
            })
            .filter(|k| k.iter().sum::<u32>() <= d)
            .collect();
    }
    keys.into_iter().map(|k| FockVector::from([(k, Rational::one())])).collect()
}

pub fn random_signature(r: &mut ChaCha8Rng, max_n: usize) -> Signature {
    let n = r.gen_range(1..=max_n);
    let bits: Vec<u8> = (0..n).map(|_| r.gen_range(0..=1)).collect();
    let sign = if r.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
    Signature::from_bits(sign, &bits).unwrap()
}

pub fn random_coefficient(r: &mut ChaCha8Rng) -> Rational {
    let n = r.gen_range(-3..=3i64);
    let d = r.gen_range(1..=2i64);
    if n == 0 {
        Rational::one()
    } else {
        q(n, d)
    }
}

pub fn random_monomial(sig: &Signature, r: &mut ChaCha8Rng, max_len: u32) -> SuperMonomial {
    loop {
        let exps: Vec<(u32, u32)> = (0..sig.n())
            .map(|i| {
                let cap = if sig.is_clifford(i) { 1 } else { 2 };
                (r.gen_range(0..=cap), r.gen_range(0..=cap))
            })
            .collect();
        let len: u32 = exps.iter().map(|(a, b)| a + b).sum();
        if len <= max_len {
            return SuperMonomial::new(sig, exps).unwrap();
        }
    }
}

pub fn random_element(sig: &Signature, r: &mut ChaCha8Rng, terms: usize, max_len: u32) -> SuperElement {
    let t = r.gen_range(1..=terms);
    let mut out = SuperElement::zero(sig);
    for _ in 0..t {
        let m = random_monomial(sig, r, max_len);
        out = &out + &SuperElement::from_monomial(sig, m, random_coefficient(r));
    }
    out
}

/// Random nonzero homogeneous element: monomials of one fixed degree.
pub fn random_homogeneous(sig: &Signature, r: &mut ChaCha8Rng, max_len: u32) -> SuperElement {
    loop {
        let first = random_monomial(sig, r, max_len);
        let mut out = SuperElement::from_monomial(sig, first.clone(), random_coefficient(r));
        for _ in 0..3 {
            let m = random_monomial(sig, r, max_len);
            if m.degree() == first.degree() {
                out = &out + &SuperElement::from_monomial(sig, m, random_coefficient(r));
            }
        }
        if !out.is_zero() {
            return out;
        }
    }
}

pub fn random_word(sig: &Signature, r: &mut ChaCha8Rng, max_len: usize) -> Vec<Generator> {
    let len = r.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let i = r.gen_range(0..sig.n());
            if r.gen_bool(0.5) {
                Generator::X(i)
            } else {
                Generator::D(i)
            }
        })
        .collect()
}

pub fn random_base(sig: &Signature, r: &mut ChaCha8Rng) -> BaseRingElement {
    let mut out = BaseRingElement::zero(sig);
    for _ in 0..r.gen_range(1..=4) {
        let mut term = BaseRingElement::constant(sig, random_coefficient(r));
        for i in 0..sig.n() {
            term = term.mul(&BaseRingElement::u(sig, i).pow(r.gen_range(0..=2)));
        }
        out = out.add(&term);
    }
    out
}

/// Random matrix passing validation, entries in `-2..=2` (`-1..=1` on
/// Clifford rows).
pub fn random_valid_gamma(r: &mut ChaCha8Rng, sig: &Signature, max_m: usize) -> ValidatedGamma {
    loop {
        let m = r.gen_range(1..=max_m);
        let rows: Vec<Vec<i64>> = (0..sig.n())
            .map(|j| {
                let b = if sig.is_clifford(j) { 1 } else { 2 };
                (0..m).map(|_| r.gen_range(-b..=b)).collect()
            })
            .collect();
        if let Ok(g) = GammaMatrix::new(sig.clone(), rows).unwrap().validated() {
            return g;
        }
    }
}

fn superdiagonal_columns(n: usize) -> Vec<Vec<i64>> {
    (0..n.saturating_sub(1))
        .map(|j| (0..n).map(|r| if r == j { 1 } else if r == j + 1 { -1 } else { 0 }).collect())
        .collect()
}

/// The three matrices with columns `ε_j - ε_{j+1}`, optionally followed by
/// `ε_n` or `2ε_n`.
pub fn superdiagonal_family(n: usize) -> Vec<(&'static str, Vec<Vec<i64>>)> {
    let base = superdiagonal_columns(n);
    let last = |k: i64| {
        let mut cols = base.clone();
        cols.push((0..n).map(|r| if r + 1 == n { k } else { 0 }).collect());
        cols
    };
    vec![("alpha", base.clone()), ("beta", last(1)), ("gamma", last(2))]
}

/// Matrices used across the test suites: identities, the composition
/// example, the two small support examples, and the superdiagonal family
/// under every signature with `n ≤ 3`.
pub fn corpus() -> Vec<ValidatedGamma> {
    let mut out = Vec::new();
    let mut push = |sig: Signature, rows: Vec<Vec<i64>>| {
        if let Ok(g) = GammaMatrix::new(sig, rows).and_then(|g| g.validated()) {
            out.push(g);
        }
    };
    push(Signature::from_bits(Sign::Minus, &[0, 1, 1]).unwrap(), vec![vec![1, 3, 0], vec![1, 0, -1], vec![1, -1, 1]]);
    push(Signature::from_bits(Sign::Minus, &[1]).unwrap(), vec![vec![1, -1]]);
    push(Signature::from_bits(Sign::Minus, &[1, 1]).unwrap(), vec![vec![1, 0], vec![1, -1]]);
    for sign in [Sign::Minus, Sign::Plus] {
        for n in 1..=3 {
            for mask in 0..(1u32 << n) {
                let bits: Vec<u8> = (0..n).map(|k| ((mask >> k) & 1) as u8).collect();
                let sig = Signature::from_bits(sign, &bits).unwrap();
                out_identity(&sig, &mut push);
                for (_, cols) in superdiagonal_family(n) {
                    if cols.is_empty() {
                        continue;
                    }
                    let rows = (0..n).map(|r| cols.iter().map(|c| c[r]).collect()).collect();
                    push(sig.clone(), rows);
                }
            }
        }
    }
    out
}

fn out_identity(sig: &Signature, push: &mut impl FnMut(Signature, Vec<Vec<i64>>)) {
    let n = sig.n();
    push(sig.clone(), (0..n).map(|j| (0..n).map(|i| i64::from(i == j)).collect()).collect());
}
