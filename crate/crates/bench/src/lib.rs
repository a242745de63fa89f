//! Inputs shared by the benchmarks.

use supertgw_core::tgwdatum::GammaMatrix;
use supertgw_core::{Generator, Sign, Signature, SuperElement, ValidatedGamma};

/// `(x_1 + ∂_1 + ... + x_n + ∂_n)^k` in the given signature.
pub fn generator_sum_power(sig: &Signature, k: u32) -> SuperElement {
    let mut base = SuperElement::zero(sig);
    for i in 0..sig.n() {
        base = &base + &SuperElement::gen(sig, Generator::X(i));
        base = &base + &SuperElement::gen(sig, Generator::D(i));
    }
    let mut out = SuperElement::one(sig);
    for _ in 0..k {
        out = &out * &base;
    }
    out
}

/// The three-column example matrix with one Weyl and two Clifford rows.
pub fn composition_example() -> ValidatedGamma {
    let sig = Signature::from_bits(Sign::Minus, &[0, 1, 1]).expect("valid parity");
    GammaMatrix::new(sig, vec![vec![1, 3, 0], vec![1, 0, -1], vec![1, -1, 1]])
        .expect("well-formed")
        .validated()
        .expect("satisfies the sufficient conditions")
}

/// Superdiagonal matrix with columns `ε_j - ε_{j+1}`.
pub fn superdiagonal(sign: Sign, parity: &[u8]) -> ValidatedGamma {
    let sig = Signature::from_bits(sign, parity).expect("valid parity");
    let n = parity.len();
    let cols: Vec<Vec<i64>> = (0..n - 1)
        .map(|j| (0..n).map(|r| if r == j { 1 } else if r == j + 1 { -1 } else { 0 }).collect())
        .collect();
    GammaMatrix::from_columns(sig, &cols).expect("well-formed").validated().expect("valid")
}
