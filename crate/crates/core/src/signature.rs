//! Sign variant and parity vector of an ambient superalgebra `A_{p|q}^±`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    /// Clifford-like variant `A^+`.
    Plus,
    /// Weyl-like variant `A^-`.
    Minus,
}

impl Sign {
    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Plus => "plus",
            Sign::Minus => "minus",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: u8) -> Result<Self> {
        match bit {
            0 => Ok(Parity::Even),
            1 => Ok(Parity::Odd),
            other => Err(Error::InvalidInput(format!("parity must be 0 or 1, got {other}"))),
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn add(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Sign variant plus a parity for each of the `n` generator pairs.
///
/// Cloning is cheap; the parity vector is shared.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    sign: Sign,
    parity: Arc<[Parity]>,
}

impl Signature {
    pub fn new(sign: Sign, parity: Vec<Parity>) -> Result<Self> {
        if parity.is_empty() {
            return Err(Error::InvalidInput("signature needs at least one generator pair".into()));
        }
        Ok(Signature { sign, parity: parity.into() })
    }

    /// Indices `1..=even` even, the remaining `odd` indices odd.
    pub fn with_counts(sign: Sign, even: usize, odd: usize) -> Result<Self> {
        let mut parity = vec![Parity::Even; even];
        parity.extend(std::iter::repeat(Parity::Odd).take(odd));
        Signature::new(sign, parity)
    }

    pub fn from_bits(sign: Sign, bits: &[u8]) -> Result<Self> {
        let parity = bits.iter().map(|&b| Parity::from_bit(b)).collect::<Result<Vec<_>>>()?;
        Signature::new(sign, parity)
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn n(&self) -> usize {
        self.parity.len()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parity[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parity
    }

    pub fn parity_bits(&self) -> Vec<u8> {
        self.parity.iter().map(|p| p.bit()).collect()
    }

    /// `λ_ij = ∓(-1)^{p(i)p(j)}`, the factor picked up when generators of
    /// indices `i` and `j` are exchanged.
    pub fn lambda(&self, i: usize, j: usize) -> i8 {
        let base: i8 = if self.parity[i] == Parity::Odd && self.parity[j] == Parity::Odd { -1 } else { 1 };
        match self.sign {
            Sign::Minus => base,
            Sign::Plus => -base,
        }
    }

    /// `λ_ii = -1`: generators square to zero and `u_i` is idempotent.
    pub fn is_clifford(&self, i: usize) -> bool {
        self.lambda(i, i) == -1
    }

    pub fn clifford_indices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.is_clifford(i)).collect()
    }

    pub(crate) fn ensure_same(&self, other: &Signature) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::SignatureMismatch(format!("{self} vs {other}")))
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.sign.as_str())?;
        for (k, p) in self.parity.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", p.bit())?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
