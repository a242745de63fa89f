//! Rank and integer kernel of an integer matrix by unimodular column
//! reduction over arbitrary-precision integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::tgwdatum::GammaMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankKernel {
    pub rank: usize,
    /// A basis of `{g ∈ ℤ^m : γ(g) = 0}` in column echelon form with
    /// positive pivots.
    pub kernel: Vec<Vec<i64>>,
}

/// Brings `cols` to column echelon form on the coordinates `0..depth`
/// using only unimodular column operations. Returns the number of pivot
/// columns, which come first.
fn echelon(cols: &mut [Vec<BigInt>], depth: usize) -> usize {
    let mut k = 0;
    for row in 0..depth {
        if k == cols.len() {
            break;
        }
        loop {
            let pivot = (k..cols.len())
                .filter(|&c| !cols[c][row].is_zero())
                .min_by(|&a, &b| cols[a][row].abs().cmp(&cols[b][row].abs()));
            let Some(p) = pivot else { break };
            cols.swap(k, p);
            let mut done = true;
            for c in (k + 1)..cols.len() {
                if cols[c][row].is_zero() {
                    continue;
                }
                let q = cols[c][row].div_floor(&cols[k][row]);
                let (head, tail) = cols.split_at_mut(c);
                for (x, y) in tail[0].iter_mut().zip(&head[k]) {
                    *x -= &q * y;
                }
                if !tail[0][row].is_zero() {
                    done = false;
                }
            }
            if done {
                if cols[k][row].is_negative() {
                    for x in cols[k].iter_mut() {
                        *x = -&*x;
                    }
                }
                k += 1;
                break;
            }
        }
    }
    k
}

pub fn rank_kernel(rows: &[Vec<i64>], m: usize) -> Result<RankKernel> {
    let n = rows.len();
    let mut cols: Vec<Vec<BigInt>> = (0..m)
        .map(|i| {
            let mut c: Vec<BigInt> = rows.iter().map(|r| BigInt::from(r[i])).collect();
            c.extend((0..m).map(|k| BigInt::from(i64::from(k == i))));
            c
        })
        .collect();
    let rank = echelon(&mut cols, n);
    let mut kernel: Vec<Vec<BigInt>> = cols.drain(rank..).map(|c| c[n..].to_vec()).collect();
    echelon(&mut kernel, m);
    let kernel = kernel
        .into_iter()
        .map(|v| {
            v.iter()
                .map(|x| x.to_i64().ok_or_else(|| Error::ResourceLimit("kernel entry exceeds 64 bits".into())))
                .collect::<Result<Vec<i64>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RankKernel { rank, kernel })
}

/// Rank over `ℚ` and an integer kernel basis of `γ : ℤ^m → ℤ^n`.
pub fn gamma_rank_kernel(gamma: &GammaMatrix) -> Result<RankKernel> {
    rank_kernel(gamma.rows(), gamma.m())
}
