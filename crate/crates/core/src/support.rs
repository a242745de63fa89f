//! Graded support of `𝒜(γ)^±`.
//!
//! A degree `g` lies in the support iff the signed columns `sgn(g_i)·γ(e_i)`,
//! taken `|g_i|` times each, can be ordered so that in every Clifford row
//! the nonzero entries alternate in sign. The search runs over multiset
//! arrangements, so identical letters are never permuted among themselves.

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::gamma_rank_kernel;
use crate::tgwdatum::{eval_word, GammaMatrix, Letter, ValidatedGamma};

/// Default limit on the number of candidate points in a box.
pub const DEFAULT_BOX_CAP: u64 = 1_000_000;
/// Default limit on `|g|` for the brute force oracle.
pub const DEFAULT_ORACLE_CAP: u64 = 8;

/// One part of a vector composition: column `column` (0-based) with sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WitnessStep {
    pub column: usize,
    pub sign: i8,
}

impl WitnessStep {
    pub fn letter(self) -> Letter {
        if self.sign > 0 {
            Letter::X(self.column)
        } else {
            Letter::Y(self.column)
        }
    }
}

/// An ordering of the signed columns certifying that a degree is in the
/// support.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SupportWitness {
    pub steps: Vec<WitnessStep>,
}

impl SupportWitness {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The word in `X_i`, `Y_i` spelled by the witness.
    pub fn word(&self) -> Vec<Letter> {
        self.steps.iter().map(|s| s.letter()).collect()
    }

    /// Witness for `-g`: reversed, signs flipped.
    pub fn dual(&self) -> SupportWitness {
        SupportWitness {
            steps: self.steps.iter().rev().map(|s| WitnessStep { column: s.column, sign: -s.sign }).collect(),
        }
    }

    /// `[[column, sign], ...]` with 1-based columns.
    pub fn one_based(&self) -> Vec<[i64; 2]> {
        self.steps.iter().map(|s| [s.column as i64 + 1, s.sign as i64]).collect()
    }
}

impl Serialize for SupportWitness {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(serializer)
    }
}

struct Search {
    clifford: Vec<usize>,
    /// Distinct letters: (column, sign, entries on the Clifford rows).
    letters: Vec<(usize, i8, Vec<i64>)>,
    failed: HashSet<(Vec<u64>, Vec<i8>)>,
}

impl Search {
    fn new(gamma: &GammaMatrix, g: &[i64]) -> (Self, Vec<u64>) {
        let clifford = gamma.signature().clifford_indices();
        let mut letters = Vec::new();
        let mut counts = Vec::new();
        for (i, &gi) in g.iter().enumerate() {
            if gi == 0 {
                continue;
            }
            let s = gi.signum();
            let entries = clifford.iter().map(|&r| s * gamma.entry(r, i)).collect();
            letters.push((i, s as i8, entries));
            counts.push(gi.unsigned_abs());
        }
        (Search { clifford, letters, failed: HashSet::new() }, counts)
    }

    /// Whether the remaining letters can still alternate in every Clifford
    /// row after the given last signs.
    fn feasible(&self, counts: &[u64], last: &[i8]) -> bool {
        (0..self.clifford.len()).all(|r| {
            let (mut plus, mut minus) = (0u64, 0u64);
            for (l, &c) in self.letters.iter().zip(counts) {
                match l.2[r].signum() {
                    1 => plus += c,
                    -1 => minus += c,
                    _ => {}
                }
            }
            match last[r] {
                0 => plus.abs_diff(minus) <= 1,
                1 => minus == plus || minus == plus + 1,
                _ => plus == minus || plus == minus + 1,
            }
        })
    }

    fn run(&mut self, counts: &mut Vec<u64>, last: &mut Vec<i8>, out: &mut Vec<WitnessStep>) -> bool {
        if counts.iter().all(|&c| c == 0) {
            return true;
        }
        if !self.feasible(counts, last) || self.failed.contains(&(counts.clone(), last.clone())) {
            return false;
        }
        for k in 0..self.letters.len() {
            if counts[k] == 0 {
                continue;
            }
            let entries = &self.letters[k].2;
            if entries.iter().zip(last.iter()).any(|(&v, &l)| v != 0 && v.signum() as i8 == l) {
                continue;
            }
            let saved = last.clone();
            for (l, &v) in last.iter_mut().zip(entries) {
                if v != 0 {
                    *l = v.signum() as i8;
                }
            }
            counts[k] -= 1;
            out.push(WitnessStep { column: self.letters[k].0, sign: self.letters[k].1 });
            if self.run(counts, last, out) {
                return true;
            }
            out.pop();
            counts[k] += 1;
            *last = saved;
        }
        self.failed.insert((counts.clone(), last.clone()));
        false
    }
}

fn check_len(gamma: &GammaMatrix, g: &[i64]) -> Result<()> {
    if g.len() != gamma.m() {
        return Err(Error::InvalidInput(format!("degree has {} entries, matrix has {} columns", g.len(), gamma.m())));
    }
    Ok(())
}

/// `|γ(g)_r| ≤ 1` on every Clifford row, necessary for membership.
pub fn supersupport_bound(gamma: &GammaMatrix, g: &[i64]) -> bool {
    let image = gamma.apply(g);
    gamma.signature().clifford_indices().into_iter().all(|r| image[r].abs() <= 1)
}

/// First witness in lexicographic column order, or `None` if `g` is not in
/// the support.
pub fn is_in_support(gamma: &ValidatedGamma, g: &[i64]) -> Result<Option<SupportWitness>> {
    check_len(gamma, g)?;
    if !supersupport_bound(gamma, g) {
        return Ok(None);
    }
    let (mut search, mut counts) = Search::new(gamma, g);
    let mut last = vec![0i8; search.clifford.len()];
    let mut steps = Vec::new();
    Ok(search.run(&mut counts, &mut last, &mut steps).then_some(SupportWitness { steps }))
}

/// Independent check of a witness: multiplicities and alternation.
pub fn verify_witness(gamma: &GammaMatrix, g: &[i64], witness: &SupportWitness) -> bool {
    if g.len() != gamma.m() {
        return false;
    }
    let mut seen = vec![0i64; g.len()];
    for s in &witness.steps {
        if s.column >= g.len() || (s.sign != 1 && s.sign != -1) {
            return false;
        }
        seen[s.column] += s.sign as i64;
        if g[s.column] == 0 || g[s.column].signum() != s.sign as i64 {
            return false;
        }
    }
    if seen != g {
        return false;
    }
    gamma.signature().clifford_indices().into_iter().all(|r| {
        let nonzero: Vec<i64> =
            witness.steps.iter().map(|s| s.sign as i64 * gamma.entry(r, s.column)).filter(|&v| v != 0).collect();
        nonzero.iter().all(|v| v.abs() == 1) && nonzero.windows(2).all(|w| w[0] != w[1])
    })
}

/// Brute force: some arrangement of the letters has a nonzero `φ`-image.
pub fn oracle_membership(gamma: &ValidatedGamma, g: &[i64], cap: u64) -> Result<bool> {
    check_len(gamma, g)?;
    let total: u64 = g.iter().map(|x| x.unsigned_abs()).sum();
    if total > cap {
        return Err(Error::ResourceLimit(format!("|g| = {total} exceeds the oracle cap {cap}")));
    }
    let mut word: Vec<Letter> = Vec::new();
    for (i, &gi) in g.iter().enumerate() {
        let l = if gi > 0 { Letter::X(i) } else { Letter::Y(i) };
        word.extend(std::iter::repeat(l).take(gi.unsigned_abs() as usize));
    }
    word.sort();
    loop {
        if !eval_word(gamma, &word)?.image.is_zero() {
            return Ok(true);
        }
        if !next_permutation(&mut word) {
            return Ok(false);
        }
    }
}

fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// A product of closed integer intervals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoxSpec {
    pub ranges: Vec<(i64, i64)>,
}

impl BoxSpec {
    pub fn new(ranges: Vec<(i64, i64)>) -> Result<Self> {
        if let Some((a, b)) = ranges.iter().find(|(a, b)| a > b) {
            return Err(Error::InvalidInput(format!("empty interval {a}:{b}")));
        }
        Ok(BoxSpec { ranges })
    }

    /// `[-r, r]^m`.
    pub fn cube(m: usize, r: i64) -> Self {
        BoxSpec { ranges: vec![(-r, r); m] }
    }

    /// Parses `a:b,c:d,...`.
    pub fn parse(text: &str) -> Result<Self> {
        let ranges = text
            .split(',')
            .map(|part| {
                let bad = || Error::Parse(format!("bad interval '{part}', expected a:b"));
                let (a, b) = part.trim().split_once(':').ok_or_else(bad)?;
                Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
            })
            .collect::<Result<Vec<_>>>()?;
        BoxSpec::new(ranges)
    }

    pub fn dim(&self) -> usize {
        self.ranges.len()
    }

    pub fn count(&self) -> Option<u64> {
        self.ranges.iter().try_fold(1u64, |acc, (a, b)| acc.checked_mul((b - a + 1) as u64))
    }

    /// The `k`-th point in row-major order (last coordinate fastest).
    fn point(&self, mut k: u64) -> Vec<i64> {
        let mut p = vec![0; self.dim()];
        for (slot, (a, b)) in p.iter_mut().zip(&self.ranges).rev() {
            let w = (b - a + 1) as u64;
            *slot = a + (k % w) as i64;
            k /= w;
        }
        p
    }
}

impl fmt::Display for BoxSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.ranges.iter().map(|(a, b)| format!("{a}:{b}")).collect();
        f.write_str(&parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SupportPoint {
    pub point: Vec<i64>,
    pub witness: SupportWitness,
}

/// All support points in the box, sorted lexicographically. With
/// `even_lattice` only points with even coordinate sum are kept.
pub fn enumerate_support(
    gamma: &ValidatedGamma,
    bx: &BoxSpec,
    even_lattice: bool,
    cap: u64,
) -> Result<Vec<SupportPoint>> {
    if bx.dim() != gamma.m() {
        return Err(Error::InvalidInput(format!("box has {} intervals, matrix has {} columns", bx.dim(), gamma.m())));
    }
    let count = bx.count().filter(|&c| c <= cap).ok_or_else(|| {
        Error::ResourceLimit(format!("box {bx} has more than {cap} candidate points"))
    })?;
    let points = (0..count)
        .into_par_iter()
        .map(|k| bx.point(k))
        .filter(|g| !even_lattice || g.iter().sum::<i64>().rem_euclid(2) == 0)
        .filter(|g| supersupport_bound(gamma, g))
        .map(|g| is_in_support(gamma, &g).map(|w| w.map(|witness| SupportPoint { point: g, witness })))
        .collect::<Result<Vec<_>>>()?;
    Ok(points.into_iter().flatten().collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Collision {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    pub image: Vec<i64>,
}

/// Injectivity diagnostics for `γ` and `P∘γ` on the support.
///
/// `injective` combines distinctness of `γ(g)`, the absence of nonzero
/// support points in the kernel of `P∘γ`, and the supersupport containment.
/// Pairwise distinctness of `P∘γ(g)` is reported separately; it can fail
/// while the other three hold, e.g. `g = ±e_1` when the first column has
/// entries `±1` only in Clifford rows and the rest cancel mod 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InjectivityReport {
    pub rank: usize,
    pub m: usize,
    pub kernel: Vec<Vec<i64>>,
    /// `"global"` when `rank = m`, otherwise `"box"`.
    pub scope: &'static str,
    #[serde(rename = "box")]
    pub bx: String,
    pub support_size: usize,
    pub gamma_injective: bool,
    pub gamma_collision: Option<Collision>,
    pub projected_injective: bool,
    pub projected_collision: Option<Collision>,
    /// No nonzero support point has `P∘γ(g) = 0`.
    pub projected_kernel_trivial: bool,
    pub projected_kernel_point: Option<Vec<i64>>,
    /// Support points with a Clifford-row entry of `γ(g)` outside `{-1,0,1}`.
    pub containment_violations: Vec<Vec<i64>>,
    pub injective: bool,
}

/// `P∘γ(g)`: Clifford-row coordinates reduced mod 2.
pub fn projected_image(gamma: &GammaMatrix, g: &[i64]) -> Vec<i64> {
    let mut v = gamma.apply(g);
    for r in gamma.signature().clifford_indices() {
        v[r] = v[r].rem_euclid(2);
    }
    v
}

fn first_collision(points: &[Vec<i64>], f: impl Fn(&[i64]) -> Vec<i64>) -> Option<Collision> {
    let mut seen = std::collections::HashMap::new();
    for p in points {
        let image = f(p);
        if let Some(prev) = seen.insert(image.clone(), p.clone()) {
            return Some(Collision { a: prev, b: p.clone(), image });
        }
    }
    None
}

pub fn injectivity_report(gamma: &ValidatedGamma, bx: &BoxSpec, cap: u64) -> Result<InjectivityReport> {
    let rk = gamma_rank_kernel(gamma)?;
    let support: Vec<Vec<i64>> = enumerate_support(gamma, bx, false, cap)?.into_iter().map(|p| p.point).collect();
    let gamma_collision = first_collision(&support, |g| gamma.apply(g));
    let projected_collision = first_collision(&support, |g| projected_image(gamma, g));
    let containment_violations: Vec<Vec<i64>> =
        support.iter().filter(|g| !supersupport_bound(gamma, g)).cloned().collect();
    let projected_kernel_point = support
        .iter()
        .find(|g| g.iter().any(|&x| x != 0) && projected_image(gamma, g).iter().all(|&x| x == 0))
        .cloned();
    let m = gamma.m();
    Ok(InjectivityReport {
        rank: rk.rank,
        m,
        kernel: rk.kernel,
        scope: if rk.rank == m { "global" } else { "box" },
        bx: bx.to_string(),
        support_size: support.len(),
        gamma_injective: gamma_collision.is_none(),
        projected_injective: projected_collision.is_none(),
        injective: gamma_collision.is_none() && projected_kernel_point.is_none() && containment_violations.is_empty(),
        gamma_collision,
        projected_collision,
        projected_kernel_trivial: projected_kernel_point.is_none(),
        projected_kernel_point,
        containment_violations,
    })
}
