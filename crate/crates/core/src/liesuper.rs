//! Differential-operator realizations of `gl(p|q)`, `osp(2p|2q)` and
//! `osp(2p+1|2q)` inside `A_{p|q}^±`, with exact residuals of the Chevalley
//! relations and of the factorization through `𝒜(ζ)^±`.
//!
//! In both realizations the first `p` indices are Clifford directions and
//! the last `q` are Weyl directions. The Weyl realization lives in `A^-`
//! with parity vector `1^p 0^q`; the Clifford realization lives in `A^+`
//! with parity vector `0^p 1^q`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::basering::BaseRingElement;
use crate::error::{Error, Result};
use crate::rational::{frac, int, parse_rational, render_rational, Rational};
use crate::signature::{Parity, Sign, Signature};
use crate::superweyl::{Generator, SuperElement};
use crate::tgwdatum::{phi_generator, GammaMatrix, Letter, ValidatedGamma};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Gl,
    OspEven,
    OspOdd,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Gl => "gl",
            Family::OspEven => "osp_even",
            Family::OspOdd => "osp_odd",
        }
    }

    pub fn default_realization(self) -> Realization {
        match self {
            Family::Gl | Family::OspEven => Realization::Weyl,
            Family::OspOdd => Realization::Clifford,
        }
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gl" => Ok(Family::Gl),
            "osp_even" => Ok(Family::OspEven),
            "osp_odd" => Ok(Family::OspOdd),
            _ => Err(Error::Parse(format!("unknown family '{s}', expected gl, osp_even or osp_odd"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Realization {
    Weyl,
    Clifford,
}

impl Realization {
    pub fn as_str(self) -> &'static str {
        match self {
            Realization::Weyl => "weyl",
            Realization::Clifford => "clifford",
        }
    }

    /// Ambient signature for `p` Clifford and `q` Weyl directions.
    pub fn signature(self, p: usize, q: usize) -> Result<Signature> {
        match self {
            Realization::Weyl => {
                let bits: Vec<u8> = std::iter::repeat(1).take(p).chain(std::iter::repeat(0).take(q)).collect();
                Signature::from_bits(Sign::Minus, &bits)
            }
            Realization::Clifford => {
                let bits: Vec<u8> = std::iter::repeat(0).take(p).chain(std::iter::repeat(1).take(q)).collect();
                Signature::from_bits(Sign::Plus, &bits)
            }
        }
    }
}

impl FromStr for Realization {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "weyl" => Ok(Realization::Weyl),
            "clifford" => Ok(Realization::Clifford),
            _ => Err(Error::Parse(format!("unknown realization '{s}', expected weyl or clifford"))),
        }
    }
}

impl fmt::Display for Realization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenKind {
    E,
    F,
    H,
}

/// A Chevalley generator; `index` is 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenRef {
    pub kind: GenKind,
    pub index: usize,
}

impl GenRef {
    pub fn e(index: usize) -> Self {
        GenRef { kind: GenKind::E, index }
    }
    pub fn f(index: usize) -> Self {
        GenRef { kind: GenKind::F, index }
    }
    pub fn h(index: usize) -> Self {
        GenRef { kind: GenKind::H, index }
    }
}

impl fmt::Display for GenRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            GenKind::E => "e",
            GenKind::F => "f",
            GenKind::H => "h",
        };
        write!(f, "{k}{}", self.index + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieGenerator {
    pub id: GenRef,
    /// Parity in the Lie superalgebra.
    pub parity: Parity,
    /// Unscaled image `π(·)`.
    pub image: SuperElement,
}

/// `[lhs.0, lhs.1] = Σ c·g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub lhs: (GenRef, GenRef),
    pub rhs: Vec<(Rational, GenRef)>,
}

impl Relation {
    pub fn id(&self) -> String {
        format!("[{},{}]", self.lhs.0, self.lhs.1)
    }

    pub fn render(&self) -> String {
        let rhs: Vec<(bool, String)> = self
            .rhs
            .iter()
            .map(|(c, g)| crate::rational::signed_term(c, &g.to_string()))
            .collect();
        format!("{} = {}", self.id(), crate::rational::join_terms(rhs))
    }
}

#[derive(Debug, Clone)]
pub struct LiePreset {
    pub family: Family,
    pub realization: Realization,
    pub p: usize,
    pub q: usize,
    pub sig: Signature,
    pub zeta: ValidatedGamma,
    pub e: Vec<LieGenerator>,
    pub f: Vec<LieGenerator>,
    pub h: Vec<LieGenerator>,
    pub relations: Vec<Relation>,
}

/// `ζ`: columns `ε_j - ε_{j+1}` for `j < n`, followed for the orthosymplectic
/// families by `ε_n` (odd) or `2ε_n` (even).
pub fn zeta_matrix(family: Family, sig: Signature) -> Result<GammaMatrix> {
    let n = sig.n();
    let mut cols: Vec<Vec<i64>> = (0..n.saturating_sub(1))
        .map(|j| (0..n).map(|r| if r == j { 1 } else if r == j + 1 { -1 } else { 0 }).collect())
        .collect();
    let last = match family {
        Family::Gl => None,
        Family::OspOdd => Some(1),
        Family::OspEven => Some(2),
    };
    if let Some(k) = last {
        cols.push((0..n).map(|r| if r + 1 == n { k } else { 0 }).collect());
    }
    if cols.is_empty() {
        return GammaMatrix::new(sig, vec![Vec::new(); n]);
    }
    GammaMatrix::from_columns(sig, &cols)
}

/// `[a, b] = ab - (-1)^{pa·pb} ba`.
pub fn super_bracket(a: &SuperElement, b: &SuperElement, pa: Parity, pb: Parity) -> Result<SuperElement> {
    let ab = a.try_mul(b)?;
    let ba = b.try_mul(a)?;
    if pa == Parity::Odd && pb == Parity::Odd {
        ab.try_add(&ba)
    } else {
        ab.try_sub(&ba)
    }
}

fn lie_parity_of_e(family: Family, p: usize, q: usize, j: usize) -> Parity {
    let n = p + q;
    if j + 1 < n {
        if j + 1 == p {
            Parity::Odd
        } else {
            Parity::Even
        }
    } else {
        match family {
            Family::OspOdd if q > 0 => Parity::Odd,
            _ => Parity::Even,
        }
    }
}

fn delta(a: usize, b: usize) -> i64 {
    i64::from(a == b)
}

fn build_relations(family: Family, p: usize, n: usize, m: usize) -> Vec<Relation> {
    let mut rels = Vec::new();
    let push = |rels: &mut Vec<Relation>, a: GenRef, b: GenRef, rhs: Vec<(i64, GenRef)>| {
        let rhs = rhs.into_iter().filter(|(c, _)| *c != 0).map(|(c, g)| (int(c), g)).collect();
        rels.push(Relation { lhs: (a, b), rhs });
    };
    let gl_m = n - 1;
    for i in 0..n {
        for j in (i + 1)..n {
            push(&mut rels, GenRef::h(i), GenRef::h(j), vec![]);
        }
    }
    for i in 0..n {
        for j in 0..gl_m {
            let c = delta(i, j) - delta(i, j + 1);
            push(&mut rels, GenRef::h(i), GenRef::e(j), vec![(c, GenRef::e(j))]);
        }
    }
    for i in 0..n {
        for j in 0..gl_m {
            let c = -delta(i, j) + delta(i, j + 1);
            push(&mut rels, GenRef::h(i), GenRef::f(j), vec![(c, GenRef::f(j))]);
        }
    }
    for i in 0..gl_m {
        for j in 0..gl_m {
            let rhs = if i == j {
                let s = if i + 1 == p { -1 } else { 1 };
                vec![(1, GenRef::h(i)), (-s, GenRef::h(i + 1))]
            } else {
                vec![]
            };
            push(&mut rels, GenRef::e(i), GenRef::f(j), rhs);
        }
    }
    if m == n {
        let last = n - 1;
        let k = if family == Family::OspEven { 2 } else { 1 };
        for i in 0..n {
            push(&mut rels, GenRef::h(i), GenRef::e(last), vec![(k * delta(i, last), GenRef::e(last))]);
        }
        for i in 0..n {
            push(&mut rels, GenRef::h(i), GenRef::f(last), vec![(-k * delta(i, last), GenRef::f(last))]);
        }
        push(&mut rels, GenRef::e(last), GenRef::f(last), vec![(1, GenRef::h(last))]);
        for i in 0..gl_m {
            push(&mut rels, GenRef::e(i), GenRef::f(last), vec![]);
            push(&mut rels, GenRef::e(last), GenRef::f(i), vec![]);
        }
    }
    rels
}

impl LiePreset {
    pub fn new(family: Family, p: usize, q: usize, realization: Realization) -> Result<Self> {
        let n = p + q;
        if n == 0 {
            return Err(Error::UnsupportedPreset("p + q must be at least 1".into()));
        }
        match (family, realization) {
            (Family::OspEven, _) if q == 0 => {
                return Err(Error::UnsupportedPreset(
                    "osp_even needs q >= 1: x_n^2 vanishes on a Clifford direction".into(),
                ))
            }
            (Family::OspOdd, Realization::Weyl) => {
                return Err(Error::UnsupportedPreset("osp_odd is realized only in the Clifford algebra A^+".into()))
            }
            _ => {}
        }
        let sig = realization.signature(p, q)?;
        let zeta = zeta_matrix(family, sig.clone())?.validated()?;
        let m = zeta.m();

        let mut e = Vec::with_capacity(m);
        for j in 0..m {
            let image = if j + 1 < n {
                SuperElement::from_word(&sig, &[Generator::X(j), Generator::D(j + 1)])?
            } else if family == Family::OspEven {
                SuperElement::from_word(&sig, &[Generator::X(j), Generator::X(j)])?
            } else {
                SuperElement::x(&sig, j)
            };
            let parity = lie_parity_of_e(family, p, q, j);
            if image.parity() != Some(parity) {
                return Err(Error::UnsupportedPreset(format!(
                    "e{} has Lie parity {parity:?} but its image {image} has ambient parity {:?}",
                    j + 1,
                    image.parity()
                )));
            }
            e.push(LieGenerator { id: GenRef::e(j), parity, image });
        }
        let f = e
            .iter()
            .map(|g| LieGenerator { id: GenRef::f(g.id.index), parity: g.parity, image: g.image.involution() })
            .collect();
        let half = frac(1, 2);
        let h = (0..n)
            .map(|i| {
                // Weyl realization: x_i∂_i + (-1)^{p(i)}/2; Clifford: x_i∂_i - (-1)^{p(i)}/2.
                let odd = sig.parity(i) == Parity::Odd;
                let plus = match realization {
                    Realization::Weyl => !odd,
                    Realization::Clifford => odd,
                };
                let shift = if plus { half.clone() } else { -half.clone() };
                let xd = SuperElement::from_word(&sig, &[Generator::X(i), Generator::D(i)])
                    .expect("x_i d_i is always nonzero");
                let image = &xd + &SuperElement::constant(&sig, shift);
                LieGenerator { id: GenRef::h(i), parity: Parity::Even, image }
            })
            .collect();
        let relations = build_relations(family, p, n, m);
        Ok(LiePreset { family, realization, p, q, sig, zeta, e, f, h, relations })
    }

    pub fn preset(family: Family, p: usize, q: usize) -> Result<Self> {
        LiePreset::new(family, p, q, family.default_realization())
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    pub fn m(&self) -> usize {
        self.e.len()
    }

    pub fn generator(&self, g: GenRef) -> &LieGenerator {
        match g.kind {
            GenKind::E => &self.e[g.index],
            GenKind::F => &self.f[g.index],
            GenKind::H => &self.h[g.index],
        }
    }

    /// Image of a generator under the scaled and shifted map.
    pub fn scaled_image(&self, g: GenRef, cal: &Calibration) -> SuperElement {
        let base = &self.generator(g).image;
        match g.kind {
            GenKind::E => base.scale(&cal.e_scale[g.index]),
            GenKind::F => base.scale(&cal.f_scale[g.index]),
            GenKind::H => base + &SuperElement::constant(&self.sig, cal.h_shift[g.index].clone()),
        }
    }

    fn check_calibration(&self, cal: &Calibration) -> Result<()> {
        if cal.e_scale.len() != self.m() || cal.f_scale.len() != self.m() || cal.h_shift.len() != self.n() {
            return Err(Error::InvalidInput(format!(
                "calibration sizes ({}, {}, {}) do not match the preset ({}, {}, {})",
                cal.e_scale.len(),
                cal.f_scale.len(),
                cal.h_shift.len(),
                self.m(),
                self.m(),
                self.n()
            )));
        }
        Ok(())
    }

    fn residual(&self, rel: &Relation, cal: &Calibration) -> Result<SuperElement> {
        let (a, b) = rel.lhs;
        let lhs = super_bracket(
            &self.scaled_image(a, cal),
            &self.scaled_image(b, cal),
            self.generator(a).parity,
            self.generator(b).parity,
        )?;
        let mut rhs = SuperElement::zero(&self.sig);
        for (c, g) in &rel.rhs {
            rhs = &rhs + &self.scaled_image(*g, cal).scale(c);
        }
        lhs.try_sub(&rhs)
    }
}

/// Per-generator multipliers for `e`, `f` and central shifts for `h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Calibration {
    pub e_scale: Vec<Rational>,
    pub f_scale: Vec<Rational>,
    pub h_shift: Vec<Rational>,
}

impl Calibration {
    pub fn unit(preset: &LiePreset) -> Self {
        Calibration {
            e_scale: vec![Rational::one(); preset.m()],
            f_scale: vec![Rational::one(); preset.m()],
            h_shift: vec![Rational::zero(); preset.n()],
        }
    }

    pub fn to_strings(&self) -> CalibrationStrings {
        let r = |v: &[Rational]| v.iter().map(render_rational).collect();
        CalibrationStrings { e_scale: r(&self.e_scale), f_scale: r(&self.f_scale), h_shift: r(&self.h_shift) }
    }
}

/// Serialized form of a [`Calibration`], with exact fractions as strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CalibrationStrings {
    pub e_scale: Vec<String>,
    pub f_scale: Vec<String>,
    pub h_shift: Vec<String>,
}

impl CalibrationStrings {
    pub fn parse(&self) -> Result<Calibration> {
        let p = |v: &[String]| {
            v.iter()
                .map(|s| parse_rational(s).ok_or_else(|| Error::Parse(format!("bad rational '{s}'"))))
                .collect::<Result<Vec<_>>>()
        };
        Ok(Calibration { e_scale: p(&self.e_scale)?, f_scale: p(&self.f_scale)?, h_shift: p(&self.h_shift)? })
    }
}

/// Solves `A s = b` over `ℚ`, setting free variables to zero.
fn solve_linear(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>, vars: usize) -> Option<Vec<Rational>> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..vars {
        let Some(r) = (row..a.len()).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(row, r);
        b.swap(row, r);
        let inv = a[row][col].recip();
        for x in a[row].iter_mut() {
            *x = &*x * &inv;
        }
        b[row] = &b[row] * &inv;
        for r in 0..a.len() {
            if r != row && !a[r][col].is_zero() {
                let c = a[r][col].clone();
                for k in 0..vars {
                    let v = &a[row][k] * &c;
                    a[r][k] -= v;
                }
                let v = &b[row] * &c;
                b[r] -= v;
            }
        }
        pivots.push(col);
        row += 1;
    }
    if b[row..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    let mut s = vec![Rational::zero(); vars];
    for (r, &col) in pivots.iter().enumerate() {
        s[col] = b[r].clone();
    }
    Some(s)
}

/// Finds `f`-scalings and `h`-shifts zeroing every relation residual, with
/// all `e`-scalings fixed at 1.
///
/// Only the `[e_j, f_j]` relations involve the unknowns: `f_j`'s scaling is
/// read off from the non-constant part, and the constant parts give a linear
/// system for the shifts.
pub fn calibrate(preset: &LiePreset) -> Result<Calibration> {
    let mut cal = Calibration::unit(preset);
    let n = preset.n();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut rhs: Vec<Rational> = Vec::new();
    for rel in &preset.relations {
        let (a, b) = rel.lhs;
        if a.kind != GenKind::E || b.kind != GenKind::F || a.index != b.index {
            continue;
        }
        let j = a.index;
        let bracket = super_bracket(
            &preset.e[j].image,
            &preset.f[j].image,
            preset.e[j].parity,
            preset.f[j].parity,
        )?;
        let mut target = SuperElement::zero(&preset.sig);
        for (c, g) in &rel.rhs {
            target = &target + &preset.generator(*g).image.scale(c);
        }
        let strip = |x: &SuperElement| x.try_sub(&SuperElement::constant(&preset.sig, x.constant_term()));
        let (bn, tn) = (strip(&bracket)?, strip(&target)?);
        let scale = match tn.sorted_terms().first() {
            None if bn.is_zero() => Rational::one(),
            Some((mono, c)) if !bn.coefficient(mono).is_zero() => *c / &bn.coefficient(mono),
            _ => {
                return Err(Error::Calibration(format!(
                    "{}: bracket {bracket} is not proportional to {target}",
                    rel.id()
                )))
            }
        };
        if bn.scale(&scale) != tn {
            return Err(Error::Calibration(format!("{}: bracket {bracket} is not proportional to {target}", rel.id())));
        }
        cal.f_scale[j] = scale.clone();
        // scale·const(bracket) = Σ c_i (const(h_i) + s_i)
        let mut coeffs = vec![Rational::zero(); n];
        for (c, g) in &rel.rhs {
            if g.kind == GenKind::H {
                coeffs[g.index] += c;
            }
        }
        rows.push(coeffs);
        rhs.push(&scale * &bracket.constant_term() - target.constant_term());
    }
    cal.h_shift = solve_linear(rows, rhs, n)
        .ok_or_else(|| Error::Calibration("no central shifts satisfy the constant terms".into()))?;
    let report = check_relations(preset, &cal)?;
    if let Some(bad) = report.relations.iter().find(|r| !r.pass) {
        return Err(Error::Calibration(format!("{} keeps residual {}", bad.id, bad.residual)));
    }
    Ok(cal)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationResidual {
    pub id: String,
    pub relation: String,
    pub residual: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResidualReport {
    pub family: Family,
    pub realization: Realization,
    pub p: usize,
    pub q: usize,
    pub calibration: CalibrationStrings,
    pub relations: Vec<RelationResidual>,
    pub all_pass: bool,
}

pub fn check_relations(preset: &LiePreset, cal: &Calibration) -> Result<ResidualReport> {
    preset.check_calibration(cal)?;
    let relations = preset
        .relations
        .par_iter()
        .map(|rel| {
            let res = preset.residual(rel, cal)?;
            Ok(RelationResidual { id: rel.id(), relation: rel.render(), residual: res.render(), pass: res.is_zero() })
        })
        .collect::<Result<Vec<_>>>()?;
    let all_pass = relations.iter().all(|r| r.pass);
    Ok(ResidualReport {
        family: preset.family,
        realization: preset.realization,
        p: preset.p,
        q: preset.q,
        calibration: cal.to_strings(),
        relations,
        all_pass,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorComparison {
    pub generator: String,
    pub phi: String,
    pub pi: String,
    pub residual: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CartanComparison {
    pub generator: String,
    /// `ι(λ_ii(u_i - 1))`.
    pub psi: String,
    pub pi: String,
    /// `π(h_i) - ι(λ_ii(u_i - 1))` when it is a constant.
    pub offset: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriangleReport {
    pub family: Family,
    pub realization: Realization,
    pub p: usize,
    pub q: usize,
    pub e: Vec<GeneratorComparison>,
    pub f: Vec<GeneratorComparison>,
    pub h: Vec<CartanComparison>,
    pub all_match: bool,
}

impl TriangleReport {
    /// Constant offsets of the Cartan generators, when all are constant.
    pub fn h_offsets(&self) -> Option<Vec<String>> {
        self.h.iter().map(|c| c.offset.clone()).collect()
    }
}

/// Compares `φ(X_i)` with the scaled `π(e_i)`, `φ(Y_i)` with `π(f_i)`, and
/// `ι(λ_ii(u_i - 1))` with the shifted `π(h_i)`.
pub fn check_triangle(preset: &LiePreset, cal: &Calibration) -> Result<TriangleReport> {
    preset.check_calibration(cal)?;
    let compare = |name: String, phi: SuperElement, pi: SuperElement| -> Result<GeneratorComparison> {
        let res = phi.try_sub(&pi)?;
        Ok(GeneratorComparison { generator: name, phi: phi.render(), pi: pi.render(), residual: res.render(), pass: res.is_zero() })
    };
    let mut e = Vec::new();
    let mut f = Vec::new();
    for j in 0..preset.m() {
        let phi_x = phi_generator(&preset.zeta, Letter::X(j))?;
        e.push(compare(GenRef::e(j).to_string(), phi_x, preset.scaled_image(GenRef::e(j), cal))?);
        let phi_y = phi_generator(&preset.zeta, Letter::Y(j))?;
        f.push(compare(GenRef::f(j).to_string(), phi_y, preset.f[j].image.clone())?);
    }
    let sig = &preset.sig;
    let h = (0..preset.n())
        .map(|i| {
            let lam = int(sig.lambda(i, i) as i64);
            let psi = BaseRingElement::linear(sig, i, lam.clone(), -lam).iota_embed();
            let pi = preset.scaled_image(GenRef::h(i), cal);
            let diff = pi.try_sub(&psi)?;
            let constant = diff.terms().all(|(m, _)| m.is_one());
            Ok(CartanComparison {
                generator: GenRef::h(i).to_string(),
                psi: psi.render(),
                pi: pi.render(),
                offset: constant.then(|| render_rational(&diff.constant_term())),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let all_match = e.iter().all(|c| c.pass) && f.iter().all(|c| c.pass) && h.iter().all(|c| c.offset.is_some());
    Ok(TriangleReport {
        family: preset.family,
        realization: preset.realization,
        p: preset.p,
        q: preset.q,
        e,
        f,
        h,
        all_match,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureEntry {
    pub family: Family,
    pub realization: Realization,
    pub p: usize,
    pub q: usize,
    #[serde(flatten)]
    pub calibration: CalibrationStrings,
    pub h_offsets: Vec<String>,
}

/// Frozen calibration constants for a range of presets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CalibrationFixture {
    pub entries: Vec<FixtureEntry>,
}

impl CalibrationFixture {
    pub fn lookup(&self, family: Family, realization: Realization, p: usize, q: usize) -> Option<&FixtureEntry> {
        self.entries
            .iter()
            .find(|e| e.family == family && e.realization == realization && e.p == p && e.q == q)
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("line {}, column {}: {}", e.line(), e.column(), e)))
    }

    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("fixtures always serialize");
        s.push('\n');
        s
    }
}

/// Every supported `(family, realization, p, q)` with `1 ≤ p + q ≤ max_n`.
pub fn supported_presets(max_n: usize) -> Vec<(Family, Realization, usize, usize)> {
    let mut out = Vec::new();
    for family in [Family::Gl, Family::OspEven, Family::OspOdd] {
        for realization in [Realization::Weyl, Realization::Clifford] {
            for n in 1..=max_n {
                for p in 0..=n {
                    let q = n - p;
                    if LiePreset::new(family, p, q, realization).is_ok() {
                        out.push((family, realization, p, q));
                    }
                }
            }
        }
    }
    out
}

/// Solves the calibration of every supported preset with `p + q ≤ max_n`.
pub fn build_fixtures(max_n: usize) -> Result<CalibrationFixture> {
    let entries = supported_presets(max_n)
        .into_par_iter()
        .map(|(family, realization, p, q)| {
            let preset = LiePreset::new(family, p, q, realization)?;
            let cal = calibrate(&preset)?;
            let tri = check_triangle(&preset, &cal)?;
            let h_offsets = tri
                .h_offsets()
                .ok_or_else(|| Error::Calibration(format!("{family} {p} {q}: non-constant h offset")))?;
            Ok(FixtureEntry { family, realization, p, q, calibration: cal.to_strings(), h_offsets })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CalibrationFixture { entries })
}
