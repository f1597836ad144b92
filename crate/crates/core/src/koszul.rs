//! Regular sequences and Koszul cohomology for the sequence
//! `x_F = (F(t1)/F(t2) − 1, .., F(t_{n−1})/F(tn) − 1)`.
//!
//! Everything is computed in `R̂ = ℚ[t1..t_{n−1}]`, where `tn` has been
//! replaced by `(t1···t_{n−1})^{-1}` and denominators cleared. Up to units
//! of the localized torus ring the entries of `x_F` are then
//!
//! ```text
//! g_i = F(t_{i+1}) − F(t_i)                      (i < n − 1)
//! g_{n−1} = (t1···t_{n−1})^d (F(tn) − F(t_{n−1}))   (d = deg F)
//! ```
//!
//! The Koszul cochain complex of `g` is filtered by total degree: in level
//! `E`, the summand `e_S` carries polynomials of degree at most
//! `E − Σ_i deg g_i + Σ_{i∈S} deg g_i`. Since the leading forms of `g` form
//! a regular sequence, every level is exact below the top, and the top
//! cohomology grows by the Hilbert function of `R̂/(g)`.

use std::collections::{BTreeMap, HashMap};

use num_traits::One;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::groebner::{ideal_quotient, localize_artinian, saturation, GroebnerBasis, QuotientAlgebra};
use crate::ideal::FunctorSpec;
use crate::linalg::SparseMatrix;
use crate::poly::{ExpVec, MPoly, Rational, UPoly};
use crate::symm::exponents_of_degree;
use crate::torus::{LocalizedElem, TorusElem};

/// Per-step verdicts of a regular-sequence test.
#[derive(Clone, Debug)]
pub struct RegularityReport {
    pub label: String,
    pub nvars: usize,
    pub sequence: Vec<MPoly>,
    /// `steps[k]` is true when `x_{k+1}` is a nonzerodivisor modulo
    /// `(x_1..x_k)` (after saturation, if any).
    pub steps: Vec<bool>,
    /// The full ideal is not the unit ideal.
    pub proper: bool,
}

impl RegularityReport {
    pub fn all_pass(&self) -> bool {
        self.proper && self.steps.iter().all(|&s| s)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "label": self.label,
            "sequence": self.sequence.iter().map(|p| p.to_text("t")).collect::<Vec<_>>(),
            "steps": self.steps,
            "proper": self.proper,
            "regular": self.all_pass(),
        })
    }
}

/// Tests `(I_k : x_{k+1}) = I_k` for every prefix ideal `I_k`, where `I_k`
/// is first saturated by `unit` when given.
pub fn regular_sequence_report(
    label: impl Into<String>,
    sequence: Vec<MPoly>,
    nvars: usize,
    unit: Option<&MPoly>,
) -> Result<RegularityReport> {
    let prefix_ideal = |k: usize| -> Result<GroebnerBasis> {
        let gb = GroebnerBasis::compute(&sequence[..k], nvars)?;
        match unit {
            Some(u) => saturation(&gb, u),
            None => Ok(gb),
        }
    };
    let mut steps = Vec::with_capacity(sequence.len());
    for k in 0..sequence.len() {
        let ik = prefix_ideal(k)?;
        let quotient = ideal_quotient(&ik, &sequence[k])?;
        steps.push(quotient == ik);
    }
    let proper = !prefix_ideal(sequence.len())?.is_unit();
    Ok(RegularityReport {
        label: label.into(),
        nvars,
        sequence,
        steps,
        proper,
    })
}

fn monomial(nvars: usize, exps: &[(usize, i32)], c: i64) -> MPoly {
    let mut e = vec![0; nvars];
    for &(i, k) in exps {
        e[i] += k;
    }
    MPoly::monomial(ExpVec::new(e), Rational::from_integer(c.into()))
}

/// `(t2^m − t1^m, .., t_{n−1}^m − t_{n−2}^m, −t1^m···t_{n−2}^m t_{n−1}^{2m})`
/// in `ℚ[t1..t_{n−1}]`.
pub fn regseq1_sequence(n: usize, m: i32) -> Vec<MPoly> {
    let v = n - 1;
    let mut seq: Vec<MPoly> = (0..v.saturating_sub(1))
        .map(|i| &monomial(v, &[(i + 1, m)], 1) - &monomial(v, &[(i, m)], 1))
        .collect();
    let mut last: Vec<(usize, i32)> = (0..v - 1).map(|i| (i, m)).collect();
    last.push((v - 1, 2 * m));
    seq.push(monomial(v, &last, -1));
    seq
}

pub fn regseq1_check(n: usize, m: i32) -> Result<RegularityReport> {
    if n < 2 || m < 1 {
        return Err(Error::Domain(format!("need n >= 2 and m >= 1, got n={n} m={m}")));
    }
    regular_sequence_report(format!("regseq1 n={n} m={m}"), regseq1_sequence(n, m), n - 1, None)
}

/// `t1···t_{n−1}` in `ℚ[t1..t_{n−1}]`.
fn torus_product(v: usize) -> MPoly {
    monomial(v, &(0..v).map(|i| (i, 1)).collect::<Vec<_>>(), 1)
}

/// `s^d · f(s^{-1})` with `s = t1···t_{n−1}`, a polynomial when `d ≥ deg f`.
fn cleared_at_last(f: &UPoly, v: usize, d: usize) -> MPoly {
    let mut out = MPoly::zero(v);
    for (i, c) in f.coeffs().iter().enumerate() {
        let k = (d - i) as i32;
        out.add_term(ExpVec::new(vec![k; v]), c.clone());
    }
    out
}

/// The cleared sequence `g` in `ℚ[t1..t_{n−1}]`.
pub fn cleared_sequence(spec: &FunctorSpec) -> Vec<MPoly> {
    let n = spec.rank();
    let v = n - 1;
    let f = spec.functor();
    let d = spec.degree();
    let mut seq: Vec<MPoly> = (0..v - 1)
        .map(|i| &f.in_variable(v, i + 1) - &f.in_variable(v, i))
        .collect();
    let s_d = torus_product(v).pow(d as u32);
    seq.push(&cleared_at_last(f, v, d) - &(&s_d * &f.in_variable(v, v - 1)));
    seq
}

pub fn regseq2_check(spec: &FunctorSpec) -> Result<RegularityReport> {
    let v = spec.rank() - 1;
    regular_sequence_report(
        format!("regseq2 {}", spec.label()),
        cleared_sequence(spec),
        v,
        Some(&torus_product(v)),
    )
}

/// `x_F` as elements of the localized torus ring.
pub fn x_f(spec: &FunctorSpec) -> Result<Vec<LocalizedElem>> {
    let n = spec.rank();
    let f = spec.functor();
    let one = LocalizedElem::from_torus(TorusElem::one(n), f.clone())?;
    (0..n - 1)
        .map(|i| {
            let mut k = vec![0i64; n];
            k[i] = 1;
            k[i + 1] = -1;
            LocalizedElem::lattice_unit(&k, f)?.arith(&one, crate::poly::ArithOp::Sub)
        })
        .collect()
}

/// Checks `x_{F,i} · F(t_{i+1}) = −g_i` in the localized torus ring, with
/// the extra unit `tn^{-d}` on the last entry.
pub fn x_f_matches_cleared(spec: &FunctorSpec) -> Result<bool> {
    let n = spec.rank();
    let f = spec.functor();
    let g = cleared_sequence(spec);
    for (i, x) in x_f(spec)?.iter().enumerate() {
        let fi = LocalizedElem::from_torus(TorusElem::value_at(n, f, i + 1), f.clone())?;
        let lhs = x.arith(&fi, crate::poly::ArithOp::Mul)?;
        let mut gi = TorusElem::canonicalize(&g[i].extend_vars(1)).neg();
        if i == n - 2 {
            // g_{n−1} = tn^{-d} (F(tn) − F(t_{n−1}))
            let mut e = vec![0; n];
            e[n - 1] = spec.degree() as i32;
            gi = gi.mul(&TorusElem::canonicalize(&MPoly::monomial(ExpVec::new(e), Rational::one())));
        }
        let rhs = LocalizedElem::from_torus(gi, f.clone())?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Internal degrees whose values depend on the truncation.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryWarning {
    pub unreliable: Vec<i64>,
    pub reason: String,
}

#[derive(Clone, Debug)]
pub struct DegreeRow {
    pub degree: i64,
    /// `dim H^k` of the filtration level, for `k = 0..=ℓ`.
    pub cohomology: Vec<usize>,
    /// Growth of `H^ℓ` from the previous level.
    pub top_graded: usize,
    /// Standard monomials of this exact degree for the ideal `(g)`.
    pub hilbert: usize,
    pub flagged: bool,
    /// Ranks were settled by the modular bound rather than over ℚ.
    pub certified_mod_p: bool,
}

#[derive(Clone, Debug)]
pub struct KoszulReport {
    pub label: String,
    pub ell: usize,
    pub generator_degrees: Vec<i64>,
    pub window: (i64, i64),
    pub margin: i64,
    pub rows: Vec<DegreeRow>,
    pub d_squared_zero: bool,
    pub warning: Option<BoundaryWarning>,
    /// `dim R̂/(g)`.
    pub quotient_dimension: usize,
    /// Dimension after inverting `t1···t_{n−1}` and every `F(t_i)`.
    pub localized_dimension: usize,
    pub x_f_matches: bool,
}

impl KoszulReport {
    /// Vanishing below the top and agreement with the Hilbert function, on
    /// every unflagged degree.
    pub fn concentrated(&self) -> bool {
        self.rows
            .iter()
            .filter(|r| !r.flagged)
            .all(|r| r.cohomology[..self.ell].iter().all(|&h| h == 0) && r.top_graded == r.hilbert)
    }

    pub fn interior_degrees(&self) -> usize {
        self.rows.iter().filter(|r| !r.flagged).count()
    }

    pub fn pass(&self) -> bool {
        self.d_squared_zero && self.x_f_matches && self.interior_degrees() > 0 && self.concentrated()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "label": self.label,
            "ell": self.ell,
            "generator_degrees": self.generator_degrees,
            "window": [self.window.0, self.window.1],
            "margin": self.margin,
            "d_squared_zero": self.d_squared_zero,
            "x_f_matches_cleared_sequence": self.x_f_matches,
            "quotient_dimension": self.quotient_dimension,
            "localized_dimension": self.localized_dimension,
            "warning": self.warning.as_ref().map(|w| json!({"unreliable": w.unreliable, "reason": w.reason})),
            "degrees": self.rows.iter().map(|r| json!({
                "degree": r.degree,
                "cohomology": r.cohomology,
                "top_graded": r.top_graded,
                "hilbert": r.hilbert,
                "flagged": r.flagged,
                "certified_mod_p": r.certified_mod_p,
            })).collect::<Vec<_>>(),
            "concentrated": self.concentrated(),
        })
    }
}

/// Monomial basis of polynomials of degree at most `bound`.
struct Block {
    monomials: Vec<Vec<i32>>,
    index: HashMap<Vec<i32>, usize>,
}

impl Block {
    fn new(nvars: usize, bound: i64) -> Self {
        let monomials: Vec<Vec<i32>> = (0..=bound.max(-1))
            .flat_map(|d| exponents_of_degree(nvars, d as i32))
            .collect();
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        Block { monomials, index }
    }
}

/// The level-`e` piece of the filtered Koszul complex: for each `p`, the
/// subsets of size `p` with their blocks and offsets, and the matrices of
/// `d^p : K^p → K^{p+1}`.
struct FilteredComplex {
    dims: Vec<usize>,
    differentials: Vec<SparseMatrix>,
}

fn subsets_of_size(ell: usize, p: usize) -> Vec<u32> {
    (0u32..1 << ell).filter(|s| s.count_ones() as usize == p).collect()
}

fn build_level(seq: &[MPoly], nvars: usize, degrees: &[i64], e: i64) -> FilteredComplex {
    let ell = seq.len();
    let total: i64 = degrees.iter().sum();
    let bound = |s: u32| e - total + (0..ell).filter(|i| s >> i & 1 == 1).map(|i| degrees[i]).sum::<i64>();
    let mut layout: Vec<Vec<(u32, usize, Block)>> = Vec::new();
    let mut dims = Vec::new();
    let mut blocks_by_subset: BTreeMap<u32, (usize, usize)> = BTreeMap::new();
    for p in 0..=ell {
        let mut offset = 0;
        let mut row = Vec::new();
        for s in subsets_of_size(ell, p) {
            let block = Block::new(nvars, bound(s));
            blocks_by_subset.insert(s, (p, row.len()));
            let len = block.monomials.len();
            row.push((s, offset, block));
            offset += len;
        }
        dims.push(offset);
        layout.push(row);
    }
    let mut differentials = Vec::new();
    for p in 0..ell {
        let mut m = SparseMatrix::new(dims[p + 1]);
        for (s, _, block) in &layout[p] {
            for mono in &block.monomials {
                let mut col: BTreeMap<usize, Rational> = BTreeMap::new();
                for i in (0..ell).filter(|i| s >> i & 1 == 0) {
                    let target = s | 1 << i;
                    let sign = if (s & ((1 << i) - 1)).count_ones() % 2 == 0 { 1 } else { -1 };
                    let (_, pos) = blocks_by_subset[&target];
                    let (_, offset, tblock) = &layout[p + 1][pos];
                    for (ge, gc) in seq[i].terms() {
                        let prod: Vec<i32> = ge.as_slice().iter().zip(mono).map(|(a, b)| a + b).collect();
                        let row = offset + tblock.index[&prod];
                        let v = if sign > 0 { gc.clone() } else { -gc.clone() };
                        *col.entry(row).or_insert_with(|| Rational::from_integer(0.into())) += v;
                    }
                }
                col.retain(|_, v| *v != Rational::from_integer(0.into()));
                m.push_column(col);
            }
        }
        differentials.push(m);
    }
    FilteredComplex { dims, differentials }
}

/// A prime for the modular rank bounds.
const RANK_PRIME: u64 = (1 << 61) - 1;

impl FilteredComplex {
    /// `dim H^k` for every `k`, and whether the modular shortcut sufficed.
    ///
    /// Ranks mod p never exceed rational ranks, so they bound every `H^k`
    /// from above. When those bounds already vanish below the top, the
    /// lower groups are zero and `H^ℓ` follows from the Euler
    /// characteristic; otherwise the ranks are recomputed over ℚ.
    fn cohomology(&self) -> (Vec<usize>, bool) {
        let ell = self.dims.len() - 1;
        let modular: Option<Vec<usize>> = self.differentials.iter().map(|d| d.rank_mod_p(RANK_PRIME)).collect();
        if let Some(ranks) = modular {
            let bounds = Self::from_ranks(&self.dims, &ranks);
            if bounds[..ell].iter().all(|&h| h == 0) {
                let euler: i64 = self
                    .dims
                    .iter()
                    .enumerate()
                    .map(|(k, &d)| if (ell - k) % 2 == 0 { d as i64 } else { -(d as i64) })
                    .sum();
                let mut h = vec![0; ell + 1];
                h[ell] = euler as usize;
                return (h, true);
            }
        }
        let ranks: Vec<usize> = self.differentials.iter().map(SparseMatrix::rank).collect();
        (Self::from_ranks(&self.dims, &ranks), false)
    }

    fn from_ranks(dims: &[usize], ranks: &[usize]) -> Vec<usize> {
        (0..dims.len())
            .map(|p| {
                let out = ranks.get(p).copied().unwrap_or(0);
                let inc = if p > 0 { ranks[p - 1] } else { 0 };
                dims[p] - out - inc
            })
            .collect()
    }

    fn d_squared_zero(&self) -> bool {
        self.differentials.windows(2).all(|w| w[1].mul(&w[0]).is_zero())
    }
}

/// Default window: from 0 to the sum of generator degrees plus the margin
/// and a few extra degrees.
pub fn default_window(spec: &FunctorSpec) -> (i64, i64) {
    let degrees: Vec<i64> = cleared_sequence(spec).iter().map(MPoly::total_degree).collect();
    let total: i64 = degrees.iter().sum();
    let margin = degrees.iter().copied().max().unwrap_or(0);
    (0, total + margin + 2)
}

pub fn truncated_koszul_cohomology(spec: &FunctorSpec, window: (i64, i64)) -> Result<KoszulReport> {
    let (lo, hi) = window;
    if lo > hi || lo < 0 {
        return Err(Error::Domain(format!("invalid degree window {lo},{hi}")));
    }
    let n = spec.rank();
    let nvars = n - 1;
    let seq = cleared_sequence(spec);
    let ell = seq.len();
    let degrees: Vec<i64> = seq.iter().map(MPoly::total_degree).collect();
    let margin = degrees.iter().copied().max().unwrap_or(0);

    let gb = GroebnerBasis::compute(&seq, nvars)?;
    let quotient = QuotientAlgebra::from_groebner(&gb)?;
    let f = spec.functor();
    let s = torus_product(nvars);
    let mut u = s.clone();
    for i in 0..nvars {
        u = &u * &f.in_variable(nvars, i);
    }
    u = &u * &cleared_at_last(f, nvars, spec.degree());
    let localized = localize_artinian(&quotient, &u)?.localized;

    let mut rows = Vec::new();
    let mut d_squared_zero = false;
    let mut previous_top = if lo > 0 {
        build_level(&seq, nvars, &degrees, lo - 1).cohomology().0[ell]
    } else {
        0
    };
    for e in lo..=hi {
        let level = build_level(&seq, nvars, &degrees, e);
        // lower levels are subcomplexes of the top one
        if e == hi {
            d_squared_zero = level.d_squared_zero();
        }
        let (cohomology, certified_mod_p) = level.cohomology();
        let top = cohomology[ell];
        let flagged = e < lo + margin || e > hi - margin;
        rows.push(DegreeRow {
            degree: e,
            top_graded: top - previous_top,
            cohomology,
            hilbert: gb.standard_monomials_of_degree(e as i32).len(),
            flagged,
            certified_mod_p,
        });
        previous_top = top;
    }
    let unreliable: Vec<i64> = rows.iter().filter(|r| r.flagged).map(|r| r.degree).collect();
    let warning = (!unreliable.is_empty()).then(|| BoundaryWarning {
        reason: if hi - lo < 2 * margin {
            format!("window {lo},{hi} is narrower than twice the generator margin {margin}")
        } else {
            format!("degrees within {margin} of the window edges")
        },
        unreliable,
    });
    Ok(KoszulReport {
        label: spec.label().to_string(),
        ell,
        generator_degrees: degrees,
        window,
        margin,
        rows,
        d_squared_zero,
        warning,
        quotient_dimension: quotient.dimension(),
        localized_dimension: localized.dimension(),
        x_f_matches: x_f_matches_cleared(spec)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_mpoly;

    #[test]
    fn regseq1_small() {
        let r = regseq1_check(2, 3).unwrap();
        assert_eq!(r.sequence, vec![parse_mpoly("-t1^6", 1, "t").unwrap()]);
        assert!(r.all_pass());
        let r = regseq1_check(3, 1).unwrap();
        assert_eq!(r.sequence[1], parse_mpoly("-t1*t2^2", 2, "t").unwrap());
        assert!(r.all_pass());
    }

    #[test]
    fn non_regular_sequence_is_detected() {
        // t2 is a zero divisor modulo (t1*t2)
        let seq = vec![parse_mpoly("t1*t2", 2, "t").unwrap(), parse_mpoly("t2", 2, "t").unwrap()];
        let r = regular_sequence_report("bad", seq, 2, None).unwrap();
        assert_eq!(r.steps, vec![true, false]);
        assert!(!r.all_pass());
    }

    #[test]
    fn regseq2_small() {
        let cube = FunctorSpec::from_coefficients(2, "0,0,0,1").unwrap();
        assert!(regseq2_check(&cube).unwrap().all_pass());
        let one_plus_t = FunctorSpec::from_coefficients(3, "1,1").unwrap();
        assert!(regseq2_check(&one_plus_t).unwrap().all_pass());
        assert!(regseq2_check(&FunctorSpec::classical(3, 0).unwrap()).unwrap().all_pass());
    }

    #[test]
    fn x_f_agrees_with_cleared_sequence() {
        for spec in [
            FunctorSpec::from_coefficients(2, "0,1").unwrap(),
            FunctorSpec::from_coefficients(3, "1,1").unwrap(),
            FunctorSpec::classical(3, 1).unwrap(),
        ] {
            assert!(x_f_matches_cleared(&spec).unwrap());
        }
    }

    #[test]
    fn cohomology_rank_two() {
        let spec = FunctorSpec::from_coefficients(2, "0,1").unwrap();
        let r = truncated_koszul_cohomology(&spec, (0, 8)).unwrap();
        assert!(r.pass(), "{r:?}");
        assert!(r.rows.iter().all(|row| row.cohomology[0] == 0));
        assert_eq!(r.quotient_dimension, 2);
    }

    #[test]
    fn repeated_element_falls_back_to_exact_ranks() {
        let x = parse_mpoly("t1", 1, "t").unwrap();
        let level = build_level(&[x.clone(), x], 1, &[1, 1], 4);
        let (h, certified) = level.cohomology();
        assert!(!certified);
        assert_eq!(h[0], 0);
        assert!(h[1] > 0);
        assert!(level.d_squared_zero());
    }

    #[test]
    fn narrow_window_is_flagged() {
        let spec = FunctorSpec::from_coefficients(2, "1,0,1").unwrap();
        let r = truncated_koszul_cohomology(&spec, (0, 3)).unwrap();
        let w = r.warning.clone().unwrap();
        assert_eq!(w.unreliable, vec![0, 1, 2, 3]);
        assert_eq!(r.interior_degrees(), 0);
    }
}
