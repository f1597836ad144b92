//! Reduced Gröbner bases over ℚ by Buchberger's algorithm, with normal
//! forms, elimination, ideal quotients and saturation.
//!
//! Public results are always in graded reverse lexicographic order. A block
//! elimination order is used internally to project ideals away from
//! auxiliary variables.

mod quotient;

pub use quotient::{localize_artinian, LocalizedQuotient, QuotientAlgebra};

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poly::{ExpVec, MPoly, Rational};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MonomialOrder {
    Grevlex,
    /// The first `block` variables are larger than any monomial in the
    /// rest; grevlex inside each block.
    Eliminate { block: usize },
}

impl MonomialOrder {
    /// A vector whose lexicographic order is this monomial order.
    fn key(self, e: &[i32]) -> Vec<i32> {
        fn grevlex_key(e: &[i32], out: &mut Vec<i32>) {
            out.push(e.iter().sum());
            out.extend(e.iter().rev().map(|a| -a));
        }
        let mut out = Vec::with_capacity(e.len() + 2);
        match self {
            MonomialOrder::Grevlex => grevlex_key(e, &mut out),
            MonomialOrder::Eliminate { block } => {
                grevlex_key(&e[..block], &mut out);
                grevlex_key(&e[block..], &mut out);
            }
        }
        out
    }
}

/// A monomial tagged with its sort key.
#[derive(Clone, PartialEq, Eq, Debug)]
struct Mono {
    key: Vec<i32>,
    exp: Vec<i32>,
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key.cmp(&other.key)
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in a fixed order; the leading term is the last entry.
#[derive(Clone, Debug, PartialEq)]
struct Poly {
    terms: BTreeMap<Mono, Rational>,
}

fn divides(a: &[i32], b: &[i32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[i32], b: &[i32]) -> Vec<i32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn coprime(a: &[i32], b: &[i32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

impl Poly {
    fn from_mpoly(p: &MPoly, order: MonomialOrder) -> Poly {
        Poly {
            terms: p
                .terms()
                .map(|(e, c)| {
                    let exp = e.as_slice().to_vec();
                    (Mono { key: order.key(&exp), exp }, c.clone())
                })
                .collect(),
        }
    }

    fn to_mpoly(&self, nvars: usize) -> MPoly {
        MPoly::from_terms(
            nvars,
            self.terms.iter().map(|(m, c)| (ExpVec::new(m.exp.clone()), c.clone())),
        )
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> Option<(&Mono, &Rational)> {
        self.terms.last_key_value()
    }

    fn lead_exp(&self) -> &[i32] {
        &self.lead().expect("leading term of zero").0.exp
    }

    fn make_monic(&mut self) {
        if let Some((_, c)) = self.lead() {
            let inv = c.recip();
            if !inv.is_one() {
                for v in self.terms.values_mut() {
                    *v *= &inv;
                }
            }
        }
    }

    /// `self -= c · x^shift · g`.
    fn sub_multiple(&mut self, c: &Rational, shift: &[i32], g: &Poly, order: MonomialOrder) {
        for (m, gc) in &g.terms {
            let exp: Vec<i32> = m.exp.iter().zip(shift).map(|(a, b)| a + b).collect();
            let key = order.key(&exp);
            let mono = Mono { key, exp };
            let delta = gc * c;
            match self.terms.get_mut(&mono) {
                Some(v) => {
                    *v -= delta;
                    if v.is_zero() {
                        self.terms.remove(&mono);
                    }
                }
                None => {
                    self.terms.insert(mono, -delta);
                }
            }
        }
    }
}

/// Full reduction of `p` by `basis`: no term of the result is divisible by
/// a leading monomial of the basis.
fn reduce(p: &Poly, basis: &[&Poly], order: MonomialOrder) -> Poly {
    let mut rest = p.clone();
    let mut out = Poly { terms: BTreeMap::new() };
    while let Some((m, c)) = rest.terms.pop_last() {
        match basis.iter().find(|g| divides(g.lead_exp(), &m.exp)) {
            Some(g) => {
                let (gm, gc) = g.lead().unwrap();
                let shift: Vec<i32> = m.exp.iter().zip(&gm.exp).map(|(a, b)| a - b).collect();
                let factor = &c / gc;
                // the leading term cancels exactly; subtract the tail only
                let mut tail = (*g).clone();
                tail.terms.pop_last();
                rest.sub_multiple(&factor, &shift, &tail, order);
            }
            None => {
                out.terms.insert(m, c);
            }
        }
    }
    out
}

fn s_polynomial(f: &Poly, g: &Poly, order: MonomialOrder) -> Poly {
    let (fm, fc) = f.lead().unwrap();
    let (gm, gc) = g.lead().unwrap();
    let l = lcm(&fm.exp, &gm.exp);
    let sf: Vec<i32> = l.iter().zip(&fm.exp).map(|(a, b)| a - b).collect();
    let sg: Vec<i32> = l.iter().zip(&gm.exp).map(|(a, b)| a - b).collect();
    let mut out = Poly { terms: BTreeMap::new() };
    out.sub_multiple(&-fc.recip(), &sf, f, order);
    out.sub_multiple(&gc.recip(), &sg, g, order);
    out
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Mono,
}

/// Buchberger's algorithm with the Gebauer–Möller criteria and the normal
/// selection strategy; returns the reduced basis sorted by leading monomial.
fn buchberger(gens: Vec<Poly>, order: MonomialOrder) -> Vec<Poly> {
    let mut store: Vec<Poly> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    // Insert generators one at a time, smallest first, reduced against the
    // current basis.
    let mut input: Vec<Poly> = gens.into_iter().filter(|p| !p.is_zero()).collect();
    input.sort_by(|a, b| a.lead().unwrap().0.cmp(b.lead().unwrap().0));
    let mut queue = std::collections::VecDeque::from(input);

    loop {
        let h = if let Some(p) = queue.pop_front() {
            let basis: Vec<&Poly> = active.iter().map(|&k| &store[k]).collect();
            reduce(&p, &basis, order)
        } else if !pairs.is_empty() {
            // normal strategy: smallest lcm, ties by index
            let best = (0..pairs.len())
                .min_by(|&a, &b| {
                    pairs[a]
                        .lcm
                        .cmp(&pairs[b].lcm)
                        .then((pairs[a].j, pairs[a].i).cmp(&(pairs[b].j, pairs[b].i)))
                })
                .unwrap();
            let pair = pairs.swap_remove(best);
            let s = s_polynomial(&store[pair.i], &store[pair.j], order);
            let basis: Vec<&Poly> = active.iter().map(|&k| &store[k]).collect();
            reduce(&s, &basis, order)
        } else {
            break;
        };
        if h.is_zero() {
            continue;
        }
        let mut h = h;
        h.make_monic();
        if h.lead_exp().iter().all(|&a| a == 0) {
            // unit ideal
            return vec![h];
        }
        let hi = store.len();
        store.push(h);
        update(&store, &mut active, &mut pairs, hi, order);
    }
    finish(store, active, order)
}

/// The Gebauer–Möller update step for a new basis element `h`.
fn update(store: &[Poly], active: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: usize, order: MonomialOrder) {
    let lh = store[h].lead_exp().to_vec();
    let mk = |exp: Vec<i32>| Mono { key: order.key(&exp), exp };
    let lcm_with = |g: usize| lcm(&lh, store[g].lead_exp());

    // new pairs (g, h), pruned by the chain criterion among themselves
    let candidates: Vec<usize> = active.clone();
    let mut kept: Vec<usize> = Vec::new();
    for (idx, &g1) in candidates.iter().enumerate() {
        let l1 = lcm_with(g1);
        let lg1 = store[g1].lead_exp();
        if coprime(&lh, lg1) {
            kept.push(g1);
            continue;
        }
        let dominated_later = candidates[idx + 1..]
            .iter()
            .any(|&g2| divides(&lcm_with(g2), &l1));
        let dominated_kept = kept.iter().any(|&g2| divides(&lcm_with(g2), &l1));
        if !dominated_later && !dominated_kept {
            kept.push(g1);
        }
    }
    // drop pairs with coprime leading monomials (product criterion)
    let new_pairs: Vec<Pair> = kept
        .into_iter()
        .filter(|&g| !coprime(&lh, store[g].lead_exp()))
        .map(|g| Pair {
            i: g,
            j: h,
            lcm: mk(lcm_with(g)),
        })
        .collect();

    // old pairs whose lcm is strictly divisible through h
    pairs.retain(|p| {
        let l = &p.lcm.exp;
        !(divides(&lh, l)
            && &lcm(store[p.i].lead_exp(), &lh) != l
            && &lcm(&lh, store[p.j].lead_exp()) != l)
    });
    pairs.extend(new_pairs);

    active.retain(|&g| !divides(&lh, store[g].lead_exp()));
    active.push(h);
}

fn finish(store: Vec<Poly>, active: Vec<usize>, order: MonomialOrder) -> Vec<Poly> {
    // minimal basis: drop elements whose leading monomial is divisible by
    // another's (ties keep the earlier one)
    let mut minimal: Vec<usize> = Vec::new();
    for &g in &active {
        let lg = store[g].lead_exp();
        let redundant = active.iter().any(|&o| {
            o != g && divides(store[o].lead_exp(), lg) && (store[o].lead_exp() != lg || o < g)
        });
        if !redundant {
            minimal.push(g);
        }
    }
    let mut out: Vec<Poly> = Vec::new();
    for &g in &minimal {
        let others: Vec<&Poly> = minimal.iter().filter(|&&o| o != g).map(|&o| &store[o]).collect();
        let (lead_m, lead_c) = store[g].lead().unwrap();
        let mut tail = store[g].clone();
        tail.terms.pop_last();
        let mut r = reduce(&tail, &others, order);
        r.terms.insert(lead_m.clone(), lead_c.clone());
        r.make_monic();
        out.push(r);
    }
    out.sort_by(|a, b| a.lead().unwrap().0.cmp(b.lead().unwrap().0));
    out
}

/// A reduced Gröbner basis in graded reverse lexicographic order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    nvars: usize,
    polys: Vec<Poly>,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.polys == other.polys
    }
}

impl GroebnerBasis {
    pub fn compute(gens: &[MPoly], nvars: usize) -> Result<Self> {
        Self::compute_in(gens, nvars, MonomialOrder::Grevlex)
    }

    fn compute_in(gens: &[MPoly], nvars: usize, order: MonomialOrder) -> Result<Self> {
        for g in gens {
            if g.nvars() != nvars {
                return Err(Error::VariableCountMismatch {
                    left: nvars,
                    right: g.nvars(),
                });
            }
        }
        let polys = gens.iter().map(|g| Poly::from_mpoly(g, order)).collect();
        Ok(GroebnerBasis {
            nvars,
            polys: buchberger(polys, order),
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> Vec<MPoly> {
        self.polys.iter().map(|p| p.to_mpoly(self.nvars)).collect()
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].lead_exp().iter().all(|&a| a == 0)
    }

    pub fn leading_monomials(&self) -> Vec<ExpVec> {
        self.polys.iter().map(|p| ExpVec::new(p.lead_exp().to_vec())).collect()
    }

    pub fn normal_form(&self, p: &MPoly) -> Result<MPoly> {
        if p.nvars() != self.nvars {
            return Err(Error::VariableCountMismatch {
                left: self.nvars,
                right: p.nvars(),
            });
        }
        let basis: Vec<&Poly> = self.polys.iter().collect();
        let r = reduce(&Poly::from_mpoly(p, MonomialOrder::Grevlex), &basis, MonomialOrder::Grevlex);
        Ok(r.to_mpoly(self.nvars))
    }

    pub fn contains(&self, p: &MPoly) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// True if every S-polynomial reduces to zero.
    pub fn is_groebner(&self) -> bool {
        let basis: Vec<&Poly> = self.polys.iter().collect();
        for i in 0..self.polys.len() {
            for j in i + 1..self.polys.len() {
                let s = s_polynomial(&self.polys[i], &self.polys[j], MonomialOrder::Grevlex);
                if !reduce(&s, &basis, MonomialOrder::Grevlex).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// True if no monomial of any element is divisible by the leading
    /// monomial of another, and all elements are monic.
    pub fn is_reduced(&self) -> bool {
        self.polys.iter().enumerate().all(|(i, p)| {
            p.lead().is_some_and(|(_, c)| c.is_one())
                && self.polys.iter().enumerate().all(|(j, q)| {
                    i == j || p.terms.keys().all(|m| !divides(q.lead_exp(), &m.exp))
                })
        })
    }

    /// Monomials of total degree `d` outside the initial ideal.
    pub fn standard_monomials_of_degree(&self, d: i32) -> Vec<ExpVec> {
        crate::symm::exponents_of_degree(self.nvars, d)
            .into_iter()
            .filter(|e| self.polys.iter().all(|p| !divides(p.lead_exp(), e)))
            .map(ExpVec::new)
            .collect()
    }

    /// All standard monomials, ascending, or the index of a variable with no
    /// pure power among the leading monomials.
    pub fn standard_monomials(&self) -> Result<Vec<ExpVec>> {
        if self.is_unit() {
            return Ok(Vec::new());
        }
        for var in 0..self.nvars {
            let has_pure_power = self.polys.iter().any(|p| {
                let e = p.lead_exp();
                e[var] > 0 && e.iter().enumerate().all(|(i, &a)| i == var || a == 0)
            });
            if !has_pure_power {
                return Err(Error::InfiniteDimensional { witness: var });
            }
        }
        let mut found = vec![vec![0; self.nvars]];
        let mut frontier = found.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for e in &frontier {
                for var in 0..self.nvars {
                    let mut m = e.clone();
                    m[var] += 1;
                    if self.polys.iter().all(|p| !divides(p.lead_exp(), &m)) && !next.contains(&m) {
                        next.push(m);
                    }
                }
            }
            found.extend(next.iter().cloned());
            frontier = next;
        }
        let mut out: Vec<ExpVec> = found.into_iter().map(ExpVec::new).collect();
        out.sort();
        out.dedup();
        Ok(out)
    }

    pub fn to_json(&self, prefix: &str) -> Value {
        json!({
            "variables": (1..=self.nvars).map(|i| format!("{prefix}{i}")).collect::<Vec<_>>(),
            "generators": self.generators().iter().map(|g| g.to_text(prefix)).collect::<Vec<_>>(),
        })
    }
}

/// Generators of `I ∩ ℚ[x_{k+1}..x_n]`, rewritten in the last `n − k`
/// variables, as a grevlex basis.
pub fn eliminate(gens: &[MPoly], nvars: usize, k: usize) -> Result<GroebnerBasis> {
    let gb = GroebnerBasis::compute_in(gens, nvars, MonomialOrder::Eliminate { block: k })?;
    let kept: Vec<MPoly> = gb
        .polys
        .iter()
        .filter(|p| p.terms.keys().all(|m| m.exp[..k].iter().all(|&a| a == 0)))
        .map(|p| {
            MPoly::from_terms(
                nvars - k,
                p.terms.iter().map(|(m, c)| (ExpVec::new(m.exp[k..].to_vec()), c.clone())),
            )
        })
        .collect();
    GroebnerBasis::compute(&kept, nvars - k)
}

/// Prepends one variable, used as the elimination parameter.
fn with_leading_var(p: &MPoly) -> MPoly {
    p.map_exponents(p.nvars() + 1, |e| {
        let mut v = vec![0];
        v.extend_from_slice(e.as_slice());
        ExpVec::new(v)
    })
}

/// `I ∩ J` via `z·I + (1 − z)·J` and elimination of `z`.
pub fn intersection(i: &GroebnerBasis, j: &GroebnerBasis) -> Result<GroebnerBasis> {
    let n = i.nvars;
    if j.nvars != n {
        return Err(Error::VariableCountMismatch { left: n, right: j.nvars });
    }
    let z = MPoly::var(n + 1, 0);
    let one_minus_z = &MPoly::one(n + 1) - &z;
    let mut gens: Vec<MPoly> = i.generators().iter().map(|g| &z * &with_leading_var(g)).collect();
    gens.extend(j.generators().iter().map(|g| &one_minus_z * &with_leading_var(g)));
    eliminate(&gens, n + 1, 1)
}

/// `(I : f)`.
pub fn ideal_quotient(i: &GroebnerBasis, f: &MPoly) -> Result<GroebnerBasis> {
    if f.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let principal = GroebnerBasis::compute(std::slice::from_ref(f), i.nvars)?;
    let meet = intersection(i, &principal)?;
    let gens = meet
        .generators()
        .iter()
        .map(|g| {
            g.exact_div(f).map_err(|_| {
                Error::InvariantViolation("element of I ∩ (f) not divisible by f".into())
            })
        })
        .collect::<Result<Vec<_>>>()?;
    GroebnerBasis::compute(&gens, i.nvars)
}

/// `(I : f^∞)` via `I + (1 − z·f)` and elimination of `z`.
pub fn saturation(i: &GroebnerBasis, f: &MPoly) -> Result<GroebnerBasis> {
    if f.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let n = i.nvars;
    let z = MPoly::var(n + 1, 0);
    let mut gens: Vec<MPoly> = i.generators().iter().map(with_leading_var).collect();
    gens.push(&MPoly::one(n + 1) - &(&z * &with_leading_var(f)));
    eliminate(&gens, n + 1, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_mpoly;

    fn p(s: &str, n: usize) -> MPoly {
        parse_mpoly(s, n, "t").unwrap()
    }

    fn gb(gens: &[&str], n: usize) -> GroebnerBasis {
        let g: Vec<MPoly> = gens.iter().map(|s| p(s, n)).collect();
        GroebnerBasis::compute(&g, n).unwrap()
    }

    #[test]
    fn small_bases() {
        let b = gb(&["2*t1^2 - 2"], 1);
        assert_eq!(b.generators(), vec![p("t1^2 - 1", 1)]);
        let b = gb(&["t1 - 1", "t2 - t1"], 2);
        assert_eq!(b.generators(), vec![p("t2 - 1", 2), p("t1 - 1", 2)]);
        assert!(gb(&["t1", "t1 + 1"], 2).is_unit());
        assert!(gb(&[], 2).is_empty());
    }

    #[test]
    fn textbook_basis() {
        // x^2 y - 1, x y^2 - x
        let b = gb(&["t1^2*t2 - 1", "t1*t2^2 - t1"], 2);
        assert!(b.is_groebner());
        assert!(b.is_reduced());
        assert!(b.contains(&p("t1^2*t2 - 1", 2)).unwrap());
        assert!(b.contains(&p("t1*t2^2 - t1", 2)).unwrap());
        assert_eq!(b.generators(), vec![p("t2^2 - 1", 2), p("t1^2 - t2", 2)]);
        let c = gb(&["t1*t2^2 - t1", "t1^2*t2 - 1", "t1^3*t2^2 - t1*t2"], 2);
        assert_eq!(b, c);
    }

    #[test]
    fn normal_forms() {
        let b = gb(&["t1^2 - 1"], 1);
        assert_eq!(b.normal_form(&p("t1^2", 1)).unwrap(), p("1", 1));
        let x = p("t1^5 + 3*t1^2", 1);
        let nf = b.normal_form(&x).unwrap();
        assert_eq!(b.normal_form(&nf).unwrap(), nf);
        assert_eq!(b.standard_monomials().unwrap().len(), 2);
        let inf = gb(&["t1^2"], 2);
        assert_eq!(inf.standard_monomials(), Err(Error::InfiniteDimensional { witness: 1 }));
    }

    #[test]
    fn quotients_and_saturation() {
        let x2 = gb(&["t1^2"], 2);
        assert_eq!(ideal_quotient(&x2, &p("t1", 2)).unwrap(), gb(&["t1"], 2));
        let xy = gb(&["t1*t2"], 2);
        assert_eq!(ideal_quotient(&xy, &p("t2", 2)).unwrap(), gb(&["t1"], 2));
        let x2y = gb(&["t1^2*t2"], 2);
        assert_eq!(saturation(&x2y, &p("t1", 2)).unwrap(), gb(&["t2"], 2));
        assert!(ideal_quotient(&x2, &p("t1^2", 2)).unwrap().is_unit());
        let meet = intersection(&gb(&["t1"], 2), &gb(&["t2"], 2)).unwrap();
        assert_eq!(meet, gb(&["t1*t2"], 2));
    }

    #[test]
    fn elimination() {
        // x - t^2, y - t^3  ->  x^3 - y^2 after eliminating t
        let gens = vec![p("t2 - t1^2", 3), p("t3 - t1^3", 3)];
        let e = eliminate(&gens, 3, 1).unwrap();
        assert_eq!(e.generators(), vec![p("t1^3 - t2^2", 2)]);
    }
}
