use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{ExpVec, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Sparse multivariate polynomial over ℚ in a fixed number of variables.
///
/// Terms are kept in a `BTreeMap` keyed by [`ExpVec`], so iteration runs in
/// ascending graded reverse lexicographic order and equality/hashing are
/// structural. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<ExpVec, Rational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(ExpVec::zero(nvars), c)
    }

    /// The variable `t_{index+1}`.
    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "variable index {index} out of range for {nvars} variables");
        Self::monomial(ExpVec::unit(nvars, index), Rational::one())
    }

    pub fn monomial(exp: ExpVec, c: Rational) -> Self {
        let nvars = exp.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        MPoly { nvars, terms }
    }

    /// Builds a polynomial from (possibly repeated, possibly zero) terms.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExpVec, Rational)>,
    {
        let mut p = MPoly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector has wrong length");
            p.add_term(e, c);
        }
        p
    }

    /// Convenience constructor from integer coefficients and raw exponents.
    pub fn from_int_terms(nvars: usize, terms: &[(i64, &[i32])]) -> Self {
        Self::from_terms(
            nvars,
            terms
                .iter()
                .map(|(c, e)| (ExpVec::new(e.to_vec()), super::rat(*c))),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(e, c)| e.is_constant() && c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(ExpVec::is_constant)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExpVec, &Rational)> + ExactSizeIterator {
        self.terms.iter()
    }

    /// Terms in descending monomial order (leading term first).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&ExpVec, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (ExpVec, Rational)> {
        self.terms.into_iter()
    }

    pub fn leading_term(&self) -> Option<(&ExpVec, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, exp: &ExpVec) -> Rational {
        self.terms.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&ExpVec::zero(self.nvars))
    }

    /// Total degree; `-1` for the zero polynomial.
    pub fn total_degree(&self) -> i64 {
        self.terms.keys().map(ExpVec::degree).max().unwrap_or(-1)
    }

    pub fn degree_in(&self, var: usize) -> i32 {
        self.terms.keys().map(|e| e.get(var)).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, exp: ExpVec, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &MPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableCountMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn arith(&self, other: &MPoly, op: ArithOp) -> Result<MPoly> {
        self.check_vars(other)?;
        Ok(match op {
            ArithOp::Add => self.add_unchecked(other, false),
            ArithOp::Sub => self.add_unchecked(other, true),
            ArithOp::Mul => self.mul_unchecked(other),
        })
    }

    pub fn checked_add(&self, other: &MPoly) -> Result<MPoly> {
        self.arith(other, ArithOp::Add)
    }

    pub fn checked_sub(&self, other: &MPoly) -> Result<MPoly> {
        self.arith(other, ArithOp::Sub)
    }

    pub fn checked_mul(&self, other: &MPoly) -> Result<MPoly> {
        self.arith(other, ArithOp::Mul)
    }

    /// In-place `self += other`; variable counts must agree.
    pub fn add_assign_poly(&mut self, other: &MPoly) {
        debug_assert_eq!(self.nvars, other.nvars);
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    fn add_unchecked(&self, other: &MPoly, negate: bool) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), if negate { -c.clone() } else { c.clone() });
        }
        out
    }

    fn mul_unchecked(&self, other: &MPoly) -> MPoly {
        if self.is_zero() || other.is_zero() {
            return MPoly::zero(self.nvars);
        }
        let mut acc: HashMap<ExpVec, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                *acc.entry(ea.mul(eb)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        MPoly {
            nvars: self.nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, exp: &ExpVec, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e.mul(exp), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut result = MPoly::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> MPoly {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Fails with [`Error::NotDivisible`] carrying the remainder of
    /// multivariate division by the single divisor.
    pub fn exact_div(&self, divisor: &MPoly) -> Result<MPoly> {
        self.check_vars(divisor)?;
        let (lt_e, lt_c) = divisor.leading_term().ok_or(Error::DivisionByZero)?;
        let lt_inv = lt_c.recip();
        let mut rest = self.clone();
        let mut quotient = MPoly::zero(self.nvars);
        let mut remainder = MPoly::zero(self.nvars);
        while let Some((e, c)) = rest.leading_term() {
            if lt_e.divides(e) {
                let qe = e.div(lt_e);
                let qc = c * &lt_inv;
                for (de, dc) in &divisor.terms {
                    rest.add_term(de.mul(&qe), -(dc * &qc));
                }
                quotient.add_term(qe, qc);
            } else {
                let (e, c) = (e.clone(), c.clone());
                rest.terms.remove(&e);
                remainder.add_term(e, c);
            }
        }
        if remainder.is_zero() {
            Ok(quotient)
        } else {
            Err(Error::NotDivisible {
                remainder: Box::new(remainder),
            })
        }
    }

    /// Substitutes `values[i]` for variable `i`. All values must share a
    /// common variable count, which becomes the result's.
    pub fn substitute(&self, values: &[MPoly]) -> MPoly {
        assert_eq!(values.len(), self.nvars, "substitution needs one value per variable");
        let target = values.first().map_or(0, MPoly::nvars);
        let mut powers: Vec<Vec<MPoly>> = values.iter().map(|v| vec![MPoly::one(v.nvars)]).collect();
        let mut out = MPoly::zero(target);
        for (e, c) in &self.terms {
            let mut term = MPoly::constant(target, c.clone());
            for (i, &k) in e.as_slice().iter().enumerate() {
                assert!(k >= 0, "substitution into negative exponents");
                let k = k as usize;
                while powers[i].len() <= k {
                    let next = &powers[i][powers[i].len() - 1] * &values[i];
                    powers[i].push(next);
                }
                if k > 0 {
                    term = &term * &powers[i][k];
                }
            }
            out.add_assign_poly(&term);
        }
        out
    }

    /// Rewrites every exponent vector through `f`, merging collisions.
    pub fn map_exponents<F>(&self, nvars: usize, mut f: F) -> MPoly
    where
        F: FnMut(&ExpVec) -> ExpVec,
    {
        MPoly::from_terms(nvars, self.terms.iter().map(|(e, c)| (f(e), c.clone())))
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn partial_derivative(&self, var: usize) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e.get(var);
            if k != 0 {
                let mut d = e.clone();
                d.as_mut_vec()[var] -= 1;
                out.add_term(d, c * Rational::from_integer(k.into()));
            }
        }
        out
    }

    /// Sets variable `var` to the constant `value` and drops it, leaving
    /// `nvars - 1` variables.
    pub fn eliminate_var_with(&self, var: usize, value: &Rational) -> MPoly {
        let mut out = MPoly::zero(self.nvars - 1);
        for (e, c) in &self.terms {
            let k = e.get(var);
            let mut v = e.as_slice().to_vec();
            v.remove(var);
            let factor = num_traits::pow::Pow::pow(value, k as u32);
            out.add_term(ExpVec::new(v), c * factor);
        }
        out
    }

    /// Embeds into a ring with `extra` additional trailing variables.
    pub fn extend_vars(&self, extra: usize) -> MPoly {
        self.map_exponents(self.nvars + extra, |e| {
            let mut v = e.as_slice().to_vec();
            v.extend(std::iter::repeat_n(0, extra));
            ExpVec::new(v)
        })
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars);
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e.as_slice()) {
                if k >= 0 {
                    t *= num_traits::pow::Pow::pow(x, k as u32);
                } else {
                    t /= num_traits::pow::Pow::pow(x, (-k) as u32);
                }
            }
            total += t;
        }
        total
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly[{}]({})", self.nvars, self)
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("t"))
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.checked_add(rhs).expect("polynomial addition")
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.checked_sub(rhs).expect("polynomial subtraction")
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.checked_mul(rhs).expect("polynomial multiplication")
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&-Rational::one())
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(self, rhs: MPoly) -> MPoly {
        &self + &rhs
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: MPoly) -> MPoly {
        &self - &rhs
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, ratio};

    fn t(n: usize, i: usize) -> MPoly {
        MPoly::var(n, i)
    }

    #[test]
    fn difference_of_squares() {
        let (a, b) = (t(2, 0), t(2, 1));
        let p = (&a + &b) * (&a - &b);
        let expected = MPoly::from_int_terms(2, &[(1, &[2, 0]), (-1, &[0, 2])]);
        assert_eq!(p, expected);
    }

    #[test]
    fn additive_identity() {
        let p = MPoly::from_int_terms(3, &[(3, &[1, 2, 0]), (-2, &[0, 0, 1])]);
        assert_eq!(&p + &MPoly::zero(3), p);
    }

    #[test]
    fn trinomial_square_matches_brute_force() {
        // Oracle: expand term-by-term over all ordered pairs of terms.
        let s = &(&t(3, 0) + &t(3, 1)) + &t(3, 2);
        let mut oracle: BTreeMap<Vec<i32>, i64> = BTreeMap::new();
        for i in 0..3 {
            for j in 0..3 {
                let mut e = vec![0; 3];
                e[i] += 1;
                e[j] += 1;
                *oracle.entry(e).or_default() += 1;
            }
        }
        let sq = &s * &s;
        assert_eq!(sq.num_terms(), 6);
        for (e, c) in &oracle {
            assert_eq!(sq.coeff(&ExpVec::new(e.clone())), rat(*c));
        }
        let cross: Vec<_> = sq.terms().filter(|(e, _)| e.as_slice().iter().all(|&k| k <= 1)).collect();
        assert_eq!(cross.len(), 3);
        assert!(cross.iter().all(|(_, c)| **c == rat(2)));
    }

    #[test]
    fn mismatch_is_structural_error() {
        let err = t(2, 0).arith(&t(3, 0), ArithOp::Add).unwrap_err();
        assert_eq!(err, Error::VariableCountMismatch { left: 2, right: 3 });
    }

    #[test]
    fn exact_division_cases() {
        let (a, b) = (t(2, 0), t(2, 1));
        let num = MPoly::from_int_terms(2, &[(1, &[2, 0]), (-1, &[0, 2])]);
        assert_eq!(num.exact_div(&(&a - &b)).unwrap(), &a + &b);

        // Δ3 / (t1 - t2) = (t1 - t3)(t2 - t3)
        let (x, y, z) = (t(3, 0), t(3, 1), t(3, 2));
        let delta = &(&(&x - &y) * &(&x - &z)) * &(&y - &z);
        assert_eq!(delta.exact_div(&(&x - &y)).unwrap(), &(&x - &z) * &(&y - &z));

        match (&a + &b).exact_div(&(&a - &b)) {
            Err(Error::NotDivisible { remainder }) => assert!(!remainder.is_zero()),
            other => panic!("expected NotDivisible, got {other:?}"),
        }
        assert_eq!(a.exact_div(&MPoly::zero(2)), Err(Error::DivisionByZero));
    }

    #[test]
    fn derivative_and_substitution() {
        let p = MPoly::from_int_terms(2, &[(3, &[2, 1]), (1, &[0, 1])]);
        let dx = p.partial_derivative(0);
        assert_eq!(dx, MPoly::from_int_terms(2, &[(6, &[1, 1])]));
        // substitute t1 -> t1 + t2, t2 -> 1
        let s = p.substitute(&[&t(2, 0) + &t(2, 1), MPoly::one(2)]);
        let expected = &(&(&t(2, 0) + &t(2, 1)).pow(2)).scale(&rat(3)) + &MPoly::one(2);
        assert_eq!(s, expected);
        assert_eq!(p.eval(&[rat(2), ratio(1, 2)]), ratio(13, 2));
        assert_eq!(p.eliminate_var_with(1, &rat(2)), MPoly::from_int_terms(1, &[(6, &[2]), (2, &[0])]));
    }
}
