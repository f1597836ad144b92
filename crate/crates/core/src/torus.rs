//! The rational representation ring of the maximal torus of SU(n),
//! `ℚ[t1..tn]/(t1···tn − 1)`, and its localization at `F(t1)···F(tn)`.
//!
//! A [`TorusElem`] stores one canonical representative: every monomial is
//! shifted by a multiple of `(1, .., 1)` until its smallest exponent is 0.
//! Two elements are equal iff their canonical forms coincide.
//!
//! Divisibility is decided through the isomorphism with Laurent polynomials
//! in `t1..t_{n-1}` (`tn = (t1···t_{n-1})^{-1}`): a Laurent polynomial
//! divides another iff their monomial-free parts divide as polynomials.

use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poly::{ArithOp, ExpVec, MPoly, Rational, UPoly};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TorusElem {
    poly: MPoly,
}

impl TorusElem {
    /// Canonical representative of `p`, whose exponents may be negative.
    /// The rank is `p.nvars()`.
    pub fn canonicalize(p: &MPoly) -> TorusElem {
        let n = p.nvars();
        assert!(n >= 1, "torus of rank zero");
        TorusElem {
            poly: p.map_exponents(n, |e| e.shift(-e.min_entry())),
        }
    }

    pub fn zero(rank: usize) -> Self {
        TorusElem {
            poly: MPoly::zero(rank),
        }
    }

    pub fn one(rank: usize) -> Self {
        TorusElem {
            poly: MPoly::one(rank),
        }
    }

    pub fn constant(rank: usize, c: Rational) -> Self {
        Self::canonicalize(&MPoly::constant(rank, c))
    }

    pub fn var(rank: usize, i: usize) -> Self {
        Self::canonicalize(&MPoly::var(rank, i))
    }

    /// `t_{i+1}^{-1}`.
    pub fn var_inverse(rank: usize, i: usize) -> Self {
        let mut e = vec![0; rank];
        e[i] = -1;
        Self::canonicalize(&MPoly::monomial(ExpVec::new(e), Rational::one()))
    }

    pub fn rank(&self) -> usize {
        self.poly.nvars()
    }

    pub fn poly(&self) -> &MPoly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.poly.is_one()
    }

    fn check(&self, other: &TorusElem) -> Result<()> {
        if self.rank() != other.rank() {
            return Err(Error::VariableCountMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(())
    }

    pub fn arith(&self, other: &TorusElem, op: ArithOp) -> Result<TorusElem> {
        self.check(other)?;
        let p = self.poly.arith(&other.poly, op)?;
        Ok(match op {
            // sums of canonical monomials stay canonical
            ArithOp::Add | ArithOp::Sub => TorusElem { poly: p },
            ArithOp::Mul => Self::canonicalize(&p),
        })
    }

    pub fn add(&self, other: &TorusElem) -> TorusElem {
        self.arith(other, ArithOp::Add).expect("torus rank mismatch")
    }

    pub fn sub(&self, other: &TorusElem) -> TorusElem {
        self.arith(other, ArithOp::Sub).expect("torus rank mismatch")
    }

    pub fn mul(&self, other: &TorusElem) -> TorusElem {
        self.arith(other, ArithOp::Mul).expect("torus rank mismatch")
    }

    pub fn scale(&self, c: &Rational) -> TorusElem {
        TorusElem {
            poly: self.poly.scale(c),
        }
    }

    pub fn neg(&self) -> TorusElem {
        self.scale(&-Rational::one())
    }

    pub fn pow(&self, k: u32) -> TorusElem {
        (0..k).fold(Self::one(self.rank()), |acc, _| acc.mul(self))
    }

    pub fn act(&self, action: &SignedAction) -> TorusElem {
        assert_eq!(action.perm.len(), self.rank());
        let moved = action.perm.act_on_poly(&self.poly);
        let moved = if action.signed && action.perm.sign() < 0 {
            -&moved
        } else {
            moved
        };
        TorusElem { poly: moved }
    }

    /// Invariance under all of `S_n`, checked on adjacent transpositions.
    pub fn is_invariant(&self, signed: bool) -> bool {
        Permutation::adjacent_transpositions(self.rank())
            .into_iter()
            .all(|p| self.act(&SignedAction { perm: p, signed }) == *self)
    }

    /// Image in `ℚ[t1^±..t_{n-1}^±]`, as an [`MPoly`] with possibly negative
    /// exponents in `n - 1` variables.
    pub fn to_laurent(&self) -> MPoly {
        let n = self.rank();
        self.poly.map_exponents(n - 1, |e| {
            let last = e.get(n - 1);
            ExpVec::new(e.as_slice()[..n - 1].iter().map(|a| a - last).collect())
        })
    }

    /// Inverse of [`TorusElem::to_laurent`].
    pub fn from_laurent(p: &MPoly) -> TorusElem {
        let n = p.nvars() + 1;
        Self::canonicalize(&p.map_exponents(n, |e| {
            let mut v = e.as_slice().to_vec();
            v.push(0);
            ExpVec::new(v)
        }))
    }

    /// Exact quotient in the torus ring, or `None` if `other` does not
    /// divide `self`.
    pub fn exact_div(&self, other: &TorusElem) -> Result<Option<TorusElem>> {
        self.check(other)?;
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Some(self.clone()));
        }
        let (a, shift_a) = strip_monomial_content(&self.to_laurent());
        let (b, shift_b) = strip_monomial_content(&other.to_laurent());
        match a.exact_div(&b) {
            Ok(q) => {
                let shift = ExpVec::new(
                    shift_a
                        .as_slice()
                        .iter()
                        .zip(shift_b.as_slice())
                        .map(|(x, y)| x - y)
                        .collect(),
                );
                let q = q.mul_term(&shift, &Rational::one());
                Ok(Some(Self::from_laurent(&q)))
            }
            Err(Error::NotDivisible { .. }) => Ok(None),
            Err(e) => Err(e),
        }
    }

    /// `f(t1) ··· f(tn)`.
    pub fn product_of_values(rank: usize, f: &UPoly) -> TorusElem {
        (0..rank).fold(Self::one(rank), |acc, i| {
            acc.mul(&Self::canonicalize(&f.in_variable(rank, i)))
        })
    }

    /// `f(t_{i+1})`.
    pub fn value_at(rank: usize, f: &UPoly, i: usize) -> TorusElem {
        Self::canonicalize(&f.in_variable(rank, i))
    }
}

/// Divides out the largest Laurent monomial, returning the resulting
/// polynomial (all exponents ≥ 0, no variable dividing every term) and the
/// monomial that was removed.
fn strip_monomial_content(p: &MPoly) -> (MPoly, ExpVec) {
    let n = p.nvars();
    let mins: Vec<i32> = (0..n)
        .map(|i| p.terms().map(|(e, _)| e.get(i)).min().unwrap_or(0))
        .collect();
    let shift = ExpVec::new(mins.clone());
    let neg = ExpVec::new(mins.iter().map(|m| -m).collect());
    (p.mul_term(&neg, &Rational::one()), shift)
}

impl fmt::Display for TorusElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// A permutation acting on variable indices, optionally twisted by its sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedAction {
    pub perm: Permutation,
    pub signed: bool,
}

impl SignedAction {
    pub fn unsigned(perm: Permutation) -> Self {
        SignedAction { perm, signed: false }
    }

    pub fn signed(perm: Permutation) -> Self {
        SignedAction { perm, signed: true }
    }
}

/// Element `numerator / P^f_power` of the localized ring, where
/// `P = F(t1)···F(tn)`.
///
/// Kept reduced: `f_power` is lowered while `P` divides the numerator.
#[derive(Clone, Debug)]
pub struct LocalizedElem {
    numerator: TorusElem,
    f_power: u32,
    functor: UPoly,
}

impl LocalizedElem {
    pub fn new(numerator: TorusElem, f_power: u32, functor: UPoly) -> Result<Self> {
        if functor.is_zero() {
            return Err(Error::InvalidSpec("cannot localize at the zero polynomial".into()));
        }
        let mut x = LocalizedElem {
            numerator,
            f_power,
            functor,
        };
        x.reduce()?;
        Ok(x)
    }

    pub fn from_torus(x: TorusElem, functor: UPoly) -> Result<Self> {
        Self::new(x, 0, functor)
    }

    /// `ψ(k) = ∏ F(t_i)^{k_i}`, with negative powers placed in the
    /// denominator.
    pub fn lattice_unit(k: &[i64], functor: &UPoly) -> Result<Self> {
        let rank = k.len();
        let shift = k.iter().map(|&x| (-x).max(0)).max().unwrap_or(0);
        let mut num = TorusElem::one(rank);
        for (i, &ki) in k.iter().enumerate() {
            let fi = TorusElem::value_at(rank, functor, i);
            num = num.mul(&fi.pow((ki + shift) as u32));
        }
        Self::new(num, shift as u32, functor.clone())
    }

    pub fn numerator(&self) -> &TorusElem {
        &self.numerator
    }

    pub fn f_power(&self) -> u32 {
        self.f_power
    }

    pub fn functor(&self) -> &UPoly {
        &self.functor
    }

    pub fn rank(&self) -> usize {
        self.numerator.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// `P = F(t1)···F(tn)`.
    pub fn denominator_base(&self) -> TorusElem {
        TorusElem::product_of_values(self.rank(), &self.functor)
    }

    fn reduce(&mut self) -> Result<()> {
        if self.numerator.is_zero() {
            self.f_power = 0;
            return Ok(());
        }
        let p = self.denominator_base();
        while self.f_power > 0 {
            match self.numerator.exact_div(&p)? {
                Some(q) => {
                    self.numerator = q;
                    self.f_power -= 1;
                }
                None => break,
            }
        }
        Ok(())
    }

    fn check(&self, other: &LocalizedElem) -> Result<()> {
        if self.rank() != other.rank() {
            return Err(Error::VariableCountMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        if self.functor != other.functor {
            return Err(Error::FunctorMismatch);
        }
        Ok(())
    }

    pub fn arith(&self, other: &LocalizedElem, op: ArithOp) -> Result<LocalizedElem> {
        self.check(other)?;
        let p = self.denominator_base();
        let (num, power) = match op {
            ArithOp::Mul => (
                self.numerator.mul(&other.numerator),
                self.f_power + other.f_power,
            ),
            ArithOp::Add | ArithOp::Sub => {
                let power = self.f_power.max(other.f_power);
                let a = self.numerator.mul(&p.pow(power - self.f_power));
                let b = other.numerator.mul(&p.pow(power - other.f_power));
                (a.arith(&b, op)?, power)
            }
        };
        Self::new(num, power, self.functor.clone())
    }

    /// Cross-multiplied equality `a·P^k = b·P^m`.
    pub fn equals(&self, other: &LocalizedElem) -> Result<bool> {
        self.check(other)?;
        let p = self.denominator_base();
        let lhs = self.numerator.mul(&p.pow(other.f_power));
        let rhs = other.numerator.mul(&p.pow(self.f_power));
        Ok(lhs == rhs)
    }

    pub fn act(&self, action: &SignedAction) -> LocalizedElem {
        // P is symmetric, so only the numerator moves.
        LocalizedElem {
            numerator: self.numerator.act(action),
            f_power: self.f_power,
            functor: self.functor.clone(),
        }
    }
}

impl PartialEq for LocalizedElem {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other).unwrap_or(false)
    }
}

impl fmt::Display for LocalizedElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.f_power == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / P^{}", self.numerator, self.f_power)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_mpoly;

    fn te(s: &str, n: usize) -> TorusElem {
        TorusElem::canonicalize(&parse_mpoly(s, n, "t").unwrap())
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(TorusElem::var_inverse(2, 0), te("t2", 2));
        assert_eq!(te("t1*t2*t3", 3), TorusElem::one(3));
        assert_eq!(te("t1^2 + t1*t2", 2), te("t1^2 + 1", 2));
        // idempotent
        let x = te("t1^-2*t2 + 3*t1*t2^4", 2);
        assert_eq!(TorusElem::canonicalize(x.poly()), x);
    }

    #[test]
    fn action_examples() {
        let swap = Permutation::transposition(2, 0, 1);
        assert_eq!(te("t1", 2).act(&SignedAction::unsigned(swap.clone())), te("t2", 2));
        let anti = te("t1 - t2", 2);
        assert_eq!(anti.act(&SignedAction::signed(swap)), anti);
        let cyc = Permutation::cycle(3, &[0, 1, 2]);
        assert_eq!(
            te("t1^2*t2", 3).act(&SignedAction::unsigned(cyc)),
            te("t2^2*t3", 3)
        );
    }

    #[test]
    fn invariance_examples() {
        assert!(te("t1 + t2 + t3", 3).is_invariant(false));
        let delta = te("t1 - t2", 3)
            .mul(&te("t1 - t3", 3))
            .mul(&te("t2 - t3", 3));
        assert!(delta.is_invariant(true));
        assert!(!delta.is_invariant(false));
        assert!(!te("t1", 2).is_invariant(false));
    }

    #[test]
    fn laurent_division() {
        // (t1^2 - 1) / (t1 - 1) with t1 t2 = 1 in rank 2
        let a = te("t1^2 - 1", 2);
        let b = te("t1 - 1", 2);
        assert_eq!(a.exact_div(&b).unwrap().unwrap(), te("t1 + 1", 2));
        // t1 - t2 = t1 - t1^{-1} = t1^{-1}(t1^2 - 1), so divisible by t1 + 1
        let q = te("t1 - t2", 2).exact_div(&te("t1 + 1", 2)).unwrap().unwrap();
        assert_eq!(q.mul(&te("t1 + 1", 2)), te("t1 - t2", 2));
        assert!(te("t1 + 2", 2).exact_div(&te("t1 - 1", 2)).unwrap().is_none());
        // monomials are units
        assert!(te("1", 3).exact_div(&te("t1^5*t3", 3)).unwrap().is_some());
    }

    #[test]
    fn localized_arithmetic() {
        let f = UPoly::from_ints(&[1, 1]);
        let a = LocalizedElem::new(te("t1", 2), 1, f.clone()).unwrap();
        let b = LocalizedElem::new(te("t2", 2), 1, f.clone()).unwrap();
        let sum = a.arith(&b, ArithOp::Add).unwrap();
        assert_eq!(sum.f_power(), 1);
        assert_eq!(sum.numerator(), &te("t1 + t2", 2));

        // (P x)/P reduces to x/1
        let p = TorusElem::product_of_values(2, &f);
        let px = LocalizedElem::new(p.mul(&te("t1 + 3", 2)), 1, f.clone()).unwrap();
        assert_eq!(px.f_power(), 0);
        assert_eq!(px.numerator(), &te("t1 + 3", 2));

        // F(t) = t: P = t1 t2 = 1, so 1/P is already 1
        let ft = UPoly::from_ints(&[0, 1]);
        let inv = LocalizedElem::new(TorusElem::one(2), 1, ft.clone()).unwrap();
        assert_eq!(inv.f_power(), 0);
        assert!(inv.numerator().is_one());

        let other = LocalizedElem::from_torus(TorusElem::one(2), ft).unwrap();
        assert_eq!(a.arith(&other, ArithOp::Add), Err(Error::FunctorMismatch));
    }

    #[test]
    fn lattice_unit_is_invertible() {
        let f = UPoly::from_ints(&[1, 1]);
        let u = LocalizedElem::lattice_unit(&[1, -1], &f).unwrap();
        let v = LocalizedElem::lattice_unit(&[-1, 1], &f).unwrap();
        let one = LocalizedElem::from_torus(TorusElem::one(2), f).unwrap();
        assert_eq!(u.arith(&v, ArithOp::Mul).unwrap(), one);
        assert_eq!(u.numerator().rank(), 2);
    }
}
