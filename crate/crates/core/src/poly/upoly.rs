use std::fmt;

use num_traits::{One, Zero};

use super::{format_rational, ExpVec, MPoly, Rational};

/// Dense univariate polynomial over ℚ; `coeffs[i]` multiplies `t^i`.
///
/// The highest stored coefficient is nonzero unless the polynomial is zero,
/// in which case `coeffs` is empty.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UPoly {
    coeffs: Vec<Rational>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| super::rat(c)).collect())
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    /// `c * t^k`.
    pub fn monomial(k: usize, c: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// `f(arg)` by Horner's scheme.
    pub fn eval_subst(&self, arg: &MPoly) -> MPoly {
        let n = arg.nvars();
        self.coeffs.iter().rev().fold(MPoly::zero(n), |acc, c| {
            let mut next = &acc * arg;
            next.add_term(ExpVec::zero(n), c.clone());
            next
        })
    }

    /// `f(t_{var+1})` in a ring of `nvars` variables, built termwise.
    pub fn in_variable(&self, nvars: usize, var: usize) -> MPoly {
        MPoly::from_terms(
            nvars,
            self.coeffs.iter().enumerate().map(|(k, c)| {
                let mut e = vec![0; nvars];
                e[var] = k as i32;
                (ExpVec::new(e), c.clone())
            }),
        )
    }

    /// `t^k * f(t)`.
    pub fn shift_up(&self, k: usize) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UPoly { coeffs }
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(i.into()))
                .collect(),
        )
    }

    /// The antiderivative `G` of `(F(t) - F(0)) / t` with `G(0) = 0`, that
    /// is `G(t) = sum_{i>=1} mu_i t^i / i`.
    pub fn antiderivative_shifted(&self) -> UPoly {
        let mut coeffs = vec![Rational::zero(); self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            coeffs[i] = c / Rational::from_integer(i.into());
        }
        UPoly::new(coeffs)
    }

    /// Drops the constant term.
    pub fn without_constant(&self) -> UPoly {
        let mut coeffs = self.coeffs.clone();
        if let Some(c) = coeffs.first_mut() {
            *c = Rational::zero();
        }
        UPoly::new(coeffs)
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        UPoly::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UPoly::new(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }
}

impl fmt::Display for UPoly {
    /// Same conventions as the multivariate text form, variable `t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = MPoly::from_terms(
            1,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (ExpVec::new(vec![i as i32]), c.clone())),
        );
        let text = p.to_text("t");
        // single variable: `t1^k` reads better as `t^k`
        f.write_str(&text.replace("t1^", "t^"))
    }
}

impl UPoly {
    /// Comma-separated coefficient list `mu0,mu1,...` as accepted by the CLI.
    pub fn coefficient_list(&self) -> String {
        self.coeffs.iter().map(format_rational).collect::<Vec<_>>().join(",")
    }
}
