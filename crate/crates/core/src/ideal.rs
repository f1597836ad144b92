//! The higher fusion ideal `J_F` of SU(n) and its potential.
//!
//! Generators come in three guises: the antisymmetric determinants `q_i`,
//! the symmetric quotients `c_{F,j} = q_j / Δ`, and the latter rewritten in
//! the elementary basis `c̄1..c̄n` with `c̄n = 1`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{parse_rational, MPoly, Rational, UPoly};
use crate::symm::{self, ElemBasisPoly};
use crate::torus::{LocalizedElem, TorusElem};

/// A rank together with the character polynomial `F` of an exponential
/// functor.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FunctorSpec {
    rank: usize,
    functor: UPoly,
    label: String,
}

impl FunctorSpec {
    pub fn new(rank: usize, functor: UPoly, label: impl Into<String>) -> Result<Self> {
        if rank < 2 {
            return Err(Error::InvalidSpec(format!("rank must be at least 2, got {rank}")));
        }
        match functor.degree() {
            Some(d) if d > 0 => {}
            _ => return Err(Error::InvalidSpec(format!("F = {functor} must have positive degree"))),
        }
        Ok(FunctorSpec {
            rank,
            functor,
            label: label.into(),
        })
    }

    /// `F(t) = (−t)^{n+k}`, the functor whose fusion ring is the Verlinde
    /// ring of SU(n) at level `k`.
    pub fn classical(n: usize, k: usize) -> Result<Self> {
        let sign = if (n + k) % 2 == 0 { 1 } else { -1 };
        Self::new(
            n,
            UPoly::monomial(n + k, Rational::from_integer(sign.into())),
            format!("classical n={n} k={k}"),
        )
    }

    /// Parses `"mu0,mu1,...,mud"`.
    pub fn from_coefficients(rank: usize, list: &str) -> Result<Self> {
        let coeffs = list
            .split(',')
            .map(|s| parse_rational(s.trim()))
            .collect::<Result<Vec<_>>>()?;
        let f = UPoly::new(coeffs);
        let label = format!("rank {rank} F = {f}");
        Self::new(rank, f, label)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn functor(&self) -> &UPoly {
        &self.functor
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn degree(&self) -> usize {
        self.functor.degree().unwrap_or(0)
    }
}

/// `q_i = det` of the matrix with first row `F(t_j) t_j^i` and lower rows
/// `t_j^{n−2}, .., t_j, 1`, for `i = 0..n−2`.
pub fn generators_antisym(spec: &FunctorSpec) -> Vec<MPoly> {
    let n = spec.rank;
    let lower: Vec<UPoly> = (0..n - 1)
        .rev()
        .map(|e| UPoly::monomial(e, Rational::one()))
        .collect();
    (0..n - 1)
        .map(|i| {
            let mut rows = vec![spec.functor.shift_up(i)];
            rows.extend(lower.iter().cloned());
            symm::alternant(&rows, n)
        })
        .collect()
}

/// `c_{F,j} = Σ_{i≥1} μ_i h_{i+j−(n−1)}`, straight from the expansion.
pub fn generators_sym_expansion(spec: &FunctorSpec) -> Vec<MPoly> {
    let n = spec.rank;
    (0..n - 1)
        .map(|j| {
            let mut out = MPoly::zero(n);
            for (i, mu) in spec.functor.coeffs().iter().enumerate().skip(1) {
                if !mu.is_zero() {
                    let k = i as i64 + j as i64 - (n as i64 - 1);
                    out.add_assign_poly(&symm::complete(k, n).scale(mu));
                }
            }
            out
        })
        .collect()
}

/// The symmetric generators, cross-validated against `q_j / Δ`.
pub fn generators_sym(spec: &FunctorSpec) -> Result<Vec<MPoly>> {
    let expansion = generators_sym_expansion(spec);
    for (j, (q, c)) in generators_antisym(spec).iter().zip(&expansion).enumerate() {
        let quotient = symm::divide_by_vandermonde(q)?;
        if &quotient != c {
            return Err(Error::InvariantViolation(format!(
                "c_F,{j}: expansion {c} differs from q/Δ = {quotient}"
            )));
        }
    }
    Ok(expansion)
}

/// All three forms of the generators of `J_F`.
#[derive(Clone, Debug)]
pub struct IdealPresentation {
    pub rank: usize,
    pub antisym: Vec<MPoly>,
    pub sym: Vec<MPoly>,
    /// In `c̄1..c̄n` with `c̄n = 1` imposed.
    pub elem: Vec<ElemBasisPoly>,
}

impl IdealPresentation {
    pub fn build(spec: &FunctorSpec) -> Result<Self> {
        let antisym = generators_antisym(spec);
        let sym = generators_sym(spec)?;
        let elem = sym
            .iter()
            .map(|c| symm::to_elem_basis(c).map(|e| e.with_last_one()))
            .collect::<Result<Vec<_>>>()?;
        let p = IdealPresentation {
            rank: spec.rank,
            antisym,
            sym,
            elem,
        };
        p.check()?;
        Ok(p)
    }

    /// Re-derives every stated relation between the three forms.
    pub fn check(&self) -> Result<()> {
        let delta = symm::vandermonde(self.rank);
        for (j, ((q, c), e)) in self.antisym.iter().zip(&self.sym).zip(&self.elem).enumerate() {
            if &(&delta * c) != q {
                return Err(Error::InvariantViolation(format!("q_{j} != Δ·c_F,{j}")));
            }
            if !symm::is_antisymmetric(q) || !symm::is_symmetric(c) {
                return Err(Error::InvariantViolation(format!("symmetry type of generator {j}")));
            }
            // c̄n = 1 corresponds to t1···tn = 1
            if TorusElem::canonicalize(&e.evaluate()) != TorusElem::canonicalize(c) {
                return Err(Error::InvariantViolation(format!(
                    "elementary form of c_F,{j} does not evaluate back"
                )));
            }
        }
        Ok(())
    }

    /// Generators in `ℚ[c̄1..c̄_{n−1}]`, ready for Gröbner computations.
    pub fn restricted(&self) -> Vec<MPoly> {
        self.elem.iter().map(ElemBasisPoly::restricted).collect()
    }

    /// True when `J_F` is the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.sym.iter().any(|c| c.is_constant() && !c.is_zero())
    }
}

/// The SU(2) character polynomial
/// `χ_F = (F(t) − F(t⁻¹)) / (t − t⁻¹)`, with `t = t1`, `t⁻¹ = t2`.
pub fn su2_character(spec: &FunctorSpec) -> Result<LocalizedElem> {
    if spec.rank != 2 {
        return Err(Error::Domain(format!(
            "the character polynomial needs rank 2, got {}",
            spec.rank
        )));
    }
    let f = &spec.functor;
    let numerator = TorusElem::value_at(2, f, 0).sub(&TorusElem::value_at(2, f, 1));
    let denominator = TorusElem::var(2, 0).sub(&TorusElem::var_inverse(2, 0));
    let chi = numerator.exact_div(&denominator)?.ok_or_else(|| {
        Error::InvariantViolation("F(t) − F(t⁻¹) not divisible by t − t⁻¹".into())
    })?;
    LocalizedElem::from_torus(chi, f.clone())
}

/// `V = Σ G(t_i)` where `G′(t) = (F(t) − F(0))/t` and `G(0) = 0`.
#[derive(Clone, Debug)]
pub struct Potential {
    pub rank: usize,
    pub g: UPoly,
    pub power_sum_form: MPoly,
    pub elem_form: ElemBasisPoly,
}

pub fn potential(spec: &FunctorSpec) -> Result<Potential> {
    let n = spec.rank;
    let g = spec.functor.antiderivative_shifted();
    let mut v = MPoly::zero(n);
    for i in 0..n {
        v.add_assign_poly(&g.in_variable(n, i));
    }
    let elem_form = symm::to_elem_basis(&v)?;
    Ok(Potential {
        rank: n,
        g,
        power_sum_form: v,
        elem_form,
    })
}

/// One line of the derivative identity `c_{F,j} = (−1)^{n−j} ∂V/∂c̄_{n−j−1}`.
#[derive(Clone, Debug)]
pub struct DerivativeEntry {
    pub j: usize,
    /// Index `k` of the variable `c̄_k` differentiated against.
    pub k: usize,
    /// `(−1)^{n−j} ∂V/∂c̄_k` in the free elementary basis.
    pub signed_derivative: ElemBasisPoly,
    /// The elementary form of `c_{F,j}`.
    pub expected: ElemBasisPoly,
    /// Difference of the two sides in `t`-variables; zero on success.
    pub residual: MPoly,
    /// Both sides also agree after imposing `c̄n = 1`.
    pub agrees_on_torus: bool,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct DerivativeReport {
    pub entries: Vec<DerivativeEntry>,
}

impl DerivativeReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }
}

pub fn potential_derivative_check(spec: &FunctorSpec) -> Result<DerivativeReport> {
    let n = spec.rank;
    let pot = potential(spec)?;
    let sym = generators_sym(spec)?;
    let mut entries = Vec::new();
    for (j, c) in sym.iter().enumerate() {
        let k = n - (j + 1);
        let sign = if (n - j) % 2 == 0 { Rational::one() } else { -Rational::one() };
        let signed_derivative = pot.elem_form.partial(k).scale(&sign);
        let expected = symm::to_elem_basis(c)?;
        let residual = &signed_derivative.evaluate() - c;
        let agrees_on_torus = signed_derivative.with_last_one() == expected.with_last_one();
        let pass = residual.is_zero() && signed_derivative == expected && agrees_on_torus;
        entries.push(DerivativeEntry {
            j,
            k,
            signed_derivative,
            expected,
            residual,
            agrees_on_torus,
            pass,
        });
    }
    Ok(DerivativeReport { entries })
}

/// `∂V_m/∂c̄_j = (−1)^{j−1} h_{m−j}` for `j = 1..n`, where `V_m = p_m / m`.
pub fn vm_derivative_check(m: u32, n: usize) -> Result<bool> {
    let vm = symm::power_sum(m, n).scale(&Rational::from_integer(m.into()).recip());
    let elem = symm::to_elem_basis(&vm)?;
    for j in 1..=n {
        let lhs = elem.partial(j).evaluate();
        let mut rhs = symm::complete(m as i64 - j as i64, n);
        if j % 2 == 0 {
            rhs = -&rhs;
        }
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
