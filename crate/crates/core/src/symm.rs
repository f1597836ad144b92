//! Symmetric and antisymmetric polynomials in `t1..tn`.
//!
//! Determinants whose rows are univariate polynomials evaluated at each
//! variable (alternants) carry most of the weight here: the Vandermonde
//! `Δ`, bialternant Schur numerators and the extended numerators
//! `a_(p, λ2, .., λn)` are all instances of [`alternant`].

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poly::{ExpVec, MPoly, Rational, UPoly};

/// A partition, stored without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Panics if `parts` is not weakly decreasing.
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing: {parts:?}"
        );
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn row(m: u32) -> Self {
        Self::new(vec![m])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `λ_i` with `i` counted from 0, zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Parts padded with zeros (or truncated) to length `n`.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        (0..n).map(|i| self.part(i)).collect()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition::new(
            (0..width)
                .map(|j| self.0.iter().filter(|&&p| p > j).count() as u32)
                .collect(),
        )
    }

    /// Partitions of `size` with at most `max_len` parts, each at most
    /// `max_part`, in reverse lexicographic order.
    pub fn all_of_size(size: u32, max_len: usize, max_part: u32) -> Vec<Partition> {
        fn go(rem: u32, max_part: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition::new(cur.clone()));
                return;
            }
            if slots == 0 {
                return;
            }
            for p in (1..=rem.min(max_part)).rev() {
                cur.push(p);
                go(rem - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(size, max_part, max_len, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `e_k(t1..tn)`; `1` for `k = 0`, `0` for `k < 0` or `k > n`.
pub fn elementary(k: i64, n: usize) -> MPoly {
    if k < 0 || k as usize > n {
        return MPoly::zero(n);
    }
    let mut out = MPoly::zero(n);
    for_each_subset(n, k as usize, |subset| {
        let mut e = vec![0; n];
        for &i in subset {
            e[i] = 1;
        }
        out.add_term(ExpVec::new(e), Rational::one());
    });
    out
}

fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    go(0, n, k, &mut Vec::new(), &mut f);
}

/// `h_k(t1..tn)`, the sum of all monomials of degree `k`; `0` for `k < 0`.
pub fn complete(k: i64, n: usize) -> MPoly {
    if k < 0 {
        return MPoly::zero(n);
    }
    let mut out = MPoly::zero(n);
    for e in exponents_of_degree(n, k as i32) {
        out.add_term(ExpVec::new(e), Rational::one());
    }
    out
}

/// All exponent vectors of length `n` and total degree `d`.
pub fn exponents_of_degree(n: usize, d: i32) -> Vec<Vec<i32>> {
    fn go(i: usize, rem: i32, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if i + 1 == cur.len() {
            cur[i] = rem;
            out.push(cur.clone());
            return;
        }
        for a in 0..=rem {
            cur[i] = a;
            go(i + 1, rem - a, cur, out);
        }
    }
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    go(0, d, &mut vec![0; n], &mut out);
    out
}

/// `p_m = t1^m + .. + tn^m`.
pub fn power_sum(m: u32, n: usize) -> MPoly {
    MPoly::from_terms(
        n,
        (0..n).map(|i| {
            let mut e = vec![0; n];
            e[i] = m as i32;
            (ExpVec::new(e), Rational::one())
        }),
    )
}

/// `det(rows[r](t_{j+1}))` for an `n × n` matrix, by the Leibniz expansion.
pub fn alternant(rows: &[UPoly], n: usize) -> MPoly {
    assert_eq!(rows.len(), n, "alternant needs n rows");
    let columns: Vec<Vec<MPoly>> = rows
        .iter()
        .map(|r| (0..n).map(|j| r.in_variable(n, j)).collect())
        .collect();
    let mut out = MPoly::zero(n);
    for sigma in Permutation::all(n) {
        let mut term = MPoly::constant(n, Rational::from_integer(sigma.sign().into()));
        for (r, col) in columns.iter().enumerate() {
            term = &term * &col[sigma.image(r)];
            if term.is_zero() {
                break;
            }
        }
        out.add_assign_poly(&term);
    }
    out
}

/// `Δ = ∏_{i<j} (t_i − t_j) = det(t_i^{n−j})`.
pub fn vandermonde(n: usize) -> MPoly {
    let mut out = MPoly::one(n);
    for i in 0..n {
        for j in i + 1..n {
            out = &out * &(&MPoly::var(n, i) - &MPoly::var(n, j));
        }
    }
    out
}

/// The determinant with first row `p(t_j)` and row `i = 2..n` equal to
/// `t_j^{λ_i + n − i}`, where `tail = (λ2, .., λn)`.
pub fn extended_a(p: &UPoly, tail: &Partition, n: usize) -> MPoly {
    let mut rows = vec![p.clone()];
    for i in 2..=n {
        let exp = tail.part(i - 2) as usize + n - i;
        rows.push(UPoly::monomial(exp, Rational::one()));
    }
    alternant(&rows, n)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SchurMethod {
    Bialternant,
    JacobiTrudi,
}

/// The Schur polynomial `s_λ(t1..tn)`; zero when `λ` has more than `n`
/// parts.
pub fn schur(lambda: &Partition, n: usize, method: SchurMethod) -> MPoly {
    if lambda.length() > n {
        return MPoly::zero(n);
    }
    match method {
        SchurMethod::Bialternant => {
            let rows: Vec<UPoly> = (0..n)
                .map(|i| UPoly::monomial(lambda.part(i) as usize + n - 1 - i, Rational::one()))
                .collect();
            alternant(&rows, n)
                .exact_div(&vandermonde(n))
                .expect("alternants are divisible by the Vandermonde")
        }
        SchurMethod::JacobiTrudi => {
            let l = lambda.length();
            let mut cache: HashMap<i64, MPoly> = HashMap::new();
            let matrix: Vec<Vec<MPoly>> = (0..l)
                .map(|i| {
                    (0..l)
                        .map(|j| {
                            let k = lambda.part(i) as i64 - i as i64 + j as i64;
                            cache.entry(k).or_insert_with(|| complete(k, n)).clone()
                        })
                        .collect()
                })
                .collect();
            poly_det(&matrix, n)
        }
    }
}

/// Determinant of a square matrix of polynomials by cofactor expansion
/// along the first row.
pub fn poly_det(m: &[Vec<MPoly>], nvars: usize) -> MPoly {
    match m.len() {
        0 => MPoly::one(nvars),
        1 => m[0][0].clone(),
        size => {
            let mut out = MPoly::zero(nvars);
            for j in 0..size {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<MPoly>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * &poly_det(&minor, nvars);
                if j % 2 == 0 {
                    out.add_assign_poly(&term);
                } else {
                    out.add_assign_poly(&-&term);
                }
            }
            out
        }
    }
}

/// `Σ_σ sign(σ) σ∗p`, divided by `n!` when `normalized`.
pub fn antisymmetrize(p: &MPoly, normalized: bool) -> MPoly {
    let n = p.nvars();
    let mut out = MPoly::zero(n);
    let perms = Permutation::all(n);
    for sigma in &perms {
        let moved = sigma.act_on_poly(p);
        if sigma.sign() > 0 {
            out.add_assign_poly(&moved);
        } else {
            out.add_assign_poly(&-&moved);
        }
    }
    if normalized {
        out.scale(&Rational::from_integer((perms.len() as i64).into()).recip())
    } else {
        out
    }
}

/// Invariant under every adjacent transposition.
pub fn is_symmetric(p: &MPoly) -> bool {
    Permutation::adjacent_transpositions(p.nvars())
        .iter()
        .all(|s| s.act_on_poly(p) == *p)
}

/// Negated by every adjacent transposition.
pub fn is_antisymmetric(p: &MPoly) -> bool {
    let neg = -p;
    Permutation::adjacent_transpositions(p.nvars())
        .iter()
        .all(|s| s.act_on_poly(p) == neg)
}

/// The symmetric polynomial `p / Δ`.
pub fn divide_by_vandermonde(p: &MPoly) -> Result<MPoly> {
    if !is_antisymmetric(p) {
        return Err(Error::Domain("polynomial is not antisymmetric".into()));
    }
    p.exact_div(&vandermonde(p.nvars())).map_err(|e| match e {
        Error::NotDivisible { remainder } => Error::InvariantViolation(format!(
            "antisymmetric polynomial not divisible by the Vandermonde, remainder {remainder}"
        )),
        other => other,
    })
}

/// A polynomial in the elementary symmetric functions `c̄1..c̄n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ElemBasisPoly {
    poly: MPoly,
}

impl ElemBasisPoly {
    pub fn new(poly: MPoly) -> Self {
        ElemBasisPoly { poly }
    }

    /// `c̄_k` in a ring of `n` generators (`k` counted from 1).
    pub fn generator(n: usize, k: usize) -> Self {
        ElemBasisPoly::new(MPoly::var(n, k - 1))
    }

    pub fn poly(&self) -> &MPoly {
        &self.poly
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    /// Substitutes `c̄_k ↦ e_k(t1..tn)`.
    pub fn evaluate(&self) -> MPoly {
        let n = self.nvars();
        let values: Vec<MPoly> = (1..=n).map(|k| elementary(k as i64, n)).collect();
        self.poly.substitute(&values)
    }

    /// `∂/∂c̄_k` in the free ring (`k` counted from 1).
    pub fn partial(&self, k: usize) -> ElemBasisPoly {
        ElemBasisPoly::new(self.poly.partial_derivative(k - 1))
    }

    /// Imposes `c̄n = 1`, keeping `n` generators (the last one unused).
    pub fn with_last_one(&self) -> ElemBasisPoly {
        let n = self.nvars();
        let reduced = self.poly.eliminate_var_with(n - 1, &Rational::one());
        ElemBasisPoly::new(reduced.extend_vars(1))
    }

    /// Imposes `c̄n = 1` and drops the last generator, giving a polynomial in
    /// `c̄1..c̄_{n−1}`.
    pub fn restricted(&self) -> MPoly {
        self.poly.eliminate_var_with(self.nvars() - 1, &Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> ElemBasisPoly {
        ElemBasisPoly::new(self.poly.scale(c))
    }

    pub fn to_text(&self) -> String {
        self.poly.to_text("c")
    }
}

impl fmt::Display for ElemBasisPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Rewrites a symmetric polynomial in the elementary basis by repeatedly
/// cancelling the lexicographically leading term `c t^a` against
/// `c · e1^{a1−a2} ··· en^{an}`.
pub fn to_elem_basis(p: &MPoly) -> Result<ElemBasisPoly> {
    let n = p.nvars();
    if !is_symmetric(p) {
        return Err(Error::Domain("polynomial is not symmetric".into()));
    }
    let elem: Vec<MPoly> = (1..=n).map(|k| elementary(k as i64, n)).collect();
    let mut powers: Vec<Vec<MPoly>> = elem.iter().map(|_| vec![MPoly::one(n)]).collect();
    let mut rest = p.clone();
    let mut out = MPoly::zero(n);
    while let Some((a, c)) = rest
        .terms()
        .max_by(|x, y| x.0.lex_cmp(y.0))
        .map(|(e, c)| (e.clone(), c.clone()))
    {
        let a = a.as_slice();
        let expo: Vec<i32> = (0..n)
            .map(|i| a[i] - if i + 1 < n { a[i + 1] } else { 0 })
            .collect();
        if expo.iter().any(|&x| x < 0) {
            return Err(Error::InvariantViolation(
                "leading exponent of a symmetric polynomial is not a partition".into(),
            ));
        }
        let mut product = MPoly::constant(n, c.clone());
        for (i, &k) in expo.iter().enumerate() {
            let k = k as usize;
            while powers[i].len() <= k {
                let next = &powers[i][powers[i].len() - 1] * &elem[i];
                powers[i].push(next);
            }
            if k > 0 {
                product = &product * &powers[i][k];
            }
        }
        rest.add_assign_poly(&-&product);
        out.add_term(ExpVec::new(expo), c);
    }
    Ok(ElemBasisPoly::new(out))
}

/// Both sides of the Pieri identity
/// `a_(p,1,0..0) = a_(p,0..0)·e1 − a_(t·p,0..0)`.
pub fn pieri_sides(p: &UPoly, n: usize) -> (MPoly, MPoly) {
    let mut one = vec![0; n.saturating_sub(1)];
    if let Some(first) = one.first_mut() {
        *first = 1;
    }
    let lhs = extended_a(p, &Partition::new(one), n);
    let base = extended_a(p, &Partition::empty(), n);
    let shifted = extended_a(&p.shift_up(1), &Partition::empty(), n);
    let rhs = &(&base * &elementary(1, n)) - &shifted;
    (lhs, rhs)
}

pub fn pieri_check(p: &UPoly, n: usize) -> bool {
    let (lhs, rhs) = pieri_sides(p, n);
    lhs == rhs
}

/// `s_λ` written directly in `c̄1..c̄n` by the dual Jacobi–Trudi identity
/// `s_λ = det(e_{λ'_i − i + j})`.
pub fn schur_elem(lambda: &Partition, n: usize) -> ElemBasisPoly {
    if lambda.length() > n {
        return ElemBasisPoly::new(MPoly::zero(n));
    }
    let conj = lambda.conjugate();
    let l = conj.length();
    let e = |k: i64| -> MPoly {
        if k == 0 {
            MPoly::one(n)
        } else if k < 0 || k as usize > n {
            MPoly::zero(n)
        } else {
            MPoly::var(n, k as usize - 1)
        }
    };
    let matrix: Vec<Vec<MPoly>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| e(conj.part(i) as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    ElemBasisPoly::new(poly_det(&matrix, n))
}

/// Sum of the coefficients, a cheap fingerprint used in diagnostics.
pub fn coefficient_sum(p: &MPoly) -> Rational {
    p.terms().fold(Rational::zero(), |acc, (_, c)| acc + c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_mpoly, rat, ratio};
    use crate::torus::{SignedAction, TorusElem};

    fn t(s: &str, n: usize) -> MPoly {
        parse_mpoly(s, n, "t").unwrap()
    }

    #[test]
    fn basic_symmetric_functions() {
        assert_eq!(elementary(1, 2), t("t1 + t2", 2));
        assert_eq!(complete(2, 2), t("t1^2 + t1*t2 + t2^2", 2));
        assert!(complete(-1, 3).is_zero());
        assert!(elementary(4, 3).is_zero());
        assert!(elementary(0, 3).is_one());
        assert_eq!(power_sum(3, 2), t("t1^3 + t2^3", 2));
    }

    #[test]
    fn vandermonde_matches_determinant() {
        assert_eq!(vandermonde(2), t("t1 - t2", 2));
        for n in 2..=4 {
            let rows: Vec<UPoly> = (0..n)
                .map(|i| UPoly::monomial(n - 1 - i, rat(1)))
                .collect();
            assert_eq!(alternant(&rows, n), vandermonde(n));
            let d = TorusElem::canonicalize(&vandermonde(n));
            let swap = SignedAction::signed(Permutation::transposition(n, 0, 1));
            assert_eq!(d.act(&swap), d);
        }
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur(&Partition::row(3), 3, SchurMethod::Bialternant), complete(3, 3));
        assert_eq!(schur(&Partition::new(vec![1, 1]), 2, SchurMethod::JacobiTrudi), t("t1*t2", 2));
        let l = Partition::new(vec![2, 1]);
        assert_eq!(
            schur(&l, 3, SchurMethod::Bialternant),
            schur(&l, 3, SchurMethod::JacobiTrudi)
        );
        assert!(schur(&Partition::new(vec![1, 1, 1]), 2, SchurMethod::JacobiTrudi).is_zero());
        assert_eq!(schur_elem(&l, 3).evaluate(), schur(&l, 3, SchurMethod::Bialternant));
    }

    #[test]
    fn extended_a_examples() {
        let n = 4;
        for m in 0..n - 1 {
            assert!(extended_a(&UPoly::monomial(m, rat(1)), &Partition::empty(), n).is_zero());
        }
        assert_eq!(
            extended_a(&UPoly::monomial(n - 1, rat(1)), &Partition::empty(), n),
            vandermonde(n)
        );
        let f = UPoly::from_ints(&[2, -1, 0, 5]);
        let a = extended_a(&f, &Partition::empty(), 2);
        assert_eq!(a, &f.in_variable(2, 0) - &f.in_variable(2, 1));
        // a_(t^{n-1+m}, 0..0)/Δ = h_m
        let a = extended_a(&UPoly::monomial(n - 1 + 3, rat(1)), &Partition::empty(), n);
        assert_eq!(divide_by_vandermonde(&a).unwrap(), complete(3, n));
    }

    #[test]
    fn antisymmetrize_examples() {
        assert_eq!(antisymmetrize(&t("t1", 2), true), t("1/2*t1 - 1/2*t2", 2));
        let f = UPoly::from_ints(&[1, 0, 3]);
        let p = &f.in_variable(2, 1) - &f.in_variable(2, 0);
        let q0 = &f.in_variable(2, 0) - &f.in_variable(2, 1);
        assert_eq!(antisymmetrize(&p, false), q0.scale(&rat(-2)));
        assert!(antisymmetrize(&elementary(2, 3), false).is_zero());
    }

    #[test]
    fn division_by_vandermonde() {
        assert!(divide_by_vandermonde(&vandermonde(3)).unwrap().is_one());
        let cube = UPoly::monomial(3, rat(1));
        let p = &cube.in_variable(2, 0) - &cube.in_variable(2, 1);
        assert_eq!(divide_by_vandermonde(&p).unwrap(), complete(2, 2));
        assert!(matches!(divide_by_vandermonde(&t("t1", 2)), Err(Error::Domain(_))));
    }

    #[test]
    fn elementary_basis_examples() {
        for n in 2..=4 {
            let p2 = to_elem_basis(&power_sum(2, n)).unwrap();
            assert_eq!(p2.to_text(), "1 * c1^2 - 2 * c2^1");
            for k in 1..=n {
                assert_eq!(to_elem_basis(&elementary(k as i64, n)).unwrap(), ElemBasisPoly::generator(n, k));
            }
        }
        assert_eq!(to_elem_basis(&complete(2, 2)).unwrap().to_text(), "1 * c1^2 - 1 * c2^1");
        assert!(to_elem_basis(&t("t1", 2)).is_err());
        let mixed = t("3/2*t1^2*t2^2 + t1 + t2 - 7", 2);
        assert_eq!(to_elem_basis(&mixed).unwrap().evaluate(), mixed);
        assert_eq!(coefficient_sum(&mixed), ratio(-7, 2));
    }

    #[test]
    fn pieri_examples() {
        for n in 3..=5 {
            for m in 0..=n + 4 {
                assert!(pieri_check(&UPoly::monomial(m, rat(1)), n), "n={n} m={m}");
            }
            let (l, r) = pieri_sides(&UPoly::monomial(n - 3, rat(1)), n);
            assert!(l.is_zero() && r.is_zero());
        }
    }

    #[test]
    fn partitions() {
        assert_eq!(Partition::new(vec![3, 1, 0]).parts(), &[3, 1]);
        assert_eq!(Partition::new(vec![3, 1]).conjugate(), Partition::new(vec![2, 1, 1]));
        assert_eq!(Partition::all_of_size(4, 4, 4).len(), 5);
        assert_eq!(Partition::all_of_size(4, 2, 3).len(), 2);
        assert_eq!(Partition::new(vec![2, 1]).to_string(), "(2,1)");
    }
}
