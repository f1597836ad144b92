//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the library's symmetric-function, determinant or fusion code.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::f64::consts::PI;

use higher_fusion::poly::{ExpVec, MPoly, Rational};
use num_complex::Complex64;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn mono(exps: Vec<i32>) -> MPoly {
    MPoly::monomial(ExpVec::new(exps), rat(1))
}

pub fn var(n: usize, i: usize) -> MPoly {
    let mut e = vec![0; n];
    e[i] = 1;
    mono(e)
}

/// Every exponent vector of length `n` with entries summing to `d`.
pub fn compositions(n: usize, d: i32) -> Vec<Vec<i32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in compositions(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `h_k` as the sum of all monomials of degree `k`.
pub fn h(k: i64, n: usize) -> MPoly {
    if k < 0 {
        return MPoly::zero(n);
    }
    let mut p = MPoly::zero(n);
    for e in compositions(n, k as i32) {
        p = &p + &mono(e);
    }
    p
}

/// `e_k` as the sum over `k`-subsets.
pub fn e(k: usize, n: usize) -> MPoly {
    let mut p = MPoly::zero(n);
    for mask in 0u32..1 << n {
        if mask.count_ones() as usize == k {
            p = &p + &mono((0..n).map(|i| (mask >> i & 1) as i32).collect());
        }
    }
    p
}

/// Permutations of `0..n` with their signs, by recursive insertion.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    if n == 0 {
        return vec![(vec![], 1)];
    }
    let mut out = Vec::new();
    for (p, s) in permutations(n - 1) {
        // inserting n−1 at position i passes over (n−1−i) larger-index slots
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            let sign = if (p.len() - i) % 2 == 0 { s } else { -s };
            out.push((q, sign));
        }
    }
    out
}

/// Leibniz expansion of a square matrix of polynomials.
pub fn det(m: &[Vec<MPoly>]) -> MPoly {
    let n = m.len();
    let nvars = m[0][0].nvars();
    let mut total = MPoly::zero(nvars);
    for (p, s) in permutations(n) {
        let mut term = MPoly::constant(nvars, rat(s));
        for (row, &col) in p.iter().enumerate() {
            term = &term * &m[row][col];
        }
        total = &total + &term;
    }
    total
}

pub fn vandermonde(n: usize) -> MPoly {
    let mut p = MPoly::one(n);
    for i in 0..n {
        for j in i + 1..n {
            p = &p * &(&var(n, i) - &var(n, j));
        }
    }
    p
}

/// `Σ c_m x^m` for a coefficient list, with `x` an arbitrary polynomial.
pub fn eval_upoly(coeffs: &[Rational], x: &MPoly) -> MPoly {
    let mut out = MPoly::zero(x.nvars());
    let mut power = MPoly::one(x.nvars());
    for c in coeffs {
        out = &out + &power.scale(c);
        power = &power * x;
    }
    out
}

/// `q_i`: first row `F(t_j) t_j^i`, then rows `t_j^{n−2}, .., 1`.
pub fn q(coeffs: &[Rational], n: usize, i: i32) -> MPoly {
    let mut rows = Vec::new();
    rows.push(
        (0..n)
            .map(|j| {
                let mut ti = vec![0; n];
                ti[j] = i;
                &eval_upoly(coeffs, &var(n, j)) * &mono(ti)
            })
            .collect(),
    );
    for r in (0..n as i32 - 1).rev() {
        rows.push(
            (0..n)
                .map(|j| {
                    let mut ex = vec![0; n];
                    ex[j] = r;
                    mono(ex)
                })
                .collect(),
        );
    }
    det(&rows)
}

/// `a_{(p, λ2..λn)}`: first row `p(t_j)`, row `i ≥ 2` is `t_j^{λ_i + n − i}`.
pub fn extended_a(coeffs: &[Rational], tail: &[i32], n: usize) -> MPoly {
    let mut rows = vec![(0..n).map(|j| eval_upoly(coeffs, &var(n, j))).collect::<Vec<_>>()];
    for i in 2..=n {
        let lam = tail.get(i - 2).copied().unwrap_or(0);
        rows.push(
            (0..n)
                .map(|j| {
                    let mut ex = vec![0; n];
                    ex[j] = lam + (n - i) as i32;
                    mono(ex)
                })
                .collect(),
        );
    }
    det(&rows)
}

/// Partitions fitting in the `(n−1) × k` box, as padded length-`n` vectors.
pub fn box_partitions(n: usize, k: u32) -> Vec<Vec<u32>> {
    fn rec(len: usize, max: u32) -> Vec<Vec<u32>> {
        if len == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in 0..=max {
            for mut rest in rec(len - 1, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    rec(n - 1, k)
        .into_iter()
        .map(|mut p| {
            p.push(0);
            p
        })
        .collect()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Verlinde formula with the Weyl-group determinant form of the modular
/// S-matrix, evaluated in floating point and rounded.
pub fn verlinde_numeric(n: usize, k: u32) -> (Vec<Vec<u32>>, BTreeMap<(usize, usize, usize), i64>) {
    let weights = box_partitions(n, k);
    let kappa = (n as f64) + k as f64;
    let shifted: Vec<Vec<f64>> = weights
        .iter()
        .map(|w| {
            let x: Vec<f64> = (0..n).map(|a| w[a] as f64 + (n - 1 - a) as f64).collect();
            let mean = x.iter().sum::<f64>() / n as f64;
            x.iter().map(|v| v - mean).collect()
        })
        .collect();
    let perms = permutations(n);
    let raw = |a: usize, b: usize| -> Complex64 {
        perms
            .iter()
            .map(|(p, s)| {
                let dot: f64 = (0..n).map(|i| shifted[a][p[i]] * shifted[b][i]).sum();
                Complex64::from_polar(*s as f64, -2.0 * PI * dot / kappa)
            })
            .sum()
    };
    let m = weights.len();
    let s: Vec<Vec<Complex64>> = (0..m).map(|a| (0..m).map(|b| raw(a, b)).collect()).collect();
    let norm: f64 = (0..m).map(|b| s[0][b].norm_sqr()).sum();
    let mut table = BTreeMap::new();
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                let v: Complex64 = (0..m).map(|x| s[a][x] * s[b][x] * s[c][x].conj() / s[0][x]).sum::<Complex64>() / norm;
                let r = v.re.round();
                assert!((v.re - r).abs() < 1e-6 && v.im.abs() < 1e-6, "non-integral Verlinde value {v}");
                if r != 0.0 {
                    table.insert((a, b, c), r as i64);
                }
            }
        }
    }
    (weights, table)
}

/// `N_{ab}^c` for SU(2) at level `k`, weights labelled by `0..=k`.
pub fn su2_fusion(k: u32, a: u32, b: u32, c: u32) -> i64 {
    let ok = a.abs_diff(b) <= c && c <= (a + b).min(2 * k - a - b) && (a + b + c) % 2 == 0;
    ok as i64
}

/// `(F(t) − F(t⁻¹))/(t − t⁻¹) = Σ_m μ_m (t^{m−1} + t^{m−3} + .. + t^{1−m})`,
/// as a map from exponent of `t` to coefficient.
pub fn su2_character_terms(coeffs: &[Rational]) -> BTreeMap<i32, Rational> {
    let mut out: BTreeMap<i32, Rational> = BTreeMap::new();
    for (m, c) in coeffs.iter().enumerate().skip(1) {
        for j in 0..m as i32 {
            *out.entry(m as i32 - 1 - 2 * j).or_insert_with(|| rat(0)) += c;
        }
    }
    out.retain(|_, v| *v != rat(0));
    out
}

/// A Laurent polynomial in `t` written in two variables with `t2 = t⁻¹`.
pub fn laurent_in_two_vars(terms: &BTreeMap<i32, Rational>) -> MPoly {
    let mut p = MPoly::zero(2);
    for (&a, c) in terms {
        let e = if a >= 0 { vec![a, 0] } else { vec![0, -a] };
        p = &p + &MPoly::monomial(ExpVec::new(e), c.clone());
    }
    p
}
