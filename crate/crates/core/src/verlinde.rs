//! Fusion rules of SU(n) at level k, computed two ways: by the Kac–Walton
//! algorithm from Littlewood–Richardson coefficients, and from the
//! quotient algebra of the classical fusion ideal.

use std::collections::BTreeMap;

use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::Result;
use crate::groebner::{localize_artinian, GroebnerBasis, QuotientAlgebra};
use crate::ideal::{FunctorSpec, IdealPresentation};
use crate::linalg::Matrix;
use crate::poly::{format_rational, MPoly, Rational};
use crate::symm::{self, Partition};

/// Partitions with at most `n − 1` parts and `λ1 ≤ k`, ordered by size and
/// then in reverse lexicographic order.
pub fn integrable_weights(n: usize, k: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    for size in 0..=(n as u32 - 1) * k {
        out.extend(Partition::all_of_size(size, n - 1, k));
    }
    out
}

/// The Littlewood–Richardson coefficient `c_{λμ}^ν`, counted by filling the
/// skew shape `ν/λ` with content `μ` so that rows weakly increase, columns
/// strictly increase and the reverse reading word is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() + mu.size() != nu.size() || nu.length() < lambda.length() {
        return 0;
    }
    if (0..nu.length()).any(|i| lambda.part(i) > nu.part(i)) {
        return 0;
    }
    // cells in reading order: rows top to bottom, right to left
    let mut cells = Vec::new();
    for r in 0..nu.length() {
        for c in (lambda.part(r)..nu.part(r)).rev() {
            cells.push((r, c as usize));
        }
    }
    let width = nu.part(0) as usize;
    let mut grid = vec![vec![0u32; width]; nu.length()];
    let mut used = vec![0u32; mu.length() + 1];
    count_fillings(&cells, 0, lambda, mu, &mut grid, &mut used)
}

fn count_fillings(
    cells: &[(usize, usize)],
    idx: usize,
    lambda: &Partition,
    mu: &Partition,
    grid: &mut [Vec<u32>],
    used: &mut [u32],
) -> u64 {
    let Some(&(r, c)) = cells.get(idx) else {
        return 1;
    };
    // right neighbour (already filled if inside the skew row)
    let max = if c + 1 < grid[r].len() && grid[r][c + 1] != 0 {
        grid[r][c + 1]
    } else {
        mu.length() as u32
    };
    let min = if r > 0 && c as u32 >= lambda.part(r - 1) { grid[r - 1][c] + 1 } else { 1 };
    let mut total = 0;
    for v in min..=max {
        let vi = v as usize;
        if used[vi] >= mu.part(vi - 1) {
            continue;
        }
        if vi > 1 && used[vi] + 1 > used[vi - 1] {
            continue;
        }
        used[vi] += 1;
        grid[r][c] = v;
        total += count_fillings(cells, idx + 1, lambda, mu, grid, used);
        grid[r][c] = 0;
        used[vi] -= 1;
    }
    total
}

/// `s_λ · s_μ = Σ_ν c_{λμ}^ν s_ν` with no bound on the number of parts.
pub fn lr_product(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, u64> {
    let size = lambda.size() + mu.size();
    let mut out = BTreeMap::new();
    for nu in Partition::all_of_size(size, lambda.length() + mu.length(), lambda.part(0) + mu.part(0)) {
        let c = lr_coefficient(lambda, mu, &nu);
        if c > 0 {
            out.insert(nu, c);
        }
    }
    out
}

/// Moves a highest weight with at most `n` parts into the level-`k` alcove.
/// Returns the integrable weight and a sign, or `None` on an alcove wall.
pub fn alcove_reflect(nu: &Partition, n: usize, k: u32) -> Option<(Partition, i64)> {
    if nu.length() > n {
        return None;
    }
    let modulus = (n as i64) + k as i64;
    let mut v: Vec<i64> = (0..n).map(|i| nu.part(i) as i64 + (n - 1 - i) as i64).collect();
    let mut sign = 1;
    loop {
        // sort descending, tracking parity by insertion sort swaps
        for i in 1..n {
            let mut j = i;
            while j > 0 && v[j - 1] < v[j] {
                v.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        if v.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        let spread = v[0] - v[n - 1];
        if spread == modulus {
            return None;
        }
        if spread < modulus {
            break;
        }
        let (first, last) = (v[0], v[n - 1]);
        v[0] = last + modulus;
        v[n - 1] = first - modulus;
        sign = -sign;
    }
    let parts: Vec<i64> = (0..n).map(|i| v[i] - (n - 1 - i) as i64).collect();
    let base = parts[n - 1];
    let lambda = Partition::new(parts.iter().map(|p| (p - base) as u32).collect());
    Some((lambda, sign))
}

/// Fusion coefficients `N_{λμ}^ν` of SU(n) at level `k`.
pub fn kac_walton_fusion(n: usize, k: u32, lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, i64> {
    let mut out: BTreeMap<Partition, i64> = BTreeMap::new();
    for (nu, c) in lr_product(lambda, mu) {
        if let Some((weight, sign)) = alcove_reflect(&nu, n, k) {
            *out.entry(weight).or_insert(0) += sign * c as i64;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

/// Structure constants `N_{λμ}^ν` in a fixed basis of weights.
#[derive(Clone, Debug, PartialEq)]
pub struct FusionTable {
    pub rank: usize,
    pub level: Option<u32>,
    pub basis: Vec<Partition>,
    /// Keyed by basis indices `(λ, μ, ν)`; zero entries omitted.
    pub coefficients: BTreeMap<(usize, usize, usize), Rational>,
}

impl FusionTable {
    pub fn kac_walton(n: usize, k: u32) -> Self {
        let basis = integrable_weights(n, k);
        let index: BTreeMap<&Partition, usize> = basis.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut coefficients = BTreeMap::new();
        for (a, la) in basis.iter().enumerate() {
            for (b, mu) in basis.iter().enumerate() {
                for (nu, c) in kac_walton_fusion(n, k, la, mu) {
                    coefficients.insert((a, b, index[&nu]), Rational::from_integer(c.into()));
                }
            }
        }
        FusionTable {
            rank: n,
            level: Some(k),
            basis,
            coefficients,
        }
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> Rational {
        self.coefficients.get(&(a, b, c)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.coefficients.iter().all(|(&(a, b, c), v)| &self.get(b, a, c) == v)
    }

    /// `λ = ∅` acts as the identity.
    pub fn has_unit(&self) -> bool {
        let Some(zero) = self.basis.iter().position(|p| p.length() == 0) else {
            return false;
        };
        (0..self.basis.len()).all(|b| {
            (0..self.basis.len()).all(|c| {
                let expected = if b == c { Rational::one() } else { Rational::zero() };
                self.get(zero, b, c) == expected
            })
        })
    }

    pub fn to_json(&self) -> Value {
        let part = |p: &Partition| json!(p.parts());
        json!({
            "rank": self.rank,
            "level": self.level,
            "basis": self.basis.iter().map(part).collect::<Vec<_>>(),
            "coefficients": self.coefficients.iter().map(|(&(a, b, c), v)| {
                let n = match v.is_integer().then(|| v.to_integer().to_i64()).flatten() {
                    Some(i) => json!(i),
                    None => json!(format_rational(v)),
                };
                json!([part(&self.basis[a]), part(&self.basis[b]), part(&self.basis[c]), n])
            }).collect::<Vec<_>>(),
        })
    }
}

/// Outcome of comparing the classical quotient algebra with Kac–Walton.
#[derive(Clone, Debug)]
pub struct VerlindeReport {
    pub rank: usize,
    pub level: u32,
    pub dimension: usize,
    pub expected_dimension: usize,
    pub schur_images_form_basis: bool,
    pub oracle: FusionTable,
    pub quotient: Option<FusionTable>,
    pub mismatches: Vec<String>,
}

impl VerlindeReport {
    pub fn pass(&self) -> bool {
        self.dimension == self.expected_dimension && self.schur_images_form_basis && self.mismatches.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "rank": self.rank,
            "level": self.level,
            "dimension": self.dimension,
            "expected_dimension": self.expected_dimension,
            "schur_images_form_basis": self.schur_images_form_basis,
            "match": self.pass(),
            "mismatches": self.mismatches,
            "fusion_table": self.oracle.to_json(),
        })
    }
}

/// The localized quotient `ℚ[c̄1..c̄_{n−1}] / J_F` with `F(t1)···F(tn)`
/// inverted.
pub fn fusion_algebra(spec: &FunctorSpec) -> Result<(GroebnerBasis, QuotientAlgebra, QuotientAlgebra)> {
    let n = spec.rank();
    let pres = IdealPresentation::build(spec)?;
    let gb = GroebnerBasis::compute(&pres.restricted(), n - 1)?;
    let algebra = QuotientAlgebra::from_groebner(&gb)?;
    // u = F(t1)···F(tn), expanded without the torus relation so that it
    // stays symmetric
    let product = (0..n).fold(MPoly::one(n), |acc, i| &acc * &spec.functor().in_variable(n, i));
    let u = symm::to_elem_basis(&product)?.restricted();
    let localized = localize_artinian(&algebra, &u)?.localized;
    Ok((gb, algebra, localized))
}

pub fn compare_with_quotient(n: usize, k: u32) -> Result<VerlindeReport> {
    let spec = FunctorSpec::classical(n, k as usize)?;
    let (_, _, alg) = fusion_algebra(&spec)?;
    let oracle = FusionTable::kac_walton(n, k);
    let weights = oracle.basis.clone();
    let dim = alg.dimension();
    let mut report = VerlindeReport {
        rank: n,
        level: k,
        dimension: dim,
        expected_dimension: weights.len(),
        schur_images_form_basis: false,
        oracle,
        quotient: None,
        mismatches: Vec::new(),
    };
    if dim != weights.len() {
        report.mismatches.push(format!(
            "quotient dimension {dim} differs from {} integrable weights",
            weights.len()
        ));
        return Ok(report);
    }
    let images = weights
        .iter()
        .map(|w| alg.coordinates(&symm::schur_elem(w, n).restricted()))
        .collect::<Result<Vec<_>>>()?;
    let change = Matrix::from_columns(dim, &images);
    let Some(inverse) = change.inverse() else {
        report.mismatches.push("Schur images are linearly dependent".into());
        return Ok(report);
    };
    report.schur_images_form_basis = true;
    let mut coefficients = BTreeMap::new();
    for a in 0..dim {
        for b in 0..dim {
            let product = alg.mul(&images[a], &images[b]);
            for (c, v) in inverse.mul_vec(&product).into_iter().enumerate() {
                if !v.is_zero() {
                    coefficients.insert((a, b, c), v);
                }
            }
        }
    }
    let table = FusionTable {
        rank: n,
        level: Some(k),
        basis: weights.clone(),
        coefficients,
    };
    for a in 0..dim {
        for b in 0..dim {
            for c in 0..dim {
                let (got, want) = (table.get(a, b, c), report.oracle.get(a, b, c));
                if got != want {
                    report.mismatches.push(format!(
                        "N[{} x {} -> {}]: quotient {} vs Kac-Walton {}",
                        weights[a],
                        weights[b],
                        weights[c],
                        format_rational(&got),
                        format_rational(&want)
                    ));
                }
            }
        }
    }
    report.quotient = Some(table);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec())
    }

    #[test]
    fn weights() {
        assert_eq!(integrable_weights(2, 2), vec![part(&[]), part(&[1]), part(&[2])]);
        assert_eq!(integrable_weights(3, 1), vec![part(&[]), part(&[1]), part(&[1, 1])]);
        assert_eq!(integrable_weights(4, 2).len(), 10);
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&part(&[1]), &part(&[1]), &part(&[2])), 1);
        assert_eq!(lr_coefficient(&part(&[1]), &part(&[1]), &part(&[1, 1])), 1);
        assert_eq!(lr_coefficient(&part(&[2, 1]), &part(&[]), &part(&[2, 1])), 1);
        assert_eq!(lr_coefficient(&part(&[2, 1]), &part(&[]), &part(&[3])), 0);
        assert_eq!(lr_coefficient(&part(&[2, 1]), &part(&[2, 1]), &part(&[3, 2, 1])), 2);
    }

    #[test]
    fn kac_walton_examples() {
        let one = part(&[1]);
        let f = kac_walton_fusion(2, 1, &one, &one);
        assert_eq!(f, BTreeMap::from([(part(&[]), 1)]));
        let f = kac_walton_fusion(2, 2, &one, &one);
        assert_eq!(f, BTreeMap::from([(part(&[]), 1), (part(&[2]), 1)]));
        for la in integrable_weights(3, 2) {
            assert_eq!(kac_walton_fusion(3, 2, &la, &part(&[])), BTreeMap::from([(la.clone(), 1)]));
        }
        let t = FusionTable::kac_walton(3, 2);
        assert!(t.is_symmetric());
        assert!(t.has_unit());
    }

    #[test]
    fn small_comparisons() {
        let r = compare_with_quotient(2, 1).unwrap();
        assert!(r.pass(), "{:?}", r.mismatches);
        assert_eq!(r.dimension, 2);
        let r = compare_with_quotient(3, 1).unwrap();
        assert!(r.pass(), "{:?}", r.mismatches);
        assert_eq!(r.dimension, 3);
    }
}
