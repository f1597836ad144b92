use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::GroebnerBasis;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::{ExpVec, MPoly, Rational};

/// A finite-dimensional commutative algebra `ℚ[x1..xn]/I`.
///
/// Basis element `r` is the image of the monomial `basis[r]`. Elements are
/// coordinate vectors; `mul_matrices[i]` is multiplication by `x_{i+1}`
/// (column `c` holds the coordinates of `x_{i+1} · basis[c]`).
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    nvars: usize,
    basis: Vec<ExpVec>,
    mul_matrices: Vec<Matrix>,
    one: Vec<Rational>,
    /// Normal forms are much cheaper than matrix products for large
    /// elements; kept when the algebra came from a Gröbner basis.
    reducer: Option<GroebnerBasis>,
}

impl PartialEq for QuotientAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars
            && self.basis == other.basis
            && self.mul_matrices == other.mul_matrices
            && self.one == other.one
    }
}

impl QuotientAlgebra {
    /// Fails with [`Error::InfiniteDimensional`] if the quotient is not
    /// finite-dimensional.
    pub fn from_groebner(gb: &GroebnerBasis) -> Result<Self> {
        let basis = gb.standard_monomials()?;
        let nvars = gb.nvars();
        let dim = basis.len();
        let coords_of = |p: &MPoly| -> Result<Vec<Rational>> {
            let nf = gb.normal_form(p)?;
            Ok(basis.iter().map(|b| nf.coeff(b)).collect())
        };
        let mut mul_matrices = Vec::with_capacity(nvars);
        for var in 0..nvars {
            let columns = basis
                .iter()
                .map(|b| coords_of(&MPoly::monomial(b.mul(&ExpVec::unit(nvars, var)), Rational::one())))
                .collect::<Result<Vec<_>>>()?;
            mul_matrices.push(Matrix::from_columns(dim, &columns));
        }
        let one = if dim == 0 {
            Vec::new()
        } else {
            coords_of(&MPoly::one(nvars))?
        };
        Ok(QuotientAlgebra {
            nvars,
            basis,
            mul_matrices,
            one,
            reducer: Some(gb.clone()),
        })
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn basis(&self) -> &[ExpVec] {
        &self.basis
    }

    pub fn mul_matrices(&self) -> &[Matrix] {
        &self.mul_matrices
    }

    pub fn one(&self) -> &[Rational] {
        &self.one
    }

    /// Matrix of multiplication by `x^e`.
    fn monomial_matrix(&self, e: &ExpVec) -> Matrix {
        let mut m = Matrix::identity(self.dimension());
        for (var, &k) in e.as_slice().iter().enumerate() {
            for _ in 0..k {
                m = self.mul_matrices[var].mul(&m);
            }
        }
        m
    }

    /// Matrix of multiplication by the image of `p`.
    pub fn element_matrix(&self, p: &MPoly) -> Result<Matrix> {
        if p.nvars() != self.nvars {
            return Err(Error::VariableCountMismatch {
                left: self.nvars,
                right: p.nvars(),
            });
        }
        let dim = self.dimension();
        if let Some(gb) = &self.reducer {
            let columns = self
                .basis
                .iter()
                .map(|b| {
                    let nf = gb.normal_form(&p.mul_term(b, &Rational::one()))?;
                    Ok(self.basis.iter().map(|e| nf.coeff(e)).collect())
                })
                .collect::<Result<Vec<Vec<Rational>>>>()?;
            return Ok(Matrix::from_columns(dim, &columns));
        }
        let mut out = Matrix::zeros(dim, dim);
        for (e, c) in p.terms() {
            let m = self.monomial_matrix(e);
            for i in 0..dim {
                for j in 0..dim {
                    let v = &m[(i, j)] * c;
                    out[(i, j)] += v;
                }
            }
        }
        Ok(out)
    }

    /// Coordinates of the image of `p`.
    pub fn coordinates(&self, p: &MPoly) -> Result<Vec<Rational>> {
        Ok(self.element_matrix(p)?.mul_vec(&self.one))
    }

    /// Matrix of multiplication by the element with coordinates `a`.
    pub fn coordinate_matrix(&self, a: &[Rational]) -> Matrix {
        let dim = self.dimension();
        let mut out = Matrix::zeros(dim, dim);
        for (r, ar) in a.iter().enumerate() {
            if ar.is_zero() {
                continue;
            }
            let m = self.monomial_matrix(&self.basis[r]);
            for i in 0..dim {
                for j in 0..dim {
                    let v = &m[(i, j)] * ar;
                    out[(i, j)] += v;
                }
            }
        }
        out
    }

    pub fn mul(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        self.coordinate_matrix(a).mul_vec(b)
    }

    /// Multiplication matrices commute pairwise.
    pub fn matrices_commute(&self) -> bool {
        let ms = &self.mul_matrices;
        (0..ms.len()).all(|i| (i + 1..ms.len()).all(|j| ms[i].mul(&ms[j]) == ms[j].mul(&ms[i])))
    }

    pub fn to_json(&self, prefix: &str) -> Value {
        json!({
            "dimension": self.dimension(),
            "basis": self.basis.iter().map(|e| MPoly::monomial(e.clone(), Rational::one()).to_text(prefix)).collect::<Vec<_>>(),
            "one": self.one.iter().map(crate::poly::format_rational).collect::<Vec<_>>(),
            "multiplication_matrices": self.mul_matrices.iter().map(Matrix::to_string_rows).collect::<Vec<_>>(),
        })
    }
}

/// `A / K` where `K` is the generalized 0-eigenspace of multiplication by
/// `u`; `u` is invertible on the result.
#[derive(Clone, Debug)]
pub struct LocalizedQuotient {
    pub parent: QuotientAlgebra,
    /// A basis of `K`, as coordinate vectors in the parent.
    pub kernel: Vec<Vec<Rational>>,
    pub localized: QuotientAlgebra,
    /// Maps parent coordinates to localized coordinates.
    pub projection: Matrix,
}

impl LocalizedQuotient {
    pub fn project(&self, a: &[Rational]) -> Vec<Rational> {
        self.projection.mul_vec(a)
    }
}

const MODULAR_CHECK_PRIME: u64 = (1 << 61) - 1;

pub fn localize_artinian(a: &QuotientAlgebra, u: &MPoly) -> Result<LocalizedQuotient> {
    let dim = a.dimension();
    let mu = a.element_matrix(u)?;
    // full rank mod p certifies that u is already a unit
    if dim > 0 && mu.rank_mod_p(MODULAR_CHECK_PRIME) == Some(dim) {
        return Ok(LocalizedQuotient {
            parent: a.clone(),
            kernel: Vec::new(),
            localized: a.clone(),
            projection: Matrix::identity(dim),
        });
    }
    // powers of M_u until the rank stabilizes; the last kernel is the
    // generalized 0-eigenspace
    let mut kernel = Vec::new();
    let mut power = mu.clone();
    let mut rank = dim;
    while dim > 0 {
        let r = power.rank();
        if r == rank {
            kernel = power.kernel();
            break;
        }
        rank = r;
        power = power.mul(&mu);
    }

    // complete the kernel to a basis with standard basis vectors
    let mut chosen: Vec<usize> = Vec::new();
    let mut columns: Vec<Vec<Rational>> = kernel.clone();
    for r in 0..dim {
        if columns.len() == dim {
            break;
        }
        let mut e = vec![Rational::zero(); dim];
        e[r] = Rational::one();
        let mut trial = columns.clone();
        trial.push(e.clone());
        if Matrix::from_columns(dim, &trial).rank() == trial.len() {
            columns = trial;
            chosen.push(r);
        }
    }
    let m = chosen.len();
    // T = [chosen | kernel]; the first m rows of T⁻¹ project onto the
    // complement along K
    let mut t_cols: Vec<Vec<Rational>> = chosen
        .iter()
        .map(|&r| {
            let mut e = vec![Rational::zero(); dim];
            e[r] = Rational::one();
            e
        })
        .collect();
    t_cols.extend(kernel.iter().cloned());
    let t_inv = if dim == 0 {
        Matrix::zeros(0, 0)
    } else {
        Matrix::from_columns(dim, &t_cols)
            .inverse()
            .ok_or_else(|| Error::InvariantViolation("kernel complement is not a basis".into()))?
    };
    let mut projection = Matrix::zeros(m, dim);
    for i in 0..m {
        for j in 0..dim {
            projection[(i, j)] = t_inv[(i, j)].clone();
        }
    }
    let mut inclusion = Matrix::zeros(dim, m);
    for (j, &r) in chosen.iter().enumerate() {
        inclusion[(r, j)] = Rational::one();
    }
    let mul_matrices: Vec<Matrix> = a
        .mul_matrices
        .iter()
        .map(|mx| projection.mul(&mx.mul(&inclusion)))
        .collect();
    let localized = QuotientAlgebra {
        nvars: a.nvars,
        basis: chosen.iter().map(|&r| a.basis[r].clone()).collect(),
        mul_matrices,
        one: if m == 0 { Vec::new() } else { projection.mul_vec(&a.one) },
        reducer: None,
    };
    // K is an ideal, so multiplication by u descends to projection·M_u·inclusion
    if m > 0 && projection.mul(&mu.mul(&inclusion)).determinant().is_zero() {
        return Err(Error::InvariantViolation("u is not invertible on the localization".into()));
    }
    Ok(LocalizedQuotient {
        parent: a.clone(),
        kernel,
        localized,
        projection,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_mpoly, rat};

    fn algebra(gens: &[&str], n: usize) -> QuotientAlgebra {
        let g: Vec<MPoly> = gens.iter().map(|s| parse_mpoly(s, n, "c").unwrap()).collect();
        QuotientAlgebra::from_groebner(&GroebnerBasis::compute(&g, n).unwrap()).unwrap()
    }

    #[test]
    fn su2_level_one() {
        let a = algebra(&["c1^2 - 1"], 1);
        assert_eq!(a.dimension(), 2);
        let c1 = parse_mpoly("c1", 1, "c").unwrap();
        let sq = a.mul(&a.coordinates(&c1).unwrap(), &a.coordinates(&c1).unwrap());
        assert_eq!(sq, a.one());
        assert!(a.matrices_commute());
    }

    #[test]
    fn unit_ideal_is_zero_dimensional() {
        let a = algebra(&["c1 + 1", "c1"], 2);
        assert_eq!(a.dimension(), 0);
    }

    #[test]
    fn localization_cases() {
        let a = algebra(&["c1^2"], 1);
        let x = parse_mpoly("c1", 1, "c").unwrap();
        let l = localize_artinian(&a, &x).unwrap();
        assert_eq!(l.localized.dimension(), 0);
        assert_eq!(l.kernel.len(), 2);

        let b = algebra(&["c1^2 - 1"], 1);
        let l = localize_artinian(&b, &x).unwrap();
        assert!(l.kernel.is_empty());
        assert_eq!(l.localized, b);

        // (x^2 - x): idempotent splitting, u = x kills the x = 0 component
        let c = algebra(&["c1^2 - c1"], 1);
        let l = localize_artinian(&c, &x).unwrap();
        assert_eq!(l.localized.dimension(), 1);
        let img = l.project(&c.coordinates(&x).unwrap());
        assert_eq!(img, l.localized.one());
        assert_eq!(l.localized.one(), &[rat(1)]);
    }
}
