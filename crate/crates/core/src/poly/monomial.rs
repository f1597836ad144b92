use std::cmp::Ordering;
use std::fmt;

/// Exponent vector of a monomial `t1^a1 * ... * tn^an`.
///
/// Entries are nonnegative everywhere except transiently inside the torus
/// ring, where `t_i^{-1}` is written before canonicalization.
///
/// The `Ord` impl is graded reverse lexicographic: higher total degree is
/// larger; on ties, the vector with the smaller exponent in the last
/// differing variable is larger.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExpVec(Vec<i32>);

impl ExpVec {
    pub fn new(exponents: Vec<i32>) -> Self {
        ExpVec(exponents)
    }

    pub fn zero(nvars: usize) -> Self {
        ExpVec(vec![0; nvars])
    }

    /// The exponent vector of the single variable `index` (zero-based).
    pub fn unit(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        ExpVec(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> i32 {
        self.0[i]
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn min_entry(&self) -> i32 {
        self.0.iter().copied().min().unwrap_or(0)
    }

    pub fn mul(&self, other: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn divides(&self, other: &ExpVec) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Shifts every entry by `delta`.
    pub fn shift(&self, delta: i32) -> ExpVec {
        ExpVec(self.0.iter().map(|e| e + delta).collect())
    }

    /// Index of the single variable this monomial is a pure power of.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e != 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    /// Lexicographic comparison with `t1 > t2 > ... > tn`.
    pub fn lex_cmp(&self, other: &ExpVec) -> Ordering {
        self.0.cmp(&other.0)
    }

    pub fn grevlex_cmp(&self, other: &ExpVec) -> Ordering {
        self.cmp(other)
    }

    pub(crate) fn as_mut_vec(&mut self) -> &mut Vec<i32> {
        &mut self.0
    }

    pub fn into_vec(self) -> Vec<i32> {
        self.0
    }
}

impl Ord for ExpVec {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.degree().cmp(&other.degree()))
            .then_with(|| {
                for (a, b) in self.0.iter().zip(&other.0).rev() {
                    if a != b {
                        return b.cmp(a);
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for ExpVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ExpVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<i32>> for ExpVec {
    fn from(v: Vec<i32>) -> Self {
        ExpVec(v)
    }
}
