//! Permutations of `{0, .., n-1}` acting on variable indices.

use crate::poly::{ExpVec, MPoly};

/// `images[i]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Panics unless `images` is a permutation of `0..images.len()`.
    pub fn from_images(images: Vec<usize>) -> Self {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            assert!(i < images.len() && !seen[i], "not a permutation: {images:?}");
            seen[i] = true;
        }
        Permutation { images }
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Permutation { images }
    }

    /// The cycle `c[0] -> c[1] -> ... -> c[0]`.
    pub fn cycle(n: usize, c: &[usize]) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        for (k, &i) in c.iter().enumerate() {
            images[i] = c[(k + 1) % c.len()];
        }
        Self::from_images(images)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `+1` or `-1`, by counting cycles.
    pub fn sign(&self) -> i64 {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut transpositions = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            transpositions += len - 1;
        }
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// All `n!` permutations in lexicographic order of their image lists.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation {
                images: current.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
            current.swap(i - 1, j);
            current[i..].reverse();
        }
        out
    }

    /// Adjacent transpositions `(i, i+1)`, which generate `S_n`.
    pub fn adjacent_transpositions(n: usize) -> Vec<Permutation> {
        (0..n.saturating_sub(1))
            .map(|i| Self::transposition(n, i, i + 1))
            .collect()
    }

    /// Sends the exponent of variable `i` to variable `σ(i)`.
    pub fn act_on_exponents(&self, e: &ExpVec) -> ExpVec {
        let mut out = vec![0; e.len()];
        for (i, &k) in e.as_slice().iter().enumerate() {
            out[self.images[i]] = k;
        }
        ExpVec::new(out)
    }

    /// Unsigned action `t_i ↦ t_{σ(i)}` on a polynomial.
    pub fn act_on_poly(&self, p: &MPoly) -> MPoly {
        p.map_exponents(p.nvars(), |e| self.act_on_exponents(e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signs_and_enumeration() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        assert_eq!(all.iter().filter(|p| p.sign() == 1).count(), 12);
        assert_eq!(Permutation::transposition(3, 0, 2).sign(), -1);
        assert_eq!(Permutation::cycle(3, &[0, 1, 2]).sign(), 1);
    }

    #[test]
    fn composition_and_inverse() {
        let s = Permutation::cycle(4, &[0, 1, 2]);
        let t = Permutation::transposition(4, 1, 3);
        let st = s.compose(&t);
        for i in 0..4 {
            assert_eq!(st.image(i), s.image(t.image(i)));
        }
        assert_eq!(st.compose(&st.inverse()), Permutation::identity(4));
        assert_eq!(st.sign(), s.sign() * t.sign());
    }
}
