//! Canonical text form of polynomials.
//!
//! Terms appear leading-first in graded reverse lexicographic order. A term
//! is `c * x1^a1*x2^a2` listing only variables with nonzero exponent (the
//! `^a` is always written); constant terms are just `c`. The first term
//! carries its sign, later terms are joined by ` + ` or ` - `. Coefficients
//! are `p/q` or `p`. The zero polynomial is `0`.

use num_traits::{One, Signed, Zero};

use super::{format_rational, parse_rational, ExpVec, MPoly, Rational};
use crate::error::{Error, Result};

impl MPoly {
    /// Canonical text with variables named `{prefix}1 .. {prefix}n`.
    pub fn to_text(&self, prefix: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms_desc().enumerate() {
            let mag = if i == 0 {
                c.clone()
            } else if c.is_negative() {
                out.push_str(" - ");
                -c.clone()
            } else {
                out.push_str(" + ");
                c.clone()
            };
            out.push_str(&format_rational(&mag));
            let factors = monomial_text(e, prefix);
            if !factors.is_empty() {
                out.push_str(" * ");
                out.push_str(&factors);
            }
        }
        out
    }
}

fn monomial_text(e: &ExpVec, prefix: &str) -> String {
    e.as_slice()
        .iter()
        .enumerate()
        .filter(|(_, &k)| k != 0)
        .map(|(i, k)| format!("{prefix}{}^{k}", i + 1))
        .collect::<Vec<_>>()
        .join("*")
}

/// Parses the canonical text form (and the obvious relaxations: missing
/// coefficient, missing `^1`, arbitrary whitespace and term order).
pub fn parse_mpoly(text: &str, nvars: usize, prefix: &str) -> Result<MPoly> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut poly = MPoly::zero(nvars);
    for (negative, body) in split_terms(&compact)? {
        let (coeff, exp) = parse_term(body, nvars, prefix)?;
        poly.add_term(exp, if negative { -coeff } else { coeff });
    }
    Ok(poly)
}

/// Splits at top-level `+`/`-`, leaving signs inside exponents (`^-1`) and
/// immediately after `*` alone.
fn split_terms(s: &str) -> Result<Vec<(bool, &str)>> {
    let bytes = s.as_bytes();
    let mut terms = Vec::new();
    let mut start = 0;
    let mut negative = false;
    let mut i = 0;
    if i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
        negative = bytes[i] == b'-';
        i += 1;
        start = i;
    }
    while i < bytes.len() {
        let b = bytes[i];
        if (b == b'+' || b == b'-') && i > start && bytes[i - 1] != b'^' && bytes[i - 1] != b'*' {
            terms.push((negative, &s[start..i]));
            negative = b == b'-';
            start = i + 1;
        }
        i += 1;
    }
    if start >= s.len() {
        return Err(Error::Parse(format!("dangling sign in `{s}`")));
    }
    terms.push((negative, &s[start..]));
    Ok(terms)
}

fn parse_term(body: &str, nvars: usize, prefix: &str) -> Result<(Rational, ExpVec)> {
    let mut coeff = Rational::one();
    let mut exp = vec![0i32; nvars];
    for factor in body.split('*') {
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in `{body}`")));
        }
        if let Some(rest) = factor.strip_prefix(prefix).filter(|r| r.starts_with(|c: char| c.is_ascii_digit())) {
            let (idx, pow) = match rest.split_once('^') {
                Some((i, p)) => (i, p.parse::<i32>().map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?),
                None => (rest, 1),
            };
            let idx: usize = idx
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable `{factor}`")))?;
            if idx == 0 || idx > nvars {
                return Err(Error::Parse(format!("variable `{factor}` out of range 1..={nvars}")));
            }
            exp[idx - 1] += pow;
        } else {
            coeff *= parse_rational(factor)?;
        }
    }
    if coeff.is_zero() {
        return Ok((coeff, ExpVec::zero(nvars)));
    }
    Ok((coeff, ExpVec::new(exp)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ratio;
    use proptest::prelude::*;

    #[test]
    fn canonical_text() {
        let p = MPoly::from_int_terms(2, &[(1, &[2, 0]), (-1, &[0, 2]), (3, &[0, 0])]);
        assert_eq!(p.to_text("t"), "1 * t1^2 - 1 * t2^2 + 3");
        assert_eq!(MPoly::zero(3).to_text("t"), "0");
        let q = MPoly::monomial(ExpVec::new(vec![1, 0, 4]), ratio(-2, 3));
        assert_eq!(q.to_text("c"), "-2/3 * c1^1*c3^4");
    }

    #[test]
    fn relaxed_parse() {
        let p = parse_mpoly("t1^2 - t2^2 + 1/2*t1*t2", 2, "t").unwrap();
        let expected = MPoly::from_terms(
            2,
            [
                (ExpVec::new(vec![2, 0]), ratio(1, 1)),
                (ExpVec::new(vec![0, 2]), ratio(-1, 1)),
                (ExpVec::new(vec![1, 1]), ratio(1, 2)),
            ],
        );
        assert_eq!(p, expected);
        assert!(parse_mpoly("t3", 2, "t").is_err());
        assert!(parse_mpoly("1 +", 2, "t").is_err());
        let neg = parse_mpoly("-1 * t1^-1", 2, "t").unwrap();
        assert_eq!(neg.leading_term().unwrap().0.as_slice(), &[-1, 0]);
    }

    fn arb_poly() -> impl Strategy<Value = MPoly> {
        prop::collection::vec((-20i64..20, 1i64..6, prop::collection::vec(0i32..4, 3)), 0..8).prop_map(|ts| {
            MPoly::from_terms(3, ts.into_iter().map(|(p, q, e)| (ExpVec::new(e), ratio(p, q))))
        })
    }

    proptest! {
        #[test]
        fn text_round_trip(p in arb_poly()) {
            let s = p.to_text("t");
            prop_assert_eq!(parse_mpoly(&s, 3, "t").unwrap(), p);
        }
    }
}
