use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Exponent vector over `x_1, ..., x_n, y_1, ..., y_n`, in that order.
///
/// `Ord` is the lexicographic order with `x_1 > ... > x_n > y_1 > ... > y_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u32]>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars].into_boxed_slice(),
            degree: 0,
        }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial {
            exps: exps.into_boxed_slice(),
            degree,
        }
    }

    /// The single variable with index `var`.
    pub fn var(nvars: usize, var: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[var] = 1;
        m.degree = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
        }
    }

    /// `self / other`, provided `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| Monomial {
            exps: self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a - b).collect(),
            degree: self.degree - other.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::from_exponents(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, e: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|a| a * e).collect(),
            degree: self.degree * e,
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&a| a <= 1)
    }

    /// Bitmask of the variables that occur.
    pub fn support_mask(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .fold(0, |m, (k, _)| m | 1 << k)
    }

    /// Square-free monomial with the given support.
    pub fn from_mask(nvars: usize, mask: u64) -> Monomial {
        Monomial::from_exponents((0..nvars).map(|k| (mask >> k & 1) as u32).collect())
    }

    /// Weighted degree `sum w_k a_k`.
    pub fn weighted_degree(&self, weights: &[u64]) -> u64 {
        self.exps.iter().zip(weights).map(|(&a, &w)| a as u64 * w).sum()
    }

    /// Renders as `x1*y2^3`, or `1` for the unit monomial.
    pub fn render(&self) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let n = self.exps.len() / 2;
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(k, &a)| {
                let name = var_name(n, k);
                if a == 1 {
                    name
                } else {
                    format!("{name}^{a}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exps.cmp(&other.exps)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Name of variable `k` in a ring with `2n` variables: `x1..xn`, then `y1..yn`.
pub fn var_name(n: usize, k: usize) -> String {
    if k < n {
        format!("x{}", k + 1)
    } else {
        format!("y{}", k - n + 1)
    }
}

/// Lex comparison that checks both monomials live in the same ring.
pub fn lex_compare(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::ContextMismatch);
    }
    Ok(a.cmp(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    // n = 2: x1, x2, y1, y2
    fn m(e: [u32; 4]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn lex_order() {
        assert_eq!(lex_compare(&m([1, 0, 0, 0]), &m([0, 0, 1, 0])).unwrap(), Ordering::Greater);
        // x1*y2 > x2*y1
        assert_eq!(lex_compare(&m([1, 0, 0, 1]), &m([0, 1, 1, 0])).unwrap(), Ordering::Greater);
        let a = m([2, 1, 0, 3]);
        assert_eq!(lex_compare(&a, &a).unwrap(), Ordering::Equal);
        assert_eq!(
            lex_compare(&a, &Monomial::one(6)),
            Err(Error::ContextMismatch)
        );
    }

    #[test]
    fn division_and_lcm() {
        let a = m([1, 0, 2, 0]);
        let b = m([1, 1, 2, 0]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(b.div(&a), Some(m([0, 1, 0, 0])));
        assert_eq!(a.div(&b), None);
        assert_eq!(m([1, 0, 0, 3]).lcm(&m([0, 2, 0, 1])), m([1, 2, 0, 3]));
        assert!(m([1, 0, 0, 0]).is_coprime(&m([0, 1, 1, 0])));
        assert_eq!(a.degree(), 3);
    }

    #[test]
    fn rendering() {
        assert_eq!(m([1, 0, 0, 2]).render(), "x1*y2^2");
        assert_eq!(Monomial::one(4).render(), "1");
        assert_eq!(Monomial::from_mask(4, 0b0101).render(), "x1*y1");
    }
}
