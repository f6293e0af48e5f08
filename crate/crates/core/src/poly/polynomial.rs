use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::monomial::Monomial;
use crate::error::{Error, Result};
use crate::field::Field;

/// `K[x_1..x_n, y_1..y_n]` with the lex order `x_1 > ... > x_n > y_1 > ... > y_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyRing<F: Field> {
    n: usize,
    field: F,
}

impl<F: Field> PolyRing<F> {
    pub fn new(n: usize, field: F) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("ring needs n >= 1".into()));
        }
        if 2 * n > 64 {
            return Err(Error::LimitExceeded {
                what: "polynomial ring size",
                limit: 32,
                got: n,
            });
        }
        Ok(PolyRing { n, field })
    }

    /// Number of vertices; the ring has `2n` variables.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        2 * self.n
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn x_index(&self, i: usize) -> usize {
        assert!((1..=self.n).contains(&i), "x{i} out of range");
        i - 1
    }

    pub fn y_index(&self, i: usize) -> usize {
        assert!((1..=self.n).contains(&i), "y{i} out of range");
        self.n + i - 1
    }

    pub fn zero(&self) -> Polynomial<F> {
        Polynomial {
            ring: self.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(&self) -> Polynomial<F> {
        self.term(Monomial::one(self.nvars()), self.field.one())
    }

    pub fn term(&self, m: Monomial, c: F::Elem) -> Polynomial<F> {
        assert_eq!(m.nvars(), self.nvars(), "monomial from another ring");
        let terms = if self.field.is_zero(&c) { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ring: self.clone(),
            terms,
        }
    }

    pub fn monomial(&self, m: Monomial) -> Polynomial<F> {
        self.term(m, self.field.one())
    }

    pub fn x(&self, i: usize) -> Polynomial<F> {
        self.monomial(Monomial::var(self.nvars(), self.x_index(i)))
    }

    pub fn y(&self, i: usize) -> Polynomial<F> {
        self.monomial(Monomial::var(self.nvars(), self.y_index(i)))
    }

    /// Sums arbitrary terms, combining equal monomials.
    pub fn from_terms(&self, terms: impl IntoIterator<Item = (Monomial, F::Elem)>) -> Polynomial<F> {
        let mut acc: BTreeMap<Monomial, F::Elem> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), self.nvars(), "monomial from another ring");
            match acc.get_mut(&m) {
                Some(v) => *v = self.field.add(v, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        self.from_sorted_map(acc)
    }

    fn from_sorted_map(&self, acc: BTreeMap<Monomial, F::Elem>) -> Polynomial<F> {
        let field = &self.field;
        Polynomial {
            ring: self.clone(),
            terms: acc.into_iter().rev().filter(|(_, c)| !field.is_zero(c)).collect(),
        }
    }
}

/// A polynomial with terms kept in strictly decreasing lex order and no zero
/// coefficients.
#[derive(Clone, PartialEq)]
pub struct Polynomial<F: Field> {
    ring: PolyRing<F>,
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> Polynomial<F> {
    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        &self.ring.field
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|(m, _)| m)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&F::Elem> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Largest total degree of a term, `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn coeff(&self, m: &Monomial) -> F::Elem {
        self.terms
            .binary_search_by(|(t, _)| m.cmp(t))
            .map(|k| self.terms[k].1.clone())
            .unwrap_or_else(|_| self.field().zero())
    }

    pub fn same_ring(&self, other: &Polynomial<F>) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Polynomial<F> {
        self.mul_term(&Monomial::one(self.ring.nvars()), c)
    }

    /// `c * m * self`; lex is a monomial order so term order is preserved.
    pub fn mul_term(&self, m: &Monomial, c: &F::Elem) -> Polynomial<F> {
        let field = self.field();
        if field.is_zero(c) {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), field.mul(a, c)))
                .filter(|(_, a)| !field.is_zero(a))
                .collect(),
        }
    }

    /// `self + c * m * other` in a single merge pass.
    pub fn add_scaled(&self, c: &F::Elem, m: &Monomial, other: &Polynomial<F>) -> Polynomial<F> {
        assert_eq!(self.ring, other.ring, "polynomial context mismatch");
        let field = self.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other
            .terms
            .iter()
            .map(|(t, v)| (t.mul(m), field.mul(v, c)))
            .peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some((ta, _)), Some((tb, _))) => ta.cmp(tb),
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => {
                    let t = b.next().unwrap();
                    if !field.is_zero(&t.1) {
                        out.push(t);
                    }
                }
                Ordering::Equal => {
                    let (t, x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    let s = field.add(x, &y);
                    if !field.is_zero(&s) {
                        out.push((t.clone(), s));
                    }
                }
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, F::Elem)> {
        (!self.terms.is_empty()).then(|| self.terms.remove(0))
    }

    pub fn pow(&self, mut e: u32) -> Polynomial<F> {
        let mut base = self.clone();
        let mut acc = self.ring.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Polynomial<F> {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if self.field().is_one(c) => self.clone(),
            Some(c) => self.scale(&self.field().inv(c).expect("nonzero")),
        }
    }

    /// Raises every term to the `q`-th power, which equals `self^q` when `q`
    /// is a power of the characteristic.
    pub fn frobenius(&self, q: u32) -> Polynomial<F> {
        let field = self.field();
        let terms: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut acc = field.one();
                for _ in 0..q {
                    acc = field.mul(&acc, c);
                }
                (m.pow(q), acc)
            })
            .collect();
        self.ring.from_terms(terms)
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn add(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        let one = self.field().one();
        self.add_scaled(&one, &Monomial::one(self.ring.nvars()), rhs)
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn sub(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        let minus_one = self.field().neg(&self.field().one());
        self.add_scaled(&minus_one, &Monomial::one(self.ring.nvars()), rhs)
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn neg(self) -> Polynomial<F> {
        self.scale(&self.field().neg(&self.field().one()))
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn mul(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        assert_eq!(self.ring, rhs.ring, "polynomial context mismatch");
        let field = self.field();
        let mut acc: BTreeMap<Monomial, F::Elem> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let c = field.mul(ca, cb);
                match acc.get_mut(&m) {
                    Some(v) => *v = field.add(v, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        self.ring.from_sorted_map(acc)
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::render(self))
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::render(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn binomial_square() {
        let r = PolyRing::new(2, Rationals).unwrap();
        let f = &(&r.x(1) * &r.y(2)) - &(&r.x(2) * &r.y(1));
        let sq = f.pow(2);
        assert_eq!(sq.len(), 3);
        assert_eq!(sq.to_string(), "x1^2*y2^2 - 2*x1*x2*y1*y2 + x2^2*y1^2");
        assert!((&f - &f).is_zero());
    }

    #[test]
    fn frobenius_matches_power_in_characteristic_p() {
        for p in [2u64, 3, 5] {
            let r = PolyRing::new(3, PrimeField::new(p).unwrap()).unwrap();
            let g = &(&(&r.x(1) * &r.y(3)) - &(&r.x(3) * &r.y(2))) + &r.x(2);
            assert_eq!(g.frobenius(p as u32), g.pow(p as u32));
            let q = (p * p) as u32;
            assert_eq!(g.frobenius(q), g.pow(q));
        }
    }

    #[test]
    fn terms_sorted_descending() {
        let r = PolyRing::new(2, Rationals).unwrap();
        let f = &(&r.y(2) + &r.x(2)) + &r.x(1);
        let ms: Vec<String> = f.monomials().map(|m| m.render()).collect();
        assert_eq!(ms, vec!["x1", "x2", "y2"]);
        assert_eq!(f.leading_monomial().unwrap().render(), "x1");
    }

    #[test]
    fn monic_and_coeff() {
        let r = PolyRing::new(1, Rationals).unwrap();
        let f = r.x(1).scale(&Rationals.from_i64(3));
        let m = f.monic();
        assert!(Rationals.is_one(m.leading_coeff().unwrap()));
        assert_eq!(f.coeff(f.leading_monomial().unwrap()), Rationals.from_i64(3));
        assert_eq!(f.coeff(&Monomial::one(2)), Rationals.zero());
    }

    #[test]
    fn context_mismatch_is_detected() {
        let a = PolyRing::new(2, Rationals).unwrap().x(1);
        let b = PolyRing::new(3, Rationals).unwrap().x(1);
        assert_eq!(a.same_ring(&b), Err(Error::ContextMismatch));
    }
}
