use std::cmp::Ordering;

use super::monomial::Monomial;
use super::polynomial::{PolyRing, Polynomial};
use crate::error::{Error, Result};
use crate::field::Field;

/// Generators of an ideal, optionally certified as a lex Gröbner basis.
#[derive(Debug, Clone, PartialEq)]
pub struct IdealBasis<F: Field> {
    ring: PolyRing<F>,
    gens: Vec<Polynomial<F>>,
    groebner: bool,
}

impl<F: Field> IdealBasis<F> {
    /// Drops zero generators; the result is not marked Gröbner.
    pub fn new(ring: &PolyRing<F>, gens: impl IntoIterator<Item = Polynomial<F>>) -> Result<Self> {
        let mut out = Vec::new();
        for g in gens {
            if g.ring() != ring {
                return Err(Error::ContextMismatch);
            }
            if !g.is_zero() {
                out.push(g);
            }
        }
        Ok(IdealBasis {
            ring: ring.clone(),
            gens: out,
            groebner: false,
        })
    }

    /// Marks the basis Gröbner after checking every S-polynomial.
    pub fn certify(mut self) -> Result<Self> {
        if is_groebner_basis(&self) {
            self.groebner = true;
            Ok(self)
        } else {
            Err(Error::NotGroebner)
        }
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_marked_groebner(&self) -> bool {
        self.groebner
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.gens
            .iter()
            .map(|g| g.leading_monomial().expect("nonzero").clone())
            .collect()
    }
}

/// Deterministic generator order: ascending degree of the leading monomial,
/// then descending lex.
pub fn basis_order<F: Field>(a: &Polynomial<F>, b: &Polynomial<F>) -> Ordering {
    let (la, lb) = (a.leading_monomial(), b.leading_monomial());
    let key = |m: Option<&Monomial>| m.map(|m| m.degree());
    key(la).cmp(&key(lb)).then_with(|| lb.cmp(&la))
}

/// Result of dividing `f` by a list of divisors.
#[derive(Debug, Clone)]
pub struct Division<F: Field> {
    pub quotients: Vec<Polynomial<F>>,
    pub remainder: Polynomial<F>,
}

/// Multivariate division. Leading terms are reduced first, divisors are tried
/// in list order, and terms no leading monomial divides move to the remainder.
pub fn divide<F: Field>(f: &Polynomial<F>, divisors: &[Polynomial<F>]) -> Result<Division<F>> {
    for d in divisors {
        f.same_ring(d)?;
        if d.is_zero() {
            return Err(Error::InvalidArgument("zero divisor in basis".into()));
        }
    }
    let ring = f.ring();
    let field = ring.field();
    let mut quotients = vec![Vec::new(); divisors.len()];
    let mut rem_terms = Vec::new();
    let mut p = f.clone();
    while let Some(lm) = p.leading_monomial().cloned() {
        let lc = p.leading_coeff().unwrap().clone();
        let hit = divisors
            .iter()
            .enumerate()
            .find_map(|(k, d)| lm.div(d.leading_monomial().unwrap()).map(|m| (k, m)));
        match hit {
            Some((k, m)) => {
                let c = field.div(&lc, divisors[k].leading_coeff().unwrap());
                p = p.add_scaled(&field.neg(&c), &m, &divisors[k]);
                quotients[k].push((m, c));
            }
            None => rem_terms.extend(p.pop_leading()),
        }
    }
    Ok(Division {
        quotients: quotients.into_iter().map(|t| ring.from_terms(t)).collect(),
        remainder: ring.from_terms(rem_terms),
    })
}

/// Remainder of `f` on division by the generators of `basis`.
pub fn normal_form<F: Field>(f: &Polynomial<F>, basis: &IdealBasis<F>) -> Result<Polynomial<F>> {
    if f.ring() != basis.ring() {
        return Err(Error::ContextMismatch);
    }
    reduce(f, basis.gens())
}

/// Full reduction, without tracking quotients.
fn reduce<F: Field>(f: &Polynomial<F>, divisors: &[Polynomial<F>]) -> Result<Polynomial<F>> {
    let ring = f.ring();
    let field = ring.field();
    let mut rem_terms = Vec::new();
    let mut p = f.clone();
    let lms: Vec<&Monomial> = divisors.iter().map(|d| d.leading_monomial().unwrap()).collect();
    while let Some(lm) = p.leading_monomial() {
        let hit = lms.iter().enumerate().find_map(|(k, d)| lm.div(d).map(|m| (k, m)));
        match hit {
            Some((k, m)) => {
                let c = field.div(p.leading_coeff().unwrap(), divisors[k].leading_coeff().unwrap());
                p = p.add_scaled(&field.neg(&c), &m, &divisors[k]);
            }
            None => rem_terms.extend(p.pop_leading()),
        }
    }
    Ok(ring.from_terms(rem_terms))
}

pub fn s_polynomial<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Polynomial<F> {
    let field = f.field();
    let (lf, lg) = (f.leading_monomial().unwrap(), g.leading_monomial().unwrap());
    let l = lf.lcm(lg);
    let cf = field.inv(f.leading_coeff().unwrap()).unwrap();
    let cg = field.inv(g.leading_coeff().unwrap()).unwrap();
    f.mul_term(&l.div(lf).unwrap(), &cf)
        .add_scaled(&field.neg(&cg), &l.div(lg).unwrap(), g)
}

/// True iff every S-polynomial reduces to zero.
pub fn is_groebner_basis<F: Field>(basis: &IdealBasis<F>) -> bool {
    let g = basis.gens();
    (0..g.len()).all(|i| {
        (i + 1..g.len()).all(|j| {
            reduce(&s_polynomial(&g[i], &g[j]), g)
                .map(|r| r.is_zero())
                .unwrap_or(false)
        })
    })
}

/// Reduced lex Gröbner basis: monic, interreduced, sorted by [`basis_order`].
pub fn buchberger<F: Field>(basis: &IdealBasis<F>) -> IdealBasis<F> {
    let mut g: Vec<Polynomial<F>> = basis.gens().iter().map(Polynomial::monic).collect();
    g.sort_by(basis_order);
    let mut pairs: Vec<(Monomial, usize, usize)> = Vec::new();
    for j in 0..g.len() {
        for i in 0..j {
            pairs.push((pair_lcm(&g, i, j), i, j));
        }
    }
    loop {
        // normal strategy: smallest lcm first
        let pick = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.0.degree()
                    .cmp(&b.0.degree())
                    .then_with(|| a.0.cmp(&b.0))
                    .then_with(|| (a.1, a.2).cmp(&(b.1, b.2)))
            })
            .map(|(k, _)| k);
        let Some(k) = pick else { break };
        let (_, i, j) = pairs.swap_remove(k);
        let (li, lj) = (g[i].leading_monomial().unwrap(), g[j].leading_monomial().unwrap());
        if li.is_coprime(lj) {
            continue;
        }
        let r = reduce(&s_polynomial(&g[i], &g[j]), &g).expect("same ring");
        if !r.is_zero() {
            let new = g.len();
            g.push(r.monic());
            pairs.extend((0..new).map(|i| (pair_lcm(&g, i, new), i, new)));
        }
    }
    IdealBasis {
        ring: basis.ring().clone(),
        gens: interreduce(g),
        groebner: true,
    }
}

fn pair_lcm<F: Field>(g: &[Polynomial<F>], i: usize, j: usize) -> Monomial {
    g[i].leading_monomial().unwrap().lcm(g[j].leading_monomial().unwrap())
}

fn interreduce<F: Field>(mut g: Vec<Polynomial<F>>) -> Vec<Polynomial<F>> {
    g.sort_by(basis_order);
    let mut minimal: Vec<Polynomial<F>> = Vec::new();
    for f in g {
        let lm = f.leading_monomial().unwrap();
        if !minimal.iter().any(|h| h.leading_monomial().unwrap().divides(lm)) {
            minimal.push(f);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Polynomial<F>> = minimal
            .iter()
            .enumerate()
            .filter(|&(m, _)| m != k)
            .map(|(_, h)| h.clone())
            .collect();
        let f = &minimal[k];
        let (lm, lc) = (&f.terms()[0].0, &f.terms()[0].1);
        let lead = f.ring().term(lm.clone(), lc.clone());
        let tail = reduce(&(f - &lead), &others).expect("same ring");
        out.push((&lead + &tail).monic());
    }
    out.sort_by(basis_order);
    out
}

/// Bracket power `I^[q]` generated by the `q`-th powers of the generators.
pub fn frobenius_power<F: Field>(basis: &IdealBasis<F>, q: u64) -> Result<IdealBasis<F>> {
    let p = basis.ring().field().characteristic();
    if p == 0 {
        return Err(Error::CharacteristicZero);
    }
    let mut e = q;
    while e > 1 && e % p == 0 {
        e /= p;
    }
    if q < p || e != 1 {
        return Err(Error::NotCharacteristicPower { q, p });
    }
    let q32 = u32::try_from(q).map_err(|_| Error::NotCharacteristicPower { q, p })?;
    IdealBasis::new(basis.ring(), basis.gens().iter().map(|g| g.frobenius(q32)))
}

/// Whether `f` lies in `(ideal(bq) : ideal(b))`, i.e. `f * g` reduces to zero
/// modulo `bq` for every generator `g` of `b`.
pub fn colon_contains<F: Field>(
    f: &Polynomial<F>,
    b: &IdealBasis<F>,
    bq: &IdealBasis<F>,
) -> Result<bool> {
    Ok(colon_memberships(f, b, bq)?.into_iter().all(|ok| ok))
}

/// Per-generator membership of `f * g` in `ideal(bq)`.
pub fn colon_memberships<F: Field>(
    f: &Polynomial<F>,
    b: &IdealBasis<F>,
    bq: &IdealBasis<F>,
) -> Result<Vec<bool>> {
    if !bq.is_marked_groebner() {
        return Err(Error::NotGroebner);
    }
    if f.ring() != b.ring() || b.ring() != bq.ring() {
        return Err(Error::ContextMismatch);
    }
    b.gens()
        .iter()
        .map(|g| Ok(normal_form(&(f * g), bq)?.is_zero()))
        .collect()
}

/// Whether `f` lies outside `m^[q] = (x_1^q, ..., y_n^q)`: some term of `f`
/// has every exponent below `q`.
pub fn not_in_bracket_m<F: Field>(f: &Polynomial<F>, q: u64) -> bool {
    f.monomials()
        .any(|m| m.exponents().iter().all(|&a| (a as u64) < q))
}
