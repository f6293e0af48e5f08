use serde::Serialize;

use super::GroebnerElement;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Monomial, Polynomial};

const MAX_ROUNDS: usize = 10_000;

/// Non-negative integer weights indexed like ring variables: `x_1..x_n`, then `y_1..y_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightVector {
    pub weights: Vec<u64>,
}

impl WeightVector {
    pub fn x_weights(&self) -> &[u64] {
        &self.weights[..self.weights.len() / 2]
    }

    pub fn y_weights(&self) -> &[u64] {
        &self.weights[self.weights.len() / 2..]
    }

    /// Whether the lex-leading monomial of `f` has strictly larger weight than every other term.
    pub fn dominates<F: Field>(&self, f: &Polynomial<F>) -> bool {
        let mut monos = f.monomials();
        let Some(lead) = monos.next() else { return true };
        let top = lead.weighted_degree(&self.weights);
        monos.all(|m| m.weighted_degree(&self.weights) < top)
    }

    /// Term of maximal weight, ties broken by lex.
    pub fn initial_monomial<F: Field>(&self, f: &Polynomial<F>) -> Option<Monomial> {
        f.monomials()
            .max_by(|a, b| {
                a.weighted_degree(&self.weights)
                    .cmp(&b.weighted_degree(&self.weights))
                    .then_with(|| a.cmp(b))
            })
            .cloned()
    }
}

/// A weight vector whose initial terms agree with lex on every basis element.
pub fn find_weight_vector<F: Field>(n: usize, basis: &[GroebnerElement<F>]) -> Result<WeightVector> {
    let polys: Vec<Polynomial<F>> = basis.iter().map(|e| e.element.clone()).collect();
    weight_vector_for(n, &polys)
}

/// Same as [`find_weight_vector`] for arbitrary polynomials in `2n` variables.
///
/// Tries `w(x_i) = n - i, w(y_i) = 0` first, then a perceptron search with
/// coordinates capped at `4n`.
pub fn weight_vector_for<F: Field>(n: usize, polys: &[Polynomial<F>]) -> Result<WeightVector> {
    if polys.iter().any(|f| f.ring().n() != n) {
        return Err(Error::ContextMismatch);
    }
    let mut weights = vec![0u64; 2 * n];
    for (i, w) in weights.iter_mut().take(n).enumerate() {
        *w = (n - 1 - i) as u64;
    }
    let closed = WeightVector { weights };
    if polys.iter().all(|f| closed.dominates(f)) {
        return Ok(closed);
    }
    let bound = 4 * n as u64;
    let diffs: Vec<Vec<i64>> = polys
        .iter()
        .flat_map(|f| {
            let mut monos = f.monomials();
            let lead = monos.next().cloned();
            monos.map(move |m| {
                let lead = lead.as_ref().expect("nonempty");
                lead.exponents()
                    .iter()
                    .zip(m.exponents())
                    .map(|(&a, &b)| a as i64 - b as i64)
                    .collect()
            })
        })
        .collect();
    let mut w = vec![0i64; 2 * n];
    for _ in 0..MAX_ROUNDS {
        let violated = diffs
            .iter()
            .find(|d| d.iter().zip(&w).map(|(a, b)| a * b).sum::<i64>() <= 0);
        let Some(d) = violated else {
            let found = WeightVector { weights: w.iter().map(|&v| v as u64).collect() };
            debug_assert!(polys.iter().all(|f| found.dominates(f)));
            return Ok(found);
        };
        for (wi, di) in w.iter_mut().zip(d) {
            *wi = (*wi + di).clamp(0, bound as i64);
        }
    }
    Err(Error::WeightSearchFailed(bound))
}
