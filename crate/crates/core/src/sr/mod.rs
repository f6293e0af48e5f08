//! Stanley–Reisner complexes of square-free monomial ideals and the
//! invariants read off them.

mod betti;
pub mod linalg;

pub use betti::{betti_table, homological_summary, reduced_homology, regularity, BettiEntry, BettiTable};

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{var_name, Monomial};

/// Vertex sets are bitmasks over ring variables (bit `k` is variable `k`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    nvars: usize,
    facets: Vec<u64>,
    minimal_nonfaces: Vec<u64>,
}

impl SimplicialComplex {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Facets sorted by size descending, then mask ascending.
    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    pub fn minimal_nonfaces(&self) -> &[u64] {
        &self.minimal_nonfaces
    }

    pub fn contains_face(&self, face: u64) -> bool {
        face >> self.nvars == 0 && !self.minimal_nonfaces.iter().any(|&s| s & face == s)
    }

    /// Facets as monomials, for display.
    pub fn facet_monomials(&self) -> Vec<Monomial> {
        self.facets.iter().map(|&f| Monomial::from_mask(self.nvars, f)).collect()
    }

    /// Facet variable names, `n` being the number of graph vertices.
    pub fn facet_names(&self, n: usize) -> Vec<Vec<String>> {
        self.facets
            .iter()
            .map(|&f| (0..self.nvars).filter(|k| f >> k & 1 == 1).map(|k| var_name(n, k)).collect())
            .collect()
    }
}

fn check_squarefree(mingens: &[Monomial], nvars: usize) -> Result<Vec<u64>> {
    if nvars > 64 {
        return Err(Error::LimitExceeded { what: "variables", limit: 64, got: nvars });
    }
    mingens
        .iter()
        .map(|m| {
            if m.nvars() != nvars {
                Err(Error::ContextMismatch)
            } else if !m.is_squarefree() {
                Err(Error::NotSquareFree(m.render()))
            } else {
                Ok(m.support_mask())
            }
        })
        .collect()
}

/// Keeps the inclusion-minimal supports.
fn minimal_masks(mut masks: Vec<u64>) -> Vec<u64> {
    masks.sort_by_key(|m| (m.count_ones(), *m));
    masks.dedup();
    let mut out: Vec<u64> = Vec::new();
    for m in masks {
        if !out.iter().any(|&s| s & m == s) {
            out.push(m);
        }
    }
    out
}

/// The complex whose faces are the variable sets containing no generator support.
pub fn stanley_reisner(mingens: &[Monomial], nvars: usize) -> Result<SimplicialComplex> {
    let nonfaces = minimal_masks(check_squarefree(mingens, nvars)?);
    let full = if nvars == 64 { u64::MAX } else { (1u64 << nvars) - 1 };
    // Facets are complements of minimal vertex covers of the nonfaces.
    let mut covers = Vec::new();
    transversals(&nonfaces, 0, &mut HashSet::new(), &mut covers);
    let mut facets: Vec<u64> = covers.into_iter().map(|cover| full & !cover).collect();
    facets.sort_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));
    Ok(SimplicialComplex { nvars, facets, minimal_nonfaces: nonfaces })
}

// Minimal hitting sets of `sets`, branching on the first unhit set.
fn transversals(sets: &[u64], cover: u64, seen: &mut HashSet<u64>, out: &mut Vec<u64>) {
    if !seen.insert(cover) {
        return;
    }
    let Some(&unhit) = sets.iter().find(|&&s| s & cover == 0) else {
        let minimal = (0..64).filter(|k| cover >> k & 1 == 1).all(|k| {
            let smaller = cover & !(1u64 << k);
            sets.iter().any(|&s| s & smaller == 0)
        });
        if minimal {
            out.push(cover);
        }
        return;
    };
    let mut rest = unhit;
    while rest != 0 {
        let bit = rest & rest.wrapping_neg();
        rest &= rest - 1;
        transversals(sets, cover | bit, seen, out);
    }
}

/// Largest facet size, the Krull dimension of the Stanley–Reisner ring.
pub fn krull_dim(c: &SimplicialComplex) -> usize {
    c.facets.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FptReport {
    pub ideal: String,
    pub fpt: usize,
    /// Indices of variables not dividing any generator.
    pub absent: Vec<usize>,
}

impl FptReport {
    pub fn absent_names(&self, n: usize) -> Vec<String> {
        self.absent.iter().map(|&k| var_name(n, k)).collect()
    }
}

/// F-pure threshold of `S/I` for a square-free monomial ideal given by its
/// minimal generators: the number of variables that never appear.
pub fn fpt_squarefree(mingens: &[Monomial], nvars: usize) -> Result<FptReport> {
    let masks = check_squarefree(mingens, nvars)?;
    for (a, ma) in mingens.iter().enumerate() {
        for (b, mb) in mingens.iter().enumerate() {
            if a != b && ma.divides(mb) {
                return Err(Error::NotMinimal(ma.render(), mb.render()));
            }
        }
    }
    let used = masks.iter().fold(0u64, |acc, m| acc | m);
    let absent: Vec<usize> = (0..nvars).filter(|k| used >> k & 1 == 0).collect();
    let ideal = format!("({})", mingens.iter().map(Monomial::render).collect::<Vec<_>>().join(", "));
    Ok(FptReport { ideal, fpt: absent.len(), absent })
}
