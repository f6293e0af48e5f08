use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::linalg::{rank, SparseRow};
use super::{check_squarefree, minimal_masks};
use crate::error::Result;
use crate::field::Field;
use crate::poly::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: usize,
    pub beta: u64,
}

/// Graded Betti numbers `beta_{i,j}` of `S/I`; only nonzero entries are stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
}

#[derive(Serialize, Deserialize)]
struct BettiJson {
    entries: Vec<BettiEntry>,
}

impl BettiTable {
    pub fn from_entries(entries: impl IntoIterator<Item = BettiEntry>) -> Self {
        let mut t = BettiTable::default();
        for e in entries {
            t.add(e.i, e.j, e.beta);
        }
        t
    }

    fn add(&mut self, i: usize, j: usize, beta: u64) {
        if beta > 0 {
            *self.entries.entry((i, j)).or_insert(0) += beta;
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries ordered by `(i, j)`.
    pub fn entries(&self) -> Vec<BettiEntry> {
        self.entries.iter().map(|(&(i, j), &beta)| BettiEntry { i, j, beta }).collect()
    }

    /// `sum_j beta_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries.range((i, 0)..=(i, usize::MAX)).map(|(_, b)| b).sum()
    }

    pub fn regularity(&self) -> usize {
        regularity(self)
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(BettiJson { entries: self.entries() }).expect("table serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> std::result::Result<Self, serde_json::Error> {
        let parsed: BettiJson = serde_json::from_value(value.clone())?;
        Ok(Self::from_entries(parsed.entries))
    }

    /// Rows are `j - i`, columns are `i`; zeros print as `.`.
    pub fn render(&self) -> String {
        let pd = self.projective_dimension();
        let reg = self.regularity();
        let cell = |v: u64| if v == 0 { ".".to_string() } else { v.to_string() };
        let width = self
            .entries
            .values()
            .map(|v| v.to_string().len())
            .chain((0..=pd).map(|i| self.total(i).to_string().len()).chain([pd.to_string().len()]))
            .max()
            .unwrap_or(1);
        let label = (reg.to_string().len() + 1).max(6);
        let mut out = String::new();
        let _ = write!(out, "{:>label$}", "");
        for i in 0..=pd {
            let _ = write!(out, " {i:>width$}");
        }
        let _ = write!(out, "\n{:>label$}", "total:");
        for i in 0..=pd {
            let _ = write!(out, " {:>width$}", self.total(i));
        }
        for r in 0..=reg {
            let _ = write!(out, "\n{:>label$}", format!("{r}:"));
            for i in 0..=pd {
                let _ = write!(out, " {:>width$}", cell(self.get(i, i + r)));
            }
        }
        out.push('\n');
        out
    }
}

/// `max { j - i : beta_{i,j} != 0 }`.
pub fn regularity(t: &BettiTable) -> usize {
    t.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
}

/// Projective dimension and the total Betti number in that homological degree.
pub fn homological_summary(t: &BettiTable) -> (usize, u64) {
    let pd = t.projective_dimension();
    (pd, t.total(pd))
}

/// Ranks of reduced homology of the complex on `vertices` with the given
/// minimal nonfaces. Entry `d + 1` holds `dim H~_d`, for `d >= -1`.
pub fn reduced_homology<F: Field>(field: &F, vertices: u64, nonfaces: &[u64]) -> Vec<u64> {
    let nv = vertices.count_ones() as usize;
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); nv + 1];
    let mut sub = vertices;
    loop {
        if !nonfaces.iter().any(|&s| s & sub == s) {
            by_size[sub.count_ones() as usize].push(sub);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & vertices;
    }
    while by_size.last().is_some_and(Vec::is_empty) {
        by_size.pop();
    }
    // ranks[k] is the rank of the boundary from faces of size k to size k - 1
    let mut ranks = vec![0usize; by_size.len() + 1];
    for k in 1..by_size.len() {
        let index: HashMap<u64, usize> = by_size[k - 1].iter().enumerate().map(|(a, &f)| (f, a)).collect();
        let (plus, minus) = (field.one(), field.neg(&field.one()));
        let rows = by_size[k].iter().map(|&face| {
            let mut row: SparseRow<F::Elem> = Vec::with_capacity(k);
            let mut rest = face;
            let mut t = 0;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest &= rest - 1;
                let sign = if t % 2 == 0 { plus.clone() } else { minus.clone() };
                row.push((index[&(face & !bit)], sign));
                t += 1;
            }
            row.sort_unstable_by_key(|e| e.0);
            row
        });
        ranks[k] = rank(field, rows);
    }
    (0..by_size.len())
        .map(|k| (by_size[k].len() - ranks[k] - ranks[k + 1]) as u64)
        .collect()
}

/// Graded Betti table of `S/I` over `field` via Hochster's formula,
/// `beta_{i,sigma} = dim H~_{|sigma|-i-1}(Delta|_sigma)`.
///
/// Only unions of generator supports are visited; any other `sigma`
/// contains a cone point of `Delta|_sigma`.
pub fn betti_table<F: Field>(mingens: &[Monomial], nvars: usize, field: &F) -> Result<BettiTable> {
    let nonfaces = minimal_masks(check_squarefree(mingens, nvars)?);
    let mut lattice: BTreeSet<u64> = BTreeSet::from([0]);
    for &s in &nonfaces {
        let grown: Vec<u64> = lattice.iter().map(|&u| u | s).collect();
        lattice.extend(grown);
    }
    let sigmas: Vec<u64> = lattice.into_iter().collect();
    let parts: Vec<(usize, Vec<u64>)> = sigmas
        .par_iter()
        .map(|&sigma| {
            let local: Vec<u64> = nonfaces.iter().copied().filter(|&s| s & sigma == s).collect();
            (sigma.count_ones() as usize, reduced_homology(field, sigma, &local))
        })
        .collect();
    let mut table = BettiTable::default();
    for (size, h) in parts {
        for (idx, &dim) in h.iter().enumerate() {
            // idx = d + 1 with d = size - i - 1
            if idx <= size {
                table.add(size - idx, size, dim);
            }
        }
    }
    Ok(table)
}
