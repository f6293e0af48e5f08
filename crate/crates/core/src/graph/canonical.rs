use std::collections::BTreeSet;

use super::Graph;
use crate::error::{Error, Result};

/// Largest vertex count for canonical forms and enumeration.
pub const ENUMERATION_LIMIT: usize = 7;

/// Minimum adjacency bit-string over all vertex permutations.
///
/// Bits run over the upper triangle column by column,
/// `(1,2), (1,3), (2,3), (1,4), ...`, with the first bit most significant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: usize,
    pub code: u64,
}

impl CanonicalForm {
    pub fn bit_len(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    /// Zero-padded lowercase hex of the code.
    pub fn hex_id(&self) -> String {
        let width = self.bit_len().div_ceil(4).max(1);
        format!("{:0width$x}", self.code)
    }

    /// The representative graph whose natural labeling realizes the code.
    pub fn to_graph(&self) -> Graph {
        let m = self.bit_len();
        let mut edges = Vec::new();
        let mut bit = 0;
        for b in 2..=self.n {
            for a in 1..b {
                if self.code >> (m - 1 - bit) & 1 == 1 {
                    edges.push((a, b));
                }
                bit += 1;
            }
        }
        Graph::new(self.n, edges).expect("decoded edges are in range")
    }
}

/// Code of `g` under its current labeling.
pub fn labeled_code(g: &Graph) -> u64 {
    let mut code = 0u64;
    for b in 2..=g.n() {
        for a in 1..b {
            code = code << 1 | g.has_edge(a, b) as u64;
        }
    }
    code
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.n();
    if n > ENUMERATION_LIMIT {
        return Err(Error::LimitExceeded {
            what: "canonical form",
            limit: ENUMERATION_LIMIT,
            got: n,
        });
    }
    let mut search = Search {
        g,
        best: None,
        placed: Vec::with_capacity(n),
        used: vec![false; n],
    };
    search.run(0, 0);
    let (code, _) = search.best.expect("at least one permutation");
    Ok(CanonicalForm { n, code })
}

struct Search<'a> {
    g: &'a Graph,
    // code together with the per-prefix values used for pruning
    best: Option<(u64, Vec<u64>)>,
    placed: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn run(&mut self, prefix: u64, depth: usize) {
        let n = self.g.n();
        if depth == n {
            let mut prefixes = Vec::with_capacity(n);
            let mut value = 0u64;
            for b in 0..n {
                for a in 0..b {
                    value = value << 1 | self.g.has_edge(self.placed[a], self.placed[b]) as u64;
                }
                prefixes.push(value);
            }
            if self.best.as_ref().is_none_or(|(c, _)| prefix < *c) {
                self.best = Some((prefix, prefixes));
            }
            return;
        }
        for v in 1..=n {
            if self.used[v - 1] {
                continue;
            }
            let mut next = prefix;
            for &u in &self.placed {
                next = next << 1 | self.g.has_edge(u, v) as u64;
            }
            if let Some((_, prefixes)) = &self.best {
                if next > prefixes[depth] {
                    continue;
                }
            }
            self.used[v - 1] = true;
            self.placed.push(v);
            self.run(next, depth + 1);
            self.placed.pop();
            self.used[v - 1] = false;
        }
    }
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, sorted by canonical code.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::EmptyVertexSet);
    }
    if n > ENUMERATION_LIMIT {
        return Err(Error::LimitExceeded {
            what: "graph enumeration",
            limit: ENUMERATION_LIMIT,
            got: n,
        });
    }
    // Grow isomorphism classes one edge at a time; every class with m + 1
    // edges arises from some class with m edges.
    let mut level: BTreeSet<u64> = BTreeSet::from([0]);
    let mut all: BTreeSet<u64> = level.clone();
    while !level.is_empty() {
        let mut next = BTreeSet::new();
        for &code in &level {
            let g = CanonicalForm { n, code }.to_graph();
            for b in 2..=n {
                for a in 1..b {
                    if g.has_edge(a, b) {
                        continue;
                    }
                    let h = Graph::new(n, g.edges().iter().copied().chain([(a, b)]))?;
                    next.insert(canonical_form(&h)?.code);
                }
            }
        }
        all.extend(next.iter().copied());
        level = next;
    }
    Ok(all
        .into_iter()
        .map(|code| CanonicalForm { n, code }.to_graph())
        .filter(Graph::is_connected)
        .collect())
}
