//! Labeled simple graphs on `[n] = {1, ..., n}`.
//!
//! Vertices are 1-indexed throughout the public API.

mod admissible;
mod canonical;

pub use admissible::{admissible_paths, all_admissible_paths, AdmissiblePath};
pub use canonical::{
    canonical_form, enumerate_connected_graphs, labeled_code, CanonicalForm, ENUMERATION_LIMIT,
};

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest vertex count accepted by [`Graph::find_closed_labeling`].
pub const CLOSED_LABELING_LIMIT: usize = 9;

/// A simple undirected graph on the vertex set `[n]`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<bool>>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(raw: GraphJson) -> Result<Self> {
        Graph::new(raw.n, raw.edges.into_iter().map(|[a, b]| (a, b)))
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        GraphJson {
            n: g.n,
            edges: g.edges.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

impl Graph {
    /// Builds a graph, normalizing every edge to `i < j` and dropping duplicates.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            set.insert((a.min(b), a.max(b)));
        }
        let mut adj = vec![vec![false; n]; n];
        for &(a, b) in &set {
            adj[a - 1][b - 1] = true;
            adj[b - 1][a - 1] = true;
        }
        Ok(Graph {
            n,
            edges: set.into_iter().collect(),
            adj,
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serializes")
    }

    /// The path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Result<Self> {
        Graph::new(n, (1..n).map(|i| (i, i + 1)))
    }

    pub fn complete(n: usize) -> Result<Self> {
        Graph::new(n, (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!("cycle needs n >= 3, got {n}")));
        }
        Graph::new(n, (1..n).map(|i| (i, i + 1)).chain([(1, n)]))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges as `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && (1..=self.n).contains(&a) && (1..=self.n).contains(&b) && self.adj[a - 1][b - 1]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v - 1]
            .iter()
            .enumerate()
            .filter(|(_, &e)| e)
            .map(|(u, _)| u + 1)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].iter().filter(|&&e| e).count()
    }

    /// Connected components, each as a sorted vertex list; ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 1..=self.n {
            if seen[start - 1] {
                continue;
            }
            seen[start - 1] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for u in self.neighbors(v) {
                    if !seen[u - 1] {
                        seen[u - 1] = true;
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// True when the graph is a path up to relabeling.
    pub fn is_path_graph(&self) -> bool {
        if self.n == 1 {
            return true;
        }
        self.is_connected()
            && self.edges.len() == self.n - 1
            && (1..=self.n).all(|v| self.degree(v) <= 2)
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * (self.n - 1) / 2
    }

    /// Closedness with respect to the current labeling: for edges `{i,j}`,
    /// `{k,l}` with `i<j`, `k<l`, `i = k` forces `{j,l}` and `j = l` forces `{i,k}`.
    pub fn is_closed_with_labeling(&self) -> bool {
        for (a, &(i, j)) in self.edges.iter().enumerate() {
            for &(k, l) in &self.edges[a + 1..] {
                if i == k && !self.has_edge(j, l) {
                    return false;
                }
                if j == l && !self.has_edge(i, k) {
                    return false;
                }
            }
        }
        true
    }

    /// Searches for a relabeling under which the graph is closed.
    ///
    /// The result `sigma` maps vertex `v` to label `sigma[v - 1]`.
    pub fn find_closed_labeling(&self) -> Result<Option<Vec<usize>>> {
        self.find_closed_labeling_with_limit(CLOSED_LABELING_LIMIT)
    }

    pub fn find_closed_labeling_with_limit(&self, limit: usize) -> Result<Option<Vec<usize>>> {
        if self.n > limit {
            return Err(Error::LimitExceeded {
                what: "closed labeling search",
                limit,
                got: self.n,
            });
        }
        // Labels are handed out in increasing order. A labeling is closed iff
        // every vertex has a clique of lower-labeled neighbours and a clique of
        // higher-labeled neighbours, and both conditions can be checked as soon
        // as the later endpoint of each pair receives its label.
        let mut order = Vec::with_capacity(self.n);
        let mut label = vec![0usize; self.n];
        if self.closed_search(&mut order, &mut label) {
            Ok(Some(label))
        } else {
            Ok(None)
        }
    }

    fn closed_search(&self, order: &mut Vec<usize>, label: &mut [usize]) -> bool {
        if order.len() == self.n {
            return true;
        }
        for v in 1..=self.n {
            if label[v - 1] != 0 || !self.extends_closed(order, label, v) {
                continue;
            }
            order.push(v);
            label[v - 1] = order.len();
            if self.closed_search(order, label) {
                return true;
            }
            label[v - 1] = 0;
            order.pop();
        }
        false
    }

    fn extends_closed(&self, order: &[usize], label: &[usize], v: usize) -> bool {
        let lower: Vec<usize> = order.iter().copied().filter(|&u| self.has_edge(u, v)).collect();
        for (a, &u) in lower.iter().enumerate() {
            for &w in &lower[a + 1..] {
                if !self.has_edge(u, w) {
                    return false;
                }
            }
            // v joins the higher neighbourhood of u
            let higher_of_u = order
                .iter()
                .filter(|&&w| label[w - 1] > label[u - 1] && self.has_edge(u, w));
            for &w in higher_of_u {
                if !self.has_edge(v, w) {
                    return false;
                }
            }
        }
        true
    }

    /// Applies `sigma` (vertex `v` becomes `sigma[v - 1]`).
    pub fn relabel(&self, sigma: &[usize]) -> Result<Graph> {
        if sigma.len() != self.n {
            return Err(Error::InvalidArgument(format!(
                "permutation has length {}, expected {}",
                sigma.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &s in sigma {
            if s == 0 || s > self.n || seen[s - 1] {
                return Err(Error::InvalidArgument(format!("{sigma:?} is not a permutation")));
            }
            seen[s - 1] = true;
        }
        Graph::new(self.n, self.edges.iter().map(|&(a, b)| (sigma[a - 1], sigma[b - 1])))
    }

    /// Disjoint union with `other`, whose vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        Graph::new(
            self.n + other.n,
            self.edges
                .iter()
                .copied()
                .chain(other.edges.iter().map(|&(a, b)| (a + shift, b + shift))),
        )
        .expect("shifted edges stay in range")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}
