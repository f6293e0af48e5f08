use super::Graph;
use crate::error::{Error, Result};

/// A path `i = i_0, i_1, ..., i_r = j` with `i < j` whose interior avoids
/// `[i, j]` and which admits no shortcut through a proper subset of its
/// interior.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissiblePath {
    vertices: Vec<usize>,
}

impl AdmissiblePath {
    /// Wraps a vertex sequence after checking it against `g`.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        let path = AdmissiblePath { vertices };
        if path.is_admissible_in(g) {
            Ok(path)
        } else {
            Err(Error::InvalidArgument(format!(
                "{:?} is not an admissible path",
                path.vertices
            )))
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().expect("paths are nonempty")
    }

    pub fn interior(&self) -> &[usize] {
        &self.vertices[1..self.vertices.len() - 1]
    }

    /// Re-checks the three defining conditions.
    pub fn is_admissible_in(&self, g: &Graph) -> bool {
        let v = &self.vertices;
        if v.len() < 2 || v[0] >= v[v.len() - 1] {
            return false;
        }
        if !v.windows(2).all(|w| g.has_edge(w[0], w[1])) {
            return false;
        }
        let mut sorted = v.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        let (i, j) = (self.start(), self.end());
        if !self.interior().iter().all(|&k| k < i || k > j) {
            return false;
        }
        !has_shortcut(g, i, j, self.interior())
    }
}

/// Whether some proper subsequence of `interior` (kept in order) still walks
/// from `i` to `j` along edges of `g`.
fn has_shortcut(g: &Graph, i: usize, j: usize, interior: &[usize]) -> bool {
    let r = interior.len();
    let full = (1u64 << r) - 1;
    (0..full).any(|mask| {
        let mut prev = i;
        for (k, &v) in interior.iter().enumerate() {
            if mask & (1 << k) != 0 {
                if !g.has_edge(prev, v) {
                    return false;
                }
                prev = v;
            }
        }
        g.has_edge(prev, j)
    })
}

/// All admissible paths from `i` to `j`, in lexicographic order of vertex
/// sequences.
pub fn admissible_paths(g: &Graph, i: usize, j: usize) -> Result<Vec<AdmissiblePath>> {
    if i >= j {
        return Err(Error::InvalidArgument(format!(
            "admissible paths need i < j, got ({i}, {j})"
        )));
    }
    for v in [i, j] {
        if v == 0 || v > g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
    }
    let mut out = Vec::new();
    let mut used = vec![false; g.n()];
    used[i - 1] = true;
    let mut stack = vec![i];
    extend(g, i, j, &mut stack, &mut used, &mut out);
    out.sort();
    Ok(out)
}

fn extend(
    g: &Graph,
    i: usize,
    j: usize,
    stack: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<AdmissiblePath>,
) {
    let last = *stack.last().unwrap();
    for next in g.neighbors(last) {
        if next == j {
            if !has_shortcut(g, i, j, &stack[1..]) {
                let mut vertices = stack.clone();
                vertices.push(j);
                out.push(AdmissiblePath { vertices });
            }
        } else if !used[next - 1] && (next < i || next > j) {
            used[next - 1] = true;
            stack.push(next);
            extend(g, i, j, stack, used, out);
            stack.pop();
            used[next - 1] = false;
        }
    }
}

/// Admissible paths for every pair `i < j`, ordered by `(i, j)` then by path.
pub fn all_admissible_paths(g: &Graph) -> Vec<AdmissiblePath> {
    let n = g.n();
    (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .flat_map(|(i, j)| admissible_paths(g, i, j).expect("valid pair"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seqs(paths: &[AdmissiblePath]) -> Vec<Vec<usize>> {
        paths.iter().map(|p| p.vertices().to_vec()).collect()
    }

    #[test]
    fn path_graph_has_no_long_paths() {
        let g = Graph::path(3).unwrap();
        assert!(admissible_paths(&g, 1, 3).unwrap().is_empty());
        assert_eq!(seqs(&admissible_paths(&g, 1, 2).unwrap()), vec![vec![1, 2]]);
    }

    #[test]
    fn detour_through_larger_vertex() {
        let g = Graph::new(3, [(1, 3), (2, 3)]).unwrap();
        assert_eq!(seqs(&admissible_paths(&g, 1, 2).unwrap()), vec![vec![1, 3, 2]]);
    }

    #[test]
    fn triangle_keeps_only_the_edge() {
        let g = Graph::complete(3).unwrap();
        assert_eq!(seqs(&admissible_paths(&g, 1, 2).unwrap()), vec![vec![1, 2]]);
    }

    #[test]
    fn bad_endpoints() {
        let g = Graph::path(3).unwrap();
        assert!(admissible_paths(&g, 2, 2).is_err());
        assert!(admissible_paths(&g, 3, 1).is_err());
        assert!(admissible_paths(&g, 1, 4).is_err());
    }

    #[test]
    fn validation_rejects_shortcuts() {
        let g = Graph::complete(4).unwrap();
        assert!(AdmissiblePath::new(&g, vec![2, 4, 1, 3]).is_err());
        assert!(AdmissiblePath::new(&g, vec![2, 3]).is_ok());
        // interior vertex inside [i, j]
        let p = Graph::path(3).unwrap();
        assert!(AdmissiblePath::new(&p, vec![1, 2, 3]).is_err());
    }
}
