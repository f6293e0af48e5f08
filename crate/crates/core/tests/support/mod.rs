//! Independent brute-force oracles shared by the integration tests and the
//! acceptance runner. Nothing here calls the search or pruning code under test.

#![allow(dead_code)]

use std::collections::BTreeSet;

use binedge::field::Field;
use binedge::graph::Graph;
use binedge::sr::{BettiEntry, BettiTable};

/// All permutations of `1..=n`, as `sigma[v - 1]`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..=p.len() {
            let mut q = p.clone();
            q.insert(k, n);
            out.push(q);
        }
    }
    out
}

/// Closedness of the current labeling, straight from the edge-pair condition.
pub fn literally_closed(g: &Graph) -> bool {
    let e = g.edges();
    for &(i, j) in e {
        for &(k, l) in e {
            if (i, j) == (k, l) {
                continue;
            }
            if i == k && !g.has_edge(j, l) {
                return false;
            }
            if j == l && !g.has_edge(i, k) {
                return false;
            }
        }
    }
    true
}

pub fn closed_under_some_labeling(g: &Graph) -> bool {
    permutations(g.n()).iter().any(|s| literally_closed(&g.relabel(s).unwrap()))
}

/// Upper-triangle adjacency code, column by column, first bit most significant.
fn code(n: usize, adj: &dyn Fn(usize, usize) -> bool) -> u64 {
    let mut c = 0u64;
    for b in 2..=n {
        for a in 1..b {
            c = c << 1 | adj(a, b) as u64;
        }
    }
    c
}

/// Minimum code over all `n!` relabelings.
pub fn brute_canonical_code(g: &Graph) -> u64 {
    permutations(g.n())
        .iter()
        .map(|s| {
            // s maps old vertex to new label; invert for lookups
            let mut inv = vec![0; g.n()];
            for (v, &l) in s.iter().enumerate() {
                inv[l - 1] = v + 1;
            }
            code(g.n(), &|a, b| g.has_edge(inv[a - 1], inv[b - 1]))
        })
        .min()
        .unwrap()
}

/// Isomorphism classes of connected graphs on `n` vertices, by brute force over all edge sets.
pub fn brute_connected_classes(n: usize) -> BTreeSet<u64> {
    let pairs: Vec<(usize, usize)> = (2..=n).flat_map(|b| (1..b).map(move |a| (a, b))).collect();
    let mut classes = BTreeSet::new();
    for mask in 0u64..1 << pairs.len() {
        let edges = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
        let g = Graph::new(n, edges).unwrap();
        if g.is_connected() {
            classes.insert(brute_canonical_code(&g));
        }
    }
    classes
}

/// Admissible paths from `i` to `j`, filtering every simple path by the definition.
pub fn brute_admissible_paths(g: &Graph, i: usize, j: usize) -> Vec<Vec<usize>> {
    let mut all = Vec::new();
    let mut stack = vec![i];
    simple_paths(g, j, &mut stack, &mut all);
    all.retain(|p| {
        let interior = &p[1..p.len() - 1];
        if interior.iter().any(|&v| v > i && v < j) {
            return false;
        }
        // no proper sub-subsequence of the interior gives a path
        let r = interior.len();
        (0u64..(1 << r) - 1).all(|sub| {
            let mut seq = vec![i];
            seq.extend((0..r).filter(|k| sub >> k & 1 == 1).map(|k| interior[k]));
            seq.push(j);
            !seq.windows(2).all(|w| g.has_edge(w[0], w[1]))
        })
    });
    all.sort();
    all
}

fn simple_paths(g: &Graph, target: usize, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let last = *stack.last().unwrap();
    if last == target {
        out.push(stack.clone());
        return;
    }
    for v in 1..=g.n() {
        if g.has_edge(last, v) && !stack.contains(&v) {
            stack.push(v);
            simple_paths(g, target, stack, out);
            stack.pop();
        }
    }
}

/// Dense Gaussian elimination.
pub fn dense_rank<F: Field>(field: &F, mut m: Vec<Vec<F::Elem>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&k| !field.is_zero(&m[k][c])) else { continue };
        m.swap(r, p);
        let inv = field.inv(&m[r][c]).unwrap();
        for k in 0..rows {
            if k != r && !field.is_zero(&m[k][c]) {
                let factor = field.mul(&m[k][c], &inv);
                for t in 0..cols {
                    let v = field.sub(&m[k][t], &field.mul(&factor, &m[r][t]));
                    m[k][t] = v;
                }
            }
        }
        r += 1;
    }
    r
}

/// Faces of the restriction to `sigma` of the complex with the given nonfaces,
/// grouped by size (index 0 is the empty face).
pub fn restricted_faces(sigma: u64, nonfaces: &[u64]) -> Vec<Vec<u64>> {
    let size = sigma.count_ones() as usize;
    let mut by_size = vec![Vec::new(); size + 1];
    for f in 0u64..=sigma {
        if f & !sigma == 0 && !nonfaces.iter().any(|&s| s & f == s) {
            by_size[f.count_ones() as usize].push(f);
        }
    }
    by_size
}

/// Reduced homology ranks of the full augmented chain complex, index `d + 1`.
pub fn brute_reduced_homology<F: Field>(field: &F, sigma: u64, nonfaces: &[u64]) -> Vec<u64> {
    let faces = restricted_faces(sigma, nonfaces);
    let top = faces.len();
    let mut ranks = vec![0usize; top + 1];
    for k in 1..top {
        let (rows, cols) = (&faces[k], &faces[k - 1]);
        let matrix: Vec<Vec<F::Elem>> = rows
            .iter()
            .map(|&f| {
                let verts: Vec<u32> = (0..64).filter(|b| f >> b & 1 == 1).collect();
                cols.iter()
                    .map(|&c| match verts.iter().position(|&b| f & !(1u64 << b) == c) {
                        Some(t) => field.from_i64(if t % 2 == 0 { 1 } else { -1 }),
                        None => field.zero(),
                    })
                    .collect()
            })
            .collect();
        ranks[k] = dense_rank(field, matrix);
    }
    (0..top).map(|k| (faces[k].len() - ranks[k] - ranks[k + 1]) as u64).collect()
}

/// Hochster's formula over every subset of the variables.
pub fn brute_betti<F: Field>(field: &F, gens: &[u64], nvars: usize) -> BettiTable {
    let mut entries = Vec::new();
    for sigma in 0u64..1 << nvars {
        let h = brute_reduced_homology(field, sigma, gens);
        let size = sigma.count_ones() as usize;
        for (idx, &beta) in h.iter().enumerate() {
            if idx <= size && beta > 0 {
                entries.push(BettiEntry { i: size - idx, j: size, beta });
            }
        }
    }
    BettiTable::from_entries(entries)
}

/// `sum (-1)^d dim C_d` over the augmented complex, by face counting.
pub fn euler_by_faces(sigma: u64, nonfaces: &[u64]) -> i64 {
    restricted_faces(sigma, nonfaces)
        .iter()
        .enumerate()
        .map(|(k, fs)| if k % 2 == 1 { fs.len() as i64 } else { -(fs.len() as i64) })
        .sum()
}

pub fn f2() -> binedge::field::PrimeField {
    binedge::field::PrimeField::new(2).unwrap()
}
