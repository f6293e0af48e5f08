//! Binomial edge ideals `J_G = (f_ij : {i,j} in E(G))`, `f_ij = x_i y_j - x_j y_i`.

mod fedder;
mod weight;

pub use fedder::{
    bracket_power_groebner, fedder_check, fedder_witness, frobenius_witness_check,
    swap_congruence_check, witness_product, EdgeMembership, FedderCertificate,
};
pub use weight::{find_weight_vector, weight_vector_for, WeightVector};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::graph::{all_admissible_paths, AdmissiblePath, Graph};
use crate::poly::{basis_order, IdealBasis, Monomial, PolyRing, Polynomial};

/// `x_i y_j - x_j y_i`, so that `f_ji = -f_ij`.
pub fn edge_binomial<F: Field>(ring: &PolyRing<F>, i: usize, j: usize) -> Result<Polynomial<F>> {
    if i == j {
        return Err(Error::InvalidArgument(format!("f_{{{i}{j}}} needs i != j")));
    }
    for v in [i, j] {
        if v == 0 || v > ring.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: ring.n() });
        }
    }
    Ok(&(&ring.x(i) * &ring.y(j)) - &(&ring.x(j) * &ring.y(i)))
}

fn check_ring<F: Field>(ring: &PolyRing<F>, g: &Graph) -> Result<()> {
    if ring.n() == g.n() {
        Ok(())
    } else {
        Err(Error::ContextMismatch)
    }
}

/// The edge binomials of `g`, one per edge in edge order.
pub fn bei_generators<F: Field>(ring: &PolyRing<F>, g: &Graph) -> Result<IdealBasis<F>> {
    check_ring(ring, g)?;
    let gens = g
        .edges()
        .iter()
        .map(|&(i, j)| edge_binomial(ring, i, j))
        .collect::<Result<Vec<_>>>()?;
    IdealBasis::new(ring, gens)
}

/// An element `u_pi * f_ij` of the admissible-path Gröbner basis.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerElement<F: Field> {
    pub path: AdmissiblePath,
    pub u_pi: Monomial,
    pub element: Polynomial<F>,
}

impl<F: Field> GroebnerElement<F> {
    /// `u_pi * x_i * y_j`.
    pub fn leading_monomial(&self) -> &Monomial {
        self.element.leading_monomial().expect("nonzero")
    }
}

/// `u_pi = prod_{i_k > j} x_{i_k} * prod_{i_l < i} y_{i_l}` over interior vertices.
pub fn path_monomial(n: usize, path: &AdmissiblePath) -> Monomial {
    let (i, j) = (path.start(), path.end());
    let mut exps = vec![0u32; 2 * n];
    for &v in path.interior() {
        if v > j {
            exps[v - 1] += 1;
        } else if v < i {
            exps[n + v - 1] += 1;
        }
    }
    Monomial::from_exponents(exps)
}

/// `{u_pi f_ij : pi admissible from i to j}` over all pairs `i < j`, sorted
/// like a reduced basis.
pub fn groebner_basis_bei<F: Field>(field: F, g: &Graph) -> Result<Vec<GroebnerElement<F>>> {
    let ring = PolyRing::new(g.n(), field)?;
    let mut out: Vec<GroebnerElement<F>> = Vec::new();
    for path in all_admissible_paths(g) {
        let u_pi = path_monomial(g.n(), &path);
        let f = edge_binomial(&ring, path.start(), path.end())?;
        let element = f.mul_term(&u_pi, &ring.field().one());
        if !out.iter().any(|e| e.element == element) {
            out.push(GroebnerElement { path, u_pi, element });
        }
    }
    out.sort_by(|a, b| basis_order(&a.element, &b.element));
    Ok(out)
}

/// The admissible-path elements as an ideal basis (not marked Gröbner).
pub fn groebner_elements_basis<F: Field>(elements: &[GroebnerElement<F>], ring: &PolyRing<F>) -> Result<IdealBasis<F>> {
    IdealBasis::new(ring, elements.iter().map(|e| e.element.clone()))
}

/// Minimal generators `u_pi x_i y_j` of the lex initial ideal of `J_G`.
pub fn initial_ideal_mingens(g: &Graph) -> Result<Vec<Monomial>> {
    let n = g.n();
    let mut gens: Vec<Monomial> = Vec::new();
    for path in all_admissible_paths(g) {
        let mut exps = path_monomial(n, &path).exponents().to_vec();
        exps[path.start() - 1] += 1;
        exps[n + path.end() - 1] += 1;
        let m = Monomial::from_exponents(exps);
        if !gens.contains(&m) {
            gens.push(m);
        }
    }
    for m in &gens {
        if !m.is_squarefree() {
            return Err(Error::Internal(format!("initial generator {m} is not square-free")));
        }
    }
    for (a, ma) in gens.iter().enumerate() {
        for (b, mb) in gens.iter().enumerate() {
            if a != b && ma.divides(mb) {
                return Err(Error::Internal(format!("initial generator {ma} divides {mb}")));
            }
        }
    }
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    Ok(gens)
}

/// `f_ij f_kl - f_ik f_jl + f_il f_jk`, which vanishes identically.
pub fn plucker<F: Field>(ring: &PolyRing<F>, i: usize, j: usize, k: usize, l: usize) -> Result<Polynomial<F>> {
    if !(i < j && j < k && k < l) || i == 0 {
        return Err(Error::InvalidArgument(format!(
            "Plücker indices must satisfy 1 <= i < j < k < l, got ({i}, {j}, {k}, {l})"
        )));
    }
    let f = |a, b| edge_binomial(ring, a, b);
    let t1 = &f(i, j)? * &f(k, l)?;
    let t2 = &f(i, k)? * &f(j, l)?;
    let t3 = &f(i, l)? * &f(j, k)?;
    Ok(&(&t1 - &t2) + &t3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::poly::buchberger;

    fn strings<F: Field>(els: &[GroebnerElement<F>]) -> Vec<String> {
        els.iter().map(|e| e.element.to_string()).collect()
    }

    #[test]
    fn edge_binomial_sign_convention() {
        let r = PolyRing::new(2, Rationals).unwrap();
        assert_eq!(edge_binomial(&r, 1, 2).unwrap().to_string(), "x1*y2 - x2*y1");
        assert_eq!(edge_binomial(&r, 2, 1).unwrap().to_string(), "-x1*y2 + x2*y1");
        assert!(edge_binomial(&r, 1, 1).is_err());
        assert!(edge_binomial(&r, 1, 3).is_err());
    }

    #[test]
    fn path_basis_is_the_edges() {
        for n in 2..=6 {
            let gb = groebner_basis_bei(Rationals, &Graph::path(n).unwrap()).unwrap();
            assert_eq!(gb.len(), n - 1);
            assert!(gb.iter().all(|e| e.u_pi.is_one() && e.element.total_degree() == Some(2)));
        }
    }

    #[test]
    fn complete_graph_basis_is_the_edges() {
        let gb = groebner_basis_bei(Rationals, &Graph::complete(4).unwrap()).unwrap();
        assert_eq!(gb.len(), 6);
        assert!(gb.iter().all(|e| e.u_pi.is_one()));
    }

    #[test]
    fn relabeled_path_has_a_cubic() {
        let g = Graph::new(3, [(1, 3), (2, 3)]).unwrap();
        let gb = groebner_basis_bei(Rationals, &g).unwrap();
        assert_eq!(strings(&gb), [
            "x1*y3 - x3*y1",
            "x2*y3 - x3*y2",
            "x1*x3*y2 - x2*x3*y1"
        ]);
        let ring = PolyRing::new(3, Rationals).unwrap();
        let oracle = buchberger(&bei_generators(&ring, &g).unwrap());
        assert_eq!(oracle.gens(), groebner_elements_basis(&gb, &ring).unwrap().gens());
    }

    #[test]
    fn initial_generators() {
        let show = |g: &Graph| -> Vec<String> {
            initial_ideal_mingens(g).unwrap().iter().map(|m| m.render()).collect()
        };
        assert_eq!(show(&Graph::path(3).unwrap()), ["x1*y2", "x2*y3"]);
        assert_eq!(show(&Graph::complete(3).unwrap()), ["x1*y2", "x1*y3", "x2*y3"]);
        assert_eq!(show(&Graph::new(3, [(1, 3), (2, 3)]).unwrap()), ["x1*y3", "x2*y3", "x1*x3*y2"]);
        assert!(initial_ideal_mingens(&Graph::new(2, []).unwrap()).unwrap().is_empty());
    }

    #[test]
    fn plucker_vanishes() {
        let r = PolyRing::new(7, Rationals).unwrap();
        assert!(plucker(&r, 1, 2, 3, 4).unwrap().is_zero());
        assert!(plucker(&r, 2, 3, 5, 7).unwrap().is_zero());
        assert!(plucker(&r, 1, 2, 2, 3).is_err());
        assert!(plucker(&r, 1, 2, 3, 8).is_err());
        let f2 = PolyRing::new(4, PrimeField::new(2).unwrap()).unwrap();
        assert!(plucker(&f2, 1, 2, 3, 4).unwrap().is_zero());
    }

    #[test]
    fn ring_size_must_match_graph() {
        let r = PolyRing::new(3, Rationals).unwrap();
        assert_eq!(bei_generators(&r, &Graph::path(4).unwrap()), Err(Error::ContextMismatch));
    }
}
