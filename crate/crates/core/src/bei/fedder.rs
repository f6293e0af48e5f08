//! Fedder-criterion witnesses `f_{1,...,n} = prod f_{v,v+1}^(p-1)` and the
//! membership checks behind them.

use serde::Serialize;

use super::{bei_generators, edge_binomial};
use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};
use crate::graph::Graph;
use crate::poly::{
    buchberger, colon_memberships, frobenius_power, normal_form, not_in_bracket_m, IdealBasis,
    PolyRing, Polynomial,
};

/// `prod_k f_{seq[k], seq[k+1]}^exponent`, with `f_ji = -f_ij`.
pub fn witness_product<F: Field>(ring: &PolyRing<F>, seq: &[usize], exponent: u32) -> Result<Polynomial<F>> {
    let mut acc = ring.one();
    for w in seq.windows(2) {
        acc = &acc * &edge_binomial(ring, w[0], w[1])?.pow(exponent);
    }
    Ok(acc)
}

/// `f_{1,2,...,n} = prod_{v<n} f_{v,v+1}^(p-1)` over `F_p`. Depends only on `n` and `p`.
pub fn fedder_witness(n: usize, p: u64) -> Result<Polynomial<PrimeField>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("witness needs n >= 2, got {n}")));
    }
    let ring = PolyRing::new(n, PrimeField::new(p)?)?;
    let seq: Vec<usize> = (1..=n).collect();
    witness_product(&ring, &seq, (p - 1) as u32)
}

/// Reduced Gröbner basis of the bracket power `J_G^[q]`.
pub fn bracket_power_groebner(ring: &PolyRing<PrimeField>, g: &Graph, q: u64) -> Result<IdealBasis<PrimeField>> {
    Ok(buchberger(&frobenius_power(&bei_generators(ring, g)?, q)?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeMembership {
    pub edge: (usize, usize),
    /// Whether `witness * f_edge` lies in `J_G^[q]`.
    pub holds: bool,
}

/// Evidence that `witness` lies in `(J_G^[q] : J_G)` but not in `m^[q]`.
#[derive(Debug, Clone)]
pub struct FedderCertificate {
    pub graph: Graph,
    pub p: u64,
    pub e: u32,
    pub q: u64,
    pub witness: Polynomial<PrimeField>,
    pub witness_degree: u32,
    /// `2 (n - 1) (q - 1)`.
    pub degree_bound: u64,
    pub not_in_m_bracket: bool,
    pub memberships: Vec<EdgeMembership>,
    pub closed_labeling: bool,
    pub complete: bool,
    /// Computed outside the closed connected hypothesis.
    pub forced: bool,
}

#[derive(Serialize)]
struct CertificateJson<'a> {
    graph: &'a Graph,
    p: u64,
    e: u32,
    q: u64,
    witness: String,
    witness_degree: u32,
    degree_bound: u64,
    not_in_m_bracket: bool,
    memberships: &'a [EdgeMembership],
    closed_labeling: bool,
    complete: bool,
    forced: bool,
    valid: bool,
}

impl FedderCertificate {
    pub fn in_colon(&self) -> bool {
        self.memberships.iter().all(|m| m.holds)
    }

    pub fn is_valid(&self) -> bool {
        self.not_in_m_bracket && self.in_colon()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(CertificateJson {
            graph: &self.graph,
            p: self.p,
            e: self.e,
            q: self.q,
            witness: self.witness.to_string(),
            witness_degree: self.witness_degree,
            degree_bound: self.degree_bound,
            not_in_m_bracket: self.not_in_m_bracket,
            memberships: &self.memberships,
            closed_labeling: self.closed_labeling,
            complete: self.complete,
            forced: self.forced,
            valid: self.is_valid(),
        })
        .expect("certificate serializes")
    }
}

fn closedness_violation(g: &Graph) -> Option<String> {
    let edges = g.edges();
    for (a, &(i, j)) in edges.iter().enumerate() {
        for &(k, l) in &edges[a + 1..] {
            if i == k && !g.has_edge(j, l) {
                return Some(format!("edges {{{i},{j}}} and {{{k},{l}}} require {{{j},{l}}}"));
            }
            if j == l && !g.has_edge(i, k) {
                return Some(format!("edges {{{i},{j}}} and {{{k},{l}}} require {{{i},{k}}}"));
            }
        }
    }
    None
}

/// Fedder check at `q = p`.
pub fn fedder_check(g: &Graph, p: u64, force: bool) -> Result<FedderCertificate> {
    frobenius_witness_check(g, p, 1, force)
}

/// Checks `w^(q-1)` with `w = prod f_{v,v+1}` and `q = p^e` against
/// `(J_G^[q] : J_G) \ m^[q]`.
///
/// Refuses disconnected graphs and non-closed labelings unless `force` is set.
pub fn frobenius_witness_check(g: &Graph, p: u64, e: u32, force: bool) -> Result<FedderCertificate> {
    let field = PrimeField::new(p)?;
    let n = g.n();
    if n < 2 {
        return Err(Error::InvalidArgument(format!("witness needs n >= 2, got {n}")));
    }
    if e == 0 {
        return Err(Error::InvalidArgument("Frobenius exponent must be >= 1".into()));
    }
    let q = p
        .checked_pow(e)
        .filter(|&q| q <= u32::MAX as u64)
        .ok_or(Error::LimitExceeded { what: "Frobenius power", limit: u32::MAX as usize, got: e as usize })?;
    let violation = closedness_violation(g);
    let connected = g.is_connected();
    if !force {
        if !connected {
            return Err(Error::HypothesisFailed("graph is not connected".into()));
        }
        if let Some(why) = &violation {
            return Err(Error::HypothesisFailed(format!("labeling is not closed: {why}")));
        }
    }
    let ring = PolyRing::new(n, field)?;
    let seq: Vec<usize> = (1..=n).collect();
    let witness = witness_product(&ring, &seq, (q - 1) as u32)?;
    let gens = bei_generators(&ring, g)?;
    let bracket = buchberger(&frobenius_power(&gens, q)?);
    let memberships = colon_memberships(&witness, &gens, &bracket)?
        .into_iter()
        .zip(g.edges())
        .map(|(holds, &edge)| EdgeMembership { edge, holds })
        .collect();
    Ok(FedderCertificate {
        graph: g.clone(),
        p,
        e,
        q,
        witness_degree: witness.total_degree().unwrap_or(0),
        not_in_m_bracket: not_in_bracket_m(&witness, q),
        witness,
        degree_bound: 2 * (n as u64 - 1) * (q - 1),
        memberships,
        closed_labeling: violation.is_none(),
        complete: g.is_complete(),
        forced: force && (violation.is_some() || !connected),
    })
}

/// Whether swapping the adjacent entries `seq[pos], seq[pos + 1]` (an edge
/// of `g`) leaves `f_seq` unchanged modulo `J_G^[p]`.
pub fn swap_congruence_check(g: &Graph, seq: &[usize], pos: usize, p: u64) -> Result<bool> {
    let n = g.n();
    if pos == 0 || pos + 2 >= seq.len() {
        return Err(Error::InvalidArgument(format!(
            "swap position {pos} needs a neighbour on each side in a sequence of length {}",
            seq.len()
        )));
    }
    let mut sorted = seq.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidArgument(format!("{seq:?} repeats a vertex")));
    }
    if let Some(&v) = seq.iter().find(|&&v| v == 0 || v > n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    let (a, b) = (seq[pos], seq[pos + 1]);
    if !g.has_edge(a, b) {
        return Err(Error::NotAnEdge(a, b));
    }
    let ring = PolyRing::new(n, PrimeField::new(p)?)?;
    let mut swapped = seq.to_vec();
    swapped.swap(pos, pos + 1);
    let lhs = witness_product(&ring, seq, (p - 1) as u32)?;
    let rhs = witness_product(&ring, &swapped, (p - 1) as u32)?;
    let bracket = bracket_power_groebner(&ring, g, p)?;
    Ok(normal_form(&(&lhs - &rhs), &bracket)?.is_zero())
}
