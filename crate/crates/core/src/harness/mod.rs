//! Batch classification of connected graphs up to isomorphism, with the
//! regularity, dimension and F-pure threshold bounds checked on every row.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use crate::bei::{fedder_check, initial_ideal_mingens};
use crate::error::{Error, Result};
use crate::field::{FieldChoice, PrimeField, Rationals};
use crate::graph::{canonical_form, enumerate_connected_graphs, Graph, ENUMERATION_LIMIT};
use crate::poly::Monomial;
use crate::sr::{betti_table, fpt_squarefree, homological_summary, krull_dim, stanley_reisner, BettiTable};

pub const DEFAULT_PRIMES: [u64; 2] = [2, 3];
pub const ALLOWED_PRIMES: [u64; 3] = [2, 3, 5];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub n_min: usize,
    pub n_max: usize,
    /// Primes for Fedder certificates, a subset of `ALLOWED_PRIMES`.
    pub primes: Vec<u64>,
    /// Fedder certificates are skipped above this vertex count.
    pub fedder_max_n: usize,
    pub field: FieldChoice,
    /// Worker threads; 0 picks the rayon default.
    pub jobs: usize,
    pub out_dir: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            n_min: 1,
            n_max: 6,
            primes: DEFAULT_PRIMES.to_vec(),
            fedder_max_n: 6,
            field: FieldChoice::Rationals,
            jobs: 0,
            out_dir: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_min == 0 || self.n_min > self.n_max {
            return Err(Error::InvalidArgument(format!("bad n range {}..={}", self.n_min, self.n_max)));
        }
        if self.n_max > ENUMERATION_LIMIT {
            return Err(Error::LimitExceeded { what: "graph enumeration", limit: ENUMERATION_LIMIT, got: self.n_max });
        }
        if let Some(p) = self.primes.iter().find(|p| !ALLOWED_PRIMES.contains(p)) {
            return Err(Error::InvalidArgument(format!("prime {p} not in {ALLOWED_PRIMES:?}")));
        }
        Ok(())
    }

    /// The field compared against `field`: F_2 for Q, otherwise Q.
    pub fn alt_field(&self) -> FieldChoice {
        match self.field {
            FieldChoice::Rationals => FieldChoice::Prime(PrimeField::new(2).expect("2 is prime")),
            FieldChoice::Prime(_) => FieldChoice::Rationals,
        }
    }
}

pub fn betti_table_over(mingens: &[Monomial], nvars: usize, field: FieldChoice) -> Result<BettiTable> {
    match field {
        FieldChoice::Rationals => betti_table(mingens, nvars, &Rationals),
        FieldChoice::Prime(f) => betti_table(mingens, nvars, &f),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundChecks {
    pub reg_le_n_minus_1: bool,
    /// Vacuous for paths.
    pub nonpath_reg_le_n_minus_2: bool,
    pub dim_ge_n_plus_1: bool,
    pub fpt_eq_2: bool,
    /// Vacuous for non-paths: `pd = n - 1` and type 1.
    pub path_complete_intersection: bool,
    /// Vacuous unless closed, non-complete and certificates were computed.
    pub fedder_valid: bool,
}

impl BoundChecks {
    pub fn all(&self) -> bool {
        self.reg_le_n_minus_1
            && self.nonpath_reg_le_n_minus_2
            && self.dim_ge_n_plus_1
            && self.fpt_eq_2
            && self.path_complete_intersection
            && self.fedder_valid
    }

    pub fn failed(&self) -> Vec<&'static str> {
        [
            (self.reg_le_n_minus_1, "reg_le_n_minus_1"),
            (self.nonpath_reg_le_n_minus_2, "nonpath_reg_le_n_minus_2"),
            (self.dim_ge_n_plus_1, "dim_ge_n_plus_1"),
            (self.fpt_eq_2, "fpt_eq_2"),
            (self.path_complete_intersection, "path_complete_intersection"),
            (self.fedder_valid, "fedder_valid"),
        ]
        .into_iter()
        .filter(|(ok, _)| !ok)
        .map(|(_, name)| name)
        .collect()
    }
}

/// One isomorphism class. Homological columns describe the initial ideal
/// of the representative under its closed labeling when it has one, and
/// under the canonical labeling otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationRow {
    pub id: String,
    pub n: usize,
    pub edges: usize,
    pub is_path: bool,
    pub is_closed: bool,
    /// A closed relabeling of the representative, `sigma[v - 1]` being the label of `v`.
    pub closed_labeling: Option<Vec<usize>>,
    pub initial_gens: usize,
    pub field: String,
    pub reg: usize,
    pub pd: usize,
    pub initial_type: u64,
    pub krull_dim: usize,
    pub fpt: usize,
    pub absent: Vec<String>,
    pub alt_field: String,
    pub alt_reg: usize,
    pub alt_pd: usize,
    pub alt_initial_type: u64,
    pub fields_agree: bool,
    /// Fedder certificate validity per prime, for closed graphs.
    pub fedder: BTreeMap<u64, bool>,
    pub checks: BoundChecks,
    pub bounds_ok: bool,
    #[serde(skip)]
    pub graph: Graph,
}

pub fn classify_graph(g: &Graph, config: &RunConfig) -> Result<ClassificationRow> {
    let n = g.n();
    let nvars = 2 * n;
    let id = canonical_form(g)?.hex_id();
    let closed_labeling = g.find_closed_labeling()?;
    let labeled = match &closed_labeling {
        Some(sigma) => g.relabel(sigma)?,
        None => g.clone(),
    };
    let mingens = initial_ideal_mingens(&labeled)?;
    let table = betti_table_over(&mingens, nvars, config.field)?;
    let alt_field = config.alt_field();
    let alt = betti_table_over(&mingens, nvars, alt_field)?;
    let dim = krull_dim(&stanley_reisner(&mingens, nvars)?);
    let fpt = fpt_squarefree(&mingens, nvars)?;
    let (pd, ty) = homological_summary(&table);
    let (alt_pd, alt_ty) = homological_summary(&alt);
    let is_path = g.is_path_graph();
    let mut fedder = BTreeMap::new();
    if closed_labeling.is_some() && n >= 2 && n <= config.fedder_max_n {
        for &p in &config.primes {
            fedder.insert(p, fedder_check(&labeled, p, false)?.is_valid());
        }
    }
    let both = [&table, &alt];
    let x_n_y_1 = [n - 1, n];
    let checks = BoundChecks {
        reg_le_n_minus_1: both.iter().all(|t| t.regularity() < n),
        nonpath_reg_le_n_minus_2: is_path || both.iter().all(|t| t.regularity() + 2 <= n),
        dim_ge_n_plus_1: dim > n,
        fpt_eq_2: fpt.fpt == 2 && fpt.absent == x_n_y_1,
        path_complete_intersection: !is_path
            || both.iter().all(|t| homological_summary(t) == (n - 1, 1)),
        fedder_valid: g.is_complete() || fedder.values().all(|&v| v),
    };
    Ok(ClassificationRow {
        id,
        n,
        edges: g.edge_count(),
        is_path,
        is_closed: closed_labeling.is_some(),
        closed_labeling,
        initial_gens: mingens.len(),
        field: config.field.name(),
        reg: table.regularity(),
        pd,
        initial_type: ty,
        krull_dim: dim,
        fpt: fpt.fpt,
        absent: fpt.absent_names(n),
        alt_field: alt_field.name(),
        alt_reg: alt.regularity(),
        alt_pd,
        alt_initial_type: alt_ty,
        fields_agree: table == alt,
        fedder,
        bounds_ok: checks.all(),
        checks,
        graph: g.clone(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub config: RunConfig,
    /// Sorted by `(n, id)`.
    pub rows: Vec<ClassificationRow>,
}

impl Report {
    pub fn violations(&self) -> impl Iterator<Item = &ClassificationRow> {
        self.rows.iter().filter(|r| !r.bounds_ok)
    }

    pub fn all_bounds_hold(&self) -> bool {
        self.violations().next().is_none()
    }

    /// Rows whose representative is a path, keyed by `n`.
    pub fn paths_by_n(&self) -> BTreeMap<usize, Vec<&ClassificationRow>> {
        let mut out: BTreeMap<usize, Vec<&ClassificationRow>> = BTreeMap::new();
        for r in self.rows.iter().filter(|r| r.is_path) {
            out.entry(r.n).or_default().push(r);
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let primes = &self.config.primes;
        let mut header = vec![
            "id", "n", "edges", "is_path", "is_closed", "closed_labeling", "initial_gens", "field", "reg", "pd",
            "initial_type", "krull_dim", "fpt", "absent", "alt_field", "alt_reg", "alt_pd", "alt_initial_type",
            "fields_agree",
        ]
        .into_iter()
        .map(String::from)
        .collect::<Vec<_>>();
        header.extend(primes.iter().map(|p| format!("fedder_p{p}")));
        header.extend(["bounds_ok".to_string(), "failed_checks".to_string()]);
        let mut out = header.join(",");
        out.push('\n');
        for r in &self.rows {
            let labeling = r
                .closed_labeling
                .as_ref()
                .map(|s| s.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
                .unwrap_or_default();
            let mut cells = vec![
                r.id.clone(),
                r.n.to_string(),
                r.edges.to_string(),
                r.is_path.to_string(),
                r.is_closed.to_string(),
                labeling,
                r.initial_gens.to_string(),
                r.field.clone(),
                r.reg.to_string(),
                r.pd.to_string(),
                r.initial_type.to_string(),
                r.krull_dim.to_string(),
                r.fpt.to_string(),
                r.absent.join(" "),
                r.alt_field.clone(),
                r.alt_reg.to_string(),
                r.alt_pd.to_string(),
                r.alt_initial_type.to_string(),
                r.fields_agree.to_string(),
            ];
            cells.extend(primes.iter().map(|p| match r.fedder.get(p) {
                Some(true) => "valid".to_string(),
                Some(false) => "invalid".to_string(),
                None => String::new(),
            }));
            cells.push(r.bounds_ok.to_string());
            cells.push(r.checks.failed().join(" "));
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|r| {
                let mut v = serde_json::to_value(r).expect("row serializes");
                v["graph"] = serde_json::from_str(&r.graph.to_json()).expect("graph json");
                v
            })
            .collect();
        let mut text = serde_json::to_string_pretty(&rows).expect("rows serialize");
        text.push('\n');
        text
    }

    /// Writes `classify.csv`, `classify.json`, and one reproducer per
    /// violating graph. Returns the reproducer paths.
    pub fn write(&self, dir: &Path) -> Result<Vec<PathBuf>> {
        let io = |e: std::io::Error| Error::InvalidArgument(format!("{}: {e}", dir.display()));
        fs::create_dir_all(dir).map_err(io)?;
        fs::write(dir.join("classify.csv"), self.to_csv()).map_err(io)?;
        fs::write(dir.join("classify.json"), self.to_json()).map_err(io)?;
        let mut written = Vec::new();
        for r in self.violations() {
            let path = dir.join(format!("violation-n{}-{}.json", r.n, r.id));
            let body = serde_json::json!({
                "id": r.id,
                "graph": serde_json::from_str::<serde_json::Value>(&r.graph.to_json()).expect("graph json"),
                "failed_checks": r.checks.failed(),
                "reg": r.reg,
                "alt_reg": r.alt_reg,
                "krull_dim": r.krull_dim,
                "fpt": r.fpt,
            });
            fs::write(&path, serde_json::to_string_pretty(&body).expect("serializes") + "\n").map_err(io)?;
            written.push(path);
        }
        Ok(written)
    }
}

/// Classifies every connected graph with `n_min <= n <= n_max` up to isomorphism.
pub fn classify(config: &RunConfig) -> Result<Report> {
    config.validate()?;
    let run = || -> Result<Vec<ClassificationRow>> {
        let graphs: Vec<Graph> = (config.n_min..=config.n_max)
            .map(enumerate_connected_graphs)
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        let mut rows = graphs
            .par_iter()
            .map(|g| classify_graph(g, config))
            .collect::<Result<Vec<_>>>()?;
        rows.sort_by(|a, b| (a.n, &a.id).cmp(&(b.n, &b.id)));
        Ok(rows)
    };
    let rows = if config.jobs == 0 {
        run()?
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?
            .install(run)?
    };
    Ok(Report { config: config.clone(), rows })
}
