use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use binedge::bei::{
    bei_generators, fedder_check, find_weight_vector, frobenius_witness_check, groebner_basis_bei,
    groebner_elements_basis, initial_ideal_mingens, plucker,
};
use binedge::field::{Field, FieldChoice, PrimeField, Rationals};
use binedge::graph::Graph;
use binedge::harness::{betti_table_over, classify, RunConfig, DEFAULT_PRIMES};
use binedge::poly::{buchberger, PolyRing};
use binedge::sr::{fpt_squarefree, homological_summary, krull_dim, stanley_reisner};
use binedge::Error;

const EXIT_VIOLATION: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_LIMIT: u8 = 3;

#[derive(Parser)]
#[command(name = "binedge", version, about = "Binomial edge ideals of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArg {
    /// Graph JSON file ({"n": 3, "edges": [[1, 2], [2, 3]]}), or - for stdin
    graph: String,
    /// Print machine-readable JSON
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Admissible-path Gröbner basis
    Gb {
        #[command(flatten)]
        input: GraphArg,
        /// Compare against a Buchberger computation
        #[arg(long)]
        verify: bool,
        /// Coefficient field: q, f2 or fp:<p>
        #[arg(long, default_value = "q")]
        field: FieldChoice,
    },
    /// Minimal generators of the lex initial ideal
    Initial {
        #[command(flatten)]
        input: GraphArg,
    },
    /// Closedness of the given labeling, and a closed relabeling if one exists
    Closed {
        #[command(flatten)]
        input: GraphArg,
    },
    /// Fedder certificate for the path witness
    Fedder {
        #[command(flatten)]
        input: GraphArg,
        /// Characteristic
        #[arg(long, short)]
        p: u64,
        /// Frobenius exponent, q = p^e
        #[arg(long, short, default_value_t = 1)]
        e: u32,
        /// Run even if the labeling is not closed or the graph is disconnected
        #[arg(long)]
        force: bool,
    },
    /// F-pure threshold of the initial ideal
    Fpt {
        #[command(flatten)]
        input: GraphArg,
    },
    /// Graded Betti table of the initial ideal
    Betti {
        #[command(flatten)]
        input: GraphArg,
        #[arg(long, default_value = "q")]
        field: FieldChoice,
    },
    /// Weight vector realizing the lex initial ideal
    Weight {
        #[command(flatten)]
        input: GraphArg,
    },
    /// Evaluates f_ij f_kl - f_ik f_jl + f_il f_jk in 2n variables
    Plucker {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
        n: usize,
        #[arg(long, default_value = "q")]
        field: FieldChoice,
        #[arg(long)]
        json: bool,
    },
    /// Classify all connected graphs up to isomorphism
    Classify {
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Primes for Fedder certificates
        #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_PRIMES)]
        primes: Vec<u64>,
        /// Allow p = 5 in --primes
        #[arg(long)]
        allow_p5: bool,
        /// Skip Fedder certificates above this many vertices
        #[arg(long, default_value_t = 6)]
        fedder_max_n: usize,
        /// Field for the reported Betti table; the other of Q and F_2 is compared
        #[arg(long, default_value = "q")]
        field: FieldChoice,
        /// Worker threads (0 = all cores)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Directory for classify.csv, classify.json and violation reproducers
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Lib(Error),
    Violation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<(), Failure>;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::LimitExceeded { .. } => EXIT_LIMIT,
        Error::Internal(_) | Error::WeightSearchFailed(_) => EXIT_VIOLATION,
        _ => EXIT_INPUT,
    }
}

fn read_graph(path: &str) -> Result<Graph, Error> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?
    };
    Graph::from_json(&text)
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json"));
}

fn cmd_gb<F: Field>(field: F, g: &Graph, verify: bool, as_json: bool) -> Outcome {
    let ring = PolyRing::new(g.n(), field.clone())?;
    let gb = groebner_basis_bei(field, g)?;
    let verdict = if verify {
        let ours = groebner_elements_basis(&gb, &ring)?;
        let oracle = buchberger(&bei_generators(&ring, g)?);
        let missing: Vec<String> =
            oracle.gens().iter().filter(|f| !ours.gens().contains(f)).map(|f| f.to_string()).collect();
        let extra: Vec<String> =
            ours.gens().iter().filter(|f| !oracle.gens().contains(f)).map(|f| f.to_string()).collect();
        Some((missing, extra))
    } else {
        None
    };
    let ok = verdict.as_ref().is_none_or(|(m, e)| m.is_empty() && e.is_empty());
    if as_json {
        let elements: Vec<_> = gb
            .iter()
            .map(|e| json!({"path": e.path.vertices(), "u_pi": e.u_pi.render(), "element": e.element.to_string()}))
            .collect();
        let mut out = json!({"field": ring.field().name(), "elements": elements});
        if let Some((missing, extra)) = &verdict {
            out["verify"] = json!({"ok": ok, "missing": missing, "extra": extra});
        }
        print_json(&out);
    } else {
        for e in &gb {
            let path: Vec<String> = e.path.vertices().iter().map(usize::to_string).collect();
            println!("{}    [{}]", e.element, path.join("-"));
        }
        if let Some((missing, extra)) = &verdict {
            if ok {
                println!("verify: OK ({} elements)", gb.len());
            } else {
                println!("verify: MISMATCH");
                println!("graph: {}", g.to_json());
                for m in missing {
                    println!("  only in Buchberger: {m}");
                }
                for x in extra {
                    println!("  only in admissible-path basis: {x}");
                }
            }
        }
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Violation("admissible-path basis differs from Buchberger".into()))
    }
}

fn cmd_plucker<F: Field>(field: F, (i, j, k, l, n): (usize, usize, usize, usize, usize), as_json: bool) -> Outcome {
    let ring = PolyRing::new(n, field)?;
    if l > n {
        return Err(Error::VertexOutOfRange { vertex: l, n }.into());
    }
    let value = plucker(&ring, i, j, k, l)?;
    if as_json {
        print_json(&json!({"indices": [i, j, k, l], "value": value.to_string(), "zero": value.is_zero()}));
    } else {
        println!("{value}");
    }
    if value.is_zero() {
        Ok(())
    } else {
        Err(Failure::Violation("Plücker relation does not vanish".into()))
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Gb { input, verify, field } => {
            let g = read_graph(&input.graph)?;
            match field {
                FieldChoice::Rationals => cmd_gb(Rationals, &g, verify, input.json),
                FieldChoice::Prime(f) => cmd_gb(f, &g, verify, input.json),
            }
        }
        Command::Initial { input } => {
            let g = read_graph(&input.graph)?;
            let gens = initial_ideal_mingens(&g)?;
            let rendered: Vec<String> = gens.iter().map(|m| m.render()).collect();
            if input.json {
                print_json(&json!({"generators": rendered}));
            } else {
                for m in rendered {
                    println!("{m}");
                }
            }
            Ok(())
        }
        Command::Closed { input } => {
            let g = read_graph(&input.graph)?;
            let labeling = g.find_closed_labeling()?;
            let closed = g.is_closed_with_labeling();
            if input.json {
                print_json(&json!({
                    "closed_as_labeled": closed,
                    "closed_labeling": labeling,
                    "connected": g.is_connected(),
                    "is_path": g.is_path_graph(),
                }));
            } else {
                println!("closed as labeled: {closed}");
                match &labeling {
                    Some(s) => {
                        let s: Vec<String> = s.iter().map(usize::to_string).collect();
                        println!("closed relabeling: {}", s.join(" "));
                    }
                    None => println!("closed relabeling: none"),
                }
            }
            Ok(())
        }
        Command::Fedder { input, p, e, force } => {
            let g = read_graph(&input.graph)?;
            let cert = if e == 1 { fedder_check(&g, p, force)? } else { frobenius_witness_check(&g, p, e, force)? };
            if input.json {
                print_json(&cert.to_json());
            } else {
                println!("q = {} (p = {p}, e = {e})", cert.q);
                println!("witness degree: {} (bound {})", cert.witness_degree, cert.degree_bound);
                println!("not in m^[q]: {}", cert.not_in_m_bracket);
                for m in &cert.memberships {
                    println!("witness * f_{{{},{}}} in J^[q]: {}", m.edge.0, m.edge.1, m.holds);
                }
                if cert.forced {
                    println!("forced: hypotheses not satisfied");
                }
                println!("valid: {}", cert.is_valid());
            }
            if cert.is_valid() {
                Ok(())
            } else {
                Err(Failure::Violation("certificate is not valid".into()))
            }
        }
        Command::Fpt { input } => {
            let g = read_graph(&input.graph)?;
            let gens = initial_ideal_mingens(&g)?;
            let report = fpt_squarefree(&gens, 2 * g.n())?;
            let absent = report.absent_names(g.n());
            if input.json {
                print_json(&json!({"fpt": report.fpt, "absent": absent, "ideal": report.ideal}));
            } else {
                println!("fpt = {}", report.fpt);
                println!("absent: {}", absent.join(" "));
            }
            Ok(())
        }
        Command::Betti { input, field } => {
            let g = read_graph(&input.graph)?;
            let gens = initial_ideal_mingens(&g)?;
            let nvars = 2 * g.n();
            let table = betti_table_over(&gens, nvars, field)?;
            let dim = krull_dim(&stanley_reisner(&gens, nvars)?);
            let (pd, ty) = homological_summary(&table);
            if input.json {
                let mut out = table.to_json();
                out["field"] = json!(field.name());
                out["reg"] = json!(table.regularity());
                out["pd"] = json!(pd);
                out["initial_type"] = json!(ty);
                out["krull_dim"] = json!(dim);
                print_json(&out);
            } else {
                print!("{}", table.render());
                println!("reg = {}", table.regularity());
                println!("pd = {pd}");
                println!("type of the initial ideal = {ty}");
                println!("krull dim = {dim}");
            }
            Ok(())
        }
        Command::Weight { input } => {
            let g = read_graph(&input.graph)?;
            let gb = groebner_basis_bei(Rationals, &g)?;
            let w = find_weight_vector(g.n(), &gb)?;
            let verified = gb.iter().all(|e| w.dominates(&e.element));
            if input.json {
                print_json(&json!({"x": w.x_weights(), "y": w.y_weights(), "verified": verified}));
            } else {
                let show = |ws: &[u64]| ws.iter().map(u64::to_string).collect::<Vec<_>>().join(", ");
                println!("w(x) = ({})", show(w.x_weights()));
                println!("w(y) = ({})", show(w.y_weights()));
                println!("verified on {} elements: {verified}", gb.len());
            }
            if verified {
                Ok(())
            } else {
                Err(Failure::Violation("weight vector does not dominate".into()))
            }
        }
        Command::Plucker { i, j, k, l, n, field, json } => match field {
            FieldChoice::Rationals => cmd_plucker(Rationals, (i, j, k, l, n), json),
            FieldChoice::Prime(f) => cmd_plucker(f, (i, j, k, l, n), json),
        },
        Command::Classify { n_min, n_max, primes, allow_p5, fedder_max_n, field, jobs, out, json } => {
            if primes.contains(&5) && !allow_p5 {
                return Err(Error::InvalidArgument("p = 5 requires --allow-p5".into()).into());
            }
            for &p in &primes {
                PrimeField::new(p)?;
            }
            let config = RunConfig { n_min, n_max, primes, fedder_max_n, field, jobs, out_dir: out.clone() };
            let report = classify(&config)?;
            if json {
                print!("{}", report.to_json());
            } else {
                print!("{}", report.to_csv());
            }
            let mut reproducers = Vec::new();
            if let Some(dir) = &out {
                reproducers = report.write(dir)?;
            }
            let bad: Vec<String> = report.violations().map(|r| format!("n={} id={} {:?}", r.n, r.id, r.checks.failed())).collect();
            if bad.is_empty() {
                Ok(())
            } else {
                for p in &reproducers {
                    eprintln!("reproducer: {}", p.display());
                }
                let shown = bad.iter().take(5).cloned().collect::<Vec<_>>().join("; ");
                let more = if bad.len() > 5 { format!("; and {} more", bad.len() - 5) } else { String::new() };
                Err(Failure::Violation(format!("{} bound violation(s): {shown}{more}", bad.len())))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Violation(msg)) => {
            eprintln!("violation: {msg}");
            ExitCode::from(EXIT_VIOLATION)
        }
    }
}
