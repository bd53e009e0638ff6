use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use multalg_core::grassmann::{gaussian_binomial, grassmann_multiplicity, grassmann_presentation, DivisorData};
use multalg_core::jets::{jet_invariants, jet_presentation};
use multalg_core::multiplicity::{equivariant_multiplicity, hitchin_base_weights, verify_structure_theorem_with};
use multalg_core::verify::{closure_vs_grassmann_dimensions, run_all, SuiteOptions, DEFAULT_SEED};
use multalg_core::weights::{dominance_leq, fundamental_decomposition, is_minuscule, lower_set, weyl_orbit_size};
use multalg_core::{DominantWeight, Error, GroebnerConfig, PresentedRing, RingFixture, WeightMultiset};

const USAGE: u8 = 2;
const RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(name = "multalg", version, about = "Exact computations with local multiplicity algebras of quasi-homogeneous maps")]
struct Cli {
    /// Emit JSON instead of a plain table.
    #[arg(long, global = true)]
    json: bool,

    /// Cap on S-pair reductions per Groebner computation.
    #[arg(long, global = true)]
    max_pairs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// JSON fixture `{variables, weights?, generators, provenance?}`; standard input when omitted or `-`.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Gaussian binomial [n k]_t: the Poincare polynomial of the Grassmannian Gr(k, n).
    Gaussian {
        #[arg(short)]
        n: u32,
        #[arg(short)]
        k: u32,
    },
    /// Cohomology-ring presentation of Gr(k, n) by Chern classes of the tautological
    /// sub- and quotient bundles, whose Hilbert series is the Gaussian binomial.
    Grassmann {
        #[arg(short)]
        n: u32,
        #[arg(short)]
        k: u32,
    },
    /// Product formula: the multiplicity of a fixed point with divisor data
    /// (m_1, ..., m_{n-1}) is prod_i [n i]_t^{m_i}.
    Multiplicity {
        #[arg(short)]
        n: u32,
        /// Comma-separated multiplicities m_1..m_{n-1}.
        #[arg(short, value_delimiter = ',', required = true)]
        m: Vec<u32>,
    },
    /// Structure theorem for a non-degenerate quasi-homogeneous map: its local algebra is
    /// graded Gorenstein with socle spanned by the Jacobian determinant in top degree
    /// sum(d_i) - sum(w_j), perfect pairings, and Poincare polynomial equal to the
    /// equivariant multiplicity. Input generators are the map components.
    Analyze {
        #[command(flatten)]
        input: Input,
    },
    /// Equivariant multiplicity prod_i (1 - t^{d_i}) / prod_j (1 - t^{w_j}).
    Equivariant {
        /// Comma-separated domain weights w_j.
        #[arg(long, value_delimiter = ',', required = true)]
        domain: Vec<u32>,
        /// Comma-separated codomain degrees d_i.
        #[arg(long, value_delimiter = ',', required = true)]
        codomain: Vec<u32>,
    },
    /// Weights of the Hitchin base for rank n and genus g: i with multiplicity dim H^0(K^i);
    /// there are n^2 (g - 1) + 1 in total.
    HitchinWeights {
        #[arg(short)]
        n: u32,
        #[arg(short)]
        g: u32,
    },
    /// Jet ring of order d (truncated arcs): relations are the coefficients of
    /// f(sum_j x_j s^j) mod s^{d+1}. Output is the jet presentation plus invariants.
    Jet {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        order: usize,
    },
    /// Dominance order on GL_n weights: lambda <= mu iff mu - lambda is a non-negative sum of
    /// positive roots.
    Dominance {
        #[arg(allow_hyphen_values = true)]
        lambda: DominantWeight,
        #[arg(allow_hyphen_values = true)]
        mu: DominantWeight,
    },
    /// Size of the Weyl orbit of mu, which is the multiplicity at a fixed point whose
    /// upward flow closes up over the orbit; for (d+1) omega_k in GL_n it is C(n, k).
    Orbit {
        #[arg(allow_hyphen_values = true)]
        mu: DominantWeight,
    },
    /// Strata of the closure of an upward flow, indexed by weights lambda <= mu, with the
    /// Grassmannian product multiplicity where the fundamental coefficients allow it.
    Closure {
        #[arg(allow_hyphen_values = true)]
        mu: DominantWeight,
    },
    /// Runs the catalogue of worked examples and consistency checks. The exit code is the
    /// number of failures, capped at 125.
    Verify {
        /// Only run cases whose name contains this substring.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Replace the order-3 jet target with a corrupted fixture; the run must fail.
        #[arg(long)]
        inject_corruption: bool,
        /// Number of random complete intersections checked against the structure theorem.
        #[arg(long, default_value_t = 20)]
        random_cases: usize,
    },
}

/// What a subcommand produced: a JSON value, a plain rendering, and an exit code.
struct Report {
    value: Value,
    text: String,
    code: u8,
}

impl Report {
    fn new(value: Value, text: impl Into<String>) -> Self {
        Report { value, text: text.into(), code: 0 }
    }

    fn table(value: Value) -> Self {
        let text = table(&value);
        Report { value, text, code: 0 }
    }
}

fn table(value: &Value) -> String {
    let Value::Object(map) = value else {
        return plain(value);
    };
    let width = map.keys().map(|k| k.len()).max().unwrap_or(0);
    map.iter().map(|(k, v)| format!("{k:<width$}  {}", plain(v))).collect::<Vec<_>>().join("\n")
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn read_input(input: &Input) -> Result<PresentedRing, CliError> {
    let text = match &input.file {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).map_err(|e| CliError::Usage(format!("{}: {e}", p.display())))?
        }
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::Usage(format!("stdin: {e}")))?;
            s
        }
    };
    Ok(PresentedRing::from_fixture(&RingFixture::from_json(&text)?)?)
}

enum CliError {
    Usage(String),
    Resource(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceLimit { .. } => CliError::Resource(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

fn fixture_report(ring: &PresentedRing) -> Report {
    let text = ring.relations().iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n");
    Report::new(json!(ring.to_fixture()), text)
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    let mut config = GroebnerConfig::default();
    if let Some(cap) = cli.max_pairs {
        config.max_pair_reductions = cap;
    }
    Ok(match &cli.command {
        Command::Gaussian { n, k } => {
            let p = gaussian_binomial(*n, *k)?;
            Report::new(json!({ "n": n, "k": k, "polynomial": p.to_string(), "coefficients": p.to_i64_vec() }), p.to_string())
        }
        Command::Grassmann { n, k } => fixture_report(&grassmann_presentation(*n, *k)?),
        Command::Multiplicity { n, m } => {
            let d = DivisorData::new(*n, m.clone())?;
            let p = grassmann_multiplicity(&d);
            let value = json!({
                "n": n,
                "multiplicities": m,
                "reduced_point": d.is_reduced_point(),
                "polynomial": p.to_string(),
                "coefficients": p.to_i64_vec(),
            });
            Report::new(value, p.to_string())
        }
        Command::Analyze { input } => {
            let map = read_input(input)?.to_map()?;
            let report = verify_structure_theorem_with(&map, &config)?;
            let failed = report.failed_clauses();
            let mut out = Report::table(json!(report));
            if !failed.is_empty() {
                out.text.push_str(&format!("\nfailed clauses: {}", failed.join(", ")));
            }
            out.code = failed.len().min(125) as u8;
            out
        }
        Command::Equivariant { domain, codomain } => {
            let m = equivariant_multiplicity(&WeightMultiset::new(domain.clone())?, &WeightMultiset::new(codomain.clone())?);
            let value = json!({
                "domain": domain,
                "codomain": codomain,
                "multiplicity": m.to_string(),
                "polynomial": m.as_polynomial().is_some(),
            });
            Report::new(value, m.to_string())
        }
        Command::HitchinWeights { n, g } => {
            let w = hitchin_base_weights(*n, *g)?;
            Report::new(json!({ "n": n, "g": g, "count": w.len(), "weights": w }), format!("{w} ({} weights)", w.len()))
        }
        Command::Jet { input, order } => {
            let jet = jet_presentation(&read_input(input)?, *order)?;
            let invariants = jet_invariants(&jet, &config)?;
            let mut value = json!(jet.ring().to_fixture());
            value["invariants"] = json!(invariants);
            let mut text = fixture_report(jet.ring()).text;
            text.push_str(&format!("\n\n{}", table(&value["invariants"])));
            Report::new(value, text)
        }
        Command::Dominance { lambda, mu } => {
            let (le, ge) = (dominance_leq(lambda, mu)?, dominance_leq(mu, lambda)?);
            let relation = match (le, ge) {
                (true, true) => "=",
                (true, false) => "<",
                (false, true) => ">",
                (false, false) => "incomparable",
            };
            Report::table(json!({ "lambda": lambda, "mu": mu, "leq": le, "geq": ge, "relation": relation }))
        }
        Command::Orbit { mu } => {
            let size = weyl_orbit_size(mu).to_string();
            let value = json!({
                "mu": mu,
                "orbit_size": size,
                "minuscule": is_minuscule(mu),
                "fundamental_decomposition": fundamental_decomposition(mu),
                "lower_set": lower_set(mu),
            });
            let mut out = Report::table(value);
            out.text = size;
            out
        }
        Command::Closure { mu } => {
            let r = closure_vs_grassmann_dimensions(mu);
            let mut text = format!("mu = {}, orbit size {}", r.mu, r.weyl_orbit_size);
            for s in &r.strata {
                let m = s.grassmann_multiplicity.as_deref().or(s.note).unwrap_or("");
                text.push_str(&format!("\n{:<16} alpha = {:?}  {m}", s.lambda.to_string(), s.alpha));
            }
            Report::new(json!(r), text)
        }
        Command::Verify { filter, seed, inject_corruption, random_cases } => {
            let opts = SuiteOptions {
                filter: filter.clone(),
                seed: *seed,
                inject_corruption: *inject_corruption,
                random_cases: *random_cases,
                config,
                ..SuiteOptions::default()
            };
            let summary = run_all(&opts);
            let mut text: Vec<String> = summary
                .cases
                .iter()
                .map(|c| format!("{:<4} {:<48} {}", format!("{:?}", c.status).to_lowercase(), c.name, c.detail))
                .collect();
            text.push(format!("{} passed, {} failed, {} skipped", summary.passed, summary.failed, summary.skipped));
            Report { value: json!(summary), text: text.join("\n"), code: summary.exit_code() as u8 }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report.value).expect("serializable"));
            } else {
                println!("{}", report.text);
            }
            ExitCode::from(report.code)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
        Err(CliError::Resource(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(RESOURCE)
        }
    }
}
