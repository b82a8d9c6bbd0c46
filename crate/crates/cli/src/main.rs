use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use syncbound::bounds::{evaluate_with, AnalysisConfig, RuleRegistry, UserCertificate};
use syncbound::graph::Graph;
use syncbound::io;
use syncbound::spectra::EQ_TOL;
use syncbound::subgraph::{SearchLimits, SubgraphCertificate};

/// Laplacian spectra, eigenratio and subgraph/complement bounds.
#[derive(Parser)]
#[command(name = "syncbound", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Laplacian spectrum, lambda2, lambda_max and eigenratio.
    Spectrum {
        file: PathBuf,
        /// Plain text instead of JSON.
        #[arg(long)]
        text: bool,
    },
    /// Every bound next to the exact value it constrains.
    Bounds {
        file: PathBuf,
        /// Largest host size for exhaustive subgraph searches.
        #[arg(long, default_value_t = SearchLimits::default().max_search_nodes)]
        max_search_nodes: usize,
        /// Largest graph for exhaustive connectivity searches.
        #[arg(long, default_value_t = SearchLimits::default().max_connectivity_nodes)]
        max_connectivity_nodes: usize,
        /// Certificate file; repeatable.
        #[arg(long = "cert")]
        certs: Vec<PathBuf>,
        /// Run only this rule; repeatable. See `syncbound rules`.
        #[arg(long = "rule")]
        rules: Vec<String>,
        #[arg(long, conflicts_with = "text")]
        json: bool,
        #[arg(long)]
        text: bool,
    },
    /// Write a generated graph as an edge list, e.g. `gen product cycle 4 path 3`.
    Gen {
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
    },
    /// Check a certificate against a graph.
    VerifyCert {
        file: PathBuf,
        #[arg(long)]
        cert: PathBuf,
    },
    /// List the registered bound rules.
    Rules,
}

enum Failure {
    Usage(String),
    Analysis(String),
    Certificate(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Analysis(_) => 2,
            Failure::Certificate(_) => 3,
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    io::parse_edge_list(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn eq_tol() -> Result<f64, Failure> {
    match std::env::var("SYNCBOUND_TOL") {
        Err(_) => Ok(EQ_TOL),
        Ok(s) => match s.trim().parse::<f64>() {
            Ok(t) if t.is_finite() && t > 0.0 => Ok(t),
            _ => Err(Failure::Usage(format!("SYNCBOUND_TOL must be a positive number, got '{s}'"))),
        },
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Spectrum { file, text } => {
            let g = load_graph(&file)?;
            let doc = io::spectrum_document(&g).map_err(|e| Failure::Analysis(e.to_string()))?;
            Ok(if text { io::render_spectrum_text(&doc) } else { io::to_json(&doc) })
        }
        Command::Bounds { file, max_search_nodes, max_connectivity_nodes, certs, rules, json: _, text } => {
            let g = load_graph(&file)?;
            let mut claims = Vec::new();
            for path in &certs {
                let claim = io::parse_certificate(&read(path)?, g.node_count())
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                claims.push(UserCertificate { label: path.display().to_string(), claim });
            }
            let registry = if rules.is_empty() {
                RuleRegistry::default()
            } else {
                RuleRegistry::default().retain_named(&rules).map_err(|e| Failure::Usage(e.to_string()))?
            };
            let config = AnalysisConfig {
                eq_tol: eq_tol()?,
                limits: SearchLimits { max_search_nodes, max_connectivity_nodes },
            };
            let report = evaluate_with(&registry, &g, claims, config).map_err(|e| Failure::Analysis(e.to_string()))?;
            let doc = io::report_document(&report);
            Ok(if text { io::render_text(&doc) } else { io::to_json(&doc) })
        }
        Command::Gen { spec } => {
            let g = io::parse_family_spec(&spec).map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(io::write_edge_list(&g))
        }
        Command::VerifyCert { file, cert } => {
            let g = load_graph(&file)?;
            let claim = io::parse_certificate(&read(&cert)?, g.node_count())
                .map_err(|e| Failure::Usage(format!("{}: {e}", cert.display())))?;
            match claim.verify(&g) {
                Ok(SubgraphCertificate::Product { induced: false, .. }) => {
                    Ok("pass: product embeds, image not induced\n".to_string())
                }
                Ok(c) => Ok(format!("pass: {} on {} nodes\n", c.kind().as_str(), c.size())),
                Err(e) => Err(Failure::Certificate(format!("fail: {e}"))),
            }
        }
        Command::Rules => {
            let reg = RuleRegistry::default();
            Ok(reg.iter().map(|r| format!("{:<14}{}\n", r.name(), r.description())).collect())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            match &f {
                Failure::Certificate(msg) => println!("{msg}"),
                Failure::Usage(msg) | Failure::Analysis(msg) => eprintln!("error: {msg}"),
            }
            ExitCode::from(f.code())
        }
    }
}
