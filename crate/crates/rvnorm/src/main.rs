//! Command-line interface: norm and complexified-norm evaluation, CHS
//! specializations, partition tables, unit-circle point sets, Birkhoff/HLP,
//! and the verification suites.

use clap::{Parser, Subcommand};
use rvnorm::bounds;
use rvnorm::chs;
use rvnorm::cxnorm::{cnorm_quadrature, cnorm_trace_poly, default_nodes};
use rvnorm::distributions::DistributionSpec;
use rvnorm::hnorm::{
    norm_auto, norm_bell, norm_mgf_coeff, norm_monte_carlo, norm_partition_sum,
};
use rvnorm::io::{parse_dist, parse_hermitian, parse_matrix};
use rvnorm::linalg::HermitianMatrix;
use rvnorm::majorization::{birkhoff_decompose, hlp_transport, DoublyStochastic};
use rvnorm::partitions::{enumerate_partitions, y_coeff, z_coeff};
use rvnorm::verify;
use serde::Serialize;
use std::process::ExitCode;

/// Random vector norms of Hermitian matrices and their complexification.
#[derive(Parser)]
#[command(name = "rvnorm", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Norm ‖A‖_{X,d} of a Hermitian matrix.
    Norm {
        /// Matrix file (JSON {"n", "entries": [[re,im],…]} or real CSV).
        #[arg(long)]
        matrix: String,
        /// Distribution, e.g. `gamma:alpha=1,beta=1` or `rademacher`.
        #[arg(long)]
        dist: String,
        #[arg(long)]
        d: f64,
        /// Pathway: auto, bell, partition, mgf, or mc.
        #[arg(long, default_value = "auto")]
        method: String,
        #[arg(long, default_value_t = 1_000_000)]
        samples: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Complexified norm ⦀Z⦀_{X,d} of an arbitrary square matrix.
    Cnorm {
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        dist: String,
        #[arg(long)]
        d: f64,
        /// Pathway: trace (even d ≤ 12) or quad.
        #[arg(long, default_value = "trace")]
        method: String,
        #[arg(long)]
        nodes: Option<usize>,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// CHS norm ‖A‖_d (Hermitian input) or ⦀Z⦀_d (general input).
    Chs {
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        d: u32,
        /// Generalized Hunter order (applied to the eigenvalues).
        #[arg(long)]
        alpha: Option<u32>,
        /// Also print the equivalence sandwich.
        #[arg(long)]
        bounds: bool,
    },
    /// Partition table (π, z_π, y_π) for degree d.
    Partitions {
        #[arg(long)]
        d: u32,
    },
    /// Points (λ1, λ2) with ‖diag(λ1, λ2)‖_{X,d} = 1, as CSV.
    UnitCircle {
        #[arg(long)]
        dist: String,
        #[arg(long)]
        d: f64,
        #[arg(long, default_value_t = 64)]
        directions: usize,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Birkhoff decomposition of a doubly stochastic matrix.
    Birkhoff {
        #[arg(long)]
        matrix: String,
    },
    /// Doubly stochastic D with Dx = y for y ≺ x.
    Hlp {
        /// Comma-separated coordinates of x.
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Run a verification suite; exit 0 iff all checks pass.
    Verify {
        /// One of axioms, schur, bounds, oracle, chs-golden, birkhoff.
        #[arg(long)]
        suite: String,
        #[arg(long, default_value = "exponential")]
        dist: String,
        #[arg(long, default_value_t = 4)]
        d: u32,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
}

/// Default seed: --seed flag, else RVNORM_SEED, else 0.
fn resolve_seed(flag: Option<u64>) -> u64 {
    flag.or_else(|| std::env::var("RVNORM_SEED").ok().and_then(|s| s.parse().ok()))
        .unwrap_or(0)
}

fn read_file(path: &str) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
}

fn parse_vector(text: &str) -> Result<Vec<f64>, String> {
    text.split(',')
        .map(|c| c.trim().parse::<f64>().map_err(|e| format!("{c:?}: {e}")))
        .collect()
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

#[derive(Serialize)]
struct ChsOutput {
    value: f64,
    d: u32,
    hunter: Option<f64>,
    sandwich: Option<(f64, f64, f64)>,
}

/// Radius r with ‖r·diag(cos θ, sin θ)‖_{X,d} = 1, by bisection (the radial
/// map is linear in r by homogeneity, so bisection converges unconditionally).
fn radial_solve(
    spec: &DistributionSpec,
    d: f64,
    theta: f64,
    samples: usize,
    seed: u64,
) -> Result<f64, rvnorm::Error> {
    let norm_at = |r: f64| -> Result<f64, rvnorm::Error> {
        let a = HermitianMatrix::from_diag(&[r * theta.cos(), r * theta.sin()]);
        Ok(norm_auto(&a, spec, d, samples, seed)?.value)
    };
    let mut hi = 1.0;
    while norm_at(hi)? < 1.0 {
        hi *= 2.0;
    }
    let mut lo = 0.0;
    while hi - lo > 1e-10 {
        let mid = 0.5 * (lo + hi);
        if norm_at(mid)? < 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

fn run() -> Result<bool, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Norm { matrix, dist, d, method, samples, seed } => {
            let a = parse_hermitian(&read_file(&matrix)?).map_err(|e| e.to_string())?;
            let spec = parse_dist(&dist).map_err(|e| e.to_string())?;
            let seed = resolve_seed(seed);
            let even = || {
                if d.fract() != 0.0 || (d as u64) % 2 != 0 {
                    Err(format!("method requires even integer d, got {d}"))
                } else {
                    Ok(d as u32)
                }
            };
            let result = match method.as_str() {
                "auto" => norm_auto(&a, &spec, d, samples, seed),
                "bell" => norm_bell(&a, &spec, even()?),
                "partition" => norm_partition_sum(&a, &spec, even()?),
                "mgf" => norm_mgf_coeff(&a, &spec, even()?),
                "mc" => norm_monte_carlo(&a, &spec, d, samples, seed),
                other => return Err(format!("unknown method {other:?}")),
            }
            .map_err(|e| e.to_string())?;
            print_json(&result);
        }
        Command::Cnorm { matrix, dist, d, method, nodes, samples, seed } => {
            let z = parse_matrix(&read_file(&matrix)?).map_err(|e| e.to_string())?;
            let spec = parse_dist(&dist).map_err(|e| e.to_string())?;
            let seed = resolve_seed(seed);
            let result = match method.as_str() {
                "trace" => {
                    if d.fract() != 0.0 {
                        return Err(format!("trace method requires integer d, got {d}"));
                    }
                    cnorm_trace_poly(&z, &spec, d as u32)
                }
                "quad" => {
                    let nodes = nodes.unwrap_or_else(|| default_nodes(d));
                    cnorm_quadrature(&z, &spec, d, nodes, samples, seed)
                }
                other => return Err(format!("unknown method {other:?}")),
            }
            .map_err(|e| e.to_string())?;
            print_json(&result);
        }
        Command::Chs { matrix, d, alpha, bounds: with_bounds } => {
            let z = parse_matrix(&read_file(&matrix)?).map_err(|e| e.to_string())?;
            let hermitian = HermitianMatrix::new(z.clone()).ok();
            let (value, hunter, sandwich) = match &hermitian {
                Some(a) => {
                    let value = chs::chs_norm_charpoly(a, d).map_err(|e| e.to_string())?;
                    let hunter = match alpha {
                        Some(al) => {
                            let lam = rvnorm::linalg::eig_hermitian(a)
                                .map_err(|e| e.to_string())?
                                .eigenvalues;
                            Some(
                                chs::generalized_hunter(&lam, d, al)
                                    .map_err(|e| e.to_string())?,
                            )
                        }
                        None => None,
                    };
                    let sandwich = if with_bounds {
                        Some(chs::equivalence_bounds(a, d).map_err(|e| e.to_string())?)
                    } else {
                        None
                    };
                    (value, hunter, sandwich)
                }
                None => (
                    chs::chs_cnorm_det_series(&z, d).map_err(|e| e.to_string())?,
                    None,
                    None,
                ),
            };
            print_json(&ChsOutput { value, d, hunter, sandwich });
        }
        Command::Partitions { d } => {
            println!("partition\tz\ty");
            for pi in enumerate_partitions(d).map_err(|e| e.to_string())? {
                let parts: Vec<String> =
                    pi.parts().iter().map(|p| p.to_string()).collect();
                println!("({})\t{}\t{}", parts.join(","), z_coeff(&pi), y_coeff(&pi));
            }
        }
        Command::UnitCircle { dist, d, directions, samples, seed } => {
            let spec = parse_dist(&dist).map_err(|e| e.to_string())?;
            let seed = resolve_seed(seed);
            println!("lambda1,lambda2");
            for k in 0..directions {
                let theta = 2.0 * std::f64::consts::PI * k as f64 / directions as f64;
                let r = radial_solve(&spec, d, theta, samples, seed)
                    .map_err(|e| e.to_string())?;
                println!("{},{}", r * theta.cos(), r * theta.sin());
            }
        }
        Command::Birkhoff { matrix } => {
            let m = parse_matrix(&read_file(&matrix)?).map_err(|e| e.to_string())?;
            let entries: Vec<f64> = m.entries().iter().map(|c| c.re).collect();
            let s = DoublyStochastic::new(m.n, entries).map_err(|e| e.to_string())?;
            let dec = birkhoff_decompose(&s).map_err(|e| e.to_string())?;
            #[derive(Serialize)]
            struct Term {
                weight: f64,
                perm: Vec<usize>,
            }
            #[derive(Serialize)]
            struct Output {
                terms: Vec<Term>,
                residual: f64,
            }
            print_json(&Output {
                terms: dec
                    .terms
                    .into_iter()
                    .map(|t| Term { weight: t.weight, perm: t.perm })
                    .collect(),
                residual: dec.residual,
            });
        }
        Command::Hlp { x, y } => {
            let xv = parse_vector(&x)?;
            let yv = parse_vector(&y)?;
            let dmat = hlp_transport(&xv, &yv).map_err(|e| e.to_string())?;
            #[derive(Serialize)]
            struct Output {
                n: usize,
                entries: Vec<[f64; 2]>,
            }
            print_json(&Output {
                n: dmat.n,
                entries: dmat.entries.iter().map(|&v| [v, 0.0]).collect(),
            });
        }
        Command::Verify { suite, dist, d, trials, samples, seed } => {
            let spec = parse_dist(&dist).map_err(|e| e.to_string())?;
            let seed = resolve_seed(seed);
            let rows = match suite.as_str() {
                "axioms" => verify::suite_axioms(&spec, d, trials, seed),
                "schur" => verify::suite_schur(&spec, d, trials, seed),
                "bounds" => verify::suite_bounds(&spec, d, trials, seed),
                "oracle" => verify::suite_oracle(trials, samples, seed),
                "chs-golden" => verify::suite_chs_golden(),
                "birkhoff" => verify::suite_birkhoff(trials, seed),
                other => return Err(format!("unknown suite {other:?}")),
            }
            .map_err(|e| e.to_string())?;
            println!("suite\tcheck\tpass\tdetail");
            let mut all = true;
            for row in &rows {
                println!(
                    "{}\t{}\t{}\t{}",
                    row.suite,
                    row.name,
                    if row.pass { "pass" } else { "FAIL" },
                    row.detail
                );
                all &= row.pass;
            }
            // `bounds` companion scalar context for the report footer.
            if suite == "bounds" {
                if let Ok(g) = bounds::submult_scalar_d2(&spec) {
                    println!("# gamma_2 = {g}");
                }
            }
            return Ok(all);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}
