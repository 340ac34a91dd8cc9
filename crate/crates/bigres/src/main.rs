use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use bigres_core::completion::{completion_alpha, completion_resolution, completion_scheme};
use bigres_core::corners::{corner_ledger, degree_matrix_y};
use bigres_core::engine::{resolve, resolve_steps};
use bigres_core::romer::romer_check;
use bigres_core::Partition;

use bigres::json::{CornersJson, LedgerJson, ResolutionJson, RomerJson, SchemeJson};
use bigres::oracle::{verify, OracleConfig, DEFAULT_PRIME};
use bigres::render;

/// Bigraded minimal free resolutions of double point schemes in P1 x P1
/// with arithmetically Cohen-Macaulay support.
#[derive(Parser)]
#[command(name = "bigres", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Partition, comma separated, weakly decreasing (e.g. 6,5,3,1,1)
    #[arg(long, value_delimiter = ',', required = true)]
    lambda: Vec<usize>,
    /// Emit JSON instead of plain text
    #[arg(long)]
    json: bool,
    /// Write output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Shifts of the minimal free resolution for double points on lambda
    Resolve(Common),
    /// The completion: its scheme, alpha invariant, and resolution
    Completion(Common),
    /// Degree matrix of the completion with corners marked
    Corners(Common),
    /// The corner sweep ledger: u, v, a, b per corner
    Ledger(Common),
    /// Resolutions of every intermediate ideal in the sweep
    Steps(Common),
    /// Compare the resolution against the exact rank oracle
    Verify {
        #[command(flatten)]
        common: Common,
        /// Field characteristic (a prime, 10^6 < p < 2^31)
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        prime: u64,
        /// Seed for the point parameters
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Verification box "A,B"; default (2r+1, 2*lambda_1+1)
        #[arg(long = "box", value_delimiter = ',', num_args = 2, value_names = ["A", "B"])]
        bbox: Option<Vec<usize>>,
        /// Also check minimal generator counts, not just the Hilbert function
        #[arg(long)]
        deep: bool,
    },
    /// Check the shift bound on total Betti numbers
    Romer(Common),
    /// List all partitions in a box, optionally verifying each
    Enumerate {
        #[arg(long, default_value_t = 4)]
        max_rows: usize,
        #[arg(long, default_value_t = 4)]
        max_width: usize,
        /// Shallow-verify every partition against the oracle
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_lambda(parts: &[usize]) -> Result<Partition, String> {
    Partition::new(parts.to_vec()).map_err(|e| e.to_string())
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|e| e.to_string())
        }
    }
}

fn json_line<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    s.push('\n');
    s
}

/// Exit 0 on success, 1 on invalid input, 2 on verification failure.
fn run() -> Result<bool, String> {
    let cli = Cli::try_parse().map_err(|e| e.to_string())?;
    match cli.command {
        Command::Resolve(c) => {
            let lam = parse_lambda(&c.lambda)?;
            let res = resolve(&lam);
            let text = if c.json {
                json_line(&ResolutionJson::new(&lam, &res))
            } else {
                render::resolution(&res)
            };
            emit(&c.out, &text)?;
        }
        Command::Completion(c) => {
            let lam = parse_lambda(&c.lambda)?;
            let res = completion_resolution(&lam);
            let text = if c.json {
                #[derive(serde::Serialize)]
                struct CompletionJson {
                    scheme: SchemeJson,
                    alpha: Vec<usize>,
                    resolution: ResolutionJson,
                }
                json_line(&CompletionJson {
                    scheme: SchemeJson::from(&completion_scheme(&lam)),
                    alpha: completion_alpha(&lam).parts().to_vec(),
                    resolution: ResolutionJson::new(&lam, &res),
                })
            } else {
                let mut text = format!("alpha: {:?}\n", completion_alpha(&lam).parts());
                text.push_str(&render::resolution(&res));
                text
            };
            emit(&c.out, &text)?;
        }
        Command::Corners(c) => {
            let lam = parse_lambda(&c.lambda)?;
            let text = if c.json {
                json_line(&CornersJson::new(&lam))
            } else {
                render::degree_matrix(&lam, &degree_matrix_y(&lam))
            };
            emit(&c.out, &text)?;
        }
        Command::Ledger(c) => {
            let lam = parse_lambda(&c.lambda)?;
            let ledger = corner_ledger(&lam);
            let text = if c.json {
                json_line(&LedgerJson::new(&lam, &ledger))
            } else {
                render::ledger(&ledger)
            };
            emit(&c.out, &text)?;
        }
        Command::Steps(c) => {
            let lam = parse_lambda(&c.lambda)?;
            let steps = resolve_steps(&lam);
            let text = if c.json {
                let dto: Vec<ResolutionJson> =
                    steps.iter().map(|r| ResolutionJson::new(&lam, r)).collect();
                json_line(&dto)
            } else {
                let mut text = String::new();
                for (l, r) in steps.iter().enumerate() {
                    text.push_str(&format!("step {l}:\n"));
                    text.push_str(&render::resolution(r));
                }
                text
            };
            emit(&c.out, &text)?;
        }
        Command::Verify { common: c, prime, seed, bbox, deep } => {
            let lam = parse_lambda(&c.lambda)?;
            let bbox = match bbox {
                Some(v) => (v[0], v[1]),
                None => OracleConfig::default_box(&lam),
            };
            let cfg = OracleConfig::new(prime, seed, bbox).map_err(|e| e.to_string())?;
            let rep = verify(&lam, &cfg, deep).map_err(|e| e.to_string())?;
            let text =
                if c.json { json_line(&rep) } else { render::verification(&rep) };
            emit(&c.out, &text)?;
            return Ok(rep.pass);
        }
        Command::Romer(c) => {
            let lam = parse_lambda(&c.lambda)?;
            let rep = romer_check(&lam);
            let text = if c.json {
                json_line(&RomerJson::new(&lam, &rep))
            } else {
                render::romer(&rep)
            };
            emit(&c.out, &text)?;
            return Ok(rep.pass);
        }
        Command::Enumerate { max_rows, max_width, verify: do_verify, json, out } => {
            let all = Partition::enumerate_box(max_rows, max_width);
            let mut pass = true;
            let mut lines: Vec<String> = Vec::new();
            let mut dtos: Vec<serde_json::Value> = Vec::new();
            for lam in &all {
                let mut ok = None;
                if do_verify {
                    let cfg = OracleConfig::for_lambda(lam, DEFAULT_PRIME, 0)
                        .map_err(|e| e.to_string())?;
                    let rep = verify(lam, &cfg, false).map_err(|e| e.to_string())?;
                    pass &= rep.pass;
                    ok = Some(rep.pass);
                }
                if json {
                    dtos.push(serde_json::json!({
                        "lambda": lam.parts(),
                        "betti": resolve(lam).betti(),
                        "verified": ok,
                    }));
                } else {
                    let status = match ok {
                        Some(true) => "  ok",
                        Some(false) => "  FAIL",
                        None => "",
                    };
                    lines.push(format!("{:?}{status}", lam.parts()));
                }
            }
            let text = if json {
                json_line(&dtos)
            } else {
                let mut t = lines.join("\n");
                t.push('\n');
                t
            };
            emit(&out, &text)?;
            return Ok(pass);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(msg) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
    }
}
