use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use greenforge::battery::random_elements;
use greenforge::format::{
    decomposition_json, decomposition_text, green_json, parse_green, rep_json,
};
use greenforge::{parse_operand, table_rows, verify_pairs, JobConfig, OutputFormat};
use greenforge_core::{
    check_presentation, decompose_closed, decompose_rep, from_poly, gr_mul, ring_tag, tensor_rep,
    to_poly, verify_presentation, Indecomposable, PresentedPoly,
};
use serde_json::json;

const INVALID: u8 = 2;
const FAILED: u8 = 3;

#[derive(Parser)]
#[command(
    name = "greenforge",
    version,
    about = "Clebsch-Gordan decompositions and Green rings of minimal Hopf quivers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Cyclic quiver with N vertices.
    #[arg(
        long,
        value_name = "N",
        conflicts_with = "infinite",
        required_unless_present = "infinite"
    )]
    cyclic: Option<u32>,
    /// Infinite linear quiver.
    #[arg(long)]
    infinite: bool,
    /// q as 1, a fraction such as -1 or 3/5, or zeta:N:k.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    q: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose V(i,l) ⊗ V(j,m); operands are written i,l.
    Decompose {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
        /// Also run the rank oracle and report whether it agrees.
        #[arg(long)]
        oracle: bool,
    },
    /// Compare closed forms with the oracle on every pair within bounds.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
        /// Vertex window [-W, W] on the infinite quiver.
        #[arg(long, default_value_t = 2)]
        window: i64,
        /// Random elements used for the presentation round trips.
        #[arg(long, default_value_t = 50)]
        battery: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Emit every decomposition within bounds as JSON lines.
    Table {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
        #[arg(long, default_value_t = 2)]
        window: i64,
    },
    /// Product of two Green ring elements, e.g. "2*V(0,1) - V(1,0)" or summand JSON.
    Product {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Image of a Green ring element in the polynomial presentation.
    ToPoly {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Reduce a polynomial to the basis x^i f_k and print the Green ring element.
    FromPoly {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// The tensor product representation as JSON.
    Rep {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
}

enum Failure {
    Invalid(String),
    Mismatch,
}

impl From<greenforge_core::Error> for Failure {
    fn from(e: greenforge_core::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

fn config(common: &Common) -> Result<JobConfig, Failure> {
    let mut cfg = JobConfig::new(common.cyclic, &common.q)?;
    cfg.format = match common.format {
        Format::Json => OutputFormat::Json,
        Format::Text => OutputFormat::Text,
    };
    Ok(cfg)
}

fn operand(text: &str) -> Result<Indecomposable, Failure> {
    Ok(parse_operand(text)?)
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    match cli.command {
        Command::Decompose {
            common,
            left,
            right,
            oracle,
        } => {
            let cfg = config(&common)?;
            let (a, b) = (operand(&left)?, operand(&right)?);
            let closed = decompose_closed(a, b, &cfg.ctx)?;
            if !oracle {
                match cfg.format {
                    OutputFormat::Json => writeln!(out, "{}", decomposition_json(&closed))?,
                    OutputFormat::Text => {
                        writeln!(out, "{a} ⊗ {b} = {}", decomposition_text(&closed))?
                    }
                }
                return Ok(());
            }
            let found = decompose_rep(&tensor_rep(a, b, &cfg.ctx))?;
            let verdict = if found == closed { "match" } else { "mismatch" };
            match cfg.format {
                OutputFormat::Json => writeln!(
                    out,
                    "{}",
                    json!({
                        "verdict": verdict,
                        "oracle": decomposition_json(&found),
                        "closed": decomposition_json(&closed),
                    })
                )?,
                OutputFormat::Text => {
                    writeln!(out, "{verdict}")?;
                    writeln!(out, "oracle: {}", decomposition_text(&found))?;
                    writeln!(out, "closed: {}", decomposition_text(&closed))?;
                }
            }
            if found != closed {
                return Err(Failure::Mismatch);
            }
        }
        Command::Verify {
            common,
            max_len,
            window,
            battery,
            seed,
        } => {
            let mut cfg = config(&common)?;
            cfg.max_len = max_len;
            cfg.window = window;
            let sweep = verify_pairs(&cfg.ctx, &cfg.vertices(), max_len, false);
            let mut checks = check_presentation(&cfg.ctx);
            let elements = random_elements(&cfg.ctx, battery, max_len, seed);
            for (name, ok) in verify_presentation(&cfg.ctx, &elements)?.entries {
                checks.push(name, ok);
            }
            checks.push(
                "conservation of dimension",
                sweep.conservation_failures == 0,
            );
            let passed = sweep.passed() && checks.all_passed();
            match cfg.format {
                OutputFormat::Json => {
                    let first = sweep.first_mismatch.as_ref().map(|m| {
                        json!({
                            "left": m.left.to_string(),
                            "right": m.right.to_string(),
                            "closed": m.closed.as_ref().map(decomposition_json),
                            "oracle": m.oracle.as_ref().map(decomposition_json),
                        })
                    });
                    let list: Vec<_> = checks
                        .entries
                        .iter()
                        .map(|(n, ok)| json!({"name": n, "passed": ok}))
                        .collect();
                    writeln!(
                        out,
                        "{}",
                        json!({
                            "pairs": sweep.pairs,
                            "mismatches": sweep.mismatches,
                            "first_mismatch": first,
                            "checks": list,
                            "passed": passed,
                        })
                    )?;
                }
                OutputFormat::Text => {
                    writeln!(
                        out,
                        "{} pairs, {} mismatches",
                        sweep.pairs, sweep.mismatches
                    )?;
                    if let Some(m) = &sweep.first_mismatch {
                        let show =
                            |d: &Option<_>| d.as_ref().map_or("error".into(), decomposition_text);
                        writeln!(out, "first mismatch: {} ⊗ {}", m.left, m.right)?;
                        writeln!(out, "  closed: {}", show(&m.closed))?;
                        writeln!(out, "  oracle: {}", show(&m.oracle))?;
                    }
                    write!(out, "{checks}")?;
                    writeln!(out, "{}", if passed { "pass" } else { "FAIL" })?;
                }
            }
            if !passed {
                return Err(Failure::Mismatch);
            }
        }
        Command::Table {
            common,
            max_len,
            window,
        } => {
            let mut cfg = config(&common)?;
            cfg.window = window;
            for (a, b, d) in table_rows(&cfg.ctx, &cfg.vertices(), max_len)? {
                match cfg.format {
                    OutputFormat::Json => {
                        let row = json!({
                            "left": {"vertex": a.vertex, "length": a.length},
                            "right": {"vertex": b.vertex, "length": b.length},
                            "summands": decomposition_json(&d)["summands"],
                        });
                        writeln!(out, "{row}")?;
                    }
                    OutputFormat::Text => writeln!(out, "{a} ⊗ {b} = {}", decomposition_text(&d))?,
                }
            }
        }
        Command::Product {
            common,
            left,
            right,
        } => {
            let cfg = config(&common)?;
            let p = gr_mul(&parse_green(&left)?, &parse_green(&right)?, &cfg.ctx)?;
            match cfg.format {
                OutputFormat::Json => writeln!(out, "{}", green_json(&p))?,
                OutputFormat::Text => writeln!(out, "{p}")?,
            }
        }
        Command::ToPoly { common, element } => {
            let cfg = config(&common)?;
            let p = to_poly(&parse_green(&element)?, &cfg.ctx);
            match cfg.format {
                OutputFormat::Json => writeln!(
                    out,
                    "{}",
                    json!({"ring": p.tag().name(), "poly": p.to_string()})
                )?,
                OutputFormat::Text => writeln!(out, "{p}")?,
            }
        }
        Command::FromPoly { common, poly } => {
            let cfg = config(&common)?;
            let p = PresentedPoly::parse(ring_tag(&cfg.ctx), &poly)?;
            let a = from_poly(&p, &cfg.ctx)?;
            match cfg.format {
                OutputFormat::Json => writeln!(out, "{}", green_json(&a))?,
                OutputFormat::Text => writeln!(out, "{a}")?,
            }
        }
        Command::Rep {
            common,
            left,
            right,
        } => {
            let cfg = config(&common)?;
            let rep = tensor_rep(operand(&left)?, operand(&right)?, &cfg.ctx);
            writeln!(out, "{}", rep_json(&rep))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(()), Ok(())) => ExitCode::SUCCESS,
        (Err(Failure::Mismatch), _) => ExitCode::from(FAILED),
        (Err(Failure::Invalid(msg)), _) => {
            eprintln!("greenforge: {msg}");
            ExitCode::from(INVALID)
        }
        (Ok(()), Err(e)) => {
            eprintln!("greenforge: {e}");
            ExitCode::from(INVALID)
        }
    }
}
