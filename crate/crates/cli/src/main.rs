//! `bracoid`: verify, enumerate and compare finite skew bracoids, and list
//! Hopf-Galois structures on coset spaces.
//!
//! Output is one JSON record per line (or a single indented array with
//! `--pretty`). Exit status is 0 on success, 1 when the input is well formed
//! but fails a check, and 2 for usage or parse errors.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use skew_bracoid::classify;
use skew_bracoid::hopf_galois;
use skew_bracoid::limits::MAX_ORDER_ENV;
use skew_bracoid::morphism;
use skew_bracoid::notation::{self, BracoidJson, HomJson};
use skew_bracoid::substructure;
use skew_bracoid::{Error, Limits, SkewBracoid};

#[derive(Parser)]
#[command(name = "bracoid", version, about = "Finite skew bracoids and Hopf-Galois structures")]
struct Cli {
    /// Print one indented JSON array instead of JSON lines.
    #[arg(long, global = true)]
    pretty: bool,

    /// Set every search bound to this value.
    #[arg(long, global = true, env = MAX_ORDER_ENV)]
    max_order: Option<usize>,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a bracoid file satisfies the axioms.
    Verify { file: PathBuf },
    /// List the equivalence classes of bracoids on N.
    Enumerate {
        /// The group N, e.g. C4 or C2xC2.
        n: String,
        /// Only keep classes that G maps onto, realized with this G.
        #[arg(long = "group", short = 'g')]
        group: Option<String>,
    },
    /// List the Hopf-Galois structures on G/G'.
    Hgs {
        /// The Galois group G.
        group: String,
        /// Element indices generating G' (comma separated); trivial if omitted.
        #[arg(long, value_delimiter = ',')]
        subgroup: Vec<usize>,
    },
    /// Print the reduced form of a bracoid.
    Reduce { file: PathBuf },
    /// Decide whether two bracoids are isomorphic.
    Iso {
        first: PathBuf,
        second: PathBuf,
        /// Search all group isomorphisms instead of comparing reduced forms.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Classify every subgroup of N as a (left, enhanced) ideal.
    Ideals { file: PathBuf },
}

/// A failure and the exit status it maps to.
struct Failure {
    status: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = if matches!(e, Error::Parse(_)) { 2 } else { 1 };
        Failure {
            status,
            message: e.to_string(),
        }
    }
}

fn usage(message: String) -> Failure {
    Failure { status: 2, message }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn load_bracoid(path: &Path) -> Result<SkewBracoid, Failure> {
    Ok(notation::parse_bracoid(&read(path)?)?)
}

/// Group arguments are user input, so any failure to build them is a usage error.
fn parse_group_arg(text: &str) -> Result<skew_bracoid::FiniteGroup, Failure> {
    notation::parse_group(text).map_err(|e| usage(format!("bad group {text:?}: {e}")))
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("records serialize")
}

fn witness(e: &Error) -> Value {
    match *e {
        Error::RelationFails { g, eta, mu } => json!([g, eta, mu]),
        Error::ActionNotHomomorphism { g, h } => json!([g, h]),
        Error::NotTransitive { missing } => json!([missing]),
        _ => Value::Null,
    }
}

/// Runs a command, returning its records and exit status.
fn run(cli: &Cli, limits: &Limits) -> Result<(Vec<Value>, u8), Failure> {
    let records = match &cli.command {
        Command::Verify { file } => {
            let text = read(file)?;
            return match notation::parse_bracoid(&text) {
                Ok(_) => Ok((vec![json!({"valid": true})], 0)),
                Err(Error::Parse(m)) => Err(usage(format!("parse error: {m}"))),
                Err(e) => Ok((
                    vec![json!({"valid": false, "error": e.to_string(), "witness": witness(&e)})],
                    1,
                )),
            };
        }
        Command::Enumerate { n, group } => {
            let n_group = parse_group_arg(n)?;
            let g_group = group.as_deref().map(parse_group_arg).transpose()?;
            let g = group.as_deref().zip(g_group.as_ref());
            classify::enumerate_classes(n, &n_group, g, limits)?
                .iter()
                .map(to_value)
                .collect()
        }
        Command::Hgs { group, subgroup } => {
            let g = parse_group_arg(group)?;
            if subgroup.iter().any(|&x| x >= g.order()) {
                return Err(usage(format!("subgroup generators must be below {}", g.order())));
            }
            let space = hopf_galois::coset_space_from_generators(&g, subgroup)?;
            classify::hgs_records(group, &space, limits)?
                .iter()
                .map(to_value)
                .collect()
        }
        Command::Reduce { file } => {
            let b = load_bracoid(file)?;
            let (reduced, projection) = b.reduced_form();
            vec![json!({
                "kernel": b.kernel_lambda(),
                "projection": projection.images(),
                "reduced_order": reduced.g().order(),
                "bracoid": to_value(&BracoidJson::of(&reduced)),
            })]
        }
        Command::Iso {
            first,
            second,
            exhaustive,
        } => {
            let (a, b) = (load_bracoid(first)?, load_bracoid(second)?);
            if *exhaustive {
                let hom = morphism::find_isomorphism_exhaustive(&a, &b, limits)?;
                vec![json!({
                    "isomorphic": hom.is_some(),
                    "hom": hom.as_ref().map(|h| to_value(&HomJson::of(h))),
                })]
            } else {
                let both_reduced = a.is_reduced() && b.is_reduced();
                let (ra, _) = a.reduced_form();
                let (rb, _) = b.reduced_form();
                let hom = morphism::find_isomorphism(&ra, &rb, limits)?;
                vec![json!({
                    "reduced_forms_isomorphic": hom.is_some(),
                    "inputs_reduced": both_reduced,
                    "hom": hom.as_ref().map(|h| to_value(&HomJson::of(h))),
                })]
            }
        }
        Command::Ideals { file } => {
            let b = load_bracoid(file)?;
            substructure::enumerate_ideals(&b, limits)?
                .iter()
                .map(to_value)
                .collect()
        }
    };
    Ok((records, 0))
}

fn render(records: &[Value], pretty: bool) -> String {
    if pretty {
        let mut s = serde_json::to_string_pretty(records).expect("json");
        s.push('\n');
        s
    } else {
        records.iter().map(|r| format!("{r}\n")).collect()
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = match cli.max_order {
        Some(n) => {
            eprintln!("warning: every search bound set to {n}");
            Limits::uniform(n)
        }
        // wide enough for the holomorph of every group of order at most 8
        None => Limits::order_eight(),
    };
    let (records, status) = match run(&cli, &limits) {
        Ok(out) => out,
        Err(f) => {
            eprintln!("error: {}", f.message);
            return ExitCode::from(f.status);
        }
    };
    let text = render(&records, cli.pretty);
    let written = match &cli.out {
        Some(path) => fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(status)
}
