use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use padic_serre::case::{bundled_case, bundled_cases, frobenius_entry, verify, CaseFile, Report, DEFAULT_ELL_MAX};
use padic_serre::characters::DirichletCharacter;
use padic_serre::krasner::{certify_same_extension, precision_report, Evidence, Method, Verdict};
use padic_serre::local::{level, level_exponent, FiltrationEntry, LevelDatum, RamFiltration};
use padic_serre::poly::{cycle_type_mod_ell, newton_polygon, parse_poly_json, IntPoly};
use padic_serre::rep3a6::Fine5;
use padic_serre::weights::{predicted_weights, InertiaProfile};
use padic_serre::Error;

#[derive(Parser)]
#[command(name = "padic-serre", version, about = "p-adic polynomial tools and level/weight/Frobenius checks for A6 representations")]
struct Cli {
    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    json_out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Newton polygon of a polynomial at p.
    Polygon {
        /// JSON array of decimal strings, constant term first (a path, or inline JSON).
        poly: String,
        #[arg(long = "p")]
        p: u64,
    },
    /// Root separation and the precision needed to pin down the extension.
    Precision {
        poly: String,
        #[arg(long = "p")]
        p: u64,
        #[arg(long, default_value = "prop1")]
        method: String,
    },
    /// Certify that f and g generate the same extension of Q_p.
    Certify {
        f: String,
        g: String,
        #[arg(long = "p")]
        p: u64,
        #[arg(long, default_value = "prop1")]
        method: String,
        /// auto, eisenstein-after-shift(a), irreducible-mod-q(p), single-slope-polygon or caller-assertion.
        #[arg(long, default_value = "auto")]
        evidence_f: String,
        #[arg(long, default_value = "auto")]
        evidence_g: String,
    },
    /// Level from local data: a list of level data, or one filtration with --q.
    Level {
        file: String,
        #[arg(long = "p")]
        p: u64,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long, default_value_t = 3)]
        dim: u32,
    },
    /// Predicted weights from an inertia profile.
    Weights {
        profile: String,
        #[arg(long = "p")]
        p: u64,
    },
    /// Frobenius class and characteristic polynomial at one prime.
    Frobenius {
        #[arg(long = "p")]
        p: u64,
        #[arg(long)]
        ell: u64,
        /// Cycle type such as 5,1; computed from --sextic when omitted.
        #[arg(long, value_delimiter = ',')]
        cycle_type: Option<Vec<u32>>,
        #[arg(long)]
        sextic: Option<String>,
        #[arg(long, allow_negative_numbers = true)]
        artin_power: Option<i64>,
        #[arg(long)]
        residue_degree: Option<u32>,
        /// 5a or 5b (p = 3 only).
        #[arg(long)]
        fine: Option<String>,
        /// Nebentype character whose value at ell twists the polynomial.
        #[arg(long, default_value = "trivial")]
        nebentype: String,
    },
    /// Run a case file (or bundled:NAME, or bundled for all) through the pipeline.
    VerifyCase {
        case: String,
        #[arg(long, default_value_t = DEFAULT_ELL_MAX)]
        ell_max: u64,
    },
}

enum Failure {
    Error(Error),
    Golden,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

fn read_input(arg: &str) -> Result<String, Error> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('[') || trimmed.starts_with('{') {
        return Ok(arg.to_string());
    }
    fs::read_to_string(Path::new(arg)).map_err(|e| Error::Parse(format!("{arg}: {e}")))
}

fn read_poly(arg: &str) -> Result<IntPoly, Error> {
    parse_poly_json(&read_input(arg)?)
}

fn read_json<T: for<'de> Deserialize<'de>>(arg: &str) -> Result<T, Error> {
    serde_json::from_str(&read_input(arg)?).map_err(|e| Error::Schema(e.to_string()))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum LevelInput {
    Data(Vec<LevelDatum>),
    Filtration(Vec<FiltrationEntry>),
}

#[derive(Serialize)]
struct LevelOutput {
    level: padic_serre::local::Level,
    #[serde(skip_serializing_if = "Option::is_none")]
    exponent: Option<u64>,
}

fn emit<T: Serialize>(value: &T, out: Option<&Path>) -> Result<(), Error> {
    let text = serde_json::to_string_pretty(value)? + "\n";
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Error::Parse(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_cases(arg: &str) -> Result<Vec<CaseFile>, Error> {
    if arg == "bundled" {
        return Ok(bundled_cases().into_iter().map(|(_, c)| c).collect());
    }
    if let Some(name) = arg.strip_prefix("bundled:") {
        return bundled_case(name).map(|c| vec![c]).ok_or_else(|| Error::Parse(format!("no bundled case {name:?}")));
    }
    Ok(vec![CaseFile::from_json(&read_input(arg)?)?])
}

fn run(cli: Cli) -> Result<(), Failure> {
    let out = cli.json_out.as_deref();
    match cli.command {
        Command::Polygon { poly, p } => emit(&newton_polygon(&read_poly(&poly)?, p)?, out)?,
        Command::Precision { poly, p, method } => {
            let m: Method = method.parse()?;
            emit(&precision_report(&read_poly(&poly)?, p, m)?, out)?
        }
        Command::Certify { f, g, p, method, evidence_f, evidence_g } => {
            let cert = certify_same_extension(
                &read_poly(&f)?,
                &read_poly(&g)?,
                p,
                &evidence_f.parse::<Evidence>()?,
                &evidence_g.parse::<Evidence>()?,
                method.parse()?,
            )?;
            emit(&cert, out)?;
            if cert.verdict == Verdict::Inconclusive {
                eprintln!("inconclusive: congruence too weak to certify");
            }
        }
        Command::Level { file, p, q, dim } => {
            let output = match read_json::<LevelInput>(&file)? {
                LevelInput::Data(data) => LevelOutput { level: level(&data, p)?, exponent: None },
                LevelInput::Filtration(entries) => {
                    let q = q.ok_or_else(|| Error::Schema("a bare filtration needs --q".into()))?;
                    let n = level_exponent(&RamFiltration::new(entries.clone(), dim)?)?;
                    let datum = LevelDatum { q, filtration: Some(entries), dim, exponent: None, source: None };
                    LevelOutput { level: level(&[datum], p)?, exponent: Some(n) }
                }
            };
            emit(&output, out)?
        }
        Command::Weights { profile, p } => {
            let prof: InertiaProfile = read_json(&profile)?;
            emit(&predicted_weights(&prof, p)?, out)?
        }
        Command::Frobenius { p, ell, cycle_type, sextic, artin_power, residue_degree, fine, nebentype } => {
            let ct = match (cycle_type, sextic) {
                (Some(ct), _) => ct,
                (None, Some(s)) => cycle_type_mod_ell(&read_poly(&s)?, ell)?,
                (None, None) => return Err(Error::Schema("give --cycle-type or --sextic".into()).into()),
            };
            let fine = match fine.as_deref() {
                None => None,
                Some("5a") => Some(Fine5::A),
                Some("5b") => Some(Fine5::B),
                Some(other) => return Err(Error::Parse(format!("fine class must be 5a or 5b, got {other:?}")).into()),
            };
            let chi: DirichletCharacter = nebentype.parse()?;
            let eps = chi.eval(ell as i64)?;
            emit(&frobenius_entry(p, ell, &ct, eps, fine, artin_power, residue_degree)?, out)?
        }
        Command::VerifyCase { case, ell_max } => {
            let cases = load_cases(&case)?;
            let reports = cases.iter().map(|c| verify(c, ell_max)).collect::<Result<Vec<Report>, Error>>()?;
            if reports.len() == 1 {
                emit(&reports[0], out)?;
            } else {
                emit(&reports, out)?;
            }
            let mut ok = true;
            for r in &reports {
                for m in r.golden.iter().flat_map(|g| &g.mismatches) {
                    eprintln!("{}: {} expected {} computed {}", r.name, m.item, m.expected, m.computed);
                    ok = false;
                }
            }
            if !ok {
                return Err(Failure::Golden);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Golden) => ExitCode::from(1),
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
