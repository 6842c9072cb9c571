//! The `rearr` command line.
//!
//! Documents are read from and written to JSON files (see [`crate::document`]).
//! A command that produces a document writes it to `-o PATH`, or to
//! standard output when `-o` is absent; its human-readable report then goes
//! to standard error so that standard output stays valid JSON.
//!
//! Exit codes: 0 when the command succeeds or the checked relation holds,
//! 1 when a relation or a mathematical condition fails, 2 on bad input.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::criteria::{
    chong_majorant_infinite, chong_majorant_with_floor, construct_n_function, dvp_certificate, standard_fixtures,
    tail_decay_check, uniform_integrability_report, FunctionFamily, DEFAULT_FLOOR_LOG2,
};
use crate::document::{document_value, parse_document, to_json, Document, DocumentError};
use crate::envelope::{marcinkiewicz_norm, ConcaveMajorant};
use crate::orlicz::{luxemburg_norm, modular, OrliczFunction, DEFAULT_EPS_LOG2};
use crate::piecewise::{DecreasingTailFunction, Domain, Integrand, PartialIntegral, StepFunction};
use crate::rational::{format_rational, parse_rational, pow2, Rational};
use crate::rearrangement::{decreasing_rearrangement, submajorization_witness};
use crate::Error;

#[derive(Debug, Parser)]
#[command(name = "rearr", version, about = "Exact rearrangements, Orlicz modulars and majorants of step functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Relation {
    /// f ≺≺ g
    Submajorize,
    /// f ≺ g
    Majorize,
    /// |f| ≺≺ g for a positive g
    Orbit,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DomainArg {
    Unit,
    Halfline,
}

impl From<DomainArg> for Domain {
    fn from(d: DomainArg) -> Self {
        match d {
            DomainArg::Unit => Domain::UnitInterval,
            DomainArg::Halfline => Domain::HalfLine,
        }
    }
}

fn rational_arg(text: &str) -> Result<Rational, String> {
    parse_rational(text).map_err(|e| format!("{} at byte {}", e.message, e.offset))
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decreasing rearrangement of a step function; reports ∫|f|.
    Rearrange {
        input: PathBuf,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Test f against g; exits 1 with a witness when the relation fails.
    Check {
        f: PathBuf,
        g: PathBuf,
        #[arg(long, value_enum, default_value = "submajorize")]
        relation: Relation,
    },
    /// Single majorant for a family (files or directories of step documents).
    Chong {
        #[arg(required = true)]
        members: Vec<PathBuf>,
        #[arg(long, value_enum)]
        domain: Option<DomainArg>,
        /// Floor on (0,1) (default 2^-20); slack ε on the half-line (default 1).
        #[arg(long, value_parser = rational_arg)]
        eps: Option<Rational>,
        /// Exponent of the power tail on the half-line.
        #[arg(long, default_value_t = 2)]
        tail_exp: u32,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// N-function with a finite modular for f; reports the bound and the modular.
    Nfun {
        input: PathBuf,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// ∫ G(|f|) for a density document and a function document.
    Modular { density: PathBuf, input: PathBuf },
    /// Enclosure of inf{c > 0 : ∫ G(|f|/c) ≤ 1}.
    Norm {
        density: PathBuf,
        input: PathBuf,
        /// Enclosure width (default 2^-40).
        #[arg(long, env = "REARR_EPS", value_parser = rational_arg)]
        eps: Option<Rational>,
    },
    /// Density of the Young conjugate G*.
    Conjugate {
        density: PathBuf,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// sup_t ∫₀ᵗ μ(f) / ψ(t), with ψ given by its nonincreasing derivative.
    Marcinkiewicz { psi_derivative: PathBuf, input: PathBuf },
    /// Mass above each cutoff, as a JSON table.
    Ui {
        #[arg(required = true)]
        members: Vec<PathBuf>,
        #[arg(long, required = true, value_delimiter = ',', value_parser = rational_arg)]
        cutoffs: Vec<Rational>,
    },
    /// Mass beyond each cutoff, as a JSON table.
    Tail {
        #[arg(required = true)]
        members: Vec<PathBuf>,
        #[arg(long, required = true, value_delimiter = ',', value_parser = rational_arg)]
        cutoffs: Vec<Rational>,
    },
    /// N-function certificate bounding every member's modular on (0,1).
    Certify {
        #[arg(required = true)]
        members: Vec<PathBuf>,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Write the spreading-plateau and translated-indicator families.
    Fixtures {
        #[arg(long, default_value_t = 20)]
        n_max: u32,
        #[arg(long, default_value_t = 2)]
        tail_exp: u32,
        #[arg(short = 'o', required = true)]
        output: PathBuf,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Lib(#[from] Error),
    #[error("{path}: {source}")]
    Document { path: PathBuf, source: DocumentError },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Input(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Lib(Error::ConditionViolated(_) | Error::VerificationFailed(_) | Error::Divergence(_)) => 1,
            _ => 2,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command) -> CliResult<i32> {
    match command {
        Command::Rearrange { input, output } => {
            let f = read_step(&input)?;
            let r = decreasing_rearrangement(&f);
            let report = format!("integral: {}\n", format_rational(&r.source_total));
            emit(&to_json(&r.mu.into()), output.as_deref(), &report)?;
        }
        Command::Check { f, g, relation } => return check(&f, &g, relation),
        Command::Chong {
            members,
            domain,
            eps,
            tail_exp,
            output,
        } => {
            let family = read_family(&members, domain.map(Domain::from))?;
            let mut report = String::new();
            let doc: Document = match family.domain() {
                Domain::UnitInterval => {
                    let floor = eps.unwrap_or_else(|| pow2(DEFAULT_FLOOR_LOG2));
                    let m = chong_majorant_with_floor(&family, &floor)?;
                    if let Some((start, value)) = &m.floor {
                        let _ = writeln!(report, "floor {} on [{}, 1)", format_rational(value), format_rational(start));
                    }
                    m.g.into()
                }
                Domain::HalfLine => {
                    let eps = eps.unwrap_or_else(|| Rational::from_integer(1.into()));
                    let m = chong_majorant_infinite(&family, &eps, tail_exp)?;
                    let _ = writeln!(report, "cutoff: {}", format_rational(&m.cutoff));
                    m.g.into()
                }
            };
            for i in 0..family.len() {
                let _ = writeln!(report, "member {i}: submajorized");
            }
            emit(&to_json(&doc), output.as_deref(), &report)?;
        }
        Command::Nfun { input, output } => {
            let doc = read_document(&input)?;
            let f = function_of(&doc, &input)?;
            let c = construct_n_function(f)?;
            let mut report = format!("bound: {}\n", format_rational(&c.bound));
            match modular(&c.g, f) {
                Ok(m) => {
                    let _ = writeln!(report, "modular: {m}");
                }
                Err(Error::Unsupported(why)) => {
                    let _ = writeln!(report, "modular: not computed exactly ({why})");
                }
                Err(e) => return Err(e.into()),
            }
            emit(&to_json(&c.g.density().clone().into()), output.as_deref(), &report)?;
        }
        Command::Modular { density, input } => {
            let g = read_orlicz(&density)?;
            let doc = read_document(&input)?;
            println!("{}", modular(&g, function_of(&doc, &input)?)?);
        }
        Command::Norm { density, input, eps } => {
            let g = read_orlicz(&density)?;
            let doc = read_document(&input)?;
            let eps = eps.unwrap_or_else(|| pow2(DEFAULT_EPS_LOG2));
            let e = luxemburg_norm(&g, function_of(&doc, &input)?, &eps)?;
            println!("{}", json!([format_rational(&e.lower), format_rational(&e.upper)]));
        }
        Command::Conjugate { density, output } => {
            let g = read_orlicz(&density)?;
            let conj = g.conjugate()?;
            let report = match conj.density().limit() {
                Some(l) => format!("G* is infinite beyond {}\n", format_rational(l)),
                None => String::new(),
            };
            emit(&to_json(&conj.density().clone().into()), output.as_deref(), &report)?;
        }
        Command::Marcinkiewicz { psi_derivative, input } => {
            let d = read_step(&psi_derivative)?;
            let psi = PartialIntegral::of_step(&d.with_domain(Domain::HalfLine)?)?;
            let psi = ConcaveMajorant::new(psi.as_affine().expect("step partial integrals are affine").clone())?;
            println!("{}", format_rational(&marcinkiewicz_norm(&psi, &read_step(&input)?)?));
        }
        Command::Ui { members, cutoffs } => {
            let family = read_family(&members, None)?;
            let rows: Vec<Value> = uniform_integrability_report(&family, &cutoffs)?
                .iter()
                .map(|row| {
                    json!({
                        "cutoff": format_rational(&row.cutoff),
                        "mass_above": format_rational(&row.mass_above),
                        "delta": format_rational(&row.delta),
                        "small_set_mass": format_rational(&row.small_set_mass),
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&rows).expect("tables serialize"));
        }
        Command::Tail { members, cutoffs } => {
            let family = read_family(&members, None)?;
            let rows = cutoffs
                .iter()
                .map(|c| {
                    Ok(json!({
                        "cutoff": format_rational(c),
                        "tail_mass": format_rational(&tail_decay_check(&family, c)?),
                    }))
                })
                .collect::<CliResult<Vec<Value>>>()?;
            println!("{}", serde_json::to_string_pretty(&rows).expect("tables serialize"));
        }
        Command::Certify { members, output } => {
            let family = read_family(&members, Some(Domain::UnitInterval))?;
            let cert = dvp_certificate(&family)?;
            let value = json!({
                "bound": format_rational(&cert.bound),
                "majorant_modular": format_rational(&cert.majorant_modular),
                "member_modulars": cert.member_modulars.iter().map(format_rational).collect::<Vec<_>>(),
                "n_function": cert.g.flags().is_n_function(),
                "density": document_value(&cert.g.density().clone().into()),
                "majorant": document_value(&cert.majorant.g.clone().into()),
            });
            let mut text = serde_json::to_string_pretty(&value).expect("certificates serialize");
            text.push('\n');
            let report = format!("certified bound: {}\n", format_rational(&cert.bound));
            emit(&text, output.as_deref(), &report)?;
        }
        Command::Fixtures {
            n_max,
            tail_exp,
            output,
        } => {
            let fx = standard_fixtures(n_max, tail_exp)?;
            let mut written = 0usize;
            for (name, family) in [
                ("spreading_plateaus", &fx.spreading_plateaus),
                ("translated_indicators", &fx.translated_indicators),
            ] {
                let dir = output.join(name);
                create_dir(&dir)?;
                for (i, f) in family.members().iter().enumerate() {
                    write_file(&dir.join(format!("member_{:04}.json", i + 1)), &to_json(&f.clone().into()))?;
                    written += 1;
                }
            }
            write_file(&output.join("majorant.json"), &to_json(&fx.majorant.into()))?;
            write_file(&output.join("square.json"), &to_json(&fx.square.density().clone().into()))?;
            println!("wrote {} documents to {}", written + 2, output.display());
        }
    }
    Ok(0)
}

fn check(f_path: &Path, g_path: &Path, relation: Relation) -> CliResult<i32> {
    let f = read_decreasing(f_path)?;
    let g = read_decreasing(g_path)?;
    if matches!(relation, Relation::Orbit) && g.is_zero() {
        return Err(Error::Precondition("orbit generator must be positive".into()).into());
    }
    if let Some(t) = submajorization_witness(&g, &f)? {
        println!("fails: ∫₀ᵗ μ(f) > ∫₀ᵗ μ(g) at t = {t}");
        return Ok(1);
    }
    if matches!(relation, Relation::Majorize) {
        let (a, b) = (f.total_integral(), g.total_integral());
        if a != b {
            println!(
                "fails: total integrals differ ({} vs {})",
                format_rational(&a),
                format_rational(&b)
            );
            return Ok(1);
        }
    }
    println!("holds");
    Ok(0)
}

fn emit(text: &str, output: Option<&Path>, report: &str) -> CliResult<()> {
    match output {
        Some(path) => {
            write_file(path, text)?;
            print!("{report}");
        }
        None => {
            print!("{text}");
            eprint!("{report}");
        }
    }
    Ok(())
}

fn create_dir(path: &Path) -> CliResult<()> {
    fs::create_dir_all(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn read_document(path: &Path) -> CliResult<Document> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_document(&text).map_err(|source| CliError::Document {
        path: path.to_path_buf(),
        source,
    })
}

fn wrong_kind(path: &Path, doc: &Document, wanted: &str) -> CliError {
    CliError::Input(format!(
        "{}: expected a {wanted} document, found {}",
        path.display(),
        doc.kind()
    ))
}

fn read_step(path: &Path) -> CliResult<StepFunction> {
    match read_document(path)? {
        Document::Step(f) => Ok(f),
        other => Err(wrong_kind(path, &other, "step")),
    }
}

/// A step or decreasing-tail document as a nonincreasing function (the
/// rearrangement of a step function).
fn read_decreasing(path: &Path) -> CliResult<DecreasingTailFunction> {
    use crate::rearrangement::Rearrange;
    match read_document(path)? {
        Document::Step(f) => Ok(f.decreasing()),
        Document::DecreasingTail(f) => Ok(f),
        other => Err(wrong_kind(path, &other, "step or decreasing_tail")),
    }
}

fn function_of<'a>(doc: &'a Document, path: &Path) -> CliResult<Integrand<'a>> {
    match doc {
        Document::Step(f) => Ok(f.into()),
        Document::DecreasingTail(f) => Ok(f.into()),
        other => Err(wrong_kind(path, other, "step or decreasing_tail")),
    }
}

fn read_orlicz(path: &Path) -> CliResult<OrliczFunction> {
    match read_document(path)? {
        Document::Density(d) => Ok(OrliczFunction::new(d)?),
        other => Err(wrong_kind(path, &other, "orlicz_density")),
    }
}

/// Member files in the order given; a directory contributes its `.json`
/// files in name order.
fn member_paths(inputs: &[PathBuf]) -> CliResult<Vec<PathBuf>> {
    let mut paths = Vec::new();
    for input in inputs {
        if input.is_dir() {
            let entries = fs::read_dir(input).map_err(|source| CliError::Io {
                path: input.clone(),
                source,
            })?;
            let mut found: Vec<PathBuf> = entries
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|x| x == "json"))
                .collect();
            found.sort();
            paths.extend(found);
        } else {
            paths.push(input.clone());
        }
    }
    if paths.is_empty() {
        return Err(CliError::Input("no member documents found".into()));
    }
    Ok(paths)
}

fn read_family(inputs: &[PathBuf], domain: Option<Domain>) -> CliResult<FunctionFamily> {
    let members = member_paths(inputs)?
        .iter()
        .map(|p| {
            let f = read_step(p)?;
            match domain {
                Some(d) if d != f.domain() => Err(CliError::Input(format!(
                    "{}: member lives on {} but {} was requested",
                    p.display(),
                    f.domain(),
                    d
                ))),
                _ => Ok(f),
            }
        })
        .collect::<CliResult<Vec<_>>>()?;
    Ok(FunctionFamily::new(members)?)
}
