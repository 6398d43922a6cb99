//! Command-line front end. `run` does the work so tests can drive it
//! without spawning a process.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use wajsberg::enumerate::DEFAULT_ORDER_LIMIT;
use wajsberg::format::{parse_code, parse_raw_algebras, render_algebra, render_code};
use wajsberg::*;

pub const EXIT_OK: i32 = 0;
/// Unreadable or malformed input.
pub const EXIT_MALFORMED: i32 = 1;
/// Well-formed input that fails the axioms, or a code that cannot be attached
/// or embedded.
pub const EXIT_REJECTED: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(name = "wajsberg", version, about = "Finite Wajsberg, MV and BCK algebras and their block codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check an algebra file against the axioms of its declared kind
    Verify { file: PathBuf },
    /// Rewrite an algebra in another presentation
    Convert {
        file: PathBuf,
        #[arg(long)]
        to: Kind,
    },
    /// Print the block code of an algebra
    Code { file: PathBuf },
    /// Hamming distance between the codewords of two elements
    Distance { file: PathBuf, r: usize, s: usize },
    /// Minimum Hamming distance of a code file
    Mindist { file: PathBuf },
    /// Print the order skeleton ('#' where row <= column)
    Skeleton {
        file: PathBuf,
        /// Print the indicator of x + y = 1 instead
        #[arg(long)]
        indicator: bool,
    },
    /// One Wajsberg algebra per order type of the given order
    Enumerate {
        n: usize,
        /// Write one file per algebra into this directory
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_ORDER_LIMIT)]
        limit: usize,
    },
    /// Attach an algebra to a square code, or report why it cannot be done
    Attach {
        file: PathBuf,
        /// List every matching relabeling, not just the first
        #[arg(long)]
        all: bool,
        #[arg(long, default_value = "wajsberg")]
        to: Kind,
    },
    /// Find an algebra whose code contains the given code after dropping columns
    Embed {
        file: PathBuf,
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long)]
        all: bool,
    },
}

/// What a subcommand produced: text for stdout and an exit code.
struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: EXIT_OK }
    }
}

enum Failure {
    Io(PathBuf, std::io::Error),
    Input(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type CmdResult = std::result::Result<Outcome, Failure>;

/// Parses `args` (program name first) and runs the command. Returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(o) => {
            let _ = out.write_all(o.text.as_bytes());
            o.code
        }
        Err(Failure::Io(path, e)) => {
            let _ = writeln!(err, "error: {}: {e}", path.display());
            EXIT_MALFORMED
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_MALFORMED
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::AxiomsViolated(_)
        | Error::NotAPoset(_)
        | Error::Rejected(_)
        | Error::NonSquare { .. }
        | Error::NoEmbeddingFound(_) => EXIT_REJECTED,
        _ => EXIT_MALFORMED,
    }
}

fn dispatch(cmd: Command) -> CmdResult {
    match cmd {
        Command::Verify { file } => verify(&file),
        Command::Convert { file, to } => {
            let text = read_algebras(&file)?
                .iter()
                .map(|a| convert(a, to).map(|c| render_algebra(&c)))
                .collect::<Result<Vec<_>>>()?;
            Ok(Outcome::ok(text.join("---\n")))
        }
        Command::Code { file } => {
            let text = read_algebras(&file)?
                .iter()
                .map(|a| code_from_algebra(a).map(|c| render_code(&c)))
                .collect::<Result<Vec<_>>>()?;
            Ok(Outcome::ok(text.join("---\n")))
        }
        Command::Distance { file, r, s } => {
            let a = read_algebra(&file)?;
            for x in [r, s] {
                if x >= a.size() {
                    return Err(Failure::Input(format!("element {x} is out of range for order {}", a.size())));
                }
            }
            Ok(Outcome::ok(format!("{}\n", distance(&a, r, s))))
        }
        Command::Mindist { file } => {
            let code = read_code(&file)?;
            Ok(Outcome::ok(format!("{}\n", min_hamming_distance(&code)?)))
        }
        Command::Skeleton { file, indicator } => {
            let a = read_algebra(&file)?;
            let s = if indicator {
                let Algebra::Mv(m) = convert(&a, Kind::Mv)? else { unreachable!() };
                mv_sum_indicator(&m)
            } else {
                skeleton(&a)
            };
            Ok(Outcome::ok(s.render()))
        }
        Command::Enumerate { n, output, limit } => enumerate(n, output.as_deref(), limit),
        Command::Attach { file, all, to } => attach(&file, all, to),
        Command::Embed { file, max_order, all } => embed(&file, max_order, all),
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn read_algebras(path: &Path) -> std::result::Result<Vec<Algebra>, Failure> {
    let raws = parse_raw_algebras(&read(path)?)?;
    Ok(raws.into_iter().map(|r| r.build()).collect::<Result<Vec<_>>>()?)
}

fn read_algebra(path: &Path) -> std::result::Result<Algebra, Failure> {
    let mut all = read_algebras(path)?;
    if all.len() != 1 {
        return Err(Failure::Input(format!("expected one algebra, found {}", all.len())));
    }
    Ok(all.remove(0))
}

fn read_code(path: &Path) -> std::result::Result<BlockCode, Failure> {
    Ok(parse_code(&read(path)?)?)
}

fn describe(kind: Kind) -> &'static str {
    match kind {
        Kind::Bck => "bounded commutative BCK",
        Kind::Mv => "MV algebra",
        Kind::Wajsberg => "Wajsberg algebra",
    }
}

fn verify(path: &Path) -> CmdResult {
    let mut text = String::new();
    let mut code = EXIT_OK;
    for (i, raw) in parse_raw_algebras(&read(path)?)?.into_iter().enumerate() {
        if i > 0 {
            text.push_str("---\n");
        }
        let kind = raw.kind;
        match raw.build() {
            Ok(_) => writeln!(text, "valid: {}", describe(kind)).unwrap(),
            Err(Error::AxiomsViolated(report)) => {
                writeln!(text, "invalid: not a {}\n{report}", describe(kind)).unwrap();
                code = EXIT_REJECTED;
            }
            Err(Error::NotAPoset(v)) => {
                writeln!(text, "invalid: not a {}\n{v}", describe(kind)).unwrap();
                code = EXIT_REJECTED;
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(Outcome { text, code })
}

fn file_name(n: usize, index: usize, factors: &FactorMultiset) -> String {
    let parts: Vec<String> = factors.factors().iter().map(ToString::to_string).collect();
    format!("n{n}_{index}_{}.alg", parts.join("x"))
}

fn enumerate(n: usize, output: Option<&Path>, limit: usize) -> CmdResult {
    let catalog = enumerate_wajsberg_with_limit(n, limit)?;
    let mut text = format!("n={n} pi={} total={}\n", pi(n), catalog.len());
    let bodies: Vec<String> = catalog
        .iter()
        .map(|e| format!("# factors: {}\n{}", e.factors, render_algebra(&e.algebra.clone().into())))
        .collect();
    match output {
        Some(dir) => {
            std::fs::create_dir_all(dir).map_err(|e| Failure::Io(dir.to_path_buf(), e))?;
            for (i, (e, body)) in catalog.iter().zip(&bodies).enumerate() {
                let path = dir.join(file_name(n, i, &e.factors));
                std::fs::write(&path, body).map_err(|e| Failure::Io(path.clone(), e))?;
                writeln!(text, "{}", file_name(n, i, &e.factors)).unwrap();
            }
        }
        None => text.push_str(&bodies.join("---\n")),
    }
    Ok(Outcome::ok(text))
}

fn attach(path: &Path, all: bool, to: Kind) -> CmdResult {
    let code = read_code(path)?;
    let found = if all { attach_wajsberg_all(&code) } else { attach_wajsberg(&code).map(|a| vec![a]) };
    let found = match found {
        Ok(f) => f,
        Err(Error::Rejected(r)) => {
            return Ok(Outcome { text: format!("rejected: {r}\n"), code: EXIT_REJECTED });
        }
        Err(e) => return Err(e.into()),
    };
    let mut blocks = Vec::new();
    for a in &found {
        let rows: Vec<String> = a.rows.iter().map(ToString::to_string).collect();
        let map: Vec<String> = a.iso.forward().iter().map(ToString::to_string).collect();
        let algebra = convert(&a.algebra.clone().into(), to)?;
        blocks.push(format!(
            "# factors: {} catalog: {} map: {}\n# rows: {}\n{}",
            a.factors,
            a.catalog_index,
            map.join(","),
            rows.join(" "),
            render_algebra(&algebra)
        ));
    }
    Ok(Outcome::ok(blocks.join("---\n")))
}

fn embed(path: &Path, max_order: Option<usize>, all: bool) -> CmdResult {
    let code = read_code(path)?;
    let found = if all { embed_code_all(&code, max_order)? } else { vec![embed_code(&code, max_order)?] };
    if found.is_empty() {
        let q = max_order.unwrap_or(0);
        return Err(Error::NoEmbeddingFound(q).into());
    }
    let blocks: Vec<String> = found
        .iter()
        .map(|e| {
            let cols: Vec<String> = e.columns.iter().map(ToString::to_string).collect();
            let words: Vec<String> = e.restriction.words().iter().map(ToString::to_string).collect();
            format!(
                "q={} factors={} columns={}\n# restriction: {}\n{}",
                e.q,
                e.factors,
                cols.join(","),
                words.join(" "),
                render_algebra(&e.host.clone().into())
            )
        })
        .collect();
    Ok(Outcome::ok(blocks.join("---\n")))
}
