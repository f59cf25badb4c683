use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use combinatoria_core::notation::{self, NotationStyle};
use combinatoria_core::semantics::{all_forms, decode, generate_language};
use combinatoria_core::{Combination, Error, Expression, Universe};

use crate::render;
use crate::universe_spec::UniverseSpec;
use crate::verify;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Success = 0,
    VerificationFailed = 1,
    Usage = 2,
    Semantic = 3,
}

#[derive(Parser, Debug)]
#[command(
    name = "combinatoria",
    version,
    about = "Numbered combination classes and quasi-fraction signs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct UniverseArgs {
    /// Explicit ascending labels, e.g. 3,6,7,9
    #[arg(long, value_name = "L1,L2,...")]
    universe: Option<UniverseSpec>,
    /// Shorthand for the labels 1..k
    #[arg(long, value_name = "N")]
    k: Option<usize>,
}

impl UniverseArgs {
    fn spec(&self) -> UniverseSpec {
        match (&self.universe, self.k) {
            (Some(spec), _) => spec.clone(),
            (None, Some(k)) => UniverseSpec::Size(k),
            (None, None) => unreachable!("clap requires one of --universe/--k"),
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Default)]
enum Style {
    /// Bare integers: 1/4.5
    #[default]
    Plain,
    /// Simple terms prefixed with "a": 1/4.a5
    Prefixed,
}

impl From<Style> for NotationStyle {
    fn from(s: Style) -> Self {
        match s {
            Style::Plain => NotationStyle::Plain,
            Style::Prefixed => NotationStyle::Prefixed,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List a class as numbered "(p) x.y.z" lines
    Enumerate {
        #[command(flatten)]
        universe: UniverseArgs,
        #[arg(long)]
        class: usize,
    },
    /// Print the full form of what an expression denotes
    Decode {
        expr: String,
        #[command(flatten)]
        universe: UniverseArgs,
        #[arg(long, value_enum, default_value_t)]
        style: Style,
    },
    /// Print every written form of what an expression denotes
    Forms {
        expr: String,
        #[command(flatten)]
        universe: UniverseArgs,
        #[arg(long, value_enum, default_value_t)]
        style: Style,
    },
    /// Print the k^2-sign table
    Table {
        #[command(flatten)]
        universe: UniverseArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, value_enum, default_value_t)]
        style: Style,
    },
    /// Run the invariant suite
    Verify {
        #[arg(long = "k-max")]
        k_max: u64,
    },
}

/// A failure that ends the command, with its exit code.
struct Failure {
    code: ExitCode,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: ExitCode::Usage,
            message: message.into(),
        }
    }

    fn semantic(message: impl Into<String>) -> Self {
        Failure {
            code: ExitCode::Semantic,
            message: message.into(),
        }
    }
}

/// Parse `args` (including the program name), run the command, and return its exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
                ExitCode::Usage
            } else {
                // --help / --version
                let _ = out.write_all(rendered.as_bytes());
                ExitCode::Success
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn resolve(args: &UniverseArgs) -> Result<Universe, Failure> {
    args.spec()
        .resolve()
        .map_err(|e| Failure::usage(e.to_string()))
}

fn execute(command: Command, out: &mut dyn Write) -> Result<ExitCode, Failure> {
    let text = match command {
        Command::Enumerate { universe, class } => {
            let universe = resolve(&universe)?;
            let members = universe
                .class(class)
                .map_err(|e| Failure::usage(e.to_string()))?
                .collect::<Vec<_>>();
            render::numbered_list(&members)
        }
        Command::Decode {
            expr,
            universe,
            style,
        } => {
            let universe = resolve(&universe)?;
            let (_, combination) = parse_and_decode(&expr, &universe)?;
            let full = combinatoria_core::semantics::full_form(&combination)
                .map_err(|e| Failure::semantic(e.to_string()))?;
            format!("{}\n", full.styled(style.into()))
        }
        Command::Forms {
            expr,
            universe,
            style,
        } => {
            let universe = resolve(&universe)?;
            let (_, combination) = parse_and_decode(&expr, &universe)?;
            let forms =
                all_forms(&combination, &universe).map_err(|e| Failure::semantic(e.to_string()))?;
            render::expression_lines(&forms, style.into())
        }
        Command::Table {
            universe,
            format,
            style,
        } => {
            let universe = resolve(&universe)?;
            let table = generate_language(&universe).map_err(|e| Failure::usage(e.to_string()))?;
            match format {
                Format::Text => render::table_text(&table, style.into()),
                Format::Json => render::table_json(&table, style.into()),
            }
        }
        Command::Verify { k_max } => {
            if k_max < 2 {
                return Err(Failure::usage(format!(
                    "--k-max must be at least 2 (got {k_max})"
                )));
            }
            let checks = verify::run_checks(k_max);
            let mut text: String = checks.iter().map(|c| format!("{}\n", c.line())).collect();
            let failed = checks.iter().filter(|c| !c.passed).count();
            text.push_str(&format!("{} checks, {} failed\n", checks.len(), failed));
            write_out(out, &text)?;
            return Ok(if failed == 0 {
                ExitCode::Success
            } else {
                ExitCode::VerificationFailed
            });
        }
    };
    write_out(out, &text)?;
    Ok(ExitCode::Success)
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e| Failure::usage(format!("write failed: {e}")))
}

fn parse_and_decode(text: &str, universe: &Universe) -> Result<(Expression, Combination), Failure> {
    let expr = notation::parse(text).map_err(|e| Failure::usage(e.to_string()))?;
    match decode(&expr, universe) {
        Ok(c) => Ok((expr, c)),
        Err(e) => Err(Failure::semantic(position_semantic_error(
            text, &expr, universe, &e,
        ))),
    }
}

/// Prefix a decode error with the column and number of the atom that triggered it.
///
/// Decoding is left to right, so the failing atom is the end of the shortest failing prefix.
fn position_semantic_error(
    text: &str,
    expr: &Expression,
    universe: &Universe,
    e: &Error,
) -> String {
    let atoms = expr.atoms();
    let failing = (1..=atoms.len())
        .find(|&n| {
            let prefix =
                Expression::new(atoms[..n].to_vec()).expect("prefix of a valid expression");
            decode(&prefix, universe).is_err()
        })
        .unwrap_or(atoms.len());
    let column = atom_column(text, failing);
    format!("semantic error at column {column} (atom {failing}): {e}")
}

/// 1-based column where atom `n` (1-based) starts in `text`.
fn atom_column(text: &str, n: usize) -> usize {
    let chars: Vec<char> = text.chars().collect();
    let mut start = 0;
    let mut seen = 1;
    for (i, &c) in chars.iter().enumerate() {
        if seen == n {
            break;
        }
        if c == '.' {
            seen += 1;
            start = i + 1;
        }
    }
    while start < chars.len() && chars[start].is_whitespace() {
        start += 1;
    }
    start + 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atom_columns() {
        assert_eq!(atom_column("1/2.3", 1), 1);
        assert_eq!(atom_column("1/2.3", 2), 5);
        assert_eq!(atom_column("3.6. 3", 3), 6);
    }

    fn run_str(args: &[&str]) -> (ExitCode, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["combinatoria"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn semantic_errors_are_positioned() {
        let (code, out, err) = run_str(&["decode", "1/2.3", "--universe", "3,6,7,9"]);
        assert_eq!(code, ExitCode::Semantic);
        assert!(out.is_empty());
        assert!(err.contains("column 5 (atom 2)"), "{err}");
    }

    #[test]
    fn help_goes_to_stdout() {
        let (code, out, err) = run_str(&["--help"]);
        assert_eq!(code, ExitCode::Success);
        assert!(out.contains("enumerate"));
        assert!(err.is_empty());
    }

    #[test]
    fn universe_flags_are_exclusive() {
        let (code, _, err) = run_str(&["table", "--k", "3", "--universe", "1,2,3"]);
        assert_eq!(code, ExitCode::Usage);
        assert!(!err.is_empty());
        let (code, _, _) = run_str(&["table"]);
        assert_eq!(code, ExitCode::Usage);
    }
}
