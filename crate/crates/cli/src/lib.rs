//! Argument parsing and subcommands for the `eisenforest` binary.
//!
//! Exit codes: 0 success, 1 domain-negative answer, 2 usage error.

pub mod render;

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Parser, Subcommand};

use eisenstein_forest::eisenstein::{is_eisenstein, pair_from_triple, twin};
use eisenstein_forest::forest::{enumerate_forest, path_of_triple, triple_of_path};
use eisenstein_forest::oracle::verify_bijection;
use eisenstein_forest::{Error, PathCode, Triple, TwinForm};

use render::{records, write_dot, write_jsonl, write_table, OutputFormat};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "eisenforest",
    version,
    about = "Explore the forest of primitive Eisenstein triples"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a triple and locate it in the forest.
    Check {
        #[arg(value_parser = positive)]
        a: i128,
        #[arg(value_parser = positive)]
        b: i128,
        #[arg(value_parser = positive)]
        c: i128,
    },
    /// List forest nodes with a <= MAX_A.
    Enumerate {
        #[arg(long, value_parser = positive)]
        max_a: i128,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
        /// Follow each node with a row for its twin triple.
        #[arg(long)]
        include_twins: bool,
        /// Start with the equilateral triple (1,1,1).
        #[arg(long)]
        include_equilateral: bool,
    },
    /// Print the forest address of a triple.
    Path {
        #[arg(value_parser = positive)]
        a: i128,
        #[arg(value_parser = positive)]
        b: i128,
        #[arg(value_parser = positive)]
        c: i128,
    },
    /// Print the node at a forest address such as "A", "B:4" or "A:5.5".
    Locate {
        #[arg(value_parser = parse_path)]
        path: PathCode,
    },
    /// Compare the forest with a brute-force scan for a <= MAX_A.
    Verify {
        #[arg(long, value_parser = positive)]
        max_a: i128,
    },
}

fn positive(s: &str) -> Result<i128, String> {
    match s.parse::<i128>() {
        Ok(v) if v >= 1 => Ok(v),
        Ok(_) => Err("must be a positive integer".into()),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_path(s: &str) -> Result<PathCode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Parse `args` and run the command, writing data to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_NEGATIVE
        }
    }
}

fn execute(command: Command, out: &mut impl Write, err: &mut impl Write) -> io::Result<u8> {
    match command {
        Command::Check { a, b, c } => check(Triple::new(a, b, c), out),
        Command::Enumerate {
            max_a,
            format,
            include_twins,
            include_equilateral,
        } => {
            let nodes = enumerate_forest(max_a);
            match format {
                OutputFormat::Table => {
                    write_table(out, &records(&nodes, include_twins, include_equilateral))?
                }
                OutputFormat::Jsonl => {
                    write_jsonl(out, &records(&nodes, include_twins, include_equilateral))?
                }
                OutputFormat::Dot => write_dot(out, &nodes, include_equilateral)?,
            }
            Ok(EXIT_OK)
        }
        Command::Path { a, b, c } => match path_of_triple(&Triple::new(a, b, c)) {
            Ok(code) => {
                writeln!(out, "{code}")?;
                Ok(EXIT_OK)
            }
            Err(e) => {
                writeln!(err, "error: {e}")?;
                Ok(EXIT_NEGATIVE)
            }
        },
        Command::Locate { path } => match triple_of_path(&path) {
            Ok(node) => {
                writeln!(out, "path: {}", node.path)?;
                writeln!(out, "triple: {}", node.tree_triple)?;
                writeln!(out, "twin: {}", node.twin_triple)?;
                writeln!(out, "pair: n={} m={}", node.pair.n, node.pair.m)?;
                writeln!(out, "depth: {}", node.depth)?;
                Ok(EXIT_OK)
            }
            Err(e) => {
                writeln!(err, "error: {e}")?;
                Ok(EXIT_NEGATIVE)
            }
        },
        Command::Verify { max_a } => {
            if max_a < 7 {
                writeln!(
                    err,
                    "warning: no forest node has a < 7; the check is vacuous"
                )?;
            }
            let report = verify_bijection(max_a);
            if report.ok {
                writeln!(
                    out,
                    "OK: nodes={}, triples={}",
                    report.node_count, report.forest_count
                )?;
                return Ok(EXIT_OK);
            }
            writeln!(
                out,
                "FAIL: nodes={}, forest_triples={}, scan_triples={}, missing={}, duplicated={}, unexpected={}",
                report.node_count,
                report.forest_count,
                report.oracle_count,
                report.missing.len(),
                report.duplicated.len(),
                report.unexpected.len()
            )?;
            for (kind, list) in [
                ("missing", &report.missing),
                ("duplicated", &report.duplicated),
                ("unexpected", &report.unexpected),
            ] {
                for t in list.iter().take(10) {
                    writeln!(err, "{kind}: {t}")?;
                }
            }
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn check(t: Triple, out: &mut impl Write) -> io::Result<u8> {
    writeln!(out, "triple: {t}")?;
    if !is_eisenstein(&t) {
        writeln!(out, "status: not Eisensteinian")?;
        return Ok(EXIT_NEGATIVE);
    }
    if t.is_equilateral() {
        writeln!(out, "status: equilateral special case")?;
        return Ok(EXIT_OK);
    }
    let other = match twin(&t) {
        Ok(other) => other,
        Err(Error::NotPrimitive(_)) => {
            writeln!(out, "status: Eisensteinian but not primitive")?;
            return Ok(EXIT_NEGATIVE);
        }
        Err(Error::Unordered(_)) => {
            writeln!(out, "status: Eisensteinian but not ordered with b > c")?;
            return Ok(EXIT_NEGATIVE);
        }
        Err(e) => {
            writeln!(out, "status: {e}")?;
            return Ok(EXIT_NEGATIVE);
        }
    };
    writeln!(out, "status: primitive Eisensteinian")?;
    writeln!(out, "twin: {other}")?;
    match pair_from_triple(&t) {
        Ok((pair, form)) => {
            writeln!(out, "pair: n={} m={}", pair.n, pair.m)?;
            let form = match form {
                TwinForm::TreeForm => "tree",
                TwinForm::TwinOfTreeForm => "twin",
            };
            writeln!(out, "form: {form}")?;
        }
        Err(e) => writeln!(out, "pair: unavailable ({e})")?,
    }
    match path_of_triple(&t) {
        Ok(code) => writeln!(out, "path: {code}")?,
        Err(e) => writeln!(out, "path: unavailable ({e})")?,
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (u8, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("eisenforest").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn check_root() {
        let (code, out, _) = run_str(&["check", "7", "8", "5"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(
            out,
            "triple: (7,8,5)\nstatus: primitive Eisensteinian\ntwin: (7,8,3)\npair: n=1 m=2\nform: tree\npath: A\n"
        );
    }

    #[test]
    fn check_negative_cases() {
        let (code, out, _) = run_str(&["check", "3", "4", "5"]);
        assert_eq!(code, EXIT_NEGATIVE);
        assert!(out.contains("not Eisensteinian"));
        let (code, out, _) = run_str(&["check", "14", "16", "10"]);
        assert_eq!(code, EXIT_NEGATIVE);
        assert!(out.contains("not primitive"));
        let (code, out, _) = run_str(&["check", "7", "5", "8"]);
        assert_eq!(code, EXIT_NEGATIVE);
        assert!(out.contains("b > c"));
    }

    #[test]
    fn check_equilateral() {
        let (code, out, _) = run_str(&["check", "1", "1", "1"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("equilateral special case"));
    }

    #[test]
    fn usage_errors() {
        for args in [
            &["check", "7", "8"][..],
            &["check", "7", "8", "x"],
            &["check", "0", "8", "5"],
            &["enumerate", "--max-a", "0"],
            &["enumerate", "--max-a", "10", "--format", "xml"],
            &["enumerate"],
            &["locate", "C:1"],
            &["locate", "A:6"],
            &["frobnicate"],
        ] {
            assert_eq!(run_str(args).0, EXIT_USAGE, "{args:?}");
        }
        assert_eq!(run_str(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn path_and_locate() {
        assert_eq!(
            run_str(&["path", "49", "55", "39"]),
            (EXIT_OK, "B:5\n".into(), String::new())
        );
        assert_eq!(run_str(&["path", "37", "40", "7"]).1, "A:5.5\n");
        let (code, _, err) = run_str(&["path", "3", "4", "5"]);
        assert_eq!(code, EXIT_NEGATIVE);
        assert!(err.contains("not a tree-form node"));
        assert_eq!(run_str(&["path", "1", "1", "1"]).0, EXIT_NEGATIVE);

        let (code, out, _) = run_str(&["locate", "B:5"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(
            out,
            "path: B:5\ntriple: (49,55,39)\ntwin: (49,55,16)\npair: n=3 m=5\ndepth: 1\n"
        );
        assert!(run_str(&["locate", "A"]).1.contains("triple: (7,8,5)"));
    }

    #[test]
    fn locate_overflow_is_domain_error() {
        let deep = format!("A:{}", vec!["3"; 100].join("."));
        let (code, _, err) = run_str(&["locate", &deep]);
        assert_eq!(code, EXIT_NEGATIVE);
        assert!(err.contains("overflow"));
    }

    #[test]
    fn verify_reports() {
        assert_eq!(
            run_str(&["verify", "--max-a", "50"]).1,
            "OK: nodes=7, triples=14\n"
        );
        let (code, out, err) = run_str(&["verify", "--max-a", "3"]);
        assert_eq!((code, out.as_str()), (EXIT_OK, "OK: nodes=0, triples=0\n"));
        assert!(err.contains("warning"));
    }
}
