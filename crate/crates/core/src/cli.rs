//! Command-line front end. Exit codes: 0 success, 1 negative mathematical
//! result, 2 usage or input error.

use std::fs;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::Error;
use crate::matrix::{Matrix, MinorIndex};
use crate::normal::{
    counterexample, is_zero_square, normalize, obstruction_witness,
    verify_certificate, CertificateJson, SimilarityCertificate,
};
use crate::oracle::{compare_with_brute_force, write_corpus, GenConfig};
use crate::ring::Ring;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "zerosquare", version, about = "Similarity certificates for zero-square matrices")]
pub struct Cli {
    /// Ring selector: int, fp:<p> or nil16.
    #[arg(long, global = true)]
    ring: Option<String>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Output path, "-" for standard output.
    #[arg(long, global = true, default_value = "-")]
    out: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report zero-square, trace, determinant and minor diagnostics.
    Check {
        /// Matrix input path, "-" for standard input.
        #[arg(long = "in", default_value = "-")]
        input: String,
    },
    /// Emit a similarity certificate (sizes 2 and 3) or an obstruction.
    Normalize {
        #[arg(long = "in", default_value = "-")]
        input: String,
    },
    /// Check a certificate against a matrix.
    Verify {
        #[arg(long = "in", default_value = "-")]
        input: String,
        #[arg(long)]
        cert: String,
    },
    /// Write a JSON-lines corpus of random zero-square integer matrices.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        bound: i64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        steps: usize,
    },
    /// Print the padded 4x4 zero-square matrix of rank 2.
    Counterexample {
        #[arg(long)]
        n: usize,
    },
    /// Exhaustively compare normalization with brute-force search over F_p.
    Oracle {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: usize,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

struct Output {
    code: i32,
    json: Value,
    text: String,
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
}

impl Io<'_> {
    fn read(&mut self, path: &str) -> Result<String, Failure> {
        if path == "-" {
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| usage(format!("cannot read standard input: {e}")))?;
            Ok(s)
        } else {
            fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))
        }
    }
}

/// JSON if the text starts with `{`, otherwise the plain integer layout.
pub fn parse_matrix_input(text: &str, ring: Option<&str>) -> Result<Matrix, Error> {
    let requested: Option<Ring> = ring.map(str::parse).transpose()?;
    if text.trim_start().starts_with('{') {
        let m = Matrix::parse_json(text)?;
        if let Some(r) = requested {
            if r != m.ring() {
                return Err(Error::ContractViolation(format!(
                    "--ring {r} conflicts with the matrix ring {}",
                    m.ring()
                )));
            }
        }
        Ok(m)
    } else {
        if requested.is_some_and(|r| r != Ring::Int) {
            return Err(Error::ContractViolation(
                "the plain-text matrix format is only accepted for ring int".into(),
            ));
        }
        Matrix::parse_plain_int(text)
    }
}

fn minor_json(minor: MinorIndex, value: &crate::ring::Elem) -> Value {
    json!({
        "rows": [minor.rows.0, minor.rows.1],
        "cols": [minor.cols.0, minor.cols.1],
        "value": value.to_string(),
    })
}

fn cmd_check(t: &Matrix) -> Result<Output, Failure> {
    if !t.is_square() {
        return Err(usage(format!("check needs a square matrix, got {}x{}", t.rows(), t.cols())));
    }
    let ring = t.ring();
    let zero_square = is_zero_square(t)?;
    let trace_zero = ring.is_zero(&t.trace()?);
    let det_zero = t.det().ok().map(|d| ring.is_zero(&d));
    let witness = t.all_minors2_zero();
    let witness_json = witness.map(|m| minor_json(m, &t.minor2(m).expect("enumerated")));
    let mut text = format!(
        "zero_square: {zero_square}\ntrace_zero: {trace_zero}\ndet_zero: {}\nminors_all_zero: {}",
        det_zero.map_or("n/a".to_string(), |d| d.to_string()),
        witness.is_none()
    );
    if let Some(m) = witness {
        text.push_str(&format!("\nminor_witness: {m}"));
    }
    Ok(Output {
        code: if zero_square { EXIT_OK } else { EXIT_NEGATIVE },
        json: json!({
            "zero_square": zero_square,
            "trace_zero": trace_zero,
            "det_zero": det_zero,
            "minors_all_zero": witness.is_none(),
            "minor_witness": witness_json,
        }),
        text,
    })
}

fn certificate_text(cert: &SimilarityCertificate, verified: bool) -> String {
    format!(
        "r = {}\nU =\n{}\ndet(U) = {}\nverified: {verified}",
        cert.r, cert.u, cert.det_unit
    )
}

fn negative(json: Value, text: String) -> Output {
    Output {
        code: EXIT_NEGATIVE,
        json,
        text,
    }
}

fn cmd_normalize(t: &Matrix) -> Result<Output, Failure> {
    if !t.is_square() {
        return Err(usage(format!("normalize needs a square matrix, got {}x{}", t.rows(), t.cols())));
    }
    let n = t.rows();
    if !is_zero_square(t)? {
        return Ok(negative(
            json!({"error": "not-zero-square", "n": n}),
            "error: matrix is not zero-square".into(),
        ));
    }
    if n >= 4 {
        return match obstruction_witness(t)? {
            Some(w) => Ok(negative(
                json!({"error": "obstruction", "n": n, "witness": minor_json(w.minor, &w.value)}),
                format!(
                    "obstruction: minor {} = {} is nonzero, so the matrix is not similar to any multiple of E_1{n}",
                    w.minor, w.value
                ),
            )),
            None => Err(usage(format!(
                "normalization is only implemented for n = 2, 3; this {n}x{n} matrix has no rank obstruction"
            ))),
        };
    }
    if n < 2 {
        return Err(usage("normalization needs n = 2 or 3"));
    }
    let cert = normalize(t)?;
    let verified = verify_certificate(t, &cert).ok();
    Ok(Output {
        code: if verified { EXIT_OK } else { EXIT_NEGATIVE },
        json: serde_json::to_value(cert.to_json(verified)).expect("certificate serializes"),
        text: certificate_text(&cert, verified),
    })
}

fn cmd_verify(t: &Matrix, cert_text: &str) -> Result<Output, Failure> {
    let json: CertificateJson = serde_json::from_str(cert_text)
        .map_err(|e| Failure::from(Error::Parse {
            line: e.line(),
            column: e.column(),
            message: format!("certificate: {e}"),
        }))?;
    let cert = SimilarityCertificate::from_json(&json)?;
    if !t.is_square() || cert.n != t.rows() || cert.u.rows() != cert.n || cert.u.cols() != cert.n {
        return Err(usage(format!(
            "certificate for n = {} ({}x{} U) does not fit a {}x{} matrix",
            cert.n,
            cert.u.rows(),
            cert.u.cols(),
            t.rows(),
            t.cols()
        )));
    }
    if cert.u.ring() != t.ring() {
        return Err(usage(format!("certificate ring {} differs from matrix ring {}", cert.u.ring(), t.ring())));
    }
    let check = verify_certificate(t, &cert);
    let reason = check.reason.map(|r| r.as_str());
    Ok(Output {
        code: if check.ok() { EXIT_OK } else { EXIT_NEGATIVE },
        json: json!({"verified": check.ok(), "reason": reason}),
        text: match reason {
            None => "verified".into(),
            Some(r) => format!("rejected: {r}"),
        },
    })
}

fn cmd_oracle(p: u64, n: usize) -> Result<Output, Failure> {
    let s = compare_with_brute_force(p, n)?;
    Ok(Output {
        code: if s.mismatches == 0 { EXIT_OK } else { EXIT_NEGATIVE },
        json: serde_json::to_value(s).expect("summary serializes"),
        text: format!(
            "F_{p}, n = {n}: {} zero-square matrices, {} certificates verified, \
             {} brute-force witnesses, {} mismatches",
            s.zero_square_count, s.verified, s.oracle_witnesses, s.mismatches
        ),
    })
}

fn dispatch(cli: &Cli, io: &mut Io<'_>) -> Result<Output, Failure> {
    let ring = cli.ring.as_deref();
    match &cli.command {
        Command::Check { input } => cmd_check(&parse_matrix_input(&io.read(input)?, ring)?),
        Command::Normalize { input } => cmd_normalize(&parse_matrix_input(&io.read(input)?, ring)?),
        Command::Verify { input, cert } => {
            let t = parse_matrix_input(&io.read(input)?, ring)?;
            let cert_text = io.read(cert)?;
            cmd_verify(&t, &cert_text)
        }
        Command::Gen {
            n,
            bound,
            seed,
            count,
            steps,
        } => {
            let mut buf = Vec::new();
            write_corpus(GenConfig::new(*n, *bound, *seed, *steps), *count, &mut buf)?;
            let text = String::from_utf8(buf).expect("corpus is UTF-8");
            Ok(Output {
                code: EXIT_OK,
                json: Value::String(text.clone()),
                text,
            })
        }
        Command::Counterexample { n } => {
            let r: Ring = ring.unwrap_or("int").parse()?;
            let m = counterexample(r, *n)?;
            Ok(Output {
                code: EXIT_OK,
                json: serde_json::to_value(m.to_json()).expect("matrix serializes"),
                text: m.to_text(),
            })
        }
        Command::Oracle { p, n } => cmd_oracle(*p, *n),
    }
}

fn render(cli: &Cli, out: &Output) -> String {
    let body = match (&cli.command, cli.format) {
        // corpora are already line-oriented JSON
        (Command::Gen { .. }, _) => return out.text.clone(),
        (_, Format::Json) => out.json.to_string(),
        (_, Format::Text) => out.text.clone(),
    };
    body + "\n"
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code. Diagnostics go to `stderr`.
pub fn run<I, S>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let mut io = Io { stdin };
    match dispatch(&cli, &mut io) {
        Ok(out) => {
            let rendered = render(&cli, &out);
            let written = if cli.out == "-" {
                stdout.write_all(rendered.as_bytes()).map_err(|e| e.to_string())
            } else {
                fs::write(&cli.out, rendered).map_err(|e| e.to_string())
            };
            match written {
                Ok(()) => out.code,
                Err(e) => {
                    let _ = writeln!(stderr, "error: cannot write {}: {e}", cli.out);
                    EXIT_USAGE
                }
            }
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}
