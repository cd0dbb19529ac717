//! Command-line front end: parse an ideal file, run the requested pipeline,
//! and print a deterministic report.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pommaret_core::invariants::{hilbert_function, hilbert_polynomial, hilbert_series};
use pommaret_core::report::{
    bound_report_value, basis_value, gb_value, hilbert_polynomial_value, input_value, render,
    series_value, transform_value, verify_value,
};
use pommaret_core::{
    analyze, bound_report, buchberger, ideal_membership, monomial_ideal_input, parse_ideal,
    parse_polynomial, random_linear_transform, random_quasi_stable_ideal, verify_input,
    DegreeSequence, Error, Exp, IdealInput, ReportFormat, SplitMix64, VerifyReport,
};

/// Hilbert function values are tabulated, and oracle comparisons run, this
/// many degrees past the regularity.
const ORACLE_EXTRA_DEGREES: Exp = 3;
/// Variable and degree limits for `verify --random` ideals.
const RANDOM_MAX_VARS: usize = 5;
const RANDOM_MAX_DEGREE: Exp = 6;

#[derive(Parser)]
#[command(name = "pommaret", version, about = "Pommaret bases and ideal invariants over Q")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

#[derive(Args)]
struct Common {
    /// Seed for the quasi-stable transform sampler
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Transform attempts before giving up
    #[arg(long = "max-tries", default_value_t = 8)]
    max_tries: u32,
    /// Output format
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Groebner basis, with an optional membership test
    Gb {
        file: PathBuf,
        /// Polynomial whose ideal membership is decided
        #[arg(long)]
        member: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Pommaret basis after the quasi-stable transform
    Pommaret {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Dimension, degree, regularity, depth, satiety, series, polynomial
    Invariants {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Hilbert series, polynomial, and function table
    Hilbert {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Degree bounds compared against the true degree
    Bounds {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Linear change of variables reaching quasi-stable position
    Transform {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Cross-validation suite on the input and optional random ideals
    Verify {
        file: PathBuf,
        /// Additionally verify this many seeded random quasi-stable ideals
        #[arg(long)]
        random: Option<u64>,
        /// Mark the report as expecting failures (exit code is unchanged)
        #[arg(long = "expect-fail")]
        expect_fail: bool,
        #[command(flatten)]
        common: Common,
    },
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Gb { common, .. }
            | Command::Pommaret { common, .. }
            | Command::Invariants { common, .. }
            | Command::Hilbert { common, .. }
            | Command::Bounds { common, .. }
            | Command::Transform { common, .. }
            | Command::Verify { common, .. } => common,
        }
    }
}

struct Fail {
    code: u8,
    kind: String,
    message: String,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let (code, kind) = match &e {
            Error::Parse { .. } => (2, "parse"),
            Error::NonHomogeneous { .. } => (2, "non-homogeneous"),
            Error::ZeroGenerator { .. } => (2, "zero-generator"),
            Error::ConstantGenerator { .. } => (2, "constant-generator"),
            Error::EmptyGeneratorList => (2, "empty-generator-list"),
            Error::ImproperIdeal => (3, "improper-ideal"),
            Error::NotQuasiStable { .. } => (3, "not-quasi-stable"),
            Error::DegreeHypothesis { .. } => (3, "degree-hypothesis"),
            Error::DimensionHypothesis { .. } => (3, "dimension-hypothesis"),
            Error::NonConstantWindow { .. } => (3, "non-constant-window"),
            Error::UnboundedSupport { .. } => (3, "unbounded-support"),
            Error::TransformExhausted { .. } => (5, "transform-exhausted"),
        };
        Fail {
            code,
            kind: kind.into(),
            message: e.to_string(),
        }
    }
}

struct Output {
    value: Value,
    code: u8,
}

fn read_input(path: &Path) -> Result<IdealInput, Fail> {
    let text = std::fs::read_to_string(path).map_err(|e| Fail {
        code: 1,
        kind: "io".into(),
        message: format!("{}: {e}", path.display()),
    })?;
    Ok(parse_ideal(&text)?)
}

fn run(command: &Command) -> Result<Output, Fail> {
    let common = command.common();
    let value = match command {
        Command::Gb { file, member, .. } => {
            let input = read_input(file)?;
            let gb = buchberger(&input.generators)?;
            let mut report = json!({
                "command": "gb",
                "input": input_value(&input),
                "groebner": gb_value(&gb, &input.context),
            });
            if let Some(text) = member {
                let f = parse_polynomial(text, &input.context)?;
                report["membership"] = json!({
                    "polynomial": f.display(&input.context).to_string(),
                    "in_ideal": ideal_membership(&f, &gb),
                });
            }
            report
        }
        Command::Pommaret { file, .. } => {
            let input = read_input(file)?;
            let a = analyze(&input, common.seed, common.max_tries)?;
            json!({
                "command": "pommaret",
                "input": input_value(&input),
                "transform": transform_value(&a.transform),
                "basis": basis_value(&a.basis, &a.input.context),
            })
        }
        Command::Invariants { file, .. } => {
            let input = read_input(file)?;
            let a = analyze(&input, common.seed, common.max_tries)?;
            let series = hilbert_series(&a.basis);
            let hp = hilbert_polynomial(&a.basis);
            json!({
                "command": "invariants",
                "input": input_value(&input),
                "transform": transform_value(&a.transform),
                "invariants": pommaret_core::report::invariants_value(&a.invariants),
                "series": series_value(&series),
                "hilbert_polynomial": hilbert_polynomial_value(&hp),
            })
        }
        Command::Hilbert { file, .. } => {
            let input = read_input(file)?;
            let a = analyze(&input, common.seed, common.max_tries)?;
            let series = hilbert_series(&a.basis);
            let hp = hilbert_polynomial(&a.basis);
            let top = a.invariants.regularity + ORACLE_EXTRA_DEGREES;
            let values: Vec<u64> = (0..=top).map(|t| hilbert_function(&a.basis, t)).collect();
            json!({
                "command": "hilbert",
                "input": input_value(&input),
                "transform": transform_value(&a.transform),
                "series": series_value(&series),
                "hilbert_polynomial": hilbert_polynomial_value(&hp),
                "function": { "from_degree": 0, "through_degree": top, "values": values },
            })
        }
        Command::Bounds { file, .. } => {
            let input = read_input(file)?;
            let a = analyze(&input, common.seed, common.max_tries)?;
            let ds = DegreeSequence::new(input.degrees(), input.nvars());
            let report = bound_report(&a.invariants, &ds);
            json!({
                "command": "bounds",
                "input": input_value(&input),
                "transform": transform_value(&a.transform),
                "bounds": bound_report_value(&report),
            })
        }
        Command::Transform { file, .. } => {
            let input = read_input(file)?;
            let r = random_linear_transform(&input, common.seed, common.max_tries)?;
            json!({
                "command": "transform",
                "input": input_value(&input),
                "transform": transform_value(&r),
                "groebner_max_degree": r.gb.max_degree(),
            })
        }
        Command::Verify {
            file,
            random,
            expect_fail,
            ..
        } => {
            let input = read_input(file)?;
            let label = file.display().to_string();
            let mut reports: Vec<VerifyReport> = vec![verify_input(
                &label,
                &input,
                common.seed,
                common.max_tries,
                ORACLE_EXTRA_DEGREES,
            )?];
            if let Some(count) = random {
                let mut rng = SplitMix64::new(common.seed);
                for k in 0..*count {
                    let j = random_quasi_stable_ideal(&mut rng, RANDOM_MAX_VARS, RANDOM_MAX_DEGREE);
                    let rinput = monomial_ideal_input(&j);
                    let rlabel = format!("random-{}-{k}", common.seed);
                    reports.push(verify_input(
                        &rlabel,
                        &rinput,
                        common.seed,
                        common.max_tries,
                        ORACLE_EXTRA_DEGREES,
                    )?);
                }
            }
            let passed = reports.iter().all(|r| r.all_passed());
            let mut value = verify_value(&reports);
            value["command"] = json!("verify");
            if *expect_fail {
                value["expected_failure"] = json!(true);
            }
            if let Some((target, check)) = reports
                .iter()
                .find_map(|r| r.first_failure().map(|c| (&r.target, c)))
            {
                value["first_failure"] = json!(format!("{target}: {}", check.name));
            }
            return Ok(Output {
                value,
                code: if passed { 0 } else { 4 },
            });
        }
    };
    Ok(Output { value, code: 0 })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = u8::from(e.use_stderr());
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let format = match cli.command.common().format {
        FormatArg::Json => ReportFormat::Json,
        FormatArg::Text => ReportFormat::Text,
    };
    match run(&cli.command) {
        Ok(out) => {
            print!("{}", render(&out.value, format));
            ExitCode::from(out.code)
        }
        Err(fail) => {
            let value = json!({
                "error": { "kind": fail.kind, "message": fail.message },
            });
            match format {
                ReportFormat::Json => print!("{}", render(&value, format)),
                ReportFormat::Text => eprintln!("error: {}", fail.message),
            }
            ExitCode::from(fail.code)
        }
    }
}
