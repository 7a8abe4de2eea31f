//! `ga41`: evaluate multivector expressions, reproduce the quantum-number
//! table, dump the generator sets, check plane-wave residuals, and run the
//! verification suites.
//!
//! Exit codes: 0 on success (and all checks passing), 1 when a verification
//! suite fails, 2 on usage errors (including expression syntax errors).

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ga41::expr;
use ga41::generators::{
    idempotents_from_pair, structure_constants, su3_alpha, su3_lambda, su4_extension, su4_full,
    CommutingPair, GeneratorSet,
};
use ga41::multivector::Multivector;
use ga41::rep::rep;
use ga41::spectrum::{table_emit, TableFormat};
use ga41::verify;
use ga41::wave::{
    commutes_with, dirac_residual, gauge_residual, monogenic_residual, numeric_vector_derivative,
    wave_residual, Branch, FiveMomentum, GaugePotential, PlaneWave,
};

#[derive(Parser)]
#[command(
    name = "ga41",
    about = "Verification engine for the geometric algebra of 4+1 spacetime",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a multivector expression.
    Eval(EvalArgs),
    /// Emit the sixteen-row unitary-element table with quantum numbers.
    Table(TableArgs),
    /// Emit generator sets, their matrices, and structure constants.
    Generators(GeneratorArgs),
    /// Check the residuals of a plane wave.
    Wave(WaveArgs),
    /// Run the verification suites.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct EvalArgs {
    /// Expression, e.g. "0.25*(1+e023)*(1+e014)".
    expression: String,
    /// Also print the 4x4 complex matrix image.
    #[arg(long)]
    rep: bool,
    /// Machine-readable output.
    #[arg(long)]
    json: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Csv,
    Json,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
    /// Write to a file (atomically) instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Group {
    /// lambda1..lambda8 (Gell-Mann block).
    Lambda,
    /// lambda9..lambda15 (su(4) extension; structure constants use all 15).
    Su4,
    /// alpha1..alpha8 (the independent second su(3)).
    Alpha,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum GeneratorFormat {
    Text,
    Json,
}

#[derive(Args)]
struct GeneratorArgs {
    #[arg(long, value_enum, default_value = "lambda")]
    group: Group,
    /// Include the 4x4 matrix image of each generator.
    #[arg(long)]
    matrices: bool,
    /// Include the nonzero structure constants of the group.
    #[arg(long)]
    structure_constants: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: GeneratorFormat,
}

#[derive(Args)]
struct WaveArgs {
    /// Five-momentum "p0,p1,p2,p3,p4" (energy, wave vector, rest mass).
    #[arg(long, allow_hyphen_values = true)]
    p: String,
    /// Exponent sign branch for the time term.
    #[arg(long, default_value = "+", allow_hyphen_values = true)]
    branch: String,
    /// Imaginary unit as an expression; must square to -1.
    #[arg(long, default_value = "i")]
    u: String,
    /// Constant gauge potential "A0,A1,A2,A3".
    #[arg(long = "A", alias = "a", allow_hyphen_values = true)]
    a: Option<String>,
    /// Cross-check with a central-difference stencil at this step.
    #[arg(long)]
    numeric_check: Option<f64>,
}

#[derive(Args)]
struct VerifyArgs {
    /// core | rep | symmetry | spectrum | monogenic | all
    #[arg(long, default_value = "all")]
    suite: String,
    /// Machine-readable report.
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Eval(args) => cmd_eval(args),
        Command::Table(args) => cmd_table(args),
        Command::Generators(args) => cmd_generators(args),
        Command::Wave(args) => cmd_wave(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match outcome {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn parse_expression(src: &str) -> Result<Multivector, String> {
    let ast = expr::parse(src).map_err(|e| e.to_string())?;
    expr::eval(&ast).map_err(|e| e.to_string())
}

fn cmd_eval(args: EvalArgs) -> Result<ExitCode, String> {
    let value = parse_expression(&args.expression)?;
    let matrix = args.rep.then(|| rep(&value));
    if args.json {
        let mut coefficients = serde_json::Map::new();
        for (blade, coeff) in value.nonzero() {
            coefficients.insert(blade.symbol(), serde_json::json!(coeff));
        }
        let mut doc = serde_json::json!({
            "schema": 1,
            "text": expr::format_multivector(&value),
            "coefficients": coefficients,
        });
        if let Some(m) = matrix {
            doc["rep"] = m.to_json();
        }
        println!(
            "{}",
            serde_json::to_string_pretty(&doc).expect("serializes")
        );
    } else {
        println!("{}", expr::format_multivector(&value));
        if let Some(m) = matrix {
            print!("{}", m.format_text());
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Write through a temporary file in the destination directory, then rename.
fn write_atomic(path: &Path, contents: &str) -> Result<(), String> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    let tmp = dir
        .unwrap_or_else(|| Path::new("."))
        .join(format!(".ga41-{}.tmp", std::process::id()));
    let mut file = std::fs::File::create(&tmp).map_err(|e| format!("{}: {e}", tmp.display()))?;
    file.write_all(contents.as_bytes())
        .and_then(|_| file.sync_all())
        .map_err(|e| format!("{}: {e}", tmp.display()))?;
    drop(file);
    std::fs::rename(&tmp, path).map_err(|e| {
        let _ = std::fs::remove_file(&tmp);
        format!("{}: {e}", path.display())
    })
}

fn cmd_table(args: TableArgs) -> Result<ExitCode, String> {
    let format = match args.format {
        OutputFormat::Text => TableFormat::Text,
        OutputFormat::Csv => TableFormat::Csv,
        OutputFormat::Json => TableFormat::Json,
    };
    let document = table_emit(format);
    match args.out {
        Some(path) => write_atomic(&path, &document)?,
        None => print!("{document}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn generator_set(group: Group) -> GeneratorSet {
    let quartet =
        idempotents_from_pair(&CommutingPair::canonical()).expect("canonical quartet is valid");
    match group {
        Group::Lambda => su3_lambda(&quartet).expect("lambda set"),
        Group::Su4 => su4_extension(&quartet).expect("extension set"),
        Group::Alpha => su3_alpha(),
    }
}

/// The basis a group's structure constants are computed over. The su(4)
/// extension alone does not close, so its constants run over all fifteen.
fn structure_basis(group: Group) -> (Vec<Multivector>, Vec<String>) {
    match group {
        Group::Su4 => {
            let elements = su4_full();
            let labels = (1..=15).map(|k| format!("lambda{k}")).collect();
            (elements, labels)
        }
        _ => {
            let set = generator_set(group);
            let labels = (0..set.elements().len()).map(|k| set.label(k)).collect();
            (set.elements().to_vec(), labels)
        }
    }
}

fn cmd_generators(args: GeneratorArgs) -> Result<ExitCode, String> {
    let set = generator_set(args.group);
    let constants = if args.structure_constants {
        let (elements, labels) = structure_basis(args.group);
        let f = structure_constants(&elements).map_err(|e| e.to_string())?;
        Some((f, labels))
    } else {
        None
    };

    match args.format {
        GeneratorFormat::Text => {
            for (k, g) in set.elements().iter().enumerate() {
                println!("{} = {}", set.label(k), expr::format_multivector(g));
                if args.matrices {
                    print!("{}", rep(g).format_text());
                }
            }
            if let Some((f, labels)) = constants {
                println!("structure constants (a < b < c, nonzero):");
                for (a, b, c, value) in f.nonzero_entries(1e-9) {
                    if c > b {
                        println!(
                            "f({}, {}, {}) = {}",
                            labels[a - 1],
                            labels[b - 1],
                            labels[c - 1],
                            value
                        );
                    }
                }
            }
        }
        GeneratorFormat::Json => {
            let generators: Vec<serde_json::Value> = set
                .elements()
                .iter()
                .enumerate()
                .map(|(k, g)| {
                    let mut blades = serde_json::Map::new();
                    for (blade, coeff) in g.nonzero() {
                        blades.insert(blade.symbol(), serde_json::json!(coeff));
                    }
                    let mut entry = serde_json::json!({
                        "label": set.label(k),
                        "blades": blades,
                    });
                    if args.matrices {
                        entry["matrix"] = rep(g).to_json();
                    }
                    entry
                })
                .collect();
            let mut doc = serde_json::json!({ "schema": 1, "generators": generators });
            if let Some((f, labels)) = constants {
                let entries: Vec<serde_json::Value> = f
                    .nonzero_entries(1e-9)
                    .into_iter()
                    .filter(|&(_, b, c, _)| c > b)
                    .map(|(a, b, c, value)| {
                        serde_json::json!({
                            "a": labels[a - 1],
                            "b": labels[b - 1],
                            "c": labels[c - 1],
                            "value": value,
                        })
                    })
                    .collect();
                doc["structure_constants"] = serde_json::json!(entries);
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("serializes")
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_components<const N: usize>(src: &str, what: &str) -> Result<[f64; N], String> {
    let parts: Vec<&str> = src.split(',').collect();
    if parts.len() != N {
        return Err(format!("{what} needs {N} comma-separated components"));
    }
    let mut out = [0.0; N];
    for (slot, part) in out.iter_mut().zip(parts.iter()) {
        *slot = part
            .trim()
            .parse()
            .map_err(|e| format!("{what}: bad component `{part}`: {e}"))?;
    }
    Ok(out)
}

fn cmd_wave(args: WaveArgs) -> Result<ExitCode, String> {
    let components: [f64; 5] = parse_components(&args.p, "--p")?;
    let momentum = FiveMomentum { components };
    let branch = match args.branch.as_str() {
        "+" => Branch::Plus,
        "-" => Branch::Minus,
        other => return Err(format!("--branch must be + or -, got `{other}`")),
    };
    let unit = parse_expression(&args.u)?;
    let wave = PlaneWave::monogenic(momentum, branch, unit).map_err(|e| e.to_string())?;

    println!(
        "p = ({}, {}, {}, {}, {})",
        components[0], components[1], components[2], components[3], components[4]
    );
    println!("branch: {}", args.branch);
    println!("u = {}", expr::format_multivector(&wave.imaginary));
    println!(
        "on-shell: {} (shell residual {:e})",
        momentum.is_on_shell(),
        momentum.shell_residual()
    );
    println!("amplitude = {}", expr::format_multivector(&wave.amplitude));
    println!(
        "u commutes with amplitude: {}",
        commutes_with(&wave.imaginary, &wave.amplitude)
    );

    let first_order = monogenic_residual(&wave);
    println!(
        "monogenic residual: {} (max |coeff| {:e})",
        expr::format_multivector(&first_order),
        first_order.max_abs_coeff()
    );
    println!("wave residual: {:e}", wave_residual(&wave));
    let dirac = dirac_residual(&wave);
    println!(
        "dirac residual: {} (max |coeff| {:e})",
        expr::format_multivector(&dirac),
        dirac.max_abs_coeff()
    );

    if let Some(potential) = &args.a {
        let a: [f64; 4] = parse_components(potential, "--A")?;
        let potential = GaugePotential { components: a };
        let residual = gauge_residual(&wave, &potential).map_err(|e| e.to_string())?;
        println!(
            "gauge residual (A = {},{},{},{}): {} (max |coeff| {:e})",
            a[0],
            a[1],
            a[2],
            a[3],
            expr::format_multivector(&residual),
            residual.max_abs_coeff()
        );
        let grades = residual.grades_present(1e-9);
        println!("gauge residual grades: {grades:?}");
    }

    if let Some(h) = args.numeric_check {
        if !(h.is_finite() && h > 0.0) {
            return Err("--numeric-check step must be positive".into());
        }
        let x = [0.21, -0.37, 0.11, 0.53, -0.29];
        let field = |y: &[f64; 5]| wave.evaluate(y);
        let coarse = numeric_vector_derivative(field, &x, h).max_abs_coeff();
        let fine = numeric_vector_derivative(field, &x, h / 2.0).max_abs_coeff();
        println!("numeric stencil residual (h = {h:e}): {coarse:e}");
        println!("numeric stencil residual (h/2):     {fine:e}");
        if fine > 0.0 {
            println!("refinement ratio: {:.3}", coarse / fine);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let report = verify::suite_by_name(&args.suite).ok_or_else(|| {
        format!(
            "unknown suite `{}`; pick one of core, rep, symmetry, spectrum, monogenic, all",
            args.suite
        )
    })?;
    if args.json {
        print!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    Ok(if report.overall_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
