use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use quandle_core::cohomology::{cohomology, Theory};
use quandle_core::knots::{self, named_knot, BraidWord};
use quandle_core::surfaces::{self, builtin_presets, preset};
use quandle_core::{Coefficients, Quandle, SurfaceBraidPresentation};
use quandle_lab::json::{CohomologyJson, InvariantReport, PresentationJson, QuandleJson};
use quandle_lab::names::{builtin_quandles, parse_coefficients, resolve_cocycle, resolve_quandle};
use quandle_lab::{parallel, read_file, reproduce, LabError};

/// Quandle cohomology and cocycle state-sum invariants of braid closures
/// and knotted surfaces.
#[derive(Parser)]
#[command(name = "quandle-lab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List, validate or print quandles.
    Quandle {
        #[command(subcommand)]
        action: QuandleAction,
    },
    /// Cohomology group of a quandle, as JSON.
    Cohomology {
        #[arg(long)]
        quandle: String,
        #[arg(long)]
        degree: usize,
        /// R (rack), D (degenerate) or Q (quandle).
        #[arg(long, default_value = "Q")]
        theory: String,
        /// Z, Z<m>, or Q for the rational rank.
        #[arg(long, default_value = "Z")]
        coeff: String,
        /// Include a cocycle representative for each summand.
        #[arg(long)]
        representatives: bool,
    },
    /// State-sum of a braid closure with a 2-cocycle.
    Knot {
        /// Signed letters such as "1 1 1" or "1 -2 1 -2", or a knot name (3_1, 4_1, 5_1, 5_2, hopf).
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
        /// Strand count; defaults to the largest letter plus one.
        #[arg(long)]
        strands: Option<usize>,
        #[command(flatten)]
        invariant: InvariantArgs,
    },
    /// State-sum of a knotted surface with a 3-cocycle.
    Surface {
        /// TWIST_SPUN_TREFOIL or TWIST_SPUN_TREFOIL_REVERSED.
        #[arg(long, conflicts_with = "presentation", required_unless_present = "presentation")]
        preset: Option<String>,
        /// Presentation JSON file.
        #[arg(long)]
        presentation: Option<String>,
        #[command(flatten)]
        invariant: InvariantArgs,
    },
    /// Recompute every published value and print PASS/FAIL per row.
    Reproduce,
}

#[derive(Subcommand)]
enum QuandleAction {
    /// Built-in quandle names.
    List,
    /// Validate a JSON table {"n": .., "op": [[..]]}.
    Check { file: String },
    /// Print the operation table.
    Show {
        name: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct InvariantArgs {
    #[arg(long)]
    quandle: String,
    /// Built-in name (eta1, phi_S4, lambda1, lambda2, phi_alex, zero, chi(x,y[,z])) or JSON file.
    #[arg(long)]
    cocycle: String,
    /// Coefficient group; defaults to the cocycle's own.
    #[arg(long)]
    coeff: Option<String>,
    /// Report elapsed time.
    #[arg(long)]
    timing: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(command: Command) -> Result<u8, LabError> {
    match command {
        Command::Quandle { action } => quandle_cmd(action),
        Command::Cohomology {
            quandle,
            degree,
            theory,
            coeff,
            representatives,
        } => cohomology_cmd(&quandle, degree, &theory, &coeff, representatives),
        Command::Knot { braid, strands, invariant } => knot_cmd(&braid, strands, &invariant),
        Command::Surface {
            preset,
            presentation,
            invariant,
        } => surface_cmd(preset.as_deref(), presentation.as_deref(), &invariant),
        Command::Reproduce => Ok(reproduce_cmd()),
    }
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<(), LabError> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn table_text(x: &Quandle) -> String {
    let width = (0..x.len()).map(|a| x.label(a).len()).max().unwrap_or(1);
    let mut out = format!("{:>width$} |", "*");
    for b in 0..x.len() {
        out += &format!(" {:>width$}", x.label(b));
    }
    out += &format!("\n{}\n", "-".repeat(out.len()));
    for a in 0..x.len() {
        out += &format!("{:>width$} |", x.label(a));
        for b in 0..x.len() {
            out += &format!(" {:>width$}", x.label(x.op(a, b)));
        }
        out.push('\n');
    }
    out
}

fn quandle_cmd(action: QuandleAction) -> Result<u8, LabError> {
    match action {
        QuandleAction::List => {
            let rows = builtin_quandles();
            let width = rows.iter().map(|(n, _)| n.len()).max().unwrap_or(0);
            for (name, description) in rows {
                let order = resolve_quandle(name)?.len();
                println!("{name:<width$}  {order:>3}  {description}");
            }
            println!("{:<width$}       conjugation quandle, G in Z<n>, S<k>, GxH", "Conj(G,k)");
            Ok(0)
        }
        QuandleAction::Check { file } => {
            let j: QuandleJson = serde_json::from_str(&read_file(&file)?)?;
            let x = j.to_quandle()?;
            println!("ok: quandle of order {}", x.len());
            Ok(0)
        }
        QuandleAction::Show { name, json } => {
            let x = resolve_quandle(&name)?;
            if json {
                print_json(&QuandleJson::from_quandle(&x))?;
            } else {
                print!("{}", table_text(&x));
            }
            Ok(0)
        }
    }
}

fn parse_theory(s: &str) -> Result<Theory, LabError> {
    match s {
        "R" => Ok(Theory::Rack),
        "D" => Ok(Theory::Degenerate),
        "Q" => Ok(Theory::Quandle),
        _ => Err(LabError::Usage(format!("theory must be R, D or Q, got {s:?}"))),
    }
}

fn cohomology_cmd(name: &str, degree: usize, theory: &str, coeff: &str, reps: bool) -> Result<u8, LabError> {
    let x = resolve_quandle(name)?;
    let theory = parse_theory(theory)?;
    if degree == 0 {
        return Err(LabError::Usage("degree must be at least 1".into()));
    }
    let report = if coeff.trim() == "Q" {
        CohomologyJson::rational(name, &cohomology(&x, degree, theory, Coefficients::Integers)?)
    } else {
        CohomologyJson::new(name, &cohomology(&x, degree, theory, parse_coefficients(coeff)?)?, reps)
    };
    print_json(&report)?;
    Ok(0)
}

fn coefficient_override(args: &InvariantArgs) -> Result<Option<Coefficients>, LabError> {
    args.coeff.as_deref().map(parse_coefficients).transpose()
}

fn finish(mut report: InvariantReport, started: Instant, timing: bool) -> Result<u8, LabError> {
    if timing {
        report.elapsed_ms = Some(started.elapsed().as_secs_f64() * 1000.0);
    }
    print_json(&report)?;
    Ok(0)
}

fn knot_cmd(braid: &str, strands: Option<usize>, args: &InvariantArgs) -> Result<u8, LabError> {
    let started = Instant::now();
    let b = match BraidWord::parse(braid, strands) {
        Ok(b) => b,
        Err(e) => match named_knot(braid.trim()) {
            Some(b) if strands.is_none() => b,
            _ => return Err(e.into()),
        },
    };
    let x = resolve_quandle(&args.quandle)?;
    let phi = resolve_cocycle(&args.cocycle, &x, 2, coefficient_override(args)?)?;
    knots::check_state_sum_inputs(&x, &phi)?;
    let value = parallel::knot_state_sum(&b, &x, &phi)?;
    let input = format!("braid [{b}] on {} strands", b.strands());
    let report = InvariantReport::new(input, &args.quandle, &args.cocycle, phi.coefficients(), &value);
    finish(report, started, args.timing)
}

fn surface_cmd(name: Option<&str>, file: Option<&str>, args: &InvariantArgs) -> Result<u8, LabError> {
    let started = Instant::now();
    let (input, p): (String, SurfaceBraidPresentation) = match (name, file) {
        (Some(n), _) => {
            let p = preset(n).ok_or_else(|| {
                let known: Vec<&str> = builtin_presets().iter().map(|(k, _)| *k).collect();
                LabError::Usage(format!("unknown preset {n:?}; known: {}", known.join(", ")))
            })?;
            (format!("preset {n}"), p)
        }
        (None, Some(f)) => {
            let j: PresentationJson = serde_json::from_str(&read_file(f)?)?;
            (format!("presentation {f}"), j.to_presentation()?)
        }
        (None, None) => return Err(LabError::Usage("give --preset or --presentation".into())),
    };
    let x = resolve_quandle(&args.quandle)?;
    let theta = resolve_cocycle(&args.cocycle, &x, 3, coefficient_override(args)?)?;
    surfaces::check_surface_inputs(&x, &theta)?;
    let value = parallel::surface_state_sum(&p, &x, &theta)?;
    let report = InvariantReport::new(input, &args.quandle, &args.cocycle, theta.coefficients(), &value);
    finish(report, started, args.timing)
}

fn reproduce_cmd() -> u8 {
    let mut failed = false;
    for outcome in reproduce::run_all() {
        failed |= !outcome.passed();
        println!("{outcome}");
    }
    if failed {
        3
    } else {
        0
    }
}
