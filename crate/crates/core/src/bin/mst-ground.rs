use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use mst_ground::config::{self, SimulationConfig, PRESETS};
use mst_ground::mst::Problem;
use mst_ground::output::write_spectrum;
use mst_ground::sweep::{convergence_check, find_extrema, run_sweep, ExtremumKind, ILSpectrum};
use mst_ground::Error;

/// Insertion-loss spectra of cylinder arrays above rigid or impedance ground.
#[derive(Parser)]
#[command(name = "mst-ground", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a frequency sweep and write the spectrum table.
    Run {
        #[command(flatten)]
        source: ConfigSource,
        /// Spectrum file (defaults to the config's output.path, else stdout).
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        exec: Execution,
    },
    /// Compare a rigid-ground run with its doubled array in the free field.
    Compare {
        #[command(flatten)]
        source: ConfigSource,
        #[command(flatten)]
        exec: Execution,
    },
    /// Print the resolved configuration as TOML.
    Show {
        #[command(flatten)]
        source: ConfigSource,
    },
    /// List the built-in presets.
    Presets,
}

#[derive(Args)]
struct ConfigSource {
    /// TOML configuration file.
    #[arg(short, long, conflicts_with = "preset", required_unless_present = "preset")]
    config: Option<PathBuf>,
    /// Built-in preset name (see `presets`).
    #[arg(short, long)]
    preset: Option<String>,
    /// Override a field, e.g. `--set frequencies.count=64`.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    overrides: Vec<String>,
}

impl ConfigSource {
    fn load(&self) -> Result<SimulationConfig, Error> {
        let config = match (&self.config, &self.preset) {
            (Some(path), _) => config::load_config(path)?,
            (None, Some(name)) => config::preset(name)?,
            (None, None) => unreachable!("clap requires one source"),
        };
        Ok(config.with_overrides(&self.overrides)?)
    }
}

#[derive(Args)]
struct Execution {
    /// Worker threads (default: all cores).
    #[arg(short = 'j', long, env = "MST_GROUND_THREADS")]
    threads: Option<usize>,
    /// Abort on the first frequency that fails to solve.
    #[arg(long)]
    fail_fast: bool,
}

fn summarize(out: &mut dyn Write, spectrum: &ILSpectrum) -> io::Result<()> {
    let failures: Vec<_> = spectrum.failures().collect();
    writeln!(
        out,
        "{} frequencies ({} refined), {} failed",
        spectrum.len(),
        spectrum.refined_count(),
        failures.len()
    )?;
    for f in failures.iter().take(10) {
        writeln!(
            out,
            "  failed at {:.3} Hz: {}",
            f.frequency_hz,
            f.error.as_deref().unwrap_or("")
        )?;
    }
    if let Some(best) = spectrum.max_il() {
        writeln!(out, "max IL {:.3} dB at {:.2} Hz", best.il_db, best.frequency_hz)?;
    }
    let (Some(first), Some(last)) = (spectrum.entries.first(), spectrum.entries.last()) else {
        return Ok(());
    };
    let Ok(extrema) = find_extrema(spectrum, first.frequency_hz, last.frequency_hz) else {
        return Ok(());
    };
    let mut peaks: Vec<_> = extrema.iter().filter(|e| e.kind == ExtremumKind::Peak).collect();
    let mut dips: Vec<_> = extrema.iter().filter(|e| e.kind == ExtremumKind::Dip).collect();
    peaks.sort_by(|a, b| b.il_db.total_cmp(&a.il_db));
    dips.sort_by(|a, b| a.il_db.total_cmp(&b.il_db));
    let mut shown: Vec<_> = peaks.into_iter().take(6).chain(dips.into_iter().take(6)).collect();
    shown.sort_by(|a, b| a.frequency_hz.total_cmp(&b.frequency_hz));
    writeln!(out, "{:>6}  {:>12}  {:>10}", "kind", "frequency_hz", "il_db")?;
    for e in shown {
        let kind = match e.kind {
            ExtremumKind::Peak => "peak",
            ExtremumKind::Dip => "dip",
        };
        writeln!(out, "{kind:>6}  {:>12.2}  {:>10.3}", e.frequency_hz, e.il_db)?;
    }
    Ok(())
}

fn run(source: &ConfigSource, output: Option<PathBuf>, exec: &Execution) -> Result<(), Error> {
    let config = source.load()?;
    let problem = config.problem()?;
    let mut options = config.sweep_options();
    options.threads = exec.threads;
    options.fail_fast = exec.fail_fast;
    let destination = output.or(config.output.path.clone());
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut summary: Box<dyn Write> = if destination.is_some() {
        Box::new(stdout.lock())
    } else {
        Box::new(stderr.lock())
    };
    if config.solver.convergence_check {
        let worst = convergence_check(&problem, &config.frequencies, options.truncation, 5)?;
        writeln!(
            summary,
            "convergence: max |IL(N={}) - IL(N={})| = {:.3e} dB over 5 probes",
            options.truncation.0,
            options.truncation.0 + 2,
            worst
        )?;
    }
    let spectrum = run_sweep(&problem, &config.frequencies, &options)?;
    match &destination {
        Some(path) => write_spectrum(BufWriter::new(File::create(path)?), &spectrum)?,
        None => write_spectrum(io::stdout().lock(), &spectrum)?,
    }
    summarize(&mut summary, &spectrum)?;
    Ok(())
}

fn compare(source: &ConfigSource, exec: &Execution) -> Result<(), Error> {
    let config = source.load()?;
    let half = config.problem()?;
    if !matches!(half.ground, mst_ground::ground::GroundModel::Rigid) {
        return Err(Error::Config(config::ConfigError::Invalid(vec![config::ConfigIssue {
            path: "ground".into(),
            message: "compare needs rigid ground".into(),
        }])));
    }
    let doubled = Problem {
        scene: half.scene.with_image_array(),
        ground: mst_ground::ground::GroundModel::FreeField,
        ..half.clone()
    };
    let mut options = config.sweep_options();
    options.threads = exec.threads;
    options.fail_fast = exec.fail_fast;
    options.refine_depth = 0;
    let a = run_sweep(&half, &config.frequencies, &options)?;
    let b = run_sweep(&doubled, &config.frequencies, &options)?;
    let worst = a
        .entries
        .iter()
        .zip(&b.entries)
        .filter(|(x, y)| x.is_ok() && y.is_ok())
        .map(|(x, y)| ((x.il_db - y.il_db).abs(), x.frequency_hz))
        .fold((0.0_f64, f64::NAN), |best, cur| if cur.0 > best.0 { cur } else { best });
    println!(
        "half-space ({} cylinders) vs doubled free-field array ({} cylinders)",
        half.scene.len(),
        doubled.scene.len()
    );
    println!("max |dIL| = {:.3e} dB at {:.2} Hz", worst.0, worst.1);
    let failed = a.failures().count() + b.failures().count();
    if failed > 0 {
        println!("{failed} frequencies failed and were skipped");
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run { source, output, exec } => run(&source, output, &exec),
        Command::Compare { source, exec } => compare(&source, &exec),
        Command::Show { source } => source
            .load()
            .and_then(|c| Ok(c.to_toml_string()?))
            .map(|text| print!("{text}")),
        Command::Presets => {
            for (name, description) in PRESETS {
                println!("{name:<14} {description}");
            }
            Ok(())
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
