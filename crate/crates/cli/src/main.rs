//! `dirac5`: verification suites, bound-state tables, plane-wave checks and
//! second-time demos for the five-dimensional wave equation.
//!
//! ```text
//! dirac5 verify --seed 42 --trials 1000
//! dirac5 spectrum --z 1 --max-n 3 --format csv
//! dirac5 planewave --m 1 --k 0.3,0,0 --k4 0 --gamma e12
//! dirac5 beyond scalar --s 0.1 --m 1
//! ```
//!
//! Exit status is 0 when every check passes, 1 when some check fails and 2
//! on invalid input.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dirac5::coulomb::{ALPHA, ELECTRON_MASS_EV};
use dirac5::report::{ReportDocument, Status};
use dirac5::suite::{
    cmd_beyond, cmd_planewave, cmd_spectrum, cmd_verify, BeyondDemo, BeyondOptions, PlaneWaveOptions,
    SpectrumOptions, VerifyOptions,
};
use dirac5::GammaChoice;

#[derive(Parser)]
#[command(name = "dirac5", version, about = "Checks for the five-dimensional fermion wave equation in Cl(3,2)")]
struct Cli {
    /// Output format; csv is available for `spectrum` only
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,

    /// Override the pass threshold of the residual checks
    #[arg(long, global = true)]
    tolerance: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum GammaArg {
    E12,
    E0e,
}

#[derive(Clone, Copy, ValueEnum)]
enum DemoArg {
    Scalar,
    Sources,
}

#[derive(Subcommand)]
enum Command {
    /// Run the algebra, projection, reduction, operator and grade suites
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Run the algebra checks with the wrong metric (negative control)
        #[arg(long)]
        corrupt_metric: bool,
    },
    /// Hydrogen-like bound-state energies with a series cross-check
    Spectrum {
        /// Nuclear charge, 1..=137
        #[arg(long, default_value_t = 1)]
        z: u32,
        #[arg(long, default_value_t = 2)]
        max_n: u32,
        #[arg(long, default_value_t = ALPHA)]
        alpha: f64,
        #[arg(long, default_value_t = ELECTRON_MASS_EV)]
        electron_mass_ev: f64,
    },
    /// Plane-wave solutions for a given mass and momentum
    Planewave {
        #[arg(long, default_value_t = 1.0)]
        m: f64,
        /// Spatial momentum k1,k2,k3
        #[arg(long, value_delimiter = ',', default_values_t = [0.3, 0.0, 0.0], allow_hyphen_values = true)]
        k: Vec<f64>,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        k4: f64,
        #[arg(long, value_enum, default_value_t = GammaArg::E12)]
        gamma: GammaArg,
    },
    /// Second-time demos: induced scalar potential or massless source current
    Beyond {
        #[arg(value_enum)]
        demo: DemoArg,
        #[arg(long, default_value_t = 0.1, allow_hyphen_values = true)]
        s: f64,
        /// Mass; defaults to 1 for `scalar` and 0 for `sources`
        #[arg(long)]
        m: Option<f64>,
    },
}

fn run(cli: &Cli) -> Result<ReportDocument, String> {
    let result = match &cli.command {
        Command::Verify { seed, trials, corrupt_metric } => cmd_verify(&VerifyOptions {
            seed: *seed,
            trials: *trials,
            tolerance: cli.tolerance.unwrap_or(VerifyOptions::default().tolerance),
            corrupt_metric: *corrupt_metric,
        }),
        Command::Spectrum { z, max_n, alpha, electron_mass_ev } => cmd_spectrum(&SpectrumOptions {
            z: *z,
            max_n: *max_n,
            alpha: *alpha,
            electron_mass_ev: *electron_mass_ev,
            tolerance: cli.tolerance.unwrap_or(SpectrumOptions::default().tolerance),
        }),
        Command::Planewave { k, .. } if k.len() != 3 => {
            return Err(format!("--k takes three comma-separated components, got {}", k.len()))
        }
        Command::Planewave { m, k, k4, gamma } => cmd_planewave(&PlaneWaveOptions {
            m: *m,
            k: [k[0], k[1], k[2]],
            k4: *k4,
            gamma: match gamma {
                GammaArg::E12 => GammaChoice::E12,
                GammaArg::E0e => GammaChoice::E0E,
            },
            tolerance: cli.tolerance.unwrap_or(PlaneWaveOptions::default().tolerance),
        }),
        Command::Beyond { demo, s, m } => {
            let demo = match demo {
                DemoArg::Scalar => BeyondDemo::Scalar,
                DemoArg::Sources => BeyondDemo::Sources,
            };
            let default_m = if demo == BeyondDemo::Scalar { 1.0 } else { 0.0 };
            cmd_beyond(&BeyondOptions {
                demo,
                s: *s,
                m: m.unwrap_or(default_m),
                tolerance: cli.tolerance.unwrap_or(1e-9),
            })
        }
    };
    result.map_err(|e| e.to_string())
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Skipped => "SKIP",
    }
}

fn render_table(r: &ReportDocument, out: &mut impl Write) -> std::io::Result<()> {
    writeln!(out, "dirac5 {}", r.command)?;
    for (k, v) in &r.inputs {
        writeln!(out, "  {k} = {v}")?;
    }
    if !r.rows.is_empty() {
        writeln!(out)?;
        writeln!(
            out,
            "{:<8} {:>5} {:>3} {:>3} {:>5} {:>14} {:>14} {:>10}",
            "level", "kappa", "xi", "n", "j", "E_bind [eV]", "series [eV]", "rel.dev"
        )?;
        for row in &r.rows {
            writeln!(
                out,
                "{:<8} {:>5} {:>3} {:>3} {:>5} {:>14.6} {:>14.6} {:>10.2e}",
                row.label, row.kappa, row.xi, row.n, row.j, row.binding_ev, row.series_binding_ev, row.relative_deviation
            )?;
        }
    }
    writeln!(out)?;
    for c in &r.checks {
        match c.status {
            Status::Skipped => writeln!(out, "{}  {}  [{}]", status_word(c.status), c.name, c.reference)?,
            _ => writeln!(
                out,
                "{}  {}  measured {:.3e}  tolerance {:.1e}  [{}]",
                status_word(c.status),
                c.name,
                c.measured,
                c.tolerance,
                c.reference
            )?,
        }
    }
    for n in &r.notes {
        writeln!(out, "note: {n}")?;
    }
    writeln!(
        out,
        "\n{} passed, {} failed, {} skipped",
        r.summary.passed, r.summary.failed, r.summary.skipped
    )
}

fn render_csv(r: &ReportDocument, out: &mut impl Write) -> std::io::Result<()> {
    writeln!(out, "label,kappa,xi,n,j,binding_ev,series_binding_ev,relative_deviation")?;
    for row in &r.rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            row.label, row.kappa, row.xi, row.n, row.j, row.binding_ev, row.series_binding_ev, row.relative_deviation
        )?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.format == Format::Csv && !matches!(cli.command, Command::Spectrum { .. }) {
        eprintln!("error: --format csv is only available for `spectrum`");
        return ExitCode::from(2);
    }
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let mut out = std::io::stdout().lock();
    let written = match cli.format {
        Format::Table => render_table(&report, &mut out),
        Format::Csv => render_csv(&report, &mut out),
        Format::Json => serde_json::to_writer_pretty(&mut out, &report)
            .map_err(std::io::Error::from)
            .and_then(|_| writeln!(out)),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
