//! `sbez`: sample shifted-knot Bernstein bases, Bézier curves and
//! tensor-product patches to CSV, JSON or SVG.
//!
//! Exit status is 0 on success, 1 for domain or constraint errors and 2 for
//! command-line or input-file parse errors.

pub mod error;
pub mod files;
pub mod numfmt;
pub mod svg;

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use shifted_bezier::{basis_row, Curve64, Domain, Knots64, Point64};

pub use error::CliError;
use numfmt::fmt17;
use svg::{BBox, Plot, PALETTE};

#[derive(Debug, Parser)]
#[command(name = "sbez", version, about = "Shifted-knot Bézier sampling tool")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Direct,
    Decasteljau,
    Matrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Axis {
    X,
    Y,
    Z,
}

#[derive(Debug, Args)]
struct Sampling {
    /// Samples per direction, endpoints included.
    #[arg(long, default_value_t = 200)]
    samples: usize,

    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Clamp parameters and custom ranges into the domain instead of failing.
    #[arg(long)]
    clamp: bool,

    /// Write to a file instead of stdout.
    #[arg(long)]
    output: Option<String>,
}

#[derive(Debug, Args)]
struct Range {
    /// Start of a custom parameter range (defaults to the domain start).
    #[arg(long, allow_hyphen_values = true)]
    from: Option<f64>,

    /// End of a custom parameter range (defaults to the domain end).
    #[arg(long, allow_hyphen_values = true)]
    to: Option<f64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sample the degree-n basis functions over their domain.
    Basis {
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        beta: f64,
        #[command(flatten)]
        range: Range,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Evaluate a curve file at one parameter.
    CurveEval {
        file: String,
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
        #[arg(long, value_enum, default_value_t = Algorithm::Direct)]
        algorithm: Algorithm,
        #[arg(long)]
        clamp: bool,
        #[arg(long)]
        output: Option<String>,
    },
    /// Sample a curve file over its domain.
    CurveSample {
        file: String,
        #[command(flatten)]
        range: Range,
        #[command(flatten)]
        sampling: Sampling,
        /// Coordinate left out of the SVG projection for 3D curves.
        #[arg(long, value_enum, default_value_t = Axis::Z)]
        drop_axis: Axis,
    },
    /// Degree-elevate a curve file `levels` times.
    Elevate {
        file: String,
        #[arg(long, default_value_t = 1)]
        levels: usize,
        #[arg(long)]
        output: Option<String>,
    },
    /// Sample a patch file on a uniform grid.
    SurfaceSample {
        file: String,
        #[command(flatten)]
        sampling: Sampling,
        /// Coordinate left out of the SVG wireframe projection.
        #[arg(long, value_enum, default_value_t = Axis::Z)]
        drop_axis: Axis,
    },
}

/// Runs one invocation; returns the process exit status.
pub fn run<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                return 2;
            }
            let _ = write!(stdout, "{e}");
            return 0;
        }
    };
    match execute(cli.command) {
        Ok(Emit { text, output }) => match output {
            Some(path) => match std::fs::write(&path, text) {
                Ok(()) => 0,
                Err(e) => report(stderr, &CliError::Output(e)),
            },
            None => match stdout.write_all(text.as_bytes()) {
                Ok(()) => 0,
                Err(e) => report(stderr, &CliError::Output(e)),
            },
        },
        Err(e) => report(stderr, &e),
    }
}

fn report(stderr: &mut dyn Write, e: &CliError) -> u8 {
    let _ = writeln!(stderr, "sbez: {e}");
    e.exit_code()
}

struct Emit {
    text: String,
    output: Option<String>,
}

fn execute(command: Command) -> Result<Emit, CliError> {
    match command {
        Command::Basis {
            degree,
            alpha,
            beta,
            range,
            sampling,
        } => {
            let knots = Knots64::new(alpha, beta)?;
            let domain = knots.domain(degree)?;
            let ts = parameters(&domain, &range, &sampling)?;
            Ok(Emit {
                text: basis_output(&knots, &domain, &ts, sampling.format)?,
                output: sampling.output,
            })
        }
        Command::CurveEval {
            file,
            t,
            algorithm,
            clamp,
            output,
        } => {
            let curve = files::parse_curve(&files::read_text(&file)?)?;
            let t = if clamp { curve.domain().clamp(&t) } else { t };
            let p = match algorithm {
                Algorithm::Direct => curve.eval_direct(&t)?,
                Algorithm::Decasteljau => curve.eval_decasteljau(&t)?,
                Algorithm::Matrix => curve.eval_matrix_form(&t)?,
            };
            let name = algorithm
                .to_possible_value()
                .map(|v| v.get_name().to_string())
                .unwrap_or_default();
            Ok(Emit {
                text: format!(
                    "{{\"t\": {}, \"algorithm\": \"{name}\", \"point\": {}}}\n",
                    fmt17(t),
                    files::coords_json(&p)
                ),
                output,
            })
        }
        Command::CurveSample {
            file,
            range,
            sampling,
            drop_axis,
        } => {
            let curve = files::parse_curve(&files::read_text(&file)?)?;
            let ts = parameters(curve.domain(), &range, &sampling)?;
            Ok(Emit {
                text: curve_output(&curve, &ts, sampling.format, drop_axis)?,
                output: sampling.output,
            })
        }
        Command::Elevate {
            file,
            levels,
            output,
        } => {
            if levels == 0 {
                return Err(CliError::Parse("--levels must be at least 1".into()));
            }
            let curve = files::parse_curve(&files::read_text(&file)?)?;
            Ok(Emit {
                text: files::write_curve(&curve.elevate_many(levels)?),
                output,
            })
        }
        Command::SurfaceSample {
            file,
            sampling,
            drop_axis,
        } => {
            let patch = files::parse_patch(&files::read_text(&file)?)?;
            Ok(Emit {
                text: surface_output(&patch, &sampling, drop_axis)?,
                output: sampling.output,
            })
        }
    }
}

/// Uniform parameters over the domain or over a custom sub-range.
fn parameters(domain: &Domain<f64>, range: &Range, sampling: &Sampling) -> Result<Vec<f64>, CliError> {
    if sampling.samples < 2 {
        return Err(CliError::Range(format!(
            "--samples must be at least 2, got {}",
            sampling.samples
        )));
    }
    if range.from.is_none() && range.to.is_none() {
        return Ok(domain.samples(sampling.samples)?);
    }
    let mut from = range.from.unwrap_or(*domain.lo());
    let mut to = range.to.unwrap_or(*domain.hi());
    if sampling.clamp {
        from = domain.clamp(&from);
        to = domain.clamp(&to);
    } else {
        from = domain.locate(&from)?;
        to = domain.locate(&to)?;
    }
    if from >= to {
        return Err(CliError::Range(format!(
            "empty sampling range [{from}, {to}] within the domain [{}, {}]",
            domain.lo(),
            domain.hi()
        )));
    }
    let last = sampling.samples - 1;
    Ok((0..=last)
        .map(|i| {
            if i == last {
                to
            } else {
                from + (to - from) * (i as f64 / last as f64)
            }
        })
        .collect())
}

fn domain_json(d: &Domain<f64>) -> String {
    format!("{{\"lo\": {}, \"hi\": {}}}", fmt17(*d.lo()), fmt17(*d.hi()))
}

const AXIS_NAMES: [&str; 3] = ["x", "y", "z"];

fn coord_names(dim: usize) -> Vec<String> {
    (0..dim)
        .map(|i| AXIS_NAMES.get(i).map_or_else(|| format!("c{i}"), |s| s.to_string()))
        .collect()
}

fn basis_output(knots: &Knots64, domain: &Domain<f64>, ts: &[f64], format: Format) -> Result<String, CliError> {
    let n = domain.degree();
    let rows: Vec<Vec<f64>> = ts
        .iter()
        .map(|t| basis_row(knots, n, t))
        .collect::<Result<_, _>>()?;
    let mut s = String::new();
    match format {
        Format::Csv => {
            s.push_str("t,k,value\n");
            for (t, row) in ts.iter().zip(&rows) {
                for (k, g) in row.iter().enumerate() {
                    s.push_str(&format!("{},{k},{}\n", fmt17(*t), fmt17(*g)));
                }
            }
        }
        Format::Json => {
            s.push_str(&format!(
                "{{\"alpha\": {}, \"beta\": {}, \"degree\": {n}, \"domain\": {}, \"samples\": [\n",
                fmt17(*knots.alpha()),
                fmt17(*knots.beta()),
                domain_json(domain)
            ));
            let mut entries = Vec::new();
            for (t, row) in ts.iter().zip(&rows) {
                for (k, g) in row.iter().enumerate() {
                    entries.push(format!(
                        "  {{\"t\": {}, \"k\": {k}, \"value\": {}}}",
                        fmt17(*t),
                        fmt17(*g)
                    ));
                }
            }
            s.push_str(&entries.join(",\n"));
            s.push_str("\n]}\n");
        }
        Format::Svg => {
            let (lo, hi) = (*domain.lo(), *domain.hi());
            let mut plot = Plot::new(BBox::around([(lo, 0.0), (hi, 1.0)]));
            plot.describe(format!(
                "degree {n} basis, alpha={}, beta={}, domain [{}, {}]",
                knots.alpha(),
                knots.beta(),
                fmt17(lo),
                fmt17(hi)
            ));
            plot.axis(0.0, &[(lo, format!("{lo:.6}")), (hi, format!("{hi:.6}"))]);
            for k in 0..=n {
                let pts: Vec<(f64, f64)> = ts.iter().zip(&rows).map(|(t, r)| (*t, r[k])).collect();
                plot.polyline(&format!("basis-{k}"), &pts, PALETTE[k % PALETTE.len()], false);
            }
            s = plot.finish();
        }
    }
    Ok(s)
}

fn project(p: &[f64], drop: Axis) -> (f64, f64) {
    if p.len() < 3 {
        return (p[0], p.get(1).copied().unwrap_or(0.0));
    }
    match drop {
        Axis::X => (p[1], p[2]),
        Axis::Y => (p[0], p[2]),
        Axis::Z => (p[0], p[1]),
    }
}

fn curve_output(curve: &Curve64, ts: &[f64], format: Format, drop: Axis) -> Result<String, CliError> {
    let points: Vec<Point64> = ts.iter().map(|t| curve.eval_direct(t)).collect::<Result<_, _>>()?;
    let names = coord_names(curve.dim());
    let mut s = String::new();
    match format {
        Format::Csv => {
            s.push_str(&format!("t,{}\n", names.join(",")));
            for (t, p) in ts.iter().zip(&points) {
                let cs: Vec<String> = p.coords().iter().map(|&c| fmt17(c)).collect();
                s.push_str(&format!("{},{}\n", fmt17(*t), cs.join(",")));
            }
        }
        Format::Json => {
            s.push_str(&format!(
                "{{\"alpha\": {}, \"beta\": {}, \"degree\": {}, \"domain\": {}, \"samples\": [\n",
                fmt17(*curve.knots().alpha()),
                fmt17(*curve.knots().beta()),
                curve.degree(),
                domain_json(curve.domain())
            ));
            let entries: Vec<String> = ts
                .iter()
                .zip(&points)
                .map(|(t, p)| {
                    let fields: Vec<String> = names
                        .iter()
                        .zip(p.coords())
                        .map(|(name, c)| format!("\"{name}\": {}", fmt17(*c)))
                        .collect();
                    format!("  {{\"t\": {}, {}}}", fmt17(*t), fields.join(", "))
                })
                .collect();
            s.push_str(&entries.join(",\n"));
            s.push_str("\n]}\n");
        }
        Format::Svg => {
            let flat = |p: &Point64, t: f64| {
                if curve.dim() == 1 {
                    (t, p[0])
                } else {
                    project(p.coords(), drop)
                }
            };
            let ctrl_ts = curve.domain().samples(curve.degree() + 1)?;
            let polygon: Vec<(f64, f64)> = curve
                .control()
                .iter()
                .zip(&ctrl_ts)
                .map(|(p, t)| flat(p, *t))
                .collect();
            let samples: Vec<(f64, f64)> = ts.iter().zip(&points).map(|(t, p)| flat(p, *t)).collect();
            let mut plot = Plot::new(BBox::around(polygon.iter().chain(&samples).copied()));
            plot.describe(format!(
                "degree {} curve, domain [{}, {}]",
                curve.degree(),
                fmt17(*curve.domain().lo()),
                fmt17(*curve.domain().hi())
            ));
            plot.polyline("control-polygon", &polygon, "#888888", true);
            plot.polyline("curve", &samples, PALETTE[0], false);
            s = plot.finish();
        }
    }
    Ok(s)
}

fn surface_output(patch: &shifted_bezier::Patch64, sampling: &Sampling, drop: Axis) -> Result<String, CliError> {
    if sampling.samples < 2 {
        return Err(CliError::Range(format!(
            "--samples must be at least 2, got {}",
            sampling.samples
        )));
    }
    let grid = patch.sample_grid(sampling.samples, sampling.samples)?;
    let names = coord_names(patch.dim());
    let mut s = String::new();
    match sampling.format {
        Format::Csv => {
            s.push_str(&format!("u,v,{}\n", names.join(",")));
            for (u, v, p) in grid.iter().flatten() {
                let cs: Vec<String> = p.coords().iter().map(|&c| fmt17(c)).collect();
                s.push_str(&format!("{},{},{}\n", fmt17(*u), fmt17(*v), cs.join(",")));
            }
        }
        Format::Json => {
            let (m, n) = patch.degrees();
            s.push_str(&format!(
                "{{\"alpha\": {}, \"beta\": {}, \"degrees\": [{m}, {n}], \"u_domain\": {}, \"v_domain\": {}, \"samples\": [\n",
                fmt17(*patch.knots().alpha()),
                fmt17(*patch.knots().beta()),
                domain_json(patch.u_domain()),
                domain_json(patch.v_domain())
            ));
            let entries: Vec<String> = grid
                .iter()
                .flatten()
                .map(|(u, v, p)| {
                    let fields: Vec<String> = names
                        .iter()
                        .zip(p.coords())
                        .map(|(name, c)| format!("\"{name}\": {}", fmt17(*c)))
                        .collect();
                    format!("  {{\"u\": {}, \"v\": {}, {}}}", fmt17(*u), fmt17(*v), fields.join(", "))
                })
                .collect();
            s.push_str(&entries.join(",\n"));
            s.push_str("\n]}\n");
        }
        Format::Svg => {
            let net = patch.net().iter().flatten().map(|p| project(p.coords(), drop));
            let mut plot = Plot::new(BBox::around(net));
            plot.describe(format!(
                "degree {:?} patch wireframe, u domain [{}, {}], v domain [{}, {}]",
                patch.degrees(),
                fmt17(*patch.u_domain().lo()),
                fmt17(*patch.u_domain().hi()),
                fmt17(*patch.v_domain().lo()),
                fmt17(*patch.v_domain().hi())
            ));
            for (i, row) in grid.iter().enumerate() {
                let pts: Vec<(f64, f64)> = row.iter().map(|(_, _, p)| project(p.coords(), drop)).collect();
                plot.polyline(&format!("u-{i}"), &pts, PALETTE[0], false);
            }
            for j in 0..grid[0].len() {
                let pts: Vec<(f64, f64)> = grid.iter().map(|row| project(row[j].2.coords(), drop)).collect();
                plot.polyline(&format!("v-{j}"), &pts, PALETTE[1], false);
            }
            s = plot.finish();
        }
    }
    Ok(s)
}
