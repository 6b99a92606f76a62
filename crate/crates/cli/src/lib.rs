//! Command-line front end. [`execute`] runs one invocation against the given
//! output streams and returns the process exit code.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use bandforge::render::{
    export_obj, figure_panels, render_overhead_svg, render_unfolding_svg, report_json,
    CurvatureReport, FigureStyle, SolveReport, SweepReport, ValidateReport, VerifyReport,
};
use bandforge::{
    curvature_pair, develop_band, mc_overlap_estimate, overlap, place_top, reduce_by_symmetry,
    solve_params, sweep, validate, verdict_matrix, GridAxis, Preset, Prismatoid, PrismatoidParams,
    SweepSpec, Tolerances,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

const MC_SAMPLES: u64 = 200_000;

#[derive(Debug, Parser)]
#[command(
    name = "bandforge",
    version,
    about = "Band-unfolding overlap verifier for hexagonal prismatoids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    source: Source,
}

#[derive(Debug, Args)]
struct Source {
    /// Named parameter set (fig3, fig1b, fig1a, acute, control).
    #[arg(long, global = true)]
    preset: Option<String>,
    /// Explicit parameters as `k=v,...` over s, h, y, z. Missing keys take
    /// the defaults s=1, h=0.05, y=0.5, z=0.1.
    #[arg(long, global = true)]
    params: Option<String>,
    /// Override the bulge so the top face is a regular hexagon.
    #[arg(long, global = true, value_enum)]
    hexagon: Option<HexagonKind>,
    /// Solve for the odd-vertex curvature ε, in degrees (s = 1, y = 0.5).
    #[arg(long, global = true, value_name = "DEG")]
    target_epsilon: Option<f64>,
    /// Curvature ratio δ/ε used with --target-epsilon.
    #[arg(long, global = true, default_value_t = 0.5)]
    ratio: f64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum HexagonKind {
    Regular,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the vertices of the prismatoid as JSON.
    Build,
    /// Structural checks; exits 3 when the shape is unusable.
    Validate,
    /// Angle deficits at the even and odd top vertices.
    Curvature,
    /// Solve (h, z) for a target ε and ratio δ/ε.
    Solve,
    /// Develop the band for one cut and write it as SVG.
    Unfold {
        #[arg(long, default_value_t = 0)]
        cut: usize,
        #[arg(long)]
        attach: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate all 36 cut × attachment cells; exits 1 if any cell is not OVERLAP.
    Verify {
        #[arg(long)]
        out: Option<PathBuf>,
        /// Cross-check every cell against a Monte-Carlo estimate.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Verdict summary over an (h, z) grid.
    Sweep {
        /// `hmin:hmax:steps,zmin:zmax:steps`; defaults to a 20 × 20 grid
        /// around the selected parameters.
        #[arg(long)]
        grid: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the six unfolding panels and the overhead view into a directory.
    Render {
        #[arg(long, default_value = "figures")]
        out: PathBuf,
    },
    /// Write the polyhedron as Wavefront OBJ.
    Export {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Geometry(String),
    ClaimFalse,
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::ClaimFalse => 1,
            Failure::Usage(_) => 2,
            Failure::Geometry(_) => 3,
        }
    }
}

fn geometry<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Geometry(e.to_string())
}

fn parse_params(text: &str) -> Result<PrismatoidParams, Failure> {
    let mut p = PrismatoidParams::default();
    for pair in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = pair
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("expected k=v, got `{pair}`")))?;
        let v: f64 = value
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("bad number for {key}: `{value}`")))?;
        match key.trim() {
            "s" => p.s = v,
            "h" => p.h = v,
            "y" => p.y = v,
            "z" => p.z = v,
            other => return Err(Failure::Usage(format!("unknown parameter `{other}`"))),
        }
    }
    Ok(p)
}

impl Source {
    fn resolve(&self) -> Result<PrismatoidParams, Failure> {
        let given = [
            self.preset.is_some(),
            self.params.is_some(),
            self.target_epsilon.is_some(),
        ];
        if given.iter().filter(|&&g| g).count() > 1 {
            return Err(Failure::Usage(
                "give only one of --preset, --params, --target-epsilon".into(),
            ));
        }
        let mut p = if let Some(name) = &self.preset {
            let preset: Preset = name.parse().map_err(|e| Failure::Usage(format!("{e}")))?;
            preset.params().map_err(geometry)?
        } else if let Some(text) = &self.params {
            parse_params(text)?
        } else if let Some(deg) = self.target_epsilon {
            solve_params(deg.to_radians(), self.ratio, 1.0, 0.5)
                .map_err(geometry)?
                .params
        } else {
            Preset::Fig3.params().map_err(geometry)?
        };
        if let Some(HexagonKind::Regular) = self.hexagon {
            p.h = PrismatoidParams::regular_bulge(p.s);
        }
        p.check_finite().map_err(geometry)?;
        Ok(p)
    }
}

/// Constructs and validates; structural failures are geometry errors.
fn checked(params: PrismatoidParams) -> Result<Prismatoid, Failure> {
    let p = Prismatoid::construct(params);
    let report = validate(&p);
    if !report.valid() {
        return Err(Failure::Geometry(format!(
            "invalid prismatoid: {}",
            report.issues.join("; ")
        )));
    }
    Ok(p)
}

macro_rules! note {
    ($io:expr, $($arg:tt)*) => {{
        let _ = writeln!($io.err, $($arg)*);
    }};
}

struct Streams<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Streams<'_> {
    fn emit(&mut self, path: Option<&Path>, text: &str) -> Result<(), Failure> {
        match path {
            Some(path) => fs::write(path, text)
                .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
            None => self
                .out
                .write_all(text.as_bytes())
                .map_err(|e| Failure::Usage(format!("cannot write output: {e}"))),
        }
    }
}

fn default_grid(p: &PrismatoidParams) -> SweepSpec {
    SweepSpec {
        s: p.s,
        y: p.y,
        h: GridAxis::new(0.5 * p.h, 1.5 * p.h, 20),
        z: GridAxis::new(0.0, 2.0 * p.z, 20),
    }
}

fn run(cli: Cli, tol: Tolerances, io: &mut Streams<'_>) -> Result<(), Failure> {
    let params = cli.source.resolve()?;
    match cli.command {
        Command::Build => {
            let p = checked(params)?;
            io.emit(None, &report_json(&p))
        }
        Command::Validate => {
            let p = Prismatoid::construct(params);
            let report = validate(&p);
            let valid = report.valid();
            io.emit(
                None,
                &report_json(&ValidateReport {
                    params,
                    valid,
                    report,
                }),
            )?;
            if valid {
                Ok(())
            } else {
                Err(Failure::Geometry("prismatoid failed validation".into()))
            }
        }
        Command::Curvature => {
            let p = checked(params)?;
            let c = curvature_pair(&p).map_err(geometry)?;
            io.emit(None, &report_json(&CurvatureReport::from(c)))
        }
        Command::Solve => {
            let p = checked(params)?;
            let c = curvature_pair(&p).map_err(geometry)?;
            io.emit(None, &report_json(&SolveReport::new(params, c)))
        }
        Command::Unfold { cut, attach, out } => {
            if cut >= 6 || attach.is_some_and(|a| a >= 6) {
                return Err(Failure::Usage("cut and attach must lie in 0..6".into()));
            }
            let p = checked(params)?;
            let dev =
                develop_band(&p, cut).map_err(|e| Failure::Geometry(format!("cut {cut}: {e}")))?;
            let style = FigureStyle::default();
            let svg = match attach {
                Some(j) => {
                    let placement = place_top(&dev, j).map_err(|e| {
                        Failure::Geometry(format!("cut {cut}, attachment {j}: {e}"))
                    })?;
                    let report = overlap(&placement, &dev, &tol);
                    note!(
                        io,
                        "cut {cut} attach {j}: {} (area {:e}, threshold {:e})",
                        report.verdict,
                        report.total_area,
                        report.threshold
                    );
                    render_unfolding_svg(&dev, Some(&placement), Some(&report), &style)
                }
                None => render_unfolding_svg(&dev, None, None, &style),
            };
            io.emit(out.as_deref(), &svg)
        }
        Command::Verify { out, seed } => {
            let p = checked(params)?;
            let m = verdict_matrix(&p, &tol).map_err(geometry)?;
            let classes = reduce_by_symmetry(&m).map_err(geometry)?;
            if let Some(seed) = seed {
                oracle_check(&p, seed, io)?;
            }
            let report = VerifyReport::new(&m, &classes);
            io.emit(out.as_deref(), &report_json(&report))?;
            for c in &report.classes {
                note!(io, "{:<18} {}", c.class, c.verdict);
            }
            if report.counterexample {
                Ok(())
            } else {
                Err(Failure::ClaimFalse)
            }
        }
        Command::Sweep { grid, out } => {
            let spec = match grid {
                Some(g) => SweepSpec::parse_grid(&g, params.s, params.y)
                    .map_err(|e| Failure::Usage(e.to_string()))?,
                None => default_grid(&params),
            };
            let result = sweep(&spec, &tol);
            io.emit(out.as_deref(), &report_json(&SweepReport::from(&result)))
        }
        Command::Render { out } => {
            let p = checked(params)?;
            let style = FigureStyle::default();
            let panels = figure_panels(&p, &style, &tol).map_err(geometry)?;
            fs::create_dir_all(&out)
                .map_err(|e| Failure::Usage(format!("cannot create {}: {e}", out.display())))?;
            for panel in &panels {
                let path = out.join(format!("{}.svg", panel.name));
                io.emit(Some(&path), &panel.svg)?;
                note!(io, "{} {}", path.display(), panel.report.verdict);
            }
            io.emit(
                Some(&out.join("overhead.svg")),
                &render_overhead_svg(&p, &style),
            )
        }
        Command::Export { out } => {
            let p = checked(params)?;
            io.emit(out.as_deref(), &export_obj(&p))
        }
    }
}

/// Recomputes every cell's overlap area by sampling and reports cells whose
/// clipped area falls outside four standard errors.
fn oracle_check(p: &Prismatoid, seed: u64, io: &mut Streams<'_>) -> Result<(), Failure> {
    let mut worst = 0.0f64;
    for cut in 0..6 {
        let dev = develop_band(p, cut).map_err(geometry)?;
        for attach in 0..6 {
            let placement = place_top(&dev, attach).map_err(geometry)?;
            let exact = overlap(&placement, &dev, &Tolerances::default());
            let (mut area, mut var) = (0.0, 0.0);
            for (i, q) in dev.quads.iter().enumerate() {
                let cell_seed =
                    seed ^ ((cut * 36 + attach * 6 + i) as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15);
                let e = mc_overlap_estimate(&placement.hexagon, q, MC_SAMPLES, cell_seed);
                area += e.area;
                var += e.std_error * e.std_error;
            }
            let se = var.sqrt();
            let z = if se > 0.0 {
                (exact.total_area - area).abs() / se
            } else {
                0.0
            };
            worst = worst.max(z);
            if se > 0.0 && z > 4.0 {
                note!(io,
                    "oracle disagreement at cut {cut}, attachment {attach}: clip {:e}, sampled {:e} ± {:e}",
                    exact.total_area, area, se
                );
            }
        }
    }
    note!(io, "oracle: worst deviation {worst:.2} standard errors");
    Ok(())
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code: 0 success, 1 counterexample not certified, 2 usage error,
/// 3 geometry error.
pub fn execute<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    execute_with(args, Tolerances::from_env(), out, err)
}

/// [`execute`] with explicit tolerances instead of the environment.
pub fn execute_with<I, T>(args: I, tol: Tolerances, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut io = Streams { out, err };
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code() as u8;
            let target = if code == 0 { &mut io.out } else { &mut io.err };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match run(cli, tol, &mut io) {
        Ok(()) => 0,
        Err(f) => {
            match &f {
                Failure::Usage(m) => note!(io, "usage error: {m}"),
                Failure::Geometry(m) => note!(io, "geometry error: {m}"),
                Failure::ClaimFalse => note!(io, "not every placement overlaps the band"),
            }
            f.code()
        }
    }
}

#[cfg(test)]
mod tests;
