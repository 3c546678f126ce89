// `!(x > 0)` also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use gqd_core::armchair::{polygon_report, CornerType, EdgeClass, PolygonReport};
use gqd_core::bc::{
    admissibility, block_diagonalize, boundary_matrix, gap_lower_bound, regularity_class, BoundaryFrame,
    BoundaryParams, ComplexMatrix4,
};
use gqd_core::dot::{build_dot, GeometrySpec};
use gqd_core::io::{parse_dot_config, parse_polygon_file, write_eigenvectors_csv, write_spectrum_csv};
use gqd_core::lattice::LatticeConventions;
use gqd_core::tb::{assemble_h, continuum_compare, gap_report, spectrum};

const EXIT_VIOLATION: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(
    name = "gqd",
    version,
    about = "Boundary conditions and tight-binding spectra of graphene quantum dots"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build M_Γ, check admissibility and block-diagonalize it.
    BcCheck(BcCheck),
    /// Tight-binding spectrum of a dot described by a config file.
    DotSpectrum(DotSpectrum),
    /// Compare the scaled lattice gap with the continuum lower bound.
    GapCompare(GapCompare),
    /// Classify the edges and corners of a polygon and decide diagonalizability.
    ArmchairClassify(ArmchairClassify),
}

/// Angles left out default to zero, except in `gap-compare`, whose default
/// is the armchair value `Θ = π/2`.
#[derive(Args, Clone)]
struct GammaArgs {
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    theta: Option<f64>,
    #[arg(long = "theta-nu", allow_hyphen_values = true)]
    theta_nu: Option<f64>,
    #[arg(long = "phi-nu", allow_hyphen_values = true)]
    phi_nu: Option<f64>,
    /// Read all angles in degrees.
    #[arg(long)]
    degrees: bool,
}

impl GammaArgs {
    fn unit(&self) -> f64 {
        if self.degrees {
            std::f64::consts::PI / 180.0
        } else {
            1.0
        }
    }

    fn params(&self, default_theta: f64) -> Result<BoundaryParams<f64>, String> {
        let k = self.unit();
        let theta = self.theta.map_or(default_theta, |t| t * k);
        let angles = [
            self.lambda.unwrap_or(0.0) * k,
            theta,
            self.theta_nu.unwrap_or(0.0) * k,
            self.phi_nu.unwrap_or(0.0) * k,
        ];
        if angles.iter().any(|a| !a.is_finite()) {
            return Err("angles must be finite".into());
        }
        Ok(BoundaryParams::new(angles[0], angles[1], angles[2], angles[3]))
    }
}

#[derive(Args)]
struct BcCheck {
    #[command(flatten)]
    gamma: GammaArgs,
    /// Direction of the outward normal, from the x axis.
    #[arg(long = "normal-angle", allow_hyphen_values = true, conflicts_with = "normal")]
    normal_angle: Option<f64>,
    /// Outward normal as two components.
    #[arg(long, num_args = 2, value_names = ["NX", "NY"], allow_hyphen_values = true)]
    normal: Option<Vec<f64>>,
    /// Residual threshold.
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    /// Sweep this many random Γ and frames instead of a single check.
    #[arg(long)]
    random: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Domain area used for the gap bound.
    #[arg(long, default_value_t = std::f64::consts::PI)]
    area: f64,
}

#[derive(Args)]
struct DotSpectrum {
    #[arg(long)]
    config: PathBuf,
    /// Eigenvalue CSV; stdout when absent.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Eigenvector CSV.
    #[arg(long)]
    eigenvectors: Option<PathBuf>,
    /// Relative splitting below which neighbouring levels are paired.
    #[arg(long = "pair-tol", default_value_t = 1e-3)]
    pair_tol: f64,
}

#[derive(Args)]
struct GapCompare {
    #[arg(long, default_value = "armchair_hexagon")]
    shape: String,
    /// Comma-separated sizes in units of the lattice constant.
    #[arg(long, value_delimiter = ',', default_values_t = [9.0, 12.0, 15.0])]
    sizes: Vec<f64>,
    #[command(flatten)]
    gamma: GammaArgs,
    #[arg(long = "lattice-constant", default_value_t = 1.0)]
    lattice_constant: f64,
    #[arg(long, default_value_t = 1.0)]
    hopping: f64,
}

#[derive(Args)]
struct ArmchairClassify {
    /// Polygon file with `orientation` and `vertex` lines.
    file: PathBuf,
}

enum Failure {
    Input(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self::Io(e)
    }
}

impl From<gqd_core::Error> for Failure {
    fn from(e: gqd_core::Error) -> Self {
        Self::Input(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn fmt_matrix(m: &ComplexMatrix4<f64>) -> String {
    let mut s = String::new();
    for row in m.rows() {
        let cells: Vec<String> = row
            .iter()
            .map(|z| {
                let clean = |x: f64| if x.abs() < 5e-16 { 0.0 } else { x };
                format!("{:+.6}{:+.6}i", clean(z.re), clean(z.im))
            })
            .collect();
        let _ = writeln!(s, "  [{}]", cells.join(", "));
    }
    s
}

fn frame_from(args: &BcCheck) -> Result<BoundaryFrame<f64>, Failure> {
    match (&args.normal, args.normal_angle) {
        (Some(n), _) => {
            let norm = n[0].hypot(n[1]);
            if !(norm > 0.0 && norm.is_finite()) {
                return Err(Failure::Input("normal must be a finite nonzero vector".into()));
            }
            Ok(BoundaryFrame::from_normal([n[0] / norm, n[1] / norm])?)
        }
        (None, Some(a)) if a.is_finite() => {
            let k = if args.gamma.degrees {
                std::f64::consts::PI / 180.0
            } else {
                1.0
            };
            Ok(BoundaryFrame::from_normal_angle(a * k))
        }
        (None, Some(_)) => Err(Failure::Input("normal angle must be finite".into())),
        (None, None) => Ok(BoundaryFrame::from_normal_angle(0.0)),
    }
}

fn bc_check(args: &BcCheck, out: &mut impl Write) -> Outcome {
    if !(args.tol > 0.0) {
        return Err(Failure::Input("tolerance must be positive".into()));
    }
    if let Some(count) = args.random {
        return bc_sweep(count, args.seed, args.tol, out);
    }
    let params = args.gamma.params(0.0).map_err(Failure::Input)?;
    let frame = frame_from(args)?;
    let m = boundary_matrix(&params, &frame);
    let adm = admissibility(&m, &frame, args.tol);
    let block = block_diagonalize(&params, &frame);
    let (r_plus, r_minus) = regularity_class(&params);
    writeln!(
        out,
        "Gamma = (Lambda {:.12}, Theta {:.12}, theta_nu {:.12}, phi_nu {:.12})",
        params.lambda(),
        params.theta(),
        params.theta_nu(),
        params.phi_nu()
    )?;
    writeln!(
        out,
        "frame: n = ({:.12}, {:.12}), t = ({:.12}, {:.12})",
        frame.normal()[0],
        frame.normal()[1],
        frame.tangent()[0],
        frame.tangent()[1]
    )?;
    write!(out, "M_Gamma =\n{}", fmt_matrix(&m))?;
    let e = block.etas;
    writeln!(out, "eta = ({:.12}, {:.12})", e.plus, e.minus)?;
    let pi = std::f64::consts::PI;
    let near = |a: f64, b: f64| (a - b).abs() < 1e-12;
    if (near(e.plus, 0.0) || near(e.plus, 2.0 * pi)) && near(e.minus, pi) {
        writeln!(out, "blocks: infinite-mass pair")?;
    }
    writeln!(out, "residual hermitian     {:.3e}", adm.hermitian.residual)?;
    writeln!(out, "residual involutive    {:.3e}", adm.involutive.residual)?;
    writeln!(out, "residual traceless     {:.3e}", adm.traceless.residual)?;
    writeln!(out, "residual anticommutes  {:.3e}", adm.anticommutes.residual)?;
    writeln!(out, "residual block         {:.3e}", block.residual)?;
    writeln!(out, "regularity = ({r_plus:?}, {r_minus:?})")?;
    match gap_lower_bound(&params, args.area) {
        Ok(b) => writeln!(out, "gap bound (area {}) = {:.12}", args.area, b)?,
        Err(gqd_core::Error::NonPositiveArea(a)) => {
            return Err(Failure::Input(format!("area must be positive, got {a}")))
        }
        Err(_) => writeln!(out, "gap bound = undefined")?,
    }
    let ok = adm.all() && block.residual < args.tol;
    writeln!(out, "status: {}", if ok { "ok" } else { "violation" })?;
    Ok(ok)
}

fn bc_sweep(count: usize, seed: u64, tol: f64, out: &mut impl Write) -> Outcome {
    let tau = std::f64::consts::TAU;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut worst_block, mut worst_adm) = (0.0_f64, 0.0_f64);
    for _ in 0..count {
        let params = BoundaryParams::new(
            rng.random_range(0.0..tau),
            rng.random_range(0.0..tau),
            rng.random_range(-tau / 4.0..=tau / 4.0),
            rng.random_range(0.0..tau),
        );
        let frame = BoundaryFrame::from_normal_angle(rng.random_range(0.0..tau));
        worst_block = worst_block.max(block_diagonalize(&params, &frame).residual);
        worst_adm =
            worst_adm.max(admissibility(&boundary_matrix(&params, &frame), &frame, tol).max_residual());
    }
    writeln!(out, "draws = {count}, seed = {seed}")?;
    writeln!(out, "max block residual          {worst_block:.3e}")?;
    writeln!(out, "max admissibility residual  {worst_adm:.3e}")?;
    let ok = worst_block < tol && worst_adm < tol;
    writeln!(out, "status: {}", if ok { "ok" } else { "violation" })?;
    Ok(ok)
}

fn dot_spectrum(args: &DotSpectrum, out: &mut impl Write, log: &mut impl Write) -> Outcome {
    if !(args.pair_tol > 0.0) {
        return Err(Failure::Input("pair tolerance must be positive".into()));
    }
    let config = parse_dot_config::<f64>(&read(&args.config)?)?;
    let conv = config.conventions;
    let dot = build_dot(&config.geometry, &conv)?;
    let spec = spectrum(&assemble_h(&dot, &conv), args.eigenvectors.is_some())?;
    let report = gap_report(&spec, args.pair_tol);

    let mut csv = Vec::new();
    write_spectrum_csv(&mut csv, &spec)?;
    let summary: &mut dyn Write = match &args.output {
        Some(path) => {
            fs::write(path, &csv)?;
            out
        }
        None => {
            out.write_all(&csv)?;
            log
        }
    };
    if let Some(path) = &args.eigenvectors {
        let mut v = Vec::new();
        write_eigenvectors_csv(&mut v, &dot, &spec)?;
        fs::write(path, v)?;
    }
    let (na, nb) = dot.sublattice_counts();
    writeln!(summary, "shape = {}", config.geometry.name())?;
    writeln!(
        summary,
        "sites = {} (A {na}, B {nb}), edge sites = {}",
        dot.len(),
        dot.edge_sites.len()
    )?;
    writeln!(summary, "area = {:.12}", dot.area)?;
    writeln!(summary, "lambda_min_abs = {:.12}", report.lambda_min_abs)?;
    match report.lowest_positive_splitting {
        Some(s) => writeln!(summary, "lowest positive pair splitting = {s:.3e}")?,
        None => writeln!(summary, "lowest positive pair splitting = n/a")?,
    }
    writeln!(
        summary,
        "degenerate pairs (pair_tol {}) = {}",
        args.pair_tol,
        report.degeneracy_pairs.len()
    )?;
    for p in report
        .degeneracy_pairs
        .iter()
        .filter(|p| p.lambda_i.abs() <= 4.0 * report.lambda_min_abs.max(1e-300))
        .take(8)
    {
        writeln!(
            summary,
            "  ({:.12}, {:.12}) splitting {:.3e}",
            p.lambda_i, p.lambda_j, p.splitting
        )?;
    }
    Ok(true)
}

fn geometry_for(shape: &str, size: f64) -> Result<GeometrySpec<f64>, Failure> {
    Ok(match shape {
        "armchair_hexagon" => GeometrySpec::ArmchairHexagon { size },
        "armchair_triangle" => GeometrySpec::ArmchairTriangle { size },
        "zigzag_hexagon" => GeometrySpec::ZigzagHexagon { size },
        "rectangle" => GeometrySpec::Rectangle {
            width: size,
            height: size,
        },
        other => return Err(Failure::Input(format!("unknown shape `{other}`"))),
    })
}

fn gap_compare(args: &GapCompare, out: &mut impl Write) -> Outcome {
    let params = args
        .gamma
        .params(std::f64::consts::FRAC_PI_2)
        .map_err(Failure::Input)?;
    if gap_lower_bound(&params, 1.0).is_err() {
        return Err(Failure::Input(
            "the gap bound is undefined for zigzag-type Γ (cos η = 0)".into(),
        ));
    }
    if args.sizes.is_empty() || args.sizes.iter().any(|s| !(*s > 0.0 && s.is_finite())) {
        return Err(Failure::Input("sizes must be positive".into()));
    }
    if !(args.lattice_constant > 0.0 && args.hopping.is_finite() && args.hopping != 0.0) {
        return Err(Failure::Input(
            "lattice constant must be positive and hopping nonzero".into(),
        ));
    }
    let conv = LatticeConventions::new(args.lattice_constant, args.hopping);
    writeln!(out, "L,sites,scaled_gap,bound,ratio")?;
    let mut ratios = Vec::new();
    for &l in &args.sizes {
        let dot = build_dot(&geometry_for(&args.shape, l)?, &conv)?;
        let spec = spectrum(&assemble_h(&dot, &conv), false)?;
        let c = continuum_compare(&dot, &spec, &params, &conv)?;
        writeln!(
            out,
            "{l},{},{:.12},{:.12},{:.12}",
            dot.len(),
            c.scaled_gap,
            c.bound,
            c.ratio
        )?;
        ratios.push(c.ratio);
    }
    let up = ratios.windows(2).all(|w| w[1] >= w[0]);
    let down = ratios.windows(2).all(|w| w[1] <= w[0]);
    let trend = match (up, down) {
        (true, true) => "constant",
        (true, false) => "increasing",
        (false, true) => "decreasing",
        _ => "not monotone",
    };
    writeln!(out, "# ratio {trend} in L")?;
    Ok(true)
}

fn class_name(c: EdgeClass) -> &'static str {
    match c {
        EdgeClass::Horizontal => "horizontal",
        EdgeClass::Deg60 => "60deg",
        EdgeClass::Deg120 => "120deg",
        EdgeClass::NonArmchair => "non-armchair",
    }
}

fn corner_name(c: CornerType) -> &'static str {
    match c {
        CornerType::ASite => "A-site",
        CornerType::BSite => "B-site",
        CornerType::HexCenter => "hexagon-centre",
        CornerType::Other => "other",
    }
}

fn report_json(r: &PolygonReport<f64>) -> Value {
    let z = |c: num_complex::Complex<f64>| json!([c.re, c.im]);
    let edges: Vec<Value> = r
        .per_edge
        .iter()
        .map(|e| {
            let mut v = json!({
                "class": class_name(e.line.class),
                "c": e.line.c,
                "orientation": e.line.orientation,
            });
            if let Some(bc) = &e.bc {
                v["delta_a"] = z(bc.delta_a);
                v["delta_b"] = z(bc.delta_b);
                v["t"] = z(bc.t_complex);
                v["nu"] = z(bc.nu);
                v["compatible"] = json!(bc.compatible);
            }
            v
        })
        .collect();
    let corners: Vec<Value> = r
        .corners
        .iter()
        .map(|c| {
            json!({
                "vertex": c.vertex,
                "type": c.corner_type.map(corner_name),
                "compatible": c.compatible,
            })
        })
        .collect();
    json!({
        "edges": edges,
        "corners": corners,
        "all_armchair": r.all_armchair,
        "diagonalizable": r.diagonalizable,
        "common_gamma": r.common_gamma.map(|g| json!({
            "lambda": g.lambda(),
            "theta": g.theta(),
            "theta_nu": g.theta_nu(),
            "phi_nu": g.phi_nu(),
        })),
    })
}

fn armchair_classify(args: &ArmchairClassify, out: &mut impl Write) -> Outcome {
    let polygon = parse_polygon_file::<f64>(&read(&args.file)?)?;
    let report = polygon_report(&polygon.vertices)?;
    let text =
        serde_json::to_string_pretty(&report_json(&report)).map_err(|e| Failure::Input(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(report.diagonalizable)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match &cli.command {
        Command::BcCheck(a) => bc_check(a, &mut out),
        Command::DotSpectrum(a) => dot_spectrum(a, &mut out, &mut io::stderr()),
        Command::GapCompare(a) => gap_compare(a, &mut out),
        Command::ArmchairClassify(a) => armchair_classify(a, &mut out),
    };
    let _ = out.flush();
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_VIOLATION),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        // A closed pipe (`gqd ... | head`) is not an error.
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
