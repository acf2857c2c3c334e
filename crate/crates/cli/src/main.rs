use std::io;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use landau::bounds::{
    audit_bounds, extract_coefficients, AuditMode, DEFAULT_RADIUS, DEFAULT_SAMPLES,
};
use landau::radii::{
    linear_grid, remark_chain, theorem_radius_with, ChainStatus, GridPoint, RemarkId,
    SolverOptions, TheoremId, TheoremParams,
};
use landau::verify::{
    classical_configuration, corpus, run_verification, standard_corpus, theorem_configuration,
    CorpusName, CorpusParams, Part, ScanOptions, DEFAULT_GRID_N,
};
use landau::Error;
use landau_cli::report::{self, Cell, Report, Status, Table};

#[derive(Parser, Debug)]
#[command(
    name = "landau",
    version,
    about = "Univalence and schlicht-disk radii for bounded biharmonic mappings"
)]
struct Cli {
    /// Bisection tolerance for the radius equations.
    #[arg(long, global = true, default_value_t = 1e-13)]
    tol: f64,
    /// Polar scan density (radii x angles).
    #[arg(long = "grid-n", global = true, default_value_t = DEFAULT_GRID_N)]
    grid_n: usize,
    /// Emit JSON (the default).
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV.
    #[arg(long, global = true)]
    csv: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy, Default)]
struct Bounds {
    /// Single bound M.
    #[arg(long = "M")]
    m: Option<f64>,
    /// Bound M1 on the |z|^2 coefficient map.
    #[arg(long = "M1")]
    m1: Option<f64>,
    /// Bound M2 on the harmonic part.
    #[arg(long = "M2")]
    m2: Option<f64>,
}

impl Bounds {
    fn params(self) -> TheoremParams {
        TheoremParams {
            m: self.m,
            m1: self.m1,
            m2: self.m2,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Univalence and schlicht radii for one theorem row.
    Radii {
        #[arg(long)]
        theorem: String,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Evaluate a remark's inequality chain over a parameter grid.
    Compare {
        #[arg(long)]
        remark: String,
        /// `start:stop:step`, stop included.
        #[arg(long)]
        grid: String,
        /// Fixed M1 for the two-bound remarks; repeat for several values.
        #[arg(long = "M1", default_values_t = [1.0])]
        m1: Vec<f64>,
    },
    /// Extract coefficients of a corpus map and audit them.
    Coeffs {
        #[arg(long)]
        map: String,
        #[command(flatten)]
        bounds: Bounds,
        #[arg(long)]
        a: Option<f64>,
        #[arg(long)]
        n: Option<u32>,
        /// Power of `vstrip_m`.
        #[arg(long = "m", id = "power")]
        power: Option<u32>,
        #[arg(long = "n-max", default_value_t = 16)]
        n_max: usize,
        /// `bounded_modulus` (`bounded`) or `sum_modulus` (`sum`); defaults to every declared audit.
        #[arg(long)]
        mode: Option<String>,
    },
    /// Injectivity and coverage scans of a theorem configuration.
    Verify {
        #[arg(
            long,
            required_unless_present = "classical",
            conflicts_with = "classical"
        )]
        theorem: Option<String>,
        /// Scan the classical Landau extremal instead.
        #[arg(long)]
        classical: bool,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// List the standard corpus.
    CorpusList,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(&cli) {
        Ok(report) => {
            let out = io::stdout().lock();
            if cli.csv {
                if let Err(e) = report.table.write_csv(out) {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            } else {
                use io::Write;
                let mut out = out;
                let _ = writeln!(out, "{}", report::to_json_string(&report.to_value()));
            }
            ExitCode::from(report.status.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Report, Error> {
    if cli.tol.is_nan() || cli.tol <= 0.0 {
        return Err(Error::Domain(format!(
            "--tol must be positive, got {}",
            cli.tol
        )));
    }
    let opts = SolverOptions {
        tol: cli.tol,
        ..SolverOptions::default()
    };
    match &cli.command {
        Command::Radii { theorem, bounds } => radii(theorem, *bounds, opts),
        Command::Compare { remark, grid, m1 } => compare(remark, grid, m1, opts),
        Command::Coeffs {
            map,
            bounds,
            a,
            n,
            power,
            n_max,
            mode,
        } => coeffs(map, *bounds, *a, *n, *power, *n_max, mode.as_deref()),
        Command::Verify {
            theorem,
            classical,
            bounds,
        } => verify(theorem.as_deref(), *classical, *bounds, cli.grid_n, opts),
        Command::CorpusList => corpus_list(),
    }
}

fn bound_inputs(r: &mut Report, b: Bounds) {
    for (k, v) in [("M", b.m), ("M1", b.m1), ("M2", b.m2)] {
        if let Some(v) = v {
            r.input(k, v);
        }
    }
}

fn radii(theorem: &str, bounds: Bounds, opts: SolverOptions) -> Result<Report, Error> {
    let id: TheoremId = theorem.parse()?;
    let res = theorem_radius_with(id, bounds.params(), opts)?;
    if res.nonpositive_sigma {
        eprintln!("warning: sigma = {} is not positive for these parameters", res.sigma);
    }
    let mut r = Report::new("radii");
    r.input("theorem", id.as_str()).input("tol", opts.tol);
    bound_inputs(&mut r, bounds);
    r.field("rho", res.rho)
        .field("sigma", res.sigma)
        .field("residual", res.residual)
        .field("unconstrained", res.unconstrained)
        .field("iterations", res.iterations)
        .field("nonpositive_sigma", res.nonpositive_sigma)
        .field("family", format!("{:?}", id.family()));
    r.table = Table::new(["theorem", "rho", "sigma", "residual", "unconstrained"]);
    r.table.push(vec![
        id.as_str().into(),
        res.rho.into(),
        res.sigma.into(),
        res.residual.into(),
        res.unconstrained.into(),
    ]);
    Ok(r)
}

/// Column names of each remark's radii and schlicht radii, in chain order.
fn chain_columns(id: RemarkId) -> (&'static [&'static str], &'static [&'static str]) {
    match id {
        RemarkId::R27 => (
            &["r1_prime", "r1", "rho3"],
            &["sigma1_prime", "sigma1", "big_r3"],
        ),
        RemarkId::R29 => (
            &["r2_prime", "r2", "rho4"],
            &["sigma2_prime", "sigma2", "big_r4"],
        ),
        RemarkId::R211 => (
            &["r3_prime", "r3", "rho5"],
            &["sigma3_prime", "sigma3", "big_r5"],
        ),
        RemarkId::R213 => (
            &["r4_prime", "r4", "rho6", "rho2"],
            &["sigma4_prime", "sigma4", "big_r6", "big_r2"],
        ),
    }
}

fn parse_grid(spec: &str) -> Result<Vec<f64>, Error> {
    let parts: Vec<&str> = spec.split(':').collect();
    let bad = || Error::Domain(format!("--grid expects start:stop:step, got `{spec}`"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let nums = parts
        .iter()
        .map(|p| p.trim().parse::<f64>().map_err(|_| bad()))
        .collect::<Result<Vec<_>, _>>()?;
    linear_grid(nums[0], nums[1], nums[2])
}

fn compare(remark: &str, grid: &str, m1s: &[f64], opts: SolverOptions) -> Result<Report, Error> {
    let id: RemarkId = remark.parse()?;
    let params = parse_grid(grid)?;
    let points: Vec<GridPoint> = if id.uses_two_bounds() {
        m1s.iter()
            .flat_map(|&m1| {
                params.iter().map(move |&p| GridPoint {
                    param: p,
                    m1: Some(m1),
                })
            })
            .collect()
    } else {
        params
            .iter()
            .map(|&p| GridPoint { param: p, m1: None })
            .collect()
    };
    let chain = remark_chain(id, &points, opts)?;

    let mut r = Report::new("compare");
    r.input("remark", id.as_str())
        .input("grid", grid)
        .input("tol", opts.tol);
    if id.uses_two_bounds() {
        r.input("M1", m1s);
    }

    let (rad_cols, sig_cols) = chain_columns(id);
    let mut headers = vec!["param"];
    if id.uses_two_bounds() {
        headers.push("M1");
    }
    headers.extend_from_slice(rad_cols);
    headers.extend_from_slice(sig_cols);
    if id.last_link_is_weak() {
        headers.push("tail_equal");
    }
    headers.extend_from_slice(&["status", "pass"]);
    let mut table = Table::new(headers);
    for row in &chain.rows {
        let mut cells: Vec<Cell> = vec![row.param.into()];
        if id.uses_two_bounds() {
            cells.push(row.m1.into());
        }
        cells.extend(row.radii.iter().map(|&v| Cell::from(v)));
        cells.extend(row.sigmas.iter().map(|&v| Cell::from(v)));
        if id.last_link_is_weak() {
            cells.push(row.tail_equal.into());
        }
        let status = match row.status {
            ChainStatus::Pass => "pass",
            ChainStatus::Fail => "fail",
            ChainStatus::Exploratory => "exploratory",
        };
        cells.push(status.into());
        cells.push((row.radii_hold && row.sigmas_hold).into());
        table.push(cells);
    }
    r.table = table;
    r.field("param_name", id.param_name());
    r.status = if !chain.all_pass() {
        Status::Fail
    } else if chain.any_exploratory() {
        Status::Exploratory
    } else {
        Status::Ok
    };
    Ok(r)
}

#[allow(clippy::too_many_arguments)]
fn coeffs(
    map: &str,
    bounds: Bounds,
    a: Option<f64>,
    n: Option<u32>,
    power: Option<u32>,
    n_max: usize,
    mode: Option<&str>,
) -> Result<Report, Error> {
    let name: CorpusName = map.parse()?;
    let mode: Option<AuditMode> = mode.map(str::parse).transpose()?;
    let params = CorpusParams {
        m: bounds.m,
        m1: bounds.m1,
        m2: bounds.m2,
        a,
        n,
        power,
    };
    let entry = corpus(name, params)?;

    let mut r = Report::new("coeffs");
    r.input("map", name.as_str()).input("n_max", n_max);
    bound_inputs(&mut r, bounds);
    for (k, v) in [
        ("a", a),
        ("n", n.map(f64::from)),
        ("m", power.map(f64::from)),
    ] {
        if let Some(v) = v {
            r.input(k, v);
        }
    }
    if let Some(mode) = mode {
        r.input("mode", mode.as_str());
    }

    let mut table = Table::new([
        "part",
        "n",
        "a_re",
        "a_im",
        "b_re",
        "b_im",
        "modulus_sum",
        "mode",
        "bound",
        "slack",
    ]);
    let mut audits = Vec::new();
    let mut pass = true;
    for declared in entry
        .audits
        .iter()
        .filter(|d| mode.is_none_or(|m| m == d.mode))
    {
        let f = entry
            .component(declared.part)
            .expect("declared part exists");
        let part = match declared.part {
            Part::Whole => "f",
            Part::G => "g",
            Part::H => "h",
        };
        let audit = audit_bounds(
            &entry.label(),
            |z| f.eval(z),
            declared.m,
            declared.mode,
            n_max,
        )?;
        let coeffs = extract_coefficients(|z| f.eval(z), n_max, DEFAULT_RADIUS, DEFAULT_SAMPLES)?;
        for c in &coeffs {
            let row = audit.row(c.n);
            table.push(vec![
                part.into(),
                c.n.into(),
                c.a.re.into(),
                c.a.im.into(),
                c.b.re.into(),
                c.b.im.into(),
                c.modulus_sum().into(),
                declared.mode.as_str().into(),
                row.map(|x| x.bound).into(),
                row.map(|x| x.slack).into(),
            ]);
        }
        pass &= audit.passes();
        audits.push(serde_json::json!({
            "part": part,
            "mode": declared.mode.as_str(),
            "M": declared.m,
            "min_slack": audit.min_slack(),
            "lambda_at_origin": audit.lambda_at_origin,
            "pass": audit.passes(),
        }));
    }
    if audits.is_empty() {
        return Err(Error::Domain(format!(
            "{name} declares no {} audit",
            mode.map_or("", |m| m.as_str())
        )));
    }
    r.table = table;
    r.field("label", entry.label()).field("audits", audits);
    r.status = if pass { Status::Ok } else { Status::Fail };
    Ok(r)
}

fn verify(
    theorem: Option<&str>,
    classical: bool,
    bounds: Bounds,
    grid_n: usize,
    opts: SolverOptions,
) -> Result<Report, Error> {
    let mut r = Report::new("verify");
    let cfg = if classical {
        let m = bounds
            .m
            .ok_or_else(|| Error::Domain("--classical requires --M".into()))?;
        r.input("classical", true);
        classical_configuration(m)?
    } else {
        let id: TheoremId = theorem.expect("clap requires --theorem").parse()?;
        r.input("theorem", id.as_str()).input("tol", opts.tol);
        theorem_configuration(id, bounds.params(), opts)?
    };
    bound_inputs(&mut r, bounds);
    r.input("grid_n", grid_n);

    let scan = ScanOptions {
        grid_n,
        ..ScanOptions::default()
    };
    let rep = run_verification(&cfg, scan)?;
    if let Some(res) = &cfg.radius {
        r.field("residual", res.residual)
            .field("unconstrained", res.unconstrained);
    }
    r.field("rho", rep.rho)
        .field("sigma", rep.sigma)
        .field("map", &rep.map)
        .field("scan_radius", cfg.scan_radius)
        .field("injectivity", &rep.injectivity)
        .field("coverage", &rep.coverage)
        .field("min_jacobian", rep.min_jacobian)
        .field(
            "note",
            "scans are falsifiers: pass means no violation was found at grid scale",
        );

    let mut table = Table::new([
        "map",
        "rho",
        "sigma",
        "scan_radius",
        "injective",
        "min_separation_ratio",
        "covered",
        "min_jacobian",
        "pass",
    ]);
    table.push(vec![
        rep.map.clone().into(),
        rep.rho.into(),
        rep.sigma.into(),
        cfg.scan_radius.into(),
        rep.injectivity.pass.into(),
        rep.injectivity.min_separation_ratio.into(),
        rep.coverage.as_ref().map_or(Cell::Empty, |c| c.pass.into()),
        rep.min_jacobian.min.into(),
        rep.pass.into(),
    ]);
    r.table = table;
    r.status = if rep.pass { Status::Ok } else { Status::Fail };
    Ok(r)
}

fn corpus_list() -> Result<Report, Error> {
    let entries = standard_corpus()?;
    let mut r = Report::new("corpus-list");
    let mut table = Table::new(["name", "kind", "label", "audits"]);
    for e in &entries {
        let audits: Vec<String> = e
            .audits
            .iter()
            .map(|d| format!("{:?}:{}<={}", d.part, d.mode.as_str(), d.m).to_lowercase())
            .collect();
        table.push(vec![
            e.name.as_str().into(),
            format!("{:?}", e.kind).to_lowercase().into(),
            e.label().into(),
            audits.join(" ").into(),
        ]);
    }
    r.table = table;
    r.field("names", CorpusName::valid_ids());
    Ok(r)
}
