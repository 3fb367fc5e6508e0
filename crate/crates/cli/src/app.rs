//! Argument parsing and command dispatch.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;

use torsionlab_core::exactalg::{int, Poly, Rational, Var};
use torsionlab_core::kostant::{c_const, kostant_data, KostantError};
use torsionlab_core::plancherel::reduced_density;
use torsionlab_core::rootsys::{
    casimir_poly, dominant_weight, theta_twist, user_coords, weyl_dim_poly, AffineWeight, GroupName, GroupSpec,
    Weight,
};
use torsionlab_core::spectrum::{gap_from_restriction, p_character, sl3_weight_labels};
use torsionlab_core::torsion::{classify, compute, SymbolicConstant};

use crate::error::{CliError, ErrorCode};
use crate::golden;
use crate::latex::{parse_poly, poly_to_latex, prefactor_to_latex, torsion_to_latex};
use crate::serial::{bipoly_json, int_coords, poly_json, KostantRow, Prefactor, Rat, Response};
use crate::table::corollary_constants;
use crate::verify::{self, VerifyConfig};

#[derive(Debug, Parser)]
#[command(name = "torsionlab", version, about = "Exact L²-torsion polynomials for SO⁰(p,q), p, q odd, and SL(3,ℝ)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Latex,
    Text,
}

#[derive(Debug, Args)]
pub struct Target {
    /// `so(p,q)` or `sl3`.
    #[arg(long)]
    pub group: String,
    /// Comma-separated integers: e-coordinates for so(p,q), (τ₁,τ₂) for sl3.
    #[arg(long, allow_hyphen_values = true)]
    pub weight: String,
}

#[derive(Debug, Args)]
pub struct Eval {
    /// Evaluate at this integer m as well.
    #[arg(long, conflicts_with = "symbolic", allow_hyphen_values = true)]
    pub m: Option<i64>,
    /// Polynomial in m only (the default).
    #[arg(long)]
    pub symbolic: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Torsion polynomial P_Λ(m) and its prefactor.
    Compute {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        eval: Eval,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Weyl dimension polynomial dim τ_Λ(m).
    Dim {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        eval: Eval,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Kostant data (ℓ, λ, σ) of the θ-normalized weight.
    Kostant {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Reduced Plancherel density for an M-weight affine in m.
    Plancherel {
        #[arg(long)]
        group: String,
        /// Comma-separated affine expressions in m, e.g. `m+1,m,0`.
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
        #[arg(long, allow_hyphen_values = true)]
        m: Option<i64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Spectral gap of the SL3 Laplacian on p-forms twisted by τ_Λ(m).
    Gap {
        #[arg(long, default_value = "sl3")]
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run the invariant suites.
    Verify {
        /// Overrides TORSIONLAB_SEED.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = verify::DEFAULT_MAX_RANK)]
        max_rank: usize,
        /// Golden corpus to diff instead of the built-in one.
        #[arg(long)]
        golden: Option<PathBuf>,
    },
    /// Reference tables.
    Table {
        #[command(subcommand)]
        which: TableKind,
    },
    /// Golden corpus maintenance.
    Golden {
        #[command(subcommand)]
        action: GoldenAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum TableKind {
    /// Asymptotic constants of log T for the fundamental-type weights.
    CorollaryConstants {
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Debug, Subcommand)]
pub enum GoldenAction {
    /// Recompute the corpus and write it as JSON Lines.
    Regenerate {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Exit status and output of one invocation. Progress lines from `verify`
/// and `golden regenerate` go straight to stderr and are not captured.
#[derive(Debug)]
pub struct Dispatch {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn dispatch<I, T>(argv: I) -> Dispatch
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Dispatch { code: 0, stdout: e.to_string(), stderr: String::new() };
            }
            let err = CliError::new(ErrorCode::Usage, first_line(&e.to_string()));
            return Dispatch { code: 2, stdout: Response::from(&err).to_json(), stderr: e.render().to_string() };
        }
    };
    match run(cli.command) {
        Ok((code, stdout)) => Dispatch { code, stdout, stderr: String::new() },
        Err(e) => Dispatch { code: 2, stdout: Response::from(&e).to_json(), stderr: format!("error: {e}\n") },
    }
}

fn first_line(s: &str) -> String {
    s.lines().next().unwrap_or_default().trim_start_matches("error: ").to_string()
}

fn parse_group_name(text: &str) -> Result<GroupName, CliError> {
    GroupName::parse(text).map_err(|e| CliError::new(ErrorCode::BadGroup, e.to_string()))
}

fn parse_group(text: &str) -> Result<GroupSpec, CliError> {
    Ok(GroupSpec::try_from(parse_group_name(text)?)?)
}

fn parse_weight(text: &str) -> Result<Vec<i64>, CliError> {
    let inner = text.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    if inner.trim().is_empty() {
        return Err(CliError::new(ErrorCode::BadWeight, "empty weight"));
    }
    inner
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .map_err(|_| CliError::new(ErrorCode::BadWeight, format!("`{}` is not an integer", tok.trim())))
        })
        .collect()
}

fn rationals(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| int(x)).collect()
}

fn check_m(m: Option<i64>) -> Result<Option<i64>, CliError> {
    match m {
        Some(v) if v < 0 => Err(CliError::new(ErrorCode::BadParameter, format!("m = {v} must be ≥ 0"))),
        other => Ok(other),
    }
}

fn emit(resp: &Response, format: Format, text: impl FnOnce() -> String, latex: Option<String>) -> Result<(i32, String), CliError> {
    match format {
        Format::Json => Ok((0, resp.to_json())),
        Format::Text => Ok((0, text())),
        Format::Latex => latex
            .map(|l| (0, l))
            .ok_or_else(|| CliError::new(ErrorCode::Usage, "latex output is not available for this command")),
    }
}

fn rational_latex(r: &Rational) -> String {
    poly_to_latex(&Poly::constant(Var::M, r.clone()))
}

pub fn run(command: Command) -> Result<(i32, String), CliError> {
    match command {
        Command::Compute { target, eval, format } => cmd_compute(&target, eval.m, format),
        Command::Dim { target, eval, format } => cmd_dim(&target, eval.m, format),
        Command::Kostant { target, format } => cmd_kostant(&target, format),
        Command::Plancherel { group, sigma, m, format } => cmd_plancherel(&group, &sigma, m, format),
        Command::Gap { group, weight, m, p, format } => cmd_gap(&group, &weight, m, p, format),
        Command::Verify { seed, max_rank, golden } => cmd_verify(seed, max_rank, golden),
        Command::Table { which: TableKind::CorollaryConstants { format } } => cmd_table(format),
        Command::Golden { action: GoldenAction::Regenerate { out } } => cmd_regenerate(out),
    }
}

fn cmd_compute(target: &Target, m: Option<i64>, format: Format) -> Result<(i32, String), CliError> {
    let name = parse_group_name(&target.group)?;
    let weight = parse_weight(&target.weight)?;
    let m = check_m(m)?;
    let result = compute(name, &rationals(&weight))?;
    let class = classify(name);
    let value = m.map(|m| result.poly.eval(&int(m)));
    let resp = Response::Torsion {
        group: name.to_string(),
        weight: weight.clone(),
        delta: class.delta,
        zero_flag: result.zero_flag,
        poly: poly_json(&result.poly),
        prefactor: Prefactor::from(&result.prefactor),
        m,
        value: value.clone().map(Rat),
    };
    let text = || {
        let mut out = if result.zero_flag {
            format!("P(m) = 0 (torsion vanishes: δ = {}, dim = {})\n", class.delta, class.dim)
        } else {
            format!("P(m) = {}\nprefactor = {}\n", result.poly, result.prefactor)
        };
        if let (Some(m), Some(v)) = (m, &value) {
            out.push_str(&format!("P({m}) = {v}\n"));
        }
        out
    };
    let mut latex = torsion_to_latex(&result.prefactor, &result.poly);
    if let (Some(m), Some(v)) = (m, &value) {
        latex.push_str(&format!("\nP({m}) = {}", rational_latex(v)));
    }
    emit(&resp, format, text, Some(latex + "\n"))
}

fn cmd_dim(target: &Target, m: Option<i64>, format: Format) -> Result<(i32, String), CliError> {
    let group = parse_group(&target.group)?;
    let weight = parse_weight(&target.weight)?;
    let m = check_m(m)?;
    let w = dominant_weight(group, &rationals(&weight))?;
    let dim = weyl_dim_poly(group, &w)?;
    let value = m.map(|m| dim.eval(&int(m)));
    let resp = Response::Dimension {
        group: group.to_string(),
        weight,
        poly: poly_json(&dim),
        m,
        value: value.clone().map(Rat),
    };
    let mut latex = poly_to_latex(&dim);
    if let (Some(m), Some(v)) = (m, &value) {
        latex.push_str(&format!("\n\\dim\\tau({m}) = {}", rational_latex(v)));
    }
    let text = || match (m, &value) {
        (Some(m), Some(v)) => format!("dim(m) = {dim}\ndim({m}) = {v}\n"),
        _ => format!("dim(m) = {dim}\n"),
    };
    emit(&resp, format, text, Some(latex + "\n"))
}

fn theta_normalized(group: GroupSpec, w: &Weight) -> Result<Weight, CliError> {
    let sig = group.theta_signature(w);
    if sig.is_zero() {
        Err(KostantError::ThetaInvariantWeight.into())
    } else if sig < Rational::zero() {
        Ok(theta_twist(group, w)?)
    } else {
        Ok(w.clone())
    }
}

fn cmd_kostant(target: &Target, format: Format) -> Result<(i32, String), CliError> {
    let group = parse_group(&target.group)?;
    let weight = parse_weight(&target.weight)?;
    let w = dominant_weight(group, &rationals(&weight))?;
    let norm = theta_normalized(group, &w)?;
    let casimir = casimir_poly(group, &norm)?;
    let mut rows = Vec::new();
    let mut lines = vec![format!("τ(Ω) = {casimir}")];
    for d in kostant_data(group, &norm)? {
        let c = c_const(group, &d.sigma)?;
        let split = &(&d.lambda * &d.lambda) + &c == casimir;
        lines.push(format!("ℓ={}  λ = {}  σ = {}  c(σ) = {}", d.length, d.lambda, d.sigma, c));
        rows.push(KostantRow {
            length: d.length,
            lambda: poly_json(&d.lambda),
            sigma: d.sigma.coords().iter().map(poly_json).collect(),
            c_sigma: poly_json(&c),
            casimir_split: split,
        });
    }
    let resp = Response::Kostant {
        group: group.to_string(),
        weight,
        normalized: int_coords(&user_coords(group, &norm)),
        casimir: poly_json(&casimir),
        data: rows,
    };
    emit(&resp, format, || lines.join("\n") + "\n", None)
}

fn parse_sigma(text: &str) -> Result<Vec<Poly>, CliError> {
    text.split(',')
        .map(|tok| {
            parse_poly(tok, Var::M).map_err(|e| CliError::new(ErrorCode::BadSigma, format!("`{}`: {e}", tok.trim())))
        })
        .collect()
}

fn cmd_plancherel(group: &str, sigma: &str, m: Option<i64>, format: Format) -> Result<(i32, String), CliError> {
    let group = parse_group(group)?;
    let m = check_m(m)?;
    let coords = parse_sigma(sigma)?;
    let sigma = AffineWeight::new(group.m_basis(), coords)?;
    let density = reduced_density(group, &sigma)?;
    let value = m.map(|m| density.eval_m(&int(m)));
    let resp = Response::Plancherel {
        group: group.to_string(),
        sigma: sigma.coords().iter().map(poly_json).collect(),
        density: bipoly_json(density.bipoly()),
        m,
        value: value.as_ref().map(poly_json),
    };
    let text = || match (m, &value) {
        (Some(m), Some(v)) => format!("P(t) = {density}\nP(t; m={m}) = {v}\n"),
        _ => format!("P(t) = {density}\n"),
    };
    emit(&resp, format, text, None)
}

fn cmd_gap(group: &str, weight: &str, m: i64, p: i64, format: Format) -> Result<(i32, String), CliError> {
    if parse_group_name(group)? != GroupName::Sl3 {
        return Err(CliError::new(ErrorCode::UnsupportedGroup, "gap is implemented for sl3 only"));
    }
    let weight = parse_weight(weight)?;
    if m < 1 {
        return Err(CliError::new(ErrorCode::BadParameter, format!("m = {m} must be ≥ 1")));
    }
    let p = usize::try_from(p)
        .ok()
        .filter(|&p| p <= 5)
        .ok_or_else(|| CliError::new(ErrorCode::BadParameter, format!("p = {p} must lie in 0..=5")))?;
    let w = dominant_weight(GroupSpec::Sl3, &rationals(&weight))?;
    let restriction = sl3_weight_labels(&w, m);
    let nu = p_character().exterior_power(p).tensor(&restriction);
    let max_spin = nu.decompose()?.keys().next_back().copied().unwrap_or(0);
    let casimir = casimir_poly(GroupSpec::Sl3, &w)?.eval(&int(m));
    let gap = gap_from_restriction(&w, &restriction, m, p)?;
    let text = format!("τ(Ω) = {casimir}\nmax spin = {max_spin}\ngap = {gap}\n");
    let resp = Response::Gap {
        group: "sl3".into(),
        weight,
        m,
        p,
        casimir: Rat(casimir),
        max_spin,
        gap: Rat(gap),
    };
    emit(&resp, format, || text, None)
}

fn cmd_verify(seed: Option<u64>, max_rank: usize, golden: Option<PathBuf>) -> Result<(i32, String), CliError> {
    let seed = match seed {
        Some(s) => s,
        None => match std::env::var("TORSIONLAB_SEED") {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| CliError::new(ErrorCode::Usage, format!("TORSIONLAB_SEED=`{v}` is not a u64")))?,
            Err(_) => verify::DEFAULT_SEED,
        },
    };
    if max_rank == 0 {
        return Err(CliError::new(ErrorCode::BadParameter, "max-rank must be ≥ 1"));
    }
    let mut cfg = VerifyConfig::new(seed, max_rank);
    if let Some(path) = golden {
        cfg.golden = std::fs::read_to_string(&path)
            .map_err(|e| CliError::new(ErrorCode::Io, format!("{}: {e}", path.display())))?;
    }
    let started = std::time::Instant::now();
    let reports = verify::run_all(&cfg, |r| {
        let mark = if r.ok { "ok  " } else { "FAIL" };
        eprintln!("[{mark}] {:02} {:<22} {:>6}/{:<6} {:>7} ms", r.id, r.name, r.passed, r.total, r.millis);
        for f in &r.failures {
            eprintln!("       {f}");
        }
    });
    let ok = reports.iter().all(|r| r.ok);
    let resp = Response::Verify {
        seed,
        max_rank,
        ok,
        millis: started.elapsed().as_millis() as u64,
        suites: reports,
    };
    Ok((if ok { 0 } else { 1 }, resp.to_json()))
}

fn cmd_table(format: Format) -> Result<(i32, String), CliError> {
    let rows = corollary_constants()?;
    let text = {
        let mut out = String::from("group      weight                        C_Λ   constant of m·dim τ(m)\n");
        for r in &rows {
            let c = SymbolicConstant::from(&r.asymptotic_constant);
            out.push_str(&format!(
                "{:<10} {:<29} {:<5} {}\n",
                r.group,
                format!("{:?}", r.weight),
                r.leading_constant.0.to_string(),
                c
            ));
        }
        out
    };
    let latex = rows
        .iter()
        .map(|r| {
            let c = SymbolicConstant::from(&r.asymptotic_constant);
            format!("{} & {:?} & {} & {} \\\\", r.group, r.weight, rational_latex(&r.leading_constant.0), prefactor_to_latex(&c))
        })
        .collect::<Vec<_>>()
        .join("\n");
    let resp = Response::Table { name: "corollary-constants".into(), rows };
    emit(&resp, format, || text, Some(latex + "\n"))
}

fn cmd_regenerate(out: Option<PathBuf>) -> Result<(i32, String), CliError> {
    let path = out.unwrap_or_else(|| PathBuf::from(golden::default_path()));
    let records = golden::regenerate()?;
    std::fs::write(&path, golden::to_jsonl(&records))
        .map_err(|e| CliError::new(ErrorCode::Io, format!("{}: {e}", path.display())))?;
    eprintln!("wrote {} records to {}", records.len(), path.display());
    let resp = Response::Golden { path: path.display().to_string(), records: records.len() };
    Ok((0, resp.to_json()))
}
