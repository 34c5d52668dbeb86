//! Command-line surface over the library: model catalog, identity and
//! pinching checks, and the seeded verification sweeps.
//!
//! Exit codes: 0 — all requested checks passed; 1 — a verification or
//! identity check failed (details in the output); 2 — usage error.
//! The environment variable `CURV4_SEED` overrides `--seed` when set.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::path::PathBuf;

use crate::decomposition::decompose;
use crate::error::CurvError;
use crate::models::{
    catalog, hamilton_identities, kahler_ratio_balance, make_model, soliton_residual,
    weitzenbock_balance, ModelName, Normalization,
};
use crate::pinching::{classify, evaluate, PinchReport};
use crate::report::{
    CertificateItem, CheckItem, ConditionItem, CountsItem, Envelope, FailureItem, LabelItem,
    ListItem, ModelItem, Num, ResultItem, SpectrumItem, StructureItem, ValueItem,
};
use crate::verify::{
    certify_det_inequality, certify_second_kind_structure, certify_sharp_estimate,
    check_kn_identity, reference_spectrum_checks, sample_rng, SampleConfig,
};
use rand::Rng;

const IDENTITY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Parser)]
#[command(
    name = "curv4",
    version,
    about = "Four-dimensional curvature models, pinching checks, and seeded certification"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write the report to a file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Model catalog.
    Models {
        #[command(subcommand)]
        cmd: ModelsCmd,
    },
    /// Pointwise checks on one model.
    Check {
        #[command(subcommand)]
        cmd: CheckCmd,
    },
    /// Seeded verification sweeps.
    Verify {
        #[command(subcommand)]
        cmd: VerifyCmd,
    },
    /// Run every check and verification, writing one combined report.
    Report {
        /// Include the whole catalog and every verification.
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 200)]
        grid: usize,
        #[arg(long, default_value_t = 2.7)]
        gamma: f64,
    },
}

#[derive(Subcommand)]
enum ModelsCmd {
    /// List the catalog identifiers.
    List,
    /// Closed-form data for one model at a point.
    Show {
        /// Model identifier (s4, cp2, s2xr2, s3xr, r4, s2xs2).
        name: String,
        /// Curvature scale: `shrinker` or `paper`.
        #[arg(long, default_value = "shrinker")]
        scale: String,
        /// Flat-factor coordinates, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        point: Vec<f64>,
    },
}

#[derive(Subcommand)]
enum CheckCmd {
    /// Soliton and balance identities at randomized points.
    Identities {
        name: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of sample points.
        #[arg(long, default_value_t = 10)]
        samples: usize,
    },
    /// The seven pinching conditions.
    Pinch {
        name: String,
        /// Zhang pinching parameter (must be positive).
        #[arg(long, default_value_t = 2.7)]
        gamma: f64,
        #[arg(long, default_value = "shrinker")]
        scale: String,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Certify the sharp pairing bound (random, structured, extremal stages).
    LemmaK {
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        grid: usize,
    },
    /// Sample the duality between the second-kind action and the product pairing.
    Kn {
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Sample the determinant bound on the self-dual spectrum.
    Det {
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check the block structure of the second-kind matrix for a normal form.
    SecondKind {
        /// Self-dual spectrum, three comma-separated values summing to zero.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        lambda: Vec<f64>,
        /// Anti-self-dual spectrum.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        mu: Vec<f64>,
    },
}

/// Runs the CLI against explicit argv and writers; returns the exit code.
pub fn run<I, O, E>(argv: I, out: &mut O, err: &mut E) -> i32
where
    I: IntoIterator<Item = String>,
    O: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(rendered.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(rendered.as_bytes());
                    2
                }
            };
        }
    };

    let (envelope, exit) = match dispatch(&cli.command) {
        Ok(pair) => pair,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
    };

    let rendered = match cli.format {
        Format::Json => envelope.to_json(),
        Format::Csv => envelope.to_csv(),
        Format::Text => envelope.to_text(),
    };
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, rendered) {
            let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
            return 2;
        }
    } else if out.write_all(rendered.as_bytes()).is_err() {
        return 2;
    }
    exit
}

/// A usage-level error: reported on stderr with exit code 2.
struct Usage(String);

impl From<CurvError> for Usage {
    fn from(e: CurvError) -> Self {
        Usage(e.to_string())
    }
}

fn dispatch(cmd: &Cmd) -> Result<(Envelope, i32), Usage> {
    match cmd {
        Cmd::Models { cmd } => match cmd {
            ModelsCmd::List => Ok(models_list()),
            ModelsCmd::Show { name, scale, point } => models_show(name, scale, point),
        },
        Cmd::Check { cmd } => match cmd {
            CheckCmd::Identities {
                name,
                seed,
                samples,
            } => check_identities(name, effective_seed(*seed)?, *samples),
            CheckCmd::Pinch { name, gamma, scale } => check_pinch(name, *gamma, scale),
        },
        Cmd::Verify { cmd } => match cmd {
            VerifyCmd::LemmaK {
                samples,
                seed,
                grid,
            } => verify_lemma_k(effective_seed(*seed)?, *samples, *grid),
            VerifyCmd::Kn { samples, seed } => verify_kn(effective_seed(*seed)?, *samples),
            VerifyCmd::Det { samples, seed } => verify_det(effective_seed(*seed)?, *samples),
            VerifyCmd::SecondKind { lambda, mu } => verify_second_kind(lambda, mu),
        },
        Cmd::Report {
            all,
            seed,
            samples,
            grid,
            gamma,
        } => {
            if !all {
                return Err(Usage("`report` requires --all".into()));
            }
            report_all(effective_seed(*seed)?, *samples, *grid, *gamma)
        }
    }
}

/// `CURV4_SEED` takes precedence over `--seed` when set.
fn effective_seed(flag: u64) -> Result<u64, Usage> {
    match std::env::var("CURV4_SEED") {
        Ok(v) => v
            .parse::<u64>()
            .map_err(|_| Usage(format!("CURV4_SEED must be an unsigned integer, got `{v}`"))),
        Err(_) => Ok(flag),
    }
}

fn require_positive(samples: usize) -> Result<(), Usage> {
    if samples == 0 {
        Err(Usage("--samples must be at least 1".into()))
    } else {
        Ok(())
    }
}

fn parse_model(name: &str) -> Result<ModelName, Usage> {
    name.parse::<ModelName>().map_err(Usage::from)
}

fn parse_scale(scale: &str) -> Result<Normalization, Usage> {
    scale.parse::<Normalization>().map_err(Usage::from)
}

fn models_list() -> (Envelope, i32) {
    let mut env = Envelope::new("models list", 0);
    env.results.push(ResultItem::List(ListItem {
        id: "models".into(),
        models: catalog().iter().map(|m| m.id().to_string()).collect(),
    }));
    (env, 0)
}

fn model_item(name: ModelName, normalization: Normalization, point: &[f64]) -> Result<ModelItem, Usage> {
    let m = make_model(name, normalization, point)?;
    let d = decompose(&m.curvature).map_err(Usage::from)?;
    Ok(ModelItem {
        id: "model".into(),
        name: name.id().into(),
        normalization: normalization.to_string(),
        scalar: m.scalar,
        ric0_norm: d.ric0.norm(),
        wplus_spectrum: d.self_dual_spectrum(),
        wminus_spectrum: d.anti_self_dual_spectrum(),
        det_wplus: d.self_dual_det(),
        kahler_ratio: Num::from_option(crate::pinching::kahler_ratio(&d)),
        soliton_residual: soliton_residual(&m),
        f_value: m.f_value,
        grad_f: [m.grad_f[0], m.grad_f[1], m.grad_f[2], m.grad_f[3]],
        point: m.point_params.clone(),
        classification: classify(&m),
    })
}

fn models_show(name: &str, scale: &str, point: &[f64]) -> Result<(Envelope, i32), Usage> {
    let model = parse_model(name)?;
    let normalization = parse_scale(scale)?;
    let mut env = Envelope::new("models show", 0);
    env.model = Some(model.id().into());
    env.results
        .push(ResultItem::Model(model_item(model, normalization, point)?));
    Ok((env, 0))
}

/// Deterministic sample points for a model: seeded uniforms in [−10, 10] on
/// every free coordinate, with the last sample pinned to distance 10 from
/// the section origin.
fn sample_points(name: ModelName, seed: u64, samples: usize) -> Vec<Vec<f64>> {
    let arity = name.point_arity();
    let mut points = Vec::with_capacity(samples);
    for i in 0..samples {
        if arity == 0 {
            points.push(Vec::new());
            continue;
        }
        if i + 1 == samples && samples > 1 {
            // Boundary point with |coords| = 10.
            let v = 10.0 / (arity as f64).sqrt();
            points.push(vec![v; arity]);
            continue;
        }
        let mut rng = sample_rng(seed, i as u64);
        points.push((0..arity).map(|_| rng.gen_range(-10.0..=10.0)).collect());
    }
    points
}

fn check_identities(name: &str, seed: u64, samples: usize) -> Result<(Envelope, i32), Usage> {
    require_positive(samples)?;
    let model = parse_model(name)?;
    let mut env = Envelope::new("check identities", seed);
    env.model = Some(model.id().into());

    let mut worst_soliton = 0.0_f64;
    let mut worst_hamilton = [0.0_f64; 5];
    let mut worst_weitz = 0.0_f64;
    let mut worst_ratio: Option<f64> = None;

    for point in sample_points(model, seed, samples) {
        let m = make_model(model, Normalization::Shrinker, &point)?;
        worst_soliton = worst_soliton.max(soliton_residual(&m));
        let h = hamilton_identities(&m).map_err(Usage::from)?;
        for (w, r) in worst_hamilton.iter_mut().zip(h) {
            *w = w.max(r);
        }
        worst_weitz = worst_weitz.max(weitzenbock_balance(&m).map_err(Usage::from)?.abs());
        match kahler_ratio_balance(&m) {
            Ok(v) => worst_ratio = Some(worst_ratio.unwrap_or(0.0).max(v.abs())),
            Err(CurvError::ZeroScalarCurvature) => {}
            Err(e) => return Err(Usage::from(e)),
        }
    }

    let mut push = |id: String, value: f64| {
        env.results.push(ResultItem::Check(CheckItem {
            id,
            value: Num::of(value),
            pass: value <= IDENTITY_TOL,
        }));
    };
    push("soliton_residual".into(), worst_soliton);
    for (k, w) in worst_hamilton.iter().enumerate() {
        push(format!("hamilton_{}", k + 1), *w);
    }
    push("weitzenbock_balance".into(), worst_weitz);
    if let Some(v) = worst_ratio {
        push("ratio_balance".into(), v);
    }

    let pass = env.results.iter().all(|r| match r {
        ResultItem::Check(c) => c.pass,
        _ => true,
    });
    env.pass = pass;
    Ok((env, if pass { 0 } else { 1 }))
}

fn condition_items(report: &PinchReport) -> Vec<ResultItem> {
    let mut out = Vec::new();
    for c in &report.conditions {
        out.push(ResultItem::Condition(ConditionItem {
            id: c.id.into(),
            lhs: Num::from_option(c.lhs),
            rhs: Num::from_option(c.rhs),
            margin: Num::from_option(c.margin),
            holds: c.holds,
            applicable: c.applicable,
            sub_margins: c.sub_margins,
        }));
    }
    out
}

fn check_pinch(name: &str, gamma: f64, scale: &str) -> Result<(Envelope, i32), Usage> {
    if !(gamma > 0.0 && gamma.is_finite()) {
        return Err(Usage("--gamma must be positive".into()));
    }
    let model = parse_model(name)?;
    let normalization = parse_scale(scale)?;
    let m = make_model(model, normalization, &[])?;
    let d = decompose(&m.curvature).map_err(Usage::from)?;
    let report = evaluate(&d, gamma);

    let mut env = Envelope::new("check pinch", 0);
    env.model = Some(model.id().into());
    env.results = condition_items(&report);
    let scalars = [
        ("scalar_r", Num::of(report.scalar)),
        ("ric0_norm", Num::of(report.ric0_norm)),
        ("wplus_norm", Num::of(report.wplus_norm)),
        ("wminus_norm", Num::of(report.wminus_norm)),
        ("det_wplus", Num::of(report.det_wplus)),
        ("kahler_ratio", Num::from_option(report.kahler_ratio)),
        ("sharp_ratio", Num::from_option(report.sharp_ratio)),
        ("pairing", Num::of(report.pairing)),
        ("quarter_contraction", Num::of(report.quarter_contraction)),
        ("gamma", Num::of(report.gamma)),
    ];
    for (id, value) in scalars {
        env.results
            .push(ResultItem::Value(ValueItem { id: id.into(), value }));
    }
    env.results.push(ResultItem::Label(LabelItem {
        id: "classification".into(),
        label: classify(&m),
    }));
    Ok((env, 0))
}

fn verify_lemma_k(seed: u64, samples: usize, grid: usize) -> Result<(Envelope, i32), Usage> {
    require_positive(samples)?;
    if grid == 0 {
        return Err(Usage("--grid must be at least 1".into()));
    }
    let cfg = SampleConfig {
        seed,
        count: samples,
        grid_resolution: grid,
        ..SampleConfig::default()
    };
    let mut env = Envelope::new("verify lemma-k", seed);
    match certify_sharp_estimate(&cfg) {
        Ok(cert) => {
            env.results.push(ResultItem::Certificate(CertificateItem {
                id: "lemma-k".into(),
                max_ratio: Num::of(cert.max_ratio),
                argmax_lambda: cert.argmax_lambda,
                argmax_a: cert.argmax_a,
                attained_at_vertex: cert.attained_at_vertex,
                violations: cert.violations,
                samples: cert.samples_checked,
            }));
            env.pass = cert.violations == 0 && cert.attained_at_vertex;
        }
        Err(e) => {
            env.results.push(ResultItem::Failure(FailureItem {
                id: "lemma-k".into(),
                error: e.to_string(),
            }));
            env.pass = false;
        }
    }
    let exit = i32::from(!env.pass);
    Ok((env, exit))
}

fn verify_kn(seed: u64, samples: usize) -> Result<(Envelope, i32), Usage> {
    require_positive(samples)?;
    let cfg = SampleConfig {
        seed,
        count: samples,
        ..SampleConfig::default()
    };
    let violations = check_kn_identity(&cfg) as u64;
    let mut env = Envelope::new("verify kn", seed);
    env.results.push(ResultItem::Counts(CountsItem {
        id: "kn-duality".into(),
        samples: samples as u64,
        violations,
    }));
    env.pass = violations == 0;
    let exit = i32::from(!env.pass);
    Ok((env, exit))
}

fn verify_det(seed: u64, samples: usize) -> Result<(Envelope, i32), Usage> {
    require_positive(samples)?;
    let cfg = SampleConfig {
        seed,
        count: samples,
        ..SampleConfig::default()
    };
    let violations = certify_det_inequality(&cfg) as u64;
    let mut env = Envelope::new("verify det", seed);
    env.results.push(ResultItem::Counts(CountsItem {
        id: "det-inequality".into(),
        samples: samples as u64,
        violations,
    }));
    env.pass = violations == 0;
    let exit = i32::from(!env.pass);
    Ok((env, exit))
}

fn spectrum_items(env: &mut Envelope) -> Result<bool, Usage> {
    let checks = reference_spectrum_checks().map_err(Usage::from)?;
    let mut all = true;
    for c in checks {
        all &= c.passes();
        env.results.push(ResultItem::Spectrum(SpectrumItem {
            id: "reference-spectrum".into(),
            model: c.model.id().into(),
            scale: c.scale,
            signs_match: c.signs_match,
            multiplicities_match: c.multiplicities_match,
            ratios_match: c.ratios_match,
            spectrum: c.spectrum,
            reference: c.reference,
        }));
    }
    Ok(all)
}

fn verify_second_kind(lambda: &[f64], mu: &[f64]) -> Result<(Envelope, i32), Usage> {
    let lam: [f64; 3] = lambda
        .try_into()
        .map_err(|_| Usage("--lambda takes exactly three values".into()))?;
    let mu: [f64; 3] = mu
        .try_into()
        .map_err(|_| Usage("--mu takes exactly three values".into()))?;

    let mut env = Envelope::new("verify second-kind", 0);
    match certify_second_kind_structure(lam, mu) {
        Ok(s) => {
            env.results.push(ResultItem::Structure(StructureItem {
                id: "second-kind-structure".into(),
                k: Num::from_option(s.k),
                max_offdiag: s.max_offdiag,
                max_residual: s.max_residual,
                lambda: lam,
                mu,
                diagonal: s.diagonal,
            }));
        }
        Err(e @ CurvError::PreconditionViolated { .. }) => return Err(Usage::from(e)),
        Err(e) => {
            env.results.push(ResultItem::Failure(FailureItem {
                id: "second-kind-structure".into(),
                error: e.to_string(),
            }));
            env.pass = false;
        }
    }
    let spectra_ok = spectrum_items(&mut env)?;
    env.pass = env.pass && spectra_ok;
    let exit = i32::from(!env.pass);
    Ok((env, exit))
}

fn report_all(seed: u64, samples: usize, grid: usize, gamma: f64) -> Result<(Envelope, i32), Usage> {
    require_positive(samples)?;
    if !(gamma > 0.0 && gamma.is_finite()) {
        return Err(Usage("--gamma must be positive".into()));
    }
    let mut env = Envelope::new("report", seed);
    let mut pass = true;

    for model in catalog() {
        let (section, _) = check_identities(model.id(), seed, 10)?;
        pass &= section.pass;
        env.results.push(ResultItem::Section(Box::new(section)));
        let (section, _) = check_pinch(model.id(), gamma, "shrinker")?;
        pass &= section.pass;
        env.results.push(ResultItem::Section(Box::new(section)));
    }

    let (section, _) = verify_kn(seed, samples)?;
    pass &= section.pass;
    env.results.push(ResultItem::Section(Box::new(section)));

    let (section, _) = verify_det(seed, samples)?;
    pass &= section.pass;
    env.results.push(ResultItem::Section(Box::new(section)));

    let (section, _) = verify_lemma_k(seed, samples, grid)?;
    pass &= section.pass;
    env.results.push(ResultItem::Section(Box::new(section)));

    let (section, _) = verify_second_kind(&[2.0, -1.0, -1.0], &[0.5, 0.25, -0.75])?;
    pass &= section.pass;
    env.results.push(ResultItem::Section(Box::new(section)));

    env.pass = pass;
    Ok((env, i32::from(!pass)))
}
