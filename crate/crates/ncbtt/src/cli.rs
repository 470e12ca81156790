//! Command-line front end: argument parsing, report assembly and exit codes.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical check fails,
//! 2 for usage, input and window errors.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ncbtt_core::algebra::Algebra;
use ncbtt_core::deform::{
    cyclicize, smoothness_probe, tangent_classes, Cyclicized, DeformError, Dgla, HochschildDgla, ProbeResult,
};
use ncbtt_core::exactla::{Field, Scalar};
use ncbtt_core::hochschild::{brace, cup, cyclic_project, delta, Cochain, MonoIndex};
use ncbtt_core::homology::{self, BvOutcome, HomologyError, Variant};
use ncbtt_core::trees::{self, TreeError};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::io::{load_algebra, CochainJson, FormatError};

pub const BANNER: &str = "evidence, not proof: finite windows and truncated bases only";
const DEFAULT_MAX_NODES: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Normalized,
    Strict,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Normalized => Variant::Normalized,
            VariantArg::Strict => Variant::Strict,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "ncbtt", version, about = "Exact Hochschild, cyclic, degeneration and deformation checks")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Seed for randomized checks.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Override the file's field: q or fp:<p>.
    #[arg(long, global = true, value_parser = parse_field)]
    pub field: Option<Field>,
    #[command(subcommand)]
    pub command: Command,
}

fn parse_field(s: &str) -> Result<Field, String> {
    s.parse()
}

#[derive(Debug, Args)]
pub struct Common {
    /// Algebra file (JSON).
    pub algebra: PathBuf,
    /// Largest cochain weight the computation may touch.
    #[arg(long, default_value_t = 4)]
    pub max_weight: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the cyclic A-infinity hypotheses.
    Validate {
        algebra: PathBuf,
        /// Largest arity for the A-infinity and cyclicity checks.
        #[arg(long, default_value_t = 4)]
        arity: usize,
    },
    /// Hochschild cohomology by weight.
    Hh {
        #[command(flatten)]
        common: Common,
        /// Include class representatives.
        #[arg(long)]
        representatives: bool,
    },
    /// Cohomology of the cyclic cochains.
    Cyclic {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "normalized")]
        variant: VariantArg,
        #[arg(long)]
        representatives: bool,
    },
    /// Degeneration test over k[u]/u^M for M up to the u-order.
    Degen {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 2)]
        u_order: usize,
        #[arg(long, value_enum, default_value = "normalized")]
        variant: VariantArg,
    },
    /// Compare cyclic cohomology with the strict u-complex.
    Iota {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 3)]
        u_order: usize,
    },
    /// BV defect on pairs of cohomology representatives.
    BvCheck {
        #[command(flatten)]
        common: Common,
    },
    /// Lift tangent classes order by order.
    Deform {
        algebra: PathBuf,
        /// Base ring k[t]/t^N.
        #[arg(long, default_value_t = 3)]
        order: usize,
        /// Largest weight of an unknown.
        #[arg(long, default_value_t = 3)]
        max_weight: usize,
        /// Largest weight of a tangent class.
        #[arg(long, default_value_t = 2)]
        tangent_weight: usize,
        /// Also lift inside the cyclic cochains and cyclicize the plain lifts.
        #[arg(long)]
        cyclic: bool,
    },
    /// Ribbon trees.
    #[command(subcommand)]
    Trees(TreesCommand),
}

#[derive(Debug, Subcommand)]
pub enum TreesCommand {
    /// List trees of an arity up to a degree, with a census.
    Enum {
        #[arg(long)]
        arity: usize,
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Structural checks and, given an algebra, action checks.
    Verify {
        algebra: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        arity: usize,
        /// Random trials per action check.
        #[arg(long, default_value_t = 3)]
        trials: usize,
    },
}

/// Captured result of a run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<HomologyError> for Failure {
    fn from(e: HomologyError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<DeformError> for Failure {
    fn from(e: DeformError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<TreeError> for Failure {
    fn from(e: TreeError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<ncbtt_core::hochschild::HochError> for Failure {
    fn from(e: ncbtt_core::hochschild::HochError) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// A finished report: JSON value, text rendering and whether all checks
/// passed.
struct Report {
    json: serde_json::Value,
    text: String,
    pass: bool,
}

fn report<T: Serialize>(body: &T, text: String, pass: bool) -> Report {
    Report { json: serde_json::to_value(body).expect("reports serialize"), text, pass }
}

#[derive(Serialize)]
struct Window {
    max_weight: usize,
    /// Largest weight (or total weight) whose results are exact.
    reliable_max: usize,
}

fn field_name(f: Field) -> String {
    match f {
        Field::Rational => "Q".to_string(),
        Field::Prime(p) => format!("Fp:{}", p),
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let s = e.to_string();
            return if code == 0 {
                Outcome { code, stdout: s, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: s }
            };
        }
    };
    match dispatch(&cli) {
        Ok(r) => {
            let stdout = match cli.format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&r.json).expect("json");
                    s.push('\n');
                    s
                }
                Format::Text => r.text,
            };
            Outcome { code: if r.pass { 0 } else { 1 }, stdout, stderr: String::new() }
        }
        Err(Failure::Usage(msg)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {}\n", msg) },
    }
}

fn load(path: &std::path::Path, cli: &Cli) -> Result<Algebra, Failure> {
    Ok(load_algebra(path, cli.field)?)
}

fn dispatch(cli: &Cli) -> Result<Report, Failure> {
    match &cli.command {
        Command::Validate { algebra, arity } => validate(&load(algebra, cli)?, *arity),
        Command::Hh { common, representatives } => {
            let a = load(&common.algebra, cli)?;
            cohomology(&a, common.max_weight, None, *representatives)
        }
        Command::Cyclic { common, variant, representatives } => {
            let a = load(&common.algebra, cli)?;
            cohomology(&a, common.max_weight, Some((*variant).into()), *representatives)
        }
        Command::Degen { common, u_order, variant } => {
            let a = load(&common.algebra, cli)?;
            degen(&a, common.max_weight, *u_order, (*variant).into())
        }
        Command::Iota { common, u_order } => {
            let a = load(&common.algebra, cli)?;
            iota(&a, common.max_weight, *u_order)
        }
        Command::BvCheck { common } => {
            let a = load(&common.algebra, cli)?;
            bv_check(&a, common.max_weight)
        }
        Command::Deform { algebra, order, max_weight, tangent_weight, cyclic } => {
            let a = load(algebra, cli)?;
            deform(&a, *order, *max_weight, *tangent_weight, *cyclic)
        }
        Command::Trees(TreesCommand::Enum { arity, max_degree }) => trees_enum(*arity, *max_degree),
        Command::Trees(TreesCommand::Verify { algebra, arity, trials }) => {
            let a = algebra.as_ref().map(|p| load(p, cli)).transpose()?;
            trees_verify(a.as_ref(), *arity, *trials, cli.seed)
        }
    }
}

#[derive(Serialize)]
struct CheckJson {
    name: String,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<String>>,
    detail: String,
}

#[derive(Serialize)]
struct ValidateJson {
    command: &'static str,
    algebra: String,
    field: String,
    arity_bound: usize,
    smooth_annotation: Option<bool>,
    passed: bool,
    checks: Vec<CheckJson>,
}

fn validate(a: &Algebra, arity: usize) -> Result<Report, Failure> {
    let r = a.validate(arity);
    let checks: Vec<CheckJson> = r
        .checks
        .iter()
        .map(|c| CheckJson { name: c.name.clone(), passed: c.passed, witness: c.witness.clone(), detail: c.detail.clone() })
        .collect();
    let mut text = format!("validate {} over {} (arity <= {})\n", a.name(), field_name(a.field()), arity);
    for c in &checks {
        let _ = write!(text, "  {:<26} {}", c.name, if c.passed { "ok" } else { "FAIL" });
        if let Some(w) = &c.witness {
            let _ = write!(text, "  witness {}", w.join(" "));
        }
        if !c.detail.is_empty() {
            let _ = write!(text, "  ({})", c.detail);
        }
        text.push('\n');
    }
    let _ = writeln!(text, "{}", if r.passed() { "all checks pass" } else { "some checks FAIL" });
    let body = ValidateJson {
        command: "validate",
        algebra: a.name().to_string(),
        field: field_name(a.field()),
        arity_bound: arity,
        smooth_annotation: a.smooth(),
        passed: r.passed(),
        checks,
    };
    Ok(report(&body, text, r.passed()))
}

#[derive(Serialize)]
struct GroupJson {
    weight: usize,
    dim: usize,
    dim_even: usize,
    dim_odd: usize,
    reliable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    representatives: Option<Vec<CochainJson>>,
}

#[derive(Serialize)]
struct CohomologyJson {
    command: &'static str,
    algebra: String,
    field: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    variant: Option<&'static str>,
    window: Window,
    groups: Vec<GroupJson>,
}

fn variant_name(v: Variant) -> &'static str {
    match v {
        Variant::Normalized => "normalized",
        Variant::Strict => "strict",
    }
}

fn cohomology(a: &Algebra, max_weight: usize, cyclic: Option<Variant>, reps: bool) -> Result<Report, Failure> {
    if max_weight == 0 {
        return Err(HomologyError::WindowTooSmall { needed: 1, max_weight }.into());
    }
    let mut groups = Vec::new();
    for n in 0..max_weight {
        let r = match cyclic {
            None => homology::hh(a, n, max_weight)?,
            Some(v) => homology::cyclic_cohomology(a, n, max_weight, v)?,
        };
        groups.push(GroupJson {
            weight: n,
            dim: r.dim,
            dim_even: r.dim_even,
            dim_odd: r.dim_odd,
            reliable: r.reliable,
            representatives: reps.then(|| r.representatives.iter().map(|c| CochainJson::new(a, c)).collect()),
        });
    }
    let name = if cyclic.is_some() { "cyclic" } else { "hh" };
    let mut text = format!("{} {} over {}, weights 0..{}\n", name, a.name(), field_name(a.field()), max_weight - 1);
    for g in &groups {
        let _ = writeln!(text, "  weight {}: dim {} (even {}, odd {})", g.weight, g.dim, g.dim_even, g.dim_odd);
        for c in g.representatives.iter().flatten() {
            let _ = writeln!(text, "    {} {}", c.parity, c.to_text());
        }
    }
    let body = CohomologyJson {
        command: name,
        algebra: a.name().to_string(),
        field: field_name(a.field()),
        variant: cyclic.map(variant_name),
        window: Window { max_weight, reliable_max: max_weight - 1 },
        groups,
    };
    Ok(report(&body, text, true))
}

#[derive(Serialize)]
struct DegenRowJson {
    total_weight: usize,
    h: [usize; 2],
    e1: [usize; 2],
}

#[derive(Serialize)]
struct WitnessJson {
    total_weight: usize,
    parity: &'static str,
    dim_h: usize,
    dim_e1: usize,
}

#[derive(Serialize)]
struct VerdictJson {
    u_order: usize,
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessJson>,
    rows: Vec<DegenRowJson>,
}

#[derive(Serialize)]
struct DegenJson {
    command: &'static str,
    algebra: String,
    field: String,
    variant: &'static str,
    window: Window,
    verdicts: Vec<VerdictJson>,
}

fn degen(a: &Algebra, max_weight: usize, u_order: usize, variant: Variant) -> Result<Report, Failure> {
    if u_order == 0 {
        return Err(Failure::Usage("u-order must be positive".into()));
    }
    let vs = homology::degeneration_check(a, u_order, max_weight, variant)?;
    let mut text = format!("{}\n", BANNER);
    let _ = writeln!(
        text,
        "degen {} over {} ({}), total weights 0..{}",
        a.name(),
        field_name(a.field()),
        variant_name(variant),
        max_weight - 1
    );
    let mut verdicts = Vec::new();
    for v in &vs {
        let _ = write!(text, "  M={}: {}", v.order, if v.pass { "PASS" } else { "FAIL" });
        let witness = v.witness.map(|(n, odd, h, e)| {
            let _ = write!(
                text,
                "  witness: total weight {}, {} part, dim H = {} but E1 predicts {}",
                n,
                if odd { "odd" } else { "even" },
                h,
                e
            );
            WitnessJson { total_weight: n, parity: if odd { "odd" } else { "even" }, dim_h: h, dim_e1: e }
        });
        text.push('\n');
        let hs: Vec<String> = v.rows.iter().map(|r| (r.h.0 + r.h.1).to_string()).collect();
        let es: Vec<String> = v.rows.iter().map(|r| (r.e1.0 + r.e1.1).to_string()).collect();
        let _ = writeln!(text, "    dim H  [{}]", hs.join(", "));
        let _ = writeln!(text, "    E1 sum [{}]", es.join(", "));
        verdicts.push(VerdictJson {
            u_order: v.order,
            verdict: if v.pass { "PASS" } else { "FAIL" },
            witness,
            rows: v
                .rows
                .iter()
                .map(|r| DegenRowJson { total_weight: r.total_weight, h: [r.h.0, r.h.1], e1: [r.e1.0, r.e1.1] })
                .collect(),
        });
    }
    let pass = vs.iter().all(|v| v.pass);
    let body = DegenJson {
        command: "degen",
        algebra: a.name().to_string(),
        field: field_name(a.field()),
        variant: variant_name(variant),
        window: Window { max_weight, reliable_max: vs.first().map_or(0, |v| v.reliable_max_total) },
        verdicts,
    };
    Ok(report(&body, text, pass))
}

#[derive(Serialize)]
struct IotaRowJson {
    weight: usize,
    cyclic: usize,
    u_complex: Option<usize>,
    agrees: bool,
}

#[derive(Serialize)]
struct IotaJson {
    command: &'static str,
    algebra: String,
    field: String,
    u_order: usize,
    window: Window,
    rows: Vec<IotaRowJson>,
}

fn iota(a: &Algebra, max_weight: usize, u_order: usize) -> Result<Report, Failure> {
    let rows = homology::iota_comparison(a, u_order, max_weight)?;
    let mut text = format!("iota {} (strict), u-order {}\n", a.name(), u_order);
    for r in &rows {
        let u = r.u_complex.map_or("n/a".to_string(), |d| d.to_string());
        let _ = writeln!(text, "  weight {}: cyclic {}  u-complex {}  {}", r.weight, r.cyclic, u, if r.agrees() { "ok" } else { "DIFFER" });
    }
    let pass = rows.iter().all(|r| r.agrees());
    let body = IotaJson {
        command: "iota",
        algebra: a.name().to_string(),
        field: field_name(a.field()),
        u_order,
        window: Window { max_weight, reliable_max: max_weight.saturating_sub(1) },
        rows: rows
            .iter()
            .map(|r| IotaRowJson { weight: r.weight, cyclic: r.cyclic, u_complex: r.u_complex, agrees: r.agrees() })
            .collect(),
    };
    Ok(report(&body, text, pass))
}

#[derive(Serialize)]
struct FunctionalJson {
    inputs: Vec<String>,
    output: String,
    coeff: String,
}

#[derive(Serialize)]
struct BvPairJson {
    alpha: CochainJson,
    beta: CochainJson,
    outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    primitive: Option<CochainJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate_weight: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    functional: Option<Vec<FunctionalJson>>,
}

#[derive(Serialize)]
struct BvJson {
    command: &'static str,
    algebra: String,
    field: String,
    window: Window,
    pairs: Vec<BvPairJson>,
}

fn bv_check(a: &Algebra, max_weight: usize) -> Result<Report, Failure> {
    let mut reps: Vec<(usize, Cochain)> = Vec::new();
    for r in homology::hh_all(a, max_weight)? {
        reps.extend(r.representatives.into_iter().map(|c| (r.weight, c)));
    }
    let names = a.names();
    let mut pairs = Vec::new();
    let mut text = format!("bv-check {} over {}\n", a.name(), field_name(a.field()));
    let mut pass = true;
    for (wa, x) in &reps {
        for (wb, y) in &reps {
            if wa + wb > max_weight {
                continue;
            }
            let (outcome, primitive, cw, functional) = match homology::bv_defect(a, x, y, max_weight)? {
                BvOutcome::Primitive(g) => ("primitive", Some(CochainJson::new(a, &g)), None, None),
                BvOutcome::Certificate { weight, functional, .. } => {
                    pass = false;
                    let f = functional
                        .iter()
                        .map(|(m, c)| FunctionalJson {
                            inputs: m.inputs().iter().map(|&i| names[i].clone()).collect(),
                            output: names[m.output()].clone(),
                            coeff: c.to_string(),
                        })
                        .collect();
                    ("certificate", None, Some(weight), Some(f))
                }
            };
            let _ = writeln!(text, "  [{}] x [{}]: {}", CochainJson::new(a, x).to_text(), CochainJson::new(a, y).to_text(), outcome);
            pairs.push(BvPairJson {
                alpha: CochainJson::new(a, x),
                beta: CochainJson::new(a, y),
                outcome,
                primitive,
                certificate_weight: cw,
                functional,
            });
        }
    }
    let _ = writeln!(text, "{} pairs, {}", pairs.len(), if pass { "all defects exact" } else { "some defect is NOT exact" });
    let body = BvJson {
        command: "bv-check",
        algebra: a.name().to_string(),
        field: field_name(a.field()),
        window: Window { max_weight, reliable_max: max_weight },
        pairs,
    };
    Ok(report(&body, text, pass))
}

#[derive(Serialize)]
struct CertificateJson {
    order: usize,
    weight: usize,
    obstruction: CochainJson,
    functional: Vec<(String, String)>,
}

#[derive(Serialize)]
struct ProbeJson {
    algebra: String,
    tangent_class: CochainJson,
    cyclic: bool,
    certified_order: usize,
    status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<CertificateJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    window_incomplete_weight: Option<usize>,
    deformation: Vec<CochainJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cyclic_lift: Option<Vec<CochainJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gauge_trace: Option<Vec<CochainJson>>,
}

#[derive(Serialize)]
struct DeformJson {
    command: &'static str,
    algebra: String,
    field: String,
    order: usize,
    window: Window,
    tangent_weight: usize,
    probes: Vec<ProbeJson>,
}

enum ProbeStatus {
    Ok,
    Obstructed,
    Incomplete,
}

fn probe_json(
    g: &HochschildDgla,
    r: &ProbeResult<Cochain>,
    cyclic: bool,
    target: usize,
) -> (ProbeJson, ProbeStatus) {
    let a = g.algebra();
    let (status, st) = if let Some(c) = &r.certificate {
        (format!("obstructed at order {}", c.order), ProbeStatus::Obstructed)
    } else if let Some(w) = r.window_incomplete {
        (format!("window-incomplete: residual of weight {} at order {}", w, r.certified_order), ProbeStatus::Incomplete)
    } else {
        (format!("unobstructed through order {}", target), ProbeStatus::Ok)
    };
    let certificate = r.certificate.as_ref().map(|c| CertificateJson {
        order: c.order,
        weight: c.weight,
        obstruction: CochainJson::new(a, &c.obstruction),
        functional: c.functional.iter().map(|(i, v)| (g.coord_name(c.weight, *i), v.to_string())).collect(),
    });
    let j = ProbeJson {
        algebra: a.name().to_string(),
        tangent_class: CochainJson::new(a, &r.tangent),
        cyclic,
        certified_order: r.certified_order,
        status,
        certificate,
        window_incomplete_weight: r.window_incomplete,
        deformation: r.deformation.terms.iter().map(|c| CochainJson::new(a, c)).collect(),
        cyclic_lift: None,
        gauge_trace: None,
    };
    (j, st)
}

fn deform(a: &Algebra, order: usize, max_weight: usize, tangent_weight: usize, cyclic: bool) -> Result<Report, Failure> {
    if order < 2 {
        return Err(Failure::Usage("order must be at least 2".into()));
    }
    if tangent_weight > max_weight {
        return Err(HomologyError::WindowTooSmall { needed: tangent_weight, max_weight }.into());
    }
    let plain = HochschildDgla::new(a, max_weight, false)?;
    let mut probes = Vec::new();
    let mut statuses = Vec::new();
    let mut cyclic_ok = true;
    let tangents = tangent_classes(a, tangent_weight, false)?;
    for r in smoothness_probe(&plain, &tangents, order)? {
        let (mut j, st) = probe_json(&plain, &r, false, order);
        if cyclic && matches!(st, ProbeStatus::Ok) {
            let cyc = HochschildDgla::new(a, max_weight, true)?;
            match cyclicize(&plain, &cyc, &r.deformation)? {
                Cyclicized::Done { deformation, gauge } => {
                    j.cyclic_lift = Some(deformation.terms.iter().map(|c| CochainJson::new(a, c)).collect());
                    j.gauge_trace = Some(gauge.iter().map(|c| CochainJson::new(a, c)).collect());
                }
                Cyclicized::Infeasible { order, weight } => {
                    cyclic_ok = false;
                    j.status = format!("{}; cyclicize infeasible at order {} weight {}", j.status, order, weight);
                }
            }
        }
        probes.push(j);
        statuses.push(st);
    }
    if cyclic {
        let cyc = HochschildDgla::new(a, max_weight, true)?;
        let tangents = tangent_classes(a, tangent_weight, true)?;
        for r in smoothness_probe(&cyc, &tangents, order)? {
            let (j, st) = probe_json(&cyc, &r, true, order);
            probes.push(j);
            statuses.push(st);
        }
    }
    let mut text = format!("{}\n", BANNER);
    let _ = writeln!(text, "deform {} over {}, base k[t]/t^{}, weights <= {}", a.name(), field_name(a.field()), order, max_weight);
    for p in &probes {
        let _ = writeln!(
            text,
            "  {} tangent {}: certified order {}, {}",
            if p.cyclic { "cyclic" } else { "plain " },
            p.tangent_class.to_text(),
            p.certified_order,
            p.status
        );
        if p.cyclic_lift.is_some() {
            let _ = writeln!(text, "    cyclic lift found");
        }
    }
    if probes.is_empty() {
        let _ = writeln!(text, "  no odd tangent classes in weights <= {}", tangent_weight);
    }
    let obstructed = statuses.iter().any(|s| matches!(s, ProbeStatus::Obstructed));
    let incomplete = statuses.iter().any(|s| matches!(s, ProbeStatus::Incomplete));
    let body = DeformJson {
        command: "deform",
        algebra: a.name().to_string(),
        field: field_name(a.field()),
        order,
        window: Window { max_weight, reliable_max: max_weight },
        tangent_weight,
        probes,
    };
    if incomplete && !obstructed {
        return Err(Failure::Usage(format!(
            "window-incomplete: raise --max-weight above {}\n{}",
            max_weight,
            serde_json::to_string(&body).expect("json")
        )));
    }
    Ok(report(&body, text, !obstructed && cyclic_ok))
}

fn max_nodes() -> Result<usize, Failure> {
    match std::env::var("NCBTT_MAX_NODES") {
        Ok(s) => s.trim().parse().map_err(|_| Failure::Usage(format!("NCBTT_MAX_NODES must be a number, got `{}`", s))),
        Err(_) => Ok(DEFAULT_MAX_NODES),
    }
}

#[derive(Serialize)]
struct TreesJson {
    command: &'static str,
    arity: usize,
    max_degree: Option<usize>,
    trees: Vec<String>,
    census: Vec<(usize, usize)>,
}

fn trees_enum(arity: usize, max_degree: Option<usize>) -> Result<Report, Failure> {
    let ts = trees::enumerate(arity, max_degree.unwrap_or(usize::MAX), max_nodes()?)?;
    let mut census = std::collections::BTreeMap::new();
    for t in &ts {
        *census.entry(t.degree()).or_insert(0usize) += 1;
    }
    let census: Vec<(usize, usize)> = census.into_iter().collect();
    let mut text = String::new();
    for t in &ts {
        let _ = writeln!(text, "{}", t);
    }
    let census_json: serde_json::Map<String, serde_json::Value> =
        census.iter().map(|(d, c)| (d.to_string(), (*c).into())).collect();
    let _ = writeln!(text, "{}", serde_json::Value::Object(census_json));
    let body = TreesJson {
        command: "trees enum",
        arity,
        max_degree,
        trees: ts.iter().map(|t| t.encode()).collect(),
        census,
    };
    Ok(report(&body, text, true))
}

#[derive(Serialize)]
struct TreeCheckJson {
    name: String,
    passed: bool,
    detail: String,
}

#[derive(Serialize)]
struct TreesVerifyJson {
    command: &'static str,
    arity: usize,
    seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    algebra: Option<String>,
    checks: Vec<TreeCheckJson>,
}

/// Random cochain of weight `w` and parity `odd` with small coefficients.
pub fn random_cochain(a: &Algebra, w: usize, odd: bool, rng: &mut ChaCha8Rng) -> Cochain {
    let mut terms = Vec::new();
    for m in MonoIndex::new(a, w).monos() {
        if m.parity(a) == odd && rng.gen_bool(0.6) {
            let c = rng.gen_range(-3i64..=3);
            if c != 0 {
                terms.push((m, Scalar::from(c)));
            }
        }
    }
    Cochain::from_terms(a, odd, terms).expect("terms have the requested parity")
}

fn trees_verify(a: Option<&Algebra>, arity: usize, trials: usize, seed: u64) -> Result<Report, Failure> {
    let cap = max_nodes()?;
    let mut checks = Vec::new();
    let all = trees::enumerate(arity, usize::MAX, cap)?;
    let top = 2 * arity - 1;
    let max = all.iter().map(|t| t.degree()).max().unwrap_or(0);
    checks.push(TreeCheckJson {
        name: "max_degree".into(),
        passed: max == top,
        detail: format!("max degree {} (expected {})", max, top),
    });
    let missing: Vec<String> =
        all.iter().filter(|t| t.degree() == top && t.has_delta_tail().is_none()).map(|t| t.encode()).collect();
    checks.push(TreeCheckJson {
        name: "top_degree_delta_tail".into(),
        passed: missing.is_empty(),
        detail: if missing.is_empty() { "every top-degree tree has a tailed leaf".into() } else { missing.join(" ") },
    });
    if let Some(a) = a {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut agree = true;
        for _ in 0..trials {
            let xs: Vec<Cochain> =
                (0..=arity).map(|_| random_cochain(a, rng.gen_range(0..=2), rng.gen_bool(0.5), &mut rng)).collect();
            agree &= trees::act(a, &trees::delta_tree(), &xs[..1])? == delta(a, &xs[0])?;
            if arity >= 2 && (arity == 2 || a.is_associative_only()) {
                let mut c = xs[0].clone();
                for y in &xs[1..arity] {
                    c = cup(a, &c, y)?;
                }
                agree &= trees::act(a, &trees::cup_tree(arity), &xs[..arity])? == c;
            }
            let refs: Vec<&Cochain> = xs[1..=arity].iter().collect();
            agree &= trees::act(a, &trees::brace_tree(arity), &xs)? == brace(a, &xs[0], &refs)?;
        }
        checks.push(TreeCheckJson {
            name: "action_agreement".into(),
            passed: agree,
            detail: format!("{} random trials of the delta, cup and brace trees", trials),
        });
        if a.winv().is_some() {
            let args: Vec<Cochain> = (0..arity)
                .map(|i| cyclic_project(a, &random_cochain(a, 1 + i % 2, rng.gen_bool(0.5), &mut rng)))
                .collect::<Result<_, _>>()?;
            let r = trees::ker_delta_vanishing(a, &args, cap)?;
            checks.push(TreeCheckJson {
                name: "ker_delta_vanishing".into(),
                passed: r.all_vanish(),
                detail: format!("{} top-degree trees on cyclic inputs", r.rows.len()),
            });
        }
    }
    let pass = checks.iter().all(|c| c.passed);
    let mut text = format!("trees verify, arity {}, seed {}\n", arity, seed);
    for c in &checks {
        let _ = writeln!(text, "  {:<22} {}  ({})", c.name, if c.passed { "ok" } else { "FAIL" }, c.detail);
    }
    let body = TreesVerifyJson {
        command: "trees verify",
        arity,
        seed,
        algebra: a.map(|a| a.name().to_string()),
        checks,
    };
    Ok(report(&body, text, pass))
}
