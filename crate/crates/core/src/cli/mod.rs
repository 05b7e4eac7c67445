//! The `gjordan` command line: argument parsing, dispatch to the library,
//! and reports in text or JSON.
//!
//! Every run produces a [`Report`]. Its status is `violation` exactly when a
//! check of a property the theory asserts fails on a space where it is
//! asserted (the grid sphere for separation properties, any valid pushout
//! square for the certificates). Usage, IO and input errors give `error`.

pub mod formats;
mod render;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::analysis::{abelianization, no_z_retract_sufficient, tietze_simplify, AbelianInvariants, RetractVerdict};
use crate::complex::{
    arc_order, complement_components, cycle_order, fundamental_groupoid_presentation, random_arc, random_simple_cycle,
    validate_arc, Cell, CellComplex, LengthBounds, ModelName, ModelSpec, Subcomplex, SubcomplexSpec,
};
use crate::error::Error;
use crate::groupoid::{GroupPresentation, ObjectId};
use crate::pushout::{
    certify, check_morphism_relations, groupoid_route_invariants, pushout_object_group, validate_pushout_input,
    Certificate, CertificateKind, FGenerator, GeneratorOrigin, RelatorOrigin,
};
use crate::verify::{
    bisection_separating_subarc, jordan_curve_check, pbp_check, sample_pbp_instances, separates,
    vankampen_jordan_pipeline, JordanReport, PbpInstance, PbpOutcome, PbpVerdict,
};
use formats::{load, ArcFile, GroupFile, PbpFile, PushoutFile, SpaceFile, SpaceSource, SCHEMA_VERSION};

pub use render::render_text;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "gjordan",
    version,
    about = "Groupoid pushouts and separation checks on cell complexes"
)]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Default)]
struct ModelArgs {
    /// Built-in model: grid_sphere, disk, annulus, cycle or interval.
    #[arg(long)]
    model: Option<ModelName>,
    /// Model size.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args, Debug)]
struct SampleArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of sampled instances.
    #[arg(long)]
    count: Option<usize>,
    /// Attempts per sampled instance before giving up.
    #[arg(long, default_value_t = 1000)]
    retries: usize,
    #[arg(long)]
    min_length: Option<usize>,
    #[arg(long)]
    max_length: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Object group of a pushout of groupoids, with certificates.
    Pushout {
        file: PathBuf,
        /// Overrides the basepoint recorded in the file.
        #[arg(long)]
        basepoint: Option<String>,
        #[arg(long, default_value_t = 1000)]
        tietze_steps: usize,
    },
    /// Fundamental group of a complex at a vertex.
    Pi1 {
        file: Option<PathBuf>,
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        basepoint: Option<String>,
        #[arg(long, default_value_t = 1000)]
        tietze_steps: usize,
    },
    /// Abelian invariants of a group presentation.
    Abelianize {
        file: PathBuf,
        #[arg(long, default_value_t = 1000)]
        tietze_steps: usize,
    },
    /// Seeded random simple cycles: complement components and the van Kampen pipeline.
    Jordan {
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        sample: SampleArgs,
        /// Only count components, without the pushout computation.
        #[arg(long)]
        skip_pipeline: bool,
    },
    /// Phragmen-Brouwer checks on one instance or a sampled family.
    Pbp {
        file: Option<PathBuf>,
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        sample: SampleArgs,
    },
    /// Arc complements and the bisection search.
    Arc {
        file: Option<PathBuf>,
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        sample: SampleArgs,
    },
}

/// Echo of the parsed command line.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub subcommand: String,
    pub inputs: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub model: Option<ModelSpec>,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basepoint: Option<String>,
    pub format: OutputFormat,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tietze_steps: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub retries: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_length: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_length: Option<usize>,
    #[serde(default)]
    pub skip_pipeline: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Violation,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Violation => 2,
            Status::Error => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorInfo {
    /// `usage`, `io`, `parse`, `schema` or `input`.
    pub kind: String,
    pub message: String,
}

impl From<&Error> for ErrorInfo {
    fn from(e: &Error) -> Self {
        let kind = match e {
            Error::Io { .. } => "io",
            Error::Parse { .. } => "parse",
            Error::Schema { .. } => "schema",
            Error::Parameter(_) => "usage",
            _ => "input",
        };
        ErrorInfo {
            kind: kind.into(),
            message: e.to_string(),
        }
    }
}

/// One asserted property and whether it held.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub property: String,
    pub holds: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Check {
    pub fn new(property: &str, holds: bool, detail: impl Into<String>) -> Self {
        Check {
            property: property.into(),
            holds,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub subcommand: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub config: Option<RunConfig>,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub result: Option<serde_json::Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn format(&self) -> OutputFormat {
        self.config.as_ref().map_or(OutputFormat::Text, |c| c.format)
    }

    /// The report in its configured format.
    pub fn render(&self) -> String {
        match self.format() {
            OutputFormat::Json => self.to_json(),
            OutputFormat::Text => render_text(self),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PushoutOutcome {
    pub basepoint: ObjectId,
    pub base_points: Vec<ObjectId>,
    pub presentation: GroupPresentation,
    pub simplified: GroupPresentation,
    pub f_generators: Vec<FGenerator>,
    pub generator_origin: Vec<GeneratorOrigin>,
    pub relator_provenance: Vec<RelatorOrigin>,
    pub abelianization: AbelianInvariants,
    pub groupoid_route: AbelianInvariants,
    pub certificate: Certificate,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pi1Outcome {
    pub basepoint: String,
    pub euler_characteristic: i64,
    pub presentation: GroupPresentation,
    pub simplified: GroupPresentation,
    pub abelianization: AbelianInvariants,
    pub retract: RetractVerdict,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianizeOutcome {
    pub presentation: GroupPresentation,
    pub simplified: GroupPresentation,
    pub abelianization: AbelianInvariants,
    pub retract: RetractVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveRecord {
    pub seed: u64,
    /// Vertices in traversal order.
    pub vertices: Vec<String>,
    pub report: JordanReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pipeline_error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanOutcome {
    pub curves: Vec<CurveRecord>,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PbpRecord {
    #[serde(rename = "D")]
    pub d: SubcomplexSpec,
    #[serde(rename = "E")]
    pub e: SubcomplexSpec,
    pub a: String,
    pub b: String,
    pub outcome: PbpOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PbpRun {
    pub instances: Vec<PbpRecord>,
    pub violations: usize,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BisectionRecord {
    pub vertices: Vec<String>,
    pub edges: Vec<String>,
    pub depth: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub vertices: Vec<String>,
    pub edges: Vec<String>,
    pub complement_connected: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub separates: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bisection: Option<BisectionRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcRun {
    pub arcs: Vec<ArcRecord>,
    pub checks: Vec<Check>,
}

enum Failure {
    Usage(String),
    Run(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Run(e)
    }
}

type Outcome = std::result::Result<(serde_json::Value, Vec<Check>), Failure>;

/// `violation` when some asserted property failed, `ok` otherwise.
pub fn status_of(checks: &[Check]) -> Status {
    if checks.iter().all(|c| c.holds) {
        Status::Ok
    } else {
        Status::Violation
    }
}

fn error_report(subcommand: &str, config: Option<RunConfig>, info: ErrorInfo) -> Report {
    Report {
        schema_version: SCHEMA_VERSION,
        subcommand: subcommand.into(),
        config,
        status: Status::Error,
        result: None,
        error: Some(info),
    }
}

/// Parses `argv` (program name first), runs the subcommand, and returns the
/// report with its exit code: 0 ok, 2 violation, 1 usage or input error.
/// Help and version requests come back as an ok report whose result is the
/// text clap would print.
pub fn parse_and_dispatch<I, T>(argv: I) -> (Report, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let report = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Report {
                    schema_version: SCHEMA_VERSION,
                    subcommand: "help".into(),
                    config: None,
                    status: Status::Ok,
                    result: Some(serde_json::Value::String(e.render().to_string())),
                    error: None,
                },
                _ => error_report(
                    "",
                    None,
                    ErrorInfo {
                        kind: "usage".into(),
                        message: e.render().to_string(),
                    },
                ),
            };
            let code = report.exit_code();
            return (report, code);
        }
    };
    let config = config_of(&cli);
    let name = config.subcommand.clone();
    let report = match run(&cli.command, &config) {
        Ok((result, checks)) => Report {
            schema_version: SCHEMA_VERSION,
            subcommand: name,
            status: status_of(&checks),
            config: Some(config),
            result: Some(result),
            error: None,
        },
        Err(Failure::Usage(message)) => error_report(
            &name,
            Some(config),
            ErrorInfo {
                kind: "usage".into(),
                message,
            },
        ),
        Err(Failure::Run(e)) => error_report(&name, Some(config), ErrorInfo::from(&e)),
    };
    let code = report.exit_code();
    (report, code)
}

fn config_of(cli: &Cli) -> RunConfig {
    let mut c = RunConfig {
        format: cli.format,
        ..RunConfig::default()
    };
    let model = |m: &ModelArgs| match (m.model, m.n) {
        (Some(name), Some(n)) => Some(ModelSpec::new(name, n)),
        _ => None,
    };
    let sample = |c: &mut RunConfig, s: &SampleArgs| {
        c.seed = s.seed;
        c.count = s.count;
        c.retries = Some(s.retries);
        c.min_length = s.min_length;
        c.max_length = s.max_length;
    };
    let path = |p: &Option<PathBuf>| p.iter().map(|p| p.display().to_string()).collect();
    match &cli.command {
        Command::Pushout {
            file,
            basepoint,
            tietze_steps,
        } => {
            c.subcommand = "pushout".into();
            c.inputs = vec![file.display().to_string()];
            c.basepoint = basepoint.clone();
            c.tietze_steps = Some(*tietze_steps);
        }
        Command::Pi1 {
            file,
            model: m,
            basepoint,
            tietze_steps,
        } => {
            c.subcommand = "pi1".into();
            c.inputs = path(file);
            c.model = model(m);
            c.basepoint = basepoint.clone();
            c.tietze_steps = Some(*tietze_steps);
        }
        Command::Abelianize { file, tietze_steps } => {
            c.subcommand = "abelianize".into();
            c.inputs = vec![file.display().to_string()];
            c.tietze_steps = Some(*tietze_steps);
        }
        Command::Jordan {
            model: m,
            sample: s,
            skip_pipeline,
        } => {
            c.subcommand = "jordan".into();
            c.model = model(m);
            sample(&mut c, s);
            c.count = Some(s.count.unwrap_or(10));
            c.skip_pipeline = *skip_pipeline;
        }
        Command::Pbp {
            file,
            model: m,
            sample: s,
        } => {
            c.subcommand = "pbp".into();
            c.inputs = path(file);
            c.model = model(m);
            sample(&mut c, s);
            if file.is_none() {
                c.count = Some(s.count.unwrap_or(200));
            }
        }
        Command::Arc {
            file,
            model: m,
            sample: s,
        } => {
            c.subcommand = "arc".into();
            c.inputs = path(file);
            c.model = model(m);
            sample(&mut c, s);
            if file.is_none() {
                c.count = Some(s.count.unwrap_or(20));
            }
        }
    }
    c
}

fn to_value<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("results serialize")
}

fn require_model(m: &ModelArgs) -> std::result::Result<ModelSpec, Failure> {
    match (m.model, m.n) {
        (Some(name), Some(n)) => Ok(ModelSpec::new(name, n)),
        (Some(_), None) => Err(Failure::Usage("--model needs --n".into())),
        (None, Some(_)) => Err(Failure::Usage("--n needs --model".into())),
        (None, None) => Err(Failure::Usage("expected an input file or --model and --n".into())),
    }
}

/// The space of a subcommand: the file's space if a file is given,
/// otherwise the model flags. Files and model flags are exclusive.
fn space_of(file_space: Option<SpaceSource>, m: &ModelArgs) -> std::result::Result<SpaceSource, Failure> {
    match file_space {
        Some(_) if m.model.is_some() || m.n.is_some() => {
            Err(Failure::Usage("give either an input file or --model, not both".into()))
        }
        Some(s) => Ok(s),
        None => Ok(SpaceSource::Model(require_model(m)?)),
    }
}

fn is_sphere(space: &SpaceSource) -> bool {
    space.model().is_some_and(|m| m.name == ModelName::GridSphere)
}

fn run(command: &Command, config: &RunConfig) -> Outcome {
    match command {
        Command::Pushout {
            file,
            basepoint,
            tietze_steps,
        } => run_pushout(load(file)?, basepoint.as_deref(), *tietze_steps),
        Command::Pi1 {
            file,
            model,
            basepoint,
            tietze_steps,
        } => {
            let loaded = file.as_ref().map(|f| load::<SpaceFile>(f)).transpose()?;
            let space = space_of(loaded.map(|f| f.space), model)?;
            run_pi1(&space, basepoint.as_deref(), *tietze_steps)
        }
        Command::Abelianize { file, tietze_steps } => {
            let g: GroupFile = load(file)?;
            let presentation = g.presentation;
            let outcome = AbelianizeOutcome {
                simplified: tietze_simplify(&presentation, *tietze_steps),
                abelianization: abelianization(&presentation),
                retract: no_z_retract_sufficient(&presentation),
                presentation,
            };
            Ok((to_value(&outcome), Vec::new()))
        }
        Command::Jordan { model, sample, .. } => {
            let space = SpaceSource::Model(require_model(model)?);
            run_jordan(&space, config, sample)
        }
        Command::Pbp { file, model, sample } => match file {
            Some(f) => {
                let inst: PbpFile = load(f)?;
                let space = space_of(Some(inst.space.clone()), model)?;
                let x = space.build()?;
                let d = Subcomplex::resolve(&x, &inst.d)?;
                let e = Subcomplex::resolve(&x, &inst.e)?;
                let a = vertex(&x, &inst.a)?;
                let b = vertex(&x, &inst.b)?;
                run_pbp(&space, &x, vec![PbpInstance { d, e, a, b }])
            }
            None => {
                let space = space_of(None, model)?;
                let x = space.build()?;
                let count = config.count.unwrap_or(200);
                let instances = sample_pbp_instances(&x, sample.seed, count, sample.retries)?;
                run_pbp(&space, &x, instances)
            }
        },
        Command::Arc { file, model, sample } => match file {
            Some(f) => {
                let inst: ArcFile = load(f)?;
                let space = space_of(Some(inst.space.clone()), model)?;
                let x = space.build()?;
                let arc = Subcomplex::resolve(&x, &inst.arc)?;
                let ends = match (&inst.a, &inst.b) {
                    (Some(a), Some(b)) => Some((vertex(&x, a)?, vertex(&x, b)?)),
                    (None, None) => None,
                    _ => return Err(Failure::Usage("give both a and b or neither".into())),
                };
                let record = arc_record(&x, &arc, None, ends)?;
                Ok(arc_checks(&space, vec![record]))
            }
            None => {
                let space = space_of(None, model)?;
                let x = space.build()?;
                let n = space.model().map_or(1, |m| m.n);
                let bounds = LengthBounds::new(config.min_length.unwrap_or(1), config.max_length.unwrap_or(2 * n));
                let mut rng = ChaCha8Rng::seed_from_u64(sample.seed);
                let mut records = Vec::new();
                for _ in 0..config.count.unwrap_or(20) {
                    let seed: u64 = rng.gen();
                    let arc = random_arc(&x, seed, bounds, sample.retries)?;
                    records.push(arc_record(&x, &arc, Some(seed), None)?);
                }
                Ok(arc_checks(&space, records))
            }
        },
    }
}

fn vertex(x: &CellComplex, name: &str) -> std::result::Result<usize, Error> {
    x.vertex(name).ok_or_else(|| Error::UnknownObject(name.to_string()))
}

fn run_pushout(mut input: PushoutFile, basepoint: Option<&str>, steps: usize) -> Outcome {
    if let Some(p) = basepoint {
        input.basepoint = ObjectId::new(p);
    }
    let validated = validate_pushout_input(&input)?;
    check_morphism_relations(&validated)?;
    let result = pushout_object_group(&validated)?;
    let abelian = abelianization(&result.presentation);
    let groupoid_route = groupoid_route_invariants(&validated)?;
    let certificate = certify(&result);
    let size = input.base_points.len();
    let mut checks = vec![
        Check::new(
            "the retraction onto F kills every relator",
            certificate.sound,
            format!("{} relators", certificate.relators_checked),
        ),
        Check::new(
            "both routes give the same abelianization",
            abelian == groupoid_route,
            format!("object group {abelian}, groupoid route {groupoid_route}"),
        ),
    ];
    if size >= 2 {
        checks.push(Check::new(
            "G(p) is nontrivial when |J| ≥ 2",
            certificate.kind != CertificateKind::None,
            "",
        ));
    }
    if size >= 3 {
        checks.push(Check::new(
            "G(p) is nonabelian when |J| ≥ 3",
            certificate.kind == CertificateKind::Nonabelian,
            "",
        ));
    }
    let outcome = PushoutOutcome {
        basepoint: result.basepoint.clone(),
        base_points: input.base_points.clone(),
        simplified: tietze_simplify(&result.presentation, steps),
        presentation: result.presentation,
        f_generators: result.f_generators,
        generator_origin: result.generator_origin,
        relator_provenance: result.relator_provenance,
        abelianization: abelian,
        groupoid_route,
        certificate,
        checks: checks.clone(),
    };
    Ok((to_value(&outcome), checks))
}

fn run_pi1(space: &SpaceSource, basepoint: Option<&str>, steps: usize) -> Outcome {
    let x = space.build()?;
    let p = match basepoint {
        Some(p) => ObjectId::new(p),
        None => x
            .vertices()
            .first()
            .cloned()
            .ok_or_else(|| Error::Shape("the complex has no vertices".into()))?,
    };
    let groupoid = fundamental_groupoid_presentation(&x, std::slice::from_ref(&p))?;
    let presentation = groupoid.object_group(&p)?;
    let abelian = abelianization(&presentation);
    let mut checks = Vec::new();
    if is_sphere(space) {
        checks.push(Check::new(
            "the sphere is simply connected",
            abelian.is_trivial(),
            format!("abelianization {abelian}"),
        ));
    }
    let outcome = Pi1Outcome {
        basepoint: p.to_string(),
        euler_characteristic: x.euler_characteristic(),
        simplified: tietze_simplify(&presentation, steps),
        retract: no_z_retract_sufficient(&presentation),
        abelianization: abelian,
        presentation,
        checks: checks.clone(),
    };
    Ok((to_value(&outcome), checks))
}

fn run_jordan(space: &SpaceSource, config: &RunConfig, sample: &SampleArgs) -> Outcome {
    let x = space.build()?;
    let n = space.model().map_or(1, |m| m.n);
    let bounds = LengthBounds::new(config.min_length.unwrap_or(4), config.max_length.unwrap_or(4 * n));
    let mut rng = ChaCha8Rng::seed_from_u64(sample.seed);
    let mut curves = Vec::new();
    for _ in 0..config.count.unwrap_or(10) {
        let seed: u64 = rng.gen();
        let c = random_simple_cycle(&x, seed, bounds, sample.retries)?;
        let (vs, _) = cycle_order(&x, &c)?;
        let (report, pipeline_error) = if config.skip_pipeline {
            (jordan_curve_check(&x, &c)?, None)
        } else {
            match vankampen_jordan_pipeline(&x, &c) {
                Ok(r) => (r, None),
                Err(e @ Error::PipelineStage { .. }) => (jordan_curve_check(&x, &c)?, Some(e.to_string())),
                Err(e) => return Err(e.into()),
            }
        };
        curves.push(CurveRecord {
            seed,
            vertices: vs.iter().map(|&v| x.vertices()[v].to_string()).collect(),
            report,
            pipeline_error,
        });
    }
    let mut checks = Vec::new();
    if is_sphere(space) {
        let bad: Vec<String> = failing(&curves, |c| c.report.separates_as_expected());
        checks.push(Check::new(
            "every curve has two complementary components, each bounded by the curve",
            bad.is_empty(),
            listing(&bad),
        ));
        if !config.skip_pipeline {
            let bad = failing(&curves, |c| c.pipeline_error.is_none());
            checks.push(Check::new(
                "the van Kampen pipeline succeeds on every curve",
                bad.is_empty(),
                listing(&bad),
            ));
        }
    }
    let outcome = JordanOutcome {
        curves,
        checks: checks.clone(),
    };
    Ok((to_value(&outcome), checks))
}

fn failing<T>(items: &[T], ok: impl Fn(&T) -> bool) -> Vec<String> {
    items
        .iter()
        .enumerate()
        .filter(|(_, t)| !ok(t))
        .map(|(i, _)| i.to_string())
        .collect()
}

fn listing(bad: &[String]) -> String {
    if bad.is_empty() {
        String::new()
    } else {
        format!("failing instances: {}", bad.join(", "))
    }
}

fn run_pbp(space: &SpaceSource, x: &CellComplex, instances: Vec<PbpInstance>) -> Outcome {
    let mut records = Vec::with_capacity(instances.len());
    for inst in &instances {
        records.push(PbpRecord {
            d: inst.d.to_spec(x),
            e: inst.e.to_spec(x),
            a: x.vertices()[inst.a].to_string(),
            b: x.vertices()[inst.b].to_string(),
            outcome: pbp_check(x, inst)?,
        });
    }
    let bad = failing(&records, |r| r.outcome.verdict == PbpVerdict::Holds);
    let mut checks = Vec::new();
    if is_sphere(space) {
        checks.push(Check::new(
            "the sphere has the Phragmen-Brouwer property",
            bad.is_empty(),
            listing(&bad),
        ));
    }
    let run = PbpRun {
        instances: records,
        violations: bad.len(),
        checks: checks.clone(),
    };
    Ok((to_value(&run), checks))
}

fn arc_record(
    x: &CellComplex,
    arc: &Subcomplex,
    seed: Option<u64>,
    ends: Option<(usize, usize)>,
) -> std::result::Result<ArcRecord, Error> {
    validate_arc(x, arc)?;
    let (vs, es) = arc_order(x, arc)?;
    let parts = complement_components(x, arc)?;
    let ends = ends.or_else(|| {
        let first_vertex = |k: usize| {
            parts.parts.get(k)?.iter().find_map(|c| match c {
                Cell::Vertex(v) => Some(*v),
                _ => None,
            })
        };
        Some((first_vertex(0)?, first_vertex(1)?))
    });
    let mut record = ArcRecord {
        seed,
        vertices: vs.iter().map(|&v| x.vertices()[v].to_string()).collect(),
        edges: es.iter().map(|&e| x.edges()[e].id.to_string()).collect(),
        complement_connected: parts.len() == 1,
        a: None,
        b: None,
        separates: None,
        bisection: None,
    };
    if let Some((a, b)) = ends {
        record.a = Some(x.vertices()[a].to_string());
        record.b = Some(x.vertices()[b].to_string());
        record.separates = Some(separates(x, arc, a, b)?);
        record.bisection = bisection_separating_subarc(x, arc, a, b)?.map(|found| BisectionRecord {
            vertices: found.vertices.iter().map(|&v| x.vertices()[v].to_string()).collect(),
            edges: found.edges.iter().map(|&e| x.edges()[e].id.to_string()).collect(),
            depth: found.depth,
        });
    }
    Ok(record)
}

fn arc_checks(space: &SpaceSource, arcs: Vec<ArcRecord>) -> (serde_json::Value, Vec<Check>) {
    let mut checks = Vec::new();
    if is_sphere(space) {
        let bad = failing(&arcs, |a| a.complement_connected);
        checks.push(Check::new("no arc separates the sphere", bad.is_empty(), listing(&bad)));
    }
    let run = ArcRun {
        arcs,
        checks: checks.clone(),
    };
    (to_value(&run), checks)
}
