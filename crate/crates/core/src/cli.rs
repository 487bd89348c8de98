//! Command-line front end: configuration, validation, dispatch and output.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{bracket_basis, AlgebraElement};
use crate::classical::{find_singular, quotient_dims_after_singular, TruncatedVermaModule};
use crate::classify::{classify, ModuleDescriptor};
use crate::groups::{Group, GroupElement};
use crate::induced::{
    maximal_quotient_dims, string_boundedness, support_check, InductionData, RankMode, Window,
};
use crate::interseries::{action_table, coordinate_box, AlphaBinding, BetaBinding, IntermediateSeriesModule};
use crate::scalars::{parse_scalar, Registry, Scalar};

pub const SCHEMA_VERSION: u32 = 1;
/// Default output directory when `--out` is absent.
pub const OUT_DIR_ENV: &str = "GENVIR_OUT_DIR";
/// Singular-vector conditions are computed symbolically up to this level.
pub const SYMBOLIC_CONDITION_LEVEL: usize = 4;

#[derive(Parser, Debug)]
#[command(name = "genvir", version, about = "Harish-Chandra modules over generalized Virasoro algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// JSON session configuration.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Directory for report and table files.
    #[arg(long, global = true, env = OUT_DIR_ENV)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long = "window-L", global = true)]
    pub window_l: Option<usize>,
    #[arg(long = "window-N", global = true)]
    pub window_n: Option<i64>,
    /// Seed for randomized rank computations.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// [d_x, d_y] in the basis.
    Bracket {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        x: Option<Vec<i64>>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        y: Option<Vec<i64>>,
    },
    /// Reducibility and action table of V(α,β,G).
    Interseries,
    /// Windowed dimensions of V(α,β,b,G₀).
    Induce,
    /// Verma dimensions, singular vectors and quotients over Vir[ℤ].
    Verma,
    /// Classify a module descriptor.
    Classify {
        #[arg(long)]
        descriptor: Option<PathBuf>,
    },
    /// Print configuration diagnostics for a command.
    Validate {
        #[arg(value_enum, default_value_t = Target::Induce)]
        target: Target,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    Bracket,
    Interseries,
    Induce,
    Verma,
    Classify,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<String>>,
}

/// `"free"`, a rational such as `"1/2"`, a linear form such as `"g1+2*g2"`,
/// or `{"group": [1, 2]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Binding {
    Element { group: Vec<i64> },
    Value(String),
}

impl Default for Binding {
    fn default() -> Self {
        Binding::Value("free".into())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Bindings {
    #[serde(default)]
    pub alpha: Binding,
    #[serde(default)]
    pub beta: Binding,
    #[serde(default)]
    pub c: Binding,
    #[serde(default)]
    pub h: Binding,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WindowConfig {
    #[serde(rename = "L")]
    pub level_cap: usize,
    #[serde(rename = "N")]
    pub box_radius: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub top_radius: Option<i64>,
}

impl Default for WindowConfig {
    fn default() -> Self {
        WindowConfig {
            level_cap: 1,
            box_radius: 1,
            top_radius: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketConfig {
    pub x: Vec<i64>,
    pub y: Vec<i64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dir: Option<PathBuf>,
    #[serde(default)]
    pub format: Format,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SessionConfig {
    #[serde(default)]
    pub group: GroupConfig,
    #[serde(default)]
    pub bindings: Bindings,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<i64>>,
    #[serde(default)]
    pub window: WindowConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bracket: Option<BracketConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub descriptor: Option<PathBuf>,
    #[serde(default)]
    pub output: OutputConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub field: String,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.field, self.message)
    }
}

fn diag(field: &str, message: impl Into<String>) -> Diagnostic {
    Diagnostic {
        field: field.into(),
        message: message.into(),
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration:\n{}", .0.iter().map(|d| format!("  {d}")).collect::<Vec<_>>().join("\n"))]
    Validation(Vec<Diagnostic>),
    #[error("computation failed: {0}")]
    Computation(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot read JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) | CliError::Json(_) => 2,
            CliError::Computation(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl SessionConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
    }

    fn generator_names(&self) -> Result<Vec<String>, Diagnostic> {
        match (&self.group.generators, self.group.rank) {
            (Some(names), Some(r)) if names.len() != r => Err(diag(
                "group.generators",
                format!("missing generator name: rank {r} but {} names", names.len()),
            )),
            (Some(names), _) => Ok(names.clone()),
            (None, r) => Ok((1..=r.unwrap_or(2)).map(|i| format!("g{i}")).collect()),
        }
    }

    pub fn group(&self) -> Result<Group, Diagnostic> {
        let names = self.generator_names()?;
        if names.iter().any(|n| n.trim().is_empty()) {
            return Err(diag("group.generators", "missing generator name"));
        }
        Group::new(&names).map_err(|e| diag("group", e.to_string()))
    }

    fn window(&self) -> Window {
        let mut w = Window::new(self.window.level_cap, self.window.box_radius);
        if let Some(r) = self.window.top_radius {
            w.top_support_radius = r;
        }
        w
    }
}

enum Resolved {
    Free,
    Rational(num_rational::BigRational),
    Element(GroupElement),
}

fn resolve(field: &str, binding: &Binding, reg: &Registry, rank: usize) -> Result<Resolved, Diagnostic> {
    match binding {
        Binding::Element { group } if group.len() == rank => Ok(Resolved::Element(GroupElement(group.clone()))),
        Binding::Element { group } => Err(diag(
            field,
            format!("group element has {} coordinates, the group has rank {rank}", group.len()),
        )),
        Binding::Value(text) if matches!(text.trim(), "free" | "symbolic") => Ok(Resolved::Free),
        Binding::Value(text) => {
            let s = parse_scalar(text, reg).map_err(|e| diag(field, format!("unbound symbol reference: {e}")))?;
            if let Some(q) = s.as_rational() {
                return Ok(Resolved::Rational(q));
            }
            linear_form(&s, rank).map(Resolved::Element).ok_or_else(|| {
                diag(field, format!("{text:?} is neither rational, a group element, nor free"))
            })
        }
    }
}

/// Integer coordinates x with s = Σ xᵢ gᵢ, if s has that shape.
fn linear_form(s: &Scalar, rank: usize) -> Option<GroupElement> {
    if !s.is_polynomial() {
        return None;
    }
    let p = s.numer();
    let mut coords = vec![0i64; rank];
    for (m, c) in p.terms() {
        let pairs = m.pairs();
        let [(v, 1)] = pairs else {
            return None;
        };
        if *v >= rank || !c.is_integer() {
            return None;
        }
        coords[*v] = c.to_integer().try_into().ok()?;
    }
    Some(GroupElement(coords))
}

/// All problems with the configuration for the given command.
pub fn validate(config: &SessionConfig, target: Target) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    let group = match config.group() {
        Ok(g) => Some(g),
        Err(d) => {
            out.push(d);
            None
        }
    };
    let needs_module = matches!(target, Target::Interseries | Target::Induce);
    if let (Some(g), true) = (&group, needs_module) {
        let reg = g.registry();
        if let Err(d) = resolve("bindings.alpha", &config.bindings.alpha, reg, g.rank()) {
            out.push(d);
        }
        match resolve("bindings.beta", &config.bindings.beta, reg, g.rank()) {
            Err(d) => out.push(d),
            Ok(Resolved::Element(_)) => out.push(diag("bindings.beta", "β must be free or rational")),
            Ok(_) => {}
        }
    }
    if target == Target::Verma {
        let z = Group::integers();
        for (field, b) in [("bindings.c", &config.bindings.c), ("bindings.h", &config.bindings.h)] {
            match resolve(field, b, z.registry(), 1) {
                Err(d) => out.push(d),
                Ok(Resolved::Element(_)) => out.push(diag(field, "must be free or rational")),
                Ok(_) => {}
            }
        }
    }
    if target == Target::Induce {
        match (&config.b, &group) {
            (None, _) => out.push(diag("b", "the splitting vector b is required")),
            (Some(b), Some(g)) if b.len() != g.rank() => out.push(diag(
                "b",
                format!("b has {} coordinates, the group has rank {}", b.len(), g.rank()),
            )),
            (Some(b), _) if !GroupElement(b.clone()).is_primitive() => {
                out.push(diag("b", format!("b not primitive: {}", GroupElement(b.clone()))))
            }
            _ => {}
        }
        if config.window.level_cap == 0 {
            out.push(diag("window.L", "L = 0 leaves only the top module; use L ≥ 1"));
        }
    }
    if matches!(target, Target::Induce | Target::Interseries) && config.window.box_radius < 1 {
        out.push(diag("window.N", "N must be at least 1"));
    }
    if matches!(config.window.top_radius, Some(r) if r < 1) {
        out.push(diag("window.top_radius", "must be at least 1"));
    }
    if target == Target::Bracket {
        if let (Some(br), Some(g)) = (&config.bracket, &group) {
            if br.x.len() != g.rank() || br.y.len() != g.rank() {
                out.push(diag("bracket", "x and y must have one coordinate per generator"));
            }
        } else if config.bracket.is_none() {
            out.push(diag("bracket", "x and y are required"));
        }
    }
    if target == Target::Classify && config.descriptor.is_none() {
        out.push(diag("descriptor", "a descriptor path is required"));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilitySummary {
    pub stable: usize,
    pub unstable: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hint: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub command: Target,
    pub config: SessionConfig,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stability: Option<StabilitySummary>,
    /// Rows `(level, coordinates, dim, stable)`.
    #[serde(skip)]
    pub table: Vec<(i64, Vec<i64>, usize, bool)>,
    pub timing_ms: u128,
}

impl RunReport {
    /// JSON with the timing field removed, for reproducibility checks.
    pub fn deterministic_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("serializable");
        if let Value::Object(m) = &mut v {
            m.remove("timing_ms");
        }
        serde_json::to_string_pretty(&v).expect("serializable")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("level,coordinates,dim,stable\n");
        for (level, coords, dim, stable) in &self.table {
            s.push_str(&format!("{level},\"{}\",{dim},{stable}\n", GroupElement(coords.clone())));
        }
        s
    }
}

/// Applies command-line overrides to the loaded configuration.
pub fn effective_config(cli: &Cli) -> Result<SessionConfig, CliError> {
    let mut config = match &cli.config {
        Some(p) => SessionConfig::load(p)?,
        None => SessionConfig::default(),
    };
    if let Some(l) = cli.window_l {
        config.window.level_cap = l;
    }
    if let Some(n) = cli.window_n {
        config.window.box_radius = n;
    }
    if cli.seed.is_some() {
        config.seed = cli.seed;
    }
    if let Command::Bracket { x: Some(x), y: Some(y) } = &cli.command {
        config.bracket = Some(BracketConfig { x: x.clone(), y: y.clone() });
    }
    if let Command::Classify { descriptor: Some(p) } = &cli.command {
        config.descriptor = Some(p.clone());
    }
    Ok(config)
}

fn target_of(command: &Command) -> Target {
    match command {
        Command::Bracket { .. } => Target::Bracket,
        Command::Interseries => Target::Interseries,
        Command::Induce => Target::Induce,
        Command::Verma => Target::Verma,
        Command::Classify { .. } => Target::Classify,
        Command::Validate { target } => *target,
    }
}

fn computation(e: impl fmt::Display) -> CliError {
    CliError::Computation(e.to_string())
}

/// Validates, dispatches and times one command.
pub fn run(target: Target, config: &SessionConfig) -> Result<RunReport, CliError> {
    let problems = validate(config, target);
    if !problems.is_empty() {
        return Err(CliError::Validation(problems));
    }
    let start = Instant::now();
    let mut report = RunReport {
        schema_version: SCHEMA_VERSION,
        command: target,
        config: config.clone(),
        result: Value::Null,
        stability: None,
        table: Vec::new(),
        timing_ms: 0,
    };
    match target {
        Target::Bracket => run_bracket(config, &mut report)?,
        Target::Interseries => run_interseries(config, &mut report)?,
        Target::Induce => run_induce(config, &mut report)?,
        Target::Verma => run_verma(config, &mut report)?,
        Target::Classify => run_classify(config, &mut report)?,
    }
    report.timing_ms = start.elapsed().as_millis();
    Ok(report)
}

fn bindings(config: &SessionConfig, group: &Group) -> Result<(AlphaBinding, BetaBinding), CliError> {
    let reg = group.registry();
    let alpha = match resolve("bindings.alpha", &config.bindings.alpha, reg, group.rank()) {
        Ok(Resolved::Free) => AlphaBinding::Free,
        Ok(Resolved::Rational(q)) => AlphaBinding::Rational(q),
        Ok(Resolved::Element(x)) => AlphaBinding::GroupValue(x),
        Err(d) => return Err(CliError::Validation(vec![d])),
    };
    let beta = match resolve("bindings.beta", &config.bindings.beta, reg, group.rank()) {
        Ok(Resolved::Free) => BetaBinding::Free,
        Ok(Resolved::Rational(q)) => BetaBinding::Rational(q),
        Ok(Resolved::Element(_)) => unreachable!("rejected by validation"),
        Err(d) => return Err(CliError::Validation(vec![d])),
    };
    Ok((alpha, beta))
}

fn group_of(config: &SessionConfig) -> Result<Group, CliError> {
    config.group().map_err(|d| CliError::Validation(vec![d]))
}

fn run_bracket(config: &SessionConfig, report: &mut RunReport) -> Result<(), CliError> {
    let group = group_of(config)?;
    let br = config.bracket.as_ref().expect("validated");
    let (x, y) = (GroupElement(br.x.clone()), GroupElement(br.y.clone()));
    let (lin, central) = bracket_basis(&group, &x, &y);
    let element = AlgebraElement::term(&x + &y, lin).add(&AlgebraElement::central(central));
    report.result = json!({
        "x": x,
        "y": y,
        "bracket": element.render(group.registry()),
    });
    Ok(())
}

fn run_interseries(config: &SessionConfig, report: &mut RunReport) -> Result<(), CliError> {
    let group = group_of(config)?;
    let (alpha, beta) = bindings(config, &group)?;
    let module = IntermediateSeriesModule::new(group.clone(), alpha, beta);
    let reg = group.registry();
    let sub = module.irreducible_subquotient();
    let xs = coordinate_box(group.rank(), config.window.box_radius);
    let rows: Vec<Value> = action_table(&module, &xs, &xs)
        .into_iter()
        .map(|(x, y, c, t)| json!({"x": x, "y": y, "coefficient": c.render(reg), "target": t}))
        .collect();
    report.table = xs
        .iter()
        .map(|y| (0, y.0.clone(), usize::from(sub.contains(y)), true))
        .collect();
    report.result = json!({
        "alpha": module.alpha_value().render(reg),
        "beta": module.beta_value().render(reg),
        "reducible": module.is_reducible(),
        "subquotient": sub,
        "action": rows,
    });
    Ok(())
}

fn run_induce(config: &SessionConfig, report: &mut RunReport) -> Result<(), CliError> {
    let group = group_of(config)?;
    let (alpha, beta) = bindings(config, &group)?;
    let b = GroupElement(config.b.clone().expect("validated"));
    let data = InductionData::new(group, &b, alpha, beta).map_err(computation)?;
    let window = config.window();
    let mode = RankMode::Specialized {
        seed: config.seed.unwrap_or(0x5eed),
        trials: 2,
    };
    let q = maximal_quotient_dims(&data, &window, mode);
    let mut strings = serde_json::Map::new();
    let probes: Vec<GroupElement> = data
        .split
        .g0_basis()
        .iter()
        .cloned()
        .chain([b.clone()])
        .collect();
    for g in probes {
        let verdict = match string_boundedness(&q, &data.split, &g) {
            Ok(v) => serde_json::to_value(v)?,
            Err(e) => Value::String(e.to_string()),
        };
        strings.insert(g.to_string(), verdict);
    }
    let unstable = q.entries.iter().filter(|e| !e.stable).count();
    report.stability = Some(StabilitySummary {
        stable: q.entries.len() - unstable,
        unstable,
        hint: (unstable > 0).then(|| "some entries changed between N and N+1; increase N".to_string()),
    });
    report.table = q
        .entries
        .iter()
        .map(|e| (e.level, e.coords.clone(), e.dim, e.stable))
        .collect();
    report.result = json!({
        "b": b,
        "g0_basis": data.split.g0_basis(),
        "alpha": data.alpha().render(data.group().registry()),
        "beta": data.beta().render(data.group().registry()),
        "dims": q,
        "support": support_check(&q),
        "strings": strings,
    });
    Ok(())
}

fn verma_value(field: &str, b: &Binding, default: Scalar, reg: &Registry) -> Result<Scalar, CliError> {
    match resolve(field, b, reg, 1) {
        Ok(Resolved::Free) => Ok(default),
        Ok(Resolved::Rational(q)) => Ok(Scalar::from_rational(q)),
        Ok(Resolved::Element(_)) => unreachable!("rejected by validation"),
        Err(d) => Err(CliError::Validation(vec![d])),
    }
}

fn run_verma(config: &SessionConfig, report: &mut RunReport) -> Result<(), CliError> {
    let l = config.window.level_cap;
    let symbolic = TruncatedVermaModule::symbolic(l);
    let reg = symbolic.group_ref().registry().clone();
    let c = verma_value("bindings.c", &config.bindings.c, symbolic.c().clone(), &reg)?;
    let h = verma_value("bindings.h", &config.bindings.h, symbolic.h().clone(), &reg)?;
    let module = TruncatedVermaModule::new(c.clone(), h.clone(), l);
    let dims = module.dims();
    let mut singular = Vec::new();
    for n in 1..=l.min(SYMBOLIC_CONDITION_LEVEL) {
        let r = find_singular(&module, n);
        let conditions: Vec<String> = r.minors.iter().map(|p| Scalar::from_poly(p.clone()).render(&reg)).collect();
        singular.push(json!({
            "level": n,
            "kernel_dim": r.kernel.len(),
            "condition": Scalar::from_poly(r.condition.clone()).render(&reg),
            "minors": conditions,
        }));
    }
    let bound = c.as_rational().is_some() && h.as_rational().is_some();
    let quotient = bound.then(|| quotient_dims_after_singular(&module));
    report.table = dims
        .iter()
        .enumerate()
        .map(|(n, &d)| (n as i64, vec![-(n as i64)], quotient.as_ref().map_or(d, |q| q.dims[n]), true))
        .collect();
    report.result = json!({
        "c": c.render(&reg),
        "h": h.render(&reg),
        "dims": dims,
        "singular": singular,
        "singular_levels_checked": l.min(SYMBOLIC_CONDITION_LEVEL),
        "quotient": quotient,
    });
    Ok(())
}

fn run_classify(config: &SessionConfig, report: &mut RunReport) -> Result<(), CliError> {
    let path = config.descriptor.as_ref().expect("validated");
    let d: ModuleDescriptor = serde_json::from_str(&fs::read_to_string(path)?)?;
    let r = classify(&d).map_err(computation)?;
    report.result = serde_json::to_value(r)?;
    Ok(())
}

fn write_outputs(report: &RunReport, dir: &Path, format: Format) -> Result<(), CliError> {
    fs::create_dir_all(dir)?;
    let stem = serde_json::to_value(report.command)?
        .as_str()
        .unwrap_or("report")
        .to_string();
    fs::write(dir.join(format!("{stem}.json")), report.to_json())?;
    if format == Format::Csv && !report.table.is_empty() {
        fs::write(dir.join(format!("{stem}.csv")), report.to_csv())?;
    }
    Ok(())
}

/// Parses arguments, runs, prints, and returns the process exit code.
pub fn main_with(cli: Cli) -> i32 {
    let result = (|| -> Result<String, CliError> {
        let config = effective_config(&cli)?;
        if let Command::Validate { target } = cli.command {
            let problems = validate(&config, target);
            let text = serde_json::to_string_pretty(&json!({ "diagnostics": problems }))?;
            return if problems.is_empty() {
                Ok(text)
            } else {
                Err(CliError::Validation(problems))
            };
        }
        let report = run(target_of(&cli.command), &config)?;
        let format = if cli.format == Format::Csv { Format::Csv } else { config.output.format };
        if let Some(dir) = cli.out.as_ref().or(config.output.dir.as_ref()) {
            write_outputs(&report, dir, format)?;
        }
        Ok(match format {
            Format::Json => report.to_json(),
            Format::Csv => report.to_csv(),
        })
    })();
    match result {
        Ok(text) => {
            // A closed pipe (e.g. `| head`) is not an error.
            let _ = writeln!(std::io::stdout(), "{text}");
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
