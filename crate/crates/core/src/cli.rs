//! Command-line front end. [`run`] parses arguments, dispatches to one of
//! the `cmd_*` functions and prints the result as text or JSON.
//!
//! Exit codes: 0 success, 1 a negative verdict, 2 bad usage or input
//! syntax, 3 a failed computation.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::algebraic::{AlgebraicNumber, Limits};
use crate::annihilator;
use crate::expression::{self, classify, decide_origami, synthesize, ExprError, FieldClass, SynthesisOptions};
use crate::numeric::{digits_for_width, parse_decimal, to_decimal_string, Rational};
use crate::plane::{self, render_svg, Object, PlaneError, Point, Scalar, Trace, Viewport};
use crate::poly::{factor_rational, PolyError, Polynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "origami", version, about = "Exact origami constructibility of real algebraic numbers")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest annihilator degree factored before giving up.
    #[arg(long, global = true, default_value_t = crate::poly::DEFAULT_MAX_DEGREE)]
    pub max_degree: usize,
    /// Coordinate bound for the sum-of-squares search.
    #[arg(long, global = true, default_value_t = expression::DEFAULT_SEARCH_HEIGHT)]
    pub search_height: i64,
    /// Width of printed decimal enclosures, e.g. 1e-12 or 1/1000.
    #[arg(long, global = true, default_value = "1e-12")]
    pub precision: String,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether an expression's value is an origami number.
    Decide { expr: String },
    /// Factor a polynomial and report which roots are totally real.
    MinpolyCheck { poly: String },
    /// Rewrite an origami expression using only field operations and hyp.
    Synthesize { expr: String },
    /// Annihilating polynomials for -a, 1/a, hyp(a), a+b and a*b.
    Annihilator {
        #[command(subcommand)]
        op: AnnihilatorCommand,
    },
    /// Replay a construction trace and list what it builds.
    Replay { file: PathBuf },
    /// Breadth-first closure of the seed points (0,0) and (0,1).
    Closure {
        #[arg(long, default_value_t = plane::DEFAULT_DEPTH)]
        depth: usize,
        #[arg(long, default_value_t = plane::DEFAULT_BUDGET)]
        budget: usize,
        /// Stop at this point, given as "x,y".
        #[arg(long)]
        target: Option<String>,
    },
    /// Draw a construction trace as SVG.
    Render {
        file: PathBuf,
        #[arg(long)]
        svg: PathBuf,
        /// Picture size in pixels.
        #[arg(long, default_value_t = 600)]
        size: u32,
        /// "xmin,xmax,ymin,ymax" (write --viewport=-1,2,-1,2 for negative
        /// values); fitted to the points when omitted.
        #[arg(long)]
        viewport: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum AnnihilatorCommand {
    Neg { p: String },
    Inv { p: String },
    Hyp { p: String },
    Sum { p: String, q: String },
    Product { p: String, q: String },
}

/// Shared numeric settings taken from the global flags.
#[derive(Debug, Clone)]
pub struct Settings {
    pub limits: Limits,
    pub search_height: i64,
    pub precision: Rational,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            limits: Limits::default(),
            search_height: expression::DEFAULT_SEARCH_HEIGHT,
            precision: parse_decimal("1e-12").expect("literal"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    #[default]
    Ok,
    VerdictFalse,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorReport {
    pub minpoly: String,
    pub multiplicity: usize,
    pub degree: usize,
    pub real_roots: usize,
    pub complex_pairs: usize,
    pub totally_real: bool,
    pub root_enclosures: Vec<[String; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObjectReport {
    pub id: usize,
    pub kind: String,
    pub value: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generation: Option<usize>,
}

/// Machine-readable result. Fields that do not apply are omitted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Payload {
    pub command: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minpoly: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub real_roots: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complex_pairs: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value_enclosure: Option<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expression: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<FactorReport>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub objects: Option<Vec<ObjectReport>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Payload,
    pub text: String,
}

impl CommandResult {
    fn new(command: &str, status: Status, payload: Payload, text: String) -> Self {
        CommandResult { status, payload: Payload { command: command.into(), status, ..payload }, text }
    }

    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok => 0,
            Status::VerdictFalse => 1,
            Status::Error => 3,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => serde_json::to_string_pretty(&self.payload).expect("payload serializes") + "\n",
        }
    }
}

/// Failure before a result exists: bad input (exit 2) or a computation
/// error (exit 3).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Compute(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Compute(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Compute(m) => m,
        }
    }
}

impl From<ExprError> for CliError {
    fn from(e: ExprError) -> Self {
        match e {
            ExprError::Syntax { .. } => CliError::Usage(e.to_string()),
            other => CliError::Compute(other.to_string()),
        }
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::Syntax { .. } => CliError::Usage(e.to_string()),
            other => CliError::Compute(other.to_string()),
        }
    }
}

impl From<PlaneError> for CliError {
    fn from(e: PlaneError) -> Self {
        match e {
            PlaneError::MalformedTrace { .. } => CliError::Usage(e.to_string()),
            PlaneError::Expr(x) => x.into(),
            other => CliError::Compute(other.to_string()),
        }
    }
}

fn enclosure(v: &AlgebraicNumber, width: &Rational) -> [String; 2] {
    let w = v.to_decimal(width);
    let digits = digits_for_width(width).max(1);
    [to_decimal_string(w.lo(), digits, false), to_decimal_string(w.hi(), digits, true)]
}

fn plural(n: usize, one: &str, many: &str) -> String {
    format!("{n} {}", if n == 1 { one } else { many })
}

pub fn cmd_decide(text: &str, s: &Settings) -> Result<CommandResult, CliError> {
    let e = expression::parse(text)?;
    let verdict = decide_origami(&e, &s.limits)?;
    let class = match classify(&e) {
        FieldClass::HypClass => "hyp-class",
        FieldClass::SqrtClass => "sqrt-class",
    };
    let mut out = String::new();
    let mut p = Payload { verdict: Some(verdict.is_origami), reason: Some(verdict.reason.to_string()), ..Default::default() };
    if verdict.is_origami {
        let _ = writeln!(out, "verdict: origami number");
    } else {
        let _ = writeln!(out, "verdict: not an origami number ({})", verdict.reason);
    }
    if let (Some(v), Some(w)) = (&verdict.value, &verdict.witness) {
        let enc = enclosure(v, &s.precision);
        let _ = writeln!(out, "minpoly: {}", v.minpoly());
        let _ = writeln!(
            out,
            "conjugates: {}, {}",
            plural(w.real_count, "real", "real"),
            plural(w.complex_pair_count, "complex pair", "complex pairs")
        );
        let _ = writeln!(out, "value: [{}, {}]", enc[0], enc[1]);
        p.minpoly = Some(v.minpoly().to_string());
        p.real_roots = Some(w.real_count);
        p.complex_pairs = Some(w.complex_pair_count);
        p.value_enclosure = Some(enc);
    }
    let _ = writeln!(out, "class: {class}");
    let status = if verdict.is_origami { Status::Ok } else { Status::VerdictFalse };
    Ok(CommandResult::new("decide", status, p, out))
}

pub fn cmd_minpoly_check(text: &str, s: &Settings) -> Result<CommandResult, CliError> {
    let poly: Polynomial = text.parse()?;
    let fac = factor_rational(&poly, s.limits.max_degree)?;
    let mut out = String::new();
    let mut reports = Vec::new();
    for (f, mult) in &fac.factors {
        let roots = AlgebraicNumber::real_roots(f, &s.limits).map_err(|e| CliError::Compute(e.to_string()))?;
        let real = roots.len();
        let pairs = (f.degree().unwrap_or(0) - real) / 2;
        let totally_real = real == f.degree().unwrap_or(0);
        let _ = writeln!(
            out,
            "factor {f}{}: degree {}, {}, {}, totally real: {}",
            if *mult > 1 { format!(" (multiplicity {mult})") } else { String::new() },
            f.degree().unwrap_or(0),
            plural(real, "real root", "real roots"),
            plural(pairs, "complex pair", "complex pairs"),
            if totally_real { "yes" } else { "no" }
        );
        let encs: Vec<[String; 2]> = roots.iter().map(|r| enclosure(r, &s.precision)).collect();
        for e in &encs {
            let _ = writeln!(out, "  root in [{}, {}]", e[0], e[1]);
        }
        reports.push(FactorReport {
            minpoly: f.to_string(),
            multiplicity: *mult,
            degree: f.degree().unwrap_or(0),
            real_roots: real,
            complex_pairs: pairs,
            totally_real,
            root_enclosures: encs,
        });
    }
    let real_total: usize = reports.iter().map(|r| r.real_roots).sum();
    let pairs_total: usize = reports.iter().map(|r| r.complex_pairs).sum();
    let any = reports.iter().any(|r| r.totally_real && r.real_roots > 0);
    if real_total == 0 {
        let _ = writeln!(out, "no real roots");
    }
    let _ = writeln!(out, "totally real root present: {}", if any { "yes" } else { "no" });
    let p = Payload {
        verdict: Some(any),
        minpoly: (reports.len() == 1).then(|| reports[0].minpoly.clone()),
        real_roots: Some(real_total),
        complex_pairs: Some(pairs_total),
        factors: Some(reports),
        ..Default::default()
    };
    Ok(CommandResult::new("minpoly-check", if any { Status::Ok } else { Status::VerdictFalse }, p, out))
}

pub fn cmd_synthesize(text: &str, s: &Settings) -> Result<CommandResult, CliError> {
    let e = expression::parse(text)?;
    let opts = SynthesisOptions { limits: s.limits, search_height: s.search_height };
    match synthesize(&e, &opts) {
        Ok(out_expr) => {
            let value = out_expr.evaluate().map_err(|x| CliError::Compute(x.to_string()))?;
            let enc = enclosure(&value, &s.precision);
            let text = format!(
                "{out_expr}\ncheck: {out_expr} = {e} exactly\nminpoly: {}\nvalue: [{}, {}]\n",
                value.minpoly(),
                enc[0],
                enc[1]
            );
            let p = Payload {
                verdict: Some(true),
                expression: Some(out_expr.to_string()),
                minpoly: Some(value.minpoly().to_string()),
                value_enclosure: Some(enc),
                ..Default::default()
            };
            Ok(CommandResult::new("synthesize", Status::Ok, p, text))
        }
        Err(ExprError::NotOrigami) => {
            let p = Payload { verdict: Some(false), reason: Some("not totally real".into()), ..Default::default() };
            Ok(CommandResult::new("synthesize", Status::VerdictFalse, p, "verdict: not an origami number, nothing to synthesize\n".into()))
        }
        Err(other) => Err(other.into()),
    }
}

pub fn cmd_annihilator(op: &AnnihilatorCommand) -> Result<CommandResult, CliError> {
    let parse = |t: &str| t.parse::<Polynomial>().map_err(CliError::from);
    let result = match op {
        AnnihilatorCommand::Neg { p } => annihilator::annihilator_neg(&parse(p)?),
        AnnihilatorCommand::Inv { p } => annihilator::annihilator_inv(&parse(p)?),
        AnnihilatorCommand::Hyp { p } => annihilator::annihilator_hyp(&parse(p)?),
        AnnihilatorCommand::Sum { p, q } => annihilator::annihilator_sum(&parse(p)?, &parse(q)?),
        AnnihilatorCommand::Product { p, q } => annihilator::annihilator_product(&parse(p)?, &parse(q)?),
    }
    .map_err(|e| CliError::Usage(e.to_string()))?;
    let p = Payload { minpoly: Some(result.to_string()), ..Default::default() };
    Ok(CommandResult::new("annihilator", Status::Ok, p, format!("{result}\n")))
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn report(id: usize, o: &Object, generation: Option<usize>) -> ObjectReport {
    let kind = match o {
        Object::Point(_) => "point",
        Object::Line(_) => "line",
    };
    ObjectReport { id, kind: kind.into(), value: o.to_string(), generation }
}

pub fn cmd_replay(path: &Path) -> Result<CommandResult, CliError> {
    let trace = Trace::parse(&read(path)?)?;
    let cfg = trace.replay()?;
    let objects: Vec<ObjectReport> = cfg.objects.iter().enumerate().map(|(i, o)| report(i, o, None)).collect();
    let mut out = format!(
        "replayed {} exactly: {}, {}\n",
        plural(trace.steps.len(), "step", "steps"),
        plural(cfg.points().count(), "point", "points"),
        plural(cfg.lines().count(), "line", "lines")
    );
    for r in &objects {
        let _ = writeln!(out, "{:>4} {:<5} {}", r.id, r.kind, r.value);
    }
    let p = Payload { objects: Some(objects), ..Default::default() };
    Ok(CommandResult::new("replay", Status::Ok, p, out))
}

fn parse_point(text: &str) -> Result<Point, CliError> {
    let (x, y) = text
        .trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split_once(',')
        .ok_or_else(|| CliError::Usage(format!("expected \"x,y\", found {text:?}")))?;
    let coord = |t: &str| -> Result<Scalar, CliError> { Ok(Scalar::from_expression(expression::parse(t.trim())?)?) };
    Ok(Point::new(coord(x)?, coord(y)?))
}

pub fn cmd_closure(depth: usize, budget: usize, target: Option<&str>) -> Result<CommandResult, CliError> {
    let target = target.map(parse_point).transpose()?;
    let closure = plane::bfs_closure(depth, target.as_ref(), budget)?;
    let mut out = String::new();
    if let Some(t) = &target {
        return Ok(match closure.found_trace() {
            Some(trace) => {
                let steps: Vec<String> = trace.steps.iter().map(|s| s.to_string()).collect();
                let _ = writeln!(out, "reached {t} in generation {}", closure.generation_of(closure.target.unwrap()));
                out.push_str(&trace.to_string());
                let p = Payload { verdict: Some(true), trace: Some(steps), ..Default::default() };
                CommandResult::new("closure", Status::Ok, p, out)
            }
            None => {
                let _ = writeln!(out, "{t} not reached within {}", plural(depth, "generation", "generations"));
                let p = Payload { verdict: Some(false), reason: Some("not found at depth".into()), ..Default::default() };
                CommandResult::new("closure", Status::VerdictFalse, p, out)
            }
        });
    }
    let objects: Vec<ObjectReport> =
        closure.objects().iter().enumerate().map(|(i, o)| report(i, o, Some(closure.generation_of(i)))).collect();
    let _ = writeln!(out, "{} after {}", plural(objects.len(), "object", "objects"), plural(depth, "generation", "generations"));
    for r in &objects {
        let _ = writeln!(out, "gen {} {:>5} {:<5} {}", r.generation.unwrap_or(0), r.id, r.kind, r.value);
    }
    let p = Payload { objects: Some(objects), ..Default::default() };
    Ok(CommandResult::new("closure", Status::Ok, p, out))
}

pub fn cmd_render(path: &Path, svg: &Path, size: u32, viewport: Option<&str>) -> Result<CommandResult, CliError> {
    let cfg = Trace::parse(&read(path)?)?.replay()?;
    let view = match viewport {
        None => Viewport::fit(&cfg),
        Some(v) => {
            let nums: Vec<f64> = v.split(',').map(|t| t.trim().parse::<f64>()).collect::<Result<_, _>>().map_err(|e| CliError::Usage(format!("bad viewport: {e}")))?;
            match nums.as_slice() {
                [x0, x1, y0, y1] if x0 < x1 && y0 < y1 => Viewport { x_min: *x0, x_max: *x1, y_min: *y0, y_max: *y1 },
                _ => return Err(CliError::Usage("viewport must be xmin,xmax,ymin,ymax with min < max".into())),
            }
        }
    };
    std::fs::write(svg, render_svg(&cfg, &view, size)).map_err(|e| CliError::Compute(format!("cannot write {}: {e}", svg.display())))?;
    let text = format!(
        "wrote {} ({}, {})\n",
        svg.display(),
        plural(cfg.lines().count(), "line", "lines"),
        plural(cfg.points().count(), "point", "points")
    );
    let p = Payload { output: Some(svg.display().to_string()), ..Default::default() };
    Ok(CommandResult::new("render", Status::Ok, p, text))
}

pub fn execute(cli: &Cli) -> Result<CommandResult, CliError> {
    let precision = parse_decimal(&cli.precision)
        .ok()
        .filter(|w| w > &Rational::from_integer(0.into()))
        .ok_or_else(|| CliError::Usage(format!("precision must be a positive number, found {:?}", cli.precision)))?;
    let s = Settings { limits: Limits { max_degree: cli.max_degree }, search_height: cli.search_height, precision };
    match &cli.command {
        Command::Decide { expr } => cmd_decide(expr, &s),
        Command::MinpolyCheck { poly } => cmd_minpoly_check(poly, &s),
        Command::Synthesize { expr } => cmd_synthesize(expr, &s),
        Command::Annihilator { op } => cmd_annihilator(op),
        Command::Replay { file } => cmd_replay(file),
        Command::Closure { depth, budget, target } => cmd_closure(*depth, *budget, target.as_deref()),
        Command::Render { file, svg, size, viewport } => cmd_render(file, svg, *size, viewport.as_deref()),
    }
}

/// Runs one invocation and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(&cli) {
        Ok(result) => {
            let _ = write!(out, "{}", result.render(cli.format));
            result.exit_code()
        }
        Err(e) => {
            match cli.format {
                Format::Text => {
                    let _ = writeln!(err, "error: {}", e.message());
                }
                Format::Json => {
                    let p = Payload { status: Status::Error, error: Some(e.message().to_string()), ..Default::default() };
                    let _ = writeln!(out, "{}", serde_json::to_string_pretty(&p).expect("payload serializes"));
                }
            }
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("origami").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn decide_exit_codes() {
        let (code, out, _) = call(&["decide", "sqrt(1+sqrt(2))"]);
        assert_eq!(code, 1);
        assert!(out.contains("not totally real") && out.contains("x^4-2x^2-1"));
        assert_eq!(call(&["decide", "sqrt(2+sqrt(2))"]).0, 0);
        assert_eq!(call(&["decide", "1/0"]).0, 3);
        assert_eq!(call(&["decide", "1/("]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["--precision", "0", "decide", "1"]).0, 2);
    }

    #[test]
    fn minpoly_check_examples() {
        let (code, out, _) = call(&["minpoly-check", "x^3-2"]);
        assert_eq!(code, 1);
        assert!(out.contains("1 real root, 1 complex pair, totally real: no"), "{out}");
        assert_eq!(call(&["minpoly-check", "x^4-8x^2+8"]).0, 0);
        let (code, out, _) = call(&["minpoly-check", "x^2+1"]);
        assert_eq!(code, 1);
        assert!(out.contains("no real roots"));
    }

    #[test]
    fn synthesize_and_annihilator() {
        let (code, out, _) = call(&["synthesize", "sqrt(4+2*sqrt(2))"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().next(), Some("hyp(1+hyp(1))"));
        assert_eq!(call(&["synthesize", "sqrt(1+sqrt(2))"]).0, 1);
        let (code, out, _) = call(&["annihilator", "sum", "x^2-2", "x^2-3"]);
        assert_eq!((code, out.trim()), (0, "x^4-10x^2+1"));
        assert_eq!(call(&["annihilator", "inv", "2x-1"]).0, 2);
    }

    #[test]
    fn json_payload_round_trips() {
        let (_, out, _) = call(&["--format", "json", "decide", "sqrt(2+sqrt(2))"]);
        let p: Payload = serde_json::from_str(&out).unwrap();
        assert_eq!(p.verdict, Some(true));
        assert_eq!(p.real_roots, Some(4));
        assert_eq!(serde_json::from_str::<Payload>(&serde_json::to_string(&p).unwrap()).unwrap(), p);
        let (code, out, _) = call(&["--format", "json", "decide", "1/0"]);
        assert_eq!(code, 3);
        let p: Payload = serde_json::from_str(&out).unwrap();
        assert_eq!(p.status, Status::Error);
    }
}
