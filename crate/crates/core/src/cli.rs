//! Scriptable front end. A [`JobSpec`] comes either from command-line flags
//! ([`Args`]) or from a JSON file, and [`run`] turns it into deterministic
//! text or JSON output plus an exit code:
//!
//! * `0`: success, or the checked identity holds
//! * `1`: input error
//! * `2`: a verification command found a violation
//!
//! Rationals are written as exact strings (`"-3"`, `"22/7"`). Coefficient
//! lists are ascending, constant term first.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::analysis::{
    classify_pattern, defect_check, interlace_verdict, isolate_roots, minor_identity_check,
    sturm_chain, subset_sum_minor, RootInterval,
};
use crate::bezout::{bezout_via_bilinear, bezout_via_product, BezoutInput};
use crate::divdiff::{
    delta_matrix, newton_interp, HermiteData, HermiteGroup, NodeSequence, Source,
};
use crate::error::{Error, Result};
use crate::families::{instance_rng, Family};
use crate::linalg::{MinorSequence, RationalMatrix};
use crate::poly::{Polynomial, RootForm};
use crate::scalar::{approx, format_rational, int, parse_rational, Rational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;

pub const DEFAULT_WIDTH: &str = "1/4294967296";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Bezout,
    Delta,
    Minors,
    Interp,
    Theorem1,
    Verify,
    Interlace,
    Defect,
    Sturm,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// Exactly one of coefficient form or root form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum PolySpec {
    Coeffs {
        coeffs: Vec<String>,
    },
    Roots {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        leading: Option<String>,
        roots: Vec<String>,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<Format>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub width: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub approx: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub command: Command,
    #[serde(rename = "P", default, skip_serializing_if = "Option::is_none")]
    pub p: Option<PolySpec>,
    #[serde(rename = "Q", default, skip_serializing_if = "Option::is_none")]
    pub q: Option<PolySpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nodes: Option<Vec<String>>,
    /// Hermite data used instead of `Q` by `delta`, `interp` and `interlace`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hermite: Option<Vec<HermiteSpec>>,
    #[serde(default)]
    pub options: Options,
}

/// `values[r]` is the `r`-th derivative at `node`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HermiteSpec {
    pub node: String,
    pub values: Vec<String>,
}

impl JobSpec {
    pub fn new(command: Command) -> Self {
        JobSpec {
            command,
            p: None,
            q: None,
            nodes: None,
            hermite: None,
            options: Options::default(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::input("input", e.to_string()))
    }
}

/// What a run produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Parsed {
    Coeffs(Polynomial),
    Roots(RootForm),
}

impl Parsed {
    fn polynomial(&self) -> Polynomial {
        match self {
            Parsed::Coeffs(p) => p.clone(),
            Parsed::Roots(rf) => rf.expand(),
        }
    }

    fn root_form(&self, field: &str) -> Result<&RootForm> {
        match self {
            Parsed::Roots(rf) => Ok(rf),
            Parsed::Coeffs(_) => Err(Error::input(
                field,
                "root form required (use roots/leading)",
            )),
        }
    }
}

fn parse_list(field: &str, items: &[String]) -> Result<Vec<Rational>> {
    items.iter().map(|s| parse_rational(field, s)).collect()
}

fn parse_poly(field: &str, spec: Option<&PolySpec>) -> Result<Parsed> {
    match spec {
        None => Err(Error::input(field, "missing polynomial")),
        Some(PolySpec::Coeffs { coeffs }) => Ok(Parsed::Coeffs(Polynomial::new(parse_list(
            &format!("{field}.coeffs"),
            coeffs,
        )?))),
        Some(PolySpec::Roots { leading, roots }) => {
            let lead = match leading {
                Some(l) => parse_rational(&format!("{field}.leading"), l)?,
                None => int(1),
            };
            let roots = NodeSequence::new(parse_list(&format!("{field}.roots"), roots)?);
            RootForm::new(lead, roots)
                .map_err(|_| Error::input(format!("{field}.leading"), "must be nonzero"))
                .map(Parsed::Roots)
        }
    }
}

fn with_field(field: &str, err: Error) -> Error {
    match err {
        Error::Input { .. } => err,
        other => Error::input(field, other.to_string()),
    }
}

struct Ctx<'a> {
    spec: &'a JobSpec,
    format: Format,
    width: Rational,
    approx: bool,
}

impl Ctx<'_> {
    fn p(&self) -> Result<Parsed> {
        parse_poly("P", self.spec.p.as_ref())
    }

    fn q(&self) -> Result<Parsed> {
        parse_poly("Q", self.spec.q.as_ref())
    }

    /// Hermite data if given, otherwise `Q`.
    fn source(&self) -> Result<Source> {
        let Some(groups) = &self.spec.hermite else {
            return Ok(Source::Polynomial(self.q()?.polynomial()));
        };
        let groups = groups
            .iter()
            .map(|g| {
                Ok(HermiteGroup {
                    node: parse_rational("hermite.node", &g.node)?,
                    values: parse_list("hermite.values", &g.values)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Source::Hermite(
            HermiteData::new(groups).map_err(|e| with_field("hermite", e))?,
        ))
    }

    /// Explicit nodes, or the roots of `P` when `P` is in root form.
    fn nodes(&self) -> Result<NodeSequence> {
        if let Some(nodes) = &self.spec.nodes {
            let nodes = NodeSequence::new(parse_list("nodes", nodes)?);
            if nodes.is_empty() {
                return Err(Error::input("nodes", "node list is empty"));
            }
            return Ok(nodes);
        }
        match self.spec.p.as_ref() {
            Some(_) => Ok(self.p()?.root_form("nodes")?.roots().clone()),
            None => Err(Error::input("nodes", "missing node list")),
        }
    }
}

/// JSON output document. Fields appear per command.
#[derive(Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub matrices: BTreeMap<String, Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minors: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta_minors: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pattern: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<CheckRecord>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub interpolant: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roots: Option<Vec<IntervalRecord>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sturm_confirmed: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub real_root_count: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chain: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constructions_agree: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub defect: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gcd_degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gcd: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub batch: Option<BatchRecord>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CheckRecord {
    pub size: usize,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct IntervalRecord {
    pub lower: String,
    pub upper: String,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct BatchRecord {
    pub family: String,
    pub n: usize,
    pub count: usize,
    pub seed: u64,
    pub passed: usize,
    /// Indices of instances where some size disagreed.
    pub failed: Vec<u64>,
}

fn strings(values: &[Rational]) -> Vec<String> {
    values.iter().map(format_rational).collect()
}

fn matrix_record(m: &RationalMatrix) -> Vec<Vec<String>> {
    m.rows().map(strings).collect()
}

fn check_records(
    checks: impl IntoIterator<Item = (usize, Rational, Rational)>,
) -> Vec<CheckRecord> {
    checks
        .into_iter()
        .map(|(size, lhs, rhs)| CheckRecord {
            size,
            equal: lhs == rhs,
            lhs: format_rational(&lhs),
            rhs: format_rational(&rhs),
        })
        .collect()
}

fn interval_records(roots: &[RootInterval]) -> Vec<IntervalRecord> {
    roots
        .iter()
        .map(|r| IntervalRecord {
            lower: format_rational(&r.lower),
            upper: format_rational(&r.upper),
        })
        .collect()
}

/// Text rendering of a report. `approx` adds labelled decimal columns.
fn render_text(report: &Report, approx_col: bool) -> String {
    let mut out = String::new();
    let approx_of = |s: &str| -> String {
        if !approx_col {
            return String::new();
        }
        let v = parse_rational("", s)
            .map(|r| approx(&r))
            .unwrap_or(f64::NAN);
        format!("  (approx {v:.6})")
    };
    for (name, rows) in &report.matrices {
        let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
        let _ = writeln!(out, "{name} =");
        for row in rows {
            let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            let _ = writeln!(out, "  [ {} ]", cells.join(" "));
        }
    }
    let list = |label: &str, values: &[String], out: &mut String| {
        let _ = writeln!(out, "{label}: {}", values.join(", "));
        if approx_col {
            for (i, v) in values.iter().enumerate() {
                let _ = writeln!(out, "  [{}] {v}{}", i + 1, approx_of(v));
            }
        }
    };
    if let Some(m) = &report.minors {
        list("minors (size 1..n)", m, &mut out);
    }
    if let Some(m) = &report.delta_minors {
        list("delta minors (size 1..n)", m, &mut out);
    }
    if let Some(p) = &report.pattern {
        let _ = writeln!(out, "pattern: {p}");
    }
    if let Some(v) = &report.verdict {
        let _ = writeln!(out, "verdict: {v}");
    }
    if let Some(c) = &report.interpolant {
        list("interpolant coefficients (ascending)", c, &mut out);
    }
    if let Some(chain) = &report.chain {
        let _ = writeln!(out, "sturm chain:");
        for (i, p) in chain.iter().enumerate() {
            let _ = writeln!(out, "  p{i}: [{}]", p.join(", "));
        }
    }
    if let Some(n) = report.real_root_count {
        let _ = writeln!(out, "distinct real roots: {n}");
    }
    if let Some(roots) = &report.roots {
        let _ = writeln!(out, "isolated roots:");
        for r in roots {
            let _ = write!(out, "  ({}, {}]", r.lower, r.upper);
            if approx_col {
                let _ = write!(out, "{}", approx_of(&r.lower));
            }
            out.push('\n');
        }
    }
    if let Some(c) = report.sturm_confirmed {
        let _ = writeln!(out, "sturm confirmed: {c}");
    }
    if let Some(c) = report.constructions_agree {
        let _ = writeln!(out, "product and bilinear constructions agree: {c}");
    }
    if let (Some(d), Some(g)) = (report.defect, report.gcd_degree) {
        let _ = writeln!(out, "defect: {d}");
        let _ = writeln!(out, "gcd degree: {g}");
    }
    if let Some(g) = &report.gcd {
        let _ = writeln!(out, "gcd coefficients (ascending): [{}]", g.join(", "));
    }
    if let Some(checks) = &report.checks {
        let _ = writeln!(out, "checks:");
        for c in checks {
            let mark = if c.equal { "ok" } else { "MISMATCH" };
            let _ = writeln!(out, "  size {}: {} vs {} {mark}", c.size, c.lhs, c.rhs);
        }
    }
    if let Some(b) = &report.batch {
        let _ = writeln!(
            out,
            "family {} n={} seed={}: {}/{} instances hold",
            b.family, b.n, b.seed, b.passed, b.count
        );
        if !b.failed.is_empty() {
            let idx: Vec<String> = b.failed.iter().map(u64::to_string).collect();
            let _ = writeln!(out, "failed instances: {}", idx.join(", "));
        }
    }
    out
}

fn minors_strings(m: &MinorSequence) -> Vec<String> {
    strings(m.values())
}

/// Runs one job.
pub fn run(spec: &JobSpec) -> Outcome {
    match execute(spec) {
        Ok((report, ok, format, approx_col)) => {
            let stdout = match format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
                    s.push('\n');
                    s
                }
                Format::Text => render_text(&report, approx_col),
            };
            Outcome {
                code: if ok { EXIT_OK } else { EXIT_VIOLATION },
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn execute(spec: &JobSpec) -> Result<(Report, bool, Format, bool)> {
    let width = parse_rational(
        "width",
        spec.options.width.as_deref().unwrap_or(DEFAULT_WIDTH),
    )?;
    if width <= int(0) {
        return Err(Error::input("width", "must be positive"));
    }
    let ctx = Ctx {
        spec,
        format: spec.options.format.unwrap_or_default(),
        width,
        approx: spec.options.approx,
    };
    let mut report = Report {
        command: serde_json::to_value(spec.command)
            .ok()
            .and_then(|v| v.as_str().map(str::to_owned))
            .unwrap_or_default(),
        ..Report::default()
    };
    let ok = match spec.command {
        Command::Bezout => cmd_bezout(&ctx, &mut report)?,
        Command::Delta => cmd_delta(&ctx, &mut report)?,
        Command::Minors => cmd_minors(&ctx, &mut report)?,
        Command::Interp => cmd_interp(&ctx, &mut report)?,
        Command::Theorem1 => cmd_subset_sum(&ctx, &mut report)?,
        Command::Verify => cmd_verify(&ctx, &mut report)?,
        Command::Interlace => cmd_interlace(&ctx, &mut report)?,
        Command::Defect => cmd_defect(&ctx, &mut report)?,
        Command::Sturm => cmd_sturm(&ctx, &mut report)?,
    };
    Ok((report, ok, ctx.format, ctx.approx))
}

fn bezout_input(p: &Polynomial, q: &Polynomial) -> Result<BezoutInput> {
    BezoutInput::new(p, q).map_err(|e| match e {
        Error::DegenerateP => with_field("P", e),
        other => with_field("Q", other),
    })
}

fn cmd_bezout(ctx: &Ctx, r: &mut Report) -> Result<bool> {
    let input = bezout_input(&ctx.p()?.polynomial(), &ctx.q()?.polynomial())?;
    let b = bezout_via_product(&input);
    let agree = b == bezout_via_bilinear(&input);
    r.matrices.insert("B".into(), matrix_record(&b));
    r.constructions_agree = Some(agree);
    Ok(agree)
}

fn cmd_delta(ctx: &Ctx, r: &mut Report) -> Result<bool> {
    let nodes = ctx.nodes()?;
    let delta = delta_matrix(&ctx.source()?, &nodes).map_err(|e| with_field("nodes", e))?;
    r.matrices
        .insert("Delta".into(), matrix_record(delta.matrix()));
    r.minors = Some(minors_strings(&delta.matrix().trailing_minors()));
    Ok(true)
}

fn cmd_minors(ctx: &Ctx, r: &mut Report) -> Result<bool> {
    let p = ctx.p()?;
    let q = ctx.q()?.polynomial();
    let b = bezout_via_product(&bezout_input(&p.polynomial(), &q)?);
    let minors = b.trailing_minors();
    r.matrices.insert("B".into(), matrix_record(&b));
    r.minors = Some(minors_strings(&minors));
    r.pattern = Some(classify_pattern(&minors).classification.to_string());
    if ctx.spec.nodes.is_some() || matches!(p, Parsed::Roots(_)) {
        let nodes = ctx.nodes()?;
        let delta =
            delta_matrix(&Source::Polynomial(q), &nodes).map_err(|e| with_field("nodes", e))?;
        r.matrices
            .insert("Delta".into(), matrix_record(delta.matrix()));
        r.delta_minors = Some(minors_strings(&delta.matrix().trailing_minors()));
    }
    Ok(true)
}

fn cmd_interp(ctx: &Ctx, r: &mut Report) -> Result<bool> {
    let nodes = ctx.nodes()?;
    let interp = newton_interp(&ctx.source()?, &nodes).map_err(|e| with_field("nodes", e))?;
    r.interpolant = Some(strings(interp.coeffs()));
    Ok(true)
}

fn cmd_subset_sum(ctx: &Ctx, r: &mut Report) -> Result<bool> {
    let parsed = ctx.p()?;
    let p = parsed.root_form("P")?;
    let q = ctx.q()?.polynomial();
    let b = bezout_via_product(&bezout_input(&p.expand(), &q)?);
    let direct = b.trailing_minors();
    let checks = (1..=p.degree())
        .map(|s| {
            Ok((
                s,
                subset_sum_minor(p, &q, s).map_err(|e| with_field("P.roots", e))?,
                direct.size(s).clone(),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let records = check_records(checks);
    let ok = records.iter().all(|c| c.equal);
    r.minors = Some(minors_strings(&direct));
    r.checks = Some(records);
    Ok(ok)
}

fn cmd_verify(ctx: &Ctx, r: &mut Report) -> Result<bool> {
    let opts = &ctx.spec.options;
    if let Some(name) = &opts.family {
        let family: Family = name
            .parse()
            .map_err(|e: String| Error::input("family", e))?;
        let n = opts
            .n
            .ok_or_else(|| Error::input("n", "required with --family"))?;
        if n == 0 {
            return Err(Error::input("n", "must be at least 1"));
        }
        let count = opts.count.unwrap_or(100);
        let seed = opts.seed.unwrap_or(0);
        let mut failed = Vec::new();
        for index in 0..count as u64 {
            let inst = family.generate(&mut instance_rng(seed, index), n);
            if !minor_identity_check(&inst.p, &inst.q)?.holds() {
                failed.push(index);
            }
        }
        let ok = failed.is_empty();
        r.batch = Some(BatchRecord {
            family: family.name().into(),
            n,
            count,
            seed,
            passed: count - failed.len(),
            failed,
        });
        return Ok(ok);
    }
    let parsed = ctx.p()?;
    let p = parsed.root_form("P")?;
    let q = ctx.q()?.polynomial();
    let report = minor_identity_check(p, &q).map_err(|e| with_field("Q", e))?;
    r.matrices.insert("B".into(), matrix_record(&report.bezout));
    r.matrices
        .insert("Delta".into(), matrix_record(report.delta.matrix()));
    r.minors = Some(minors_strings(&report.bezout_minors));
    r.delta_minors = Some(minors_strings(&report.delta_minors));
    r.checks = Some(check_records(
        report
            .checks
            .iter()
            .map(|c| (c.size, c.lhs.clone(), c.rhs.clone())),
    ));
    Ok(report.holds())
}

fn cmd_interlace(ctx: &Ctx, r: &mut Report) -> Result<bool> {
    let nodes = ctx.nodes()?;
    let rep = interlace_verdict(&ctx.source()?, &nodes, &ctx.width)
        .map_err(|e| with_field("nodes", e))?;
    r.matrices
        .insert("Delta".into(), matrix_record(rep.delta.matrix()));
    r.minors = Some(minors_strings(&rep.pattern.minors));
    r.pattern = Some(rep.pattern.classification.to_string());
    r.verdict = Some(rep.verdict.to_string());
    r.interpolant = Some(strings(rep.interpolant.coeffs()));
    r.roots = Some(interval_records(&rep.isolated_roots));
    r.sturm_confirmed = Some(rep.sturm_confirmed);
    Ok(rep.is_sound())
}

fn cmd_defect(ctx: &Ctx, r: &mut Report) -> Result<bool> {
    let p = ctx.p()?.polynomial();
    let q = ctx.q()?.polynomial();
    bezout_input(&p, &q)?;
    let d = defect_check(&p, &q)?;
    r.defect = Some(d.defect);
    r.gcd_degree = Some(d.gcd_degree);
    r.gcd = Some(strings(p.gcd(&q)?.coeffs()));
    Ok(d.holds())
}

fn cmd_sturm(ctx: &Ctx, r: &mut Report) -> Result<bool> {
    let p = ctx.p()?.polynomial();
    let chain = sturm_chain(&p).map_err(|e| with_field("P", e))?;
    let g = p.gcd(&p.derivative())?;
    let squarefree = p.div_rem(&g).0;
    let roots = isolate_roots(&squarefree, &ctx.width)?;
    r.chain = Some(chain.polys().iter().map(|c| strings(c.coeffs())).collect());
    r.real_root_count = Some(chain.count_all());
    r.roots = Some(interval_records(&roots));
    // the squarefree part has the same distinct roots as P
    Ok(chain.count_all() == roots.len())
}

/// Command-line arguments.
#[derive(Debug, Parser)]
#[command(
    name = "bezoutiant",
    version,
    about = "Exact Bezout and divided-difference minors"
)]
pub struct Args {
    /// JSON job file; its command and fields are used unless overridden by flags
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Isolation width as `a` or `a/b` (default 1/4294967296)
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub width: Option<String>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Add labelled decimal approximations to text output
    #[arg(long, global = true)]
    pub approx: bool,
    #[command(subcommand)]
    pub command: Option<Sub>,
}

#[derive(Debug, Subcommand)]
pub enum Sub {
    /// Bezout matrix B(P, Q)
    Bezout(JobArgs),
    /// Divided-difference matrix of Q at the nodes
    Delta(JobArgs),
    /// Trailing principal minors of B(P, Q) and of the divided-difference matrix
    Minors(JobArgs),
    /// Newton–Hermite interpolant of Q at the nodes
    Interp(JobArgs),
    /// Closed-form subset-sum minors against direct determinants (simple roots)
    Theorem1(JobArgs),
    /// B-vs-divided-difference minor identity, one instance or a seeded batch
    Verify(JobArgs),
    /// Sign-pattern verdict on interpolant roots with Sturm confirmation
    Interlace(JobArgs),
    /// Rank defect of B(P, Q) against deg gcd(P, Q)
    Defect(JobArgs),
    /// Sturm chain, real-root count and isolating intervals of P
    Sturm(JobArgs),
}

/// Polynomial and batch flags shared by every subcommand. Lists are
/// comma-separated rationals; coefficients ascending.
#[derive(Debug, Default, clap::Args)]
pub struct JobArgs {
    #[arg(long, allow_hyphen_values = true, conflicts_with = "p_roots")]
    pub p_coeffs: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub p_roots: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "p_roots")]
    pub p_lead: Option<String>,
    #[arg(long, allow_hyphen_values = true, conflicts_with = "q_roots")]
    pub q_coeffs: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub q_roots: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "q_roots")]
    pub q_lead: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub nodes: Option<String>,
    /// Random family for `verify`: distinct-roots, shared-roots, multiple-roots
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub count: Option<usize>,
}

fn split_list(text: &str) -> Vec<String> {
    if text.trim().is_empty() {
        return Vec::new();
    }
    text.split(',').map(|s| s.trim().to_owned()).collect()
}

fn poly_from_flags(
    coeffs: &Option<String>,
    roots: &Option<String>,
    lead: &Option<String>,
) -> Option<PolySpec> {
    match (coeffs, roots) {
        (Some(c), _) => Some(PolySpec::Coeffs {
            coeffs: split_list(c),
        }),
        (None, Some(r)) => Some(PolySpec::Roots {
            leading: lead.clone(),
            roots: split_list(r),
        }),
        (None, None) => None,
    }
}

fn command_of(sub: &Sub) -> (Command, &JobArgs) {
    match sub {
        Sub::Bezout(a) => (Command::Bezout, a),
        Sub::Delta(a) => (Command::Delta, a),
        Sub::Minors(a) => (Command::Minors, a),
        Sub::Interp(a) => (Command::Interp, a),
        Sub::Theorem1(a) => (Command::Theorem1, a),
        Sub::Verify(a) => (Command::Verify, a),
        Sub::Interlace(a) => (Command::Interlace, a),
        Sub::Defect(a) => (Command::Defect, a),
        Sub::Sturm(a) => (Command::Sturm, a),
    }
}

impl Args {
    /// Merges the optional JSON file with flags; flags win.
    pub fn into_job(self) -> Result<JobSpec> {
        let base = match &self.input {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::input("input", format!("{}: {e}", path.display())))?;
                Some(JobSpec::from_json(&text)?)
            }
            None => None,
        };
        let mut job = match (base, &self.command) {
            (Some(job), None) => job,
            (Some(job), Some(sub)) => {
                let (cmd, _) = command_of(sub);
                if cmd != job.command {
                    return Err(Error::input(
                        "command",
                        "subcommand differs from the input file",
                    ));
                }
                job
            }
            (None, Some(sub)) => JobSpec::new(command_of(sub).0),
            (None, None) => return Err(Error::input("command", "no subcommand or --input given")),
        };
        if let Some(sub) = &self.command {
            let (_, a) = command_of(sub);
            if let Some(p) = poly_from_flags(&a.p_coeffs, &a.p_roots, &a.p_lead) {
                job.p = Some(p);
            }
            if let Some(q) = poly_from_flags(&a.q_coeffs, &a.q_roots, &a.q_lead) {
                job.q = Some(q);
            }
            if let Some(nodes) = &a.nodes {
                job.nodes = Some(split_list(nodes));
            }
            job.options.family = a.family.clone().or(job.options.family);
            job.options.n = a.n.or(job.options.n);
            job.options.count = a.count.or(job.options.count);
        }
        job.options.format = self.format.or(job.options.format);
        job.options.width = self.width.or(job.options.width);
        job.options.seed = self.seed.or(job.options.seed);
        job.options.approx |= self.approx;
        Ok(job)
    }
}
