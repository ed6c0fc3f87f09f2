//! Requests and responses shared by the command line and the HTTP service.
//!
//! Both front ends serialize a [`JobResponse`] with `serde_json::to_string`,
//! so identical requests give identical bytes apart from `timing`.

use std::time::{Duration, Instant};

use polyideal_core::geometry::{CellCollection, GridPoint};
use polyideal_core::groebner::IdealHandle;
use polyideal_core::hilbert::reduced_hilbert_series;
use polyideal_core::ideals::{
    ideal_ring, polyo_ideal_in, polyo_matrix, IdealOptions, RingChoice, TermOrder,
};
use polyideal_core::polyalg::{
    Field, FieldSpec, Fp, Monomial, OrderKind, Polynomial, Rational, RingRef,
};
use polyideal_core::toric::{alpha, polyo_toric_in, toric_compare};
use polyideal_core::{Error, ErrorKind, Interrupt, Limits};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::encoding::{
    collection_from_pairs, parse_encoding, parse_holes, render_braces, ParseError, Parsed,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Classify,
    Ideal,
    Matrix,
    Toric,
    Compare,
    Groebner,
    Initial,
    Hilbert,
}

impl Command {
    pub const ALL: [Command; 8] = [
        Command::Classify,
        Command::Ideal,
        Command::Matrix,
        Command::Toric,
        Command::Compare,
        Command::Groebner,
        Command::Initial,
        Command::Hilbert,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Classify => "classify",
            Command::Ideal => "ideal",
            Command::Matrix => "matrix",
            Command::Toric => "toric",
            Command::Compare => "compare",
            Command::Groebner => "groebner",
            Command::Initial => "initial",
            Command::Hilbert => "hilbert",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == s)
    }
}

/// Cells as an encoding string in either syntax, or as corner pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CellsInput {
    Text(String),
    Pairs(Vec<[[i64; 2]; 2]>),
}

/// `"auto"`, a string of corners, or a list of corners.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HolesInput {
    Text(String),
    Points(Vec<[i64; 2]>),
}

impl Default for HolesInput {
    fn default() -> Self {
        HolesInput::Text("auto".into())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    #[default]
    Json,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct JobOptions {
    /// `qq` or `fp:<prime>`.
    pub field: String,
    /// 1 (default ring) or 2 (convex collection ring).
    pub ring_choice: u32,
    /// `lex` or `grevlex`.
    pub term_order: String,
    pub holes: HolesInput,
    /// With `text` the response also carries the plain text rendering.
    pub format: Format,
    pub timeout_seconds: Option<f64>,
    pub dedupe: bool,
}

impl Default for JobOptions {
    fn default() -> Self {
        JobOptions {
            field: "qq".into(),
            ring_choice: 1,
            term_order: "lex".into(),
            holes: HolesInput::default(),
            format: Format::Json,
            timeout_seconds: None,
            dedupe: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobRequest {
    pub cells: CellsInput,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub command: Option<Command>,
    #[serde(default)]
    pub options: JobOptions,
}

impl JobRequest {
    pub fn new(cells: impl Into<String>, command: Command) -> Self {
        JobRequest {
            cells: CellsInput::Text(cells.into()),
            command: Some(command),
            options: JobOptions::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ErrorClass {
    Parse,
    Precondition,
    Timeout,
    Internal,
}

impl ErrorClass {
    pub fn exit_code(self) -> i32 {
        match self {
            ErrorClass::Parse => 2,
            ErrorClass::Precondition => 3,
            ErrorClass::Timeout => 4,
            ErrorClass::Internal => 1,
        }
    }

    pub fn http_status(self) -> u16 {
        match self {
            ErrorClass::Parse => 400,
            ErrorClass::Precondition => 422,
            ErrorClass::Timeout => 408,
            ErrorClass::Internal => 500,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, thiserror::Error)]
#[error("{message}")]
pub struct JobError {
    pub class: ErrorClass,
    pub code: String,
    pub message: String,
}

impl JobError {
    pub fn new(class: ErrorClass, code: &str, message: impl Into<String>) -> Self {
        JobError {
            class,
            code: code.into(),
            message: message.into(),
        }
    }

    fn option(message: impl Into<String>) -> Self {
        JobError::new(ErrorClass::Parse, "invalid_option", message)
    }
}

impl From<Error> for JobError {
    fn from(e: Error) -> Self {
        let class = match e.kind() {
            ErrorKind::Input => ErrorClass::Parse,
            ErrorKind::Precondition => ErrorClass::Precondition,
            ErrorKind::Limit => ErrorClass::Timeout,
            ErrorKind::Internal => ErrorClass::Internal,
        };
        JobError::new(class, e.code(), e.to_string())
    }
}

impl From<ParseError> for JobError {
    fn from(e: ParseError) -> Self {
        match e {
            ParseError::Malformed(m) => JobError::new(ErrorClass::Parse, "malformed_encoding", m),
            ParseError::Invalid(e) => e.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JobResponse {
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub command: Option<Command>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub text: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<JobError>,
    pub warnings: Vec<String>,
    pub timing: Timing,
}

impl JobResponse {
    pub fn failure(command: Option<Command>, error: JobError) -> Self {
        JobResponse {
            status: Status::Error,
            command,
            result: None,
            text: None,
            error: Some(error),
            warnings: Vec::new(),
            timing: Timing { elapsed_ms: 0.0 },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("responses serialize")
    }

    pub fn exit_code(&self) -> i32 {
        self.error.as_ref().map_or(0, |e| e.class.exit_code())
    }

    pub fn http_status(&self) -> u16 {
        self.error.as_ref().map_or(200, |e| e.class.http_status())
    }
}

#[derive(Debug, Clone, PartialEq)]
struct Resolved {
    field: FieldSpec,
    ideal: IdealOptions,
    holes: Option<Vec<GridPoint>>,
    timeout: Option<Duration>,
}

pub fn parse_field(s: &str) -> Result<FieldSpec, JobError> {
    let t = s.trim().to_ascii_lowercase();
    let spec = if t == "qq" {
        FieldSpec::Rationals
    } else if let Some(p) = t.strip_prefix("fp:").or_else(|| t.strip_prefix("zz/")) {
        let p: u32 = p
            .parse()
            .map_err(|_| JobError::option(format!("bad prime in field {:?}", s)))?;
        FieldSpec::Prime(p)
    } else {
        return Err(JobError::option(format!(
            "unknown field {:?}; expected qq or fp:<prime>",
            s
        )));
    };
    spec.validate().map_err(|e| JobError::option(e.to_string()))
}

fn resolve(o: &JobOptions) -> Result<Resolved, JobError> {
    let field = parse_field(&o.field)?;
    let ring_choice = RingChoice::from_number(o.ring_choice).ok_or_else(|| {
        JobError::option(format!("ring_choice must be 1 or 2, got {}", o.ring_choice))
    })?;
    let term_order = match o.term_order.to_ascii_lowercase().as_str() {
        "lex" => TermOrder::Lex,
        "grevlex" => TermOrder::GRevLex,
        other => {
            return Err(JobError::option(format!(
                "unknown term order {:?}; expected lex or grevlex",
                other
            )))
        }
    };
    let holes = match &o.holes {
        HolesInput::Text(t) => parse_holes(t)?,
        HolesInput::Points(p) => Some(p.iter().map(|&[i, j]| GridPoint::new(i, j)).collect()),
    };
    let timeout = match o.timeout_seconds {
        None => None,
        Some(t) if t.is_finite() && t > 0.0 => Some(Duration::from_secs_f64(t)),
        Some(t) => {
            return Err(JobError::option(format!(
                "timeout must be positive, got {}",
                t
            )))
        }
    };
    Ok(Resolved {
        field,
        ideal: IdealOptions {
            ring_choice,
            term_order,
        },
        holes,
        timeout,
    })
}

struct Deadline(Option<Instant>);

impl Interrupt for Deadline {
    fn should_stop(&self) -> bool {
        self.0.is_some_and(|d| Instant::now() >= d)
    }
}

pub fn run_command(req: &JobRequest) -> JobResponse {
    let start = Instant::now();
    let mut warnings = Vec::new();
    let outcome = execute(req, start, &mut warnings);
    let timing = Timing {
        elapsed_ms: (start.elapsed().as_secs_f64() * 1e6).round() / 1e3,
    };
    match outcome {
        Ok((value, text)) => JobResponse {
            status: Status::Ok,
            command: req.command,
            result: Some(value),
            text: (req.options.format == Format::Text).then_some(text),
            error: None,
            warnings,
            timing,
        },
        Err(e) => JobResponse {
            warnings,
            timing,
            ..JobResponse::failure(req.command, e)
        },
    }
}

fn execute(
    req: &JobRequest,
    start: Instant,
    warnings: &mut Vec<String>,
) -> Result<(Value, String), JobError> {
    let command = req
        .command
        .ok_or_else(|| JobError::new(ErrorClass::Parse, "missing_command", "no command given"))?;
    let opts = resolve(&req.options)?;
    let Parsed {
        collection: p,
        listed,
    } = match &req.cells {
        CellsInput::Text(s) => parse_encoding(s, req.options.dedupe)?,
        CellsInput::Pairs(pairs) => collection_from_pairs(pairs, req.options.dedupe)?,
    };
    let n = p.cells().len();
    if listed > n {
        warnings.push(format!("dropped {} duplicate cell(s)", listed - n));
    }
    if let Some(h) = &opts.holes {
        if matches!(command, Command::Toric | Command::Compare) {
            let detected: Vec<GridPoint> = p.detect_holes().iter().map(|h| h.corner).collect();
            if *h != detected {
                warnings.push(format!(
                    "hole corners {} differ from the detected ones {}",
                    points(h),
                    points(&detected)
                ));
            }
        } else {
            warnings.push(format!(
                "holes are only used by toric and compare, not by {}",
                command.name()
            ));
        }
    }
    let deadline = Deadline(opts.timeout.map(|t| start + t));
    let limits = Limits::with_interrupt(&deadline);
    match opts.field {
        FieldSpec::Rationals => dispatch::<Rational>(command, &p, (), &opts, limits),
        FieldSpec::Prime(q) => dispatch::<Fp>(command, &p, q, &opts, limits),
    }
}

fn points(ps: &[GridPoint]) -> String {
    let inner: Vec<String> = ps.iter().map(|g| format!("({},{})", g.i, g.j)).collect();
    format!("[{}]", inner.join(", "))
}

fn pair(g: GridPoint) -> [i64; 2] {
    [g.i, g.j]
}

#[derive(Serialize)]
struct TermJson {
    coefficient: String,
    monomial: String,
}

#[derive(Serialize)]
struct PolyJson {
    text: String,
    terms: Vec<TermJson>,
}

fn poly_json<K: Field>(f: &Polynomial<K>) -> PolyJson {
    PolyJson {
        text: f.to_string(),
        terms: f
            .terms()
            .iter()
            .map(|(c, m)| TermJson {
                coefficient: c.to_string(),
                monomial: Polynomial::render_monomial(f.ring(), m),
            })
            .collect(),
    }
}

#[derive(Serialize)]
struct RingJson {
    field: String,
    order: &'static str,
    variables: Vec<String>,
}

fn ring_json<K: Field>(r: &RingRef<K>) -> RingJson {
    let order = match r.order().kind {
        OrderKind::RankedLex => "lex",
        OrderKind::RankedGRevLex => "grevlex",
        OrderKind::ConvexCollection => "convex",
        OrderKind::Elimination { .. } => "elimination",
    };
    RingJson {
        field: K::describe(r.context()),
        order,
        variables: r.variables().iter().map(|v| v.to_string()).collect(),
    }
}

fn lines<K: Field>(ps: &[Polynomial<K>]) -> String {
    ps.iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join("\n")
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn dispatch<K: Field>(
    command: Command,
    p: &CellCollection,
    ctx: K::Context,
    opts: &Resolved,
    limits: Limits<'_>,
) -> Result<(Value, String), JobError> {
    let holes = opts.holes.as_deref();
    let ideal = || -> Result<IdealHandle<K>, JobError> {
        let ring = ideal_ring::<K>(p, ctx.clone(), opts.ideal)?;
        Ok(polyo_ideal_in(p, &ring)?)
    };
    match command {
        Command::Classify => Ok(classify(p)),
        Command::Matrix => Ok(matrix(p)),
        Command::Ideal => {
            let id = ideal()?;
            let v = serde_json::json!({
                "ring": ring_json(id.ring()),
                "count": id.generators().len(),
                "generators": id.generators().iter().map(poly_json).collect::<Vec<_>>(),
            });
            Ok((v, lines(id.generators())))
        }
        Command::Groebner => {
            let id = ideal()?;
            let gb = id.groebner_basis(limits)?;
            let v = serde_json::json!({
                "ring": ring_json(id.ring()),
                "count": gb.len(),
                "basis": gb.iter().map(poly_json).collect::<Vec<_>>(),
            });
            Ok((v, lines(gb)))
        }
        Command::Initial => {
            let id = ideal()?;
            let init = id.initial_ideal(limits)?;
            let render = |m: &Monomial| Polynomial::render_monomial(id.ring(), m);
            let v = serde_json::json!({
                "ring": ring_json(id.ring()),
                "count": init.len(),
                "squarefree": init.iter().all(Monomial::is_squarefree),
                "max_degree": init.iter().map(Monomial::degree).max(),
                "monomials": init.iter().map(render).collect::<Vec<_>>(),
            });
            Ok((v, init.iter().map(render).collect::<Vec<_>>().join("\n")))
        }
        Command::Hilbert => {
            let id = ideal()?;
            let s = reduced_hilbert_series(&id, limits)?;
            let v = serde_json::json!({
                "numerator": s.numerator,
                "denominator_exponent": s.denominator_exponent,
                "multiplicity": s.numerator_at_one(),
                "series": s.to_string(),
            });
            Ok((v, s.to_string()))
        }
        Command::Toric => {
            let ring = ideal_ring::<K>(p, ctx.clone(), opts.ideal)?;
            let a = alpha(p, holes)?;
            let j = polyo_toric_in(p, holes, &ring, limits)?;
            let v = serde_json::json!({
                "ring": ring_json(&ring),
                "holes": a.holes.iter().copied().map(pair).collect::<Vec<_>>(),
                "auxiliary": {
                    "horizontal": a.horizontal.len(),
                    "vertical": a.vertical.len(),
                    "holes": a.holes.len(),
                },
                "count": j.generators().len(),
                "generators": j.generators().iter().map(poly_json).collect::<Vec<_>>(),
            });
            Ok((v, lines(j.generators())))
        }
        Command::Compare => {
            let c = toric_compare::<K>(p, holes, ctx.clone(), opts.ideal, limits)?;
            let a = alpha(p, holes)?;
            let v = serde_json::json!({
                "equal": c.equal,
                "theorem_applies": c.theorem_applies,
                "holes": a.holes.iter().copied().map(pair).collect::<Vec<_>>(),
                "ideal_count": c.ideal.generators().len(),
                "toric_count": c.toric.generators().len(),
                "extra_generators": c.extra_generators.iter().map(poly_json).collect::<Vec<_>>(),
            });
            let mut text = String::from(match (c.equal, c.theorem_applies) {
                (true, true) => "equal (theorem applies: simple, weakly connected)",
                (true, false) => "equal",
                (false, _) => "not equal",
            });
            if !c.extra_generators.is_empty() {
                text.push_str("\nextra generators of the toric ideal:\n");
                text.push_str(&lines(&c.extra_generators));
            }
            Ok((v, text))
        }
    }
}

fn classify(p: &CellCollection) -> (Value, String) {
    let c = p.classify();
    let holes = p.detect_holes();
    let v = serde_json::json!({
        "encoding": render_braces(p),
        "cells": p.cells().len(),
        "vertices": p.vertex_set().len(),
        "inner_intervals": p.inner_intervals().len(),
        "is_polyomino": c.is_polyomino,
        "weakly_connected": c.weakly_connected,
        "row_convex": c.row_convex,
        "column_convex": c.column_convex,
        "convex": c.convex,
        "simple": c.simple,
        "hole_count": c.hole_count,
        "component_count": c.component_count,
        "holes": holes.iter().map(|h| serde_json::json!({
            "corner": pair(h.corner),
            "cells": h.cells.iter().map(|c| pair(c.lower_left())).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    });
    let mut text = format!(
        "cells: {}\nvertices: {}\ninner intervals: {}\npolyomino: {}\nweakly connected: {}\nrow convex: {}\ncolumn convex: {}\nconvex: {}\nsimple: {}\ncomponents: {}\nholes: {}",
        p.cells().len(),
        p.vertex_set().len(),
        p.inner_intervals().len(),
        yes(c.is_polyomino),
        yes(c.weakly_connected),
        yes(c.row_convex),
        yes(c.column_convex),
        yes(c.convex),
        yes(c.simple),
        c.component_count,
        c.hole_count,
    );
    for h in &holes {
        text.push_str(&format!(
            "\nhole with corner ({},{}): {} cell(s)",
            h.corner.i,
            h.corner.j,
            h.cells.len()
        ));
    }
    (v, text)
}

fn matrix(p: &CellCollection) -> (Value, String) {
    let m = polyo_matrix(p);
    let rows: Vec<Vec<String>> = m
        .rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|e| e.map_or_else(|| "0".to_string(), |g| format!("x_({},{})", g.i, g.j)))
                .collect()
        })
        .collect();
    let text = m.render().trim_end().to_string();
    let v = serde_json::json!({
        "nrows": m.nrows(),
        "ncols": m.ncols(),
        "lower_left": pair(m.bounds.a),
        "upper_right": pair(m.bounds.b),
        "rows": rows,
        "text": text,
    });
    (v, text)
}
