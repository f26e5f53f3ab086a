use std::io::Read;
use std::path::Path;

use serde::Serialize;
use sha2::{Digest, Sha256};
use shadowbracket::builders::{atomic_cone, corpus, fig14_knot_shadow, surface_link_shadow, AtomicKind, BuildError};
use shadowbracket::diagramc::{self, compile as compile_diagram, parse_diagram, DiagramError, DiagramIssue};
use shadowbracket::exactq::{HalfInt, Order, QRat};
use shadowbracket::graphvals::{circle_eval, lemma49_check, ColorTriple, PlanarGraph, TetFrame};
use shadowbracket::qcombinat::{quantum_factorial, quantum_int, quantum_multinomial, MultinomialSpec};
use shadowbracket::shadowcore::{
    audit_states, bracket, ribbon_report, state_value, validate_shadow, EdgeKind, RibbonTarget, Shadow, ShadowError,
};
use shadowbracket::skein::kauffman_bracket;

use crate::report::{RunReport, StateLine, Verification};
use crate::{ClosedFormCmd, EvalArgs, ExampleCmd, Format};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read `{path}`: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Unbounded(String),
    #[error("{0}")]
    Other(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Other(_) | CliError::Io { .. } => 1,
            CliError::Usage(_) => 2,
            CliError::Parse(_) => 3,
            CliError::Validation(_) => 4,
            CliError::Unbounded(_) => 5,
        }
    }
}

impl From<ShadowError> for CliError {
    fn from(e: ShadowError) -> Self {
        match e {
            ShadowError::Invalid(_) | ShadowError::Inadmissible { .. } | ShadowError::ColoringLength { .. } => {
                CliError::Validation(e.to_string())
            }
            ShadowError::Unbounded { .. } => CliError::Unbounded(e.to_string()),
            ShadowError::CapBelowBoundary { .. } => CliError::Usage(e.to_string()),
            ShadowError::Incomplete { .. } => CliError::Other(e.to_string()),
        }
    }
}

impl From<BuildError> for CliError {
    fn from(e: BuildError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<DiagramError> for CliError {
    fn from(e: DiagramError) -> Self {
        if e.0.iter().any(|i| matches!(i, DiagramIssue::Json { .. })) {
            CliError::Parse(e.to_string())
        } else {
            CliError::Validation(e.to_string())
        }
    }
}

pub struct Output {
    pub stdout: String,
    pub code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, code: 0 }
    }
}

fn read_input(path: &Path) -> Result<Vec<u8>, CliError> {
    let io = |source| CliError::Io { path: path.display().to_string(), source };
    if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf).map_err(io)?;
        Ok(buf)
    } else {
        std::fs::read(path).map_err(io)
    }
}

fn utf8(bytes: &[u8]) -> Result<&str, CliError> {
    std::str::from_utf8(bytes).map_err(|e| CliError::Parse(e.to_string()))
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

/// Knot or link when the boundary is a disjoint union of circles.
fn ribbon_target(s: &Shadow) -> Option<RibbonTarget> {
    let n = s.boundary_edges.len();
    let circles = s.boundary_edges.iter().all(|e| e.kind == EdgeKind::Circle);
    match (n, circles && s.boundary_vertices.is_empty()) {
        (1, true) => Some(RibbonTarget::Knot),
        (n, true) if n > 1 => Some(RibbonTarget::Link { components: n as u32 }),
        _ => None,
    }
}

pub fn eval(a: &EvalArgs) -> Result<Output, CliError> {
    let bytes = read_input(&a.input)?;
    let digest = format!("{:x}", Sha256::digest(&bytes));
    let s = Shadow::from_json(utf8(&bytes)?).map_err(|e| CliError::Parse(e.to_string()))?;
    let v = validate_shadow(&s);
    if !v.is_empty() {
        return Err(CliError::Validation(format!("invalid shadow:\n{v}")));
    }
    let cap = a.cap.unwrap_or(s.max_boundary_color() + 16);
    let b = bracket(&s, cap)?;
    let ribbon = match ribbon_target(&s) {
        Some(t) if b.complete => Some(ribbon_report(&b, t)?),
        _ => None,
    };
    let audit = if a.verify { Some(audit_states(&s, &b.colorings)?) } else { None };
    let state_list = if a.states {
        let mut list = Vec::new();
        for (i, c) in b.colorings.iter().enumerate() {
            let value = state_value(&s, c)?;
            let rec = audit.as_ref().map(|au| au.records[i].1);
            list.push(StateLine {
                coloring: c.clone(),
                ord_i: value.ord_at_i(),
                value: value.render(),
                odd_chi: rec.map(|r| r.chi),
                red_boundary: rec.map(|r| r.red_boundary),
                bound: rec.map(|r| r.bound),
                holds: rec.map(|r| r.holds),
            });
        }
        Some(list)
    } else {
        None
    };
    let report = RunReport {
        input_sha256: digest,
        regions: s.regions.iter().map(|r| r.id.clone()).collect(),
        cap,
        states: b.states_evaluated,
        complete: b.complete,
        unanchored: b.unanchored.clone(),
        bracket: b.value.render(),
        ord_i: b.ord_i,
        ribbon,
        verification: audit.as_ref().map(|au| Verification {
            states: au.states,
            failures: au.failures,
            min_slack: au.min_slack,
        }),
        state_list,
    };
    let stdout = match a.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    };
    let code = if audit.is_some_and(|au| au.failures > 0) {
        6
    } else if a.strict && !b.complete {
        7
    } else {
        0
    };
    Ok(Output { stdout, code })
}

pub fn compile(input: &Path, out: Option<&Path>, report: Option<&Path>) -> Result<Output, CliError> {
    let bytes = read_input(input)?;
    let d = parse_diagram(utf8(&bytes)?)?;
    let c = compile_diagram(&d).map_err(|e| CliError::Validation(e.to_string()))?;
    let write = |p: &Path, text: String| {
        std::fs::write(p, text).map_err(|source| CliError::Io { path: p.display().to_string(), source })
    };
    if let Some(p) = report {
        write(p, json(&c.report))?;
    }
    let shadow = c.shadow.to_json() + "\n";
    match out {
        Some(p) => {
            write(p, shadow)?;
            Ok(Output::ok(String::new()))
        }
        None => Ok(Output::ok(shadow)),
    }
}

#[derive(Serialize)]
struct SkeinReport {
    input_sha256: String,
    crossings: usize,
    components: usize,
    bracket: String,
    ord_i: Order,
}

pub fn skein(input: &Path, format: Format) -> Result<Output, CliError> {
    let bytes = read_input(input)?;
    let d = parse_diagram(utf8(&bytes)?)?;
    let v = kauffman_bracket(&d).map_err(|e| CliError::Validation(e.to_string()))?;
    let value = QRat::from(v);
    let r = SkeinReport {
        input_sha256: format!("{:x}", Sha256::digest(&bytes)),
        crossings: d.n_crossings(),
        components: d.components(),
        bracket: value.render(),
        ord_i: value.ord_at_i(),
    };
    Ok(Output::ok(match format {
        Format::Json => json(&r),
        Format::Text => format!(
            "input sha256: {}\nbracket: {}\nord_i: {}\ncrossings: {}\ncomponents: {}\n",
            r.input_sha256, r.bracket, r.ord_i, r.crossings, r.components
        ),
    }))
}

pub fn examples(e: &ExampleCmd) -> Result<Output, CliError> {
    let shadow = match e {
        ExampleCmd::Fig14 { genus, color } => fig14_knot_shadow(*genus, *color)?,
        ExampleCmd::Surface { chi, colors } => surface_link_shadow(*chi, colors)?,
        ExampleCmd::Cone { colors } => {
            let kind = match colors.as_slice() {
                [a] => AtomicKind::Circle(*a),
                [a, b, c] => AtomicKind::Theta(ColorTriple::new(*a, *b, *c)),
                [a, b, c, d, e, f] => AtomicKind::Tet(TetFrame::new([*a, *b, *c, *d, *e, *f])),
                _ => return Err(CliError::Usage("a cone takes 1, 3 or 6 colors".into())),
            };
            atomic_cone(kind)?
        }
        ExampleCmd::Diagram { name } => {
            let corpus = diagramc::corpus::link_corpus();
            let Some((_, d, _)) = corpus.iter().find(|(n, _, _)| n == name) else {
                let names: Vec<&str> = corpus.iter().map(|(n, _, _)| *n).collect();
                return Err(CliError::Usage(format!("unknown diagram `{name}`; known: {}", names.join(", "))));
            };
            return Ok(Output::ok(d.to_json() + "\n"));
        }
        ExampleCmd::List => {
            let mut s = String::from("diagrams:\n");
            for (n, _, _) in diagramc::corpus::link_corpus() {
                s += &format!("  {n}\n");
            }
            s += "shadows (builder corpus):\n";
            for (n, _) in corpus() {
                s += &format!("  {n}\n");
            }
            return Ok(Output::ok(s));
        }
    };
    Ok(Output::ok(shadow.to_json() + "\n"))
}

#[derive(Serialize)]
struct ClosedFormReport {
    kind: &'static str,
    args: Vec<u32>,
    value: String,
    ord_i: Order,
    /// `|L| − r/2` for planar graphs.
    #[serde(skip_serializing_if = "Option::is_none")]
    bound: Option<HalfInt>,
}

pub fn closed_form(c: &ClosedFormCmd) -> Result<Output, CliError> {
    let inadmissible = |e: shadowbracket::graphvals::GraphError| CliError::Usage(e.to_string());
    let graph = |g: PlanarGraph| -> Result<(QRat, Option<HalfInt>), CliError> {
        let rec = lemma49_check(&g).map_err(inadmissible)?;
        Ok((g.eval().map_err(inadmissible)?, Some(rec.bound)))
    };
    let (kind, args, (value, bound), format) = match c {
        ClosedFormCmd::Circle { a, format } => ("circle", vec![*a], (circle_eval(*a), None), *format),
        ClosedFormCmd::Theta { colors, format } => {
            let t = ColorTriple::new(colors[0], colors[1], colors[2]);
            t.check().map_err(inadmissible)?;
            ("theta", colors.clone(), graph(PlanarGraph::Theta(t))?, *format)
        }
        ClosedFormCmd::Tet { colors, format } => {
            let fr = TetFrame::new([colors[0], colors[1], colors[2], colors[3], colors[4], colors[5]]);
            fr.check().map_err(inadmissible)?;
            ("tet", colors.clone(), graph(PlanarGraph::Tet(fr))?, *format)
        }
        ClosedFormCmd::Qint { n, format } => ("qint", vec![*n], (QRat::from(quantum_int(*n)), None), *format),
        ClosedFormCmd::Qfactorial { n, format } => {
            ("qfactorial", vec![*n], (QRat::from(quantum_factorial(*n)), None), *format)
        }
        ClosedFormCmd::Multinomial { tops, bottoms, format } => {
            let spec = MultinomialSpec::new(tops.clone(), bottoms.clone()).map_err(|e| CliError::Usage(e.to_string()))?;
            let mut args = tops.clone();
            args.extend(bottoms);
            ("multinomial", args, (quantum_multinomial(&spec), None), *format)
        }
    };
    let r = ClosedFormReport {
        kind,
        args,
        value: value.render(),
        ord_i: value.ord_at_i(),
        bound,
    };
    Ok(Output::ok(match format {
        Format::Json => json(&r),
        Format::Text => {
            let mut s = format!("value: {}\nord_i: {}\n", r.value, r.ord_i);
            if let Some(b) = r.bound {
                s += &format!("bound |L| - r/2: {b}\n");
            }
            s
        }
    }))
}
