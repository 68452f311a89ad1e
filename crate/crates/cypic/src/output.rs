//! Deterministic report documents.
//!
//! Every command renders the same underlying report either as free-form text
//! (`human`) or as a structured key-value tree (`machine`). The machine
//! format is line-oriented: `key: value` leaves, nested keys indented by two
//! spaces, fields emitted in a fixed order so identical invocations produce
//! byte-identical output. [`parse_machine`] reads the format back, which the
//! test suite uses to cross-check the two renderings.

use std::fmt::Write as _;

use crate::algebra::{QuotientAlgebra, TraceForm};
use crate::picard::{DivisorClass, GenusRegime};
use crate::pipeline::{
    DegreeInvariant, PicardReport, PipelineError, SweepEntry, VerificationOutcome,
};
use crate::poly::ExactPoly;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Node {
    Leaf(String),
    Tree(Vec<(String, Node)>),
}

impl Node {
    pub fn leaf(value: impl ToString) -> Node {
        let value = value.to_string();
        debug_assert!(!value.contains('\n'), "leaf values must be single-line");
        Node::Leaf(value)
    }
}

/// One command's output: a schema version, an echo of the invocation, and an
/// ordered payload tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Doc {
    pub schema_version: String,
    pub command: String,
    pub payload: Vec<(String, Node)>,
}

impl Doc {
    pub fn new(command: impl ToString, payload: Vec<(String, Node)>) -> Doc {
        Doc {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            payload,
        }
    }

    /// Dotted-path lookup of a leaf value, e.g. `"invariant_factors"` or
    /// `"hypotheses.theorem_range"`.
    pub fn get(&self, path: &str) -> Option<&str> {
        let mut fields = &self.payload;
        let mut parts = path.split('.').peekable();
        while let Some(part) = parts.next() {
            let (_, node) = fields.iter().find(|(k, _)| k == part)?;
            match node {
                Node::Leaf(v) => {
                    return if parts.peek().is_none() { Some(v) } else { None };
                }
                Node::Tree(children) => fields = children,
            }
        }
        None
    }
}

fn render_fields(out: &mut String, fields: &[(String, Node)], depth: usize) {
    for (key, node) in fields {
        for _ in 0..depth {
            out.push_str("  ");
        }
        match node {
            Node::Leaf(v) if v.is_empty() => {
                let _ = writeln!(out, "{}:", key);
            }
            Node::Leaf(v) => {
                let _ = writeln!(out, "{}: {}", key, v);
            }
            Node::Tree(children) => {
                let _ = writeln!(out, "{}:", key);
                render_fields(out, children, depth + 1);
            }
        }
    }
}

pub fn render_machine(doc: &Doc) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "schema_version: {}", doc.schema_version);
    let _ = writeln!(out, "command: {}", doc.command);
    out.push_str("payload:\n");
    render_fields(&mut out, &doc.payload, 1);
    out
}

/// Parses the machine format back into a document.
pub fn parse_machine(text: &str) -> Result<Doc, String> {
    // (depth, key, inline value)
    let mut items: Vec<(usize, String, String)> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let indent = line.len() - line.trim_start_matches(' ').len();
        if indent % 2 != 0 {
            return Err(format!("line {}: odd indentation", lineno + 1));
        }
        let body = &line[indent..];
        let colon = body
            .find(':')
            .ok_or_else(|| format!("line {}: missing ':'", lineno + 1))?;
        let key = body[..colon].to_string();
        let value = body[colon + 1..].trim_start().to_string();
        items.push((indent / 2, key, value));
    }

    fn build(items: &[(usize, String, String)], pos: &mut usize, depth: usize) -> Vec<(String, Node)> {
        let mut fields = Vec::new();
        while *pos < items.len() {
            let (d, key, value) = &items[*pos];
            if *d < depth {
                break;
            }
            debug_assert_eq!(*d, depth, "parser alignment");
            *pos += 1;
            let has_children = items.get(*pos).map(|(cd, _, _)| *cd > depth).unwrap_or(false);
            if has_children {
                let children = build(items, pos, depth + 1);
                fields.push((key.clone(), Node::Tree(children)));
            } else {
                fields.push((key.clone(), Node::Leaf(value.clone())));
            }
        }
        fields
    }

    let mut pos = 0;
    let top = build(&items, &mut pos, 0);
    let mut schema_version = None;
    let mut command = None;
    let mut payload = None;
    for (key, node) in top {
        match (key.as_str(), node) {
            ("schema_version", Node::Leaf(v)) => schema_version = Some(v),
            ("command", Node::Leaf(v)) => command = Some(v),
            ("payload", Node::Tree(fields)) => payload = Some(fields),
            ("payload", Node::Leaf(_)) => payload = Some(Vec::new()),
            (k, _) => return Err(format!("unexpected top-level key `{}`", k)),
        }
    }
    Ok(Doc {
        schema_version: schema_version.ok_or("missing schema_version")?,
        command: command.ok_or("missing command")?,
        payload: payload.ok_or("missing payload")?,
    })
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn relation_fields(fields: &mut Vec<(String, Node)>, relations: &crate::fgab::IntMatrix) {
    fields.push(("relation_count".into(), Node::leaf(relations.rows())));
    for i in 0..relations.rows() {
        fields.push((
            format!("relation_{}", i),
            Node::leaf(join(relations.row(i).iter(), " ")),
        ));
    }
}

fn empty_reason(degree: &DegreeInvariant) -> String {
    match degree {
        DegreeInvariant::Degree(_) => unreachable!("non-empty moduli"),
        DegreeInvariant::NonIntegral {
            numerator,
            denominator,
        } => format!("d = {}/{} not integral", numerator, denominator),
        DegreeInvariant::Negative(v) => format!("d = {} negative", v),
    }
}

/// Payload for a full Picard-group report (or the unsupported `d = 0` case).
pub fn picard_payload(
    h: u64,
    g: u64,
    n: u64,
    result: &Result<PicardReport, PipelineError>,
) -> Vec<(String, Node)> {
    let mut fields = vec![
        ("kind".into(), Node::leaf("picard-report")),
        ("h".into(), Node::leaf(h)),
        ("g".into(), Node::leaf(g)),
        ("n".into(), Node::leaf(n)),
    ];
    let report = match result {
        Err(err) => {
            fields.push(("empty".into(), Node::leaf(false)));
            fields.push(("d".into(), Node::leaf(0)));
            fields.push(("unsupported".into(), Node::leaf(err)));
            return fields;
        }
        Ok(report) => report,
    };
    let Some(body) = &report.body else {
        fields.push(("empty".into(), Node::leaf(true)));
        fields.push(("reason".into(), Node::leaf(empty_reason(&report.degree))));
        return fields;
    };
    fields.push(("empty".into(), Node::leaf(false)));
    fields.push(("d".into(), Node::leaf(body.d)));
    fields.push(("regime".into(), Node::leaf(body.regime)));
    fields.push((
        "generators".into(),
        Node::leaf(body.regime.symbols().join(" ")),
    ));
    relation_fields(&mut fields, body.presentation.relations());
    fields.push((
        "invariant_factors".into(),
        Node::leaf(join(body.structure.invariant_factors().iter(), " ")),
    ));
    fields.push((
        "free_rank".into(),
        Node::leaf(body.structure.free_rank()),
    ));
    fields.push(("structure".into(), Node::leaf(&body.structure)));
    fields.push((
        "closed_form".into(),
        Node::leaf(match &body.closed_form {
            Some(cf) => cf.to_string(),
            None => "not-covered".to_string(),
        }),
    ));
    let verdict = match &body.closed_form {
        None => "not-covered",
        Some(cf) if *cf == body.structure => "match",
        Some(_) => "mismatch",
    };
    fields.push(("verdict".into(), Node::leaf(verdict)));
    fields.push(("extrapolated".into(), Node::leaf(body.extrapolated)));
    fields.push((
        "hypotheses".into(),
        Node::Tree(
            body.hypotheses
                .named()
                .iter()
                .map(|(name, value)| (name.to_string(), Node::leaf(value)))
                .collect(),
        ),
    ));
    fields
}

pub fn picard_human(
    h: u64,
    g: u64,
    n: u64,
    result: &Result<PicardReport, PipelineError>,
) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "Pic B_({},{},{})", h, g, n);
    let report = match result {
        Err(err) => {
            let _ = writeln!(out, "  unsupported: {}", err);
            return out;
        }
        Ok(report) => report,
    };
    let Some(body) = &report.body else {
        let _ = writeln!(out, "  empty moduli ({})", empty_reason(&report.degree));
        return out;
    };
    let _ = writeln!(out, "  branch degree d = {}", body.d);
    let _ = writeln!(out, "  regime: {}", body.regime);
    let _ = writeln!(out, "  generators:");
    for (sym, def) in body
        .regime
        .symbols()
        .iter()
        .zip(body.regime.symbol_definitions())
    {
        let _ = writeln!(out, "    {} = {}", sym, def);
    }
    let relations = body.presentation.relations();
    if relations.rows() == 0 {
        let _ = writeln!(out, "  relations: none");
    } else {
        let _ = writeln!(out, "  relations:");
        for i in 0..relations.rows() {
            let _ = writeln!(out, "    ({})", join(relations.row(i).iter(), ", "));
        }
    }
    let _ = writeln!(out, "  structure: {}", body.structure);
    let _ = writeln!(
        out,
        "    invariant factors [{}], free rank {}",
        join(body.structure.invariant_factors().iter(), ", "),
        body.structure.free_rank()
    );
    match &body.closed_form {
        Some(cf) => {
            let _ = writeln!(out, "  closed form: {}", cf);
            let verdict = if *cf == body.structure { "match" } else { "MISMATCH" };
            let _ = writeln!(out, "  verdict: {}", verdict);
        }
        None => {
            let _ = writeln!(out, "  closed form: not covered by the group tables");
            if body.hypotheses.nd_gt_2g_minus_2 {
                let _ = writeln!(
                    out,
                    "  verdict: not-covered (upper-bound presentation; the quotient map is \
                     surjective but not certified injective here)"
                );
            } else {
                let _ = writeln!(
                    out,
                    "  verdict: not-covered (nd ≤ 2g−2: the quotient description itself is \
                     not established; formal computation only)"
                );
            }
        }
    }
    let hyp = join(
        body.hypotheses
            .named()
            .iter()
            .map(|(name, value)| format!("{}={}", name, value)),
        " ",
    );
    let _ = writeln!(out, "  hypotheses: {}", hyp);
    out
}

/// Payload for the generators/relations of the universal Jacobian's Picard
/// group in one regime.
pub fn jacobian_payload(regime: GenusRegime) -> Vec<(String, Node)> {
    let basis = regime.generator_basis();
    let presentation =
        crate::fgab::Presentation::new(basis.symbols.len(), basis.jac_relations.clone());
    let structure = crate::fgab::presentation_to_group(&presentation);
    let mut fields = vec![
        ("kind".into(), Node::leaf("jacobian-picard")),
        ("g".into(), Node::leaf(regime.genus())),
        ("d".into(), Node::leaf(regime.degree())),
        ("regime".into(), Node::leaf(regime)),
        ("generators".into(), Node::leaf(basis.symbols.join(" "))),
        (
            "definitions".into(),
            Node::Tree(
                basis
                    .symbols
                    .iter()
                    .zip(regime.symbol_definitions())
                    .map(|(s, d)| (s.to_string(), Node::leaf(d)))
                    .collect(),
            ),
        ),
    ];
    relation_fields(&mut fields, &basis.jac_relations);
    fields.push(("structure".into(), Node::leaf(structure)));
    fields
}

pub fn jacobian_human(regime: GenusRegime) -> String {
    let basis = regime.generator_basis();
    let presentation =
        crate::fgab::Presentation::new(basis.symbols.len(), basis.jac_relations.clone());
    let structure = crate::fgab::presentation_to_group(&presentation);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "Pic Jac_({},{}) — {}",
        regime.degree(),
        regime.genus(),
        regime
    );
    let _ = writeln!(out, "  generators:");
    for (sym, def) in basis.symbols.iter().zip(regime.symbol_definitions()) {
        let _ = writeln!(out, "    {} = {}", sym, def);
    }
    if basis.jac_relations.rows() == 0 {
        let _ = writeln!(out, "  relations: none (free)");
    } else {
        let _ = writeln!(out, "  relations:");
        for i in 0..basis.jac_relations.rows() {
            let _ = writeln!(
                out,
                "    ({})",
                join(basis.jac_relations.row(i).iter(), ", ")
            );
        }
    }
    let _ = writeln!(out, "  structure: {}", structure);
    out
}

/// Payload for a single tautological class (pushforward or discriminant).
pub fn class_payload(
    kind: &str,
    regime: GenusRegime,
    params: &[(&str, i64)],
    class: &DivisorClass,
) -> Vec<(String, Node)> {
    let mut fields = vec![
        ("kind".into(), Node::leaf(kind)),
        ("g".into(), Node::leaf(regime.genus())),
        ("d".into(), Node::leaf(regime.degree())),
    ];
    for (name, value) in params {
        fields.push((name.to_string(), Node::leaf(value)));
    }
    fields.push((
        "generators".into(),
        Node::leaf(regime.symbols().join(" ")),
    ));
    fields.push((
        "exponents".into(),
        Node::leaf(join(class.exponents().iter(), " ")),
    ));
    fields.push(("class".into(), Node::leaf(class)));
    fields
}

pub fn class_human(
    title: &str,
    regime: GenusRegime,
    class: &DivisorClass,
) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", title);
    let _ = writeln!(out, "  regime: {}", regime);
    let _ = writeln!(
        out,
        "  exponents over ({}): ({})",
        regime.symbols().join(", "),
        join(class.exponents().iter(), ", ")
    );
    let _ = writeln!(out, "  class: {}", class);
    out
}

/// Payload for the trace form and discriminant of `R[x]/(x^n − h)`.
pub fn algebra_payload(
    n: usize,
    h: &ExactPoly,
    algebra: &QuotientAlgebra,
    trace: &TraceForm,
    disc: &ExactPoly,
) -> Vec<(String, Node)> {
    let mut rows = Vec::new();
    for i in 0..trace.rank() {
        rows.push((
            format!("row_{}", i),
            Node::leaf(join((0..trace.rank()).map(|j| trace.at(i, j)), ", ")),
        ));
    }
    vec![
        ("kind".into(), Node::leaf("cover-algebra")),
        ("n".into(), Node::leaf(n)),
        ("h".into(), Node::leaf(h)),
        (
            "basis".into(),
            Node::leaf(algebra.basis_names().join(" ")),
        ),
        ("trace_matrix".into(), Node::Tree(rows)),
        ("discriminant".into(), Node::leaf(disc)),
    ]
}

pub fn algebra_human(
    n: usize,
    h: &ExactPoly,
    algebra: &QuotientAlgebra,
    trace: &TraceForm,
    disc: &ExactPoly,
) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "R[x]/(x^{} - ({}))", n, h);
    let _ = writeln!(out, "  basis: {}", algebra.basis_names().join(", "));
    let _ = writeln!(out, "  trace form (entry (i,j) = tr of mult by e_i*e_j):");
    for i in 0..trace.rank() {
        let _ = writeln!(
            out,
            "    [{}]",
            join((0..trace.rank()).map(|j| trace.at(i, j)), ", ")
        );
    }
    let _ = writeln!(out, "  discriminant: {}", disc);
    out
}

/// Payload for a verification sweep over a `(g, n, d)` grid.
pub fn sweep_payload(
    g_range: &str,
    n_range: &str,
    d_range: &str,
    entries: &[SweepEntry],
) -> Vec<(String, Node)> {
    let matches = entries
        .iter()
        .filter(|e| matches!(e.outcome, VerificationOutcome::Match(_)))
        .count();
    let not_covered = entries
        .iter()
        .filter(|e| matches!(e.outcome, VerificationOutcome::NotCovered))
        .count();
    let mismatches: Vec<&SweepEntry> = entries
        .iter()
        .filter(|e| e.outcome.is_mismatch())
        .collect();
    let mut fields = vec![
        ("kind".into(), Node::leaf("sweep")),
        ("g".into(), Node::leaf(g_range)),
        ("n".into(), Node::leaf(n_range)),
        ("d".into(), Node::leaf(d_range)),
        ("tuples".into(), Node::leaf(entries.len())),
        ("matches".into(), Node::leaf(matches)),
        ("mismatches".into(), Node::leaf(mismatches.len())),
        ("not_covered".into(), Node::leaf(not_covered)),
    ];
    for (i, e) in mismatches.iter().enumerate() {
        if let VerificationOutcome::Mismatch {
            computed,
            closed_form,
        } = &e.outcome
        {
            fields.push((
                format!("mismatch_{}", i),
                Node::leaf(format!(
                    "g={} n={} d={} h={} computed={} closed_form={}",
                    e.g, e.n, e.d, e.h, computed, closed_form
                )),
            ));
        }
    }
    fields
}

pub fn sweep_human(
    g_range: &str,
    n_range: &str,
    d_range: &str,
    entries: &[SweepEntry],
) -> String {
    let matches = entries
        .iter()
        .filter(|e| matches!(e.outcome, VerificationOutcome::Match(_)))
        .count();
    let not_covered = entries
        .iter()
        .filter(|e| matches!(e.outcome, VerificationOutcome::NotCovered))
        .count();
    let mismatches: Vec<&SweepEntry> = entries
        .iter()
        .filter(|e| e.outcome.is_mismatch())
        .collect();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "sweep g={} n={} d={}: {} tuples",
        g_range,
        n_range,
        d_range,
        entries.len()
    );
    let _ = writeln!(out, "  match:       {}", matches);
    let _ = writeln!(out, "  mismatch:    {}", mismatches.len());
    let _ = writeln!(out, "  not covered: {}", not_covered);
    for e in &mismatches {
        if let VerificationOutcome::Mismatch {
            computed,
            closed_form,
        } = &e.outcome
        {
            let _ = writeln!(
                out,
                "  MISMATCH at g={} n={} d={} (h={}): computed {} but the table says {}",
                e.g, e.n, e.d, e.h, computed, closed_form
            );
        }
    }
    if mismatches.is_empty() && !entries.is_empty() {
        let _ = writeln!(out, "  every covered tuple matches its table entry");
    }
    out
}
