//! Text and JSON formats.
//!
//! * DIMACS CNF: `p cnf <vars> <clauses>`, clauses as 0-terminated integer
//!   lists, `c` comment lines. Clauses are read with not-all-equal semantics.
//! * Arc list: a vertex-count line, then one `u v` arc per line (0-based).
//! * Bipartite: an `nS nT` line, then one `s t` edge per line (0-based).
//! * JSON documents carry a `schema` field: `mpack/instance/v1`,
//!   `mpack/certificate/v1`, `mpack/reduction/v1`, `mpack/gadget/v1`.
//!
//! `#` starts a comment in the arc-list and bipartite formats.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::certificate::{Certificate, Instance, Problem};
use crate::cnf::{CnfFormula, Literal, NormalizationNote};
use crate::constructions::{MatroidDescriptor, PartitionOfGroundSet};
use crate::error::{Error, Result};
use crate::gadget::{GadgetBlockLabeling, GadgetPair, TemplateEdge};
use crate::graph::{BipartiteGraph, Digraph, MultiGraph};
use crate::matroid::Matroid;
use crate::reductions::{CommonBasesInstance, ModularInstance, ModularTreesInstance, ParityInstance, Provenance};
use crate::set::{ElementSet, GroundSet};

pub const INSTANCE_SCHEMA: &str = "mpack/instance/v1";
pub const CERTIFICATE_SCHEMA: &str = "mpack/certificate/v1";
pub const REDUCTION_SCHEMA: &str = "mpack/reduction/v1";
pub const GADGET_SCHEMA: &str = "mpack/gadget/v1";

/// Lines with their 1-based numbers, comments and blanks removed.
fn content_lines<'a>(text: &'a str, comment: impl Fn(&str) -> bool + 'a) -> impl Iterator<Item = (usize, &'a str)> + 'a {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(move |(_, l)| !l.is_empty() && !comment(l))
}

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected {what}, found {tok:?}")))
}

/// Parse DIMACS CNF. Returns the normalized formula and one warning per
/// dropped tautological clause or merged literal.
pub fn parse_dimacs(text: &str) -> Result<(CnfFormula, Vec<String>)> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut clauses: Vec<(usize, Vec<Literal>)> = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut current_line = 0;
    for (line, l) in content_lines(text, |l| l.starts_with('c') || l.starts_with('%')) {
        if l.starts_with('p') {
            let toks: Vec<&str> = l.split_whitespace().collect();
            if header.is_some() {
                return Err(Error::parse(line, "second problem line"));
            }
            if toks.len() != 4 || toks[1] != "cnf" {
                return Err(Error::parse(line, "problem line must be `p cnf <vars> <clauses>`"));
            }
            header = Some((
                parse_usize(toks[2], line, "variable count")?,
                parse_usize(toks[3], line, "clause count")?,
                line,
            ));
            continue;
        }
        let Some((vars, _, _)) = header else {
            return Err(Error::parse(line, "clause before the `p cnf` line"));
        };
        for tok in l.split_whitespace() {
            let lit: i64 = tok
                .parse()
                .map_err(|_| Error::parse(line, format!("expected an integer literal, found {tok:?}")))?;
            if lit == 0 {
                clauses.push((current_line.max(1), std::mem::take(&mut current)));
                current_line = 0;
                continue;
            }
            if lit.unsigned_abs() as usize > vars {
                return Err(Error::parse(line, format!("literal {lit} exceeds the {vars} declared variables")));
            }
            if current.is_empty() {
                current_line = line;
            }
            current.push(Literal::from_dimacs(lit).expect("nonzero"));
        }
    }
    let Some((vars, declared, header_line)) = header else {
        return Err(Error::parse(1, "missing `p cnf` line"));
    };
    if !current.is_empty() {
        return Err(Error::parse(current_line, "last clause is not terminated by 0"));
    }
    if clauses.len() != declared {
        return Err(Error::parse(
            header_line,
            format!("header declares {declared} clauses, found {}", clauses.len()),
        ));
    }
    for (line, clause) in &clauses {
        CnfFormula::normalize(vars, vec![clause.clone()]).map_err(|e| Error::parse(*line, e.to_string()))?;
    }
    let lines: Vec<usize> = clauses.iter().map(|(l, _)| *l).collect();
    let (formula, notes) = CnfFormula::normalize(vars, clauses.into_iter().map(|(_, c)| c).collect())?;
    let warnings = notes
        .into_iter()
        .map(|n| match n {
            NormalizationNote::DroppedTautology(c) => {
                format!("line {}: clause contains a variable and its negation; dropped", lines[c])
            }
            NormalizationNote::MergedDuplicateLiteral { clause, literal } => {
                format!("line {}: literal {literal} repeated; merged", lines[clause])
            }
        })
        .collect();
    Ok((formula, warnings))
}

pub fn write_dimacs(f: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", f.num_vars(), f.clauses().len());
    for c in f.dimacs_clauses() {
        for l in c {
            write!(out, "{l} ").expect("string write");
        }
        out.push_str("0\n");
    }
    out
}

fn header_and_pairs(text: &str, header_len: usize, what: &str) -> Result<(Vec<usize>, Vec<(usize, usize)>)> {
    let mut lines = content_lines(text, |l| l.starts_with('#'));
    let Some((hl, header)) = lines.next() else {
        return Err(Error::parse(1, format!("empty {what} file")));
    };
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != header_len {
        return Err(Error::parse(hl, format!("{what} header must have {header_len} number(s)")));
    }
    let head = toks
        .iter()
        .map(|t| parse_usize(t, hl, "a count"))
        .collect::<Result<Vec<_>>>()?;
    let mut pairs = Vec::new();
    for (line, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::parse(line, "expected two vertex indices"));
        }
        pairs.push((parse_usize(toks[0], line, "a vertex")?, parse_usize(toks[1], line, "a vertex")?));
    }
    Ok((head, pairs))
}

fn with_line<T>(text: &str, skip_header: bool, r: Result<T>, index_of_bad: impl Fn(&Error) -> Option<usize>) -> Result<T> {
    r.map_err(|e| {
        let bad = index_of_bad(&e);
        let line = bad.and_then(|k| {
            content_lines(text, |l| l.starts_with('#'))
                .nth(k + usize::from(skip_header))
                .map(|(n, _)| n)
        });
        match line {
            Some(n) => Error::parse(n, e.to_string()),
            None => e,
        }
    })
}

pub fn parse_arc_list(text: &str) -> Result<Digraph> {
    let (head, arcs) = header_and_pairs(text, 1, "arc list")?;
    let n = head[0];
    for (k, &(u, v)) in arcs.iter().enumerate() {
        if u >= n || v >= n || u == v || arcs[..k].contains(&(u, v)) {
            return with_line(text, true, Digraph::new(n, vec![(u, v)]).and_then(|_| {
                Err(Error::precondition(format!("repeated arc ({u},{v})")))
            }), |_| Some(k));
        }
    }
    Digraph::new(n, arcs)
}

pub fn write_arc_list(d: &Digraph) -> String {
    let mut out = format!("{}\n", d.vertex_count());
    for &(u, v) in d.arcs() {
        writeln!(out, "{u} {v}").expect("string write");
    }
    out
}

pub fn parse_bipartite(text: &str) -> Result<BipartiteGraph> {
    let (head, edges) = header_and_pairs(text, 2, "bipartite graph")?;
    let (ns, nt) = (head[0], head[1]);
    for (k, &(s, t)) in edges.iter().enumerate() {
        if s >= ns || t >= nt || edges[..k].contains(&(s, t)) {
            return with_line(text, true, BipartiteGraph::new(ns, nt, vec![(s, t)]).and_then(|_| {
                Err(Error::precondition(format!("duplicate edge ({s},{t})")))
            }), |_| Some(k));
        }
    }
    BipartiteGraph::new(ns, nt, edges)
}

pub fn write_bipartite(g: &BipartiteGraph) -> String {
    let mut out = format!("{} {}\n", g.left_size(), g.right_size());
    for &(s, t) in g.edges() {
        writeln!(out, "{s} {t}").expect("string write");
    }
    out
}

/// A matroid descriptor plus the ground labels, which leaves such as free or
/// uniform matroids do not carry.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatroidDoc {
    pub descriptor: MatroidDescriptor,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl MatroidDoc {
    pub fn of(m: &Matroid) -> Result<Self> {
        Ok(MatroidDoc {
            descriptor: m.descriptor()?,
            labels: m.ground().labels().map(<[String]>::to_vec),
        })
    }

    pub fn build(&self) -> Result<Matroid> {
        let m = self.descriptor.build()?;
        match &self.labels {
            Some(l) => m.relabeled(GroundSet::labeled(l.clone())?),
            None => Ok(m),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "problem", rename_all = "kebab-case")]
pub enum InstanceBody {
    CommonBases {
        m1: MatroidDoc,
        m2: MatroidDoc,
        k: usize,
    },
    ModularBases {
        matroid: MatroidDoc,
        modules: Vec<Vec<usize>>,
    },
    ParityBases {
        matroid: MatroidDoc,
        pairs: Vec<Vec<usize>>,
    },
    ModularTrees {
        graph: MultiGraph,
        modules: Vec<Vec<usize>>,
    },
    Naesat {
        num_vars: usize,
        clauses: Vec<Vec<i64>>,
    },
    PerfectEvenFactor {
        digraph: Digraph,
    },
    #[serde(rename = "c4k2-2factor")]
    C4k2TwoFactor {
        graph: BipartiteGraph,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InstanceDocument {
    pub schema: String,
    #[serde(flatten)]
    pub body: InstanceBody,
}

fn check_schema(found: &str, expected: &str) -> Result<()> {
    if found != expected {
        return Err(Error::Format(format!("schema {found:?}, expected {expected:?}")));
    }
    Ok(())
}

impl InstanceDocument {
    pub fn of(inst: &Instance) -> Result<Self> {
        let body = match inst {
            Instance::CommonBases(i) => InstanceBody::CommonBases {
                m1: MatroidDoc::of(i.m1())?,
                m2: MatroidDoc::of(i.m2())?,
                k: i.k(),
            },
            Instance::ModularBases(i) => InstanceBody::ModularBases {
                matroid: MatroidDoc::of(i.matroid())?,
                modules: i.modules().block_lists(),
            },
            Instance::ParityBases(i) => InstanceBody::ParityBases {
                matroid: MatroidDoc::of(i.matroid())?,
                pairs: i.pairs().block_lists(),
            },
            Instance::ModularTrees(i) => InstanceBody::ModularTrees {
                graph: i.graph().clone(),
                modules: i.modules().block_lists(),
            },
            Instance::Naesat(f) => InstanceBody::Naesat {
                num_vars: f.num_vars(),
                clauses: f.dimacs_clauses(),
            },
            Instance::PerfectEvenFactor(d) => InstanceBody::PerfectEvenFactor { digraph: d.clone() },
            Instance::C4k2TwoFactor(g) => InstanceBody::C4k2TwoFactor { graph: g.clone() },
        };
        Ok(InstanceDocument {
            schema: INSTANCE_SCHEMA.into(),
            body,
        })
    }

    pub fn build(&self) -> Result<Instance> {
        check_schema(&self.schema, INSTANCE_SCHEMA)?;
        Ok(match &self.body {
            InstanceBody::CommonBases { m1, m2, k } => {
                Instance::CommonBases(CommonBasesInstance::new(m1.build()?, m2.build()?, *k)?)
            }
            InstanceBody::ModularBases { matroid, modules } => {
                let m = matroid.build()?;
                let p = PartitionOfGroundSet::new(m.size(), modules.clone())?;
                Instance::ModularBases(ModularInstance::new(m, p)?)
            }
            InstanceBody::ParityBases { matroid, pairs } => {
                let m = matroid.build()?;
                let p = PartitionOfGroundSet::new(m.size(), pairs.clone())?;
                Instance::ParityBases(ParityInstance::new(m, p)?)
            }
            InstanceBody::ModularTrees { graph, modules } => {
                let p = PartitionOfGroundSet::new(graph.edge_count(), modules.clone())?;
                Instance::ModularTrees(ModularTreesInstance::new(graph.clone(), p)?)
            }
            InstanceBody::Naesat { num_vars, clauses } => {
                Instance::Naesat(CnfFormula::from_dimacs(*num_vars, clauses)?)
            }
            InstanceBody::PerfectEvenFactor { digraph } => Instance::PerfectEvenFactor(digraph.clone()),
            InstanceBody::C4k2TwoFactor { graph } => Instance::C4k2TwoFactor(graph.clone()),
        })
    }
}

pub fn write_instance_json(inst: &Instance) -> Result<String> {
    Ok(serde_json::to_string_pretty(&InstanceDocument::of(inst)?)?)
}

/// Output of a reduction: the source and output instances with the role of
/// every output element.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReductionDocument {
    pub schema: String,
    pub rule: String,
    pub source: InstanceDocument,
    pub instance: InstanceDocument,
    pub provenance: Vec<String>,
}

impl ReductionDocument {
    pub fn new(rule: &str, source: &Instance, output: &Instance, provenance: &Provenance) -> Result<Self> {
        Ok(ReductionDocument {
            schema: REDUCTION_SCHEMA.into(),
            rule: rule.into(),
            source: InstanceDocument::of(source)?,
            instance: InstanceDocument::of(output)?,
            provenance: provenance.roles.clone(),
        })
    }
}

/// Read an instance from JSON: an instance document, or a reduction document
/// (its output instance).
pub fn read_instance_json(text: &str) -> Result<Instance> {
    let value: Value = serde_json::from_str(text)?;
    let schema = value.get("schema").and_then(Value::as_str).unwrap_or_default().to_string();
    match schema.as_str() {
        INSTANCE_SCHEMA => serde_json::from_value::<InstanceDocument>(value)?.build(),
        REDUCTION_SCHEMA => serde_json::from_value::<ReductionDocument>(value)?.instance.build(),
        "" => Err(Error::Format("JSON document has no \"schema\" field".into())),
        other => Err(Error::Format(format!(
            "schema {other:?} is not an instance ({INSTANCE_SCHEMA}) or reduction ({REDUCTION_SCHEMA})"
        ))),
    }
}

/// Input formats accepted for instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Json,
    Dimacs,
    ArcList,
    Bipartite,
}

impl InputFormat {
    pub fn from_name(name: &str) -> Result<Self> {
        Ok(match name {
            "json" => InputFormat::Json,
            "dimacs" | "cnf" => InputFormat::Dimacs,
            "arcs" => InputFormat::ArcList,
            "bipartite" | "bip" => InputFormat::Bipartite,
            _ => return Err(Error::Format(format!("unknown input format {name:?}"))),
        })
    }

    /// Guess from the content: JSON object, `p cnf` header, or the number of
    /// fields on the first line (one for arc lists, two for bipartite graphs).
    pub fn sniff(text: &str) -> Result<Self> {
        let first = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with('c'))
            .ok_or_else(|| Error::Format("empty input".into()))?;
        if first.starts_with('{') {
            return Ok(InputFormat::Json);
        }
        if first.starts_with("p ") || text.lines().any(|l| l.trim_start().starts_with("p cnf")) {
            return Ok(InputFormat::Dimacs);
        }
        match first.split_whitespace().count() {
            1 => Ok(InputFormat::ArcList),
            2 => Ok(InputFormat::Bipartite),
            _ => Err(Error::Format(format!("cannot tell the format of a file starting {first:?}"))),
        }
    }
}

/// Parse any instance; warnings from DIMACS normalization are returned.
pub fn read_instance(text: &str, format: Option<InputFormat>) -> Result<(Instance, Vec<String>)> {
    let format = match format {
        Some(f) => f,
        None => InputFormat::sniff(text)?,
    };
    Ok(match format {
        InputFormat::Json => (read_instance_json(text)?, Vec::new()),
        InputFormat::Dimacs => {
            let (f, w) = parse_dimacs(text)?;
            (Instance::Naesat(f), w)
        }
        InputFormat::ArcList => (Instance::PerfectEvenFactor(parse_arc_list(text)?), Vec::new()),
        InputFormat::Bipartite => (Instance::C4k2TwoFactor(parse_bipartite(text)?), Vec::new()),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CertificateBody {
    Partition { classes: Vec<Vec<usize>> },
    Assignment { values: Vec<bool> },
    ArcSet { arcs: Vec<usize> },
    EdgeSet { edges: Vec<usize> },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub schema: String,
    pub problem: Problem,
    pub answer: Answer,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateBody>,
    /// Human-readable rendering; ignored on input.
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub readable: Value,
}

fn element_count(inst: &Instance) -> usize {
    match inst {
        Instance::CommonBases(i) => i.size(),
        Instance::ModularBases(i) => i.matroid().size(),
        Instance::ParityBases(i) => i.matroid().size(),
        Instance::ModularTrees(i) => i.graph().edge_count(),
        Instance::Naesat(f) => f.num_vars(),
        Instance::PerfectEvenFactor(d) => d.arcs().len(),
        Instance::C4k2TwoFactor(g) => g.edges().len(),
    }
}

fn element_labels(inst: &Instance) -> Vec<String> {
    let ground = |m: &Matroid| (0..m.size()).map(|e| m.ground().label(e)).collect();
    match inst {
        Instance::CommonBases(i) => ground(i.m1()),
        Instance::ModularBases(i) => ground(i.matroid()),
        Instance::ParityBases(i) => ground(i.matroid()),
        Instance::ModularTrees(i) => i.graph().edges().iter().map(|e| e.label.clone()).collect(),
        Instance::Naesat(f) => (1..=f.num_vars()).map(|j| format!("x{j}")).collect(),
        Instance::PerfectEvenFactor(d) => d.arcs().iter().map(|(u, v)| format!("{u}->{v}")).collect(),
        Instance::C4k2TwoFactor(g) => g
            .edges()
            .iter()
            .map(|&(s, t)| format!("{}-{}", g.left().label(s), g.right().label(t)))
            .collect(),
    }
}

impl CertificateDocument {
    pub fn new(inst: &Instance, cert: Option<&Certificate>) -> Self {
        let labels = element_labels(inst);
        let name = |i: &usize| labels[*i].clone();
        let (certificate, readable) = match cert {
            None => (None, Value::Null),
            Some(Certificate::Partition(classes)) => (
                Some(CertificateBody::Partition {
                    classes: classes.iter().map(ElementSet::to_vec).collect(),
                }),
                Value::from(
                    classes
                        .iter()
                        .map(|c| c.iter().map(|e| name(&e)).collect::<Vec<_>>())
                        .collect::<Vec<_>>(),
                ),
            ),
            Some(Certificate::Assignment(values)) => (
                Some(CertificateBody::Assignment { values: values.clone() }),
                Value::from(
                    values
                        .iter()
                        .enumerate()
                        .map(|(j, &v)| format!("x{}={}", j + 1, u8::from(v)))
                        .collect::<Vec<_>>(),
                ),
            ),
            Some(Certificate::ArcSet(arcs)) => (
                Some(CertificateBody::ArcSet { arcs: arcs.clone() }),
                Value::from(arcs.iter().map(name).collect::<Vec<_>>()),
            ),
            Some(Certificate::EdgeSet(edges)) => (
                Some(CertificateBody::EdgeSet { edges: edges.clone() }),
                Value::from(edges.iter().map(name).collect::<Vec<_>>()),
            ),
        };
        CertificateDocument {
            schema: CERTIFICATE_SCHEMA.into(),
            problem: inst.problem(),
            answer: if cert.is_some() { Answer::Yes } else { Answer::No },
            certificate,
            readable,
        }
    }

    /// The certificate over `inst`'s ground set; `None` for a NO answer.
    pub fn certificate_for(&self, inst: &Instance) -> Result<Option<Certificate>> {
        check_schema(&self.schema, CERTIFICATE_SCHEMA)?;
        if self.problem != inst.problem() {
            return Err(Error::Format(format!(
                "certificate is for {}, instance is {}",
                self.problem,
                inst.problem()
            )));
        }
        let n = element_count(inst);
        let body = match (&self.answer, &self.certificate) {
            (Answer::No, _) => return Ok(None),
            (Answer::Yes, None) => return Err(Error::Format("answer is yes but no certificate is given".into())),
            (Answer::Yes, Some(b)) => b,
        };
        Ok(Some(match body {
            CertificateBody::Partition { classes } => Certificate::Partition(
                classes
                    .iter()
                    .map(|c| ElementSet::try_from_indices(n, c.iter().copied()))
                    .collect::<Result<_>>()?,
            ),
            CertificateBody::Assignment { values } => Certificate::Assignment(values.clone()),
            CertificateBody::ArcSet { arcs } => Certificate::ArcSet(arcs.clone()),
            CertificateBody::EdgeSet { edges } => Certificate::EdgeSet(edges.clone()),
        }))
    }
}

pub fn read_certificate_json(text: &str) -> Result<CertificateDocument> {
    let doc: CertificateDocument = serde_json::from_str(text)?;
    check_schema(&doc.schema, CERTIFICATE_SCHEMA)?;
    Ok(doc)
}

/// A gadget labeling with its block templates, as documentation.
#[derive(Debug, Clone, Serialize)]
pub struct GadgetDocument {
    pub schema: String,
    pub labeling: GadgetBlockLabeling,
    pub prime_template: Vec<TemplateEdge>,
    pub double_template: Vec<TemplateEdge>,
    pub prime_chaining: String,
    pub double_chaining: String,
}

impl GadgetDocument {
    pub fn new(labeling: &GadgetBlockLabeling) -> Self {
        GadgetDocument {
            schema: GADGET_SCHEMA.into(),
            labeling: labeling.clone(),
            prime_template: labeling.prime_template(),
            double_template: labeling.double_template(),
            prime_chaining: "i_j parallel to h_j".into(),
            double_chaining: "i_j parallel to f_{j+1}, block indices cyclic (f_{l+1} = f_1)".into(),
        }
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected multigraph; edges of the first class are drawn bold, edges of
/// the second dashed.
pub fn multigraph_dot(g: &MultiGraph, name: &str, classes: Option<&[ElementSet]>) -> String {
    let mut out = format!("graph {} {{\n", quote(name));
    for v in 0..g.vertex_count() {
        writeln!(out, "  {v};").expect("string write");
    }
    for (i, e) in g.edges().iter().enumerate() {
        let style = match classes {
            Some(c) if c[0].contains(i) => ", style=bold",
            Some(c) if c.len() > 1 && c[1].contains(i) => ", style=dashed",
            _ => "",
        };
        writeln!(out, "  {} -- {} [label={}{style}];", e.u, e.v, quote(&e.label)).expect("string write");
    }
    out.push_str("}\n");
    out
}

pub fn bipartite_dot(g: &BipartiteGraph, name: &str, highlight: Option<&[usize]>) -> String {
    let mut out = format!("graph {} {{\n  rankdir=LR;\n", quote(name));
    for s in 0..g.left_size() {
        writeln!(out, "  s{s} [label={}, shape=box];", quote(&g.left().label(s))).expect("string write");
    }
    for t in 0..g.right_size() {
        writeln!(out, "  t{t} [label={}];", quote(&g.right().label(t))).expect("string write");
    }
    for (i, &(s, t)) in g.edges().iter().enumerate() {
        let style = if highlight.is_some_and(|h| h.contains(&i)) { " [style=bold]" } else { "" };
        writeln!(out, "  s{s} -- t{t}{style};").expect("string write");
    }
    out.push_str("}\n");
    out
}

pub fn digraph_dot(d: &Digraph, name: &str, highlight: Option<&[usize]>) -> String {
    let mut out = format!("digraph {} {{\n", quote(name));
    for v in 0..d.vertex_count() {
        writeln!(out, "  {v};").expect("string write");
    }
    for (i, &(u, v)) in d.arcs().iter().enumerate() {
        let style = if highlight.is_some_and(|h| h.contains(&i)) { " [style=bold]" } else { "" };
        writeln!(out, "  {u} -> {v}{style};").expect("string write");
    }
    out.push_str("}\n");
    out
}

/// Both gadget graphs as clusters of one DOT graph.
pub fn gadget_dot(pair: &GadgetPair) -> String {
    let mut out = format!("graph \"gadget_l{}\" {{\n", pair.ell);
    for (tag, title, g) in [("p", "G'", &pair.prime_graph), ("d", "G''", &pair.double_graph)] {
        writeln!(out, "  subgraph cluster_{tag} {{\n    label={};", quote(title)).expect("string write");
        for v in 0..g.vertex_count() {
            writeln!(out, "    {tag}{v} [label=\"{v}\"];").expect("string write");
        }
        for e in g.edges() {
            writeln!(out, "    {tag}{} -- {tag}{} [label={}];", e.u, e.v, quote(&e.label)).expect("string write");
        }
        out.push_str("  }\n");
    }
    out.push_str("}\n");
    out
}
