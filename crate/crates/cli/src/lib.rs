//! Command-line front end: loads inputs, runs the assessment and writes
//! the report files.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::Parser;
use dqa_core::pipeline::{run as assess, Assessment, Inputs};
use dqa_core::{Config, ConfigError, InstantiateError, MeasureRecord};
use dqa_rdf::vocab::STANDARD_PREFIXES;
use dqa_rdf::{load_graph, write_turtle, Format, Graph};
use dqa_shacl::{shapes_to_graph, ValidationReport};
use thiserror::Error;

#[derive(Debug, Parser)]
#[command(name = "dqa", version, about = "SHACL-based data-quality assessment of an RDF graph")]
pub struct Args {
    /// Data graph (Turtle, or N-Triples for .nt files)
    #[arg(long)]
    pub data: PathBuf,
    /// Ontology file; repeatable
    #[arg(long)]
    pub ontology: Vec<PathBuf>,
    /// Vocabulary file; repeatable
    #[arg(long)]
    pub vocab: Vec<PathBuf>,
    /// VoID or DCAT dataset description
    #[arg(long)]
    pub metadata: Option<PathBuf>,
    /// JSON configuration document
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Dataset base IRI, overrides the configuration
    #[arg(long)]
    pub base_iri: Option<String>,
    /// Output directory
    #[arg(long, env = "DQA_OUT", default_value = "./dqa-out")]
    pub out: PathBuf,
    /// Comma-separated output formats
    #[arg(long, value_delimiter = ',', default_value = "csv,json,ttl,html")]
    pub format: Vec<OutputFormat>,
    /// Also write the instantiated shapes, one Turtle file per template
    #[arg(long)]
    pub emit_shapes: Option<PathBuf>,
    /// Log filter, e.g. warn, info, debug
    #[arg(long, default_value = "warn")]
    pub log_level: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
    Ttl,
    Html,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("{path}:{line}:{column}: {message}")]
    Parse {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("config: {0}")]
    Config(#[from] ConfigError),
    #[error("--base-iri: {0}")]
    BaseIri(String),
    #[error("instantiation: {0}")]
    Instantiate(#[from] InstantiateError),
    #[error("writing {path}: {source}")]
    Write { path: String, source: std::io::Error },
}

impl CliError {
    /// 1 for bad input, 2 for failures on our side.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Write { .. } => 2,
            _ => 1,
        }
    }
}

pub const CSV_HEADER: [&str; 10] = [
    "group",
    "dimension",
    "metric_id",
    "measure_kind",
    "shape_count",
    "violations",
    "denominator",
    "raw_violation_ratio",
    "conformance_score",
    "applicable",
];

pub fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let file = fs::File::open(path).map_err(|source| CliError::Read {
        path: path.display().to_string(),
        source,
    })?;
    load_graph(std::io::BufReader::new(file), Format::from_path(path), None).map_err(|e| CliError::Parse {
        path: path.display().to_string(),
        line: e.line,
        column: e.column,
        message: e.message,
    })
}

pub fn load_config(args: &Args) -> Result<Config, CliError> {
    let mut cfg = match &args.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    if let Some(b) = &args.base_iri {
        let iri = dqa_core::config::expand_iri(b, &cfg.prefixes).map_err(CliError::BaseIri)?;
        cfg.dataset_base_iri = Some(iri);
    }
    Ok(cfg)
}

pub fn load_inputs(args: &Args) -> Result<Inputs, CliError> {
    let data = read_graph(&args.data)?;
    let schemas = args
        .ontology
        .iter()
        .chain(&args.vocab)
        .map(|p| read_graph(p))
        .collect::<Result<Vec<_>, _>>()?;
    let metadata = args.metadata.as_deref().map(read_graph).transpose()?;
    Ok(Inputs { data, schemas, metadata })
}

fn opt_num<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// RFC 4180 CSV with LF line endings.
pub fn measures_csv(records: &[MeasureRecord]) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for r in records {
        w.write_record([
            r.group.clone(),
            r.dimension.clone(),
            r.metric_id.clone(),
            r.measure_kind.as_str().to_string(),
            r.shape_ids.len().to_string(),
            r.violations.to_string(),
            opt_num(r.denominator),
            opt_num(r.raw_violation_ratio),
            opt_num(r.conformance_score),
            r.applicable.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("UTF-8 fields")
}

fn esc(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            c => out.push(c),
        }
    }
    out
}

/// Static summary page: one table per dimension.
pub fn summary_html(records: &[MeasureRecord]) -> String {
    let mut by_dim: BTreeMap<(&str, &str), Vec<&MeasureRecord>> = BTreeMap::new();
    for r in records {
        by_dim.entry((&r.group, &r.dimension)).or_default().push(r);
    }
    let mut h = String::from(
        "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n<title>Data quality summary</title>\n<style>\n\
         body{font-family:sans-serif;margin:2em}table{border-collapse:collapse;margin-bottom:1.5em}\n\
         th,td{border:1px solid #999;padding:.25em .6em;text-align:left}td.n{text-align:right}\n\
         .fail{background:#fdd}.pass{background:#dfd}\n</style>\n</head>\n<body>\n<h1>Data quality summary</h1>\n",
    );
    if records.is_empty() {
        h.push_str("<p>No measures were computed.</p>\n");
    }
    for ((group, dim), rs) in by_dim {
        let _ = writeln!(h, "<h2>{} / {}</h2>", esc(group), esc(dim));
        h.push_str("<table>\n<tr>");
        for c in &CSV_HEADER[2..] {
            let _ = write!(h, "<th>{c}</th>");
        }
        h.push_str("</tr>\n");
        for r in rs {
            let class = match r.conformance_score {
                Some(s) if s >= 1.0 => "pass",
                Some(_) => "fail",
                None => "",
            };
            let _ = writeln!(
                h,
                "<tr class=\"{class}\"><td>{}</td><td>{}</td><td class=\"n\">{}</td><td class=\"n\">{}</td><td class=\"n\">{}</td><td class=\"n\">{}</td><td class=\"n\">{}</td><td>{}</td></tr>",
                esc(&r.metric_id),
                r.measure_kind.as_str(),
                r.shape_ids.len(),
                r.violations,
                opt_num(r.denominator),
                opt_num(r.raw_violation_ratio),
                opt_num(r.conformance_score),
                r.applicable
            );
        }
        h.push_str("</table>\n");
    }
    h.push_str("</body>\n</html>\n");
    h
}

fn write_file(dir: &Path, name: &str, body: &str) -> Result<PathBuf, CliError> {
    let path = dir.join(name);
    fs::write(&path, body).map_err(|source| CliError::Write {
        path: path.display().to_string(),
        source,
    })?;
    Ok(path)
}

/// Writes the requested report files and returns their paths.
pub fn write_outputs(
    records: &[MeasureRecord],
    report: &ValidationReport,
    out: &Path,
    formats: &[OutputFormat],
) -> Result<Vec<PathBuf>, CliError> {
    fs::create_dir_all(out).map_err(|source| CliError::Write {
        path: out.display().to_string(),
        source,
    })?;
    let mut formats = formats.to_vec();
    formats.sort();
    formats.dedup();
    let mut written = Vec::new();
    for f in formats {
        written.push(match f {
            OutputFormat::Csv => write_file(out, "measures.csv", &measures_csv(records))?,
            OutputFormat::Json => write_file(out, "validation-report.json", &report.to_json_string())?,
            OutputFormat::Ttl => write_file(out, "validation-report.ttl", &report.to_turtle())?,
            OutputFormat::Html => write_file(out, "summary.html", &summary_html(records))?,
        });
    }
    Ok(written)
}

/// One Turtle file per template holding its instantiated shapes.
pub fn emit_shapes(a: &Assessment, dir: &Path) -> Result<(), CliError> {
    fs::create_dir_all(dir).map_err(|source| CliError::Write {
        path: dir.display().to_string(),
        source,
    })?;
    let mut by_template: BTreeMap<&str, Vec<dqa_shacl::Shape>> = BTreeMap::new();
    for s in &a.plan.shapes {
        by_template.entry(s.template_id).or_default().push(s.shape.clone());
    }
    for (tid, shapes) in by_template {
        let mut g = shapes_to_graph(&shapes);
        for (p, ns) in STANDARD_PREFIXES {
            g.set_prefix(p, ns);
        }
        g.set_prefix("dqa", "urn:dqa:shape:");
        write_file(dir, &format!("{tid}.ttl"), &write_turtle(&g))?;
    }
    Ok(())
}

/// The run log: input sizes, enrichment counts and skipped templates.
pub fn run_log(a: &Assessment) -> String {
    let mut s = String::new();
    let p = &a.profile;
    let _ = writeln!(s, "triples {}", p.triple_count);
    let _ = writeln!(s, "entities {}", p.entity_count);
    let e = &a.enrichment;
    let _ = writeln!(
        s,
        "enrichment class={} property={} named-individual={} schema-triples={}",
        e.added_class_typings, e.added_property_typings, e.added_named_individual_typings, e.merged_schema_triples
    );
    let _ = writeln!(s, "shapes {}", a.plan.shapes.len());
    let _ = writeln!(s, "results {}", a.report.results.len());
    for err in &a.report.errors {
        let _ = writeln!(s, "engine {err}");
    }
    s.push_str(&a.plan.run_log());
    s
}

/// Runs the whole command. Returns the assessment for callers that want it.
pub fn execute(args: &Args) -> Result<Assessment, CliError> {
    let cfg = load_config(args)?;
    let inputs = load_inputs(args)?;
    let a = assess(&inputs, &cfg)?;
    write_outputs(&a.measures, &a.report, &args.out, &args.format)?;
    write_file(&args.out, "run.log", &run_log(&a))?;
    if let Some(dir) = &args.emit_shapes {
        emit_shapes(&a, dir)?;
    }
    Ok(a)
}
