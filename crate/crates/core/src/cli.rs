//! Command-line front end. [`run`] does all the work so tests can drive it
//! without spawning a process.
//!
//! Exit codes: 0 success or certified, 1 refuted / inconclusive / property
//! fails, 2 bad input.

use std::fs;
use std::io::{Read, Write};
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{
    glue, glue_partitioned, leafy_star, replace_w4, GlueSpec, Graph, GraphDoc,
};
use crate::independence::{coloured_indep_poly, indep_poly};
use crate::lorentz::certify::{hessian_count, DEFAULT_MAX_HESSIANS};
use crate::lorentz::{is_lorentzian_with, is_pre_lorentzian, Certificate, CertifyOptions, Verdict};
use crate::poly::{parse_coeff, Coeff, MultiPoly, PolyDoc};
use crate::sequences;

/// Largest `--max-vertices` accepted by `theorem14` (2^15 graphs at 6).
pub const THEOREM14_MAX_VERTICES: usize = 6;

#[derive(Parser, Debug)]
#[command(name = "prelorentz", version, about = "Coloured independence polynomials and Lorentzian certificates")]
pub struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Independence sequence and polynomial of a graph
    Indep {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Coloured independence polynomial
    Cindep {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Glue two coloured graphs along one colour of each
    Glue {
        g1: String,
        g2: String,
        /// colour of g1 and colour of g2, comma separated
        #[arg(long, value_parser = parse_pair)]
        at: (String, String),
        /// glue partitioned graphs across free colours
        #[arg(long)]
        partitioned: bool,
    },
    /// Replace every edge by a four-vertex caterpillar
    ReplaceW4 {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Leafy star as a partitioned graph
    LeafyStar { n: usize },
    #[command(subcommand)]
    Certify(CertifyCommand),
    /// Log-concavity and related checks on a sequence or a graph's sequence
    Seqcheck {
        /// `1,4,3`, a JSON array, or a graph/sequence JSON file (`-` for stdin)
        input: String,
        /// also check ultra log-concavity with this ambient degree
        #[arg(long)]
        ultra: Option<usize>,
    },
    /// Log-concavity of replace-w4 over every labelled graph up to a size
    Theorem14 {
        #[arg(long, default_value_t = 4)]
        max_vertices: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum CertifyCommand {
    /// Lorentzian check of a homogeneous polynomial
    Lorentzian {
        #[arg(default_value = "-")]
        input: String,
        #[command(flatten)]
        opts: CertifyArgs,
    },
    /// Smallest k making (xy)^k times the homogenised polynomial Lorentzian
    PreLorentzian {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, default_value_t = 12)]
        kmax: u32,
        #[command(flatten)]
        opts: CertifyArgs,
    },
}

#[derive(Args, Debug)]
pub struct CertifyArgs {
    #[arg(long, default_value_t = DEFAULT_MAX_HESSIANS)]
    max_hessians: u64,
    /// report every failing Hessian instead of stopping at the first
    #[arg(long)]
    exhaustive: bool,
    /// worker threads for the Hessian scan
    #[arg(long, env = "PRELORENTZ_THREADS")]
    threads: Option<usize>,
}

fn parse_pair(s: &str) -> std::result::Result<(String, String), String> {
    match s.split_once(',') {
        Some((a, b)) if !a.is_empty() && !b.is_empty() && !b.contains(',') => {
            Ok((a.to_string(), b.to_string()))
        }
        _ => Err(format!("expected `c1,c2`, got `{s}`")),
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    format: Format,
}

impl Io<'_> {
    fn read(&mut self, input: &str) -> Result<String> {
        if input == "-" {
            let mut s = String::new();
            self.stdin.read_to_string(&mut s)?;
            Ok(s)
        } else {
            Ok(fs::read_to_string(input)?)
        }
    }

    fn read_graph(&mut self, input: &str) -> Result<GraphDoc> {
        Ok(serde_json::from_str(&self.read(input)?)?)
    }

    fn emit<T: Serialize>(&mut self, v: &T, text: impl FnOnce() -> String) -> Result<()> {
        match self.format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *self.out, v)?;
                writeln!(self.out)?;
            }
            Format::Text => writeln!(self.out, "{}", text())?,
        }
        Ok(())
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let mut io = Io {
        stdin,
        out,
        err,
        format: cli.format,
    };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.err, "error: {e}");
            2
        }
    }
}

fn dispatch(cmd: Command, io: &mut Io<'_>) -> Result<i32> {
    match cmd {
        Command::Indep { input } => {
            let g = io.read_graph(&input)?.to_graph()?;
            let seq = indep_poly(&g);
            let poly = seq.to_poly("x");
            let v = json!({ "sequence": seq, "polynomial": poly.to_doc() });
            io.emit(&v, || format!("sequence: {}\nI(x) = {poly}", v["sequence"]))?;
            Ok(0)
        }
        Command::Cindep { input } => {
            let g = io.read_graph(&input)?.to_coloured()?;
            let p = coloured_indep_poly(&g);
            io.emit(&p.to_doc(), || p.to_string())?;
            Ok(0)
        }
        Command::Glue {
            g1,
            g2,
            at: (c1, c2),
            partitioned,
        } => {
            let (d1, d2) = (io.read_graph(&g1)?, io.read_graph(&g2)?);
            let spec = GlueSpec::new(c1, c2);
            let doc = if partitioned {
                glue_partitioned(&d1.to_partitioned()?, &d2.to_partitioned()?, &spec)?.to_doc()
            } else {
                glue(&d1.to_coloured()?, &d2.to_coloured()?, &spec)?.to_doc(None)
            };
            io.emit(&doc, || graph_text(&doc))?;
            Ok(0)
        }
        Command::ReplaceW4 { input } => {
            let g = io.read_graph(&input)?.to_graph()?;
            let doc = GraphDoc::from_graph(&replace_w4(&g));
            io.emit(&doc, || graph_text(&doc))?;
            Ok(0)
        }
        Command::LeafyStar { n } => {
            let doc = leafy_star(n)?.to_doc();
            io.emit(&doc, || graph_text(&doc))?;
            Ok(0)
        }
        Command::Certify(CertifyCommand::Lorentzian { input, opts }) => {
            let doc: PolyDoc = serde_json::from_str(&io.read(&input)?)?;
            let p = MultiPoly::from_doc(&doc)?;
            if p.is_homogeneous() {
                writeln!(
                    io.err,
                    "{} derivative Hessians to check",
                    hessian_count(p.vars().len(), p.degree())
                )?;
            }
            let cert = with_threads(&opts, |o| is_lorentzian_with(&p, o))?;
            io.emit(&cert, || certificate_text(&cert))?;
            Ok(if cert.is_certified() { 0 } else { 1 })
        }
        Command::Certify(CertifyCommand::PreLorentzian { input, kmax, opts }) => {
            let g = io.read_graph(&input)?.to_partitioned()?;
            let cert = with_threads(&opts, |o| is_pre_lorentzian(&g, kmax, o))?;
            io.emit(&cert, || certificate_text(&cert))?;
            Ok(if cert.is_certified() { 0 } else { 1 })
        }
        Command::Seqcheck { input, ultra } => seqcheck(io, &input, ultra),
        Command::Theorem14 { max_vertices } => theorem14(io, max_vertices),
    }
}

fn with_threads<T: Send>(
    args: &CertifyArgs,
    f: impl FnOnce(&CertifyOptions) -> Result<T> + Send,
) -> Result<T> {
    let mut opts = CertifyOptions {
        exhaustive: args.exhaustive,
        max_hessians: args.max_hessians,
        parallel: true,
    };
    match args.threads {
        None => f(&opts),
        Some(0) => Err(Error::InvalidArgument("thread count must be positive".into())),
        Some(1) => {
            opts.parallel = false;
            f(&opts)
        }
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| Error::InvalidArgument(e.to_string()))?;
            pool.install(|| f(&opts))
        }
    }
}

fn graph_text(doc: &GraphDoc) -> String {
    let mut s = format!("{} vertices, {} edges\n", doc.vertices.len(), doc.edges.len());
    for [a, b] in &doc.edges {
        s.push_str(&format!("{a} -- {b}\n"));
    }
    if let Some(c) = &doc.colours {
        for (v, col) in c {
            s.push_str(&format!("{v}: {col}\n"));
        }
    }
    if let Some(b) = &doc.bound_colour {
        s.push_str(&format!("bound colour: {b}\n"));
    }
    s.pop();
    s
}

fn certificate_text(c: &Certificate) -> String {
    let verdict = match c.verdict {
        Verdict::Certified => "certified",
        Verdict::Refuted => "refuted",
        Verdict::Inconclusive => "inconclusive",
    };
    let mut s = format!("{verdict} ({} Hessians checked)", c.hessians_checked);
    if let Some(k) = c.k {
        s.push_str(&format!("\nk = {k}"));
    }
    if let Some(k) = c.k_max {
        s.push_str(&format!("\nnot certified up to k = {k}"));
    }
    if let Some(w) = &c.witness {
        s.push_str(&format!("\nwitness: {}", serde_json::to_string(w).unwrap_or_default()));
    }
    s
}

fn value_to_coeff(v: &Value) -> Result<Coeff> {
    match v {
        Value::Number(n) => parse_coeff(&n.to_string()),
        Value::String(s) => parse_coeff(s),
        other => Err(Error::Parse(format!("sequence entry must be a number, got {other}"))),
    }
}

/// Reads a sequence inline (`1,4,3` or `[1,4,3]`), from a JSON array file,
/// from `indep` output, or as the independence sequence of a graph file.
fn load_sequence(io: &mut Io<'_>, input: &str) -> Result<Vec<Coeff>> {
    let text = if input == "-" || Path::new(input).is_file() {
        io.read(input)?
    } else {
        let t = input.trim();
        if t.starts_with('[') {
            t.to_string()
        } else {
            format!("[{t}]")
        }
    };
    let v: Value = serde_json::from_str(&text)?;
    match v {
        Value::Array(items) => items.iter().map(value_to_coeff).collect(),
        Value::Object(ref o) if o.get("sequence").is_some_and(Value::is_array) => {
            o["sequence"].as_array().unwrap().iter().map(value_to_coeff).collect()
        }
        Value::Object(_) => {
            let doc: GraphDoc = serde_json::from_value(v)?;
            Ok(indep_poly(&doc.to_graph()?).as_rationals())
        }
        _ => Err(Error::Parse("expected a sequence or a graph".into())),
    }
}

fn seqcheck(io: &mut Io<'_>, input: &str, ultra: Option<usize>) -> Result<i32> {
    let s = load_sequence(io, input)?;
    if let Some(i) = sequences::first_negative(&s) {
        return Err(Error::InvalidArgument(format!("sequence entry {i} is negative")));
    }
    let lc = sequences::log_concave_violation(&s);
    let mut out = serde_json::Map::new();
    out.insert("sequence".into(), s.iter().map(|c| Value::from(c.to_string())).collect());
    out.insert("log_concave".into(), lc.is_none().into());
    if let Some(k) = lc {
        out.insert("log_concave_violation".into(), k.into());
    }
    out.insert("unimodal".into(), sequences::is_unimodal(&s).into());
    out.insert("internal_zeros".into(), sequences::has_internal_zeros(&s).into());
    let mut ok = lc.is_none();
    if let Some(n) = ultra {
        let v = sequences::ultra_log_concave_violation(&s, n)?;
        out.insert("ultra_log_concave".into(), v.is_none().into());
        if let Some(k) = v {
            out.insert("ultra_log_concave_violation".into(), k.into());
        }
        ok &= v.is_none();
    }
    let v = Value::Object(out);
    io.emit(&v, || {
        v.as_object()
            .unwrap()
            .iter()
            .map(|(k, x)| format!("{k}: {x}"))
            .collect::<Vec<_>>()
            .join("\n")
    })?;
    Ok(if ok { 0 } else { 1 })
}

#[derive(Serialize)]
struct Theorem14Row {
    vertices: usize,
    graphs: u64,
    log_concave: u64,
    largest_replaced_vertices: usize,
}

type EdgeList = Vec<(usize, usize)>;

/// Counterexample edge list, `None` when every sequence is log-concave.
fn check_all_edge_subsets(n: usize) -> (Theorem14Row, Option<EdgeList>) {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let total = 1u64 << pairs.len();
    let results: Vec<(bool, usize, EdgeList)> = (0..total)
        .into_par_iter()
        .map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_indices(n, &edges).expect("valid edges");
            let r = replace_w4(&g);
            let ok = sequences::is_log_concave(&indep_poly(&r).as_rationals());
            (ok, r.num_vertices(), edges)
        })
        .collect();
    let good = results.iter().filter(|r| r.0).count() as u64;
    let largest = results.iter().map(|r| r.1).max().unwrap_or(0);
    let bad = results.into_iter().find(|r| !r.0).map(|r| r.2);
    (
        Theorem14Row {
            vertices: n,
            graphs: total,
            log_concave: good,
            largest_replaced_vertices: largest,
        },
        bad,
    )
}

fn theorem14(io: &mut Io<'_>, max_vertices: usize) -> Result<i32> {
    if max_vertices == 0 {
        return Err(Error::InvalidArgument("--max-vertices must be positive".into()));
    }
    if max_vertices > THEOREM14_MAX_VERTICES {
        return Err(Error::GuardExceeded {
            what: "theorem14 vertex count",
            got: max_vertices as u128,
            limit: THEOREM14_MAX_VERTICES as u128,
        });
    }
    let mut rows = Vec::new();
    let mut counterexample = None;
    for n in 1..=max_vertices {
        let (row, bad) = check_all_edge_subsets(n);
        rows.push(row);
        if counterexample.is_none() {
            counterexample = bad.map(|e| (n, e));
        }
    }
    let last = rows.last().expect("at least one row");
    let all_ok = counterexample.is_none();
    let summary = if all_ok {
        format!(
            "all {} edge-subsets of K{}: log-concave",
            last.graphs, last.vertices
        )
    } else {
        "counterexample found".to_string()
    };
    let v = json!({
        "rows": rows,
        "all_log_concave": all_ok,
        "counterexample": counterexample.map(|(n, e)| json!({ "vertices": n, "edges": e })),
        "summary": summary,
    });
    io.emit(&v, || {
        let mut s = String::from("n  graphs  log-concave  largest R_W4\n");
        for r in &rows {
            s.push_str(&format!(
                "{:<2} {:>6}  {:>11}  {:>12}\n",
                r.vertices, r.graphs, r.log_concave, r.largest_replaced_vertices
            ));
        }
        s.push_str(&summary);
        s
    })?;
    Ok(if all_ok { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut input = stdin.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["prelorentz"];
        full.extend_from_slice(args);
        let code = run(full, &mut input, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn pair_parser() {
        assert_eq!(parse_pair("a,b").unwrap(), ("a".into(), "b".into()));
        assert!(parse_pair("a").is_err());
        assert!(parse_pair("a,b,c").is_err());
        assert!(parse_pair(",b").is_err());
    }

    #[test]
    fn bad_json_is_exit_2() {
        let (code, out, err) = call(&["indep"], "{not json");
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert!(err.starts_with("error:"));
    }

    #[test]
    fn unknown_subcommand_is_exit_2() {
        assert_eq!(call(&["frobnicate"], "").0, 2);
        assert_eq!(call(&["--help"], "").0, 0);
    }

    #[test]
    fn seqcheck_inline() {
        let (code, out, _) = call(&["seqcheck", "1,1,2"], "");
        assert_eq!(code, 1);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["log_concave"], false);
        assert_eq!(v["log_concave_violation"], 1);
        let (code, _, _) = call(&["seqcheck", "[1,4,3]", "--ultra", "2"], "");
        assert_eq!(code, 0);
        assert_eq!(call(&["seqcheck", "1,-1"], "").0, 2);
    }

    #[test]
    fn theorem14_guard() {
        assert_eq!(call(&["theorem14", "--max-vertices", "9"], "").0, 2);
        let (code, out, _) = call(&["theorem14", "--max-vertices", "2"], "");
        assert_eq!(code, 0);
        assert!(out.contains("all 2 edge-subsets of K2: log-concave"));
    }
}
