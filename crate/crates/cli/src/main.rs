use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use khtwist::adequacy::check_adequacy;
use khtwist::homology::{
    bracket_from_homology, bracket_state_sum, bracket_triples, homology_table, homology_table_with_torsion, TableJson,
};
use khtwist::skein::{analyze_crossing, check_spans, skein_triple, SkeinReport, SpanReport};
use khtwist::state::build_complex_with_cap;
use khtwist::tait::{checkerboard, psi, reduce, tait_graphs, GraphCounts, ReducedTaitGraph, TaitGraph};
use khtwist::theorem::{verify_batch, BatchReport, Caps};
use khtwist::{corpus, parse_corpus, Bracket, Diagram, Error};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "khtwist",
    version,
    about = "Exact Khovanov homology, brackets and twist invariants of knot diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bracket polynomial from homology and from the state sum.
    Bracket(Common),
    /// Extreme-coefficient theorem and twist-number corollary over a corpus.
    Verify(Common),
    /// Homology rank table.
    Homology(Common),
    /// Tait graphs, their reductions and cycle ranks.
    Graphs(Common),
    /// Plus and minus adequacy.
    Adequacy(Common),
    /// Twist classes and twist number.
    Twist(Common),
    /// Skein triple checks at one crossing (or every crossing).
    Skein(Common),
    /// Faces of the diagram.
    Faces(Common),
}

#[derive(Args, Clone)]
struct Common {
    /// Inline PD code, records separated by newlines or `;`.
    #[arg(long, conflicts_with = "file")]
    pd: Option<String>,
    /// PD file, optionally a corpus of `name:` stanzas.
    #[arg(long)]
    file: Option<PathBuf>,
    /// One JSON document.
    #[arg(long, conflicts_with = "json_lines")]
    json: bool,
    /// One JSON object per line.
    #[arg(long)]
    json_lines: bool,
    #[arg(long, default_value_t = 14, value_parser = clap::value_parser!(u32).range(1..=63))]
    homology_cap: u32,
    #[arg(long, default_value_t = 24, value_parser = clap::value_parser!(u32).range(1..=63))]
    statesum_cap: u32,
    /// 1-based crossing for `skein`; every crossing when absent.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    crossing: Option<u32>,
    /// Integral torsion from Smith normal forms.
    #[arg(long)]
    torsion: bool,
}

impl Common {
    fn caps(&self) -> Caps {
        Caps {
            homology: self.homology_cap as usize,
            statesum: self.statesum_cap as usize,
        }
    }
}

enum Failure {
    Verification,
    Input(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } => Failure::Cap(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn read_input(c: &Common, default_to_corpus: bool) -> Result<Vec<Diagram>, Failure> {
    let text = match (&c.pd, &c.file) {
        (Some(pd), _) => pd.clone(),
        (None, Some(path)) => {
            std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?
        }
        (None, None) if default_to_corpus => return Ok(corpus::bundled()),
        (None, None) => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Input(format!("cannot read standard input: {e}")))?;
            s
        }
    };
    let diagrams = parse_corpus(&text)?;
    Ok(if diagrams.is_empty() {
        vec![Diagram::unknot()]
    } else {
        diagrams
    })
}

fn label(d: &Diagram, index: usize) -> String {
    d.name().map_or_else(|| format!("#{}", index + 1), str::to_string)
}

struct Output {
    text: String,
}

impl Output {
    fn new() -> Self {
        Self { text: String::new() }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn json<T: Serialize>(&mut self, value: &T) {
        self.line(serde_json::to_string(value).expect("reports serialize"));
    }

    fn flush(self) {
        let mut out = io::stdout().lock();
        let _ = out.write_all(self.text.as_bytes());
        let _ = out.flush();
    }
}

/// Emits per-diagram values: a single object or an array for `--json`, one
/// object per line for `--json-lines`.
fn emit_json<T: Serialize>(out: &mut Output, c: &Common, values: &[T]) {
    if c.json_lines {
        for v in values {
            out.json(v);
        }
    } else if let [single] = values {
        out.json(single);
    } else {
        out.json(&values);
    }
}

fn header(out: &mut Output, diagrams: &[Diagram], d: &Diagram, i: usize) {
    if diagrams.len() > 1 {
        if i > 0 {
            out.line("");
        }
        out.line(format!("== {}", label(d, i)));
    }
}

#[derive(Serialize)]
struct BracketJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    table: Option<TableJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    state_sum: Option<Vec<[i64; 3]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    routes_agree: Option<bool>,
}

fn capped<T>(r: khtwist::Result<T>) -> khtwist::Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::CapExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

fn cmd_bracket(c: &Common) -> Outcome {
    let diagrams = read_input(c, false)?;
    let mut out = Output::new();
    let mut values = Vec::new();
    let mut disagree = false;
    for (i, d) in diagrams.iter().enumerate() {
        let homology = capped(build_complex_with_cap(d, c.homology_cap as usize))?.map(|cx| {
            if c.torsion {
                homology_table_with_torsion(&cx)
            } else {
                homology_table(&cx)
            }
        });
        let from_homology: Option<Bracket> = homology.as_ref().map(bracket_from_homology);
        let from_states: Option<Bracket> = capped(bracket_state_sum(d, c.statesum_cap as usize))?;
        if from_homology.is_none() && from_states.is_none() {
            return Err(Failure::Cap(format!(
                "{}: {} crossings exceed both caps",
                label(d, i),
                d.len()
            )));
        }
        let agree = from_homology.as_ref().zip(from_states.as_ref()).map(|(h, s)| h == s);
        disagree |= agree == Some(false);
        if c.json || c.json_lines {
            values.push(BracketJson {
                name: d.name().map(str::to_string),
                table: homology
                    .as_ref()
                    .zip(from_homology.as_ref())
                    .map(|(h, b)| TableJson::new(h, b)),
                state_sum: from_states.as_ref().map(bracket_triples),
                routes_agree: agree,
            });
            continue;
        }
        header(&mut out, &diagrams, d, i);
        match (&from_homology, &from_states, agree) {
            (Some(h), Some(_), Some(true)) => out.line(h.to_string()),
            _ => {
                if let Some(h) = &from_homology {
                    out.line(format!("homology:  {h}"));
                }
                if let Some(s) = &from_states {
                    out.line(format!("state sum: {s}"));
                }
            }
        }
        if let Some(a) = agree {
            out.line(format!("routes agree: {a}"));
        }
    }
    if c.json || c.json_lines {
        emit_json(&mut out, c, &values);
    }
    out.flush();
    if disagree {
        Err(Failure::Verification)
    } else {
        Ok(())
    }
}

#[derive(Serialize)]
struct TheoremLine<'a> {
    name: &'a str,
    skipped: &'a [String],
}

fn cmd_verify(c: &Common) -> Outcome {
    let diagrams = read_input(c, true)?;
    let report: BatchReport = verify_batch(&diagrams, c.caps())?;
    let mut out = Output::new();
    if c.json {
        out.json(&report);
    } else if c.json_lines {
        for e in &report.entries {
            match &e.theorem {
                Some(t) => out.json(t),
                None => out.json(&TheoremLine {
                    name: &e.name,
                    skipped: &e.skipped,
                }),
            }
        }
    } else {
        for e in &report.entries {
            let mut line = format!("{:<8} n={:<2} ", e.name, e.crossings);
            match &e.theorem {
                None => line.push_str("skipped"),
                Some(t) => {
                    let mark = |ok: bool| if ok { "ok" } else { "FAIL" };
                    let _ = write!(
                        line,
                        "top {:?}={} {}  bottom {:?}={} {}",
                        t.top.magnitude,
                        t.top.psi,
                        mark(t.top.holds),
                        t.bottom.magnitude,
                        t.bottom.psi,
                        mark(t.bottom.holds)
                    );
                    if let Some(cor) = &e.corollary {
                        let _ = write!(
                            line,
                            "  twist {:?}={} {}",
                            cor.coefficient_sum,
                            cor.twist_number,
                            mark(cor.passed)
                        );
                    }
                }
            }
            for why in &e.skipped {
                let _ = write!(line, "  [{why}]");
            }
            out.line(line);
            if e.verified() && !e.passed() {
                out.json(e);
            }
        }
        let pairing = serde_json::to_string(&report.pairing_used).expect("pairing serializes");
        out.line(format!(
            "passed {} of {} (skipped {}, pairing {})",
            report.passed(),
            report.verified(),
            report.entries.len() - report.verified(),
            pairing.trim_matches('"')
        ));
    }
    out.flush();
    if !report.all_passed() {
        Err(Failure::Verification)
    } else if report.entries.iter().any(|e| e.cap_exceeded) {
        Err(Failure::Cap("some entries exceed the computation caps".into()))
    } else {
        Ok(())
    }
}

fn cmd_homology(c: &Common) -> Outcome {
    let diagrams = read_input(c, false)?;
    let mut out = Output::new();
    let mut values = Vec::new();
    for (i, d) in diagrams.iter().enumerate() {
        let cx = build_complex_with_cap(d, c.homology_cap as usize)?;
        let h = if c.torsion {
            homology_table_with_torsion(&cx)
        } else {
            homology_table(&cx)
        };
        let b: Bracket = bracket_from_homology(&h);
        if c.json || c.json_lines {
            values.push(TableJson::new(&h, &b));
            continue;
        }
        header(&mut out, &diagrams, d, i);
        out.line(if c.torsion { "j\tk\trank\ttorsion" } else { "j\tk\trank" });
        for (&(j, k), &r) in &h.ranks {
            out.line(format!("{j}\t{k}\t{r}"));
        }
        if let Some(t) = &h.torsion {
            for (&(j, k), fs) in t {
                let fs: Vec<String> = fs.iter().map(|f| format!("Z/{f}")).collect();
                out.line(format!("{j}\t{k}\t\t{}", fs.join(" + ")));
            }
        }
        out.line(format!("bracket: {b}"));
    }
    if c.json || c.json_lines {
        emit_json(&mut out, c, &values);
    }
    out.flush();
    Ok(())
}

#[derive(Serialize)]
struct GraphsJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    follows_convention: bool,
    g: TaitGraph,
    g_star: TaitGraph,
    g_reduced: ReducedTaitGraph,
    g_star_reduced: ReducedTaitGraph,
    psi_g: Option<i64>,
    psi_gstar: Option<i64>,
}

fn cmd_graphs(c: &Common) -> Outcome {
    let diagrams = read_input(c, false)?;
    let mut out = Output::new();
    let mut values = Vec::new();
    for (i, d) in diagrams.iter().enumerate() {
        let (g, gs) = tait_graphs(d);
        let (rg, rgs) = (reduce(&g), reduce(&gs));
        let value = GraphsJson {
            name: d.name().map(str::to_string),
            follows_convention: checkerboard(d).is_ok(),
            psi_g: psi(&rg).ok(),
            psi_gstar: psi(&rgs).ok(),
            g,
            g_star: gs,
            g_reduced: rg,
            g_star_reduced: rgs,
        };
        if c.json || c.json_lines {
            values.push(value);
            continue;
        }
        header(&mut out, &diagrams, d, i);
        if !value.follows_convention {
            out.line("coloring: convention conflicts, using a fallback proper coloring");
        }
        for (title, graph, reduced, cycle_rank) in [
            ("G", &value.g, &value.g_reduced, value.psi_g),
            ("G*", &value.g_star, &value.g_star_reduced, value.psi_gstar),
        ] {
            out.line(format!(
                "{title}: {} vertices, {} edges; reduced {} edges; psi {}",
                graph.vertex_count(),
                graph.edge_count(),
                reduced.edge_count(),
                cycle_rank.map_or_else(|| "undefined (disconnected)".to_string(), |p| p.to_string())
            ));
            for e in &reduced.edges {
                let xs: Vec<String> = e.crossings.iter().map(|x| (x + 1).to_string()).collect();
                out.line(format!("  {} -- {}  crossings {}", e.a, e.b, xs.join(",")));
            }
        }
    }
    if c.json || c.json_lines {
        emit_json(&mut out, c, &values);
    }
    out.flush();
    Ok(())
}

#[derive(Serialize)]
struct Named<T> {
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(flatten)]
    value: T,
}

fn named<T>(d: &Diagram, value: T) -> Named<T> {
    Named {
        name: d.name().map(str::to_string),
        value,
    }
}

fn cmd_adequacy(c: &Common) -> Outcome {
    let diagrams = read_input(c, false)?;
    let mut out = Output::new();
    let reports: Vec<_> = diagrams.iter().map(|d| named(d, check_adequacy(d))).collect();
    if c.json || c.json_lines {
        emit_json(&mut out, c, &reports);
    } else {
        for (i, (d, r)) in diagrams.iter().zip(&reports).enumerate() {
            header(&mut out, &diagrams, d, i);
            out.line(format!("plus adequate: {}", r.value.plus_adequate));
            out.line(format!("minus adequate: {}", r.value.minus_adequate));
            if let Some(w) = r.value.witness {
                out.line(format!("witness crossing: {}", w + 1));
            }
        }
    }
    out.flush();
    Ok(())
}

fn cmd_twist(c: &Common) -> Outcome {
    let diagrams = read_input(c, false)?;
    let mut out = Output::new();
    let reports: Vec<_> = diagrams.iter().map(|d| named(d, d.twist_classes())).collect();
    if c.json || c.json_lines {
        emit_json(&mut out, c, &reports);
    } else {
        for (i, (d, r)) in diagrams.iter().zip(&reports).enumerate() {
            header(&mut out, &diagrams, d, i);
            out.line(format!("twist number: {}", r.value.twist_number));
            for class in &r.value.classes {
                let xs: Vec<String> = class.iter().map(|x| (x + 1).to_string()).collect();
                out.line(format!("  {{{}}}", xs.join(", ")));
            }
        }
    }
    out.flush();
    Ok(())
}

#[derive(Serialize)]
struct SkeinJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(flatten)]
    report: SkeinReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    spans: Option<SpanReport>,
}

fn skein_passed(r: &SkeinJson) -> bool {
    r.report.ses.exact()
        && r.report.les.rank_sums_vanish()
        && r.report.lemma.as_ref().is_none_or(|l| l.holds())
        && r.spans.as_ref().is_none_or(SpanReport::holds)
}

fn cmd_skein(c: &Common) -> Outcome {
    let diagrams = read_input(c, false)?;
    let mut reports = Vec::new();
    for d in &diagrams {
        let crossings: Vec<usize> = match c.crossing {
            Some(x) => {
                let x = x as usize;
                if x > d.len() {
                    return Err(Failure::Input(format!(
                        "crossing {x} out of range for a diagram with {} crossings",
                        d.len()
                    )));
                }
                vec![x - 1]
            }
            None => (0..d.len()).collect(),
        };
        if crossings.is_empty() {
            return Err(Failure::Input("diagram has no crossings".into()));
        }
        for x in crossings {
            let report = analyze_crossing(d, x, c.homology_cap as usize)?;
            let spans = if report.lemma.is_some() {
                Some(check_spans(&skein_triple(d, x)?)?)
            } else {
                None
            };
            reports.push(SkeinJson {
                name: d.name().map(str::to_string),
                report,
                spans,
            });
        }
    }
    let mut out = Output::new();
    if c.json || c.json_lines {
        emit_json(&mut out, c, &reports);
    } else {
        for r in &reports {
            let yes = |b: bool| if b { "yes" } else { "NO" };
            let title = r.name.as_deref().map_or(String::new(), |n| format!("{n} "));
            out.line(format!("{title}crossing {}", r.report.crossing + 1));
            let ses = &r.report.ses;
            out.line(format!(
                "  short exact sequence exact: {}  (maps commute: {}, crossing change anticommutes: {})",
                yes(ses.exact()),
                yes(ses.alpha_commutator_failures.is_empty() && ses.beta_commutator_failures.is_empty()),
                yes(ses.crossing_change_anticommutes)
            ));
            let les = &r.report.les;
            out.line(format!(
                "  long exact sequence rank sums vanish: {}",
                yes(les.rank_sums_vanish())
            ));
            out.line(format!(
                "  {}: {}",
                les.coefficient_identity.name,
                yes(les.coefficient_identity.holds)
            ));
            match (&r.report.lemma, &r.report.lemma_skipped) {
                (Some(l), _) => {
                    for (p, q) in l.printed.iter().zip(&l.corrected) {
                        out.line(format!(
                            "  {}: {} (lhs {:?}, rhs {:?}); {}: {}",
                            p.name,
                            yes(p.holds),
                            p.lhs,
                            p.rhs,
                            q.name,
                            yes(q.holds)
                        ));
                    }
                }
                (None, Some(why)) => out.line(format!("  extreme identities skipped: {why}")),
                (None, None) => {}
            }
            if let Some(s) = &r.spans {
                out.line(format!("  spans: {}", yes(s.holds())));
            }
        }
        let passed = reports.iter().filter(|r| skein_passed(r)).count();
        out.line(format!("passed {passed} of {}", reports.len()));
    }
    out.flush();
    if reports.iter().all(skein_passed) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cmd_faces(c: &Common) -> Outcome {
    let diagrams = read_input(c, false)?;
    let mut out = Output::new();
    let faces: Vec<_> = diagrams.iter().map(|d| named(d, d.faces())).collect();
    if c.json || c.json_lines {
        emit_json(&mut out, c, &faces);
    } else {
        for (i, (d, f)) in diagrams.iter().zip(&faces).enumerate() {
            header(&mut out, &diagrams, d, i);
            for (n, face) in f.value.iter().enumerate() {
                let corners: Vec<String> = face
                    .corners
                    .iter()
                    .map(|c| format!("{}.{}", c.crossing + 1, c.quadrant))
                    .collect();
                out.line(format!("face {n}: {}", corners.join(" ")));
            }
        }
    }
    out.flush();
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Bracket(c) => cmd_bracket(c),
        Command::Verify(c) => cmd_verify(c),
        Command::Homology(c) => cmd_homology(c),
        Command::Graphs(c) => cmd_graphs(c),
        Command::Adequacy(c) => cmd_adequacy(c),
        Command::Twist(c) => cmd_twist(c),
        Command::Skein(c) => cmd_skein(c),
        Command::Faces(c) => cmd_faces(c),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
