//! Command-line front end. `execute` runs one parsed command and returns the
//! exit code with the text to print, so it can be driven in-process.

use crate::automorphism::{outer_representatives, AutError, Automorphism, OuterClass};
use crate::graph::{eligibility, GraphError, PresentationGraph, Route};
use crate::thickening::{build_cayley_patch, check_links_6_large, induced_automorphism, EquivarianceReport, LinkReport, PatchError};
use crate::twisted::{
    build_extension, orbit_decide, tcp, verify_witness, OrbitVerdict, TwistedCertificate, TwistedError, TwistedQuery, Verdict,
    WitnessReport,
};
use crate::words::{ArtinGroup, Budget, Certainty, EqualProof, SearchReport, Separation, Word, WordError};
use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use std::path::PathBuf;
use thiserror::Error;

pub const EXIT_YES: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NO: i32 = 3;
pub const EXIT_UNKNOWN: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "artin-tcp", version, about = "Twisted conjugacy and thickened Cayley complexes for large-type Artin groups")]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Graph file: {"vertices": [...], "edges": [[u, v, m], ...]}
    #[arg(long, global = true)]
    pub graph: Option<PathBuf>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Print rewrite traces of equality proofs.
    #[arg(long, global = true)]
    pub trace: bool,
    /// Seed for the witness search order (the search is currently deterministic).
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads; output does not depend on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Rewriting search node cap.
    #[arg(long, visible_alias = "budget", global = true, default_value_t = Budget::default().nodes, value_parser = positive)]
    pub nodes: usize,
    /// Extra letters allowed above the longer word while rewriting.
    #[arg(long, global = true, default_value_t = Budget::default().padding)]
    pub padding: usize,
    /// Witness candidates per twisted query.
    #[arg(long, global = true, default_value_t = Budget::default().candidates, value_parser = positive)]
    pub candidates: usize,
    /// Longest enumerated witness.
    #[arg(long, global = true, default_value_t = Budget::default().witness_length)]
    pub witness_length: usize,
    /// Treat Out as generated by graph automorphisms and the inversion even
    /// when the graph conditions do not show it.
    #[arg(long, global = true)]
    pub assume_out_generated: bool,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

impl RunConfig {
    pub fn budget(&self) -> Budget {
        Budget { padding: self.padding, nodes: self.nodes, candidates: self.candidates, witness_length: self.witness_length }
    }
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Which solvability route applies to the graph.
    CheckGraph,
    /// Is u = phi(z) v z^-1 for some z?
    Tcp {
        #[arg(long, default_value = "")]
        phi: String,
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// Is v conjugate to psi(u) for some outer class psi?
    Orbit {
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// Word problem.
    Wp {
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// Outer class representatives, or facts about one automorphism.
    Aut {
        #[arg(long)]
        phi: Option<String>,
        /// Compose with this automorphism (phi after it).
        #[arg(long)]
        compose: Option<String>,
        #[arg(long)]
        power: Option<u64>,
        /// Word to apply the result to.
        #[arg(long, allow_hyphen_values = true)]
        apply: Option<String>,
    },
    /// Presentation of the extension by the diagram part of phi.
    Extension {
        #[arg(long, default_value = "")]
        phi: String,
        /// Add x^k = 1 for the order k of the outer class.
        #[arg(long)]
        finite_order: bool,
    },
    /// Patch of the thickened Cayley complex around the identity.
    Thicken {
        #[arg(long)]
        radius: usize,
        #[arg(long)]
        check_links: bool,
        /// Check equivariance under this diagram automorphism.
        #[arg(long)]
        automorphism: Option<String>,
        /// Write the complex as JSON to this file.
        #[arg(long)]
        export: Option<PathBuf>,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("--graph is required")]
    MissingGraph,
    #[error("cannot read {0}: {1}")]
    Io(PathBuf, std::io::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Aut(#[from] AutError),
    #[error(transparent)]
    Twisted(#[from] TwistedError),
    #[error(transparent)]
    Patch(#[from] PatchError),
    #[error("{0}")]
    Usage(String),
    #[error("cannot build thread pool: {0}")]
    Threads(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            _ => EXIT_ERROR,
        }
    }
}

/// Exit code and the text for stdout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckGraphJson {
    pub command: String,
    pub route: Route,
    pub eligible: bool,
    pub checklist: Vec<(String, bool)>,
    pub failures: Vec<String>,
    pub hierarchy: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<TwistedCertificate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<WitnessReport>,
}

impl VerdictJson {
    fn new(g: &PresentationGraph, v: &Verdict) -> Self {
        let blank = VerdictJson { verdict: String::new(), witness: None, certificate: None, report: None };
        match v {
            Verdict::Yes { witness } => VerdictJson { verdict: "YES".into(), witness: Some(witness.render(g)), ..blank },
            Verdict::No { certificate } => VerdictJson { verdict: "NO".into(), certificate: Some(certificate.clone()), ..blank },
            Verdict::Unknown { report } => VerdictJson { verdict: "UNKNOWN".into(), report: Some(report.clone()), ..blank },
        }
    }

    fn line(&self) -> String {
        match (self.verdict.as_str(), &self.witness, &self.certificate) {
            ("YES", Some(w), _) => format!("YES witness={w}"),
            ("NO", _, Some(c)) => format!("NO certificate={}", c.name()),
            _ => "UNKNOWN".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TcpJson {
    pub command: String,
    pub seed: u64,
    pub route: Route,
    pub phi: String,
    pub u: String,
    pub v: String,
    /// The equivalent query with diagram-only automorphism.
    pub stripped: [String; 3],
    #[serde(flatten)]
    pub verdict: VerdictJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitJson {
    pub command: String,
    pub seed: u64,
    pub verdict: String,
    pub classes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub per_class: Vec<VerdictJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WpJson {
    pub command: String,
    pub u: String,
    pub v: String,
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub proof: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub separation: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<SearchReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OuterJson {
    pub automorphism: String,
    pub order: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutJson {
    pub command: String,
    /// Whether the listed classes are known to exhaust the finite part of Out.
    pub complete: bool,
    pub classes: Vec<OuterJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub result: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outer: Option<OuterJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub image: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionJson {
    pub command: String,
    pub generators: Vec<String>,
    pub fresh: String,
    pub relations: Vec<String>,
    pub order: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThickenJson {
    pub command: String,
    pub radius: usize,
    pub group_vertices: usize,
    pub vertices: usize,
    pub edges: usize,
    pub simplices: usize,
    pub precells: usize,
    pub patch_interior: usize,
    pub log: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub links: Option<LinkReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equivariance: Option<EquivarianceReport>,
}

fn load_graph(cfg: &RunConfig) -> Result<PresentationGraph, CliError> {
    let path = cfg.graph.as_ref().ok_or(CliError::MissingGraph)?;
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.clone(), e))?;
    Ok(PresentationGraph::parse_json(&text)?)
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable") + "\n"
}

fn render_proof(g: &PresentationGraph, p: &EqualProof) -> (String, Vec<String>) {
    match p {
        EqualProof::FreeReduction => ("free-reduction".into(), Vec::new()),
        EqualProof::NormalForm { form } => ("normal-form".into(), vec![form.clone()]),
        EqualProof::Rewrite { trace } => ("rewrite".into(), trace.iter().map(|w| w.render(g)).collect()),
    }
}

fn render_separation(g: &PresentationGraph, s: &Separation) -> String {
    match s {
        Separation::Coxeter { reduced } => format!("coxeter ({} in the Coxeter group)", reduced.render(g)),
        Separation::Abelianization { left, right } => format!("abelianization ({left:?} vs {right:?})"),
        Separation::NormalForm { left, right } => format!("normal-form ({left} vs {right})"),
        Separation::PermutationQuotient { degree, .. } => format!("permutation-quotient (S{degree})"),
    }
}

/// Runs a command inside a pool of the requested size.
pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    match cli.config.threads {
        Some(0) => Err(CliError::Usage("--threads must be positive".into())),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(n).build().map_err(|e| CliError::Threads(e.to_string()))?;
            pool.install(|| run(&cli.config, &cli.command))
        }
        None => run(&cli.config, &cli.command),
    }
}

pub fn run(cfg: &RunConfig, command: &Command) -> Result<Outcome, CliError> {
    let g = load_graph(cfg)?;
    let budget = cfg.budget();
    match command {
        Command::CheckGraph => {
            let r = eligibility(&g, cfg.assume_out_generated);
            let eligible = r.route.is_eligible();
            let out = CheckGraphJson {
                command: "check-graph".into(),
                route: r.route,
                eligible,
                checklist: r.checklist.iter().map(|h| (h.name.clone(), h.holds)).collect(),
                failures: r.failures.clone(),
                hierarchy: r.hierarchy.as_ref().map(|h| h.render(&g)),
            };
            let code = if eligible { EXIT_YES } else { EXIT_NO };
            let stdout = if cfg.json {
                to_json(&out)
            } else {
                let mut s = if eligible {
                    format!("eligible: {}\n", r.route)
                } else {
                    format!("ineligible: {}\n", r.failures.first().map(String::as_str).unwrap_or("no route applies"))
                };
                if r.route == Route::Assumed && !r.failures.is_empty() {
                    s.push_str(&format!("assumed despite: {}\n", r.failures.join("; ")));
                }
                for h in &r.checklist {
                    s.push_str(&format!("  [{}] {}\n", if h.holds { "x" } else { " " }, h.name));
                }
                if let Some(h) = &out.hierarchy {
                    s.push_str(h);
                }
                s
            };
            Ok(Outcome { code, stdout })
        }
        Command::Tcp { phi, u, v } => {
            let group = ArtinGroup::new(g.clone());
            let q = TwistedQuery { phi: Automorphism::parse(&g, phi)?, u: Word::parse(&g, u)?, v: Word::parse(&g, v)? };
            let out = tcp(&group, &q, &budget, cfg.assume_out_generated)?;
            let trace = match (&out.verdict, cfg.trace) {
                (Verdict::Yes { witness }, true) => {
                    match verify_witness(&group, &out.stripped.phi, &out.stripped.u, &out.stripped.v, witness, &budget)? {
                        Certainty::Equal(p) => {
                            let (kind, steps) = render_proof(&g, &p);
                            Some(std::iter::once(kind).chain(steps).collect())
                        }
                        _ => None,
                    }
                }
                _ => None,
            };
            let verdict = VerdictJson::new(&g, &out.verdict);
            let code = match out.verdict {
                Verdict::Yes { .. } => EXIT_YES,
                Verdict::No { .. } => EXIT_NO,
                Verdict::Unknown { .. } => EXIT_UNKNOWN,
            };
            let j = TcpJson {
                command: "tcp".into(),
                seed: cfg.seed,
                route: out.route,
                phi: q.phi.render(&g),
                u: q.u.render(&g),
                v: q.v.render(&g),
                stripped: [out.stripped.phi.render(&g), out.stripped.u.render(&g), out.stripped.v.render(&g)],
                verdict,
                trace,
            };
            let stdout = if cfg.json {
                to_json(&j)
            } else {
                let mut s = j.verdict.line() + "\n";
                for line in j.trace.iter().flatten() {
                    s.push_str(&format!("  {line}\n"));
                }
                s
            };
            Ok(Outcome { code, stdout })
        }
        Command::Orbit { u, v } => {
            let group = ArtinGroup::new(g.clone());
            let (u, v) = (Word::parse(&g, u)?, Word::parse(&g, v)?);
            let reps = outer_representatives(&g);
            let out = orbit_decide(&group, &u, &v, &reps, &budget)?;
            let (verdict, class, witness, code) = match &out.verdict {
                OrbitVerdict::Yes { class, witness } => ("YES", Some(*class), Some(witness.render(&g)), EXIT_YES),
                OrbitVerdict::No { .. } => ("NO", None, None, EXIT_NO),
                OrbitVerdict::Unknown => ("UNKNOWN", None, None, EXIT_UNKNOWN),
            };
            let j = OrbitJson {
                command: "orbit".into(),
                seed: cfg.seed,
                verdict: verdict.into(),
                classes: reps.iter().map(|c| c.render(&g)).collect(),
                class,
                witness,
                per_class: out.per_class.iter().map(|v| VerdictJson::new(&g, v)).collect(),
            };
            let stdout = if cfg.json {
                to_json(&j)
            } else {
                let mut s = match (&j.class, &j.witness) {
                    (Some(c), Some(w)) => format!("YES class={} witness={w}\n", j.classes[*c]),
                    _ => format!("{verdict}\n"),
                };
                for (c, v) in j.classes.iter().zip(&j.per_class) {
                    s.push_str(&format!("  {c}: {}\n", v.line()));
                }
                s
            };
            Ok(Outcome { code, stdout })
        }
        Command::Wp { u, v } => {
            let group = ArtinGroup::new(g.clone());
            let (wu, wv) = (Word::parse(&g, u)?, Word::parse(&g, v)?);
            let c = group.equal_words(&wu, &wv, &budget)?;
            let mut j = WpJson {
                command: "wp".into(),
                u: wu.render(&g),
                v: wv.render(&g),
                verdict: String::new(),
                proof: None,
                separation: None,
                report: None,
                trace: None,
            };
            let code = match &c {
                Certainty::Equal(p) => {
                    let (kind, steps) = render_proof(&g, p);
                    j.verdict = "EQUAL".into();
                    j.proof = Some(kind);
                    j.trace = cfg.trace.then_some(steps);
                    EXIT_YES
                }
                Certainty::NotEqual(s) => {
                    j.verdict = "NOT_EQUAL".into();
                    j.separation = Some(render_separation(&g, s));
                    EXIT_NO
                }
                Certainty::Unknown(r) => {
                    j.verdict = "UNKNOWN".into();
                    j.report = Some(r.clone());
                    EXIT_UNKNOWN
                }
            };
            let stdout = if cfg.json {
                to_json(&j)
            } else {
                let mut s = match (&j.proof, &j.separation, &j.report) {
                    (Some(p), _, _) => format!("EQUAL proof={p}\n"),
                    (_, Some(s), _) => format!("NOT_EQUAL separation={s}\n"),
                    (_, _, Some(r)) => format!("UNKNOWN visited={} max_length={}\n", r.visited, r.max_length),
                    _ => unreachable!(),
                };
                for line in j.trace.iter().flatten() {
                    s.push_str(&format!("  {line}\n"));
                }
                s
            };
            Ok(Outcome { code, stdout })
        }
        Command::Aut { phi, compose, power, apply } => {
            let complete = eligibility(&g, false).route.is_eligible();
            let classes: Vec<OuterJson> =
                outer_representatives(&g).iter().map(|c| OuterJson { automorphism: c.render(&g), order: c.order() }).collect();
            let mut j = AutJson { command: "aut".into(), complete, classes, result: None, outer: None, image: None };
            if (compose.is_some() || power.is_some() || apply.is_some()) && phi.is_none() {
                return Err(CliError::Usage("--compose, --power and --apply need --phi".into()));
            }
            if let Some(text) = phi {
                let mut a = Automorphism::parse(&g, text)?;
                if let Some(b) = compose {
                    a = a.compose(&Automorphism::parse(&g, b)?)?;
                }
                if let Some(k) = power {
                    a = a.power(*k);
                }
                let o: OuterClass = a.outer();
                j.outer = Some(OuterJson { automorphism: o.render(&g), order: o.order() });
                if let Some(w) = apply {
                    j.image = Some(a.apply(&Word::parse(&g, w)?).render(&g));
                }
                j.result = Some(a.render(&g));
            }
            let stdout = if cfg.json {
                to_json(&j)
            } else {
                let mut s = String::new();
                match (&j.result, &j.outer) {
                    (Some(r), Some(o)) => {
                        s.push_str(&format!("{r}\nouter class: {} (order {})\n", o.automorphism, o.order));
                        if let Some(i) = &j.image {
                            s.push_str(&format!("image: {i}\n"));
                        }
                    }
                    _ => {
                        for c in &j.classes {
                            s.push_str(&format!("{} (order {})\n", c.automorphism, c.order));
                        }
                        if !complete {
                            s.push_str("graph is ineligible: these classes need not exhaust the finite part of Out\n");
                        }
                    }
                }
                s
            };
            Ok(Outcome { code: EXIT_YES, stdout })
        }
        Command::Extension { phi, finite_order } => {
            let a = Automorphism::parse(&g, phi)?;
            let e = build_extension(&g, &a.outer(), *finite_order);
            let j = ExtensionJson {
                command: "extension".into(),
                generators: e.generators,
                fresh: e.fresh,
                relations: e.relations,
                order: e.order,
            };
            let stdout = if cfg.json { to_json(&j) } else { format!("< {} | {} >\n", j.generators.join(", "), j.relations.join(", ")) };
            Ok(Outcome { code: EXIT_YES, stdout })
        }
        Command::Thicken { radius, check_links, automorphism, export } => {
            let group = ArtinGroup::new(g.clone());
            let p = build_cayley_patch(&group, *radius, &budget)?;
            if let Some(path) = export {
                std::fs::write(path, p.to_json()).map_err(|e| CliError::Io(path.clone(), e))?;
            }
            let links = check_links.then(|| check_links_6_large(&p));
            let equivariance = match automorphism {
                Some(text) => {
                    let a = Automorphism::parse(&g, text)?;
                    if !a.is_diagram() {
                        return Err(CliError::Usage("--automorphism must have an empty inner part".into()));
                    }
                    Some(induced_automorphism(&p, &group, &a.outer())?)
                }
                None => None,
            };
            let pass = links.as_ref().is_none_or(LinkReport::passes) && equivariance.as_ref().is_none_or(|e| e.violations() == 0);
            let j = ThickenJson {
                command: "thicken".into(),
                radius: *radius,
                group_vertices: p.group_vertices,
                vertices: p.vertices.len(),
                edges: p.edges.len(),
                simplices: p.simplices.len(),
                precells: p.cells.len(),
                patch_interior: p.patch_interior_vertices().len(),
                log: p.log.clone(),
                links,
                equivariance,
            };
            let stdout = if cfg.json {
                to_json(&j)
            } else {
                let mut s = format!(
                    "patch radius {}: {} vertices ({} group), {} edges, {} simplices, {} precells, {} patch-interior\n",
                    j.radius, j.vertices, j.group_vertices, j.edges, j.simplices, j.precells, j.patch_interior
                );
                for line in &j.log {
                    s.push_str(&format!("  {line}\n"));
                }
                if let Some(r) = &j.links {
                    s.push_str(&format!("links: {} checked, {} failing\n", r.checked, r.failures));
                    for e in &r.entries {
                        let status = if e.passes() { "ok" } else { "FAIL" };
                        s.push_str(&format!(
                            "  vertex {} link {} flag={} short cycles={} {status}\n",
                            e.vertex,
                            e.link_size,
                            e.flag,
                            e.cycles.len()
                        ));
                    }
                }
                if let Some(e) = &j.equivariance {
                    s.push_str(&format!(
                        "equivariance under {}: {} outside, injective={}, {} edge and {} simplex violations, order {} fails at {} of {} vertices\n",
                        e.automorphism,
                        e.outside,
                        e.injective,
                        e.edge_violations.len(),
                        e.simplex_violations.len(),
                        e.order,
                        e.order_violations.len(),
                        e.orbit_checked
                    ));
                }
                s
            };
            Ok(Outcome { code: if pass { EXIT_YES } else { EXIT_NO }, stdout })
        }
    }
}
