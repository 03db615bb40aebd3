//! Command-line front end. Every command is a thin adapter over the library.
//!
//! Exit codes: 0 on success, 2 when a certificate is inconclusive, 1 on any
//! error.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::classify::classify;
use crate::coxeter::{parse_spec, CoxeterSpec, VertexSubset};
use crate::error::{Error, Result};
use crate::l2::{betti, chi_orb, chi_orb_chain_sum, RuleContext};
use crate::nerve::build_nerve;
use crate::planarity::{
    brute_force_planar, certify_nonplanar, cone_construction, planar_embedding, trace_vanishing, Graph,
    RotationSystem, Verdict,
};
use crate::word_oracle::{enumerate_order, EnumerationResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Parser)]
#[command(name = "coxl2", version, about = "L2-Betti numbers of Coxeter nerves and non-planarity certificates")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Worker threads for parallel stages.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse and validate a spec.
    Validate { spec: PathBuf },
    /// Print the nerve.
    Nerve { spec: PathBuf },
    /// Classify a vertex subset.
    Classify {
        spec: PathBuf,
        #[arg(long, value_delimiter = ',')]
        subset: Vec<String>,
    },
    /// Orbifold Euler characteristic.
    Chi {
        spec: PathBuf,
        /// Also compute the chain-sum oracle and compare.
        #[arg(long)]
        chain_oracle: bool,
    },
    /// L2-Betti numbers with rule provenance.
    Betti {
        spec: PathBuf,
        /// Ambient spec in which this spec is a full subcomplex.
        #[arg(long, requires = "subset")]
        ambient: Option<PathBuf>,
        /// Vertices of the ambient spec spanning this spec.
        #[arg(long, value_delimiter = ',')]
        subset: Vec<String>,
        /// Rotation system witnessing a planar embedding.
        #[arg(long)]
        embedding: Option<PathBuf>,
    },
    /// Try to certify that the nerve is not planar.
    Certify {
        spec: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cone off the faces of an embedded complex.
    Cone {
        spec: PathBuf,
        #[arg(long)]
        embedding: PathBuf,
    },
    /// Vertex-removal trace for a full subcomplex of a 2-sphere nerve.
    Trace {
        spec: PathBuf,
        #[arg(long, value_delimiter = ',')]
        subset: Vec<String>,
    },
    /// Count a parabolic subgroup by enumeration.
    Enumerate {
        spec: PathBuf,
        #[arg(long, value_delimiter = ',')]
        subset: Vec<String>,
        #[arg(long, default_value_t = 1_000_000)]
        cap: usize,
    },
    /// Classical planarity test of the 1-skeleton.
    PlanarOracle { spec: PathBuf },
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (text, String::new()) } else { (String::new(), text) };
            return Outcome { code, stdout, stderr };
        }
    };
    let result = match cli.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(e) => Err(Error::Io(e.to_string())),
        },
        None => execute(&cli),
    };
    match result {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn load_spec(path: &Path) -> Result<CoxeterSpec> {
    parse_spec(&read(path)?)
}

fn load_rotation(spec: &CoxeterSpec, path: &Path) -> Result<RotationSystem> {
    RotationSystem::parse(spec, &read(path)?)
}

fn subset(spec: &CoxeterSpec, names: &[String]) -> Result<VertexSubset> {
    spec.subset(names)
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) -> String {
    match format {
        Format::Structured => {
            let mut s = serde_json::to_string_pretty(value).expect("output serializes");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = text();
            if !s.ends_with('\n') {
                s.push('\n');
            }
            s
        }
    }
}

fn execute(cli: &Cli) -> Result<(i32, String)> {
    let f = cli.format;
    let out = match &cli.command {
        Command::Validate { spec } => {
            let s = load_spec(spec)?;
            let doc = s.to_document();
            emit(f, &doc, || {
                format!("valid: {} vertices, {} finite edges", s.len(), s.finite_edges().len())
            })
        }
        Command::Nerve { spec } => {
            let n = build_nerve(&load_spec(spec)?)?;
            let doc = n.to_document();
            emit(f, &doc, || {
                let mut s = format!("dimension {}\n", n.dimension());
                for (d, layer) in doc.simplices.iter().enumerate() {
                    let items: Vec<String> = layer.iter().map(|t| format!("{{{}}}", t.join(", "))).collect();
                    s.push_str(&format!("{d}: {}\n", items.join(" ")));
                }
                s
            })
        }
        Command::Classify { spec, subset: names } => {
            let s = load_spec(spec)?;
            let v = classify(&s, &subset(&s, names)?);
            emit(f, &v, || {
                if v.spherical {
                    format!("spherical {} order {}", v.type_name(), v.order)
                } else {
                    "not spherical".into()
                }
            })
        }
        Command::Chi { spec, chain_oracle } => {
            let n = build_nerve(&load_spec(spec)?)?;
            let chi = chi_orb(&n);
            if *chain_oracle {
                let chain = chi_orb_chain_sum(&n)?;
                let agree = chain == chi;
                let doc = json!({ "chi_orb": chi, "chain_sum": chain, "agree": agree });
                let out = emit(f, &doc, || format!("{chi}\nchain sum {chain} ({})", if agree { "agrees" } else { "MISMATCH" }));
                if !agree {
                    return Err(Error::Malformed(format!("chain-sum oracle disagrees: {chi} vs {chain}")));
                }
                out
            } else {
                emit(f, &json!({ "chi_orb": chi }), || chi.to_string())
            }
        }
        Command::Betti {
            spec,
            ambient,
            subset: names,
            embedding,
        } => {
            let s = load_spec(spec)?;
            let n = build_nerve(&s)?;
            let mut ctx = RuleContext::new();
            if let Some(a) = ambient {
                let amb = build_nerve(&load_spec(a)?)?;
                let sub = subset(amb.spec(), names)?;
                ctx = ctx.with_ambient(&n, amb, &sub)?;
            }
            if let Some(e) = embedding {
                ctx = ctx.with_embedding(&n, load_rotation(&s, e)?)?;
            }
            let b = betti(&n, &ctx)?;
            emit(f, &b, || {
                let mut out = format!("{b}\n");
                for (i, p) in b.provenance.iter().enumerate() {
                    match p {
                        Some(p) => out.push_str(&format!("beta_{i}: {} [{}] {}\n", b.entries[i], p.rule.id(), p.witness)),
                        None => out.push_str(&format!("beta_{i}: ?\n")),
                    }
                }
                out
            })
        }
        Command::Certify { spec, out } => {
            let cert = certify_nonplanar(&load_spec(spec)?);
            let code = if cert.verdict == Verdict::NotPlanar { 0 } else { 2 };
            if let Some(path) = out {
                fs::write(path, cert.to_json() + "\n").map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            }
            let text = emit(f, &cert, || {
                let mut s = format!("verdict: {:?}\nbound: {}\n", cert.verdict, cert.beta2_lower_bound);
                if let Some(r) = cert.reason {
                    s.push_str(&format!("reason: {r:?}\n"));
                }
                for c in &cert.citations {
                    let vals: Vec<String> = c.values.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    s.push_str(&format!("- {} on {}: {}\n", c.statement, c.applied_to, vals.join("; ")));
                }
                for n in &cert.notes {
                    s.push_str(&format!("note: {n}\n"));
                }
                s
            });
            return Ok((code, text));
        }
        Command::Cone { spec, embedding } => {
            let s = load_spec(spec)?;
            let n = build_nerve(&s)?;
            let done = cone_construction(&n, &load_rotation(&s, embedding)?)?;
            let doc = json!({
                "spec": done.nerve.spec().to_document(),
                "cone_vertices": done.cone_vertices,
                "chi_orb": chi_orb(&done.nerve),
            });
            emit(f, &doc, || {
                let c = done.nerve.complex();
                format!(
                    "added {} cone vertices: {}\nsphere with {} vertices, {} edges, {} triangles; chi_orb {}",
                    done.cone_vertices.len(),
                    done.cone_vertices.join(", "),
                    c.simplices(0).len(),
                    c.edges().len(),
                    c.triangles().len(),
                    chi_orb(&done.nerve)
                )
            })
        }
        Command::Trace { spec, subset: names } => {
            let n = build_nerve(&load_spec(spec)?)?;
            let t = trace_vanishing(&n, &subset(n.spec(), names)?)?;
            emit(f, &t, || {
                let mut s = format!("{}\n", t.base);
                for st in &t.steps {
                    s.push_str(&format!(
                        "remove {}: link {{{}}} full in L; {}\n",
                        st.removed,
                        st.link.vertices.join(", "),
                        st.mayer_vietoris
                    ));
                }
                for n in &t.notes {
                    s.push_str(&format!("note: {n}\n"));
                }
                s.push_str(&t.conclusion);
                s
            })
        }
        Command::Enumerate { spec, subset: names, cap } => {
            let s = load_spec(spec)?;
            let r = enumerate_order(&s, &subset(&s, names)?, *cap)?;
            emit(f, &r, || match r {
                EnumerationResult::Order(n) => n.to_string(),
                EnumerationResult::ExceedsCap => format!("exceeds cap {cap}"),
            })
        }
        Command::PlanarOracle { spec } => {
            let s = load_spec(spec)?;
            let g = Graph::from_nerve(&build_nerve(&s)?);
            let planar = brute_force_planar(&g)?;
            let rotation = if planar { planar_embedding(&g).map(|r| r.to_document(&s)) } else { None };
            emit(f, &json!({ "planar": planar, "rotation": rotation }), || {
                if planar { "planar".into() } else { "not planar".into() }
            })
        }
    };
    Ok((0, out))
}
