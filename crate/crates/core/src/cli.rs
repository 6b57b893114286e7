//! The `coxclust` command line. [`run`] does all the work so it can be driven
//! from tests without spawning a process.

use crate::braid::{hurwitz_orbit, Factorization, OrbitOptions};
use crate::cartan::CartanData;
use crate::error::{Error, Result};
use crate::frame::{AdaptedFrame, Selection};
use crate::mutation::{algebraic_mutate, exchange_graph};
use crate::render::{
    ar_quiver_dot, exchange_graph_dot, wiring_diagram, word_quiver_dot, WiringMode,
};
use crate::rep::RepData;
use crate::root::Root;
use crate::schur::prefix_test;
use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::IteratorRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::ffi::OsString;
use std::io::Write;

#[derive(Parser, Debug)]
#[command(
    name = "coxclust",
    version,
    about = "Coxeter-group and cluster combinatorics of Dynkin and acyclic quivers"
)]
struct Cli {
    /// Dynkin type label such as A4, D4, E6, G2.
    #[arg(long = "type", global = true, conflicts_with = "quiver")]
    kind: Option<String>,
    /// Quiver description file.
    #[arg(long, global = true)]
    quiver: Option<std::path::PathBuf>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for random sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Search depth for braid-orbit searches.
    #[arg(long, global = true)]
    depth: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Positive roots, or a real-root test with --check.
    Roots {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        check: Option<Vec<i64>>,
    },
    /// The adapted word for w1 = C w0 and its root sequence.
    Word {
        /// Also show the deleted word and long word for these positions.
        #[arg(long, value_delimiter = ',')]
        positions: Option<Vec<usize>>,
    },
    /// Evaluate the four cluster conditions on a selection.
    Select {
        #[arg(long, value_delimiter = ',', required = true)]
        positions: Vec<usize>,
    },
    /// Enumerate clusters.
    Clusters {
        #[arg(long)]
        count: bool,
        /// Print this many clusters chosen at random (see --seed).
        #[arg(long)]
        sample: Option<usize>,
    },
    /// Mutate a cluster at slot k.
    Mutate {
        #[arg(long, value_delimiter = ',', required = true)]
        positions: Vec<usize>,
        #[arg(long)]
        k: usize,
    },
    /// Hurwitz orbit of a factorization (default: the simple roots reversed).
    Orbit {
        /// Roots separated by ';', coordinates by ','.
        #[arg(long, allow_hyphen_values = true)]
        roots: Option<String>,
        #[arg(long, default_value_t = 2_000_000)]
        max_size: usize,
    },
    /// Is the reflection in this root a prefix of C?
    Schur {
        #[arg(
            long,
            value_delimiter = ',',
            required = true,
            allow_hyphen_values = true
        )]
        root: Vec<i64>,
    },
    /// Draw a wiring diagram or a graph.
    Render {
        #[arg(long, value_enum)]
        what: Figure,
        #[arg(long, value_delimiter = ',')]
        positions: Option<Vec<usize>>,
        /// For wiring diagrams: the geometry listing instead of SVG.
        #[arg(long)]
        listing: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Figure {
    /// Wiring diagram, deleted letters as tangencies.
    Wiring,
    /// Wiring diagram, every letter crossed and deleted ones marked.
    WiringFull,
    /// Quiver read off the deleted word.
    WordQuiver,
    /// Knitted AR quiver.
    ArQuiver,
    /// Exchange graph of clusters.
    Exchange,
    /// Hom dimensions as JSON.
    Homs,
}

/// Runs the command line; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind::*;
            let text = e.render().to_string();
            return match e.kind() {
                DisplayHelp | DisplayVersion | DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = write!(out, "{text}");
                    if e.kind() == DisplayHelpOnMissingArgumentOrSubcommand {
                        2
                    } else {
                        0
                    }
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    match execute(&cli, out) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Domain(Error::Io(e))
    }
}

fn usage(msg: &str) -> Failure {
    Failure::Usage(msg.to_string())
}

fn load(cli: &Cli) -> std::result::Result<CartanData, Failure> {
    match (&cli.kind, &cli.quiver) {
        (Some(label), None) => Ok(CartanData::from_label(label)?),
        (None, Some(path)) => Ok(CartanData::read_quiver_file(path)?),
        _ => Err(usage("exactly one of --type or --quiver is required")),
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> std::io::Result<()> {
    let text = serde_json::to_string_pretty(value).expect("serializable");
    writeln!(out, "{text}")
}

fn parse_roots(text: &str, rank: usize) -> Result<Vec<Root>> {
    text.split(';')
        .map(|part| {
            let coords: Vec<i64> = part
                .split(',')
                .map(|x| {
                    x.trim().parse().map_err(|_| Error::Parse {
                        line: 1,
                        msg: format!("bad coordinate `{x}`"),
                    })
                })
                .collect::<Result<_>>()?;
            if coords.len() != rank {
                return Err(Error::DimensionMismatch {
                    got: coords.len(),
                    expected: rank,
                });
            }
            Ok(Root(coords))
        })
        .collect()
}

#[derive(Serialize)]
struct FrameJson<'a> {
    nu: usize,
    j_sequence: &'a [usize],
    alpha_sequence: &'a [Root],
    w0_matrix: Vec<Vec<i64>>,
}

#[derive(Serialize)]
struct SelectJson {
    cluster_tilting: Option<bool>,
    exceptional: Option<bool>,
    condition3: bool,
    reduced: bool,
}

fn execute(cli: &Cli, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    let cd = load(cli)?;
    match &cli.command {
        Command::Roots { check } => {
            if let Some(v) = check {
                let beta = Root(v.clone());
                let real = cd.is_real_root(&beta)?;
                if cli.json {
                    emit(out, &serde_json::json!({ "root": beta, "real": real }))?;
                } else {
                    writeln!(out, "{beta} {}", if real { "real" } else { "not real" })?;
                }
                return Ok(());
            }
            let roots = cd.positive_roots()?;
            if cli.json {
                emit(
                    out,
                    &serde_json::json!({ "nu": roots.len(), "positive_roots": roots }),
                )?;
            } else {
                writeln!(out, "{} positive roots", roots.len())?;
                for r in roots {
                    writeln!(out, "{r}")?;
                }
            }
        }
        Command::Word { positions } => {
            let frame = AdaptedFrame::build(&cd)?;
            let sel = positions.as_ref().map(|p| frame.selection(p)).transpose()?;
            if cli.json {
                let frame_json = FrameJson {
                    nu: frame.nu(),
                    j_sequence: frame.j_sequence().letters(),
                    alpha_sequence: frame.alpha_sequence(),
                    w0_matrix: frame.w0().rows(),
                };
                match sel {
                    None => emit(out, &frame_json)?,
                    Some(s) => emit(
                        out,
                        &serde_json::json!({
                            "frame": frame_json,
                            "deleted_word": frame.deleted_word(&s),
                            "long_word": frame.long_word(&s, 2),
                        }),
                    )?,
                }
            } else {
                writeln!(out, "nu {}", frame.nu())?;
                writeln!(out, "w0 {}", frame.w0_word())?;
                writeln!(out, "w1 {}", frame.j_sequence())?;
                let rho: Vec<String> = frame.rho().iter().map(|r| r.to_string()).collect();
                writeln!(out, "rho {}", rho.join(" "))?;
                for (t, a) in frame.alpha_sequence().iter().enumerate() {
                    writeln!(out, "{:>4} s{} {a}", t + 1, frame.letter(t + 1))?;
                }
                if let Some(s) = sel {
                    writeln!(out, "deleted {}", frame.deleted_word(&s))?;
                    writeln!(out, "long {}", frame.long_word(&s, 2).kept())?;
                }
            }
        }
        Command::Select { positions } => {
            let frame = AdaptedFrame::build(&cd)?;
            let sel = frame.selection(positions)?;
            let rep = cd
                .is_simply_laced()
                .then(|| RepData::new(&frame))
                .transpose()?;
            let verdict = SelectJson {
                cluster_tilting: rep.as_ref().map(|r| r.is_cluster_tilting(&sel)),
                exceptional: rep.as_ref().map(|r| r.is_exceptional(&sel)),
                condition3: frame.condition3(&sel),
                reduced: frame.is_reduced_w0(&sel),
            };
            if cli.json {
                emit(out, &verdict)?;
            } else {
                let show = |b: Option<bool>| b.map_or("n/a".to_string(), |b| b.to_string());
                writeln!(out, "selection      {sel}")?;
                writeln!(out, "cluster_tilting {}", show(verdict.cluster_tilting))?;
                writeln!(out, "exceptional    {}", show(verdict.exceptional))?;
                writeln!(out, "condition3     {}", verdict.condition3)?;
                writeln!(out, "reduced        {}", verdict.reduced)?;
            }
        }
        Command::Clusters { count, sample } => {
            let frame = AdaptedFrame::build(&cd)?;
            let graph = exchange_graph(&frame)?;
            let mut clusters: Vec<Selection> = graph.vertices.clone();
            clusters.sort();
            if *count {
                if cli.json {
                    emit(out, &serde_json::json!({ "count": clusters.len() }))?;
                } else {
                    writeln!(out, "{}", clusters.len())?;
                }
                return Ok(());
            }
            if let Some(m) = sample {
                let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
                let mut picked = clusters.into_iter().choose_multiple(&mut rng, *m);
                picked.sort();
                clusters = picked;
            }
            if cli.json {
                emit(out, &clusters)?;
            } else {
                for c in clusters {
                    writeln!(out, "{c} {}", frame.deleted_word(&c))?;
                }
            }
        }
        Command::Mutate { positions, k } => {
            let frame = AdaptedFrame::build(&cd)?;
            let sel = frame.selection(positions)?;
            let step = algebraic_mutate(&frame, &sel, *k)?;
            if cli.json {
                emit(out, &step)?;
            } else {
                writeln!(out, "removed  {}", step.removed)?;
                writeln!(out, "inserted {}", step.inserted)?;
                writeln!(out, "result   {} {}", step.to, frame.deleted_word(&step.to))?;
            }
        }
        Command::Orbit { roots, max_size } => {
            let base = match roots {
                Some(text) => Factorization::new(&cd, parse_roots(text, cd.rank())?)?,
                None => Factorization::simple_reversed(&cd),
            };
            let opts = OrbitOptions {
                depth_limit: cli.depth,
                max_size: *max_size,
                count_factorizations: true,
            };
            let report = hurwitz_orbit(&base, opts)?;
            if cli.json {
                emit(out, &report)?;
            } else {
                writeln!(out, "base {base}")?;
                writeln!(out, "orbit_size {}", report.orbit_size)?;
                if let Some(c) = report.factorization_count {
                    writeln!(out, "factorizations {c}")?;
                }
                if let Some(t) = report.transitive {
                    writeln!(out, "transitive {t}")?;
                }
                writeln!(out, "truncated {}", report.truncated)?;
            }
        }
        Command::Schur { root } => {
            let verdict = prefix_test(&cd, &Root(root.clone()), cli.depth)?;
            if cli.json {
                emit(out, &verdict)?;
            } else {
                writeln!(out, "{:?} (depth {})", verdict.status, verdict.depth_used)?;
                if let Some(w) = &verdict.witness_roots {
                    let parts: Vec<String> = w.iter().map(|r| r.to_string()).collect();
                    writeln!(out, "witness {}", parts.join(" "))?;
                }
            }
        }
        Command::Render {
            what,
            positions,
            listing,
        } => {
            let frame = AdaptedFrame::build(&cd)?;
            let sel = match positions {
                Some(p) => frame.selection(p)?,
                None => frame.initial_selection(),
            };
            match what {
                Figure::Wiring | Figure::WiringFull => {
                    let mode = match what {
                        Figure::Wiring => WiringMode::Deleted,
                        _ => WiringMode::Full,
                    };
                    let d = wiring_diagram(&frame, &sel, mode)?;
                    if cli.json {
                        emit(out, &d)?;
                    } else if *listing {
                        write!(out, "{}", d.geometry_listing())?;
                    } else {
                        write!(out, "{}", d.to_svg())?;
                    }
                }
                Figure::WordQuiver => {
                    if !frame.is_reduced_w0(&sel) {
                        return Err(Error::NotACluster(sel.positions().to_vec()).into());
                    }
                    let q = frame.ar_quiver_from_word(&sel);
                    if cli.json {
                        emit(out, &q)?;
                    } else {
                        write!(out, "{}", word_quiver_dot(&q))?;
                    }
                }
                Figure::ArQuiver => {
                    let rep = RepData::new(&frame)?;
                    if cli.json {
                        emit(out, rep.quiver())?;
                    } else {
                        write!(out, "{}", ar_quiver_dot(rep.quiver()))?;
                    }
                }
                Figure::Exchange => {
                    let g = exchange_graph(&frame)?;
                    if cli.json {
                        emit(out, &g)?;
                    } else {
                        write!(out, "{}", exchange_graph_dot(&g))?;
                    }
                }
                Figure::Homs => {
                    let rep = RepData::new(&frame)?;
                    emit(out, rep.homs())?;
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("coxclust").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn select_json() {
        let (code, out, _) = call(&["select", "--type", "A4", "--positions", "1,4,7,9", "--json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"cluster_tilting": true, "exceptional": true, "condition3": true, "reduced": true})
        );
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["roots"]).0, 2);
        assert_eq!(call(&["roots", "--type", "Q7"]).0, 1);
        assert_eq!(
            call(&["mutate", "--type", "A2", "--positions", "1,3", "--k", "1"]).0,
            1
        );
        assert_eq!(call(&["--help"]).0, 0);
    }
}
