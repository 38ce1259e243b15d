//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or input errors, 2 a hypothesis of a
//! checked statement is not met, 3 a checked statement is violated.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use latticework::birkhoff::{self, Poset};
use latticework::dedekind;
use latticework::dot;
use latticework::error::Error;
use latticework::extgraph::{self, ReconstructVerdict};
use latticework::factors;
use latticework::fixtures;
use latticework::io;
use latticework::lattice::Lattice;
use latticework::quiver::{self, Quiver, ThinRep};

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_HYPOTHESIS: u8 = 2;
const EXIT_VIOLATION: u8 = 3;

#[derive(Parser)]
#[command(name = "latticework", version, about = "Finite lattice computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Operations on lattice files.
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Operations on quiver representations.
    #[command(subcommand)]
    Quiver(QuiverCmd),
    /// Dedekind lattices of monotone Boolean functions.
    #[command(subcommand)]
    Dedekind(DedekindCmd),
    /// The built-in fixture corpus.
    #[command(subcommand)]
    Fixtures(FixturesCmd),
}

#[derive(Args)]
struct FileArg {
    /// Lattice JSON file.
    file: PathBuf,
    /// Machine-readable JSON output.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum LatticeCmd {
    /// Report modularity, distributivity and multiplicity-freeness.
    Check(FileArg),
    /// Print the factor classes of the cover intervals.
    Factors {
        file: PathBuf,
        /// Emit the Hasse diagram with edges colored by class.
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print the join-irreducible poset and the down-set witness map.
    Birkhoff(FileArg),
    /// Emit the lattice of down-sets of a poset file.
    Downsets {
        /// Poset JSON file.
        file: PathBuf,
        /// Emit DOT instead of lattice JSON.
        #[arg(long)]
        dot: bool,
    },
    /// Emit the Ext graph.
    Ext {
        file: PathBuf,
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Compare the Ext graph with the join-irreducible cover digraph.
    Reconstruct(FileArg),
    /// Factor the lattice along the components of the Ext graph.
    Decompose(FileArg),
}

#[derive(Subcommand)]
enum QuiverCmd {
    /// Enumerate the submodule lattice of a thin representation.
    Submodules {
        quiver: PathBuf,
        rep: PathBuf,
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Compare the submodule-lattice Ext graph with the induced quiver graph.
    Verify {
        quiver: PathBuf,
        rep: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum DedekindCmd {
    /// Print the n-th Dedekind number.
    Count {
        n: u32,
        #[arg(long)]
        json: bool,
    },
    /// Emit the Dedekind lattice of order n.
    Lattice {
        n: u32,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        dot: bool,
    },
    /// Check that the Dedekind lattice is the down-set lattice of a boolean
    /// poset.
    Verify {
        n: u32,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum FixturesCmd {
    /// Run every fixture check.
    Run {
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(classify_error(&err))
        }
    }
}

fn classify_error(err: &Error) -> u8 {
    match err {
        Error::NotModular
        | Error::NotDistributive
        | Error::NotMultiplicityFree
        | Error::QuiverNotAcyclic
        | Error::NotIndecomposable => EXIT_HYPOTHESIS,
        Error::IsoFailure(_) | Error::LabelConflict(_) => EXIT_VIOLATION,
        _ => EXIT_USAGE,
    }
}

fn dispatch(command: Command) -> Result<u8, Error> {
    match command {
        Command::Lattice(cmd) => run_lattice(cmd),
        Command::Quiver(cmd) => run_quiver(cmd),
        Command::Dedekind(cmd) => run_dedekind(cmd),
        Command::Fixtures(FixturesCmd::Run { json }) => run_fixtures(json),
    }
}

fn load_lattice(path: &Path) -> Result<Lattice, Error> {
    io::lattice_from_json(&std::fs::read_to_string(path)?)
}

fn load_poset(path: &Path) -> Result<Poset, Error> {
    io::poset_from_json(&std::fs::read_to_string(path)?)
}

fn load_quiver_rep(quiver: &Path, rep: &Path) -> Result<(Quiver, ThinRep), Error> {
    let q = Quiver::parse(&std::fs::read_to_string(quiver)?)?;
    let (m, warnings) = ThinRep::parse(&std::fs::read_to_string(rep)?, &q)?;
    for w in warnings {
        eprintln!("warning: {w}");
    }
    Ok((q, m))
}

fn run_lattice(cmd: LatticeCmd) -> Result<u8, Error> {
    match cmd {
        LatticeCmd::Check(args) => {
            let lat = load_lattice(&args.file)?;
            let modular = lat.is_modular();
            let distributive = lat.is_distributive();
            let mult_free = if modular {
                Some(factors::is_multiplicity_free(&lat)?)
            } else {
                None
            };
            if args.json {
                println!(
                    "{}",
                    json!({
                        "format": 1,
                        "elements": lat.n(),
                        "modular": modular,
                        "distributive": distributive,
                        "multiplicity_free": mult_free,
                    })
                );
            } else {
                println!("elements: {}", lat.n());
                println!("modular: {modular}");
                println!("distributive: {distributive}");
                match mult_free {
                    Some(v) => println!("multiplicity_free: {v}"),
                    None => println!("multiplicity_free: n/a (not modular)"),
                }
            }
            Ok(EXIT_OK)
        }
        LatticeCmd::Factors { file, dot, json } => {
            let lat = load_lattice(&file)?;
            let fm = factors::factor_classes(&lat)?;
            if dot {
                print!("{}", dot::lattice_dot(&lat, Some(&fm))?);
            } else if json {
                let classes: Vec<Vec<(String, String)>> = (0..fm.class_count())
                    .map(|c| {
                        fm.class_members(c)
                            .iter()
                            .map(|iv| {
                                (lat.name(iv.lower).to_string(), lat.name(iv.upper).to_string())
                            })
                            .collect()
                    })
                    .collect();
                println!("{}", json!({"format": 1, "classes": classes}));
            } else {
                for c in 0..fm.class_count() {
                    let members: Vec<String> = fm
                        .class_members(c)
                        .iter()
                        .map(|iv| format!("[{},{}]", lat.name(iv.lower), lat.name(iv.upper)))
                        .collect();
                    println!("class {c}: {}", members.join(" "));
                }
            }
            Ok(EXIT_OK)
        }
        LatticeCmd::Birkhoff(args) => {
            let lat = load_lattice(&args.file)?;
            let isom = birkhoff::birkhoff_iso(&lat)?;
            let poset = &isom.irreducibles.poset;
            if args.json {
                let covers: Vec<(String, String)> = poset
                    .covers()
                    .iter()
                    .map(|&(lo, hi)| (poset.name(lo).to_string(), poset.name(hi).to_string()))
                    .collect();
                let witness: Vec<(String, Vec<String>)> = (0..lat.n())
                    .map(|a| {
                        (
                            lat.name(a).to_string(),
                            isom.downset_of(a).ones().map(|i| poset.name(i).to_string()).collect(),
                        )
                    })
                    .collect();
                println!(
                    "{}",
                    json!({"format": 1, "poset": {"elements": poset.names(), "covers": covers}, "witness": witness})
                );
            } else {
                println!("join irreducibles: {}", poset.names().join(" "));
                for &(lo, hi) in poset.covers() {
                    println!("cover: {} < {}", poset.name(lo), poset.name(hi));
                }
                for a in 0..lat.n() {
                    let members: Vec<&str> =
                        isom.downset_of(a).ones().map(|i| poset.name(i)).collect();
                    println!("{} -> {{{}}}", lat.name(a), members.join(","));
                }
            }
            Ok(EXIT_OK)
        }
        LatticeCmd::Downsets { file, dot } => {
            let poset = load_poset(&file)?;
            let d = birkhoff::downsets(&poset)?;
            if dot {
                print!("{}", dot::lattice_dot(&d.lattice, None)?);
            } else {
                println!("{}", io::lattice_to_json(&d.lattice));
            }
            Ok(EXIT_OK)
        }
        LatticeCmd::Ext { file, dot, json } => {
            let lat = load_lattice(&file)?;
            let ext = extgraph::ext_graph(&lat)?;
            if dot {
                print!("{}", dot::digraph_dot(&ext.graph)?);
            } else if json {
                let edges: Vec<(String, String)> = ext
                    .graph
                    .edges()
                    .map(|(x, y)| (ext.graph.name(x).to_string(), ext.graph.name(y).to_string()))
                    .collect();
                println!(
                    "{}",
                    json!({"format": 1, "vertices": ext.graph.names(), "edges": edges})
                );
            } else {
                println!("vertices: {}", ext.graph.names().join(" "));
                for (x, y) in ext.graph.edges() {
                    println!("{} -> {}", ext.graph.name(x), ext.graph.name(y));
                }
            }
            Ok(EXIT_OK)
        }
        LatticeCmd::Reconstruct(args) => {
            let lat = load_lattice(&args.file)?;
            let rec = extgraph::reconstruct_check(&lat)?;
            let (verdict_name, code) = match &rec.verdict {
                ReconstructVerdict::HoldsWithIso { .. } => ("holds_with_iso", EXIT_OK),
                ReconstructVerdict::HypothesisFails { .. } => ("hypothesis_fails", EXIT_HYPOTHESIS),
                ReconstructVerdict::Counterexample { .. } => ("counterexample", EXIT_VIOLATION),
            };
            if args.json {
                let witness = match &rec.verdict {
                    ReconstructVerdict::HoldsWithIso { witness } => Some(
                        witness
                            .iter()
                            .enumerate()
                            .map(|(c, &v)| {
                                (
                                    rec.ext.graph.name(c).to_string(),
                                    rec.irreducibles.poset.name(v).to_string(),
                                )
                            })
                            .collect::<Vec<_>>(),
                    ),
                    _ => None,
                };
                println!(
                    "{}",
                    json!({"format": 1, "verdict": verdict_name, "witness": witness})
                );
            } else {
                println!("verdict: {verdict_name}");
                match &rec.verdict {
                    ReconstructVerdict::HoldsWithIso { witness } => {
                        for (c, &v) in witness.iter().enumerate() {
                            println!(
                                "class {} -> irreducible {}",
                                rec.ext.graph.name(c),
                                rec.irreducibles.poset.name(v)
                            );
                        }
                    }
                    ReconstructVerdict::HypothesisFails {
                        directed_acyclic,
                        canonical_is_iso,
                        any_iso,
                    } => {
                        println!("directed_acyclic: {directed_acyclic}");
                        println!("canonical_is_iso: {canonical_is_iso}");
                        match any_iso {
                            Some(v) => println!("any_iso: {v}"),
                            None => println!("any_iso: not attempted"),
                        }
                        print_digraph("ext graph", &rec.ext.graph);
                        print_digraph("cover digraph", &rec.cover_digraph);
                    }
                    ReconstructVerdict::Counterexample { detail } => {
                        println!("detail: {detail}");
                        print_digraph("ext graph", &rec.ext.graph);
                        print_digraph("cover digraph", &rec.cover_digraph);
                    }
                }
            }
            Ok(code)
        }
        LatticeCmd::Decompose(args) => {
            let lat = load_lattice(&args.file)?;
            let parts = extgraph::decompose(&lat)?;
            if args.json {
                let factors: Vec<serde_json::Value> = parts
                    .iter()
                    .map(|f| serde_json::from_str(&io::lattice_to_json(f)).expect("valid"))
                    .collect();
                println!("{}", json!({"format": 1, "factors": factors}));
            } else {
                println!("factors: {}", parts.len());
                for (i, f) in parts.iter().enumerate() {
                    println!("factor {i}: {} elements: {}", f.n(), f.names().join(" "));
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn print_digraph(title: &str, g: &birkhoff::Digraph) {
    println!("{title}: vertices {}", g.names().join(" "));
    for (x, y) in g.edges() {
        println!("  {} -> {}", g.name(x), g.name(y));
    }
}

fn run_quiver(cmd: QuiverCmd) -> Result<u8, Error> {
    match cmd {
        QuiverCmd::Submodules {
            quiver: qpath,
            rep: rpath,
            dot,
            json,
        } => {
            let (q, m) = load_quiver_rep(&qpath, &rpath)?;
            let sub = quiver::submodule_lattice(&q, &m)?;
            if dot {
                print!("{}", dot::lattice_dot(&sub.lattice, None)?);
            } else if json {
                println!(
                    "{}",
                    json!({
                        "format": 1,
                        "lattice": serde_json::from_str::<serde_json::Value>(&io::lattice_to_json(&sub.lattice)).expect("valid"),
                    })
                );
            } else {
                println!("{}", io::lattice_to_json(&sub.lattice));
            }
            Ok(EXIT_OK)
        }
        QuiverCmd::Verify {
            quiver: qpath,
            rep: rpath,
            json,
        } => {
            let (q, m) = load_quiver_rep(&qpath, &rpath)?;
            let cmp = quiver::compare_ext_graphs(&q, &m)?;
            if json {
                println!(
                    "{}",
                    json!({
                        "format": 1,
                        "equal": cmp.equal,
                        "support_is_tree": cmp.support_is_tree,
                        "only_in_lattice": cmp.only_in_lattice,
                        "only_in_ring": cmp.only_in_ring,
                    })
                );
            } else {
                println!("equal: {}", cmp.equal);
                println!("support_is_tree: {}", cmp.support_is_tree);
                for (a, b) in &cmp.only_in_lattice {
                    println!("only in lattice graph: {a} -> {b}");
                }
                for (a, b) in &cmp.only_in_ring {
                    println!("only in ring graph: {a} -> {b}");
                }
            }
            Ok(if !cmp.support_is_tree {
                EXIT_HYPOTHESIS
            } else if cmp.equal {
                EXIT_OK
            } else {
                EXIT_VIOLATION
            })
        }
    }
}

fn run_dedekind(cmd: DedekindCmd) -> Result<u8, Error> {
    match cmd {
        DedekindCmd::Count { n, json } => {
            let count = dedekind::count(n)?;
            if json {
                println!("{}", json!({"format": 1, "n": n, "count": count}));
            } else {
                println!("{count}");
            }
            Ok(EXIT_OK)
        }
        DedekindCmd::Lattice { n, json, dot } => {
            let lat = dedekind::dedekind_lattice(n)?;
            if dot {
                print!("{}", dot::lattice_dot(&lat, None)?);
            } else if json {
                println!(
                    "{}",
                    json!({
                        "format": 1,
                        "lattice": serde_json::from_str::<serde_json::Value>(&io::lattice_to_json(&lat)).expect("valid"),
                    })
                );
            } else {
                println!("{}", io::lattice_to_json(&lat));
            }
            Ok(EXIT_OK)
        }
        DedekindCmd::Verify { n, json } => {
            let verdict = dedekind::verify_birkhoff(n)?;
            if json {
                println!(
                    "{}",
                    json!({
                        "format": 1,
                        "n": n,
                        "lattice_size": verdict.lattice_size,
                        "irreducibles": verdict.irreducible_count,
                        "passed": verdict.passed(),
                    })
                );
            } else {
                println!("lattice size: {}", verdict.lattice_size);
                println!("join irreducibles: {}", verdict.irreducible_count);
                println!("passed: {}", verdict.passed());
            }
            Ok(if verdict.passed() {
                EXIT_OK
            } else {
                EXIT_VIOLATION
            })
        }
    }
}

fn run_fixtures(json: bool) -> Result<u8, Error> {
    let outcomes = fixtures::run_all();
    let failures = outcomes.iter().filter(|o| !o.passed()).count();
    if json {
        let list: Vec<serde_json::Value> = outcomes
            .iter()
            .map(|o| {
                json!({
                    "fixture": o.fixture,
                    "check": o.check,
                    "source": format!("{:?}", o.source),
                    "passed": o.passed(),
                    "note": o.note,
                    "error": o.error,
                })
            })
            .collect();
        println!(
            "{}",
            json!({"format": 1, "failures": failures, "checks": list})
        );
    } else {
        for o in &outcomes {
            let status = if o.passed() { "ok" } else { "FAIL" };
            print!("{status:4} {}/{}", o.fixture, o.check);
            if let Some(note) = &o.note {
                print!(" ({note})");
            }
            if let Some(err) = &o.error {
                print!(" [{err}]");
            }
            println!();
        }
        println!(
            "{} checks, {} failures",
            outcomes.len(),
            failures
        );
    }
    Ok(if failures == 0 { EXIT_OK } else { EXIT_VIOLATION })
}
