//! Command-line front end: load and validate lattices, run analyses,
//! emit reports and DOT diagrams, drive the free-lattice engine, and run
//! the lemma verification suite.
//!
//! Exit codes: 0 success (and, for check-style verbs, the property
//! holds), 1 failed check, 2 usage error, 3 invalid input.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use sdlat::analysis::{
    analyze, breadth, breadth_by_definition, duality_lemma_check, find_c_cycles,
    find_crown, is_dismantlable, is_sd, is_sd_meet, kappa_map, kappa_bijection_iff_sd,
    max_upper_cover_degree, CrownOrder,
};
use sdlat::construct::{catalog, catalog_list, day_double, snake};
use sdlat::freelattice::{s0_terms, verify_embedding, TermStore};
use sdlat::io::{read_json, to_dot, write_json};
use sdlat::lattice::{enumerate_lattices, enumerate_lattices_topdown};
use sdlat::minpairs::{find_crowned_cycles, find_mp_cycles, MpCycle, PairForm};
use sdlat::FiniteLattice;

#[derive(Parser)]
#[command(name = "sdlat", version, about = "Finite lattice structure analysis")]
struct Cli {
    /// Emit machine-readable JSON instead of tables.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized property suites; current verbs are
    /// deterministic and ignore it.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a lattice file.
    Validate { file: String },
    /// Run the full analysis and print the report.
    Analyze { file: String },
    /// Print the kappa assignment on join irreducibles.
    Kappa { file: String },
    /// List all C-cycles (requires a semidistributive lattice).
    Cycles { file: String },
    /// List cycles of minimal pairs.
    #[command(name = "minimal-pairs")]
    MinimalPairs {
        file: String,
        /// Longest cycle length to search.
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// List crowned cycles of minimal pairs.
    Crowned { file: String },
    /// Emit the snake lattice S_n.
    Snake { n: usize },
    /// Double an interval [u, v] of the input lattice.
    Double {
        file: String,
        /// Interval bounds as two element ids, e.g. 2,5
        #[arg(long)]
        interval: String,
    },
    /// Catalog of named example lattices.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Enumerate all lattices of a given size up to isomorphism.
    Enumerate { n: usize },
    /// Emit the Hasse diagram in DOT format.
    Dot { file: String },
    /// Free-lattice term engine.
    Fl {
        #[command(subcommand)]
        action: FlAction,
    },
    /// Verification suites.
    Check {
        #[command(subcommand)]
        action: CheckAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Get { name: String },
}

#[derive(Subcommand)]
enum FlAction {
    /// Decide s ≤ t in the free lattice.
    Leq { s: String, t: String },
    /// Print the canonical form of a term.
    Canon { term: String },
    /// Verify the S_0 term table against the catalog lattice.
    #[command(name = "verify-s0")]
    VerifyS0,
}

#[derive(Subcommand)]
enum CheckAction {
    /// Run the lemma suite over all lattices up to a given size.
    Lemmas(LemmaArgs),
}

#[derive(Args)]
struct LemmaArgs {
    #[arg(long, default_value_t = 7)]
    max_size: usize,
}

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_BAD_INPUT: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let _ = cli.seed;
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_BAD_INPUT)
        }
    }
}

fn load(path: &str) -> Result<FiniteLattice, String> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| e.to_string())?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?
    };
    read_json(&text).map_err(|e| format!("{path}: {e}"))
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Validate { file } => {
            let l = load(file)?;
            if cli.json {
                println!(
                    "{}",
                    json!({"valid": true, "n": l.size(), "covers": l.covers().len()})
                );
            } else {
                println!(
                    "valid lattice: {} elements, {} covers, bottom {}, top {}",
                    l.size(),
                    l.covers().len(),
                    l.label(l.bottom()),
                    l.label(l.top())
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Analyze { file } => {
            let l = load(file)?;
            let report = analyze(&l);
            if cli.json {
                println!("{}", serde_json::to_string(&report).unwrap());
            } else {
                print_report(&l, &report);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Kappa { file } => {
            let l = load(file)?;
            let km = kappa_map(&l);
            if cli.json {
                println!(
                    "{}",
                    json!({"pairs": km.pairs, "complete": km.complete})
                );
            } else {
                for (j, k) in &km.pairs {
                    match k {
                        Some(k) => println!("kappa({}) = {}", l.label(*j), l.label(*k)),
                        None => println!("kappa({}) undefined", l.label(*j)),
                    }
                }
                println!("complete: {}", km.complete);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Cycles { file } => {
            let l = load(file)?;
            let cycles = find_c_cycles(&l).map_err(|e| e.to_string())?;
            if cli.json {
                let arr: Vec<_> = cycles
                    .iter()
                    .map(|c| {
                        json!({
                            "nodes": c.nodes,
                            "labels": c.labels.iter().map(|s| match (s.a, s.b) {
                                (true, true) => "AB",
                                (true, false) => "A",
                                _ => "B",
                            }).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                println!("{}", json!(arr));
            } else if cycles.is_empty() {
                println!("no C-cycles");
            } else {
                for c in &cycles {
                    let steps: Vec<String> = c.nodes.iter().map(|&x| l.label(x)).collect();
                    println!("cycle: {}", steps.join(" C "));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::MinimalPairs { file, max_n } => {
            let l = load(file)?;
            let cap = max_n.unwrap_or_else(|| l.size());
            let cycles = find_mp_cycles(&l, cap);
            print_mp_cycles(cli.json, &l, &cycles);
            Ok(ExitCode::SUCCESS)
        }
        Command::Crowned { file } => {
            let l = load(file)?;
            let cycles = find_crowned_cycles(&l);
            print_mp_cycles(cli.json, &l, &cycles);
            Ok(ExitCode::SUCCESS)
        }
        Command::Snake { n } => {
            println!("{}", write_json(&snake(*n)));
            Ok(ExitCode::SUCCESS)
        }
        Command::Double { file, interval } => {
            let l = load(file)?;
            let (u, v) = parse_interval(interval)?;
            let doubled = day_double(&l, u, v).map_err(|e| e.to_string())?;
            println!("{}", write_json(&doubled));
            Ok(ExitCode::SUCCESS)
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                for name in catalog_list() {
                    if cli.json {
                        println!("{}", json!(name));
                    } else {
                        let entry = catalog(name).unwrap();
                        println!(
                            "{name}: {} elements — {}",
                            entry.lattice.size(),
                            entry.provenance
                        );
                    }
                }
                Ok(ExitCode::SUCCESS)
            }
            CatalogAction::Get { name } => {
                let entry = catalog(name).map_err(|e| e.to_string())?;
                println!("{}", write_json(&entry.lattice));
                Ok(ExitCode::SUCCESS)
            }
        },
        Command::Enumerate { n } => {
            let all = enumerate_lattices(*n).map_err(|e| e.to_string())?;
            if cli.json {
                for l in &all {
                    println!("{}", write_json(l));
                }
            } else {
                println!("{} lattices with {n} elements up to isomorphism", all.len());
                for l in &all {
                    println!("covers: {:?}", l.covers());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Dot { file } => {
            let l = load(file)?;
            print!("{}", to_dot(&l));
            Ok(ExitCode::SUCCESS)
        }
        Command::Fl { action } => run_fl(cli, action),
        Command::Check { action } => match action {
            CheckAction::Lemmas(args) => run_lemmas(args.max_size),
        },
    }
}

fn parse_interval(text: &str) -> Result<(usize, usize), String> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("interval must be two ids like 2,5 (got {text:?})"));
    }
    let u = parts[0].trim().parse::<usize>().map_err(|e| e.to_string())?;
    let v = parts[1].trim().parse::<usize>().map_err(|e| e.to_string())?;
    Ok((u, v))
}

fn mp_cycle_json(c: &MpCycle) -> serde_json::Value {
    json!({
        "pairs": c.pairs.iter().map(|p| json!({
            "p": p.point,
            "J": p.cover.iter().collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "forms": c.forms.iter().map(|f| match f {
            Some(PairForm::A) => json!("A"),
            Some(PairForm::B) => json!("B"),
            None => json!(null),
        }).collect::<Vec<_>>(),
        "fruitful_count": c.fruitful_count,
        "crowned": c.crowned,
    })
}

fn print_mp_cycles(as_json: bool, l: &FiniteLattice, cycles: &[MpCycle]) {
    if as_json {
        let arr: Vec<_> = cycles.iter().map(mp_cycle_json).collect();
        println!("{}", json!(arr));
        return;
    }
    if cycles.is_empty() {
        println!("no cycles of minimal pairs");
        return;
    }
    for c in cycles {
        let pairs: Vec<String> = c
            .pairs
            .iter()
            .map(|p| {
                let cover: Vec<String> = p.cover.iter().map(|&x| l.label(x)).collect();
                format!("<{}; {{{}}}>", l.label(p.point), cover.join(", "))
            })
            .collect();
        println!(
            "n={} fruitful={}{}: {}",
            c.pairs.len(),
            c.fruitful_count,
            if c.crowned { " crowned" } else { "" },
            pairs.join(" ")
        );
    }
}

fn print_report(l: &FiniteLattice, r: &sdlat::analysis::AnalysisReport) {
    let name = |x: usize| l.label(x);
    let check = |label: &str, c: &sdlat::analysis::CheckReport| {
        match &c.witness {
            None => println!("{label}: true"),
            Some(w) => {
                let ws: Vec<String> = w.iter().map(|&x| name(x)).collect();
                println!("{label}: false  (witness {})", ws.join(", "));
            }
        }
    };
    check("sd_join", &r.sd_join);
    check("sd_meet", &r.sd_meet);
    check("whitman", &r.whitman);
    let kap: Vec<String> = r
        .kappa
        .iter()
        .map(|(j, k)| match k {
            Some(k) => format!("{}->{}", name(*j), name(*k)),
            None => format!("{}->?", name(*j)),
        })
        .collect();
    println!("kappa: {}", if kap.is_empty() { "(empty)".into() } else { kap.join(" ") });
    match r.breadth {
        Some(b) => println!("breadth: {b}"),
        None => println!("breadth: undefined"),
    }
    println!("max_cover_degree: {}", r.max_cover_degree);
    match &r.crown {
        Some(c) => {
            let cs: Vec<String> = c.iter().map(|&x| name(x)).collect();
            println!("crown: {}", cs.join(", "));
        }
        None => println!("crown: none"),
    }
    println!("dismantlable: {}", r.dismantlable);
    println!("planar: {}", r.planar);
    match &r.c_cycles {
        None => println!("c_cycles: not semidistributive"),
        Some(cs) if cs.is_empty() => println!("c_cycles: none"),
        Some(cs) => println!("c_cycles: {}", cs.len()),
    }
    match &r.sparse_witness {
        Some(w) => {
            let ws: Vec<String> = w.iter().map(|&x| name(x)).collect();
            println!("sparse_witness: {}", ws.join(", "));
        }
        None => println!("sparse_witness: none"),
    }
}

fn run_fl(cli: &Cli, action: &FlAction) -> Result<ExitCode, String> {
    let mut store = TermStore::new();
    match action {
        FlAction::Leq { s, t } => {
            let a = store.parse(s).map_err(|e| e.to_string())?;
            let b = store.parse(t).map_err(|e| e.to_string())?;
            let holds = store.leq(a, b);
            if cli.json {
                println!("{}", json!({"leq": holds}));
            } else {
                println!("{holds}");
            }
            Ok(ExitCode::SUCCESS)
        }
        FlAction::Canon { term } => {
            let t = store.parse(term).map_err(|e| e.to_string())?;
            let c = store.canonical(t);
            println!("{}", store.render(c));
            Ok(ExitCode::SUCCESS)
        }
        FlAction::VerifyS0 => {
            let table = s0_terms(&mut store);
            let target = catalog("s0").unwrap().lattice;
            let verdict = verify_embedding(&mut store, &table, &target);
            if verdict.success() {
                println!("s0 term table: closed under join and meet, order isomorphic");
                Ok(ExitCode::SUCCESS)
            } else {
                let diag = json!({
                    "closed": verdict.closed(),
                    "closure_failures": verdict.closure_failures.iter()
                        .map(|(a, b, op)| json!([a, b, op])).collect::<Vec<_>>(),
                    "order_mismatches": verdict.order_mismatches,
                    "label_errors": verdict.label_errors,
                });
                println!("{diag}");
                Ok(ExitCode::from(EXIT_CHECK_FAILED))
            }
        }
    }
}

/// The lemma suite: exhaustive verification over all lattices up to
/// `max_size` elements, one line per lemma.
fn run_lemmas(max_size: usize) -> Result<ExitCode, String> {
    if max_size < 2 || max_size > 8 {
        return Err("lemma suite supports sizes 2..=8".into());
    }
    let mut all_ok = true;
    let mut lemma = |name: &str, ok: bool| {
        println!("[{}] {name}", if ok { "PASS" } else { "FAIL" });
        all_ok &= ok;
    };

    let mut counts_agree = true;
    let mut kappa_iff_sd = true;
    let mut lemma_22 = true;
    let mut lemma_23 = true;
    let mut lemma_24 = true;
    let mut lemma_26 = true;
    let mut duality = true;
    let mut no_two_cycles = true;

    for n in 2..=max_size {
        let up = enumerate_lattices(n).map_err(|e| e.to_string())?;
        let down = enumerate_lattices_topdown(n).map_err(|e| e.to_string())?;
        counts_agree &= up.len() == down.len();
        for l in &up {
            kappa_iff_sd &= kappa_bijection_iff_sd(l);
            let b = breadth(l).map_err(|e| e.to_string())?;
            let b_oracle = breadth_by_definition(l).map_err(|e| e.to_string())?;
            let crown6 = find_crown(l, CrownOrder::Exactly(6)).is_some();
            let crown_any = find_crown(l, CrownOrder::Any).is_some();
            lemma_22 &= (b_oracle <= 2) == !crown6;
            lemma_23 &= is_dismantlable(l) == !crown_any;
            if is_sd(l) {
                lemma_24 &= is_dismantlable(l) == (b_oracle <= 2);
                duality &= duality_lemma_check(l).map_err(|e| e.to_string())?;
                no_two_cycles &= find_c_cycles(l)
                    .map_err(|e| e.to_string())?
                    .iter()
                    .all(|c| c.nodes.len() != 2);
            }
            if is_sd_meet(l) {
                lemma_26 &= b_oracle == max_upper_cover_degree(l);
            }
            counts_agree &= b == b_oracle;
        }
    }
    lemma("enumeration methods agree and breadth matches its oracle", counts_agree);
    lemma("kappa bijections exist exactly on semidistributive lattices", kappa_iff_sd);
    lemma("breadth at most two iff no crown of order six", lemma_22);
    lemma("dismantlable iff crown-free", lemma_23);
    lemma("semidistributive: dismantlable iff breadth at most two", lemma_24);
    lemma("meet semidistributive: breadth equals max covering degree", lemma_26);
    lemma("duality of the A and B relations under kappa", duality);
    lemma("no C-cycles of length two", no_two_cycles);

    Ok(if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK_FAILED)
    })
}
