use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, ValueEnum};
use serde::Serialize;

use idealis::graph::minimal_vertex_covers;
use idealis::lab::{
    suite_reproduce, verify_colon_chain, verify_neighbor_bound, SuiteConfig, SuiteReport, CRITERIA, DEFAULT_SEED,
};
use idealis::quotients::{
    check_linear_quotients_order, cover_power_order, find_linear_quotients, CertificateJson, OrderCheck,
    SearchOutcome,
};
use idealis::resolution::{betti_table_with, is_componentwise_linear, BettiOptions, DEFAULT_LATTICE_CAP};
use idealis::{cover_ideal, edge_ideal, recognize_c4_2k2, Field, Graph, LinearQuotientsCertificate, MonomialIdeal};
use idealis::{OrderedGenerators, Recognition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Command {
    /// Decide (C4, 2K2)-freeness and print the partition.
    Recognize,
    /// List the minimal vertex covers.
    Covers,
    /// Graded Betti table.
    Betti,
    /// Castelnuovo-Mumford regularity.
    Reg,
    /// Minimal generators of a power.
    Power,
    /// Colon ideal by a monomial, after taking `--power`.
    Colon,
    /// Whether the ideal has a linear resolution.
    Linres,
    /// Search for (or check, with `--order`) a linear quotients order.
    Linquo,
    /// Replay a certificate against an ideal.
    Replay,
    /// The explicit linear quotients order on a cover ideal power.
    Coverpow,
    /// Check the ordered colon chain of an edge ideal power.
    VerifyChain,
    /// Check the neighbourhood regularity bound at every vertex.
    NeighborBound,
    /// Run every reproduction suite.
    Reproduce,
}

/// Combinatorics and homological algebra for (C4, 2K2)-free graphs.
///
/// Exit status: 0 on success, 2 on a mathematical negative, 1 on error.
#[derive(Debug, Parser)]
#[command(name = "idealis", version)]
struct Cli {
    command: Command,
    /// Graph in edge-list form.
    #[arg(long, conflicts_with = "ideal")]
    graph: Option<PathBuf>,
    /// Monomial ideal in text form.
    #[arg(long)]
    ideal: Option<PathBuf>,
    /// Use the cover ideal of `--graph` instead of its edge ideal.
    #[arg(long)]
    cover: bool,
    #[arg(long, default_value_t = 1)]
    power: u32,
    /// Monomial to take the colon by.
    #[arg(long)]
    by: Option<String>,
    /// Generator order, one monomial per line.
    #[arg(long)]
    order: Option<PathBuf>,
    /// Certificate JSON for `replay`.
    #[arg(long)]
    cert: Option<PathBuf>,
    /// `q` or `gf<p>`.
    #[arg(long, default_value = "q")]
    field: Field,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Small corpora for `reproduce`.
    #[arg(long)]
    quick: bool,
    /// Also test componentwise linearity in `linres`.
    #[arg(long)]
    componentwise: bool,
    /// Write the JSON result here.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Lcm-lattice size cap.
    #[arg(long, default_value_t = DEFAULT_LATTICE_CAP)]
    cap: usize,
}

enum Outcome {
    Positive,
    Negative,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Positive) => ExitCode::SUCCESS,
        Ok(Outcome::Negative) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write_json<T: Serialize>(cli: &Cli, value: &T) -> Result<()> {
    if let Some(path) = &cli.json {
        let text = serde_json::to_string_pretty(value)?;
        fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn graph(cli: &Cli) -> Result<Graph> {
    let Some(path) = &cli.graph else {
        bail!("this command needs --graph");
    };
    Ok(Graph::parse(&read(path)?)?)
}

/// The input ideal: `--ideal`, or the edge or cover ideal of `--graph`.
fn base_ideal(cli: &Cli) -> Result<MonomialIdeal> {
    if let Some(path) = &cli.ideal {
        return Ok(MonomialIdeal::parse(&read(path)?)?);
    }
    let g = graph(cli).context("this command needs --ideal or --graph")?;
    if cli.cover {
        Ok(cover_ideal(&g)?)
    } else {
        Ok(edge_ideal(&g))
    }
}

fn powered(cli: &Cli) -> Result<MonomialIdeal> {
    let i = base_ideal(cli)?;
    Ok(if cli.power == 1 { i } else { i.power(cli.power)? })
}

fn options(cli: &Cli) -> BettiOptions {
    BettiOptions {
        field: cli.field,
        cap: cli.cap,
        ..Default::default()
    }
}

fn verdict(positive: bool) -> Outcome {
    if positive {
        Outcome::Positive
    } else {
        Outcome::Negative
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    match cli.command {
        Command::Recognize => recognize(cli),
        Command::Covers => {
            let g = graph(cli)?;
            let covers: Vec<Vec<String>> = minimal_vertex_covers(&g)
                .into_iter()
                .map(|c| c.iter().map(|v| g.label(v).to_string()).collect())
                .collect();
            for c in &covers {
                println!("{}", c.join(" "));
            }
            write_json(cli, &covers)?;
            Ok(Outcome::Positive)
        }
        Command::Betti => {
            let table = betti_table_with(&powered(cli)?, &options(cli))?;
            print!("{table}");
            write_json(cli, &table.to_json())?;
            Ok(Outcome::Positive)
        }
        Command::Reg => {
            let table = betti_table_with(&powered(cli)?, &options(cli))?;
            println!("{}", table.regularity());
            write_json(cli, &table.to_json())?;
            Ok(Outcome::Positive)
        }
        Command::Power => {
            let i = powered(cli)?;
            print!("{}", i.to_text());
            write_json(cli, &i.to_json())?;
            Ok(Outcome::Positive)
        }
        Command::Colon => {
            let Some(by) = &cli.by else {
                bail!("colon needs --by");
            };
            let i = powered(cli)?;
            let m = i.ring().parse_monomial(by)?;
            let c = i.colon(&m)?;
            print!("{}", c.to_text());
            write_json(cli, &c.to_json())?;
            Ok(Outcome::Positive)
        }
        Command::Linres => {
            let i = powered(cli)?;
            let table = betti_table_with(&i, &options(cli))?;
            let linear = table.is_linear();
            println!("linear resolution: {}", if linear { "yes" } else { "no" });
            let mut ok = linear;
            if cli.componentwise {
                let cw = is_componentwise_linear(&i, cli.field)?;
                println!("componentwise linear: {}", if cw { "yes" } else { "no" });
                ok = cw;
            }
            write_json(cli, &table.to_json())?;
            Ok(verdict(ok))
        }
        Command::Linquo => linquo(cli),
        Command::Replay => {
            let Some(path) = &cli.cert else {
                bail!("replay needs --cert");
            };
            let i = powered(cli)?;
            let j: CertificateJson = serde_json::from_str(&read(path)?)?;
            let cert = LinearQuotientsCertificate::from_json(&j, Some(i.ring()))?;
            let mut sorted = cert.order().to_vec();
            sorted.sort();
            let ok = cert.replay() && sorted == i.gens();
            println!("certificate: {}", if ok { "valid" } else { "invalid" });
            Ok(verdict(ok))
        }
        Command::Coverpow => {
            let g = graph(cli)?;
            let p = recognize_c4_2k2(&g)
                .into_partition()
                .context("the graph is not (C4, 2K2)-free")?;
            let order = cover_power_order(&g, &p, cli.power)?;
            report_order(cli, &order)
        }
        Command::VerifyChain => {
            let report = verify_colon_chain(&graph(cli)?, cli.power)?;
            finish_report(cli, &report)
        }
        Command::NeighborBound => {
            let report = verify_neighbor_bound(&graph(cli)?)?;
            finish_report(cli, &report)
        }
        Command::Reproduce => {
            let cfg = if cli.quick { SuiteConfig::quick() } else { SuiteConfig::default() };
            let report = suite_reproduce(cli.seed, &cfg);
            for name in CRITERIA.iter().chain(["colon-chain"].iter()) {
                let mine: Vec<_> = report
                    .cases
                    .iter()
                    .filter(|c| c.id.starts_with(&format!("{name}/")) || c.id.contains(&format!("/{name}/")))
                    .collect();
                let failed = mine.iter().filter(|c| !c.pass).count();
                println!(
                    "{name}: {} ({}/{})",
                    if failed == 0 { "PASS" } else { "FAIL" },
                    mine.len() - failed,
                    mine.len()
                );
            }
            finish_report(cli, &report)
        }
    }
}

fn recognize(cli: &Cli) -> Result<Outcome> {
    let g = graph(cli)?;
    match recognize_c4_2k2(&g) {
        Recognition::Free(p) => {
            let labels = p.labelled(&g);
            println!("(C4, 2K2)-free");
            println!("V1: {}", labels.v1.join(" "));
            println!("V2: {}", labels.v2.join(" "));
            println!("V3: {}", labels.v3.join(" "));
            write_json(cli, &serde_json::json!({ "free": true, "partition": labels }))?;
            Ok(Outcome::Positive)
        }
        Recognition::Obstructed { pattern, witness } => {
            let w: Vec<&str> = witness.iter().map(|v| g.label(v)).collect();
            println!("not (C4, 2K2)-free: induced {pattern:?} on {}", w.join(" "));
            write_json(
                cli,
                &serde_json::json!({ "free": false, "pattern": format!("{pattern:?}"), "witness": w }),
            )?;
            Ok(Outcome::Negative)
        }
    }
}

fn linquo(cli: &Cli) -> Result<Outcome> {
    let i = powered(cli)?;
    if let Some(path) = &cli.order {
        let order = read(path)?
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| i.ring().parse_monomial(l))
            .collect::<Result<Vec<_>, _>>()?;
        let og = OrderedGenerators::new(i, order, idealis::algebra::Provenance::UserGiven)?;
        return report_order(cli, &og);
    }
    match find_linear_quotients(&i)? {
        SearchOutcome::Found(c) => {
            let j = c.to_json();
            println!("{}", serde_json::to_string_pretty(&j)?);
            write_json(cli, &j)?;
            Ok(Outcome::Positive)
        }
        SearchOutcome::NoneExists => {
            println!("no order of the generators has linear quotients");
            Ok(Outcome::Negative)
        }
    }
}

fn report_order(cli: &Cli, og: &OrderedGenerators) -> Result<Outcome> {
    match check_linear_quotients_order(og) {
        OrderCheck::Certified(c) => {
            let j = c.to_json();
            println!("{}", serde_json::to_string_pretty(&j)?);
            write_json(cli, &j)?;
            Ok(Outcome::Positive)
        }
        OrderCheck::Failed { step, witness } => {
            println!(
                "order fails at step {step}: {} is a minimal generator of the colon",
                og.ideal().show(&witness)
            );
            Ok(Outcome::Negative)
        }
    }
}

fn finish_report(cli: &Cli, report: &SuiteReport) -> Result<Outcome> {
    for c in report.failures() {
        println!("FAIL {}: computed {} expected {}", c.id, c.computed, c.expected);
    }
    println!("{}: {} passed, {} failed", report.suite, report.passed, report.failed);
    write_json(cli, report)?;
    Ok(verdict(report.all_pass()))
}
