//! Command-line front end for half-rate GF(4) additive codes: conversion to
//! graph form, distance and enumerator analysis, equivalence, census
//! classification, circulant searches, and report rendering.
//!
//! Machine-readable output (CSV key,value lines or TSV records) goes to
//! stdout; human-readable tables go to stderr behind `--human`. Exit codes:
//! 0 success, 1 domain errors (including an exhausted `--stop-after`
//! budget), 2 usage errors.

mod checkpoint;
mod output;

use checkpoint::{ClassifyCheckpoint, RecordState, SearchCheckpoint};
use clap::{Args, Parser, Subcommand, ValueEnum};
use dgcode::classify::{classify_graph_codes_with, enumerate_connected_digraphs_with};
use dgcode::constructions::{
    bordered_circulant_graph, bordered_qr_code, circulant_graph, finalize_report, qr_code, qr_seed,
    scan_seed_block, seed_space,
};
use dgcode::graphform::min_distance_at_least;
use dgcode::{
    code_canonical_form, equivalent, euler_transform, to_graph_form, AdditiveCode, CensusRecord,
    Digraph, ExecMode, SearchOptions, SearchReport,
};
use output::{census_human_table, census_summary_csv, flags, parse_tsv, render_tsv, write_atomic};
use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "dgcode",
    version,
    about = "Analyze, classify, and search half-rate additive codes over GF(4)"
)]
struct Cli {
    /// Run every kernel sequentially instead of on the worker pool.
    #[arg(long, global = true)]
    sequential: bool,
    /// Worker-pool size (default: one worker per core).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..=4096))]
    threads: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a code to graph form: adjacency matrix plus the coordinates
    /// whose planes were swapped or conjugated (1-based).
    Convert(ConvertArgs),
    /// Minimum distance of the code in a generator-text file.
    Mindist(InArg),
    /// Weight distribution A_0..A_n as one comma-joined line.
    Wenum(InArg),
    /// Generator text of the dual code.
    Dual(DualArgs),
    /// Monomial equivalence of two codes: prints true or false.
    Equiv(EquivArgs),
    /// Automorphism-group order of a code.
    Aut(InArg),
    /// Classify graph codes into equivalence classes (a census).
    Classify(ClassifyArgs),
    /// Aggregate a census database into per-distance counts.
    Report(ReportArgs),
    /// Exhaustive circulant / bordered-circulant search at one length.
    Search(SearchArgs),
    /// Quadratic-residue code for an odd prime.
    Qr(QrArgs),
    /// Euler transform: class totals from indecomposable counts.
    Euler(EulerArgs),
}

#[derive(Args)]
struct InArg {
    /// Generator-text input file.
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
}

#[derive(Args)]
struct ConvertArgs {
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    /// Render an aligned adjacency matrix and coordinate sets to stderr.
    #[arg(long)]
    human: bool,
}

#[derive(Args)]
struct DualArgs {
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    /// Write the dual here (atomically) instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EquivArgs {
    /// First generator-text file.
    #[arg(long, value_name = "FILE")]
    a: PathBuf,
    /// Second generator-text file.
    #[arg(long, value_name = "FILE")]
    b: PathBuf,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Code length (the graphs' vertex count).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=32))]
    n: u64,
    /// digraph6 input, one graph per line; without it, connected graphs of
    /// order n <= 6 are enumerated internally.
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
    /// Write the census database (TSV) here; without it the TSV goes to
    /// stdout and the summary moves to stderr.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Opt in to long runs (required for n >= 6).
    #[arg(long)]
    long: bool,
    /// Checkpoint file: loaded when present, written when the --stop-after
    /// budget runs out, deleted on completion.
    #[arg(long, value_name = "FILE")]
    resume: Option<PathBuf>,
    /// Budget: stop after this many blocks and checkpoint (needs --resume).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    stop_after: Option<u64>,
    /// Render summary tables to stderr.
    #[arg(long)]
    human: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FilterKind {
    All,
    Fsd,
    Isodual,
    Selfdual,
}

#[derive(Args)]
struct ReportArgs {
    /// Census database (TSV) to aggregate.
    #[arg(long, value_name = "FILE")]
    db: PathBuf,
    /// Which classes to count.
    #[arg(long, value_enum, default_value = "all")]
    filter: FilterKind,
    /// Render aligned tables to stderr.
    #[arg(long)]
    human: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConstructionKind {
    Circulant,
    Bordered,
}

#[derive(Args)]
struct SearchArgs {
    /// Code length to search.
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..=32))]
    n: u64,
    /// Construction set to scan.
    #[arg(
        long,
        value_enum,
        value_delimiter = ',',
        default_values_t = [ConstructionKind::Circulant, ConstructionKind::Bordered]
    )]
    constructions: Vec<ConstructionKind>,
    /// Cap the distance scan at this many generator rows; distances at the
    /// cap mean "at least this".
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=33))]
    max_row_limit: Option<u64>,
    /// Write the best-code database (TSV) here.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Opt in to long runs (required for n >= 15).
    #[arg(long)]
    long: bool,
    /// Checkpoint file: loaded when present, written when the --stop-after
    /// budget runs out, deleted on completion.
    #[arg(long, value_name = "FILE")]
    resume: Option<PathBuf>,
    /// Budget: stop after this many seed blocks and checkpoint (needs
    /// --resume).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    stop_after: Option<u64>,
    /// Render a summary table to stderr.
    #[arg(long)]
    human: bool,
}

#[derive(Args)]
struct QrArgs {
    /// Odd prime modulus.
    #[arg(long)]
    p: u64,
    /// Border the circulant (length p+1 instead of p).
    #[arg(long)]
    bordered: bool,
    /// Report parameters (including the distance scan) to stderr.
    #[arg(long)]
    human: bool,
}

#[derive(Args)]
struct EulerArgs {
    /// Comma-separated counts of indecomposable classes per length.
    #[arg(long = "i", value_name = "COUNTS")]
    counts: String,
}

/// A failed run: usage errors exit 2, domain errors exit 1.
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<dgcode::Error> for Failure {
    fn from(e: dgcode::Error) -> Failure {
        Failure::Domain(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Domain(e.to_string())
    }
}

fn main() -> ExitCode {
    // Pipelines like `dgcode classify ... | head` close stdout early; die
    // on SIGPIPE like other line-oriented tools instead of panicking.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let mode = if cli.sequential {
        ExecMode::Sequential
    } else {
        ExecMode::default()
    };
    let outcome = configure_pool(cli.threads).and_then(|()| run(cli.command, mode));
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

#[cfg(feature = "parallel")]
fn configure_pool(threads: Option<u64>) -> Result<(), Failure> {
    match threads {
        None => Ok(()),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t as usize)
            .build_global()
            .map_err(|e| Failure::Domain(format!("worker pool: {e}"))),
    }
}

#[cfg(not(feature = "parallel"))]
fn configure_pool(threads: Option<u64>) -> Result<(), Failure> {
    match threads {
        None => Ok(()),
        Some(_) => Err(Failure::Usage(
            "--threads requires a build with the parallel feature".into(),
        )),
    }
}

fn run(command: Command, mode: ExecMode) -> Result<(), Failure> {
    match command {
        Command::Convert(args) => cmd_convert(args),
        Command::Mindist(args) => {
            println!("{}", read_code(&args.input)?.min_distance()?);
            Ok(())
        }
        Command::Wenum(args) => {
            let wd = read_code(&args.input)?.weight_distribution()?;
            println!("{}", join(wd.counts().iter()));
            Ok(())
        }
        Command::Dual(args) => {
            let text = read_code(&args.input)?.dual().to_text();
            match &args.out {
                Some(path) => write_atomic(path, &text)?,
                None => print!("{text}"),
            }
            Ok(())
        }
        Command::Equiv(args) => {
            let a = read_code(&args.a)?;
            let b = read_code(&args.b)?;
            let same = a.n() == b.n() && equivalent(&a, &b)?;
            println!("{same}");
            Ok(())
        }
        Command::Aut(args) => {
            println!(
                "{}",
                code_canonical_form(&read_code(&args.input)?)?.aut_order()
            );
            Ok(())
        }
        Command::Classify(args) => cmd_classify(args, mode),
        Command::Report(args) => cmd_report(args),
        Command::Search(args) => cmd_search(args, mode),
        Command::Qr(args) => cmd_qr(args),
        Command::Euler(args) => {
            let counts = parse_counts(&args.counts)?;
            println!("{}", join(euler_transform(&counts)?.iter()));
            Ok(())
        }
    }
}

fn read_code(path: &Path) -> Result<AdditiveCode, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
    AdditiveCode::from_text(&text).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn join<T: std::fmt::Display>(items: impl Iterator<Item = T>) -> String {
    items.map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn parse_counts(text: &str) -> Result<Vec<u64>, Failure> {
    text.split(',')
        .map(|part| part.trim().parse::<u64>())
        .collect::<Result<Vec<u64>, _>>()
        .map_err(|_| Failure::Usage("--i takes a comma-separated list of counts".into()))
}

fn one_based(coords: &[usize]) -> String {
    join(coords.iter().map(|&c| c + 1)).replace(',', " ")
}

fn cmd_convert(args: ConvertArgs) -> Result<(), Failure> {
    let code = read_code(&args.input)?;
    let form = to_graph_form(&code)?;
    let n = form.graph.n();
    let bit_rows: Vec<String> = form
        .graph
        .rows()
        .iter()
        .map(|&row| {
            (0..n)
                .map(|j| if row >> j & 1 != 0 { '1' } else { '0' })
                .collect()
        })
        .collect();
    println!("n,{n}");
    println!("digraph6,{}", form.graph.to_digraph6()?);
    for row in &bit_rows {
        println!("row,{row}");
    }
    println!("swaps,{}", one_based(&form.swaps));
    println!("conjugations,{}", one_based(&form.conjugations));
    if args.human {
        eprintln!("adjacency matrix ({n} vertices):");
        for row in &bit_rows {
            eprintln!("  {row}");
        }
        eprintln!(
            "swap set: {{{}}}",
            one_based(&form.swaps).replace(' ', ", ")
        );
        eprintln!(
            "conjugated coordinates: {{{}}}",
            one_based(&form.conjugations).replace(' ', ", ")
        );
    }
    Ok(())
}

/// Merges census records from independently classified blocks: union by
/// certificate, keeping the lexicographically least representative.
fn merge_records(merged: &mut BTreeMap<String, CensusRecord>, batch: Vec<CensusRecord>) {
    for record in batch {
        match merged.entry(record.cert_hex.clone()) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(record);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                debug_assert_eq!(o.get().d, record.d);
                if record.generators < o.get().generators {
                    *o.get_mut() = record;
                }
            }
        }
    }
}

fn cmd_classify(args: ClassifyArgs, mode: ExecMode) -> Result<(), Failure> {
    let n = args.n as usize;
    if n >= 6 && !args.long {
        return Err(Failure::Usage(format!(
            "a census at n = {n} is a long run; pass --long to confirm"
        )));
    }
    if args.stop_after.is_some() && args.resume.is_none() {
        return Err(Failure::Usage(
            "--stop-after needs --resume <checkpoint>".into(),
        ));
    }
    let (graphs, input_tag) = match &args.input {
        Some(path) => (read_graphs(path, n)?, path.display().to_string()),
        None => {
            if n > 6 {
                return Err(Failure::Usage(format!(
                    "no internal enumeration at n = {n} (max 6); provide --in <digraph6 file>"
                )));
            }
            (
                enumerate_connected_digraphs_with(n, mode)?,
                "internal".to_string(),
            )
        }
    };

    let mut processed = 0usize;
    let mut merged: BTreeMap<String, CensusRecord> = BTreeMap::new();
    if let Some(path) = &args.resume {
        if let Some(ck) = checkpoint::load::<ClassifyCheckpoint>(path).map_err(Failure::Domain)? {
            if ck.kind != "classify" || ck.n != n || ck.input != input_tag {
                return Err(Failure::Usage(format!(
                    "--resume {} was written by a different run (kind {}, n {}, input {})",
                    path.display(),
                    ck.kind,
                    ck.n,
                    ck.input
                )));
            }
            processed = ck.processed;
            if processed > graphs.len() {
                return Err(Failure::Domain(format!(
                    "checkpoint claims {processed} graphs processed but the input has {}",
                    graphs.len()
                )));
            }
            merge_records(
                &mut merged,
                ck.records.into_iter().map(Into::into).collect(),
            );
        }
    }

    const BLOCK: usize = 1024;
    let mut blocks_done = 0u64;
    while processed < graphs.len() {
        if args.stop_after == Some(blocks_done) {
            let path = args.resume.as_ref().expect("checked above");
            let state = ClassifyCheckpoint {
                kind: "classify".into(),
                n,
                input: input_tag.clone(),
                processed,
                records: merged.values().map(RecordState::from).collect(),
            };
            checkpoint::save(path, &state).map_err(Failure::Domain)?;
            println!("status,partial");
            println!("processed,{processed}");
            println!("total,{}", graphs.len());
            return Err(Failure::Domain(format!(
                "census budget exhausted at {processed}/{} graphs; resume with --resume {}",
                graphs.len(),
                path.display()
            )));
        }
        let end = (processed + BLOCK).min(graphs.len());
        let batch = classify_graph_codes_with(&graphs[processed..end], mode)?;
        merge_records(&mut merged, batch);
        processed = end;
        blocks_done += 1;
    }
    if let Some(path) = &args.resume {
        let _ = fs::remove_file(path);
    }

    let mut records: Vec<CensusRecord> = merged.into_values().collect();
    records.sort_by(|a, b| (a.d, &a.cert_hex).cmp(&(b.d, &b.cert_hex)));
    let tsv = render_tsv(&records);
    match &args.out {
        Some(path) => {
            write_atomic(path, &tsv)?;
            print!("{}", census_summary_csv(n, &records));
        }
        None => print!("{tsv}"),
    }
    if args.human {
        eprint!("{}", census_human_table(n, &records));
    }
    Ok(())
}

fn read_graphs(path: &Path, n: usize) -> Result<Vec<Digraph>, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
    let mut graphs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let g = Digraph::from_digraph6(line)
            .map_err(|e| Failure::Domain(format!("{} line {}: {e}", path.display(), i + 1)))?;
        if g.n() != n {
            return Err(Failure::Domain(format!(
                "{} line {}: graph has {} vertices, expected {n}",
                path.display(),
                i + 1,
                g.n()
            )));
        }
        graphs.push(g);
    }
    Ok(graphs)
}

fn cmd_report(args: ReportArgs) -> Result<(), Failure> {
    let text = fs::read_to_string(&args.db)
        .map_err(|e| Failure::Domain(format!("{}: {e}", args.db.display())))?;
    let rows =
        parse_tsv(&text).map_err(|e| Failure::Domain(format!("{}: {e}", args.db.display())))?;
    let mut counts: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for row in rows {
        let keep = match args.filter {
            FilterKind::All => true,
            FilterKind::Fsd => row.formally_self_dual,
            FilterKind::Isodual => row.isodual,
            FilterKind::Selfdual => row.self_dual,
        };
        if keep {
            *counts.entry((row.n, row.d)).or_insert(0) += 1;
        }
    }
    for (&(n, d), &count) in &counts {
        println!("{n},{d},{count}");
    }
    if args.human {
        let mut by_n: BTreeMap<usize, Vec<(usize, u64)>> = BTreeMap::new();
        for (&(n, d), &count) in &counts {
            by_n.entry(n).or_default().push((d, count));
        }
        for (n, cells) in by_n {
            let total: u64 = cells.iter().map(|&(_, c)| c).sum();
            let parts: Vec<String> = cells.iter().map(|&(d, c)| format!("d={d}: {c}")).collect();
            eprintln!("n={n}: total {total} ({})", parts.join(", "));
        }
    }
    Ok(())
}

fn search_options(args: &SearchArgs) -> SearchOptions {
    SearchOptions {
        circulants: args.constructions.contains(&ConstructionKind::Circulant),
        bordered: args.constructions.contains(&ConstructionKind::Bordered),
        max_row_limit: args.max_row_limit.map(|w| w as usize),
    }
}

fn cmd_search(args: SearchArgs, mode: ExecMode) -> Result<(), Failure> {
    let n = args.n as usize;
    if n >= 15 && !args.long {
        return Err(Failure::Usage(format!(
            "a search at n = {n} is a long run; pass --long to confirm"
        )));
    }
    if args.stop_after.is_some() && args.resume.is_none() {
        return Err(Failure::Usage(
            "--stop-after needs --resume <checkpoint>".into(),
        ));
    }
    let opts = search_options(&args);
    let total = seed_space(n, &opts)?;

    let mut next = 0u64;
    let mut best = 1usize;
    let mut survivors: Vec<u64> = Vec::new();
    if let Some(path) = &args.resume {
        if let Some(ck) = checkpoint::load::<SearchCheckpoint>(path).map_err(Failure::Domain)? {
            let same = ck.kind == "search"
                && ck.n == n
                && ck.circulants == opts.circulants
                && ck.bordered == opts.bordered
                && ck.max_row_limit == opts.max_row_limit;
            if !same || ck.next_index > total || ck.best == 0 {
                return Err(Failure::Usage(format!(
                    "--resume {} was written by a different search",
                    path.display()
                )));
            }
            next = ck.next_index;
            best = ck.best;
            survivors = ck.survivors;
        }
    }

    let block = 4096u64.max(total >> 6);
    let mut blocks_done = 0u64;
    while next < total {
        if args.stop_after == Some(blocks_done) {
            let path = args.resume.as_ref().expect("checked above");
            let state = SearchCheckpoint {
                kind: "search".into(),
                n,
                circulants: opts.circulants,
                bordered: opts.bordered,
                max_row_limit: opts.max_row_limit,
                next_index: next,
                best,
                survivors,
            };
            checkpoint::save(path, &state).map_err(Failure::Domain)?;
            println!("status,partial");
            println!("next_index,{next}");
            println!("total,{total}");
            println!("best_so_far,{best}");
            return Err(Failure::Domain(format!(
                "search budget exhausted at seed {next}/{total}; resume with --resume {}",
                path.display()
            )));
        }
        let len = block.min(total - next);
        let (d, seeds) = scan_seed_block(n, &opts, next, len, best, mode)?;
        if d > best {
            best = d;
            survivors = seeds;
        } else {
            survivors.extend(seeds);
        }
        next += len;
        blocks_done += 1;
    }
    let report = finalize_report(n, &opts, best, &survivors, total, mode)?;
    if let Some(path) = &args.resume {
        let _ = fs::remove_file(path);
    }
    print_search_report(&report, args.out.as_deref(), args.human)
}

fn print_search_report(
    report: &SearchReport,
    out: Option<&Path>,
    human: bool,
) -> Result<(), Failure> {
    let mut kinds = Vec::new();
    if report.options.circulants {
        kinds.push("circulant");
    }
    if report.options.bordered {
        kinds.push("bordered");
    }
    println!("n,{}", report.n);
    println!("constructions,{}", kinds.join(" "));
    if let Some(w) = report.options.max_row_limit {
        println!("max_row_limit,{w}");
    }
    println!("best_distance,{}", report.best_distance);
    println!("classes,{}", report.hits.len());
    println!("self_dual,{}", report.self_dual_count);
    println!("seeds_scanned,{}", report.seeds_scanned);
    for hit in &report.hits {
        let construction = if hit.bordered {
            "bordered"
        } else {
            "circulant"
        };
        let gens = generator_rows(&hit.code);
        println!(
            "hit,{},{},{},{construction},{},{gens}",
            hit.cert_hex, hit.aut_order, hit.self_dual, hit.seed
        );
    }
    if let Some(path) = out {
        let mut tsv = String::new();
        for hit in &report.hits {
            tsv.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\n",
                report.n,
                report.best_distance,
                // Circulant-family codes are always isodual, hence also
                // formally self-dual.
                flags(hit.self_dual, true, true),
                hit.cert_hex,
                generator_rows(&hit.code)
            ));
        }
        write_atomic(path, &tsv)?;
    }
    if human {
        eprintln!(
            "length {} search over {} seeds: best d = {}, {} classes, {} self-dual",
            report.n,
            report.seeds_scanned,
            report.best_distance,
            report.hits.len(),
            report.self_dual_count
        );
        for hit in &report.hits {
            eprintln!(
                "  {} seed {}  aut {}{}",
                if hit.bordered {
                    "bordered "
                } else {
                    "circulant"
                },
                hit.seed,
                hit.aut_order,
                if hit.self_dual { "  self-dual" } else { "" }
            );
        }
    }
    Ok(())
}

fn generator_rows(code: &AdditiveCode) -> String {
    code.to_text().lines().skip(1).collect::<Vec<_>>().join(";")
}

fn cmd_qr(args: QrArgs) -> Result<(), Failure> {
    let seed = qr_seed(args.p)?;
    let code = if args.bordered {
        bordered_qr_code(args.p)?
    } else {
        qr_code(args.p)?
    };
    print!("{}", code.to_text());
    if args.human {
        let (graph, fixed) = if args.bordered {
            (bordered_circulant_graph(&seed)?, 1)
        } else {
            (circulant_graph(&seed), 0)
        };
        let n = code.n();
        let mut d = 1;
        while d < n / 2 + 1 && min_distance_at_least(&graph, d + 1, Some(fixed)) {
            d += 1;
        }
        eprintln!(
            "p={} n={n} codewords=2^{n} d={d} self_dual={}",
            args.p,
            code.is_self_dual()?
        );
    }
    Ok(())
}
