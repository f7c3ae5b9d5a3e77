//! `pis` — analyze prime ideal sum graphs and verify the closed-form
//! strong-metric-dimension theorems.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 when computed methods
//! (or the adjudicated formula readings) disagree.

use clap::{Parser, Subcommand, ValueEnum};
use pis_core::report::{
    analyze_text, parse_range, report_to_json, run_sweep, AnalyzeOptions, Family, SweepRow,
};
use pis_core::sdim::DEFAULT_BRUTEFORCE_CAP;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "pis", version, about = "prime ideal sum graph analyzer")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one ring spec: graph invariants, sdim by every applicable
    /// method, and formula predictions.
    Analyze {
        /// Ring spec, e.g. "Z(4) x Z(9)" or "F x F x F" or "C(3) x C(3)"
        spec: String,
        /// Write the report as JSON to this path
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write the graph in DOT format to this path
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Also run the brute-force search when the graph is small enough
        #[arg(long)]
        oracle: bool,
        /// Vertex cap for the brute-force search
        #[arg(long, default_value_t = DEFAULT_BRUTEFORCE_CAP)]
        oracle_cap: usize,
    },
    /// Sweep a family of ring specs and compare computed values against the
    /// closed-form predictions.
    Verify {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Bounds per key, e.g. "n=3..6", "n=1,m=1..3", "n=2..3,t=3..4"
        #[arg(long)]
        range: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Fields,
    Unique,
    Chainpir,
    Mixed,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Fields => Family::Fields,
            FamilyArg::Unique => Family::Unique,
            FamilyArg::Chainpir => Family::ChainPir,
            FamilyArg::Mixed => Family::Mixed,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap's own exit code for usage errors is 2; this tool
            // reserves 2 for verification mismatches
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match cli.command {
        Command::Analyze {
            spec,
            json,
            dot,
            oracle,
            oracle_cap,
        } => cmd_analyze(&spec, json, dot, oracle, oracle_cap),
        Command::Verify { family, range } => cmd_verify(family.into(), &range),
    }
}

fn cmd_analyze(
    spec: &str,
    json: Option<PathBuf>,
    dot: Option<PathBuf>,
    oracle: bool,
    oracle_cap: usize,
) -> ExitCode {
    let analysis = match analyze_text(spec, AnalyzeOptions { oracle, oracle_cap }) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let r = &analysis.report;
    println!("ring spec       : {}", r.spec);
    println!("class           : {}", r.class);
    if let Some(note) = &analysis.detail.scope_note {
        println!("note            : {note}");
    }
    println!("vertices        : {}", r.vertices);
    println!("edges           : {}", r.edges);
    println!("diameter        : {}", r.diameter);
    println!("clique number   : {}", r.clique.size);
    println!("clique witness  : {}", fmt_set(&r.clique.witness));
    println!("reduced classes : {}", r.reduced_classes);
    for m in &analysis.detail.methods {
        let name = format!("sdim ({})", m.method.name());
        match (m.value, &m.witness_labels, &m.note) {
            (Some(v), Some(w), _) => println!("{name:<16}: {v}   witness {}", fmt_set(w)),
            (_, _, Some(note)) => println!("{name:<16}: not applicable ({note})"),
            _ => {}
        }
    }
    if r.predictions.is_empty() {
        println!("predictions     : none (class not covered by a closed form)");
    } else {
        println!("predictions     :");
        for p in &r.predictions {
            println!("  {:<20} {:>6}   {}", p.formula_id, p.value, p.status);
        }
    }
    let t = &r.timings_ms;
    println!(
        "timings (ms)    : build {}, distances {}, reduction {}, clique {}, sdim {}, total {}",
        t.build, t.distances, t.reduction, t.clique, t.sdim_methods, t.total
    );

    if let Some(path) = json {
        if let Err(e) = std::fs::write(&path, report_to_json(r)) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(1);
        }
    }
    if let Some(path) = dot {
        if let Err(e) = std::fs::write(&path, analysis.pis.to_dot()) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(1);
        }
    }
    if analysis.detail.method_disagreement {
        eprintln!("error: computed methods disagree, see report");
        return ExitCode::from(2);
    }
    ExitCode::SUCCESS
}

fn cmd_verify(family: Family, range: &str) -> ExitCode {
    let range = match parse_range(range) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let rows = match run_sweep(family, &range) {
        Ok(rows) => rows,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    println!(
        "{:<22} {:<30} {:>8} {:>6}   predictions",
        "spec", "class", "vertices", "sdim"
    );
    let mut all_ok = true;
    for row in &rows {
        all_ok &= row.ok;
        print_row(row);
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        eprintln!("error: at least one prediction failed verification");
        ExitCode::from(2)
    }
}

fn fmt_set(items: &[String]) -> String {
    if items.is_empty() {
        "{}".to_string()
    } else {
        format!("{{ {} }}", items.join(", "))
    }
}

fn print_row(row: &SweepRow) {
    let sdim = row
        .sdim
        .map(|v| v.to_string())
        .unwrap_or_else(|| "-".to_string());
    let predictions = if let Some(notice) = &row.skipped {
        format!("skipped: {notice}")
    } else if row.predictions.is_empty() {
        "none".to_string()
    } else {
        row.predictions
            .iter()
            .map(|(id, value, status)| format!("{id}={value}:{status}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    println!(
        "{:<22} {:<30} {:>8} {:>6}   {predictions}",
        row.spec, row.class, row.vertices, sdim
    );
}
