//! `ctn` — classify, scan, sieve, and verify census-taker numbers.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error, 3 internal
//! consistency violation.

mod output;

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use ctn_core::{
    check_range, check_lemmas, classify, disambiguators, enumerate_triples, scan_range,
    scan_range_with_workers, sieve, sieved_scan_range_with_workers, verify_family,
    verify_sieve_soundness, Classification, SieveVerdict,
};
use output::{
    classification_table, family_member_table, sieve_grid, triple_table_text, CountRecord,
    FamilyRecord, OutputRecord, SieveRecord, TripleRecord,
};

#[derive(Parser)]
#[command(name = "ctn", version, about = "Census-taker numbers: classification, sieving, and the p^2(2p-1)^2 family")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether n is a census-taker number
    Classify {
        n: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// List every unordered triple with product n, with sums and collisions
    Triples {
        n: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Find all census-taker numbers in [from, to]
    Scan {
        from: u64,
        to: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Scan threads; 1 keeps the scan fully sequential
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=1024))]
        workers: u64,
    },
    /// Count the census-taker numbers with exactly the given digit count
    Count {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=18))]
        digits: u32,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Apply the elimination rules to every integer in [from, to]
    Sieve {
        from: u64,
        to: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Generate and verify the family members p^2(2p-1)^2 for p <= max-p
    Family {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..=40_000))]
        max_p: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Check the six sum-ordering inequalities at every admissible integer x
    Lemmas {
        #[arg(long, default_value_t = -1000, allow_negative_numbers = true,
              value_parser = clap::value_parser!(i64).range(-1_000_000_000..=1_000_000_000))]
        from: i64,
        #[arg(long, default_value_t = 1000, allow_negative_numbers = true,
              value_parser = clap::value_parser!(i64).range(-1_000_000_000..=1_000_000_000))]
        to: i64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Print the age puzzle a census-taker number generates, with the
    /// questions that settle it
    Puzzle { n: u64 },
    /// Time a full classification scan against a sieved scan over [1, hi]
    Bench {
        hi: u64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=1024))]
        workers: u64,
    },
    /// Run the consistency suites: sieve soundness, family, inequalities
    Verify {
        #[arg(long, default_value_t = 10_000)]
        hi: u64,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(2..=40_000))]
        max_p: u64,
    },
}

enum CliError {
    /// Invalid input value; exit 2.
    Domain(String),
    /// A mathematical guarantee failed to verify; exit 3.
    Inconsistency(String),
}

impl From<ctn_core::Error> for CliError {
    fn from(e: ctn_core::Error) -> CliError {
        CliError::Domain(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Inconsistency(msg)) => {
            eprintln!("internal consistency violation: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Classify { n, format } => cmd_classify(n, format),
        Command::Triples { n, format } => cmd_triples(n, format),
        Command::Scan { from, to, format, workers } => {
            cmd_scan(from, to, format, workers as usize)
        }
        Command::Count { digits, format } => cmd_count(digits, format),
        Command::Sieve { from, to, format } => cmd_sieve(from, to, format),
        Command::Family { max_p, format } => cmd_family(max_p, format),
        Command::Lemmas { from, to, format } => cmd_lemmas(from, to, format),
        Command::Puzzle { n } => cmd_puzzle(n),
        Command::Bench { hi, workers } => cmd_bench(hi, workers as usize),
        Command::Verify { hi, max_p } => cmd_verify(hi, max_p),
    }
}

fn print_records(found: &[Classification], format: Format) {
    match format {
        Format::Table => {
            for c in found {
                let [x, y] = c.pair().expect("scan yields CTNs");
                println!("{}  magic sum {}  {} / {}", c.n, c.magic_sum().unwrap(), x, y);
            }
        }
        Format::Json => {
            for c in found {
                println!("{}", OutputRecord::new(c).to_json());
            }
        }
        Format::Csv => {
            println!("{}", OutputRecord::CSV_HEADER);
            for c in found {
                println!("{}", OutputRecord::new(c).to_csv());
            }
        }
    }
}

fn cmd_classify(n: u64, format: Format) -> Result<(), CliError> {
    let c = classify(n)?;
    match format {
        Format::Table => print!("{}", classification_table(&c)),
        Format::Json => println!("{}", OutputRecord::new(&c).to_json()),
        Format::Csv => {
            println!("{}", OutputRecord::CSV_HEADER);
            println!("{}", OutputRecord::new(&c).to_csv());
        }
    }
    Ok(())
}

fn cmd_triples(n: u64, format: Format) -> Result<(), CliError> {
    let table = enumerate_triples(n)?;
    match format {
        Format::Table => print!("{}", triple_table_text(&table)),
        Format::Json => {
            for t in table.triples() {
                let record = TripleRecord { n, triple: t.entries(), sum: t.sum() };
                println!("{}", serde_json::to_string(&record).expect("record serializes"));
            }
        }
        Format::Csv => {
            println!("n,a,b,c,sum");
            for t in table.triples() {
                println!("{},{},{},{},{}", n, t.a(), t.b(), t.c(), t.sum());
            }
        }
    }
    Ok(())
}

fn cmd_scan(from: u64, to: u64, format: Format, workers: usize) -> Result<(), CliError> {
    let found = scan_range_with_workers(from, to, workers)?;
    print_records(&found, format);
    if format == Format::Table {
        println!("found {} census-taker numbers in [{from}, {to}]", found.len());
    }
    Ok(())
}

fn cmd_count(digits: u32, format: Format) -> Result<(), CliError> {
    let lo = 10u64.pow(digits - 1);
    let hi = 10u64.pow(digits) - 1;
    let found = scan_range(lo.max(1), hi)?;
    let record = CountRecord {
        digits,
        count: found.len(),
        largest: found.last().map(|c| c.n),
    };
    match format {
        Format::Table => match record.largest {
            Some(largest) => println!(
                "{} census-taker numbers with {} digits (largest {largest})",
                record.count, record.digits,
            ),
            None => println!("0 census-taker numbers with {} digits", record.digits),
        },
        Format::Json => println!("{}", serde_json::to_string(&record).expect("record serializes")),
        Format::Csv => {
            println!("digits,count,largest");
            println!(
                "{},{},{}",
                record.digits,
                record.count,
                record.largest.map(|l| l.to_string()).unwrap_or_default(),
            );
        }
    }
    Ok(())
}

fn cmd_sieve(from: u64, to: u64, format: Format) -> Result<(), CliError> {
    check_range(from, to)?;
    let verdicts: Vec<SieveVerdict> =
        (from..=to).map(|n| sieve(n).expect("n >= 1")).collect();
    match format {
        Format::Table => {
            print!("{}", sieve_grid(&verdicts));
            let survivors: Vec<String> = verdicts
                .iter()
                .filter(|v| v.survives())
                .map(|v| v.n.to_string())
                .collect();
            println!("survivors ({}): {}", survivors.len(), survivors.join(" "));
        }
        Format::Json => {
            for v in &verdicts {
                let record = SieveRecord::new(v);
                println!("{}", serde_json::to_string(&record).expect("record serializes"));
            }
        }
        Format::Csv => {
            println!("{}", SieveRecord::CSV_HEADER);
            for v in &verdicts {
                println!("{}", SieveRecord::new(v).to_csv());
            }
        }
    }
    Ok(())
}

fn cmd_family(max_p: u64, format: Format) -> Result<(), CliError> {
    let report = verify_family(max_p);
    let failed: HashSet<u64> = report.violations.iter().map(|v| v.p).collect();
    match format {
        Format::Table => {
            for m in &report.members {
                print!("{}", family_member_table(m, !failed.contains(&m.p)));
                println!();
            }
            println!(
                "{} family members with p <= {max_p}; {} verification failures",
                report.members.len(),
                report.violations.len(),
            );
        }
        Format::Json => {
            for m in &report.members {
                let record = FamilyRecord::new(m, !failed.contains(&m.p));
                println!("{}", serde_json::to_string(&record).expect("record serializes"));
            }
        }
        Format::Csv => {
            println!("p,q,n,magic_sum,verified");
            for m in &report.members {
                println!("{},{},{},{},{}", m.p, m.q, m.n, m.magic_sum, !failed.contains(&m.p));
            }
        }
    }
    if !report.ok() {
        for v in &report.violations {
            eprintln!("p = {}: {}", v.p, v.detail);
        }
        return Err(CliError::Inconsistency(format!(
            "{} family verification failures",
            report.violations.len(),
        )));
    }
    Ok(())
}

fn cmd_lemmas(from: i64, to: i64, format: Format) -> Result<(), CliError> {
    if from > to {
        return Err(CliError::Domain(format!("invalid range: {from} > {to}")));
    }
    let report = check_lemmas(from, to);
    let failed: HashSet<&str> = report.violations.iter().map(|v| v.label).collect();
    match format {
        Format::Table => {
            for check in ctn_core::inequality_checks() {
                let status = if failed.contains(check.label) { "FAILED" } else { "ok" };
                let witness = check.witness.map(|w| format!("witness {w}")).unwrap_or_default();
                println!(
                    "{:<36}  {:<24}  {:<26}  {status}",
                    check.label,
                    format!("({})", check.domain),
                    witness,
                );
            }
            println!(
                "checked {} (inequality, x) pairs for integer x in [{from}, {to}]: {} violations",
                report.points_checked,
                report.violations.len(),
            );
        }
        Format::Json => {
            for check in ctn_core::inequality_checks() {
                let record = serde_json::json!({
                    "label": check.label,
                    "domain": check.domain,
                    "witness": check.witness,
                    "ok": !failed.contains(check.label),
                });
                println!("{record}");
            }
        }
        Format::Csv => {
            println!("label,domain,witness,ok");
            for check in ctn_core::inequality_checks() {
                println!(
                    "\"{}\",\"{}\",\"{}\",{}",
                    check.label,
                    check.domain,
                    check.witness.unwrap_or(""),
                    !failed.contains(check.label),
                );
            }
        }
    }
    if !report.ok() {
        for v in &report.violations {
            eprintln!("x = {}: {} ({})", v.x, v.label, v.detail);
        }
        return Err(CliError::Inconsistency(format!(
            "{} inequality violations",
            report.violations.len(),
        )));
    }
    Ok(())
}

fn cmd_puzzle(n: u64) -> Result<(), CliError> {
    let d = disambiguators(n)?;
    let c = classify(n)?;
    let [x, y] = c.pair().expect("disambiguators succeeded");
    println!("Three children have ages with product {n}; the sum of the ages");
    println!("equals the house number next door.");
    println!();
    println!("house number (magic sum): {}", c.magic_sum().unwrap());
    println!("candidate triples: {x} / {y}");
    let describe = |works: bool, selects: Option<ctn_core::Triple>| match (works, selects) {
        (true, Some(t)) => format!("decisive -- an affirmative answer identifies {t}"),
        _ => "not decisive".to_string(),
    };
    println!(
        "  \"is there an oldest child?\"   {}",
        describe(d.oldest_works, d.oldest_selects),
    );
    println!(
        "  \"is there a youngest child?\"  {}",
        describe(d.youngest_works, d.youngest_selects),
    );
    Ok(())
}

fn cmd_bench(hi: u64, workers: usize) -> Result<(), CliError> {
    let started = Instant::now();
    let full = scan_range_with_workers(1, hi, workers)?;
    let full_time = started.elapsed();

    let started = Instant::now();
    let sieved = sieved_scan_range_with_workers(1, hi, workers)?;
    let sieved_time = started.elapsed();

    if full != sieved {
        return Err(CliError::Inconsistency(
            "full and sieved scans disagree on the CTN set".to_string(),
        ));
    }

    println!("range [1, {hi}], workers {workers}");
    println!("full classification: {} CTNs in {:?}", full.len(), full_time);
    println!("sieve then classify: {} CTNs in {:?}", sieved.len(), sieved_time);
    println!(
        "speedup: {:.2}x",
        full_time.as_secs_f64() / sieved_time.as_secs_f64().max(f64::EPSILON),
    );
    println!("CTN sets identical: yes");
    let ns: Vec<String> = full.iter().map(|c| c.n.to_string()).collect();
    println!("CTNs: {}", ns.join(" "));
    Ok(())
}

fn cmd_verify(hi: u64, max_p: u64) -> Result<(), CliError> {
    let mut failures = Vec::new();

    let soundness = verify_sieve_soundness(hi);
    println!(
        "sieve soundness on [1, {hi}]: {} CTNs, {} survivors, {} wrongly eliminated ... {}",
        soundness.ctns.len(),
        soundness.survivor_count,
        soundness.violations.len(),
        if soundness.ok() { "ok" } else { "FAILED" },
    );
    if !soundness.ok() {
        failures.push(format!("sieve eliminates CTNs: {:?}", soundness.violations));
    }

    let family = verify_family(max_p);
    println!(
        "family members with p <= {max_p}: {} verified, {} violations ... {}",
        family.members.len(),
        family.violations.len(),
        if family.ok() { "ok" } else { "FAILED" },
    );
    for v in &family.violations {
        failures.push(format!("family p = {}: {}", v.p, v.detail));
    }

    let lemmas = check_lemmas(-1000, 1000);
    println!(
        "inequalities at integer x in [-1000, 1000]: {} checks, {} violations ... {}",
        lemmas.points_checked,
        lemmas.violations.len(),
        if lemmas.ok() { "ok" } else { "FAILED" },
    );
    for v in &lemmas.violations {
        failures.push(format!("inequality {} at x = {}: {}", v.label, v.x, v.detail));
    }

    if failures.is_empty() {
        println!("all verifications passed");
        Ok(())
    } else {
        for f in &failures {
            eprintln!("{f}");
        }
        Err(CliError::Inconsistency(format!("{} verification failures", failures.len())))
    }
}
