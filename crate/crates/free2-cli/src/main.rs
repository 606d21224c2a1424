//! `free2`: word calculus in the rank-2 free group and a knot-family
//! classifier. Every subcommand wraps one library operation; output is
//! deterministic so runs can be diffed byte for byte.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use free2::aut::{is_primitive, multiplicity, orbit_equivalent};
use free2::classify::{classify_point, survey, ClassificationReport, CSV_HEADER};
use free2::conjugacy::equiv;
use free2::family::{generate_with_cap, FamilyId, ParamTriple};
use free2::{Word, DEFAULT_LENGTH_CAP};

/// Largest accepted search window; larger requests are clamped with a
/// warning (lift words grow linearly in the window, searches do too).
const MAX_WINDOW: u32 = 16;

#[derive(Parser)]
#[command(
    name = "free2",
    version,
    about = "Word calculus in the free group of rank two, with a knot-family classifier",
    after_help = "Word expressions use atoms x, y, X (= x^-1), Y (= y^-1); \
`^` raises an atom or parenthesized group to a signed integer power; `1` is \
the empty word. Example: \"x^2 (x y)^-3 Y\". The environment variable \
FREE2_LENGTH_CAP overrides the default expansion cap of one million letters."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a word expression and print its normal forms
    Word { expr: String },
    /// Report whether a word is primitive, a proper power, or neither
    ClassifyWord { expr: String },
    /// Decide conjugacy up to inversion between two words
    Equiv { left: String, right: String },
    /// Decide automorphism-orbit equivalence and print a witness
    Orbit { left: String, right: String },
    /// Expand one word-family template at integer parameters
    Kpq {
        /// Family tag: c0p, c0pp, c1p, c1pp, l0, l1, d2, m0, m1, or dp
        #[arg(value_parser = parse_family)]
        family: FamilyId,
        /// Lift index (families m0, m1, dp take none)
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
    },
    /// Classify a single parameter point and print its JSON report
    Point {
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
        /// Bound on lift indexes searched (at most 16)
        #[arg(long, default_value_t = 6)]
        window: u32,
    },
    /// Classify an inclusive parameter grid
    Survey {
        /// Inclusive p range, written a:b
        #[arg(long = "p-range", value_parser = parse_range, allow_hyphen_values = true)]
        p_range: (i64, i64),
        /// Inclusive q range, written c:d
        #[arg(long = "q-range", value_parser = parse_range, allow_hyphen_values = true)]
        q_range: (i64, i64),
        /// Bound on lift indexes searched (at most 16)
        #[arg(long, default_value_t = 6)]
        window: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// One JSON object per grid point, one per line
    Json,
    /// Flat rows under a fixed header
    Csv,
}

fn parse_family(text: &str) -> Result<FamilyId, String> {
    FamilyId::from_tag(text).ok_or_else(|| {
        format!(
            "unknown family (expected one of {})",
            FamilyId::ALL.map(|f| f.tag()).join(", ")
        )
    })
}

fn parse_range(text: &str) -> Result<(i64, i64), String> {
    let (a, b) = text
        .split_once(':')
        .ok_or_else(|| "expected an inclusive range written a:b".to_string())?;
    let lo = a.trim().parse::<i64>().map_err(|e| format!("bad range start: {e}"))?;
    let hi = b.trim().parse::<i64>().map_err(|e| format!("bad range end: {e}"))?;
    Ok((lo, hi))
}

fn length_cap() -> usize {
    match std::env::var("FREE2_LENGTH_CAP") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(cap) if cap > 0 => cap,
            _ => {
                eprintln!("warning: ignoring unusable FREE2_LENGTH_CAP value {v:?}");
                DEFAULT_LENGTH_CAP
            }
        },
        Err(_) => DEFAULT_LENGTH_CAP,
    }
}

fn clamp_window(window: u32) -> u32 {
    if window > MAX_WINDOW {
        eprintln!(
            "warning: window {window} clamped to {MAX_WINDOW}; generated words and search \
             time grow with the window"
        );
        MAX_WINDOW
    } else {
        window
    }
}

fn parse_word(text: &str) -> free2::Result<Word> {
    Word::parse_with_cap(text, length_cap())
}

fn run(command: Command) -> free2::Result<()> {
    match command {
        Command::Word { expr } => {
            let w = parse_word(&expr)?;
            let core = w.cyclic_core();
            println!("reduced: {} (length {})", w.compact(), w.len());
            println!("cyclic: {} (length {})", core.representative().compact(), core.len());
            let sums = w.exponent_sums();
            println!("exponent sums: x {}, y {}", sums.x, sums.y);
        }
        Command::ClassifyWord { expr } => {
            let w = parse_word(&expr)?;
            if w.cyclic_core().is_empty() {
                println!("empty word");
            } else if is_primitive(&w) {
                println!("primitive");
            } else {
                let m = multiplicity(&w)?;
                if m.exponent >= 2 {
                    println!(
                        "power: root ({}), exponent {}, root {}",
                        m.root.representative().compact(),
                        m.exponent,
                        if m.root_is_primitive { "primitive" } else { "not primitive" }
                    );
                } else {
                    println!("neither primitive nor a proper power");
                }
            }
        }
        Command::Equiv { left, right } => {
            let verdict = equiv(&parse_word(&left)?, &parse_word(&right)?);
            println!("{}", if verdict { "equivalent" } else { "not equivalent" });
        }
        Command::Orbit { left, right } => {
            let a = parse_word(&left)?.cyclic_core();
            let b = parse_word(&right)?.cyclic_core();
            match orbit_equivalent(&a, &b) {
                Some(phi) => {
                    let fact = phi.factorization_string();
                    println!(
                        "equivalent via {}",
                        if fact.is_empty() { "identity" } else { &fact }
                    );
                }
                None => println!("not equivalent"),
            }
        }
        Command::Kpq { family, n, p, q } => {
            let w = generate_with_cap(family, ParamTriple::new(n, p, q), length_cap())?;
            println!("{}", w.compact());
        }
        Command::Point { p, q, window } => {
            let report = classify_point(p, q, clamp_window(window))?;
            println!("{}", encode(&report));
        }
        Command::Survey { p_range, q_range, window, format } => {
            let rows = survey(p_range, q_range, clamp_window(window))?;
            if format == Format::Csv {
                println!("{CSV_HEADER}");
            }
            for row in &rows {
                match format {
                    Format::Json => println!("{}", encode(row)),
                    Format::Csv => println!("{}", row.csv_row()),
                }
            }
        }
    }
    Ok(())
}

fn encode(report: &ClassificationReport) -> String {
    serde_json::to_string(report).expect("report serialization is infallible")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
