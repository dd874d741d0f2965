//! `superperm`: build, verify, enumerate and search superpermutations.

use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use superperm_core::math::factorial;
use superperm_core::search::{conjectured_length, trivial_lower_bound};
use superperm_core::verifier::verify_streaming;
use superperm_core::{
    build_m_with_cap, multiplicity_profile, search_minimal, segment_table, symbol_stats, verify, CircShiftRep,
    Error, Family, Perm, PermRank, SymbolString, TextEncoding, VerifyReport, DEFAULT_BUILD_CAP, MAX_N,
};

const EXIT_FALSE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_LIMIT: u8 = 3;

#[derive(Parser)]
#[command(name = "superperm", version, about = "Construct, enumerate, verify and search superpermutations")]
struct Cli {
    /// Output style: human-readable text or single-line key=value reports
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Report,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical superpermutation M_n
    Build {
        #[arg(short)]
        n: usize,
        /// Allow n above the default memory guard of 12
        #[arg(long)]
        allow_large: bool,
    },
    /// Check whether strings are superpermutations (exit 0 iff all are)
    Verify(InputArgs),
    /// Symbol tallies, palindrome check and permutation multiplicities
    Stats(InputArgs),
    /// Count, index, enumerate or sample the relabeling family
    #[command(subcommand)]
    Family(FamilyCommand),
    /// Print segment T_{j,k} of M_n with its character offsets
    Segment {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        k: usize,
        #[arg(short)]
        j: usize,
    },
    /// Exact minimal superpermutation search (2 <= n <= 4)
    Search {
        #[arg(short)]
        n: usize,
        /// Maximum number of search nodes
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Convert a permutation between encodings
    Codec(CodecArgs),
}

#[derive(Args)]
struct InputArgs {
    #[arg(short)]
    n: usize,
    /// Read one string per line from a file
    #[arg(long, conflicts_with = "string")]
    file: Option<PathBuf>,
    /// String in digit (n <= 9) or comma-separated form
    string: Option<String>,
    /// Hash-based verification for n > 12
    #[arg(long)]
    streaming: bool,
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// Exact number of family members
    Count {
        #[arg(short)]
        n: usize,
    },
    /// One member by decimal index
    Get {
        #[arg(short)]
        n: usize,
        #[arg(long)]
        index: BigUint,
    },
    /// Members in index order, one per line
    Enumerate {
        #[arg(short)]
        n: usize,
        /// Half-open index range A..B (default: the whole family)
        #[arg(long, value_parser = parse_range)]
        range: Option<(BigUint, BigUint)>,
    },
    /// Distinct members drawn uniformly with a fixed seed
    Sample {
        #[arg(short)]
        n: usize,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct CodecInput {
    /// One-line form, e.g. 42351
    #[arg(long)]
    oneline: Option<String>,
    /// Circular-shift exponents j_2..j_n, digits or comma-separated
    #[arg(long)]
    circ: Option<String>,
    /// Position in circular-shift counting order
    #[arg(long)]
    rank: Option<u64>,
    /// Lexicographic rank
    #[arg(long)]
    lehmer: Option<u64>,
}

#[derive(Args)]
struct CodecArgs {
    #[arg(short)]
    n: usize,
    #[command(flatten)]
    input: CodecInput,
}

fn parse_range(s: &str) -> Result<(BigUint, BigUint), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected A..B, got {s:?}"))?;
    let a = a.parse().map_err(|_| format!("bad range start {a:?}"))?;
    let b = b.parse().map_err(|_| format!("bad range end {b:?}"))?;
    Ok((a, b))
}

enum Failure {
    Usage(String),
    Limit(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExhausted { .. } | Error::AlphabetSize { .. } | Error::SearchLimit { .. } => Failure::Limit(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type CmdResult = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(&cli, &mut out).and_then(|ok| {
        out.flush()?;
        Ok(ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FALSE),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Limit(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_LIMIT)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: &Cli, out: &mut impl Write) -> CmdResult {
    let fmt = cli.format;
    match &cli.command {
        Command::Build { n, allow_large } => {
            let cap = if *allow_large { MAX_N } else { DEFAULT_BUILD_CAP };
            let m = build_m_with_cap(*n, cap)?;
            let text = TextEncoding::for_alphabet(*n).encode(&m);
            match fmt {
                Format::Text => writeln!(out, "{text}")?,
                Format::Report => writeln!(out, "n={n} length={} string={text}", m.len())?,
            }
            Ok(true)
        }
        Command::Verify(input) => cmd_verify(input, fmt, out),
        Command::Stats(input) => cmd_stats(input, fmt, out),
        Command::Family(sub) => cmd_family(sub, fmt, out),
        Command::Segment { n, k, j } => {
            if *k < 2 || *k >= *n {
                return Err(Failure::Usage(format!("k must satisfy 2 <= k < n, got k = {k}")));
            }
            let t = segment_table(*n)?;
            let r = t
                .range(*k, *j)
                .ok_or_else(|| Failure::Usage(format!("j must be below {}! = {}", k, factorial(*k))))?;
            let m = superperm_core::build_m(*n)?;
            let text = TextEncoding::for_alphabet(*n).encode(&m.slice(r.clone())?);
            match fmt {
                Format::Text => writeln!(out, "[{}, {})\n{text}", r.start, r.end)?,
                Format::Report => {
                    writeln!(out, "n={n} k={k} j={j} start={} end={} length={} string={text}", r.start, r.end, r.len())?
                }
            }
            Ok(true)
        }
        Command::Search { n, budget } => {
            let r = search_minimal(*n, *budget)?;
            let enc = TextEncoding::for_alphabet(*n);
            match fmt {
                Format::Text => {
                    writeln!(out, "minimal length: {}", r.minimal_length)?;
                    writeln!(out, "trivial lower bound: {}", trivial_lower_bound(*n))?;
                    writeln!(out, "conjectured length: {}", conjectured_length(*n))?;
                    writeln!(out, "witnesses: {}", r.witnesses.len())?;
                    for w in &r.witnesses {
                        writeln!(out, "  {}", enc.encode(w))?;
                    }
                    writeln!(out, "nodes explored: {}", r.node_count_explored)?;
                }
                Format::Report => {
                    let ws: Vec<String> = r.witnesses.iter().map(|w| enc.encode(w)).collect();
                    writeln!(
                        out,
                        "n={n} minimal_length={} witnesses={} nodes={} witness_strings={}",
                        r.minimal_length,
                        r.witnesses.len(),
                        r.node_count_explored,
                        ws.join(";")
                    )?
                }
            }
            Ok(true)
        }
        Command::Codec(args) => cmd_codec(args, fmt, out),
    }
}

fn read_inputs(input: &InputArgs) -> Result<Vec<SymbolString>, Failure> {
    let enc = TextEncoding::for_alphabet(input.n);
    let decode = |line: &str, where_: String| {
        enc.decode(line).map_err(|e| Failure::Usage(format!("{where_}: {e}")))
    };
    match (&input.file, &input.string) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            text.lines()
                .enumerate()
                .filter(|(_, l)| !l.trim().is_empty())
                .map(|(i, l)| decode(l, format!("{}:{}", path.display(), i + 1)))
                .collect()
        }
        (None, Some(s)) => Ok(vec![decode(s, "argument".into())?]),
        (None, None) => Err(Failure::Usage("give a string argument or --file".into())),
    }
}

fn verify_one(s: &SymbolString, streaming: bool) -> Result<VerifyReport, Failure> {
    Ok(if streaming { verify_streaming(s) } else { verify(s)? })
}

fn cmd_verify(input: &InputArgs, fmt: Format, out: &mut impl Write) -> CmdResult {
    let mut all = true;
    for s in read_inputs(input)? {
        let r = verify_one(&s, input.streaming)?;
        all &= r.is_superpermutation;
        match fmt {
            Format::Report => writeln!(out, "{}", r.to_kv_line())?,
            Format::Text => {
                writeln!(out, "superpermutation: {}", r.is_superpermutation)?;
                writeln!(out, "n: {}", r.n)?;
                writeln!(out, "length: {}", r.length)?;
                writeln!(out, "distinct permutations: {} of {}", r.distinct_perms, factorial(r.n))?;
                writeln!(out, "missing: {}", r.missing)?;
                writeln!(out, "permutation windows: {}", r.occurrence_total)?;
                writeln!(out, "max multiplicity: {}", r.multiplicity_max)?;
            }
        }
    }
    Ok(all)
}

fn cmd_stats(input: &InputArgs, fmt: Format, out: &mut impl Write) -> CmdResult {
    let n = input.n;
    for s in read_inputs(input)? {
        let st = symbol_stats(&s);
        let r = verify_one(&s, input.streaming)?;
        let expected_top = if n >= 1 { factorial(n - 1) } else { 0 };
        match fmt {
            Format::Report => writeln!(
                out,
                "{} top_symbol_count={} expected_top_symbol_count={expected_top}",
                r.to_kv_line(),
                st.count(n)
            )?,
            Format::Text => {
                writeln!(out, "length: {}", s.len())?;
                writeln!(out, "palindrome: {}", st.is_palindrome)?;
                for (i, c) in st.counts.iter().enumerate() {
                    writeln!(out, "symbol {}: {c}", i + 1)?;
                }
                writeln!(out, "symbol {n} count equals ({n}-1)! = {expected_top}: {}", st.count(n) == expected_top)?;
                let profile = multiplicity_profile(&s);
                let repeated = profile.values().filter(|&&c| c > 1).count();
                writeln!(out, "distinct permutations: {}", profile.len())?;
                writeln!(out, "repeated permutations: {repeated}")?;
            }
        }
    }
    Ok(true)
}

fn cmd_family(sub: &FamilyCommand, fmt: Format, out: &mut impl Write) -> CmdResult {
    match sub {
        FamilyCommand::Count { n } => {
            let c = superperm_core::count_family(*n)?;
            match fmt {
                Format::Text => writeln!(out, "{c}")?,
                Format::Report => writeln!(out, "n={n} count={c}")?,
            }
        }
        FamilyCommand::Get { n, index } => {
            let f = Family::new(*n)?;
            let s = f.get(index)?;
            write_member(out, fmt, index, &s)?;
        }
        FamilyCommand::Enumerate { n, range } => {
            let f = Family::new(*n)?;
            let (start, end) = range.clone().unwrap_or_else(|| (BigUint::default(), f.count().clone()));
            let mut index = start.clone();
            for s in f.enumerate(start..end)? {
                write_member(out, fmt, &index, &s?)?;
                index += 1u32;
            }
        }
        FamilyCommand::Sample { n, count, seed } => {
            let f = Family::new(*n)?;
            for (index, s) in f.sample(*count, *seed)? {
                write_member(out, fmt, &index, &s)?;
            }
        }
    }
    Ok(true)
}

fn write_member(out: &mut impl Write, fmt: Format, index: &BigUint, s: &SymbolString) -> io::Result<()> {
    let text = TextEncoding::for_alphabet(s.n()).encode(s);
    match fmt {
        Format::Text => writeln!(out, "{text}"),
        Format::Report => writeln!(out, "index={index} string={text}"),
    }
}

fn parse_exponents(n: usize, s: &str) -> Result<CircShiftRep, Failure> {
    let body = s.trim().trim_start_matches('[').trim_end_matches("]_c").trim_end_matches(']');
    let digits: Option<Vec<u8>> = if body.contains(',') {
        body.split(',').map(|t| t.trim().parse().ok()).collect()
    } else {
        body.chars().map(|c| c.to_digit(10).map(|d| d as u8)).collect()
    };
    let digits = digits.ok_or_else(|| Failure::Usage(format!("malformed exponents {s:?}")))?;
    Ok(CircShiftRep::new(n, digits)?)
}

fn cmd_codec(args: &CodecArgs, fmt: Format, out: &mut impl Write) -> CmdResult {
    let n = args.n;
    let inp = &args.input;
    let perm = if let Some(s) = &inp.oneline {
        let p: Perm = s.parse()?;
        if p.n() != n {
            return Err(Failure::Usage(format!("{s} is not a permutation of 1..={n}")));
        }
        p
    } else if let Some(s) = &inp.circ {
        parse_exponents(n, s)?.to_oneline()
    } else if let Some(r) = inp.rank {
        CircShiftRep::from_rank(PermRank::new(n, r)?).to_oneline()
    } else if let Some(r) = inp.lehmer {
        Perm::lehmer_unrank(n, r)?
    } else {
        unreachable!("clap enforces one input")
    };
    let rep = CircShiftRep::from_oneline(&perm);
    match fmt {
        Format::Text => {
            writeln!(out, "one-line: {perm}")?;
            writeln!(out, "circular shift: {rep}")?;
            writeln!(out, "shift rank: {}", rep.rank().value())?;
            writeln!(out, "lexicographic rank: {}", perm.lehmer_rank())?;
        }
        Format::Report => {
            let e: Vec<String> = rep.exponents().iter().map(u8::to_string).collect();
            writeln!(
                out,
                "n={n} oneline={perm} circ={} shift_rank={} lehmer_rank={}",
                e.join(","),
                rep.rank().value(),
                perm.lehmer_rank()
            )?
        }
    }
    Ok(true)
}
