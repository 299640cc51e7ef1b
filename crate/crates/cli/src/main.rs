use std::process::ExitCode;

use bwdb::cycle::generate;
use bwdb::necklace::list_necklaces;
use bwdb::string::render_symbols;
use bwdb::subset::{diff_to_multiset, diff_to_subset, multiset_to_diff, subset_to_diff};
use bwdb::{
    count, selftest, BigCount, Decoder, Error, KString, Multiset, MultisetDecoder, Params, Subset,
    SubsetDecoder, Symbol,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

/// Construct and decode bounded-weight de Bruijn sequences.
#[derive(Debug, Parser)]
#[command(name = "bwdb", version)]
struct Cli {
    /// Output format; defaults to plain digits for k <= 9 and dotted otherwise.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Digits,
    Dotted,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the cycle.
    Generate(Shape),
    /// Print the 1-based position of a string in the cycle.
    Rank {
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        string: String,
    },
    /// Print the window starting at a position of the cycle.
    Unrank {
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        rank: String,
    },
    /// List the necklaces whose aperiodic prefixes make up the cycle
    /// (complemented when an upper bound is given).
    Necklaces(Shape),
    /// Universal cycle for t-subsets of {1..n}.
    Subset(SetArgs),
    /// Universal cycle for t-multisets of {0..n-1}.
    Multiset(SetArgs),
    /// Cross-check the decoder against brute force on a parameter grid.
    Selftest {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        max_k: u32,
    },
}

#[derive(Debug, Args)]
struct Shape {
    /// String length.
    #[arg(long)]
    n: usize,
    /// Alphabet size; symbols are 1..=k.
    #[arg(long)]
    k: u32,
    /// Admit strings with weight at least this value.
    #[arg(long, conflicts_with = "wmax", allow_negative_numbers = true)]
    wmin: Option<i64>,
    /// Admit strings with weight at most this value.
    #[arg(long, allow_negative_numbers = true)]
    wmax: Option<i64>,
}

impl Shape {
    fn params(&self) -> bwdb::Result<Params> {
        match (self.wmin, self.wmax) {
            (_, Some(w)) => Params::down(self.n, self.k, w),
            (Some(w), None) => Params::up(self.n, self.k, w),
            (None, None) => Params::unconstrained(self.n, self.k),
        }
    }
}

#[derive(Debug, Args)]
struct SetArgs {
    #[arg(value_enum)]
    verb: Verb,
    /// Size of the ground set.
    #[arg(long)]
    n: u32,
    /// Number of elements per set.
    #[arg(long)]
    t: usize,
    /// A set such as "3,4,5" (rank, encode) or a difference string (decode).
    #[arg(long, visible_alias = "set")]
    string: Option<String>,
    #[arg(long)]
    rank: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Verb {
    Rank,
    Unrank,
    Encode,
    Decode,
}

enum Failure {
    Usage(String),
    Constraint(String),
    Selftest(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Constraint(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Constraint(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Selftest(out)) => {
            println!("{out}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Generate(shape) => {
            let params = shape.params()?;
            let cycle: Vec<Symbol> = generate(&params).collect();
            Ok(match cli.format {
                Some(Format::Json) => json!({
                    "n": params.n(),
                    "k": params.k(),
                    "length": cycle.len(),
                    "sequence": cycle,
                })
                .to_string(),
                _ => render(&cycle, params.k(), cli.format)?,
            })
        }
        Command::Rank { shape, string } => {
            let params = shape.params()?;
            let s = KString::parse(string, params.k())?;
            let r = Decoder::new(params)?.rank(&s)?;
            Ok(match cli.format {
                Some(Format::Json) => json!({ "string": s.symbols(), "rank": r.to_string() }).to_string(),
                _ => r.to_string(),
            })
        }
        Command::Unrank { shape, rank } => {
            let params = shape.params()?;
            let r: BigCount = count::parse(rank)?;
            let s = Decoder::new(params)?.unrank(&r)?;
            Ok(match cli.format {
                Some(Format::Json) => json!({ "rank": r.to_string(), "string": s.symbols() }).to_string(),
                _ => render(s.symbols(), params.k(), cli.format)?,
            })
        }
        Command::Necklaces(shape) => {
            let params = shape.params()?;
            let flip = params.direction() == bwdb::Direction::Down;
            let list: Vec<KString> = list_necklaces(&params)
                .into_iter()
                .map(|x| if flip { x.complement() } else { x.into_kstring() })
                .collect();
            Ok(match cli.format {
                Some(Format::Json) => {
                    let rows: Vec<_> = list.iter().map(|x| x.symbols()).collect();
                    json!({ "necklaces": rows }).to_string()
                }
                _ => list
                    .iter()
                    .map(|x| render(x.symbols(), params.k(), cli.format))
                    .collect::<Result<Vec<_>, _>>()?
                    .join("\n"),
            })
        }
        Command::Subset(args) => run_subset(args, cli.format),
        Command::Multiset(args) => run_multiset(args, cli.format),
        Command::Selftest { max_n, max_k } => {
            let report = selftest::run_grid(*max_n, 2..=*max_k);
            let mut lines: Vec<String> = report
                .cells
                .iter()
                .filter(|c| !c.passed())
                .map(|c| format!("FAIL {}: {}", c.params, c.failures.join("; ")))
                .collect();
            lines.push(format!(
                "selftest n <= {max_n} k in 2..={max_k}: {} passed, {} failed",
                report.passed(),
                report.failed()
            ));
            let out = lines.join("\n");
            if report.failed() == 0 {
                Ok(out)
            } else {
                Err(Failure::Selftest(out))
            }
        }
    }
}

fn render(symbols: &[Symbol], k: u32, format: Option<Format>) -> Result<String, Failure> {
    match format {
        Some(Format::Digits) if k > 9 => Err(Failure::Usage(format!(
            "digits format needs k <= 9, got k={k}"
        ))),
        Some(Format::Digits) => Ok(render_symbols(symbols, 9)),
        Some(Format::Dotted) => Ok(symbols
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(".")),
        _ => Ok(render_symbols(symbols, k)),
    }
}

fn need<'a>(value: &'a Option<String>, flag: &str) -> Result<&'a str, Failure> {
    value
        .as_deref()
        .ok_or_else(|| Failure::Usage(format!("this verb needs --{flag}")))
}

fn set_json(rank: Option<&BigCount>, elements: &[u32], diff: &KString) -> String {
    let mut v = json!({ "set": elements, "diff": diff.symbols() });
    if let Some(r) = rank {
        v["rank"] = json!(r.to_string());
    }
    v.to_string()
}

fn run_subset(args: &SetArgs, format: Option<Format>) -> Result<String, Failure> {
    let json = format == Some(Format::Json);
    let (n, t) = (args.n, args.t);
    match args.verb {
        Verb::Rank => {
            let s = Subset::parse(need(&args.string, "string")?, n)?;
            let r = SubsetDecoder::new(n, t)?.rank(&s)?;
            Ok(if json {
                set_json(Some(&r), s.elements(), &subset_to_diff(&s))
            } else {
                r.to_string()
            })
        }
        Verb::Unrank => {
            let r: BigCount = count::parse(need(&args.rank, "rank")?)?;
            let s = SubsetDecoder::new(n, t)?.unrank(&r)?;
            Ok(if json {
                set_json(Some(&r), s.elements(), &subset_to_diff(&s))
            } else {
                s.to_string()
            })
        }
        Verb::Encode => {
            let s = Subset::parse(need(&args.string, "string")?, n)?;
            if s.t() != t {
                return Err(Failure::Constraint(format!("{s} does not have {t} elements")));
            }
            let d = subset_to_diff(&s);
            Ok(if json {
                set_json(None, s.elements(), &d)
            } else {
                render(d.symbols(), d.k(), format)?
            })
        }
        Verb::Decode => {
            let k = n.saturating_sub(t as u32) + 1;
            let d = KString::parse(need(&args.string, "string")?, k)?;
            if d.len() != t {
                return Err(Error::LengthMismatch { expected: t, found: d.len() }.into());
            }
            let s = diff_to_subset(&d, n)?;
            Ok(if json {
                set_json(None, s.elements(), &d)
            } else {
                s.to_string()
            })
        }
    }
}

fn run_multiset(args: &SetArgs, format: Option<Format>) -> Result<String, Failure> {
    let json = format == Some(Format::Json);
    let (n, t) = (args.n, args.t);
    match args.verb {
        Verb::Rank => {
            let m = Multiset::parse(need(&args.string, "string")?, n)?;
            let r = MultisetDecoder::new(n, t)?.rank(&m)?;
            Ok(if json {
                set_json(Some(&r), m.elements(), &multiset_to_diff(&m))
            } else {
                r.to_string()
            })
        }
        Verb::Unrank => {
            let r: BigCount = count::parse(need(&args.rank, "rank")?)?;
            let m = MultisetDecoder::new(n, t)?.unrank(&r)?;
            Ok(if json {
                set_json(Some(&r), m.elements(), &multiset_to_diff(&m))
            } else {
                m.to_string()
            })
        }
        Verb::Encode => {
            let m = Multiset::parse(need(&args.string, "string")?, n)?;
            if m.t() != t {
                return Err(Failure::Constraint(format!("{m} does not have {t} elements")));
            }
            let d = multiset_to_diff(&m);
            Ok(if json {
                set_json(None, m.elements(), &d)
            } else {
                render(d.symbols(), d.k(), format)?
            })
        }
        Verb::Decode => {
            let d = KString::parse(need(&args.string, "string")?, n)?;
            if d.len() != t {
                return Err(Error::LengthMismatch { expected: t, found: d.len() }.into());
            }
            let m = diff_to_multiset(&d, n)?;
            Ok(if json {
                set_json(None, m.elements(), &d)
            } else {
                m.to_string()
            })
        }
    }
}
